//! Multivariable Laurent polynomials over the integers.
//!
//! A [`LaurentPoly`] carries its variable names. Units of the ring are the
//! signed monomials `±x^a`, and [`LaurentPoly::normal_form`] picks one
//! representative per unit class: every variable has minimal exponent 0 and
//! the leading coefficient in graded-lexicographic order is positive.

mod matrix;
mod parse;
mod poly;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use matrix::LaurentMatrix;
use poly::Poly;

use crate::{Error, Result};

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

pub fn vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A unit `±x^a` of the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    negative: bool,
    exps: Vec<i32>,
}

impl SignedMonomial {
    pub fn new(sign: i64, exps: Vec<i32>) -> Result<Self> {
        match sign {
            1 => Ok(Self { negative: false, exps }),
            -1 => Ok(Self { negative: true, exps }),
            _ => Err(Error::NonMonomialImage),
        }
    }

    pub fn positive(exps: Vec<i32>) -> Self {
        Self { negative: false, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self::positive(vec![0; nvars])
    }

    /// Converts a polynomial that is a unit into a monomial.
    pub fn from_poly(p: &LaurentPoly) -> Result<Self> {
        let mut terms = p.poly.terms().iter();
        match (terms.next(), terms.next()) {
            (Some((e, c)), None) if c.abs().is_one() => Ok(Self {
                negative: c.is_negative(),
                exps: e.clone(),
            }),
            _ => Err(Error::NonMonomialImage),
        }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            negative: self.negative != other.negative,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        Self {
            negative: self.negative && k % 2 != 0,
            exps: self.exps.iter().map(|&e| e * k as i32).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    pub fn to_poly(&self, vars: &Vars) -> LaurentPoly {
        let c = BigInt::from(self.sign());
        LaurentPoly::monomial(vars, c, &self.exps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    poly: Poly,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        Self {
            poly: Poly::zero(vars.len()),
            vars: vars.clone(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self {
            poly: Poly::constant(vars.len(), c.into()),
            vars: vars.clone(),
        }
    }

    /// `coef · x^exps`. Panics if `exps` has the wrong length.
    pub fn monomial(vars: &Vars, coef: impl Into<BigInt>, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        Self {
            poly: Poly::monomial(coef.into(), exps.to_vec()),
            vars: vars.clone(),
        }
    }

    /// The `i`-th variable.
    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, 1, &e)
    }

    pub fn from_terms<I, C>(vars: &Vars, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut poly = Poly::zero(vars.len());
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::WrongVariableCount {
                    expected: vars.len(),
                    found: e.len(),
                });
            }
            poly.add_term(e, c.into());
        }
        Ok(Self {
            vars: vars.clone(),
            poly,
        })
    }

    fn with_poly(&self, poly: Poly) -> Self {
        Self {
            vars: self.vars.clone(),
            poly,
        }
    }

    /// Parses the text form, see the crate-level README for the grammar.
    pub fn parse(text: &str, vars: &Vars) -> Result<Self> {
        parse::parse(text, vars)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.poly.terms().iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.poly.terms().len()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.poly.terms().get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        SignedMonomial::from_poly(self).is_ok()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        self.check_vars(other)?;
        let poly = match op {
            ArithOp::Add => self.poly.add(&other.poly),
            ArithOp::Sub => self.poly.sub(&other.poly),
            ArithOp::Mul => self.poly.mul(&other.poly),
        };
        Ok(self.with_poly(poly))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        self.with_poly(self.poly.scale(k))
    }

    pub fn mul_monomial(&self, m: &SignedMonomial) -> Self {
        let p = self.poly.shift(m.exps());
        self.with_poly(if m.negative { p.neg() } else { p })
    }

    pub fn pow(&self, k: u32) -> Self {
        self.with_poly(self.poly.pow(k))
    }

    pub fn min_exponents(&self) -> Vec<i32> {
        self.poly.min_exponents()
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        self.poly.max_exponents()
    }

    /// Graded-lexicographic comparison of exponent vectors.
    fn grlex(a: &[i32], b: &[i32]) -> Ordering {
        let da: i64 = a.iter().map(|&x| x as i64).sum();
        let db: i64 = b.iter().map(|&x| x as i64).sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    }

    /// Terms sorted from the graded-lex largest down.
    pub fn terms_grlex_desc(&self) -> Vec<(&[i32], &BigInt)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|a, b| Self::grlex(b.0, a.0));
        t
    }

    /// Unit-class representative: minimal exponent 0 in every variable and a
    /// positive graded-lex leading coefficient. Zero maps to zero.
    pub fn normal_form(&self) -> Self {
        let (p, _) = self.poly.strip_monomial();
        let out = self.with_poly(p);
        let negative = out
            .terms()
            .max_by(|a, b| Self::grlex(a.0, b.0))
            .is_some_and(|(_, c)| c.is_negative());
        if negative {
            -&out
        } else {
            out
        }
    }

    /// The unit `u` with `self = u · other`, if one exists.
    pub fn unit_ratio(&self, other: &Self) -> Option<SignedMonomial> {
        if self.check_vars(other).is_err() || self.num_terms() != other.num_terms() {
            return None;
        }
        if self.is_zero() {
            return other.is_zero().then(|| SignedMonomial::one(self.nvars()));
        }
        let (ea, ca) = self.poly.leading()?;
        let (eb, cb) = other.poly.leading()?;
        let sign = if ca == cb {
            1
        } else if *ca == -cb {
            -1
        } else {
            return None;
        };
        let exps: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a - b).collect();
        let u = SignedMonomial::new(sign, exps).ok()?;
        (other.mul_monomial(&u) == *self).then_some(u)
    }

    pub fn is_unit_equivalent(&self, other: &Self) -> bool {
        self.unit_ratio(other).is_some()
    }

    /// Homomorphic image under `x_i ↦ images[i]`, a polynomial in `new_vars`.
    pub fn substitute_monomial(&self, new_vars: &Vars, images: &[SignedMonomial]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::WrongVariableCount {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|m| m.nvars() != new_vars.len()) {
            return Err(Error::WrongVariableCount {
                expected: new_vars.len(),
                found: bad.nvars(),
            });
        }
        let mut poly = Poly::zero(new_vars.len());
        for (e, c) in self.terms() {
            let mut m = SignedMonomial::one(new_vars.len());
            for (img, &k) in images.iter().zip(e) {
                if k != 0 {
                    m = m.mul(&img.pow(k as i64));
                }
            }
            poly.add_term(m.exps, if m.negative { -c } else { c.clone() });
        }
        Ok(Self {
            vars: new_vars.clone(),
            poly,
        })
    }

    /// Exact quotient in the Laurent ring, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_vars(d).ok()?;
        if d.is_zero() {
            return None;
        }
        let (a, sa) = self.poly.strip_monomial();
        let (b, sb) = d.poly.strip_monomial();
        let q = a.div_exact(&b)?;
        let shift: Vec<i32> = sa.iter().zip(&sb).map(|(x, y)| x - y).collect();
        Some(self.with_poly(q.shift(&shift)))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.is_zero() || other.div_exact(self).is_some()
    }

    /// Evaluates at integer values of the variables; panics on negative
    /// exponents at a zero value.
    pub fn eval_rational(&self, point: &[BigInt]) -> (BigInt, BigInt) {
        // numerator / denominator with denominator = Π point_i^(-min_i)
        let shift: Vec<i32> = self.min_exponents().iter().map(|&m| (-m).max(0)).collect();
        let p = self.poly.shift(&shift);
        let mut num = BigInt::zero();
        for (e, c) in p.terms() {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            num += t;
        }
        let mut den = BigInt::one();
        for (x, &k) in point.iter().zip(&shift) {
            den *= num_traits::pow(x.clone(), k as usize);
        }
        (num, den)
    }

    /// Exponent span `(min, max)` of a univariate polynomial.
    pub fn degree_span(&self) -> Result<Option<(i32, i32)>> {
        if self.nvars() != 1 {
            return Err(Error::NotUnivariate(self.nvars()));
        }
        Ok((!self.is_zero()).then(|| (self.min_exponents()[0], self.max_exponents()[0])))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl core::ops::$trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics when the variable lists differ; use
            /// [`LaurentPoly::arith`] to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.arith(rhs, $op).expect("variable lists differ")
            }
        }
        impl core::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl core::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.with_poly(self.poly.neg())
    }
}

impl core::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Text form `c*x^a*y^b + ...`, graded-lex descending.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms_grlex_desc().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (name, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    k => factors.push(alloc::format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// GCD of a list, up to units, in normal form. Zero entries are ignored
/// unless every entry is zero, in which case the result is zero.
pub fn laurent_gcd(ps: &[LaurentPoly]) -> Result<LaurentPoly> {
    let first = ps.first().ok_or(Error::Empty("gcd of an empty list"))?;
    let mut acc = Poly::zero(first.nvars());
    for p in ps {
        first.check_vars(p)?;
        if p.is_zero() {
            continue;
        }
        let (stripped, _) = p.poly.strip_monomial();
        acc = poly::gcd(&acc, &stripped);
    }
    Ok(first.with_poly(acc).normal_form())
}

/// `ν_k = t^(k-1) + ... + t + 1`, with `ν_0 = 0`.
pub fn nu_poly(k: i64, var: &str) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::Negative("k"));
    }
    let v = vars(&[var]);
    LaurentPoly::from_terms(&v, (0..k as i32).map(|i| (vec![i], 1)))
}

/// Number of roots of `ν_n` shared with a univariate polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootCount {
    Exact(usize),
    /// The polynomial is zero, so every root is shared.
    All {
        degree: usize,
    },
}

impl RootCount {
    pub fn count(self) -> usize {
        match self {
            RootCount::Exact(c) => c,
            RootCount::All { degree } => degree,
        }
    }
}

/// Degree of `gcd(p, ν_n)` over the rationals. `ν_n` is squarefree, so this
/// counts distinct shared complex roots.
pub fn shared_root_count(p: &LaurentPoly, n: i64) -> Result<RootCount> {
    if p.nvars() != 1 {
        return Err(Error::NotUnivariate(p.nvars()));
    }
    if n < 2 {
        return Err(Error::Negative("n must be at least 2"));
    }
    let degree = (n - 1) as usize;
    if p.is_zero() {
        return Ok(RootCount::All { degree });
    }
    let nu = nu_poly(n, &p.vars[0])?;
    let nu = LaurentPoly {
        vars: p.vars.clone(),
        poly: nu.poly,
    };
    let g = laurent_gcd(&[p.clone(), nu])?;
    let span = g.degree_span()?.expect("gcd with a nonzero input is nonzero");
    Ok(RootCount::Exact((span.1 - span.0) as usize))
}
