//! Sparse integer polynomials keyed by exponent vectors.
//!
//! Arithmetic accepts negative exponents; division, gcd and determinants
//! require ordinary polynomials (all exponents nonnegative). Term order for
//! division is lexicographic on the exponent vector, i.e. the `BTreeMap`
//! order, so the leading term is the last entry.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn monomial(coef: BigInt, exps: Vec<i32>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coef);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn add_term(&mut self, exps: Vec<i32>, coef: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn shift(&self, by: &[i32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(x, y)| x + y).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Componentwise minimum exponents; zeros for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    /// Divides out the largest monomial factor; returns the shift removed.
    pub fn strip_monomial(&self) -> (Self, Vec<i32>) {
        let m = self.min_exponents();
        let neg: Vec<i32> = m.iter().map(|x| -x).collect();
        (self.shift(&neg), m)
    }

    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn integer_content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact quotient of ordinary polynomials, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (ld, lcd) = d.leading()?;
        let (ld, lcd) = (ld.clone(), lcd.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, lcr)) = rem.leading() {
            let diff: Vec<i32> = lr.iter().zip(&ld).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&x| x < 0) {
                return None;
            }
            let (q, r) = lcr.div_rem(&lcd);
            if !r.is_zero() {
                return None;
            }
            for (e, c) in &d.terms {
                let shifted = e.iter().zip(&diff).map(|(a, b)| a + b).collect();
                rem.add_term(shifted, -(c * &q));
            }
            quot.add_term(diff, q);
        }
        Some(quot)
    }

    /// Highest exponent of `var`; `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    fn highest_variable(&self) -> Option<usize> {
        self.terms.keys().filter_map(|e| e.iter().rposition(|&x| x != 0)).max()
    }

    /// Coefficients in `var`, indexed by degree. Requires nonnegative degrees.
    fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).unwrap_or(-1);
        let mut out = vec![Self::zero(self.nvars); (deg + 1) as usize];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let d = core::mem::replace(&mut e2[var], 0);
            out[d as usize].add_term(e2, c.clone());
        }
        out
    }

    fn from_coeffs(var: usize, nvars: usize, coeffs: &[Poly]) -> Self {
        let mut out = Self::zero(nvars);
        for (d, c) in coeffs.iter().enumerate() {
            for (e, k) in &c.terms {
                let mut e2 = e.clone();
                e2[var] = d as i32;
                out.add_term(e2, k.clone());
            }
        }
        out
    }

    /// Flips sign so the lexicographically leading coefficient is positive.
    pub fn with_positive_leading(self) -> Self {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self,
        }
    }
}

/// GCD of ordinary polynomials, normalised to a positive lexicographic
/// leading coefficient. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    debug_assert!(a.is_ordinary() && b.is_ordinary());
    if a.is_zero() {
        return b.clone().with_positive_leading();
    }
    if b.is_zero() {
        return a.clone().with_positive_leading();
    }
    let main = match (a.highest_variable(), b.highest_variable()) {
        (None, None) => {
            let g = a.integer_content().gcd(&b.integer_content());
            return Poly::constant(a.nvars, g);
        }
        (x, y) => x.max(y).unwrap(),
    };
    let (ca, pa) = content_and_primitive(a, main);
    let (cb, pb) = content_and_primitive(b, main);
    let c = gcd(&ca, &cb);
    let g = subresultant_prs(pa.coeffs_in(main), pb.coeffs_in(main));
    let g = Poly::from_coeffs(main, a.nvars, &g);
    let (_, pg) = content_and_primitive(&g, main);
    c.mul(&pg).with_positive_leading()
}

/// Content with respect to `var` (a polynomial in the other variables) and
/// the primitive part.
fn content_and_primitive(p: &Poly, var: usize) -> (Poly, Poly) {
    let coeffs = p.coeffs_in(var);
    let mut content = Poly::zero(p.nvars);
    for c in &coeffs {
        content = gcd(&content, c);
        if content.is_one() {
            break;
        }
    }
    let prim = p.div_exact(&content).expect("content divides");
    (content, prim)
}

type UPoly = Vec<Poly>;

fn trim(mut v: UPoly) -> UPoly {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
    v
}

/// `lc(B)^(deg A - deg B + 1) · A mod B`
fn pseudo_remainder(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.clone();
    let mut e = (a.len() - b.len() + 1) as u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lcr.mul(bc));
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let f = lcb.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Last nonzero element of the subresultant remainder sequence of two
/// primitive polynomials over `Z[other variables]`.
fn subresultant_prs(a: UPoly, b: UPoly) -> UPoly {
    let nvars = a[0].nvars;
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = Poly::one(nvars);
    let mut h = Poly::one(nvars);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![Poly::one(nvars)];
        }
        let divisor = g.mul(&h.pow(delta));
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// Determinant of a square matrix of ordinary polynomials.
pub(crate) fn determinant(m: &[Vec<Poly>], nvars: usize) -> Poly {
    if m.len() < 4 {
        cofactor_determinant(m, nvars)
    } else {
        bareiss_determinant(m.to_vec(), nvars)
    }
}

pub(crate) fn cofactor_determinant(m: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(nvars),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&cofactor_determinant(&minor, nvars));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<Poly>>, nvars: usize) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut negate = false;
    let mut prev = Poly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[i32], i64)]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (e, c) in terms {
            out.add_term(e.to_vec(), BigInt::from(*c));
        }
        out
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let a = p(1, &[(&[2], 1), (&[0], -1)]);
        let b = p(1, &[(&[1], 1), (&[0], -1)]);
        assert_eq!(a.div_exact(&b), Some(p(1, &[(&[1], 1), (&[0], 1)])));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(a.div_exact(&Poly::constant(1, BigInt::from(2))), None);
    }

    #[test]
    fn univariate_gcd() {
        let a = p(1, &[(&[2], 1), (&[0], -1)]);
        let b = p(1, &[(&[2], 1), (&[1], -2), (&[0], 1)]);
        assert_eq!(gcd(&a, &b), p(1, &[(&[1], 1), (&[0], -1)]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(1, &[(&[1], 6), (&[0], 6)]);
        let b = p(1, &[(&[2], 4), (&[0], -4)]);
        assert_eq!(gcd(&a, &b), p(1, &[(&[1], 2), (&[0], 2)]));
    }

    #[test]
    fn multivariate_gcd() {
        // (x - y)(x + 2y) and (x - y)(3x - y^2)
        let common = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let f = common.mul(&p(2, &[(&[1, 0], 1), (&[0, 1], 2)]));
        let g = common.mul(&p(2, &[(&[1, 0], 3), (&[0, 2], -1)]));
        assert_eq!(gcd(&f, &g), common.with_positive_leading());
    }

    #[test]
    fn determinants_agree() {
        let x = p(2, &[(&[1, 0], 1)]);
        let y = p(2, &[(&[0, 1], 1)]);
        let one = Poly::one(2);
        let m: Vec<Vec<Poly>> = vec![
            vec![x.clone(), y.clone(), one.clone(), Poly::zero(2)],
            vec![one.clone(), x.clone(), y.clone(), x.mul(&y)],
            vec![y.clone(), Poly::zero(2), x.clone(), one.clone()],
            vec![x.add(&one), y.sub(&one), one.clone(), x.clone()],
        ];
        assert_eq!(bareiss_determinant(m.clone(), 2), cofactor_determinant(&m, 2));
    }
}
