//! Slow, direct reference computations used to check the library.

use std::collections::BTreeMap;

use foxhom_core::laurent::{vars, LaurentPoly};
use foxhom_core::{BigInt, Word};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Laplace expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0] as i128,
        n => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

/// Invariant factors `d_k = D_k / D_{k-1}`, `D_k` the gcd of all `k × k`
/// minors, listed while `D_k ≠ 0`.
pub fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// `φ(∂w/∂g)` by expanding `w` into single letters and summing prefix
/// images. `images[i] = (sign, exponents)`.
pub fn naive_fox(w: &Word, g: usize, images: &[(i64, Vec<i32>)], var_names: &[&str]) -> LaurentPoly {
    let nv = var_names.len();
    let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    let mut sign = 1i64;
    let mut exps = vec![0i32; nv];
    for l in w.letters() {
        let (s, e) = &images[l.gen];
        let step = if l.exp > 0 { 1 } else { -1 };
        for _ in 0..l.exp.abs() {
            if step < 0 {
                // move across g⁻¹ first: the term is -φ(prefix · g⁻¹)
                for (x, d) in exps.iter_mut().zip(e) {
                    *x -= d;
                }
                sign *= s;
            }
            if l.gen == g {
                *acc.entry(exps.clone()).or_default() += step * sign;
            }
            if step > 0 {
                for (x, d) in exps.iter_mut().zip(e) {
                    *x += d;
                }
                sign *= s;
            }
        }
    }
    LaurentPoly::from_terms(&vars(var_names), acc).unwrap()
}

fn poly_div_rem(num: &[i128], den: &[i128]) -> (Vec<i128>, Vec<i128>) {
    // den monic, coefficients low to high
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Cyclotomic polynomial `Φ_d`, low-to-high coefficients.
pub fn cyclotomic(d: usize) -> Vec<i128> {
    let mut p = vec![0i128; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in 1..d {
        if d % e == 0 {
            p = poly_div_rem(&p, &cyclotomic(e)).0;
        }
    }
    p
}

/// Number of roots of `t^n - 1` other than 1 that are roots of `p`: the sum
/// of `deg Φ_d` over divisors `d > 1` of `n` with `Φ_d | p`.
pub fn shared_roots_by_cyclotomics(p: &LaurentPoly, n: usize) -> usize {
    if p.is_zero() {
        return n - 1;
    }
    let lo = p.min_exponents()[0];
    let hi = p.max_exponents()[0];
    let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        coeffs[(e[0] - lo) as usize] = i128::try_from(c.clone()).expect("small coefficients");
    }
    (2..=n)
        .filter(|d| n % d == 0)
        .map(|d| {
            let phi = cyclotomic(d);
            let (_, rem) = poly_div_rem(&coeffs, &phi);
            if rem.iter().all(|&r| r == 0) {
                phi.len() - 1
            } else {
                0
            }
        })
        .sum()
}

pub fn to_i128(divisors: &[BigInt]) -> Vec<i128> {
    divisors
        .iter()
        .map(|d| i128::try_from(d.clone()).expect("fits"))
        .collect()
}
