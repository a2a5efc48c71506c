//! Integer matrices, Smith normal form, and finitely generated abelian groups.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows<R, T>(cols: usize, rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut data = Vec::new();
        let mut count = 0;
        for row in rows {
            let before = data.len();
            data.extend(row.into_iter().map(Into::into));
            if data.len() - before != cols {
                return Err(Error::BadShape {
                    rows: count + 1,
                    cols: data.len() - before,
                    reason: "ragged rows",
                });
            }
            count += 1;
        }
        Ok(Self {
            rows: count,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row<T: Into<BigInt>, I: IntoIterator<Item = T>>(&mut self, row: I) -> Result<()> {
        let before = self.data.len();
        self.data.extend(row.into_iter().map(Into::into));
        if self.data.len() - before != self.cols {
            let found = self.data.len() - before;
            self.data.truncate(before);
            return Err(Error::BadShape {
                rows: self.rows + 1,
                cols: found,
                reason: "row length differs from column count",
            });
        }
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::BadShape {
                rows: other.rows,
                cols: other.cols,
                reason: "inner dimensions differ",
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[dst * self.cols + j] += delta;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[i * self.cols + dst] += delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -core::mem::take(v);
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Diagonal of the Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal entries `d1 | d2 | ...`, all positive; units included.
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// `Z^rows / column space`: the cokernel of `M: Z^cols -> Z^rows`.
    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup::from_divisors(self.rows - self.rank(), self.divisors.iter().cloned())
    }

    /// `Z^cols / row space`: the group presented by the rows as relations.
    pub fn row_cokernel(&self) -> AbelianGroup {
        AbelianGroup::from_divisors(self.cols - self.rank(), self.divisors.iter().cloned())
    }
}

/// Unimodular `U`, `V` with `U · M · V = D`.
#[derive(Clone, Debug)]
pub struct SmithTransforms {
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
    pub diagonal: IntegerMatrix,
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut work = Elimination {
        a: m.clone(),
        left: None,
        right: None,
    };
    work.run()
}

pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> (SmithForm, SmithTransforms) {
    let mut work = Elimination {
        a: m.clone(),
        left: Some(IntegerMatrix::identity(m.rows)),
        right: Some(IntegerMatrix::identity(m.cols)),
    };
    let form = work.run();
    let transforms = SmithTransforms {
        left: work.left.unwrap(),
        right: work.right.unwrap(),
        diagonal: work.a,
    };
    (form, transforms)
}

struct Elimination {
    a: IntegerMatrix,
    left: Option<IntegerMatrix>,
    right: Option<IntegerMatrix>,
}

impl Elimination {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.left {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.right {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row(dst, src, f);
        if let Some(u) = &mut self.left {
            u.add_row(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col(dst, src, f);
        if let Some(v) = &mut self.right {
            v.add_col(dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.left {
            u.negate_row(i);
        }
    }

    /// Position of the nonzero entry of least absolute value in the trailing
    /// submatrix starting at `(t, t)`.
    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.map_or(true, |b| v.abs() < self.a[b].abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> SmithForm {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut divisors = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.smallest_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                if self.clear_row_and_column(t) {
                    continue;
                }
                // pivot must divide every remaining entry
                if let Some(i) = self.non_divisible_row(t) {
                    let one = BigInt::one();
                    self.add_row(t, i, &one);
                    continue;
                }
                break;
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            divisors.push(self.a[(t, t)].clone());
            t += 1;
        }
        SmithForm { rows, cols, divisors }
    }

    /// Reduces the pivot row and column modulo the pivot. Returns true when a
    /// nonzero remainder was left and a smaller pivot was swapped in.
    fn clear_row_and_column(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows {
            if !self.a[(i, t)].is_zero() {
                let q = self.a[(i, t)].div_floor(&p);
                self.add_row(i, t, &-q);
            }
        }
        for j in t + 1..self.a.cols {
            if !self.a[(t, j)].is_zero() {
                let q = self.a[(t, j)].div_floor(&p);
                self.add_col(j, t, &-q);
            }
        }
        let mut best: Option<(bool, usize)> = None;
        let mut best_abs = p.abs();
        for i in t + 1..self.a.rows {
            let v = self.a[(i, t)].abs();
            if !v.is_zero() && v < best_abs {
                best_abs = v;
                best = Some((true, i));
            }
        }
        for j in t + 1..self.a.cols {
            let v = self.a[(t, j)].abs();
            if !v.is_zero() && v < best_abs {
                best_abs = v;
                best = Some((false, j));
            }
        }
        match best {
            Some((true, i)) => {
                self.swap_rows(t, i);
                true
            }
            Some((false, j)) => {
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        if p.abs().is_one() {
            return None;
        }
        (t + 1..self.a.rows).find(|&i| (t + 1..self.a.cols).any(|j| !self.a[(i, j)].is_multiple_of(p)))
    }
}

/// `Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with `2 <= d1 | d2 | ... | dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Builds the group from a valid divisor chain, dropping units.
    /// Panics if the chain condition fails; use [`AbelianGroup::new`] for
    /// untrusted input.
    pub fn from_divisors<I: IntoIterator<Item = BigInt>>(rank: usize, divisors: I) -> Self {
        let mut torsion: Vec<BigInt> = divisors.into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
        let zeros = torsion.iter().filter(|d| d.is_zero()).count();
        torsion.retain(|d| !d.is_zero());
        let group = Self {
            rank: rank + zeros,
            torsion,
        };
        assert!(group.chain_holds(), "divisor chain condition violated");
        group
    }

    /// Validates a torsion chain: entries at least 2, each dividing the next.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let group = Self { rank, torsion };
        if group.torsion.iter().all(|d| *d >= BigInt::from(2)) && group.chain_holds() {
            Ok(group)
        } else {
            Err(Error::InvalidMap("torsion must be a divisor chain of integers >= 2"))
        }
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(rank: usize, orders: I) -> Self {
        let diag: Vec<BigInt> = orders.into_iter().collect();
        let mut m = IntegerMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        let snf = smith_normal_form(&m);
        let g = snf.cokernel();
        Self {
            rank: g.rank + rank,
            torsion: g.torsion,
        }
    }

    fn chain_holds(&self) -> bool {
        self.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of a finite group, `None` when the rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push(alloc::string::String::from("Z"));
        } else if self.rank > 1 {
            parts.push(alloc::format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(alloc::format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Abelian group presented by integer relation rows over `cols` generators.
pub fn presented_group(relations: &IntegerMatrix) -> AbelianGroup {
    smith_normal_form(relations).row_cokernel()
}
