//! Labelled matrices with Laurent polynomial entries.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::poly::{self, Poly};
use super::{LaurentPoly, Vars};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    vars: Vars,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    /// All rows must have `col_labels.len()` entries over `vars`.
    pub fn new(
        vars: &Vars,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        entries: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self> {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        if entries.len() != rows {
            return Err(Error::BadShape {
                rows: entries.len(),
                cols,
                reason: "row count differs from row labels",
            });
        }
        for row in &entries {
            if row.len() != cols {
                return Err(Error::BadShape {
                    rows,
                    cols: row.len(),
                    reason: "row length differs from column labels",
                });
            }
            if row.iter().any(|p| p.vars() != vars) {
                return Err(Error::VariableMismatch);
            }
        }
        Ok(Self {
            vars: vars.clone(),
            row_labels,
            col_labels,
            entries,
        })
    }

    /// Unlabelled square or rectangular matrix; labels are indices.
    pub fn from_rows(vars: &Vars, entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let label = |i: usize| alloc::format!("{i}");
        Self::new(
            vars,
            (0..rows).map(label).collect(),
            (0..cols).map(label).collect(),
            entries,
        )
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn delete_row(&self, i: usize) -> Result<Self> {
        if i >= self.rows() {
            return Err(Error::RelatorOutOfRange {
                index: i,
                count: self.rows(),
            });
        }
        let mut out = self.clone();
        out.row_labels.remove(i);
        out.entries.remove(i);
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            vars: self.vars.clone(),
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            entries: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries: (0..self.cols())
                .map(|j| (0..self.rows()).map(|i| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows() {
            return Err(Error::BadShape {
                rows: other.rows(),
                cols: self.cols(),
                reason: "inner dimensions differ",
            });
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        let entries = (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        let mut acc = LaurentPoly::zero(&self.vars);
                        for k in 0..self.cols() {
                            acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            vars: self.vars.clone(),
            row_labels: self.row_labels.clone(),
            col_labels: other.col_labels.clone(),
            entries,
        })
    }

    /// Exact determinant. Each row is first multiplied by a monomial that
    /// makes it polynomial; the product of those monomials is divided out.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        let n = self.rows();
        if self.cols() != n {
            return Err(Error::BadShape {
                rows: n,
                cols: self.cols(),
                reason: "determinant of a non-square matrix",
            });
        }
        let nv = self.vars.len();
        let mut total = alloc::vec![0i32; nv];
        let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(n);
        for row in &self.entries {
            let mut lo: Option<Vec<i32>> = None;
            for p in row.iter().filter(|p| !p.is_zero()) {
                let m = p.poly.min_exponents();
                lo = Some(match lo {
                    None => m,
                    Some(l) => l.iter().zip(&m).map(|(a, b)| *a.min(b)).collect(),
                });
            }
            let Some(lo) = lo else {
                return Ok(LaurentPoly::zero(&self.vars));
            };
            let neg: Vec<i32> = lo.iter().map(|x| -x).collect();
            for (t, l) in total.iter_mut().zip(&lo) {
                *t += l;
            }
            rows.push(row.iter().map(|p| p.poly.shift(&neg)).collect());
        }
        let det = poly::determinant(&rows, nv);
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            poly: det.shift(&total),
        })
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, row) in self.row_labels.iter().zip(&self.entries) {
            write!(f, "{label}:")?;
            for p in row {
                write!(f, " [{p}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::vars;
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn m(v: &Vars, rows: &[&[&str]]) -> LaurentMatrix {
        let entries: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|r| r.iter().map(|s| LaurentPoly::parse(s, v).unwrap()).collect())
            .collect();
        LaurentMatrix::from_rows(v, entries).unwrap()
    }

    #[test]
    fn small_determinants() {
        let v = vars(&["x", "y"]);
        let a = m(&v, &[&["x", "1"], &["y^-1", "x^-1"]]);
        assert_eq!(a.determinant().unwrap(), LaurentPoly::parse("1 - y^-1", &v).unwrap());
        assert!(m(&v, &[&["x", "y"], &["0", "0"]]).determinant().unwrap().is_zero());
        let empty = LaurentMatrix::from_rows(&v, vec![]).unwrap();
        assert_eq!(empty.determinant().unwrap(), LaurentPoly::one(&v));
    }

    #[test]
    fn bareiss_path_matches_cofactor() {
        let v = vars(&["x"]);
        let a = m(
            &v,
            &[
                &["x", "1", "0", "x^-1", "2"],
                &["1", "x-1", "x^2", "0", "1"],
                &["0", "3", "x^-2", "1", "x"],
                &["x+1", "0", "1", "x", "0"],
                &["1", "1", "1", "1", "x^3"],
            ],
        );
        let mut rows: Vec<Vec<Poly>> = Vec::new();
        let mut total = vec![0];
        for row in a.entries() {
            let lo = row
                .iter()
                .filter(|p| !p.is_zero())
                .map(|p| p.min_exponents()[0])
                .min()
                .unwrap();
            total[0] += lo;
            rows.push(row.iter().map(|p| p.poly.shift(&[-lo])).collect());
        }
        let cof = poly::cofactor_determinant(&rows, 1).shift(&total);
        assert_eq!(a.determinant().unwrap().poly, cof);
    }

    #[test]
    fn shape_errors() {
        let v = vars(&["x"]);
        let a = m(&v, &[&["x", "1", "0"]]);
        assert!(matches!(a.determinant(), Err(Error::BadShape { .. })));
        assert!(a.mul(&a).is_err());
        assert_eq!(a.transpose().mul(&a).unwrap().rows(), 3);
    }
}
