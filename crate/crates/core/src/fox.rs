//! Fox free differential calculus pushed through a homomorphism to the
//! units of a Laurent ring.
//!
//! Derivatives are evaluated directly in the image: the group ring of the
//! free group never appears.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::laurent::{laurent_gcd, LaurentMatrix, LaurentPoly, SignedMonomial, Vars};
use crate::presentation::Presentation;
use crate::word::Word;
use crate::{Error, Result};

/// A homomorphism from a free group to the unit group `±x^a` of a Laurent
/// ring, given by the image of each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationMap {
    source: Vec<String>,
    vars: Vars,
    images: Vec<SignedMonomial>,
}

impl AbelianizationMap {
    pub fn new(source: Vec<String>, vars: Vars, images: Vec<SignedMonomial>) -> Result<Self> {
        if source.len() != images.len() {
            return Err(Error::InvalidMap("one image per source generator"));
        }
        for (i, g) in source.iter().enumerate() {
            if source[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        if let Some(bad) = images.iter().find(|m| m.nvars() != vars.len()) {
            return Err(Error::WrongVariableCount {
                expected: vars.len(),
                found: bad.nvars(),
            });
        }
        Ok(Self { source, vars, images })
    }

    /// Builds a map from `(generator, image)` pairs.
    pub fn from_pairs<I, S>(vars: Vars, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, SignedMonomial)>,
        S: Into<String>,
    {
        let (source, images) = pairs.into_iter().map(|(g, m)| (g.into(), m)).unzip();
        Self::new(source, vars, images)
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn images(&self) -> &[SignedMonomial] {
        &self.images
    }

    pub fn image(&self, generator: &str) -> Option<&SignedMonomial> {
        self.source.iter().position(|g| g == generator).map(|i| &self.images[i])
    }

    /// Reorders the images to follow `p`'s generators. Extra source
    /// generators are ignored.
    pub fn for_presentation(&self, p: &Presentation) -> Result<Self> {
        let images = p
            .generators()
            .iter()
            .map(|g| self.image(g).cloned().ok_or_else(|| Error::MissingImage(g.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p.generators().to_vec(), self.vars.clone(), images)
    }

    /// The composite with a map of Laurent rings sending each variable to a
    /// monomial over `vars`.
    pub fn compose(&self, vars: &Vars, var_images: &[SignedMonomial]) -> Result<Self> {
        if var_images.len() != self.vars.len() {
            return Err(Error::WrongVariableCount {
                expected: self.vars.len(),
                found: var_images.len(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|m| {
                let mut out = SignedMonomial::new(m.sign(), alloc::vec![0; vars.len()])?;
                for (img, &k) in var_images.iter().zip(m.exps()) {
                    out = out.mul(&img.pow(k as i64));
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.source.clone(), vars.clone(), images)
    }

    fn letter_image(&self, gen: usize) -> Result<&SignedMonomial> {
        self.images.get(gen).ok_or(Error::LetterOutOfRange {
            index: gen,
            size: self.images.len(),
        })
    }

    /// Image of a word, indices referring to the source generators.
    pub fn apply(&self, w: &Word) -> Result<SignedMonomial> {
        let mut acc = SignedMonomial::one(self.vars.len());
        for l in w.letters() {
            acc = acc.mul(&self.letter_image(l.gen)?.pow(l.exp));
        }
        Ok(acc)
    }
}

/// `φ(∂w/∂g)` where `g` indexes the source generators of `phi`.
pub fn fox_derivative(w: &Word, g: usize, phi: &AbelianizationMap) -> Result<LaurentPoly> {
    let vars = phi.vars();
    if g >= phi.source.len() {
        return Err(Error::LetterOutOfRange {
            index: g,
            size: phi.source.len(),
        });
    }
    let mut prefix = SignedMonomial::one(vars.len());
    let mut terms: Vec<(Vec<i32>, i64)> = Vec::new();
    for l in w.letters() {
        let x = phi.letter_image(l.gen)?;
        if l.gen == g {
            // g^e contributes prefix·(1 + x + … + x^{e-1}) for e > 0 and
            // -prefix·(x^-1 + … + x^e) for e < 0
            let (range, sign) = if l.exp > 0 { (0..l.exp, 1) } else { (l.exp..0, -1) };
            for j in range {
                let m = prefix.mul(&x.pow(j));
                terms.push((m.exps().to_vec(), sign * m.sign()));
            }
        }
        prefix = prefix.mul(&x.pow(l.exp));
    }
    LaurentPoly::from_terms(vars, terms)
}

/// Fox matrix: rows are generators, columns are relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderMatrix {
    matrix: LaurentMatrix,
    map: AbelianizationMap,
}

impl AlexanderMatrix {
    pub fn new(p: &Presentation, phi: &AbelianizationMap) -> Result<Self> {
        let map = phi.for_presentation(p)?;
        let entries = (0..p.generators().len())
            .map(|g| {
                p.relators()
                    .iter()
                    .map(|r| fox_derivative(r, g, &map))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let col_labels = (1..=p.relators().len()).map(|i| alloc::format!("R{i}")).collect();
        let matrix = LaurentMatrix::new(map.vars(), p.generators().to_vec(), col_labels, entries)?;
        Ok(Self { matrix, map })
    }

    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    pub fn map(&self) -> &AbelianizationMap {
        &self.map
    }

    /// Determinant with each generator's row deleted, in normal form.
    /// Requires one more row than columns.
    pub fn minor_polys(&self) -> Result<Vec<(String, LaurentPoly)>> {
        minor_polys(&self.matrix)
    }

    /// GCD of all maximal minors after deleting one row: the first
    /// elementary ideal's gcd. Zero when there are too few relators.
    pub fn first_elementary_gcd(&self) -> Result<LaurentPoly> {
        let (g, r) = (self.matrix.rows(), self.matrix.cols());
        let vars = self.matrix.vars();
        if g == 0 {
            return Ok(LaurentPoly::one(vars));
        }
        let k = g - 1;
        if r < k {
            return Ok(LaurentPoly::zero(vars));
        }
        let mut minors = Vec::new();
        for cols in combinations(r, k) {
            for deleted in 0..g {
                let rows: Vec<usize> = (0..g).filter(|&i| i != deleted).collect();
                minors.push(self.matrix.submatrix(&rows, &cols).determinant()?);
            }
        }
        laurent_gcd(&minors)
    }
}

/// Labelled row-deletion minors of an `(r+1) × r` matrix.
pub fn minor_polys(m: &LaurentMatrix) -> Result<Vec<(String, LaurentPoly)>> {
    if m.rows() != m.cols() + 1 {
        return Err(Error::BadShape {
            rows: m.rows(),
            cols: m.cols(),
            reason: "minors need exactly one more row than columns",
        });
    }
    (0..m.rows())
        .map(|i| {
            let det = m.delete_row(i)?.determinant()?;
            Ok((m.row_labels()[i].to_string(), det.normal_form()))
        })
        .collect()
}

pub fn alexander_matrix(p: &Presentation, phi: &AbelianizationMap) -> Result<AlexanderMatrix> {
    AlexanderMatrix::new(p, phi)
}

/// GCD of the `(g-1) × (g-1)` minors of the Fox matrix, in normal form.
pub fn alexander_poly(p: &Presentation, phi: &AbelianizationMap) -> Result<LaurentPoly> {
    let m = AlexanderMatrix::new(p, phi)?;
    if p.deficiency() == 1 {
        if p.relators().is_empty() {
            return Ok(LaurentPoly::one(phi.vars()));
        }
        let minors: Vec<LaurentPoly> = m.minor_polys()?.into_iter().map(|(_, q)| q).collect();
        laurent_gcd(&minors)
    } else {
        m.first_elementary_gcd()
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::vars;
    use alloc::vec;

    fn xy_map(p: &Presentation) -> AbelianizationMap {
        let v = vars(&["x", "y"]);
        AbelianizationMap::from_pairs(
            v,
            p.generators().iter().enumerate().map(|(i, g)| {
                let mut e = vec![0, 0];
                e[i] = 1;
                (g.clone(), SignedMonomial::positive(e))
            }),
        )
        .unwrap()
    }

    #[test]
    fn axioms_on_letters() {
        let p = Presentation::parse("f", &["a", "b"], &[] as &[&str]).unwrap();
        let phi = xy_map(&p);
        let v = phi.vars().clone();
        let d = |w: &str, g| fox_derivative(&p.word(w).unwrap(), g, &phi).unwrap();
        assert_eq!(d("a", 0), LaurentPoly::one(&v));
        assert_eq!(d("a^-1", 0), LaurentPoly::parse("-x^-1", &v).unwrap());
        assert!(d("b", 0).is_zero());
        assert_eq!(d("a^3", 0), LaurentPoly::parse("1+x+x^2", &v).unwrap());
        assert_eq!(d("a^-2", 0), LaurentPoly::parse("-x^-1-x^-2", &v).unwrap());
    }

    #[test]
    fn commutator_matrix() {
        let p = Presentation::parse("t2", &["a", "b"], &["a b a^-1 b^-1"]).unwrap();
        let m = alexander_matrix(&p, &xy_map(&p)).unwrap();
        let v = m.matrix().vars().clone();
        assert_eq!(*m.matrix().entry(0, 0), LaurentPoly::parse("1-y", &v).unwrap());
        assert_eq!(*m.matrix().entry(1, 0), LaurentPoly::parse("x-1", &v).unwrap());
        assert_eq!(alexander_poly(&p, &xy_map(&p)).unwrap(), LaurentPoly::one(&v));
    }

    #[test]
    fn one_generator_cases() {
        let v = vars(&["x"]);
        let phi = AbelianizationMap::from_pairs(v.clone(), [("a", SignedMonomial::positive(vec![1]))]).unwrap();
        let p = Presentation::parse("z", &["a"], &["a"]).unwrap();
        let m = alexander_matrix(&p, &phi).unwrap();
        assert_eq!(*m.matrix().entry(0, 0), LaurentPoly::one(&v));
        let free = Presentation::parse("z", &["a"], &[] as &[&str]).unwrap();
        assert_eq!(alexander_poly(&free, &phi).unwrap(), LaurentPoly::one(&v));
    }

    #[test]
    fn minors_of_two_by_one() {
        let v = vars(&["x"]);
        let a = LaurentPoly::parse("x+2", &v).unwrap();
        let b = LaurentPoly::parse("3", &v).unwrap();
        let m = LaurentMatrix::from_rows(&v, vec![vec![a.clone()], vec![b.clone()]]).unwrap();
        let minors = minor_polys(&m).unwrap();
        assert_eq!(minors[0].1, b);
        assert_eq!(minors[1].1, a);
        assert!(matches!(minor_polys(&m.transpose()), Err(Error::BadShape { .. })));
    }

    #[test]
    fn missing_image() {
        let p = Presentation::parse("f", &["a", "c"], &[] as &[&str]).unwrap();
        let q = Presentation::parse("f", &["a", "b"], &[] as &[&str]).unwrap();
        assert_eq!(alexander_matrix(&p, &xy_map(&q)), Err(Error::MissingImage("c".into())));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
