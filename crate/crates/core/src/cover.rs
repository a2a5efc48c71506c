//! Finite cyclic covers by Reidemeister–Schreier rewriting.
//!
//! A [`CyclicQuotientMap`] grades each generator by an integer and reduces
//! mod `n`; the cover is the kernel of the induced map onto `Z/n`. Cosets are
//! residues `0..n`. The Schreier generator for base generator `g` at coset
//! `c` is `rep(c) · g · rep(c + deg g)⁻¹`, has index `g·n + c`, and is
//! named `g.c`.
//!
//! Homology classes in the cover are integer vectors indexed by Schreier
//! generators ("edge coordinates"). Generators on the transversal tree are
//! trivial, which the relation matrix records as unit rows.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::fox::AbelianizationMap;
use crate::presentation::Presentation;
use crate::snf::{presented_group, AbelianGroup, IntegerMatrix};
use crate::word::Word;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuotientMap {
    base: Presentation,
    n: u64,
    degrees: Vec<i64>,
}

impl CyclicQuotientMap {
    /// `degrees[i]` is the grading of generator `i`. Fails unless the
    /// degrees generate `Z/n` and every relator has degree `0 mod n`.
    pub fn new(base: Presentation, degrees: Vec<i64>, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        if degrees.len() != base.generators().len() {
            return Err(Error::InvalidMap("one degree per generator"));
        }
        let g = degrees
            .iter()
            .fold(n as i64, |acc, &d| acc.gcd(&d.rem_euclid(n as i64)));
        if g != 1 {
            return Err(Error::NotSurjective(n));
        }
        let map = Self { base, n, degrees };
        for (i, r) in map.base.relators().iter().enumerate() {
            let d = map.residue(map.degree(r));
            if d != 0 {
                return Err(Error::RelatorDegree {
                    relator: i,
                    degree: d,
                    modulus: n,
                });
            }
        }
        Ok(map)
    }

    /// Degrees given by generator name; every generator must be named.
    pub fn from_named<S: AsRef<str>>(base: Presentation, degrees: &[(S, i64)], n: u64) -> Result<Self> {
        let degrees = base
            .generators()
            .iter()
            .map(|g| {
                degrees
                    .iter()
                    .find(|(name, _)| name.as_ref() == g)
                    .map(|&(_, d)| d)
                    .ok_or_else(|| Error::MissingImage(g.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, degrees, n)
    }

    /// Reads degrees off a one-variable map with positive signs.
    pub fn from_map(base: Presentation, phi: &AbelianizationMap, n: u64) -> Result<Self> {
        if phi.vars().len() != 1 {
            return Err(Error::NotUnivariate(phi.vars().len()));
        }
        let phi = phi.for_presentation(&base)?;
        let degrees = phi
            .images()
            .iter()
            .map(|m| {
                if m.sign() == 1 {
                    Ok(m.exps()[0] as i64)
                } else {
                    Err(Error::InvalidMap("negative sign in a grading"))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, degrees, n)
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Integer degree of a word.
    pub fn degree(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| self.degrees[l.gen] * l.exp).sum()
    }

    pub fn residue(&self, d: i64) -> u64 {
        d.rem_euclid(self.n as i64) as u64
    }
}

/// Slopes to fill, as words in the base generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingSpec {
    slopes: Vec<Word>,
}

impl FillingSpec {
    pub fn new(slopes: Vec<Word>) -> Result<Self> {
        if slopes.iter().any(Word::is_empty) {
            return Err(Error::EmptySlope);
        }
        Ok(Self { slopes })
    }

    pub fn parse<S: AsRef<str>>(base: &Presentation, slopes: &[S]) -> Result<Self> {
        Self::new(
            slopes
                .iter()
                .map(|s| base.word(s.as_ref()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn slopes(&self) -> &[Word] {
        &self.slopes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPresentation {
    map: CyclicQuotientMap,
    reps: Vec<Word>,
    tree: Vec<usize>,
    presentation: Presentation,
}

impl CoverPresentation {
    pub fn new(map: CyclicQuotientMap) -> Self {
        let n = map.n as usize;
        let k = map.base.generators().len();
        let (reps, tree) = transversal(&map);
        let generators: Vec<String> = map
            .base
            .generators()
            .iter()
            .flat_map(|g| (0..n).map(move |c| alloc::format!("{g}.{c}")))
            .collect();
        debug_assert_eq!(generators.len(), n * k);
        let mut cover = Self {
            map,
            reps,
            tree,
            presentation: Presentation::new("", Vec::new(), Vec::new()).expect("empty"),
        };
        let relators = cover
            .map
            .base
            .relators()
            .iter()
            .flat_map(|r| (0..n as u64).map(|c| cover.rewrite(r, c)).collect::<Vec<_>>())
            .collect();
        let name = alloc::format!("{}[{}]", cover.map.base.name(), n);
        cover.presentation = Presentation::new(name, generators, relators).expect("indices in range");
        cover
    }

    pub fn map(&self) -> &CyclicQuotientMap {
        &self.map
    }

    pub fn n(&self) -> u64 {
        self.map.n
    }

    /// True for even `n`, where the bundled pipeline's conclusions are not
    /// asserted.
    pub fn even_modulus(&self) -> bool {
        self.map.n % 2 == 0
    }

    /// All `n·k` Schreier generators and the `n·r` rewritten relators,
    /// relator-major: relator `i` at coset `c` has index `i·n + c`.
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Schreier generators that are trivial because they lie on the
    /// transversal tree.
    pub fn tree_edges(&self) -> &[usize] {
        &self.tree
    }

    /// Transversal word for coset `c`, a path from coset 0 along tree edges.
    pub fn representative(&self, c: u64) -> &Word {
        &self.reps[c as usize]
    }

    pub fn cover_generator(&self, g: usize, c: u64) -> usize {
        g * self.map.n as usize + (c % self.map.n) as usize
    }

    /// Number of Schreier generators, the length of class vectors.
    pub fn num_edges(&self) -> usize {
        self.presentation.generators().len()
    }

    /// Lift of `w` starting at coset `c`, as a word in Schreier generators.
    pub fn rewrite(&self, w: &Word, c: u64) -> Word {
        let n = self.map.n as i64;
        let mut cur = (c as i64).rem_euclid(n);
        let mut out = Word::empty();
        for l in w.letters() {
            let d = self.map.degrees[l.gen];
            for _ in 0..l.exp.unsigned_abs() {
                if l.exp > 0 {
                    out.push(self.cover_generator(l.gen, cur as u64), 1);
                    cur = (cur + d).rem_euclid(n);
                } else {
                    cur = (cur - d).rem_euclid(n);
                    out.push(self.cover_generator(l.gen, cur as u64), -1);
                }
            }
        }
        out
    }

    /// Edge-coordinate vector of the lift of `w` at coset `c`.
    pub fn lift_class(&self, w: &Word, c: u64) -> Vec<i64> {
        self.rewrite(w, c)
            .exponent_vector(self.num_edges())
            .expect("rewrite stays in range")
    }

    /// Rewritten relators plus one unit row per tree edge.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = self.presentation.relation_matrix();
        for &e in &self.tree {
            let mut row = vec![0i64; self.num_edges()];
            row[e] = 1;
            m.push_row(row).expect("row length");
        }
        m
    }

    /// First homology of the cover.
    pub fn homology(&self) -> AbelianGroup {
        presented_group(&self.relation_matrix())
    }

    /// The kernel presentation with tree generators deleted.
    pub fn kernel_presentation(&self) -> Presentation {
        let gens = self.presentation.generators();
        let keep: Vec<usize> = (0..gens.len()).filter(|i| !self.tree.contains(i)).collect();
        let mut index = vec![usize::MAX; gens.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let relators = self
            .presentation
            .relators()
            .iter()
            .map(|r| {
                r.substitute(|g| {
                    if self.tree.contains(&g) {
                        Word::empty()
                    } else {
                        Word::generator(index[g])
                    }
                })
            })
            .collect();
        Presentation::new(
            self.presentation.name(),
            keep.iter().map(|&i| gens[i].clone()).collect(),
            relators,
        )
        .expect("renumbered generators in range")
    }

    /// `Σ_c` lift of `h` at `c`: the full preimage of `h` as a 1-cycle.
    pub fn transfer(&self, h: &Word) -> Vec<i64> {
        let mut acc = vec![0i64; self.num_edges()];
        for c in 0..self.map.n {
            for (a, b) in acc.iter_mut().zip(self.lift_class(h, c)) {
                *a += b;
            }
        }
        acc
    }

    /// Action of the deck generator: edge `(g, c)` goes to `(g, c + 1)`.
    pub fn deck_shift(&self, v: &[i64]) -> Vec<i64> {
        let n = self.map.n as usize;
        let mut out = vec![0i64; v.len()];
        for (i, &x) in v.iter().enumerate() {
            let (g, c) = (i / n, i % n);
            out[g * n + (c + 1) % n] = x;
        }
        out
    }

    /// For each slope `w` of degree `d`, with `o = n / gcd(d, n)`: the words
    /// `rewrite(rep(c) · w^o · rep(c)⁻¹, 0)` for `c = 0..gcd(d, n)`, one per
    /// orbit of shifting by `d`.
    pub fn filling_relators(&self, spec: &FillingSpec) -> Vec<Word> {
        let n = self.map.n;
        let mut out = Vec::new();
        for w in spec.slopes() {
            let d = self.map.residue(self.map.degree(w));
            let orbits = d.gcd(&n);
            let o = (n / orbits) as i64;
            let loop_word = w.pow(o);
            for c in 0..orbits {
                let rep = self.representative(c);
                out.push(self.rewrite(&loop_word.conjugate_by(rep), 0));
            }
        }
        out
    }

    /// Edge-coordinate classes of [`Self::filling_relators`].
    pub fn filling_classes(&self, spec: &FillingSpec) -> Vec<Vec<i64>> {
        self.filling_relators(spec)
            .iter()
            .map(|w| w.exponent_vector(self.num_edges()).expect("rewrite stays in range"))
            .collect()
    }

    /// Homology of the filled cover.
    pub fn fill(&self, spec: &FillingSpec) -> AbelianGroup {
        self.quotient(&self.filling_classes(spec))
    }

    /// `H₁(cover) / ⟨classes⟩`.
    pub fn quotient(&self, classes: &[Vec<i64>]) -> AbelianGroup {
        let mut m = self.relation_matrix();
        for v in classes {
            m.push_row(v.iter().copied()).expect("class length matches edge count");
        }
        presented_group(&m)
    }

    /// Whether every class in `sub` lies in the subgroup generated by `gens`.
    /// Compares `H/⟨gens⟩` with `H/⟨gens ∪ sub⟩`; finitely generated
    /// abelian groups are Hopfian, so isomorphic means equal.
    pub fn subgroup_contains(&self, gens: &[Vec<i64>], sub: &[Vec<i64>]) -> bool {
        let both: Vec<Vec<i64>> = gens.iter().chain(sub).cloned().collect();
        self.quotient(gens) == self.quotient(&both)
    }

    pub fn same_subgroup(&self, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
        self.subgroup_contains(a, b) && self.subgroup_contains(b, a)
    }

    /// Quotient by `multiplier · transfer(word)` for each pair.
    pub fn quotient_by_transfers(&self, items: &[(Word, i64)]) -> AbelianGroup {
        let classes: Vec<Vec<i64>> = items
            .iter()
            .map(|(w, k)| self.transfer(w).into_iter().map(|x| x * k).collect())
            .collect();
        self.quotient(&classes)
    }

    /// `H₁(cover) / ⟨tr(m), 2·tr(s), 2·tr(t)⟩`, for a base with generators
    /// named `m`, `s`, `t`.
    pub fn sakuma_quotient(&self) -> Result<AbelianGroup> {
        let base = &self.map.base;
        let get = |name: &str| {
            base.generator_index(name)
                .map(Word::generator)
                .ok_or_else(|| Error::UnknownGenerator {
                    name: name.into(),
                    offset: 0,
                })
        };
        Ok(self.quotient_by_transfers(&[(get("m")?, 1), (get("s")?, 2), (get("t")?, 2)]))
    }

    /// `H₁(cover)` modulo the transfers of every base generator.
    pub fn h_n_module(&self) -> AbelianGroup {
        let items: Vec<(Word, i64)> = (0..self.map.base.generators().len())
            .map(|g| (Word::generator(g), 1))
            .collect();
        self.quotient_by_transfers(&items)
    }
}

/// Transversal words and tree edges. Uses powers of the first generator
/// whose degree is a unit mod `n`, else a breadth-first tree of positive
/// steps.
fn transversal(map: &CyclicQuotientMap) -> (Vec<Word>, Vec<usize>) {
    let n = map.n as i64;
    let nu = n as usize;
    let unit = map.degrees.iter().position(|&d| d.rem_euclid(n).gcd(&n) == 1);
    let mut reps: Vec<Option<Word>> = vec![None; nu];
    let mut tree = Vec::new();
    reps[0] = Some(Word::empty());
    match unit {
        Some(a) => {
            let da = map.degrees[a].rem_euclid(n);
            let mut c = 0i64;
            for j in 0..n - 1 {
                tree.push(a * nu + c as usize);
                c = (c + da) % n;
                reps[c as usize] = Some(Word::power(a, j + 1));
            }
        }
        None => {
            let mut queue = VecDeque::from([0usize]);
            while let Some(c) = queue.pop_front() {
                let here = reps[c].clone().expect("visited");
                for (g, &d) in map.degrees.iter().enumerate() {
                    let next = (c as i64 + d).rem_euclid(n) as usize;
                    if reps[next].is_none() {
                        let mut w = here.clone();
                        w.push(g, 1);
                        reps[next] = Some(w);
                        tree.push(g * nu + c);
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let reps = reps.into_iter().map(|r| r.expect("degrees generate Z/n")).collect();
    (reps, tree)
}

pub fn reidemeister_schreier(map: &CyclicQuotientMap) -> CoverPresentation {
    CoverPresentation::new(map.clone())
}

pub fn h1_cover(map: &CyclicQuotientMap) -> AbelianGroup {
    CoverPresentation::new(map.clone()).homology()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(names: &[&str]) -> Presentation {
        Presentation::parse("free", names, &[] as &[&str]).unwrap()
    }

    #[test]
    fn cyclic_cover_of_z() {
        let q = CyclicQuotientMap::new(free(&["a"]), vec![1], 3).unwrap();
        let cover = reidemeister_schreier(&q);
        assert_eq!(cover.presentation().generators(), ["a.0", "a.1", "a.2"]);
        assert_eq!(cover.tree_edges().len(), 2);
        assert_eq!(cover.kernel_presentation().generators(), ["a.2"]);
        assert_eq!(cover.homology(), AbelianGroup::free(1));
    }

    #[test]
    fn schreier_rank_formula() {
        let q = CyclicQuotientMap::new(free(&["a", "b"]), vec![1, 0], 2).unwrap();
        assert_eq!(h1_cover(&q), AbelianGroup::free(3));
        for n in 1..6u64 {
            let q = CyclicQuotientMap::new(free(&["a", "b", "c"]), vec![2, 3, 0], n).unwrap();
            assert_eq!(h1_cover(&q), AbelianGroup::free((n * 2 + 1) as usize));
        }
    }

    #[test]
    fn spanning_tree_without_unit_generator() {
        // 2 and 3 generate Z/6 but neither is a unit mod 6
        let q = CyclicQuotientMap::new(free(&["a", "b"]), vec![2, 3], 6).unwrap();
        let cover = reidemeister_schreier(&q);
        assert_eq!(cover.tree_edges().len(), 5);
        for c in 0..6 {
            let rep = cover.representative(c);
            assert_eq!(q.residue(q.degree(rep)), c);
            // a representative lifts onto tree edges only
            let lift = cover.rewrite(rep, 0);
            assert!(lift.letters().iter().all(|l| cover.tree_edges().contains(&l.gen)));
        }
        assert_eq!(cover.homology(), AbelianGroup::free(7));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CyclicQuotientMap::new(free(&["a"]), vec![2], 4),
            Err(Error::NotSurjective(4))
        );
        assert_eq!(
            CyclicQuotientMap::new(free(&["a"]), vec![1], 0),
            Err(Error::ZeroModulus)
        );
        let p = Presentation::parse("p", &["a", "b"], &["a b"]).unwrap();
        assert_eq!(
            CyclicQuotientMap::new(p.clone(), vec![1, 1], 3),
            Err(Error::RelatorDegree {
                relator: 0,
                degree: 2,
                modulus: 3
            })
        );
        assert!(CyclicQuotientMap::new(p, vec![1, -1], 3).is_ok());
        assert_eq!(FillingSpec::new(vec![Word::empty()]), Err(Error::EmptySlope));
    }

    #[test]
    fn transfer_of_generator_sums_lifts() {
        let p = Presentation::parse("t2", &["a", "b"], &["a b a^-1 b^-1"]).unwrap();
        let q = CyclicQuotientMap::new(p, vec![1, 0], 4).unwrap();
        let cover = reidemeister_schreier(&q);
        let tr = cover.transfer(&Word::generator(1));
        let expect: Vec<i64> = (0..8).map(|i| (i >= 4) as i64).collect();
        assert_eq!(tr, expect);
        assert_eq!(cover.deck_shift(&tr), tr);
        // torus cover of a torus
        assert_eq!(cover.homology(), AbelianGroup::free(2));
    }

    #[test]
    fn trivial_cover_is_the_base() {
        let p = Presentation::parse("p", &["a", "b"], &["a^2 b^-4"]).unwrap();
        let q = CyclicQuotientMap::new(p.clone(), vec![2, 1], 1).unwrap();
        let cover = reidemeister_schreier(&q);
        assert_eq!(cover.homology(), p.abelianize());
        let h = p.word("a b^3").unwrap();
        assert_eq!(cover.transfer(&h), p.exponent_vector(&h).unwrap());
        assert_eq!(cover.h_n_module(), AbelianGroup::trivial());
    }

    #[test]
    fn filling_a_solid_torus() {
        // Z with the slope a^n filled in its n-fold cover
        let q = CyclicQuotientMap::new(free(&["a"]), vec![1], 5).unwrap();
        let cover = reidemeister_schreier(&q);
        let spec = FillingSpec::parse(q.base(), &["a"]).unwrap();
        assert_eq!(cover.filling_relators(&spec).len(), 1);
        assert_eq!(cover.fill(&spec), AbelianGroup::trivial());
        // slope of degree 0 lifts to n separate loops
        let q = CyclicQuotientMap::new(free(&["a", "b"]), vec![1, 0], 3).unwrap();
        let cover = reidemeister_schreier(&q);
        let spec = FillingSpec::parse(q.base(), &["b"]).unwrap();
        assert_eq!(cover.filling_relators(&spec).len(), 3);
        assert_eq!(cover.fill(&spec), AbelianGroup::free(1));
    }

    #[test]
    fn subgroup_comparison() {
        let q = CyclicQuotientMap::new(free(&["a", "b"]), vec![1, 0], 1).unwrap();
        let cover = reidemeister_schreier(&q);
        let a = vec![vec![2, 0], vec![0, 3]];
        let b = vec![vec![2, 3], vec![0, 3]];
        assert!(cover.same_subgroup(&a, &b));
        assert!(cover.subgroup_contains(&a, &[vec![4, 6]]));
        assert!(!cover.subgroup_contains(&a, &[vec![1, 0]]));
    }
}
