//! Seeded generators for words, matrices and Tietze move sequences.

use foxhom_core::{Presentation, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn word<R: Rng>(rng: &mut R, generators: usize, max_runs: usize) -> Word {
    if generators == 0 {
        return Word::empty();
    }
    let runs = rng.gen_range(0..=max_runs);
    Word::from_letters((0..runs).map(|_| {
        let g = rng.gen_range(0..generators);
        let e = *[-3, -2, -1, 1, 1, 2, 3].choose(rng).unwrap();
        (g, e)
    }))
}

pub fn matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    // sparse and low-rank cases exercise the zero divisors
    let density = rng.gen_range(0.3..=1.0);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(density) {
                        rng.gen_range(-bound..=bound)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

pub fn presentation<R: Rng>(rng: &mut R) -> Presentation {
    let k = rng.gen_range(1..=4);
    let names: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
    let r = rng.gen_range(0..=3);
    let relators = (0..r).map(|_| word(rng, k, 5)).collect();
    Presentation::new("random", names, relators).unwrap()
}

/// A presentation together with a stack of relators known to be
/// consequences of the relators added before them.
pub struct TietzeWalk {
    pub current: Presentation,
    redundant: Vec<usize>,
    fresh: usize,
}

impl TietzeWalk {
    pub fn new(p: Presentation) -> Self {
        Self {
            current: p,
            redundant: Vec::new(),
            fresh: 0,
        }
    }

    fn forget_relator(&mut self, index: usize) {
        self.redundant.retain(|&i| i != index);
        for i in &mut self.redundant {
            if *i > index {
                *i -= 1;
            }
        }
    }

    /// Applies one random move; returns its name.
    pub fn step<R: Rng>(&mut self, rng: &mut R) -> &'static str {
        let p = &self.current;
        let k = p.generators().len();
        let r = p.relators().len();
        match rng.gen_range(0..5) {
            0 => {
                let name = format!("x{}", self.fresh);
                self.fresh += 1;
                let def = word(rng, k, 4);
                self.current = p.add_generator(&name, &def).unwrap();
                "add generator"
            }
            1 if r > 0 => {
                let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..r));
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                let conj = word(rng, k, 3);
                self.current = p.add_consequence(i, j, e, &conj).unwrap();
                self.redundant.push(r);
                "add consequence"
            }
            2 if !self.redundant.is_empty() => {
                let index = self.redundant.pop().unwrap();
                self.current = p.remove_relator(index).unwrap();
                self.forget_relator(index);
                "remove consequence"
            }
            3 => {
                let mut candidates = Vec::new();
                for (ri, rel) in p.relators().iter().enumerate() {
                    for g in 0..k {
                        let hits: Vec<_> = rel.letters().iter().filter(|l| l.gen == g).collect();
                        if hits.len() == 1 && hits[0].exp.abs() == 1 {
                            candidates.push((g, ri));
                        }
                    }
                }
                match candidates.choose(rng) {
                    Some(&(g, ri)) => {
                        let name = p.generators()[g].clone();
                        self.current = p.eliminate_generator(&name, ri).unwrap();
                        self.forget_relator(ri);
                        "eliminate generator"
                    }
                    None => "none",
                }
            }
            4 if r > 0 => {
                // replace a relator by a cyclic permutation of its inverse
                let i = rng.gen_range(0..r);
                let inv = p.relators()[i].inverse();
                let cut = rng.gen_range(0..=inv.letters().len());
                let head = Word::from_letters(inv.letters()[..cut].iter().map(|l| (l.gen, l.exp)));
                let rotated = head.inverse().concat(&inv).concat(&head);
                let was_redundant = self.redundant.contains(&i);
                self.current = p.add_relator(rotated).unwrap().remove_relator(i).unwrap();
                self.forget_relator(i);
                if was_redundant {
                    self.redundant.push(r - 1);
                }
                "rotate relator"
            }
            _ => "none",
        }
    }
}
