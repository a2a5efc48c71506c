//! Finitely presented groups and Tietze transformations.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::snf::{presented_group, AbelianGroup, IntegerMatrix};
use crate::word::{parse_relator, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        let size = generators.len();
        for r in &relators {
            if let Some(index) = r.max_generator().filter(|&g| g >= size) {
                return Err(Error::LetterOutOfRange { index, size });
            }
        }
        Ok(Self {
            name: name.into(),
            generators,
            relators,
        })
    }

    /// Builds a presentation from generator names and relator strings (words
    /// or equations, see [`parse_relator`]).
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(name: &str, generators: &[S], relators: &[T]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|g| g.as_ref().to_string()).collect();
        let relators = relators
            .iter()
            .map(|r| parse_relator(r.as_ref(), &generators))
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, generators, relators)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a word over this presentation's generators.
    pub fn word(&self, text: &str) -> Result<Word> {
        crate::word::parse_word(text, &self.generators)
    }

    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn exponent_vector(&self, w: &Word) -> Result<Vec<i64>> {
        w.exponent_vector(self.generators.len())
    }

    /// Relators × generators matrix of exponent sums.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let n = self.generators.len();
        let mut m = IntegerMatrix::zeros(0, n);
        for r in &self.relators {
            // letters were validated at construction
            m.push_row(r.exponent_vector(n).expect("validated relator"))
                .expect("row length");
        }
        m
    }

    pub fn abelianize(&self) -> AbelianGroup {
        presented_group(&self.relation_matrix())
    }

    /// Removes `gen` together with relator `rel_index`, in which it must occur
    /// exactly once with exponent ±1, substituting the solved expression
    /// everywhere else.
    pub fn eliminate_generator(&self, gen: &str, rel_index: usize) -> Result<Presentation> {
        let g = self.generator_index(gen).ok_or_else(|| Error::UnknownGenerator {
            name: gen.to_string(),
            offset: 0,
        })?;
        let relator = self.relators.get(rel_index).ok_or(Error::RelatorOutOfRange {
            index: rel_index,
            count: self.relators.len(),
        })?;
        let not_eliminable = |reason| Error::NotEliminable {
            generator: gen.to_string(),
            relator: rel_index,
            reason,
        };
        let positions: Vec<usize> = relator
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.gen == g)
            .map(|(i, _)| i)
            .collect();
        let pos = match positions[..] {
            [] => return Err(not_eliminable("generator does not occur")),
            [p] => p,
            _ => return Err(not_eliminable("generator occurs more than once")),
        };
        let letters = relator.letters();
        if letters[pos].exp.abs() != 1 {
            return Err(not_eliminable("exponent is not ±1"));
        }
        let before = Word::from_letters(letters[..pos].iter().map(|l| (l.gen, l.exp)));
        let after = Word::from_letters(letters[pos + 1..].iter().map(|l| (l.gen, l.exp)));
        // A g B = 1  =>  g = A⁻¹ B⁻¹;   A g⁻¹ B = 1  =>  g = B A
        let solved = if letters[pos].exp == 1 {
            before.inverse().concat(&after.inverse())
        } else {
            after.concat(&before)
        };
        let rename = |h: usize| if h > g { h - 1 } else { h };
        let generators = self
            .generators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != g)
            .map(|(_, n)| n.clone())
            .collect();
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != rel_index)
            .map(|(_, r)| {
                r.substitute(|h| if h == g { solved.clone() } else { Word::generator(h) })
                    .map_generators(rename)
            })
            .collect();
        Presentation::new(self.name.clone(), generators, relators)
    }

    /// Appends a generator `name` and the relator `name⁻¹ · definition`.
    pub fn add_generator(&self, name: &str, definition: &Word) -> Result<Presentation> {
        if self.generator_index(name).is_some() {
            return Err(Error::DuplicateGenerator(name.to_string()));
        }
        let new = self.generators.len();
        if let Some(index) = definition.max_generator().filter(|&g| g >= new) {
            return Err(Error::LetterOutOfRange { index, size: new });
        }
        let mut generators = self.generators.clone();
        generators.push(name.to_string());
        let mut relators = self.relators.clone();
        relators.push(Word::power(new, -1).concat(definition));
        Presentation::new(self.name.clone(), generators, relators)
    }

    /// Appends an arbitrary relator. Only a Tietze move when the relator is
    /// a consequence of the existing ones.
    pub fn add_relator(&self, relator: Word) -> Result<Presentation> {
        let mut relators = self.relators.clone();
        relators.push(relator);
        Presentation::new(self.name.clone(), self.generators.clone(), relators)
    }

    /// Tietze move adding the consequence `r_i · c r_j^e c⁻¹`.
    pub fn add_consequence(&self, i: usize, j: usize, e: i64, conjugator: &Word) -> Result<Presentation> {
        let count = self.relators.len();
        let get = |k: usize| self.relators.get(k).ok_or(Error::RelatorOutOfRange { index: k, count });
        let r = get(i)?.concat(&get(j)?.pow(e).conjugate_by(conjugator));
        self.add_relator(r)
    }

    pub fn remove_relator(&self, index: usize) -> Result<Presentation> {
        if index >= self.relators.len() {
            return Err(Error::RelatorOutOfRange {
                index,
                count: self.relators.len(),
            });
        }
        let mut relators = self.relators.clone();
        relators.remove(index);
        Presentation::new(self.name.clone(), self.generators.clone(), relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        f.write_str(" >")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn rst() -> Presentation {
        Presentation::parse("rst", &["r", "s", "t"], &["r s t"]).unwrap()
    }

    #[test]
    fn rejects_duplicates_and_unknown_letters() {
        assert_eq!(
            Presentation::parse("p", &["a", "a"], &[] as &[&str]),
            Err(Error::DuplicateGenerator("a".into()))
        );
        assert!(Presentation::new("p", vec!["a".into()], vec![Word::generator(1)]).is_err());
    }

    #[test]
    fn abelianize_small_groups() {
        assert_eq!(rst().abelianize(), AbelianGroup::free(2));
        let free = Presentation::parse("f", &["a", "b", "c"], &[] as &[&str]).unwrap();
        assert_eq!(free.abelianize(), AbelianGroup::free(3));
        let z6 = Presentation::parse("z6", &["a", "b"], &["a^2", "b^3", "a b a^-1 b^-1"]).unwrap();
        assert_eq!(z6.abelianize(), AbelianGroup::from_divisors(0, [BigInt::from(6)]));
    }

    #[test]
    fn eliminate_r_from_rst() {
        let p = rst().eliminate_generator("r", 0).unwrap();
        assert_eq!(p.generators(), ["s", "t"]);
        assert!(p.relators().is_empty());
        assert_eq!(p.abelianize(), AbelianGroup::free(2));
    }

    #[test]
    fn eliminate_substitutes() {
        let p = Presentation::parse("p", &["a", "b", "c"], &["a b c^-1", "b c b"]).unwrap();
        // a = c b^-1
        let q = p.eliminate_generator("a", 0).unwrap();
        assert_eq!(q.generators(), ["b", "c"]);
        assert_eq!(q.relators(), [q.word("b c b").unwrap()]);
        // c = a b: b c b -> b a b b
        let q = p.eliminate_generator("c", 0).unwrap();
        assert_eq!(q.relators(), [q.word("b a b^2").unwrap()]);
        assert_eq!(p.abelianize(), q.abelianize());
        let q = Presentation::parse("q", &["a", "b"], &["a b"]).unwrap();
        assert_eq!(q.eliminate_generator("b", 0).unwrap().generators(), ["a"]);
    }

    #[test]
    fn eliminate_errors() {
        let p = Presentation::parse("p", &["a", "b"], &["a b a", "a^2 b", "b"]).unwrap();
        assert!(matches!(
            p.eliminate_generator("a", 0),
            Err(Error::NotEliminable { .. })
        ));
        assert!(matches!(
            p.eliminate_generator("a", 1),
            Err(Error::NotEliminable { .. })
        ));
        assert!(matches!(
            p.eliminate_generator("a", 2),
            Err(Error::NotEliminable { .. })
        ));
        assert!(matches!(
            p.eliminate_generator("z", 0),
            Err(Error::UnknownGenerator { .. })
        ));
        assert!(matches!(
            p.eliminate_generator("b", 7),
            Err(Error::RelatorOutOfRange { .. })
        ));
    }

    #[test]
    fn add_generator_relator_shape() {
        let p = Presentation::parse("p", &["m", "f4"], &[] as &[&str]).unwrap();
        let def = p.word("f4^-1 m f4").unwrap();
        let q = p.add_generator("m1", &def).unwrap();
        assert_eq!(q.relators(), [q.word("m1^-1 f4^-1 m f4").unwrap()]);
        assert_eq!(q.abelianize(), p.abelianize());

        let r = q.add_generator("x", &Word::empty()).unwrap();
        assert_eq!(r.relators()[1], r.word("x^-1").unwrap());
        assert_eq!(r.abelianize(), p.abelianize());
        assert_eq!(
            r.add_generator("x", &Word::empty()),
            Err(Error::DuplicateGenerator("x".into()))
        );
    }

    #[test]
    fn display() {
        assert_eq!(rst().to_string(), "< r, s, t | r s t >");
    }
}
