//! First Betti numbers of cyclic branched covers of two-component links,
//! counted as roots of `(t-1)·Δ(t^k, t)` shared with `ν_n`.

use alloc::vec;

use num_integer::Integer;

use crate::laurent::{shared_root_count, vars, LaurentPoly, RootCount, SignedMonomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiNumber {
    Exact(usize),
    /// The specialized polynomial vanishes: the Betti number is positive,
    /// at most `upper`, and not determined further.
    PositiveFlagged {
        upper: usize,
    },
}

impl BettiNumber {
    pub fn is_positive(self) -> bool {
        match self {
            BettiNumber::Exact(b) => b > 0,
            BettiNumber::PositiveFlagged { .. } => true,
        }
    }

    pub fn is_flagged(self) -> bool {
        matches!(self, BettiNumber::PositiveFlagged { .. })
    }
}

fn two_variable(delta: &LaurentPoly) -> Result<()> {
    if delta.nvars() == 2 {
        Ok(())
    } else {
        Err(Error::WrongVariableCount {
            expected: 2,
            found: delta.nvars(),
        })
    }
}

/// `(t-1)·Δ(t^k, t)` in the variable `t`.
pub fn specialize(delta: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
    two_variable(delta)?;
    let t = vars(&["t"]);
    let images = [
        SignedMonomial::positive(vec![k as i32]),
        SignedMonomial::positive(vec![1]),
    ];
    let sub = delta.substitute_monomial(&t, &images)?;
    let t_minus_1 = LaurentPoly::var(&t, 0) - LaurentPoly::one(&t);
    Ok(&t_minus_1 * &sub)
}

/// Requires `0 < k < n` and `gcd(k, n) = 1`.
pub fn branched_betti(delta: &LaurentPoly, k: i64, n: i64) -> Result<BettiNumber> {
    if n < 2 || k <= 0 || k >= n || k.gcd(&n) != 1 {
        return Err(Error::NotCoprime { k, n });
    }
    let p = specialize(delta, k)?;
    Ok(match shared_root_count(&p, n)? {
        RootCount::Exact(c) => BettiNumber::Exact(c),
        RootCount::All { degree } => BettiNumber::PositiveFlagged { upper: degree },
    })
}

/// Whether the diagonal specializations `Δ_a(t, t)` and `Δ_b(t, t)` agree up
/// to a unit.
pub fn mutation_invariance_check(delta_a: &LaurentPoly, delta_b: &LaurentPoly) -> Result<bool> {
    two_variable(delta_a)?;
    two_variable(delta_b)?;
    let t = vars(&["t"]);
    let diag = [SignedMonomial::positive(vec![1]), SignedMonomial::positive(vec![1])];
    let a = delta_a.substitute_monomial(&t, &diag)?;
    let b = delta_b.substitute_monomial(&t, &diag)?;
    Ok(a.is_unit_equivalent(&b))
}
