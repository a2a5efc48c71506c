//! Randomized property suites. Each returns the number of cases checked or
//! a description of the first failure.

use foxhom_core::cover::{CoverPresentation, CyclicQuotientMap, FillingSpec};
use foxhom_core::laurent::{vars, LaurentPoly};
use foxhom_core::snf::{smith_normal_form, smith_normal_form_with_transforms};
use foxhom_core::{fox_derivative, AbelianizationMap, BigInt, IntegerMatrix, SignedMonomial, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{fixtures, oracle, random};

pub type SuiteResult = Result<usize, String>;

const FOX_VARS: [&str; 2] = ["x", "y"];

fn random_map(rng: &mut ChaCha8Rng, generators: usize) -> Vec<(i64, Vec<i32>)> {
    (0..generators)
        .map(|_| {
            let sign = if rng.gen_bool(0.2) { -1 } else { 1 };
            (sign, vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)])
        })
        .collect()
}

fn to_map(images: &[(i64, Vec<i32>)]) -> AbelianizationMap {
    let names: Vec<String> = (0..images.len()).map(|i| format!("g{i}")).collect();
    let monomials = images
        .iter()
        .map(|(s, e)| SignedMonomial::new(*s, e.clone()).unwrap())
        .collect();
    AbelianizationMap::new(names, vars(&FOX_VARS), monomials).unwrap()
}

/// Fox derivatives against letter-by-letter expansion, the product rule
/// and the fundamental identity `Σ ∂w/∂g · (φ(g) - 1) = φ(w) - 1`.
pub fn fox_axioms(seed: u64, words: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = 3;
    let v = vars(&FOX_VARS);
    let one = LaurentPoly::one(&v);
    for case in 0..words {
        let images = random_map(&mut rng, k);
        let phi = to_map(&images);
        let u = random::word(&mut rng, k, 8);
        let w = random::word(&mut rng, k, 8);
        let uw = u.concat(&w);
        let phi_u = phi.apply(&u).unwrap().to_poly(&v);
        let mut identity = LaurentPoly::zero(&v);
        for g in 0..k {
            let du = fox_derivative(&u, g, &phi).unwrap();
            let dw = fox_derivative(&w, g, &phi).unwrap();
            let duw = fox_derivative(&uw, g, &phi).unwrap();
            let naive = oracle::naive_fox(&uw, g, &images, &FOX_VARS);
            if duw != naive {
                return Err(format!(
                    "case {case}: d/dg{g} of {uw:?} is {duw}, expansion gives {naive}"
                ));
            }
            if duw != &du + &(&phi_u * &dw) {
                return Err(format!("case {case}: product rule fails for g{g}"));
            }
            let xg = phi.images()[g].to_poly(&v);
            identity = &identity + &(&duw * &(&xg - &one));
        }
        let phi_uw = phi.apply(&uw).unwrap().to_poly(&v);
        if identity != &phi_uw - &one {
            return Err(format!("case {case}: fundamental identity fails for {uw:?}"));
        }
    }
    Ok(words)
}

fn to_matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows[0].len(), rows.iter().map(|r| r.iter().copied())).unwrap()
}

/// Smith divisors against determinantal divisors, and `U·M·V = D` with
/// unimodular `U`, `V`.
pub fn snf_oracle(seed: u64, matrices: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..matrices {
        let rows = random::matrix(&mut rng, 6, 9);
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m);
        let ours = oracle::to_i128(&snf.divisors);
        let expected = oracle::determinantal_divisors(&rows);
        if ours != expected {
            return Err(format!("case {case}: {rows:?} gives {ours:?}, oracle {expected:?}"));
        }
        let (form, t) = smith_normal_form_with_transforms(&m);
        if form != snf {
            return Err(format!("case {case}: transforms change the divisors"));
        }
        let product = t.left.mul(&m).unwrap().mul(&t.right).unwrap();
        if product != t.diagonal || !t.diagonal.is_diagonal() {
            return Err(format!("case {case}: U·M·V is not the diagonal form"));
        }
        for u in [&t.left, &t.right] {
            let rows: Vec<Vec<i64>> = (0..u.rows())
                .map(|i| u.row(i).iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
                .collect();
            if oracle::det(&rows).abs() != 1 {
                return Err(format!("case {case}: transform is not unimodular"));
            }
        }
    }
    Ok(matrices)
}

/// Abelianization is unchanged along random Tietze move sequences.
pub fn tietze_invariance(seed: u64, sequences: usize, steps: usize) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..sequences {
        let start = random::presentation(&mut rng);
        let expected = start.abelianize();
        let mut walk = random::TietzeWalk::new(start.clone());
        let mut moves = Vec::new();
        for _ in 0..steps {
            moves.push(walk.step(&mut rng));
            let got = walk.current.abelianize();
            if got != expected {
                return Err(format!(
                    "case {case}: {start} became {} after {moves:?}: {got} vs {expected}",
                    walk.current
                ));
            }
        }
    }
    Ok(sequences)
}

/// For each slope of the reference example, the filled relator classes
/// and the matching transfer classes generate the same subgroup of
/// `H₁(N_n)`; fill and the transfer quotient then agree in rank, with the
/// quotient by all transfers of index dividing 8. Also checks deck
/// invariance of transfers.
pub fn transfer_filling(ns: &[u64]) -> SuiteResult {
    let base = fixtures::n_final();
    let mut checked = 0;
    for &n in ns {
        let q = CyclicQuotientMap::new(base.clone(), fixtures::N_DEGREES.to_vec(), n).unwrap();
        let cover = CoverPresentation::new(q);
        let word = |s: &str| base.word(s).unwrap();
        let scaled = |w: &Word, k: i64| -> Vec<i64> { cover.transfer(w).into_iter().map(|x| x * k).collect() };
        let pairs = [
            (fixtures::SLOPES[0], scaled(&word("m"), 1)),
            (fixtures::SLOPES[1], scaled(&word("t"), 2)),
            (fixtures::SLOPES[2], scaled(&word("s"), 2)),
        ];
        let mut all_filled = Vec::new();
        let mut all_transfers = Vec::new();
        for (slope, transfer) in pairs {
            let spec = FillingSpec::parse(&base, &[slope]).unwrap();
            let filled = cover.filling_classes(&spec);
            if !cover.same_subgroup(&filled, std::slice::from_ref(&transfer)) {
                return Err(format!(
                    "n={n}: slope `{slope}` and its transfer span different subgroups"
                ));
            }
            all_filled.extend(filled);
            all_transfers.push(transfer);
            checked += 1;
        }
        if !cover.same_subgroup(&all_filled, &all_transfers) {
            return Err(format!("n={n}: filled and transfer subgroups differ"));
        }
        for g in 0..base.generators().len() {
            let tr = cover.transfer(&Word::generator(g));
            if cover.deck_shift(&tr) != tr {
                return Err(format!("n={n}: transfer of generator {g} is not deck invariant"));
            }
        }
        let spec = FillingSpec::parse(&base, &fixtures::SLOPES).unwrap();
        let filled = cover.fill(&spec);
        let sakuma = cover.sakuma_quotient().unwrap();
        let hn = cover.h_n_module();
        if filled.rank() != sakuma.rank() {
            return Err(format!(
                "n={n}: fill {filled} and transfer quotient {sakuma} differ in rank"
            ));
        }
        if let (Some(a), Some(b)) = (sakuma.order(), hn.order()) {
            if a.clone() % &b != BigInt::from(0) || BigInt::from(8) % (a / b) != BigInt::from(0) {
                return Err(format!("n={n}: order ratio of {sakuma} over {hn} does not divide 8"));
            }
        } else {
            return Err(format!("n={n}: expected finite quotients, got {sakuma} and {hn}"));
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_run_small() {
        assert_eq!(fox_axioms(1, 20), Ok(20));
        assert_eq!(snf_oracle(1, 20), Ok(20));
        assert_eq!(tietze_invariance(1, 10, 6), Ok(10));
        assert_eq!(transfer_filling(&[1, 3]), Ok(6));
    }
}
