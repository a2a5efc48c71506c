//! Acceptance gate. Each criterion prints one PASS/FAIL line with its
//! tolerance and runtime limit; the test fails if any criterion fails.
//! Inputs come from the bundled data files; expected values come from the
//! independent transcriptions in `foxhom-testkit`.

use std::time::{Duration, Instant};

use foxhom::data::{Input, Loader};
use foxhom::formats;
use foxhom_core::branched::specialize;
use foxhom_core::cover::{h1_cover, CoverPresentation, CyclicQuotientMap, FillingSpec};
use foxhom_core::laurent::{nu_poly, shared_root_count, vars};
use foxhom_core::{
    alexander_matrix, alexander_poly, branched_betti, AbelianizationMap, BettiNumber, BigInt, LaurentPoly,
    Presentation, SignedMonomial,
};
use foxhom_testkit::{fixtures, suites};

type Outcome = Result<String, String>;

fn bundled(name: &str) -> Input {
    Loader::default().bundled(name).unwrap()
}

fn n_final() -> Presentation {
    formats::presentation(&bundled("n-final.json")).unwrap()
}

fn free_abelian() -> AbelianizationMap {
    formats::map(&bundled("map-free-abelian.json")).unwrap()
}

fn infinite_cyclic() -> AbelianizationMap {
    formats::map(&bundled("map-infinite-cyclic.json")).unwrap()
}

fn delta_l() -> LaurentPoly {
    formats::polynomial(&bundled("delta_L.json")).unwrap()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn matrix_golden() -> Outcome {
    let am = alexander_matrix(&n_final(), &free_abelian()).map_err(|e| e.to_string())?;
    let m = am.matrix();
    let printed = formats::matrix(&bundled("matrix-n-final.json")).map_err(|e| e.to_string())?;
    let v = fixtures::xyz();
    ensure((m.rows(), m.cols()) == (6, 5), || {
        format!("shape {}x{}", m.rows(), m.cols())
    })?;
    let mut equal = 0;
    for (i, row) in fixtures::PRINTED_MATRIX.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            let expected = LaurentPoly::parse(text, &v).unwrap();
            ensure(m.entry(i, j) == &expected && printed.entry(i, j) == &expected, || {
                format!("entry ({i}, {j}): computed {}, printed {expected}", m.entry(i, j))
            })?;
            equal += 1;
        }
    }
    Ok(format!("{equal}/30 entries equal exactly, no row-unit fallback"))
}

fn minors_golden() -> Outcome {
    let am = alexander_matrix(&n_final(), &free_abelian()).map_err(|e| e.to_string())?;
    let minors = am.minor_polys().map_err(|e| e.to_string())?;
    let v = fixtures::xyz();
    let q = format!("(x-1)*(y-1)*(z-1)*{}", fixtures::Q);
    let expected = [
        ("m", format!("(x-1)*{q}")),
        ("m1", format!("(x-1)*{q}")),
        ("m2", format!("(x-1)*{q}")),
        ("s", format!("(y-1)*{q}")),
        ("t", format!("(z-1)*{q}")),
    ];
    ensure(minors.len() == 6, || format!("{} minors", minors.len()))?;
    for ((row, got), (name, text)) in minors.iter().zip(&expected) {
        let e = LaurentPoly::parse(text, &v).unwrap();
        ensure(row == name && got.is_unit_equivalent(&e), || format!("p_{row} = {got}"))?;
    }
    ensure(minors[5].0 == "u" && minors[5].1.is_zero(), || {
        format!("p_u = {}", minors[5].1)
    })?;
    Ok("p_m, p_m1, p_m2, p_s, p_t match up to unit; p_u = 0".into())
}

fn delta_golden() -> Outcome {
    let p = n_final();
    let fa = free_abelian();
    let delta = alexander_poly(&p, &fa).map_err(|e| e.to_string())?;
    ensure(delta.is_unit_equivalent(&fixtures::delta_xyz()), || {
        format!("gcd = {delta}")
    })?;
    let x = vars(&["x"]);
    let images = [
        SignedMonomial::positive(vec![2]),
        SignedMonomial::positive(vec![1]),
        SignedMonomial::positive(vec![1]),
    ];
    let composed = fa.compose(&x, &images).map_err(|e| e.to_string())?;
    ensure(composed == infinite_cyclic(), || {
        "m -> x^2, s,t -> x, u -> 1 is not the bundled map".into()
    })?;
    let spec = delta.substitute_monomial(&x, &images).map_err(|e| e.to_string())?;
    let expected = LaurentPoly::parse("2*x*(x-1)^3*(x+1)^3", &x).unwrap();
    ensure(spec.is_unit_equivalent(&expected), || {
        format!("specialization = {spec}")
    })?;
    Ok(format!(
        "delta = {}; specialization = {}",
        fixtures::delta_xyz(),
        spec.normal_form()
    ))
}

fn h1_golden() -> Outcome {
    let n = n_final().abelianize();
    let nb = formats::presentation(&bundled("nb.json")).unwrap().abelianize();
    ensure(n.rank() == 3 && n.torsion() == [BigInt::from(2)], || {
        format!("H1(N) = {n}")
    })?;
    ensure(nb.rank() == 3 && nb.torsion().is_empty(), || format!("H1(Nb) = {nb}"))?;
    Ok(format!("H1(N) = {n}; H1(Nb) = {nb}"))
}

fn factorization_golden() -> Outcome {
    let dl = delta_l();
    let t = vars(&["t"]);
    let t1 = LaurentPoly::parse("t-1", &t).unwrap();
    let mut bad = Vec::new();
    let mut ratios = Vec::new();
    for k in 2..=12i64 {
        let left = specialize(&dl, k).map_err(|e| e.to_string())?;
        let mut right = &LaurentPoly::monomial(&t, 1, &[-(3 * k as i32 - 1)]) * &t1.pow(5);
        for j in [k - 1, k, k + 1] {
            right = &right * &nu_poly(j, "t").unwrap();
        }
        if !left.is_unit_equivalent(&right) {
            bad.push(k);
            let ratio = left
                .div_exact(&right)
                .map_or("not a polynomial".into(), |r| r.normal_form().to_string());
            if !ratios.contains(&ratio) {
                ratios.push(ratio);
            }
        }
    }
    ensure(bad.is_empty(), || {
        format!(
            "(t-1)*D(t^k, t) differs from the product for k = {bad:?}; ratio = {}",
            ratios.join(" | ")
        )
    })?;
    Ok("identity holds up to unit for k = 2..12".into())
}

fn branched_grid() -> Outcome {
    let dl = delta_l();
    let mut zeros = 0;
    for n in [5i64, 7, 11, 13] {
        for k in 1..n {
            let b = branched_betti(&dl, k, n).map_err(|e| e.to_string())?;
            if k == 1 || k == n - 1 {
                ensure(b.is_positive(), || format!("n={n}, k={k}: {b:?}"))?;
            } else {
                ensure(b == BettiNumber::Exact(0), || format!("n={n}, k={k}: {b:?}"))?;
                zeros += 1;
            }
        }
    }
    Ok(format!("b1 = 0 at {zeros} pairs; positive at k = 1, n-1"))
}

fn rhs_sweep_criterion() -> Outcome {
    let base = n_final();
    let phi = infinite_cyclic();
    let constants = formats::constants(&bundled("constants.json")).unwrap();
    let slopes: Vec<&str> = constants.slopes.iter().map(|s| s.word.as_str()).collect();
    let spec = FillingSpec::parse(&base, &slopes).map_err(|e| e.to_string())?;
    let mut seen = Vec::new();
    for n in [3u64, 5, 7, 9] {
        let cover = CoverPresentation::new(CyclicQuotientMap::from_map(base.clone(), &phi, n).unwrap());
        let filled = cover.fill(&spec);
        let sakuma = cover.sakuma_quotient().map_err(|e| e.to_string())?;
        let hn = cover.h_n_module();
        ensure(filled.rank() == 0, || format!("n={n}: H1(S_n) = {filled}"))?;
        ensure(sakuma.rank() == filled.rank(), || {
            format!("n={n}: transfer quotient {sakuma}")
        })?;
        let (a, b) = (sakuma.order().unwrap(), hn.order().unwrap());
        ensure(
            &a % &b == BigInt::from(0) && BigInt::from(8) % (&a / &b) == BigInt::from(0),
            || format!("n={n}: |{sakuma}| / |{hn}| does not divide 8"),
        )?;
        seen.push(format!("n={n}: |H1| = {a}, index {}", &a / &b));
    }
    Ok(seen.join("; "))
}

fn cross_method() -> Outcome {
    let base = n_final();
    let fa = free_abelian();
    let x = vars(&["x"]);
    let images = [
        SignedMonomial::positive(vec![2]),
        SignedMonomial::positive(vec![1]),
        SignedMonomial::positive(vec![1]),
    ];
    let delta_inf = alexander_poly(&base, &fa)
        .and_then(|d| d.substitute_monomial(&x, &images))
        .map_err(|e| e.to_string())?;
    let phi = infinite_cyclic();
    for n in (3..=15u64).step_by(2) {
        let rs = h1_cover(&CyclicQuotientMap::from_map(base.clone(), &phi, n).unwrap()).rank();
        let fox = 3 + shared_root_count(&delta_inf, n as i64)
            .map_err(|e| e.to_string())?
            .count();
        ensure(rs == fox && rs == 3, || {
            format!("n={n}: RS+SNF rank {rs}, Fox+gcd {fox}")
        })?;
    }
    Ok("rank 3 = 3 + 0 for n = 3, 5, ..., 15 by both pipelines".into())
}

fn property_suites() -> Outcome {
    let fox = suites::fox_axioms(2024, 500)?;
    let snf = suites::snf_oracle(2024, 200)?;
    let tietze = suites::tietze_invariance(2024, 100, 8)?;
    let tf = suites::transfer_filling(&[1, 3, 5, 7, 9])?;
    Ok(format!(
        "fox {fox} words, snf {snf} matrices, tietze {tietze} sequences, transfer-filling {tf} slope checks"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    tolerance: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "Alexander matrix golden",
        tolerance: "exact entrywise",
        limit: Duration::from_secs(1),
        run: matrix_golden,
    },
    Criterion {
        id: 2,
        name: "minors golden",
        tolerance: "up to unit",
        limit: Duration::from_secs(1),
        run: minors_golden,
    },
    Criterion {
        id: 3,
        name: "Alexander polynomial goldens",
        tolerance: "up to unit",
        limit: Duration::from_secs(1),
        run: delta_golden,
    },
    Criterion {
        id: 4,
        name: "H1 golden",
        tolerance: "exact",
        limit: Duration::from_secs(1),
        run: h1_golden,
    },
    Criterion {
        id: 5,
        name: "two-variable factorization golden",
        tolerance: "up to unit",
        limit: Duration::from_secs(1),
        run: factorization_golden,
    },
    Criterion {
        id: 6,
        name: "branched Betti grid",
        tolerance: "exact",
        limit: Duration::from_secs(5),
        run: branched_grid,
    },
    Criterion {
        id: 7,
        name: "filled covers are rational homology spheres",
        tolerance: "exact",
        limit: Duration::from_secs(30),
        run: rhs_sweep_criterion,
    },
    Criterion {
        id: 8,
        name: "cover rank by two pipelines",
        tolerance: "exact",
        limit: Duration::from_secs(60),
        run: cross_method,
    },
    Criterion {
        id: 9,
        name: "property suites",
        tolerance: "exact",
        limit: Duration::from_secs(60),
        run: property_suites,
    },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(d) => (false, d),
        };
        println!(
            "[{}] {} {} (tolerance: {}; {:.3} s, limit {} s): {}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.tolerance,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
