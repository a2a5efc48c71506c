//! Golden checks of the bundled example against the values recorded in
//! `goldens.json` and the other data files. A data file that fails to load
//! fails only the items that read it.

use std::collections::BTreeMap;

use foxhom_core::branched::specialize;
use foxhom_core::cover::{CoverPresentation, CyclicQuotientMap, FillingSpec};
use foxhom_core::laurent::{nu_poly, vars};
use foxhom_core::{
    alexander_matrix, alexander_poly, branched_betti, AbelianizationMap, BettiNumber, BigInt, LaurentPoly,
    SignedMonomial,
};
use num_integer::Integer;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::Env;
use crate::error::{CliError, Context, Result};
use crate::formats;
use crate::report::{Report, Section};

pub const ITEMS: [&str; 8] = [
    "matrix",
    "minors",
    "delta",
    "delta-infinity",
    "factorization",
    "h1",
    "rhs-sweep",
    "branched-sweep",
];

#[derive(Deserialize)]
struct H1Golden {
    rank: usize,
    torsion: Vec<i64>,
}

#[derive(Deserialize)]
struct OneVariable {
    vars: Vec<String>,
    expr: String,
}

#[derive(Deserialize)]
struct Factorization {
    k: [i64; 2],
}

#[derive(Deserialize)]
struct Sweep {
    n: Vec<u64>,
    rank: usize,
    index_bound: i64,
}

#[derive(Deserialize)]
struct Grid {
    n: Vec<i64>,
}

#[derive(Deserialize)]
struct Goldens {
    h1: BTreeMap<String, H1Golden>,
    minors: BTreeMap<String, String>,
    delta: String,
    delta_infinity: OneVariable,
    delta_l_factorization: Factorization,
    rhs_sweep: Sweep,
    branched_sweep: Grid,
}

/// Result of one item: pass/fail, with both values on a mismatch.
struct Outcome {
    pass: bool,
    detail: String,
    expected: Option<String>,
    computed: Option<String>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Self {
            pass: true,
            detail: detail.into(),
            expected: None,
            computed: None,
        }
    }

    fn fail(detail: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        Self {
            pass: false,
            detail: detail.into(),
            expected: Some(expected.into()),
            computed: Some(computed.into()),
        }
    }
}

struct Ctx<'a> {
    env: &'a Env,
    report: &'a mut Report,
}

impl Ctx<'_> {
    fn input(&mut self, name: &str) -> Result<crate::data::Input> {
        let input = self.env.loader.bundled(name)?;
        self.report.input(&input);
        Ok(input)
    }

    fn goldens(&mut self) -> Result<Goldens> {
        let input = self.input("goldens.json")?;
        serde_json::from_str(&input.text).map_err(|source| CliError::Json {
            path: input.name,
            source,
        })
    }

    fn presentation(&mut self, name: &str) -> Result<foxhom_core::Presentation> {
        let input = self.input(name)?;
        formats::presentation(&input)
    }

    fn map(&mut self, name: &str) -> Result<AbelianizationMap> {
        let input = self.input(name)?;
        formats::map(&input)
    }

    fn delta_l(&mut self) -> Result<LaurentPoly> {
        let input = self.input("delta_L.json")?;
        let p = formats::polynomial(&input)?;
        if p.nvars() != 2 {
            return Err(CliError::input("delta_L.json: expected two variables"));
        }
        Ok(p)
    }
}

fn matrix(cx: &mut Ctx) -> Result<Outcome> {
    let p = cx.presentation("n-final.json")?;
    let phi = cx.map("map-free-abelian.json")?;
    let printed = formats::matrix(&cx.input("matrix-n-final.json")?)?;
    let am = alexander_matrix(&p, &phi).context(|| "alexander matrix".into())?;
    let m = am.matrix();
    if (m.rows(), m.cols()) != (printed.rows(), printed.cols()) || m.row_labels() != printed.row_labels() {
        return Ok(Outcome::fail(
            "shape or row labels differ",
            format!("{}x{} {:?}", printed.rows(), printed.cols(), printed.row_labels()),
            format!("{}x{} {:?}", m.rows(), m.cols(), m.row_labels()),
        ));
    }
    if printed.vars() != m.vars() {
        return Ok(Outcome::fail(
            "variable lists differ",
            format!("{:?}", printed.vars()),
            format!("{:?}", m.vars()),
        ));
    }
    let mut diffs = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.entry(i, j) != printed.entry(i, j) {
                diffs.push((i, j));
            }
        }
    }
    Ok(match diffs.first() {
        None => Outcome::pass(format!("{}x{} entries equal", m.rows(), m.cols())),
        Some(&(i, j)) => Outcome::fail(
            format!(
                "{} entries differ, first at ({}, {})",
                diffs.len(),
                m.row_labels()[i],
                m.col_labels()[j]
            ),
            printed.entry(i, j).to_string(),
            m.entry(i, j).to_string(),
        ),
    })
}

fn minors(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?;
    let p = cx.presentation("n-final.json")?;
    let phi = cx.map("map-free-abelian.json")?;
    let am = alexander_matrix(&p, &phi).context(|| "alexander matrix".into())?;
    let computed = am.minor_polys().context(|| "minors".into())?;
    if computed.len() != g.minors.len() {
        return Ok(Outcome::fail(
            "number of minors differs",
            g.minors.len().to_string(),
            computed.len().to_string(),
        ));
    }
    for (row, q) in &computed {
        let Some(text) = g.minors.get(row) else {
            return Ok(Outcome::fail(
                format!("no recorded minor for row {row}"),
                "",
                q.to_string(),
            ));
        };
        let expected = LaurentPoly::parse(text, phi.vars()).context(|| format!("goldens.json: minor {row}"))?;
        let same = if expected.is_zero() {
            q.is_zero()
        } else {
            q.is_unit_equivalent(&expected)
        };
        if !same {
            return Ok(Outcome::fail(
                format!("minor for row {row} differs beyond a unit"),
                expected.normal_form().to_string(),
                q.to_string(),
            ));
        }
    }
    Ok(Outcome::pass(format!("{} minors match up to units", computed.len())))
}

fn delta(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?;
    let p = cx.presentation("n-final.json")?;
    let phi = cx.map("map-free-abelian.json")?;
    let d = alexander_poly(&p, &phi).context(|| "alexander polynomial".into())?;
    let expected = LaurentPoly::parse(&g.delta, phi.vars()).context(|| "goldens.json: delta".into())?;
    Ok(if d.is_unit_equivalent(&expected) {
        Outcome::pass(format!("gcd of minors = {d}"))
    } else {
        Outcome::fail(
            "gcd of minors differs",
            expected.normal_form().to_string(),
            d.to_string(),
        )
    })
}

/// Images of the variables of `from` under `to`, read off generators that
/// `from` sends to a single variable.
fn induced_substitution(from: &AbelianizationMap, to: &AbelianizationMap) -> Result<Vec<SignedMonomial>> {
    (0..from.vars().len())
        .map(|i| {
            let mut unit = vec![0; from.vars().len()];
            unit[i] = 1;
            let target = SignedMonomial::positive(unit);
            from.source()
                .iter()
                .zip(from.images())
                .find(|(_, m)| **m == target)
                .and_then(|(g, _)| to.image(g).cloned())
                .ok_or_else(|| CliError::input(format!("no generator maps to `{}` alone", from.vars()[i])))
        })
        .collect()
}

fn delta_infinity(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?;
    let p = cx.presentation("n-final.json")?;
    let fa = cx.map("map-free-abelian.json")?;
    let ic = cx.map("map-infinite-cyclic.json")?;
    let images = induced_substitution(&fa, &ic)?;
    let composed = fa.compose(ic.vars(), &images).context(|| "map composition".into())?;
    let ic_p = ic.for_presentation(&p).context(|| "map-infinite-cyclic.json".into())?;
    if composed.for_presentation(&p).context(|| "composed map".into())? != ic_p {
        return Ok(Outcome::fail(
            "the one-variable map does not factor through the free abelian map",
            "",
            "",
        ));
    }
    let d = alexander_poly(&p, &fa).context(|| "alexander polynomial".into())?;
    let specialized = d
        .substitute_monomial(ic.vars(), &images)
        .context(|| "substitution".into())?;
    let v = vars(&g.delta_infinity.vars);
    if v != *ic.vars() {
        return Ok(Outcome::fail(
            "variable lists differ",
            format!("{:?}", g.delta_infinity.vars),
            format!("{:?}", ic.vars()),
        ));
    }
    let expected = LaurentPoly::parse(&g.delta_infinity.expr, &v).context(|| "goldens.json: delta_infinity".into())?;
    Ok(if specialized.is_unit_equivalent(&expected) {
        Outcome::pass(format!("specialized polynomial = {}", specialized.normal_form()))
    } else {
        Outcome::fail(
            "specialization differs",
            expected.normal_form().to_string(),
            specialized.normal_form().to_string(),
        )
    })
}

/// `t^{-(3k-1)} (t-1)^5 ν_{k-1} ν_k ν_{k+1}`.
fn factorization_rhs(k: i64) -> Result<LaurentPoly> {
    let t = vars(&["t"]);
    let shift = LaurentPoly::monomial(&t, 1, &[-(3 * k as i32 - 1)]);
    let t1 = LaurentPoly::var(&t, 0) - LaurentPoly::one(&t);
    let mut out = &shift * &t1.pow(5);
    for j in [k - 1, k, k + 1] {
        out = &out * &nu_poly(j, "t").context(|| format!("nu({j})"))?;
    }
    Ok(out)
}

fn factorization(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?;
    let dl = cx.delta_l()?;
    let [lo, hi] = g.delta_l_factorization.k;
    let mut failures = Vec::new();
    for k in lo..=hi {
        let left = specialize(&dl, k).context(|| format!("k={k}"))?;
        let right = factorization_rhs(k)?;
        if !left.is_unit_equivalent(&right) {
            let ratio = if right.is_zero() {
                None
            } else {
                left.div_exact(&right).map(|q| q.normal_form().to_string())
            };
            failures.push((k, left, right, ratio));
        }
    }
    let Some((k, left, right, _)) = failures.first() else {
        return Ok(Outcome::pass(format!("identity holds for k = {lo}..{hi}")));
    };
    let ks: Vec<String> = failures.iter().map(|f| f.0.to_string()).collect();
    let ratios: Vec<Option<&String>> = failures.iter().map(|f| f.3.as_ref()).collect();
    let ratio_text = match ratios.first() {
        Some(Some(r)) if ratios.iter().all(|x| *x == Some(r)) => format!("; left/right = {r} in every case"),
        _ => String::new(),
    };
    Ok(Outcome::fail(
        format!(
            "fails for k in {{{}}}{ratio_text}; values shown for k={k}",
            ks.join(", ")
        ),
        right.normal_form().to_string(),
        left.normal_form().to_string(),
    ))
}

fn h1(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?;
    let mut checked = Vec::new();
    for (file, golden) in &g.h1 {
        let p = cx.presentation(file)?;
        let group = p.abelianize();
        let expected: Vec<BigInt> = golden.torsion.iter().map(|&t| BigInt::from(t)).collect();
        if group.rank() != golden.rank || group.torsion() != expected.as_slice() {
            return Ok(Outcome::fail(
                format!("{file}: first homology differs"),
                format!("rank {}, torsion {:?}", golden.rank, golden.torsion),
                format!("rank {}, torsion {}", group.rank(), formats::torsion_text(&group)),
            ));
        }
        checked.push(format!("{file}: {group}"));
    }
    Ok(Outcome::pass(checked.join("; ")))
}

fn rhs_sweep(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?.rhs_sweep;
    let base = cx.presentation("n-final.json")?;
    let phi = cx.map("map-infinite-cyclic.json")?;
    let constants = formats::constants(&cx.input("constants.json")?)?;
    let slopes: Vec<String> = constants.slopes.into_iter().map(|s| s.word).collect();
    let spec = FillingSpec::parse(&base, &slopes).context(|| "constants.json: slopes".into())?;
    let rows = cx.env.sweep(&g.n, |&n| {
        let q = CyclicQuotientMap::from_map(base.clone(), &phi, n).context(|| format!("n={n}"))?;
        let cover = CoverPresentation::new(q);
        let filled = cover.fill(&spec);
        let transfer = cover.sakuma_quotient().context(|| format!("n={n}"))?;
        Ok((n, filled, transfer, cover.h_n_module()))
    })?;
    let mut lines = Vec::new();
    for (n, filled, transfer, hn) in rows {
        if filled.rank() != g.rank {
            return Ok(Outcome::fail(
                format!("n={n}: filled cover has the wrong rank"),
                format!("rank {}", g.rank),
                filled.to_string(),
            ));
        }
        if transfer.rank() != filled.rank() {
            return Ok(Outcome::fail(
                format!("n={n}: transfer quotient and filling differ in rank"),
                filled.to_string(),
                transfer.to_string(),
            ));
        }
        let bound = BigInt::from(g.index_bound);
        let divides = match (transfer.order(), hn.order()) {
            (Some(a), Some(b)) => a.is_multiple_of(&b) && bound.is_multiple_of(&(a / b)),
            _ => false,
        };
        if !divides {
            return Ok(Outcome::fail(
                format!("n={n}: index of H_n in the transfer quotient does not divide {bound}"),
                format!("{hn} with index dividing {bound}"),
                transfer.to_string(),
            ));
        }
        lines.push(format!("n={n}: {filled}"));
    }
    Ok(Outcome::pass(lines.join("; ")))
}

fn branched_sweep(cx: &mut Ctx) -> Result<Outcome> {
    let g = cx.goldens()?.branched_sweep;
    let dl = cx.delta_l()?;
    let mut count = 0;
    for &n in &g.n {
        for k in (1..n).filter(|k| k.gcd(&n) == 1) {
            let b = branched_betti(&dl, k, n).context(|| format!("n={n}, k={k}"))?;
            let edge = k == 1 || k == n - 1;
            let ok = if edge {
                b.is_positive()
            } else {
                b == BettiNumber::Exact(0)
            };
            if !ok {
                let expected = if edge { "positive" } else { "0" };
                return Ok(Outcome::fail(format!("n={n}, k={k}"), expected, format!("{b:?}")));
            }
            count += 1;
        }
    }
    Ok(Outcome::pass(format!(
        "{count} pairs: b1 = 0 off the edges, positive at k = 1, n-1"
    )))
}

fn run_item(cx: &mut Ctx, item: &str) -> Outcome {
    let r = match item {
        "matrix" => matrix(cx),
        "minors" => minors(cx),
        "delta" => delta(cx),
        "delta-infinity" => delta_infinity(cx),
        "factorization" => factorization(cx),
        "h1" => h1(cx),
        "rhs-sweep" => rhs_sweep(cx),
        "branched-sweep" => branched_sweep(cx),
        _ => unreachable!("item names are checked before running"),
    };
    r.unwrap_or_else(|e| Outcome::fail(format!("could not evaluate: {e}"), "", ""))
}

pub fn verify(env: &Env, items: &[String]) -> Result<Report> {
    for i in items {
        if !ITEMS.contains(&i.as_str()) {
            return Err(CliError::input(format!(
                "unknown item `{i}`; known items: {}",
                ITEMS.join(", ")
            )));
        }
    }
    let selected: Vec<&str> = ITEMS
        .iter()
        .copied()
        .filter(|i| items.is_empty() || items.iter().any(|x| x == i))
        .collect();
    let mut report = Report::new("verify-paper");
    report.param("items", selected.clone());
    let mut table = Section::new(None, ["item", "status", "detail"]);
    let mut failed = 0;
    for item in &selected {
        let o = run_item(
            &mut Ctx {
                env,
                report: &mut report,
            },
            item,
        );
        let status = if o.pass { "pass" } else { "fail" };
        failed += usize::from(!o.pass);
        table.row([item.to_string(), status.to_string(), o.detail.clone()]);
        if let (Some(e), Some(c)) = (&o.expected, &o.computed) {
            if !e.is_empty() || !c.is_empty() {
                table.row([String::new(), String::new(), format!("expected: {e}")]);
                table.row([String::new(), String::new(), format!("computed: {c}")]);
            }
        }
        let mut v = json!({"item": item, "status": status, "detail": o.detail});
        if let Some(e) = o.expected {
            v["expected"] = Value::String(e);
        }
        if let Some(c) = o.computed {
            v["computed"] = Value::String(c);
        }
        report.results.push(v);
    }
    report.sections.push(table);
    report.mismatch = failed > 0;
    report.status = Some(if failed == 0 {
        "pass".into()
    } else {
        format!("fail ({failed} of {} items)", selected.len())
    });
    Ok(report)
}
