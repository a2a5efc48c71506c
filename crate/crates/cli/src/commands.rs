//! Command implementations. Each returns a [`Report`]; sweeps run on the
//! caller's thread pool and are merged in parameter order.

use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use foxhom_core::cover::{CoverPresentation, CyclicQuotientMap, FillingSpec};
use foxhom_core::{alexander_matrix, alexander_poly, branched_betti, AbelianGroup, BettiNumber, Presentation};
use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::data::{Input, Loader};
use crate::error::{CliError, Context, Result};
use crate::formats::{self, big, group_json, poly_json, torsion_text, vars_of};
use crate::report::{Report, Section};

pub struct Env {
    pub loader: Loader,
    pub pool: Arc<rayon::ThreadPool>,
}

impl Env {
    pub fn new(loader: Loader, jobs: usize) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| CliError::input(format!("cannot start worker pool: {e}")))?;
        Ok(Self {
            loader,
            pool: Arc::new(pool),
        })
    }

    fn load(&self, report: &mut Report, arg: &str) -> Result<Input> {
        let input = self.loader.load(arg)?;
        report.input(&input);
        Ok(input)
    }

    /// Runs `f` over `items` on the pool; the first error in item order wins.
    pub(crate) fn sweep<I: Sync, T: Send>(&self, items: &[I], f: impl Fn(&I) -> Result<T> + Sync) -> Result<Vec<T>> {
        let out: Vec<Result<T>> = self.pool.install(|| items.par_iter().map(&f).collect());
        out.into_iter().collect()
    }
}

/// `INT`, a comma list, or an inclusive range `a..b` (also `a..=b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSpec {
    text: String,
    values: Vec<u64>,
    range: bool,
}

impl NSpec {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_range(&self) -> bool {
        self.range
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

fn parse_positive(s: &str) -> std::result::Result<u64, String> {
    match s.trim().parse::<u64>() {
        Ok(0) => Err("n must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(_) => Err(format!("`{}` is not a positive integer", s.trim())),
    }
}

impl FromStr for NSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let text = s.trim().to_string();
        let (values, range) = if let Some((a, b)) = text.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (parse_positive(a)?, parse_positive(b)?);
            if lo > hi {
                return Err(format!("empty range {text}"));
            }
            ((lo..=hi).collect(), true)
        } else {
            let mut v = text
                .split(',')
                .map(parse_positive)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            v.sort_unstable();
            v.dedup();
            (v, false)
        };
        Ok(Self { text, values, range })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KSpec {
    All,
    One(i64),
}

impl FromStr for KSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "all" => Ok(KSpec::All),
            t => t
                .parse::<i64>()
                .map(KSpec::One)
                .map_err(|_| format!("`{t}` is neither an integer nor `all`")),
        }
    }
}

impl KSpec {
    fn text(self) -> String {
        match self {
            KSpec::All => "all".into(),
            KSpec::One(k) => k.to_string(),
        }
    }
}

/// How generators are graded for cyclic covers.
#[derive(Clone, Debug)]
pub enum Grading {
    /// A one-variable abelianization map file.
    Map(String),
    /// `gen=degree` pairs.
    Degrees(Vec<(String, i64)>),
}

impl Grading {
    pub fn parse_degrees(text: &str) -> std::result::Result<Self, String> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (g, d) = item
                .split_once('=')
                .ok_or_else(|| format!("expected gen=degree, found `{item}`"))?;
            let d = d.trim().parse::<i64>().map_err(|_| format!("bad degree in `{item}`"))?;
            pairs.push((g.trim().to_string(), d));
        }
        Ok(Grading::Degrees(pairs))
    }

    fn degrees(&self, env: &Env, report: &mut Report, base: &Presentation) -> Result<Vec<i64>> {
        let q = match self {
            Grading::Map(file) => {
                report.param("map", file.as_str());
                let input = env.load(report, file)?;
                let phi = formats::map(&input)?;
                CyclicQuotientMap::from_map(base.clone(), &phi, 1).context(|| input.name.clone())?
            }
            Grading::Degrees(pairs) => {
                let text: Vec<String> = pairs.iter().map(|(g, d)| format!("{g}={d}")).collect();
                report.param("degrees", text.join(","));
                CyclicQuotientMap::from_named(base.clone(), pairs, 1).context(|| "degrees".into())?
            }
        };
        Ok(q.degrees().to_vec())
    }
}

pub struct CoverArgs {
    pub presentation: String,
    pub grading: Grading,
    pub n: NSpec,
}

struct CoverSetup {
    base: Presentation,
    degrees: Vec<i64>,
}

impl CoverSetup {
    fn new(env: &Env, report: &mut Report, args: &CoverArgs) -> Result<Self> {
        report.param("presentation", args.presentation.as_str());
        report.param("n", args.n.text());
        let input = env.load(report, &args.presentation)?;
        let base = formats::presentation(&input)?;
        let degrees = args.grading.degrees(env, report, &base)?;
        Ok(Self { base, degrees })
    }

    fn cover(&self, n: u64) -> Result<CoverPresentation> {
        let q = CyclicQuotientMap::new(self.base.clone(), self.degrees.clone(), n).context(|| format!("n={n}"))?;
        Ok(CoverPresentation::new(q))
    }
}

fn flag_even(report: &mut Report, ns: &[u64]) {
    let even: Vec<String> = ns.iter().filter(|n| *n % 2 == 0).map(u64::to_string).collect();
    if !even.is_empty() {
        report.notes.push(format!(
            "even n ({}) computed and flagged; no conclusions are attached to them",
            even.join(", ")
        ));
    }
}

fn group_cells(g: &AbelianGroup) -> [String; 3] {
    [
        g.rank().to_string(),
        torsion_text(g),
        g.order().map_or("inf".into(), |o| o.to_string()),
    ]
}

fn with_fields(mut v: Value, fields: Value) -> Value {
    if let (Some(obj), Value::Object(extra)) = (v.as_object_mut(), fields) {
        obj.extend(extra);
    }
    v
}

pub fn abelianize(env: &Env, files: &[String]) -> Result<Report> {
    let mut report = Report::new("abelianize");
    report.param("presentations", files.to_vec());
    let mut table = Section::new(
        None,
        ["presentation", "generators", "relators", "rank", "torsion", "group"],
    );
    for f in files {
        let input = env.load(&mut report, f)?;
        let p = formats::presentation(&input)?;
        let g = p.abelianize();
        table.row([
            p.name().to_string(),
            p.generators().len().to_string(),
            p.relators().len().to_string(),
            g.rank().to_string(),
            torsion_text(&g),
            g.to_string(),
        ]);
        report.results.push(with_fields(
            json!({"presentation": p.name(), "file": input.name, "generators": p.generators().len(), "relators": p.relators().len()}),
            group_json(&g),
        ));
        report
            .notes
            .push(format!("{}: rank {}, torsion {}", p.name(), g.rank(), torsion_text(&g)));
    }
    report.sections.push(table);
    Ok(report)
}

pub fn alexander(env: &Env, presentation: &str, map: &str, minors: bool) -> Result<Report> {
    let mut report = Report::new("alexander");
    report.param("presentation", presentation);
    report.param("map", map);
    report.param("minors", minors);
    let p_input = env.load(&mut report, presentation)?;
    let p = formats::presentation(&p_input)?;
    let m_input = env.load(&mut report, map)?;
    let phi = formats::map(&m_input)?;
    let am = alexander_matrix(&p, &phi).context(|| "alexander matrix".into())?;
    let m = am.matrix();

    let mut headers = vec![String::new()];
    headers.extend(m.col_labels().iter().cloned());
    let mut table = Section::new(Some("matrix"), headers);
    let mut rows_json = Vec::new();
    for (i, label) in m.row_labels().iter().enumerate() {
        let cells: Vec<String> = (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect();
        let mut row = vec![label.clone()];
        row.extend(cells.iter().cloned());
        table.row(row);
        rows_json.push(cells);
    }
    report.sections.push(table);

    let mut result = json!({
        "presentation": p.name(),
        "vars": vars_of(m.vars()),
        "matrix": {"rows": m.row_labels(), "cols": m.col_labels(), "entries": rows_json},
    });
    if minors {
        let list = am.minor_polys().context(|| "minors".into())?;
        let mut section = Section::new(Some("minors"), ["deleted row", "minor"]);
        let mut out = Vec::new();
        for (g, q) in &list {
            section.row([g.clone(), q.to_string()]);
            out.push(json!({"row": g, "poly": poly_json(q)}));
        }
        report.sections.push(section);
        result["minors"] = Value::Array(out);
    }
    let delta = alexander_poly(&p, &phi).context(|| "alexander polynomial".into())?;
    let mut section = Section::new(Some("alexander polynomial"), Vec::<String>::new());
    section.row([delta.to_string()]);
    report.sections.push(section);
    if p.deficiency() != 1 && !p.relators().is_empty() {
        report
            .notes
            .push("deficiency is not one: the polynomial is the gcd of the first elementary ideal".into());
    }
    result["delta"] = poly_json(&delta);
    report.results.push(result);
    Ok(report)
}

fn cover_rows(
    env: &Env,
    report: &mut Report,
    setup: &CoverSetup,
    ns: &[u64],
    run: impl Fn(&CoverPresentation) -> Result<(AbelianGroup, Value)> + Sync,
) -> Result<()> {
    let rows = env.sweep(ns, |&n| {
        let cover = setup.cover(n)?;
        let (g, extra) = run(&cover)?;
        Ok((n, g, extra))
    })?;
    let mut table = Section::new(None, ["n", "rank", "torsion", "order", "flag"]);
    for (n, g, extra) in rows {
        let even = n % 2 == 0;
        let [rank, torsion, order] = group_cells(&g);
        table.row([
            n.to_string(),
            rank,
            torsion,
            order,
            if even { "even".into() } else { String::new() },
        ]);
        let v = with_fields(json!({"n": n, "even": even}), group_json(&g));
        report.results.push(with_fields(v, extra));
    }
    flag_even(report, ns);
    report.sections.push(table);
    Ok(())
}

fn cover_like(
    env: &Env,
    command: &str,
    args: &CoverArgs,
    run: impl Fn(&CoverPresentation) -> Result<(AbelianGroup, Value)> + Sync,
) -> Result<Report> {
    let mut report = Report::new(command);
    let setup = CoverSetup::new(env, &mut report, args)?;
    cover_rows(env, &mut report, &setup, args.n.values(), run)?;
    Ok(report)
}

pub fn cover(env: &Env, args: &CoverArgs) -> Result<Report> {
    let mut report = cover_like(env, "cover", args, |c| {
        let k = c.presentation();
        let extra = json!({
            "generators": k.generators().len(),
            "relators": k.relators().len(),
            "tree_edges": c.tree_edges().len(),
        });
        Ok((c.homology(), extra))
    })?;
    let mut sizes = Section::new(
        Some("cover presentations"),
        ["n", "generators", "relators", "tree edges"],
    );
    for r in &report.results {
        sizes.row([&r["n"], &r["generators"], &r["relators"], &r["tree_edges"]].map(|v| v.to_string()));
    }
    report.sections.push(sizes);
    Ok(report)
}

fn default_slopes(env: &Env, report: &mut Report) -> Result<Vec<String>> {
    let input = env.loader.bundled("constants.json")?;
    report.input(&input);
    Ok(formats::constants(&input)?.slopes.into_iter().map(|s| s.word).collect())
}

fn filling(env: &Env, report: &mut Report, base: &Presentation, slopes: &[String]) -> Result<FillingSpec> {
    let slopes = if slopes.is_empty() {
        default_slopes(env, report)?
    } else {
        slopes.to_vec()
    };
    report.param("slopes", slopes.clone());
    FillingSpec::parse(base, &slopes).context(|| "slope".into())
}

pub fn fill(env: &Env, args: &CoverArgs, slopes: &[String]) -> Result<Report> {
    let mut report = Report::new("fill");
    let setup = CoverSetup::new(env, &mut report, args)?;
    let spec = filling(env, &mut report, &setup.base, slopes)?;
    cover_rows(env, &mut report, &setup, args.n.values(), |c| {
        Ok((c.fill(&spec), json!({})))
    })?;
    Ok(report)
}

pub fn sakuma(env: &Env, args: &CoverArgs) -> Result<Report> {
    let mut report = cover_like(env, "sakuma", args, |c| {
        let q = c.sakuma_quotient().context(|| "transfer quotient".into())?;
        let h = c.h_n_module();
        let ratio = match (q.order(), h.order()) {
            (Some(a), Some(b)) => big(&(a / b)),
            _ => Value::Null,
        };
        Ok((q, json!({"h_n": group_json(&h), "order_ratio": ratio})))
    })?;
    let mut index = Section::new(Some("index over H_n"), ["n", "H_n", "index"]);
    for r in &report.results {
        let group = r["h_n"]["group"].as_str().unwrap_or_default().to_string();
        index.row([r["n"].to_string(), group, r["order_ratio"].to_string()]);
    }
    report.sections.push(index);
    Ok(report)
}

pub fn hn(env: &Env, args: &CoverArgs) -> Result<Report> {
    cover_like(env, "hn", args, |c| Ok((c.h_n_module(), json!({}))))
}

pub fn branched(env: &Env, delta: &str, n: &NSpec, k: KSpec) -> Result<Report> {
    let mut report = Report::new("branched");
    report.param("delta", delta);
    report.param("n", n.text());
    report.param("k", k.text());
    let input = env.load(&mut report, delta)?;
    let poly = formats::polynomial(&input)?;
    if poly.nvars() != 2 {
        return Err(CliError::input(format!(
            "{}: expected a two-variable polynomial, found {} variables",
            input.name,
            poly.nvars()
        )));
    }
    let mut jobs = Vec::new();
    for &nv in n.values() {
        let n = nv as i64;
        match k {
            KSpec::All => jobs.extend((1..n).filter(|k| k.gcd(&n) == 1).map(|k| (n, k))),
            KSpec::One(k) if k > 0 && k < n && k.gcd(&n) == 1 => jobs.push((n, k)),
            KSpec::One(k) => report
                .notes
                .push(format!("n={n}: k={k} skipped, needs 0 < k < n and gcd(k, n) = 1")),
        }
    }
    let rows = env.sweep(&jobs, |&(n, k)| {
        branched_betti(&poly, k, n)
            .context(|| format!("n={n}, k={k}"))
            .map(|b| (n, k, b))
    })?;
    let mut table = Section::new(None, ["n", "k", "b1", "flag"]);
    for (n, k, b) in rows {
        let (cell, flag, value) = match b {
            BettiNumber::Exact(c) => (c.to_string(), String::new(), json!({"betti": c, "flag": false})),
            BettiNumber::PositiveFlagged { upper } => (
                ">0".into(),
                format!("zero polynomial, b1 <= {upper}"),
                json!({"betti": null, "flag": true, "upper": upper}),
            ),
        };
        table.row([n.to_string(), k.to_string(), cell, flag]);
        report.results.push(with_fields(json!({"n": n, "k": k}), value));
    }
    report.sections.push(table);
    Ok(report)
}

pub struct SweepArgs {
    pub presentation: String,
    pub map: String,
    pub slopes: Vec<String>,
    pub n: NSpec,
    pub force: bool,
}

pub fn rhs_sweep(env: &Env, args: &SweepArgs) -> Result<Report> {
    let ns: Vec<u64> = if args.n.is_range() && !args.force {
        args.n.values().iter().copied().filter(|n| n % 2 == 1).collect()
    } else {
        args.n.values().to_vec()
    };
    if !args.force {
        if let Some(n) = ns.iter().find(|n| *n % 2 == 0) {
            return Err(CliError::input(format!(
                "n={n} is even; pass --force to include even n"
            )));
        }
    }
    if ns.is_empty() {
        return Err(CliError::input(format!("no odd n in {}", args.n.text())));
    }
    let mut report = Report::new("rhs-sweep");
    report.param("force", args.force);
    let cover_args = CoverArgs {
        presentation: args.presentation.clone(),
        grading: Grading::Map(args.map.clone()),
        n: args.n.clone(),
    };
    let setup = CoverSetup::new(env, &mut report, &cover_args)?;
    let spec = filling(env, &mut report, &setup.base, &args.slopes)?;
    let named = ["m", "s", "t"].iter().all(|g| setup.base.generator_index(g).is_some());
    let rows = env.sweep(&ns, |&n| {
        let cover = setup.cover(n)?;
        let filled = cover.fill(&spec);
        let transfer = if named {
            Some(cover.sakuma_quotient().context(|| format!("n={n}"))?)
        } else {
            None
        };
        Ok((n, filled, transfer))
    })?;
    let mut table = Section::new(
        None,
        ["n", "rank", "torsion", "order", "rhs", "transfer quotient", "flag"],
    );
    for (n, g, transfer) in rows {
        let even = n % 2 == 0;
        let rhs = if g.rank() == 0 { "yes" } else { "no" };
        let [rank, torsion, order] = group_cells(&g);
        table.row([
            n.to_string(),
            rank,
            torsion,
            order,
            rhs.into(),
            transfer.as_ref().map_or(String::new(), |t| t.to_string()),
            if even { "even".into() } else { String::new() },
        ]);
        let v = with_fields(json!({"n": n, "even": even, "rhs": rhs}), group_json(&g));
        report.results.push(with_fields(
            v,
            json!({"transfer_quotient": transfer.as_ref().map(group_json)}),
        ));
    }
    if !named {
        report
            .notes
            .push("presentation lacks generators m, s, t; transfer quotient skipped".into());
    }
    flag_even(&mut report, &ns);
    report.sections.push(table);
    Ok(report)
}

fn values_of(v: &formats::JobValues) -> Result<NSpec> {
    v.to_text().parse().map_err(CliError::Input)
}

/// Runs a job file. Relative paths resolve against the job file's directory,
/// then against the bundled data.
pub fn job(env: &Env, file: &str) -> Result<Report> {
    let input = env.loader.load(file)?;
    let spec = formats::job(&input)?;
    let dir = Path::new(file).parent().unwrap_or(Path::new(""));
    let sub = Env {
        loader: env.loader.relative_to(dir),
        pool: Arc::clone(&env.pool),
    };
    let n = values_of(&spec.n)?;
    let need = |field: Option<String>, name: &str| {
        field.ok_or_else(|| CliError::input(format!("{}: mode `{}` needs `{name}`", input.name, spec.mode)))
    };
    let cover_args = || -> Result<CoverArgs> {
        let grading = match (&spec.degrees, &spec.map) {
            (Some(d), None) => Grading::Degrees(d.iter().map(|(g, k)| (g.clone(), *k)).collect()),
            (None, Some(m)) => Grading::Map(m.clone()),
            _ => {
                return Err(CliError::input(format!(
                    "{}: give exactly one of `degrees` and `map`",
                    input.name
                )))
            }
        };
        Ok(CoverArgs {
            presentation: need(spec.presentation.clone(), "presentation")?,
            grading,
            n: n.clone(),
        })
    };
    let mut report = match spec.mode.as_str() {
        "h1" => cover(&sub, &cover_args()?)?,
        "fill" => fill(&sub, &cover_args()?, spec.fill.as_deref().unwrap_or(&[]))?,
        "sakuma" => sakuma(&sub, &cover_args()?)?,
        "hn" => hn(&sub, &cover_args()?)?,
        "branched" => {
            let k = match &spec.k {
                None => KSpec::All,
                Some(v) => v.to_text().parse().map_err(CliError::Input)?,
            };
            branched(&sub, &need(spec.delta.clone(), "delta")?, &n, k)?
        }
        other => {
            return Err(CliError::input(format!(
                "{}: unknown mode `{other}` (expected h1, fill, sakuma, hn or branched)",
                input.name
            )))
        }
    };
    report.param("job", input.name.as_str());
    report.param("mode", spec.mode.as_str());
    report.input(&input);
    Ok(report)
}
