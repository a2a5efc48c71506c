//! JSON file formats for presentations, maps, polynomials, matrices, slope
//! constants and job specs, plus JSON renderings of library values.

use std::collections::BTreeMap;

use foxhom_core::laurent::vars;
use foxhom_core::{
    AbelianGroup, AbelianizationMap, BigInt, LaurentMatrix, LaurentPoly, Presentation, SignedMonomial, Vars,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::data::Input;
use crate::error::{CliError, Context, Result};

fn from_json<'a, T: Deserialize<'a>>(input: &'a Input) -> Result<T> {
    serde_json::from_str(&input.text).map_err(|source| CliError::Json {
        path: input.name.clone(),
        source,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
    name: Option<String>,
    generators: Vec<String>,
    relators: Vec<String>,
}

/// `{"name", "generators", "relators"}`; relators are words or `lhs = rhs`.
pub fn presentation(input: &Input) -> Result<Presentation> {
    let file: PresentationFile = from_json(input)?;
    let name = file
        .name
        .unwrap_or_else(|| input.name.trim_end_matches(".json").to_string());
    let empty: [&str; 0] = [];
    let base = Presentation::parse(&name, &file.generators, &empty).context(|| input.name.clone())?;
    let mut relators = Vec::with_capacity(file.relators.len());
    for (i, text) in file.relators.iter().enumerate() {
        let w = foxhom_core::word::parse_relator(text, base.generators())
            .context(|| format!("{}: relator {}", input.name, i + 1))?;
        relators.push(w);
    }
    Presentation::new(name, file.generators, relators).context(|| input.name.clone())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ImageFile {
    #[serde(default = "plus_one")]
    sign: i64,
    exp: Vec<i32>,
}

fn plus_one() -> i64 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
    vars: Vec<String>,
    images: BTreeMap<String, ImageFile>,
}

/// Variable names for a bare map file with `n` exponents per image.
pub fn default_vars(n: usize) -> Vec<String> {
    match n {
        1..=3 => ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect(),
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// `{"vars", "images": {gen: {"sign", "exp"}}}` or the bare images object.
pub fn map(input: &Input) -> Result<AbelianizationMap> {
    let value: Value = from_json(input)?;
    let file: MapFile = if value.get("images").is_some() {
        from_json(input)?
    } else {
        let images: BTreeMap<String, ImageFile> = from_json(input)?;
        let n = images.values().next().map_or(0, |i| i.exp.len());
        MapFile {
            note: None,
            vars: default_vars(n),
            images,
        }
    };
    let v = vars(&file.vars);
    let mut pairs = Vec::with_capacity(file.images.len());
    for (g, image) in file.images {
        if image.exp.len() != v.len() {
            return Err(CliError::input(format!(
                "{}: image of `{g}` has {} exponents, expected {}",
                input.name,
                image.exp.len(),
                v.len()
            )));
        }
        let m = SignedMonomial::new(image.sign, image.exp).context(|| format!("{}: image of `{g}`", input.name))?;
        pairs.push((g, m));
    }
    AbelianizationMap::from_pairs(v, pairs).context(|| input.name.clone())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coef {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    exp: Vec<i32>,
    coef: Coef,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyFile {
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
    vars: Vec<String>,
    terms: Option<Vec<TermFile>>,
    expr: Option<String>,
}

/// `{"vars", "terms": [{"exp", "coef"}]}` and/or `{"vars", "expr"}`; when
/// both are present they must agree.
pub fn polynomial(input: &Input) -> Result<LaurentPoly> {
    let file: PolyFile = from_json(input)?;
    let v = vars(&file.vars);
    let from_terms = match file.terms {
        None => None,
        Some(terms) => {
            let mut pairs = Vec::with_capacity(terms.len());
            for (i, t) in terms.into_iter().enumerate() {
                let c = match t.coef {
                    Coef::Int(c) => BigInt::from(c),
                    Coef::Text(s) => s.trim().parse::<BigInt>().map_err(|_| {
                        CliError::input(format!("{}: term {}: bad coefficient `{s}`", input.name, i + 1))
                    })?,
                };
                pairs.push((t.exp, c));
            }
            Some(LaurentPoly::from_terms(&v, pairs).context(|| format!("{}: terms", input.name))?)
        }
    };
    let from_expr = match file.expr {
        None => None,
        Some(text) => Some(LaurentPoly::parse(&text, &v).context(|| format!("{}: expr", input.name))?),
    };
    match (from_terms, from_expr) {
        (Some(a), Some(b)) if a != b => Err(CliError::input(format!(
            "{}: terms ({a}) and expr ({b}) disagree",
            input.name
        ))),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(CliError::input(format!("{}: needs `terms` or `expr`", input.name))),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    #[serde(default)]
    #[allow(dead_code)]
    note: Option<String>,
    vars: Vec<String>,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<String>>,
}

/// `{"vars", "rows", "cols", "entries": [[expr]]}`.
pub fn matrix(input: &Input) -> Result<LaurentMatrix> {
    let file: MatrixFile = from_json(input)?;
    let v = vars(&file.vars);
    let mut entries = Vec::with_capacity(file.entries.len());
    for (i, row) in file.entries.iter().enumerate() {
        let mut parsed = Vec::with_capacity(row.len());
        for (j, text) in row.iter().enumerate() {
            parsed.push(
                LaurentPoly::parse(text, &v).context(|| format!("{}: entry ({}, {})", input.name, i + 1, j + 1))?,
            );
        }
        entries.push(parsed);
    }
    LaurentMatrix::new(&v, file.rows, file.cols, entries).context(|| input.name.clone())
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeripheralWord {
    pub printed: String,
    pub word: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Slope {
    pub name: String,
    pub word: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constants {
    #[serde(default)]
    pub note: Option<String>,
    pub nb_generators: Vec<String>,
    pub nb_words: BTreeMap<String, PeripheralWord>,
    pub slopes: Vec<Slope>,
}

pub fn constants(input: &Input) -> Result<Constants> {
    from_json(input)
}

/// `"n"` in a job file: an integer, a list, or range text such as `"3..9"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum JobValues {
    One(i64),
    Many(Vec<i64>),
    Text(String),
}

impl JobValues {
    pub fn to_text(&self) -> String {
        match self {
            JobValues::One(n) => n.to_string(),
            JobValues::Many(ns) => ns.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            JobValues::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    #[serde(default)]
    pub note: Option<String>,
    pub mode: String,
    pub presentation: Option<String>,
    pub degrees: Option<BTreeMap<String, i64>>,
    pub map: Option<String>,
    pub n: JobValues,
    pub fill: Option<Vec<String>>,
    pub delta: Option<String>,
    pub k: Option<JobValues>,
}

pub fn job(input: &Input) -> Result<JobFile> {
    from_json(input)
}

pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms_grlex_desc()
        .into_iter()
        .map(|(e, c)| json!({"exp": e, "coef": big(c)}))
        .collect();
    json!({"vars": p.vars().iter().collect::<Vec<_>>(), "terms": terms, "text": p.to_string()})
}

pub fn torsion_text(g: &AbelianGroup) -> String {
    let t: Vec<String> = g.torsion().iter().map(|d| d.to_string()).collect();
    format!("[{}]", t.join(", "))
}

pub fn group_json(g: &AbelianGroup) -> Value {
    let order = g.order().map_or(Value::Null, |o| big(&o));
    json!({
        "rank": g.rank(),
        "torsion": g.torsion().iter().map(big).collect::<Vec<_>>(),
        "order": order,
        "group": g.to_string(),
    })
}

pub fn vars_of(v: &Vars) -> Vec<String> {
    v.iter().cloned().collect()
}
