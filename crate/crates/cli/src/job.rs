//! One job per subcommand: normalized inputs, execution with re-verification,
//! and the JSON result.

use minram::constructions::{
    bms_search, frucht_field_recipe, function_field_family, realize, schinzel_search, Base, BmsBounds,
    ConstructionError, FfieldOptions, RealizeOptions, SchinzelParams, Strategy, SubgroupChoice,
};
use minram::galois::{galois_certify, ramified_primes, GaloisError, DEFAULT_FACTOR_BOUND, DEFAULT_PRIME_BUDGET};
use minram::graphs::GraphError;
use minram::permgroup::nq::evaluate_candidate;
use minram::permgroup::{find_normalizer_quotient, AbstractGroup, GammaKind, GroupError, PermGroup};
use minram::exact::IntPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::parse::{parse_poly, perms_from_cycles, GroupInput, ParseError};
use crate::report;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "input", rename_all = "kebab-case")]
pub enum Job {
    Schinzel {
        n: usize,
        a: Option<Vec<String>>,
        base: String,
        t_min: u64,
        t_max: u64,
        a_box: i64,
        require_proven: bool,
        experimental: bool,
    },
    Bms {
        n: usize,
        p_max: u64,
        q_max: u64,
        require_proven: bool,
    },
    Ffield {
        n: usize,
        q: u64,
        samples: usize,
        seed: u64,
    },
    Frucht {
        group: GroupInput,
        p_max: u64,
        emit_graph: bool,
    },
    Nq {
        group: GroupInput,
        n_min: usize,
        n_max: usize,
        kinds: Vec<String>,
    },
    Galois {
        coeffs: Vec<String>,
        prime_budget: usize,
    },
    Ramify {
        coeffs: Vec<String>,
        factor_bound: u64,
    },
    Realize {
        group: GroupInput,
        strategy: String,
        n: Option<usize>,
        n_max: usize,
        h: String,
        q: u64,
        seed: u64,
        p_max: u64,
        t_max: u64,
        require_proven: bool,
    },
}

impl Job {
    pub fn kind(&self) -> &'static str {
        match self {
            Job::Schinzel { .. } => "schinzel",
            Job::Bms { .. } => "bms",
            Job::Ffield { .. } => "ffield",
            Job::Frucht { .. } => "frucht",
            Job::Nq { .. } => "nq",
            Job::Galois { .. } => "galois",
            Job::Ramify { .. } => "ramify",
            Job::Realize { .. } => "realize",
        }
    }

    /// `{"kind": ..., "input": {...}}`.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("job serializes")
    }

    pub fn from_record(record: &Value) -> Result<Job, CliError> {
        let mut v = serde_json::Map::new();
        v.insert("kind".into(), record.get("kind").cloned().unwrap_or(Value::Null));
        v.insert("input".into(), record.get("input").cloned().unwrap_or(Value::Null));
        serde_json::from_value(Value::Object(v)).map_err(|e| CliError::Input(format!("record input: {e}")))
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Resource(m) => CliError::NotFound(format!("resource limit: {m}")),
            GroupError::NotNormal => CliError::Verification(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Budget(..) => CliError::NotFound(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::NotFound { .. } => CliError::NotFound(e.to_string()),
            ConstructionError::Verification(_) => CliError::Verification(e.to_string()),
            ConstructionError::Group(g) => g.into(),
            ConstructionError::Graph(g) => g.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn coeffs_of(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn poly_input(text: &str) -> Result<Vec<String>, CliError> {
    Ok(coeffs_of(&parse_poly(text)?))
}

fn poly_from(coeffs: &[String]) -> Result<IntPoly, CliError> {
    let c = coeffs
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|_| CliError::Input(format!("bad coefficient `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(minram::exact::Poly::from_vec(c))
}

fn big_list(xs: &[String]) -> Result<Vec<BigInt>, CliError> {
    xs.iter().map(|s| s.trim().parse().map_err(|_| CliError::Input(format!("bad integer `{s}`")))).collect()
}

/// `Q`, `Fq(T)`/`F2(T)`, or a monic irreducible polynomial for a number field.
pub enum BaseField {
    Rationals,
    FunctionField(Option<u64>),
    NumberField(IntPoly),
}

pub fn parse_base(text: &str) -> Result<BaseField, CliError> {
    let t = text.trim();
    match t {
        "Q" | "q" | "QQ" => return Ok(BaseField::Rationals),
        "Fq(T)" | "Fq(t)" => return Ok(BaseField::FunctionField(None)),
        _ => {}
    }
    if let Some(q) = t.strip_prefix('F').and_then(|r| r.strip_suffix("(T)").or_else(|| r.strip_suffix("(t)"))) {
        let q = q.trim_start_matches('_').parse().map_err(|_| CliError::Input(format!("bad base field `{t}`")))?;
        return Ok(BaseField::FunctionField(Some(q)));
    }
    Ok(BaseField::NumberField(parse_poly(t)?))
}

fn schinzel_base(text: &str) -> Result<Base, CliError> {
    match parse_base(text)? {
        BaseField::Rationals => Ok(Base::rationals()),
        BaseField::NumberField(m) => Ok(Base::new(m)?),
        BaseField::FunctionField(_) => {
            Err(CliError::Input("the Schinzel family is implemented over number fields only; use `ffield`".into()))
        }
    }
}

fn abstract_group(g: &GroupInput) -> Result<AbstractGroup, CliError> {
    Ok(g.spec()?.to_abstract()?)
}

fn parse_strategy(s: &str) -> Result<Strategy, CliError> {
    match s {
        "schinzel" => Ok(Strategy::Schinzel),
        "bms" => Ok(Strategy::Bms),
        "ffield" => Ok(Strategy::Ffield),
        _ => Err(CliError::Input(format!("unknown strategy `{s}`"))),
    }
}

fn parse_kinds(ks: &[String]) -> Result<Vec<GammaKind>, CliError> {
    ks.iter()
        .map(|k| match k.as_str() {
            "S" | "s" => Ok(GammaKind::S),
            "A" | "a" => Ok(GammaKind::A),
            _ => Err(CliError::Input(format!("unknown group kind `{k}` (use S or A)"))),
        })
        .collect()
}

fn check_hit(g: &AbstractGroup, hit: &minram::permgroup::NqHit) -> Result<(), CliError> {
    let gamma = hit.kind.group(hit.n);
    let h = PermGroup::new(hit.n, hit.h.gens().to_vec())?;
    let again = evaluate_candidate(g, hit.n, hit.kind, &gamma, &h)?
        .ok_or_else(|| CliError::Verification("normalizer quotient does not re-verify".into()))?;
    if !again.normalizer.same_group(&hit.normalizer) || !hit.quotient.group.verify_hom(g, &hit.iso) {
        return Err(CliError::Verification("normalizer or quotient witness".into()));
    }
    Ok(())
}

/// Runs the job, re-verifies every certificate claim, and returns the result.
pub fn execute(job: &Job) -> Result<Value, CliError> {
    match job {
        Job::Schinzel { n, a, base, t_min, t_max, a_box, require_proven, experimental } => {
            let base = schinzel_base(base)?;
            let mut p = SchinzelParams::new(*n);
            p.base = base.clone();
            p.t_min = *t_min;
            p.t_max = *t_max;
            p.a_box = *a_box;
            p.require_proven = *require_proven;
            p.experimental = *experimental;
            let a = a.as_deref().map(big_list).transpose()?;
            let inst = schinzel_search(&p, a.as_deref())?;
            inst.verify(&base)?;
            Ok(report::schinzel(&inst))
        }
        Job::Bms { n, p_max, q_max, require_proven } => {
            let b = BmsBounds { p_max: *p_max, q_max: *q_max, require_proven: *require_proven, ..BmsBounds::default() };
            let t = bms_search(*n, &b)?;
            t.verify()?;
            Ok(report::bms(&t))
        }
        Job::Ffield { n, q, samples, seed } => {
            let inst = function_field_family(*n, *q, &FfieldOptions { samples: *samples, seed: *seed })?;
            inst.verify()?;
            Ok(report::ffield(&inst))
        }
        Job::Frucht { group, p_max, emit_graph } => {
            let (g, gens) = group.spec()?.with_generators()?;
            let b = BmsBounds { p_max: *p_max, q_max: *p_max, ..BmsBounds::default() };
            let r = frucht_field_recipe(&g, &gens, &b)?;
            r.verify(&g)?;
            Ok(report::frucht(&r, *emit_graph))
        }
        Job::Nq { group, n_min, n_max, kinds } => {
            let g = abstract_group(group)?;
            let kinds = parse_kinds(kinds)?;
            let budget = minram::permgroup::subgroups::EnumBudget::default();
            let s = find_normalizer_quotient(&g, *n_min, *n_max, &kinds, budget)?;
            for hit in &s.hits {
                check_hit(&g, hit)?;
            }
            if s.hits.is_empty() {
                return Err(CliError::NotFound(format!(
                    "no (Gamma, H) with N(H)/H isomorphic to G for n <= {n_max}{}",
                    if s.skipped.is_empty() { String::new() } else { format!("; degrees {:?} exceed the enumeration budget", s.skipped) }
                )));
            }
            Ok(json!({
                "group_order": g.order(),
                "hits": s.hits.iter().map(report::nq_hit).collect::<Vec<_>>(),
                "complete": s.complete,
                "skipped": s.skipped,
            }))
        }
        Job::Galois { coeffs, prime_budget } => {
            let f = poly_from(coeffs)?;
            let c = galois_certify(&f, *prime_budget)?;
            if !c.recheck(&f) {
                return Err(CliError::Verification("Galois certificate does not re-check".into()));
            }
            Ok(json!({ "f": report::poly(&f), "certificate": report::galois(&c) }))
        }
        Job::Ramify { coeffs, factor_bound } => {
            let f = poly_from(coeffs)?;
            let r = ramified_primes(&f, *factor_bound)?;
            if !r.recheck(&f) {
                return Err(CliError::Verification("ramification report does not re-check".into()));
            }
            Ok(json!({ "f": report::poly(&f), "report": report::ramification(&r) }))
        }
        Job::Realize { group, strategy, n, n_max, h, q, seed, p_max, t_max, require_proven } => {
            let g = abstract_group(group)?;
            let strategy = parse_strategy(strategy)?;
            let choice = match h.as_str() {
                "auto" => SubgroupChoice::Auto,
                "an-1" | "A(n-1)" => SubgroupChoice::AnMinus1,
                gens => {
                    let n = n.ok_or_else(|| CliError::Input("an explicit H needs --n".into()))?;
                    SubgroupChoice::Explicit(perms_from_cycles(gens, Some(n))?)
                }
            };
            let mut schinzel = SchinzelParams::new(2);
            schinzel.t_max = *t_max;
            schinzel.require_proven = *require_proven;
            let opts = RealizeOptions {
                strategy,
                n: *n,
                n_max: *n_max,
                choice,
                bms: BmsBounds { p_max: *p_max, q_max: *p_max, require_proven: *require_proven, ..BmsBounds::default() },
                schinzel,
                ffield_q: *q,
                ffield: FfieldOptions { seed: *seed, ..FfieldOptions::default() },
                ..RealizeOptions::default()
            };
            let c = realize(&g, &opts)?;
            c.verify(&g, opts.factor_bound)?;
            Ok(report::realization(&c))
        }
    }
}

pub const DEFAULT_GALOIS_BUDGET: usize = DEFAULT_PRIME_BUDGET;
pub const DEFAULT_RAMIFY_BOUND: u64 = DEFAULT_FACTOR_BOUND;
