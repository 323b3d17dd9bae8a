//! The JSON report schema (versioned with `"schema": 1`) and the engine
//! runners that fill it.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use polyforge_core::cpr::{build_cpr, CprFamily};
use polyforge_core::families::FamilyId;
use polyforge_core::fp::{coset_perm_rep, todd_coxeter, FpError, Presentation};
use polyforge_core::perm::PermError;
use polyforge_core::sggi::{generating_rank_mod2, make_sggi};

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<String>,
    pub tasks: Vec<TaskRecord>,
}

impl Report {
    pub fn new(volatile: bool, tasks: Vec<TaskRecord>) -> Report {
        Report {
            schema: 1,
            tool: "polyforge",
            version: env!("CARGO_PKG_VERSION"),
            generated_at: volatile.then(unix_timestamp),
            tasks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.tasks.iter().all(|t| t.verdict == Verdict::Pass)
    }

    pub fn any_resource_error(&self) -> bool {
        self.tasks.iter().any(|t| t.resource_error)
    }
}

fn unix_timestamp() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("{secs}")
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schlafli: Option<(u64, u64)>,
    /// which defining law produced the expected values
    pub source: &'static str,
}

#[derive(Serialize, Default)]
pub struct EngineResult {
    pub order: u64,
    pub schlafli: (u64, u64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Serialize)]
pub struct Checks {
    pub order_ok: bool,
    pub type_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_ok: Option<bool>,
}

#[derive(Serialize)]
pub struct TaskRecord {
    pub family: String,
    pub expected: Expected,
    pub engines: BTreeMap<&'static str, EngineResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub resource_error: bool,
}

impl TaskRecord {
    pub fn summary_line(&self) -> String {
        let mut line = format!("{:<18}", self.family);
        if let Some(fp) = self.engines.get("fp") {
            line.push_str(&format!(
                " fp: order {} type {{{},{}}}",
                fp.order, fp.schlafli.0, fp.schlafli.1
            ));
        }
        if let Some(perm) = self.engines.get("perm") {
            line.push_str(&format!(
                " perm: order {} type {{{},{}}} deg {}",
                perm.order,
                perm.schlafli.0,
                perm.schlafli.1,
                perm.degree.unwrap_or(0)
            ));
            if let Some(i) = perm.intersection {
                line.push_str(if i { " C-group" } else { " NOT-C-group" });
            }
        }
        match self.verdict {
            Verdict::Pass => line.push_str("  [pass]"),
            Verdict::Fail => line.push_str("  [FAIL]"),
            Verdict::Error => {
                line.push_str(&format!("  [ERROR: {}]", self.error.as_deref().unwrap_or("?")))
            }
        }
        line
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Engine {
    Fp,
    Perm,
    Both,
}

impl Engine {
    pub fn parse(text: &str) -> Option<Engine> {
        match text {
            "fp" => Some(Engine::Fp),
            "perm" => Some(Engine::Perm),
            "both" => Some(Engine::Both),
            _ => None,
        }
    }

    /// Default policy: cross-check both engines while the regular
    /// representation stays desk-sized, permutations only above that.
    pub fn default_for(id: &FamilyId) -> Engine {
        match id.expected_order() {
            Some(order) if order <= 1 << 12 => Engine::Both,
            _ => Engine::Perm,
        }
    }
}

fn is_resource(e: &TaskError) -> bool {
    matches!(
        e,
        TaskError::Fp(FpError::MaxCosetsExceeded { .. })
            | TaskError::Perm(PermError::ChainCapExceeded { .. })
            | TaskError::Perm(PermError::ClosureCapExceeded { .. })
    )
}

#[derive(Debug)]
pub enum TaskError {
    Fp(FpError),
    Perm(PermError),
    Other(String),
}

impl std::fmt::Display for TaskError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TaskError::Fp(e) => write!(f, "{e}"),
            TaskError::Perm(e) => write!(f, "{e}"),
            TaskError::Other(m) => write!(f, "{m}"),
        }
    }
}

impl From<FpError> for TaskError {
    fn from(e: FpError) -> Self {
        TaskError::Fp(e)
    }
}

impl From<PermError> for TaskError {
    fn from(e: PermError) -> Self {
        TaskError::Perm(e)
    }
}

impl From<polyforge_core::sggi::SggiError> for TaskError {
    fn from(e: polyforge_core::sggi::SggiError) -> Self {
        use polyforge_core::sggi::SggiError;
        match e {
            SggiError::Perm(p) => TaskError::Perm(p),
            SggiError::Fp(p) => TaskError::Fp(p),
            other => TaskError::Other(other.to_string()),
        }
    }
}

fn fp_engine(
    p: &Presentation,
    max_cosets: usize,
    volatile: bool,
) -> Result<EngineResult, TaskError> {
    let start = Instant::now();
    let order = p.group_order(max_cosets)?;
    let p1 = p.element_order(&p.relator("r0*r1").expect("fixed word"), order, max_cosets)?;
    let p2 = p.element_order(&p.relator("r1*r2").expect("fixed word"), order, max_cosets)?;
    Ok(EngineResult {
        order,
        schlafli: (p1, p2),
        millis: volatile.then(|| start.elapsed().as_millis()),
        ..EngineResult::default()
    })
}

/// The permutation realization: the transcribed triple when the family has
/// one, otherwise the regular representation extracted from the coset table.
fn perm_engine(
    id: &FamilyId,
    p: &Presentation,
    max_cosets: usize,
    volatile: bool,
) -> Result<EngineResult, TaskError> {
    let start = Instant::now();
    let gens = match cpr_family(id) {
        Some((family, n)) if n >= family.min_n() => build_cpr(family, n)
            .map(|t| t.generators().to_vec())
            .map_err(|e| TaskError::Other(e.to_string()))?,
        _ => {
            let table = todd_coxeter(p, &[], max_cosets)?;
            coset_perm_rep(&table)?
        }
    };
    let triple = make_sggi([gens[0].clone(), gens[1].clone(), gens[2].clone()])?;
    let ty = triple.schlafli_type();
    let order = triple.order()?;
    let intersection = triple.check_intersection_property()?;
    // the mod-2 rank is only meaningful for 2-groups
    let rank = if order.is_power_of_two() {
        Some(generating_rank_mod2(triple.group())?)
    } else {
        None
    };
    Ok(EngineResult {
        order,
        schlafli: (ty.p1, ty.p2),
        degree: Some(triple.degree()),
        intersection: Some(intersection),
        rank,
        degenerate: Some(triple.is_degenerate()),
        millis: volatile.then(|| start.elapsed().as_millis()),
    })
}

pub fn cpr_family(id: &FamilyId) -> Option<(CprFamily, u32)> {
    match *id {
        FamilyId::G { i: 1, n } => Some((CprFamily::G1, n)),
        FamilyId::G { i: 2, n } => Some((CprFamily::G2, n)),
        FamilyId::G { i: 4, n } => Some((CprFamily::G4, n)),
        FamilyId::G { i: 6, n } => Some((CprFamily::G6, n)),
        FamilyId::G { i: 7, n } => Some((CprFamily::G7, n)),
        FamilyId::G { i: 8, n } => Some((CprFamily::G8, n)),
        _ => None,
    }
}

/// Builds, measures and judges one family instance.
pub fn run_task(id: &FamilyId, engine: Engine, max_cosets: usize, volatile: bool) -> TaskRecord {
    let family = id.to_string();
    let expected = Expected {
        order: id.expected_order(),
        schlafli: id.expected_type(),
        source: id.expected_source(),
    };
    let mut engines = BTreeMap::new();
    let outcome = (|| -> Result<Checks, TaskError> {
        let p = id.build().map_err(|e| TaskError::Other(e.to_string()))?;
        if matches!(engine, Engine::Fp | Engine::Both) {
            engines.insert("fp", fp_engine(&p, max_cosets, volatile)?);
        }
        if matches!(engine, Engine::Perm | Engine::Both) {
            engines.insert("perm", perm_engine(id, &p, max_cosets, volatile)?);
        }
        let against_expected = |r: &EngineResult| {
            (
                expected.order.is_none_or(|o| o == r.order),
                expected.schlafli.is_none_or(|t| t == r.schlafli),
            )
        };
        let mut order_ok = true;
        let mut type_ok = true;
        for r in engines.values() {
            let (o, t) = against_expected(r);
            order_ok &= o;
            type_ok &= t;
        }
        let expect_c_group = id.expected_c_group();
        let intersection_ok = engines
            .get("perm")
            .map(|r| r.intersection == Some(expect_c_group));
        let rank_ok = match engines.get("perm").and_then(|r| r.rank) {
            Some(rank) if expect_c_group => Some(rank == 3),
            _ => None,
        };
        let cross_ok = match (engines.get("fp"), engines.get("perm")) {
            (Some(a), Some(b)) => Some(a.order == b.order && a.schlafli == b.schlafli),
            _ => None,
        };
        Ok(Checks {
            order_ok,
            type_ok,
            intersection_ok,
            rank_ok,
            cross_ok,
        })
    })();
    match outcome {
        Ok(checks) => {
            let pass = checks.order_ok
                && checks.type_ok
                && checks.intersection_ok.unwrap_or(true)
                && checks.rank_ok.unwrap_or(true)
                && checks.cross_ok.unwrap_or(true);
            TaskRecord {
                family,
                expected,
                engines,
                checks: Some(checks),
                verdict: if pass { Verdict::Pass } else { Verdict::Fail },
                error: None,
                resource_error: false,
            }
        }
        Err(e) => TaskRecord {
            family,
            expected,
            engines,
            checks: None,
            verdict: Verdict::Error,
            error: Some(e.to_string()),
            resource_error: is_resource(&e),
        },
    }
}
