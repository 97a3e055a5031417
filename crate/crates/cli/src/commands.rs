use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use sll_core::curvature::{berger_algebra, verify_metric_theorem, verify_theta2_corollary};
use sll_core::form::verify_orthogonal_split;
use sll_core::lattice::{
    check_four_sums, closure, five_sum_invariant, legend, to_dot, verify_theta2_lattice,
    verify_lattice_homogeneity, Labels, DEFAULT_MAX_ELEMENTS,
};
use sll_core::representation::{
    invariance_algebra, lie_closure, verify_eigen_splittings, verify_projector_skew_part, verify_four_part_structure,
};
use sll_core::sample::{
    random_curvature, random_invariant_generators, random_reflexive, random_two_sum,
    ReflexiveProfile,
};
use sll_core::{
    FieldSpec, FormKind, MatrixLieAlgebra, OracleBounds, Status, Subspace, TheoremReport,
    TwoSumDecomposition,
};

use crate::error::{CliError, Result};
use crate::instance::{Instance, InstanceFile};

pub const MAX_ELEMENTS_VAR: &str = "SLL_MAX_ELEMENTS";

/// The closure cap: `SLL_MAX_ELEMENTS` if set, else the library default.
pub fn default_max_elements() -> Result<usize> {
    match std::env::var(MAX_ELEMENTS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Param(format!("{MAX_ELEMENTS_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_ELEMENTS),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub field: String,
    pub dim: usize,
    /// Dimension of each named subspace.
    pub subspaces: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<FormKind>,
    pub algebra_generators: usize,
    pub curvature_tensors: usize,
}

impl InstanceSummary {
    fn of(inst: &Instance) -> Self {
        InstanceSummary {
            field: inst.field.to_string(),
            dim: inst.dim,
            subspaces: inst
                .subspaces
                .iter()
                .map(|(k, v)| (k.clone(), v.dim()))
                .collect(),
            form: inst.form.as_ref().map(|f| f.kind()),
            algebra_generators: inst.algebra.len(),
            curvature_tensors: inst.curvature.len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub instance: InstanceSummary,
    pub reports: Vec<TheoremReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
    pub elapsed_ms: u128,
}

impl ReportDocument {
    fn new(command: &str, inst: &Instance) -> Self {
        ReportDocument {
            command: command.to_string(),
            instance: InstanceSummary::of(inst),
            reports: Vec::new(),
            data: None,
            notices: Vec::new(),
            truncated: false,
            elapsed_ms: 0,
        }
    }

    pub fn failures(&self) -> usize {
        self.reports.iter().map(|r| r.failures().count()).sum()
    }

    /// 5 on any failed clause, 4 on an unaccepted truncation, else 0.
    pub fn exit_code(&self, allow_truncated: bool) -> i32 {
        if self.failures() > 0 {
            5
        } else if self.truncated && !allow_truncated {
            4
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.instance;
        writeln!(f, "{}: {} dim {}", self.command, i.field, i.dim)?;
        for n in &self.notices {
            writeln!(f, "note: {n}")?;
        }
        for r in &self.reports {
            write!(f, "{r}")?;
        }
        if let Some(d) = &self.data {
            writeln!(f, "{}", serde_json::to_string_pretty(d).unwrap())?;
        }
        let count = |s: Status| {
            self.reports
                .iter()
                .flat_map(|r| &r.clauses)
                .filter(|c| c.status == s)
                .count()
        };
        writeln!(
            f,
            "{} passed, {} failed, {} inapplicable ({} ms)",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Inapplicable),
            self.elapsed_ms
        )
    }
}

fn subspace_json(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s })
}

fn chain_json(chain: &[Subspace]) -> Value {
    Value::Array(chain.iter().map(subspace_json).collect())
}

pub fn decompose(inst: &Instance) -> Result<ReportDocument> {
    let start = Instant::now();
    let dec = inst.decomposition()?;
    let mut doc = ReportDocument::new("decompose", inst);
    let split = dec.canonical_split();
    let chains = dec.chains();
    doc.data = Some(json!({
        "theta": dec.theta(),
        "nilpotency_index": dec.nilpotency_index(),
        "split": {
            "f_e": subspace_json(&split.f_e),
            "f_tau": subspace_json(&split.f_tau),
            "ftilde": subspace_json(&split.ftilde),
        },
        "chains": {
            "f": chain_json(&chains.f),
            "ftilde": chain_json(&chains.ftilde),
            "f_e": chain_json(&chains.f_e),
            "f_tau": chain_json(&chains.f_tau),
            "ftilde_e": chain_json(&chains.ftilde_e),
            "ftilde_tau": chain_json(&chains.ftilde_tau),
        },
    }));
    doc.elapsed_ms = start.elapsed().as_millis();
    Ok(doc)
}

#[derive(Debug, Clone, Copy)]
pub struct LatticeOptions {
    pub max_elements: usize,
    pub labels: Labels,
}

pub struct LatticeOutput {
    pub report: ReportDocument,
    pub dot: String,
    pub legend: String,
}

/// Seeds are every named subspace, plus `W1`/`W2` when derived from a form.
fn lattice_seeds(inst: &Instance, dec: Option<&TwoSumDecomposition>) -> Vec<Subspace> {
    let mut seeds: Vec<Subspace> = inst.subspaces.values().cloned().collect();
    if let Some(dec) = dec {
        for g in dec.generators() {
            if !seeds.contains(&g) {
                seeds.push(g);
            }
        }
    }
    seeds
}

pub fn lattice(inst: &Instance, opts: LatticeOptions) -> Result<LatticeOutput> {
    let start = Instant::now();
    if inst.subspaces.is_empty() {
        return Err(CliError::Param("no subspaces to close".into()));
    }
    let dec = if inst.has_decomposition() {
        Some(inst.decomposition()?)
    } else {
        None
    };
    let seeds = lattice_seeds(inst, dec.as_ref());
    let distinct: std::collections::HashSet<&Subspace> = seeds.iter().collect();
    if distinct.len() > opts.max_elements {
        return Err(sll_core::Error::TruncatedLattice.into());
    }
    let lat = closure(&seeds, opts.max_elements)?;
    let mut doc = ReportDocument::new("lattice", inst);
    doc.truncated = lat.truncated;
    let mut data = json!({
        "elements": lat.len(),
        "cover_edges": lat.cover_edges.len(),
        "truncated": lat.truncated,
    });
    if lat.truncated {
        doc.notices.push(format!(
            "closure stopped at {} elements (cap {})",
            lat.len(),
            opts.max_elements
        ));
    }
    if let Some(dec) = &dec {
        if !lat.truncated {
            doc.reports
                .push(verify_lattice_homogeneity(&lat, &dec.canonical_split())?);
        }
        if check_four_sums(dec).is_ok() {
            let inv = five_sum_invariant(dec)?;
            data["five_sum_invariant_factors"] = json!(inv
                .invariant_factors
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>());
        }
    }
    doc.data = Some(data);
    doc.elapsed_ms = start.elapsed().as_millis();
    Ok(LatticeOutput {
        report: doc,
        dot: to_dot(&lat, opts.labels),
        legend: legend(&lat),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TwoSum,
    Reflexive,
    Representation,
    Curvature,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "twosum" => Suite::TwoSum,
            "reflexive" => Suite::Reflexive,
            "representation" => Suite::Representation,
            "curvature" => Suite::Curvature,
            "all" => Suite::All,
            other => return Err(CliError::Param(format!("unknown suite {other:?}"))),
        })
    }
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub max_elements: usize,
    pub bounds: OracleBounds,
    pub assert_indecomposable: bool,
}

fn inapplicable_report(title: &str, note: &str) -> TheoremReport {
    let mut r = TheoremReport::new(title);
    r.inapplicable("suite", title, note);
    r
}

/// The algebra used by the representation suite: explicit generators, else
/// the curvature algebra, else every skew map preserving `V1` and `V2`.
fn representation_algebra(
    inst: &Instance,
    dec: &TwoSumDecomposition,
    notices: &mut Vec<String>,
) -> Result<MatrixLieAlgebra> {
    let form = inst.form.as_ref().expect("form checked by caller");
    if !inst.algebra.is_empty() {
        return Ok(lie_closure(inst.field, inst.dim, &inst.algebra)?);
    }
    if !inst.curvature.is_empty() {
        notices.push("representation suite uses the algebra generated by the curvature".into());
        return Ok(berger_algebra(inst.field, inst.dim, &inst.curvature)?);
    }
    notices.push(
        "representation suite uses every skew map preserving V1 and V2 as the algebra".into(),
    );
    Ok(invariance_algebra(
        inst.field,
        inst.dim,
        &[dec.v1(), dec.v2()],
        Some(form),
    )?)
}

pub fn verify(inst: &Instance, opts: VerifyOptions) -> Result<ReportDocument> {
    let start = Instant::now();
    let dec = inst.decomposition()?;
    let mut doc = ReportDocument::new("verify", inst);
    let suite = opts.suite;

    if suite.includes(Suite::TwoSum) {
        doc.reports.push(sll_core::twosum::verify_two_sum_identities(&dec));
        let lat = closure(&dec.generators(), opts.max_elements)?;
        if lat.truncated {
            doc.reports.push(inapplicable_report(
                "lattice elements split along the canonical decomposition",
                "closure truncated",
            ));
        } else {
            doc.reports
                .push(verify_lattice_homogeneity(&lat, &dec.canonical_split())?);
        }
        let theta = dec.theta();
        if (&theta * &theta).is_zero() && check_four_sums(&dec).is_ok() {
            doc.reports.push(verify_theta2_lattice(&dec, opts.max_elements)?);
        }
    }

    let form = inst.form.as_ref();
    if suite.includes(Suite::Reflexive) {
        match form {
            Some(form) => doc.reports.push(verify_orthogonal_split(form, &dec)?),
            None => doc.reports.push(inapplicable_report(
                "orthogonal canonical split for a reflexive form",
                "the instance has no form",
            )),
        }
    }

    if suite.includes(Suite::Representation) {
        match form {
            Some(form) => {
                let alg = representation_algebra(inst, &dec, &mut doc.notices)?;
                doc.reports.push(verify_eigen_splittings(&dec, Some(form))?);
                doc.reports
                    .push(verify_projector_skew_part(form, dec.v1(), dec.v2(), Some(&alg))?);
                doc.reports.push(verify_four_part_structure(form, &dec, &alg)?);
            }
            None => {
                doc.reports.push(verify_eigen_splittings(&dec, None)?);
                doc.reports.push(inapplicable_report(
                    "metric representation theorems",
                    "the instance has no form",
                ));
            }
        }
    }

    if suite.includes(Suite::Curvature) {
        match form {
            Some(form) if !inst.curvature.is_empty() => {
                doc.reports
                    .push(verify_metric_theorem(form, &dec, &inst.curvature)?);
                doc.reports.push(verify_theta2_corollary(
                    form,
                    &dec,
                    &inst.curvature,
                    opts.bounds,
                    opts.assert_indecomposable,
                )?);
            }
            _ => doc.reports.push(inapplicable_report(
                "curvature theorems",
                "the instance needs a form and curvature tensors",
            )),
        }
    }
    doc.elapsed_ms = start.elapsed().as_millis();
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    TwoSum,
    Reflexive,
    Curvature,
}

impl FromStr for Kind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Kind> {
        Ok(match s {
            "twosum" => Kind::TwoSum,
            "reflexive" => Kind::Reflexive,
            "curvature" => Kind::Curvature,
            other => return Err(CliError::Param(format!("unknown kind {other:?}"))),
        })
    }
}

pub const MAX_RANDOM_DIM: usize = 12;
pub const MAX_CURVATURE_DIM: usize = 6;

/// Deterministic instance from the seed.
pub fn random(field: FieldSpec, dim: usize, seed: u64, kind: Kind) -> Result<InstanceFile> {
    let cap = match kind {
        Kind::Curvature => MAX_CURVATURE_DIM,
        _ => MAX_RANDOM_DIM,
    };
    if dim == 0 || dim > cap {
        return Err(CliError::Param(format!("dim must lie in 1..={cap}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let named = |dec: &TwoSumDecomposition| -> Vec<(&'static str, Subspace)> {
        vec![
            ("V1", dec.v1().clone()),
            ("V2", dec.v2().clone()),
            ("W1", dec.w1().clone()),
            ("W2", dec.w2().clone()),
        ]
    };
    let file = match kind {
        Kind::TwoSum => {
            let dec = random_two_sum(field, dim, &mut rng);
            let subs = named(&dec);
            let refs: Vec<(&str, &Subspace)> = subs.iter().map(|(n, s)| (*n, s)).collect();
            InstanceFile::from_parts(field, dim, &refs, None, &[], &[])
        }
        Kind::Reflexive => {
            let profile = if rand::Rng::random_bool(&mut rng, 0.5) {
                ReflexiveProfile::Isotropic
            } else {
                ReflexiveProfile::Generic
            };
            let inst = random_reflexive(field, dim, profile, &mut rng);
            let gens = random_invariant_generators(&inst, 2, &mut rng)?;
            let subs = named(&inst.decomposition);
            let refs: Vec<(&str, &Subspace)> = subs.iter().map(|(n, s)| (*n, s)).collect();
            InstanceFile::from_parts(field, dim, &refs, Some(&inst.form), &gens, &[])
        }
        Kind::Curvature => {
            let inst = random_curvature(field, dim, &mut rng)?;
            let subs = named(&inst.decomposition);
            let refs: Vec<(&str, &Subspace)> = subs.iter().map(|(n, s)| (*n, s)).collect();
            InstanceFile::from_parts(field, dim, &refs, Some(&inst.form), &[], &inst.tensors)
        }
    };
    Ok(file)
}
