use std::fmt::{self, Write as _};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_math::{display_with_decimal, parse_rational, Eigenvalue, Rational};
use crate::graphs::{CliqueSumVerdict, Graph, GraphTheoremReport};
use crate::params::{
    classical_fit, feasibility_report, krein_parameters, near_polygon_order, spectrum,
    IntersectionArray, MAX_ORDERING_SEARCH_DIAMETER,
};
use crate::theorem::{parameter_conditions, ClassificationEntry, ConditionVerdict};

/// Rational serialized as the string `p/q` (or `p` when integral).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Self(r)
    }
}

impl From<&Rational> for Exact {
    fn from(r: &Rational) -> Self {
        Self(r.clone())
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_with_decimal(&self.0))
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s)
            .map(Exact)
            .ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s:?}")))
    }
}

fn exacts(v: &[Rational]) -> Vec<Exact> {
    v.iter().map(Exact::from).collect()
}

fn join<T: fmt::Display>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub array: String,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    pub a: Vec<i64>,
    pub diameter: usize,
    pub valency: i64,
    pub k: Vec<String>,
    pub vertices: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    /// Set for rational eigenvalues.
    pub eigenvalue: Option<Exact>,
    /// Isolating interval for irrational eigenvalues.
    pub interval: Option<(Exact, Exact)>,
    pub multiplicity: Exact,
    /// Multiplicity and cosines were evaluated at the interval midpoint.
    pub approximate: bool,
    pub cosines: Vec<Exact>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KreinSummary {
    pub min_entry: Option<Exact>,
    pub nonnegative: Option<bool>,
    /// Each ordering listed as eigenvalues `theta_0, theta_1, ...`.
    pub q_polynomial_orderings: Option<Vec<Vec<Exact>>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalRow {
    pub parameters: String,
    pub d: usize,
    pub b: i64,
    pub alpha: Exact,
    pub sigma: Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearPolygonOrder {
    pub s: i64,
    pub t: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub condition: String,
    /// `None` when the condition needs an explicit graph.
    pub holds: Option<bool>,
    pub witness: String,
}

impl From<&ConditionVerdict> for VerdictRow {
    fn from(v: &ConditionVerdict) -> Self {
        Self {
            condition: v.condition.to_string(),
            holds: (!v.graph_level_required).then_some(v.holds),
            witness: v.witness.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub theta: Exact,
    /// Whether `theta` is the `E_1` of some Q-polynomial ordering; `None`
    /// when the ordering search was not run.
    pub q_polynomial_e1: Option<bool>,
    /// Common value of the evaluated conditions, `None` if they differ.
    pub unanimous: Option<bool>,
    pub verdicts: Vec<VerdictRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub status: String,
    pub detail: String,
    pub witnesses: Vec<(Exact, Exact)>,
}

/// Full parameter-level analysis of one intersection array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    pub spectrum: Vec<SpectrumRow>,
    pub krein: KreinSummary,
    pub classical: Vec<ClassicalRow>,
    pub near_polygon: Option<NearPolygonOrder>,
    pub theorem: Vec<TheoremRow>,
    pub feasibility: Vec<CheckRow>,
}

impl Report {
    pub fn analyze(arr: &IntersectionArray) -> Result<Self> {
        let input = InputEcho {
            array: arr.to_string(),
            b: arr.b_list().to_vec(),
            c: arr.c_list().to_vec(),
            a: arr.a_list(),
            diameter: arr.diameter(),
            valency: arr.valency(),
            k: arr.k_seq().iter().map(|k| k.to_string()).collect(),
            vertices: arr.vertex_count().to_string(),
        };
        let sd = spectrum(arr)?;
        let spectrum_rows = sd
            .entries
            .iter()
            .map(|e| SpectrumRow {
                eigenvalue: e.eigenvalue.exact().map(Exact::from),
                interval: match &e.eigenvalue {
                    Eigenvalue::Interval { lo, hi } => Some((lo.into(), hi.into())),
                    Eigenvalue::Exact(_) => None,
                },
                multiplicity: (&e.multiplicity).into(),
                approximate: e.approximate,
                cosines: exacts(&e.cosines.sigma),
            })
            .collect();

        let mut q_heads: Option<Vec<usize>> = None;
        let krein = match krein_parameters(&sd, arr) {
            Ok(table) => {
                let orderings = if arr.diameter() <= MAX_ORDERING_SEARCH_DIAMETER {
                    let orders = crate::params::q_polynomial_orderings(arr)?;
                    q_heads = Some(orders.iter().map(|o| o[1]).collect());
                    let ev = sd.exact_eigenvalues()?;
                    Some(orders.iter().map(|o| o.iter().map(|&i| Exact::from(&ev[i])).collect()).collect())
                } else {
                    None
                };
                KreinSummary {
                    min_entry: Some(table.min_entry().into()),
                    nonnegative: Some(table.is_nonnegative()),
                    note: orderings.is_none().then(|| {
                        format!("ordering search skipped for D > {MAX_ORDERING_SEARCH_DIAMETER}")
                    }),
                    q_polynomial_orderings: orderings,
                }
            }
            Err(e) => KreinSummary {
                min_entry: None,
                nonnegative: None,
                q_polynomial_orderings: None,
                note: Some(e.to_string()),
            },
        };

        let classical = classical_fit(arr)
            .into_iter()
            .map(|cp| ClassicalRow {
                parameters: cp.to_string(),
                d: cp.d,
                b: cp.b,
                alpha: cp.alpha.clone().into(),
                sigma: cp.sigma_cl.clone().into(),
            })
            .collect();

        let mut theorem = Vec::new();
        for (idx, entry) in sd.entries.iter().enumerate().skip(1) {
            let Some(theta) = entry.eigenvalue.exact() else { continue };
            let verdicts = parameter_conditions(arr, theta);
            theorem.push(TheoremRow {
                theta: theta.into(),
                q_polynomial_e1: q_heads.as_ref().map(|h| h.contains(&idx)),
                unanimous: crate::theorem::unanimity(&verdicts),
                verdicts: verdicts.iter().map(VerdictRow::from).collect(),
            });
        }

        let feasibility = feasibility_report(arr)?
            .checks
            .iter()
            .map(|c| CheckRow {
                name: c.name.to_string(),
                status: c.status.to_string(),
                detail: c.detail.clone(),
                witnesses: c.witnesses.iter().map(|(t, m)| (t.into(), m.into())).collect(),
            })
            .collect();

        Ok(Self {
            input,
            spectrum: spectrum_rows,
            krein,
            classical,
            near_polygon: near_polygon_order(arr).map(|(s, t)| NearPolygonOrder { s, t }),
            theorem,
            feasibility,
        })
    }

    pub fn feasible(&self) -> bool {
        self.feasibility.iter().all(|c| c.status == "PASS")
    }

    /// Rows where `theta` heads a Q-polynomial ordering of a feasible array
    /// but the evaluated conditions disagree. Infeasible arrays carry no
    /// graph, so disagreement there is not a violation.
    pub fn inconsistent_rows(&self) -> Vec<&TheoremRow> {
        if !self.feasible() {
            return Vec::new();
        }
        self.theorem
            .iter()
            .filter(|r| r.q_polynomial_e1 == Some(true) && r.unanimous.is_none())
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let i = &self.input;
        let _ = writeln!(s, "array {}  D={}  k={}  n={}", i.array, i.diameter, i.valency, i.vertices);
        let _ = writeln!(s, "  a = ({})  k_i = ({})", join(&i.a, ", "), i.k.join(", "));
        let _ = writeln!(s, "spectrum:");
        for row in &self.spectrum {
            let theta = match (&row.eigenvalue, &row.interval) {
                (Some(t), _) => t.to_string(),
                (None, Some((lo, hi))) => format!("in [{}, {}]", lo.0, hi.0),
                (None, None) => "?".into(),
            };
            let approx = if row.approximate { "  (approximate)" } else { "" };
            let _ = writeln!(
                s,
                "  theta = {theta}  m = {}  sigma = ({}){approx}",
                row.multiplicity,
                join(&row.cosines.iter().map(|c| c.0.clone()).collect::<Vec<_>>(), ", ")
            );
        }
        let _ = writeln!(s, "krein:");
        if let (Some(min), Some(nn)) = (&self.krein.min_entry, self.krein.nonnegative) {
            let _ = writeln!(s, "  min entry {min}  nonnegative: {}", yes_no(nn));
        }
        match &self.krein.q_polynomial_orderings {
            Some(orders) if orders.is_empty() => {
                let _ = writeln!(s, "  no Q-polynomial ordering");
            }
            Some(orders) => {
                for o in orders {
                    let shown: Vec<String> = o.iter().map(|e| e.0.to_string()).collect();
                    let _ = writeln!(s, "  Q-polynomial ordering ({})", shown.join(", "));
                }
            }
            None => {}
        }
        if let Some(note) = &self.krein.note {
            let _ = writeln!(s, "  {note}");
        }
        if self.classical.is_empty() {
            let _ = writeln!(s, "classical parameters: none");
        }
        for c in &self.classical {
            let _ = writeln!(s, "classical parameters: {}", c.parameters);
        }
        match self.near_polygon {
            Some(NearPolygonOrder { s: so, t }) => {
                let _ = writeln!(s, "near polygon order: ({so},{t})");
            }
            None => {
                let _ = writeln!(s, "near polygon order: none");
            }
        }
        let _ = writeln!(s, "theorem conditions:");
        for row in &self.theorem {
            let head = match row.q_polynomial_e1 {
                Some(true) => "E_1 of a Q-polynomial ordering",
                Some(false) => "not E_1 of a Q-polynomial ordering",
                None => "Q-polynomial status unknown",
            };
            let _ = writeln!(s, "  theta = {} ({head})", row.theta);
            if row.q_polynomial_e1 == Some(true) && row.unanimous.is_none() && !self.feasible() {
                let _ = writeln!(s, "    conditions disagree; the array fails feasibility, so no graph exists");
            }
            for v in &row.verdicts {
                let holds = match v.holds {
                    Some(true) => "true ",
                    Some(false) => "false",
                    None => "-    ",
                };
                let _ = writeln!(s, "    {:<5} {holds} {}", v.condition, v.witness);
            }
        }
        let _ = writeln!(s, "feasibility:");
        for c in &self.feasibility {
            let _ = writeln!(s, "  {:<4} {}: {}", c.status, c.name, c.detail);
            for (t, m) in &c.witnesses {
                let _ = writeln!(s, "       theta = {t}  m = {m}");
            }
        }
        s
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub c2: i64,
    pub parameters: String,
    pub array: String,
    pub verdict: String,
    pub family: Option<String>,
    pub citation: String,
    /// Eigenvalue and its non-integral multiplicity.
    pub witness: Option<(Exact, Exact)>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub diameter: usize,
    pub rows: Vec<ClassifyRow>,
}

impl ClassifyReport {
    pub fn new(diameter: usize, entries: &[ClassificationEntry]) -> Self {
        let rows = entries
            .iter()
            .map(|e| ClassifyRow {
                c2: e.c2,
                parameters: e.parameters.to_string(),
                array: e.array_text(),
                verdict: e.verdict.to_string(),
                family: e.family.map(|f| f.name()),
                citation: e.citation.clone(),
                witness: e.witness.as_ref().map(|(t, m)| (t.into(), m.into())),
                detail: e
                    .validation_error
                    .as_ref()
                    .map(|err| err.to_string())
                    .or_else(|| {
                        e.feasibility
                            .as_ref()
                            .and_then(|f| f.first_failure())
                            .map(|c| format!("{}: {}", c.name, c.detail))
                    }),
            })
            .collect();
        Self { diameter, rows }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "diameter {}", self.diameter);
        for r in &self.rows {
            let _ = write!(s, "  c2={}  {}  {}  {}", r.c2, r.array, r.parameters, r.verdict);
            if let Some(f) = &r.family {
                let _ = write!(s, "  {f}");
            }
            if let Some((t, m)) = &r.witness {
                let _ = write!(s, "  theta = {t}, m = {m}");
            }
            if !r.citation.is_empty() {
                let _ = write!(s, "  {}", r.citation);
            }
            let _ = writeln!(s);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphEcho {
    pub file: String,
    pub n: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliqueSummary {
    pub triangles: usize,
    pub zero_sum: usize,
    pub singular: usize,
    pub verdict: String,
    pub first_zero_sum: Option<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub input: GraphEcho,
    pub array: String,
    pub theta: Exact,
    pub multiplicity: Exact,
    pub trace: Exact,
    pub q_polynomial_orderings: Vec<Vec<usize>>,
    pub cliques: Option<CliqueSummary>,
    pub local_structure: Option<NearPolygonOrder>,
    pub local_failure: Option<String>,
    /// `(x, y, z, w, length)` of a kite, if any.
    pub kite: Option<(usize, usize, usize, usize, usize)>,
    pub conditions: Vec<VerdictRow>,
    pub unanimous: Option<bool>,
}

impl VerifyReport {
    pub fn new(file: &str, g: &Graph, r: &GraphTheoremReport) -> Self {
        Self {
            input: GraphEcho { file: file.to_string(), n: g.n(), edges: g.edge_count() },
            array: r.array.to_string(),
            theta: (&r.theta).into(),
            multiplicity: (&r.idempotent.m).into(),
            trace: r.idempotent.trace().into(),
            q_polynomial_orderings: r.orderings.clone(),
            cliques: r.cliques.as_ref().map(|c| CliqueSummary {
                triangles: c.triangles,
                zero_sum: c.zero_sum.len(),
                singular: c.singular.len(),
                verdict: match c.verdict {
                    CliqueSumVerdict::AllDependent => "all-dependent",
                    CliqueSumVerdict::SomeDependent => "some-dependent",
                    CliqueSumVerdict::None => "none",
                }
                .to_string(),
                first_zero_sum: c.zero_sum.first().copied(),
            }),
            local_structure: r.local.order.map(|(s, t)| NearPolygonOrder { s, t }),
            local_failure: r.local.reason.clone(),
            kite: r.kite.map(|k| (k.x, k.y, k.z, k.w, k.length)),
            conditions: r.verdicts.iter().map(VerdictRow::from).collect(),
            unanimous: r.unanimous(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {}: n={} edges={}", self.input.file, self.input.n, self.input.edges);
        let _ = writeln!(s, "distance-regular with array {}", self.array);
        let _ = writeln!(s, "theta = {}  m = {}  trace(E) = {}", self.theta, self.multiplicity, self.trace);
        let _ = writeln!(s, "E^2 = E and AE = theta E verified exactly");
        match &self.cliques {
            Some(c) => {
                let _ = writeln!(
                    s,
                    "3-cliques: {}  zero-sum: {}  singular Gram: {}  ({})",
                    c.triangles, c.zero_sum, c.singular, c.verdict
                );
            }
            None => {
                let _ = writeln!(s, "3-cliques: none");
            }
        }
        match (&self.local_structure, &self.local_failure) {
            (Some(o), _) => {
                let _ = writeln!(s, "local structure: disjoint cliques, order ({},{})", o.s, o.t);
            }
            (None, Some(reason)) => {
                let _ = writeln!(s, "local structure: {reason}");
            }
            (None, None) => {}
        }
        match self.kite {
            Some((x, y, z, w, l)) => {
                let _ = writeln!(s, "kite of length {l}: x={x} y={y} z={z} w={w}");
            }
            None => {
                let _ = writeln!(s, "kite-free");
            }
        }
        let _ = writeln!(s, "conditions:");
        for v in &self.conditions {
            let holds = if v.holds == Some(true) { "true " } else { "false" };
            let _ = writeln!(s, "  {:<5} {holds} {}", v.condition, v.witness);
        }
        let summary = match self.unanimous {
            Some(true) => "all six conditions hold",
            Some(false) => "none of the six conditions hold",
            None => "conditions disagree",
        };
        let _ = writeln!(s, "{summary}");
        s
    }
}

/// Exit code for an error: 3 for internal consistency failures, 2 for
/// everything attributable to the input.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InternalInconsistency(_) | Error::IdempotencyFailed(_) | Error::Overflow => 3,
        Error::CodeVerificationFailed(_) => 1,
        _ => 2,
    }
}
