//! Aggregated analysis of one group, with text and JSON renderings.
//!
//! In JSON every number is a string (`"3"`, `"1/2"`) so values stay exact.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::calabi::{is_connective, CalabiError, CalabiStep, ConnectivityReport};
use crate::crystal::CrystalGroup;
use crate::finite::{CoprimeTree, FiniteGroup, FiniteGroupError};
use crate::format::{export_group, int_list_json, matrix_json, rat_vector_json};
use crate::invariants::{
    abelianization, character_count, fixed_lattice, fixed_torus, AbelianInvariants, CharacterCount,
    FixedTorusSubgroup,
};

/// Points of the fixed torus are written additively; this is the translation
/// to the multiplicative picture.
pub const TORUS_POINT_NOTE: &str =
    "points are written additively in [0,1)^k; the coordinate 1/2 corresponds to the multiplicative value -1";

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub name: String,
    pub dim: usize,
    pub holonomy_order: usize,
    pub holonomy_id: String,
    pub torsion_free: bool,
    pub h1: AbelianInvariants,
    /// Rank of the center, which is the fixed lattice.
    pub center_rank: usize,
    pub fixed_torus: FixedTorusSubgroup,
    pub characters: CharacterCount,
    pub connectivity: Result<ConnectivityReport, CalabiError>,
    pub primitive: Result<bool, FiniteGroupError>,
    pub coprime_class: Result<Option<CoprimeTree>, FiniteGroupError>,
}

pub fn analyze(g: &CrystalGroup) -> AnalysisReport {
    let d = FiniteGroup::from_holonomy(g);
    AnalysisReport {
        name: g.name().to_string(),
        dim: g.dim(),
        holonomy_order: g.holonomy_order(),
        holonomy_id: d.structure_id(),
        torsion_free: g.is_torsion_free(),
        h1: abelianization(g),
        center_rank: fixed_lattice(g).rank(),
        fixed_torus: fixed_torus(g),
        characters: character_count(g),
        connectivity: is_connective(g),
        primitive: d.is_primitive(),
        coprime_class: d.in_coprime_class(),
    }
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

pub fn h1_json(h: &AbelianInvariants) -> Value {
    json!({
        "rank": s(h.rank),
        "torsion": int_list_json(&h.torsion),
        "text": h.to_string(),
    })
}

pub fn fixed_torus_json(t: &FixedTorusSubgroup) -> Value {
    json!({
        "rank": s(t.rank),
        "component_orders": int_list_json(&t.component_orders),
        "component_count": s(t.component_count()),
        "points": t.points.as_ref().map(|p| p.iter().map(rat_vector_json).collect::<Vec<_>>()),
        "note": TORUS_POINT_NOTE,
    })
}

/// Generator data plus the full holonomy with coset translations.
pub fn group_json(g: &CrystalGroup) -> Value {
    let mut v = export_group(g);
    v["holonomy"] = Value::Array(
        g.holonomy()
            .iter()
            .map(|h| {
                json!({
                    "index": s(h.index),
                    "matrix": matrix_json(&h.matrix),
                    "translation": rat_vector_json(&h.translation),
                    "order": s(h.order),
                })
            })
            .collect(),
    );
    v
}

fn step_json(step: &CalabiStep, source_dim: usize) -> Value {
    json!({
        "dimension": s(source_dim),
        "f": int_list_json(&step.surjection.f),
        "phi": int_list_json(&step.surjection.phi),
        "d": s(&step.surjection.d),
        "sublattice_basis": step.sublattice_basis.iter().map(|b| int_list_json(b)).collect::<Vec<_>>(),
        "d0": step.d0.iter().map(s).collect::<Vec<_>>(),
        "lift_corrections": step.lift_corrections.iter().map(|(e, l)| json!({
            "element": s(e),
            "lambda": int_list_json(l),
        })).collect::<Vec<_>>(),
        "vasquez_fired": step.vasquez_fired,
        "kernel": group_json(&step.kernel_group),
    })
}

/// Everything needed to re-verify a connectivity verdict independently.
pub fn certificate_json(g: &CrystalGroup, r: &ConnectivityReport) -> Value {
    let steps = r.decomposition.steps();
    let dims = std::iter::once(g.dim()).chain(steps.iter().map(|s| s.kernel_group.dim()));
    json!({
        "group": group_json(g),
        "verdict": r.verdict,
        "chain_length": s(steps.len()),
        "steps": steps.iter().zip(dims).map(|(st, d)| step_json(st, d)).collect::<Vec<_>>(),
        "core": r.core().map(|c| json!({
            "group": group_json(c),
            "h1": h1_json(&abelianization(c)),
        })),
    })
}

pub fn connectivity_json(r: &Result<ConnectivityReport, CalabiError>) -> Value {
    match r {
        Ok(r) => json!({
            "verdict": r.verdict,
            "chain_length": s(r.decomposition.steps().len()),
            "core": r.core().map(|c| json!({
                "name": c.name(),
                "dimension": s(c.dim()),
                "h1": h1_json(&abelianization(c)),
            })),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn budgeted<T>(r: &Result<T, FiniteGroupError>, f: impl FnOnce(&T) -> Value) -> Value {
    match r {
        Ok(v) => f(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn tree_json(t: &CoprimeTree) -> Value {
    match t {
        CoprimeTree::Leaf { order } => json!({ "kind": "leaf", "order": s(order) }),
        CoprimeTree::Node {
            normal,
            complement_order,
        } => json!({
            "kind": "node",
            "normal": tree_json(normal),
            "complement_order": s(complement_order),
        }),
    }
}

pub fn coprime_tree_json(t: &Option<CoprimeTree>) -> Value {
    match t {
        None => Value::Null,
        Some(t) => json!({
            "factor_orders": t.factor_orders().iter().map(s).collect::<Vec<_>>(),
            "tree": tree_json(t),
        }),
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "dimension": s(self.dim),
            "valid": true,
            "torsion_free": self.torsion_free,
            "holonomy": {
                "order": s(self.holonomy_order),
                "structure": self.holonomy_id,
                "primitive": budgeted(&self.primitive, |p| Value::Bool(*p)),
                "coprime_class": budgeted(&self.coprime_class, coprime_tree_json),
            },
            "h1": h1_json(&self.h1),
            "center_rank": s(self.center_rank),
            "fixed_torus": fixed_torus_json(&self.fixed_torus),
            "character_count": s(&self.characters),
            "connectivity": connectivity_json(&self.connectivity),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group {} (dimension {})", self.name, self.dim);
        let _ = writeln!(
            out,
            "holonomy: order {}, {}",
            self.holonomy_order, self.holonomy_id
        );
        let _ = writeln!(out, "torsion-free: {}", yes_no(self.torsion_free));
        let _ = writeln!(out, "H1 = {}", self.h1);
        let _ = writeln!(out, "center rank: {}", self.center_rank);
        out.push_str(&render_fixed_torus(&self.fixed_torus));
        let _ = writeln!(out, "one-dimensional characters: {}", self.characters);
        let _ = writeln!(out, "{}", render_connectivity(&self.connectivity));
        match &self.primitive {
            Ok(p) => {
                let _ = writeln!(out, "holonomy primitive: {}", yes_no(*p));
            }
            Err(e) => {
                let _ = writeln!(out, "holonomy primitive: unavailable ({e})");
            }
        }
        let _ = writeln!(out, "{}", render_coprime(&self.coprime_class));
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_fixed_torus(t: &FixedTorusSubgroup) -> String {
    let mut out = String::new();
    let comps: Vec<String> = t.component_orders.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(
        out,
        "fixed torus: rank {}, {} component(s){}",
        t.rank,
        t.component_count(),
        if comps.is_empty() {
            String::new()
        } else {
            format!(" (orders {})", comps.join(", "))
        }
    );
    if let Some(points) = &t.points {
        let _ = writeln!(out, "  {} points; {}", points.len(), TORUS_POINT_NOTE);
        for p in points {
            let _ = writeln!(out, "  {p}");
        }
    }
    out
}

pub fn render_connectivity(r: &Result<ConnectivityReport, CalabiError>) -> String {
    match r {
        Ok(r) if r.verdict => format!(
            "CONNECTIVE; poly-Z series of length {}",
            r.decomposition.steps().len()
        ),
        Ok(r) => {
            let core = r.core().expect("negative verdict has a core");
            let steps = r.decomposition.steps().len();
            let which = if steps == 0 {
                "input group".to_string()
            } else {
                format!("dimension-{} group after {steps} reduction(s)", core.dim())
            };
            format!(
                "NOT CONNECTIVE; core = {which}; H1 = {}",
                abelianization(core)
            )
        }
        Err(e) => format!("connectivity: unavailable ({e})"),
    }
}

pub fn render_coprime(r: &Result<Option<CoprimeTree>, FiniteGroupError>) -> String {
    match r {
        Ok(Some(t)) => {
            let orders: Vec<String> = t.factor_orders().iter().map(|m| m.to_string()).collect();
            format!("coprime class: yes (cyclic factors {})", orders.join(", "))
        }
        Ok(None) => "coprime class: no".into(),
        Err(e) => format!("coprime class: unavailable ({e})"),
    }
}
