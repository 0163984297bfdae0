//! Blow-down and blow-up simulation on weighted dual graphs, orbit-wise
//! contraction to a minimal normal compactification, and the exhaustive
//! contraction oracle.
//!
//! A vertex is smoothly contractible when its weight is -1 and its degree is
//! at most 2. Contracting it removes the vertex, adds 1 to each neighbor's
//! weight and, for a degree-2 vertex, joins the two neighbors by a new edge.
//! Contractions over the base field must take whole orbit blocks at a time;
//! the normalization loop follows that discipline.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dual_graph::{chain_weight_sequence, is_forest, VertexId, WeightedDualGraph};
use crate::twig::Twig;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EngineError {
    NotMinusOne(VertexId),
    DegreeTooHigh(VertexId),
    WouldCreateLoop(VertexId),
    UnknownSite(String),
    OrbitNotContractible(String),
    OrbitWouldBreak(VertexId),
    Stuck(String),
    BudgetExceeded,
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::NotMinusOne(v) => write!(f, "vertex `{}` does not have weight -1", v),
            EngineError::DegreeTooHigh(v) => {
                write!(
                    f,
                    "vertex `{}` has degree > 2 and is not smoothly contractible",
                    v
                )
            }
            EngineError::WouldCreateLoop(v) => {
                write!(f, "contracting `{}` would create a loop", v)
            }
            EngineError::UnknownSite(s) => write!(f, "unknown blow-up site {}", s),
            EngineError::OrbitNotContractible(s) => write!(f, "orbit not contractible: {}", s),
            EngineError::OrbitWouldBreak(v) => write!(
                f,
                "vertex `{}` belongs to a larger orbit; contract the whole block instead",
                v
            ),
            EngineError::Stuck(s) => write!(f, "normalization stuck: {}", s),
            EngineError::BudgetExceeded => write!(f, "contraction search budget exceeded"),
        }
    }
}

/// One recorded contraction: the block that was blown down, the weight
/// updates it caused and the edges created by joining neighbor pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionStep {
    pub contracted: Vec<VertexId>,
    pub new_weights: Vec<(VertexId, i64)>,
    pub new_edges: Vec<(VertexId, VertexId)>,
}

pub type ContractionTrace = Vec<ContractionStep>;

/// Shape of a terminal (minimal) boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MncShape {
    /// A single vertex of weight +1.
    ProjectivePlaneLine,
    /// Two adjacent vertices of weights 0 and -m (m >= 0, m != 1).
    HirzebruchPair(i64),
    /// Any other minimal chain, as its weight sequence.
    GeneralChain(Vec<i64>),
}

impl fmt::Display for MncShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MncShape::ProjectivePlaneLine => write!(f, "projective plane with a line"),
            MncShape::HirzebruchPair(m) => write!(f, "Hirzebruch pair (0, -{})", m),
            MncShape::GeneralChain(w) => write!(f, "chain with weights {:?}", w),
        }
    }
}

fn contract_one(
    g: &mut WeightedDualGraph,
    v: &str,
    step: &mut ContractionStep,
) -> Result<(), EngineError> {
    if g.weight(v) != Some(-1) {
        return Err(EngineError::NotMinusOne(v.to_string()));
    }
    let nbrs = g.neighbors(v);
    if nbrs.len() > 2 {
        return Err(EngineError::DegreeTooHigh(v.to_string()));
    }
    if nbrs.len() == 2 && g.has_edge(&nbrs[0], &nbrs[1]) {
        return Err(EngineError::WouldCreateLoop(v.to_string()));
    }
    g.remove_vertex(v);
    for n in &nbrs {
        let w = g.weight(n).unwrap() + 1;
        g.set_weight(n, w);
        step.new_weights.retain(|(id, _)| id != n);
        step.new_weights.push((n.clone(), w));
    }
    if nbrs.len() == 2 {
        g.add_edge(&nbrs[0], &nbrs[1])
            .map_err(|_| EngineError::WouldCreateLoop(v.to_string()))?;
        step.new_edges.push((nbrs[0].clone(), nbrs[1].clone()));
    }
    step.contracted.push(v.to_string());
    Ok(())
}

/// Blows down a single vertex. The vertex must form a singleton orbit block;
/// larger blocks go through [`contract_orbit`].
pub fn blow_down(
    g: &WeightedDualGraph,
    v: &str,
) -> Result<(WeightedDualGraph, ContractionStep), EngineError> {
    if !g.contains_vertex(v) {
        return Err(EngineError::UnknownSite(v.to_string()));
    }
    let block = g.orbit_blocks();
    let label = g.orbit_of(v).unwrap();
    if block[label].len() > 1 {
        return Err(EngineError::OrbitWouldBreak(v.to_string()));
    }
    let mut out = g.clone();
    let mut step = ContractionStep {
        contracted: Vec::new(),
        new_weights: Vec::new(),
        new_edges: Vec::new(),
    };
    contract_one(&mut out, v, &mut step)?;
    Ok((out, step))
}

/// Ignores the orbit partition; used by the search oracle.
fn blow_down_unchecked(g: &WeightedDualGraph, v: &str) -> Result<WeightedDualGraph, EngineError> {
    let mut out = g.clone();
    let mut step = ContractionStep {
        contracted: Vec::new(),
        new_weights: Vec::new(),
        new_edges: Vec::new(),
    };
    contract_one(&mut out, v, &mut step)?;
    Ok(out)
}

/// Simultaneously blows down every vertex of one orbit block. The block must
/// consist of weight -1 vertices of degree <= 2 forming an independent set.
pub fn contract_orbit(
    g: &WeightedDualGraph,
    label: &str,
) -> Result<(WeightedDualGraph, ContractionStep), EngineError> {
    let blocks = g.orbit_blocks();
    let members = blocks
        .get(label)
        .ok_or_else(|| EngineError::UnknownSite(label.to_string()))?;
    for v in members {
        if g.weight(v) != Some(-1) {
            return Err(EngineError::OrbitNotContractible(alloc::format!(
                "member `{}` has weight {}",
                v,
                g.weight(v).unwrap()
            )));
        }
        if g.degree(v) > 2 {
            return Err(EngineError::OrbitNotContractible(alloc::format!(
                "member `{}` has degree {}",
                v,
                g.degree(v)
            )));
        }
    }
    for a in members {
        for b in members {
            if a < b && g.has_edge(a, b) {
                return Err(EngineError::OrbitNotContractible(alloc::format!(
                    "members `{}` and `{}` are adjacent",
                    a,
                    b
                )));
            }
        }
    }
    let mut out = g.clone();
    let mut step = ContractionStep {
        contracted: Vec::new(),
        new_weights: Vec::new(),
        new_edges: Vec::new(),
    };
    for v in members {
        contract_one(&mut out, v, &mut step)?;
    }
    Ok((out, step))
}

/// A blow-up center: a free point on a curve, or an intersection point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BlowUpSite {
    Vertex(VertexId),
    Edge(VertexId, VertexId),
}

/// Inserts a new -1 vertex at the site. Every touched vertex must form a
/// singleton orbit block (the inverse operation is only used on split
/// boundaries). The new vertex gets a fresh id and its own block.
pub fn blow_up(
    g: &WeightedDualGraph,
    site: &BlowUpSite,
) -> Result<(WeightedDualGraph, VertexId), EngineError> {
    let affected: Vec<&VertexId> = match site {
        BlowUpSite::Vertex(v) => vec![v],
        BlowUpSite::Edge(a, b) => vec![a, b],
    };
    let blocks = g.orbit_blocks();
    for v in &affected {
        if !g.contains_vertex(v) {
            return Err(EngineError::UnknownSite((*v).clone()));
        }
        if blocks[g.orbit_of(v).unwrap()].len() > 1 {
            return Err(EngineError::OrbitWouldBreak((*v).clone()));
        }
    }
    if let BlowUpSite::Edge(a, b) = site {
        if !g.has_edge(a, b) {
            return Err(EngineError::UnknownSite(alloc::format!("edge {} {}", a, b)));
        }
    }
    let mut out = g.clone();
    let mut k = 1usize;
    let fresh = loop {
        let candidate = alloc::format!("x{:03}", k);
        if !out.contains_vertex(&candidate) {
            break candidate;
        }
        k += 1;
    };
    out.add_vertex(&fresh, -1, None).expect("fresh id");
    match site {
        BlowUpSite::Vertex(v) => {
            out.set_weight(v, g.weight(v).unwrap() - 1);
            out.add_edge(&fresh, v).expect("new pendant edge");
        }
        BlowUpSite::Edge(a, b) => {
            let mut removed = out.clone();
            removed.remove_edge(a, b);
            out = removed;
            out.set_weight(a, g.weight(a).unwrap() - 1);
            out.set_weight(b, g.weight(b).unwrap() - 1);
            out.add_edge(&fresh, a).expect("subdivision edge");
            out.add_edge(&fresh, b).expect("subdivision edge");
        }
    }
    Ok((out, fresh))
}

/// A boundary is minimal (an mnc boundary) when no -1 vertex meets the rest
/// of the boundary in fewer than 3 points.
pub fn is_mnc(g: &WeightedDualGraph) -> bool {
    g.vertex_ids()
        .all(|v| g.weight(v) != Some(-1) || g.degree(v) >= 3)
}

/// Classifies a minimal boundary graph.
pub fn classify_mnc_shape(g: &WeightedDualGraph) -> MncShape {
    if g.vertex_count() == 1 {
        let v = g.vertex_ids().next().unwrap();
        let w = g.weight(v).unwrap();
        if w == 1 {
            return MncShape::ProjectivePlaneLine;
        }
        return MncShape::GeneralChain(vec![w]);
    }
    if g.vertex_count() == 2 && g.edge_count() == 1 {
        let mut ws: Vec<i64> = g.vertex_ids().map(|v| g.weight(v).unwrap()).collect();
        ws.sort();
        if ws[1] == 0 && ws[0] <= 0 {
            return MncShape::HirzebruchPair(-ws[0]);
        }
        return MncShape::GeneralChain(ws);
    }
    match chain_weight_sequence(g) {
        Some(seq) => MncShape::GeneralChain(seq),
        None => MncShape::GeneralChain(g.vertex_ids().map(|v| g.weight(v).unwrap()).collect()),
    }
}

/// Outcome of the Morrow-shape audit on a minimal boundary; each clause
/// records pass (true) or fail (false).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorrowReport {
    /// (1) the dual graph is a linear chain without -1 vertices
    pub linear_chain: bool,
    /// (2) a single component has self-intersection +1
    pub single_is_plus_one: bool,
    /// (3) two components include one of self-intersection 0
    pub pair_has_zero: bool,
    /// (4) three or more components have exactly one 0 and one positive
    /// vertex, adjacent to each other
    pub long_chain_zero_plus: bool,
}

impl MorrowReport {
    pub fn passed(&self) -> bool {
        self.linear_chain
            && self.single_is_plus_one
            && self.pair_has_zero
            && self.long_chain_zero_plus
    }

    pub fn failed_clauses(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.linear_chain {
            out.push("not a linear chain free of (-1)-vertices");
        }
        if !self.single_is_plus_one {
            out.push("single component must have weight +1");
        }
        if !self.pair_has_zero {
            out.push("two components must include a 0-vertex");
        }
        if !self.long_chain_zero_plus {
            out.push("chains of length >= 3 need adjacent 0 and positive vertices, nothing else nonnegative");
        }
        out
    }
}

/// Audits the conclusions of Morrow's classification on a minimal boundary.
pub fn morrow_audit(g: &WeightedDualGraph) -> MorrowReport {
    let chain = chain_weight_sequence(g);
    let linear_chain = chain.is_some() && g.vertex_ids().all(|v| g.weight(v) != Some(-1));
    let mut single_is_plus_one = true;
    let mut pair_has_zero = true;
    let mut long_chain_zero_plus = true;
    match &chain {
        Some(seq) if seq.len() == 1 => single_is_plus_one = seq[0] == 1,
        Some(seq) if seq.len() == 2 => pair_has_zero = seq.contains(&0),
        Some(seq) if seq.len() >= 3 => {
            let zeros: Vec<usize> = seq
                .iter()
                .enumerate()
                .filter(|(_, &w)| w == 0)
                .map(|(i, _)| i)
                .collect();
            let positives: Vec<usize> = seq
                .iter()
                .enumerate()
                .filter(|(_, &w)| w > 0)
                .map(|(i, _)| i)
                .collect();
            long_chain_zero_plus =
                zeros.len() == 1 && positives.len() == 1 && zeros[0].abs_diff(positives[0]) == 1;
        }
        _ => {}
    }
    MorrowReport {
        linear_chain,
        single_is_plus_one,
        pair_has_zero,
        long_chain_zero_plus,
    }
}

/// Contracts the boundary to a minimal normal compactification, respecting
/// orbits: each round blows down every orbit block currently consisting of
/// (-1)-vertices; when -1 vertices touch each other the terminal ones are
/// contracted first, matching the endgame for the chains [1,1,m] and
/// [1,1,1,1].
pub fn normalize(
    g: &WeightedDualGraph,
) -> Result<(WeightedDualGraph, ContractionTrace, MncShape), EngineError> {
    let mut cur = g.clone();
    let mut trace = Vec::new();
    loop {
        if cur.is_empty() {
            return Err(EngineError::Stuck(String::from(
                "boundary vanished entirely",
            )));
        }
        if is_mnc(&cur) {
            let shape = classify_mnc_shape(&cur);
            return Ok((cur, trace, shape));
        }
        let minus_ones: BTreeSet<VertexId> = cur.minus_one_vertices().into_iter().collect();
        let blocks = cur.orbit_blocks();
        // every -1 must sit in an all-minus-one block
        let mut ready_blocks: Vec<(String, Vec<VertexId>)> = Vec::new();
        for (label, members) in &blocks {
            let inside = members.iter().filter(|v| minus_ones.contains(*v)).count();
            if inside == 0 {
                continue;
            }
            if inside != members.len() {
                return Err(EngineError::Stuck(alloc::format!(
                    "orbit `{}` mixes (-1)-vertices with others",
                    label
                )));
            }
            ready_blocks.push((label.clone(), members.clone()));
        }
        let independent = |ids: &BTreeSet<VertexId>| -> bool {
            ids.iter()
                .all(|a| cur.neighbors(a).iter().all(|n| !ids.contains(n)))
        };
        let contractible_block = |members: &[VertexId]| -> bool {
            members.iter().all(|v| cur.degree(v) <= 2)
                && independent(&members.iter().cloned().collect())
        };
        let candidates: Vec<(String, Vec<VertexId>)> = ready_blocks
            .iter()
            .filter(|(_, m)| contractible_block(m))
            .cloned()
            .collect();
        if candidates.is_empty() {
            return Err(EngineError::Stuck(String::from(
                "a (-1)-vertex exists but no orbit block is smoothly contractible",
            )));
        }

        if independent(&minus_ones) {
            // main round: contract everything currently contractible; the
            // blocks are pairwise non-adjacent, so the order is immaterial
            for (label, _) in &candidates {
                let (next, step) = contract_orbit(&cur, label)?;
                cur = next;
                trace.push(step);
            }
            continue;
        }

        // endgame: adjacent -1 vertices, as in the chains [1,1,m] and
        // [1,1,1,1]; contract terminal blocks first
        let terminal_blocks: Vec<(String, Vec<VertexId>)> = candidates
            .iter()
            .filter(|(_, m)| m.iter().all(|v| cur.degree(v) <= 1))
            .cloned()
            .collect();
        let terminal_union: BTreeSet<VertexId> = terminal_blocks
            .iter()
            .flat_map(|(_, m)| m.iter().cloned())
            .collect();
        if !terminal_blocks.is_empty() && independent(&terminal_union) {
            for (label, _) in &terminal_blocks {
                let (next, step) = contract_orbit(&cur, label)?;
                cur = next;
                trace.push(step);
            }
            continue;
        }
        // no usable terminal block ([1,1]-style pairs or interior runs):
        // with singleton blocks only, any order is rational; take the first
        let singleton = terminal_blocks
            .iter()
            .find(|(_, m)| m.len() == 1)
            .or_else(|| candidates.iter().find(|(_, m)| m.len() == 1));
        if let Some((label, _)) = singleton {
            let (next, step) = contract_orbit(&cur, label)?;
            cur = next;
            trace.push(step);
            continue;
        }
        return Err(EngineError::Stuck(String::from(
            "adjacent (-1)-orbits admit no field-rational contraction",
        )));
    }
}

/// Renders a trace in the one-line-per-step text format.
pub fn trace_to_text(trace: &ContractionTrace) -> String {
    let mut out = String::new();
    for step in trace {
        out.push_str("contract ");
        out.push_str(&step.contracted.join(" "));
        out.push_str(" -> weights ");
        let parts: Vec<String> = step
            .new_weights
            .iter()
            .map(|(id, w)| alloc::format!("{}={}", id, w))
            .collect();
        out.push_str(&parts.join(","));
        out.push('\n');
    }
    out
}

/// Depth-first search over all legal single-vertex blow-downs (orbits
/// ignored): does some contraction sequence reach a chain with the target
/// weight sequence (up to reversal)?
pub fn contracts_to(
    g: &WeightedDualGraph,
    target_weights: &[i64],
    budget: usize,
) -> Result<bool, EngineError> {
    if !is_forest(g) {
        return Err(EngineError::Stuck(String::from("oracle needs a forest")));
    }
    if g.vertex_count() < target_weights.len() {
        return Ok(false);
    }
    if g.vertex_count() - target_weights.len() > budget {
        return Err(EngineError::BudgetExceeded);
    }
    let target = canonical_weight_seq(target_weights);

    // chains stay chains under blow-down; use the fast path when possible
    if let Some(seq) = chain_weight_sequence(g) {
        let mut visited: BTreeSet<Vec<i64>> = BTreeSet::new();
        return Ok(chain_dfs(&seq, &target, &mut visited));
    }

    let mut visited: BTreeSet<String> = BTreeSet::new();
    Ok(graph_dfs(g, &target, &mut visited))
}

fn canonical_weight_seq(seq: &[i64]) -> Vec<i64> {
    let fwd = seq.to_vec();
    let mut rev = fwd.clone();
    rev.reverse();
    core::cmp::min(fwd, rev)
}

fn chain_dfs(seq: &[i64], target: &[i64], visited: &mut BTreeSet<Vec<i64>>) -> bool {
    let canon = canonical_weight_seq(seq);
    if canon == *target {
        return true;
    }
    if seq.len() <= target.len() {
        return false;
    }
    if !visited.insert(canon) {
        return false;
    }
    for i in 0..seq.len() {
        if seq[i] != -1 {
            continue;
        }
        let mut next: Vec<i64> = Vec::with_capacity(seq.len() - 1);
        for (j, &w) in seq.iter().enumerate() {
            if j == i {
                continue;
            }
            if j + 1 == i || j == i + 1 {
                next.push(w + 1);
            } else {
                next.push(w);
            }
        }
        if chain_dfs(&next, target, visited) {
            return true;
        }
    }
    false
}

fn graph_dfs(g: &WeightedDualGraph, target: &[i64], visited: &mut BTreeSet<String>) -> bool {
    if g.vertex_count() == target.len() {
        if let Some(seq) = chain_weight_sequence(g) {
            if canonical_weight_seq(&seq) == *target {
                return true;
            }
        }
        return false;
    }
    if g.vertex_count() < target.len() {
        return false;
    }
    let key = crate::dual_graph::canonical_code(g).unwrap_or_default();
    if !visited.insert(key) {
        return false;
    }
    for v in g.minus_one_vertices() {
        if g.degree(&v) > 2 {
            continue;
        }
        if let Ok(next) = blow_down_unchecked(g, &v) {
            if graph_dfs(&next, target, visited) {
                return true;
            }
        }
    }
    false
}

/// Builds the chain graph `[a, [1], b]` used by the Fujita-style oracles.
pub fn fujita_chain(a: &Twig, b: &Twig) -> WeightedDualGraph {
    let mut weights = a.weights();
    weights.push(-1);
    weights.extend(b.weights());
    crate::dual_graph::chain_graph(&weights)
}

/// Convenience: the oracle target "a single 0-curve".
pub const ZERO_CURVE: [i64; 1] = [0];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_graph::{as_linear_chain, chain_graph};
    use crate::twig::{adjoint, Twig};

    fn tw(entries: &[i64]) -> Twig {
        Twig::new(entries.to_vec())
    }

    #[test]
    fn blow_down_basics() {
        // path [1,1]: contracting one end leaves a single 0-vertex
        let g = chain_graph(&[-1, -1]);
        let (g2, _) = blow_down(&g, "v01").unwrap();
        assert_eq!(g2.vertex_count(), 1);
        assert_eq!(g2.weight("v02"), Some(0));

        // path [2,1,2]: contracting the middle gives [1,1]
        let g = chain_graph(&[-2, -1, -2]);
        let (g2, step) = blow_down(&g, "v02").unwrap();
        assert_eq!(as_linear_chain(&g2).unwrap(), tw(&[1, 1]));
        assert!(step
            .new_edges
            .contains(&(String::from("v01"), String::from("v03"))));

        assert!(matches!(
            blow_down(&chain_graph(&[-2, -1, -2]), "v01"),
            Err(EngineError::NotMinusOne(_))
        ));
    }

    #[test]
    fn worked_contraction_chain_replay() {
        // [m,2,4,1,2,2,4] -> [m,2,3,1,2,4] -> [m,2,2,1,4] -> [m,2,1,3] -> [m,1,2]
        for m in 2..=5i64 {
            let mut g = chain_graph(&[-m, -2, -4, -1, -2, -2, -4]);
            let expected = [
                vec![-m, -2, -3, -1, -2, -4],
                vec![-m, -2, -2, -1, -4],
                vec![-m, -2, -1, -3],
                vec![-m, -1, -2],
            ];
            for want in &expected {
                let v = g.minus_one_vertices();
                assert_eq!(v.len(), 1);
                let (next, _) = blow_down(&g, &v[0]).unwrap();
                let got = chain_weight_sequence(&next).unwrap();
                assert_eq!(got, canonical_weight_seq(want));
                g = next;
            }
        }
    }

    #[test]
    fn blow_up_round_trip() {
        let g = chain_graph(&[0, -2]);
        let (g2, fresh) = blow_up(&g, &BlowUpSite::Vertex(String::from("v01"))).unwrap();
        assert_eq!(g2.weight("v01"), Some(-1));
        assert_eq!(g2.weight(&fresh), Some(-1));
        let (g3, _) = blow_down(&g2, &fresh).unwrap();
        assert_eq!(g3, g);

        // single +1 vertex, blow up a free point: weights become (0, -1)
        let p2 = chain_graph(&[1]);
        let (g2, fresh) = blow_up(&p2, &BlowUpSite::Vertex(String::from("v01"))).unwrap();
        let mut ws: Vec<i64> = g2.vertex_ids().map(|v| g2.weight(v).unwrap()).collect();
        ws.sort();
        assert_eq!(ws, alloc::vec![-1, 0]);
        let (g3, _) = blow_down(&g2, &fresh).unwrap();
        assert_eq!(g3, p2);

        // Hirzebruch pair (0, -2), blow up the edge: chain [1,1,3]
        let f2 = chain_graph(&[0, -2]);
        let (g2, fresh) = blow_up(
            &f2,
            &BlowUpSite::Edge(String::from("v01"), String::from("v02")),
        )
        .unwrap();
        assert_eq!(as_linear_chain(&g2).unwrap(), tw(&[1, 1, 3]));
        let (g3, _) = blow_down(&g2, &fresh).unwrap();
        assert_eq!(g3, f2);
    }

    #[test]
    fn mnc_predicate() {
        assert!(is_mnc(&chain_graph(&[1])));
        assert!(!is_mnc(&chain_graph(&[-2, -1, -2])));
        assert!(is_mnc(&chain_graph(&[0, 0])));
        assert_eq!(
            classify_mnc_shape(&chain_graph(&[1])),
            MncShape::ProjectivePlaneLine
        );
        assert_eq!(
            classify_mnc_shape(&chain_graph(&[0, 0])),
            MncShape::HirzebruchPair(0)
        );
        assert_eq!(
            classify_mnc_shape(&chain_graph(&[0, -3])),
            MncShape::HirzebruchPair(3)
        );
    }

    #[test]
    fn morrow_clauses() {
        assert!(morrow_audit(&chain_graph(&[1])).passed());
        assert!(morrow_audit(&chain_graph(&[0, -3])).passed());
        // two interior non-adjacent zeros violate clause (4)
        let bad = chain_graph(&[-2, 0, -2, 0, -2]);
        let report = morrow_audit(&bad);
        assert!(!report.long_chain_zero_plus);
        assert!(!report.passed());
    }

    #[test]
    fn contract_orbit_checks() {
        let mut g = chain_graph(&[-2, -1, -2, -1, -2]);
        g.set_orbit("v02", "pair");
        g.set_orbit("v04", "pair");
        let (g2, step) = contract_orbit(&g, "pair").unwrap();
        assert_eq!(step.contracted.len(), 2);
        // the middle vertex met both contracted curves, so it gains +2
        assert_eq!(chain_weight_sequence(&g2).unwrap(), alloc::vec![-1, 0, -1]);

        let mut adjacent = chain_graph(&[-1, -1, -3]);
        adjacent.set_orbit("v01", "p");
        adjacent.set_orbit("v02", "p");
        assert!(matches!(
            contract_orbit(&adjacent, "p"),
            Err(EngineError::OrbitNotContractible(_))
        ));
    }

    #[test]
    fn normalize_small_chains() {
        // twig [1,1] contracts to a single 0-vertex
        let (g, _, shape) = normalize(&chain_graph(&[-1, -1])).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(shape, MncShape::GeneralChain(alloc::vec![0]));

        // [1,1,m] endgame contracts the terminal -1 first
        let (_, _, shape) = normalize(&chain_graph(&[-1, -1, -3])).unwrap();
        assert_eq!(shape, MncShape::HirzebruchPair(3));

        // [1,1,1,1] with paired ends reaches the quadric pair (0,0)
        let mut g = chain_graph(&[-1, -1, -1, -1]);
        g.set_orbit("v01", "outer");
        g.set_orbit("v04", "outer");
        g.set_orbit("v02", "inner");
        g.set_orbit("v03", "inner");
        let (_, _, shape) = normalize(&g).unwrap();
        assert_eq!(shape, MncShape::HirzebruchPair(0));

        // [1,1,1]: terminals first, leaving the +1 vertex
        let (_, _, shape) = normalize(&chain_graph(&[-1, -1, -1])).unwrap();
        assert_eq!(shape, MncShape::ProjectivePlaneLine);
    }

    #[test]
    fn normalize_orbit_mix_is_stuck() {
        // a -1 sharing its block with a -2 cannot be contracted over the field
        let mut g = chain_graph(&[-1, -3, -2]);
        g.set_orbit("v01", "bad");
        g.set_orbit("v03", "bad");
        assert!(matches!(normalize(&g), Err(EngineError::Stuck(_))));
    }

    #[test]
    fn oracle_examples() {
        // [2,4,1,2,2,3] contracts to a 0-curve (B = adjoint(A))
        let a = tw(&[2, 4]);
        let g = fujita_chain(&a, &adjoint(&a).unwrap());
        assert!(contracts_to(&g, &ZERO_CURVE, 10).unwrap());

        // [2,4,1,2,3] does not
        let g = fujita_chain(&tw(&[2, 4]), &tw(&[2, 3]));
        assert!(!contracts_to(&g, &ZERO_CURVE, 10).unwrap());

        // [5,2,1] -> [5,1]
        let g = chain_graph(&[-5, -2, -1]);
        assert!(contracts_to(&g, &[-5, -1], 10).unwrap());

        assert!(matches!(
            contracts_to(&chain_graph(&[-2; 9]), &ZERO_CURVE, 2),
            Err(EngineError::BudgetExceeded)
        ));
    }

    #[test]
    fn blow_down_preserves_forest_and_count() {
        let g = chain_graph(&[-2, -1, -2, -1, -2]);
        let (g2, _) = blow_down(&g, "v02").unwrap();
        assert!(is_forest(&g2));
        assert_eq!(g2.vertex_count(), g.vertex_count() - 1);
    }
}
