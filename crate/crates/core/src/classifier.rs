//! Singularity analysis of boundary graphs, the structural predicates of the
//! main classification, and the del Pezzo decision tables.
//!
//! A boundary graph here is a forest in which the (-1)-vertices are the
//! boundary curves proper and everything of weight <= -2 is exceptional.
//! Removing the (-1)-vertices splits the exceptional part into one connected
//! component per singular point.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::catalog::{mnc_target_shape, Catalog, FamilyId, FamilyParams};
use crate::contraction::{
    is_mnc, morrow_audit, normalize, ContractionTrace, MncShape, MorrowReport,
};
use crate::dual_graph::{
    as_linear_chain, connected_components, intersection_matrix, is_forest, is_negative_definite,
    VertexId, WeightedDualGraph,
};
use crate::twig::Twig;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassifyError {
    BoundaryModelViolated(String),
    NotDuVal,
    BadDegree(i64),
    ImpossiblePair(i64, String),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::BoundaryModelViolated(msg) => {
                write!(f, "boundary model violated: {}", msg)
            }
            ClassifyError::NotDuVal => {
                write!(f, "not all singularities are rational double points")
            }
            ClassifyError::BadDegree(d) => write!(f, "degree {} is not in 1..=6 or 8", d),
            ClassifyError::ImpossiblePair(d, t) => {
                write!(f, "degree {} cannot carry singularity type {}", d, t)
            }
        }
    }
}

/// ADE label of a rational double point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DuValType {
    A(u32),
    D(u32),
    E(u32),
}

impl fmt::Display for DuValType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DuValType::A(k) => write!(f, "A{}", k),
            DuValType::D(k) => write!(f, "D{}", k),
            DuValType::E(k) => write!(f, "E{}", k),
        }
    }
}

impl DuValType {
    pub fn parse(s: &str) -> Option<DuValType> {
        let (letter, num) = s.split_at(1);
        let k: u32 = num.parse().ok()?;
        match letter {
            "A" | "a" if k >= 1 => Some(DuValType::A(k)),
            "D" | "d" if k >= 4 => Some(DuValType::D(k)),
            "E" | "e" if (6..=8).contains(&k) => Some(DuValType::E(k)),
            _ => None,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            DuValType::A(k) | DuValType::D(k) | DuValType::E(k) => k as usize,
        }
    }
}

/// Formats a Du Val multiset the usual way, e.g. `A2+2A1`.
pub fn format_duval_types(types: &[DuValType]) -> String {
    let mut sorted = types.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let count = j - i;
        if count == 1 {
            parts.push(alloc::format!("{}", sorted[i]));
        } else {
            parts.push(alloc::format!("{}{}", count, sorted[i]));
        }
        i = j;
    }
    parts.join("+")
}

/// Detected type of one exceptional component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SingularityType {
    /// linear chain of weights <= -2 (cyclic quotient); holds its twig
    CyclicChain(Twig),
    DuVal(DuValType),
    NonCyclicQuotient,
    LcNotQuotient,
    Unknown,
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::CyclicChain(t) => write!(f, "cyclic quotient {}", t),
            SingularityType::DuVal(d) => write!(f, "Du Val {}", d),
            SingularityType::NonCyclicQuotient => write!(f, "non-cyclic quotient"),
            SingularityType::LcNotQuotient => write!(f, "log canonical, not quotient"),
            SingularityType::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularComponent {
    pub vertices: Vec<VertexId>,
    pub kind: SingularityType,
    /// number of components in its conjugacy class
    pub orbit_size: usize,
    pub negative_definite: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularityReport {
    pub components: Vec<SingularComponent>,
    /// singular points over the closure = component count
    pub count_closure: usize,
    /// rational singular points = conjugacy classes of size one
    pub count_base: usize,
}

impl SingularityReport {
    pub fn all_du_val(&self) -> bool {
        !self.components.is_empty()
            && self
                .components
                .iter()
                .all(|c| matches!(c.kind, SingularityType::DuVal(_)))
    }

    pub fn du_val_types(&self) -> Option<Vec<DuValType>> {
        let mut out = Vec::new();
        for c in &self.components {
            match c.kind {
                SingularityType::DuVal(t) => out.push(t),
                _ => return None,
            }
        }
        Some(out)
    }
}

/// Splits the boundary at its (-1)-vertices and classifies each remaining
/// component as one singular point of the contracted surface.
pub fn analyze_singularities(g: &WeightedDualGraph) -> Result<SingularityReport, ClassifyError> {
    if !is_forest(g) {
        return Err(ClassifyError::BoundaryModelViolated(String::from(
            "boundary has a cycle",
        )));
    }
    let bullets: Vec<VertexId> = g.minus_one_vertices();
    if bullets.is_empty() {
        return Err(ClassifyError::BoundaryModelViolated(String::from(
            "no (-1)-vertices; the boundary curves cannot be identified",
        )));
    }
    if let Some(v) = g
        .vertex_ids()
        .find(|v| g.weight(v).unwrap() > -2 && g.weight(v) != Some(-1))
    {
        return Err(ClassifyError::BoundaryModelViolated(alloc::format!(
            "vertex `{}` has weight {}; expected -1 or at most -2",
            v,
            g.weight(v).unwrap()
        )));
    }
    let keep: BTreeSet<VertexId> = g
        .vertex_ids()
        .filter(|v| g.weight(v) != Some(-1))
        .cloned()
        .collect();
    let exceptional = g.induced(&keep);
    let comps = connected_components(&exceptional);

    // conjugacy classes of components: two components are conjugate when an
    // orbit block spans them
    let comp_of = |v: &VertexId| comps.iter().position(|c| c.contains_vertex(v));
    let mut class: Vec<usize> = (0..comps.len()).collect();
    fn find(class: &mut Vec<usize>, mut x: usize) -> usize {
        while class[x] != x {
            class[x] = class[class[x]];
            x = class[x];
        }
        x
    }
    for members in g.orbit_blocks().values() {
        let in_comps: Vec<usize> = members.iter().filter_map(&comp_of).collect();
        for w in in_comps.windows(2) {
            let (a, b) = (find(&mut class, w[0]), find(&mut class, w[1]));
            if a != b {
                class[a] = b;
            }
        }
    }
    let mut class_size = vec![0usize; comps.len()];
    for i in 0..comps.len() {
        let r = find(&mut class, i);
        class_size[r] += 1;
    }

    let mut components = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        let neg_def = is_negative_definite(&intersection_matrix(comp));
        let kind = if neg_def {
            classify_component(comp)
        } else {
            SingularityType::Unknown
        };
        let root = find(&mut class, i);
        components.push(SingularComponent {
            vertices: comp.vertex_ids().cloned().collect(),
            kind,
            orbit_size: class_size[root],
            negative_definite: neg_def,
        });
    }
    let count_base = {
        let mut roots: BTreeSet<usize> = BTreeSet::new();
        for i in 0..comps.len() {
            let r = find(&mut class, i);
            if class_size[r] == 1 {
                roots.insert(r);
            }
        }
        roots.len()
    };
    Ok(SingularityReport {
        count_closure: components.len(),
        count_base,
        components,
    })
}

/// Chains and arm data of a fork vertex: per neighbor, the twig read outward.
fn fork_arms(comp: &WeightedDualGraph, center: &VertexId) -> Option<Vec<Twig>> {
    let mut arms = Vec::new();
    for start in comp.neighbors(center) {
        let mut entries = Vec::new();
        let mut prev = center.clone();
        let mut cur = start;
        loop {
            if comp.degree(&cur) > 2 {
                return None; // nested fork: not an arm chain
            }
            entries.push(-comp.weight(&cur).unwrap());
            let next = comp.neighbors(&cur).into_iter().find(|n| *n != prev);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        arms.push(Twig::new(entries));
    }
    Some(arms)
}

fn classify_component(comp: &WeightedDualGraph) -> SingularityType {
    let all_minus_two = comp.vertex_ids().all(|v| comp.weight(v) == Some(-2));
    if let Some(twig) = as_linear_chain(comp) {
        if all_minus_two {
            return SingularityType::DuVal(DuValType::A(comp.vertex_count() as u32));
        }
        return SingularityType::CyclicChain(twig);
    }
    let forks: Vec<VertexId> = comp
        .vertex_ids()
        .filter(|v| comp.degree(v) >= 3)
        .cloned()
        .collect();
    match forks.len() {
        1 => {
            let center = &forks[0];
            let deg = comp.degree(center);
            if deg == 4 {
                // four single arms around one center: log canonical star
                if let Some(arms) = fork_arms(comp, center) {
                    if arms.len() == 4 && arms.iter().all(|a| a.entries() == [2]) {
                        return SingularityType::LcNotQuotient;
                    }
                }
                return SingularityType::Unknown;
            }
            let arms = match fork_arms(comp, center) {
                Some(a) if a.len() == 3 => a,
                _ => return SingularityType::Unknown,
            };
            if all_minus_two {
                // ADE shapes by arm lengths
                let mut lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
                lens.sort();
                let total = comp.vertex_count() as u32;
                return match (lens[0], lens[1], lens[2]) {
                    (1, 1, _) => SingularityType::DuVal(DuValType::D(total)),
                    (1, 2, 2) => SingularityType::DuVal(DuValType::E(6)),
                    (1, 2, 3) => SingularityType::DuVal(DuValType::E(7)),
                    (1, 2, 4) => SingularityType::DuVal(DuValType::E(8)),
                    _ => SingularityType::Unknown,
                };
            }
            let mut dets: Vec<BigInt> = arms.iter().map(crate::twig::det).collect();
            dets.sort();
            let d: Vec<i64> = dets
                .iter()
                .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                .collect();
            match (d[0], d[1], d[2]) {
                (2, 2, _) | (2, 3, 3) | (2, 3, 4) | (2, 3, 5) => SingularityType::NonCyclicQuotient,
                (2, 3, 6) | (2, 4, 4) | (3, 3, 3) => SingularityType::LcNotQuotient,
                _ => SingularityType::Unknown,
            }
        }
        2 => {
            // two forks, each with two single -2 leaves, joined by a chain
            let mut leaves_ok = true;
            for fork in &forks {
                let pendant: Vec<VertexId> = comp
                    .neighbors(fork)
                    .into_iter()
                    .filter(|n| comp.degree(n) == 1)
                    .collect();
                let all_minus2 = pendant.iter().all(|n| comp.weight(n) == Some(-2));
                if pendant.len() != 2 || !all_minus2 || comp.degree(fork) != 3 {
                    leaves_ok = false;
                }
            }
            let has_deep = comp.vertex_ids().any(|v| comp.weight(v).unwrap() <= -3);
            if leaves_ok && has_deep {
                SingularityType::LcNotQuotient
            } else {
                SingularityType::Unknown
            }
        }
        _ => SingularityType::Unknown,
    }
}

/// Degree of a boundary whose singularities are all Du Val:
/// 10 minus the number of boundary vertices over the closure.
pub fn du_val_degree(g: &WeightedDualGraph) -> Result<i64, ClassifyError> {
    let report = analyze_singularities(g)?;
    if !report.all_du_val() {
        return Err(ClassifyError::NotDuVal);
    }
    Ok(10 - g.vertex_count() as i64)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DuValVerdict {
    Contains,
    NotContains,
    NeedsSmoothRationalPoint,
}

impl fmt::Display for DuValVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DuValVerdict::Contains => write!(f, "Contains"),
            DuValVerdict::NotContains => write!(f, "NotContains"),
            DuValVerdict::NeedsSmoothRationalPoint => write!(f, "NeedsSmoothRationalPoint"),
        }
    }
}

/// The ten (degree, type) pairs of low degree that admit the affine plane.
pub const LOW_DEGREE_TABLE: [(i64, &str); 10] = [
    (4, "D5"),
    (4, "D4"),
    (4, "A2+2A1"),
    (4, "A2"),
    (3, "E6"),
    (3, "D4"),
    (2, "E7"),
    (2, "E6"),
    (2, "A6"),
    (1, "E8"),
];

/// The singular types that are possible at all in degree >= 5.
pub const HIGH_DEGREE_TABLE: [(i64, &str); 5] =
    [(8, "A1"), (6, "A2+A1"), (6, "A2"), (6, "A1"), (5, "A4")];

/// Decision table for singular del Pezzo surfaces of rank one: does the
/// surface contain the affine plane?
pub fn contains_affine_plane_duval(
    d: i64,
    types: &[DuValType],
) -> Result<DuValVerdict, ClassifyError> {
    if !(1..=6).contains(&d) && d != 8 {
        return Err(ClassifyError::BadDegree(d));
    }
    if types.is_empty() {
        return Err(ClassifyError::ImpossiblePair(d, String::from("(none)")));
    }
    let label = format_duval_types(types);
    if d >= 5 {
        if !HIGH_DEGREE_TABLE.contains(&(d, label.as_str())) {
            return Err(ClassifyError::ImpossiblePair(d, label));
        }
        return Ok(if d == 8 {
            DuValVerdict::NeedsSmoothRationalPoint
        } else {
            DuValVerdict::Contains
        });
    }
    if LOW_DEGREE_TABLE.contains(&(d, label.as_str())) {
        Ok(DuValVerdict::Contains)
    } else {
        Ok(DuValVerdict::NotContains)
    }
}

/// Same table with the degree-8 case resolved by the existence of a smooth
/// rational point; answers whether a fibration with this generic fiber
/// carries a vertical affine-plane cylinder.
pub fn fibration_criterion(
    d: i64,
    types: &[DuValType],
    has_smooth_rational_point: bool,
) -> Result<bool, ClassifyError> {
    Ok(match contains_affine_plane_duval(d, types)? {
        DuValVerdict::Contains => true,
        DuValVerdict::NotContains => false,
        DuValVerdict::NeedsSmoothRationalPoint => has_smooth_rational_point,
    })
}

/// Full verdict of the boundary classifier with its evidence trail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundaryVerdict {
    ContainsA2 {
        family: FamilyId,
        params: FamilyParams,
        all_matches: Vec<(FamilyId, FamilyParams)>,
        shape: MncShape,
        trace: ContractionTrace,
        morrow: MorrowReport,
        singularities: SingularityReport,
    },
    NotMatched {
        reasons: Vec<String>,
        singularities: Option<SingularityReport>,
    },
    Rejected {
        reason: String,
    },
}

impl BoundaryVerdict {
    pub fn contains_a2(&self) -> bool {
        matches!(self, BoundaryVerdict::ContainsA2 { .. })
    }
}

/// Runs the whole decision procedure on a candidate boundary graph: forest
/// check, catalog match, contraction to the matched family's minimal model,
/// and the singularity-count predicates.
pub fn classify_boundary(
    catalog: &Catalog,
    g: &WeightedDualGraph,
    strict: bool,
) -> BoundaryVerdict {
    if g.is_empty() {
        return BoundaryVerdict::Rejected {
            reason: String::from("empty graph"),
        };
    }
    if !is_forest(g) {
        return BoundaryVerdict::Rejected {
            reason: String::from("boundary has a cycle"),
        };
    }
    if !crate::dual_graph::is_connected(g) {
        return BoundaryVerdict::Rejected {
            reason: String::from("boundary is not connected"),
        };
    }
    if g.minus_one_vertices().is_empty() {
        let reason = if is_mnc(g) {
            "no (-1)-curves: the boundary is already minimal, not the resolution \
             of a singular rank-one surface"
        } else {
            "no (-1)-curves and no minimal structure"
        };
        return BoundaryVerdict::Rejected {
            reason: reason.to_string(),
        };
    }

    let singularities = analyze_singularities(g).ok();
    let mut reasons = Vec::new();

    let matches = catalog.match_graph(g, strict);
    if matches.is_empty() {
        reasons.push(String::from("no configuration in the catalog matches"));
        return BoundaryVerdict::NotMatched {
            reasons,
            singularities,
        };
    }
    let (family, params) = matches[0].clone();

    let (final_graph, trace, shape) = match normalize(g) {
        Ok(x) => x,
        Err(e) => {
            reasons.push(alloc::format!("normalization failed: {}", e));
            return BoundaryVerdict::NotMatched {
                reasons,
                singularities,
            };
        }
    };
    let want = match mnc_target_shape(family, &params) {
        Ok(w) => w,
        Err(e) => {
            reasons.push(alloc::format!("{}", e));
            return BoundaryVerdict::NotMatched {
                reasons,
                singularities,
            };
        }
    };
    if shape != want {
        reasons.push(alloc::format!(
            "normalized to {} but family {} requires {}",
            shape,
            family,
            want
        ));
        return BoundaryVerdict::NotMatched {
            reasons,
            singularities,
        };
    }
    let morrow = morrow_audit(&final_graph);
    if !morrow.passed() {
        reasons.push(String::from("minimal model fails the chain-shape audit"));
        return BoundaryVerdict::NotMatched {
            reasons,
            singularities,
        };
    }
    let singularities = match singularities {
        Some(s) => s,
        None => {
            reasons.push(String::from("singularity analysis failed"));
            return BoundaryVerdict::NotMatched {
                reasons,
                singularities: None,
            };
        }
    };
    // singular-point counting: one rational point, at most two over the base
    // field, and over the closure either 1 or (number of -1 curves) + 1
    let n = g.minus_one_vertices().len();
    let closure_ok = singularities.count_closure == 1 || singularities.count_closure == n + 1;
    let base_ok = singularities.count_base >= 1 && singularities.count_base <= 2;
    if !closure_ok || !base_ok {
        reasons.push(alloc::format!(
            "singularity counts violate the rank-one pattern: {} over closure, {} rational",
            singularities.count_closure,
            singularities.count_base
        ));
        return BoundaryVerdict::NotMatched {
            reasons,
            singularities: Some(singularities),
        };
    }
    BoundaryVerdict::ContainsA2 {
        family,
        params,
        all_matches: matches,
        shape,
        trace,
        morrow,
        singularities,
    }
}

/// Result of one self-gating structural check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AuditOutcome {
    Pass,
    NotApplicable,
    Fail,
}

impl fmt::Display for AuditOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditOutcome::Pass => write!(f, "pass"),
            AuditOutcome::NotApplicable => write!(f, "n/a"),
            AuditOutcome::Fail => write!(f, "FAIL"),
        }
    }
}

/// Structural facts every genuine boundary obeys; each check gates itself on
/// its hypotheses and reports pass / not-applicable / fail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructuralAudit {
    /// chain boundaries: length >= 3 and some interior entry 1
    pub chain_interior_one: AuditOutcome,
    /// exactly two adjacent 1-entries force length 3
    pub adjacent_pair_forces_r3: AuditOutcome,
    /// palindromic four-1 pattern forces [1,1,1,1]
    pub palindrome_four_ones: AuditOutcome,
    /// odd palindrome with symmetric 1s: never centered; next-to-center
    /// pins the all-2 shape
    pub odd_palindrome_shape: AuditOutcome,
    /// exactly two adjacent (-1)-curves: whole graph is [1,1,m], m >= 2
    pub two_adjacent_minus_ones: AuditOutcome,
    /// two conjugate disjoint (-1)-pairs: whole graph is [1,1,1,1]
    pub conjugate_pairs: AuditOutcome,
    /// per-singular-point resolutions in the many-points case are chains
    /// met terminally by their (-1)-curves, away from interior forks
    pub satellite_chains: AuditOutcome,
}

impl StructuralAudit {
    pub fn outcomes(&self) -> [(&'static str, AuditOutcome); 7] {
        [
            ("chain-interior-one", self.chain_interior_one),
            ("adjacent-pair-forces-r3", self.adjacent_pair_forces_r3),
            ("palindrome-four-ones", self.palindrome_four_ones),
            ("odd-palindrome-shape", self.odd_palindrome_shape),
            ("two-adjacent-minus-ones", self.two_adjacent_minus_ones),
            ("conjugate-pairs", self.conjugate_pairs),
            ("satellite-chains", self.satellite_chains),
        ]
    }

    pub fn passed(&self) -> bool {
        self.outcomes()
            .iter()
            .all(|(_, o)| *o != AuditOutcome::Fail)
    }
}

pub fn structural_lemma_audit(g: &WeightedDualGraph) -> StructuralAudit {
    let chain = as_linear_chain(g);
    let entries: Option<Vec<i64>> = chain.as_ref().map(|t| t.entries().to_vec());

    // genuine boundaries contract to a sound minimal model; chains that do
    // not (such as [1,2,1]) sit outside every hypothesis below
    let sound = match normalize(g) {
        Ok((final_graph, _, _)) => morrow_audit(&final_graph).passed(),
        Err(_) => false,
    };

    // chain boundaries with all entries >= 1 that still carry a (-1)-curve
    let chain_interior_one = match &entries {
        Some(e) if sound && e.iter().all(|&m| m >= 1) && e.contains(&1) => {
            let r = e.len();
            if r >= 3 && (1..r - 1).any(|i| e[i] == 1) {
                AuditOutcome::Pass
            } else {
                AuditOutcome::Fail
            }
        }
        _ => AuditOutcome::NotApplicable,
    };

    let adjacent_pair_forces_r3 = match &entries {
        Some(e) if sound && e.iter().all(|&m| m >= 1) => {
            let ones: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|(_, &m)| m == 1)
                .map(|(i, _)| i)
                .collect();
            if ones.len() == 2 && ones[1] == ones[0] + 1 {
                if e.len() == 3 {
                    AuditOutcome::Pass
                } else {
                    AuditOutcome::Fail
                }
            } else {
                AuditOutcome::NotApplicable
            }
        }
        _ => AuditOutcome::NotApplicable,
    };

    let palindrome_four_ones = match &entries {
        Some(e) if sound && e.len() >= 4 && e.iter().all(|&m| m >= 1) => {
            let r = e.len();
            let palindromic = e.iter().eq(e.iter().rev());
            let ones: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|(_, &m)| m == 1)
                .map(|(i, _)| i + 1)
                .collect();
            let pattern = (1..)
                .take_while(|&x| 2 * x < r)
                .find(|&x| ones == alloc::vec![x, x + 1, r - x, r + 1 - x]);
            if palindromic && pattern.is_some() {
                if r == 4 {
                    AuditOutcome::Pass
                } else {
                    AuditOutcome::Fail
                }
            } else {
                AuditOutcome::NotApplicable
            }
        }
        _ => AuditOutcome::NotApplicable,
    };

    let odd_palindrome_shape = match &entries {
        Some(e) if sound && e.len() % 2 == 1 && e.len() >= 3 && e.iter().all(|&m| m >= 1) => {
            let r = e.len();
            let r_prime = (r + 1) / 2;
            let palindromic = e.iter().eq(e.iter().rev());
            let ones: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|(_, &m)| m == 1)
                .map(|(i, _)| i + 1)
                .collect();
            let symmetric_pair = ones.len() == 2 && ones[0] + ones[1] == r + 1;
            if !(palindromic && symmetric_pair) {
                AuditOutcome::NotApplicable
            } else if ones[0] == r_prime {
                AuditOutcome::Fail // the single center entry can never be the 1
            } else if ones[0] == r_prime - 1 {
                let want = crate::twig::l_twig(1, (r_prime - 2) as i64)
                    .concat(&Twig::new(alloc::vec![(r - 2) as i64]))
                    .concat(&crate::twig::r_twig(1, (r_prime - 2) as i64));
                if chain.as_ref() == Some(&want) || chain.as_ref() == Some(&want.transpose()) {
                    AuditOutcome::Pass
                } else {
                    AuditOutcome::Fail
                }
            } else {
                AuditOutcome::Pass
            }
        }
        _ => AuditOutcome::NotApplicable,
    };

    // graph-level checks; hypotheses ask for weights <= -1 throughout
    let all_le_minus_one = g.vertex_ids().all(|v| g.weight(v).unwrap() <= -1);
    let bullets = g.minus_one_vertices();
    let two_adjacent_minus_ones = if sound
        && all_le_minus_one
        && bullets.len() == 2
        && g.has_edge(&bullets[0], &bullets[1])
    {
        match &entries {
            Some(e) if e.len() == 3 => {
                let sorted_is_11m =
                    (e[0] == 1 && e[1] == 1 && e[2] >= 2) || (e[2] == 1 && e[1] == 1 && e[0] >= 2);
                if sorted_is_11m {
                    AuditOutcome::Pass
                } else {
                    AuditOutcome::Fail
                }
            }
            _ => AuditOutcome::Fail,
        }
    } else {
        AuditOutcome::NotApplicable
    };

    let conjugate_pairs = {
        // hypothesis: four (-1)-curves admitting a labeling E1..E4 with
        // E1 meeting E2, E3 meeting E4, and E1 conjugate to E4
        let mut applicable = false;
        if sound && bullets.len() == 4 && all_le_minus_one {
            let edges: Vec<(usize, usize)> = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|(i, j)| g.has_edge(&bullets[*i], &bullets[*j]))
                .collect();
            'outer: for (a, b) in &edges {
                for (c, d) in &edges {
                    if a == c && b == d {
                        continue;
                    }
                    if [c, d].contains(&a) || [c, d].contains(&b) {
                        continue;
                    }
                    for (e1, e4) in [(a, c), (a, d), (b, c), (b, d)] {
                        let (x, y) = (&bullets[*e1], &bullets[*e4]);
                        if g.orbit_of(x) == g.orbit_of(y)
                            && g.orbit_blocks()[g.orbit_of(x).unwrap()].len() > 1
                        {
                            applicable = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if applicable {
            match &entries {
                Some(e) if *e == alloc::vec![1, 1, 1, 1] => AuditOutcome::Pass,
                _ => AuditOutcome::Fail,
            }
        } else {
            AuditOutcome::NotApplicable
        }
    };

    let satellite_chains = if sound {
        satellite_chain_audit(g)
    } else {
        AuditOutcome::NotApplicable
    };

    StructuralAudit {
        chain_interior_one,
        adjacent_pair_forces_r3,
        palindrome_four_ones,
        odd_palindrome_shape,
        two_adjacent_minus_ones,
        conjugate_pairs,
        satellite_chains,
    }
}

fn satellite_chain_audit(g: &WeightedDualGraph) -> AuditOutcome {
    let bullets = g.minus_one_vertices();
    if bullets.is_empty() || !is_forest(g) {
        return AuditOutcome::NotApplicable;
    }
    if g.vertex_ids()
        .any(|v| g.weight(v).unwrap() > -2 && g.weight(v) != Some(-1))
    {
        return AuditOutcome::NotApplicable;
    }
    let keep: BTreeSet<VertexId> = g
        .vertex_ids()
        .filter(|v| g.weight(v) != Some(-1))
        .cloned()
        .collect();
    let comps = connected_components(&g.induced(&keep));
    if comps.len() != bullets.len() + 1 {
        return AuditOutcome::NotApplicable;
    }
    // hypothesis: a unique central component (through the common point) meets
    // every (-1)-curve, and each remaining component meets exactly one
    let touches = |comp: &WeightedDualGraph, b: &VertexId| {
        g.neighbors(b).iter().any(|n| comp.contains_vertex(n))
    };
    let central = match comps
        .iter()
        .position(|c| bullets.iter().all(|b| touches(c, b)))
    {
        Some(i) => i,
        None => return AuditOutcome::NotApplicable,
    };
    for (i, comp) in comps.iter().enumerate() {
        if i != central {
            let met_by = bullets.iter().filter(|b| touches(comp, b)).count();
            if met_by != 1 {
                return AuditOutcome::NotApplicable;
            }
        }
    }
    // conclusions: satellites are chains met terminally; interior forks of
    // the central resolution stay away from the boundary curves
    for (i, comp) in comps.iter().enumerate() {
        if i == central {
            for v in comp.vertex_ids() {
                if comp.degree(v) >= 3 && bullets.iter().any(|b| g.has_edge(v, b)) {
                    return AuditOutcome::Fail;
                }
            }
            continue;
        }
        if as_linear_chain(comp).is_none() {
            return AuditOutcome::Fail;
        }
        let b = bullets.iter().find(|b| touches(comp, b)).unwrap();
        let attach: Vec<VertexId> = g
            .neighbors(b)
            .into_iter()
            .filter(|n| comp.contains_vertex(n))
            .collect();
        if attach.len() != 1 || comp.degree(&attach[0]) > 1 {
            return AuditOutcome::Fail;
        }
    }
    AuditOutcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Catalog, FamilyParams};
    use crate::dual_graph::chain_graph;

    fn cat() -> Catalog {
        Catalog::builtin()
    }

    fn duv(s: &str) -> Vec<DuValType> {
        s.split(',').map(|p| DuValType::parse(p).unwrap()).collect()
    }

    #[test]
    fn analyze_family_24_is_e6() {
        let inst = cat()
            .instantiate(24, &FamilyParams::default(), false)
            .unwrap();
        let report = analyze_singularities(&inst.graph).unwrap();
        assert_eq!(report.count_closure, 1);
        assert_eq!(
            report.components[0].kind,
            SingularityType::DuVal(DuValType::E(6))
        );
        assert_eq!(du_val_degree(&inst.graph).unwrap(), 2);
    }

    #[test]
    fn analyze_family_1_small_is_a1() {
        let p = FamilyParams {
            t: Some(0),
            n: Some(3),
            ..Default::default()
        };
        let inst = cat().instantiate(1, &p, false).unwrap();
        let report = analyze_singularities(&inst.graph).unwrap();
        assert_eq!(report.count_closure, 1);
        assert_eq!(
            report.components[0].kind,
            SingularityType::DuVal(DuValType::A(1))
        );
        assert_eq!(du_val_degree(&inst.graph).unwrap(), 6);
    }

    #[test]
    fn analyze_family_2_components() {
        // at t=0 the pendant m-vertex joins the center: a single A2 point
        let p = FamilyParams {
            t: Some(0),
            m: Some(2),
            n: Some(2),
            ..Default::default()
        };
        let inst = cat().instantiate(2, &p, false).unwrap();
        let report = analyze_singularities(&inst.graph).unwrap();
        assert_eq!(report.count_closure, 1);
        assert_eq!(
            report.components[0].kind,
            SingularityType::DuVal(DuValType::A(2))
        );
        assert_eq!(du_val_degree(&inst.graph).unwrap(), 6);

        // at t=1 the two arm chains become conjugate satellite points
        let p = FamilyParams {
            t: Some(1),
            m: Some(2),
            n: Some(2),
            ..Default::default()
        };
        let inst = cat().instantiate(2, &p, false).unwrap();
        let report = analyze_singularities(&inst.graph).unwrap();
        assert_eq!(report.count_closure, 3); // n + 1
        assert_eq!(report.count_base, 1);
    }

    #[test]
    fn counterexample_boundary_shares_type_with_family_30() {
        // central -3 with four -2 arms, each arm carrying two (-1)-curves
        let mut g = WeightedDualGraph::new();
        g.add_vertex("c", -3, None).unwrap();
        for i in 1..=4 {
            let a = alloc::format!("a{}", i);
            g.add_vertex(&a, -2, None).unwrap();
            g.add_edge("c", &a).unwrap();
            for j in 1..=2 {
                let b = alloc::format!("b{}x{}", i, j);
                g.add_vertex(&b, -1, None).unwrap();
                g.add_edge(&a, &b).unwrap();
            }
        }
        crate::dual_graph::assign_automorphism_orbits(&mut g);
        let report = analyze_singularities(&g).unwrap();
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components[0].kind, SingularityType::LcNotQuotient);

        // family (30) has the same singularity type
        let inst = cat()
            .instantiate(30, &FamilyParams::default(), false)
            .unwrap();
        let r30 = analyze_singularities(&inst.graph).unwrap();
        assert_eq!(r30.components[0].kind, SingularityType::LcNotQuotient);

        // but the boundary itself is not one of the configurations
        let verdict = classify_boundary(&cat(), &g, false);
        assert!(matches!(verdict, BoundaryVerdict::NotMatched { .. }));
    }

    #[test]
    fn never_classify_non_negative_definite() {
        // affine star (determinant 0) with a boundary curve attached
        let mut g = WeightedDualGraph::new();
        g.add_vertex("c", -2, None).unwrap();
        for i in 1..=4 {
            let a = alloc::format!("a{}", i);
            g.add_vertex(&a, -2, None).unwrap();
            g.add_edge("c", &a).unwrap();
        }
        g.add_vertex("e", -1, None).unwrap();
        g.add_edge("a1", "e").unwrap();
        let report = analyze_singularities(&g).unwrap();
        assert_eq!(report.components[0].kind, SingularityType::Unknown);
        assert!(!report.components[0].negative_definite);
    }

    #[test]
    fn du_val_table() {
        assert_eq!(
            contains_affine_plane_duval(3, &duv("E6")).unwrap(),
            DuValVerdict::Contains
        );
        assert_eq!(
            contains_affine_plane_duval(1, &duv("E8")).unwrap(),
            DuValVerdict::Contains
        );
        assert_eq!(
            contains_affine_plane_duval(1, &duv("E7")).unwrap(),
            DuValVerdict::NotContains
        );
        assert_eq!(
            contains_affine_plane_duval(6, &duv("A2")).unwrap(),
            DuValVerdict::Contains
        );
        assert_eq!(
            contains_affine_plane_duval(8, &duv("A1")).unwrap(),
            DuValVerdict::NeedsSmoothRationalPoint
        );
        assert_eq!(
            contains_affine_plane_duval(4, &duv("A2,A1,A1")).unwrap(),
            DuValVerdict::Contains
        );
        assert!(matches!(
            contains_affine_plane_duval(7, &duv("A1")),
            Err(ClassifyError::BadDegree(7))
        ));
        assert!(matches!(
            contains_affine_plane_duval(6, &duv("E6")),
            Err(ClassifyError::ImpossiblePair(..))
        ));
    }

    #[test]
    fn fibration_examples() {
        assert!(fibration_criterion(2, &duv("E6"), false).unwrap());
        assert!(!fibration_criterion(8, &duv("A1"), false).unwrap());
        assert!(fibration_criterion(8, &duv("A1"), true).unwrap());
        assert!(!fibration_criterion(4, &duv("A1"), false).unwrap());
    }

    #[test]
    fn classify_family_21_contains() {
        let inst = cat()
            .instantiate(21, &FamilyParams::default(), false)
            .unwrap();
        let verdict = classify_boundary(&cat(), &inst.graph, false);
        match verdict {
            BoundaryVerdict::ContainsA2 { family, shape, .. } => {
                assert_eq!(family.0, 21);
                assert_eq!(shape, MncShape::HirzebruchPair(2));
            }
            other => panic!("expected ContainsA2, got {:?}", other),
        }
    }

    #[test]
    fn classify_rejects_cycles_and_minimal_graphs() {
        let mut cyc = WeightedDualGraph::new();
        for id in ["a", "b", "c"] {
            cyc.add_vertex(id, -2, None).unwrap();
        }
        cyc.add_edge("a", "b").unwrap();
        cyc.add_edge("b", "c").unwrap();
        cyc.add_edge("c", "a").unwrap();
        assert!(matches!(
            classify_boundary(&cat(), &cyc, false),
            BoundaryVerdict::Rejected { .. }
        ));

        let minimal = chain_graph(&[0, -2]);
        assert!(matches!(
            classify_boundary(&cat(), &minimal, false),
            BoundaryVerdict::Rejected { .. }
        ));
    }

    #[test]
    fn audit_examples() {
        // family (9) instance confirms the odd-palindrome shape
        let p = FamilyParams {
            t: Some(1),
            ..Default::default()
        };
        let inst = cat().instantiate(9, &p, false).unwrap();
        let audit = structural_lemma_audit(&inst.graph);
        assert_eq!(audit.odd_palindrome_shape, AuditOutcome::Pass);
        assert!(audit.passed());

        // a chain with hypotheses unmet is not applicable
        let g = chain_graph(&[-1, -2, -1]);
        let audit = structural_lemma_audit(&g);
        assert_eq!(audit.chain_interior_one, AuditOutcome::NotApplicable);
        assert_eq!(audit.adjacent_pair_forces_r3, AuditOutcome::NotApplicable);
        assert_eq!(audit.two_adjacent_minus_ones, AuditOutcome::NotApplicable);
        assert!(audit.passed());

        // [1,1,m] satisfies the adjacent-pair checks
        let g = chain_graph(&[-1, -1, -4]);
        let audit = structural_lemma_audit(&g);
        assert_eq!(audit.adjacent_pair_forces_r3, AuditOutcome::Pass);
        assert_eq!(audit.two_adjacent_minus_ones, AuditOutcome::Pass);

        // conjugate disjoint pairs force [1,1,1,1]
        let mut g = chain_graph(&[-1, -1, -1, -1]);
        g.set_orbit("v01", "o");
        g.set_orbit("v04", "o");
        let audit = structural_lemma_audit(&g);
        assert_eq!(audit.conjugate_pairs, AuditOutcome::Pass);
    }

    #[test]
    fn duval_format() {
        assert_eq!(format_duval_types(&duv("A1,A2,A1")), "A2+2A1");
        assert_eq!(format_duval_types(&duv("E6")), "E6");
    }
}
