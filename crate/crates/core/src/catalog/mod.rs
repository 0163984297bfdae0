//! Executable encodings of the 52 boundary configurations: instantiation,
//! parameter validation, structural matching, contraction targets and the
//! field-condition situations.
//!
//! Families are described in a small template language (see [`dsl`]); the
//! builtin list lives in [`builtin`] and user-supplied template files reuse
//! the same schema, so external configuration lists can be loaded without
//! code changes.

pub mod builtin;
pub mod dsl;

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::contraction::MncShape;
use crate::dual_graph::{
    assign_automorphism_orbits, is_forest, orbit_isomorphic, WeightedDualGraph,
};
use crate::twig::{adjoint, l_twig, r_twig, Twig};

use dsl::{CaseGroup, DslError, Env, Item, Seg, Slot, Stmt, Template, Var};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FamilyId(pub u32);

impl FamilyId {
    pub fn new(index: u32) -> Option<FamilyId> {
        (1..=52).contains(&index).then_some(FamilyId(index))
    }

    pub fn group(self) -> CaseGroup {
        match self.0 {
            1..=10 => CaseGroup::I,
            11..=27 => CaseGroup::II,
            _ => CaseGroup::III,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// Parameter assignment for a family; `n` doubles as n' for the families
/// whose parameter is the half-count.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FamilyParams {
    pub t: Option<i64>,
    pub t2: Option<i64>,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub twig: Option<Twig>,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, s: String| -> fmt::Result {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", s)
        };
        if let Some(t) = self.t {
            put(f, alloc::format!("t={}", t))?;
        }
        if let Some(t2) = self.t2 {
            put(f, alloc::format!("t'={}", t2))?;
        }
        if let Some(m) = self.m {
            put(f, alloc::format!("m={}", m))?;
        }
        if let Some(n) = self.n {
            put(f, alloc::format!("n={}", n))?;
        }
        if let Some(a) = &self.twig {
            put(f, alloc::format!("A={}", a))?;
        }
        if first {
            write!(f, "-")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub params: FamilyParams,
    pub graph: WeightedDualGraph,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogError {
    UnknownFamily(u32),
    BadParams(String),
    Template(DslError),
    Internal(String),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownFamily(i) => write!(f, "no family with index {}", i),
            CatalogError::BadParams(msg) => write!(f, "bad parameters: {}", msg),
            CatalogError::Template(e) => write!(f, "{}", e),
            CatalogError::Internal(msg) => write!(f, "template invariant violated: {}", msg),
        }
    }
}

impl From<DslError> for CatalogError {
    fn from(e: DslError) -> Self {
        CatalogError::Template(e)
    }
}

/// The loaded template set (builtin plus any user extensions).
#[derive(Clone, Debug)]
pub struct Catalog {
    templates: Vec<Template>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        let templates = dsl::parse_templates(builtin::BUILTIN_TEMPLATES)
            .expect("builtin template table parses");
        let cat = Catalog { templates };
        for tpl in &cat.templates {
            if let Some(id) = FamilyId::new(tpl.index) {
                assert_eq!(id.group(), tpl.group, "builtin group table");
            }
        }
        cat
    }

    /// Appends templates from a user file (same schema, `version 1` header).
    /// Extension indices must not collide with loaded ones.
    pub fn load_extra(&mut self, text: &str) -> Result<(), CatalogError> {
        let extra = dsl::parse_templates(text)?;
        for tpl in &extra {
            if self.templates.iter().any(|t| t.index == tpl.index) {
                return Err(CatalogError::BadParams(alloc::format!(
                    "template index {} is already defined",
                    tpl.index
                )));
            }
        }
        self.templates.extend(extra);
        Ok(())
    }

    pub fn template(&self, index: u32) -> Result<&Template, CatalogError> {
        self.templates
            .iter()
            .find(|t| t.index == index)
            .ok_or(CatalogError::UnknownFamily(index))
    }

    pub fn indices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.templates.iter().map(|t| t.index).collect();
        v.sort();
        v
    }

    /// Fills unset parameters with their smallest admissible values.
    pub fn fill_defaults(
        &self,
        index: u32,
        params: &FamilyParams,
        strict: bool,
    ) -> Result<FamilyParams, CatalogError> {
        let tpl = self.template(index)?;
        let mut out = params.clone();
        if tpl.params.contains(&Var::T) && out.t.is_none() {
            out.t = Some(0);
        }
        if tpl.params.contains(&Var::T2) && out.t2.is_none() {
            out.t2 = Some(0);
        }
        if tpl.params.contains(&Var::M) && out.m.is_none() {
            out.m = Some(2);
        }
        let n_var = n_var_of(tpl);
        if n_var.is_some() && out.n.is_none() {
            out.n = min_n(tpl, strict);
        }
        if tpl.needs_twig && out.twig.is_none() {
            out.twig = Some(Twig::new(vec![2]));
        }
        Ok(out)
    }

    /// Builds the instance graph with its canonical orbit partition.
    pub fn instantiate(
        &self,
        index: u32,
        params: &FamilyParams,
        strict: bool,
    ) -> Result<FamilyInstance, CatalogError> {
        let tpl = self.template(index)?;
        let env = bind_params(tpl, params, strict)?;
        let mut graph = expand_template(tpl, &env, params.twig.as_ref())?;
        for v in graph.vertex_ids() {
            let w = graph.weight(v).unwrap();
            if w != -1 && w > -2 {
                return Err(CatalogError::BadParams(alloc::format!(
                    "parameters give an exceptional curve of self-intersection {}; \
                     every circle must be at most -2",
                    w
                )));
            }
        }
        if !is_forest(&graph) || !crate::dual_graph::is_connected(&graph) {
            return Err(CatalogError::Internal(String::from(
                "instance is not a connected forest",
            )));
        }
        assign_automorphism_orbits(&mut graph);
        // the (-1)-curves of a configuration always form one conjugacy block
        let minus_ones = graph.minus_one_vertices();
        let labels: BTreeSet<_> = minus_ones
            .iter()
            .map(|v| graph.orbit_of(v).unwrap().clone())
            .collect();
        if minus_ones.is_empty() || labels.len() != 1 {
            return Err(CatalogError::Internal(String::from(
                "(-1)-vertices do not form a single orbit",
            )));
        }
        Ok(FamilyInstance {
            id: FamilyId::new(index).unwrap_or(FamilyId(index)),
            params: params.clone(),
            graph,
        })
    }

    /// Number of vertices the instance would have; cheap pre-check for the
    /// matcher.
    pub fn vertex_count_for(
        &self,
        index: u32,
        params: &FamilyParams,
        strict: bool,
    ) -> Result<usize, CatalogError> {
        let tpl = self.template(index)?;
        let env = bind_params(tpl, params, strict)?;
        count_template(tpl, &env, params.twig.as_ref())
    }

    /// All valid instances within the bounds, in deterministic parameter
    /// order (t, t', m, n, twig-pool order).
    pub fn enumerate_instances(
        &self,
        index: u32,
        bounds: &EnumBounds,
        strict: bool,
    ) -> Result<Vec<FamilyInstance>, CatalogError> {
        let tpl = self.template(index)?;
        let mut out = Vec::new();
        for params in param_grid(tpl, bounds, strict) {
            out.push(self.instantiate(index, &params, strict)?);
        }
        Ok(out)
    }

    /// Finds every (family, parameters) pair whose instance is isomorphic to
    /// `g` as a weighted graph with compatible orbit blocks. Sorted by family
    /// index, then parameter order.
    pub fn match_graph(
        &self,
        g: &WeightedDualGraph,
        strict: bool,
    ) -> Vec<(FamilyId, FamilyParams)> {
        let mut results = Vec::new();
        if !is_forest(g) || g.is_empty() {
            return results;
        }
        let total = g.vertex_count();
        let g_code = crate::dual_graph::canonical_code(g);
        let mut g_weights: Vec<i64> = g.vertex_ids().map(|v| g.weight(v).unwrap()).collect();
        g_weights.sort();
        let m_candidates: Vec<i64> = {
            let mut s: BTreeSet<i64> = g_weights.iter().filter(|&&w| w <= -2).map(|w| -w).collect();
            s.insert(2);
            s.into_iter().collect()
        };
        let twig_candidates = subpath_twigs(g);

        for index in self.indices() {
            let tpl = self.template(index).unwrap();
            let a_list: Vec<Option<Twig>> = if tpl.needs_twig {
                twig_candidates.iter().cloned().map(Some).collect()
            } else {
                vec![None]
            };
            let m_list: Vec<Option<i64>> = if tpl.params.contains(&Var::M) {
                m_candidates.iter().copied().map(Some).collect()
            } else {
                vec![None]
            };
            let n_min = match n_var_of(tpl) {
                Some(_) => min_n(tpl, strict).unwrap_or(1),
                None => 0,
            };
            // instance sizes grow monotonically in t, t' and n, so each loop
            // stops once its smallest continuation already overshoots
            let count_of = |t: Option<i64>, t2: Option<i64>, n: Option<i64>, a: &Option<Twig>| {
                let probe = FamilyParams {
                    t,
                    t2,
                    m: m_list[0].map(|_| 2),
                    n,
                    twig: a.clone(),
                };
                self.vertex_count_for(index, &probe, strict).ok()
            };
            for a in &a_list {
                for t in opt_range(tpl.params.contains(&Var::T), total as i64) {
                    let t2_floor = tpl.params.contains(&Var::T2).then_some(0);
                    let n_floor = n_var_of(tpl).map(|_| n_min);
                    match count_of(t, t2_floor, n_floor, a) {
                        Some(c) if c > total => break,
                        Some(_) => {}
                        None => break,
                    }
                    for t2 in opt_range(tpl.params.contains(&Var::T2), total as i64) {
                        match count_of(t, t2, n_floor, a) {
                            Some(c) if c > total => break,
                            Some(_) => {}
                            None => break,
                        }
                        for n in opt_range_from(n_var_of(tpl).is_some(), n_min, total as i64) {
                            let count = match count_of(t, t2, n, a) {
                                Some(c) => c,
                                None => break,
                            };
                            if count > total {
                                break;
                            }
                            if count < total {
                                continue;
                            }
                            for m in &m_list {
                                let params = FamilyParams {
                                    t,
                                    t2,
                                    m: *m,
                                    n,
                                    twig: a.clone(),
                                };
                                // cheap raw expansion first; the canonical
                                // orbit assignment only runs on survivors
                                let raw = match bind_params(tpl, &params, strict).and_then(|env| {
                                    expand_template(tpl, &env, params.twig.as_ref())
                                }) {
                                    Ok(graph) => graph,
                                    Err(_) => continue,
                                };
                                let mut ws: Vec<i64> =
                                    raw.vertex_ids().map(|v| raw.weight(v).unwrap()).collect();
                                ws.sort();
                                if ws != g_weights
                                    || crate::dual_graph::canonical_code(&raw) != g_code
                                {
                                    continue;
                                }
                                if let Ok(inst) = self.instantiate(index, &params, strict) {
                                    if orbit_isomorphic(&inst.graph, g) {
                                        results.push((inst.id, params));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        results
    }
}

fn opt_range(declared: bool, max: i64) -> Vec<Option<i64>> {
    if declared {
        (0..=max).map(Some).collect()
    } else {
        vec![None]
    }
}

fn opt_range_from(declared: bool, from: i64, max: i64) -> Vec<Option<i64>> {
    if declared {
        (from..=max.max(from)).map(Some).collect()
    } else {
        vec![None]
    }
}

fn n_var_of(tpl: &Template) -> Option<Var> {
    if tpl.params.contains(&Var::N) {
        Some(Var::N)
    } else if tpl.params.contains(&Var::N2) {
        Some(Var::N2)
    } else {
        None
    }
}

/// Smallest n (or n') accepted by the family constraints.
pub fn min_n(tpl: &Template, strict: bool) -> Option<i64> {
    let n_var = n_var_of(tpl)?;
    'candidate: for cand in 1..=64 {
        let mut env = Env::default();
        for v in &tpl.params {
            let fill = match v {
                Var::T | Var::T2 => 0,
                Var::M => 2,
                Var::N | Var::N2 => cand,
                Var::MA => continue,
            };
            env.bind(*v, fill);
        }
        env.bind(Var::MA, 3);
        let _ = n_var;
        for req in &tpl.requires {
            if req.strict_only && !strict {
                continue;
            }
            match (req.lhs.eval(&env), req.rhs.eval(&env)) {
                (Ok(l), Ok(r)) if l >= r => {}
                _ => continue 'candidate,
            }
        }
        return Some(cand);
    }
    None
}

fn bind_params(tpl: &Template, params: &FamilyParams, strict: bool) -> Result<Env, CatalogError> {
    let mut env = Env::default();
    let bad = |msg: String| CatalogError::BadParams(msg);

    let mut expect = |var: Var, supplied: Option<i64>, what: &str| -> Result<(), CatalogError> {
        match (tpl.params.contains(&var), supplied) {
            (true, Some(v)) => {
                env.bind(var, v);
                Ok(())
            }
            (true, None) => Err(bad(alloc::format!(
                "family {} needs parameter {}",
                tpl.index,
                what
            ))),
            (false, Some(_)) => Err(bad(alloc::format!(
                "family {} takes no parameter {}",
                tpl.index,
                what
            ))),
            (false, None) => Ok(()),
        }
    };
    expect(Var::T, params.t, "t")?;
    expect(Var::T2, params.t2, "t'")?;
    expect(Var::M, params.m, "m")?;
    match n_var_of(tpl) {
        Some(v) => match params.n {
            Some(n) => env.bind(v, n),
            None => {
                return Err(bad(alloc::format!(
                    "family {} needs parameter {}",
                    tpl.index,
                    if v == Var::N { "n" } else { "n'" }
                )))
            }
        },
        None => {
            if params.n.is_some() {
                return Err(bad(alloc::format!(
                    "family {} takes no parameter n",
                    tpl.index
                )));
            }
        }
    }
    match (&params.twig, tpl.needs_twig) {
        (Some(a), true) => {
            if a.is_empty() || !a.is_admissible() {
                return Err(bad(String::from(
                    "the twig parameter A must be admissible and nonempty",
                )));
            }
            env.bind(Var::MA, crate::twig::m_a(a).expect("admissible"));
        }
        (None, true) => {
            return Err(bad(alloc::format!(
                "family {} needs a twig parameter A",
                tpl.index
            )))
        }
        (Some(_), false) => {
            return Err(bad(alloc::format!(
                "family {} takes no twig parameter",
                tpl.index
            )))
        }
        (None, false) => {}
    }
    // global bounds
    if let Some(t) = params.t {
        if t < 0 {
            return Err(bad(String::from("t must be >= 0")));
        }
    }
    if let Some(t2) = params.t2 {
        if t2 < 0 {
            return Err(bad(String::from("t' must be >= 0")));
        }
    }
    if let Some(m) = params.m {
        if m < 2 {
            return Err(bad(String::from("m must be >= 2")));
        }
    }
    if let Some(n) = params.n {
        if n < 1 {
            return Err(bad(String::from("n must be >= 1")));
        }
    }
    for req in &tpl.requires {
        if req.strict_only && !strict {
            continue;
        }
        let l = req.lhs.eval(&env).map_err(CatalogError::BadParams)?;
        let r = req.rhs.eval(&env).map_err(CatalogError::BadParams)?;
        if l < r {
            return Err(bad(alloc::format!(
                "family {} requires {} >= {} (got {} < {})",
                tpl.index,
                describe_expr(&req.lhs),
                r,
                l,
                r
            )));
        }
    }
    Ok(env)
}

fn describe_expr(e: &dsl::Expr) -> String {
    match e {
        dsl::Expr::Var(v) => v.name().to_string(),
        dsl::Expr::Const(c) => alloc::format!("{}", c),
        _ => String::from("<expr>"),
    }
}

fn slot_entries(slot: Slot, a: &Twig) -> Vec<i64> {
    let astar = adjoint(a).expect("admissible twig parameter");
    match slot {
        Slot::A => a.entries().to_vec(),
        Slot::TransposeA => a.transpose().entries().to_vec(),
        Slot::Adjoint => astar.entries().to_vec(),
        Slot::TransposeAdjoint => astar.transpose().entries().to_vec(),
        Slot::UnderlineAdjoint => astar.underline().entries().to_vec(),
        Slot::TransposeUnderlineAdjoint => astar.underline().transpose().entries().to_vec(),
    }
}

fn seg_entries(seg: &Seg, env: &Env, a: Option<&Twig>) -> Result<Vec<i64>, CatalogError> {
    let ev = |e: &dsl::Expr| e.eval(env).map_err(CatalogError::BadParams);
    Ok(match seg {
        Seg::Lit(v) => v.clone(),
        Seg::L(m, t) => {
            let (m, t) = (ev(m)?, ev(t)?);
            if m < 1 || t < 0 {
                return Err(CatalogError::BadParams(String::from(
                    "bad L(m;t) arguments",
                )));
            }
            l_twig(m, t).entries().to_vec()
        }
        Seg::R(m, t) => {
            let (m, t) = (ev(m)?, ev(t)?);
            if m < 1 || t < 0 {
                return Err(CatalogError::BadParams(String::from(
                    "bad R(m;t) arguments",
                )));
            }
            r_twig(m, t).entries().to_vec()
        }
        Seg::U(t) => {
            let t = ev(t)?;
            if t < 0 {
                return Err(CatalogError::BadParams(String::from("bad U(t) argument")));
            }
            vec![2; t as usize]
        }
        Seg::Slot(slot) => slot_entries(
            *slot,
            a.ok_or_else(|| CatalogError::Internal(String::from("slot without twig")))?,
        ),
    })
}

struct Builder {
    graph: WeightedDualGraph,
    next_circle: u32,
    next_bullet: u32,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            graph: WeightedDualGraph::new(),
            next_circle: 0,
            next_bullet: 0,
        }
    }

    fn circle(&mut self, weight: i64) -> String {
        self.next_circle += 1;
        let id = alloc::format!("c{:03}", self.next_circle);
        self.graph
            .add_vertex(&id, weight, None)
            .expect("fresh circle id");
        id
    }

    fn bullet(&mut self) -> String {
        self.next_bullet += 1;
        let id = alloc::format!("e{:03}", self.next_bullet);
        self.graph
            .add_vertex(&id, -1, None)
            .expect("fresh bullet id");
        id
    }
}

/// Expands one chain-item list into vertices, returning (first, last) per the
/// connected run; empty segments are skipped.
fn build_items(
    b: &mut Builder,
    items: &[Item],
    env: &Env,
    a: Option<&Twig>,
    named: &mut alloc::collections::BTreeMap<String, String>,
) -> Result<Option<(String, String)>, CatalogError> {
    let mut first: Option<String> = None;
    let mut prev: Option<String> = None;
    for item in items {
        let (seg_first, seg_last) = match item {
            Item::Bullet => {
                let id = b.bullet();
                (id.clone(), id)
            }
            Item::Circle {
                name,
                weight,
                bullets,
            } => {
                let w = weight.eval(env).map_err(CatalogError::BadParams)?;
                let id = b.circle(w);
                if let Some(n) = name {
                    named.insert(n.clone(), id.clone());
                }
                for _ in 0..*bullets {
                    let e = b.bullet();
                    b.graph.add_edge(&id, &e).expect("pendant bullet edge");
                }
                (id.clone(), id)
            }
            Item::NodeRef(n) => {
                let id = named
                    .get(n)
                    .ok_or_else(|| {
                        CatalogError::Internal(alloc::format!(
                            "reference to undeclared node `{}`",
                            n
                        ))
                    })?
                    .clone();
                (id.clone(), id)
            }
            Item::Seg(seg) => {
                let entries = seg_entries(seg, env, a)?;
                if entries.is_empty() {
                    continue;
                }
                let mut ids = Vec::with_capacity(entries.len());
                for &m in &entries {
                    ids.push(b.circle(-m));
                }
                for pair in ids.windows(2) {
                    b.graph.add_edge(&pair[0], &pair[1]).expect("segment edge");
                }
                (ids[0].clone(), ids.last().unwrap().clone())
            }
        };
        if let Some(p) = &prev {
            b.graph
                .add_edge(p, &seg_first)
                .map_err(|e| CatalogError::Internal(alloc::format!("{}", e)))?;
        }
        if first.is_none() {
            first = Some(seg_first);
        }
        prev = Some(seg_last);
    }
    Ok(first.map(|f| (f, prev.unwrap())))
}

fn expand_template(
    tpl: &Template,
    env: &Env,
    a: Option<&Twig>,
) -> Result<WeightedDualGraph, CatalogError> {
    let mut b = Builder::new();
    let mut named = alloc::collections::BTreeMap::new();
    for stmt in &tpl.stmts {
        match stmt {
            Stmt::Node { name, weight } => {
                let w = weight.eval(env).map_err(CatalogError::BadParams)?;
                let id = b.circle(w);
                named.insert(name.clone(), id);
            }
            Stmt::Chain(items) => {
                build_items(&mut b, items, env, a, &mut named)?;
            }
            Stmt::Pendant { items, at } => {
                let anchor = named
                    .get(at)
                    .ok_or_else(|| {
                        CatalogError::Internal(alloc::format!("pendant at unknown node `{}`", at))
                    })?
                    .clone();
                if let Some((first, _)) = build_items(&mut b, items, env, a, &mut named)? {
                    b.graph
                        .add_edge(&anchor, &first)
                        .map_err(|e| CatalogError::Internal(alloc::format!("{}", e)))?;
                }
            }
            Stmt::Fan { count, at, arm } => {
                let anchor = named
                    .get(at)
                    .ok_or_else(|| {
                        CatalogError::Internal(alloc::format!("fan at unknown node `{}`", at))
                    })?
                    .clone();
                let k = count.eval(env).map_err(CatalogError::BadParams)?;
                if k < 1 {
                    return Err(CatalogError::BadParams(String::from(
                        "fan count must be >= 1",
                    )));
                }
                for _ in 0..k {
                    if let Some((first, _)) = build_items(&mut b, arm, env, a, &mut named)? {
                        b.graph
                            .add_edge(&anchor, &first)
                            .map_err(|e| CatalogError::Internal(alloc::format!("{}", e)))?;
                    }
                }
            }
        }
    }
    Ok(b.graph)
}

fn count_template(tpl: &Template, env: &Env, a: Option<&Twig>) -> Result<usize, CatalogError> {
    let items_len = |items: &[Item]| -> Result<usize, CatalogError> {
        let mut n = 0usize;
        for item in items {
            n += match item {
                Item::Bullet => 1,
                Item::Circle { bullets, .. } => 1 + *bullets as usize,
                Item::NodeRef(_) => 0,
                Item::Seg(seg) => seg_entries(seg, env, a)?.len(),
            };
        }
        Ok(n)
    };
    let mut total = 0usize;
    for stmt in &tpl.stmts {
        total += match stmt {
            Stmt::Node { .. } => 1,
            Stmt::Chain(items) | Stmt::Pendant { items, .. } => items_len(items)?,
            Stmt::Fan { count, arm, .. } => {
                let k = count.eval(env).map_err(CatalogError::BadParams)?;
                if k < 1 {
                    return Err(CatalogError::BadParams(String::from(
                        "fan count must be >= 1",
                    )));
                }
                (k as usize) * items_len(arm)?
            }
        };
    }
    Ok(total)
}

/// Bounds for instance enumeration.
#[derive(Clone, Debug)]
pub struct EnumBounds {
    pub max_t: i64,
    pub max_t2: i64,
    pub max_m: i64,
    /// how many values of n beyond the family minimum (0 = just the minimum)
    pub n_span: i64,
    pub twig_pool: Vec<Twig>,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds {
            max_t: 1,
            max_t2: 1,
            max_m: 3,
            n_span: 1,
            twig_pool: crate::twig::admissible_twigs_up_to(12),
        }
    }
}

fn param_grid(tpl: &Template, bounds: &EnumBounds, strict: bool) -> Vec<FamilyParams> {
    let t_vals: Vec<Option<i64>> = if tpl.params.contains(&Var::T) {
        (0..=bounds.max_t).map(Some).collect()
    } else {
        vec![None]
    };
    let t2_vals: Vec<Option<i64>> = if tpl.params.contains(&Var::T2) {
        (0..=bounds.max_t2).map(Some).collect()
    } else {
        vec![None]
    };
    let m_vals: Vec<Option<i64>> = if tpl.params.contains(&Var::M) {
        (2..=bounds.max_m.max(2)).map(Some).collect()
    } else {
        vec![None]
    };
    let n_vals: Vec<Option<i64>> = match min_n(tpl, strict) {
        Some(min) => (min..=min + bounds.n_span).map(Some).collect(),
        None => vec![None],
    };
    let a_vals: Vec<Option<Twig>> = if tpl.needs_twig {
        bounds.twig_pool.iter().cloned().map(Some).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for t in &t_vals {
        for t2 in &t2_vals {
            for m in &m_vals {
                for n in &n_vals {
                    for a in &a_vals {
                        out.push(FamilyParams {
                            t: *t,
                            t2: *t2,
                            m: *m,
                            n: *n,
                            twig: a.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// All admissible twigs readable along a path of `g` (both orientations).
fn subpath_twigs(g: &WeightedDualGraph) -> Vec<Twig> {
    let ids: Vec<_> = g.vertex_ids().cloned().collect();
    let mut set: BTreeSet<Twig> = BTreeSet::new();
    for start in &ids {
        // DFS collecting simple paths from `start`
        let mut stack = vec![(start.clone(), vec![start.clone()])];
        while let Some((v, path)) = stack.pop() {
            let entries: Vec<i64> = path.iter().map(|p| -g.weight(p).unwrap()).collect();
            if entries.iter().all(|&m| m >= 2) {
                set.insert(Twig::new(entries));
            } else {
                continue; // extending an inadmissible path stays inadmissible
            }
            for n in g.neighbors(&v) {
                if !path.contains(&n) {
                    let mut next = path.clone();
                    next.push(n.clone());
                    stack.push((n, next));
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Minimal boundary the family contracts to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MncTarget {
    Fixed(MncShape),
    /// Hirzebruch pair whose degree is the family parameter m
    HirzebruchOfParamM,
}

pub fn mnc_target(id: FamilyId) -> MncTarget {
    const P2: [u32; 16] = [1, 6, 7, 9, 10, 26, 27, 30, 31, 33, 34, 48, 49, 50, 51, 52];
    const QUADRIC: [u32; 5] = [4, 5, 8, 32, 35];
    const F2: [u32; 20] = [
        11, 13, 14, 15, 16, 17, 20, 21, 22, 23, 24, 25, 28, 29, 36, 37, 38, 39, 43, 44,
    ];
    const F3: [u32; 7] = [12, 40, 41, 42, 45, 46, 47];
    const FM: [u32; 4] = [2, 3, 18, 19];
    let i = id.0;
    if P2.contains(&i) {
        MncTarget::Fixed(MncShape::ProjectivePlaneLine)
    } else if QUADRIC.contains(&i) {
        MncTarget::Fixed(MncShape::HirzebruchPair(0))
    } else if F2.contains(&i) {
        MncTarget::Fixed(MncShape::HirzebruchPair(2))
    } else if F3.contains(&i) {
        MncTarget::Fixed(MncShape::HirzebruchPair(3))
    } else if FM.contains(&i) {
        MncTarget::HirzebruchOfParamM
    } else {
        unreachable!("family index out of range")
    }
}

/// Resolves the target for concrete parameters.
pub fn mnc_target_shape(id: FamilyId, params: &FamilyParams) -> Result<MncShape, CatalogError> {
    match mnc_target(id) {
        MncTarget::Fixed(s) => Ok(s),
        MncTarget::HirzebruchOfParamM => params
            .m
            .map(MncShape::HirzebruchPair)
            .ok_or_else(|| CatalogError::BadParams(String::from("family target needs m"))),
    }
}

/// Field-condition situations: which conjugacy degrees the base field must
/// admit for the configuration to exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Situation {
    S1 {
        n2: i64,
        also_s3: Option<(i64, i64)>,
    },
    S2,
    S3 {
        n1: i64,
        n2: i64,
    },
    S4 {
        n1: i64,
    },
}

impl fmt::Display for Situation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Situation::S1 { n2, also_s3: None } => write!(f, "Situation 1 (n2={})", n2),
            Situation::S1 {
                n2,
                also_s3: Some((a, b)),
            } => write!(
                f,
                "Situation 1 (n2={}); also listed under Situation 3 (n1={}, n2={})",
                n2, a, b
            ),
            Situation::S2 => write!(f, "Situation 2"),
            Situation::S3 { n1, n2 } => write!(f, "Situation 3 (n1={}, n2={})", n1, n2),
            Situation::S4 { n1 } => write!(f, "Situation 4 (n1={})", n1),
        }
    }
}

pub fn field_condition(
    catalog: &Catalog,
    id: FamilyId,
    params: &FamilyParams,
    strict: bool,
) -> Result<Situation, CatalogError> {
    let tpl = catalog.template(id.0)?;
    bind_params(tpl, params, strict)?;
    let n = params.n;
    Ok(match id.0 {
        4 => Situation::S1 {
            n2: n.unwrap(),
            also_s3: None,
        },
        5 => {
            let np = n.unwrap();
            if np >= 2 {
                Situation::S1 {
                    n2: np,
                    also_s3: None,
                }
            } else {
                Situation::S2
            }
        }
        35 => Situation::S1 {
            n2: 2,
            also_s3: Some((2, 2)),
        },
        8 | 32 => Situation::S2,
        6 | 7 => {
            let np = n.unwrap();
            if np >= 2 {
                Situation::S3 { n1: 2, n2: np }
            } else {
                Situation::S4 { n1: 2 }
            }
        }
        20 | 45 => Situation::S3 { n1: 2, n2: 2 },
        37 => Situation::S3 { n1: 2, n2: 3 },
        48 => Situation::S3 { n1: 3, n2: 2 },
        1 | 2 | 3 => Situation::S4 { n1: n.unwrap() },
        36 => Situation::S4 { n1: 5 },
        14 | 30 | 31 => Situation::S4 { n1: 4 },
        13 | 26 | 27 | 28 | 29 | 49 | 50 | 51 | 52 => Situation::S4 { n1: 3 },
        _ => Situation::S4 { n1: 2 },
    })
}
