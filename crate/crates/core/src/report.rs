//! The theorem registry, per-group reports and their JSON schema.
//!
//! Each registry id names one checkable statement about centralizers,
//! centers, covers or the centralizer graph. Running the registry on a
//! group yields exactly one result per id: `pass`, `fail` with a witness,
//! or `skipped` when the statement's hypothesis excludes the group.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::atlas::{AtlasSummary, CentralizerAtlas, EntryId};
use crate::cgraph::{self, CentralizerGraph};
use crate::classify::{self, ClassificationReport, Inapplicable};
use crate::covers::{self, CoverFamily, CoverVerdict, SweepConfig};
use crate::group::{AssociativityCheck, Elem, Group, Source};

pub const SCHEMA: &str = "centracover/1";

/// Edge rule used for the centralizer graph, recorded in every report.
pub const EDGE_RULE: &str = "Z_i <= C_j for distinct vertices i, j";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremResult {
    pub id: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupRef {
    pub name: String,
    pub order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub group: GroupRef,
    pub theorems: Vec<TheoremResult>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremResult> {
        self.theorems.iter().filter(|t| t.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: &str) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| t.id == id)
    }
}

enum Outcome {
    Pass,
    Fail(Value),
    Skipped(Inapplicable),
}

impl Outcome {
    fn check(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }
}

/// Everything a check may look at.
pub struct Context<'a> {
    pub atlas: &'a CentralizerAtlas,
    pub graph: &'a CentralizerGraph,
    pub config: SweepConfig,
}

impl Context<'_> {
    fn group(&self) -> &Group {
        self.atlas.group()
    }

    fn elem(&self, x: Elem) -> Value {
        json!({ "index": x, "label": self.group().label(x) })
    }

    fn entries(&self, ids: &[EntryId]) -> Value {
        Value::Array(
            ids.iter()
                .map(|&id| {
                    let rep = self.atlas.entry(id).representative;
                    json!({ "entry": id, "representative": self.group().label(rep) })
                })
                .collect(),
        )
    }

    fn noncentral(&self) -> Vec<Elem> {
        let zg = self.atlas.center_subgroup();
        self.group()
            .elements()
            .filter(|&x| !zg.contains(x))
            .collect()
    }
}

type Check = fn(&Context) -> Outcome;

/// The fixed registry: id, one-line statement, check.
const REGISTRY: &[(&str, &str, Check)] = &[
    (
        "lemma-2.1",
        "a in C(b) <=> Z(a) <= C(b) <=> Z(b) <= C(a)",
        commuting_pairs,
    ),
    (
        "lemma-2.2",
        "C(a) = Z(a) <=> C(a) abelian <=> C(a) maximal abelian",
        abelian_centralizers,
    ),
    (
        "cor-2.3",
        "C(a) is the union of Z(b), b in C(a) \\ Z(G)",
        union_of_centers,
    ),
    ("lemma-2.3", "C(g) <= C(h) <=> Z(h) <= Z(g)", antitone_order),
    (
        "cor-2.4",
        "C -> Z(C) is an order-reversing bijection with inverse Z -> C(Z)",
        correspondence,
    ),
    (
        "lemma-2.5",
        "Z(g) meet Z(h) is Z(G) or the product of the Z(c) inside it",
        intersections,
    ),
    (
        "prop-3.1",
        "a centralizer family covers <=> each Z(x) lies in a member",
        center_containment,
    ),
    (
        "thm-1.1a",
        "maximal centralizers cover G",
        maximal_centralizers_cover,
    ),
    (
        "thm-1.1b",
        "minimal centralizers cover G",
        minimal_centralizers_cover,
    ),
    ("thm-3.3", "maximal centers cover G", maximal_centers_cover),
    (
        "lemma-3.2",
        "Z(g) \\ Z(G) splits into Z* classes; membership equivalences",
        star_decomposition,
    ),
    (
        "lemma-3.4",
        "every centralizer contains a maximal center",
        contains_maximal_center,
    ),
    (
        "cor-3.5",
        "a maximal center is the only center containing its Z* class",
        unique_container,
    ),
    (
        "thm-3.6",
        "maximal centers are irredundant; a center subset covers iff it has them all",
        maximal_centers_irredundant,
    ),
    (
        "thm-1.2",
        "the maximal centers are the only irredundant cover inside the centers",
        unique_irredundant_centers,
    ),
    (
        "thm-1.3",
        "cover <=> maximal centers contained; irredundant covers have size <= #maximal centers",
        cover_criterion,
    ),
    (
        "thm-1.4",
        "cover <=> dominating; irredundant <=> minimal dominating",
        domination,
    ),
    (
        "thm-4.2",
        "minimal centers pairwise nonadjacent => maximal centralizers irredundant",
        nonadjacency,
    ),
    ("lemma-5.1", "the four F-group conditions agree", f_criteria),
    (
        "cor-5.2",
        "F-group: b not in Z(a) => Z(a) meet Z(b) = Z(G)",
        f_disjoint_centers,
    ),
    (
        "cor-5.3",
        "F-group <=> all centralizers (centers) both maximal and minimal",
        f_max_min,
    ),
    (
        "cor-5.4",
        "F-group: C(a) meet Z(b) = Z(G) or Z(b) <= C(a)",
        f_dichotomy,
    ),
    (
        "lemma-5.6",
        "C maximal <=> Z minimal <=> Z* = Z \\ Z(G)",
        maximality,
    ),
    (
        "lemma-5.7",
        "F-group: C(a) nonabelian <=> partner b outside C(a) with Z(G) < C(a) meet C(b)",
        f_partner,
    ),
    (
        "thm-1.5",
        "F-group <=> the Z \\ Z(G) partition G \\ Z(G)",
        partition,
    ),
    (
        "thm-1.6",
        "F p-group: number of centralizers is 1 mod p",
        mod_p,
    ),
    (
        "thm-5.9",
        "F p-group, not CA: some nonabelian C has exp(C) = exp(Z(C))",
        exponent,
    ),
    (
        "thm-1.7",
        "F-group: the centralizers form an irredundant cover <=> CA",
        ca_irredundance,
    ),
    ("ca-implies-f", "every CA-group is an F-group", ca_implies_f),
];

pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|(id, _, _)| *id).collect()
}

/// Registry ids with their one-line statements.
pub fn registry_statements() -> Vec<(&'static str, &'static str)> {
    REGISTRY.iter().map(|(id, s, _)| (*id, *s)).collect()
}

/// Runs the selected registry entries (all when `only` is `None`), in
/// registry order.
pub fn run_theorems(
    atlas: &CentralizerAtlas,
    graph: &CentralizerGraph,
    config: SweepConfig,
    only: Option<&[String]>,
    timings: bool,
) -> TheoremReport {
    let ctx = Context {
        atlas,
        graph,
        config,
    };
    let theorems = REGISTRY
        .iter()
        .filter(|(id, _, _)| only.is_none_or(|ids| ids.iter().any(|s| s == id)))
        .map(|(id, _, check)| {
            let start = Instant::now();
            let outcome = check(&ctx);
            let millis = timings.then(|| start.elapsed().as_millis() as u64);
            let (status, hypothesis, witness) = match outcome {
                Outcome::Pass => (Status::Pass, None, None),
                Outcome::Fail(w) => (Status::Fail, None, Some(w)),
                Outcome::Skipped(why) => (Status::Skipped, Some(why.to_string()), None),
            };
            TheoremResult {
                id,
                status,
                hypothesis,
                witness,
                millis,
            }
        })
        .collect();
    TheoremReport {
        group: GroupRef {
            name: atlas.group().name().to_string(),
            order: atlas.group().order(),
        },
        theorems,
    }
}

fn commuting_pairs(ctx: &Context) -> Outcome {
    let a_ = ctx.atlas;
    let g = ctx.group();
    let nc = ctx.noncentral();
    for &a in &nc {
        let ea = a_.entry(a_.entry_of(a).expect("noncentral"));
        for &b in &nc {
            let eb = a_.entry(a_.entry_of(b).expect("noncentral"));
            let x = eb.centralizer.contains(a);
            let y = ea.center.is_subset(&eb.centralizer);
            let z = eb.center.is_subset(&ea.centralizer);
            if x != y || y != z || x != g.commute(a, b) {
                return Outcome::Fail(json!({ "a": ctx.elem(a), "b": ctx.elem(b) }));
            }
        }
    }
    Outcome::check(
        ctx.graph.is_symmetric() && ctx.graph.agrees_with_commutation(),
        || json!({ "graph": "edge rule disagrees with commutation" }),
    )
}

fn abelian_centralizers(ctx: &Context) -> Outcome {
    let g = ctx.group();
    for e in ctx.atlas.entries() {
        let equal = e.centralizer == e.center;
        let abelian = g.is_abelian(&e.centralizer);
        let maximal_abelian = abelian
            && g.elements()
                .filter(|&x| !e.centralizer.contains(x))
                .all(|x| {
                    let mut s = e.centralizer.members().clone();
                    s.insert(x);
                    !g.is_abelian(&g.subgroup_generated(&s))
                });
        if equal != abelian || abelian != maximal_abelian || abelian != e.flags.centralizer_abelian
        {
            return Outcome::Fail(ctx.entries(&[e.id]));
        }
    }
    Outcome::Pass
}

fn union_of_centers(ctx: &Context) -> Outcome {
    match (0..ctx.atlas.len()).find(|&id| !ctx.atlas.union_of_centers(id)) {
        Some(id) => Outcome::Fail(ctx.entries(&[id])),
        None => Outcome::Pass,
    }
}

fn antitone_order(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    let k = a.len();
    for i in 0..k {
        for j in 0..k {
            let (ei, ej) = (a.entry(i), a.entry(j));
            let c_le = ei.centralizer.is_subset(&ej.centralizer);
            let z_ge = ej.center.is_subset(&ei.center);
            let same = ei.centralizer == ej.centralizer || ei.center == ej.center;
            if c_le != z_ge || c_le != a.centralizer_le(i, j) || same != (i == j) {
                return Outcome::Fail(ctx.entries(&[i, j]));
            }
        }
    }
    Outcome::Pass
}

fn correspondence(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    for id in 0..a.len() {
        if a.phi_inverse(a.phi(id)) != Ok(id) {
            return Outcome::Fail(ctx.entries(&[id]));
        }
    }
    let ok = a.maximal_center_ids() == a.maximal_center_ids_direct()
        && a.minimal_center_ids() == a.minimal_center_ids_direct();
    Outcome::check(
        ok,
        || json!({ "extremal_centers": "order reversal broken" }),
    )
}

fn intersections(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let d = a.intersection_decomposition(i, j);
            if !d.generated_matches || !d.product_matches {
                return Outcome::Fail(json!({
                    "entries": ctx.entries(&[i, j]),
                    "generated_matches": d.generated_matches,
                    "product_matches": d.product_matches,
                }));
            }
        }
    }
    Outcome::Pass
}

fn sweep_witness(ids: &Option<Vec<EntryId>>, ctx: &Context) -> Value {
    ids.as_ref().map_or(Value::Null, |ids| ctx.entries(ids))
}

fn center_containment(ctx: &Context) -> Outcome {
    let o = covers::center_containment_sweep(ctx.atlas, &ctx.config);
    Outcome::check(o.holds, || sweep_witness(&o.counterexample, ctx))
}

fn family_covers(ctx: &Context, family: &CoverFamily) -> Outcome {
    match covers::is_cover(ctx.atlas, family) {
        Ok(CoverVerdict { is_cover: true, .. }) => Outcome::Pass,
        Ok(v) => Outcome::Fail(json!({
            "uncovered": v.uncovered_witness.map(|x| ctx.elem(x)),
        })),
        Err(e) => Outcome::Fail(json!({ "error": e.to_string() })),
    }
}

fn maximal_centralizers_cover(ctx: &Context) -> Outcome {
    family_covers(ctx, &covers::maximal_centralizer_cover(ctx.atlas))
}

fn minimal_centralizers_cover(ctx: &Context) -> Outcome {
    family_covers(ctx, &covers::minimal_centralizer_cover(ctx.atlas))
}

fn maximal_centers_cover(ctx: &Context) -> Outcome {
    family_covers(ctx, &covers::maximal_center_cover(ctx.atlas))
}

fn star_decomposition(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    for id in 0..a.len() {
        if !a.star2_decomposition(id).union_check {
            return Outcome::Fail(ctx.entries(&[id]));
        }
    }
    let nc = ctx.noncentral();
    for &g in &nc {
        let eg = a.entry(a.entry_of(g).expect("noncentral"));
        for &h in &nc {
            let eh = a.entry(a.entry_of(h).expect("noncentral"));
            let conds = [
                eg.center.contains(h),
                eh.zstar.is_subset(eg.center.members()),
                eh.center.is_subset(&eg.center),
                eg.centralizer.is_subset(&eh.centralizer),
            ];
            if conds.iter().any(|&c| c != conds[0]) {
                return Outcome::Fail(json!({ "g": ctx.elem(g), "h": ctx.elem(h) }));
            }
        }
    }
    Outcome::Pass
}

fn contains_maximal_center(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    let maximal = a.maximal_center_ids_direct();
    let bad = (0..a.len()).find(|&e| {
        !maximal
            .iter()
            .any(|&m| a.entry(m).center.is_subset(&a.entry(e).centralizer))
    });
    match bad {
        Some(id) => Outcome::Fail(ctx.entries(&[id])),
        None => Outcome::Pass,
    }
}

fn unique_container(ctx: &Context) -> Outcome {
    let a = ctx.atlas;
    for m in a.maximal_center_ids_direct() {
        let holders: Vec<EntryId> = (0..a.len())
            .filter(|&j| a.entry(m).zstar.is_subset(a.entry(j).center.members()))
            .collect();
        if holders != [m] {
            return Outcome::Fail(
                json!({ "maximal": ctx.entries(&[m]), "holders": ctx.entries(&holders) }),
            );
        }
    }
    Outcome::Pass
}

fn maximal_centers_irredundant(ctx: &Context) -> Outcome {
    let fam = covers::maximal_center_cover(ctx.atlas);
    let irredundant = covers::is_irredundant_cover(ctx.atlas, &fam)
        .map(|v| v.is_irredundant == Some(true))
        .unwrap_or(false);
    if !irredundant {
        return Outcome::Fail(json!({ "maximal_centers": ctx.entries(&fam.member_entry_ids) }));
    }
    let u = covers::center_cover_uniqueness(ctx.atlas, &ctx.config);
    Outcome::check(u.holds, || sweep_witness(&u.counterexample, ctx))
}

fn unique_irredundant_centers(ctx: &Context) -> Outcome {
    let u = covers::center_cover_uniqueness(ctx.atlas, &ctx.config);
    Outcome::check(
        u.holds && u.maximal_centers == ctx.atlas.maximal_center_ids_direct(),
        || sweep_witness(&u.counterexample, ctx),
    )
}

fn cover_criterion(ctx: &Context) -> Outcome {
    let c = covers::criterion_sweep(ctx.atlas, &ctx.config);
    if !c.holds {
        return Outcome::Fail(
            json!({ "criterion_mismatch": sweep_witness(&c.counterexample, ctx) }),
        );
    }
    let b = covers::irredundant_size_bound(ctx.atlas, &ctx.config);
    Outcome::check(
        b.violation.is_none(),
        || json!({ "bound": b.bound, "oversized": sweep_witness(&b.violation, ctx) }),
    )
}

fn domination(ctx: &Context) -> Outcome {
    let o = cgraph::cover_domination_equivalence(ctx.atlas, ctx.graph, &ctx.config);
    Outcome::check(o.holds, || sweep_witness(&o.counterexample, ctx))
}

fn nonadjacency(ctx: &Context) -> Outcome {
    let o = cgraph::minimal_center_nonadjacency(ctx.atlas, ctx.graph);
    Outcome::check(o.implication_holds(), || json!(o))
}

fn f_criteria(ctx: &Context) -> Outcome {
    let c = classify::f_group_criteria(ctx.atlas);
    Outcome::check(c.iter().all(|&x| x == c[0]), || json!({ "criteria": c }))
}

fn corollaries(ctx: &Context) -> Result<classify::CorollaryChecks, Inapplicable> {
    classify::f_group_corollaries(ctx.atlas)
}

fn f_disjoint_centers(ctx: &Context) -> Outcome {
    match corollaries(ctx) {
        Ok(c) => Outcome::check(c.disjoint_centers, || json!(c)),
        Err(why) => Outcome::Skipped(why),
    }
}

fn f_dichotomy(ctx: &Context) -> Outcome {
    match corollaries(ctx) {
        Ok(c) => Outcome::check(c.centralizer_center_dichotomy, || json!(c)),
        Err(why) => Outcome::Skipped(why),
    }
}

fn f_partner(ctx: &Context) -> Outcome {
    match corollaries(ctx) {
        Ok(c) => Outcome::check(c.nonabelian_partner, || json!(c)),
        Err(why) => Outcome::Skipped(why),
    }
}

fn f_max_min(ctx: &Context) -> Outcome {
    let f = classify::is_f_group(ctx.atlas);
    let (c, z) = classify::max_min_flags(ctx.atlas);
    Outcome::check(
        f == c && c == z,
        || json!({ "f_group": f, "centralizers": c, "centers": z }),
    )
}

fn maximality(ctx: &Context) -> Outcome {
    match classify::maximality_equivalence(ctx.atlas) {
        Ok(()) => Outcome::Pass,
        Err(id) => Outcome::Fail(ctx.entries(&[id])),
    }
}

fn partition(ctx: &Context) -> Outcome {
    let f = classify::is_f_group(ctx.atlas);
    let p = classify::partition_check(ctx.atlas);
    Outcome::check(f == p, || json!({ "f_group": f, "partition": p }))
}

fn mod_p(ctx: &Context) -> Outcome {
    match classify::mod_p_count(ctx.atlas) {
        Ok(m) => Outcome::check(
            m.residue == 1 && m.class_sizes_hold && m.partition_identity_holds,
            || json!(m),
        ),
        Err(why) => Outcome::Skipped(why),
    }
}

fn exponent(ctx: &Context) -> Outcome {
    match classify::exponent_witness(ctx.atlas) {
        Ok(w) => Outcome::check(w.witness().is_some() && w.paths_agree(), || json!(w)),
        Err(why) => Outcome::Skipped(why),
    }
}

fn ca_irredundance(ctx: &Context) -> Outcome {
    match classify::ca_irredundance_check(ctx.atlas) {
        Ok(c) => Outcome::check(c.consistent, || json!(c)),
        Err(why) => Outcome::Skipped(why),
    }
}

fn ca_implies_f(ctx: &Context) -> Outcome {
    let ca = classify::is_ca_group(ctx.atlas);
    let f = classify::is_f_group(ctx.atlas);
    Outcome::check(!ca || f, || json!({ "ca": ca, "f_group": f }))
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub source: Source,
    pub associativity: AssociativityCheck,
}

impl GroupInfo {
    pub fn of(g: &Group) -> GroupInfo {
        GroupInfo {
            name: g.name().to_string(),
            order: g.order(),
            source: g.source().clone(),
            associativity: g.associativity_check(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub members: Vec<EntryId>,
    pub verdict: CoverVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoversReport {
    pub maximal_centralizers: FamilyReport,
    pub minimal_centralizers: FamilyReport,
    pub maximal_centers: FamilyReport,
    pub all_centralizers: FamilyReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub edge_rule: &'static str,
    pub vertices: usize,
    pub edges: Vec<(EntryId, EntryId)>,
    pub minimal_center_nonadjacency: cgraph::NonadjacencyOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub group: GroupInfo,
    pub atlas: AtlasSummary,
    pub covers: CoversReport,
    pub graph: GraphReport,
    pub classification: ClassificationReport,
}

fn family_report(atlas: &CentralizerAtlas, family: CoverFamily) -> FamilyReport {
    let verdict = match covers::is_irredundant_cover(atlas, &family) {
        Ok(v) => v,
        Err(_) => covers::is_cover(atlas, &family).unwrap_or_default(),
    };
    FamilyReport {
        members: family.member_entry_ids,
        verdict,
    }
}

pub fn analyze(atlas: &CentralizerAtlas, graph: &CentralizerGraph) -> AnalysisReport {
    AnalysisReport {
        schema: SCHEMA,
        group: GroupInfo::of(atlas.group()),
        atlas: atlas.summary(),
        covers: CoversReport {
            maximal_centralizers: family_report(atlas, covers::maximal_centralizer_cover(atlas)),
            minimal_centralizers: family_report(atlas, covers::minimal_centralizer_cover(atlas)),
            maximal_centers: family_report(atlas, covers::maximal_center_cover(atlas)),
            all_centralizers: family_report(atlas, CoverFamily::centralizers(0..atlas.len())),
        },
        graph: GraphReport {
            edge_rule: EDGE_RULE,
            vertices: graph.len(),
            edges: graph.edges(),
            minimal_center_nonadjacency: cgraph::minimal_center_nonadjacency(atlas, graph),
        },
        classification: classify::classify(atlas),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family_line(name: &str, f: &FamilyReport) -> String {
    let irr = match f.verdict.is_irredundant {
        Some(true) => "irredundant".to_string(),
        Some(false) => format!(
            "redundant (drop entry {})",
            f.verdict.redundant_member.unwrap_or_default()
        ),
        None => "-".to_string(),
    };
    format!(
        "  {name:<22} {:>3} members  cover={}  {irr}\n",
        f.members.len(),
        yes_no(f.verdict.is_cover)
    )
}

impl AnalysisReport {
    /// Plain-text rendering of the report.
    pub fn to_text(&self) -> String {
        let c = &self.classification;
        let a = &self.atlas;
        let mut out = format!("{} (order {})\n", self.group.name, self.group.order);
        out += &format!("  |Z(G)| = {}\n", a.center_order);
        out += &format!(
            "  centralizers: {} distinct, {} maximal, {} minimal\n",
            a.n_centralizers,
            a.maximal_centralizers.len(),
            a.minimal_centralizers.len()
        );
        out += "  entry  rep               |C|   |Z|  |Z*|  flags\n";
        for e in &a.entries {
            let mut flags = Vec::new();
            if e.flags.centralizer_maximal {
                flags.push("max");
            }
            if e.flags.centralizer_minimal {
                flags.push("min");
            }
            if e.flags.centralizer_abelian {
                flags.push("abelian");
            }
            out += &format!(
                "  {:>5}  {:<16} {:>4}  {:>4}  {:>4}  {}\n",
                e.id,
                e.representative,
                e.centralizer_order,
                e.center_order,
                e.zstar_size,
                flags.join(",")
            );
        }
        out += "covers\n";
        out += &family_line("maximal centralizers", &self.covers.maximal_centralizers);
        out += &family_line("minimal centralizers", &self.covers.minimal_centralizers);
        out += &family_line("maximal centers", &self.covers.maximal_centers);
        out += &family_line("all centralizers", &self.covers.all_centralizers);
        out += &format!(
            "graph: {} vertices, {} edges\n",
            self.graph.vertices,
            self.graph.edges.len()
        );
        out += &format!(
            "F-group: {}  CA-group: {}  partition: {}\n",
            yes_no(c.is_f_group),
            yes_no(c.is_ca_group),
            yes_no(c.partition_holds)
        );
        if let (Some(p), Some(r)) = (c.p, c.n_mod_p) {
            out += &format!("p-group: p = {p}, n = {} = {r} mod {p}\n", c.n_centralizers);
        }
        out
    }
}

impl TheoremReport {
    /// One summary line plus one line per failure.
    pub fn to_text(&self) -> String {
        let count = |s| self.theorems.iter().filter(|t| t.status == s).count();
        let mut out = format!(
            "{} (order {}): {} pass, {} fail, {} skipped\n",
            self.group.name,
            self.group.order,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        );
        for t in self.failures() {
            let w = t
                .witness
                .as_ref()
                .map(|w| w.to_string())
                .unwrap_or_default();
            out += &format!("  FAIL {} {}\n", t.id, w);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn report(name: &str) -> TheoremReport {
        let atlas = CentralizerAtlas::build(catalog::build(name).unwrap()).unwrap();
        let graph = CentralizerGraph::build(&atlas);
        run_theorems(&atlas, &graph, SweepConfig::default(), None, false)
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids = registry_ids();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn s4_passes_with_expected_skips() {
        let r = report("s4");
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.theorems.len(), REGISTRY.len());
        for id in ["thm-1.6", "thm-5.9", "thm-1.7", "cor-5.2"] {
            assert_eq!(r.get(id).unwrap().status, Status::Skipped, "{id}");
        }
        assert_eq!(r.get("thm-1.4").unwrap().status, Status::Pass);
    }

    #[test]
    fn q8_runs_mod_p() {
        let r = report("q8");
        assert!(r.passed());
        assert_eq!(r.get("thm-1.6").unwrap().status, Status::Pass);
        assert_eq!(r.get("thm-5.9").unwrap().status, Status::Skipped);
    }

    #[test]
    fn selection_and_timing() {
        let atlas = CentralizerAtlas::build(catalog::build("s3").unwrap()).unwrap();
        let graph = CentralizerGraph::build(&atlas);
        let only = vec!["thm-1.4".to_string()];
        let r = run_theorems(&atlas, &graph, SweepConfig::default(), Some(&only), true);
        assert_eq!(r.theorems.len(), 1);
        assert!(r.theorems[0].millis.is_some());
    }
}
