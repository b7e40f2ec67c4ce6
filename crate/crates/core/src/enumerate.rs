//! Nested backtracking over extendable antichains and combinations of
//! sub-extensions, emitting each feasible extension exactly once.

use crate::clique_tree::{CliqueTree, TreeError};
use crate::extension::{EnumContext, ExtensionError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::cell::Cell;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

/// Receives each solution; `ControlFlow::Break` stops the enumeration.
pub type Sink<'s> = dyn FnMut(&VertexSet) -> ControlFlow<()> + 's;

/// Recursion depth across both nested recursions, counted in descents: one
/// per vertex added to an antichain and one per home-clique subproblem.
#[derive(Debug, Default)]
pub struct Depth {
    current: Cell<usize>,
    peak: Cell<usize>,
}

impl Depth {
    pub fn peak(&self) -> usize {
        self.peak.get()
    }

    fn enter(&self) {
        self.current.set(self.current.get() + 1);
        self.peak.set(self.peak.get().max(self.current.get()));
    }

    fn leave(&self) {
        self.current.set(self.current.get() - 1);
    }

    fn scoped<T>(&self, body: impl FnOnce() -> T) -> T {
        self.enter();
        let out = body();
        self.leave();
        out
    }
}

/// Which antichain definition the enumerator tests. `Literal` is the
/// unamended condition, kept to document the sets it misses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AntichainRule {
    #[default]
    Amended,
    Literal,
}

/// Per-run state shared by both recursions.
#[derive(Debug, Default)]
pub(crate) struct Walk {
    depth: Depth,
    rule: AntichainRule,
}

impl Walk {
    /// Dead-end checks only hold under the amended rule.
    fn strict(&self) -> bool {
        cfg!(debug_assertions) && self.rule == AntichainRule::Amended
    }
}

/// Enumerates the extendable antichains of the context that extend the
/// extendable partial antichain `a`, in ascending vertex-number order.
pub fn enum_antichains(
    ctx: &EnumContext,
    a: &VertexSet,
    sink: &mut Sink,
) -> Result<ControlFlow<()>, ExtensionError> {
    if !ctx.is_extendable(a)? {
        return Err(ExtensionError::NotExtendable);
    }
    Ok(match antichains(ctx, a, sink, &Walk::default()) {
        ControlFlow::Break(()) => ControlFlow::Break(()),
        ControlFlow::Continue(_) => ControlFlow::Continue(()),
    })
}

/// Returns `Continue(true)` when at least one antichain was emitted.
fn antichains(
    ctx: &EnumContext,
    a: &VertexSet,
    sink: &mut Sink,
    walk: &Walk,
) -> ControlFlow<(), bool> {
    let (g, t) = (ctx.graph, ctx.tree);
    let k = ctx.k();
    let mut emitted = false;
    if t.antichain_check(g, &k, a, walk.rule == AntichainRule::Literal) {
        sink(a)?;
        emitted = true;
    }
    let tail = a.iter().map(|x| t.vnum(x)).max().unwrap_or(0);
    // Vertices homed strictly below the last member's clique are
    // comparable with it, so they are skipped without testing.
    let below = match tail {
        0 => 0..0,
        _ => t.numbers_below(t.home(t.vertices_by_number()[tail - 1])),
    };
    for (i, &z) in t.vertices_by_number().iter().enumerate().skip(tail) {
        if below.contains(&i) || !t.eligible(&k, z) {
            continue;
        }
        let mut next = a.clone();
        next.insert(z);
        if t.partial_antichain_check(g, &k, &next) && ctx.extendable(&next) {
            let below = walk.depth.scoped(|| antichains(ctx, &next, sink, walk))?;
            debug_assert!(
                below || !walk.strict(),
                "partial antichain {next:?} leads nowhere"
            );
            emitted |= below;
        }
    }
    ControlFlow::Continue(emitted)
}

/// Enumerates the feasible extensions of the extendable antichain `a`
/// whose top antichain is `a`.
pub fn enum_combinations(ctx: &EnumContext, a: &VertexSet, sink: &mut Sink) -> ControlFlow<()> {
    let homes = ctx.tree.homes_of(a).to_vec();
    combinations(ctx, a, &homes, &a.union(&ctx.k()), sink, &Walk::default())
}

/// Fills the subproblems of `homes` in preorder; `d` holds the choices made
/// for the cliques already consumed.
fn combinations(
    ctx: &EnumContext,
    a: &VertexSet,
    homes: &[usize],
    d: &VertexSet,
    sink: &mut Sink,
    walk: &Walk,
) -> ControlFlow<()> {
    let Some((&c, rest)) = homes.split_first() else {
        return sink(d);
    };
    walk.depth.scoped(|| {
        let step = ctx.combination_step(a, d, c);
        let nested = ctx.subproblem(c);
        let sub = ctx.within(&nested, &step.k1, &step.k2, &step.excluded);
        let mut emitted = false;
        let flow = k_extensions(
            &sub,
            &mut |part| {
                emitted = true;
                combinations(ctx, a, rest, &d.union(&nested.map.lift(part)), sink, walk)
            },
            walk,
        );
        debug_assert!(
            emitted || flow.is_break() || !walk.strict(),
            "subproblem of clique {c} has no extension"
        );
        flow
    })
}

/// Enumerates every feasible (K1,K2)-extension of the context.
pub fn enum_k_extensions(ctx: &EnumContext, sink: &mut Sink) -> ControlFlow<()> {
    k_extensions(ctx, sink, &Walk::default())
}

fn k_extensions(ctx: &EnumContext, sink: &mut Sink, walk: &Walk) -> ControlFlow<()> {
    if ctx.tree.is_empty() {
        return sink(&VertexSet::new());
    }
    let empty = VertexSet::new();
    if !ctx.extendable(&empty) {
        return ControlFlow::Continue(());
    }
    let k = ctx.k();
    let flow = antichains(
        ctx,
        &empty,
        &mut |a| {
            let mut emitted = false;
            ctx.clear_step_memo();
            let flow = combinations(
                ctx,
                a,
                &ctx.tree.homes_of(a).to_vec(),
                &a.union(&k),
                &mut |d| {
                    emitted = true;
                    sink(d)
                },
                walk,
            );
            debug_assert!(
                emitted || flow.is_break() || !walk.strict(),
                "antichain {a:?} produced no extension"
            );
            flow
        },
        walk,
    );
    match flow {
        ControlFlow::Break(()) => ControlFlow::Break(()),
        ControlFlow::Continue(_) => ControlFlow::Continue(()),
    }
}

/// Enumerates the minimal dominating sets of a chordal graph.
pub fn enum_minimal_dominating_sets(
    g: &Graph,
    sink: &mut Sink,
) -> Result<ControlFlow<()>, TreeError> {
    let t = CliqueTree::build(g)?;
    Ok(enum_with_tree(g, &t, sink))
}

/// Same as [`enum_minimal_dominating_sets`] over a caller-supplied clique
/// tree of `g`, e.g. one built with [`CliqueTree::from_spec`].
pub fn enum_with_tree(g: &Graph, t: &CliqueTree, sink: &mut Sink) -> ControlFlow<()> {
    run(g, t, sink, &Walk::default())
}

/// Enumeration under a chosen antichain rule. Only `Amended` is correct;
/// `Literal` exists so tests can show which sets the unamended rule loses.
#[doc(hidden)]
pub fn enum_with_rule(
    g: &Graph,
    t: &CliqueTree,
    rule: AntichainRule,
    sink: &mut Sink,
) -> ControlFlow<()> {
    let walk = Walk {
        rule,
        ..Walk::default()
    };
    run(g, t, sink, &walk)
}

fn run(g: &Graph, t: &CliqueTree, sink: &mut Sink, walk: &Walk) -> ControlFlow<()> {
    assert_eq!(
        g.vertex_count(),
        t.vertex_count(),
        "tree belongs to another graph"
    );
    let ctx = EnumContext::new(g, t, VertexSet::new(), VertexSet::new()).expect("no forced sets");
    k_extensions(&ctx, sink, walk)
}

/// Output count and the deepest nesting of the two recursions reached while
/// enumerating every minimal dominating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumStats {
    pub outputs: u64,
    pub peak_depth: usize,
}

pub fn enumeration_stats(g: &Graph) -> Result<EnumStats, TreeError> {
    let t = CliqueTree::build(g)?;
    let walk = Walk::default();
    let mut outputs = 0;
    let _ = run(
        g,
        &t,
        &mut |_| {
            outputs += 1;
            ControlFlow::Continue(())
        },
        &walk,
    );
    Ok(EnumStats {
        outputs,
        peak_depth: walk.depth.peak(),
    })
}

/// Collects every minimal dominating set of a chordal graph.
pub fn minimal_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>, TreeError> {
    let mut out = Vec::new();
    let _ = enum_minimal_dominating_sets(g, &mut |d| {
        out.push(d.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Wall-clock gaps around each emitted solution: the gap before the first
/// output, between consecutive outputs, and after the last one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DelayProfile {
    pub outputs: u64,
    pub gaps: Vec<Duration>,
}

impl DelayProfile {
    pub fn pre_gap(&self) -> Duration {
        self.gaps.first().copied().unwrap_or_default()
    }

    pub fn post_gap(&self) -> Duration {
        self.gaps.last().copied().unwrap_or_default()
    }

    /// Gaps between consecutive outputs.
    pub fn inter_gaps(&self) -> &[Duration] {
        if self.gaps.len() < 2 {
            &[]
        } else {
            &self.gaps[1..self.gaps.len() - 1]
        }
    }

    pub fn max_gap(&self) -> Duration {
        self.gaps.iter().copied().max().unwrap_or_default()
    }

    pub fn median_gap(&self) -> Duration {
        self.quantile(0.5)
    }

    pub fn p95_gap(&self) -> Duration {
        self.quantile(0.95)
    }

    /// Nearest-rank quantile over all gaps.
    pub fn quantile(&self, q: f64) -> Duration {
        if self.gaps.is_empty() {
            return Duration::ZERO;
        }
        let mut sorted = self.gaps.clone();
        sorted.sort();
        let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
        sorted[rank - 1]
    }
}

/// Runs the enumeration with a timing sink, stopping after `limit` outputs.
pub fn profile_delays(g: &Graph, limit: Option<u64>) -> Result<DelayProfile, TreeError> {
    Ok(profile_delays_with_tree(g, &CliqueTree::build(g)?, limit))
}

/// [`profile_delays`] over a caller-supplied clique tree of `g`.
pub fn profile_delays_with_tree(g: &Graph, t: &CliqueTree, limit: Option<u64>) -> DelayProfile {
    let mut profile = DelayProfile::default();
    let mut last = Instant::now();
    let _ = enum_with_tree(g, t, &mut |_| {
        let now = Instant::now();
        profile.gaps.push(now - last);
        profile.outputs += 1;
        last = now;
        if limit.is_some_and(|l| profile.outputs >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    profile.gaps.push(last.elapsed());
    profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sorted(mut v: Vec<VertexSet>) -> Vec<Vec<usize>> {
        v.sort();
        v.into_iter().map(|d| d.to_vec()).collect()
    }

    #[test]
    fn small_fixtures() {
        assert_eq!(
            sorted(minimal_dominating_sets(&fixtures::path(3)).unwrap()),
            vec![vec![0, 2], vec![1]]
        );
        assert_eq!(
            sorted(minimal_dominating_sets(&fixtures::e1()).unwrap()),
            vec![vec![0, 2, 3], vec![0, 2, 4], vec![1, 3], vec![1, 4]]
        );
        for n in 1..=6 {
            assert_eq!(
                minimal_dominating_sets(&fixtures::complete(n))
                    .unwrap()
                    .len(),
                n
            );
        }
        assert_eq!(
            minimal_dominating_sets(&fixtures::star(4)).unwrap().len(),
            2
        );
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(
            minimal_dominating_sets(&empty).unwrap(),
            vec![VertexSet::new()]
        );
    }

    #[test]
    fn rejects_non_chordal() {
        assert!(matches!(
            minimal_dominating_sets(&fixtures::cycle(4)),
            Err(TreeError::NotChordal { .. })
        ));
    }

    #[test]
    fn stops_on_break() {
        let g = fixtures::complete(5);
        let mut seen = 0;
        let flow = enum_minimal_dominating_sets(&g, &mut |_| {
            seen += 1;
            if seen == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!((flow, seen), (ControlFlow::Break(()), 2));
        assert_eq!(profile_delays(&g, Some(3)).unwrap().outputs, 3);
    }

    #[test]
    fn explicit_tree_and_literal_rule() {
        let (g, t) = (fixtures::e1(), fixtures::e1_tree());
        let collect = |rule| {
            let mut out = Vec::new();
            let _ = enum_with_rule(&g, &t, rule, &mut |d| {
                out.push(d.clone());
                ControlFlow::Continue(())
            });
            out
        };
        let be: VertexSet = [1, 4].into_iter().collect();
        assert!(collect(AntichainRule::Amended).contains(&be));
        assert!(!collect(AntichainRule::Literal).contains(&be));
    }

    #[test]
    fn depth_and_profile() {
        let g = fixtures::e1();
        let stats = enumeration_stats(&g).unwrap();
        assert_eq!(stats.outputs, 4);
        assert!(stats.peak_depth >= 1 && stats.peak_depth <= 2 * g.vertex_count());
        let p = profile_delays(&g, None).unwrap();
        assert_eq!((p.outputs, p.gaps.len(), p.inter_gaps().len()), (4, 5, 3));
        assert!(p.median_gap() <= p.max_gap() && p.p95_gap() <= p.max_gap());
    }
}
