//! Exhaustive reference implementations used to check the enumerator on
//! small instances.

use crate::clique_tree::CliqueTree;
use crate::extension::EnumContext;
use crate::graph::{GraphError, BRUTE_FORCE_LIMIT};
use crate::vertex_set::VertexSet;

/// Vertices an extension of A may add: V(C) over C ∈ ℒ(A ∪ K), minus A ∪ K.
pub fn extension_region(t: &CliqueTree, k: &VertexSet, a: &VertexSet) -> VertexSet {
    let s = a.union(k);
    let mut region = VertexSet::new();
    for c in &t.l_set(&s) {
        region.union_with(t.subtree_vertices(c));
    }
    region.difference(&s)
}

/// D contains A ∪ K, adds only region vertices, dominates G, and every
/// member outside K2 has a private neighbor outside the excluded set.
pub fn is_feasible_extension(ctx: &EnumContext, a: &VertexSet, d: &VertexSet) -> bool {
    let k = ctx.k();
    let base = a.union(&k);
    base.is_subset(d)
        && d.difference(&base)
            .is_subset(&extension_region(ctx.tree, &k, a))
        && ctx.graph.is_dominating(d)
        && d.difference(&ctx.k2)
            .iter()
            .all(|x| !ctx.usable_privates(d, x).is_empty())
}

fn mask(s: &VertexSet) -> u32 {
    s.iter().fold(0, |m, x| m | 1 << x)
}

fn unmask(m: u32) -> VertexSet {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

/// Every feasible (K1,K2)-extension of A, ordered by size then
/// lexicographically.
pub fn feasible_extensions(ctx: &EnumContext, a: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
    let (g, t) = (ctx.graph, ctx.tree);
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(GraphError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let k = ctx.k();
    let base = mask(&a.union(&k));
    let free: Vec<usize> = extension_region(t, &k, a).to_vec();
    let closed: Vec<u32> = (0..n).map(|x| mask(g.closed_neighborhood(x))).collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let needs_private = !mask(&ctx.k2);
    let usable = !mask(&ctx.excluded);
    let mut found = Vec::new();
    for bits in 0u32..1 << free.len() {
        let mut d = base;
        for (i, &x) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                d |= 1 << x;
            }
        }
        if feasible_mask(&closed, full, usable, d, d & needs_private) {
            found.push(unmask(d));
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(found)
}

fn feasible_mask(closed: &[u32], full: u32, usable: u32, d: u32, owners: u32) -> bool {
    let mut once = 0u32;
    let mut twice = 0u32;
    let mut rest = d;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        twice |= once & closed[x];
        once |= closed[x];
    }
    if once != full {
        return false;
    }
    let mut rest = owners;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if closed[x] & !twice & usable == 0 {
            return false;
        }
    }
    true
}

/// A has at least one feasible extension in the context.
pub fn is_extendable(ctx: &EnumContext, a: &VertexSet) -> Result<bool, GraphError> {
    Ok(!feasible_extensions(ctx, a)?.is_empty())
}

/// Feasible extensions of ∅ whose top antichain after removing K is
/// exactly A.
pub fn extensions_with_top(ctx: &EnumContext, a: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
    let k = ctx.k();
    Ok(feasible_extensions(ctx, &VertexSet::new())?
        .into_iter()
        .filter(|d| ctx.tree.top_antichain(&d.difference(&k)) == *a)
        .collect())
}
