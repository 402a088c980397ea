//! Rational reduction: repeatedly remove the crossings swept by maximal
//! bounding pairs of 4-circuits, reconnecting the four strands across each
//! emptied region, until no two distinct 4-circuits are parallel.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::circuits::{maximal_bounding_pairs, BoundingPair, Dsu};
use crate::diagram::{build_diagram, validate_diagram, Diagram, End, PDCode, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    /// The respliced diagram failed a structural check (planarity, Euler
    /// count, connectivity, or alternation). Indicates a bug, not bad input.
    #[error("reduction broke a diagram invariant: {0}")]
    ReductionBrokeInvariant(String),
}

/// Outcome of rational reduction. Diagrams that collapse to five or fewer
/// crossings are rational links; they carry no right-angled volume and no
/// meaningful further structure, so they reduce to a sentinel.
#[derive(Clone, Debug)]
pub enum ReducedDiagram {
    Trivial,
    Diagram(Diagram),
}

impl ReducedDiagram {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ReducedDiagram::Trivial)
    }
}

/// Apply the largest maximal bounding pair, removing every crossing between
/// the two circuits. Returns the new diagram and whether anything changed;
/// results at five or fewer crossings collapse to `Trivial`.
pub fn rational_reduce_step(d: &Diagram) -> Result<(ReducedDiagram, bool), ReduceError> {
    let pairs = maximal_bounding_pairs(d);
    let Some(pair) = pairs.first() else {
        return Ok((ReducedDiagram::Diagram(d.clone()), false));
    };
    let out = splice_out(d, pair)?;
    if out.n_crossings() <= 5 {
        return Ok((ReducedDiagram::Trivial, true));
    }
    Ok((ReducedDiagram::Diagram(out), true))
}

/// Iterate `rational_reduce_step` to its fixpoint. The result either has no
/// parallel pair of distinct 4-circuits or is `Trivial`.
pub fn rational_reduce(d: &Diagram) -> Result<ReducedDiagram, ReduceError> {
    if d.n_crossings() <= 5 {
        return Ok(ReducedDiagram::Trivial);
    }
    let mut cur = d.clone();
    loop {
        match rational_reduce_step(&cur)? {
            (ReducedDiagram::Trivial, _) => return Ok(ReducedDiagram::Trivial),
            (ReducedDiagram::Diagram(next), true) => cur = next,
            (ReducedDiagram::Diagram(next), false) => {
                return Ok(ReducedDiagram::Diagram(next))
            }
        }
    }
}

/// True when one checkerboard color class consists entirely of bigons
/// forming a single closed chain, i.e. the projection is that of a
/// (2,q)-torus link.
pub fn is_torus_2q(map: &PlanarMap) -> bool {
    'color: for color in 0..2u8 {
        let class: Vec<_> =
            (0..map.n_faces()).filter(|&f| map.face_color(f) == color).collect();
        if class.is_empty() || class.iter().any(|&f| !map.is_bigon(f)) {
            continue;
        }
        // All bigons on one side: each crossing then lies on exactly two of
        // them, so they chain into disjoint cycles. Demand a single cycle.
        let mut dsu = Dsu::new(map.n_crossings());
        for &f in &class {
            let walk = map.face_walk(f);
            if walk[0].crossing == walk[1].crossing {
                continue 'color;
            }
            dsu.union(walk[0].crossing, walk[1].crossing);
        }
        let root = dsu.find(0);
        if (1..map.n_crossings()).all(|c| dsu.find(c) == root) {
            return true;
        }
    }
    false
}

/// Remove the crossings between a bounding pair and reconnect the four
/// strands across the emptied region, keeping everything beyond either
/// circuit untouched.
///
/// The emptied region is an annulus between the two circuit curves. Strands
/// shared by both circuits cross it untouched and pin the annulus; the
/// dangling strand ends must then be joined by disjoint crossing-free arcs,
/// and with at least one pinned strand exactly one matching admits such
/// arcs. Rather than track the annulus geometry, try every matching of the
/// dangling ends and keep the unique one that rebuilds into an alternating
/// planar diagram.
fn splice_out(d: &Diagram, pair: &BoundingPair) -> Result<Diagram, ReduceError> {
    let map = d.map();
    let n = map.n_crossings();

    // 0 = survives beyond circuit a, 1 = beyond circuit b, 2 = removed.
    let mut region = vec![usize::MAX; n];
    for &c in &pair.side_a {
        region[c] = 0;
    }
    for &c in &pair.side_b {
        region[c] = 1;
    }
    for &c in &pair.between {
        region[c] = 2;
    }
    assert!(region.iter().all(|&r| r != usize::MAX), "sides must partition the crossings");

    let a_edges: BTreeSet<_> = pair.a.crossed_edges.iter().copied().collect();
    let b_edges: BTreeSet<_> = pair.b.crossed_edges.iter().copied().collect();

    let mut kept: Vec<[End; 2]> = Vec::new();
    let mut a_stubs: Vec<End> = Vec::new();
    let mut b_stubs: Vec<End> = Vec::new();
    for e in 0..map.n_edges() {
        let [x, y] = map.edge_ends(e);
        let (rx, ry) = (region[x.crossing], region[y.crossing]);
        match (rx.min(ry), rx.max(ry)) {
            (2, 2) => {}
            (0, 0) | (1, 1) => kept.push([x, y]),
            (0, 1) => {
                assert!(a_edges.contains(&e) && b_edges.contains(&e));
                kept.push([x, y]);
            }
            (0, 2) => {
                assert!(a_edges.contains(&e));
                a_stubs.push(if rx == 0 { x } else { y });
            }
            (1, 2) => {
                assert!(b_edges.contains(&e));
                b_stubs.push(if rx == 1 { x } else { y });
            }
            _ => unreachable!(),
        }
    }
    let k = a_stubs.len();
    assert!(k >= 1 && k == b_stubs.len(), "dangling strand counts must agree");

    // Renumber the survivors; each keeps its rotation, with dangling slots
    // taken over by the reconnected strands.
    let survivors: Vec<_> = (0..n).filter(|&c| region[c] != 2).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &c) in survivors.iter().enumerate() {
        new_id[c] = i;
    }
    let m = survivors.len();
    let renumber = |e: End| End::new(new_id[e.crossing], e.slot as usize);

    let base: Vec<[End; 2]> = kept.iter().map(|&[x, y]| [renumber(x), renumber(y)]).collect();
    let mut found: Option<Diagram> = None;
    for matching in permutations(k) {
        // Alternation survives the splice only if every reconnected strand
        // joins an under-end to an over-end; prune on slot parity first.
        if (0..k).any(|i| (a_stubs[i].slot + b_stubs[matching[i]].slot) % 2 == 0) {
            continue;
        }
        let mut ends = base.clone();
        for (i, &j) in matching.iter().enumerate() {
            ends.push([renumber(a_stubs[i]), renumber(b_stubs[j])]);
        }
        assert_eq!(ends.len(), 2 * m, "survivors must stay 4-valent");
        if let Some(out) = rebuild(m, &ends) {
            if found.is_some() {
                return Err(ReduceError::ReductionBrokeInvariant(
                    "strand reconnection is ambiguous".into(),
                ));
            }
            found = Some(out);
        }
    }
    found.ok_or_else(|| {
        ReduceError::ReductionBrokeInvariant("no planar strand reconnection exists".into())
    })
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut vec![false; k], &mut Vec::new(), &mut out);
    out
}

/// Build a diagram from bare edge ends, or `None` if they do not describe a
/// connected alternating planar diagram.
fn rebuild(m: usize, ends: &[[End; 2]]) -> Option<Diagram> {
    let mut tuples = vec![[0u32; 4]; m];
    for (idx, &[x, y]) in ends.iter().enumerate() {
        let label = (idx + 1) as u32;
        for end in [x, y] {
            if tuples[end.crossing][end.slot as usize] != 0 {
                return None;
            }
            tuples[end.crossing][end.slot as usize] = label;
        }
    }
    let out = build_diagram(&PDCode { tuples }).ok()?;
    let report = validate_diagram(&out);
    (report.alternating && report.connected).then_some(out)
}
