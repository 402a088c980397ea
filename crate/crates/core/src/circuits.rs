//! Circuits of length four in the face structure of a diagram: enumeration,
//! classification, crossing-parallelism, parallel classes, and disjoint
//! families of bounding pairs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::diagram::{CrossingId, Diagram, EdgeId, FaceId, PlanarMap};

/// Union-find over `0..n`.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// A simple closed curve crossing four edges, recorded by the edges it
/// crosses and the faces it passes through: `crossed_edges[i]` is shared by
/// `visited_faces[i]` and `visited_faces[(i+1) % 4]`. The stored order is
/// canonical (lexicographically least over rotations and reflections), so
/// equal circuits compare equal. `inside` is the smaller of the two crossing
/// sets the curve separates (ties by lexicographic order); both sides are
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourCircuit {
    pub crossed_edges: [EdgeId; 4],
    pub visited_faces: [FaceId; 4],
    pub inside: Vec<CrossingId>,
    pub outside: Vec<CrossingId>,
    #[serde(skip)]
    edge_ends: [[CrossingId; 2]; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CircuitClass {
    Trivial,
    Nontrivial,
}

/// Circuits related by chains of crossing-parallel moves.
#[derive(Clone, Debug)]
pub struct ParallelClass {
    /// Indices into the circuit list handed to [`parallel_classes`].
    pub members: Vec<usize>,
    /// Crossing-parallel pairs among the members (indices as above, a < b).
    pub relation: Vec<(usize, usize)>,
    /// The member pair with the most crossings strictly between them;
    /// `None` for singleton classes.
    pub extremal_pair: Option<(usize, usize)>,
    pub contains_trivial: bool,
}

/// Two circuits of one parallel class together with aligned disjoint sides:
/// the tangle strictly between them is `between`, and the diagram splits as
/// `side_a` / `between` / `side_b`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundingPair {
    pub a: FourCircuit,
    pub b: FourCircuit,
    pub side_a: Vec<CrossingId>,
    pub side_b: Vec<CrossingId>,
    pub between: Vec<CrossingId>,
}

/// Lexicographically least rotation/reflection of the interleaved
/// face/edge sequence, preserving the shared-face alignment.
fn canonical_order(faces: [FaceId; 4], edges: [EdgeId; 4]) -> ([FaceId; 4], [EdgeId; 4]) {
    let mut best: Option<([FaceId; 4], [EdgeId; 4], [usize; 8])> = None;
    for r in 0..4 {
        let idx = |k: usize| (r + k) % 4;
        let rot_f = [faces[idx(0)], faces[idx(1)], faces[idx(2)], faces[idx(3)]];
        let rot_e = [edges[idx(0)], edges[idx(1)], edges[idx(2)], edges[idx(3)]];
        let ref_f = [faces[idx(0)], faces[idx(3)], faces[idx(2)], faces[idx(1)]];
        let ref_e = [edges[idx(3)], edges[idx(2)], edges[idx(1)], edges[idx(0)]];
        for (f, e) in [(rot_f, rot_e), (ref_f, ref_e)] {
            let key = [f[0], e[0], f[1], e[1], f[2], e[2], f[3], e[3]];
            if best.as_ref().map_or(true, |(_, _, k)| key < *k) {
                best = Some((f, e, key));
            }
        }
    }
    let (f, e, _) = best.unwrap();
    (f, e)
}

impl FourCircuit {
    /// Build the circuit through `faces` crossing `edges` and compute its
    /// side assignment. Panics if the data does not describe a simple
    /// separating curve; callers must pass a valid 4-cycle.
    pub(crate) fn new(map: &PlanarMap, faces: [FaceId; 4], edges: [EdgeId; 4]) -> FourCircuit {
        let (faces, edges) = canonical_order(faces, edges);
        let n = map.n_crossings();

        // Crossings on the same side stay connected by the edges the curve
        // does not cross.
        let mut dsu = Dsu::new(n);
        for e in 0..map.n_edges() {
            if !edges.contains(&e) {
                let [a, b] = map.edge_crossings(e);
                dsu.union(a, b);
            }
        }
        // Within each visited face, the curve enters through one crossed
        // edge and leaves through the next, splitting the boundary walk into
        // two arcs; crossings along one arc share a side.
        for i in 0..4 {
            let f = faces[(i + 1) % 4];
            let walk = map.face_walk(f);
            let pos = |target: EdgeId| -> usize {
                walk.iter()
                    .position(|d| map.edge_at(d.crossing, d.slot as usize) == target)
                    .expect("crossed edge missing from visited face")
            };
            let (a, b) = (pos(edges[i]), pos(edges[(i + 1) % 4]));
            let len = walk.len();
            let mut union_arc = |from: usize, to: usize| {
                // Crossings at walk positions from+1 ..= to, cyclically.
                let mut j = (from + 1) % len;
                let mut prev: Option<usize> = None;
                loop {
                    let c = walk[j].crossing;
                    if let Some(p) = prev {
                        dsu.union(p, c);
                    }
                    prev = Some(c);
                    if j == to {
                        break;
                    }
                    j = (j + 1) % len;
                }
            };
            union_arc(a, b);
            union_arc(b, a);
        }

        let root0 = dsu.find(0);
        let mut side0 = Vec::new();
        let mut side1 = Vec::new();
        for c in 0..n {
            if dsu.find(c) == root0 {
                side0.push(c);
            } else {
                side1.push(c);
            }
        }
        let classes: BTreeSet<usize> = (0..n).map(|c| dsu.find(c)).collect();
        assert_eq!(classes.len(), 2, "4-circuit does not separate the diagram");
        for &e in &edges {
            let [a, b] = map.edge_crossings(e);
            assert_ne!(dsu.find(a), dsu.find(b), "crossed edge lies within one side");
        }
        let (inside, outside) = if (side0.len(), &side0) <= (side1.len(), &side1) {
            (side0, side1)
        } else {
            (side1, side0)
        };
        let edge_ends = edges.map(|e| map.edge_crossings(e));
        FourCircuit { crossed_edges: edges, visited_faces: faces, inside, outside, edge_ends }
    }

    pub fn inside_count(&self) -> usize {
        self.inside.len()
    }

    pub fn outside_count(&self) -> usize {
        self.outside.len()
    }

    /// Canonical sort/dedup key.
    pub(crate) fn key(&self) -> [usize; 8] {
        let (f, e) = (&self.visited_faces, &self.crossed_edges);
        [f[0], e[0], f[1], e[1], f[2], e[2], f[3], e[3]]
    }

    fn sides(&self) -> [&Vec<CrossingId>; 2] {
        [&self.inside, &self.outside]
    }
}

/// Every 4-circuit of the diagram, deduplicated up to rotation and
/// reflection, sorted by canonical key.
pub fn enumerate_four_circuits(d: &Diagram) -> Vec<FourCircuit> {
    enumerate_on_map(d.map())
}

pub(crate) fn enumerate_on_map(map: &PlanarMap) -> Vec<FourCircuit> {
    // shared[f][g]: edges with faces {f, g}.
    let mut shared: BTreeMap<FaceId, BTreeMap<FaceId, Vec<EdgeId>>> = BTreeMap::new();
    for e in 0..map.n_edges() {
        let [f, g] = map.edge_faces(e);
        if f != g {
            shared.entry(f).or_default().entry(g).or_default().push(e);
            shared.entry(g).or_default().entry(f).or_default().push(e);
        }
    }
    let empty = BTreeMap::new();
    let neighbors = |f: FaceId| shared.get(&f).unwrap_or(&empty);

    let mut seen: BTreeSet<[usize; 8]> = BTreeSet::new();
    let mut out: Vec<FourCircuit> = Vec::new();
    for (&f0, n0) in &shared {
        for (&f1, e01) in n0 {
            if f1 == f0 {
                continue;
            }
            for (&f2, e12) in neighbors(f1) {
                if f2 == f0 || f2 == f1 {
                    continue;
                }
                for (&f3, e23) in neighbors(f2) {
                    if f3 == f0 || f3 == f1 || f3 == f2 {
                        continue;
                    }
                    let Some(e30) = neighbors(f3).get(&f0) else { continue };
                    for &a in e01 {
                        for &b in e12 {
                            for &c in e23 {
                                for &d in e30 {
                                    let edges = [a, b, c, d];
                                    let mut s = edges;
                                    s.sort_unstable();
                                    if s.windows(2).any(|w| w[0] == w[1]) {
                                        continue;
                                    }
                                    let faces = [f0, f1, f2, f3];
                                    let (cf, ce) = canonical_order(faces, edges);
                                    let key =
                                        [cf[0], ce[0], cf[1], ce[1], cf[2], ce[2], cf[3], ce[3]];
                                    if seen.insert(key) {
                                        out.push(FourCircuit::new(map, faces, edges));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|c| c.key());
    out
}

/// Trivial means a single crossing on one side.
pub fn classify_circuit(c: &FourCircuit) -> CircuitClass {
    if c.inside_count().min(c.outside_count()) == 1 {
        CircuitClass::Trivial
    } else {
        CircuitClass::Nontrivial
    }
}

/// True when the four crossed edges are pairwise non-adjacent (no two share
/// a crossing).
pub fn is_prismatic(c: &FourCircuit) -> bool {
    for i in 0..4 {
        for j in i + 1..4 {
            let [a, b] = c.edge_ends[i];
            let [x, y] = c.edge_ends[j];
            if a == x || a == y || b == x || b == y {
                return false;
            }
        }
    }
    true
}

/// Crossings incident to every edge of the symmetric difference of the two
/// circuits' crossed-edge sets, provided exactly two edges are shared.
/// These are the possible pivots of a parallel move between the circuits.
fn pivot_candidates(a: &FourCircuit, b: &FourCircuit) -> Option<BTreeSet<CrossingId>> {
    let ea: BTreeSet<EdgeId> = a.crossed_edges.iter().copied().collect();
    let eb: BTreeSet<EdgeId> = b.crossed_edges.iter().copied().collect();
    if ea.intersection(&eb).count() != 2 {
        return None;
    }
    let mut candidates: Option<BTreeSet<CrossingId>> = None;
    for (circ, other) in [(a, &eb), (b, &ea)] {
        for i in 0..4 {
            if other.contains(&circ.crossed_edges[i]) {
                continue;
            }
            let incident: BTreeSet<CrossingId> = circ.edge_ends[i].iter().copied().collect();
            candidates = Some(match candidates {
                None => incident,
                Some(prev) => prev.intersection(&incident).copied().collect(),
            });
        }
    }
    candidates.filter(|c| !c.is_empty())
}

/// Parallel moves from `a` to `b`: triples (side of a, side of b, pivot)
/// where the b-side equals the a-side plus the pivot crossing. Side indices
/// select inside (0) or outside (1).
fn parallel_moves(a: &FourCircuit, b: &FourCircuit) -> Vec<(usize, usize, CrossingId)> {
    let Some(pivots) = pivot_candidates(a, b) else { return Vec::new() };
    let mut out = Vec::new();
    for (ia, sa) in a.sides().into_iter().enumerate() {
        for (ib, sb) in b.sides().into_iter().enumerate() {
            if sb.len() != sa.len() + 1 {
                continue;
            }
            let extra: Vec<CrossingId> =
                sb.iter().copied().filter(|c| !sa.contains(c)).collect();
            if let [x] = extra[..] {
                if pivots.contains(&x) {
                    out.push((ia, ib, x));
                }
            }
        }
    }
    out
}

/// True when the two circuits differ by passing on opposite sides of one
/// crossing: they share exactly two crossed edges, the other four crossed
/// edges are the four edges at a single pivot crossing, and suitable sides
/// of the two circuits differ exactly by that pivot.
pub fn crossing_parallel(a: &FourCircuit, b: &FourCircuit) -> bool {
    !parallel_moves(a, b).is_empty() || !parallel_moves(b, a).is_empty()
}

/// A pair of circuits joined by a chain of parallel moves, with aligned
/// sides: `side_a` is beyond `a`, `side_b` beyond `b`, and `between` is the
/// tangle the chain sweeps from `a` to `b`.
pub(crate) struct ChainCandidate {
    pub a: usize,
    pub b: usize,
    pub side_a: Vec<CrossingId>,
    pub side_b: Vec<CrossingId>,
    pub between: Vec<CrossingId>,
}

/// All pairs reachable by chains of parallel moves. Each move grows the
/// swept side by its pivot crossing, so chains sweep rational tangles one
/// crossing at a time; reachability runs over the acyclic graph on
/// (circuit, side) states. Pairs are normalized (a before b by canonical
/// key) and deduplicated.
pub(crate) fn chain_candidates(circuits: &[FourCircuit]) -> Vec<ChainCandidate> {
    let n = circuits.len();
    let state = |i: usize, side: usize| 2 * i + side;
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for (si, sj, _x) in parallel_moves(&circuits[i], &circuits[j]) {
                succ[state(i, si)].push(state(j, sj));
            }
        }
    }
    let total: usize = circuits.first().map_or(0, |c| c.inside_count() + c.outside_count());
    let mut seen_keys: BTreeSet<([usize; 8], [usize; 8], Vec<CrossingId>)> = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..n {
        for si in 0..2 {
            let start = state(i, si);
            let mut reached = vec![false; 2 * n];
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for &t in &succ[s] {
                    if !reached[t] {
                        reached[t] = true;
                        stack.push(t);
                    }
                }
            }
            let side_start = circuits[i].sides()[si];
            for j in 0..n {
                if j == i {
                    continue;
                }
                for sj in 0..2 {
                    if !reached[state(j, sj)] {
                        continue;
                    }
                    let side_end = circuits[j].sides()[sj];
                    let between: Vec<CrossingId> =
                        side_end.iter().copied().filter(|c| !side_start.contains(c)).collect();
                    debug_assert_eq!(between.len(), side_end.len() - side_start.len());
                    let side_b: Vec<CrossingId> = (0..total)
                        .filter(|c| !side_end.contains(c))
                        .collect();
                    let (a, b, side_a, side_b) = if circuits[i].key() <= circuits[j].key() {
                        (i, j, side_start.clone(), side_b)
                    } else {
                        (j, i, side_b, side_start.clone())
                    };
                    let key = (circuits[a].key(), circuits[b].key(), between.clone());
                    if seen_keys.insert(key) {
                        out.push(ChainCandidate { a, b, side_a, side_b, between });
                    }
                }
            }
        }
    }
    out
}

/// Partition circuits by the transitive closure of crossing-parallelism.
/// Each class's extremal pair is the candidate pair sweeping the largest
/// tangle (ties by canonical circuit order).
pub fn parallel_classes(circuits: &[FourCircuit]) -> Vec<ParallelClass> {
    let n = circuits.len();
    let mut dsu = Dsu::new(n);
    let mut relation: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if crossing_parallel(&circuits[i], &circuits[j]) {
                relation.push((i, j));
                dsu.union(i, j);
            }
        }
    }
    let candidates = chain_candidates(circuits);
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = dsu.find(i);
        groups.entry(root).or_default().push(i);
    }
    groups
        .into_values()
        .map(|members| {
            let set: BTreeSet<usize> = members.iter().copied().collect();
            let relation: Vec<(usize, usize)> =
                relation.iter().copied().filter(|(i, _)| set.contains(i)).collect();
            let mut best: Option<(usize, [usize; 8], [usize; 8], (usize, usize))> = None;
            for cand in candidates.iter().filter(|c| set.contains(&c.a)) {
                let entry = (
                    cand.between.len(),
                    circuits[cand.a].key(),
                    circuits[cand.b].key(),
                    (cand.a, cand.b),
                );
                let better = match &best {
                    None => true,
                    Some((len, k1, k2, _)) => {
                        entry.0 > *len || (entry.0 == *len && (entry.1, entry.2) < (*k1, *k2))
                    }
                };
                if better {
                    best = Some(entry);
                }
            }
            let contains_trivial =
                members.iter().any(|&i| classify_circuit(&circuits[i]) == CircuitClass::Trivial);
            ParallelClass {
                members,
                relation,
                extremal_pair: best.map(|(_, _, _, pair)| pair),
                contains_trivial,
            }
        })
        .collect()
}

/// Bounding pairs of the diagram whose swept tangles are maximal under
/// inclusion, greedily thinned (largest tangle first, ties by canonical
/// circuit order) to a family with pairwise disjoint tangles.
pub fn maximal_bounding_pairs(d: &Diagram) -> Vec<BoundingPair> {
    let circuits = enumerate_four_circuits(d);
    maximal_bounding_pairs_of(&circuits)
}

pub(crate) fn maximal_bounding_pairs_of(circuits: &[FourCircuit]) -> Vec<BoundingPair> {
    let candidates = chain_candidates(circuits);
    let sets: Vec<BTreeSet<CrossingId>> =
        candidates.iter().map(|c| c.between.iter().copied().collect()).collect();
    let mut keep: Vec<&ChainCandidate> = Vec::new();
    for (i, cand) in candidates.iter().enumerate() {
        let dominated = sets.iter().enumerate().any(|(j, other)| {
            j != i && other.len() > sets[i].len() && sets[i].is_subset(other)
        });
        if !dominated {
            keep.push(cand);
        }
    }
    keep.sort_by(|p, q| {
        q.between
            .len()
            .cmp(&p.between.len())
            .then_with(|| {
                (circuits[p.a].key(), circuits[p.b].key())
                    .cmp(&(circuits[q.a].key(), circuits[q.b].key()))
            })
            .then_with(|| p.between.cmp(&q.between))
    });
    let mut taken: BTreeSet<CrossingId> = BTreeSet::new();
    let mut out: Vec<BoundingPair> = Vec::new();
    for cand in keep {
        if cand.between.iter().all(|c| !taken.contains(c)) {
            taken.extend(cand.between.iter().copied());
            out.push(BoundingPair {
                a: circuits[cand.a].clone(),
                b: circuits[cand.b].clone(),
                side_a: cand.side_a.clone(),
                side_b: cand.side_b.clone(),
                between: cand.between.clone(),
            });
        }
    }
    out
}
