//! Independent construction of PD codes for braid closures, plus PD-level
//! diagram surgery helpers (twist insertion).
//!
//! This generator is deliberately separate from the library's weaving module:
//! it builds the projection geometrically (columns, rows, closure arcs),
//! derives an alternating over/under assignment by propagation, and emits PD
//! text. Tests cross-check the library's generator against it.
//!
//! Geometric end indices at a braid crossing, strands flowing downward:
//! 0 = upper-left, 1 = upper-right, 2 = lower-left, 3 = lower-right.
//! Counterclockwise order around the crossing is (UR, UL, DL, DR).

const UL: usize = 0;
const UR: usize = 1;
const DL: usize = 2;
const DR: usize = 3;

/// A crossing under construction: edge id occupying each geometric end.
type ProtoCrossing = [Option<usize>; 4];

struct Builder {
    crossings: Vec<ProtoCrossing>,
    /// Edge endpoints as (crossing, geometric end).
    edges: Vec<[(usize, usize); 2]>,
    /// Open half-edges waiting for their partner, keyed by edge id.
    pending: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { crossings: Vec::new(), edges: Vec::new(), pending: Vec::new() }
    }

    fn open_edge(&mut self, c: usize, g: usize) -> usize {
        let id = self.edges.len();
        self.edges.push([(c, g), (usize::MAX, usize::MAX)]);
        self.pending.push((usize::MAX, usize::MAX));
        self.crossings[c][g] = Some(id);
        id
    }

    fn close_edge(&mut self, id: usize, c: usize, g: usize) {
        self.edges[id][1] = (c, g);
        self.crossings[c][g] = Some(id);
    }
}

/// PD text for the closure of the braid on `p` strands given by `word`
/// (generator indices, 1-based: letter `j` crosses strand positions j, j+1).
/// Crossing signs are chosen to make the diagram alternating; the projection
/// must admit such an assignment and be connected.
pub fn braid_closure_pd(p: usize, word: &[usize]) -> String {
    assert!(p >= 2 && !word.is_empty());
    let mut b = Builder::new();
    // Per column: edge id of the dangling bottom stub, and whether the column
    // top is still unclaimed (wrap edge created at the end).
    let mut open_bottom: Vec<Option<usize>> = vec![None; p + 1];
    let mut top_claim: Vec<Option<usize>> = vec![None; p + 1];

    for &j in word {
        assert!((1..p).contains(&j), "generator out of range");
        let c = b.crossings.len();
        b.crossings.push([None; 4]);
        for (col, g_top) in [(j, UL), (j + 1, UR)] {
            match open_bottom[col] {
                Some(edge) => b.close_edge(edge, c, g_top),
                None => {
                    // First crossing in this column: remember the open top end.
                    let edge = b.open_edge(c, g_top);
                    top_claim[col] = Some(edge);
                }
            }
        }
        for (col, g_bot) in [(j, DL), (j + 1, DR)] {
            open_bottom[col] = Some(b.open_edge(c, g_bot));
        }
    }
    // Closure: connect each column's bottom stub around to its top stub.
    for col in 1..=p {
        let (bottom, top) = (open_bottom[col], top_claim[col]);
        let (Some(bottom), Some(top)) = (bottom, top) else {
            panic!("braid word never uses column {col}");
        };
        // Merge: bottom edge's far end becomes the top stub's anchor.
        let (tc, tg) = b.edges[top][0];
        b.close_edge(bottom, tc, tg);
        // Edge `top` is now redundant; mark it so renumbering skips it.
        b.edges[top][0] = (usize::MAX, usize::MAX);
        b.crossings[tc][tg] = Some(bottom);
    }

    finish(b)
}

/// Assign alternating over/under flags and emit PD text.
fn finish(b: Builder) -> String {
    let n = b.crossings.len();
    let live: Vec<usize> =
        (0..b.edges.len()).filter(|&e| b.edges[e][0].0 != usize::MAX).collect();
    assert_eq!(live.len(), 2 * n, "edge bookkeeping out of balance");

    // Adjacency for the over-flag propagation: x_c = true means the strand
    // through upper-left/lower-right passes over at c. A strand is over at
    // end (c, g) iff x_c == (g is UL or DR); the two ends of an edge must
    // disagree.
    let in_left = |g: usize| g == UL || g == DR;
    let mut x: Vec<Option<bool>> = vec![None; n];
    let mut stack = vec![0usize];
    x[0] = Some(true);
    let mut edges_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in &live {
        for (c, _) in b.edges[e] {
            edges_at[c].push(e);
        }
    }
    while let Some(c) = stack.pop() {
        for &e in &edges_at[c] {
            let [(c1, g1), (c2, g2)] = b.edges[e];
            let (oc, og, sg) = if c1 == c { (c2, g2, g1) } else { (c1, g1, g2) };
            let want = !(x[c].unwrap() == in_left(sg)) == in_left(og);
            match x[oc] {
                None => {
                    x[oc] = Some(want);
                    stack.push(oc);
                }
                Some(v) => assert_eq!(v, want, "projection is not alternating-consistent"),
            }
        }
    }
    assert!(x.iter().all(|v| v.is_some()), "projection is disconnected");

    // Relabel edges 1..2n in first-use order, then emit tuples rotated so the
    // first entry is the incoming under-strand end.
    let mut label = vec![0u32; b.edges.len()];
    let mut next = 1u32;
    let mut tuples: Vec<[u32; 4]> = Vec::new();
    for c in 0..n {
        let geo_order: [usize; 4] =
            if x[c].unwrap() { [UR, UL, DL, DR] } else { [UL, DL, DR, UR] };
        let mut t = [0u32; 4];
        for (slot, &g) in geo_order.iter().enumerate() {
            let e = b.crossings[c][g].expect("unfilled crossing end");
            if label[e] == 0 {
                label[e] = next;
                next += 1;
            }
            t[slot] = label[e];
        }
        tuples.push(t);
    }
    emit(&tuples)
}

/// Generator word for the weaving link W(p,q): (sigma_1 ... sigma_{p-1})^q.
pub fn weaving_word(p: usize, q: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity((p - 1) * q);
    for _ in 0..q {
        w.extend(1..p);
    }
    w
}

/// PD text of the standard (2,q)-torus diagram.
pub fn torus2_pd(q: usize) -> String {
    braid_closure_pd(2, &vec![1; q])
}

/// Minimal PD text tokenizer (kept independent of the library parser).
pub fn parse_tuples(text: &str) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let inner = tok
            .trim_start_matches("X(")
            .trim_end_matches(')');
        let nums: Vec<u32> = inner.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(nums.len(), 4, "bad token {tok}");
        out.push([nums[0], nums[1], nums[2], nums[3]]);
    }
    out
}

pub fn emit(tuples: &[[u32; 4]]) -> String {
    tuples
        .iter()
        .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Replace crossing `victim` of an alternating PD code by a vertical chain of
/// `k` crossings (a twist region realizing the same 2-string tangle pattern
/// extended by k-1 extra half-twists). k = 1 returns the diagram unchanged.
/// The attachment keeps the ambient diagram alternating: the chain's outer
/// ends take over the victim's four edge labels in rotation order.
pub fn insert_twist(pd_text: &str, victim: usize, k: usize) -> String {
    assert!(k >= 1);
    let mut tuples = parse_tuples(pd_text);
    let n = tuples.len();
    assert!(victim < n);
    let [e0, e1, e2, e3] = tuples[victim];
    if k == 1 {
        return emit(&tuples);
    }
    let base = 2 * n as u32;
    // Internal edge pair below chain level j (1-based): left and right.
    let il = |j: usize| base + 2 * (j as u32 - 1) + 1;
    let ir = |j: usize| base + 2 * (j as u32 - 1) + 2;
    let mut chain: Vec<[u32; 4]> = Vec::with_capacity(k);
    chain.push([e0, e1, il(1), ir(1)]);
    for j in 2..k {
        chain.push([ir(j - 1), il(j - 1), il(j), ir(j)]);
    }
    chain.push([ir(k - 1), il(k - 1), e2, e3]);
    tuples.splice(victim..victim + 1, chain);
    emit(&tuples)
}

/// Replace crossing `victim` of an alternating PD code by the five-crossing
/// tangle obtained from the standard Borromean-rings diagram by opening one
/// crossing. The enclosing 4-circuit of the insertion is prismatic whenever
/// the ambient diagram is bigon-free at the victim, so the splitting stage
/// peels the tangle off as one octahedral piece and restores the ambient
/// diagram; the right-angled volume grows by exactly the Borromean value.
pub fn insert_octahedral_tangle(pd_text: &str, victim: usize) -> String {
    // Borromean diagram minus its first crossing X(9,3,1,4); the four opened
    // strands 9,3,1,4 leave the removed crossing in rotation order.
    const TANGLE: [[u32; 4]; 5] =
        [[4, 5, 10, 12], [5, 1, 2, 6], [6, 7, 11, 10], [7, 2, 3, 8], [8, 9, 12, 11]];
    const BOUNDARY: [u32; 4] = [9, 3, 1, 4];
    const INTERNAL: [u32; 8] = [2, 5, 6, 7, 8, 10, 11, 12];

    let mut tuples = parse_tuples(pd_text);
    let n = tuples.len();
    assert!(victim < n);
    let e = tuples[victim];
    assert_eq!(
        e.iter().collect::<std::collections::BTreeSet<_>>().len(),
        4,
        "victim must have four distinct edges"
    );
    // The tangle disk glues into the victim's hole with reversed boundary
    // orientation; pairing the victim's slot-s edge with the reversed strand
    // sequence keeps ends of merged edges on opposite parities, preserving
    // alternation.
    let mut map = std::collections::BTreeMap::new();
    for s in 0..4 {
        map.insert(BOUNDARY[3 - s], e[s]);
    }
    for (i, &label) in INTERNAL.iter().enumerate() {
        map.insert(label, 2 * n as u32 + 1 + i as u32);
    }
    tuples.remove(victim);
    for t in TANGLE {
        tuples.push(t.map(|x| map[&x]));
    }
    emit(&tuples)
}
