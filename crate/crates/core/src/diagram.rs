//! PD codes, planar maps, and diagram validation.
//!
//! A PD code lists one tuple `X(a,b,c,d)` per crossing: the labels of the
//! four edge ends in counterclockwise order, starting at the incoming
//! under-strand. Slots 0 and 2 therefore carry the under-strand, slots 1 and
//! 3 the over-strand. Labels run 1..2n, each naming one edge (arc) of the
//! diagram and appearing exactly twice.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type CrossingId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// One end of an edge: a crossing together with the rotation slot (0..4)
/// through which the edge attaches. Viewed as a dart, `End { c, s }` is the
/// half-edge leaving `c` through slot `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: CrossingId,
    pub slot: u8,
}

impl End {
    pub fn new(crossing: CrossingId, slot: usize) -> Self {
        End { crossing, slot: (slot % 4) as u8 }
    }
}

/// A parsed PD code: one 4-tuple of edge labels per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDCode {
    pub tuples: Vec<[u32; 4]>,
}

impl PDCode {
    pub fn n_crossings(&self) -> usize {
        self.tuples.len()
    }

    /// Canonical single-line text form, `X(a,b,c,d)` tokens joined by spaces.
    pub fn to_text(&self) -> String {
        self.tuples
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdError {
    #[error("malformed PD token starting at `{token}`")]
    MalformedToken { token: String },
    #[error("edge label {label} is used more than twice")]
    DuplicateArcUse { label: u32 },
    #[error("edge labels are not exactly 1..2n each used twice (first offender: {label})")]
    NonContiguousLabels { label: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("rotation data does not trace a sphere embedding (V - E + F != 2)")]
    NonPlanarEmbedding,
    #[error("diagram is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram is not reduced (it has a nugatory crossing)")]
    NotReduced,
    #[error("diagram is not prime (a two-edge cut separates crossings)")]
    NotPrime,
    #[error("diagram is not connected")]
    Disconnected,
}

/// Parse PD text: `X(a,b,c,d)` tokens separated by whitespace and/or commas.
pub fn parse_pd(text: &str) -> Result<PDCode, PdError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut tuples: Vec<[u32; 4]> = Vec::new();
    let snippet = |start: usize| -> String {
        if start >= chars.len() {
            return "<end of input>".to_string();
        }
        chars[start..]
            .iter()
            .take_while(|c| !c.is_whitespace())
            .take(24)
            .collect()
    };
    loop {
        while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
            i += 1;
        }
        if i >= chars.len() {
            break;
        }
        let start = i;
        let fail = || PdError::MalformedToken { token: snippet(start) };
        if chars[i] != 'X' && chars[i] != 'x' {
            return Err(fail());
        }
        i += 1;
        if i >= chars.len() || chars[i] != '(' {
            return Err(fail());
        }
        i += 1;
        let mut tuple = [0u32; 4];
        for (pos, slot) in tuple.iter_mut().enumerate() {
            let num_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == num_start {
                return Err(fail());
            }
            let text: String = chars[num_start..i].iter().collect();
            *slot = text.parse().map_err(|_| fail())?;
            let want = if pos < 3 { ',' } else { ')' };
            if i >= chars.len() || chars[i] != want {
                return Err(fail());
            }
            i += 1;
        }
        tuples.push(tuple);
    }
    if tuples.is_empty() {
        return Err(PdError::MalformedToken { token: "<end of input>".to_string() });
    }

    // Label invariants: exactly the labels 1..2n, each used twice.
    let n = tuples.len() as u32;
    let mut count = vec![0u32; 2 * n as usize + 1];
    for t in &tuples {
        for &lab in t {
            if lab == 0 || lab > 2 * n {
                return Err(PdError::NonContiguousLabels { label: lab });
            }
            count[lab as usize] += 1;
            if count[lab as usize] > 2 {
                return Err(PdError::DuplicateArcUse { label: lab });
            }
        }
    }
    for lab in 1..=2 * n {
        if count[lab as usize] != 2 {
            return Err(PdError::NonContiguousLabels { label: lab });
        }
    }
    Ok(PDCode { tuples })
}

/// A connected 4-valent map embedded in the sphere: rotation system, edge
/// endpoints, traced faces, checkerboard face coloring, and a canonical
/// outer-face choice. This carries no over/under information; [`Diagram`]
/// layers the knot-theoretic structure on top.
#[derive(Clone, Debug)]
pub struct PlanarMap {
    rotation: Vec<[EdgeId; 4]>,
    ends: Vec<[End; 2]>,
    faces: Vec<Vec<End>>,
    dart_face: Vec<[FaceId; 4]>,
    colors: Vec<u8>,
    outer: FaceId,
}

impl PlanarMap {
    /// Build from edge endpoint data: `ends[e]` gives the two (crossing,
    /// slot) attachments of edge `e`. Every slot of every crossing must be
    /// used exactly once.
    pub(crate) fn from_ends(n: usize, ends: Vec<[End; 2]>) -> Result<PlanarMap, BuildError> {
        if n == 0 {
            return Err(BuildError::Disconnected);
        }
        assert_eq!(ends.len(), 2 * n, "a 4-valent map on {n} vertices has {} edges", 2 * n);
        let mut rotation = vec![[usize::MAX; 4]; n];
        for (e, pair) in ends.iter().enumerate() {
            for end in pair {
                let slot = &mut rotation[end.crossing][end.slot as usize];
                assert_eq!(*slot, usize::MAX, "slot used twice");
                *slot = e;
            }
        }
        assert!(
            rotation.iter().all(|r| r.iter().all(|&e| e != usize::MAX)),
            "unfilled rotation slot"
        );

        // Connectivity over crossings.
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &e in &rotation[c] {
                for end in ends[e] {
                    if !seen[end.crossing] {
                        seen[end.crossing] = true;
                        stack.push(end.crossing);
                    }
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(BuildError::Disconnected);
        }

        // Face tracing: from dart (c, s), cross the edge to its other end
        // (c', s') and continue with the dart (c', s'+1).
        let other = |d: End| -> End {
            let e = rotation[d.crossing][d.slot as usize];
            let [a, b] = ends[e];
            if a == d {
                b
            } else {
                a
            }
        };
        let mut dart_face = vec![[usize::MAX; 4]; n];
        let mut faces: Vec<Vec<End>> = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                if dart_face[c][s as usize] != usize::MAX {
                    continue;
                }
                let f = faces.len();
                let start = End { crossing: c, slot: s };
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    assert_eq!(dart_face[d.crossing][d.slot as usize], usize::MAX);
                    dart_face[d.crossing][d.slot as usize] = f;
                    walk.push(d);
                    let o = other(d);
                    d = End::new(o.crossing, o.slot as usize + 1);
                    if d == start {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        if faces.len() != n + 2 {
            return Err(BuildError::NonPlanarEmbedding);
        }

        // Checkerboard face coloring; exists because the map is 4-valent.
        let mut colors = vec![u8::MAX; faces.len()];
        colors[0] = 0;
        let mut stack = vec![0usize];
        while let Some(f) = stack.pop() {
            for &d in &faces[f] {
                let o = other(d);
                let g = dart_face[o.crossing][o.slot as usize];
                if colors[g] == u8::MAX {
                    colors[g] = 1 - colors[f];
                    stack.push(g);
                } else if colors[g] == colors[f] {
                    return Err(BuildError::NonPlanarEmbedding);
                }
            }
        }

        // Canonical outer-face marker: largest face, ties to the one holding
        // the smallest dart. Nothing downstream depends on the choice.
        let outer = (0..faces.len())
            .max_by_key(|&f| (faces[f].len(), std::cmp::Reverse(faces[f].iter().min().copied())))
            .unwrap();

        Ok(PlanarMap { rotation, ends, faces, dart_face, colors, outer })
    }

    pub fn n_crossings(&self) -> usize {
        self.rotation.len()
    }

    pub fn n_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    /// Edges at `c` in counterclockwise slot order.
    pub fn rotation(&self, c: CrossingId) -> [EdgeId; 4] {
        self.rotation[c]
    }

    pub fn edge_at(&self, c: CrossingId, slot: usize) -> EdgeId {
        self.rotation[c][slot % 4]
    }

    pub fn edge_ends(&self, e: EdgeId) -> [End; 2] {
        self.ends[e]
    }

    pub fn edge_crossings(&self, e: EdgeId) -> [CrossingId; 2] {
        [self.ends[e][0].crossing, self.ends[e][1].crossing]
    }

    /// The far end of the edge entered through dart `d`.
    pub fn other_end(&self, d: End) -> End {
        let [a, b] = self.ends[self.rotation[d.crossing][d.slot as usize]];
        if a == d {
            b
        } else {
            a
        }
    }

    /// Darts of the face boundary in tracing order.
    pub fn face_walk(&self, f: FaceId) -> &[End] {
        &self.faces[f]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn is_bigon(&self, f: FaceId) -> bool {
        self.faces[f].len() == 2
    }

    pub fn face_of_dart(&self, d: End) -> FaceId {
        self.dart_face[d.crossing][d.slot as usize]
    }

    /// The face wedged between slots `s` and `s+1` at crossing `c`.
    pub fn corner_face(&self, c: CrossingId, slot: usize) -> FaceId {
        self.face_of_dart(End::new(c, slot + 1))
    }

    /// The four corner faces at `c`, counterclockwise: between slots (0,1),
    /// (1,2), (2,3), (3,0).
    pub fn faces_at(&self, c: CrossingId) -> [FaceId; 4] {
        [0, 1, 2, 3].map(|s| self.corner_face(c, s))
    }

    /// The two faces on either side of edge `e`.
    pub fn edge_faces(&self, e: EdgeId) -> [FaceId; 2] {
        let [a, b] = self.ends[e];
        [self.face_of_dart(a), self.face_of_dart(b)]
    }

    pub fn face_color(&self, f: FaceId) -> u8 {
        self.colors[f]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }
}

/// A link diagram: a planar map together with its PD code. The PD slot
/// convention (under-strand at slots 0 and 2) carries the over/under data.
#[derive(Clone, Debug)]
pub struct Diagram {
    pd: PDCode,
    map: PlanarMap,
    components: usize,
}

/// Construct the planar map of a PD code and trace its strands.
pub fn build_diagram(code: &PDCode) -> Result<Diagram, BuildError> {
    let n = code.n_crossings();
    if n == 0 {
        return Err(BuildError::Disconnected);
    }
    // Edge id = label - 1; collect the two (crossing, slot) uses per label.
    let mut ends: Vec<Vec<End>> = vec![Vec::new(); 2 * n];
    for (c, t) in code.tuples.iter().enumerate() {
        for (s, &lab) in t.iter().enumerate() {
            ends[lab as usize - 1].push(End::new(c, s));
        }
    }
    let ends: Vec<[End; 2]> = ends
        .into_iter()
        .map(|v| {
            assert_eq!(v.len(), 2, "PDCode invariants violated");
            [v[0], v[1]]
        })
        .collect();
    let map = PlanarMap::from_ends(n, ends)?;

    // Link components: orbits of edges under strand continuation, which
    // leaves a crossing through the slot opposite the one it entered.
    let mut comp = vec![usize::MAX; map.n_edges()];
    let mut components = 0;
    for e0 in 0..map.n_edges() {
        if comp[e0] != usize::MAX {
            continue;
        }
        let mut d = map.edge_ends(e0)[0];
        loop {
            let e = map.edge_at(d.crossing, d.slot as usize);
            if comp[e] == components {
                break;
            }
            comp[e] = components;
            let far = map.other_end(d);
            d = End::new(far.crossing, far.slot as usize + 2);
        }
        components += 1;
    }

    Ok(Diagram { pd: code.clone(), map, components })
}

impl Diagram {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn pd(&self) -> &PDCode {
        &self.pd
    }

    pub fn n_crossings(&self) -> usize {
        self.map.n_crossings()
    }

    pub fn n_components(&self) -> usize {
        self.components
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            n_crossings: self.n_crossings(),
            twist_number: twist_number(self),
            n_components: self.components,
        }
    }
}

/// Headline counts of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramStats {
    pub n_crossings: usize,
    pub twist_number: usize,
    pub n_components: usize,
}

/// Number of maximal twist regions: crossings are grouped by chains of
/// shared bigon faces; each group (including isolated crossings) is one
/// twist region.
pub fn twist_number(d: &Diagram) -> usize {
    let map = d.map();
    let mut parent: Vec<usize> = (0..map.n_crossings()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for f in 0..map.n_faces() {
        if map.is_bigon(f) {
            let w = map.face_walk(f);
            let (a, b) = (find(&mut parent, w[0].crossing), find(&mut parent, w[1].crossing));
            parent[a] = b;
        }
    }
    (0..map.n_crossings()).filter(|&c| find(&mut parent, c) == c).count()
}

/// Pass/fail summary of the standing hypotheses on input diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub alternating: bool,
    pub reduced: bool,
    pub prime: bool,
    pub connected: bool,
}

impl ValidationReport {
    /// Error out on the first failed check.
    pub fn require_all(&self) -> Result<(), ValidationError> {
        if !self.connected {
            return Err(ValidationError::Disconnected);
        }
        if !self.alternating {
            return Err(ValidationError::NotAlternating);
        }
        if !self.reduced {
            return Err(ValidationError::NotReduced);
        }
        if !self.prime {
            return Err(ValidationError::NotPrime);
        }
        Ok(())
    }
}

/// Check the standing hypotheses: alternating, reduced (no nugatory
/// crossing), prime (no separating pair of edges), connected.
pub fn validate_diagram(d: &Diagram) -> ValidationReport {
    let map = d.map();

    // Alternating: each edge joins an under slot (even) to an over slot
    // (odd) so that strands alternate as they run through the diagram.
    let alternating = (0..map.n_edges()).all(|e| {
        let [a, b] = map.edge_ends(e);
        (a.slot % 2) + (b.slot % 2) == 1
    });

    // Reduced: no crossing whose two diagonally opposite corner faces agree.
    let reduced = (0..map.n_crossings()).all(|c| {
        map.corner_face(c, 0) != map.corner_face(c, 2)
            && map.corner_face(c, 1) != map.corner_face(c, 3)
    });

    let prime = is_prime(map);

    ValidationReport { alternating, reduced, prime, connected: true }
}

/// No pair of edges disconnects the crossing graph.
fn is_prime(map: &PlanarMap) -> bool {
    let n = map.n_crossings();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    for e1 in 0..map.n_edges() {
        for e2 in e1 + 1..map.n_edges() {
            seen.iter_mut().for_each(|s| *s = false);
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut reached = 1;
            while let Some(c) = stack.pop() {
                for &e in &map.rotation(c) {
                    if e == e1 || e == e2 {
                        continue;
                    }
                    for end in map.edge_ends(e) {
                        if !seen[end.crossing] {
                            seen[end.crossing] = true;
                            reached += 1;
                            stack.push(end.crossing);
                        }
                    }
                }
            }
            if reached < n {
                return false;
            }
        }
    }
    true
}
