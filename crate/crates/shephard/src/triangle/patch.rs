//! Finite pieces of the Cayley 2-complex of a triangle group: vertices are group
//! elements, edges are right multiplications by a or c, and faces are the a-orbits (P),
//! c-orbits (R) and alternating ac-cycles (Q2).

use super::group::{inverse_letter, Letter, TriangleGroup, LA, LA_INV, LC, LC_INV};
use crate::algebra::ExactMatrix;
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

pub const NONE: u32 = u32::MAX;
const INCOMPLETE: u32 = u32::MAX - 1;

/// Default cap on the number of elements held by one patch.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FaceType {
    P,
    R,
    Q2,
}

/// A complete face with its positively oriented boundary, given as directed edges
/// `(vertex, letter)` with letter `a` or `c`.
#[derive(Debug, Clone)]
pub struct Face {
    pub kind: FaceType,
    pub edges: Vec<(u32, Letter)>,
}

impl Face {
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter().map(|e| e.0)
    }
}

/// Directed positive edge id: `2v` for `(v, a)` and `2v + 1` for `(v, c)`.
pub fn edge_id(v: u32, x: Letter) -> usize {
    2 * v as usize + usize::from(x == LC)
}

/// Elements found by breadth-first search from a set of sources, with the
/// generator adjacency among them.
#[derive(Debug, Clone)]
pub struct Patch {
    elements: Vec<ExactMatrix>,
    index: HashMap<ExactMatrix, u32>,
    depth: Vec<u32>,
    parent: Vec<(u32, Letter)>,
    nbr: Vec<[u32; 4]>,
    expanded: usize,
    radius: u32,
    exhausted: bool,
    budget: usize,
}

impl Patch {
    pub fn new(sources: &[ExactMatrix], budget: usize) -> Self {
        let mut p = Patch {
            elements: Vec::new(),
            index: HashMap::new(),
            depth: Vec::new(),
            parent: Vec::new(),
            nbr: Vec::new(),
            expanded: 0,
            radius: 0,
            exhausted: false,
            budget,
        };
        for s in sources {
            if !p.index.contains_key(s) {
                p.push(s.clone(), 0, (NONE, 0));
            }
        }
        p
    }

    fn push(&mut self, g: ExactMatrix, depth: u32, parent: (u32, Letter)) -> u32 {
        let id = self.elements.len() as u32;
        self.index.insert(g.clone(), id);
        self.elements.push(g);
        self.depth.push(depth);
        self.parent.push(parent);
        self.nbr.push([NONE; 4]);
        id
    }

    /// Extend the search so that every element within `radius` of a source is present.
    pub fn grow(&mut self, group: &TriangleGroup, radius: u32) -> Result<()> {
        while self.expanded < self.elements.len() && self.depth[self.expanded] < radius {
            let v = self.expanded as u32;
            for x in [LA, LA_INV, LC, LC_INV] {
                let h = group.step(&self.elements[v as usize], x)?;
                let w = match self.index.get(&h) {
                    Some(&w) => w,
                    None => {
                        if self.elements.len() >= self.budget {
                            return Err(Error::Budget(self.budget));
                        }
                        let d = self.depth[v as usize] + 1;
                        self.push(h, d, (v, x))
                    }
                };
                self.nbr[v as usize][x as usize] = w;
                self.nbr[w as usize][inverse_letter(x) as usize] = v;
            }
            self.expanded += 1;
        }
        self.exhausted = self.expanded == self.elements.len();
        // close up links among the outermost layer
        for v in self.expanded..self.elements.len() {
            for x in [LA, LC] {
                if self.nbr[v][x as usize] != NONE {
                    continue;
                }
                let h = group.step(&self.elements[v], x)?;
                if let Some(&w) = self.index.get(&h) {
                    self.nbr[v][x as usize] = w;
                    self.nbr[w as usize][inverse_letter(x) as usize] = v as u32;
                }
            }
        }
        self.radius = self.radius.max(radius);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// True when the search stopped for lack of new elements (finite group).
    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn element(&self, v: u32) -> &ExactMatrix {
        &self.elements[v as usize]
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn lookup(&self, g: &ExactMatrix) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    pub fn parent(&self, v: u32) -> Option<(u32, Letter)> {
        let (u, x) = self.parent[v as usize];
        (u != NONE).then_some((u, x))
    }

    pub fn neighbor(&self, v: u32, x: Letter) -> Option<u32> {
        let w = self.nbr[v as usize][x as usize];
        (w != NONE).then_some(w)
    }

    /// Word from the source of `v`'s search tree to `v`.
    pub fn witness(&self, v: u32) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.depth[v as usize] as usize);
        let mut cur = v;
        while let Some((u, x)) = self.parent(cur) {
            w.push(x);
            cur = u;
        }
        w.reverse();
        w
    }

    /// Number of directed positive edges with both ends present.
    pub fn edge_count(&self) -> usize {
        self.nbr
            .iter()
            .map(|n| usize::from(n[LA as usize] != NONE) + usize::from(n[LC as usize] != NONE))
            .sum()
    }

    /// Trace every face whose boundary lies entirely in the patch.
    pub fn faces(&self, group: &TriangleGroup) -> FaceTable {
        let (p, q, r) = group.orders();
        let n = self.elements.len();
        let mut own = vec![NONE; 2 * n];
        let mut q2 = vec![NONE; 2 * n];
        let mut faces = Vec::new();

        let mut trace_orbit = |start: u32, x: Letter, len: u32, own: &mut Vec<u32>| {
            let mut cycle = Vec::with_capacity(len as usize);
            let mut v = start;
            let mut ok = true;
            for _ in 0..len {
                match self.neighbor(v, x) {
                    Some(w) => {
                        cycle.push((v, x));
                        v = w;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            ok &= v == start;
            let tag = if ok { faces.len() as u32 } else { INCOMPLETE };
            for &(u, y) in &cycle {
                own[edge_id(u, y)] = tag;
            }
            if ok {
                let kind = if x == LA { FaceType::P } else { FaceType::R };
                faces.push(Face { kind, edges: cycle });
            }
        };
        for v in 0..n as u32 {
            for (x, len) in [(LA, p), (LC, r)] {
                if self.neighbor(v, x).is_some() && own[edge_id(v, x)] == NONE {
                    trace_orbit(v, x, len, &mut own);
                }
            }
        }
        for v in 0..n as u32 {
            if self.neighbor(v, LA).is_none() || q2[edge_id(v, LA)] != NONE {
                continue;
            }
            let mut cycle = Vec::with_capacity(2 * q as usize);
            let mut u = v;
            let mut ok = true;
            for i in 0..2 * q {
                let x = if i % 2 == 0 { LA } else { LC };
                match self.neighbor(u, x) {
                    Some(w) => {
                        cycle.push((u, x));
                        u = w;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            ok &= u == v;
            let tag = if ok { faces.len() as u32 } else { INCOMPLETE };
            for &(w, y) in &cycle {
                q2[edge_id(w, y)] = tag;
            }
            if ok {
                faces.push(Face {
                    kind: FaceType::Q2,
                    edges: cycle,
                });
            }
        }
        for v in 0..n as u32 {
            for x in [LA, LC] {
                let e = edge_id(v, x);
                if self.neighbor(v, x).is_some() {
                    if own[e] == NONE {
                        own[e] = INCOMPLETE;
                    }
                    if q2[e] == NONE {
                        q2[e] = INCOMPLETE;
                    }
                }
            }
        }
        FaceTable { faces, own, q2 }
    }

    /// Signed 1-chain of a path that starts at `start` and follows `word`.
    pub fn path_chain(&self, start: u32, word: &[Letter]) -> Result<HashMap<usize, i64>> {
        let mut chain: HashMap<usize, i64> = HashMap::new();
        let mut v = start;
        for &x in word {
            let w = self.neighbor(v, x).ok_or(Error::BallTooSmall)?;
            let (e, s) = match x {
                LA | LC => (edge_id(v, x), 1),
                _ => (edge_id(w, inverse_letter(x)), -1),
            };
            *chain.entry(e).or_insert(0) += s;
            v = w;
        }
        chain.retain(|_, c| *c != 0);
        Ok(chain)
    }
}

/// Complete faces of a patch and, for every present edge, the face on each side.
#[derive(Debug, Clone)]
pub struct FaceTable {
    pub faces: Vec<Face>,
    own: Vec<u32>,
    q2: Vec<u32>,
}

impl FaceTable {
    /// The P or R face through the edge, `None` if it is not complete.
    pub fn own_face(&self, e: usize) -> Option<u32> {
        let f = self.own[e];
        (f < INCOMPLETE).then_some(f)
    }

    pub fn q2_face(&self, e: usize) -> Option<u32> {
        let f = self.q2[e];
        (f < INCOMPLETE).then_some(f)
    }

    fn present(&self, e: usize) -> bool {
        self.own[e] != NONE
    }

    pub fn count(&self, kind: FaceType) -> usize {
        self.faces.iter().filter(|f| f.kind == kind).count()
    }

    /// The 2-chain with boundary `chain`, with faces outside the patch set to zero.
    ///
    /// Values are propagated across edges from the incomplete faces; the answer is
    /// accepted only if every edge equation holds afterwards, which certifies it is the
    /// unique filling. When `closed` is set (the patch is the whole finite group) one
    /// face per component is pinned to zero instead.
    pub fn fill(&self, chain: &HashMap<usize, i64>, closed: bool) -> Result<Vec<i64>> {
        let nf = self.faces.len();
        let mut value: Vec<Option<i64>> = vec![None; nf];
        let mut queue = VecDeque::new();
        let load = |e: usize| chain.get(&e).copied().unwrap_or(0);
        for e in 0..self.own.len() {
            if !self.present(e) {
                continue;
            }
            let (a, b) = (self.own_face(e), self.q2_face(e));
            let target = match (a, b) {
                (None, None) => {
                    if load(e) != 0 {
                        return Err(Error::BallTooSmall);
                    }
                    continue;
                }
                (Some(f), None) | (None, Some(f)) => f,
                _ => continue,
            };
            let v = load(e);
            match value[target as usize] {
                None => {
                    value[target as usize] = Some(v);
                    queue.push_back(target);
                }
                Some(old) if old != v => return Err(Error::BallTooSmall),
                _ => {}
            }
        }
        let mut next_pin = 0usize;
        loop {
            while let Some(f) = queue.pop_front() {
                let xf = value[f as usize].expect("queued faces carry values");
                for &(v, x) in &self.faces[f as usize].edges {
                    let e = edge_id(v, x);
                    let other = if self.own[e] == f {
                        self.q2[e]
                    } else {
                        self.own[e]
                    };
                    if other >= INCOMPLETE {
                        continue;
                    }
                    let want = load(e) - xf;
                    match value[other as usize] {
                        None => {
                            value[other as usize] = Some(want);
                            queue.push_back(other);
                        }
                        Some(old) if old != want => return Err(Error::BallTooSmall),
                        _ => {}
                    }
                }
            }
            while next_pin < nf && value[next_pin].is_some() {
                next_pin += 1;
            }
            if next_pin == nf {
                break;
            }
            if !closed {
                return Err(Error::BallTooSmall);
            }
            value[next_pin] = Some(0);
            queue.push_back(next_pin as u32);
        }
        let value: Vec<i64> = value.into_iter().map(|v| v.unwrap_or(0)).collect();
        for e in 0..self.own.len() {
            if !self.present(e) {
                continue;
            }
            let side = |f: u32| if f < INCOMPLETE { value[f as usize] } else { 0 };
            if side(self.own[e]) + side(self.q2[e]) != load(e) {
                return Err(Error::BallTooSmall);
            }
        }
        Ok(value)
    }
}

/// Nonzero part of a filling, keyed by face type and the least element on its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filling {
    pub faces: Vec<(FaceType, ExactMatrix, i64)>,
    /// Sums of values over P, R and Q2 faces.
    pub totals: [i64; 3],
    /// In a finite group the filling is only defined up to the fundamental cycle.
    pub closed: bool,
}

impl Filling {
    pub fn empty() -> Self {
        Filling {
            faces: Vec::new(),
            totals: [0; 3],
            closed: false,
        }
    }

    pub fn value(&self, kind: FaceType, anchor: &ExactMatrix) -> i64 {
        self.faces
            .iter()
            .find(|(k, a, _)| *k == kind && a == anchor)
            .map_or(0, |f| f.2)
    }

    /// Weighted sum with per-type weights (P, R, Q2).
    pub fn weighted(&self, w: [i64; 3]) -> i64 {
        self.totals.iter().zip(w).map(|(x, w)| x * w).sum()
    }
}

pub(crate) fn collect_filling(
    patch: &Patch,
    table: &FaceTable,
    values: &[i64],
    closed: bool,
) -> Filling {
    let mut faces = Vec::new();
    let mut totals = [0i64; 3];
    for (f, &x) in table.faces.iter().zip(values) {
        if x == 0 {
            continue;
        }
        let slot = match f.kind {
            FaceType::P => 0,
            FaceType::R => 1,
            FaceType::Q2 => 2,
        };
        totals[slot] += x;
        let anchor = f
            .vertices()
            .map(|v| patch.element(v))
            .min()
            .expect("faces are nonempty")
            .clone();
        faces.push((f.kind, anchor, x));
    }
    faces.sort();
    Filling {
        faces,
        totals,
        closed,
    }
}

/// Fill the closed loop that starts at `start` and reads `word`, using a patch around
/// the loop whose width is doubled until the filling is certified.
pub fn fill_loop(
    group: &TriangleGroup,
    start: &ExactMatrix,
    word: &[Letter],
    budget: usize,
) -> Result<Filling> {
    let mut vertices = Vec::with_capacity(word.len() + 1);
    let mut g = start.clone();
    vertices.push(g.clone());
    for &x in word {
        g = group.step(&g, x)?;
        vertices.push(g.clone());
    }
    if g != *start {
        return Err(Error::InvalidInput("path is not closed".into()));
    }
    if word.is_empty() {
        return Ok(Filling::empty());
    }
    let (p, q, r) = group.orders();
    let mut width = p.max(r).max(2 * q) / 2 + 1;
    let mut patch = Patch::new(&vertices, budget);
    loop {
        patch.grow(group, width)?;
        let table = patch.faces(group);
        let s = patch.lookup(start).expect("sources are present");
        let chain = patch.path_chain(s, word)?;
        let closed = patch.is_exhausted();
        match table.fill(&chain, closed) {
            Ok(values) => return Ok(collect_filling(&patch, &table, &values, closed)),
            Err(Error::BallTooSmall) if !closed => width *= 2,
            Err(e) => return Err(e),
        }
    }
}
