//! Smoothing diagrams: state circles with chords at the former crossings,
//! embedded in the sphere.
//!
//! Each circle is a cyclic list of slots in its direction of travel. A slot
//! is one chord endpoint together with the side of the circle (relative to
//! the direction of travel) on which the chord leaves. Arc `j` of a circle
//! runs from slot `j` to slot `j+1`. One face is marked as the outer one;
//! inside and outside of every circle are measured against it.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StateKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChordSide {
    Left,
    Right,
}

impl ChordSide {
    pub fn opposite(self) -> Self {
        match self {
            ChordSide::Left => ChordSide::Right,
            ChordSide::Right => ChordSide::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub chord: usize,
    pub side: ChordSide,
}

/// A face named by one circle arc and the side of it the face lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceRef {
    pub circle: usize,
    pub arc: usize,
    pub side: ChordSide,
}

#[derive(Clone, Debug)]
pub struct SmoothingDiagram {
    kind: StateKind,
    circles: Vec<Vec<Slot>>,
    outer: FaceRef,
    /// endpoints of each chord as `(circle, slot index)`
    endpoints: Vec<[(usize, usize); 2]>,
    /// face id of every dart
    dart_face: Vec<usize>,
    num_faces: usize,
    /// side of each circle facing away from the outer face
    inside: Vec<ChordSide>,
    depth: Vec<usize>,
    /// innermost circle containing each circle
    parent: Vec<Option<usize>>,
    containers: Vec<Vec<usize>>,
}

impl PartialEq for SmoothingDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.circles == other.circles && self.outer == other.outer
    }
}

/// Darts: arc `a` forward is `2a`, backward `2a+1`; chord `h` from
/// endpoint 0 is `2(arcs+h)`, from endpoint 1 is `2(arcs+h)+1`.
struct Darts {
    arc_base: Vec<usize>,
    num_arcs: usize,
}

impl Darts {
    fn arc(&self, c: usize, j: usize) -> usize {
        self.arc_base[c] + j
    }
}

#[derive(Serialize, Deserialize)]
struct ChordJson {
    ends: [(usize, usize); 2],
}

#[derive(Serialize, Deserialize)]
struct SmoothingJson {
    kind: StateKind,
    circles: Vec<Vec<Slot>>,
    chords: Vec<ChordJson>,
    /// innermost enclosing circle, per circle
    nesting: Vec<Option<usize>>,
    outer: FaceRef,
}

impl SmoothingDiagram {
    /// Validates the combinatorics and computes faces and nesting. When
    /// `outer` is `None` the face with the longest boundary is chosen.
    pub fn new(kind: StateKind, circles: Vec<Vec<Slot>>, outer: Option<FaceRef>) -> Result<Self> {
        let num_chords = circles.iter().map(Vec::len).sum::<usize>();
        if num_chords % 2 != 0 {
            return Err(Error::Unrealizable("odd number of chord endpoints".into()));
        }
        let h = num_chords / 2;
        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h];
        for (c, slots) in circles.iter().enumerate() {
            for (j, s) in slots.iter().enumerate() {
                if s.chord >= h {
                    return Err(Error::Unrealizable(format!("chord id {} out of range", s.chord)));
                }
                ends[s.chord].push((c, j));
            }
        }
        let endpoints = ends
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                <[(usize, usize); 2]>::try_from(e)
                    .map_err(|_| Error::Unrealizable(format!("chord {i} needs two endpoints")))
            })
            .collect::<Result<Vec<_>>>()?;

        if h == 0 {
            if circles.len() != 1 {
                return Err(Error::Unrealizable(
                    "a diagram without chords must be a single circle".into(),
                ));
            }
            let outer = FaceRef {
                circle: 0,
                arc: 0,
                side: ChordSide::Right,
            };
            return Ok(Self {
                kind,
                circles,
                outer,
                endpoints,
                dart_face: Vec::new(),
                num_faces: 2,
                inside: vec![ChordSide::Left],
                depth: vec![0],
                parent: vec![None],
                containers: vec![Vec::new()],
            });
        }
        if circles.iter().any(Vec::is_empty) {
            return Err(Error::Unrealizable("a circle without chords makes the diagram split".into()));
        }

        // connectivity through chords
        let mut comp: Vec<usize> = (0..circles.len()).collect();
        fn find(comp: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while comp[r] != r {
                r = comp[r];
            }
            comp[x] = r;
            r
        }
        for [(c1, _), (c2, _)] in &endpoints {
            let (r1, r2) = (find(&mut comp, *c1), find(&mut comp, *c2));
            comp[r1] = r2;
        }
        let root = find(&mut comp, 0);
        if (0..circles.len()).any(|c| find(&mut comp, c) != root) {
            return Err(Error::Unrealizable("smoothing diagram is not connected".into()));
        }

        let mut d = Self {
            kind,
            circles,
            outer: FaceRef {
                circle: 0,
                arc: 0,
                side: ChordSide::Right,
            },
            endpoints,
            dart_face: Vec::new(),
            num_faces: 0,
            inside: Vec::new(),
            depth: Vec::new(),
            parent: Vec::new(),
            containers: Vec::new(),
        };
        d.trace_faces()?;
        d.outer = match outer {
            Some(o) => {
                if o.circle >= d.circles.len() || o.arc >= d.circles[o.circle].len() {
                    return Err(Error::Unrealizable("outer face reference out of range".into()));
                }
                o
            }
            None => d.default_outer(),
        };
        d.compute_nesting();
        Ok(d)
    }

    fn darts(&self) -> Darts {
        let mut arc_base = Vec::with_capacity(self.circles.len());
        let mut n = 0;
        for c in &self.circles {
            arc_base.push(n);
            n += c.len();
        }
        Darts {
            arc_base,
            num_arcs: n,
        }
    }

    fn trace_faces(&mut self) -> Result<()> {
        let dm = self.darts();
        let h = self.endpoints.len();
        let total = 2 * (dm.num_arcs + h);
        // rotation: successor of each dart around its tail vertex
        let mut succ = vec![usize::MAX; total];
        let mut rev = vec![0usize; total];
        for d in 0..total {
            rev[d] = d ^ 1;
        }
        for (c, slots) in self.circles.iter().enumerate() {
            let k = slots.len();
            for (j, s) in slots.iter().enumerate() {
                let out = 2 * dm.arc(c, j);
                let inn = 2 * dm.arc(c, (j + k - 1) % k) + 1;
                let [e0, _] = self.endpoints[s.chord];
                let chord = 2 * (dm.num_arcs + s.chord) + usize::from(e0 != (c, j));
                let cyc = match s.side {
                    ChordSide::Left => [out, chord, inn],
                    ChordSide::Right => [out, inn, chord],
                };
                for i in 0..3 {
                    succ[cyc[i]] = cyc[(i + 1) % 3];
                }
            }
        }
        let mut face = vec![usize::MAX; total];
        let mut nf = 0;
        for start in 0..total {
            if face[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            loop {
                face[d] = nf;
                d = succ[rev[d]];
                if d == start {
                    break;
                }
            }
            nf += 1;
        }
        // sphere: V - E + F = 2 with V = 2h, E = 3h
        if nf != h + 2 {
            return Err(Error::Unrealizable(format!(
                "chords cannot be drawn without crossings ({nf} faces, expected {})",
                h + 2
            )));
        }
        self.dart_face = face;
        self.num_faces = nf;
        Ok(())
    }

    fn face_of_side(&self, c: usize, arc: usize, side: ChordSide) -> usize {
        let dm = self.darts();
        let a = dm.arc(c, arc);
        // faces lie to the right of their darts
        match side {
            ChordSide::Right => self.dart_face[2 * a],
            ChordSide::Left => self.dart_face[2 * a + 1],
        }
    }

    pub fn face(&self, f: FaceRef) -> usize {
        if self.endpoints.is_empty() {
            return usize::from(f.side == ChordSide::Right);
        }
        self.face_of_side(f.circle, f.arc, f.side)
    }

    fn default_outer(&self) -> FaceRef {
        let mut size = vec![0usize; self.num_faces];
        for &f in &self.dart_face {
            size[f] += 1;
        }
        let mut best: Option<(usize, FaceRef)> = None;
        for (c, slots) in self.circles.iter().enumerate() {
            for arc in 0..slots.len() {
                for side in [ChordSide::Left, ChordSide::Right] {
                    let r = FaceRef { circle: c, arc, side };
                    let s = size[self.face(r)];
                    if best.map_or(true, |(bs, _)| s > bs) {
                        best = Some((s, r));
                    }
                }
            }
        }
        best.expect("nonempty diagram").1
    }

    fn compute_nesting(&mut self) {
        let nc = self.circles.len();
        if self.endpoints.is_empty() {
            self.inside = vec![match self.outer.side {
                ChordSide::Left => ChordSide::Right,
                ChordSide::Right => ChordSide::Left,
            }];
            self.depth = vec![0];
            self.parent = vec![None];
            self.containers = vec![Vec::new()];
            return;
        }
        let dm = self.darts();
        let total = self.dart_face.len();
        let outer_face = self.face(self.outer);
        let mut inside_faces: Vec<Vec<bool>> = Vec::with_capacity(nc);
        let mut inside = Vec::with_capacity(nc);
        for c in 0..nc {
            let blocked = |d: usize| {
                let e = d / 2;
                e >= dm.arc_base[c] && e < dm.arc_base[c] + self.circles[c].len()
            };
            let mut reach = vec![false; self.num_faces];
            reach[outer_face] = true;
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.num_faces];
            for d in (0..total).step_by(2) {
                if !blocked(d) {
                    let (f1, f2) = (self.dart_face[d], self.dart_face[d + 1]);
                    adj[f1].push(f2);
                    adj[f2].push(f1);
                }
            }
            let mut q = VecDeque::from([outer_face]);
            while let Some(f) = q.pop_front() {
                for &g in &adj[f] {
                    if !reach[g] {
                        reach[g] = true;
                        q.push_back(g);
                    }
                }
            }
            let left = self.face_of_side(c, 0, ChordSide::Left);
            inside.push(if reach[left] {
                ChordSide::Right
            } else {
                ChordSide::Left
            });
            inside_faces.push(reach.iter().map(|r| !r).collect());
        }
        let mut depth = vec![0; nc];
        let mut containers: Vec<Vec<usize>> = vec![Vec::new(); nc];
        for c in 0..nc {
            let f = self.face_of_side(c, 0, ChordSide::Left);
            for o in 0..nc {
                if o != c && inside_faces[o][f] {
                    depth[c] += 1;
                    containers[c].push(o);
                }
            }
        }
        let parent = (0..nc)
            .map(|c| containers[c].iter().copied().max_by_key(|&o| depth[o]))
            .collect();
        self.inside = inside;
        self.depth = depth;
        self.parent = parent;
        self.containers = containers;
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    pub fn circles(&self) -> &[Vec<Slot>] {
        &self.circles
    }

    pub fn num_circles(&self) -> usize {
        self.circles.len()
    }

    pub fn num_chords(&self) -> usize {
        self.endpoints.len()
    }

    pub fn outer(&self) -> FaceRef {
        self.outer
    }

    pub fn num_faces(&self) -> usize {
        self.num_faces
    }

    /// Endpoints of a chord as `(circle, slot index)`.
    pub fn chord_ends(&self, chord: usize) -> [(usize, usize); 2] {
        self.endpoints[chord]
    }

    /// Circles joined by each chord.
    pub fn chord_circles(&self, chord: usize) -> (usize, usize) {
        let [(a, _), (b, _)] = self.endpoints[chord];
        (a, b)
    }

    /// Side of the circle facing away from the outer face.
    pub fn inside_side(&self, circle: usize) -> ChordSide {
        self.inside[circle]
    }

    pub fn depth(&self, circle: usize) -> usize {
        self.depth[circle]
    }

    /// Innermost circle containing `circle`.
    pub fn parent(&self, circle: usize) -> Option<usize> {
        self.parent[circle]
    }

    /// True iff `inner` lies on the inside of `outer`.
    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.containers[inner].contains(&outer)
    }

    /// All face references naming face `f`.
    pub fn face_refs(&self, f: usize) -> Vec<FaceRef> {
        let mut out = Vec::new();
        for (c, slots) in self.circles.iter().enumerate() {
            for arc in 0..slots.len() {
                for side in [ChordSide::Left, ChordSide::Right] {
                    let r = FaceRef { circle: c, arc, side };
                    if self.face(r) == f {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    pub fn is_inside_slot(&self, circle: usize, slot: usize) -> bool {
        self.circles[circle][slot].side == self.inside[circle]
    }

    /// Circles with chords leaving on both of their sides.
    pub fn two_sided_circles(&self) -> Vec<usize> {
        (0..self.circles.len())
            .filter(|&c| {
                let s = &self.circles[c];
                s.iter().any(|x| x.side == ChordSide::Left)
                    && s.iter().any(|x| x.side == ChordSide::Right)
            })
            .collect()
    }

    /// No chord has both ends on one circle.
    pub fn is_adequate(&self) -> bool {
        self.endpoints.iter().all(|[(a, _), (b, _)]| a != b)
    }

    /// Equality up to rotating the slot list of each circle. The outer
    /// face is compared as a face, not by name.
    pub fn same_embedding(&self, other: &SmoothingDiagram) -> bool {
        if self.kind != other.kind || self.circles.len() != other.circles.len() {
            return false;
        }
        for (a, b) in self.circles.iter().zip(&other.circles) {
            if a.len() != b.len() {
                return false;
            }
            let k = a.len();
            if k > 0 && !(0..k).any(|r| (0..k).all(|i| a[i] == b[(i + r) % k])) {
                return false;
            }
        }
        (0..self.circles.len()).all(|c| self.inside[c] == other.inside[c])
    }

    /// Builds a diagram from plane coordinates: circles as
    /// `(centre_x, centre_y, radius)` and chords as straight segments. Each
    /// endpoint is assigned to the nearest circle; circles are traversed
    /// counterclockwise; the unbounded region is the outer face.
    pub fn from_drawing(
        kind: StateKind,
        circles: &[(f64, f64, f64)],
        chords: &[((f64, f64), (f64, f64))],
    ) -> Result<Self> {
        if circles.is_empty() {
            return Err(Error::Unrealizable("no circles".into()));
        }
        let nearest = |p: (f64, f64)| {
            (0..circles.len())
                .min_by(|&i, &j| {
                    let di = ((p.0 - circles[i].0).hypot(p.1 - circles[i].1) - circles[i].2).abs();
                    let dj = ((p.0 - circles[j].0).hypot(p.1 - circles[j].1) - circles[j].2).abs();
                    di.total_cmp(&dj)
                })
                .expect("nonempty")
        };
        let mut on: Vec<Vec<(f64, Slot)>> = vec![Vec::new(); circles.len()];
        for (h, &(p, q)) in chords.iter().enumerate() {
            for (a, b) in [(p, q), (q, p)] {
                let c = nearest(a);
                let (cx, cy, r) = circles[c];
                let angle = (a.1 - cy).atan2(a.0 - cx);
                // a point a little way along the chord decides the side
                let t = (a.0 + 0.05 * (b.0 - a.0), a.1 + 0.05 * (b.1 - a.1));
                let side = if (t.0 - cx).hypot(t.1 - cy) < r {
                    ChordSide::Left
                } else {
                    ChordSide::Right
                };
                on[c].push((angle, Slot { chord: h, side }));
            }
        }
        for v in &mut on {
            v.sort_by(|x, y| x.0.total_cmp(&y.0));
        }
        // the region just above the highest circle is unbounded
        let top = (0..circles.len())
            .max_by(|&i, &j| (circles[i].1 + circles[i].2).total_cmp(&(circles[j].1 + circles[j].2)))
            .expect("nonempty");
        let angles: Vec<f64> = on[top].iter().map(|x| x.0).collect();
        let up = std::f64::consts::FRAC_PI_2;
        let arc = if angles.is_empty() {
            0
        } else {
            // arc j runs from slot j to slot j+1 counterclockwise
            match angles.iter().rposition(|&a| a <= up) {
                Some(j) => j,
                None => angles.len() - 1,
            }
        };
        let slots: Vec<Vec<Slot>> = on.into_iter().map(|v| v.into_iter().map(|x| x.1).collect()).collect();
        let outer = FaceRef {
            circle: top,
            arc,
            side: ChordSide::Right,
        };
        Self::new(kind, slots, Some(outer))
    }

    pub fn to_json(&self) -> String {
        let j = SmoothingJson {
            kind: self.kind,
            circles: self.circles.clone(),
            chords: self.endpoints.iter().map(|&ends| ChordJson { ends }).collect(),
            nesting: self.parent.clone(),
            outer: self.outer,
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SmoothingJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let d = Self::new(j.kind, j.circles, Some(j.outer))?;
        let ends: Vec<[(usize, usize); 2]> = j.chords.iter().map(|c| c.ends).collect();
        if ends != d.endpoints || j.nesting != d.parent {
            return Err(Error::Parse("chords or nesting disagree with circles".into()));
        }
        Ok(d)
    }

    /// Multiset of circle pairs joined by chords, keyed by sorted pair.
    pub fn chord_pairs(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for [(a, _), (b, _)] in &self.endpoints {
            *m.entry((*a.min(b), *a.max(b))).or_insert(0) += 1;
        }
        m
    }
}
