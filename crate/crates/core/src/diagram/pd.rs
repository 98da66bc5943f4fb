//! Planar diagram (PD) codes.
//!
//! A crossing is written `X[a,b,c,d]`: the four incident edges in
//! counterclockwise order, starting from the incoming under-strand. So the
//! under-strand runs `a -> c` and the over-strand joins `b` and `d`.
//! Crossingless components are written `Loop[k]`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A crossing position: `(crossing index, slot 0..4)`.
pub type Slot = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEnds {
    /// where the edge leaves a crossing
    pub tail: Slot,
    /// where the edge enters a crossing
    pub head: Slot,
}

#[derive(Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    loops: Vec<u32>,
    ends: BTreeMap<u32, EdgeEnds>,
    components: Vec<Vec<u32>>,
    signs: Vec<i8>,
}

impl PlanarDiagram {
    /// Validates the crossings and infers the orientation of every component.
    pub fn new(crossings: Vec<[u32; 4]>, loops: Vec<u32>) -> Result<Self> {
        let mut occ: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (x, tuple) in crossings.iter().enumerate() {
            for (p, &e) in tuple.iter().enumerate() {
                if e == 0 {
                    return Err(Error::InvalidDiagram("edge labels must be positive".into()));
                }
                occ.entry(e).or_default().push((x, p));
            }
        }
        for (e, slots) in &occ {
            if slots.len() != 2 {
                return Err(Error::InvalidDiagram(format!(
                    "edge {e} appears {} times, expected 2",
                    slots.len()
                )));
            }
        }
        let mut seen_loops = BTreeSet::new();
        for &l in &loops {
            if l == 0 || occ.contains_key(&l) || !seen_loops.insert(l) {
                return Err(Error::InvalidDiagram(format!("bad loop label {l}")));
            }
        }

        let label_at = |(x, p): Slot| crossings[x][p];
        let other = |e: u32, s: Slot| {
            let v = &occ[&e];
            if v[0] == s {
                v[1]
            } else {
                v[0]
            }
        };

        // Walk a component starting on edge `start`, entering through
        // `head`. Returns the oriented edge sequence with its ends.
        let walk = |start: u32, head: Slot| -> Vec<(u32, EdgeEnds)> {
            let mut out = Vec::new();
            let mut e = start;
            let mut h = head;
            loop {
                let t = other(e, h);
                out.push((e, EdgeEnds { tail: t, head: h }));
                let next_tail = (h.0, (h.1 + 2) % 4);
                let ne = label_at(next_tail);
                let nh = other(ne, next_tail);
                if ne == start && nh == head {
                    break;
                }
                e = ne;
                h = nh;
            }
            out
        };

        let consistent = |seq: &[(u32, EdgeEnds)]| {
            seq.iter()
                .all(|(_, ends)| ends.head.1 != 2 && ends.tail.1 != 0)
        };

        let mut ends = BTreeMap::new();
        let mut components = Vec::new();
        for &e in occ.keys() {
            if ends.contains_key(&e) {
                continue;
            }
            let [s0, s1] = [occ[&e][0], occ[&e][1]];
            let fwd = walk(e, s1);
            let bwd = walk(e, s0);
            let constrained = fwd.iter().any(|(_, en)| en.head.1 % 2 == 0 || en.tail.1 % 2 == 0);
            let chosen = if constrained {
                match (consistent(&fwd), consistent(&bwd)) {
                    (true, _) => fwd,
                    (false, true) => bwd,
                    (false, false) => {
                        return Err(Error::InvalidDiagram(format!(
                            "component through edge {e} has inconsistent orientation"
                        )))
                    }
                }
            } else {
                // lowest label first, then toward the smaller neighbour
                let f2 = fwd.get(1).map(|x| x.0).unwrap_or(e);
                let b2 = bwd.get(1).map(|x| x.0).unwrap_or(e);
                if b2 < f2 {
                    bwd
                } else {
                    fwd
                }
            };
            components.push(chosen.iter().map(|(l, _)| *l).collect());
            for (l, en) in chosen {
                ends.insert(l, en);
            }
        }

        let signs = crossings
            .iter()
            .enumerate()
            .map(|(x, t)| {
                let d = t[3];
                if ends[&d].head == (x, 3) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let mut components: Vec<Vec<u32>> = components;
        for &l in &loops {
            components.push(vec![l]);
        }
        components.sort_by_key(|c| c.iter().copied().min());

        Ok(Self {
            crossings,
            loops,
            ends,
            components,
            signs,
        })
    }

    /// The diagram with no components at all.
    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("empty diagram is valid")
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::new(Vec::new(), vec![1]).expect("unknot is valid")
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Labels of crossingless components.
    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    /// All edge labels in increasing order (crossing edges and loops).
    pub fn edge_labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.ends.keys().copied().chain(self.loops.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len() + self.loops.len()
    }

    pub fn max_label(&self) -> u32 {
        self.edge_labels().last().copied().unwrap_or(0)
    }

    /// Orientation of a crossing edge; `None` for loops and unknown labels.
    pub fn edge_ends(&self, label: u32) -> Option<EdgeEnds> {
        self.ends.get(&label).copied()
    }

    /// Components as oriented edge sequences, ordered by smallest label.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// `+1` or `-1` for each crossing.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i32 {
        self.signs.iter().map(|&s| s as i32).sum()
    }

    /// The mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        Self::new(crossings, self.loops.clone()).expect("mirror of a valid diagram is valid")
    }

    /// Adds `offset` to every edge label.
    pub fn relabel(&self, offset: u32) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|t| t.map(|e| e + offset))
            .collect();
        let loops = self.loops.iter().map(|l| l + offset).collect();
        Self::new(crossings, loops).expect("relabelling preserves validity")
    }

    /// Connected sum, cutting `edge1` of `self` and `edge2` of `other` and
    /// joining the ends. Labels of `other` are shifted past those of `self`.
    pub fn connected_sum(&self, other: &PlanarDiagram, edge1: u32, edge2: u32) -> Result<Self> {
        let valid = |d: &PlanarDiagram, e: u32| d.ends.contains_key(&e) || d.loops.contains(&e);
        if !valid(self, edge1) {
            return Err(Error::InvalidArgument(format!("edge {edge1} not in first diagram")));
        }
        if !valid(other, edge2) {
            return Err(Error::InvalidArgument(format!("edge {edge2} not in second diagram")));
        }
        let offset = self.max_label();
        let other = other.relabel(offset);
        let edge2 = edge2 + offset;

        // a crossingless component just disappears into the other summand
        if self.loops.contains(&edge1) {
            let mut loops: Vec<u32> = self.loops.iter().copied().filter(|&l| l != edge1).collect();
            if other.loops.contains(&edge2) {
                loops.push(edge2);
            }
            loops.extend(other.loops.iter().copied().filter(|&l| l != edge2));
            let mut crossings = self.crossings.clone();
            crossings.extend_from_slice(&other.crossings);
            return Self::new(crossings, loops);
        }
        if other.loops.contains(&edge2) {
            let mut loops = self.loops.clone();
            loops.extend(other.loops.iter().copied().filter(|&l| l != edge2));
            let mut crossings = self.crossings.clone();
            crossings.extend_from_slice(&other.crossings);
            return Self::new(crossings, loops);
        }

        let e1 = self.ends[&edge1];
        let e2 = other.ends[&edge2];
        let n1 = self.crossings.len();
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        // tail of edge1 now runs into the head of edge2, and vice versa
        crossings[n1 + e2.head.0][e2.head.1] = edge1;
        crossings[e1.head.0][e1.head.1] = edge2;
        let mut loops = self.loops.clone();
        loops.extend_from_slice(&other.loops);
        Self::new(crossings, loops)
    }

    /// Canonical text: `X[..], X[..], Loop[..]`.
    pub fn to_pd_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        parts.extend(self.loops.iter().map(|l| format!("Loop[{l}]")));
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[{self}]")
    }
}

/// Parses `X[1,4,2,5], X[3,6,4,1], ...`, optionally wrapped in `PD[...]`.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let mut s = text.trim();
    if let Some(inner) = s.strip_prefix("PD[") {
        s = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse("unterminated PD[".into()))?
            .trim();
    }
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start().trim_start_matches(',').trim_start();
        if rest.is_empty() {
            break;
        }
        let open = rest
            .find('[')
            .ok_or_else(|| Error::Parse(format!("expected `X[` near `{rest}`")))?;
        let head = rest[..open].trim();
        let close = rest
            .find(']')
            .ok_or_else(|| Error::Parse("missing `]`".into()))?;
        if close < open {
            return Err(Error::Parse(format!("malformed term near `{rest}`")));
        }
        let body = &rest[open + 1..close];
        let labels = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad edge label `{}`", t.trim())))
            })
            .collect::<Result<Vec<u32>>>()?;
        match head {
            "X" => {
                let arr: [u32; 4] = labels.as_slice().try_into().map_err(|_| {
                    Error::Parse(format!("crossing needs 4 labels, got {}", labels.len()))
                })?;
                crossings.push(arr);
            }
            "Loop" | "O" => {
                if labels.len() != 1 {
                    return Err(Error::Parse("Loop takes one label".into()));
                }
                loops.push(labels[0]);
            }
            other => return Err(Error::Parse(format!("unknown term `{other}`"))),
        }
        rest = &rest[close + 1..];
    }
    PlanarDiagram::new(crossings, loops)
}

impl FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}
