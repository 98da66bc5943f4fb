//! States of link diagrams, recovery of links from states, and the local
//! move that preserves tails.

use std::collections::BTreeMap;

use super::graph::{ReducedGraph, StateGraph};
use super::smoothing::{ChordSide, FaceRef, Slot, SmoothingDiagram, StateKind};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// Slot joined to `p` by the smoothing of the given kind.
fn smoothing_partner(kind: StateKind, p: usize) -> usize {
    match kind {
        StateKind::A => p ^ 1,
        StateKind::B => 3 - p,
    }
}

fn occurrences(d: &PlanarDiagram) -> BTreeMap<u32, Vec<(usize, usize)>> {
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, t) in d.crossings().iter().enumerate() {
        for (p, &e) in t.iter().enumerate() {
            occ.entry(e).or_default().push((x, p));
        }
    }
    occ
}

/// Circles of the all-`kind` state as slot lists; also returns, for each
/// circle, the edge labels of its arcs.
fn trace_state(d: &PlanarDiagram, kind: StateKind) -> (Vec<Vec<Slot>>, Vec<Vec<u32>>) {
    let occ = occurrences(d);
    let mut visited = vec![[false; 4]; d.num_crossings()];
    let mut circles = Vec::new();
    let mut arcs = Vec::new();
    for (_, ends) in &occ {
        let start = ends[0];
        if visited[start.0][start.1] {
            continue;
        }
        let (mut slots, mut labels) = (Vec::new(), Vec::new());
        let (mut x, mut p) = start;
        loop {
            let q = smoothing_partner(kind, p);
            visited[x][p] = true;
            visited[x][q] = true;
            let side = if q == (p + 1) % 4 {
                ChordSide::Left
            } else {
                ChordSide::Right
            };
            slots.push(Slot { chord: x, side });
            let e = d.crossings()[x][q];
            labels.push(e);
            let o = &occ[&e];
            let next = if o[0] == (x, q) { o[1] } else { o[0] };
            if next == start {
                break;
            }
            (x, p) = next;
        }
        circles.push(slots);
        arcs.push(labels);
    }
    (circles, arcs)
}

/// The all-A or all-B smoothing diagram. Chord `i` is crossing `i`.
pub fn all_state(d: &PlanarDiagram, kind: StateKind) -> Result<SmoothingDiagram> {
    if d.num_crossings() == 0 {
        if d.num_components() == 1 {
            return SmoothingDiagram::new(kind, vec![Vec::new()], None);
        }
        return Err(Error::Unrealizable("split diagram".into()));
    }
    if !d.loops().is_empty() {
        return Err(Error::Unrealizable("split diagram".into()));
    }
    let (circles, _) = trace_state(d, kind);
    SmoothingDiagram::new(kind, circles, None)
}

/// State graph straight from the diagram; works for split diagrams too.
pub fn diagram_state_graph(d: &PlanarDiagram, kind: StateKind) -> StateGraph {
    let (circles, _) = trace_state(d, kind);
    let mut at = vec![Vec::new(); d.num_crossings()];
    for (c, slots) in circles.iter().enumerate() {
        for s in slots {
            at[s.chord].push(c);
        }
    }
    StateGraph {
        vertices: circles.len() + d.loops().len(),
        edges: at.into_iter().map(|v| (v[0], v[1])).collect(),
    }
}

pub fn state_graph(s: &SmoothingDiagram) -> StateGraph {
    StateGraph {
        vertices: s.num_circles(),
        edges: (0..s.num_chords()).map(|h| s.chord_circles(h)).collect(),
    }
}

pub fn is_adequate(d: &PlanarDiagram, kind: StateKind) -> bool {
    !diagram_state_graph(d, kind).has_loop()
}

/// Reduced all-A graph of an A-adequate diagram.
pub fn reduced_a_graph(d: &PlanarDiagram) -> Result<ReducedGraph> {
    diagram_state_graph(d, StateKind::A)
        .reduce()
        .map_err(|_| Error::NotAdequate("diagram is not A-adequate".into()))
}

/// True iff the reduced all-A graph is a tree.
pub fn is_fibered_criterion(d: &PlanarDiagram) -> Result<bool> {
    Ok(reduced_a_graph(d)?.is_tree())
}

/// `β_A`: cycle rank of the reduced all-A graph.
pub fn beta_a(d: &PlanarDiagram) -> Result<usize> {
    Ok(reduced_a_graph(d)?.cycle_rank())
}

fn other_circle(s: &SmoothingDiagram, chord: usize, circle: usize) -> usize {
    let (a, b) = s.chord_circles(chord);
    if a == circle {
        b
    } else {
        a
    }
}

/// Exchanges slots `j` and `j+1` of `circle`. The two chords must leave on
/// opposite sides and end on two further circles.
pub fn swap_adjacent(s: &SmoothingDiagram, circle: usize, j: usize) -> Result<SmoothingDiagram> {
    let slots = s
        .circles()
        .get(circle)
        .ok_or_else(|| Error::InvalidMove(format!("no circle {circle}")))?;
    let k = slots.len();
    if k < 2 || j >= k {
        return Err(Error::InvalidMove(format!("no slot pair at {j} on circle {circle}")));
    }
    let (u, v) = (slots[j], slots[(j + 1) % k]);
    if u.side == v.side {
        return Err(Error::InvalidMove("chords leave on the same side".into()));
    }
    let (l, r) = (other_circle(s, u.chord, circle), other_circle(s, v.chord, circle));
    if l == circle || r == circle || l == r {
        return Err(Error::InvalidMove(
            "chord ends must lie on three distinct circles".into(),
        ));
    }
    let mut circles = s.circles().to_vec();
    circles[circle].swap(j, (j + 1) % k);
    // keep the outer face, named through an arc the swap does not touch
    let touched = |r: &FaceRef| {
        r.circle == circle && (r.arc + 1) % k == j || r.circle == circle && r.arc == j
            || r.circle == circle && r.arc == (j + 1) % k
    };
    let outer = s
        .face_refs(s.face(s.outer()))
        .into_iter()
        .find(|r| !touched(r));
    SmoothingDiagram::new(s.kind(), circles, outer)
}

/// Slides the endpoint of `chord` on circle `target.0` to slot position
/// `target.1`, one neighbour at a time, going round the circle in
/// whichever direction admits every swap.
pub fn main_theorem_move(
    s: &SmoothingDiagram,
    chord: usize,
    target: (usize, usize),
) -> Result<SmoothingDiagram> {
    let (m, t) = target;
    if chord >= s.num_chords() {
        return Err(Error::InvalidMove(format!("no chord {chord}")));
    }
    let [e0, e1] = s.chord_ends(chord);
    let pos = if e0.0 == m {
        e0.1
    } else if e1.0 == m {
        e1.1
    } else {
        return Err(Error::InvalidMove(format!("chord {chord} does not touch circle {m}")));
    };
    let k = s.circles()[m].len();
    if t >= k {
        return Err(Error::InvalidMove(format!("slot {t} out of range")));
    }
    let walk = |steps: usize, forward: bool| -> Result<SmoothingDiagram> {
        let mut cur = s.clone();
        let mut p = pos;
        for _ in 0..steps {
            if forward {
                cur = swap_adjacent(&cur, m, p)?;
                p = (p + 1) % k;
            } else {
                p = (p + k - 1) % k;
                cur = swap_adjacent(&cur, m, p)?;
            }
        }
        Ok(cur)
    };
    let (fwd, bwd) = ((t + k - pos) % k, (pos + k - t) % k);
    // the shorter way round first, then the other
    let cur = if fwd <= bwd {
        walk(fwd, true).or_else(|e| walk(bwd, false).map_err(|_| e))?
    } else {
        walk(bwd, false).or_else(|e| walk(fwd, true).map_err(|_| e))?
    };
    if !cur.is_adequate() {
        return Err(Error::InvalidMove("move breaks adequacy".into()));
    }
    Ok(cur)
}

/// A link diagram whose all-`kind` state is `s`.
pub fn recover_link(s: &SmoothingDiagram, kind: StateKind) -> Result<PlanarDiagram> {
    if s.num_chords() == 0 {
        return PlanarDiagram::new(Vec::new(), vec![1]);
    }
    let mut arc_id = Vec::new();
    let mut next = 1u32;
    for slots in s.circles() {
        arc_id.push((0..slots.len()).map(|_| {
            next += 1;
            next - 1
        }).collect::<Vec<u32>>());
    }
    // arcs meeting a chord end, as (first, second) in counterclockwise order
    let ends = |c: usize, j: usize| {
        let k = s.circles()[c].len();
        let (prev, nxt) = (arc_id[c][(j + k - 1) % k], arc_id[c][j]);
        match s.circles()[c][j].side {
            ChordSide::Left => (prev, nxt),
            ChordSide::Right => (nxt, prev),
        }
    };
    let mut tuples: Vec<[u32; 4]> = (0..s.num_chords())
        .map(|h| {
            let [q, p] = s.chord_ends(h);
            let (lq, rq) = ends(q.0, q.1);
            let (lp, rp) = ends(p.0, p.1);
            [lq, rq, lp, rp]
        })
        .collect();

    // orient every component and label its edges consecutively
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, t) in tuples.iter().enumerate() {
        for (p, &e) in t.iter().enumerate() {
            occ.entry(e).or_default().push((x, p));
        }
    }
    let mut new_label: BTreeMap<u32, u32> = BTreeMap::new();
    let mut rotate = vec![false; tuples.len()];
    let mut label = 1u32;
    for (&e, o) in &occ {
        if new_label.contains_key(&e) {
            continue;
        }
        // walk leaving through o[0] towards o[1]
        let mut cur_e = e;
        let mut at = o[1];
        loop {
            new_label.insert(cur_e, label);
            label += 1;
            let (x, p) = at;
            if p == 2 {
                rotate[x] = true;
            }
            let q = (x, (p + 2) % 4);
            cur_e = tuples[q.0][q.1];
            if new_label.contains_key(&cur_e) {
                break;
            }
            let oo = &occ[&cur_e];
            at = if oo[0] == q { oo[1] } else { oo[0] };
        }
    }
    for (x, t) in tuples.iter_mut().enumerate() {
        *t = t.map(|e| new_label[&e]);
        if rotate[x] {
            t.rotate_left(2);
        }
    }
    let d = PlanarDiagram::new(tuples, Vec::new())?;
    Ok(match kind {
        StateKind::A => d,
        StateKind::B => d.mirror(),
    })
}

/// Splits an A-adequate state at its two-sided circles until every circle
/// has chords on one side only. Each split first gathers the inside chords
/// of the chosen circle into one block by local moves.
pub fn decompose(s: &SmoothingDiagram) -> Result<Vec<SmoothingDiagram>> {
    if !s.is_adequate() {
        return Err(Error::NotAdequate("state has a chord on a single circle".into()));
    }
    let mut work = vec![s.clone()];
    let mut out = Vec::new();
    while let Some(p) = work.pop() {
        let two = p.two_sided_circles();
        let Some(&m) = two.iter().max_by_key(|&&c| (p.depth(c), std::cmp::Reverse(c))) else {
            out.push(p);
            continue;
        };
        let p = gather_inside(&p, m)?;
        let (a, b) = split_at(&p, m)?;
        work.push(b);
        work.push(a);
    }
    Ok(out)
}

/// Makes the inside slots of circle `m` consecutive.
fn gather_inside(s: &SmoothingDiagram, m: usize) -> Result<SmoothingDiagram> {
    let mut cur = s.clone();
    let k = cur.circles()[m].len();
    let inside = |d: &SmoothingDiagram, j: usize| d.is_inside_slot(m, j % k);
    let i0 = (0..k)
        .find(|&j| inside(&cur, j) && !inside(&cur, j + k - 1))
        .expect("two-sided circle has a block start");
    let mut block = 1;
    for t in 1..k {
        let idx = i0 + t;
        if !inside(&cur, idx) {
            continue;
        }
        let mut at = idx;
        while at > i0 + block {
            cur = swap_adjacent(&cur, m, (at - 1) % k)?;
            at -= 1;
        }
        block += 1;
    }
    Ok(cur)
}

/// Cuts a circle with consecutive inside slots into the inside piece and
/// the outside piece.
fn split_at(s: &SmoothingDiagram, m: usize) -> Result<(SmoothingDiagram, SmoothingDiagram)> {
    let nc = s.num_circles();
    let inner: Vec<bool> = (0..nc).map(|c| c == m || s.contains(m, c)).collect();
    let outer: Vec<bool> = (0..nc).map(|c| c == m || !s.contains(m, c)).collect();
    Ok((restrict(s, &inner)?, restrict(s, &outer)?))
}

fn restrict(s: &SmoothingDiagram, keep: &[bool]) -> Result<SmoothingDiagram> {
    let mut chord_map = BTreeMap::new();
    for h in 0..s.num_chords() {
        let (a, b) = s.chord_circles(h);
        if keep[a] && keep[b] {
            let id = chord_map.len();
            chord_map.insert(h, id);
        }
    }
    let circles = s
        .circles()
        .iter()
        .enumerate()
        .filter(|(c, _)| keep[*c])
        .map(|(_, slots)| {
            slots
                .iter()
                .filter_map(|x| chord_map.get(&x.chord).map(|&chord| Slot { chord, side: x.side }))
                .collect()
        })
        .collect();
    SmoothingDiagram::new(s.kind(), circles, None)
}

/// Reduced graphs of the pieces of [`decompose`], each further cut into its
/// 2-connected blocks.
pub fn tail_normal_form(s: &SmoothingDiagram) -> Result<Vec<ReducedGraph>> {
    let mut out = Vec::new();
    for p in decompose(s)? {
        out.extend(state_graph(&p).reduce()?.blocks());
    }
    Ok(out)
}
