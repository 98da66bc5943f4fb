//! Closed networks of local pieces, evaluated by a sweep over a vertex
//! order.
//!
//! Each vertex has numbered legs and expands as a sum of pairings of its
//! legs with integer-polynomial coefficients, divided by a vertex
//! denominator. Legs are glued pairwise. The sweep keeps, for the set of
//! processed vertices, a map from the pairing induced on the open legs
//! (the frontier) to its accumulated weight.

use std::collections::HashMap;
use std::sync::Arc;

use super::element::{loop_powers, ScaledElement};
use super::matching::catalan;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::laurent::{IntPoly, RationalFn};

/// Default cap on `Catalan(width / 2)`, the predicted number of frontier
/// states.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "SKEINTAIL_BUDGET";

pub fn default_budget() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug)]
pub enum VertexKind {
    /// A Kauffman crossing with legs in PD slot order.
    Crossing,
    /// A single fixed pairing of the legs.
    Fixed(Vec<u8>),
    /// A `TL_n` element with legs in matching point order.
    Element(Arc<ScaledElement>),
}

impl VertexKind {
    fn arity(&self) -> usize {
        match self {
            VertexKind::Crossing => 4,
            VertexKind::Fixed(p) => p.len(),
            VertexKind::Element(e) => 2 * e.n,
        }
    }

    fn expansion(&self) -> (Vec<(Vec<u8>, IntPoly)>, IntPoly) {
        match self {
            VertexKind::Crossing => (
                vec![
                    (vec![1, 0, 3, 2], IntPoly::monomial(1, 1)),
                    (vec![3, 2, 1, 0], IntPoly::monomial(1, -1)),
                ],
                IntPoly::one(),
            ),
            VertexKind::Fixed(p) => (vec![(p.clone(), IntPoly::one())], IntPoly::one()),
            VertexKind::Element(e) => (
                e.terms
                    .iter()
                    .map(|(m, c)| (m.partners().to_vec(), c.clone()))
                    .collect(),
                e.den.clone(),
            ),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Network {
    kinds: Vec<VertexKind>,
    first_leg: Vec<usize>,
    leg_vertex: Vec<usize>,
    link: Vec<Option<usize>>,
    free_loops: usize,
}

/// Cost summary of a planned sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepPlan {
    pub order: Vec<usize>,
    /// largest frontier size along the order
    pub width: usize,
    /// `Catalan(width / 2)`
    pub predicted_states: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub width: usize,
    pub max_states: usize,
}

impl Network {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex and returns the id of its first leg; its legs are
    /// consecutive.
    pub fn add_vertex(&mut self, kind: VertexKind) -> usize {
        let v = self.kinds.len();
        let first = self.leg_vertex.len();
        for _ in 0..kind.arity() {
            self.leg_vertex.push(v);
            self.link.push(None);
        }
        self.first_leg.push(first);
        self.kinds.push(kind);
        first
    }

    pub fn connect(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.link.len() || b >= self.link.len() || a == b {
            return Err(Error::InvalidArgument(format!("cannot connect legs {a} and {b}")));
        }
        if self.link[a].is_some() || self.link[b].is_some() {
            return Err(Error::InvalidArgument(format!("leg {a} or {b} already connected")));
        }
        self.link[a] = Some(b);
        self.link[b] = Some(a);
        Ok(())
    }

    pub fn add_free_loops(&mut self, k: usize) {
        self.free_loops += k;
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    /// The Kauffman-bracket network of a diagram.
    pub fn from_pd(d: &PlanarDiagram) -> Result<Self> {
        let mut net = Self::new();
        for _ in d.crossings() {
            net.add_vertex(VertexKind::Crossing);
        }
        for label in d.edge_labels() {
            match d.edge_ends(label) {
                Some(ends) => {
                    net.connect(4 * ends.tail.0 + ends.tail.1, 4 * ends.head.0 + ends.head.1)?
                }
                None => net.add_free_loops(1),
            }
        }
        Ok(net)
    }

    fn arity(&self, v: usize) -> usize {
        self.kinds[v].arity()
    }

    fn check_closed(&self) -> Result<()> {
        if let Some(l) = self.link.iter().position(|l| l.is_none()) {
            return Err(Error::InvalidDiagram(format!("leg {l} is not connected")));
        }
        Ok(())
    }

    fn greedy_order(&self, start: usize) -> (Vec<usize>, usize, usize) {
        let nv = self.kinds.len();
        let mut done = vec![false; nv];
        let mut order = Vec::with_capacity(nv);
        let mut frontier = 0usize;
        let (mut width, mut total) = (0usize, 0usize);
        // links[v]: number of legs of v glued to processed vertices
        let mut into = vec![0usize; nv];
        let self_links: Vec<usize> = (0..nv)
            .map(|w| {
                (self.first_leg[w]..self.first_leg[w] + self.arity(w))
                    .filter(|&l| self.link[l].map(|p| self.leg_vertex[p]) == Some(w))
                    .count()
            })
            .collect();
        let mut next = Some(start);
        while let Some(v) = next {
            done[v] = true;
            order.push(v);
            let first = self.first_leg[v];
            let mut opened = 0;
            for l in first..first + self.arity(v) {
                let p = self.link[l].expect("closed network");
                let w = self.leg_vertex[p];
                if w != v {
                    if done[w] {
                        continue;
                    }
                    into[w] += 1;
                    opened += 1;
                }
            }
            frontier = frontier + opened - into[v];
            width = width.max(frontier);
            total += frontier;
            next = (0..nv).filter(|&w| !done[w]).min_by_key(|&w| {
                let grow = (self.arity(w) - self_links[w]) as isize - 2 * into[w] as isize;
                (grow, usize::MAX - into[w], w)
            });
        }
        (order, width, total)
    }

    /// Chooses a vertex order by greedy growth from several starts.
    pub fn plan(&self) -> Result<SweepPlan> {
        self.check_closed()?;
        let nv = self.kinds.len();
        if nv == 0 {
            return Ok(SweepPlan {
                order: Vec::new(),
                width: 0,
                predicted_states: 1,
            });
        }
        let step = (nv / 48).max(1);
        let best = (0..nv)
            .step_by(step)
            .map(|s| self.greedy_order(s))
            .min_by_key(|(_, w, t)| (*w, *t))
            .expect("at least one start");
        Ok(SweepPlan {
            order: best.0,
            width: best.1,
            predicted_states: catalan(best.1 / 2),
        })
    }

    /// Evaluates with the default budget.
    pub fn evaluate(&self) -> Result<RationalFn> {
        self.evaluate_with_budget(default_budget()).map(|(v, _)| v)
    }

    /// Evaluates the network, refusing plans whose predicted state count
    /// exceeds `budget`.
    pub fn evaluate_with_budget(&self, budget: u128) -> Result<(RationalFn, SweepStats)> {
        let plan = self.plan()?;
        if plan.predicted_states > budget {
            return Err(Error::Resource(format!(
                "sweep needs cut width {} (about {} states), budget is {}",
                plan.width, plan.predicted_states, budget
            )));
        }
        let (num, stats) = self.sweep(&plan.order)?;
        let mut den = IntPoly::one();
        for k in &self.kinds {
            den = den.mul(&k.expansion().1)?;
        }
        let d = loop_powers(self.free_loops);
        let num = num.mul(&d[self.free_loops])?;
        Ok((RationalFn::new(num.to_laurent(), den.to_laurent())?, stats))
    }

    fn sweep(&self, order: &[usize]) -> Result<(IntPoly, SweepStats)> {
        let nlegs = self.link.len();
        let mut states: HashMap<Vec<u8>, IntPoly> = HashMap::new();
        states.insert(Vec::new(), IntPoly::one());
        let mut frontier: Vec<usize> = Vec::new();
        let mut processed = vec![false; self.kinds.len()];
        let mut stats = SweepStats::default();
        let max_arity = self.kinds.iter().map(|k| k.arity()).max().unwrap_or(0);
        let dpow = loop_powers(max_arity / 2 + 2);
        let mut fpos = vec![usize::MAX; nlegs];

        for &v in order {
            let (terms, _) = self.kinds[v].expansion();
            let first = self.first_leg[v];
            let k = self.arity(v);
            let f = frontier.len();
            for (i, &l) in frontier.iter().enumerate() {
                fpos[l] = i;
            }
            // gluing inside the combined node set: frontier 0..f, then v's legs
            let mut glue = vec![usize::MAX; f + k];
            for j in 0..k {
                let p = self.link[first + j].expect("closed network");
                let node = if self.leg_vertex[p] == v {
                    Some(f + (p - first))
                } else if processed[self.leg_vertex[p]] {
                    Some(fpos[p])
                } else {
                    None
                };
                if let Some(node) = node {
                    glue[f + j] = node;
                    glue[node] = f + j;
                }
            }
            let new_frontier: Vec<usize> = (0..f + k)
                .filter(|&x| glue[x] == usize::MAX)
                .collect();
            let mut new_index = vec![u8::MAX; f + k];
            for (i, &x) in new_frontier.iter().enumerate() {
                new_index[x] = i as u8;
            }
            let nf = new_frontier.len();
            stats.width = stats.width.max(nf);

            let mut next: HashMap<Vec<u8>, IntPoly> = HashMap::with_capacity(states.len());
            let mut seen = vec![false; f + k];
            for (pairing, val) in &states {
                let mut by_loops: Vec<Option<IntPoly>> = vec![None; dpow.len()];
                for (q, coef) in &terms {
                    let inner = |x: usize| {
                        if x < f {
                            pairing[x] as usize
                        } else {
                            f + q[x - f] as usize
                        }
                    };
                    seen.iter_mut().for_each(|s| *s = false);
                    let mut key = vec![0u8; nf];
                    for &s in &new_frontier {
                        if seen[s] {
                            continue;
                        }
                        let mut x = s;
                        loop {
                            seen[x] = true;
                            let y = inner(x);
                            seen[y] = true;
                            if glue[y] == usize::MAX {
                                key[new_index[s] as usize] = new_index[y];
                                key[new_index[y] as usize] = new_index[s];
                                break;
                            }
                            x = glue[y];
                        }
                    }
                    let mut loops = 0;
                    for s in 0..f + k {
                        if seen[s] {
                            continue;
                        }
                        loops += 1;
                        let mut x = s;
                        loop {
                            seen[x] = true;
                            let y = inner(x);
                            seen[y] = true;
                            x = glue[y];
                            if x == s {
                                break;
                            }
                        }
                    }
                    if loops >= by_loops.len() {
                        by_loops.resize(loops + 1, None);
                    }
                    if by_loops[loops].is_none() {
                        let dp = if loops < dpow.len() {
                            dpow[loops].clone()
                        } else {
                            loop_powers(loops).pop().expect("nonempty")
                        };
                        by_loops[loops] = Some(val.mul(&dp)?);
                    }
                    let scaled = by_loops[loops].as_ref().expect("just filled");
                    next.entry(key).or_default().add_product(scaled, coef)?;
                }
            }
            next.retain(|_, p| !p.is_zero());
            stats.max_states = stats.max_states.max(next.len());
            states = next;
            frontier = new_frontier
                .iter()
                .map(|&x| if x < f { frontier[x] } else { first + (x - f) })
                .collect();
            processed[v] = true;
        }
        if !frontier.is_empty() {
            return Err(Error::InvalidDiagram("network has open legs".into()));
        }
        Ok((states.remove(&Vec::new()).unwrap_or_default(), stats))
    }
}
