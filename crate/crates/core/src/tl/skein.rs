//! Crossingless skein diagrams: coloured arcs joining Jones-Wenzl boxes
//! and fixed tangles.
//!
//! A node of width `w` has ports `0..w` on its bottom and on its top, both
//! numbered left to right. An arc of colour `c` starting at offset `o`
//! occupies ports `o..o+c` of its side. Strands of an arc reverse
//! counterclockwise boundary order: between opposite sides offset `o1+i`
//! meets `o2+i`, between equal sides it meets `o2+c-1-i`.

use serde::{Deserialize, Serialize};

use super::jw::jones_wenzl_scaled;
use super::matching::Matching;
use super::network::{default_budget, Network, VertexKind};
use crate::error::{Error, Result};
use crate::laurent::RationalFn;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    Idempotent { size: usize },
    Tangle { matching: Matching },
}

impl Node {
    pub fn width(&self) -> usize {
        match self {
            Node::Idempotent { size } => *size,
            Node::Tangle { matching } => matching.n(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Bottom,
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Port {
    pub node: usize,
    pub side: Side,
    pub offset: usize,
}

impl Port {
    pub fn new(node: usize, side: Side, offset: usize) -> Self {
        Self { node, side, offset }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinArc {
    pub from: Port,
    pub to: Port,
    pub colour: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinDiagram {
    pub nodes: Vec<Node>,
    pub arcs: Vec<SkeinArc>,
    /// colours of closed circles that meet no node
    #[serde(default)]
    pub free_circles: Vec<usize>,
}

/// Outcome of comparing `d(S)` with `d(S-bar)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    /// `None` when the diagram evaluates to zero
    pub degree: Option<i32>,
    pub bar_circles: usize,
    pub bar_degree: i32,
    pub adequate: bool,
    pub inequality_holds: Option<bool>,
    /// checked only for adequate diagrams
    pub equality_holds: Option<bool>,
}

/// One layer of a stacked diagram on `m` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Layer {
    /// an idempotent of `size` strands starting at position `pos`
    Box { pos: usize, size: usize },
    /// the hook `e_i` joining positions `i-1` and `i`
    Hook { i: usize },
}

/// A strand end: node and point in matching numbering.
type End = (usize, usize);

impl SkeinDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn add_arc(&mut self, from: Port, to: Port, colour: usize) {
        self.arcs.push(SkeinArc { from, to, colour });
    }

    /// A circle of colour `n` through one idempotent.
    pub fn coloured_circle(n: usize) -> Self {
        let mut s = Self::new();
        if n == 0 {
            return s;
        }
        let b = s.add_node(Node::Idempotent { size: n });
        s.add_arc(Port::new(b, Side::Top, 0), Port::new(b, Side::Bottom, 0), n);
        s
    }

    /// Places `other` beside `self`.
    pub fn disjoint_union(&self, other: &SkeinDiagram) -> Self {
        let k = self.nodes.len();
        let mut out = self.clone();
        out.nodes.extend(other.nodes.iter().cloned());
        let shift = |p: Port| Port::new(p.node + k, p.side, p.offset);
        out.arcs.extend(other.arcs.iter().map(|a| SkeinArc {
            from: shift(a.from),
            to: shift(a.to),
            colour: a.colour,
        }));
        out.free_circles.extend_from_slice(&other.free_circles);
        out
    }

    fn point(&self, p: Port) -> usize {
        match p.side {
            Side::Bottom => p.offset,
            Side::Top => self.nodes[p.node].width() + p.offset,
        }
    }

    /// Strand-level gluing; fails unless every port is used exactly once.
    fn strand_links(&self) -> Result<Vec<(End, End)>> {
        let mut used: Vec<Vec<bool>> = self
            .nodes
            .iter()
            .map(|n| vec![false; 2 * n.width()])
            .collect();
        let mut out = Vec::new();
        for a in &self.arcs {
            if a.colour == 0 {
                return Err(Error::InvalidDiagram("arc of colour 0".into()));
            }
            for p in [a.from, a.to] {
                if p.node >= self.nodes.len() || p.offset + a.colour > self.nodes[p.node].width()
                {
                    return Err(Error::InvalidDiagram(format!("arc port {p:?} out of range")));
                }
            }
            let same = a.from.side == a.to.side;
            for i in 0..a.colour {
                let j = if same { a.colour - 1 - i } else { i };
                let e1 = (a.from.node, self.point(Port { offset: a.from.offset + i, ..a.from }));
                let e2 = (a.to.node, self.point(Port { offset: a.to.offset + j, ..a.to }));
                for (node, pt) in [e1, e2] {
                    if std::mem::replace(&mut used[node][pt], true) {
                        return Err(Error::InvalidDiagram(format!(
                            "port {pt} of node {node} used twice"
                        )));
                    }
                }
                out.push((e1, e2));
            }
        }
        if used.iter().flatten().any(|u| !u) {
            return Err(Error::InvalidDiagram("diagram is not closed".into()));
        }
        Ok(out)
    }

    fn to_network(&self, bar: bool) -> Result<Network> {
        let links = self.strand_links()?;
        let mut net = Network::new();
        let mut first = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let kind = match node {
                Node::Idempotent { size } if !bar && *size > 1 => {
                    VertexKind::Element(jones_wenzl_scaled(*size)?)
                }
                Node::Idempotent { size } => {
                    VertexKind::Fixed(Matching::identity(*size).partners().to_vec())
                }
                Node::Tangle { matching } => VertexKind::Fixed(matching.partners().to_vec()),
            };
            first.push(net.add_vertex(kind));
        }
        for ((n1, p1), (n2, p2)) in links {
            net.connect(first[n1] + p1, first[n2] + p2)?;
        }
        net.add_free_loops(self.free_circles.iter().sum());
        Ok(net)
    }

    /// Value in Q(A), idempotents expanded.
    pub fn evaluate_closed(&self) -> Result<RationalFn> {
        self.evaluate_with_budget(default_budget())
    }

    pub fn evaluate_with_budget(&self, budget: u128) -> Result<RationalFn> {
        Ok(self.to_network(false)?.evaluate_with_budget(budget)?.0)
    }

    /// Circles of S-bar, each listed as the idempotent nodes it passes
    /// through (with repetition).
    fn bar_circle_visits(&self) -> Result<Vec<Vec<usize>>> {
        let links = self.strand_links()?;
        let mut other_end: Vec<Vec<End>> = self
            .nodes
            .iter()
            .map(|n| vec![(usize::MAX, 0); 2 * n.width()])
            .collect();
        for (e1, e2) in links {
            other_end[e1.0][e1.1] = e2;
            other_end[e2.0][e2.1] = e1;
        }
        let inner = |node: usize, pt: usize| -> usize {
            match &self.nodes[node] {
                Node::Idempotent { size } => (pt + size) % (2 * size),
                Node::Tangle { matching } => matching.partner(pt),
            }
        };
        let mut seen: Vec<Vec<bool>> = self
            .nodes
            .iter()
            .map(|n| vec![false; 2 * n.width()])
            .collect();
        let mut circles = Vec::new();
        for node in 0..self.nodes.len() {
            for pt in 0..2 * self.nodes[node].width() {
                if seen[node][pt] {
                    continue;
                }
                let mut visits = Vec::new();
                let (mut x, mut p) = (node, pt);
                loop {
                    seen[x][p] = true;
                    let q = inner(x, p);
                    seen[x][q] = true;
                    if matches!(self.nodes[x], Node::Idempotent { .. }) {
                        visits.push(x);
                    }
                    let (y, r) = other_end[x][q];
                    if (y, r) == (node, pt) {
                        break;
                    }
                    x = y;
                    p = r;
                }
                circles.push(visits);
            }
        }
        for &c in &self.free_circles {
            circles.extend(std::iter::repeat(Vec::new()).take(c));
        }
        Ok(circles)
    }

    /// Circle count of the diagram with every idempotent replaced by the
    /// identity.
    pub fn bar_diagram(&self) -> Result<usize> {
        Ok(self.bar_circle_visits()?.len())
    }

    /// True iff no circle of S-bar passes through one idempotent twice.
    pub fn is_adequate_skein(&self) -> Result<bool> {
        Ok(self.bar_circle_visits()?.iter().all(|v| {
            let mut v = v.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        }))
    }

    pub fn check_degree_lemma(&self) -> Result<DegreeReport> {
        let value = self.evaluate_closed()?;
        let bar_circles = self.bar_diagram()?;
        let adequate = self.is_adequate_skein()?;
        let bar_degree = -2 * bar_circles as i32;
        let degree = (!value.is_zero()).then(|| value.min_degree()).transpose()?;
        Ok(DegreeReport {
            degree,
            bar_circles,
            bar_degree,
            adequate,
            inequality_holds: degree.map(|d| d >= bar_degree),
            equality_holds: if adequate {
                degree.map(|d| d == bar_degree)
            } else {
                None
            },
        })
    }

    /// Stacks `layers` bottom to top on `m` strands and closes the
    /// `2m` boundary points with the outside matching `closure`.
    pub fn from_layers(m: usize, layers: &[Layer], closure: &Matching) -> Result<Self> {
        if closure.n() != m {
            return Err(Error::InvalidArgument("closure must live on the same strands".into()));
        }
        let mut s = Self::new();
        let mut start: Vec<Option<Port>> = vec![None; m];
        let mut current: Vec<Option<Port>> = vec![None; m];
        for layer in layers {
            let (pos, node) = match *layer {
                Layer::Box { pos, size } => (pos, Node::Idempotent { size }),
                Layer::Hook { i } => {
                    if i == 0 {
                        return Err(Error::InvalidArgument("hooks are numbered from 1".into()));
                    }
                    (i - 1, Node::Tangle { matching: Matching::e(2, 1)? })
                }
            };
            let w = node.width();
            if w == 0 || pos + w > m {
                return Err(Error::InvalidArgument(format!("layer {layer:?} out of range")));
            }
            let id = s.add_node(node);
            for j in 0..w {
                let bottom = Port::new(id, Side::Bottom, j);
                match current[pos + j] {
                    Some(p) => s.add_arc(p, bottom, 1),
                    None => start[pos + j] = Some(bottom),
                }
                current[pos + j] = Some(Port::new(id, Side::Top, j));
            }
        }
        // boundary point b < m is bottom b, m + t is top t
        let port_of = |x: usize| if x < m { start[x] } else { current[x - m] };
        let wire = |x: usize| if x < m { x + m } else { x - m };
        let mut seen = vec![false; 2 * m];
        for x in 0..2 * m {
            if seen[x] || port_of(x).is_none() {
                continue;
            }
            seen[x] = true;
            let mut y = closure.partner(x);
            loop {
                seen[y] = true;
                if let Some(p) = port_of(y) {
                    s.add_arc(port_of(x).expect("checked"), p, 1);
                    break;
                }
                let z = wire(y);
                seen[z] = true;
                y = closure.partner(z);
            }
        }
        for x in 0..2 * m {
            if seen[x] {
                continue;
            }
            // a closed circle of bare wires
            let mut y = x;
            loop {
                seen[y] = true;
                let z = wire(y);
                seen[z] = true;
                y = closure.partner(z);
                if y == x {
                    break;
                }
            }
            s.free_circles.push(1);
        }
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        s.strand_links()?;
        Ok(s)
    }
}
