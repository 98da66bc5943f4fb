//! Independent oracles shared by the integration tests. Nothing here goes
//! through the sweep, the Temperley-Lieb code or the cable networks.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::Rng;
use skeintail::cli::Corpus;
use skeintail::diagram::PlanarDiagram;
use skeintail::laurent::LaurentPoly;
use skeintail::tl::{Layer, Matching, SkeinDiagram};

pub fn corpus() -> Corpus {
    Corpus::builtin()
}

pub fn knot(name: &str) -> PlanarDiagram {
    corpus().diagram(name).unwrap().clone()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Ends of an edge: the two `(crossing, slot)` positions where it appears.
fn positions(crossings: &[[u32; 4]]) -> HashMap<u32, Vec<usize>> {
    let mut at: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, x) in crossings.iter().enumerate() {
        for (k, &e) in x.iter().enumerate() {
            at.entry(e).or_default().push(4 * i + k);
        }
    }
    at
}

/// `sum over states of A^(#A - #B) d^circles`, with `d = -A^2 - A^-2`.
/// Edge ends are glued as listed in `glue`; `extra_circles` closed loops are
/// added. A-smoothing joins slots (0,1),(2,3); B joins (0,3),(1,2).
pub fn state_sum(crossings: &[[u32; 4]], glue: &[(usize, usize)], extra_circles: usize) -> LaurentPoly {
    let c = crossings.len();
    assert!(c <= 24, "state sum oracle limited to 24 crossings");
    // weight by (a-count, circle count)
    let mut counts: HashMap<(i32, usize), i64> = HashMap::new();
    for mask in 0u64..(1u64 << c) {
        let mut dsu = Dsu::new(4 * c);
        for &(a, b) in glue {
            dsu.union(a, b);
        }
        let mut a_count = 0i32;
        for i in 0..c {
            let base = 4 * i;
            if mask >> i & 1 == 0 {
                a_count += 1;
                dsu.union(base, base + 1);
                dsu.union(base + 2, base + 3);
            } else {
                dsu.union(base, base + 3);
                dsu.union(base + 1, base + 2);
            }
        }
        let circles = (0..4 * c).filter(|&x| dsu.find(x) == x).count();
        *counts.entry((a_count - (c as i32 - a_count), circles)).or_default() += 1;
    }
    let d = LaurentPoly::from_int_terms(&[(2, -1), (-2, -1)]);
    let mut total = LaurentPoly::zero();
    for ((e, circles), k) in counts {
        let term = &LaurentPoly::int_monomial(k, e) * &d.pow((circles + extra_circles) as u32);
        total = &total + &term;
    }
    total
}

/// Every edge glued end to end.
pub fn standard_glue(crossings: &[[u32; 4]]) -> Vec<(usize, usize)> {
    positions(crossings)
        .into_values()
        .map(|v| {
            assert_eq!(v.len(), 2, "every edge has two ends");
            (v[0], v[1])
        })
        .collect()
}

/// Skein value of a diagram: unknot `d`, empty diagram `1`.
pub fn skein_bracket(d: &PlanarDiagram) -> LaurentPoly {
    state_sum(d.crossings(), &standard_glue(d.crossings()), d.loops().len())
}

/// `J_2` from the plain bracket: `(-A^3)^(-w) <D>` with `<unknot> = 1`,
/// written in `A` (`q = A^-4`).
pub fn jones_oracle(d: &PlanarDiagram) -> LaurentPoly {
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let b = skein_bracket(d);
    let d_loop = LaurentPoly::from_int_terms(&[(2, -1), (-2, -1)]);
    let unit = b.div_exact(&d_loop).expect("bracket divisible by the loop value");
    &unit * &LaurentPoly::int_monomial(sign, -3 * w)
}

/// `prod_k (q^(N+k)/2 - q^-(N+k)/2)(q^(N-k)/2 - q^-(N-k)/2)` summed over
/// `n < N`: the cyclotomic expansion of the figure-eight knot, in `A`.
pub fn figure_eight_closed_form(big_n: i32) -> LaurentPoly {
    // q^m = A^(-4m); {m}{m'} = q^((m+m')/2) + q^(-(m+m')/2) - q^((m-m')/2) - q^(-(m-m')/2)
    let mut total = LaurentPoly::zero();
    let mut prod = LaurentPoly::one();
    for n in 0..big_n {
        if n > 0 {
            let k = n;
            let factor = LaurentPoly::from_int_terms(&[
                (-4 * big_n, 1),
                (4 * big_n, 1),
                (-4 * k, -1),
                (4 * k, -1),
            ]);
            prod = &prod * &factor;
        }
        total = &total + &prod;
    }
    total
}

/// Plane coordinates of the all-A state of mirror 10_154: circles as
/// `(x, y, r)` and chords as segments between circle points.
pub const CIRCLES_10_154M: [(f64, f64, f64); 5] = [
    (0.0, 0.0, 2.0),
    (0.8, 0.0, 0.6),
    (-1.0, 0.0, 0.4),
    (-3.5, 1.3, 0.7),
    (-3.5, -1.3, 0.7),
];

pub const CHORDS_10_154M: [((f64, f64), (f64, f64)); 10] = [
    ((-0.9, 1.8), (-3.0, 1.8)),
    ((-1.35, 1.5), (-2.8, 1.5)),
    ((-1.35, -1.5), (-2.8, -1.5)),
    ((-3.5, -0.6), (-3.5, 0.6)),
    ((0.2, 0.0), (-0.6, 0.0)),
    ((-1.4, 0.0), (-2.0, 0.0)),
    ((-3.35, 0.55), (-1.4, -1.45)),
    ((0.22, -0.1), (-1.64, -0.8)),
    ((1.5, 0.2), (1.95, 0.2)),
    ((1.5, -0.2), (1.95, -0.2)),
];

/// The same state after sliding the inner chords of the outer circle to
/// its right-hand arc.
pub fn chords_10_154m_moved() -> [((f64, f64), (f64, f64)); 10] {
    let mut c = CHORDS_10_154M;
    c[5] = ((-0.6, -0.3), (1.6, -1.2));
    c[7] = ((1.32, -0.3), (1.97, -0.3));
    c[8] = ((1.32, 0.3), (1.97, 0.3));
    c[9] = ((1.4, 0.0), (2.0, 0.0));
    c
}

/// Random box-and-hook stacks on up to six strands, closed by a random
/// planar matching.
pub fn random_skein(rng: &mut StdRng) -> SkeinDiagram {
    loop {
        let m = rng.gen_range(2..=6);
        let layers: Vec<Layer> = (0..rng.gen_range(1..=4))
            .map(|_| {
                if rng.gen_bool(0.2) {
                    Layer::Hook { i: rng.gen_range(1..m) }
                } else {
                    let size = rng.gen_range(2..=m.min(4));
                    Layer::Box { pos: rng.gen_range(0..=m - size), size }
                }
            })
            .collect();
        let closures = Matching::enumerate(m);
        let closure = &closures[rng.gen_range(0..closures.len())];
        if let Ok(s) = SkeinDiagram::from_layers(m, &layers, closure) {
            return s;
        }
    }
}

