//! Colored Jones polynomials through cabling and Jones-Wenzl decoration.
//!
//! All arithmetic happens in `A`; the reduced polynomial is read in
//! `q = A^-4`, with exponents kept in quarter units.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::{cable, CablePattern, PlanarDiagram};
use crate::error::{Error, Result};
use crate::laurent::{delta_poly, dot_eq_n, LaurentPoly, RationalFn, TruncatedSeries};
use crate::states::{is_adequate, StateKind};
use crate::tl::{
    default_budget, jones_wenzl_scaled, Network, Node, Port, Side, SkeinDiagram, VertexKind, N_MAX,
};

/// The bracket network of an n-cable with one idempotent per component.
pub fn cable_network(p: &CablePattern) -> Result<Network> {
    let n = p.width;
    let d = &p.cabled;
    let mut net = Network::new();
    for _ in d.crossings() {
        net.add_vertex(VertexKind::Crossing);
    }
    let mut boxed: HashMap<u32, (usize, usize)> = HashMap::new();
    if n >= 2 {
        let f = jones_wenzl_scaled(n)?;
        for m in &p.markers {
            let first = net.add_vertex(VertexKind::Element(f.clone()));
            for (k, &label) in m.labels.iter().enumerate() {
                boxed.insert(label, (first, k));
            }
        }
    }
    for label in d.edge_labels() {
        let leg = |slot: (usize, usize)| 4 * slot.0 + slot.1;
        match (d.edge_ends(label), boxed.get(&label)) {
            (Some(ends), None) => net.connect(leg(ends.tail), leg(ends.head))?,
            (Some(ends), Some(&(first, k))) => {
                net.connect(leg(ends.tail), first + k)?;
                net.connect(first + n + k, leg(ends.head))?;
            }
            (None, None) => net.add_free_loops(1),
            (None, Some(&(first, k))) => net.connect(first + k, first + n + k)?,
        }
    }
    Ok(net)
}

type CacheKey = (String, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `J~_{D,n}(A)`: the n-cable of `d` decorated with `f^(n)` on every
/// component, evaluated as a skein element. `n = 0` gives `1`.
pub fn unreduced_cjp(d: &PlanarDiagram, n: usize) -> Result<LaurentPoly> {
    unreduced_cjp_with_budget(d, n, default_budget())
}

pub fn unreduced_cjp_with_budget(d: &PlanarDiagram, n: usize, budget: u128) -> Result<LaurentPoly> {
    if n > N_MAX {
        return Err(Error::Resource(format!("colour {n} exceeds the cap {N_MAX}")));
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let key = (d.to_pd_string(), n);
    if let Some(v) = cache().lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let net = cable_network(&cable(d, n)?)?;
    let (value, _) = net.evaluate_with_budget(budget)?;
    let poly = value
        .to_laurent()
        .filter(LaurentPoly::has_integer_coefficients)
        .ok_or_else(|| Error::Unstable("cable evaluation is not an integer polynomial".into()))?;
    cache().lock().expect("cache lock").insert(key, poly.clone());
    Ok(poly)
}

/// Width of the sweep needed for the n-cable, and its predicted states.
pub fn predicted_cost(d: &PlanarDiagram, n: usize) -> Result<(usize, u128)> {
    if n == 0 {
        return Ok((0, 1));
    }
    let plan = cable_network(&cable(d, n)?)?.plan()?;
    Ok((plan.width, plan.predicted_states))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredJonesResult {
    pub name: String,
    /// cable width `n`; the colour is `N = n + 1`
    pub n: usize,
    pub writhe: i32,
    pub unreduced: LaurentPoly,
    /// `J_{L,N}` written in `A`
    pub reduced: LaurentPoly,
}

#[derive(Serialize)]
struct JonesJson<'a> {
    name: &'a str,
    #[serde(rename = "N")]
    big_n: usize,
    writhe: i32,
    /// numbers, or decimal strings past the `i64` range
    coefficients: Vec<serde_json::Value>,
    shift: i32,
    normalized: bool,
}

impl ColoredJonesResult {
    pub fn color(&self) -> usize {
        self.n + 1
    }

    /// Terms of `J_{L,N}(q)` as `(exponent in quarter units, coefficient)`,
    /// increasing in `q`.
    pub fn q_terms(&self) -> Vec<(i32, BigInt)> {
        self.reduced
            .terms()
            .rev()
            .map(|(e, c)| (-e, c.to_integer()))
            .collect()
    }

    /// Lowest exponent of `q`, in quarter units.
    pub fn q_shift(&self) -> i32 {
        self.reduced.max_degree().map(|e| -e).unwrap_or(0)
    }

    /// Dense coefficients from the lowest power of `q` upward.
    pub fn q_coefficients(&self) -> Vec<BigInt> {
        let terms = self.q_terms();
        let Some(&(lo, _)) = terms.first() else {
            return Vec::new();
        };
        let hi = terms.last().expect("nonempty").0;
        let mut out = vec![BigInt::zero(); ((hi - lo) / 4 + 1) as usize];
        for (e, c) in terms {
            out[((e - lo) / 4) as usize] = c;
        }
        out
    }

    /// The lowest `order` coefficients, sign-normalized so the first one is
    /// positive.
    pub fn lowest(&self, order: usize) -> Vec<BigInt> {
        let mut c = self.q_coefficients();
        c.resize(order.max(c.len()), BigInt::zero());
        c.truncate(order);
        if c.first().is_some_and(|x| x.is_negative()) {
            c.iter_mut().for_each(|x| *x = -x.clone());
        }
        c
    }

    /// Series in `q` for `≐` comparisons.
    pub fn q_series(&self, order: usize) -> Result<TruncatedSeries> {
        TruncatedSeries::from_poly_q(&self.reduced, order)
    }

    pub fn to_json(&self, normalized: bool) -> String {
        let mut c = self.q_coefficients();
        if normalized && c.first().is_some_and(|x| x.is_negative()) {
            c.iter_mut().for_each(|x| *x = -x.clone());
        }
        let j = JonesJson {
            name: &self.name,
            big_n: self.color(),
            writhe: self.writhe,
            coefficients: c
                .iter()
                .map(|x| match x.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(x.to_string()),
                })
                .collect(),
            shift: self.q_shift(),
            normalized,
        };
        serde_json::to_string(&j).expect("serializable")
    }

    /// `1 - 2q + 2q^2 + ...`, normalized, lowest `order` terms.
    pub fn render(&self, order: usize) -> String {
        render_series(&self.lowest(order), order < self.q_coefficients().len())
    }
}

/// Renders integer coefficients of `q^0, q^1, ...`; zero coefficients are
/// kept so the order stays visible.
pub fn render_series<T: Clone + Into<BigInt>>(coeffs: &[T], more: bool) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        let c: BigInt = c.clone().into();
        let mag = c.abs();
        let body = match i {
            0 => mag.to_string(),
            1 if mag.is_one() => "q".to_string(),
            1 => format!("{mag}q"),
            _ if mag.is_one() => format!("q^{i}"),
            _ => format!("{mag}q^{i}"),
        };
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
            s.push_str(&body);
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
            s.push_str(&body);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    if more {
        s.push_str(" + ...");
    }
    s
}

/// `J_{L,N}` normalized by the writhe and the unknot.
pub fn reduced_cjp(d: &PlanarDiagram, big_n: usize) -> Result<ColoredJonesResult> {
    reduced_cjp_named("", d, big_n, default_budget())
}

pub fn reduced_cjp_named(
    name: &str,
    d: &PlanarDiagram,
    big_n: usize,
    budget: u128,
) -> Result<ColoredJonesResult> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("colour N must be at least 1".into()));
    }
    let n = big_n - 1;
    let unreduced = unreduced_cjp_with_budget(d, n, budget)?;
    let w = d.writhe();
    let k = -((n * n + 2 * n) as i32) * w;
    let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let framed = unreduced.shift(k).scale(&num_rational::BigRational::from_integer(sign.into()));
    let q = RationalFn::new(framed, delta_poly(n as i32)?)?;
    let reduced = q
        .to_laurent()
        .ok_or_else(|| Error::Unstable("unreduced value is not divisible by the unknot".into()))?;
    Ok(ColoredJonesResult {
        name: name.to_string(),
        n,
        writhe: w,
        unreduced,
        reduced,
    })
}

/// Arm port of a crossing slot on its `2n` idempotent.
fn arm_port(node: usize, slot: usize, n: usize) -> Port {
    match slot {
        0 => Port::new(node, Side::Bottom, 0),
        1 => Port::new(node, Side::Bottom, n),
        2 => Port::new(node, Side::Top, n),
        _ => Port::new(node, Side::Top, 0),
    }
}

/// The all-B skein diagram `S_B^(n)`: one idempotent of size `2n` per
/// crossing, joined along the diagram edges by arcs of colour `n`.
pub fn s_b_diagram(d: &PlanarDiagram, n: usize) -> Result<SkeinDiagram> {
    if !is_adequate(d, StateKind::B) {
        return Err(Error::NotAdequate("diagram is not B-adequate".into()));
    }
    let mut s = SkeinDiagram::new();
    if n == 0 {
        return Ok(s);
    }
    for _ in d.crossings() {
        s.add_node(Node::Idempotent { size: 2 * n });
    }
    for label in d.edge_labels() {
        match d.edge_ends(label) {
            Some(ends) => s.add_arc(
                arm_port(ends.tail.0, ends.tail.1, n),
                arm_port(ends.head.0, ends.head.1, n),
                n,
            ),
            None => s.free_circles.push(n),
        }
    }
    Ok(s)
}

/// Checks `J~_{D,n} ≐_{4(n+1)} S_B^(n)` in `A`.
pub fn verify_mainlemma(d: &PlanarDiagram, n: usize) -> Result<bool> {
    let order = 4 * (n + 1);
    let j = unreduced_cjp(d, n)?;
    let sb = s_b_diagram(d, n)?.evaluate_closed()?;
    dot_eq_n(
        &TruncatedSeries::from_poly_a(&j, order),
        &sb.series_expand(order),
        order,
    )
}



#[cfg(test)]
mod tests;
