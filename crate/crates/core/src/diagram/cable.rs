//! Blackboard-framed n-cables.
//!
//! Copy `k` (1-based) of base edge `e` is the k-th parallel strand counted
//! from the left of the direction of travel; it is labelled `(e-1)*n + k`.
//! Each base crossing becomes an `n x n` grid of crossings. Grid-internal
//! edges get labels above `max_label * n`.

use super::pd::PlanarDiagram;
use crate::error::{Error, Result};

/// Where a Jones-Wenzl box sits on the cable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMarker {
    /// index into `PlanarDiagram::components` of the base diagram
    pub component: usize,
    /// base edge carrying the box
    pub base_edge: u32,
    /// cable labels of copies `1..=n`, left to right
    pub labels: Vec<u32>,
}

/// An n-cable of a diagram plus the positions of its idempotents.
#[derive(Clone, Debug)]
pub struct CablePattern {
    pub base: PlanarDiagram,
    pub width: usize,
    pub cabled: PlanarDiagram,
    pub markers: Vec<BoxMarker>,
}

pub fn cable_label(edge: u32, n: usize, copy: usize) -> u32 {
    (edge - 1) * n as u32 + copy as u32
}

/// Builds the n-cable. `n = 1` returns the base diagram itself and `n = 0`
/// the empty diagram.
pub fn cable(base: &PlanarDiagram, n: usize) -> Result<CablePattern> {
    if n == 0 {
        return Ok(CablePattern {
            base: base.clone(),
            width: 0,
            cabled: PlanarDiagram::empty(),
            markers: Vec::new(),
        });
    }
    let nn = n as u32;
    let max = base.max_label();
    let mut next = max
        .checked_mul(nn)
        .ok_or(Error::Overflow)?
        + 1;
    let mut crossings = Vec::with_capacity(base.num_crossings() * n * n);
    for (&[a, b, c, d], &s) in base.crossings().iter().zip(base.signs()) {
        // v[i][r]: vertical copy i between rows r and r+1, r in 0..=n
        // h[r][i]: horizontal row r between columns i and i+1, i in 0..=n
        let mut v = vec![vec![0u32; n + 1]; n + 1];
        let mut h = vec![vec![0u32; n + 1]; n + 1];
        for i in 1..=n {
            v[i][0] = cable_label(a, n, i);
            v[i][n] = cable_label(c, n, i);
            for r in 1..n {
                v[i][r] = next;
                next += 1;
            }
        }
        for j in 1..=n {
            let r = if s > 0 { n + 1 - j } else { j };
            h[r][0] = cable_label(d, n, j);
            h[r][n] = cable_label(b, n, j);
        }
        for row in h.iter_mut().skip(1) {
            for cell in row.iter_mut().take(n).skip(1) {
                *cell = next;
                next += 1;
            }
        }
        for r in 1..=n {
            for i in 1..=n {
                crossings.push([v[i][r - 1], h[r][i], v[i][r], h[r][i - 1]]);
            }
        }
    }
    let loops: Vec<u32> = base
        .loops()
        .iter()
        .flat_map(|&l| (1..=n).map(move |k| cable_label(l, n, k)))
        .collect();
    let cabled = PlanarDiagram::new(crossings, loops)?;
    let markers = base
        .components()
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            let e = *comp.iter().min().expect("components are nonempty");
            BoxMarker {
                component: ci,
                base_edge: e,
                labels: (1..=n).map(|k| cable_label(e, n, k)).collect(),
            }
        })
        .collect();
    Ok(CablePattern {
        base: base.clone(),
        width: n,
        cabled,
        markers,
    })
}
