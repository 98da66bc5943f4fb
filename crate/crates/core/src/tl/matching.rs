//! Crossingless matchings of `2n` boundary points on a rectangle.
//!
//! Point `i < n` is bottom position `i` (left to right); point `n + i` is
//! top position `i` (left to right). Going counterclockwise around the
//! rectangle visits the bottom left to right, then the top right to left.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    n: usize,
    partner: Vec<u8>,
}

impl Matching {
    /// Builds a matching from a partner table, checking it is a planar
    /// perfect matching.
    pub fn from_partners(n: usize, partner: Vec<u8>) -> Result<Self> {
        if partner.len() != 2 * n || 2 * n > u8::MAX as usize {
            return Err(Error::InvalidArgument("partner table has wrong length".into()));
        }
        for (i, &p) in partner.iter().enumerate() {
            let p = p as usize;
            if p >= 2 * n || p == i || partner[p] as usize != i {
                return Err(Error::InvalidArgument("not a perfect matching".into()));
            }
        }
        let m = Self { n, partner };
        if !m.is_planar() {
            return Err(Error::InvalidArgument("matching is not planar".into()));
        }
        Ok(m)
    }


    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Self { n, partner }
    }

    /// The hook `e_i`, `1 <= i < n`: caps on positions `i-1, i` at top and bottom.
    pub fn e(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidArgument(format!("e_{i} undefined in TL_{n}")));
        }
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b as u8;
        m.partner[b] = a as u8;
        m.partner[n + a] = (n + b) as u8;
        m.partner[n + b] = (n + a) as u8;
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Position of a point in counterclockwise order.
    pub fn cyclic_position(n: usize, point: usize) -> usize {
        if point < n {
            point
        } else {
            3 * n - 1 - point
        }
    }

    /// Inverse of `cyclic_position`.
    pub fn point_at(n: usize, pos: usize) -> usize {
        if pos < n {
            pos
        } else {
            3 * n - 1 - pos
        }
    }

    pub fn is_planar(&self) -> bool {
        let mut stack = Vec::new();
        for pos in 0..2 * self.n {
            let pt = Self::point_at(self.n, pos);
            let other = Self::cyclic_position(self.n, self.partner(pt));
            if other > pos {
                stack.push(pos);
            } else if stack.pop() != Some(other) {
                return false;
            }
        }
        true
    }

    /// Number of strands joining bottom to top.
    pub fn through_strands(&self) -> usize {
        (0..self.n).filter(|&i| self.partner(i) >= self.n).count()
    }

    /// `self` stacked on top of `below`. Returns the product and the number
    /// of closed loops formed in the middle.
    pub fn compose(&self, below: &Matching) -> Result<(Matching, usize)> {
        if self.n != below.n {
            return Err(Error::InvalidArgument(format!(
                "cannot compose TL_{} with TL_{}",
                self.n, below.n
            )));
        }
        Ok(self.compose_unchecked(below))
    }

    pub(crate) fn compose_unchecked(&self, below: &Matching) -> (Matching, usize) {
        let n = self.n;
        let mut partner = vec![u8::MAX; 2 * n];
        let mut seen_mid = vec![false; n];
        // exits: result point reached when leaving through the outer boundary
        let follow = |start_in_below: bool, start: usize, seen: &mut [bool]| -> usize {
            let (mut in_below, mut p) = (start_in_below, start);
            loop {
                if in_below {
                    let q = below.partner(p);
                    if q < n {
                        return q;
                    }
                    let j = q - n;
                    seen[j] = true;
                    in_below = false;
                    p = j;
                } else {
                    let q = self.partner(p);
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    in_below = true;
                    p = n + q;
                }
            }
        };
        for start in 0..2 * n {
            if partner[start] != u8::MAX {
                continue;
            }
            let end = if start < n {
                follow(true, start, &mut seen_mid)
            } else {
                follow(false, start, &mut seen_mid)
            };
            partner[start] = end as u8;
            partner[end] = start as u8;
        }
        let mut loops = 0;
        for j in 0..n {
            if seen_mid[j] {
                continue;
            }
            loops += 1;
            // walk the closed loop through middle position j
            let mut k = j;
            loop {
                seen_mid[k] = true;
                let down = below.partner(n + k) - n;
                seen_mid[down] = true;
                let up = self.partner(down);
                if up == j {
                    break;
                }
                k = up;
            }
        }
        (Matching { n, partner }, loops)
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &Matching) -> Matching {
        let (a, b) = (self.n, right.n);
        let n = a + b;
        let map_l = |p: usize| if p < a { p } else { n + (p - a) };
        let map_r = |p: usize| if p < b { a + p } else { n + a + (p - b) };
        let mut partner = vec![0u8; 2 * n];
        for p in 0..2 * a {
            partner[map_l(p)] = map_l(self.partner(p)) as u8;
        }
        for p in 0..2 * b {
            partner[map_r(p)] = map_r(right.partner(p)) as u8;
        }
        Matching { n, partner }
    }

    /// Closes the rightmost strand (joins top `n-1` to bottom `n-1`).
    /// Returns the matching in `TL_{n-1}` and whether a loop closed off.
    pub fn close_last(&self) -> Result<(Matching, usize)> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidArgument("no strand to close".into()));
        }
        let (bl, tl) = (n - 1, 2 * n - 1);
        if self.partner(bl) == tl {
            let mut m = Vec::with_capacity(2 * (n - 1));
            let map = |p: usize| if p < n { p } else { p - 1 };
            for p in (0..2 * n).filter(|&p| p != bl && p != tl) {
                m.push(map(self.partner(p)) as u8);
            }
            return Ok((Matching { n: n - 1, partner: m }, 1));
        }
        let map = |p: usize| if p < n { p } else { p - 1 };
        let mut partner = vec![0u8; 2 * (n - 1)];
        for p in (0..2 * n).filter(|&p| p != bl && p != tl) {
            let mut q = self.partner(p);
            if q == bl {
                q = self.partner(tl);
            } else if q == tl {
                q = self.partner(bl);
            }
            partner[map(p)] = map(q) as u8;
        }
        Ok((Matching { n: n - 1, partner }, 0))
    }

    /// Loops formed by gluing `closure` to `self` along all `2n` points.
    pub fn loops_with_closure(&self, closure: &Matching) -> Result<usize> {
        if closure.n != self.n {
            return Err(Error::InvalidArgument("closure size mismatch".into()));
        }
        let mut seen = vec![false; 2 * self.n];
        let mut loops = 0;
        for s in 0..2 * self.n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                p = closure.partner(q);
                if p == s {
                    break;
                }
            }
        }
        Ok(loops)
    }

    /// All matchings in `TL_n`, in increasing order of their nesting strings.
    pub fn enumerate(n: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut buf = String::with_capacity(2 * n);
        fn rec(n: usize, open: usize, close: usize, buf: &mut String, out: &mut Vec<Matching>) {
            if open == n && close == n {
                out.push(buf.parse().expect("balanced string"));
                return;
            }
            if open < n {
                buf.push('(');
                rec(n, open + 1, close, buf, out);
                buf.pop();
            }
            if close < open {
                buf.push(')');
                rec(n, open, close + 1, buf, out);
                buf.pop();
            }
        }
        rec(n, 0, 0, &mut buf, &mut out);
        out
    }

    /// Nesting string in counterclockwise order from bottom-left.
    pub fn to_parens(&self) -> String {
        (0..2 * self.n)
            .map(|pos| {
                let pt = Self::point_at(self.n, pos);
                if Self::cyclic_position(self.n, self.partner(pt)) > pos {
                    '('
                } else {
                    ')'
                }
            })
            .collect()
    }
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

impl FromStr for Matching {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() % 2 != 0 || chars.len() > u8::MAX as usize {
            return Err(Error::Parse(format!("bad nesting string `{s}`")));
        }
        let n = chars.len() / 2;
        let mut partner = vec![0u8; 2 * n];
        let mut stack = Vec::new();
        for (pos, c) in chars.iter().enumerate() {
            let pt = Self::point_at(n, pos);
            match c {
                '(' => stack.push(pt),
                ')' => {
                    let o = stack
                        .pop()
                        .ok_or_else(|| Error::Parse(format!("unbalanced `{s}`")))?;
                    partner[o] = pt as u8;
                    partner[pt] = o as u8;
                }
                _ => return Err(Error::Parse(format!("bad character `{c}` in matching"))),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Parse(format!("unbalanced `{s}`")));
        }
        Ok(Matching { n, partner })
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({})", self.to_parens())
    }
}

impl serde::Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_parens())
    }
}

impl<'de> serde::Deserialize<'de> for Matching {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
