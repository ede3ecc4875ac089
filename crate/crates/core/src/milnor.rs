//! Milnor number by linear algebra on the monomial basis.
//!
//! `dim O / (J + m^{N+1})`, `J = (g_x, g_y)`, is computed for growing `N`.
//! Once two consecutive values agree, Nakayama's lemma gives
//! `m^{N+1} ⊂ J` in the local ring, so the value is `μ`.

use std::fmt;

use crate::jet::{Axis, Jet2};
use crate::recognizer::corank;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Milnor {
    Finite(u32),
    /// Not stabilized up to the probe bound.
    Infinite,
}

impl fmt::Display for Milnor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Milnor::Finite(m) => write!(f, "{m}"),
            Milnor::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MilnorReport {
    pub mu: Milnor,
    pub corank: u32,
}

#[inline]
fn col(i: u32, j: u32) -> usize {
    let d = (i + j) as usize;
    d * (d + 1) / 2 + j as usize
}

/// Rank of the rows after reduction; rows are consumed.
fn rank(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    let mut r = 0;
    // pivot on low degrees first: short rows stay sparse
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        let pivot: Vec<(usize, Scalar)> = rows[r]
            .iter()
            .enumerate()
            .skip(c)
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v * &inv))
            .collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (k, pv) in &pivot {
                let delta = &f * pv;
                row[*k] -= &delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// `dim O / (J + m^{n+1})`.
fn colength(gx: &[(u32, u32, Scalar)], gy: &[(u32, u32, Scalar)], n: u32) -> u32 {
    let ncols = col(n + 1, 0);
    let mut rows = Vec::new();
    for d in 0..n {
        for b in 0..=d {
            let a = d - b;
            for gen in [gx, gy] {
                let mut row = vec![Scalar::zero(); ncols];
                let mut any = false;
                for (i, j, c) in gen {
                    if a + b + i + j <= n {
                        row[col(a + i, b + j)] = c.clone();
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    (ncols - rank(rows, ncols)) as u32
}

/// Milnor number and corank of a critical jet, read as a polynomial.
pub fn milnor_oracle(g: &Jet2, probe_bound: u32) -> MilnorReport {
    let gx: Vec<_> = g.partial(Axis::X).terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let gy: Vec<_> = g.partial(Axis::Y).terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let corank = corank(g);
    let mut prev = colength(&gx, &gy, 0);
    let mut mu = Milnor::Infinite;
    for n in 1..=probe_bound {
        let cur = colength(&gx, &gy, n);
        if cur == prev {
            mu = Milnor::Finite(cur);
            break;
        }
        prev = cur;
    }
    MilnorReport { mu, corank }
}

/// Default probe bound for a jet of degree bound `k`.
pub fn default_probe_bound(k: u32) -> u32 {
    2 * k
}
