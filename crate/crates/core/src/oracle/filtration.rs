use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::measure::Length;
use crate::rational;

/// Default cap on the number of simplices a filtration may hold.
pub const DEFAULT_SIMPLEX_BUDGET: u128 = 2_000_000;

/// A simplex on evenly spaced circle points.
///
/// `steps` is the geodesic diameter measured in multiples of `1/n` turns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Simplex {
    pub vertices: Vec<u32>,
    pub steps: u32,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | (1u64 << v))
    }
}

/// Largest circular index distance within a vertex set of the `n`-cycle.
pub fn diameter_steps(n: u32, vertices: &[u32]) -> u32 {
    let mut best = 0;
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            let d = a.abs_diff(b);
            best = best.max(d.min(n - d));
        }
    }
    best
}

/// The Vietoris–Rips filtration of `n` evenly spaced points on the circle,
/// truncated at dimension `max_dim`, sorted by (value, dimension, vertices).
#[derive(Debug, Clone, Serialize)]
pub struct Filtration {
    pub n: u32,
    pub max_dim: usize,
    pub simplices: Vec<Simplex>,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of simplices of dimension at most `max_dim` on `n` vertices.
pub fn simplex_count(n: usize, max_dim: usize) -> u128 {
    (1..=max_dim + 1).map(|s| binomial(n as u128, s as u128)).sum()
}

pub fn build_filtration(n: usize, max_dim: usize) -> Result<Filtration> {
    build_filtration_with_budget(n, max_dim, DEFAULT_SIMPLEX_BUDGET)
}

pub fn build_filtration_with_budget(n: usize, max_dim: usize, budget: u128) -> Result<Filtration> {
    if !(3..=64).contains(&n) {
        return Err(Error::PointCount { n });
    }
    let needed = simplex_count(n, max_dim);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let n32 = n as u32;
    let mut simplices = Vec::with_capacity(needed as usize);
    for size in 1..=(max_dim + 1).min(n) {
        for vertices in (0..n32).combinations(size) {
            let steps = diameter_steps(n32, &vertices);
            simplices.push(Simplex { vertices, steps });
        }
    }
    sort_simplices(&mut simplices);
    Ok(Filtration {
        n: n32,
        max_dim,
        simplices,
    })
}

pub(crate) fn sort_simplices(simplices: &mut [Simplex]) {
    simplices.sort_by(|a, b| {
        (a.steps, a.vertices.len())
            .cmp(&(b.steps, b.vertices.len()))
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
}

impl Filtration {
    pub fn value(&self, simplex: &Simplex) -> Length {
        Length::frac(simplex.steps as i64, self.n as i64)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Simplices present at scale `r` (closed sublevel set).
    pub fn sublevel(&self, r: &Length) -> impl Iterator<Item = &Simplex> {
        let limit = self.steps_at(r);
        self.simplices.iter().filter(move |s| s.steps <= limit)
    }

    /// Largest step count whose value is at most `r`.
    pub fn steps_at(&self, r: &Length) -> u32 {
        let scaled = (r.turns() * rational::int(self.n as i64)).floor();
        let steps = scaled.to_integer();
        u32::try_from(steps).unwrap_or(u32::MAX)
    }

    /// One simplex per line: `value_turns dim v0 v1 …`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.simplices {
            let value = rational::format(self.value(s).turns());
            write!(out, "{value} {}", s.dim()).unwrap();
            for v in &s.vertices {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Alternating simplex count of the sublevel set at `r`.
    pub fn euler_characteristic(&self, r: &Length) -> i64 {
        self.sublevel(r)
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}
