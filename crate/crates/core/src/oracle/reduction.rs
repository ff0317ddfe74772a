//! Column reduction of the boundary matrix with clearing.
//!
//! Columns are processed from the top dimension down; once a column of
//! dimension `d` pairs with row `i`, column `i` (dimension `d − 1`) is known
//! to reduce to zero and is skipped.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::filtration::Filtration;
use crate::measure::Length;
use crate::rational::{self, Rational};

/// Coefficient field for the reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientField {
    F2,
    Q,
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::F2 => write!(f, "f2"),
            CoefficientField::Q => write!(f, "q"),
        }
    }
}

trait Coefficient:
    Clone + PartialEq + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Self;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct F2(bool);

impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Coefficient for F2 {
    fn one() -> Self {
        F2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn inverse(&self) -> Self {
        assert!(self.0, "zero has no inverse");
        *self
    }
}

impl Coefficient for Rational {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
}

/// Sparse column: `(row, coefficient)` sorted by row, no zero entries.
type Column<C> = Vec<(usize, C)>;

/// `target += factor · source`
fn axpy<C: Coefficient>(target: &mut Column<C>, factor: &C, source: &Column<C>) {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let take_target = j >= source.len() || (i < target.len() && target[i].0 < source[j].0);
        let take_source = i >= target.len() || (j < source.len() && source[j].0 < target[i].0);
        if take_target {
            out.push(target[i].clone());
            i += 1;
        } else if take_source {
            out.push((source[j].0, factor.clone() * source[j].1.clone()));
            j += 1;
        } else {
            let v = target[i].1.clone() + factor.clone() * source[j].1.clone();
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    *target = out;
}

fn boundary_matrix<C: Coefficient>(filtration: &Filtration) -> Vec<Column<C>> {
    let index: HashMap<u64, usize> = filtration
        .simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask(), i))
        .collect();
    filtration
        .simplices
        .iter()
        .map(|s| {
            if s.dim() == 0 {
                return Vec::new();
            }
            let mask = s.mask();
            let mut col: Column<C> = s
                .vertices
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { C::one() } else { -C::one() };
                    (index[&(mask & !(1u64 << v))], sign)
                })
                .collect();
            col.sort_by_key(|(row, _)| *row);
            col
        })
        .collect()
}

/// A persistence pairing; `death` is `None` for essential classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Pairing {
    pub dim: usize,
    pub birth: usize,
    pub death: Option<usize>,
}

fn reduce<C: Coefficient>(filtration: &Filtration) -> Vec<Pairing> {
    let mut columns = boundary_matrix::<C>(filtration);
    let total = columns.len();
    let dims: Vec<usize> = filtration.simplices.iter().map(|s| s.dim()).collect();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; total];
    let mut cleared = vec![false; total];
    let mut pairings = Vec::new();

    for dim in (1..=filtration.max_dim).rev() {
        for j in (0..total).filter(|&j| dims[j] == dim) {
            if cleared[j] {
                columns[j].clear();
                continue;
            }
            while let Some((low, coeff)) = columns[j].last().cloned() {
                match pivot_of_row[low] {
                    Some(k) => {
                        let pivot = columns[k].last().expect("pivot column nonempty").1.clone();
                        let factor = -(coeff * pivot.inverse());
                        let source = std::mem::take(&mut columns[k]);
                        axpy(&mut columns[j], &factor, &source);
                        columns[k] = source;
                    }
                    None => {
                        pivot_of_row[low] = Some(j);
                        cleared[low] = true;
                        pairings.push(Pairing {
                            dim: dim - 1,
                            birth: low,
                            death: Some(j),
                        });
                        break;
                    }
                }
            }
        }
    }

    #[cfg(debug_assertions)]
    {
        let mut seen = std::collections::HashSet::new();
        for col in &columns {
            if let Some((low, _)) = col.last() {
                assert!(seen.insert(*low), "two columns share the pivot row {low}");
            }
        }
    }

    for j in 0..total {
        if !cleared[j] && columns[j].is_empty() && pivot_of_row[j].is_none() {
            pairings.push(Pairing {
                dim: dims[j],
                birth: j,
                death: None,
            });
        }
    }
    pairings
}

/// One bar `[birth, death)` in turns; `death = None` for infinite bars.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bar {
    pub dim: usize,
    pub birth: Length,
    pub death: Option<Length>,
}

impl Bar {
    pub fn contains(&self, r: &Length) -> bool {
        self.birth <= *r && self.death.as_ref().is_none_or(|d| r < d)
    }
}

impl Serialize for Bar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Bar", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("birth_turns", &rational::format(self.birth.turns()))?;
        st.serialize_field(
            "death_turns",
            &self.death.as_ref().map(|d| rational::format(d.turns())),
        )?;
        st.end()
    }
}

/// Persistence intervals of positive length, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Barcode {
    pub max_dim: usize,
    pub intervals: Vec<Bar>,
}

impl Barcode {
    /// Number of bars of dimension `dim` alive at `r`.
    pub fn betti_at(&self, dim: usize, r: &Length) -> usize {
        self.intervals
            .iter()
            .filter(|b| b.dim == dim && b.contains(r))
            .count()
    }

    /// Betti numbers `b₀ … b_{max_dim−1}` at `r`; the top dimension is not
    /// reported because the truncated complex has no cofaces to kill it.
    pub fn betti_vector(&self, r: &Length) -> Vec<usize> {
        (0..self.max_dim).map(|d| self.betti_at(d, r)).collect()
    }

    /// `Σ (−1)^d b_d` over every dimension up to `max_dim`.
    pub fn euler_characteristic(&self, r: &Length) -> i64 {
        (0..=self.max_dim)
            .map(|d| {
                let b = self.betti_at(d, r) as i64;
                if d % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    /// `dim,birth_turns,death_turns`, with `inf` for infinite bars.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,birth_turns,death_turns\n");
        for b in &self.intervals {
            let death = b
                .death
                .as_ref()
                .map(|d| rational::format(d.turns()))
                .unwrap_or_else(|| "inf".into());
            out.push_str(&format!("{},{},{}\n", b.dim, rational::format(b.birth.turns()), death));
        }
        out
    }
}

pub fn persistent_homology(filtration: &Filtration, field: CoefficientField) -> Barcode {
    let pairings = match field {
        CoefficientField::F2 => reduce::<F2>(filtration),
        CoefficientField::Q => reduce::<Rational>(filtration),
    };
    let value = |i: usize| filtration.value(&filtration.simplices[i]);
    let mut intervals: Vec<Bar> = pairings
        .into_iter()
        .map(|p| Bar {
            dim: p.dim,
            birth: value(p.birth),
            death: p.death.map(value),
        })
        .filter(|b| b.death.as_ref().is_none_or(|d| *d > b.birth))
        .collect();
    intervals.sort();
    Barcode {
        max_dim: filtration.max_dim,
        intervals,
    }
}
