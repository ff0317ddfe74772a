use num_traits::Signed;
use serde::Serialize;

use super::filtration::{build_filtration_with_budget, DEFAULT_SIMPLEX_BUDGET};
use super::reduction::{persistent_homology, CoefficientField};
use crate::error::Result;
use crate::measure::Length;
use crate::rational::{self, Rational};
use crate::rings::band;

/// Homotopy type of the continuum thickening at a scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "dim", rename_all = "snake_case")]
pub enum Prediction {
    Point,
    OddSphere(usize),
}

impl Prediction {
    pub fn at(r: &Length) -> Self {
        match band(r) {
            Some(k) => Prediction::OddSphere(2 * k + 1),
            None => Prediction::Point,
        }
    }

    /// Betti numbers `b₀ … b_{max_dim−1}`.
    pub fn betti(&self, max_dim: usize) -> Vec<usize> {
        (0..max_dim)
            .map(|d| match *self {
                Prediction::Point => usize::from(d == 0),
                Prediction::OddSphere(s) => usize::from(d == 0 || d == s),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoryReport {
    pub n: usize,
    pub r: Length,
    pub max_dim: usize,
    pub field: CoefficientField,
    pub oracle_betti: Vec<usize>,
    pub prediction: Prediction,
    pub predicted_betti: Vec<usize>,
    pub matches: bool,
    /// `r/(2π)` lies within `1/n` of a critical ratio `k/(2k+1)`.
    pub near_critical: bool,
    pub caveat: Option<String>,
}

/// Whether `r` (turns) is within `1/n` of some `k/(2k+1)`.
pub fn near_critical_ratio(r: &Length, n: usize) -> bool {
    let half = rational::ratio(1, 2);
    let window = rational::ratio(1, n as i64);
    let r = r.turns();
    if *r >= half {
        return false;
    }
    if &half - r < window {
        return true;
    }
    let mut k: i64 = 0;
    loop {
        let critical = rational::ratio(k, 2 * k + 1);
        let gap: Rational = (&critical - r).abs();
        if gap < window {
            return true;
        }
        if critical > r + &window {
            return false;
        }
        k += 1;
    }
}

pub fn betti(n: usize, r: &Length, max_dim: usize, field: CoefficientField) -> Result<Vec<usize>> {
    let f = build_filtration_with_budget(n, max_dim, DEFAULT_SIMPLEX_BUDGET)?;
    Ok(persistent_homology(&f, field).betti_vector(r))
}

pub fn compare_with_theory(
    n: usize,
    r: &Length,
    max_dim: usize,
    field: CoefficientField,
) -> Result<TheoryReport> {
    compare_with_budget(n, r, max_dim, field, DEFAULT_SIMPLEX_BUDGET)
}

pub fn compare_with_budget(
    n: usize,
    r: &Length,
    max_dim: usize,
    field: CoefficientField,
    budget: u128,
) -> Result<TheoryReport> {
    let f = build_filtration_with_budget(n, max_dim, budget)?;
    let oracle_betti = persistent_homology(&f, field).betti_vector(r);
    let prediction = Prediction::at(r);
    let predicted_betti = prediction.betti(max_dim);
    let near_critical = near_critical_ratio(r, n);
    let mut caveats = Vec::new();
    if near_critical {
        caveats.push(format!(
            "scale is within 1/{n} turn of a critical ratio k/(2k+1); the {n}-point sample may differ from the continuum"
        ));
    }
    if prediction == Prediction::Point && max_dim + 1 < n {
        caveats.push("full simplex is truncated below dimension n-1".to_string());
    }
    Ok(TheoryReport {
        n,
        r: r.clone(),
        max_dim,
        field,
        matches: oracle_betti == predicted_betti,
        oracle_betti,
        prediction,
        predicted_betti,
        near_critical,
        caveat: (!caveats.is_empty()).then(|| caveats.join("; ")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_points_then_cone() {
        assert_eq!(
            betti(6, &Length::frac(1, 100), 3, CoefficientField::F2).unwrap(),
            vec![6, 0, 0]
        );
        assert_eq!(
            betti(6, &Length::pi(), 5, CoefficientField::F2).unwrap(),
            vec![1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn nine_point_circle() {
        let rep = compare_with_theory(9, &Length::frac(1, 6), 3, CoefficientField::F2).unwrap();
        assert_eq!(rep.prediction, Prediction::OddSphere(1));
        assert_eq!(rep.oracle_betti, vec![1, 1, 0]);
        assert!(rep.matches);
        assert!(!rep.near_critical);
    }

    #[test]
    fn full_simplex_is_a_point() {
        let rep = compare_with_theory(7, &Length::pi(), 6, CoefficientField::Q).unwrap();
        assert_eq!(rep.prediction, Prediction::Point);
        assert!(rep.matches);
        assert!(rep.caveat.is_none());
    }

    #[test]
    fn critical_windows() {
        assert!(near_critical_ratio(&Length::frac(1, 3), 20));
        assert!(near_critical_ratio(&Length::frac(7, 20), 20));
        assert!(near_critical_ratio(&Length::frac(11, 30), 20));
        assert!(!near_critical_ratio(&Length::frac(11, 30), 40));
        assert!(!near_critical_ratio(&Length::frac(1, 6), 9));
        assert!(near_critical_ratio(&Length::frac(49, 100), 9));
    }
}
