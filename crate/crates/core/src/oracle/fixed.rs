use serde::Serialize;

use super::filtration::{diameter_steps, sort_simplices, Simplex};
use crate::error::{Error, Result};
use crate::measure::Length;

/// Largest number of orbits enumerated (2^20 invariant vertex sets).
const MAX_ORBITS: usize = 20;

/// Simplices of the full Vietoris–Rips complex on the `n`-cycle that are
/// invariant under the shift `j ↦ j + n/d`, i.e. unions of `Z_d`-orbits.
///
/// These are not closed under taking faces; they index the cells fixed by
/// the cyclic action.
#[derive(Debug, Clone, Serialize)]
pub struct FixedSubcomplex {
    pub n: u32,
    pub d: u32,
    pub simplices: Vec<Simplex>,
}

fn check_divisor(n: usize, d: usize) -> Result<()> {
    if d >= 2 && n >= 2 && n % d == 0 && n <= 64 {
        Ok(())
    } else {
        Err(Error::NotDivisor { n, d })
    }
}

pub fn fixed_subcomplex(n: usize, d: usize) -> Result<FixedSubcomplex> {
    check_divisor(n, d)?;
    let orbit_count = n / d;
    if orbit_count > MAX_ORBITS {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << orbit_count,
            budget: 1u128 << MAX_ORBITS,
        });
    }
    let n32 = n as u32;
    let stride = orbit_count as u32;
    let mut simplices = Vec::with_capacity((1usize << orbit_count) - 1);
    for chosen in 1u64..(1u64 << orbit_count) {
        let mut vertices: Vec<u32> = (0..stride)
            .filter(|o| chosen & (1 << o) != 0)
            .flat_map(|o| (0..d as u32).map(move |t| o + t * stride))
            .collect();
        vertices.sort_unstable();
        let steps = diameter_steps(n32, &vertices);
        simplices.push(Simplex { vertices, steps });
    }
    sort_simplices(&mut simplices);
    Ok(FixedSubcomplex {
        n: n32,
        d: d as u32,
        simplices,
    })
}

impl FixedSubcomplex {
    pub fn value(&self, simplex: &Simplex) -> Length {
        Length::frac(simplex.steps as i64, self.n as i64)
    }

    /// Whether any invariant simplex is present at scale `r`.
    pub fn nonempty_at(&self, r: &Length) -> bool {
        self.simplices.iter().any(|s| self.value(s) <= *r)
    }

    pub fn min_value(&self) -> Length {
        self.simplices
            .first()
            .map(|s| self.value(s))
            .expect("at least one orbit")
    }
}

/// Smallest scale carrying a `Z_d`-invariant simplex, read off the
/// enumerated fixed simplices.
pub fn first_fixed_scale(n: usize, d: usize) -> Result<Length> {
    Ok(fixed_subcomplex(n, d)?.min_value())
}

/// Diameter of a regular `d`-gon: `(2π/d)·⌊d/2⌋`.
pub fn regular_polygon_diameter(d: usize) -> Length {
    Length::frac((d / 2) as i64, d as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inscribed_triangles() {
        let f = fixed_subcomplex(9, 3).unwrap();
        let minimal: Vec<_> = f
            .simplices
            .iter()
            .filter(|s| f.value(s) == Length::frac(1, 3))
            .collect();
        assert_eq!(minimal.len(), 3);
        assert_eq!(minimal[0].vertices, vec![0, 3, 6]);
        assert!(minimal.iter().all(|s| s.vertices.len() == 3));
    }

    #[test]
    fn onset_examples() {
        assert_eq!(first_fixed_scale(15, 5).unwrap(), Length::frac(2, 5));
        assert_eq!(first_fixed_scale(15, 3).unwrap(), Length::frac(1, 3));
        assert_eq!(first_fixed_scale(14, 7).unwrap(), Length::frac(3, 7));
        assert_eq!(first_fixed_scale(8, 2).unwrap(), Length::pi());
    }

    #[test]
    fn every_simplex_is_invariant() {
        let f = fixed_subcomplex(12, 4).unwrap();
        for s in &f.simplices {
            let shifted: std::collections::BTreeSet<u32> =
                s.vertices.iter().map(|v| (v + 3) % 12).collect();
            assert_eq!(shifted.into_iter().collect::<Vec<_>>(), s.vertices);
        }
        assert_eq!(f.simplices.len(), 7);
    }

    #[test]
    fn rejects_non_divisors() {
        assert!(fixed_subcomplex(10, 3).is_err());
        assert!(fixed_subcomplex(10, 1).is_err());
    }
}
