//! Excluded regions, μ-arcs, strata and the averaging map onto regular
//! polygonal measures.
//!
//! For a measure `μ` at scale `r < π`, each support point `θ` excludes the
//! open arc of length `2π − 2r` centred at its antipode. The closed
//! components of the complement that meet the support are the μ-arcs;
//! there is always an odd number `2k + 1` of them and `k` is the stratum.
//! Averaging collapses each arc to one vertex of a regular `(2k+1)`-gon.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measure::{angle_str, diameter, Angle, CircleMeasure, Length};
use crate::rational::{self, Rational};

fn check_scale(r: &Length) -> Result<()> {
    if r.is_below_pi() {
        Ok(())
    } else {
        Err(Error::ScaleTooLarge(rational::format(r.turns())))
    }
}

fn check_member(measure: &CircleMeasure, r: &Length) -> Result<()> {
    check_scale(r)?;
    let d = diameter(measure);
    if d <= *r {
        Ok(())
    } else {
        Err(Error::NotMember {
            diameter: rational::format(d.turns()),
            scale: rational::format(r.turns()),
        })
    }
}

/// An arc running counterclockwise from `start` to `end`.
///
/// Whether the endpoints belong to the arc depends on context: excluded
/// arcs are open, μ-arcs are closed. `start == end` is a single point for
/// a closed arc and the circle minus that point for an open one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    #[serde(rename = "start_turns", with = "angle_str")]
    pub start: Angle,
    #[serde(rename = "end_turns", with = "angle_str")]
    pub end: Angle,
}

impl Arc {
    pub fn length(&self) -> Rational {
        self.start.ccw_to(&self.end)
    }

    /// Whether `angle` lies in the closed arc.
    pub fn contains_closed(&self, angle: &Angle) -> bool {
        self.start.ccw_to(angle) <= self.length()
    }

    /// Whether `angle` lies in the open arc.
    pub fn contains_open(&self, angle: &Angle) -> bool {
        let offset = self.start.ccw_to(angle);
        let len = self.length();
        if len.is_zero() {
            // circle minus a point
            return !offset.is_zero();
        }
        offset.is_positive() && offset < len
    }
}

/// Union of pairwise disjoint open arcs, sorted by start angle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRegion {
    pub arcs: Vec<Arc>,
    /// The open arcs cover the whole circle (only possible for non-members).
    pub covers_circle: bool,
}

impl ExcludedRegion {
    pub fn contains(&self, angle: &Angle) -> bool {
        self.covers_circle || self.arcs.iter().any(|a| a.contains_open(angle))
    }
}

/// Open interval `(start, start + len)` in turns relative to a cut point.
#[derive(Debug, Clone)]
struct Interval {
    start: Rational,
    end: Rational,
}

/// Excluded open intervals of every support atom, as `(start, len)` in
/// absolute turns.
fn excluded_starts(measure: &CircleMeasure, r: &Length) -> (Vec<Rational>, Rational) {
    let len = Rational::one() - r.turns() * rational::int(2);
    let starts = measure
        .support()
        .map(|theta| rational::modulo(&(theta.turns() + r.turns()), &Rational::one()))
        .collect();
    (starts, len)
}

/// Merges the excluded intervals into disjoint open intervals inside
/// `[0, 1]`, with coordinates relative to `cut`, which must be uncovered.
fn merged_relative(starts: &[Rational], len: &Rational, cut: &Rational) -> Vec<Interval> {
    let mut intervals: Vec<Interval> = starts
        .iter()
        .map(|s| {
            let start = rational::modulo(&(s - cut), &Rational::one());
            let end = &start + len;
            debug_assert!(end <= Rational::one(), "cut point must be uncovered");
            Interval { start, end }
        })
        .collect();
    intervals.sort_by(|a, b| a.start.cmp(&b.start));
    let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
    for iv in intervals {
        match merged.last_mut() {
            // open intervals that only touch leave their common endpoint uncovered
            Some(last) if iv.start < last.end => {
                if iv.end > last.end {
                    last.end = iv.end;
                }
            }
            _ => merged.push(iv),
        }
    }
    merged
}

fn covered(starts: &[Rational], len: &Rational, point: &Rational) -> bool {
    starts.iter().any(|s| {
        let offset = rational::modulo(&(point - s), &Rational::one());
        offset.is_positive() && offset < *len
    })
}

/// The excluded region `E(μ)` at scale `r`.
pub fn excluded_region(measure: &CircleMeasure, r: &Length) -> Result<ExcludedRegion> {
    check_scale(r)?;
    let (starts, len) = excluded_starts(measure, r);
    // The complement, if nonempty, contains the right endpoint of some
    // excluded interval.
    let cut = starts
        .iter()
        .map(|s| rational::modulo(&(s + &len), &Rational::one()))
        .find(|e| !covered(&starts, &len, e));
    let Some(cut) = cut else {
        return Ok(ExcludedRegion {
            arcs: Vec::new(),
            covers_circle: true,
        });
    };
    let mut arcs: Vec<Arc> = merged_relative(&starts, &len, &cut)
        .into_iter()
        .map(|iv| Arc {
            start: Angle::from_turns(&iv.start + &cut),
            end: Angle::from_turns(&iv.end + &cut),
        })
        .collect();
    arcs.sort_by(|a, b| a.start.cmp(&b.start));
    Ok(ExcludedRegion {
        arcs,
        covers_circle: false,
    })
}

/// One μ-arc with the atoms it carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuArc {
    /// The closed component of the complement of `E(μ)`.
    pub arc: Arc,
    /// Smallest closed arc inside `arc` holding every atom of this arc.
    pub cluster: Arc,
    #[serde(with = "rational::serde_str")]
    pub mass: Rational,
    /// `(position, weight)` of each atom, positions lifted to a real line so
    /// that they increase counterclockwise across all arcs in label order.
    #[serde(skip)]
    lifted: Vec<(Rational, Rational)>,
}

impl MuArc {
    pub fn lifted_atoms(&self) -> &[(Rational, Rational)] {
        &self.lifted
    }
}

/// The μ-arcs at scale `r`, listed counterclockwise.
///
/// Arc 0 is the arc holding the atom of smallest angle in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDecomposition {
    pub arcs: Vec<MuArc>,
    pub stratum_k: usize,
}

impl ArcDecomposition {
    pub fn count(&self) -> usize {
        self.arcs.len()
    }

    pub fn masses(&self) -> Vec<Rational> {
        self.arcs.iter().map(|a| a.mass.clone()).collect()
    }
}

/// The μ-arcs of a member measure.
pub fn arcs(measure: &CircleMeasure, r: &Length) -> Result<ArcDecomposition> {
    check_member(measure, r)?;
    let (starts, len) = excluded_starts(measure, r);
    // the first support atom is never excluded
    let cut = measure.atoms()[0].angle.turns().clone();
    let merged = merged_relative(&starts, &len, &cut);
    let one = Rational::one();

    // Complement components, relative to the cut: the wrap component
    // [last.end - 1, first.start] and the gaps between merged intervals.
    let first_start = merged.first().map(|iv| iv.start.clone()).unwrap_or_else(|| one.clone());
    let last_end = merged.last().map(|iv| iv.end.clone()).unwrap_or_else(Rational::zero);
    let mut components: Vec<(Rational, Rational)> = vec![(last_end - &one, first_start)];
    for pair in merged.windows(2) {
        components.push((pair[0].end.clone(), pair[1].start.clone()));
    }

    let mut buckets: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); components.len()];
    for atom in measure.atoms() {
        let mut x = rational::modulo(&(atom.angle.turns() - &cut), &one);
        if x >= &components[0].0 + &one {
            x -= &one;
        }
        let idx = if x <= components[0].1 {
            0
        } else {
            components
                .iter()
                .position(|(lo, hi)| *lo <= x && x <= *hi)
                .expect("support atoms lie outside the excluded region")
        };
        buckets[idx].push((x, atom.weight.clone()));
    }

    let mut arcs = Vec::new();
    for ((lo, hi), mut atoms) in components.into_iter().zip(buckets) {
        if atoms.is_empty() {
            continue;
        }
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let cluster = Arc {
            start: Angle::from_turns(&atoms[0].0 + &cut),
            end: Angle::from_turns(&atoms[atoms.len() - 1].0 + &cut),
        };
        let mass: Rational = atoms.iter().map(|(_, w)| w).sum();
        let lifted = atoms.into_iter().map(|(x, w)| (x + &cut, w)).collect();
        arcs.push(MuArc {
            arc: Arc {
                start: Angle::from_turns(lo + &cut),
                end: Angle::from_turns(hi + &cut),
            },
            cluster,
            mass,
            lifted,
        });
    }
    debug_assert!(arcs.len() % 2 == 1, "μ-arc count is odd");
    let stratum_k = arcs.len() / 2;
    Ok(ArcDecomposition { arcs, stratum_k })
}

pub fn stratum(measure: &CircleMeasure, r: &Length) -> Result<usize> {
    arcs(measure, r).map(|d| d.stratum_k)
}

/// The largest stratum present at scale `r`: `⌊r / (2π − 2r)⌋`.
pub fn max_stratum(r: &Length) -> Result<usize> {
    check_scale(r)?;
    let denom = Rational::one() - r.turns() * rational::int(2);
    let k = (r.turns() / denom).floor();
    Ok(k.to_integer().to_usize().expect("stratum fits in usize"))
}

/// A measure `Σ aⱼ δ_{base + j/(2k+1)}` on the vertices of a regular
/// `(2k+1)`-gon.
///
/// The base is canonical in `[0, 1/(2k+1))` turns; the weights are rotated
/// to match. Two values are equal iff they are the same measure with the
/// same vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon", into = "RawPolygon")]
pub struct RegularPolygonalMeasure {
    k: usize,
    base: Angle,
    weights: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawPolygon {
    k: usize,
    #[serde(rename = "base_turns", with = "angle_str")]
    base: Angle,
    weights: Vec<String>,
}

impl TryFrom<RawPolygon> for RegularPolygonalMeasure {
    type Error = Error;
    fn try_from(raw: RawPolygon) -> Result<Self> {
        let weights = raw
            .weights
            .iter()
            .map(|w| rational::parse(w))
            .collect::<Result<Vec<_>>>()?;
        RegularPolygonalMeasure::new(raw.k, raw.base, weights)
    }
}

impl From<RegularPolygonalMeasure> for RawPolygon {
    fn from(p: RegularPolygonalMeasure) -> Self {
        RawPolygon {
            k: p.k,
            base: p.base,
            weights: p.weights.iter().map(rational::format).collect(),
        }
    }
}

impl RegularPolygonalMeasure {
    pub fn new(k: usize, base: Angle, weights: Vec<Rational>) -> Result<Self> {
        let n = 2 * k + 1;
        if weights.len() != n {
            return Err(Error::InvalidMeasure(format!(
                "a {n}-gon needs {n} weights, got {}",
                weights.len()
            )));
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidMeasure("negative polygon weight".into()));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!(
                "polygon weights sum to {}",
                rational::format(&total)
            )));
        }
        let period = rational::ratio(1, n as i64);
        let steps = (base.turns() / &period).floor().to_integer();
        let shift = steps.mod_floor(&(n.into())).to_usize().expect("shift < n");
        let canonical = base.reduce_mod(&period);
        let mut rotated = vec![Rational::zero(); n];
        for (j, w) in weights.into_iter().enumerate() {
            rotated[(j + shift) % n] = w;
        }
        Ok(RegularPolygonalMeasure {
            k,
            base: canonical,
            weights: rotated,
        })
    }

    /// The uniform `(2k+1)`-gon, a point of the circle `S¹_{2k+1}`.
    pub fn uniform(k: usize, base: Angle) -> Self {
        let n = 2 * k + 1;
        Self::new(k, base, vec![rational::ratio(1, n as i64); n]).expect("uniform weights")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.k + 1
    }

    pub fn base(&self) -> &Angle {
        &self.base
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn vertex(&self, j: usize) -> Angle {
        &self.base + &Angle::frac(j as i64, self.vertex_count() as i64)
    }

    /// All weights positive: a point of the open stratum `P_{2k+1}`.
    pub fn is_interior(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    pub fn is_uniform(&self) -> bool {
        self.weights.iter().all(|w| *w == self.weights[0])
    }

    pub fn to_measure(&self) -> CircleMeasure {
        CircleMeasure::new(
            self.weights
                .iter()
                .enumerate()
                .filter(|(_, w)| w.is_positive())
                .map(|(j, w)| (self.vertex(j), w.clone())),
        )
        .expect("polygon weights form a probability vector")
    }
}

/// The averaging map, cutting the circle at the gap before arc 0.
pub fn average(measure: &CircleMeasure, r: &Length) -> Result<RegularPolygonalMeasure> {
    let decomposition = arcs(measure, r)?;
    Ok(average_with_cut(&decomposition, 0))
}

/// The averaging map with the cut placed in the gap just before arc `cut`,
/// which then becomes arc 0. Every choice yields the same measure.
pub fn average_with_cut(decomposition: &ArcDecomposition, cut: usize) -> RegularPolygonalMeasure {
    let n = decomposition.count();
    assert!(cut < n, "cut index out of range");
    let one = Rational::one();
    let mut m = Rational::zero();
    let mut weights = vec![Rational::zero(); n];
    for (j, arc) in decomposition.arcs.iter().enumerate() {
        let label = (j + n - cut) % n;
        let offset = rational::ratio(label as i64, n as i64);
        let wrap = if j < cut { one.clone() } else { Rational::zero() };
        for (x, w) in arc.lifted_atoms() {
            m += w * (x + &wrap - &offset);
        }
        weights[label] = arc.mass.clone();
    }
    RegularPolygonalMeasure::new(decomposition.stratum_k, Angle::from_turns(m), weights)
        .expect("arc masses form a probability vector")
}

/// Whether the quotient identifies `mu` and `nu` at scale `r`.
pub fn quotient_eq(mu: &CircleMeasure, nu: &CircleMeasure, r: &Length) -> Result<bool> {
    let a = average(mu, r)?;
    let b = average(nu, r)?;
    Ok(a == b)
}

/// `ρ = (1 − t)·ν + t·(uniform polygon at ρ's base)` with `t = (2k+1)·min aⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDecomposition {
    #[serde(with = "rational::serde_str")]
    pub t: Rational,
    /// `ν`, on the boundary of the simplex; absent when `t = 1`.
    pub boundary: Option<RegularPolygonalMeasure>,
    #[serde(rename = "base_turns", with = "angle_str")]
    pub base: Angle,
}

impl PolygonDecomposition {
    /// Reassembles `(1 − t)·ν + t·uniform`.
    pub fn recombine(&self, k: usize) -> RegularPolygonalMeasure {
        let n = 2 * k + 1;
        let uniform_share = &self.t / rational::int(n as i64);
        let rest = Rational::one() - &self.t;
        let weights = (0..n)
            .map(|j| {
                let from_boundary = self
                    .boundary
                    .as_ref()
                    .map(|b| &b.weights[j] * &rest)
                    .unwrap_or_else(Rational::zero);
                from_boundary + &uniform_share
            })
            .collect();
        RegularPolygonalMeasure::new(k, self.base.clone(), weights).expect("convex combination")
    }
}

pub fn polygon_decompose(rho: &RegularPolygonalMeasure) -> PolygonDecomposition {
    let n = rho.vertex_count();
    let min = rho.weights.iter().min().expect("nonempty").clone();
    let t = &min * rational::int(n as i64);
    let boundary = if t.is_one() {
        None
    } else {
        let rest = Rational::one() - &t;
        let weights = rho.weights.iter().map(|w| (w - &min) / &rest).collect();
        Some(
            RegularPolygonalMeasure::new(rho.k, rho.base.clone(), weights)
                .expect("boundary weights form a probability vector"),
        )
    };
    PolygonDecomposition {
        t,
        boundary,
        base: rho.base.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rotate;
    use crate::rational::ratio;

    fn three_clusters() -> CircleMeasure {
        CircleMeasure::new([
            (Angle::zero(), ratio(2, 5)),
            (Angle::frac(41, 120), ratio(3, 10)),
            (Angle::frac(79, 120), ratio(3, 10)),
        ])
        .unwrap()
    }

    fn r22() -> Length {
        Length::from_radians(2.2).unwrap()
    }

    #[test]
    fn excluded_region_of_a_dirac() {
        let e = excluded_region(&CircleMeasure::dirac(Angle::zero()), &Length::frac(1, 4)).unwrap();
        assert_eq!(
            e.arcs,
            vec![Arc {
                start: Angle::frac(1, 4),
                end: Angle::frac(3, 4)
            }]
        );
    }

    #[test]
    fn excluded_region_of_odd_polygons_misses_only_vertices() {
        for (k, n) in [(1, 3i64), (2, 5)] {
            let poly = CircleMeasure::uniform_polygon(n as u64, &Angle::zero());
            let r = Length::frac(k, n);
            let e = excluded_region(&poly, &r).unwrap();
            assert_eq!(e.arcs.len(), n as usize);
            for (j, arc) in e.arcs.iter().enumerate() {
                assert_eq!(arc.start, Angle::frac(j as i64, n));
                assert_eq!(arc.end, Angle::frac(j as i64 + 1, n));
                // centred on an antipode of a vertex
                let mid = &arc.start + &Angle::frac(1, 2 * n);
                assert!(poly
                    .support()
                    .any(|v| (v + &Angle::frac(1, 2)) == mid));
            }
            for v in poly.support() {
                assert!(!e.contains(v));
            }
        }
    }

    #[test]
    fn excluded_region_rejects_large_scale() {
        let d = CircleMeasure::dirac(Angle::zero());
        assert!(matches!(
            excluded_region(&d, &Length::pi()),
            Err(Error::ScaleTooLarge(_))
        ));
    }

    #[test]
    fn dirac_has_one_arc() {
        for r in [Length::zero(), Length::frac(1, 4), Length::frac(49, 100)] {
            let d = arcs(&CircleMeasure::dirac(Angle::zero()), &r).unwrap();
            assert_eq!(d.count(), 1);
            assert_eq!(d.stratum_k, 0);
            assert_eq!(d.arcs[0].mass, Rational::one());
            assert_eq!(
                d.arcs[0].cluster,
                Arc {
                    start: Angle::zero(),
                    end: Angle::zero()
                }
            );
            assert!(d.arcs[0].arc.contains_closed(&Angle::zero()));
        }
    }

    #[test]
    fn pentagon_arcs_are_singletons() {
        let poly = CircleMeasure::uniform_polygon(5, &Angle::zero());
        let d = arcs(&poly, &Length::frac(2, 5)).unwrap();
        assert_eq!(d.stratum_k, 2);
        for (j, a) in d.arcs.iter().enumerate() {
            assert_eq!(a.arc.start, Angle::frac(j as i64, 5));
            assert_eq!(a.arc.length(), Rational::zero());
            assert_eq!(a.mass, ratio(1, 5));
        }
    }

    #[test]
    fn three_cluster_example() {
        let d = arcs(&three_clusters(), &r22()).unwrap();
        assert_eq!(d.masses(), vec![ratio(2, 5), ratio(3, 10), ratio(3, 10)]);
        assert_eq!(d.stratum_k, 1);
        assert_eq!(stratum(&CircleMeasure::dirac(Angle::zero()), &r22()).unwrap(), 0);
    }

    #[test]
    fn rejects_non_members() {
        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert!(matches!(
            arcs(&tri, &Length::from_radians(2.0).unwrap()),
            Err(Error::NotMember { .. })
        ));
    }

    #[test]
    fn max_stratum_examples() {
        assert_eq!(max_stratum(&Length::frac(1, 3)).unwrap(), 1);
        assert_eq!(max_stratum(&Length::zero()).unwrap(), 0);
        assert_eq!(max_stratum(&Length::frac(2, 5)).unwrap(), 2);
        assert!(max_stratum(&Length::pi()).is_err());
    }

    #[test]
    fn average_examples() {
        let pair = CircleMeasure::new([
            (Angle::zero(), ratio(1, 2)),
            (Angle::frac(1, 10), ratio(1, 2)),
        ])
        .unwrap();
        let r = Length::from_radians(1.0).unwrap();
        let avg = average(&pair, &r).unwrap();
        assert_eq!(avg.to_measure(), CircleMeasure::dirac(Angle::frac(1, 20)));

        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert_eq!(average(&tri, &r22()).unwrap(), RegularPolygonalMeasure::uniform(1, Angle::zero()));

        let mu = three_clusters();
        let turn = Angle::frac(1, 7);
        let lhs = average(&rotate(&mu, &turn), &r22()).unwrap().to_measure();
        let rhs = rotate(&average(&mu, &r22()).unwrap().to_measure(), &turn);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn three_cluster_average_by_hand() {
        // lifted angles 0, 41/120, 79/120; m = 3/10·(41/120 − 1/3) + 3/10·(79/120 − 2/3) = 0
        let avg = average(&three_clusters(), &r22()).unwrap();
        assert_eq!(avg.base(), &Angle::zero());
        assert_eq!(avg.weights(), &[ratio(2, 5), ratio(3, 10), ratio(3, 10)]);
    }

    #[test]
    fn quotient_examples() {
        let r = Length::from_radians(1.0).unwrap();
        let pair = CircleMeasure::new([
            (Angle::frac(-1, 50), ratio(1, 2)),
            (Angle::frac(1, 50), ratio(1, 2)),
        ])
        .unwrap();
        let d0 = CircleMeasure::dirac(Angle::zero());
        assert!(quotient_eq(&pair, &d0, &r).unwrap());
        assert!(!quotient_eq(&d0, &CircleMeasure::dirac(Angle::frac(1, 20)), &r).unwrap());
        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert!(!quotient_eq(&d0, &tri, &r22()).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let u = polygon_decompose(&RegularPolygonalMeasure::uniform(1, Angle::zero()));
        assert_eq!(u.t, Rational::one());
        assert!(u.boundary.is_none());

        let rho = RegularPolygonalMeasure::new(1, Angle::zero(), vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]).unwrap();
        let d = polygon_decompose(&rho);
        assert_eq!(d.t, ratio(3, 4));
        assert_eq!(
            d.boundary.as_ref().unwrap().to_measure(),
            CircleMeasure::dirac(Angle::zero())
        );
        assert_eq!(d.recombine(1), rho);

        let rho = RegularPolygonalMeasure::new(1, Angle::zero(), vec![ratio(1, 2), ratio(3, 10), ratio(1, 5)]).unwrap();
        let d = polygon_decompose(&rho);
        assert_eq!(d.t, ratio(3, 5));
        assert_eq!(
            d.boundary.as_ref().unwrap().weights(),
            &[ratio(3, 4), ratio(1, 4), Rational::zero()]
        );
        assert_eq!(d.recombine(1), rho);
    }

    #[test]
    fn polygon_base_is_canonical() {
        let a = RegularPolygonalMeasure::new(1, Angle::frac(1, 2), vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]).unwrap();
        assert_eq!(a.base(), &Angle::frac(1, 6));
        assert_eq!(a.weights(), &[ratio(1, 6), ratio(1, 2), ratio(1, 3)]);
        let b = RegularPolygonalMeasure::new(1, Angle::frac(1, 6), a.weights().to_vec()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_measure(), b.to_measure());
    }

    #[test]
    fn polygon_json_round_trip() {
        let a = RegularPolygonalMeasure::new(1, Angle::frac(1, 2), vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"k":1,"base_turns":"1/6","weights":["1/6","1/2","1/3"]}"#);
        assert_eq!(serde_json::from_str::<RegularPolygonalMeasure>(&text).unwrap(), a);
    }
}
