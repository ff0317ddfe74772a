//! Finitely supported probability measures on the circle.
//!
//! Angles and lengths are exact rationals measured in turns: one full turn
//! is 2π radians, so π is `1/2`. Every structural predicate in this crate
//! (membership, arc boundaries, quotient equality) is decided on these
//! rationals. Radians only appear through the `radians()` views and the
//! snapping constructors.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A point of the circle, stored as its representative in `[0, 1)` turns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Rational);

impl Angle {
    pub fn zero() -> Self {
        Angle(Rational::zero())
    }

    pub fn from_turns(turns: Rational) -> Self {
        Angle(rational::modulo(&turns, &Rational::one()))
    }

    /// `numer/denom` of a turn.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::from_turns(rational::ratio(numer, denom))
    }

    /// Snaps a radian value to a nearby rational number of turns.
    pub fn from_radians(radians: f64) -> Result<Self> {
        rational::snap_f64(radians / std::f64::consts::TAU)
            .map(Self::from_turns)
            .ok_or_else(|| Error::Parse {
                what: "angle",
                input: radians.to_string(),
            })
    }

    pub fn turns(&self) -> &Rational {
        &self.0
    }

    pub fn radians(&self) -> f64 {
        rational::to_f64(&self.0) * std::f64::consts::TAU
    }

    /// Canonical representative modulo `period` turns, in `[0, period)`.
    pub fn reduce_mod(&self, period: &Rational) -> Self {
        Angle(rational::modulo(&self.0, period))
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)` turns.
    pub fn ccw_to(&self, other: &Angle) -> Rational {
        rational::modulo(&(&other.0 - &self.0), &Rational::one())
    }
}

impl Add<&Angle> for &Angle {
    type Output = Angle;
    fn add(self, rhs: &Angle) -> Angle {
        Angle::from_turns(&self.0 + &rhs.0)
    }
}

impl Sub<&Angle> for &Angle {
    type Output = Angle;
    fn sub(self, rhs: &Angle) -> Angle {
        Angle::from_turns(&self.0 - &rhs.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} turns", rational::format(&self.0))
    }
}

/// A nonnegative length (scale, distance, diameter) in turns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Length(Rational);

impl Length {
    pub fn zero() -> Self {
        Length(Rational::zero())
    }

    /// Half a turn.
    pub fn pi() -> Self {
        Length(rational::ratio(1, 2))
    }

    pub fn from_turns(turns: Rational) -> Result<Self> {
        if turns.is_negative() {
            return Err(Error::Parse {
                what: "nonnegative length",
                input: rational::format(&turns),
            });
        }
        Ok(Length(turns))
    }

    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::from_turns(rational::ratio(numer, denom)).expect("nonnegative fraction")
    }

    /// Snaps a radian value to a nearby rational number of turns
    /// (within 1e-12 radians).
    pub fn from_radians(radians: f64) -> Result<Self> {
        let turns = rational::snap_f64(radians / std::f64::consts::TAU).ok_or_else(|| {
            Error::Parse {
                what: "length",
                input: radians.to_string(),
            }
        })?;
        Self::from_turns(turns)
    }

    pub fn turns(&self) -> &Rational {
        &self.0
    }

    pub fn radians(&self) -> f64 {
        rational::to_f64(&self.0) * std::f64::consts::TAU
    }

    pub fn is_below_pi(&self) -> bool {
        self.0 < rational::ratio(1, 2)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} turns", rational::format(&self.0))
    }
}

impl Serialize for Length {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_str::serialize(self.turns(), s)
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let turns = crate::rational::serde_str::deserialize(d)?;
        Length::from_turns(turns).map_err(serde::de::Error::custom)
    }
}

/// A weighted point mass.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Atom {
    #[serde(rename = "turns", with = "angle_str")]
    pub angle: Angle,
    #[serde(with = "rational::serde_str")]
    pub weight: Rational,
}

/// A finitely supported probability measure `Σ aⱼ δ_{θⱼ}` on the circle.
///
/// Atoms are sorted strictly by angle, weights are positive and sum to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMeasure", into = "RawMeasure")]
pub struct CircleMeasure {
    atoms: Vec<Atom>,
}

#[derive(Serialize, Deserialize)]
struct RawMeasure {
    atoms: Vec<Atom>,
}

impl TryFrom<RawMeasure> for CircleMeasure {
    type Error = Error;
    fn try_from(raw: RawMeasure) -> Result<Self> {
        CircleMeasure::new(raw.atoms.into_iter().map(|a| (a.angle, a.weight)))
    }
}

impl From<CircleMeasure> for RawMeasure {
    fn from(m: CircleMeasure) -> Self {
        RawMeasure { atoms: m.atoms }
    }
}

impl CircleMeasure {
    /// Builds a measure, merging atoms that share an angle.
    pub fn new(atoms: impl IntoIterator<Item = (Angle, Rational)>) -> Result<Self> {
        let mut atoms: Vec<Atom> = atoms
            .into_iter()
            .map(|(angle, weight)| Atom { angle, weight })
            .collect();
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        if let Some(bad) = atoms.iter().find(|a| !a.weight.is_positive()) {
            return Err(Error::InvalidMeasure(format!(
                "weight {} is not positive",
                rational::format(&bad.weight)
            )));
        }
        atoms.sort_by(|a, b| a.angle.cmp(&b.angle));
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for atom in atoms {
            match merged.last_mut() {
                Some(last) if last.angle == atom.angle => last.weight += atom.weight,
                _ => merged.push(atom),
            }
        }
        let total: Rational = merged.iter().map(|a| &a.weight).sum();
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(CircleMeasure { atoms: merged })
    }

    pub fn dirac(angle: Angle) -> Self {
        CircleMeasure {
            atoms: vec![Atom {
                angle,
                weight: Rational::one(),
            }],
        }
    }

    /// Uniform measure on the `vertices` evenly spaced points starting at `base`.
    pub fn uniform_polygon(vertices: u64, base: &Angle) -> Self {
        assert!(vertices > 0);
        let n = vertices as i64;
        let weight = rational::ratio(1, n);
        Self::new((0..n).map(|j| (base + &Angle::frac(j, n), weight.clone())))
            .expect("uniform weights sum to one")
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn support(&self) -> impl Iterator<Item = &Angle> {
        self.atoms.iter().map(|a| &a.angle)
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn diameter(&self) -> Length {
        diameter(self)
    }
}

/// Intrinsic distance on the circle, in `[0, 1/2]` turns.
pub fn geodesic_distance(a: &Angle, b: &Angle) -> Length {
    let forward = a.ccw_to(b);
    let backward = Rational::one() - &forward;
    Length(forward.min(backward))
}

/// Largest pairwise geodesic distance over the support.
pub fn diameter(measure: &CircleMeasure) -> Length {
    let atoms = measure.atoms();
    let mut best = Length::zero();
    for (i, a) in atoms.iter().enumerate() {
        for b in &atoms[i + 1..] {
            let d = geodesic_distance(&a.angle, &b.angle);
            if d > best {
                best = d;
            }
        }
    }
    best
}

/// Membership in the Vietoris–Rips thickening at scale `r` (closed condition).
pub fn vr_member(measure: &CircleMeasure, r: &Length) -> bool {
    diameter(measure) <= *r
}

/// The circle action: every atom moves counterclockwise by `theta`.
pub fn rotate(measure: &CircleMeasure, theta: &Angle) -> CircleMeasure {
    CircleMeasure::new(
        measure
            .atoms()
            .iter()
            .map(|a| (&a.angle + theta, a.weight.clone())),
    )
    .expect("rotation preserves validity")
}

/// 1-Wasserstein distance with geodesic ground cost.
///
/// On the circle `W1(μ, ν) = min_c ∫ |F_μ − F_ν − c|` over the cumulative
/// distribution functions cut at angle 0. The integrand is piecewise
/// constant, so the optimal shift is a weighted median of its values.
pub fn w1_distance(mu: &CircleMeasure, nu: &CircleMeasure) -> Length {
    let mut events: Vec<(&Rational, Rational)> = mu
        .atoms()
        .iter()
        .map(|a| (a.angle.turns(), a.weight.clone()))
        .chain(nu.atoms().iter().map(|a| (a.angle.turns(), -&a.weight)))
        .collect();
    events.sort_by(|a, b| a.0.cmp(b.0));

    // (value of F_μ − F_ν, length of the segment where it holds)
    let mut segments: Vec<(Rational, Rational)> = Vec::with_capacity(events.len() + 1);
    let mut cumulative = Rational::zero();
    let mut position = Rational::zero();
    for (at, delta) in events {
        if *at > position {
            segments.push((cumulative.clone(), at - &position));
            position = at.clone();
        }
        cumulative += delta;
    }
    segments.push((cumulative, Rational::one() - position));

    segments.sort_by(|a, b| a.0.cmp(&b.0));
    let half = rational::ratio(1, 2);
    let mut acc = Rational::zero();
    let mut median = Rational::zero();
    for (value, len) in &segments {
        acc += len;
        if acc >= half {
            median = value.clone();
            break;
        }
    }
    let cost: Rational = segments
        .iter()
        .map(|(value, len)| (value - &median).abs() * len)
        .sum();
    Length(cost)
}

pub(crate) mod angle_str {
    use super::Angle;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Angle, s: S) -> Result<S::Ok, S::Error> {
        crate::rational::serde_str::serialize(value.turns(), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Angle, D::Error> {
        crate::rational::serde_str::deserialize(d).map(Angle::from_turns)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn two_point(a: Angle, b: Angle) -> CircleMeasure {
        CircleMeasure::new([(a, ratio(1, 2)), (b, ratio(1, 2))]).unwrap()
    }

    #[test]
    fn geodesic_examples() {
        assert_eq!(
            geodesic_distance(&Angle::zero(), &Angle::frac(1, 2)),
            Length::pi()
        );
        assert_eq!(
            geodesic_distance(&Angle::zero(), &Angle::frac(3, 4)),
            Length::frac(1, 4)
        );
        let a = Angle::from_radians(0.3).unwrap();
        assert_eq!(geodesic_distance(&a, &a), Length::zero());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(CircleMeasure::dirac(Angle::zero()).diameter(), Length::zero());
        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert_eq!(tri.diameter(), Length::frac(1, 3));
        let third = ratio(1, 3);
        let m = CircleMeasure::new([
            (Angle::zero(), third.clone()),
            (Angle::frac(1, 4), third.clone()),
            (Angle::frac(1, 2), third),
        ])
        .unwrap();
        assert_eq!(m.diameter(), Length::pi());
    }

    #[test]
    fn membership_is_closed() {
        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert!(vr_member(&tri, &Length::frac(1, 3)));
        assert!(!vr_member(&tri, &Length::from_radians(2.0).unwrap()));
        assert!(vr_member(&CircleMeasure::dirac(Angle::frac(1, 7)), &Length::zero()));
    }

    #[test]
    fn rotation_examples() {
        let d0 = CircleMeasure::dirac(Angle::zero());
        assert_eq!(
            rotate(&d0, &Angle::frac(1, 2)),
            CircleMeasure::dirac(Angle::frac(1, 2))
        );
        let tri = CircleMeasure::uniform_polygon(3, &Angle::zero());
        assert_eq!(rotate(&tri, &Angle::frac(1, 3)), tri);
    }

    #[test]
    fn duplicate_atoms_merge() {
        let m = CircleMeasure::new([
            (Angle::frac(1, 5), ratio(1, 4)),
            (Angle::frac(6, 5), ratio(1, 4)),
            (Angle::zero(), ratio(1, 2)),
        ])
        .unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.atoms()[1].weight, ratio(1, 2));
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(CircleMeasure::new([(Angle::zero(), ratio(1, 2))]).is_err());
        assert!(CircleMeasure::new([
            (Angle::zero(), ratio(3, 2)),
            (Angle::frac(1, 3), ratio(-1, 2))
        ])
        .is_err());
        assert!(CircleMeasure::new(Vec::new()).is_err());
    }

    #[test]
    fn w1_examples() {
        let d0 = CircleMeasure::dirac(Angle::zero());
        let dpi = CircleMeasure::dirac(Angle::frac(1, 2));
        assert_eq!(w1_distance(&d0, &dpi), Length::pi());
        let a = two_point(Angle::zero(), Angle::frac(1, 2));
        let b = two_point(Angle::frac(1, 4), Angle::frac(3, 4));
        assert_eq!(w1_distance(&a, &b), Length::frac(1, 4));
        assert_eq!(w1_distance(&a, &a), Length::zero());
    }

    #[test]
    fn json_shape() {
        let m = two_point(Angle::zero(), Angle::frac(1, 3));
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"atoms":[{"turns":"0/1","weight":"1/2"},{"turns":"1/3","weight":"1/2"}]}"#
        );
        let back: CircleMeasure = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<CircleMeasure>(
            r#"{"atoms":[{"turns":"0/1","weight":"1/3"}]}"#
        )
        .is_err());
    }
}
