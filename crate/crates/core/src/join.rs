//! Join coordinates on `S¹₁ ∗ S¹₃ ∗ ⋯ ∗ S¹_{2k+1}`.
//!
//! A point of the join is a convex combination `Σ t_{2l+1} μ_{2l+1}` where
//! `μ_{2l+1}` is a uniform `(2l+1)`-gon, parametrized by its base angle
//! modulo `1/(2l+1)` turns. [`phi`] sends a measure to these coordinates by
//! repeatedly averaging and peeling off the largest uniform polygon.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arcs::{self, polygon_decompose};
use crate::error::{Error, Result};
use crate::measure::{geodesic_distance, CircleMeasure, Length, Angle};
use crate::rational::{self, Rational};

/// One nonzero join coordinate: weight `t` on the circle of uniform
/// `index`-gons, at the given base angle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinComponent {
    pub index: u64,
    pub t: Rational,
    pub base: Angle,
}

/// A point of the odd join sphere, stored sparsely.
///
/// Only positive coefficients are kept, sorted by index, with bases
/// canonical modulo `1/index`. Points of `S^{2k+1}` and of a larger sphere
/// containing it compare equal when they agree up to zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawJoinPoint", into = "RawJoinPoint")]
pub struct JoinPoint {
    components: Vec<JoinComponent>,
}

#[derive(Serialize, Deserialize)]
struct RawComponent {
    index: u64,
    t: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    base_turns: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawJoinPoint {
    components: Vec<RawComponent>,
}

impl TryFrom<RawJoinPoint> for JoinPoint {
    type Error = Error;
    fn try_from(raw: RawJoinPoint) -> Result<Self> {
        let mut parts = Vec::new();
        for c in raw.components {
            let t = rational::parse(&c.t)?;
            match (t.is_zero(), c.base_turns) {
                (true, None) => {}
                (true, Some(_)) => {
                    return Err(Error::InvalidJoinPoint(format!(
                        "component {} has zero weight but a base",
                        c.index
                    )))
                }
                (false, Some(b)) => parts.push((c.index, t, Angle::from_turns(rational::parse(&b)?))),
                (false, None) => {
                    return Err(Error::InvalidJoinPoint(format!(
                        "component {} has weight but no base",
                        c.index
                    )))
                }
            }
        }
        JoinPoint::new(parts)
    }
}

impl From<JoinPoint> for RawJoinPoint {
    /// Dense listing of every odd index up to the largest nonzero one.
    fn from(p: JoinPoint) -> Self {
        let top = p.top_index();
        let mut components = Vec::new();
        let mut it = p.components.into_iter().peekable();
        for index in (1..=top).step_by(2) {
            match it.peek() {
                Some(c) if c.index == index => {
                    let c = it.next().unwrap();
                    components.push(RawComponent {
                        index,
                        t: rational::format(&c.t),
                        base_turns: Some(rational::format(c.base.turns())),
                    });
                }
                _ => components.push(RawComponent {
                    index,
                    t: "0/1".into(),
                    base_turns: None,
                }),
            }
        }
        RawJoinPoint { components }
    }
}

impl JoinPoint {
    /// Builds a point from `(odd index, coefficient, base)` triples.
    pub fn new(parts: impl IntoIterator<Item = (u64, Rational, Angle)>) -> Result<Self> {
        let mut map: BTreeMap<u64, (Rational, Angle)> = BTreeMap::new();
        for (index, t, base) in parts {
            if index % 2 == 0 {
                return Err(Error::InvalidJoinPoint(format!("index {index} is even")));
            }
            if t.is_negative() {
                return Err(Error::InvalidJoinPoint("negative coefficient".into()));
            }
            if t.is_zero() {
                continue;
            }
            if map.insert(index, (t, base)).is_some() {
                return Err(Error::InvalidJoinPoint(format!("index {index} repeated")));
            }
        }
        let total: Rational = map.values().map(|(t, _)| t).sum();
        if !total.is_one() {
            return Err(Error::InvalidJoinPoint(format!(
                "coefficients sum to {}",
                rational::format(&total)
            )));
        }
        let components = map
            .into_iter()
            .map(|(index, (t, base))| JoinComponent {
                index,
                t,
                base: base.reduce_mod(&rational::ratio(1, index as i64)),
            })
            .collect();
        Ok(JoinPoint { components })
    }

    /// The point of `S¹_index` with all weight there.
    pub fn vertex(index: u64, base: Angle) -> Result<Self> {
        Self::new([(index, Rational::one(), base)])
    }

    pub fn components(&self) -> &[JoinComponent] {
        &self.components
    }

    pub fn coefficient(&self, index: u64) -> Rational {
        self.components
            .iter()
            .find(|c| c.index == index)
            .map(|c| c.t.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn base(&self, index: u64) -> Option<&Angle> {
        self.components.iter().find(|c| c.index == index).map(|c| &c.base)
    }

    /// Largest index with a positive coefficient.
    pub fn top_index(&self) -> u64 {
        self.components.last().map(|c| c.index).unwrap_or(1)
    }
}

/// One peeling step of [`phi`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiStep {
    pub stratum_k: usize,
    /// Fraction of the current remainder carried by the uniform polygon.
    #[serde(with = "rational::serde_str")]
    pub t: Rational,
    #[serde(rename = "base_turns", with = "crate::measure::angle_str")]
    pub base: Angle,
}

/// [`phi`] together with the sequence of peeling steps that produced it.
pub fn phi_trace(measure: &CircleMeasure, r: &Length) -> Result<(JoinPoint, Vec<PhiStep>)> {
    let mut remaining = Rational::one();
    let mut current = measure.clone();
    let mut parts = Vec::new();
    let mut steps = Vec::new();
    loop {
        let rho = arcs::average(&current, r)?;
        let k = rho.k();
        let split = polygon_decompose(&rho);
        parts.push(((2 * k + 1) as u64, &remaining * &split.t, split.base.clone()));
        steps.push(PhiStep {
            stratum_k: k,
            t: split.t.clone(),
            base: split.base.clone(),
        });
        match split.boundary {
            None => break,
            Some(nu) => {
                remaining *= Rational::one() - &split.t;
                current = nu.to_measure();
            }
        }
    }
    Ok((JoinPoint::new(parts)?, steps))
}

/// Join coordinates of the quotient class of `measure` at scale `r`.
pub fn phi(measure: &CircleMeasure, r: &Length) -> Result<JoinPoint> {
    phi_trace(measure, r).map(|(p, _)| p)
}

fn check_odd(n: u64) -> Result<()> {
    if n % 2 == 1 {
        Ok(())
    } else {
        Err(Error::EvenCover(n))
    }
}

/// Pullback along the `n`-sheeted cover: each atom `a δ_θ` becomes `n`
/// atoms `(a/n) δ_{θ/n + t/n}`.
pub fn g_n(measure: &CircleMeasure, n: u64) -> Result<CircleMeasure> {
    check_odd(n)?;
    let sheets = n as i64;
    let atoms = measure.atoms().iter().flat_map(|a| {
        let lifted = a.angle.turns() / rational::int(sheets);
        let weight = &a.weight / rational::int(sheets);
        (0..sheets).map(move |t| {
            (
                Angle::from_turns(&lifted + rational::ratio(t, sheets)),
                weight.clone(),
            )
        })
    });
    CircleMeasure::new(atoms)
}

/// Scale at which [`g_n`] lands: `π − (π − r)/n`.
pub fn pulled_back_scale(r: &Length, n: u64) -> Result<Length> {
    check_odd(n)?;
    let half = rational::ratio(1, 2);
    Length::from_turns(&half - (&half - r.turns()) / rational::int(n as i64))
}

/// `h_{m,n}`: component `2l+1` moves to `(2l+1)·n` with base divided by `n`.
pub fn h(point: &JoinPoint, n: u64) -> Result<JoinPoint> {
    check_odd(n)?;
    JoinPoint::new(point.components.iter().map(|c| {
        (
            c.index * n,
            c.t.clone(),
            Angle::from_turns(c.base.turns() / rational::int(n as i64)),
        )
    }))
}

/// The diagonal circle action on join coordinates.
pub fn act(theta: &Angle, point: &JoinPoint) -> JoinPoint {
    JoinPoint {
        components: point
            .components
            .iter()
            .map(|c| JoinComponent {
                index: c.index,
                t: c.t.clone(),
                base: Angle::from_turns(c.base.turns() + theta.turns())
                    .reduce_mod(&rational::ratio(1, c.index as i64)),
            })
            .collect(),
    }
}

/// Whether `point` is fixed by the cyclic subgroup of order `n`.
pub fn fixed_by(point: &JoinPoint, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroOrder(n));
    }
    Ok(point.components.iter().all(|c| c.index % n == 0))
}

/// Both routes around the cover square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutingSquare {
    /// `φ(g_n(μ))` at the pulled-back scale.
    pub via_cover: JoinPoint,
    /// `h_{m,n}(φ(μ))`.
    pub via_join: JoinPoint,
    pub pulled_back_scale: Length,
    pub equal: bool,
}

pub fn commuting_square(measure: &CircleMeasure, r: &Length, n: u64) -> Result<CommutingSquare> {
    let scale = pulled_back_scale(r, n)?;
    let via_join = h(&phi(measure, r)?, n)?;
    let via_cover = phi(&g_n(measure, n)?, &scale)?;
    let equal = via_cover == via_join;
    Ok(CommutingSquare {
        via_cover,
        via_join,
        pulled_back_scale: scale,
        equal,
    })
}

/// Distance between join points used by [`continuity_report`]:
/// the largest `|Δt| + min(t)·d(bases)` over indices, bases measured on
/// the circle of period `1/index`.
pub fn join_distance(a: &JoinPoint, b: &JoinPoint) -> Rational {
    let top = a.top_index().max(b.top_index());
    let mut worst = Rational::zero();
    for index in (1..=top).step_by(2) {
        let (ta, tb) = (a.coefficient(index), b.coefficient(index));
        let dt = (&ta - &tb).abs();
        let angular = match (a.base(index), b.base(index)) {
            (Some(x), Some(y)) => {
                let scale = rational::int(index as i64);
                let d = geodesic_distance(
                    &Angle::from_turns(x.turns() * &scale),
                    &Angle::from_turns(y.turns() * &scale),
                );
                ta.clone().min(tb.clone()) * d.turns() / scale
            }
            _ => Rational::zero(),
        };
        let value = dt + angular;
        if value > worst {
            worst = value;
        }
    }
    worst
}

/// One sample of a straight-line path `(1 − s)·μ + s·ν`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContinuitySample {
    #[serde(with = "rational::serde_str")]
    pub s: Rational,
    pub stratum_k: usize,
    pub point: JoinPoint,
    /// [`join_distance`] to the previous sample, as a float.
    pub step: f64,
}

/// Samples `φ` along the segment from `mu` to `nu` at `samples + 1`
/// evenly spaced parameters. A diagnostic only; nothing is certified.
pub fn continuity_report(
    mu: &CircleMeasure,
    nu: &CircleMeasure,
    r: &Length,
    samples: u32,
) -> Result<Vec<ContinuitySample>> {
    let samples = samples.max(1);
    let mut out: Vec<ContinuitySample> = Vec::new();
    for i in 0..=samples {
        let s = rational::ratio(i as i64, samples as i64);
        let rest = Rational::one() - &s;
        let atoms = mu
            .atoms()
            .iter()
            .map(|a| (a.angle.clone(), &a.weight * &rest))
            .chain(nu.atoms().iter().map(|a| (a.angle.clone(), &a.weight * &s)))
            .filter(|(_, w)| w.is_positive());
        let measure = CircleMeasure::new(atoms)?;
        let point = phi(&measure, r)?;
        let stratum_k = arcs::stratum(&measure, r)?;
        let step = out
            .last()
            .map(|prev| rational::to_f64(&join_distance(&prev.point, &point)))
            .unwrap_or(0.0);
        out.push(ContinuitySample {
            s,
            stratum_k,
            point,
            step,
        });
    }
    Ok(out)
}
