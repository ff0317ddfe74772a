//! Closed-form equivariant cohomology rings and their structure maps.
//!
//! The circle-equivariant cohomology of the thickening at scale `r` is
//! `Z[u]/(1·3·⋯·(2k+1)·u^{k+1})` on the band `2πk/(2k+1) ≤ r < 2π(k+1)/(2k+3)`
//! and `Z[u]` once `r ≥ π`, with `|u| = 2`. The maps for `r ≤ r′` are induced
//! by the identity on `Z[u]`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arcs::max_stratum;
use crate::error::{Error, Result};
use crate::measure::Length;
use crate::rational;

/// A graded ring with `|u| = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GradedRing {
    /// `Z[u]`
    FreePoly,
    /// `Z[u]/(c·u^k)`; with `c = 1` this is the truncation `u^k = 0`.
    CyclicTruncation { coefficient: BigUint, k: u64 },
    /// `Z[u,a]/(a²)` with `|a| = 2k − 1`.
    FreeWithExteriorGenerator { k: u64 },
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedRing::FreePoly => write!(f, "Z[u]"),
            GradedRing::CyclicTruncation { coefficient, k } => {
                write!(f, "Z[u]/(")?;
                if !coefficient.is_one() {
                    write!(f, "{coefficient}")?;
                }
                write!(f, "u")?;
                if *k != 1 {
                    write!(f, "^{k}")?;
                }
                write!(f, ")")
            }
            GradedRing::FreeWithExteriorGenerator { k } => {
                write!(f, "Z[u,a]/(a^2), |a|={}", 2 * k - 1)
            }
        }
    }
}

impl Serialize for GradedRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A degreewise abelian group of a [`GradedRing`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradedPiece {
    Zero,
    FreeRank(u32),
    /// `Z/order` with `order ≥ 2`.
    Cyclic(BigUint),
}

impl GradedPiece {
    /// `Z/order`, canonicalized: order 0 is `Z`, order 1 is `0`.
    pub fn cyclic(order: BigUint) -> Self {
        if order.is_zero() {
            GradedPiece::FreeRank(1)
        } else if order.is_one() {
            GradedPiece::Zero
        } else {
            GradedPiece::Cyclic(order)
        }
    }

    /// Order of the generator: 0 for `Z`, 1 for the zero group.
    fn generator_order(&self) -> Option<BigUint> {
        match self {
            GradedPiece::Zero => Some(BigUint::one()),
            GradedPiece::FreeRank(1) => Some(BigUint::zero()),
            GradedPiece::FreeRank(_) => None,
            GradedPiece::Cyclic(c) => Some(c.clone()),
        }
    }
}

impl fmt::Display for GradedPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedPiece::Zero => write!(f, "0"),
            GradedPiece::FreeRank(1) => write!(f, "Z"),
            GradedPiece::FreeRank(r) => write!(f, "Z^{r}"),
            GradedPiece::Cyclic(c) => write!(f, "Z/{c}"),
        }
    }
}

impl Serialize for GradedPiece {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `m₁⋯m_k · u^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerClass {
    pub coefficient: BigInt,
    pub degree: u64,
}

impl fmt::Display for EulerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}u^{}", self.coefficient, self.degree / 2)
    }
}

pub fn euler_class(weights: &[i64]) -> Result<EulerClass> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    let coefficient = weights.iter().map(|&m| BigInt::from(m)).product();
    Ok(EulerClass {
        coefficient,
        degree: 2 * weights.len() as u64,
    })
}

/// Equivariant cohomology of `S^{2k−1}` with circle weights `m₁, …, m_k`.
pub fn sphere_ring(weights: &[i64]) -> Result<GradedRing> {
    let e = euler_class(weights)?;
    let k = weights.len() as u64;
    Ok(if e.coefficient.is_zero() {
        GradedRing::FreeWithExteriorGenerator { k }
    } else {
        GradedRing::CyclicTruncation {
            coefficient: e.coefficient.abs().to_biguint().expect("nonnegative"),
            k,
        }
    })
}

/// The band `k` with `2πk/(2k+1) ≤ r < 2π(k+1)/(2k+3)`, or `None` for `r ≥ π`.
pub fn band(r: &Length) -> Option<usize> {
    max_stratum(r).ok()
}

/// Left endpoint `k/(2k+1)` of band `k`, in turns.
pub fn critical_scale(k: usize) -> Length {
    Length::frac(k as i64, 2 * k as i64 + 1)
}

/// `1·3·5·⋯·(2k+1)`.
pub fn odd_double_factorial(k: usize) -> BigUint {
    (0..=k as u64).map(|j| BigUint::from(2 * j + 1)).product()
}

/// The equivariant cohomology ring of the thickening at scale `r`.
pub fn vr_ring(r: &Length) -> GradedRing {
    match band(r) {
        None => GradedRing::FreePoly,
        Some(k) => GradedRing::CyclicTruncation {
            coefficient: odd_double_factorial(k),
            k: k as u64 + 1,
        },
    }
}

/// The same bands with every weight replaced by 1: `Z[u]/(u^{k+1})`.
pub fn naive_guess_ring(r: &Length) -> GradedRing {
    match band(r) {
        None => GradedRing::FreePoly,
        Some(k) => GradedRing::CyclicTruncation {
            coefficient: BigUint::one(),
            k: k as u64 + 1,
        },
    }
}

pub fn graded_piece(ring: &GradedRing, degree: u64) -> GradedPiece {
    let even = degree % 2 == 0;
    match ring {
        GradedRing::FreePoly => {
            if even {
                GradedPiece::FreeRank(1)
            } else {
                GradedPiece::Zero
            }
        }
        GradedRing::CyclicTruncation { coefficient, k } => {
            if !even {
                GradedPiece::Zero
            } else if degree / 2 < *k {
                GradedPiece::FreeRank(1)
            } else {
                GradedPiece::cyclic(coefficient.clone())
            }
        }
        GradedRing::FreeWithExteriorGenerator { k } => {
            if even || degree >= 2 * k - 1 {
                GradedPiece::FreeRank(1)
            } else {
                GradedPiece::Zero
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Zero,
    Identity,
    /// `Z → Z/c`
    Surjection,
    /// `Z/c′ → Z/c` with `c | c′`
    Reduction,
}

/// A degreewise homomorphism sending generator to generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeMap {
    pub source: GradedPiece,
    pub target: GradedPiece,
    pub kind: MapKind,
}

impl DegreeMap {
    /// The map `1 ↦ 1`, if it is well defined.
    pub fn generator_to_generator(source: GradedPiece, target: GradedPiece) -> Option<Self> {
        let a = source.generator_order()?;
        let b = target.generator_order()?;
        // 1 ↦ 1 is well defined iff the target order divides the source order
        let divides = if b.is_zero() {
            a.is_zero()
        } else {
            a.is_zero() || a.is_multiple_of(&b)
        };
        if !divides {
            return None;
        }
        let kind = if target == GradedPiece::Zero {
            MapKind::Zero
        } else if source == target {
            MapKind::Identity
        } else if a.is_zero() {
            MapKind::Surjection
        } else {
            MapKind::Reduction
        };
        Some(DegreeMap {
            source,
            target,
            kind,
        })
    }

    /// Image of the class of `x · generator`, as a canonical representative.
    pub fn apply(&self, x: &BigInt) -> BigInt {
        let order = self.target.generator_order().expect("cyclic target");
        if order.is_zero() {
            x.clone()
        } else {
            x.mod_floor(&BigInt::from(order))
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &DegreeMap) -> Option<DegreeMap> {
        if inner.target != self.source {
            return None;
        }
        DegreeMap::generator_to_generator(inner.source.clone(), self.target.clone())
    }
}

/// The map `H*(VR(r′)) → H*(VR(r))` for `r ≤ r′`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureMap {
    pub source: GradedRing,
    pub target: GradedRing,
}

impl StructureMap {
    pub fn in_degree(&self, degree: u64) -> DegreeMap {
        DegreeMap::generator_to_generator(
            graded_piece(&self.source, degree),
            graded_piece(&self.target, degree),
        )
        .expect("the identity on Z[u] descends to every quotient in the filtration")
    }
}

pub fn structure_map(r: &Length, r_prime: &Length) -> Result<StructureMap> {
    if r > r_prime {
        return Err(Error::ScaleOrder {
            lower: rational::format(r.turns()),
            upper: rational::format(r_prime.turns()),
        });
    }
    Ok(StructureMap {
        source: vr_ring(r_prime),
        target: vr_ring(r),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Reals,
    /// The prime field `F_p`.
    Prime(u64),
}

impl Field {
    pub fn f2() -> Self {
        Field::Prime(2)
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    fn kills(&self, c: &BigUint) -> bool {
        match self {
            Field::Rationals | Field::Reals => c.is_zero(),
            Field::Prime(p) => (c % BigUint::from(*p)).is_zero(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Reals => write!(f, "R"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// `F[u]` or `F[u]/(u^k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldRing {
    pub field: Field,
    pub truncation: Option<u64>,
}

impl fmt::Display for FieldRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.truncation {
            None => write!(f, "{}[u]", self.field),
            Some(1) => write!(f, "{}[u]/(u)", self.field),
            Some(k) => write!(f, "{}[u]/(u^{k})", self.field),
        }
    }
}

impl Serialize for FieldRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Field coefficients, valid when the truncation coefficient is a unit.
pub fn specialize(ring: &GradedRing, field: Field) -> Result<FieldRing> {
    match ring {
        GradedRing::FreePoly => Ok(FieldRing {
            field,
            truncation: None,
        }),
        GradedRing::CyclicTruncation { coefficient, k } => {
            if field.kills(coefficient) {
                Err(Error::CoefficientVanishes {
                    coefficient: coefficient.to_string(),
                    field: field.to_string(),
                })
            } else {
                Ok(FieldRing {
                    field,
                    truncation: Some(*k),
                })
            }
        }
        GradedRing::FreeWithExteriorGenerator { .. } => {
            Err(Error::UnsupportedSpecialization(ring.to_string()))
        }
    }
}

/// A maximal scale interval `[start, end)` on which one degree is constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleInterval {
    pub start: Length,
    /// `None` means the interval runs to infinity.
    pub end: Option<Length>,
    pub piece: GradedPiece,
}

impl Serialize for ScaleInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ScaleInterval", 5)?;
        st.serialize_field("start_turns", &rational::format(self.start.turns()))?;
        st.serialize_field("start_radians", &self.start.radians())?;
        st.serialize_field(
            "end_turns",
            &self.end.as_ref().map(|e| rational::format(e.turns())),
        )?;
        st.serialize_field("end_radians", &self.end.as_ref().map(Length::radians))?;
        st.serialize_field("piece", &self.piece.to_string())?;
        st.end()
    }
}

impl ScaleInterval {
    pub fn contains(&self, r: &Length) -> bool {
        *r >= self.start && self.end.as_ref().is_none_or(|e| r < e)
    }
}

/// Degree `degree` of the persistent module over the scale axis.
///
/// Intervals are left-closed, right-open and partition `[0, ∞)` when
/// `r_max` is `None`; otherwise only intervals starting at or before
/// `r_max` are returned (the last keeps its true right end).
pub fn barcode_over_scale(degree: u64, r_max: Option<&Length>) -> Result<Vec<ScaleInterval>> {
    if degree % 2 == 1 {
        return Err(Error::OddDegree(degree));
    }
    let d = (degree / 2) as usize;
    let mut out: Vec<ScaleInterval> = Vec::new();
    // from band d on, the piece is Z for good
    for k in 0..=d {
        let start = critical_scale(k);
        if r_max.is_some_and(|m| start > *m) {
            break;
        }
        let piece = graded_piece(&vr_ring(&start), degree);
        let end = if k == d {
            None
        } else {
            Some(critical_scale(k + 1))
        };
        match out.last_mut() {
            Some(last) if last.piece == piece => last.end = end,
            _ => out.push(ScaleInterval { start, end, piece }),
        }
    }
    Ok(out)
}

pub fn barcode_csv(intervals: &[ScaleInterval]) -> String {
    let mut out = String::from("start_turns,start_radians,end_turns,end_radians,piece\n");
    for iv in intervals {
        let (end_turns, end_radians) = match &iv.end {
            Some(e) => (rational::format(e.turns()), format!("{}", e.radians())),
            None => ("inf".to_string(), "inf".to_string()),
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            rational::format(iv.start.turns()),
            iv.start.radians(),
            end_turns,
            end_radians,
            iv.piece
        ));
    }
    out
}
