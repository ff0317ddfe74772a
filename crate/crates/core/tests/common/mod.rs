#![allow(dead_code)]

use equivart::arcs::RegularPolygonalMeasure;
use equivart::measure::{diameter, Angle, CircleMeasure, Length};
use equivart::rational::{self, Rational};
use rand::Rng;

/// Fine grid for random angles, in parts of a turn.
pub const GRID: i64 = 2520;

pub fn random_angle<R: Rng>(rng: &mut R) -> Angle {
    Angle::frac(rng.gen_range(0..GRID), GRID)
}

/// Positive integer weights normalized to sum to one.
pub fn random_weights<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    let raw: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=12)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|w| rational::ratio(w, total)).collect()
}

/// Uniform rational in the open interval `(lo, hi)`.
pub fn between<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
    let step = rational::ratio(rng.gen_range(1..1000), 1000);
    lo + (hi - lo) * step
}

/// Random measure with `atoms` atoms anywhere on the circle.
pub fn random_measure<R: Rng>(rng: &mut R, atoms: usize) -> CircleMeasure {
    let weights = random_weights(rng, atoms);
    CircleMeasure::new((0..atoms).map(|i| (random_angle(rng), weights[i].clone())))
        .expect("positive weights summing to one")
}

/// A measure together with a scale below `π` at which it is a member.
pub fn generic_member<R: Rng>(rng: &mut R) -> (CircleMeasure, Length) {
    let half = rational::ratio(1, 2);
    loop {
        let atoms = rng.gen_range(1..=7);
        let mu = random_measure(rng, atoms);
        let d = diameter(&mu);
        if d.turns() >= &half {
            continue;
        }
        let r = Length::from_turns(between(rng, d.turns(), &half)).unwrap();
        return (mu, r);
    }
}

/// Band interior `(k/(2k+1), (k+1)/(2k+3))`, in turns.
pub fn band_bounds(k: i64) -> (Rational, Rational) {
    (
        rational::ratio(k, 2 * k + 1),
        rational::ratio(k + 1, 2 * k + 3),
    )
}

/// Jittered clusters at the vertices of a regular `(2k+1)`-gon, with a
/// scale inside band `k` at which the measure is a member.
pub fn clustered_member<R: Rng>(rng: &mut R, k: i64) -> (CircleMeasure, Length) {
    let (lo, hi) = band_bounds(k);
    let r = between(rng, &lo, &hi);
    let slack = &r - &lo;
    let base = random_angle(rng);
    let vertices = 2 * k + 1;
    let mut atoms = Vec::new();
    for j in 0..vertices {
        let vertex = &base + &Angle::frac(j, vertices);
        for _ in 0..rng.gen_range(1..=3) {
            let offset = &slack * rational::ratio(rng.gen_range(0..=100), 100);
            atoms.push((&vertex + &Angle::from_turns(offset), rational::int(1)));
        }
    }
    let weights = random_weights(rng, atoms.len());
    let mu = CircleMeasure::new(atoms.into_iter().zip(weights).map(|((a, _), w)| (a, w)))
        .expect("valid measure");
    let r = Length::from_turns(r).unwrap();
    assert!(diameter(&mu) <= r);
    (mu, r)
}

/// Random regular polygonal measure on a `(2k+1)`-gon, with a scale in
/// band `k` or above.
pub fn polygonal_member<R: Rng>(rng: &mut R, k: usize) -> (CircleMeasure, Length) {
    let weights = random_weights(rng, 2 * k + 1);
    let rho = RegularPolygonalMeasure::new(k, random_angle(rng), weights).unwrap();
    let (lo, _) = band_bounds(k as i64);
    let r = between(rng, &lo, &rational::ratio(1, 2));
    (rho.to_measure(), Length::from_turns(r).unwrap())
}

/// Mix of clustered members in strata 0 to 2 and unstructured members.
pub fn any_member<R: Rng>(rng: &mut R) -> (CircleMeasure, Length) {
    match rng.gen_range(0..4) {
        3 => generic_member(rng),
        k => clustered_member(rng, k),
    }
}

/// Random measure with between one and `max_atoms` atoms.
pub fn small_measure<R: Rng>(rng: &mut R, max_atoms: usize) -> CircleMeasure {
    let atoms = rng.gen_range(1..=max_atoms);
    random_measure(rng, atoms)
}
