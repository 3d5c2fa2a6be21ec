//! The map T(x) = −βx − ⌊−βx − l⌋ on [l, r), digit expansions and the corrected sequence d*.

use crate::error::{Error, Result};
use crate::numerics::{small_prime_factor, BetaSpec, FieldElement, RationalInterval};
use crate::order::{Digit, SymbolicSequence, Word};
use crate::poly::Poly;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::cmp::Ordering;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct OrbitPoint {
    pub value: FieldElement,
    pub index: usize,
}

impl OrbitPoint {
    pub fn seed(value: FieldElement) -> Self {
        OrbitPoint { value, index: 0 }
    }
}

/// What is known about the tail beyond the computed digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailStatus {
    /// A repeated orbit point was found.
    Periodic,
    /// The orbit provably never repeats (p-adic valuations of a rational orbit diverge).
    Aperiodic,
    /// Neither, within the horizon.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Expansion {
    /// Number of digits standing left of the radix point.
    pub integer_part_length: usize,
    pub seq: SymbolicSequence,
    pub status: TailStatus,
    pub beta: BetaSpec,
}

pub fn in_interval(x: &FieldElement, beta: &BetaSpec) -> bool {
    x.compare(&beta.l()) != Ordering::Less && x.compare(&beta.r()) == Ordering::Less
}

/// One application of T, returning the digit and the image.
pub fn t_step(x: &OrbitPoint, beta: &BetaSpec) -> (Digit, OrbitPoint) {
    let l = beta.l();
    let mbx = -(&beta.generator() * &x.value);
    let k = (&mbx - &l).floor();
    let next = &mbx - &beta.from_bigint(&k);
    let digit = k.to_u32().expect("digit in alphabet");
    debug_assert!(digit <= beta.d1());
    (digit, OrbitPoint { value: next, index: x.index + 1 })
}

/// The orbit s_0 = x, s_1 = T(x), … together with the digits read along it.
pub(crate) struct Orbit {
    pub digits: Word,
    pub points: Vec<FieldElement>,
    /// (start, length) of the detected cycle among the points.
    pub cycle: Option<(usize, usize)>,
}

pub(crate) fn run_orbit(x: &FieldElement, beta: &BetaSpec, max_digits: usize) -> Orbit {
    let mut seen: HashMap<Poly, usize> = HashMap::new();
    let mut points = vec![x.clone()];
    let mut digits = Vec::new();
    seen.insert(x.key().clone(), 0);
    let mut cur = OrbitPoint::seed(x.clone());
    while digits.len() < max_digits {
        let (d, next) = t_step(&cur, beta);
        digits.push(d);
        let j = next.index;
        if let Some(&i) = seen.get(next.value.key()) {
            points.push(next.value);
            return Orbit { digits, points, cycle: Some((i, j - i)) };
        }
        seen.insert(next.value.key().clone(), j);
        points.push(next.value.clone());
        cur = next;
    }
    Orbit { digits, points, cycle: None }
}

/// Expansion of any element of ℚ(β); points outside [l, r) are rescaled by (−β)^n first.
pub fn expand(x: &FieldElement, beta: &BetaSpec, max_digits: usize) -> Result<Expansion> {
    if max_digits == 0 {
        return Err(Error::PreconditionViolated("max_digits must be positive".into()));
    }
    let mb_inv = (-beta.generator()).inverse().expect("β is nonzero");
    let mut y = x.clone();
    let mut n = 0;
    while !in_interval(&y, beta) {
        y = &y * &mb_inv;
        n += 1;
    }
    let orbit = run_orbit(&y, beta, max_digits.max(n));
    let (seq, status) = match orbit.cycle {
        Some((start, len)) => {
            let prefix = orbit.digits[..start].to_vec();
            let period = orbit.digits[start..start + len].to_vec();
            (SymbolicSequence::periodic(prefix, period)?, TailStatus::Periodic)
        }
        None => {
            let last = orbit.points.last().expect("orbit is nonempty");
            let status = if certified_aperiodic(last, beta) { TailStatus::Aperiodic } else { TailStatus::Unknown };
            (SymbolicSequence::truncated(orbit.digits), status)
        }
    };
    Ok(Expansion { integer_part_length: n, seq, status, beta: beta.clone() })
}

/// For β = p/q with q > 1 and a prime r | q: once an orbit point has r-adic valuation ≤ 0,
/// every later point has strictly smaller valuation, so the orbit never repeats.
fn certified_aperiodic(y: &FieldElement, beta: &BetaSpec) -> bool {
    let Some(b) = beta.as_rational() else { return false };
    if b.is_integer() {
        return false;
    }
    let Some(r) = small_prime_factor(b.denom()) else { return false };
    matches!(y.rational_valuation(&r), Some(v) if v <= 0)
}

/// Odd-period correction: a purely periodic odd period (d1…d_h) becomes (d1…d_h − 1, 0).
pub fn corrected(d: &SymbolicSequence) -> Result<SymbolicSequence> {
    match d.odd_pure_period() {
        None => Ok(d.clone()),
        Some(_) => {
            let mut p = d.period().expect("periodic").to_vec();
            let last = p.last_mut().expect("nonempty period");
            if *last == 0 {
                return Err(Error::NotAnExpansionTail("odd period ends with digit 0".into()));
            }
            *last -= 1;
            p.push(0);
            SymbolicSequence::purely_periodic(p)
        }
    }
}

/// Like [`corrected`], but insists on a purely periodic input.
pub fn corrected_purely_periodic(d: &SymbolicSequence) -> Result<SymbolicSequence> {
    if !d.is_purely_periodic() {
        return Err(Error::NotAnExpansionTail("sequence has a preperiod or unknown tail".into()));
    }
    corrected(d)
}

/// Exact value Σ x_i (−β)^{-i} of the fractional digits when the tail is periodic;
/// for truncated tails the partial sum.
fn digit_sum(seq: &SymbolicSequence, beta: &BetaSpec) -> FieldElement {
    let q = (-beta.generator()).inverse().expect("β is nonzero");
    let horner = |w: &[Digit]| {
        // Σ w_j q^j for j = 1..|w|
        let mut acc = beta.zero();
        for &d in w.iter().rev() {
            acc = &(&acc + &beta.from_int(d as i64)) * &q;
        }
        acc
    };
    let pre = horner(seq.prefix());
    match seq.period() {
        None => pre,
        Some(p) => {
            let qn = q.pow(seq.prefix().len() as u32);
            let qp = q.pow(p.len() as u32);
            let tail = &horner(p) * &(&beta.one() - &qp).inverse().expect("|q| < 1");
            &pre + &(&qn * &tail)
        }
    }
}

/// Exact value of an expansion with periodic tail.
pub fn evaluate_exact(e: &Expansion) -> Option<FieldElement> {
    e.seq.period()?;
    let mb = -e.beta.generator();
    Some(&digit_sum(&e.seq, &e.beta) * &mb.pow(e.integer_part_length as u32))
}

/// Enclosure of the value of an expansion. Periodic tails are exact (then narrowed to
/// `width`); for truncated tails the unknown remainder is bounded using T^N(x) ∈ [l, r),
/// which limits the achievable width to about β^{-N}.
pub fn evaluate(e: &Expansion, width: &BigRational) -> RationalInterval {
    if let Some(v) = evaluate_exact(e) {
        return v.enclose_width(width);
    }
    let beta = &e.beta;
    let n = e.seq.prefix().len() as u32;
    let s = digit_sum(&e.seq, beta);
    let q = (-beta.generator()).inverse().expect("β is nonzero").pow(n);
    let a = &s + &(&q * &beta.l());
    let b = &s + &(&q * &beta.r());
    let scale = (-beta.generator()).pow(e.integer_part_length as u32);
    let a = &a * &scale;
    let b = &b * &scale;
    let (lo, hi) = if a.compare(&b) == Ordering::Less { (a, b) } else { (b, a) };
    let lo = lo.enclose_width(width).lo;
    let hi = hi.enclose_width(width).hi;
    RationalInterval { lo, hi }
}

/// d = d(l_β) and its correction d*.
#[derive(Clone, Debug)]
pub struct ReferencePair {
    pub d: SymbolicSequence,
    pub d_star: SymbolicSequence,
    pub status: TailStatus,
    pub horizon: usize,
}

impl ReferencePair {
    /// Purely periodic with odd minimal period.
    pub fn odd_period(&self) -> Option<usize> {
        self.d.odd_pure_period()
    }
}

pub fn reference_pair(beta: &BetaSpec, max_digits: usize) -> Result<ReferencePair> {
    let e = expand(&beta.l(), beta, max_digits)?;
    let d = e.seq;
    let d_star = corrected(&d)?;
    Ok(ReferencePair { d, d_star, status: e.status, horizon: max_digits })
}

/// Generic width used when only a sanity enclosure is needed.
pub fn default_width() -> BigRational {
    BigRational::new(One::one(), num_bigint::BigInt::from(1u64) << 64)
}
