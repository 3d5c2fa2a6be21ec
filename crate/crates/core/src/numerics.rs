//! Exact arithmetic in ℚ(β): the base itself, field elements, and rational enclosures.
//!
//! A rational base is handled as the degree-one field ℚ[x]/(x − β), so every element
//! reduces to a constant and all decisions are plain rational arithmetic.

use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::PreconditionViolated("interval with lo > hi".into()));
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Self> {
        Self::new(int(lo), int(hi))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.to_f64();
        write!(f, "[{a:.12}, {b:.12}]")
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow2_recip(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaKind {
    Rational(BigRational),
    /// Integer polynomial, highest degree first, with the interval it was given on.
    AlgebraicRoot {
        coeffs: Vec<BigInt>,
        interval: RationalInterval,
    },
}

struct Inner {
    kind: BetaKind,
    // monic, square-free, β a simple root
    modulus: Poly,
    // fixed after construction; endpoints are never roots of the modulus
    isolating: RationalInterval,
    enclosure: Mutex<RationalInterval>,
    d1: u32,
    // coefficient forms of l and r, filled in once the field is usable
    l: Poly,
    r: Poly,
}

/// The base β > 1 together with its number field.
#[derive(Clone)]
pub struct BetaSpec {
    inner: Arc<Inner>,
}

impl fmt::Debug for BetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaSpec({self})")
    }
}

impl fmt::Display for BetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.kind {
            BetaKind::Rational(q) => write!(f, "{q}"),
            BetaKind::AlgebraicRoot { coeffs, interval } => {
                write!(f, "root of {} in [{}, {}]", format_poly(coeffs), interval.lo, interval.hi)
            }
        }
    }
}

fn format_poly(coeffs: &[BigInt]) -> String {
    let deg = coeffs.len().saturating_sub(1);
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = deg - i;
        let sign = if c.is_negative() { "-" } else { "+" };
        let a = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let coef = if a.is_one() && e > 0 { String::new() } else { a.to_string() };
        let var = match e {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{e}"),
        };
        out.push_str(&coef);
        out.push_str(&var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn beta_from_rational(p: &BigInt, q: &BigInt) -> Result<BetaSpec> {
    if q.is_zero() {
        return Err(Error::BadBeta("zero denominator".into()));
    }
    beta_from_ratio(BigRational::new(p.clone(), q.clone()))
}

pub fn beta_from_ratio(b: BigRational) -> Result<BetaSpec> {
    if b <= BigRational::one() {
        return Err(Error::NotGreaterThanOne);
    }
    let d1 = b.floor().to_integer().to_u32().ok_or_else(|| Error::BadBeta("base too large".into()))?;
    let modulus = vec![-b.clone(), BigRational::one()];
    let r = (&b + BigRational::one()).recip();
    let l = -(&b * &r);
    Ok(BetaSpec {
        inner: Arc::new(Inner {
            kind: BetaKind::Rational(b.clone()),
            modulus,
            isolating: RationalInterval::point(b.clone()),
            enclosure: Mutex::new(RationalInterval::point(b)),
            d1,
            l: vec![l],
            r: vec![r],
        }),
    })
}

/// `coeffs` lists the integer polynomial from the highest degree down.
pub fn beta_from_poly(coeffs: &[BigInt], interval: &RationalInterval) -> Result<BetaSpec> {
    let low_first: Vec<BigInt> = coeffs.iter().rev().cloned().collect();
    let p = poly::from_ints(&low_first);
    if p.len() < 2 {
        return Err(Error::InvalidPolynomial("polynomial must be nonconstant".into()));
    }
    let m = poly::square_free(&p);
    let (lo, hi) = (interval.lo.clone(), interval.hi.clone());
    if lo == hi {
        return if poly::eval(&m, &lo).is_zero() {
            rational_root(lo)
        } else {
            Err(Error::NoRootIsolated)
        };
    }
    let at_lo = poly::eval(&m, &lo).is_zero();
    let count = poly::sturm_count(&m, &lo, &hi) + usize::from(at_lo);
    if count != 1 {
        return Err(Error::NoRootIsolated);
    }
    if at_lo {
        return rational_root(lo);
    }
    if poly::eval(&m, &hi).is_zero() {
        return rational_root(hi);
    }
    let one = BigRational::one();
    if hi <= one {
        return Err(Error::RootNotGreaterThanOne);
    }
    let mut lo = lo;
    if lo < one {
        let s1 = poly::sign_at(&m, &one);
        if s1 == Ordering::Equal || s1 != poly::sign_at(&m, &lo) {
            return Err(Error::RootNotGreaterThanOne);
        }
        lo = one;
    }
    if m.len() == 2 {
        return rational_root(-&m[0]);
    }
    let isolating = RationalInterval { lo, hi };
    let inner = Inner {
        kind: BetaKind::AlgebraicRoot { coeffs: coeffs.to_vec(), interval: interval.clone() },
        modulus: m,
        isolating: isolating.clone(),
        enclosure: Mutex::new(isolating),
        d1: 0,
        l: Vec::new(),
        r: Vec::new(),
    };
    let mut beta = BetaSpec { inner: Arc::new(inner) };
    let d1 = beta
        .generator()
        .floor()
        .to_u32()
        .ok_or_else(|| Error::BadBeta("base too large".into()))?;
    let (l, r) = {
        let r = (&beta.generator() + &beta.one()).inverse().expect("β + 1 is nonzero");
        let l = -(&beta.generator() * &r);
        (l.c.clone(), r.c.clone())
    };
    let inner = Arc::get_mut(&mut beta.inner).expect("fresh base is unshared");
    inner.d1 = d1;
    inner.l = l;
    inner.r = r;
    Ok(beta)
}

fn rational_root(x: BigRational) -> Result<BetaSpec> {
    beta_from_ratio(x).map_err(|e| match e {
        Error::NotGreaterThanOne => Error::RootNotGreaterThanOne,
        other => other,
    })
}

impl BetaSpec {
    /// Convenience constructor for p/q.
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        beta_from_rational(&BigInt::from(p), &BigInt::from(q))
    }

    /// Root of the integer polynomial (highest degree first) isolated by `[lo, hi]`.
    pub fn root(coeffs: &[i64], lo: i64, hi: i64) -> Result<Self> {
        let c: Vec<BigInt> = coeffs.iter().map(|&x| BigInt::from(x)).collect();
        beta_from_poly(&c, &RationalInterval::from_ints(lo, hi)?)
    }

    pub fn golden() -> Self {
        Self::root(&[1, -1, -1], 1, 2).expect("golden ratio is isolated in [1, 2]")
    }

    pub fn kind(&self) -> &BetaKind {
        &self.inner.kind
    }

    pub fn d1(&self) -> u32 {
        self.inner.d1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.inner.kind {
            BetaKind::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<u32> {
        self.as_rational().filter(|q| q.is_integer()).and_then(|q| q.to_integer().to_u32())
    }

    /// Degree of the field over ℚ as represented (1 for rational bases).
    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn same_field(&self, other: &BetaSpec) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.kind == other.inner.kind
    }

    /// Enclosure of β of width at most 2^-bits.
    pub fn enclosure(&self, bits: u32) -> RationalInterval {
        let mut guard = self.inner.enclosure.lock().unwrap_or_else(|e| e.into_inner());
        let target = pow2_recip(bits);
        while guard.width() > target {
            let mid = guard.midpoint();
            let s_mid = poly::sign_at(&self.inner.modulus, &mid);
            if s_mid == Ordering::Equal {
                *guard = RationalInterval::point(mid);
                break;
            }
            if s_mid == poly::sign_at(&self.inner.modulus, &guard.lo) {
                guard.lo = mid;
            } else {
                guard.hi = mid;
            }
        }
        guard.clone()
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(60).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn element(&self, c: Poly) -> FieldElement {
        let mut c = c;
        poly::trim(&mut c);
        if c.len() >= self.inner.modulus.len() {
            c = poly::rem(&c, &self.inner.modulus);
        }
        FieldElement { beta: self.clone(), c }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(Vec::new())
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(int(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.clone()))
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        self.element(vec![q])
    }

    /// β itself as a field element.
    pub fn generator(&self) -> FieldElement {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// Left endpoint l = −β/(β+1).
    pub fn l(&self) -> FieldElement {
        FieldElement { beta: self.clone(), c: self.inner.l.clone() }
    }

    /// Right endpoint r = 1/(β+1).
    pub fn r(&self) -> FieldElement {
        FieldElement { beta: self.clone(), c: self.inner.r.clone() }
    }

    /// Evaluate an integer polynomial (highest degree first) at β.
    pub fn eval_int_poly(&self, coeffs: &[BigInt]) -> FieldElement {
        let b = self.generator();
        let mut acc = self.zero();
        for c in coeffs {
            acc = &(&acc * &b) + &self.from_bigint(c);
        }
        acc
    }

    fn eval_rat_poly(&self, p: &Poly) -> FieldElement {
        let b = self.generator();
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = &(&acc * &b) + &self.from_rational(c.clone());
        }
        acc
    }

    /// Exact comparison of two bases as real numbers, possibly from different fields.
    pub fn compare_real(&self, other: &BetaSpec) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(b);
        }
        if self.equals_real(other) {
            return Ordering::Equal;
        }
        let mut bits = 32;
        loop {
            let a = self.enclosure(bits);
            let b = other.enclosure(bits);
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            bits *= 2;
        }
    }

    fn equals_real(&self, other: &BetaSpec) -> bool {
        // other's minimal data evaluated at self, then confirm self sits in other's isolating interval
        let v = self.eval_rat_poly(&other.inner.modulus);
        if !v.is_zero() {
            return false;
        }
        let iso = &other.inner.isolating;
        let g = self.generator();
        if iso.is_point() {
            return (&g - &self.from_rational(iso.lo.clone())).is_zero();
        }
        (&g - &self.from_rational(iso.lo.clone())).sign() == Ordering::Greater
            && (&g - &self.from_rational(iso.hi.clone())).sign() == Ordering::Less
    }
}

/// An exact element of ℚ(β), stored as a reduced polynomial in β.
#[derive(Clone)]
pub struct FieldElement {
    beta: BetaSpec,
    c: Poly,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})*b"),
                _ => format!("({c})*b^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c || (self - other).is_zero()
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn beta(&self) -> &BetaSpec {
        &self.beta
    }

    /// Coefficients in powers of β, lowest first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    /// Rational enclosure obtained from a β-enclosure of width 2^-bits.
    pub fn enclose(&self, bits: u32) -> RationalInterval {
        if let Some(q) = self.as_rational() {
            return RationalInterval::point(q);
        }
        let b = self.beta.enclosure(bits);
        if b.is_point() {
            return RationalInterval::point(poly::eval(&self.c, &b.lo));
        }
        // β > 1 so every power is increasing in β
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        let mut pa = BigRational::one();
        let mut pb = BigRational::one();
        for c in &self.c {
            if c.is_positive() {
                lo += c * &pa;
                hi += c * &pb;
            } else if c.is_negative() {
                lo += c * &pb;
                hi += c * &pa;
            }
            pa = &pa * &b.lo;
            pb = &pb * &b.hi;
        }
        RationalInterval { lo, hi }
    }

    /// Enclosure of width at most `width` (which must be positive).
    pub fn enclose_width(&self, width: &BigRational) -> RationalInterval {
        let mut bits = 64;
        loop {
            let iv = self.enclose(bits);
            if &iv.width() <= width {
                return iv;
            }
            bits *= 2;
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclose_width(&pow2_recip(60)).midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Exact zero test.
    pub fn is_zero(&self) -> bool {
        match self.c.len() {
            0 => true,
            1 => self.c[0].is_zero(),
            _ => {
                let g = poly::gcd(&self.c, &self.beta.inner.modulus);
                if g.len() < 2 {
                    return false;
                }
                let iso = &self.beta.inner.isolating;
                if iso.is_point() {
                    return poly::eval(&g, &iso.lo).is_zero();
                }
                // g divides the modulus, whose only root in the interval is β (simple)
                poly::sign_at(&g, &iso.lo) != poly::sign_at(&g, &iso.hi)
            }
        }
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(&BigRational::zero());
        }
        let zero = BigRational::zero();
        let mut bits = 64;
        let mut checked = false;
        loop {
            let iv = self.enclose(bits);
            if iv.lo > zero {
                return Ordering::Greater;
            }
            if iv.hi < zero {
                return Ordering::Less;
            }
            if iv.is_point() {
                return Ordering::Equal;
            }
            if !checked {
                checked = true;
                if self.is_zero() {
                    return Ordering::Equal;
                }
            }
            bits *= 2;
        }
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut bits = 64;
        let mut tested: Option<BigInt> = None;
        loop {
            let iv = self.enclose(bits);
            let fa = iv.lo.floor().to_integer();
            let fb = iv.hi.floor().to_integer();
            if fa == fb {
                return fa;
            }
            if fb == &fa + 1 && tested.as_ref() != Some(&fb) {
                if (self - &self.beta.from_bigint(&fb)).is_zero() {
                    return fb;
                }
                tested = Some(fb);
            }
            bits *= 2;
        }
    }

    pub fn compare(&self, other: &FieldElement) -> Ordering {
        if self.c == other.c {
            return Ordering::Equal;
        }
        (self - other).sign()
    }

    pub fn inverse(&self) -> Option<FieldElement> {
        if let Some(q) = self.as_rational() {
            return if q.is_zero() { None } else { Some(self.beta.from_rational(q.recip())) };
        }
        if self.is_zero() {
            return None;
        }
        let m = &self.beta.inner.modulus;
        let (g, s) = poly::ext_gcd(&self.c, m);
        if g.len() == 1 {
            return Some(self.beta.element(s));
        }
        // zero divisor of a reducible modulus: β lies on the cofactor
        let h = poly::divrem(m, &g).0;
        let (_, s2) = poly::ext_gcd(&poly::rem(&self.c, &h), &h);
        Some(self.beta.element(s2))
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut acc = self.beta.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub(crate) fn key(&self) -> &Poly {
        &self.c
    }

    /// p-adic valuation of a rational element (None for zero or irrational elements).
    pub(crate) fn rational_valuation(&self, p: &BigInt) -> Option<i64> {
        let q = self.as_rational()?;
        if q.is_zero() {
            return None;
        }
        let val = |n: &BigInt| {
            let mut n = n.abs();
            let mut k = 0i64;
            while (&n % p).is_zero() {
                n /= p;
                k += 1;
            }
            k
        };
        Some(val(q.numer()) - val(q.denom()))
    }
}

pub fn fe_floor(x: &FieldElement) -> BigInt {
    x.floor()
}

pub fn fe_compare(x: &FieldElement, y: &FieldElement) -> Ordering {
    x.compare(y)
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                debug_assert!(self.beta.same_field(&rhs.beta), "mixed number fields");
                let f: fn(&Poly, &Poly) -> Poly = $body;
                self.beta.element(f(&self.c, &rhs.c))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, poly::add);
binop!(Sub, sub, poly::sub);
binop!(Mul, mul, poly::mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { beta: self.beta.clone(), c: poly::neg(&self.c) }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -(&self)
    }
}

/// Smallest prime factor of `n` below a fixed trial-division bound.
pub(crate) fn small_prime_factor(n: &BigInt) -> Option<BigInt> {
    let n = n.abs();
    if n <= BigInt::one() {
        return None;
    }
    let mut p = BigInt::from(2);
    let bound = BigInt::from(1_000_000);
    while p <= bound {
        if &p * &p > n {
            return Some(n);
        }
        if n.is_multiple_of(&p) {
            return Some(p);
        }
        p += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn rational_base_basics() {
        let b = BetaSpec::rational(5, 2).unwrap();
        assert_eq!(b.d1(), 2);
        assert_eq!(b.l().as_rational(), Some(q(-5, 7)));
        assert_eq!(b.r().as_rational(), Some(q(2, 7)));
        assert_eq!(BetaSpec::rational(2, 1).unwrap().d1(), 2);
        assert_eq!(BetaSpec::rational(1, 1).unwrap_err(), Error::NotGreaterThanOne);
    }

    #[test]
    fn golden_field_identities() {
        let g = BetaSpec::golden();
        assert_eq!(g.d1(), 1);
        let b = g.generator();
        assert!((&(&b * &b) - &(&b + &g.one())).is_zero());
        // l = -1/γ0
        assert_eq!(g.l(), -b.inverse().unwrap());
        assert_eq!(b.floor(), BigInt::from(1));
    }

    #[test]
    fn floor_decides_exact_integers() {
        let g = BetaSpec::golden();
        let b = g.generator();
        // γ0^2 - γ0 = 1 exactly
        let x = &(&b * &b) - &b;
        assert_eq!(x.floor(), BigInt::from(1));
        let y = &x - &g.from_rational(q(1, 1_000_000));
        assert_eq!(y.floor(), BigInt::from(0));
    }

    #[test]
    fn poly_errors() {
        let quartic: Vec<BigInt> = [1, 2, 1, -1, -1].iter().map(|&x| BigInt::from(x)).collect();
        let err = beta_from_poly(&quartic, &RationalInterval::from_ints(2, 3).unwrap()).unwrap_err();
        assert_eq!(err, Error::NoRootIsolated);
        let sub = beta_from_poly(
            &[BigInt::from(1), BigInt::from(0), BigInt::from(-2)],
            &RationalInterval::new(q(0, 1), q(3, 2)).unwrap(),
        )
        .unwrap();
        assert_eq!(sub.d1(), 1);
        let err = BetaSpec::root(&[2, -1], 0, 1).unwrap_err();
        assert_eq!(err, Error::RootNotGreaterThanOne);
    }

    #[test]
    fn linear_poly_gives_rational() {
        let b = BetaSpec::root(&[2, -5], 2, 3).unwrap();
        assert_eq!(b.as_rational(), Some(&q(5, 2)));
    }

    #[test]
    fn compare_across_fields() {
        let g = BetaSpec::golden();
        let g2 = BetaSpec::root(&[1, -1, -1], 0, 5).unwrap();
        assert_eq!(g.compare_real(&g2), Ordering::Equal);
        assert_eq!(g.compare_real(&BetaSpec::rational(8, 5).unwrap()), Ordering::Greater);
        let plastic = BetaSpec::root(&[1, 0, -1, -1], 1, 2).unwrap();
        assert_eq!(plastic.compare_real(&BetaSpec::rational(13, 10).unwrap()), Ordering::Greater);
    }

    #[test]
    fn reducible_modulus_still_inverts() {
        // (x^2 - x - 1)(x - 5): interval isolates the golden root
        let b = BetaSpec::root(&[1, -6, 4, 5], 1, 2).unwrap();
        let x = &b.generator() - &b.from_int(5);
        let inv = x.inverse().unwrap();
        assert!((&(&x * &inv) - &b.one()).is_zero());
    }
}
