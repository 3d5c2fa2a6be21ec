//! Dense univariate polynomials over the rationals, coefficients stored low degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn from_ints(c: &[BigInt]) -> Poly {
    let mut p: Poly = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    trim(&mut p);
    p
}

pub(crate) fn add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn sub(a: &Poly, b: &Poly) -> Poly {
    add(a, &neg(b))
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &Poly, s: &BigRational) -> Poly {
    let mut out: Poly = a.iter().map(|c| c * s).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[k + j] -= t;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &Poly, b: &Poly) -> Poly {
    divrem(a, b).1
}

pub(crate) fn monic(a: &Poly) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.recip();
            scale(a, &inv)
        }
    }
}

pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = monic(&r);
    }
    monic(&x)
}

/// Returns `(g, s)` with `s*a ≡ g (mod m)` and `g = gcd(a, m)` monic.
pub(crate) fn ext_gcd(a: &Poly, m: &Poly) -> (Poly, Poly) {
    let mut r0 = m.clone();
    let mut r1 = rem(a, m);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let lead = r0.last().cloned().unwrap_or_else(BigRational::one);
    let inv = lead.recip();
    (scale(&r0, &inv), rem(&scale(&s0, &inv), m))
}

pub(crate) fn derivative(a: &Poly) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn eval(a: &Poly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in a.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

pub(crate) fn sign_at(a: &Poly, x: &BigRational) -> Ordering {
    let v = eval(a, x);
    if v.is_zero() {
        Ordering::Equal
    } else if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Number of distinct real roots in the half-open interval (lo, hi].
pub(crate) fn sturm_count(p: &Poly, lo: &BigRational, hi: &BigRational) -> usize {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r = neg(&rem(&seq[n - 2], &seq[n - 1]));
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    let variations = |x: &BigRational| {
        let mut count = 0usize;
        let mut last = Ordering::Equal;
        for q in &seq {
            let s = sign_at(q, x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    };
    variations(lo).saturating_sub(variations(hi))
}

/// Square-free part, made monic.
pub(crate) fn square_free(p: &Poly) -> Poly {
    let g = gcd(p, &derivative(p));
    monic(&divrem(p, &g).0)
}
