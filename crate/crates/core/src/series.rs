//! Truncated power series with exact coefficients, the closed forms for laps and zeta
//! functions, and coefficient-wise identity checks against the code families.

use crate::codes::{build_code_c_from, build_delta_odd, delta_families, WordSet};
use crate::error::{Error, Result};
use crate::expansion::{reference_pair, ReferencePair, TailStatus};
use crate::language::{Language, ShiftVariant};
use crate::numerics::BetaSpec;
use crate::order::SymbolicSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients c_0..c_N of a power series known modulo z^{N+1}.
#[derive(Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", v.join(", "))
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// c·z^k.
    pub fn monomial(order: usize, k: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = q(c);
        }
        s
    }

    pub fn from_ints(order: usize, c: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (i, x) in c.iter().enumerate().take(order + 1) {
            s.coeffs[i] = q(*x);
        }
        s
    }

    pub fn from_bigints(order: usize, c: &[BigInt]) -> Self {
        let mut s = Self::zero(order);
        for (i, x) in c.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(x.clone());
        }
        s
    }

    pub fn from_rationals(order: usize, c: &[BigRational]) -> Self {
        let mut s = Self::zero(order);
        for (i, x) in c.iter().enumerate().take(order + 1) {
            s.coeffs[i] = x.clone();
        }
        s
    }

    /// Σ_{x ∈ words} z^{|x|}, plus 1 if the set carries the empty word.
    pub fn from_word_set(order: usize, s: &WordSet) -> Self {
        let census = s.census_vec(order);
        let mut out = Self::zero(order);
        for (i, c) in census.iter().enumerate() {
            out.coeffs[i] = q(*c as i64);
        }
        if s.contains_empty() {
            out.coeffs[0] += q(1);
        }
        out
    }

    /// 1/(1 − z) truncated.
    pub fn geometric(order: usize) -> Self {
        IntSeries { coeffs: vec![BigRational::one(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = Self::zero(order);
        for i in 0..=order.min(self.order()) {
            s.coeffs[i] = self.coeffs[i].clone();
        }
        s
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        IntSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common(other);
        IntSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        IntSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !other.coeffs[j].is_zero() {
                    out.coeffs[i + j] += a * &other.coeffs[j];
                }
            }
        }
        out
    }

    /// 1/f; the constant term must be ±1.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigRational::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out.coeffs[k - j];
                }
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.reciprocal()?))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 1..=n {
            out.coeffs[i - 1] = &self.coeffs[i] * q(i as i64);
        }
        out
    }

    /// exp(f) for f with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { expected: 0 });
        }
        // g' = f' g, so k g_k = Σ_{j=1..k} j f_j g_{k−j}
        let n = self.order();
        let mut g = Self::zero(n);
        g.coeffs[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * q(j as i64) * &g.coeffs[k - j];
                }
            }
            g.coeffs[k] = acc / q(k as i64);
        }
        Ok(g)
    }

    /// log(f) for f with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != BigRational::one() {
            return Err(Error::BadConstantTerm { expected: 1 });
        }
        let d = self.derivative().mul(&self.reciprocal()?);
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 1..=n {
            out.coeffs[i] = &d.coeffs[i - 1] / q(i as i64);
        }
        Ok(out)
    }

    /// z·f′/f; for a zeta function its coefficients are the periodic-point counts.
    pub fn log_derivative(&self) -> Result<Self> {
        let d = self.derivative().mul(&self.reciprocal()?);
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 1..=n {
            out.coeffs[i] = d.coeffs[i - 1].clone();
        }
        Ok(out)
    }

    pub fn product(order: usize, factors: &[IntSeries]) -> Self {
        factors.iter().fold(Self::one(order), |acc, f| acc.mul(f))
    }

    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegerCoefficient { index: i }) })
            .collect()
    }

    pub fn max_abs(&self) -> BigRational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// 1 − Σ_{n=1..N} (−1)^n (s_{n−1} − s_n) z^n with s_0 = 0.
pub fn denominator_series(s: &SymbolicSequence, order: usize) -> Result<IntSeries> {
    let d = s.take(order)?;
    let dd = |i: usize| if i == 0 { 0i64 } else { d[i - 1] as i64 };
    let mut out = IntSeries::one(order);
    for n in 1..=order {
        let c = dd(n - 1) - dd(n);
        let c = if n % 2 == 0 { -c } else { c };
        out.coeffs[n] = q(c);
    }
    Ok(out)
}

fn reference_for(beta: &BetaSpec, order: usize) -> Result<ReferencePair> {
    reference_pair(beta, (2 * order + 4).max(64))
}

/// L(z) = 1/((1−z) D*(z)).
pub fn lap_series(beta: &BetaSpec, order: usize) -> Result<IntSeries> {
    lap_series_from(&reference_for(beta, order)?, order)
}

pub fn lap_series_from(rp: &ReferencePair, order: usize) -> Result<IntSeries> {
    let den = denominator_series(&rp.d_star, order)?;
    IntSeries::one(order).sub(&IntSeries::monomial(order, 1, 1)).mul(&den).reciprocal()
}

/// Which closed form for ζ applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaBranch {
    /// d purely periodic with this period.
    Periodic(usize),
    NonPeriodic,
}

/// Decides the branch. A purely periodic d whose period exceeds the known digits only
/// changes coefficients beyond the known digits, so the non-periodic form is certified up
/// to that order regardless.
pub fn zeta_branch(rp: &ReferencePair, order: usize, assume_nonperiodic: bool) -> Result<ZetaBranch> {
    if rp.d.is_purely_periodic() {
        return Ok(ZetaBranch::Periodic(rp.d.period().expect("periodic").len()));
    }
    match rp.status {
        TailStatus::Periodic | TailStatus::Aperiodic => Ok(ZetaBranch::NonPeriodic),
        TailStatus::Unknown => {
            let known = rp.d.known_len().unwrap_or(0);
            if order < known || assume_nonperiodic {
                Ok(ZetaBranch::NonPeriodic)
            } else {
                Err(Error::UnknownTail)
            }
        }
    }
}

/// ζ(z) = (1+z)/D(z) for non-periodic d, (1+z)/((1−z^k) D*(z)) for d of period k.
pub fn zeta_transformation_from(rp: &ReferencePair, order: usize, assume_nonperiodic: bool) -> Result<IntSeries> {
    let one_plus_z = IntSeries::from_ints(order, &[1, 1]);
    match zeta_branch(rp, order, assume_nonperiodic)? {
        ZetaBranch::NonPeriodic => one_plus_z.div(&denominator_series(&rp.d, order)?),
        ZetaBranch::Periodic(k) => {
            let den = denominator_series(&rp.d_star, order)?;
            let cyc = IntSeries::one(order).sub(&IntSeries::monomial(order, k, 1));
            one_plus_z.div(&cyc.mul(&den))
        }
    }
}

pub fn zeta_transformation(beta: &BetaSpec, order: usize) -> Result<IntSeries> {
    zeta_transformation_from(&reference_for(beta, order)?, order, false)
}

/// ζ̃ = ζ/(1 − z^{p+1}) when d is purely periodic with odd period p, else ζ̃ = ζ.
pub fn zeta_shift_from(rp: &ReferencePair, order: usize, assume_nonperiodic: bool) -> Result<IntSeries> {
    let z = zeta_transformation_from(rp, order, assume_nonperiodic)?;
    match rp.odd_period() {
        None => Ok(z),
        Some(p) => z.div(&IntSeries::one(order).sub(&IntSeries::monomial(order, p + 1, 1))),
    }
}

pub fn zeta_shift(beta: &BetaSpec, order: usize) -> Result<IntSeries> {
    zeta_shift_from(&reference_for(beta, order)?, order, false)
}

/// exp(Σ p_n z^n / n) for counts p_1..p_N; the result must have integer coefficients.
pub fn zeta_from_counts(p: &[BigInt]) -> Result<IntSeries> {
    let order = p.len();
    let mut s = IntSeries::zero(order);
    for (i, c) in p.iter().enumerate() {
        s.coeffs[i + 1] = BigRational::new(c.clone(), BigInt::from(i + 1));
    }
    let z = s.exp()?;
    z.to_integers()?;
    Ok(z)
}

/// One identity checked coefficient-wise up to `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub name: &'static str,
    pub order: usize,
    pub residual: IntSeries,
}

impl Residual {
    pub fn max_abs(&self) -> BigRational {
        self.residual.max_abs()
    }

    pub fn is_zero(&self) -> bool {
        self.residual.coeffs.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub order: usize,
    pub residuals: Vec<Residual>,
    /// Identities skipped, with the reason.
    pub skipped: Vec<(&'static str, String)>,
}

impl IdentityReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(Residual::is_zero)
    }

    pub fn get(&self, name: &str) -> Option<&Residual> {
        self.residuals.iter().find(|r| r.name == name)
    }
}

/// (1+z)(1 − Σ_𝔠)(1 − Σ_Δodd) Π_i (1 − Σ_Δ^(i)) with families enumerated up to `order`.
pub fn code_product(d: &SymbolicSequence, order: usize) -> Result<IntSeries> {
    let one = IntSeries::one(order);
    let mut factors = vec![IntSeries::from_ints(order, &[1, 1])];
    factors.push(one.sub(&IntSeries::from_word_set(order, &build_code_c_from(d, order)?)));
    factors.push(one.sub(&IntSeries::from_word_set(order, &build_delta_odd(d, order)?)));
    for (_, s) in delta_families(d, order)? {
        factors.push(one.sub(&IntSeries::from_word_set(order, &s)));
    }
    Ok(IntSeries::product(order, &factors))
}

/// Coefficient-wise checks of the code factorizations, the census closed form for odd
/// periods, the zeta/lap relation, and laps against brute-force complexity. The certified
/// order is min(order, length).
pub fn verify_identities(beta: &BetaSpec, order: usize, length: usize) -> Result<IdentityReport> {
    let n = order.min(length);
    let rp = reference_for(beta, n)?;
    let mut residuals = Vec::new();
    let mut skipped = Vec::new();

    let den_star = denominator_series(&rp.d_star, n)?;
    let prod = code_product(&rp.d, n)?;
    residuals.push(Residual { name: "code_factorization", order: n, residual: den_star.sub(&prod) });

    let corrected = Language::from_reference(beta, ShiftVariant::Corrected, rp.clone());
    let census = corrected.census(n)?;
    let census_series = IntSeries::from_ints(n, &census.iter().map(|&c| c as i64).collect::<Vec<_>>());
    let census_check = IntSeries::geometric(n).sub(&prod.mul(&census_series));
    residuals.push(Residual { name: "census_factorization", order: n, residual: census_check });

    match rp.odd_period() {
        Some(p) => {
            let ito = Language::from_reference(beta, ShiftVariant::ItoSadahiro, rp.clone());
            let c = ito.census(n)?;
            let lhs = IntSeries::from_ints(n, &c.iter().map(|&x| x as i64).collect::<Vec<_>>());
            let num = IntSeries::one(n).sub(&IntSeries::monomial(n, p + 1, 1)).mul(&IntSeries::geometric(n));
            let rhs = num.div(&denominator_series(&rp.d, n)?)?;
            residuals.push(Residual { name: "odd_period_census", order: n, residual: lhs.sub(&rhs) });
        }
        None => skipped.push(("odd_period_census", "d is not purely periodic with odd period".to_string())),
    }

    let zeta = zeta_transformation_from(&rp, n, false)?;
    let laps = lap_series_from(&rp, n)?;
    let one_minus_z2 = IntSeries::one(n).sub(&IntSeries::monomial(n, 2, 1));
    let lhs = match zeta_branch(&rp, n, false)? {
        ZetaBranch::NonPeriodic => zeta.clone(),
        ZetaBranch::Periodic(k) => IntSeries::one(n).sub(&IntSeries::monomial(n, k, 1)).mul(&zeta),
    };
    residuals.push(Residual { name: "zeta_laps", order: n, residual: lhs.sub(&one_minus_z2.mul(&laps)) });

    residuals.push(Residual { name: "laps_vs_complexity", order: n, residual: laps.sub(&census_series) });

    Ok(IdentityReport { order: n, residuals, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn fibonacci_reciprocal() {
        let f = IntSeries::from_ints(5, &[1, -1, -1]);
        assert_eq!(ints(&f.reciprocal().unwrap()), vec![1, 1, 2, 3, 5, 8]);
        let g = IntSeries::from_ints(5, &[1, 1]).mul(&f.reciprocal().unwrap());
        assert_eq!(ints(&g), vec![1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = IntSeries::from_ints(8, &[1, 1]);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
        assert_eq!(IntSeries::from_ints(3, &[2]).reciprocal(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn counts_to_zeta() {
        let z = zeta_from_counts(&vec![BigInt::from(0); 5]).unwrap();
        assert_eq!(ints(&z), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(zeta_from_counts(&[BigInt::from(1), BigInt::from(0)]), Err(Error::NonIntegerCoefficient { index: 2 }));
    }

    #[test]
    fn golden_denominator() {
        let d = SymbolicSequence::parse("1(0)").unwrap();
        assert_eq!(ints(&denominator_series(&d, 5).unwrap()), vec![1, -1, -1, 0, 0, 0]);
    }
}
