//! Parsing of `--beta` values.

use negabeta::gaps::gamma_n;
use negabeta::numerics::{beta_from_poly, beta_from_ratio, BetaSpec, RationalInterval};
use negabeta::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

/// `p/q`, a decimal like `2.5`, or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::BadBeta(s.to_string());
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let x = BigRational::new(num, den);
    Ok(if neg { -x } else { x })
}

/// Accepted forms: `5/2`, `2.5`, `golden`, `gamma:N`, `root:c_n,…,c_0@lo:hi`.
pub fn parse_beta(s: &str) -> Result<BetaSpec> {
    let s = s.trim();
    if s == "golden" {
        return Ok(BetaSpec::golden());
    }
    if let Some(n) = s.strip_prefix("gamma:") {
        let n: usize = n.parse().map_err(|_| Error::BadBeta(s.to_string()))?;
        return Ok(gamma_n(n));
    }
    if let Some(rest) = s.strip_prefix("root:") {
        let (coeffs, range) = rest.split_once('@').ok_or_else(|| Error::BadBeta(s.to_string()))?;
        let coeffs = coeffs
            .split(',')
            .map(|c| BigInt::from_str(c.trim()).map_err(|_| Error::BadBeta(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let (lo, hi) = range.split_once(':').ok_or_else(|| Error::BadBeta(s.to_string()))?;
        let interval = RationalInterval::new(parse_rational(lo)?, parse_rational(hi)?)?;
        return beta_from_poly(&coeffs, &interval);
    }
    let x = parse_rational(s)?;
    if x <= BigRational::one() {
        return Err(Error::NotGreaterThanOne);
    }
    beta_from_ratio(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_beta("2.5").unwrap().as_rational().unwrap(), parse_beta("5/2").unwrap().as_rational().unwrap());
        assert_eq!(parse_beta("golden").unwrap().degree(), 2);
        assert_eq!(parse_beta("gamma:1").unwrap().degree(), 3);
        assert_eq!(parse_beta("root:1,0,-1,-1@1:2").unwrap().degree(), 3);
        assert!(parse_beta("0.5").is_err());
        assert!(parse_beta("x").is_err());
        assert!(parse_beta("root:1,2,1,-1,-1@2:3").is_err());
    }
}
