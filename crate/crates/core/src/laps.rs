//! Monotone pieces of T^n computed geometrically, independent of the symbolic counts.

use crate::error::{Error, Result};
use crate::numerics::{BetaSpec, FieldElement};
use std::cmp::Ordering;

/// One lap of T^n: on (lo, hi) the map is x ↦ slope·x + offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lap {
    pub lo: FieldElement,
    pub hi: FieldElement,
    pub slope: FieldElement,
    pub offset: FieldElement,
    pub digits: Vec<u32>,
}

impl Lap {
    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        &(&self.slope * x) + &self.offset
    }

    /// Image of the open domain, as (min, max).
    fn image(&self) -> (FieldElement, FieldElement) {
        let (a, b) = (self.apply(&self.lo), self.apply(&self.hi));
        if a.compare(&b) == Ordering::Less {
            (a, b)
        } else {
            (b, a)
        }
    }
}

fn max(a: FieldElement, b: FieldElement) -> FieldElement {
    if a.compare(&b) == Ordering::Less {
        b
    } else {
        a
    }
}

fn min(a: FieldElement, b: FieldElement) -> FieldElement {
    if a.compare(&b) == Ordering::Less {
        a
    } else {
        b
    }
}

/// Laps of T^n, ordered by digit word. Branch k of T lives on (c_{k+1}, c_k) with
/// c_k = −(k + l)/β; pieces with empty interior are dropped.
pub fn laps(beta: &BetaSpec, n: usize) -> Result<Vec<Lap>> {
    if n == 0 {
        return Err(Error::PreconditionViolated("iterate must be positive".into()));
    }
    let b = beta.generator();
    let inv_b = b.inverse().expect("β is nonzero");
    let (l, r) = (beta.l(), beta.r());
    let c = |k: u32| -(&(&beta.from_int(k as i64) + &l) * &inv_b);
    let mut current = vec![Lap { lo: l.clone(), hi: r.clone(), slope: beta.one(), offset: beta.zero(), digits: vec![] }];
    for _ in 0..n {
        let mut next = Vec::new();
        for lap in &current {
            let (ylo, yhi) = lap.image();
            for k in 0..=beta.d1() {
                let lo = max(max(c(k + 1), l.clone()), ylo.clone());
                let hi = min(c(k), yhi.clone());
                if lo.compare(&hi) != Ordering::Less {
                    continue;
                }
                // pull (lo, hi) back through the lap's affine map
                let sinv = lap.slope.inverse().expect("slope is nonzero");
                let a = &(&lo - &lap.offset) * &sinv;
                let bb = &(&hi - &lap.offset) * &sinv;
                let (dlo, dhi) = if a.compare(&bb) == Ordering::Less { (a, bb) } else { (bb, a) };
                let slope = -(&b * &lap.slope);
                let offset = &(-(&b * &lap.offset)) - &beta.from_int(k as i64);
                let mut digits = lap.digits.clone();
                digits.push(k);
                next.push(Lap { lo: dlo, hi: dhi, slope, offset, digits });
            }
        }
        current = next;
    }
    current.sort_by(|x, y| x.lo.compare(&y.lo));
    Ok(current)
}

pub fn lap_count(beta: &BetaSpec, n: usize) -> Result<usize> {
    Ok(laps(beta, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_halves_lap_counts() {
        let b = BetaSpec::rational(5, 2).unwrap();
        let counts: Vec<usize> = (1..=3).map(|n| lap_count(&b, n).unwrap()).collect();
        assert_eq!(counts, vec![3, 8, 20]);
    }

    #[test]
    fn integer_base_drops_degenerate_branch() {
        let b = BetaSpec::rational(2, 1).unwrap();
        assert_eq!(lap_count(&b, 1).unwrap(), 2);
        assert_eq!(lap_count(&b, 3).unwrap(), 8);
    }
}
