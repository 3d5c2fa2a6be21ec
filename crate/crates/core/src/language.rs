//! Admissible words, factor complexity, classification and brute-force periodic points.

use crate::codes::WordSet;
use crate::error::{Error, Result};
use crate::expansion::{reference_pair, ReferencePair, TailStatus};
use crate::numerics::BetaSpec;
use crate::order::{alt_at, alt_compare_seq, Digit, SymbolicSequence, Word};
use num_bigint::BigInt;
use num_traits::One;
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftVariant {
    /// Lower bound d, upper bound 0·d*, both non-strict.
    ItoSadahiro,
    /// Lower bound d*, upper bound 0·d*.
    Corrected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodicTarget {
    Shift,
    Transformation,
}

/// Finite-word language of a base under one of the two bound conventions.
#[derive(Clone, Debug)]
pub struct Language {
    pub beta: BetaSpec,
    pub variant: ShiftVariant,
    pub reference: ReferencePair,
    lower: SymbolicSequence,
    upper: SymbolicSequence,
}

impl Language {
    pub fn new(beta: &BetaSpec, variant: ShiftVariant, horizon: usize) -> Result<Self> {
        let reference = reference_pair(beta, horizon)?;
        Ok(Self::from_reference(beta, variant, reference))
    }

    pub fn from_reference(beta: &BetaSpec, variant: ShiftVariant, reference: ReferencePair) -> Self {
        let lower = match variant {
            ShiftVariant::ItoSadahiro => reference.d.clone(),
            ShiftVariant::Corrected => reference.d_star.clone(),
        };
        let upper = reference.d_star.prepend(&[0]);
        Language { beta: beta.clone(), variant, reference, lower, upper }
    }

    pub fn lower(&self) -> &SymbolicSequence {
        &self.lower
    }

    pub fn upper(&self) -> &SymbolicSequence {
        &self.upper
    }

    fn bounds(&self, n: usize) -> Result<(Word, Word)> {
        Ok((self.lower.take(n)?, self.upper.take(n)?))
    }

    pub fn is_admissible(&self, w: &[Digit]) -> Result<bool> {
        let (lo, hi) = self.bounds(w.len())?;
        let d1 = self.beta.d1();
        if w.iter().any(|&a| a > d1) {
            return Ok(false);
        }
        Ok((0..w.len()).all(|m| suffix_ok(&w[m..], &lo, &hi)))
    }

    /// Visit every admissible word of length 1..=n (the language is prefix-closed).
    pub fn walk(&self, n: usize, mut visit: impl FnMut(&[Digit])) -> Result<()> {
        let (lo, hi) = self.bounds(n)?;
        let mut word = Vec::with_capacity(n);
        extend(&mut word, &[], &[], n, &lo, &hi, self.beta.d1(), &mut visit);
        Ok(())
    }

    pub fn enumerate(&self, n: usize) -> Result<WordSet> {
        let mut words = Vec::new();
        self.walk(n, |w| {
            if w.len() == n {
                words.push(w.to_vec());
            }
        })?;
        Ok(WordSet::new(words, n))
    }

    /// Number of admissible words of each length 0..=n.
    pub fn census(&self, n: usize) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        self.walk(n, |w| counts[w.len()] += 1)?;
        Ok(counts)
    }
}

/// lower ⪯ s ⪯ upper on the prefixes of length |s|.
fn suffix_ok(s: &[Digit], lo: &[Digit], hi: &[Digit]) -> bool {
    let k = s.len();
    crate::order::alt_cmp(&lo[..k], s) != Ordering::Greater && crate::order::alt_cmp(s, &hi[..k]) != Ordering::Greater
}

/// Depth-first extension keeping the suffix starts still tied with each bound.
#[allow(clippy::too_many_arguments)]
fn extend(
    word: &mut Vec<Digit>,
    tied_lo: &[usize],
    tied_hi: &[usize],
    n: usize,
    lo: &[Digit],
    hi: &[Digit],
    d1: Digit,
    visit: &mut dyn FnMut(&[Digit]),
) {
    let m = word.len();
    if m == n {
        return;
    }
    let mut next_lo = Vec::with_capacity(tied_lo.len() + 1);
    let mut next_hi = Vec::with_capacity(tied_hi.len() + 1);
    'digits: for a in 0..=d1 {
        next_lo.clear();
        next_hi.clear();
        for &j in tied_lo.iter().chain(std::iter::once(&m)) {
            let k = m - j;
            let b = lo[k];
            if a == b {
                next_lo.push(j);
            } else if alt_at(k + 1, b, a) != Ordering::Less {
                continue 'digits;
            }
        }
        for &j in tied_hi.iter().chain(std::iter::once(&m)) {
            let k = m - j;
            let b = hi[k];
            if a == b {
                next_hi.push(j);
            } else if alt_at(k + 1, a, b) != Ordering::Less {
                continue 'digits;
            }
        }
        word.push(a);
        visit(word);
        let (tl, th) = (next_lo.clone(), next_hi.clone());
        extend(word, &tl, &th, n, lo, hi, d1, visit);
        word.pop();
    }
}

pub fn is_admissible_word(w: &[Digit], beta: &BetaSpec, v: ShiftVariant, horizon: usize) -> Result<bool> {
    Language::new(beta, v, horizon.max(w.len() + 1))?.is_admissible(w)
}

pub fn enumerate_words(n: usize, beta: &BetaSpec, v: ShiftVariant, horizon: usize) -> Result<WordSet> {
    if n == 0 {
        return Err(Error::PreconditionViolated("word length must be positive".into()));
    }
    Language::new(beta, v, horizon.max(n + 1))?.enumerate(n)
}

/// H_0..H_n from H_n = Σ_{k=1..n} (−1)^k (d*_{k−1} − d*_k) H_{n−k} + 1.
pub fn factor_complexity(n: usize, d_star: &SymbolicSequence) -> Result<Vec<BigInt>> {
    let d = d_star.take(n)?;
    let dd = |i: usize| if i == 0 { 0i64 } else { d[i - 1] as i64 };
    let mut h = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::one();
        for k in 1..=m {
            let c = dd(k - 1) - dd(k);
            let c = if k % 2 == 1 { -c } else { c };
            if c != 0 {
                acc += BigInt::from(c) * &h[m - k];
            }
        }
        h.push(acc);
    }
    Ok(h)
}

/// Pair of words (left, right) such that no admissible Y makes left·Y·right admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub left: Word,
    pub right: Word,
}

impl Witness {
    pub fn joined(&self) -> Word {
        [self.left.as_slice(), self.right.as_slice()].concat()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub s_coded: bool,
    pub s_tilde_coded: bool,
    pub transitive: bool,
    pub witness: Option<Witness>,
    pub periodic_odd: Option<usize>,
    /// β ≥ golden ratio, decided from d against 1 0̄.
    pub at_least_golden: bool,
}

/// d(l) of the golden ratio.
pub fn golden_reference() -> SymbolicSequence {
    SymbolicSequence::periodic(vec![1], vec![0]).expect("nonempty period")
}

/// β ≥ γ0 exactly when d(l_β) ⪯ 1 0̄.
pub fn at_least_golden(rp: &ReferencePair) -> Result<bool> {
    match alt_compare_seq(&rp.d, &golden_reference(), None) {
        Ok(o) => Ok(o != Ordering::Greater),
        Err(_) => Err(Error::UnknownAtHorizon { horizon: rp.horizon }),
    }
}

pub fn classify(beta: &BetaSpec, horizon: usize) -> Result<Classification> {
    let rp = reference_pair(beta, horizon)?;
    let golden = at_least_golden(&rp)?;
    let odd = rp.odd_period();
    if golden && odd.is_none() && rp.status == TailStatus::Unknown {
        // a purely periodic d with odd period beyond the horizon cannot be excluded
        return Err(Error::UnknownAtHorizon { horizon });
    }
    let coded = golden && odd.is_none();
    let witness = if !golden {
        Some(sub_golden_witness(&rp)?)
    } else if odd.is_some() {
        Some(odd_period_witness(beta, &rp)?)
    } else {
        None
    };
    Ok(Classification {
        s_coded: coded,
        s_tilde_coded: golden,
        transitive: coded,
        witness,
        periodic_odd: odd,
        at_least_golden: golden,
    })
}

/// d starts 1 0^{2(i0−1)} 1; after a 1 at most 2(i0−1) zeros may follow.
fn sub_golden_witness(rp: &ReferencePair) -> Result<Witness> {
    let limit = rp.d.known_len().unwrap_or(usize::MAX);
    let mut pos = 2;
    loop {
        if pos > limit {
            return Err(Error::UnknownAtHorizon { horizon: rp.horizon });
        }
        if rp.d.digit(pos) != Some(0) {
            break;
        }
        pos += 1;
    }
    let i0 = pos / 2;
    Ok(Witness { left: vec![1], right: vec![0; 2 * i0 - 1] })
}

/// d = (d1…d_{2n−1})̄: after the period only d itself can follow, so any admissible
/// X = d1…d_{p−1} j with (−1)^p (d_p − j) < 0 is unreachable.
fn odd_period_witness(beta: &BetaSpec, rp: &ReferencePair) -> Result<Witness> {
    let left = rp.d.period().expect("periodic").to_vec();
    let lang = Language::from_reference(beta, ShiftVariant::ItoSadahiro, rp.clone());
    for p in 1..=left.len() * 4 {
        let dp = rp.d.digit(p).expect("periodic");
        for j in 0..=beta.d1() {
            if j == dp || alt_at(p, dp, j) != Ordering::Less {
                continue;
            }
            let mut x = rp.d.take(p - 1)?;
            x.push(j);
            if lang.is_admissible(&x)? {
                return Ok(Witness { left, right: x });
            }
        }
    }
    Err(Error::PreconditionViolated("no witness found".into()))
}

/// Brute-force count of period-n points. Each candidate word w is periodized and every
/// rotation compared exactly against d (from below) and 0·d* (from above, strict for the
/// transformation).
pub fn count_periodic_points(n: usize, beta: &BetaSpec, target: PeriodicTarget, horizon: usize) -> Result<u64> {
    let lang = Language::new(beta, ShiftVariant::ItoSadahiro, horizon.max(n + 1))?;
    count_periodic_points_in(&lang, n, target)
}

pub fn count_periodic_points_in(lang: &Language, n: usize, target: PeriodicTarget) -> Result<u64> {
    if n == 0 {
        return Err(Error::PreconditionViolated("period must be positive".into()));
    }
    let mut count = 0u64;
    let mut failure = None;
    lang.walk(n, |w| {
        if w.len() != n || failure.is_some() {
            return;
        }
        match periodic_word_ok(lang, w, target) {
            Ok(true) => count += 1,
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

fn periodic_word_ok(lang: &Language, w: &[Digit], target: PeriodicTarget) -> Result<bool> {
    let horizon = lang.reference.horizon;
    let undecided = |_| Error::HorizonTooShort { needed: horizon + 1, available: horizon };
    for k in 0..w.len() {
        let mut r = w[k..].to_vec();
        r.extend_from_slice(&w[..k]);
        let x = SymbolicSequence::purely_periodic(r)?;
        if alt_compare_seq(&lang.reference.d, &x, Some(horizon)).map_err(undecided)? == Ordering::Greater {
            return Ok(false);
        }
        let up = alt_compare_seq(&x, lang.upper(), Some(horizon)).map_err(undecided)?;
        let ok = match target {
            PeriodicTarget::Shift => up != Ordering::Greater,
            PeriodicTarget::Transformation => up == Ordering::Less,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::parse_word;

    fn words(list: &str) -> Vec<Word> {
        let mut v: Vec<Word> = list.split(',').map(|s| parse_word(s.trim()).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn five_halves_small_lengths() {
        let b = BetaSpec::rational(5, 2).unwrap();
        let w2 = enumerate_words(2, &b, ShiftVariant::Corrected, 64).unwrap();
        assert_eq!(w2.sorted_lex(), words("21,22,10,11,12,00,01,02"));
        let w3 = enumerate_words(3, &b, ShiftVariant::Corrected, 64).unwrap();
        assert_eq!(w3.len(), 20);
    }

    #[test]
    fn admissibility_examples() {
        let g = BetaSpec::golden();
        assert!(is_admissible_word(&[1, 1], &g, ShiftVariant::Corrected, 32).unwrap());
        let b = BetaSpec::rational(13, 10).unwrap();
        assert!(!is_admissible_word(&[1, 0, 0, 0], &b, ShiftVariant::Corrected, 64).unwrap());
        assert!(is_admissible_word(&[0], &b, ShiftVariant::Corrected, 64).unwrap());
    }

    #[test]
    fn complexity_recurrence() {
        let d = SymbolicSequence::parse("1(0)").unwrap();
        let h = factor_complexity(4, &d).unwrap();
        assert_eq!(h, [1, 2, 4, 7, 12].map(BigInt::from).to_vec());
    }

    #[test]
    fn periodic_point_examples() {
        let g = BetaSpec::golden();
        assert_eq!(count_periodic_points(1, &g, PeriodicTarget::Transformation, 32).unwrap(), 2);
        assert_eq!(count_periodic_points(3, &g, PeriodicTarget::Transformation, 32).unwrap(), 5);
        let two = BetaSpec::rational(2, 1).unwrap();
        assert_eq!(count_periodic_points(1, &two, PeriodicTarget::Transformation, 32).unwrap(), 3);
        assert_eq!(count_periodic_points(2, &two, PeriodicTarget::Transformation, 32).unwrap(), 3);
        assert_eq!(count_periodic_points(2, &two, PeriodicTarget::Shift, 32).unwrap(), 5);
    }

    #[test]
    fn classification_examples() {
        let c = classify(&BetaSpec::golden(), 64).unwrap();
        assert!(c.s_coded && c.s_tilde_coded && c.transitive);
        let c = classify(&BetaSpec::rational(2, 1).unwrap(), 64).unwrap();
        assert!(!c.s_coded && c.s_tilde_coded && !c.transitive);
        assert_eq!(c.periodic_odd, Some(1));
        let w = c.witness.unwrap();
        assert_eq!((w.left, w.right), (vec![2], vec![0]));
        let c = classify(&BetaSpec::rational(13, 10).unwrap(), 64).unwrap();
        assert!(!c.transitive && !c.s_tilde_coded);
        assert_eq!(c.witness.unwrap().joined(), vec![1, 0, 0, 0]);
    }
}
