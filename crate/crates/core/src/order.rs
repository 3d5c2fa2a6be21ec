//! Alternating lexicographic order on words and on eventually periodic sequences.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::cmp::Ordering;
use std::fmt;

pub type Digit = u32;
pub type Word = Vec<Digit>;

/// Tail of a digit sequence after its explicit prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    Periodic(Word),
    Truncated,
}

/// A digit sequence: explicit prefix, then either a repeated period or nothing known.
/// Periodic sequences are kept with minimal period and minimal preperiod.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicSequence {
    prefix: Word,
    tail: Tail,
}

impl SymbolicSequence {
    pub fn periodic(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::PreconditionViolated("empty period".into()));
        }
        let (prefix, period) = canonicalize(prefix, period);
        Ok(SymbolicSequence { prefix, tail: Tail::Periodic(period) })
    }

    pub fn purely_periodic(period: Word) -> Result<Self> {
        Self::periodic(Vec::new(), period)
    }

    pub fn truncated(prefix: Word) -> Self {
        SymbolicSequence { prefix, tail: Tail::Truncated }
    }

    pub fn prefix(&self) -> &[Digit] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn period(&self) -> Option<&[Digit]> {
        match &self.tail {
            Tail::Periodic(p) => Some(p),
            Tail::Truncated => None,
        }
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.tail, Tail::Periodic(_))
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.is_periodic() && self.prefix.is_empty()
    }

    /// Minimal period length when the sequence is purely periodic with odd period.
    pub fn odd_pure_period(&self) -> Option<usize> {
        match &self.tail {
            Tail::Periodic(p) if self.prefix.is_empty() && p.len() % 2 == 1 => Some(p.len()),
            _ => None,
        }
    }

    /// Number of digits available (None means all of them).
    pub fn known_len(&self) -> Option<usize> {
        match self.tail {
            Tail::Periodic(_) => None,
            Tail::Truncated => Some(self.prefix.len()),
        }
    }

    /// Digit at 1-based index `i` (index 0 reads as 0).
    pub fn digit(&self, i: usize) -> Option<Digit> {
        if i == 0 {
            return Some(0);
        }
        let k = i - 1;
        if k < self.prefix.len() {
            return Some(self.prefix[k]);
        }
        match &self.tail {
            Tail::Periodic(p) => Some(p[(k - self.prefix.len()) % p.len()]),
            Tail::Truncated => None,
        }
    }

    /// First `n` digits.
    pub fn take(&self, n: usize) -> Result<Word> {
        if let Some(k) = self.known_len() {
            if k < n {
                return Err(Error::HorizonTooShort { needed: n, available: k });
            }
        }
        Ok((1..=n).map(|i| self.digit(i).expect("within known range")).collect())
    }

    /// Same sequence with `w` prepended.
    pub fn prepend(&self, w: &[Digit]) -> SymbolicSequence {
        let mut prefix = w.to_vec();
        prefix.extend_from_slice(&self.prefix);
        match &self.tail {
            Tail::Periodic(p) => SymbolicSequence::periodic(prefix, p.clone()).expect("nonempty period"),
            Tail::Truncated => SymbolicSequence::truncated(prefix),
        }
    }

    /// Drop the first `k` digits.
    pub fn shift(&self, k: usize) -> SymbolicSequence {
        if k <= self.prefix.len() {
            let prefix = self.prefix[k..].to_vec();
            return match &self.tail {
                Tail::Periodic(p) => SymbolicSequence::periodic(prefix, p.clone()).expect("nonempty period"),
                Tail::Truncated => SymbolicSequence::truncated(prefix),
            };
        }
        match &self.tail {
            Tail::Periodic(p) => {
                let r = (k - self.prefix.len()) % p.len();
                let mut q = p[r..].to_vec();
                q.extend_from_slice(&p[..r]);
                SymbolicSequence::periodic(Vec::new(), q).expect("nonempty period")
            }
            Tail::Truncated => SymbolicSequence::truncated(Vec::new()),
        }
    }

    /// Parse `2012(1)`-style syntax; comma separated digits are accepted too.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match s.find('(') {
            None => Ok(SymbolicSequence::truncated(parse_word(&s)?)),
            Some(open) => {
                if !s.ends_with(')') || s[open + 1..s.len() - 1].contains(['(', ')']) {
                    return Err(Error::DigitSyntax(s.clone()));
                }
                let prefix = parse_word(s[..open].trim_end_matches(','))?;
                let period = parse_word(&s[open + 1..s.len() - 1])?;
                SymbolicSequence::periodic(prefix, period).map_err(|_| Error::DigitSyntax(s.clone()))
            }
        }
    }
}

fn canonicalize(mut prefix: Word, period: Word) -> (Word, Word) {
    let n = period.len();
    let mut p = n;
    for cand in 1..n {
        if n.is_multiple_of(cand) && (0..n).all(|i| period[i] == period[i % cand]) {
            p = cand;
            break;
        }
    }
    let mut period = period[..p].to_vec();
    while let Some(&last) = prefix.last() {
        if last != period[period.len() - 1] {
            break;
        }
        prefix.pop();
        period.rotate_right(1);
    }
    (prefix, period)
}

pub fn parse_word(s: &str) -> Result<Word> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::DigitSyntax(s.to_string());
    if s.contains(',') {
        s.split(',').filter(|t| !t.is_empty()).map(|t| t.parse::<Digit>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

pub fn format_word(w: &[Digit]) -> String {
    if w.iter().all(|&d| d < 10) {
        w.iter().map(|d| char::from_digit(*d, 10).expect("single digit")).collect()
    } else {
        w.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for SymbolicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.prefix.iter().chain(self.period().unwrap_or(&[])).any(|&d| d >= 10);
        let fmt_part = |w: &[Digit]| {
            if wide {
                w.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            } else {
                format_word(w)
            }
        };
        write!(f, "{}", fmt_part(&self.prefix))?;
        match &self.tail {
            Tail::Periodic(p) => {
                if wide && !self.prefix.is_empty() {
                    write!(f, ",")?;
                }
                write!(f, "({})", fmt_part(p))
            }
            Tail::Truncated => write!(f, "..."),
        }
    }
}

/// Verdict of the alternating order at 1-based position `k` where the digits differ.
#[inline]
pub(crate) fn alt_at(k: usize, a: Digit, b: Digit) -> Ordering {
    // a ≺ b iff (-1)^k (a - b) < 0
    let natural = a.cmp(&b);
    if k % 2 == 1 {
        natural.reverse()
    } else {
        natural
    }
}

/// Compare equal-length slices, positions counted from 1.
pub(crate) fn alt_cmp(u: &[Digit], v: &[Digit]) -> Ordering {
    for (k, (a, b)) in u.iter().zip(v).enumerate() {
        if a != b {
            return alt_at(k + 1, *a, *b);
        }
    }
    Ordering::Equal
}

pub fn alt_compare(u: &[Digit], v: &[Digit]) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(alt_cmp(u, v))
}

/// Compare two sequences. Exact for periodic tails; otherwise compared within the known
/// digits, capped by `horizon` when given.
pub fn alt_compare_seq(x: &SymbolicSequence, y: &SymbolicSequence, horizon: Option<usize>) -> Result<Ordering> {
    let bound = match (x.period(), y.period()) {
        (Some(px), Some(py)) => Some(x.prefix.len().max(y.prefix.len()) + px.len().lcm(&py.len()) + 1),
        _ => None,
    };
    let limit = match bound {
        Some(b) => b,
        None => {
            let known = [x.known_len(), y.known_len()].into_iter().flatten().min().unwrap_or(0);
            horizon.map_or(known, |h| h.min(known))
        }
    };
    for k in 1..=limit {
        let a = x.digit(k).expect("within limit");
        let b = y.digit(k).expect("within limit");
        if a != b {
            return Ok(alt_at(k, a, b));
        }
    }
    if bound.is_some() {
        Ok(Ordering::Equal)
    } else {
        Err(Error::UndecidedAtHorizon { horizon: limit })
    }
}

/// Outcome of checking the concatenation rules on one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatReport {
    /// w·u versus w·v behaves as the parity of |w| predicts.
    pub prepend_holds: bool,
    /// u·w ≺ v·w.
    pub append_holds: bool,
}

impl ConcatReport {
    pub fn holds(&self) -> bool {
        self.prepend_holds && self.append_holds
    }
}

pub fn concat_order_check(u: &[Digit], v: &[Digit], w: &[Digit]) -> Result<ConcatReport> {
    if alt_compare(u, v)? != Ordering::Less {
        return Err(Error::PreconditionViolated("expected u ≺ v".into()));
    }
    let cat = |a: &[Digit], b: &[Digit]| [a, b].concat();
    let pre = alt_cmp(&cat(w, u), &cat(w, v));
    let expected = if w.len().is_multiple_of(2) { Ordering::Less } else { Ordering::Greater };
    Ok(ConcatReport {
        prepend_holds: pre == expected,
        append_holds: alt_cmp(&cat(u, w), &cat(v, w)) == Ordering::Less,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> SymbolicSequence {
        SymbolicSequence::parse(s).unwrap()
    }

    #[test]
    fn word_examples() {
        assert_eq!(alt_compare(&[1, 0, 1], &[1, 0, 0]).unwrap(), Ordering::Less);
        assert_eq!(alt_compare(&[2, 0, 1, 1], &[2, 0, 1, 2]).unwrap(), Ordering::Less);
        assert_eq!(alt_compare(&[2, 1, 1], &[1, 0, 0]).unwrap(), Ordering::Less);
        assert!(matches!(alt_compare(&[1], &[1, 0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(alt_compare_seq(&seq("1(0)"), &seq("1(0)"), None).unwrap(), Ordering::Equal);
        assert_eq!(alt_compare_seq(&seq("(2)"), &seq("(10)"), None).unwrap(), Ordering::Less);
        assert_eq!(alt_compare_seq(&seq("(100)"), &seq("1(0)"), None).unwrap(), Ordering::Greater);
        let t = SymbolicSequence::truncated(vec![1, 0, 0]);
        assert!(matches!(alt_compare_seq(&t, &seq("1(0)"), None), Err(Error::UndecidedAtHorizon { .. })));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(seq("2012(1)").to_string(), "2012(1)");
        assert_eq!(seq("1(00)").to_string(), "1(0)");
        assert_eq!(seq("12(12)"), seq("(12)"));
        assert_eq!(seq("3(2121)").to_string(), "3(21)");
        assert_eq!(seq("1(21)").to_string(), "(12)");
        assert_eq!(seq("10,2,(3)").to_string(), "10,2,(3)");
        assert_eq!(seq("10,2,(3)").digit(1), Some(10));
    }

    #[test]
    fn concat_examples() {
        // at odd positions the larger digit is the smaller word, so (1) ≺ (0)
        assert!(concat_order_check(&[1], &[0], &[1]).unwrap().holds());
        assert_eq!(alt_cmp(&[1, 0], &[1, 1]), Ordering::Less);
        assert!(concat_order_check(&[1], &[0], &[0, 0]).unwrap().holds());
        assert_eq!(alt_cmp(&[0, 0, 1], &[0, 0, 0]), Ordering::Less);
        assert!(concat_order_check(&[1], &[0], &[7]).unwrap().holds());
        assert!(matches!(concat_order_check(&[0], &[1], &[7]), Err(Error::PreconditionViolated(_))));
    }
}
