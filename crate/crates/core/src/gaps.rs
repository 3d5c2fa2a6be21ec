//! Below the golden ratio: the ψ-morphism words, the cascade γ_n, factorization of d(l)
//! over {u_n, v_n}, gap intervals and forbidden words.

use crate::codes::WordSet;
use crate::error::{Error, Result};
use crate::expansion::{expand, run_orbit, default_width};
use crate::numerics::{BetaSpec, FieldElement, RationalInterval};
use crate::order::{Digit, Word};
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismPair {
    pub n: usize,
    pub u: Word,
    pub v: Word,
}

/// u_0 = 1, v_0 = 00, u_n = u_{n−1}v_{n−1}, v_n = u_{n−1}u_{n−1}.
pub fn morphism_words(n: usize) -> MorphismPair {
    let (mut u, mut v) = (vec![1], vec![0, 0]);
    for _ in 0..n {
        let nu = [u.as_slice(), v.as_slice()].concat();
        let nv = [u.as_slice(), u.as_slice()].concat();
        u = nu;
        v = nv;
    }
    MorphismPair { n, u, v }
}

/// u_k with the convention u_{−1} = 0.
pub fn u_word(k: isize) -> Word {
    if k < 0 {
        vec![0]
    } else {
        morphism_words(k as usize).u
    }
}

/// Prefix of the fixed point of ψ(1) = 100, ψ(0) = 1.
pub fn psi_fixed_point(len: usize) -> Word {
    let mut w: Word = vec![1];
    while w.len() < len {
        w = w.iter().flat_map(|&a| if a == 1 { vec![1, 0, 0] } else { vec![1] }).collect();
    }
    w.truncate(len);
    w
}

fn gamma_cache() -> &'static Mutex<HashMap<usize, BetaSpec>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BetaSpec>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Largest root of X^{l_n} − X − 1 with l_n = max(|u_n|, |v_n|).
pub fn gamma_n(n: usize) -> BetaSpec {
    if let Some(b) = gamma_cache().lock().expect("cache").get(&n) {
        return b.clone();
    }
    let m = morphism_words(n);
    let l = m.u.len().max(m.v.len());
    let mut coeffs = vec![0i64; l + 1];
    coeffs[0] = 1;
    coeffs[l - 1] = -1;
    coeffs[l] = -1;
    let b = BetaSpec::root(&coeffs, 1, 2).expect("X^l − X − 1 has one root in (1, 2]");
    gamma_cache().lock().expect("cache").insert(n, b.clone());
    b
}

/// The n with γ_{n+1} ≤ β < γ_n.
pub fn cascade_classify(beta: &BetaSpec) -> Result<usize> {
    if beta.compare_real(&gamma_n(0)) != Ordering::Less {
        return Err(Error::NotInRange);
    }
    let mut n = 0;
    while beta.compare_real(&gamma_n(n + 1)) == Ordering::Less {
        n += 1;
    }
    Ok(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    U,
    V,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub level: usize,
    pub words: MorphismPair,
    pub factors: Vec<Factor>,
    /// Runs of consecutive v_n between successive u_n.
    pub v_runs: Vec<usize>,
    /// Digits parsed; anything after is a proper prefix of u_n or v_n.
    pub parsed_len: usize,
}

/// Greedy factorization of d(l_β, −β) over {u_n, v_n}, n the cascade level.
pub fn decompose_expansion(beta: &BetaSpec, horizon: usize) -> Result<Decomposition> {
    let level = cascade_classify(beta)?;
    let words = morphism_words(level);
    let need = 2 * words.v.len().max(words.u.len());
    if horizon < need {
        return Err(Error::HorizonTooShort { needed: need, available: horizon });
    }
    let rp = crate::expansion::reference_pair(beta, horizon)?;
    let digits = match rp.d.known_len() {
        Some(k) => rp.d.take(k.min(horizon))?,
        None => rp.d.take(horizon)?,
    };
    let (u, v) = (&words.u, &words.v);
    let mut factors = Vec::new();
    let mut pos = 0;
    while pos < digits.len() {
        let rest = &digits[pos..];
        if rest.starts_with(u) {
            factors.push(Factor::U);
            pos += u.len();
        } else if rest.starts_with(v) {
            factors.push(Factor::V);
            pos += v.len();
        } else if u.starts_with(rest) || v.starts_with(rest) {
            break;
        } else {
            return Err(Error::ParseFailure { position: pos });
        }
    }
    if factors.first() != Some(&Factor::U) {
        return Err(Error::ParseFailure { position: 0 });
    }
    let mut v_runs = Vec::new();
    let mut run = 0;
    for f in factors.iter().skip(1) {
        match f {
            Factor::V => run += 1,
            Factor::U => {
                v_runs.push(run);
                run = 0;
            }
        }
    }
    v_runs.push(run);
    Ok(Decomposition { level, words, factors, v_runs, parsed_len: pos })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInterval {
    pub k: usize,
    pub i: usize,
    pub left_index: usize,
    pub right_index: usize,
    pub left: FieldElement,
    pub right: FieldElement,
    pub left_enclosure: RationalInterval,
    pub right_enclosure: RationalInterval,
}

impl GapInterval {
    /// A rational point strictly inside the gap.
    pub fn sample_point(&self) -> BigRational {
        (&self.left_enclosure.hi + &self.right_enclosure.lo) / BigRational::from_integer(2.into())
    }
}

/// A_{k,i} = [s_a, s_b) with a = |u_k| + i, b = |u_k| + |u_{k−1}| + i for even i, the
/// endpoints swapped for odd i, and s_t = T^t(l).
pub fn gap_intervals(beta: &BetaSpec, k: usize, i: usize) -> Result<GapInterval> {
    let level = cascade_classify(beta)?;
    if k > level {
        return Err(Error::IndexOutOfRange(format!("k = {k} exceeds cascade level {level}")));
    }
    let uk = u_word(k as isize).len();
    let uk1 = u_word(k as isize - 1).len();
    if i >= uk1 {
        return Err(Error::IndexOutOfRange(format!("i = {i} not below |u_(k-1)| = {uk1}")));
    }
    let (mut a, mut b) = (uk + i, uk + uk1 + i);
    if i % 2 == 1 {
        std::mem::swap(&mut a, &mut b);
    }
    let orbit = run_orbit(&beta.l(), beta, a.max(b) + 1);
    let s = |t: usize| -> Result<FieldElement> {
        if t < orbit.points.len() {
            return Ok(orbit.points[t].clone());
        }
        let (start, len) = orbit.cycle.ok_or(Error::HorizonTooShort { needed: t, available: orbit.points.len() })?;
        Ok(orbit.points[start + (t - start) % len].clone())
    };
    let (left, right) = (s(a)?, s(b)?);
    if left.compare(&right) != Ordering::Less {
        return Err(Error::PreconditionViolated(format!("gap endpoints s_{a}, s_{b} out of order")));
    }
    let w = default_width();
    let (mut le, mut re) = (left.enclose_width(&w), right.enclose_width(&w));
    let mut width = w;
    while le.hi >= re.lo {
        width = &width / BigRational::from_integer(1024.into());
        le = left.enclose_width(&width);
        re = right.enclose_width(&width);
    }
    Ok(GapInterval { k, i, left_index: a, right_index: b, left, right, left_enclosure: le, right_enclosure: re })
}

/// Every A_{k,i} for k ≤ level and i < |u_{k−1}|.
pub fn all_gaps(beta: &BetaSpec) -> Result<Vec<GapInterval>> {
    let level = cascade_classify(beta)?;
    let mut out = Vec::new();
    for k in 0..=level {
        for i in 0..u_word(k as isize - 1).len() {
            out.push(gap_intervals(beta, k, i)?);
        }
    }
    Ok(out)
}

/// Prefixes σ^i(u_{k−1})u_{k−1}u_{k−1} and σ^i(u_{k−1})u_k u_k for a gap A_{k,i}.
pub fn gap_patterns(k: usize, i: usize) -> [Word; 2] {
    let uk = u_word(k as isize);
    let uk1 = u_word(k as isize - 1);
    let head = &uk1[i.min(uk1.len())..];
    [[head, &uk1, &uk1].concat(), [head, &uk, &uk].concat()]
}

/// Does the expansion of a sampled point of the gap start with one of its patterns?
pub fn gap_sample_matches(beta: &BetaSpec, gap: &GapInterval) -> Result<bool> {
    let pats = gap_patterns(gap.k, gap.i);
    let len = pats.iter().map(Vec::len).max().unwrap_or(0);
    let x = beta.from_rational(gap.sample_point());
    let e = expand(&x, beta, len + 2)?;
    let digits = e.seq.take(len)?;
    Ok(pats.iter().any(|p| digits.starts_with(p)))
}

/// u_k^4 and u_k u_{k+1} u_{k+2} for −1 ≤ k < n, with their σ^i variants (i < |u_k|).
pub fn forbidden_words(n: usize) -> WordSet {
    let mut words: Vec<Word> = Vec::new();
    let mut max = 0;
    for k in -1..n as isize {
        let a = u_word(k);
        let b = u_word(k + 1);
        let c = u_word(k + 2);
        for i in 0..a.len() {
            let head: &[Digit] = &a[i..];
            words.push([head, &a, &a, &a].concat());
            words.push([head, &b, &c].concat());
        }
    }
    for w in &words {
        max = max.max(w.len());
    }
    WordSet::new(words, max)
}
