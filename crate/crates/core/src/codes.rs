//! Block structure of d and the prefix-code families built from it.

use crate::error::{Error, Result};
use crate::expansion::corrected;
use crate::numerics::{BetaSpec, FieldElement, RationalInterval};
use crate::order::{alt_at, format_word, Digit, SymbolicSequence, Word};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

/// A finite family of words, kept sorted by length then digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    words: Vec<Word>,
    complete_to: usize,
    contains_empty: bool,
}

impl WordSet {
    /// Empty words are recorded through the flag, never stored.
    pub fn new(words: impl IntoIterator<Item = Word>, complete_to: usize) -> Self {
        let mut contains_empty = false;
        let mut set = BTreeSet::new();
        for w in words {
            if w.is_empty() {
                contains_empty = true;
            } else {
                set.insert((w.len(), w));
            }
        }
        WordSet { words: set.into_iter().map(|(_, w)| w).collect(), complete_to, contains_empty }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn complete_to(&self) -> usize {
        self.complete_to
    }

    pub fn contains_empty(&self) -> bool {
        self.contains_empty
    }

    pub fn contains(&self, w: &[Digit]) -> bool {
        self.words
            .binary_search_by(|x| (x.len(), x.as_slice()).cmp(&(w.len(), w)))
            .is_ok()
    }

    pub fn min_len(&self) -> Option<usize> {
        self.words.first().map(Vec::len)
    }

    pub fn census(&self) -> BTreeMap<usize, u64> {
        let mut c = BTreeMap::new();
        for w in &self.words {
            *c.entry(w.len()).or_insert(0) += 1;
        }
        c
    }

    /// Counts b_0..b_n (b_0 is always 0; the empty word is reported by its flag).
    pub fn census_vec(&self, n: usize) -> Vec<u64> {
        let mut c = vec![0; n + 1];
        for w in &self.words {
            if w.len() <= n {
                c[w.len()] += 1;
            }
        }
        c
    }

    pub fn sorted_lex(&self) -> Vec<Word> {
        let mut v = self.words.clone();
        v.sort();
        v
    }

    pub fn union(&self, other: &WordSet) -> WordSet {
        let mut s = WordSet::new(
            self.words.iter().chain(other.words.iter()).cloned(),
            self.complete_to.min(other.complete_to),
        );
        s.contains_empty = self.contains_empty || other.contains_empty;
        s
    }

    pub fn with_empty(mut self, flag: bool) -> Self {
        self.contains_empty = flag;
        self
    }

    pub fn to_json(&self) -> Value {
        let census: serde_json::Map<String, Value> =
            self.census().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "complete_to": self.complete_to,
            "census": census,
            "words": self.words.iter().map(|w| format_word(w)).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub n: usize,
    pub p: usize,
    /// false when the repetition still matched at the last known digit
    pub p_exact: bool,
}

impl Block {
    /// 2n − 1, the length of B_i.
    pub fn word_len(&self) -> usize {
        2 * self.n - 1
    }

    /// 2n + p, the index of the first digit after the repetition.
    pub fn end(&self) -> usize {
        2 * self.n + self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub blocks: Vec<Block>,
    pub scan_horizon: usize,
    pub complete: bool,
}

/// Digits to read for a scan up to `horizon`: periodic sequences are unrolled far enough
/// that any repetition which is still matching has provably become infinite.
fn unrolled(d: &SymbolicSequence, horizon: usize) -> Result<Word> {
    match d.period() {
        Some(p) => d.take(2 * horizon + d.prefix().len() + 2 * p.len() + 2),
        None => {
            let k = d.known_len().unwrap_or(0);
            if k < horizon {
                return Err(Error::HorizonTooShort { needed: horizon, available: k });
            }
            d.take(k)
        }
    }
}

fn scan_blocks(digits: &[Digit], horizon: usize) -> Vec<Block> {
    let len = digits.len();
    let d = |i: usize| digits[i - 1];
    let mut blocks = Vec::new();
    let mut pos = 2;
    while pos <= horizon.min(len) {
        if d(pos) == d(1) {
            let n = pos / 2;
            let mut p = 0;
            while 2 * n + p <= len && d(2 * n + p) == d(p + 1) {
                p += 1;
            }
            let p_exact = 2 * n + p <= len;
            blocks.push(Block { n, p, p_exact });
            pos = 2 * n + p + 1;
            if pos % 2 == 1 {
                pos += 1;
            }
        } else {
            pos += 2;
        }
    }
    blocks
}

pub fn block_structure(d: &SymbolicSequence, horizon: usize) -> Result<BlockStructure> {
    let digits = unrolled(d, horizon)?;
    let blocks = scan_blocks(&digits, horizon);
    let complete = match d.period() {
        Some(p) => horizon >= d.prefix().len() + 2 * p.len(),
        None => false,
    };
    Ok(BlockStructure { blocks, scan_horizon: horizon, complete })
}

/// Everything the family constructions read, built once from d* up to a word length.
struct Families {
    d: Word,
    d1: Digit,
    blocks: Vec<Block>,
    max_len: usize,
}

const INF: usize = usize::MAX;

impl Families {
    fn new(d: &SymbolicSequence, max_len: usize) -> Result<Self> {
        let r = corrected(d)?;
        let scan = max_len + 2;
        let needed = 2 * max_len + 4;
        let digits = match r.period() {
            Some(_) => unrolled(&r, needed)?,
            None => {
                let k = r.known_len().unwrap_or(0);
                if k < needed {
                    return Err(Error::HorizonTooShort { needed, available: k });
                }
                r.take(k)?
            }
        };
        let blocks = scan_blocks(&digits, scan);
        let d1 = digits[0];
        Ok(Families { d: digits, d1, blocks, max_len })
    }

    fn dd(&self, i: usize) -> Digit {
        if i == 0 {
            0
        } else {
            self.d[i - 1]
        }
    }

    fn prefix(&self, n: usize) -> Word {
        self.d[..n].to_vec()
    }

    fn block_word(&self, t: usize) -> &[Digit] {
        &self.d[..self.blocks[t].word_len()]
    }

    /// Index windows [2n_i + p_i, 2n_{i+1} − 1) for i = 0, 1, …
    fn windows(&self) -> Vec<(usize, usize)> {
        (0..=self.blocks.len())
            .map(|i| {
                let lo = if i == 0 { 0 } else { self.blocks[i - 1].end() };
                let hi = self.blocks.get(i).map_or(INF, |b| b.word_len());
                (lo, hi)
            })
            .collect()
    }

    fn in_window(&self, m: usize) -> bool {
        self.windows().iter().any(|&(lo, hi)| lo <= m && m < hi)
    }

    /// Block index sequences with p_{k_i} < 2n_{k_{i+1}} − 1, total length ≤ `max`.
    fn chains(&self, max: usize) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((seq, len)) = stack.pop() {
            for (t, b) in self.blocks.iter().enumerate() {
                if len + b.word_len() > max {
                    continue;
                }
                if let Some(&last) = seq.last() {
                    if self.blocks[last].p >= b.word_len() {
                        continue;
                    }
                }
                let mut s: Vec<usize> = seq.clone();
                s.push(t);
                out.push((s.clone(), len + b.word_len()));
                stack.push((s, len + b.word_len()));
            }
        }
        out
    }

    fn cat(&self, seq: &[usize]) -> Word {
        seq.iter().flat_map(|&t| self.block_word(t).iter().copied()).collect()
    }

    fn delta0_odd(&self) -> Vec<Word> {
        (1..=self.max_len).step_by(2).filter(|&m| self.in_window(m)).map(|m| self.prefix(m)).collect()
    }

    fn delta_odd(&self) -> WordSet {
        let d0 = self.delta0_odd();
        let mut words = d0.clone();
        for (seq, len) in self.chains(self.max_len) {
            let pl = self.blocks[*seq.last().expect("nonempty chain")].p;
            let head = self.cat(&seq);
            for x in &d0 {
                if x.len() > pl && len + x.len() <= self.max_len {
                    words.push([head.as_slice(), x].concat());
                }
            }
        }
        WordSet::new(words, self.max_len)
    }

    fn delta_evn(&self) -> WordSet {
        let d0: Vec<Word> = (1..=self.max_len / 2).map(|n| self.prefix(2 * n)).collect();
        let mut words = d0.clone();
        for (seq, len) in self.chains(self.max_len) {
            let head = self.cat(&seq);
            words.push(head.clone());
            for x in &d0 {
                if len + x.len() <= self.max_len {
                    words.push([head.as_slice(), x].concat());
                }
            }
        }
        WordSet::new(words, self.max_len).with_empty(true)
    }

    fn gamma0(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for n in 0..self.max_len {
            if !self.in_window(n) {
                continue;
            }
            let next = self.dd(n + 1);
            for j in 0..self.d1 {
                // (−1)^{n+1} (d_{n+1} − j) < 0
                if j != next && alt_at(n + 1, next, j) == Ordering::Less {
                    let mut w = self.prefix(n);
                    w.push(j);
                    out.push(w);
                }
            }
        }
        out
    }

    fn gamma0_prime(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let m = b.end();
            if !b.p_exact || m > self.max_len {
                continue;
            }
            let (hi, lo) = (self.dd(b.p + 1), self.dd(m));
            for j in 0..=self.d1 {
                // (−1)^p d_{p+1} > (−1)^p j > (−1)^p d_m
                let s = |x: Digit| if b.p % 2 == 0 { x as i64 } else { -(x as i64) };
                if s(hi) > s(j) && s(j) > s(lo) {
                    let mut w = self.prefix(m - 1);
                    w.push(j);
                    out.push(w);
                }
            }
        }
        out
    }

    fn gamma1(&self, g0: &[Word]) -> Vec<Word> {
        let mut out = Vec::new();
        for (seq, len) in self.chains(self.max_len) {
            let pl = self.blocks[*seq.last().expect("nonempty chain")].p;
            let head = self.cat(&seq);
            for y in g0 {
                if y.len() >= pl + 2 && len + y.len() <= self.max_len {
                    out.push([head.as_slice(), y].concat());
                }
            }
        }
        out
    }

    /// Prefix chain B_{k1}…B_{k_{m−1}} (constraints only inside the chain) then y ∈ Γ0′.
    fn gamma1_prime(&self, g0p: &[Word]) -> Vec<Word> {
        let mut out = Vec::new();
        for (seq, len) in self.chains(self.max_len) {
            let head = self.cat(&seq);
            for y in g0p {
                if len + y.len() <= self.max_len {
                    out.push([head.as_slice(), y].concat());
                }
            }
        }
        out
    }

    fn gamma(&self) -> GammaFamilies {
        let g0 = self.gamma0();
        let g0p = self.gamma0_prime();
        let g1 = self.gamma1(&g0);
        let g1p = self.gamma1_prime(&g0p);
        GammaFamilies {
            gamma0: WordSet::new(g0, self.max_len),
            gamma0_prime: WordSet::new(g0p, self.max_len),
            gamma1: WordSet::new(g1, self.max_len),
            gamma1_prime: WordSet::new(g1p, self.max_len),
        }
    }

    /// J_i = {t : 2n_{i−1} − 1 ≤ p_t < 2n_i − 1} with n_0 = 0 and n_i = ∞ past the last block.
    fn j_set(&self, i: usize) -> Vec<usize> {
        let lo = if i <= 1 { 0 } else { self.blocks.get(i - 2).map_or(INF, |b| b.word_len()) };
        let hi = self.blocks.get(i - 1).map_or(INF, |b| b.word_len());
        (0..self.blocks.len()).filter(|&t| lo <= self.blocks[t].p && self.blocks[t].p < hi).collect()
    }

    fn family_count(&self) -> usize {
        self.blocks.len() + 1
    }

    fn delta_i(&self, i: usize) -> WordSet {
        let ji = self.j_set(i);
        let higher: Vec<usize> = (i + 1..=self.family_count()).flat_map(|l| self.j_set(l)).collect();
        let mut words = Vec::new();
        // (t_1 … t_k) drawn from higher families, closed by t_m ∈ J_i
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((seq, len)) = stack.pop() {
            let fits = |t: usize| {
                let b = self.blocks[t];
                len + b.word_len() <= self.max_len
                    && seq.last().is_none_or(|&s| self.blocks[s].p < b.word_len() + 1)
            };
            for &t in &ji {
                if !fits(t) {
                    continue;
                }
                let first = seq.first().copied().unwrap_or(t);
                if self.blocks[t].p < self.blocks[first].word_len() {
                    let mut s = seq.clone();
                    s.push(t);
                    words.push(self.cat(&s));
                }
            }
            for &t in &higher {
                if fits(t) {
                    let mut s = seq.clone();
                    s.push(t);
                    stack.push((s, len + self.blocks[t].word_len()));
                }
            }
        }
        WordSet::new(words, self.max_len)
    }

    fn code_c(&self) -> WordSet {
        let gamma = self.gamma().union();
        let dodd = self.delta_odd();
        let tails: Vec<&Word> = gamma.words().iter().filter(|y| y.len() >= 2).collect();
        let mut words: Vec<Word> = gamma.words().to_vec();
        let mut frontier: BTreeSet<Word> = dodd.words().iter().filter(|x| x.len() + 2 <= self.max_len).cloned().collect();
        while !frontier.is_empty() {
            let mut next = BTreeSet::new();
            for x in &frontier {
                for y in &tails {
                    if x.len() + y.len() <= self.max_len {
                        words.push([x.as_slice(), y].concat());
                    }
                }
                for a in dodd.words() {
                    if x.len() + a.len() + 2 <= self.max_len {
                        next.insert([x.as_slice(), a].concat());
                    }
                }
            }
            frontier = next;
        }
        WordSet::new(words, self.max_len)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFamilies {
    pub gamma0: WordSet,
    pub gamma0_prime: WordSet,
    pub gamma1: WordSet,
    pub gamma1_prime: WordSet,
}

impl GammaFamilies {
    pub fn union(&self) -> WordSet {
        self.gamma0.union(&self.gamma0_prime).union(&self.gamma1).union(&self.gamma1_prime)
    }
}

/// Families are built from d* (equal to d unless d is purely periodic with odd period).
pub fn build_gamma(d: &SymbolicSequence, max_len: usize) -> Result<GammaFamilies> {
    Ok(Families::new(d, max_len)?.gamma())
}

pub fn build_delta_odd(d: &SymbolicSequence, max_len: usize) -> Result<WordSet> {
    Ok(Families::new(d, max_len)?.delta_odd())
}

pub fn build_delta_evn(d: &SymbolicSequence, max_len: usize) -> Result<WordSet> {
    Ok(Families::new(d, max_len)?.delta_evn())
}

/// Δ^(i) for i ≥ 1: concatenations B_{t1}…B_{tm} closed by a block of J_i, whose earlier
/// blocks come from J_l with l > i.
pub fn build_delta_i(i: usize, d: &SymbolicSequence, max_len: usize) -> Result<WordSet> {
    if i == 0 {
        return Err(Error::IndexOutOfRange("family index starts at 1".into()));
    }
    Ok(Families::new(d, max_len)?.delta_i(i))
}

/// Every nonempty Δ^(i) with a word of length ≤ max_len, with its index.
pub fn delta_families(d: &SymbolicSequence, max_len: usize) -> Result<Vec<(usize, WordSet)>> {
    let f = Families::new(d, max_len)?;
    Ok((1..=f.family_count()).map(|i| (i, f.delta_i(i))).filter(|(_, s)| !s.is_empty()).collect())
}

/// 𝔠 = Γ ∪ {x·y : x ∈ Δ_odd^+, y ∈ Γ, |y| ≥ 2}.
pub fn build_code_c_from(d: &SymbolicSequence, max_len: usize) -> Result<WordSet> {
    Ok(Families::new(d, max_len)?.code_c())
}

#[allow(non_snake_case)]
pub fn build_code_C(beta: &BetaSpec, max_len: usize, horizon: usize) -> Result<WordSet> {
    let rp = crate::expansion::reference_pair(beta, horizon.max(2 * max_len + 4))?;
    build_code_c_from(&rp.d, max_len)
}

/// A pair (x, y) where x is a proper prefix of y, if any.
pub fn prefix_violation(s: &WordSet) -> Option<(Word, Word)> {
    let v = s.sorted_lex();
    v.windows(2).find(|w| w[1].starts_with(&w[0])).map(|w| (w[0].clone(), w[1].clone()))
}

pub fn is_prefix_code(s: &WordSet) -> bool {
    prefix_violation(s).is_none()
}

/// Sardinas–Patterson test on the (finite) listed words.
pub fn is_uniquely_decodable(s: &WordSet) -> bool {
    if s.contains_empty() {
        return false;
    }
    let code: BTreeSet<&[Digit]> = s.words().iter().map(Vec::as_slice).collect();
    // dangling suffixes: w = x·t with x, w in the set (or in the previous round)
    let quotients = |a: &BTreeSet<Word>, b: &BTreeSet<&[Digit]>| -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for x in a {
            for &w in b {
                if w.len() > x.len() && w.starts_with(x) {
                    out.insert(w[x.len()..].to_vec());
                }
                if x.len() > w.len() && x.starts_with(w) {
                    out.insert(x[w.len()..].to_vec());
                }
            }
        }
        out
    };
    let words: BTreeSet<Word> = code.iter().map(|w| w.to_vec()).collect();
    let mut current: BTreeSet<Word> = BTreeSet::new();
    for x in &words {
        for &w in &code {
            if w.len() > x.len() && w.starts_with(x) {
                current.insert(w[x.len()..].to_vec());
            }
        }
    }
    let mut seen = BTreeSet::new();
    while !current.is_empty() {
        if current.iter().any(|t| code.contains(t.as_slice())) {
            return false;
        }
        current.retain(|t| seen.insert(t.clone()));
        current = quotients(&current, &code);
    }
    true
}

/// Σ_{x ∈ s, |x| ≤ max_len} β^{−|x|} exactly.
pub fn kraft_sum_exact(s: &WordSet, beta: &BetaSpec, max_len: usize) -> FieldElement {
    let inv = beta.generator().inverse().expect("β is nonzero");
    let mut acc = beta.zero();
    let mut pw = beta.one();
    let census = s.census_vec(max_len);
    for c in census.iter().skip(1) {
        pw = &pw * &inv;
        if *c > 0 {
            acc = &acc + &(&beta.from_int(*c as i64) * &pw);
        }
    }
    acc
}

pub fn kraft_sum(s: &WordSet, beta: &BetaSpec, max_len: usize) -> RationalInterval {
    kraft_sum_exact(s, beta, max_len).enclose_width(&crate::expansion::default_width())
}

/// Which code describes the support of the maximal entropy measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportCode {
    CFull,
    DeltaOdd,
    DeltaI(usize),
}

/// β > γ0 gives 𝔠 (built from d*); otherwise the level m with γ_{m+1} < β ≤ γ_m selects
/// Δ_odd for m = 0 and Δ^(m) beyond.
pub fn support_code(beta: &BetaSpec) -> Result<SupportCode> {
    let g0 = crate::gaps::gamma_n(0);
    if beta.compare_real(&g0) == Ordering::Greater {
        return Ok(SupportCode::CFull);
    }
    let mut m = 0;
    loop {
        let g = crate::gaps::gamma_n(m + 1);
        if beta.compare_real(&g) == Ordering::Greater {
            return Ok(if m == 0 { SupportCode::DeltaOdd } else { SupportCode::DeltaI(m) });
        }
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::parse_word;

    fn seq(s: &str) -> SymbolicSequence {
        SymbolicSequence::parse(s).unwrap()
    }

    fn has_all(s: &WordSet, list: &str) -> bool {
        list.split(',').all(|w| s.contains(&parse_word(w).unwrap()))
    }

    #[test]
    fn blocks_of_examples() {
        let b = block_structure(&seq("2012(1)"), 40).unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert_eq!((b.blocks[0].word_len(), b.blocks[0].p), (3, 1));
        assert!(block_structure(&seq("1(0)"), 40).unwrap().blocks.is_empty());
        assert!(block_structure(&seq("302(1)"), 40).unwrap().blocks.is_empty());
    }

    #[test]
    fn synthetic_302_families() {
        let d = seq("302(1)");
        let g = build_gamma(&d, 6).unwrap().union();
        assert!(has_all(&g, "0,1,2,31,32,300,301,3022,30210,302112"));
        let o = build_delta_odd(&d, 7).unwrap();
        assert!(has_all(&o, "3,302,30211,3021111"));
        assert!(is_prefix_code(&build_code_c_from(&d, 6).unwrap()));
    }

    #[test]
    fn prefix_code_examples() {
        let a = WordSet::new(vec![vec![1], vec![0, 0]], 2);
        assert!(is_prefix_code(&a));
        let b = WordSet::new(vec![vec![1], vec![1, 0]], 2);
        assert_eq!(prefix_violation(&b), Some((vec![1], vec![1, 0])));
    }

    #[test]
    fn golden_kraft_is_one() {
        let g = BetaSpec::golden();
        let s = WordSet::new(vec![vec![1], vec![0, 0]], 2);
        assert_eq!(kraft_sum_exact(&s, &g, 2), g.one());
    }

    #[test]
    fn json_shape() {
        let s = WordSet::new(vec![vec![1], vec![0, 0], vec![1, 0]], 2);
        let v = s.to_json();
        assert_eq!(v["census"]["2"], 2);
        assert_eq!(v["words"][0], "1");
    }
}
