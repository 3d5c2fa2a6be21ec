//! Frozen reference values. Each expected value was fixed before the code that produces
//! it was written, either by hand derivation or from an independent brute-force count.

use negabeta::codes::*;
use negabeta::expansion::*;
use negabeta::gaps::*;
use negabeta::language::*;
use negabeta::laps::lap_count;
use negabeta::numerics::*;
use negabeta::order::*;
use negabeta::series::*;
use negabeta::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(p: i64, q: i64) -> BetaSpec {
    BetaSpec::rational(p, q).unwrap()
}

fn seq(s: &str) -> SymbolicSequence {
    SymbolicSequence::parse(s).unwrap()
}

fn ints(s: &IntSeries) -> Vec<i64> {
    s.to_integers().unwrap().iter().map(|x| i64::try_from(x).unwrap()).collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Root of x⁵ − 2x⁴ − 2x³ − x² + x + 1 in (2, 3): the base whose d(l) is 2012 1̄.
fn quintic() -> BetaSpec {
    BetaSpec::root(&[1, -2, -2, -1, 1, 1], 2, 3).unwrap()
}

#[test]
fn expansion_of_l_for_five_halves() {
    let rp = reference_pair(&rat(5, 2), 40).unwrap();
    assert_eq!(rp.d.take(10).unwrap(), parse_word("2110100000").unwrap());
    assert_eq!(rp.status, TailStatus::Aperiodic);
}

#[test]
fn expansions_of_l_for_algebraic_bases() {
    assert_eq!(reference_pair(&BetaSpec::golden(), 20).unwrap().d, seq("1(0)"));
    assert_eq!(reference_pair(&quintic(), 20).unwrap().d, seq("2012(1)"));
    assert_eq!(reference_pair(&gamma_n(1), 20).unwrap().d, seq("100(11)"));
    let two = reference_pair(&rat(2, 1), 20).unwrap();
    assert_eq!((two.d, two.d_star), (seq("(2)"), seq("(10)")));
}

#[test]
fn stated_quartic_has_no_base_root() {
    // x⁴+2x³+x²−x−1 = (x+1)(x³+x²−1) is positive on [1, ∞)
    assert_eq!(BetaSpec::root(&[1, 2, 1, -1, -1], 2, 3).unwrap_err(), Error::NoRootIsolated);
    assert_eq!(BetaSpec::root(&[1, 2, 1, -1, -1], 0, 1).unwrap_err(), Error::RootNotGreaterThanOne);
}

#[test]
fn geometric_value_of_two_bar() {
    let b = rat(2, 1);
    let e = Expansion { integer_part_length: 0, seq: seq("(2)"), status: TailStatus::Periodic, beta: b.clone() };
    let v = evaluate_exact(&e).unwrap();
    assert_eq!(v.as_rational().unwrap(), BigRational::new((-2).into(), 3.into()));
}

#[test]
fn twenty_words_of_length_three() {
    let words = enumerate_words(3, &rat(5, 2), ShiftVariant::Corrected, 40).unwrap();
    let expected: Vec<Word> = "211 210 222 221 102 101 100 112 111 110 122 121 002 001 000 012 011 010 022 021"
        .split(' ')
        .map(|w| parse_word(w).unwrap())
        .collect();
    let mut exp_sorted = expected.clone();
    exp_sorted.sort();
    assert_eq!(words.sorted_lex(), exp_sorted);
}

#[test]
fn lap_counts_five_halves() {
    let l = lap_series(&rat(5, 2), 3).unwrap();
    assert_eq!(ints(&l), vec![1, 3, 8, 20]);
    assert_eq!((1..=3).map(|n| lap_count(&rat(5, 2), n).unwrap()).collect::<Vec<_>>(), vec![3, 8, 20]);
}

#[test]
fn golden_series() {
    let g = BetaSpec::golden();
    let z = zeta_transformation(&g, 10).unwrap();
    assert_eq!(ints(&z), vec![1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]);
    let l = lap_series(&g, 6).unwrap();
    // 1/((1−z)(1−z−z²)): partial sums of Fibonacci
    assert_eq!(ints(&l), vec![1, 2, 4, 7, 12, 20, 33]);
    assert_eq!(ints(&zeta_shift(&g, 10).unwrap()), ints(&z));
}

#[test]
fn integer_two_series() {
    let b = rat(2, 1);
    assert_eq!(ints(&zeta_transformation(&b, 5).unwrap()), vec![1, 3, 6, 12, 24, 48]);
    let d = denominator_series(&seq("(10)"), 5).unwrap();
    assert_eq!(ints(&d), vec![1, -1, -1, -1, -1, -1]);
    let p: Vec<u64> = (1..=6).map(|n| count_periodic_points(n, &b, PeriodicTarget::Transformation, 20).unwrap()).collect();
    assert_eq!(p, vec![3, 3, 9, 15, 33, 63]);
    let ps: Vec<u64> = (1..=6).map(|n| count_periodic_points(n, &b, PeriodicTarget::Shift, 20).unwrap()).collect();
    assert_eq!(ps, vec![3, 5, 9, 17, 33, 65]);
    let z = zeta_from_counts(&big(&[3, 3, 9, 15, 33])).unwrap();
    assert_eq!(ints(&z), vec![1, 3, 6, 12, 24, 48]);
}

#[test]
fn denominator_of_2012_one_bar() {
    // differences of 0,2,0,1,2,1,1,1,…; the reversed defining quintic
    let d = denominator_series(&seq("2012(1)"), 8).unwrap();
    assert_eq!(ints(&d), vec![1, -2, -2, -1, 1, 1, 0, 0, 0]);
}

#[test]
fn golden_counts_to_zeta() {
    let z = zeta_from_counts(&big(&[2, 2, 5, 6, 12, 17])).unwrap();
    assert_eq!(ints(&z), vec![1, 2, 3, 5, 8, 13, 21]);
}

#[test]
fn block_structure_of_2012() {
    let b = block_structure(&seq("2012(1)"), 60).unwrap();
    assert_eq!(b.blocks.len(), 1);
    assert_eq!(b.blocks[0].word_len(), 3);
    assert_eq!(b.blocks[0].p, 1);
}

#[test]
fn synthetic_302_listed_words() {
    let d = seq("302(1)");
    let odd = build_delta_odd(&d, 6).unwrap();
    for w in ["3", "302", "30211"] {
        assert!(odd.contains(&parse_word(w).unwrap()), "{w}");
    }
    let gamma = build_gamma(&d, 6).unwrap().union();
    for w in ["0", "1", "2", "31", "32", "300", "301", "3022", "30210", "302112"] {
        assert!(gamma.contains(&parse_word(w).unwrap()), "{w}");
    }
}

#[test]
fn codes_below_and_at_golden() {
    let g = BetaSpec::golden();
    let c = build_code_C(&g, 8, 40).unwrap();
    assert_eq!(c.words(), &[vec![0]]);
    let odd = build_delta_odd(&reference_pair(&g, 40).unwrap().d, 9).unwrap();
    let expected: Vec<Word> = (0..5).map(|k| { let mut w = vec![1]; w.extend(vec![0; 2 * k]); w }).collect();
    assert_eq!(odd.words(), expected.as_slice());
    let one_00 = WordSet::new(vec![vec![1], vec![0, 0]], 2);
    assert_eq!(kraft_sum_exact(&one_00, &g, 2), g.one());
}

#[test]
fn delta_family_that_is_not_a_prefix_code() {
    let d = reference_pair(&rat(7, 3), 64).unwrap().d;
    let fams = delta_families(&d, 7).unwrap();
    assert_eq!(fams.len(), 1);
    let s = &fams[0].1;
    assert_eq!(s.words(), &[parse_word("211").unwrap(), parse_word("2112101").unwrap()]);
    assert!(!is_prefix_code(s));
    assert!(is_uniquely_decodable(s));
}

#[test]
fn unique_decodability_examples() {
    let set = |ws: &[&str]| WordSet::new(ws.iter().map(|w| parse_word(w).unwrap()).collect::<Vec<_>>(), 3);
    assert!(is_uniquely_decodable(&set(&["0", "01", "11"])));
    assert!(!is_uniquely_decodable(&set(&["0", "01", "10"])));
    assert!(is_uniquely_decodable(&set(&["1", "00"])));
}

#[test]
fn support_code_levels() {
    assert_eq!(support_code(&rat(5, 2)).unwrap(), SupportCode::CFull);
    assert_eq!(support_code(&BetaSpec::golden()).unwrap(), SupportCode::DeltaOdd);
    assert_eq!(support_code(&rat(3, 2)).unwrap(), SupportCode::DeltaOdd);
    assert_eq!(support_code(&gamma_n(1)).unwrap(), SupportCode::DeltaI(1));
    assert_eq!(support_code(&rat(13, 10)).unwrap(), SupportCode::DeltaI(1));
}

#[test]
fn classification_examples() {
    let two = classify(&rat(2, 1), 40).unwrap();
    assert!(!two.s_coded && two.s_tilde_coded);
    assert_eq!(two.witness, Some(Witness { left: vec![2], right: vec![0] }));
    let g = classify(&BetaSpec::golden(), 40).unwrap();
    assert!(g.s_coded && g.transitive && g.witness.is_none());
    let low = classify(&rat(13, 10), 40).unwrap();
    assert!(!low.transitive);
    assert_eq!(low.witness.as_ref().unwrap().joined(), parse_word("1000").unwrap());
}

#[test]
fn concat_example() {
    let r = concat_order_check(&[1], &[0], &[2]).unwrap();
    assert!(r.holds());
}

#[test]
fn cascade_examples() {
    assert_eq!(cascade_classify(&rat(3, 2)).unwrap(), 0);
    assert_eq!(cascade_classify(&rat(13, 10)).unwrap(), 1);
    assert_eq!(cascade_classify(&gamma_n(1)).unwrap(), 0);
    assert_eq!(cascade_classify(&rat(2, 1)), Err(Error::NotInRange));
    let m = morphism_words(2);
    assert_eq!(format_word(&m.u), "10011");
    assert_eq!(format_word(&m.v), "100100");
}

#[test]
fn gamma_one_enclosure() {
    let e = gamma_n(1).enclosure(40);
    assert!(e.lo < BigRational::new(13248.into(), 10000.into()));
    assert!(e.hi > BigRational::new(13247.into(), 10000.into()));
}

#[test]
fn decompositions() {
    let d = decompose_expansion(&rat(13, 10), 120).unwrap();
    assert_eq!(d.level, 1);
    assert_eq!((format_word(&d.words.u), format_word(&d.words.v)), ("100".into(), "11".into()));
    let d = decompose_expansion(&rat(3, 2), 120).unwrap();
    assert_eq!(d.level, 0);
    assert_eq!(&d.factors[..3], &[Factor::U, Factor::V, Factor::V]);
    // γ1 sits at level 0, where 100 1̄ reads 1·00·1·1·…
    let g = decompose_expansion(&gamma_n(1), 60).unwrap();
    assert_eq!(g.level, 0);
    assert_eq!(&g.factors[..2], &[Factor::U, Factor::V]);
    assert!(g.factors[2..].iter().all(|f| *f == Factor::U));
}

#[test]
fn gap_of_three_halves() {
    let gaps = all_gaps(&rat(3, 2)).unwrap();
    assert_eq!(gaps.len(), 1);
    assert_eq!((gaps[0].left_index, gaps[0].right_index), (1, 2));
    // s_1 = T(l) = −1/10, s_2 = 3/20
    assert_eq!(gaps[0].left.as_rational().unwrap(), BigRational::new((-1).into(), 10.into()));
    assert_eq!(gaps[0].right.as_rational().unwrap(), BigRational::new(3.into(), 20.into()));
}

#[test]
fn series_arithmetic_examples() {
    let f = IntSeries::from_ints(5, &[1, -1, -1]);
    assert_eq!(ints(&f.reciprocal().unwrap()), vec![1, 1, 2, 3, 5, 8]);
    assert_eq!(ints(&IntSeries::from_ints(5, &[1, 1]).mul(&f.reciprocal().unwrap())), vec![1, 2, 3, 5, 8, 13]);
    let one_plus_z = IntSeries::from_ints(8, &[1, 1]);
    assert_eq!(one_plus_z.log().unwrap().exp().unwrap(), one_plus_z);
}

#[test]
fn factor_complexity_of_golden() {
    let h = factor_complexity(6, &seq("1(0)")).unwrap();
    assert_eq!(h, big(&[1, 2, 4, 7, 12, 20, 33]));
}
