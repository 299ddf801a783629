//! Acceptance suite: one test per criterion, each ending in a single
//! `criterion NN <name>: PASS` line (a failed assertion marks the criterion
//! as failed through the harness).

use std::collections::HashMap;

use dartin::canonical::{elements_equal, to_canonical, CanonicalElement};
use dartin::conjugacy::{
    cyclic_key_of_word, is_conjugate, pcl, split_cyclic_permutations, CyclicKey,
};
use dartin::geodesic::{
    classify_geodesic, exponent_stats, geodesic_length, is_geodesic, tags_satisfied, GeodesicType,
};
use dartin::growth::{
    asymptotics_report, band_bounded, conj_class_counts, denominator_polynomial, series_coeffs,
    smallest_positive_root, sphere_sizes, syllable_language_counts, Family, IntPolynomial,
};
use dartin::lang::{build_conjgeo_dfa, dfa_accepts, dfa_count, fftp_check, is_conjugacy_geodesic};
use dartin::oracle::{oracle_equal, oracle_key, Ball, ConjugacyPartition, OracleKey};
use dartin::words::{parse_word, GroupParams, Letter, Word};

fn g(m: i64) -> GroupParams {
    GroupParams::new(m).unwrap()
}

fn w(m: i64, s: &str) -> Word {
    parse_word(s, Some(g(m))).unwrap()
}

/// All words over the four letters of length up to `max_len`.
fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for l in Letter::ALL {
                let mut v = word.0.clone();
                v.push(l);
                let v = Word(v);
                out.push(v.clone());
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// All freely reduced words of length up to `max_len`.
fn reduced_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for l in Letter::ALL {
                if word.0.last().is_some_and(|&last| last == l.inverse()) {
                    continue;
                }
                let mut v = word.0.clone();
                v.push(l);
                let v = Word(v);
                out.push(v.clone());
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// Deterministic pseudo-random word stream (64-bit LCG).
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn word(&mut self, max_len: usize) -> Word {
        let len = (self.next() as usize) % (max_len + 1);
        Word((0..len).map(|_| Letter::ALL[(self.next() as usize) % 4]).collect())
    }
}

#[test]
fn criterion_01_word_problem_oracle() {
    for m in [3, 4, 5, 6, 7, 8] {
        let params = g(m);
        // Partition equivalence on all words of length <= 6: the canonical
        // form and the oracle normal form induce the same equality relation
        // iff the map between them is a bijection.
        let mut fwd: HashMap<CanonicalElement, OracleKey> = HashMap::new();
        let mut bwd: HashMap<OracleKey, CanonicalElement> = HashMap::new();
        for word in all_words(6) {
            let c = to_canonical(&word, params);
            let o = oracle_key(&word, params);
            if let Some(prev) = fwd.get(&c) {
                assert_eq!(*prev, o, "m={m} canonical key split on {word}");
            } else {
                fwd.insert(c.clone(), o.clone());
            }
            if let Some(prev) = bwd.get(&o) {
                assert_eq!(*prev, c, "m={m} oracle key split on {word}");
            } else {
                bwd.insert(o, c);
            }
        }
        // Sample of longer pairs (length <= 10).
        let mut rng = Lcg(0x9e3779b97f4a7c15 ^ m as u64);
        for _ in 0..10_000 {
            let u = rng.word(10);
            let v = rng.word(10);
            assert_eq!(
                elements_equal(&u, &v, params),
                oracle_equal(&u, &v, params),
                "m={m} sampled pair {u} / {v}"
            );
        }
    }
    println!("criterion 01 word-problem oracle equivalence: PASS");
}

#[test]
fn criterion_02_geodesic_length_oracle() {
    for m in [3, 4, 5, 6, 7, 8] {
        let params = g(m);
        let ball = Ball::new(params, 8);
        for (dist, word) in ball.elements.values() {
            let e = to_canonical(word, params);
            assert_eq!(
                geodesic_length(&e, params),
                *dist,
                "m={m} element reached by {word}"
            );
        }
    }
    println!("criterion 02 geodesic-length oracle equivalence: PASS");
}

#[test]
fn criterion_03_classification_totality_exclusivity() {
    for m in [3, 4, 5, 6, 7, 8] {
        let params = g(m);
        for word in reduced_words(8) {
            if !is_geodesic(&word, params) {
                continue;
            }
            let tags = tags_satisfied(&word, params);
            assert_eq!(tags.len(), 1, "m={m} word {word} tags {tags:?}");
            let gw = classify_geodesic(&word, params).unwrap();
            assert_eq!(gw.gtype, tags[0], "m={m} word {word}");
            assert_eq!(gw.gtype.is_split_type(), gw.split.is_some(), "m={m} word {word}");
            // Appendix inequality on odd Type-3 geodesics.
            if params.is_odd()
                && !matches!(gw.gtype, GeodesicType::T1 | GeodesicType::T2)
            {
                let s = exponent_stats(&word);
                assert!(s.pos_x + s.neg_x <= 2, "m={m} word {word}");
            }
        }
    }
    println!("criterion 03 classification totality/exclusivity: PASS");
}

#[test]
fn criterion_04_conjugacy_oracle() {
    for m in [3, 4, 5, 6] {
        let params = g(m);
        // One representative word per element of length <= 6, from the ball.
        let ball = Ball::new(params, 6);
        let reps: Vec<Word> = ball.elements.values().map(|(_, w)| w.clone()).collect();
        // Union-find closure under single-letter conjugation on a larger
        // ball; radius covers len(u)+len(v)+2*delta_len intermediates.
        let radius = 6 + params.delta_len() + 2;
        let part = ConjugacyPartition::new(params, radius);
        for (i, u) in reps.iter().enumerate() {
            let cu = part.class_of(u, params).unwrap();
            for v in reps.iter().skip(i + 1) {
                let cv = part.class_of(v, params).unwrap();
                assert_eq!(
                    is_conjugate(u, v, params),
                    cu == cv,
                    "m={m} pair {u} / {v}"
                );
            }
        }
    }
    println!("criterion 04 conjugacy oracle equivalence: PASS");
}

#[test]
fn criterion_05_worked_examples() {
    // G(3): u1 ~ v1 with a cyclic-permutation witness.
    let m3 = g(3);
    let u1 = w(3, "xyxyxY");
    let v1 = w(3, "yxYxyx");
    assert!(is_conjugate(&u1, &v1, m3));
    assert!(u1.rotations().contains(&v1));
    // G(3): u2 ~ v2 with a split-permutation witness.
    let u2 = w(3, "XyXYxy");
    let v2 = w(3, "YXyXyx");
    assert!(is_conjugate(&u2, &v2, m3));
    let orbit = split_cyclic_permutations(&classify_geodesic(&u2, m3).unwrap()).unwrap();
    assert!(orbit.contains(&v2));
    // BS(2,2) pairs.
    let m4 = g(4);
    assert!(is_conjugate(&w(4, "xy^5xy^-3xy^2 x^4"), &w(4, "y^-3xy^2xy^5x x^4"), m4));
    let bu = w(4, "yxy^-2xy^11X");
    let bv = w(4, "y^-2xy^11xyX");
    assert!(is_conjugate(&bu, &bv, m4));
    let orbit = split_cyclic_permutations(&classify_geodesic(&bu, m4).unwrap()).unwrap();
    assert!(orbit.contains(&bv));
    // G(5) split-permutation example.
    let m5 = g(5);
    let w5 = w(5, "xyxy^-2xy^-2xy^3xy^-1xy^3");
    let t5 = w(5, "xy^-1xy^-2xyxy^-2xy^3xy^3");
    let orbit = split_cyclic_permutations(&classify_geodesic(&w5, m5).unwrap()).unwrap();
    assert!(orbit.contains(&t5));
    assert!(is_conjugate(&w5, &t5, m5));
    println!("criterion 05 worked examples: PASS");
}

#[test]
fn criterion_06_series_vs_enumeration() {
    for k in [1, 2, 3, 4] {
        let params = g(2 * k + 1);
        let q = denominator_polynomial(Family::QOdd, params, None).unwrap();
        let coeffs = series_coeffs(&q, &IntPolynomial::new(vec![1]), 20).unwrap();
        let direct = syllable_language_counts(k, 20);
        let coeffs: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
        assert_eq!(coeffs, direct, "k={k}");
    }
    println!("criterion 06 series coefficients vs direct enumeration: PASS");
}

#[test]
fn criterion_07_root_inequalities() {
    let tol = 1e-12;
    for k in 1..=6 {
        let params = g(2 * k + 1);
        let p = denominator_polynomial(Family::POdd, params, None).unwrap();
        let q = denominator_polynomial(Family::QOdd, params, None).unwrap();
        let mu = smallest_positive_root(&q, tol).unwrap();
        let rho = smallest_positive_root(&p, tol).unwrap();
        assert!(mu.tolerance <= tol && rho.tolerance <= tol);
        assert!(mu.value < rho.value, "k={k}: mu={} rho={}", mu.value, rho.value);
    }
    for k in 2..=6 {
        let params = g(4 * k);
        let p1 = denominator_polynomial(Family::P1Even, params, None).unwrap();
        let p3 = denominator_polynomial(Family::P3Even, params, None).unwrap();
        let r1 = smallest_positive_root(&p1, tol).unwrap();
        let r3 = smallest_positive_root(&p3, tol).unwrap();
        assert!(r1.tolerance <= tol && r3.tolerance <= tol);
        assert!(r3.value < r1.value, "k={k}");
        let root_j = |j: i64| {
            let pj = denominator_polynomial(Family::PjEven, params, Some(j)).unwrap();
            smallest_positive_root(&pj, tol).unwrap().value
        };
        let rk = root_j(k);
        for j in k..=(2 * k - 1) {
            assert!(rk <= root_j(j) + tol, "k={k} j={j}");
        }
    }
    println!("criterion 07 root inequalities: PASS");
}

#[test]
fn criterion_08_bs22_growth_rate() {
    let params = g(4);
    let s = sphere_sizes(params, 15, 15).unwrap().counts;
    for n in 10..=14usize {
        let ratio = s[n + 1] as f64 / s[n] as f64;
        assert!((1.8..=2.2).contains(&ratio), "n={n} ratio={ratio}");
    }
    let c = conj_class_counts(params, 14, 15).unwrap().counts;
    let window: Vec<f64> = (10..=14).map(|n| c[n] as f64 / s[n] as f64).collect();
    assert!(band_bounded(&window), "c/s window {window:?}");
    println!("criterion 08 BS(2,2) growth rate: PASS");
}

#[test]
fn criterion_09_regime_separation() {
    for m in [3, 8] {
        let report = asymptotics_report(g(m), 14, 14).unwrap();
        assert_eq!(report.expected_regime, "alpha^n");
        assert!(report.band_cs, "m={m} ratios {:?}", report.ratio_cs);
    }
    let report = asymptotics_report(g(6), 14, 14).unwrap();
    assert_eq!(report.expected_regime, "alpha^n/n");
    assert!(report.band_ncs, "n*c/s ratios {:?}", report.ratio_ncs);
    // c(n)/s(n) drifts downward across the window.
    assert!(
        report.ratio_cs[14] < report.ratio_cs[8],
        "c/s ratios {:?}",
        report.ratio_cs
    );
    println!("criterion 09 asymptotic regime separation: PASS");
}

#[test]
fn criterion_10_pcl_constancy() {
    for m in [3, 4, 5] {
        let params = g(m);
        // Conjugate conjugacy geodesics have equal length, so |u|+|v| <= 10
        // restricts to length <= 5.
        let mut classes: HashMap<CyclicKey, Vec<Word>> = HashMap::new();
        for word in reduced_words(5) {
            if is_conjugacy_geodesic(&word, params) {
                classes.entry(cyclic_key_of_word(&word, params)).or_default().push(word);
            }
        }
        for members in classes.values() {
            for (i, u) in members.iter().enumerate() {
                for v in members.iter().skip(i) {
                    assert_eq!(pcl(u, v, params).unwrap(), 0, "m={m} pair {u} / {v}");
                }
            }
        }
    }
    println!("criterion 10 PCL constancy: PASS");
}

#[test]
fn criterion_11_fftp() {
    let mut observed = Vec::new();
    for m in [3, 4, 5] {
        let params = g(m);
        let report = fftp_check(params, 8, 8).unwrap();
        assert!(report.all_have_shorter, "m={m}");
        assert!(
            report.observed_constant <= report.bound,
            "m={m} observed {} bound {}",
            report.observed_constant,
            report.bound
        );
        observed.push((m, report.observed_constant, report.bound));
    }
    println!("criterion 11 FFTP (observed/bound per m: {observed:?}): PASS");
}

#[test]
fn criterion_12_conjgeo_dfa() {
    for m in [3, 4, 5, 6] {
        let params = g(m);
        let dfa = build_conjgeo_dfa(params);
        let mut oracle_counts = vec![0u128; 9];
        for word in all_words(8) {
            let by_oracle = is_conjugacy_geodesic(&word, params);
            assert_eq!(dfa_accepts(&dfa, &word), by_oracle, "m={m} word {word}");
            if by_oracle {
                oracle_counts[word.len()] += 1;
            }
        }
        for n in 0..=8i64 {
            assert_eq!(dfa_count(&dfa, n), oracle_counts[n as usize], "m={m} n={n}");
        }
        // Accepted-word growth within a factor-3 band of standard growth.
        let s = sphere_sizes(params, 8, 8).unwrap().counts;
        let rate_dfa = oracle_counts[8] as f64 / oracle_counts[7] as f64;
        let rate_s = s[8] as f64 / s[7] as f64;
        assert!(
            band_bounded(&[rate_dfa, rate_s]),
            "m={m} dfa rate {rate_dfa} vs sphere rate {rate_s}"
        );
    }
    println!("criterion 12 ConjGeo DFA vs oracle: PASS");
}
