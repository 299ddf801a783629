//! Standard and conjugacy growth: exact sphere enumeration, the
//! generating-series denominators, growth rates via root isolation, and the
//! asymptotic-regime report.
//!
//! Spheres are enumerated by breadth-first search over canonical forms; the
//! search keeps only three consecutive spheres (neighbors in a Cayley graph
//! differ in distance by at most one), so memory stays proportional to the
//! largest sphere. Conjugacy classes are grouped by the cyclic canonical
//! key, whose minimal-length member is reached no later than the class's
//! conjugacy length, making strict counts `c(n)` exact for `n <= N`.

use crate::canonical::CanonicalElement;
use crate::conjugacy::cyclic_key;
use crate::geodesic::geodesic_length;
use crate::words::{GroupParams, Letter, Parity};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// Default enumeration cap.
pub const DEFAULT_CAP: i64 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    Elements,
    Classes,
}

/// Sphere counts `s(0..=N)` (elements) or `c(0..=N)` (classes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereCounts {
    pub kind: CountKind,
    pub m: i64,
    pub counts: Vec<u64>,
}

/// Integer polynomial by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    pub coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c as f64)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{d}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Isolated root with its bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub value: f64,
    pub tolerance: f64,
    pub bracket: (f64, f64),
}

/// Denominator families from the growth propositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    POdd,
    QOdd,
    P1Even,
    P3Even,
    PjEven,
    QEvenSuffix,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "p_odd" | "p" => Family::POdd,
            "q_odd" | "q" => Family::QOdd,
            "p1_even" | "p1" => Family::P1Even,
            "p3_even" | "p3" => Family::P3Even,
            "p_j_even" | "pj" => Family::PjEven,
            "q_even_suffix" | "qe" => Family::QEvenSuffix,
            _ => return None,
        })
    }
}

/// Errors from growth operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthError {
    CapExceeded(String),
    BadFamily(String),
    BadJ(String),
    ZeroConstantTerm,
    NoSignChange,
}

impl fmt::Display for GrowthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthError::CapExceeded(s) => write!(f, "cap exceeded: {s}"),
            GrowthError::BadFamily(s) => write!(f, "bad family: {s}"),
            GrowthError::BadJ(s) => write!(f, "bad j: {s}"),
            GrowthError::ZeroConstantTerm => write!(f, "denominator has zero constant term"),
            GrowthError::NoSignChange => write!(f, "no sign change on (0, 1)"),
        }
    }
}

impl std::error::Error for GrowthError {}

/// Breadth-first scan of the ball of radius `n`, calling `visit(element,
/// distance)` exactly once per element. Keeps three spheres in memory.
pub fn ball_scan<F: FnMut(&CanonicalElement, i64)>(params: GroupParams, n: i64, mut visit: F) {
    let mut prev: HashSet<CanonicalElement> = HashSet::new();
    let mut cur: HashSet<CanonicalElement> = HashSet::new();
    cur.insert(CanonicalElement::identity());
    visit(&CanonicalElement::identity(), 0);
    for dist in 1..=n {
        let mut next: HashSet<CanonicalElement> = HashSet::new();
        for e in &cur {
            for l in Letter::ALL {
                // e * l
                let mut b = crate::canonical::CanonicalBuilder::new(params);
                b.push_element(e);
                b.push_syllable(l.generator(), l.sign());
                let e2 = b.finish();
                if !prev.contains(&e2) && !cur.contains(&e2) && !next.contains(&e2) {
                    visit(&e2, dist);
                    next.insert(e2);
                }
            }
        }
        prev = std::mem::take(&mut cur);
        cur = next;
    }
}

/// `s(n)`: elements of geodesic length exactly `n`, for `n = 0..=N`.
pub fn sphere_sizes(params: GroupParams, n: i64, cap: i64) -> Result<SphereCounts, GrowthError> {
    if n > cap {
        return Err(GrowthError::CapExceeded(format!("N={n} > cap {cap}")));
    }
    let mut counts = vec![0u64; (n + 1) as usize];
    ball_scan(params, n, |_, d| counts[d as usize] += 1);
    Ok(SphereCounts { kind: CountKind::Elements, m: params.m, counts })
}

/// `c(n)`: conjugacy classes of conjugacy length exactly `n`, for
/// `n = 0..=N` (strict conjugacy growth).
pub fn conj_class_counts(
    params: GroupParams,
    n: i64,
    cap: i64,
) -> Result<SphereCounts, GrowthError> {
    if n > cap {
        return Err(GrowthError::CapExceeded(format!("N={n} > cap {cap}")));
    }
    let mut counts = vec![0u64; (n + 1) as usize];
    let mut seen: HashSet<crate::conjugacy::CyclicKey> = HashSet::new();
    ball_scan(params, n, |e, _| {
        let key = cyclic_key(e, params);
        let clen = geodesic_length(&key.as_element(), params);
        if clen <= n && !seen.contains(&key) {
            counts[clen as usize] += 1;
            seen.insert(key);
        }
    });
    Ok(SphereCounts { kind: CountKind::Classes, m: params.m, counts })
}

/// Exact coefficients of the named denominator polynomial.
pub fn denominator_polynomial(
    family: Family,
    params: GroupParams,
    j: Option<i64>,
) -> Result<IntPolynomial, GrowthError> {
    match (family, params.parity()) {
        (Family::POdd, Parity::Odd { k }) => {
            // 1 - 2z^2 - ... - 2z^k - z^{k+1} - z^{k+2} (middle sum empty at k=1).
            let mut c = vec![0i64; (k + 3) as usize];
            c[0] = 1;
            for d in 2..=k {
                c[d as usize] = -2;
            }
            c[(k + 1) as usize] -= 1;
            c[(k + 2) as usize] -= 1;
            Ok(IntPolynomial::new(c))
        }
        (Family::QOdd, Parity::Odd { k }) => {
            // 1 - 2z^2 - ... - 2z^{k+1}.
            let mut c = vec![0i64; (k + 2) as usize];
            c[0] = 1;
            for d in 2..=k + 1 {
                c[d as usize] = -2;
            }
            Ok(IntPolynomial::new(c))
        }
        (Family::P1Even, Parity::Even { p }) if p % 2 == 0 => {
            // 1 - z - 2z^2 (1 + ... + z^{2k-2}), p = 2k.
            let k = p / 2;
            let mut c = vec![0i64; (2 * k + 1) as usize];
            c[0] = 1;
            c[1] = -1;
            for d in 2..=2 * k {
                c[d as usize] = -2;
            }
            Ok(IntPolynomial::new(c))
        }
        (Family::P3Even, Parity::Even { p }) if p % 2 == 0 => {
            // 1 - z - 4z^2 (1 + ... + z^{k-2}), p = 2k.
            let k = p / 2;
            let mut c = vec![0i64; (k + 1).max(2) as usize];
            c[0] = 1;
            c[1] = -1;
            for d in 2..=k {
                c[d as usize] = -4;
            }
            Ok(IntPolynomial::new(c))
        }
        (Family::PjEven | Family::QEvenSuffix, Parity::Even { p }) if p % 2 == 0 => {
            let k = p / 2;
            let j = match family {
                Family::QEvenSuffix => k,
                _ => j.ok_or_else(|| GrowthError::BadJ("p_j_even requires j".into()))?,
            };
            if !(k <= j && j <= 2 * k - 1) {
                return Err(GrowthError::BadJ(format!("j={j} outside [{k}, {}]", 2 * k - 1)));
            }
            // 1 - z - 4(z^2 + ... + z^{2k-j}) - 2(z^{2k-j+1} + ... + z^{j+1}).
            let mut c = vec![0i64; (j + 2) as usize];
            c[0] = 1;
            c[1] = -1;
            for d in 2..=2 * k - j {
                c[d as usize] = -4;
            }
            for d in (2 * k - j + 1).max(2)..=j + 1 {
                c[d as usize] = -2;
            }
            Ok(IntPolynomial::new(c))
        }
        (f, _) => Err(GrowthError::BadFamily(format!("{f:?} invalid for m={}", params.m))),
    }
}

/// First `N+1` Taylor coefficients of `num/den`, exact integers via the
/// linear recurrence induced by the denominator. Panics if the series is
/// not integral (all shipped denominators have constant term 1).
pub fn series_coeffs(
    den: &IntPolynomial,
    num: &IntPolynomial,
    n: i64,
) -> Result<Vec<i64>, GrowthError> {
    let d0 = *den.coeffs.first().unwrap_or(&0);
    if d0 == 0 {
        return Err(GrowthError::ZeroConstantTerm);
    }
    let mut a = Vec::with_capacity((n + 1) as usize);
    for i in 0..=n as usize {
        let mut acc: i64 = *num.coeffs.get(i).unwrap_or(&0);
        for jj in 1..den.coeffs.len().min(i + 1) {
            acc = acc
                .checked_sub(den.coeffs[jj].checked_mul(a[i - jj]).expect("series overflow"))
                .expect("series overflow");
        }
        assert!(acc % d0 == 0, "non-integral series coefficient");
        a.push(acc / d0);
    }
    Ok(a)
}

/// Direct enumeration of the odd syllable language: sequences of
/// syllables `x y^b`, `1 <= |b| <= k`, counted by total letter length
/// (syllable `x y^b` has length `1 + |b|`). Matches the coefficients of
/// `1/q(z)`.
pub fn syllable_language_counts(k: i64, n: i64) -> Vec<u64> {
    let mut counts = vec![0u64; (n + 1) as usize];
    fn rec(k: i64, remaining: i64, counts: &mut [u64], used: i64) {
        counts[used as usize] += 1;
        for b in 1..=k {
            let len = 1 + b;
            if len <= remaining {
                // Two sign choices for y^b vs y^-b.
                rec(k, remaining - len, counts, used + len);
                rec(k, remaining - len, counts, used + len);
            }
        }
    }
    rec(k, n, &mut counts, 0);
    counts
}

/// Smallest positive root of the polynomial on `(0, 1)`: sign scan at step
/// `1/1024`, then bisection to within `tol`.
pub fn smallest_positive_root(
    poly: &IntPolynomial,
    tol: f64,
) -> Result<RootResult, GrowthError> {
    let step = 1.0 / 1024.0;
    let mut lo = 0.0f64;
    let mut flo = poly.eval(0.0);
    let mut bracket = None;
    for i in 1..=1024 {
        let hi = i as f64 * step;
        let fhi = poly.eval(hi);
        if flo == 0.0 {
            bracket = Some((lo, lo));
            break;
        }
        if flo * fhi <= 0.0 {
            bracket = Some((lo, hi));
            break;
        }
        lo = hi;
        flo = fhi;
    }
    let (mut lo, mut hi) = bracket.ok_or(GrowthError::NoSignChange)?;
    let flo = poly.eval(lo);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fmid = poly.eval(mid);
        if fmid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RootResult { value: 0.5 * (lo + hi), tolerance: tol, bracket: (lo, hi) })
}

/// Asymptotic-regime report (Prop. asymptotics): emits `s(n)`, `c(n)`, the
/// diagnostic ratios, estimated rates, the relevant series root, and which
/// regime the data supports.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticsReport {
    pub m: i64,
    pub n: i64,
    pub s: Vec<u64>,
    pub c: Vec<u64>,
    /// `c(n)/s(n)` per degree.
    pub ratio_cs: Vec<f64>,
    /// `n * c(n)/s(n)` per degree.
    pub ratio_ncs: Vec<f64>,
    /// `s(n+1)/s(n)`.
    pub rate_s: Vec<f64>,
    /// `c(n+1)/c(n)`.
    pub rate_c: Vec<f64>,
    /// Root of the governing denominator (odd: q; even p=2k: p_k), when the
    /// family applies.
    pub series_root: Option<f64>,
    /// Expected regime from the parity of m: "alpha^n" (odd or m=4k) or
    /// "alpha^n/n" (m=4k+2).
    pub expected_regime: String,
    /// Whether c(n)/s(n) stays within a factor-3 band on the window,
    /// checked per length parity (class counts alternate with parity).
    pub band_cs: bool,
    /// Whether n*c(n)/s(n) stays within a factor-3 band on the window,
    /// checked per length parity.
    pub band_ncs: bool,
}

/// Max/min of the positive values in the window is at most `3`.
pub fn band_bounded(values: &[f64]) -> bool {
    let pos: Vec<f64> = values.iter().copied().filter(|v| v.is_finite() && *v > 0.0).collect();
    if pos.is_empty() {
        return false;
    }
    let max = pos.iter().cloned().fold(f64::MIN, f64::max);
    let min = pos.iter().cloned().fold(f64::MAX, f64::min);
    max / min <= 3.0
}

pub fn asymptotics_report(
    params: GroupParams,
    n: i64,
    cap: i64,
) -> Result<AsymptoticsReport, GrowthError> {
    let s = sphere_sizes(params, n, cap)?.counts;
    let c = conj_class_counts(params, n, cap)?.counts;
    let ratio_cs: Vec<f64> =
        s.iter().zip(&c).map(|(&s, &c)| c as f64 / s as f64).collect();
    let ratio_ncs: Vec<f64> =
        ratio_cs.iter().enumerate().map(|(i, r)| i as f64 * r).collect();
    let rate = |v: &[u64]| -> Vec<f64> {
        v.windows(2).map(|w| w[1] as f64 / w[0] as f64).collect()
    };
    let series_root = match params.parity() {
        Parity::Odd { .. } => denominator_polynomial(Family::QOdd, params, None)
            .ok()
            .and_then(|p| smallest_positive_root(&p, 1e-12).ok())
            .map(|r| r.value),
        Parity::Even { p } if p % 2 == 0 && p >= 4 => {
            denominator_polynomial(Family::QEvenSuffix, params, None)
                .ok()
                .and_then(|p| smallest_positive_root(&p, 1e-12).ok())
                .map(|r| r.value)
        }
        _ => None,
    };
    let expected_regime = match params.parity() {
        Parity::Odd { .. } => "alpha^n".to_string(),
        Parity::Even { p } => {
            if p % 2 == 0 {
                "alpha^n".to_string() // m = 4k
            } else {
                "alpha^n/n".to_string() // m = 4k+2
            }
        }
    };
    let window = |v: &[f64]| -> Vec<f64> {
        let hi = v.len();
        let lo = hi.saturating_sub(7);
        v[lo..hi].to_vec()
    };
    // Class counts alternate strongly with length parity for small odd m,
    // so the band is checked per length parity within the window.
    let parity_band = |v: &[f64]| -> bool {
        let win = window(v);
        let lo = v.len() - win.len();
        let split = |r: usize| -> Vec<f64> {
            win.iter()
                .enumerate()
                .filter(|(i, _)| (lo + i) % 2 == r)
                .map(|(_, &x)| x)
                .collect()
        };
        band_bounded(&split(0)) && band_bounded(&split(1))
    };
    let band_cs = parity_band(&ratio_cs);
    let band_ncs = parity_band(&ratio_ncs);
    Ok(AsymptoticsReport {
        m: params.m,
        n,
        rate_s: rate(&s),
        rate_c: rate(&c),
        s,
        c,
        ratio_cs,
        ratio_ncs,
        series_root,
        expected_regime,
        band_cs,
        band_ncs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: i64) -> GroupParams {
        GroupParams::new(m).unwrap()
    }

    #[test]
    fn spheres_small() {
        let s = sphere_sizes(g(3), 4, DEFAULT_CAP).unwrap().counts;
        assert_eq!(s[0], 1);
        assert_eq!(s[1], 4);
        assert!(sphere_sizes(g(3), 20, DEFAULT_CAP).is_err());
    }

    #[test]
    fn class_counts_small() {
        let c = conj_class_counts(g(3), 5, DEFAULT_CAP).unwrap().counts;
        assert_eq!(c[0], 1);
        // G(3) length-1 classes: [x], [y], [y^-1], [x^-1] — x ~/~ x^-1 and
        // y ~/~ y^-1 (abelianization), so c(1) = 4.
        assert_eq!(c[1], 4);
    }

    #[test]
    fn polynomials() {
        let q1 = denominator_polynomial(Family::QOdd, g(3), None).unwrap();
        assert_eq!(q1.coeffs, vec![1, 0, -2]);
        let p2 = denominator_polynomial(Family::POdd, g(5), None).unwrap();
        assert_eq!(p2.coeffs, vec![1, 0, -2, -1, -1]);
        let p1k1 = denominator_polynomial(Family::POdd, g(3), None).unwrap();
        assert_eq!(p1k1.coeffs, vec![1, 0, -1, -1]);
        let p3 = denominator_polynomial(Family::P3Even, g(8), None).unwrap();
        assert_eq!(p3.coeffs, vec![1, -1, -4]);
        let p1 = denominator_polynomial(Family::P1Even, g(8), None).unwrap();
        assert_eq!(p1.coeffs, vec![1, -1, -2, -2, -2]);
        // p_j at j = 2k-1 equals p1.
        let pj = denominator_polynomial(Family::PjEven, g(8), Some(3)).unwrap();
        assert_eq!(pj.coeffs, p1.coeffs);
        assert!(denominator_polynomial(Family::PjEven, g(8), Some(7)).is_err());
        assert!(denominator_polynomial(Family::POdd, g(4), None).is_err());
    }

    #[test]
    fn series_and_roots() {
        let den = IntPolynomial::new(vec![1, 0, -2]);
        let num = IntPolynomial::new(vec![1]);
        assert_eq!(series_coeffs(&den, &num, 6).unwrap(), vec![1, 0, 2, 0, 4, 0, 8]);
        let one = IntPolynomial::new(vec![1]);
        assert_eq!(series_coeffs(&one, &one, 3).unwrap(), vec![1, 0, 0, 0]);
        let r = smallest_positive_root(&den, 1e-12).unwrap();
        assert!((r.value - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-9);
        let p2 = denominator_polynomial(Family::POdd, g(5), None).unwrap();
        let r2 = smallest_positive_root(&p2, 1e-12).unwrap();
        assert!((r2.value - 0.5845).abs() < 1e-3);
        assert!(smallest_positive_root(&one, 1e-12).is_err());
    }

    #[test]
    fn syllable_language_matches_series() {
        for k in 1..=3i64 {
            let m = 2 * k + 1;
            let q = denominator_polynomial(Family::QOdd, g(m), None).unwrap();
            let series = series_coeffs(&q, &IntPolynomial::new(vec![1]), 12).unwrap();
            let direct = syllable_language_counts(k, 12);
            let as_u: Vec<u64> = series.iter().map(|&x| x as u64).collect();
            assert_eq!(as_u, direct, "k={k}");
        }
    }

    #[test]
    fn report_runs() {
        let r = asymptotics_report(g(3), 8, DEFAULT_CAP).unwrap();
        assert_eq!(r.s[0], 1);
        assert_eq!(r.expected_regime, "alpha^n");
    }
}
