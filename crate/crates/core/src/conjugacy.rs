//! Conjugacy problem: cyclic reduction, (split) cyclic permutation orbits,
//! canonical conjugacy-class keys, conjugacy length, and permutation
//! conjugacy length (PCL).
//!
//! # Cyclic canonical form
//!
//! Conjugation in a central extension of a free product acts on the
//! canonical syllable word by cyclic permutation: the *cyclic canonical
//! form* of an element merges the first and last syllables around the wrap
//! (extracting `Delta`-carries into the central exponent, cascading) and
//! then takes the lexicographically minimal rotation. The resulting pair
//! (cyclic syllable list, central exponent) is a complete conjugacy
//! invariant: hyperbolic classes are cyclic words in the free-product
//! quotient, elliptic classes are singleton syllables or central powers,
//! and the carries pin down the central exponent.
//!
//! Conjugacy length is the same lift-optimization cost as geodesic length,
//! applied to the cyclic form — cyclic words never pay for backtracking.

use crate::canonical::{to_canonical, CanonicalElement, Syllable};
use crate::geodesic::{enumerate_geodesics, geodesic_length, is_geodesic, GeodesicWord};
use crate::words::{Gen, GroupParams, Letter, Parity, Word};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Canonical conjugacy-class key: a minimal-length class representative,
/// its length (= conjugacy length), and the class's Garside exponent.
/// Two elements are conjugate iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjKey {
    pub rep: Word,
    pub length: i64,
    pub central: i64,
}

/// Errors from conjugacy operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugacyError {
    NoSplitView(String),
    NotConjugate(String),
    NotGeodesic(String),
    CapExceeded(String),
}

impl fmt::Display for ConjugacyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyError::NoSplitView(s) => write!(f, "no split view: {s}"),
            ConjugacyError::NotConjugate(s) => write!(f, "not conjugate: {s}"),
            ConjugacyError::NotGeodesic(s) => write!(f, "not a geodesic: {s}"),
            ConjugacyError::CapExceeded(s) => write!(f, "cap exceeded: {s}"),
        }
    }
}

impl std::error::Error for ConjugacyError {}

/// The cyclic canonical form (complete conjugacy invariant).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicKey {
    pub syllables: Vec<Syllable>,
    pub central: i64,
}

/// Residue/carry for a syllable exponent (same convention as the canonical
/// builder).
fn reduce(params: GroupParams, gen: Gen, exp: i64) -> (i64, i64) {
    let modulus = match (gen, params.parity()) {
        (Gen::X, Parity::Odd { .. }) => 2,
        (Gen::X, Parity::Even { p }) => p,
        (Gen::Y, Parity::Odd { .. }) => params.m,
        (Gen::Y, Parity::Even { .. }) => return (exp, 0),
    };
    let r = exp.rem_euclid(modulus);
    (r, (exp - r) / modulus)
}

/// Cyclic canonical form of an element.
pub fn cyclic_key(e: &CanonicalElement, params: GroupParams) -> CyclicKey {
    let mut syl: VecDeque<Syllable> = e.syllables.iter().copied().collect();
    let mut central = e.central;
    // Merge around the wrap: w = f ... b is conjugate to (b f) ... .
    while syl.len() >= 2 && syl.front().unwrap().gen == syl.back().unwrap().gen {
        let b = syl.pop_back().unwrap();
        let f = syl.pop_front().unwrap();
        let (r, carry) = reduce(params, b.gen, b.exp + f.exp);
        central += carry;
        if r != 0 {
            syl.push_front(Syllable { gen: b.gen, exp: r });
        }
    }
    // Lexicographically minimal rotation (all rotations remain alternating
    // because the list alternates cyclically).
    let list: Vec<Syllable> = syl.into_iter().collect();
    let n = list.len();
    let mut best = list.clone();
    for i in 1..n {
        let mut rot = Vec::with_capacity(n);
        rot.extend_from_slice(&list[i..]);
        rot.extend_from_slice(&list[..i]);
        if rot < best {
            best = rot;
        }
    }
    CyclicKey { syllables: best, central }
}

/// Cyclic canonical form of a word's element.
pub fn cyclic_key_of_word(w: &Word, params: GroupParams) -> CyclicKey {
    cyclic_key(&to_canonical(w, params), params)
}

impl CyclicKey {
    /// The cyclic form read as a linear canonical element (valid: it
    /// alternates and its exponents are in the canonical ranges).
    pub fn as_element(&self) -> CanonicalElement {
        CanonicalElement { syllables: self.syllables.clone(), central: self.central }
    }
}

/// Minimal word length over the conjugacy class.
pub fn conjugacy_length(w: &Word, params: GroupParams) -> i64 {
    geodesic_length(&cyclic_key_of_word(w, params).as_element(), params)
}

/// Whether two words represent conjugate elements.
pub fn is_conjugate(u: &Word, v: &Word, params: GroupParams) -> bool {
    cyclic_key_of_word(u, params) == cyclic_key_of_word(v, params)
}

/// Conjugate the word into a cyclically reduced form: strip cancelling
/// first/last letters and rotate boundary same-generator runs together
/// until the word starts and ends with letters of different generators, or
/// is a single-generator run.
pub fn cyclically_reduce(w: &Word, params: GroupParams) -> Word {
    let _ = params; // reduction is letter-level; params kept for symmetry
    let mut w = w.free_reduce();
    loop {
        let n = w.len();
        if n < 2 {
            return w;
        }
        let first = w.0[0];
        let last = w.0[n - 1];
        if first == last.inverse() {
            let inner = Word(w.0[1..n - 1].to_vec());
            w = inner.free_reduce();
            continue;
        }
        if first.generator() == last.generator() && w.runs().len() > 1 {
            // Conjugate by the last letter: rotate it to the front, where it
            // joins the leading run (possibly forming a Delta-carrying run).
            w = w.rotate(n - 1);
            w = w.free_reduce();
            continue;
        }
        return w;
    }
}

/// All rotations of the word (deduplicated, sorted).
pub fn cyclic_permutations(w: &Word) -> Vec<Word> {
    w.rotations()
}

/// Split cyclic permutations of a split-type geodesic: the special-power
/// tuple stays fixed in cyclic order while the `A`-block tuple rotates
/// against it, including every split of one block into a prefix kept at the
/// end and a suffix moved to the front.
pub fn split_cyclic_permutations(gw: &GeodesicWord) -> Result<Vec<Word>, ConjugacyError> {
    let sv = gw
        .split
        .as_ref()
        .ok_or_else(|| ConjugacyError::NoSplitView(format!("{} ({})", gw.word, gw.gtype)))?;
    let tau = sv.specials.len();
    debug_assert_eq!(sv.blocks.len(), tau + 1);
    // Cyclic pair list (B_i, s_i): B_1 is the wrap block (last . first).
    let mut blocks: Vec<Word> = Vec::with_capacity(tau);
    blocks.push(sv.blocks[tau].concat(&sv.blocks[0]));
    for b in &sv.blocks[1..tau] {
        blocks.push(b.clone());
    }
    let mut out: HashSet<Word> = HashSet::new();
    // Rotate the block tuple against the fixed specials tuple, then take
    // every rotation of the assembled cyclic word (this includes the
    // block-splitting cuts).
    for d in 0..tau {
        let mut word = Word::empty();
        for i in 0..tau {
            word.0.extend(blocks[(i + d) % tau].0.iter().copied());
            word.0
                .extend(Word::run(special_gen(gw), sv.specials[i]).0);
        }
        for rot in word.rotations() {
            out.insert(rot);
        }
    }
    let mut out: Vec<Word> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

fn special_gen(gw: &GeodesicWord) -> Gen {
    match gw.gtype {
        crate::geodesic::GeodesicType::T30Star | crate::geodesic::GeodesicType::T2b(_) => Gen::X,
        _ => Gen::Y,
    }
}

/// Canonical class key: the lexicographically minimal word among the
/// geodesics of the cyclic canonical form and all their rotations. Constant
/// on conjugacy classes because the cyclic form is.
pub fn conj_representative(w: &Word, params: GroupParams) -> ConjKey {
    let key = cyclic_key_of_word(w, params);
    let e = key.as_element();
    let length = geodesic_length(&e, params);
    let geodesics =
        enumerate_geodesics(&e, params, length).expect("cap equals exact length");
    let mut best: Option<Word> = None;
    for g in geodesics {
        for rot in g.rotations() {
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    ConjKey { rep: best.unwrap_or_else(Word::empty), length, central: key.central }
}

/// Independent conjugacy oracle: breadth-first closure of `u` under
/// conjugation by single letters, up to conjugator length `radius`.
/// Intermediate conjugates are capped at geodesic length
/// `max(|u|,|v|) + 2 * delta_len + 2` (a chain through longer intermediates
/// never helps at desk scale; cross-validated by the acceptance suite).
pub fn brute_force_conjugate(
    u: &Word,
    v: &Word,
    params: GroupParams,
    radius: i64,
) -> Result<bool, ConjugacyError> {
    if radius > 64 {
        return Err(ConjugacyError::CapExceeded(format!("radius {radius} > 64")));
    }
    let start = to_canonical(u, params);
    let target = to_canonical(v, params);
    if start == target {
        return Ok(true);
    }
    let len_cap = geodesic_length(&start, params).max(geodesic_length(&target, params))
        + 2 * params.delta_len()
        + 2;
    let mut seen: HashSet<CanonicalElement> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    for _ in 0..radius {
        let mut next = Vec::new();
        for e in &frontier {
            for l in Letter::ALL {
                // l^{-1} e l
                let mut b = crate::canonical::CanonicalBuilder::new(params);
                b.push_syllable(l.inverse().generator(), l.inverse().sign());
                b.push_element(e);
                b.push_syllable(l.generator(), l.sign());
                let c = b.finish();
                if c == target {
                    return Ok(true);
                }
                if geodesic_length(&c, params) <= len_cap && seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(false)
}

/// Permutation conjugacy length: the minimal length of a word `t` with
/// `t u' =_G v' t` for some cyclic permutations `u'` of `u` and `v'` of
/// `v`, found by increasing-radius search over conjugators.
pub fn pcl(u: &Word, v: &Word, params: GroupParams) -> Result<i64, ConjugacyError> {
    if !is_geodesic(u, params) {
        return Err(ConjugacyError::NotGeodesic(u.to_string()));
    }
    if !is_geodesic(v, params) {
        return Err(ConjugacyError::NotGeodesic(v.to_string()));
    }
    if !is_conjugate(u, v, params) {
        return Err(ConjugacyError::NotConjugate(format!("{u} !~ {v}")));
    }
    let us: Vec<CanonicalElement> =
        u.rotations().iter().map(|r| to_canonical(r, params)).collect();
    let vs: HashSet<CanonicalElement> =
        v.rotations().iter().map(|r| to_canonical(r, params)).collect();
    let cap = (u.len() + v.len()) as i64 + 2 * params.delta_len() + 2;
    // Breadth-first over conjugators t (freely reduced words).
    let mut ts: Vec<Word> = vec![Word::empty()];
    for d in 0..=cap {
        for t in &ts {
            let tc = to_canonical(t, params);
            let tinv = to_canonical(&t.invert(), params);
            for ue in &us {
                // t u' t^{-1}
                let conj = crate::canonical::canonical_multiply(
                    &crate::canonical::canonical_multiply(&tc, ue, params),
                    &tinv,
                    params,
                );
                if vs.contains(&conj) {
                    return Ok(d);
                }
            }
        }
        // Extend to freely reduced words of the next length.
        let mut next = Vec::new();
        for t in &ts {
            for l in Letter::ALL {
                if t.0.last().is_some_and(|&last| last == l.inverse()) {
                    continue;
                }
                let mut t2 = t.clone();
                t2.0.push(l);
                next.push(t2);
            }
        }
        ts = next;
    }
    Err(ConjugacyError::CapExceeded(format!("no PC-conjugator within length {cap}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::classify_geodesic;
    use crate::words::parse_word;

    fn g(m: i64) -> GroupParams {
        GroupParams::new(m).unwrap()
    }

    fn w(m: i64, s: &str) -> Word {
        parse_word(s, Some(g(m))).unwrap()
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclically_reduce(&w(3, "yxY"), g(3)), w(3, "x"));
        // x y x ~ x x y (boundary x-run rotated together).
        assert_eq!(cyclically_reduce(&w(3, "xyx"), g(3)), w(3, "xxy"));
        let already = w(3, "xY");
        assert_eq!(cyclically_reduce(&already, g(3)), already);
        assert_eq!(cyclically_reduce(&w(3, "x^4"), g(3)), w(3, "x^4"));
    }

    #[test]
    fn conjugacy_basics() {
        assert!(is_conjugate(&w(3, "yxY"), &w(3, "x"), g(3)));
        assert!(!is_conjugate(&w(3, "x"), &w(3, "y"), g(3)));
        // x is not conjugate to x^-1 in G(3) (abelianization obstruction).
        assert!(!is_conjugate(&w(3, "x"), &w(3, "X"), g(3)));
        assert_eq!(conjugacy_length(&w(3, "yxY"), g(3)), 1);
        assert_eq!(conjugacy_length(&Word::empty(), g(3)), 0);
        assert_eq!(conjugacy_length(&w(3, "xyxyxY"), g(3)), 6);
    }

    #[test]
    fn paper_examples_g3() {
        // u1 = xyxyxY ~ v1 = yxYxyx (a cyclic permutation).
        let u1 = w(3, "xyxyxY");
        let v1 = w(3, "yxYxyx");
        assert!(is_conjugate(&u1, &v1, g(3)));
        // u2 = XyXYxy ~ v2 = YXyXyx.
        let u2 = w(3, "XyXYxy");
        let v2 = w(3, "YXyXyx");
        assert!(is_conjugate(&u2, &v2, g(3)));
        assert_eq!(conj_representative(&u2, g(3)), conj_representative(&v2, g(3)));
        // v2 is a split cyclic permutation of u2.
        let gw = classify_geodesic(&u2, g(3)).unwrap();
        let orbit = split_cyclic_permutations(&gw).unwrap();
        assert!(orbit.contains(&v2), "orbit: {:?}", orbit.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn paper_examples_bs22() {
        let m = g(4);
        let u1 = w(4, "xy^5xy^-3xy^2 x^4");
        let v1 = w(4, "y^-3xy^2xy^5x x^4");
        assert!(is_conjugate(&u1, &v1, m));
        assert_eq!(conj_representative(&u1, m), conj_representative(&v1, m));
        let u2 = w(4, "yxy^-2xy^11X");
        let v2 = w(4, "y^-2xy^11xyX");
        assert!(is_conjugate(&u2, &v2, m));
        let gw = classify_geodesic(&u2, m).unwrap();
        let orbit = split_cyclic_permutations(&gw).unwrap();
        assert!(orbit.contains(&v2));
    }

    #[test]
    fn paper_example_g5_split() {
        let m = g(5);
        let word = w(5, "xyxy^-2xy^-2xy^3xy^-1xy^3");
        let target = w(5, "xy^-1xy^-2xyxy^-2xy^3xy^3");
        let gw = classify_geodesic(&word, m).unwrap();
        let orbit = split_cyclic_permutations(&gw).unwrap();
        assert!(orbit.contains(&target));
        assert!(is_conjugate(&word, &target, m));
    }

    #[test]
    fn brute_force_agrees() {
        let m = g(3);
        assert!(brute_force_conjugate(&w(3, "XyXYxy"), &w(3, "YXyXyx"), m, 8).unwrap());
        assert!(!brute_force_conjugate(&w(3, "x"), &w(3, "y"), m, 8).unwrap());
        assert!(brute_force_conjugate(&w(3, "x"), &w(3, "x"), m, 0).unwrap());
    }

    #[test]
    fn pcl_examples() {
        let m = g(3);
        let u1 = w(3, "xyxyxY");
        let v1 = w(3, "yxYxyx");
        assert_eq!(pcl(&u1, &v1, m).unwrap(), 0);
        assert_eq!(pcl(&w(3, "XyXYxy"), &w(3, "YXyXyx"), m).unwrap(), 0);
        assert_eq!(pcl(&w(3, "x"), &w(3, "x"), m).unwrap(), 0);
        assert!(matches!(
            pcl(&w(3, "x"), &w(3, "y"), m),
            Err(ConjugacyError::NotConjugate(_))
        ));
        assert!(matches!(
            pcl(&w(3, "y^4"), &w(3, "y^4"), g(5)),
            Err(ConjugacyError::NotGeodesic(_))
        ));
    }

    #[test]
    fn key_stability_small() {
        let m = g(3);
        let base = w(3, "xyxY");
        let key = conj_representative(&base, m);
        for t in ["x", "y", "Xy", "yx"] {
            let t = w(3, t);
            let conj = t.invert().concat(&base).concat(&t);
            assert_eq!(conj_representative(&conj, m), key);
        }
    }
}
