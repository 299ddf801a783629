//! Exact word-problem solver: the free-product normal form together with the
//! central Garside exponent.
//!
//! `G(m)` is a central extension of a free product of cyclic groups by
//! `<Delta>`:
//!
//! * `m = 2k+1` odd: `G/<Delta>  =  C_2 * C_m` with `x^2 = y^m = Delta`;
//!   canonical syllables are `x^1` and `y^b`, `b` in `[1, m-1]`.
//! * `m = 2p` even: `G/<Delta>  =  C_p * Z` with `x^p = Delta` central and
//!   `y` the (free) stable letter; canonical syllables are `x^a`,
//!   `a` in `[1, p-1]`, and `y^b`, `b` in `Z \ {0}`.
//!
//! A [`CanonicalElement`] is the unique pair (alternating syllable word in
//! the quotient, central exponent); two words represent the same group
//! element iff their canonical elements are field-wise equal.

use crate::words::{Gen, GroupParams, Parity, Word};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One syllable of the free-product normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

/// Free-product normal form plus central exponent. Field-wise equality
/// decides the word problem.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CanonicalElement {
    /// Alternating syllables (adjacent generators differ), exponents in the
    /// canonical (positive-residue) ranges.
    pub syllables: Vec<Syllable>,
    /// Exponent of the central element `Delta`.
    pub central: i64,
}

impl CanonicalElement {
    pub fn identity() -> CanonicalElement {
        CanonicalElement::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.central == 0
    }

    /// A (not necessarily geodesic) representative word: the syllables
    /// spelled with positive exponents, `Delta^c` appended rightmost.
    pub fn to_word(&self, params: GroupParams) -> Word {
        let mut w = Word::empty();
        for s in &self.syllables {
            w.0.extend(Word::run(s.gen, s.exp).0);
        }
        w.0.extend(params.delta_word(self.central).0);
        w.free_reduce()
    }
}

/// Incremental builder: pushes syllables left to right, merging runs and
/// extracting `Delta`-carries into the central exponent.
#[derive(Debug, Clone)]
pub struct CanonicalBuilder {
    params: GroupParams,
    syllables: Vec<Syllable>,
    central: i64,
}

impl CanonicalBuilder {
    pub fn new(params: GroupParams) -> CanonicalBuilder {
        CanonicalBuilder { params, syllables: Vec::new(), central: 0 }
    }

    /// Canonical residue and `Delta`-carry of a raw exponent.
    fn reduce(&self, gen: Gen, exp: i64) -> (i64, i64) {
        let modulus = match (gen, self.params.parity()) {
            (Gen::X, Parity::Odd { .. }) => 2,
            (Gen::X, Parity::Even { p }) => p,
            (Gen::Y, Parity::Odd { .. }) => self.params.m,
            (Gen::Y, Parity::Even { .. }) => return (exp, 0),
        };
        let r = exp.rem_euclid(modulus);
        (r, (exp - r) / modulus)
    }

    pub fn push_syllable(&mut self, gen: Gen, exp: i64) {
        let mut exp = exp;
        if let Some(top) = self.syllables.last() {
            if top.gen == gen {
                exp = exp.checked_add(top.exp).expect("syllable exponent overflow");
                self.syllables.pop();
            }
        }
        let (r, carry) = self.reduce(gen, exp);
        self.central = self.central.checked_add(carry).expect("central exponent overflow");
        if r != 0 {
            self.syllables.push(Syllable { gen, exp: r });
        }
    }

    pub fn push_central(&mut self, c: i64) {
        self.central = self.central.checked_add(c).expect("central exponent overflow");
    }

    pub fn push_word(&mut self, w: &Word) {
        for &l in w.letters() {
            self.push_syllable(l.generator(), l.sign());
        }
    }

    pub fn push_element(&mut self, e: &CanonicalElement) {
        for s in &e.syllables {
            self.push_syllable(s.gen, s.exp);
        }
        self.push_central(e.central);
    }

    pub fn finish(self) -> CanonicalElement {
        CanonicalElement { syllables: self.syllables, central: self.central }
    }
}

/// Normal form of a word; constant on `=_G` classes.
pub fn to_canonical(w: &Word, params: GroupParams) -> CanonicalElement {
    let mut b = CanonicalBuilder::new(params);
    b.push_word(w);
    b.finish()
}

/// Product of two canonical elements.
pub fn canonical_multiply(
    a: &CanonicalElement,
    b: &CanonicalElement,
    params: GroupParams,
) -> CanonicalElement {
    let mut builder = CanonicalBuilder::new(params);
    builder.push_element(a);
    builder.push_element(b);
    builder.finish()
}

/// Inverse element in canonical form.
pub fn canonical_invert(a: &CanonicalElement, params: GroupParams) -> CanonicalElement {
    let mut builder = CanonicalBuilder::new(params);
    for s in a.syllables.iter().rev() {
        builder.push_syllable(s.gen, -s.exp);
    }
    builder.push_central(-a.central);
    builder.finish()
}

/// Left-multiply by a single letter: `letter * a`.
pub fn letter_times(
    letter: crate::words::Letter,
    a: &CanonicalElement,
    params: GroupParams,
) -> CanonicalElement {
    let mut builder = CanonicalBuilder::new(params);
    builder.push_syllable(letter.generator(), letter.sign());
    builder.push_element(a);
    builder.finish()
}

/// Decides the word problem.
pub fn elements_equal(u: &Word, v: &Word, params: GroupParams) -> bool {
    to_canonical(u, params) == to_canonical(v, params)
}

impl Serialize for CanonicalElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Syls<'a>(&'a [Syllable]);
        impl Serialize for Syls<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for s in self.0 {
                    let g = match s.gen {
                        Gen::X => "x",
                        Gen::Y => "y",
                    };
                    seq.serialize_element(&(g, s.exp))?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("CanonicalElement", 2)?;
        st.serialize_field("syllables", &Syls(&self.syllables))?;
        st.serialize_field("central", &self.central)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CanonicalElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            syllables: Vec<(String, i64)>,
            central: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut syllables = Vec::with_capacity(raw.syllables.len());
        for (g, exp) in raw.syllables {
            let gen = match g.as_str() {
                "x" => Gen::X,
                "y" => Gen::Y,
                other => return Err(D::Error::custom(format!("bad generator {other:?}"))),
            };
            syllables.push(Syllable { gen, exp });
        }
        Ok(CanonicalElement { syllables, central: raw.central })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn g(m: i64) -> GroupParams {
        GroupParams::new(m).unwrap()
    }

    fn canon(m: i64, s: &str) -> CanonicalElement {
        to_canonical(&parse_word(s, Some(g(m))).unwrap(), g(m))
    }

    fn syl(gen: Gen, exp: i64) -> Syllable {
        Syllable { gen, exp }
    }

    #[test]
    fn defining_relations() {
        assert_eq!(canon(3, "xx"), CanonicalElement { syllables: vec![], central: 1 });
        assert_eq!(canon(3, "yyy"), CanonicalElement { syllables: vec![], central: 1 });
        // m=6 (p=3): x^3 is central, so Y x^3 y collapses.
        assert_eq!(canon(6, "Y x^3 y"), CanonicalElement { syllables: vec![], central: 1 });
        // x^-1 = x * Delta^-1 in the odd case.
        assert_eq!(
            canon(3, "X y"),
            CanonicalElement {
                syllables: vec![syl(Gen::X, 1), syl(Gen::Y, 1)],
                central: -1
            }
        );
    }

    #[test]
    fn multiply_and_invert() {
        let m = g(3);
        let d = CanonicalElement { syllables: vec![], central: 1 };
        let dinv = canonical_invert(&d, m);
        assert_eq!(dinv.central, -1);
        assert!(canonical_multiply(&d, &dinv, m).is_identity());
        let x = canon(3, "x");
        assert_eq!(canonical_multiply(&x, &x, m), d);
        assert_eq!(canonical_invert(&x, m), canon(3, "X"));
        // m=5: (y^2)^-1 = y^3 Delta^-1.
        let y2 = canon(5, "yy");
        assert_eq!(
            canonical_invert(&y2, g(5)),
            CanonicalElement { syllables: vec![syl(Gen::Y, 3)], central: -1 }
        );
        for s in ["xyxyxY", "XyXYxy", "Y^2xy^11X", "x^5Y"] {
            for m in [3, 4, 5, 6] {
                let e = canon(m, s);
                let inv = canonical_invert(&e, g(m));
                assert!(canonical_multiply(&e, &inv, g(m)).is_identity());
                assert_eq!(canonical_invert(&inv, g(m)), e);
            }
        }
    }

    #[test]
    fn equality_examples() {
        let m3 = g(3);
        let eq = |a: &str, b: &str| {
            elements_equal(
                &parse_word(a, Some(m3)).unwrap(),
                &parse_word(b, Some(m3)).unwrap(),
                m3,
            )
        };
        assert!(eq("X y^3 x", "y^3"));
        assert!(!eq("xyxyxY", "yxYxyx")); // conjugate but not equal
        assert!(!eq("x", "y"));
        // Central element identities: x^4 y^-3 = Delta^2 Delta^-1 = x^2.
        assert!(eq("x^4 Y^3", "xx"));
        assert!(eq("y^3 XX", ""));
    }

    #[test]
    fn multiply_matches_concat() {
        let words = ["", "x", "Xy", "xyxyxY", "Y^3x", "XXyy"];
        for m in [3, 4, 5, 6, 7, 8] {
            let p = g(m);
            for a in &words {
                for b in &words {
                    let wa = parse_word(a, Some(p)).unwrap();
                    let wb = parse_word(b, Some(p)).unwrap();
                    assert_eq!(
                        canonical_multiply(&to_canonical(&wa, p), &to_canonical(&wb, p), p),
                        to_canonical(&wa.concat(&wb), p)
                    );
                }
            }
        }
    }

    #[test]
    fn relator_insertion_invariance() {
        // Inserting the defining relator anywhere fixes the canonical form.
        for m in [3, 4, 5, 6] {
            let p = g(m);
            let relator = match p.parity() {
                Parity::Odd { .. } => {
                    // x^2 y^-m
                    parse_word(&format!("x^2 y^-{}", p.m), Some(p)).unwrap()
                }
                Parity::Even { p: pp } => {
                    // y^-1 x^p y x^-p
                    parse_word(&format!("Y x^{pp} y x^-{pp}"), Some(p)).unwrap()
                }
            };
            let base = parse_word("xyXY", Some(p)).unwrap();
            let e = to_canonical(&base, p);
            for i in 0..=base.len() {
                let mut v = base.letters()[..i].to_vec();
                v.extend(relator.letters());
                v.extend(&base.letters()[i..]);
                assert_eq!(to_canonical(&Word(v), p), e, "m={m} i={i}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let e = canon(5, "x y^2 X");
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<CanonicalElement>(&s).unwrap(), e);
        let d = canon(3, "xx");
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"syllables":[],"central":1}"#);
    }
}
