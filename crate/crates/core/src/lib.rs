//! Computational engine for dihedral Artin groups `G(m)` over the
//! free-product generating set `{x, y}`.
//!
//! * `m = 2k+1` odd: `G(m) = <x, y | x^2 = y^m>`;
//! * `m = 2p` even: `G(m) = BS(p, p) = <x, y | y^-1 x^p y = x^p>`.
//!
//! The crate solves the word problem exactly ([`canonical`]), computes and
//! classifies geodesics ([`geodesic`]), solves the conjugacy problem with
//! canonical class keys ([`conjugacy`]), enumerates standard and conjugacy
//! growth with the associated generating-series denominators ([`growth`]),
//! and builds the regular language of conjugacy geodesics plus empirical
//! fellow-traveler certification ([`lang`]). The [`oracle`] module contains
//! independent brute-force implementations used for cross-validation and by
//! the `selftest` CLI subcommand.

pub mod canonical;
pub mod conjugacy;
pub mod geodesic;
pub mod growth;
pub mod lang;
pub mod oracle;
pub mod words;

// Book chapters double as doc-tests so the guide can never drift from the
// API. (`cargo test` compiles and runs every Rust block in `book/src`.)
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(words_and_normal_forms, "../../../book/src/words-and-normal-forms.md");
    chapter!(geodesics, "../../../book/src/geodesics.md");
    chapter!(conjugacy, "../../../book/src/conjugacy.md");
    chapter!(growth, "../../../book/src/growth.md");
    chapter!(automata, "../../../book/src/automata.md");
}
