//! Independent brute-force oracles used for cross-validation.
//!
//! Everything in this module is deliberately written against the *defining
//! relations only* — no geodesic formulas, no type tables — so that bugs in
//! the main modules surface as disagreements here rather than being
//! replicated:
//!
//! * [`oracle_key`] is a stack normalizer over the relations `x^2 = y^m`
//!   (odd) / `y^{-1} x^p y = x^p` (even) using *balanced* residues, a
//!   different normal-form convention from [`crate::canonical`];
//! * [`Ball`] is a plain breadth-first search of the Cayley graph, giving
//!   exact distances and sphere counts;
//! * [`ConjugacyPartition`] closes a ball under single-letter conjugation
//!   with union-find, giving conjugacy classes and class-minimal lengths
//!   without any theory.

use crate::words::{Gen, GroupParams, Letter, Parity, Word};
use std::collections::HashMap;

/// Oracle normal form: alternating `(generator, balanced exponent)` runs
/// plus a central `Delta` exponent. Injective on group elements by the
/// normal form theorem for free products (applied to `G/<Delta>`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OracleKey {
    pub runs: Vec<(Gen, i64)>,
    pub delta: i64,
}

/// Balanced residue of `e` modulo `n > 0`: the unique `r` with
/// `-(n-1)/2 <= r <= n/2` and `r == e (mod n)`. Returns `(r, (e-r)/n)`.
fn balanced_rem(e: i64, n: i64) -> (i64, i64) {
    let mut r = e.rem_euclid(n);
    let mut q = (e - r) / n;
    if r > n / 2 {
        r -= n;
        q += 1;
    }
    (r, q)
}

/// Stack normalizer: push letters one at a time, reducing the top run by
/// the defining relations and cancelling empty runs.
pub fn oracle_key(w: &Word, params: GroupParams) -> OracleKey {
    let mut runs: Vec<(Gen, i64)> = Vec::new();
    let mut delta = 0i64;
    for l in &w.0 {
        let gen = l.generator();
        let d = l.sign();
        match runs.last_mut() {
            Some((g, e)) if *g == gen => *e += d,
            _ => runs.push((gen, d)),
        }
        // Reduce the top run.
        let (g, e) = *runs.last().unwrap();
        let reduced = match (g, params.parity()) {
            (Gen::X, Parity::Odd { .. }) => {
                // x^2 = Delta; balanced residues mod 2 are {0, 1}.
                let (r, q) = balanced_rem(e, 2);
                delta += q;
                r
            }
            (Gen::X, Parity::Even { p }) => {
                let (r, q) = balanced_rem(e, p);
                delta += q;
                r
            }
            (Gen::Y, Parity::Odd { .. }) => {
                // y^m = Delta; balanced residues in [-k, k].
                let (r, q) = balanced_rem(e, params.m);
                delta += q;
                r
            }
            (Gen::Y, Parity::Even { .. }) => e,
        };
        runs.last_mut().unwrap().1 = reduced;
        if reduced == 0 {
            runs.pop();
        }
    }
    OracleKey { runs, delta }
}

/// Equality in `G(m)` decided purely by the oracle normal form.
pub fn oracle_equal(u: &Word, v: &Word, params: GroupParams) -> bool {
    oracle_key(u, params) == oracle_key(v, params)
}

/// Breadth-first ball of the Cayley graph: every element within `radius`,
/// with its exact distance and the first (breadth-first, letter-ordered)
/// geodesic word reaching it.
pub struct Ball {
    pub radius: i64,
    pub elements: HashMap<OracleKey, (i64, Word)>,
}

impl Ball {
    pub fn new(params: GroupParams, radius: i64) -> Ball {
        let mut elements: HashMap<OracleKey, (i64, Word)> = HashMap::new();
        let mut frontier: Vec<(OracleKey, Word)> = vec![(oracle_key(&Word::empty(), params), Word::empty())];
        elements.insert(frontier[0].0.clone(), (0, Word::empty()));
        for dist in 1..=radius {
            let mut next = Vec::new();
            for (_, w) in &frontier {
                for l in Letter::ALL {
                    let mut w2 = w.clone();
                    w2.0.push(l);
                    let k2 = oracle_key(&w2, params);
                    if !elements.contains_key(&k2) {
                        elements.insert(k2.clone(), (dist, w2.clone()));
                        next.push((k2, w2));
                    }
                }
            }
            frontier = next;
        }
        Ball { radius, elements }
    }

    /// Exact distance from the identity, if within the ball.
    pub fn distance(&self, w: &Word, params: GroupParams) -> Option<i64> {
        self.elements.get(&oracle_key(w, params)).map(|&(d, _)| d)
    }

    /// Sphere sizes `s(0..=radius)`.
    pub fn sphere_counts(&self) -> Vec<u64> {
        let mut s = vec![0u64; (self.radius + 1) as usize];
        for &(d, _) in self.elements.values() {
            s[d as usize] += 1;
        }
        s
    }
}

/// Union-find closure of a ball under conjugation by single letters.
///
/// Elements up to `radius` are closed under `g -> l^{-1} g l`; classes of
/// elements whose length is at most `radius - 2 * delta_len - 2` are
/// complete (a geodesic path of single-letter conjugations between two
/// minimal-length class members never needs to leave that margin at desk
/// scale; validated by the acceptance suite's agreement checks).
pub struct ConjugacyPartition {
    pub ball: Ball,
    index: HashMap<OracleKey, usize>,
    parent: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn new(params: GroupParams, radius: i64) -> ConjugacyPartition {
        let ball = Ball::new(params, radius);
        let mut index = HashMap::new();
        let mut keys: Vec<&OracleKey> = ball.elements.keys().collect();
        // Deterministic indexing.
        keys.sort_by_key(|k| format!("{k:?}"));
        for (i, k) in keys.iter().enumerate() {
            index.insert((*k).clone(), i);
        }
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (key, (_, w)) in &ball.elements {
            let i = index[key];
            for l in Letter::ALL {
                // l^{-1} w l
                let mut c = Word(vec![l.inverse()]);
                c.0.extend(w.0.iter().copied());
                c.0.push(l);
                let ck = oracle_key(&c, params);
                if let Some(&j) = index.get(&ck) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        // Path-compress fully.
        for i in 0..parent.len() {
            let r = find(&mut parent, i);
            parent[i] = r;
        }
        ConjugacyPartition { ball, index, parent }
    }

    /// Class id of a word's element, if inside the ball.
    pub fn class_of(&self, w: &Word, params: GroupParams) -> Option<usize> {
        self.index.get(&oracle_key(w, params)).map(|&i| self.parent[i])
    }

    /// Whether two in-ball elements were joined.
    pub fn same_class(&self, u: &Word, v: &Word, params: GroupParams) -> Option<bool> {
        Some(self.class_of(u, params)? == self.class_of(v, params)?)
    }

    /// Minimal element length per class id.
    pub fn class_min_lengths(&self) -> HashMap<usize, i64> {
        let mut min: HashMap<usize, i64> = HashMap::new();
        for (key, &(d, _)) in &self.ball.elements {
            let c = self.parent[self.index[key]];
            min.entry(c).and_modify(|m| *m = (*m).min(d)).or_insert(d);
        }
        min
    }
}
