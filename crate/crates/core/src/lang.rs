//! Regular-language machinery: the ConjGeo automaton, transfer-matrix
//! counting, and empirical fellow-traveler (FFTP) certification.
//!
//! # The ConjGeo automaton
//!
//! A word is a *conjugacy geodesic* when its length equals the minimal
//! length in its conjugacy class. Over the free-product generators this has
//! an exact run-level characterization. Write the word as maximal runs,
//! reduce each `x`-run to a bounded exponent (`rem`) plus `Delta`-carry,
//! and merge `y`-runs across carry-only `x`-runs into *groups* (cyclically,
//! around the wrap). Then `w` is a conjugacy geodesic iff:
//!
//! * it is freely and cyclically reduced at the run level (no cancelling or
//!   wasteful wrap merges),
//! * each group's runs share one sign (mixed signs waste letters),
//! * all `Delta`-carries share one sign (so the spent `Delta`-letters equal
//!   `delta_len * |c'|` for the residual central power),
//! * the word's choice of positive/negative spellings is an optimal
//!   borrow set for the class's length function. The length function is
//!   convex in the number of borrows, so optimality reduces to three local
//!   comparisons on the spelling deltas (`delta = negative-lift cost minus
//!   positive-lift cost`): the chosen (negatively spelt) syllables must
//!   carry the smallest deltas, and swapping one syllable either way must
//!   not pay. Writing `A` for the least delta among unchosen syllables,
//!   `D` for the greatest among chosen ones, and `Gamma` for the common
//!   carry sign, the conditions are `D <= A`, `A + (Gamma >= 0 ? 2 : -2)
//!   >= 0` and `D + (Gamma > 0 ? 2 : -2) <= 0`.
//!
//! Every quantity above is bounded (odd group sums beyond `k+2` and even
//! exponent data beyond `p` are already fatal), so the summary of a prefix
//! needed to decide acceptance of any completion is finite: the exact first
//! two view items (for the wrap merge), min/max aggregates over interior
//! items, the exact last two items, the in-progress run, and the carry
//! sign. The automaton is built lazily over these summaries and then Moore
//! minimized.

use crate::canonical::{to_canonical, CanonicalElement};
use crate::geodesic::{element_distance, geodesic_length, is_geodesic};
use crate::words::{Gen, GroupParams, Letter, Parity, Word};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Deterministic complete automaton over the four letters (transition
/// order follows [`Letter::ALL`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    pub start: usize,
    pub accepting: Vec<bool>,
    /// `transitions[state][letter_index]`.
    pub transitions: Vec<[usize; 4]>,
}

/// FFTP certification report.
#[derive(Debug, Clone, Serialize)]
pub struct FftpReport {
    pub m: i64,
    pub max_len: i64,
    /// Max over non-geodesic words of the minimal fellow-traveler distance
    /// to some shorter equal word.
    pub observed_constant: i64,
    /// The proof's constant (odd: `2k+9`; even: max of the rule constants,
    /// `4p`).
    pub bound: i64,
    /// Number of non-geodesic words examined.
    pub words_checked: u64,
    /// Every examined word had a qualifying shorter word.
    pub all_have_shorter: bool,
}

/// Errors from language operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LangError {
    CapExceeded(String),
}

impl std::fmt::Display for LangError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LangError::CapExceeded(s) => write!(f, "cap exceeded: {s}"),
        }
    }
}

impl std::error::Error for LangError {}

// ---------------------------------------------------------------------------
// Summary states for the ConjGeo machine.
// ---------------------------------------------------------------------------

/// One item of the merged run view: an `x`-syllable with signed bounded
/// exponent, or a `y`-group with signed (odd: capped) sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Item {
    XSyl(i64),
    YGroup(i64),
}

impl Item {
    fn gen(self) -> Gen {
        match self {
            Item::XSyl(_) => Gen::X,
            Item::YGroup(_) => Gen::Y,
        }
    }
}

/// Min/max aggregates over interior items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Agg {
    /// Odd: whether an `x`-syllable of each sign occurs.
    has_x_pos: bool,
    has_x_neg: bool,
    /// Even: extremal `x` exponents (0 = none).
    max_x_pos: i64,
    max_x_neg: i64,
    /// Odd: extremal (capped) `y`-group sums (0 = none).
    max_y_pos: i64,
    max_y_neg: i64,
    /// Whether any interior item exists (even `y`-groups leave no other
    /// trace but still separate the boundary items).
    nonempty: bool,
}

impl Agg {
    fn add(&mut self, item: Item, odd: bool) {
        self.nonempty = true;
        match item {
            Item::XSyl(r) => {
                if odd {
                    if r > 0 {
                        self.has_x_pos = true;
                    } else {
                        self.has_x_neg = true;
                    }
                } else if r > 0 {
                    self.max_x_pos = self.max_x_pos.max(r);
                } else {
                    self.max_x_neg = self.max_x_neg.max(-r);
                }
            }
            Item::YGroup(s) => {
                if odd {
                    if s > 0 {
                        self.max_y_pos = self.max_y_pos.max(s);
                    } else {
                        self.max_y_neg = self.max_y_neg.max(-s);
                    }
                }
            }
        }
    }
}

/// In-progress run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Run {
    gen: Gen,
    sign: i64,
    /// For `x`-runs: length mod the `x`-modulus (2 odd, p even).
    x_mod: i64,
    /// For `x`-runs: length reached the modulus at least once.
    x_carry: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct MState {
    dead: bool,
    run: Option<Run>,
    /// Open `y`-group sum: odd signed capped sum; even just the sign.
    open_group: Option<i64>,
    /// First up-to-two closed view items.
    lead: Vec<Item>,
    /// Last up-to-two closed view items.
    tail: Vec<Item>,
    agg: Agg,
    /// Common sign of all `Delta`-carries so far (0 = none; mixed = dead).
    carry_sign: i64,
}

impl MState {
    fn initial() -> MState {
        MState {
            dead: false,
            run: None,
            open_group: None,
            lead: Vec::new(),
            tail: Vec::new(),
            agg: Agg::default(),
            carry_sign: 0,
        }
    }

    fn dead() -> MState {
        MState { dead: true, ..MState::initial() }
    }
}

struct Machine {
    params: GroupParams,
    odd: bool,
    /// `x`-run modulus (= delta_len).
    x_mod: i64,
    /// Odd group-sum cap (`k+2`); even groups track sign only.
    y_cap: i64,
}

impl Machine {
    fn new(params: GroupParams) -> Machine {
        let (odd, x_mod, y_cap) = match params.parity() {
            Parity::Odd { k } => (true, 2, k + 2),
            Parity::Even { p } => (false, p, 1),
        };
        Machine { params, odd, x_mod, y_cap }
    }

    fn cap_sum(&self, s: i64) -> i64 {
        s.signum() * s.abs().min(self.y_cap)
    }

    fn commit(&self, st: &mut MState, item: Item) {
        if st.lead.len() < 2 {
            st.lead.push(item);
        } else {
            st.tail.push(item);
            if st.tail.len() > 2 {
                let old = st.tail.remove(0);
                st.agg.add(old, self.odd);
            }
        }
    }

    /// Merge a run carry of the given sign into the common carry sign.
    /// Returns false on a sign clash.
    fn merge_carry(&self, carry_sign: &mut i64, sign: i64) -> bool {
        if *carry_sign == 0 {
            *carry_sign = sign;
            true
        } else {
            *carry_sign == sign
        }
    }

    /// Close an x-run into the state (shared by transitions and accept).
    /// Returns false if the state dies.
    fn close_x_run(&self, st: &mut MState, run: Run) -> bool {
        if run.x_carry && !self.merge_carry(&mut st.carry_sign, run.sign) {
            return false;
        }
        let rem = run.sign * run.x_mod;
        if rem != 0 {
            if let Some(g) = st.open_group.take() {
                let item = Item::YGroup(g);
                self.commit(st, item);
            }
            self.commit(st, Item::XSyl(rem));
        }
        true
    }

    fn transition(&self, st: &MState, letter: Letter) -> MState {
        if st.dead {
            return MState::dead();
        }
        let gen = letter.generator();
        let sign = letter.sign();
        let mut st = st.clone();
        if let Some(run) = st.run {
            if run.gen == gen && run.sign != sign {
                return MState::dead(); // not freely reduced
            }
            if run.gen == gen {
                // Extend the run.
                let mut run = run;
                if gen == Gen::X {
                    run.x_mod += 1;
                    if run.x_mod == self.x_mod {
                        run.x_mod = 0;
                        run.x_carry = true;
                    }
                    st.run = Some(run);
                } else if self.odd {
                    let g = st.open_group.unwrap();
                    st.open_group = Some(self.cap_sum(g + sign));
                }
                return st;
            }
            // Generator switch: close the old run.
            if run.gen == Gen::X {
                if !self.close_x_run(&mut st, run) {
                    return MState::dead();
                }
            }
        }
        // Start the new run.
        if gen == Gen::Y {
            match st.open_group {
                None => st.open_group = Some(sign),
                Some(g) => {
                    if g.signum() != sign {
                        return MState::dead(); // mixed-sign group
                    }
                    if self.odd {
                        st.open_group = Some(self.cap_sum(g + sign));
                    }
                }
            }
            st.run = Some(Run { gen, sign, x_mod: 0, x_carry: false });
        } else {
            st.run = Some(Run { gen, sign, x_mod: 1, x_carry: false });
        }
        st
    }

    /// Merge two same-generator boundary items around the wrap. Returns
    /// `Err(())` to reject, `Ok(None)` if the pair vanishes into a carry,
    /// `Ok(Some(item))` for a merged item.
    fn merge_pair(
        &self,
        a: Item,
        b: Item,
        carry_sign: &mut i64,
    ) -> Result<Option<Item>, ()> {
        match (a, b) {
            (Item::XSyl(r1), Item::XSyl(r2)) => {
                if r1.signum() != r2.signum() {
                    return Err(()); // cancelling or wasteful wrap
                }
                let s = r1 + r2;
                let sig = s.signum();
                if s.abs() < self.x_mod {
                    Ok(Some(Item::XSyl(s)))
                } else if s.abs() == self.x_mod {
                    if !self.merge_carry(carry_sign, sig) {
                        return Err(());
                    }
                    Ok(None)
                } else {
                    if !self.merge_carry(carry_sign, sig) {
                        return Err(());
                    }
                    Ok(Some(Item::XSyl(s - sig * self.x_mod)))
                }
            }
            (Item::YGroup(s1), Item::YGroup(s2)) => {
                if s1.signum() != s2.signum() {
                    return Err(());
                }
                if self.odd {
                    Ok(Some(Item::YGroup(self.cap_sum(s1 + s2))))
                } else {
                    Ok(Some(Item::YGroup(s1.signum())))
                }
            }
            _ => unreachable!("merge_pair on mixed generators"),
        }
    }

    fn accepts(&self, st: &MState) -> bool {
        if st.dead {
            return false;
        }
        let mut st = st.clone();
        // Close the open run.
        if let Some(run) = st.run.take() {
            if run.gen == Gen::X && !self.close_x_run(&mut st, run) {
                return false;
            }
        }
        // The (possibly still open) trailing group becomes the last item.
        if let Some(g) = st.open_group.take() {
            let item = Item::YGroup(g);
            self.commit(&mut st, item);
        }
        let mut carry = st.carry_sign;
        let mut agg = st.agg;
        let mut resolved: Vec<Item> = Vec::new();
        if !agg.nonempty {
            // Few items: resolve the full cyclic merge directly.
            let mut items: std::collections::VecDeque<Item> =
                st.lead.iter().chain(st.tail.iter()).copied().collect();
            while items.len() >= 2
                && items.front().unwrap().gen() == items.back().unwrap().gen()
            {
                let b = items.pop_back().unwrap();
                let f = items.pop_front().unwrap();
                match self.merge_pair(f, b, &mut carry) {
                    Err(()) => return false,
                    Ok(Some(item)) => {
                        items.push_front(item);
                        break; // merged item alternates with the new back
                    }
                    Ok(None) => {}
                }
            }
            resolved.extend(items);
        } else {
            // Interior items exist: lead and tail are full (2 + 2) and the
            // cascade depth is at most two.
            debug_assert_eq!(st.lead.len(), 2);
            debug_assert_eq!(st.tail.len(), 2);
            let mut front = st.lead.clone();
            let mut back = st.tail.clone();
            if front[0].gen() == back[1].gen() {
                let b = back.pop().unwrap();
                let f = front.remove(0);
                match self.merge_pair(f, b, &mut carry) {
                    Err(()) => return false,
                    Ok(Some(item)) => resolved.push(item),
                    Ok(None) => {
                        // The new boundary pair is cyclically adjacent.
                        let b2 = back.pop().unwrap();
                        let f2 = front.remove(0);
                        debug_assert_eq!(f2.gen(), b2.gen());
                        match self.merge_pair(f2, b2, &mut carry) {
                            Err(()) => return false,
                            Ok(Some(item)) => resolved.push(item),
                            Ok(None) => {}
                        }
                    }
                }
            }
            resolved.extend(front);
            resolved.extend(back);
        }
        for item in resolved {
            agg.add(item, self.odd);
        }
        // Spelling deltas: A = min over unchosen, D = max over chosen.
        let (a, d) = if self.odd {
            let m = self.params.m;
            let mut a = i64::MAX;
            let mut d = i64::MIN;
            if agg.has_x_pos {
                a = a.min(0);
            }
            if agg.max_y_pos > 0 {
                a = a.min(m - 2 * agg.max_y_pos);
            }
            if agg.has_x_neg {
                d = d.max(0);
            }
            if agg.max_y_neg > 0 {
                d = d.max(2 * agg.max_y_neg - m);
            }
            (a, d)
        } else {
            let p = self.x_mod;
            let a = if agg.max_x_pos > 0 { p - 2 * agg.max_x_pos } else { i64::MAX };
            let d = if agg.max_x_neg > 0 { 2 * agg.max_x_neg - p } else { i64::MIN };
            (a, d)
        };
        if d != i64::MIN && a != i64::MAX && d > a {
            return false;
        }
        if a != i64::MAX && a + (if carry >= 0 { 2 } else { -2 }) < 0 {
            return false;
        }
        if d != i64::MIN && d + (if carry > 0 { 2 } else { -2 }) > 0 {
            return false;
        }
        true
    }
}

fn letter_index(l: Letter) -> usize {
    Letter::ALL.iter().position(|&x| x == l).unwrap()
}

/// Build the automaton of conjugacy geodesics: lazy exploration of the
/// summary states, then Moore minimization.
pub fn build_conjgeo_dfa(params: GroupParams) -> Dfa {
    let machine = Machine::new(params);
    let mut ids: HashMap<MState, usize> = HashMap::new();
    let mut states: Vec<MState> = Vec::new();
    let mut transitions: Vec<[usize; 4]> = Vec::new();
    let start_state = MState::initial();
    ids.insert(start_state.clone(), 0);
    states.push(start_state);
    let mut queue = 0usize;
    while queue < states.len() {
        let st = states[queue].clone();
        let mut row = [0usize; 4];
        for (i, &l) in Letter::ALL.iter().enumerate() {
            let next = machine.transition(&st, l);
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                states.push(next);
                states.len() - 1
            });
            row[i] = id;
        }
        transitions.push(row);
        queue += 1;
    }
    let accepting: Vec<bool> = states.iter().map(|s| machine.accepts(s)).collect();
    minimize(&Dfa { start: 0, accepting, transitions })
}

/// Moore minimization (partition refinement), preserving completeness.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let n = dfa.accepting.len();
    let mut class: Vec<usize> = dfa.accepting.iter().map(|&a| a as usize).collect();
    loop {
        let mut sig: HashMap<(usize, [usize; 4]), usize> = HashMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for i in 0..n {
            let key = (
                class[i],
                [
                    class[dfa.transitions[i][0]],
                    class[dfa.transitions[i][1]],
                    class[dfa.transitions[i][2]],
                    class[dfa.transitions[i][3]],
                ],
            );
            let fresh = sig.len();
            next.push(*sig.entry(key).or_insert(fresh));
        }
        if next == class {
            break;
        }
        class = next;
    }
    let count = class.iter().max().map_or(0, |&c| c + 1);
    let mut accepting = vec![false; count];
    let mut transitions = vec![[usize::MAX; 4]; count];
    for i in 0..n {
        accepting[class[i]] = dfa.accepting[i];
        for j in 0..4 {
            transitions[class[i]][j] = class[dfa.transitions[i][j]];
        }
    }
    Dfa { start: class[dfa.start], accepting, transitions }
}

pub fn dfa_accepts(dfa: &Dfa, w: &Word) -> bool {
    let mut s = dfa.start;
    for &l in w.letters() {
        s = dfa.transitions[s][letter_index(l)];
    }
    dfa.accepting[s]
}

/// Number of accepted words of length exactly `n` (transfer counting).
pub fn dfa_count(dfa: &Dfa, n: i64) -> u128 {
    let mut v = vec![0u128; dfa.accepting.len()];
    v[dfa.start] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; v.len()];
        for (s, &c) in v.iter().enumerate() {
            if c != 0 {
                for &t in &dfa.transitions[s] {
                    next[t] += c;
                }
            }
        }
        v = next;
    }
    v.iter()
        .zip(&dfa.accepting)
        .filter(|&(_, &acc)| acc)
        .map(|(&c, _)| c)
        .sum()
}

/// DOT rendering for visualization.
pub fn dfa_to_dot(dfa: &Dfa) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph conjgeo {{");
    let _ = writeln!(s, "  rankdir=LR;");
    let _ = writeln!(s, "  node [shape=circle];");
    let _ = writeln!(s, "  start [shape=point];");
    let _ = writeln!(s, "  start -> s{};", dfa.start);
    for (i, &acc) in dfa.accepting.iter().enumerate() {
        if acc {
            let _ = writeln!(s, "  s{i} [shape=doublecircle];");
        }
    }
    for (i, row) in dfa.transitions.iter().enumerate() {
        for (j, &t) in row.iter().enumerate() {
            let label = Word(vec![Letter::ALL[j]]);
            let _ = writeln!(s, "  s{i} -> s{t} [label=\"{label}\"];");
        }
    }
    let _ = writeln!(s, "}}");
    s
}

// ---------------------------------------------------------------------------
// Fellow traveling.
// ---------------------------------------------------------------------------

/// Maximum over offsets `i` of the distance between the two prefix
/// elements, padding the shorter word at its full length.
pub fn fellow_travel_distance(u: &Word, v: &Word, params: GroupParams) -> i64 {
    let n = u.len().max(v.len());
    let mut max = 0;
    for i in 0..=n {
        let pu = Word(u.0[..i.min(u.len())].to_vec());
        let pv = Word(v.0[..i.min(v.len())].to_vec());
        let eu = to_canonical(&pu, params);
        let ev = to_canonical(&pv, params);
        max = max.max(element_distance(&eu, &ev, params));
    }
    max
}

/// All words of length exactly `len` equal to `e` (freely reduced search
/// with distance pruning).
fn words_of_length(e: &CanonicalElement, len: i64, params: GroupParams) -> Vec<Word> {
    let mut out = Vec::new();
    let mut prefix: Vec<Letter> = Vec::new();
    fn dfs(
        rem: &CanonicalElement,
        budget: i64,
        params: GroupParams,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        let d = geodesic_length(rem, params);
        if d > budget {
            return;
        }
        if budget == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for l in Letter::ALL {
            if prefix.last().is_some_and(|&last| last == l.inverse()) {
                continue;
            }
            let rem2 = crate::canonical::letter_times(l.inverse(), rem, params);
            prefix.push(l);
            dfs(&rem2, budget - 1, params, prefix, out);
            prefix.pop();
        }
    }
    dfs(e, len, params, &mut prefix, &mut out);
    out
}

/// FFTP certification: every non-geodesic word of length at most `max_len`
/// must fellow-travel within the proof's constant with some shorter equal
/// word; reports the max over words of the minimal such distance.
pub fn fftp_check(params: GroupParams, max_len: i64, cap: i64) -> Result<FftpReport, LangError> {
    if max_len > cap {
        return Err(LangError::CapExceeded(format!("max_len {max_len} > cap {cap}")));
    }
    let bound = match params.parity() {
        Parity::Odd { k } => 2 * k + 9,
        Parity::Even { p } => 4 * p,
    };
    let mut observed = 0i64;
    let mut words_checked = 0u64;
    let mut all_have_shorter = true;
    // Enumerate freely reduced words by DFS.
    let mut stack: Vec<Word> = vec![Word::empty()];
    while let Some(w) = stack.pop() {
        if (w.len() as i64) < max_len {
            for l in Letter::ALL {
                if w.0.last().is_some_and(|&last| last == l.inverse()) {
                    continue;
                }
                let mut w2 = w.clone();
                w2.0.push(l);
                stack.push(w2);
            }
        }
        if w.is_empty() {
            continue;
        }
        let e = to_canonical(&w, params);
        let glen = geodesic_length(&e, params);
        if glen >= w.len() as i64 {
            continue; // geodesic
        }
        words_checked += 1;
        // Minimal fellow-traveler distance over all shorter equal words.
        let mut best: Option<i64> = None;
        'lens: for len in (glen..w.len() as i64).rev() {
            for v in words_of_length(&e, len, params) {
                let d = fellow_travel_distance(&w, &v, params);
                if best.map_or(true, |b| d < b) {
                    best = Some(d);
                }
                if best == Some(1) {
                    break 'lens;
                }
            }
        }
        match best {
            Some(d) => observed = observed.max(d),
            None => all_have_shorter = false,
        }
    }
    Ok(FftpReport {
        m: params.m,
        max_len,
        observed_constant: observed,
        bound,
        words_checked,
        all_have_shorter,
    })
}

/// Oracle predicate: conjugacy geodesic by direct computation.
pub fn is_conjugacy_geodesic(w: &Word, params: GroupParams) -> bool {
    is_geodesic(w, params)
        && w.len() as i64 == crate::conjugacy::conjugacy_length(w, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn g(m: i64) -> GroupParams {
        GroupParams::new(m).unwrap()
    }

    fn w(m: i64, s: &str) -> Word {
        parse_word(s, Some(g(m))).unwrap()
    }

    #[test]
    fn dfa_examples_m3() {
        let dfa = build_conjgeo_dfa(g(3));
        assert!(dfa_accepts(&dfa, &Word::empty()));
        assert!(dfa_accepts(&dfa, &w(3, "xx")));
        assert!(dfa_accepts(&dfa, &w(3, "xyxyxY")));
        assert!(!dfa_accepts(&dfa, &w(3, "yxY")));
        assert!(!dfa_accepts(&dfa, &w(3, "xxxY")));
    }

    #[test]
    fn dfa_matches_oracle_short() {
        for m in [3, 4] {
            let params = g(m);
            let dfa = build_conjgeo_dfa(params);
            // All freely reduced words up to length 5.
            let mut stack = vec![Word::empty()];
            while let Some(word) = stack.pop() {
                assert_eq!(
                    dfa_accepts(&dfa, &word),
                    is_conjugacy_geodesic(&word, params),
                    "m={m} w={word}"
                );
                if word.len() < 5 {
                    for l in Letter::ALL {
                        if word.0.last().is_some_and(|&last| last == l.inverse()) {
                            continue;
                        }
                        let mut w2 = word.clone();
                        w2.0.push(l);
                        stack.push(w2);
                    }
                }
            }
        }
    }

    #[test]
    fn minimize_idempotent() {
        let dfa = build_conjgeo_dfa(g(3));
        let again = minimize(&dfa);
        assert_eq!(dfa.accepting.len(), again.accepting.len());
    }

    #[test]
    fn counting() {
        // Universal DFA over 4 letters counts 4^n.
        let all = Dfa { start: 0, accepting: vec![true], transitions: vec![[0; 4]] };
        assert_eq!(dfa_count(&all, 5), 1024);
        let none = Dfa { start: 0, accepting: vec![false], transitions: vec![[0; 4]] };
        assert_eq!(dfa_count(&none, 3), 0);
    }

    #[test]
    fn fellow_travel() {
        let params = g(5);
        let u = w(5, "y^4");
        let v = w(5, "xxY");
        assert!(fellow_travel_distance(&u, &v, params) <= 6);
        assert_eq!(fellow_travel_distance(&u, &u, params), 0);
        let ux = w(5, "y^4x");
        assert_eq!(fellow_travel_distance(&u, &ux, params), 1);
    }

    #[test]
    fn fftp_tiny() {
        let report = fftp_check(g(3), 4, 8).unwrap();
        assert!(report.all_have_shorter);
        assert!(report.observed_constant <= report.bound);
        assert!(fftp_check(g(3), 9, 8).is_err());
    }
}
