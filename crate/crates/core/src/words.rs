//! Trace words: balanced pair words and Specht words, with canonical forms
//! and budgeted enumeration.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Hard cap on the number of words an enumeration may produce.
pub const DEFAULT_WORD_BUDGET: usize = 1_000_000;

/// Ordering shared by both word families: shorter words first, then
/// lexicographic. Enumeration emits words in exactly this order.
fn canonical_cmp<L: Ord>(a: &[L], b: &[L]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn min_rotation<L: Ord + Copy>(letters: &[L]) -> Vec<L> {
    let n = letters.len();
    let mut best: Option<Vec<L>> = None;
    for r in 0..n {
        let rot: Vec<L> = (0..n).map(|k| letters[(r + k) % n]).collect();
        if best.as_ref().map_or(true, |b| rot < *b) {
            best = Some(rot);
        }
    }
    best.expect("nonempty word")
}

/// Rendered word plus its trace-ordering key.
pub trait Word: Clone + Eq + Ord + std::fmt::Debug {
    /// Pinned textual rendering used in reports.
    fn render(&self) -> String;
    /// Number of matrix factors in the trace product.
    fn factor_count(&self) -> usize;
}

/// Balanced product of `A_i A_j†` factors inside a trace, canonical under
/// cyclic rotation. Component indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairWord {
    pairs: Vec<(u32, u32)>,
}

impl PairWord {
    /// Canonicalizes the given pair sequence (indices are 1-based).
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::ShapeMismatch("pair word must be nonempty".into()));
        }
        if pairs.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        Ok(Self { pairs: min_rotation(&pairs) })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn is_balanced(&self) -> bool {
        let kmax = self.pairs.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0) as usize;
        let mut count = vec![0i64; kmax + 1];
        for &(i, j) in &self.pairs {
            count[i as usize] += 1;
            count[j as usize] -= 1;
        }
        count.iter().all(|&c| c == 0)
    }

    /// The word whose trace value is the complex conjugate of this word's:
    /// reverse the factors and swap the slots within each pair.
    pub fn conjugate_reverse(&self) -> Self {
        let flipped: Vec<(u32, u32)> =
            self.pairs.iter().rev().map(|&(i, j)| (j, i)).collect();
        Self { pairs: min_rotation(&flipped) }
    }
}

impl Ord for PairWord {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.pairs, &other.pairs)
    }
}

impl PartialOrd for PairWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word for PairWord {
    fn render(&self) -> String {
        let mut s = String::from("P");
        for &(i, j) in &self.pairs {
            s.push_str(&format!("({i},{j})"));
        }
        s
    }

    fn factor_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Word in matrices and adjoints inside a trace: letter `(i, false)` stands
/// for `A_i`, `(i, true)` for `A_i†`. Canonical under cyclic rotation,
/// balanced per component index. Indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpechtWord {
    letters: Vec<(u32, bool)>,
}

impl SpechtWord {
    pub fn new(letters: Vec<(u32, bool)>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::ShapeMismatch("word must be nonempty".into()));
        }
        if letters.iter().any(|&(i, _)| i == 0) {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        Ok(Self { letters: min_rotation(&letters) })
    }

    pub fn letters(&self) -> &[(u32, bool)] {
        &self.letters
    }

    pub fn is_balanced(&self) -> bool {
        let kmax = self.letters.iter().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let mut count = vec![0i64; kmax + 1];
        for &(i, daggered) in &self.letters {
            count[i as usize] += if daggered { -1 } else { 1 };
        }
        count.iter().all(|&c| c == 0)
    }

    /// Reverse the letters and flip every dagger; trace value conjugates.
    pub fn conjugate_reverse(&self) -> Self {
        let flipped: Vec<(u32, bool)> =
            self.letters.iter().rev().map(|&(i, d)| (i, !d)).collect();
        Self { letters: min_rotation(&flipped) }
    }
}

impl Ord for SpechtWord {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.letters, &other.letters)
    }
}

impl PartialOrd for SpechtWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word for SpechtWord {
    fn render(&self) -> String {
        let mut s = String::from("S");
        for &(i, daggered) in &self.letters {
            s.push(' ');
            s.push(if daggered { 'y' } else { 'x' });
            s.push_str(&i.to_string());
        }
        s
    }

    fn factor_count(&self) -> usize {
        self.letters.len()
    }
}

struct Budget {
    emitted: usize,
    visited: usize,
    cap: usize,
}

impl Budget {
    fn new(cap: usize) -> Self {
        Self { emitted: 0, visited: 0, cap }
    }

    fn visit(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap.saturating_mul(32) {
            return Err(Error::BudgetExceeded { cap: self.cap });
        }
        Ok(())
    }

    fn emit(&mut self) -> Result<()> {
        self.emitted += 1;
        if self.emitted > self.cap {
            return Err(Error::BudgetExceeded { cap: self.cap });
        }
        Ok(())
    }
}

/// All balanced canonical pair words over `{1..k}` with at most `max_pairs`
/// factors, deduplicated under cyclic rotation and under the
/// conjugate-reverse relation (the lexicographically smaller representative
/// is kept). Deterministic order: by length, then lexicographic.
pub fn enumerate_pair_words(k: usize, max_pairs: usize) -> Result<Vec<PairWord>> {
    enumerate_pair_words_capped(k, max_pairs, DEFAULT_WORD_BUDGET)
}

pub fn enumerate_pair_words_capped(
    k: usize,
    max_pairs: usize,
    cap: usize,
) -> Result<Vec<PairWord>> {
    if k == 0 || max_pairs == 0 {
        return Err(Error::ParameterOutOfRange("k and max_pairs must be ≥ 1".into()));
    }
    let mut out = Vec::new();
    let mut budget = Budget::new(cap);
    let mut counts = vec![0i64; k + 1];
    for m in 1..=max_pairs {
        let mut prefix: Vec<(u32, u32)> = Vec::with_capacity(m);
        pair_dfs(k, m, &mut prefix, &mut counts, 0, &mut out, &mut budget)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn pair_dfs(
    k: usize,
    m: usize,
    prefix: &mut Vec<(u32, u32)>,
    counts: &mut [i64],
    imbalance: i64,
    out: &mut Vec<PairWord>,
    budget: &mut Budget,
) -> Result<()> {
    budget.visit()?;
    if prefix.len() == m {
        if imbalance == 0 {
            let canon = min_rotation(prefix);
            if canon == *prefix {
                let word = PairWord { pairs: canon };
                let cr = word.conjugate_reverse();
                if word <= cr {
                    budget.emit()?;
                    out.push(word);
                }
            }
        }
        return Ok(());
    }
    let remaining = (m - prefix.len()) as i64;
    for i in 1..=k as u32 {
        for j in 1..=k as u32 {
            let di = if counts[i as usize] >= 0 { 1 } else { -1 };
            let dj = if counts[j as usize] > 0 { -1 } else { 1 };
            let mut delta = 0;
            if i == j {
                // i-slot and j-slot cancel within the pair
            } else {
                delta += di;
                delta += dj;
            }
            let new_imbalance = imbalance + delta;
            // each later pair can reduce the total imbalance by at most 2
            if new_imbalance > 2 * (remaining - 1) {
                continue;
            }
            counts[i as usize] += 1;
            counts[j as usize] -= 1;
            prefix.push((i, j));
            pair_dfs(k, m, prefix, counts, new_imbalance, out, budget)?;
            prefix.pop();
            counts[i as usize] -= 1;
            counts[j as usize] += 1;
        }
    }
    Ok(())
}

/// All balanced canonical Specht words over `{1..k}` of length at most
/// `max_len`, deduplicated like the pair words.
pub fn enumerate_specht_words(k: usize, max_len: usize) -> Result<Vec<SpechtWord>> {
    enumerate_specht_words_capped(k, max_len, DEFAULT_WORD_BUDGET)
}

pub fn enumerate_specht_words_capped(
    k: usize,
    max_len: usize,
    cap: usize,
) -> Result<Vec<SpechtWord>> {
    if k == 0 || max_len == 0 {
        return Err(Error::ParameterOutOfRange("k and max_len must be ≥ 1".into()));
    }
    let mut out = Vec::new();
    let mut budget = Budget::new(cap);
    let mut counts = vec![0i64; k + 1];
    for len in 1..=max_len {
        let mut prefix: Vec<(u32, bool)> = Vec::with_capacity(len);
        specht_dfs(k, len, &mut prefix, &mut counts, 0, &mut out, &mut budget)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn specht_dfs(
    k: usize,
    len: usize,
    prefix: &mut Vec<(u32, bool)>,
    counts: &mut [i64],
    imbalance: i64,
    out: &mut Vec<SpechtWord>,
    budget: &mut Budget,
) -> Result<()> {
    budget.visit()?;
    if prefix.len() == len {
        if imbalance == 0 {
            let canon = min_rotation(prefix);
            if canon == *prefix {
                let word = SpechtWord { letters: canon };
                let cr = word.conjugate_reverse();
                if word <= cr {
                    budget.emit()?;
                    out.push(word);
                }
            }
        }
        return Ok(());
    }
    let remaining = (len - prefix.len()) as i64;
    for i in 1..=k as u32 {
        for daggered in [false, true] {
            let step = if daggered { -1 } else { 1 };
            let c = counts[i as usize];
            let delta = (c + step).abs() - c.abs();
            let new_imbalance = imbalance + delta;
            // each later letter can reduce the total imbalance by at most 1
            if new_imbalance > remaining - 1 {
                continue;
            }
            counts[i as usize] += step;
            prefix.push((i, daggered));
            specht_dfs(k, len, prefix, counts, new_imbalance, out, budget)?;
            prefix.pop();
            counts[i as usize] -= step;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(pairs: &[(u32, u32)]) -> PairWord {
        PairWord::new(pairs.to_vec()).unwrap()
    }

    #[test]
    fn single_index_pair_words() {
        let words = enumerate_pair_words(1, 2).unwrap();
        assert_eq!(words, vec![pw(&[(1, 1)]), pw(&[(1, 1), (1, 1)])]);
    }

    #[test]
    fn unbalanced_single_pairs_excluded() {
        // of the 4 pairs at m=1 over K=2, only (1,1) and (2,2) are balanced
        let words = enumerate_pair_words(2, 1).unwrap();
        assert_eq!(words, vec![pw(&[(1, 1)]), pw(&[(2, 2)])]);
    }

    #[test]
    fn cyclic_rotations_deduplicated() {
        let words = enumerate_pair_words(2, 2).unwrap();
        let target = pw(&[(1, 2), (2, 1)]);
        assert!(words.contains(&target));
        // the rotated spelling canonicalizes to the same word
        assert_eq!(PairWord::new(vec![(2, 1), (1, 2)]).unwrap(), target);
        assert_eq!(words.iter().filter(|w| **w == target).count(), 1);
    }

    #[test]
    fn pair_word_conjugate_reverse() {
        let w = pw(&[(1, 2), (2, 1)]);
        assert_eq!(w.conjugate_reverse(), w); // self-conjugate
        let v = pw(&[(1, 1), (1, 2), (2, 1)]);
        let cr = v.conjugate_reverse();
        assert!(cr.is_balanced());
        assert_eq!(cr.conjugate_reverse(), v);
    }

    #[test]
    fn pair_rendering_pinned() {
        assert_eq!(pw(&[(1, 2), (2, 1)]).render(), "P(1,2)(2,1)");
        assert_eq!(pw(&[(1, 1)]).render(), "P(1,1)");
    }

    #[test]
    fn specht_enumeration_k1() {
        let words = enumerate_specht_words(1, 2).unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].letters(), &[(1, false), (1, true)]);
        assert_eq!(words[0].render(), "S x1 y1");
    }

    #[test]
    fn specht_words_balanced_and_canonical() {
        let words = enumerate_specht_words(2, 4).unwrap();
        for w in &words {
            assert!(w.is_balanced(), "{w:?}");
            assert_eq!(SpechtWord::new(w.letters().to_vec()).unwrap(), *w);
            assert!(*w <= w.conjugate_reverse());
        }
        // x1 y1 x2 y2 must appear
        let target = SpechtWord::new(vec![(1, false), (1, true), (2, false), (2, true)]).unwrap();
        assert!(words.contains(&target));
    }

    #[test]
    fn enumeration_order_is_length_then_lex() {
        let words = enumerate_pair_words(2, 3).unwrap();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn budget_exceeded_reported() {
        let err = enumerate_pair_words_capped(3, 6, 50).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { cap: 50 }));
    }
}
