use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::susy::SiteClass;

use SiteClass::{Boson as B, Fermion as F};

/// Class-level words a product zero mode may not contain: forbidden
/// length-3 windows anywhere, plus forbidden prefixes at site 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenPatternSet {
    windows: Vec<[SiteClass; 3]>,
    prefixes: Vec<Vec<SiteClass>>,
}

impl ForbiddenPatternSet {
    pub fn new(windows: Vec<[SiteClass; 3]>) -> Self {
        ForbiddenPatternSet {
            windows,
            prefixes: Vec::new(),
        }
    }

    pub fn with_prefixes(mut self, prefixes: Vec<Vec<SiteClass>>) -> Self {
        self.prefixes = prefixes;
        self
    }

    pub fn without_prefixes(&self) -> Self {
        Self::new(self.windows.clone())
    }

    /// Excludes `bbb` and `fff`.
    pub fn uniform_triples() -> Self {
        Self::new(vec![[B, B, B], [F, F, F]])
    }

    /// Excludes `bbb`, `fff`, `bfb`, `fbf`, and words whose first two sites
    /// differ in class, leaving the `bbff…`/`ffbb…` phases.
    pub fn pair_aligned() -> Self {
        Self::new(vec![[B, B, B], [F, F, F], [B, F, B], [F, B, F]])
            .with_prefixes(vec![vec![B, F], vec![F, B]])
    }

    pub fn windows(&self) -> &[[SiteClass; 3]] {
        &self.windows
    }

    pub fn prefixes(&self) -> &[Vec<SiteClass>] {
        &self.prefixes
    }

    /// First forbidden pattern found in `word`, rendered.
    pub fn violation(&self, word: &[SiteClass]) -> Option<String> {
        let render = |w: &[SiteClass]| w.iter().map(|c| c.symbol()).collect::<String>();
        if let Some(p) = self.prefixes.iter().find(|p| word.starts_with(p)) {
            return Some(format!("prefix {}", render(p)));
        }
        word.windows(3)
            .enumerate()
            .find(|(_, w)| self.windows.iter().any(|p| p[..] == **w))
            .map(|(j, w)| format!("{} at site {j}", render(w)))
    }

    pub fn admits(&self, word: &[SiteClass]) -> bool {
        self.violation(word).is_none()
    }

    /// Whether `word + next` is admitted, given that `word` is.
    pub fn admits_append(&self, word: &[SiteClass], next: SiteClass) -> bool {
        let len = word.len() + 1;
        let matches_prefix = self
            .prefixes
            .iter()
            .any(|p| p.len() == len && p[..len - 1] == *word && p[len - 1] == next);
        if matches_prefix {
            return false;
        }
        len < 3 || self.window_allowed(word[len - 3], word[len - 2], next)
    }

    fn window_allowed(&self, a: SiteClass, b: SiteClass, c: SiteClass) -> bool {
        !self.windows.contains(&[a, b, c])
    }

    /// Number of admitted words of length `n` over local states whose
    /// classes are `alphabet` (one entry per local state).
    pub fn count_words(&self, n: usize, alphabet: &[SiteClass]) -> BigUint {
        let mut multiplicity: BTreeMap<SiteClass, BigUint> = BTreeMap::new();
        for &c in alphabet {
            *multiplicity.entry(c).or_insert_with(BigUint::zero) += 1u32;
        }
        let classes: Vec<SiteClass> = multiplicity.keys().copied().collect();
        let head = self
            .prefixes
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .max(2)
            .min(n);

        // Exhaustive over the first `head` classes, then a two-class automaton.
        let mut states: BTreeMap<Vec<SiteClass>, BigUint> = BTreeMap::new();
        let mut stack: Vec<(Vec<SiteClass>, BigUint)> = vec![(Vec::new(), BigUint::one())];
        while let Some((word, weight)) = stack.pop() {
            if word.len() == head {
                let tail = word[word.len().saturating_sub(2)..].to_vec();
                *states.entry(tail).or_insert_with(BigUint::zero) += weight;
                continue;
            }
            for &c in &classes {
                if self.admits_append(&word, c) {
                    let mut next = word.clone();
                    next.push(c);
                    stack.push((next, &weight * &multiplicity[&c]));
                }
            }
        }
        for _ in head..n {
            let mut next_states: BTreeMap<Vec<SiteClass>, BigUint> = BTreeMap::new();
            for (tail, weight) in &states {
                for &c in &classes {
                    if self.window_allowed(tail[0], tail[1], c) {
                        let key = vec![tail[tail.len() - 1], c];
                        *next_states.entry(key).or_insert_with(BigUint::zero) +=
                            weight * &multiplicity[&c];
                    }
                }
            }
            states = next_states;
        }
        states.into_values().fold(BigUint::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting;
    use SiteClass::Zero as Z;

    #[test]
    fn qubit_counts_follow_fibonacci() {
        let rule = ForbiddenPatternSet::uniform_triples();
        for n in 0..=30 {
            assert_eq!(rule.count_words(n, &[B, F]), counting::qubit_product(n));
        }
    }

    #[test]
    fn pair_aligned_counts() {
        let rule = ForbiddenPatternSet::pair_aligned();
        for n in 1..=20 {
            assert_eq!(
                rule.count_words(n, &[B, B, F, F]),
                counting::ising_product(2, n)
            );
        }
        let all_phases = rule.without_prefixes();
        for n in 2..=20 {
            assert_eq!(
                all_phases.count_words(n, &[B, B, F, F]),
                BigUint::from(2u32).pow(n as u32 + 2)
            );
        }
    }

    #[test]
    fn admits_matches_append() {
        let rule = ForbiddenPatternSet::pair_aligned();
        assert!(rule.admits(&[B, B, F, F, B]));
        assert!(!rule.admits(&[B, F, F, B]));
        assert!(!rule.admits(&[B, B, F, B]));
        assert_eq!(rule.violation(&[F, F, F]).unwrap(), "fff at site 0");
    }

    #[test]
    fn zero_class_breaks_windows() {
        let rule = ForbiddenPatternSet::uniform_triples();
        assert!(rule.admits(&[B, B, Z, B, B]));
        // b, f, z: lengths 1 and 2 are unconstrained.
        assert_eq!(rule.count_words(1, &[B, F, Z]), BigUint::from(3u32));
        assert_eq!(rule.count_words(2, &[B, F, Z]), BigUint::from(9u32));
        assert_eq!(rule.count_words(3, &[B, F, Z]), BigUint::from(25u32));
    }
}
