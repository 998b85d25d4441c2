use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{ClassicalInvariants, Sign, ValidationReport};

/// A braid word on `strands` strands. Letter `i > 0` is the generator `σ_i`,
/// `-i` its inverse; valid letters satisfy `1 <= |i| <= strands - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    /// Stores the word as given; use [`BraidWord::validate`] to check it.
    pub fn new(strands: usize, word: Vec<i32>) -> Self {
        BraidWord { strands, word }
    }

    /// The trivial braid on one strand, whose closure is the unknot.
    pub fn unknot() -> Self {
        BraidWord::new(1, Vec::new())
    }

    /// `σ_1^k` on two strands.
    pub fn torus_knot_2(k: i32) -> Self {
        BraidWord::new(2, vec![k.signum(); k.unsigned_abs() as usize])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|&l| i64::from(l.signum())).sum()
    }

    fn letter_problems(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.strands == 0 {
            problems.push("a braid needs at least one strand".to_string());
        }
        for (k, &l) in self.word.iter().enumerate() {
            let i = l.unsigned_abs() as usize;
            if i == 0 || i >= self.strands.max(1) {
                problems.push(format!(
                    "letter {k} is {l}; generator indices must lie in [1, {}]",
                    self.strands.saturating_sub(1)
                ));
            }
        }
        problems
    }

    /// Permutation of the closure: `perm[p]` is the bottom position reached by
    /// the strand starting at top position `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.word {
            let i = l.unsigned_abs() as usize;
            if i >= 1 && i < self.strands {
                at.swap(i - 1, i);
            }
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Cycles of [`Self::permutation`], 1-based, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = perm[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn validate(&self) -> ValidationReport {
        let problems = self.letter_problems();
        if !problems.is_empty() {
            return ValidationReport { valid: false, problems, components: None, cycles: Vec::new() };
        }
        let cycles = self.cycles();
        ValidationReport { valid: true, problems, components: Some(cycles.len()), cycles }
    }

    /// Fails unless the word is valid and its closure is a knot.
    pub fn require_knot(&self) -> Result<()> {
        let report = self.validate();
        if !report.valid {
            return Err(Error::InvalidBraid(report.problems.join("; ")));
        }
        match report.components {
            Some(1) => Ok(()),
            Some(c) => Err(Error::MultiComponent(c)),
            None => unreachable!("valid reports carry a component count"),
        }
    }

    /// Self-linking number `exponent sum - strands` of the transverse closure.
    pub fn self_linking(&self) -> Result<i64> {
        self.require_knot()?;
        Ok(self.exponent_sum() - self.strands as i64)
    }

    /// Markov stabilization: add a strand and append `σ_n^{±1}`.
    /// A negative move lowers `sl` by two, a positive one preserves it.
    pub fn markov_stabilize(&self, sign: Sign) -> BraidWord {
        let n = self.strands.max(1);
        let mut word = self.word.clone();
        word.push(sign.as_i64() as i32 * n as i32);
        BraidWord { strands: n + 1, word }
    }

    pub fn invariants(&self) -> Result<ClassicalInvariants> {
        let sl = self.self_linking()?;
        Ok(ClassicalInvariants { tb: None, rot: None, sl: Some(sl), components: 1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        let r = BraidWord::unknot().validate();
        assert!(r.valid);
        assert_eq!(r.components, Some(1));

        let r = BraidWord::new(2, vec![1, 1, 1]).validate();
        assert!(r.valid);
        assert_eq!(r.components, Some(1));
        assert_eq!(r.cycles, vec![vec![1, 2]]);

        let r = BraidWord::new(2, vec![1, 1]).validate();
        assert!(r.valid);
        assert_eq!(r.components, Some(2));
    }

    #[test]
    fn invalid_letters_are_reported() {
        let r = BraidWord::new(2, vec![1, 2, 0, -3]).validate();
        assert!(!r.valid);
        assert_eq!(r.problems.len(), 3);
        assert_eq!(r.components, None);
        assert!(!BraidWord::new(0, vec![]).validate().valid);
        assert!(matches!(BraidWord::new(2, vec![2]).self_linking(), Err(Error::InvalidBraid(_))));
    }

    #[test]
    fn self_linking_examples() {
        assert_eq!(BraidWord::unknot().self_linking().unwrap(), -1);
        assert_eq!(BraidWord::new(2, vec![1, 1, 1]).self_linking().unwrap(), 1);
        assert_eq!(BraidWord::new(2, vec![1]).self_linking().unwrap(), -1);
        assert_eq!(BraidWord::new(2, vec![1, 1]).self_linking(), Err(Error::MultiComponent(2)));
    }

    #[test]
    fn markov_examples() {
        let u = BraidWord::unknot();
        let neg = u.markov_stabilize(Sign::Negative);
        assert_eq!(neg, BraidWord::new(2, vec![-1]));
        assert_eq!(neg.self_linking().unwrap(), -3);

        let pos = u.markov_stabilize(Sign::Positive);
        assert_eq!(pos, BraidWord::new(2, vec![1]));
        assert_eq!(pos.self_linking().unwrap(), -1);

        let twice = neg.markov_stabilize(Sign::Negative);
        assert_eq!(twice, BraidWord::new(3, vec![-1, -2]));
        assert_eq!(twice.self_linking().unwrap(), -5);
    }

    #[test]
    fn torus_knot_helper() {
        assert_eq!(BraidWord::torus_knot_2(3), BraidWord::new(2, vec![1, 1, 1]));
        assert_eq!(BraidWord::torus_knot_2(-5).exponent_sum(), -5);
    }
}
