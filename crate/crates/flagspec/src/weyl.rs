//! Weyl group actions on weights and the Borel–Weil–Bott classification.
//!
//! All operations act on [`Weight`]s in fundamental-weight coordinates. The
//! simple reflection is `s_i(λ) = λ − ⟨λ, α_i∨⟩·α_i`, and since the i-th
//! coordinate of λ *is* `⟨λ, α_i∨⟩`, it reads `λ_j − λ_i·A[j][i]`: column i
//! of the Cartan matrix scaled by the i-th coordinate.
//!
//! The shifted (dot) action `w ⋆ λ = w(λ + δ⁺) − δ⁺` is what Borel–Weil–Bott
//! classifies: a singular shifted weight kills all cohomology, a regular one
//! concentrates it in a single degree, the length of the Weyl element that
//! moves `λ + δ⁺` to the dominant chamber.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};
use crate::{Int, Nat, Rat};
use std::fmt;

/// A word in the simple reflections, letters 1-based in Bourbaki order.
/// When applied, the rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// Result of moving a weight into the dominant chamber: the word that does
/// it, the dominant representative, and the word's length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominantDescent {
    pub word: WeylWord,
    pub result: Weight,
    pub length: usize,
}

/// What Borel–Weil–Bott says about the cohomology of the line bundle (or
/// twisted bundle) attached to a weight: either it vanishes identically, or
/// it is concentrated in one degree with an irreducible module of known
/// highest weight and dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CohomologyReport {
    Vanishes,
    Concentrated {
        degree: usize,
        word: WeylWord,
        dominant_weight: Weight,
        dimension: Nat,
    },
}

impl RootSystem {
    /// `s_i(λ) = λ − ⟨λ, α_i∨⟩·α_i`, with `i` 1-based.
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::BadReflectionLetter { letter: i, rank: n });
        }
        assert_eq!(lambda.rank(), n, "weight of wrong rank");
        let li = lambda.coords()[i - 1].clone();
        let coords = (0..n)
            .map(|j| &lambda.coords()[j] - &li * crate::rat(self.cartan()[j][i - 1]))
            .collect();
        Ok(Weight::new(coords))
    }

    /// Apply a Weyl word to λ, rightmost letter first.
    pub fn apply_word(&self, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
        let mut current = lambda.clone();
        for &letter in word.letters().iter().rev() {
            current = self.simple_reflection(letter, &current)?;
        }
        Ok(current)
    }

    /// The shifted action `w ⋆ λ = w(λ + δ⁺) − δ⁺`.
    pub fn shifted_action(&self, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
        let delta = self.weyl_vector();
        let moved = self.apply_word(word, &(lambda + &delta))?;
        Ok(&moved - &delta)
    }

    /// Whether λ + δ⁺ avoids every reflection wall: `⟨λ+δ⁺, β∨⟩ ≠ 0` for all
    /// positive roots β. Only defined for integral λ.
    pub fn is_dot_regular(&self, lambda: &Weight) -> Result<bool> {
        if !lambda.is_integral() {
            return Err(Error::NonIntegralWeight(lambda.to_string()));
        }
        let mu = lambda + &self.weyl_vector();
        Ok((0..self.positive_roots().len())
            .all(|idx| !self.coroot_pairing_by_index(&mu, idx).is_zero()))
    }

    /// Move μ into the dominant chamber by greedy descent: repeatedly apply
    /// the simple reflection at the smallest-index negative coordinate.
    ///
    /// Fails with a singular-input diagnostic if μ lies on a wall (the
    /// descent then terminates on a boundary weight with a zero coordinate).
    /// The recorded word satisfies `apply_word(word, μ) = result`, and its
    /// length equals the number of positive roots β with `⟨μ, β∨⟩ < 0`.
    pub fn to_dominant(&self, mu: &Weight) -> Result<DominantDescent> {
        let inversions = (0..self.positive_roots().len())
            .filter(|&idx| self.coroot_pairing_by_index(mu, idx).is_negative())
            .count();

        let mut current = mu.clone();
        let mut steps: Vec<usize> = Vec::new();
        loop {
            let neg = current
                .coords()
                .iter()
                .position(|c| c.is_negative())
                .map(|j| j + 1);
            match neg {
                Some(i) => {
                    current = self.simple_reflection(i, &current)?;
                    steps.push(i);
                }
                None => break,
            }
            assert!(
                steps.len() <= self.positive_roots().len(),
                "dominance descent failed to terminate"
            );
        }
        if !current.is_strictly_dominant() {
            return Err(Error::SingularInput);
        }

        steps.reverse();
        let length = steps.len();
        assert_eq!(
            length, inversions,
            "descent length disagrees with the inversion count"
        );
        Ok(DominantDescent {
            word: WeylWord::new(steps),
            result: current,
            length,
        })
    }

    /// Dimension of the irreducible module of highest weight λ, by the Weyl
    /// dimension formula `Π_β ⟨λ+δ⁺, β∨⟩ / Π_β ⟨δ⁺, β∨⟩` over positive roots.
    /// The quotient is asserted to reduce to an exact integer.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<Nat> {
        if !lambda.is_integral() {
            return Err(Error::NonIntegralWeight(lambda.to_string()));
        }
        if !lambda.is_dominant() {
            return Err(Error::NonDominantWeight(lambda.to_string()));
        }
        let delta = self.weyl_vector();
        let shifted = lambda + &delta;
        let mut num = Rat::one();
        let mut den = Rat::one();
        for idx in 0..self.positive_roots().len() {
            num *= self.coroot_pairing_by_index(&shifted, idx);
            den *= self.coroot_pairing_by_index(&delta, idx);
        }
        let dim = num / den;
        assert!(
            dim.is_integer() && dim.is_positive(),
            "Weyl dimension product did not reduce to a positive integer"
        );
        let int: Int = dim.to_integer();
        Ok(int.to_biguint().expect("positive by the assertion above"))
    }

    /// Borel–Weil–Bott: classify the cohomology of the weight-λ bundle.
    ///
    /// Singular shifted weight ⇒ all cohomology vanishes. Regular ⇒
    /// concentrated in degree ℓ(w), where w is the element carrying λ + δ⁺
    /// to the dominant chamber; the module is irreducible with highest
    /// weight `w ⋆ λ` and Weyl-formula dimension.
    pub fn bwb_classify(&self, lambda: &Weight) -> Result<CohomologyReport> {
        if !self.is_dot_regular(lambda)? {
            return Ok(CohomologyReport::Vanishes);
        }
        let delta = self.weyl_vector();
        let descent = self.to_dominant(&(lambda + &delta))?;
        let dominant_weight = &descent.result - &delta;
        let dimension = self.weyl_dimension(&dominant_weight)?;
        Ok(CohomologyReport::Concentrated {
            degree: descent.length,
            word: descent.word,
            dominant_weight,
            dimension,
        })
    }
}
