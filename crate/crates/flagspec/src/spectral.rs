//! Spectra and kernels of Spin^c Dirac operators on flag varieties.
//!
//! For a flag variety X of complex dimension m, an invariant Kähler class ω
//! and a line bundle L matching the parity of δ_P, the square of the
//! associated Spin^c Dirac operator has a completely explicit Weitzenböck
//! piece: its eigenvalue multiset is indexed by the 2^m sign vectors
//! ε ∈ {±1}^m over the radical roots,
//!
//! ```text
//! λ_ε = π^{1-k} · Σ_β ( ⟨δ_P, β∨⟩ + ε_β·⟨φ(L), β∨⟩ ) / ⟨ω, β∨⟩,
//! ```
//!
//! with k = 1 when ω is in π-units. The multiset is never materialized
//! vector by vector: a value-merging convolution folds one root at a time,
//! keeping a map from distinct eigenvalues to big-integer multiplicities.
//! Beyond a configurable cap on distinct values the computation degrades to
//! an exact summary (min, max, total count 2^m) with a truncation marker.
//!
//! The same convolution computes the commutator spectrum of an auxiliary
//! invariant form θ (purely imaginary eigenvalues `i·Σ_β ε_β·⟨θ,β∨⟩/⟨ω,β∨⟩`),
//! and Borel–Weil–Bott applied to the twist weight φ(E) = (φ(L) − δ_P)/2
//! decides whether harmonic spinors exist, in which degree they live, and
//! the index of the operator.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flag::{FlagVariety, KahlerClass, LineBundleClass};
use crate::pi::PiScalar;
use crate::root_system::Weight;
use crate::weyl::CohomologyReport;
use crate::{Int, Nat, Rat};

/// Default cap on distinct merged eigenvalues before a spectrum degrades to
/// its summary form.
pub const DEFAULT_MAX_DISTINCT: usize = 1 << 20;

/// A purely imaginary rational `i·q`, ordered by its coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ImaginaryRat(pub Rat);

impl ImaginaryRat {
    pub fn coefficient(&self) -> &Rat {
        &self.0
    }
}

impl fmt::Display for ImaginaryRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}i", self.0)
        }
    }
}

/// An exact eigenvalue multiset of total size 2^m: either the full list of
/// distinct values with big-integer multiplicities (sorted ascending), or,
/// past the distinct-value cap, a summary carrying the exact extremes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpectrumData<V> {
    Full(Vec<(V, Nat)>),
    Truncated { min: V, max: V },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spectrum<V> {
    data: SpectrumData<V>,
    total: Nat,
}

impl<V> Spectrum<V> {
    pub fn data(&self) -> &SpectrumData<V> {
        &self.data
    }

    /// Total multiplicity, always exactly 2^m.
    pub fn total(&self) -> &Nat {
        &self.total
    }

    /// The distinct entries, unless the spectrum was truncated to a summary.
    pub fn entries(&self) -> Option<&[(V, Nat)]> {
        match &self.data {
            SpectrumData::Full(entries) => Some(entries),
            SpectrumData::Truncated { .. } => None,
        }
    }

    pub fn is_truncated(&self) -> bool {
        matches!(self.data, SpectrumData::Truncated { .. })
    }

    /// Smallest eigenvalue; available in both forms.
    pub fn min(&self) -> &V {
        match &self.data {
            SpectrumData::Full(entries) => &entries.first().expect("non-empty spectrum").0,
            SpectrumData::Truncated { min, .. } => min,
        }
    }

    /// Largest eigenvalue; available in both forms.
    pub fn max(&self) -> &V {
        match &self.data {
            SpectrumData::Full(entries) => &entries.last().expect("non-empty spectrum").0,
            SpectrumData::Truncated { max, .. } => max,
        }
    }
}

/// Existence report for harmonic spinors of the Dirac operator twisted by a
/// parity-compatible line bundle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HarmonicReport {
    /// Echo of the parity check that admitted the line bundle.
    pub spinc_ok: bool,
    /// The twist weight φ(E) = (φ(L) − δ_P)/2, in painted coordinates.
    pub twist: LineBundleClass,
    pub outcome: HarmonicOutcome,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HarmonicOutcome {
    /// The twist weight is singular for the shifted action: no harmonic
    /// spinors in any degree, and the index is zero.
    NoHarmonicSpinors,
    /// Harmonic spinors concentrate in one degree; the index is
    /// `(-1)^degree · kernel_dimension`.
    Harmonic {
        kernel_dimension: Nat,
        concentration_degree: usize,
        index: Int,
    },
}

/// Fold the two-valued contribution of each root into a value→multiplicity
/// map. Returns the summary form if the map ever exceeds `cap` distinct
/// values; the extremes in that form are computed directly (each root's
/// minimum and maximum contribution are independent).
fn sign_convolution(pairs: &[(Rat, Rat)], cap: usize) -> SpectrumData<Rat> {
    let summary = || {
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (a, b) in pairs {
            if a <= b {
                lo += a;
                hi += b;
            } else {
                lo += b;
                hi += a;
            }
        }
        SpectrumData::Truncated { min: lo, max: hi }
    };

    let mut acc: BTreeMap<Rat, Nat> = BTreeMap::new();
    acc.insert(Rat::zero(), Nat::one());
    for (a, b) in pairs {
        let mut next: BTreeMap<Rat, Nat> = BTreeMap::new();
        for (value, mult) in &acc {
            *next.entry(value + a).or_insert_with(Nat::zero) += mult;
            *next.entry(value + b).or_insert_with(Nat::zero) += mult;
        }
        if next.len() > cap {
            return summary();
        }
        acc = next;
    }
    SpectrumData::Full(acc.into_iter().collect())
}

impl FlagVariety {
    /// Whether the integral class L induces a Spin^c structure: its
    /// coefficients must match the parity of `⟨δ_P, α∨⟩` at every painted
    /// node.
    pub fn is_spinc(&self, l: &LineBundleClass) -> Result<bool> {
        Ok(self.spinc_parity_failure(l)?.is_none())
    }

    /// First painted node at which the parity check fails, if any.
    pub fn spinc_parity_failure(&self, l: &LineBundleClass) -> Result<Option<usize>> {
        if l.coeffs().len() != self.painted().len() {
            return Err(Error::LengthMismatch {
                expected: self.painted().len(),
                got: l.coeffs().len(),
            });
        }
        let delta = self.delta_p_coeffs();
        for ((&node, l_c), d_c) in self.painted().iter().zip(l.coeffs()).zip(&delta) {
            if !(l_c - d_c).is_even() {
                return Ok(Some(node));
            }
        }
        Ok(None)
    }

    fn require_spinc(&self, l: &LineBundleClass) -> Result<()> {
        match self.spinc_parity_failure(l)? {
            Some(node) => Err(Error::NotSpinc { node }),
            None => Ok(()),
        }
    }

    /// The twist weight φ(E) = (φ(L) − δ_P)/2 in painted coordinates;
    /// integral exactly because L passes the parity check.
    pub fn twist_weight(&self, l: &LineBundleClass) -> Result<LineBundleClass> {
        self.require_spinc(l)?;
        let delta = self.delta_p_coeffs();
        let coeffs = l
            .coeffs()
            .iter()
            .zip(&delta)
            .map(|(l_c, d_c)| {
                let diff = l_c - d_c;
                let (half, rem) = diff.div_rem(&Int::from(2));
                assert!(rem.is_zero(), "parity check admitted a non-even difference");
                half
            })
            .collect();
        Ok(LineBundleClass::new(coeffs))
    }

    /// Commutator spectrum of an auxiliary invariant form θ against ω: the
    /// purely imaginary multiset `i·Σ_β ε_β·⟨θ, β∨⟩/⟨ω, β∨⟩` over sign
    /// vectors ε. Both classes must be in the same unit system (the unit
    /// cancels in the ratios).
    pub fn theta_spectrum(
        &self,
        theta: &KahlerClass,
        omega: &KahlerClass,
    ) -> Result<Spectrum<ImaginaryRat>> {
        self.theta_spectrum_with_cap(theta, omega, DEFAULT_MAX_DISTINCT)
    }

    pub fn theta_spectrum_with_cap(
        &self,
        theta: &KahlerClass,
        omega: &KahlerClass,
        cap: usize,
    ) -> Result<Spectrum<ImaginaryRat>> {
        if theta.pi_units() != omega.pi_units() {
            return Err(Error::UnitMismatch);
        }
        let theta_weight = self.extend_painted(theta.coeffs())?;
        let omega_weight = self.check_kahler(omega)?;
        let num = self.radical_pairings(&theta_weight);
        let den = self.radical_pairings(&omega_weight);
        let pairs: Vec<(Rat, Rat)> = num
            .iter()
            .zip(&den)
            .map(|(t, w)| {
                let r = t / w;
                (-&r, r)
            })
            .collect();
        let data = match sign_convolution(&pairs, cap) {
            SpectrumData::Full(entries) => SpectrumData::Full(
                entries
                    .into_iter()
                    .map(|(v, m)| (ImaginaryRat(v), m))
                    .collect(),
            ),
            SpectrumData::Truncated { min, max } => SpectrumData::Truncated {
                min: ImaginaryRat(min),
                max: ImaginaryRat(max),
            },
        };
        Ok(Spectrum {
            data,
            total: Nat::one() << self.dim_c(),
        })
    }

    /// Per-root data for the Weitzenböck eigenvalues: the two possible
    /// contributions of each radical root, plus the π-power of the result.
    fn weitzenboeck_pairs(
        &self,
        l: &LineBundleClass,
        omega: &KahlerClass,
    ) -> Result<(Vec<(Rat, Rat)>, i32)> {
        self.require_spinc(l)?;
        let l_weight = self.line_bundle_weight(l)?;
        let omega_weight = self.check_kahler(omega)?;
        let power = if omega.pi_units() { 0 } else { 1 };
        let d = self.radical_pairings(self.canonical_weight());
        let lw = self.radical_pairings(&l_weight);
        let w = self.radical_pairings(&omega_weight);
        let pairs = d
            .iter()
            .zip(&lw)
            .zip(&w)
            .map(|((d_b, l_b), w_b)| ((d_b - l_b) / w_b, (d_b + l_b) / w_b))
            .collect();
        Ok((pairs, power))
    }

    /// Eigenvalue multiset of the Weitzenböck piece of the squared Dirac
    /// operator twisted by L, in the class ω. Exact; degrades to a summary
    /// past [`DEFAULT_MAX_DISTINCT`] distinct values.
    pub fn weitzenboeck_spectrum(
        &self,
        l: &LineBundleClass,
        omega: &KahlerClass,
    ) -> Result<Spectrum<PiScalar>> {
        self.weitzenboeck_spectrum_with_cap(l, omega, DEFAULT_MAX_DISTINCT)
    }

    pub fn weitzenboeck_spectrum_with_cap(
        &self,
        l: &LineBundleClass,
        omega: &KahlerClass,
        cap: usize,
    ) -> Result<Spectrum<PiScalar>> {
        let (pairs, power) = self.weitzenboeck_pairs(l, omega)?;
        let wrap = |v: Rat| PiScalar::new(v, power).expect("power is 0 or 1");
        let data = match sign_convolution(&pairs, cap) {
            SpectrumData::Full(entries) => {
                SpectrumData::Full(entries.into_iter().map(|(v, m)| (wrap(v), m)).collect())
            }
            SpectrumData::Truncated { min, max } => SpectrumData::Truncated {
                min: wrap(min),
                max: wrap(max),
            },
        };
        Ok(Spectrum {
            data,
            total: Nat::one() << self.dim_c(),
        })
    }

    /// Smallest Weitzenböck eigenvalue, computed directly as
    /// `π^{1-k}·Σ_β (⟨δ_P,β∨⟩ − |⟨φ(L),β∨⟩|)/⟨ω,β∨⟩`; each root
    /// contributes its own minimum independently.
    pub fn weitzenboeck_min(
        &self,
        l: &LineBundleClass,
        omega: &KahlerClass,
    ) -> Result<PiScalar> {
        let (pairs, power) = self.weitzenboeck_pairs(l, omega)?;
        let sum = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { a } else { b })
            .fold(Rat::zero(), |acc, v| acc + v);
        PiScalar::new(sum, power)
    }

    /// Lower bound for the squared eigenvalues of the twisted Dirac
    /// operator: the smallest Weitzenböck eigenvalue, returned raw. A
    /// negative value makes the bound vacuous; reporting that is left to
    /// the caller so the raw value stays visible.
    pub fn dirac_lower_bound(
        &self,
        l: &LineBundleClass,
        omega: &KahlerClass,
    ) -> Result<PiScalar> {
        self.weitzenboeck_min(l, omega)
    }

    /// Decide existence of harmonic spinors for the Dirac operator twisted
    /// by L, via Borel–Weil–Bott applied to the twist weight φ(E).
    pub fn harmonic_spinors(&self, l: &LineBundleClass) -> Result<HarmonicReport> {
        let twist = self.twist_weight(l)?;
        let twist_coeffs: Vec<Rat> = twist
            .coeffs()
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let twist_full: Weight = self.extend_painted(&twist_coeffs)?;
        let outcome = match self.root_system().bwb_classify(&twist_full)? {
            CohomologyReport::Vanishes => HarmonicOutcome::NoHarmonicSpinors,
            CohomologyReport::Concentrated {
                degree, dimension, ..
            } => {
                let kernel = Int::from(dimension.clone());
                let index = if degree % 2 == 0 { kernel } else { -kernel };
                HarmonicOutcome::Harmonic {
                    kernel_dimension: dimension,
                    concentration_degree: degree,
                    index,
                }
            }
        };
        Ok(HarmonicReport {
            spinc_ok: true,
            twist,
            outcome,
        })
    }
}

/// Binomial coefficient, exact.
pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let mut acc = Nat::one();
    for i in 0..k.min(n - k) {
        acc = acc * Nat::from(n - i) / Nat::from(i + 1);
    }
    acc
}
