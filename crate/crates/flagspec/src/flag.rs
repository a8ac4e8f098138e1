//! Generalized flag varieties presented by painted Dynkin diagrams.
//!
//! Painting a non-empty subset of nodes of the Dynkin diagram of a simple
//! Lie type picks a parabolic subgroup; the painted nodes index both the
//! Picard lattice and the Kähler cone of the resulting projective variety.
//! The positive roots with a non-zero coefficient on some painted node (the
//! *radical roots*) play the role of curve classes: every geometric
//! quantity here is a finite sum over them.
//!
//! Key derived data, all exact:
//!
//! * `δ_P`, the sum of the radical roots, which is supported on the painted
//!   nodes and represents the anticanonical class;
//! * the Fano index, the gcd of the painted coordinates of `δ_P`;
//! * the total scalar curvature of the invariant Kähler metric in a class
//!   ω, the slope of a line bundle against ω, and the unique class (up to
//!   the chosen normalization) whose curvature is Kähler–Einstein-shaped.
//!
//! Classes come in two unit systems: *plain* coefficient vectors, and
//! vectors carrying an overall factor of π. All curvature-type results are
//! [`PiScalar`]s, so the factor is tracked, never evaluated.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pi::PiScalar;
use crate::root_system::{Root, RootSystem, Weight};
use crate::{rat, Int, Rat};

/// An integral class in the Picard lattice, written in the basis dual to
/// the painted nodes (ascending node order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineBundleClass {
    coeffs: Vec<Int>,
}

impl LineBundleClass {
    pub fn new(coeffs: Vec<Int>) -> Self {
        LineBundleClass { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LineBundleClass {
            coeffs: coeffs.iter().map(|&c| Int::from(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }
}

impl fmt::Display for LineBundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A rational class over the painted nodes, tagged with its unit system:
/// `pi_units` means every coefficient carries an implicit factor of π.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KahlerClass {
    coeffs: Vec<Rat>,
    pi_units: bool,
}

impl KahlerClass {
    pub fn new(coeffs: Vec<Rat>, pi_units: bool) -> Self {
        KahlerClass { coeffs, pi_units }
    }

    pub fn from_ints(coeffs: &[i64], pi_units: bool) -> Self {
        KahlerClass {
            coeffs: coeffs.iter().map(|&c| rat(c)).collect(),
            pi_units,
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn pi_units(&self) -> bool {
        self.pi_units
    }
}

impl fmt::Display for KahlerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")?;
        if self.pi_units {
            write!(f, "·π")?;
        }
        Ok(())
    }
}

/// A generalized flag variety: a root system with a painted node set, plus
/// the derived radical roots, anticanonical weight and Fano index.
pub struct FlagVariety {
    rs: RootSystem,
    painted: Vec<usize>,
    radical: Vec<usize>,
    delta_p: Weight,
    fano: u64,
}

impl FlagVariety {
    /// Build the flag variety for a painted node set (1-based node indices;
    /// order and duplicates are ignored). The set must be non-empty and in
    /// range.
    pub fn new(rs: RootSystem, painted_nodes: &[usize]) -> Result<Self> {
        if painted_nodes.is_empty() {
            return Err(Error::EmptyPaintedSet);
        }
        let rank = rs.rank();
        let mut painted: Vec<usize> = painted_nodes.to_vec();
        painted.sort_unstable();
        painted.dedup();
        for &p in &painted {
            if p == 0 || p > rank {
                return Err(Error::NodeOutOfRange {
                    index: p,
                    rank,
                });
            }
        }

        let radical: Vec<usize> = rs
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, beta)| painted.iter().any(|&p| beta.simple_coords()[p - 1] != 0))
            .map(|(idx, _)| idx)
            .collect();

        let mut delta_p = Weight::zero(rank);
        for &idx in &radical {
            delta_p = &delta_p + &rs.root_as_weight(&rs.positive_roots()[idx]);
        }
        for node in 1..=rank {
            if !painted.contains(&node) {
                assert!(
                    delta_p.coords()[node - 1].is_zero(),
                    "anticanonical weight has support off the painted nodes"
                );
            }
        }

        let fano = painted
            .iter()
            .map(|&p| {
                let c = &delta_p.coords()[p - 1];
                assert!(c.is_integer() && c.is_positive());
                c.to_integer().to_u64().expect("painted coordinate fits u64")
            })
            .fold(0u64, |acc, c| acc.gcd(&c));

        Ok(FlagVariety {
            rs,
            painted,
            radical,
            delta_p,
            fano,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Painted nodes, sorted ascending, 1-based.
    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    /// The radical roots Φ_I⁺: positive roots supported on a painted node.
    pub fn radical_roots(&self) -> impl Iterator<Item = &Root> {
        self.radical.iter().map(|&idx| &self.rs.positive_roots()[idx])
    }

    /// Complex dimension: the number of radical roots.
    pub fn dim_c(&self) -> usize {
        self.radical.len()
    }

    /// δ_P, the sum of the radical roots (the anticanonical weight),
    /// supported on the painted nodes.
    pub fn canonical_weight(&self) -> &Weight {
        &self.delta_p
    }

    /// Painted coordinates of δ_P, as integers in painted-node order.
    pub fn delta_p_coeffs(&self) -> Vec<Int> {
        self.painted
            .iter()
            .map(|&p| self.delta_p.coords()[p - 1].to_integer())
            .collect()
    }

    /// The Fano index: gcd of the painted coordinates of δ_P.
    pub fn fano_index(&self) -> u64 {
        self.fano
    }

    /// Parities `⟨δ_P, α∨⟩ mod 2` over the painted nodes; a line bundle
    /// induces a Spin^c structure exactly when it matches them.
    pub fn spinc_parities(&self) -> Vec<u8> {
        self.painted
            .iter()
            .map(|&p| {
                if self.delta_p.coords()[p - 1].to_integer().is_even() {
                    0
                } else {
                    1
                }
            })
            .collect()
    }

    /// Pairing of a weight with the coroot of a radical root (the degree of
    /// the class on the corresponding rational curve).
    pub fn curve_pairing(&self, lambda: &Weight, beta: &Root) -> Result<Rat> {
        let idx = self
            .rs
            .root_index(beta)
            .filter(|idx| self.radical.contains(idx))
            .ok_or_else(|| Error::RootNotInRadical(beta.simple_coords().to_vec()))?;
        Ok(self.rs.coroot_pairing_by_index(lambda, idx))
    }

    /// Zero-extend painted coefficients to a full weight.
    pub(crate) fn extend_painted(&self, coeffs: &[Rat]) -> Result<Weight> {
        if coeffs.len() != self.painted.len() {
            return Err(Error::LengthMismatch {
                expected: self.painted.len(),
                got: coeffs.len(),
            });
        }
        let mut full = vec![Rat::zero(); self.rs.rank()];
        for (&p, c) in self.painted.iter().zip(coeffs) {
            full[p - 1] = c.clone();
        }
        Ok(Weight::new(full))
    }

    /// The weight φ(L) of an integral class.
    pub fn line_bundle_weight(&self, l: &LineBundleClass) -> Result<Weight> {
        let coeffs: Vec<Rat> = l.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect();
        self.extend_painted(&coeffs)
    }

    /// The weight φ([ω]) of a rational class (unit tag dropped; pairings of
    /// π-unit classes must be rescaled by the caller's π bookkeeping).
    pub fn kahler_weight(&self, omega: &KahlerClass) -> Result<Weight> {
        self.extend_painted(omega.coeffs())
    }

    /// True when every coefficient is strictly positive, i.e. the class lies
    /// in the interior of the Kähler cone.
    pub fn is_kahler(&self, omega: &KahlerClass) -> bool {
        omega.coeffs().len() == self.painted.len()
            && omega.coeffs().iter().all(|c| c.is_positive())
    }

    /// Length-check a Kähler-cone class and report the first offending node
    /// if it is not in the interior of the cone.
    pub(crate) fn check_kahler(&self, omega: &KahlerClass) -> Result<Weight> {
        if omega.coeffs().len() != self.painted.len() {
            return Err(Error::LengthMismatch {
                expected: self.painted.len(),
                got: omega.coeffs().len(),
            });
        }
        for (&p, c) in self.painted.iter().zip(omega.coeffs()) {
            if !c.is_positive() {
                return Err(Error::NotKahler { node: p });
            }
        }
        self.extend_painted(omega.coeffs())
    }

    /// Pairings `⟨λ, β∨⟩` over the radical roots, in listing order.
    pub(crate) fn radical_pairings(&self, lambda: &Weight) -> Vec<Rat> {
        self.radical
            .iter()
            .map(|&idx| self.rs.coroot_pairing_by_index(lambda, idx))
            .collect()
    }

    /// Total scalar curvature of the invariant metric in the class ω:
    /// `4π^{1-k}·Σ_β ⟨δ_P, β∨⟩ / ⟨ω, β∨⟩` over radical roots, where k = 1
    /// when ω is in π-units. Always positive on the Kähler cone.
    pub fn scalar_curvature(&self, omega: &KahlerClass) -> Result<PiScalar> {
        let omega_weight = self.check_kahler(omega)?;
        let power = if omega.pi_units() { 0 } else { 1 };
        let d = self.radical_pairings(&self.delta_p);
        let w = self.radical_pairings(&omega_weight);
        let sum: Rat = d.iter().zip(&w).map(|(a, b)| a / b).sum();
        PiScalar::new(rat(4) * sum, power)
    }

    /// Slope of an integral class against ω:
    /// `π^{-k}·Σ_β ⟨φ(E), β∨⟩ / ⟨ω, β∨⟩` over radical roots.
    pub fn hym_slope(&self, e: &LineBundleClass, omega: &KahlerClass) -> Result<PiScalar> {
        let e_weight = self.line_bundle_weight(e)?;
        let omega_weight = self.check_kahler(omega)?;
        let power = if omega.pi_units() { -1 } else { 0 };
        let num = self.radical_pairings(&e_weight);
        let den = self.radical_pairings(&omega_weight);
        let sum: Rat = num.iter().zip(&den).map(|(a, b)| a / b).sum();
        PiScalar::new(sum, power)
    }

    /// The class proportional to δ_P whose total scalar curvature equals
    /// `target`: `ω = (4πm / target)·δ_P` with m the complex dimension.
    /// With no target, normalizes to total scalar curvature 2m, which makes
    /// the result the standard curvature-normalized anticanonical
    /// representative `2π·δ_P`.
    pub fn ke_class(&self, target: Option<&PiScalar>) -> Result<KahlerClass> {
        let m = rat(self.dim_c() as i64);
        let default = PiScalar::rational(rat(2) * &m);
        let target = target.unwrap_or(&default);
        if !target.is_positive() {
            return Err(Error::NonPositiveTarget);
        }
        let c = PiScalar::pi_times(rat(4) * &m).checked_div(target)?;
        debug_assert!(c.pi_power() >= 0, "target had π-power above 1");
        let coeffs = self
            .painted
            .iter()
            .map(|&p| c.value() * &self.delta_p.coords()[p - 1])
            .collect();
        Ok(KahlerClass::new(coeffs, c.pi_power() == 1))
    }
}

impl fmt::Debug for FlagVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagVariety")
            .field("lie_type", &self.rs.lie_type())
            .field("painted", &self.painted)
            .field("dim_c", &self.radical.len())
            .finish()
    }
}
