//! Exact scalars of the form `q·π^k` with rational q and k ∈ {-1, 0, 1}.
//!
//! Curvature-type quantities in this crate are rational multiples of π, of
//! 1, or of 1/π, depending on whether the Kähler class was itself given in
//! π-units. [`PiScalar`] keeps the π-power explicit so that no numerical
//! value of π ever enters a computation: addition is only defined between
//! scalars of equal π-power, and multiplication adds powers and fails if
//! the result would leave the representable range.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// A rational multiple of a power of π, with the power restricted to
/// -1..=1. Zero is normalized to π-power 0, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PiScalar {
    value: Rat,
    pi_power: i32,
}

impl PiScalar {
    /// `q·π^k`, rejecting powers outside -1..=1.
    pub fn new(value: Rat, pi_power: i32) -> Result<Self> {
        if !(-1..=1).contains(&pi_power) {
            return Err(Error::PiPowerOutOfRange(pi_power));
        }
        Ok(Self::normalized(value, pi_power))
    }

    /// A plain rational (π-power 0).
    pub fn rational(value: Rat) -> Self {
        Self::normalized(value, 0)
    }

    /// `q·π`.
    pub fn pi_times(value: Rat) -> Self {
        Self::normalized(value, 1)
    }

    fn normalized(value: Rat, pi_power: i32) -> Self {
        let pi_power = if value.is_zero() { 0 } else { pi_power };
        PiScalar { value, pi_power }
    }

    pub fn value(&self) -> &Rat {
        &self.value
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Sign of the scalar (π > 0, so this is the sign of the rational part).
    pub fn is_positive(&self) -> bool {
        self.value.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    /// Addition, defined only between scalars of the same π-power (zero is
    /// compatible with everything).
    pub fn checked_add(&self, rhs: &PiScalar) -> Result<PiScalar> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_power != rhs.pi_power {
            return Err(Error::PiPowerMismatch(self.pi_power, rhs.pi_power));
        }
        Ok(Self::normalized(&self.value + &rhs.value, self.pi_power))
    }

    /// Multiplication; π-powers add and must stay within -1..=1.
    pub fn checked_mul(&self, rhs: &PiScalar) -> Result<PiScalar> {
        let value = &self.value * &rhs.value;
        if value.is_zero() {
            return Ok(Self::normalized(value, 0));
        }
        let power = self.pi_power + rhs.pi_power;
        if !(-1..=1).contains(&power) {
            return Err(Error::PiPowerOutOfRange(power));
        }
        Ok(Self::normalized(value, power))
    }

    /// Division; π-powers subtract and must stay within -1..=1.
    pub fn checked_div(&self, rhs: &PiScalar) -> Result<PiScalar> {
        assert!(!rhs.value.is_zero(), "division by zero π-scalar");
        if self.value.is_zero() {
            return Ok(Self::normalized(Rat::zero(), 0));
        }
        let power = self.pi_power - rhs.pi_power;
        if !(-1..=1).contains(&power) {
            return Err(Error::PiPowerOutOfRange(power));
        }
        Ok(Self::normalized(&self.value / &rhs.value, power))
    }

    /// Multiply by a plain rational.
    pub fn scaled(&self, c: &Rat) -> PiScalar {
        Self::normalized(&self.value * c, self.pi_power)
    }

    pub fn neg(&self) -> PiScalar {
        Self::normalized(-&self.value, self.pi_power)
    }
}

/// Scalars of different non-zero π-powers are incomparable; everything else
/// compares through the rational part (π > 0).
impl PartialOrd for PiScalar {
    fn partial_cmp(&self, other: &PiScalar) -> Option<std::cmp::Ordering> {
        if self.is_zero() || other.is_zero() || self.pi_power == other.pi_power {
            self.value.partial_cmp(&other.value)
        } else {
            None
        }
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.value),
            1 => write!(f, "{}*pi", self.value),
            _ => write!(f, "{}/pi", self.value),
        }
    }
}
