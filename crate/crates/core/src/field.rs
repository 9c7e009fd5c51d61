//! Coefficient fields for homology.
//!
//! Elimination is written once against [`FieldScalar`]; the two fields the
//! library exposes are [`Gf2`] and the exact rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_traits::{Num, One, Zero};
use serde::{Deserialize, Serialize};

/// Exact scalar type usable in Gaussian elimination.
///
/// Implementations must be fields: every nonzero element is invertible
/// under `Div`.
pub trait FieldScalar: Num + Neg<Output = Self> + Clone + fmt::Debug {}

impl<T> FieldScalar for T where T: Num + Neg<Output = T> + Clone + fmt::Debug {}

/// The two-element field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf2(pub bool);

impl fmt::Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        self
    }
}

impl Rem for Gf2 {
    type Output = Gf2;
    fn rem(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        Gf2(false)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Gf2 {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Gf2 {
        Gf2(true)
    }
}

impl Num for Gf2 {
    type FromStrRadixErr = String;

    fn from_str_radix(s: &str, radix: u32) -> Result<Gf2, String> {
        u64::from_str_radix(s, radix).map(|v| Gf2(v % 2 == 1)).map_err(|e| e.to_string())
    }
}

/// Which field homology is computed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum FieldId {
    #[default]
    #[serde(rename = "GF2")]
    Gf2,
    #[serde(rename = "Q")]
    Rational,
}

impl FieldId {
    pub const ALL: [FieldId; 2] = [FieldId::Gf2, FieldId::Rational];

    pub fn as_str(&self) -> &'static str {
        match self {
            FieldId::Gf2 => "GF2",
            FieldId::Rational => "Q",
        }
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gf2" | "f2" | "2" => Ok(FieldId::Gf2),
            "q" | "rational" | "rationals" | "qq" => Ok(FieldId::Rational),
            other => Err(format!("unknown field '{other}' (expected GF2 or Q)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_arithmetic() {
        let one = Gf2::one();
        let zero = Gf2::zero();
        assert_eq!(one + one, zero);
        assert_eq!(-one, one);
        assert_eq!(one * zero, zero);
        assert_eq!(one / one, one);
        assert_eq!(Gf2::from_str_radix("3", 10), Ok(one));
    }

    #[test]
    fn field_id_parsing() {
        assert_eq!("GF2".parse::<FieldId>(), Ok(FieldId::Gf2));
        assert_eq!("q".parse::<FieldId>(), Ok(FieldId::Rational));
        assert!("R".parse::<FieldId>().is_err());
        assert_eq!(serde_json::to_string(&FieldId::Rational).unwrap(), "\"Q\"");
    }
}
