//! Z2 parities, shared by roots, quivers and graded linear algebra.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// An element of Z2. Even vertices/roots render as a circle, odd ones as ⊗.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_u8(v: u8) -> Parity {
        if v % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.as_u8()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(v: u8) -> Result<Parity, String> {
        match v {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(format!("parity must be 0 or 1, got {v}")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}
