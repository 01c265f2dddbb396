use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_parity(exponent: u64) -> Self {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Sign of a nonzero integer; `None` for zero.
    pub fn of(value: i64) -> Option<Self> {
        match value.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}
