use crate::real::Real;
use crate::NumericsError;

pub const MIN_DIGITS: u32 = 30;
pub const MAX_DIGITS: u32 = 2000;

/// Target decimal precision P. Work is carried out at roughly 2P + 30
/// digits; comparisons use the tolerance 10^-(P-10).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    pub digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: 50 }
    }
}

impl Precision {
    pub fn new(digits: u32) -> Result<Self, NumericsError> {
        if !(MIN_DIGITS..=MAX_DIGITS).contains(&digits) {
            return Err(NumericsError::PrecisionUnattainable(digits));
        }
        Ok(Precision { digits })
    }

    pub fn work_bits(&self) -> u32 {
        ((2 * self.digits + 30) as f64 / std::f64::consts::LOG10_2).ceil() as u32
    }

    pub fn tolerance(&self) -> Real {
        Real::pow10(-(self.digits as i64 - 10), self.work_bits())
    }

    /// Spouge parameter for relative error below 10^-(P+5).
    pub fn spouge_a(&self) -> u32 {
        (1.26 * self.digits as f64).ceil() as u32 + 10
    }
}
