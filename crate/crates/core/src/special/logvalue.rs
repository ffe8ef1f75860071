use std::fmt;
use std::ops::{Div, Mul};

use crate::error::{Error, Result};

/// Largest natural log whose exponential still fits an `f64` comfortably.
/// `linear()` refuses anything above this.
pub const MAX_SAFE_LOG: f64 = 700.0;

/// A signed quantity stored as `sign * exp(log_magnitude)`.
///
/// Every volume and gamma-product in this crate overflows `f64` long before
/// the interesting range of `n` is exhausted (`Γ(n²)` already at n = 14), so
/// all such quantities are carried in the log domain and only converted to a
/// linear value on explicit request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    log_magnitude: f64,
    sign: i8,
}

impl LogValue {
    /// Exact zero. `log_magnitude` is meaningless and ignored.
    pub const ZERO: LogValue = LogValue {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };

    /// Exact one.
    pub const ONE: LogValue = LogValue {
        log_magnitude: 0.0,
        sign: 1,
    };

    /// Build from a natural log of the magnitude and an explicit sign.
    pub fn from_log(log_magnitude: f64, sign: i8) -> LogValue {
        assert!(sign == -1 || sign == 0 || sign == 1, "sign must be -1, 0, or 1");
        if sign == 0 {
            LogValue::ZERO
        } else {
            LogValue { log_magnitude, sign }
        }
    }

    /// Build from an ordinary finite value.
    pub fn from_linear(value: f64) -> LogValue {
        if value == 0.0 {
            LogValue::ZERO
        } else {
            LogValue {
                log_magnitude: value.abs().ln(),
                sign: if value > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn log_magnitude(&self) -> f64 {
        self.log_magnitude
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Natural log of the value; errors when the value is not positive.
    pub fn ln(&self) -> Result<f64> {
        if self.sign == 1 {
            Ok(self.log_magnitude)
        } else {
            Err(Error::domain("ln of a non-positive LogValue"))
        }
    }

    /// The linear-domain value. Errors when the magnitude exceeds exp(700)
    /// or underflows f64 entirely.
    pub fn linear(&self) -> Result<f64> {
        if self.sign == 0 {
            return Ok(0.0);
        }
        if self.log_magnitude > MAX_SAFE_LOG {
            return Err(Error::domain(format!(
                "linear value overflows: log magnitude {} exceeds {}",
                self.log_magnitude, MAX_SAFE_LOG
            )));
        }
        if self.log_magnitude < -MAX_SAFE_LOG {
            return Err(Error::domain(format!(
                "linear value underflows: log magnitude {} below -{}",
                self.log_magnitude, MAX_SAFE_LOG
            )));
        }
        Ok(f64::from(self.sign) * self.log_magnitude.exp())
    }

    /// Linear value if it fits, `None` otherwise. Convenience for serializers.
    pub fn linear_if_safe(&self) -> Option<f64> {
        self.linear().ok()
    }

    /// Integer power; `0^0 = 1` by the empty-product convention.
    pub fn powi(&self, k: i32) -> LogValue {
        if self.sign == 0 {
            return if k == 0 { LogValue::ONE } else { LogValue::ZERO };
        }
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        LogValue::from_log(self.log_magnitude * f64::from(k), sign)
    }

    pub fn recip(&self) -> LogValue {
        assert!(self.sign != 0, "reciprocal of zero");
        LogValue::from_log(-self.log_magnitude, self.sign)
    }

    pub fn abs(&self) -> LogValue {
        LogValue::from_log(self.log_magnitude, self.sign.abs())
    }
}

impl Mul for LogValue {
    type Output = LogValue;

    fn mul(self, rhs: LogValue) -> LogValue {
        if self.sign == 0 || rhs.sign == 0 {
            return LogValue::ZERO;
        }
        LogValue::from_log(self.log_magnitude + rhs.log_magnitude, self.sign * rhs.sign)
    }
}

impl Div for LogValue {
    type Output = LogValue;

    fn div(self, rhs: LogValue) -> LogValue {
        assert!(rhs.sign != 0, "division by zero LogValue");
        if self.sign == 0 {
            return LogValue::ZERO;
        }
        LogValue::from_log(self.log_magnitude - rhs.log_magnitude, self.sign * rhs.sign)
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => match self.linear_if_safe() {
                Some(v) => write!(f, "{v}"),
                None => write!(f, "{}exp({})", if s < 0 { "-" } else { "" }, self.log_magnitude),
            },
        }
    }
}
