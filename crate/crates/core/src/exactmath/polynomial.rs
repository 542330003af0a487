use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense exact-integer polynomial in one variable `t`.
///
/// Coefficients are stored low-to-high; the highest-index entry is nonzero
/// unless the polynomial is zero, in which case the coefficient sequence is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros so the degree invariant holds.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `None` for the zero polynomial, `Some(len - 1)` otherwise.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^i`; zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Low-to-high coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Product of linear factors `t + c` over the given constants.
    pub fn linear_product<I: IntoIterator<Item = BigInt>>(constants: I) -> Polynomial {
        let mut acc = Polynomial::one();
        for c in constants {
            acc = acc.mul_linear(&c);
        }
        acc
    }

    /// Multiplies by the linear factor `t + c` in place-ish fashion.
    pub fn mul_linear(&self, c: &BigInt) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a * c;
            out[i + 1] += a;
        }
        Polynomial::new(out)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Renders in descending-power human form, e.g. `t^4-6t^3+15t^2-17t+7`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.abs();
            if i == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

fn bigint_to_number<S: Serializer>(value: &BigInt) -> Result<serde_json::Number, S::Error> {
    serde_json::Number::from_str(&value.to_string())
        .map_err(|_| serde::ser::Error::custom("unrepresentable integer"))
}

/// JSON schema: `{"n": <degree>, "coeffs_low_to_high": [int, ...]}`.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Polynomial", 2)?;
        st.serialize_field("n", &self.degree().unwrap_or(0))?;
        let coeffs = self
            .coeffs
            .iter()
            .map(bigint_to_number::<S>)
            .collect::<Result<Vec<_>, _>>()?;
        st.serialize_field("coeffs_low_to_high", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[allow(dead_code)]
            n: usize,
            coeffs_low_to_high: Vec<serde_json::Number>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs_low_to_high
            .iter()
            .map(|num| {
                BigInt::from_str(&num.to_string())
                    .map_err(|_| D::Error::custom(format!("not an integer: {num}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}
