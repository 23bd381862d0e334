use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// A polynomial in `t` with nonnegative integer coefficients, stored low
/// degree first with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct PoincarePolynomial {
    coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        PoincarePolynomial { coefficients: vec![1] }
    }

    pub fn from_coefficients(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        PoincarePolynomial { coefficients }
    }

    /// `Σ t^d` over the given degrees.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for d in degrees {
            p.add_monomial(d, 1);
        }
        p
    }

    pub fn add_monomial(&mut self, degree: usize, coefficient: u64) {
        if coefficient == 0 {
            return;
        }
        if self.coefficients.len() <= degree {
            self.coefficients.resize(degree + 1, 0);
        }
        self.coefficients[degree] += coefficient;
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> u64 {
        self.coefficients.get(degree).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn evaluate(&self, t: u64) -> u64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl From<Vec<u64>> for PoincarePolynomial {
    fn from(c: Vec<u64>) -> Self {
        Self::from_coefficients(c)
    }
}

impl From<PoincarePolynomial> for Vec<u64> {
    fn from(p: PoincarePolynomial) -> Self {
        p.coefficients
    }
}

impl Add for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn add(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        let mut out = self.clone();
        for (d, &c) in rhs.coefficients.iter().enumerate() {
            out.add_monomial(d, c);
        }
        out
    }
}

impl Add for PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn add(self, rhs: PoincarePolynomial) -> PoincarePolynomial {
        &self + &rhs
    }
}

impl std::iter::Sum for PoincarePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Display for PoincarePolynomial {
    /// Highest degree first: `5t^4+11t^3+9t^2+4t+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (c, 1) => write!(f, "{c}t")?,
                (1, d) => write!(f, "t^{d}")?,
                (c, d) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let p = PoincarePolynomial::from_coefficients(vec![1, 4, 9, 11, 5]);
        assert_eq!(p.to_string(), "5t^4+11t^3+9t^2+4t+1");
        assert_eq!(PoincarePolynomial::one().to_string(), "1");
        assert_eq!(PoincarePolynomial::from_coefficients(vec![1, 1]).to_string(), "t+1");
        assert_eq!(PoincarePolynomial::zero().to_string(), "0");
        assert_eq!(PoincarePolynomial::from_coefficients(vec![0, 0, 1]).to_string(), "t^2");
    }

    #[test]
    fn trims_and_evaluates() {
        let p = PoincarePolynomial::from_coefficients(vec![1, 2, 0, 0]);
        assert_eq!(p.coefficients(), &[1, 2]);
        assert_eq!(p.evaluate(1), 3);
        assert_eq!(p.evaluate(2), 5);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(PoincarePolynomial::from_degrees([0, 1, 1, 2, 2, 3]).coefficients(), &[1, 2, 2, 1]);
    }

    #[test]
    fn addition() {
        let a = PoincarePolynomial::from_coefficients(vec![1, 1]);
        let b = PoincarePolynomial::from_coefficients(vec![0, 0, 3]);
        assert_eq!((&a + &b).coefficients(), &[1, 1, 3]);
        assert_eq!(serde_json::to_string(&(a + b)).unwrap(), "[1,1,3]");
    }
}
