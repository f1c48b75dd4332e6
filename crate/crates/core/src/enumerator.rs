use std::fmt;
use std::ops::{Add, Mul};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `C(n, k)` for `n ≤ 64`; exact in `u64`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Polynomial `Σ_i c_i x^i` over a length-`n` coordinate set, with one
/// exact count per size `0..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Enumerator {
    coefficients: Vec<u64>,
}

impl Enumerator {
    pub fn zero(n: usize) -> Self {
        Self {
            coefficients: vec![0; n + 1],
        }
    }

    /// `Σ_i C(n,i) x^i`, the count of all subsets by size.
    pub fn all_subsets(n: usize) -> Self {
        Self {
            coefficients: (0..=n).map(|i| binomial(n, i)).collect(),
        }
    }

    /// `coefficients[i]` is the coefficient of `x^i`; must be non-empty.
    pub fn from_coefficients(coefficients: Vec<u64>) -> Self {
        assert!(!coefficients.is_empty(), "an enumerator has n+1 ≥ 1 coefficients");
        Self { coefficients }
    }

    /// Parses a polynomial such as `1+14x^4+x^8` into an enumerator of length `n`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut e = Self::zero(n);
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "0" {
            return Ok(e);
        }
        let bad = |reason: String| Error::Parse { line: 1, reason };
        for term in cleaned.split('+') {
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let exp = &term[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|p| p.parse().ok())
                            .ok_or_else(|| bad(format!("bad exponent in `{term}`")))?
                    };
                    (&term[..pos], power)
                }
            };
            let c: u64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad(format!("bad coefficient in `{term}`")))?
            };
            if power > n {
                return Err(bad(format!("power {power} exceeds length {n}")));
            }
            e.coefficients[power] += c;
        }
        Ok(e)
    }

    /// Length `n` of the underlying coordinate set.
    pub fn n(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub(crate) fn bump(&mut self, i: usize) {
        self.coefficients[i] += 1;
    }

    pub fn total(&self) -> u128 {
        self.coefficients.iter().map(|&c| c as u128).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// Smallest `i ≥ from` with a nonzero coefficient.
    pub fn first_nonzero_from(&self, from: usize) -> Option<usize> {
        (from..self.coefficients.len()).find(|&i| self.coefficients[i] > 0)
    }

    /// True when every coefficient of `self` is at least the matching one in `other`.
    pub fn dominates(&self, other: &Enumerator) -> bool {
        self.coefficients.len() == other.coefficients.len()
            && self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .all(|(a, b)| a >= b)
    }

    /// `Σ_i c_i ε^i (1-ε)^{n-i}`.
    pub fn evaluate_erasure(&self, epsilon: f64) -> f64 {
        let n = self.n() as i32;
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| c as f64 * epsilon.powi(i as i32) * (1.0 - epsilon).powi(n - i as i32))
            .sum()
    }

    /// Renders as `1+14x^4+x^8`; the zero polynomial renders as `0`.
    pub fn polynomial(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Enumerator({self})")
    }
}

impl Add for &Enumerator {
    type Output = Enumerator;

    fn add(self, rhs: &Enumerator) -> Enumerator {
        assert_eq!(self.n(), rhs.n(), "enumerator length mismatch");
        Enumerator {
            coefficients: self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Polynomial product; lengths add.
impl Mul for &Enumerator {
    type Output = Enumerator;

    fn mul(self, rhs: &Enumerator) -> Enumerator {
        let mut out = Enumerator::zero(self.n() + rhs.n());
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                out.coefficients[i + j] += a * b;
            }
        }
        out
    }
}

/// Serialized as decimal-string coefficients plus the rendered polynomial.
impl Serialize for Enumerator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Enumerator", 2)?;
        let coefficients: Vec<String> = self.coefficients.iter().map(u64::to_string).collect();
        st.serialize_field("coefficients", &coefficients)?;
        st.serialize_field("polynomial", &self.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_table_style() {
        let e = Enumerator::from_coefficients(vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(e.to_string(), "1+14x^4+x^8");
        assert_eq!(Enumerator::zero(3).to_string(), "0");
        assert_eq!(Enumerator::from_coefficients(vec![0, 2, 1]).to_string(), "2x+x^2");
    }

    #[test]
    fn parse_round_trip() {
        let text = "2x^3+32x^4+56x^5+28x^6+8x^7+x^8";
        let e = Enumerator::parse(8, text).unwrap();
        assert_eq!(e.coefficients(), &[0, 0, 0, 2, 32, 56, 28, 8, 1]);
        assert_eq!(e.to_string(), text);
        assert!(Enumerator::parse(3, "x^4").is_err());
        assert_eq!(Enumerator::parse(2, "0").unwrap(), Enumerator::zero(2));
    }

    #[test]
    fn product_of_binomials() {
        let a = Enumerator::parse(2, "1+x^2").unwrap();
        assert_eq!((&a * &a).to_string(), "1+2x^2+x^4");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn all_subsets_evaluates_to_one() {
        let e = Enumerator::all_subsets(10);
        assert!((e.evaluate_erasure(0.37) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn json_shape() {
        let e = Enumerator::parse(2, "1+x^2").unwrap();
        let js = serde_json::to_value(&e).unwrap();
        assert_eq!(js["coefficients"], serde_json::json!(["1", "0", "1"]));
        assert_eq!(js["polynomial"], "1+x^2");
    }
}
