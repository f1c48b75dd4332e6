use crate::enumerator::Enumerator;
use crate::error::{Error, Result};

pub fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidChannel(format!(
            "erasure probability must lie in (0, 1), got {epsilon}"
        )))
    }
}

/// Probability of unsuccessful decoding when the failure events of size `i`
/// are counted by `failures`: `Σ_i E_i ε^i (1-ε)^{n-i}`.
///
/// Pass `I(x)` for the optimal decoder and `D(x)` of a matrix for the peeling
/// decoder.
pub fn analytic_pud(failures: &Enumerator, epsilon: f64) -> Result<f64> {
    check_epsilon(epsilon)?;
    Ok(failures.evaluate_erasure(epsilon))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_full_set() {
        let mut c = vec![0; 9];
        c[8] = 1;
        let e = Enumerator::from_coefficients(c);
        let p = analytic_pud(&e, 0.3).unwrap();
        assert!((p - 0.3f64.powi(8)).abs() < 1e-15);
    }

    #[test]
    fn rm_incorrigible_formula() {
        let i = Enumerator::parse(8, "14x^4+56x^5+28x^6+8x^7+x^8").unwrap();
        let eps: f64 = 0.2;
        let q = 1.0 - eps;
        let expected = 14.0 * eps.powi(4) * q.powi(4)
            + 56.0 * eps.powi(5) * q.powi(3)
            + 28.0 * eps.powi(6) * q.powi(2)
            + 8.0 * eps.powi(7) * q
            + eps.powi(8);
        assert!((analytic_pud(&i, eps).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn total_probability_is_one() {
        for n in 1..30 {
            let p = analytic_pud(&Enumerator::all_subsets(n), 0.41).unwrap();
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn epsilon_must_be_open_interval() {
        let e = Enumerator::zero(3);
        assert!(analytic_pud(&e, 0.0).is_err());
        assert!(analytic_pud(&e, 1.0).is_err());
        assert!(analytic_pud(&e, f64::NAN).is_err());
    }
}
