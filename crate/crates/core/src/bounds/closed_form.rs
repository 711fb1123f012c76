//! Closed-form capacity bounds for the depolarizing and BB84 channels.

use crate::error::{Error, Result};
use crate::numerics::binary_entropy;
use crate::numerics::entropy::h2;
use crate::scalar::Real;

fn check_unit<T: Real>(what: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::domain(what, x.as_f64(), "[0, 1]"))
    }
}

/// Hashing rate `1 - H(p) - p log2 3`, an achievable rate (not clamped at 0).
pub fn hashing_lower<T: Real>(p: T) -> Result<T> {
    Ok(T::one() - binary_entropy(p)? - p * T::lit(3.0).log2())
}

/// `1 - H(p)`, the bound from the dephasing decomposition.
pub fn dephasing_upper<T: Real>(p: T) -> Result<T> {
    Ok(T::one() - binary_entropy(p)?)
}

/// `1 - 4p`, the line through the perfect channel and the antidegradable point `p = 1/4`.
pub fn no_cloning_line<T: Real>(p: T) -> T {
    T::one() - T::lit(4.0) * p
}

/// Damping parameter `γ(p) = 4√(1-p)(1-√(1-p))`.
pub fn ad_gamma<T: Real>(p: T) -> Result<T> {
    check_unit("p", p)?;
    let s = (T::one() - p).sqrt();
    Ok(T::lit(4.0) * s * (T::one() - s))
}

/// `H((1-γ)/2) - H(γ/2)` with `γ = γ(p)`, the bound from the amplitude damping decomposition.
pub fn ad_upper<T: Real>(p: T) -> Result<T> {
    let g = ad_gamma(p)?;
    let half = T::lit(0.5);
    Ok(h2((T::one() - g) * half) - h2(g * half))
}

/// `H(½(1 + sin u sin v)) - H(½(1 + cos u cos v))`.
pub fn delta_objective<T: Real>(u: T, v: T) -> T {
    let half = T::lit(0.5);
    h2(half * (T::one() + u.sin() * v.sin())) - h2(half * (T::one() + u.cos() * v.cos()))
}

/// `H(½ - 2q(1-q)) - H(2q(1-q))` for `q ∈ [0, 1/2]`.
pub fn bb84_upper<T: Real>(q: T) -> Result<T> {
    if !(q >= T::zero() && q <= T::lit(0.5)) {
        return Err(Error::domain("q", q.as_f64(), "[0, 1/2]"));
    }
    let g = T::lit(2.0) * q * (T::one() - q);
    Ok(h2(T::lit(0.5) - g) - h2(g))
}

/// Root of [`bb84_upper`] on `[0, 1/4]`, located by bisection.
pub fn bb84_zero_crossing<T: Real>() -> T {
    let (mut lo, mut hi) = (T::zero(), T::lit(0.25));
    let f = |q: T| bb84_upper(q).unwrap_or_else(|_| T::nan());
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * T::lit(0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints() {
        assert_eq!(hashing_lower(0.0f64).unwrap(), 1.0);
        assert_eq!(dephasing_upper(0.0f64).unwrap(), 1.0);
        assert!(dephasing_upper(0.5f64).unwrap().abs() < 1e-15);
        assert_eq!(no_cloning_line(0.25f64), 0.0);
        assert!((no_cloning_line(0.3f64) + 0.2).abs() < 1e-15);
        assert!((ad_upper(0.0f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((bb84_upper(0.0f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((delta_objective(0.0f64, 0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hashing_at_one_tenth() {
        // 1 - H(0.1) - 0.1 log2 3 with H(0.1) = 0.4689955935892812
        let expected = 1.0 - 0.468_995_593_589_281_2 - 0.1 * 3f64.log2();
        assert!((hashing_lower(0.1f64).unwrap() - expected).abs() < 1e-15);
        assert!((hashing_lower(0.1f64).unwrap() - 0.372_508_1).abs() < 1e-7);
    }

    #[test]
    fn special_points_of_the_objective() {
        for k in 0..=50 {
            let p = 0.3 * k as f64 / 50.0;
            let v = 2.0 * (1.0 - p).sqrt().acos();
            assert!((delta_objective(0.0, v) - dephasing_upper(p).unwrap()).abs() < 1e-12);
            let u = 2.0 * (1.0 - p).sqrt().sqrt().acos();
            assert!((delta_objective(u, u) - ad_upper(p).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn objective_is_symmetric() {
        for (u, v) in [(0.1, 0.7), (1.3, 0.2), (2.0, -0.5)] {
            assert_eq!(delta_objective(u, v), delta_objective(v, u));
        }
    }

    #[test]
    fn zero_crossing() {
        let q: f64 = bb84_zero_crossing();
        assert!((q - (2.0 - 2f64.sqrt()) / 4.0).abs() < 1e-12);
        assert!(bb84_upper(0.146f64).unwrap() > 0.0);
        assert!(bb84_upper(0.147f64).unwrap() < 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(hashing_lower(-0.1f64).is_err());
        assert!(ad_upper(1.1f64).is_err());
        assert!(bb84_upper(0.6f64).is_err());
        assert!(dephasing_upper(f64::NAN).is_err());
    }
}
