//! Hyperbolic volume assembly: the Lobachevsky function and the reference
//! constants derived from it.

use std::f64::consts::PI;
use std::sync::OnceLock;

use thiserror::Error;

/// Input to a volume function was NaN or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("input must be a finite real number")]
pub struct NonFiniteInput;

/// Number of series terms kept; the series ratio is at most 1/4 after range
/// reduction, so this is far more than double precision can use.
const ZETA_TERMS: usize = 64;

/// zeta(2k) for k = 1..=ZETA_TERMS.
fn zeta_even() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; ZETA_TERMS];
        t[0] = PI * PI / 6.0;
        t[1] = PI.powi(4) / 90.0;
        t[2] = PI.powi(6) / 945.0;
        for k in 4..=ZETA_TERMS {
            // Direct summation; the exponent is at least 8, so a few hundred
            // terms exhaust double precision.
            let s = 2 * k as i32;
            let mut acc = 0.0;
            for n in (1..400u64).rev() {
                acc += (n as f64).powi(-s);
            }
            t[k - 1] = acc;
        }
        t
    })
}

/// Series evaluation on [0, pi/2]:
/// L(t) = t - t ln(2t) + sum_{k>=1} zeta(2k) / (k(2k+1)) * t^{2k+1} / pi^{2k}.
fn series(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let zeta = zeta_even();
    let x = (t / PI) * (t / PI);
    let mut pow = x;
    let mut sum = 0.0;
    for k in 1..=ZETA_TERMS {
        let term = zeta[k - 1] / (k as f64 * (2 * k + 1) as f64) * pow;
        sum += term;
        if term < 1e-18 * sum.max(1.0) {
            break;
        }
        pow *= x;
    }
    t - t * (2.0 * t).ln() + t * sum
}

/// The Lobachevsky function L(theta) = -integral_0^theta ln|2 sin u| du.
///
/// Odd, pi-periodic, maximal at pi/6. NaN propagates; infinite input yields
/// NaN. Absolute accuracy is near machine precision over the whole line.
pub fn lobachevsky(theta: f64) -> f64 {
    if !theta.is_finite() {
        return f64::NAN;
    }
    let r = theta.rem_euclid(PI);
    if r <= PI / 2.0 {
        series(r)
    } else {
        -series(PI - r)
    }
}

/// [`lobachevsky`] with an explicit error for non-finite input.
pub fn checked_lobachevsky(theta: f64) -> Result<f64, NonFiniteInput> {
    if theta.is_finite() {
        Ok(lobachevsky(theta))
    } else {
        Err(NonFiniteInput)
    }
}

/// Volume of the ideal regular octahedron, 8 L(pi/4).
pub fn v_oct() -> f64 {
    8.0 * lobachevsky(PI / 4.0)
}

/// Volume of the ideal regular tetrahedron, 3 L(pi/3).
pub fn v_tet() -> f64 {
    3.0 * lobachevsky(PI / 3.0)
}
