//! Associated Laguerre polynomials L_n^m.

use once_cell::sync::Lazy;

/// ln(k!) table, sized for every dimension this crate works at.
static LN_FACTORIAL: Lazy<Vec<f64>> = Lazy::new(|| {
    let mut t = vec![0.0f64; 4096];
    for k in 1..t.len() {
        t[k] = t[k - 1] + (k as f64).ln();
    }
    t
});

pub(crate) fn ln_factorial(k: usize) -> f64 {
    LN_FACTORIAL[k]
}

/// Degree at which evaluation switches from the finite sum to the
/// three-term recurrence (the sum's factorial ratios stay in range below
/// this, the recurrence avoids them above it).
const DIRECT_SUM_MAX_DEGREE: usize = 20;

/// Associated Laguerre polynomial L_n^m(x) for integer n, m >= 0.
///
/// Total function: finite sum for small degree, ascending three-term
/// recurrence in the degree otherwise.
pub fn laguerre_assoc(n: usize, m: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if n <= DIRECT_SUM_MAX_DEGREE {
        direct_sum(n, m, x)
    } else {
        recurrence(n, m, x)
    }
}

/// Finite sum over k of (-1)^k (n+m)! x^k / ((n-k)! k! (m+k)!), evaluated
/// with term ratios to keep every intermediate in f64 range.
fn direct_sum(n: usize, m: usize, x: f64) -> f64 {
    // term_0 = C(n+m, n)
    let mut term = 1.0f64;
    for j in 1..=n {
        term *= (m + j) as f64 / j as f64;
    }
    let mut acc = term;
    for k in 0..n {
        term *= -x * (n - k) as f64 / ((k + 1) as f64 * (m + k + 1) as f64);
        acc += term;
    }
    acc
}

fn recurrence(n: usize, m: usize, x: f64) -> f64 {
    let mf = m as f64;
    let mut lkm1 = 1.0; // L_0^m
    let mut lk = 1.0 + mf - x; // L_1^m
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + mf - x) * lk - (kf + mf) * lkm1) / (kf + 1.0);
        lkm1 = lk;
        lk = next;
    }
    lk
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn degree_zero_is_one() {
        for m in [0usize, 1, 7, 200] {
            for x in [0.0, 0.3, 12.5] {
                assert_eq!(laguerre_assoc(0, m, x), 1.0);
            }
        }
    }

    #[test]
    fn degree_one_matches_closed_form() {
        // L_1^0(2.5) = 1 - 2.5
        assert_relative_eq!(laguerre_assoc(1, 0, 2.5), -1.5, epsilon = 1e-15);
    }

    #[test]
    fn value_at_zero_is_binomial() {
        // L_2^1(0) = C(3, 2) = 3
        assert_relative_eq!(laguerre_assoc(2, 1, 0.0), 3.0, epsilon = 1e-14);
        // L_5^3(0) = C(8, 5) = 56
        assert_relative_eq!(laguerre_assoc(5, 3, 0.0), 56.0, epsilon = 1e-12);
    }

    #[test]
    fn sum_and_recurrence_agree_at_the_switchover() {
        for n in 15..=25 {
            for m in [0usize, 1, 4, 11] {
                for x in [0.1, 1.0, 3.7, 9.2] {
                    let s = direct_sum(n, m, x);
                    let r = recurrence(n, m, x);
                    assert_relative_eq!(s, r, max_relative = 1e-9, epsilon = 1e-9);
                }
            }
        }
    }

    #[test]
    fn large_degree_stays_finite() {
        let v = laguerre_assoc(300, 150, 40.0);
        assert!(v.is_finite());
    }
}
