//! Exact evaluation of the closed-form bounds and counts.
//!
//! Everything is computed with arbitrary-precision integers and rationals;
//! nothing here goes through floating point.

mod exact;

pub use exact::{ratio_string, ExactRatio, ExactUint};

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn pow(base: u64, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    // running product stays integral: C(n-r+i, i) at step i
    (1..=r as u64).fold(BigUint::one(), |acc, i| acc * (n as u64 - r as u64 + i) / i)
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn int(v: BigUint) -> BigRational {
    BigRational::from_integer(v.into())
}

fn ceil_nonneg(r: &BigRational) -> BigUint {
    r.ceil().to_integer().to_biguint().unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// `k = 2`: matching-class bounds.
    T1,
    /// Even `k > 2`, `k | n`.
    T2,
    /// Odd `k`, `k | n`.
    T3,
    /// Sphere-covering bound for the triangle-separated subset families.
    GV,
}

/// Lower and upper bounds for one `(n, k)`, exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub theorem: Option<Theorem>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<ExactRatio>,
    /// `max(1, ceil(lower))`: family sizes are integers and one path is
    /// always a valid family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub effective_lower: Option<ExactUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<ExactRatio>,
    /// For `k = 2`: the number of (near-)perfect matchings, which also caps
    /// the family size and is tighter than `upper`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_cap: Option<ExactUint>,
}

impl BoundReport {
    fn inapplicable(n: usize, k: usize, reason: &str) -> Self {
        BoundReport {
            n,
            k,
            theorem: None,
            applicable: false,
            reason: Some(reason.to_string()),
            lower: None,
            effective_lower: None,
            upper: None,
            matching_cap: None,
        }
    }

    fn new(n: usize, k: usize, theorem: Theorem, lower: BigRational, upper: BigRational) -> Self {
        let effective = ceil_nonneg(&lower).max(BigUint::one());
        BoundReport {
            n,
            k,
            theorem: Some(theorem),
            applicable: true,
            reason: None,
            lower: Some(ExactRatio(lower)),
            effective_lower: Some(ExactUint(effective)),
            upper: Some(ExactRatio(upper)),
            matching_cap: None,
        }
    }

    pub fn lower(&self) -> Option<&BigRational> {
        self.lower.as_ref().map(|r| &r.0)
    }

    pub fn upper(&self) -> Option<&BigRational> {
        self.upper.as_ref().map(|r| &r.0)
    }

    pub fn effective_lower(&self) -> Option<&BigUint> {
        self.effective_lower.as_ref().map(|r| &r.0)
    }

    pub fn matching_cap(&self) -> Option<&BigUint> {
        self.matching_cap.as_ref().map(|r| &r.0)
    }

    /// `ceil(lower) <= value <= upper`, and `value <= matching_cap` when
    /// present. `None` when the report is not applicable.
    pub fn admits(&self, value: usize) -> Option<bool> {
        if !self.applicable {
            return None;
        }
        let v = BigUint::from(value);
        let vr = int(v.clone());
        let lower_ok = self.lower().is_none_or(|l| ceil_nonneg(l) <= v);
        let upper_ok = self.upper().is_none_or(|u| &vr <= u);
        let cap_ok = self.matching_cap().is_none_or(|c| &v <= c);
        Some(lower_ok && upper_ok && cap_ok)
    }
}

/// Bounds on the largest family of Hamilton paths of `K_n` with pairwise
/// private `k`-subpaths.
///
/// * `k = 2`: `floor(n/2)! / 2^floor(n/2)` and `2^ceil(n/2) ceil(n/2)!`
/// * even `k > 2`, `k | n`: `(n/k)!` and `3^n (n/k)!`
/// * odd `k`, `k | n`: `(n/k - 1)!` and `3^n (n/k)!`
///
/// Other parameters give an inapplicable report.
pub fn bounds_m(n: usize, k: usize) -> BoundReport {
    if n < 2 || k < 2 {
        return BoundReport::inapplicable(n, k, "requires n >= 2 and k >= 2");
    }
    if k == 2 {
        let (fl, cl) = (n / 2, n.div_ceil(2));
        let lower = ratio(factorial(fl), pow(2, fl));
        let upper = int(pow(2, cl) * factorial(cl));
        let mut report = BoundReport::new(n, k, Theorem::T1, lower, upper);
        report.matching_cap = Some(ExactUint(count_matchings(n)));
        return report;
    }
    if !n.is_multiple_of(k) {
        return BoundReport::inapplicable(
            n,
            k,
            "divisibility hypothesis fails: k does not divide n",
        );
    }
    let m = n / k;
    let upper = int(pow(3, n) * factorial(m));
    if k.is_multiple_of(2) {
        BoundReport::new(n, k, Theorem::T2, int(factorial(m)), upper)
    } else {
        BoundReport::new(n, k, Theorem::T3, int(factorial(m - 1)), upper)
    }
}

/// Number of perfect matchings (even `n`) or near-perfect matchings (odd
/// `n`) of `K_n`: `n! / (2^floor(n/2) floor(n/2)!)`.
pub fn count_matchings(n: usize) -> BigUint {
    let h = n / 2;
    factorial(n) / (pow(2, h) * factorial(h))
}

/// Size of the class of paths sharing a fixed skeleton:
/// `(n/k)! 2^(n/k) (n - 2n/k)!`.
pub fn class_size(n: usize, k: usize) -> Result<BigUint> {
    if k == 0 || !n.is_multiple_of(k) || 2 * (n / k) > n {
        return Err(Error::bad(format!(
            "class size needs k | n and n >= 2n/k, got n={n} k={k}"
        )));
    }
    let m = n / k;
    Ok(factorial(m) * pow(2, m) * factorial(n - 2 * m))
}

/// The five members of the upper-bound chain for even `k`, in order:
///
/// `n!/(2c) <= n!/c = n!(n/k)!/(c (n/k)!) < 3^n (n/k)! 2^(-n/k) < 3^n (n/k)!`
///
/// with `c = class_size(n, k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub n: usize,
    pub k: usize,
    pub members: Vec<ExactRatio>,
    /// Outcome of each comparison: `<=`, `=`, `<`, `<`.
    pub steps: Vec<bool>,
    pub holds: bool,
}

pub fn chain_t2(n: usize, k: usize) -> Result<ChainReport> {
    if k <= 2 || !k.is_multiple_of(2) || !n.is_multiple_of(k) {
        return Err(Error::bad(format!(
            "chain needs even k > 2 dividing n, got n={n} k={k}"
        )));
    }
    let m = n / k;
    let c = class_size(n, k)?;
    let nf = factorial(n);
    let mf = factorial(m);
    let members = vec![
        ratio(nf.clone(), BigUint::from(2u8) * &c),
        ratio(nf.clone(), c.clone()),
        ratio(&nf * &mf, &c * &mf),
        ratio(pow(3, n) * &mf, pow(2, m)),
        int(pow(3, n) * &mf),
    ];
    let steps = vec![
        members[0] <= members[1],
        members[1] == members[2],
        members[2] < members[3],
        members[3] < members[4],
    ];
    let holds = steps.iter().all(|&s| s);
    Ok(ChainReport {
        n,
        k,
        members: members.into_iter().map(ExactRatio).collect(),
        steps,
        holds,
    })
}

pub fn check_chain_t2(n: usize, k: usize) -> Result<bool> {
    Ok(chain_t2(n, k)?.holds)
}

/// `count_matchings(n) <= 2^ceil(n/2) ceil(n/2)!`
pub fn check_t1_upper(n: usize) -> bool {
    let c = n.div_ceil(2);
    count_matchings(n) <= pow(2, c) * factorial(c)
}

/// `sum_{i<=r} C(n, i)`
pub fn ball_volume(n: usize, radius: usize) -> BigUint {
    (0..=radius.min(n)).map(|i| binomial(n, i)).sum()
}

/// `2^n / sum_{i<d} C(n,i)`, unreduced presentation available through
/// [`gilbert_parts`].
pub fn gilbert_bound(n: usize, d: usize) -> Result<BigRational> {
    let (num, den) = gilbert_parts(n, d)?;
    Ok(ratio(num, den))
}

/// Numerator `2^n` and denominator `sum_{i<d} C(n,i)` of the Gilbert bound.
pub fn gilbert_parts(n: usize, d: usize) -> Result<(BigUint, BigUint)> {
    if d == 0 || d > n {
        return Err(Error::bad(format!(
            "gilbert bound needs 1 <= d <= n, got n={n} d={d}"
        )));
    }
    Ok((pow(2, n), ball_volume(n, d - 1)))
}

/// Whether `sum_{i<=6} C(n,i) <= n^6`, so that `2^n / n^6` is implied by the
/// Gilbert bound with `d = 7`.
pub fn gilbert_weakening_holds(n: usize) -> bool {
    ball_volume(n, 6) <= pow(n as u64, 6)
}

/// Bounds for the triangle-separated subgraph families: the Gilbert bound
/// with `d = 7` below, the number of subgraphs of `K_n` above.
pub fn bounds_d3(n: usize) -> BoundReport {
    if n < 7 {
        return BoundReport::inapplicable(n, 3, "requires n >= 7 for distance 7");
    }
    let lower = gilbert_bound(n, 7).expect("d <= n checked");
    let upper = int(pow(2, n * (n - 1) / 2));
    BoundReport::new(n, 3, Theorem::GV, lower, upper)
}

/// `a / b` written as an unreduced fraction string.
pub fn fraction_string(num: &BigUint, den: &BigUint) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

/// Integer `ceil(a/b)` for display.
pub fn ceil_div(num: &BigUint, den: &BigUint) -> BigUint {
    num.div_ceil(den)
}

#[cfg(test)]
mod tests;
