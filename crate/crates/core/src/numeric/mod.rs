//! Certified iteration of the negative-base transformation
//! `T(x) = -βx + ⌊βx⌋ + 1` on `(0, 1]`.
//!
//! Values are exact rationals, exact elements of a real quadratic field, or
//! dyadic intervals. Exact inputs give exact digits; interval inputs give
//! digits only while the enclosure stays inside one partition cell.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::order::{alt_cmp_known, alt_cmp_seq, EvPeriodicSeq, PrefixOrdering, Word};

mod leo;
mod real;

pub use leo::{leo_witness, LeoOutcome, Span};
pub use real::{Interval, QuadraticSurd, Real};

pub(crate) use real::ratio;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("digit is ambiguous at the current precision (value {0})")]
    AmbiguousDigit(String),
    #[error("value {0} lies outside the domain")]
    DomainError(String),
    #[error("precision exhausted after {at} certified digits")]
    PrecisionExhausted { at: usize },
    #[error("comparison undecided after {prefix_len} digits")]
    Undecidable { prefix_len: usize },
    #[error("operands live in different quadratic fields")]
    IncompatibleFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} must be a squarefree integer greater than 1")]
    BadRadicand(String),
    #[error("empty interval")]
    EmptyInterval,
    #[error("beta must exceed 1")]
    NotGreaterThanOne,
    #[error("operation needs an exact beta")]
    RequiresExact,
    #[error("digit {0} does not fit in a byte")]
    DigitOverflow(String),
    #[error("cannot parse beta {0:?}")]
    Parse(String),
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// The base `β > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Beta(Real);

impl Beta {
    pub fn new(value: Real) -> Result<Self, NumericError> {
        match value.cmp_rational(&BigRational::one()) {
            Some(Ordering::Greater) => Ok(Beta(value)),
            _ => Err(NumericError::NotGreaterThanOne),
        }
    }

    pub fn rational(numer: i64, denom: i64) -> Result<Self, NumericError> {
        if denom == 0 {
            return Err(NumericError::DivisionByZero);
        }
        Self::new(Real::Rational(ratio(numer, denom)))
    }

    /// `(1 + √5) / 2`, held exactly.
    pub fn golden() -> Self {
        Beta(Real::Quadratic(QuadraticSurd::golden()))
    }

    pub fn value(&self) -> &Real {
        &self.0
    }

    pub fn is_exact(&self) -> bool {
        self.0.is_exact()
    }

    /// `⌊β⌋`; `None` for an interval straddling an integer.
    pub fn floor(&self) -> Option<BigInt> {
        self.0.floor()
    }

    /// Largest digit `⌊β⌋ + 1`.
    pub fn max_digit(&self) -> Result<u8, NumericError> {
        let f = self
            .floor()
            .ok_or_else(|| NumericError::AmbiguousDigit(self.0.to_string()))?;
        (f + 1u32)
            .to_u8()
            .ok_or_else(|| NumericError::DigitOverflow(self.0.to_string()))
    }

    /// Interval enclosure at `bits`.
    pub fn enclose(&self, bits: u32) -> Beta {
        Beta(Real::Interval(self.0.enclose(bits)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Beta {
    type Err = NumericError;

    /// `golden`, `p/q`, an integer, or a decimal such as `1.3` (read exactly as 13/10).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || NumericError::Parse(s.to_string());
        if s.eq_ignore_ascii_case("golden") || s.eq_ignore_ascii_case("phi") {
            return Ok(Beta::golden());
        }
        let q = if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            BigRational::new(p, q)
        } else if let Some((int, frac)) = s.split_once('.') {
            if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
                return Err(bad());
            }
            let int: BigInt = if int.is_empty() {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac_val: BigInt = frac.parse().map_err(|_| bad())?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            BigRational::new(int * &scale + frac_val, scale)
        } else {
            BigRational::from_integer(s.parse().map_err(|_| bad())?)
        };
        Beta::new(Real::Rational(q))
    }
}

/// A point of `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitPoint(Real);

impl UnitPoint {
    pub fn new(value: Real) -> Result<Self, NumericError> {
        let ge0 = matches!(
            value.cmp_rational(&BigRational::zero()),
            Some(Ordering::Greater | Ordering::Equal)
        );
        let le1 = matches!(
            value.cmp_rational(&BigRational::one()),
            Some(Ordering::Less | Ordering::Equal)
        );
        let fits = match &value {
            Real::Interval(iv) => {
                iv.lower() >= &BigRational::zero() && iv.upper() <= &BigRational::one()
            }
            _ => ge0 && le1,
        };
        if fits {
            Ok(UnitPoint(value))
        } else {
            Err(NumericError::DomainError(value.to_string()))
        }
    }

    pub fn one() -> Self {
        UnitPoint(Real::integer(1))
    }

    pub fn zero() -> Self {
        UnitPoint(Real::integer(0))
    }

    pub fn rational(numer: i64, denom: i64) -> Result<Self, NumericError> {
        if denom == 0 {
            return Err(NumericError::DivisionByZero);
        }
        Self::new(Real::Rational(ratio(numer, denom)))
    }

    pub fn value(&self) -> &Real {
        &self.0
    }

    pub fn enclose(&self, bits: u32) -> UnitPoint {
        UnitPoint(Real::Interval(self.0.enclose(bits)))
    }

    fn is_exactly_zero(&self) -> bool {
        self.0.is_exact() && self.0.is_zero()
    }
}

impl fmt::Display for UnitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One application of the transformation on `(0, 1]`.
///
/// The digit is `⌊βx⌋ + 1`, i.e. the index of the cell among
/// `(0, 1/β), [1/β, 2/β), …, [⌊β⌋/β, 1]` containing `x`.
pub fn step(beta: &Beta, x: &UnitPoint) -> Result<(u8, UnitPoint), NumericError> {
    match x.0.cmp_rational(&BigRational::zero()) {
        Some(Ordering::Greater) => {}
        Some(_) => return Err(NumericError::DomainError(x.to_string())),
        None => return Err(NumericError::AmbiguousDigit(x.to_string())),
    }
    let y = beta.0.mul(&x.0)?;
    let fl = y
        .floor()
        .ok_or_else(|| NumericError::AmbiguousDigit(x.to_string()))?;
    let digit = &fl + 1u32;
    let next = Real::Rational(BigRational::from_integer(digit.clone())).sub(&y)?;
    let digit = digit
        .to_u8()
        .ok_or_else(|| NumericError::DigitOverflow(digit.to_string()))?;
    Ok((digit, UnitPoint(next)))
}

/// The transformation extended to `[0, 1]` by sending 0 to 1 without a digit.
pub fn step_extended(beta: &Beta, x: &UnitPoint) -> Result<(Option<u8>, UnitPoint), NumericError> {
    if x.is_exactly_zero() {
        return Ok((None, UnitPoint::one()));
    }
    step(beta, x).map(|(d, next)| (Some(d), next))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpansionStatus {
    Complete,
    PrecisionExhausted { at: usize },
}

/// Digits of an expansion together with how many of them are proven.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedDigits {
    pub digits: Word,
    pub certified: usize,
    pub status: ExpansionStatus,
}

/// The first `n` digits of the expansion of `x`. Only certified digits are
/// emitted; an ambiguous digit ends the expansion with `PrecisionExhausted`.
pub fn expand(beta: &Beta, x: &UnitPoint, n: usize) -> Result<CertifiedDigits, NumericError> {
    let mut digits = Vec::with_capacity(n);
    let mut cur = x.clone();
    for i in 0..n {
        match step(beta, &cur) {
            Ok((d, next)) => {
                digits.push(d);
                cur = next;
            }
            Err(NumericError::AmbiguousDigit(_)) => {
                return Ok(CertifiedDigits {
                    digits: Word::from(&digits[..]),
                    certified: i,
                    status: ExpansionStatus::PrecisionExhausted { at: i },
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(CertifiedDigits {
        digits: Word::from(&digits[..]),
        certified: n,
        status: ExpansionStatus::Complete,
    })
}

/// Expansion computed in interval arithmetic at a fixed precision.
pub fn expand_at_precision(
    beta: &Beta,
    x: &UnitPoint,
    n: usize,
    bits: u32,
) -> Result<CertifiedDigits, NumericError> {
    expand(&beta.enclose(bits), &x.enclose(bits), n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            start_bits: 64,
            cap_bits: 4096,
        }
    }
}

/// Interval expansion, doubling the precision after each ambiguous digit
/// until `n` digits are certified or the cap is reached. Returns the digits
/// and the precision that produced them.
pub fn expand_refining(
    beta: &Beta,
    x: &UnitPoint,
    n: usize,
    policy: PrecisionPolicy,
) -> Result<(CertifiedDigits, u32), NumericError> {
    let mut bits = policy.start_bits.max(1);
    loop {
        let out = expand_at_precision(beta, x, n, bits)?;
        if out.status == ExpansionStatus::Complete || bits >= policy.cap_bits {
            return Ok((out, bits));
        }
        bits = (bits * 2).min(policy.cap_bits);
    }
}

/// The orbit of 1 as far as it could be followed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitOfOne {
    pub digits: Word,
    /// `(preperiod, period)` in digits when an exact value repeated.
    pub cycle: Option<(usize, usize)>,
    pub status: ExpansionStatus,
}

impl OrbitOfOne {
    /// The full expansion when a cycle was found.
    pub fn sequence(&self) -> Option<EvPeriodicSeq> {
        let (pre, per) = self.cycle?;
        EvPeriodicSeq::new(&self.digits[..pre], &self.digits[pre..pre + per]).ok()
    }
}

/// Follow `1, T(1), T²(1), …` for up to `horizon` steps, detecting exact
/// repetition of orbit values. Interval values never certify a cycle.
pub fn orbit_of_one(beta: &Beta, horizon: usize) -> Result<OrbitOfOne, NumericError> {
    if !beta.is_exact() {
        let out = expand(beta, &UnitPoint::one(), horizon)?;
        return Ok(OrbitOfOne {
            digits: out.digits,
            cycle: None,
            status: out.status,
        });
    }
    let mut seen: HashMap<UnitPoint, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut cur = UnitPoint::one();
    for i in 0..horizon {
        if let Some(&j) = seen.get(&cur) {
            return Ok(OrbitOfOne {
                digits: Word::from(&digits[..]),
                cycle: Some((j, i - j)),
                status: ExpansionStatus::Complete,
            });
        }
        let (d, next) = step(beta, &cur)?;
        seen.insert(cur, i);
        digits.push(d);
        cur = next;
    }
    let cycle = seen.get(&cur).map(|&j| (j, horizon - j));
    Ok(OrbitOfOne {
        digits: Word::from(&digits[..]),
        cycle,
        status: ExpansionStatus::Complete,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum D1Class {
    PeriodicOdd {
        period: usize,
    },
    PeriodicEven {
        period: usize,
    },
    /// Eventually periodic with a nonempty preperiod, hence not periodic.
    EventuallyPeriodic {
        preperiod: usize,
        period: usize,
    },
    NoCycleDetected {
        horizon: usize,
    },
}

/// Periodicity type of the expansion of 1.
pub fn classify_d1(beta: &Beta, horizon: usize) -> Result<D1Class, NumericError> {
    let orbit = orbit_of_one(beta, horizon)?;
    if let ExpansionStatus::PrecisionExhausted { at } = orbit.status {
        return Err(NumericError::PrecisionExhausted { at });
    }
    Ok(match orbit.cycle {
        Some((0, p)) if p % 2 == 1 => D1Class::PeriodicOdd { period: p },
        Some((0, p)) => D1Class::PeriodicEven { period: p },
        Some((pre, per)) => D1Class::EventuallyPeriodic {
            preperiod: pre,
            period: per,
        },
        None => D1Class::NoCycleDetected { horizon },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GoldenSide {
    AtOrAbove,
    Below,
}

/// Whether the expansion of 1 lies below `21^∞` in the alternating order,
/// which happens exactly when `β < (1 + √5)/2`.
pub fn golden_test(beta: &Beta, horizon: usize) -> Result<GoldenSide, NumericError> {
    let golden = EvPeriodicSeq::new(&[2], &[1]).expect("valid");
    let orbit = orbit_of_one(beta, horizon)?;
    if let Some(seq) = orbit.sequence() {
        return Ok(match alt_cmp_seq(&seq, &golden) {
            Ordering::Less => GoldenSide::Below,
            _ => GoldenSide::AtOrAbove,
        });
    }
    let n = orbit.digits.len();
    match alt_cmp_known(&orbit.digits, &golden.prefix(n)) {
        PrefixOrdering::Less => Ok(GoldenSide::Below),
        PrefixOrdering::Greater => Ok(GoldenSide::AtOrAbove),
        _ => Err(NumericError::Undecidable { prefix_len: n }),
    }
}

fn neg_inverse(beta: &Beta) -> Result<Real, NumericError> {
    beta.0.neg().recip()
}

/// `Σ s_i q^i` over `digits`, `q = -1/β`, returning the sum and `q^len`.
fn weighted_sum(digits: &[u8], q: &Real) -> Result<(Real, Real), NumericError> {
    let mut sum = Real::integer(0);
    let mut pow = Real::integer(1);
    for &d in digits {
        pow = pow.mul(q)?;
        sum = sum.add(&Real::integer(d as i64).mul(&pow)?)?;
    }
    Ok((sum, pow))
}

/// The value `Σ -s_i / (-β)^i` of an eventually periodic digit sequence,
/// summed in closed form.
pub fn psi_value(beta: &Beta, seq: &EvPeriodicSeq) -> Result<Real, NumericError> {
    let q = neg_inverse(beta)?;
    let (pre_sum, pre_pow) = weighted_sum(seq.preperiod(), &q)?;
    let (per_sum, per_pow) = weighted_sum(seq.period(), &q)?;
    let geometric = per_sum.div(&Real::integer(1).sub(&per_pow)?)?;
    let total = pre_sum.add(&pre_pow.mul(&geometric)?)?;
    Ok(total.neg())
}

/// Partial sum of a finite digit prefix together with the tail radius
/// `b / (β^m (β - 1))`, `b` the largest digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiEnclosure {
    pub center: Real,
    pub radius: Real,
}

impl PsiEnclosure {
    /// `Some(true)` when `x` is certainly within the enclosure.
    pub fn contains(&self, x: &Real) -> Option<bool> {
        let lo = self.center.sub(&self.radius).ok()?;
        let hi = self.center.add(&self.radius).ok()?;
        let above = lo.partial_cmp_real(x)?;
        let below = x.partial_cmp_real(&hi)?;
        Some(above != Ordering::Greater && below != Ordering::Greater)
    }
}

pub fn psi_prefix(beta: &Beta, prefix: &[u8]) -> Result<PsiEnclosure, NumericError> {
    let q = neg_inverse(beta)?;
    let (sum, pow) = weighted_sum(prefix, &q)?;
    let b = Real::integer(beta.max_digit()? as i64);
    // |q|^m = |pow|; β^m(β-1) = (β-1)/|q|^m
    let abs_pow = if prefix.len().is_multiple_of(2) {
        pow
    } else {
        pow.neg()
    };
    let beta_minus_one = beta.0.sub(&Real::integer(1))?;
    let radius = b.mul(&abs_pow)?.div(&beta_minus_one)?;
    Ok(PsiEnclosure {
        center: sum.neg(),
        radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digits(c: &CertifiedDigits) -> String {
        c.digits.to_string()
    }

    #[test]
    fn single_steps() {
        let two = Beta::rational(2, 1).unwrap();
        let (d, next) = step(&two, &UnitPoint::one()).unwrap();
        assert_eq!((d, next), (3, UnitPoint::one()));

        let b13 = Beta::rational(13, 10).unwrap();
        let (d, next) = step(&b13, &UnitPoint::one()).unwrap();
        assert_eq!((d, next), (2, UnitPoint::rational(7, 10).unwrap()));

        let (d, next) = step_extended(&b13, &UnitPoint::rational(7, 10).unwrap()).unwrap();
        assert_eq!((d, next), (Some(1), UnitPoint::rational(9, 100).unwrap()));

        let (d, next) = step_extended(&two, &UnitPoint::zero()).unwrap();
        assert_eq!((d, next), (None, UnitPoint::one()));
        let (d, next) = step_extended(&two, &UnitPoint::rational(1, 3).unwrap()).unwrap();
        assert_eq!((d, next), (Some(1), UnitPoint::rational(1, 3).unwrap()));

        assert!(matches!(
            step(&two, &UnitPoint::zero()),
            Err(NumericError::DomainError(_))
        ));
        assert!(UnitPoint::rational(3, 2).is_err());
    }

    #[test]
    fn golden_interval_step() {
        let phi = Beta::golden().enclose(64);
        let (d, next) = step(&phi, &UnitPoint::one().enclose(64)).unwrap();
        assert_eq!(d, 2);
        match next.value() {
            Real::Interval(iv) => {
                assert!((iv.midpoint_f64() - 0.381_966_011_250_105).abs() < 1e-15);
                assert!(iv.width() <= ratio(1, 1 << 60));
            }
            other => panic!("expected interval, got {other}"),
        }
    }

    #[test]
    fn ambiguous_interval_digit() {
        let b = Beta::new(Real::Interval(
            Interval::new(ratio(19, 10), ratio(21, 10), 16).unwrap(),
        ))
        .unwrap();
        assert!(matches!(
            step(&b, &UnitPoint::one()),
            Err(NumericError::AmbiguousDigit(_))
        ));
        let out = expand(&b, &UnitPoint::one(), 5).unwrap();
        assert_eq!(out.certified, 0);
        assert_eq!(out.status, ExpansionStatus::PrecisionExhausted { at: 0 });
    }

    #[test]
    fn expansions() {
        let two = Beta::rational(2, 1).unwrap();
        let out = expand(&two, &UnitPoint::one(), 5).unwrap();
        assert_eq!((digits(&out), out.certified), ("33333".into(), 5));
        let b13 = Beta::rational(13, 10).unwrap();
        assert_eq!(digits(&expand(&b13, &UnitPoint::one(), 4).unwrap()), "2112");
        let golden = expand(&Beta::golden(), &UnitPoint::one(), 6).unwrap();
        assert_eq!(digits(&golden), "211111");
        let golden_iv = expand_at_precision(&Beta::golden(), &UnitPoint::one(), 6, 64).unwrap();
        assert_eq!(digits(&golden_iv), "211111");
        let b52 = Beta::rational(5, 2).unwrap();
        assert!(digits(&expand(&b52, &UnitPoint::one(), 4).unwrap()).starts_with("3221"));
    }

    #[test]
    fn refinement_reaches_requested_length() {
        let b13 = Beta::rational(13, 10).unwrap();
        let policy = PrecisionPolicy {
            start_bits: 4,
            cap_bits: 256,
        };
        let (out, bits) = expand_refining(&b13, &UnitPoint::one(), 30, policy).unwrap();
        assert_eq!(out.status, ExpansionStatus::Complete);
        assert!(bits > 4);
        let exact = expand(&b13, &UnitPoint::one(), 30).unwrap();
        assert_eq!(out.digits, exact.digits);
    }

    #[test]
    fn classification() {
        let two = Beta::rational(2, 1).unwrap();
        assert_eq!(
            classify_d1(&two, 10).unwrap(),
            D1Class::PeriodicOdd { period: 1 }
        );
        let b13 = Beta::rational(13, 10).unwrap();
        assert_eq!(
            classify_d1(&b13, 1000).unwrap(),
            D1Class::NoCycleDetected { horizon: 1000 }
        );
        assert_eq!(
            classify_d1(&Beta::golden(), 10).unwrap(),
            D1Class::EventuallyPeriodic {
                preperiod: 1,
                period: 1
            }
        );
        assert_eq!(
            classify_d1(&Beta::golden().enclose(128), 10).unwrap(),
            D1Class::NoCycleDetected { horizon: 10 }
        );
        let orbit = orbit_of_one(&Beta::golden(), 10).unwrap();
        assert_eq!(orbit.sequence().unwrap().to_string(), "2|1");
    }

    #[test]
    fn golden_comparison() {
        assert_eq!(
            golden_test(&Beta::rational(13, 10).unwrap(), 50).unwrap(),
            GoldenSide::Below
        );
        assert_eq!(
            golden_test(&Beta::rational(2, 1).unwrap(), 50).unwrap(),
            GoldenSide::AtOrAbove
        );
        assert_eq!(
            golden_test(&Beta::golden(), 50).unwrap(),
            GoldenSide::AtOrAbove
        );
        assert_eq!(
            golden_test(&Beta::rational(16, 10).unwrap(), 50).unwrap(),
            GoldenSide::Below
        );
        assert_eq!(
            golden_test(&Beta::rational(162, 100).unwrap(), 50).unwrap(),
            GoldenSide::AtOrAbove
        );
        assert!(matches!(
            golden_test(&Beta::golden().enclose(256), 20),
            Err(NumericError::Undecidable { prefix_len: 20 })
        ));
    }

    #[test]
    fn psi_closed_forms() {
        let b = Beta::rational(7, 3).unwrap();
        let ones = EvPeriodicSeq::periodic(&[1]).unwrap();
        assert_eq!(
            psi_value(&b, &ones).unwrap(),
            Real::Rational(ratio(3, 10)) // 1/(β+1)
        );
        let two = Beta::rational(2, 1).unwrap();
        let threes = EvPeriodicSeq::periodic(&[3]).unwrap();
        assert_eq!(psi_value(&two, &threes).unwrap(), Real::integer(1));
        let phi = Beta::golden();
        let d = EvPeriodicSeq::new(&[2], &[1]).unwrap();
        let v = psi_value(&phi, &d).unwrap();
        assert_eq!(v.partial_cmp_real(&Real::integer(1)), Some(Ordering::Equal));
        let b13 = Beta::rational(13, 10).unwrap();
        let enc = psi_prefix(&b13, &[2, 1, 1, 2]).unwrap();
        assert_eq!(enc.contains(&Real::integer(1)), Some(true));
    }

    #[test]
    fn parse_beta() {
        assert_eq!(
            "1.3".parse::<Beta>().unwrap(),
            Beta::rational(13, 10).unwrap()
        );
        assert_eq!(
            "5/2".parse::<Beta>().unwrap(),
            Beta::rational(5, 2).unwrap()
        );
        assert_eq!("2".parse::<Beta>().unwrap(), Beta::rational(2, 1).unwrap());
        assert_eq!("golden".parse::<Beta>().unwrap(), Beta::golden());
        assert!("0.5".parse::<Beta>().is_err());
        assert!("1/0".parse::<Beta>().is_err());
        assert!("abc".parse::<Beta>().is_err());
    }
}
