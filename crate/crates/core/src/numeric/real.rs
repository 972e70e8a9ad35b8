use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::NumericError;

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// Largest dyadic `k / 2^bits` not above `q`.
pub(crate) fn round_down(q: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let scaled = q * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

/// Smallest dyadic `k / 2^bits` not below `q`.
pub(crate) fn round_up(q: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let scaled = q * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

/// `a + b·√d` with rational `a`, `b` and a squarefree `d > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: BigRational, b: BigRational, d: impl Into<BigInt>) -> Result<Self, NumericError> {
        let d = d.into();
        if d <= BigInt::one() || !is_squarefree(&d) {
            return Err(NumericError::BadRadicand(d.to_string()));
        }
        Ok(QuadraticSurd { a, b, d })
    }

    /// `(1 + √5) / 2`.
    pub fn golden() -> Self {
        QuadraticSurd {
            a: ratio(1, 2),
            b: ratio(1, 2),
            d: BigInt::from(5),
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    fn lift(&self, q: &BigRational) -> Self {
        QuadraticSurd {
            a: q.clone(),
            b: BigRational::zero(),
            d: self.d.clone(),
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), NumericError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(NumericError::IncompatibleFields)
        }
    }

    fn add(&self, o: &Self) -> Self {
        QuadraticSurd {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: self.d.clone(),
        }
    }

    fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let d = BigRational::from_integer(self.d.clone());
        QuadraticSurd {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }

    fn recip(&self) -> Result<Self, NumericError> {
        let d = BigRational::from_integer(self.d.clone());
        let norm = &self.a * &self.a - &self.b * &self.b * d;
        if norm.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(QuadraticSurd {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d.clone(),
        })
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let d = BigRational::from_integer(self.d.clone());
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * d)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // Irrational, so refinement always separates it from the integers.
        let mut bits = 32;
        loop {
            let iv = self.enclose(bits);
            let lo = iv.lo.floor().to_integer();
            if lo == iv.hi.floor().to_integer() {
                return lo;
            }
            bits *= 2;
        }
    }

    /// Dyadic enclosure of width about `2^-bits` (times `|b|`).
    pub fn enclose(&self, bits: u32) -> Interval {
        let scale = pow2(bits);
        let root_lo = (&self.d * &scale * &scale).sqrt();
        let root_hi = &root_lo + BigInt::one();
        let s_lo = BigRational::new(root_lo, scale.clone());
        let s_hi = BigRational::new(root_hi, scale);
        let (p, q) = (&self.b * &s_lo, &self.b * &s_hi);
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        Interval::from_bounds(&self.a + lo, &self.a + hi, bits)
    }
}

fn is_squarefree(d: &BigInt) -> bool {
    let mut p = BigInt::from(2);
    while &p * &p <= *d {
        if (d % (&p * &p)).is_zero() {
            return false;
        }
        p += 1;
    }
    true
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

/// A closed interval with dyadic endpoints, rounded outward to `bits`
/// fractional bits after every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
    bits: u32,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational, bits: u32) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::EmptyInterval);
        }
        Ok(Self::from_bounds(lo, hi, bits))
    }

    fn from_bounds(lo: BigRational, hi: BigRational, bits: u32) -> Self {
        Interval {
            lo: round_down(&lo, bits),
            hi: round_up(&hi, bits),
            bits,
        }
    }

    pub fn enclose(q: &BigRational, bits: u32) -> Self {
        Self::from_bounds(q.clone(), q.clone(), bits)
    }

    pub fn lower(&self) -> &BigRational {
        &self.lo
    }

    pub fn upper(&self) -> &BigRational {
        &self.hi
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        super::to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    fn add(&self, o: &Self) -> Self {
        let bits = self.bits.max(o.bits);
        Self::from_bounds(&self.lo + &o.lo, &self.hi + &o.hi, bits)
    }

    fn neg(&self) -> Self {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let bits = self.bits.max(o.bits);
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = products.iter().min().cloned().expect("nonempty");
        let hi = products.iter().max().cloned().expect("nonempty");
        Self::from_bounds(lo, hi, bits)
    }

    fn recip(&self) -> Result<Self, NumericError> {
        if self.lo.is_positive() || self.hi.is_negative() {
            Ok(Self::from_bounds(
                self.hi.recip(),
                self.lo.recip(),
                self.bits,
            ))
        } else {
            Err(NumericError::DivisionByZero)
        }
    }

    fn floor(&self) -> Option<BigInt> {
        let lo = self.lo.floor().to_integer();
        (lo == self.hi.floor().to_integer()).then_some(lo)
    }

    fn cmp_rational(&self, q: &BigRational) -> Option<Ordering> {
        if &self.hi < q {
            Some(Ordering::Less)
        } else if &self.lo > q {
            Some(Ordering::Greater)
        } else if self.lo == self.hi {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]@{}", self.lo, self.hi, self.bits)
    }
}

/// A real number in one of the supported representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Real {
    Rational(BigRational),
    Quadratic(QuadraticSurd),
    Interval(Interval),
}

impl Real {
    pub fn integer(n: i64) -> Self {
        Real::Rational(BigRational::from_integer(n.into()))
    }

    /// `n/d`. Panics when `d = 0`.
    pub fn rational(n: i64, d: i64) -> Self {
        Real::Rational(ratio(n, d))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Real::Interval(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Real::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Enclosure at `bits`. An existing interval is returned unchanged.
    pub fn enclose(&self, bits: u32) -> Interval {
        match self {
            Real::Rational(q) => Interval::enclose(q, bits),
            Real::Quadratic(s) => s.enclose(bits),
            Real::Interval(iv) => iv.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(q) => super::to_f64(q),
            Real::Quadratic(s) => s.enclose(64).midpoint_f64(),
            Real::Interval(iv) => iv.midpoint_f64(),
        }
    }

    fn bits(&self) -> u32 {
        match self {
            Real::Interval(iv) => iv.bits,
            _ => 0,
        }
    }

    fn binary(
        &self,
        o: &Real,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        quad: impl Fn(&QuadraticSurd, &QuadraticSurd) -> QuadraticSurd,
        iv: impl Fn(&Interval, &Interval) -> Interval,
    ) -> Result<Real, NumericError> {
        use Real::*;
        Ok(match (self, o) {
            (Rational(x), Rational(y)) => Rational(rat(x, y)),
            (Quadratic(x), Quadratic(y)) => {
                x.same_field(y)?;
                Real::from(quad(x, y))
            }
            (Quadratic(x), Rational(y)) => Real::from(quad(x, &x.lift(y))),
            (Rational(x), Quadratic(y)) => Real::from(quad(&y.lift(x), y)),
            _ => {
                let bits = self.bits().max(o.bits());
                Interval(iv(&self.enclose(bits), &o.enclose(bits)))
            }
        })
    }

    pub fn add(&self, o: &Real) -> Result<Real, NumericError> {
        self.binary(o, |x, y| x + y, QuadraticSurd::add, Interval::add)
    }

    pub fn sub(&self, o: &Real) -> Result<Real, NumericError> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Real) -> Result<Real, NumericError> {
        self.binary(o, |x, y| x * y, QuadraticSurd::mul, Interval::mul)
    }

    pub fn div(&self, o: &Real) -> Result<Real, NumericError> {
        self.mul(&o.recip()?)
    }

    pub fn neg(&self) -> Real {
        match self {
            Real::Rational(q) => Real::Rational(-q),
            Real::Quadratic(s) => Real::Quadratic(s.neg()),
            Real::Interval(iv) => Real::Interval(iv.neg()),
        }
    }

    pub fn recip(&self) -> Result<Real, NumericError> {
        match self {
            Real::Rational(q) if q.is_zero() => Err(NumericError::DivisionByZero),
            Real::Rational(q) => Ok(Real::Rational(q.recip())),
            Real::Quadratic(s) => s.recip().map(Real::from),
            Real::Interval(iv) => iv.recip().map(Real::Interval),
        }
    }

    /// `⌊self⌋`, or `None` when an interval straddles an integer.
    pub fn floor(&self) -> Option<BigInt> {
        match self {
            Real::Rational(q) => Some(q.floor().to_integer()),
            Real::Quadratic(s) => Some(s.floor()),
            Real::Interval(iv) => iv.floor(),
        }
    }

    /// Comparison with a rational, `None` when an interval cannot decide it.
    pub fn cmp_rational(&self, q: &BigRational) -> Option<Ordering> {
        match self {
            Real::Rational(x) => Some(x.cmp(q)),
            Real::Quadratic(s) => Some(s.add(&s.lift(&-q)).signum()),
            Real::Interval(iv) => iv.cmp_rational(q),
        }
    }

    /// Comparison of two reals, `None` when undecidable at the current precision.
    pub fn partial_cmp_real(&self, o: &Real) -> Option<Ordering> {
        match self.sub(o).ok()? {
            Real::Interval(iv) => iv.cmp_rational(&BigRational::zero()),
            Real::Rational(q) => Some(q.cmp(&BigRational::zero())),
            Real::Quadratic(s) => Some(s.signum()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cmp_rational(&BigRational::zero()) == Some(Ordering::Equal)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(q) => write!(f, "{q}"),
            Real::Quadratic(s) => write!(f, "{s}"),
            Real::Interval(iv) => write!(f, "{iv}"),
        }
    }
}

impl From<BigRational> for Real {
    fn from(q: BigRational) -> Self {
        Real::Rational(q)
    }
}

impl From<QuadraticSurd> for Real {
    /// Collapses to a rational when the surd part vanishes.
    fn from(s: QuadraticSurd) -> Self {
        if s.b.is_zero() {
            Real::Rational(s.a)
        } else {
            Real::Quadratic(s)
        }
    }
}

impl From<Interval> for Real {
    fn from(iv: Interval) -> Self {
        Real::Interval(iv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_surd_arithmetic() {
        let phi = Real::Quadratic(QuadraticSurd::golden());
        let sq = phi.mul(&phi).unwrap();
        // φ² = φ + 1
        let rhs = phi.add(&Real::integer(1)).unwrap();
        assert_eq!(sq.partial_cmp_real(&rhs), Some(Ordering::Equal));
        assert_eq!(phi.floor(), Some(BigInt::from(1)));
        let inv = phi.recip().unwrap();
        assert_eq!(
            inv.partial_cmp_real(&phi.sub(&Real::integer(1)).unwrap()),
            Some(Ordering::Equal)
        );
        let iv = QuadraticSurd::golden().enclose(64);
        assert!(iv.width() <= ratio(1, 1 << 62));
        assert!((iv.midpoint_f64() - 1.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn surd_sign_cases() {
        let s = QuadraticSurd::new(ratio(3, 1), ratio(-1, 1), 5).unwrap();
        assert_eq!(s.signum(), Ordering::Greater); // 3 - √5
        let s = QuadraticSurd::new(ratio(2, 1), ratio(-1, 1), 5).unwrap();
        assert_eq!(s.signum(), Ordering::Less); // 2 - √5
        assert!(QuadraticSurd::new(ratio(0, 1), ratio(1, 1), 8).is_err());
    }

    #[test]
    fn interval_rounding_is_outward() {
        let third = ratio(1, 3);
        let iv = Interval::enclose(&third, 10);
        assert!(iv.contains(&third));
        assert!(iv.width() <= ratio(1, 1024));
        let p = Real::Interval(iv.clone()).mul(&Real::Interval(iv)).unwrap();
        match p {
            Real::Interval(p) => assert!(p.contains(&ratio(1, 9))),
            _ => unreachable!(),
        }
        let straddle = Interval::new(ratio(9, 10), ratio(11, 10), 8).unwrap();
        assert_eq!(Real::Interval(straddle).floor(), None);
    }
}
