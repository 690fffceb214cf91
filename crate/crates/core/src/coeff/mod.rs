//! Coefficient fields: `Q(k, p0)` for symbolic work and `Q` for specialized
//! parameters, behind one [`Coeff`] trait so the rest of the engine is
//! written once.

mod bpoly;
mod ratfunc;
pub mod text;
mod upoly;

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use bpoly::BPoly;
pub use ratfunc::{ParamPoly, ParamRat};
pub use text::{parse_rational, Expr};
pub use upoly::UPoly;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at k = {k}, p0 = {p0}: denominator {denominator} vanishes")]
    PoleAtSpecialization { denominator: String, k: String, p0: String },
    #[error("denominator {denominator} vanishes identically at k = {k}")]
    IdenticallySingular { denominator: String, k: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Field operations needed by the symmetric-function engine.
pub trait Coeff: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, other: &Self) -> Result<Self, CoeffError>;

    fn mul_int(&self, n: i64) -> Self {
        if n == 1 {
            return self.clone();
        }
        self.mul(&Self::from_i64(n))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Coeff for ParamRat {
    fn zero() -> Self {
        ParamRat::zero()
    }
    fn one() -> Self {
        ParamRat::one()
    }
    fn from_i64(n: i64) -> Self {
        ParamRat::from_int(n)
    }
    fn from_rational(q: &BigRational) -> Self {
        ParamRat::from_rational(q.clone())
    }
    fn is_zero(&self) -> bool {
        ParamRat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        ParamRat::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        self.checked_div(other)
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        if Zero::is_zero(other) {
            Err(CoeffError::DivisionByZero)
        } else {
            Ok(self / other)
        }
    }
}

/// Values of the two parameters inside a coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<C> {
    pub k: C,
    pub p0: C,
}

impl Params<ParamRat> {
    /// Both parameters symbolic.
    pub fn symbolic() -> Self {
        Params {
            k: ParamRat::k(),
            p0: ParamRat::p0(),
        }
    }

    /// The dual parameters `(1/k, k*p0)`.
    pub fn theta_dual() -> Self {
        Params {
            k: ParamRat::k().inv().expect("k is nonzero"),
            p0: &ParamRat::k() * &ParamRat::p0(),
        }
    }

    /// `k` symbolic with `p0` fixed to a number.
    pub fn with_p0(p0: &BigRational) -> Self {
        Params {
            k: ParamRat::k(),
            p0: ParamRat::from_rational(p0.clone()),
        }
    }
}

impl Params<BigRational> {
    pub fn numeric(k: BigRational, p0: BigRational) -> Self {
        Params { k, p0 }
    }
}

/// Exact rational from a pair of integers.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact-arithmetic field operation selector used by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &ParamRat, b: &ParamRat, op: FieldOp) -> Result<ParamRat, CoeffError> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ParamRat {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_product() {
        let v = field_arith(&ParamRat::k(), &ParamRat::p0(), FieldOp::Mul).unwrap();
        assert_eq!(v, r("k*p0"));
        assert_eq!(v.to_string(), "k*p0");
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = r("1/(1 + k - k*p0)");
        let b = r("1 + k - k*p0");
        assert!(field_arith(&a, &b, FieldOp::Mul).unwrap().is_one());
    }

    #[test]
    fn gcd_reduction_of_difference_of_squares() {
        let a = r("(k^2 - 1)/(k + 1)");
        let s = field_arith(&a, &ParamRat::zero(), FieldOp::Add).unwrap();
        assert_eq!(s, r("k - 1"));
        // multiplying back recovers the unreduced numerator
        assert_eq!(&s * &r("k + 1"), r("k^2 - 1"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            field_arith(&ParamRat::k(), &ParamRat::zero(), FieldOp::Div),
            Err(CoeffError::DivisionByZero)
        );
    }

    #[test]
    fn specialize_examples() {
        let f = r("p0/(1 + k - k*p0)");
        assert_eq!(f.specialize(&q(-1, 1), &q(5, 1)).unwrap(), q(1, 1));
        assert_eq!(ParamRat::k().specialize(&q(3, 7), &q(2, 1)).unwrap(), q(3, 7));
        let g = r("1/(k + 1)");
        assert!(matches!(
            g.specialize(&q(-1, 1), &q(2, 1)),
            Err(CoeffError::PoleAtSpecialization { .. })
        ));
    }

    #[test]
    fn substitute_k_examples() {
        let f = r("p0/(1 + k - k*p0)");
        assert!(f.substitute_k(&q(-1, 1)).unwrap().is_one());
        assert_eq!(r("p0^2").substitute_k(&q(-1, 1)).unwrap(), r("p0^2"));
        let g = r("(k+1)*(p0 + 3)/((k+1)*(p0 - 2))");
        assert_eq!(g.substitute_k(&q(-1, 1)).unwrap(), r("(p0+3)/(p0-2)"));
        let h = r("1/(k+1)");
        assert!(matches!(
            h.substitute_k(&q(-1, 1)),
            Err(CoeffError::IdenticallySingular { .. })
        ));
    }

    #[test]
    fn printing_is_canonical() {
        let f = r("(-1*p0)/(1 + k - k*p0)");
        assert_eq!(f.to_string(), "(p0)/(-1 - k + k*p0)");
        assert_eq!(r("1/2*p0 + 1/3").to_string(), "(2 + 3*p0)/(6)");
        assert_eq!(r("0").to_string(), "0");
    }

    #[test]
    fn substitute_theta_dual() {
        // k -> 1/k, p0 -> k p0 on 1 + k - k p0 gives 1 + 1/k - p0
        let f = r("1 + k - k*p0");
        let d = Params::theta_dual();
        assert_eq!(f.substitute(&d.k, &d.p0).unwrap(), r("1 + 1/k - p0"));
    }

    #[test]
    fn p0_substitution() {
        let f = r("p0/(1 + k - k*p0)");
        assert_eq!(f.substitute_p0(&q(3, 1)).unwrap(), r("3/(1 - 2*k)"));
    }
}
