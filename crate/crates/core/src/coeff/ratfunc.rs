//! Exact rational functions in the parameters `k` and `p0`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bpoly::BPoly;
use super::upoly::UPoly;
use super::CoeffError;

/// An element of `Q(k, p0)` in canonical form.
///
/// The value is `scale * num / den` where `num` and `den` are integer
/// polynomials with unit content, positive graded-lex leading coefficient,
/// and no common factor. Zero is `scale = 0, num = den = 1`. Canonical form
/// makes structural equality coincide with equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamRat {
    scale: BigRational,
    num: BPoly,
    den: BPoly,
}

/// A polynomial in `k, p0` with rational coefficients, as a sorted list of
/// `((deg_k, deg_p0), coefficient)` pairs with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    pub terms: Vec<((usize, usize), BigRational)>,
}

impl ParamRat {
    pub fn zero() -> Self {
        ParamRat {
            scale: BigRational::zero(),
            num: BPoly::one(),
            den: BPoly::one(),
        }
    }

    pub fn one() -> Self {
        ParamRat::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ParamRat::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ParamRat::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        ParamRat {
            scale: q,
            num: BPoly::one(),
            den: BPoly::one(),
        }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        ParamRat::from_rational(BigRational::new(n.into(), d.into()))
    }

    /// The parameter `k`.
    pub fn k() -> Self {
        ParamRat::from_poly(BPoly::k())
    }

    /// The parameter `p0`.
    pub fn p0() -> Self {
        ParamRat::from_poly(BPoly::p0())
    }

    /// Lift an integer polynomial.
    pub fn from_poly(p: BPoly) -> Self {
        let (c, n) = p.primitive_with_factor();
        if c.is_zero() {
            return ParamRat::zero();
        }
        ParamRat {
            scale: BigRational::from_integer(c),
            num: n,
            den: BPoly::one(),
        }
    }

    /// `n / d` for integer polynomials, reduced.
    pub fn from_polys(n: BPoly, d: BPoly) -> Result<Self, CoeffError> {
        if d.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let (cn, n) = n.primitive_with_factor();
        if cn.is_zero() {
            return Ok(ParamRat::zero());
        }
        let (cd, d) = d.primitive_with_factor();
        Ok(ParamRat::assemble(BigRational::new(cn, cd), n, d))
    }

    /// Combine a scale with primitive, sign-normalized `n`, `d` that may share
    /// a factor.
    fn assemble(scale: BigRational, n: BPoly, d: BPoly) -> Self {
        if scale.is_zero() {
            return ParamRat::zero();
        }
        if d.is_one() || n.is_one() && d.is_constant() {
            return ParamRat { scale, num: n, den: d };
        }
        let g = n.gcd(&d);
        if g.is_one() {
            return ParamRat { scale, num: n, den: d };
        }
        let n2 = n.exact_div(&g).expect("gcd divides numerator");
        let d2 = d.exact_div(&g).expect("gcd divides denominator");
        let (cn, n2) = n2.primitive_with_factor();
        let (cd, d2) = d2.primitive_with_factor();
        ParamRat {
            scale: scale * BigRational::new(cn, cd),
            num: n2,
            den: d2,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scale.is_one() && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number if it involves neither parameter.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.is_one() && self.den.is_one() {
            Some(self.scale.clone())
        } else {
            None
        }
    }

    pub fn contains_p0(&self) -> bool {
        !self.is_zero() && (self.num.deg_p0().unwrap_or(0) > 0 || self.den.deg_p0().unwrap_or(0) > 0)
    }

    pub fn contains_k(&self) -> bool {
        !self.is_zero() && (self.num.deg_k().unwrap_or(0) > 0 || self.den.deg_k().unwrap_or(0) > 0)
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn num_poly(&self) -> &BPoly {
        &self.num
    }

    pub fn den_poly(&self) -> &BPoly {
        &self.den
    }

    /// Numerator with the rational scale folded in.
    pub fn numerator(&self) -> ParamPoly {
        if self.is_zero() {
            return ParamPoly::default();
        }
        let mut terms: Vec<_> = self
            .num
            .terms()
            .map(|(i, j, c)| ((i, j), &self.scale * BigRational::from_integer(c.clone())))
            .collect();
        terms.sort_by_key(|a| a.0);
        ParamPoly { terms }
    }

    pub fn denominator(&self) -> ParamPoly {
        let mut terms: Vec<_> = self
            .den
            .terms()
            .map(|(i, j, c)| ((i, j), BigRational::from_integer(c.clone())))
            .collect();
        terms.sort_by_key(|a| a.0);
        ParamPoly { terms }
    }

    /// Integer numerator and denominator: value = `num_int / den_int`.
    pub fn integer_parts(&self) -> (BPoly, BPoly) {
        if self.is_zero() {
            return (BPoly::zero(), BPoly::one());
        }
        (self.num.scale(self.scale.numer()), self.den.scale(self.scale.denom()))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        // den/num, re-normalizing sign: num has positive lc already.
        Ok(ParamRat {
            scale: self.scale.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn checked_div(&self, other: &ParamRat) -> Result<Self, CoeffError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> ParamRat {
        let mut acc = ParamRat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn specialize(&self, k0: &BigRational, p00: &BigRational) -> Result<BigRational, CoeffError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let d = self.den.eval(k0, p00);
        if d.is_zero() {
            return Err(CoeffError::PoleAtSpecialization {
                denominator: self.denominator_text(),
                k: k0.to_string(),
                p0: p00.to_string(),
            });
        }
        Ok(&self.scale * self.num.eval(k0, p00) / d)
    }

    /// Set `k = k0`, keeping `p0` symbolic.
    pub fn substitute_k(&self, k0: &BigRational) -> Result<ParamRat, CoeffError> {
        if self.is_zero() {
            return Ok(ParamRat::zero());
        }
        let (dn, dn_scale) = self.den.eval_k(k0);
        if dn.is_zero() {
            return Err(CoeffError::IdenticallySingular {
                denominator: self.denominator_text(),
                k: k0.to_string(),
            });
        }
        let (nn, nn_scale) = self.num.eval_k(k0);
        // value = scale * (nn / nn_scale) / (dn / dn_scale)
        let q = &self.scale * BigRational::new(dn_scale, nn_scale);
        let r = ParamRat::from_polys(BPoly::from_p0_poly(nn), BPoly::from_p0_poly(dn))?;
        Ok(&r * &ParamRat::from_rational(q))
    }

    /// Set `p0 = p00`, keeping `k` symbolic.
    pub fn substitute_p0(&self, p00: &BigRational) -> Result<ParamRat, CoeffError> {
        let t = self.swap_params();
        let r = t.substitute_k(p00).map_err(|e| match e {
            CoeffError::IdenticallySingular { denominator, .. } => CoeffError::PoleAtSpecialization {
                denominator,
                k: "k".into(),
                p0: p00.to_string(),
            },
            other => other,
        })?;
        Ok(r.swap_params())
    }

    /// Exchange the two parameter symbols.
    pub fn swap_params(&self) -> ParamRat {
        if self.is_zero() {
            return ParamRat::zero();
        }
        let n = self.num.transpose();
        let d = self.den.transpose();
        // Transposition can change which term leads in graded-lex order.
        let (cn, n) = n.primitive_with_factor();
        let (cd, d) = d.primitive_with_factor();
        ParamRat {
            scale: &self.scale * BigRational::new(cn, cd),
            num: n,
            den: d,
        }
    }

    /// General substitution `k -> kv, p0 -> pv` inside the field.
    pub fn substitute(&self, kv: &ParamRat, pv: &ParamRat) -> Result<ParamRat, CoeffError> {
        if self.is_zero() {
            return Ok(ParamRat::zero());
        }
        let n = eval_bpoly(&self.num, kv, pv);
        let d = eval_bpoly(&self.den, kv, pv);
        if d.is_zero() {
            return Err(CoeffError::IdenticallySingular {
                denominator: self.denominator_text(),
                k: kv.to_string(),
            });
        }
        Ok(&(&ParamRat::from_rational(self.scale.clone()) * &n) * &d.inv()?)
    }

    /// Degree in `p0` of numerator and denominator.
    pub fn p0_degrees(&self) -> (usize, usize) {
        (self.num.deg_p0().unwrap_or(0), self.den.deg_p0().unwrap_or(0))
    }

    /// Coefficient of the top power of `p0` in the numerator and denominator,
    /// as rational functions of `k` (the denominator one without scale).
    pub fn p0_leading(&self) -> (ParamRat, ParamRat) {
        let top = |p: &BPoly| -> BPoly {
            let d = p.deg_p0().unwrap_or(0);
            BPoly::from_rows(
                p.rows()
                    .iter()
                    .map(|r| UPoly::constant(r.coeffs().get(d).cloned().unwrap_or_else(BigInt::zero)))
                    .collect(),
            )
        };
        let n = ParamRat::from_poly(top(&self.num));
        let n = &n * &ParamRat::from_rational(self.scale.clone());
        (n, ParamRat::from_poly(top(&self.den)))
    }

    fn denominator_text(&self) -> String {
        super::text::poly_to_string(&self.den)
    }
}

fn eval_bpoly(p: &BPoly, kv: &ParamRat, pv: &ParamRat) -> ParamRat {
    let mut acc = ParamRat::zero();
    for r in p.rows().iter().rev() {
        let mut inner = ParamRat::zero();
        for c in r.coeffs().iter().rev() {
            inner = &(&inner * pv) + &ParamRat::from_bigint(c.clone());
        }
        acc = &(&acc * kv) + &inner;
    }
    acc
}

fn combine_scales(a: &BigRational, b: &BigRational) -> (BigInt, BigInt, BigInt) {
    // a = pa/qa, b = pb/qb; returns (pa*L/qa, pb*L/qb, L).
    use num_integer::Integer;
    let l = a.denom().lcm(b.denom());
    let fa = a.numer() * (&l / a.denom());
    let fb = b.numer() * (&l / b.denom());
    (fa, fb, l)
}

impl<'a> Add<&'a ParamRat> for &'a ParamRat {
    type Output = ParamRat;

    fn add(self, other: &'a ParamRat) -> ParamRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (fa, fb, l) = combine_scales(&self.scale, &other.scale);
        if self.den == other.den {
            let n = if self.num == other.num {
                self.num.scale(&(fa + fb))
            } else {
                self.num.scale(&fa).add(&other.num.scale(&fb))
            };
            let (c, n) = n.primitive_with_factor();
            if c.is_zero() {
                return ParamRat::zero();
            }
            return ParamRat::assemble(BigRational::new(c, l), n, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                other.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let n = self.num.scale(&fa).mul(&db).add(&other.num.scale(&fb).mul(&da));
        let (c, n) = n.primitive_with_factor();
        if c.is_zero() {
            return ParamRat::zero();
        }
        let den = self.den.mul(&db);
        if g.is_one() {
            return ParamRat {
                scale: BigRational::new(c, l),
                num: n,
                den,
            };
        }
        let h = n.gcd(&g);
        if h.is_one() {
            return ParamRat {
                scale: BigRational::new(c, l),
                num: n,
                den,
            };
        }
        let (cn, n) = n.exact_div(&h).expect("gcd divides").primitive_with_factor();
        let (cd, den) = den.exact_div(&h).expect("gcd divides").primitive_with_factor();
        ParamRat {
            scale: BigRational::new(c * cn, l * cd),
            num: n,
            den,
        }
    }
}

impl<'a> Sub<&'a ParamRat> for &'a ParamRat {
    type Output = ParamRat;

    fn sub(self, other: &'a ParamRat) -> ParamRat {
        self + &(-other)
    }
}

impl Neg for &ParamRat {
    type Output = ParamRat;

    fn neg(self) -> ParamRat {
        ParamRat {
            scale: -&self.scale,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamRat {
    type Output = ParamRat;

    fn neg(mut self) -> ParamRat {
        self.scale = -self.scale;
        self
    }
}

impl<'a> Mul<&'a ParamRat> for &'a ParamRat {
    type Output = ParamRat;

    fn mul(self, other: &'a ParamRat) -> ParamRat {
        if self.is_zero() || other.is_zero() {
            return ParamRat::zero();
        }
        let scale = &self.scale * &other.scale;
        if self.den.is_one() && other.den.is_one() {
            return ParamRat {
                scale,
                num: self.num.mul(&other.num),
                den: BPoly::one(),
            };
        }
        let g1 = if other.den.is_one() {
            BPoly::one()
        } else {
            self.num.gcd(&other.den)
        };
        let g2 = if self.den.is_one() {
            BPoly::one()
        } else {
            other.num.gcd(&self.den)
        };
        let na = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.exact_div(&g1).unwrap()
        };
        let db = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.exact_div(&g1).unwrap()
        };
        let nb = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.exact_div(&g2).unwrap()
        };
        let da = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2).unwrap()
        };
        let (cn, num) = na.mul(&nb).primitive_with_factor();
        let (cd, den) = da.mul(&db).primitive_with_factor();
        ParamRat {
            scale: scale * BigRational::new(cn, cd),
            num,
            den,
        }
    }
}

impl<'a> Div<&'a ParamRat> for &'a ParamRat {
    type Output = ParamRat;

    /// Panics on division by zero; use [`ParamRat::checked_div`] otherwise.
    fn div(self, other: &'a ParamRat) -> ParamRat {
        self.checked_div(other).expect("division by zero in Q(k, p0)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamRat> for ParamRat {
            type Output = ParamRat;
            fn $m(self, other: ParamRat) -> ParamRat {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::ratfunc_to_string(self))
    }
}

impl fmt::Debug for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamRat({self})")
    }
}

impl From<i64> for ParamRat {
    fn from(n: i64) -> Self {
        ParamRat::from_int(n)
    }
}

impl From<BigRational> for ParamRat {
    fn from(q: BigRational) -> Self {
        ParamRat::from_rational(q)
    }
}

impl ParamRat {
    /// Sign of the value as seen from the canonical scale.
    pub fn scale_is_negative(&self) -> bool {
        self.scale.is_negative()
    }
}
