//! Dense univariate polynomials over the integers.
//!
//! These are the coefficient ring for [`BPoly`](super::bpoly::BPoly) when it is
//! viewed as a polynomial in `k` over `Z[p0]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(pub(crate) Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = UPoly(c);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, s) in out.iter_mut().zip(short.0.iter()) {
            *o += s;
        }
        UPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        if self.0.len() == 1 {
            return other.scale(&self.0[0]);
        }
        if other.0.len() == 1 {
            return self.scale(&other.0[0]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|x| x * c).collect())
    }

    /// Multiply by `x^n`.
    pub fn shift(&self, n: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigInt::zero(); n];
        out.extend(self.0.iter().cloned());
        UPoly(out)
    }

    /// Exact division by an integer; every coefficient must be divisible.
    pub fn div_int(&self, c: &BigInt) -> UPoly {
        if c.is_one() {
            return self.clone();
        }
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    /// gcd of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().map(|l| l.is_negative()).unwrap_or(false) {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Exact division in `Z[x]`; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &UPoly) -> Option<UPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let db = other.0.len() - 1;
        if self.0.len() < other.0.len() {
            return None;
        }
        if db == 0 {
            let d = &other.0[0];
            let mut out = Vec::with_capacity(self.0.len());
            for c in &self.0 {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(UPoly(out));
        }
        let lb = &other.0[db];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); self.0.len() - db];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.0.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &UPoly) -> UPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let lb = b.lc().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().unwrap().clone();
            r = r.scale(&lb).sub(&b.scale(&lr).shift(dr - db));
        }
        r
    }

    /// gcd in `Z[x]`, primitive with positive leading coefficient times the
    /// integer gcd of the contents.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        if self.is_constant() || other.is_constant() {
            return UPoly::constant(c);
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if a.exact_div(&b).is_some() {
            return b.scale(&c);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.scale(&c);
            }
            if r.is_constant() {
                return UPoly::constant(c);
            }
            a = b;
            b = r.primitive();
        }
    }

    fn normalize_sign(&self) -> UPoly {
        if self.lc().map(|l| l.is_negative()).unwrap_or(false) {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[5, 3]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        let a = p(&[2, 2]);
        let b = p(&[4, 4]).mul(&p(&[0, 1]));
        assert_eq!(a.gcd(&b), p(&[2, 2]));
    }

    #[test]
    fn exact_div_detects_remainder() {
        let a = p(&[1, 0, 1]);
        assert!(a.exact_div(&p(&[1, 1])).is_none());
        let b = p(&[-1, 0, 1]);
        assert_eq!(b.exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
    }
}
