//! Dense bivariate integer polynomials in `k` and `p0`.
//!
//! Stored as a polynomial in `k` whose coefficients are [`UPoly`]s in `p0`,
//! which is the shape the gcd recursion wants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BPoly(pub(crate) Vec<UPoly>);

impl BPoly {
    pub fn zero() -> Self {
        BPoly(Vec::new())
    }

    pub fn one() -> Self {
        BPoly(vec![UPoly::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        BPoly::from_rows(vec![UPoly::constant(c)])
    }

    /// The monomial `c * k^dk * p0^dp`.
    pub fn monomial(c: BigInt, dk: usize, dp: usize) -> Self {
        if c.is_zero() {
            return BPoly::zero();
        }
        let mut rows = vec![UPoly::zero(); dk + 1];
        let mut inner = vec![BigInt::zero(); dp + 1];
        inner[dp] = c;
        rows[dk] = UPoly::from_coeffs(inner);
        BPoly(rows)
    }

    pub fn k() -> Self {
        BPoly::monomial(BigInt::one(), 1, 0)
    }

    pub fn p0() -> Self {
        BPoly::monomial(BigInt::one(), 0, 1)
    }

    pub fn from_rows(rows: Vec<UPoly>) -> Self {
        let mut p = BPoly(rows);
        p.trim();
        p
    }

    /// Build from a p0-only polynomial.
    pub fn from_p0_poly(p: UPoly) -> Self {
        BPoly::from_rows(vec![p])
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(r) if r.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// True when the polynomial has no `k` and no `p0`.
    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1 && self.0.first().map(|r| r.is_constant()).unwrap_or(true)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.0
                .first()
                .and_then(|r| r.0.first().cloned())
                .unwrap_or_else(BigInt::zero),
        )
    }

    pub fn deg_k(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn deg_p0(&self) -> Option<usize> {
        self.0.iter().filter_map(|r| r.degree()).max()
    }

    pub fn rows(&self) -> &[UPoly] {
        &self.0
    }

    /// Iterate over nonzero terms as `(deg_k, deg_p0, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.0.iter().enumerate().flat_map(|(i, r)| {
            r.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Leading coefficient in graded-lex order (total degree, then `deg_k`).
    pub fn lc_grlex(&self) -> Option<&BigInt> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (i, j, c) in self.terms() {
            let key = (i + j, i);
            match best {
                Some((t, bi, _)) if (t, bi) >= key => {}
                _ => best = Some((key.0, key.1, c)),
            }
        }
        best.map(|(_, _, c)| c)
    }

    pub fn add(&self, other: &BPoly) -> BPoly {
        let n = self.0.len().max(other.0.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(match (self.0.get(i), other.0.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        BPoly::from_rows(rows)
    }

    pub fn sub(&self, other: &BPoly) -> BPoly {
        let n = self.0.len().max(other.0.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(match (self.0.get(i), other.0.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        BPoly::from_rows(rows)
    }

    pub fn neg(&self) -> BPoly {
        BPoly(self.0.iter().map(|r| r.neg()).collect())
    }

    pub fn mul(&self, other: &BPoly) -> BPoly {
        if self.is_zero() || other.is_zero() {
            return BPoly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut rows = vec![UPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                rows[i + j] = rows[i + j].add(&a.mul(b));
            }
        }
        BPoly::from_rows(rows)
    }

    pub fn mul_upoly(&self, c: &UPoly) -> BPoly {
        BPoly::from_rows(self.0.iter().map(|r| r.mul(c)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> BPoly {
        if c.is_zero() {
            return BPoly::zero();
        }
        BPoly(self.0.iter().map(|r| r.scale(c)).collect())
    }

    pub fn div_int(&self, c: &BigInt) -> BPoly {
        if c.is_one() {
            return self.clone();
        }
        BPoly(self.0.iter().map(|r| r.div_int(c)).collect())
    }

    fn shift_k(&self, n: usize) -> BPoly {
        if self.is_zero() {
            return BPoly::zero();
        }
        let mut rows = vec![UPoly::zero(); n];
        rows.extend(self.0.iter().cloned());
        BPoly(rows)
    }

    /// gcd of all integer coefficients.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.0 {
            for c in &r.0 {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// Divide out the integer content and make the graded-lex leading
    /// coefficient positive. Returns the removed signed factor too.
    pub fn primitive_with_factor(&self) -> (BigInt, BPoly) {
        if self.is_zero() {
            return (BigInt::zero(), BPoly::zero());
        }
        let mut c = self.int_content();
        if self.lc_grlex().map(|l| l.is_negative()).unwrap_or(false) {
            c = -c;
        }
        (c.clone(), self.div_int(&c))
    }

    /// Content with respect to `k`: gcd in `Z[p0]` of the `k`-coefficients.
    fn content_k(&self) -> UPoly {
        let mut g = UPoly::zero();
        for r in &self.0 {
            if r.is_zero() {
                continue;
            }
            g = g.gcd(r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_upoly_exact(&self, c: &UPoly) -> BPoly {
        if c.is_one() {
            return self.clone();
        }
        BPoly(
            self.0
                .iter()
                .map(|r| r.exact_div(c).expect("content must divide every coefficient"))
                .collect(),
        )
    }

    fn pseudo_rem_k(&self, b: &BPoly) -> BPoly {
        let db = b.deg_k().expect("pseudo_rem by zero");
        let lb = b.0[db].clone();
        let mut r = self.clone();
        while let Some(dr) = r.deg_k() {
            if dr < db {
                break;
            }
            let lr = r.0[dr].clone();
            r = r.mul_upoly(&lb).sub(&b.mul_upoly(&lr).shift_k(dr - db));
        }
        r
    }

    /// Exact division in `Z[k, p0]`; `None` if `other` does not divide `self`.
    pub fn exact_div(&self, other: &BPoly) -> Option<BPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(BPoly::zero());
        }
        if other.is_one() {
            return Some(self.clone());
        }
        let db = other.0.len() - 1;
        if self.0.len() < other.0.len() {
            return None;
        }
        if let (Some(da), Some(dbp)) = (self.deg_p0(), other.deg_p0()) {
            if dbp > da {
                return None;
            }
        }
        let lb = &other.0[db];
        let mut rem = self.0.clone();
        let mut quot = vec![UPoly::zero(); self.0.len() - db];
        for i in (0..quot.len()).rev() {
            if rem[i + db].is_zero() {
                continue;
            }
            let q = rem[i + db].exact_div(lb)?;
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    rem[i + j] = rem[i + j].sub(&q.mul(b));
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(BPoly::from_rows(quot))
    }

    /// gcd in `Z[k, p0]`, normalized primitive with positive graded-lex
    /// leading coefficient. Both inputs are expected to be integer-primitive;
    /// the integer content of the result is dropped.
    pub fn gcd(&self, other: &BPoly) -> BPoly {
        if self.is_zero() {
            return other.primitive_with_factor().1;
        }
        if other.is_zero() {
            return self.primitive_with_factor().1;
        }
        if self.is_constant() || other.is_constant() {
            return BPoly::one();
        }
        let ca = self.content_k();
        let cb = other.content_k();
        let cont = ca.gcd(&cb).primitive();
        let mut a = self.div_upoly_exact(&ca);
        let mut b = other.div_upoly_exact(&cb);
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let core = if b.0.len() <= 1 {
            BPoly::one()
        } else if a.exact_div(&b).is_some() {
            b
        } else {
            loop {
                let r = a.pseudo_rem_k(&b);
                if r.is_zero() {
                    break b;
                }
                if r.0.len() == 1 {
                    break BPoly::one();
                }
                a = b;
                let c = r.content_k();
                b = r.div_upoly_exact(&c);
            }
        };
        let core = core.div_upoly_exact(&core.content_k());
        core.mul_upoly(&cont).primitive_with_factor().1
    }

    pub fn eval(&self, k: &BigRational, p0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for r in self.0.iter().rev() {
            let mut inner = BigRational::zero();
            for c in r.0.iter().rev() {
                inner = inner * p0 + BigRational::from_integer(c.clone());
            }
            acc = acc * k + inner;
        }
        acc
    }

    /// Substitute `k = k0`, returning the p0-polynomial scaled to integer
    /// coefficients together with the denominator that was cleared.
    pub fn eval_k(&self, k0: &BigRational) -> (UPoly, BigInt) {
        // Horner over k with rational k0 = a/b: sum_i r_i a^i b^(d-i) / b^d.
        let a = k0.numer();
        let b = k0.denom();
        let d = match self.deg_k() {
            None => return (UPoly::zero(), BigInt::one()),
            Some(d) => d,
        };
        let mut acc = UPoly::zero();
        let mut apow = BigInt::one();
        let bpows: Vec<BigInt> = (0..=d).map(|i| num_traits::pow(b.clone(), i)).collect();
        for (i, r) in self.0.iter().enumerate() {
            if !r.is_zero() {
                let factor = &apow * &bpows[d - i];
                acc = acc.add(&r.scale(&factor));
            }
            apow *= a;
        }
        (acc, bpows[d].clone())
    }

    /// Swap the roles of `k` and `p0`.
    pub fn transpose(&self) -> BPoly {
        let dp = match self.deg_p0() {
            None => return BPoly::zero(),
            Some(d) => d,
        };
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.0.len()]; dp + 1];
        for (i, j, c) in self.terms() {
            rows[j][i] = c.clone();
        }
        BPoly::from_rows(rows.into_iter().map(UPoly::from_coeffs).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c: i64, ck: i64, cp: i64, ckp: i64) -> BPoly {
        BPoly::constant(c.into())
            .add(&BPoly::monomial(ck.into(), 1, 0))
            .add(&BPoly::monomial(cp.into(), 0, 1))
            .add(&BPoly::monomial(ckp.into(), 1, 1))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = lin(1, 1, 0, -1); // 1 + k - k p0
        let g = lin(0, 2, 3, 0); // 2k + 3p0
        let h = lin(5, 0, 1, 1); // 5 + p0 + k p0
        let a = f.mul(&g);
        let b = f.mul(&h);
        let expect = f.primitive_with_factor().1;
        assert_eq!(a.gcd(&b), expect);
    }

    #[test]
    fn gcd_of_p0_only_factors() {
        let f = lin(-1, 0, 1, 0); // p0 - 1
        let a = f.mul(&lin(0, 1, 0, 0));
        let b = f.mul(&lin(2, 0, 0, 1));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn coprime_gives_one() {
        assert!(lin(1, 1, 0, 0).gcd(&lin(1, 0, 1, 0)).is_one());
    }
}
