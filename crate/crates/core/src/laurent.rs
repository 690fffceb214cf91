//! The algebra of Laurent symmetric functions: polynomials in free
//! generators `p_i`, `i != 0`, over a coefficient field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::text::{parse_expr, Expr};
use crate::coeff::{Coeff, CoeffError, ParamRat};
use crate::error::{JackError, Result};

/// Monomial `Π p_i^{e_i}` stored as `(i, e_i)` pairs with ascending `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PMonomial(Vec<(i32, u32)>);

impl PMonomial {
    pub fn one() -> Self {
        PMonomial(Vec::new())
    }

    pub fn generator(i: i32) -> Self {
        assert!(i != 0, "p0 is a parameter, not a generator");
        PMonomial(vec![(i, 1)])
    }

    /// From arbitrary `(index, exponent)` pairs; merges repeats and drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i32, u32)>) -> Self {
        let mut m: BTreeMap<i32, u32> = BTreeMap::new();
        for (i, e) in pairs {
            assert!(i != 0, "p0 is a parameter, not a generator");
            *m.entry(i).or_default() += e;
        }
        PMonomial(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// `p_{ν_1} p_{ν_2} ...` for a list of indices.
    pub fn from_indices(idx: &[i32]) -> Self {
        PMonomial::from_pairs(idx.iter().map(|&i| (i, 1)))
    }

    pub fn pairs(&self) -> &[(i32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: i32) -> u32 {
        self.0
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|pos| self.0[pos].1)
            .unwrap_or(0)
    }

    /// Total number of generator factors.
    pub fn order(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// `(Σ_{i>0} i e_i, -Σ_{i<0} i e_i)`.
    pub fn bidegree(&self) -> (u64, u64) {
        let mut pos = 0u64;
        let mut neg = 0u64;
        for &(i, e) in &self.0 {
            if i > 0 {
                pos += i as u64 * e as u64;
            } else {
                neg += (-i) as u64 * e as u64;
            }
        }
        (pos, neg)
    }

    pub fn degree(&self) -> i64 {
        let (a, b) = self.bidegree();
        a as i64 - b as i64
    }

    pub fn has_negative(&self) -> bool {
        self.0.first().is_some_and(|&(i, _)| i < 0)
    }

    pub fn has_positive(&self) -> bool {
        self.0.last().is_some_and(|&(i, _)| i > 0)
    }

    pub fn mul(&self, other: &PMonomial) -> PMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                Ordering::Equal => {
                    out.push((a[x].0, a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        PMonomial(out)
    }

    /// Multiply by a single generator.
    pub fn times(&self, i: i32) -> PMonomial {
        self.mul(&PMonomial::generator(i))
    }

    /// Remove one factor `p_i`; `None` if absent.
    pub fn lower(&self, i: i32) -> Option<PMonomial> {
        let pos = self.0.binary_search_by_key(&i, |&(j, _)| j).ok()?;
        let mut v = self.0.clone();
        if v[pos].1 == 1 {
            v.remove(pos);
        } else {
            v[pos].1 -= 1;
        }
        Some(PMonomial(v))
    }

    pub fn star(&self) -> PMonomial {
        PMonomial(self.0.iter().rev().map(|&(i, e)| (-i, e)).collect())
    }

    /// Product of `x_i` values per generator.
    pub fn eval<C: Coeff>(&self, mut val: impl FnMut(i32) -> C) -> C {
        let mut acc = C::one();
        for &(i, e) in &self.0 {
            acc = acc.mul(&val(i).pow(e));
        }
        acc
    }
}

impl Ord for PMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.bidegree(), other.bidegree());
        (a.0 + a.1, a).cmp(&(b.0 + b.1, b)).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, e)| if e == 1 { format!("p{i}") } else { format!("p{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Finite sum of monomials with nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct LaurentSymFunc<C> {
    terms: BTreeMap<PMonomial, C>,
}

pub type Lsf = LaurentSymFunc<ParamRat>;

impl<C: Coeff> Default for LaurentSymFunc<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentSymFunc<C> {
    pub fn zero() -> Self {
        LaurentSymFunc { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(PMonomial::one(), c)
    }

    pub fn generator(i: i32) -> Self {
        Self::monomial(PMonomial::generator(i), C::one())
    }

    pub fn monomial(m: PMonomial, c: C) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PMonomial, C)>) -> Self {
        let mut f = Self::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PMonomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (PMonomial, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &PMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: PMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &C, other: &Self) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.mul(s));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&C::one().neg(), other);
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs_same(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        self.map_coeffs_same(|c| c.mul(s))
    }

    pub fn mul_monomial(&self, m: &PMonomial) -> Self {
        LaurentSymFunc {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn map_coeffs_same(&self, f: impl Fn(&C) -> C) -> Self {
        LaurentSymFunc {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentSymFunc<D> {
        LaurentSymFunc::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Coeff, E>(
        &self,
        f: impl Fn(&PMonomial, &C) -> std::result::Result<D, E>,
    ) -> std::result::Result<LaurentSymFunc<D>, E> {
        let mut out = LaurentSymFunc::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c)?);
        }
        Ok(out)
    }

    /// Generator map `p_i -> p_{-i}`.
    pub fn star(&self) -> Self {
        LaurentSymFunc {
            terms: self.terms.iter().map(|(m, c)| (m.star(), c.clone())).collect(),
        }
    }

    /// `p_a -> k p_a` (or `k^{-1} p_a` when `inverse`).
    pub fn theta(&self, k: &C, inverse: bool) -> Result<Self> {
        let base = if inverse { C::one().div(k)? } else { k.clone() };
        Ok(LaurentSymFunc::from_terms(
            self.terms.iter().map(|(m, c)| (m.clone(), c.mul(&base.pow(m.order())))),
        ))
    }

    /// `∂_a = a ∂/∂p_a`.
    pub fn partial(&self, a: i32) -> Self {
        assert!(a != 0, "partial derivative index must be nonzero");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            if e > 0 {
                out.add_term(m.lower(a).unwrap(), c.mul_int(a as i64 * e as i64));
            }
        }
        out
    }

    /// Substitute every generator by `v`.
    pub fn evaluate_all(&self, v: &C) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            acc = acc.add(&c.mul(&v.pow(m.order())));
        }
        acc
    }

    /// Split by bidegree `(m, n)`.
    pub fn bidegree_components(&self) -> BTreeMap<(u64, u64), Self> {
        let mut out: BTreeMap<(u64, u64), Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// Degrees `|pos| - |neg|` occurring in the support.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn has_negative(&self) -> bool {
        self.terms.keys().any(|m| m.has_negative())
    }

    pub fn has_positive(&self) -> bool {
        self.terms.keys().any(|m| m.has_positive())
    }

    /// Largest `|i|` among generators in the support.
    pub fn max_index(&self) -> i32 {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(i, _)| i.abs()))
            .max()
            .unwrap_or(0)
    }

    /// `Some(c)` if `self = c * other`.
    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        if other.is_zero() {
            return if self.is_zero() { Some(C::zero()) } else { None };
        }
        let (m, c) = other.terms.iter().next_back().unwrap();
        let s = self.coeff(m).div(c).ok()?;
        if *self == other.scale(&s) {
            Some(s)
        } else {
            None
        }
    }

    /// Coefficient of the highest term under the term order.
    pub fn leading(&self) -> Option<(&PMonomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                exponents: m.pairs().iter().map(|&(i, e)| (i.to_string(), e)).collect(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

impl LaurentSymFunc<ParamRat> {
    /// `ε`: every generator goes to the parameter `p0`.
    pub fn evaluate_eps(&self) -> ParamRat {
        self.evaluate_all(&ParamRat::p0())
    }

    pub fn theta_sym(&self, inverse: bool) -> Self {
        self.theta(&ParamRat::k(), inverse).expect("k is invertible")
    }

    pub fn contains_p0(&self) -> bool {
        self.terms.values().any(|c| c.contains_p0())
    }

    /// Rewrite every coefficient under `k -> kv`, `p0 -> pv`.
    pub fn substitute_params(&self, kv: &ParamRat, pv: &ParamRat) -> std::result::Result<Self, CoeffError> {
        self.try_map_coeffs(|_, c| c.substitute(kv, pv))
    }

    pub fn specialize(
        &self,
        k0: &num_rational::BigRational,
        p00: &num_rational::BigRational,
    ) -> std::result::Result<LaurentSymFunc<num_rational::BigRational>, CoeffError> {
        self.try_map_coeffs(|_, c| c.specialize(k0, p00))
    }

    pub fn from_json(terms: &[TermJson]) -> Result<Self> {
        let mut out = Self::zero();
        for t in terms {
            let pairs = t
                .exponents
                .iter()
                .map(|(i, &e)| match i.parse::<i32>() {
                    Ok(i) if i != 0 => Ok((i, e)),
                    _ => Err(JackError::Parse(format!("bad generator index {i:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            out.add_term(PMonomial::from_pairs(pairs), t.coeff.parse()?);
        }
        Ok(out)
    }

    /// Parse the text form, e.g. `p1*p-1 - (p0)/(1 + k - k*p0)`.
    pub fn parse(s: &str) -> Result<Self> {
        let e = parse_expr(s)?;
        eval_lsf(&e)
    }
}

fn eval_lsf(e: &Expr) -> Result<Lsf> {
    Ok(match e {
        Expr::Int(n) => Lsf::constant(ParamRat::from_bigint(n.clone())),
        Expr::K => Lsf::constant(ParamRat::k()),
        Expr::P0 => Lsf::constant(ParamRat::p0()),
        Expr::Gen(i) => Lsf::generator(*i),
        Expr::Add(a, b) => eval_lsf(a)?.add(&eval_lsf(b)?),
        Expr::Sub(a, b) => eval_lsf(a)?.sub(&eval_lsf(b)?),
        Expr::Mul(a, b) => eval_lsf(a)?.mul(&eval_lsf(b)?),
        Expr::Neg(a) => eval_lsf(a)?.neg(),
        Expr::Pow(a, n) => eval_lsf(a)?.pow(*n),
        Expr::Div(a, b) => {
            let den = eval_lsf(b)?;
            let c = match den.terms.iter().next() {
                Some((m, c)) if den.len() == 1 && m.is_one() => c.clone(),
                _ if den.is_zero() => return Err(CoeffError::DivisionByZero.into()),
                _ => return Err(JackError::Parse("division by a non-scalar".into())),
            };
            eval_lsf(a)?.scale(&c.inv()?)
        }
    })
}

/// JSON form of a single term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: BTreeMap<String, u32>,
    pub coeff: String,
}

impl<C: Coeff> fmt::Display for LaurentSymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            match (m.is_one(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "({c})*{m}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentSymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: i32) -> Lsf {
        Lsf::generator(i)
    }

    fn lsf(s: &str) -> Lsf {
        Lsf::parse(s).unwrap()
    }

    #[test]
    fn products() {
        let f = g(1).mul(&g(-1));
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(&PMonomial::from_indices(&[1, -1])), ParamRat::one());
        let s = g(1).add(&g(-1));
        assert_eq!(s.mul(&s), lsf("p1^2 + 2*p1*p-1 + p-1^2"));
        assert!(s.mul(&Lsf::zero()).is_zero());
    }

    #[test]
    fn star_and_theta() {
        assert_eq!(g(2).star(), g(-2));
        let p11 = lsf("p1*p-1 - p0/(1 + k - k*p0)");
        assert_eq!(p11.star(), p11);
        assert_eq!(g(3).theta_sym(false), lsf("k*p3"));
        assert_eq!(lsf("p1*p-2").theta_sym(false), lsf("k^2*p1*p-2"));
        let f = lsf("p1^2*p-3 + 1/k*p2 - 7");
        assert_eq!(f.theta_sym(false).theta_sym(true), f);
    }

    #[test]
    fn partials() {
        assert_eq!(lsf("p1^2").partial(1), lsf("2*p1"));
        assert_eq!(lsf("p-2*p1").partial(-2), lsf("-2*p1"));
        assert!(lsf("p1*p-1").partial(3).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(lsf("p1*p-1").evaluate_eps(), "p0^2".parse().unwrap());
        assert!(Lsf::one().evaluate_eps().is_one());
        let p11 = lsf("p1*p-1 - p0/(1 + k - k*p0)");
        assert_eq!(p11.evaluate_eps(), "p0^2 - p0/(1 + k - k*p0)".parse().unwrap());
    }

    #[test]
    fn bidegrees() {
        let c = lsf("p1*p-1").bidegree_components();
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        let c = lsf("p2 + p1*p-1").bidegree_components();
        assert_eq!(c.keys().copied().collect::<Vec<_>>(), vec![(1, 1), (2, 0)]);
        assert!(Lsf::zero().bidegree_components().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let f = lsf("p1*p-1 - p0/(1 + k - k*p0) + 3/2*p2^2*p-3");
        let s = f.to_string();
        assert_eq!(Lsf::parse(&s).unwrap(), f);
        assert_eq!(lsf("p1^2*p-3").to_string(), "p-3*p1^2");
        assert!(Lsf::parse("p1/p2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = lsf("p1*p-1 - p0/(1 + k - k*p0)");
        let j = serde_json::to_string(&f.to_json()).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&j).unwrap();
        assert_eq!(Lsf::from_json(&back).unwrap(), f);
        assert!(j.contains("\"-1\":1"));
    }
}
