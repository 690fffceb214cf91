//! Symmetric Laurent polynomials in `N` variables: classical Jack
//! polynomials by a triangular solve, their Laurent shifts, the map `φ_N`
//! from `Λ±`, and the torus constant-term form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;

use crate::closed_forms::{eigenvalue_en, pieri_v_finite};
use crate::coeff::{Coeff, ParamRat};
use crate::error::{JackError, Result};
use crate::laurent::LaurentSymFunc;
use crate::partitions::{IntSequence, Partition};

type Exps = Vec<i64>;

/// Fully expanded Laurent polynomial in `N` variables.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPolyN<C> {
    n: usize,
    terms: BTreeMap<Exps, C>,
}

impl<C: Coeff> LaurentPolyN<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPolyN {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], C::one())
    }

    pub fn monomial(e: Exps, c: C) -> Self {
        let mut out = Self::zero(e.len());
        out.add_term(e, c);
        out
    }

    /// `x_1^j + ... + x_N^j`.
    pub fn power_sum(n: usize, j: i64) -> Self {
        let mut out = Self::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = j;
            out.add_term(e, C::one());
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c.mul(d));
            }
        }
        out
    }

    /// `x_i -> x_i^{-1}`.
    pub fn star(&self) -> Self {
        LaurentPolyN {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Orbit representatives; assumes `self` is symmetric.
    pub fn symmetric_part(&self) -> SymLaurentPolyN<C> {
        SymLaurentPolyN {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            self.terms.get(&s) == Some(c)
        })
    }
}

/// Symmetric Laurent polynomial stored as `Σ c_χ m_χ` over non-increasing `χ`.
#[derive(Clone, PartialEq, Debug)]
pub struct SymLaurentPolyN<C> {
    n: usize,
    terms: BTreeMap<Exps, C>,
}

/// Distinct permutations of `v`.
fn permutations(v: &[i64]) -> Vec<Exps> {
    let mut cur: Exps = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

impl<C: Coeff> SymLaurentPolyN<C> {
    pub fn zero(n: usize) -> Self {
        SymLaurentPolyN {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::orbit_sum(vec![0; n], C::one())
    }

    /// `c · m_χ`; `χ` is sorted into non-increasing order.
    pub fn orbit_sum(mut chi: Exps, c: C) -> Self {
        chi.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Self::zero(chi.len());
        if !c.is_zero() {
            out.terms.insert(chi, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with the dominant exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, chi: &[i64]) -> C {
        self.terms.get(chi).cloned().unwrap_or_else(C::zero)
    }

    pub fn expand(&self) -> LaurentPolyN<C> {
        let mut out = LaurentPolyN::zero(self.n);
        for (chi, c) in &self.terms {
            for e in permutations(chi) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let s = out.coeff(e).add(c);
            if s.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), s);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg()))
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        SymLaurentPolyN {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(s))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.expand().mul(&other.expand()).symmetric_part()
    }

    /// `x_i -> x_i^{-1}`: `m_χ -> m_{w(χ)}`.
    pub fn star(&self) -> Self {
        SymLaurentPolyN {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().rev().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `(x_1 ... x_N)^a`.
    pub fn shift(&self, a: i64) -> Self {
        SymLaurentPolyN {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x + a).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        if other.is_zero() {
            return self.is_zero().then(C::zero);
        }
        let (e, c) = other.terms.iter().next_back().unwrap();
        let s = self.coeff(e).div(c).ok()?;
        (*self == other.scale(&s)).then_some(s)
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<SymLaurentPolyN<D>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        Ok(SymLaurentPolyN { n: self.n, terms })
    }
}

impl SymLaurentPolyN<ParamRat> {
    pub fn specialize_k(&self, k0: &BigRational) -> Result<SymLaurentPolyN<BigRational>> {
        let p0 = BigRational::zero();
        self.try_map_coeffs(|c| Ok(c.specialize(k0, &p0)?))
    }
}

impl<C: Coeff> fmt::Display for SymLaurentPolyN<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            if c.is_one() {
                write!(f, "m({})", exps.join(","))?;
            } else {
                write!(f, "({c})*m({})", exps.join(","))?;
            }
        }
        Ok(())
    }
}

/// The trigonometric CMS operator `L_{k,N}` on a symmetric input.
pub fn cms_operator_n<C: Coeff>(f: &LaurentPolyN<C>, k: &C) -> LaurentPolyN<C> {
    let n = f.n;
    let mk = k.neg();
    let mut out = LaurentPolyN::zero(n);
    for (a, c) in &f.terms {
        let sq: i64 = a.iter().map(|x| x * x).sum();
        out.add_term(a.clone(), c.mul_int(sq));
        for i in 0..n {
            for j in i + 1..n {
                if a[i] <= a[j] {
                    continue;
                }
                // pair x^a with its transposition: c d (x^a - x^{sa}) (x_i + x_j)/(x_i - x_j)
                let d = a[i] - a[j];
                let cd = c.mul(&mk).mul_int(d);
                let mut swapped = a.clone();
                swapped.swap(i, j);
                out.add_term(a.clone(), cd.clone());
                out.add_term(swapped, cd.clone());
                for t in 1..d {
                    let mut e = a.clone();
                    e[i] -= t;
                    e[j] += t;
                    out.add_term(e, cd.mul_int(2));
                }
            }
        }
    }
    out
}

/// `L^(1)_N = Σ x_i ∂/∂x_i`.
pub fn degree_operator_n<C: Coeff>(f: &LaurentPolyN<C>) -> LaurentPolyN<C> {
    let mut out = LaurentPolyN::zero(f.n);
    for (a, c) in &f.terms {
        out.add_term(a.clone(), c.mul_int(a.iter().sum()));
    }
    out
}

pub fn cms_operator_sym<C: Coeff>(f: &SymLaurentPolyN<C>, k: &C) -> SymLaurentPolyN<C> {
    cms_operator_n(&f.expand(), k).symmetric_part()
}

fn dominated_by(nu: &[i64], eta: &[i64]) -> bool {
    let (mut a, mut b) = (0, 0);
    nu.iter().zip(eta).all(|(x, y)| {
        a += x;
        b += y;
        b <= a
    })
}

/// Classical Jack polynomial `P_ν(x_1..x_N)`, monic in `m_ν`.
pub fn jack_poly_n<C: Coeff>(nu: &Partition, n: usize, k: &C) -> Result<SymLaurentPolyN<C>> {
    if nu.len() > n {
        return Err(JackError::LengthTooSmall { n, len: nu.len() });
    }
    let pad = |p: &Partition| p.padded(n).into_iter().map(|x| x as i64).collect::<Exps>();
    let top = pad(nu);
    // dominated partitions, most dominant first
    let mut below: Vec<Exps> = Partition::all_of(nu.size())
        .into_iter()
        .filter(|p| p.len() <= n)
        .map(|p| pad(&p))
        .filter(|e| dominated_by(&top, e))
        .collect();
    below.sort_unstable_by(|a, b| b.cmp(a));
    let seq = |e: &Exps| IntSequence::new(e.clone()).expect("sorted");
    let target = eigenvalue_en(&seq(&top), k);
    let mut coeffs: Vec<(Exps, C)> = Vec::with_capacity(below.len());
    let mut images: Vec<LaurentPolyN<C>> = Vec::with_capacity(below.len());
    for zeta in &below {
        let c = if *zeta == top {
            C::one()
        } else {
            let mut rhs = C::zero();
            for ((_, c_eta), image) in coeffs.iter().zip(&images) {
                rhs = rhs.add(&c_eta.mul(&image.coeff(zeta)));
            }
            let gap = target.sub(&eigenvalue_en(&seq(zeta), k));
            if gap.is_zero() {
                return Err(JackError::SingularParameter(format!(
                    "e_N coincides for {top:?} and {zeta:?}"
                )));
            }
            rhs.div(&gap)?
        };
        let m = SymLaurentPolyN::orbit_sum(zeta.clone(), C::one()).expand();
        images.push(cms_operator_n(&m, k));
        coeffs.push((zeta.clone(), c));
    }
    let mut out = SymLaurentPolyN::zero(n);
    for (e, c) in coeffs {
        out = out.add(&SymLaurentPolyN::orbit_sum(e, c));
    }
    Ok(out)
}

/// `P_χ = (x_1..x_N)^{-a} P_{χ+a}` for a non-increasing integer sequence.
pub fn jack_laurent_poly_n<C: Coeff>(chi: &IntSequence, k: &C) -> Result<SymLaurentPolyN<C>> {
    let a = (-chi.min()).max(0);
    let p = shifted_jack(chi, a, k)?;
    if cfg!(debug_assertions) {
        debug_assert_eq!(p, shifted_jack(chi, a + 1, k)?, "shift dependence at {chi}");
    }
    Ok(p)
}

/// `(x_1..x_N)^{-a} P_{χ+a}` for a chosen `a`.
pub fn shifted_jack<C: Coeff>(chi: &IntSequence, a: i64, k: &C) -> Result<SymLaurentPolyN<C>> {
    let nu = chi
        .shift(a)
        .as_partition()
        .ok_or_else(|| JackError::IncomparableInput(format!("{chi} shifted by {a} is not a partition")))?;
    Ok(jack_poly_n(&nu, chi.len(), k)?.shift(-a))
}

/// `φ_N` on an element whose coefficients no longer involve `p0`.
pub fn phi_n_map<C: Coeff>(f: &LaurentSymFunc<C>, n: usize) -> SymLaurentPolyN<C> {
    let mut powers: HashMap<i32, LaurentPolyN<C>> = HashMap::new();
    let mut out = LaurentPolyN::zero(n);
    for (m, c) in f.terms() {
        let mut term = LaurentPolyN::monomial(vec![0; n], c.clone());
        for &(a, e) in m.pairs() {
            let p = powers
                .entry(a)
                .or_insert_with(|| LaurentPolyN::power_sum(n, a as i64))
                .clone();
            for _ in 0..e {
                term = term.mul(&p);
            }
        }
        for (e, c) in term.terms {
            out.add_term(e, c);
        }
    }
    out.symmetric_part()
}

/// `φ_N` with `p0 -> N`; the result is rational in `k`.
pub fn phi_n_symbolic(f: &LaurentSymFunc<ParamRat>, n: usize) -> Result<SymLaurentPolyN<ParamRat>> {
    let pn = BigRational::from_integer((n as i64).into());
    let g = f.try_map_coeffs(|_, c| c.substitute_p0(&pn))?;
    Ok(phi_n_map(&g, n))
}

type DeltaCache = RwLock<HashMap<(u32, usize), Arc<LaurentPolyN<BigRational>>>>;

/// `Δ_N = Π_{i≠j} (1 - x_i/x_j)^m` for `k = -m`, cached per `(m, N)`.
pub fn delta_n(m: u32, n: usize) -> Arc<LaurentPolyN<BigRational>> {
    static CACHE: OnceLock<DeltaCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.read().unwrap().get(&(m, n)) {
        return d.clone();
    }
    let mut d = LaurentPolyN::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = -1;
            let mut factor = LaurentPolyN::one(n);
            factor.add_term(e, -BigRational::one());
            for _ in 0..m {
                d = d.mul(&factor);
            }
        }
    }
    cache
        .write()
        .unwrap()
        .entry((m, n))
        .or_insert_with(|| Arc::new(d))
        .clone()
}

/// Normalized constant term of `f g^* Δ_N` at the negative integer `k`.
pub fn torus_form(
    f: &SymLaurentPolyN<BigRational>,
    g: &SymLaurentPolyN<BigRational>,
    k_neg_int: i64,
) -> Result<BigRational> {
    if k_neg_int >= 0 {
        return Err(JackError::SingularParameter(format!(
            "torus form needs k < 0, got {k_neg_int}"
        )));
    }
    let n = f.n;
    let delta = delta_n((-k_neg_int) as u32, n);
    let h = f.expand().mul(&g.expand().star());
    let mut ct = BigRational::zero();
    for (e, c) in h.terms() {
        let neg: Exps = e.iter().map(|x| -x).collect();
        ct += c * delta.coeff(&neg);
    }
    Ok(ct / delta.coeff(&vec![0; n]))
}

/// Checks `p1 P_χ = Σ_i V_i(χ) P_{χ+ε_i}` with symbolic `k`.
pub fn finite_pieri_check(chi: &IntSequence) -> Result<bool> {
    let k = ParamRat::k();
    let n = chi.len();
    let p1 = SymLaurentPolyN::orbit_sum(
        LaurentPolyN::<ParamRat>::power_sum(n, 1)
            .terms
            .keys()
            .next_back()
            .unwrap()
            .clone(),
        ParamRat::one(),
    );
    let lhs = p1.mul(&jack_laurent_poly_n(chi, &k)?);
    let mut rhs = SymLaurentPolyN::zero(n);
    for i in 0..n {
        if let Some(up) = chi.raise(i) {
            let v = pieri_v_finite(i + 1, chi, &k)?;
            rhs = rhs.add(&jack_laurent_poly_n(&up, &k)?.scale(&v));
        }
    }
    Ok(lhs == rhs)
}

/// Eigenvalue of `L_{k,N}` on `P_χ`; also checks the star-conjugated operator
/// against `e_N(w(χ))`.
pub fn hc_eigen_check_n(chi: &IntSequence) -> Result<ParamRat> {
    let k = ParamRat::k();
    let p = jack_laurent_poly_n(chi, &k)?;
    let e = cms_operator_sym(&p, &k)
        .ratio_to(&p)
        .ok_or_else(|| JackError::NotEigenvector(format!("L_N on P_{chi}")))?;
    if e != eigenvalue_en(chi, &k) {
        return Err(JackError::NotEigenvector(format!("L_N on P_{chi}: eigenvalue {e}")));
    }
    let conj = cms_operator_sym(&p.star(), &k)
        .star()
        .ratio_to(&p)
        .ok_or_else(|| JackError::NotEigenvector(format!("L_N* on P_{chi}")))?;
    if conj != eigenvalue_en(&chi.w(), &k) {
        return Err(JackError::NotEigenvector(format!("L_N* on P_{chi}: eigenvalue {conj}")));
    }
    Ok(e)
}

/// `P_χ^* = P_{w(χ)}`.
pub fn involution_check_n(chi: &IntSequence) -> Result<bool> {
    let k = ParamRat::k();
    Ok(jack_laurent_poly_n(chi, &k)?.star() == jack_laurent_poly_n(&chi.w(), &k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q;

    fn seq(v: &[i64]) -> IntSequence {
        IntSequence::new(v.to_vec()).unwrap()
    }

    fn k() -> ParamRat {
        ParamRat::k()
    }

    #[test]
    fn small_jack_polys() {
        let p = jack_poly_n(&Partition::from(&[1][..]), 2, &k()).unwrap();
        assert_eq!(p.to_string(), "m(1,0)");
        let p = jack_poly_n(&Partition::from(&[1, 1][..]), 2, &k()).unwrap();
        assert_eq!(p.to_string(), "m(1,1)");
        let p = jack_poly_n(&Partition::from(&[2][..]), 2, &k()).unwrap();
        assert_eq!(p.coeff(&[2, 0]), ParamRat::one());
        // P_(2) = m_2 + 2(1 + k)/(1 + 2k)... at k = -1 it is the Schur s_2 = m_2 + m_11
        assert_eq!(p.specialize_k(&q(-1, 1)).unwrap().coeff(&[1, 1]), q(1, 1));
        assert!(jack_laurent_poly_n(&IntSequence::zeros(3), &k()).unwrap() == SymLaurentPolyN::one(3));
    }

    #[test]
    fn laurent_shift_independent() {
        let chi = seq(&[1, -1]);
        let a = shifted_jack(&chi, 1, &k()).unwrap();
        let b = shifted_jack(&chi, 3, &k()).unwrap();
        assert_eq!(a, b);
        assert_eq!(jack_laurent_poly_n(&seq(&[1, 0]), &k()).unwrap().to_string(), "m(1,0)");
    }

    #[test]
    fn phi_n_examples() {
        let f = LaurentSymFunc::<ParamRat>::parse("p1*p-1").unwrap();
        let img = phi_n_map(&f, 2);
        assert_eq!(img.to_string(), "m(1,-1) + (2)*m(0,0)");
        let p11 = LaurentSymFunc::<ParamRat>::parse("p1*p-1 - p0/(1 + k - k*p0)").unwrap();
        assert!(phi_n_symbolic(&p11, 1).unwrap().is_zero());
    }

    #[test]
    fn torus_examples() {
        let one = SymLaurentPolyN::<BigRational>::one(2);
        assert_eq!(torus_form(&one, &one, -1).unwrap(), q(1, 1));
        let p1 = SymLaurentPolyN::orbit_sum(vec![1, 0], q(1, 1));
        assert_eq!(torus_form(&p1, &p1, -1).unwrap(), q(1, 1));
        let a = SymLaurentPolyN::orbit_sum(vec![1, 0, 0], q(1, 1));
        let b = SymLaurentPolyN::orbit_sum(vec![0, 0, -1], q(1, 1));
        assert!(torus_form(&a, &b, -1).unwrap().is_zero());
    }

    #[test]
    fn finite_checks() {
        assert!(finite_pieri_check(&seq(&[0, 0])).unwrap());
        assert!(finite_pieri_check(&seq(&[1, -1])).unwrap());
        assert!(finite_pieri_check(&seq(&[1, 0, -1])).unwrap());
        assert_eq!(hc_eigen_check_n(&seq(&[1, 0])).unwrap(), "1 - k".parse().unwrap());
        assert!(hc_eigen_check_n(&seq(&[0, 0])).unwrap().is_zero());
        assert_eq!(
            hc_eigen_check_n(&seq(&[1, -1])).unwrap(),
            eigenvalue_en(&seq(&[1, -1]), &k())
        );
        assert!(involution_check_n(&seq(&[1, 0])).unwrap());
        assert!(involution_check_n(&seq(&[1, -1])).unwrap());
        assert!(involution_check_n(&IntSequence::zeros(3)).unwrap());
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(permutations(&[]).len(), 1);
    }
}
