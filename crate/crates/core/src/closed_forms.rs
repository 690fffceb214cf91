//! Scalar formulas on bipartitions: eigenvalues, shifted power sums,
//! Bernoulli sums, Pieri coefficients, Stanley products, evaluations and norms.
//!
//! Everything is generic over the coefficient field; the `k` and `p0`
//! entering a formula are taken from [`Params`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{Coeff, ParamRat, Params};
use crate::error::{JackError, Result};
use crate::partitions::{content, Bipartition, IntSequence, Partition};

/// Running product of factor quotients that refuses zero denominators.
struct Product<C> {
    num: C,
    den: C,
}

impl<C: Coeff> Product<C> {
    fn new() -> Self {
        Product {
            num: C::one(),
            den: C::one(),
        }
    }

    fn push(&mut self, n: C, d: C) -> Result<()> {
        if d.is_zero() {
            return Err(JackError::SingularProduct(format!("{d}")));
        }
        self.num = self.num.mul(&n);
        self.den = self.den.mul(&d);
        Ok(())
    }

    fn value(self) -> C {
        self.num.div(&self.den).expect("denominators are checked on push")
    }
}

fn int<C: Coeff>(n: i64) -> C {
    C::from_i64(n)
}

/// `a + k b` with integer `a, b`.
fn lin<C: Coeff>(a: i64, b: i64, k: &C) -> C {
    int::<C>(a).add(&k.mul_int(b))
}

/// `e_{p0}(α)`.
pub fn eigenvalue_e<C: Coeff>(alpha: &Bipartition, params: &Params<C>) -> C {
    let sq = |p: &Partition| p.parts().iter().map(|&x| (x * x) as i64).sum::<i64>();
    let weighted = |p: &Partition| {
        p.parts()
            .iter()
            .enumerate()
            .map(|(i, &x)| (2 * i as i64 + 1) * x as i64)
            .sum::<i64>()
    };
    let a = sq(&alpha.lambda) + sq(&alpha.mu);
    let b = weighted(&alpha.lambda) + weighted(&alpha.mu);
    let n = alpha.size() as i64;
    lin::<C>(a, b, &params.k).sub(&params.k.mul(&params.p0).mul_int(n))
}

/// `e_N(χ) = Σ χ_i² - k Σ (N - 2i + 1) χ_i`.
pub fn eigenvalue_en<C: Coeff>(chi: &IntSequence, k: &C) -> C {
    let n = chi.len() as i64;
    let c = chi.entries();
    let a: i64 = c.iter().map(|x| x * x).sum();
    let b: i64 = c
        .iter()
        .enumerate()
        .map(|(i, &x)| (n - 2 * (i as i64 + 1) + 1) * x)
        .sum();
    lin::<C>(a, -b, k)
}

/// `p_{r,a}(λ) = Σ_i [(λ_i + k(i-1) + a)^r - (k(i-1) + a)^r]`.
pub fn shifted_power_sum<C: Coeff>(r: u32, a: &C, lam: &Partition, k: &C) -> C {
    let mut acc = C::zero();
    for (i, &li) in lam.parts().iter().enumerate() {
        let base = k.mul_int(i as i64).add(a);
        acc = acc.add(&base.add(&int(li as i64)).pow(r)).sub(&base.pow(r));
    }
    acc
}

/// `p_{r,a,N}(χ)` over a full length-`N` sequence.
pub fn shifted_power_sum_n<C: Coeff>(r: u32, a: &C, chi: &IntSequence, k: &C) -> C {
    let mut acc = C::zero();
    for (i, &ci) in chi.entries().iter().enumerate() {
        let base = k.mul_int(i as i64).add(a);
        acc = acc.add(&base.add(&int(ci)).pow(r)).sub(&base.pow(r));
    }
    acc
}

/// `f_α(p_r) = p_{r,0}(λ) + (-1)^r p_{r, k - k p0}(μ)`.
pub fn hc_value<C: Coeff>(r: u32, alpha: &Bipartition, params: &Params<C>) -> C {
    let k = &params.k;
    let shift = k.sub(&k.mul(&params.p0));
    let lam = shifted_power_sum(r, &C::zero(), &alpha.lambda, k);
    let mu = shifted_power_sum(r, &shift, &alpha.mu, k);
    if r.is_multiple_of(2) {
        lam.add(&mu)
    } else {
        lam.sub(&mu)
    }
}

/// `b_l(α) = l Σ_λ c(□,0)^{l-1} + (-1)^l l Σ_μ c(□, 1 + k - k p0)^{l-1}`.
pub fn bernoulli_b<C: Coeff>(l: u32, alpha: &Bipartition, params: &Params<C>) -> C {
    assert!(l >= 1);
    let k = &params.k;
    let shift = C::one().add(k).sub(&k.mul(&params.p0));
    let zero = C::zero();
    let mut lam = C::zero();
    for b in alpha.lambda.boxes() {
        lam = lam.add(&content(b, k, &zero).pow(l - 1));
    }
    let mut mu = C::zero();
    for b in alpha.mu.boxes() {
        mu = mu.add(&content(b, k, &shift).pow(l - 1));
    }
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    lam.add(&mu.mul_int(sign)).mul_int(l as i64)
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![<BigRational as One>::one()];
    for m in 1..=n {
        // Σ_{j<=m} C(m+1, j) B_j = 0
        let mut s = <BigRational as Zero>::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Coefficients of the Bernoulli polynomial `B_l(z)`, lowest degree first.
pub fn bernoulli_polynomial(l: usize) -> Vec<BigRational> {
    let b = bernoulli_numbers(l);
    let mut binom = BigInt::one();
    let mut out = Vec::with_capacity(l + 1);
    for s in 0..=l {
        out.push(BigRational::from_integer(binom.clone()) * &b[l - s]);
        binom = binom * BigInt::from(l - s) / BigInt::from(s + 1);
    }
    out
}

fn eval_poly<C: Coeff>(coeffs: &[BigRational], z: &C) -> C {
    coeffs
        .iter()
        .rev()
        .fold(C::zero(), |acc, c| acc.mul(z).add(&C::from_rational(c)))
}

/// `Σ_i [B_l(χ_i + k(i-1) + a) - B_l(k(i-1) + a)]` on a finite sequence.
pub fn bernoulli_b_sequence<C: Coeff>(l: usize, a: &C, chi: &IntSequence, k: &C) -> C {
    let poly = bernoulli_polynomial(l);
    let mut acc = C::zero();
    for (i, &ci) in chi.entries().iter().enumerate() {
        let base = k.mul_int(i as i64).add(a);
        acc = acc
            .add(&eval_poly(&poly, &base.add(&int(ci))))
            .sub(&eval_poly(&poly, &base));
    }
    acc
}

/// True if some `b_l`, `l <= l_max`, tells `α` and `β` apart.
pub fn separation_check(alpha: &Bipartition, beta: &Bipartition, l_max: u32) -> bool {
    let p = Params::symbolic();
    (1..=l_max).any(|l| bernoulli_b(l, alpha, &p) != bernoulli_b(l, beta, &p))
}

/// `c_λ(jr, a) = λ_r - j - k(λ'_j - r) + a`.
fn c_lambda<C: Coeff>(lam: &Partition, lamc: &Partition, j: usize, r: usize, a: &C, k: &C) -> C {
    lin::<C>(lam.part(r) as i64 - j as i64, r as i64 - lamc.part(j) as i64, k).add(a)
}

/// `c_α(jr, a) = λ_r + j + k(μ'_j + r) + a`.
fn c_alpha<C: Coeff>(lam: &Partition, muc: &Partition, j: usize, r: usize, a: &C, k: &C) -> C {
    lin::<C>(lam.part(r) as i64 + j as i64, muc.part(j) as i64 + r as i64, k).add(a)
}

/// Pieri coefficient for adding box `(i, j)` to `λ`; zero if not addable.
pub fn pieri_v<C: Coeff>(b: (usize, usize), alpha: &Bipartition, k: &C) -> Result<C> {
    let lam = &alpha.lambda;
    if !lam.can_add(b) {
        return Ok(C::zero());
    }
    let (i, j) = b;
    let lamc = lam.conjugate();
    let one = C::one();
    let m2k = k.mul_int(-2);
    let mk = k.neg();
    let one_mk = one.sub(k);
    let mut prod = Product::new();
    for r in 1..i {
        let c = |a: &C| c_lambda(lam, &lamc, j, r, a, k);
        prod.push(c(&one).mul(&c(&m2k)), c(&mk).mul(&c(&one_mk)))?;
    }
    Ok(prod.value())
}

/// Pieri coefficient for removing box `(i, j)` from `μ`; zero if not removable.
pub fn pieri_u<C: Coeff>(b: (usize, usize), alpha: &Bipartition, params: &Params<C>) -> Result<C> {
    let (lam, mu) = (&alpha.lambda, &alpha.mu);
    if !mu.can_remove(b) {
        return Ok(C::zero());
    }
    let (i, j) = b;
    let k = &params.k;
    let kp0 = k.mul(&params.p0);
    let muc = mu.conjugate();
    let one = C::one();
    let mut prod = Product::new();
    for r in i + 1..=mu.len() {
        let c = |a: &C| c_lambda(mu, &muc, j, r, a, k);
        prod.push(c(&one.add(k)).mul(&c(&k.neg())), c(&one).mul(&c(&C::zero())))?;
    }
    // -1 - k(p0+2), -k p0, -1 - k(p0+1), -k(p0+1)
    let a1 = lin::<C>(-1, -2, k).sub(&kp0);
    let a2 = kp0.neg();
    let a3 = lin::<C>(-1, -1, k).sub(&kp0);
    let a4 = k.neg().sub(&kp0);
    for r in 1..=lam.len() {
        let c = |a: &C| c_alpha(lam, &muc, j, r, a, k);
        prod.push(c(&a1).mul(&c(&a2)), c(&a3).mul(&c(&a4)))?;
    }
    let (ll, lm, mj) = (lam.len() as i64, mu.len() as i64, muc.part(j) as i64);
    let j = j as i64;
    prod.push(
        lin::<C>(j - 1, ll + mj - 1, k).sub(&kp0).mul(&lin(j, mj - lm, k)),
        lin::<C>(j, ll + mj, k).sub(&kp0).mul(&lin(j - 1, mj - lm - 1, k)),
    )?;
    Ok(prod.value())
}

/// Rows and columns of the two-sided diagram of `(λ, μ)`.
struct Figure<'a> {
    lam: &'a Partition,
    mu: &'a Partition,
    lamc: Partition,
    muc: Partition,
}

impl<'a> Figure<'a> {
    fn new(alpha: &'a Bipartition) -> Self {
        Figure {
            lam: &alpha.lambda,
            mu: &alpha.mu,
            lamc: alpha.lambda.conjugate(),
            muc: alpha.mu.conjugate(),
        }
    }

    fn y(&self, i: i64) -> i64 {
        if i > 0 {
            self.lam.part(i as usize) as i64
        } else if i < 0 {
            -(self.mu.part((-i) as usize) as i64)
        } else {
            0
        }
    }

    fn yc(&self, j: i64) -> i64 {
        if j > 0 {
            self.lamc.part(j as usize) as i64
        } else if j < 0 {
            -(self.muc.part((-j) as usize) as i64)
        } else {
            0
        }
    }

    /// `c_Y(□, a) = y_i - j - k(y'_j - i) + a` for `□ = (j, i)`.
    fn c<C: Coeff>(&self, j: i64, i: i64, a: &C, k: &C) -> C {
        lin::<C>(self.y(i) - j, i - self.yc(j), k).add(a)
    }
}

/// Diagrammatic form of [`pieri_v`].
pub fn pieri_v_diagram<C: Coeff>(b: (usize, usize), alpha: &Bipartition, k: &C) -> Result<C> {
    if !alpha.lambda.can_add(b) {
        return Ok(C::zero());
    }
    let fig = Figure::new(alpha);
    let (i, j) = (b.0 as i64, b.1 as i64);
    let one = C::one();
    let mut prod = Product::new();
    for r in 1..i {
        let c = |a: &C| fig.c(j, r, a, k);
        prod.push(c(&k.mul_int(-2)).mul(&c(&one)), c(&k.neg()).mul(&c(&one.sub(k))))?;
    }
    Ok(prod.value())
}

/// Diagrammatic form of [`pieri_u`]; `rect = Some((L, M))` replaces
/// `l(λ), l(μ)` by a bigger rectangle.
pub fn pieri_u_diagram<C: Coeff>(
    b: (usize, usize),
    alpha: &Bipartition,
    params: &Params<C>,
    rect: Option<(usize, usize)>,
) -> Result<C> {
    if !alpha.mu.can_remove(b) {
        return Ok(C::zero());
    }
    let (big_l, big_m) = rect.unwrap_or((alpha.lambda.len(), alpha.mu.len()));
    assert!(big_l >= alpha.lambda.len() && big_m >= alpha.mu.len());
    let (big_l, big_m) = (big_l as i64, big_m as i64);
    let fig = Figure::new(alpha);
    let k = &params.k;
    let kp0 = k.mul(&params.p0);
    let one = C::one();
    // the removed box sits at negative coordinates
    let j = -(b.1 as i64);
    let yj = fig.yc(j);
    let mut prod = Product::new();
    for r in -big_m..-(fig.muc.part(b.1) as i64) {
        let c = |a: &C| fig.c(j, r, a, k);
        prod.push(c(&lin(-1, -1, k)).mul(&c(k)), c(&one.neg()).mul(&c(&C::zero())))?;
    }
    let a1 = lin::<C>(-1, -2, k).sub(&kp0);
    let a2 = kp0.neg();
    let a3 = lin::<C>(-1, -1, k).sub(&kp0);
    let a4 = k.neg().sub(&kp0);
    for r in 1..=big_l {
        let c = |a: &C| fig.c(j, r, a, k);
        prod.push(c(&a1).mul(&c(&a2)), c(&a3).mul(&c(&a4)))?;
    }
    prod.push(
        lin::<C>(j + 1, yj - big_l + 1, k).add(&kp0).mul(&lin(j, yj + big_m, k)),
        lin::<C>(j, yj - big_l, k).add(&kp0).mul(&lin(j + 1, yj + big_m + 1, k)),
    )?;
    Ok(prod.value())
}

/// Finite Pieri coefficient `V_i(χ)`, `i` counted from 1.
pub fn pieri_v_finite<C: Coeff>(i: usize, chi: &IntSequence, k: &C) -> Result<C> {
    let c = chi.entries();
    let one = C::one();
    let mut prod = Product::new();
    for r in 1..i {
        let base = lin::<C>(c[r - 1] - c[i - 1] - 1, r as i64 + 1 - i as i64, k);
        let f = |b: &C| base.add(b);
        prod.push(f(&one).mul(&f(&k.mul_int(-2))), f(&one.sub(k)).mul(&f(&k.neg())))?;
    }
    Ok(prod.value())
}

/// Stanley's product `φ_p(λ, x)`, first form.
pub fn stanley_phi<C: Coeff>(lam: &Partition, p: &C, x: &C, k: &C) -> Result<C> {
    let lamc = lam.conjugate();
    let mut prod = Product::new();
    for (i, j) in lam.boxes() {
        let kp = k.mul(p);
        let num = lin::<C>(j as i64 - 1, i as i64 - 1, k).sub(&kp).add(x);
        let den = lin::<C>(lam.part(i) as i64 - j as i64, i as i64 - 1 - lamc.part(j) as i64, k).add(x);
        prod.push(num, den)?;
    }
    Ok(prod.value())
}

/// Stanley's product, second form (numerator uses the arm length).
pub fn stanley_phi_alt<C: Coeff>(lam: &Partition, p: &C, x: &C, k: &C) -> Result<C> {
    let lamc = lam.conjugate();
    let mut prod = Product::new();
    for (i, j) in lam.boxes() {
        let arm = lam.part(i) as i64 - j as i64;
        let num = lin::<C>(arm, i as i64 - 1, k).sub(&k.mul(p)).add(x);
        let den = lin::<C>(arm, i as i64 - 1 - lamc.part(j) as i64, k).add(x);
        prod.push(num, den)?;
    }
    Ok(prod.value())
}

/// The mixed factor `φ_p(λ, μ, x)`.
pub fn phi_pair<C: Coeff>(lam: &Partition, mu: &Partition, p: &C, x: &C, k: &C) -> Result<C> {
    let muc = mu.conjugate();
    let kp = k.mul(p);
    let mut prod = Product::new();
    for i in 1..=lam.len() {
        let li = lam.part(i) as i64;
        for j in 1..=muc.len() {
            let mj = muc.part(j) as i64;
            let (i, j) = (i as i64, j as i64);
            let base = |a: i64, b: i64| lin::<C>(a, b, k).sub(&kp).add(x);
            prod.push(base(li + j - 1, i - 1), base(j - 1, i - 1))?;
            prod.push(base(j - 1, i - 1 + mj), base(li + j - 1, i - 1 + mj))?;
        }
    }
    Ok(prod.value())
}

fn triple<C: Coeff>(alpha: &Bipartition, params: &Params<C>, x: &C) -> Result<C> {
    let (k, p) = (&params.k, &params.p0);
    Ok(stanley_phi(&alpha.lambda, p, x, k)?
        .mul(&stanley_phi(&alpha.mu, p, x, k)?)
        .mul(&phi_pair(&alpha.lambda, &alpha.mu, p, x, k)?))
}

/// `φ_{p0}(λ,0) φ_{p0}(μ,0) φ_{p0}(λ,μ,0)`.
pub fn evaluation_value<C: Coeff>(alpha: &Bipartition, params: &Params<C>) -> Result<C> {
    triple(alpha, params, &C::zero())
}

/// The square norm: the evaluation triple at `x = 0` over the triple at `x = 1 + k`.
pub fn norm_value<C: Coeff>(alpha: &Bipartition, params: &Params<C>) -> Result<C> {
    let num = triple(alpha, params, &C::zero())?;
    let den = triple(alpha, params, &C::one().add(&params.k))?;
    if den.is_zero() {
        return Err(JackError::SingularProduct(format!("norm denominator for {alpha}")));
    }
    Ok(num.div(&den)?)
}

/// `d_α`: evaluation at `(k, p0)` over the evaluation of `α'` at `(1/k, k p0)`.
pub fn duality_constant(alpha: &Bipartition) -> Result<ParamRat> {
    let num = evaluation_value(alpha, &Params::symbolic())?;
    let den = evaluation_value(&alpha.conjugate(), &Params::theta_dual())?;
    if den.is_zero() {
        return Err(JackError::SingularProduct(format!("dual evaluation for {alpha}")));
    }
    Ok(num.checked_div(&den)?)
}

/// `Φ(λ, k)`, the conjectured limiting norm factor.
pub fn phi_infinity<C: Coeff>(lam: &Partition, k: &C) -> Result<C> {
    let lamc = lam.conjugate();
    let mut prod = Product::new();
    for (i, j) in lam.boxes() {
        let arm = lam.part(i) as i64 - j as i64;
        let leg = lamc.part(j) as i64;
        prod.push(
            lin::<C>(arm + 1, i as i64 - leg, k),
            lin::<C>(arm, i as i64 - 1 - leg, k),
        )?;
    }
    Ok(prod.value())
}

/// `A(λ) = Π (λ_i - j + k(i - 1 - λ'_j))`.
pub fn a_single<C: Coeff>(lam: &Partition, k: &C) -> C {
    let lamc = lam.conjugate();
    lam.boxes().fold(C::one(), |acc, (i, j)| {
        acc.mul(&lin(
            lam.part(i) as i64 - j as i64,
            i as i64 - 1 - lamc.part(j) as i64,
            k,
        ))
    })
}

/// `A(λ, μ)`, the mixed normalizing factor of the integrality conjecture.
pub fn a_pair<C: Coeff>(alpha: &Bipartition, params: &Params<C>) -> C {
    let (lam, muc) = (&alpha.lambda, alpha.mu.conjugate());
    let k = &params.k;
    let kp = k.mul(&params.p0);
    let mut acc = C::one();
    for i in 1..=lam.len() as i64 {
        for j in 1..=muc.len() as i64 {
            let mj = muc.part(j as usize) as i64;
            let li = lam.part(i as usize) as i64;
            acc = acc
                .mul(&lin::<C>(j - 1, i - 1, k).sub(&kp))
                .mul(&lin::<C>(li + j - 1, i - 1 + mj, k).sub(&kp));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q;

    fn r(s: &str) -> ParamRat {
        s.parse().unwrap()
    }

    fn bp(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::from_parts(l, m)
    }

    fn sym() -> Params<ParamRat> {
        Params::symbolic()
    }

    fn k() -> ParamRat {
        ParamRat::k()
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(eigenvalue_e(&bp(&[1], &[1]), &sym()), r("2 + 2*k - 2*k*p0"));
        assert!(eigenvalue_e(&bp(&[], &[]), &sym()).is_zero());
        assert_eq!(eigenvalue_e(&bp(&[2], &[]), &sym()), r("4 + 2*k - 2*k*p0"));
        let chi = IntSequence::new(vec![1, 0, -1]).unwrap();
        assert_eq!(eigenvalue_en(&chi, &k()), r("2 - 4*k"));
        assert!(eigenvalue_en(&IntSequence::zeros(4), &k()).is_zero());
        assert_eq!(
            eigenvalue_e(&bp(&[1], &[1]), &sym()).substitute_p0(&q(3, 1)).unwrap(),
            eigenvalue_en(&chi, &k())
        );
    }

    #[test]
    fn shifted_sums() {
        let zero = ParamRat::zero();
        assert_eq!(shifted_power_sum(1, &zero, &Partition::from(&[2, 1][..]), &k()), r("3"));
        assert!(shifted_power_sum(3, &r("p0"), &Partition::empty(), &k()).is_zero());
        assert!(hc_value(1, &bp(&[1], &[1]), &sym()).is_zero());
        assert_eq!(hc_value(1, &bp(&[3, 1], &[2]), &sym()), r("2"));
    }

    #[test]
    fn eigenvalue_from_harish_chandra_values() {
        let p = sym();
        for a in Bipartition::up_to(4) {
            let f1 = hc_value(1, &a, &p);
            let f2 = hc_value(2, &a, &p);
            let e = &f2 + &(&(&k() - &(&k() * &ParamRat::p0())) * &f1);
            assert_eq!(e, eigenvalue_e(&a, &p), "{a}");
            assert_eq!(f1, ParamRat::from_int(a.degree()));
        }
    }

    #[test]
    fn bernoulli_examples() {
        let p = sym();
        assert_eq!(bernoulli_b(1, &bp(&[2, 1], &[1]), &p), r("2"));
        for l in 1..6 {
            assert!(bernoulli_b(l, &bp(&[], &[]), &p).is_zero());
        }
        assert!(bernoulli_b(2, &bp(&[1], &[]), &p).is_zero());
        let b = bernoulli_numbers(4);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[4], q(-1, 30));
        // B_2(z) = z^2 - z + 1/6
        assert_eq!(bernoulli_polynomial(2), vec![q(1, 6), q(-1, 1), q(1, 1)]);
    }

    #[test]
    fn separation_examples() {
        assert!(separation_check(&bp(&[1], &[]), &bp(&[], &[1]), 1));
        assert!(separation_check(&bp(&[2], &[]), &bp(&[1, 1], &[]), 2));
        assert!(!separation_check(&bp(&[2], &[]), &bp(&[1, 1], &[]), 1));
    }

    #[test]
    fn pieri_v_examples() {
        let a = bp(&[1], &[]);
        assert!(pieri_v((1, 2), &a, &k()).unwrap().is_one());
        assert!(pieri_v((3, 1), &a, &k()).unwrap().is_zero());
        // classical Jack value 2/(1-k)
        assert_eq!(pieri_v((2, 1), &a, &k()).unwrap(), r("2/(1 - k)"));
    }

    #[test]
    fn pieri_u_examples() {
        let a = bp(&[1], &[1]);
        assert!(pieri_u((2, 1), &a, &sym()).unwrap().is_zero());
        assert!(pieri_u((1, 1), &bp(&[1], &[]), &sym()).unwrap().is_zero());
        let u = pieri_u((1, 1), &a, &sym()).unwrap();
        assert_eq!(pieri_u_diagram((1, 1), &a, &sym(), None).unwrap(), u);
    }

    #[test]
    fn finite_v_matches_bipartition_v() {
        // χ = χ_N(λ, ∅): V_i(χ) equals V for the box in row i
        let lam = Partition::from(&[2, 1][..]);
        let a = Bipartition::new(lam.clone(), Partition::empty());
        let chi = IntSequence::new(lam.padded(3).iter().map(|&x| x as i64).collect()).unwrap();
        for (i, j) in lam.add_box_candidates() {
            assert_eq!(
                pieri_v_finite(i, &chi, &k()).unwrap(),
                pieri_v((i, j), &a, &k()).unwrap()
            );
        }
    }

    #[test]
    fn stanley_examples() {
        let p0 = ParamRat::p0();
        let zero = ParamRat::zero();
        assert_eq!(stanley_phi(&Partition::from(&[1][..]), &p0, &zero, &k()).unwrap(), p0);
        assert!(stanley_phi(&Partition::empty(), &r("p0 + 3"), &r("k"), &k())
            .unwrap()
            .is_one());
        let one = Partition::from(&[1][..]);
        let pair = phi_pair(&one, &one, &p0, &zero, &k()).unwrap();
        assert_eq!(pair, r("((1 - k*p0)/(-k*p0)) * (k*(1 - p0)/(1 + k*(1 - p0)))"));
        assert!(phi_pair(&Partition::empty(), &one, &p0, &zero, &k()).unwrap().is_one());
    }

    #[test]
    fn evaluation_and_norm_examples() {
        let p = sym();
        assert!(evaluation_value(&bp(&[], &[]), &p).unwrap().is_one());
        assert_eq!(
            evaluation_value(&bp(&[1], &[1]), &p).unwrap(),
            r("p0^2 - p0/(1 + k - k*p0)")
        );
        assert_eq!(evaluation_value(&bp(&[1], &[]), &p).unwrap(), r("p0"));
        assert!(norm_value(&bp(&[], &[]), &p).unwrap().is_one());
        assert_eq!(norm_value(&bp(&[], &[1]), &p).unwrap(), r("p0/(1 + k - k*p0)"));
        let n = norm_value(&bp(&[1], &[]), &p).unwrap();
        assert_eq!(n.specialize(&q(-1, 1), &q(2, 1)).unwrap(), q(1, 1));
    }

    #[test]
    fn duality_examples() {
        assert!(duality_constant(&bp(&[], &[])).unwrap().is_one());
        assert_eq!(duality_constant(&bp(&[1], &[])).unwrap(), r("1/k"));
    }

    #[test]
    fn phi_infinity_examples() {
        assert!(phi_infinity(&Partition::empty(), &k()).unwrap().is_one());
        assert_eq!(phi_infinity(&Partition::from(&[1][..]), &k()).unwrap(), r("-1/k"));
    }

    #[test]
    fn singular_products_error() {
        // x = k makes the single-box denominator -k + x vanish
        let one = Partition::from(&[1][..]);
        assert!(matches!(
            stanley_phi(&one, &ParamRat::p0(), &k(), &k()),
            Err(JackError::SingularProduct(_))
        ));
    }

    #[test]
    fn integrality_factors() {
        let a = bp(&[1], &[1]);
        assert_eq!(a_single(&a.lambda, &k()), r("-k"));
        assert_eq!(a_pair(&a, &sym()), r("(-k*p0)*(1 + k - k*p0)"));
    }
}
