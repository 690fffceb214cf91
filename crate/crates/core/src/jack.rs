//! Construction of Jack–Laurent functions `P_{λ,μ}` by spectral projection.
//!
//! `P_{∅,μ}` is the star of the Jack function `P_μ`, itself built box by box
//! with `H^(2)`. Boxes of `λ` are then added one at a time: multiply by `p1`
//! and kill every other eigencomponent of `L^(2)` reachable by Pieri.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use serde::Serialize;

use crate::closed_forms::{eigenvalue_e, evaluation_value, norm_value, pieri_u, pieri_v};
use crate::coeff::{Coeff, ParamRat, Params};
use crate::error::{JackError, Result};
use crate::laurent::{LaurentSymFunc, Lsf};
use crate::operators::{cms_l, cms_l2_direct, h2_direct};
use crate::partitions::{Bipartition, Partition};

pub type Cell = (usize, usize);

/// One box added during construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Mu { row: usize, col: usize },
    Lambda { row: usize, col: usize },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Mu { row, col } => write!(f, "mu+({row},{col})"),
            Step::Lambda { row, col } => write!(f, "lambda+({row},{col})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JackLaurentFunction {
    pub alpha: Bipartition,
    pub f: Lsf,
    pub eigenvalue2: ParamRat,
    pub provenance: Vec<Step>,
}

/// Boxes of `p` in the order they are added when the deepest removable box
/// is always the last one in.
pub fn default_order(p: &Partition) -> Vec<Cell> {
    let mut out = Vec::with_capacity(p.size());
    let mut cur = p.clone();
    while let Some(b) = cur.deepest_removable() {
        out.push(b);
        cur = cur.remove_box(b).unwrap();
    }
    out.reverse();
    out
}

/// Checks that `order` builds `target` from the empty diagram.
pub fn is_valid_order(order: &[Cell], target: &Partition) -> bool {
    let mut cur = Partition::empty();
    for &b in order {
        match cur.add_box(b) {
            Some(p) => cur = p,
            None => return false,
        }
    }
    cur == *target
}

fn singular(what: String) -> JackError {
    JackError::SingularParameter(what)
}

/// `P_{ν+b}` from `P_ν` inside `Λ`.
fn positive_step<C: Coeff>(prev: &LaurentSymFunc<C>, nu: &Partition, b: Cell, k: &C) -> Result<LaurentSymFunc<C>> {
    let flat = Params {
        k: k.clone(),
        p0: C::zero(),
    };
    let ev = |p: &Partition| eigenvalue_e(&Bipartition::new(p.clone(), Partition::empty()), &flat);
    let target = nu.add_box(b).expect("box must be addable");
    let s = ev(&target);
    let mut g = prev.mul(&LaurentSymFunc::generator(1));
    let mut denom = C::one();
    for x in nu.add_box_candidates() {
        if x == b {
            continue;
        }
        let other = nu.add_box(x).unwrap();
        let e = ev(&other);
        let gap = s.sub(&e);
        if gap.is_zero() {
            return Err(singular(format!("eigenvalues of {target} and {other} coincide")));
        }
        let mut h = h2_direct(&g, k)?;
        h.add_scaled(&e.neg(), &g);
        g = h;
        denom = denom.mul(&gap);
    }
    let v = pieri_v(b, &Bipartition::new(nu.clone(), Partition::empty()), k)?;
    if v.is_zero() {
        return Err(singular(format!("Pieri coefficient of box {b:?} on {nu} vanishes")));
    }
    Ok(g.scale(&C::one().div(&denom.mul(&v))?))
}

/// `P_{(λ+b, μ)}` from `P_{(λ, μ)}`.
fn laurent_step<C: Coeff>(
    prev: &LaurentSymFunc<C>,
    alpha: &Bipartition,
    b: Cell,
    params: &Params<C>,
) -> Result<LaurentSymFunc<C>> {
    let (up, down) = alpha.pieri_neighbours();
    let target = Bipartition::new(alpha.lambda.add_box(b).expect("box must be addable"), alpha.mu.clone());
    let s = eigenvalue_e(&target, params);
    let mut g = prev.mul(&LaurentSymFunc::generator(1));
    let mut denom = C::one();
    for (_, gamma) in up.into_iter().chain(down) {
        if gamma == target {
            continue;
        }
        let e = eigenvalue_e(&gamma, params);
        let gap = s.sub(&e);
        if gap.is_zero() {
            return Err(singular(format!("eigenvalues of {target} and {gamma} coincide")));
        }
        let mut h = cms_l2_direct(&g, params);
        h.add_scaled(&e.neg(), &g);
        g = h;
        denom = denom.mul(&gap);
    }
    let v = pieri_v(b, alpha, &params.k)?;
    if v.is_zero() {
        return Err(singular(format!("Pieri coefficient of box {b:?} on {alpha} vanishes")));
    }
    Ok(g.scale(&C::one().div(&denom.mul(&v))?))
}

/// Jack function `P_λ` in `Λ`, built along an explicit box order.
pub fn jack_positive_with_order<C: Coeff>(order: &[Cell], k: &C) -> Result<LaurentSymFunc<C>> {
    let mut f = LaurentSymFunc::one();
    let mut nu = Partition::empty();
    for &b in order {
        f = positive_step(&f, &nu, b, k)?;
        nu = nu
            .add_box(b)
            .ok_or_else(|| JackError::Parse(format!("box {b:?} is not addable")))?;
    }
    Ok(f)
}

/// `P_α` along explicit box orders for `μ` (base case) and `λ`.
pub fn construct_with_order<C: Coeff>(
    mu_order: &[Cell],
    lambda_order: &[Cell],
    params: &Params<C>,
) -> Result<LaurentSymFunc<C>> {
    let mut f = jack_positive_with_order(mu_order, &params.k)?.star();
    let mut mu = Partition::empty();
    for &b in mu_order {
        mu = mu
            .add_box(b)
            .ok_or_else(|| JackError::Parse(format!("box {b:?} is not addable")))?;
    }
    let mut alpha = Bipartition::new(Partition::empty(), mu);
    for &b in lambda_order {
        if !alpha.lambda.can_add(b) {
            return Err(JackError::Parse(format!("box {b:?} is not addable")));
        }
        f = laurent_step(&f, &alpha, b, params)?;
        alpha.lambda = alpha.lambda.add_box(b).unwrap();
    }
    Ok(f)
}

type Cache<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn positive_cache() -> &'static Cache<Partition, Lsf> {
    static CACHE: OnceLock<Cache<Partition, Lsf>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn laurent_cache() -> &'static Cache<Bipartition, JackLaurentFunction> {
    static CACHE: OnceLock<Cache<Bipartition, JackLaurentFunction>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn lookup<K: std::hash::Hash + Eq + Clone, V>(cache: &Cache<K, V>, key: &K) -> Option<Arc<V>> {
    cache.read().unwrap().get(key).cloned()
}

fn publish<K: std::hash::Hash + Eq + Clone, V>(cache: &Cache<K, V>, key: K, value: V) -> Arc<V> {
    // a concurrent builder may have won; both values are equal, keep the first
    cache
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::new(value))
        .clone()
}

/// The monic Jack function `P_λ` with symbolic `k`.
pub fn jack_positive(lam: &Partition) -> Result<Arc<Lsf>> {
    if let Some(f) = lookup(positive_cache(), lam) {
        return Ok(f);
    }
    let f = match lam.deepest_removable() {
        None => Lsf::one(),
        Some(b) => {
            let nu = lam.remove_box(b).unwrap();
            let prev = jack_positive(&nu)?;
            positive_step(&prev, &nu, b, &ParamRat::k())?
        }
    };
    Ok(publish(positive_cache(), lam.clone(), f))
}

/// `P^{(k,p0)}_α` with symbolic parameters, memoized.
pub fn construct(alpha: &Bipartition) -> Result<Arc<JackLaurentFunction>> {
    if let Some(f) = lookup(laurent_cache(), alpha) {
        return Ok(f);
    }
    let params = Params::symbolic();
    let out = match alpha.lambda.deepest_removable() {
        None => JackLaurentFunction {
            alpha: alpha.clone(),
            f: jack_positive(&alpha.mu)?.star(),
            eigenvalue2: eigenvalue_e(alpha, &params),
            provenance: default_order(&alpha.mu)
                .into_iter()
                .map(|(row, col)| Step::Mu { row, col })
                .collect(),
        },
        Some(b) => {
            let smaller = Bipartition::new(alpha.lambda.remove_box(b).unwrap(), alpha.mu.clone());
            let prev = construct(&smaller)?;
            let mut provenance = prev.provenance.clone();
            provenance.push(Step::Lambda { row: b.0, col: b.1 });
            JackLaurentFunction {
                alpha: alpha.clone(),
                f: laurent_step(&prev.f, &smaller, b, &params)?,
                eigenvalue2: eigenvalue_e(alpha, &params),
                provenance,
            }
        }
    };
    Ok(publish(laurent_cache(), alpha.clone(), out))
}

/// Numeric-parameter construction along the default order.
pub fn rational_mode_construct(
    alpha: &Bipartition,
    k0: &BigRational,
    p00: &BigRational,
) -> Result<LaurentSymFunc<BigRational>> {
    let params = Params::numeric(k0.clone(), p00.clone());
    construct_with_order(&default_order(&alpha.mu), &default_order(&alpha.lambda), &params)
}

/// Coefficients of a constructed function at `(k0, p00)`.
pub fn specialize_function(
    jf: &JackLaurentFunction,
    k0: &BigRational,
    p00: &BigRational,
) -> Result<LaurentSymFunc<BigRational>> {
    Ok(jf.f.specialize(k0, p00)?)
}

/// `p1 P_α = Σ V P_{λ+x,μ} + Σ U P_{λ,μ-y}`.
pub fn pieri_identity_check(alpha: &Bipartition) -> Result<bool> {
    let params = Params::symbolic();
    let lhs = construct(alpha)?.f.mul(&Lsf::generator(1));
    let (up, down) = alpha.pieri_neighbours();
    let mut rhs = Lsf::zero();
    for (b, beta) in up {
        rhs.add_scaled(&pieri_v(b, alpha, &params.k)?, &construct(&beta)?.f);
    }
    for (b, beta) in down {
        rhs.add_scaled(&pieri_u(b, alpha, &params)?, &construct(&beta)?.f);
    }
    Ok(lhs == rhs)
}

/// `star(P_{λ,μ}) = P_{μ,λ}`.
pub fn star_symmetry_check(alpha: &Bipartition) -> Result<bool> {
    Ok(construct(alpha)?.f.star() == construct(&alpha.w())?.f)
}

/// `θ^{-1}(P_α) = d_α · P_{α'}` with `(k, p0) -> (1/k, k p0)` in the latter.
pub fn theta_duality_check(alpha: &Bipartition) -> Result<bool> {
    let lhs = construct(alpha)?.f.theta_sym(true);
    let d = crate::closed_forms::duality_constant(alpha)?;
    let dual = Params::theta_dual();
    let rhs = construct(&alpha.conjugate())?
        .f
        .substitute_params(&dual.k, &dual.p0)?
        .scale(&d);
    Ok(lhs == rhs)
}

/// `ε(P_α)` against the product formula.
pub fn evaluation_check(alpha: &Bipartition) -> Result<bool> {
    Ok(construct(alpha)?.f.evaluate_eps() == evaluation_value(alpha, &Params::symbolic())?)
}

/// Applies `L^(r)`, `r = 1..=r_max`, and reads off each eigenvalue.
pub fn eigen_check_all(alpha: &Bipartition, r_max: usize) -> Result<Vec<(usize, ParamRat)>> {
    let params = Params::symbolic();
    let p = construct(alpha)?;
    let mut out = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let image = cms_l(r, &p.f, &params);
        let c = image
            .ratio_to(&p.f)
            .ok_or_else(|| JackError::NotEigenvector(format!("L^({r}) on {alpha}")))?;
        let expected = match r {
            1 => Some(ParamRat::from_int(alpha.degree())),
            2 => Some(p.eigenvalue2.clone()),
            _ => None,
        };
        if let Some(e) = expected {
            if e != c {
                return Err(JackError::NotEigenvector(format!(
                    "L^({r}) on {alpha}: got {c}, expected {e}"
                )));
            }
        }
        out.push((r, c));
    }
    Ok(out)
}

/// The norm formula specialized, for callers comparing with torus forms.
pub fn norm_at(alpha: &Bipartition, k0: &BigRational, p00: &BigRational) -> Result<BigRational> {
    norm_value(alpha, &Params::numeric(k0.clone(), p00.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q;

    fn bp(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::from_parts(l, m)
    }

    fn lsf(s: &str) -> Lsf {
        Lsf::parse(s).unwrap()
    }

    #[test]
    fn small_jack_functions() {
        assert_eq!(*jack_positive(&Partition::from(&[1][..])).unwrap(), lsf("p1"));
        assert_eq!(
            *jack_positive(&Partition::from(&[1, 1][..])).unwrap(),
            lsf("(1/2)*p1^2 - (1/2)*p2")
        );
        assert!(!jack_positive(&Partition::from(&[3, 1][..])).unwrap().contains_p0());
    }

    #[test]
    fn p11_and_p111() {
        assert_eq!(construct(&bp(&[1], &[1])).unwrap().f, lsf("p1*p-1 - p0/(1 + k - k*p0)"));
        assert_eq!(
            construct(&bp(&[1, 1], &[1])).unwrap().f,
            lsf("(1/2)*p1^2*p-1 - (1/2)*p2*p-1 - (2*(p0 - 1)/(2 + 4*k - 2*k*p0))*p1")
        );
        assert_eq!(construct(&bp(&[], &[1])).unwrap().f, lsf("p-1"));
    }

    #[test]
    fn provenance_is_deepest_first() {
        let jf = construct(&bp(&[2, 1], &[1])).unwrap();
        let steps: Vec<String> = jf.provenance.iter().map(|s| s.to_string()).collect();
        assert_eq!(steps, ["mu+(1,1)", "lambda+(1,1)", "lambda+(1,2)", "lambda+(2,1)"]);
        assert_eq!(
            default_order(&Partition::from(&[2, 2][..])),
            vec![(1, 1), (1, 2), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn specialization() {
        let jf = construct(&bp(&[1], &[1])).unwrap();
        assert_eq!(
            specialize_function(&jf, &q(-1, 1), &q(5, 1)).unwrap(),
            lsf("p1*p-1 - 1").specialize(&q(0, 1), &q(0, 1)).unwrap()
        );
        assert!(matches!(
            specialize_function(&jf, &q(1, 1), &q(2, 1)),
            Err(JackError::Coeff(crate::CoeffError::PoleAtSpecialization { .. }))
        ));
    }

    #[test]
    fn rational_mode_agrees() {
        for (a, k0, p00) in [
            (bp(&[1], &[1]), q(-1, 2), q(7, 3)),
            (bp(&[2, 1], &[2]), q(-5, 7), q(13, 2)),
        ] {
            let sym = specialize_function(&construct(&a).unwrap(), &k0, &p00).unwrap();
            assert_eq!(rational_mode_construct(&a, &k0, &p00).unwrap(), sym, "{a}");
        }
    }

    #[test]
    fn rational_mode_collision() {
        // e((2),(1)) = e((1,1),(1)) at k = 1
        let r = rational_mode_construct(&bp(&[2], &[1]), &q(1, 1), &q(1, 3));
        assert!(matches!(r, Err(JackError::SingularParameter(_))));
    }

    #[test]
    fn order_independence() {
        let params = Params::symbolic();
        let a = construct_with_order(&[(1, 1), (2, 1)], &[(1, 1), (2, 1), (1, 2)], &params).unwrap();
        assert_eq!(a, construct(&bp(&[2, 1], &[1, 1])).unwrap().f);
    }

    #[test]
    fn small_checks() {
        for a in Bipartition::up_to(2) {
            assert!(pieri_identity_check(&a).unwrap(), "pieri {a}");
            assert!(star_symmetry_check(&a).unwrap(), "star {a}");
            assert!(theta_duality_check(&a).unwrap(), "theta {a}");
            assert!(evaluation_check(&a).unwrap(), "eval {a}");
        }
    }

    #[test]
    fn eigenvalues_read_off() {
        let e = eigen_check_all(&bp(&[1], &[1]), 2).unwrap();
        assert!(e[0].1.is_zero());
        assert_eq!(e[1].1, "2 + 2*k - 2*k*p0".parse().unwrap());
        let plus = eigen_check_all(&bp(&[1], &[]), 3).unwrap();
        let minus = eigen_check_all(&bp(&[], &[1]), 3).unwrap();
        assert_eq!(plus[0].1, ParamRat::one());
        assert_eq!(minus[2].1, -&plus[2].1);
    }
}
