//! Experimental checks about the `p0 -> ∞` limit. Outcomes are reported,
//! never asserted.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::closed_forms::{a_pair, a_single, norm_value, phi_infinity};
use crate::coeff::{Coeff, ParamRat, Params};
use crate::error::{JackError, Result};
use crate::jack::construct;
use crate::laurent::{Lsf, PMonomial};
use crate::par::Exec;
use crate::partitions::{Bipartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub alpha: String,
    pub verdict: Verdict,
    pub witness: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub name: String,
    pub instances: Vec<Instance>,
}

impl ConjectureReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.instances.iter().filter(|i| i.verdict == v).count()
    }
}

/// `lim_{p0 -> ∞} c`, or `None` when the numerator outgrows the denominator.
pub fn p0_limit(c: &ParamRat) -> Option<ParamRat> {
    let (dn, dd) = c.p0_degrees();
    if c.is_zero() || dn < dd {
        return Some(ParamRat::zero());
    }
    if dn > dd {
        return None;
    }
    let (ln, ld) = c.p0_leading();
    Some(ln.checked_div(&ld).expect("leading coefficient is nonzero"))
}

/// Coefficient-wise `p0 -> ∞` limit of `P_α`.
pub fn p0_infinity_limit(alpha: &Bipartition) -> Result<(Option<Lsf>, Instance)> {
    let f = &construct(alpha)?.f;
    let mut witness = BTreeMap::new();
    let mut out = Lsf::zero();
    let mut converges = true;
    for (m, c) in f.terms() {
        match p0_limit(c) {
            Some(l) => {
                witness.insert(m.to_string(), format!("{c} -> {l}"));
                out.add_term(m.clone(), l);
            }
            None => {
                witness.insert(m.to_string(), format!("{c} diverges"));
                converges = false;
            }
        }
    }
    let verdict = if converges { Verdict::Holds } else { Verdict::Fails };
    let inst = Instance {
        alpha: alpha.to_string(),
        verdict,
        witness,
    };
    Ok((converges.then_some(out), inst))
}

/// Limit of the norm against `Φ(λ) Φ(μ)`.
pub fn norm_infinity_check(alpha: &Bipartition) -> Instance {
    let p = Params::symbolic();
    let k = ParamRat::k();
    let mut witness = BTreeMap::new();
    let verdict = match (
        norm_value(alpha, &p),
        phi_infinity(&alpha.lambda, &k).and_then(|a| Ok(a.mul(&phi_infinity(&alpha.mu, &k)?))),
    ) {
        (Ok(n), Ok(phi)) => {
            witness.insert("norm".into(), n.to_string());
            witness.insert("phi".into(), phi.to_string());
            match p0_limit(&n) {
                Some(l) => {
                    witness.insert("limit".into(), l.to_string());
                    if l == phi {
                        Verdict::Holds
                    } else {
                        Verdict::Fails
                    }
                }
                None => {
                    witness.insert("limit".into(), "diverges".into());
                    Verdict::Fails
                }
            }
        }
        (n, phi) => {
            witness.insert("error".into(), format!("{:?} {:?}", n.err(), phi.err()));
            Verdict::Indeterminate
        }
    };
    Instance {
        alpha: alpha.to_string(),
        verdict,
        witness,
    }
}

/// Polynomiality of `A(λ,μ) A(λ) A(μ) P_α`; the `p0`-only variant is
/// recorded in the witness.
pub fn integrality_check(alpha: &Bipartition) -> Result<Instance> {
    let p = Params::symbolic();
    let k = ParamRat::k();
    let f = &construct(alpha)?.f;
    let pair = a_pair(alpha, &p);
    let full = pair.mul(&a_single(&alpha.lambda, &k)).mul(&a_single(&alpha.mu, &k));
    let j = f.scale(&full);
    let weak = f.scale(&pair);
    let polynomial = j.terms().all(|(_, c)| c.is_polynomial());
    let weak_ok = weak.terms().all(|(_, c)| c.p0_degrees().1 == 0);
    let mut witness = BTreeMap::new();
    witness.insert("J".into(), j.to_string());
    witness.insert("weak".into(), weak_ok.to_string());
    let verdict = if polynomial { Verdict::Holds } else { Verdict::Fails };
    Ok(Instance {
        alpha: alpha.to_string(),
        verdict,
        witness,
    })
}

/// All monomials `p_ρ p*_σ` with `|ρ| = m`, `|σ| = n`.
pub fn monomials_of_bidegree(m: usize, n: usize) -> Vec<PMonomial> {
    let mut out = Vec::new();
    for rho in Partition::all_of(m) {
        for sigma in Partition::all_of(n) {
            let idx: Vec<i32> = rho
                .parts()
                .iter()
                .map(|&x| x as i32)
                .chain(sigma.parts().iter().map(|&x| -(x as i32)))
                .collect();
            out.push(PMonomial::from_indices(&idx));
        }
    }
    out
}

/// Solves the square system `a x = b` by elimination.
pub fn solve<C: Coeff>(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Result<Vec<C>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| JackError::SingularParameter(format!("singular system at column {col}")))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = C::one().div(&a[col][col])?;
        let pivot = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            for (x, p) in a[r].iter_mut().zip(&pivot).skip(col) {
                *x = x.sub(&factor.mul(p));
            }
            b[r] = b[r].sub(&factor.mul(&b[col]));
        }
    }
    (0..n).map(|i| Ok(b[i].div(&a[i][i])?)).collect()
}

/// Coefficients of `f` in the basis `P_α`.
pub fn jack_expansion(f: &Lsf) -> Result<BTreeMap<Bipartition, ParamRat>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some(&(m, n)) = rest.bidegree_components().keys().max_by_key(|&&(m, n)| (m + n, m)) {
        let (m, n) = (m as usize, n as usize);
        let comp = rest.bidegree_components().remove(&(m as u64, n as u64)).unwrap();
        let alphas: Vec<Bipartition> = Partition::all_of(m)
            .into_iter()
            .flat_map(|l| {
                Partition::all_of(n)
                    .into_iter()
                    .map(move |mu| Bipartition::new(l.clone(), mu))
            })
            .collect();
        let funcs = alphas
            .iter()
            .map(|a| Ok(construct(a)?.f.clone()))
            .collect::<Result<Vec<_>>>()?;
        let rows = monomials_of_bidegree(m, n);
        let a = rows
            .iter()
            .map(|mono| funcs.iter().map(|g| g.coeff(mono)).collect())
            .collect();
        let b = rows.iter().map(|mono| comp.coeff(mono)).collect();
        let x = solve(a, b)?;
        for ((alpha, g), c) in alphas.into_iter().zip(&funcs).zip(x) {
            if !c.is_zero() {
                rest.add_scaled(&c.neg(), g);
                out.insert(alpha, c);
            }
        }
    }
    Ok(out)
}

/// `(f, g)_{p0}` built from the norms of the `P_α`.
pub fn bilinear_form(f: &Lsf, g: &Lsf) -> Result<ParamRat> {
    let p = Params::symbolic();
    let (ef, eg) = (jack_expansion(f)?, jack_expansion(g)?);
    let mut acc = ParamRat::zero();
    for (alpha, c) in &ef {
        if let Some(d) = eg.get(alpha) {
            acc = &acc + &(&(c * d) * &norm_value(alpha, &p)?);
        }
    }
    Ok(acc)
}

/// Limiting pairings of the products `p_ρ p*_σ` of total degree `<= max_deg`.
pub fn limiting_pairings(max_deg: usize) -> Result<ConjectureReport> {
    let mut monos = Vec::new();
    for total in 0..=max_deg {
        for m in 0..=total {
            monos.extend(monomials_of_bidegree(m, total - m));
        }
    }
    let mut instances = Vec::new();
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i + 1..] {
            let form = bilinear_form(
                &Lsf::monomial(a.clone(), ParamRat::one()),
                &Lsf::monomial(b.clone(), ParamRat::one()),
            )?;
            let limit = p0_limit(&form);
            let mut witness = BTreeMap::new();
            witness.insert("form".into(), form.to_string());
            witness.insert(
                "limit".into(),
                limit.as_ref().map_or("diverges".into(), |l| l.to_string()),
            );
            let verdict = match limit {
                Some(l) if !l.is_zero() => Verdict::Holds,
                Some(_) => Verdict::Fails,
                None => Verdict::Indeterminate,
            };
            instances.push(Instance {
                alpha: format!("<{a}, {b}>"),
                verdict,
                witness,
            });
        }
    }
    Ok(ConjectureReport {
        name: "nonzero_limiting_pairing".into(),
        instances,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FullReport {
    pub max_size: usize,
    pub reports: Vec<ConjectureReport>,
}

/// All report-only checks for `|λ| + |μ| <= max_size`.
pub fn run_all(max_size: usize, exec: Exec) -> Result<FullReport> {
    let alphas = Bipartition::up_to(max_size);
    let limits = exec.map(&alphas, |a| p0_infinity_limit(a).map(|(_, i)| i));
    let norms = exec.map(&alphas, norm_infinity_check);
    let integral = exec.map(&alphas, integrality_check);
    Ok(FullReport {
        max_size,
        reports: vec![
            ConjectureReport {
                name: "p0_infinity_limit".into(),
                instances: limits.into_iter().collect::<Result<_>>()?,
            },
            ConjectureReport {
                name: "limiting_norm".into(),
                instances: norms,
            },
            ConjectureReport {
                name: "integrality".into(),
                instances: integral.into_iter().collect::<Result<_>>()?,
            },
            limiting_pairings(max_size.min(2))?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::from_parts(l, m)
    }

    #[test]
    fn limit_of_p11() {
        let (lim, inst) = p0_infinity_limit(&bp(&[1], &[1])).unwrap();
        assert_eq!(inst.verdict, Verdict::Holds);
        assert_eq!(lim.unwrap(), Lsf::parse("p1*p-1 + 1/k").unwrap());
        let (lim, _) = p0_infinity_limit(&bp(&[2], &[])).unwrap();
        assert_eq!(
            lim.unwrap(),
            *crate::jack::jack_positive(&Partition::from(&[2][..])).unwrap()
        );
    }

    #[test]
    fn limiting_norms() {
        assert_eq!(norm_infinity_check(&bp(&[], &[])).verdict, Verdict::Holds);
        let i = norm_infinity_check(&bp(&[], &[1]));
        assert_eq!(i.verdict, Verdict::Holds);
        assert_eq!(i.witness["limit"], "(-1)/(k)");
    }

    #[test]
    fn integrality_p11() {
        let i = integrality_check(&bp(&[1], &[1])).unwrap();
        assert_eq!(i.verdict, Verdict::Holds);
        assert_eq!(i.witness["weak"], "true");
    }

    #[test]
    fn expansion_round_trip() {
        let f = Lsf::parse("p1*p-1").unwrap();
        let e = jack_expansion(&f).unwrap();
        assert_eq!(e[&bp(&[1], &[1])], ParamRat::one());
        assert_eq!(e[&bp(&[], &[])], "p0/(1 + k - k*p0)".parse().unwrap());
        let limit = p0_limit(&bilinear_form(&f, &Lsf::one()).unwrap()).unwrap();
        assert_eq!(limit, "-1/k".parse().unwrap());
    }

    #[test]
    fn limits_by_degree() {
        assert_eq!(p0_limit(&"p0/(1 + p0)".parse().unwrap()), Some(ParamRat::one()));
        assert_eq!(p0_limit(&"1/(1 + p0)".parse().unwrap()), Some(ParamRat::zero()));
        assert_eq!(p0_limit(&"p0^2/(1 + p0)".parse().unwrap()), None);
    }
}
