//! Schur–Laurent functions: the `k = -1` specialization of `P_{λ,μ}` and the
//! Jacobi–Trudy determinant in `h_i` and `h_i^*`.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::coeff::{CoeffError, ParamRat};
use crate::error::{JackError, Result};
use crate::jack::construct;
use crate::laurent::Lsf;
use crate::partitions::Bipartition;

/// Complete symmetric function `h_i` in the power-sum basis.
pub fn complete_h(i: i64) -> Lsf {
    if i < 0 {
        return Lsf::zero();
    }
    let mut h = vec![Lsf::one()];
    for n in 1..=i as usize {
        // n h_n = Σ_{m=1}^{n} p_m h_{n-m}
        let mut acc = Lsf::zero();
        for m in 1..=n {
            acc.add_assign(&h[n - m].mul(&Lsf::generator(m as i32)));
        }
        h.push(acc.scale(&ParamRat::frac(1, n as i64)));
    }
    h.pop().unwrap()
}

/// Determinant by cofactor expansion along the first row, memoized on the
/// set of remaining columns.
fn determinant(m: &[Vec<Lsf>]) -> Lsf {
    fn minor(m: &[Vec<Lsf>], row: usize, cols: u32, memo: &mut HashMap<(usize, u32), Lsf>) -> Lsf {
        if row == m.len() {
            return Lsf::one();
        }
        if let Some(v) = memo.get(&(row, cols)) {
            return v.clone();
        }
        let mut acc = Lsf::zero();
        let mut sign = 1;
        for c in 0..m.len() {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let sub = minor(m, row + 1, cols & !(1 << c), memo);
                let term = m[row][c].mul(&sub);
                if sign > 0 {
                    acc.add_assign(&term);
                } else {
                    acc.add_assign(&term.neg());
                }
            }
            sign = -sign;
        }
        memo.insert((row, cols), acc.clone());
        acc
    }
    let n = m.len();
    minor(m, 0, (1u32 << n) - 1, &mut HashMap::new())
}

/// The Jacobi–Trudy matrix of `α = (λ, μ)`.
pub fn jacobi_trudy_matrix(alpha: &Bipartition) -> Vec<Vec<Lsf>> {
    let (r, s) = (alpha.lambda.len() as i64, alpha.mu.len() as i64);
    let mut cache: HashMap<i64, Lsf> = HashMap::new();
    let mut h = |i: i64| cache.entry(i).or_insert_with(|| complete_h(i)).clone();
    let mut rows = Vec::new();
    for t in 1..=s {
        let mu_t = alpha.mu.part((s + 1 - t) as usize) as i64;
        rows.push((0..r + s).map(|c| h(mu_t + t - 1 - c).star()).collect());
    }
    for t in 1..=r {
        let la_t = alpha.lambda.part(t as usize) as i64;
        rows.push((0..r + s).map(|c| h(la_t - s - t + 1 + c)).collect());
    }
    rows
}

/// `S_{λ,μ}` as the Jacobi–Trudy determinant.
pub fn jacobi_trudy_s(alpha: &Bipartition) -> Lsf {
    determinant(&jacobi_trudy_matrix(alpha))
}

/// `P_α` at `k = -1`; every coefficient must come out free of `p0`.
pub fn schur_limit(alpha: &Bipartition) -> Result<Lsf> {
    let minus_one = BigRational::from_integer((-1).into());
    let jf = construct(alpha)?;
    let out =
        jf.f.try_map_coeffs(|_, c| -> std::result::Result<ParamRat, CoeffError> { c.substitute_k(&minus_one) })?;
    if let Some((m, c)) = out.terms().find(|(_, c)| c.contains_p0()) {
        return Err(JackError::ResidualP0(format!("{c} at {m}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::from_parts(l, m)
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_h(0), Lsf::one());
        assert_eq!(complete_h(1), Lsf::parse("p1").unwrap());
        assert_eq!(complete_h(2), Lsf::parse("(1/2)*p1^2 + (1/2)*p2").unwrap());
        assert!(complete_h(-3).is_zero());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(jacobi_trudy_s(&bp(&[1], &[1])), Lsf::parse("p1*p-1 - 1").unwrap());
        assert_eq!(
            jacobi_trudy_s(&bp(&[1, 1], &[1])),
            Lsf::parse("(1/2)*p1^2*p-1 - (1/2)*p2*p-1 - p1").unwrap()
        );
        assert_eq!(jacobi_trudy_s(&bp(&[], &[])), Lsf::one());
    }

    #[test]
    fn limit_examples() {
        assert_eq!(schur_limit(&bp(&[1], &[1])).unwrap(), Lsf::parse("p1*p-1 - 1").unwrap());
        for a in Bipartition::up_to(3) {
            assert_eq!(schur_limit(&a).unwrap(), jacobi_trudy_s(&a), "{a}");
        }
    }
}
