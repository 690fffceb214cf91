//! Sweeps over bipartitions that check every identity the engine relies on,
//! collected into a serializable report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::closed_forms::*;
use crate::coeff::{q, Coeff, ParamRat, Params};
use crate::finite_n::{
    cms_operator_sym, degree_operator_n, finite_pieri_check, hc_eigen_check_n, involution_check_n, jack_laurent_poly_n,
    jack_poly_n, phi_n_symbolic, torus_form, SymLaurentPolyN,
};
use crate::jack::*;
use crate::laurent::Lsf;
use crate::operators::{
    cms_i, cms_l, cms_l2_direct, commutator_vanishes, hat_f_expansion_check, monomials_up_to, order_bound_holds,
    stable_h, star_symmetry_holds, theta_symmetry_holds,
};
use crate::par::Exec;
use crate::partitions::{chi_n, Bipartition, IntSequence, Partition};
use crate::schur::{jacobi_trudy_s, schur_limit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Examples,
    Eigen,
    Commute,
    Pieri,
    Evaluation,
    Norms,
    Involutions,
    Duality,
    FiniteN,
    Schur,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Examples,
        Suite::Eigen,
        Suite::Commute,
        Suite::Pieri,
        Suite::Evaluation,
        Suite::Norms,
        Suite::Involutions,
        Suite::Duality,
        Suite::FiniteN,
        Suite::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Eigen => "eigen",
            Suite::Commute => "commute",
            Suite::Pieri => "pieri",
            Suite::Evaluation => "evaluation",
            Suite::Norms => "norms",
            Suite::Involutions => "involutions",
            Suite::Duality => "duality",
            Suite::FiniteN => "finite-n",
            Suite::Schur => "schur",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_size: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Per-case outcome: a failure message, or an optional witness entry.
type Outcome = std::result::Result<Option<(String, String)>, String>;

fn ok() -> Outcome {
    Ok(None)
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(None)
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

struct Sweeper {
    suite: Suite,
    exec: Exec,
    out: Vec<CheckResult>,
}

impl Sweeper {
    fn run<T, F, L>(&mut self, check: &str, items: &[T], label: L, f: F)
    where
        T: Sync,
        L: Fn(&T) -> String,
        F: Fn(&T) -> Outcome + Sync + Send,
    {
        let results = self.exec.map(items, |x| f(x));
        let mut failures = Vec::new();
        let mut witnesses = BTreeMap::new();
        for (item, r) in items.iter().zip(results) {
            match r {
                Ok(Some((k, v))) => {
                    witnesses.insert(k, v);
                }
                Ok(None) => {}
                Err(msg) => failures.push(format!("{}: {msg}", label(item))),
            }
        }
        self.out.push(CheckResult {
            suite: self.suite.name().into(),
            check: check.into(),
            passed: failures.is_empty(),
            cases: items.len(),
            failures,
            witnesses,
        });
    }
}

fn show<T: fmt::Display>(x: &T) -> String {
    x.to_string()
}

fn bp(l: &[usize], m: &[usize]) -> Bipartition {
    Bipartition::from_parts(l, m)
}

fn k() -> ParamRat {
    ParamRat::k()
}

/// Runs `suite` for `|λ| + |μ| <= max_size`.
pub fn verify(suite: Suite, max_size: usize, exec: Exec) -> VerifyReport {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        let mut sw = Sweeper {
            suite: s,
            exec,
            out: Vec::new(),
        };
        match s {
            Suite::Examples => examples(&mut sw),
            Suite::Eigen => eigen(&mut sw, max_size),
            Suite::Commute => commute(&mut sw, max_size),
            Suite::Pieri => pieri(&mut sw, max_size),
            Suite::Evaluation => evaluation(&mut sw, max_size),
            Suite::Norms => norms(&mut sw, max_size),
            Suite::Involutions => involutions(&mut sw, max_size),
            Suite::Duality => duality(&mut sw, max_size),
            Suite::FiniteN => finite(&mut sw, max_size),
            Suite::Schur => schur(&mut sw, max_size),
            Suite::All => unreachable!(),
        }
        checks.extend(sw.out);
    }
    VerifyReport {
        suite: suite.name().into(),
        max_size,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn examples(sw: &mut Sweeper) {
    let cases = [
        (bp(&[1], &[1]), "p1*p-1 - p0/(1 + k - k*p0)"),
        (
            bp(&[1, 1], &[1]),
            "(1/2)*p1^2*p-1 - (1/2)*p2*p-1 - (2*(p0 - 1)/(2 + 4*k - 2*k*p0))*p1",
        ),
        (bp(&[], &[1]), "p-1"),
        (bp(&[1, 1], &[]), "(1/2)*p1^2 - (1/2)*p2"),
    ];
    sw.run(
        "explicit_functions",
        &cases,
        |c| show(&c.0),
        |(a, text)| {
            let want = Lsf::parse(text).map_err(err)?;
            let got = construct(a).map_err(err)?;
            expect(got.f == want, || format!("got {}", got.f))
        },
    );
}

fn eigen(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("eigenvalues_r_le_3", &alphas, show, |a| {
        let e = eigen_check_all(a, 3).map_err(err)?;
        let w = eigen_check_all(&a.w(), 3).map_err(err)?;
        for ((r, x), (_, y)) in e.iter().zip(&w) {
            let want = if r % 2 == 0 { x.clone() } else { x.neg() };
            if *y != want {
                return Err(format!("L^({r}) eigenvalue on w(α) is {y}, expected {want}"));
            }
        }
        Ok(Some((a.to_string(), e[1].1.to_string())))
    });
    sw.run("bidegree_structure", &alphas, show, |a| {
        let f = &construct(a).map_err(err)?.f;
        let (l, m) = (a.lambda.size() as u64, a.mu.size() as u64);
        for (mono, _) in f.terms() {
            let (x, y) = mono.bidegree();
            if x > l || l - x != m.wrapping_sub(y) || y > m {
                return Err(format!("term {mono}"));
            }
        }
        expect(!f.is_zero(), || "zero function".into())
    });
    sw.run("eigenvalue_matches_finite", &alphas, show, |a| {
        for nn in a.len().max(1)..=5 {
            let chi = chi_n(a, nn).map_err(err)?;
            let lhs = eigenvalue_e(a, &Params::symbolic())
                .substitute_p0(&q(nn as i64, 1))
                .map_err(err)?;
            if lhs != eigenvalue_en(&chi, &k()) {
                return Err(format!("N = {nn}"));
            }
        }
        ok()
    });
    sw.run("hc_values", &alphas, show, |a| {
        let p = Params::symbolic();
        let f1 = hc_value(1, a, &p);
        let f2 = hc_value(2, a, &p);
        let e = &f2 + &(&(&k() - &(&k() * &ParamRat::p0())) * &f1);
        expect(e == eigenvalue_e(a, &p) && f1 == ParamRat::from_int(a.degree()), || {
            "mismatch".into()
        })
    });
}

fn commute(sw: &mut Sweeper, n: usize) {
    let m = n.min(3) as u64;
    let p = Params::symbolic();
    let monos: Vec<Lsf> = monomials_up_to(m, m)
        .into_iter()
        .map(|x| Lsf::monomial(x, ParamRat::one()))
        .collect();
    sw.run("l2_direct_equals_composite", &monos, show, |f| {
        expect(cms_l2_direct(f, &p) == cms_l(2, f, &p), || "differs".into())
    });
    sw.run("commutators_vanish", &monos, show, |f| {
        for r in 1..=3 {
            for s in r + 1..=3 {
                if !commutator_vanishes(cms_l, r, s, f, &p) {
                    return Err(format!("[L{r}, L{s}]"));
                }
                if !commutator_vanishes(cms_i, r, s, f, &p) {
                    return Err(format!("[I{r}, I{s}]"));
                }
            }
        }
        ok()
    });
    sw.run("theta_and_star_symmetry", &monos, show, |f| {
        for r in 1..=3 {
            if !theta_symmetry_holds(r, f) {
                return Err(format!("theta r={r}"));
            }
            if !star_symmetry_holds(r, f, &p) {
                return Err(format!("star r={r}"));
            }
        }
        ok()
    });
    sw.run("hat_f_expansion", &monos, show, |f| {
        for r in 1..=3 {
            if !hat_f_expansion_check(r, f, &p) {
                return Err(format!("r={r}"));
            }
        }
        ok()
    });
    let mut pairs = Vec::new();
    for f in ["p1", "p-1", "p2"] {
        for g in monomials_up_to(1, 1) {
            pairs.push((Lsf::parse(f).unwrap(), Lsf::monomial(g, ParamRat::one())));
        }
    }
    sw.run(
        "order_bound",
        &pairs,
        |(f, g)| format!("f={f} g={g}"),
        |(f, g)| {
            for r in 1..=3 {
                if !order_bound_holds(r, f, g, &p) {
                    return Err(format!("r = {r}"));
                }
            }
            ok()
        },
    );
    let positive: Vec<Lsf> = monomials_up_to(4, 0)
        .into_iter()
        .map(|x| Lsf::monomial(x, ParamRat::one()))
        .collect();
    sw.run("stable_h_p0_free", &positive, show, |f| {
        for r in 1..=3 {
            let h = stable_h(r, f, &p).map_err(err)?;
            if h.contains_p0() || h.has_negative() {
                return Err(format!("H^({r}) = {h}"));
            }
        }
        ok()
    });
}

fn pieri(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("pieri_identity", &alphas, show, |a| {
        expect(pieri_identity_check(a).map_err(err)?, || "identity fails".into())
    });
    let p = Params::symbolic();
    let wide = Bipartition::up_to(n + 1);
    sw.run("diagram_forms", &wide, show, |a| {
        let (lam_len, mu_len) = (a.lambda.len(), a.mu.len());
        for b in a.lambda.add_box_candidates() {
            if pieri_v_diagram(b, a, &k()).map_err(err)? != pieri_v(b, a, &k()).map_err(err)? {
                return Err(format!("V at {b:?}"));
            }
        }
        for b in a.mu.remove_box_candidates() {
            let u = pieri_u(b, a, &p).map_err(err)?;
            for big_l in lam_len..=lam_len + 2 {
                for big_m in mu_len..=mu_len + 2 {
                    if pieri_u_diagram(b, a, &p, Some((big_l, big_m))).map_err(err)? != u {
                        return Err(format!("U at {b:?} with rectangle ({big_l}, {big_m})"));
                    }
                }
            }
        }
        ok()
    });
}

fn evaluation(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("evaluation_formula", &alphas, show, |a| {
        let v = construct(a).map_err(err)?.f.evaluate_eps();
        let w = evaluation_value(a, &Params::symbolic()).map_err(err)?;
        expect(v == w, || format!("ε(P) = {v}, formula {w}"))
    });
    // p0 stands in for the free variable x
    let x = ParamRat::p0();
    let mut rects = Vec::new();
    for rows in 1..=4usize {
        for cols in 1..=4usize {
            for lam in Partition::in_rectangle(rows, cols) {
                rects.push((rows, cols, lam));
            }
        }
    }
    sw.run(
        "complementary_diagrams",
        &rects,
        |(r, c, l)| format!("{l} in {c}x{r}"),
        |(rows, cols, lam)| {
            let comp: Vec<usize> = (1..=*rows).map(|i| cols - lam.part(rows + 1 - i)).collect();
            let mu = Partition::new(comp);
            let b = ParamRat::from_int(*rows as i64);
            let lhs = stanley_phi(lam, &b, &x, &k()).map_err(err)?;
            let rhs = stanley_phi(&mu, &b, &x, &k()).map_err(err)?;
            expect(lhs == rhs, || format!("complement {mu}"))
        },
    );
    let parts: Vec<Partition> = (0..=5).flat_map(Partition::all_of).collect();
    sw.run("stanley_forms_agree", &parts, show, |lam| {
        let p0 = ParamRat::p0();
        for xv in [ParamRat::zero(), ParamRat::frac(1, 3), &ParamRat::one() + &k()] {
            let a = stanley_phi(lam, &p0, &xv, &k()).map_err(err)?;
            let b = stanley_phi_alt(lam, &p0, &xv, &k()).map_err(err)?;
            if a != b {
                return Err(format!("x = {xv}"));
            }
        }
        for pv in 1..=4 {
            let pv = ParamRat::from_int(pv);
            if stanley_phi(lam, &pv, &p0, &k()).map_err(err)? != stanley_phi_alt(lam, &pv, &p0, &k()).map_err(err)? {
                return Err(format!("p = {pv}"));
            }
        }
        ok()
    });
    let mut facts = Vec::new();
    for a in Bipartition::up_to(n.min(3)) {
        for nn in a.len().max(1)..=4 {
            facts.push((a.clone(), nn));
        }
    }
    sw.run(
        "stanley_factorization",
        &facts,
        |(a, nn)| format!("{a} N={nn}"),
        |(a, nn)| {
            let shift = a.mu.part(1) as i64;
            let chi = chi_n(a, *nn).map_err(err)?;
            let nu = chi.shift(shift).as_partition().ok_or("shift is not a partition")?;
            let pn = ParamRat::from_int(*nn as i64);
            let lhs = stanley_phi(&nu, &pn, &x, &k()).map_err(err)?;
            let rhs = stanley_phi(&a.lambda, &pn, &x, &k())
                .map_err(err)?
                .mul(&stanley_phi(&a.mu, &pn, &x, &k()).map_err(err)?)
                .mul(&phi_pair(&a.lambda, &a.mu, &pn, &x, &k()).map_err(err)?);
            expect(lhs == rhs, || format!("{lhs} vs {rhs}"))
        },
    );
}

fn norms(sw: &mut Sweeper, n: usize) {
    let nn = 4usize;
    let alphas: Vec<Bipartition> = Bipartition::up_to(n.min(3))
        .into_iter()
        .filter(|a| a.len() <= nn)
        .collect();
    for kk in [-1i64, -2] {
        let k0 = q(kk, 1);
        let images: Vec<Option<SymLaurentPolyN<BigRational>>> = sw.exec.map(&alphas, |a| {
            construct(a)
                .ok()
                .and_then(|jf| phi_n_symbolic(&jf.f, nn).ok())
                .and_then(|f| f.specialize_k(&k0).ok())
        });
        let idx: Vec<usize> = (0..alphas.len()).collect();
        sw.run(
            &format!("torus_norms_k{kk}"),
            &idx,
            |&i| alphas[i].to_string(),
            |&i| {
                let f = images[i].as_ref().ok_or("image not computable")?;
                let got = torus_form(f, f, kk).map_err(err)?;
                let want = norm_value(&alphas[i], &Params::numeric(k0.clone(), q(nn as i64, 1))).map_err(err)?;
                expect(got == want, || format!("torus {got}, formula {want}"))
            },
        );
        sw.run(
            &format!("torus_orthogonality_k{kk}"),
            &idx,
            |&i| alphas[i].to_string(),
            |&i| {
                let f = images[i].as_ref().ok_or("image not computable")?;
                for (j, g) in images.iter().enumerate().skip(i + 1) {
                    let g = g.as_ref().ok_or("image not computable")?;
                    let v = torus_form(f, g, kk).map_err(err)?;
                    if !v.is_zero() {
                        return Err(format!("pairing with {} is {v}", alphas[j]));
                    }
                }
                ok()
            },
        );
    }
    let mut cases = Vec::new();
    for kk in [-1i64, -2] {
        for nn in 1..=4usize {
            for size in 0..=4 {
                for nu in Partition::all_of(size) {
                    if nu.len() <= nn {
                        cases.push((kk, nn, nu));
                    }
                }
            }
        }
    }
    sw.run(
        "finite_norm_formula",
        &cases,
        |(kk, nn, nu)| format!("{nu} N={nn} k={kk}"),
        |(kk, nn, nu)| {
            let k0 = q(*kk, 1);
            let p = jack_poly_n(nu, *nn, &k0).map_err(err)?;
            let got = torus_form(&p, &p, *kk).map_err(err)?;
            let pn = q(*nn as i64, 1);
            let want = stanley_phi(nu, &pn, &q(0, 1), &k0)
                .and_then(|a| Ok(a.div(&stanley_phi(nu, &pn, &(q(1, 1) + &k0), &k0)?)?))
                .map_err(err)?;
            expect(got == want, || format!("torus {got}, formula {want}"))
        },
    );
    let ones: Vec<usize> = (1..=4).collect();
    sw.run(
        "unit_normalization",
        &ones,
        |n| n.to_string(),
        |&nn| {
            let one = SymLaurentPolyN::one(nn);
            expect(
                torus_form(&one, &one, -1).map_err(err)?.is_one() && torus_form(&one, &one, -2).map_err(err)?.is_one(),
                || "(1,1) != 1".into(),
            )
        },
    );
}

fn involutions(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("star_symmetry", &alphas, show, |a| {
        expect(star_symmetry_check(a).map_err(err)?, || "star(P) differs".into())
    });
    let small = Bipartition::up_to(n.min(3));
    let mut pairs = Vec::new();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i + 1..] {
            pairs.push((a.clone(), b.clone()));
        }
    }
    sw.run(
        "spectrum_separation",
        &pairs,
        |(a, b)| format!("{a} vs {b}"),
        |(a, b)| expect(separation_check(a, b, 8), || "not separated".into()),
    );
    let seqs = sequences(n.min(3), 3);
    sw.run("finite_involution", &seqs, show, |chi| {
        expect(involution_check_n(chi).map_err(err)?, || "star differs".into())
    });
}

fn duality(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("theta_duality", &alphas, show, |a| {
        let d = duality_constant(a).map_err(err)?;
        if theta_duality_check(a).map_err(err)? {
            Ok(Some((a.to_string(), d.to_string())))
        } else {
            Err("θ-duality fails".into())
        }
    });
}

/// `χ_N(α)` for every `α` of size `<= n` and every `l(α) <= N <= max_n`.
fn sequences(n: usize, max_n: usize) -> Vec<IntSequence> {
    let mut out = Vec::new();
    for a in Bipartition::up_to(n) {
        for nn in a.len().max(1)..=max_n {
            out.push(chi_n(&a, nn).unwrap());
        }
    }
    out
}

fn finite(sw: &mut Sweeper, n: usize) {
    let mut cases = Vec::new();
    for a in Bipartition::up_to(n) {
        for nn in 1..=4usize {
            cases.push((a.clone(), nn));
        }
    }
    for k0 in [q(-1, 2), q(-5, 7)] {
        sw.run(
            &format!("phi_n_compatibility_k{k0}"),
            &cases,
            |(a, nn)| format!("{a} N={nn}"),
            |(a, nn)| {
                let img = phi_n_symbolic(&construct(a).map_err(err)?.f, *nn)
                    .map_err(err)?
                    .specialize_k(&k0)
                    .map_err(err)?;
                if a.len() > *nn {
                    return expect(img.is_zero(), || format!("expected 0, got {img}"));
                }
                let j = jack_laurent_poly_n(&chi_n(a, *nn).map_err(err)?, &k0).map_err(err)?;
                expect(img == j, || format!("φ_N(P) = {img}, finite {j}"))
            },
        );
    }
    let sym_cases: Vec<(Bipartition, usize)> = cases
        .iter()
        .filter(|(a, nn)| a.size() <= n.min(3) && *nn <= 3)
        .cloned()
        .collect();
    sw.run(
        "phi_n_compatibility_symbolic",
        &sym_cases,
        |(a, nn)| format!("{a} N={nn}"),
        |(a, nn)| {
            let img = phi_n_symbolic(&construct(a).map_err(err)?.f, *nn).map_err(err)?;
            if a.len() > *nn {
                return expect(img.is_zero(), || format!("expected 0, got {img}"));
            }
            let j = jack_laurent_poly_n(&chi_n(a, *nn).map_err(err)?, &k()).map_err(err)?;
            expect(img == j, || format!("φ_N(P) = {img}, finite {j}"))
        },
    );
    let seqs = sequences(n.min(3), 3);
    sw.run("finite_pieri", &seqs, show, |chi| {
        expect(finite_pieri_check(chi).map_err(err)?, || "identity fails".into())
    });
    sw.run("finite_eigenvalues", &seqs, show, |chi| {
        hc_eigen_check_n(chi).map(|_| None).map_err(err)
    });
    let monos: Vec<(Lsf, usize)> = monomials_up_to(2, 2)
        .into_iter()
        .flat_map(|m| (1..=3).map(move |nn| (Lsf::monomial(m.clone(), ParamRat::one()), nn)))
        .collect();
    sw.run(
        "phi_n_intertwines",
        &monos,
        |(f, nn)| format!("{f} N={nn}"),
        |(f, nn)| {
            let p = Params::symbolic();
            let img = phi_n_symbolic(f, *nn).map_err(err)?;
            let l1 = phi_n_symbolic(&cms_l(1, f, &p), *nn).map_err(err)?;
            let l2 = phi_n_symbolic(&cms_l2_direct(f, &p), *nn).map_err(err)?;
            expect(l1 == degree_operator_n(&img.expand()).symmetric_part(), || {
                "r = 1".into()
            })?;
            expect(l2 == cms_operator_sym(&img, &k()), || "r = 2".into())
        },
    );
    let alphas = Bipartition::up_to(n);
    sw.run("bernoulli_agreement", &alphas, show, |a| {
        for nn in a.len().max(1)..=4 {
            let chi = chi_n(a, nn).map_err(err)?;
            for l in 1..=5u32 {
                let lhs = bernoulli_b(l, a, &Params::symbolic())
                    .substitute_p0(&q(nn as i64, 1))
                    .map_err(err)?;
                let rhs = bernoulli_b_sequence(l as usize, &ParamRat::zero(), &chi, &k());
                if lhs != rhs {
                    return Err(format!("l = {l}, N = {nn}"));
                }
            }
        }
        ok()
    });
    sw.run("shifted_sum_twist", &seqs, show, |chi| {
        let nn = chi.len() as i64;
        for a in [ParamRat::zero(), ParamRat::frac(1, 2), ParamRat::p0()] {
            let twisted = &(&k() - &k().mul_int(nn)) - &a;
            for r in 1..=3u32 {
                let lhs = shifted_power_sum_n(r, &a, &chi.w(), &k());
                let mut rhs = shifted_power_sum_n(r, &twisted, chi, &k());
                if r % 2 == 1 {
                    rhs = rhs.neg();
                }
                if lhs != rhs {
                    return Err(format!("r = {r}, a = {a}"));
                }
            }
        }
        ok()
    });
}

fn schur(sw: &mut Sweeper, n: usize) {
    let alphas = Bipartition::up_to(n);
    sw.run("schur_limit_equals_determinant", &alphas, show, |a| {
        let lim = schur_limit(a).map_err(err)?;
        let jt = jacobi_trudy_s(a);
        expect(lim == jt, || format!("limit {lim}, determinant {jt}"))
    });
    sw.run("schur_star", &alphas, show, |a| {
        expect(jacobi_trudy_s(a).star() == jacobi_trudy_s(&a.w()), || {
            "star differs".into()
        })
    });
    let printed = [
        (bp(&[1], &[1]), "p1*p-1 - 1"),
        (bp(&[1, 1], &[1]), "(1/2)*p1^2*p-1 - (1/2)*p2*p-1 - p1"),
    ];
    sw.run(
        "printed_examples",
        &printed,
        |c| show(&c.0),
        |(a, text)| {
            let want = Lsf::parse(text).map_err(err)?;
            expect(
                schur_limit(a).map_err(err)? == want && jacobi_trudy_s(a) == want,
                || "mismatch".into(),
            )
        },
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Examples, Suite::Pieri, Suite::Schur, Suite::Duality] {
            let r = verify(s, 2, Exec::Sequential);
            assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
