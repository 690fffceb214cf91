use std::collections::BTreeMap;
use std::fmt::Write as _;

use jack_laurent::closed_forms::{
    a_pair, bernoulli_b, duality_constant, eigenvalue_e, eigenvalue_en, evaluation_value, hc_value, norm_value,
    pieri_u, pieri_v,
};
use jack_laurent::coeff::{parse_rational, Coeff};
use jack_laurent::conjectures::{run_all, Verdict};
use jack_laurent::finite_n::{jack_laurent_poly_n, phi_n_symbolic, torus_form, SymLaurentPolyN};
use jack_laurent::jack::{
    construct, default_order, eigen_check_all, pieri_identity_check, rational_mode_construct, Step,
};
use jack_laurent::laurent::TermJson;
use jack_laurent::operators::{apply_operator, cms_l, OperatorKind};
use jack_laurent::par::Exec;
use jack_laurent::schur::{jacobi_trudy_s, schur_limit};
use jack_laurent::verify::{verify, Suite};
use jack_laurent::{Bipartition, CoeffError, IntSequence, JackError, LaurentSymFunc, Lsf, ParamRat, Params, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::{AlphaArgs, Command, Format, Mode, ParamArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;

pub struct Output {
    pub text: String,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        message: msg.into(),
        code: EXIT_USAGE,
    }
}

impl From<JackError> for Failure {
    fn from(e: JackError) -> Self {
        let code = match &e {
            JackError::Coeff(CoeffError::Parse(_)) | JackError::Parse(_) => EXIT_USAGE,
            JackError::LengthTooSmall { .. } | JackError::NotPositivePart(_) | JackError::IncomparableInput(_) => {
                EXIT_USAGE
            }
            JackError::Coeff(_) | JackError::SingularProduct(_) | JackError::SingularParameter(_) => EXIT_SINGULAR,
            JackError::NotEigenvector(_) | JackError::ResidualP0(_) => EXIT_FAILED,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<CoeffError> for Failure {
    fn from(e: CoeffError) -> Self {
        JackError::from(e).into()
    }
}

/// JSON shape of `compute`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComputeJson {
    pub alpha: AlphaJson,
    pub terms: Vec<TermJson>,
    pub eigenvalues: BTreeMap<String, String>,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaJson {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

fn alpha_of(a: &AlphaArgs) -> CliResult<Bipartition> {
    let lambda: Partition = a.lambda.parse().map_err(|e| usage(format!("--lambda: {e}")))?;
    let mu: Partition = a.mu.parse().map_err(|e| usage(format!("--mu: {e}")))?;
    Ok(Bipartition::new(lambda, mu))
}

fn rational(flag: &str, s: &str) -> CliResult<BigRational> {
    parse_rational(s).map_err(|e| usage(format!("{flag}: {e}")))
}

/// Parsed `--k` / `--p0`; either may be missing.
struct Specialization {
    k: Option<BigRational>,
    p0: Option<BigRational>,
}

impl Specialization {
    fn parse(p: &ParamArgs) -> CliResult<Self> {
        Ok(Specialization {
            k: p.k.as_deref().map(|s| rational("--k", s)).transpose()?,
            p0: p.p0.as_deref().map(|s| rational("--p0", s)).transpose()?,
        })
    }

    /// Both values or neither.
    fn full(&self) -> CliResult<Option<(BigRational, BigRational)>> {
        match (&self.k, &self.p0) {
            (Some(k), Some(p)) => Ok(Some((k.clone(), p.clone()))),
            (None, None) => Ok(None),
            (Some(_), None) => Err(usage("--p0 is required together with --k")),
            (None, Some(_)) => Err(usage("--k is required together with --p0")),
        }
    }

    /// Substitutes whatever was given, keeping the rest symbolic.
    fn apply(&self, c: &ParamRat) -> CliResult<String> {
        Ok(match (&self.k, &self.p0) {
            (Some(k), Some(p)) => c.specialize(k, p)?.to_string(),
            (Some(k), None) => c.substitute_k(k)?.to_string(),
            (None, Some(p)) => c.substitute_p0(p)?.to_string(),
            (None, None) => c.to_string(),
        })
    }
}

fn render<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn ok(text: String) -> CliResult<Output> {
    Ok(Output { text, code: EXIT_OK })
}

pub fn run(cmd: Command, format: Format, exec: Exec) -> CliResult<Output> {
    match cmd {
        Command::Compute { alpha, params, mode } => {
            compute(&alpha_of(&alpha)?, &Specialization::parse(&params)?, mode, format)
        }
        Command::FiniteN { chi, n, k } => finite_n(&chi, n, k.as_deref(), format),
        Command::Formula {
            name,
            alpha,
            params,
            r,
            cell,
        } => formula(
            &name,
            &alpha_of(&alpha)?,
            &Specialization::parse(&params)?,
            r,
            cell.as_deref(),
            format,
        ),
        Command::ApplyOp { op, r, element, params } => {
            apply_op(&op, r, &element, &Specialization::parse(&params)?, format)
        }
        Command::Pieri { alpha, params } => pieri(&alpha_of(&alpha)?, &Specialization::parse(&params)?, format),
        Command::Eval { alpha, params } => eval(&alpha_of(&alpha)?, &Specialization::parse(&params)?, format),
        Command::Norm { alpha, params, torus } => {
            norm(&alpha_of(&alpha)?, &Specialization::parse(&params)?, torus, format)
        }
        Command::Schur { alpha } => schur(&alpha_of(&alpha)?, format),
        Command::Conjectures { max_size, out } => conjectures(max_size, out, format, exec),
        Command::Verify { suite, max_size } => {
            let suite: Suite = suite.parse().map_err(|e: String| usage(format!("--suite: {e}")))?;
            run_verify(suite, max_size, format, exec)
        }
    }
}

fn compute_json<C: Coeff>(
    alpha: &Bipartition,
    f: &LaurentSymFunc<C>,
    eigen: &[(usize, C)],
    provenance: Vec<String>,
) -> (ComputeJson, String) {
    let json = ComputeJson {
        alpha: AlphaJson {
            lambda: alpha.lambda.parts().to_vec(),
            mu: alpha.mu.parts().to_vec(),
        },
        terms: f.to_json(),
        eigenvalues: eigen.iter().map(|(r, c)| (r.to_string(), c.to_string())).collect(),
        provenance,
    };
    (json, f.to_string())
}

fn numeric_eigenvalues(
    f: &LaurentSymFunc<BigRational>,
    params: &Params<BigRational>,
) -> CliResult<Vec<(usize, BigRational)>> {
    (1..=3)
        .map(|r| {
            cms_l(r, f, params)
                .ratio_to(f)
                .map(|c| (r, c))
                .ok_or_else(|| JackError::NotEigenvector(format!("L^({r})")).into())
        })
        .collect()
}

fn compute(alpha: &Bipartition, sp: &Specialization, mode: Mode, format: Format) -> CliResult<Output> {
    let vals = sp.full()?;
    let (json, body) = match (mode, vals) {
        (Mode::Rational, None) => return Err(usage("--mode rational needs --k and --p0")),
        (Mode::Rational, Some((k, p0))) => {
            let f = rational_mode_construct(alpha, &k, &p0)?;
            let eig = numeric_eigenvalues(&f, &Params::numeric(k, p0))?;
            let prov = default_order(&alpha.mu)
                .into_iter()
                .map(|(row, col)| Step::Mu { row, col })
                .chain(
                    default_order(&alpha.lambda)
                        .into_iter()
                        .map(|(row, col)| Step::Lambda { row, col }),
                )
                .map(|s| s.to_string())
                .collect();
            compute_json(alpha, &f, &eig, prov)
        }
        (Mode::Symbolic, vals) => {
            let jf = construct(alpha)?;
            let eig = eigen_check_all(alpha, 3)?;
            let prov = jf.provenance.iter().map(|s| s.to_string()).collect();
            match vals {
                None => compute_json(alpha, &jf.f, &eig, prov),
                Some((k, p0)) => {
                    let f = jf.f.specialize(&k, &p0)?;
                    let eig = eig
                        .iter()
                        .map(|(r, c)| Ok((*r, c.specialize(&k, &p0)?)))
                        .collect::<Result<Vec<_>, CoeffError>>()?;
                    compute_json(alpha, &f, &eig, prov)
                }
            }
        }
    };
    match format {
        Format::Json => ok(render(&json)),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "alpha: {alpha}").unwrap();
            writeln!(s, "P = {body}").unwrap();
            for (r, e) in &json.eigenvalues {
                writeln!(s, "L^({r}) eigenvalue: {e}").unwrap();
            }
            writeln!(s, "boxes: {}", json.provenance.join(" ")).unwrap();
            ok(s)
        }
    }
}

#[derive(Serialize)]
struct FiniteJson {
    chi: Vec<i64>,
    n: usize,
    k: String,
    terms: Vec<(Vec<i64>, String)>,
    eigenvalue: String,
    norm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    torus_norm: Option<String>,
}

fn sym_terms<C: Coeff>(p: &SymLaurentPolyN<C>) -> Vec<(Vec<i64>, String)> {
    p.terms().map(|(e, c)| (e.clone(), c.to_string())).collect()
}

fn finite_n(chi: &str, n: Option<usize>, k: Option<&str>, format: Format) -> CliResult<Output> {
    let chi: IntSequence = chi.parse().map_err(|e| usage(format!("--chi: {e}")))?;
    if let Some(n) = n {
        if n != chi.len() {
            return Err(usage(format!(
                "--N {n} does not match the length {} of --chi",
                chi.len()
            )));
        }
    }
    let nvars = chi.len();
    let alpha = chi.to_bipartition();
    let p0 = BigRational::from_integer(BigInt::from(nvars));
    let out = match k {
        None => {
            let k = ParamRat::k();
            let p = jack_laurent_poly_n(&chi, &k)?;
            let norm = norm_value(&alpha, &Params::symbolic())?.substitute_p0(&p0)?;
            FiniteJson {
                chi: chi.entries().to_vec(),
                n: nvars,
                k: "k".into(),
                terms: sym_terms(&p),
                eigenvalue: eigenvalue_en(&chi, &k).to_string(),
                norm: norm.to_string(),
                torus_norm: None,
            }
        }
        Some(ks) => {
            let k = rational("--k", ks)?;
            let p = jack_laurent_poly_n(&chi, &k)?;
            let norm = norm_value(&alpha, &Params::numeric(k.clone(), p0))?;
            let torus = if k.is_integer() && k < BigRational::from_integer(0.into()) {
                let m: i64 = k.to_integer().try_into().map_err(|_| usage("--k is too large"))?;
                Some(torus_form(&p, &p, m)?.to_string())
            } else {
                None
            };
            FiniteJson {
                chi: chi.entries().to_vec(),
                n: nvars,
                k: k.to_string(),
                terms: sym_terms(&p),
                eigenvalue: eigenvalue_en(&chi, &k).to_string(),
                norm: norm.to_string(),
                torus_norm: torus,
            }
        }
    };
    match format {
        Format::Json => ok(render(&out)),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "chi: {chi}  N = {nvars}  k = {}", out.k).unwrap();
            let terms: Vec<String> = out
                .terms
                .iter()
                .map(|(e, c)| {
                    let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                    format!("({c})*m({})", e.join(","))
                })
                .collect();
            writeln!(s, "P = {}", terms.join(" + ")).unwrap();
            writeln!(s, "eigenvalue: {}", out.eigenvalue).unwrap();
            writeln!(s, "norm: {}", out.norm).unwrap();
            if let Some(t) = &out.torus_norm {
                writeln!(s, "torus norm: {t}").unwrap();
            }
            ok(s)
        }
    }
}

fn parse_cell(cell: Option<&str>) -> CliResult<(usize, usize)> {
    let s = cell.ok_or_else(|| usage("--box is required for this formula"))?;
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| usage(format!("--box: expected row,col, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("--box: bad index {t:?}")))
    };
    let (i, j) = (parse(i)?, parse(j)?);
    if i == 0 || j == 0 {
        return Err(usage("--box: rows and columns start at 1"));
    }
    Ok((i, j))
}

fn formula(
    name: &str,
    alpha: &Bipartition,
    sp: &Specialization,
    r: Option<u32>,
    cell: Option<&str>,
    format: Format,
) -> CliResult<Output> {
    let params = Params::<ParamRat>::symbolic();
    let need_r = || r.ok_or_else(|| usage(format!("--r is required for formula {name}")));
    let value = match name {
        "e" => eigenvalue_e(alpha, &params),
        "hc" => hc_value(need_r()?, alpha, &params),
        "b" => bernoulli_b(need_r()?, alpha, &params),
        "v" => pieri_v(parse_cell(cell)?, alpha, &params.k)?,
        "u" => pieri_u(parse_cell(cell)?, alpha, &params)?,
        "eval" => evaluation_value(alpha, &params)?,
        "norm" => norm_value(alpha, &params)?,
        "duality" => duality_constant(alpha)?,
        "a" => a_pair(alpha, &params),
        _ => {
            return Err(usage(format!(
                "unknown formula {name:?}; expected e, hc, b, v, u, eval, norm, duality or a"
            )))
        }
    };
    let v = sp.apply(&value)?;
    match format {
        Format::Json => ok(render(
            &serde_json::json!({ "formula": name, "alpha": alpha.to_string(), "value": v }),
        )),
        Format::Text => ok(format!("{v}\n")),
    }
}

fn apply_op(op: &str, r: usize, element: &str, sp: &Specialization, format: Format) -> CliResult<Output> {
    let kind: OperatorKind = op.parse().map_err(|e| usage(format!("--op: {e}")))?;
    let f = Lsf::parse(element).map_err(|e| usage(format!("--element: {e}")))?;
    let (terms, text) = match sp.full()? {
        None => {
            let g = apply_operator(kind, r, &f, &Params::symbolic())?;
            (g.to_json(), g.to_string())
        }
        Some((k, p0)) => {
            let f = f.specialize(&k, &p0)?;
            let g = apply_operator(kind, r, &f, &Params::numeric(k, p0))?;
            (g.to_json(), g.to_string())
        }
    };
    match format {
        Format::Json => ok(render(&serde_json::json!({ "operator": op, "r": r, "terms": terms }))),
        Format::Text => ok(format!("{text}\n")),
    }
}

#[derive(Serialize)]
struct PieriTerm {
    target: String,
    coeff: String,
}

fn pieri(alpha: &Bipartition, sp: &Specialization, format: Format) -> CliResult<Output> {
    let params = Params::<ParamRat>::symbolic();
    let (up, down) = alpha.pieri_neighbours();
    let mut terms = Vec::new();
    for (b, beta) in up {
        terms.push(PieriTerm {
            target: beta.to_string(),
            coeff: sp.apply(&pieri_v(b, alpha, &params.k)?)?,
        });
    }
    for (b, beta) in down {
        terms.push(PieriTerm {
            target: beta.to_string(),
            coeff: sp.apply(&pieri_u(b, alpha, &params)?)?,
        });
    }
    let holds = pieri_identity_check(alpha)?;
    let code = if holds { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => {
            render(&serde_json::json!({ "alpha": alpha.to_string(), "terms": terms, "identity_holds": holds }))
        }
        Format::Text => {
            let mut s = format!("p1 * P[{alpha}] =\n");
            for t in &terms {
                writeln!(s, "  ({}) * P[{}]", t.coeff, t.target).unwrap();
            }
            writeln!(s, "identity: {}", if holds { "holds" } else { "FAILS" }).unwrap();
            s
        }
    };
    Ok(Output { text, code })
}

fn eval(alpha: &Bipartition, sp: &Specialization, format: Format) -> CliResult<Output> {
    let from_function = construct(alpha)?.f.evaluate_eps();
    let formula = evaluation_value(alpha, &Params::symbolic())?;
    let agree = from_function == formula;
    let (a, b) = (sp.apply(&from_function)?, sp.apply(&formula)?);
    let code = if agree { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => {
            render(&serde_json::json!({ "alpha": alpha.to_string(), "value": a, "formula": b, "agree": agree }))
        }
        Format::Text if agree => format!("{a}\n"),
        Format::Text => format!("function: {a}\nformula: {b}\nMISMATCH\n"),
    };
    Ok(Output { text, code })
}

fn norm(alpha: &Bipartition, sp: &Specialization, torus: bool, format: Format) -> CliResult<Output> {
    let value = sp.apply(&norm_value(alpha, &Params::symbolic())?)?;
    let mut torus_value = None;
    let mut code = EXIT_OK;
    if torus {
        let (k, p0) = sp.full()?.ok_or_else(|| usage("--torus needs --k and --p0"))?;
        let zero = BigRational::from_integer(0.into());
        if !k.is_integer() || k >= zero {
            return Err(usage("--torus: --k must be a negative integer"));
        }
        if !p0.is_integer() || p0 < BigRational::from_integer(BigInt::from(alpha.len().max(1))) {
            return Err(usage(format!(
                "--torus: --p0 must be an integer >= {}",
                alpha.len().max(1)
            )));
        }
        let n: usize = p0.to_integer().try_into().map_err(|_| usage("--p0 is too large"))?;
        let m: i64 = k.to_integer().try_into().map_err(|_| usage("--k is too large"))?;
        let f = phi_n_symbolic(&construct(alpha)?.f, n)?.specialize_k(&k)?;
        let t = torus_form(&f, &f, m)?;
        if t.to_string() != value {
            code = EXIT_FAILED;
        }
        torus_value = Some(t.to_string());
    }
    let text = match format {
        Format::Json => render(&serde_json::json!({ "alpha": alpha.to_string(), "norm": value, "torus": torus_value })),
        Format::Text => match &torus_value {
            None => format!("{value}\n"),
            Some(t) => format!("formula: {value}\ntorus: {t}\n"),
        },
    };
    Ok(Output { text, code })
}

fn schur(alpha: &Bipartition, format: Format) -> CliResult<Output> {
    let limit = schur_limit(alpha)?;
    let det = jacobi_trudy_s(alpha);
    let agree = limit == det;
    let code = if agree { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => render(&serde_json::json!({
            "alpha": alpha.to_string(),
            "terms": limit.to_json(),
            "determinant": det.to_json(),
            "agree": agree,
        })),
        Format::Text if agree => format!("{limit}\n"),
        Format::Text => format!("limit: {limit}\ndeterminant: {det}\nMISMATCH\n"),
    };
    Ok(Output { text, code })
}

fn conjectures(max_size: usize, out: Option<std::path::PathBuf>, format: Format, exec: Exec) -> CliResult<Output> {
    let report = run_all(max_size, exec)?;
    let json = render(&report);
    if let Some(path) = &out {
        std::fs::write(path, &json).map_err(|e| Failure {
            message: format!("--out {}: {e}", path.display()),
            code: EXIT_USAGE,
        })?;
    }
    let text = match format {
        Format::Json if out.is_none() => json,
        _ => {
            let mut s = String::new();
            for r in &report.reports {
                writeln!(
                    s,
                    "{}: {} hold, {} fail, {} indeterminate",
                    r.name,
                    r.count(Verdict::Holds),
                    r.count(Verdict::Fails),
                    r.count(Verdict::Indeterminate)
                )
                .unwrap();
            }
            s
        }
    };
    ok(text)
}

fn run_verify(suite: Suite, max_size: usize, format: Format, exec: Exec) -> CliResult<Output> {
    let report = verify(suite, max_size, exec);
    let code = if report.passed { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => render(&report),
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(s, "{status} {}/{} ({} cases)", c.suite, c.check, c.cases).unwrap();
                for f in &c.failures {
                    writeln!(s, "    {f}").unwrap();
                }
                for (key, w) in &c.witnesses {
                    writeln!(s, "    {key}: {w}").unwrap();
                }
            }
            writeln!(
                s,
                "{} {} (max size {max_size})",
                report.suite,
                if report.passed { "passed" } else { "FAILED" }
            )
            .unwrap();
            s
        }
    };
    Ok(Output { text, code })
}
