//! Job documents and their dispatch. Every subcommand is lowered to a
//! [`JobSpec`] and run through [`run`], so `gammadist run --job` and the
//! subcommands share one code path.

use gammadist_core::converse::{
    converse_decide, default_scan_radius, twist_scan, ConverseOutcome, CounterexampleSource,
};
use gammadist_core::distinguish::{check_langlands_order, RefutationReason};
use gammadist_core::matrix::{
    fit_log_bound, kah_decompose, orbit_involution, unipotent_probe, KahDecomposition, Order,
    XPoint,
};
use gammadist_core::sample::{self, seeded};
use gammadist_core::strata::{inversion_set, kappa_solutions, normal_space_check, KappaFunction};
use gammadist_core::{
    find_involution, rs_gamma, tate_fe_defect, tate_gamma, verify_certificate, Certificate,
    MatchMode, Scalar, Verdict,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::convert::{self, unwrap_key};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Command {
    #[serde(rename = "gamma.tate")]
    GammaTate,
    #[serde(rename = "gamma.rs")]
    GammaRs,
    #[serde(rename = "gamma.fe-defect")]
    GammaFeDefect,
    #[serde(rename = "distinguish.check")]
    DistinguishCheck,
    #[serde(rename = "distinguish.verify")]
    DistinguishVerify,
    #[serde(rename = "converse.decide")]
    ConverseDecide,
    #[serde(rename = "converse.scan")]
    ConverseScan,
    #[serde(rename = "matrix.kah")]
    MatrixKah,
    #[serde(rename = "matrix.orbit")]
    MatrixOrbit,
    #[serde(rename = "matrix.probe")]
    MatrixProbe,
    #[serde(rename = "strata.iw")]
    StrataIw,
    #[serde(rename = "strata.kappa")]
    StrataKappa,
    #[serde(rename = "strata.normal")]
    StrataNormal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    #[default]
    Tolerance,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderOption {
    #[default]
    Kah,
    Hak,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderOption>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_log10: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
}

impl Options {
    pub fn exact(&self) -> bool {
        self.mode == Some(Mode::Exact)
    }

    pub fn match_mode(&self) -> MatchMode {
        if self.exact() {
            MatchMode::Exact
        } else {
            MatchMode::Tolerance(self.tol.unwrap_or(gammadist_core::scalar::DEFAULT_TOL))
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub inputs: Value,
    #[serde(default)]
    pub options: Options,
}

const INPUT_KEYS: [&str; 7] = [
    "s",
    "chi",
    "chi_prime",
    "certificate",
    "matrix",
    "w",
    "lambda",
];

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::schema("job", e.to_string()))
    }

    /// Structural checks serde cannot express; field contents are checked on conversion.
    pub fn validate(&self) -> Result<(), CliError> {
        match &self.inputs {
            Value::Null => Ok(()),
            Value::Object(obj) => match obj.keys().find(|k| !INPUT_KEYS.contains(&k.as_str())) {
                Some(key) => Err(CliError::schema(
                    "inputs",
                    format!("unexpected field {key:?}"),
                )),
                None => Ok(()),
            },
            _ => Err(CliError::schema("inputs", "expected an object")),
        }
    }
}

/// Exit statuses: 0 accept, 2 refute or counterexample, 1 error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Accept,
    Refute,
    Error,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Accept => 0,
            Status::Error => 1,
            Status::Refute => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub document: Value,
}

impl Outcome {
    pub fn accept(document: Value) -> Self {
        Outcome {
            status: Status::Accept,
            document,
        }
    }

    pub fn verdict(accepted: bool, document: Value) -> Self {
        Outcome {
            status: if accepted {
                Status::Accept
            } else {
                Status::Refute
            },
            document,
        }
    }
}

/// Runs a job; errors become an exit-1 diagnostic document.
pub fn run(job: &JobSpec) -> Outcome {
    match job.validate().and_then(|_| dispatch(job)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            status: Status::Error,
            document: e.to_json(),
        },
    }
}

fn input<'a>(job: &'a JobSpec, key: &str) -> Result<&'a Value, CliError> {
    job.inputs
        .get(key)
        .ok_or_else(|| CliError::schema("inputs", format!("missing field {key:?}")))
}

fn chi_input(job: &JobSpec) -> Result<gammadist_core::BorelCharacter, CliError> {
    convert::borel(
        unwrap_key(&job.inputs, "chi"),
        job.options.exact(),
        "inputs.chi",
    )
}

fn matrix_input(job: &JobSpec) -> Result<gammadist_core::matrix::MatrixC, CliError> {
    convert::matrix(unwrap_key(&job.inputs, "matrix"), "inputs.matrix")
}

fn involution_input(job: &JobSpec) -> Result<gammadist_core::involution::Involution, CliError> {
    convert::involution(unwrap_key(&job.inputs, "w"), "inputs.w")
}

fn s_input(job: &JobSpec) -> Result<Scalar, CliError> {
    match job.inputs.get("s") {
        Some(v) => convert::scalar(v, job.options.exact(), "inputs.s"),
        None => Ok(Scalar::ratio(1, 2)),
    }
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "w": convert::involution_json(&c.w),
        "pairs": c.pairs.iter().map(|&p| convert::pair_json(p)).collect::<Vec<_>>(),
        "fixed": c.fixed.iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

fn kah_json(d: &KahDecomposition, g: &gammadist_core::matrix::MatrixC) -> Value {
    json!({
        "order": match d.order { Order::Kah => "kah", Order::Hak => "hak" },
        "t": d.a.t,
        "k": convert::matrix_json(&d.k),
        "h": convert::real_matrix_json(&d.h),
        "relative_error": d.relative_error(g),
        "unitarity_defect": d.unitarity_defect(),
    })
}

fn kappa_json(k: &KappaFunction) -> Value {
    Value::Array(
        k.values()
            .iter()
            .map(|(&p, &v)| json!({ "pair": convert::pair_json(p), "kappa": v }))
            .collect(),
    )
}

fn dispatch(job: &JobSpec) -> Result<Outcome, CliError> {
    let exact = job.options.exact();
    match job.command {
        Command::GammaTate => {
            let chi = convert::character(input(job, "chi")?, exact, "inputs.chi")?;
            Ok(Outcome::accept(convert::gamma_json(&tate_gamma(
                &s_input(job)?,
                &chi,
            ))))
        }
        Command::GammaFeDefect => {
            let chi = convert::character(input(job, "chi")?, exact, "inputs.chi")?;
            let d = tate_fe_defect(&s_input(job)?, &chi)?;
            Ok(Outcome::accept(json!({
                "defect": convert::complex_json(d),
                "deviation": (d - num_complex::Complex64::new(1.0, 0.0)).norm(),
            })))
        }
        Command::GammaRs => {
            let chi = convert::borel(input(job, "chi")?, exact, "inputs.chi")?;
            let chi2 = convert::borel(input(job, "chi_prime")?, exact, "inputs.chi_prime")?;
            Ok(Outcome::accept(convert::gamma_json(&rs_gamma(
                &chi,
                &chi2,
                &s_input(job)?,
            ))))
        }
        Command::DistinguishCheck => {
            let chi = chi_input(job)?;
            let order = check_langlands_order(&chi);
            Ok(match find_involution(&chi, job.options.match_mode())? {
                Verdict::Certified(c) => Outcome::accept(json!({
                    "verdict": "certified",
                    "certificate": certificate_json(&c),
                    "langlands_order": order,
                })),
                Verdict::Refuted(r) => Outcome::verdict(
                    false,
                    json!({
                        "verdict": "refuted",
                        "index": r.index + 1,
                        "reason": match r.reason {
                            RefutationReason::Unmatched => "unmatched",
                            RefutationReason::OddFixedPoint => "odd_fixed_point",
                        },
                        "langlands_order": order,
                    }),
                ),
            })
        }
        Command::DistinguishVerify => {
            let chi = chi_input(job)?;
            let cert = unwrap_key(input(job, "certificate")?, "certificate");
            let w = convert::involution(
                cert.get("w")
                    .ok_or_else(|| CliError::schema("inputs.certificate", "missing field \"w\""))?,
                "inputs.certificate.w",
            )?;
            let valid = verify_certificate(
                &chi,
                &Certificate::from_involution(w),
                job.options.match_mode(),
            )?;
            Ok(Outcome::verdict(valid, json!({ "valid": valid })))
        }
        Command::ConverseDecide => {
            let chi = chi_input(job)?;
            Ok(match converse_decide(&chi)? {
                ConverseOutcome::Certified {
                    certificate,
                    second_phase,
                } => Outcome::accept(json!({
                    "outcome": "certified",
                    "certificate": certificate_json(&certificate),
                    "second_phase": second_phase,
                })),
                ConverseOutcome::Counterexample { m, gamma, source } => {
                    let source = match source {
                        CounterexampleSource::PolynomialMismatch { degree } => {
                            json!({ "kind": "polynomial_mismatch", "degree": degree })
                        }
                        CounterexampleSource::PairingFailure { chain } => json!({
                            "kind": "pairing_failure",
                            "chain": chain.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        }),
                        CounterexampleSource::OddFixedPoint { index } => {
                            json!({ "kind": "odd_fixed_point", "index": index + 1 })
                        }
                    };
                    Outcome::verdict(
                        false,
                        json!({
                            "outcome": "counterexample",
                            "counterexample_m": m,
                            "gamma": convert::gamma_json(&gamma),
                            "source": source,
                        }),
                    )
                }
            })
        }
        Command::ConverseScan => {
            let chi = chi_input(job)?;
            let [lo, hi] = job.options.range.unwrap_or_else(|| {
                let r = default_scan_radius(&chi);
                [-r, r]
            });
            let report = twist_scan(&chi, lo, hi)?;
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "m": e.m,
                        "gamma": convert::gamma_json(&e.gamma),
                        "defect": if e.defect.is_finite() { json!(e.defect) } else { Value::Null },
                        "flagged": e.flagged(),
                        "triple": e.triple.map(|t| json!({
                            "p1": t.p1,
                            "p2": convert::complex_json(t.p2),
                            "p3": convert::complex_json(t.p3),
                        })),
                    })
                })
                .collect();
            Ok(Outcome::accept(
                json!({ "range": [lo, hi], "entries": entries }),
            ))
        }
        Command::MatrixKah => {
            let g = matrix_input(job)?;
            let order = match job.options.order.unwrap_or_default() {
                OrderOption::Kah => Order::Kah,
                OrderOption::Hak => Order::Hak,
            };
            let d = kah_decompose(&g, order)?;
            Ok(Outcome::accept(kah_json(&d, &g)))
        }
        Command::MatrixOrbit => {
            let x = XPoint::new(matrix_input(job)?, job.options.tol.unwrap_or(1e-9))?;
            let w = orbit_involution(&x)?;
            Ok(Outcome::accept(
                json!({ "w": convert::involution_json(&w) }),
            ))
        }
        Command::MatrixProbe => {
            let n = job.options.n.unwrap_or(3);
            let count = job.options.samples.unwrap_or(10_000);
            let max_log10 = job.options.max_log10.unwrap_or(3.0);
            let margin = job.options.margin.unwrap_or(1e-6);
            let mut rng = seeded(job.options.seed());
            let samples = (0..count)
                .map(|_| unipotent_probe(&sample::unipotent(n, max_log10, &mut rng)))
                .collect::<Result<Vec<_>, _>>()?;
            let fit = fit_log_bound(&samples, margin);
            let unit = samples
                .iter()
                .filter(|s| s.norm_u.ln() > s.norm_v.ln() + margin)
                .count();
            Ok(Outcome::accept(json!({
                "n": n,
                "samples": count,
                "seed": job.options.seed(),
                "fit": { "d": fit.d, "c": fit.c, "violations": fit.violations, "margin": fit.margin },
                "unit_slope_violations": unit,
            })))
        }
        Command::StrataIw => {
            let w = involution_input(job)?;
            let iw = inversion_set(&w);
            Ok(Outcome::accept(json!({
                "w": convert::involution_json(&w),
                "pairs": iw.pairs().iter().map(|&p| convert::pair_json(p)).collect::<Vec<_>>(),
                "size": iw.len(),
            })))
        }
        Command::StrataKappa => {
            let w = convert::involution(input(job, "w")?, "inputs.w")?;
            let lambda = convert::rationals(input(job, "lambda")?, "inputs.lambda")?;
            let report = kappa_solutions(&w, &lambda, job.options.bound.unwrap_or(3))?;
            Ok(Outcome::verdict(
                report.agrees(),
                json!({
                    "w": convert::involution_json(&w),
                    "lambda": lambda.iter().map(convert::rational_json).collect::<Vec<_>>(),
                    "bound": report.bound,
                    "solutions": report.solutions.iter().map(kappa_json).collect::<Vec<_>>(),
                    "predicted": report.predicted.iter().map(kappa_json).collect::<Vec<_>>(),
                    "agrees": report.agrees(),
                }),
            ))
        }
        Command::StrataNormal => {
            let w = involution_input(job)?;
            let report = normal_space_check(&w, &mut seeded(job.options.seed()))?;
            let pairs =
                |v: &[(usize, usize)]| v.iter().map(|&p| convert::pair_json(p)).collect::<Vec<_>>();
            Ok(Outcome::verdict(
                report.matches(),
                json!({
                    "w": convert::involution_json(&w),
                    "tangent_dimension": report.tangent_dimension,
                    "orbit_dimension": report.orbit_dimension,
                    "dimension": report.dimension,
                    "weights": pairs(&report.weights),
                    "expected": pairs(&report.expected),
                    "matches": report.matches(),
                }),
            ))
        }
    }
}
