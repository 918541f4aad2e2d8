//! Command-line front end: evaluation, zero finding, spectrum tables,
//! theorem sweeps, the contour figure and proof constants, emitted as
//! deterministic JSON/CSV/SVG reports.
//!
//! Exit codes: 0 success / verification passed, 1 verification violations or
//! computation failure (serialized into the report), 2 usage errors.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use theta_atlas::complexzeros::find_all_zeros;
use theta_atlas::num::{Complex, Real};
use theta_atlas::precision::{Param, PrecisionConfig};
use theta_atlas::regions::{verify_theorem, TheoremId};
use theta_atlas::report::{
    parse_grid, render_contour_svg, sci, spectrum_csv, zeros_csv, ConstantsReport, ErrorReport,
    EvalReport, SpectrumReport, SpectrumRow, VerifyReport, ZeroEntry, ZerosReport,
};
use theta_atlas::series::{eval_g, eval_katsnelson_family, eval_theta, eval_theta_star};
use theta_atlas::spectrum::find_spectral_point;
use theta_atlas::Result;

#[derive(Parser)]
#[command(
    name = "theta-atlas",
    about = "Partial theta function evaluation, zero certification and theorem sweeps",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionName {
    Theta,
    ThetaStar,
    G,
    Katsnelson,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremName {
    T1,
    T2b,
    T3,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate theta, theta*, g or the Gauss-kernel family at one point.
    Eval {
        /// Parameter q in (0,1) as a decimal literal (eps for --fn katsnelson).
        #[arg(long)]
        q: String,
        /// Argument x as "re,im".
        #[arg(long)]
        x: String,
        #[arg(long = "fn", value_enum, default_value = "theta")]
        function: FunctionName,
        /// Significant digits to print (computation runs at >= 10).
        #[arg(long, default_value_t = 30)]
        digits: usize,
        /// Output path (stdout when omitted).
        #[arg(long)]
        output: Option<String>,
    },
    /// Find and certify all zeros of theta(q,.) inside a disk.
    Zeros {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 50.0)]
        radius: f64,
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// Compute spectral points q~_k with their double zeros y_k.
    Spectrum {
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 25)]
        to: usize,
        #[arg(long, default_value_t = 8)]
        digits: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<String>,
    },
    /// Sweep a q grid and verify a zero-location theorem.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremName,
        /// Grid as "lo:hi:step", all values inside (0, 0.95].
        #[arg(long = "q-grid")]
        q_grid: String,
        #[arg(long, default_value_t = 55.0)]
        radius: f64,
        #[arg(long, default_value_t = 20)]
        digits: usize,
        #[arg(long)]
        output: Option<String>,
    },
    /// Render the region geometry with the zeros of theta(q,.) overlaid.
    Contour {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 50.0)]
        radius: f64,
        /// Output SVG path (stdout when omitted).
        #[arg(long)]
        output: Option<String>,
    },
    /// Compute the proof constants (zeta0, kappa, r0, rho0).
    Constants {
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[arg(long)]
        output: Option<String>,
    },
}

fn precision_for(digits: usize) -> Result<PrecisionConfig> {
    let digits = digits.clamp(1, 60) as u32;
    PrecisionConfig::with_target(digits.max(10))
}

fn parse_x(s: &str, bits: usize) -> Result<Complex> {
    let parts: Vec<&str> = s.split(',').collect();
    let (re_s, im_s) = match parts.as_slice() {
        [re] => (*re, "0"),
        [re, im] => (*re, *im),
        _ => {
            return Err(theta_atlas::Error::InvalidInput(format!(
                "x must be \"re\" or \"re,im\", got {s:?}"
            )))
        }
    };
    let re = Real::parse(re_s.trim(), bits)
        .ok_or_else(|| theta_atlas::Error::InvalidInput(format!("bad real part {re_s:?}")))?;
    let im = Real::parse(im_s.trim(), bits)
        .ok_or_else(|| theta_atlas::Error::InvalidInput(format!("bad imaginary part {im_s:?}")))?;
    let z = Complex::new(re, im);
    if !z.is_finite() {
        return Err(theta_atlas::Error::InvalidInput(
            "x must have finite components".into(),
        ));
    }
    Ok(z)
}

fn emit(output: &Option<String>, body: &str) -> std::io::Result<()> {
    match output {
        Some(path) => fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())
        }
    }
}

fn run(cli: Cli) -> Result<(String, Option<String>, bool)> {
    match cli.cmd {
        Cmd::Eval {
            q,
            x,
            function,
            digits,
            output,
        } => {
            let prec = precision_for(digits)?;
            let xv = parse_x(&x, prec.bits())?;
            let (name, result) = match function {
                FunctionName::Theta => {
                    let qp = Param::from_str(&q, &prec)?;
                    ("theta", eval_theta(&qp, &xv, &prec)?)
                }
                FunctionName::ThetaStar => {
                    let qp = Param::from_str(&q, &prec)?;
                    ("theta-star", eval_theta_star(&qp, &xv, &prec)?)
                }
                FunctionName::G => {
                    let qp = Param::from_str(&q, &prec)?;
                    ("g", eval_g(&qp, &xv, &prec)?)
                }
                FunctionName::Katsnelson => {
                    let eps = Real::parse(&q, prec.bits()).ok_or_else(|| {
                        theta_atlas::Error::InvalidInput(format!("bad eps {q:?}"))
                    })?;
                    ("katsnelson", eval_katsnelson_family(&eps, &xv, &prec)?)
                }
            };
            let rep = EvalReport {
                function: name.into(),
                q: q.clone(),
                x_re: sci(&xv.re, digits.clamp(1, 60)),
                x_im: sci(&xv.im, digits.clamp(1, 60)),
                digits,
                value_re: sci(&result.value.re, digits.clamp(1, 60)),
                value_im: sci(&result.value.im, digits.clamp(1, 60)),
                modulus: sci(&result.value.abs(), digits.clamp(1, 60)),
                abs_error: sci(&result.abs_error, 3),
                terms_used: result.terms_used,
            };
            Ok((
                serde_json::to_string_pretty(&rep).expect("serializable report") + "\n",
                output,
                true,
            ))
        }
        Cmd::Zeros {
            q,
            radius,
            digits,
            format,
            output,
        } => {
            let prec = precision_for(digits)?;
            let qp = Param::from_str(&q, &prec)?;
            let zeros = find_all_zeros(&qp, radius, &prec)?;
            let entries: Vec<ZeroEntry> = zeros
                .iter()
                .map(|z| ZeroEntry::from_zero(z, digits.clamp(1, 60)))
                .collect();
            let pair_count = zeros
                .iter()
                .filter(|z| z.location.im.is_positive())
                .count();
            let body = match format {
                Format::Json => {
                    let rep = ZerosReport {
                        q: q.clone(),
                        radius,
                        digits,
                        count: zeros.len(),
                        pair_count,
                        zeros: entries,
                    };
                    serde_json::to_string_pretty(&rep).expect("serializable report") + "\n"
                }
                Format::Csv => zeros_csv(&entries),
            };
            Ok((body, output, true))
        }
        Cmd::Spectrum {
            from,
            to,
            digits,
            format,
            output,
        } => {
            if from == 0 || from > to {
                return Err(theta_atlas::Error::InvalidInput(format!(
                    "need 1 <= from <= to, got {from}..{to}"
                )));
            }
            let prec = precision_for(digits)?;
            let mut rows = Vec::with_capacity(to - from + 1);
            for k in from..=to {
                let p = find_spectral_point(k, &prec)?;
                rows.push(SpectrumRow::from_point(&p, digits.clamp(1, 60)));
            }
            let body = match format {
                Format::Csv => spectrum_csv(&rows),
                Format::Json => {
                    let rep = SpectrumReport {
                        from,
                        to,
                        digits,
                        rows,
                    };
                    serde_json::to_string_pretty(&rep).expect("serializable report") + "\n"
                }
            };
            Ok((body, output, true))
        }
        Cmd::Verify {
            theorem,
            q_grid,
            radius,
            digits,
            output,
        } => {
            let prec = precision_for(digits)?;
            let grid = parse_grid(&q_grid)?;
            let id = match theorem {
                TheoremName::T1 => TheoremId::T1,
                TheoremName::T2b => TheoremId::T2b,
                TheoremName::T3 => TheoremId::T3,
            };
            let rep = verify_theorem(id, &grid, radius, &prec)?;
            let body = serde_json::to_string_pretty(&VerifyReport::from_region_report(
                &rep,
                &q_grid,
                radius,
                digits.clamp(1, 60),
            ))
            .expect("serializable report")
                + "\n";
            Ok((body, output, rep.passed()))
        }
        Cmd::Contour { q, radius, output } => {
            let prec = PrecisionConfig::default();
            let qp = Param::from_str(&q, &prec)?;
            let zeros = find_all_zeros(&qp, radius, &prec)?;
            let refs: Vec<&_> = zeros.iter().collect();
            let svg = render_contour_svg(&q, &refs);
            Ok((svg, output, true))
        }
        Cmd::Constants { digits, output } => {
            let prec = precision_for(digits)?;
            let k = theta_atlas::regions::proof_constants(&prec)?;
            let d = digits.clamp(1, 60);
            let rep = ConstantsReport {
                digits,
                zeta0: sci(&k.zeta0, d),
                kappa_dagger: sci(&k.kappa_dagger, d),
                r0: sci(&k.r0, d),
                rho0: sci(&k.rho0, d),
            };
            Ok((
                serde_json::to_string_pretty(&rep).expect("serializable report") + "\n",
                output,
                true,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match run(cli) {
        Ok((body, output, passed)) => {
            if let Err(e) = emit(&output, &body) {
                eprintln!("cannot write output: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let rep = ErrorReport {
                error: e.to_string(),
            };
            let body = serde_json::to_string_pretty(&rep).expect("serializable error") + "\n";
            let _ = emit(&None, &body);
            ExitCode::from(1)
        }
    }
}
