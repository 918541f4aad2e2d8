//! Deterministic report emission: decimal-string JSON, CSV tables and the
//! SVG contour figure.
//!
//! Numbers are serialized as decimal strings at the caller's digit count so
//! reports are byte-identical across platforms; no timestamps or other
//! ambient state enter the body.

use serde::Serialize;

use crate::complexzeros::CertifiedZero;
use crate::error::{Error, Result};
use crate::num::Real;
use crate::regions::{RegionReport, TheoremId};
use crate::spectrum::SpectralPoint;

/// Parses a "lo:hi:step" grid specification into a strictly increasing
/// sequence inside (0, 1).
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "grid spec must be lo:hi:step, got {spec:?}"
        )));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad grid start {:?}", parts[0])))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad grid end {:?}", parts[1])))?;
    let step: f64 = parts[2]
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad grid step {:?}", parts[2])))?;
    if !(step > 0.0 && lo <= hi) {
        return Err(Error::InvalidInput(format!(
            "grid must run upward: lo={lo}, hi={hi}, step={step}"
        )));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    let grid: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    if grid.is_empty() || grid[0] <= 0.0 || *grid.last().unwrap() >= 1.0 {
        return Err(Error::InvalidInput(format!(
            "grid values must lie in (0, 1), got [{lo}, {hi}]"
        )));
    }
    Ok(grid)
}

/// Decimal-string formatting used across all reports.
pub fn sci(x: &Real, digits: usize) -> String {
    x.to_sci(digits)
}

fn f64_key(q: f64) -> String {
    format!("{q:.6}")
}

#[derive(Serialize)]
pub struct EvalReport {
    pub function: String,
    pub q: String,
    pub x_re: String,
    pub x_im: String,
    pub digits: usize,
    pub value_re: String,
    pub value_im: String,
    pub modulus: String,
    pub abs_error: String,
    pub terms_used: usize,
}

#[derive(Serialize)]
pub struct ZeroEntry {
    pub re: String,
    pub im: String,
    pub modulus: String,
    pub residual: String,
    pub deriv_lower: String,
    pub cert_radius: String,
    pub status: String,
}

impl ZeroEntry {
    pub fn from_zero(z: &CertifiedZero, digits: usize) -> Self {
        ZeroEntry {
            re: sci(&z.location.re, digits),
            im: sci(&z.location.im, digits),
            modulus: sci(&z.location.abs(), digits),
            residual: sci(&z.residual, 3),
            deriv_lower: sci(&z.deriv_lower, 6),
            cert_radius: sci(&z.cert_radius, 3),
            status: match z.status {
                crate::complexzeros::ZeroStatus::Certified => "certified".into(),
                crate::complexzeros::ZeroStatus::NearDoubleUncertified => {
                    "near_double_uncertified".into()
                }
            },
        }
    }
}

#[derive(Serialize)]
pub struct ZerosReport {
    pub q: String,
    pub radius: f64,
    pub digits: usize,
    pub count: usize,
    pub pair_count: usize,
    pub zeros: Vec<ZeroEntry>,
}

#[derive(Serialize)]
pub struct SpectrumRow {
    pub k: usize,
    pub q_tilde: String,
    pub y_double: String,
    pub residual_theta: String,
    pub residual_theta_x: String,
}

impl SpectrumRow {
    pub fn from_point(p: &SpectralPoint, digits: usize) -> Self {
        SpectrumRow {
            k: p.k,
            q_tilde: p.q_tilde.to_fixed(digits),
            y_double: p.y_double.to_fixed(digits),
            residual_theta: sci(&p.residuals.0, 3),
            residual_theta_x: sci(&p.residuals.1, 3),
        }
    }
}

#[derive(Serialize)]
pub struct SpectrumReport {
    pub from: usize,
    pub to: usize,
    pub digits: usize,
    pub rows: Vec<SpectrumRow>,
}

pub fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("k,q_tilde,y_double,residual_theta,residual_theta_x\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.k, r.q_tilde, r.y_double, r.residual_theta, r.residual_theta_x
        ));
    }
    out
}

pub fn zeros_csv(zeros: &[ZeroEntry]) -> String {
    let mut out = String::from("re,im,modulus,residual,deriv_lower,cert_radius,status\n");
    for z in zeros {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            z.re, z.im, z.modulus, z.residual, z.deriv_lower, z.cert_radius, z.status
        ));
    }
    out
}

#[derive(Serialize)]
pub struct VerifyEntry {
    pub q: String,
    pub real_zeros: usize,
    pub pairs: usize,
    pub zeros: Vec<ZeroEntry>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub grid: String,
    pub radius_cap: f64,
    pub passed: bool,
    pub violations: Vec<ZeroViolation>,
    pub warnings: Vec<ZeroViolation>,
    pub worst_margin: String,
    pub max_modulus_right_half_plane: String,
    pub max_modulus_left_half_plane: String,
    pub entries: Vec<VerifyEntry>,
}

#[derive(Serialize)]
pub struct ZeroViolation {
    pub q: String,
    pub re: String,
    pub im: String,
}

impl VerifyReport {
    pub fn from_region_report(
        rep: &RegionReport,
        grid_spec: &str,
        radius_cap: f64,
        digits: usize,
    ) -> Self {
        let theorem = match rep.theorem {
            TheoremId::T1 => "T1",
            TheoremId::T2b => "T2b",
            TheoremId::T3 => "T3",
        };
        let to_violation = |(q, z): &(f64, crate::num::Complex)| ZeroViolation {
            q: f64_key(*q),
            re: sci(&z.re, digits),
            im: sci(&z.im, digits),
        };
        let entries = rep
            .entries
            .iter()
            .map(|e| VerifyEntry {
                q: f64_key(e.q),
                real_zeros: e.zeros.iter().filter(|z| z.is_real()).count(),
                pairs: e
                    .zeros
                    .iter()
                    .filter(|z| z.location.im.is_positive())
                    .count(),
                zeros: e
                    .zeros
                    .iter()
                    .map(|z| ZeroEntry::from_zero(z, digits))
                    .collect(),
            })
            .collect();
        VerifyReport {
            theorem: theorem.into(),
            grid: grid_spec.into(),
            radius_cap,
            passed: rep.passed(),
            violations: rep.violations.iter().map(to_violation).collect(),
            warnings: rep.warnings.iter().map(to_violation).collect(),
            worst_margin: format!("{:.6}", rep.worst_margin),
            max_modulus_right_half_plane: format!("{:.6}", rep.max_modulus_right),
            max_modulus_left_half_plane: format!("{:.6}", rep.max_modulus_left),
            entries,
        }
    }
}

#[derive(Serialize)]
pub struct ConstantsReport {
    pub digits: usize,
    pub zeta0: String,
    pub kappa_dagger: String,
    pub r0: String,
    pub rho0: String,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: String,
}

// ---- SVG figure ----------------------------------------------------------

/// Fixed viewport of the contour figure, wide enough for the horizontal
/// tangency points of the log-spiral contour.
const VIEW: (f64, f64, f64, f64) = (-9.0, 6.0, -7.0, 7.0); // x_min, x_max, y_min, y_max
const SCALE: f64 = 60.0;

fn px(x: f64) -> f64 {
    (x - VIEW.0) * SCALE
}

fn py(y: f64) -> f64 {
    (VIEW.3 - y) * SCALE
}

fn path_from(points: &[(f64, f64)]) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        d.push_str(&format!("{cmd}{:.3} {:.3} ", px(*x), py(*y)));
    }
    d.trim_end().to_string()
}

/// Renders the region geometry with the zeros of theta(q,.) overlaid:
/// the log-spiral contour dashed, the zero-free domain and the half-annulus
/// solid, computed zeros as markers.
pub fn render_contour_svg(q_label: &str, zeros: &[&CertifiedZero]) -> String {
    let w = (VIEW.1 - VIEW.0) * SCALE;
    let h = (VIEW.3 - VIEW.2) * SCALE;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{w:.0}\" height=\"{h:.0}\" fill=\"white\"/>\n"
    ));

    // axes
    svg.push_str(&format!(
        "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
        px(VIEW.0), py(0.0), px(VIEW.1), py(0.0)
    ));
    svg.push_str(&format!(
        "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
        px(0.0), py(VIEW.2), px(0.0), py(VIEW.3)
    ));

    // Katsnelson contour (dashed): (e^t cos t, +/- e^t sin t), t in [0, pi]
    let n = 600;
    let mut upper = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = std::f64::consts::PI * i as f64 / n as f64;
        upper.push((t.exp() * t.cos(), t.exp() * t.sin()));
    }
    let lower: Vec<(f64, f64)> = upper.iter().map(|(x, y)| (*x, -*y)).collect();
    for arm in [&upper, &lower] {
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"7 5\"/>\n",
            path_from(arm)
        ));
    }

    // domain D boundary (solid): arc of |x| = 3 with |Im| <= 3/sqrt2, closed
    // by horizontal segments to the imaginary axis and the axis itself
    let d_im = 3.0 / 2f64.sqrt();
    let mut dpts = Vec::new();
    dpts.push((0.0, d_im));
    dpts.push((-d_im, d_im));
    let a0 = (3f64 / 4.0 * std::f64::consts::PI).min(std::f64::consts::PI);
    let steps = 200;
    for i in 0..=steps {
        let a = a0 + (2.0 * std::f64::consts::PI - 2.0 * a0) * i as f64 / steps as f64 / 2.0;
        // arc from 135 deg to 225 deg
        let ang = a0 + (a - a0);
        if ang > 2.0 * std::f64::consts::PI - a0 {
            break;
        }
        dpts.push((3.0 * ang.cos(), 3.0 * ang.sin()));
    }
    dpts.push((-d_im, -d_im));
    dpts.push((0.0, -d_im));
    dpts.push((0.0, d_im));
    svg.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n",
        path_from(&dpts)
    ));

    // half-annulus A boundary (solid): right half circles of radii 1 and 5
    for r in [1.0f64, 5.0] {
        let mut arc = Vec::new();
        for i in 0..=steps {
            let ang = -std::f64::consts::FRAC_PI_2
                + std::f64::consts::PI * i as f64 / steps as f64;
            arc.push((r * ang.cos(), r * ang.sin()));
        }
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n",
            path_from(&arc)
        ));
    }
    for (y0, y1) in [(1.0, 5.0), (-5.0, -1.0)] {
        svg.push_str(&format!(
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#d62728\" stroke-width=\"2\"/>\n",
            px(0.0), py(y0), px(0.0), py(y1)
        ));
    }

    // zeros of theta(q, .)
    for z in zeros {
        let (re, im) = z.location.to_f64s();
        if re < VIEW.0 || re > VIEW.1 || im < VIEW.2 || im > VIEW.3 {
            continue;
        }
        if z.is_certified() {
            svg.push_str(&format!(
                "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"#2ca02c\"/>\n",
                px(re),
                py(im)
            ));
        } else {
            svg.push_str(&format!(
                "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n",
                px(re),
                py(im)
            ));
        }
    }

    svg.push_str(&format!(
        "<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#333333\">q = {q_label}</text>\n"
    ));
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("0.1:0.5:0.1").unwrap();
        assert_eq!(g.len(), 5);
        assert!((g[0] - 0.1).abs() < 1e-12);
        assert!((g[4] - 0.5).abs() < 1e-12);
        assert!(g.windows(2).all(|w| w[0] < w[1]));

        assert!(parse_grid("0:0.5:0.1").is_err());
        assert!(parse_grid("0.5:1.0:0.1").is_err());
        assert!(parse_grid("0.5:0.4:0.1").is_err());
        assert!(parse_grid("nonsense").is_err());
    }

    #[test]
    fn grid_endpoint_inclusion() {
        // 0.05:0.66:0.01 covers 62 points ending at 0.66
        let g = parse_grid("0.05:0.66:0.01").unwrap();
        assert_eq!(g.len(), 62);
        assert!((g.last().unwrap() - 0.66).abs() < 1e-9);
    }

    #[test]
    fn svg_has_fixed_viewport_and_dashes() {
        let svg = render_contour_svg("0.5", &[]);
        assert!(svg.starts_with("<svg xmlns"));
        assert!(svg.contains("width=\"900\""));
        assert!(svg.contains("height=\"840\""));
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
