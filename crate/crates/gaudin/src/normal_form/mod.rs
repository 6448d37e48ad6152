//! Sixth-order normal-form coefficients along two independent routes — the
//! printed closed forms and a Lie-series pipeline — plus the criticality
//! classification of the bifurcations.
//!
//! Conventions pinned by the cross-checks (see the crate tests):
//!
//! * the closed-form `a3` display equals exactly twice the scaled pipeline
//!   coefficient; signs and zero sets agree, so either source classifies;
//! * the printed generating coefficients equal twice the `exp(ad_E)`
//!   generators the elimination solves for;
//! * the sextic coefficients `a6..a8` depend on the flattening gauge. Both
//!   routes agree on everything order four and below and on the zero set of
//!   `a3`; degeneracy-ladder questions are answered with the closed form.

pub mod appendix;
pub mod pipeline;

pub use appendix::{
    a3_closed_form, a6_closed_form, eval_generating_coefficients, eval_raw_coefficients, scale,
    t3_degenerate, AppendixParams, GeneratingCoefficients, RawCoefficients, ScaledCoefficients,
};
pub use pipeline::{normalize, NormalFormRun};

use crate::linear::{self, Side};
use crate::model::{FixedPoint, ModelParams};
use crate::polyalg::JetParams;
use crate::GaudinError;
use serde::Serialize;

/// Ratio between the printed `a3`/generating displays and the pipeline
/// convention, determined empirically and pinned by tests.
pub const CLOSED_FORM_A3_RATIO: f64 = 2.0;
pub const GENERATING_RATIO: f64 = 2.0;

/// Which route supplies the coefficients for a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientSource {
    Appendix,
    LieSeries,
}

impl CoefficientSource {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Appendix => "appendix",
            Self::LieSeries => "lie-series",
        }
    }
}

/// Verdict of the fourth/sixth-order test at a threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Supercritical,
    Subcritical,
    Degenerate,
    PossiblyHigherDegenerate,
    NotAtBifurcation,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Supercritical => "supercritical",
            Self::Subcritical => "subcritical",
            Self::Degenerate => "degenerate",
            Self::PossiblyHigherDegenerate => "possibly-higher-degenerate",
            Self::NotAtBifurcation => "not-at-bifurcation",
        }
    }
}

/// Criticality classification at one threshold.
#[derive(Clone, Debug, Serialize)]
pub struct Criticality {
    pub verdict: Verdict,
    pub fixed_point: FixedPoint,
    pub side: Side,
    pub t4_threshold: f64,
    /// Scaled fourth-order coefficient from the selected source (pipeline
    /// normalization; closed forms are divided by their convention ratio).
    pub a3: f64,
    /// Sixth-order coefficient used for the degeneracy test (closed form).
    pub a6: f64,
    /// Pipeline values, recorded for cross-checking.
    pub a3_lie_series: f64,
    pub a6_lie_series: f64,
    pub source: CoefficientSource,
}

/// Zero tolerance for the criticality sign tests in floating mode.
pub const CRITICALITY_TOL: f64 = 1e-9;

/// Maps `(params, fixed point, side)` onto the `m0`-chart plus-side
/// parameters the pipeline and the closed forms are written for: the sphere
/// swap moves `m2` to `m0`, and negating `t3` (a global symplectomorphism)
/// swaps the window sides.
pub fn effective_params(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
) -> Result<ModelParams, GaudinError> {
    let base = match fp {
        FixedPoint::M0 => *params,
        FixedPoint::M2 => params.swap_spheres(),
        other => {
            return Err(GaudinError::domain(
                "normal_form",
                format!("{} has no Hamiltonian Hopf thresholds", other.name()),
            ))
        }
    };
    Ok(match side {
        Side::Plus => base,
        Side::Minus => base.negate_t3(),
    })
}

/// Raw coefficients from the printed closed forms for `(fp, side)` at the
/// current `t4`.
pub fn raw_coefficients_at(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
) -> Result<RawCoefficients<f64>, GaudinError> {
    let eff = effective_params(params, fp, side)?;
    eval_raw_coefficients(&AppendixParams::from_model(&eff))
}

/// Generating coefficients from the printed closed forms for `(fp, side)`.
pub fn generating_coefficients_at(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
) -> Result<GeneratingCoefficients<f64>, GaudinError> {
    let eff = effective_params(params, fp, side)?;
    eval_generating_coefficients(&AppendixParams::from_model(&eff))
}

/// The independent Lie-series normalization for `(fp, side)` at the current
/// `t4` (which should be at or near the matching threshold). `degree` is 4
/// or 6; degree 4 skips the sextic elimination.
pub fn lie_series_normal_form(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
    degree: u32,
) -> Result<NormalFormRun<f64>, GaudinError> {
    if degree != 4 && degree != 6 {
        return Err(GaudinError::domain(
            "lie_series_normal_form",
            format!("normal form degree must be 4 or 6, got {degree}"),
        ));
    }
    let eff = effective_params(params, fp, side)?;
    eff.require_t3_nonzero()?;
    let mut run = normalize(&JetParams::from_model(&eff))?;
    if degree == 4 {
        for i in 5..9 {
            run.raw.a_tilde[i] = 0.0;
            run.scaled.a[i] = 0.0;
        }
        run.generating.f = [0.0; 6];
    }
    Ok(run)
}

/// The threshold `t4` value for `(fp, side)`.
pub fn threshold_t4(params: &ModelParams, fp: FixedPoint, side: Side) -> Result<f64, GaudinError> {
    let th = linear::thresholds(params, fp)?;
    Ok(match side {
        Side::Plus => th.t4_plus,
        Side::Minus => th.t4_minus,
    })
}

/// Classifies the bifurcation at the `(fp, side)` threshold, substituting
/// `t4` by the threshold value.
pub fn classify_criticality(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
    source: CoefficientSource,
) -> Result<Criticality, GaudinError> {
    params.require_t3_nonzero()?;
    let t4 = threshold_t4(params, fp, side)?;
    let at = params.with_t4(t4);

    // a genuine Hopf collision needs a nonvanishing rotation number
    let eff = effective_params(&at, fp, side)?;
    let alpha = linear::alpha_at(&eff, FixedPoint::M0);
    if alpha.abs() < 1e-10 {
        return Ok(Criticality {
            verdict: Verdict::NotAtBifurcation,
            fixed_point: fp,
            side,
            t4_threshold: t4,
            a3: 0.0,
            a6: 0.0,
            a3_lie_series: 0.0,
            a6_lie_series: 0.0,
            source,
        });
    }

    let run = lie_series_normal_form(&at, fp, side, 6)?;
    let a3_pipe = run.scaled.a[2];
    let a6_pipe = run.scaled.a[5];

    let raw = raw_coefficients_at(&at, fp, side)?;
    let scaled = scale(&raw)?;
    let a3_appendix = scaled.a[2];

    let a3 = match source {
        CoefficientSource::LieSeries => a3_pipe,
        CoefficientSource::Appendix => a3_appendix,
    };
    // degeneracy ladder reads the closed form; the pipeline gauge pins its
    // sextic coefficient to a weights-only value on the locus
    let eff_params = effective_params(&at, fp, side)?;
    let a6_closed = a6_closed_form(&AppendixParams::from_model(&eff_params)).unwrap_or(a6_pipe);

    let tol = CRITICALITY_TOL * 1.0f64.max(a6_closed.abs());
    let verdict = if a3.abs() <= tol {
        if a6_closed.abs() > tol {
            Verdict::Degenerate
        } else {
            Verdict::PossiblyHigherDegenerate
        }
    } else if a3 > 0.0 {
        Verdict::Supercritical
    } else {
        Verdict::Subcritical
    };
    Ok(Criticality {
        verdict,
        fixed_point: fp,
        side,
        t4_threshold: t4,
        a3,
        a6: a6_closed,
        a3_lie_series: a3_pipe,
        a6_lie_series: a6_pipe,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> ModelParams {
        ModelParams::new(1.0, 1.0, 1.0, [0.0, -0.5, 0.0, -0.5, 0.0]).unwrap()
    }

    fn fig6() -> ModelParams {
        ModelParams::new(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, 0.0]).unwrap()
    }

    /// Fig. 7 family with the degeneracy locus value verified by the
    /// pipeline: t3 = -3/sqrt(2), threshold at t4+ = -2.
    fn fig7() -> ModelParams {
        let t3 = -3.0 / 2.0_f64.sqrt();
        ModelParams::new(1.0, 2.0, 0.0, [0.5, 0.0, 0.0, t3, 0.0]).unwrap()
    }

    #[test]
    fn fig5_raw_coefficients_match_symbolic_values() {
        // frozen exact values at t4 = -3/4; the sextic entries are the
        // printed ones, which sit in the paper's own flattening gauge
        let p = fig5().with_t4(-0.75);
        let raw = eval_raw_coefficients(&AppendixParams::from_model(&p)).unwrap();
        let expect = [
            0.25,
            0.0,
            1.0 / 16.0,
            0.0,
            -0.125,
            -1.0 / 128.0,
            -1.0 / 64.0,
            -53.0 / 2560.0,
            0.0,
        ];
        assert!((raw.b + 1.0).abs() < 1e-15);
        for (got, want) in raw.a_tilde.iter().zip(expect.iter()) {
            assert!(
                (got - want).abs() < 1e-13,
                "appendix fig5 coefficient {got} vs {want}"
            );
        }
    }

    #[test]
    fn fig5_pipeline_matches_appendix_exactly_where_printed() {
        let p = fig5().with_t4(-0.75);
        let run = lie_series_normal_form(&p, FixedPoint::M0, Side::Plus, 6).unwrap();
        // pipeline raw coefficients at the threshold (frozen from the
        // symbolic derivation): note a6..a8 are gauge-fixed by the pipeline
        let expect = [
            0.25,
            0.0,
            1.0 / 16.0,
            0.0,
            -0.125,
            -1.0 / 64.0,
            0.0,
            -7.0 / 320.0,
            0.0,
        ];
        assert!((run.raw.b + 1.0).abs() < 1e-12);
        for (i, (got, want)) in run.raw.a_tilde.iter().zip(expect.iter()).enumerate() {
            assert!(
                (got - want).abs() < 1e-11,
                "pipeline fig5 a~{} = {got} vs {want}",
                i + 1
            );
        }
        assert!(run.residual < 1e-12);
        assert!(run.odd_degree_residual < 1e-13);
        // generating coefficients (pipeline convention): e = (1/16, 5/32, 0)
        assert!((run.generating.e[0] - 1.0 / 16.0).abs() < 1e-12);
        assert!((run.generating.e[1] - 5.0 / 32.0).abs() < 1e-12);
        assert!(run.generating.e[2].abs() < 1e-12);
        // f = (-9/1280, 0, 25/512, 0, 13/1024, 0)
        let f_expect = [-9.0 / 1280.0, 0.0, 25.0 / 512.0, 0.0, 13.0 / 1024.0, 0.0];
        for (got, want) in run.generating.f.iter().zip(f_expect.iter()) {
            assert!((got - want).abs() < 1e-12, "f {got} vs {want}");
        }
    }

    #[test]
    fn criticality_matches_figure_captions() {
        // Fig. 5: m0 subcritical, m2 supercritical at their plus thresholds
        let c = classify_criticality(&fig5(), FixedPoint::M0, Side::Plus, CoefficientSource::LieSeries)
            .unwrap();
        assert_eq!(c.verdict, Verdict::Subcritical);
        assert!((c.a3 + 1.0 / 16.0).abs() < 1e-11, "a3 = {}", c.a3);
        let c = classify_criticality(&fig5(), FixedPoint::M2, Side::Plus, CoefficientSource::Appendix)
            .unwrap();
        assert_eq!(c.verdict, Verdict::Supercritical);

        // Fig. 6: both subcritical at plus, both supercritical at minus
        for fp in [FixedPoint::M0, FixedPoint::M2] {
            let c =
                classify_criticality(&fig6(), fp, Side::Plus, CoefficientSource::LieSeries).unwrap();
            assert_eq!(c.verdict, Verdict::Subcritical, "{fp:?} plus");
            // frozen: 1/96 - sqrt(2)/32
            assert!((c.a3 - (1.0 / 96.0 - 2.0_f64.sqrt() / 32.0)).abs() < 1e-11);
            let c =
                classify_criticality(&fig6(), fp, Side::Minus, CoefficientSource::LieSeries).unwrap();
            assert_eq!(c.verdict, Verdict::Supercritical, "{fp:?} minus");
            assert!((c.a3 - (1.0 / 96.0 + 2.0_f64.sqrt() / 32.0)).abs() < 1e-11);
        }
    }

    #[test]
    fn fig7_locus_is_degenerate() {
        let c = classify_criticality(&fig7(), FixedPoint::M0, Side::Plus, CoefficientSource::LieSeries)
            .unwrap();
        assert_eq!(c.verdict, Verdict::Degenerate);
        assert!(c.a3.abs() < 1e-10, "a3 = {}", c.a3);
        assert!(c.a6.abs() > 1e-9);
        assert!((c.t4_threshold + 2.0).abs() < 1e-12);
        // pipeline gauge pins a6 on the locus to (R1-R2)^2/(256 (R1 R2)^2)
        assert!((c.a6_lie_series - 1.0 / 1024.0).abs() < 1e-10);
    }

    #[test]
    fn closed_form_a3_carries_the_double_convention() {
        for (p, fp) in [(fig5(), FixedPoint::M0), (fig5(), FixedPoint::M2), (fig6(), FixedPoint::M0)]
        {
            let t4 = threshold_t4(&p, fp, Side::Plus).unwrap();
            let at = p.with_t4(t4);
            let eff = effective_params(&at, fp, Side::Plus).unwrap();
            let closed = a3_closed_form(&AppendixParams::from_model(&eff)).unwrap();
            let run = lie_series_normal_form(&at, fp, Side::Plus, 6).unwrap();
            assert!(
                (closed - CLOSED_FORM_A3_RATIO * run.scaled.a[2]).abs() < 1e-10,
                "closed {closed} vs 2x pipeline {}",
                run.scaled.a[2]
            );
        }
    }

    #[test]
    fn a3_closed_form_simplifies_for_equal_weights() {
        // (t2 - t1)/(8 R t3) for R1 = R2 = R, t0 = 0, w = 1
        let p = fig5();
        let eff = AppendixParams::from_model(&p);
        let a3 = a3_closed_form(&eff).unwrap();
        let expect = (p.t2 - p.t1) / (8.0 * p.r1 * p.t3);
        assert!((a3 - expect).abs() < 1e-14);
    }

    #[test]
    fn t3_degeneracy_locus_examples() {
        // R1=1, R2=2, w=0, t0=1/2: t3* = -3/sqrt(2), threshold t4+ = -2
        let p = ModelParams::new(1.0, 2.0, 0.0, [0.5, 0.0, 0.0, 1.0, 0.0]).unwrap();
        let t3s = t3_degenerate(&AppendixParams::from_model(&p)).unwrap();
        assert!((t3s + 3.0 / 2.0_f64.sqrt()).abs() < 1e-12);
        let equal = ModelParams::new(1.0, 1.0, 0.0, [0.5, 0.0, 0.0, 1.0, 0.0]).unwrap();
        assert!(t3_degenerate(&AppendixParams::from_model(&equal)).is_err());
    }

    #[test]
    fn generating_coefficients_double_the_pipeline_solution() {
        let p = fig5().with_t4(-0.75);
        let gen = generating_coefficients_at(&p, FixedPoint::M0, Side::Plus).unwrap();
        let run = lie_series_normal_form(&p, FixedPoint::M0, Side::Plus, 6).unwrap();
        for (printed, solved) in gen.e.iter().zip(run.generating.e.iter()) {
            assert!(
                (printed - GENERATING_RATIO * solved).abs() < 1e-11,
                "e printed {printed} vs solved {solved}"
            );
        }
    }

    #[test]
    fn a2_vanishes_at_threshold_with_nonzero_t4_slope() {
        let p = fig6();
        let t4 = threshold_t4(&p, FixedPoint::M0, Side::Plus).unwrap();
        let run = lie_series_normal_form(&p.with_t4(t4), FixedPoint::M0, Side::Plus, 6).unwrap();
        assert!(run.scaled.a[1].abs() < 1e-12, "a2 = {}", run.scaled.a[1]);
        let h = 1e-6;
        let above =
            lie_series_normal_form(&p.with_t4(t4 + h), FixedPoint::M0, Side::Plus, 6).unwrap();
        let below =
            lie_series_normal_form(&p.with_t4(t4 - h), FixedPoint::M0, Side::Plus, 6).unwrap();
        let slope = (above.scaled.a[1] - below.scaled.a[1]) / (2.0 * h);
        assert!(slope.abs() > 1e-3, "da2/dt4 = {slope}");
    }

    #[test]
    fn interior_poles_are_rejected() {
        assert!(lie_series_normal_form(&fig5(), FixedPoint::M1, Side::Plus, 6).is_err());
        assert!(classify_criticality(&fig6(), FixedPoint::M3, Side::Plus, CoefficientSource::Appendix)
            .is_err());
    }

    #[test]
    fn degree_argument_is_validated() {
        assert!(lie_series_normal_form(&fig5().with_t4(-0.75), FixedPoint::M0, Side::Plus, 5).is_err());
        let run = lie_series_normal_form(&fig5().with_t4(-0.75), FixedPoint::M0, Side::Plus, 4).unwrap();
        assert_eq!(run.raw.a_tilde[5], 0.0);
    }
}
