//! Linearization at the rank-0 points, eigenvalue classification, the
//! closed-form bifurcation thresholds, the Burgoyne-Cushman symplectic
//! normalization, and the transversal unfolding of the eigenvalue collision.

use crate::model::{FixedPoint, ModelParams};
use crate::scalar::{Rat, Scalar};
use crate::GaudinError;
use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use serde::Serialize;

/// Relative tolerance for deciding that an eigenvalue part vanishes.
pub const CLASSIFY_TOL: f64 = 1e-9;

/// 4x4 linearization of the Hamiltonian vector field in the tangent basis
/// `(x1, y1, x2, y2)` at a fixed point.
#[derive(Clone, Debug)]
pub struct LinearizationMatrix {
    pub matrix: Matrix4<f64>,
    /// Matrix of the symplectic form at the point, in the same basis.
    pub omega: Matrix4<f64>,
    pub fixed_point: FixedPoint,
}

/// Williamson-type class of a rank-0 point of the integrable system. The
/// class is decided by a generic combination of the two integrals, which is
/// what excludes the hyperbolic-hyperbolic case in the presence of the
/// circle action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EigenClass {
    EllipticElliptic,
    FocusFocus,
    EllipticHyperbolic,
    HyperbolicHyperbolic,
    DegenerateCollision,
}

impl EigenClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::EllipticElliptic => "elliptic-elliptic",
            Self::FocusFocus => "focus-focus",
            Self::EllipticHyperbolic => "elliptic-hyperbolic",
            Self::HyperbolicHyperbolic => "hyperbolic-hyperbolic",
            Self::DegenerateCollision => "degenerate-collision",
        }
    }
}

/// Classification result at one fixed point.
#[derive(Clone, Debug)]
pub struct EigenClassification {
    pub class: EigenClass,
    /// Spectrum of the linearized Hamiltonian vector field of `H` itself.
    pub eigenvalues: [Complex64; 4],
}

/// Bifurcation thresholds in `t4` at `m0` or `m2`.
#[derive(Clone, Debug, Serialize)]
pub struct Thresholds {
    pub fixed_point: FixedPoint,
    pub t4_minus: f64,
    pub t4_plus: f64,
    /// Whether a focus-focus window is certified by the printed sufficient
    /// conditions (nonvanishing rotation at the thresholds).
    pub window_realized: bool,
}

/// Block data of the linearization: `A` acts on `w_k = x_k + i y_k` as
/// `-i B` with `B = [[u1, b1], [b2, u2]]`.
#[derive(Clone, Copy, Debug)]
struct ComplexBlocks {
    u1: f64,
    u2: f64,
    b1: f64,
    b2: f64,
}

fn blocks(params: &ModelParams, fp: FixedPoint) -> ComplexBlocks {
    let (s1, s2) = fp.signs();
    let h1 = -params.t0 * (1.0 + s1 * s2) - (params.w * params.t1 * s1 + params.t4 * s1 * s2) / 2.0;
    let h2 = -params.t0 * (1.0 + s1 * s2) - (params.w * params.t2 * s2 + params.t4 * s1 * s2) / 2.0;
    ComplexBlocks {
        u1: -2.0 * h1 / (s1 * params.r1),
        u2: -2.0 * h2 / (s2 * params.r2),
        b1: -params.t3 / (s1 * params.r1),
        b2: -params.t3 / (s2 * params.r2),
    }
}

/// Linearization of `X_H` at a fixed point, together with the symplectic
/// matrix there. Entries reproduce the printed display in the `m0` chart and
/// the sign-adapted charts at the other poles.
pub fn linearize_at(params: &ModelParams, fp: FixedPoint) -> LinearizationMatrix {
    let b = blocks(params, fp);
    let matrix = Matrix4::new(
        0.0, b.u1, 0.0, b.b1, //
        -b.u1, 0.0, -b.b1, 0.0, //
        0.0, b.b2, 0.0, b.u2, //
        -b.b2, 0.0, -b.u2, 0.0,
    );
    let (s1, s2) = fp.signs();
    let (a1, a2) = (s1 * params.r1, s2 * params.r2);
    let omega = Matrix4::new(
        0.0, a1, 0.0, 0.0, //
        -a1, 0.0, 0.0, 0.0, //
        0.0, 0.0, 0.0, a2, //
        0.0, 0.0, -a2, 0.0,
    );
    LinearizationMatrix { matrix, omega, fixed_point: fp }
}

/// Spectrum of the linearization, from the complex 2x2 reduction.
pub fn spectrum(params: &ModelParams, fp: FixedPoint) -> [Complex64; 4] {
    let b = blocks(params, fp);
    let tr = Complex64::new(b.u1 + b.u2, 0.0);
    let disc = Complex64::new((b.u1 - b.u2) * (b.u1 - b.u2) + 4.0 * b.b1 * b.b2, 0.0);
    let root = disc.sqrt();
    let mu1 = (tr + root) / 2.0;
    let mu2 = (tr - root) / 2.0;
    let i = Complex64::new(0.0, 1.0);
    [-i * mu1, -i * mu2, i * mu1.conj(), i * mu2.conj()]
}

/// Classifies a rank-0 point. The discriminant of the complex reduction
/// decides the type of a generic combination of the integrals: negative
/// means focus-focus, positive elliptic-elliptic, zero the eigenvalue
/// collision.
pub fn classify(params: &ModelParams, fp: FixedPoint) -> EigenClassification {
    let b = blocks(params, fp);
    let disc = (b.u1 - b.u2) * (b.u1 - b.u2) + 4.0 * b.b1 * b.b2;
    let scale = b.u1.abs().max(b.u2.abs()).max(b.b1.abs()).max(b.b2.abs()).max(1e-300);
    let eigenvalues = spectrum(params, fp);
    let class = if disc.abs() <= CLASSIFY_TOL * scale * scale {
        EigenClass::DegenerateCollision
    } else if disc > 0.0 {
        EigenClass::EllipticElliptic
    } else {
        EigenClass::FocusFocus
    };
    EigenClassification { class, eigenvalues }
}

/// Closed-form thresholds `t4^{+-}` at `m0` or `m2`; rejects `t3 = 0` and
/// the two interior poles, which have no Hopf thresholds.
pub fn thresholds(params: &ModelParams, fp: FixedPoint) -> Result<Thresholds, GaudinError> {
    params.require_t3_nonzero()?;
    let sgn = match fp {
        FixedPoint::M0 => 1.0,
        FixedPoint::M2 => -1.0,
        _ => {
            return Err(GaudinError::domain(
                "thresholds",
                format!("{} has no Hamiltonian Hopf thresholds", fp.name()),
            ))
        }
    };
    let g = params.sqrt_r1r2();
    let base = sgn * params.w * (params.t1 * params.r2 - params.t2 * params.r1);
    let span = 2.0 * params.t3 * g;
    let denom = params.r1 + params.r2;
    let window_realized = (params.r1 == params.r2
        && params.w != 0.0
        && params.t1 + params.t2 != 0.0)
        || ((params.r1 - params.r2) * params.t3 > (params.w * (params.t1 + params.t2) * g).abs());
    Ok(Thresholds {
        fixed_point: fp,
        t4_minus: (base - span) / denom,
        t4_plus: (base + span) / denom,
        window_realized,
    })
}

/// Exact-rational thresholds, available when `sqrt(R1 R2)` is rational.
#[allow(clippy::too_many_arguments)]
pub fn thresholds_exact(
    r1: &Rat,
    r2: &Rat,
    sqrt_r1r2: &Rat,
    w: &Rat,
    t1: &Rat,
    t2: &Rat,
    t3: &Rat,
    fp: FixedPoint,
) -> Result<(Rat, Rat), GaudinError> {
    if t3.is_zero() {
        return Err(GaudinError::T3Zero);
    }
    let sgn = match fp {
        FixedPoint::M0 => Rat::one(),
        FixedPoint::M2 => -Rat::one(),
        _ => {
            return Err(GaudinError::domain(
                "thresholds",
                format!("{} has no Hamiltonian Hopf thresholds", fp.name()),
            ))
        }
    };
    let base = sgn * w.clone() * (t1.clone() * r2.clone() - t2.clone() * r1.clone());
    let span = Rat::from_int(2) * t3.clone() * sqrt_r1r2.clone();
    let denom = r1.clone() + r2.clone();
    Ok(((base.clone() - span.clone()) / denom.clone(), (base + span) / denom))
}

/// The rotation number `alpha` at a parameter value: half the trace of the
/// complex block. At a threshold the characteristic polynomial collapses to
/// `(x^2 + alpha^2)^2`.
pub fn alpha_at(params: &ModelParams, fp: FixedPoint) -> f64 {
    let b = blocks(params, fp);
    (b.u1 + b.u2) / 2.0
}

/// Burgoyne-Cushman decomposition of the linearization at a threshold.
#[derive(Clone, Debug)]
pub struct BCDecomposition {
    pub alpha: f64,
    pub s_part: Matrix4<f64>,
    pub n_part: Matrix4<f64>,
    pub a: Matrix4<f64>,
    pub omega: Matrix4<f64>,
    pub beta: f64,
    pub fixed_point: FixedPoint,
}

/// Jordan-Chevalley splitting via the Burgoyne-Cushman series (the `m = 2`
/// case): `S = A (1 + binom(2,1) p(A)/(4 alpha^2))` with `p(A) = A^2 +
/// alpha^2`, the factor whose square is the characteristic polynomial. `p(A)`
/// squares to zero while `p(A)` itself does not, which is the `m = 2` the
/// series needs.
pub fn jordan_chevalley(
    lin: &LinearizationMatrix,
    alpha: f64,
    params: &ModelParams,
) -> Result<BCDecomposition, GaudinError> {
    let a = lin.matrix;
    let a2 = a * a;
    let tr = -a2.trace() / 2.0;
    let det = a.determinant();
    let scale = a.norm().max(1.0);
    let dist = (tr - 2.0 * alpha * alpha)
        .abs()
        .max((det - alpha.powi(4)).abs());
    if dist > 1e-8 * scale * scale {
        return Err(GaudinError::NotAtThreshold(dist));
    }
    if alpha.abs() < 1e-12 {
        return Err(GaudinError::domain(
            "jordan_chevalley",
            "vanishing rotation number: collision is not of Hopf type",
        ));
    }
    let id = Matrix4::identity();
    let p = a2 + id * (alpha * alpha);
    let s_part = a * (id + p * (2.0 / (4.0 * alpha * alpha)));
    let n_part = a - s_part;
    let beta = 0.5 * (params.r1 * params.r2 * params.t3 * params.t3).powf(-0.25);
    Ok(BCDecomposition {
        alpha,
        s_part,
        n_part,
        a,
        omega: lin.omega,
        beta,
        fixed_point: lin.fixed_point,
    })
}

/// Symplectic basis from the Burgoyne-Cushman search, as the column matrix
/// `P = (f, Sf/alpha, Nf, SNf/alpha)`, together with the pairing sign
/// `epsilon = omega(f, Nf)`.
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    pub p: Matrix4<f64>,
    pub epsilon: f64,
    /// `P^{-1} A P`, which matches the normal-form template.
    pub conjugated: Matrix4<f64>,
}

fn omega_pair(omega: &Matrix4<f64>, x: &Vector4<f64>, y: &Vector4<f64>) -> f64 {
    (x.transpose() * omega * y)[(0, 0)]
}

/// Builds the symplectic basis from the seed `e = beta (sqrt R2, 0, sqrt R1, 0)`,
/// falling back to its sign-adapted companions when the seed lands in the
/// kernel of `N` (which happens on the other window side, where the
/// quadratic roles swap). The seed is rescaled so the pairing has unit size.
pub fn symplectic_basis(
    dec: &BCDecomposition,
    params: &ModelParams,
) -> Result<SymplecticBasis, GaudinError> {
    let (sr1, sr2) = (params.r1.sqrt(), params.r2.sqrt());
    let candidates = [
        Vector4::new(sr2, 0.0, sr1, 0.0),
        Vector4::new(sr2, 0.0, -sr1, 0.0),
        Vector4::new(0.0, sr2, 0.0, sr1),
        Vector4::new(0.0, sr2, 0.0, -sr1),
    ];
    let s = dec.s_part;
    let n = dec.n_part;
    let mut seed = None;
    let mut best_pairing = 0.0f64;
    for cand in candidates {
        let e = cand * dec.beta;
        let pairing = omega_pair(&dec.omega, &e, &(n * e));
        if pairing.abs() > best_pairing {
            best_pairing = pairing.abs();
        }
        if pairing.abs() >= 1e-12 {
            seed = Some(e / pairing.abs().sqrt());
            break;
        }
    }
    let e = seed.ok_or(GaudinError::DegeneratePairing(best_pairing))?;
    let ne = n * e;
    let pairing = omega_pair(&dec.omega, &e, &ne);
    let epsilon = pairing.signum();
    // f = e + omega(e, Se) NSe / (2 alpha^2); the correction vanishes for
    // this seed but is kept as the algorithm states it
    let se = s * e;
    let corr = n * se * (omega_pair(&dec.omega, &e, &se) / (2.0 * dec.alpha * dec.alpha));
    let f = e + corr;
    let sf = s * f / dec.alpha;
    let nf = n * f;
    let snf = s * nf / dec.alpha;
    let p = Matrix4::from_columns(&[f, sf, nf, snf]);
    let inv = p
        .try_inverse()
        .ok_or_else(|| GaudinError::DegeneratePairing(p.determinant().abs()))?;
    let conjugated = inv * dec.a * p;
    Ok(SymplecticBasis { p, epsilon, conjugated })
}

/// The normal-form template the conjugated matrix must match:
/// `[[0, -a, 0, 0], [a, 0, 0, 0], [1, 0, 0, -a], [0, 1, a, 0]]`.
pub fn normal_form_template(alpha: f64) -> Matrix4<f64> {
    Matrix4::new(
        0.0, -alpha, 0.0, 0.0, //
        alpha, 0.0, 0.0, 0.0, //
        1.0, 0.0, 0.0, -alpha, //
        0.0, 1.0, alpha, 0.0,
    )
}

/// Side of the `t4` window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Plus => "plus",
            Self::Minus => "minus",
        }
    }
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "plus" | "+" => Some(Self::Plus),
            "minus" | "-" => Some(Self::Minus),
            _ => None,
        }
    }
}

/// Unfolding data of the eigenvalue collision at one threshold.
#[derive(Clone, Debug, Serialize)]
pub struct Unfolding {
    pub fixed_point: FixedPoint,
    pub side: Side,
    pub t4_threshold: f64,
    /// Rotation number at the threshold.
    pub rho: f64,
    /// Pairing sign of the nilpotent part.
    pub sigma_sign: f64,
    /// Closed-form derivative `-t3 (R1+R2)/(R1 R2)^{3/2}` of the detuning.
    pub dnu2_dt4_closed: f64,
    /// Central finite difference of the coefficient-matched detuning.
    pub dnu2_dt4_numeric: f64,
}

/// Coefficient-matched unfolding functions at a parameter value. The
/// characteristic polynomial `x^4 + c1 x^2 + c2` of the actual linearization
/// is matched against the unfolded normal form
/// `x^4 + 2((a+nu1)^2 - nu2) x^2 + ((a+nu1)^2 + nu2)^2`; of the four
/// solutions the one with minimal `|nu1| + |nu2|` vanishes at the threshold.
/// In the minus-side frame the quadratic roles swap, flipping the detuning
/// sign.
pub fn unfolding_values(
    params: &ModelParams,
    fp: FixedPoint,
    side: Side,
    t4: f64,
    alpha_thr: f64,
) -> Result<(f64, f64), GaudinError> {
    let p = params.with_t4(t4);
    let lin = linearize_at(&p, fp);
    let a = lin.matrix;
    let c1 = -(a * a).trace() / 2.0;
    let c2 = a.determinant();
    let root = c2.max(0.0).sqrt();
    let mut best: Option<(f64, f64, f64)> = None;
    for root_sign in [1.0, -1.0] {
        let lhs = root_sign * root; // (alpha + nu1)^2 + nu2
        let rhs = c1 / 2.0; // (alpha + nu1)^2 - nu2
        let asq = (lhs + rhs) / 2.0;
        let nu2 = (lhs - rhs) / 2.0;
        if asq < -1e-12 {
            continue;
        }
        for nu1_sign in [1.0, -1.0] {
            let nu1 = nu1_sign * asq.max(0.0).sqrt() - alpha_thr;
            let score = nu1.abs() + nu2.abs();
            if best.map_or(true, |(s, _, _)| score < s) {
                best = Some((score, nu1, nu2));
            }
        }
    }
    let (_, nu1, nu2) = best.ok_or(GaudinError::NoVanishingBranch(f64::INFINITY))?;
    let nu2 = match side {
        Side::Plus => nu2,
        Side::Minus => -nu2,
    };
    Ok((nu1, nu2))
}

/// Full unfolding at a threshold, with the transversality derivative both in
/// closed form and by central differences of the coefficient matching.
pub fn unfolding(params: &ModelParams, fp: FixedPoint, side: Side) -> Result<Unfolding, GaudinError> {
    params.require_t3_nonzero()?;
    let th = thresholds(params, fp)?;
    let t4 = match side {
        Side::Plus => th.t4_plus,
        Side::Minus => th.t4_minus,
    };
    let at = params.with_t4(t4);
    let alpha_thr = alpha_at(&at, fp);
    let (nu1_0, nu2_0) = unfolding_values(params, fp, side, t4, alpha_thr)?;
    if nu1_0.abs() > 1e-8 || nu2_0.abs() > 1e-8 {
        return Err(GaudinError::NoVanishingBranch(nu1_0.abs() + nu2_0.abs()));
    }
    let h = 1e-6;
    let (_, nu2_p) = unfolding_values(params, fp, side, t4 + h, alpha_thr)?;
    let (_, nu2_m) = unfolding_values(params, fp, side, t4 - h, alpha_thr)?;
    let dnu2_numeric = (nu2_p - nu2_m) / (2.0 * h);
    let dnu2_closed = -params.t3 * (params.r1 + params.r2) / (params.r1 * params.r2).powf(1.5);
    let lin = linearize_at(&at, fp);
    let dec = jordan_chevalley(&lin, alpha_thr, &at)?;
    let basis = symplectic_basis(&dec, &at)?;
    Ok(Unfolding {
        fixed_point: fp,
        side,
        t4_threshold: t4,
        rho: alpha_thr,
        sigma_sign: basis.epsilon,
        dnu2_dt4_closed: dnu2_closed,
        dnu2_dt4_numeric: dnu2_numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1b() -> ModelParams {
        ModelParams::new(1.0, 1.0, 1.0, [0.0, 0.5, 0.0, 0.5, 0.5]).unwrap()
    }

    fn fig5() -> ModelParams {
        ModelParams::new(1.0, 1.0, 1.0, [0.0, -0.5, 0.0, -0.5, 0.0]).unwrap()
    }

    fn fig6() -> ModelParams {
        ModelParams::new(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, 0.0]).unwrap()
    }

    #[test]
    fn linearization_matches_printed_matrix() {
        let lin = linearize_at(&fig1b(), FixedPoint::M0);
        let expect = Matrix4::new(
            0.0, 0.0, 0.0, -0.5, //
            0.0, 0.0, 0.5, 0.0, //
            0.0, 0.5, 0.0, 0.5, //
            -0.5, 0.0, -0.5, 0.0,
        );
        assert!((lin.matrix - expect).norm() < 1e-14);
    }

    #[test]
    fn entry_vanishes_when_t4_equals_w_t1() {
        let p = ModelParams::new(1.0, 1.0, 1.0, [0.0, 0.5, 0.3, 0.2, 0.5]).unwrap();
        let lin = linearize_at(&p, FixedPoint::M0);
        assert_eq!(lin.matrix[(0, 1)], 0.0);
    }

    #[test]
    fn linearization_is_infinitesimally_symplectic() {
        for (r1, r2, w, t) in [
            (1.0, 2.0, 1.0, [0.3, -0.4, 0.8, 1.1, -0.2]),
            (0.7, 1.9, 0.0, [-0.5, 0.0, 0.0, 0.5, 0.25]),
        ] {
            let p = ModelParams::new(r1, r2, w, t).unwrap();
            for fp in FixedPoint::ALL {
                let lin = linearize_at(&p, fp);
                assert!(lin.matrix.trace().abs() < 1e-14);
                let oa = lin.omega * lin.matrix;
                assert!((oa - oa.transpose()).norm() < 1e-12, "Omega*A not symmetric");
            }
        }
    }

    #[test]
    fn linearization_matches_finite_difference_hessian() {
        let p = ModelParams::new(1.3, 0.8, 1.0, [0.2, 0.4, -0.3, 0.6, -0.7]).unwrap();
        let h = 1e-5;
        for fp in FixedPoint::ALL {
            let (s1, s2) = fp.signs();
            let eval = |v: [f64; 4]| {
                let z1 = s1 * (1.0 - v[0] * v[0] - v[1] * v[1]).sqrt();
                let z2 = s2 * (1.0 - v[2] * v[2] - v[3] * v[3]).sqrt();
                let zsum = z1 + z2;
                p.t0 * zsum * zsum
                    + p.w * (p.t1 * z1 + p.t2 * z2)
                    + p.t3 * (v[0] * v[2] + v[1] * v[3])
                    + p.t4 * z1 * z2
            };
            let mut hess = Matrix4::zeros();
            for i in 0..4 {
                for j in 0..4 {
                    let f = |di: f64, dj: f64| {
                        let mut v = [0.0f64; 4];
                        v[i] += di * h;
                        v[j] += dj * h;
                        eval(v)
                    };
                    hess[(i, j)] =
                        (f(1.0, 1.0) - f(1.0, -1.0) - f(-1.0, 1.0) + f(-1.0, -1.0)) / (4.0 * h * h);
                }
            }
            let lin = linearize_at(&p, fp);
            let a_fd = lin.omega.try_inverse().unwrap() * hess;
            assert!(
                (a_fd - lin.matrix).norm() < 1e-5,
                "{fp:?}: {}",
                (a_fd - lin.matrix).norm()
            );
        }
    }

    #[test]
    fn classification_at_figure_parameters() {
        let p = fig1b();
        assert_eq!(classify(&p, FixedPoint::M0).class, EigenClass::FocusFocus);
        assert_eq!(classify(&p, FixedPoint::M1).class, EigenClass::EllipticElliptic);
        assert_eq!(classify(&p, FixedPoint::M3).class, EigenClass::EllipticElliptic);
        let th = thresholds(&p, FixedPoint::M0).unwrap();
        let at = p.with_t4(th.t4_plus);
        assert_eq!(classify(&at, FixedPoint::M0).class, EigenClass::DegenerateCollision);
    }

    #[test]
    fn spectrum_comes_in_plus_minus_pairs() {
        let p = ModelParams::new(1.1, 2.3, 1.0, [0.13, -0.5, 0.4, 0.7, 0.2]).unwrap();
        for fp in FixedPoint::ALL {
            let eig = spectrum(&p, fp);
            let radius = eig.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-12);
            for z in eig {
                let has_negative = eig.iter().any(|v| (v + z).norm() < 1e-9 * radius);
                assert!(has_negative, "{fp:?}: spectrum not symmetric: {eig:?}");
            }
        }
    }

    #[test]
    fn thresholds_match_figure_captions() {
        let p5 = fig5();
        let m0 = thresholds(&p5, FixedPoint::M0).unwrap();
        assert!((m0.t4_plus + 0.75).abs() < 1e-15);
        let m2 = thresholds(&p5, FixedPoint::M2).unwrap();
        assert!((m2.t4_plus + 0.25).abs() < 1e-15);

        let p6 = fig6();
        let m0 = thresholds(&p6, FixedPoint::M0).unwrap();
        let expect = 2.0_f64.sqrt() / 3.0;
        assert!((m0.t4_plus - expect).abs() < 1e-12);
        assert!((m0.t4_minus + expect).abs() < 1e-12);
        let m2 = thresholds(&p6, FixedPoint::M2).unwrap();
        assert!((m2.t4_plus - expect).abs() < 1e-12);

        assert!(thresholds(&p5, FixedPoint::M1).is_err());
        let mut no_t3 = p5;
        no_t3.t3 = 0.0;
        assert!(matches!(thresholds(&no_t3, FixedPoint::M0), Err(GaudinError::T3Zero)));
    }

    #[test]
    fn exact_thresholds_for_fig5() {
        let one = Rat::from_int(1);
        let (minus, plus) = thresholds_exact(
            &one,
            &one,
            &one,
            &one,
            &Rat::ratio(-1, 2),
            &Rat::from_int(0),
            &Rat::ratio(-1, 2),
            FixedPoint::M0,
        )
        .unwrap();
        assert_eq!(plus, Rat::ratio(-3, 4));
        assert_eq!(minus, Rat::ratio(1, 4));
    }

    #[test]
    fn burgoyne_cushman_at_fig6_threshold() {
        let p = fig6();
        let th = thresholds(&p, FixedPoint::M0).unwrap();
        let at = p.with_t4(th.t4_plus);
        let alpha = alpha_at(&at, FixedPoint::M0);
        let lin = linearize_at(&at, FixedPoint::M0);
        let dec = jordan_chevalley(&lin, alpha, &at).unwrap();
        assert!((dec.s_part + dec.n_part - dec.a).norm() < 1e-14);
        assert!((dec.n_part * dec.n_part).norm() < 1e-10, "N^2 != 0");
        assert!((dec.s_part * dec.n_part - dec.n_part * dec.s_part).norm() < 1e-10);
        let s2 = dec.s_part * dec.s_part;
        assert!((s2 + Matrix4::identity() * (alpha * alpha)).norm() < 1e-10);

        let basis = symplectic_basis(&dec, &at).unwrap();
        let template = normal_form_template(alpha);
        assert!(
            (basis.conjugated - template).norm() < 1e-10,
            "conjugated {} vs {}",
            basis.conjugated,
            template
        );
        let cols: Vec<Vector4<f64>> = (0..4).map(|i| basis.p.column(i).into_owned()).collect();
        let pairing = |i: usize, j: usize| omega_pair(&dec.omega, &cols[i], &cols[j]);
        assert!((pairing(0, 2) - basis.epsilon).abs() < 1e-10);
        assert!((pairing(1, 3) - basis.epsilon).abs() < 1e-10);
        for (i, j) in [(0, 1), (0, 3), (1, 2), (2, 3)] {
            assert!(pairing(i, j).abs() < 1e-10, "pairing({i},{j}) = {}", pairing(i, j));
        }
        // t3 > 0 on the plus side carries the +1 pairing of the printed proof
        assert_eq!(basis.epsilon, 1.0);
    }

    #[test]
    fn semisimple_part_is_block_rotation_for_equal_weights() {
        let p = fig5();
        let th = thresholds(&p, FixedPoint::M0).unwrap();
        let at = p.with_t4(th.t4_plus);
        let alpha = alpha_at(&at, FixedPoint::M0);
        let lin = linearize_at(&at, FixedPoint::M0);
        let dec = jordan_chevalley(&lin, alpha, &at).unwrap();
        let expect = Matrix4::new(
            0.0, alpha, 0.0, 0.0, //
            -alpha, 0.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, alpha, //
            0.0, 0.0, -alpha, 0.0,
        );
        assert!((dec.s_part - expect).norm() < 1e-12);
    }

    #[test]
    fn jordan_chevalley_rejects_off_threshold_points() {
        let p = fig6().with_t4(0.1);
        let lin = linearize_at(&p, FixedPoint::M0);
        let alpha = alpha_at(&p, FixedPoint::M0);
        assert!(matches!(
            jordan_chevalley(&lin, alpha, &p),
            Err(GaudinError::NotAtThreshold(_))
        ));
    }

    #[test]
    fn unfolding_transversality() {
        // Fig. 5: -t3 (R1+R2)/(R1 R2)^{3/2} = -(-0.5)(2)/1 = 1
        let u = unfolding(&fig5(), FixedPoint::M0, Side::Plus).unwrap();
        assert!((u.dnu2_dt4_closed - 1.0).abs() < 1e-14);
        assert!((u.dnu2_dt4_numeric - u.dnu2_dt4_closed).abs() < 1e-6);

        // Fig. 6: -0.5 * 3 / 2^{3/2}
        let u = unfolding(&fig6(), FixedPoint::M0, Side::Plus).unwrap();
        let expect = -0.5 * 3.0 / 2.0_f64.powf(1.5);
        assert!((u.dnu2_dt4_closed - expect).abs() < 1e-14);
        assert!((u.dnu2_dt4_numeric - expect).abs() < 1e-6);

        // minus side carries the same closed form in the swapped frame
        let u = unfolding(&fig6(), FixedPoint::M0, Side::Minus).unwrap();
        assert!((u.dnu2_dt4_numeric - u.dnu2_dt4_closed).abs() < 1e-6);
    }

    #[test]
    fn beta_matches_printed_value() {
        // beta = (R1 R2 t3^2)^{-1/4}/2 for R1=1, R2=2, t3=0.5
        let beta = 0.5 * (1.0 * 2.0 * 0.25f64).powf(-0.25);
        assert!((beta - 0.5946035575013605).abs() < 1e-12);
    }
}
