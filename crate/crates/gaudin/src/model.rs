//! The generalized coupled angular momenta system on the product of two
//! spheres: parameters, phase points, the two integrals, fixed points, and
//! the reduction to circle-action invariants.

use crate::GaudinError;
use serde::{Deserialize, Serialize};

/// Tolerance used to validate that a point sits on the unit sphere product.
pub const SPHERE_TOL: f64 = 1e-12;
/// Points off the sphere by less than this are renormalized instead of rejected.
pub const SPHERE_RENORM: f64 = 1e-9;

/// The seven reals defining one system: sphere weights `R1, R2 > 0`, the
/// linear strength `w`, and the coupling tuple `t0..t4`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    #[serde(rename = "R1")]
    pub r1: f64,
    #[serde(rename = "R2")]
    pub r2: f64,
    pub w: f64,
    pub t0: f64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
}

impl ModelParams {
    pub fn new(r1: f64, r2: f64, w: f64, t: [f64; 5]) -> Result<Self, GaudinError> {
        if !(r1 > 0.0) || !(r2 > 0.0) {
            return Err(GaudinError::InvalidParams(format!(
                "sphere weights must be positive, got R1={r1}, R2={r2}"
            )));
        }
        Ok(Self { r1, r2, w, t0: t[0], t1: t[1], t2: t[2], t3: t[3], t4: t[4] })
    }

    pub fn validate(&self) -> Result<(), GaudinError> {
        if !(self.r1 > 0.0) || !(self.r2 > 0.0) {
            return Err(GaudinError::InvalidParams(format!(
                "sphere weights must be positive, got R1={}, R2={}",
                self.r1, self.r2
            )));
        }
        Ok(())
    }

    /// Rejects `t3 = 0` for the operations (thresholds, normal forms) whose
    /// formulas divide by it.
    pub fn require_t3_nonzero(&self) -> Result<(), GaudinError> {
        if self.t3 == 0.0 {
            Err(GaudinError::T3Zero)
        } else {
            Ok(())
        }
    }

    pub fn with_t4(&self, t4: f64) -> Self {
        Self { t4, ..*self }
    }

    pub fn sqrt_r1r2(&self) -> f64 {
        (self.r1 * self.r2).sqrt()
    }

    /// The reflection of the second sphere about the z-axis maps this system
    /// to the one with `t3` negated; images and spectra coincide. The minus
    /// side of a bifurcation analysis reduces to the plus side of this system.
    pub fn negate_t3(&self) -> Self {
        Self { t3: -self.t3, ..*self }
    }

    /// Swapping the two spheres exchanges `(R1, t1)` with `(R2, t2)` and maps
    /// the fixed point `m2` to `m0` (and `m1` to itself, `m3` to itself).
    pub fn swap_spheres(&self) -> Self {
        Self { r1: self.r2, r2: self.r1, t1: self.t2, t2: self.t1, ..*self }
    }
}

/// A point of the phase space, two unit vectors stored as
/// `(x1, y1, z1, x2, y2, z2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePoint {
    pub x1: f64,
    pub y1: f64,
    pub z1: f64,
    pub x2: f64,
    pub y2: f64,
    pub z2: f64,
}

impl PhasePoint {
    /// Validates the two sphere constraints; points within `SPHERE_RENORM`
    /// are renormalized (samplers generate points from angles), points
    /// further out are rejected.
    pub fn new(x1: f64, y1: f64, z1: f64, x2: f64, y2: f64, z2: f64) -> Result<Self, GaudinError> {
        let mut pt = Self { x1, y1, z1, x2, y2, z2 };
        for i in [1, 2] {
            let n2 = pt.norm2(i);
            let dev = (n2 - 1.0).abs();
            if dev > SPHERE_RENORM {
                return Err(GaudinError::OffSphere { sphere: i, deviation: dev });
            }
            if dev > SPHERE_TOL {
                let inv = 1.0 / n2.sqrt();
                if i == 1 {
                    pt.x1 *= inv;
                    pt.y1 *= inv;
                    pt.z1 *= inv;
                } else {
                    pt.x2 *= inv;
                    pt.y2 *= inv;
                    pt.z2 *= inv;
                }
            }
        }
        Ok(pt)
    }

    fn norm2(&self, sphere: usize) -> f64 {
        if sphere == 1 {
            self.x1 * self.x1 + self.y1 * self.y1 + self.z1 * self.z1
        } else {
            self.x2 * self.x2 + self.y2 * self.y2 + self.z2 * self.z2
        }
    }

    /// Point from spherical angles `(theta_i, phi_i)` on each factor.
    pub fn from_angles(theta1: f64, phi1: f64, theta2: f64, phi2: f64) -> Self {
        Self {
            x1: theta1.sin() * phi1.cos(),
            y1: theta1.sin() * phi1.sin(),
            z1: theta1.cos(),
            x2: theta2.sin() * phi2.cos(),
            y2: theta2.sin() * phi2.sin(),
            z2: theta2.cos(),
        }
    }
}

/// The four rank-0 singularities, poles of both spheres.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixedPoint {
    M0,
    M1,
    M2,
    M3,
}

impl FixedPoint {
    pub const ALL: [FixedPoint; 4] = [Self::M0, Self::M1, Self::M2, Self::M3];

    /// Signs `(s1, s2)` of `z1, z2` at the point.
    pub fn signs(&self) -> (f64, f64) {
        match self {
            Self::M0 => (1.0, -1.0),
            Self::M1 => (-1.0, -1.0),
            Self::M2 => (-1.0, 1.0),
            Self::M3 => (1.0, 1.0),
        }
    }

    pub fn point(&self) -> PhasePoint {
        let (s1, s2) = self.signs();
        PhasePoint { x1: 0.0, y1: 0.0, z1: s1, x2: 0.0, y2: 0.0, z2: s2 }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::M0 => "m0",
            Self::M1 => "m1",
            Self::M2 => "m2",
            Self::M3 => "m3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "m0" => Some(Self::M0),
            "m1" => Some(Self::M1),
            "m2" => Some(Self::M2),
            "m3" => Some(Self::M3),
            _ => None,
        }
    }
}

/// Spectral-parameter pole locations for the rational and trigonometric
/// specializations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralParams {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl SpectralParams {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self, GaudinError> {
        if lambda1 == lambda2 {
            return Err(GaudinError::InvalidParams(
                "spectral parameters must be distinct".into(),
            ));
        }
        Ok(Self { lambda1, lambda2 })
    }
}

/// Circle-action invariants of a phase point: `j` is the value of the
/// momentum `J`, `K = R1 z1 - R2 z2`, `xi` the inner product of the two unit
/// vectors, and `sigma` the z-component of their cross product.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReducedInvariants {
    pub j: f64,
    #[serde(rename = "K")]
    pub k: f64,
    pub xi: f64,
    pub sigma: f64,
}

/// The momentum `J = R1 z1 + R2 z2`.
pub fn eval_j(params: &ModelParams, pt: &PhasePoint) -> f64 {
    params.r1 * pt.z1 + params.r2 * pt.z2
}

/// The Hamiltonian
/// `t0 (z1+z2)^2 + w (t1 z1 + t2 z2) + t3 (x1 x2 + y1 y2) + t4 z1 z2`.
pub fn eval_h(params: &ModelParams, pt: &PhasePoint) -> f64 {
    let zsum = pt.z1 + pt.z2;
    params.t0 * zsum * zsum
        + params.w * (params.t1 * pt.z1 + params.t2 * pt.z2)
        + params.t3 * (pt.x1 * pt.x2 + pt.y1 * pt.y2)
        + params.t4 * pt.z1 * pt.z2
}

/// Rational specialization: `t0 = 0`, `t3 = t4 = (t1 - t2)/(lambda1 - lambda2)`.
pub fn from_rational(
    w: f64,
    t1: f64,
    t2: f64,
    sp: SpectralParams,
    r1: f64,
    r2: f64,
) -> Result<ModelParams, GaudinError> {
    let c = (t1 - t2) / (sp.lambda1 - sp.lambda2);
    ModelParams::new(r1, r2, w, [0.0, t1, t2, c, c])
}

/// Trigonometric specialization: `w = 0`,
/// `t3 = (t1 - t2)/sin(lambda1 - lambda2)`, `t4 = (t1 - t2) cot(lambda1 - lambda2)`.
pub fn from_trigonometric(
    t0: f64,
    t1: f64,
    t2: f64,
    sp: SpectralParams,
    r1: f64,
    r2: f64,
) -> Result<ModelParams, GaudinError> {
    let d = sp.lambda1 - sp.lambda2;
    let s = d.sin();
    if s == 0.0 || s.abs() < 1e-300 {
        return Err(GaudinError::InvalidParams(format!(
            "sin(lambda1 - lambda2) vanishes for lambda1 - lambda2 = {d}"
        )));
    }
    let t3 = (t1 - t2) / s;
    let t4 = (t1 - t2) * d.cos() / s;
    ModelParams::new(r1, r2, 0.0, [t0, t1, t2, t3, t4])
}

/// Invariants of the circle action at a phase point.
pub fn reduce(params: &ModelParams, pt: &PhasePoint) -> ReducedInvariants {
    ReducedInvariants {
        j: eval_j(params, pt),
        k: params.r1 * pt.z1 - params.r2 * pt.z2,
        xi: pt.x1 * pt.x2 + pt.y1 * pt.y2 + pt.z1 * pt.z2,
        sigma: pt.x1 * pt.y2 - pt.y1 * pt.x2,
    }
}

/// Left minus right side of the relation
/// `sigma^2 + (xi - (j+K)(j-K)/(4 R1 R2))^2
///  = (1 - (j+K)^2/(4 R1^2)) (1 - (j-K)^2/(4 R2^2))`.
pub fn invariants_residual(params: &ModelParams, inv: &ReducedInvariants) -> f64 {
    let zp = inv.j + inv.k;
    let zm = inv.j - inv.k;
    let lhs = inv.sigma * inv.sigma + {
        let d = inv.xi - zp * zm / (4.0 * params.r1 * params.r2);
        d * d
    };
    let rhs = (1.0 - zp * zp / (4.0 * params.r1 * params.r1))
        * (1.0 - zm * zm / (4.0 * params.r2 * params.r2));
    lhs - rhs
}

/// Evaluates the rational Hamiltonian directly from its inner-product form,
/// used as an oracle for the `from_rational` identity.
pub fn eval_h_rational_direct(w: f64, t1: f64, t2: f64, sp: SpectralParams, pt: &PhasePoint) -> f64 {
    let dot = pt.x1 * pt.x2 + pt.y1 * pt.y2 + pt.z1 * pt.z2;
    w * (t1 * pt.z1 + t2 * pt.z2) + (t1 - t2) / (sp.lambda1 - sp.lambda2) * dot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r1: f64, r2: f64, w: f64, t: [f64; 5]) -> ModelParams {
        ModelParams::new(r1, r2, w, t).unwrap()
    }

    #[test]
    fn j_values_at_fixed_points() {
        let p = params(1.0, 2.0, 0.0, [0.0; 5]);
        assert_eq!(eval_j(&p, &FixedPoint::M0.point()), -1.0);
        assert_eq!(eval_j(&p, &FixedPoint::M2.point()), 1.0);
        let eq = PhasePoint::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(eval_j(&p, &eq), 0.0);
    }

    #[test]
    fn h_at_m0_for_the_threshold_configuration() {
        // R1=1, R2=2, w=0, t0=-1/2, t3=1/2, t4=-sqrt(2)/3 gives H(m0)=sqrt(2)/3
        let t4 = -2.0_f64.sqrt() / 3.0;
        let p = params(1.0, 2.0, 0.0, [-0.5, 0.0, 0.0, 0.5, t4]);
        let h = eval_h(&p, &FixedPoint::M0.point());
        assert!((h - 2.0_f64.sqrt() / 3.0).abs() < 1e-15);

        let zero = params(1.0, 1.0, 1.0, [0.0; 5]);
        assert_eq!(eval_h(&zero, &FixedPoint::M3.point()), 0.0);
    }

    #[test]
    fn h_at_m0_is_affine_in_t4() {
        // z1 = 1, z2 = -1 gives H = t0*0 + w(t1 - t2) - t4; Fig. 5 family has
        // w=1, t1=-0.5, t2=0 so H(m0) = -0.5 - t4.
        for t4 in [-2.0, -0.75, 0.3] {
            let p = params(1.0, 1.0, 1.0, [0.0, -0.5, 0.0, -0.5, t4]);
            let h = eval_h(&p, &FixedPoint::M0.point());
            assert!((h - (-0.5 - t4)).abs() < 1e-15);
        }
    }

    #[test]
    fn rational_constructor_matches_printed_identity() {
        let sp = SpectralParams::new(1.0, 0.0).unwrap();
        let p = from_rational(1.0, 1.0, 0.0, sp, 1.0, 1.0).unwrap();
        assert_eq!(p.t3, 1.0);
        assert_eq!(p.t4, 1.0);
        assert_eq!(p.t0, 0.0);

        let p = from_rational(1.0, 2.0, 1.0, SpectralParams::new(3.0, 1.0).unwrap(), 1.0, 1.0)
            .unwrap();
        assert_eq!(p.t3, 0.5);
        assert_eq!(p.t4, 0.5);

        // equal strengths: flagged degenerate downstream, not an error here
        let p = from_rational(1.0, 0.7, 0.7, sp, 1.0, 1.0).unwrap();
        assert_eq!(p.t3, 0.0);
        assert!(p.require_t3_nonzero().is_err());
    }

    #[test]
    fn rational_constructor_rejects_equal_poles() {
        assert!(SpectralParams::new(2.0, 2.0).is_err());
    }

    #[test]
    fn trigonometric_constructor_matches_printed_identities() {
        let sp = SpectralParams::new(std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        let p = from_trigonometric(0.0, 1.0, 0.0, sp, 1.0, 1.0).unwrap();
        assert!((p.t3 - 1.0).abs() < 1e-15);
        assert!(p.t4.abs() < 1e-15);
        assert_eq!(p.w, 0.0);

        let sp = SpectralParams::new(std::f64::consts::FRAC_PI_4, 0.0).unwrap();
        let p = from_trigonometric(0.0, 1.0, 0.0, sp, 1.0, 1.0).unwrap();
        assert!((p.t3 - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((p.t4 - 1.0).abs() < 1e-14);

        let p = from_trigonometric(0.3, 0.5, 0.5, sp, 1.0, 1.0).unwrap();
        assert_eq!(p.t3, 0.0);
        assert_eq!(p.t4, 0.0);
    }

    #[test]
    fn reduce_examples() {
        let p = params(1.0, 2.0, 0.0, [0.0; 5]);
        let inv = reduce(&p, &FixedPoint::M0.point());
        assert_eq!(inv.j, -1.0);
        assert_eq!(inv.k, 3.0);
        assert_eq!(inv.xi, -1.0);
        assert_eq!(inv.sigma, 0.0);

        let parallel = PhasePoint::new(0.6, 0.8, 0.0, 0.6, 0.8, 0.0).unwrap();
        let inv = reduce(&p, &parallel);
        assert!((inv.xi - 1.0).abs() < 1e-15);
        assert_eq!(inv.sigma, 0.0);

        let p11 = params(1.0, 1.0, 0.0, [0.0; 5]);
        let inv = reduce(&p11, &FixedPoint::M1.point());
        assert_eq!(inv.j, -2.0);
        assert_eq!(inv.k, 0.0);
        assert_eq!(inv.xi, 1.0);
    }

    #[test]
    fn invariants_relation_closes_on_sphere_points() {
        let p = params(1.3, 0.7, 0.0, [0.0; 5]);
        let mut worst = 0.0f64;
        for i in 0..100 {
            for j in 0..10 {
                let pt = PhasePoint::from_angles(
                    0.03 + 3.1 * (i as f64) / 100.0,
                    6.28 * (j as f64) / 10.0,
                    2.9 * (i as f64 + 0.4) / 100.0,
                    1.7 + (j as f64),
                );
                worst = worst.max(invariants_residual(&p, &reduce(&p, &pt)).abs());
            }
        }
        assert!(worst <= 1e-10, "worst residual {worst}");
    }

    #[test]
    fn invariants_residual_arithmetic() {
        let p = params(1.0, 1.0, 0.0, [0.0; 5]);
        let on = ReducedInvariants { j: 0.0, k: 0.0, xi: 1.0, sigma: 0.0 };
        assert_eq!(invariants_residual(&p, &on), 0.0);
        let off = ReducedInvariants { j: 0.0, k: 0.0, xi: 0.5, sigma: 0.0 };
        assert_eq!(invariants_residual(&p, &off), -0.75);
    }

    #[test]
    fn off_sphere_points_are_rejected_or_renormalized() {
        assert!(PhasePoint::new(1.1, 0.0, 0.0, 0.0, 0.0, 1.0).is_err());
        let nearly = PhasePoint::new(1.0 + 3e-10, 0.0, 0.0, 0.0, 0.0, 1.0).unwrap();
        assert!((nearly.x1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rational_identity_under_evaluation() {
        let sp = SpectralParams::new(0.9, -0.3).unwrap();
        let p = from_rational(1.0, 0.8, -0.2, sp, 1.0, 1.0).unwrap();
        for i in 0..100 {
            let pt = PhasePoint::from_angles(
                0.01 + 3.1 * (i as f64) / 100.0,
                2.1 * (i as f64),
                3.1 - 3.0 * (i as f64) / 100.0,
                0.3 + 0.7 * (i as f64),
            );
            let a = eval_h(&p, &pt);
            let b = eval_h_rational_direct(1.0, 0.8, -0.2, sp, &pt);
            assert!((a - b).abs() < 1e-13, "mismatch {a} vs {b}");
        }
    }
}
