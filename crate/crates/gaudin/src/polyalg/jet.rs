//! Taylor jets of the Gaudin system in the Darboux-adapted chart at a pole
//! pair, and the flattening of the symplectic form by Lie flows.

use super::forms::{
    d_scalar, exterior_derivative_two, interior_product, PolyOneForm,
    PolyTwoForm, PolyVectorField,
};
use super::hilbert::hilbert_generators;
use super::poly::TruncatedPolynomial;
use crate::scalar::Scalar;
use crate::GaudinError;

/// Working degree cap: order 6 is needed, 2 degrees of slack keep
/// intermediate products from silently losing order.
pub const JET_DEGREE: u32 = 8;

/// Model parameters lifted to a generic coefficient field, with the square
/// root of `R1 R2` supplied explicitly (it must exist in the field).
#[derive(Clone, Debug)]
pub struct JetParams<S> {
    pub r1: S,
    pub r2: S,
    pub w: S,
    pub t0: S,
    pub t1: S,
    pub t2: S,
    pub t3: S,
    pub t4: S,
    pub sqrt_r1r2: S,
}

impl JetParams<f64> {
    pub fn from_model(p: &crate::model::ModelParams) -> Self {
        Self {
            r1: p.r1,
            r2: p.r2,
            w: p.w,
            t0: p.t0,
            t1: p.t1,
            t2: p.t2,
            t3: p.t3,
            t4: p.t4,
            sqrt_r1r2: (p.r1 * p.r2).sqrt(),
        }
    }
}

/// Jets of the symplectic form, the Hamiltonian, and the momentum at the
/// fixed point `m0`, in canonical coordinates.
#[derive(Clone, Debug)]
pub struct GaudinJets<S> {
    /// Full jet of the symplectic form (graded degrees 0, 2, 4, 6).
    pub omega: PolyTwoForm<S>,
    /// Taylor series of the Hamiltonian, constant term dropped (degrees 2, 4, 6, 8).
    pub hamiltonian: TruncatedPolynomial<S>,
    /// Taylor series of the momentum, constant term dropped.
    pub momentum: TruncatedPolynomial<S>,
}

/// `sqrt(1 - u)` as a series in a small polynomial `u`, to coefficient
/// degree 8 (`u` has degree 2).
fn sqrt_one_minus<S: Scalar>(u: &TruncatedPolynomial<S>) -> TruncatedPolynomial<S> {
    let md = u.max_degree();
    let one = TruncatedPolynomial::constant(S::one(), md);
    let u2 = u.mul(u);
    let u3 = u2.mul(u);
    let u4 = u2.mul(&u2);
    one.sub(&u.scale(&S::ratio(1, 2)))
        .sub(&u2.scale(&S::ratio(1, 8)))
        .sub(&u3.scale(&S::ratio(1, 16)))
        .sub(&u4.scale(&S::ratio(5, 128)))
}

/// `1/sqrt(1 - u)` as a series, to coefficient degree 8.
fn inv_sqrt_one_minus<S: Scalar>(u: &TruncatedPolynomial<S>) -> TruncatedPolynomial<S> {
    let md = u.max_degree();
    let one = TruncatedPolynomial::constant(S::one(), md);
    let u2 = u.mul(u);
    let u3 = u2.mul(u);
    let u4 = u2.mul(&u2);
    one.add(&u.scale(&S::ratio(1, 2)))
        .add(&u2.scale(&S::ratio(3, 8)))
        .add(&u3.scale(&S::ratio(5, 16)))
        .add(&u4.scale(&S::ratio(35, 128)))
}

/// Builds the jets of `omega`, `H`, and `J` at `m0` in the canonical
/// coordinates of the symplectic chart. Other fixed points and the minus
/// side reduce to this chart by the sphere-swap and `t3`-negation parameter
/// maps.
pub fn gaudin_jets<S: Scalar>(p: &JetParams<S>) -> GaudinJets<S> {
    let md = JET_DEGREE;
    let gens = hilbert_generators::<S>(md);
    // x1^2 + y1^2 = (M + N + S)/R1 and x2^2 + y2^2 = (M + N - S)/R2
    let mns = gens.m.add(&gens.n);
    let u_plus = mns.add(&gens.s).scale(&(S::one() / p.r1.clone()));
    let u_minus = mns.sub(&gens.s).scale(&(S::one() / p.r2.clone()));

    let xi = sqrt_one_minus(&u_plus); // z1 jet
    let eta = sqrt_one_minus(&u_minus).neg(); // z2 jet

    // H = t0 (xi+eta)^2 + w (t1 xi + t2 eta) + t3 (N - M)/sqrt(R1 R2) + t4 xi eta
    let xe = xi.add(&eta);
    let coupling = gens.n.sub(&gens.m).scale(&(p.t3.clone() / p.sqrt_r1r2.clone()));
    let hamiltonian = xe
        .mul(&xe)
        .scale(&p.t0)
        .add(&xi.scale(&(p.w.clone() * p.t1.clone())))
        .add(&eta.scale(&(p.w.clone() * p.t2.clone())))
        .add(&coupling)
        .add(&xi.mul(&eta).scale(&p.t4))
        .without_constant();

    let momentum = xi
        .scale(&p.r1)
        .add(&eta.scale(&p.r2))
        .without_constant();

    // omega = c_qq (dq1^dq2 + dp1^dp2) + c_qp (dq1^dp1 + dq2^dp2)
    // with c_qq = -(1/xi + 1/eta)/2 and c_qp = (1/xi - 1/eta)/2.
    let inv_xi = inv_sqrt_one_minus(&u_plus);
    let inv_eta = inv_sqrt_one_minus(&u_minus).neg();
    let half = S::ratio(1, 2);
    let c_qq = inv_xi.add(&inv_eta).scale(&half).neg();
    let c_qp = inv_xi.sub(&inv_eta).scale(&half);
    let mut omega = PolyTwoForm::zero(md);
    omega.set(0, 1, c_qq.clone());
    omega.set(2, 3, c_qq);
    omega.set(0, 2, c_qp.clone());
    omega.set(1, 3, c_qp);

    GaudinJets { omega, hamiltonian, momentum }
}

/// The graded pieces `omega^0, omega^2, omega^4, omega^6` of the symplectic
/// jet.
pub fn omega_graded<S: Scalar>(omega: &PolyTwoForm<S>) -> [PolyTwoForm<S>; 4] {
    [omega.graded(0), omega.graded(2), omega.graded(4), omega.graded(6)]
}

/// Solves `iota_X omega0 = theta` for `X`, with `omega0` the standard form.
fn solve_against_standard<S: Scalar>(theta: &PolyOneForm<S>) -> PolyVectorField<S> {
    // iota_X omega0 = -X_p1 dq1 - X_p2 dq2 + X_q1 dp1 + X_q2 dp2
    PolyVectorField {
        comps: [
            theta.comps[2].clone(),
            theta.comps[3].clone(),
            theta.comps[0].neg(),
            theta.comps[1].neg(),
        ],
    }
}

/// Flattening fields of a symplectic jet whose constant part is the standard
/// form: `X` kills the degree-2 deviation, `Y` the degree-4 one, via the
/// constructive Poincare primitive `alpha = -iota_A omega / (deg + 2)` along
/// the radial field `A`.
///
/// Returns fields such that pulling the jet back by the time-one Lie flows of
/// `X` and then `Y` leaves the standard form up to degree-6 terms.
pub fn flatten<S: Scalar>(
    omega: &PolyTwoForm<S>,
    tol: f64,
) -> Result<(PolyVectorField<S>, PolyVectorField<S>), GaudinError> {
    let md = omega.comps[0].max_degree();
    let om0 = omega.graded(0);
    let standard = PolyTwoForm::standard(md);
    let dev = om0.add(&standard.scale(&-S::one()));
    if dev.max_magnitude() > tol {
        return Err(GaudinError::InvalidOmegaJet(
            "constant part of the jet is not the standard symplectic form".into(),
        ));
    }
    let om2 = omega.graded(2);
    let om4 = omega.graded(4);
    for (k, part) in [(2u32, &om2), (4, &om4)] {
        let d = exterior_derivative_two(part);
        if d.max_magnitude() > tol * part.max_magnitude().max(1.0) {
            return Err(GaudinError::InvalidOmegaJet(format!(
                "degree-{k} part of the jet is not closed"
            )));
        }
    }
    let radial = PolyVectorField::negative_radial(md);
    let alpha2 = interior_product(&radial, &om2).scale(&S::ratio(-1, 4));
    let alpha4 = interior_product(&radial, &om4).scale(&S::ratio(-1, 6));
    let x = solve_against_standard(&alpha2.neg());
    let ix_om2 = interior_product(&x, &om2);
    let rhs = alpha4.neg().add(&ix_om2.scale(&S::ratio(-1, 2)));
    let y = solve_against_standard(&rhs);
    Ok((x, y))
}

/// The gradient one-form of a scalar, public for the exterior-calculus tests.
pub fn gradient<S: Scalar>(f: &TruncatedPolynomial<S>) -> PolyOneForm<S> {
    d_scalar(f)
}

/// `zeta_{+-} = (p2 +- q1)^2 + (p1 -+ q2)^2`, the quadratics the printed
/// flattening fields are written in.
pub fn zeta_quadratics<S: Scalar>(md: u32) -> (TruncatedPolynomial<S>, TruncatedPolynomial<S>) {
    use super::poly::Var;
    let q1 = TruncatedPolynomial::var(Var::Q1, md);
    let q2 = TruncatedPolynomial::var(Var::Q2, md);
    let p1 = TruncatedPolynomial::var(Var::P1, md);
    let p2 = TruncatedPolynomial::var(Var::P2, md);
    let a = p2.add(&q1);
    let b = p1.sub(&q2);
    let zeta_plus = a.mul(&a).add(&b.mul(&b));
    let c = p2.sub(&q1);
    let d = p1.add(&q2);
    let zeta_minus = c.mul(&c).add(&d.mul(&d));
    (zeta_plus, zeta_minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::forms::pullback_exp_lie_two;
    use crate::polyalg::poly::Var;
    use crate::scalar::Rat;

    fn fig5_jetparams() -> JetParams<Rat> {
        JetParams {
            r1: Rat::from_int(1),
            r2: Rat::from_int(1),
            w: Rat::from_int(1),
            t0: Rat::from_int(0),
            t1: Rat::ratio(-1, 2),
            t2: Rat::from_int(0),
            t3: Rat::ratio(-1, 2),
            t4: Rat::ratio(-3, 4),
            sqrt_r1r2: Rat::from_int(1),
        }
    }

    #[test]
    fn omega_jet_leading_terms() {
        let jets = gaudin_jets(&fig5_jetparams());
        let om0 = jets.omega.graded(0);
        // dq1 ^ dp1 + dq2 ^ dp2
        assert_eq!(om0.get(0, 2).coefficient(&[0; 4]), Rat::from_int(1));
        assert_eq!(om0.get(1, 3).coefficient(&[0; 4]), Rat::from_int(1));
        assert!(om0.get(0, 1).is_zero());

        // chi_2^- / (8 R1 R2) with R1 = R2 = 1:
        // [(p2-q1)^2+(p1+q2)^2 - (p2+q1)^2 - (p1-q2)^2]/8 = -(q1 p2 - q2 p1)/2
        let om2 = jets.omega.graded(2);
        let c = om2.get(0, 1);
        assert_eq!(c.coefficient(&[1, 0, 0, 1]), Rat::ratio(-1, 2));
        assert_eq!(c.coefficient(&[0, 1, 1, 0]), Rat::ratio(1, 2));
    }

    #[test]
    fn omega2_coefficient_matches_chi_expansion() {
        // brute-force chi_2^- for an asymmetric weight pair
        let p = JetParams {
            r1: Rat::from_int(1),
            r2: Rat::from_int(4),
            w: Rat::from_int(1),
            t0: Rat::ratio(1, 3),
            t1: Rat::ratio(2, 3),
            t2: Rat::ratio(-1, 5),
            t3: Rat::ratio(7, 10),
            t4: Rat::ratio(1, 7),
            sqrt_r1r2: Rat::from_int(2),
        };
        let jets = gaudin_jets(&p);
        let (zeta_plus, zeta_minus) = zeta_quadratics::<Rat>(JET_DEGREE);
        // chi_2^- = zeta_minus R1 - zeta_plus R2 ; omega^2 dq1^dq2 coefficient
        // is chi_2^- / (8 R1 R2)
        let chi2m = zeta_minus.scale(&p.r1).sub(&zeta_plus.scale(&p.r2));
        let expect = chi2m.scale(&Rat::ratio(1, 32));
        assert!(jets.omega.graded(2).get(0, 1).sub(&expect).is_zero());
    }

    #[test]
    fn flattening_fields_match_printed_displays() {
        // 32 X = -((p2+q1)/R1 zeta+ - (p2-q1)/R2 zeta-) d/dq1 + ...
        let p = fig5_jetparams();
        let jets = gaudin_jets(&p);
        let (x, y) = flatten(&jets.omega, 0.0).unwrap();
        let (zp, zm) = zeta_quadratics::<Rat>(JET_DEGREE);
        let q1 = TruncatedPolynomial::var(Var::Q1, JET_DEGREE);
        let q2 = TruncatedPolynomial::var(Var::Q2, JET_DEGREE);
        let p1 = TruncatedPolynomial::var(Var::P1, JET_DEGREE);
        let p2 = TruncatedPolynomial::var(Var::P2, JET_DEGREE);
        let m32 = Rat::ratio(-1, 32);
        let p32 = Rat::ratio(1, 32);
        // all four components with R1 = R2 = 1
        let xq1 = p2.add(&q1).mul(&zp).sub(&p2.sub(&q1).mul(&zm)).scale(&m32);
        let xq2 = p1.sub(&q2).mul(&zp).sub(&p1.add(&q2).mul(&zm)).scale(&p32);
        let xp1 = p1.sub(&q2).mul(&zp).add(&p1.add(&q2).mul(&zm)).scale(&m32);
        let xp2 = p2.add(&q1).mul(&zp).add(&p2.sub(&q1).mul(&zm)).scale(&m32);
        for (got, want) in x.comps.iter().zip([xq1, xq2, xp1, xp2].iter()) {
            assert!(got.sub(want).is_zero());
        }
        // 256 Y mirrors X with zeta squared
        let m256 = Rat::ratio(-1, 256);
        let yq1 = p2
            .add(&q1)
            .mul(&zp.mul(&zp))
            .sub(&p2.sub(&q1).mul(&zm.mul(&zm)))
            .scale(&m256);
        assert!(y.comps[0].sub(&yq1).is_zero());
    }

    #[test]
    fn flattening_kills_degree_2_and_4_exactly() {
        let jets = gaudin_jets(&fig5_jetparams());
        let (x, y) = flatten(&jets.omega, 0.0).unwrap();
        let pulled = pullback_exp_lie_two(&y, &pullback_exp_lie_two(&x, &jets.omega));
        assert!(pulled.graded(2).is_zero());
        assert!(pulled.graded(4).is_zero());
        // constant part still standard
        assert!(pulled
            .graded(0)
            .add(&PolyTwoForm::standard(JET_DEGREE).scale(&Rat::from_int(-1)))
            .is_zero());
    }

    #[test]
    fn flat_input_gives_zero_fields() {
        let om = PolyTwoForm::<f64>::standard(JET_DEGREE);
        let (x, y) = flatten(&om, 1e-12).unwrap();
        assert!(x.is_zero());
        assert!(y.is_zero());
    }

    #[test]
    fn poincare_primitive_reconstructs_omega2() {
        // d(-1/4 iota_A omega^2) = omega^2
        let jets = gaudin_jets(&fig5_jetparams());
        let om2 = jets.omega.graded(2);
        let radial = PolyVectorField::negative_radial(JET_DEGREE);
        let alpha2 = interior_product(&radial, &om2).scale(&Rat::ratio(-1, 4));
        let d = exterior_derivative(&alpha2);
        for (a, b) in d.comps.iter().zip(om2.comps.iter()) {
            assert!(a.sub(b).is_zero());
        }
    }

    #[test]
    fn non_closed_jet_is_rejected() {
        let mut om = PolyTwoForm::<f64>::standard(JET_DEGREE);
        // p1^2 dq1 ^ dq2 is not closed
        om.set(0, 1, TruncatedPolynomial::monomial([0, 0, 2, 0], 1.0, JET_DEGREE));
        assert!(matches!(flatten(&om, 1e-12), Err(GaudinError::InvalidOmegaJet(_))));
    }
}
