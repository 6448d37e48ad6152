//! Independent sixth-order normalization: flatten the symplectic jet by Lie
//! flows, push the Hamiltonian through the same flows, then cancel every
//! invariant monomial outside the normal-form shape with generating
//! functions solved from a linear elimination.

use super::appendix::{GeneratingCoefficients, RawCoefficients, ScaledCoefficients};
use crate::polyalg::{
    basis_deg2, basis_deg4, basis_deg6, flatten, gaudin_jets, hilbert_generators,
    project_onto_basis, pullback_exp_lie_scalar, solve_linear, HilbertMonomial, JetParams,
    TruncatedPolynomial, JET_DEGREE,
};
use crate::scalar::Scalar;
use crate::GaudinError;

/// Diagnostics of one normalization run.
#[derive(Clone, Debug)]
pub struct NormalFormRun<S> {
    pub raw: RawCoefficients<S>,
    pub scaled: ScaledCoefficients<S>,
    pub generating: GeneratingCoefficients<S>,
    /// Largest non-(M, S) coefficient left after the elimination.
    pub residual: f64,
    /// Largest odd-degree coefficient of the transformed Hamiltonian.
    pub odd_degree_residual: f64,
}

/// Tolerance for linear solves and projection consistency in floating mode.
const SOLVE_TOL: f64 = 1e-9;
/// Residual above which the normalization reports failure.
const RESIDUAL_TOL: f64 = 1e-8;

fn generator_basis_e() -> Vec<HilbertMonomial> {
    vec![
        HilbertMonomial::new(0, 1, 0, 1), // MT
        HilbertMonomial::new(0, 0, 1, 1), // NT
        HilbertMonomial::new(1, 0, 0, 1), // ST
    ]
}

fn generator_basis_f() -> Vec<HilbertMonomial> {
    vec![
        HilbertMonomial::new(0, 2, 0, 1), // M^2 T
        HilbertMonomial::new(1, 1, 0, 1), // MST
        HilbertMonomial::new(0, 0, 2, 1), // N^2 T
        HilbertMonomial::new(1, 0, 1, 1), // NST
        HilbertMonomial::new(2, 0, 0, 1), // S^2 T
        HilbertMonomial::new(0, 0, 0, 3), // T^3
    ]
}

/// Positions of the normal-form monomials inside [`basis_deg4`]: `M^2`, `MS`,
/// `S^2`.
const KEEP4: [usize; 3] = [0, 1, 6];
/// Positions of `M^3`, `M^2 S`, `M S^2`, `S^3` inside [`basis_deg6`].
const KEEP6: [usize; 4] = [0, 1, 2, 3];

fn unwanted_indices(len: usize, keep: &[usize]) -> Vec<usize> {
    (0..len).filter(|i| !keep.contains(i)).collect()
}

/// Solves for generator coefficients cancelling the unwanted coefficients of
/// `base + sum_i x_i {gen_i, h2}`.
fn solve_generators<S: Scalar>(
    base_coeffs: &[S],
    bracket_coeffs: &[Vec<S>],
    unwanted: &[usize],
    tol: f64,
) -> Result<Vec<S>, GaudinError> {
    let rows: Vec<Vec<S>> = unwanted
        .iter()
        .map(|&i| bracket_coeffs.iter().map(|col| col[i].clone()).collect())
        .collect();
    let rhs: Vec<S> = unwanted.iter().map(|&i| -base_coeffs[i].clone()).collect();
    solve_linear(rows, rhs, tol)
}

/// Runs the full pipeline on the `m0` chart for the given lifted parameters.
/// Other fixed points and the minus side are handled by the caller through
/// the sphere-swap and `t3`-negation parameter maps.
pub fn normalize<S: Scalar>(p: &JetParams<S>) -> Result<NormalFormRun<S>, GaudinError> {
    let tol = if S::prunes() { SOLVE_TOL } else { 0.0 };
    let jets = gaudin_jets(p);
    let (x, y) = flatten(&jets.omega, tol.max(if S::prunes() { 1e-12 } else { 0.0 }))?;
    let hbar = pullback_exp_lie_scalar(&y, &pullback_exp_lie_scalar(&x, &jets.hamiltonian));

    let odd_degree_residual = hbar
        .graded(3)
        .max_magnitude()
        .max(hbar.graded(5).max_magnitude());

    let gens = hilbert_generators::<S>(JET_DEGREE);
    let b2 = basis_deg2();
    let b4 = basis_deg4();
    let b6 = basis_deg6();

    let h2 = hbar.graded(2);
    let h4 = hbar.graded(4);
    let h6 = hbar.graded(6);

    let c2 = project_onto_basis(&h2, &b2, &gens, tol)?;
    let (a1, b, a2) = (c2[0].clone(), c2[1].clone(), c2[2].clone());
    if b.magnitude() < 1e-12 {
        return Err(GaudinError::SingularDenominator(b.magnitude()));
    }

    // degree-4 elimination: E = e1 MT + e2 NT + e3 ST
    let e_basis = generator_basis_e();
    let e_polys: Vec<TruncatedPolynomial<S>> =
        e_basis.iter().map(|h| h.build(&gens, JET_DEGREE)).collect();
    let c4_base = project_onto_basis(&h4, &b4, &gens, tol)?;
    let c4_brackets: Vec<Vec<S>> = e_polys
        .iter()
        .map(|g| project_onto_basis(&g.poisson_bracket(&h2), &b4, &gens, tol))
        .collect::<Result<_, _>>()?;
    let unwanted4 = unwanted_indices(b4.len(), &KEEP4);
    let e = solve_generators(&c4_base, &c4_brackets, &unwanted4, tol)?;
    let e_poly = e_polys
        .iter()
        .zip(e.iter())
        .fold(TruncatedPolynomial::zero(JET_DEGREE), |acc, (g, c)| {
            acc.add(&g.scale(c))
        });
    let h4_final = h4.add(&e_poly.poisson_bracket(&h2));
    let c4 = project_onto_basis(&h4_final, &b4, &gens, tol)?;

    // degree-6 elimination: F over the T-odd sextic invariants
    let half = S::ratio(1, 2);
    let eh2 = e_poly.poisson_bracket(&h2);
    let base6 = h6
        .add(&e_poly.poisson_bracket(&h4))
        .add(&e_poly.poisson_bracket(&eh2).scale(&half))
        .add(&TruncatedPolynomial::zero(JET_DEGREE));
    let f_basis = generator_basis_f();
    let f_polys: Vec<TruncatedPolynomial<S>> =
        f_basis.iter().map(|h| h.build(&gens, JET_DEGREE)).collect();
    let c6_base = project_onto_basis(&base6, &b6, &gens, tol)?;
    let c6_brackets: Vec<Vec<S>> = f_polys
        .iter()
        .map(|g| project_onto_basis(&g.poisson_bracket(&h2), &b6, &gens, tol))
        .collect::<Result<_, _>>()?;
    let unwanted6 = unwanted_indices(b6.len(), &KEEP6);
    let f = solve_generators(&c6_base, &c6_brackets, &unwanted6, tol)?;
    let f_poly = f_polys
        .iter()
        .zip(f.iter())
        .fold(TruncatedPolynomial::zero(JET_DEGREE), |acc, (g, c)| {
            acc.add(&g.scale(c))
        });
    let h6_final = base6.add(&f_poly.poisson_bracket(&h2));
    let c6 = project_onto_basis(&h6_final, &b6, &gens, tol)?;

    let mut residual = 0.0f64;
    for &i in &unwanted4 {
        residual = residual.max(c4[i].magnitude());
    }
    for &i in &unwanted6 {
        residual = residual.max(c6[i].magnitude());
    }
    let scale_mag = c4
        .iter()
        .chain(c6.iter())
        .map(|c| c.magnitude())
        .fold(1.0f64, f64::max);
    if residual > RESIDUAL_TOL * scale_mag {
        return Err(GaudinError::NormalizationResidual(residual));
    }

    let raw = RawCoefficients {
        a_tilde: [
            a1,
            a2,
            c4[KEEP4[0]].clone(),
            c4[KEEP4[1]].clone(),
            c4[KEEP4[2]].clone(),
            c6[KEEP6[0]].clone(),
            c6[KEEP6[1]].clone(),
            c6[KEEP6[2]].clone(),
            c6[KEEP6[3]].clone(),
        ],
        b,
    };
    let scaled = super::appendix::scale(&raw)?;
    Ok(NormalFormRun {
        raw,
        scaled,
        generating: GeneratingCoefficients {
            e: [e[0].clone(), e[1].clone(), e[2].clone()],
            f: [
                f[0].clone(),
                f[1].clone(),
                f[2].clone(),
                f[3].clone(),
                f[4].clone(),
                f[5].clone(),
            ],
        },
        residual,
        odd_degree_residual,
    })
}
