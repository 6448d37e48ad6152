//! Truncated polynomial algebra in canonical coordinates with Poisson
//! brackets, a small exterior-calculus layer, and the symplectic-jet
//! machinery built on both.

pub mod forms;
pub mod hilbert;
pub mod jet;
pub mod poly;

pub use forms::{
    d_scalar, exterior_derivative, exterior_derivative_two, interior_product,
    interior_product_one, interior_product_three, lie_derivative_one, lie_derivative_two,
    pullback_exp_lie_scalar, pullback_exp_lie_two, PolyOneForm, PolyThreeForm, PolyTwoForm,
    PolyVectorField,
};
pub use hilbert::{
    basis_deg2, basis_deg4, basis_deg6, hilbert_generators, project_onto_basis, solve_linear,
    HilbertGenerators, HilbertMonomial,
};
pub use jet::{flatten, gaudin_jets, omega_graded, GaudinJets, JetParams, JET_DEGREE};
pub use poly::{Exponents, TruncatedPolynomial, Var, NVARS, PRUNE_REL, VARS};

use crate::scalar::Scalar;

/// Exponential Lie transform `e^{ad_G} H` truncated at the carrier degree.
/// Requires the generator to have lowest degree at least 3 so that the series
/// terminates under truncation.
pub fn lie_transform<S: Scalar>(
    h: &TruncatedPolynomial<S>,
    g: &TruncatedPolynomial<S>,
) -> Result<TruncatedPolynomial<S>, crate::GaudinError> {
    if let Some(low) = g.lowest_degree() {
        if low < 3 {
            return Err(crate::GaudinError::GeneratorDegreeTooLow(low));
        }
    } else {
        return Ok(h.clone());
    }
    let step = g.lowest_degree().unwrap() - 2;
    let md = h.max_degree();
    let mut acc = h.clone();
    let mut term = h.clone();
    let mut factorial = S::one();
    let mut n = 1u32;
    while n * step <= md {
        term = g.poisson_bracket(&term);
        factorial = factorial * S::from_int(n as i64);
        acc = acc.add(&term.scale(&(S::one() / factorial.clone())));
        if term.is_zero() {
            break;
        }
        n += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn lie_transform_identity_on_zero_generator() {
        let g = hilbert_generators::<Rat>(8);
        let zero = TruncatedPolynomial::zero(8);
        let out = lie_transform(&g.m, &zero).unwrap();
        assert!(out.sub(&g.m).is_zero());
    }

    #[test]
    fn lie_transform_rejects_quadratic_generators() {
        let g = hilbert_generators::<f64>(8);
        assert!(matches!(
            lie_transform(&g.m, &g.n),
            Err(crate::GaudinError::GeneratorDegreeTooLow(2))
        ));
    }

    #[test]
    fn lie_transform_matches_hand_expansion() {
        // G = M T: {MT, M^k} = M {T, M^k} = -2k M^{k+1}, so
        // ad^n(M) = (-2)^n n! M^{n+1} and
        // e^{ad_G} M = M - 2M^2 + 4M^3 - 8M^4 at truncation degree 8.
        let g = hilbert_generators::<Rat>(8);
        let gen = g.m.mul(&g.t);
        let out = lie_transform(&g.m, &gen).unwrap();
        let expect = g
            .m
            .sub(&g.m.pow(2).scale(&Rat::from_int(2)))
            .add(&g.m.pow(3).scale(&Rat::from_int(4)))
            .sub(&g.m.pow(4).scale(&Rat::from_int(8)));
        assert!(out.sub(&expect).is_zero());
    }

    #[test]
    fn degree_bookkeeping_of_cubic_generators() {
        // a degree-3 generator against an arbitrary polynomial at truncation 4:
        // only the single bracket contributes at degree 3 (g + k - 2 with k=2)
        let q1 = TruncatedPolynomial::<Rat>::var(Var::Q1, 4);
        let p1 = TruncatedPolynomial::<Rat>::var(Var::P1, 4);
        let gen = q1.mul(&q1).mul(&p1); // degree 3
        let h = q1.mul(&p1); // degree 2
        let out = lie_transform(&h, &gen).unwrap();
        let single = gen.poisson_bracket(&h);
        assert!(out.sub(&h).sub(&single).graded(3).is_zero());
        // the double bracket lands at degree 4
        let double = gen.poisson_bracket(&single).scale(&Rat::ratio(1, 2));
        assert!(out.sub(&h).sub(&single).sub(&double).is_zero());
    }
}
