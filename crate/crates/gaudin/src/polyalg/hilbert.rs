//! Hilbert generators of the S1-invariant polynomial algebra and exact
//! projection onto invariant monomial bases.

use super::poly::{Exponents, TruncatedPolynomial, Var};
use crate::scalar::Scalar;
use crate::GaudinError;
use std::collections::BTreeSet;

/// The four quadratic Hilbert generators `(S, M, N, T)` of the algebra of
/// polynomials invariant under the circle action: `S = q1 p2 - q2 p1`,
/// `M = (q1^2 + q2^2)/2`, `N = (p1^2 + p2^2)/2`, `T = q1 p1 + q2 p2`.
/// They satisfy `4 M N = S^2 + T^2`.
pub struct HilbertGenerators<S> {
    pub s: TruncatedPolynomial<S>,
    pub m: TruncatedPolynomial<S>,
    pub n: TruncatedPolynomial<S>,
    pub t: TruncatedPolynomial<S>,
}

pub fn hilbert_generators<S: Scalar>(max_degree: u32) -> HilbertGenerators<S> {
    assert!(max_degree >= 2);
    let q1 = TruncatedPolynomial::var(Var::Q1, max_degree);
    let q2 = TruncatedPolynomial::var(Var::Q2, max_degree);
    let p1 = TruncatedPolynomial::var(Var::P1, max_degree);
    let p2 = TruncatedPolynomial::var(Var::P2, max_degree);
    let half = S::ratio(1, 2);
    HilbertGenerators {
        s: q1.mul(&p2).sub(&q2.mul(&p1)),
        m: q1.mul(&q1).add(&q2.mul(&q2)).scale(&half),
        n: p1.mul(&p1).add(&p2.mul(&p2)).scale(&half),
        t: q1.mul(&p1).add(&q2.mul(&p2)),
    }
}

/// Monomials in the Hilbert generators, identified by their exponents
/// `(S^a M^b N^c T^d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HilbertMonomial {
    pub s: u8,
    pub m: u8,
    pub n: u8,
    pub t: u8,
}

impl HilbertMonomial {
    pub const fn new(s: u8, m: u8, n: u8, t: u8) -> Self {
        Self { s, m, n, t }
    }

    pub fn degree(&self) -> u32 {
        2 * (self.s as u32 + self.m as u32 + self.n as u32 + self.t as u32)
    }

    /// Whether the monomial involves only `M` and `S` (the shape of a
    /// Hamiltonian Hopf normal form beyond the `N` term).
    pub fn is_normal_form_shape(&self) -> bool {
        self.n == 0 && self.t == 0
    }

    pub fn label(&self) -> String {
        let mut out = String::new();
        for (name, e) in [("M", self.m), ("N", self.n), ("S", self.s), ("T", self.t)] {
            for _ in 0..e {
                out.push_str(name);
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn build<S: Scalar>(&self, gens: &HilbertGenerators<S>, max_degree: u32) -> TruncatedPolynomial<S> {
        let mut out = TruncatedPolynomial::constant(S::one(), max_degree);
        for _ in 0..self.s {
            out = out.mul(&gens.s);
        }
        for _ in 0..self.m {
            out = out.mul(&gens.m);
        }
        for _ in 0..self.n {
            out = out.mul(&gens.n);
        }
        for _ in 0..self.t {
            out = out.mul(&gens.t);
        }
        out
    }
}

/// Degree-2 basis `(S, N, M)` in the order the normal form lists them.
pub fn basis_deg2() -> Vec<HilbertMonomial> {
    vec![
        HilbertMonomial::new(1, 0, 0, 0),
        HilbertMonomial::new(0, 0, 1, 0),
        HilbertMonomial::new(0, 1, 0, 0),
    ]
}

/// Degree-4 invariant basis with `MN` eliminated via `4MN = S^2 + T^2`.
pub fn basis_deg4() -> Vec<HilbertMonomial> {
    vec![
        HilbertMonomial::new(0, 2, 0, 0), // M^2
        HilbertMonomial::new(1, 1, 0, 0), // MS
        HilbertMonomial::new(0, 1, 0, 1), // MT
        HilbertMonomial::new(0, 0, 2, 0), // N^2
        HilbertMonomial::new(1, 0, 1, 0), // NS
        HilbertMonomial::new(0, 0, 1, 1), // NT
        HilbertMonomial::new(2, 0, 0, 0), // S^2
        HilbertMonomial::new(1, 0, 0, 1), // ST
        HilbertMonomial::new(0, 0, 0, 2), // T^2
    ]
}

/// Degree-6 invariant basis with `M^2 N`, `M N^2`, `M N S` eliminated.
pub fn basis_deg6() -> Vec<HilbertMonomial> {
    vec![
        HilbertMonomial::new(0, 3, 0, 0), // M^3
        HilbertMonomial::new(1, 2, 0, 0), // M^2 S
        HilbertMonomial::new(2, 1, 0, 0), // M S^2
        HilbertMonomial::new(3, 0, 0, 0), // S^3
        HilbertMonomial::new(0, 0, 3, 0), // N^3
        HilbertMonomial::new(1, 0, 2, 0), // N^2 S
        HilbertMonomial::new(2, 0, 1, 0), // N S^2
        HilbertMonomial::new(0, 1, 0, 2), // M T^2
        HilbertMonomial::new(0, 0, 1, 2), // N T^2
        HilbertMonomial::new(1, 0, 0, 2), // S T^2
        HilbertMonomial::new(0, 2, 0, 1), // M^2 T
        HilbertMonomial::new(1, 1, 0, 1), // M S T
        HilbertMonomial::new(0, 0, 2, 1), // N^2 T
        HilbertMonomial::new(1, 0, 1, 1), // N S T
        HilbertMonomial::new(2, 0, 0, 1), // S^2 T
        HilbertMonomial::new(0, 0, 0, 3), // T^3
    ]
}

/// Solves the dense linear system `A x = b` by Gaussian elimination with
/// magnitude pivoting. The system may be overdetermined; leftover rows must
/// be consistent within `tol` (relative to the largest row scale).
pub fn solve_linear<S: Scalar>(
    mut a: Vec<Vec<S>>,
    mut b: Vec<S>,
    tol: f64,
) -> Result<Vec<S>, GaudinError> {
    let rows = a.len();
    if rows == 0 {
        return Ok(Vec::new());
    }
    let cols = a[0].len();
    let scale = a
        .iter()
        .flatten()
        .map(|c| c.magnitude())
        .chain(b.iter().map(|c| c.magnitude()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let best = (pivot_row..rows)
            .max_by(|&i, &j| {
                a[i][col]
                    .magnitude()
                    .partial_cmp(&a[j][col].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(pivot_row);
        if pivot_row >= rows || a[best][col].magnitude() <= tol * scale {
            continue;
        }
        a.swap(pivot_row, best);
        b.swap(pivot_row, best);
        let inv = S::one() / a[pivot_row][col].clone();
        for c in col..cols {
            a[pivot_row][c] = a[pivot_row][c].clone() * inv.clone();
        }
        b[pivot_row] = b[pivot_row].clone() * inv;
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                a[r][c] = a[r][c].clone() - factor.clone() * a[pivot_row][c].clone();
            }
            b[r] = b[r].clone() - factor * b[pivot_row].clone();
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // consistency of the leftover rows
    for r in pivot_row..rows {
        if b[r].magnitude() > tol * scale {
            return Err(GaudinError::InconsistentSystem {
                residual: b[r].magnitude(),
            });
        }
    }
    let mut x = vec![S::zero(); cols];
    for (r, c) in pivots {
        x[c] = b[r].clone();
    }
    Ok(x)
}

/// Expresses `target` in the given Hilbert-monomial basis. Fails if the
/// polynomial does not lie in the basis span within `tol`.
pub fn project_onto_basis<S: Scalar>(
    target: &TruncatedPolynomial<S>,
    basis: &[HilbertMonomial],
    gens: &HilbertGenerators<S>,
    tol: f64,
) -> Result<Vec<S>, GaudinError> {
    let md = target.max_degree();
    let built: Vec<TruncatedPolynomial<S>> =
        basis.iter().map(|h| h.build(gens, md)).collect();
    let mut monos: BTreeSet<Exponents> = BTreeSet::new();
    for p in built.iter().chain(std::iter::once(target)) {
        for (e, _) in p.terms() {
            monos.insert(*e);
        }
    }
    let mut a = Vec::with_capacity(monos.len());
    let mut rhs = Vec::with_capacity(monos.len());
    for e in &monos {
        a.push(built.iter().map(|p| p.coefficient(e)).collect());
        rhs.push(target.coefficient(e));
    }
    solve_linear(a, rhs, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn generator_relation_holds_exactly() {
        // 4 M N = S^2 + T^2
        let g = hilbert_generators::<Rat>(8);
        let lhs = g.m.mul(&g.n).scale(&Rat::from_int(4));
        let rhs = g.s.mul(&g.s).add(&g.t.mul(&g.t));
        assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn bracket_relations() {
        // {M,N} = T, {M,T} = 2M, {N,T} = -2N, {S,.} = 0
        let g = hilbert_generators::<Rat>(8);
        assert!(g.m.poisson_bracket(&g.n).sub(&g.t).is_zero());
        assert!(g.m.poisson_bracket(&g.t).sub(&g.m.scale(&Rat::from_int(2))).is_zero());
        assert!(g.n.poisson_bracket(&g.t).add(&g.n.scale(&Rat::from_int(2))).is_zero());
        for other in [&g.m, &g.n, &g.t] {
            assert!(g.s.poisson_bracket(other).is_zero());
        }
    }

    #[test]
    fn projection_recovers_coefficients() {
        let g = hilbert_generators::<f64>(8);
        let basis = basis_deg4();
        // 3 M^2 - 0.5 N S + T^2, plus an MN term that must fold into S^2, T^2
        let target = g
            .m
            .mul(&g.m)
            .scale(&3.0)
            .sub(&g.n.mul(&g.s).scale(&0.5))
            .add(&g.t.mul(&g.t))
            .add(&g.m.mul(&g.n).scale(&2.0));
        let c = project_onto_basis(&target, &basis, &g, 1e-12).unwrap();
        assert!((c[0] - 3.0).abs() < 1e-12); // M^2
        assert!((c[4] + 0.5).abs() < 1e-12); // NS
        // MN = (S^2+T^2)/4 so S^2 picks up 0.5 and T^2 picks up 1 + 0.5
        assert!((c[6] - 0.5).abs() < 1e-12);
        assert!((c[8] - 1.5).abs() < 1e-12);
    }

    #[test]
    fn projection_rejects_non_invariant_input() {
        let g = hilbert_generators::<f64>(6);
        let basis = basis_deg2();
        let q1 = TruncatedPolynomial::<f64>::var(Var::Q1, 6);
        let err = project_onto_basis(&q1.mul(&q1), &basis, &g, 1e-12);
        assert!(err.is_err());
    }
}
