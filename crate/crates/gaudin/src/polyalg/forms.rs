//! Exterior calculus on polynomial differential forms in four variables,
//! just enough to flatten a symplectic jet.

use super::poly::{TruncatedPolynomial, NVARS, VARS};
use crate::scalar::Scalar;

/// Ordered basis pairs for two-forms: `dx_i ^ dx_j` with `i < j`.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Ordered basis triples for three-forms.
pub const TRIPLES: [(usize, usize, usize); 4] = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];

fn pair_index(i: usize, j: usize) -> (usize, bool) {
    debug_assert!(i != j);
    let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
    let idx = PAIRS.iter().position(|&p| p == (a, b)).unwrap();
    (idx, flip)
}

fn triple_index(i: usize, j: usize, k: usize) -> Option<(usize, bool)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut flip = false;
    // 3-element bubble sort, tracking parity
    for a in 0..2 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                flip = !flip;
            }
        }
    }
    let idx = TRIPLES.iter().position(|&t| t == (v[0], v[1], v[2])).unwrap();
    Some((idx, flip))
}

/// One-form with polynomial components on `dq1, dq2, dp1, dp2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyOneForm<S> {
    pub comps: [TruncatedPolynomial<S>; NVARS],
}

/// Two-form stored antisymmetrically: one polynomial per ordered pair in
/// [`PAIRS`].
#[derive(Clone, Debug, PartialEq)]
pub struct PolyTwoForm<S> {
    pub comps: [TruncatedPolynomial<S>; 6],
}

/// Three-form on the four ordered triples in [`TRIPLES`].
#[derive(Clone, Debug, PartialEq)]
pub struct PolyThreeForm<S> {
    pub comps: [TruncatedPolynomial<S>; 4],
}

/// Polynomial vector field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVectorField<S> {
    pub comps: [TruncatedPolynomial<S>; NVARS],
}

fn zero4<S: Scalar>(max_degree: u32) -> [TruncatedPolynomial<S>; NVARS] {
    std::array::from_fn(|_| TruncatedPolynomial::zero(max_degree))
}

impl<S: Scalar> PolyOneForm<S> {
    pub fn zero(max_degree: u32) -> Self {
        Self { comps: zero4(max_degree) }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].add(&rhs.comps[i])) }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].scale(s)) }
    }

    pub fn neg(&self) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].neg()) }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.comps.iter().map(|c| c.max_magnitude()).fold(0.0, f64::max)
    }
}

impl<S: Scalar> PolyTwoForm<S> {
    pub fn zero(max_degree: u32) -> Self {
        Self { comps: std::array::from_fn(|_| TruncatedPolynomial::zero(max_degree)) }
    }

    /// Sets the coefficient polynomial of `dx_i ^ dx_j`, antisymmetrizing as
    /// needed.
    pub fn set(&mut self, i: usize, j: usize, p: TruncatedPolynomial<S>) {
        let (idx, flip) = pair_index(i, j);
        self.comps[idx] = if flip { p.neg() } else { p };
    }

    /// Coefficient polynomial of `dx_i ^ dx_j` (with sign).
    pub fn get(&self, i: usize, j: usize) -> TruncatedPolynomial<S> {
        let (idx, flip) = pair_index(i, j);
        if flip {
            self.comps[idx].neg()
        } else {
            self.comps[idx].clone()
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].add(&rhs.comps[i])) }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].scale(s)) }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn graded(&self, k: u32) -> Self {
        Self { comps: std::array::from_fn(|i| self.comps[i].graded(k)) }
    }

    pub fn max_magnitude(&self) -> f64 {
        self.comps.iter().map(|c| c.max_magnitude()).fold(0.0, f64::max)
    }

    /// The standard form `dq1 ^ dp1 + dq2 ^ dp2`.
    pub fn standard(max_degree: u32) -> Self {
        let mut w = Self::zero(max_degree);
        w.set(0, 2, TruncatedPolynomial::constant(S::one(), max_degree));
        w.set(1, 3, TruncatedPolynomial::constant(S::one(), max_degree));
        w
    }
}

impl<S: Scalar> PolyThreeForm<S> {
    pub fn zero(max_degree: u32) -> Self {
        Self { comps: std::array::from_fn(|_| TruncatedPolynomial::zero(max_degree)) }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.comps.iter().map(|c| c.max_magnitude()).fold(0.0, f64::max)
    }
}

impl<S: Scalar> PolyVectorField<S> {
    pub fn zero(max_degree: u32) -> Self {
        Self { comps: zero4(max_degree) }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Directional derivative of a scalar polynomial.
    pub fn apply(&self, f: &TruncatedPolynomial<S>) -> TruncatedPolynomial<S> {
        let mut out = TruncatedPolynomial::zero(f.max_degree());
        for (i, v) in VARS.iter().enumerate() {
            out = out.add(&self.comps[i].mul(&f.diff(*v)));
        }
        out
    }

    /// Lowest total degree among the component polynomials.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(|c| c.lowest_degree()).min()
    }

    /// The radial field `-q1 d/dq1 - q2 d/dq2 - p1 d/dp1 - p2 d/dp2`.
    pub fn negative_radial(max_degree: u32) -> Self {
        Self {
            comps: std::array::from_fn(|i| {
                TruncatedPolynomial::var(VARS[i], max_degree).neg()
            }),
        }
    }
}

/// Exterior derivative of a scalar (gradient one-form).
pub fn d_scalar<S: Scalar>(f: &TruncatedPolynomial<S>) -> PolyOneForm<S> {
    PolyOneForm { comps: std::array::from_fn(|i| f.diff(VARS[i])) }
}

/// Exterior derivative of a one-form.
pub fn exterior_derivative<S: Scalar>(a: &PolyOneForm<S>) -> PolyTwoForm<S> {
    let md = a.comps[0].max_degree();
    let mut out = PolyTwoForm::zero(md);
    for (idx, &(i, j)) in PAIRS.iter().enumerate() {
        out.comps[idx] = a.comps[j].diff(VARS[i]).sub(&a.comps[i].diff(VARS[j]));
    }
    out
}

/// Exterior derivative of a two-form.
pub fn exterior_derivative_two<S: Scalar>(b: &PolyTwoForm<S>) -> PolyThreeForm<S> {
    let md = b.comps[0].max_degree();
    let mut out = PolyThreeForm::zero(md);
    for (idx, &(i, j, k)) in TRIPLES.iter().enumerate() {
        out.comps[idx] = b
            .get(j, k)
            .diff(VARS[i])
            .sub(&b.get(i, k).diff(VARS[j]))
            .add(&b.get(i, j).diff(VARS[k]));
    }
    out
}

/// Interior product of a vector field with a one-form.
pub fn interior_product_one<S: Scalar>(
    v: &PolyVectorField<S>,
    a: &PolyOneForm<S>,
) -> TruncatedPolynomial<S> {
    let mut out = TruncatedPolynomial::zero(a.comps[0].max_degree());
    for i in 0..NVARS {
        out = out.add(&v.comps[i].mul(&a.comps[i]));
    }
    out
}

/// Interior product of a vector field with a two-form.
pub fn interior_product<S: Scalar>(v: &PolyVectorField<S>, b: &PolyTwoForm<S>) -> PolyOneForm<S> {
    let md = b.comps[0].max_degree();
    let mut out = PolyOneForm::zero(md);
    for j in 0..NVARS {
        let mut acc = TruncatedPolynomial::zero(md);
        for i in 0..NVARS {
            if i == j {
                continue;
            }
            acc = acc.add(&v.comps[i].mul(&b.get(i, j)));
        }
        out.comps[j] = acc;
    }
    out
}

/// Interior product of a vector field with a three-form.
pub fn interior_product_three<S: Scalar>(
    v: &PolyVectorField<S>,
    c: &PolyThreeForm<S>,
) -> PolyTwoForm<S> {
    let md = c.comps[0].max_degree();
    let mut out = PolyTwoForm::zero(md);
    for (pidx, &(j, k)) in PAIRS.iter().enumerate() {
        let mut acc = TruncatedPolynomial::zero(md);
        for i in 0..NVARS {
            if let Some((tidx, flip)) = triple_index(i, j, k) {
                let term = v.comps[i].mul(&c.comps[tidx]);
                acc = if flip { acc.sub(&term) } else { acc.add(&term) };
            }
        }
        out.comps[pidx] = acc;
    }
    out
}

/// Lie derivative of a one-form along a vector field (Cartan formula).
pub fn lie_derivative_one<S: Scalar>(v: &PolyVectorField<S>, a: &PolyOneForm<S>) -> PolyOneForm<S> {
    let di = d_scalar(&interior_product_one(v, a));
    let id = interior_product(v, &exterior_derivative(a));
    di.add(&id)
}

/// Lie derivative of a two-form along a vector field (Cartan formula).
pub fn lie_derivative_two<S: Scalar>(v: &PolyVectorField<S>, b: &PolyTwoForm<S>) -> PolyTwoForm<S> {
    let di = exterior_derivative(&interior_product(v, b));
    let id = interior_product_three(v, &exterior_derivative_two(b));
    di.add(&id)
}

/// Pullback of a two-form by the time-one flow of `v`, as the graded Lie
/// series `sum_n L_v^n / n!`. Terminates because each application of `L_v`
/// raises coefficient degree by `deg(v) - 1 >= 2`.
pub fn pullback_exp_lie_two<S: Scalar>(v: &PolyVectorField<S>, b: &PolyTwoForm<S>) -> PolyTwoForm<S> {
    let step = v.lowest_degree().unwrap_or(3).saturating_sub(1).max(1);
    let md = b.comps[0].max_degree();
    let mut acc = b.clone();
    let mut term = b.clone();
    let mut factorial = S::one();
    let mut n = 1u32;
    while n * step <= md {
        term = lie_derivative_two(v, &term);
        factorial = factorial * S::from_int(n as i64);
        acc = acc.add(&term.scale(&(S::one() / factorial.clone())));
        if term.is_zero() {
            break;
        }
        n += 1;
    }
    acc
}

/// Pullback of a scalar by the time-one flow of `v`: `sum_n v^n(f) / n!`.
pub fn pullback_exp_lie_scalar<S: Scalar>(
    v: &PolyVectorField<S>,
    f: &TruncatedPolynomial<S>,
) -> TruncatedPolynomial<S> {
    let step = v.lowest_degree().unwrap_or(3).saturating_sub(1).max(1);
    let md = f.max_degree();
    let mut acc = f.clone();
    let mut term = f.clone();
    let mut factorial = S::one();
    let mut n = 1u32;
    while n * step <= md {
        term = v.apply(&term);
        factorial = factorial * S::from_int(n as i64);
        acc = acc.add(&term.scale(&(S::one() / factorial.clone())));
        if term.is_zero() {
            break;
        }
        n += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(e: [u8; 4], c: f64) -> TruncatedPolynomial<f64> {
        TruncatedPolynomial::monomial(e, c, 8)
    }

    #[test]
    fn d_squared_is_zero_on_one_forms() {
        let mut a = PolyOneForm::zero(8);
        a.comps[0] = poly([1, 2, 0, 1], 3.0);
        a.comps[2] = poly([0, 1, 1, 0], -2.0);
        a.comps[3] = poly([2, 0, 0, 2], 0.5);
        let dda = exterior_derivative_two(&exterior_derivative(&a));
        assert!(dda.is_zero());
    }

    #[test]
    fn d_squared_is_zero_on_scalars() {
        let f = poly([2, 1, 1, 0], 4.0);
        let ddf = exterior_derivative(&d_scalar(&f));
        assert!(ddf.is_zero());
    }

    #[test]
    fn radial_contraction_of_standard_form() {
        // iota_A omega0 with A = -q d/dq - p d/dp gives
        // -q1 dp1 - q2 dp2 + p1 dq1 + p2 dq2
        let omega0 = PolyTwoForm::<f64>::standard(8);
        let a = PolyVectorField::negative_radial(8);
        let contr = interior_product(&a, &omega0);
        assert_eq!(contr.comps[2].coefficient(&[1, 0, 0, 0]), -1.0); // dp1: -q1
        assert_eq!(contr.comps[3].coefficient(&[0, 1, 0, 0]), -1.0); // dp2: -q2
        assert_eq!(contr.comps[0].coefficient(&[0, 0, 1, 0]), 1.0); // dq1: +p1
        assert_eq!(contr.comps[1].coefficient(&[0, 0, 0, 1]), 1.0); // dq2: +p2
    }

    #[test]
    fn cartan_formula_on_closed_form_matches_d_iota() {
        let omega0 = PolyTwoForm::<f64>::standard(8);
        let mut v = PolyVectorField::zero(8);
        v.comps[0] = poly([0, 0, 0, 2], 1.0).mul(&poly([1, 0, 0, 0], 1.0));
        v.comps[3] = poly([0, 2, 1, 0], -1.5);
        let lhs = lie_derivative_two(&v, &omega0);
        let rhs = exterior_derivative(&interior_product(&v, &omega0));
        for (l, r) in lhs.comps.iter().zip(rhs.comps.iter()) {
            assert_eq!(l, r);
        }
    }
}
