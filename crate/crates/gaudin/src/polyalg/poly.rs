//! Degree-truncated polynomials in the four canonical variables
//! `(q1, q2, p1, p2)`.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Number of canonical variables.
pub const NVARS: usize = 4;

/// Exponent tuple `(e_q1, e_q2, e_p1, e_p2)`.
pub type Exponents = [u8; NVARS];

/// The four canonical coordinates, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q1 = 0,
    Q2 = 1,
    P1 = 2,
    P2 = 3,
}

pub const VARS: [Var; NVARS] = [Var::Q1, Var::Q2, Var::P1, Var::P2];

const VAR_NAMES: [&str; NVARS] = ["q1", "q2", "p1", "p2"];

/// Relative magnitude below which floating coefficients may be pruned.
pub const PRUNE_REL: f64 = 1e-14;

/// A polynomial in `(q1, q2, p1, p2)` with all stored monomials of total
/// degree at most `max_degree`. Products are truncated at that degree.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedPolynomial<S> {
    max_degree: u32,
    terms: BTreeMap<Exponents, S>,
}

fn total_degree(e: &Exponents) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl<S: Scalar> TruncatedPolynomial<S> {
    pub fn zero(max_degree: u32) -> Self {
        Self { max_degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: S, max_degree: u32) -> Self {
        let mut p = Self::zero(max_degree);
        p.add_term([0; NVARS], c);
        p
    }

    pub fn var(v: Var, max_degree: u32) -> Self {
        let mut e = [0u8; NVARS];
        e[v as usize] = 1;
        let mut p = Self::zero(max_degree);
        p.add_term(e, S::one());
        p
    }

    pub fn monomial(e: Exponents, c: S, max_degree: u32) -> Self {
        let mut p = Self::zero(max_degree);
        p.add_term(e, c);
        p
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &Exponents) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c` to the coefficient of `e`, truncating and dropping exact zeros.
    pub fn add_term(&mut self, e: Exponents, c: S) {
        if c.is_zero() || total_degree(&e) > self.max_degree {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.max_degree = self.max_degree.min(rhs.max_degree);
        out.terms.retain(|e, _| total_degree(e) <= out.max_degree);
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.max_degree);
        if s.is_zero() {
            return out;
        }
        for (e, c) in self.terms.iter() {
            out.add_term(*e, c.clone() * s.clone());
        }
        out
    }

    /// Truncating product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let max_degree = self.max_degree.min(rhs.max_degree);
        let mut out = Self::zero(max_degree);
        for (ea, ca) in self.terms.iter() {
            let da = total_degree(ea);
            if da > max_degree {
                continue;
            }
            for (eb, cb) in rhs.terms.iter() {
                if da + total_degree(eb) > max_degree {
                    continue;
                }
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(S::one(), self.max_degree);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn diff(&self, v: Var) -> Self {
        let i = v as usize;
        let mut out = Self::zero(self.max_degree);
        for (e, c) in self.terms.iter() {
            if e[i] == 0 {
                continue;
            }
            let mut d = *e;
            d[i] -= 1;
            out.add_term(d, c.clone() * S::from_int(e[i] as i64));
        }
        out
    }

    /// Canonical Poisson bracket `{f, g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i`.
    pub fn poisson_bracket(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.max_degree.min(rhs.max_degree));
        for (q, p) in [(Var::Q1, Var::P1), (Var::Q2, Var::P2)] {
            out = out
                .add(&self.diff(q).mul(&rhs.diff(p)))
                .sub(&self.diff(p).mul(&rhs.diff(q)));
        }
        out
    }

    pub fn eval(&self, x: &[S; NVARS]) -> S {
        let mut acc = S::zero();
        for (e, c) in self.terms.iter() {
            let mut t = c.clone();
            for i in 0..NVARS {
                for _ in 0..e[i] {
                    t = t * x[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Homogeneous part of total degree `k`.
    pub fn graded(&self, k: u32) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (e, c) in self.terms.iter() {
            if total_degree(e) == k {
                out.add_term(*e, c.clone());
            }
        }
        out
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(total_degree).min()
    }

    pub fn highest_degree(&self) -> Option<u32> {
        self.terms.keys().map(total_degree).max()
    }

    /// Largest coefficient magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Drops coefficients of magnitude below `PRUNE_REL` times the largest
    /// magnitude (floating mode only; exact mode stores no zeros). Idempotent.
    pub fn prune(&mut self) {
        if !S::prunes() || self.terms.is_empty() {
            return;
        }
        let cutoff = PRUNE_REL * self.max_magnitude();
        self.terms.retain(|_, c| c.magnitude() >= cutoff);
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&[0u8; NVARS]);
        out
    }

    /// Substitutes each variable by the given polynomial (used for linear
    /// symplectic changes of coordinates).
    pub fn substitute(&self, images: &[Self; NVARS]) -> Self {
        let max_degree = self.max_degree;
        let mut out = Self::zero(max_degree);
        for (e, c) in self.terms.iter() {
            let mut t = Self::constant(c.clone(), max_degree);
            for i in 0..NVARS {
                for _ in 0..e[i] {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TruncatedPolynomial<T> {
        let mut out = TruncatedPolynomial::zero(self.max_degree);
        for (e, c) in self.terms.iter() {
            out.add_term(*e, f(c));
        }
        out
    }

    /// Sorted text listing `coeff * q1^a q2^b p1^c p2^d`, one monomial per
    /// line, for golden-file comparisons.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            s.push_str("0\n");
            return s;
        }
        for (e, c) in self.terms.iter() {
            let mut line = format!("{}", c);
            let mut first = true;
            for i in 0..NVARS {
                if e[i] > 0 {
                    let sep = if first { " * " } else { " " };
                    first = false;
                    let _ = write!(line, "{sep}{}^{}", VAR_NAMES[i], e[i]);
                }
            }
            s.push_str(&line);
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn q1() -> TruncatedPolynomial<f64> {
        TruncatedPolynomial::var(Var::Q1, 8)
    }
    fn p1() -> TruncatedPolynomial<f64> {
        TruncatedPolynomial::var(Var::P1, 8)
    }

    #[test]
    fn canonical_pair_bracket() {
        let b = q1().poisson_bracket(&p1());
        assert_eq!(b.coefficient(&[0, 0, 0, 0]), 1.0);
        assert_eq!(b.num_terms(), 1);
    }

    #[test]
    fn multiplication_truncates() {
        let q = TruncatedPolynomial::<f64>::var(Var::Q1, 3);
        let q2 = q.mul(&q);
        let q4 = q2.mul(&q2);
        assert!(q4.is_zero());
        assert_eq!(q2.mul(&q).coefficient(&[3, 0, 0, 0]), 1.0);
    }

    #[test]
    fn prune_is_idempotent_and_relative() {
        let mut p = TruncatedPolynomial::<f64>::zero(4);
        p.add_term([1, 0, 0, 0], 1.0);
        p.add_term([0, 1, 0, 0], 1e-20);
        p.prune();
        assert_eq!(p.num_terms(), 1);
        let before = p.clone();
        p.prune();
        assert_eq!(p, before);
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let third = TruncatedPolynomial::constant(Rat::ratio(1, 3), 2);
        let three = TruncatedPolynomial::constant(Rat::from_int(3), 2);
        let one = third.mul(&three);
        assert_eq!(one.coefficient(&[0, 0, 0, 0]), Rat::from_int(1));
    }

    #[test]
    fn dump_lists_sorted_monomials() {
        let mut p = TruncatedPolynomial::<f64>::zero(4);
        p.add_term([2, 0, 0, 0], 1.5);
        p.add_term([0, 0, 1, 1], -2.0);
        let d = p.dump();
        assert!(d.contains("1.5 * q1^2"));
        assert!(d.contains("-2 * p1^1 p2^1"));
    }
}
