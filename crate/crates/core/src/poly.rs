//! Sparse multivariate polynomials over a [`FieldCtx`], with the
//! homogeneity-aware operations the encoders and oracles rely on.

use crate::field::{FieldCtx, FieldElem};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("expected a point of length {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("homogenization variable {0} already occurs in the polynomial")]
    HomVarOccurs(usize),
    #[error("variable index {0} out of range for {1} variables")]
    VarOutOfRange(usize, usize),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
}

/// An exponent vector, ordered by total degree first and then
/// lexicographically, so that map iteration yields graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored; the zero
/// polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldCtx,
    num_vars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero(ctx: &FieldCtx, num_vars: usize) -> Poly {
        Poly {
            ctx: ctx.clone(),
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &FieldCtx, num_vars: usize, value: FieldElem) -> Poly {
        let mut poly = Poly::zero(ctx, num_vars);
        poly.add_term(vec![0; num_vars], value);
        poly
    }

    /// The monomial `x_idx`.
    pub fn var(ctx: &FieldCtx, num_vars: usize, idx: usize) -> Poly {
        assert!(idx < num_vars, "variable index out of range");
        let mut exps = vec![0u32; num_vars];
        exps[idx] = 1;
        let mut poly = Poly::zero(ctx, num_vars);
        poly.add_term(exps, ctx.one());
        poly
    }

    pub fn from_terms<I>(ctx: &FieldCtx, num_vars: usize, terms: I) -> Poly
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElem)>,
    {
        let mut poly = Poly::zero(ctx, num_vars);
        for (exps, coeff) in terms {
            poly.add_term(exps, coeff);
        }
        poly
    }

    /// Add `coeff * x^exps` into the polynomial, dropping the term if the
    /// accumulated coefficient cancels to zero.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: FieldElem) {
        assert_eq!(exps.len(), self.num_vars, "exponent vector arity");
        assert!(coeff.ctx() == &self.ctx, "coefficient context mismatch");
        if coeff.is_zero() {
            return;
        }
        let key = Monomial::new(exps);
        let updated = match self.terms.get(&key) {
            Some(existing) => existing.add(&coeff),
            None => coeff,
        };
        if updated.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, updated);
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order (lowest first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    /// Largest total degree among the terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// The common total degree of all terms, or None if they disagree. The
    /// zero polynomial reports degree 0 by convention.
    pub fn check_homogeneous(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(self.compatible(other), "polynomial ring mismatch");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.exponents().to_vec(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (m, c) in self.terms() {
            out.add_term(m.exponents().to_vec(), c.neg());
        }
        out
    }

    pub fn scale(&self, factor: &FieldElem) -> Poly {
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (m, c) in self.terms() {
            out.add_term(m.exponents().to_vec(), c.mul(factor));
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.compatible(other), "polynomial ring mismatch");
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let exps = ma
                    .exponents()
                    .iter()
                    .zip(mb.exponents())
                    .map(|(a, b)| a + b)
                    .collect();
                out.add_term(exps, ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by the single monomial `x^exps`.
    pub fn mul_monomial(&self, exps: &[u32]) -> Poly {
        assert_eq!(exps.len(), self.num_vars);
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (m, c) in self.terms() {
            let shifted = m
                .exponents()
                .iter()
                .zip(exps)
                .map(|(a, b)| a + b)
                .collect();
            out.add_term(shifted, c.clone());
        }
        out
    }

    fn compatible(&self, other: &Poly) -> bool {
        self.ctx == other.ctx && self.num_vars == other.num_vars
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[FieldElem]) -> Result<FieldElem, PolyError> {
        if point.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut acc = self.ctx.zero();
        for (m, c) in self.terms() {
            let mut term = c.clone();
            for (value, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = term.mul(&value.pow(e as u64));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Pad each term with a power of `hom_var` so every term reaches the
    /// polynomial's total degree. Setting `hom_var := 1` recovers the input.
    pub fn homogenize(&self, hom_var: usize) -> Result<Poly, PolyError> {
        if hom_var >= self.num_vars {
            return Err(PolyError::VarOutOfRange(hom_var, self.num_vars));
        }
        if self.terms.keys().any(|m| m.exponents()[hom_var] > 0) {
            return Err(PolyError::HomVarOccurs(hom_var));
        }
        let target = self.total_degree();
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (m, c) in self.terms() {
            let mut exps = m.exponents().to_vec();
            exps[hom_var] = target - m.total_degree();
            out.add_term(exps, c.clone());
        }
        Ok(out)
    }

    /// Substitute 1 for the given variable, merging terms.
    pub fn set_var_to_one(&self, var: usize) -> Poly {
        assert!(var < self.num_vars);
        let mut out = Poly::zero(&self.ctx, self.num_vars);
        for (m, c) in self.terms() {
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Reinterpret the polynomial in a ring with extra trailing variables.
    pub fn extend_vars(&self, num_vars: usize) -> Poly {
        assert!(num_vars >= self.num_vars);
        let mut out = Poly::zero(&self.ctx, num_vars);
        for (m, c) in self.terms() {
            let mut exps = m.exponents().to_vec();
            exps.resize(num_vars, 0);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Map the coefficients into another context (identity, or prime field
    /// into an extension of the same characteristic).
    pub fn lift_to(&self, target: &FieldCtx) -> Result<Poly, crate::field::FieldError> {
        let mut out = Poly::zero(target, self.num_vars);
        for (m, c) in self.terms() {
            out.add_term(m.exponents().to_vec(), target.embed(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{e}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{} {}", c, vars.join(" "))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::rationals()
    }

    /// x0^2 - x1^2 in `n` variables.
    fn diff_of_squares(ctx: &FieldCtx, n: usize) -> Poly {
        let x0 = Poly::var(ctx, n, 0);
        let x1 = Poly::var(ctx, n, 1);
        x0.mul(&x0).sub(&x1.mul(&x1))
    }

    fn pt(ctx: &FieldCtx, coords: &[i64]) -> Vec<FieldElem> {
        coords.iter().map(|&c| ctx.from_int(c)).collect()
    }

    #[test]
    fn eval_difference_of_squares() {
        let ctx = q();
        let f = diff_of_squares(&ctx, 2);
        assert!(f.eval(&pt(&ctx, &[1, 1])).unwrap().is_zero());

        let f5 = FieldCtx::prime(5).unwrap();
        let g = diff_of_squares(&f5, 2);
        assert_eq!(g.eval(&pt(&f5, &[1, 2])).unwrap(), f5.from_int(2));
    }

    #[test]
    fn eval_disjunction_gadget_shape() {
        // (x1+x0)^2 - (x2+x0)(x3+x0) at (1,-1,1,1) = 0 - 4 = -4.
        let ctx = q();
        let x = |i| Poly::var(&ctx, 4, i);
        let lhs = x(1).add(&x(0));
        let f = lhs.mul(&lhs).sub(&x(2).add(&x(0)).mul(&x(3).add(&x(0))));
        assert_eq!(
            f.eval(&pt(&ctx, &[1, -1, 1, 1])).unwrap(),
            ctx.from_int(-4)
        );
    }

    #[test]
    fn eval_arity_mismatch() {
        let ctx = q();
        let f = diff_of_squares(&ctx, 2);
        assert_eq!(
            f.eval(&pt(&ctx, &[1])).unwrap_err(),
            PolyError::ArityMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn homogenize_x6_minus_1() {
        // x^6 - 1 homogenized with y gives x^6 - y^6.
        let ctx = q();
        let f = Poly::from_terms(
            &ctx,
            2,
            [
                (vec![6, 0], ctx.one()),
                (vec![0, 0], ctx.from_int(-1)),
            ],
        );
        let h = f.homogenize(1).unwrap();
        let expected = Poly::from_terms(
            &ctx,
            2,
            [
                (vec![6, 0], ctx.one()),
                (vec![0, 6], ctx.from_int(-1)),
            ],
        );
        assert_eq!(h, expected);
        assert_eq!(h.check_homogeneous(), Some(6));
    }

    #[test]
    fn homogenize_constant_and_quadratic() {
        let ctx = q();
        let one = Poly::constant(&ctx, 2, ctx.one());
        assert_eq!(one.homogenize(1).unwrap(), one);

        // lambda^2 + lambda + 1 homogenized with x0 (var 1).
        let f = Poly::from_terms(
            &ctx,
            2,
            [
                (vec![2, 0], ctx.one()),
                (vec![1, 0], ctx.one()),
                (vec![0, 0], ctx.one()),
            ],
        );
        let h = f.homogenize(1).unwrap();
        let expected = Poly::from_terms(
            &ctx,
            2,
            [
                (vec![2, 0], ctx.one()),
                (vec![1, 1], ctx.one()),
                (vec![0, 2], ctx.one()),
            ],
        );
        assert_eq!(h, expected);
    }

    #[test]
    fn homogenize_rejects_used_variable() {
        let ctx = q();
        let f = diff_of_squares(&ctx, 2);
        assert_eq!(f.homogenize(0).unwrap_err(), PolyError::HomVarOccurs(0));
    }

    #[test]
    fn check_homogeneous_cases() {
        let ctx = q();
        assert_eq!(diff_of_squares(&ctx, 2).check_homogeneous(), Some(2));

        let mixed = Poly::from_terms(
            &ctx,
            2,
            [(vec![2, 0], ctx.one()), (vec![0, 1], ctx.from_int(-1))],
        );
        assert_eq!(mixed.check_homogeneous(), None);

        // w1 x1 + w2 x2 + 2 x3: all terms degree 1.
        let linear = Poly::from_terms(
            &ctx,
            3,
            [
                (vec![1, 0, 0], ctx.one()),
                (vec![0, 1, 0], ctx.one()),
                (vec![0, 0, 1], ctx.from_int(2)),
            ],
        );
        assert_eq!(linear.check_homogeneous(), Some(1));

        assert_eq!(Poly::zero(&ctx, 2).check_homogeneous(), Some(0));
    }

    #[test]
    fn graded_lex_term_order() {
        let ctx = q();
        let f = Poly::from_terms(
            &ctx,
            2,
            [
                (vec![0, 2], ctx.one()),
                (vec![2, 0], ctx.one()),
                (vec![1, 1], ctx.one()),
                (vec![0, 0], ctx.one()),
            ],
        );
        let order: Vec<Vec<u32>> = f.terms().map(|(m, _)| m.exponents().to_vec()).collect();
        assert_eq!(
            order,
            vec![vec![0, 0], vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    /// Deterministic pseudo-random polynomial for the ring-axiom suites.
    fn arbitrary_poly(ctx: &FieldCtx, num_vars: usize, seed: u64, terms: usize) -> Poly {
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut poly = Poly::zero(ctx, num_vars);
        for _ in 0..terms {
            let exps: Vec<u32> = (0..num_vars).map(|_| (next() % 3) as u32).collect();
            let coeff = ctx.from_int((next() % 7) as i64 - 3);
            poly.add_term(exps, coeff);
        }
        poly
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        for ctx in [q(), FieldCtx::prime(5).unwrap(), FieldCtx::finite(2, 2).unwrap()] {
            for seed in 0..12u64 {
                let f = arbitrary_poly(&ctx, 3, seed * 3 + 1, 4);
                let g = arbitrary_poly(&ctx, 3, seed * 3 + 2, 4);
                let h = arbitrary_poly(&ctx, 3, seed * 3 + 3, 4);
                assert_eq!(f.add(&g), g.add(&f));
                assert_eq!(f.mul(&g), g.mul(&f));
                assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
                assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
                assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            }
        }
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        let ctx = FieldCtx::prime(7).unwrap();
        for seed in 0..10u64 {
            let f = arbitrary_poly(&ctx, 3, seed * 5 + 1, 4);
            let g = arbitrary_poly(&ctx, 3, seed * 5 + 2, 4);
            let h = arbitrary_poly(&ctx, 3, seed * 5 + 3, 4);
            let point: Vec<FieldElem> = (0..3)
                .map(|i| ctx.from_int((seed as i64 * 7 + i) % 7))
                .collect();
            let direct = f.mul(&g).add(&h).eval(&point).unwrap();
            let composed = f
                .eval(&point)
                .unwrap()
                .mul(&g.eval(&point).unwrap())
                .add(&h.eval(&point).unwrap());
            assert_eq!(direct, composed);
        }
    }

    #[test]
    fn homogenize_then_dehomogenize_is_identity() {
        for ctx in [q(), FieldCtx::prime(3).unwrap()] {
            for seed in 0..20u64 {
                // Build in 3 variables, homogenize with a fresh 4th.
                let f = arbitrary_poly(&ctx, 3, seed + 100, 6).extend_vars(4);
                let h = f.homogenize(3).unwrap();
                assert!(h.check_homogeneous().is_some());
                assert_eq!(h.set_var_to_one(3), f);
            }
        }
    }

    #[test]
    fn homogeneous_scaling_law() {
        // For homogeneous f of degree d: f(c * point) = c^d * f(point).
        let ctx = FieldCtx::prime(11).unwrap();
        for seed in 0..10u64 {
            let f = arbitrary_poly(&ctx, 3, seed + 7, 5)
                .extend_vars(4)
                .homogenize(3)
                .unwrap();
            let d = f.check_homogeneous().unwrap();
            let point = pt(&ctx, &[2, 3, 5, 7]);
            for c in 1..11i64 {
                let c = ctx.from_int(c);
                let scaled: Vec<FieldElem> = point.iter().map(|v| v.mul(&c)).collect();
                assert_eq!(
                    f.eval(&scaled).unwrap(),
                    c.pow(d as u64).mul(&f.eval(&point).unwrap())
                );
            }
        }
    }
}
