//! The sparse two-polynomial encoding of 3-CNF: each variable gets a prime,
//! literals become divisors of x^M - 1 (M the product of the primes),
//! clauses are least common multiples computed through cyclotomic support
//! sets, and the conjunction is folded into a single polynomial paired with
//! x^M - 1. Characteristic 0 only, and dense expansion is capped by a
//! configurable desk-scale bound on M.

use super::{CnfFormula, EncodeError};
use crate::field::FieldCtx;
use crate::nt::{divisors, first_primes};
use crate::poly::Poly;
use crate::system::{Metadata, PolySystem};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

pub const METHOD: &str = "plaisted";

/// Default cap on M = product of the variable primes.
pub const DEFAULT_MAX_MODULUS: u64 = 1_000_000;

/// Dense univariate polynomial over the integers, ascending coefficients,
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> IntPoly {
        IntPoly::from_i64(&[1])
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    /// Division with remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("divisor must be nonzero");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                quot[k - d] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] -= &c * b;
                }
            }
            rem.pop();
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Does `divisor` divide `self` exactly? Works for any nonzero divisor
    /// by running the Euclidean step over the rationals.
    pub fn divisible_by(&self, divisor: &IntPoly) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        rational_rem(&to_rational(self), &to_rational(divisor))
            .iter()
            .all(Zero::is_zero)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Degree of gcd(self, other) over the rationals; None when both are 0.
    pub fn gcd_degree(&self, other: &IntPoly) -> Option<usize> {
        let mut a = to_rational(self);
        let mut b = to_rational(other);
        while !b.is_empty() {
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        a.len().checked_sub(1)
    }
}

fn to_rational(poly: &IntPoly) -> Vec<BigRational> {
    poly.coeffs
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect()
}

/// Remainder of a by b over the rationals (coefficient vectors, ascending,
/// trailing zeros trimmed).
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let d = b.len() - 1;
    let lead = b[d].clone();
    while rem.len() > d {
        let k = rem.len() - 1;
        let c = rem[k].clone() / lead.clone();
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let idx = k - d + i;
                rem[idx] -= &c * bc;
            }
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

/// The n-th cyclotomic polynomial via recursive division:
/// Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
pub fn cyclotomic(n: u64, cache: &mut BTreeMap<u64, IntPoly>) -> IntPoly {
    if let Some(hit) = cache.get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut poly = IntPoly::x_pow_minus_one(n as usize);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi = cyclotomic(d, cache);
            let (q, r) = poly.div_rem_monic(&phi);
            debug_assert!(r.is_zero(), "cyclotomic division is exact");
            poly = q;
        }
        poly
    };
    cache.insert(n, result.clone());
    result
}

/// Integer polynomial in supersparse form: big-integer exponents mapped to
/// integer coefficients, no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupersparsePoly {
    terms: BTreeMap<BigUint, BigInt>,
}

impl SupersparsePoly {
    pub fn zero() -> SupersparsePoly {
        SupersparsePoly::default()
    }

    pub fn add_term(&mut self, exponent: BigUint, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn from_terms<I>(terms: I) -> SupersparsePoly
    where
        I: IntoIterator<Item = (BigUint, BigInt)>,
    {
        let mut poly = SupersparsePoly::zero();
        for (e, c) in terms {
            poly.add_term(e, c);
        }
        poly
    }

    pub fn from_dense(dense: &IntPoly) -> SupersparsePoly {
        SupersparsePoly::from_terms(
            dense
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (BigUint::from(e), c.clone())),
        )
    }

    /// x^m - 1.
    pub fn x_pow_minus_one(m: &BigUint) -> SupersparsePoly {
        SupersparsePoly::from_terms([
            (m.clone(), BigInt::one()),
            (BigUint::zero(), BigInt::from(-1)),
        ])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    /// Dense expansion; errors if the degree exceeds `cap`.
    pub fn to_dense(&self, cap: u64) -> Result<IntPoly, EncodeError> {
        let degree = match self.degree() {
            None => return Ok(IntPoly::zero()),
            Some(d) => d,
        };
        let degree = u64::try_from(degree).map_err(|_| EncodeError::ExponentOverflow)?;
        if degree > cap {
            return Err(EncodeError::DeskScaleExceeded {
                modulus: BigUint::from(degree),
                cap,
            });
        }
        let mut coeffs = vec![BigInt::zero(); degree as usize + 1];
        for (e, c) in self.terms() {
            coeffs[u64::try_from(e).expect("bounded by degree") as usize] = c.clone();
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let e = u64::try_from(e).expect("desk-scale exponent");
            let mut power = BigRational::one();
            for _ in 0..e {
                power *= x;
            }
            acc += BigRational::from(c.clone()) * power;
        }
        acc
    }
}

/// The cyclotomic support of a literal: the set of divisors d of M such
/// that Phi_d divides the literal polynomial. A positive literal with prime
/// p contributes x^(M/p) - 1 (support: divisors of M/p); a negative literal
/// contributes (x^M - 1)/(x^(M/p) - 1) (support: divisors of M that are
/// multiples of p; M is squarefree).
fn literal_support(lit: i32, primes: &[u64], m: u64) -> BTreeSet<u64> {
    let p = primes[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        divisors(m / p).into_iter().collect()
    } else {
        divisors(m).into_iter().filter(|d| d % p == 0).collect()
    }
}

/// The literal polynomial in closed form: x^(M/p) - 1 for a positive
/// literal, 1 + x^(M/p) + ... + x^((p-1)M/p) for a negative one.
fn literal_poly(lit: i32, primes: &[u64], m: u64) -> SupersparsePoly {
    let p = primes[lit.unsigned_abs() as usize - 1];
    let step = m / p;
    if lit > 0 {
        SupersparsePoly::from_terms([
            (BigUint::from(step), BigInt::one()),
            (BigUint::zero(), BigInt::from(-1)),
        ])
    } else {
        SupersparsePoly::from_terms(
            (0..p).map(|j| (BigUint::from(step * j), BigInt::one())),
        )
    }
}

fn checked_modulus(primes: &[u64], cap: u64) -> Result<u64, EncodeError> {
    let mut m: u64 = 1;
    let mut big = BigUint::one();
    let mut overflow = false;
    for &p in primes {
        big *= BigUint::from(p);
        match m.checked_mul(p) {
            Some(v) => m = v,
            None => overflow = true,
        }
    }
    if overflow || m > cap {
        return Err(EncodeError::DeskScaleExceeded { modulus: big, cap });
    }
    Ok(m)
}

/// The clause polynomial: the lcm of the literal polynomials, computed as a
/// product of cyclotomic polynomials over the union of the literal supports.
/// The result divides x^M - 1 and is squarefree.
pub fn plaisted_clause_poly(
    literals: &[i32],
    primes: &[u64],
    max_modulus: u64,
) -> Result<SupersparsePoly, EncodeError> {
    if literals.is_empty() {
        return Err(EncodeError::InvalidInstance("empty clause".into()));
    }
    {
        let mut sorted = primes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != primes.len() {
            return Err(EncodeError::InvalidInstance(
                "variable primes must be distinct".into(),
            ));
        }
    }
    let m = checked_modulus(primes, max_modulus)?;
    if literals.len() == 1 {
        return Ok(literal_poly(literals[0], primes, m));
    }
    let mut support = BTreeSet::new();
    for &lit in literals {
        support.extend(literal_support(lit, primes, m));
    }
    let mut cache = BTreeMap::new();
    let mut product = IntPoly::one();
    for d in support {
        product = product.mul(&cyclotomic(d, &mut cache));
    }
    Ok(SupersparsePoly::from_dense(&product))
}

/// Fold clause polynomials into the single conjunction polynomial
/// P(x) = x^M * sum_i P_i(x) P_i(1/x), returned together with x^M - 1.
/// All exponents of P lie in [0, 2M].
pub fn plaisted_conjunction(
    clause_polys: &[SupersparsePoly],
    m: &BigUint,
) -> (SupersparsePoly, SupersparsePoly) {
    let mut conjunction = SupersparsePoly::zero();
    for clause in clause_polys {
        assert!(
            clause.degree().is_none_or(|d| d <= m),
            "clause polynomial degree exceeds M"
        );
        for (e1, c1) in clause.terms() {
            for (e2, c2) in clause.terms() {
                // x^M * x^e1 * x^-e2; e2 <= deg <= M keeps this nonnegative.
                let exponent = m + e1 - e2;
                conjunction.add_term(exponent, c1 * c2);
            }
        }
    }
    (conjunction, SupersparsePoly::x_pow_minus_one(m))
}

/// Encode a CNF formula as the pair (P, x^M - 1): primes 2, 3, 5, ... are
/// assigned to X_1, X_2, ... and M is their product, capped at desk scale.
pub fn plaisted_pair(
    phi: &CnfFormula,
    max_modulus: u64,
) -> Result<(SupersparsePoly, SupersparsePoly), EncodeError> {
    let primes = first_primes(phi.num_vars());
    let m = checked_modulus(&primes, max_modulus)?;
    let clause_polys = phi
        .clauses()
        .iter()
        .map(|clause| plaisted_clause_poly(clause, &primes, max_modulus))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(plaisted_conjunction(&clause_polys, &BigUint::from(m)))
}

/// Homogenize a supersparse pair with a second variable y, yielding a
/// two-polynomial homogeneous bivariate system over the rationals. The pair
/// has a nontrivial common projective root iff the univariate pair has a
/// common root: both polynomials keep their leading coefficients, so y = 0
/// only meets the trivial root.
pub fn plaisted_homogenize(
    pair: &(SupersparsePoly, SupersparsePoly),
) -> Result<PolySystem, EncodeError> {
    let ctx = FieldCtx::rationals();
    let homogenize_one = |poly: &SupersparsePoly| -> Result<Poly, EncodeError> {
        let degree = match poly.degree() {
            None => return Ok(Poly::zero(&ctx, 2)),
            Some(d) => u32::try_from(d).map_err(|_| EncodeError::ExponentOverflow)?,
        };
        let mut out = Poly::zero(&ctx, 2);
        for (e, c) in poly.terms() {
            let e = u32::try_from(e).expect("bounded by degree");
            out.add_term(vec![e, degree - e], ctx.from_bigint(c));
        }
        Ok(out)
    };
    let p = homogenize_one(&pair.0)?;
    let q = homogenize_one(&pair.1)?;
    let mut system = PolySystem::homogeneous(&ctx, vec!["x".into(), "y".into()], vec![p, q])
        .expect("homogenization yields homogeneous polynomials");
    system.metadata_mut().set(Metadata::METHOD, METHOD);
    Ok(system)
}

/// Full pipeline: CNF to the homogenized two-polynomial system.
pub fn plaisted_system(phi: &CnfFormula, max_modulus: u64) -> Result<PolySystem, EncodeError> {
    let pair = plaisted_pair(phi, max_modulus)?;
    plaisted_homogenize(&pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(pairs: &[(u64, i64)]) -> SupersparsePoly {
        SupersparsePoly::from_terms(
            pairs
                .iter()
                .map(|&(e, c)| (BigUint::from(e), BigInt::from(c))),
        )
    }

    #[test]
    fn cyclotomic_small() {
        let mut cache = BTreeMap::new();
        assert_eq!(cyclotomic(1, &mut cache), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2, &mut cache), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3, &mut cache), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(6, &mut cache), IntPoly::from_i64(&[1, -1, 1]));
        // Product over all divisors reassembles x^n - 1.
        for n in [4u64, 6, 12, 30] {
            let mut product = IntPoly::one();
            for d in divisors(n) {
                product = product.mul(&cyclotomic(d, &mut cache));
            }
            assert_eq!(product, IntPoly::x_pow_minus_one(n as usize));
        }
    }

    #[test]
    fn positive_literal_is_x_cubed_minus_one() {
        // X gets prime 2 with primes {2, 3}: x^(6/2) - 1 = x^3 - 1.
        let p = plaisted_clause_poly(&[1], &[2, 3], 100).unwrap();
        assert_eq!(p, sparse(&[(3, 1), (0, -1)]));
    }

    #[test]
    fn negative_literal_is_geometric_sum() {
        // not Y with prime 3: 1 + x^2 + x^4.
        let p = plaisted_clause_poly(&[-2], &[2, 3], 100).unwrap();
        assert_eq!(p, sparse(&[(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn disjunction_is_lcm() {
        // X or Y: lcm(x^3 - 1, x^2 - 1) = (x^2 - 1)(x^2 + x + 1).
        let p = plaisted_clause_poly(&[1, 2], &[2, 3], 100).unwrap();
        let expected = IntPoly::from_i64(&[-1, 0, 1]).mul(&IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(p, SupersparsePoly::from_dense(&expected));
    }

    #[test]
    fn literal_formulas_match_cyclotomic_route() {
        // The closed-form literal polynomials equal the product of the
        // cyclotomic polynomials in their support set.
        for primes in [vec![2u64, 3], vec![2, 3, 5]] {
            let m: u64 = primes.iter().product();
            for var in 1..=primes.len() as i32 {
                for lit in [var, -var] {
                    let direct = literal_poly(lit, &primes, m);
                    let mut cache = BTreeMap::new();
                    let mut product = IntPoly::one();
                    for d in literal_support(lit, &primes, m) {
                        product = product.mul(&cyclotomic(d, &mut cache));
                    }
                    assert_eq!(direct, SupersparsePoly::from_dense(&product), "lit {lit}");
                }
            }
        }
    }

    #[test]
    fn clause_polys_divide_and_are_squarefree() {
        let primes = [2u64, 3, 5];
        let m: u64 = 30;
        let clauses: Vec<Vec<i32>> = vec![
            vec![1],
            vec![-1],
            vec![1, 2],
            vec![1, -2],
            vec![-1, -2, 3],
            vec![1, 2, 3],
        ];
        for clause in clauses {
            let poly = plaisted_clause_poly(&clause, &primes, 100).unwrap();
            let dense = poly.to_dense(2 * m).unwrap();
            assert!(
                IntPoly::x_pow_minus_one(m as usize).divisible_by(&dense),
                "clause {clause:?} does not divide x^M - 1"
            );
            assert_eq!(
                dense.gcd_degree(&dense.derivative()),
                Some(0),
                "clause {clause:?} is not squarefree"
            );
        }
    }

    #[test]
    fn worked_example_conjunction() {
        // (X v Y) & (not X) & (not Y) with primes 2 and 3.
        let primes = [2u64, 3];
        let clause_polys = vec![
            plaisted_clause_poly(&[1, 2], &primes, 100).unwrap(),
            plaisted_clause_poly(&[-1], &primes, 100).unwrap(),
            plaisted_clause_poly(&[-2], &primes, 100).unwrap(),
        ];
        assert_eq!(clause_polys[1], sparse(&[(0, 1), (3, 1)]));
        let (p, xm1) = plaisted_conjunction(&clause_polys, &BigUint::from(6u64));
        assert_eq!(
            p,
            sparse(&[(3, -1), (4, 1), (5, 2), (6, 9), (7, 2), (8, 1), (9, -1)])
        );
        assert_eq!(xm1, sparse(&[(6, 1), (0, -1)]));
    }

    #[test]
    fn empty_conjunction_is_zero() {
        let (p, xm1) = plaisted_conjunction(&[], &BigUint::from(6u64));
        assert!(p.is_zero());
        assert_eq!(xm1, sparse(&[(6, 1), (0, -1)]));
    }

    #[test]
    fn single_clause_conjunction() {
        // x^6 (x^3 - 1)(x^-3 - 1) = 2x^6 - x^3 - x^9.
        let clause = plaisted_clause_poly(&[1], &[2, 3], 100).unwrap();
        let (p, _) = plaisted_conjunction(&[clause], &BigUint::from(6u64));
        assert_eq!(p, sparse(&[(6, 2), (3, -1), (9, -1)]));
    }

    #[test]
    fn conjunction_is_reciprocal_up_to_degree_2m() {
        // P(x) = x^(2M) P(1/x) at sample rational points: each summand
        // x^M Q(x) Q(1/x) is invariant under x -> 1/x times x^(2M).
        let phi = CnfFormula::new(2, vec![vec![1, 2], vec![-1], vec![-2]]).unwrap();
        let (p, _) = plaisted_pair(&phi, 100).unwrap();
        let samples = [(2i64, 1i64), (3, 2), (-1, 3), (5, 7), (-4, 9)];
        for (num, den) in samples {
            let x = BigRational::new(BigInt::from(num), BigInt::from(den));
            let inv = x.recip();
            let mut scale = BigRational::one();
            for _ in 0..12 {
                scale *= &x;
            }
            assert_eq!(p.eval_rational(&x), scale * p.eval_rational(&inv));
        }
    }

    #[test]
    fn desk_scale_cap_is_enforced() {
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            plaisted_pair(&phi, 29),
            Err(EncodeError::DeskScaleExceeded { .. })
        ));
        assert!(plaisted_pair(&phi, 30).is_ok());
    }

    #[test]
    fn homogenized_pair_shape() {
        let pair = (
            sparse(&[(6, 1), (0, -1)]),
            sparse(&[(6, 1), (0, -1)]),
        );
        let system = plaisted_homogenize(&pair).unwrap();
        assert_eq!(system.degrees(), &[6, 6]);
        assert_eq!(system.var_names(), &["x".to_string(), "y".to_string()]);
    }
}
