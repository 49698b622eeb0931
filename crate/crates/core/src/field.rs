//! Exact field arithmetic over the rationals, prime fields F_p, and
//! extensions F_p[X]/(P).
//!
//! A [`FieldCtx`] describes the coefficient domain; a [`FieldElem`] is a
//! value in canonical form (reduced fraction with positive denominator, or a
//! residue polynomial of degree below the extension degree). Elements carry
//! their context so mixed-domain operations are caught instead of silently
//! computing nonsense.

use crate::nt::{is_prime, mul_mod, pow_mod};
use crate::unipoly::{rabin_irreducible, ModPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed field contexts: {0} vs {1}")]
    MixedContexts(String, String),
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension modulus must be monic of degree >= 1")]
    BadModulus,
    #[error("extension modulus is reducible")]
    ReducibleModulus,
    #[error("characteristic zero does not carry an extension modulus")]
    RationalExtension,
    #[error("operation requires a finite field, context is {0}")]
    NotFinite(String),
    #[error("no embedding of {0} into {1}")]
    NoEmbedding(String, String),
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum CtxInner {
    Rational,
    Prime(u64),
    Extension { p: u64, modulus: ModPoly },
}

/// The coefficient domain: Q, F_p, or F_p[X]/(P).
#[derive(Debug, Clone)]
pub struct FieldCtx(Arc<CtxInner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldCtx {}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            CtxInner::Rational => write!(f, "Q"),
            CtxInner::Prime(p) => write!(f, "F_{p}"),
            CtxInner::Extension { p, modulus } => {
                write!(f, "F_{p}[t]/({})", modpoly_to_string(modulus))
            }
        }
    }
}

impl FieldCtx {
    /// The rational numbers (characteristic 0).
    pub fn rationals() -> FieldCtx {
        FieldCtx(Arc::new(CtxInner::Rational))
    }

    /// The prime field F_p. Primality is verified.
    pub fn prime(p: u64) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        Ok(FieldCtx(Arc::new(CtxInner::Prime(p))))
    }

    /// The extension F_p[X]/(modulus). The modulus must be monic of degree
    /// >= 1 and pass the irreducibility test.
    pub fn extension(p: u64, modulus: ModPoly) -> Result<FieldCtx, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if modulus.characteristic() != p || !modulus.is_monic() || modulus.degree() == Some(0) {
            return Err(FieldError::BadModulus);
        }
        if !rabin_irreducible(&modulus).map_err(|_| FieldError::BadModulus)? {
            return Err(FieldError::ReducibleModulus);
        }
        Ok(FieldCtx(Arc::new(CtxInner::Extension { p, modulus })))
    }

    /// The field with p^k elements, using the lexicographically first
    /// irreducible modulus when k > 1.
    pub fn finite(p: u64, k: usize) -> Result<FieldCtx, FieldError> {
        if k <= 1 {
            FieldCtx::prime(p)
        } else {
            let modulus =
                crate::unipoly::find_irreducible(p, k).map_err(|_| FieldError::BadModulus)?;
            FieldCtx::extension(p, modulus)
        }
    }

    /// 0 for the rationals, p otherwise.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            CtxInner::Rational => 0,
            CtxInner::Prime(p) => *p,
            CtxInner::Extension { p, .. } => *p,
        }
    }

    pub fn extension_modulus(&self) -> Option<&ModPoly> {
        match &*self.0 {
            CtxInner::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// Degree of the field over its prime subfield (1 when no extension).
    pub fn extension_degree(&self) -> usize {
        match &*self.0 {
            CtxInner::Extension { modulus, .. } => modulus.degree().unwrap(),
            _ => 1,
        }
    }

    /// Number of elements; None for characteristic 0 or on u128 overflow.
    pub fn order(&self) -> Option<u128> {
        match &*self.0 {
            CtxInner::Rational => None,
            CtxInner::Prime(p) => Some(*p as u128),
            CtxInner::Extension { p, modulus } => {
                let mut acc: u128 = 1;
                for _ in 0..modulus.degree().unwrap() {
                    acc = acc.checked_mul(*p as u128)?;
                }
                Some(acc)
            }
        }
    }

    pub fn zero(&self) -> FieldElem {
        match &*self.0 {
            CtxInner::Rational => self.elem(Repr::Rational(BigRational::zero())),
            CtxInner::Prime(_) => self.elem(Repr::Prime(0)),
            CtxInner::Extension { .. } => self.elem(Repr::Ext(vec![])),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        match &*self.0 {
            CtxInner::Rational => self.elem(Repr::Rational(BigRational::from(BigInt::from(n)))),
            CtxInner::Prime(p) => self.elem(Repr::Prime(n.rem_euclid(*p as i64) as u64)),
            CtxInner::Extension { p, .. } => {
                let c = n.rem_euclid(*p as i64) as u64;
                self.elem(Repr::Ext(if c == 0 { vec![] } else { vec![c] }))
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match &*self.0 {
            CtxInner::Rational => self.elem(Repr::Rational(BigRational::from(n.clone()))),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = ((n % &p) + &p) % &p;
                let c: u64 = r.try_into().expect("residue fits u64");
                self.from_int_residue(c)
            }
        }
    }

    fn from_int_residue(&self, c: u64) -> FieldElem {
        match &*self.0 {
            CtxInner::Rational => unreachable!(),
            CtxInner::Prime(p) => self.elem(Repr::Prime(c % p)),
            CtxInner::Extension { p, .. } => {
                let c = c % p;
                self.elem(Repr::Ext(if c == 0 { vec![] } else { vec![c] }))
            }
        }
    }

    /// Exact rational with the given numerator and denominator.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElem, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match &*self.0 {
            CtxInner::Rational => Ok(self.elem(Repr::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
            _ => self.from_int(num).div(&self.from_int(den)),
        }
    }

    pub fn from_rational(&self, r: BigRational) -> Result<FieldElem, FieldError> {
        match &*self.0 {
            CtxInner::Rational => Ok(self.elem(Repr::Rational(r))),
            _ => self
                .from_bigint(r.numer())
                .div(&self.from_bigint(r.denom())),
        }
    }

    /// Element from residue-polynomial coefficients (ascending powers of the
    /// extension generator). Requires a finite context.
    pub fn from_residue(&self, coeffs: &[u64]) -> Result<FieldElem, FieldError> {
        match &*self.0 {
            CtxInner::Rational => Err(FieldError::NotFinite(self.to_string())),
            CtxInner::Prime(p) => {
                if coeffs.iter().skip(1).any(|&c| c % p != 0) {
                    return Err(FieldError::NoEmbedding(
                        "extension element".into(),
                        self.to_string(),
                    ));
                }
                Ok(self.elem(Repr::Prime(coeffs.first().copied().unwrap_or(0) % p)))
            }
            CtxInner::Extension { p, modulus } => {
                let poly = ModPoly::new(*p, coeffs.to_vec());
                let reduced = poly.rem(modulus).expect("nonzero modulus");
                Ok(self.elem(Repr::Ext(reduced.coeffs().to_vec())))
            }
        }
    }

    /// The residue class of X in an extension context.
    pub fn generator(&self) -> Result<FieldElem, FieldError> {
        match &*self.0 {
            CtxInner::Extension { .. } => self.from_residue(&[0, 1]),
            _ => Err(FieldError::NotFinite(format!("{self} has no generator"))),
        }
    }

    /// The idx-th element in the canonical enumeration (base-p digits of idx
    /// as residue coefficients). idx must be below the field order.
    pub fn element_from_index(&self, idx: u128) -> Result<FieldElem, FieldError> {
        let order = self.order().ok_or(FieldError::NotFinite(self.to_string()))?;
        assert!(idx < order, "element index out of range");
        let p = self.characteristic() as u128;
        let mut digits = Vec::new();
        let mut k = idx;
        while k > 0 {
            digits.push((k % p) as u64);
            k /= p;
        }
        self.from_residue(&digits)
    }

    /// Iterator over every element of a finite field.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElem> + '_, FieldError> {
        let order = self.order().ok_or(FieldError::NotFinite(self.to_string()))?;
        Ok((0..order).map(move |i| self.element_from_index(i).expect("index in range")))
    }

    /// Embed an element of the prime subfield (or of this context itself)
    /// into this context.
    pub fn embed(&self, elem: &FieldElem) -> Result<FieldElem, FieldError> {
        if elem.ctx == *self {
            return Ok(elem.clone());
        }
        match (&*elem.ctx.0, &*self.0) {
            (CtxInner::Prime(p), CtxInner::Extension { p: q, .. }) if p == q => match elem.repr {
                Repr::Prime(c) => self.from_residue(&[c]),
                _ => unreachable!(),
            },
            _ => Err(FieldError::NoEmbedding(
                elem.ctx.to_string(),
                self.to_string(),
            )),
        }
    }

    fn elem(&self, repr: Repr) -> FieldElem {
        FieldElem {
            ctx: self.clone(),
            repr,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Reduced fraction, positive denominator (maintained by BigRational).
    Rational(BigRational),
    /// Residue in [0, p).
    Prime(u64),
    /// Residue polynomial of degree < N, ascending, trailing zeros trimmed.
    Ext(Vec<u64>),
}

/// An element of Q, F_p, or F_p[X]/(P), in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    ctx: FieldCtx,
    repr: Repr,
}

/// The four rational operations, as a selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Validated arithmetic dispatch: checks that the operands share a context
/// and that division is by a nonzero element.
pub fn field_arith(a: &FieldElem, b: &FieldElem, op: FieldOp) -> Result<FieldElem, FieldError> {
    if a.ctx != b.ctx {
        return Err(FieldError::MixedContexts(
            a.ctx.to_string(),
            b.ctx.to_string(),
        ));
    }
    match op {
        FieldOp::Add => Ok(a.add(b)),
        FieldOp::Sub => Ok(a.sub(b)),
        FieldOp::Mul => Ok(a.mul(b)),
        FieldOp::Div => a.div(b),
    }
}

impl FieldElem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime(c) => *c == 0,
            Repr::Ext(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Prime(c) => *c == 1,
            Repr::Ext(v) => v == &[1],
        }
    }

    /// The rational value, for characteristic-0 elements.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Residue-polynomial coefficients (constant first) for finite-field
    /// elements; a prime-field residue is a length <= 1 vector.
    pub fn residue_coeffs(&self) -> Option<Vec<u64>> {
        match &self.repr {
            Repr::Rational(_) => None,
            Repr::Prime(c) => Some(if *c == 0 { vec![] } else { vec![*c] }),
            Repr::Ext(v) => Some(v.clone()),
        }
    }

    fn assert_same_ctx(&self, other: &FieldElem) {
        assert!(
            self.ctx == other.ctx,
            "mixed field contexts: {} vs {}",
            self.ctx,
            other.ctx
        );
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        self.assert_same_ctx(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Prime(a), Repr::Prime(b)) => {
                Repr::Prime((a + b) % self.ctx.characteristic())
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let p = self.ctx.characteristic();
                let pa = ModPoly::new(p, a.clone());
                let pb = ModPoly::new(p, b.clone());
                Repr::Ext(pa.add(&pb).coeffs().to_vec())
            }
            _ => unreachable!("context equality implies matching repr"),
        };
        self.ctx.elem(repr)
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Prime(a) => {
                let p = self.ctx.characteristic();
                Repr::Prime((p - a) % p)
            }
            Repr::Ext(a) => {
                let p = self.ctx.characteristic();
                let mut v: Vec<u64> = a.iter().map(|&c| (p - c) % p).collect();
                while v.last() == Some(&0) {
                    v.pop();
                }
                Repr::Ext(v)
            }
        };
        self.ctx.elem(repr)
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        self.assert_same_ctx(other);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Prime(a), Repr::Prime(b)) => {
                Repr::Prime(mul_mod(*a, *b, self.ctx.characteristic()))
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let p = self.ctx.characteristic();
                let modulus = self.ctx.extension_modulus().unwrap();
                let pa = ModPoly::new(p, a.clone());
                let pb = ModPoly::new(p, b.clone());
                let prod = pa.mul(&pb).rem(modulus).expect("nonzero modulus");
                Repr::Ext(prod.coeffs().to_vec())
            }
            _ => unreachable!("context equality implies matching repr"),
        };
        self.ctx.elem(repr)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(a.recip()),
            Repr::Prime(a) => {
                let p = self.ctx.characteristic();
                Repr::Prime(pow_mod(*a, p - 2, p))
            }
            Repr::Ext(a) => {
                let p = self.ctx.characteristic();
                let modulus = self.ctx.extension_modulus().unwrap();
                let inv = modpoly_inverse(&ModPoly::new(p, a.clone()), modulus)
                    .expect("nonzero element of a field");
                Repr::Ext(inv.coeffs().to_vec())
            }
        };
        Ok(self.ctx.elem(repr))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, FieldError> {
        self.assert_same_ctx(other);
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
fn modpoly_inverse(a: &ModPoly, modulus: &ModPoly) -> Option<ModPoly> {
    let p = a.characteristic();
    let (mut r0, mut r1) = (modulus.clone(), a.rem(modulus).ok()?);
    let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).ok()?;
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    let d = r0.degree()?;
    if d != 0 {
        return None; // not coprime with the modulus
    }
    let lead_inv = pow_mod(r0.coeffs()[0], p - 2, p);
    Some(t0.scale(lead_inv).rem(modulus).ok()?)
}

/// Render a residue polynomial in the generator variable `t`, highest power
/// first, e.g. `2t^2+t+4`.
pub(crate) fn modpoly_to_string(poly: &ModPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, &c) in poly.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        };
        parts.push(part);
    }
    parts.join("+")
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Prime(c) => write!(f, "{c}"),
            Repr::Ext(v) => write!(
                f,
                "{}",
                modpoly_to_string(&ModPoly::new(self.ctx.characteristic(), v.clone()))
            ),
        }
    }
}

impl fmt::Display for FieldOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FieldOp::Add => "add",
            FieldOp::Sub => "sub",
            FieldOp::Mul => "mul",
            FieldOp::Div => "div",
        };
        write!(f, "{s}")
    }
}

/// Is -1 a square, etc.: solve b^r = value by exhaustive search in a finite
/// field. Desk-scale only; returns the first match in enumeration order.
pub fn nth_root_in(value: &FieldElem, r: u64) -> Option<FieldElem> {
    let ctx = value.ctx();
    let order = ctx.order()?;
    if order > 1 << 20 {
        return None;
    }
    (0..order)
        .map(|i| ctx.element_from_index(i).expect("index in range"))
        .find(|b| b.pow(r) == *value)
}
