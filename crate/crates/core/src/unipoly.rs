//! Dense univariate polynomials over a prime field, as used for extension
//! moduli: arithmetic, gcd, the Rabin irreducibility test, and deterministic
//! construction of irreducible polynomials by lexicographic search.

use crate::nt::{is_prime, mul_mod, prime_divisors};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UniPolyError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must have degree >= 1")]
    DegreeTooSmall,
    #[error("mismatched characteristics {0} and {1}")]
    MixedCharacteristic(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// A dense univariate polynomial over F_p. Coefficients are stored in
/// ascending degree order with no trailing zeros, so the zero polynomial is
/// the empty vector and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(p >= 2);
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    /// The monomial X.
    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Coefficients in ascending degree order, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        ModPoly::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.p + self.coeff(i) - other.coeff(i)) % self.p)
            .collect();
        ModPoly::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let c = c % self.p;
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    /// Euclidean division, `self = q * divisor + r` with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &ModPoly) -> Result<(ModPoly, ModPoly), UniPolyError> {
        debug_assert_eq!(self.p, divisor.p);
        let d = divisor.degree().ok_or(UniPolyError::DivisionByZero)?;
        let lead_inv = inv_mod(divisor.coeffs[d], self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = mul_mod(rem[k], lead_inv, self.p);
            if c != 0 {
                quot[k - d] = c;
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    rem[idx] = (self.p + rem[idx] - mul_mod(c, b, self.p)) % self.p;
                }
            }
            rem.pop();
        }
        Ok((ModPoly::new(self.p, quot), ModPoly::new(self.p, rem)))
    }

    pub fn rem(&self, divisor: &ModPoly) -> Result<ModPoly, UniPolyError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead_inv = inv_mod(a.coeffs[d], a.p);
            a = a.scale(lead_inv);
        }
        a
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &ModPoly) -> ModPoly {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = ModPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus).expect("nonzero modulus");
            }
            base = base.mul(&base).rem(modulus).expect("nonzero modulus");
            e >>= 1;
        }
        acc
    }

    /// `self^(p^k) mod modulus`: k-fold Frobenius, avoiding huge exponents.
    fn frobenius_iterate(&self, k: u32, modulus: &ModPoly) -> ModPoly {
        let mut acc = self.rem(modulus).expect("nonzero modulus");
        for _ in 0..k {
            acc = acc.pow_mod(self.p, modulus);
        }
        acc
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::nt::pow_mod(a, p - 2, p)
}

/// Rabin's irreducibility test for a monic polynomial over F_p: P of degree
/// N is irreducible iff X^(p^N) = X (mod P) and, for every prime q | N,
/// gcd(X^(p^(N/q)) - X, P) = 1.
pub fn rabin_irreducible(poly: &ModPoly) -> Result<bool, UniPolyError> {
    if !is_prime(poly.characteristic()) {
        return Err(UniPolyError::NonPrimeCharacteristic(poly.characteristic()));
    }
    if !poly.is_monic() {
        return Err(UniPolyError::NotMonic);
    }
    let n = poly.degree().unwrap() as u64;
    if n == 0 {
        return Err(UniPolyError::DegreeTooSmall);
    }
    let x = ModPoly::x(poly.characteristic());
    for q in prime_divisors(n) {
        let xq = x.frobenius_iterate((n / q) as u32, poly);
        let g = xq.sub(&x).gcd(poly);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    let xn = x.frobenius_iterate(n as u32, poly);
    Ok(xn == x.rem(poly).expect("nonzero modulus"))
}

/// The lexicographically first monic irreducible polynomial of degree `n`
/// over F_p. Candidates X^n + c_{n-1}X^(n-1) + ... + c_0 are ordered by the
/// tuple (c_{n-1}, ..., c_1, c_0), so the output is a deterministic function
/// of (p, n).
pub fn find_irreducible(p: u64, n: usize) -> Result<ModPoly, UniPolyError> {
    if !is_prime(p) {
        return Err(UniPolyError::NonPrimeCharacteristic(p));
    }
    if n == 0 {
        return Err(UniPolyError::DegreeTooSmall);
    }
    let mut digits = vec![0u64; n]; // digits[i] = coefficient of X^(n-1-i)
    loop {
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        for (i, &d) in digits.iter().enumerate() {
            coeffs[n - 1 - i] = d;
        }
        let candidate = ModPoly::new(p, coeffs);
        if rabin_irreducible(&candidate)? {
            return Ok(candidate);
        }
        // Odometer increment with the last digit (the constant term) fastest.
        let mut i = n;
        loop {
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists over F_p");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}
