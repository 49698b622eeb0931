//! Ordered systems of polynomials with a variable roster, plus the
//! provenance metadata that travels with encoded and squared systems.

use crate::field::{FieldCtx, FieldElem};
use crate::poly::{Poly, PolyError};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("a system needs at least one polynomial")]
    Empty,
    #[error("a system needs at least one variable")]
    NoVariables,
    #[error("polynomial {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("polynomial {index} expects {poly_vars} variables, roster has {roster_vars}")]
    ArityMismatch {
        index: usize,
        poly_vars: usize,
        roster_vars: usize,
    },
    #[error("polynomial {index} has a different coefficient context")]
    ContextMismatch { index: usize },
    #[error("duplicate variable name {0}")]
    DuplicateVariable(String),
}

/// Provenance and free-form header metadata attached to a system. Entries
/// keep their insertion order so emitted files are stable, and unknown keys
/// survive a parse/emit round trip.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata {
    entries: Vec<(String, String)>,
}

impl Metadata {
    pub const METHOD: &'static str = "method";
    pub const SEED: &'static str = "seed";
    pub const RNG: &'static str = "rng";
    pub const LAMBDA: &'static str = "lambda";
    pub const MODULUS: &'static str = "modulus";
    pub const BOOL_VARS: &'static str = "bool-vars";

    pub fn new() -> Metadata {
        Metadata::default()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Insert or replace a key, preserving first-insertion position.
    pub fn set(&mut self, key: &str, value: impl Into<String>) {
        let value = value.into();
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Ordered list of polynomials over a shared context and variable roster.
///
/// The homogeneous constructor checks every polynomial; the affine one is
/// the escape hatch for the projective-to-affine reduction, whose appended
/// polynomial is deliberately inhomogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    ctx: FieldCtx,
    var_names: Vec<String>,
    polys: Vec<Poly>,
    degrees: Vec<u32>,
    homogeneous: bool,
    metadata: Metadata,
}

impl PolySystem {
    /// Build a homogeneous system; every polynomial must pass the
    /// homogeneity check (the zero polynomial counts with degree 0).
    pub fn homogeneous(
        ctx: &FieldCtx,
        var_names: Vec<String>,
        polys: Vec<Poly>,
    ) -> Result<PolySystem, SystemError> {
        let mut system = PolySystem::affine(ctx, var_names, polys)?;
        for (index, poly) in system.polys.iter().enumerate() {
            match poly.check_homogeneous() {
                Some(d) => system.degrees[index] = d,
                None => return Err(SystemError::NonHomogeneous { index }),
            }
        }
        system.homogeneous = true;
        Ok(system)
    }

    /// Build a system without the homogeneity requirement. Degrees record
    /// the total degree of each polynomial.
    pub fn affine(
        ctx: &FieldCtx,
        var_names: Vec<String>,
        polys: Vec<Poly>,
    ) -> Result<PolySystem, SystemError> {
        if polys.is_empty() {
            return Err(SystemError::Empty);
        }
        if var_names.is_empty() {
            return Err(SystemError::NoVariables);
        }
        for (i, name) in var_names.iter().enumerate() {
            if var_names[..i].contains(name) {
                return Err(SystemError::DuplicateVariable(name.clone()));
            }
        }
        let mut degrees = Vec::with_capacity(polys.len());
        for (index, poly) in polys.iter().enumerate() {
            if poly.num_vars() != var_names.len() {
                return Err(SystemError::ArityMismatch {
                    index,
                    poly_vars: poly.num_vars(),
                    roster_vars: var_names.len(),
                });
            }
            if poly.ctx() != ctx {
                return Err(SystemError::ContextMismatch { index });
            }
            degrees.push(poly.total_degree());
        }
        Ok(PolySystem {
            ctx: ctx.clone(),
            var_names,
            polys,
            degrees,
            homogeneous: false,
            metadata: Metadata::new(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Per-polynomial degrees (homogeneous degree, or total degree for
    /// affine systems).
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_square(&self) -> bool {
        self.polys.len() == self.var_names.len()
    }

    pub fn metadata(&self) -> &Metadata {
        &self.metadata
    }

    pub fn metadata_mut(&mut self) -> &mut Metadata {
        &mut self.metadata
    }

    pub fn with_metadata(mut self, metadata: Metadata) -> PolySystem {
        self.metadata = metadata;
        self
    }

    pub fn eval_all(&self, point: &[FieldElem]) -> Result<Vec<FieldElem>, PolyError> {
        self.polys.iter().map(|p| p.eval(point)).collect()
    }

    /// Does every polynomial vanish at the point?
    pub fn is_root(&self, point: &[FieldElem]) -> Result<bool, PolyError> {
        for poly in &self.polys {
            if !poly.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Re-coefficient the system into another context (identity or prime
    /// subfield into extension). Metadata is preserved.
    pub fn lift_to(&self, target: &FieldCtx) -> Result<PolySystem, crate::field::FieldError> {
        let polys = self
            .polys
            .iter()
            .map(|p| p.lift_to(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolySystem {
            ctx: target.clone(),
            var_names: self.var_names.clone(),
            polys,
            degrees: self.degrees.clone(),
            homogeneous: self.homogeneous,
            metadata: self.metadata.clone(),
        })
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "system over {} in [{}]",
            self.ctx,
            self.var_names.join(", ")
        )?;
        for poly in &self.polys {
            writeln!(f, "  {poly}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::poly::Poly;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn homogeneous_constructor_checks_each_poly() {
        let ctx = FieldCtx::rationals();
        let x0 = Poly::var(&ctx, 2, 0);
        let x1 = Poly::var(&ctx, 2, 1);
        let good = x0.mul(&x0).sub(&x1.mul(&x1));
        let bad = x0.mul(&x0).sub(&x1);

        let sys = PolySystem::homogeneous(&ctx, names(2), vec![good.clone()]).unwrap();
        assert_eq!(sys.degrees(), &[2]);
        assert!(sys.is_homogeneous());

        assert_eq!(
            PolySystem::homogeneous(&ctx, names(2), vec![good, bad]).unwrap_err(),
            SystemError::NonHomogeneous { index: 1 }
        );
    }

    #[test]
    fn empty_and_arity_validation() {
        let ctx = FieldCtx::rationals();
        assert_eq!(
            PolySystem::homogeneous(&ctx, names(1), vec![]).unwrap_err(),
            SystemError::Empty
        );
        let p = Poly::var(&ctx, 2, 0);
        assert!(matches!(
            PolySystem::homogeneous(&ctx, names(3), vec![p]).unwrap_err(),
            SystemError::ArityMismatch { .. }
        ));
    }

    #[test]
    fn metadata_round_trip_and_replace() {
        let mut m = Metadata::new();
        m.set(Metadata::METHOD, "boolsys");
        m.set(Metadata::SEED, "42");
        m.set(Metadata::METHOD, "lambda-chain");
        assert_eq!(m.get(Metadata::METHOD), Some("lambda-chain"));
        let keys: Vec<&str> = m.iter().map(|(k, _)| k).collect();
        assert_eq!(keys, vec!["method", "seed"]);
    }

    #[test]
    fn zero_polynomial_is_homogeneous_degree_zero() {
        let ctx = FieldCtx::prime(3).unwrap();
        let sys =
            PolySystem::homogeneous(&ctx, names(1), vec![Poly::zero(&ctx, 1)]).unwrap();
        assert_eq!(sys.degrees(), &[0]);
    }
}
