//! Reduction from homogeneous satisfiability (nontrivial root) to plain
//! affine satisfiability: double the variable roster with y_1..y_n and
//! append sum(x_i y_i) - 1, which forces some x_i to be invertible.

use crate::poly::Poly;
use crate::system::{Metadata, PolySystem};

/// Turn a homogeneous system into an affine one that is satisfiable iff the
/// input has a nontrivial root. The output is deliberately inhomogeneous.
pub fn hhn_to_hn(system: &PolySystem) -> PolySystem {
    assert!(system.is_homogeneous(), "input must be homogeneous");
    let ctx = system.ctx().clone();
    let n = system.num_vars();
    let total = 2 * n;

    let mut names = system.var_names().to_vec();
    names.extend((1..=n).map(|i| format!("y{i}")));

    let mut polys: Vec<Poly> = system.polys().iter().map(|p| p.extend_vars(total)).collect();
    let mut pairing = Poly::constant(&ctx, total, ctx.from_int(-1));
    for i in 0..n {
        pairing = pairing.add(&Poly::var(&ctx, total, i).mul(&Poly::var(&ctx, total, n + i)));
    }
    polys.push(pairing);

    let mut out = PolySystem::affine(&ctx, names, polys).expect("well-formed by construction");
    out.metadata_mut().set(Metadata::METHOD, "hn");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldCtx, FieldElem};

    fn homogeneous(ctx: &FieldCtx, nv: usize, polys: Vec<Poly>) -> PolySystem {
        let names = (0..nv).map(|i| format!("x{i}")).collect();
        PolySystem::homogeneous(ctx, names, polys).unwrap()
    }

    #[test]
    fn single_square_stays_unsatisfiable() {
        // {x1^2} has only the trivial root; {x1^2, x1 y1 - 1} has none.
        let ctx = FieldCtx::rationals();
        let x = Poly::var(&ctx, 1, 0);
        let sys = homogeneous(&ctx, 1, vec![x.mul(&x)]);
        let out = hhn_to_hn(&sys);
        assert_eq!(out.num_vars(), 2);
        assert_eq!(out.len(), 2);
        assert!(!out.is_homogeneous());
        // x1 must vanish for the square and be invertible for the pairing.
        let p = |a: i64, b: i64| vec![ctx.from_int(a), ctx.from_int(b)];
        for a in -3..=3 {
            for b in -3..=3 {
                assert!(!out.is_root(&p(a, b)).unwrap());
            }
        }
    }

    #[test]
    fn difference_of_squares_becomes_satisfiable_affinely() {
        let ctx = FieldCtx::rationals();
        let x0 = Poly::var(&ctx, 2, 0);
        let x1 = Poly::var(&ctx, 2, 1);
        let sys = homogeneous(&ctx, 2, vec![x0.mul(&x0).sub(&x1.mul(&x1))]);
        let out = hhn_to_hn(&sys);
        let point: Vec<FieldElem> = [1, 1, 1, 0].iter().map(|&c| ctx.from_int(c)).collect();
        assert!(out.is_root(&point).unwrap());
    }

    #[test]
    fn product_system_witness() {
        let ctx = FieldCtx::rationals();
        let x0 = Poly::var(&ctx, 2, 0);
        let x1 = Poly::var(&ctx, 2, 1);
        let sys = homogeneous(&ctx, 2, vec![x0.mul(&x1)]);
        let out = hhn_to_hn(&sys);
        let point: Vec<FieldElem> = [1, 0, 1, 0].iter().map(|&c| ctx.from_int(c)).collect();
        assert!(out.is_root(&point).unwrap());
    }

    /// Exhaustive equisatisfiability over F_3 for small systems: nontrivial
    /// projective roots of the input vs affine roots of the output.
    #[test]
    fn equisatisfiable_over_f3() {
        let ctx = FieldCtx::prime(3).unwrap();
        let build = |spec: &[(Vec<u32>, i64)], nv: usize| {
            let mut p = Poly::zero(&ctx, nv);
            for (exps, c) in spec {
                p.add_term(exps.clone(), ctx.from_int(*c));
            }
            p
        };
        let candidates: Vec<PolySystem> = vec![
            homogeneous(&ctx, 2, vec![build(&[(vec![2, 0], 1), (vec![0, 2], -1)], 2)]),
            homogeneous(&ctx, 2, vec![build(&[(vec![2, 0], 1), (vec![0, 2], 1)], 2)]),
            homogeneous(&ctx, 1, vec![build(&[(vec![2], 1)], 1)]),
            homogeneous(
                &ctx,
                3,
                vec![
                    build(&[(vec![1, 1, 0], 1)], 3),
                    build(&[(vec![0, 0, 2], 1), (vec![2, 0, 0], 1)], 3),
                ],
            ),
            homogeneous(
                &ctx,
                2,
                vec![
                    build(&[(vec![1, 0], 1)], 2),
                    build(&[(vec![0, 1], 1)], 2),
                ],
            ),
        ];
        for sys in candidates {
            let n = sys.num_vars();
            // Any nonzero point of F_3^n that is a root?
            let mut homogeneous_sat = false;
            for idx in 1..3u32.pow(n as u32) {
                let coords: Vec<FieldElem> = (0..n)
                    .map(|i| ctx.from_int((idx / 3u32.pow(i as u32) % 3) as i64))
                    .collect();
                if sys.is_root(&coords).unwrap() {
                    homogeneous_sat = true;
                    break;
                }
            }
            // Any affine root of the doubled system over F_3?
            let out = hhn_to_hn(&sys);
            let total = out.num_vars();
            let mut affine_sat = false;
            for idx in 0..3u32.pow(total as u32) {
                let coords: Vec<FieldElem> = (0..total)
                    .map(|i| ctx.from_int((idx / 3u32.pow(i as u32) % 3) as i64))
                    .collect();
                if out.is_root(&coords).unwrap() {
                    affine_sat = true;
                    break;
                }
            }
            assert_eq!(homogeneous_sat, affine_sat);
        }
    }
}
