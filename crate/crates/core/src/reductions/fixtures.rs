//! Fixture systems with known root structure, used as regressions for the
//! verification oracles.

use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::system::{Metadata, PolySystem};

/// The repeated-squaring system obtained by abbreviating the powers of x in
/// the degree-9 conjunction polynomial: x2 ~ x^2, x3 ~ x^3, x4 ~ x^4,
/// x5 ~ x^5, x6 ~ x^6, x7 ~ x^7, x8 ~ x^8, x9 ~ x^9, each definition
/// homogenized with x0. The abbreviation introduces roots at infinity:
/// setting x8 = x9 to any common nonzero value and everything else to 0
/// satisfies all ten polynomials even though the original pair of univariate
/// polynomials has no common root.
pub fn spurious_example_system() -> PolySystem {
    let ctx = FieldCtx::rationals();
    let names: Vec<String> = std::iter::once("x".to_string())
        .chain(std::iter::once("x0".to_string()))
        .chain((2..=9).map(|k| format!("x{k}")))
        .collect();
    let nv = names.len();
    // Index layout: x = 0, x0 = 1, and x_k = k for k in 2..=9.
    let var = |i: usize| Poly::var(&ctx, nv, i);
    let x = || var(0);
    let x0 = || var(1);

    let mut head = Poly::zero(&ctx, nv);
    for (k, c) in [(3, -1i64), (4, 1), (5, 2), (6, 9), (7, 2), (8, 1), (9, -1)] {
        head = head.add(&var(k).scale(&ctx.from_int(c)));
    }

    let polys = vec![
        head,
        var(6).sub(&x0()),
        x0().mul(&var(2)).sub(&x().mul(&x())),
        x0().mul(&var(3)).sub(&var(2).mul(&x())),
        x0().mul(&var(4)).sub(&var(2).mul(&var(2))),
        x0().mul(&var(5)).sub(&var(4).mul(&x())),
        x0().mul(&var(6)).sub(&var(2).mul(&var(4))),
        x0().mul(&var(7)).sub(&var(4).mul(&var(3))),
        x0().mul(&var(8)).sub(&var(4).mul(&var(4))),
        x0().mul(&var(9)).sub(&var(8).mul(&x())),
    ];

    let mut system = PolySystem::homogeneous(&ctx, names, polys)
        .expect("fixture is homogeneous by construction");
    system
        .metadata_mut()
        .set(Metadata::METHOD, "spurious-example");
    system
}
