//! The Partition encodings: a square homogeneous system whose nontrivial
//! roots are exactly the balanced sign splittings of the weights, and the
//! coefficient-bounded variant that simulates large weights with binary
//! digit variables.

use super::PartitionInstance;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::system::{Metadata, PolySystem};

/// Metadata values used to recognize partition systems later.
pub const METHOD_PLAIN: &str = "partition";
pub const METHOD_BOUNDED: &str = "partition-bounded";

/// x0^2 - xi^2 in the given ring.
fn square_gadget(ctx: &FieldCtx, num_vars: usize, i: usize) -> Poly {
    let x0 = Poly::var(ctx, num_vars, 0);
    let xi = Poly::var(ctx, num_vars, i);
    x0.mul(&x0).sub(&xi.mul(&xi))
}

/// Encode weights (w_1, ..., w_n) as the square system
/// { x0^2 - xi^2 for 1 <= i <= n } and w_1 x_1 + ... + w_n x_n,
/// over the rationals.
pub fn partition_to_system(inst: &PartitionInstance) -> PolySystem {
    let ctx = FieldCtx::rationals();
    let n = inst.len();
    let num_vars = n + 1;

    let mut polys: Vec<Poly> = (1..=n).map(|i| square_gadget(&ctx, num_vars, i)).collect();
    let mut weight_row = Poly::zero(&ctx, num_vars);
    for (i, &w) in inst.weights().iter().enumerate() {
        let mut exps = vec![0u32; num_vars];
        exps[i + 1] = 1;
        weight_row.add_term(exps, ctx.from_int(w as i64));
    }
    polys.push(weight_row);

    let var_names = (0..num_vars).map(|i| format!("x{i}")).collect();
    let mut system = PolySystem::homogeneous(&ctx, var_names, polys)
        .expect("partition encoding is homogeneous by construction");
    system.metadata_mut().set(Metadata::METHOD, METHOD_PLAIN);
    system
        .metadata_mut()
        .set("weights", inst.len().to_string());
    system
}

/// Little-endian binary digits of w, at least one digit.
fn digits(w: u64) -> Vec<u64> {
    if w == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut v = w;
    while v > 0 {
        out.push(v & 1);
        v >>= 1;
    }
    out
}

/// The coefficient-bounded variant: each weight w_i = sum_j w_ij 2^j gets
/// digit variables W_ij defined by the descending chain
/// W_ip = w_ip x0 and W_ij = 2 W_{i,j+1} + w_ij x0, and the weight row
/// becomes W_{1,0} x_1 + ... + W_{n,0} x_n. Every coefficient lies in
/// [-2, 2], every degree is at most 2, and the system stays square.
pub fn partition_bounded_system(inst: &PartitionInstance) -> PolySystem {
    let ctx = FieldCtx::rationals();
    let n = inst.len();
    let digit_lists: Vec<Vec<u64>> = inst.weights().iter().map(|&w| digits(w)).collect();

    // Variable roster: x0..xn, then W variables grouped by weight, highest
    // digit first so each chain row only references already-listed W's.
    let mut var_names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let mut w_index = vec![Vec::new(); n]; // w_index[i][j] = column of W_{i+1,j}
    for (i, digit_list) in digit_lists.iter().enumerate() {
        w_index[i] = vec![0usize; digit_list.len()];
        for j in (0..digit_list.len()).rev() {
            w_index[i][j] = var_names.len();
            var_names.push(format!("W{}_{}", i + 1, j));
        }
    }
    let num_vars = var_names.len();

    let mut polys: Vec<Poly> = (1..=n).map(|i| square_gadget(&ctx, num_vars, i)).collect();

    // Digit chains, top digit down.
    for (i, digit_list) in digit_lists.iter().enumerate() {
        let p = digit_list.len() - 1;
        for j in (0..=p).rev() {
            let mut row = Poly::var(&ctx, num_vars, w_index[i][j]);
            if j < p {
                row = row.sub(
                    &Poly::var(&ctx, num_vars, w_index[i][j + 1]).scale(&ctx.from_int(2)),
                );
            }
            if digit_list[j] == 1 {
                row = row.sub(&Poly::var(&ctx, num_vars, 0));
            }
            polys.push(row);
        }
    }

    // W_{1,0} x1 + ... + W_{n,0} xn replaces the weight row.
    let mut weight_row = Poly::zero(&ctx, num_vars);
    for i in 0..n {
        let w_i0 = Poly::var(&ctx, num_vars, w_index[i][0]);
        weight_row = weight_row.add(&w_i0.mul(&Poly::var(&ctx, num_vars, i + 1)));
    }
    polys.push(weight_row);

    let mut system = PolySystem::homogeneous(&ctx, var_names, polys)
        .expect("bounded partition encoding is homogeneous by construction");
    system.metadata_mut().set(Metadata::METHOD, METHOD_BOUNDED);
    system
        .metadata_mut()
        .set("weights", inst.len().to_string());
    system
}
