//! Boolean constraint systems as homogeneous degree-2 polynomial systems,
//! and the 3-CNF front end that feeds them.
//!
//! Truth conventions: away from characteristic 2, a variable is true when
//! its coordinate equals -x0; in characteristic 2 it is true when the
//! coordinate equals x0 (and false when it is 0).

use super::{BoolEquation, BoolsysInstance, CnfFormula};
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::system::{Metadata, PolySystem};

pub const METHOD: &str = "boolsys";

/// Rewrite a CNF formula in the three Boolsys equation forms: one auxiliary
/// variable per negated literal, one per binary disjunction (three-literal
/// clauses associate as (l1 v l2) v l3), and one IsTrue equation per clause.
/// Satisfying assignments correspond one-to-one on the original variables;
/// the auxiliaries are functionally determined.
pub fn cnf_to_boolsys(phi: &CnfFormula) -> BoolsysInstance {
    let mut num_vars = phi.num_vars();
    let mut equations = Vec::new();
    let mut fresh = || {
        num_vars += 1;
        num_vars
    };

    for clause in phi.clauses() {
        // Replace literals by plain variables, introducing negation
        // auxiliaries as needed.
        let mut slots = Vec::with_capacity(clause.len());
        for &lit in clause {
            let var = lit.unsigned_abs() as usize;
            if lit > 0 {
                slots.push(var);
            } else {
                let aux = fresh();
                equations.push(BoolEquation::Negation(aux, var));
                slots.push(aux);
            }
        }
        // Fold the slots into a single clause output variable.
        let output = match slots.as_slice() {
            [v] => {
                let aux = fresh();
                equations.push(BoolEquation::Disjunction(aux, *v, *v));
                aux
            }
            [v, w] => {
                let aux = fresh();
                equations.push(BoolEquation::Disjunction(aux, *v, *w));
                aux
            }
            [v, w, u] => {
                let inner = fresh();
                equations.push(BoolEquation::Disjunction(inner, *v, *w));
                let outer = fresh();
                equations.push(BoolEquation::Disjunction(outer, inner, *u));
                outer
            }
            _ => unreachable!("CnfFormula enforces 1..=3 literals"),
        };
        equations.push(BoolEquation::IsTrue(output));
    }

    BoolsysInstance::new(num_vars, equations).expect("construction yields a valid instance")
}

fn x(ctx: &FieldCtx, num_vars: usize, i: usize) -> Poly {
    Poly::var(ctx, num_vars, i)
}

/// Encode a Boolsys instance over any field. Variables are x0..xn with xi
/// standing for X_i; the system has a nontrivial root over the algebraic
/// closure iff the instance is satisfiable.
pub fn boolsys_to_system(instance: &BoolsysInstance, ctx: &FieldCtx) -> PolySystem {
    let n = instance.num_vars();
    let nv = n + 1;
    let char2 = ctx.characteristic() == 2;
    let mut polys = Vec::with_capacity(n + instance.equations().len());

    for i in 1..=n {
        let x0 = x(ctx, nv, 0);
        let xi = x(ctx, nv, i);
        let gadget = if char2 {
            // x0 xi - xi^2
            x0.mul(&xi).sub(&xi.mul(&xi))
        } else {
            // x0^2 - xi^2
            x0.mul(&x0).sub(&xi.mul(&xi))
        };
        polys.push(gadget);
    }

    for eq in instance.equations() {
        let x0 = x(ctx, nv, 0);
        let gadget = match *eq {
            BoolEquation::IsTrue(i) => x0.mul(&x(ctx, nv, i).add(&x0)),
            BoolEquation::Negation(i, j) => {
                let sum = x(ctx, nv, i).add(&x(ctx, nv, j));
                if char2 {
                    x0.mul(&sum.add(&x0))
                } else {
                    x0.mul(&sum)
                }
            }
            BoolEquation::Disjunction(i, j, k) => {
                if char2 {
                    // xi^2 + xj xk + x0 (xj + xk)
                    let xi = x(ctx, nv, i);
                    xi.mul(&xi)
                        .add(&x(ctx, nv, j).mul(&x(ctx, nv, k)))
                        .add(&x0.mul(&x(ctx, nv, j).add(&x(ctx, nv, k))))
                } else {
                    // (xi + x0)^2 - (xj + x0)(xk + x0)
                    let a = x(ctx, nv, i).add(&x0);
                    let b = x(ctx, nv, j).add(&x0);
                    let c = x(ctx, nv, k).add(&x0);
                    a.mul(&a).sub(&b.mul(&c))
                }
            }
        };
        polys.push(gadget);
    }

    let var_names = (0..nv).map(|i| format!("x{i}")).collect();
    let mut system = PolySystem::homogeneous(ctx, var_names, polys)
        .expect("gadgets are homogeneous of degree 2");
    system.metadata_mut().set(Metadata::METHOD, METHOD);
    system
        .metadata_mut()
        .set(Metadata::BOOL_VARS, n.to_string());
    system
}
