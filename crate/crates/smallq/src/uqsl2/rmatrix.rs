//! The R-matrix of u_q(sl2): Cartan factor times quasi-unipotent part.
//!
//! R = R₀·Θ with Θ = Σ_{n<l} (q−q⁻¹)ⁿ/[n]!·q^{n(n−1)/2}·Eⁿ⊗Fⁿ and
//! R₀ = l⁻¹·Σ_{a,b} q^{s·ab}·K^a⊗K^b. The exponent multiplier s is not
//! trusted from any formula: a fixed candidate list is searched and every
//! quasi-triangularity axiom is verified exactly before a candidate is
//! accepted.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::quasitriangular::{RMatrix, TensorElem};
use crate::uqsl2::SmallQuantumSl2;

fn theta(
    q: &SmallQuantumSl2,
    quad_sign: i64,
    alternating: bool,
    e_first: bool,
) -> Result<TensorElem, EngineError> {
    let ctx = &q.ctx;
    let mut t = TensorElem::zero(ctx.order, q.h.dim);
    let qdiff = ctx.q_pow(1).sub(&ctx.q_pow(-1))?;
    for n in 0..q.l {
        let mut c = qdiff
            .pow(n)?
            .mul(&ctx.q_pow(quad_sign * (n as i64) * (n as i64 - 1) / 2))?
            .div(&ctx.q_factorial(n))?;
        if alternating && n % 2 == 1 {
            c = c.neg();
        }
        let key = if e_first {
            (q.monomial_index(0, 0, n), q.monomial_index(n, 0, 0))
        } else {
            (q.monomial_index(n, 0, 0), q.monomial_index(0, 0, n))
        };
        t.insert(key, c);
    }
    Ok(t)
}

fn theta_inverse(q: &SmallQuantumSl2, th: &TensorElem) -> Result<TensorElem, EngineError> {
    // Θ = 1⊗1 + N with N nilpotent: Θ⁻¹ = Σ (−N)^k
    let unit = TensorElem::unit(&q.h);
    let mut n_part = th.clone();
    for (k, v) in &unit.terms {
        n_part.insert(*k, v.neg());
    }
    let mut acc = unit.clone();
    let mut power = unit;
    for _ in 1..q.l {
        power = power.mul(&n_part, &q.h)?;
        if power.terms.is_empty() {
            break;
        }
        let signed = power.scale(&CycNum::from_integer(q.ctx.order, -1))?;
        power = signed;
        acc = acc.add(&power);
    }
    Ok(acc)
}

fn cartan_factor(q: &SmallQuantumSl2, s: i64) -> Result<TensorElem, EngineError> {
    let ctx = &q.ctx;
    let mut t = TensorElem::zero(ctx.order, q.h.dim);
    let inv_l = CycNum::rational(ctx.order, 1, q.l as i64);
    for a in 0..q.l {
        for b in 0..q.l {
            let c = ctx.q_pow(s * a as i64 * b as i64).mul(&inv_l)?;
            t.insert(
                (q.monomial_index(0, a, 0), q.monomial_index(0, b, 0)),
                c,
            );
        }
    }
    Ok(t)
}

/// Cheap necessary test before the full axiom suite: Δ^op(g)·R = R·Δ(g)
/// on the generators.
fn conjugation_test(q: &SmallQuantumSl2, r: &TensorElem) -> Result<bool, EngineError> {
    let h = &q.h;
    for g in h.generating_set() {
        let mut delta = TensorElem::zero(h.order, h.dim);
        let mut delta_op = TensorElem::zero(h.order, h.dim);
        for (j, k, c) in &h.coprod[g] {
            delta.insert((*j, *k), c.clone());
            delta_op.insert((*k, *j), c.clone());
        }
        if delta_op.mul(r, h)? != r.mul(&delta, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build one specific member of the ansatz family (no verification).
pub fn r_matrix_with(
    q: &SmallQuantumSl2,
    s: i64,
    quad_sign: i64,
    alternating: bool,
    e_first: bool,
    cartan_first: bool,
) -> Result<RMatrix, EngineError> {
    let l = q.l as i64;
    let s = s.rem_euclid(l);
    let th = theta(q, quad_sign, alternating, e_first)?;
    let r0 = cartan_factor(q, s)?;
    let r = if cartan_first {
        r0.mul(&th, &q.h)?
    } else {
        th.mul(&r0, &q.h)?
    };
    let th_inv = theta_inverse(q, &th)?;
    let r0_inv = cartan_factor(q, (-s).rem_euclid(l))?;
    let r_inv = if cartan_first {
        th_inv.mul(&r0_inv, &q.h)?
    } else {
        r0_inv.mul(&th_inv, &q.h)?
    };
    Ok(RMatrix {
        r,
        r_inv,
        notes: vec![format!(
            "s={s} order={} quad={quad_sign} alt={alternating} cartan_first={cartan_first}",
            if e_first { "E⊗F" } else { "F⊗E" }
        )],
    })
}

/// Search the fixed candidate list for the Cartan exponent; the first
/// candidate passing all axioms exactly wins and is recorded.
pub fn r_matrix(q: &SmallQuantumSl2) -> Result<RMatrix, EngineError> {
    let l = q.l as i64;
    let inv2 = (l + 1) / 2; // 2⁻¹ mod l for odd l
    let raw_candidates = [1, l - 1, 2, l - 2, inv2, l - inv2, (l + 1) / 2, l - (l + 1) / 2];
    let mut seen = std::collections::BTreeSet::new();
    let mut failures: Vec<String> = Vec::new();
    for &s in &raw_candidates {
        let s = s.rem_euclid(l);
        if !seen.insert(s) {
            continue;
        }
        for e_first in [false, true] {
            for quad_sign in [1i64, -1] {
                for alternating in [false, true] {
                    for cartan_first in [true, false] {
                        let th = theta(q, quad_sign, alternating, e_first)?;
                        let r0 = cartan_factor(q, s)?;
                        let r = if cartan_first {
                            r0.mul(&th, &q.h)?
                        } else {
                            th.mul(&r0, &q.h)?
                        };
                        let tag = format!(
                            "s={s} order={} quad={quad_sign} alt={alternating} cartan_first={cartan_first}",
                            if e_first { "E⊗F" } else { "F⊗E" }
                        );
                        if !conjugation_test(q, &r)? {
                            failures.push(format!("{tag}: conjugation"));
                            continue;
                        }
                        let th_inv = theta_inverse(q, &th)?;
                        let r0_inv = cartan_factor(q, (-s).rem_euclid(l))?;
                        let r_inv = if cartan_first {
                            th_inv.mul(&r0_inv, &q.h)?
                        } else {
                            r0_inv.mul(&th_inv, &q.h)?
                        };
                        let rm = RMatrix {
                            r,
                            r_inv,
                            notes: vec![tag.clone()],
                        };
                        match rm.verify(&q.h) {
                            Ok(()) => return Ok(rm),
                            Err(e) => failures.push(format!("{tag}: {e}")),
                        }
                    }
                }
            }
        }
    }
    Err(EngineError::StructureCheck(format!(
        "no Cartan exponent candidate yields a quasi-triangular structure: {}",
        failures.join("; ")
    )))
}
