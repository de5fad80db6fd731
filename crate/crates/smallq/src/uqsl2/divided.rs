//! Adjoint operators of the l-th divided powers of the big quantum group on
//! u_q(sl2).
//!
//! ad E^(l)(a) = E^(l)a − aE^(l) + Σ_{0<k<l} q^{k(l−1)}(−1)^k E^(l−k)K^k·a·K^{−k}E^(k),
//! with the commutator reduced into the small quantum group through
//! [E^(l), F] = (q^{1−l}K − q^{l−1}K⁻¹)/(q−q⁻¹)·E^(l−1) and [E^(l), K] = 0.
//! The F-side uses the mirror coproduct Δ(F^(l)) = Σ q^{k(l−k)}F^(k)⊗F^(l−k)K^{−k}
//! and S(F^(m)) = (−1)^m q^{−m(m−1)} F^(m)K^m. K-exponents are reduced mod l
//! throughout, which is exact on the small quantum group.

use crate::error::EngineError;
use crate::hopf::algebra::AlgElem;
use crate::hopf::quasitriangular::restrict_operator;
use crate::linalg::{Mat, Subspace};
use crate::uqsl2::SmallQuantumSl2;

pub struct DividedPowerOps {
    /// Full adjoint operators on u.
    pub ad_e: Mat,
    pub ad_f: Mat,
    /// Plain commutator operators [E^(l), −], [F^(l), −] on u.
    pub comm_e: Mat,
    pub comm_f: Mat,
}

fn elem_mul3(
    q: &SmallQuantumSl2,
    left: &AlgElem,
    mid: &AlgElem,
    right: &AlgElem,
) -> Result<AlgElem, EngineError> {
    q.h.mult_elems(&q.h.mult_elems(left, mid)?, right)
}

/// [E^(l), F] as an element of u.
fn bracket_el_f(q: &SmallQuantumSl2) -> Result<AlgElem, EngineError> {
    let ctx = &q.ctx;
    let l = q.l;
    let denom = ctx.q_pow(1).sub(&ctx.q_pow(-1))?;
    let fact = ctx.q_factorial(l - 1).inv()?;
    let c1 = ctx.q_pow(1 - l as i64).div(&denom)?.mul(&fact)?;
    let c2 = ctx.q_pow(l as i64 - 1).div(&denom)?.mul(&fact)?.neg();
    q.monomial(0, 1, l - 1, c1)
        .add(&q.monomial(0, l - 1, l - 1, c2))
}

/// [F^(l), E] as an element of u.
fn bracket_fl_e(q: &SmallQuantumSl2) -> Result<AlgElem, EngineError> {
    let ctx = &q.ctx;
    let l = q.l;
    let denom = ctx.q_pow(1).sub(&ctx.q_pow(-1))?;
    let fact = ctx.q_factorial(l - 1).inv()?;
    // −F^(l−1)·(q^{1−l}K − q^{l−1}K⁻¹)/(q−q⁻¹)
    let c1 = ctx.q_pow(1 - l as i64).div(&denom)?.mul(&fact)?.neg();
    let c2 = ctx.q_pow(l as i64 - 1).div(&denom)?.mul(&fact)?;
    q.monomial(l - 1, 1, 0, c1)
        .add(&q.monomial(l - 1, l - 1, 0, c2))
}

/// Commutator [E^(l), F^a K^b E^c] inside u: E^(l) commutes with K and E,
/// and each F peels off one bracket term.
fn commutator_e(q: &SmallQuantumSl2, idx: usize) -> Result<AlgElem, EngineError> {
    let (a, b, c) = q.monomial_exponents(idx);
    let w = bracket_el_f(q)?;
    let mut acc = AlgElem::zero(q.ctx.order, q.h.dim);
    let tail = q.monomial(0, b, c, q.ctx.one());
    for j in 0..a {
        // F^j · W · F^{a−1−j} · K^b E^c
        let term = elem_mul3(
            q,
            &q.monomial(j, 0, 0, q.ctx.one()),
            &w,
            &q.monomial(a - 1 - j, 0, 0, q.ctx.one()),
        )?;
        acc = acc.add(&q.h.mult_elems(&term, &tail)?)?;
    }
    Ok(acc)
}

/// Commutator [F^(l), F^a K^b E^c] inside u.
fn commutator_f(q: &SmallQuantumSl2, idx: usize) -> Result<AlgElem, EngineError> {
    let (a, b, c) = q.monomial_exponents(idx);
    let w = bracket_fl_e(q)?;
    let mut acc = AlgElem::zero(q.ctx.order, q.h.dim);
    let head = q.monomial(a, b, 0, q.ctx.one());
    for j in 0..c {
        // F^aK^b · E^j · W · E^{c−1−j}
        let term = elem_mul3(
            q,
            &q.monomial(0, 0, j, q.ctx.one()),
            &w,
            &q.monomial(0, 0, c - 1 - j, q.ctx.one()),
        )?;
        acc = acc.add(&q.h.mult_elems(&head, &term)?)?;
    }
    Ok(acc)
}

pub fn divided_power_ops(q: &SmallQuantumSl2) -> Result<DividedPowerOps, EngineError> {
    let n = q.h.dim;
    let l = q.l;
    let ctx = &q.ctx;
    let mut ad_e = Mat::zero(ctx.order, n, n);
    let mut ad_f = Mat::zero(ctx.order, n, n);
    let mut comm_e = Mat::zero(ctx.order, n, n);
    let mut comm_f = Mat::zero(ctx.order, n, n);

    // fixed outer factors of the in-u sums
    // E-side: q^{k(l−1)}(−1)^k · E^(l−k)K^k ⊗ K^{−k}E^(k)
    let mut e_side: Vec<(AlgElem, AlgElem)> = Vec::new();
    for k in 1..l {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let coeff = ctx
            .q_pow((k * (l - 1)) as i64)
            .mul(&ctx.int(sign))?;
        // E^{l−k}K^k = q^{−2k(l−k)}·K^k E^{l−k}
        let left = q
            .monomial(0, k, l - k, ctx.q_pow(-2 * (k * (l - k)) as i64))
            .scale(&ctx.q_factorial(l - k).inv()?)?
            .scale(&coeff)?;
        let right = q
            .monomial(0, (l - k) % l, k, ctx.one())
            .scale(&ctx.q_factorial(k).inv()?)?;
        e_side.push((left, right));
    }
    // F-side: q^{k(l−k)} · F^(k) ⊗ S(F^(l−k)K^{−k}) with
    // S(F^(m)K^{−k}) = (−1)^m q^{−m(m−1)−2km}·F^(m)·K^{m+k−...} reduced:
    // K^k·F^m·K^m = q^{−2km}F^m K^{k+m}; here k+m = l ≡ 0.
    let mut f_side: Vec<(AlgElem, AlgElem)> = Vec::new();
    for k in 1..l {
        let m = l - k;
        let sign = if m % 2 == 1 { -1 } else { 1 };
        let coeff = ctx
            .q_pow((k * (l - k)) as i64)
            .mul(&ctx.int(sign))?
            .mul(&ctx.q_pow(-((m * (m - 1)) as i64) - 2 * (k * m) as i64))?;
        let left = q
            .monomial(k, 0, 0, ctx.one())
            .scale(&ctx.q_factorial(k).inv()?)?;
        let right = q
            .monomial(m, 0, 0, coeff)
            .scale(&ctx.q_factorial(m).inv()?)?;
        f_side.push((left, right));
    }

    for idx in 0..n {
        let basis = AlgElem::basis(ctx.order, n, idx);
        let ce = commutator_e(q, idx)?;
        let cf = commutator_f(q, idx)?;
        let mut img_e = ce.clone();
        for (left, right) in &e_side {
            img_e = img_e.add(&elem_mul3(q, left, &basis, right)?)?;
        }
        let mut img_f = cf.clone();
        for (left, right) in &f_side {
            img_f = img_f.add(&elem_mul3(q, left, &basis, right)?)?;
        }
        for (dst, src) in [
            (&mut ad_e, &img_e),
            (&mut ad_f, &img_f),
            (&mut comm_e, &ce),
            (&mut comm_f, &cf),
        ] {
            for (j, c) in &src.terms {
                dst.data[*j].push((idx, c.clone()));
            }
        }
    }
    for m in [&mut ad_e, &mut ad_f, &mut comm_e, &mut comm_f] {
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
    }
    Ok(DividedPowerOps {
        ad_e,
        ad_f,
        comm_e,
        comm_f,
    })
}

pub struct DividedPowerReport {
    /// ad and commutator agree on the center.
    pub agrees_with_commutator_on_center: bool,
    /// both operators annihilate the center (the type-A triviality instance).
    pub trivial_on_center: bool,
    /// both operators send each block summand e_i·z(u) into itself.
    pub preserves_block_decomposition: bool,
    /// both operators annihilate the Higman ideal.
    pub trivial_on_higman: bool,
    /// ad E^(l)(1) = 0 and ad F^(l)(1) = 0.
    pub kills_unit: bool,
}

pub fn verify_divided_powers(
    q: &SmallQuantumSl2,
    ops: &DividedPowerOps,
    center: &Subspace,
    higman: &Subspace,
    block_idempotents: &[AlgElem],
) -> Result<DividedPowerReport, EngineError> {
    let n = q.h.dim;
    // center preservation is required, not optional
    let ad_e_z = restrict_operator(&ops.ad_e, center)?;
    let ad_f_z = restrict_operator(&ops.ad_f, center)?;
    let comm_e_z = restrict_operator(&ops.comm_e, center)?;
    let comm_f_z = restrict_operator(&ops.comm_f, center)?;
    let agrees = ad_e_z == comm_e_z && ad_f_z == comm_f_z;
    let trivial = ad_e_z.is_zero() && ad_f_z.is_zero();

    // block decomposition of the center: e_i·center must be stable
    let mut preserves_blocks = true;
    'outer: for e_i in block_idempotents {
        let rows: Vec<_> = center
            .basis
            .data
            .iter()
            .map(|row| {
                let z = AlgElem::from_sparse_row(q.ctx.order, n, row);
                q.h.mult_elems(e_i, &z).map(|p| p.as_sparse_row())
            })
            .collect::<Result<_, _>>()?;
        let block_part = Subspace::from_rows(q.ctx.order, n, rows)?;
        for op in [&ops.ad_e, &ops.ad_f] {
            if restrict_operator(op, &block_part).is_err() {
                preserves_blocks = false;
                break 'outer;
            }
        }
    }

    let mut trivial_higman = true;
    for op in [&ops.ad_e, &ops.ad_f] {
        for row in &higman.basis.data {
            let v = op.apply(&crate::hopf::invariants::sparse_to_dense(
                q.ctx.order,
                n,
                row,
            ))?;
            if v.iter().any(|c| !c.is_zero()) {
                trivial_higman = false;
            }
        }
    }

    let unit_col = q.h.unit.to_dense();
    let kills_unit = ops.ad_e.apply(&unit_col)?.iter().all(|c| c.is_zero())
        && ops.ad_f.apply(&unit_col)?.iter().all(|c| c.is_zero());

    Ok(DividedPowerReport {
        agrees_with_commutator_on_center: agrees,
        trivial_on_center: trivial,
        preserves_block_decomposition: preserves_blocks,
        trivial_on_higman: trivial_higman,
        kills_unit,
    })
}
