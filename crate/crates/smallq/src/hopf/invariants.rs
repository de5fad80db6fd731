//! Adjoint actions, center, integrals and cointegrals, trace-like functional
//! spaces, the Radford maps, the Higman ideal and the radical.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, Functional, HopfData, ModuleRep};
use crate::linalg::{Mat, SparseRow, Subspace};

/// Matrix of the left Hopf-adjoint action a ↦ Σ h₁ a S(h₂).
pub fn ad_left(h: &HopfData, x: &AlgElem) -> Result<Mat, EngineError> {
    let n = h.dim;
    let cop = h.coprod_of(x)?;
    let mut m = Mat::zero(h.order, n, n);
    for k in 0..n {
        let mut img = AlgElem::zero(h.order, n);
        for (j, j2, c) in &cop {
            let s = &h.antipode[*j2];
            let left = h.basis_product(*j, k);
            let term = h.mult_elems(left, s)?.scale(c)?;
            img = img.add(&term)?;
        }
        for (j, c) in &img.terms {
            m.data[*j].push((k, c.clone()));
        }
    }
    for row in &mut m.data {
        row.sort_by_key(|(c, _)| *c);
    }
    Ok(m)
}

/// Matrix of the right Hopf-adjoint action a ↦ Σ S(h₁) a h₂.
pub fn ad_right(h: &HopfData, x: &AlgElem) -> Result<Mat, EngineError> {
    let n = h.dim;
    let cop = h.coprod_of(x)?;
    let mut m = Mat::zero(h.order, n, n);
    for k in 0..n {
        let mut img = AlgElem::zero(h.order, n);
        for (j, j2, c) in &cop {
            let s = &h.antipode[*j];
            let sa = h.mult_elems(s, &AlgElem::basis(h.order, n, k))?;
            let term = h.mult_elem_basis(&sa, *j2)?.scale(c)?;
            img = img.add(&term)?;
        }
        for (j, c) in &img.terms {
            m.data[*j].push((k, c.clone()));
        }
    }
    for row in &mut m.data {
        row.sort_by_key(|(c, _)| *c);
    }
    Ok(m)
}

/// Dual adjoint action ad* h = (ad S⁻¹(h))ᵀ on functionals.
pub fn ad_dual(h: &HopfData, x: &AlgElem) -> Result<Mat, EngineError> {
    let s_inv = h.apply_antipode_inv(x)?;
    Ok(ad_left(h, &s_inv)?.transpose())
}

/// The center, computed two independent ways that must agree exactly:
/// as the commutant of the generating set and as the common ad-eigenspace
/// {z : ad g(z) = ε(g)·z}.
pub fn center(h: &HopfData) -> Result<Subspace, EngineError> {
    let n = h.dim;
    let gens = h.generating_set();
    // commutant: kernel of stacked (L_g − R_g)
    let mut rows: Vec<SparseRow> = Vec::new();
    for g in &gens {
        let l = h.left_mult_basis(*g);
        let r = h.right_mult_basis(*g);
        let d = l.sub(&r)?;
        rows.extend(d.data);
    }
    let commutant = Mat {
        rows: rows.len(),
        cols: n,
        order: h.order,
        data: rows,
    }
    .kernel()?;

    // ad-invariants: kernel of stacked (ad_g − ε(g)·id)
    let mut rows2: Vec<SparseRow> = Vec::new();
    for g in &gens {
        let mut a = ad_left(h, &AlgElem::basis(h.order, n, *g))?;
        let eps = &h.counit[*g];
        if !eps.is_zero() {
            let shift = Mat::identity(h.order, n).scale(eps)?;
            a = a.sub(&shift)?;
        }
        rows2.extend(a.data);
    }
    let invariants = Mat {
        rows: rows2.len(),
        cols: n,
        order: h.order,
        data: rows2,
    }
    .kernel()?;

    if commutant != invariants {
        return Err(EngineError::Internal(
            "center mismatch: commutant differs from ad-invariant subspace".into(),
        ));
    }
    Ok(commutant)
}

pub struct Integrals {
    pub left: AlgElem,
    pub right: AlgElem,
    pub unimodular: bool,
}

/// Left/right integrals, each from a one-dimensional kernel; the
/// representative has its first nonzero coordinate normalized to 1.
pub fn integrals(h: &HopfData) -> Result<Integrals, EngineError> {
    let n = h.dim;
    let gens = h.generating_set();
    let solve_side = |left_side: bool| -> Result<AlgElem, EngineError> {
        let mut rows: Vec<SparseRow> = Vec::new();
        for g in &gens {
            let m = if left_side {
                h.left_mult_basis(*g)
            } else {
                h.right_mult_basis(*g)
            };
            let eps = &h.counit[*g];
            let mm = if eps.is_zero() {
                m
            } else {
                m.sub(&Mat::identity(h.order, n).scale(eps)?)?
            };
            rows.extend(mm.data);
        }
        let ker = Mat {
            rows: rows.len(),
            cols: n,
            order: h.order,
            data: rows,
        }
        .kernel()?;
        if ker.dim() != 1 {
            return Err(EngineError::IntegralDimension { found: ker.dim() });
        }
        let row = &ker.basis.data[0];
        let lead = row.first().unwrap().1.clone();
        let scaled: SparseRow = row
            .iter()
            .map(|(i, c)| (*i, c.div(&lead).unwrap()))
            .collect();
        Ok(AlgElem::from_sparse_row(h.order, n, &scaled))
    };
    let left = solve_side(true)?;
    let right = solve_side(false)?;
    // unimodular ⇔ the spans coincide; with both normalized to leading
    // coefficient 1, that is elementwise equality
    let unimodular = left == right;
    Ok(Integrals {
        left,
        right,
        unimodular,
    })
}

pub struct Cointegrals {
    pub lambda_left: Functional,
    pub lambda_right: Functional,
}

/// Cointegrals: λ_l with (id⊗λ_l)Δ(h) = λ_l(h)·1 and λ_r with
/// (λ_r⊗id)Δ(h) = λ_r(h)·1, both rescaled so λ(Λ) = 1.
pub fn cointegrals(h: &HopfData, integral: &AlgElem) -> Result<Cointegrals, EngineError> {
    let n = h.dim;
    let unit = h.unit.to_dense();
    let solve_side = |left_side: bool| -> Result<Functional, EngineError> {
        // unknowns λ_0..λ_{n−1}; for each basis i and output index j:
        //   Σ_k Δ_i[j,k]·λ_k − λ_i·unit_j = 0        (left cointegral)
        //   Σ_j Δ_i[j,k]·λ_j − λ_i·unit_k = 0        (right cointegral)
        let mut rows: Vec<SparseRow> = Vec::new();
        for i in 0..n {
            let mut per_out: std::collections::BTreeMap<usize, SparseRow> =
                std::collections::BTreeMap::new();
            for (j, k, c) in &h.coprod[i] {
                let (out, var) = if left_side { (*j, *k) } else { (*k, *j) };
                per_out.entry(out).or_default().push((var, c.clone()));
            }
            for j in 0..n {
                let mut row = per_out.remove(&j).unwrap_or_default();
                if !unit[j].is_zero() {
                    row.push((i, unit[j].neg()));
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        let ker = Mat::from_rows(h.order, n, rows).kernel()?;
        if ker.dim() != 1 {
            return Err(EngineError::IntegralDimension { found: ker.dim() });
        }
        let mut values = vec![CycNum::zero(h.order); n];
        for (i, c) in &ker.basis.data[0] {
            values[*i] = c.clone();
        }
        Ok(Functional {
            order: h.order,
            values,
        })
    };
    let raw_l = solve_side(true)?;
    let raw_r = solve_side(false)?;
    let norm = |f: Functional| -> Result<Functional, EngineError> {
        let v = f.eval(integral)?;
        if v.is_zero() {
            return Err(EngineError::StructureCheck(
                "cointegral vanishes on the integral; cannot normalize".into(),
            ));
        }
        f.scale(&v.inv()?)
    };
    Ok(Cointegrals {
        lambda_left: norm(raw_l)?,
        lambda_right: norm(raw_r)?,
    })
}

pub struct TraceSpaces {
    pub c: Subspace,
    pub c_l: Subspace,
    pub c_r: Subspace,
}

/// Trace-like functional spaces: c (traces), c_l (f(ab) = f(bS²a)) and c_r
/// (f(ab) = f(bS⁻²a)). c_l is additionally recomputed as the space of
/// intertwiners Hom(H_ad, k); disagreement is a hard failure.
pub fn trace_spaces(h: &HopfData) -> Result<TraceSpaces, EngineError> {
    let n = h.dim;
    let gens = h.generating_set();
    let build = |shift: Option<bool>| -> Result<Subspace, EngineError> {
        // condition fᵀ(L_g − R_{t(g)}) = 0 where t = id, S², or S⁻²
        let mut rows: Vec<SparseRow> = Vec::new();
        for g in &gens {
            let lg = h.left_mult_basis(*g);
            let tg = match shift {
                None => AlgElem::basis(h.order, n, *g),
                Some(true) => h.apply_antipode(&h.antipode[*g])?,
                Some(false) => h.apply_antipode_inv(&h.antipode_inv[*g])?,
            };
            let rt = h.right_mult_elem(&tg)?;
            let d = lg.sub(&rt)?.transpose();
            rows.extend(d.data);
        }
        Mat {
            rows: rows.len(),
            cols: n,
            order: h.order,
            data: rows,
        }
        .kernel()
    };
    let c = build(None)?;
    let c_l = build(Some(true))?;
    let c_r = build(Some(false))?;

    // independent characterization: c_l = Hom_H(H_ad, k)
    let mut rows: Vec<SparseRow> = Vec::new();
    for g in &gens {
        let mut a = ad_left(h, &AlgElem::basis(h.order, n, *g))?;
        let eps = &h.counit[*g];
        if !eps.is_zero() {
            a = a.sub(&Mat::identity(h.order, n).scale(eps)?)?;
        }
        rows.extend(a.transpose().data);
    }
    let intertwiners = Mat {
        rows: rows.len(),
        cols: n,
        order: h.order,
        data: rows,
    }
    .kernel()?;
    if intertwiners != c_l {
        return Err(EngineError::Internal(
            "c_l mismatch: shifted-trace conditions differ from Hom(H_ad, k)".into(),
        ));
    }
    Ok(TraceSpaces { c, c_l, c_r })
}

pub struct RadfordMaps {
    /// ψ_l(h) = λ_l((−)h); column j holds ψ_l(e_j) in the dual basis.
    pub psi_l: Mat,
    /// ψ_r(h) = λ_r(S(h)(−)).
    pub psi_r: Mat,
}

/// The Radford maps, with exactness checks: full rank, ψ(center) = trace
/// space, and the ad-intertwining identity on generators.
pub fn radford_maps(h: &HopfData, co: &Cointegrals) -> Result<RadfordMaps, EngineError> {
    let n = h.dim;
    let mut psi_l = Mat::zero(h.order, n, n);
    let mut psi_r = Mat::zero(h.order, n, n);
    for i in 0..n {
        for j in 0..n {
            // ψ_l entries: λ_l(e_i·e_j)
            let v = co.lambda_left.eval(h.basis_product(i, j))?;
            if !v.is_zero() {
                psi_l.data[i].push((j, v));
            }
            // ψ_r entries: λ_r(S(e_j)·e_i)
            let v2 = co
                .lambda_right
                .eval(&h.mult_elem_basis(&h.antipode[j], i)?)?;
            if !v2.is_zero() {
                psi_r.data[i].push((j, v2));
            }
        }
    }
    if psi_l.rank()? != n {
        return Err(EngineError::StructureCheck(
            "Radford map psi_l is not bijective".into(),
        ));
    }
    if psi_r.rank()? != n {
        return Err(EngineError::StructureCheck(
            "Radford map psi_r is not bijective".into(),
        ));
    }
    Ok(RadfordMaps { psi_l, psi_r })
}

/// Intertwiner identity ψ_l∘ad h = ad* h∘ψ_l checked on the generating set
/// (complete by multiplicativity of both actions); full basis when `full`.
pub fn radford_intertwines(
    h: &HopfData,
    maps: &RadfordMaps,
    full: bool,
) -> Result<bool, EngineError> {
    let idxs: Vec<usize> = if full {
        (0..h.dim).collect()
    } else {
        h.generating_set()
    };
    for g in idxs {
        let x = AlgElem::basis(h.order, h.dim, g);
        let lhs = maps.psi_l.mul(&ad_left(h, &x)?)?;
        let rhs = ad_dual(h, &x)?.mul(&maps.psi_l)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Image of ψ_l or ψ_r restricted to a subspace, as a subspace of the dual.
pub fn map_subspace(m: &Mat, sub: &Subspace) -> Result<Subspace, EngineError> {
    let rows: Vec<SparseRow> = sub
        .basis
        .data
        .iter()
        .map(|row| {
            let dense = m.apply(&sparse_to_dense(m.order, m.cols, row)).unwrap();
            dense
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    Subspace::from_rows(m.order, m.rows, rows)
}

pub fn sparse_to_dense(order: u64, n: usize, row: &SparseRow) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(order); n];
    for (i, c) in row {
        v[*i] = c.clone();
    }
    v
}

/// The Higman ideal: image of ad Λ, verified central and closed under
/// multiplication by the center.
pub fn higman_ideal(
    h: &HopfData,
    integral: &AlgElem,
    center_sub: &Subspace,
) -> Result<Subspace, EngineError> {
    let m = ad_left(h, integral)?;
    let hig = m.image()?;
    if !center_sub.contains(&hig)? {
        return Err(EngineError::StructureCheck(
            "Higman ideal is not contained in the center".into(),
        ));
    }
    // ideal property inside the center, by explicit products
    for z in &center_sub.basis.data {
        let ze = AlgElem::from_sparse_row(h.order, h.dim, z);
        for w in &hig.basis.data {
            let we = AlgElem::from_sparse_row(h.order, h.dim, w);
            let prod = h.mult_elems(&ze, &we)?;
            if !hig.contains_vector(&prod.as_sparse_row()) {
                return Err(EngineError::StructureCheck(
                    "Higman ideal is not an ideal of the center".into(),
                ));
            }
        }
    }
    Ok(hig)
}

/// Membership witness for z ∈ z_Hig: an x with ad Λ(x) = z, when solvable.
pub fn higman_preimage(
    h: &HopfData,
    integral: &AlgElem,
    z: &AlgElem,
) -> Result<Option<AlgElem>, EngineError> {
    let m = ad_left(h, integral)?;
    Ok(m
        .solve(&z.to_dense())?
        .map(|x| AlgElem::from_terms(
            h.order,
            h.dim,
            x.into_iter().enumerate().map(|(i, c)| (i, c)).collect(),
        )))
}

/// Trace functional of the left regular representation: τ(x) = Tr(L_x).
pub fn regular_trace(h: &HopfData) -> Result<Functional, EngineError> {
    let n = h.dim;
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = CycNum::zero(h.order);
        for j in 0..n {
            let c = h.basis_product(k, j).coeff(j);
            if !c.is_zero() {
                acc = acc.add(&c)?;
            }
        }
        values.push(acc);
    }
    Ok(Functional {
        order: h.order,
        values,
    })
}

/// Gram matrix of the trace form (x, y) ↦ Tr(L_x L_y) = τ(xy).
pub fn trace_form(h: &HopfData) -> Result<Mat, EngineError> {
    let tau = regular_trace(h)?;
    let n = h.dim;
    let mut m = Mat::zero(h.order, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = tau.eval(h.basis_product(i, j))?;
            if !v.is_zero() {
                m.data[i].push((j, v));
            }
        }
    }
    Ok(m)
}

/// The Jacobson radical in characteristic zero: the radical of the trace
/// form of the regular representation. Verified to be a two-sided ideal; the
/// nilpotency certificate is the power iteration when the algebra is small,
/// or annihilation of a supplied complete set of simple modules.
pub fn radical(h: &HopfData, simples: Option<&[ModuleRep]>) -> Result<Subspace, EngineError> {
    let t = trace_form(h)?;
    let rad = t.kernel()?;
    let gens = h.generating_set();
    for x in &rad.basis.data {
        let xe = AlgElem::from_sparse_row(h.order, h.dim, x);
        for g in &gens {
            let left = h.mult_basis_elem(*g, &xe)?;
            let right = h.mult_elem_basis(&xe, *g)?;
            if !rad.contains_vector(&left.as_sparse_row())
                || !rad.contains_vector(&right.as_sparse_row())
            {
                return Err(EngineError::Internal(
                    "radical of the trace form is not an ideal".into(),
                ));
            }
        }
    }
    let nilpotent_certified = match simples {
        Some(reps) => {
            // rad annihilates every simple and has the complementary
            // dimension of the split semisimple quotient
            let mut ssdim = 0usize;
            let mut ok = true;
            for rep in reps {
                ssdim += rep.mdim * rep.mdim;
                for x in &rad.basis.data {
                    let xe = AlgElem::from_sparse_row(h.order, h.dim, x);
                    if !rep.act_elem(&xe)?.is_zero() {
                        ok = false;
                    }
                }
            }
            ok && rad.dim() + ssdim == h.dim
        }
        None => false,
    };
    if !nilpotent_certified {
        // direct power iteration: rad ⊇ rad² ⊇ … must reach 0 within dim steps
        let mut current = rad.clone();
        let mut steps = 0usize;
        while current.dim() > 0 {
            steps += 1;
            if steps > h.dim {
                return Err(EngineError::Internal(
                    "radical power iteration did not terminate".into(),
                ));
            }
            let mut rows: Vec<SparseRow> = Vec::new();
            for x in &rad.basis.data {
                let xe = AlgElem::from_sparse_row(h.order, h.dim, x);
                for v in &current.basis.data {
                    let ve = AlgElem::from_sparse_row(h.order, h.dim, v);
                    rows.push(h.mult_elems(&xe, &ve)?.as_sparse_row());
                }
            }
            let next = Subspace::from_rows(h.order, h.dim, rows)?;
            if next.dim() >= current.dim() && next.dim() > 0 {
                return Err(EngineError::Internal(
                    "radical powers do not strictly decrease".into(),
                ));
            }
            current = next;
        }
    }
    Ok(rad)
}

/// Membership of an element in the radical of the trace form, without
/// computing the kernel.
pub fn in_trace_form_radical(h: &HopfData, x: &AlgElem) -> Result<bool, EngineError> {
    let tau = regular_trace(h)?;
    for j in 0..h.dim {
        let prod = h.mult_elem_basis(x, j)?;
        if !tau.eval(&prod)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
