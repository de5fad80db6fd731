//! R-matrix machinery: quasi-triangularity checks, the Drinfeld maps and
//! element, factorizability, the quantum Fourier transform, the ribbon
//! element and the projective modular-group action.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, Functional, HopfData};
use crate::hopf::invariants::{ad_dual, ad_left, sparse_to_dense, RadfordMaps};
use crate::linalg::{Mat, SparseRow, Subspace};
use std::collections::BTreeMap;

/// Sparse element of H⊗H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    pub dim: usize,
    pub order: u64,
    pub terms: BTreeMap<(usize, usize), CycNum>,
}

impl TensorElem {
    pub fn zero(order: u64, dim: usize) -> Self {
        TensorElem {
            dim,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(h: &HopfData) -> Self {
        let mut t = TensorElem::zero(h.order, h.dim);
        for (a, ca) in &h.unit.terms {
            for (b, cb) in &h.unit.terms {
                t.insert((*a, *b), ca.mul(cb).unwrap());
            }
        }
        t
    }

    pub fn insert(&mut self, key: (usize, usize), v: CycNum) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&v).unwrap();
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> Result<TensorElem, EngineError> {
        let mut out = TensorElem::zero(self.order, self.dim);
        for (k, v) in &self.terms {
            out.insert(*k, v.mul(c)?);
        }
        Ok(out)
    }

    pub fn swap(&self) -> TensorElem {
        let mut out = TensorElem::zero(self.order, self.dim);
        for ((a, b), v) in &self.terms {
            out.insert((*b, *a), v.clone());
        }
        out
    }

    pub fn mul(&self, other: &TensorElem, h: &HopfData) -> Result<TensorElem, EngineError> {
        let mut out = TensorElem::zero(self.order, self.dim);
        for ((a, b), v) in &self.terms {
            for ((c, d), w) in &other.terms {
                let coeff = v.mul(w)?;
                let left = h.basis_product(*a, *c);
                let right = h.basis_product(*b, *d);
                for (p, cp) in &left.terms {
                    for (q, cq) in &right.terms {
                        out.insert((*p, *q), coeff.mul(cp)?.mul(cq)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// (x ⊗ y) from two elements.
    pub fn from_pair(x: &AlgElem, y: &AlgElem) -> Result<TensorElem, EngineError> {
        let mut out = TensorElem::zero(x.order, x.dim);
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                out.insert((*a, *b), ca.mul(cb)?);
            }
        }
        Ok(out)
    }

    /// The n×n coefficient matrix X[a][b].
    pub fn as_matrix(&self) -> Mat {
        let mut m = Mat::zero(self.order, self.dim, self.dim);
        for ((a, b), v) in &self.terms {
            m.data[*a].push((*b, v.clone()));
        }
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
        m
    }

    /// Slice with a functional on the first leg: (f⊗id)(X).
    pub fn slice_left(&self, f: &Functional) -> Result<AlgElem, EngineError> {
        let mut terms: BTreeMap<usize, CycNum> = BTreeMap::new();
        for ((a, b), v) in &self.terms {
            if f.values[*a].is_zero() {
                continue;
            }
            let w = f.values[*a].mul(v)?;
            let e = terms.entry(*b).or_insert_with(|| CycNum::zero(self.order));
            *e = e.add(&w)?;
        }
        Ok(AlgElem::from_terms(
            self.order,
            self.dim,
            terms.into_iter().collect(),
        ))
    }

    /// Counit slices (ε⊗id)(X) and (id⊗ε)(X).
    pub fn counit_slices(&self, h: &HopfData) -> Result<(AlgElem, AlgElem), EngineError> {
        let mut left: BTreeMap<usize, CycNum> = BTreeMap::new();
        let mut right: BTreeMap<usize, CycNum> = BTreeMap::new();
        for ((a, b), v) in &self.terms {
            if !h.counit[*a].is_zero() {
                let w = h.counit[*a].mul(v)?;
                let e = left.entry(*b).or_insert_with(|| CycNum::zero(self.order));
                *e = e.add(&w)?;
            }
            if !h.counit[*b].is_zero() {
                let w = h.counit[*b].mul(v)?;
                let e = right.entry(*a).or_insert_with(|| CycNum::zero(self.order));
                *e = e.add(&w)?;
            }
        }
        Ok((
            AlgElem::from_terms(self.order, self.dim, left.into_iter().collect()),
            AlgElem::from_terms(self.order, self.dim, right.into_iter().collect()),
        ))
    }
}

/// Sparse element of H⊗H⊗H, used only for the hexagon checks.
type Tensor3 = BTreeMap<(usize, usize, usize), CycNum>;

fn t3_insert(t: &mut Tensor3, key: (usize, usize, usize), v: CycNum) {
    if v.is_zero() {
        return;
    }
    match t.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&v).unwrap();
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
    }
}

/// A quasi-triangular structure: R and its inverse.
#[derive(Clone)]
pub struct RMatrix {
    pub r: TensorElem,
    pub r_inv: TensorElem,
    /// Metadata recorded by the construction (e.g. the Cartan exponent found
    /// by search for u_q(sl2)).
    pub notes: Vec<String>,
}

impl RMatrix {
    /// All quasi-triangularity axioms; any failure is reported by name.
    pub fn verify(&self, h: &HopfData) -> Result<(), EngineError> {
        // invertibility
        let prod = self.r.mul(&self.r_inv, h)?;
        if prod != TensorElem::unit(h) {
            return Err(EngineError::AxiomFailure("R·R⁻¹ ≠ 1⊗1".into()));
        }
        // counit normalization
        let (eps_left, eps_right) = self.r.counit_slices(h)?;
        if eps_left != h.unit || eps_right != h.unit {
            return Err(EngineError::AxiomFailure(
                "counit normalization of R fails".into(),
            ));
        }
        // Δ^op(x)·R = R·Δ(x) on the generating set (complete since both
        // sides are multiplicative in x and R is invertible)
        for g in h.generating_set() {
            let dg = &h.coprod[g];
            let mut delta = TensorElem::zero(h.order, h.dim);
            let mut delta_op = TensorElem::zero(h.order, h.dim);
            for (j, k, c) in dg {
                delta.insert((*j, *k), c.clone());
                delta_op.insert((*k, *j), c.clone());
            }
            let lhs = delta_op.mul(&self.r, h)?;
            let rhs = self.r.mul(&delta, h)?;
            if lhs != rhs {
                return Err(EngineError::AxiomFailure(format!(
                    "Δ^op(g)R ≠ RΔ(g) at generator {g}"
                )));
            }
        }
        // hexagons: (Δ⊗id)(R) = R₁₃R₂₃ and (id⊗Δ)(R) = R₁₃R₁₂
        let mut lhs1: Tensor3 = BTreeMap::new();
        let mut lhs2: Tensor3 = BTreeMap::new();
        for ((i, j), v) in &self.r.terms {
            for (a, b, c) in &h.coprod[*i] {
                t3_insert(&mut lhs1, (*a, *b, *j), v.mul(c)?);
            }
            for (a, b, c) in &h.coprod[*j] {
                t3_insert(&mut lhs2, (*i, *a, *b), v.mul(c)?);
            }
        }
        let mut rhs1: Tensor3 = BTreeMap::new(); // R₁₃R₂₃
        let mut rhs2: Tensor3 = BTreeMap::new(); // R₁₃R₁₂
        for ((i, j), v) in &self.r.terms {
            for ((k, m), w) in &self.r.terms {
                let c = v.mul(w)?;
                // R₁₃R₂₃: (e_i⊗1⊗e_j)(1⊗e_k⊗e_m) = e_i⊗e_k⊗e_je_m
                for (p, cp) in &h.basis_product(*j, *m).terms {
                    t3_insert(&mut rhs1, (*i, *k, *p), c.mul(cp)?);
                }
                // R₁₃R₁₂: (e_i⊗1⊗e_j)(e_k⊗e_m⊗1) = e_ie_k⊗e_m⊗e_j
                for (p, cp) in &h.basis_product(*i, *k).terms {
                    t3_insert(&mut rhs2, (*p, *m, *j), c.mul(cp)?);
                }
            }
        }
        if lhs1 != rhs1 {
            return Err(EngineError::AxiomFailure("(Δ⊗id)(R) ≠ R₁₃R₂₃".into()));
        }
        if lhs2 != rhs2 {
            return Err(EngineError::AxiomFailure("(id⊗Δ)(R) ≠ R₁₃R₁₂".into()));
        }
        Ok(())
    }
}

pub struct DrinfeldMachinery {
    /// Monodromy R₂₁R.
    pub monodromy: TensorElem,
    /// j_r(f) = (f⊗id)(R₂₁R) as a matrix H* → H.
    pub j_r: Mat,
    /// j_l = j_r∘(S⁻¹)* as a matrix H* → H.
    pub j_l: Mat,
    /// Drinfeld element Σ S(R₂)R₁ and its inverse.
    pub drinfeld: AlgElem,
    pub drinfeld_inv: AlgElem,
    pub factorizable: bool,
}

/// Drinfeld maps and element. Checks S²(h) = d h d⁻¹ on the generating set
/// and the ad-intertwining property of j_l.
pub fn drinfeld_machinery(h: &HopfData, r: &RMatrix) -> Result<DrinfeldMachinery, EngineError> {
    let n = h.dim;
    let monodromy = r.r.swap().mul(&r.r, h)?;
    // j_r matrix: j_r(δ_i) = Σ_j M[i,j]e_j, so the matrix is Mᵀ
    let j_r = monodromy.as_matrix().transpose();
    let factorizable = j_r.rank()? == n;
    // j_l(f) = j_r(f∘S⁻¹); coordinates of f∘S⁻¹ are (S⁻¹)ᵀf
    let j_l = j_r.mul(&h.antipode_inv_matrix().transpose())?;
    // Drinfeld element
    let mut d = AlgElem::zero(h.order, n);
    for ((i, j), v) in &r.r.terms {
        let term = h.mult_elems(&h.antipode[*j], &AlgElem::basis(h.order, n, *i))?;
        d = d.add(&term.scale(v)?)?;
    }
    let d_inv_coords = h
        .left_mult_elem(&d)?
        .solve(&h.unit.to_dense())?
        .ok_or_else(|| EngineError::StructureCheck("Drinfeld element is not invertible".into()))?;
    let d_inv = AlgElem::from_terms(
        h.order,
        n,
        d_inv_coords.into_iter().enumerate().collect(),
    );
    // S² = conjugation by d, on generators (both sides are algebra maps)
    for g in h.generating_set() {
        let s2 = h.apply_antipode(&h.antipode[g])?;
        let conj = h.mult_elems(&h.mult_elems(&d, &AlgElem::basis(h.order, n, g))?, &d_inv)?;
        if s2 != conj {
            return Err(EngineError::AxiomFailure(format!(
                "S²(h) = d·h·d⁻¹ fails at generator {g}"
            )));
        }
    }
    Ok(DrinfeldMachinery {
        monodromy,
        j_r,
        j_l,
        drinfeld: d,
        drinfeld_inv: d_inv,
        factorizable,
    })
}

/// j_l intertwines ad* and ad, checked on the generating set.
pub fn drinfeld_intertwines(
    h: &HopfData,
    dr: &DrinfeldMachinery,
    full: bool,
) -> Result<bool, EngineError> {
    let idxs: Vec<usize> = if full {
        (0..h.dim).collect()
    } else {
        h.generating_set()
    };
    for g in idxs {
        let x = AlgElem::basis(h.order, h.dim, g);
        let lhs = dr.j_l.mul(&ad_dual(h, &x)?)?;
        let rhs = ad_left(h, &x)?.mul(&dr.j_l)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub struct Fourier {
    /// F = j_l∘ψ_l on H.
    pub f: Mat,
    /// F* = ψ_l∘j_l on H*.
    pub f_star: Mat,
}

/// The quantum Fourier transform; requires factorizability.
pub fn fourier(
    h: &HopfData,
    dr: &DrinfeldMachinery,
    rad: &RadfordMaps,
) -> Result<Fourier, EngineError> {
    if !dr.factorizable {
        return Err(EngineError::StructureCheck(
            "Fourier transform requires a factorizable R-matrix".into(),
        ));
    }
    let f = dr.j_l.mul(&rad.psi_l)?;
    let f_star = rad.psi_l.mul(&dr.j_l)?;
    // ad-intertwiner on generators
    for g in h.generating_set() {
        let x = AlgElem::basis(h.order, h.dim, g);
        let a = ad_left(h, &x)?;
        if f.mul(&a)? != a.mul(&f)? {
            return Err(EngineError::StructureCheck(format!(
                "Fourier transform fails to intertwine ad at generator {g}"
            )));
        }
    }
    Ok(Fourier { f, f_star })
}

/// Restrict an operator on H to an invariant subspace, returning the matrix
/// in the subspace basis; errors if the subspace is not invariant.
pub fn restrict_operator(m: &Mat, sub: &Subspace) -> Result<Mat, EngineError> {
    let k = sub.dim();
    let mut out = Mat::zero(m.order, k, k);
    for (idx, row) in sub.basis.data.iter().enumerate() {
        let img = m.apply(&sparse_to_dense(m.order, m.cols, row))?;
        let img_sparse: SparseRow = img
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let coords = sub.coordinates(&img_sparse).ok_or_else(|| {
            EngineError::StructureCheck("operator does not preserve the subspace".into())
        })?;
        for (j, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                out.data[j].push((idx, c));
            }
        }
    }
    for row in &mut out.data {
        row.sort_by_key(|(c, _)| *c);
    }
    Ok(out)
}

/// Solve M = α·N for a scalar α, exactly. Returns None if no scalar works.
pub fn proportionality_scalar(m: &Mat, n: &Mat) -> Result<Option<CycNum>, EngineError> {
    if m.rows != n.rows || m.cols != n.cols {
        return Err(EngineError::ShapeMismatch("proportionality".into()));
    }
    // first nonzero entry of n fixes α
    let mut alpha: Option<CycNum> = None;
    'find: for i in 0..n.rows {
        for (j, v) in &n.data[i] {
            let mv = m.get(i, *j);
            alpha = Some(mv.div(v)?);
            break 'find;
        }
    }
    let Some(alpha) = alpha else {
        return Ok(if m.is_zero() {
            Some(CycNum::one(m.order))
        } else {
            None
        });
    };
    let scaled = n.scale(&alpha)?;
    if &scaled == m {
        Ok(Some(alpha))
    } else {
        Ok(None)
    }
}

pub struct Ribbon {
    pub v: AlgElem,
    pub v_inv: AlgElem,
    /// Scalars by which v acts on the supplied simple modules.
    pub simple_scalars: Vec<CycNum>,
}

/// Find the ribbon element: the unique central square root of d·S(d) fixed
/// by S and compatible with the monodromy coproduct identity
/// Δ(v)(R₂₁R) = v⊗v. The search enumerates sign choices of the square root
/// blockwise, using the block idempotents of the center.
pub fn ribbon_solve(
    h: &HopfData,
    dr: &DrinfeldMachinery,
    center_sub: &Subspace,
    block_idempotents: &[AlgElem],
    block_scalar_of: &dyn Fn(&AlgElem, usize) -> Result<CycNum, EngineError>,
    simples_scalar_of: &dyn Fn(&AlgElem) -> Result<Vec<CycNum>, EngineError>,
) -> Result<Ribbon, EngineError> {
    let w = h.mult_elems(&dr.drinfeld, &h.apply_antipode(&dr.drinfeld)?)?;
    if !center_sub.contains_vector(&w.as_sparse_row()) {
        return Err(EngineError::StructureCheck("d·S(d) is not central".into()));
    }
    // blockwise square roots: w = Σ_B (α_B e_B + n_B) with n_B nilpotent;
    // √ per block is β(e_B + s) with β² = α_B, solved by the nilpotent
    // fixed-point s ← (n/α − s²)·(1/2).
    let mut block_roots: Vec<Vec<AlgElem>> = Vec::new();
    for (bi, e_b) in block_idempotents.iter().enumerate() {
        let w_b = h.mult_elems(&w, e_b)?;
        let alpha = block_scalar_of(&w, bi)?;
        if alpha.is_zero() {
            return Err(EngineError::StructureCheck(
                "d·S(d) has a nilpotent block component; no invertible square root".into(),
            ));
        }
        let beta = sqrt_in_cyclotomic(&alpha)?.ok_or_else(|| {
            EngineError::StructureCheck(format!(
                "no square root in the field for block scalar {alpha}"
            ))
        })?;
        // n = w_b/α − e_B is nilpotent in the block; solve (e_B + s)² = e_B + n
        let n_elem = h
            .mult_elems(&w_b, e_b)?
            .scale(&alpha.inv()?)?
            .sub(e_b)?;
        let half = CycNum::rational(h.order, 1, 2);
        let mut s = AlgElem::zero(h.order, h.dim);
        for _ in 0..=h.dim {
            let s_next = n_elem.sub(&h.mult_elems(&s, &s)?)?.scale(&half)?;
            if s_next == s {
                break;
            }
            s = s_next;
        }
        let root = e_b.add(&s)?.scale(&beta)?;
        // exactness check per block
        let sq = h.mult_elems(&root, &root)?;
        if sq != w_b {
            return Err(EngineError::StructureCheck(
                "blockwise square root reconstruction failed".into(),
            ));
        }
        block_roots.push(vec![root.clone(), root.scale(&CycNum::from_integer(h.order, -1))?]);
    }
    // enumerate sign patterns; keep candidates passing S(v) = v and v² = w
    let mut candidates: Vec<AlgElem> = Vec::new();
    let nblocks = block_roots.len();
    for mask in 0..(1u32 << nblocks) {
        let mut v = AlgElem::zero(h.order, h.dim);
        for (bi, roots) in block_roots.iter().enumerate() {
            let pick = (mask >> bi) & 1;
            v = v.add(&roots[pick as usize])?;
        }
        if h.mult_elems(&v, &v)? != w {
            continue;
        }
        if h.apply_antipode(&v)? != v {
            continue;
        }
        candidates.push(v);
    }
    // final filter: the monodromy coproduct identity
    let mut solutions: Vec<AlgElem> = Vec::new();
    for v in &candidates {
        let dv = h.coprod_of(v)?;
        let mut dv_t = TensorElem::zero(h.order, h.dim);
        for (a, b, c) in dv {
            dv_t.insert((a, b), c);
        }
        let lhs = dv_t.mul(&dr.monodromy, h)?;
        let rhs = TensorElem::from_pair(v, v)?;
        if lhs == rhs {
            solutions.push(v.clone());
        }
    }
    if solutions.len() != 1 {
        return Err(EngineError::StructureCheck(format!(
            "ribbon element not unique: {} candidate(s) satisfy all conditions (of {} square roots)",
            solutions.len(),
            candidates.len()
        )));
    }
    let v = solutions.remove(0);
    let v_inv_coords = h
        .left_mult_elem(&v)?
        .solve(&h.unit.to_dense())?
        .ok_or_else(|| EngineError::StructureCheck("ribbon element is not invertible".into()))?;
    let v_inv = AlgElem::from_terms(h.order, h.dim, v_inv_coords.into_iter().enumerate().collect());
    let simple_scalars = simples_scalar_of(&v)?;
    Ok(Ribbon {
        v,
        v_inv,
        simple_scalars,
    })
}

/// Square root of a cyclotomic number when it is ± a root of unity times a
/// rational square; returns None when no root exists in the field.
/// Sufficient for the scalars arising here (ribbon eigenvalues are roots of
/// unity for u_q(sl2)).
pub fn sqrt_in_cyclotomic(x: &CycNum) -> Result<Option<CycNum>, EngineError> {
    use num::rational::BigRational;
    use num::Signed;
    if x.is_zero() {
        return Ok(Some(x.clone()));
    }
    let order = x.order;
    // rational case: exact rational square root if it exists
    if let Some(r) = x.as_rational() {
        if r.is_positive() {
            let (n, d) = (r.numer().clone(), r.denom().clone());
            let ns = n.sqrt();
            let ds = d.sqrt();
            if &ns * &ns == n && &ds * &ds == d {
                return Ok(Some(CycNum::from_rational(
                    order,
                    BigRational::new(ns, ds),
                )));
            }
        }
        // fall through: a rational may still be a square of a non-rational
    }
    // root-of-unity multiples: x = r·ζ^k with r rational
    for k in 0..order {
        let z = CycNum::root_of_unity(order, k as i64);
        let quotient = x.div(&z)?;
        if let Some(r) = quotient.as_rational() {
            if r.is_positive() {
                let (n, d) = (r.numer().clone(), r.denom().clone());
                let ns = n.sqrt();
                let ds = d.sqrt();
                if &ns * &ns == n && &ds * &ds == d {
                    // ζ^k has a square root ζ^{k/2} or ζ^{(k+order)/2}
                    let half = if k % 2 == 0 {
                        k / 2
                    } else if order % 2 == 1 {
                        (k + order) / 2
                    } else {
                        continue;
                    };
                    let root = CycNum::root_of_unity(order, half as i64)
                        .scale(&BigRational::new(ns, ds));
                    debug_assert_eq!(root.mul(&root)?, *x);
                    return Ok(Some(root));
                }
            }
        }
    }
    Ok(None)
}

pub struct ModularReport {
    /// α with (F∘L)³ = α·F² on the center.
    pub alpha_center: Option<CycNum>,
    /// whether (F∘L)³ = α·F² holds on all of H with the same α.
    pub alpha_global: bool,
    /// β with F⁴ = β·id on the center.
    pub beta_center: Option<CycNum>,
    pub preserves_center: bool,
    pub preserves_higman: bool,
}

/// Modular-action verification: the scalars are computed, never assumed.
pub fn modular_check(
    h: &HopfData,
    f: &Mat,
    ribbon: &AlgElem,
    center_sub: &Subspace,
    higman: &Subspace,
) -> Result<ModularReport, EngineError> {
    let l_op = h.left_mult_elem(ribbon)?;
    let fl = f.mul(&l_op)?;
    let fl3 = fl.mul(&fl)?.mul(&fl)?;
    let f2 = f.mul(f)?;

    // on the center
    let fl3_z = restrict_operator(&fl3, center_sub)?;
    let f2_z = restrict_operator(&f2, center_sub)?;
    let alpha_center = proportionality_scalar(&fl3_z, &f2_z)?;
    let alpha_global = match &alpha_center {
        Some(a) => {
            let scaled = f2.scale(a)?;
            scaled == fl3
        }
        None => false,
    };
    let f4_z = f2_z.mul(&f2_z)?;
    let beta_center = proportionality_scalar(&f4_z, &Mat::identity(h.order, center_sub.dim()))?;

    let preserves_center = restrict_operator(f, center_sub).is_ok()
        && restrict_operator(&l_op, center_sub).is_ok();
    let preserves_higman =
        restrict_operator(f, higman).is_ok() && restrict_operator(&l_op, higman).is_ok();

    Ok(ModularReport {
        alpha_center,
        alpha_global,
        beta_center,
        preserves_center,
        preserves_higman,
    })
}
