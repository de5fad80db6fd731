//! Block decomposition, idempotent lifting, Cartan matrices, Hom spaces and
//! the Harish-Chandra center.
//!
//! Blocks are separated by the central characters of a complete set of
//! absolutely irreducible simple modules; idempotents are then obtained by an
//! exact Newton lift (e ← 3e² − 2e³), which terminates because the defect
//! x² − x annihilates every simple and is therefore nilpotent.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, Functional, HopfData, ModuleRep};
use crate::hopf::invariants::sparse_to_dense;
use crate::linalg::{Mat, SparseRow, Subspace};
use num::rational::BigRational;
use num::ToPrimitive;

/// Central character value: the scalar by which a central element acts on a
/// simple module. Errors if the action is not scalar.
pub fn central_character(rep: &ModuleRep, z: &AlgElem) -> Result<CycNum, EngineError> {
    let m = rep.act_elem(z)?;
    let scalar = m.get(0, 0);
    let expected = Mat::identity(rep.order, rep.mdim).scale(&scalar)?;
    if m != expected {
        return Err(EngineError::StructureCheck(
            "central element does not act by a scalar on a simple module".into(),
        ));
    }
    Ok(scalar)
}

pub struct BlockData {
    /// Partition of simple-module indices into blocks.
    pub classes: Vec<Vec<usize>>,
    /// Central block idempotents, one per class, summing to 1.
    pub idempotents: Vec<AlgElem>,
    /// One primitive idempotent of H per simple module.
    pub primitive_idempotents: Vec<AlgElem>,
    /// Full Cartan matrix: cartan[i][j] = dim Hom(P_j, P_i) = [P_i : L_j].
    pub cartan: Vec<Vec<u64>>,
    /// Rank of each block's Cartan submatrix over Q.
    pub block_cartan_ranks: Vec<usize>,
    /// Rank of the full Cartan matrix over Q.
    pub cartan_rank: usize,
}

/// Newton lift of an approximate idempotent (x² − x nilpotent): iterate
/// e ← 3e² − 2e³ until exact, failing after dim iterations.
fn newton_lift_idempotent(h: &HopfData, x: &AlgElem) -> Result<AlgElem, EngineError> {
    let mut e = x.clone();
    for _ in 0..=h.dim {
        let e2 = h.mult_elems(&e, &e)?;
        if e2 == e {
            return Ok(e);
        }
        let e3 = h.mult_elems(&e2, &e)?;
        let three = CycNum::from_integer(h.order, 3);
        let minus_two = CycNum::from_integer(h.order, -2);
        e = e2.scale(&three)?.add(&e3.scale(&minus_two)?)?;
    }
    Err(EngineError::StructureCheck(
        "idempotent lift did not terminate".into(),
    ))
}

/// The trace tensor T2[p][q] = Tr(L_{e_p}∘R_{e_q}), assembled as a sparse
/// product over the structure constants. Since L_a and R_b are commuting
/// projections for idempotents a, b, the dimension of aHb is the bilinear
/// evaluation Σ a_p b_q T2[p][q].
pub struct TraceTensor {
    order: u64,
    dim: usize,
    entries: Vec<CycNum>,
}

impl TraceTensor {
    pub fn build(h: &HopfData) -> Result<TraceTensor, EngineError> {
        let n = h.dim;
        let mut entries = vec![CycNum::zero(h.order); n * n];
        // T2[p][q] = Σ_{k,m} coeff_m(e_p e_k) · coeff_k(e_m e_q)
        // loop over (k, m): join the lists {(p, coeff_m(e_pe_k))} and
        // {(q, coeff_k(e_me_q))}
        let mut left_lists: Vec<Vec<(usize, CycNum)>> = vec![vec![]; n * n];
        for p in 0..n {
            for k in 0..n {
                for (m, c) in &h.basis_product(p, k).terms {
                    left_lists[k * n + m].push((p, c.clone()));
                }
            }
        }
        for m in 0..n {
            for q in 0..n {
                let prod = h.basis_product(m, q);
                if prod.terms.is_empty() {
                    continue;
                }
                for (k, c2) in &prod.terms {
                    let lefts = &left_lists[*k * n + m];
                    for (p, c1) in lefts {
                        let idx = p * n + q;
                        let v = c1.mul(c2)?;
                        if !v.is_zero() {
                            entries[idx] = entries[idx].add(&v)?;
                        }
                    }
                }
            }
        }
        Ok(TraceTensor {
            order: h.order,
            dim: n,
            entries,
        })
    }

    /// dim a·H·b for idempotents a, b (exact; must come out a nonnegative
    /// integer).
    pub fn corner_dim(&self, a: &AlgElem, b: &AlgElem) -> Result<u64, EngineError> {
        let mut acc = CycNum::zero(self.order);
        for (p, cp) in &a.terms {
            for (q, cq) in &b.terms {
                let t = &self.entries[p * self.dim + q];
                if t.is_zero() {
                    continue;
                }
                acc = acc.add(&t.mul(cp)?.mul(cq)?)?;
            }
        }
        let r = acc.as_rational().ok_or_else(|| {
            EngineError::Internal("corner dimension is not rational".into())
        })?;
        if !r.is_integer() {
            return Err(EngineError::Internal(
                "corner dimension is not an integer".into(),
            ));
        }
        r.to_integer()
            .to_u64()
            .ok_or_else(|| EngineError::Internal("corner dimension out of range".into()))
    }
}

/// Block decomposition and Cartan data from a complete set of simples.
pub fn blocks_and_cartan(
    h: &HopfData,
    simples: &[ModuleRep],
    center_sub: &Subspace,
) -> Result<BlockData, EngineError> {
    let n = h.dim;
    let ns = simples.len();
    // absolute irreducibility: End(L) must be one-dimensional
    for (i, rep) in simples.iter().enumerate() {
        let end_dim = rep.endomorphism_dim(h)?;
        if end_dim != 1 {
            return Err(EngineError::StructureCheck(format!(
                "simple module {i} is not absolutely split: End has dim {end_dim}"
            )));
        }
    }
    // the simples must exhaust the semisimple quotient
    let sum_sq: usize = simples.iter().map(|r| r.mdim * r.mdim).sum();
    if sum_sq > n {
        return Err(EngineError::StructureCheck(
            "supplied simple modules exceed the algebra dimension".into(),
        ));
    }

    // 1. central characters on the center basis
    let zbasis: Vec<AlgElem> = center_sub
        .basis
        .data
        .iter()
        .map(|row| AlgElem::from_sparse_row(h.order, n, row))
        .collect();
    let mut characters: Vec<Vec<CycNum>> = Vec::with_capacity(ns);
    for rep in simples {
        let mut vals = Vec::with_capacity(zbasis.len());
        for z in &zbasis {
            vals.push(central_character(rep, z)?);
        }
        characters.push(vals);
    }
    // 2. linkage classes = equal central characters
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..ns {
        match classes
            .iter_mut()
            .find(|c| characters[c[0]] == characters[i])
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    // 3. block idempotents: solve ω_m(x) = [m ∈ class] on the center, lift
    let mut idempotents: Vec<AlgElem> = Vec::new();
    for class in &classes {
        // rows: for each simple m: Σ_j coords_j·ω_m(z_j) = indicator
        let mut rows: Vec<SparseRow> = Vec::new();
        let mut rhs: Vec<CycNum> = Vec::new();
        for m in 0..ns {
            let row: SparseRow = characters[m]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            rows.push(row);
            rhs.push(if class.contains(&m) {
                CycNum::one(h.order)
            } else {
                CycNum::zero(h.order)
            });
        }
        let sys = Mat::from_rows(h.order, zbasis.len(), rows);
        let coords = sys.solve(&rhs)?.ok_or_else(|| {
            EngineError::StructureCheck(
                "central characters do not separate the linkage classes".into(),
            )
        })?;
        let mut x = AlgElem::zero(h.order, n);
        for (j, c) in coords.into_iter().enumerate() {
            x = x.add(&zbasis[j].scale(&c)?)?;
        }
        idempotents.push(newton_lift_idempotent(h, &x)?);
    }
    // orthogonality and completeness
    let mut total = AlgElem::zero(h.order, n);
    for (a, ea) in idempotents.iter().enumerate() {
        total = total.add(ea)?;
        for (b, eb) in idempotents.iter().enumerate() {
            let prod = h.mult_elems(ea, eb)?;
            let expect = if a == b {
                ea.clone()
            } else {
                AlgElem::zero(h.order, n)
            };
            if prod != expect {
                return Err(EngineError::StructureCheck(
                    "block idempotents are not orthogonal".into(),
                ));
            }
        }
    }
    if total != h.unit {
        return Err(EngineError::StructureCheck(
            "block idempotents do not sum to 1".into(),
        ));
    }

    // 4. primitive idempotents: one per simple, orthogonal across the set
    let mut prims: Vec<AlgElem> = Vec::new();
    for m in 0..ns {
        // linear system: ρ_m(x) = E_00 and ρ_{m'}(x) = 0 for m' ≠ m
        let mut rows: Vec<SparseRow> = Vec::new();
        let mut rhs: Vec<CycNum> = Vec::new();
        for (mi, rep) in simples.iter().enumerate() {
            for r in 0..rep.mdim {
                for c in 0..rep.mdim {
                    let mut row: SparseRow = Vec::new();
                    for i in 0..n {
                        let v = rep.action[i].get(r, c);
                        if !v.is_zero() {
                            row.push((i, v));
                        }
                    }
                    rows.push(row);
                    rhs.push(if mi == m && r == 0 && c == 0 {
                        CycNum::one(h.order)
                    } else {
                        CycNum::zero(h.order)
                    });
                }
            }
        }
        let sys = Mat::from_rows(h.order, n, rows);
        let coords = sys.solve(&rhs)?.ok_or_else(|| {
            EngineError::StructureCheck(format!(
                "no preimage of the matrix unit for simple {m} (action not surjective?)"
            ))
        })?;
        let mut x = AlgElem::from_terms(h.order, n, coords.into_iter().enumerate().collect());
        // orthogonalize against the previously lifted idempotents, then lift
        if !prims.is_empty() {
            let mut e_sum = AlgElem::zero(h.order, n);
            for p in &prims {
                e_sum = e_sum.add(p)?;
            }
            let one_minus = h.unit.sub(&e_sum)?;
            x = h.mult_elems(&h.mult_elems(&one_minus, &x)?, &one_minus)?;
        }
        let e = newton_lift_idempotent(h, &x)?;
        if e.is_zero() {
            return Err(EngineError::StructureCheck(format!(
                "primitive idempotent for simple {m} lifted to zero"
            )));
        }
        prims.push(e);
    }
    // pairwise orthogonality of the lifted set
    for a in 0..prims.len() {
        for b in 0..prims.len() {
            if a == b {
                continue;
            }
            if !h.mult_elems(&prims[a], &prims[b])?.is_zero() {
                return Err(EngineError::StructureCheck(
                    "lifted primitive idempotents are not orthogonal".into(),
                ));
            }
        }
    }

    // 5. Cartan entries via corner dimensions
    let tt = TraceTensor::build(h)?;
    let mut cartan = vec![vec![0u64; ns]; ns];
    for i in 0..ns {
        for j in 0..ns {
            cartan[i][j] = tt.corner_dim(&prims[j], &prims[i])?;
        }
    }
    // primitivity certificate: e_m has total rank 1 across the simples
    for (m, e) in prims.iter().enumerate() {
        let mut total_rank = 0usize;
        for rep in simples {
            total_rank += rep.act_elem(e)?.rank()?;
        }
        if total_rank != 1 {
            return Err(EngineError::StructureCheck(format!(
                "lifted idempotent for simple {m} is not primitive"
            )));
        }
    }

    // 6. ranks over Q
    let rank_of = |entries: &[Vec<u64>]| -> Result<usize, EngineError> {
        let rows: Vec<Vec<CycNum>> = entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| CycNum::from_integer(h.order, *v as i64))
                    .collect()
            })
            .collect();
        Mat::from_dense(h.order, &rows).rank()
    };
    let cartan_rank = rank_of(&cartan)?;
    let mut block_cartan_ranks = Vec::new();
    for class in &classes {
        let sub: Vec<Vec<u64>> = class
            .iter()
            .map(|i| class.iter().map(|j| cartan[*i][*j]).collect())
            .collect();
        block_cartan_ranks.push(rank_of(&sub)?);
    }

    Ok(BlockData {
        classes,
        idempotents,
        primitive_idempotents: prims,
        cartan,
        block_cartan_ranks,
        cartan_rank,
    })
}

/// Hom space between two modules given as matched generator-action pairs:
/// solutions f (mdim_N × mdim_M) of f∘ρ_M(g) = ρ_N(g)∘f.
pub fn hom_space_from_actions(
    order: u64,
    mdim_m: usize,
    mdim_n: usize,
    pairs: &[(Mat, Mat)],
) -> Result<Subspace, EngineError> {
    // unknowns f[i][j] (i < mdim_n rows, j < mdim_m cols), flattened i*mdim_m+j
    let unknowns = mdim_n * mdim_m;
    let mut rows: Vec<SparseRow> = Vec::new();
    for (rho_m, rho_n) in pairs {
        // (f·ρ_M − ρ_N·f)[i][k] = Σ_j f[i][j]ρ_M[j][k] − Σ_j ρ_N[i][j]f[j][k]
        // build sparse rows indexed by (i, k)
        let mut row_map: std::collections::BTreeMap<(usize, usize), SparseRow> =
            std::collections::BTreeMap::new();
        for j in 0..mdim_m {
            for (k, v) in &rho_m.data[j] {
                for i in 0..mdim_n {
                    row_map
                        .entry((i, *k))
                        .or_default()
                        .push((i * mdim_m + j, v.clone()));
                }
            }
        }
        for i in 0..mdim_n {
            for (j, v) in &rho_n.data[i] {
                for k in 0..mdim_m {
                    row_map
                        .entry((i, k))
                        .or_default()
                        .push((*j * mdim_m + k, v.neg()));
                }
            }
        }
        for (_, row) in row_map {
            rows.push(row);
        }
    }
    Mat::from_rows(order, unknowns, rows).kernel()
}

/// Hom between ModuleReps over the same algebra, via the generating set.
pub fn hom_space(
    h: &HopfData,
    m: &ModuleRep,
    n_rep: &ModuleRep,
) -> Result<Subspace, EngineError> {
    let pairs: Vec<(Mat, Mat)> = h
        .generating_set()
        .iter()
        .map(|g| (m.action[*g].clone(), n_rep.action[*g].clone()))
        .collect();
    hom_space_from_actions(h.order, m.mdim, n_rep.mdim, &pairs)
}

/// The Harish-Chandra center: span of j_l applied to the shifted simple
/// characters χ_L(d·−). Each shifted character is checked to lie in c_l.
pub fn hc_center(
    h: &HopfData,
    j_l: &Mat,
    drinfeld: &AlgElem,
    simples: &[ModuleRep],
    c_l: &Subspace,
    center_sub: &Subspace,
) -> Result<Subspace, EngineError> {
    let mut rows: Vec<SparseRow> = Vec::new();
    for rep in simples {
        let chi = rep.shifted_character(h, drinfeld)?;
        if !c_l.contains_vector(&chi.as_sparse_row()) {
            return Err(EngineError::StructureCheck(
                "a shifted simple character does not lie in c_l".into(),
            ));
        }
        let img = j_l.apply(&chi.values)?;
        rows.push(
            img.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        );
    }
    let z_hc = Subspace::from_rows(h.order, h.dim, rows)?;
    if !center_sub.contains(&z_hc)? {
        return Err(EngineError::StructureCheck(
            "Harish-Chandra center is not contained in the center".into(),
        ));
    }
    Ok(z_hc)
}

/// Span of the shifted characters themselves (the image of the Grothendieck
/// ring under the left shift), as a subspace of H*.
pub fn shifted_character_span(
    h: &HopfData,
    drinfeld: &AlgElem,
    simples: &[ModuleRep],
) -> Result<Subspace, EngineError> {
    let rows: Vec<SparseRow> = simples
        .iter()
        .map(|rep| {
            rep.shifted_character(h, drinfeld)
                .map(|f| f.as_sparse_row())
        })
        .collect::<Result<_, _>>()?;
    Subspace::from_rows(h.order, h.dim, rows)
}

/// Span of shifted characters of the projective covers, reconstructed from
/// the Cartan matrix: χ_{P(i)} = Σ_j C[i][j]·χ_{L(j)}.
pub fn shifted_projective_character_span(
    h: &HopfData,
    drinfeld: &AlgElem,
    simples: &[ModuleRep],
    cartan: &[Vec<u64>],
) -> Result<Subspace, EngineError> {
    let chis: Vec<Functional> = simples
        .iter()
        .map(|rep| rep.shifted_character(h, drinfeld))
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<SparseRow> = Vec::new();
    for row in cartan {
        let mut f = Functional::zero(h.order, h.dim);
        for (j, mult) in row.iter().enumerate() {
            if *mult == 0 {
                continue;
            }
            let c = CycNum::from_integer(h.order, *mult as i64);
            for (k, v) in chis[j].values.iter().enumerate() {
                f.values[k] = f.values[k].add(&v.mul(&c)?)?;
            }
        }
        rows.push(f.as_sparse_row());
    }
    Subspace::from_rows(h.order, h.dim, rows)
}

/// Multiply a subspace of H elementwise by an element, returning the span of
/// the products (used for annihilator checks).
pub fn multiply_subspace(
    h: &HopfData,
    x: &AlgElem,
    sub: &Subspace,
) -> Result<Subspace, EngineError> {
    let rows: Vec<SparseRow> = sub
        .basis
        .data
        .iter()
        .map(|row| {
            let e = AlgElem::from_sparse_row(h.order, h.dim, row);
            h.mult_elems(x, &e).map(|p| p.as_sparse_row())
        })
        .collect::<Result<_, _>>()?;
    Subspace::from_rows(h.order, h.dim, rows)
}

/// Coordinates of an element of the center in a block: the scalar of its
/// action on any simple module of that block.
pub fn block_scalar(
    simples: &[ModuleRep],
    classes: &[Vec<usize>],
    z: &AlgElem,
    block: usize,
) -> Result<CycNum, EngineError> {
    let rep = &simples[classes[block][0]];
    central_character(rep, z)
}

pub use crate::hopf::invariants::sparse_to_dense as _sparse_to_dense_reexport;

#[allow(dead_code)]
fn _unused(order: u64) {
    let _ = sparse_to_dense(order, 0, &vec![]);
    let _: Option<BigRational> = None;
}
