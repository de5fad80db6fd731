//! Multiplicity bookkeeping for the adjoint representation of u_q(sl2):
//! counts of trivial summands and projective-cover multiplicities, read off
//! from the pairing between Hom(L(0), u_ad) and Hom(u_ad, L(0)).

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::AlgElem;
use crate::hopf::blocks::hom_space_from_actions;
use crate::hopf::invariants::ad_left;
use crate::linalg::{Mat, SparseRow, Subspace};
use crate::uqsl2::Analysis;

/// Dot product of two sorted sparse rows.
pub fn sparse_dot(order: u64, a: &SparseRow, b: &SparseRow) -> Result<CycNum, EngineError> {
    let mut acc = CycNum::zero(order);
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.add(&a[i].1.mul(&b[j].1)?)?;
                i += 1;
                j += 1;
            }
        }
    }
    Ok(acc)
}

pub struct OstrikReport {
    pub hom_into_ad: usize,
    pub hom_from_ad: usize,
    /// Rank of the pairing of head maps against socle maps: the number of
    /// trivial direct summands.
    pub pairing_rank: usize,
    /// Corank on the center side: the multiplicity of P(0).
    pub pairing_corank: usize,
    /// The kernel of all head maps inside the center equals the Higman ideal.
    pub kernel_is_higman: bool,
}

pub fn ostrik_counts(an: &Analysis) -> Result<OstrikReport, EngineError> {
    let h = &an.q.h;
    let n = h.dim;
    let order = h.order;
    // generator action on u_ad and on the trivial module
    let gens = h.generating_set();
    let mut ad_mats = Vec::with_capacity(gens.len());
    let mut triv_mats = Vec::with_capacity(gens.len());
    for g in &gens {
        ad_mats.push(ad_left(h, &AlgElem::basis(order, n, *g))?);
        let mut t = Mat::zero(order, 1, 1);
        t.set(0, 0, h.counit[*g].clone());
        triv_mats.push(t);
    }
    // Hom(L(0), u_ad): maps k → u_ad
    let into_pairs: Vec<(Mat, Mat)> = triv_mats
        .iter()
        .cloned()
        .zip(ad_mats.iter().cloned())
        .collect();
    let hom_into = hom_space_from_actions(order, 1, n, &into_pairs)?;
    // Hom(u_ad, L(0)): maps u_ad → k
    let from_pairs: Vec<(Mat, Mat)> = ad_mats
        .iter()
        .cloned()
        .zip(triv_mats.iter().cloned())
        .collect();
    let hom_from = hom_space_from_actions(order, n, 1, &from_pairs)?;

    // pairing matrix: P[f][z] = f(z) over the two bases
    let fdim = hom_from.dim();
    let zdim = hom_into.dim();
    let mut pairing = Mat::zero(order, fdim, zdim);
    for (fi, frow) in hom_from.basis.data.iter().enumerate() {
        for (zi, zrow) in hom_into.basis.data.iter().enumerate() {
            let acc = sparse_dot(order, frow, zrow)?;
            if !acc.is_zero() {
                pairing.set(fi, zi, acc);
            }
        }
    }
    let pairing_rank = pairing.rank()?;
    let pairing_corank = zdim - pairing_rank;

    // kernel of all head maps inside the center = Higman ideal
    let ker = pairing.kernel()?; // coordinates in the hom_into basis
    let mut rows = Vec::new();
    for coord_row in &ker.basis.data {
        let mut v = AlgElem::zero(order, n);
        for (j, c) in coord_row {
            let z = AlgElem::from_sparse_row(order, n, &hom_into.basis.data[*j]);
            v = v.add(&z.scale(c)?)?;
        }
        rows.push(v.as_sparse_row());
    }
    let kernel_subspace = Subspace::from_rows(order, n, rows)?;
    let kernel_is_higman = kernel_subspace == an.higman;

    Ok(OstrikReport {
        hom_into_ad: zdim,
        hom_from_ad: fdim,
        pairing_rank,
        pairing_corank,
        kernel_is_higman,
    })
}
