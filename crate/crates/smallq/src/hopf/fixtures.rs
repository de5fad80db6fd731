//! Small reference Hopf algebras used as controls in tests and the
//! verification suite.

use crate::cyc::CycNum;
use crate::hopf::algebra::{AlgElem, HopfData};

/// The group algebra k[Z/n] over Q(ζ_order): basis g⁰, …, g^{n−1},
/// Δ(g^a) = g^a⊗g^a, S(g^a) = g^{−a}. Semisimple, cocommutative.
pub fn cyclic_group_algebra(n: usize, order: u64) -> HopfData {
    let dim = n;
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            mult.push(AlgElem::basis(order, dim, (i + j) % n));
        }
    }
    let coprod = (0..dim).map(|i| vec![(i, i, CycNum::one(order))]).collect();
    let counit = vec![CycNum::one(order); dim];
    let antipode: Vec<AlgElem> = (0..dim)
        .map(|i| AlgElem::basis(order, dim, (n - i) % n))
        .collect();
    let word_decomp = (0..dim)
        .map(|i| if i == 0 { None } else { Some((i - 1, 1)) })
        .collect();
    HopfData {
        dim,
        order,
        labels: (0..dim).map(|i| format!("g^{i}")).collect(),
        mult,
        unit: AlgElem::basis(order, dim, 0),
        coprod,
        counit,
        antipode: antipode.clone(),
        antipode_inv: antipode,
        generators: Some(vec![1]),
        word_decomp,
    }
}
