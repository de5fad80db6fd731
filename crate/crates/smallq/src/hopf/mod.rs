//! A generic engine for finite-dimensional Hopf algebras presented by exact
//! structure tensors.

pub mod algebra;
pub mod axioms;
pub mod blocks;
pub mod fixtures;
pub mod invariants;
pub mod json;
pub mod quasitriangular;

pub use algebra::{AlgElem, Functional, HopfData, ModuleRep};
pub use axioms::{verify_hopf_axioms, AxiomReport};
pub use blocks::{blocks_and_cartan, hc_center, hom_space, hom_space_from_actions, BlockData};
pub use fixtures::cyclic_group_algebra;
pub use invariants::{
    ad_dual, ad_left, ad_right, center, cointegrals, higman_ideal, integrals, radford_maps,
    radical, trace_spaces, Cointegrals, Integrals, RadfordMaps, TraceSpaces,
};
pub use quasitriangular::{
    drinfeld_machinery, fourier, modular_check, restrict_operator, ribbon_solve, DrinfeldMachinery,
    Fourier, ModularReport, RMatrix, Ribbon, TensorElem,
};
