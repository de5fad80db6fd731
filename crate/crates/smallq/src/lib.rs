//! smallq: exact computations with small quantum groups at odd roots of unity.
//!
//! The crate builds u_q(sl2) as a finite-dimensional Hopf algebra over the
//! cyclotomic field Q(ζ_l), entirely in exact arithmetic, and verifies the
//! structure of its (derived) center: integrals and cointegrals, the Radford
//! and Drinfeld maps, the quantum Fourier transform and ribbon element, the
//! Higman ideal and its intersection description, divided-power operators,
//! block and Cartan data, affine Weyl block combinatorics for sl_n, and the
//! graded cohomology table of the principal block.
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --release -p smallq --example hopf_axioms       # axiom checker
//! cargo run --release -p smallq --example center_kerler     # center + nilpotent generators
//! cargo run --release -p smallq --example higman_intersection
//! cargo run --release -p smallq --example fourier_modular   # modular action scalars
//! cargo run --release -p smallq --example divided_powers    # big-quantum-group action
//! cargo run --release -p smallq --example block_grid        # affine Weyl orbit counts
//! cargo run --release -p smallq --example derived_center    # graded cohomology table
//! ```
//!
//! The `smallq` binary exposes the same functionality as subcommands
//! (`center`, `verify-all`, `blocks`, `hh`, `export`).

pub mod cyc;
pub mod error;
pub mod hhgeom;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod uqsl2;
pub mod weyl;

pub mod cli;

pub use cyc::{CycNum, QContext};
pub use error::EngineError;
pub use linalg::{Mat, Subspace};
