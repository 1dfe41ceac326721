//! Schubert calculus on `G(t, S_d)`, Borel–Weil–Bott, symmetric group
//! characters, and the resolution of the rank loci `Le(i, r)`.

pub mod bott;
pub mod components;
pub mod kronecker;
pub mod lascoux;
pub mod lr;
pub mod partition;
pub mod porteous;

pub use bott::{bott, bott_weight, schur_dim, schur_dim_weyl, weyl_dim, BottResult};
pub use components::{c1_c2_analysis, c2_witness, candidate_components, Candidate, ComponentReport};
pub use kronecker::{dvir_bound, dvir_check, dvir_scan, kronecker, DEFAULT_CAP_WEIGHT};
pub use lascoux::{check_vanishing, e1_table, expected_row, lascoux_ranks, E1Table, RankData, ResolutionTable};
pub use lr::SchubertClass;
pub use partition::Partition;
pub use porteous::{chern_taut, porteous_class};
