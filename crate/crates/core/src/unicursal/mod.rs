//! Unicursal generation: group closure, Cayley graphs, Hamiltonian and
//! longest-cycle search, the Rankin parity oracle and Q-set rearrangement.

pub mod cayley;
pub mod group;
pub mod longest;
pub mod qset;
pub mod rankin;
pub mod search;

pub use cayley::{verify_word, CayleyGraph, Chain};
pub use group::{closure, subgroup_index, GroupTable};
pub use longest::{longest_cycle, Footprints, LongestOptions, LongestReport};
pub use qset::{
    parity_audit, qset_cosets, rearrange, sigma_perm, tau_perm, AuditReport, ChainCover, CosetLabel, Qsets,
};
pub use rankin::{rankin_oracle, RankinReport, RankinVerdict};
pub use search::{hamiltonian_cycle, HamiltonianOutcome, SearchOptions, SearchReport};
