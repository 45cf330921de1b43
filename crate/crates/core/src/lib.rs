//! Unit-interval parking functions, their prime decomposition, and their
//! correspondence with the faces of the permutohedron.
//!
//! A preference list `a = (a_1, ..., a_n)` is a parking function when every car
//! parks under the one-way-street protocol. It is unit-interval when no car ends
//! up more than one spot past its preference. Unit-interval parking functions of
//! length `n` with total displacement `k` are in bijection with the
//! `k`-dimensional faces of the permutohedron `P(n)`, through ordered set
//! partitions of `[n]`:
//!
//! ```
//! use permupark::{phi, psi, OrderedSetPartition, PrefList};
//!
//! let face: OrderedSetPartition = "4/13/2".parse().unwrap();
//! let label = psi(&face);
//! assert_eq!(label.to_string(), "2,4,2,1");
//! assert_eq!(phi(&label).unwrap(), face);
//! assert_eq!(label.total_displacement().unwrap(), 1);
//! ```
//!
//! The [`oracle`] module re-derives every count by brute force over `[n]^n`.

pub mod bijection;
pub mod counting;
pub mod dyck;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod osp;
pub mod parking;
pub mod perm;
pub mod permutohedron;
pub mod prime;
pub mod symmetry;

pub use bijection::{phi, psi, roundtrip_check, scatter, RoundtripReport};
pub use dyck::{dyck_height, is_upf_via_dyck, pf_to_labeled_dyck, LabeledDyckPath, Step};
pub use error::{Error, Result};
pub use limits::Limits;
pub use osp::{enumerate_osps, FubiniRanking, OrderedSetPartition};
pub use parking::{DisplacementPartition, ParkResult, PrefList};
pub use perm::Permutation;
pub use permutohedron::{build_face_lattice, Face, FaceLattice};
pub use prime::{pipe, unique_prime_upf, PrimeComponentList};
