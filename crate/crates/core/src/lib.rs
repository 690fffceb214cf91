//! Exact computer algebra for Jack–Laurent symmetric functions.

pub mod closed_forms;
pub mod coeff;
pub mod conjectures;
pub mod error;
pub mod finite_n;
pub mod jack;
pub mod laurent;
pub mod operators;
pub mod par;
pub mod partitions;
pub mod schur;
pub mod verify;

pub use coeff::{Coeff, CoeffError, ParamRat, Params};
pub use error::{JackError, Result};
pub use laurent::{LaurentSymFunc, Lsf, PMonomial};
pub use partitions::{Bipartition, IntSequence, Partition};
