//! Exact symmetric functions over `Q(q,t)`: Hall-Littlewood and Macdonald
//! families, the Macdonald operators and their limits as the number of
//! variables goes to infinity, and checks of the identities relating them.

pub mod error;
pub mod families;
pub mod macops;
pub mod partitions;
pub mod ring;
pub mod rq;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use rq::{IntPoly2, RatFun};
pub use symfun::{Basis, SymFun};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rational-functions.md")]
    mod rational_functions {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/bases.md")]
    mod bases {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
