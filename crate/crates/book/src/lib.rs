//! The guide in `book/` compiled as doc comments, so that `cargo test` runs
//! every snippet in it. One module per chapter keeps failures traceable to
//! their chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/instances.md")]
pub mod instances {}
#[doc = include_str!("../../../book/src/tree.md")]
pub mod tree {}
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}
#[doc = include_str!("../../../book/src/solving.md")]
pub mod solving {}
#[doc = include_str!("../../../book/src/magic.md")]
pub mod magic {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/partition.md")]
pub mod partition {}
#[doc = include_str!("../../../book/src/multi_user.md")]
pub mod multi_user {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
