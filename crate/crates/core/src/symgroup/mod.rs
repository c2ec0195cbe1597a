//! Symmetric groups, the sets `B*_k`, `B_k`, `B*_{k,n}`, `B_{k,n}`, and the
//! type A Hecke algebra with its Kazhdan-Lusztig basis.

mod bsets;
mod hecke;
mod kl;
mod perm;

pub use bsets::{enumerate_b_sets, factorize_bk, in_bstar_kn, in_tail_group, ttuples, BSet, BSetError, Side, TTuple};
pub use hecke::HeckeElement;
pub use kl::{kl_basis, kl_coefficient};
pub use perm::{s_range, Perm, MAX_N};
