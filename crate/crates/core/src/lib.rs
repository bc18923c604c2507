//! Exact construction and verification of Bernoulli polynomial identities,
//! with a p-adic Volkenborn integral cross-check.

pub mod bernoulli;
pub mod exactnum;
pub mod identities;
pub mod padic;
pub mod polyring;
pub mod record;
