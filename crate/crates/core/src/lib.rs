//! Root systems of simple Lie superalgebras, their parabolic subsets and
//! Levi decompositions, and the classification of cominuscule parabolics.

pub mod classify;
pub mod cominuscule;
pub mod error;
pub mod fm;
pub mod parabolic;
pub mod realize;
pub mod rootset;
pub mod rootsys;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use parabolic::{Caps, LeviDecomposition, Method, Parabolics};
pub use rootset::RootSet;
pub use rootsys::{Family, Root, RootSystem, SumOutcome};
pub use weight::{BasisLabel, Weight, Q};
