//! Decision procedures for the stable category of permutation modules and
//! bounded complexes of permutation modules over finite groups in positive
//! characteristic: perfection tests, support profiles, the section category
//! and its connected components, and spectrum skeletons.

pub mod complexes;
pub mod error;
pub mod formats;
pub mod group;
pub mod gset;
pub mod linalg;
pub mod report;
pub mod sections;
pub mod spectrum;
pub mod stable;

pub use error::{Error, Result};
