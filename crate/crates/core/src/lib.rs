//! Exact computations with representations of finite acyclic quivers over
//! prime fields: homomorphisms, extensions, Auslander–Reiten translates and
//! the bijections attached to a morphism's right determiner.

pub mod algebra;
pub mod ar;
pub mod decompose;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod hom;
pub mod limits;
pub mod linalg;
pub mod modules;
pub mod par;
pub mod projective;
pub mod quiver;
pub mod triangle;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use quiver::{Arrow, Path, Quiver, RepMorphism, Representation};
