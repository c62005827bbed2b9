//! Exact computation with finite conformal superalgebras and their modules.

pub mod algebra;
pub mod builtins;
pub mod cohomology;
pub mod constructions;
pub mod dpoly;
pub mod dsl;
pub mod element;
pub mod error;
pub mod gc;
pub mod grassmann;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod module;
pub mod modes;
pub mod pdmatrix;
pub mod scalar;
pub mod structure;
pub mod submodule;

pub use algebra::{Axiom, AxiomReport, ConformalSuperalgebra, TableRow, Violation};
pub use dpoly::DPoly;
pub use element::{Basis, Element, Generator, LambdaPoly, Parity, ProductTable};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use grassmann::GrassmannElement;
pub use pdmatrix::{PdMatrix, Size};
pub use scalar::{Rational, Scalar};
