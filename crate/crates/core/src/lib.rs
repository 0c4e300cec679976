//! Matrix-product Laurent polynomials of walks in quivers, string modules,
//! cluster characters and the machinery needed to compare them.

pub mod character;
pub mod closed_form;
pub mod error;
pub mod formula;
pub mod homalg;
pub mod id;
pub mod laurent;
pub mod linalg;
pub mod mutation;
pub mod quiver;

pub use error::{Error, Result};
pub use id::{ArrowId, VertexId};
