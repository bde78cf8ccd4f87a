//! Finite Dickson nearfields and the distributive structure of nearvector
//! spaces over them.

pub mod arith;
pub mod census;
pub mod dickson;
pub mod dist;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod nearvec;
pub mod verify;

pub use dickson::{DicksonPair, NearfieldCtx};
pub use error::{Error, Result};
pub use gf::{FFElem, FieldCtx};
