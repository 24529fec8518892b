//! Certificate-level admissibility: Schacher certificates, the transfer
//! verdict to a larger field, and the implication diagram between the
//! eight admissibility conditions.

mod certificate;
mod diagram;
mod files;
mod transfer;

pub use certificate::*;
pub use diagram::*;
pub use files::*;
pub use transfer::*;
