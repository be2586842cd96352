//! Finite posets, filter selections, maxitive maps and their residuation.

pub mod enumerate;
pub mod error;
pub mod harness;
pub mod io;
pub mod maxitive;
pub mod mspace;
pub mod poset;
pub mod residuation;
pub mod selection;
pub mod subset;

pub use error::{Error, IoError, Result};
pub use maxitive::MonotoneMap;
pub use poset::{dm_completion, FinitePoset, OrderExtension};
pub use selection::{FilterSelection, SelectionKind, WayAboveRelation};
pub use subset::Subset;
