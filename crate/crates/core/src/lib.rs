//! Exact arithmetic for infinite periodic friezes.
//!
//! Quiddity sequences, their friezes and growth coefficients, skeletal
//! triangulations of the annulus, non-oriented cyclic quivers and the
//! specialized Caldero-Chapoton values on a tube.

pub mod cyclic;
pub mod error;
pub mod frieze;
pub mod growth;
pub mod json;
pub mod quiddity;
pub mod quiver;
pub mod sweep;
pub mod triangulation;
pub mod tube;
pub mod verify;

pub use error::{FriezeError, Result};
pub use frieze::{FriezeGrid, FriezeRows};
pub use growth::{GrowthMethod, GrowthReport, PeriodMode};
pub use quiddity::{Block, BlockForm, Classification, QuidditySequence};
pub use quiver::{Arrow, NonOrientedCycle};
pub use triangulation::{Boundary, BridgingArc, EarScript, QuiddityPair, SkeletalTriangulation};
pub use tube::{TubeCheck, TubeModuleIndex, TubeReport};
