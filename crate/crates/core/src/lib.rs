//! Exact Duursma zeta polynomials of self-dual weight enumerators and
//! deciders for their Riemann hypothesis.
//!
//! The pipeline is enumerator → zeta polynomial `P(T)` → symmetrized
//! polynomial `h(U)` → real-root location in `[−2/√q, 2/√q]`, all in exact
//! arithmetic over `ℚ` or `ℚ(√r)`. Closed-form criteria for genus one, two
//! and three are provided as independent routes.

pub mod enumerator;
pub mod error;
pub mod exactnum;
pub mod poly;
pub mod realroots;
pub mod rh;
pub mod scan;
pub mod zeta;

pub use error::{Error, Result};
pub use exactnum::{Field, QuadExt, Rational};
pub use poly::{ExactPoly, Poly};
pub use enumerator::{Classification, WeightEnumerator};
pub use zeta::{SymmetrizedZeta, ZetaData};
pub use realroots::{RootInterval, SturmChain};
pub use rh::{Genus3Cubic, Method, RhVerdict};
pub use scan::{Enclosure, ScanReport, ThresholdSet};



