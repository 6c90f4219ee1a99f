//! Noncommutative binomial and Bell-type polynomials in free associative algebras,
//! with PBW expansions over Lyndon words, q-deformations and quotient algebras.

pub mod bell;
pub mod error;
pub mod expr;
pub mod freepoly;
pub mod identities;
pub mod output;
pub mod pbw;
pub mod qsigma;
pub mod quotients;
pub mod rings;
pub mod shuffle;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use freepoly::FreePoly;
pub use pbw::{PbwEngine, PbwMonomial, PbwPoly};
pub use rings::{QPoly, Rational, Ring, RingKind, UnitalRing};
pub use words::{Alphabet, LyndonWord, Word};
