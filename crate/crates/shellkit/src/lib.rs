//! Symbolic toolkit for shellability of multicomplexes and prime filtrations
//! of monomial quotient rings.
//!
//! The crate works with quotients `S/I` of a polynomial ring by a monomial
//! ideal, through the associated multicomplex of standard exponent vectors:
//!
//! * [`monomial`] — exact monomial and monomial-ideal arithmetic;
//! * [`multicomplex`] — multicomplexes as antichains of maximal elements,
//!   facet enumeration, and the correspondence with monomial ideals;
//! * [`decomposition`] — irreducible and primary decomposition, associated
//!   primes, standard pairs, arithmetic degree, dimension filtration;
//! * [`filtration`] — shellings of multicomplexes, the prime filtrations and
//!   Stanley decompositions they induce, pretty clean and clean tests;
//! * [`simplicial`] — the squarefree specialization: simplicial complexes,
//!   non-pure shellings and shelling numbers;
//! * [`invariants`] — Hilbert series of `S/I` and of the modules
//!   `Ext^i(S/I, S)`, Castelnuovo–Mumford regularity and depth read off a
//!   pretty clean filtration;
//! * [`io`] — JSON wire formats for every object above.

pub mod decomposition;
pub mod error;
pub mod filtration;
pub mod invariants;
pub mod io;
pub mod monomial;
pub mod multicomplex;
pub mod simplicial;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, VarSet};
pub use multicomplex::{ExtNat, ExtVector, Multicomplex};
