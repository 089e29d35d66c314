pub mod autos;
pub mod characterize;
pub mod cli;
pub mod error;
pub mod families;
pub mod presentations;
pub mod semidirect;
pub mod words;

pub use autos::{Automorphism, Endomorphism, PermConjData};
pub use error::{Error, Result};
pub use families::{Family, FamilyKind, Generator, GroupWord, Syllable};
pub use words::{Letter, Word};
