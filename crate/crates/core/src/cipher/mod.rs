//! Classroom ciphers: Caesar shift, Pigpen symbols and the Peg Code
//! color-pair square.

pub mod caesar;
pub mod peg;
pub mod pigpen;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("shift must be in 0..=25, got {0}")]
    BadShift(i64),
    #[error("text has no letters to analyse")]
    NoLetters,
    #[error("bad frequency table: {0}")]
    BadFrequencyTable(String),
    #[error("cannot encode {0:?}")]
    UnmappableCharacter(char),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("malformed symbol {0:?}")]
    BadSymbol(String),
    #[error("symbol {0} is assigned to more than one letter")]
    NonBijectiveTable(String),
    #[error("malformed color pair {0:?}")]
    BadPair(String),
    #[error("bad key: {0}")]
    BadKeyFormat(String),
    #[error("letter {0} appears more than once in the square")]
    NonBijectiveLayout(char),
    #[error("colors {0:?} are not an ordering of all five peg colors")]
    BadColorPermutation(String),
}
