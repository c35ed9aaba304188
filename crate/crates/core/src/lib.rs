//! Monomial ideals in `K[x1..xn]`: irreducible decompositions, associated
//! primes, clean and pretty clean filtrations, regular and d-sequences,
//! multigraded Betti numbers and Stanley depth.

pub mod cleanness;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod ring;
pub mod sequences;
pub mod stanley;
pub mod verify;

pub use cleanness::{CleannessMode, OrderedDecomposition, PrimeFiltration, Verdict};
pub use decomposition::{Decomposition, IrreducibleComponent};
pub use error::{Error, Result};
pub use homology::BettiTable;
pub use ideal::{MonomialIdeal, MonomialPrime};
pub use monomial::Monomial;
pub use ring::{Characteristic, RingContext};
pub use sequences::MonomialSequence;
pub use stanley::{CharacteristicPoset, StanleyPartition};
pub use corpus::CorpusSpec;
pub use verify::{Theorem, VerificationReport};
