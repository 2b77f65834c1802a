//! Combinatorics on finite words: borders, periods, maximal unbordered
//! factors, local periods and critical points, Duval extensions, and
//! exhaustive campaigns that check the classical results relating them.

pub mod check;
pub mod critical;
pub mod duval;
pub mod enumerate;
pub mod error;
pub mod naive;
pub mod output;
pub mod periodicity;
pub mod search;
pub mod word;

pub use check::{CheckResult, CheckStatus};
pub use critical::{LocalPeriodProfile, VerificationReport};
pub use duval::{DuvalClassification, DuvalSequence, ProofContext, SequenceStatus, Verdict};
pub use error::{Error, Result};
pub use periodicity::{BorderTable, PeriodicityReport};
pub use search::{CampaignConfig, CampaignReport, Target};
pub use word::{canonicalize, overlaps, FactorRef, Word};
