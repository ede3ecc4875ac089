//! Exact classification of parabolic surface germs by their contact with
//! cylinders along the asymptotic direction and by the singularity of the
//! orthogonal projection along that direction.

pub mod cli;
pub mod contact;
pub mod jet;
pub mod kclass;
pub mod milnor;
pub mod monge;
pub mod projection;
pub mod recognizer;
pub mod report;
pub mod scalar;
pub mod sign;
pub mod specfile;
pub mod stratifier;
pub mod trace;
pub mod verify;

pub use contact::{classify_contact, degenerate_cylinder, BaseCurve, ContactVerdict};
pub use jet::{Axis, Jet2, JetError, DEFAULT_DEGREE_BOUND};
pub use kclass::{Indeterminacy, KClass, Sign};
pub use monge::{InvariantSet, MongeError, MongeSurface};
pub use projection::{classify_projection, AClass, ProjectionCase, ProjectionVerdict};
pub use scalar::Scalar;
pub use stratifier::{classify_stratum, crosscheck_theorem, sample_stratum, Stratum, StratumId};
pub use trace::ReductionTrace;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Monge(#[from] MongeError),
    #[error(transparent)]
    Recognizer(#[from] recognizer::RecognizerError),
    #[error(transparent)]
    Projection(#[from] projection::ProjectionError),
    #[error(transparent)]
    Contact(#[from] contact::ContactError),
    #[error(transparent)]
    Spec(#[from] specfile::SpecError),
}
