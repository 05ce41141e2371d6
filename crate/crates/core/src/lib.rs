//! Monoidal profunctors as executable algebra.
//!
//! * [`profunctor`]: the [`Profunctor`] interface with the hom profunctor,
//!   `Forget` and `Siso`.
//! * [`monopro`]: monoidal profunctors (unit plus parallel composition).
//! * [`day`]: Day convolution and its coherence isomorphisms.
//! * [`free`]: the free monoidal profunctor over any profunctor.
//! * [`monocle`]: optics stored as `(arity, split, merge)` triples.
//! * [`effect`]: effect arrows, the lift profunctor and a logged quicksort.
//! * [`check`]: extensional comparison and law checking over samples.
//!
//! Every value is immutable and `Send + Sync`; mappings are pure.

#![allow(clippy::type_complexity)]

pub mod category;
pub mod check;
pub mod container;
pub mod day;
pub mod effect;
pub mod free;
pub mod laws;
pub mod monocle;
pub mod monoid;
pub mod monopro;
pub mod profunctor;
pub mod samples;
pub mod transform;
pub mod tuples;
mod value;

pub use category::{Arrow, Category};
pub use container::{Applicative, Functor, Identity, Logged, Monad, Traversable};
pub use monoid::Monoid;
pub use monopro::MonoPro;
pub use profunctor::Profunctor;
pub use transform::Transform;
pub use value::Value;
