//! Categories and arrows whose morphisms are the values of a profunctor.

use crate::profunctor::{Hom, Profunctor};
use crate::transform::Transform;
use crate::value::Value;

/// Laws: `compose(identity, f) = f = compose(f, identity)` and `compose` is
/// associative.
pub trait Category: Profunctor {
    fn identity<A: Value>() -> Self::P<A, A>;

    /// `g ∘ f`: runs `f` first.
    fn compose<A: Value, B: Value, C: Value>(g: Self::P<B, C>, f: Self::P<A, B>) -> Self::P<A, C>;
}

/// A category that embeds pure mappings.
pub trait Arrow: Category {
    fn arr<A: Value, B: Value>(f: Transform<A, B>) -> Self::P<A, B>;
}

impl Category for Hom {
    fn identity<A: Value>() -> Transform<A, A> {
        Transform::identity()
    }

    fn compose<A: Value, B: Value, C: Value>(g: Transform<B, C>, f: Transform<A, B>) -> Transform<A, C> {
        f.then(&g)
    }
}

impl Arrow for Hom {
    fn arr<A: Value, B: Value>(f: Transform<A, B>) -> Transform<A, B> {
        f
    }
}
