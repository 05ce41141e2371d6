//! Pure total mappings, the hom profunctor's values.

use std::fmt;
use std::sync::Arc;

/// A pure, total mapping from `A` to `B`.
///
/// Cloning is cheap: the closure is shared.
pub struct Transform<A, B> {
    run: Arc<dyn Fn(A) -> B + Send + Sync>,
}

impl<A, B> Clone for Transform<A, B> {
    fn clone(&self) -> Self {
        Transform {
            run: Arc::clone(&self.run),
        }
    }
}

impl<A, B> fmt::Debug for Transform<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Transform<{}, {}>",
            std::any::type_name::<A>(),
            std::any::type_name::<B>()
        )
    }
}

impl<A: 'static, B: 'static> Transform<A, B> {
    pub fn new(run: impl Fn(A) -> B + Send + Sync + 'static) -> Self {
        Transform { run: Arc::new(run) }
    }

    pub fn apply(&self, a: A) -> B {
        (self.run)(a)
    }

    /// `self` first, then `next`.
    pub fn then<C: 'static>(&self, next: &Transform<B, C>) -> Transform<A, C> {
        let first = self.clone();
        let next = next.clone();
        Transform::new(move |a| next.apply(first.apply(a)))
    }

    /// `prev` first, then `self`.
    pub fn after<Z: 'static>(&self, prev: &Transform<Z, A>) -> Transform<Z, B> {
        prev.then(self)
    }
}

impl<A: 'static> Transform<A, A> {
    pub fn identity() -> Self {
        Transform::new(|a| a)
    }
}

impl<A: 'static, B: Clone + Send + Sync + 'static> Transform<A, B> {
    /// Ignores its input.
    pub fn constant(b: B) -> Self {
        Transform::new(move |_| b.clone())
    }
}

impl<A, B, F> From<F> for Transform<A, B>
where
    A: 'static,
    B: 'static,
    F: Fn(A) -> B + Send + Sync + 'static,
{
    fn from(run: F) -> Self {
        Transform::new(run)
    }
}
