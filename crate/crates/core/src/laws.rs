//! Both sides of every profunctor and monoidal-profunctor law, built from
//! the operations alone. Comparing the sides is left to the caller, who
//! decides how to observe values of the profunctor in question.

use crate::monopro::MonoPro;
use crate::profunctor::Profunctor;
use crate::transform::Transform;
use crate::tuples::{assoc, assoc_inv, diag, fst, snd};
use crate::value::Value;

/// `dimap(id, id, p)`; should equal `p`.
pub fn dimap_identity<P: Profunctor, A: Value, B: Value>(p: P::P<A, B>) -> P::P<A, B> {
    P::dimap(Transform::identity(), Transform::identity(), p)
}

/// `dimap(f ∘ g, h ∘ i, p)` where `g` runs before `f` and `i` before `h`.
pub fn dimap_fused<P: Profunctor, A: Value, B: Value, C: Value, D: Value, E: Value, F: Value>(
    f: Transform<C, A>,
    g: Transform<E, C>,
    h: Transform<D, F>,
    i: Transform<B, D>,
    p: P::P<A, B>,
) -> P::P<E, F> {
    P::dimap(g.then(&f), i.then(&h), p)
}

/// `dimap(g, h, dimap(f, i, p))`; should equal [`dimap_fused`].
pub fn dimap_nested<P: Profunctor, A: Value, B: Value, C: Value, D: Value, E: Value, F: Value>(
    f: Transform<C, A>,
    g: Transform<E, C>,
    h: Transform<D, F>,
    i: Transform<B, D>,
    p: P::P<A, B>,
) -> P::P<E, F> {
    P::dimap(g, h, P::dimap(f, i, p))
}

/// `dimap(diag, snd, star(empty, f))`; should equal `f`.
pub fn left_identity<P: MonoPro, A: Value, B: Value>(f: P::P<A, B>) -> P::P<A, B> {
    P::dimap(
        Transform::new(diag::<A>),
        Transform::new(snd::<(), B>),
        P::star(erased_unit::<P, A>(), f),
    )
}

/// `dimap(diag, fst, star(f, empty))`; should equal `f`.
pub fn right_identity<P: MonoPro, A: Value, B: Value>(f: P::P<A, B>) -> P::P<A, B> {
    P::dimap(
        Transform::new(diag::<A>),
        Transform::new(fst::<B, ()>),
        P::star(f, erased_unit::<P, A>()),
    )
}

/// `dimap(assoc_inv, assoc, star(f, star(g, h)))`; should equal [`assoc_right`].
pub fn assoc_left<P: MonoPro, A: Value, B: Value, C: Value, D: Value, E: Value, F: Value>(
    f: P::P<A, B>,
    g: P::P<C, D>,
    h: P::P<E, F>,
) -> P::P<((A, C), E), ((B, D), F)> {
    P::dimap(
        Transform::new(assoc_inv::<A, C, E>),
        Transform::new(assoc::<B, D, F>),
        P::star(f, P::star(g, h)),
    )
}

/// `star(star(f, g), h)`.
pub fn assoc_right<P: MonoPro, A: Value, B: Value, C: Value, D: Value, E: Value, F: Value>(
    f: P::P<A, B>,
    g: P::P<C, D>,
    h: P::P<E, F>,
) -> P::P<((A, C), E), ((B, D), F)> {
    P::star(P::star(f, g), h)
}

/// `star(dimap(f1, g1, p), dimap(f2, g2, q))`; should equal [`naturality_outer`].
#[allow(clippy::too_many_arguments)]
pub fn naturality_inner<
    P: MonoPro,
    A: Value,
    B: Value,
    C: Value,
    D: Value,
    A2: Value,
    B2: Value,
    C2: Value,
    D2: Value,
>(
    f1: Transform<A2, A>,
    g1: Transform<B, B2>,
    p: P::P<A, B>,
    f2: Transform<C2, C>,
    g2: Transform<D, D2>,
    q: P::P<C, D>,
) -> P::P<(A2, C2), (B2, D2)> {
    P::star(P::dimap(f1, g1, p), P::dimap(f2, g2, q))
}

/// `dimap(f1 × f2, g1 × g2, star(p, q))`.
#[allow(clippy::too_many_arguments)]
pub fn naturality_outer<
    P: MonoPro,
    A: Value,
    B: Value,
    C: Value,
    D: Value,
    A2: Value,
    B2: Value,
    C2: Value,
    D2: Value,
>(
    f1: Transform<A2, A>,
    g1: Transform<B, B2>,
    p: P::P<A, B>,
    f2: Transform<C2, C>,
    g2: Transform<D, D2>,
    q: P::P<C, D>,
) -> P::P<(A2, C2), (B2, D2)> {
    P::dimap(
        Transform::new(move |(a, c)| (f1.apply(a), f2.apply(c))),
        Transform::new(move |(b, d)| (g1.apply(b), g2.apply(d))),
        P::star(p, q),
    )
}

/// `empty` with its input discarded, so that `diag` can feed it.
fn erased_unit<P: MonoPro, A: Value>() -> P::P<A, ()> {
    P::lmap(Transform::new(|_: A| ()), P::empty())
}
