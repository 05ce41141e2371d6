//! Monoidal profunctors: a unit `empty : P<(), ()>` and a parallel
//! composition `star : P<A, B> × P<C, D> -> P<(A, C), (B, D)>`.
//!
//! Laws, as extensional equalities (see [`crate::laws`]):
//! * left identity: `dimap(diag, snd, star(empty, f)) = f`
//! * right identity: `dimap(diag, fst, star(f, empty)) = f`
//! * associativity: `dimap(assoc_inv, assoc, star(f, star(g, h))) = star(star(f, g), h)`

use crate::container::{unzip_c, zip_c, Applicative, Functor};
use crate::monoid::Monoid;
use crate::profunctor::{Forget, ForgetPro, Hom, Profunctor, Siso, SisoPro};
use crate::transform::Transform;
use crate::tuples::diag;
use crate::value::Value;

pub trait MonoPro: Profunctor {
    fn empty() -> Self::P<(), ()>;

    fn star<A: Value, B: Value, C: Value, D: Value>(p: Self::P<A, B>, q: Self::P<C, D>) -> Self::P<(A, C), (B, D)>;
}

impl MonoPro for Hom {
    fn empty() -> Transform<(), ()> {
        Transform::new(|()| ())
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: Transform<A, B>,
        q: Transform<C, D>,
    ) -> Transform<(A, C), (B, D)> {
        Transform::new(move |(a, c)| (p.apply(a), q.apply(c)))
    }
}

impl<M: Monoid> MonoPro for Forget<M> {
    fn empty() -> ForgetPro<M, (), ()> {
        ForgetPro::new(|()| M::empty())
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: ForgetPro<M, A, B>,
        q: ForgetPro<M, C, D>,
    ) -> ForgetPro<M, (A, C), (B, D)> {
        ForgetPro::new(move |(a, c)| M::combine(p.run(a), q.run(c)))
    }
}

impl<F: Functor, G: Applicative> MonoPro for Siso<F, G> {
    fn empty() -> SisoPro<F, G, (), ()> {
        SisoPro::new(|_| G::pure(()))
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: SisoPro<F, G, A, B>,
        q: SisoPro<F, G, C, D>,
    ) -> SisoPro<F, G, (A, C), (B, D)> {
        SisoPro::new(move |input: F::Of<(A, C)>| {
            let (fa, fc) = unzip_c::<F, A, C>(input);
            zip_c::<G, B, D>((p.run(fa), q.run(fc)))
        })
    }
}

pub fn star_fn<A: Value, B: Value, C: Value, D: Value>(
    p: Transform<A, B>,
    q: Transform<C, D>,
) -> Transform<(A, C), (B, D)> {
    Hom::star(p, q)
}

pub fn star_siso<F: Functor, G: Applicative, A: Value, B: Value, C: Value, D: Value>(
    p: SisoPro<F, G, A, B>,
    q: SisoPro<F, G, C, D>,
) -> SisoPro<F, G, (A, C), (B, D)> {
    Siso::<F, G>::star(p, q)
}

pub fn star_forget<M: Monoid, A: Value, B: Value, C: Value, D: Value>(
    p: ForgetPro<M, A, B>,
    q: ForgetPro<M, C, D>,
) -> ForgetPro<M, (A, C), (B, D)> {
    Forget::<M>::star(p, q)
}

/// Splits the input with `f`, then runs `p` and `q` in parallel.
pub fn lmap2<P: MonoPro, S: Value, A: Value, B: Value, C: Value, D: Value>(
    f: Transform<S, (A, C)>,
    p: P::P<A, B>,
    q: P::P<C, D>,
) -> P::P<S, (B, D)> {
    P::dimap(f, Transform::identity(), P::star(p, q))
}

/// Runs `p` and `q` in parallel, then merges their outputs with `g`.
pub fn rmap2<P: MonoPro, T: Value, A: Value, B: Value, C: Value, D: Value>(
    g: Transform<(B, D), T>,
    p: P::P<A, B>,
    q: P::P<C, D>,
) -> P::P<(A, C), T> {
    P::dimap(Transform::identity(), g, P::star(p, q))
}

/// Split with `f`, run in parallel, merge with `g`: the Day convolution of a
/// monoidal profunctor with itself, collapsed by its multiplication.
pub fn rlmap<P: MonoPro, S: Value, T: Value, A: Value, B: Value, C: Value, D: Value>(
    g: Transform<(B, D), T>,
    f: Transform<S, (A, C)>,
    p: P::P<A, B>,
    q: P::P<C, D>,
) -> P::P<S, T> {
    P::dimap(f, g, P::star(p, q))
}

/// Applicative application inside a monoidal profunctor with a fixed input.
pub fn app_to_monopro<P: MonoPro, S: Value, A: Value, B: Value>(
    pab: P::P<S, Transform<A, B>>,
    pa: P::P<S, A>,
) -> P::P<S, B> {
    P::dimap(
        Transform::new(diag),
        Transform::new(|(f, a): (Transform<A, B>, A)| f.apply(a)),
        P::star(pab, pa),
    )
}
