//! Profunctors and the three basic ones: the hom profunctor, `Forget` and
//! structured-input/structured-output mappings (`Siso`).
//!
//! A profunctor is named by a zero-sized brand type implementing
//! [`Profunctor`]; `P::P<A, B>` is the type of its values from `A` to `B`.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::container::{Applicative, Functor, Identity, IdentityF};
use crate::monoid::Monoid;
use crate::transform::Transform;
use crate::value::Value;

/// Contravariant in the first argument, covariant in the second.
///
/// Laws, as extensional equalities:
/// * `dimap(id, id, p) = p`
/// * `dimap(f ∘ g, h ∘ i, p) = dimap(g, h, dimap(f, i, p))`
pub trait Profunctor: 'static {
    type P<A: Value, B: Value>: Value;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        p: Self::P<A, B>,
    ) -> Self::P<C, D>;

    fn lmap<A: Value, B: Value, C: Value>(pre: Transform<C, A>, p: Self::P<A, B>) -> Self::P<C, B> {
        Self::dimap(pre, Transform::identity(), p)
    }

    fn rmap<A: Value, B: Value, D: Value>(post: Transform<B, D>, p: Self::P<A, B>) -> Self::P<A, D> {
        Self::dimap(Transform::identity(), post, p)
    }
}

/// A natural transformation between profunctors, `P ⇒ Q`.
pub trait ProMorphism<P: Profunctor, Q: Profunctor> {
    fn apply<A: Value, B: Value>(&self, p: P::P<A, B>) -> Q::P<A, B>;
}

/// The identity transformation `P ⇒ P`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdMorphism;

impl<P: Profunctor> ProMorphism<P, P> for IdMorphism {
    fn apply<A: Value, B: Value>(&self, p: P::P<A, B>) -> P::P<A, B> {
        p
    }
}

/// The hom profunctor; its values are [`Transform`]s.
#[derive(Clone, Copy, Debug)]
pub struct Hom;

impl Profunctor for Hom {
    type P<A: Value, B: Value> = Transform<A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        p: Transform<A, B>,
    ) -> Transform<C, D> {
        Transform::new(move |c| post.apply(p.apply(pre.apply(c))))
    }
}

pub fn dimap_fn<A: Value, B: Value, C: Value, D: Value>(
    pre: Transform<C, A>,
    post: Transform<B, D>,
    p: Transform<A, B>,
) -> Transform<C, D> {
    Hom::dimap(pre, post, p)
}

/// A mapping into a monoid's carrier. The output type `B` is phantom.
pub struct ForgetPro<M: Monoid, A, B> {
    run: Transform<A, M::Carrier>,
    _out: PhantomData<fn() -> B>,
}

impl<M: Monoid, A, B> Clone for ForgetPro<M, A, B> {
    fn clone(&self) -> Self {
        ForgetPro {
            run: self.run.clone(),
            _out: PhantomData,
        }
    }
}

impl<M: Monoid, A, B> fmt::Debug for ForgetPro<M, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ForgetPro").field("run", &self.run).finish()
    }
}

impl<M: Monoid, A: 'static, B> ForgetPro<M, A, B> {
    pub fn new(run: impl Fn(A) -> M::Carrier + Send + Sync + 'static) -> Self {
        Self::from_transform(Transform::new(run))
    }

    pub fn from_transform(run: Transform<A, M::Carrier>) -> Self {
        ForgetPro { run, _out: PhantomData }
    }

    pub fn run(&self, a: A) -> M::Carrier {
        self.run.apply(a)
    }

    pub fn transform(&self) -> &Transform<A, M::Carrier> {
        &self.run
    }
}

/// Brand for [`ForgetPro`] over the monoid `M`.
pub struct Forget<M>(PhantomData<fn() -> M>);

impl<M: Monoid> Profunctor for Forget<M> {
    type P<A: Value, B: Value> = ForgetPro<M, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        _post: Transform<B, D>,
        p: ForgetPro<M, A, B>,
    ) -> ForgetPro<M, C, D> {
        ForgetPro::from_transform(pre.then(&p.run))
    }
}

pub fn dimap_forget<M: Monoid, A: Value, B: Value, C: Value, D: Value>(
    pre: Transform<C, A>,
    post: Transform<B, D>,
    p: ForgetPro<M, A, B>,
) -> ForgetPro<M, C, D> {
    Forget::<M>::dimap(pre, post, p)
}

/// A mapping from an `F`-structured input to a `G`-structured output.
pub struct SisoPro<F: Functor, G: Functor, A: Value, B: Value> {
    run: Arc<dyn Fn(F::Of<A>) -> G::Of<B> + Send + Sync>,
}

impl<F: Functor, G: Functor, A: Value, B: Value> Clone for SisoPro<F, G, A, B> {
    fn clone(&self) -> Self {
        SisoPro {
            run: Arc::clone(&self.run),
        }
    }
}

impl<F: Functor, G: Functor, A: Value, B: Value> fmt::Debug for SisoPro<F, G, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SisoPro(..)")
    }
}

impl<F: Functor, G: Functor, A: Value, B: Value> SisoPro<F, G, A, B> {
    pub fn new(run: impl Fn(F::Of<A>) -> G::Of<B> + Send + Sync + 'static) -> Self {
        SisoPro { run: Arc::new(run) }
    }

    pub fn run(&self, input: F::Of<A>) -> G::Of<B> {
        (self.run)(input)
    }
}

/// Lifts a pure mapping into a `Siso` over identity inputs, wrapping the
/// result with `G::pure`.
pub fn siso_pure<G: Applicative, A: Value, B: Value>(f: Transform<A, B>) -> SisoPro<IdentityF, G, A, B> {
    SisoPro::new(move |a: Identity<A>| G::pure(f.apply(a.0)))
}

/// Brand for [`SisoPro`] from `F` to `G`.
pub struct Siso<F, G>(PhantomData<fn() -> (F, G)>);

impl<F: Functor, G: Functor> Profunctor for Siso<F, G> {
    type P<A: Value, B: Value> = SisoPro<F, G, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        p: SisoPro<F, G, A, B>,
    ) -> SisoPro<F, G, C, D> {
        SisoPro::new(move |fc: F::Of<C>| {
            let fa = F::map(fc, |c| pre.apply(c));
            G::map(p.run(fa), |b| post.apply(b))
        })
    }
}

pub fn dimap_siso<F: Functor, G: Functor, A: Value, B: Value, C: Value, D: Value>(
    pre: Transform<C, A>,
    post: Transform<B, D>,
    s: SisoPro<F, G, A, B>,
) -> SisoPro<F, G, C, D> {
    Siso::<F, G>::dimap(pre, post, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{ListF, Logged, LoggerF, OptionF};
    use crate::monoid::{IntSum, StringConcat};

    fn t<A: 'static, B: 'static>(f: impl Fn(A) -> B + Send + Sync + 'static) -> Transform<A, B> {
        Transform::new(f)
    }

    #[test]
    fn dimap_fn_examples() {
        assert_eq!(
            dimap_fn(Transform::identity(), Transform::identity(), t(|x: i64| x + 1)).apply(3),
            4
        );
        assert_eq!(
            dimap_fn(t(|x: i64| x + 1), t(|x: i64| x * 2), Transform::identity()).apply(3),
            8
        );
        let shown = dimap_fn(
            t(|s: String| s.len()),
            t(|n: usize| n.to_string()),
            Transform::identity(),
        );
        assert_eq!(shown.apply("abc".into()), "3");
    }

    #[test]
    fn dimap_forget_examples() {
        let len = ForgetPro::<IntSum, String, ()>::new(|s: String| s.len() as i64);
        let same = dimap_forget(Transform::identity(), t(|_: ()| 99_u8), len);
        assert_eq!(same.run("ab".into()), 2);

        let id = ForgetPro::<StringConcat, String, String>::new(|s| s);
        let upper = dimap_forget(
            t(|s: String| s.to_uppercase()),
            Transform::<String, String>::identity(),
            id,
        );
        assert_eq!(upper.run("ab".into()), "AB");
    }

    #[test]
    fn dimap_siso_examples() {
        let head = SisoPro::<ListF, OptionF, i64, i64>::new(|xs: Vec<i64>| xs.first().copied());
        let bumped = dimap_siso(Transform::identity(), t(|x: i64| x + 1), head.clone());
        assert_eq!(bumped.run(vec![3, 7]), Some(4));
        assert_eq!(bumped.run(vec![]), None);

        let unchanged = dimap_siso(Transform::identity(), Transform::identity(), head.clone());
        for xs in [vec![], vec![1], vec![5, 2, 0]] {
            assert_eq!(unchanged.run(xs.clone()), head.run(xs));
        }

        let logs = SisoPro::<IdentityF, LoggerF, i64, i64>::new(|Identity(x)| Logged::new(vec![format!("saw {x}")], x));
        let post = dimap_siso(Transform::identity(), t(|x: i64| x * 10), logs);
        assert_eq!(post.run(Identity(2)), Logged::new(vec!["saw 2".into()], 20));
    }
}
