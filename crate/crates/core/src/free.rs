//! The free monoidal profunctor over a profunctor `P`.
//!
//! A [`FreeChain<P, S, T>`] is a finite list of `P`-values. Each layer splits
//! its input between its head and the rest of the chain and merges their
//! outputs. The empty chain is a constant. [`interpret`] folds a chain into
//! any monoidal profunctor, given a morphism from `P` into it.
//!
//! Split and merge adapters are not canonical, so two chains are considered
//! equal when their interpretations agree.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::category::{Arrow, Category};
use crate::monopro::MonoPro;
use crate::profunctor::Profunctor;
pub use crate::profunctor::{IdMorphism, ProMorphism};
use crate::transform::Transform;
use crate::tuples::fst;
use crate::value::{Dyn, Value};

pub struct FreeChain<P: Profunctor, S, T> {
    node: Node<P, S, T>,
}

enum Node<P: Profunctor, S, T> {
    Stop(T),
    Layer {
        split: Transform<S, (Dyn, Dyn)>,
        merge: Transform<(Dyn, Dyn), T>,
        head: P::P<Dyn, Dyn>,
        tail: Arc<FreeChain<P, Dyn, Dyn>>,
    },
}

impl<P: Profunctor, S, T: Clone> Clone for FreeChain<P, S, T> {
    fn clone(&self) -> Self {
        let node = match &self.node {
            Node::Stop(t) => Node::Stop(t.clone()),
            Node::Layer {
                split,
                merge,
                head,
                tail,
            } => Node::Layer {
                split: split.clone(),
                merge: merge.clone(),
                head: head.clone(),
                tail: Arc::clone(tail),
            },
        };
        FreeChain { node }
    }
}

impl<P: Profunctor, S, T> fmt::Debug for FreeChain<P, S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeChain(depth {})", self.depth())
    }
}

impl<P: Profunctor, S, T> FreeChain<P, S, T> {
    /// Number of layers; zero for a constant chain.
    pub fn depth(&self) -> usize {
        match &self.node {
            Node::Stop(_) => 0,
            Node::Layer { tail, .. } => 1 + tail.depth(),
        }
    }

    pub fn is_stop(&self) -> bool {
        matches!(self.node, Node::Stop(_))
    }
}

impl<P: Profunctor, S: Value, T: Value> FreeChain<P, S, T> {
    /// The constant chain: ignores its input and produces `t`.
    pub fn stop(t: T) -> Self {
        FreeChain { node: Node::Stop(t) }
    }

    /// Conses `head` onto `tail`, splitting the input with `split` and
    /// merging the outputs with `merge`.
    pub fn layer<X: Value, Y: Value, Z: Value, W: Value>(
        split: Transform<S, (X, Z)>,
        merge: Transform<(Y, W), T>,
        head: P::P<X, Y>,
        tail: FreeChain<P, Z, W>,
    ) -> Self {
        FreeChain {
            node: Node::Layer {
                split: Transform::new(move |s| {
                    let (x, z) = split.apply(s);
                    (Dyn::new(x), Dyn::new(z))
                }),
                merge: Transform::new(move |(y, w): (Dyn, Dyn)| merge.apply((y.take(), w.take()))),
                head: P::dimap(Transform::new(Dyn::take::<X>), Transform::new(Dyn::new::<Y>), head),
                tail: Arc::new(free_dimap(
                    Transform::new(Dyn::take::<Z>),
                    Transform::new(Dyn::new::<W>),
                    tail,
                )),
            },
        }
    }
}

/// Brand for [`FreeChain`] over `P`.
pub struct Free<P>(PhantomData<fn() -> P>);

fn free_dimap<P: Profunctor, A: Value, B: Value, C: Value, D: Value>(
    pre: Transform<C, A>,
    post: Transform<B, D>,
    chain: FreeChain<P, A, B>,
) -> FreeChain<P, C, D> {
    let node = match chain.node {
        Node::Stop(t) => Node::Stop(post.apply(t)),
        Node::Layer {
            split,
            merge,
            head,
            tail,
        } => Node::Layer {
            split: pre.then(&split),
            merge: merge.then(&post),
            head,
            tail,
        },
    };
    FreeChain { node }
}

impl<P: Profunctor> Profunctor for Free<P> {
    type P<A: Value, B: Value> = FreeChain<P, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        chain: FreeChain<P, A, B>,
    ) -> FreeChain<P, C, D> {
        free_dimap(pre, post, chain)
    }
}

/// A single value as a one-layer chain.
pub fn embed<P: Profunctor, S: Value, T: Value>(p: P::P<S, T>) -> FreeChain<P, S, T> {
    FreeChain::layer(
        Transform::new(|s: S| (s.clone(), s)),
        Transform::new(fst::<T, ()>),
        p,
        FreeChain::<P, S, ()>::stop(()),
    )
}

/// Folds a chain into the monoidal profunctor `Q`, sending each layer's head
/// through `h`.
pub fn interpret<P, Q, H, S, T>(h: &H, chain: &FreeChain<P, S, T>) -> Q::P<S, T>
where
    P: Profunctor,
    Q: MonoPro,
    H: ProMorphism<P, Q>,
    S: Value,
    T: Value,
{
    match &chain.node {
        Node::Stop(t) => Q::dimap(Transform::new(|_: S| ()), Transform::constant(t.clone()), Q::empty()),
        Node::Layer {
            split,
            merge,
            head,
            tail,
        } => Q::dimap(
            split.clone(),
            merge.clone(),
            Q::star(h.apply(head.clone()), interpret::<P, Q, H, Dyn, Dyn>(h, tail)),
        ),
    }
}

/// Prepends a value: its input and output become the first components.
pub fn cons<P: Profunctor, A: Value, B: Value, S: Value, T: Value>(
    p: P::P<A, B>,
    chain: FreeChain<P, S, T>,
) -> FreeChain<P, (A, S), (B, T)> {
    match chain.node {
        Node::Stop(t) => FreeChain::layer(
            Transform::identity(),
            Transform::identity(),
            p,
            FreeChain::<P, S, T>::stop(t),
        ),
        Node::Layer {
            split,
            merge,
            head,
            tail,
        } => {
            let rest = Arc::try_unwrap(tail).unwrap_or_else(|shared| (*shared).clone());
            FreeChain::layer(
                Transform::new(move |(a, s): (A, S)| (a, split.apply(s))),
                Transform::new(move |(b, yw): (B, (Dyn, Dyn))| (b, merge.apply(yw))),
                p,
                cons::<P, Dyn, Dyn, Dyn, Dyn>(head, rest),
            )
        }
    }
}

pub fn empty_free<P: Profunctor>() -> FreeChain<P, (), ()> {
    FreeChain::stop(())
}

/// Parallel composition of chains: concatenation with re-associated adapters.
pub fn star_free<P: Profunctor, S: Value, T: Value, C: Value, D: Value>(
    a: FreeChain<P, S, T>,
    b: FreeChain<P, C, D>,
) -> FreeChain<P, (S, C), (T, D)> {
    match (a.node, b) {
        (Node::Stop(t), q) => free_dimap(
            Transform::new(|(_, c): (S, C)| c),
            Transform::new(move |x: D| (t.clone(), x)),
            q,
        ),
        (left @ Node::Layer { .. }, FreeChain { node: Node::Stop(t) }) => free_dimap(
            Transform::new(|(s, _): (S, C)| s),
            Transform::new(move |x: T| (x, t.clone())),
            FreeChain { node: left },
        ),
        (
            Node::Layer {
                split,
                merge,
                head,
                tail,
            },
            q,
        ) => {
            let rest = Arc::try_unwrap(tail).unwrap_or_else(|shared| (*shared).clone());
            free_dimap(
                Transform::new(move |(s, c): (S, C)| {
                    let (x, z) = split.apply(s);
                    (x, (z, c))
                }),
                Transform::new(move |(y, (w, d)): (Dyn, (Dyn, D))| (merge.apply((y, w)), d)),
                cons::<P, Dyn, Dyn, (Dyn, C), (Dyn, D)>(head, star_free::<P, Dyn, Dyn, C, D>(rest, q)),
            )
        }
    }
}

impl<P: Profunctor> MonoPro for Free<P> {
    fn empty() -> FreeChain<P, (), ()> {
        empty_free()
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: FreeChain<P, A, B>,
        q: FreeChain<P, C, D>,
    ) -> FreeChain<P, (A, C), (B, D)> {
        star_free(p, q)
    }
}

/// Collapses a chain over a monoidal profunctor into a single value.
pub fn free_from<P: MonoPro, S: Value, T: Value>(chain: &FreeChain<P, S, T>) -> P::P<S, T> {
    interpret::<P, P, IdMorphism, S, T>(&IdMorphism, chain)
}

pub fn free_arr<P: MonoPro + Arrow, A: Value, B: Value>(f: Transform<A, B>) -> FreeChain<P, A, B> {
    FreeChain::layer(
        Transform::new(|x: A| (x, ())),
        Transform::new(fst::<B, ()>),
        P::arr(f),
        FreeChain::<P, (), ()>::stop(()),
    )
}

pub fn free_id<P: MonoPro + Arrow, A: Value>() -> FreeChain<P, A, A> {
    free_arr::<P, A, A>(Transform::identity())
}

/// Sequential composition, `second ∘ first`: both chains are collapsed and the
/// composite embedded as a single layer.
pub fn free_compose<P: MonoPro + Arrow, A: Value, B: Value, C: Value>(
    second: &FreeChain<P, B, C>,
    first: &FreeChain<P, A, B>,
) -> FreeChain<P, A, C> {
    embed::<P, A, C>(P::compose(free_from::<P, B, C>(second), free_from::<P, A, B>(first)))
}

impl<P: MonoPro + Arrow> Category for Free<P> {
    fn identity<A: Value>() -> FreeChain<P, A, A> {
        free_id()
    }

    fn compose<A: Value, B: Value, C: Value>(g: FreeChain<P, B, C>, f: FreeChain<P, A, B>) -> FreeChain<P, A, C> {
        free_compose(&g, &f)
    }
}

impl<P: MonoPro + Arrow> Arrow for Free<P> {
    fn arr<A: Value, B: Value>(f: Transform<A, B>) -> FreeChain<P, A, B> {
        free_arr(f)
    }
}
