//! Day convolution of profunctors.
//!
//! A [`DayPair<P, Q, S, T>`] packages a `P`-value from `A` to `B`, a
//! `Q`-value from `C` to `D`, a splitter `S -> (A, C)` and a merger
//! `(B, D) -> T`. The component types `A, B, C, D` are existential: they are
//! erased at construction and can only be observed through [`day_collapse`],
//! [`day_dimap`], and the coherence isomorphisms below.
//!
//! Two Day pairs with different hidden splits can denote the same value, so
//! equality is behavioural: compare the collapsed transforms.

use std::fmt;
use std::marker::PhantomData;

use crate::monopro::MonoPro;
use crate::profunctor::{Hom, ProMorphism, Profunctor};
use crate::transform::Transform;
use crate::value::{Dyn, Value};

/// The unit for Day convolution: it carries only an output value.
pub struct UnitPro<A, B> {
    value: B,
    _in: PhantomData<fn(A)>,
}

impl<A, B: Clone> Clone for UnitPro<A, B> {
    fn clone(&self) -> Self {
        UnitPro::new(self.value.clone())
    }
}

impl<A, B: fmt::Debug> fmt::Debug for UnitPro<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UnitPro").field(&self.value).finish()
    }
}

impl<A, B> UnitPro<A, B> {
    pub fn new(value: B) -> Self {
        UnitPro {
            value,
            _in: PhantomData,
        }
    }

    pub fn value(&self) -> &B {
        &self.value
    }

    pub fn into_value(self) -> B {
        self.value
    }
}

/// Brand for [`UnitPro`].
#[derive(Clone, Copy, Debug)]
pub struct Unit;

impl Profunctor for Unit {
    type P<A: Value, B: Value> = UnitPro<A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        _pre: Transform<C, A>,
        post: Transform<B, D>,
        p: UnitPro<A, B>,
    ) -> UnitPro<C, D> {
        UnitPro::new(post.apply(p.value))
    }
}

pub struct DayPair<P: Profunctor, Q: Profunctor, S, T> {
    left: P::P<Dyn, Dyn>,
    right: Q::P<Dyn, Dyn>,
    split: Transform<S, (Dyn, Dyn)>,
    merge: Transform<(Dyn, Dyn), T>,
}

impl<P: Profunctor, Q: Profunctor, S, T> Clone for DayPair<P, Q, S, T> {
    fn clone(&self) -> Self {
        DayPair {
            left: self.left.clone(),
            right: self.right.clone(),
            split: self.split.clone(),
            merge: self.merge.clone(),
        }
    }
}

impl<P: Profunctor, Q: Profunctor, S, T> fmt::Debug for DayPair<P, Q, S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("DayPair(..)")
    }
}

impl<P: Profunctor, Q: Profunctor, S: Value, T: Value> DayPair<P, Q, S, T> {
    pub fn new<A: Value, B: Value, C: Value, D: Value>(
        left: P::P<A, B>,
        right: Q::P<C, D>,
        split: Transform<S, (A, C)>,
        merge: Transform<(B, D), T>,
    ) -> Self {
        DayPair {
            left: P::dimap(Transform::new(Dyn::take::<A>), Transform::new(Dyn::new::<B>), left),
            right: Q::dimap(Transform::new(Dyn::take::<C>), Transform::new(Dyn::new::<D>), right),
            split: Transform::new(move |s| {
                let (a, c) = split.apply(s);
                (Dyn::new(a), Dyn::new(c))
            }),
            merge: Transform::new(move |(b, d): (Dyn, Dyn)| merge.apply((b.take(), d.take()))),
        }
    }

    fn from_erased(
        left: P::P<Dyn, Dyn>,
        right: Q::P<Dyn, Dyn>,
        split: Transform<S, (Dyn, Dyn)>,
        merge: Transform<(Dyn, Dyn), T>,
    ) -> Self {
        DayPair {
            left,
            right,
            split,
            merge,
        }
    }
}

/// Brand for [`DayPair`]: the Day convolution `P ⋆ Q` as a profunctor.
pub struct Day<P, Q>(PhantomData<fn() -> (P, Q)>);

impl<P: Profunctor, Q: Profunctor> Profunctor for Day<P, Q> {
    type P<A: Value, B: Value> = DayPair<P, Q, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        d: DayPair<P, Q, A, B>,
    ) -> DayPair<P, Q, C, D> {
        DayPair::from_erased(d.left, d.right, pre.then(&d.split), d.merge.then(&post))
    }
}

/// Adapts the visible input and output; the hidden parts are untouched.
pub fn day_dimap<P: Profunctor, Q: Profunctor, A: Value, B: Value, C: Value, D: Value>(
    pre: Transform<C, A>,
    post: Transform<B, D>,
    d: DayPair<P, Q, A, B>,
) -> DayPair<P, Q, C, D> {
    Day::<P, Q>::dimap(pre, post, d)
}

/// Evaluates a Day pair of transforms: `merge ∘ (left × right) ∘ split`.
pub fn day_collapse<S: Value, T: Value>(d: &DayPair<Hom, Hom, S, T>) -> Transform<S, T> {
    let d = d.clone();
    Transform::new(move |s| {
        let (a, c) = d.split.apply(s);
        d.merge.apply((d.left.apply(a), d.right.apply(c)))
    })
}

/// Right unitor: `P ⋆ J ≅ P`.
pub fn rho<P: Profunctor, S: Value, T: Value>(d: DayPair<P, Unit, S, T>) -> P::P<S, T> {
    let unit = d.right.into_value();
    let merge = d.merge;
    P::dimap(
        d.split.then(&Transform::new(|(a, _): (Dyn, Dyn)| a)),
        Transform::new(move |b| merge.apply((b, unit.clone()))),
        d.left,
    )
}

pub fn rho_inv<P: Profunctor, S: Value, T: Value>(p: P::P<S, T>) -> DayPair<P, Unit, S, T> {
    DayPair::new(
        p,
        UnitPro::<(), ()>::new(()),
        Transform::new(|s| (s, ())),
        Transform::new(|(t, ()): (T, ())| t),
    )
}

/// Left unitor: `J ⋆ Q ≅ Q`.
pub fn lambda<Q: Profunctor, S: Value, T: Value>(d: DayPair<Unit, Q, S, T>) -> Q::P<S, T> {
    let unit = d.left.into_value();
    let merge = d.merge;
    Q::dimap(
        d.split.then(&Transform::new(|(_, c): (Dyn, Dyn)| c)),
        Transform::new(move |dd| merge.apply((unit.clone(), dd))),
        d.right,
    )
}

pub fn lambda_inv<Q: Profunctor, S: Value, T: Value>(q: Q::P<S, T>) -> DayPair<Unit, Q, S, T> {
    DayPair::new(
        UnitPro::<(), ()>::new(()),
        q,
        Transform::new(|s| ((), s)),
        Transform::new(|((), t): ((), T)| t),
    )
}

/// Associator: `(P ⋆ Q) ⋆ R ≅ P ⋆ (Q ⋆ R)`.
pub fn alpha<P: Profunctor, Q: Profunctor, R: Profunctor, S: Value, T: Value>(
    d: DayPair<Day<P, Q>, R, S, T>,
) -> DayPair<P, Day<Q, R>, S, T> {
    let inner = d.left;
    let (outer_split, outer_merge) = (d.split, d.merge);
    let (inner_split, inner_merge) = (inner.split, inner.merge);
    // The right part's hidden input and output are the pairs (c, e) and (d, f).
    let right = DayPair::<Q, R, Dyn, Dyn>::from_erased(
        inner.right,
        d.right,
        Transform::new(Dyn::take::<(Dyn, Dyn)>),
        Transform::new(Dyn::new::<(Dyn, Dyn)>),
    );
    DayPair::from_erased(
        inner.left,
        right,
        Transform::new(move |s| {
            let (x, e) = outer_split.apply(s);
            let (a, c) = inner_split.apply(x.take());
            (a, Dyn::new((c, e)))
        }),
        Transform::new(move |(b, df): (Dyn, Dyn)| {
            let (dd, f) = df.take::<(Dyn, Dyn)>();
            outer_merge.apply((Dyn::new(inner_merge.apply((b, dd))), f))
        }),
    )
}

pub fn alpha_inv<P: Profunctor, Q: Profunctor, R: Profunctor, S: Value, T: Value>(
    d: DayPair<P, Day<Q, R>, S, T>,
) -> DayPair<Day<P, Q>, R, S, T> {
    let inner = d.right;
    let (outer_split, outer_merge) = (d.split, d.merge);
    let (inner_split, inner_merge) = (inner.split, inner.merge);
    // The left part's hidden input and output are the pairs (a, c) and (b, d).
    let left = DayPair::<P, Q, Dyn, Dyn>::from_erased(
        d.left,
        inner.left,
        Transform::new(Dyn::take::<(Dyn, Dyn)>),
        Transform::new(Dyn::new::<(Dyn, Dyn)>),
    );
    DayPair::from_erased(
        left,
        inner.right,
        Transform::new(move |s| {
            let (a, y) = outer_split.apply(s);
            let (c, e) = inner_split.apply(y.take());
            (Dyn::new((a, c)), e)
        }),
        Transform::new(move |(bd, f): (Dyn, Dyn)| {
            let (b, dd) = bd.take::<(Dyn, Dyn)>();
            outer_merge.apply((b, Dyn::new(inner_merge.apply((dd, f)))))
        }),
    )
}

/// Symmetry: `P ⋆ Q ≅ Q ⋆ P`.
pub fn gamma<P: Profunctor, Q: Profunctor, S: Value, T: Value>(d: DayPair<P, Q, S, T>) -> DayPair<Q, P, S, T> {
    DayPair::from_erased(
        d.right,
        d.left,
        d.split.then(&Transform::new(|(a, c): (Dyn, Dyn)| (c, a))),
        Transform::new(|(d, b): (Dyn, Dyn)| (b, d)).then(&d.merge),
    )
}

/// Applies a natural transformation to each part.
pub fn day_map<P, Q, P2, Q2, S, T>(
    hp: &impl ProMorphism<P, P2>,
    hq: &impl ProMorphism<Q, Q2>,
    d: DayPair<P, Q, S, T>,
) -> DayPair<P2, Q2, S, T>
where
    P: Profunctor,
    Q: Profunctor,
    P2: Profunctor,
    Q2: Profunctor,
    S: Value,
    T: Value,
{
    DayPair::from_erased(hp.apply(d.left), hq.apply(d.right), d.split, d.merge)
}

/// [`day_map`] as a morphism `P ⋆ Q ⇒ P2 ⋆ Q2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DayMap<H, K>(pub H, pub K);

impl<P, Q, P2, Q2, H, K> ProMorphism<Day<P, Q>, Day<P2, Q2>> for DayMap<H, K>
where
    P: Profunctor,
    Q: Profunctor,
    P2: Profunctor,
    Q2: Profunctor,
    H: ProMorphism<P, P2>,
    K: ProMorphism<Q, Q2>,
{
    fn apply<S: Value, T: Value>(&self, d: DayPair<P, Q, S, T>) -> DayPair<P2, Q2, S, T> {
        day_map(&self.0, &self.1, d)
    }
}

/// [`alpha`] as a morphism.
#[derive(Clone, Copy, Debug, Default)]
pub struct Associator;

impl<P: Profunctor, Q: Profunctor, R: Profunctor> ProMorphism<Day<Day<P, Q>, R>, Day<P, Day<Q, R>>> for Associator {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Day<P, Q>, R, S, T>) -> DayPair<P, Day<Q, R>, S, T> {
        alpha(d)
    }
}

/// [`rho`] as a morphism.
#[derive(Clone, Copy, Debug, Default)]
pub struct RightUnitor;

impl<P: Profunctor> ProMorphism<Day<P, Unit>, P> for RightUnitor {
    fn apply<S: Value, T: Value>(&self, d: DayPair<P, Unit, S, T>) -> P::P<S, T> {
        rho(d)
    }
}

/// [`lambda`] as a morphism.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeftUnitor;

impl<Q: Profunctor> ProMorphism<Day<Unit, Q>, Q> for LeftUnitor {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Unit, Q, S, T>) -> Q::P<S, T> {
        lambda(d)
    }
}

/// [`gamma`] as a morphism.
#[derive(Clone, Copy, Debug, Default)]
pub struct Braiding;

impl<P: Profunctor, Q: Profunctor> ProMorphism<Day<P, Q>, Day<Q, P>> for Braiding {
    fn apply<S: Value, T: Value>(&self, d: DayPair<P, Q, S, T>) -> DayPair<Q, P, S, T> {
        gamma(d)
    }
}

/// A natural transformation out of the Day convolution, `P ⋆ Q ⇒ R`.
pub trait DayMorphism<P: Profunctor, Q: Profunctor, R: Profunctor> {
    fn apply<S: Value, T: Value>(&self, d: DayPair<P, Q, S, T>) -> R::P<S, T>;
}

/// A family `P<A, B> × Q<C, D> -> R<(A, C), (B, D)>`, natural in all four
/// component types.
pub trait PairMorphism<P: Profunctor, Q: Profunctor, R: Profunctor> {
    fn apply<A: Value, B: Value, C: Value, D: Value>(&self, p: P::P<A, B>, q: Q::P<C, D>) -> R::P<(A, C), (B, D)>;
}

/// The curried form of a [`DayMorphism`]: feed it the Day pair with trivial
/// split and merge.
#[derive(Clone, Copy, Debug)]
pub struct Curried<N>(pub N);

/// The uncurried form of a [`PairMorphism`]: apply it to the hidden parts and
/// adapt by the split and merge.
#[derive(Clone, Copy, Debug)]
pub struct Uncurried<M>(pub M);

pub fn day_curry<N>(n: N) -> Curried<N> {
    Curried(n)
}

pub fn day_uncurry<M>(m: M) -> Uncurried<M> {
    Uncurried(m)
}

impl<P: Profunctor, Q: Profunctor, R: Profunctor, N: DayMorphism<P, Q, R>> PairMorphism<P, Q, R> for Curried<N> {
    fn apply<A: Value, B: Value, C: Value, D: Value>(&self, p: P::P<A, B>, q: Q::P<C, D>) -> R::P<(A, C), (B, D)> {
        self.0.apply(DayPair::<P, Q, (A, C), (B, D)>::new(
            p,
            q,
            Transform::identity(),
            Transform::identity(),
        ))
    }
}

impl<P: Profunctor, Q: Profunctor, R: Profunctor, M: PairMorphism<P, Q, R>> DayMorphism<P, Q, R> for Uncurried<M> {
    fn apply<S: Value, T: Value>(&self, d: DayPair<P, Q, S, T>) -> R::P<S, T> {
        let parallel = self.0.apply::<Dyn, Dyn, Dyn, Dyn>(d.left, d.right);
        R::dimap(d.split, d.merge, parallel)
    }
}

/// [`day_collapse`] as a morphism `Hom ⋆ Hom ⇒ Hom`.
#[derive(Clone, Copy, Debug)]
pub struct Collapse;

impl DayMorphism<Hom, Hom, Hom> for Collapse {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Hom, Hom, S, T>) -> Transform<S, T> {
        day_collapse(&d)
    }
}

impl ProMorphism<Day<Hom, Hom>, Hom> for Collapse {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Hom, Hom, S, T>) -> Transform<S, T> {
        day_collapse(&d)
    }
}

/// A monoidal profunctor's multiplication as a [`PairMorphism`] `P × P -> P`.
#[derive(Clone, Copy, Debug)]
pub struct Star;

impl<P: MonoPro> PairMorphism<P, P, P> for Star {
    fn apply<A: Value, B: Value, C: Value, D: Value>(&self, p: P::P<A, B>, q: P::P<C, D>) -> P::P<(A, C), (B, D)> {
        P::star(p, q)
    }
}
