//! Extensional comparison of profunctor values over finite samples, and
//! checkers that run both sides of each law from [`crate::laws`] against
//! them.

use std::fmt::{self, Debug};

use crate::container::{Functor, Identity, IdentityF, ListF, Logged, LoggerF, Monad, OptionF, Traversable};
use crate::day::{Unit, UnitPro};
use crate::effect::{EffectArrow, Kleisli, Lift, LiftPro};
use crate::free::{free_from, Free, FreeChain};
use crate::laws;
use crate::monoid::Monoid;
use crate::monopro::MonoPro;
use crate::profunctor::{Forget, ForgetPro, Hom, Profunctor, Siso, SisoPro};
use crate::transform::Transform;
use crate::value::Value;

/// Values that can be compared and printed.
pub trait Sample: Value + PartialEq + Debug {}

impl<T: Value + PartialEq + Debug> Sample for T {}

/// Which container inputs to feed a profunctor whose inputs are containers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inputs {
    /// Every shape [`Observable::spread`] builds.
    All,
    /// Only `point(a)` for each sample `a`.
    Pure,
}

/// A container brand whose values can be built from samples, compared and
/// printed.
pub trait Observable: Functor {
    fn point<A: Sample>(a: A) -> Self::Of<A>;

    /// A handful of shapes per sample, linear in the number of samples.
    fn spread<A: Sample>(base: &[A]) -> Vec<Self::Of<A>>;

    fn same<A: Sample>(x: &Self::Of<A>, y: &Self::Of<A>) -> bool;

    fn describe<A: Sample>(x: &Self::Of<A>) -> String;

    fn inputs<A: Sample>(base: &[A], scope: Inputs) -> Vec<Self::Of<A>> {
        match scope {
            Inputs::All => Self::spread(base),
            Inputs::Pure => base.iter().cloned().map(Self::point).collect(),
        }
    }
}

impl Observable for IdentityF {
    fn point<A: Sample>(a: A) -> Identity<A> {
        Identity(a)
    }

    fn spread<A: Sample>(base: &[A]) -> Vec<Identity<A>> {
        base.iter().cloned().map(Identity).collect()
    }

    fn same<A: Sample>(x: &Identity<A>, y: &Identity<A>) -> bool {
        x == y
    }

    fn describe<A: Sample>(x: &Identity<A>) -> String {
        format!("{x:?}")
    }
}

impl Observable for OptionF {
    fn point<A: Sample>(a: A) -> Option<A> {
        Some(a)
    }

    fn spread<A: Sample>(base: &[A]) -> Vec<Option<A>> {
        std::iter::once(None).chain(base.iter().cloned().map(Some)).collect()
    }

    fn same<A: Sample>(x: &Option<A>, y: &Option<A>) -> bool {
        x == y
    }

    fn describe<A: Sample>(x: &Option<A>) -> String {
        format!("{x:?}")
    }
}

impl Observable for ListF {
    fn point<A: Sample>(a: A) -> Vec<A> {
        vec![a]
    }

    fn spread<A: Sample>(base: &[A]) -> Vec<Vec<A>> {
        let mut out = vec![Vec::new()];
        out.extend(base.iter().map(|a| vec![a.clone()]));
        out.extend(base.windows(2).map(<[A]>::to_vec));
        out.extend(base.windows(3).take(1).map(<[A]>::to_vec));
        out
    }

    fn same<A: Sample>(x: &Vec<A>, y: &Vec<A>) -> bool {
        x == y
    }

    fn describe<A: Sample>(x: &Vec<A>) -> String {
        format!("{x:?}")
    }
}

impl Observable for LoggerF {
    fn point<A: Sample>(a: A) -> Logged<A> {
        Logged::new(Vec::new(), a)
    }

    fn spread<A: Sample>(base: &[A]) -> Vec<Logged<A>> {
        base.iter()
            .flat_map(|a| {
                [
                    Logged::new(Vec::new(), a.clone()),
                    Logged::new(vec!["in".into()], a.clone()),
                ]
            })
            .collect()
    }

    fn same<A: Sample>(x: &Logged<A>, y: &Logged<A>) -> bool {
        x == y
    }

    fn describe<A: Sample>(x: &Logged<A>) -> String {
        format!("{x:?}")
    }
}

/// A profunctor whose values can be run on sample inputs and compared.
pub trait Observe: Profunctor {
    type In<A: Sample>: Value;

    fn inputs<A: Sample>(base: &[A], scope: Inputs) -> Vec<Self::In<A>>;

    fn describe<A: Sample>(x: &Self::In<A>) -> String;

    /// `Err` carries both observations when `p` and `q` differ at `x`.
    fn agree<A: Sample, B: Sample>(p: &Self::P<A, B>, q: &Self::P<A, B>, x: Self::In<A>) -> Result<(), String>;
}

fn verdict<O: Debug>(same: bool, lhs: O, rhs: O) -> Result<(), String> {
    if same {
        Ok(())
    } else {
        Err(format!("{lhs:?} vs {rhs:?}"))
    }
}

impl Observe for Hom {
    type In<A: Sample> = A;

    fn inputs<A: Sample>(base: &[A], _: Inputs) -> Vec<A> {
        base.to_vec()
    }

    fn describe<A: Sample>(x: &A) -> String {
        format!("{x:?}")
    }

    fn agree<A: Sample, B: Sample>(p: &Transform<A, B>, q: &Transform<A, B>, x: A) -> Result<(), String> {
        let (l, r) = (p.apply(x.clone()), q.apply(x));
        verdict(l == r, l, r)
    }
}

impl<M: Monoid> Observe for Forget<M>
where
    M::Carrier: PartialEq + Debug,
{
    type In<A: Sample> = A;

    fn inputs<A: Sample>(base: &[A], _: Inputs) -> Vec<A> {
        base.to_vec()
    }

    fn describe<A: Sample>(x: &A) -> String {
        format!("{x:?}")
    }

    fn agree<A: Sample, B: Sample>(p: &ForgetPro<M, A, B>, q: &ForgetPro<M, A, B>, x: A) -> Result<(), String> {
        let (l, r) = (p.run(x.clone()), q.run(x));
        verdict(l == r, l, r)
    }
}

impl<F: Observable, G: Observable> Observe for Siso<F, G> {
    type In<A: Sample> = F::Of<A>;

    fn inputs<A: Sample>(base: &[A], scope: Inputs) -> Vec<F::Of<A>> {
        F::inputs(base, scope)
    }

    fn describe<A: Sample>(x: &F::Of<A>) -> String {
        F::describe(x)
    }

    fn agree<A: Sample, B: Sample>(
        p: &SisoPro<F, G, A, B>,
        q: &SisoPro<F, G, A, B>,
        x: F::Of<A>,
    ) -> Result<(), String> {
        let (l, r) = (p.run(x.clone()), q.run(x));
        if G::same(&l, &r) {
            Ok(())
        } else {
            Err(format!("{} vs {}", G::describe(&l), G::describe(&r)))
        }
    }
}

impl Observe for Unit {
    type In<A: Sample> = A;

    fn inputs<A: Sample>(base: &[A], _: Inputs) -> Vec<A> {
        base.to_vec()
    }

    fn describe<A: Sample>(x: &A) -> String {
        format!("{x:?}")
    }

    fn agree<A: Sample, B: Sample>(p: &UnitPro<A, B>, q: &UnitPro<A, B>, _: A) -> Result<(), String> {
        verdict(p.value() == q.value(), p.value(), q.value())
    }
}

impl<M: Monad + Observable> Observe for Kleisli<M> {
    type In<A: Sample> = A;

    fn inputs<A: Sample>(base: &[A], _: Inputs) -> Vec<A> {
        base.to_vec()
    }

    fn describe<A: Sample>(x: &A) -> String {
        format!("{x:?}")
    }

    fn agree<A: Sample, B: Sample>(p: &EffectArrow<M, A, B>, q: &EffectArrow<M, A, B>, x: A) -> Result<(), String> {
        let (l, r) = (p.run(x.clone()), q.run(x));
        if M::same(&l, &r) {
            Ok(())
        } else {
            Err(format!("{} vs {}", M::describe(&l), M::describe(&r)))
        }
    }
}

impl<M: Monad + Traversable + Observable> Observe for Lift<M> {
    type In<A: Sample> = M::Of<A>;

    fn inputs<A: Sample>(base: &[A], scope: Inputs) -> Vec<M::Of<A>> {
        M::inputs(base, scope)
    }

    fn describe<A: Sample>(x: &M::Of<A>) -> String {
        M::describe(x)
    }

    fn agree<A: Sample, B: Sample>(p: &LiftPro<M, A, B>, q: &LiftPro<M, A, B>, x: M::Of<A>) -> Result<(), String> {
        let (l, r) = (p.run(x.clone()), q.run(x));
        if M::same(&l, &r) {
            Ok(())
        } else {
            Err(format!("{} vs {}", M::describe(&l), M::describe(&r)))
        }
    }
}

/// Chains are compared through the monoidal profunctor they collapse into.
impl<P: MonoPro + Observe> Observe for Free<P> {
    type In<A: Sample> = P::In<A>;

    fn inputs<A: Sample>(base: &[A], scope: Inputs) -> Vec<P::In<A>> {
        P::inputs(base, scope)
    }

    fn describe<A: Sample>(x: &P::In<A>) -> String {
        P::describe(x)
    }

    fn agree<A: Sample, B: Sample>(p: &FreeChain<P, A, B>, q: &FreeChain<P, A, B>, x: P::In<A>) -> Result<(), String> {
        P::agree::<A, B>(&free_from(p), &free_from(q), x)
    }
}

/// The first input at which two sides of a law disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub input: String,
    pub observed: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}: {}", self.law, self.input, self.observed)
    }
}

impl std::error::Error for Violation {}

/// Compares `lhs` and `rhs` on every input built from `base`; returns the
/// number of inputs compared.
pub fn agree_on<P: Observe, A: Sample, B: Sample>(
    law: &'static str,
    lhs: &P::P<A, B>,
    rhs: &P::P<A, B>,
    base: &[A],
    scope: Inputs,
) -> Result<usize, Violation> {
    let inputs = P::inputs(base, scope);
    for x in &inputs {
        P::agree::<A, B>(lhs, rhs, x.clone()).map_err(|observed| Violation {
            law,
            input: P::describe(x),
            observed,
        })?;
    }
    Ok(inputs.len())
}

/// Both functor laws for `p` with pre-maps `f`, `g` and post-maps `h`, `i`.
#[allow(clippy::too_many_arguments)]
pub fn profunctor_laws<P: Observe, A: Sample, B: Sample, C: Sample, D: Sample, E: Sample, F: Sample>(
    p: P::P<A, B>,
    f: Transform<C, A>,
    g: Transform<E, C>,
    h: Transform<D, F>,
    i: Transform<B, D>,
    base_a: &[A],
    base_e: &[E],
    scope: Inputs,
) -> Result<usize, Violation> {
    let identity = laws::dimap_identity::<P, A, B>(p.clone());
    let mut compared = agree_on::<P, A, B>("dimap identity", &identity, &p, base_a, scope)?;
    let fused = laws::dimap_fused::<P, A, B, C, D, E, F>(f.clone(), g.clone(), h.clone(), i.clone(), p.clone());
    let nested = laws::dimap_nested::<P, A, B, C, D, E, F>(f, g, h, i, p);
    compared += agree_on::<P, E, F>("dimap composition", &fused, &nested, base_e, scope)?;
    Ok(compared)
}

/// Left identity, right identity and associativity for `f`, `g`, `h`.
#[allow(clippy::too_many_arguments)]
pub fn monopro_laws<P: MonoPro + Observe, A: Sample, B: Sample, C: Sample, D: Sample, E: Sample, F: Sample>(
    f: P::P<A, B>,
    g: P::P<C, D>,
    h: P::P<E, F>,
    base_a: &[A],
    base_ace: &[((A, C), E)],
    scope: Inputs,
) -> Result<usize, Violation> {
    let left = laws::left_identity::<P, A, B>(f.clone());
    let mut compared = agree_on::<P, A, B>("left identity", &left, &f, base_a, scope)?;
    let right = laws::right_identity::<P, A, B>(f.clone());
    compared += agree_on::<P, A, B>("right identity", &right, &f, base_a, scope)?;
    let nested_right = laws::assoc_left::<P, A, B, C, D, E, F>(f.clone(), g.clone(), h.clone());
    let nested_left = laws::assoc_right::<P, A, B, C, D, E, F>(f, g, h);
    compared += agree_on::<P, ((A, C), E), ((B, D), F)>("associativity", &nested_right, &nested_left, base_ace, scope)?;
    Ok(compared)
}

/// Naturality of `star` in both arguments.
#[allow(clippy::too_many_arguments)]
pub fn naturality_law<
    P: MonoPro + Observe,
    A: Sample,
    B: Sample,
    C: Sample,
    D: Sample,
    A2: Sample,
    B2: Sample,
    C2: Sample,
    D2: Sample,
>(
    f1: Transform<A2, A>,
    g1: Transform<B, B2>,
    p: P::P<A, B>,
    f2: Transform<C2, C>,
    g2: Transform<D, D2>,
    q: P::P<C, D>,
    base: &[(A2, C2)],
    scope: Inputs,
) -> Result<usize, Violation> {
    let inner = laws::naturality_inner::<P, A, B, C, D, A2, B2, C2, D2>(
        f1.clone(),
        g1.clone(),
        p.clone(),
        f2.clone(),
        g2.clone(),
        q.clone(),
    );
    let outer = laws::naturality_outer::<P, A, B, C, D, A2, B2, C2, D2>(f1, g1, p, f2, g2, q);
    agree_on::<P, (A2, C2), (B2, D2)>("naturality", &inner, &outer, base, scope)
}
