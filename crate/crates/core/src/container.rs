//! The closed container roster: `Identity`, `Option`, `List` (a `Vec`) and
//! `Logger` (a value paired with an append-only list of log lines).
//!
//! Each container is addressed through a zero-sized brand (`IdentityF`,
//! `OptionF`, `ListF`, `LoggerF`) whose generic associated type `Of<A>` names
//! the concrete container holding an `A`. Capabilities are traits on the
//! brand, so pairing containers of different kinds is a type error.

use std::marker::PhantomData;

use crate::value::Value;

/// The identity functor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity<A>(pub A);

impl<A> Identity<A> {
    pub fn into_inner(self) -> A {
        self.0
    }
}

/// A value with the log lines produced while computing it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Logged<A> {
    pub log: Vec<String>,
    pub value: A,
}

impl<A> Logged<A> {
    pub fn new(log: Vec<String>, value: A) -> Self {
        Logged { log, value }
    }

    /// A single log line, carrying `()`.
    pub fn tell(line: impl Into<String>) -> Logged<()> {
        Logged {
            log: vec![line.into()],
            value: (),
        }
    }
}

pub trait Functor: 'static {
    type Of<A: Value>: Value;

    fn map<A: Value, B: Value>(fa: Self::Of<A>, f: impl Fn(A) -> B) -> Self::Of<B>;
}

/// Lawful applicatives, presented through `pure` and the monoidal product `zip`.
pub trait Applicative: Functor {
    fn pure<A: Value>(a: A) -> Self::Of<A>;

    fn zip<A: Value, B: Value>(fa: Self::Of<A>, fb: Self::Of<B>) -> Self::Of<(A, B)>;
}

pub trait Monad: Applicative {
    fn bind<A: Value, B: Value>(ma: Self::Of<A>, f: impl Fn(A) -> Self::Of<B>) -> Self::Of<B>;
}

pub trait Traversable: Functor {
    /// Pulls the inner applicative layer outward, visiting elements left to right.
    fn sequence<G: Applicative, A: Value>(t: Self::Of<G::Of<A>>) -> G::Of<Self::Of<A>>;
}

#[derive(Clone, Copy, Debug)]
pub struct IdentityF;
#[derive(Clone, Copy, Debug)]
pub struct OptionF;
/// Lists with the cartesian (non-truncating) applicative.
#[derive(Clone, Copy, Debug)]
pub struct ListF;
#[derive(Clone, Copy, Debug)]
pub struct LoggerF;

impl Functor for IdentityF {
    type Of<A: Value> = Identity<A>;

    fn map<A: Value, B: Value>(fa: Identity<A>, f: impl Fn(A) -> B) -> Identity<B> {
        Identity(f(fa.0))
    }
}

impl Applicative for IdentityF {
    fn pure<A: Value>(a: A) -> Identity<A> {
        Identity(a)
    }

    fn zip<A: Value, B: Value>(fa: Identity<A>, fb: Identity<B>) -> Identity<(A, B)> {
        Identity((fa.0, fb.0))
    }
}

impl Monad for IdentityF {
    fn bind<A: Value, B: Value>(ma: Identity<A>, f: impl Fn(A) -> Identity<B>) -> Identity<B> {
        f(ma.0)
    }
}

impl Traversable for IdentityF {
    fn sequence<G: Applicative, A: Value>(t: Identity<G::Of<A>>) -> G::Of<Identity<A>> {
        G::map(t.0, Identity)
    }
}

impl Functor for OptionF {
    type Of<A: Value> = Option<A>;

    fn map<A: Value, B: Value>(fa: Option<A>, f: impl Fn(A) -> B) -> Option<B> {
        fa.map(f)
    }
}

impl Applicative for OptionF {
    fn pure<A: Value>(a: A) -> Option<A> {
        Some(a)
    }

    fn zip<A: Value, B: Value>(fa: Option<A>, fb: Option<B>) -> Option<(A, B)> {
        fa.zip(fb)
    }
}

impl Monad for OptionF {
    fn bind<A: Value, B: Value>(ma: Option<A>, f: impl Fn(A) -> Option<B>) -> Option<B> {
        ma.and_then(f)
    }
}

impl Traversable for OptionF {
    fn sequence<G: Applicative, A: Value>(t: Option<G::Of<A>>) -> G::Of<Option<A>> {
        match t {
            None => G::pure(None),
            Some(inner) => G::map(inner, Some),
        }
    }
}

impl Functor for ListF {
    type Of<A: Value> = Vec<A>;

    fn map<A: Value, B: Value>(fa: Vec<A>, f: impl Fn(A) -> B) -> Vec<B> {
        fa.into_iter().map(f).collect()
    }
}

impl Applicative for ListF {
    fn pure<A: Value>(a: A) -> Vec<A> {
        vec![a]
    }

    fn zip<A: Value, B: Value>(fa: Vec<A>, fb: Vec<B>) -> Vec<(A, B)> {
        fa.into_iter()
            .flat_map(|a| fb.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

impl Monad for ListF {
    fn bind<A: Value, B: Value>(ma: Vec<A>, f: impl Fn(A) -> Vec<B>) -> Vec<B> {
        ma.into_iter().flat_map(f).collect()
    }
}

impl Traversable for ListF {
    fn sequence<G: Applicative, A: Value>(t: Vec<G::Of<A>>) -> G::Of<Vec<A>> {
        t.into_iter().fold(G::pure(Vec::new()), |acc, next| {
            G::map(G::zip(acc, next), |(mut done, a)| {
                done.push(a);
                done
            })
        })
    }
}

impl Functor for LoggerF {
    type Of<A: Value> = Logged<A>;

    fn map<A: Value, B: Value>(fa: Logged<A>, f: impl Fn(A) -> B) -> Logged<B> {
        Logged {
            log: fa.log,
            value: f(fa.value),
        }
    }
}

impl Applicative for LoggerF {
    fn pure<A: Value>(a: A) -> Logged<A> {
        Logged {
            log: Vec::new(),
            value: a,
        }
    }

    fn zip<A: Value, B: Value>(fa: Logged<A>, fb: Logged<B>) -> Logged<(A, B)> {
        let mut log = fa.log;
        log.extend(fb.log);
        Logged {
            log,
            value: (fa.value, fb.value),
        }
    }
}

impl Monad for LoggerF {
    fn bind<A: Value, B: Value>(ma: Logged<A>, f: impl Fn(A) -> Logged<B>) -> Logged<B> {
        let next = f(ma.value);
        let mut log = ma.log;
        log.extend(next.log);
        Logged { log, value: next.value }
    }
}

impl Traversable for LoggerF {
    fn sequence<G: Applicative, A: Value>(t: Logged<G::Of<A>>) -> G::Of<Logged<A>> {
        let log = t.log;
        G::map(t.value, move |a| Logged {
            log: log.clone(),
            value: a,
        })
    }
}

/// The option transformer over `M`: an `M`-computation that may fail.
///
/// `OptionT<M>::Of<A>` is `M::Of<Option<A>>`. A failure short-circuits the
/// rest of the computation while keeping the effects already performed in `M`.
pub struct OptionT<M>(PhantomData<fn() -> M>);

impl<M: Monad> Functor for OptionT<M> {
    type Of<A: Value> = M::Of<Option<A>>;

    fn map<A: Value, B: Value>(fa: M::Of<Option<A>>, f: impl Fn(A) -> B) -> M::Of<Option<B>> {
        M::map(fa, |o| o.map(&f))
    }
}

impl<M: Monad> Applicative for OptionT<M> {
    fn pure<A: Value>(a: A) -> M::Of<Option<A>> {
        M::pure(Some(a))
    }

    fn zip<A: Value, B: Value>(fa: M::Of<Option<A>>, fb: M::Of<Option<B>>) -> M::Of<Option<(A, B)>> {
        Self::bind(fa, |a| Self::map(fb.clone(), move |b| (a.clone(), b)))
    }
}

impl<M: Monad> Monad for OptionT<M> {
    fn bind<A: Value, B: Value>(ma: M::Of<Option<A>>, f: impl Fn(A) -> M::Of<Option<B>>) -> M::Of<Option<B>> {
        M::bind(ma, |o| match o {
            None => M::pure(None),
            Some(a) => f(a),
        })
    }
}

impl<M: Monad> OptionT<M> {
    /// Runs an `M`-computation inside the transformer; it never fails.
    pub fn lift<A: Value>(ma: M::Of<A>) -> M::Of<Option<A>> {
        M::map(ma, Some)
    }

    /// Fails without any `M` effect.
    pub fn fail<A: Value>() -> M::Of<Option<A>> {
        M::pure(None)
    }

    pub fn guard(ok: bool) -> M::Of<Option<()>> {
        if ok {
            Self::pure(())
        } else {
            Self::fail()
        }
    }

    /// Flattens an inner `M` layer produced inside the transformer by binding
    /// `M` and sequencing the option layer through it.
    pub fn comm<A: Value>(nested: M::Of<Option<M::Of<A>>>) -> M::Of<Option<A>> {
        M::bind(nested, OptionF::sequence::<M, A>)
    }
}

/// Splits a container of pairs into the container of first components and the
/// container of second components.
pub fn unzip_c<F: Functor, A: Value, B: Value>(c: F::Of<(A, B)>) -> (F::Of<A>, F::Of<B>) {
    (F::map(c.clone(), |(a, _)| a), F::map(c, |(_, b)| b))
}

/// The applicative product of two like-kinded containers.
pub fn zip_c<G: Applicative, A: Value, B: Value>(pair: (G::Of<A>, G::Of<B>)) -> G::Of<(A, B)> {
    G::zip(pair.0, pair.1)
}
