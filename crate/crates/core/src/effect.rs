//! Effectful monoidal profunctors.
//!
//! [`EffectArrow`]s (Kleisli arrows `A -> M<B>`) form a category for every
//! monad `M` in the roster. [`LiftPro`] packages the option transformer's
//! `lift` as a profunctor over those arrows: it can be pre- and
//! post-composed with effect arrows ([`CatProfunctor`]) and convolved
//! through them ([`CatMonoPro`]). [`qsort_logged`] shows the machinery on a
//! quicksort that logs its steps and stops on an empty string.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use thiserror::Error;

use crate::category::{Arrow, Category};
use crate::container::{unzip_c, Applicative, Functor, Logged, LoggerF, Monad, OptionT, Traversable};
use crate::monopro::MonoPro;
use crate::profunctor::Profunctor;
use crate::transform::Transform;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EffectError {
    #[error("cannot split an empty list around its head")]
    EmptyInput,
}

/// A Kleisli arrow `A -> M<B>`.
pub struct EffectArrow<M: Functor, A: Value, B: Value> {
    run: Arc<dyn Fn(A) -> M::Of<B> + Send + Sync>,
}

impl<M: Functor, A: Value, B: Value> Clone for EffectArrow<M, A, B> {
    fn clone(&self) -> Self {
        EffectArrow {
            run: Arc::clone(&self.run),
        }
    }
}

impl<M: Functor, A: Value, B: Value> fmt::Debug for EffectArrow<M, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("EffectArrow(..)")
    }
}

impl<M: Functor, A: Value, B: Value> EffectArrow<M, A, B> {
    pub fn new(run: impl Fn(A) -> M::Of<B> + Send + Sync + 'static) -> Self {
        EffectArrow { run: Arc::new(run) }
    }

    pub fn run(&self, a: A) -> M::Of<B> {
        (self.run)(a)
    }
}

/// Brand for [`EffectArrow`] over the monad `M`.
pub struct Kleisli<M>(PhantomData<fn() -> M>);

impl<M: Monad> Profunctor for Kleisli<M> {
    type P<A: Value, B: Value> = EffectArrow<M, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        p: EffectArrow<M, A, B>,
    ) -> EffectArrow<M, C, D> {
        EffectArrow::new(move |c| M::map(p.run(pre.apply(c)), |b| post.apply(b)))
    }
}

impl<M: Monad> Category for Kleisli<M> {
    fn identity<A: Value>() -> EffectArrow<M, A, A> {
        EffectArrow::new(M::pure)
    }

    fn compose<A: Value, B: Value, C: Value>(g: EffectArrow<M, B, C>, f: EffectArrow<M, A, B>) -> EffectArrow<M, A, C> {
        EffectArrow::new(move |a| M::bind(f.run(a), |b| g.run(b)))
    }
}

impl<M: Monad> Arrow for Kleisli<M> {
    fn arr<A: Value, B: Value>(f: Transform<A, B>) -> EffectArrow<M, A, B> {
        EffectArrow::new(move |a| M::pure(f.apply(a)))
    }
}

impl<M: Monad> MonoPro for Kleisli<M> {
    fn empty() -> EffectArrow<M, (), ()> {
        EffectArrow::new(M::pure)
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: EffectArrow<M, A, B>,
        q: EffectArrow<M, C, D>,
    ) -> EffectArrow<M, (A, C), (B, D)> {
        EffectArrow::new(move |(a, c): (A, C)| M::bind(p.run(a), |b| M::map(q.run(c.clone()), move |d| (b.clone(), d))))
    }
}

/// Runs `p` then `q`, pairing their results; `p`'s effects come first.
pub fn kleisli_star<M: Monad, A: Value, B: Value, C: Value, D: Value>(
    p: EffectArrow<M, A, B>,
    q: EffectArrow<M, C, D>,
) -> EffectArrow<M, (A, C), (B, D)> {
    Kleisli::<M>::star(p, q)
}

/// A mapping `M<A> -> OptionT<M, B>`, that is `M<A> -> M<Option<B>>`.
pub struct LiftPro<M: Functor, A: Value, B: Value> {
    run: Arc<dyn Fn(M::Of<A>) -> M::Of<Option<B>> + Send + Sync>,
}

impl<M: Functor, A: Value, B: Value> Clone for LiftPro<M, A, B> {
    fn clone(&self) -> Self {
        LiftPro {
            run: Arc::clone(&self.run),
        }
    }
}

impl<M: Functor, A: Value, B: Value> fmt::Debug for LiftPro<M, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("LiftPro(..)")
    }
}

impl<M: Functor, A: Value, B: Value> LiftPro<M, A, B> {
    pub fn new(run: impl Fn(M::Of<A>) -> M::Of<Option<B>> + Send + Sync + 'static) -> Self {
        LiftPro { run: Arc::new(run) }
    }

    pub fn run(&self, ma: M::Of<A>) -> M::Of<Option<B>> {
        (self.run)(ma)
    }
}

/// Brand for [`LiftPro`] over the monad `M`.
pub struct Lift<M>(PhantomData<fn() -> M>);

impl<M: Monad> Profunctor for Lift<M> {
    type P<A: Value, B: Value> = LiftPro<M, A, B>;

    fn dimap<A: Value, B: Value, C: Value, D: Value>(
        pre: Transform<C, A>,
        post: Transform<B, D>,
        l: LiftPro<M, A, B>,
    ) -> LiftPro<M, C, D> {
        LiftPro::new(move |mc| OptionT::<M>::map(l.run(M::map(mc, |c| pre.apply(c))), |b| post.apply(b)))
    }
}

/// The morphisms of a [`CatProfunctor`]'s base category.
pub type Morphism<K, A, B> = <<K as CatProfunctor>::Cat as Profunctor>::P<A, B>;

/// A profunctor that can be adapted by morphisms of the category `Cat`
/// rather than only by pure mappings.
pub trait CatProfunctor: Profunctor {
    type Cat: Category;

    fn cat_dimap<A: Value, B: Value, C: Value, D: Value>(
        f: Morphism<Self, A, B>,
        g: Morphism<Self, C, D>,
        p: Self::P<B, C>,
    ) -> Self::P<A, D>;
}

/// Monoidal structure relative to `Cat`: a unit built from two morphisms
/// through `()`, and convolution through a splitting and a merging morphism.
pub trait CatMonoPro: CatProfunctor {
    fn cmp_unit<S: Value, T: Value>(f: Morphism<Self, S, ()>, g: Morphism<Self, (), T>) -> Self::P<S, T>;

    fn convolute<S: Value, T: Value, A: Value, B: Value, C: Value, D: Value>(
        f: Morphism<Self, S, (A, C)>,
        g: Morphism<Self, (B, D), T>,
        h: Self::P<A, B>,
        l: Self::P<C, D>,
    ) -> Self::P<S, T>;
}

impl<M: Monad> CatProfunctor for Lift<M> {
    type Cat = Kleisli<M>;

    fn cat_dimap<A: Value, B: Value, C: Value, D: Value>(
        f: EffectArrow<M, A, B>,
        g: EffectArrow<M, C, D>,
        l: LiftPro<M, B, C>,
    ) -> LiftPro<M, A, D> {
        LiftPro::new(move |ma| {
            let inner = l.run(M::bind(ma, |a| f.run(a)));
            OptionT::<M>::bind(inner, |c| OptionT::<M>::lift(g.run(c)))
        })
    }
}

impl<M: Monad + Traversable> CatMonoPro for Lift<M> {
    fn cmp_unit<S: Value, T: Value>(f: EffectArrow<M, S, ()>, g: EffectArrow<M, (), T>) -> LiftPro<M, S, T> {
        LiftPro::new(move |ms| OptionT::<M>::lift(M::bind(M::bind(ms, |s| f.run(s)), |()| g.run(()))))
    }

    fn convolute<S: Value, T: Value, A: Value, B: Value, C: Value, D: Value>(
        f: EffectArrow<M, S, (A, C)>,
        g: EffectArrow<M, (B, D), T>,
        h: LiftPro<M, A, B>,
        l: LiftPro<M, C, D>,
    ) -> LiftPro<M, S, T> {
        LiftPro::new(move |ms| {
            let (ma, mc) = unzip_c::<M, A, C>(M::bind(ms, |s| f.run(s)));
            let both = OptionT::<M>::zip(h.run(ma), l.run(mc));
            OptionT::<M>::comm(OptionT::<M>::map(both, |bd| g.run(bd)))
        })
    }
}

impl<M: Monad + Traversable> MonoPro for Lift<M> {
    fn empty() -> LiftPro<M, (), ()> {
        cmp_empty::<Lift<M>>()
    }

    fn star<A: Value, B: Value, C: Value, D: Value>(
        p: LiftPro<M, A, B>,
        q: LiftPro<M, C, D>,
    ) -> LiftPro<M, (A, C), (B, D)> {
        star_star::<Lift<M>, A, B, C, D>(p, q)
    }
}

pub fn cat_dimap<M: Monad, A: Value, B: Value, C: Value, D: Value>(
    f: EffectArrow<M, A, B>,
    g: EffectArrow<M, C, D>,
    l: LiftPro<M, B, C>,
) -> LiftPro<M, A, D> {
    Lift::<M>::cat_dimap(f, g, l)
}

pub fn cmp_unit<M: Monad + Traversable, S: Value, T: Value>(
    f: EffectArrow<M, S, ()>,
    g: EffectArrow<M, (), T>,
) -> LiftPro<M, S, T> {
    Lift::<M>::cmp_unit(f, g)
}

/// The unit: `cmp_unit(id, id)`.
pub fn cmp_empty<K: CatMonoPro>() -> K::P<(), ()> {
    K::cmp_unit(K::Cat::identity(), K::Cat::identity())
}

pub fn eff_convolute<M: Monad + Traversable, S: Value, T: Value, A: Value, B: Value, C: Value, D: Value>(
    f: EffectArrow<M, S, (A, C)>,
    g: EffectArrow<M, (B, D), T>,
    h: LiftPro<M, A, B>,
    l: LiftPro<M, C, D>,
) -> LiftPro<M, S, T> {
    Lift::<M>::convolute(f, g, h, l)
}

/// Parallel composition: convolution through identity morphisms.
pub fn star_star<K: CatMonoPro, A: Value, B: Value, C: Value, D: Value>(
    h: K::P<A, B>,
    l: K::P<C, D>,
) -> K::P<(A, C), (B, D)> {
    K::convolute(K::Cat::identity(), K::Cat::identity(), h, l)
}

/// Convolution with an effectful split and no merge.
pub fn lconvolute<K: CatMonoPro, S: Value, A: Value, B: Value, C: Value, D: Value>(
    f: Morphism<K, S, (A, C)>,
    h: K::P<A, B>,
    l: K::P<C, D>,
) -> K::P<S, (B, D)> {
    K::convolute(f, K::Cat::identity(), h, l)
}

/// Convolution with no split and an effectful merge.
pub fn rconvolute<K: CatMonoPro, T: Value, A: Value, B: Value, C: Value, D: Value>(
    g: Morphism<K, (B, D), T>,
    h: K::P<A, B>,
    l: K::P<C, D>,
) -> K::P<(A, C), T> {
    K::convolute(K::Cat::identity(), g, h, l)
}

/// The option transformer's `lift` as a profunctor value.
pub fn lift_pro<M: Monad, A: Value>() -> LiftPro<M, A, A> {
    LiftPro::new(OptionT::<M>::lift)
}

/// Renders a string the way Haskell's `show` does.
pub fn show_string(s: &str) -> String {
    const NAMES: [&str; 32] = [
        "NUL", "SOH", "STX", "ETX", "EOT", "ENQ", "ACK", "a", "b", "t", "n", "v", "f", "r", "SO", "SI", "DLE", "DC1",
        "DC2", "DC3", "DC4", "NAK", "SYN", "ETB", "CAN", "EM", "SUB", "ESC", "FS", "GS", "RS", "US",
    ];
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\u{7f}' => out.push_str("\\DEL"),
            c if (c as u32) < 0x20 => {
                out.push('\\');
                out.push_str(NAMES[c as usize]);
                // "\SO" followed by 'H' would read back as "\SOH"
                if c == '\u{e}' && chars.peek() == Some(&'H') {
                    out.push_str("\\&");
                }
            }
            c if (c as u32) > 0x7f => {
                out.push('\\');
                out.push_str(&(c as u32).to_string());
                if chars.peek().is_some_and(|next| next.is_ascii_digit()) {
                    out.push_str("\\&");
                }
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders a list of strings the way Haskell's `show` does: `["a","b"]`.
pub fn show_list(items: &[String]) -> String {
    let shown: Vec<String> = items.iter().map(|s| show_string(s)).collect();
    format!("[{}]", shown.join(","))
}

/// Partitions the tail around the head: strictly smaller elements to the
/// left, the rest to the right. Logs one line.
pub fn lsplit(words: &[String]) -> Result<Logged<(Vec<String>, Vec<String>)>, EffectError> {
    let (pivot, rest) = words.split_first().ok_or(EffectError::EmptyInput)?;
    let smaller: Vec<String> = rest.iter().filter(|w| *w < pivot).cloned().collect();
    let larger: Vec<String> = rest.iter().filter(|w| *w >= pivot).cloned().collect();
    let line = format!(
        "Splitting: {} into {}, {}",
        show_list(rest),
        show_list(&smaller),
        show_list(&larger)
    );
    Ok(Logged::new(vec![line], (smaller, larger)))
}

/// Concatenates `xs ++ [pivot] ++ ys`. Logs one line.
pub fn rsplit(pivot: &str, (xs, ys): (Vec<String>, Vec<String>)) -> Logged<Vec<String>> {
    let line = format!("Merging: {}, {}, and {}", show_list(&xs), pivot, show_list(&ys));
    let mut merged = xs;
    merged.push(pivot.to_string());
    merged.extend(ys);
    Logged::new(vec![line], merged)
}

type LoggedOption = OptionT<LoggerF>;

/// Quicksort in the option-over-logger stack. Any empty string reached as
/// the head of a sublist stops the sort; the log so far is kept.
pub fn qsort_logged(words: Vec<String>) -> Logged<Option<Vec<String>>> {
    let Some(pivot) = words.first().cloned() else {
        return LoggedOption::pure(Vec::new());
    };
    LoggedOption::bind(LoggedOption::guard(!pivot.is_empty()), move |()| {
        let partition = lconvolute::<Lift<LoggerF>, _, _, _, _, _>(
            EffectArrow::new(|xs: Vec<String>| lsplit(&xs).expect("a guarded list is never empty")),
            lift_pro(),
            lift_pro(),
        );
        let sort_halves =
            kleisli_star::<LoggedOption, _, _, _, _>(EffectArrow::new(qsort_logged), EffectArrow::new(qsort_logged));
        let pivot = pivot.clone();
        LoggedOption::bind(partition.run(LoggerF::pure(words.clone())), move |halves| {
            let pivot = pivot.clone();
            LoggedOption::bind(sort_halves.run(halves), move |sorted| {
                let pivot = pivot.clone();
                let merge = rconvolute::<Lift<LoggerF>, _, _, _, _, _>(
                    EffectArrow::new(move |pair| rsplit(&pivot, pair)),
                    lift_pro(),
                    lift_pro(),
                );
                merge.run(LoggerF::pure(sorted))
            })
        })
    })
}
