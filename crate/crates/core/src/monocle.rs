//! Monocles: optics for monoidal profunctors over the product tensor.
//!
//! A monocle from `(S, T)` to `(A, B)` turns any `P<A, B>` into a `P<S, T>`
//! for every monoidal profunctor `P`. Such a polymorphic mapping is
//! determined by an arity `n`, a split `S -> Aⁿ` and a merge `Bⁿ -> T`, and
//! [`MonocleRep`] stores exactly that triple. [`apply_monocle`] rebuilds the
//! action: `dimap(split, merge, p ⋆ p ⋆ … ⋆ p)`, nested to the left, foci in
//! left-to-right order.

use std::fmt;

use thiserror::Error;

use crate::container::{Applicative, Functor, Identity, IdentityF, ListF};
use crate::monoid::Monoid;
use crate::monopro::MonoPro;
use crate::profunctor::{Forget, ForgetPro, Siso, SisoPro};
use crate::transform::Transform;
use crate::tuples::{flat3, flat3_inv, flat4, flat4_inv};
use crate::value::Value;

/// Largest arity accepted by [`each_vec`].
pub const MAX_ARITY: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonocleError {
    #[error("arity {0} is outside the supported range 0..={MAX_ARITY}")]
    ArityOutOfRange(usize),
    #[error("expected {expected} values, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
}

pub struct MonocleRep<S, T, A, B> {
    arity: usize,
    split: Transform<S, Vec<A>>,
    merge: Transform<Vec<B>, T>,
}

impl<S, T, A, B> Clone for MonocleRep<S, T, A, B> {
    fn clone(&self) -> Self {
        MonocleRep {
            arity: self.arity,
            split: self.split.clone(),
            merge: self.merge.clone(),
        }
    }
}

impl<S, T, A, B> fmt::Debug for MonocleRep<S, T, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonocleRep")
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

impl<S: Value, T: Value, A: Value, B: Value> MonocleRep<S, T, A, B> {
    /// `split` must always return exactly `arity` values and `merge` is only
    /// ever called with `arity` values. A split that breaks this panics when
    /// the monocle is applied.
    pub fn new(arity: usize, split: Transform<S, Vec<A>>, merge: Transform<Vec<B>, T>) -> Self {
        MonocleRep { arity, split, merge }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn split(&self, s: S) -> Vec<A> {
        self.split.apply(s)
    }

    pub fn merge(&self, bs: Vec<B>) -> T {
        self.merge.apply(bs)
    }

    /// Like [`MonocleRep::split`], reporting a split of the wrong length.
    pub fn checked_split(&self, s: S) -> Result<Vec<A>, MonocleError> {
        let parts = self.split.apply(s);
        if parts.len() == self.arity {
            Ok(parts)
        } else {
            Err(MonocleError::ShapeMismatch {
                expected: self.arity,
                found: parts.len(),
            })
        }
    }
}

/// Homogeneous tuples, converted to and from vectors of their components.
pub trait HomTuple: Value {
    type Elem: Value;
    const ARITY: usize;

    fn into_vec(self) -> Vec<Self::Elem>;

    /// Panics unless `v.len() == ARITY`.
    fn from_vec(v: Vec<Self::Elem>) -> Self;
}

macro_rules! hom_tuple {
    ($n:expr; $($x:ident),+) => {
        impl<A: Value> HomTuple for ($(hom_tuple!(@ty $x A),)+) {
            type Elem = A;
            const ARITY: usize = $n;

            fn into_vec(self) -> Vec<A> {
                let ($($x,)+) = self;
                vec![$($x),+]
            }

            fn from_vec(v: Vec<A>) -> Self {
                assert_eq!(v.len(), $n, "tuple of arity {} built from {} values", $n, v.len());
                let mut it = v.into_iter();
                ($(hom_tuple!(@next it $x),)+)
            }
        }
    };
    (@ty $x:ident $a:ident) => { $a };
    (@next $it:ident $x:ident) => { $it.next().expect("length checked") };
}

hom_tuple!(1; a);
hom_tuple!(2; a, b);
hom_tuple!(3; a, b, c);
hom_tuple!(4; a, b, c, d);
hom_tuple!(5; a, b, c, d, e);
hom_tuple!(6; a, b, c, d, e, f);
hom_tuple!(7; a, b, c, d, e, f, g);
hom_tuple!(8; a, b, c, d, e, f, g, h);

/// Focuses every component of a homogeneous tuple.
pub fn each<S: HomTuple, T: HomTuple>() -> MonocleRep<S, T, S::Elem, T::Elem> {
    const { assert!(S::ARITY == T::ARITY, "source and target tuples differ in arity") };
    MonocleRep::new(S::ARITY, Transform::new(S::into_vec), Transform::new(T::from_vec))
}

/// The monocle with no foci: from `()` to `()`.
pub fn each0<A: Value, B: Value>() -> MonocleRep<(), (), A, B> {
    MonocleRep::new(0, Transform::new(|()| Vec::new()), Transform::new(|_: Vec<B>| ()))
}

pub fn each1<A: Value, B: Value>() -> MonocleRep<A, B, A, B> {
    MonocleRep::new(
        1,
        Transform::new(|a| vec![a]),
        Transform::new(|bs: Vec<B>| bs.into_iter().next().expect("arity 1")),
    )
}

pub fn each2<A: Value, B: Value>() -> MonocleRep<(A, A), (B, B), A, B> {
    each()
}

pub fn each3<A: Value, B: Value>() -> MonocleRep<(A, A, A), (B, B, B), A, B> {
    each()
}

pub fn each4<A: Value, B: Value>() -> MonocleRep<(A, A, A, A), (B, B, B, B), A, B> {
    each()
}

/// Focuses every element of a vector that must hold exactly `n` values.
pub fn each_vec<A: Value, B: Value>(n: usize) -> Result<MonocleRep<Vec<A>, Vec<B>, A, B>, MonocleError> {
    if n > MAX_ARITY {
        return Err(MonocleError::ArityOutOfRange(n));
    }
    Ok(MonocleRep::new(n, Transform::identity(), Transform::identity()))
}

/// `n` copies of `p` composed in parallel, nested to the left, presented on
/// vectors of length `n`.
fn power<P: MonoPro, A: Value, B: Value>(n: usize, p: P::P<A, B>) -> P::P<Vec<A>, Vec<B>> {
    match n {
        0 => P::dimap(
            Transform::new(|_: Vec<A>| ()),
            Transform::new(|()| Vec::new()),
            P::empty(),
        ),
        1 => P::dimap(
            Transform::new(|v: Vec<A>| v.into_iter().next().expect("one focus")),
            Transform::new(|b| vec![b]),
            p,
        ),
        _ => P::dimap(
            Transform::new(|mut v: Vec<A>| {
                let last = v.pop().expect("at least two foci");
                (v, last)
            }),
            Transform::new(|(mut v, b): (Vec<B>, B)| {
                v.push(b);
                v
            }),
            P::star(power::<P, A, B>(n - 1, p.clone()), p),
        ),
    }
}

/// Runs a monocle at the monoidal profunctor `P`.
///
/// Panics if the monocle's split yields a vector whose length is not its arity.
pub fn apply_monocle<P: MonoPro, S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    focus: P::P<A, B>,
) -> P::P<S, T> {
    let arity = rep.arity;
    let split = rep.split.clone();
    let checked = Transform::new(move |s| {
        let parts = split.apply(s);
        assert_eq!(parts.len(), arity, "monocle split produced the wrong number of foci");
        parts
    });
    P::dimap(checked, rep.merge.clone(), power::<P, A, B>(arity, focus))
}

/// Combines every focus with the monoid `M`, left to right.
pub fn fold_of<M: Monoid, S: Value, T: Value, B: Value>(rep: &MonocleRep<S, T, M::Carrier, B>, s: S) -> M::Carrier {
    fold_map_of::<M, S, T, M::Carrier, B>(rep, Transform::identity(), s)
}

/// Maps every focus into the monoid `M` and combines the results.
pub fn fold_map_of<M: Monoid, S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    f: Transform<A, M::Carrier>,
    s: S,
) -> M::Carrier {
    apply_monocle::<Forget<M>, S, T, A, B>(rep, ForgetPro::from_transform(f)).run(s)
}

/// The van Laarhoven form of a monocle: lifts `F<A> -> G<B>` to `F<S> -> G<T>`.
/// Effects in `G` occur in focus order.
pub fn convolute_vl<F: Functor, G: Applicative, S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    f: impl Fn(F::Of<A>) -> G::Of<B> + Send + Sync + 'static,
) -> SisoPro<F, G, S, T> {
    apply_monocle::<Siso<F, G>, S, T, A, B>(rep, SisoPro::new(f))
}

/// Runs an effectful mapping over every focus, collecting the effects in
/// focus order.
pub fn traverse_of<G: Applicative, S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    g: impl Fn(A) -> G::Of<B> + Send + Sync + 'static,
    s: S,
) -> G::Of<T> {
    convolute_vl::<IdentityF, G, S, T, A, B>(rep, move |Identity(a)| g(a)).run(Identity(s))
}

/// Zips an `F`-structure of sources focus by focus: `k` sees, for each focus
/// position, the `F`-structure of the values at that position.
pub fn zip_f_with_of<F: Functor, S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    k: impl Fn(F::Of<A>) -> B + Send + Sync + 'static,
    fs: F::Of<S>,
) -> T {
    convolute_vl::<F, IdentityF, S, T, A, B>(rep, move |fa| Identity(k(fa)))
        .run(fs)
        .into_inner()
}

/// [`zip_f_with_of`] for exactly two sources, held in a list.
pub fn zip_pair_with_of<S: Value, T: Value, A: Value, B: Value>(
    rep: &MonocleRep<S, T, A, B>,
    k: impl Fn(A, A) -> B + Send + Sync + 'static,
    sources: Vec<S>,
) -> Result<T, MonocleError> {
    if sources.len() != 2 {
        return Err(MonocleError::ShapeMismatch {
            expected: 2,
            found: sources.len(),
        });
    }
    Ok(zip_f_with_of::<ListF, S, T, A, B>(
        rep,
        move |pair: Vec<A>| {
            let mut it = pair.into_iter();
            match (it.next(), it.next()) {
                (Some(x), Some(y)) => k(x, y),
                _ => unreachable!("unzipping two sources keeps two values per focus"),
            }
        },
        sources,
    ))
}

/// Composes monocles: the outer one's foci are themselves split by the inner
/// one.
pub fn compose_rep<S: Value, T: Value, A: Value, B: Value, X: Value, Y: Value>(
    outer: &MonocleRep<S, T, A, B>,
    inner: &MonocleRep<A, B, X, Y>,
) -> MonocleRep<S, T, X, Y> {
    let (outer_arity, inner_arity) = (outer.arity, inner.arity);
    let (outer_split, inner_split) = (outer.split.clone(), inner.split.clone());
    let (outer_merge, inner_merge) = (outer.merge.clone(), inner.merge.clone());
    MonocleRep::new(
        outer_arity * inner_arity,
        Transform::new(move |s| {
            outer_split
                .apply(s)
                .into_iter()
                .flat_map(|a| inner_split.apply(a))
                .collect()
        }),
        Transform::new(move |ys: Vec<Y>| {
            let bs = if inner_arity == 0 {
                (0..outer_arity).map(|_| inner_merge.apply(Vec::new())).collect()
            } else {
                ys.chunks(inner_arity)
                    .map(|chunk| inner_merge.apply(chunk.to_vec()))
                    .collect()
            };
            outer_merge.apply(bs)
        }),
    )
}

/// `p ⋆ p` on pairs, written directly against the interface.
pub fn each2_optic<P: MonoPro, A: Value, B: Value>(p: P::P<A, B>) -> P::P<(A, A), (B, B)> {
    P::star(p.clone(), p)
}

/// `(p ⋆ p) ⋆ p` flattened onto triples.
pub fn each3_optic<P: MonoPro, A: Value, B: Value>(p: P::P<A, B>) -> P::P<(A, A, A), (B, B, B)> {
    P::dimap(
        Transform::new(flat3_inv::<A, A, A>),
        Transform::new(flat3::<B, B, B>),
        P::star(P::star(p.clone(), p.clone()), p),
    )
}

/// `((p ⋆ p) ⋆ p) ⋆ p` flattened onto quadruples.
pub fn each4_optic<P: MonoPro, A: Value, B: Value>(p: P::P<A, B>) -> P::P<(A, A, A, A), (B, B, B, B)> {
    P::dimap(
        Transform::new(flat4_inv::<A, A, A, A>),
        Transform::new(flat4::<B, B, B, B>),
        P::star(P::star(P::star(p.clone(), p.clone()), p.clone()), p),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{Logged, LoggerF, OptionF};
    use crate::monoid::{IntSum, ListConcat, StringConcat};
    use crate::profunctor::Hom;

    fn t<A: 'static, B: 'static>(f: impl Fn(A) -> B + Send + Sync + 'static) -> Transform<A, B> {
        Transform::new(f)
    }

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn each_examples() {
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&each1(), t(|x: i64| x + 1)).apply(5),
            6
        );
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&each2(), t(|x: i64| x + 1)).apply((3, 4)),
            (4, 5)
        );
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&each3(), t(|x: String| x.to_uppercase())).apply((s("a"), s("b"), s("c"))),
            (s("A"), s("B"), s("C"))
        );
        assert_eq!(
            each::<(u8, u8, u8, u8, u8, u8, u8, u8), (u8, u8, u8, u8, u8, u8, u8, u8)>().arity(),
            8
        );
        assert_eq!(each_vec::<i64, i64>(9).unwrap_err(), MonocleError::ArityOutOfRange(9));
        assert_eq!(each_vec::<i64, i64>(8).unwrap().arity(), 8);
    }

    #[test]
    fn apply_examples() {
        let nothing = apply_monocle::<Hom, _, _, i64, i64>(&each0(), t(|x: i64| x + 1));
        assert_eq!(nothing.apply(()), ());
        let len = ForgetPro::<IntSum, String, ()>::new(|x: String| x.len() as i64);
        assert_eq!(
            apply_monocle::<Forget<IntSum>, _, _, _, _>(&each2::<String, ()>(), len).run((s("ab"), s("c"))),
            3
        );
    }

    #[test]
    #[should_panic(expected = "wrong number of foci")]
    fn malformed_split_panics() {
        let rep = each_vec::<i64, i64>(2).unwrap();
        let _ = apply_monocle::<Hom, _, _, _, _>(&rep, t(|x: i64| x)).apply(vec![1, 2, 3]);
    }

    #[test]
    fn checked_split_reports_shape() {
        let rep = each_vec::<i64, i64>(2).unwrap();
        assert_eq!(rep.checked_split(vec![1, 2]), Ok(vec![1, 2]));
        assert_eq!(
            rep.checked_split(vec![1]),
            Err(MonocleError::ShapeMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn fold_examples() {
        assert_eq!(
            fold_of::<StringConcat, _, _, ()>(&each3(), (s("AA"), s("BB"), s("CC"))),
            "AABBCC"
        );
        assert_eq!(fold_of::<IntSum, _, _, ()>(&each0(), ()), 0);
        assert_eq!(fold_of::<IntSum, _, _, ()>(&each2(), (3, 4)), 7);

        let len = t(|x: String| x.len() as i64);
        assert_eq!(
            fold_map_of::<IntSum, _, _, _, ()>(&each3(), len, (s("a"), s("bb"), s("ccc"))),
            6
        );
        assert_eq!(
            fold_map_of::<IntSum, _, _, _, ()>(&each3(), t(|_: String| 0), (s("a"), s("bb"), s("c"))),
            0
        );
        assert_eq!(
            fold_map_of::<ListConcat<i64>, _, _, _, ()>(&each2(), t(|x: i64| vec![x]), (1, 2)),
            vec![1, 2]
        );
    }

    #[test]
    fn convolute_examples() {
        let bump =
            convolute_vl::<IdentityF, IdentityF, _, _, _, _>(&each2(), |Identity(x): Identity<i64>| Identity(x + 1));
        assert_eq!(bump.run(Identity((3, 4))), Identity((4, 5)));

        let logged = convolute_vl::<IdentityF, LoggerF, _, _, _, _>(&each2(), |Identity(x): Identity<String>| {
            Logged::new(vec![x.clone()], x.len())
        });
        assert_eq!(
            logged.run(Identity((s("x"), s("y")))),
            Logged::new(vec![s("x"), s("y")], (1, 1))
        );

        let parse = convolute_vl::<IdentityF, OptionF, _, _, _, _>(&each2(), |Identity(x): Identity<String>| {
            x.parse::<i64>().ok()
        });
        assert_eq!(parse.run(Identity((s("3"), s("oops")))), None);
    }

    #[test]
    fn traverse_examples() {
        let triple = (1_i64, 2, 3);
        assert_eq!(traverse_of::<OptionF, _, _, _, _>(&each3(), Some, triple), Some(triple));
        assert_eq!(
            traverse_of::<OptionF, _, _, _, _>(&each2(), |x: String| x.parse::<i64>().ok(), (s("3"), s("4"))),
            Some((3, 4))
        );
        let logs =
            traverse_of::<LoggerF, _, _, _, _>(&each2(), |x: i64| Logged::new(vec![format!("visit {x}")], x), (8, 9));
        assert_eq!(logs.log, vec![s("visit 8"), s("visit 9")]);
    }

    #[test]
    fn zip_examples() {
        let unwrap = zip_f_with_of::<IdentityF, _, _, _, _>(&each2(), |Identity(x): Identity<i64>| x, Identity((5, 6)));
        assert_eq!(unwrap, (5, 6));

        let sums = zip_pair_with_of(&each2(), |x: i64, y: i64| x + y, vec![(1, 2), (10, 20)]);
        assert_eq!(sums, Ok((11, 22)));

        let maxes = zip_pair_with_of(
            &each2(),
            |x: String, y: String| x.max(y),
            vec![(s("a"), s("b")), (s("b"), s("a"))],
        );
        assert_eq!(maxes, Ok((s("b"), s("b"))));

        let guard = zip_pair_with_of(&each2(), |x: i64, y: i64| x + y, vec![(1, 2)]);
        assert_eq!(guard, Err(MonocleError::ShapeMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn compose_examples() {
        let nested = compose_rep(&each2::<(i64, i64), (i64, i64)>(), &each2::<i64, i64>());
        assert_eq!(nested.arity(), 4);
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&nested, t(|x: i64| x + 1)).apply(((1, 2), (3, 4))),
            ((2, 3), (4, 5))
        );
        let left_unit = compose_rep(&each1::<(i64, i64), (i64, i64)>(), &each2::<i64, i64>());
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&left_unit, t(|x: i64| x * 2)).apply((3, 4)),
            (6, 8)
        );

        let empty_inner = compose_rep(&each2::<(), ()>(), &each0::<i64, i64>());
        assert_eq!(empty_inner.arity(), 0);
        assert_eq!(
            apply_monocle::<Hom, _, _, _, _>(&empty_inner, t(|x: i64| x)).apply(((), ())),
            ((), ())
        );
    }

    #[test]
    fn direct_optics_match_representations() {
        let inc = t(|x: i64| x + 1);
        for x in 0..4 {
            let pair = (x, x + 10);
            assert_eq!(
                each2_optic::<Hom, _, _>(inc.clone()).apply(pair),
                apply_monocle::<Hom, _, _, _, _>(&each2(), inc.clone()).apply(pair)
            );
            let triple = (x, 2 * x, 3 * x);
            assert_eq!(
                each3_optic::<Hom, _, _>(inc.clone()).apply(triple),
                apply_monocle::<Hom, _, _, _, _>(&each3(), inc.clone()).apply(triple)
            );
            let quad = (x, 1, 2, 3);
            assert_eq!(
                each4_optic::<Hom, _, _>(inc.clone()).apply(quad),
                apply_monocle::<Hom, _, _, _, _>(&each4(), inc.clone()).apply(quad)
            );
        }
    }
}
