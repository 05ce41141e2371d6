//! Small finite domains and indexed families of mappings, used to compare
//! profunctor values extensionally.

use crate::container::{Identity, IdentityF, ListF, Logged, LoggerF, Monad, OptionF};
use crate::effect::{cat_dimap, lift_pro, EffectArrow, LiftPro};
use crate::free::{embed, FreeChain};
use crate::monoid::{IntSum, ListConcat, StringConcat};
use crate::monopro::MonoPro;
use crate::profunctor::{ForgetPro, Hom, Profunctor, SisoPro};
use crate::transform::Transform;

/// The integers `0..8`.
pub fn ints() -> Vec<i64> {
    (0..8).collect()
}

/// Every string of length at most 3 over `{a, b}`, shortest first.
pub fn words() -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|w| ["a", "b"].map(|c| format!("{w}{c}")))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// `None` and `Some` of each of [`ints`].
pub fn int_options() -> Vec<Option<i64>> {
    std::iter::once(None).chain(ints().into_iter().map(Some)).collect()
}

/// Every list of length at most 3 over `{0, 1, 2}`.
pub fn int_lists() -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|xs| {
                (0..3).map(move |x| {
                    let mut next = xs.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Number of distinct members of [`affine`].
pub const AFFINE_COUNT: usize = 35;

/// The map `x ↦ a·x + b` with `a ∈ -2..=2`, `b ∈ -3..=3`, chosen by
/// `index` modulo [`AFFINE_COUNT`].
pub fn affine(index: usize) -> Transform<i64, i64> {
    let index = index % AFFINE_COUNT;
    let a = (index / 7) as i64 - 2;
    let b = (index % 7) as i64 - 3;
    Transform::new(move |x: i64| x.wrapping_mul(a).wrapping_add(b))
}

/// Number of distinct members of [`word_map`].
pub const WORD_MAP_COUNT: usize = 6;

/// One of a few string rewrites, chosen by `index` modulo [`WORD_MAP_COUNT`].
pub fn word_map(index: usize) -> Transform<String, String> {
    match index % WORD_MAP_COUNT {
        0 => Transform::identity(),
        1 => Transform::new(|w: String| w.chars().rev().collect()),
        2 => Transform::new(|w: String| w + "a"),
        3 => Transform::new(|w: String| format!("b{w}")),
        4 => Transform::new(|w: String| w.chars().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()),
        _ => Transform::new(|w: String| w.chars().skip(1).collect()),
    }
}

pub fn forget_sum(index: usize) -> ForgetPro<IntSum, i64, i64> {
    ForgetPro::from_transform(affine(index))
}

pub fn forget_string(index: usize) -> ForgetPro<StringConcat, i64, i64> {
    let f = affine(index);
    ForgetPro::new(move |x| format!("<{}>", f.apply(x)))
}

pub fn forget_list(index: usize) -> ForgetPro<ListConcat<i64>, i64, i64> {
    let f = affine(index);
    ForgetPro::new(move |x| vec![f.apply(x); x.rem_euclid(3) as usize])
}

pub fn kleisli_identity(index: usize) -> EffectArrow<IdentityF, i64, i64> {
    let f = affine(index);
    EffectArrow::new(move |x| Identity(f.apply(x)))
}

/// Fails when the affine image is a multiple of 3.
pub fn kleisli_option(index: usize) -> EffectArrow<OptionF, i64, i64> {
    let f = affine(index);
    EffectArrow::new(move |x| Some(f.apply(x)).filter(|y| y.rem_euclid(3) != 0))
}

/// Zero, one or two results depending on the affine image.
pub fn kleisli_list(index: usize) -> EffectArrow<ListF, i64, i64> {
    let f = affine(index);
    EffectArrow::new(move |x| {
        let y = f.apply(x);
        match y.rem_euclid(3) {
            0 => vec![],
            1 => vec![y],
            _ => vec![y, -y],
        }
    })
}

/// Logs its index and argument.
pub fn kleisli_logger(index: usize) -> EffectArrow<LoggerF, i64, i64> {
    let f = affine(index);
    EffectArrow::new(move |x| Logged::new(vec![format!("f{index}({x})")], f.apply(x)))
}

pub fn siso_identity_option(index: usize) -> SisoPro<IdentityF, OptionF, i64, i64> {
    let k = kleisli_option(index);
    SisoPro::new(move |Identity(x)| k.run(x))
}

pub fn siso_option_list(index: usize) -> SisoPro<OptionF, ListF, i64, i64> {
    let k = kleisli_list(index);
    SisoPro::new(move |x: Option<i64>| match x {
        Some(x) => k.run(x),
        None => vec![(index % AFFINE_COUNT) as i64],
    })
}

/// Logs the whole input list and sums its affine images.
pub fn siso_list_logger(index: usize) -> SisoPro<ListF, LoggerF, i64, i64> {
    let f = affine(index);
    SisoPro::new(move |xs: Vec<i64>| Logged::new(vec![format!("{xs:?}")], xs.iter().map(|&x| f.apply(x)).sum()))
}

/// A one-layer chain for even indices, a two-layer one otherwise.
pub fn free_hom(index: usize) -> FreeChain<Hom, i64, i64> {
    if index.is_multiple_of(2) {
        embed::<Hom, i64, i64>(affine(index))
    } else {
        <crate::free::Free<Hom>>::dimap(
            Transform::new(|x: i64| (x, x)),
            Transform::new(|(y, z): (i64, i64)| y - z),
            <crate::free::Free<Hom>>::star(embed(affine(index)), embed(affine(index / 2))),
        )
    }
}

/// Either `lift` wrapped in two effect arrows from `arrows`, or (for every
/// fourth index) a value that fails on odd results.
pub fn lift_sample<M: Monad>(index: usize, arrows: impl Fn(usize) -> EffectArrow<M, i64, i64>) -> LiftPro<M, i64, i64> {
    if index % 4 == 3 {
        let f = affine(index);
        LiftPro::new(move |m| M::map(m, |x| Some(f.apply(x)).filter(|y| y % 2 == 0)))
    } else {
        cat_dimap(arrows(index), arrows(index + 1), lift_pro())
    }
}
