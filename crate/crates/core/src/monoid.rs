//! Monoids used as carriers for folds.

use std::marker::PhantomData;

use crate::value::Value;

/// A monoid on `Carrier`: `combine` is associative and `empty` is its unit.
pub trait Monoid: 'static {
    type Carrier: Value;

    fn empty() -> Self::Carrier;

    fn combine(a: Self::Carrier, b: Self::Carrier) -> Self::Carrier;

    /// Left-to-right fold; `empty` for no elements.
    fn concat(items: impl IntoIterator<Item = Self::Carrier>) -> Self::Carrier {
        items.into_iter().fold(Self::empty(), Self::combine)
    }
}

/// Strings under concatenation.
#[derive(Clone, Copy, Debug)]
pub struct StringConcat;

/// Lists of `T` under concatenation.
pub struct ListConcat<T>(PhantomData<fn() -> T>);

/// Integers under addition.
#[derive(Clone, Copy, Debug)]
pub struct IntSum;

impl Monoid for StringConcat {
    type Carrier = String;

    fn empty() -> String {
        String::new()
    }

    fn combine(mut a: String, b: String) -> String {
        a.push_str(&b);
        a
    }
}

impl<T: Value> Monoid for ListConcat<T> {
    type Carrier = Vec<T>;

    fn empty() -> Vec<T> {
        Vec::new()
    }

    fn combine(mut a: Vec<T>, b: Vec<T>) -> Vec<T> {
        a.extend(b);
        a
    }
}

impl Monoid for IntSum {
    type Carrier = i64;

    fn empty() -> i64 {
        0
    }

    fn combine(a: i64, b: i64) -> i64 {
        a + b
    }
}
