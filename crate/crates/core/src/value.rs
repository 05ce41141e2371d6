//! The value bound shared by every type parameter in the crate, and the
//! type-erased carrier used to hide existential component types.

use std::any::Any;
use std::fmt;
use std::sync::Arc;

/// Anything that can flow through a profunctor: cloneable, shareable across
/// threads and free of borrowed data.
pub trait Value: Clone + Send + Sync + 'static {}

impl<T: Clone + Send + Sync + 'static> Value for T {}

/// A value whose static type has been forgotten.
///
/// Day pairs and free chains store their hidden components at `Dyn`. Every
/// `Dyn` is produced by [`Dyn::new`] at some type `T` and only ever read back
/// at that same `T`; a mismatch is a bug in this crate, not a user error.
#[derive(Clone)]
pub(crate) struct Dyn(Arc<dyn Any + Send + Sync>);

impl Dyn {
    /// Erases `value`. Erasing a `Dyn` is the identity.
    pub(crate) fn new<T: Value>(value: T) -> Dyn {
        let mut slot = Some(value);
        if let Some(already) = (&mut slot as &mut dyn Any).downcast_mut::<Option<Dyn>>() {
            return already.take().expect("slot is filled");
        }
        Dyn(Arc::new(slot.expect("slot is filled")))
    }

    /// Recovers the value erased by [`Dyn::new`]. Taking a `Dyn` is the identity.
    pub(crate) fn take<T: Value>(self) -> T {
        let mut slot = Some(self);
        if let Some(same) = (&mut slot as &mut dyn Any).downcast_mut::<Option<T>>() {
            return same.take().expect("slot is filled");
        }
        let erased = slot.expect("slot is filled").0;
        match erased.downcast::<T>() {
            Ok(arc) => Arc::try_unwrap(arc).unwrap_or_else(|shared| (*shared).clone()),
            Err(_) => panic!(
                "hidden component read back at the wrong type `{}`",
                std::any::type_name::<T>()
            ),
        }
    }
}

impl fmt::Debug for Dyn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Dyn(..)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_at_the_erased_type() {
        assert_eq!(Dyn::new(41_i64).take::<i64>(), 41);
        assert_eq!(
            Dyn::new(("a".to_string(), 2_u8)).take::<(String, u8)>(),
            ("a".to_string(), 2)
        );
    }

    #[test]
    fn erasure_is_idempotent() {
        let twice = Dyn::new(Dyn::new(7_i32));
        assert_eq!(twice.take::<i32>(), 7);
        let d = Dyn::new(String::from("x"));
        assert_eq!(d.take::<Dyn>().take::<String>(), "x");
    }

    #[test]
    #[should_panic(expected = "wrong type")]
    fn wrong_type_panics() {
        let _ = Dyn::new(1_i64).take::<String>();
    }
}
