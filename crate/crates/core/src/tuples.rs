//! Tuple plumbing: duplication, projections, re-association, swapping and
//! flattening of left-nested tuples.

pub fn diag<X: Clone>(x: X) -> (X, X) {
    (x.clone(), x)
}

pub fn fst<X, Y>(pair: (X, Y)) -> X {
    pair.0
}

pub fn snd<X, Y>(pair: (X, Y)) -> Y {
    pair.1
}

pub fn swap<X, Y>((x, y): (X, Y)) -> (Y, X) {
    (y, x)
}

/// `(x, (y, z)) -> ((x, y), z)`
pub fn assoc<X, Y, Z>((x, (y, z)): (X, (Y, Z))) -> ((X, Y), Z) {
    ((x, y), z)
}

/// `((x, y), z) -> (x, (y, z))`
pub fn assoc_inv<X, Y, Z>(((x, y), z): ((X, Y), Z)) -> (X, (Y, Z)) {
    (x, (y, z))
}

pub fn flat3<A, B, C>(((a, b), c): ((A, B), C)) -> (A, B, C) {
    (a, b, c)
}

pub fn flat3_inv<A, B, C>((a, b, c): (A, B, C)) -> ((A, B), C) {
    ((a, b), c)
}

pub fn flat4<A, B, C, D>((((a, b), c), d): (((A, B), C), D)) -> (A, B, C, D) {
    (a, b, c, d)
}

pub fn flat4_inv<A, B, C, D>((a, b, c, d): (A, B, C, D)) -> (((A, B), C), D) {
    (((a, b), c), d)
}

/// `(f × g)`: applies `f` to the first component and `g` to the second.
pub fn cross<A, B, C, D>(f: impl Fn(A) -> B, g: impl Fn(C) -> D) -> impl Fn((A, C)) -> (B, D) {
    move |(a, c)| (f(a), g(c))
}
