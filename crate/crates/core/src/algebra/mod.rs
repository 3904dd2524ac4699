//! Exact scalar and polynomial arithmetic.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::{rat, Rational};

/// Rising factorial `(c)_k = c (c+1) ... (c+k-1)`, with `(c)_0 = 1`.
pub fn shifted_factorial(c: &Rational, k: usize) -> Rational {
    (0..k).map(|j| c + Rational::from(j)).product()
}

/// q-shifted factorial `(a;q)_k = prod_{j<k} (1 - a q^j)`, with `(a;q)_0 = 1`.
pub fn q_pochhammer(a: &Rational, q: &Rational, k: usize) -> Rational {
    let mut qj = Rational::one();
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= &(Rational::one() - a * &qj);
        qj *= q;
    }
    acc
}
