//! Exact ordered scalars.
//!
//! Everything on the cone side (tables, functionals, decompositions, the
//! window double description) is generic over [`Scalar`], which is
//! implemented for every `Ratio<T>` with a signed integer `T`: `Ratio<i64>`,
//! `Ratio<i128>` and `BigRational`. There is no floating point anywhere.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

/// An exact rational scalar.
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// `n / d`, reduced. Panics if `d == 0`.
    fn from_frac(n: i64, d: i64) -> Self;

    fn is_integral(&self) -> bool;

    fn to_rational(&self) -> BigRational;

    /// `None` if the value does not fit the underlying integer type.
    fn from_rational(q: &BigRational) -> Option<Self>;

    /// Rescale `v` by a positive factor so that it becomes a primitive
    /// integer vector (integer entries with gcd 1). Zero vectors are left
    /// alone.
    fn make_primitive(v: &mut [Self]);
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Debug + Display + Hash + Integer + Signed + Send + Sync + 'static,
    T: From<i64> + TryFrom<BigInt>,
    BigInt: From<T>,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from(n))
    }

    fn from_frac(n: i64, d: i64) -> Self {
        Ratio::new(T::from(n), T::from(d))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_rational(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.numer().clone()),
            BigInt::from(self.denom().clone()),
        )
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        let n = T::try_from(q.numer().clone()).ok()?;
        let d = T::try_from(q.denom().clone()).ok()?;
        Some(Ratio::new(n, d))
    }

    fn make_primitive(v: &mut [Self]) {
        let mut lcm = T::one();
        let mut gcd = T::zero();
        for x in v.iter().filter(|x| !x.is_zero()) {
            lcm = lcm.lcm(x.denom());
            gcd = gcd.gcd(x.numer());
        }
        if gcd.is_zero() {
            return;
        }
        // entries are n_k/d_k; multiplying by lcm(d)/gcd(n) is exact and positive
        let factor = Ratio::new(lcm, gcd);
        for x in v.iter_mut() {
            *x = x.clone() * factor.clone();
        }
    }
}

/// `2^n` as a scalar.
pub(crate) fn pow2<S: Scalar>(n: u32) -> S {
    let mut acc = S::one();
    let two = S::from_int(2);
    for _ in 0..n {
        acc = acc * two.clone();
    }
    acc
}
