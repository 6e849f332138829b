use std::fmt::{self, Debug};
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A coefficient field, passed around as a value so that the prime can be
/// chosen at run time.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn embed(&self, q: &BigRational) -> Result<Self::Elem>;
    fn characteristic(&self) -> u64;
}

/// The rationals, with elements in any exact [`Scalar`].
pub struct RationalField<S = crate::Rational>(PhantomData<S>);

impl<S> RationalField<S> {
    pub fn new() -> Self {
        RationalField(PhantomData)
    }
}

impl<S> Default for RationalField<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S> Clone for RationalField<S> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<S> Debug for RationalField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("QQ")
    }
}

impl<S: Scalar> Field for RationalField<S> {
    type Elem = S;

    fn zero(&self) -> S {
        S::zero()
    }
    fn one(&self) -> S {
        S::one()
    }
    fn is_zero(&self, a: &S) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &S, b: &S) -> S {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &S, b: &S) -> S {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &S, b: &S) -> S {
        a.clone() * b.clone()
    }
    fn neg(&self, a: &S) -> S {
        -a.clone()
    }
    fn inv(&self, a: &S) -> S {
        assert!(!a.is_zero(), "inverse of zero");
        S::one() / a.clone()
    }
    fn embed(&self, q: &BigRational) -> Result<S> {
        S::from_rational(q).ok_or_else(|| Error::NotInField(q.to_string(), 0))
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// `Z/p` for a prime `p < 2^32`, elements stored as reduced `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits")
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn embed(&self, q: &BigRational) -> Result<u64> {
        let d = self.reduce_big(q.denom());
        if d == 0 {
            return Err(Error::NotInField(q.to_string(), self.p));
        }
        Ok(self.mul(&self.reduce_big(q.numer()), &self.inv(&d)))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Run-time choice of coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u64 = 32003;
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(Self::DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("qq"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `qq` or `fp:<p>` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        let p = lower
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown field `{s}` (expected qq or fp:<p>)"),
            })?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}
