//! Herzog–Kühl rays and the syzygies of the indecomposable MCM modules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{pow2, Scalar};

use super::table::{BettiTable, TailMode};

/// The eight indecomposable maximal Cohen–Macaulay B-modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum McmName {
    /// The free module B.
    Free,
    /// The canonical module.
    Omega,
    M1,
    M2,
    M3,
    M12,
    M13,
    M23,
}

impl McmName {
    pub const ALL: [McmName; 8] = [
        McmName::Free,
        McmName::Omega,
        McmName::M1,
        McmName::M2,
        McmName::M3,
        McmName::M12,
        McmName::M13,
        McmName::M23,
    ];

    /// The Herzog–Kühl parameter: 0, 3/2, 1, 2 for B, omega, M_i, M_{i,j}.
    pub fn hk_parameter<S: Scalar>(&self) -> S {
        match self {
            McmName::Free => S::zero(),
            McmName::Omega => S::from_frac(3, 2),
            McmName::M1 | McmName::M2 | McmName::M3 => S::one(),
            McmName::M12 | McmName::M13 | McmName::M23 => S::from_int(2),
        }
    }

    /// Betti numbers `beta_0, beta_1, beta_2` of the module (all in linear
    /// degrees `0, 1, 2`); higher ones double.
    pub fn betti_head(&self) -> [i64; 3] {
        match self {
            McmName::Free => [1, 0, 0],
            McmName::Omega => [2, 3, 6],
            McmName::M1 | McmName::M2 | McmName::M3 => [1, 1, 2],
            McmName::M12 | McmName::M13 | McmName::M23 => [1, 2, 4],
        }
    }

    /// The Betti table of the module generated in degree 0, canonical mode.
    pub fn betti_table<S: Scalar>(&self) -> BettiTable<S> {
        BettiTable::from_ints(
            TailMode::Canonical,
            self.betti_head()
                .iter()
                .enumerate()
                .map(|(i, &b)| (i, i as i64, b)),
        )
        .expect("rows 0..=2")
    }

    /// Numerator `p(t)` of the Hilbert series `p(t) / (1 - t)`.
    pub fn hilbert_numerator(&self) -> &'static [i64] {
        match self {
            McmName::Free => &[1, 2],
            McmName::Omega => &[2, 1],
            McmName::M1 | McmName::M2 | McmName::M3 => &[1, 1],
            McmName::M12 | McmName::M13 | McmName::M23 => &[1],
        }
    }
}

impl fmt::Display for McmName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            McmName::Free => "B",
            McmName::Omega => "omega",
            McmName::M1 => "M1",
            McmName::M2 => "M2",
            McmName::M3 => "M3",
            McmName::M12 => "M12",
            McmName::M13 => "M13",
            McmName::M23 => "M23",
        })
    }
}

impl FromStr for McmName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "B" => McmName::Free,
            "omega" | "omega_B" => McmName::Omega,
            "M1" => McmName::M1,
            "M2" => McmName::M2,
            "M3" => McmName::M3,
            "M12" => McmName::M12,
            "M13" => McmName::M13,
            "M23" => McmName::M23,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

/// The syzygy module of an indecomposable, as summands with their grading
/// shifts. A shift of `-1` means the summand is generated in degree 1.
pub fn syzygy_of_indecomposable(name: McmName) -> Vec<(McmName, i64)> {
    use McmName::*;
    let pairs: &[McmName] = match name {
        Free => &[],
        Omega => &[M12, M23, M13],
        M1 => &[M23],
        M2 => &[M13],
        M3 => &[M12],
        M12 => &[M23, M13],
        M13 => &[M23, M12],
        M23 => &[M13, M12],
    };
    pairs.iter().map(|&n| (n, -1)).collect()
}

/// First lattice point on a Herzog–Kühl ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkRay {
    pub c: BigRational,
    pub mcm_name: McmName,
    /// `(beta_0, beta_1, beta_2)`; `beta_i = 2 beta_{i-1}` for `i > 2`.
    pub head: [u64; 3],
}

impl HkRay {
    /// `beta_i`, following the doubling tail.
    pub fn entry(&self, i: usize) -> u64 {
        if i < 3 {
            self.head[i]
        } else {
            self.head[2] << (i - 2)
        }
    }

    pub fn entries(&self, n: usize) -> Vec<u64> {
        (0..n).map(|i| self.entry(i)).collect()
    }

    /// The ray placed at generator degree `d0` and syzygy degree `d1`:
    /// `(0,d0)`, `(1,d1)`, `(2,d1+1)`, canonical mode.
    pub fn to_table<S: Scalar>(&self, d0: i64, d1: i64) -> BettiTable<S> {
        let [b0, b1, b2] = self.head.map(|b| S::from_int(b as i64));
        BettiTable::from_entries(
            TailMode::Canonical,
            [(0, d0, b0), (1, d1, b1), (2, d1 + 1, b2)],
        )
        .expect("rows 0..=2")
    }

    /// The Herzog–Kühl relation `3 (beta_0 - beta_1) + c beta_1`; zero on
    /// every ray.
    pub fn hk_defect(&self) -> BigRational {
        let b0 = BigRational::from_integer(BigInt::from(self.head[0]));
        let b1 = BigRational::from_integer(BigInt::from(self.head[1]));
        BigRational::from_integer(3.into()) * (b0 - b1.clone()) + self.c.clone() * b1
    }
}

/// The ray for `c` in `{0, 1, 3/2, 2}`, scaled to a primitive integer vector.
///
/// For `c != 0` the ray is spanned by `(1, 3/(3-c), 3c/(3-c))`; for `c = 0`
/// the syzygy is free and the ray is `(1, 1, 0)`.
pub fn hk_ray<S: Scalar>(c: &S) -> Result<HkRay> {
    let admissible = [McmName::Free, McmName::M1, McmName::Omega, McmName::M12];
    let name = admissible
        .into_iter()
        .find(|n| n.hk_parameter::<S>() == *c)
        .ok_or_else(|| Error::InadmissibleHkParameter(c.to_string()))?;
    let c = c.to_rational();
    let raw: [BigRational; 3] = if c.is_zero() {
        [BigRational::one(), BigRational::one(), BigRational::zero()]
    } else {
        let three = BigRational::from_integer(3.into());
        let denom = three.clone() - c.clone();
        [
            BigRational::one(),
            three.clone() / denom.clone(),
            three * c.clone() / denom,
        ]
    };
    let lcm = raw.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = raw
        .iter()
        .map(|x| (x.clone() * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let head = [0, 1, 2].map(|k| {
        let v = &ints[k] / &gcd;
        debug_assert!(!v.is_negative());
        v.to_u64().expect("small entries")
    });
    Ok(HkRay {
        c,
        mcm_name: name,
        head,
    })
}

/// Checks `2 v3 = v1 + v4` and `2 v2 = 3 v1 + v4` on the first eight
/// entries of the given sequences.
pub fn hk_relations_hold<S: Scalar>(v1: &[S], v2: &[S], v3: &[S], v4: &[S]) -> bool {
    if [v1, v2, v3, v4].iter().any(|v| v.len() < 8) {
        return false;
    }
    let two = S::from_int(2);
    let three = S::from_int(3);
    (0..8).all(|i| {
        two.clone() * v3[i].clone() == v1[i].clone() + v4[i].clone()
            && two.clone() * v2[i].clone() == three.clone() * v1[i].clone() + v4[i].clone()
    })
}

/// Builds `v1..v4` from [`hk_ray`] and checks their two linear relations.
pub fn hk_relations_check() -> bool {
    let params = [
        crate::Rational::from_int(0),
        crate::Rational::from_int(1),
        crate::Rational::from_frac(3, 2),
        crate::Rational::from_int(2),
    ];
    let rays: Vec<Vec<crate::Rational>> = params
        .iter()
        .map(|c| {
            hk_ray(c)
                .expect("admissible")
                .entries(8)
                .into_iter()
                .map(|b| crate::Rational::from_int(b as i64))
                .collect()
        })
        .collect();
    hk_relations_hold(&rays[0], &rays[1], &rays[2], &rays[3])
}

/// `2^(i-2) c beta_1`, the rank of step `i >= 2` of a pure resolution with
/// `beta_1` syzygy generators of type `c`.
pub fn higher_betti<S: Scalar>(i: usize, c: &S, beta1: &S) -> S {
    assert!(i >= 2);
    pow2::<S>((i - 2) as u32) * c.clone() * beta1.clone()
}
