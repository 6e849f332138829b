use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::table::BettiTable;

/// A degree that may be infinite. `Infinite` compares above every finite
/// degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// `(d0, inf, inf, ...)`
    Free,
    /// `(d0, d1, inf, ...)`
    TwoStep,
    /// `(d0, d1, d1 + 1, d1 + 2, ...)`
    Tail,
}

/// One of the three admissible degree sequences over B.
///
/// Fields are private so that `d0 < d1` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    shape: Shape,
    d0: i64,
    d1: i64,
}

impl DegreeSequence {
    pub fn free(d0: i64) -> Self {
        DegreeSequence {
            shape: Shape::Free,
            d0,
            d1: 0,
        }
    }

    pub fn two_step(d0: i64, d1: i64) -> Result<Self> {
        Self::with_shape(Shape::TwoStep, d0, d1)
    }

    pub fn tail(d0: i64, d1: i64) -> Result<Self> {
        Self::with_shape(Shape::Tail, d0, d1)
    }

    fn with_shape(shape: Shape, d0: i64, d1: i64) -> Result<Self> {
        if d0 >= d1 {
            return Err(Error::InvalidDegreeSequence { d0, d1 });
        }
        Ok(DegreeSequence { shape, d0, d1 })
    }

    /// Builds a sequence from `d0`, an optional `d1` (`None` = infinity) and
    /// a tail flag.
    pub fn from_parts(d0: i64, d1: Option<i64>, tail: bool) -> Result<Self> {
        match (d1, tail) {
            (None, false) => Ok(Self::free(d0)),
            (None, true) => Err(Error::Parse {
                line: 0,
                msg: "a tail needs a finite d1".into(),
            }),
            (Some(d1), false) => Self::two_step(d0, d1),
            (Some(d1), true) => Self::tail(d0, d1),
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    /// `None` for the free shape.
    pub fn d1(&self) -> Option<i64> {
        match self.shape {
            Shape::Free => None,
            _ => Some(self.d1),
        }
    }

    /// The `n`-th degree `d_n`.
    pub fn degree(&self, n: usize) -> Degree {
        match (n, self.shape) {
            (0, _) => Degree::Finite(self.d0),
            (_, Shape::Free) => Degree::Infinite,
            (1, _) => Degree::Finite(self.d1),
            (_, Shape::TwoStep) => Degree::Infinite,
            (n, Shape::Tail) => Degree::Finite(self.d1 + n as i64 - 1),
        }
    }

    /// `d` shifted by `s` in every degree.
    pub fn shifted(&self, s: i64) -> Self {
        DegreeSequence {
            shape: self.shape,
            d0: self.d0 + s,
            d1: self.d1 + s,
        }
    }

    /// Canonical-mode coordinates `(i, j)` that `pi_d` occupies.
    pub fn support(&self) -> Vec<(usize, i64)> {
        match self.shape {
            Shape::Free => vec![(0, self.d0)],
            Shape::TwoStep => vec![(0, self.d0), (1, self.d1)],
            Shape::Tail => vec![(0, self.d0), (1, self.d1), (2, self.d1 + 1)],
        }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            Shape::Free => write!(f, "({},inf)", self.d0),
            Shape::TwoStep => write!(f, "({},{},inf)", self.d0, self.d1),
            Shape::Tail => write!(f, "({},{},{},...)", self.d0, self.d1, self.d1 + 1),
        }
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    /// Parses the `Display` form: `(0,inf)`, `(0,2,inf)`, `(0,1,2,...)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("malformed degree sequence `{s}`"),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let int = |p: &str| p.parse::<i64>().map_err(|_| bad());
        match parts.as_slice() {
            [d0, "inf"] => Ok(Self::free(int(d0)?)),
            [d0, d1, "inf"] => Self::two_step(int(d0)?, int(d1)?),
            [d0, d1, d2, "..."] => {
                let (d0, d1, d2) = (int(d0)?, int(d1)?, int(d2)?);
                if d2 != d1 + 1 {
                    return Err(bad());
                }
                Self::tail(d0, d1)
            }
            _ => Err(bad()),
        }
    }
}

/// `pi_d` together with its degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureDiagram<S> {
    degree_sequence: DegreeSequence,
    table: BettiTable<S>,
}

impl<S: Scalar> PureDiagram<S> {
    pub fn degree_sequence(&self) -> DegreeSequence {
        self.degree_sequence
    }

    pub fn table(&self) -> &BettiTable<S> {
        &self.table
    }

    pub fn into_table(self) -> BettiTable<S> {
        self.table
    }
}

/// The normalized pure table `pi_d`, in canonical mode.
///
/// Free: a single 1 at `(0, d0)`. TwoStep: 1 at `(0, d0)` and `(1, d1)`.
/// Tail: 1, 3, 6 at `(0, d0)`, `(1, d1)`, `(2, d1 + 1)`; the implied rows
/// continue as `3 * 2^(i-1)` at degree `d1 + i - 1`.
pub fn make_pure_diagram<S: Scalar>(d: DegreeSequence) -> PureDiagram<S> {
    let values: &[i64] = match d.shape() {
        Shape::Free => &[1],
        Shape::TwoStep => &[1, 1],
        Shape::Tail => &[1, 3, 6],
    };
    let table = BettiTable::from_entries(
        super::TailMode::Canonical,
        d.support()
            .into_iter()
            .zip(values)
            .map(|((i, j), &v)| (i, j, S::from_int(v))),
    )
    .expect("pure diagrams live in rows 0..=2");
    PureDiagram {
        degree_sequence: d,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::TailMode;
    use crate::Rational;

    fn table(entries: &[(usize, i64, i64)]) -> BettiTable<Rational> {
        BettiTable::from_ints(TailMode::Canonical, entries.iter().copied()).unwrap()
    }

    #[test]
    fn pure_diagram_free() {
        let p = make_pure_diagram::<Rational>(DegreeSequence::free(0));
        assert_eq!(p.table(), &table(&[(0, 0, 1)]));
    }

    #[test]
    fn pure_diagram_two_step() {
        let p = make_pure_diagram::<Rational>(DegreeSequence::two_step(0, 2).unwrap());
        assert_eq!(p.table(), &table(&[(0, 0, 1), (1, 2, 1)]));
    }

    #[test]
    fn pure_diagram_tail_matches_doubling_formula() {
        let p = make_pure_diagram::<Rational>(DegreeSequence::tail(0, 1).unwrap());
        assert_eq!(p.table(), &table(&[(0, 0, 1), (1, 1, 3), (2, 2, 6)]));
        // rows i >= 1 carry 3 * 2^(i-1) at degree d_i = i
        for i in 1..8usize {
            let expected = Rational::from_int(3 * (1 << (i - 1)));
            assert_eq!(p.table().get(i, i as i64), expected, "row {i}");
        }
        assert_eq!(p.table().get(3, 3), Rational::from_int(12));
        assert_eq!(p.table().get(4, 4), Rational::from_int(24));
    }

    #[test]
    fn d0_must_be_below_d1() {
        assert_eq!(
            DegreeSequence::two_step(2, 2),
            Err(Error::InvalidDegreeSequence { d0: 2, d1: 2 })
        );
        assert!(DegreeSequence::tail(3, 1).is_err());
        assert!(DegreeSequence::from_parts(0, None, true).is_err());
    }

    #[test]
    fn display_parses_back() {
        for d in [
            DegreeSequence::free(-3),
            DegreeSequence::two_step(0, 2).unwrap(),
            DegreeSequence::tail(-1, 4).unwrap(),
        ] {
            assert_eq!(d.to_string().parse::<DegreeSequence>().unwrap(), d);
        }
        assert!("(0,1,3,...)".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn degrees_of_tail() {
        let d = DegreeSequence::tail(0, 3).unwrap();
        assert_eq!(d.degree(0), Degree::Finite(0));
        assert_eq!(d.degree(1), Degree::Finite(3));
        assert_eq!(d.degree(5), Degree::Finite(7));
        assert_eq!(DegreeSequence::free(1).degree(1), Degree::Infinite);
    }
}
