use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{pow2, Scalar};

/// How rows `i >= 3` of a table are represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailMode {
    /// Only rows 0..=2 are stored; row `i >= 3` is `2^(i-2)` times row 2
    /// shifted right by `i - 2`.
    Canonical,
    /// All rows are stored literally, typically a truncated resolution.
    Explicit,
}

impl fmt::Display for TailMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailMode::Canonical => f.write_str("canonical"),
            TailMode::Explicit => f.write_str("explicit"),
        }
    }
}

/// A finitely supported table `(v_{i,j})` with `i >= 0` and `j` an integer
/// degree. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable<S> {
    entries: BTreeMap<(usize, i64), S>,
    mode: TailMode,
}

impl<S: Scalar> BettiTable<S> {
    pub fn new(mode: TailMode) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            mode,
        }
    }

    pub fn canonical() -> Self {
        Self::new(TailMode::Canonical)
    }

    pub fn explicit() -> Self {
        Self::new(TailMode::Explicit)
    }

    /// Builds a table from `(i, j, value)` triples. Later triples for the
    /// same position overwrite earlier ones.
    pub fn from_entries<I>(mode: TailMode, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, S)>,
    {
        let mut t = Self::new(mode);
        for (i, j, v) in entries {
            t.set(i, j, v)?;
        }
        Ok(t)
    }

    pub fn from_ints<I>(mode: TailMode, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, i64)>,
    {
        Self::from_entries(
            mode,
            entries.into_iter().map(|(i, j, v)| (i, j, S::from_int(v))),
        )
    }

    pub fn mode(&self) -> TailMode {
        self.mode
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of stored (nonzero) entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, i: usize, j: i64, value: S) -> Result<()> {
        if self.mode == TailMode::Canonical && i >= 3 {
            return Err(Error::CanonicalRow(i));
        }
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
        Ok(())
    }

    /// The value at `(i, j)`, following the doubling rule for `i >= 3` in
    /// canonical mode.
    pub fn get(&self, i: usize, j: i64) -> S {
        if self.mode == TailMode::Canonical && i >= 3 {
            let shift = (i - 2) as i64;
            return self.stored(2, j - shift) * pow2::<S>((i - 2) as u32);
        }
        self.stored(i, j)
    }

    /// The literally stored value at `(i, j)` (zero if absent).
    pub fn stored(&self, i: usize, j: i64) -> S {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    /// Stored entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &S)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), v)| (j, v))
    }

    pub fn row_min_degree(&self, i: usize) -> Option<i64> {
        self.row(i).next().map(|(j, _)| j)
    }

    /// Largest stored homological index.
    pub fn max_row(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Smallest and largest degree among stored entries.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.entries.keys().map(|&(_, j)| j);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), j| (lo.min(j), hi.max(j))))
    }

    /// Sum of the entries of row `i` (stored rows only).
    pub fn row_total(&self, i: usize) -> S {
        self.row(i).fold(S::zero(), |acc, (_, v)| acc + v.clone())
    }

    /// Drops rows `i >= 3` and switches to canonical mode.
    pub fn to_canonical(&self) -> Self {
        BettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i < 3)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            mode: TailMode::Canonical,
        }
    }

    /// Writes out rows `0..=max_row` literally.
    pub fn to_explicit(&self, max_row: usize) -> Self {
        let mut out = Self::explicit();
        for (i, j, v) in self.iter() {
            if i <= max_row {
                out.entries.insert((i, j), v.clone());
            }
        }
        if self.mode == TailMode::Canonical {
            let row2: Vec<(i64, S)> = self.row(2).map(|(j, v)| (j, v.clone())).collect();
            for i in 3..=max_row {
                let shift = (i - 2) as i64;
                let factor = pow2::<S>((i - 2) as u32);
                for (j, v) in &row2 {
                    out.entries
                        .insert((i, j + shift), v.clone() * factor.clone());
                }
            }
        }
        out
    }

    pub fn scale(&self, a: &S) -> Self {
        let mut out = Self::new(self.mode);
        if a.is_zero() {
            return out;
        }
        for (k, v) in &self.entries {
            out.entries.insert(*k, v.clone() * a.clone());
        }
        out
    }

    /// `self + a * other`, both in the same tail mode.
    pub fn add_scaled(&self, a: &S, other: &Self) -> Result<Self> {
        if self.mode != other.mode {
            return Err(Error::MixedTailModes);
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            let sum = out.stored(i, j) + a.clone() * v.clone();
            out.set(i, j, sum)?;
        }
        Ok(out)
    }
}

/// `a * u + b * v` with zero entries pruned.
pub fn table_arith<S: Scalar>(
    a: &S,
    u: &BettiTable<S>,
    b: &S,
    v: &BettiTable<S>,
) -> Result<BettiTable<S>> {
    if u.mode() != v.mode() {
        return Err(Error::MixedTailModes);
    }
    u.scale(a).add_scaled(b, v)
}

impl<S: Scalar> fmt::Display for BettiTable<S> {
    /// Human-readable grid with rows `i` and columns `j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((lo, hi)) = self.degree_range() else {
            return write!(f, "(empty {} table)", self.mode);
        };
        let rows = self.max_row().unwrap_or(0);
        let cells: Vec<Vec<String>> = (0..=rows)
            .map(|i| {
                (lo..=hi)
                    .map(|j| {
                        let v = self.stored(i, j);
                        if v.is_zero() {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain((lo..=hi).map(|j| j.to_string().len()))
            .max()
            .unwrap_or(1);
        write!(f, "{:>4}", "")?;
        for j in lo..=hi {
            write!(f, " {:>width$}", j)?;
        }
        for (i, row) in cells.iter().enumerate() {
            write!(f, "\n{:>3}:", i)?;
            for c in row {
                write!(f, " {:>width$}", c)?;
            }
        }
        Ok(())
    }
}
