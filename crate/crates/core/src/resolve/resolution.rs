//! Minimal graded free resolutions by degreewise linear algebra.
//!
//! Every free module is handled one graded piece at a time. A piece of
//! `F = ⊕ B(-g_k)` in degree `e` has basis `(k, m)` with `m` running over
//! the monomial basis of `B_{e-g_k}`, so it never has more than
//! `3 * rank F` coordinates.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::betti::BettiTable;
use crate::scalar::Scalar;
use crate::Rational;

use super::field::Field;
use super::linalg::{kernel, Subspace};
use super::module::GradedModule;
use super::poly::{Mono, Var};

/// Coordinates of one graded piece of a free module.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    degree: i64,
    /// Per generator, the offset of its block (absent when `e < g_k`).
    offsets: Vec<Option<usize>>,
    dim: usize,
}

impl Piece {
    pub fn new(gen_degrees: &[i64], degree: i64) -> Self {
        let mut dim = 0;
        let offsets = gen_degrees
            .iter()
            .map(|&g| {
                let s = degree - g;
                (s >= 0).then(|| {
                    let off = dim;
                    dim += if s == 0 { 1 } else { 3 };
                    off
                })
            })
            .collect();
        Piece {
            degree,
            offsets,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, gen: usize, m: Mono) -> Option<usize> {
        let slot = match m {
            Mono::One | Mono::Pow(Var::X, _) => 0,
            Mono::Pow(Var::Y, _) => 1,
            Mono::Pow(Var::Z, _) => 2,
        };
        self.offsets[gen].map(|o| o + slot)
    }

    /// `(generator, monomial)` for every coordinate, in order.
    fn coordinates(&self, gen_degrees: &[i64]) -> Vec<(usize, Mono)> {
        let mut out = Vec::with_capacity(self.dim);
        for (k, off) in self.offsets.iter().enumerate() {
            if off.is_some() {
                let s = (self.degree - gen_degrees[k]) as u32;
                out.extend(Mono::basis(s).into_iter().map(|m| (k, m)));
            }
        }
        out
    }
}

/// `m * u` for `u` in `from`, written in the coordinates of `to`.
fn mul_mono<F: Field>(
    field: &F,
    gen_degrees: &[i64],
    from: &Piece,
    u: &[F::Elem],
    m: Mono,
    to: &Piece,
) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); to.dim()];
    for ((k, n), c) in from.coordinates(gen_degrees).into_iter().zip(u) {
        if field.is_zero(c) {
            continue;
        }
        if let Some(p) = n.mul(&m) {
            let idx = to.index(k, p).expect("product lands in target piece");
            out[idx] = c.clone();
        }
    }
    out
}

fn degree_one() -> [Mono; 3] {
    [
        Mono::Pow(Var::X, 1),
        Mono::Pow(Var::Y, 1),
        Mono::Pow(Var::Z, 1),
    ]
}

/// The relation submodule `R` of the presentation, piece by piece.
pub(crate) fn relation_space<F: Field>(m: &GradedModule<F>, e: i64) -> (Piece, Subspace<F>) {
    let field = m.field();
    let piece = Piece::new(m.gen_degrees(), e);
    let mut space = Subspace::new(field.clone(), piece.dim());
    for rel in m.relations() {
        let s = e - rel.degree;
        if s < 0 {
            continue;
        }
        for mult in Mono::basis(s as u32) {
            let mut v = vec![field.zero(); piece.dim()];
            for (k, terms) in rel.entries.iter().enumerate() {
                for (mono, c) in terms {
                    if let Some(p) = mono.mul(&mult) {
                        let idx = piece.index(k, p).expect("relation is homogeneous");
                        v[idx] = field.add(&v[idx], c);
                    }
                }
            }
            space.insert(v);
        }
    }
    (piece, space)
}

/// Betti numbers of a module together with the bounds they were computed
/// under.
///
/// Entries are reported on the staircase `j - i <= deg_bound - hom_bound`,
/// `i <= hom_bound`. Every entry there is exact, and the staircase is closed
/// under `(i, j) -> (i + 1, j + 1)` below `hom_bound`, so the doubling
/// identities can be tested on all of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionResult {
    pub betti: BettiTable<Rational>,
    pub deg_bound: i64,
    pub hom_bound: usize,
    pub tail_consistent: bool,
    /// `hom_bound >= 2` and `deg_bound >= max generator degree + hom_bound`.
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl ResolutionResult {
    /// `deg_bound - hom_bound`: the largest reported `j - i`.
    pub fn window(&self) -> i64 {
        self.deg_bound - self.hom_bound as i64
    }

    pub fn in_window(&self, i: usize, j: i64) -> bool {
        i <= self.hom_bound && j - i as i64 <= self.window()
    }

    pub fn count(&self, i: usize, j: i64) -> u64 {
        self.betti.stored(i, j).to_integer().to_u64().unwrap_or(0)
    }

    /// The reported table in another scalar type.
    pub fn table<S: Scalar>(&self) -> BettiTable<S> {
        let mut t = BettiTable::explicit();
        for (i, j, x) in self.betti.iter() {
            t.set(
                i,
                j,
                S::from_rational(x).expect("Betti numbers are small integers"),
            )
            .expect("explicit tables accept every row");
        }
        t
    }
}

/// A submodule of a free module, known degree by degree.
struct Graded<E> {
    lo: i64,
    /// `pieces[e - lo]` is a basis of the degree-`e` part.
    pieces: Vec<Vec<Vec<E>>>,
}

impl<E> Graded<E> {
    fn at(&self, e: i64) -> &[Vec<E>] {
        if e < self.lo {
            return &[];
        }
        self.pieces
            .get((e - self.lo) as usize)
            .map_or(&[], Vec::as_slice)
    }
}

/// Minimal free resolution of `m` through homological degree `hom_bound`,
/// using graded pieces up to `deg_bound`.
pub fn min_free_resolution<F: Field>(
    m: &GradedModule<F>,
    deg_bound: i64,
    hom_bound: usize,
) -> ResolutionResult {
    let field = m.field();
    let mut warnings = Vec::new();
    if hom_bound < 2 {
        warnings.push(format!(
            "hom_bound {hom_bound} < 2: row 2 and the linear tail are not certified"
        ));
    }
    if let Some(top) = m.gen_degrees().iter().max() {
        if deg_bound < top + hom_bound as i64 {
            warnings.push(format!(
                "deg_bound {deg_bound} < max generator degree {top} + hom_bound {hom_bound}: \
                 entries with j - i > {} are withheld",
                deg_bound - hom_bound as i64
            ));
        }
    }

    let mut counts: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    if let Some(&lo) = m.gen_degrees().iter().min() {
        let degrees: Vec<i64> = (lo..=deg_bound).collect();

        // step 0: a minimal set of generators among the presentation's,
        // and the kernel of the cover F_0 -> M
        let mut chosen: Vec<usize> = Vec::new();
        let mut f0_degrees: Vec<i64> = Vec::new();
        let mut kernel_pieces = Vec::new();
        for &e in &degrees {
            let (gpiece, rel) = relation_space(m, e);
            let mut w = rel.clone();
            for (k, &g) in m.gen_degrees().iter().enumerate() {
                if g < e {
                    for mono in Mono::basis((e - g) as u32) {
                        w.insert(unit(field, gpiece.dim(), gpiece.index(k, mono).unwrap()));
                    }
                }
            }
            for (k, &g) in m.gen_degrees().iter().enumerate() {
                if g == e {
                    let v = unit(field, gpiece.dim(), gpiece.index(k, Mono::One).unwrap());
                    if w.insert(v) {
                        chosen.push(k);
                        f0_degrees.push(g);
                        *counts.entry((0, e)).or_default() += 1;
                    }
                }
            }
            if hom_bound == 0 {
                continue;
            }
            let fpiece = Piece::new(&f0_degrees, e);
            let images: Vec<Vec<F::Elem>> = fpiece
                .coordinates(&f0_degrees)
                .into_iter()
                .map(|(k, mono)| {
                    let mut v = unit(field, gpiece.dim(), gpiece.index(chosen[k], mono).unwrap());
                    rel.reduce(&mut v);
                    v
                })
                .collect();
            kernel_pieces.push(kernel(field, gpiece.dim(), &images));
        }

        let mut prev_degrees = f0_degrees;
        let mut prev_kernel = Graded {
            lo,
            pieces: kernel_pieces,
        };
        for i in 1..=hom_bound {
            let mut gen_degrees: Vec<i64> = Vec::new();
            let mut gen_images: Vec<Vec<F::Elem>> = Vec::new();
            let mut kernel_pieces = Vec::new();
            for &e in &degrees {
                let target = Piece::new(&prev_degrees, e);
                let below = Piece::new(&prev_degrees, e - 1);
                let mut span = Subspace::new(field.clone(), target.dim());
                for u in prev_kernel.at(e - 1) {
                    for v in degree_one() {
                        span.insert(mul_mono(field, &prev_degrees, &below, u, v, &target));
                    }
                }
                for u in prev_kernel.at(e) {
                    if span.insert(u.clone()) {
                        gen_degrees.push(e);
                        gen_images.push(u.clone());
                        *counts.entry((i, e)).or_default() += 1;
                    }
                }
                if i == hom_bound {
                    continue;
                }
                let source = Piece::new(&gen_degrees, e);
                let images: Vec<Vec<F::Elem>> = source
                    .coordinates(&gen_degrees)
                    .into_iter()
                    .map(|(k, mono)| {
                        let g = gen_degrees[k];
                        let from = Piece::new(&prev_degrees, g);
                        mul_mono(field, &prev_degrees, &from, &gen_images[k], mono, &target)
                    })
                    .collect();
                kernel_pieces.push(kernel(field, target.dim(), &images));
            }
            prev_degrees = gen_degrees;
            prev_kernel = Graded {
                lo,
                pieces: kernel_pieces,
            };
        }
    }

    let window = deg_bound - hom_bound as i64;
    let mut betti = BettiTable::explicit();
    for (&(i, j), &n) in &counts {
        if j - i as i64 <= window {
            betti
                .set(i, j, Rational::from_int(n as i64))
                .expect("explicit tables accept every row");
        }
    }
    let mut tail_consistent = true;
    for i in 2..hom_bound {
        let lo = betti.row_min_degree(i).into_iter();
        let hi = betti.row_min_degree(i + 1).map(|d| d - 1);
        let start = lo.chain(hi).min();
        let Some(start) = start else { continue };
        for j in start..=window + i as i64 {
            let a = betti.get(i, j);
            let b = betti.get(i + 1, j + 1);
            if Rational::from_int(2) * a != b {
                tail_consistent = false;
            }
        }
    }
    ResolutionResult {
        betti,
        deg_bound,
        hom_bound,
        tail_consistent,
        complete: warnings.is_empty(),
        warnings,
    }
}

fn unit<F: Field>(field: &F, n: usize, idx: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[idx] = field.one();
    v
}
