//! Finite-window cross-check of the generator and halfspace descriptions.
//!
//! Restrict canonical tables to the coordinates `(i, j)`, `i <= 2`,
//! `j in [jmin, jmax]`. The generators are the pure diagrams supported in
//! the window; the halfspaces are the functionals restricted to it, with
//! outside entries read as 0. The extreme rays of the halfspace cone come
//! from an exact double description.
//!
//! Why the window is a faithful test: a table supported in the window that
//! lies in the halfspace cone decomposes with nonnegative coefficients, so
//! no term of its decomposition can reach outside the window (there is
//! nothing to cancel against). Equality on every window is therefore
//! equality of the cones.
//!
//! Since every generator satisfies every facet, the two cones agree iff
//! every extreme ray of the halfspace cone is a positive multiple of a
//! generator: such a ray is also extreme in the generator cone whenever it
//! lies there. This replaces a feasibility LP per ray.

mod dd;
mod rng;

use std::fmt::{self, Write as _};

use crate::betti::{
    eval_functional, make_pure_diagram, BettiTable, DegreeSequence, FunctionalId, PureDiagram,
    Shape, TailMode,
};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use rng::Lcg;

/// The degree window `[jmin, jmax]`; coordinates are `(i, j)` with
/// `i in {0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    jmin: i64,
    jmax: i64,
}

impl Window {
    pub const DEFAULT_WIDTH_CAP: usize = 6;

    pub fn new(jmin: i64, jmax: i64) -> Result<Self> {
        if jmin > jmax {
            return Err(Error::EmptyWindow { jmin, jmax });
        }
        Ok(Window { jmin, jmax })
    }

    pub fn jmin(&self) -> i64 {
        self.jmin
    }

    pub fn jmax(&self) -> i64 {
        self.jmax
    }

    pub fn width(&self) -> usize {
        (self.jmax - self.jmin + 1) as usize
    }

    pub fn dim(&self) -> usize {
        3 * self.width()
    }

    pub fn contains(&self, i: usize, j: i64) -> bool {
        i <= 2 && (self.jmin..=self.jmax).contains(&j)
    }

    /// Coordinates in vector order: row-major, rows 0..=2.
    pub fn coordinates(&self) -> Vec<(usize, i64)> {
        (0..3)
            .flat_map(|i| (self.jmin..=self.jmax).map(move |j| (i, j)))
            .collect()
    }

    fn index(&self, i: usize, j: i64) -> usize {
        i * self.width() + (j - self.jmin) as usize
    }

    /// `None` if `t` is not canonical or has support outside the window.
    pub fn to_vector<S: Scalar>(&self, t: &BettiTable<S>) -> Option<Vec<S>> {
        if t.mode() != TailMode::Canonical {
            return None;
        }
        let mut v = vec![S::zero(); self.dim()];
        for (i, j, x) in t.iter() {
            if !self.contains(i, j) {
                return None;
            }
            v[self.index(i, j)] = x.clone();
        }
        Some(v)
    }

    pub fn to_table<S: Scalar>(&self, v: &[S]) -> BettiTable<S> {
        let mut t = BettiTable::canonical();
        for ((i, j), x) in self.coordinates().into_iter().zip(v) {
            t.set(i, j, x.clone()).expect("rows 0..=2");
        }
        t
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.jmin, self.jmax)
    }
}

/// Every pure diagram supported in `w`, ordered Free, TwoStep, Tail.
pub fn window_generators<S: Scalar>(w: &Window) -> Vec<PureDiagram<S>> {
    let (lo, hi) = (w.jmin, w.jmax);
    let mut out = Vec::new();
    for d0 in lo..=hi {
        out.push(DegreeSequence::free(d0));
    }
    for d0 in lo..=hi {
        for d1 in d0 + 1..=hi {
            out.push(DegreeSequence::two_step(d0, d1).expect("d0 < d1"));
        }
    }
    for d0 in lo..=hi {
        for d1 in d0 + 1..hi {
            out.push(DegreeSequence::tail(d0, d1).expect("d0 < d1"));
        }
    }
    out.into_iter().map(make_pure_diagram).collect()
}

/// A functional restricted to the window coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowFunctional<S> {
    pub id: FunctionalId,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> WindowFunctional<S> {
    fn restrict(w: &Window, id: FunctionalId) -> Self {
        let coeffs = w
            .coordinates()
            .into_iter()
            .map(|(i, j)| {
                let unit = BettiTable::from_entries(TailMode::Canonical, [(i, j, S::one())])
                    .expect("rows 0..=2");
                eval_functional(id, &unit)
            })
            .collect();
        WindowFunctional { id, coeffs }
    }

    pub fn eval(&self, v: &[S]) -> S {
        dd::dot(&self.coeffs, v)
    }
}

/// Which inequality family to leave out of the halfspace cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Alpha,
    Gamma,
}

/// `epsilon` on every coordinate, `alpha(k)` for `k in [jmin - 1, jmax]`
/// and `gamma(k)` for `k in [jmin - 2, jmax]`. Outside these ranges the
/// restricted `alpha` vanish and the restricted `gamma` repeat
/// `gamma(jmax)`.
///
/// `alpha(jmin - 1)` restricts to `-epsilon(2, jmin)`; without it the unit
/// table at `(2, jmin)` would satisfy everything.
pub fn window_facets<S: Scalar>(w: &Window) -> Vec<WindowFunctional<S>> {
    let mut ids: Vec<FunctionalId> = w
        .coordinates()
        .into_iter()
        .map(|(i, j)| FunctionalId::Epsilon { i, j })
        .collect();
    ids.extend((w.jmin - 1..=w.jmax).map(FunctionalId::Alpha));
    ids.extend((w.jmin - 2..=w.jmax).map(FunctionalId::Gamma));
    ids.into_iter()
        .map(|id| WindowFunctional::restrict(w, id))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheckOptions {
    /// Add `gamma_inf = 0` and drop the Free generators.
    pub finite_length: bool,
    pub drop: Option<Family>,
    pub width_cap: usize,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        CrossCheckOptions {
            finite_length: false,
            drop: None,
            width_cap: Window::DEFAULT_WIDTH_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport<S> {
    pub window: Window,
    pub options: CrossCheckOptions,
    pub n_generators: usize,
    /// Distinct facets of the halfspace cone.
    pub n_facets: usize,
    pub n_rays: usize,
    /// Extreme rays of the halfspace cone, as primitive tables.
    pub rays: Vec<BettiTable<S>>,
    /// `(generator, functional, value)` for every failed `D ⊆ F` check.
    pub violations: Vec<(DegreeSequence, FunctionalId, S)>,
    /// Extreme rays that are not multiples of a generator.
    pub witnesses: Vec<BettiTable<S>>,
    pub equal: bool,
}

/// Compares the two cone descriptions on `w`.
pub fn cross_check<S: Scalar>(w: &Window, options: CrossCheckOptions) -> Result<WindowReport<S>> {
    if w.width() > options.width_cap {
        return Err(Error::WindowTooLarge {
            jmin: w.jmin,
            jmax: w.jmax,
            cap: options.width_cap,
        });
    }
    let generators: Vec<PureDiagram<S>> = window_generators(w)
        .into_iter()
        .filter(|g| !(options.finite_length && g.degree_sequence().shape() == Shape::Free))
        .collect();

    let mut facets: Vec<WindowFunctional<S>> = window_facets(w)
        .into_iter()
        .filter(|f| {
            !matches!(
                (options.drop, f.id),
                (Some(Family::Alpha), FunctionalId::Alpha(_))
                    | (Some(Family::Gamma), FunctionalId::Gamma(_))
            )
        })
        .collect();
    let mut equalities = Vec::new();
    if options.finite_length {
        equalities.push(WindowFunctional::restrict(w, FunctionalId::GammaInf));
    }

    let mut violations = Vec::new();
    let gen_vectors: Vec<Vec<S>> = generators
        .iter()
        .map(|g| {
            let mut v = w
                .to_vector(g.table())
                .expect("generator lies in the window");
            for f in facets.iter().chain(&equalities) {
                let val = f.eval(&v);
                if !f.id.holds(&val) || (f.id == FunctionalId::GammaInf && !val.is_zero()) {
                    violations.push((g.degree_sequence(), f.id, val));
                }
            }
            S::make_primitive(&mut v);
            v
        })
        .collect();

    // the epsilon functionals are the orthant the double description starts from
    facets.retain(|f| !matches!(f.id, FunctionalId::Epsilon { .. }));
    let mut constraints: Vec<Vec<S>> = facets.iter().map(|f| f.coeffs.clone()).collect();
    for e in &equalities {
        constraints.push(e.coeffs.clone());
        constraints.push(e.coeffs.iter().map(|x| -x.clone()).collect());
    }
    let rays = dd::extreme_rays(w.dim(), &constraints);

    let witnesses: Vec<Vec<S>> = rays
        .iter()
        .filter(|r| !gen_vectors.contains(r))
        .cloned()
        .collect();
    let n_facets = count_facets(w, &rays);
    let equal = witnesses.is_empty() && violations.is_empty();
    Ok(WindowReport {
        window: *w,
        options,
        n_generators: generators.len(),
        n_facets,
        n_rays: rays.len(),
        rays: rays.iter().map(|r| w.to_table(r)).collect(),
        violations,
        witnesses: witnesses.iter().map(|r| w.to_table(r)).collect(),
        equal,
    })
}

/// Facets of the cone spanned by `rays`, counted among all window
/// functionals (every family, plus the orthant): a functional is a facet
/// when it is not identically zero on the cone and its tight rays span a
/// hyperplane of the cone's span. Functionals with the same tight set are
/// the same facet.
fn count_facets<S: Scalar>(w: &Window, rays: &[Vec<S>]) -> usize {
    let dim = dd::rank(rays);
    let mut seen: Vec<Vec<bool>> = Vec::new();
    for f in window_facets::<S>(w) {
        let vals: Vec<S> = rays.iter().map(|r| f.eval(r)).collect();
        if vals.iter().any(|v| v.is_negative()) || vals.iter().all(|v| v.is_zero()) {
            continue;
        }
        let tight: Vec<bool> = vals.iter().map(|v| v.is_zero()).collect();
        if seen.contains(&tight) {
            continue;
        }
        let tight_rays: Vec<Vec<S>> = rays
            .iter()
            .zip(&tight)
            .filter(|(_, &t)| t)
            .map(|(r, _)| r.clone())
            .collect();
        if dim > 0 && dd::rank(&tight_rays) == dim - 1 {
            seen.push(tight);
        }
    }
    seen.len()
}

/// A seeded nonnegative combination of `n_terms` window generators with
/// coefficients `a / b`, `a in 1..=9`, `b in 1..=4`.
pub fn random_cone_point<S: Scalar>(w: &Window, n_terms: usize, seed: u64) -> BettiTable<S> {
    let generators = window_generators::<S>(w);
    let mut rng = Lcg::new(seed);
    let mut acc = BettiTable::canonical();
    for _ in 0..n_terms {
        let g = &generators[rng.below(generators.len() as u32) as usize];
        let c = S::from_frac(rng.range(1, 9), rng.range(1, 4));
        acc = acc.add_scaled(&c, g.table()).expect("both canonical");
    }
    acc
}

fn write_table<S: Scalar>(out: &mut String, key: &str, t: &BettiTable<S>) {
    let entries: Vec<String> = t.iter().map(|(i, j, x)| format!("({i},{j})={x}")).collect();
    let _ = writeln!(out, "{key}: {}", entries.join(" "));
}

impl<S: Scalar> WindowReport<S> {
    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(out, "window: {}", self.window);
        let _ = writeln!(out, "finite_length: {}", yn(self.options.finite_length));
        let dropped = match self.options.drop {
            None => "none",
            Some(Family::Alpha) => "alpha",
            Some(Family::Gamma) => "gamma",
        };
        let _ = writeln!(out, "dropped: {dropped}");
        let _ = writeln!(out, "equal: {}", yn(self.equal));
        let _ = writeln!(out, "generators: {}", self.n_generators);
        let _ = writeln!(out, "facets: {}", self.n_facets);
        let _ = writeln!(out, "rays: {}", self.n_rays);
        for (d, f, v) in &self.violations {
            let _ = writeln!(out, "violation: {d} {f} {v}");
        }
        for t in &self.witnesses {
            write_table(&mut out, "witness", t);
        }
        out
    }
}
