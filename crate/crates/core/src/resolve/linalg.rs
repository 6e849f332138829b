//! Row echelon bookkeeping over a [`Field`].

use super::field::Field;

/// A subspace of `F^n` held as echelon rows.
///
/// Row `r` is zero in the pivot columns of every earlier row, so reducing a
/// vector by the rows in insertion order is a linear projection whose
/// kernel is exactly the subspace.
#[derive(Clone, Debug)]
pub(crate) struct Subspace<F: Field> {
    field: F,
    n: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, n: usize) -> Self {
        Subspace {
            field,
            n,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [F::Elem]) {
        debug_assert_eq!(v.len(), self.n);
        for (p, row) in &self.rows {
            if self.field.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            axpy(&self.field, v, &c, row);
        }
    }

    /// Adds `v` to the span; `false` if it was already there.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        self.reduce(&mut v);
        match self.normalize(&mut v) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    /// Scales `v` to have a leading 1 and returns its pivot.
    fn normalize(&self, v: &mut [F::Elem]) -> Option<usize> {
        let p = v.iter().position(|x| !self.field.is_zero(x))?;
        let inv = self.field.inv(&v[p]);
        for x in v.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        Some(p)
    }
}

/// `v -= c * row`.
fn axpy<F: Field>(field: &F, v: &mut [F::Elem], c: &F::Elem, row: &[F::Elem]) {
    for (x, r) in v.iter_mut().zip(row) {
        if !field.is_zero(r) {
            *x = field.sub(x, &field.mul(c, r));
        }
    }
}

/// Basis of the kernel of the linear map sending the `k`-th source basis
/// vector to `images[k]` (all of length `target_dim`).
pub(crate) fn kernel<F: Field>(
    field: &F,
    target_dim: usize,
    images: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let m = images.len();
    // (pivot, reduced image, source combination producing it)
    type Row<E> = (usize, Vec<E>, Vec<E>);
    let mut rows: Vec<Row<F::Elem>> = Vec::new();
    let mut out = Vec::new();
    for (k, img) in images.iter().enumerate() {
        debug_assert_eq!(img.len(), target_dim);
        let mut w = img.clone();
        let mut comb = vec![field.zero(); m];
        comb[k] = field.one();
        for (p, row, rc) in &rows {
            if field.is_zero(&w[*p]) {
                continue;
            }
            let c = w[*p].clone();
            axpy(field, &mut w, &c, row);
            axpy(field, &mut comb, &c, rc);
        }
        match w.iter().position(|x| !field.is_zero(x)) {
            None => out.push(comb),
            Some(p) => {
                let inv = field.inv(&w[p]);
                for x in w.iter_mut().chain(comb.iter_mut()) {
                    *x = field.mul(x, &inv);
                }
                rows.push((p, w, comb));
            }
        }
    }
    out
}
