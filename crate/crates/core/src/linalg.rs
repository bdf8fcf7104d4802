//! Dense matrices over subfields of the tower and `F_q`-linear maps of `F_{q^n}`.

use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldTower};

/// A matrix whose entries are elements of the ambient field. All operations
/// use the ambient arithmetic, so a matrix with entries in a subfield `K`
/// behaves exactly as a matrix over `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter("ragged matrix".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, t: &FieldTower, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = t.add(out.get(i, j), t.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, t: &FieldTower, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = t.add(*o, t.mul(c, self.get(i, j)));
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, t: &FieldTower) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = t.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = t.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && !f.is_zero() {
                    for j in 0..m.cols {
                        let v = t.sub(m.get(i, j), t.mul(f, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self, t: &FieldTower) -> usize {
        self.rref(t).1.len()
    }

    pub fn inverse(&self, t: &FieldTower) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElement::ONE);
        }
        let (red, pivots) = aug.rref(t);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Basis of the right kernel `{x : M x^T = 0}`, each vector normalized so its
    /// first nonzero entry is 1.
    pub fn kernel(&self, t: &FieldTower) -> Vec<Vec<FieldElement>> {
        let (red, pivots) = self.rref(t);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElement::ZERO; self.cols];
                v[f] = FieldElement::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = t.neg(red.get(i, f));
                }
                let lead = v.iter().copied().find(|x| !x.is_zero()).expect("nonzero");
                let li = t.inv(lead).expect("nonzero");
                v.iter().map(|&x| t.mul(li, x)).collect()
            })
            .collect()
    }
}

/// An `F_q`-linear map of `F_{q^n}`, acting on row vectors of `F_q`-coordinates:
/// `Φ(φ(x)) = Φ(x) A`. Row `i` of `A` is `Φ(φ(ω^i))`.
#[derive(Clone)]
pub struct LinearMap {
    tower: Arc<FieldTower>,
    matrix: Matrix,
    images: Vec<FieldElement>,
}

impl std::fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearMap").field("images", &self.images).finish()
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && *self.tower == *other.tower
    }
}

impl Eq for LinearMap {}

impl Hash for LinearMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl LinearMap {
    /// The map sending `ω^i` to `images[i]`.
    pub fn from_images(tower: &Arc<FieldTower>, images: Vec<FieldElement>) -> Result<Self> {
        let n = tower.n() as usize;
        if images.len() != n {
            return Err(Error::DimensionMismatch(images.len(), n));
        }
        let rows = images.iter().map(|&x| tower.fq_coords(x)).collect();
        Ok(LinearMap { tower: tower.clone(), matrix: Matrix::from_rows(rows)?, images })
    }

    /// Builds a map from an `n×n` matrix with entries in `F_q`.
    pub fn from_matrix(tower: &Arc<FieldTower>, matrix: Matrix) -> Result<Self> {
        let n = tower.n() as usize;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(matrix.rows(), n));
        }
        if (0..n).any(|i| matrix.row(i).iter().any(|&x| !tower.in_fq(x))) {
            return Err(Error::InvalidParameter("matrix entries must lie in F_q".into()));
        }
        let images = (0..n).map(|i| tower.from_fq_coords(matrix.row(i))).collect();
        Ok(LinearMap { tower: tower.clone(), matrix, images })
    }

    pub fn identity(tower: &Arc<FieldTower>) -> Self {
        Self::from_images(tower, tower.fq_basis().to_vec()).expect("basis has length n")
    }

    /// `m_a : x ↦ a x`.
    pub fn multiplication(tower: &Arc<FieldTower>, a: FieldElement) -> Self {
        let images = tower.fq_basis().iter().map(|&b| tower.mul(a, b)).collect();
        Self::from_images(tower, images).expect("basis has length n")
    }

    /// `σ^i : x ↦ x^{q^i}`.
    pub fn frobenius(tower: &Arc<FieldTower>, i: i64) -> Self {
        let images = tower.fq_basis().iter().map(|&b| tower.frobenius(b, i)).collect();
        Self::from_images(tower, images).expect("basis has length n")
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `φ(ω^i)` for `i < n`.
    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: FieldElement) -> FieldElement {
        let t = &*self.tower;
        if t.p() == 2 && t.e() == 1 {
            let mut bits = x.index();
            let mut acc = 0u32;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                acc ^= self.images[j].index();
                bits &= bits - 1;
            }
            return FieldElement::from_index(acc);
        }
        let mut acc = FieldElement::ZERO;
        for (j, &img) in self.images.iter().enumerate() {
            let c = t.fq_coord(x, j);
            if !c.is_zero() {
                acc = t.add(acc, t.mul(c, img));
            }
        }
        acc
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        let images = inner.images.iter().map(|&x| self.apply(x)).collect();
        LinearMap::from_images(&self.tower, images).expect("same dimension")
    }

    /// Adjoint with respect to the coordinate dot product: the transpose.
    pub fn adjoint(&self) -> LinearMap {
        LinearMap::from_matrix(&self.tower, self.matrix.transpose()).expect("entries in F_q")
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        let inv = self.matrix.inverse(&self.tower)?;
        LinearMap::from_matrix(&self.tower, inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank(&self.tower) == self.tower.n() as usize
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }
}

/// Coordinates of `F_{q^n}` over the intermediate field `F_{q^s}` in the basis
/// `1, ω, .., ω^{n/s-1}`.
pub struct SubfieldCoordinates {
    tower: Arc<FieldTower>,
    s: u32,
    m: usize,
    zeta_pows: Vec<FieldElement>,
    // Row t: F_q-coordinates of ω^t expressed in the F_q-basis ζ^a ω^j (index a*m + j).
    to_pairs: Matrix,
}

impl SubfieldCoordinates {
    pub fn new(tower: &Arc<FieldTower>, s: u32) -> Result<Self> {
        tower.check_divisor(s)?;
        let n = tower.n() as usize;
        let m = n / s as usize;
        let zeta = tower.subfield_generator(s)?;
        let zeta_pows: Vec<FieldElement> = (0..s as u64).map(|a| tower.pow(zeta, a)).collect();
        // B: row (a, j) = Φ(ζ^a ω^j). Then Φ(x) = c B, c = Φ(x) B^{-1}.
        let mut rows = Vec::with_capacity(n);
        for &z in &zeta_pows {
            for j in 0..m {
                rows.push(tower.fq_coords(tower.mul(z, tower.omega_pow(j as i64))));
            }
        }
        let b = Matrix::from_rows(rows)?;
        let to_pairs = b.inverse(tower)?;
        Ok(SubfieldCoordinates { tower: tower.clone(), s, m, zeta_pows, to_pairs })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Dimension `n/s` over `F_{q^s}`.
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn coords(&self, x: FieldElement) -> Vec<FieldElement> {
        let t = &*self.tower;
        let c = self.to_pairs.left_apply(t, &t.fq_coords(x));
        (0..self.m)
            .map(|j| {
                self.zeta_pows
                    .iter()
                    .enumerate()
                    .fold(FieldElement::ZERO, |acc, (a, &z)| {
                        t.add(acc, t.mul(c[a * self.m + j], z))
                    })
            })
            .collect()
    }

    /// `Σ_j a_j ω^j`.
    pub fn combine(&self, a: &[FieldElement]) -> FieldElement {
        let t = &*self.tower;
        a.iter()
            .enumerate()
            .fold(FieldElement::ZERO, |acc, (j, &c)| t.add(acc, t.mul(c, t.omega_pow(j as i64))))
    }

    /// The `F_q`-linear map given by an `(n/s)×(n/s)` matrix over `F_{q^s}`
    /// acting on `F_{q^s}`-coordinate rows.
    pub fn linear_map(&self, g: &Matrix) -> Result<LinearMap> {
        if g.rows() != self.m || g.cols() != self.m {
            return Err(Error::DimensionMismatch(g.rows(), self.m));
        }
        let t = &self.tower;
        let images = t
            .fq_basis()
            .iter()
            .map(|&b| self.combine(&g.left_apply(t, &self.coords(b))))
            .collect();
        LinearMap::from_images(t, images)
    }
}
