use std::ops::{Add, Neg, Sub};

use super::{Matrix, Perm3, Scalar};

/// Linear map `V -> W`; `entry(i, j)` is the coefficient of output basis
/// vector `i` in the image of input basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap(pub Matrix);

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap(Matrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        LinMap(Matrix::identity(n))
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        LinMap(Matrix::identity(n).scale(s))
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        LinMap(&self.0 * &other.0)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.0.mul_vec(v)
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn inverse(&self) -> Option<LinMap> {
        self.0.inverse().map(LinMap)
    }

    /// Block-diagonal map `self ⊕ other` on the direct sum.
    pub fn direct_sum(&self, other: &LinMap) -> LinMap {
        let (r1, c1) = (self.rows(), self.cols());
        let (r2, c2) = (other.rows(), other.cols());
        LinMap(Matrix::from_fn(r1 + r2, c1 + c2, |i, j| {
            if i < r1 && j < c1 {
                self.entry(i, j).clone()
            } else if i >= r1 && j >= c1 {
                other.entry(i - r1, j - c1).clone()
            } else {
                Scalar::zero()
            }
        }))
    }
}

/// The dual (transpose) map `W* -> V*` defined by `<psi*(w*), v> = <w*, psi(v)>`.
pub fn dual_map(psi: &LinMap) -> LinMap {
    LinMap(psi.0.transpose())
}

impl Add<&LinMap> for &LinMap {
    type Output = LinMap;
    fn add(self, rhs: &LinMap) -> LinMap {
        LinMap(&self.0 + &rhs.0)
    }
}

impl Sub<&LinMap> for &LinMap {
    type Output = LinMap;
    fn sub(self, rhs: &LinMap) -> LinMap {
        LinMap(&self.0 - &rhs.0)
    }
}

impl Neg for &LinMap {
    type Output = LinMap;
    fn neg(self) -> LinMap {
        LinMap(-&self.0)
    }
}

/// `r = Σ r[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2(pub Matrix);

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2(Matrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.0.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.0.set(i, j, v);
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.0.is_antisymmetric()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `σ(r)`, the flip of tensor factors.
    pub fn flip(&self) -> Tensor2 {
        Tensor2(self.0.transpose())
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }
}

impl Add<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2(&self.0 + &rhs.0)
    }
}

impl Sub<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2(&self.0 - &rhs.0)
    }
}

/// `r♯ : V* -> W`, `r♯(e_i*) = Σ_j r[i][j] e_j`.
pub fn sharp(r: &Tensor2) -> LinMap {
    LinMap(r.0.transpose())
}

/// `B[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm(pub Matrix);

impl BilinearForm {
    pub fn zero(dim: usize) -> Self {
        BilinearForm(Matrix::zeros(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.0.get(i, j)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.0.is_antisymmetric()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let by = self.0.mul_vec(y);
        x.iter().zip(&by).map(|(a, b)| a * b).sum()
    }
}

/// `t = Σ t[i][j][k] e_i ⊗ e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        let n = self.idx(i, j, k);
        &mut self.data[n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> + '_ {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(p, v)| ((p / (n * n), (p / n) % n, p % n), v))
    }

    pub fn basis(dim: usize, i: usize, j: usize, k: usize) -> Self {
        let mut t = Tensor3::zero(dim);
        t.set(i, j, k, Scalar::one());
        t
    }
}

impl Add<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor dimension mismatch");
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `σ_ω(a1⊗a2⊗a3) = a_{ω⁻¹(1)} ⊗ a_{ω⁻¹(2)} ⊗ a_{ω⁻¹(3)}`.
pub fn permute_tensor3(t: &Tensor3, omega: &Perm3) -> Tensor3 {
    let w = omega.images();
    Tensor3::from_fn(t.dim(), |i, j, k| {
        let b = [i, j, k];
        t.get(b[w[0]], b[w[1]], b[w[2]]).clone()
    })
}
