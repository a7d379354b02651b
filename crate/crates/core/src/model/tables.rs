use std::ops::{Add, Neg, Sub};

use crate::linalg::{LinMap, Matrix, Scalar};

/// Dense order-3 array with independent extents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cube {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Cube {
    fn zero(dims: [usize; 3]) -> Self {
        Cube {
            dims,
            data: vec![Scalar::zero(); dims[0] * dims[1] * dims[2]],
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2], "index out of range");
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] = v;
    }

    fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] += v;
    }

    fn lane(&self, i: usize, j: usize) -> &[Scalar] {
        let s = self.idx(i, j, 0);
        &self.data[s..s + self.dims[2]]
    }

    fn zip(&self, other: &Cube, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Cube {
        assert_eq!(self.dims, other.dims, "table shape mismatch");
        Cube {
            dims: self.dims,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
        let [_, b, c] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(p, v)| ([p / (b * c), (p / c) % b, p % c], v))
    }
}

macro_rules! cube_wrapper_common {
    ($t:ident) => {
        impl $t {
            pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
                self.0.get(i, j, k)
            }

            pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
                self.0.set(i, j, k, v);
            }

            pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
                self.0.add_to(i, j, k, v);
            }

            pub fn is_zero(&self) -> bool {
                self.0.data.iter().all(Scalar::is_zero)
            }

            /// Nonzero entries as `([i, j, k], value)` in lexicographic order.
            pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
                self.0.nonzero()
            }

            pub fn scale(&self, s: &Scalar) -> $t {
                $t(Cube {
                    dims: self.0.dims,
                    data: self.0.data.iter().map(|x| x * s).collect(),
                })
            }

            pub fn extents(&self) -> [usize; 3] {
                self.0.dims
            }
        }

        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t(self.0.zip(&rhs.0, |a, b| a + b))
            }
        }

        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t(self.0.zip(&rhs.0, |a, b| a - b))
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&-Scalar::one())
            }
        }
    };
}

/// Structure constants `e_i * e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTable(Cube);

cube_wrapper_common!(MulTable);

impl MulTable {
    pub fn zero(dim: usize) -> Self {
        MulTable(Cube::zero([dim; 3]))
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = MulTable::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.0.dims[0]
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        self.0.lane(i, j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `L(e_i): y ↦ e_i * y`.
    pub fn left(&self, i: usize) -> LinMap {
        let n = self.dim();
        LinMap(Matrix::from_fn(n, n, |k, j| self.get(i, j, k).clone()))
    }

    /// Matrix of `R(e_i): y ↦ y * e_i`.
    pub fn right(&self, i: usize) -> LinMap {
        let n = self.dim();
        LinMap(Matrix::from_fn(n, n, |k, j| self.get(j, i, k).clone()))
    }

    /// `x ∗' y = y ∗ x`.
    pub fn opposite(&self) -> MulTable {
        MulTable::from_fn(self.dim(), |i, j, k| self.get(j, i, k).clone())
    }

    /// Transport along a basis change `P` (columns are new basis vectors in
    /// old coordinates): `c'(x, y) = P⁻¹ c(Px, Py)`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> MulTable {
        let n = self.dim();
        MulTable::from_fn(n, |i, j, k| {
            let pi = p.column(i);
            let pj = p.column(j);
            let prod = self.mul(&pi, &pj);
            p_inv.row(k).iter().zip(&prod).map(|(a, b)| a * b).sum()
        })
    }
}

/// Structure constants `Δ(e_k) = Σ_{i,j} d[k][i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoprodTable(Cube);

cube_wrapper_common!(CoprodTable);

impl CoprodTable {
    pub fn zero(dim: usize) -> Self {
        CoprodTable(Cube::zero([dim; 3]))
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = CoprodTable::zero(dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    t.set(k, i, j, f(k, i, j));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.0.dims[0]
    }

    /// `Δ(e_k)` as a flattened `dim × dim` array.
    pub fn image(&self, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            out.extend_from_slice(self.0.lane(k, i));
        }
        out
    }

    /// `σΔ`.
    pub fn flip(&self) -> CoprodTable {
        CoprodTable::from_fn(self.dim(), |k, i, j| self.get(k, j, i).clone())
    }
}

/// An action `ρ: A -> End(V)`; `a[i][j][k]` is the coefficient of `v_k` in
/// `ρ(e_i) v_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionTable(Cube);

cube_wrapper_common!(ActionTable);

impl ActionTable {
    pub fn zero(acting_dim: usize, carrier_dim: usize) -> Self {
        ActionTable(Cube::zero([acting_dim, carrier_dim, carrier_dim]))
    }

    pub fn from_fn(
        acting_dim: usize,
        carrier_dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Scalar,
    ) -> Self {
        let mut t = ActionTable::zero(acting_dim, carrier_dim);
        for i in 0..acting_dim {
            for j in 0..carrier_dim {
                for k in 0..carrier_dim {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    /// From the matrices `ρ(e_i)`, one per acting basis vector.
    pub fn from_matrices(carrier_dim: usize, mats: &[LinMap]) -> Self {
        ActionTable::from_fn(mats.len(), carrier_dim, |i, j, k| mats[i].entry(k, j).clone())
    }

    pub fn acting_dim(&self) -> usize {
        self.0.dims[0]
    }

    pub fn carrier_dim(&self) -> usize {
        self.0.dims[1]
    }

    /// The matrix of `ρ(e_i)`.
    pub fn matrix(&self, i: usize) -> LinMap {
        let m = self.carrier_dim();
        LinMap(Matrix::from_fn(m, m, |k, j| self.get(i, j, k).clone()))
    }

    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let m = self.carrier_dim();
        let mut out = vec![Scalar::zero(); m];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.0.lane(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// `ρ*(x) = ρ(x)*` on the dual carrier.
    pub fn dual(&self) -> ActionTable {
        ActionTable::from_fn(self.acting_dim(), self.carrier_dim(), |i, j, k| {
            self.get(i, k, j).clone()
        })
    }

    /// Left multiplication `L(x)` of a table, viewed as an action on itself.
    pub fn left_of(m: &MulTable) -> ActionTable {
        let n = m.dim();
        ActionTable::from_fn(n, n, |i, j, k| m.get(i, j, k).clone())
    }

    /// Right multiplication `R(x)` of a table, viewed as an action on itself.
    pub fn right_of(m: &MulTable) -> ActionTable {
        let n = m.dim();
        ActionTable::from_fn(n, n, |i, j, k| m.get(j, i, k).clone())
    }
}

/// The multiplication on `A*` dual to `Δ`: `c*[i][j][k] = d[k][i][j]`.
pub fn dualize_coprod(c: &CoprodTable) -> MulTable {
    MulTable::from_fn(c.dim(), |i, j, k| c.get(k, i, j).clone())
}

/// The comultiplication on `A*` dual to `·`: `d*[k][i][j] = c[i][j][k]`.
pub fn dualize_mul(m: &MulTable) -> CoprodTable {
    CoprodTable::from_fn(m.dim(), |k, i, j| m.get(i, j, k).clone())
}
