//! Dense complex square matrices sized for a handful of qubits.

use num_complex::Complex64;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), dim * dim, "data length must be dim^2");
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        CMatrix {
            dim: self.dim,
            data,
        }
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_re(&self, s: f64) -> CMatrix {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &CMatrix) -> Complex64 {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        acc
    }

    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (n, m) = (self.dim, other.dim);
        let mut out = CMatrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = self.get(i, j) - self.get(j, i).conj();
                if d.norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
    /// rotations. Returns eigenvalues ascending and the matching unitary of
    /// column eigenvectors. The input is symmetrized first so that 1e-10
    /// level asymmetry from upstream arithmetic cannot skew the result.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, CMatrix) {
        let n = self.dim;
        let mut a = self.add(&self.dagger()).scale_re(0.5);
        let mut v = CMatrix::identity(n);
        for _sweep in 0..200 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in p + 1..n {
                    off += a.get(p, q).norm_sqr();
                }
            }
            if off < 1e-28 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a.get(p, q);
                    let r = apq.norm();
                    if r < 1e-15 {
                        continue;
                    }
                    let phase = apq / r;
                    let app = a.get(p, p).re;
                    let aqq = a.get(q, q).re;
                    let tau = (aqq - app) / (2.0 * r);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    // column rotation: columns p and q of A and V
                    let (cs, sp) = (Complex64::new(c, 0.0), phase.scale(s));
                    for k in 0..n {
                        let akp = a.get(k, p);
                        let akq = a.get(k, q);
                        a.set(k, p, cs * akp - sp.conj() * akq);
                        a.set(k, q, sp * akp + cs * akq);
                        let vkp = v.get(k, p);
                        let vkq = v.get(k, q);
                        v.set(k, p, cs * vkp - sp.conj() * vkq);
                        v.set(k, q, sp * vkp + cs * vkq);
                    }
                    // row rotation with the conjugate transpose
                    for k in 0..n {
                        let apk = a.get(p, k);
                        let aqk = a.get(q, k);
                        a.set(p, k, cs * apk - sp * aqk);
                        a.set(q, k, sp.conj() * apk + cs * aqk);
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        let evals: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
        order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).expect("finite eigenvalues"));
        let sorted_vals: Vec<f64> = order.iter().map(|&i| evals[i]).collect();
        let mut sorted_vecs = CMatrix::zeros(n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for k in 0..n {
                sorted_vecs.set(k, new_col, v.get(k, old_col));
            }
        }
        (sorted_vals, sorted_vecs)
    }

    /// `f` applied to the spectrum of a Hermitian matrix: `V f(D) V^dag`.
    pub fn hermitian_map(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let (vals, vecs) = self.hermitian_eigen();
        let n = self.dim;
        let mut d = CMatrix::zeros(n);
        for (i, &lambda) in vals.iter().enumerate() {
            d.set(i, i, Complex64::new(f(lambda), 0.0));
        }
        vecs.matmul(&d).matmul(&vecs.dagger())
    }
}

pub fn pauli_i() -> CMatrix {
    CMatrix::identity(2)
}

pub fn pauli_x() -> CMatrix {
    let mut m = CMatrix::zeros(2);
    m.set(0, 1, Complex64::new(1.0, 0.0));
    m.set(1, 0, Complex64::new(1.0, 0.0));
    m
}

pub fn pauli_y() -> CMatrix {
    let mut m = CMatrix::zeros(2);
    m.set(0, 1, Complex64::new(0.0, -1.0));
    m.set(1, 0, Complex64::new(0.0, 1.0));
    m
}

pub fn pauli_z() -> CMatrix {
    let mut m = CMatrix::zeros(2);
    m.set(0, 0, Complex64::new(1.0, 0.0));
    m.set(1, 1, Complex64::new(-1.0, 0.0));
    m
}
