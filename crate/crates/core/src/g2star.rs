//! The 14-dimensional matrix model of g2* and generic Lie-span utilities.

use std::fmt;

use num_traits::Zero;

use crate::exterior::Convention;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// The fourteen free parameters `s1..s14` of the matrix model (stored 0-based).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct G2Params(pub [Scalar; 14]);

impl G2Params {
    /// Parameters with `s_k = 1` (1-based `k`) and all others zero.
    pub fn unit(k: usize) -> Self {
        let mut p = G2Params::default();
        p.0[k - 1] = Scalar::from_int(1);
        p
    }
}

/// The 7x7 matrix of g2* in the model basis for the given parameters.
pub fn g2_from_params(p: &G2Params) -> Matrix<Scalar> {
    let s = |k: usize| p.0[k - 1].clone();
    let r = |k: usize| Scalar::sqrt2() * s(k);
    let z = Scalar::zero;
    Matrix::from_rows(vec![
        vec![s(1) + s(4), -s(10), s(9), r(6), z(), -s(11), -s(12)],
        vec![-s(8), s(1), s(2), r(9), s(11), z(), s(6)],
        vec![s(7), s(3), s(4), r(10), s(12), -s(6), z()],
        vec![r(5), r(7), r(8), z(), r(6), r(9), r(10)],
        vec![z(), s(13), s(14), r(5), -s(1) - s(4), s(8), -s(7)],
        vec![-s(13), z(), -s(5), r(7), s(10), -s(1), -s(3)],
        vec![-s(14), s(5), z(), r(8), -s(9), -s(2), -s(4)],
    ])
}

/// The fourteen coordinate matrices of the model.
pub fn g2_basis() -> Vec<Matrix<Scalar>> {
    (1..=14).map(|k| g2_from_params(&G2Params::unit(k))).collect()
}

pub fn flatten(m: &Matrix<Scalar>) -> Vec<Scalar> {
    m.as_flat().to_vec()
}

pub fn unflatten(n: usize, v: &[Scalar]) -> Matrix<Scalar> {
    Matrix::from_flat(n, n, v.to_vec())
}

/// A linear span of `n x n` matrices with a bracket-closure certificate.
#[derive(Clone, PartialEq)]
pub struct LieMatrixAlgebra {
    n: usize,
    span: Subspace<Scalar>,
    closed: bool,
}

impl LieMatrixAlgebra {
    pub fn zero(n: usize) -> Self {
        LieMatrixAlgebra {
            n,
            span: Subspace::zero(n * n),
            closed: true,
        }
    }

    pub fn from_span(n: usize, span: Subspace<Scalar>) -> Self {
        assert_eq!(span.ambient_dim(), n * n);
        let mut a = LieMatrixAlgebra {
            n,
            span,
            closed: false,
        };
        a.closed = a.check_closed();
        a
    }

    /// The linear span of the given matrices (closure is checked, not forced).
    pub fn span_of(n: usize, mats: &[Matrix<Scalar>]) -> Self {
        let vecs: Vec<Vec<Scalar>> = mats.iter().map(flatten).collect();
        Self::from_span(n, Subspace::span(n * n, &vecs))
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &Subspace<Scalar> {
        &self.span
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn basis(&self) -> Vec<Matrix<Scalar>> {
        self.span.basis().iter().map(|v| unflatten(self.n, v)).collect()
    }

    pub fn contains(&self, m: &Matrix<Scalar>) -> bool {
        self.span.contains(m.as_flat())
    }

    pub fn coordinates(&self, m: &Matrix<Scalar>) -> Option<Vec<Scalar>> {
        self.span.coordinates(m.as_flat())
    }

    pub fn is_subalgebra_of(&self, other: &LieMatrixAlgebra) -> bool {
        self.n == other.n && self.span.is_subspace_of(&other.span).unwrap_or(false)
    }

    /// First pair of basis elements whose bracket leaves the span, if any.
    pub fn closure_violation(&self) -> Option<(usize, usize)> {
        let b = self.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !self.contains(&b[i].commutator(&b[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn check_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// Span of all brackets `[x, y]` with `x` in `self`, `y` in `other`.
    pub fn bracket_span(&self, other: &LieMatrixAlgebra) -> LieMatrixAlgebra {
        let a = self.basis();
        let b = other.basis();
        let mut vecs = Vec::new();
        for x in &a {
            for y in &b {
                let c = x.commutator(y);
                if !c.is_zero() {
                    vecs.push(flatten(&c));
                }
            }
        }
        Self::from_span(self.n, Subspace::span(self.n * self.n, &vecs))
    }

    /// Dimensions of `g, [g,g], [g,[g,g]], ...` down to the stable term.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut cur = self.clone();
        loop {
            let next = self.bracket_span(&cur);
            if next.dim() == cur.dim() {
                break;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            cur = next;
        }
        dims
    }

    /// `k` if the algebra is k-step nilpotent (the k-th lower central term vanishes
    /// and the previous one does not), `None` if not nilpotent.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        (*lcs.last()? == 0).then(|| lcs.len() - 1)
    }
}

impl fmt::Debug for LieMatrixAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LieMatrixAlgebra(n={}, dim={}, closed={})",
            self.n,
            self.dim(),
            self.closed
        )
    }
}

/// The smallest bracket-closed span containing `gens`.
pub fn lie_closure(n: usize, gens: &[Matrix<Scalar>]) -> LieMatrixAlgebra {
    let mut span = Subspace::zero(n * n);
    let mut elems: Vec<Matrix<Scalar>> = Vec::new();
    let mut queue: Vec<Matrix<Scalar>> = Vec::new();
    for g in gens {
        assert_eq!((g.rows(), g.cols()), (n, n));
        if !span.contains(g.as_flat()) {
            span = span.extend(&[flatten(g)]);
            elems.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        let current = elems.clone();
        for y in &current {
            let c = x.commutator(y);
            if !span.contains(c.as_flat()) {
                span = span.extend(&[flatten(&c)]);
                elems.push(c.clone());
                queue.push(c);
            }
        }
    }
    LieMatrixAlgebra {
        n,
        span,
        closed: true,
    }
}

/// The infinitesimal stabilizer `{A : A . omega = 0}` of the convention's 3-form.
pub fn stabilizer_algebra(conv: &Convention) -> LieMatrixAlgebra {
    let k = conv.omega.derivation_map().kernel();
    LieMatrixAlgebra::from_span(7, k)
}

/// Whether `a` is skew-adjoint for the convention's Gram matrix.
pub fn so_check(conv: &Convention, a: &Matrix<Scalar>) -> bool {
    is_skew_adjoint(&conv.gram, a)
}

pub fn is_skew_adjoint(gram: &Matrix<Scalar>, a: &Matrix<Scalar>) -> bool {
    (&(gram * a) + &(&a.transpose() * gram)).is_zero()
}

/// Whether `a` annihilates the convention's 3-form.
pub fn annihilates_omega(conv: &Convention, a: &Matrix<Scalar>) -> bool {
    conv.omega.derivation(a).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::ConventionName;

    #[test]
    fn params_display_pattern() {
        assert!(g2_from_params(&G2Params::default()).is_zero());
        let m = g2_from_params(&G2Params::unit(1));
        let one = Scalar::from_int(1);
        assert_eq!(m[(0, 0)], one);
        assert_eq!(m[(1, 1)], one);
        assert_eq!(m[(4, 4)], -one.clone());
        assert_eq!(m[(5, 5)], -one);
        let m5 = g2_from_params(&G2Params::unit(5));
        let nz: Vec<_> = (0..7)
            .flat_map(|i| (0..7).map(move |j| (i, j)))
            .filter(|&(i, j)| !m5[(i, j)].is_zero())
            .collect();
        assert_eq!(nz, vec![(3, 0), (4, 3), (5, 2), (6, 1)]);
    }

    #[test]
    fn closures() {
        let e12 = Matrix::<Scalar>::unit(2, 0, 1);
        let e21 = Matrix::<Scalar>::unit(2, 1, 0);
        assert_eq!(lie_closure(2, &[e12.clone()]).dim(), 1);
        assert_eq!(lie_closure(2, &[e12, e21]).dim(), 3);
        let g2 = lie_closure(7, &g2_basis());
        assert_eq!(g2.dim(), 14);
    }

    #[test]
    fn stabilizer_matches_model() {
        let c1 = ConventionName::C1.get();
        let st = stabilizer_algebra(c1);
        assert_eq!(st.dim(), 14);
        assert!(st.is_closed());
        assert_eq!(st, LieMatrixAlgebra::span_of(7, &g2_basis()));
        assert!(!st.contains(&Matrix::identity(7)));
        assert!(g2_basis().iter().all(|b| so_check(c1, b)));
        assert!(!so_check(c1, &Matrix::identity(7)));
        assert!(so_check(c1, &Matrix::zeros(7, 7)));
    }

    #[test]
    fn other_conventions_have_14_dim_stabilizers() {
        for c in [ConventionName::C2, ConventionName::C3] {
            let st = stabilizer_algebra(c.get());
            assert_eq!(st.dim(), 14);
            assert!(st.basis().iter().all(|b| so_check(c.get(), b)));
        }
    }
}
