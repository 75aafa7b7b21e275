//! The two maximal parabolic families: `h(A, v, u, y)` (Type I basis) and
//! `h(A, z, c)` (Type II basis).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::g2star::LieMatrixAlgebra;
use crate::Subspace;
use crate::scalar::Scalar;
use crate::Matrix;

pub type Vec2 = [Scalar; 2];
pub type Vec4 = [Scalar; 4];

/// 2x2 matrix `[[a1, a2], [a3, a4]]`.
pub fn mat2(a1: Scalar, a2: Scalar, a3: Scalar, a4: Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![a1, a2], vec![a3, a4]])
}

pub fn mat2i(a1: i64, a2: i64, a3: i64, a4: i64) -> Matrix {
    mat2(a1.into(), a2.into(), a3.into(), a4.into())
}

pub fn zero2() -> Vec2 {
    [Scalar::zero(), Scalar::zero()]
}

pub fn zero4() -> Vec4 {
    [Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()]
}

pub fn vec2i(a: i64, b: i64) -> Vec2 {
    [a.into(), b.into()]
}

pub fn vec4i(a: i64, b: i64, c: i64, d: i64) -> Vec4 {
    [a.into(), b.into(), c.into(), d.into()]
}

/// `theta(u, w) = u1 w2 - u2 w1`.
pub fn theta(u: &Vec2, w: &Vec2) -> Scalar {
    &u[0] * &w[1] - &u[1] * &w[0]
}

/// `eta(z, w) = -z1 w4 + z4 w1 + 3 z2 w3 - 3 z3 w2`.
pub fn eta(z: &Vec4, w: &Vec4) -> Scalar {
    let three = Scalar::from_int(3);
    -(&z[0] * &w[3]) + &z[3] * &w[0] + &three * &(&z[1] * &w[2]) - &three * &(&z[2] * &w[1])
}

/// Element of the Type I parabolic: `A` in gl(2), `v` in R, `u, y` in R^2.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIElement {
    pub a: Matrix,
    pub v: Scalar,
    pub u: Vec2,
    pub y: Vec2,
}

impl TypeIElement {
    pub fn new(a: Matrix, v: Scalar, u: Vec2, y: Vec2) -> Self {
        assert_eq!((a.rows(), a.cols()), (2, 2));
        TypeIElement { a, v, u, y }
    }

    pub fn zero() -> Self {
        Self::new(Matrix::zeros(2, 2), Scalar::zero(), zero2(), zero2())
    }

    pub fn gl(a: Matrix) -> Self {
        Self::new(a, Scalar::zero(), zero2(), zero2())
    }

    pub fn m(v: Scalar, u: Vec2, y: Vec2) -> Self {
        Self::new(Matrix::zeros(2, 2), v, u, y)
    }

    pub fn matrix(&self) -> Matrix {
        h_type1(self)
    }

    /// Reads the parameters back from a 7x7 matrix, failing if the matrix is
    /// not of the Type I form.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let a = m.block(1..3, 1..3);
        let e = TypeIElement::new(
            a,
            m[(1, 6)].clone(),
            [m[(0, 2)].clone(), -m[(0, 1)].clone()],
            [-m[(0, 5)].clone(), -m[(0, 6)].clone()],
        );
        if e.matrix() == *m {
            Ok(e)
        } else {
            Err(Error::NotInFamily("matrix is not of the form h(A, v, u, y)".into()))
        }
    }
}

/// The 7x7 matrix `h(A, v, u, y)` in the model basis.
pub fn h_type1(e: &TypeIElement) -> Matrix {
    let r2 = Scalar::sqrt2();
    let a = |i: usize, j: usize| e.a[(i, j)].clone();
    let tr = e.a.trace();
    let (u1, u2) = (e.u[0].clone(), e.u[1].clone());
    let (y1, y2) = (e.y[0].clone(), e.y[1].clone());
    let v = e.v.clone();
    let z = Scalar::zero;
    Matrix::from_rows(vec![
        vec![tr.clone(), -u2.clone(), u1.clone(), &r2 * &v, z(), -y1.clone(), -y2.clone()],
        vec![z(), a(0, 0), a(0, 1), &r2 * &u1, y1, z(), v.clone()],
        vec![z(), a(1, 0), a(1, 1), &r2 * &u2, y2, -v.clone(), z()],
        vec![z(), z(), z(), z(), &r2 * &v, &r2 * &u1, &r2 * &u2],
        vec![z(), z(), z(), z(), -tr, z(), z()],
        vec![z(), z(), z(), z(), u2, -a(0, 0), -a(1, 0)],
        vec![z(), z(), z(), z(), -u1, -a(0, 1), -a(1, 1)],
    ])
}

/// Element of the Type II parabolic: `A` in gl(2), `z` in R^4, `c` in R.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIIElement {
    pub a: Matrix,
    pub z: Vec4,
    pub c: Scalar,
}

impl TypeIIElement {
    pub fn new(a: Matrix, z: Vec4, c: Scalar) -> Self {
        assert_eq!((a.rows(), a.cols()), (2, 2));
        TypeIIElement { a, z, c }
    }

    pub fn zero() -> Self {
        Self::new(Matrix::zeros(2, 2), zero4(), Scalar::zero())
    }

    pub fn gl(a: Matrix) -> Self {
        Self::new(a, zero4(), Scalar::zero())
    }

    pub fn n(z: Vec4, c: Scalar) -> Self {
        Self::new(Matrix::zeros(2, 2), z, c)
    }

    pub fn matrix(&self) -> Matrix {
        h_type2(self)
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let e = TypeIIElement::new(
            m.block(0..2, 0..2),
            [
                m[(1, 2)].clone(),
                m[(0, 2)].clone(),
                m[(1, 4)].clone(),
                m[(0, 4)].clone(),
            ],
            m[(1, 5)].clone(),
        );
        if e.matrix() == *m {
            Ok(e)
        } else {
            Err(Error::NotInFamily("matrix is not of the form h(A, z, c)".into()))
        }
    }
}

/// `sigma(z)`, the 2x3 block.
pub fn sigma(z: &Vec4) -> Matrix {
    let r2 = Scalar::sqrt2();
    Matrix::from_rows(vec![
        vec![z[1].clone(), &r2 * &z[2], z[3].clone()],
        vec![z[0].clone(), &r2 * &z[1], z[2].clone()],
    ])
}

/// `sigma(z)^*`, the 3x2 block.
pub fn sigma_star(z: &Vec4) -> Matrix {
    let r2 = Scalar::sqrt2();
    Matrix::from_rows(vec![
        vec![-z[3].clone(), -z[2].clone()],
        vec![&r2 * &z[2], &r2 * &z[1]],
        vec![-z[1].clone(), -z[0].clone()],
    ])
}

/// `rho(A)`, the 3x3 block.
pub fn rho(a: &Matrix) -> Matrix {
    let r2 = Scalar::sqrt2();
    let (a1, a2, a3, a4) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)], &a[(1, 1)]);
    let z = Scalar::zero;
    Matrix::from_rows(vec![
        vec![a1 - a4, -(&r2 * a2), z()],
        vec![-(&r2 * a3), z(), -(&r2 * a2)],
        vec![z(), -(&r2 * a3), a4 - a1],
    ])
}

/// `U(c) = [[0, -c], [c, 0]]`.
pub fn u_block(c: &Scalar) -> Matrix {
    mat2(Scalar::zero(), -c.clone(), c.clone(), Scalar::zero())
}

/// The 7x7 block matrix `h(A, z, c)` in the Type II basis.
pub fn h_type2(e: &TypeIIElement) -> Matrix {
    let mut m = Matrix::zeros(7, 7);
    m.set_block(0, 0, &e.a);
    m.set_block(0, 2, &sigma(&e.z));
    m.set_block(0, 5, &u_block(&e.c));
    m.set_block(2, 2, &rho(&e.a));
    m.set_block(2, 5, &sigma_star(&e.z));
    m.set_block(5, 5, &-&e.a.transpose());
    m
}

/// Standard basis `E11, E12, E21, E22` of gl(2).
pub fn gl2_basis() -> Vec<Matrix> {
    vec![mat2i(1, 0, 0, 0), mat2i(0, 1, 0, 0), mat2i(0, 0, 1, 0), mat2i(0, 0, 0, 1)]
}

/// Basis of the Type I parabolic: gl(2) part, then `v`, `u1`, `u2`, `y1`, `y2`.
pub fn type1_basis() -> Vec<Matrix> {
    let mut out: Vec<Matrix> = gl2_basis().into_iter().map(|a| TypeIElement::gl(a).matrix()).collect();
    out.extend(m_full().basis());
    out
}

/// Basis of the Type II parabolic: gl(2) part, then `z1..z4`, `c`.
pub fn type2_basis() -> Vec<Matrix> {
    let mut out: Vec<Matrix> = gl2_basis().into_iter().map(|a| TypeIIElement::gl(a).matrix()).collect();
    out.extend(n_basis(&[1, 2, 3, 4]).expect("valid indices"));
    out
}

pub fn type1_parabolic() -> LieMatrixAlgebra {
    LieMatrixAlgebra::span_of(7, &type1_basis())
}

pub fn type2_parabolic() -> LieMatrixAlgebra {
    LieMatrixAlgebra::span_of(7, &type2_basis())
}

fn m_basis(i: u8, j: u8, k: u8) -> Vec<Matrix> {
    let one = Scalar::one;
    let mut out = Vec::new();
    if i == 1 {
        out.push(TypeIElement::m(one(), zero2(), zero2()).matrix());
    }
    if j == 1 {
        out.push(TypeIElement::m(Scalar::zero(), vec2i(1, 0), zero2()).matrix());
    }
    if k >= 1 {
        out.push(TypeIElement::m(Scalar::zero(), zero2(), vec2i(1, 0)).matrix());
    }
    if k == 2 {
        out.push(TypeIElement::m(Scalar::zero(), zero2(), vec2i(0, 1)).matrix());
    }
    out
}

/// `m(i, j, k) = m(i,0,0) + m(0,j,0) + m(0,0,k)`, where `m(0,1,0)` carries only
/// `u = (u1, 0)`. Hence `m(1,1,2)` has dimension 4; the whole of `m` is [`m_full`].
pub fn m_subspace(i: u8, j: u8, k: u8) -> Result<LieMatrixAlgebra> {
    if i > 1 || j > 1 || k > 2 {
        return Err(Error::InvalidParameter(format!(
            "m({i},{j},{k}) needs i, j in {{0,1}} and k in {{0,1,2}}"
        )));
    }
    Ok(LieMatrixAlgebra::span_of(7, &m_basis(i, j, k)))
}

/// The nilradical `m = {h(0, v, u, y)}` of the Type I parabolic.
pub fn m_full() -> LieMatrixAlgebra {
    let mut b = m_basis(1, 1, 2);
    b.push(TypeIElement::m(Scalar::zero(), vec2i(0, 1), zero2()).matrix());
    LieMatrixAlgebra::span_of(7, &b)
}

fn n_basis(indices: &[u8]) -> Result<Vec<Matrix>> {
    let mut out = Vec::new();
    let mut seen = [false; 4];
    for &i in indices {
        if !(1..=4).contains(&i) || seen[(i - 1) as usize] {
            return Err(Error::InvalidParameter(format!(
                "n(...) indices must be distinct values in 1..=4, got {indices:?}"
            )));
        }
        seen[(i - 1) as usize] = true;
        let mut z = zero4();
        z[(i - 1) as usize] = Scalar::one();
        out.push(TypeIIElement::n(z, Scalar::zero()).matrix());
    }
    out.push(TypeIIElement::n(zero4(), Scalar::one()).matrix());
    Ok(out)
}

/// `n(i, j, ...) = {h(0, z, c) : z_l = 0 for l not listed}`; `n(1,2,3,4)` is `n`.
pub fn n_subspace(indices: &[u8]) -> Result<LieMatrixAlgebra> {
    Ok(LieMatrixAlgebra::span_of(7, &n_basis(indices)?))
}

/// `{h(0, z, c) : z in Z, c in R}` for a subspace `Z` of R^4.
pub fn n_over(z_space: &Subspace) -> LieMatrixAlgebra {
    let mut b: Vec<Matrix> = z_space
        .basis()
        .iter()
        .map(|z| TypeIIElement::n([z[0].clone(), z[1].clone(), z[2].clone(), z[3].clone()], Scalar::zero()).matrix())
        .collect();
    b.push(TypeIIElement::n(zero4(), Scalar::one()).matrix());
    LieMatrixAlgebra::span_of(7, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::ConventionName;
    use crate::g2star::{annihilates_omega, so_check};

    #[test]
    fn type1_sits_in_model_stabilizer() {
        let c1 = ConventionName::C1.get();
        for b in type1_basis() {
            assert!(annihilates_omega(c1, &b));
            assert!(so_check(c1, &b));
        }
        let p = type1_parabolic();
        assert_eq!(p.dim(), 9);
        assert!(p.is_closed());
    }

    #[test]
    fn type2_sits_in_type2_stabilizer() {
        let c2 = ConventionName::C2.get();
        for b in type2_basis() {
            assert!(annihilates_omega(c2, &b));
            assert!(so_check(c2, &b));
        }
        let p = type2_parabolic();
        assert_eq!(p.dim(), 9);
        assert!(p.is_closed());
    }

    #[test]
    fn m_brackets() {
        let hu1 = TypeIElement::m(Scalar::zero(), vec2i(1, 0), zero2()).matrix();
        let hu2 = TypeIElement::m(Scalar::zero(), vec2i(0, 1), zero2()).matrix();
        assert_eq!(hu1.commutator(&hu2), TypeIElement::m(2.into(), zero2(), zero2()).matrix());
        let hv = TypeIElement::m(1.into(), zero2(), zero2()).matrix();
        assert_eq!(hv.commutator(&hu1), TypeIElement::m(Scalar::zero(), zero2(), vec2i(-3, 0)).matrix());
    }

    #[test]
    fn eta_bracket() {
        let a = TypeIIElement::n(vec4i(1, 0, 0, 0), Scalar::zero()).matrix();
        let b = TypeIIElement::n(vec4i(0, 0, 0, 1), Scalar::zero()).matrix();
        assert_eq!(a.commutator(&b), TypeIIElement::n(zero4(), (-1).into()).matrix());
        assert!(TypeIIElement::zero().matrix().is_zero());
        assert!(TypeIElement::zero().matrix().is_zero());
    }

    #[test]
    fn subspaces() {
        assert_eq!(m_subspace(0, 0, 0).unwrap().dim(), 0);
        assert_eq!(m_subspace(1, 1, 2).unwrap().dim(), 4);
        assert_eq!(m_full().dim(), 5);
        assert_eq!(n_subspace(&[1, 3]).unwrap().dim(), 3);
        assert_eq!(n_subspace(&[1, 2, 3, 4]).unwrap().dim(), 5);
        assert!(m_subspace(2, 0, 0).is_err());
        assert!(n_subspace(&[1, 5]).is_err());
        assert_eq!(m_full().nilpotency_step(), Some(3));
        assert_eq!(n_subspace(&[1, 2, 3, 4]).unwrap().nilpotency_step(), Some(2));
    }

    #[test]
    fn readback() {
        let e = TypeIElement::new(mat2i(1, 2, 3, 4), 5.into(), vec2i(6, 7), vec2i(8, 9));
        assert_eq!(TypeIElement::from_matrix(&e.matrix()).unwrap(), e);
        let f = TypeIIElement::new(mat2i(1, 2, 3, 4), vec4i(5, 6, 7, 8), 9.into());
        assert_eq!(TypeIIElement::from_matrix(&f.matrix()).unwrap(), f);
        assert!(TypeIElement::from_matrix(&f.matrix()).is_err());
    }
}
