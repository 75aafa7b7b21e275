//! GL(2) embeddings into the group and closed-form adjoint actions.

use num_traits::{One, Zero};

use super::family::{eta, theta, u_block, TypeIElement, TypeIIElement, Vec2, Vec4};
use super::invariants::{gl2_on_r4, group_on_r4, Gl2Factor};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Matrix;

/// `exp(m)` for a nilpotent matrix, as the finite power series; `None` if `m`
/// is not nilpotent.
pub fn exp_nilpotent(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = (&term * m).scale(&Scalar::ratio(1, k as i64));
        if term.is_zero() {
            return Some(out);
        }
        out = &out + &term;
    }
    None
}

pub fn conjugate(g: &Matrix, x: &Matrix) -> Result<Matrix> {
    let gi = g.inverse().ok_or(Error::DivisionByZero)?;
    Ok(&(g * x) * &gi)
}

fn mul2(a: &Matrix, v: &Vec2) -> Vec2 {
    [
        &a[(0, 0)] * &v[0] + &a[(0, 1)] * &v[1],
        &a[(1, 0)] * &v[0] + &a[(1, 1)] * &v[1],
    ]
}

fn sub2(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn scale2(s: &Scalar, a: &Vec2) -> Vec2 {
    [s * &a[0], s * &a[1]]
}

/// The Type I embedding `g -> diag(det g, g, 1, 1/det g, g^{-T})`.
pub fn embed_gl2_type1(g: &Matrix) -> Result<Matrix> {
    let det = g.det();
    let det_inv = det.inverse()?;
    let git = g.inverse().ok_or(Error::DivisionByZero)?.transpose();
    let mut m = Matrix::zeros(7, 7);
    m.set_block(0, 0, &Matrix::from_rows(vec![vec![det]]));
    m.set_block(1, 1, g);
    m.set_block(3, 3, &Matrix::identity(1));
    m.set_block(4, 4, &Matrix::from_rows(vec![vec![det_inv]]));
    m.set_block(5, 5, &git);
    Ok(m)
}

/// `Ad(g) h(A, v, u, y) = h(gAg^-1, det(g) v, g u, det(g) g y)`.
pub fn ad_gl2_type1(g: &Matrix, x: &TypeIElement) -> Result<TypeIElement> {
    let det = g.det();
    let gi = g.inverse().ok_or(Error::DivisionByZero)?;
    Ok(TypeIElement::new(
        &(g * &x.a) * &gi,
        &det * &x.v,
        mul2(g, &x.u),
        scale2(&det, &mul2(g, &x.y)),
    ))
}

/// The 3x3 middle block of the Type II embedding.
pub fn middle_block(g: &Matrix) -> Result<Matrix> {
    let r2 = Scalar::sqrt2();
    let mut out = Matrix::identity(3);
    for f in Gl2Factor::decompose(g)? {
        let m = match &f {
            Gl2Factor::Upper(t) => Matrix::from_rows(vec![
                vec![Scalar::one(), -(&r2 * t), t * t],
                vec![Scalar::zero(), Scalar::one(), -(&r2 * t)],
                vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            ]),
            Gl2Factor::Lower(t) => Matrix::from_rows(vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![-(&r2 * t), Scalar::one(), Scalar::zero()],
                vec![t * t, -(&r2 * t), Scalar::one()],
            ]),
            Gl2Factor::Diag(p, q) => {
                let pq = p * &q.inverse()?;
                let qp = q * &p.inverse()?;
                Matrix::from_rows(vec![
                    vec![pq, Scalar::zero(), Scalar::zero()],
                    vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
                    vec![Scalar::zero(), Scalar::zero(), qp],
                ])
            }
        };
        out = &out * &m;
    }
    Ok(out)
}

/// The Type II embedding `g -> blockdiag(g, R(g), g^{-T})`; on `diag(1,-1)` it is
/// `diag(1,-1,-1,1,-1,1,-1)`.
pub fn embed_gl2_type2(g: &Matrix) -> Result<Matrix> {
    let git = g.inverse().ok_or(Error::DivisionByZero)?.transpose();
    let mut m = Matrix::zeros(7, 7);
    m.set_block(0, 0, g);
    m.set_block(2, 2, &middle_block(g)?);
    m.set_block(5, 5, &git);
    Ok(m)
}

/// `Ad(g) h(A, z, c) = h(gAg^-1, g.z, det(g) c)`.
pub fn ad_gl2_type2(g: &Matrix, x: &TypeIIElement) -> Result<TypeIIElement> {
    let gi = g.inverse().ok_or(Error::DivisionByZero)?;
    Ok(TypeIIElement::new(
        &(g * &x.a) * &gi,
        group_on_r4(g, &x.z)?,
        g.det() * x.c.clone(),
    ))
}

/// `Ad(exp h(0, vb, 0, 0))`.
pub fn ad_exp_v(vb: &Scalar, x: &TypeIElement) -> TypeIElement {
    let three = Scalar::from_int(3);
    TypeIElement::new(
        x.a.clone(),
        &x.v - &(x.a.trace() * vb.clone()),
        x.u.clone(),
        sub2(&x.y, &scale2(&(&three * vb), &x.u)),
    )
}

/// `Ad(exp h(0, 0, ub, 0))`.
pub fn ad_exp_u(ub: &Vec2, x: &TypeIElement) -> TypeIElement {
    let two = Scalar::from_int(2);
    let three = Scalar::from_int(3);
    let t_uu = theta(&x.u, ub);
    let aub = mul2(&x.a, ub);
    let t_ua = theta(ub, &aub);
    let v = &x.v - &(&two * &t_uu) - t_ua.clone();
    let coef = &three * &x.v - &three * &t_uu - t_ua;
    let y = [&x.y[0] + &(&coef * &ub[0]), &x.y[1] + &(&coef * &ub[1])];
    TypeIElement::new(x.a.clone(), v, sub2(&x.u, &aub), y)
}

/// `Ad(exp h(0, 0, 0, yb))`.
pub fn ad_exp_y(yb: &Vec2, x: &TypeIElement) -> TypeIElement {
    let shifted = &x.a + &Matrix::identity(2).scale(&x.a.trace());
    TypeIElement::new(x.a.clone(), x.v.clone(), x.u.clone(), sub2(&x.y, &mul2(&shifted, yb)))
}

/// `Ad(exp h(0, zb, 0))`.
pub fn ad_exp_z(zb: &Vec4, x: &TypeIIElement) -> TypeIIElement {
    let az = gl2_on_r4(&x.a, zb);
    let half = Scalar::ratio(1, 2);
    let c = &x.c - &eta(&x.z, zb) - &half * &eta(zb, &az);
    let z = [&x.z[0] - &az[0], &x.z[1] - &az[1], &x.z[2] - &az[2], &x.z[3] - &az[3]];
    TypeIIElement::new(x.a.clone(), z, c)
}

/// `Ad(exp h(0, 0, cb)) h(A, z, c) = h(A, z, c - tr(A) cb)`.
pub fn ad_exp_c(cb: &Scalar, x: &TypeIIElement) -> TypeIIElement {
    TypeIIElement::new(x.a.clone(), x.z.clone(), &x.c - &(x.a.trace() * cb.clone()))
}

/// The nilpotent direction for [`ad_exp_nilpotent`].
#[derive(Clone, Debug, PartialEq)]
pub enum Nilpotent {
    V(Scalar),
    U(Vec2),
    Y(Vec2),
    Z(Vec4),
    C(Scalar),
}

/// Element of either parabolic.
#[derive(Clone, Debug, PartialEq)]
pub enum ParabolicElement {
    I(TypeIElement),
    II(TypeIIElement),
}

impl ParabolicElement {
    pub fn matrix(&self) -> Matrix {
        match self {
            ParabolicElement::I(e) => e.matrix(),
            ParabolicElement::II(e) => e.matrix(),
        }
    }
}

/// Closed-form `Ad(exp n) x` for the listed nilpotent directions.
pub fn ad_exp_nilpotent(n: &Nilpotent, x: &ParabolicElement) -> Result<ParabolicElement> {
    use ParabolicElement as P;
    Ok(match (n, x) {
        (Nilpotent::V(v), P::I(e)) => P::I(ad_exp_v(v, e)),
        (Nilpotent::U(u), P::I(e)) => P::I(ad_exp_u(u, e)),
        (Nilpotent::Y(y), P::I(e)) => P::I(ad_exp_y(y, e)),
        (Nilpotent::Z(z), P::II(e)) => P::II(ad_exp_z(z, e)),
        (Nilpotent::C(c), P::II(e)) => P::II(ad_exp_c(c, e)),
        _ => {
            return Err(Error::InvalidParameter(
                "nilpotent direction and element belong to different families".into(),
            ))
        }
    })
}

/// Matrix of the nilpotent direction in its family.
pub fn nilpotent_matrix(n: &Nilpotent) -> Matrix {
    let z2 = || [Scalar::zero(), Scalar::zero()];
    match n {
        Nilpotent::V(v) => TypeIElement::m(v.clone(), z2(), z2()).matrix(),
        Nilpotent::U(u) => TypeIElement::m(Scalar::zero(), u.clone(), z2()).matrix(),
        Nilpotent::Y(y) => TypeIElement::m(Scalar::zero(), z2(), y.clone()).matrix(),
        Nilpotent::Z(z) => TypeIIElement::n(z.clone(), Scalar::zero()).matrix(),
        Nilpotent::C(c) => {
            let mut m = Matrix::zeros(7, 7);
            m.set_block(0, 5, &u_block(c));
            m
        }
    }
}
