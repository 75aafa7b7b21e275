//! The GL(2) representation on R^4, its exterior powers, and the polynomial
//! models used to normalize the Type II subspaces `Z`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use super::family::Vec4;
use crate::error::{Error, Result};
use crate::KForm;
use crate::scalar::Scalar;
use crate::Matrix;

/// Infinitesimal action of gl(2) on R^4, extended linearly from
/// `I.z = z`, `H.z = (-3z1, -z2, z3, 3z4)`, `X.z = (0, z1, 2z2, 3z3)`,
/// `Y.z = (3z2, 2z3, z4, 0)`.
pub fn gl2_on_r4(a: &Matrix, z: &Vec4) -> Vec4 {
    let half = Scalar::ratio(1, 2);
    let ci = &half * &(&a[(0, 0)] + &a[(1, 1)]);
    let ch = &half * &(&a[(0, 0)] - &a[(1, 1)]);
    let cx = &a[(0, 1)];
    let cy = &a[(1, 0)];
    let s = Scalar::from_int;
    let h = [-(s(3) * z[0].clone()), -z[1].clone(), z[2].clone(), s(3) * z[3].clone()];
    let x = [Scalar::zero(), z[0].clone(), s(2) * z[1].clone(), s(3) * z[2].clone()];
    let y = [s(3) * z[1].clone(), s(2) * z[2].clone(), z[3].clone(), Scalar::zero()];
    std::array::from_fn(|i| &ci * &z[i] + &ch * &h[i] + cx * &x[i] + cy * &y[i])
}

/// Factor of a `GL(2)` element: `Upper(t) = [[1,t],[0,1]]`, `Lower(t) = [[1,0],[t,1]]`,
/// `Diag(p, q) = diag(p, q)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Gl2Factor {
    Upper(Scalar),
    Lower(Scalar),
    Diag(Scalar, Scalar),
}

impl Gl2Factor {
    pub fn matrix(&self) -> Matrix {
        let (o, z) = (Scalar::one, Scalar::zero);
        let rows = match self {
            Gl2Factor::Upper(t) => vec![vec![o(), t.clone()], vec![z(), o()]],
            Gl2Factor::Lower(t) => vec![vec![o(), z()], vec![t.clone(), o()]],
            Gl2Factor::Diag(p, q) => vec![vec![p.clone(), z()], vec![z(), q.clone()]],
        };
        Matrix::from_rows(rows)
    }

    /// Writes `g` as a product of factors (left to right).
    pub fn decompose(g: &Matrix) -> Result<Vec<Gl2Factor>> {
        let det = g.det();
        if det.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = g[(0, 0)].clone();
        if p.is_zero() {
            let shifted = &Gl2Factor::Upper(-Scalar::one()).matrix() * g;
            let mut out = vec![Gl2Factor::Upper(Scalar::one())];
            out.extend(Self::decompose(&shifted)?);
            return Ok(out);
        }
        let pi = p.inverse()?;
        Ok(vec![
            Gl2Factor::Lower(&g[(1, 0)] * &pi),
            Gl2Factor::Diag(p.clone(), &det * &pi),
            Gl2Factor::Upper(&g[(0, 1)] * &pi),
        ])
    }

    fn act(&self, z: &Vec4) -> Result<Vec4> {
        let s = Scalar::from_int;
        Ok(match self {
            Gl2Factor::Diag(a, d) => {
                let ai = a.inverse()?;
                let di = d.inverse()?;
                [
                    &(d * d) * &(&ai * &z[0]),
                    d * &z[1],
                    a * &z[2],
                    &(a * a) * &(&di * &z[3]),
                ]
            }
            Gl2Factor::Upper(t) => {
                let t2 = t * t;
                let t3 = &t2 * t;
                [
                    z[0].clone(),
                    &z[1] + &(t * &z[0]),
                    &z[2] + &(s(2) * t.clone() * z[1].clone()) + &t2 * &z[0],
                    &z[3] + &(s(3) * t.clone() * z[2].clone()) + s(3) * t2 * z[1].clone() + &t3 * &z[0],
                ]
            }
            Gl2Factor::Lower(t) => {
                let t2 = t * t;
                let t3 = &t2 * t;
                [
                    &z[0] + &(s(3) * t.clone() * z[1].clone()) + s(3) * t2.clone() * z[2].clone() + &t3 * &z[3],
                    &z[1] + &(s(2) * t.clone() * z[2].clone()) + &t2 * &z[3],
                    &z[2] + &(t * &z[3]),
                    z[3].clone(),
                ]
            }
        })
    }
}

/// The integrated `GL(2)` action on R^4 (with `diag(1,-1).z = (z1,-z2,z3,-z4)`).
pub fn group_on_r4(g: &Matrix, z: &Vec4) -> Result<Vec4> {
    let mut out = z.clone();
    for f in Gl2Factor::decompose(g)?.iter().rev() {
        out = f.act(&out)?;
    }
    Ok(out)
}

/// 4x4 matrix of `z -> g.z`.
pub fn group_matrix_r4(g: &Matrix) -> Result<Matrix> {
    let mut cols = Vec::with_capacity(4);
    for i in 0..4 {
        let mut e: Vec4 = std::array::from_fn(|_| Scalar::zero());
        e[i] = Scalar::one();
        cols.push(group_on_r4(g, &e)?.to_vec());
    }
    Ok(Matrix::from_cols(&cols))
}

/// Binary form of degree `d`; `coeffs[k]` is the coefficient of `x^k y^(d-k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    pub coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `x^k y^(d-k)`.
    pub fn monomial(d: usize, k: usize) -> Self {
        let mut c = vec![Scalar::zero(); d + 1];
        c[k] = Scalar::one();
        BinaryForm { coeffs: c }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut c = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        BinaryForm { coeffs: c }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// `(A.p)(x, y) = p((x, y) A) = p(a1 x + a3 y, a2 x + a4 y)`.
    pub fn act(&self, a: &Matrix) -> Self {
        let d = self.degree();
        // linear forms as [coeff of y, coeff of x]
        let lx = BinaryForm { coeffs: vec![a[(1, 0)].clone(), a[(0, 0)].clone()] };
        let ly = BinaryForm { coeffs: vec![a[(1, 1)].clone(), a[(0, 1)].clone()] };
        let mut out = BinaryForm { coeffs: vec![Scalar::zero(); d + 1] };
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = BinaryForm { coeffs: vec![c.clone()] };
            for _ in 0..k {
                term = term.mul(&lx);
            }
            for _ in 0..d - k {
                term = term.mul(&ly);
            }
            for i in 0..=d {
                out.coeffs[i] = &out.coeffs[i] + &term.coeffs[i];
            }
        }
        out
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match (k, d - k) {
                (0, 0) => String::new(),
                (a, 0) => pow("x", a),
                (0, b) => pow("y", b),
                (a, b) => format!("{} {}", pow("x", a), pow("y", b)),
            };
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(m) if c.is_rational() || c.rat.is_zero() => (true, m.to_string()),
                _ => (false, cs.clone()),
            };
            let mag = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else if c.is_rational() || c.rat.is_zero() {
                format!("{mag} {mono}")
            } else {
                format!("({mag}) {mono}")
            };
            match (first, neg) {
                (true, true) => write!(f, "-{mag}")?,
                (true, false) => write!(f, "{mag}")?,
                (false, true) => write!(f, " - {mag}")?,
                (false, false) => write!(f, " + {mag}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn pow(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// `phi1(z) = z1 y^3 + 3 z2 x y^2 + 3 z3 x^2 y + z4 x^3`.
pub fn phi1(z: &Vec4) -> BinaryForm {
    let three = Scalar::from_int(3);
    BinaryForm::new(vec![z[0].clone(), &three * &z[1], &three * &z[2], z[3].clone()])
}

/// `lambda1^{-1}(B) = B / cbrt(det B)`; `None` when the cube root leaves Q(sqrt 2).
pub fn lambda1_inv(b: &Matrix) -> Option<Matrix> {
    let c = b.det().cbrt()?;
    Some(b.scale(&c.inverse().ok()?))
}

/// `lambda2^{-1}(B) = B / (sgn(det B) |det B|^(1/4))`; `None` outside Q(sqrt 2).
pub fn lambda2_inv(b: &Matrix) -> Option<Matrix> {
    let d = b.det();
    let r = d.abs().sqrt()?.sqrt()?;
    let r = if d.sign() < 0 { -r } else { r };
    Some(b.scale(&r.inverse().ok()?))
}

/// The 1-vector `sum v_i e_i` as a degree-1 element of the exterior algebra.
pub fn vector_form(v: &[Scalar]) -> KForm {
    KForm::from_terms(1, v.len(), v.iter().enumerate().map(|(i, c)| (vec![i], c.clone())))
}

/// Induced action of a linear map (matrix acting on R^n) on a k-vector.
pub fn exterior_action(m: &Matrix, w: &KForm) -> KForm {
    let n = w.dim();
    let images: Vec<KForm> = (0..n).map(|i| vector_form(&m.col(i))).collect();
    let mut out = KForm::zero(w.degree(), n);
    for (idx, c) in w.terms() {
        let mut t = KForm::from_terms(0, n, [(vec![], c.clone())]);
        for &i in idx {
            t = t.wedge(&images[i]);
        }
        out = out.add(&t);
    }
    out
}

/// Group action of `g` on a k-vector of R^4.
pub fn group_on_exterior(g: &Matrix, w: &KForm) -> Result<KForm> {
    Ok(exterior_action(&group_matrix_r4(g)?, w))
}

/// Coordinates of a 2-vector of R^4 in the basis `(w0, e12, e13, w', e24, e34)`,
/// with `w0 = e23 - 3 e14` and `w' = e23 + 3 e14`.
pub fn w_coords(u: &KForm) -> [Scalar; 6] {
    assert_eq!((u.degree(), u.dim()), (2, 4));
    let c = |i: usize, j: usize| u.coeff(&[i, j]);
    let half = Scalar::ratio(1, 2);
    let third = Scalar::ratio(1, 3);
    let c14_3 = &c(0, 3) * &third;
    let t_prime = &half * &(&c(1, 2) + &c14_3);
    let t0 = &half * &(&c(1, 2) - &c14_3);
    [t0, c(0, 1), c(0, 2), t_prime, c(1, 3), c(2, 3)]
}

/// Inverse of [`w_coords`].
pub fn from_w_coords(w: &[Scalar; 6]) -> KForm {
    let three = Scalar::from_int(3);
    let (t0, tp) = (&w[0], &w[3]);
    KForm::from_terms(
        2,
        4,
        [
            (vec![1, 2], t0 + tp),
            (vec![0, 3], &three * &(tp - t0)),
            (vec![0, 1], w[1].clone()),
            (vec![0, 2], w[2].clone()),
            (vec![1, 3], w[4].clone()),
            (vec![2, 3], w[5].clone()),
        ],
    )
}

/// `phi2` on `W'`: `e12 -> y^4, e13 -> 2xy^3, w' -> 6x^2y^2, e24 -> 2x^3y, e34 -> x^4`.
pub fn phi2(u: &KForm) -> Result<BinaryForm> {
    let [t0, z12, z13, tp, z24, z34] = w_coords(u);
    if !t0.is_zero() {
        return Err(Error::HasW0Component);
    }
    let s = Scalar::from_int;
    Ok(BinaryForm::new(vec![z12, s(2) * z13, s(6) * tp, s(2) * z24, z34]))
}

/// `Phi3: e123 -> y^3, e124 -> xy^2, e134 -> x^2y, e234 -> x^3`.
pub fn phi3(w: &KForm) -> BinaryForm {
    assert_eq!((w.degree(), w.dim()), (3, 4));
    BinaryForm::new(vec![
        w.coeff(&[0, 1, 2]),
        w.coeff(&[0, 1, 3]),
        w.coeff(&[0, 2, 3]),
        w.coeff(&[1, 2, 3]),
    ])
}

/// Whether the 2-vector with coordinates `(t0, z12, z13, t', z24, z34)` is
/// decomposable: `z12 z34 - z13 z24 = 3 (t0^2 - t'^2)`.
pub fn plucker_decomposable(w: &[Scalar; 6]) -> bool {
    let lhs = &w[1] * &w[5] - &w[2] * &w[4];
    let rhs = Scalar::from_int(3) * (&w[0] * &w[0] - &w[3] * &w[3]);
    lhs == rhs
}

/// Point of the projective line in homogeneous coordinates `[a : b]` (value `a/b`).
#[derive(Clone, Debug, PartialEq)]
pub struct ProjPoint(pub Scalar, pub Scalar);

impl ProjPoint {
    pub fn finite(z: Scalar) -> Self {
        ProjPoint(z, Scalar::one())
    }

    pub fn infinity() -> Self {
        ProjPoint(Scalar::one(), Scalar::zero())
    }
}

fn pdiff(p: &ProjPoint, q: &ProjPoint) -> Scalar {
    &p.0 * &q.1 - &q.0 * &p.1
}

/// All cross-ratios `((zi-zk)/(zj-zk)) / ((zi-zl)/(zj-zl))` over orderings of
/// four distinct points.
pub fn cross_ratio_set(points: &[ProjPoint; 4]) -> Result<BTreeSet<Scalar>> {
    for i in 0..4 {
        if points[i].0.is_zero() && points[i].1.is_zero() {
            return Err(Error::InvalidParameter("[0 : 0] is not a projective point".into()));
        }
        for j in i + 1..4 {
            if pdiff(&points[i], &points[j]).is_zero() {
                return Err(Error::RepeatedRoot);
            }
        }
    }
    let mut out = BTreeSet::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let set = [i, j, k, l];
                    if (0..4).any(|a| (a + 1..4).any(|b| set[a] == set[b])) {
                        continue;
                    }
                    let (pi, pj, pk, pl) = (&points[i], &points[j], &points[k], &points[l]);
                    let num = pdiff(pi, pk) * pdiff(pj, pl);
                    let den = pdiff(pj, pk) * pdiff(pi, pl);
                    out.insert(&num * &den.inverse()?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::family::{mat2i, sigma, vec4i, rho};
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn generator_actions() {
        let z = vec4i(1, 1, 1, 1);
        assert_eq!(gl2_on_r4(&mat2i(1, 0, 0, -1), &z), vec4i(-3, -1, 1, 3));
        assert_eq!(gl2_on_r4(&mat2i(0, 1, 0, 0), &vec4i(1, 0, 0, 0)), vec4i(0, 1, 0, 0));
        assert_eq!(gl2_on_r4(&Matrix::identity(2), &vec4i(2, 3, 5, 7)), vec4i(2, 3, 5, 7));
        assert_eq!(gl2_on_r4(&mat2i(0, 0, 1, 0), &vec4i(1, 2, 3, 4)), vec4i(6, 6, 4, 0));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn r4_action_matches_sigma(a in proptest::array::uniform4(-4i64..=4), z in proptest::array::uniform4(-4i64..=4)) {
            let am = mat2i(a[0], a[1], a[2], a[3]);
            let zv = vec4i(z[0], z[1], z[2], z[3]);
            let lhs = sigma(&gl2_on_r4(&am, &zv));
            let rhs = &(&am * &sigma(&zv)) - &(&sigma(&zv) * &rho(&am));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn group_action_is_a_homomorphism(g in proptest::array::uniform4(-3i64..=3), h in proptest::array::uniform4(-3i64..=3), z in proptest::array::uniform4(-3i64..=3)) {
            let gm = mat2i(g[0], g[1], g[2], g[3]);
            let hm = mat2i(h[0], h[1], h[2], h[3]);
            prop_assume!(!gm.det().is_zero() && !hm.det().is_zero());
            let zv = vec4i(z[0], z[1], z[2], z[3]);
            let lhs = group_on_r4(&(&gm * &hm), &zv).unwrap();
            let rhs = group_on_r4(&gm, &group_on_r4(&hm, &zv).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binary_form_action_is_right_action_of_products(
            g in proptest::array::uniform4(-3i64..=3), h in proptest::array::uniform4(-3i64..=3),
            p in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let gm = mat2i(g[0], g[1], g[2], g[3]);
            let hm = mat2i(h[0], h[1], h[2], h[3]);
            let f = BinaryForm::new(p.into_iter().map(s).collect());
            // p((x,y) g h) = (h.p)((x,y) g) = g.(h.p)
            prop_assert_eq!(f.act(&(&gm * &hm)), f.act(&hm).act(&gm));
        }
    }

    #[test]
    fn decomposition_reassembles() {
        for g in [mat2i(2, 1, 1, 1), mat2i(0, 1, -1, 0), mat2i(0, 2, 3, 5), mat2i(-1, 0, 0, 1)] {
            let prod = Gl2Factor::decompose(&g)
                .unwrap()
                .iter()
                .fold(Matrix::identity(2), |acc, f| &acc * &f.matrix());
            assert_eq!(prod, g);
        }
        assert!(Gl2Factor::decompose(&mat2i(1, 2, 2, 4)).is_err());
        assert_eq!(group_on_r4(&mat2i(1, 0, 0, -1), &vec4i(1, 2, 3, 4)).unwrap(), vec4i(1, -2, 3, -4));
    }

    /// Generators with `|det|` a fourth power in Q(sqrt 2), so both twists stay exact.
    fn generators() -> Vec<Matrix> {
        vec![
            mat2i(1, 0, 0, 1),
            mat2i(1, 0, 0, -1),
            mat2i(2, 0, 0, 8),
            mat2i(4, 0, 0, 4),
            mat2i(1, 3, 0, 1),
            mat2i(1, 0, -2, 1),
            mat2i(0, 1, -1, 0),
            mat2i(2, 1, 1, 1),
            mat2i(0, 1, 1, 0),
        ]
    }

    #[test]
    fn phi1_equivariance() {
        assert_eq!(phi1(&vec4i(1, 0, 0, 0)), BinaryForm::monomial(3, 0));
        for g in generators() {
            let Some(li) = lambda1_inv(&g) else { continue };
            for z in [vec4i(1, 0, 0, 0), vec4i(0, 1, 0, 0), vec4i(1, -2, 3, 5)] {
                assert_eq!(phi1(&group_on_r4(&g, &z).unwrap()), phi1(&z).act(&li), "g = {g}");
            }
        }
    }

    fn bivector(pairs: &[((usize, usize), i64)]) -> KForm {
        KForm::from_terms(2, 4, pairs.iter().map(|&((i, j), c)| (vec![i, j], s(c))))
    }

    #[test]
    fn phi2_equivariance_and_invariant_subspaces() {
        let w0 = from_w_coords(&[s(1), s(0), s(0), s(0), s(0), s(0)]);
        assert_eq!(w0, bivector(&[((1, 2), 1), ((0, 3), -3)]));
        assert_eq!(phi2(&bivector(&[((0, 1), 1)])).unwrap(), BinaryForm::monomial(4, 0));
        assert!(matches!(phi2(&w0), Err(Error::HasW0Component)));
        let samples = [
            bivector(&[((0, 1), 1)]),
            bivector(&[((1, 2), 1), ((0, 3), 3)]),
            bivector(&[((0, 2), 2), ((1, 3), -1), ((2, 3), 5)]),
        ];
        for g in generators() {
            let w0g = group_on_exterior(&g, &w0).unwrap();
            let c = w_coords(&w0g);
            assert!(c[1..].iter().all(|x| x.is_zero()), "W0 not invariant under {g}");
            let Some(li) = lambda2_inv(&g) else { continue };
            let sgn = s(g.det().sign() as i64);
            for u in &samples {
                let gu = group_on_exterior(&g, u).unwrap();
                assert!(w_coords(&gu)[0].is_zero(), "W' not invariant under {g}");
                assert_eq!(phi2(&gu).unwrap(), phi2(u).unwrap().act(&li).scale(&sgn), "g = {g}");
            }
        }
    }

    #[test]
    fn phi3_equivariance() {
        let e = |i: usize, j: usize, k: usize| KForm::from_terms(3, 4, [(vec![i, j, k], s(1))]);
        assert_eq!(phi3(&e(0, 1, 2)), BinaryForm::monomial(3, 0));
        let sample = e(0, 1, 3).add(&e(1, 2, 3).scale(&s(-2))).add(&e(0, 2, 3));
        for g in generators() {
            for w in [e(0, 1, 2), e(1, 2, 3), sample.clone()] {
                let gw = group_on_exterior(&g, &w).unwrap();
                assert_eq!(phi3(&gw), phi3(&w).act(&g), "g = {g}");
            }
        }
    }

    #[test]
    fn plucker() {
        let e12 = bivector(&[((0, 1), 1)]);
        assert!(plucker_decomposable(&w_coords(&e12)));
        assert!(!plucker_decomposable(&[s(1), s(0), s(0), s(0), s(0), s(0)]));
        let e14_23 = bivector(&[((0, 3), 1), ((1, 2), 1)]);
        assert!(!plucker_decomposable(&w_coords(&e14_23)));
        assert!(!e14_23.wedge(&e14_23).is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn plucker_matches_self_wedge(c in proptest::array::uniform6(-2i64..=2)) {
            let u = bivector(&[((0, 1), c[0]), ((0, 2), c[1]), ((0, 3), c[2]), ((1, 2), c[3]), ((1, 3), c[4]), ((2, 3), c[5])]);
            prop_assert_eq!(plucker_decomposable(&w_coords(&u)), u.wedge(&u).is_zero());
            prop_assert_eq!(from_w_coords(&w_coords(&u)), u);
        }
    }

    fn expected_cr(q: &Scalar) -> BTreeSet<Scalar> {
        let q2 = q * q;
        let one = Scalar::one();
        let a = &one - &q2;
        let b = &one - &q2.inverse().unwrap();
        [q2.clone(), q2.inverse().unwrap(), a.clone(), a.inverse().unwrap(), b.clone(), b.inverse().unwrap()]
            .into_iter()
            .collect()
    }

    #[test]
    fn cross_ratios_of_normal_form() {
        for q in [Scalar::ratio(1, 2), Scalar::ratio(3, 4), Scalar::quad(0, 1, 1, 2), Scalar::quad(1, 1, -1, 4)] {
            let pts = [
                ProjPoint::finite(Scalar::zero()),
                ProjPoint::infinity(),
                ProjPoint::finite(-q.clone()),
                ProjPoint::finite(-q.inverse().unwrap()),
            ];
            let cr = cross_ratio_set(&pts).unwrap();
            assert_eq!(cr, expected_cr(&q), "q = {q}");
        }
        let q = Scalar::quad(0, 1, 1, 2);
        let pts = [
            ProjPoint::finite(Scalar::zero()),
            ProjPoint::infinity(),
            ProjPoint::finite(-q.clone()),
            ProjPoint::finite(-q.inverse().unwrap()),
        ];
        let half = Scalar::ratio(1, 2);
        let cr = cross_ratio_set(&pts).unwrap();
        assert!(cr.iter().all(|c| !(c > &half && c < &Scalar::one())));
    }

    #[test]
    fn cross_ratio_invariance_and_errors() {
        let pts = [
            ProjPoint::finite(s(0)),
            ProjPoint::finite(s(1)),
            ProjPoint::finite(s(3)),
            ProjPoint::infinity(),
        ];
        let base = cross_ratio_set(&pts).unwrap();
        // Moebius map z -> (2z + 1) / (z + 1)
        let moved: Vec<ProjPoint> = pts
            .iter()
            .map(|p| ProjPoint(&s(2) * &p.0 + p.1.clone(), p.0.clone() + p.1.clone()))
            .collect();
        let moved: [ProjPoint; 4] = moved.try_into().unwrap();
        assert_eq!(cross_ratio_set(&moved).unwrap(), base);
        let rev = [pts[3].clone(), pts[2].clone(), pts[1].clone(), pts[0].clone()];
        assert_eq!(cross_ratio_set(&rev).unwrap(), base);
        let dup = [pts[0].clone(), pts[0].clone(), pts[1].clone(), pts[2].clone()];
        assert!(matches!(cross_ratio_set(&dup), Err(Error::RepeatedRoot)));
        assert_eq!(BinaryForm::new(vec![s(1), s(-3), s(0)]).to_string(), "-3 x y + y^2");
    }
}
