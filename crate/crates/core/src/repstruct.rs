//! Structure of a holonomy representation: socle, type, indecomposability,
//! and the invariant subspaces read off the two parabolic families.

use std::fmt;

use num_traits::{One, Zero};

use crate::catalog::family::{m_full, m_subspace, n_subspace, type1_parabolic, type2_parabolic};
use crate::catalog::{TypeIElement, TypeIIElement};
use crate::error::{Error, Result};
use crate::g2star::{flatten, unflatten, LieMatrixAlgebra};
use crate::scalar::Scalar;
use crate::{Matrix, Subspace};

/// Type of a subalgebra by the dimension of its socle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HolonomyType {
    I,
    II,
    III,
    Irreducible,
    None,
}

impl fmt::Display for HolonomyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HolonomyType::I => "I",
            HolonomyType::II => "II",
            HolonomyType::III => "III",
            HolonomyType::Irreducible => "irreducible",
            HolonomyType::None => "none",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// Indecomposability verdict with its witness.
#[derive(Clone, Debug)]
pub struct Indecomposability {
    pub verdict: Verdict,
    pub commutant_dim: usize,
    /// Dimension of the gram-self-adjoint part of the commutant.
    pub self_adjoint_dim: usize,
    /// For "no": a self-adjoint idempotent `p` in the commutant, giving the
    /// orthogonal splitting `im p + ker p`.
    pub idempotent: Option<Matrix>,
}

#[derive(Clone, Debug)]
pub struct RepReport {
    pub socle: Subspace,
    pub socle_dim: usize,
    pub socle_isotropic: bool,
    pub holonomy_type: HolonomyType,
    pub envelope_dim: usize,
    pub radical_dim: usize,
    pub indecomposable: Verdict,
    pub commutant_dim: usize,
    pub idempotent: Option<Matrix>,
}

/// The matrix of a linear map on `n x n` matrices, in flattened coordinates.
fn map_matrix(n: usize, f: impl Fn(&Matrix) -> Matrix) -> Matrix {
    let cols: Vec<Vec<Scalar>> = (0..n * n)
        .map(|k| flatten(&f(&Matrix::unit(n, k / n, k % n))))
        .collect();
    Matrix::from_cols(&cols)
}

fn to_mats(n: usize, s: &Subspace) -> Vec<Matrix> {
    s.basis().iter().map(|v| unflatten(n, v)).collect()
}

/// The unital associative algebra generated by `gens`, as a span of matrices.
pub fn associative_envelope(n: usize, gens: &[Matrix]) -> Subspace {
    let mut span = Subspace::span(n * n, &[flatten(&Matrix::identity(n))]);
    let mut frontier = to_mats(n, &span);
    while !frontier.is_empty() {
        let products: Vec<Vec<Scalar>> = gens
            .iter()
            .flat_map(|g| frontier.iter().map(move |x| flatten(&(g * x))))
            .collect();
        let next = span.extend(&products);
        frontier = if next.dim() > span.dim() {
            to_mats(n, &next)
        } else {
            Vec::new()
        };
        span = next;
    }
    span
}

/// Radical of a matrix algebra: the kernel of its trace form.
pub fn trace_radical(n: usize, algebra: &Subspace) -> Subspace {
    let basis = to_mats(n, algebra);
    let d = basis.len();
    if d == 0 {
        return Subspace::zero(n * n);
    }
    let rows: Vec<Vec<Scalar>> = (0..d)
        .map(|i| (0..d).map(|j| (&basis[i] * &basis[j]).trace()).collect())
        .collect();
    let ker = Matrix::from_rows(rows).kernel();
    let vecs: Vec<Vec<Scalar>> = ker
        .basis()
        .iter()
        .map(|c| {
            flatten(&c.iter().zip(&basis).fold(Matrix::zeros(n, n), |acc, (x, b)| &acc + &b.scale(x)))
        })
        .collect();
    Subspace::span(n * n, &vecs)
}

fn joint_kernel(n: usize, mats: &[Matrix]) -> Subspace {
    if mats.is_empty() {
        return Subspace::full(n);
    }
    let stacked = mats[1..].iter().fold(mats[0].clone(), |acc, m| acc.vstack(m));
    stacked.kernel()
}

/// The socle: vectors killed by the radical of the associative envelope.
pub fn socle(h: &LieMatrixAlgebra) -> Subspace {
    let n = h.ambient_dim();
    let env = associative_envelope(n, &h.basis());
    joint_kernel(n, &to_mats(n, &trace_radical(n, &env)))
}

fn adjoint(gram: &Matrix, gram_inv: &Matrix, x: &Matrix) -> Matrix {
    &(gram_inv * &x.transpose()) * gram
}

/// `{X : [X, B] = 0 for every basis element B of h}`.
pub fn commutant(h: &LieMatrixAlgebra) -> Subspace {
    let n = h.ambient_dim();
    let basis = h.basis();
    if basis.is_empty() {
        return Subspace::full(n * n);
    }
    let maps: Vec<Matrix> = basis.iter().map(|b| map_matrix(n, |x| x.commutator(b))).collect();
    let stacked = maps[1..].iter().fold(maps[0].clone(), |acc, m| acc.vstack(m));
    stacked.kernel()
}

fn self_adjoint_part(n: usize, c: &Subspace, gram: &Matrix, gram_inv: &Matrix) -> Subspace {
    let cm = to_mats(n, c);
    if cm.is_empty() {
        return Subspace::zero(n * n);
    }
    // Coordinates k with sum k_i (C_i - C_i^*) = 0.
    let cols: Vec<Vec<Scalar>> = cm.iter().map(|x| flatten(&(x - &adjoint(gram, gram_inv, x)))).collect();
    let ker = Matrix::from_cols(&cols).kernel();
    let vecs: Vec<Vec<Scalar>> = ker
        .basis()
        .iter()
        .map(|k| flatten(&k.iter().zip(&cm).fold(Matrix::zeros(n, n), |acc, (x, b)| &acc + &b.scale(x))))
        .collect();
    Subspace::span(n * n, &vecs)
}

fn mat_pow(x: &Matrix, e: usize) -> Matrix {
    (0..e).fold(Matrix::identity(x.rows()), |acc, _| &acc * x)
}

/// Projection onto the generalized `lambda`-eigenspace of `x` along the
/// complementary Fitting component, if both are nonzero.
fn fitting_projection(x: &Matrix, lambda: &Scalar) -> Option<Matrix> {
    let n = x.rows();
    let shifted = x - &Matrix::identity(n).scale(lambda);
    let big = mat_pow(&shifted, n);
    let ker = big.kernel();
    if ker.dim() == 0 || ker.dim() == n {
        return None;
    }
    let image = Subspace::span(n, &(0..n).map(|j| big.col(j)).collect::<Vec<_>>());
    let mut cols: Vec<Vec<Scalar>> = ker.basis().to_vec();
    cols.extend(image.basis().iter().cloned());
    let q = Matrix::from_cols(&cols);
    let qi = q.inverse()?;
    let mut d = Matrix::zeros(n, n);
    for i in 0..ker.dim() {
        d[(i, i)] = Scalar::one();
    }
    Some(&(&q * &d) * &qi)
}

fn candidate_eigenvalues() -> Vec<Scalar> {
    let mut out = vec![Scalar::zero()];
    for c in [
        Scalar::one(),
        Scalar::from_int(2),
        Scalar::from_int(3),
        Scalar::ratio(1, 2),
        Scalar::ratio(1, 3),
        Scalar::sqrt2(),
        Scalar::quad(0, 1, 1, 2),
    ] {
        out.push(-c.clone());
        out.push(c);
    }
    out
}

/// Decides whether `h` leaves a proper non-degenerate subspace invariant.
///
/// "yes" is certified when every self-adjoint element of the commutant lies
/// in `R 1 + rad(C)`: an idempotent there is `0` or `1`. "no" is certified by
/// a self-adjoint idempotent found as a Fitting projection of some
/// self-adjoint commutant element. Otherwise the verdict is "undetermined".
pub fn indecomposable(h: &LieMatrixAlgebra, gram: &Matrix) -> Indecomposability {
    let n = h.ambient_dim();
    let gram_inv = gram.inverse().expect("gram is non-degenerate");
    let c = commutant(h);
    let sa = self_adjoint_part(n, &c, gram, &gram_inv);
    let rad_c = trace_radical(n, &c);
    let scalars_plus_rad = rad_c.extend(&[flatten(&Matrix::identity(n))]);
    let mut out = Indecomposability {
        verdict: Verdict::Undetermined,
        commutant_dim: c.dim(),
        self_adjoint_dim: sa.dim(),
        idempotent: None,
    };
    if sa.basis().iter().all(|v| scalars_plus_rad.contains(v)) {
        out.verdict = Verdict::Yes;
        return out;
    }
    let sa_mats = to_mats(n, &sa);
    let mut trials = sa_mats.clone();
    for i in 0..sa_mats.len() {
        for j in i + 1..sa_mats.len() {
            trials.push(&sa_mats[i] + &sa_mats[j]);
        }
    }
    for x in &trials {
        for lambda in candidate_eigenvalues() {
            if let Some(p) = fitting_projection(x, &lambda) {
                let is_idem = &p * &p == p;
                let in_c = c.contains(&flatten(&p));
                let is_sa = adjoint(gram, &gram_inv, &p) == p;
                if is_idem && in_c && is_sa {
                    out.verdict = Verdict::No;
                    out.idempotent = Some(p);
                    return out;
                }
            }
        }
    }
    out
}

fn is_isotropic(gram: &Matrix, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter().all(|x| b.iter().all(|y| crate::linalg::bilinear(gram, x, y).is_zero()))
}

pub fn holonomy_type(h: &LieMatrixAlgebra, gram: &Matrix) -> RepReport {
    let n = h.ambient_dim();
    let env = associative_envelope(n, &h.basis());
    let rad = trace_radical(n, &env);
    let soc = joint_kernel(n, &to_mats(n, &rad));
    let ty = if rad.dim() == 0 && env.dim() == n * n {
        HolonomyType::Irreducible
    } else {
        match soc.dim() {
            1 => HolonomyType::I,
            2 => HolonomyType::II,
            3 => HolonomyType::III,
            _ => HolonomyType::None,
        }
    };
    let ind = indecomposable(h, gram);
    RepReport {
        socle_dim: soc.dim(),
        socle_isotropic: is_isotropic(gram, &soc),
        socle: soc,
        holonomy_type: ty,
        envelope_dim: env.dim(),
        radical_dim: rad.dim(),
        indecomposable: ind.verdict,
        commutant_dim: ind.commutant_dim,
        idempotent: ind.idempotent,
    }
}

/// The subspaces `a`, `u`, `v`, `y` of a subalgebra of the Type I parabolic.
#[derive(Clone, Debug)]
pub struct TypeIInvariants {
    /// Projection to the gl(2) block, as 2x2 matrices.
    pub a: LieMatrixAlgebra,
    /// `{u : h(0, v, u, y) in h for some v, y}`.
    pub u: Subspace,
    /// `{v : h(0, v, 0, y) in h for some y}`.
    pub v: Subspace,
    /// `{y : h(0, 0, 0, y) in h}`.
    pub y: Subspace,
}

fn meet(h: &LieMatrixAlgebra, other: &LieMatrixAlgebra) -> Vec<Matrix> {
    let s = h.span().intersect(other.span()).expect("same ambient");
    to_mats(h.ambient_dim(), &s)
}

pub fn extract_invariants_type1(h: &LieMatrixAlgebra) -> Result<TypeIInvariants> {
    if !h.is_subalgebra_of(&type1_parabolic()) {
        return Err(Error::NotInFamily("algebra is not inside the Type I parabolic".into()));
    }
    let elems = |ms: Vec<Matrix>| -> Result<Vec<TypeIElement>> {
        ms.iter().map(TypeIElement::from_matrix).collect()
    };
    let all = elems(h.basis())?;
    let a = LieMatrixAlgebra::span_of(2, &all.iter().map(|e| e.a.clone()).collect::<Vec<_>>());
    let in_m = elems(meet(h, &m_full()))?;
    let u = Subspace::span(2, &in_m.iter().map(|e| e.u.to_vec()).collect::<Vec<_>>());
    let in_vy = elems(meet(h, &m_subspace(1, 0, 2)?))?;
    let v = Subspace::span(1, &in_vy.iter().map(|e| vec![e.v.clone()]).collect::<Vec<_>>());
    let in_y = elems(meet(h, &m_subspace(0, 0, 2)?))?;
    let y = Subspace::span(2, &in_y.iter().map(|e| e.y.to_vec()).collect::<Vec<_>>());
    Ok(TypeIInvariants { a, u, v, y })
}

/// `Z = {z : h(0, z, c) in h for some c}` for a subalgebra of the Type II parabolic.
pub fn extract_z_type2(h: &LieMatrixAlgebra) -> Result<Subspace> {
    if !h.is_subalgebra_of(&type2_parabolic()) {
        return Err(Error::NotInFamily("algebra is not inside the Type II parabolic".into()));
    }
    let in_n: Vec<TypeIIElement> = meet(h, &n_subspace(&[1, 2, 3, 4])?)
        .iter()
        .map(TypeIIElement::from_matrix)
        .collect::<Result<_>>()?;
    Ok(Subspace::span(4, &in_n.iter().map(|e| e.z.to_vec()).collect::<Vec<_>>()))
}

/// The gl(2) block of a subalgebra of the Type II parabolic.
pub fn extract_a_type2(h: &LieMatrixAlgebra) -> Result<LieMatrixAlgebra> {
    let mats = h
        .basis()
        .iter()
        .map(|m| TypeIIElement::from_matrix(m).map(|e| e.a))
        .collect::<Result<Vec<_>>>()?;
    Ok(LieMatrixAlgebra::span_of(2, &mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::family::{n_subspace, vec2i};
    use crate::catalog::invariants::gl2_on_r4;
    use crate::catalog::{entry, gl2::gl2_subalgebra};
    use crate::exterior::ConventionName;

    fn c1() -> &'static Matrix {
        &ConventionName::C1.get().gram
    }

    #[test]
    fn zero_algebra() {
        let z = LieMatrixAlgebra::zero(7);
        assert_eq!(socle(&z).dim(), 7);
        let r = holonomy_type(&z, c1());
        assert_eq!(r.holonomy_type, HolonomyType::None);
        assert_eq!(r.indecomposable, Verdict::No);
    }

    #[test]
    fn parabolics() {
        let r1 = holonomy_type(&type1_parabolic(), c1());
        assert_eq!((r1.socle_dim, r1.holonomy_type), (1, HolonomyType::I));
        assert_eq!(r1.socle.basis()[0], crate::linalg::unit_vec(7, 0));
        assert_eq!(r1.indecomposable, Verdict::Yes);
        let r2 = holonomy_type(&type2_parabolic(), &ConventionName::C2.get().gram);
        assert_eq!((r2.socle_dim, r2.holonomy_type), (2, HolonomyType::II));
        assert_eq!(r2.indecomposable, Verdict::Yes);
        assert!(r1.socle_isotropic && r2.socle_isotropic);
    }

    #[test]
    fn full_g2_is_irreducible() {
        let g2 = crate::g2star::stabilizer_algebra(ConventionName::C1.get());
        let r = holonomy_type(&g2, c1());
        assert_eq!(r.holonomy_type, HolonomyType::Irreducible);
        assert_eq!(r.indecomposable, Verdict::Yes);
    }

    #[test]
    fn block_diagonal_splits() {
        let mut g = Matrix::identity(7);
        for i in 4..7 {
            g[(i, i)] = -Scalar::one();
        }
        let so3: Vec<Matrix> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| &Matrix::unit(7, i, j) - &Matrix::unit(7, j, i))
            .collect();
        let h = LieMatrixAlgebra::span_of(7, &so3);
        let ind = indecomposable(&h, &g);
        assert_eq!(ind.verdict, Verdict::No);
        let p = ind.idempotent.unwrap();
        assert_eq!(&p * &p, p);
        assert!(h.basis().iter().all(|b| &p * b == b * &p));
    }

    #[test]
    fn socle_is_invariant_and_killed_by_radical() {
        for id in ["T1.1-a0", "T1.2b", "T3.2-a0-k2", "T2.5-a0-n13", "T2.1-sl2"] {
            let h = entry(id).unwrap().algebra;
            let soc = socle(&h);
            for b in h.basis() {
                for v in soc.basis() {
                    assert!(soc.contains(&b.mul_vec(v)), "{id}");
                }
            }
            let n = 7;
            let rad = trace_radical(n, &associative_envelope(n, &h.basis()));
            for r in to_mats(n, &rad) {
                assert!(soc.basis().iter().all(|v| r.mul_vec(v).iter().all(|x| x.is_zero())));
            }
        }
    }

    #[test]
    fn types_of_sample_entries() {
        let cases = [
            ("T3.2-a0-k2", HolonomyType::III, 3),
            ("T2.5-a0-n13", HolonomyType::II, 2),
            ("T1.1-a0", HolonomyType::I, 1),
        ];
        for (id, ty, d) in cases {
            let e = entry(id).unwrap();
            let r = holonomy_type(&e.algebra, &e.convention.get().gram);
            assert_eq!((r.holonomy_type, r.socle_dim), (ty, d), "{id}");
        }
    }

    #[test]
    fn type1_extraction() {
        let m = extract_invariants_type1(&m_full()).unwrap();
        assert_eq!((m.a.dim(), m.u.dim(), m.v.dim(), m.y.dim()), (0, 2, 1, 2));
        let e = extract_invariants_type1(&m_subspace(1, 0, 2).unwrap()).unwrap();
        assert_eq!(e.u.dim(), 0);
        let b = extract_invariants_type1(&entry("T1.2b").unwrap().algebra).unwrap();
        assert_eq!(b.a.span(), gl2_subalgebra("s", Some(&Scalar::one())).unwrap().span());
        assert_eq!(b.u, Subspace::span(2, &[vec2i(1, 0).to_vec()]));
        assert!(extract_invariants_type1(&type2_parabolic()).is_err());
    }

    #[test]
    fn type2_extraction() {
        assert_eq!(extract_z_type2(&n_subspace(&[1, 2, 3, 4]).unwrap()).unwrap().dim(), 4);
        let z13 = extract_z_type2(&n_subspace(&[1, 3]).unwrap()).unwrap();
        assert_eq!(z13, Subspace::span(4, &[vec![1.into(), 0.into(), 0.into(), 0.into()], vec![0.into(), 0.into(), 1.into(), 0.into()]]));
        let z2 = extract_z_type2(&entry("T2.2-u1-Z2").unwrap().algebra).unwrap();
        let s = |a: i64, b: i64, c: i64, d: i64| vec![Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c), Scalar::from_int(d)];
        assert_eq!(z2, Subspace::span(4, &[s(3, 0, 1, 0), s(0, 1, 0, 3)]));
        assert!(extract_z_type2(&type1_parabolic()).is_err());
    }

    #[test]
    fn z_invariant_under_a() {
        for e in crate::catalog::theorem_entries(crate::catalog::Theorem::TypeII) {
            let z = extract_z_type2(&e.algebra).unwrap();
            let a = extract_a_type2(&e.algebra).unwrap();
            for x in a.basis() {
                for v in z.basis() {
                    let w = gl2_on_r4(&x, &[v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]);
                    assert!(z.contains(&w), "{}", e.id);
                }
            }
        }
    }
}
