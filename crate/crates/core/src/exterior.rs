//! Alternating forms, the three basis conventions for (omega, g), and the cross
//! product they induce.
//!
//! Forms are evaluated with the determinant convention:
//! `(b^j ^ b^k)(x, y) = b^j(x) b^k(y) - b^j(y) b^k(x)`, no `1/k!` factors.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bilinear, unit_vec, Field, Matrix, Subspace};
use crate::scalar::Scalar;

/// Sign of the permutation sorting `idx`, or `None` if an index repeats.
pub fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = idx.to_vec();
    let mut sign = 1i8;
    if v.len() < 2 {
        return Some((v, sign));
    }
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            match v[j].cmp(&v[j + 1]) {
                std::cmp::Ordering::Greater => {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Alternating k-form on `F^dim`, keyed by strictly increasing index tuples.
#[derive(Clone, PartialEq)]
pub struct KForm<F> {
    degree: usize,
    dim: usize,
    terms: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> KForm<F> {
    pub fn zero(degree: usize, dim: usize) -> Self {
        KForm {
            degree,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The basis covector `b^i` (0-based).
    pub fn basis1(dim: usize, i: usize) -> Self {
        Self::from_terms(1, dim, [(vec![i], F::one())])
    }

    /// Builds a form from possibly unsorted index tuples; repeated indices vanish.
    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, F)>>(degree: usize, dim: usize, it: I) -> Self {
        let mut f = Self::zero(degree, dim);
        for (idx, c) in it {
            f.add_term(&idx, c);
        }
        f
    }

    pub fn add_term(&mut self, idx: &[usize], c: F) {
        assert_eq!(idx.len(), self.degree);
        assert!(idx.iter().all(|&i| i < self.dim));
        let Some((key, sign)) = sort_sign(idx) else {
            return;
        };
        let c = if sign < 0 { -c } else { c };
        let e = self.terms.entry(key.clone()).or_insert_with(F::zero);
        *e = e.clone() + &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, F> {
        &self.terms
    }

    pub fn coeff(&self, sorted_idx: &[usize]) -> F {
        self.terms.get(sorted_idx).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(
            self.degree,
            self.dim,
            self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.dim), (other.degree, other.dim));
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.degree + other.degree, self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend(b);
                out.add_term(&idx, x.clone() * y);
            }
        }
        out
    }

    /// Evaluates on `degree` vectors.
    pub fn evaluate(&self, vectors: &[Vec<F>]) -> Result<F> {
        if vectors.len() != self.degree {
            return Err(Error::Arity {
                degree: self.degree,
                got: vectors.len(),
            });
        }
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut acc = F::zero();
        for (idx, c) in &self.terms {
            let minor = Matrix::from_rows(
                vectors
                    .iter()
                    .map(|v| idx.iter().map(|&i| v[i].clone()).collect())
                    .collect(),
            );
            let d = minor.det();
            if !d.is_zero() {
                acc = acc + &(c.clone() * &d);
            }
        }
        Ok(acc)
    }

    /// Image of the form under the derivation action of `a`:
    /// `(a . f)(x_1, ..., x_k) = - sum_i f(x_1, ..., a x_i, ..., x_k)`.
    pub fn derivation(&self, a: &Matrix<F>) -> Self {
        assert_eq!((a.rows(), a.cols()), (self.dim, self.dim));
        let mut out = Self::zero(self.degree, self.dim);
        // b^i o a = sum_j a_ij b^j, so replacing one slot of each term suffices.
        for (idx, c) in &self.terms {
            for slot in 0..self.degree {
                let i = idx[slot];
                for j in 0..self.dim {
                    let aij = &a[(i, j)];
                    if aij.is_zero() {
                        continue;
                    }
                    let mut nidx = idx.clone();
                    nidx[slot] = j;
                    out.add_term(&nidx, -(c.clone() * aij));
                }
            }
        }
        out
    }

    /// Matrix of `vec(a) |-> a . f` from row-major flattened `dim x dim`
    /// matrices to coefficient vectors over sorted index tuples.
    pub fn derivation_map(&self) -> Matrix<F> {
        let n = self.dim;
        let keys = index_tuples(n, self.degree);
        let pos: BTreeMap<&Vec<usize>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut m = Matrix::zeros(keys.len(), n * n);
        for r in 0..n {
            for c in 0..n {
                let img = self.derivation(&Matrix::unit(n, r, c));
                for (k, v) in img.terms {
                    m[(pos[&k], r * n + c)] = v;
                }
            }
        }
        m
    }
}

/// All strictly increasing `k`-tuples from `0..n`, in lexicographic order.
pub fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Prints in `b^{ijk}` notation with 1-based indices.
impl<F: Field> fmt::Display for KForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            let name: String = idx.iter().map(|i| (i + 1).to_string()).collect();
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let coeff = if body == "1" {
                String::new()
            } else if body.contains(" + ") || body.contains(" - ") {
                format!("({body}) ")
            } else {
                format!("{body} ")
            };
            match (n, neg) {
                (0, false) => write!(f, "{coeff}b^{{{name}}}")?,
                (0, true) => write!(f, "-{coeff}b^{{{name}}}")?,
                (_, false) => write!(f, " + {coeff}b^{{{name}}}")?,
                (_, true) => write!(f, " - {coeff}b^{{{name}}}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for KForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which of the three fixed bases a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConventionName {
    /// The model basis: metric `2(b1 b5 + b2 b6 + b3 b7) - (b4)^2`.
    C1,
    /// The Type II basis: metric `2(b1 b6 + b2 b7 + b3 b5) - (b4)^2`.
    C2,
    /// The header form printed with the Type I/III left-invariant examples.
    C3,
}

impl ConventionName {
    pub fn all() -> [ConventionName; 3] {
        [ConventionName::C1, ConventionName::C2, ConventionName::C3]
    }

    pub fn get(self) -> &'static Convention {
        static CACHE: OnceLock<[Convention; 3]> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            [
                Convention::build(ConventionName::C1),
                Convention::build(ConventionName::C2),
                Convention::build(ConventionName::C3),
            ]
        });
        &all[self as usize]
    }
}

impl fmt::Display for ConventionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for ConventionName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "C1" | "c1" => Ok(ConventionName::C1),
            "C2" | "c2" => Ok(ConventionName::C2),
            "C3" | "c3" => Ok(ConventionName::C3),
            other => Err(Error::UnknownName {
                name: other.to_string(),
                available: "C1, C2, C3".to_string(),
            }),
        }
    }
}

/// A generic 3-form together with its metric, in one fixed basis.
#[derive(Clone, Debug)]
pub struct Convention {
    pub name: ConventionName,
    pub omega: KForm<Scalar>,
    pub gram: Matrix<Scalar>,
    gram_inv: Matrix<Scalar>,
}

fn b3(i: usize, j: usize, k: usize) -> Vec<usize> {
    vec![i - 1, j - 1, k - 1]
}

fn split_gram(pairs: [(usize, usize); 3]) -> Matrix<Scalar> {
    let mut g = Matrix::zeros(7, 7);
    for (i, j) in pairs {
        g[(i - 1, j - 1)] = Scalar::one();
        g[(j - 1, i - 1)] = Scalar::one();
    }
    g[(3, 3)] = -Scalar::one();
    g
}

impl Convention {
    fn build(name: ConventionName) -> Self {
        let r2 = Scalar::sqrt2;
        let one = Scalar::one;
        let (terms, gram) = match name {
            // r2 (b167 + b235) - b4 ^ (b15 - b26 - b37)
            ConventionName::C1 => (
                vec![
                    (b3(1, 6, 7), r2()),
                    (b3(2, 3, 5), r2()),
                    (b3(4, 1, 5), -one()),
                    (b3(4, 2, 6), one()),
                    (b3(4, 3, 7), one()),
                ],
                split_gram([(1, 5), (2, 6), (3, 7)]),
            ),
            // r2 (-b157 + b236) - b4 ^ (b16 - b27 - b35)
            ConventionName::C2 => (
                vec![
                    (b3(1, 5, 7), -r2()),
                    (b3(2, 3, 6), r2()),
                    (b3(4, 1, 6), -one()),
                    (b3(4, 2, 7), one()),
                    (b3(4, 3, 5), one()),
                ],
                split_gram([(1, 6), (2, 7), (3, 5)]),
            ),
            // r2 (b127 + b356) - b4 ^ (b15 + b26 - b37)
            ConventionName::C3 => (
                vec![
                    (b3(1, 2, 7), r2()),
                    (b3(3, 5, 6), r2()),
                    (b3(4, 1, 5), -one()),
                    (b3(4, 2, 6), -one()),
                    (b3(4, 3, 7), one()),
                ],
                split_gram([(1, 5), (2, 6), (3, 7)]),
            ),
        };
        let omega = KForm::from_terms(3, 7, terms);
        let gram_inv = gram.inverse().expect("gram is nondegenerate");
        Convention {
            name,
            omega,
            gram,
            gram_inv,
        }
    }

    pub fn inner(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        bilinear(&self.gram, u, v)
    }

    /// The vector `x` with `<x, w> = omega(u, v, w)` for all `w`.
    pub fn cross(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let rhs: Vec<Scalar> = (0..7)
            .map(|w| {
                self.omega
                    .evaluate(&[u.to_vec(), v.to_vec(), unit_vec(7, w)])
                    .expect("arity 3")
            })
            .collect();
        self.gram_inv.mul_vec(&rhs)
    }

    /// `{v : v x b = 0}`.
    pub fn hat_e(&self, b: &[Scalar]) -> Subspace<Scalar> {
        let cols: Vec<Vec<Scalar>> = (0..7).map(|i| self.cross(&unit_vec(7, i), b)).collect();
        Matrix::from_cols(&cols).kernel()
    }

    /// Whether the Gram matrix vanishes on the subspace.
    pub fn is_isotropic(&self, s: &Subspace<Scalar>) -> bool {
        s.basis()
            .iter()
            .all(|u| s.basis().iter().all(|v| self.inner(u, v).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Vec<Scalar> {
        unit_vec(7, i - 1)
    }

    #[test]
    fn wedge_conventions() {
        let b1 = KForm::<Scalar>::basis1(7, 0);
        let b2 = KForm::<Scalar>::basis1(7, 1);
        assert!(b1.wedge(&b1).is_zero());
        assert_eq!(b1.wedge(&b2).evaluate(&[e(1), e(2)]).unwrap(), Scalar::one());
        assert_eq!(b2.wedge(&b1), b1.wedge(&b2).scale(&-Scalar::one()));
        assert!(b1.evaluate(&[e(1), e(2)]).is_err());
    }

    #[test]
    fn omega_values() {
        let c1 = ConventionName::C1.get();
        assert_eq!(c1.omega.evaluate(&[e(1), e(6), e(7)]).unwrap(), Scalar::sqrt2());
        assert!(c1.omega.evaluate(&[e(1), e(2), e(3)]).unwrap().is_zero());
        assert!(c1.omega.evaluate(&[e(2), e(5), e(2)]).unwrap().is_zero());
        assert_eq!(
            c1.omega.to_string(),
            "b^{145} + r2 b^{167} + r2 b^{235} - b^{246} - b^{347}"
        );
    }

    #[test]
    fn cross_examples() {
        let c1 = ConventionName::C1.get();
        assert!(c1.cross(&e(1), &e(2)).iter().all(|x| x.is_zero()));
        let v = c1.cross(&e(1), &e(6));
        let mut want = vec![Scalar::zero(); 7];
        want[2] = Scalar::sqrt2();
        assert_eq!(v, want);
    }

    #[test]
    fn hat_e_of_isotropic_line() {
        let c1 = ConventionName::C1.get();
        let h = c1.hat_e(&e(1));
        assert_eq!(h.dim(), 3);
        assert!(h.contains(&e(1)));
        assert!(c1.is_isotropic(&h));
        let h4 = c1.hat_e(&e(4));
        assert!(h4.dim() < 3 || !c1.is_isotropic(&h4));
    }

    #[test]
    fn tuples() {
        assert_eq!(index_tuples(7, 3).len(), 35);
        assert_eq!(sort_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_sign(&[1, 0, 2]), Some((vec![0, 1, 2], -1)));
        assert_eq!(sort_sign(&[1, 1]), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn form(k: usize) -> impl Strategy<Value = KForm<Scalar>> {
            let keys = index_tuples(5, k);
            proptest::collection::vec((-2i64..=2, -1i64..=1), keys.len()).prop_map(move |cs| {
                KForm::from_terms(k, 5, keys.iter().cloned().zip(cs).map(|(idx, (a, b))| (idx, Scalar::quad(a, 1, b, 1))))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn wedge_is_associative(a in form(1), b in form(2), c in form(1)) {
                prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
            }

            #[test]
            fn wedge_is_graded_commutative(a in form(1), b in form(2), c in form(1)) {
                prop_assert_eq!(a.wedge(&b), b.wedge(&a));
                prop_assert_eq!(a.wedge(&c), c.wedge(&a).scale(&-Scalar::one()));
            }

            #[test]
            fn derivation_is_a_lie_action(x in proptest::collection::vec(-2i64..=2, 25), y in proptest::collection::vec(-2i64..=2, 25), f in form(2)) {
                // [x, y] . f = x . (y . f) - y . (x . f)
                let m = |v: &Vec<i64>| Matrix::from_flat(5, 5, v.iter().map(|&c| Scalar::from_int(c)).collect());
                let (x, y) = (m(&x), m(&y));
                let lhs = f.derivation(&x.commutator(&y));
                let rhs = f.derivation(&y).derivation(&x).add(&f.derivation(&x).derivation(&y).scale(&-Scalar::one()));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
