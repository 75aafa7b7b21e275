//! Named subalgebras of gl(2, R).

use num_traits::{One, Zero};

use super::family::{mat2, mat2i};
use crate::error::{Error, Result};
use crate::g2star::LieMatrixAlgebra;
use crate::scalar::Scalar;
use crate::Matrix;

/// `C_a = [[a, -1], [1, a]]`.
pub fn c_a(a: &Scalar) -> Matrix {
    mat2(a.clone(), -Scalar::one(), Scalar::one(), a.clone())
}

/// `S = [[1, 1], [0, 1]]`.
pub fn s_mat() -> Matrix {
    mat2i(1, 1, 0, 1)
}

/// `N = [[0, 1], [0, 0]]`.
pub fn n_mat() -> Matrix {
    mat2i(0, 1, 0, 0)
}

pub fn diag(a: Scalar, d: Scalar) -> Matrix {
    mat2(a, Scalar::zero(), Scalar::zero(), d)
}

/// Names accepted by [`gl2_subalgebra`], with the parameter each one needs.
pub const GL2_NAMES: &[(&str, Option<&str>)] = &[
    ("0", None),
    ("sl2", None),
    ("gl2", None),
    ("u1", None),
    ("b2", None),
    ("b2hat", None),
    ("d", None),
    ("Ca", Some("a")),
    ("S", None),
    ("N", None),
    ("s", Some("lambda")),
    ("diag1mu", Some("mu")),
    ("I", None),
];

/// The named subalgebra of gl(2, R) as a span of 2x2 matrices.
pub fn gl2_subalgebra(name: &str, param: Option<&Scalar>) -> Result<LieMatrixAlgebra> {
    let need = GL2_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            available: GL2_NAMES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "),
        })?
        .1;
    let p = match (need, param) {
        (Some(_), Some(p)) => Some(p.clone()),
        (Some(k), None) => {
            return Err(Error::InvalidParameter(format!("{name} needs parameter {k}")))
        }
        (None, Some(_)) => {
            return Err(Error::InvalidParameter(format!("{name} takes no parameter")))
        }
        (None, None) => None,
    };
    let span: Vec<Matrix> = match name {
        "0" => vec![],
        "sl2" => vec![mat2i(1, 0, 0, -1), n_mat(), mat2i(0, 0, 1, 0)],
        "gl2" => vec![mat2i(1, 0, 0, 0), mat2i(0, 1, 0, 0), mat2i(0, 0, 1, 0), mat2i(0, 0, 0, 1)],
        "u1" => vec![Matrix::identity(2), mat2i(0, -1, 1, 0)],
        "b2" => vec![mat2i(1, 0, 0, 0), n_mat(), mat2i(0, 0, 0, 1)],
        "b2hat" => vec![Matrix::identity(2), n_mat()],
        "d" => vec![mat2i(1, 0, 0, 0), mat2i(0, 0, 0, 1)],
        "Ca" => vec![c_a(p.as_ref().unwrap())],
        "S" => vec![s_mat()],
        "N" => vec![n_mat()],
        "s" => {
            let l = p.unwrap();
            vec![diag(l.clone(), l - Scalar::one()), n_mat()]
        }
        "diag1mu" => vec![diag(Scalar::one(), p.unwrap())],
        "I" => vec![Matrix::identity(2)],
        _ => unreachable!(),
    };
    Ok(LieMatrixAlgebra::span_of(2, &span))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_closure() {
        let cases: &[(&str, Option<Scalar>, usize)] = &[
            ("0", None, 0),
            ("sl2", None, 3),
            ("gl2", None, 4),
            ("u1", None, 2),
            ("b2", None, 3),
            ("b2hat", None, 2),
            ("d", None, 2),
            ("Ca", Some(Scalar::from_int(3)), 1),
            ("S", None, 1),
            ("N", None, 1),
            ("s", Some(Scalar::ratio(1, 2)), 2),
            ("diag1mu", Some(Scalar::from_int(-1)), 1),
            ("I", None, 1),
        ];
        for (name, p, dim) in cases {
            let a = gl2_subalgebra(name, p.as_ref()).unwrap();
            assert_eq!(a.dim(), *dim, "{name}");
            assert!(a.is_closed(), "{name}");
        }
    }

    #[test]
    fn u1_contents() {
        let u = gl2_subalgebra("u1", None).unwrap();
        assert!(u.contains(&Matrix::identity(2)));
        assert!(u.contains(&mat2i(0, -1, 1, 0)));
        assert!(!u.contains(&n_mat()));
    }

    #[test]
    fn s_lambda_bracket() {
        for l in [-1, 0, 2, 5] {
            let x = diag(Scalar::from_int(l), Scalar::from_int(l - 1));
            assert_eq!(x.commutator(&n_mat()), n_mat());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(gl2_subalgebra("foo", None), Err(Error::UnknownName { .. })));
        assert!(gl2_subalgebra("Ca", None).is_err());
        assert!(gl2_subalgebra("sl2", Some(&Scalar::one())).is_err());
    }
}
