//! Left-invariant metrics on 7-dimensional Lie groups: structure equations,
//! Levi-Civita connection, curvature, parallel 3-form and holonomy.
//!
//! Conventions: `db^i = -sum_{j<k} c^i_jk b^jk` where `[b_j, b_k] = sum_i c^i_jk b_i`;
//! `R(x, y) = [nabla_x, nabla_y] - nabla_[x,y]`; `Lambda_j` is the matrix of
//! `nabla_{b_j}`, whose column `k` holds the coordinates of `nabla_{b_j} b_k`.

use std::fmt;

use num_traits::Zero;

use crate::berger::{pairs, CurvatureTensor};
use crate::catalog::{all_entries, CatalogEntry};
use crate::error::{Error, Result};
use crate::exterior::{sort_sign, ConventionName};
use crate::g2star::{annihilates_omega, flatten, is_skew_adjoint, lie_closure, unflatten, LieMatrixAlgebra};
use crate::linalg::bilinear;
use crate::scalar::Scalar;
use crate::text::{parse_b_endo, parse_b_indices, parse_linear};
use crate::{Matrix, Subspace};

/// Hard cap on covariant-derivative sweeps (dim so(4,3) = 21).
pub const SWEEP_CAP: usize = 21;

/// A Lie algebra given by structure constants, paired with a metric and 3-form.
#[derive(Clone, PartialEq)]
pub struct LiePresentation {
    pub dim: usize,
    pub convention: ConventionName,
    /// `c[j][k][i] = c^i_jk`, antisymmetric in `(j, k)`.
    c: Vec<Vec<Vec<Scalar>>>,
}

impl fmt::Debug for LiePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LiePresentation({}):\n{}", self.convention, self.structure_equations())
    }
}

impl LiePresentation {
    pub fn abelian(convention: ConventionName) -> Self {
        let n = 7;
        LiePresentation {
            dim: n,
            convention,
            c: vec![vec![vec![Scalar::zero(); n]; n]; n],
        }
    }

    /// `c^i_jk` (0-based).
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[j][k][i]
    }

    /// Sets `c^i_jk` and `c^i_kj = -c^i_jk`.
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert_ne!(j, k);
        self.c[k][j][i] = -v.clone();
        self.c[j][k][i] = v;
    }

    /// Coordinates of `[b_j, b_k]`.
    pub fn bracket_basis(&self, j: usize, k: usize) -> &[Scalar] {
        &self.c[j][k]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for j in 0..n {
            if x[j].is_zero() {
                continue;
            }
            for k in 0..n {
                if y[k].is_zero() || j == k {
                    continue;
                }
                let xy = &x[j] * &y[k];
                for (o, c) in out.iter_mut().zip(&self.c[j][k]) {
                    if !c.is_zero() {
                        *o += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    /// Nonzero structure constants as `(i, j, k, c^i_jk)` with `j < k`.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for (j, k) in pairs(n) {
                let c = &self.c[j][k][i];
                if !c.is_zero() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    /// The structure equations in the input syntax.
    pub fn structure_equations(&self) -> String {
        let n = self.dim;
        let mut lines = Vec::new();
        for i in 0..n {
            let terms: Vec<(Scalar, String)> = pairs(n)
                .into_iter()
                .map(|(j, k)| (-self.c[j][k][i].clone(), format!("b{}{}", j + 1, k + 1)))
                .collect();
            lines.push(format!("d b{} = {}", i + 1, format_terms(&terms)));
        }
        lines.join("\n")
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a structure-equation file. A `convention:` header is required
/// unless `convention` is supplied; a supplied value wins over the header.
pub fn parse_presentation(src: &str, convention: Option<ConventionName>) -> Result<LiePresentation> {
    let n = 7;
    let mut header: Option<ConventionName> = None;
    let mut p = LiePresentation::abelian(ConventionName::C1);
    let mut seen = [false; 7];
    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        let indent = code.len() - code.trim_start().len();
        if let Some(rest) = code.trim_start().strip_prefix("convention:") {
            let name: ConventionName = rest.trim().parse().map_err(|_| {
                parse_err(line_no, indent + 13, format!("unknown convention `{}` (expected C1, C2 or C3)", rest.trim()))
            })?;
            if header.replace(name).is_some() {
                return Err(parse_err(line_no, indent + 1, "duplicate convention header"));
            }
            continue;
        }
        let (lhs, rhs) = code
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, indent + 1, "expected `d b<i> = ...` or `convention: ...`"))?;
        let squashed: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
        let i = squashed
            .strip_prefix('d')
            .and_then(|b| parse_b_indices(b, n))
            .filter(|v| v.len() == 1)
            .map(|v| v[0])
            .ok_or_else(|| parse_err(line_no, indent + 1, format!("left side `{}` is not `d b<i>` with i in 1..=7", lhs.trim())))?;
        if seen[i] {
            return Err(parse_err(line_no, indent + 1, format!("d b{} given twice", i + 1)));
        }
        seen[i] = true;
        let atom = |s: &str| parse_b_indices(s, n).filter(|v| v.len() == 2);
        let e = parse_linear(rhs, line_no, lhs.len() + 2, &atom)?;
        if !e.constant.is_zero() {
            return Err(parse_err(line_no, lhs.len() + 2, "constant term in a 2-form"));
        }
        for (idx, coef) in e.terms {
            let (sorted, sign) = sort_sign(&idx).ok_or_else(|| {
                parse_err(line_no, lhs.len() + 2, format!("b{}{} has a repeated index", idx[0] + 1, idx[1] + 1))
            })?;
            let (j, k) = (sorted[0], sorted[1]);
            let signed = if sign < 0 { -coef } else { coef };
            // db^i = -c^i_jk b^jk
            let cur = p.c[j][k][i].clone();
            p.set_structure_constant(i, j, k, cur - signed);
        }
    }
    p.convention = convention
        .or(header)
        .ok_or_else(|| parse_err(1, 1, "missing `convention:` header"))?;
    Ok(p)
}

/// First basis triple `(i, j, k)` (0-based, `i < j < k`) violating Jacobi.
pub fn jacobi_check(p: &LiePresentation) -> Option<(usize, usize, usize)> {
    let n = p.dim;
    let e = |i: usize| crate::linalg::unit_vec::<Scalar>(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a = p.bracket(&p.bracket(&e(i), &e(j)), &e(k));
                let b = p.bracket(&p.bracket(&e(j), &e(k)), &e(i));
                let c = p.bracket(&p.bracket(&e(k), &e(i)), &e(j));
                if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Inertia `(negative, zero, positive)` of the presentation's metric.
pub fn metric_inertia(p: &LiePresentation) -> (usize, usize, usize) {
    p.convention.get().gram.signature().expect("gram is symmetric")
}

/// The Levi-Civita connection as `Lambda_j = nabla_{b_j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionTable {
    pub lambda: Vec<Matrix>,
}

/// Koszul formula: `2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>`.
pub fn koszul(p: &LiePresentation) -> ConnectionTable {
    let n = p.dim;
    let conv = p.convention.get();
    let g = &conv.gram;
    let gi = g.inverse().expect("gram is non-degenerate");
    let e = |i: usize| crate::linalg::unit_vec::<Scalar>(n, i);
    let ip = |u: &[Scalar], v: &[Scalar]| bilinear(g, u, v);
    let half = Scalar::ratio(1, 2);
    let lambda = (0..n)
        .map(|j| {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|k| {
                    let lower: Vec<Scalar> = (0..n)
                        .map(|l| {
                            let s = &(&ip(p.bracket_basis(j, k), &e(l)) - &ip(p.bracket_basis(k, l), &e(j)))
                                + &ip(p.bracket_basis(l, j), &e(k));
                            &s * &half
                        })
                        .collect();
                    gi.mul_vec(&lower)
                })
                .collect();
            Matrix::from_cols(&cols)
        })
        .collect();
    ConnectionTable { lambda }
}

impl ConnectionTable {
    /// First `j` with `Lambda_j` not skew-adjoint for the metric.
    pub fn metric_violation(&self, gram: &Matrix) -> Option<usize> {
        self.lambda.iter().position(|l| !is_skew_adjoint(gram, l))
    }

    /// First `(i, j)` with `nabla_{b_i} b_j - nabla_{b_j} b_i != [b_i, b_j]`.
    pub fn torsion_violation(&self, p: &LiePresentation) -> Option<(usize, usize)> {
        pairs(p.dim).into_iter().find(|&(i, j)| {
            let lhs: Vec<Scalar> = self.lambda[i].col(j).iter().zip(self.lambda[j].col(i)).map(|(a, b)| a - &b).collect();
            lhs != p.bracket_basis(i, j)
        })
    }
}

/// `R_ij = [Lambda_i, Lambda_j] - sum_k c^k_ij Lambda_k`.
pub fn curvature(ct: &ConnectionTable, p: &LiePresentation) -> CurvatureTensor {
    let n = p.dim;
    CurvatureTensor::from_fn(n, |i, j| {
        let mut r = ct.lambda[i].commutator(&ct.lambda[j]);
        for (k, c) in p.bracket_basis(i, j).iter().enumerate() {
            if !c.is_zero() {
                r = &r - &ct.lambda[k].scale(c);
            }
        }
        r
    })
}

/// `(nabla_m R)(b_i, b_j) = [Lambda_m, R_ij] - R(Lambda_m b_i, b_j) - R(b_i, Lambda_m b_j)`.
pub fn covariant_derivative(ct: &ConnectionTable, m: usize, r: &CurvatureTensor) -> CurvatureTensor {
    let n = r.dim();
    let lm = &ct.lambda[m];
    CurvatureTensor::from_fn(n, |i, j| {
        let mut out = lm.commutator(&r.get(i, j));
        for q in 0..n {
            let a = &lm[(q, i)];
            if !a.is_zero() {
                out = &out - &r.get(q, j).scale(a);
            }
            let b = &lm[(q, j)];
            if !b.is_zero() {
                out = &out - &r.get(i, q).scale(b);
            }
        }
        out
    })
}

/// First `j` whose `Lambda_j` does not annihilate the convention's 3-form.
pub fn parallel_form_check(ct: &ConnectionTable, conv: ConventionName) -> Option<usize> {
    let c = conv.get();
    ct.lambda.iter().position(|l| !annihilates_omega(c, l))
}

#[derive(Clone, Debug)]
pub struct HolonomyResult {
    pub algebra: LieMatrixAlgebra,
    /// Dimension of the curvature span.
    pub curvature_dim: usize,
    /// Sweeps that enlarged the span (0 when the curvature span is already the answer).
    pub generations: usize,
    pub matched_catalog: Option<String>,
}

fn values_of(t: &CurvatureTensor) -> Vec<Vec<Scalar>> {
    t.values().iter().filter(|m| !m.is_zero()).map(flatten).collect()
}

/// Ambrose-Singer: the span of the curvature operators and all their
/// covariant derivatives, computed by sweeps until the span stops growing.
pub fn ambrose_singer(ct: &ConnectionTable, p: &LiePresentation) -> Result<HolonomyResult> {
    let n = p.dim;
    let r = curvature(ct, p);
    let mut span = Subspace::span(n * n, &values_of(&r));
    let curvature_dim = span.dim();
    let mut tensors = Subspace::span(r.as_flat().len(), &[r.as_flat()]);
    let mut frontier = vec![r];
    let mut generations = 0;
    loop {
        if generations >= SWEEP_CAP {
            return Err(Error::SweepCap(SWEEP_CAP));
        }
        let mut next = Vec::new();
        let mut vals = Vec::new();
        for t in &frontier {
            for m in 0..n {
                let d = covariant_derivative(ct, m, t);
                let flat = d.as_flat();
                if !tensors.contains(&flat) {
                    tensors = tensors.extend(&[flat]);
                    vals.extend(values_of(&d));
                    next.push(d);
                }
            }
        }
        let grown = span.extend(&vals);
        if grown.dim() == span.dim() {
            break;
        }
        span = grown;
        frontier = next;
        generations += 1;
    }
    let algebra = LieMatrixAlgebra::from_span(n, span);
    let matched_catalog = match_catalog(&algebra, p.convention).map(|e| e.id);
    Ok(HolonomyResult {
        algebra,
        curvature_dim,
        generations,
        matched_catalog,
    })
}

/// Independent route: the smallest subalgebra containing the curvature
/// operators and stable under `ad(Lambda_m)` for every `m`.
pub fn holonomy_kn(ct: &ConnectionTable, p: &LiePresentation) -> LieMatrixAlgebra {
    let n = p.dim;
    let r = curvature(ct, p);
    let mut gens: Vec<Matrix> = r.values().iter().filter(|m| !m.is_zero()).cloned().collect();
    loop {
        let alg = lie_closure(n, &gens);
        let mut span = alg.span().clone();
        for x in alg.basis() {
            for l in &ct.lambda {
                span = span.extend(&[flatten(&l.commutator(&x))]);
            }
        }
        if span.dim() == alg.dim() {
            return alg;
        }
        gens = span.basis().iter().map(|v| unflatten(n, v)).collect();
    }
}

/// First catalog entry in the same convention whose span equals `h` literally.
pub fn match_catalog(h: &LieMatrixAlgebra, convention: ConventionName) -> Option<CatalogEntry> {
    all_entries()
        .into_iter()
        .find(|e| e.convention == convention && e.algebra.span() == h.span())
}

/// Parses a connection matrix written with atoms `b<j>_<i>` (entry at row i, column j).
pub fn parse_endomorphism(src: &str, n: usize) -> Result<Matrix> {
    let atom = |s: &str| parse_b_endo(s, n);
    let e = parse_linear(src, 1, 1, &atom)?;
    if !e.constant.is_zero() {
        return Err(parse_err(1, 1, "constant term in an endomorphism"));
    }
    let mut m = Matrix::zeros(n, n);
    for ((i, j), c) in e.terms {
        m[(i, j)] = c;
    }
    Ok(m)
}

/// Joins `(coefficient, atom)` pairs as `a x - b y + (c + d r2) z`.
pub fn format_terms(terms: &[(Scalar, String)]) -> String {
    let mut out = String::new();
    for (c, atom) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let single = c.is_rational() || (c + &c.conj()).is_zero();
        let (neg, mag) = if single && c.sign() < 0 { (true, -c.clone()) } else { (false, c.clone()) };
        let text = mag.to_string();
        let coef = if mag == Scalar::from_int(1) {
            String::new()
        } else if !single {
            format!("({text}) ")
        } else {
            format!("{text} ")
        };
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&coef);
        out.push_str(atom);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Writes an endomorphism with atoms `b<j>_<i>`.
pub fn format_endomorphism(m: &Matrix) -> String {
    let mut terms = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            terms.push((m[(i, j)].clone(), format!("b{}_{}", j + 1, i + 1)));
        }
    }
    format_terms(&terms)
}

/// A generator of a holonomy algebra: `R_ij`, or `(nabla_m R)_ij` when `m` is set (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    pub derivative: Option<usize>,
    pub i: usize,
    pub j: usize,
}

impl Generator {
    pub fn eval(&self, ct: &ConnectionTable, r: &CurvatureTensor) -> Matrix {
        match self.derivative {
            None => r.get(self.i - 1, self.j - 1),
            Some(m) => covariant_derivative(ct, m - 1, r).get(self.i - 1, self.j - 1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = self.derivative {
            write!(f, "∇_{m}")?;
        }
        write!(f, "R{}{}", self.i, self.j)
    }
}

const fn r(i: usize, j: usize) -> Generator {
    Generator { derivative: None, i, j }
}

const fn dr(m: usize, i: usize, j: usize) -> Generator {
    Generator { derivative: Some(m), i, j }
}

/// A bundled left-invariant example with its expected data.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub source: &'static str,
    pub holonomy_dim: usize,
    /// Expected `Lambda_1 .. Lambda_7` in the `b<j>_<i>` syntax.
    pub lambda: [&'static str; 7],
    /// Expected spanning set of the holonomy algebra.
    pub generators: Vec<Generator>,
    pub catalog_id: &'static str,
    pub catalog_label: &'static str,
}

impl Example {
    pub fn presentation(&self) -> LiePresentation {
        parse_presentation(self.source, None).expect("bundled example parses")
    }

    pub fn expected_lambda(&self) -> Vec<Matrix> {
        self.lambda
            .iter()
            .map(|s| parse_endomorphism(s, 7).expect("bundled connection parses"))
            .collect()
    }
}

/// The seven bundled examples.
pub fn examples_registry() -> Vec<Example> {
    vec![
        Example {
            name: "type1_hol5",
            source: include_str!("../data/examples/type1_hol5.lie"),
            holonomy_dim: 5,
            lambda: [
                "0",
                "1/2 (b5_2 - b6_1)",
                "b3_2 - b6_7 + 1/2 (b5_3 - b7_1)",
                "-b4_1 - b5_4 + 1/2 r2 (b6_3 - b7_2)",
                "-2 (b1_1 - b5_5) - 3/2 (b2_2 - b6_6) - 1/2 (b3_3 - b7_7) - b3_2 + b6_7 - b5_2 + b6_1",
                "-1/2 (b2_1 - b5_6) + 1/2 r2 (b4_3 + b7_4) - b5_2 + b6_1",
                "-1/2 (b3_1 - b5_7) - 1/2 r2 (b4_2 + b6_4)",
            ],
            generators: vec![r(2, 5), r(3, 5), r(4, 5), r(5, 6), r(5, 7)],
            catalog_id: "T1.1-a0",
            catalog_label: "𝔪",
        },
        Example {
            name: "type1_hol6",
            source: include_str!("../data/examples/type1_hol6.lie"),
            holonomy_dim: 6,
            lambda: [
                "0",
                "-1/2 r2 (b5_2 - b6_1)",
                "1/2 r2 (b3_1 - b5_7) + b4_2 + b6_4",
                "b3_2 - b6_7",
                "1/2 r2 (b2_2 - b6_6 - b3_3 + b7_7) + r2 (b3_2 - b6_7)",
                "1/2 r2 (b2_1 - b5_6) - b4_3 - b7_4 - r2 (b5_2 - b6_1 + b5_3 - b7_1)",
                "-r2 (b5_2 - b6_1) + 1/2 r2 (b5_3 - b7_1)",
            ],
            generators: vec![r(2, 5), r(3, 5), r(3, 6), r(5, 6), r(6, 7), dr(6, 3, 6)],
            catalog_id: "T1.4a",
            catalog_label: "ℝ·N⋉𝔪",
        },
        Example {
            name: "type1_hol7",
            source: include_str!("../data/examples/type1_hol7.lie"),
            holonomy_dim: 7,
            lambda: [
                "0",
                "-1/4 r2 (b5_2 - b6_1)",
                "-1/8 r2 (b3_1 - b5_7) - 1/2 (b3_2 - b6_7) - 1/4 (b4_2 + b6_4) - 3/2 r2 (b5_2 - b6_1)",
                "-1/4 (b3_2 - b6_7)",
                "1/4 r2 (-b2_2 + b6_6 + b3_3 - b7_7) - 3/2 r2 (b3_2 - b6_7) + b5_2 - b6_1",
                "-b1_1 + b5_5 - 3/2 (b2_2 - b6_6) + 1/2 (b3_3 - b7_7) - 1/4 r2 (b2_1 - b5_6) \
                 + (1/2 + 3/2 r2) (b3_1 - b5_7) + (1/2 + 1/4 r2) (b3_2 - b6_7) + (1 + r2) (b4_1 + b5_4) \
                 + (3 + 1/2 r2) (b4_2 + b6_4) + 1/2 (b4_3 + b7_4) + (-1 + 1/2 r2) (b5_2 - b6_1) \
                 - b5_3 + b7_1 - (1 + 1/2 r2) (b6_3 - b7_2)",
                "-1/2 r2 (b5_3 - b7_1)",
            ],
            generators: vec![r(2, 5), r(3, 5), r(3, 6), r(4, 5), r(5, 6), r(5, 7), dr(5, 5, 6)],
            catalog_id: "T1.2a[lambda=1/2]",
            catalog_label: "𝔰_{1/2}⋉𝔪",
        },
        Example {
            name: "type2_hol3",
            source: include_str!("../data/examples/type2_hol3.lie"),
            holonomy_dim: 3,
            lambda: [
                "0",
                "0",
                "-b3_2 + b7_5 + (1 - 1/2 r2) (b6_2 - b7_1)",
                "1/2 r2 (b3_1 - b6_5) + b4_2 + b7_4",
                "1/2 r2 (b7_1 - b6_2)",
                "(1 - 1/2 r2) (b3_2 - b7_5) - 1/2 r2 (b5_2 - b7_3) + b6_2 - b7_1 - b4_1 - b6_4",
                "b3_2 - b7_5 - 1/2 r2 (b3_1 - b6_5) - b2_2 + b7_7 - b1_1 + b6_6 - b4_2 - b7_4 \
                 - (1 - 1/2 r2) (b5_1 - b6_3) - b6_2 + b7_1",
            ],
            generators: vec![r(3, 7), r(4, 6), r(6, 7)],
            catalog_id: "T2.5-a0-n13",
            catalog_label: "𝔫(1,3)",
        },
        Example {
            name: "type2_hol5",
            source: include_str!("../data/examples/type2_hol5.lie"),
            holonomy_dim: 5,
            lambda: [
                "0",
                "0",
                "0",
                "r2 (b3_2 - b7_5 + b6_2 - b7_1)",
                "2 (b1_1 - b6_6) + b2_2 - b7_7 + b3_3 - b5_5 - 3 (b5_1 - b6_3) + b6_2 - b7_1",
                "4 (b5_1 - b6_3)",
                "b1_2 - b7_6 - r2 (b3_4 + b4_1 + b4_5 + b6_4) - b5_2 + b7_3 - b6_2 + b7_1",
            ],
            generators: vec![r(3, 7), r(4, 6), r(5, 6), r(6, 7), dr(7, 6, 7)],
            catalog_id: "T2.5-a0-n",
            catalog_label: "𝔫",
        },
        Example {
            name: "type2_hol8",
            source: include_str!("../data/examples/type2_hol8.lie"),
            holonomy_dim: 8,
            lambda: [
                "-4/3 (b6_2 - b7_1)",
                "0",
                "7/9 (b3_2 - b7_5) - 1/3 r2 (b4_1 + b6_4) - 1/3 (b5_2 - b7_3) - (11/3 + 5/6 r2) (b6_2 - b7_1)",
                "-1/3 r2 (b3_1 - b6_5) - 2/3 (b4_2 + b7_4) - r2 (b5_1 - b6_3) + 1/3 r2 (b6_2 - b7_1)",
                "-1/3 (b3_2 - b7_5) - r2 (b4_1 + b6_4) - b5_2 + b7_3 + (9 - 1/2 r2) (b6_2 - b7_1)",
                "1/3 (b1_2 - b7_6) + b2_1 - b6_7 - b3_1 + b6_5 + (2/3 - 5/6 r2) (b3_2 - b7_5) \
                 - 1/3 r2 (b3_4 + b4_5) - b4_1 - b6_4 - r2 (b4_2 + b7_4 + b4_3 + b5_4) + b5_1 - b6_3 \
                 - 1/2 r2 (b5_2 - b7_3) - b6_2 + b7_1",
                "1/3 (b1_1 - b6_6) - b2_2 + b7_7 + 4/3 (b3_3 - b5_5) + (8/3 + 5/6 r2) (b3_1 - b6_5) \
                 + 11/9 (b3_2 - b7_5) - 1/3 r2 (b4_1 + b6_4) + (5/3 + 8/3 r2) (b4_2 + b7_4) \
                 - (10 - 1/2 r2) (b5_1 - b6_3) - 1/3 (b5_2 - b7_3) - b6_2 + b7_1",
            ],
            generators: vec![r(1, 7), r(3, 6), r(3, 7), r(5, 6), r(5, 7), r(6, 7), dr(6, 6, 7), dr(7, 6, 7)],
            catalog_id: "T2.1-sl2",
            catalog_label: "𝔰𝔩(2,ℝ)⋉𝔫",
        },
        Example {
            name: "type3_hol3",
            source: include_str!("../data/examples/type3_hol3.lie"),
            holonomy_dim: 3,
            lambda: [
                "0",
                "0",
                "0",
                "r2 (b5_2 - b6_1)",
                "-b1_1 + b5_5 - 1/3 (b2_2 - b6_6) - 2/3 (b3_3 - b7_7) - b3_2 + b6_7 - b4_1 - b5_4 \
                 - b5_2 + b6_1 + 1/2 r2 (b6_3 - b7_2)",
                "-b3_2 + b6_7 - r2 (b4_1 + b5_4) - b5_2 + b6_1 - (1 - 1/2 r2) (b5_3 - b7_1) + b6_3 - b7_2",
                "-(1 - 1/2 r2) (b5_2 - b6_1) + 4/3 (b5_3 - b7_1)",
            ],
            generators: vec![r(4, 5), r(5, 6), r(5, 7)],
            catalog_id: "T3.2-a0-k2",
            catalog_label: "𝔪(1,0,2)",
        },
    ]
}

pub fn example(name: &str) -> Result<Example> {
    let all = examples_registry();
    let names: Vec<&str> = all.iter().map(|e| e.name).collect();
    all.iter().find(|e| e.name == name).cloned().ok_or_else(|| Error::UnknownName {
        name: name.to_string(),
        available: names.join(", "),
    })
}

/// Every check for one bundled example.
#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub name: &'static str,
    pub jacobi: bool,
    pub inertia: (usize, usize, usize),
    pub signature_ok: bool,
    pub metric_compatible: bool,
    pub torsion_free: bool,
    pub parallel: bool,
    /// Indices (1-based) of `Lambda_j` that differ from the expected table.
    pub lambda_mismatches: Vec<usize>,
    pub holonomy_dim: usize,
    pub expected_dim: usize,
    pub generators_span: bool,
    pub kn_agrees: bool,
    pub bracket_closed: bool,
    pub matched: Option<String>,
    pub expected_match: &'static str,
    pub generations: usize,
}

impl ExampleReport {
    pub fn passes(&self) -> bool {
        self.jacobi
            && self.signature_ok
            && self.metric_compatible
            && self.torsion_free
            && self.parallel
            && self.lambda_mismatches.is_empty()
            && self.holonomy_dim == self.expected_dim
            && self.generators_span
            && self.kn_agrees
            && self.bracket_closed
            && self.matched.as_deref() == Some(self.expected_match)
    }
}

pub fn verify_example(ex: &Example) -> Result<ExampleReport> {
    let p = ex.presentation();
    let gram = &p.convention.get().gram;
    let ct = koszul(&p);
    let r = curvature(&ct, &p);
    let hol = ambrose_singer(&ct, &p)?;
    let gens: Vec<Vec<Scalar>> = ex.generators.iter().map(|g| flatten(&g.eval(&ct, &r))).collect();
    let gen_span = Subspace::span(49, &gens);
    let expected = ex.expected_lambda();
    let inertia = metric_inertia(&p);
    Ok(ExampleReport {
        name: ex.name,
        jacobi: jacobi_check(&p).is_none(),
        inertia,
        signature_ok: inertia == (4, 0, 3),
        metric_compatible: ct.metric_violation(gram).is_none(),
        torsion_free: ct.torsion_violation(&p).is_none(),
        parallel: parallel_form_check(&ct, p.convention).is_none(),
        lambda_mismatches: (0..7).filter(|&j| ct.lambda[j] != expected[j]).map(|j| j + 1).collect(),
        holonomy_dim: hol.algebra.dim(),
        expected_dim: ex.holonomy_dim,
        generators_span: gen_span == *hol.algebra.span() && gens.len() == hol.algebra.dim(),
        kn_agrees: holonomy_kn(&ct, &p).span() == hol.algebra.span(),
        bracket_closed: hol.algebra.is_closed(),
        matched: hol.matched_catalog,
        expected_match: ex.catalog_id,
        generations: hol.generations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn abelian_is_flat() {
        let p = parse_presentation(include_str!("../data/examples/abelian.lie"), None).unwrap();
        assert!(jacobi_check(&p).is_none());
        let ct = koszul(&p);
        assert!(ct.lambda.iter().all(|l| l.is_zero()));
        assert!(curvature(&ct, &p).is_zero());
        assert!(parallel_form_check(&ct, p.convention).is_none());
        let h = ambrose_singer(&ct, &p).unwrap();
        assert_eq!(h.algebra.dim(), 0);
        assert_eq!(h.matched_catalog, None);
    }

    #[test]
    fn registry_shape() {
        let reg = examples_registry();
        assert_eq!(reg.len(), 7);
        let p = reg[0].presentation();
        assert!(p.bracket_basis(0, 4).iter().chain(p.bracket_basis(4, 5)).any(|c| !c.is_zero()));
        // d b5 = 0 in the first example
        assert!(pairs(7).into_iter().all(|(j, k)| p.structure_constant(4, j, k).is_zero()));
        // d b4 = -r2 b37 - r2 b67 in the Type II 5-dimensional example
        let q = example("type2_hol5").unwrap().presentation();
        assert_eq!(*q.structure_constant(3, 2, 6), Scalar::sqrt2());
        assert_eq!(*q.structure_constant(3, 5, 6), Scalar::sqrt2());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_presentation("convention: C1\nd b1 = 2 b1x\n", None).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = parse_presentation("convention: C9\n", None).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        assert!(parse_presentation("d b1 = b23\n", None).is_err());
        assert!(parse_presentation("d b1 = b23\n", Some(ConventionName::C2)).is_ok());
        assert!(parse_presentation("convention: C1\nd b1 = b23\nd b1 = b45\n", None).is_err());
        assert!(parse_presentation("convention: C1\nd b1 = b22\n", None).is_err());
        assert!(parse_presentation("convention: C1\nd b8 = b12\n", None).is_err());
    }

    #[test]
    fn reversed_indices_flip_sign() {
        let a = parse_presentation("convention: C1\nd b1 = b32", None).unwrap();
        let b = parse_presentation("convention: C1\nd b1 = -b23", None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn structure_equations_round_trip() {
        for ex in examples_registry() {
            let p = ex.presentation();
            let text = format!("convention: {}\n{}", p.convention, p.structure_equations());
            assert_eq!(parse_presentation(&text, None).unwrap(), p, "{}", ex.name);
        }
    }

    #[test]
    fn endomorphism_text_round_trip() {
        for ex in examples_registry() {
            for l in ex.expected_lambda() {
                let text = format_endomorphism(&l);
                assert_eq!(parse_endomorphism(&text, 7).unwrap(), l, "{text}");
            }
        }
        assert_eq!(format_endomorphism(&parse_endomorphism("-b5_2 + 1/2 b6_1", 7).unwrap()), "1/2 b6_1 - b5_2");
    }

    #[test]
    fn calibration_point() {
        // Fixes the sign conventions: Lambda_2 of the first example.
        let p = example("type1_hol5").unwrap().presentation();
        let ct = koszul(&p);
        assert!(ct.lambda[0].is_zero());
        assert_eq!(ct.lambda[1], parse_endomorphism("1/2 (b5_2 - b6_1)", 7).unwrap());
        let q = example("type3_hol3").unwrap().presentation();
        assert_eq!(koszul(&q).lambda[3], parse_endomorphism("r2 (b5_2 - b6_1)", 7).unwrap());
    }

    #[test]
    fn all_examples_verify() {
        for ex in examples_registry() {
            let rep = verify_example(&ex).unwrap();
            assert!(rep.passes(), "{rep:?}");
        }
    }

    #[test]
    fn header_form_not_parallel_for_type1() {
        let p = example("type1_hol5").unwrap().presentation();
        let ct = koszul(&p);
        assert!(parallel_form_check(&ct, ConventionName::C1).is_none());
        assert!(parallel_form_check(&ct, ConventionName::C3).is_some());
    }

    #[test]
    fn first_example_curvature_span_is_m() {
        let p = example("type1_hol5").unwrap().presentation();
        let ct = koszul(&p);
        let r = curvature(&ct, &p);
        assert!(r.bianchi_violation().is_none());
        let gens: Vec<Matrix> = [(1, 4), (2, 4), (3, 4), (4, 5), (4, 6)].iter().map(|&(i, j)| r.get(i, j)).collect();
        let span = LieMatrixAlgebra::span_of(7, &gens);
        assert_eq!(span.span(), crate::catalog::family::m_full().span());
    }

    #[test]
    fn omega_sign_flip_breaks_parallelism() {
        let p = example("type2_hol8").unwrap().presentation();
        let ct = koszul(&p);
        let conv = p.convention.get();
        let mut flipped = conv.omega.clone();
        let (k, v) = conv.omega.terms().iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
        flipped.add_term(&k, -(v.clone() + v));
        assert!(ct.lambda.iter().any(|l| !flipped.derivation(l).is_zero()));
    }

    #[test]
    fn perturbation_breaks_jacobi() {
        let base = example("type1_hol5").unwrap().presentation();
        let consts = base.nonzero_constants();
        let broken = consts
            .iter()
            .filter(|(i, j, k, c)| {
                let mut p = base.clone();
                p.set_structure_constant(*i, *j, *k, c.clone() + Scalar::from_int(1));
                jacobi_check(&p).is_some()
            })
            .count();
        assert!(broken > 0);
        // d b5 = b12 is not closed: d(b12) = -2 b125 - b156 + ...
        let mut p = base.clone();
        p.set_structure_constant(4, 0, 1, Scalar::from_int(-1));
        let (i, j, k) = jacobi_check(&p).unwrap();
        assert!(i < j && j < k);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]

        #[test]
        fn holonomy_independent_of_order(seed in 0u64..1000) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for name in ["type1_hol6", "type2_hol8"] {
                let p = example(name).unwrap().presentation();
                let ct = koszul(&p);
                let base = ambrose_singer(&ct, &p).unwrap();
                // Permuting the operator list must not change the closure.
                let r = curvature(&ct, &p);
                let mut mats: Vec<Matrix> = r.values().to_vec();
                mats.shuffle(&mut rng);
                let mut perm: Vec<usize> = (0..7).collect();
                perm.shuffle(&mut rng);
                let shuffled = ConnectionTable { lambda: ct.lambda.clone() };
                let mut span = Subspace::span(49, &mats.iter().map(flatten).collect::<Vec<_>>());
                let mut frontier = vec![r];
                for _ in 0..SWEEP_CAP {
                    let mut next = Vec::new();
                    for t in &frontier {
                        for &m in &perm {
                            next.push(covariant_derivative(&shuffled, m, t));
                        }
                    }
                    let vals: Vec<Vec<Scalar>> = next.iter().flat_map(values_of).collect();
                    let grown = span.extend(&vals);
                    if grown.dim() == span.dim() { break; }
                    span = grown;
                    frontier = next;
                }
                prop_assert_eq!(&span, base.algebra.span());
            }
        }
    }
}
