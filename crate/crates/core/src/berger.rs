//! Formal curvature tensors `K(h)`: solutions of the first Bianchi identity with
//! values in a matrix algebra `h`, the derived span they generate, and the
//! parametrized tables for the two parabolic families.

use std::fmt;

use num_traits::Zero;

use crate::catalog::family::{
    mat2, type1_parabolic, type2_parabolic, TypeIElement, TypeIIElement,
};
use crate::g2star::LieMatrixAlgebra;
use crate::linalg::bilinear;
use crate::scalar::Scalar;
use crate::{Matrix, Subspace};

/// Index pairs `(i, j)` with `i < j < n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Position of `(i, j)` (with `i < j`) in [`pairs`].
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// A curvature-type tensor: the operators `R_ij = R(b_i, b_j)` for `i < j`.
#[derive(Clone, PartialEq)]
pub struct CurvatureTensor {
    n: usize,
    values: Vec<Matrix>,
}

impl CurvatureTensor {
    pub fn zero(n: usize) -> Self {
        CurvatureTensor {
            n,
            values: vec![Matrix::zeros(n, n); n * (n - 1) / 2],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Matrix) -> Self {
        CurvatureTensor {
            n,
            values: pairs(n).into_iter().map(|(i, j)| f(i, j)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `R(b_i, b_j)` for any `i, j` (0-based), using antisymmetry.
    pub fn get(&self, i: usize, j: usize) -> Matrix {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.values[pair_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.values[pair_index(self.n, j, i)],
            std::cmp::Ordering::Equal => Matrix::zeros(self.n, self.n),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, m: Matrix) {
        assert!(i < j);
        self.values[pair_index(self.n, i, j)] = m;
    }

    pub fn values(&self) -> &[Matrix] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|m| m.is_zero())
    }

    /// First `(i, j, k)` (0-based, `i < j < k`) with
    /// `R_ij b_k + R_jk b_i + R_ki b_j != 0`.
    pub fn bianchi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (rij, rjk, rik) = (self.get(i, j), self.get(j, k), self.get(i, k));
                    if (0..n).any(|l| {
                        !(&(&rij[(l, k)] + &rjk[(l, i)]) - &rik[(l, j)]).is_zero()
                    }) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First `(i, j, k, l)` with `<R_ij b_k, b_l> != <R_kl b_i, b_j>`.
    pub fn pair_symmetry_violation(&self, gram: &Matrix) -> Option<(usize, usize, usize, usize)> {
        let n = self.n;
        let gr: Vec<Matrix> = self.values.iter().map(|r| gram * r).collect();
        let at = |i: usize, j: usize, row: usize, col: usize| -> Scalar {
            match i.cmp(&j) {
                std::cmp::Ordering::Less => gr[pair_index(n, i, j)][(row, col)].clone(),
                std::cmp::Ordering::Greater => -gr[pair_index(n, j, i)][(row, col)].clone(),
                std::cmp::Ordering::Equal => Scalar::zero(),
            }
        };
        for (i, j) in pairs(n) {
            for (k, l) in pairs(n) {
                if at(i, j, l, k) != at(k, l, j, i) {
                    return Some((i, j, k, l));
                }
            }
        }
        None
    }

    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a = &*a + &b.scale(c);
        }
    }

    pub fn as_flat(&self) -> Vec<Scalar> {
        self.values.iter().flat_map(|m| m.as_flat().iter().cloned()).collect()
    }
}

impl fmt::Debug for CurvatureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<String> = pairs(self.n)
            .into_iter()
            .zip(&self.values)
            .filter(|(_, m)| !m.is_zero())
            .map(|((i, j), _)| format!("R{}{}", i + 1, j + 1))
            .collect();
        write!(f, "CurvatureTensor(nonzero: {})", nz.join(" "))
    }
}

/// A basis of `K(h)`.
#[derive(Clone, Debug)]
pub struct CurvatureFamily {
    pub h: LieMatrixAlgebra,
    pub basis: Vec<CurvatureTensor>,
    /// `coords[t][p]` are the h-coordinates of `R_p` of the `t`-th basis tensor.
    coords: Vec<Vec<Vec<Scalar>>>,
}

impl CurvatureFamily {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The linear system whose kernel is `K(h)`: unknowns are the h-coordinates of
/// `R_ij` (`i < j`), one equation per Bianchi component.
pub fn bianchi_system(h: &LieMatrixAlgebra) -> Matrix {
    let n = h.ambient_dim();
    let hb = h.basis();
    let m = hb.len();
    let np = n * (n - 1) / 2;
    let col = |p: usize, a: usize| p * m + a;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (pij, pjk, pik) = (pair_index(n, i, j), pair_index(n, j, k), pair_index(n, i, k));
                for l in 0..n {
                    let mut row = vec![Scalar::zero(); np * m];
                    for (a, b) in hb.iter().enumerate() {
                        row[col(pij, a)] = &row[col(pij, a)] + &b[(l, k)];
                        row[col(pjk, a)] = &row[col(pjk, a)] + &b[(l, i)];
                        row[col(pik, a)] = &row[col(pik, a)] - &b[(l, j)];
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, np * m);
    }
    Matrix::from_rows(rows)
}

/// Exact basis of `K(h)`.
pub fn curvature_space(h: &LieMatrixAlgebra) -> CurvatureFamily {
    let n = h.ambient_dim();
    let hb = h.basis();
    let m = hb.len();
    let np = n * (n - 1) / 2;
    let kernel = if m == 0 {
        Subspace::zero(0)
    } else {
        let sys = bianchi_system(h);
        if sys.rows() == 0 {
            Subspace::full(np * m)
        } else {
            sys.kernel()
        }
    };
    let mut basis = Vec::new();
    let mut coords = Vec::new();
    for v in kernel.basis() {
        let per_pair: Vec<Vec<Scalar>> = (0..np).map(|p| v[p * m..(p + 1) * m].to_vec()).collect();
        let t = CurvatureTensor {
            n,
            values: per_pair
                .iter()
                .map(|c| {
                    let mut acc = Matrix::zeros(n, n);
                    for (x, b) in c.iter().zip(&hb) {
                        if !x.is_zero() {
                            acc = &acc + &b.scale(x);
                        }
                    }
                    acc
                })
                .collect(),
        };
        basis.push(t);
        coords.push(per_pair);
    }
    CurvatureFamily {
        h: h.clone(),
        basis,
        coords,
    }
}

/// `Span{R(x, y) : R in K(h)}` as a subalgebra candidate of `h`.
pub fn derived_span(k: &CurvatureFamily) -> LieMatrixAlgebra {
    let hb = k.h.basis();
    let m = hb.len();
    let n = k.h.ambient_dim();
    let vecs: Vec<Vec<Scalar>> = k
        .coords
        .iter()
        .flatten()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let span = Subspace::span(m, &vecs);
    let mats: Vec<Matrix> = span
        .basis()
        .iter()
        .map(|c| {
            c.iter().zip(&hb).fold(Matrix::zeros(n, n), |acc, (x, b)| &acc + &b.scale(x))
        })
        .collect();
    LieMatrixAlgebra::span_of(n, &mats)
}

/// Outcome of Berger's first criterion `h = derived span of K(h)`.
#[derive(Clone, Debug)]
pub struct BergerReport {
    pub dim_h: usize,
    pub dim_k: usize,
    pub dim_derived: usize,
    pub is_berger: bool,
    /// The `K(h)` basis, which certifies the verdict.
    pub family: CurvatureFamily,
}

pub fn is_berger(h: &LieMatrixAlgebra) -> BergerReport {
    let family = curvature_space(h);
    let derived = derived_span(&family);
    BergerReport {
        dim_h: h.dim(),
        dim_k: family.dim(),
        dim_derived: derived.dim(),
        is_berger: derived.span() == h.span(),
        family,
    }
}

/// Parameter names of the Type I table, in slice order.
pub const TABLE1_PARAMS: [&str; 29] = [
    "a1", "a2", "a3", "r1", "r2", "r3", "x1", "x2", "x3", "x4", "b1", "b2", "b3", "b4", "c1",
    "c2", "c3", "c4", "u1", "u2", "u3", "u4", "j1", "j2", "j3", "j4", "v1", "v2", "t",
];

/// Parameter names of the Type II table, in slice order.
pub const TABLE2_PARAMS: [&str; 25] = [
    "x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5", "r1", "r2", "r3", "r4", "t",
    "t1", "t2", "t3", "t4", "t5", "t6", "s1", "s2", "j1", "j2",
];

fn getter<'a>(names: &'a [&'a str], p: &'a [Scalar]) -> impl Fn(&str) -> Scalar + 'a {
    assert_eq!(names.len(), p.len());
    move |k: &str| p[names.iter().position(|n| *n == k).expect("known parameter")].clone()
}

/// The Type I tensor for the given parameters (`R_ij` with 1-based labels in
/// the comments below match the table cells).
pub fn table1_tensor(p: &[Scalar]) -> CurvatureTensor {
    let g = getter(&TABLE1_PARAMS, p);
    let z = Scalar::zero;
    let r2 = Scalar::sqrt2();
    let h = |a: [Scalar; 4], v: Scalar, u: [Scalar; 2], y: [Scalar; 2]| {
        TypeIElement::new(mat2(a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()), v, u, y).matrix()
    };
    let r15 = h([z(), z(), z(), z()], z(), [z(), z()], [g("b1") + g("b4"), g("c1") + g("c4")]);
    let d25 = h(
        [g("x2"), -g("x1"), g("x3"), -g("x2")],
        g("c1") - g("b3"),
        [g("r2"), g("r3")],
        [g("u2"), g("u4")],
    );
    let r26 = h(
        [-g("a1"), -g("a2"), -g("a3"), g("a1")],
        -g("r2"),
        [g("x1"), g("x2")],
        [g("b1"), g("c1")],
    );
    let r27 = h(
        [-g("a3"), g("a1"), g("j1"), g("a3")],
        -g("r3"),
        [g("x2"), g("x3")],
        [g("b3"), g("c3")],
    );
    let d35 = h(
        [g("x1"), g("x4"), g("x2"), -g("x1")],
        g("b4") - g("c2"),
        [g("r1"), g("r2")],
        [g("u1"), g("u3")],
    );
    let r36 = h(
        [-g("a2"), g("j2"), g("a1"), g("a2")],
        g("r1"),
        [g("x4"), -g("x1")],
        [g("b2"), g("c2")],
    );
    let d67 = h(
        [-g("r2"), g("r1"), -g("r3"), g("r2")],
        g("u2") - g("u3"),
        [g("b4") - g("c2"), g("c1") - g("b3")],
        [g("v1"), g("v2")],
    );
    let r56 = h([g("b1"), g("b2"), g("b3"), g("b4")], g("v1"), [g("u1"), g("u2")], [g("j3"), g("t")]);
    let r57 = h([g("c1"), g("c2"), g("c3"), g("c4")], g("v2"), [g("u3"), g("u4")], [g("t"), g("j4")]);
    let r37 = &r15 - &r26;
    let mut t = CurvatureTensor::zero(7);
    let mut set = |i: usize, j: usize, m: Matrix| t.set(i - 1, j - 1, m);
    set(1, 5, r15);
    set(2, 5, -&d25);
    set(4, 7, d25.scale(&r2));
    set(2, 6, r26);
    set(2, 7, r27);
    set(3, 5, d35.clone());
    set(4, 6, d35.scale(&r2));
    set(3, 6, r36);
    set(3, 7, r37);
    set(6, 7, -&d67);
    set(4, 5, d67.scale(&r2));
    set(5, 6, r56);
    set(5, 7, r57);
    t
}

/// The Type II tensor for the given parameters.
pub fn table2_tensor(p: &[Scalar]) -> CurvatureTensor {
    let g = getter(&TABLE2_PARAMS, p);
    let z = Scalar::zero;
    let r2 = Scalar::sqrt2();
    let h = |a: [Scalar; 4], zz: [Scalar; 4], c: Scalar| {
        TypeIIElement::new(mat2(a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()), zz, c).matrix()
    };
    let zero_a = || [z(), z(), z(), z()];
    let r16 = h(zero_a(), [g("x4"), g("x3"), g("x2"), g("x1")], g("t1") + g("t"));
    let r17 = h(zero_a(), [g("x5"), g("x4"), g("x3"), g("x2")], g("t4") - g("t5"));
    let r26 = h(zero_a(), [g("y4"), g("y3"), g("y2"), g("y1")], g("t2") - g("t3"));
    let r27 = h(zero_a(), [g("y5"), g("y4"), g("y3"), g("y2")], g("t6") + g("t"));
    let r56 = h(
        [g("x1"), g("y1"), g("x2"), g("y2")],
        [g("t6"), g("t2"), g("s2"), g("j2")],
        g("r1"),
    );
    let r57 = h(
        [g("x2"), g("y2"), g("x3"), g("y3")],
        [g("t5"), g("t1"), g("t3"), g("s2")],
        g("r2"),
    );
    let r36 = h(
        [g("x3"), g("y3"), g("x4"), g("y4")],
        [g("s1"), g("t4"), g("t1"), g("t2")],
        g("r3"),
    );
    let r37 = h(
        [g("x4"), g("y4"), g("x5"), g("y5")],
        [g("j1"), g("s1"), g("t5"), g("t6")],
        g("r4"),
    );
    let r67 = h(
        [g("t1") + g("t"), g("t2") - g("t3"), g("t4") - g("t5"), g("t6") + g("t")],
        [g("r4"), g("r3"), g("r2"), g("r1")],
        z(),
    );
    let r35 = &r16 - &r27;
    let mut t = CurvatureTensor::zero(7);
    let mut set = |i: usize, j: usize, m: Matrix| t.set(i - 1, j - 1, m);
    set(1, 6, r16);
    set(1, 7, r17.clone());
    set(3, 4, r17.scale(&r2));
    set(2, 6, r26.clone());
    set(4, 5, -&r26.scale(&r2));
    set(2, 7, r27);
    set(5, 6, r56);
    set(5, 7, r57.clone());
    set(4, 6, r57.scale(&r2));
    set(3, 6, r36.clone());
    set(4, 7, r36.scale(&r2));
    set(3, 7, r37);
    set(6, 7, r67);
    set(3, 5, r35);
    t
}

/// Which parametrized table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    TypeI,
    TypeII,
}

impl Table {
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Table::TypeI => &TABLE1_PARAMS,
            Table::TypeII => &TABLE2_PARAMS,
        }
    }

    pub fn tensor(self, p: &[Scalar]) -> CurvatureTensor {
        match self {
            Table::TypeI => table1_tensor(p),
            Table::TypeII => table2_tensor(p),
        }
    }

    pub fn parabolic(self) -> LieMatrixAlgebra {
        match self {
            Table::TypeI => type1_parabolic(),
            Table::TypeII => type2_parabolic(),
        }
    }

    /// The vanishing pairs and the linear footer relations, as
    /// `(lhs pairs with coefficients) = 0` (1-based pairs).
    fn footer(self) -> Vec<Vec<((usize, usize), Scalar)>> {
        let one = || Scalar::from_int(1);
        let m1 = || Scalar::from_int(-1);
        let r2 = Scalar::sqrt2;
        let ir2 = || Scalar::quad(0, 1, 1, 2);
        let zeros: &[(usize, usize)] = match self {
            Table::TypeI => &[(1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (2, 3), (2, 4), (3, 4)],
            Table::TypeII => &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        };
        let mut out: Vec<Vec<((usize, usize), Scalar)>> = zeros.iter().map(|&p| vec![(p, one())]).collect();
        match self {
            Table::TypeI => {
                out.push(vec![((3, 7), one()), ((1, 5), m1()), ((2, 6), one())]);
                out.push(vec![((2, 5), one()), ((4, 7), ir2())]);
                out.push(vec![((3, 5), one()), ((4, 6), -ir2())]);
                out.push(vec![((6, 7), one()), ((4, 5), ir2())]);
            }
            Table::TypeII => {
                out.push(vec![((3, 5), one()), ((1, 6), m1()), ((2, 7), one())]);
                out.push(vec![((1, 7), r2()), ((3, 4), m1())]);
                out.push(vec![((2, 6), r2()), ((4, 5), one())]);
                out.push(vec![((5, 7), r2()), ((4, 6), m1())]);
                out.push(vec![((3, 6), r2()), ((4, 7), m1())]);
            }
        }
        out
    }

    pub fn footer_text(self) -> &'static str {
        match self {
            Table::TypeI => "R12=R13=R14=R16=R17=R23=R24=R34=0, R37=R15-R26, -R25=R47/r2, R35=R46/r2, -R67=R45/r2",
            Table::TypeII => "R12=R13=R14=R15=R23=R24=R25=0, R35=R16-R27, r2 R17=R34, r2 R26=-R45, r2 R57=R46, r2 R36=R47",
        }
    }
}

/// Comparison of a parametrized table with the exact kernel `K(h)`.
#[derive(Clone, Debug)]
pub struct TableReport {
    pub table: Table,
    /// Dimension of the exact Bianchi kernel.
    pub kernel_dim: usize,
    pub param_count: usize,
    /// Rank of the parametrization (equal to `param_count` iff it is injective).
    pub param_rank: usize,
    /// Every parametrized tensor satisfies Bianchi and takes values in `h`.
    pub cells_in_kernel: bool,
    /// The parametrization exhausts the kernel.
    pub kernel_covered: bool,
    /// Footer identities hold on every kernel basis element.
    pub footer_holds: bool,
    /// Pair symmetry holds on every kernel basis element.
    pub pair_symmetric: bool,
    /// Kernel basis elements not reached by the parametrization, as lists of
    /// nonzero 1-based pairs.
    pub missing: Vec<Vec<(usize, usize)>>,
}

impl TableReport {
    pub fn passes(&self) -> bool {
        self.cells_in_kernel
            && self.param_rank == self.param_count
            && self.kernel_covered
            && self.footer_holds
            && self.pair_symmetric
    }
}

pub fn table_relations_check(table: Table) -> TableReport {
    use crate::exterior::ConventionName;
    let h = table.parabolic();
    let k = curvature_space(&h);
    let np = table.params().len();
    let cells: Vec<CurvatureTensor> = (0..np)
        .map(|i| {
            let mut p = vec![Scalar::zero(); np];
            p[i] = Scalar::from_int(1);
            table.tensor(&p)
        })
        .collect();
    let cells_in_kernel = cells
        .iter()
        .all(|t| t.bianchi_violation().is_none() && t.values().iter().all(|m| h.contains(m)));
    let flat_cells: Vec<Vec<Scalar>> = cells.iter().map(|t| t.as_flat()).collect();
    let cell_span = Subspace::span(flat_cells[0].len(), &flat_cells);
    let param_rank = cell_span.dim();
    let mut missing = Vec::new();
    for t in &k.basis {
        if !cell_span.contains(&t.as_flat()) {
            missing.push(
                pairs(7)
                    .into_iter()
                    .zip(t.values())
                    .filter(|(_, m)| !m.is_zero())
                    .map(|((i, j), _)| (i + 1, j + 1))
                    .collect(),
            );
        }
    }
    let footer = table.footer();
    let footer_holds = k.basis.iter().all(|t| {
        footer.iter().all(|rel| {
            rel.iter()
                .fold(Matrix::zeros(7, 7), |acc, ((i, j), c)| &acc + &t.get(i - 1, j - 1).scale(c))
                .is_zero()
        })
    });
    let gram = match table {
        Table::TypeI => &ConventionName::C1.get().gram,
        Table::TypeII => &ConventionName::C2.get().gram,
    };
    let pair_symmetric = k.basis.iter().all(|t| t.pair_symmetry_violation(gram).is_none());
    TableReport {
        table,
        kernel_dim: k.dim(),
        param_count: np,
        param_rank,
        cells_in_kernel,
        kernel_covered: missing.is_empty() && param_rank == k.dim(),
        footer_holds,
        pair_symmetric,
        missing,
    }
}

/// `<R_ij b_k, b_l>` for a tensor and Gram matrix (0-based indices).
pub fn curvature_form(t: &CurvatureTensor, gram: &Matrix, i: usize, j: usize, k: usize, l: usize) -> Scalar {
    let r = t.get(i, j);
    let rk = r.col(k);
    let el: Vec<Scalar> = (0..t.dim()).map(|x| if x == l { Scalar::from_int(1) } else { Scalar::zero() }).collect();
    bilinear(gram, &rk, &el)
}

/// Linear combination of tensors.
pub fn combine_tensors(ts: &[CurvatureTensor], coeffs: &[Scalar]) -> CurvatureTensor {
    let n = ts.first().map(|t| t.dim()).unwrap_or(7);
    let mut out = CurvatureTensor::zero(n);
    for (t, c) in ts.iter().zip(coeffs) {
        out.add_scaled(t, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::family::{m_full, m_subspace};
    use crate::catalog::gl2::n_mat;
    use crate::exterior::ConventionName;

    #[test]
    fn pair_indexing() {
        for n in [2, 5, 7] {
            for (k, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
            }
        }
    }

    #[test]
    fn trivial_algebra() {
        let z = LieMatrixAlgebra::zero(7);
        let r = is_berger(&z);
        assert_eq!(r.dim_k, 0);
        assert!(r.is_berger);
    }

    #[test]
    fn kernel_elements_satisfy_bianchi() {
        let k = curvature_space(&m_subspace(1, 0, 2).unwrap());
        assert!(k.dim() > 0);
        let gram = &ConventionName::C1.get().gram;
        for t in &k.basis {
            assert!(t.bianchi_violation().is_none());
            assert!(t.pair_symmetry_violation(gram).is_none());
            assert!(t.values().iter().all(|m| k.h.contains(m)));
        }
    }

    #[test]
    fn rejected_configuration_is_not_berger() {
        let h = LieMatrixAlgebra::span_of(
            7,
            &[TypeIElement::new(n_mat(), Scalar::zero(), [Scalar::zero(), Scalar::from_int(1)], [Scalar::zero(), Scalar::zero()]).matrix()],
        );
        assert!(!is_berger(&h).is_berger);
    }

    #[test]
    fn full_m_is_berger() {
        let r = is_berger(&m_full());
        assert!(r.is_berger);
        assert!(derived_span(&r.family).is_subalgebra_of(&m_full()));
    }

    #[test]
    fn monotone_under_inclusion() {
        let chain = [m_subspace(1, 0, 1).unwrap(), m_subspace(1, 0, 2).unwrap(), m_subspace(1, 1, 2).unwrap(), m_full()];
        let dims: Vec<usize> = chain.iter().map(|h| curvature_space(h).dim()).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{dims:?}");
    }

    #[test]
    fn bianchi_detects_bad_tensor() {
        let mut t = CurvatureTensor::zero(7);
        t.set(0, 1, TypeIElement::m(Scalar::from_int(1), [Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()]).matrix());
        assert!(t.bianchi_violation().is_some());
    }

    #[test]
    fn type1_table_matches_kernel() {
        let r = table_relations_check(Table::TypeI);
        assert_eq!(r.kernel_dim, 29, "{r:?}");
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn type2_table_report() {
        let r = table_relations_check(Table::TypeII);
        assert!(r.cells_in_kernel && r.footer_holds && r.pair_symmetric);
        assert_eq!(r.param_rank, 25);
        // One extra direction: R67 in the c-line, every other R_ij zero.
        assert_eq!(r.kernel_dim, 26);
        assert_eq!(r.missing, vec![vec![(6, 7)]]);
        let mut t = CurvatureTensor::zero(7);
        t.set(5, 6, TypeIIElement::n([Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()], Scalar::from_int(1)).matrix());
        assert!(t.bianchi_violation().is_none());
        assert!(t.pair_symmetry_violation(&ConventionName::C2.get().gram).is_none());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]

        #[test]
        fn monotone_on_sampled_pairs(mask in 0u32..512, extra in 0usize..9) {
            let basis = crate::catalog::family::type1_basis();
            let small: Vec<Matrix> = (0..9).filter(|i| mask & (1 << i) != 0).map(|i| basis[i].clone()).collect();
            let mut big = small.clone();
            big.push(basis[extra].clone());
            let (h, h2) = (LieMatrixAlgebra::span_of(7, &small), LieMatrixAlgebra::span_of(7, &big));
            let k = curvature_space(&h);
            proptest::prop_assert!(k.dim() <= curvature_space(&h2).dim());
            proptest::prop_assert!(derived_span(&k).is_subalgebra_of(&h));
        }
    }
}
