//! The catalog of Berger algebras: every case of the Type I, Type III and
//! Type II normal-form theorems, realized as literal matrix spans.
//!
//! Ids are `<base>` or `<base>[k=v,...]` with scalar values in text syntax,
//! e.g. `T1.1-a0`, `T1.2a[lambda=1/2]`, `T2.5d-I[s=3/10,alpha=3/5]`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::family::{
    m_full, m_subspace, mat2i, n_over, n_subspace, vec2i, TypeIElement, TypeIIElement, Vec4,
};
use super::gl2::{diag, gl2_subalgebra, n_mat};
use crate::error::{Error, Result};
use crate::exterior::ConventionName;
use crate::g2star::LieMatrixAlgebra;
use crate::Subspace;
use crate::repstruct::HolonomyType;
use crate::scalar::Scalar;
use crate::text::parse_scalar;
use crate::Matrix;

/// Which normal-form theorem a family comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    TypeI,
    TypeIII,
    TypeII,
}

impl Theorem {
    pub fn convention(self) -> ConventionName {
        match self {
            Theorem::TypeI | Theorem::TypeIII => ConventionName::C1,
            Theorem::TypeII => ConventionName::C2,
        }
    }

    pub fn declared_type(self) -> HolonomyType {
        match self {
            Theorem::TypeI => HolonomyType::I,
            Theorem::TypeIII => HolonomyType::III,
            Theorem::TypeII => HolonomyType::II,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "T1" | "I" => Ok(Theorem::TypeI),
            "T3" | "III" => Ok(Theorem::TypeIII),
            "T2" | "II" => Ok(Theorem::TypeII),
            _ => Err(Error::UnknownName {
                name: s.to_string(),
                available: "T1, T3, T2".into(),
            }),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::TypeI => "T1",
            Theorem::TypeIII => "T3",
            Theorem::TypeII => "T2",
        })
    }
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub label: String,
    pub theorem: Theorem,
    pub convention: ConventionName,
    pub algebra: LieMatrixAlgebra,
    pub declared_type: HolonomyType,
    pub parameters: Vec<(String, Scalar)>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatalogEntry({} = {}, {:?})", self.id, self.label, self.algebra)
    }
}

type Builder = Box<dyn Fn(&[Scalar]) -> Result<(Vec<Matrix>, String)> + Send + Sync>;

/// A (possibly parametrized) family of catalog entries.
pub struct Family {
    pub base: String,
    pub theorem: Theorem,
    pub params: Vec<&'static str>,
    grid: Vec<Vec<Scalar>>,
    build: Builder,
}

impl Family {
    pub fn default_grid(&self) -> &[Vec<Scalar>] {
        &self.grid
    }

    pub fn instantiate(&self, values: &[Scalar]) -> Result<CatalogEntry> {
        if values.len() != self.params.len() {
            return Err(Error::InvalidParameter(format!(
                "{} takes parameters {:?}, got {} values",
                self.base,
                self.params,
                values.len()
            )));
        }
        let (gens, label) = (self.build)(values)?;
        let parameters: Vec<(String, Scalar)> = self
            .params
            .iter()
            .zip(values)
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        Ok(CatalogEntry {
            id: format_id(&self.base, &parameters),
            label,
            theorem: self.theorem,
            convention: self.theorem.convention(),
            algebra: LieMatrixAlgebra::span_of(7, &gens),
            declared_type: self.theorem.declared_type(),
            parameters,
        })
    }
}

pub fn format_id(base: &str, params: &[(String, Scalar)]) -> String {
    if params.is_empty() {
        return base.to_string();
    }
    let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{base}[{}]", inner.join(","))
}

/// Splits an id into its base and `k=v` parameters.
pub fn parse_id(id: &str) -> Result<(String, Vec<(String, Scalar)>)> {
    let id = id.trim();
    let Some(open) = id.find('[') else {
        return Ok((id.to_string(), vec![]));
    };
    let rest = id[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| Error::InvalidParameter(format!("unbalanced '[' in id {id:?}")))?;
    let mut params = Vec::new();
    for kv in rest.split(',') {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected k=v, got {kv:?}")))?;
        params.push((k.trim().to_string(), parse_scalar(v.trim())?));
    }
    Ok((id[..open].to_string(), params))
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn h1_gl(a: Matrix) -> Matrix {
    TypeIElement::gl(a).matrix()
}

fn h1_u2(a: Matrix) -> Matrix {
    TypeIElement::new(a, Scalar::zero(), vec2i(0, 1), vec2i(0, 0)).matrix()
}

fn h2_gl(a: Matrix) -> Matrix {
    TypeIIElement::gl(a).matrix()
}

fn h2(a: Matrix, z: Vec4) -> Matrix {
    TypeIIElement::new(a, z, Scalar::zero()).matrix()
}

fn lift1(name: &str, p: Option<&Scalar>) -> Result<Vec<Matrix>> {
    Ok(gl2_subalgebra(name, p)?.basis().into_iter().map(h1_gl).collect())
}

fn lift2(name: &str, p: Option<&Scalar>) -> Result<Vec<Matrix>> {
    Ok(gl2_subalgebra(name, p)?.basis().into_iter().map(h2_gl).collect())
}

fn with(mut gens: Vec<Matrix>, ideal: &LieMatrixAlgebra) -> Vec<Matrix> {
    gens.extend(ideal.basis());
    gens
}

fn semidirect(a: &str, n: &str) -> String {
    if a.is_empty() {
        n.to_string()
    } else {
        format!("{a}⋉{n}")
    }
}

fn z_space(vecs: &[[Scalar; 4]]) -> Subspace {
    Subspace::span(4, &vecs.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
}

fn check_range(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// gl(2) parts shared by several families: (id fragment, gl2 name, label).
const T1_CASE1: &[(&str, &str, &str)] = &[
    ("a0", "0", ""),
    ("sl2", "sl2", "𝔰𝔩(2,ℝ)"),
    ("gl2", "gl2", "𝔤𝔩(2,ℝ)"),
    ("u1", "u1", "𝔲(1)"),
    ("b2", "b2", "𝔟₂"),
    ("b2hat", "b2hat", "𝔟̂₂"),
    ("d", "d", "𝔡"),
    ("S", "S", "ℝ·S"),
];

const N_SETS: &[(&str, &[u8])] = &[
    ("n", &[1, 2, 3, 4]),
    ("n13", &[1, 3]),
    ("n23", &[2, 3]),
    ("n24", &[2, 4]),
    ("n14", &[1, 4]),
    ("n34", &[3, 4]),
    ("n123", &[1, 2, 3]),
    ("n124", &[1, 2, 4]),
    ("n134", &[1, 3, 4]),
    ("n234", &[2, 3, 4]),
];

fn n_set(tag: &str) -> (&'static [u8], String) {
    let idx = N_SETS.iter().find(|(t, _)| *t == tag).expect("known n tag").1;
    let label = if idx.len() == 4 {
        "𝔫".to_string()
    } else {
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("𝔫({})", parts.join(","))
    };
    (idx, label)
}

fn fixed(f: impl Fn() -> Result<(Vec<Matrix>, String)> + Send + Sync + 'static) -> Builder {
    Box::new(move |_| f())
}

fn family(base: impl Into<String>, theorem: Theorem, params: Vec<&'static str>, grid: Vec<Vec<Scalar>>, build: Builder) -> Family {
    Family {
        base: base.into(),
        theorem,
        params,
        grid,
        build,
    }
}

fn type1_families() -> Vec<Family> {
    use Theorem::TypeI as T;
    let mut out = Vec::new();
    for &(tag, name, label) in T1_CASE1 {
        out.push(family(
            format!("T1.1-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || Ok((with(lift1(name, None)?, &m_full()), semidirect(label, "𝔪")))),
        ));
    }
    out.push(family(
        "T1.1-Ca",
        T,
        vec!["a"],
        vec![vec![s(0)], vec![s(1)]],
        Box::new(|p| Ok((with(lift1("Ca", Some(&p[0]))?, &m_full()), format!("ℝ·C_{{{}}}⋉𝔪", p[0])))),
    ));
    out.push(family(
        "T1.2a",
        T,
        vec!["lambda"],
        [s(-1), s(0), q(1, 2), s(1), s(2)].into_iter().map(|x| vec![x]).collect(),
        Box::new(|p| Ok((with(lift1("s", Some(&p[0]))?, &m_full()), format!("𝔰_{{{}}}⋉𝔪", p[0])))),
    ));
    out.push(family(
        "T1.2b",
        T,
        vec![],
        vec![vec![]],
        fixed(|| {
            let gens = vec![h1_u2(mat2i(1, 0, 0, 0)), h1_gl(n_mat())];
            Ok((with(gens, &m_subspace(1, 1, 2)?), "ℝ·h(X,0,(0,1)ᵀ,0)⋉(ℝ·N⋉𝔪(1,1,2)), X=diag(1,0)".into()))
        }),
    ));
    for i in 0..=1u8 {
        for j in 0..=1u8 {
            out.push(family(
                format!("T1.2c-i{i}j{j}"),
                T,
                vec![],
                vec![vec![]],
                fixed(move || {
                    let gens = vec![h1_gl(mat2i(2, 0, 0, 1)), h1_u2(n_mat())];
                    Ok((
                        with(gens, &m_subspace(i, j, 2)?),
                        format!("Span{{X, h(N,0,(0,1)ᵀ,0)}}⋉𝔪({i},{j},2), X=diag(2,1)"),
                    ))
                }),
            ));
        }
    }
    out.push(family(
        "T1.3a",
        T,
        vec!["mu"],
        [s(-1), s(0), q(1, 2), s(1)].into_iter().map(|x| vec![x]).collect(),
        Box::new(|p| {
            let mu = &p[0];
            check_range(mu >= &s(-1) && mu <= &s(1), || format!("mu = {mu} outside [-1, 1]"))?;
            Ok((with(lift1("diag1mu", Some(mu))?, &m_full()), format!("ℝ·diag(1,{mu})⋉𝔪")))
        }),
    ));
    out.push(family(
        "T1.3b",
        T,
        vec![],
        vec![vec![]],
        fixed(|| {
            Ok((
                with(vec![h1_u2(mat2i(1, 0, 0, 0))], &m_subspace(1, 1, 2)?),
                "ℝ·h(diag(1,0),0,(0,1)ᵀ,0)⋉𝔪(1,1,2)".into(),
            ))
        }),
    ));
    out.push(family(
        "T1.4a",
        T,
        vec![],
        vec![vec![]],
        fixed(|| Ok((with(lift1("N", None)?, &m_full()), "ℝ·N⋉𝔪".into()))),
    ));
    for j in 0..=1u8 {
        out.push(family(
            format!("T1.4b-j{j}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                Ok((
                    with(vec![h1_u2(n_mat())], &m_subspace(1, j, 2)?),
                    format!("ℝ·h(N,0,(0,1)ᵀ,0)⋉𝔪(1,{j},2)"),
                ))
            }),
        ));
    }
    out
}

fn type3_families() -> Vec<Family> {
    use Theorem::TypeIII as T;
    let mut out = Vec::new();
    for (tag, name, label) in [
        ("sl2", "sl2", "𝔰𝔩(2,ℝ)"),
        ("gl2", "gl2", "𝔤𝔩(2,ℝ)"),
        ("u1", "u1", "𝔲(1)"),
        ("d", "d", "𝔡"),
    ] {
        out.push(family(
            format!("T3.1-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || Ok((with(lift1(name, None)?, &m_subspace(1, 0, 2)?), semidirect(label, "𝔪(1,0,2)")))),
        ));
    }
    for (tag, label) in [("a0", ""), ("diag10", "ℝ·diag(1,0)")] {
        for k in 1..=2u8 {
            out.push(family(
                format!("T3.2-{tag}-k{k}"),
                T,
                vec![],
                vec![vec![]],
                fixed(move || {
                    let a = if tag == "a0" { vec![] } else { lift1("diag1mu", Some(&Scalar::zero()))? };
                    Ok((with(a, &m_subspace(1, 0, k)?), semidirect(label, &format!("𝔪(1,0,{k})"))))
                }),
            ));
        }
    }
    out
}

fn z2_space() -> Subspace {
    z_space(&[[s(3), s(0), s(1), s(0)], [s(0), s(1), s(0), s(3)]])
}

fn type2_families() -> Vec<Family> {
    use Theorem::TypeII as T;
    let mut out = Vec::new();
    for (tag, label) in [("sl2", "𝔰𝔩(2,ℝ)"), ("gl2", "𝔤𝔩(2,ℝ)")] {
        out.push(family(
            format!("T2.1-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || Ok((with(lift2(tag, None)?, &n_subspace(&[1, 2, 3, 4])?), semidirect(label, "𝔫")))),
        ));
    }
    for (ztag, zlabel) in [("n", "𝔫"), ("Z2", "𝔫_Z, Z={(3r,s,r,3s)}")] {
        let ideal = move || -> Result<LieMatrixAlgebra> {
            if ztag == "n" {
                n_subspace(&[1, 2, 3, 4])
            } else {
                Ok(n_over(&z2_space()))
            }
        };
        out.push(family(
            format!("T2.2-u1-{ztag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || Ok((with(lift2("u1", None)?, &ideal()?), semidirect("𝔲(1)", zlabel)))),
        ));
        out.push(family(
            format!("T2.2-Ca-{ztag}"),
            T,
            vec!["a"],
            vec![vec![s(0)], vec![s(1)]],
            Box::new(move |p| {
                Ok((with(lift2("Ca", Some(&p[0]))?, &ideal()?), semidirect(&format!("ℝ·C_{{{}}}", p[0]), zlabel)))
            }),
        ));
    }
    for tag in ["n", "n13", "n23", "n123", "n124"] {
        out.push(family(
            format!("T2.3-d-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                let (idx, l) = n_set(tag);
                Ok((with(lift2("d", None)?, &n_subspace(idx)?), semidirect("𝔡", &l)))
            }),
        ));
    }
    for tag in ["n", "n23", "n123", "n124", "n134", "n234"] {
        out.push(family(
            format!("T2.4a-{tag}"),
            T,
            vec!["mu"],
            [s(-1), q(-1, 2), s(0), q(1, 2)].into_iter().map(|x| vec![x]).collect(),
            Box::new(move |p| {
                let mu = &p[0];
                check_range(mu >= &s(-1) && mu < &s(1), || format!("mu = {mu} outside [-1, 1)"))?;
                let (idx, l) = n_set(tag);
                Ok((
                    with(lift2("diag1mu", Some(mu))?, &n_subspace(idx)?),
                    semidirect(&format!("ℝ·diag(1,{mu})"), &l),
                ))
            }),
        ));
    }
    for tag in ["n23", "n234"] {
        out.push(family(
            format!("T2.4b-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                let (idx, l) = n_set(tag);
                let g = h2(diag(s(1), q(1, 2)), [s(1), s(0), s(0), s(0)]);
                Ok((with(vec![g], &n_subspace(idx)?), semidirect("ℝ·h(diag(1,1/2),(1,0,0,0)ᵀ,0)", &l)))
            }),
        ));
    }
    out.push(family(
        "T2.4c-n24",
        T,
        vec![],
        vec![vec![]],
        fixed(|| {
            Ok((
                with(lift2("diag1mu", Some(&Scalar::zero()))?, &n_subspace(&[2, 4])?),
                "ℝ·diag(1,0)⋉𝔫(2,4)".into(),
            ))
        }),
    ));
    for tag in ["n14", "n34", "n134"] {
        out.push(family(
            format!("T2.4c-{tag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                let (idx, l) = n_set(tag);
                let g = h2(diag(s(1), s(0)), [s(0), s(1), s(0), s(0)]);
                Ok((with(vec![g], &n_subspace(idx)?), semidirect("ℝ·h(diag(1,0),(0,1,0,0)ᵀ,0)", &l)))
            }),
        ));
    }
    for (atag, alabel) in [("a0", ""), ("I", "ℝ·I")] {
        let a_gens = move || -> Result<Vec<Matrix>> {
            if atag == "a0" {
                Ok(vec![])
            } else {
                lift2("I", None)
            }
        };
        for tag in ["n", "n13", "n23", "n134", "n234"] {
            out.push(family(
                format!("T2.5-{atag}-{tag}"),
                T,
                vec![],
                vec![vec![]],
                fixed(move || {
                    let (idx, l) = n_set(tag);
                    Ok((with(a_gens()?, &n_subspace(idx)?), semidirect(alabel, &l)))
                }),
            ));
        }
        out.push(family(
            format!("T2.5a-{atag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                let z = z_space(&[[s(1), s(0), s(1), s(0)], [s(0), s(0), s(0), s(1)]]);
                Ok((with(a_gens()?, &n_over(&z)), semidirect(alabel, "𝔫_Z, Z={(z1,0,z1,z4)}")))
            }),
        ));
        out.push(family(
            format!("T2.5b-{atag}"),
            T,
            vec![],
            vec![vec![]],
            fixed(move || {
                let z = z_space(&[[s(0), s(1), s(0), s(-1)], [s(0), s(0), s(1), s(0)]]);
                Ok((with(a_gens()?, &n_over(&z)), semidirect(alabel, "𝔫_Z, Z={(0,z2,z3,-z2)}")))
            }),
        ));
        out.push(family(
            format!("T2.5c-{atag}"),
            T,
            vec!["alpha"],
            [Scalar::quad(0, 1, 1, 2), q(1, 2), s(1)].into_iter().map(|x| vec![x]).collect(),
            Box::new(move |p| {
                let al = &p[0];
                // alpha in [(sqrt3-1)/sqrt6, (sqrt3+1)/sqrt6] iff alpha^2 - sqrt2 alpha + 1/3 <= 0
                let f = al * al - &Scalar::sqrt2() * al + q(1, 3);
                check_range(f.sign() <= 0, || {
                    format!("alpha = {al} outside [(sqrt3-1)/sqrt6, (sqrt3+1)/sqrt6]")
                })?;
                let z = z_space(&[[s(1), al.clone(), s(0), s(0)], [s(0), s(0), al.clone(), s(1)]]);
                Ok((
                    with(a_gens()?, &n_over(&z)),
                    semidirect(alabel, &format!("𝔫_Z, Z={{(z1,{al} z1,{al} z4,z4)}}")),
                ))
            }),
        ));
        out.push(family(
            format!("T2.5d-{atag}"),
            T,
            vec!["s", "alpha"],
            vec![
                vec![s(1), s(1)],
                vec![s(1), q(-1, 3)],
                vec![q(3, 10), q(3, 5)],
                vec![q(3, 10), q(-1, 6)],
            ],
            Box::new(move |p| {
                let (sv, al) = (&p[0], &p[1]);
                check_range(sv > &Scalar::zero() && sv <= &Scalar::one(), || format!("s = {sv} outside (0, 1]"))?;
                let res = s(3) * al.clone() * al.clone() - (sv + &Scalar::one()) * al.clone() - sv.clone();
                check_range(res.is_zero(), || {
                    format!("(s, alpha) = ({sv}, {al}) violates 3 alpha^2 - (s+1) alpha - s = 0 (residual {res})")
                })?;
                let z = z_space(&[[sv.clone(), s(0), -al.clone(), s(0)], [s(0), al.clone(), s(0), s(-1)]]);
                Ok((
                    with(a_gens()?, &n_over(&z)),
                    semidirect(alabel, &format!("𝔫_Z, Z={{({sv} z1,{al} z2,-{al} z1,-z2)}}")),
                ))
            }),
        ));
        out.push(family(
            format!("T2.5e-{atag}"),
            T,
            vec!["kappa"],
            vec![vec![s(1)], vec![s(-1)]],
            Box::new(move |p| {
                let k = &p[0];
                check_range(k == &s(1) || k == &s(-1), || format!("kappa = {k} must be 1 or -1"))?;
                let z = z_space(&[[s(1), s(0), k.clone(), s(0)], [s(0), s(1), s(0), s(0)], [s(0), s(0), s(0), s(1)]]);
                Ok((
                    with(a_gens()?, &n_over(&z)),
                    semidirect(alabel, &format!("𝔫_Z, Z={{(z1,z2,{k} z1,z4)}}")),
                ))
            }),
        ));
    }
    out
}

/// All families, Type I first, then Type III, then Type II.
pub fn families() -> &'static [Family] {
    static CELL: OnceLock<Vec<Family>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = type1_families();
        v.extend(type3_families());
        v.extend(type2_families());
        v
    })
}

pub fn family_by_base(base: &str) -> Result<&'static Family> {
    families().iter().find(|f| f.base == base).ok_or_else(|| Error::UnknownName {
        name: base.to_string(),
        available: families().iter().map(|f| f.base.clone()).collect::<Vec<_>>().join(", "),
    })
}

/// Builds the entry for an id; parameters may also be supplied separately
/// (they override values given in the id).
pub fn entry_with(id: &str, extra: &[(String, Scalar)]) -> Result<CatalogEntry> {
    let (base, mut given) = parse_id(id)?;
    for (k, v) in extra {
        match given.iter_mut().find(|(gk, _)| gk == k) {
            Some(slot) => slot.1 = v.clone(),
            None => given.push((k.clone(), v.clone())),
        }
    }
    let fam = family_by_base(&base)?;
    for (k, _) in &given {
        if !fam.params.contains(&k.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "{base} has no parameter {k:?} (parameters: {:?})",
                fam.params
            )));
        }
    }
    let values: Vec<Scalar> = fam
        .params
        .iter()
        .map(|p| {
            given
                .iter()
                .find(|(k, _)| k == p)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::InvalidParameter(format!("{base} needs parameter {p}")))
        })
        .collect::<Result<_>>()?;
    fam.instantiate(&values)
}

pub fn entry(id: &str) -> Result<CatalogEntry> {
    entry_with(id, &[])
}

/// Every family instantiated on its default parameter grid.
pub fn all_entries() -> Vec<CatalogEntry> {
    families()
        .iter()
        .flat_map(|f| f.grid.iter().map(move |g| f.instantiate(g).expect("default grid is valid")))
        .collect()
}

/// The default-grid entries of one theorem.
pub fn theorem_entries(which: Theorem) -> Vec<CatalogEntry> {
    families()
        .iter()
        .filter(|f| f.theorem == which)
        .flat_map(|f| f.grid.iter().map(move |g| f.instantiate(g).expect("default grid is valid")))
        .collect()
}

/// Ids of every default-grid entry.
pub fn all_ids() -> Vec<String> {
    all_entries().into_iter().map(|e| e.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2star::{annihilates_omega, so_check};
    use crate::catalog::family::m_subspace;

    #[test]
    fn ids_round_trip() {
        for e in all_entries() {
            let again = entry(&e.id).unwrap();
            assert_eq!(again.id, e.id);
            assert_eq!(again.algebra, e.algebra);
        }
        let ids = all_ids();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
    }

    #[test]
    fn entries_are_closed_and_inside_g2() {
        let mut open = Vec::new();
        for e in all_entries() {
            let conv = e.convention.get();
            if !e.algebra.is_closed() {
                open.push(e.id.clone());
            }
            for b in e.algebra.basis() {
                assert!(annihilates_omega(conv, &b), "{}", e.id);
                assert!(so_check(conv, &b), "{}", e.id);
            }
        }
        // [h(0,0,(1,0),0), h(N,0,(0,1),0)] has a v-component, which m(0,1,2) lacks.
        assert_eq!(open, vec!["T1.2c-i0j1".to_string()]);
        let e = entry("T1.2c-i0j1").unwrap();
        let (i, j) = e.algebra.closure_violation().unwrap();
        let b = e.algebra.basis();
        let c = TypeIElement::from_matrix(&b[i].commutator(&b[j])).unwrap();
        assert!(!c.v.is_zero());
    }

    #[test]
    fn dimensions() {
        let d = |id: &str| entry(id).unwrap().algebra.dim();
        assert_eq!(d("T1.1-a0"), 5);
        assert_eq!(d("T1.1-gl2"), 9);
        assert_eq!(d("T2.1-sl2"), 8);
        assert_eq!(d("T3.2-a0-k1"), 2);
        assert_eq!(d("T1.2b"), 6);
        assert_eq!(d("T2.5e-I[kappa=-1]"), 5);
        assert_eq!(entry("T3.2-a0-k2").unwrap().algebra, m_subspace(1, 0, 2).unwrap());
        assert_eq!(entry("T1.1-a0").unwrap().label, "𝔪");
        assert_eq!(entry("T1.2a[lambda=1/2]").unwrap().label, "𝔰_{1/2}⋉𝔪");
        assert_eq!(entry("T2.5-a0-n13").unwrap().label, "𝔫(1,3)");
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(entry("T9.9"), Err(Error::UnknownName { .. })));
        assert!(entry("T1.2a").is_err());
        assert!(entry("T1.3a[mu=2]").is_err());
        assert!(entry("T2.4a-n[mu=1]").is_err());
        assert!(entry("T2.5c-a0[alpha=2]").is_err());
        assert!(entry("T2.5c-a0[alpha=1/4]").is_err());
        assert!(entry("T2.5d-a0[s=1,alpha=2]").is_err());
        assert!(entry("T2.5d-a0[s=0,alpha=0]").is_err());
        assert!(entry("T2.5e-a0[kappa=2]").is_err());
        assert!(entry("T1.1-a0[x=1]").is_err());
        let e = entry_with("T1.2a", &[("lambda".into(), Scalar::from_int(3))]).unwrap();
        assert_eq!(e.id, "T1.2a[lambda=3]");
    }

    #[test]
    fn theorem_counts() {
        assert!(theorem_entries(Theorem::TypeIII).len() == 8);
        assert_eq!(
            theorem_entries(Theorem::TypeI).len() + theorem_entries(Theorem::TypeII).len() + 8,
            all_entries().len()
        );
    }
}
