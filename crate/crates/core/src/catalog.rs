//! Named algebras: C_m, U_3, N_3, the two-generator Grassmann algebra and W.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};
use crate::gstar::{GStarAlgebra, Triple};
use crate::scalar::{int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvolutionKind {
    Trivial,
    CStar,
    /// Negates every radical power of `E_1`. Not an anti-automorphism of
    /// `C_3`; only available through [`c_algebra_unchecked`].
    CStarAlt,
    Reflection,
    Psi,
    Tau,
    Gamma,
    Nu1,
    Nu2,
    Nu3,
}

impl InvolutionKind {
    pub fn tag(self) -> &'static str {
        use InvolutionKind::*;
        match self {
            Trivial => "trivial",
            CStar => "c-star",
            CStarAlt => "c-star-alt",
            Reflection => "reflection",
            Psi => "psi",
            Tau => "tau",
            Gamma => "gamma",
            Nu1 => "nu1",
            Nu2 => "nu2",
            Nu3 => "nu3",
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triangular {
    U,
    N,
}

type Matrix = Vec<Vec<Scalar>>;

fn zeros(n: usize) -> Matrix {
    vec![vec![Scalar::zero(); n]; n]
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = zeros(n);
    m[i - 1][j - 1] = Scalar::one();
    m
}

fn add(a: &Matrix, b: &Matrix, s: i64) -> Matrix {
    a.iter().zip(b).map(|(r, t)| r.iter().zip(t).map(|(x, y)| x + y * int(s)).collect()).collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero()).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity_matrix(n: usize) -> Matrix {
    (1..=n).fold(zeros(n), |m, i| add(&m, &unit_matrix(n, i, i), 1))
}

/// Coordinates of `target` in the span of `basis`, by Gauss–Jordan over Q.
fn coordinates(basis: &[Matrix], target: &Matrix) -> Option<Vec<Scalar>> {
    let d = basis.len();
    let flat = |m: &Matrix| m.iter().flatten().cloned().collect::<Vec<_>>();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(flat).collect();
    let rhs = flat(target);
    let mut rows: Vec<Vec<Scalar>> =
        (0..rhs.len()).map(|t| cols.iter().map(|c| c[t].clone()).chain([rhs[t].clone()]).collect()).collect();
    let mut r = 0;
    let mut piv = Vec::new();
    for c in 0..d {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pv = rows[r][c].clone();
        rows[r].iter_mut().for_each(|x| *x /= &pv);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pr = rows[r].clone();
                rows[i].iter_mut().zip(&pr).for_each(|(x, y)| *x -= &f * y);
            }
        }
        piv.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); d];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = rows[i][d].clone();
    }
    Some(x)
}

/// Structure constants and involution of the matrix algebra spanned by
/// `mats`, with `star` an involution on the ambient matrices.
fn from_matrices(mats: &[Matrix], star: impl Fn(&Matrix) -> Matrix) -> (Vec<Triple>, Matrix) {
    let d = mats.len();
    let mut structure = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let x = coordinates(mats, &matmul(&mats[i], &mats[j])).expect("span is closed under products");
            structure.extend(x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (i, j, k, c)));
        }
    }
    let mut inv = zeros(d);
    for (j, m) in mats.iter().enumerate() {
        let x = coordinates(mats, &star(m)).expect("span is closed under the involution");
        for (i, c) in x.into_iter().enumerate() {
            inv[i][j] = c;
        }
    }
    (structure, inv)
}

fn diagonal(signs: &[i64]) -> Matrix {
    let mut m = zeros(signs.len());
    for (i, &s) in signs.iter().enumerate() {
        m[i][i] = int(s);
    }
    m
}

fn first_unit(d: usize) -> Option<Vec<Scalar>> {
    let mut u = vec![Scalar::zero(); d];
    u[0] = Scalar::one();
    Some(u)
}

fn c_parts(m: usize, g: Elem, group: &FiniteGroup, kind: InvolutionKind) -> Result<(Vec<Elem>, Vec<Triple>, Matrix)> {
    if m < 2 {
        return Err(Error::Invalid(format!("C_m needs m >= 2, got {m}")));
    }
    let signs: Vec<i64> = (0..m)
        .map(|i| match kind {
            InvolutionKind::Trivial => Ok(1),
            InvolutionKind::CStar => Ok(if i % 2 == 0 { 1 } else { -1 }),
            InvolutionKind::CStarAlt => Ok(if i == 0 { 1 } else { -1 }),
            k => Err(Error::Invalid(format!("involution {k} does not apply to C_m"))),
        })
        .collect::<Result<_>>()?;
    let n = m;
    let e1 = (1..n).fold(zeros(n), |acc, i| add(&acc, &unit_matrix(n, i, i + 1), 1));
    let mut pows = vec![identity_matrix(n)];
    for _ in 1..m {
        let next = matmul(pows.last().unwrap(), &e1);
        pows.push(next);
    }
    let (structure, _) = from_matrices(&pows, |x| x.clone());
    let grading = (0..m).map(|i| group.pow(g, i)).collect();
    Ok((grading, structure, diagonal(&signs)))
}

/// `C_m^g` (trivial involution) or `C_{m,*}^g` (`E_1^i ↦ (-1)^i E_1^i`).
pub fn c_algebra(m: usize, g: Elem, group: &FiniteGroup, kind: InvolutionKind) -> Result<GStarAlgebra> {
    let (grading, structure, inv) = c_parts(m, g, group, kind)?;
    GStarAlgebra::new(group.clone(), grading, structure, inv, first_unit(m))
}

pub fn c_algebra_unchecked(m: usize, g: Elem, group: &FiniteGroup, kind: InvolutionKind) -> Result<GStarAlgebra> {
    let (grading, structure, inv) = c_parts(m, g, group, kind)?;
    GStarAlgebra::new_unchecked(group.clone(), grading, structure, inv, first_unit(m))
}

/// `U_{3,*}^g` or `N_{3,*}^g` inside `UT_6`, elementary grading from
/// `(1, g, g, 1, 1, g)` and the reflection involution.
pub fn triangular_pair(which: Triangular, g: Elem, group: &FiniteGroup) -> Result<GStarAlgebra> {
    let n = 6;
    let e = |i, j| unit_matrix(n, i, j);
    let s = match which {
        Triangular::U => 1,
        Triangular::N => -1,
    };
    let mats = vec![identity_matrix(n), add(&e(2, 3), &e(4, 5), 1), add(&e(1, 2), &e(5, 6), s), e(1, 3), e(4, 6)];
    let reflect = |m: &Matrix| (0..n).map(|i| (0..n).map(|j| m[n - 1 - j][n - 1 - i].clone()).collect()).collect();
    let (structure, inv) = from_matrices(&mats, reflect);
    let tuple = [group.identity(), g, g, group.identity(), group.identity(), g];
    let deg = |i: usize, j: usize| group.mul(group.inverse(tuple[i - 1]), tuple[j - 1]);
    let grading = vec![group.identity(), deg(2, 3), deg(1, 2), deg(1, 3), deg(4, 6)];
    GStarAlgebra::new(group.clone(), grading, structure, inv, first_unit(5))
}

/// The Grassmann algebra on two generators, basis `1, e_1, e_2, e_1e_2`.
pub fn grassmann2(g: Elem, h: Elem, group: &FiniteGroup, kind: InvolutionKind) -> Result<GStarAlgebra> {
    let (s1, s2) = match kind {
        InvolutionKind::Psi => (1, 1),
        InvolutionKind::Tau => (-1, -1),
        InvolutionKind::Gamma => (-1, 1),
        k => return Err(Error::Invalid(format!("involution {k} does not apply to G_2"))),
    };
    let mut structure: Vec<Triple> = Vec::new();
    for i in 0..4 {
        structure.push((0, i, i, int(1)));
        if i > 0 {
            structure.push((i, 0, i, int(1)));
        }
    }
    structure.push((1, 2, 3, int(1)));
    structure.push((2, 1, 3, int(-1)));
    // (e_1 e_2)* = e_2* e_1* = s1 s2 e_2 e_1 = -s1 s2 e_1 e_2
    let inv = diagonal(&[1, s1, s2, -s1 * s2]);
    let grading = vec![group.identity(), g, h, group.mul(g, h)];
    GStarAlgebra::new(group.clone(), grading, structure, inv, first_unit(4))
}

/// `W = span{I_4, e_12+e_34, e_13+e_24, e_14}` with involution `ν_1`, `ν_2` or `ν_3`.
pub fn w_algebra(g: Elem, h: Elem, group: &FiniteGroup, kind: InvolutionKind) -> Result<GStarAlgebra> {
    let signs = match kind {
        InvolutionKind::Nu1 => [1, 1, 1, 1],
        InvolutionKind::Nu2 => [1, -1, -1, 1],
        InvolutionKind::Nu3 => [1, -1, 1, -1],
        k => return Err(Error::Invalid(format!("involution {k} does not apply to W"))),
    };
    let n = 4;
    let e = |i, j| unit_matrix(n, i, j);
    let mats = vec![identity_matrix(n), add(&e(1, 2), &e(3, 4), 1), add(&e(1, 3), &e(2, 4), 1), e(1, 4)];
    let (structure, _) = from_matrices(&mats, |x| x.clone());
    let grading = vec![group.identity(), g, h, group.mul(g, h)];
    GStarAlgebra::new(group.clone(), grading, structure, diagonal(&signs), first_unit(4))
}

/// The one-dimensional algebra `F` in degree 1 with trivial involution.
pub fn field(group: &FiniteGroup) -> GStarAlgebra {
    GStarAlgebra::new(group.clone(), vec![group.identity()], vec![(0, 0, 0, int(1))], diagonal(&[1]), first_unit(1))
        .expect("F is a valid algebra")
}

/// The span of all basis elements but the first. For the catalog algebras
/// this is the Jacobson radical, returned as a nonunital algebra.
pub fn radical(a: &GStarAlgebra) -> Result<GStarAlgebra> {
    let idx: Vec<usize> = (1..a.dim()).collect();
    a.subalgebra(&idx)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub degrees: usize,
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "C<m>", degrees: 1, description: "C_m^g, trivial involution (m >= 2)" },
    CatalogEntry { name: "C<m>star", degrees: 1, description: "C_{m,*}^g, E_1^i -> (-1)^i E_1^i" },
    CatalogEntry { name: "U3", degrees: 1, description: "U_{3,*}^g, reflection involution" },
    CatalogEntry { name: "N3", degrees: 1, description: "N_{3,*}^g, reflection involution" },
    CatalogEntry { name: "G2psi", degrees: 2, description: "G_{2,psi}^{g,h}" },
    CatalogEntry { name: "G2tau", degrees: 2, description: "G_{2,tau}^{g,h}" },
    CatalogEntry { name: "G2gamma", degrees: 2, description: "G_{2,gamma}^{g,h}" },
    CatalogEntry { name: "Wnu1", degrees: 2, description: "W_{nu1}^{g,h}" },
    CatalogEntry { name: "Wnu2", degrees: 2, description: "W_{nu2}^{g,h}" },
    CatalogEntry { name: "Wnu3", degrees: 2, description: "W_{nu3}^{g,h}" },
    CatalogEntry { name: "F", degrees: 0, description: "the field, trivial grading and involution" },
];

/// Builds a catalog algebra from its name and grading degrees.
pub fn by_name(name: &str, degrees: &[Elem], group: &FiniteGroup) -> Result<GStarAlgebra> {
    let need = |k: usize| {
        if degrees.len() == k {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{name} takes {k} degree(s), got {}", degrees.len())))
        }
    };
    if let Some(&d) = degrees.iter().find(|&&d| d >= group.order()) {
        return Err(Error::Invalid(format!("degree {d} is not an element of a group of order {}", group.order())));
    }
    use InvolutionKind::*;
    match name {
        "F" => need(0).map(|_| field(group)),
        "U3" => need(1).and_then(|_| triangular_pair(Triangular::U, degrees[0], group)),
        "N3" => need(1).and_then(|_| triangular_pair(Triangular::N, degrees[0], group)),
        "G2psi" | "G2tau" | "G2gamma" => {
            need(2)?;
            let k = [Psi, Tau, Gamma][["G2psi", "G2tau", "G2gamma"].iter().position(|x| *x == name).unwrap()];
            grassmann2(degrees[0], degrees[1], group, k)
        }
        "Wnu1" | "Wnu2" | "Wnu3" => {
            need(2)?;
            let k = [Nu1, Nu2, Nu3][["Wnu1", "Wnu2", "Wnu3"].iter().position(|x| *x == name).unwrap()];
            w_algebra(degrees[0], degrees[1], group, k)
        }
        _ => {
            let rest = name.strip_prefix('C').ok_or_else(|| Error::Invalid(format!("unknown algebra {name:?}")))?;
            let (rest, star) = match rest.strip_prefix("star") {
                Some(r) => (r, true),
                None => (rest, false),
            };
            let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
            let kind = match (&rest[digits.len()..], star) {
                ("", false) => Trivial,
                ("star", false) | ("", true) => CStar,
                _ => return Err(Error::Invalid(format!("unknown algebra {name:?}"))),
            };
            let m: usize = digits.parse().map_err(|_| Error::Invalid(format!("unknown algebra {name:?}")))?;
            need(1)?;
            c_algebra(m, degrees[0], group, kind)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, klein};
    use crate::gstar::{AlgebraViolation, SignedDegree};

    #[test]
    fn c_algebras() {
        let z4 = cyclic(4).unwrap();
        let c = c_algebra(3, 1, &z4, InvolutionKind::CStar).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.grading(), &[0, 1, 2]);
        let e1 = c.basis_vector(1);
        assert_eq!(c.multiply(&e1, &e1), c.basis_vector(2));
        assert_eq!(c.homogeneous_component(SignedDegree::minus(1)).len(), 1);
        assert!(c.homogeneous_component(SignedDegree::plus(1)).is_empty());
        let supp: Vec<_> = c.supp_star().into_iter().collect();
        assert_eq!(supp, vec![SignedDegree::plus(0), SignedDegree::minus(1), SignedDegree::plus(2)]);
        assert!(matches!(
            c_algebra(3, 1, &z4, InvolutionKind::CStarAlt),
            Err(Error::Algebra(AlgebraViolation::NotAntiAutomorphism { i: 1, j: 1 }))
        ));
        assert!(c_algebra(1, 1, &z4, InvolutionKind::Trivial).is_err());
        let h = c_algebra(3, 1, &cyclic(2).unwrap(), InvolutionKind::Trivial).unwrap();
        assert_eq!(h.grading(), &[0, 1, 0]);
    }

    #[test]
    fn triangular() {
        let z3 = cyclic(3).unwrap();
        let n = triangular_pair(Triangular::N, 1, &z3).unwrap();
        assert_eq!(n.dim(), 5);
        let u = triangular_pair(Triangular::U, 2, &z3).unwrap();
        let supp: Vec<_> = u.supp_star().into_iter().collect();
        assert_eq!(supp, vec![SignedDegree::plus(0), SignedDegree::plus(2), SignedDegree::minus(2)]);
        let u1 = triangular_pair(Triangular::U, 0, &cyclic(1).unwrap()).unwrap();
        assert_eq!(u1.homogeneous_component(SignedDegree::minus(0)).len(), 1);
    }

    #[test]
    fn grassmann() {
        let z4 = cyclic(4).unwrap();
        let g = grassmann2(1, 1, &z4, InvolutionKind::Tau).unwrap();
        let (e1, e2) = (g.basis_vector(1), g.basis_vector(2));
        assert_eq!(g.multiply(&e1, &e2), g.basis_vector(3));
        assert_eq!(g.multiply(&e2, &e1), g.involute(&g.basis_vector(3)));
        assert_eq!(g.involute(&e1), g.multiply(&e1, &[int(-1), int(0), int(0), int(0)]));
        let gm = grassmann2(1, 1, &z4, InvolutionKind::Gamma).unwrap();
        assert_eq!(gm.involute(&gm.basis_vector(3)), gm.basis_vector(3));
        assert_eq!(gm.involute(&gm.basis_vector(2)), gm.basis_vector(2));
        let k = klein();
        let t = grassmann2(2, 1, &k, InvolutionKind::Tau).unwrap();
        for d in [SignedDegree::minus(2), SignedDegree::minus(1), SignedDegree::minus(3)] {
            assert!(t.supp_star().contains(&d));
        }
    }

    #[test]
    fn w() {
        let z4 = cyclic(4).unwrap();
        let w = w_algebra(1, 2, &z4, InvolutionKind::Nu3).unwrap();
        let (b, c) = (w.basis_vector(1), w.basis_vector(2));
        assert_eq!(w.multiply(&b, &c), w.basis_vector(3));
        assert_eq!(w.multiply(&c, &b), w.basis_vector(3));
        assert!(w.multiply(&b, &b).iter().all(Zero::is_zero));
        assert!(w.multiply(&c, &c).iter().all(Zero::is_zero));
        let w1 = w_algebra(1, 2, &z4, InvolutionKind::Nu1).unwrap();
        assert!(w1.supp_star().iter().all(|d| d.sign == crate::gstar::Sign::Plus));
    }

    #[test]
    fn grading_violation_detected() {
        let z4 = cyclic(4).unwrap();
        let w = w_algebra(1, 2, &z4, InvolutionKind::Nu1).unwrap();
        let mut grading = w.grading().to_vec();
        grading[3] = 0;
        let r = GStarAlgebra::new(z4, grading, w.structure_triples(), w.involution_matrix().to_vec(), None);
        assert!(matches!(r, Err(Error::Algebra(AlgebraViolation::Grading { .. }))));
    }

    #[test]
    fn names() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(by_name("C3star", &[1], &z4).unwrap().dim(), 3);
        assert_eq!(by_name("Wnu2", &[1, 3], &z4).unwrap().dim(), 4);
        assert!(by_name("C3", &[1, 2], &z4).is_err());
        assert!(by_name("X", &[], &z4).is_err());
        assert!(by_name("C3", &[7], &z4).is_err());
    }
}
