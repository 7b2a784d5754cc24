//! Finite-dimensional algebras with a G-grading and a graded involution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};
use crate::linalg::Echelon;
use crate::scalar::{format_scalar, parse_scalar, to_int_row, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A grading degree together with a symmetry type. The derived order is the
/// canonical one: group index first, `+` before `-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedDegree {
    pub g: Elem,
    pub sign: Sign,
}

impl SignedDegree {
    pub fn new(g: Elem, sign: Sign) -> Self {
        SignedDegree { g, sign }
    }

    pub fn plus(g: Elem) -> Self {
        SignedDegree { g, sign: Sign::Plus }
    }

    pub fn minus(g: Elem) -> Self {
        SignedDegree { g, sign: Sign::Minus }
    }

    pub fn all(group: &FiniteGroup) -> Vec<SignedDegree> {
        group.elements().flat_map(|g| Sign::BOTH.map(|s| SignedDegree::new(g, s))).collect()
    }
}

impl fmt::Display for SignedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.g, self.sign.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    Shape(String),
    GradingOutOfRange { basis: usize },
    NonAssociative { i: usize, j: usize, k: usize },
    Grading { i: usize, j: usize, k: usize },
    InvolutionNotGraded { from: usize, to: usize },
    NotInvolutive { basis: usize },
    NotAntiAutomorphism { i: usize, j: usize },
    UnitNotIdentity { basis: usize },
    UnitNotSymmetricOfTrivialDegree,
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraViolation::*;
        match self {
            Shape(s) => write!(f, "inconsistent shape: {s}"),
            GradingOutOfRange { basis } => write!(f, "degree of b_{basis} is not a group element"),
            NonAssociative { i, j, k } => write!(f, "associativity fails on (b_{i}, b_{j}, b_{k})"),
            Grading { i, j, k } => write!(f, "grading violation: b_{i} b_{j} has a b_{k} component of the wrong degree"),
            InvolutionNotGraded { from, to } => {
                write!(f, "involution is not graded: b_{from}* has a b_{to} component of another degree")
            }
            NotInvolutive { basis } => write!(f, "involution does not square to the identity on b_{basis}"),
            NotAntiAutomorphism { i, j } => write!(f, "anti-automorphism violation: (b_{i} b_{j})* != b_{j}* b_{i}*"),
            UnitNotIdentity { basis } => write!(f, "unit does not act as identity on b_{basis}"),
            UnitNotSymmetricOfTrivialDegree => write!(f, "unit is not a symmetric element of trivial degree"),
        }
    }
}

impl std::error::Error for AlgebraViolation {}

#[derive(Clone, Debug)]
pub struct GStarAlgebra {
    group: FiniteGroup,
    dim: usize,
    /// `structure[i][j]` lists `(k, c)` with `b_i b_j = Σ c b_k`.
    structure: Vec<Vec<Vec<(usize, Scalar)>>>,
    grading: Vec<Elem>,
    /// Acts on coordinate columns: `involute(v) = involution · v`.
    involution: Vec<Vec<Scalar>>,
    unit: Option<Vec<Scalar>>,
    components: BTreeMap<SignedDegree, Vec<Vec<Scalar>>>,
}

pub type Triple = (usize, usize, usize, Scalar);

impl GStarAlgebra {
    /// Builds and validates an algebra.
    pub fn new(
        group: FiniteGroup,
        grading: Vec<Elem>,
        structure: Vec<Triple>,
        involution: Vec<Vec<Scalar>>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let a = Self::new_unchecked(group, grading, structure, involution, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// Builds an algebra checking only array shapes. Used for deliberately
    /// invalid variants; downstream results are meaningless unless
    /// [`GStarAlgebra::validate`] succeeds.
    pub fn new_unchecked(
        group: FiniteGroup,
        grading: Vec<Elem>,
        structure: Vec<Triple>,
        involution: Vec<Vec<Scalar>>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let dim = grading.len();
        let shape = |s: String| Error::Algebra(AlgebraViolation::Shape(s));
        if involution.len() != dim || involution.iter().any(|r| r.len() != dim) {
            return Err(shape(format!("involution must be {dim}x{dim}")));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(shape(format!("unit must have {dim} coordinates")));
            }
        }
        if let Some(b) = grading.iter().position(|&g| g >= group.order()) {
            return Err(Error::Algebra(AlgebraViolation::GradingOutOfRange { basis: b }));
        }
        let mut dense: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, c) in structure {
            if i >= dim || j >= dim || k >= dim {
                return Err(shape(format!("structure index ({i},{j},{k}) out of range")));
            }
            *dense.entry((i, j, k)).or_insert_with(Scalar::zero) += c;
        }
        let mut st = vec![vec![Vec::new(); dim]; dim];
        for ((i, j, k), c) in dense {
            if !c.is_zero() {
                st[i][j].push((k, c));
            }
        }
        let mut a = GStarAlgebra {
            group,
            dim,
            structure: st,
            grading,
            involution,
            unit,
            components: BTreeMap::new(),
        };
        a.components = a.compute_components();
        Ok(a)
    }

    pub fn zero(group: FiniteGroup) -> Self {
        Self::new_unchecked(group, vec![], vec![], vec![], Some(vec![])).expect("empty shapes")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> &[Elem] {
        &self.grading
    }

    pub fn involution_matrix(&self) -> &[Vec<Scalar>] {
        &self.involution
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.structure[i][j]
    }

    pub fn structure_triples(&self) -> Vec<Triple> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.structure[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.structure[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn involute(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.involution
            .iter()
            .map(|row| {
                row.iter().zip(u).filter(|(m, x)| !m.is_zero() && !x.is_zero()).map(|(m, x)| m * x).sum()
            })
            .collect()
    }

    fn compute_components(&self) -> BTreeMap<SignedDegree, Vec<Vec<Scalar>>> {
        let mut out = BTreeMap::new();
        for g in self.group.elements() {
            let idx: Vec<usize> = (0..self.dim).filter(|&i| self.grading[i] == g).collect();
            for sign in Sign::BOTH {
                let eps = Scalar::from_integer(sign.value().into());
                let mut e = Echelon::new(idx.len());
                for &r in &idx {
                    let row: Vec<Scalar> = idx
                        .iter()
                        .map(|&c| if r == c { &self.involution[r][c] - &eps } else { self.involution[r][c].clone() })
                        .collect();
                    e.insert(to_int_row(&row));
                }
                let vecs = e
                    .nullspace()
                    .into_iter()
                    .map(|k| {
                        let mut v = vec![Scalar::zero(); self.dim];
                        for (x, &i) in k.into_iter().zip(&idx) {
                            v[i] = Scalar::from_integer(x);
                        }
                        v
                    })
                    .collect();
                out.insert(SignedDegree::new(g, sign), vecs);
            }
        }
        out
    }

    /// Basis of `A_g^ε`, the `ε`-eigenspace of the involution on `A_g`.
    pub fn homogeneous_component(&self, d: SignedDegree) -> &[Vec<Scalar>] {
        self.components.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn supp_star(&self) -> BTreeSet<SignedDegree> {
        self.components.iter().filter(|(_, v)| !v.is_empty()).map(|(d, _)| *d).collect()
    }

    pub fn support(&self) -> BTreeSet<Elem> {
        self.grading.iter().copied().collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.check().map_err(Error::Algebra)
    }

    fn check(&self) -> std::result::Result<(), AlgebraViolation> {
        use AlgebraViolation as V;
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let gh = self.group.mul(self.grading[i], self.grading[j]);
                if let Some((k, _)) = self.structure[i][j].iter().find(|(k, _)| self.grading[*k] != gh) {
                    return Err(V::Grading { i, j, k: *k });
                }
            }
        }
        let basis: Vec<Vec<Scalar>> = (0..d).map(|i| self.basis_vector(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let ij = self.multiply(&basis[i], &basis[j]);
                for k in 0..d {
                    let jk = self.multiply(&basis[j], &basis[k]);
                    if self.multiply(&ij, &basis[k]) != self.multiply(&basis[i], &jk) {
                        return Err(V::NonAssociative { i, j, k });
                    }
                }
            }
        }
        for c in 0..d {
            for r in 0..d {
                if !self.involution[r][c].is_zero() && self.grading[r] != self.grading[c] {
                    return Err(V::InvolutionNotGraded { from: c, to: r });
                }
            }
        }
        let stars: Vec<Vec<Scalar>> = basis.iter().map(|b| self.involute(b)).collect();
        for i in 0..d {
            if self.involute(&stars[i]) != basis[i] {
                return Err(V::NotInvolutive { basis: i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.involute(&self.multiply(&basis[i], &basis[j]));
                if lhs != self.multiply(&stars[j], &stars[i]) {
                    return Err(V::NotAntiAutomorphism { i, j });
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..d {
                if self.multiply(u, &basis[i]) != basis[i] || self.multiply(&basis[i], u) != basis[i] {
                    return Err(V::UnitNotIdentity { basis: i });
                }
            }
            let e = self.group.identity();
            let graded = u.iter().enumerate().all(|(i, x)| x.is_zero() || self.grading[i] == e);
            if !graded || &self.involute(u) != u {
                return Err(V::UnitNotSymmetricOfTrivialDegree);
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &GStarAlgebra) -> Result<GStarAlgebra> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let (m, n) = (self.dim, other.dim);
        let mut structure = self.structure_triples();
        structure.extend(other.structure_triples().into_iter().map(|(i, j, k, c)| (i + m, j + m, k + m, c)));
        let mut inv = vec![vec![Scalar::zero(); m + n]; m + n];
        for r in 0..m {
            inv[r][..m].clone_from_slice(&self.involution[r]);
        }
        for r in 0..n {
            inv[r + m][m..].clone_from_slice(&other.involution[r]);
        }
        let unit = match (&self.unit, &other.unit) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        let grading = self.grading.iter().chain(&other.grading).copied().collect();
        Self::new_unchecked(self.group.clone(), grading, structure, inv, unit)
    }

    /// `Ã = A × F` with `(a, α)(b, β) = (ab + βa + αb, αβ)`. The new basis
    /// element is appended last.
    pub fn adjoin_unity(&self) -> GStarAlgebra {
        let d = self.dim;
        let mut structure = self.structure_triples();
        structure.push((d, d, d, Scalar::one()));
        for i in 0..d {
            structure.push((i, d, i, Scalar::one()));
            structure.push((d, i, i, Scalar::one()));
        }
        let mut inv = vec![vec![Scalar::zero(); d + 1]; d + 1];
        for r in 0..d {
            inv[r][..d].clone_from_slice(&self.involution[r]);
        }
        inv[d][d] = Scalar::one();
        let mut grading = self.grading.clone();
        grading.push(self.group.identity());
        let mut unit = vec![Scalar::zero(); d + 1];
        unit[d] = Scalar::one();
        Self::new_unchecked(self.group.clone(), grading, structure, inv, Some(unit)).expect("shapes are consistent")
    }

    /// Restriction to the span of the given basis elements, which must be
    /// closed under products and the involution. The result has no unit.
    pub fn subalgebra(&self, basis: &[usize]) -> Result<GStarAlgebra> {
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let not_closed = || Error::Invalid("basis subset is not closed under products and involution".into());
        let mut structure = Vec::new();
        for &i in basis {
            for &j in basis {
                for (k, c) in &self.structure[i][j] {
                    let kk = *pos.get(k).ok_or_else(not_closed)?;
                    structure.push((pos[&i], pos[&j], kk, c.clone()));
                }
            }
        }
        let mut inv = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
        for (c, &j) in basis.iter().enumerate() {
            for r in 0..self.dim {
                if !self.involution[r][j].is_zero() {
                    inv[*pos.get(&r).ok_or_else(not_closed)?][c] = self.involution[r][j].clone();
                }
            }
        }
        let grading = basis.iter().map(|&i| self.grading[i]).collect();
        Self::new(self.group.clone(), grading, structure, inv, None)
    }

    /// Replaces `b_i` by `factors[i] · b_i`, adjusting all data.
    pub fn rescale_basis(&self, factors: &[Scalar]) -> Result<GStarAlgebra> {
        if factors.len() != self.dim || factors.iter().any(Zero::is_zero) {
            return Err(Error::Invalid("rescaling needs one nonzero factor per basis element".into()));
        }
        let f = factors;
        let structure = self
            .structure_triples()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, c * &f[i] * &f[j] / &f[k]))
            .collect();
        let inv = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| &self.involution[r][c] * &f[c] / &f[r]).collect())
            .collect();
        let unit = self.unit.as_ref().map(|u| u.iter().zip(f).map(|(x, l)| x / l).collect());
        Self::new_unchecked(self.group.clone(), self.grading.clone(), structure, inv, unit)
    }

    /// New basis `b'_a = b_{perm[a]}`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<GStarAlgebra> {
        let mut seen = vec![false; self.dim];
        if perm.len() != self.dim || perm.iter().any(|&p| p >= self.dim || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Invalid("not a permutation of the basis".into()));
        }
        let mut back = vec![0; self.dim];
        for (a, &p) in perm.iter().enumerate() {
            back[p] = a;
        }
        let structure =
            self.structure_triples().into_iter().map(|(i, j, k, c)| (back[i], back[j], back[k], c)).collect();
        let inv = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.involution[perm[r]][perm[c]].clone()).collect())
            .collect();
        let grading = perm.iter().map(|&p| self.grading[p]).collect();
        let unit = self.unit.as_ref().map(|u| perm.iter().map(|&p| u[p].clone()).collect());
        Self::new_unchecked(self.group.clone(), grading, structure, inv, unit)
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        AlgebraSpec {
            group: GroupSpec {
                order: self.group.order(),
                table: self.group.table().to_vec(),
                identity: self.group.identity(),
            },
            dim: self.dim,
            grading: self.grading.clone(),
            involution: self.involution.iter().map(|r| r.iter().map(format_scalar).collect()).collect(),
            structure: self
                .structure_triples()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, format_scalar(&c)))
                .collect(),
            unit: self.unit.as_ref().map(|u| u.iter().map(format_scalar).collect()),
        }
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<GStarAlgebra> {
        let g = &spec.group;
        if g.table.len() != g.order {
            return Err(Error::Schema(format!("group table has {} rows, order is {}", g.table.len(), g.order)));
        }
        let group = FiniteGroup::from_table(g.table.clone(), g.identity)?;
        if spec.grading.len() != spec.dim {
            return Err(Error::Schema(format!("grading has {} entries, dim is {}", spec.grading.len(), spec.dim)));
        }
        let parse_row = |r: &Vec<String>| r.iter().map(|x| parse_scalar(x)).collect::<Result<Vec<_>>>();
        let involution = spec.involution.iter().map(parse_row).collect::<Result<Vec<_>>>()?;
        let structure = spec
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_scalar(c)?)))
            .collect::<Result<Vec<_>>>()?;
        let unit = spec.unit.as_ref().map(parse_row).transpose()?;
        GStarAlgebra::new(group, spec.grading.clone(), structure, involution, unit)
    }

    pub fn from_json(text: &str) -> Result<GStarAlgebra> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub order: usize,
    pub table: Vec<Vec<Elem>>,
    pub identity: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub group: GroupSpec,
    pub dim: usize,
    pub grading: Vec<Elem>,
    pub involution: Vec<Vec<String>>,
    pub structure: Vec<(usize, usize, usize, String)>,
    pub unit: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::scalar::int;

    fn diag(signs: &[i64]) -> Vec<Vec<Scalar>> {
        let n = signs.len();
        (0..n).map(|r| (0..n).map(|c| if r == c { int(signs[r]) } else { int(0) }).collect()).collect()
    }

    fn field(g: FiniteGroup) -> GStarAlgebra {
        GStarAlgebra::new(g, vec![0], vec![(0, 0, 0, int(1))], diag(&[1]), Some(vec![int(1)])).unwrap()
    }

    #[test]
    fn field_is_valid() {
        let f = field(cyclic(1).unwrap());
        assert_eq!(f.supp_star().len(), 1);
        assert_eq!(f.homogeneous_component(SignedDegree::plus(0)).len(), 1);
    }

    #[test]
    fn zero_algebra() {
        let z = GStarAlgebra::zero(cyclic(3).unwrap());
        assert!(z.validate().is_ok());
        assert!(z.supp_star().is_empty());
        let f = field(cyclic(3).unwrap());
        let s = f.direct_sum(&z).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.is_unital());
    }

    #[test]
    fn detects_non_involutive_matrix() {
        let g = cyclic(1).unwrap();
        let r = GStarAlgebra::new(g, vec![0], vec![(0, 0, 0, int(1))], diag(&[2]), Some(vec![int(1)]));
        assert!(matches!(r, Err(Error::Algebra(AlgebraViolation::NotInvolutive { basis: 0 }))));
    }

    #[test]
    fn adjoin_unity_of_nilpotent() {
        let g = cyclic(1).unwrap();
        let a = GStarAlgebra::new(g, vec![0], vec![], diag(&[1]), None).unwrap();
        let t = a.adjoin_unity();
        assert!(t.validate().is_ok());
        assert_eq!(t.dim(), 2);
        assert!(t.homogeneous_component(SignedDegree::plus(0)).len() == 2);
    }

    #[test]
    fn spec_round_trip_and_bad_rational() {
        let f = field(cyclic(2).unwrap());
        let back = GStarAlgebra::from_json(&f.to_json()).unwrap();
        assert_eq!(back.to_spec(), f.to_spec());
        let bad = f.to_json().replace("\"1\"", "\"1/0\"");
        assert!(matches!(GStarAlgebra::from_json(&bad), Err(Error::Schema(_))));
    }
}
