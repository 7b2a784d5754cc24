//! Evaluation of multilinear polynomials on homogeneous component bases,
//! and everything built from the resulting ranks: codimensions, proper
//! codimensions, identity spaces and bounded-degree variety membership.
//!
//! For a pattern with canonical variable types `t_1..t_n`, every tuple of
//! component basis vectors `(v_1..v_n)` with `v_i ∈ A_{t_i}` contributes
//! `dim A` columns to the evaluation matrix: coordinate `k` of
//! `v_{σ(1)}⋯v_{σ(n)}` for each permutation `σ` (rows, in lexicographic
//! order). Structure constants are scaled to integers by a common
//! denominator; the uniform power of it that appears in every product
//! does not affect ranks or kernels.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::exec::{check_degree, Exec};
use crate::gstar::{GStarAlgebra, SignedDegree};
use crate::linalg::{dot, Echelon};
use crate::pattern::{binomial, factorial, one_plus, patterns, Pattern};
use crate::poly::MultilinearPoly;
use crate::scalar::{to_int_row, Scalar};

/// Right multiplication by one component basis vector, as sparse
/// `(i, k, c)` with `(u·v)_k = Σ u_i c`.
type RightMul = Vec<(usize, usize, BigInt)>;

#[derive(Clone, Debug)]
pub struct Evaluator {
    dim: usize,
    unit: Option<Vec<BigInt>>,
    /// Per signed degree: component basis vectors and their right actions.
    components: Vec<(SignedDegree, Vec<(Vec<BigInt>, RightMul)>)>,
}

impl Evaluator {
    pub fn new(a: &GStarAlgebra) -> Self {
        let dim = a.dim();
        let mut den = BigInt::one();
        for (_, _, _, c) in a.structure_triples() {
            den = den.lcm(c.denom());
        }
        let scaled: Vec<Vec<Vec<(usize, BigInt)>>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        a.basis_product(i, j).iter().map(|(k, c)| (*k, (c.numer() * &den) / c.denom())).collect()
                    })
                    .collect()
            })
            .collect();
        let components = SignedDegree::all(a.group())
            .into_iter()
            .map(|d| {
                let vecs = a
                    .homogeneous_component(d)
                    .iter()
                    .map(|v| {
                        let v = to_int_row(v);
                        let mut acc = std::collections::BTreeMap::<(usize, usize), BigInt>::new();
                        for (j, y) in v.iter().enumerate() {
                            if y.is_zero() {
                                continue;
                            }
                            for (i, row) in scaled.iter().enumerate() {
                                for (k, c) in &row[j] {
                                    *acc.entry((i, *k)).or_insert_with(BigInt::zero) += c * y;
                                }
                            }
                        }
                        let rm = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, k), c)| (i, k, c)).collect();
                        (v, rm)
                    })
                    .collect();
                (d, vecs)
            })
            .collect();
        Evaluator { dim, unit: a.unit().map(to_int_row), components }
    }

    fn component(&self, d: SignedDegree) -> &[(Vec<BigInt>, RightMul)] {
        self.components.iter().find(|(e, _)| *e == d).map(|(_, v)| v.as_slice()).unwrap_or(&[])
    }

    fn right_mul(&self, u: &[BigInt], rm: &RightMul) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        for (i, k, c) in rm {
            if !u[*i].is_zero() {
                out[*k] += &u[*i] * c;
            }
        }
        out
    }

    /// Echelon form of the column space of the evaluation matrix. Its
    /// width is `n!`; its rank is the pattern codimension.
    pub fn column_echelon(&self, p: &Pattern) -> Echelon {
        let types = p.types();
        let n = types.len();
        let width = factorial(n) as usize;
        let mut ech = Echelon::new(width);
        if n == 0 {
            if let Some(u) = &self.unit {
                if u.iter().any(|x| !x.is_zero()) {
                    ech.insert(vec![BigInt::one()]);
                }
            }
            return ech;
        }
        let comps: Vec<&[(Vec<BigInt>, RightMul)]> = types.iter().map(|d| self.component(*d)).collect();
        if comps.iter().any(|c| c.is_empty()) {
            return ech;
        }
        let mut choice = vec![0usize; n];
        loop {
            let products = self.products(&comps, &choice);
            for k in 0..self.dim {
                let col: Vec<BigInt> = products.iter().map(|v| v[k].clone()).collect();
                if col.iter().any(|x| !x.is_zero()) {
                    ech.insert(col);
                    if ech.is_full() {
                        return ech;
                    }
                }
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return ech;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < comps[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }

    /// All `n!` products of the chosen basis vectors, in lexicographic
    /// permutation order, by depth-first search over shared prefixes.
    fn products(&self, comps: &[&[(Vec<BigInt>, RightMul)]], choice: &[usize]) -> Vec<Vec<BigInt>> {
        let n = comps.len();
        let mut out = Vec::with_capacity(factorial(n) as usize);
        let mut used = vec![false; n];
        let pick = |i: usize| &comps[i][choice[i]];
        for first in 0..n {
            used[first] = true;
            self.dfs(comps, choice, pick(first).0.clone(), 1, &mut used, &mut out);
            used[first] = false;
        }
        out
    }

    fn dfs(
        &self,
        comps: &[&[(Vec<BigInt>, RightMul)]],
        choice: &[usize],
        prefix: Vec<BigInt>,
        depth: usize,
        used: &mut [bool],
        out: &mut Vec<Vec<BigInt>>,
    ) {
        let n = comps.len();
        if depth == n {
            out.push(prefix);
            return;
        }
        if prefix.iter().all(Zero::is_zero) {
            let leaves = factorial(n - depth) as usize;
            out.extend(std::iter::repeat_n(vec![BigInt::zero(); self.dim], leaves));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                let next = self.right_mul(&prefix, &comps[i][choice[i]].1);
                self.dfs(comps, choice, next, depth + 1, used, out);
                used[i] = false;
            }
        }
    }

    /// Evaluation matrix with rows indexed by monomials and columns by
    /// (tuple, coordinate). Mostly useful for inspection and tests.
    pub fn evaluation_matrix(&self, p: &Pattern) -> Vec<Vec<Scalar>> {
        let types = p.types();
        let n = types.len();
        if n == 0 {
            let row = self.unit.clone().unwrap_or_default();
            let row = if self.unit.is_some() { row } else { vec![] };
            return vec![row.into_iter().map(Scalar::from_integer).collect()];
        }
        let rows = factorial(n) as usize;
        let mut m: Vec<Vec<Scalar>> = vec![Vec::new(); rows];
        let comps: Vec<&[(Vec<BigInt>, RightMul)]> = types.iter().map(|d| self.component(*d)).collect();
        if comps.iter().any(|c| c.is_empty()) {
            return m;
        }
        let mut choice = vec![0usize; n];
        loop {
            let products = self.products(&comps, &choice);
            for (r, v) in products.into_iter().enumerate() {
                m[r].extend(v.into_iter().map(Scalar::from_integer));
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    return m;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < comps[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }

    pub fn pattern_codimension(&self, p: &Pattern) -> usize {
        self.column_echelon(p).rank()
    }

    /// Basis of the multilinear identities of pattern `p`, as coefficient
    /// rows over the canonical monomial order.
    pub fn identity_space(&self, p: &Pattern) -> Vec<Vec<BigInt>> {
        self.column_echelon(p).nullspace()
    }

    pub fn is_identity(&self, f: &MultilinearPoly) -> bool {
        let (p, row) = f.canonical_row();
        let row = to_int_row(&row);
        self.column_echelon(&p).rows().iter().all(|c| dot(c, &row).is_zero())
    }
}

pub fn evaluation_matrix(a: &GStarAlgebra, p: &Pattern) -> Vec<Vec<Scalar>> {
    Evaluator::new(a).evaluation_matrix(p)
}

pub fn pattern_codimension(a: &GStarAlgebra, p: &Pattern) -> usize {
    Evaluator::new(a).pattern_codimension(p)
}

pub fn identity_space(a: &GStarAlgebra, p: &Pattern) -> Vec<Vec<BigInt>> {
    Evaluator::new(a).identity_space(p)
}

pub fn is_identity(a: &GStarAlgebra, f: &MultilinearPoly) -> bool {
    Evaluator::new(a).is_identity(f)
}

pub fn codimension(a: &GStarAlgebra, n: usize) -> Result<u128> {
    codimension_with(a, n, Exec::default())
}

/// `c_n = Σ_p multinomial(p) · rank(p)` over the patterns of size `n`.
pub fn codimension_with(a: &GStarAlgebra, n: usize, exec: Exec) -> Result<u128> {
    check_degree(n)?;
    let ev = Evaluator::new(a);
    let ps = patterns(a.group(), n);
    let parts = exec.map(&ps, |p| p.multinomial() * ev.pattern_codimension(p) as u128);
    Ok(parts.into_iter().sum())
}

pub fn codimensions(a: &GStarAlgebra, upto: usize, exec: Exec) -> Result<Vec<u128>> {
    (0..=upto).map(|n| codimension_with(a, n, exec)).collect()
}

/// `γ_n = Σ_i (−1)^{n−i} C(n,i) c_i`; defined for unital algebras only.
pub fn proper_codimension(a: &GStarAlgebra, n: usize) -> Result<i128> {
    proper_codimension_with(a, n, Exec::default())
}

pub fn proper_codimension_with(a: &GStarAlgebra, n: usize, exec: Exec) -> Result<i128> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    let c = codimensions(a, n, exec)?;
    Ok(invert(&c, n))
}

/// Binomial inversion of a sequence at index `n`.
pub fn invert(c: &[u128], n: usize) -> i128 {
    (0..=n)
        .map(|i| {
            let t = binomial(n, i) as i128 * c[i] as i128;
            if (n - i).is_multiple_of(2) {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// Proper codimension of one pattern, inverting over the number of
/// symmetric variables of trivial degree.
pub fn proper_pattern_codimension(a: &GStarAlgebra, p: &Pattern) -> Result<i128> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    check_degree(p.size())?;
    let ev = Evaluator::new(a);
    let e = one_plus(a.group());
    let m = p.count(e);
    Ok((0..=m)
        .map(|j| {
            let t = binomial(m, j) as i128 * ev.pattern_codimension(&p.with_count(e, j)) as i128;
            if (m - j).is_multiple_of(2) {
                t
            } else {
                -t
            }
        })
        .sum())
}

/// `Id(A) ⊆ Id(B)` on every pattern of size at most `max`.
pub fn contains_up_to(a: &GStarAlgebra, b: &GStarAlgebra, max: usize) -> Result<bool> {
    contains_up_to_with(a, b, max, Exec::default())
}

pub fn contains_up_to_with(a: &GStarAlgebra, b: &GStarAlgebra, max: usize, exec: Exec) -> Result<bool> {
    Ok(first_non_containment(a, b, max, exec)?.is_none())
}

/// The first pattern (by size, then canonical order) on which an identity
/// of `a` fails on `b`.
pub fn first_non_containment(a: &GStarAlgebra, b: &GStarAlgebra, max: usize, exec: Exec) -> Result<Option<Pattern>> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    check_degree(max)?;
    let (ea, eb) = (Evaluator::new(a), Evaluator::new(b));
    for n in 0..=max {
        let ps = patterns(a.group(), n);
        let ok = exec.map(&ps, |p| {
            let ca = ea.column_echelon(p);
            if ca.is_full() {
                return true;
            }
            ca.contains_all(&eb.column_echelon(p))
        });
        if let Some(i) = ok.iter().position(|x| !x) {
            return Ok(Some(ps[i].clone()));
        }
    }
    Ok(None)
}

/// Column echelons of every pattern of size at most `max`, for repeated
/// membership tests against the same algebra.
#[derive(Clone, Debug)]
pub struct IdentityProfile {
    group: crate::groups::FiniteGroup,
    max: usize,
    echelons: Vec<(Pattern, Echelon)>,
}

impl IdentityProfile {
    pub fn new(a: &GStarAlgebra, max: usize, exec: Exec) -> Result<Self> {
        check_degree(max)?;
        let ev = Evaluator::new(a);
        let ps: Vec<Pattern> = (0..=max).flat_map(|n| patterns(a.group(), n)).collect();
        let echelons = exec.map(&ps, |p| ev.column_echelon(p));
        Ok(IdentityProfile { group: a.group().clone(), max, echelons: ps.into_iter().zip(echelons).collect() })
    }

    pub fn max_degree(&self) -> usize {
        self.max
    }

    /// `Id(self) ⊆ Id(other)` on the common degree range.
    pub fn contains(&self, other: &IdentityProfile) -> Result<bool> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.echelons.iter().zip(&other.echelons).all(|((_, a), (_, b))| a.is_full() || a.contains_all(b)))
    }
}

pub fn equivalent_up_to(a: &GStarAlgebra, b: &GStarAlgebra, max: usize) -> Result<bool> {
    Ok(contains_up_to(a, b, max)? && contains_up_to(b, a, max)?)
}
