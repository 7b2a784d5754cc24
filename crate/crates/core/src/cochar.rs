//! Partitions, low-degree highest weight vectors, cocharacter
//! multiplicities and polynomial growth fits.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::Exec;
use crate::groups::FiniteGroup;
use crate::gstar::{GStarAlgebra, Sign, SignedDegree};
use crate::linalg::{dot, Echelon};
use crate::pattern::{factorial, one_plus, Pattern};
use crate::poly::MultilinearPoly;
use crate::scalar::{to_int_row, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn hook_dimension(l: &Partition) -> u128 {
    let conj = l.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in l.0.iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j + conj.0[j] - i - 1) as u128;
        }
    }
    factorial(l.size()) / hooks
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multipartition {
    parts: BTreeMap<SignedDegree, Partition>,
}

impl Multipartition {
    pub fn new<I: IntoIterator<Item = (SignedDegree, Partition)>>(parts: I) -> Self {
        Multipartition { parts: parts.into_iter().filter(|(_, p)| p.size() > 0).collect() }
    }

    pub fn single(d: SignedDegree, parts: &[usize]) -> Self {
        Self::new([(d, Partition(parts.to_vec()))])
    }

    pub fn pair(d: SignedDegree, e: SignedDegree) -> Self {
        Self::new([(d, Partition(vec![1])), (e, Partition(vec![1]))])
    }

    pub fn parts(&self) -> &BTreeMap<SignedDegree, Partition> {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.values().map(Partition::size).sum()
    }

    pub fn pattern(&self) -> Pattern {
        Pattern::from_counts(self.parts.iter().map(|(d, p)| (*d, p.size())))
    }

    /// `Π d_{λ_j}`.
    pub fn dimension(&self) -> u128 {
        self.parts.values().map(hook_dimension).product()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|(d, p)| format!("{p}_{{{d}}}")).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All multipartitions of total size 1 or 2 that carry a proper highest
/// weight vector, in table order (size, then canonical order).
pub fn multipartitions_upto2(group: &FiniteGroup) -> Vec<Multipartition> {
    let types = SignedDegree::all(group);
    let e = one_plus(group);
    let mut out = Vec::new();
    for &d in &types {
        if d != e {
            out.push(Multipartition::single(d, &[1]));
            out.push(Multipartition::single(d, &[2]));
        }
        out.push(Multipartition::single(d, &[1, 1]));
    }
    for (i, &d) in types.iter().enumerate() {
        for &t in &types[i + 1..] {
            out.push(Multipartition::pair(d, t));
        }
    }
    out.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));
    out
}

/// Highest weight vectors of a multipartition of size at most 2. `identity`
/// is the index of the group identity.
pub fn hwv_templates(mp: &Multipartition, identity: usize) -> Result<Vec<MultilinearPoly>> {
    let e = SignedDegree::plus(identity);
    let improper = || Error::ImproperMultipartition(mp.to_string());
    let entries: Vec<(SignedDegree, &Partition)> = mp.parts.iter().map(|(d, p)| (*d, p)).collect();
    match mp.size() {
        0 => Ok(vec![MultilinearPoly::one()]),
        1 => {
            let d = entries[0].0;
            if d == e {
                return Err(improper());
            }
            Ok(vec![MultilinearPoly::variable(1, d)])
        }
        2 if entries.len() == 1 => {
            let (d, p) = entries[0];
            let x1 = MultilinearPoly::variable(1, d);
            let x2 = MultilinearPoly::variable(2, d);
            if p.parts() == [2] {
                if d == e {
                    return Err(improper());
                }
                Ok(vec![x1.jordan(&x2)?])
            } else {
                Ok(vec![x1.commutator(&x2)?])
            }
        }
        2 => {
            let (d, t) = (entries[0].0, entries[1].0);
            let x1 = MultilinearPoly::variable(1, d);
            let x2 = MultilinearPoly::variable(2, t);
            if d == e || t == e {
                Ok(vec![x1.commutator(&x2)?])
            } else {
                Ok(vec![x1.commutator(&x2)?, x1.mul(&x2)?])
            }
        }
        n => Err(Error::TemplateScope(n)),
    }
}

/// Rank of the highest weight vectors modulo the identities of `a`.
pub fn multiplicity(a: &GStarAlgebra, mp: &Multipartition) -> Result<usize> {
    multiplicity_with(&Evaluator::new(a), a.group().identity(), mp)
}

fn multiplicity_with(ev: &Evaluator, identity: usize, mp: &Multipartition) -> Result<usize> {
    let templates = hwv_templates(mp, identity)?;
    let cols = ev.column_echelon(&mp.pattern());
    let mut images = Echelon::new(cols.rank());
    for t in &templates {
        let row = to_int_row(&t.canonical_row().1);
        images.insert(cols.rows().iter().map(|c| dot(c, &row)).collect::<Vec<BigInt>>());
    }
    Ok(images.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterRow {
    pub mp: Multipartition,
    pub mult: usize,
}

/// Nonzero multiplicities of all multipartitions of size 1 and 2.
pub fn cocharacter_table(a: &GStarAlgebra) -> Vec<CocharacterRow> {
    cocharacter_table_with(a, Exec::default())
}

pub fn cocharacter_table_with(a: &GStarAlgebra, exec: Exec) -> Vec<CocharacterRow> {
    let ev = Evaluator::new(a);
    let id = a.group().identity();
    let mps = multipartitions_upto2(a.group());
    let mults = exec.map(&mps, |m| multiplicity_with(&ev, id, m).expect("templates exist"));
    mps.into_iter().zip(mults).filter(|(_, k)| *k > 0).map(|(mp, mult)| CocharacterRow { mp, mult }).collect()
}

#[derive(Serialize, Deserialize)]
struct JsonPart {
    deg: usize,
    sign: String,
    partition: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    mp: Vec<JsonPart>,
    mult: usize,
}

pub fn table_to_json(rows: &[CocharacterRow]) -> serde_json::Value {
    let rows: Vec<JsonRow> = rows
        .iter()
        .map(|r| JsonRow {
            mp: r
                .mp
                .parts
                .iter()
                .map(|(d, p)| JsonPart { deg: d.g, sign: d.sign.symbol().to_string(), partition: p.0.clone() })
                .collect(),
            mult: r.mult,
        })
        .collect();
    serde_json::to_value(rows).expect("serializable")
}

pub fn table_from_json(v: &serde_json::Value) -> Result<Vec<CocharacterRow>> {
    let rows: Vec<JsonRow> = serde_json::from_value(v.clone()).map_err(|e| Error::Schema(e.to_string()))?;
    rows.into_iter()
        .map(|r| {
            let parts = r
                .mp
                .into_iter()
                .map(|p| {
                    let sign = p
                        .sign
                        .chars()
                        .next()
                        .and_then(Sign::parse)
                        .filter(|_| p.sign.len() == 1)
                        .ok_or_else(|| Error::Schema(format!("bad sign {:?}", p.sign)))?;
                    Ok((SignedDegree::new(p.deg, sign), Partition::new(p.partition)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CocharacterRow { mp: Multipartition::new(parts), mult: r.mult })
        })
        .collect()
}

/// One line per row: `multipartition,multiplicity`.
pub fn table_to_csv(rows: &[CocharacterRow]) -> String {
    let mut s = String::from("multipartition,multiplicity\n");
    for r in rows {
        s.push_str(&format!("\"{}\",{}\n", r.mp, r.mult));
    }
    s
}

/// `1 + Σ n!/((n−i)! Π n_j!) · m · Π d_λ` over rows of size `i ≤ n`.
pub fn codimension_from_cocharacters(rows: &[CocharacterRow], n: usize) -> u128 {
    let mut total = 1u128;
    for r in rows {
        let i = r.mp.size();
        if i > n {
            continue;
        }
        let mut w = factorial(n) / factorial(n - i);
        for p in r.mp.parts.values() {
            w /= factorial(p.size());
        }
        total += w * r.mult as u128 * r.mp.dimension();
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthFit {
    pub degree: usize,
    /// Coefficients of the fitted polynomial in `n`, leading first.
    pub coefficients: Vec<Scalar>,
    /// First index from which the fit matches the data.
    pub from: usize,
}

impl GrowthFit {
    pub fn leading(&self) -> &Scalar {
        &self.coefficients[0]
    }

    /// `1/t! ≤ q`.
    pub fn lower_bound(&self) -> Scalar {
        Scalar::new(BigInt::one(), BigInt::from(factorial(self.degree)))
    }

    pub fn lower_bound_holds(&self) -> bool {
        self.leading() >= &self.lower_bound()
    }

    /// `Σ_{i=0}^{t} 2^{t−i} |G|^{t−i} (−1)^i / i!`; reported only.
    pub fn upper_bound(&self, group_order: usize) -> Scalar {
        let t = self.degree;
        (0..=t)
            .map(|i| {
                let base = BigInt::from(2 * group_order).pow((t - i) as u32);
                let v = Scalar::new(base, BigInt::from(factorial(i)));
                if i % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    pub fn eval(&self, n: usize) -> Scalar {
        let x = Scalar::from_integer(BigInt::from(n));
        self.coefficients.iter().fold(Scalar::zero(), |acc, c| acc * &x + c)
    }
}

/// Fits `c` by a polynomial whose `t`-th differences are constant over at
/// least three consecutive entries at the tail.
pub fn fit_growth(c: &[i128]) -> Result<GrowthFit> {
    let mut diffs: Vec<Vec<i128>> = vec![c.to_vec()];
    loop {
        let d = diffs.last().unwrap();
        if d.len() < 3 {
            return Err(Error::NotPolynomial);
        }
        let last = d[d.len() - 1];
        let stable = d.iter().rev().take_while(|&&x| x == last).count();
        if stable >= 3 {
            let t = diffs.len() - 1;
            let from = d.len() - stable;
            return Ok(GrowthFit { degree: t, coefficients: newton_to_monomial(&diffs, from), from });
        }
        let next = d.windows(2).map(|w| w[1] - w[0]).collect();
        diffs.push(next);
    }
}

/// `c(n) = Σ_i Δ^i c(s) · C(n−s, i)` expanded in powers of `n`.
fn newton_to_monomial(diffs: &[Vec<i128>], s: usize) -> Vec<Scalar> {
    let t = diffs.len() - 1;
    let mut poly = vec![Scalar::zero(); t + 1];
    let mut basis = vec![Scalar::one()];
    for (i, d) in diffs.iter().enumerate() {
        let coef = Scalar::from_integer(BigInt::from(d[s]));
        for (k, b) in basis.iter().enumerate() {
            poly[k] += &coef * b;
        }
        let shift = Scalar::from_integer(BigInt::from(s as i64 + i as i64));
        let den = Scalar::from_integer(BigInt::from(i as i64 + 1));
        let mut next = vec![Scalar::zero(); basis.len() + 1];
        for (k, b) in basis.iter().enumerate() {
            next[k + 1] += b / &den;
            next[k] -= b * &shift / &den;
        }
        basis = next;
    }
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    poly.reverse();
    poly
}

pub fn format_fit(f: &GrowthFit) -> String {
    let t = f.coefficients.len() - 1;
    let mut out = String::new();
    for (k, c) in f.coefficients.iter().enumerate() {
        let p = t - k;
        if c.is_zero() && t > 0 {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        let a = crate::scalar::format_scalar(&c.abs());
        let a = if p > 0 && a == "1" { String::new() } else { a };
        let term = match p {
            0 => a,
            1 => format!("{a}n"),
            _ => format!("{a}n^{p}"),
        };
        if out.is_empty() {
            out = if c.is_negative() { format!("-{term}") } else { term };
        } else {
            out = format!("{out} {sign} {term}");
        }
    }
    out
}
