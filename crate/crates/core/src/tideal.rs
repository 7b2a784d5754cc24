//! Bounded-degree closure of generating sets of graded *-identities.
//!
//! A generator `f(x_1..x_d)` yields, in a target pattern, every polynomial
//! `u · f(w_1 + ε_1 w_1*, …, w_d + ε_d w_d*) · v` where the `w_j`, `u`, `v`
//! are words in distinct target variables covering each exactly once and
//! `w_j` has the grading degree of `x_j`. These span the multilinear part
//! of the generated ideal in that pattern.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::exec::{check_degree, Exec};
use crate::groups::{Elem, FiniteGroup};
use crate::gstar::{GStarAlgebra, Sign, SignedDegree};
use crate::linalg::Echelon;
use crate::pattern::{factorial, patterns, perm_index, Pattern};
use crate::poly::{GenPoly, MultilinearPoly, VarIndex};

/// Largest pattern size accepted by [`multilinear_consequences`].
pub const CONSEQUENCE_CAP: usize = 4;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratorSet {
    gens: Vec<MultilinearPoly>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<MultilinearPoly>) -> Self {
        GeneratorSet { gens }
    }

    /// Parses generator texts, expanding unsigned variables and sign letters.
    pub fn parse<S: AsRef<str>>(texts: &[S], group: &FiniteGroup, bindings: &BTreeMap<String, Elem>) -> Result<Self> {
        let mut gens = Vec::new();
        for t in texts {
            gens.extend(GenPoly::parse(t.as_ref(), group, bindings)?.expand());
        }
        Ok(GeneratorSet { gens })
    }

    pub fn polys(&self) -> &[MultilinearPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn extend(&mut self, other: GeneratorSet) {
        self.gens.extend(other.gens);
    }

    /// Adds `f*` for every generator `f`.
    pub fn with_star_closure(&self) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(self.gens.iter().map(MultilinearPoly::star));
        GeneratorSet { gens }
    }

    /// Adds `x^±_{1,r}` for every `r` outside the support of `a`.
    pub fn with_outside_family(&self, a: &GStarAlgebra) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(outside_family(a).gens);
        GeneratorSet { gens }
    }
}

pub fn outside_family(a: &GStarAlgebra) -> GeneratorSet {
    let supp = a.support();
    let gens = a
        .group()
        .elements()
        .filter(|r| !supp.contains(r))
        .flat_map(|r| Sign::BOTH.map(|s| MultilinearPoly::var(1, r, s)))
        .collect();
    GeneratorSet { gens }
}

/// `w + ε·w*` as a list of (word, coefficient); empty when it vanishes.
fn symmetrize(w: &[usize], eps: Sign, types: &[SignedDegree]) -> Vec<(Vec<usize>, i64)> {
    let sign = w.iter().fold(Sign::Plus, |s, &v| s.times(types[v].sign)).times(eps);
    let rev: Vec<usize> = w.iter().rev().copied().collect();
    if rev == w {
        if sign == Sign::Plus {
            vec![(w.to_vec(), 2)]
        } else {
            vec![]
        }
    } else {
        vec![(w.to_vec(), 1), (rev, sign.value())]
    }
}

fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    crate::pattern::permutations(items.len())
        .into_iter()
        .map(|p| p.into_iter().map(|i| items[i]).collect())
        .collect()
}

/// Row-reduced span of the consequences of `gens` in pattern `p`.
pub fn multilinear_consequences(group: &FiniteGroup, gens: &GeneratorSet, p: &Pattern) -> Result<Echelon> {
    if p.size() > CONSEQUENCE_CAP {
        return Err(Error::DegreeCap { n: p.size(), cap: CONSEQUENCE_CAP });
    }
    let types = p.types();
    let n = types.len();
    let mut ech = Echelon::new(factorial(n) as usize);
    for f in &gens.gens {
        add_consequences(group, f, &types, &mut ech);
        if ech.is_full() {
            break;
        }
    }
    Ok(ech)
}

fn add_consequences(group: &FiniteGroup, f: &MultilinearPoly, types: &[SignedDegree], ech: &mut Echelon) {
    let n = types.len();
    let gv: Vec<(VarIndex, SignedDegree)> = f.vars().iter().map(|(i, d)| (*i, *d)).collect();
    let d = gv.len();
    if d == 0 || d > n || f.is_zero() {
        return;
    }
    // Rational coefficients are cleared by a per-generator denominator.
    let den = common_denominator(f);
    let slots = d + 2;
    let mut assign = vec![0usize; n];
    loop {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); slots];
        for (v, &s) in assign.iter().enumerate() {
            groups[s].push(v);
        }
        if groups[..d].iter().all(|g| !g.is_empty()) {
            let ords: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| orderings(g)).collect();
            let mut pick = vec![0usize; slots];
            'outer: loop {
                let mut subs: BTreeMap<VarIndex, Vec<(Vec<usize>, i64)>> = BTreeMap::new();
                let mut ok = true;
                for (k, (var, ty)) in gv.iter().enumerate() {
                    let w = &ords[k][pick[k]];
                    if group.product(w.iter().map(|&v| types[v].g)) != ty.g {
                        ok = false;
                        break;
                    }
                    let s = symmetrize(w, ty.sign, types);
                    if s.is_empty() {
                        ok = false;
                        break;
                    }
                    subs.insert(*var, s);
                }
                if ok {
                    let left = &ords[d][pick[d]];
                    let right = &ords[d + 1][pick[d + 1]];
                    let mut row = vec![BigInt::zero(); factorial(n) as usize];
                    for (word, c) in f.terms() {
                        let num = c.numer() * (&den / c.denom());
                        let mut partial: Vec<(Vec<usize>, BigInt)> = vec![(left.clone(), BigInt::one())];
                        for v in word {
                            let mut next = Vec::new();
                            for (pw, pc) in &partial {
                                for (sw, sc) in &subs[v] {
                                    let mut w = pw.clone();
                                    w.extend(sw);
                                    next.push((w, pc * BigInt::from(*sc)));
                                }
                            }
                            partial = next;
                        }
                        for (mut w, pc) in partial {
                            w.extend(right);
                            row[perm_index(&w)] += pc * &num;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        ech.insert(row);
                        if ech.is_full() {
                            return;
                        }
                    }
                }
                let mut pos = slots;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    pick[pos] += 1;
                    if pick[pos] < ords[pos].len() {
                        break;
                    }
                    pick[pos] = 0;
                }
            }
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            assign[pos] += 1;
            if assign[pos] < slots {
                break;
            }
            assign[pos] = 0;
        }
    }
}

fn common_denominator(f: &MultilinearPoly) -> BigInt {
    use num::Integer;
    f.terms().values().fold(BigInt::one(), |l, c| l.lcm(c.denom()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCheck {
    pub pattern: Pattern,
    pub consequences: usize,
    pub identities: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TidealReport {
    pub ok: bool,
    /// Index of the first generator that is not an identity.
    pub non_identity: Option<usize>,
    /// Checked patterns up to and including the first mismatch.
    pub checks: Vec<PatternCheck>,
}

impl TidealReport {
    pub fn first_failure(&self) -> Option<&PatternCheck> {
        self.checks.iter().find(|c| c.consequences != c.identities)
    }
}

/// Checks that `gens` are identities of `a` whose consequences span all
/// multilinear identities of every pattern of size at most `max`.
pub fn verify_tideal(a: &GStarAlgebra, gens: &GeneratorSet, max: usize) -> Result<TidealReport> {
    verify_tideal_with(a, gens, max, Exec::default())
}

pub fn verify_tideal_with(a: &GStarAlgebra, gens: &GeneratorSet, max: usize, exec: Exec) -> Result<TidealReport> {
    check_degree(max)?;
    if max > CONSEQUENCE_CAP {
        return Err(Error::DegreeCap { n: max, cap: CONSEQUENCE_CAP });
    }
    let ev = Evaluator::new(a);
    if let Some(i) = gens.gens.iter().position(|f| !ev.is_identity(f)) {
        return Ok(TidealReport { ok: false, non_identity: Some(i), checks: vec![] });
    }
    let mut checks = Vec::new();
    for n in 1..=max {
        let ps = patterns(a.group(), n);
        let results = exec.map(&ps, |p| {
            let cols = ev.column_echelon(p);
            let ids = factorial(n) as usize - cols.rank();
            let cons = multilinear_consequences(a.group(), gens, p).expect("size within cap");
            (cons.rank(), ids)
        });
        for (p, (c, i)) in ps.into_iter().zip(results) {
            let bad = c != i;
            checks.push(PatternCheck { pattern: p, consequences: c, identities: i });
            if bad {
                return Ok(TidealReport { ok: false, non_identity: None, checks });
            }
        }
    }
    Ok(TidealReport { ok: true, non_identity: None, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, InvolutionKind};
    use crate::groups::cyclic;

    fn bind(pairs: &[(&str, Elem)]) -> BTreeMap<String, Elem> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn single_generator() {
        let z1 = cyclic(1).unwrap();
        let gens = GeneratorSet::parse(&["x1^-_0"], &z1, &BTreeMap::new()).unwrap();
        let p = Pattern::from_types([SignedDegree::minus(0)]);
        assert_eq!(multilinear_consequences(&z1, &gens, &p).unwrap().rank(), 1);
        let none = GeneratorSet::default();
        assert_eq!(multilinear_consequences(&z1, &none, &p).unwrap().rank(), 0);
    }

    #[test]
    fn jordan_row_from_symmetric_square() {
        let z4 = cyclic(4).unwrap();
        let gens = GeneratorSet::parse(&["x1^+_2"], &z4, &BTreeMap::new()).unwrap();
        let p = Pattern::from_types([SignedDegree::minus(1), SignedDegree::minus(1)]);
        let e = multilinear_consequences(&z4, &gens, &p).unwrap();
        assert_eq!(e.rank(), 1);
        assert!(e.contains(&[BigInt::from(1), BigInt::from(1)]));
    }

    #[test]
    fn grassmann_tau_set() {
        let z5 = cyclic(5).unwrap();
        let a = catalog::grassmann2(1, 1, &z5, InvolutionKind::Tau).unwrap();
        let b = bind(&[("e", 0), ("g", 1), ("g2", 2)]);
        let texts = ["x1^-_e", "x1^+_g", "x1^+_g2"];
        let gens = GeneratorSet::parse(&texts, &z5, &b).unwrap().with_star_closure().with_outside_family(&a);
        let r = verify_tideal(&a, &gens, 3).unwrap();
        assert!(r.ok, "{:?}", r.first_failure());
        let fewer = GeneratorSet::parse(&texts[..2], &z5, &b).unwrap().with_star_closure().with_outside_family(&a);
        let r = verify_tideal(&a, &fewer, 3).unwrap();
        assert!(!r.ok);
        let f = r.first_failure().unwrap();
        assert_eq!(f.pattern, Pattern::from_types([SignedDegree::plus(2)]));
        assert_eq!((f.consequences, f.identities), (0, 1));
    }

    #[test]
    fn cap() {
        let z1 = cyclic(1).unwrap();
        let p = Pattern::from_types([SignedDegree::plus(0); 5]);
        assert!(multilinear_consequences(&z1, &GeneratorSet::default(), &p).is_err());
    }
}
