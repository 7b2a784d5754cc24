//! Shared oracles and property checks for the integration tests.
#![allow(dead_code)]

use num::{One, Zero};
use pigrowth::claims::{build, Options, Setting, FORMULAS};
use pigrowth::cochar::{hook_dimension, Partition};
use pigrowth::eval::{self, Evaluator};
use pigrowth::gstar::{GStarAlgebra, Sign};
use pigrowth::linalg::{rank, Echelon};
use pigrowth::pattern::{patterns, permutations, Pattern};
use pigrowth::poly::MultilinearPoly;
use pigrowth::scalar::{int, to_int_row, Scalar};
use pigrowth::tideal::{multilinear_consequences, GeneratorSet};

/// Every selector/group pair with a known codimension formula.
pub fn catalog_cases() -> Vec<(&'static str, Setting)> {
    FORMULAS.iter().flat_map(|c| c.settings.iter().map(move |s| (c.selector, *s))).collect()
}

pub fn algebra(i: usize) -> GStarAlgebra {
    let cases = catalog_cases();
    let (sel, s) = cases[i % cases.len()];
    build(sel, s, &Options::default()).expect("catalog selector")
}

pub fn pattern_of(a: &GStarAlgebra, n: usize, k: usize) -> Pattern {
    let ps = patterns(a.group(), n);
    ps[k % ps.len()].clone()
}

/// Codimension of one pattern from the spanning sets `b ± b*` of the
/// basis elements, without component bases.
pub fn spanning_codimension(a: &GStarAlgebra, p: &Pattern) -> usize {
    let types = p.types();
    let n = types.len();
    if n == 0 {
        return usize::from(a.is_unital());
    }
    let span: Vec<Vec<Vec<Scalar>>> = types
        .iter()
        .map(|t| {
            (0..a.dim())
                .filter(|&i| a.grading()[i] == t.g)
                .map(|i| {
                    let b = a.basis_vector(i);
                    let s = a.involute(&b);
                    let e = if t.sign == Sign::Plus { Scalar::one() } else { -Scalar::one() };
                    b.iter().zip(&s).map(|(x, y)| x + &e * y).collect::<Vec<Scalar>>()
                })
                .filter(|v| v.iter().any(|x| !x.is_zero()))
                .collect()
        })
        .collect();
    let perms = permutations(n);
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    let mut tuple = vec![0usize; n];
    if span.iter().any(Vec::is_empty) {
        return 0;
    }
    loop {
        let mut block = vec![vec![Scalar::zero(); perms.len()]; a.dim()];
        for (r, sigma) in perms.iter().enumerate() {
            let mut v = span[sigma[0]][tuple[sigma[0]]].clone();
            for &j in &sigma[1..] {
                v = a.multiply(&v, &span[j][tuple[j]]);
            }
            for (k, x) in v.into_iter().enumerate() {
                block[k][r] = x;
            }
        }
        cols.extend(block);
        let mut i = 0;
        loop {
            if i == n {
                return rank(perms.len(), cols.iter().map(|c| to_int_row(c)));
            }
            tuple[i] += 1;
            if tuple[i] < span[i].len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Standard Young tableaux of shape `lambda`, by removing corners.
pub fn syt_count(lambda: &[usize]) -> u128 {
    if lambda.iter().sum::<usize>() == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..lambda.len() {
        let next = lambda.get(i + 1).copied().unwrap_or(0);
        if lambda[i] > next {
            let mut mu = lambda.to_vec();
            mu[i] -= 1;
            while mu.last() == Some(&0) {
                mu.pop();
            }
            total += syt_count(&mu);
        }
    }
    total
}

pub fn check_rank_nullity(a: &GStarAlgebra, p: &Pattern) -> Result<(), String> {
    let ev = Evaluator::new(a);
    let codim = ev.pattern_codimension(p);
    let ids = ev.identity_space(p).len();
    let width = pigrowth::pattern::factorial(p.size()) as usize;
    let m = ev.evaluation_matrix(p);
    let r = rank(m.first().map_or(0, Vec::len), m.iter().map(|row| to_int_row(row)));
    if codim + ids != width || r != codim {
        return Err(format!("{p}: codim {codim}, identities {ids}, width {width}, matrix rank {r}"));
    }
    let oracle = spanning_codimension(a, p);
    if oracle != codim {
        return Err(format!("{p}: codim {codim}, spanning oracle {oracle}"));
    }
    Ok(())
}

pub fn check_star_stability(a: &GStarAlgebra, p: &Pattern) -> Result<(), String> {
    let ev = Evaluator::new(a);
    for row in ev.identity_space(p) {
        let row: Vec<Scalar> = row.into_iter().map(Scalar::from_integer).collect();
        let f = MultilinearPoly::from_canonical_row(p, &row);
        if !ev.is_identity(&f.star()) {
            return Err(format!("{p}: star of identity {f} is not an identity"));
        }
    }
    Ok(())
}

pub fn check_direct_sum(a: &GStarAlgebra, b: &GStarAlgebra, p: &Pattern) -> Result<(), String> {
    let s = a.direct_sum(b).map_err(|e| e.to_string())?;
    let (ea, eb, es) = (Evaluator::new(a), Evaluator::new(b), Evaluator::new(&s));
    let mut union = ea.column_echelon(p);
    for r in eb.column_echelon(p).rows() {
        union.insert(r.clone());
    }
    if !union.same_span(&es.column_echelon(p)) {
        return Err(format!("{p}: Id(A+B) differs from Id(A) ∩ Id(B)"));
    }
    Ok(())
}

pub fn check_rescaling(a: &GStarAlgebra, factors: &[i64], p: &Pattern) -> Result<(), String> {
    let f: Vec<Scalar> = (0..a.dim()).map(|i| if i == 0 { Scalar::one() } else { int(factors[i % factors.len()]) }).collect();
    let b = a.rescale_basis(&f).map_err(|e| e.to_string())?;
    let (x, y) = (eval::identity_space(a, p), eval::identity_space(&b, p));
    let mut ex = Echelon::new(pigrowth::pattern::factorial(p.size()) as usize);
    let mut ey = ex.clone();
    x.into_iter().for_each(|r| {
        ex.insert(r);
    });
    y.into_iter().for_each(|r| {
        ey.insert(r);
    });
    if !ex.same_span(&ey) {
        return Err(format!("{p}: identities change under rescaling by {factors:?}"));
    }
    Ok(())
}

pub fn check_hook(lambda: &[usize]) -> Result<(), String> {
    let h = hook_dimension(&Partition::new(lambda.to_vec()).map_err(|e| e.to_string())?);
    let s = syt_count(lambda);
    if h != s {
        return Err(format!("{lambda:?}: hook {h}, tableaux {s}"));
    }
    Ok(())
}

/// Consequences only grow when generators are added, and do not depend on
/// their order.
pub fn check_tideal_closure(gens: &GeneratorSet, extra: &GeneratorSet, p: &Pattern, group: &pigrowth::FiniteGroup) -> Result<(), String> {
    let base = multilinear_consequences(group, gens, p).map_err(|e| e.to_string())?;
    let mut more = gens.clone();
    more.extend(extra.clone());
    let big = multilinear_consequences(group, &more, p).map_err(|e| e.to_string())?;
    if !big.contains_all(&base) {
        return Err(format!("{p}: adding generators lost consequences"));
    }
    let mut rev: Vec<MultilinearPoly> = more.polys().to_vec();
    rev.reverse();
    let flipped = multilinear_consequences(group, &GeneratorSet::new(rev), p).map_err(|e| e.to_string())?;
    if !flipped.same_span(&big) {
        return Err(format!("{p}: consequences depend on generator order"));
    }
    Ok(())
}
