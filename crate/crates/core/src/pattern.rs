//! Patterns (multisets of signed degrees) and permutation indexing.

use std::collections::BTreeMap;
use std::fmt;

use crate::groups::FiniteGroup;
use crate::gstar::{Sign, SignedDegree};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pattern {
    counts: BTreeMap<SignedDegree, usize>,
}

impl Pattern {
    pub fn empty() -> Self {
        Pattern::default()
    }

    pub fn from_types<I: IntoIterator<Item = SignedDegree>>(types: I) -> Self {
        let mut counts = BTreeMap::new();
        for t in types {
            *counts.entry(t).or_insert(0) += 1;
        }
        Pattern { counts }
    }

    pub fn from_counts<I: IntoIterator<Item = (SignedDegree, usize)>>(counts: I) -> Self {
        Pattern { counts: counts.into_iter().filter(|(_, k)| *k > 0).collect() }
    }

    pub fn counts(&self) -> &BTreeMap<SignedDegree, usize> {
        &self.counts
    }

    pub fn count(&self, d: SignedDegree) -> usize {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn with_count(&self, d: SignedDegree, k: usize) -> Pattern {
        let mut counts = self.counts.clone();
        if k == 0 {
            counts.remove(&d);
        } else {
            counts.insert(d, k);
        }
        Pattern { counts }
    }

    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    /// Variable types in canonical order.
    pub fn types(&self) -> Vec<SignedDegree> {
        self.counts.iter().flat_map(|(d, &k)| std::iter::repeat_n(*d, k)).collect()
    }

    pub fn multinomial(&self) -> u128 {
        let mut r = factorial(self.size());
        for &k in self.counts.values() {
            r /= factorial(k);
        }
        r
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(d, k)| format!("{k}_{{{d}}}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All patterns of size `n`, canonically ordered.
pub fn patterns(group: &FiniteGroup, n: usize) -> Vec<Pattern> {
    let types = SignedDegree::all(group);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(types: &[SignedDegree], start: usize, n: usize, cur: &mut Vec<SignedDegree>, out: &mut Vec<Pattern>) {
        if cur.len() == n {
            out.push(Pattern::from_types(cur.iter().copied()));
            return;
        }
        for i in start..types.len() {
            cur.push(types[i]);
            rec(types, i, n, cur, out);
            cur.pop();
        }
    }
    rec(&types, 0, n, &mut cur, &mut out);
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Lexicographic rank of a permutation of `0..n`.
pub fn perm_index(word: &[usize]) -> usize {
    let n = word.len();
    let mut idx = 0;
    for i in 0..n {
        let smaller = word[i + 1..].iter().filter(|&&x| x < word[i]).count();
        idx += smaller * factorial(n - 1 - i) as usize;
    }
    idx
}

pub fn one_plus(group: &FiniteGroup) -> SignedDegree {
    SignedDegree::new(group.identity(), Sign::Plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;

    #[test]
    fn pattern_counts() {
        let z1 = cyclic(1).unwrap();
        assert_eq!(patterns(&z1, 0), vec![Pattern::empty()]);
        assert_eq!(patterns(&z1, 1).len(), 2);
        assert_eq!(patterns(&cyclic(2).unwrap(), 2).len(), 10);
        let p = Pattern::from_types([SignedDegree::minus(1), SignedDegree::plus(0), SignedDegree::minus(1)]);
        assert_eq!(p.types(), vec![SignedDegree::plus(0), SignedDegree::minus(1), SignedDegree::minus(1)]);
        assert_eq!(p.multinomial(), 3);
    }

    #[test]
    fn permutation_ranks() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        for (i, p) in ps.iter().enumerate() {
            assert_eq!(perm_index(p), i);
        }
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
    }
}
