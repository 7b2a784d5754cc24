//! Multilinear polynomials in typed variables `x_{i,g}^ε` and their text syntax.
//!
//! Syntax: variables `x{i}^{+|-}_{g}`; `*` concatenates, `[f,g]` is the
//! commutator, `{f,g}` the Jordan product, plus `+`, `-`, parentheses and
//! rational coefficients. Degrees are element indices, or names looked up
//! in a binding table. Generator sets may also leave the sign out (a plain
//! variable, expanded over both signs) or use a letter such as `^e`, where
//! all variables sharing the letter take the same sign.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};
use crate::gstar::{Sign, SignedDegree};
use crate::pattern::{factorial, perm_index, Pattern};
use crate::scalar::{format_scalar, Scalar};

pub type VarIndex = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypedVariable {
    pub index: VarIndex,
    pub ty: SignedDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    vars: BTreeMap<VarIndex, SignedDegree>,
    terms: BTreeMap<Vec<VarIndex>, Scalar>,
}

impl MultilinearPoly {
    pub fn variable(index: VarIndex, ty: SignedDegree) -> Self {
        MultilinearPoly {
            vars: BTreeMap::from([(index, ty)]),
            terms: BTreeMap::from([(vec![index], Scalar::one())]),
        }
    }

    pub fn var(index: VarIndex, g: Elem, sign: Sign) -> Self {
        Self::variable(index, SignedDegree::new(g, sign))
    }

    /// The constant polynomial 1 in no variables.
    pub fn one() -> Self {
        MultilinearPoly { vars: BTreeMap::new(), terms: BTreeMap::from([(vec![], Scalar::one())]) }
    }

    pub fn zero(vars: BTreeMap<VarIndex, SignedDegree>) -> Self {
        MultilinearPoly { vars, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        vars: BTreeMap<VarIndex, SignedDegree>,
        terms: impl IntoIterator<Item = (Vec<VarIndex>, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        let keys: BTreeSet<VarIndex> = p.vars.keys().copied().collect();
        for (w, c) in terms {
            let ws: BTreeSet<VarIndex> = w.iter().copied().collect();
            if ws.len() != w.len() || ws != keys {
                return Err(Error::Invalid(format!("monomial {w:?} is not a permutation of the variables")));
            }
            *p.terms.entry(w).or_insert_with(Scalar::zero) += c;
        }
        p.terms.retain(|_, c| !c.is_zero());
        Ok(p)
    }

    pub fn vars(&self) -> &BTreeMap<VarIndex, SignedDegree> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<VarIndex>, Scalar> {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pattern(&self) -> Pattern {
        Pattern::from_types(self.vars.values().copied())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect()
        };
        MultilinearPoly { vars: self.vars.clone(), terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::Invalid("summands use different typed variables".into()));
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            *terms.entry(w.clone()).or_insert_with(Scalar::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultilinearPoly { vars: self.vars.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Concatenation product; the variable sets must be disjoint.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.vars.keys().any(|k| other.vars.contains_key(k)) {
            return Err(Error::OverlappingVariables);
        }
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().map(|(k, v)| (*k, *v)));
        let mut terms = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w: Vec<VarIndex> = u.iter().chain(v).copied().collect();
                *terms.entry(w).or_insert_with(Scalar::zero) += a * b;
            }
        }
        terms.retain(|_, c: &mut Scalar| !c.is_zero());
        Ok(MultilinearPoly { vars, terms })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn jordan(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    /// `f*`: each monomial reversed and multiplied by the product of the
    /// signs of its variables.
    pub fn star(&self) -> Self {
        let sign = self.vars.values().fold(Sign::Plus, |s, d| s.times(d.sign));
        let c = Scalar::from_integer(sign.value().into());
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.iter().rev().copied().collect(), x * &c))
            .collect();
        MultilinearPoly { vars: self.vars.clone(), terms }
    }

    /// Canonical variable order: by type, ties by index.
    pub fn canonical_order(&self) -> Vec<VarIndex> {
        let mut v: Vec<(SignedDegree, VarIndex)> = self.vars.iter().map(|(i, d)| (*d, *i)).collect();
        v.sort();
        v.into_iter().map(|(_, i)| i).collect()
    }

    /// Pattern and coefficient row indexed by the lexicographically ordered
    /// permutations of the canonical variable order.
    pub fn canonical_row(&self) -> (Pattern, Vec<Scalar>) {
        let order = self.canonical_order();
        let pos: BTreeMap<VarIndex, usize> = order.iter().enumerate().map(|(p, i)| (*i, p)).collect();
        let mut row = vec![Scalar::zero(); factorial(order.len()) as usize];
        for (w, c) in &self.terms {
            let word: Vec<usize> = w.iter().map(|i| pos[i]).collect();
            row[perm_index(&word)] += c;
        }
        (self.pattern(), row)
    }

    /// Rebuilds a polynomial from a canonical row for the given pattern,
    /// naming the variables `1..=n` in canonical order.
    pub fn from_canonical_row(p: &Pattern, row: &[Scalar]) -> Self {
        let types = p.types();
        let vars: BTreeMap<VarIndex, SignedDegree> =
            types.iter().enumerate().map(|(i, d)| (i as VarIndex + 1, *d)).collect();
        let perms = crate::pattern::permutations(types.len());
        let terms = perms
            .into_iter()
            .zip(row)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.into_iter().map(|i| i as VarIndex + 1).collect(), c.clone()))
            .collect();
        MultilinearPoly { vars, terms }
    }

    pub fn parse(text: &str, group: &FiniteGroup) -> Result<Self> {
        Self::parse_with(text, group, &BTreeMap::new())
    }

    pub fn parse_with(text: &str, group: &FiniteGroup, bindings: &BTreeMap<String, Elem>) -> Result<Self> {
        let g = GenPoly::parse(text, group, bindings)?;
        if g.vars.values().any(|(_, s)| !matches!(s, SignSpec::Fixed(_))) {
            return Err(Error::Parse("every variable needs an explicit sign".into()));
        }
        let mut out = g.expand();
        Ok(out.remove(0))
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let word: Vec<String> = w
                .iter()
                .map(|i| {
                    let d = self.vars[i];
                    format!("x{}^{}_{}", i, d.sign.symbol(), d.g)
                })
                .collect();
            if w.is_empty() {
                f.write_str(&format_scalar(&a))?;
            } else if a.is_one() {
                f.write_str(&word.join("*"))?;
            } else {
                write!(f, "{}*{}", format_scalar(&a), word.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Sign annotation of a variable in generator syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignSpec {
    Fixed(Sign),
    /// No sign given: an independent choice of both signs.
    Free,
    /// A sign letter shared by every variable carrying it.
    Named(char),
}

/// A parsed polynomial whose variables may still have unresolved signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPoly {
    vars: BTreeMap<VarIndex, (Elem, SignSpec)>,
    terms: BTreeMap<Vec<VarIndex>, Scalar>,
}

impl GenPoly {
    pub fn parse(text: &str, group: &FiniteGroup, bindings: &BTreeMap<String, Elem>) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), i: 0, group, bindings };
        let out = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        if out.vars.is_empty() {
            return Err(Error::Parse("polynomial has no variables".into()));
        }
        Ok(out)
    }

    pub fn is_signed(&self) -> bool {
        self.vars.values().all(|(_, s)| matches!(s, SignSpec::Fixed(_)))
    }

    /// Every sign assignment to the free variables and sign letters.
    pub fn expand(&self) -> Vec<MultilinearPoly> {
        #[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy)]
        enum Key {
            Free(VarIndex),
            Letter(char),
        }
        let keys: BTreeSet<Key> = self
            .vars
            .iter()
            .filter_map(|(i, (_, s))| match s {
                SignSpec::Free => Some(Key::Free(*i)),
                SignSpec::Named(c) => Some(Key::Letter(*c)),
                SignSpec::Fixed(_) => None,
            })
            .collect();
        let keys: Vec<Key> = keys.into_iter().collect();
        let mut out = Vec::new();
        for mask in 0..(1usize << keys.len()) {
            let choose = |k: Key| {
                let b = keys.iter().position(|x| *x == k).unwrap();
                if mask >> (keys.len() - 1 - b) & 1 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            };
            let vars = self
                .vars
                .iter()
                .map(|(i, (g, s))| {
                    let sign = match s {
                        SignSpec::Fixed(x) => *x,
                        SignSpec::Free => choose(Key::Free(*i)),
                        SignSpec::Named(c) => choose(Key::Letter(*c)),
                    };
                    (*i, SignedDegree::new(*g, sign))
                })
                .collect();
            out.push(MultilinearPoly { vars, terms: self.terms.clone() });
        }
        out
    }

    fn constant(c: Scalar) -> Self {
        GenPoly { vars: BTreeMap::new(), terms: BTreeMap::from([(vec![], c)]) }
    }

    fn add(self, other: GenPoly, sign: i64) -> Result<GenPoly> {
        if self.vars != other.vars {
            return Err(Error::Parse("summands must use the same variables".into()));
        }
        let mut terms = self.terms;
        for (w, c) in other.terms {
            *terms.entry(w).or_insert_with(Scalar::zero) += c * Scalar::from_integer(sign.into());
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GenPoly { vars: self.vars, terms })
    }

    fn mul(self, other: &GenPoly) -> Result<GenPoly> {
        if self.vars.keys().any(|k| other.vars.contains_key(k)) {
            return Err(Error::OverlappingVariables);
        }
        let mut vars = self.vars;
        vars.extend(other.vars.iter().map(|(k, v)| (*k, *v)));
        let mut terms = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w: Vec<VarIndex> = u.iter().chain(v).copied().collect();
                *terms.entry(w).or_insert_with(Scalar::zero) += a * b;
            }
        }
        terms.retain(|_, c: &mut Scalar| !c.is_zero());
        Ok(GenPoly { vars, terms })
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    group: &'a FiniteGroup,
    bindings: &'a BTreeMap<String, Elem>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.i))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<num::BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap())
    }

    fn expr(&mut self) -> Result<GenPoly> {
        let mut sign = 1;
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                sign = -1;
            }
            Some(b'+') => self.i += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = GenPoly { vars: first.vars.clone(), terms: BTreeMap::new() }.add(first, sign)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = acc.add(t, 1)?;
                }
                Some(b'-') => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = acc.add(t, -1)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GenPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GenPoly> {
        match self.peek() {
            Some(b'x') => self.variable(),
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(open @ (b'[' | b'{')) => {
                self.i += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(if open == b'[' { b']' } else { b'}' })?;
                let ab = a.clone().mul(&b)?;
                let ba = b.mul(&a)?;
                ab.add(ba, if open == b'[' { -1 } else { 1 })
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.number()?;
                let q = if self.peek() == Some(b'/') {
                    self.i += 1;
                    let q = self.number()?;
                    if q.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    q
                } else {
                    num::BigInt::one()
                };
                Ok(GenPoly::constant(Scalar::new(p, q)))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn variable(&mut self) -> Result<GenPoly> {
        self.i += 1;
        let index = self.number()?;
        let index: VarIndex = index.try_into().map_err(|_| self.err("variable index too large"))?;
        if index == 0 {
            return Err(self.err("variable indices start at 1"));
        }
        let sign = if self.s.get(self.i) == Some(&b'^') {
            self.i += 1;
            let c = *self.s.get(self.i).ok_or_else(|| self.err("missing sign"))? as char;
            self.i += 1;
            match Sign::parse(c) {
                Some(s) => SignSpec::Fixed(s),
                None if c.is_ascii_lowercase() => SignSpec::Named(c),
                None => return Err(self.err("bad sign")),
            }
        } else {
            SignSpec::Free
        };
        if self.s.get(self.i) != Some(&b'_') {
            return Err(self.err("expected '_' before the degree"));
        }
        self.i += 1;
        let braced = self.s.get(self.i) == Some(&b'{');
        if braced {
            self.i += 1;
        }
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_alphanumeric() {
            self.i += 1;
        }
        let tok = std::str::from_utf8(&self.s[start..self.i]).unwrap().to_string();
        if braced {
            if self.s.get(self.i) != Some(&b'}') {
                return Err(self.err("expected '}'"));
            }
            self.i += 1;
        }
        let g = if let Some(&g) = self.bindings.get(&tok) {
            g
        } else if !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) {
            tok.parse::<Elem>().map_err(|_| self.err("bad degree"))?
        } else {
            return Err(self.err(&format!("unknown degree {tok:?}")));
        };
        if g >= self.group.order() {
            return Err(self.err(&format!("degree {g} is not a group element")));
        }
        Ok(GenPoly {
            vars: BTreeMap::from([(index, (g, sign))]),
            terms: BTreeMap::from([(vec![index], Scalar::one())]),
        })
    }
}
