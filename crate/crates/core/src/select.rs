//! Text selectors for groups and catalog algebras.
//!
//! Groups: `Zn` or comma-joined products such as `Z2,Z2`, optionally
//! followed by `:i,j,...` listing element indices for symbolic degrees.
//! Algebras: `NAME[:deg[,deg]]`, with `+` joining direct summands. A degree
//! is an element index (reduced modulo the group order) or a symbol.

use std::collections::BTreeMap;

use crate::catalog;
use crate::error::{Error, Result};
use crate::groups::{cyclic, direct_product, Elem, FiniteGroup};
use crate::gstar::GStarAlgebra;

pub type Bindings = BTreeMap<String, Elem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSelector {
    pub group: FiniteGroup,
    /// Element indices listed after `:`, bound to symbols in order of use.
    pub values: Vec<Elem>,
}

pub fn parse_group(text: &str) -> Result<GroupSelector> {
    let bad = || Error::Parse(format!("malformed group {text:?}"));
    let (factors, values) = match text.split_once(':') {
        Some((f, v)) => (f, Some(v)),
        None => (text, None),
    };
    let mut group: Option<FiniteGroup> = None;
    for f in factors.split(',') {
        let n: usize = f.trim().strip_prefix('Z').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let z = cyclic(n)?;
        group = Some(match group {
            None => z,
            Some(g) => direct_product(&g, &z),
        });
    }
    let group = group.ok_or_else(bad)?;
    let values = match values {
        None => vec![],
        Some(v) => v
            .split(',')
            .map(|x| {
                let i: Elem = x.trim().parse().map_err(|_| bad())?;
                if i >= group.order() {
                    return Err(Error::Parse(format!("element {i} is not in a group of order {}", group.order())));
                }
                Ok(i)
            })
            .collect::<Result<_>>()?,
    };
    Ok(GroupSelector { group, values })
}

fn is_numeric(t: &str) -> bool {
    !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
}

fn summands(text: &str) -> impl Iterator<Item = (&str, Vec<&str>)> {
    text.split('+').map(|s| {
        let s = s.trim();
        match s.split_once(':') {
            Some((name, degs)) => (name.trim(), degs.split(',').map(str::trim).collect()),
            None => (s, vec![]),
        }
    })
}

/// Binds the symbolic degrees of `selectors`, in order of first
/// appearance, to `values`. The symbol `e` always denotes the identity.
pub fn bind_symbols(selectors: &[&str], values: &[Elem]) -> Result<Bindings> {
    let mut out = Bindings::new();
    out.insert("e".into(), 0);
    for sel in selectors {
        for (_, degs) in summands(sel) {
            for d in degs {
                if !is_numeric(d) && !out.contains_key(d) {
                    let v = *values.get(out.len() - 1).ok_or_else(|| {
                        Error::Parse(format!("degree symbol {d:?} has no value; list it after ':' in --group"))
                    })?;
                    out.insert(d.to_string(), v);
                }
            }
        }
    }
    if out.len() - 1 < values.len() {
        return Err(Error::Parse(format!("{} group values given but only {} symbols used", values.len(), out.len() - 1)));
    }
    Ok(out)
}

pub fn resolve_degree(token: &str, group: &FiniteGroup, bindings: &Bindings) -> Result<Elem> {
    if is_numeric(token) {
        let v: usize = token.parse().map_err(|_| Error::Parse(format!("bad degree {token:?}")))?;
        Ok(v % group.order())
    } else {
        bindings.get(token).copied().ok_or_else(|| Error::Parse(format!("unbound degree symbol {token:?}")))
    }
}

/// Builds the direct sum described by `text`.
pub fn parse_algebra(text: &str, group: &FiniteGroup, bindings: &Bindings) -> Result<GStarAlgebra> {
    let mut acc: Option<GStarAlgebra> = None;
    for (name, degs) in summands(text) {
        if name.is_empty() {
            return Err(Error::Parse(format!("malformed algebra selector {text:?}")));
        }
        let degs = degs.iter().map(|d| resolve_degree(d, group, bindings)).collect::<Result<Vec<_>>>()?;
        let a = catalog::by_name(name, &degs, group)?;
        acc = Some(match acc {
            None => a,
            Some(b) => b.direct_sum(&a)?,
        });
    }
    acc.ok_or_else(|| Error::Parse("empty algebra selector".into()))
}
