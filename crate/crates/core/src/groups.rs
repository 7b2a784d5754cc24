//! Finite groups as Cayley tables over dense element indices.

use std::fmt;

pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<Elem>>,
    identity: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    Empty,
    NotSquare { row: usize },
    OutOfRange { row: usize, col: usize },
    NotLatinRow { row: usize },
    NotLatinColumn { col: usize },
    BadIdentity { identity: Elem },
    NonAssociative { a: Elem, b: Elem, c: Elem },
    MissingInverse { elem: Elem },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupViolation::*;
        match self {
            Empty => write!(f, "empty table"),
            NotSquare { row } => write!(f, "row {row} has the wrong length"),
            OutOfRange { row, col } => write!(f, "entry ({row},{col}) is not an element index"),
            NotLatinRow { row } => write!(f, "row {row} is not a permutation (Latin square violation)"),
            NotLatinColumn { col } => write!(f, "column {col} is not a permutation (Latin square violation)"),
            BadIdentity { identity } => write!(f, "{identity} is not a two-sided identity"),
            NonAssociative { a, b, c } => write!(f, "({a}*{b})*{c} != {a}*({b}*{c})"),
            MissingInverse { elem } => write!(f, "element {elem} has no two-sided inverse"),
        }
    }
}

impl std::error::Error for GroupViolation {}

/// Checks every group axiom, reporting the first violation found.
pub fn validate_group(table: &[Vec<Elem>], identity: Elem) -> Result<(), GroupViolation> {
    let n = table.len();
    if n == 0 {
        return Err(GroupViolation::Empty);
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupViolation::NotSquare { row: i });
        }
        if let Some(j) = row.iter().position(|&x| x >= n) {
            return Err(GroupViolation::OutOfRange { row: i, col: j });
        }
    }
    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &x in row {
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupViolation::NotLatinRow { row: i });
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            if std::mem::replace(&mut seen[row[j]], true) {
                return Err(GroupViolation::NotLatinColumn { col: j });
            }
        }
    }
    if identity >= n || (0..n).any(|x| table[identity][x] != x || table[x][identity] != x) {
        return Err(GroupViolation::BadIdentity { identity });
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(GroupViolation::NonAssociative { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
            return Err(GroupViolation::MissingInverse { elem: a });
        }
    }
    Ok(())
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<Elem>>, identity: Elem) -> Result<Self, GroupViolation> {
        validate_group(&table, identity)?;
        Ok(FiniteGroup { order: table.len(), table, identity })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a][b]
    }

    pub fn inverse(&self, a: Elem) -> Elem {
        (0..self.order).find(|&b| self.table[a][b] == self.identity).expect("validated group")
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

pub fn cyclic(n: usize) -> crate::Result<FiniteGroup> {
    if n == 0 {
        return Err(crate::Error::Invalid("cyclic group of order 0".into()));
    }
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    Ok(FiniteGroup { order: n, table, identity: 0 })
}

/// Componentwise product; `(g, h)` has index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order;
    let n = g.order * m;
    let table = (0..n)
        .map(|a| (0..n).map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m)).collect())
        .collect();
    FiniteGroup { order: n, table, identity: g.identity * m + h.identity }
}

pub fn klein() -> FiniteGroup {
    let z2 = cyclic(2).unwrap();
    direct_product(&z2, &z2)
}
