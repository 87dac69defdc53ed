//! Exact sparse linear algebra over `Q(q^(1/N))`.
//!
//! Row reduction always pivots on the first non-zero column of a row, and rows
//! are kept sorted by pivot, so the reduced row echelon form of a subspace is
//! canonical for a fixed column order.

use crate::qscalar::QScalar;
use std::collections::BTreeMap;

pub type SparseVec = BTreeMap<usize, QScalar>;

pub fn axpy(v: &mut SparseVec, c: &QScalar, row: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, a) in row {
        let x = a * c;
        match v.entry(*k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &x;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(x);
            }
        }
    }
}

pub fn scale(v: &SparseVec, c: &QScalar) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(k, a)| (*k, a * c)).collect()
}

pub fn is_zero(v: &SparseVec) -> bool {
    v.is_empty()
}

/// Incrementally built echelon form; every row has leading coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let c = v[&p].clone();
            axpy(&mut v, &-c, &self.rows[&p]);
            cursor = p + 1;
        }
        v
    }

    /// Adds `v` to the span; returns the new pivot if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (&p, lead) = r.iter().next()?;
        let inv = QScalar::one().try_div(lead).expect("non-zero pivot");
        let row = scale(&r, &inv);
        self.rows.insert(p, row);
        Some(p)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Canonical reduced row echelon form.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut out: Vec<(usize, SparseVec)> = Vec::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            for (q, other) in &out {
                if let Some(c) = r.get(q).cloned() {
                    axpy(&mut r, &-c, other);
                }
            }
            out.push((p, r));
        }
        out.reverse();
        out.into_iter().map(|(_, r)| r).collect()
    }
}

/// A subspace of `K^dim` held in canonical reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub rows: Vec<SparseVec>,
}

impl SubspaceBasis {
    pub fn span<'a>(ambient_dim: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new();
        for v in vs {
            e.insert(v);
        }
        SubspaceBasis { ambient_dim, rows: e.rref() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| *r.keys().next().unwrap()).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.rows.insert(*r.keys().next().unwrap(), r.clone());
        }
        e
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.echelon().reduce(v)
    }

    /// First basis vector of `other` not contained in `self`.
    pub fn first_outside(&self, other: &SubspaceBasis) -> Option<SparseVec> {
        let e = self.echelon();
        other.rows.iter().find(|r| !e.contains(r)).cloned()
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        SubspaceBasis::span(self.ambient_dim, self.rows.iter().chain(&other.rows))
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let images: Vec<SparseVec> = self.rows.iter().chain(&other.rows).cloned().collect();
        let vs: Vec<SparseVec> = kernel(self.ambient_dim, &images)
            .into_iter()
            .map(|c| {
                let mut v = SparseVec::new();
                for (row, x) in self.rows.iter().zip(&c) {
                    axpy(&mut v, x, row);
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.ambient_dim, vs.iter())
    }

    /// Applies a map to every entry and re-reduces, e.g. specialisation of `q`.
    pub fn map_entries(&self, f: impl Fn(&QScalar) -> QScalar) -> SubspaceBasis {
        let rows: Vec<SparseVec> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(k, v)| (*k, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SubspaceBasis::span(self.ambient_dim, rows.iter())
    }
}

/// Expresses vectors in terms of a fixed independent family.
#[derive(Clone, Debug)]
pub struct Solver {
    width: usize,
    count: usize,
    ech: Echelon,
}

impl Solver {
    /// `width` is an upper bound on the column indices of the family.
    pub fn new<'a>(width: usize, family: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut ech = Echelon::new();
        let mut count = 0;
        for (i, b) in family.into_iter().enumerate() {
            let mut row = b.clone();
            row.insert(width + i, QScalar::one());
            ech.insert(&row);
            count += 1;
        }
        Solver { width, count, ech }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// True when the family is linearly independent.
    pub fn independent(&self) -> bool {
        self.ech.pivots().all(|p| p < self.width)
    }

    /// Coefficients `c` with `v = sum c_i b_i`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<QScalar>> {
        let r = self.ech.reduce(v);
        if r.keys().any(|&k| k < self.width) {
            return None;
        }
        let mut c = vec![QScalar::zero(); self.count];
        for (k, x) in r {
            c[k - self.width] = -x;
        }
        Some(c)
    }
}

/// Basis of the kernel of `c -> sum_i c_i images[i]`.
pub fn kernel(width: usize, images: &[SparseVec]) -> Vec<Vec<QScalar>> {
    let mut ech = Echelon::new();
    for (i, b) in images.iter().enumerate() {
        let mut row = b.clone();
        row.insert(width + i, QScalar::one());
        ech.insert(&row);
    }
    ech.rref()
        .into_iter()
        .filter(|r| *r.keys().next().unwrap() >= width)
        .map(|r| {
            let mut c = vec![QScalar::zero(); images.len()];
            for (k, x) in r {
                c[k - width] = x;
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, x)| (k, QScalar::from_int(x))).filter(|(_, x)| !x.is_zero()).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = SubspaceBasis::span(3, [v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)])].iter());
        let b = SubspaceBasis::span(3, [v(&[(0, 1), (1, 3), (2, 1)]), v(&[(0, 2), (1, 5), (2, 1)])].iter());
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[(0, 1), (1, 1), (2, -1)])));
    }

    #[test]
    fn solver_and_kernel() {
        let fam = [v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])];
        let s = Solver::new(3, fam.iter());
        assert!(s.independent());
        let c = s.solve(&v(&[(0, 2), (1, 5), (2, 3)])).unwrap();
        assert_eq!(c, vec![QScalar::from_int(2), QScalar::from_int(3)]);
        assert!(s.solve(&v(&[(0, 1)])).is_none());
        let a = SubspaceBasis::span(3, [v(&[(0, 1)]), v(&[(1, 1)])].iter());
        let b = SubspaceBasis::span(3, [v(&[(1, 1), (0, 1)]), v(&[(2, 1)])].iter());
        assert_eq!(a.intersect(&b), SubspaceBasis::span(3, [v(&[(0, 1), (1, 1)])].iter()));
        let k = kernel(2, &[v(&[(0, 1)]), v(&[(0, 2)]), v(&[(1, 1)])]);
        assert_eq!(k, vec![vec![QScalar::one(), QScalar::from_rat(num::rational::BigRational::new((-1).into(), 2.into())), QScalar::zero()]]);
    }
}
