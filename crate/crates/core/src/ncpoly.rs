//! Noncommutative polynomials over `Q(q^(1/N))` in the generators of
//! `C_q[SU_N]` (tag `G`) and `C_q[U_{N-1}]` (tag `H`), with the Hopf
//! structure maps acting on free words.
//!
//! Generators are encoded as bytes: `u^i_j` is `(i-1)*size + (j-1)` and the
//! inverse determinant `D` of `H` is `size*size`, the largest letter.
//! Words compare degree-lexicographically.

use crate::qscalar::QScalar;
use crate::text::{lex, Parser, Tok};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Which coordinate algebra a polynomial lives in. The payload is the `N`
/// of `CP^{N-1}`, which also fixes the root order of the scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    /// `C_q[SU_N]`, generators `u^i_j` with `1 <= i, j <= N`.
    G(usize),
    /// `C_q[U_{N-1}]`, generators `u^i_j` with `1 <= i, j <= N-1` and `D`.
    H(usize),
}

impl Algebra {
    pub fn n(self) -> usize {
        match self {
            Algebra::G(n) | Algebra::H(n) => n,
        }
    }

    /// Matrix size of the generator array.
    pub fn size(self) -> usize {
        match self {
            Algebra::G(n) => n,
            Algebra::H(n) => n - 1,
        }
    }

    pub fn root(self) -> u32 {
        self.n() as u32
    }

    pub fn has_d(self) -> bool {
        matches!(self, Algebra::H(_))
    }

    pub fn num_letters(self) -> usize {
        let s = self.size();
        s * s + usize::from(self.has_d())
    }

    /// Letter of `u^i_j` (1-based indices).
    pub fn u(self, i: usize, j: usize) -> u8 {
        let s = self.size();
        assert!((1..=s).contains(&i) && (1..=s).contains(&j), "u[{i},{j}] outside {self}");
        ((i - 1) * s + (j - 1)) as u8
    }

    pub fn d_letter(self) -> u8 {
        assert!(self.has_d(), "{self} has no D generator");
        let s = self.size();
        (s * s) as u8
    }

    pub fn is_d(self, l: u8) -> bool {
        self.has_d() && l as usize == self.size() * self.size()
    }

    /// `(i, j)` of a `u` letter.
    pub fn indices(self, l: u8) -> (usize, usize) {
        let s = self.size();
        debug_assert!(!self.is_d(l));
        (l as usize / s + 1, l as usize % s + 1)
    }

    pub fn gen(self, l: u8) -> Gen {
        if self.is_d(l) {
            Gen::D
        } else {
            let (i, j) = self.indices(l);
            Gen::U(i, j)
        }
    }

    pub fn letter_name(self, l: u8) -> String {
        match self.gen(l) {
            Gen::D => "D".to_string(),
            Gen::U(i, j) => format!("u[{i},{j}]"),
        }
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        0..self.num_letters() as u8
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::G(n) => write!(f, "SU({n})"),
            Algebra::H(n) => write!(f, "U({})", n - 1),
        }
    }
}

/// A generator symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    U(usize, usize),
    D,
}

/// A word in the generators, ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn display(&self, alg: Algebra) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|&l| alg.letter_name(l)).collect::<Vec<_>>().join(".")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Finite linear combination of words.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    pub alg: Algebra,
    pub terms: BTreeMap<Word, QScalar>,
}

impl NCPoly {
    pub fn zero(alg: Algebra) -> Self {
        NCPoly { alg, terms: BTreeMap::new() }
    }

    pub fn scalar(alg: Algebra, c: QScalar) -> Self {
        Self::term(alg, Word::empty(), c)
    }

    pub fn one(alg: Algebra) -> Self {
        Self::scalar(alg, QScalar::one())
    }

    pub fn term(alg: Algebra, w: Word, c: QScalar) -> Self {
        let mut p = Self::zero(alg);
        p.add_term(w, &c);
        p
    }

    pub fn word(alg: Algebra, w: Word) -> Self {
        Self::term(alg, w, QScalar::one())
    }

    pub fn letter(alg: Algebra, l: u8) -> Self {
        Self::word(alg, Word::letter(l))
    }

    /// The generator `u^i_j`.
    pub fn u(alg: Algebra, i: usize, j: usize) -> Self {
        Self::letter(alg, alg.u(i, j))
    }

    /// The generator `D` of `H`.
    pub fn d(alg: Algebra) -> Self {
        Self::letter(alg, alg.d_letter())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &QScalar) {
        assert_eq!(self.alg, other.alg, "algebra tag mismatch");
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        let mut p = Self::zero(self.alg);
        p.add_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        assert_eq!(self.alg, other.alg, "algebra tag mismatch");
        let mut p = Self::zero(self.alg);
        for (w1, a) in &self.terms {
            for (w2, b) in &other.terms {
                p.add_term(w1.concat(w2), &(a * b));
            }
        }
        p
    }

    pub fn pow(&self, k: usize) -> NCPoly {
        let mut acc = Self::one(self.alg);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn product<'a>(alg: Algebra, factors: impl IntoIterator<Item = &'a NCPoly>) -> NCPoly {
        let mut acc = Self::one(alg);
        for f in factors {
            acc = acc.mul(f);
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Word, &QScalar)> {
        self.terms.iter().next_back()
    }

    /// Counit on free words: `eps(u^i_j) = delta_ij`, `eps(D) = 1`.
    pub fn counit(&self) -> QScalar {
        let mut acc = QScalar::zero();
        for (w, c) in &self.terms {
            if word_counit(self.alg, w) {
                acc += c;
            }
        }
        acc
    }

    /// `f - eps(f) 1`.
    pub fn plus_part(&self) -> NCPoly {
        let mut p = self.clone();
        p.add_term(Word::empty(), &-self.counit());
        p
    }

    pub fn coproduct(&self) -> TensorPoly {
        self.coproduct_k(2)
    }

    /// Iterated coproduct into `k >= 1` legs.
    pub fn coproduct_k(&self, k: usize) -> TensorPoly {
        assert!(k >= 1);
        let mut out = TensorPoly::zero(vec![self.alg; k]);
        for (w, c) in &self.terms {
            for legs in word_coproduct(self.alg, w, k) {
                out.add_term(legs, c);
            }
        }
        out
    }

    /// Antipode, extended anti-multiplicatively from the generators.
    pub fn antipode(&self) -> NCPoly {
        let imgs: Vec<NCPoly> = self.alg.letters().map(|l| antipode_letter(self.alg, l)).collect();
        self.anti_substitute(&imgs, false)
    }

    /// Star structure: `(u^i_j)* = S(u^j_i)`, `D* = det`, anti-linear and
    /// anti-multiplicative. `q` is real so coefficients are unchanged.
    pub fn star(&self) -> NCPoly {
        let imgs: Vec<NCPoly> = self.alg.letters().map(|l| star_letter(self.alg, l)).collect();
        self.anti_substitute(&imgs, true)
    }

    fn anti_substitute(&self, imgs: &[NCPoly], conj: bool) -> NCPoly {
        let mut out = Self::zero(self.alg);
        for (w, c) in &self.terms {
            let mut acc = Self::one(self.alg);
            for &l in w.0.iter().rev() {
                acc = acc.mul(&imgs[l as usize]);
            }
            out.add_scaled(&acc, &if conj { c.conj() } else { c.clone() });
        }
        out
    }

    /// Algebra map defined by images of the letters.
    pub fn substitute(&self, target: Algebra, imgs: &[NCPoly]) -> NCPoly {
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let mut acc = Self::one(target);
            for &l in &w.0 {
                acc = acc.mul(&imgs[l as usize]);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn parse(s: &str, alg: Algebra) -> Result<NCPoly, String> {
        let toks = lex(s)?;
        let mut p = Parser::new(&toks);
        let out = parse_poly(&mut p, alg)?;
        if !p.done() {
            return Err(format!("trailing input in {s:?}"));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| serde_json::json!({"word": w.display(self.alg), "coefficient": c.to_string()}))
                .collect(),
        )
    }
}

pub(crate) fn parse_poly(p: &mut Parser<'_>, alg: Algebra) -> Result<NCPoly, String> {
    let mut out = NCPoly::zero(alg);
    if p.peek() == Some(&Tok::Num(0u8.into())) && p.peek_at(1).is_none() {
        p.next();
        return Ok(out);
    }
    loop {
        let c = p.coefficient_prefix(alg.root())?;
        let w = parse_word(p, alg)?;
        out.add_term(w, &c);
        if !p.eat_sym('+') {
            return Ok(out);
        }
    }
}

pub(crate) fn parse_word(p: &mut Parser<'_>, alg: Algebra) -> Result<Word, String> {
    if p.peek() == Some(&Tok::Num(1u8.into())) {
        p.next();
        return Ok(Word::empty());
    }
    let mut w = Vec::new();
    loop {
        match p.next() {
            Some(Tok::Ident(id)) if id == "D" => w.push(alg.d_letter()),
            Some(Tok::Ident(id)) if id == "u" => {
                p.expect_sym('[')?;
                let i = p.usize()?;
                p.expect_sym(',')?;
                let j = p.usize()?;
                p.expect_sym(']')?;
                let s = alg.size();
                if !(1..=s).contains(&i) || !(1..=s).contains(&j) {
                    return Err(format!("u[{i},{j}] outside {alg}"));
                }
                w.push(alg.u(i, j));
            }
            t => return Err(format!("expected a generator, found {t:?}")),
        }
        if !p.eat_sym('.') {
            return Ok(Word(w));
        }
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if c.is_one() {
                    w.display(self.alg)
                } else {
                    format!("({c})*{}", w.display(self.alg))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.alg, self)
    }
}

pub fn word_counit(alg: Algebra, w: &Word) -> bool {
    w.0.iter().all(|&l| alg.is_d(l) || {
        let (i, j) = alg.indices(l);
        i == j
    })
}

/// All `k`-leg splittings of a word under the iterated coproduct.
pub fn word_coproduct(alg: Algebra, w: &Word, k: usize) -> Vec<Vec<Word>> {
    let s = alg.size();
    let mut acc: Vec<Vec<Vec<u8>>> = vec![vec![Vec::with_capacity(w.len()); k]];
    for &l in &w.0 {
        let mut next = Vec::with_capacity(acc.len() * s.pow(k as u32 - 1));
        if alg.is_d(l) {
            for mut legs in acc {
                for leg in legs.iter_mut() {
                    leg.push(l);
                }
                next.push(legs);
            }
        } else {
            let (i, j) = alg.indices(l);
            let chains = index_chains(i, j, k, s);
            for legs in &acc {
                for ch in &chains {
                    let mut nl = legs.clone();
                    for (t, leg) in nl.iter_mut().enumerate() {
                        leg.push(alg.u(ch[t], ch[t + 1]));
                    }
                    next.push(nl);
                }
            }
        }
        acc = next;
    }
    acc.into_iter().map(|legs| legs.into_iter().map(Word).collect()).collect()
}

fn index_chains(i: usize, j: usize, k: usize, s: usize) -> Vec<Vec<usize>> {
    let mut chains = vec![vec![i]];
    for _ in 0..k - 1 {
        let mut next = Vec::new();
        for c in &chains {
            for a in 1..=s {
                let mut c2 = c.clone();
                c2.push(a);
                next.push(c2);
            }
        }
        chains = next;
    }
    for c in chains.iter_mut() {
        c.push(j);
    }
    chains
}

/// Number of inversions of a sequence.
pub fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                n += 1;
            }
        }
    }
    n
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// `(-q)^k`.
pub fn minus_q_pow(k: i32, root: u32) -> QScalar {
    let v = QScalar::q_pow(k, root);
    if k.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

/// Quantum minor `sum_pi (-q)^{l(pi)} u^{r_1}_{c_pi(1)} ... u^{r_m}_{c_pi(m)}`
/// for ordered row and column sets.
pub fn quantum_minor(alg: Algebra, rows: &[usize], cols: &[usize]) -> NCPoly {
    assert_eq!(rows.len(), cols.len());
    let mut out = NCPoly::zero(alg);
    for pi in permutations(rows.len()) {
        let w = Word(rows.iter().zip(&pi).map(|(&r, &p)| alg.u(r, cols[p])).collect());
        out.add_term(w, &minus_q_pow(inversions(&pi) as i32, alg.root()));
    }
    out
}

/// The quantum determinant of the generator matrix of `alg`.
pub fn quantum_determinant(alg: Algebra) -> NCPoly {
    let idx: Vec<usize> = (1..=alg.size()).collect();
    quantum_minor(alg, &idx, &idx)
}

pub fn antipode_letter(alg: Algebra, l: u8) -> NCPoly {
    if alg.is_d(l) {
        return quantum_determinant(alg);
    }
    let (i, j) = alg.indices(l);
    let s = alg.size();
    let rows: Vec<usize> = (1..=s).filter(|&k| k != j).collect();
    let cols: Vec<usize> = (1..=s).filter(|&k| k != i).collect();
    let mut m = quantum_minor(alg, &rows, &cols).scale(&minus_q_pow(i as i32 - j as i32, alg.root()));
    if alg.has_d() {
        m = m.mul(&NCPoly::d(alg));
    }
    m
}

pub fn star_letter(alg: Algebra, l: u8) -> NCPoly {
    if alg.is_d(l) {
        return quantum_determinant(alg);
    }
    let (i, j) = alg.indices(l);
    antipode_letter(alg, alg.u(j, i))
}

/// Element of a tensor product of coordinate algebras.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    pub legs: Vec<Algebra>,
    pub terms: BTreeMap<Vec<Word>, QScalar>,
}

impl TensorPoly {
    pub fn zero(legs: Vec<Algebra>) -> Self {
        TensorPoly { legs, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: Vec<Word>, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(k.len(), self.legs.len());
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorPoly, c: &QScalar) {
        assert_eq!(self.legs, other.legs, "leg tags mismatch");
        for (k, a) in &other.terms {
            self.add_term(k.clone(), &(a * c));
        }
    }

    /// `f_1 (x) ... (x) f_k`.
    pub fn pure(factors: &[&NCPoly]) -> TensorPoly {
        let mut out = TensorPoly::zero(factors.iter().map(|f| f.alg).collect());
        let mut acc: Vec<(Vec<Word>, QScalar)> = vec![(Vec::new(), QScalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (w, a) in &f.terms {
                    let mut k2 = k.clone();
                    k2.push(w.clone());
                    next.push((k2, c * a));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            out.add_term(k, &c);
        }
        out
    }

    /// Legwise product.
    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        assert_eq!(self.legs, other.legs, "leg tags mismatch");
        let mut out = TensorPoly::zero(self.legs.clone());
        for (k1, a) in &self.terms {
            for (k2, b) in &other.terms {
                let k: Vec<Word> = k1.iter().zip(k2).map(|(x, y)| x.concat(y)).collect();
                out.add_term(k, &(a * b));
            }
        }
        out
    }

    /// Applies a linear map to one leg.
    pub fn map_leg(&self, leg: usize, target: Algebra, f: impl Fn(&Word) -> NCPoly) -> TensorPoly {
        let mut legs = self.legs.clone();
        legs[leg] = target;
        let mut out = TensorPoly::zero(legs);
        for (k, c) in &self.terms {
            let img = f(&k[leg]);
            for (w, a) in &img.terms {
                let mut k2 = k.clone();
                k2[leg] = w.clone();
                out.add_term(k2, &(c * a));
            }
        }
        out
    }

    /// Applies a linear map to one leg, replacing it by several legs.
    pub fn expand_leg(&self, leg: usize, f: impl Fn(&Word) -> TensorPoly) -> TensorPoly {
        let mut out: Option<TensorPoly> = None;
        for (k, c) in &self.terms {
            let img = f(&k[leg]);
            let o = out.get_or_insert_with(|| {
                let mut legs = self.legs[..leg].to_vec();
                legs.extend(&img.legs);
                legs.extend(&self.legs[leg + 1..]);
                TensorPoly::zero(legs)
            });
            for (ws, a) in &img.terms {
                let mut k2 = k[..leg].to_vec();
                k2.extend(ws.iter().cloned());
                k2.extend(k[leg + 1..].iter().cloned());
                o.add_term(k2, &(c * a));
            }
        }
        out.unwrap_or_else(|| TensorPoly::zero(Vec::new()))
    }

    /// Applies a scalar functional to one leg, removing it.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(&Word) -> QScalar) -> TensorPoly {
        let mut legs = self.legs.clone();
        legs.remove(leg);
        let mut out = TensorPoly::zero(legs);
        for (k, c) in &self.terms {
            let v = f(&k[leg]);
            if v.is_zero() {
                continue;
            }
            let mut k2 = k.clone();
            k2.remove(leg);
            out.add_term(k2, &(c * v));
        }
        out
    }

    /// Collapses a one-leg tensor to a polynomial.
    pub fn into_poly(self) -> NCPoly {
        assert_eq!(self.legs.len(), 1);
        let mut p = NCPoly::zero(self.legs[0]);
        for (mut k, c) in self.terms {
            p.add_term(k.pop().unwrap(), &c);
        }
        p
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> =
                    k.iter().zip(&self.legs).map(|(w, a)| w.display(*a)).collect();
                if c.is_one() {
                    legs.join(" (x) ")
                } else {
                    format!("({c})*{}", legs.join(" (x) "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_degree_lex() {
        let a = Word(vec![3, 0]);
        let b = Word(vec![0, 3]);
        let c = Word(vec![1]);
        assert!(b < a);
        assert!(c < b);
    }

    #[test]
    fn su2_antipode_on_generators() {
        let g = Algebra::G(2);
        let q = QScalar::q(2);
        assert_eq!(NCPoly::u(g, 1, 1).antipode(), NCPoly::u(g, 2, 2));
        assert_eq!(NCPoly::u(g, 2, 2).antipode(), NCPoly::u(g, 1, 1));
        assert_eq!(NCPoly::u(g, 1, 2).antipode(), NCPoly::u(g, 1, 2).scale(&-q.pow(-1)));
        assert_eq!(NCPoly::u(g, 2, 1).antipode(), NCPoly::u(g, 2, 1).scale(&-q));
    }

    #[test]
    fn h_antipode_of_d_is_det() {
        let h = Algebra::H(3);
        assert_eq!(NCPoly::d(h).antipode(), quantum_determinant(h));
        let h2 = Algebra::H(2);
        assert_eq!(NCPoly::u(h2, 1, 1).antipode(), NCPoly::d(h2));
    }

    #[test]
    fn coproduct_of_generator() {
        let g = Algebra::G(3);
        let c = NCPoly::u(g, 1, 2).coproduct();
        assert_eq!(c.terms.len(), 3);
        for (k, v) in &c.terms {
            assert!(v.is_one());
            let (i, a) = g.indices(k[0].0[0]);
            let (b, j) = g.indices(k[1].0[0]);
            assert_eq!((i, j), (1, 2));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn det2_shape() {
        let g = Algebra::G(2);
        let d = quantum_determinant(g);
        let expect = NCPoly::u(g, 1, 1).mul(&NCPoly::u(g, 2, 2))
            .scale(&QScalar::one());
        let mut e = expect;
        e.add_scaled(&NCPoly::u(g, 1, 2).mul(&NCPoly::u(g, 2, 1)), &-QScalar::q(2));
        assert_eq!(d, e);
    }

    #[test]
    fn text_round_trip() {
        let g = Algebra::G(3);
        let mut p = NCPoly::u(g, 1, 2).mul(&NCPoly::u(g, 3, 1)).scale(&QScalar::nu(3));
        p.add_term(Word::empty(), &QScalar::t_pow(-2, 3));
        p.add_scaled(&NCPoly::u(g, 2, 2), &QScalar::one());
        let s = p.to_string();
        assert_eq!(NCPoly::parse(&s, g).unwrap(), p);
        let h = Algebra::H(3);
        let d = NCPoly::d(h).mul(&NCPoly::u(h, 2, 1));
        assert_eq!(NCPoly::parse(&d.to_string(), h).unwrap(), d);
        assert_eq!(NCPoly::parse("0", g).unwrap(), NCPoly::zero(g));
    }
}
