//! Defining relations, degree-bounded completion and normal forms.
//!
//! Rules orient each relation towards its degree-lex leading word. The
//! completion resolves every overlap ambiguity whose overlap word has length
//! at most `max_degree`; if no overlap was skipped the system is confluent in
//! all degrees and [`RewriteSystem::is_truncated`] returns `false`.

use crate::ncpoly::{quantum_determinant, Algebra, NCPoly, TensorPoly, Word};
use crate::qscalar::QScalar;
use crate::text::{lex, Parser};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::sync::RwLock;

pub const ORDER_NAME: &str = "deglex row-major D-last";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("completion exceeded its budget of {0} rules")]
    Budget(usize),
    #[error("cannot parse rule set: {0}")]
    Parse(String),
    #[error("rule set was written for order {found:?}, expected {expected:?}")]
    OrderMismatch { found: String, expected: String },
    #[error("rule set algebra {found} does not match {expected}")]
    AlgebraMismatch { found: String, expected: String },
}

/// `R^{ik}_{jl} = q^{d_ik} d_il d_kj + nu H(k-i) d_ij d_kl` with `H(0) = 0`.
pub fn r_matrix_entry(i: usize, k: usize, j: usize, l: usize, root: u32) -> QScalar {
    let mut v = QScalar::zero();
    if i == l && k == j {
        v = if i == k { QScalar::q(root) } else { QScalar::one() };
    }
    if k > i && i == j && k == l {
        v += &QScalar::nu(root);
    }
    v
}

/// The RTT relation for the index quadruple `(a, b, c, d)`:
/// `sum R^{ac}_{wx} u^w_b u^x_d - sum R^{yz}_{bd} u^a_y u^c_z`.
pub fn rtt_relation(alg: Algebra, a: usize, b: usize, c: usize, d: usize) -> NCPoly {
    let s = alg.size();
    let root = alg.root();
    let mut p = NCPoly::zero(alg);
    for w in 1..=s {
        for x in 1..=s {
            let r = r_matrix_entry(a, c, w, x, root);
            if !r.is_zero() {
                p.add_term(Word(vec![alg.u(w, b), alg.u(x, d)]), &r);
            }
        }
    }
    for y in 1..=s {
        for z in 1..=s {
            let r = r_matrix_entry(y, z, b, d, root);
            if !r.is_zero() {
                p.add_term(Word(vec![alg.u(a, y), alg.u(c, z)]), &-r);
            }
        }
    }
    p
}

fn monic(p: &NCPoly) -> NCPoly {
    let (_, c) = p.leading().expect("non-zero");
    p.scale(&QScalar::one().try_div(c).expect("non-zero leading coefficient"))
}

/// A linearly independent set of RTT relations spanning all of them, each
/// scaled to have leading coefficient 1.
pub fn quadratic_relations(alg: Algebra) -> Vec<NCPoly> {
    let s = alg.size();
    let mut echelon: Vec<NCPoly> = Vec::new();
    let mut out = Vec::new();
    for a in 1..=s {
        for b in 1..=s {
            for c in 1..=s {
                for d in 1..=s {
                    let p = rtt_relation(alg, a, b, c, d);
                    if p.is_zero() {
                        continue;
                    }
                    let mut red = p.clone();
                    for e in &echelon {
                        let (lw, _) = e.leading().unwrap();
                        if let Some(c) = red.terms.get(lw).cloned() {
                            red.add_scaled(e, &-c);
                        }
                    }
                    if red.is_zero() {
                        continue;
                    }
                    let m = monic(&red);
                    let pos = echelon
                        .iter()
                        .position(|e| e.leading().unwrap().0 < m.leading().unwrap().0)
                        .unwrap_or(echelon.len());
                    echelon.insert(pos, m);
                    out.push(monic(&p));
                }
            }
        }
    }
    out
}

/// Full defining relations of `alg`.
pub fn defining_relations(alg: Algebra) -> Vec<NCPoly> {
    let mut rels = quadratic_relations(alg);
    let one = NCPoly::one(alg);
    let det = quantum_determinant(alg);
    match alg {
        Algebra::G(_) => {
            let mut r = det;
            r.add_scaled(&one, &-QScalar::one());
            rels.push(r);
        }
        Algebra::H(_) => {
            let d = NCPoly::d(alg);
            for l in alg.letters().filter(|&l| !alg.is_d(l)) {
                let x = NCPoly::letter(alg, l);
                let mut r = d.mul(&x);
                r.add_scaled(&x.mul(&d), &-QScalar::one());
                rels.push(r);
            }
            let mut r1 = det.mul(&d);
            r1.add_scaled(&one, &-QScalar::one());
            rels.push(r1);
            let mut r2 = d.mul(&det);
            r2.add_scaled(&one, &-QScalar::one());
            rels.push(r2);
        }
    }
    rels
}

/// Default completion degree: `4N` for `G`, `2N + 2` for `H`. Star of an
/// antipode of a degree-two element of `G` has degree `4(N-1)`.
pub fn default_degree(alg: Algebra) -> usize {
    match alg {
        Algebra::G(n) => 4 * n,
        Algebra::H(n) => 2 * n + 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

pub struct RewriteSystem {
    pub alg: Algebra,
    pub max_degree: usize,
    truncated: bool,
    rules: Vec<RewriteRule>,
    index: HashMap<Vec<u8>, usize>,
    lhs_lens: Vec<usize>,
    cache: RwLock<HashMap<Word, NCPoly>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        Self::from_rules(self.alg, self.max_degree, self.truncated, self.rules.clone())
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RewriteSystem({}, {} rules, degree {})", self.alg, self.rules.len(), self.max_degree)
    }
}

struct Completion {
    alg: Algebra,
    max_degree: usize,
    budget: usize,
    rules: Vec<Option<RewriteRule>>,
    index: HashMap<Vec<u8>, usize>,
    pairs: BinaryHeap<Reverse<(usize, usize, usize, usize)>>,
    truncated: bool,
}

impl Completion {
    fn reduce(&self, f: &NCPoly) -> NCPoly {
        let mut todo = f.clone();
        let mut out = NCPoly::zero(self.alg);
        while let Some((w, c)) = todo.terms.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
            todo.terms.remove(&w);
            match self.find(&w) {
                None => out.add_term(w, &c),
                Some((pos, id)) => {
                    let r = self.rules[id].as_ref().unwrap();
                    let pre = Word(w.0[..pos].to_vec());
                    let suf = Word(w.0[pos + r.lhs.len()..].to_vec());
                    for (rw, rc) in &r.rhs.terms {
                        todo.add_term(pre.concat(rw).concat(&suf), &(rc * &c));
                    }
                }
            }
        }
        out
    }

    fn find(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for end in pos + 1..=w.len() {
                if let Some(&id) = self.index.get(&w.0[pos..end]) {
                    return Some((pos, id));
                }
            }
        }
        None
    }

    fn add_poly(&mut self, f: NCPoly) -> Result<(), RewriteError> {
        let mut queue = vec![f];
        while let Some(f) = queue.pop() {
            let g = self.reduce(&f);
            if g.is_zero() {
                continue;
            }
            let m = monic(&g);
            let (lhs, _) = m.leading().unwrap();
            let lhs = lhs.clone();
            let mut rhs = m.clone();
            rhs.terms.remove(&lhs);
            let rhs = rhs.scale(&-QScalar::one());
            // Retire rules whose left side contains the new one.
            for id in 0..self.rules.len() {
                let hit = match &self.rules[id] {
                    Some(r) => contains(&r.lhs, &lhs),
                    None => false,
                };
                if hit {
                    let r = self.rules[id].take().unwrap();
                    self.index.remove(&r.lhs.0);
                    let mut back = NCPoly::word(self.alg, r.lhs.clone());
                    back.add_scaled(&r.rhs, &-QScalar::one());
                    queue.push(back);
                }
            }
            let id = self.rules.len();
            self.index.insert(lhs.0.clone(), id);
            self.rules.push(Some(RewriteRule { lhs, rhs }));
            if self.index.len() > self.budget {
                return Err(RewriteError::Budget(self.budget));
            }
            for other in 0..self.rules.len() {
                if self.rules[other].is_some() {
                    self.push_pairs(id, other);
                    if other != id {
                        self.push_pairs(other, id);
                    }
                }
            }
        }
        Ok(())
    }

    /// Overlaps where a proper suffix of rule `a` is a prefix of rule `b`.
    fn push_pairs(&mut self, a: usize, b: usize) {
        let la = &self.rules[a].as_ref().unwrap().lhs;
        let lb = &self.rules[b].as_ref().unwrap().lhs;
        for k in 1..la.len().min(lb.len()) {
            if la.0[la.len() - k..] == lb.0[..k] {
                let total = la.len() + lb.len() - k;
                if total <= self.max_degree {
                    self.pairs.push(Reverse((total, a, b, k)));
                } else {
                    self.truncated = true;
                }
            }
        }
    }

    fn run(&mut self) -> Result<(), RewriteError> {
        while let Some(Reverse((_, a, b, k))) = self.pairs.pop() {
            let (ra, rb) = match (&self.rules[a], &self.rules[b]) {
                (Some(ra), Some(rb)) => (ra, rb),
                _ => continue,
            };
            let x = Word(ra.lhs.0[..ra.lhs.len() - k].to_vec());
            let z = Word(rb.lhs.0[k..].to_vec());
            let left = ra.rhs.mul(&NCPoly::word(self.alg, z));
            let right = NCPoly::word(self.alg, x).mul(&rb.rhs);
            let mut s = left;
            s.add_scaled(&right, &-QScalar::one());
            self.add_poly(s)?;
        }
        Ok(())
    }
}

fn contains(hay: &Word, needle: &Word) -> bool {
    hay.len() >= needle.len() && hay.0.windows(needle.len()).any(|w| w == needle.0.as_slice())
}

impl RewriteSystem {
    /// Completes the defining relations of `alg` up to the given degree.
    pub fn build(alg: Algebra, max_degree: usize) -> Result<Self, RewriteError> {
        Self::complete(alg, defining_relations(alg), max_degree, 100_000)
    }

    pub fn build_default(alg: Algebra) -> Result<Self, RewriteError> {
        Self::build(alg, default_degree(alg))
    }

    /// Degree-bounded completion of an arbitrary relation set.
    pub fn complete(
        alg: Algebra,
        relations: Vec<NCPoly>,
        max_degree: usize,
        budget: usize,
    ) -> Result<Self, RewriteError> {
        let mut c = Completion {
            alg,
            max_degree,
            budget,
            rules: Vec::new(),
            index: HashMap::new(),
            pairs: BinaryHeap::new(),
            truncated: false,
        };
        let mut rels = relations;
        rels.sort_by(|a, b| a.leading().map(|x| x.0).cmp(&b.leading().map(|x| x.0)));
        for r in rels {
            c.add_poly(r)?;
        }
        c.run()?;
        let mut rules: Vec<RewriteRule> = c.rules.iter().flatten().cloned().collect();
        for r in rules.iter_mut() {
            r.rhs = c.reduce(&r.rhs);
        }
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        Ok(Self::from_rules(alg, max_degree, c.truncated, rules))
    }

    fn from_rules(alg: Algebra, max_degree: usize, truncated: bool, rules: Vec<RewriteRule>) -> Self {
        let index: HashMap<Vec<u8>, usize> =
            rules.iter().enumerate().map(|(i, r)| (r.lhs.0.clone(), i)).collect();
        let lhs_lens: BTreeSet<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        RewriteSystem {
            alg,
            max_degree,
            truncated,
            rules,
            index,
            lhs_lens: lhs_lens.into_iter().collect(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// True when some overlap above `max_degree` was not resolved.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Whether normal forms of polynomials of this degree are guaranteed unique.
    pub fn is_reliable_for(&self, degree: usize) -> bool {
        !self.truncated || degree <= self.max_degree
    }

    /// Describes a possible incompleteness for a polynomial of high degree.
    pub fn warning_for(&self, f: &NCPoly) -> Option<String> {
        let d = f.degree();
        (!self.is_reliable_for(d)).then(|| {
            format!("degree {d} exceeds completion degree {} of {}", self.max_degree, self.alg)
        })
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.match_at_any(w).is_none()
    }

    fn match_at(&self, w: &[u8], pos: usize) -> Option<usize> {
        for &l in &self.lhs_lens {
            if pos + l > w.len() {
                break;
            }
            if let Some(&id) = self.index.get(&w[pos..pos + l]) {
                return Some(id);
            }
        }
        None
    }

    fn match_at_any(&self, w: &Word) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|p| self.match_at(&w.0, p).map(|id| (p, id)))
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> NCPoly {
        if w.len() <= 1 {
            return NCPoly::word(self.alg, w.clone());
        }
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return p.clone();
        }
        let tail = self.nf_word(&Word(w.0[1..].to_vec()));
        let x = w.0[0];
        let mut out = NCPoly::zero(self.alg);
        for (v, c) in &tail.terms {
            let mut xv = Vec::with_capacity(v.len() + 1);
            xv.push(x);
            xv.extend_from_slice(&v.0);
            let xv = Word(xv);
            match self.match_at(&xv.0, 0) {
                None => out.add_term(xv, c),
                Some(id) => {
                    let r = &self.rules[id];
                    let suf = Word(xv.0[r.lhs.len()..].to_vec());
                    for (rw, rc) in &r.rhs.terms {
                        let sub = self.nf_word(&rw.concat(&suf));
                        out.add_scaled(&sub, &(rc * c));
                    }
                }
            }
        }
        self.cache.write().unwrap().insert(w.clone(), out.clone());
        out
    }

    pub fn normal_form(&self, f: &NCPoly) -> NCPoly {
        assert_eq!(f.alg, self.alg, "normal form requested in the wrong algebra");
        let mut out = NCPoly::zero(self.alg);
        for (w, c) in &f.terms {
            out.add_scaled(&self.nf_word(w), c);
        }
        out
    }

    /// Product followed by normal form.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.alg);
        for (w1, c1) in &a.terms {
            for (w2, c2) in &b.terms {
                out.add_scaled(&self.nf_word(&w1.concat(w2)), &(c1 * c2));
            }
        }
        out
    }

    /// Product of several factors, normalising after each step.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NCPoly>) -> NCPoly {
        let mut acc = NCPoly::one(self.alg);
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn equal(&self, a: &NCPoly, b: &NCPoly) -> bool {
        let mut d = a.clone();
        d.add_scaled(b, &-QScalar::one());
        self.normal_form(&d).is_zero()
    }

    /// Normal words of length at most `degree`, in increasing order.
    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..degree {
            let mut next = Vec::new();
            for w in &layer {
                for l in self.alg.letters() {
                    let mut v = w.0.clone();
                    v.push(l);
                    let v = Word(v);
                    // only suffixes ending at the new letter can match
                    let fresh = self
                        .lhs_lens
                        .iter()
                        .all(|&len| len > v.len() || !self.index.contains_key(&v.0[v.len() - len..]));
                    if fresh {
                        next.push(v);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Text dump: header lines followed by one `lhs -> rhs` rule per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("order: {ORDER_NAME}\n"));
        s.push_str(&format!("algebra: {}\n", self.alg));
        s.push_str(&format!("max_degree: {}\n", self.max_degree));
        s.push_str(&format!("truncated: {}\n", self.truncated));
        for r in &self.rules {
            s.push_str(&format!("{} -> {}\n", r.lhs.display(self.alg), r.rhs));
        }
        s
    }

    /// Loads a dump produced by [`RewriteSystem::dump`] without re-running completion.
    pub fn load(text: &str, alg: Algebra) -> Result<Self, RewriteError> {
        let mut max_degree = None;
        let mut truncated = true;
        let mut rules = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(v) = line.strip_prefix("order:") {
                if v.trim() != ORDER_NAME {
                    return Err(RewriteError::OrderMismatch {
                        found: v.trim().to_string(),
                        expected: ORDER_NAME.to_string(),
                    });
                }
            } else if let Some(v) = line.strip_prefix("algebra:") {
                if v.trim() != alg.to_string() {
                    return Err(RewriteError::AlgebraMismatch {
                        found: v.trim().to_string(),
                        expected: alg.to_string(),
                    });
                }
            } else if let Some(v) = line.strip_prefix("max_degree:") {
                max_degree = Some(v.trim().parse().map_err(|_| RewriteError::Parse(line.to_string()))?);
            } else if let Some(v) = line.strip_prefix("truncated:") {
                truncated = v.trim() == "true";
            } else {
                let (l, r) = line.split_once("->").ok_or_else(|| RewriteError::Parse(line.to_string()))?;
                let toks = lex(l).map_err(RewriteError::Parse)?;
                let mut p = Parser::new(&toks);
                let lhs = crate::ncpoly::parse_word(&mut p, alg).map_err(RewriteError::Parse)?;
                let rhs = NCPoly::parse(r.trim(), alg).map_err(RewriteError::Parse)?;
                rules.push(RewriteRule { lhs, rhs });
            }
        }
        let max_degree = max_degree.ok_or_else(|| RewriteError::Parse("missing max_degree".into()))?;
        Ok(Self::from_rules(alg, max_degree, truncated, rules))
    }
}

/// Normal form of every leg of a tensor.
pub fn normal_form_tensor(systems: &[&RewriteSystem], t: &TensorPoly) -> TensorPoly {
    assert_eq!(systems.len(), t.legs.len());
    let mut out = TensorPoly::zero(t.legs.clone());
    for (k, c) in &t.terms {
        let mut acc: Vec<(Vec<Word>, QScalar)> = vec![(Vec::new(), c.clone())];
        for (w, sys) in k.iter().zip(systems) {
            let nf = sys.nf_word(w);
            let mut next = Vec::new();
            for (ks, a) in &acc {
                for (v, b) in &nf.terms {
                    let mut k2 = ks.clone();
                    k2.push(v.clone());
                    next.push((k2, a * b));
                }
            }
            acc = next;
        }
        for (k2, c2) in acc {
            out.add_term(k2, &c2);
        }
    }
    out
}

/// Legwise equality modulo the relations.
pub fn tensor_equal(systems: &[&RewriteSystem], a: &TensorPoly, b: &TensorPoly) -> bool {
    let mut d = a.clone();
    d.add_scaled(b, &-QScalar::one());
    normal_form_tensor(systems, &d).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_has_six_quadratic_relations() {
        assert_eq!(quadratic_relations(Algebra::G(2)).len(), 6);
    }

    #[test]
    fn su2_basic_normal_forms() {
        let g = Algebra::G(2);
        let sys = RewriteSystem::build_default(g).unwrap();
        let q = QScalar::q(2);
        let (a, b, c, d) = (NCPoly::u(g, 1, 1), NCPoly::u(g, 1, 2), NCPoly::u(g, 2, 1), NCPoly::u(g, 2, 2));
        assert_eq!(sys.normal_form(&b.mul(&a)), a.mul(&b).scale(&q.pow(-1)));
        let mut bc = a.mul(&d);
        bc.add_scaled(&NCPoly::one(g), &-QScalar::one());
        assert_eq!(sys.normal_form(&b.mul(&c)), bc.scale(&q.pow(-1)));
        let mut x = d.mul(&a);
        x.add_scaled(&b.mul(&c), &-q.pow(-1));
        assert_eq!(sys.normal_form(&x), NCPoly::one(g));
    }

    #[test]
    fn dump_and_load_round_trip() {
        let g = Algebra::G(2);
        let sys = RewriteSystem::build_default(g).unwrap();
        let back = RewriteSystem::load(&sys.dump(), g).unwrap();
        assert_eq!(back.rules(), sys.rules());
        let bad = sys.dump().replace(ORDER_NAME, "revlex");
        assert!(matches!(RewriteSystem::load(&bad, g), Err(RewriteError::OrderMismatch { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        let g = Algebra::G(2);
        let r = RewriteSystem::complete(g, defining_relations(g), 4, 2);
        assert_eq!(r.unwrap_err(), RewriteError::Budget(2));
    }
}
