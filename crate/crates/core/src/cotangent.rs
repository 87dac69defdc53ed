//! The cotangent space `Lambda^1 = G^+ / I` of the calculus on `C_q[SU_N]`
//! and the cotangent space `V` of its restriction to `C_q[CP^{N-1}]`.
//!
//! The ideal `I` is modelled exactly up to a fixed degree. From that model a
//! right action table of `G` on `Lambda^1` is derived; classes of polynomials
//! of any degree are then computed from the table through the recursion
//! `[(xw)^+] = [x^+] <| w + eps(x) [w^+]`.
//!
//! Basis order of `Lambda^1`: `e+[1..N-1], e0, e-[1..N-1]`, with
//! `e+[i] = [u^{i+1}_1]`, `e0 = [u^1_1 - 1]`, `e-[i] = [u^1_{i+1}]`.
//! `V` drops `e0`.

use crate::linalg::{Echelon, Solver, SparseVec};
use crate::ncpoly::{Algebra, NCPoly, TensorPoly, Word};
use crate::qscalar::QScalar;
use crate::rewrite::{defining_relations, normal_form_tensor, RewriteSystem};
use crate::text::{lex, Parser, Tok};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub type Matrix = Vec<Vec<QScalar>>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CotangentError {
    #[error("quotient dimension {low} at degree {low_degree} differs from {high} at degree {high_degree}; raise the model degree")]
    NotStabilized { low_degree: usize, low: usize, high_degree: usize, high: usize },
    #[error("quotient has dimension {quotient} but {reps} basis representatives were supplied")]
    BasisSize { quotient: usize, reps: usize },
    #[error("basis representatives are linearly dependent modulo the ideal")]
    BasisDependent,
    #[error("element has degree {degree} above the model degree {model}")]
    DegreeTooHigh { degree: usize, model: usize },
    #[error("element is not in the augmentation ideal (counit {0})")]
    NotInAugmentation(String),
    #[error("ideal generator {0} does not lie in the augmentation ideal")]
    GeneratorNotInAugmentation(String),
    #[error("action table is inconsistent with the relation {0}")]
    TableInconsistent(String),
    #[error("class has a non-zero e0 component: {0}")]
    NotInV(String),
    #[error("cannot parse cotangent vector: {0}")]
    Parse(String),
    #[error("N must be at least 2, got {0}")]
    InvalidN(usize),
    #[error("{0} is not proportional to a single basis vector")]
    NotABasisClass(String),
    #[error(transparent)]
    Rewrite(#[from] crate::rewrite::RewriteError),
}

/// Basis labels of `Lambda^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Plus(usize),
    Zero,
    Minus(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plus(i) => write!(f, "e+[{i}]"),
            Label::Zero => write!(f, "e0"),
            Label::Minus(i) => write!(f, "e-[{i}]"),
        }
    }
}

/// Index bookkeeping for `Lambda^1` (dimension `2N-1`) and `V` (dimension `2N-2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Basis {
    pub n: usize,
}

impl Basis {
    pub fn new(n: usize) -> Self {
        Basis { n }
    }

    pub fn dim(&self) -> usize {
        2 * self.n - 1
    }

    pub fn v_dim(&self) -> usize {
        2 * self.n - 2
    }

    pub fn label(&self, k: usize) -> Label {
        let m = self.n - 1;
        if k < m {
            Label::Plus(k + 1)
        } else if k == m {
            Label::Zero
        } else {
            Label::Minus(k - m)
        }
    }

    pub fn index(&self, l: Label) -> usize {
        let m = self.n - 1;
        match l {
            Label::Plus(i) => i - 1,
            Label::Zero => m,
            Label::Minus(i) => m + i,
        }
    }

    pub fn zero_index(&self) -> usize {
        self.n - 1
    }

    /// Labels of `V` in order `e+[1..], e-[1..]`.
    pub fn v_label(&self, k: usize) -> Label {
        let m = self.n - 1;
        if k < m {
            Label::Plus(k + 1)
        } else {
            Label::Minus(k - m + 1)
        }
    }

    pub fn v_index(&self, l: Label) -> usize {
        let m = self.n - 1;
        match l {
            Label::Plus(i) => i - 1,
            Label::Minus(i) => m + i - 1,
            Label::Zero => panic!("e0 is not in V"),
        }
    }

    /// Projection `Lambda^1 -> V`; fails if the `e0` coordinate is non-zero.
    pub fn to_v(&self, x: &[QScalar]) -> Result<Vec<QScalar>, CotangentError> {
        if !x[self.zero_index()].is_zero() {
            return Err(CotangentError::NotInV(format_vector(self, x)));
        }
        Ok((0..self.v_dim()).map(|k| x[self.index(self.v_label(k))].clone()).collect())
    }

    /// Embedding `V -> Lambda^1`.
    pub fn from_v(&self, v: &[QScalar]) -> Vec<QScalar> {
        let mut x = vec![QScalar::zero(); self.dim()];
        for (k, c) in v.iter().enumerate() {
            x[self.index(self.v_label(k))] = c.clone();
        }
        x
    }

    pub fn unit(&self, l: Label) -> Vec<QScalar> {
        let mut x = vec![QScalar::zero(); self.dim()];
        x[self.index(l)] = QScalar::one();
        x
    }
}

/// Text form of a vector of `Lambda^1`, e.g. `(q^3)*e+[1] + e0`.
pub fn format_vector(b: &Basis, x: &[QScalar]) -> String {
    let parts: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| if c.is_one() { b.label(k).to_string() } else { format!("({c})*{}", b.label(k)) })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Text form of a vector of `V`.
pub fn format_v_vector(b: &Basis, v: &[QScalar]) -> String {
    format_vector(b, &b.from_v(v))
}

pub fn parse_vector(b: &Basis, s: &str) -> Result<Vec<QScalar>, CotangentError> {
    let err = |e: String| CotangentError::Parse(e);
    let toks = lex(s).map_err(err)?;
    let mut p = Parser::new(&toks);
    let mut x = vec![QScalar::zero(); b.dim()];
    if toks == [Tok::Num(0u8.into())] {
        return Ok(x);
    }
    loop {
        let c = p.coefficient_prefix(b.n as u32).map_err(err)?;
        if p.next() != Some(Tok::Ident("e".into())) {
            return Err(err(format!("expected a basis symbol in {s:?}")));
        }
        let label = if p.peek() == Some(&Tok::Num(0u8.into())) {
            p.next();
            Label::Zero
        } else {
            let plus = if p.eat_sym('+') {
                true
            } else if p.eat_sym('-') {
                false
            } else {
                return Err(err("expected e+, e- or e0".into()));
            };
            p.expect_sym('[').map_err(err)?;
            let i = p.usize().map_err(err)?;
            p.expect_sym(']').map_err(err)?;
            if i == 0 || i >= b.n {
                return Err(err(format!("index {i} out of range")));
            }
            if plus {
                Label::Plus(i)
            } else {
                Label::Minus(i)
            }
        };
        x[b.index(label)] += &c;
        if !p.eat_sym('+') {
            break;
        }
    }
    if !p.done() {
        return Err(err(format!("trailing input in {s:?}")));
    }
    Ok(x)
}

/// Exact model of `G^+_{<=d} / (I cap G_{<=d})` for a right ideal given by generators.
pub struct QuotientModel {
    pub alg: Algebra,
    pub degree: usize,
    pub quotient_dim: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    ideal: Echelon,
    solver: Solver,
}

impl QuotientModel {
    fn ideal_rows(
        sys: &RewriteSystem,
        generators: &[NCPoly],
        degree: usize,
        index: &HashMap<Word, usize>,
        words: &[Word],
    ) -> Echelon {
        let mut e = Echelon::new();
        for g in generators {
            let dg = g.degree();
            if dg > degree {
                continue;
            }
            let g = sys.normal_form(g);
            for w in words.iter().filter(|w| w.len() + dg <= degree) {
                let f = sys.mul(&g, &NCPoly::word(sys.alg, w.clone()));
                e.insert(&to_vec(index, &f));
            }
        }
        e
    }

    /// Builds the model, checks that the quotient dimension agrees at
    /// degrees `degree - 1` and `degree`, and fixes the given representatives
    /// as the quotient basis.
    pub fn build(
        sys: &RewriteSystem,
        generators: &[NCPoly],
        degree: usize,
        reps: &[NCPoly],
    ) -> Result<Self, CotangentError> {
        for g in generators {
            if !g.counit().is_zero() {
                return Err(CotangentError::GeneratorNotInAugmentation(g.to_string()));
            }
        }
        let words = sys.normal_words(degree);
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let ideal = Self::ideal_rows(sys, generators, degree, &index, &words);
        let quotient_dim = words.len() - 1 - ideal.rank();
        if degree >= 2 {
            let low_words: Vec<Word> = words.iter().filter(|w| w.len() < degree).cloned().collect();
            let low = Self::ideal_rows(sys, generators, degree - 1, &index, &low_words);
            let low_dim = low_words.len() - 1 - low.rank();
            if low_dim != quotient_dim {
                return Err(CotangentError::NotStabilized {
                    low_degree: degree - 1,
                    low: low_dim,
                    high_degree: degree,
                    high: quotient_dim,
                });
            }
        }
        if reps.len() != quotient_dim {
            return Err(CotangentError::BasisSize { quotient: quotient_dim, reps: reps.len() });
        }
        let reduced: Vec<SparseVec> =
            reps.iter().map(|r| ideal.reduce(&to_vec(&index, &sys.normal_form(r)))).collect();
        let solver = Solver::new(words.len(), reduced.iter());
        if !solver.independent() {
            return Err(CotangentError::BasisDependent);
        }
        Ok(QuotientModel { alg: sys.alg, degree, quotient_dim, words, index, ideal, solver })
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.rank()
    }

    pub fn normal_words(&self) -> &[Word] {
        &self.words
    }

    /// Coordinates of the class of `f in G^+` in the representative basis.
    pub fn coset(&self, sys: &RewriteSystem, f: &NCPoly) -> Result<Vec<QScalar>, CotangentError> {
        let eps = f.counit();
        if !eps.is_zero() {
            return Err(CotangentError::NotInAugmentation(eps.to_string()));
        }
        let nf = sys.normal_form(f);
        if nf.degree() > self.degree {
            return Err(CotangentError::DegreeTooHigh { degree: nf.degree(), model: self.degree });
        }
        let v = self.ideal.reduce(&to_vec(&self.index, &nf));
        Ok(self.solver.solve(&v).expect("representatives span the quotient"))
    }

    /// Whether `f` lies in the modelled ideal.
    pub fn in_ideal(&self, sys: &RewriteSystem, f: &NCPoly) -> bool {
        let nf = sys.normal_form(f);
        nf.degree() <= self.degree && self.ideal.contains(&to_vec(&self.index, &nf))
    }
}

fn to_vec(index: &HashMap<Word, usize>, f: &NCPoly) -> SparseVec {
    f.terms
        .iter()
        .map(|(w, c)| (*index.get(w).unwrap_or_else(|| panic!("word {w:?} outside the model")), c.clone()))
        .collect()
}

/// The right `G`-action on a cotangent space together with the classes of
/// the generators, packaged as matrices
/// `Phi(x) = [[rho(x), 0], [[x^+], eps(x)]]` acting on row vectors.
/// `Phi` is multiplicative, and the bottom row of `Phi(w)` is `([w^+], eps(w))`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pub alg: Algebra,
    pub dim: usize,
    /// `[x^+]` for every letter `x`.
    pub base: Vec<Vec<QScalar>>,
    /// `action[b][x]` is `e_b <| x`.
    pub action: Vec<Vec<Vec<QScalar>>>,
    phi: Vec<Matrix>,
    phi_s: Vec<Matrix>,
}

impl ActionTable {
    pub fn new(alg: Algebra, base: Vec<Vec<QScalar>>, action: Vec<Vec<Vec<QScalar>>>) -> Self {
        let dim = action.len();
        let mut phi = Vec::new();
        for l in alg.letters() {
            let mut m = vec![vec![QScalar::zero(); dim + 1]; dim + 1];
            for b in 0..dim {
                for c in 0..dim {
                    m[b][c] = action[b][l as usize][c].clone();
                }
            }
            for c in 0..dim {
                m[dim][c] = base[l as usize][c].clone();
            }
            if crate::ncpoly::word_counit(alg, &Word::letter(l)) {
                m[dim][dim] = QScalar::one();
            }
            phi.push(m);
        }
        let mut t = ActionTable { alg, dim, base, action, phi, phi_s: Vec::new() };
        t.phi_s = alg.letters().map(|l| t.phi_poly(&NCPoly::letter(alg, l).antipode())).collect();
        t
    }

    /// Derives the table from an exact quotient model.
    pub fn derive(sys: &RewriteSystem, model: &QuotientModel, reps: &[NCPoly]) -> Result<Self, CotangentError> {
        let alg = sys.alg;
        let mut base = Vec::new();
        for l in alg.letters() {
            base.push(model.coset(sys, &NCPoly::letter(alg, l).plus_part())?);
        }
        let mut action = Vec::new();
        for rep in reps {
            let mut row = Vec::new();
            for l in alg.letters() {
                row.push(model.coset(sys, &rep.mul(&NCPoly::letter(alg, l)))?);
            }
            action.push(row);
        }
        Ok(Self::new(alg, base, action))
    }

    pub fn phi_letter(&self, l: u8) -> &Matrix {
        &self.phi[l as usize]
    }

    /// `Phi` of an arbitrary polynomial.
    pub fn phi_poly(&self, f: &NCPoly) -> Matrix {
        let d = self.dim + 1;
        let mut acc = vec![vec![QScalar::zero(); d]; d];
        for (w, c) in &f.terms {
            let mut m = identity(d);
            for &l in &w.0 {
                m = matmul(&m, &self.phi[l as usize]);
            }
            for i in 0..d {
                for j in 0..d {
                    if !m[i][j].is_zero() {
                        acc[i][j] += &(&m[i][j] * c);
                    }
                }
            }
        }
        acc
    }

    /// Row vector times `Phi(w)`.
    pub fn apply_word(&self, row: &[QScalar], w: &Word) -> Vec<QScalar> {
        let mut r = row.to_vec();
        for &l in &w.0 {
            r = vecmat(&r, &self.phi[l as usize]);
        }
        r
    }

    /// Row vector times `Phi(S(w))`.
    pub fn apply_antipode_word(&self, row: &[QScalar], w: &Word) -> Vec<QScalar> {
        let mut r = row.to_vec();
        for &l in w.0.iter().rev() {
            r = vecmat(&r, &self.phi_s[l as usize]);
        }
        r
    }

    fn unit_row(&self) -> Vec<QScalar> {
        let mut r = vec![QScalar::zero(); self.dim + 1];
        r[self.dim] = QScalar::one();
        r
    }

    /// `[f^+]` for any polynomial `f`.
    pub fn coset_plus(&self, f: &NCPoly) -> Vec<QScalar> {
        let mut acc = vec![QScalar::zero(); self.dim];
        let start = self.unit_row();
        for (w, c) in &f.terms {
            let r = self.apply_word(&start, w);
            for k in 0..self.dim {
                if !r[k].is_zero() {
                    acc[k] += &(&r[k] * c);
                }
            }
        }
        acc
    }

    /// `[S(f)^+]`.
    pub fn coset_plus_antipode(&self, f: &NCPoly) -> Vec<QScalar> {
        let mut acc = vec![QScalar::zero(); self.dim];
        let start = self.unit_row();
        for (w, c) in &f.terms {
            let r = self.apply_antipode_word(&start, w);
            for k in 0..self.dim {
                if !r[k].is_zero() {
                    acc[k] += &(&r[k] * c);
                }
            }
        }
        acc
    }

    /// `[f]` for `f` in the augmentation ideal.
    pub fn lambda_coset(&self, f: &NCPoly) -> Result<Vec<QScalar>, CotangentError> {
        let eps = f.counit();
        if !eps.is_zero() {
            return Err(CotangentError::NotInAugmentation(eps.to_string()));
        }
        Ok(self.coset_plus(f))
    }

    /// `v <| f`.
    pub fn act(&self, v: &[QScalar], f: &NCPoly) -> Vec<QScalar> {
        let mut row = v.to_vec();
        row.push(QScalar::zero());
        let mut acc = vec![QScalar::zero(); self.dim];
        for (w, c) in &f.terms {
            let r = self.apply_word(&row, w);
            for k in 0..self.dim {
                if !r[k].is_zero() {
                    acc[k] += &(&r[k] * c);
                }
            }
        }
        acc
    }

    /// `v <| S(f)`.
    pub fn act_antipode(&self, v: &[QScalar], f: &NCPoly) -> Vec<QScalar> {
        let mut row = v.to_vec();
        row.push(QScalar::zero());
        let mut acc = vec![QScalar::zero(); self.dim];
        for (w, c) in &f.terms {
            let r = self.apply_antipode_word(&row, w);
            for k in 0..self.dim {
                if !r[k].is_zero() {
                    acc[k] += &(&r[k] * c);
                }
            }
        }
        acc
    }

    /// Relations of the algebra on which `Phi` does not vanish.
    pub fn inconsistent_relations(&self) -> Vec<NCPoly> {
        let alg = self.alg;
        defining_relations(alg)
            .into_iter()
            .filter(|rel| self.phi_poly(rel).iter().flatten().any(|x| !x.is_zero()))
            .collect()
    }

    /// Applies `f` to every entry, e.g. to specialise `q`.
    pub fn map_entries(&self, f: impl Fn(&QScalar) -> QScalar) -> ActionTable {
        let base = self.base.iter().map(|r| r.iter().map(&f).collect()).collect();
        let action = self
            .action
            .iter()
            .map(|rows| rows.iter().map(|r| r.iter().map(&f).collect()).collect())
            .collect();
        ActionTable::new(self.alg, base, action)
    }

    pub fn to_json(&self, b: &Basis) -> serde_json::Value {
        let mut base = serde_json::Map::new();
        for l in self.alg.letters() {
            base.insert(self.alg.letter_name(l), format_vector(b, &self.base[l as usize]).into());
        }
        let mut action = serde_json::Map::new();
        for (k, rows) in self.action.iter().enumerate() {
            let mut m = serde_json::Map::new();
            for l in self.alg.letters() {
                m.insert(self.alg.letter_name(l), format_vector(b, &rows[l as usize]).into());
            }
            action.insert(b.label(k).to_string(), m.into());
        }
        serde_json::json!({"base": base, "action": action})
    }

    pub fn from_json(alg: Algebra, b: &Basis, v: &serde_json::Value) -> Result<Self, CotangentError> {
        let perr = |s: &str| CotangentError::Parse(s.to_string());
        let mut base = Vec::new();
        for l in alg.letters() {
            let s = v["base"][alg.letter_name(l)].as_str().ok_or_else(|| perr("missing base entry"))?;
            base.push(parse_vector(b, s)?);
        }
        let mut action = Vec::new();
        for k in 0..b.dim() {
            let mut rows = Vec::new();
            for l in alg.letters() {
                let s = v["action"][b.label(k).to_string()][alg.letter_name(l)]
                    .as_str()
                    .ok_or_else(|| perr("missing action entry"))?;
                rows.push(parse_vector(b, s)?);
            }
            action.push(rows);
        }
        Ok(ActionTable::new(alg, base, action))
    }
}

pub fn identity(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| if i == j { QScalar::one() } else { QScalar::zero() }).collect()).collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().map(|row| vecmat(row, b)).collect()
}

pub fn vecmat(v: &[QScalar], m: &Matrix) -> Vec<QScalar> {
    let d = m.first().map_or(0, Vec::len);
    let mut out = vec![QScalar::zero(); d];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in m[k].iter().enumerate() {
            if !y.is_zero() {
                out[j] += &(x * y);
            }
        }
    }
    out
}

/// Representatives `u^i_j - delta_ij` of the `N^2`-dimensional calculus given by `ker Q`,
/// in row-major order.
pub fn matrix_reps(g: Algebra) -> Vec<NCPoly> {
    let n = g.size();
    let mut reps = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let f = NCPoly::u(g, i, j);
            reps.push(if i == j { f.plus_part() } else { f });
        }
    }
    reps
}

/// Representatives of the basis `e+, e0, e-` of `Lambda^1`.
pub fn lambda_reps(g: Algebra) -> Vec<NCPoly> {
    let b = Basis::new(g.n());
    (0..b.dim())
        .map(|k| match b.label(k) {
            Label::Plus(i) => NCPoly::u(g, i + 1, 1),
            Label::Zero => NCPoly::u(g, 1, 1).plus_part(),
            Label::Minus(i) => NCPoly::u(g, 1, i + 1),
        })
        .collect()
}

fn dense_to_sparse(v: &[QScalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
}

/// Largest right `G`-submodule contained in the span of `vectors`.
pub fn largest_submodule(table: &ActionTable, vectors: &[Vec<QScalar>]) -> Vec<Vec<QScalar>> {
    let dim = table.dim;
    let alg = table.alg;
    let mut u: Vec<Vec<QScalar>> = vectors.to_vec();
    loop {
        let span = crate::linalg::SubspaceBasis::span(dim, u.iter().map(|v| dense_to_sparse(v)).collect::<Vec<_>>().iter());
        let images: Vec<SparseVec> = u
            .iter()
            .map(|v| {
                let mut big = SparseVec::new();
                for (li, l) in alg.letters().enumerate() {
                    let w = table.act(v, &NCPoly::letter(alg, l));
                    for (k, x) in span.reduce(&dense_to_sparse(&w)) {
                        big.insert(li * dim + k, x);
                    }
                }
                big
            })
            .collect();
        let next: Vec<Vec<QScalar>> = crate::linalg::kernel(dim * alg.num_letters(), &images)
            .iter()
            .map(|c| {
                let mut v = vec![QScalar::zero(); dim];
                for (uk, ck) in u.iter().zip(c) {
                    for k in 0..dim {
                        if !uk[k].is_zero() {
                            v[k] += &(&uk[k] * ck);
                        }
                    }
                }
                v
            })
            .collect();
        let done = next.len() == u.len();
        u = next;
        if done {
            return u;
        }
    }
}

/// The ideal `I_{SU_N}` of the calculus on `C_q[SU_N]` restricting to the
/// calculus on `C_q[CP^{N-1}]`.
///
/// Adjoining `u^i_j - delta_ij` (i,j >= 2) to `ker Q` as right ideal generators
/// collapses the quotient to zero, since e.g. `[u^2_2 - 1] <| u^1_2` is a non-zero
/// multiple of `[u^1_2]` in `G^+/ker Q`. Instead `ker Q` is enlarged by the largest
/// right submodule of `G^+/ker Q` inside the span of the classes of
/// `u^1_1 - 1` and `u^i_j - delta_ij` (i,j >= 2), which has dimension `(N-1)^2`.
///
/// Classes modulo `ker Q` are read off from `Q` itself: `G^+/ker Q` is
/// identified with the span of `Q(u^i_j - delta_ij)`.
pub struct SuIdeal {
    pub alg: Algebra,
    /// `ker Q` on normal words of degree at most 2.
    pub ker_q: Vec<NCPoly>,
    /// Degree-one lifts of the submodule, as polynomials and as coordinates in `matrix_reps`.
    pub levi: Vec<NCPoly>,
    levi_coords: Vec<Vec<QScalar>>,
    /// Right action table of `G^+/ker Q` in the basis `matrix_reps`.
    pub killing_table: ActionTable,
    q_solver: Solver,
    projection: Solver,
}

impl SuIdeal {
    pub fn build(sys: &RewriteSystem, r: &crate::rform::RForm) -> Self {
        let g = sys.alg;
        let n = g.size();
        let reps = matrix_reps(g);
        let q_images: Vec<SparseVec> = reps.iter().map(|f| r.q_vector(f)).collect();
        let q_solver = Solver::new(n * n, q_images.iter());
        assert!(q_solver.independent(), "Q is injective on the degree-one classes");
        let killing = |f: &NCPoly| q_solver.solve(&r.q_vector(f)).expect("Q(G^+) is spanned by degree one");
        let base = g.letters().map(|l| killing(&NCPoly::letter(g, l).plus_part())).collect();
        let action = reps
            .iter()
            .map(|rep| g.letters().map(|l| killing(&rep.mul(&NCPoly::letter(g, l)))).collect())
            .collect();
        let killing_table = ActionTable::new(g, base, action);
        let mut span = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if (i == 1 && j == 1) || (i >= 2 && j >= 2) {
                    let mut v = vec![QScalar::zero(); n * n];
                    v[(i - 1) * n + j - 1] = QScalar::one();
                    span.push(v);
                }
            }
        }
        let levi_coords = largest_submodule(&killing_table, &span);
        let levi = levi_coords
            .iter()
            .map(|v| {
                let mut f = NCPoly::zero(g);
                for (rep, c) in reps.iter().zip(v) {
                    f.add_scaled(rep, c);
                }
                f
            })
            .collect();
        let lreps = lambda_reps(g);
        let lambda_coords: Vec<SparseVec> = lreps.iter().map(|f| dense_to_sparse(&killing(f))).collect();
        let family: Vec<SparseVec> =
            lambda_coords.iter().cloned().chain(levi_coords.iter().map(|v| dense_to_sparse(v))).collect();
        let projection = Solver::new(n * n, family.iter());
        SuIdeal {
            alg: g,
            ker_q: r.ker_q_basis(sys, 2),
            levi,
            levi_coords,
            killing_table,
            q_solver,
            projection,
        }
    }

    pub fn generators(&self) -> Vec<NCPoly> {
        self.ker_q.iter().chain(&self.levi).cloned().collect()
    }

    /// `ker Q` together with `u^i_j - delta_ij`, i,j >= 2, as right ideal generators.
    pub fn literal_generators(&self) -> Vec<NCPoly> {
        let g = self.alg;
        let n = g.size();
        let mut out = self.ker_q.clone();
        for i in 2..=n {
            for j in 2..=n {
                let f = NCPoly::u(g, i, j);
                out.push(if i == j { f.plus_part() } else { f });
            }
        }
        out
    }

    pub fn submodule_dim(&self) -> usize {
        self.levi_coords.len()
    }

    /// Class in `Lambda^1 = G^+/I_{SU_N}` of `f` in the augmentation ideal, via `Q`.
    pub fn coset(&self, r: &crate::rform::RForm, f: &NCPoly) -> Vec<QScalar> {
        let k = self.q_solver.solve(&r.q_vector(f)).expect("Q(G^+) is spanned by degree one");
        self.project(&k)
    }

    /// `G^+/ker Q -> Lambda^1`.
    pub fn project(&self, killing_coords: &[QScalar]) -> Vec<QScalar> {
        let dim = 2 * self.alg.size() - 1;
        let c = self.projection.solve(&dense_to_sparse(killing_coords)).expect("projection is onto");
        c[..dim].to_vec()
    }

    /// The right action table of `Lambda^1` in the basis `e+, e0, e-`.
    pub fn lambda_table(&self, r: &crate::rform::RForm) -> ActionTable {
        let g = self.alg;
        let reps = lambda_reps(g);
        let base = g.letters().map(|l| self.coset(r, &NCPoly::letter(g, l).plus_part())).collect();
        let action = reps
            .iter()
            .map(|rep| g.letters().map(|l| self.coset(r, &rep.mul(&NCPoly::letter(g, l)))).collect())
            .collect();
        ActionTable::new(g, base, action)
    }
}

/// `z_ij = u^i_1 S(u^1_j)`, the generators of `C_q[CP^{N-1}]`.
pub fn z(g: Algebra, i: usize, j: usize) -> NCPoly {
    NCPoly::u(g, i, 1).mul(&NCPoly::u(g, 1, j).antipode())
}

/// The Hopf projection `alpha_N : C_q[SU_N] -> C_q[U_{N-1}]`.
pub fn alpha(g: Algebra, f: &NCPoly) -> NCPoly {
    let n = g.size();
    let h = Algebra::H(g.n());
    let imgs: Vec<NCPoly> = g
        .letters()
        .map(|l| {
            let (i, j) = g.indices(l);
            if i == 1 && j == 1 {
                NCPoly::d(h)
            } else if i == 1 || j == 1 {
                NCPoly::zero(h)
            } else {
                NCPoly::u(h, i - 1, j - 1)
            }
        })
        .collect();
    let _ = n;
    f.substitute(h, &imgs)
}

/// `(id (x) alpha) Delta(f) - f (x) 1`, after normal forms on both legs.
pub fn coinvariance_defect(gsys: &RewriteSystem, hsys: &RewriteSystem, f: &NCPoly) -> TensorPoly {
    let g = gsys.alg;
    let h = hsys.alg;
    let f = gsys.normal_form(f);
    let co = f.coproduct().map_leg(1, h, |w| alpha(g, &NCPoly::word(g, w.clone())));
    let mut d = co;
    d.add_scaled(&TensorPoly::pure(&[&f, &NCPoly::one(h)]), &-QScalar::one());
    normal_form_tensor(&[gsys, hsys], &d)
}

pub fn is_coinvariant(gsys: &RewriteSystem, hsys: &RewriteSystem, f: &NCPoly) -> bool {
    coinvariance_defect(gsys, hsys, f).is_zero()
}

/// Degree bounds for [`Calculus::construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CalculusConfig {
    pub n: usize,
    pub degree_g: usize,
    pub degree_h: usize,
}

impl CalculusConfig {
    pub fn new(n: usize) -> Self {
        CalculusConfig {
            n,
            degree_g: crate::rewrite::default_degree(Algebra::G(n)),
            degree_h: crate::rewrite::default_degree(Algebra::H(n)),
        }
    }
}

/// Everything needed to compute with the calculus on `C_q[CP^{N-1}]`:
/// rewrite systems for `G = C_q[SU_N]` and `H = C_q[U_{N-1}]`, the ideal
/// `I_{SU_N}`, the action table of `Lambda^1`, and lifts of the basis of `V` to `M`.
pub struct Calculus {
    pub n: usize,
    pub g: Algebra,
    pub h: Algebra,
    pub gsys: RewriteSystem,
    pub hsys: RewriteSystem,
    pub r: crate::rform::RForm,
    pub basis: Basis,
    pub ideal: SuIdeal,
    pub table: ActionTable,
    /// `lifts[k]` lies in `M` and has class `e_k` in `V` (basis order of `V`).
    pub lifts: Vec<NCPoly>,
    /// `lifts[k] = s * z_ij` as `(i, j, s)`.
    pub lift_z: Vec<(usize, usize, QScalar)>,
    /// Row vectors `(class, counit)` of `S(lift)*`, used by the `*`-map.
    sstar_rows: Vec<Vec<QScalar>>,
}

impl Calculus {
    pub fn construct(cfg: CalculusConfig) -> Result<Self, CotangentError> {
        let gsys = RewriteSystem::build(Algebra::G(cfg.n.max(2)), cfg.degree_g);
        if cfg.n < 2 {
            return Err(CotangentError::InvalidN(cfg.n));
        }
        let gsys = gsys?;
        let hsys = RewriteSystem::build(Algebra::H(cfg.n), cfg.degree_h)?;
        Self::from_systems(gsys, hsys, None)
    }

    /// Builds from existing rewrite systems, optionally reusing a stored table.
    pub fn from_systems(gsys: RewriteSystem, hsys: RewriteSystem, table: Option<ActionTable>) -> Result<Self, CotangentError> {
        let g = gsys.alg;
        let n = g.n();
        let r = crate::rform::RForm::new(g);
        let ideal = SuIdeal::build(&gsys, &r);
        let table = match table {
            Some(t) => t,
            None => ideal.lambda_table(&r),
        };
        if let Some(rel) = table.inconsistent_relations().first() {
            return Err(CotangentError::TableInconsistent(rel.to_string()));
        }
        let basis = Basis::new(n);
        let mut calc =
            Calculus { n, g, h: hsys.alg, gsys, hsys, r, basis, ideal, table, lifts: Vec::new(), lift_z: Vec::new(), sstar_rows: Vec::new() };
        let mut lifts = Vec::new();
        let mut lift_z = Vec::new();
        for k in 0..basis.v_dim() {
            let (zi, zj) = match basis.v_label(k) {
                Label::Plus(i) => (i + 1, 1),
                Label::Minus(i) => (1, i + 1),
                Label::Zero => unreachable!(),
            };
            let zz = z(g, zi, zj);
            let c = calc.lambda_coset(&zz)?;
            let coeff = &c[basis.index(basis.v_label(k))];
            let mut rest = c.clone();
            rest[basis.index(basis.v_label(k))] = QScalar::zero();
            if coeff.is_zero() || rest.iter().any(|x| !x.is_zero()) {
                return Err(CotangentError::NotABasisClass(zz.to_string()));
            }
            let s = QScalar::one().try_div(coeff).expect("non-zero");
            lifts.push(calc.gsys.normal_form(&zz.scale(&s)));
            lift_z.push((zi, zj, s));
        }
        calc.sstar_rows = lifts.iter().map(|l| calc.row_of(&l.antipode().star())).collect();
        calc.lifts = lifts;
        calc.lift_z = lift_z;
        Ok(calc)
    }

    /// Degree-bounded ideal-driven model of `Lambda^1`, the oracle for the table.
    pub fn quotient_model(&self, degree: usize) -> Result<QuotientModel, CotangentError> {
        QuotientModel::build(&self.gsys, &self.ideal.generators(), degree, &lambda_reps(self.g))
    }

    pub fn z(&self, i: usize, j: usize) -> NCPoly {
        self.gsys.normal_form(&z(self.g, i, j))
    }

    pub fn lambda_coset(&self, f: &NCPoly) -> Result<Vec<QScalar>, CotangentError> {
        self.table.lambda_coset(f)
    }

    /// Class in `V` of `m^+` for `m` in `M`.
    pub fn v_coset(&self, m: &NCPoly) -> Result<Vec<QScalar>, CotangentError> {
        self.basis.to_v(&self.table.coset_plus(m))
    }

    /// The generators `z_ij` (i,j >= 2), `z_i1 z_kl`, `z_1i z_kl` ((k,l) != (1,1)) of `I_{CP^{N-1}}`.
    pub fn cp_ideal_generators(&self) -> Vec<(String, NCPoly)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 2..=n {
            for j in 2..=n {
                out.push((format!("z{i}{j}"), self.z(i, j)));
            }
        }
        for i in 2..=n {
            for k in 1..=n {
                for l in 1..=n {
                    if (k, l) == (1, 1) {
                        continue;
                    }
                    out.push((format!("z{i}1*z{k}{l}"), self.gsys.mul(&self.z(i, 1), &self.z(k, l))));
                    out.push((format!("z1{i}*z{k}{l}"), self.gsys.mul(&self.z(1, i), &self.z(k, l))));
                }
            }
        }
        out
    }

    /// Lift to `M` of a vector of `V`.
    pub fn lift(&self, v: &[QScalar]) -> NCPoly {
        let mut f = NCPoly::zero(self.g);
        for (l, c) in self.lifts.iter().zip(v) {
            f.add_scaled(l, c);
        }
        f
    }

    /// `s(m dn) = m n_(1) (x) [n_(2)^+]`. `m` may be any element of `G`.
    pub fn canonical_framing(&self, m: &NCPoly, n: &NCPoly) -> Result<Framed, CotangentError> {
        let mut acc: HashMap<Word, Vec<QScalar>> = HashMap::new();
        let mut classes: HashMap<Word, Vec<QScalar>> = HashMap::new();
        let dim = self.basis.dim();
        for (w, c) in &self.gsys.normal_form(n).terms {
            for legs in crate::ncpoly::word_coproduct(self.g, w, 2) {
                let cls = classes
                    .entry(legs[1].clone())
                    .or_insert_with(|| self.table.coset_plus(&NCPoly::word(self.g, legs[1].clone())));
                if cls.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let e = acc.entry(legs[0].clone()).or_insert_with(|| vec![QScalar::zero(); dim]);
                for k in 0..dim {
                    if !cls[k].is_zero() {
                        e[k] += &(&cls[k] * c);
                    }
                }
            }
        }
        self.assemble(m, acc)
    }

    /// `sum_w m w (x) vec_w`, normalised, with the `e0` check.
    fn assemble(&self, m: &NCPoly, acc: HashMap<Word, Vec<QScalar>>) -> Result<Framed, CotangentError> {
        let mut lam: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
        let dim = self.basis.dim();
        let mut keys: Vec<&Word> = acc.keys().collect();
        keys.sort();
        for w in keys {
            let v = &acc[w];
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let g = self.gsys.mul(m, &NCPoly::word(self.g, w.clone()));
            for (gw, gc) in &g.terms {
                let e = lam.entry(gw.clone()).or_insert_with(|| vec![QScalar::zero(); dim]);
                for k in 0..dim {
                    if !v[k].is_zero() {
                        e[k] += &(&v[k] * gc);
                    }
                }
            }
        }
        let mut out = Framed::default();
        for (w, v) in lam {
            let vv = self.basis.to_v(&v)?;
            for (k, c) in vv.into_iter().enumerate() {
                out.add(w.clone(), vec![k], &c);
            }
        }
        Ok(out)
    }

    /// `d m` framed; `d m = del0(m) + delbar0(m)`.
    pub fn exterior_d0(&self, m: &NCPoly) -> Result<Framed, CotangentError> {
        self.canonical_framing(&NCPoly::one(self.g), m)
    }

    /// Projection onto `G (x) V^(1,0)`, `V^(1,0) = span{e+}`.
    pub fn holomorphic_part(&self, x: &Framed) -> Framed {
        let b = self.basis;
        x.filter(|t| t.iter().all(|&k| matches!(b.v_label(k), Label::Plus(_))))
    }

    /// Projection onto `G (x) V^(0,1)`, `V^(0,1) = span{e-}`.
    pub fn antiholomorphic_part(&self, x: &Framed) -> Framed {
        let b = self.basis;
        x.filter(|t| t.iter().all(|&k| matches!(b.v_label(k), Label::Minus(_))))
    }

    pub fn del0(&self, m: &NCPoly) -> Result<Framed, CotangentError> {
        Ok(self.holomorphic_part(&self.exterior_d0(m)?))
    }

    pub fn delbar0(&self, m: &NCPoly) -> Result<Framed, CotangentError> {
        Ok(self.antiholomorphic_part(&self.exterior_d0(m)?))
    }

    /// `s^{-1}(sum f (x) v) = sum f S(v_(1)) d v_(2)` as `(f S(v_(1)), v_(2))` pairs,
    /// where `v` is the lift of the `V`-leg.
    pub fn framing_inverse(&self, x: &Framed) -> Vec<(NCPoly, NCPoly)> {
        let mut by_word: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
        for ((w, t), c) in &x.terms {
            let e = by_word.entry(w.clone()).or_insert_with(|| vec![QScalar::zero(); self.basis.v_dim()]);
            e[t[0]] += c;
        }
        let mut pairs = Vec::new();
        for (w, v) in by_word {
            let lift = self.lift(&v);
            let f = NCPoly::word(self.g, w);
            for (lw, lc) in &lift.terms {
                for legs in crate::ncpoly::word_coproduct(self.g, lw, 2) {
                    let left = f.mul(&NCPoly::word(self.g, legs[0].clone()).antipode()).scale(lc);
                    pairs.push((self.gsys.normal_form(&left), NCPoly::word(self.g, legs[1].clone())));
                }
            }
        }
        pairs
    }

    /// Canonical framing of a pair list.
    pub fn frame_pairs(&self, pairs: &[(NCPoly, NCPoly)]) -> Result<Framed, CotangentError> {
        // linear in m: group by n first
        let mut grouped: BTreeMap<String, (NCPoly, NCPoly)> = BTreeMap::new();
        for (m, n) in pairs {
            let entry = grouped.entry(format!("{n:?}")).or_insert_with(|| (n.clone(), NCPoly::zero(self.g)));
            entry.1.add_scaled(m, &QScalar::one());
        }
        let mut out = Framed::default();
        for (_, (n, m)) in grouped {
            if m.is_zero() {
                continue;
            }
            out.add_scaled(&self.canonical_framing(&self.gsys.normal_form(&m), &n)?, &QScalar::one());
        }
        Ok(out)
    }

    /// Right coaction `[m] -> [m_(2)^+] (x) S(alpha(m_(1)))` on `V`, returned as the
    /// `H`-coefficients of the basis vectors: `Delta_R(v) = sum_k e_k (x) out[k]`.
    pub fn v_coaction(&self, v: &[QScalar]) -> Result<Vec<NCPoly>, CotangentError> {
        let dim = self.basis.dim();
        let m = self.lift(v);
        let mut acc: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
        for (w, c) in &m.terms {
            for legs in crate::ncpoly::word_coproduct(self.g, w, 2) {
                let cls = self.table.coset_plus(&NCPoly::word(self.g, legs[1].clone()));
                if cls.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let e = acc.entry(legs[0].clone()).or_insert_with(|| vec![QScalar::zero(); dim]);
                for k in 0..dim {
                    if !cls[k].is_zero() {
                        e[k] += &(&cls[k] * c);
                    }
                }
            }
        }
        let mut out = vec![NCPoly::zero(self.h); dim];
        for (w, cls) in acc {
            let hpart = alpha(self.g, &NCPoly::word(self.g, w));
            if hpart.is_zero() {
                continue;
            }
            let s = hpart.antipode();
            for k in 0..dim {
                if !cls[k].is_zero() {
                    out[k].add_scaled(&s, &cls[k]);
                }
            }
        }
        let out: Vec<NCPoly> = out.iter().map(|p| self.hsys.normal_form(p)).collect();
        if !out[self.basis.zero_index()].is_zero() {
            return Err(CotangentError::NotInV(out[self.basis.zero_index()].to_string()));
        }
        Ok((0..self.basis.v_dim()).map(|k| out[self.basis.index(self.basis.v_label(k))].clone()).collect())
    }

    /// Coaction on `V^(x)k`: `v (x) w -> v_(0) (x) w_(0) (x) w_(1) v_(1)`, returned as a map
    /// from basis tuples to `H`-coefficients.
    pub fn tensor_coaction(&self, tuple: &[usize]) -> Result<BTreeMap<Vec<usize>, NCPoly>, CotangentError> {
        let mut cur: BTreeMap<Vec<usize>, NCPoly> = BTreeMap::new();
        cur.insert(Vec::new(), NCPoly::one(self.h));
        for &k in tuple {
            let co = self.v_coaction(&self.basis_v_unit(k))?;
            let mut next: BTreeMap<Vec<usize>, NCPoly> = BTreeMap::new();
            for (t, h) in &cur {
                for (a, ha) in co.iter().enumerate() {
                    if ha.is_zero() {
                        continue;
                    }
                    let mut t2 = t.clone();
                    t2.push(a);
                    let p = self.hsys.mul(ha, h);
                    if !p.is_zero() {
                        next.insert(t2, p);
                    }
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn basis_v_unit(&self, k: usize) -> Vec<QScalar> {
        let mut v = vec![QScalar::zero(); self.basis.v_dim()];
        v[k] = QScalar::one();
        v
    }

    /// Right coaction of `H` on a framed form: `g (x) v -> g_(1) (x) v_(0) (x) alpha(g_(2)) v_(1)`.
    /// Framed forms are exactly the coinvariants.
    pub fn framed_coaction_defect(&self, x: &Framed) -> Result<Vec<(Word, Vec<usize>, NCPoly)>, CotangentError> {
        let mut acc: BTreeMap<(Word, Vec<usize>), NCPoly> = BTreeMap::new();
        let mut coacts: HashMap<Vec<usize>, BTreeMap<Vec<usize>, NCPoly>> = HashMap::new();
        for ((w, t), c) in &x.terms {
            if !coacts.contains_key(t) {
                coacts.insert(t.clone(), self.tensor_coaction(t)?);
            }
            let co = &coacts[t];
            for legs in crate::ncpoly::word_coproduct(self.g, w, 2) {
                let a = alpha(self.g, &NCPoly::word(self.g, legs[1].clone()));
                if a.is_zero() {
                    continue;
                }
                let g1 = self.gsys.normal_form(&NCPoly::word(self.g, legs[0].clone()));
                for (t2, h) in co {
                    let p = self.hsys.mul(&a, h).scale(c);
                    for (gw, gc) in &g1.terms {
                        let e = acc.entry((gw.clone(), t2.clone())).or_insert_with(|| NCPoly::zero(self.h));
                        e.add_scaled(&p, gc);
                    }
                }
            }
        }
        for ((w, t), c) in &x.terms {
            let e = acc.entry((w.clone(), t.clone())).or_insert_with(|| NCPoly::zero(self.h));
            e.add_scaled(&NCPoly::one(self.h), &-c.clone());
        }
        Ok(acc
            .into_iter()
            .map(|((w, t), p)| (w, t, self.hsys.normal_form(&p)))
            .filter(|(_, _, p)| !p.is_zero())
            .collect())
    }

    /// `(sum g (x) v) m = sum g m_(1) (x) (v <| m_(2))`.
    pub fn right_act(&self, x: &Framed, m: &NCPoly) -> Result<Framed, CotangentError> {
        let m = self.gsys.normal_form(m);
        let mut lam: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
        let dim = self.basis.dim();
        for ((w, t), c) in &x.terms {
            let v = self.basis.from_v(&self.basis_v_unit(t[0]));
            for (mw, mc) in &m.terms {
                for legs in crate::ncpoly::word_coproduct(self.g, mw, 2) {
                    let mut row = v.clone();
                    row.push(QScalar::zero());
                    let acted = self.table.apply_word(&row, &legs[1]);
                    if acted[..dim].iter().all(|a| a.is_zero()) {
                        continue;
                    }
                    let g = self.gsys.normal_form(&NCPoly::word(self.g, w.concat(&legs[0])));
                    let coef = c * mc;
                    for (gw, gc) in &g.terms {
                        let e = lam.entry(gw.clone()).or_insert_with(|| vec![QScalar::zero(); dim]);
                        for k in 0..dim {
                            if !acted[k].is_zero() {
                                e[k] += &(&acted[k] * &(gc * &coef));
                            }
                        }
                    }
                }
            }
        }
        let mut out = Framed::default();
        for (w, v) in lam {
            for (k, c) in self.basis.to_v(&v)?.into_iter().enumerate() {
                out.add(w.clone(), vec![k], &c);
            }
        }
        Ok(out)
    }

    /// `m (sum g (x) v) = sum m g (x) v`.
    pub fn left_mul(&self, m: &NCPoly, x: &Framed) -> Framed {
        let mut out = Framed::default();
        for ((w, t), c) in &x.terms {
            let g = self.gsys.mul(m, &NCPoly::word(self.g, w.clone()));
            for (gw, gc) in &g.terms {
                out.add(gw.clone(), t.clone(), &(gc * c));
            }
        }
        out
    }

    /// Bottom row `([f^+], eps(f))` of the representation matrix of `f`.
    pub fn row_of(&self, f: &NCPoly) -> Vec<QScalar> {
        let dim = self.basis.dim();
        let mut unit = vec![QScalar::zero(); dim + 1];
        unit[dim] = QScalar::one();
        let mut row = vec![QScalar::zero(); dim + 1];
        for (w, c) in &f.terms {
            let r = self.table.apply_word(&unit, w);
            for k in 0..=dim {
                if !r[k].is_zero() {
                    row[k] += &(&r[k] * c);
                }
            }
        }
        row
    }

    /// Class in `Lambda^1` of `(a b)^+` via the table, without normal forms.
    pub fn coset_product(&self, a: &NCPoly, b: &NCPoly) -> Vec<QScalar> {
        self.row_act(&self.row_of(a), b)
    }

    fn row_act(&self, row: &[QScalar], b: &NCPoly) -> Vec<QScalar> {
        let dim = self.basis.dim();
        let mut out = vec![QScalar::zero(); dim];
        for (w, c) in &b.terms {
            let r = self.table.apply_word(row, w);
            for k in 0..dim {
                if !r[k].is_zero() {
                    out[k] += &(&r[k] * c);
                }
            }
        }
        out
    }

    /// The `*`-map on framed one-forms, `g (x) [v] -> -g_(1)* (x) [S(v)* g_(2)*]`,
    /// from `(S(v_(1)) dv_(2))* = -S(S(v)*_(1)) d S(v)*_(2)`.
    pub fn star_framed(&self, x: &Framed) -> Result<Framed, CotangentError> {
        let dim = self.basis.dim();
        let mut lam: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
        let mut stars: HashMap<Word, NCPoly> = HashMap::new();
        let star_of = |w: &Word, cache: &mut HashMap<Word, NCPoly>| -> NCPoly {
            cache.entry(w.clone()).or_insert_with(|| self.gsys.normal_form(&NCPoly::word(self.g, w.clone()).star())).clone()
        };
        for ((w, t), c) in &x.terms {
            let row = &self.sstar_rows[t[0]];
            for legs in crate::ncpoly::word_coproduct(self.g, w, 2) {
                let cls = self.row_act(row, &NCPoly::word(self.g, legs[1].clone()).star());
                if cls.iter().all(|a| a.is_zero()) {
                    continue;
                }
                let g1s = star_of(&legs[0], &mut stars);
                for (gw, gc) in &g1s.terms {
                    let e = lam.entry(gw.clone()).or_insert_with(|| vec![QScalar::zero(); dim]);
                    let coef = -(gc * &c.conj());
                    for k in 0..dim {
                        if !cls[k].is_zero() {
                            e[k] += &(&cls[k] * &coef);
                        }
                    }
                }
            }
        }
        let mut out = Framed::default();
        for (w, v) in lam {
            for (k, c) in self.basis.to_v(&v)?.into_iter().enumerate() {
                out.add(w.clone(), vec![k], &c);
            }
        }
        Ok(out)
    }
}

/// An element of `G (x) W^(x)k` with the `G`-leg in normal form. Tuples index a
/// basis of `W` (for one-forms, the basis of `V`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Framed {
    pub terms: BTreeMap<(Word, Vec<usize>), QScalar>,
}

impl Framed {
    pub fn add(&mut self, w: Word, t: Vec<usize>, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, t);
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Framed, c: &QScalar) {
        for ((w, t), x) in &other.terms {
            self.add(w.clone(), t.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QScalar) -> Framed {
        let mut out = Framed::default();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn filter(&self, keep: impl Fn(&[usize]) -> bool) -> Framed {
        Framed { terms: self.terms.iter().filter(|((_, t), _)| keep(t)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    pub fn display(&self, alg: Algebra, label: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((w, t), c)| {
                let legs: Vec<String> = t.iter().map(|&k| label(k)).collect();
                format!("({c})*{} (x) {}", w.display(alg), legs.join("(x)"))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_text_round_trip() {
        let b = Basis::new(3);
        let mut x = vec![QScalar::zero(); 5];
        x[0] = QScalar::q_pow(3, 3);
        x[2] = -QScalar::one();
        x[4] = QScalar::nu(3);
        let s = format_vector(&b, &x);
        assert_eq!(parse_vector(&b, &s).unwrap(), x);
    }
}
