//! The coquasitriangular form `r` of `C_q[SU_N]`, the quantum Killing map
//! `Q` built from it, and the kernel of `Q` on low-degree normal words.
//!
//! On generators `r(u^i_j (x) u^k_l) = q^(-1/N) R^{ki}_{jl}`. Longer words use
//! `r(fg (x) h) = r(f (x) h_1) r(g (x) h_2)` and
//! `r(f (x) gh) = r(f_1 (x) h) r(f_2 (x) g)`.

use crate::linalg::{kernel, SparseVec};
use crate::ncpoly::{word_coproduct, word_counit, Algebra, NCPoly, Word};
use crate::qscalar::QScalar;
use crate::rewrite::{r_matrix_entry, RewriteSystem};
use std::collections::HashMap;
use std::sync::RwLock;

/// Memoising evaluator of `r` on pairs of words. Safe to share across threads.
pub struct RForm {
    pub alg: Algebra,
    cache: RwLock<HashMap<(Word, Word), QScalar>>,
}

impl RForm {
    pub fn new(alg: Algebra) -> Self {
        assert!(matches!(alg, Algebra::G(_)), "r is defined on C_q[SU_N]");
        RForm { alg, cache: RwLock::new(HashMap::new()) }
    }

    fn generator_value(&self, x: u8, y: u8) -> QScalar {
        let (i, j) = self.alg.indices(x);
        let (k, l) = self.alg.indices(y);
        let root = self.alg.root();
        let r = r_matrix_entry(k, i, j, l, root);
        if r.is_zero() {
            r
        } else {
            r * QScalar::t_pow(-1, root)
        }
    }

    /// `r(x (x) y)` for words.
    pub fn words(&self, x: &Word, y: &Word) -> QScalar {
        if x.is_empty() {
            return if word_counit(self.alg, y) { QScalar::one() } else { QScalar::zero() };
        }
        if y.is_empty() {
            return if word_counit(self.alg, x) { QScalar::one() } else { QScalar::zero() };
        }
        if x.len() == 1 && y.len() == 1 {
            return self.generator_value(x.0[0], y.0[0]);
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc = QScalar::zero();
        if x.len() >= 2 {
            let head = Word::letter(x.0[0]);
            let rest = Word(x.0[1..].to_vec());
            for legs in word_coproduct(self.alg, y, 2) {
                let a = self.words(&head, &legs[0]);
                if a.is_zero() {
                    continue;
                }
                let b = self.words(&rest, &legs[1]);
                acc += &(a * b);
            }
        } else {
            let g = Word::letter(y.0[0]);
            let h = Word(y.0[1..].to_vec());
            for legs in word_coproduct(self.alg, x, 2) {
                let a = self.words(&legs[0], &h);
                if a.is_zero() {
                    continue;
                }
                let b = self.words(&legs[1], &g);
                acc += &(a * b);
            }
        }
        self.cache.write().unwrap().insert(key, acc.clone());
        acc
    }

    /// Bilinear extension to polynomials.
    pub fn eval(&self, f: &NCPoly, g: &NCPoly) -> QScalar {
        let mut acc = QScalar::zero();
        for (w1, c1) in &f.terms {
            for (w2, c2) in &g.terms {
                let v = self.words(w1, w2);
                if !v.is_zero() {
                    acc += &(v * c1 * c2);
                }
            }
        }
        acc
    }

    /// The `N x N` matrix `Q_{kl}(f) = sum_a r(u^k_a (x) f_1) r(f_2 (x) u^a_l)`.
    pub fn q_matrix(&self, f: &NCPoly) -> Vec<Vec<QScalar>> {
        let n = self.alg.size();
        let mut m = vec![vec![QScalar::zero(); n]; n];
        for (w, c) in &f.terms {
            for legs in word_coproduct(self.alg, w, 2) {
                for k in 1..=n {
                    for a in 1..=n {
                        let left = self.words(&Word::letter(self.alg.u(k, a)), &legs[0]);
                        if left.is_zero() {
                            continue;
                        }
                        for l in 1..=n {
                            let right = self.words(&legs[1], &Word::letter(self.alg.u(a, l)));
                            if !right.is_zero() {
                                m[k - 1][l - 1] += &(&left * &right * c);
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// `Q(f)` flattened row-major into a sparse vector of length `N^2`.
    pub fn q_vector(&self, f: &NCPoly) -> SparseVec {
        let n = self.alg.size();
        let mut v = SparseVec::new();
        for (k, row) in self.q_matrix(f).into_iter().enumerate() {
            for (l, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    v.insert(k * n + l, x);
                }
            }
        }
        v
    }

    /// Basis of `ker Q` inside the span of `w - eps(w)` over non-empty normal
    /// words of length at most `max_degree`.
    pub fn ker_q_basis(&self, sys: &RewriteSystem, max_degree: usize) -> Vec<NCPoly> {
        let n = self.alg.size();
        let words: Vec<Word> = sys.normal_words(max_degree).into_iter().filter(|w| !w.is_empty()).collect();
        let plus: Vec<NCPoly> = words.iter().map(|w| NCPoly::word(self.alg, w.clone()).plus_part()).collect();
        let images: Vec<SparseVec> = plus.iter().map(|f| self.q_vector(f)).collect();
        kernel(n * n, &images)
            .into_iter()
            .map(|c| {
                let mut f = NCPoly::zero(self.alg);
                for (p, x) in plus.iter().zip(&c) {
                    f.add_scaled(p, x);
                }
                f
            })
            .collect()
    }
}

/// The matrix of `r` on generators as an operator on `V (x) V`:
/// entry `[(i,k)][(j,l)] = R^{ki}_{jl}`, i.e. `e_j (x) e_l -> sum r(u^i_j (x) u^k_l) e_i (x) e_k`
/// up to the overall factor `q^(-1/N)`.
pub fn r_operator(n: usize) -> Vec<Vec<QScalar>> {
    let root = n as u32;
    let mut m = vec![vec![QScalar::zero(); n * n]; n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    m[i * n + k][j * n + l] = r_matrix_entry(k + 1, i + 1, j + 1, l + 1, root);
                }
            }
        }
    }
    m
}

fn matmul(a: &[Vec<QScalar>], b: &[Vec<QScalar>]) -> Vec<Vec<QScalar>> {
    let n = a.len();
    let mut c = vec![vec![QScalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    c
}

/// Embeds the R-matrix on the tensor factors `(s, t)` of `V^(x)3`.
fn r_on_legs(n: usize, s: usize, t: usize) -> Vec<Vec<QScalar>> {
    let r = r_operator(n);
    let dim = n * n * n;
    let mut m = vec![vec![QScalar::zero(); dim]; dim];
    let split = |x: usize| [x / (n * n), (x / n) % n, x % n];
    for row in 0..dim {
        for col in 0..dim {
            let (a, b) = (split(row), split(col));
            let other = 3 - s - t;
            if a[other] != b[other] {
                continue;
            }
            let v = &r[a[s] * n + a[t]][b[s] * n + b[t]];
            if !v.is_zero() {
                m[row][col] = v.clone();
            }
        }
    }
    m
}

/// `R12 R13 R23 = R23 R13 R12` on `V^(x)3`.
pub fn check_qybe(n: usize) -> bool {
    let r12 = r_on_legs(n, 0, 1);
    let r13 = r_on_legs(n, 0, 2);
    let r23 = r_on_legs(n, 1, 2);
    matmul(&matmul(&r12, &r13), &r23) == matmul(&matmul(&r23, &r13), &r12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_of_one_is_identity() {
        for n in [2, 3] {
            let g = Algebra::G(n);
            let r = RForm::new(g);
            let m = r.q_matrix(&NCPoly::one(g));
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(*x, if i == j { QScalar::one() } else { QScalar::zero() });
                }
            }
        }
    }

    #[test]
    fn qybe_holds() {
        assert!(check_qybe(2));
        assert!(check_qybe(3));
    }
}
