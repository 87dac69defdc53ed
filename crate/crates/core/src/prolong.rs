//! Higher forms of the maximal prolongation over `C_q[CP^{N-1}]`.
//!
//! Everything lives in tensor powers of `V` (basis `e+[1..N-1], e-[1..N-1]`).
//! A tuple `(t_1, .., t_k)` of `V`-indices is flattened to
//! `sum t_i d^(k-i)`, `d = dim V`. `I^2` comes from the framing formula
//! `span{[S(z_(1))] (x) [z_(2)^+] : z in Gen(I_M)}`, `I^k` from all placements
//! of `I^2`, and `V^k = V^(x)k / I^k`.

use crate::cotangent::{ActionTable, Basis, Calculus, CotangentError, Framed, Label, QuotientModel};
use crate::linalg::{Solver, SparseVec, SubspaceBasis};
use crate::ncpoly::{word_coproduct, Algebra, NCPoly, Word};
use crate::qscalar::{QScalar, Rat};
use crate::rewrite::RewriteSystem;
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProlongError {
    #[error(transparent)]
    Cotangent(#[from] CotangentError),
    #[error("relation tensor of {0} has a component along e0")]
    NotInV(String),
    #[error("chosen wedge basis is not a complement of I^{0}")]
    NotComplement(usize),
    #[error("coefficient {0} has a pole at the specialisation point")]
    Pole(String),
}

pub fn tuple_index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn index_tuple(mut idx: usize, k: usize, d: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    t
}

/// `(p, q)`: the number of `e+` and `e-` factors of a `V`-tuple.
pub fn bidegree(basis: &Basis, t: &[usize]) -> (usize, usize) {
    let p = t.iter().filter(|&&k| matches!(basis.v_label(k), Label::Plus(_))).count();
    (p, t.len() - p)
}

/// Text form of a tensor over `V^(x)k`, e.g. `e+[1](x)e-[1] + (q^-2)*e-[1](x)e+[1]`.
pub fn format_tensor(basis: &Basis, k: usize, v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let d = basis.v_dim();
    v.iter()
        .map(|(&idx, c)| {
            let legs: Vec<String> = index_tuple(idx, k, d).iter().map(|&x| basis.v_label(x).to_string()).collect();
            if c.is_one() {
                legs.join("(x)")
            } else {
                format!("({c})*{}", legs.join("(x)"))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `sum [S(f_(1))^+] (x) [f_(2)^+]` in `Lambda^1 (x) Lambda^1`, flattened row-major.
/// Well defined on `G` because both factors are computed from the table.
pub fn relation_tensor(table: &ActionTable, f: &NCPoly) -> Vec<QScalar> {
    let dim = table.dim;
    let mut unit = vec![QScalar::zero(); dim + 1];
    unit[dim] = QScalar::one();
    let mut out = vec![QScalar::zero(); dim * dim];
    let mut right_cache: HashMap<Word, Vec<QScalar>> = HashMap::new();
    let mut left_cache: HashMap<Word, Vec<QScalar>> = HashMap::new();
    for (w, c) in &f.terms {
        for legs in word_coproduct(table.alg, w, 2) {
            let left = left_cache.entry(legs[0].clone()).or_insert_with(|| table.apply_antipode_word(&unit, &legs[0]));
            if left[..dim].iter().all(|x| x.is_zero()) {
                continue;
            }
            let right = right_cache.entry(legs[1].clone()).or_insert_with(|| table.apply_word(&unit, &legs[1]));
            for a in 0..dim {
                if left[a].is_zero() {
                    continue;
                }
                let la = &left[a] * c;
                for b in 0..dim {
                    if !right[b].is_zero() {
                        out[a * dim + b] += &(&la * &right[b]);
                    }
                }
            }
        }
    }
    out
}

/// Restricts a tensor over `Lambda^1 (x) Lambda^1` to `V (x) V`; fails on any `e0` component.
pub fn restrict_to_v2(basis: &Basis, x: &[QScalar], what: &str) -> Result<SparseVec, ProlongError> {
    let dim = basis.dim();
    let d = basis.v_dim();
    let z = basis.zero_index();
    let mut out = SparseVec::new();
    for a in 0..dim {
        for b in 0..dim {
            let c = &x[a * dim + b];
            if c.is_zero() {
                continue;
            }
            if a == z || b == z {
                return Err(ProlongError::NotInV(what.to_string()));
            }
            let (va, vb) = (basis.v_index(basis.label(a)), basis.v_index(basis.label(b)));
            out.insert(va * d + vb, c.clone());
        }
    }
    Ok(out)
}

/// Relation tensors of the given generators in `V (x) V`, one per generator.
pub fn generator_images(calc: &Calculus, gens: &[(String, NCPoly)]) -> Result<Vec<(String, SparseVec)>, ProlongError> {
    use rayon::prelude::*;
    gens.par_iter()
        .map(|(name, f)| {
            let x = relation_tensor(&calc.table, f);
            Ok((name.clone(), restrict_to_v2(&calc.basis, &x, name)?))
        })
        .collect()
}

/// `I^2` from a generating set of `I_{CP^{N-1}}`.
pub fn i2_from_generators(calc: &Calculus, gens: &[(String, NCPoly)]) -> Result<SubspaceBasis, ProlongError> {
    let imgs = generator_images(calc, gens)?;
    let d = calc.basis.v_dim();
    Ok(SubspaceBasis::span(d * d, imgs.iter().map(|(_, v)| v)))
}

fn add_entry(v: &mut SparseVec, idx: usize, c: QScalar) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(idx).or_insert_with(QScalar::zero);
    *e += &c;
    if e.is_zero() {
        v.remove(&idx);
    }
}

/// The explicit spanning set of `I^2` as printed, with names.
pub fn i2_reference_vectors(n: usize) -> Vec<(String, SparseVec)> {
    let b = Basis::new(n);
    let d = b.v_dim();
    let m = n - 1;
    let root = n as u32;
    let q = |k: i32| QScalar::q_pow(k, root);
    let p = |i: usize| b.v_index(Label::Plus(i));
    let mi = |i: usize| b.v_index(Label::Minus(i));
    let ix = |x: usize, y: usize| x * d + y;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i != j {
                let mut v = SparseVec::new();
                add_entry(&mut v, ix(mi(i), p(j)), QScalar::one());
                add_entry(&mut v, ix(p(i), mi(j)), q(1));
                out.push((format!("e-[{i}](x)e+[{j}] + q*e+[{i}](x)e-[{j}]"), v));
            }
        }
    }
    for i in 1..=m {
        let mut v = SparseVec::new();
        add_entry(&mut v, ix(p(i), mi(i)), QScalar::one());
        add_entry(&mut v, ix(mi(i), p(i)), q(-2));
        for a in i + 1..=m {
            add_entry(&mut v, ix(mi(a), p(a)), -(q(2 * i as i32 - 1) * QScalar::nu(root) * q(-2 * a as i32)));
        }
        out.push((format!("diagonal relation {i}"), v));
    }
    for i in 1..=m {
        for h in 1..i {
            let mut v = SparseVec::new();
            add_entry(&mut v, ix(mi(i), mi(h)), QScalar::one());
            add_entry(&mut v, ix(mi(h), mi(i)), q(1));
            out.push((format!("e-[{i}](x)e-[{h}] + q*e-[{h}](x)e-[{i}]"), v));
            let mut v = SparseVec::new();
            add_entry(&mut v, ix(p(i), p(h)), QScalar::one());
            add_entry(&mut v, ix(p(h), p(i)), q(-1));
            out.push((format!("e+[{i}](x)e+[{h}] + q^-1*e+[{h}](x)e+[{i}]"), v));
        }
    }
    for i in 1..=m {
        out.push((format!("e+[{i}](x)e+[{i}]"), SparseVec::from([(ix(p(i), p(i)), QScalar::one())])));
        out.push((format!("e-[{i}](x)e-[{i}]"), SparseVec::from([(ix(mi(i), mi(i)), QScalar::one())])));
    }
    out
}

pub fn i2_reference(n: usize) -> SubspaceBasis {
    let d = 2 * (n - 1);
    SubspaceBasis::span(d * d, i2_reference_vectors(n).iter().map(|(_, v)| v))
}

/// The printed spanning set with the mixed family read as
/// `e-[j](x)e+[i] + q e+[i](x)e-[j]` and the `e+e+`, `e-e-` families read with `h > i`.
/// This reading is an `H`-subcomodule; the printed one is not for `N = 3`.
pub fn i2_reference_corrected_vectors(n: usize) -> Vec<(String, SparseVec)> {
    let b = Basis::new(n);
    let d = b.v_dim();
    let m = n - 1;
    let root = n as u32;
    let q = |k: i32| QScalar::q_pow(k, root);
    let p = |i: usize| b.v_index(Label::Plus(i));
    let mi = |i: usize| b.v_index(Label::Minus(i));
    let ix = |x: usize, y: usize| x * d + y;
    let mut out: Vec<(String, SparseVec)> = i2_reference_vectors(n)
        .into_iter()
        .filter(|(name, _)| name.starts_with("diagonal") || !name.contains(" + "))
        .collect();
    for i in 1..=m {
        for j in 1..=m {
            if i != j {
                let mut v = SparseVec::new();
                add_entry(&mut v, ix(mi(j), p(i)), QScalar::one());
                add_entry(&mut v, ix(p(i), mi(j)), q(1));
                out.push((format!("e-[{j}](x)e+[{i}] + q*e+[{i}](x)e-[{j}]"), v));
            }
        }
    }
    for i in 1..=m {
        for h in i + 1..=m {
            let mut v = SparseVec::new();
            add_entry(&mut v, ix(mi(i), mi(h)), QScalar::one());
            add_entry(&mut v, ix(mi(h), mi(i)), q(1));
            out.push((format!("e-[{i}](x)e-[{h}] + q*e-[{h}](x)e-[{i}]"), v));
            let mut v = SparseVec::new();
            add_entry(&mut v, ix(p(i), p(h)), QScalar::one());
            add_entry(&mut v, ix(p(h), p(i)), q(-1));
            out.push((format!("e+[{i}](x)e+[{h}] + q^-1*e+[{h}](x)e+[{i}]"), v));
        }
    }
    out
}

pub fn i2_reference_corrected(n: usize) -> SubspaceBasis {
    let d = 2 * (n - 1);
    SubspaceBasis::span(d * d, i2_reference_corrected_vectors(n).iter().map(|(_, v)| v))
}

/// `I^2` for `CP^1` as printed for the Woronowicz framing:
/// `span{e+(x)e+, e-(x)e-, e+(x)e- + q^-2 e-(x)e+}`.
pub fn i2_cp1_reference() -> SubspaceBasis {
    let q = |k: i32| QScalar::q_pow(k, 2);
    // V indices: e+ = 0, e- = 1
    let vs = [
        SparseVec::from([(0, QScalar::one())]),
        SparseVec::from([(3, QScalar::one())]),
        SparseVec::from([(1, QScalar::one()), (2, q(-2))]),
    ];
    SubspaceBasis::span(4, vs.iter())
}

/// `I^k = sum_{a+b=k-2} V^(x)a (x) I^2 (x) V^(x)b`.
pub fn ik_subspace(i2: &SubspaceBasis, d: usize, k: usize) -> SubspaceBasis {
    assert!(k >= 2);
    let mut rows = Vec::new();
    for a in 0..=k - 2 {
        let b = k - 2 - a;
        let (la, lb) = (d.pow(a as u32), d.pow(b as u32));
        for r in &i2.rows {
            for left in 0..la {
                for right in 0..lb {
                    let v: SparseVec = r.iter().map(|(&idx, c)| ((left * d * d + idx) * lb + right, c.clone())).collect();
                    rows.push(v);
                }
            }
        }
    }
    SubspaceBasis::span(d.pow(k as u32), rows.iter())
}

fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// `k`-element subsets of `0..m`, increasing.
pub fn combinations_of(m: usize, k: usize) -> Vec<Vec<usize>> {
    combinations(&(0..m).collect::<Vec<_>>(), k)
}

/// Wedge basis of `V^k`: `e+[i_1]^..^e+[i_a]^e-[j_1]^..^e-[j_b]`, `a + b = k`,
/// strictly increasing indices, more `e+` factors first. Each label is returned
/// as its tuple of `V`-indices.
pub fn vk_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    let b = Basis::new(n);
    let m = n - 1;
    let plus: Vec<usize> = (1..=m).map(|i| b.v_index(Label::Plus(i))).collect();
    let minus: Vec<usize> = (1..=m).map(|i| b.v_index(Label::Minus(i))).collect();
    let mut out = Vec::new();
    for a in (0..=k.min(m)).rev() {
        if k - a > m {
            continue;
        }
        for ps in combinations(&plus, a) {
            for ms in combinations(&minus, k - a) {
                out.push(ps.iter().chain(&ms).copied().collect());
            }
        }
    }
    out
}

pub fn wedge_label(basis: &Basis, t: &[usize]) -> String {
    if t.is_empty() {
        return "1".into();
    }
    t.iter().map(|&x| basis.v_label(x).to_string()).collect::<Vec<_>>().join("^")
}

/// `V^k = V^(x)k / I^k` with a chosen basis of representatives.
pub struct ExteriorPower {
    pub k: usize,
    pub d: usize,
    pub ik: SubspaceBasis,
    pub labels: Vec<Vec<usize>>,
    solver: Solver,
}

impl ExteriorPower {
    /// Fails if the representatives of `labels` do not complement `ik`.
    pub fn new(d: usize, k: usize, ik: SubspaceBasis, labels: Vec<Vec<usize>>) -> Result<Self, ProlongError> {
        let width = d.pow(k as u32);
        if labels.len() + ik.dim() != width {
            return Err(ProlongError::NotComplement(k));
        }
        let reps: Vec<SparseVec> =
            labels.iter().map(|t| SparseVec::from([(tuple_index(t, d), QScalar::one())])).collect();
        let solver = Solver::new(width, reps.iter().chain(&ik.rows));
        if !solver.independent() {
            return Err(ProlongError::NotComplement(k));
        }
        Ok(ExteriorPower { k, d, ik, labels, solver })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Coordinates of the class of `t` in the wedge basis.
    pub fn reduce(&self, t: &SparseVec) -> Vec<QScalar> {
        let c = self.solver.solve(t).expect("representatives and I^k span the tensor power");
        c[..self.labels.len()].to_vec()
    }
}

/// The exterior algebra `V^0, .., V^{k_max}` of a relation space `I^2`.
pub struct ExteriorAlgebra {
    pub d: usize,
    pub i2: SubspaceBasis,
    pub powers: Vec<ExteriorPower>,
}

impl ExteriorAlgebra {
    /// `labels(k)` supplies the wedge basis of degree `k`; powers are built up to `k_max`.
    pub fn new(
        d: usize,
        i2: SubspaceBasis,
        k_max: usize,
        labels: impl Fn(usize) -> Vec<Vec<usize>>,
    ) -> Result<Self, ProlongError> {
        let mut powers = Vec::new();
        for k in 0..=k_max {
            let ik = match k {
                0 | 1 => SubspaceBasis::span(d.pow(k as u32), std::iter::empty()),
                2 => i2.clone(),
                _ => ik_subspace(&i2, d, k),
            };
            powers.push(ExteriorPower::new(d, k, ik, labels(k))?);
        }
        Ok(ExteriorAlgebra { d, i2, powers })
    }

    /// The exterior algebra of `V` with the wedge basis of [`vk_basis`], up to degree
    /// `2(N-1) + 1`; the last power is checked to vanish.
    pub fn of_v(n: usize, i2: SubspaceBasis) -> Result<Self, ProlongError> {
        Self::new(2 * (n - 1), i2, 2 * (n - 1) + 1, |k| vk_basis(n, k))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(|p| p.dim()).collect()
    }
}

/// The framing of `d(sum m dn) = sum dm ^ dn`: `sum m_(1) n_(1) (x) [m_(2)^+] ^ [n_(2)^+]`,
/// with the `V^2` leg in wedge coordinates. Pairs should lie in `M`.
pub fn framed_d1(calc: &Calculus, v2: &ExteriorPower, pairs: &[(NCPoly, NCPoly)]) -> Result<Framed, ProlongError> {
    use rayon::prelude::*;
    let d = calc.basis.v_dim();
    let wedge: Vec<Vec<QScalar>> =
        (0..d * d).map(|idx| v2.reduce(&SparseVec::from([(idx, QScalar::one())]))).collect();
    let parts: Vec<Result<Framed, ProlongError>> = pairs
        .par_iter()
        .map(|(m, n)| {
            let dm = calc.exterior_d0(m)?;
            let dn = calc.exterior_d0(n)?;
            let mut acc: BTreeMap<Word, Vec<QScalar>> = BTreeMap::new();
            for ((w1, t1), c1) in &dm.terms {
                for ((w2, t2), c2) in &dn.terms {
                    let coeffs = &wedge[t1[0] * d + t2[0]];
                    if coeffs.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let c = c1 * c2;
                    let e = acc.entry(w1.concat(w2)).or_insert_with(|| vec![QScalar::zero(); v2.dim()]);
                    for (k, x) in coeffs.iter().enumerate() {
                        if !x.is_zero() {
                            e[k] += &(x * &c);
                        }
                    }
                }
            }
            let mut out = Framed::default();
            for (w, v) in acc {
                let g = calc.gsys.normal_form(&NCPoly::word(calc.g, w));
                for (gw, gc) in &g.terms {
                    for (k, x) in v.iter().enumerate() {
                        out.add(gw.clone(), vec![k], &(x * gc));
                    }
                }
            }
            Ok(out)
        })
        .collect();
    let mut total = Framed::default();
    for p in parts {
        total.add_scaled(&p?, &QScalar::one());
    }
    Ok(total)
}

/// Writes a framed one-form `x = sum g (x) v` as `sum_(a,b) m_ab dz_ab` with `m_ab` in `M`,
/// using `Delta(z_ij) = sum u^i_a S(u^b_j) (x) z_ab`.
pub fn one_form_pairs(calc: &Calculus, x: &Framed) -> Vec<(NCPoly, NCPoly)> {
    let n = calc.n;
    let g = calc.g;
    let mut coeff: Vec<NCPoly> = vec![NCPoly::zero(g); n * n];
    let mut by_k: BTreeMap<usize, NCPoly> = BTreeMap::new();
    for ((w, t), c) in &x.terms {
        by_k.entry(t[0]).or_insert_with(|| NCPoly::zero(g)).add_term(w.clone(), c);
    }
    for (k, f) in by_k {
        let (i, j, s) = calc.lift_z[k].clone();
        let f = f.scale(&s);
        for a in 1..=n {
            for b in 1..=n {
                let left = NCPoly::u(g, i, a).mul(&NCPoly::u(g, b, j).antipode()).antipode();
                coeff[(a - 1) * n + (b - 1)].add_scaled(&f.mul(&left), &QScalar::one());
            }
        }
    }
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            let m = calc.gsys.normal_form(&coeff[(a - 1) * n + (b - 1)]);
            if !m.is_zero() {
                out.push((m, calc.z(a, b)));
            }
        }
    }
    out
}

/// The three-dimensional Woronowicz calculus on `C_q[SU_2]` as a framing of `CP^1`.
/// Letters `(a, b, c, d) = (u11, u12, u21, u22)`; basis `e+ = [c], e0 = [a - 1], e- = [b]`.
pub struct Woronowicz {
    pub model: QuotientModel,
    pub table: ActionTable,
}

impl Woronowicz {
    pub fn generators(g: Algebra) -> Vec<NCPoly> {
        let q2 = QScalar::q_pow(2, 2);
        let (a, b, c, d) = (NCPoly::u(g, 1, 1), NCPoly::u(g, 1, 2), NCPoly::u(g, 2, 1), NCPoly::u(g, 2, 2));
        let one = NCPoly::one(g);
        let mut first = a.clone();
        first.add_scaled(&d, &q2);
        first.add_scaled(&one, &-(QScalar::one() + q2.clone()));
        let mut am1 = a.clone();
        am1.add_scaled(&one, &-QScalar::one());
        vec![first, b.mul(&b), c.mul(&c), b.mul(&c), am1.mul(&b), am1.mul(&c)]
    }

    /// `gsys` must be the rewrite system of `C_q[SU_2]`.
    pub fn build(gsys: &RewriteSystem, degree: usize) -> Result<Self, CotangentError> {
        let g = gsys.alg;
        let mut am1 = NCPoly::u(g, 1, 1);
        am1.add_scaled(&NCPoly::one(g), &-QScalar::one());
        let reps = [NCPoly::u(g, 2, 1), am1, NCPoly::u(g, 1, 2)];
        let model = QuotientModel::build(gsys, &Self::generators(g), degree, &reps)?;
        let table = ActionTable::derive(gsys, &model, &reps)?;
        Ok(Woronowicz { model, table })
    }

    /// Relation tensors of `b^2`, `c^2`, `bc` in `V (x) V`.
    pub fn generator_images(&self) -> Result<Vec<(String, SparseVec)>, ProlongError> {
        let g = self.table.alg;
        let basis = Basis::new(2);
        let (b, c) = (NCPoly::u(g, 1, 2), NCPoly::u(g, 2, 1));
        [("b^2", b.mul(&b)), ("c^2", c.mul(&c)), ("bc", b.mul(&c))]
            .into_iter()
            .map(|(name, f)| Ok((name.to_string(), restrict_to_v2(&basis, &relation_tensor(&self.table, &f), name)?)))
            .collect()
    }
}

/// Substitutes `q = q0` in every coefficient.
pub fn specialize(v: &SparseVec, q0: &Rat) -> Result<SparseVec, ProlongError> {
    let mut out = SparseVec::new();
    for (&k, c) in v {
        let x = c
            .eval(q0)
            .ok()
            .and_then(|e| e.as_rational())
            .ok_or_else(|| ProlongError::Pole(c.to_string()))?;
        let s = QScalar::from_rat(x);
        if !s.is_zero() {
            out.insert(k, s);
        }
    }
    Ok(out)
}

/// Span of the symmetric tensors `e_a (x) e_b + e_b (x) e_a` in `V (x) V`.
pub fn symmetric_tensors(d: usize) -> SubspaceBasis {
    let mut rows = Vec::new();
    for a in 0..d {
        for b in a..d {
            let mut v = SparseVec::new();
            add_entry(&mut v, a * d + b, QScalar::one());
            add_entry(&mut v, b * d + a, QScalar::one());
            rows.push(v);
        }
    }
    SubspaceBasis::span(d * d, rows.iter())
}

/// Whether a subspace of `V^(x)k` is an `H`-subcomodule under the tensor coaction.
/// Returns the first offending basis row on failure.
pub fn subcomodule_witness(calc: &Calculus, space: &SubspaceBasis, k: usize) -> Result<Option<SparseVec>, ProlongError> {
    let d = calc.basis.v_dim();
    let mut coactions: HashMap<usize, BTreeMap<Vec<usize>, NCPoly>> = HashMap::new();
    for row in &space.rows {
        let mut by_word: BTreeMap<Word, SparseVec> = BTreeMap::new();
        for (&idx, c) in row {
            if !coactions.contains_key(&idx) {
                coactions.insert(idx, calc.tensor_coaction(&index_tuple(idx, k, d))?);
            }
            for (t, h) in &coactions[&idx] {
                for (w, hc) in &h.terms {
                    add_entry(by_word.entry(w.clone()).or_default(), tuple_index(t, d), hc * c);
                }
            }
        }
        if by_word.values().any(|v| !space.contains(v)) {
            return Ok(Some(row.clone()));
        }
    }
    Ok(None)
}
