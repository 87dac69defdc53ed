//! The complex structure on the maximal prolongation over `C_q[CP^{N-1}]`:
//! homogeneity of `I^2`, wedge isomorphisms, the `*`-condition, integrability,
//! Dolbeault identities at form degrees 0 and 1, the top forms, and the
//! holomorphic prolongation.

use crate::cotangent::{Basis, Calculus, Framed, Label};
use crate::linalg::{Solver, SparseVec, SubspaceBasis};
use crate::ncpoly::{quantum_determinant, word_coproduct, Algebra, NCPoly};
use crate::prolong::{
    bidegree, format_tensor, index_tuple, relation_tensor, tuple_index, ExteriorAlgebra,
    ExteriorPower, ProlongError,
};
use crate::qscalar::QScalar;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// The structure checks out but a printed formula it is compared with does not.
    #[serde(rename = "MISMATCH")]
    Mismatch,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Mismatch => "MISMATCH",
        }
    }
}

/// One named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    pub n: usize,
    pub check: String,
    pub status: Status,
    pub inputs: Vec<String>,
    pub dimensions: BTreeMap<String, usize>,
    pub witnesses: Vec<String>,
    pub coefficients: BTreeMap<String, String>,
}

impl CheckEntry {
    pub fn new(n: usize, check: &str) -> Self {
        CheckEntry {
            n,
            check: check.to_string(),
            status: Status::Pass,
            inputs: Vec::new(),
            dimensions: BTreeMap::new(),
            witnesses: Vec::new(),
            coefficients: BTreeMap::new(),
        }
    }

    pub fn input(mut self, s: impl Into<String>) -> Self {
        self.inputs.push(s.into());
        self
    }

    pub fn dim(&mut self, key: impl Into<String>, d: usize) {
        self.dimensions.insert(key.into(), d);
    }

    pub fn coeff(&mut self, key: impl Into<String>, v: impl ToString) {
        self.coefficients.insert(key.into(), v.to_string());
    }

    /// Records a failure with its witness.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = Status::Fail;
        self.witnesses.push(witness.into());
    }

    /// Records a disagreement with a printed formula; does not override a failure.
    pub fn mismatch(&mut self, witness: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Mismatch;
        }
        self.witnesses.push(witness.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub suites: Vec<String>,
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn new(n: usize) -> Self {
        VerificationReport { n, suites: Vec::new(), entries: Vec::new() }
    }

    /// True when no entry has status `FAIL`.
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("# Verification report, N = {}\n\nSuites: {}\n\n", self.n, self.suites.join(", "));
        s.push_str("| check | status | dimensions |\n|---|---|---|\n");
        for e in &self.entries {
            let dims: Vec<String> = e.dimensions.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!("| {} | {} | {} |\n", e.check, e.status.label(), dims.join(", ")));
        }
        for e in &self.entries {
            if e.inputs.is_empty() && e.witnesses.is_empty() && e.coefficients.is_empty() {
                continue;
            }
            s.push_str(&format!("\n## {}\n\n", e.check));
            for i in &e.inputs {
                s.push_str(&format!("- input: {i}\n"));
            }
            for (k, v) in &e.coefficients {
                s.push_str(&format!("- `{k}` = `{v}`\n"));
            }
            for w in &e.witnesses {
                s.push_str(&format!("- witness: {w}\n"));
            }
        }
        s
    }
}

/// A splitting `V = V^(1,0) + V^(0,1)` given by bases of both summands (in `V`-coordinates).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub name: String,
    pub n: usize,
    pub holo: Vec<SparseVec>,
    pub antiholo: Vec<SparseVec>,
}

impl Decomposition {
    /// `V^(1,0) = span{e+}`, `V^(0,1) = span{e-}`.
    pub fn canonical(n: usize) -> Self {
        let b = Basis::new(n);
        let unit = |l| SparseVec::from([(b.v_index(l), QScalar::one())]);
        Decomposition {
            name: "canonical".into(),
            n,
            holo: (1..n).map(|i| unit(Label::Plus(i))).collect(),
            antiholo: (1..n).map(|i| unit(Label::Minus(i))).collect(),
        }
    }

    /// Negative control: `e+[1]` replaced by the mixed vector `e+[1] + e-[1]`.
    pub fn swapped(n: usize) -> Self {
        let mut d = Self::canonical(n);
        let b = Basis::new(n);
        d.holo[0].insert(b.v_index(Label::Minus(1)), QScalar::one());
        d.name = "swapped".into();
        d
    }

    pub fn v_dim(&self) -> usize {
        2 * (self.n - 1)
    }

    /// Coordinates in the basis `holo ++ antiholo`.
    fn solver(&self) -> Solver {
        Solver::new(self.v_dim(), self.holo.iter().chain(&self.antiholo))
    }

    pub fn is_direct_sum(&self) -> bool {
        self.holo.len() + self.antiholo.len() == self.v_dim() && self.solver().independent()
    }

    fn part(&self, holo: bool) -> &[SparseVec] {
        if holo {
            &self.holo
        } else {
            &self.antiholo
        }
    }

    /// Span of `a (x) b` with `a` in the first and `b` in the second summand.
    pub fn product(&self, first_holo: bool, second_holo: bool) -> SubspaceBasis {
        let d = self.v_dim();
        let mut rows = Vec::new();
        for a in self.part(first_holo) {
            for b in self.part(second_holo) {
                let mut v = SparseVec::new();
                for (&i, x) in a {
                    for (&j, y) in b {
                        v.insert(i * d + j, x * y);
                    }
                }
                rows.push(v);
            }
        }
        SubspaceBasis::span(d * d, rows.iter())
    }

    /// `V^(x)(p,q)` inside `V (x) V`, `p + q = 2`.
    pub fn component(&self, p: usize) -> SubspaceBasis {
        match p {
            2 => self.product(true, true),
            1 => self.product(true, false).sum(&self.product(false, true)),
            0 => self.product(false, false),
            _ => panic!("bidegree out of range"),
        }
    }

    pub fn subspace(&self, holo: bool) -> SubspaceBasis {
        SubspaceBasis::span(self.v_dim(), self.part(holo).iter())
    }
}

/// `I^2` splits as the sum of its intersections with `V^(x)(2,0)`, `V^(x)(1,1)`, `V^(x)(0,2)`.
pub fn check_homogeneity(i2: &SubspaceBasis, dec: &Decomposition) -> CheckEntry {
    let mut e = CheckEntry::new(dec.n, "homogeneity").input(format!("decomposition {}", dec.name));
    let parts: Vec<SubspaceBasis> = [2, 1, 0].iter().map(|&p| i2.intersect(&dec.component(p))).collect();
    e.dim("I2", i2.dim());
    for (p, s) in [2, 1, 0].iter().zip(&parts) {
        e.dim(format!("I2({},{})", p, 2 - p), s.dim());
    }
    let sum = parts[0].sum(&parts[1]).sum(&parts[2]);
    if sum.dim() != i2.dim() {
        let b = Basis::new(dec.n);
        let w = sum.first_outside(i2).expect("a row outside the sum");
        e.fail(format!("relation not in the sum of homogeneous parts: {}", format_tensor(&b, 2, &w)));
    }
    e
}

/// `V^(x)(1,1) = (V10 (x) V01) + I^2_(1,1) = (V01 (x) V10) + I^2_(1,1)`, both direct.
pub fn check_wedge_iso(i2: &SubspaceBasis, dec: &Decomposition) -> CheckEntry {
    let mut e = CheckEntry::new(dec.n, "wedge_isomorphisms").input(format!("decomposition {}", dec.name));
    let m = dec.n - 1;
    let mixed = dec.component(1);
    let i11 = i2.intersect(&mixed);
    e.dim("V(1,1)", mixed.dim());
    e.dim("I2(1,1)", i11.dim());
    if i11.dim() != m * m {
        e.fail(format!("dim I2(1,1) = {}, expected {}", i11.dim(), m * m));
    }
    for (name, a) in [("V10(x)V01", dec.product(true, false)), ("V01(x)V10", dec.product(false, true))] {
        let cap = a.intersect(&i11);
        e.dim(format!("{name} + I2(1,1)"), a.sum(&i11).dim());
        if cap.dim() != 0 {
            e.fail(format!("{name} meets I2(1,1): {}", format_tensor(&Basis::new(dec.n), 2, &cap.rows[0])));
        }
        if a.sum(&i11).dim() != mixed.dim() {
            e.fail(format!("{name} + I2(1,1) does not fill V(1,1)"));
        }
    }
    e
}

fn v_span(calc: &Calculus, vs: &[Vec<QScalar>]) -> Result<SubspaceBasis, ProlongError> {
    let rows: Vec<SparseVec> = vs
        .iter()
        .map(|x| {
            let v = calc.basis.to_v(x)?;
            Ok(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        })
        .collect::<Result<_, ProlongError>>()?;
    Ok(SubspaceBasis::span(calc.basis.v_dim(), rows.iter()))
}

/// `[S(z_i1)*]` spans `V^(0,1)`, `[S(z_1i)*]` spans `V^(1,0)`, and both summands are
/// right submodules of `Lambda^1`.
pub fn check_star_condition(calc: &Calculus, dec: &Decomposition) -> Result<CheckEntry, ProlongError> {
    let n = calc.n;
    let b = calc.basis;
    let mut e = CheckEntry::new(n, "star_condition").input(format!("decomposition {}", dec.name));
    for holo in [true, false] {
        let mut classes = Vec::new();
        for i in 2..=n {
            let zz = if holo { calc.z(i, 1) } else { calc.z(1, i) };
            let c = calc.table.coset_plus(&zz.antipode().star());
            e.coeff(format!("[S(z{})*]", if holo { format!("{i}1") } else { format!("1{i}") }), crate::cotangent::format_vector(&b, &c));
            classes.push(c);
        }
        let span = v_span(calc, &classes)?;
        let target = dec.subspace(!holo);
        e.dim(if holo { "span [S(z_i1)*]" } else { "span [S(z_1i)*]" }, span.dim());
        if span != target {
            e.fail(format!(
                "star of {} representatives does not span the {} part",
                if holo { "holomorphic" } else { "antiholomorphic" },
                if holo { "antiholomorphic" } else { "holomorphic" }
            ));
        }
    }
    for i in 2..=n {
        let c = calc.table.coset_plus(&NCPoly::u(calc.g, i, 1).antipode().star());
        e.coeff(format!("[S(u{i}1)*]"), crate::cotangent::format_vector(&b, &c));
        if c != b.unit(Label::Minus(i - 1)) {
            e.fail(format!("[S(u{i}1)*] is not e-[{}]", i - 1));
        }
    }
    for holo in [true, false] {
        let sub = dec.subspace(holo);
        for v in dec.part(holo) {
            let mut x = vec![QScalar::zero(); b.v_dim()];
            for (&k, c) in v {
                x[k] = c.clone();
            }
            let lam = b.from_v(&x);
            for l in calc.g.letters() {
                let y = calc.table.act(&lam, &NCPoly::letter(calc.g, l));
                let inside = b.to_v(&y).ok().map(|yv| {
                    let s: SparseVec = yv.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                    sub.contains(&s)
                });
                if inside != Some(true) {
                    e.fail(format!(
                        "{} part not closed: {} <| {}",
                        if holo { "holomorphic" } else { "antiholomorphic" },
                        format_tensor(&b, 1, v),
                        calc.g.letter_name(l)
                    ));
                }
            }
        }
    }
    Ok(e)
}

/// `V^(1,0)` and `V^(0,1)` are `H`-subcomodules of `V`.
pub fn check_subcomodules(calc: &Calculus, dec: &Decomposition) -> Result<CheckEntry, ProlongError> {
    let mut e = CheckEntry::new(calc.n, "decomposition_subcomodules").input(format!("decomposition {}", dec.name));
    for holo in [true, false] {
        let sub = dec.subspace(holo);
        for v in dec.part(holo) {
            let mut x = vec![QScalar::zero(); calc.basis.v_dim()];
            for (&k, c) in v {
                x[k] = c.clone();
            }
            let mut by_word: BTreeMap<crate::ncpoly::Word, SparseVec> = BTreeMap::new();
            for (k, h) in calc.v_coaction(&x)?.iter().enumerate() {
                for (w, c) in &h.terms {
                    by_word.entry(w.clone()).or_default().insert(k, c.clone());
                }
            }
            if by_word.values().any(|s| !sub.contains(s)) {
                e.fail(format!("coaction of {} leaves the summand", format_tensor(&calc.basis, 1, v)));
            }
        }
    }
    Ok(e)
}

/// `sum (v <| S(m_(1))) (x) [m_(2)^+]` in `Lambda^1 (x) Lambda^1`.
pub fn integrability_tensor(calc: &Calculus, v: &[QScalar], m: &NCPoly) -> Vec<QScalar> {
    let t = &calc.table;
    let dim = t.dim;
    let mut row = v.to_vec();
    row.push(QScalar::zero());
    let mut unit = vec![QScalar::zero(); dim + 1];
    unit[dim] = QScalar::one();
    let mut out = vec![QScalar::zero(); dim * dim];
    for (w, c) in &m.terms {
        for legs in word_coproduct(calc.g, w, 2) {
            let left = t.apply_antipode_word(&row, &legs[0]);
            if left[..dim].iter().all(|x| x.is_zero()) {
                continue;
            }
            let right = t.apply_word(&unit, &legs[1]);
            for a in 0..dim {
                if left[a].is_zero() {
                    continue;
                }
                for bb in 0..dim {
                    if !right[bb].is_zero() {
                        out[a * dim + bb] += &(&left[a] * &right[bb] * c);
                    }
                }
            }
        }
    }
    out
}

/// Membership `(v <| S(m_(1))) (x) [m_(2)^+]` in `V(2,0) + V(1,1) + (V^(x)2)^perp` for `m = z_i1`
/// (or, mirrored, in `V(0,2) + V(1,1) + (V^(x)2)^perp` for `m = z_1i`), for every
/// basis vector `v` of `Lambda^1`. `complement` spans `V^perp` and must have a non-zero `e0` coordinate.
pub fn check_integrability(
    calc: &Calculus,
    dec: &Decomposition,
    complement: &[QScalar],
    mirrored: bool,
) -> CheckEntry {
    let n = calc.n;
    let b = calc.basis;
    let dim = b.dim();
    let d = b.v_dim();
    let name = if mirrored { "integrability_antiholomorphic" } else { "integrability" };
    let mut e = CheckEntry::new(n, name)
        .input(format!("decomposition {}", dec.name))
        .input(format!("complement {}", crate::cotangent::format_vector(&b, complement)));
    let z0 = b.zero_index();
    let c0 = complement[z0].clone();
    assert!(!c0.is_zero(), "complement must not lie in V");
    // projection Lambda^1 -> V along the complement, as a matrix of V-coordinates
    let proj: Vec<Vec<QScalar>> = (0..dim)
        .map(|k| {
            let mut x = b.unit(b.label(k));
            let s = x[z0].try_div(&c0).expect("non-zero");
            for (xi, ci) in x.iter_mut().zip(complement) {
                *xi -= &(&s * ci);
            }
            b.to_v(&x).expect("projection kills e0")
        })
        .collect();
    let solver = dec.solver();
    let hdim = dec.holo.len();
    let coords: Vec<Vec<QScalar>> = (0..d)
        .map(|k| solver.solve(&SparseVec::from([(k, QScalar::one())])).expect("decomposition spans V"))
        .collect();
    let mut count = 0;
    for i in 2..=n {
        let m = if mirrored { calc.z(1, i) } else { calc.z(i, 1) };
        for k in 0..dim {
            let t = integrability_tensor(calc, &b.unit(b.label(k)), &m);
            // forbidden component: both legs in the excluded summand
            let mut bad = vec![QScalar::zero(); d * d];
            for a in 0..dim {
                for c in 0..dim {
                    let x = &t[a * dim + c];
                    if x.is_zero() {
                        continue;
                    }
                    for va in 0..d {
                        if proj[a][va].is_zero() {
                            continue;
                        }
                        for vc in 0..d {
                            if proj[c][vc].is_zero() {
                                continue;
                            }
                            let coef = x * &proj[a][va] * &proj[c][vc];
                            for (ia, ca) in coords[va].iter().enumerate() {
                                for (ic, cc) in coords[vc].iter().enumerate() {
                                    let excluded = if mirrored { ia < hdim && ic < hdim } else { ia >= hdim && ic >= hdim };
                                    if excluded && !ca.is_zero() && !cc.is_zero() {
                                        bad[ia * d + ic] += &(&coef * &(ca * cc));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            count += 1;
            if bad.iter().any(|x| !x.is_zero()) {
                e.fail(format!(
                    "m = z{}, v = {}: component outside the allowed types",
                    if mirrored { format!("1{i}") } else { format!("{i}1") },
                    b.label(k)
                ));
            }
        }
    }
    e.dim("pairs", count);
    e
}

/// Splits a framed two-form (wedge coordinates) by bidegree.
pub fn framed_component(x: &Framed, v2: &ExteriorPower, basis: &Basis, p: usize) -> Framed {
    x.filter(|t| bidegree(basis, &v2.labels[t[0]]).0 == p)
}

/// For every `z_ij`: `dz = del z + delbar z`, `(d del z)_(0,2) = 0`, `(d delbar z)_(2,0) = 0`,
/// `del delbar z = -delbar del z`, and `del(z*) = (delbar z)*`.
pub fn dolbeault_check(calc: &Calculus, v2: &ExteriorPower) -> Result<CheckEntry, ProlongError> {
    use rayon::prelude::*;
    let n = calc.n;
    let mut e = CheckEntry::new(n, "dolbeault").input("generators z_ij");
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let results: Vec<Result<Vec<String>, ProlongError>> = gens
        .par_iter()
        .map(|&(i, j)| {
            let mut bad = Vec::new();
            let m = calc.z(i, j);
            let dm = calc.exterior_d0(&m)?;
            let del = calc.holomorphic_part(&dm);
            let delbar = calc.antiholomorphic_part(&dm);
            let mut sum = del.clone();
            sum.add_scaled(&delbar, &QScalar::one());
            if sum != dm {
                bad.push(format!("z{i}{j}: d != del + delbar"));
            }
            let d_del = crate::prolong::framed_d1(calc, v2, &crate::prolong::one_form_pairs(calc, &del))?;
            let d_delbar = crate::prolong::framed_d1(calc, v2, &crate::prolong::one_form_pairs(calc, &delbar))?;
            if !framed_component(&d_del, v2, &calc.basis, 0).is_zero() {
                bad.push(format!("z{i}{j}: (0,2) part of d(del z) is non-zero"));
            }
            if !framed_component(&d_delbar, v2, &calc.basis, 2).is_zero() {
                bad.push(format!("z{i}{j}: (2,0) part of d(delbar z) is non-zero"));
            }
            let mut anti = framed_component(&d_del, v2, &calc.basis, 1);
            anti.add_scaled(&framed_component(&d_delbar, v2, &calc.basis, 1), &QScalar::one());
            if !anti.is_zero() {
                bad.push(format!("z{i}{j}: del delbar z + delbar del z != 0"));
            }
            let mstar = calc.gsys.normal_form(&m.star());
            let lhs = calc.del0(&mstar)?;
            let rhs = calc.star_framed(&delbar)?;
            if lhs != rhs {
                bad.push(format!("z{i}{j}: del(z*) != (delbar z)*"));
            }
            Ok(bad)
        })
        .collect();
    for r in results {
        for w in r? {
            e.fail(w);
        }
    }
    e.dim("generators", gens.len());
    Ok(e)
}

/// Result of the top-form coaction: the `H`-coefficient of the top wedge and,
/// when it is a scalar multiple of a power of `det_{N-1}`, that power and scalar.
#[derive(Debug, Clone)]
pub struct TopForm {
    pub coefficient: NCPoly,
    pub det_power: Option<i32>,
    pub scale: Option<QScalar>,
}

/// `D^k` for `k >= 0`, `det^{-k}` for `k < 0`, in `H`.
fn det_power(h: Algebra, p: i32) -> NCPoly {
    if p >= 0 {
        NCPoly::d(h).pow(p as usize)
    } else {
        quantum_determinant(h).pow((-p) as usize)
    }
}

/// Applies the tensor coaction to the top wedge of `V^(1,0)` (or `V^(0,1)`) and reduces
/// the `V`-leg in the exterior algebra.
pub fn top_form_coaction(calc: &Calculus, ext: &ExteriorAlgebra, holo: bool) -> Result<TopForm, ProlongError> {
    let n = calc.n;
    let b = calc.basis;
    let top: Vec<usize> = (1..n).map(|i| b.v_index(if holo { Label::Plus(i) } else { Label::Minus(i) })).collect();
    let power = &ext.powers[n - 1];
    let pos = power.labels.iter().position(|t| *t == top).expect("top wedge is a basis label");
    let d = b.v_dim();
    let mut coef = NCPoly::zero(calc.h);
    for (t, hpoly) in calc.tensor_coaction(&top)? {
        let red = power.reduce(&SparseVec::from([(tuple_index(&t, d), QScalar::one())]));
        for (k, x) in red.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if k != pos {
                return Err(ProlongError::NotInV(format!("top wedge coaction leaves the line: {}", power.labels[k].len())));
            }
            coef.add_scaled(&hpoly, x);
        }
    }
    let coef = calc.hsys.normal_form(&coef);
    let mut found = None;
    if let Some((lw, lc)) = coef.leading() {
        for p in -(2 * n as i32)..=(2 * n as i32) {
            let cand = calc.hsys.normal_form(&det_power(calc.h, p));
            if let Some((cw, cc)) = cand.leading() {
                if cw == lw {
                    let s = lc.try_div(cc).expect("non-zero");
                    if cand.scale(&s) == coef {
                        // D = det^{-1}
                        found = Some((-p, s));
                        break;
                    }
                }
            }
        }
    }
    Ok(TopForm { coefficient: coef, det_power: found.as_ref().map(|f| f.0), scale: found.map(|f| f.1) })
}

pub fn check_top_form(calc: &Calculus, ext: &ExteriorAlgebra) -> Result<CheckEntry, ProlongError> {
    let n = calc.n;
    let mut e = CheckEntry::new(n, "top_form").input("wedges e+[1]^..^e+[N-1] and e-[1]^..^e-[N-1]");
    let mut powers = Vec::new();
    for holo in [true, false] {
        let t = top_form_coaction(calc, ext, holo)?;
        let key = if holo { "holomorphic" } else { "antiholomorphic" };
        e.coeff(format!("{key} coefficient"), &t.coefficient);
        match (t.det_power, &t.scale) {
            (Some(p), Some(s)) => {
                e.coeff(format!("{key} det power"), p);
                e.coeff(format!("{key} scale"), s);
                powers.push(p);
                let expected = if holo { -(n as i32) } else { n as i32 };
                if p != expected || !s.is_one() {
                    e.fail(format!("{key} top form is ({s}) det^{p}, expected det^{expected}"));
                }
            }
            _ => e.fail(format!("{key} coefficient is not a multiple of a power of det")),
        }
    }
    if powers.len() == 2 {
        e.coeff("total det power", powers[0] + powers[1]);
    }
    Ok(e)
}

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Maximal prolongation of `(Omega^(1,0), del)`: relations from `Gen(I_M)` together with the
/// `z_1i` (which span the kernel of `V -> V^(1,0)`), read on `e+ (x) e+`. The dimensions of
/// its exterior powers must be `C(N-1, k)` and agree with the `(k,0)` parts of `V^k`.
/// Mirrored for the antiholomorphic side.
pub fn check_holomorphic_prolongation(calc: &Calculus, ext: &ExteriorAlgebra) -> Result<CheckEntry, ProlongError> {
    let n = calc.n;
    let m = n - 1;
    let b = calc.basis;
    let d = b.v_dim();
    let mut e = CheckEntry::new(n, "holomorphic_prolongation");
    let base = calc.cp_ideal_generators();
    for holo in [true, false] {
        let key = if holo { "(k,0)" } else { "(0,k)" };
        let mut gens = base.clone();
        for i in 2..=n {
            if holo {
                gens.push((format!("z1{i}"), calc.z(1, i)));
            } else {
                gens.push((format!("z{i}1"), calc.z(i, 1)));
            }
        }
        let keep = |k: usize| matches!(b.v_label(k), Label::Plus(_)) == holo;
        let local = |k: usize| match b.v_label(k) {
            Label::Plus(i) | Label::Minus(i) => i - 1,
            Label::Zero => unreachable!(),
        };
        // the quotient cotangent space is Lambda^1 modulo e0 and the other summand
        let local_full = |k: usize| match b.label(k) {
            Label::Plus(i) if holo => Some(i - 1),
            Label::Minus(i) if !holo => Some(i - 1),
            _ => None,
        };
        let dim = b.dim();
        let mut rows = Vec::new();
        for (_, f) in &gens {
            let x = relation_tensor(&calc.table, f);
            let mut r = SparseVec::new();
            for (idx, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let (Some(a), Some(c2)) = (local_full(idx / dim), local_full(idx % dim)) {
                    r.insert(a * m + c2, c.clone());
                }
            }
            rows.push(r);
        }
        let i2h = SubspaceBasis::span(m * m, rows.iter());
        // compare with I^2 restricted to the summand
        let summand: Vec<SparseVec> = (0..d * d)
            .filter(|&idx| {
                let t = index_tuple(idx, 2, d);
                keep(t[0]) && keep(t[1])
            })
            .map(|idx| SparseVec::from([(idx, QScalar::one())]))
            .collect();
        let cap = ext.i2.intersect(&SubspaceBasis::span(d * d, summand.iter()));
        let cap_local: Vec<SparseVec> = cap
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(&idx, c)| {
                        let t = index_tuple(idx, 2, d);
                        (local(t[0]) * m + local(t[1]), c.clone())
                    })
                    .collect()
            })
            .collect();
        if SubspaceBasis::span(m * m, cap_local.iter()) != i2h {
            e.fail(format!("{key}: relations differ from I^2 restricted to the summand"));
        }
        let algebra = ExteriorAlgebra::new(m, i2h, m + 1, |k| {
            crate::prolong::combinations_of(m, k)
        })?;
        for (k, dim) in algebra.dims().into_iter().enumerate() {
            e.dim(format!("{key} k={k}"), dim);
            let part = ext
                .powers
                .get(k)
                .map(|p| p.labels.iter().filter(|t| bidegree(&b, t).0 == if holo { k } else { 0 } && t.len() == k).count())
                .unwrap_or(0);
            if dim != choose(m, k) || dim != part {
                e.fail(format!("{key} k={k}: dimension {dim}, expected C({m},{k}) = {} and {part} from V^k", choose(m, k)));
            }
        }
    }
    Ok(e)
}
