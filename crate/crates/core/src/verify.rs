//! Verification suites. Each suite is a list of [`CheckEntry`] values computed
//! from a shared [`Context`]; nothing here panics on a failed property.

use crate::cotangent::{format_vector, Basis, Calculus, CalculusConfig, CotangentError, Label, QuotientModel};
use crate::holomorphic::{
    check_holomorphic_prolongation, check_homogeneity, check_integrability, check_star_condition,
    check_subcomodules, check_top_form, check_wedge_iso, dolbeault_check, CheckEntry, Decomposition, Status,
    VerificationReport,
};
use crate::linalg::{SparseVec, SubspaceBasis};
use crate::ncpoly::{inversions, minus_q_pow, permutations, quantum_determinant, Algebra, NCPoly, TensorPoly, Word};
use crate::prolong::{
    format_tensor, i2_cp1_reference, i2_from_generators, i2_reference, i2_reference_corrected, relation_tensor,
    restrict_to_v2, specialize, subcomodule_witness, symmetric_tensors, ExteriorAlgebra, ProlongError, Woronowicz,
};
use crate::qscalar::{QScalar, Rat};
use crate::rewrite::{defining_relations, tensor_equal, RewriteError, RewriteSystem};
use crate::rform::check_qybe;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Cotangent(#[from] CotangentError),
    #[error(transparent)]
    Prolong(#[from] ProlongError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Hopf,
    Fodc,
    Acs,
    Integrability,
    Dolbeault,
    Topform,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Hopf, Suite::Fodc, Suite::Acs, Suite::Integrability, Suite::Dolbeault, Suite::Topform];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Fodc => "fodc",
            Suite::Acs => "acs",
            Suite::Integrability => "integrability",
            Suite::Dolbeault => "dolbeault",
            Suite::Topform => "topform",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s}"))
    }
}

/// A constructed calculus with its two-form relations and exterior algebra.
pub struct Context {
    pub calc: Calculus,
    pub quotient_degree: usize,
    pub i2: SubspaceBasis,
    pub ext: ExteriorAlgebra,
}

impl Context {
    pub fn new(calc: Calculus, quotient_degree: usize) -> Result<Self, VerifyError> {
        let i2 = i2_from_generators(&calc, &calc.cp_ideal_generators())?;
        let ext = ExteriorAlgebra::of_v(calc.n, i2.clone())?;
        Ok(Context { calc, quotient_degree, i2, ext })
    }

    pub fn construct(cfg: CalculusConfig) -> Result<Self, VerifyError> {
        Self::new(Calculus::construct(cfg)?, 3)
    }

    pub fn n(&self) -> usize {
        self.calc.n
    }
}

pub fn run_suite(ctx: &Context, suite: Suite, dec: &Decomposition) -> Result<Vec<CheckEntry>, VerifyError> {
    let c = &ctx.calc;
    Ok(match suite {
        Suite::Hopf => vec![
            hopf_axioms(&c.gsys),
            hopf_axioms(&c.hsys),
            determinant_central_grouplike(c.n)?,
            qybe_and_r(c),
            z_coinvariance(c),
        ],
        Suite::Fodc => {
            let model = c.quotient_model(ctx.quotient_degree)?;
            let mut v = vec![
                lambda_dimension(c, &model),
                table_model_agreement(c, &model)?,
                printed_action_table(c),
                left_multiplication(c)?,
                z_classes(c)?,
                v_embedding(c)?,
                m_action_on_v(c),
                framing(c)?,
                star_map(c)?,
                i2_entry(ctx)?,
                generating_set_independence(ctx)?,
                vk_dimensions(ctx),
                classical_limit(ctx)?,
            ];
            if c.n == 2 {
                v.push(woronowicz(c)?);
            }
            v
        }
        Suite::Acs => vec![
            check_homogeneity(&ctx.i2, dec),
            check_wedge_iso(&ctx.i2, dec),
            check_star_condition(c, dec)?,
            check_subcomodules(c, dec)?,
        ],
        Suite::Integrability => {
            let e0 = c.basis.unit(Label::Zero);
            vec![check_integrability(c, dec, &e0, false), check_integrability(c, dec, &e0, true)]
        }
        Suite::Dolbeault => vec![dolbeault_check(c, &ctx.ext.powers[2])?],
        Suite::Topform => vec![
            reversed_determinant(c),
            check_top_form(c, &ctx.ext)?,
            check_holomorphic_prolongation(c, &ctx.ext)?,
        ],
    })
}

/// Runs the suites in order and collects a report.
pub fn verify(ctx: &Context, suites: &[Suite], dec: &Decomposition) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new(ctx.n());
    for &s in suites {
        report.suites.push(s.name().to_string());
        report.entries.extend(run_suite(ctx, s, dec)?);
    }
    Ok(report)
}

fn word_poly(alg: Algebra, w: &crate::ncpoly::Word) -> NCPoly {
    NCPoly::word(alg, w.clone())
}

/// Coassociativity, counit, antipode, `Delta S = (S (x) S) flip Delta`, `eps S = eps` on
/// every generator, and well-definedness of `Delta`, `eps`, `S` on every defining relation.
pub fn hopf_axioms(sys: &RewriteSystem) -> CheckEntry {
    let alg = sys.alg;
    let mut e = CheckEntry::new(alg.n(), &format!("hopf_axioms {alg}"));
    let one = NCPoly::one(alg);
    for l in alg.letters() {
        let x = NCPoly::letter(alg, l);
        let name = alg.letter_name(l);
        let dx = x.coproduct();
        let left = dx.expand_leg(0, |w| word_poly(alg, w).coproduct());
        let right = dx.expand_leg(1, |w| word_poly(alg, w).coproduct());
        if !tensor_equal(&[sys, sys, sys], &left, &right) {
            e.fail(format!("coassociativity fails on {name}"));
        }
        for leg in 0..2 {
            let back = dx.contract_leg(leg, |w| word_poly(alg, w).counit()).into_poly();
            if !sys.equal(&back, &x) {
                e.fail(format!("counit (leg {leg}) fails on {name}"));
            }
        }
        let mut s1 = NCPoly::zero(alg);
        let mut s2 = NCPoly::zero(alg);
        for (k, c) in &dx.terms {
            s1.add_scaled(&word_poly(alg, &k[0]).antipode().mul(&word_poly(alg, &k[1])), c);
            s2.add_scaled(&word_poly(alg, &k[0]).mul(&word_poly(alg, &k[1]).antipode()), c);
        }
        let unit = one.scale(&x.counit());
        if !sys.equal(&s1, &unit) || !sys.equal(&s2, &unit) {
            e.fail(format!("antipode axiom fails on {name}"));
        }
        let sx = x.antipode();
        let mut flip = TensorPoly::zero(vec![alg, alg]);
        for (k, c) in &dx.terms {
            let t = TensorPoly::pure(&[&word_poly(alg, &k[1]).antipode(), &word_poly(alg, &k[0]).antipode()]);
            flip.add_scaled(&t, c);
        }
        if !tensor_equal(&[sys, sys], &sx.coproduct(), &flip) {
            e.fail(format!("Delta S = (S (x) S) flip Delta fails on {name}"));
        }
        if sx.counit() != x.counit() {
            e.fail(format!("eps S != eps on {name}"));
        }
    }
    let rels = defining_relations(alg);
    for r in &rels {
        if !r.counit().is_zero() {
            e.fail(format!("eps does not vanish on {r}"));
        }
        if !sys.normal_form(&r.antipode()).is_zero() {
            e.fail(format!("S does not preserve the relation {r}"));
        }
        if !tensor_equal(&[sys, sys], &r.coproduct(), &TensorPoly::zero(vec![alg, alg])) {
            e.fail(format!("Delta does not preserve the relation {r}"));
        }
    }
    e.dim("generators", alg.num_letters());
    e.dim("relations", rels.len());
    e
}

/// `det_N` is central and grouplike. In `C_q[SU_N]` it reduces to `1`; the non-trivial
/// statement is checked in the quantum matrix algebra of `C_q[U_N]`, where `det_N` is not a relation.
pub fn determinant_central_grouplike(n: usize) -> Result<CheckEntry, VerifyError> {
    let mut e = CheckEntry::new(n, "determinant_central_grouplike");
    let g = Algebra::G(n);
    let gsys = RewriteSystem::build(g, n + 1)?;
    let det_g = quantum_determinant(g);
    if gsys.normal_form(&det_g) != NCPoly::one(g) {
        e.fail("det_N does not reduce to 1 in C_q[SU_N]");
    }
    // U_N is the algebra H(N+1) of size N with the inverse determinant D adjoined
    let h = Algebra::H(n + 1);
    let hsys = RewriteSystem::build(h, n + 1)?;
    let det = quantum_determinant(h);
    for l in h.letters() {
        let x = NCPoly::letter(h, l);
        let mut comm = det.mul(&x);
        comm.add_scaled(&x.mul(&det), &-QScalar::one());
        if !hsys.normal_form(&comm).is_zero() {
            e.fail(format!("det_N does not commute with {}", h.letter_name(l)));
        }
    }
    let grouplike = TensorPoly::pure(&[&det, &det]);
    if !tensor_equal(&[&hsys, &hsys], &det.coproduct(), &grouplike) {
        e.fail("Delta(det_N) != det_N (x) det_N");
    }
    if !det.counit().is_one() {
        e.fail("eps(det_N) != 1");
    }
    e.dim("generators", h.num_letters());
    Ok(e)
}

/// QYBE for the R-matrix, and `r` vanishing on every defining relation paired with `1` and every generator.
pub fn qybe_and_r(c: &Calculus) -> CheckEntry {
    let mut e = CheckEntry::new(c.n, "qybe_and_r_form");
    if !check_qybe(c.n) {
        e.fail("R12 R13 R23 != R23 R13 R12");
    }
    let g = c.g;
    let mut others: Vec<NCPoly> = g.letters().map(|l| NCPoly::letter(g, l)).collect();
    others.push(NCPoly::one(g));
    let rels = defining_relations(g);
    for rel in &rels {
        for x in &others {
            if !c.r.eval(rel, x).is_zero() || !c.r.eval(x, rel).is_zero() {
                e.fail(format!("r does not vanish on ({rel}, {x})"));
            }
        }
    }
    e.dim("relations", rels.len());
    e
}

pub fn z_coinvariance(c: &Calculus) -> CheckEntry {
    let mut e = CheckEntry::new(c.n, "z_coinvariant");
    for i in 1..=c.n {
        for j in 1..=c.n {
            if !crate::cotangent::is_coinvariant(&c.gsys, &c.hsys, &c.z(i, j)) {
                e.fail(format!("z{i}{j} is not coinvariant"));
            }
        }
    }
    if crate::cotangent::is_coinvariant(&c.gsys, &c.hsys, &NCPoly::u(c.g, 1, 2)) {
        e.fail("control: u12 reported coinvariant");
    }
    e.dim("generators", c.n * c.n);
    e
}

pub fn lambda_dimension(c: &Calculus, model: &QuotientModel) -> CheckEntry {
    let mut e = CheckEntry::new(c.n, "lambda_dimension").input(format!("quotient degree {}", model.degree));
    e.dim("Lambda^1", model.quotient_dim);
    e.dim("ideal", model.ideal_dim());
    e.dim("V", c.basis.v_dim());
    if model.quotient_dim != 2 * c.n - 1 {
        e.fail(format!("quotient dimension {}, expected {}", model.quotient_dim, 2 * c.n - 1));
    }
    e
}

/// The table evaluator agrees with the exact quotient on every normal word of the model.
pub fn table_model_agreement(c: &Calculus, model: &QuotientModel) -> Result<CheckEntry, VerifyError> {
    let mut e = CheckEntry::new(c.n, "table_model_agreement").input(format!("quotient degree {}", model.degree));
    let mut count = 0;
    for w in model.normal_words().iter().filter(|w| !w.is_empty()) {
        let f = NCPoly::word(c.g, w.clone()).plus_part();
        let a = model.coset(&c.gsys, &f)?;
        let b = c.table.lambda_coset(&f)?;
        count += 1;
        if a != b {
            e.fail(format!("{}: model {} vs table {}", w.display(c.g), format_vector(&c.basis, &a), format_vector(&c.basis, &b)));
        }
    }
    e.dim("words", count);
    Ok(e)
}

/// Predicted actions of generators and antipodes on `e+-`, read from the printed table
/// (`i + 1 < j` for the off-diagonal families, diagonal exponent `delta_1j + delta_{i+1,j} - 2/N`).
pub fn printed_action(n: usize, l: Label, a: usize, b: usize, antipode: bool) -> Vec<QScalar> {
    let root = n as u32;
    let basis = Basis::new(n);
    let mut out = vec![QScalar::zero(); basis.dim()];
    let nu = QScalar::nu(root);
    let delta = |x: usize, y: usize| i32::from(x == y);
    match l {
        Label::Plus(i) | Label::Minus(i) => {
            if a == b {
                let k = n as i32 * (delta(1, a) + delta(i + 1, a)) - 2;
                out[basis.index(l)] = QScalar::t_pow(if antipode { -k } else { k }, root);
            } else if let Label::Plus(_) = l {
                if b == i + 1 && a > i + 1 {
                    out[basis.index(Label::Plus(a - 1))] = if antipode {
                        -(&QScalar::t_pow(2, root) * &nu)
                    } else {
                        &QScalar::t_pow(-2, root) * &nu
                    };
                }
            } else if a == i + 1 && b > i + 1 {
                // exponent 2(i - j + 1 + 1/N) in units of q^(1/N)
                let k = 2 * n as i32 * (i as i32 - b as i32 + 1) + 2;
                out[basis.index(Label::Minus(b - 1))] =
                    if antipode { -(&QScalar::t_pow(k, root) * &nu) } else { &QScalar::t_pow(-2, root) * &nu };
            }
        }
        Label::Zero => unreachable!(),
    }
    out
}

pub fn printed_action_table(c: &Calculus) -> CheckEntry {
    let n = c.n;
    let b = c.basis;
    let root = n as u32;
    let mut e = CheckEntry::new(n, "printed_action_table")
        .input("off-diagonal ranges read as i + 1 < j")
        .input("diagonal exponent read as delta_1j + delta_{i+1,j} - 2/N (antipode: its negative)");
    let mut count = 0;
    for k in 0..b.dim() {
        let l = b.label(k);
        if l == Label::Zero {
            continue;
        }
        for i in 1..=n {
            for j in 1..=n {
                let u = NCPoly::u(c.g, i, j);
                for antipode in [false, true] {
                    let got = if antipode { c.table.act_antipode(&b.unit(l), &u) } else { c.table.act(&b.unit(l), &u) };
                    let want = printed_action(n, l, i, j, antipode);
                    count += 1;
                    if got != want {
                        e.fail(format!(
                            "{l} <| {}u{i}{j}: derived {}, printed {}",
                            if antipode { "S " } else { "" },
                            format_vector(&b, &got),
                            format_vector(&b, &want)
                        ));
                    }
                }
            }
        }
    }
    for i in 2..=n {
        let s1 = c.table.coset_plus(&NCPoly::u(c.g, i, 1).antipode());
        let mut w1 = vec![QScalar::zero(); b.dim()];
        w1[b.index(Label::Plus(i - 1))] = -QScalar::t_pow(4 - n as i32, root);
        let s2 = c.table.coset_plus(&NCPoly::u(c.g, 1, i).antipode());
        let mut w2 = vec![QScalar::zero(); b.dim()];
        w2[b.index(Label::Minus(i - 1))] = -QScalar::t_pow(4 + n as i32 * (1 - 2 * i as i32), root);
        count += 2;
        e.coeff(format!("[S(u{i}1)]"), format_vector(&b, &s1));
        e.coeff(format!("[S(u1{i})]"), format_vector(&b, &s2));
        if s1 != w1 {
            e.fail(format!("[S(u{i}1)] = {}, printed {}", format_vector(&b, &s1), format_vector(&b, &w1)));
        }
        if s2 != w2 {
            e.fail(format!("[S(u1{i})] = {}, printed {}", format_vector(&b, &s2), format_vector(&b, &w2)));
        }
    }
    e.dim("entries", count);
    e
}

/// The printed relations `[u^k_k f] = q^(2 delta_k1 - 2/N) [f]` and
/// `[S(u^k_k) f] = q^(2/N - 2 delta_k1) [f]`, tested on `f = u^{i+1}_1, u^1_{i+1}`.
/// A disagreement is reported as a mismatch with the printed text.
pub fn left_multiplication(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let n = c.n;
    let root = n as u32;
    let mut e = CheckEntry::new(n, "left_multiplication_relations");
    for k in 1..=n {
        let ukk = NCPoly::u(c.g, k, k);
        let x = 2 * n as i32 * i32::from(k == 1) - 2;
        for i in 1..n {
            for f in [NCPoly::u(c.g, i + 1, 1), NCPoly::u(c.g, 1, i + 1)] {
                let base = c.lambda_coset(&f)?;
                for (name, lhs, s) in [
                    ("u", ukk.mul(&f), QScalar::t_pow(x, root)),
                    ("S(u)", ukk.antipode().mul(&f), QScalar::t_pow(-x, root)),
                ] {
                    let got = c.lambda_coset(&lhs)?;
                    let want: Vec<QScalar> = base.iter().map(|y| y * &s).collect();
                    if got != want {
                        e.mismatch(format!(
                            "[{name}{k}{k} {f}] = {}, printed {}",
                            format_vector(&c.basis, &got),
                            format_vector(&c.basis, &want)
                        ));
                    }
                }
            }
        }
    }
    Ok(e)
}

/// Derived classes of `z_i1`, `z_1i` against the printed `q^(2i-1) e+_{i-1}`, `q^(1-2i) e-_{i-1}`.
pub fn z_classes(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let n = c.n;
    let b = c.basis;
    let root = n as u32;
    let mut e = CheckEntry::new(n, "z_classes");
    for i in 2..=n {
        for (zi, zj, l, k) in [(i, 1, Label::Plus(i - 1), 2 * i as i32 - 1), (1, i, Label::Minus(i - 1), 1 - 2 * i as i32)] {
            let got = c.lambda_coset(&c.z(zi, zj))?;
            let mut want = vec![QScalar::zero(); b.dim()];
            want[b.index(l)] = QScalar::q_pow(k, root);
            e.coeff(format!("[z{zi}{zj}]"), format_vector(&b, &got));
            if got != want {
                e.mismatch(format!("[z{zi}{zj}] = {}, printed {}", format_vector(&b, &got), format_vector(&b, &want)));
            }
        }
    }
    Ok(e)
}

/// `V` embeds: the `I_{CP^{N-1}}` generators have zero class and the `z_i1`, `z_1i` classes form a basis.
pub fn v_embedding(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let mut e = CheckEntry::new(c.n, "v_embedding");
    let gens = c.cp_ideal_generators();
    for (name, f) in &gens {
        if c.v_coset(f)?.iter().any(|x| !x.is_zero()) {
            e.fail(format!("generator {name} has non-zero class"));
        }
    }
    let mut rows = Vec::new();
    for i in 2..=c.n {
        for (a, bb) in [(i, 1), (1, i)] {
            let v = c.v_coset(&c.z(a, bb))?;
            rows.push(v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect::<SparseVec>());
        }
    }
    let span = SubspaceBasis::span(c.basis.v_dim(), rows.iter());
    e.dim("ideal generators", gens.len());
    e.dim("span of z classes", span.dim());
    if span.dim() != c.basis.v_dim() {
        e.fail("z classes do not span V");
    }
    Ok(e)
}

/// `e+- <| z11 = e+-` and `e+- <| z_ij = 0` otherwise.
pub fn m_action_on_v(c: &Calculus) -> CheckEntry {
    let mut e = CheckEntry::new(c.n, "m_action_on_v");
    let b = c.basis;
    for k in 0..b.v_dim() {
        let l = b.v_label(k);
        for i in 1..=c.n {
            for j in 1..=c.n {
                let got = c.table.act(&b.unit(l), &c.z(i, j));
                let want = if (i, j) == (1, 1) { b.unit(l) } else { vec![QScalar::zero(); b.dim()] };
                if got != want {
                    e.fail(format!("{l} <| z{i}{j} = {}", format_vector(&b, &got)));
                }
            }
        }
    }
    e
}

/// Canonical framings of `dz_ij`: coinvariance, the inverse round trip, and the Leibniz rule on pairs.
pub fn framing(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let n = c.n;
    let mut e = CheckEntry::new(n, "canonical_framing");
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    for &(i, j) in &gens {
        let dz = c.exterior_d0(&c.z(i, j))?;
        if !c.framed_coaction_defect(&dz)?.is_empty() {
            e.fail(format!("s(dz{i}{j}) is not coinvariant"));
        }
        if c.frame_pairs(&c.framing_inverse(&dz))? != dz {
            e.fail(format!("framing inverse does not round-trip on dz{i}{j}"));
        }
    }
    let pairs: Vec<((usize, usize), (usize, usize))> = if n == 2 {
        gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).collect()
    } else {
        vec![((2, 1), (1, 2)), ((1, 1), (3, 1)), ((1, 3), (3, 2)), ((2, 2), (2, 1))]
    };
    for &((a, b), (cc, d)) in &pairs {
        let (m, k) = (c.z(a, b), c.z(cc, d));
        let lhs = c.exterior_d0(&c.gsys.mul(&m, &k))?;
        let mut rhs = c.right_act(&c.exterior_d0(&m)?, &k)?;
        rhs.add_scaled(&c.left_mul(&m, &c.exterior_d0(&k)?), &QScalar::one());
        if lhs != rhs {
            e.fail(format!("Leibniz rule fails on z{a}{b} z{cc}{d}"));
        }
    }
    e.dim("generators", gens.len());
    e.dim("leibniz pairs", pairs.len());
    Ok(e)
}

/// The `*`-map on framed one-forms: involutive, and `(dm)* = d(m*)` on generators.
pub fn star_map(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let n = c.n;
    let mut e = CheckEntry::new(n, "star_map");
    for i in 1..=n {
        for j in 1..=n {
            let m = c.z(i, j);
            let dm = c.exterior_d0(&m)?;
            let s = c.star_framed(&dm)?;
            if c.star_framed(&s)? != dm {
                e.fail(format!("star is not involutive on dz{i}{j}"));
            }
            if s != c.exterior_d0(&c.gsys.normal_form(&m.star()))? {
                e.fail(format!("(dz{i}{j})* != d(z{i}{j}*)"));
            }
        }
    }
    Ok(e)
}

/// `I^2` from the generating set: dimension, subcomodule property, comparison with the
/// printed spanning set (literal and corrected) and, for `N = 2`, with the three printed relations.
pub fn i2_entry(ctx: &Context) -> Result<CheckEntry, VerifyError> {
    let c = &ctx.calc;
    let n = c.n;
    let mut e = CheckEntry::new(n, "i2");
    let i2 = &ctx.i2;
    e.dim("I2", i2.dim());
    if i2.dim() != (n - 1) * (2 * n - 1) {
        e.fail(format!("dim I2 = {}, expected {}", i2.dim(), (n - 1) * (2 * n - 1)));
    }
    if let Some(w) = subcomodule_witness(c, i2, 2)? {
        e.fail(format!("I2 is not an H-subcomodule: {}", format_tensor(&c.basis, 2, &w)));
    }
    let corrected = i2_reference_corrected(n);
    e.dim("corrected spanning set", corrected.dim());
    if &corrected != i2 {
        e.fail("I2 differs from the corrected spanning set");
    }
    if n == 2 && i2 != &i2_cp1_reference() {
        e.fail("I2 differs from span{e+(x)e+, e-(x)e-, e+(x)e- + q^-2 e-(x)e+}");
    }
    let literal = i2_reference(n);
    e.dim("printed spanning set", literal.dim());
    if &literal != i2 {
        let w = i2.first_outside(&literal).or_else(|| literal.first_outside(i2));
        e.mismatch(format!(
            "printed spanning set differs; witness {}",
            w.map(|v| format_tensor(&c.basis, 2, &v)).unwrap_or_default()
        ));
    }
    for (k, r) in i2.rows.iter().enumerate() {
        e.coeff(format!("row {k}"), format_tensor(&c.basis, 2, r));
    }
    Ok(e)
}

/// Adding right multiples `g z_ab` to the generating set does not change `I^2`.
pub fn generating_set_independence(ctx: &Context) -> Result<CheckEntry, VerifyError> {
    let c = &ctx.calc;
    let mut e = CheckEntry::new(c.n, "i2_generating_set_independence");
    let mut gens = c.cp_ideal_generators();
    let extra: Vec<(String, NCPoly)> = gens
        .iter()
        .take(2)
        .flat_map(|(name, g)| {
            [(2, 1), (1, 2), (1, 1)].map(|(a, b)| (format!("{name}*z{a}{b}"), c.gsys.mul(g, &c.z(a, b))))
        })
        .collect();
    e.dim("extra generators", extra.len());
    gens.extend(extra);
    if i2_from_generators(c, &gens)? != ctx.i2 {
        e.fail("right multiples change the span");
    }
    Ok(e)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn vk_dimensions(ctx: &Context) -> CheckEntry {
    let n = ctx.n();
    let m = 2 * (n - 1);
    let mut e = CheckEntry::new(n, "vk_dimensions");
    for (k, d) in ctx.ext.dims().into_iter().enumerate() {
        e.dim(format!("V^{k}"), d);
        if d != binomial(m, k) {
            e.fail(format!("dim V^{k} = {d}, expected {}", binomial(m, k)));
        }
    }
    e
}

/// At `q = 1`: `I^2` becomes the symmetric tensors with the same dimension, every table entry
/// specialises without a pole, and `u^i_j` acts on `e+-` by `delta_ij`.
pub fn classical_limit(ctx: &Context) -> Result<CheckEntry, VerifyError> {
    let c = &ctx.calc;
    let one = Rat::from_integer(1.into());
    let d = c.basis.v_dim();
    let mut e = CheckEntry::new(c.n, "classical_limit").input("q = 1");
    let rows: Vec<SparseVec> = ctx.i2.rows.iter().map(|r| specialize(r, &one)).collect::<Result<_, _>>()?;
    let limit = SubspaceBasis::span(d * d, rows.iter());
    e.dim("I2 at q=1", limit.dim());
    if limit != symmetric_tensors(d) {
        e.fail("I2 at q = 1 is not the symmetric tensors");
    }
    let dense = |x: &[QScalar]| -> SparseVec {
        x.iter().enumerate().filter(|(_, y)| !y.is_zero()).map(|(k, y)| (k, y.clone())).collect()
    };
    for row in c.table.base.iter().chain(c.table.action.iter().flatten()) {
        if specialize(&dense(row), &one).is_err() {
            e.fail(format!("table entry {} has a pole at q = 1", format_vector(&c.basis, row)));
        }
    }
    for k in 0..d {
        let l = c.basis.v_label(k);
        for i in 1..=c.n {
            for j in 1..=c.n {
                let got = specialize(&dense(&c.table.act(&c.basis.unit(l), &NCPoly::u(c.g, i, j))), &one)?;
                let want = if i == j { dense(&c.basis.unit(l)) } else { SparseVec::new() };
                if got != want {
                    e.fail(format!("{l} <| u{i}{j} at q = 1 is not classical"));
                }
            }
        }
    }
    Ok(e)
}

/// The three-dimensional calculus on `C_q[SU_2]` as a framing calculus for `CP^1`.
pub fn woronowicz(c: &Calculus) -> Result<CheckEntry, VerifyError> {
    let mut e = CheckEntry::new(2, "woronowicz_cp1");
    let w = Woronowicz::build(&c.gsys, 3)?;
    let g = c.g;
    let b = c.basis;
    e.dim("quotient", w.model.quotient_dim);
    if w.model.quotient_dim != 3 {
        e.fail("quotient dimension is not 3");
    }
    let (ua, ub, uc, ud) = (NCPoly::u(g, 1, 1), NCPoly::u(g, 1, 2), NCPoly::u(g, 2, 1), NCPoly::u(g, 2, 2));
    let q = QScalar::q(2);
    let scaled = |l: Label, s: QScalar| -> Vec<QScalar> { b.unit(l).iter().map(|x| x * &s).collect() };
    let facts = [
        ("[ab]", w.table.coset_plus(&ua.mul(&ub)), scaled(Label::Minus(1), QScalar::one())),
        ("[cd]", w.table.coset_plus(&uc.mul(&ud)), scaled(Label::Plus(1), q.clone())),
        ("e+ <| a", w.table.act(&b.unit(Label::Plus(1)), &ua), scaled(Label::Plus(1), q.pow(-1))),
        ("e- <| a", w.table.act(&b.unit(Label::Minus(1)), &ua), scaled(Label::Minus(1), q.pow(-1))),
        ("e+ <| d", w.table.act(&b.unit(Label::Plus(1)), &ud), scaled(Label::Plus(1), q.clone())),
        ("e- <| d", w.table.act(&b.unit(Label::Minus(1)), &ud), scaled(Label::Minus(1), q.clone())),
    ];
    for (name, got, want) in facts {
        if got != want {
            e.fail(format!("{name} = {}, expected {}", format_vector(&b, &got), format_vector(&b, &want)));
        }
    }
    let images = w.generator_images()?;
    let span = SubspaceBasis::span(4, images.iter().map(|(_, v)| v));
    if span != i2_cp1_reference() || span != i2_from_generators(c, &c.cp_ideal_generators())? {
        e.fail("Woronowicz route gives a different I2");
    }
    let (p, m) = (b.v_index(Label::Plus(1)), b.v_index(Label::Minus(1)));
    let t = |x: usize, y: usize| x * 2 + y;
    let one_plus_q2 = QScalar::one() + QScalar::q_pow(2, 2);
    let printed: [(&str, SparseVec); 3] = [
        ("b^2", SparseVec::from([(t(m, m), -(&one_plus_q2 * &q))])),
        ("c^2", SparseVec::from([(t(p, p), -(&QScalar::q_pow(-5, 2) * &one_plus_q2))])),
        ("bc", SparseVec::from([(t(m, p), -q.clone()), (t(p, m), -QScalar::q_pow(3, 2))])),
    ];
    for ((name, got), (_, want)) in images.iter().zip(printed.iter()) {
        e.coeff(name.clone(), format_tensor(&b, 2, got));
        if got != want {
            e.mismatch(format!("{name}: derived {}, printed {}", format_tensor(&b, 2, got), format_tensor(&b, 2, want)));
        }
    }
    Ok(e)
}

/// Reversed-row expansion of `det_{N-1}` in `C_q[U_{N-1}]`:
/// `sum_pi (-q)^(-l(pi)) u^{N-1}_{pi(N-1)} ... u^1_{pi(1)} = det_{N-1}`. The printed form with
/// `(-q)^l(pi)` is compared as well and reported as a mismatch when it differs.
pub fn reversed_determinant(c: &Calculus) -> CheckEntry {
    let h = c.h;
    let m = h.size();
    let root = h.root();
    let mut e = CheckEntry::new(c.n, "determinant_reversed_rows");
    let det = quantum_determinant(h);
    let mut literal = NCPoly::zero(h);
    let mut inverse = NCPoly::zero(h);
    for pi in permutations(m) {
        // word u^m_{pi(m)} ... u^1_{pi(1)}
        let w = Word((0..m).rev().map(|r| h.u(r + 1, pi[r] + 1)).collect());
        let l = inversions(&pi) as i32;
        literal.add_term(w.clone(), &minus_q_pow(l, root));
        inverse.add_term(w, &minus_q_pow(-l, root));
    }
    if !c.hsys.equal(&inverse, &det) {
        e.fail("sum (-q)^(-l) u^{N-1}_{pi(N-1)} .. u^1_{pi(1)} differs from det_{N-1}");
    }
    if !c.hsys.equal(&literal, &det) {
        e.mismatch("printed (-q)^l(pi) expansion differs from det_{N-1}");
    }
    e
}

/// Relation tensors of the `I_{CP^{N-1}}` generators, labelled.
pub fn i2_generator_tensors(c: &Calculus) -> Result<Vec<(String, SparseVec)>, VerifyError> {
    let mut out = Vec::new();
    for (name, f) in c.cp_ideal_generators() {
        let v = restrict_to_v2(&c.basis, &relation_tensor(&c.table, &f), &name)?;
        out.push((name, v));
    }
    Ok(out)
}

/// Counts entries by status.
pub fn summary(report: &VerificationReport) -> (usize, usize, usize) {
    let mut s = (0, 0, 0);
    for e in &report.entries {
        match e.status {
            Status::Pass => s.0 += 1,
            Status::Fail => s.1 += 1,
            Status::Mismatch => s.2 += 1,
        }
    }
    s
}
