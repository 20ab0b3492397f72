//! Executable checks of the classical Grassmann-Cayley identities, each
//! producing a structured report.

use crate::cg_algebra::{MeetSide, OrderedBasis, PeanoSpace};
use crate::error::{Error, Result};
use crate::exterior::{extensor_span, make_extensor, ExtMonomial, Exterior, ExteriorElement, Vector};
use crate::linalg;
use crate::ring::{format_q, q, qi, Ring, Q};
use crate::tensor_power::{TensorPower, TensorPowerElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub identity: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Report {
    fn new(identity: &str, instance: String, lhs: String, rhs: String, equal: bool) -> Report {
        Report {
            identity: identity.to_string(),
            instance,
            lhs,
            rhs,
            equal,
        }
    }

    fn scalars(identity: &str, instance: String, lhs: &Q, rhs: &Q) -> Report {
        Report::new(identity, instance, format_q(lhs), format_q(rhs), lhs == rhs)
    }

    fn tensors(identity: &str, instance: String, lhs: &TensorPowerElement, rhs: &TensorPowerElement) -> Report {
        Report::new(identity, instance, lhs.to_string(), rhs.to_string(), lhs == rhs)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.equal { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} [{}] lhs = {} ; rhs = {}",
            self.identity, self.instance, self.lhs, self.rhs
        )
    }
}

fn show_vectors(vs: &[Vector]) -> String {
    vs.iter()
        .map(|v| format!("({})", v.iter().map(format_q).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn show_elements(xs: &[&ExteriorElement]) -> String {
    xs.iter().map(|x| format!("<{x}>")).collect::<Vec<_>>().join(" ")
}

fn scalar_part(x: &ExteriorElement) -> Q {
    x.coeff(ExtMonomial::UNIT)
}

fn join(n: usize, vs: &[Vector]) -> Result<ExteriorElement> {
    make_extensor(n, vs)
}

/// Permutations of 0..r with their signs.
fn permutations(r: usize) -> Vec<(i32, Vec<usize>)> {
    if r == 0 {
        return vec![(1, Vec::new())];
    }
    let mut out = Vec::new();
    for (s, p) in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, r - 1);
            // inserting the largest element passes over p.len() - pos others
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((sign, q));
        }
    }
    out
}

/// Collinearity of the three side intersections against concurrency of the
/// three vertex joins of two triangles in the plane.
pub fn verify_desargues(p: &[Vector; 3], pp: &[Vector; 3]) -> Result<Report> {
    for v in p.iter().chain(pp) {
        if v.len() != 3 {
            return Err(Error::DimensionMismatch(3, v.len()));
        }
    }
    let ps = PeanoSpace::standard(3);
    let line = |a: &Vector, b: &Vector| join(3, &[a.clone(), b.clone()]);
    let point = |i: usize, j: usize| -> Result<ExteriorElement> {
        ps.meet(&line(&p[i], &p[j])?, &line(&pp[i], &pp[j])?, MeetSide::Left)
    };
    let x = point(0, 1)?.wedge(&point(0, 2)?)?.wedge(&point(1, 2)?)?;
    let lhs = ps.bracket_of(&x);
    let joins = [line(&p[0], &pp[0])?, line(&p[1], &pp[1])?, line(&p[2], &pp[2])?];
    let concurrency = scalar_part(&ps.meet_all(&joins)?);
    let rhs = -(ps.bracket(p)? * ps.bracket(pp)? * concurrency);
    let instance = format!("{} | {}", show_vectors(p), show_vectors(pp));
    Ok(Report::scalars("desargues", instance, &lhs, &rhs))
}

/// (a₁ ∨ ⋯ ∨ a_r) ∧ B₁ ∧ ⋯ ∧ B_r against the signed sum over permutations of
/// products of the scalar meets aσ(i) ∧ Bᵢ.
pub fn verify_alternative(n: usize, a: &[Vector], b: &[ExteriorElement]) -> Result<Report> {
    let r = a.len();
    if b.len() != r || r == 0 {
        return Err(Error::InvalidArgument("need r vectors and r covectors".into()));
    }
    for x in b {
        if x.dim() != n || x.homogeneous_step(n - 1)? != n - 1 {
            return Err(Error::NotHomogeneous);
        }
    }
    let ps = PeanoSpace::standard(n);
    let mut chain = vec![join(n, a)?];
    chain.extend(b.iter().cloned());
    let lhs = scalar_part(&ps.meet_all(&chain)?);
    let vectors: Vec<ExteriorElement> = a.iter().map(|v| Exterior::from_vector(v)).collect();
    let mut rhs = qi(0);
    for (s, sigma) in permutations(r) {
        let mut prod = qi(1);
        for (i, bi) in b.iter().enumerate() {
            prod *= scalar_part(&ps.meet(&vectors[sigma[i]], bi, MeetSide::Left)?);
        }
        rhs += prod.signed(s);
    }
    let instance = format!("n={n} r={r} a={} B={}", show_vectors(a), show_elements(&b.iter().collect::<Vec<_>>()));
    Ok(Report::scalars("alternative", instance, &lhs, &rhs))
}

/// Compositions (i₁, …, i_r) of `s` with 0 ≤ iⱼ ≤ qⱼ.
fn bounded_compositions(s: usize, q: &[usize]) -> Vec<Vec<usize>> {
    if q.is_empty() {
        return if s == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=q[0].min(s) {
        for mut rest in bounded_compositions(s - first, &q[1..]) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// (A ∨ B) ∧ (C₁ ∧ ⋯ ∧ C_r) against A ∧ Σ ε Σ_(B) (B₍₁₎ ∨ C₁) ∧ ⋯ ∧ (B₍ᵣ₎ ∨ C_r).
pub fn verify_distributive(
    n: usize,
    a: &ExteriorElement,
    b: &ExteriorElement,
    c: &[ExteriorElement],
) -> Result<Report> {
    let s = a.homogeneous_step(0)?;
    let k = b.homogeneous_step(0)?;
    let mut q = Vec::with_capacity(c.len());
    for cj in c {
        let st = cj.homogeneous_step(0)?;
        if st == 0 || st >= n {
            return Err(Error::InvalidArgument("each C must have step strictly between 0 and n".into()));
        }
        q.push(n - st);
    }
    if c.is_empty() || q.iter().sum::<usize>() != s + k {
        return Err(Error::InvalidArgument("step(A) + step(B) must equal the sum of costeps".into()));
    }
    let ps = PeanoSpace::standard(n);
    let lhs = scalar_part(&ps.meet(&a.wedge(b)?, &ps.meet_all(c)?, MeetSide::Left)?);
    let mut rhs = qi(0);
    for i in bounded_compositions(s, &q) {
        let mut e = 0usize;
        for h in 0..q.len() {
            for kk in 0..h {
                e += i[h] * (q[kk] - i[kk]);
            }
        }
        let eps = if e % 2 == 0 { 1 } else { -1 };
        let parts: Vec<usize> = q.iter().zip(&i).map(|(qj, ij)| qj - ij).collect();
        for (key, coeff) in b.slice(&parts).terms() {
            let joined = key
                .folds()
                .iter()
                .zip(c)
                .map(|(f, cj)| Exterior::monomial(n, *f, qi(1)).wedge(cj))
                .collect::<Result<Vec<_>>>()?;
            let inner = ps.meet(a, &ps.meet_all(&joined)?, MeetSide::Left)?;
            rhs += (scalar_part(&inner) * coeff).signed(eps);
        }
    }
    let mut all = vec![a, b];
    all.extend(c.iter());
    let instance = format!("n={n} steps A={s} B={k} q={q:?} {}", show_elements(&all));
    Ok(Report::scalars("distributive", instance, &lhs, &rhs))
}

fn subspace_dim(vs: &[Vector]) -> usize {
    linalg::rank(vs)
}

/// ◇₃₂^{(q)}◇₂₁^{(p)} and ◇₂₁^{(p)}◇₃₂^{(q)} agree on A ⊗ B ⊗ C when A
/// divides C; the supporting vanishing ◇₃₁(A⊗B⊗C) = 0 is part of the check.
pub fn verify_modular(a: &ExteriorElement, b: &ExteriorElement, c: &ExteriorElement) -> Result<Report> {
    if !crate::tensor_power::contains(a, c)? {
        return Err(Error::InvalidArgument("A does not divide C".into()));
    }
    let (sa, sb, sc) = (extensor_span(a)?, extensor_span(b)?, extensor_span(c)?);
    let cat = |x: &[Vector], y: &[Vector]| -> Vec<Vector> { x.iter().chain(y).cloned().collect() };
    // ρ(Ā/(Ā⌢B̄)) = dim(Ā ⌣ B̄) − dim B̄, ρ(B̄/(B̄⌢C̄)) = dim(B̄ ⌣ C̄) − dim C̄
    let p = subspace_dim(&cat(&sa, &sb)) - sb.len();
    let q = subspace_dim(&cat(&sb, &sc)) - sc.len();
    let t = TensorPower::pure(&[a.clone(), b.clone(), c.clone()])?;
    let lhs = t.diamond(p, 2, 1)?.diamond(q, 3, 2)?;
    let rhs = t.diamond(q, 3, 2)?.diamond(p, 2, 1)?;
    let vanishing = t.diamond(1, 3, 1)?.is_zero();
    let instance = format!("p={p} q={q} {}", show_elements(&[a, b, c]));
    let mut report = Report::tensors("modular", instance, &lhs, &rhs);
    report.equal &= vanishing;
    if !vanishing {
        report.rhs.push_str(" ; diamond_31 does not vanish");
    }
    Ok(report)
}

/// A word of simple geometric products, applied right to left; folds are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OperatorWord(pub Vec<(usize, usize)>);

impl OperatorWord {
    pub fn apply(&self, t: &TensorPowerElement) -> Result<TensorPowerElement> {
        let mut r = t.clone();
        for &(dest, src) in self.0.iter().rev() {
            r = r.diamond(1, dest, src)?;
        }
        Ok(r)
    }
}

/// Linear combination of operator words.
pub type OperatorSum = Vec<(i64, OperatorWord)>;

pub fn apply_sum(ops: &OperatorSum, t: &TensorPowerElement) -> Result<TensorPowerElement> {
    let mut r = TensorPower::zero(t.m(), t.dim());
    for (c, w) in ops {
        r = r.add(&w.apply(t)?.scale(&qi(*c)))?;
    }
    Ok(r)
}

/// Moves every factor with source fold `zero` to the right end using
/// [◇ᵢⱼ, ◇ₕₖ] = δⱼₕ◇ᵢₖ − δₖᵢ◇ₕⱼ. Returns the words free of such factors and
/// the queue words, which end with one.
pub fn capelli_expansion(word: &OperatorWord, zero: usize) -> (OperatorSum, OperatorSum) {
    let mut pending: Vec<(i64, Vec<(usize, usize)>)> = vec![(1, word.0.clone())];
    let mut main: std::collections::BTreeMap<OperatorWord, i64> = Default::default();
    let mut queues: std::collections::BTreeMap<OperatorWord, i64> = Default::default();
    while let Some((c, w)) = pending.pop() {
        // first position holding a zero-source factor followed by another kind
        let pos = (0..w.len().saturating_sub(1)).find(|&i| w[i].1 == zero && w[i + 1].1 != zero);
        match pos {
            None => {
                let target = if w.last().is_some_and(|f| f.1 == zero) { &mut queues } else { &mut main };
                *target.entry(OperatorWord(w)).or_insert(0) += c;
            }
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                pending.push((c, swapped));
                // [x, y] = δ(x.src, y.dest) ◇(x.dest, y.src) − δ(y.src, x.dest) ◇(y.dest, x.src)
                if x.1 == y.0 {
                    let mut v = w.clone();
                    v.splice(i..i + 2, [(x.0, y.1)]);
                    pending.push((c, v));
                }
                if y.1 == x.0 {
                    let mut v = w.clone();
                    v.splice(i..i + 2, [(y.0, x.1)]);
                    pending.push((-c, v));
                }
            }
        }
    }
    let collect = |m: std::collections::BTreeMap<OperatorWord, i64>| -> OperatorSum {
        m.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect()
    };
    (collect(main), collect(queues))
}

/// The permanent per(◇_{j'ₛ iₜ}) as an operator sum.
pub fn permanent(sources: &[usize], dests: &[usize]) -> OperatorSum {
    permutations(sources.len())
        .into_iter()
        .map(|(_, sigma)| {
            let w = dests
                .iter()
                .enumerate()
                .rev()
                .map(|(s, &d)| (d, sources[sigma[s]]))
                .collect();
            (1, OperatorWord(w))
        })
        .collect()
}

/// The permanental Capelli identity on folds 0, 1..r, 1'..r' (stored as
/// folds 1, 2..r+1, r+2..2r+1): the virtual form equals the permanent plus
/// the Capelli queues on `t`, the non-queue part of the expansion equals the
/// permanent symbolically, and the queues vanish when fold 0 is the unit.
pub fn verify_capelli(r: usize, t: &TensorPowerElement) -> Result<Report> {
    if t.m() != 2 * r + 1 || r == 0 {
        return Err(Error::FoldMismatch(2 * r + 1, t.m()));
    }
    let zero = 1;
    let sources: Vec<usize> = (2..=r + 1).collect();
    let dests: Vec<usize> = (r + 2..=2 * r + 1).collect();
    // ◇_{r'0} ⋯ ◇_{1'0} ◇_{0r} ⋯ ◇_{01}
    let mut w: Vec<(usize, usize)> = dests.iter().rev().map(|&d| (d, zero)).collect();
    w.extend(sources.iter().rev().map(|&s| (zero, s)));
    let virtual_form = OperatorWord(w);
    let (main, queues) = capelli_expansion(&virtual_form, zero);
    let per = permanent(&sources, &dests);
    let symbolic = normalize_sum(&main) == normalize_sum(&per);
    let lhs = virtual_form.apply(t)?;
    let per_value = apply_sum(&per, t)?;
    let queue_value = apply_sum(&queues, t)?;
    let rhs = per_value.add(&queue_value)?;
    let unit_zero_fold = t.terms().all(|(k, _)| k.fold(zero).is_unit());
    let queues_ok = !unit_zero_fold || queue_value.is_zero();
    let fold0 = if unit_zero_fold { "unit" } else { "nonunit" };
    let instance = format!("r={r} fold0={fold0} terms={} queues={}", t.len(), queues.len());
    let mut report = Report::tensors("capelli", instance, &lhs, &rhs);
    report.equal &= symbolic && queues_ok;
    if !symbolic {
        report.rhs.push_str(" ; expansion differs from the permanent");
    }
    if !queues_ok {
        report.rhs.push_str(" ; queues do not vanish");
    }
    Ok(report)
}

fn commute(x: (usize, usize), y: (usize, usize)) -> bool {
    x.1 != y.0 && y.1 != x.0
}

/// Sums words after sorting those whose factors pairwise commute.
fn normalize_sum(s: &OperatorSum) -> Vec<(OperatorWord, i64)> {
    let mut m: std::collections::BTreeMap<OperatorWord, i64> = Default::default();
    for (c, w) in s {
        let mut w = w.clone();
        let all_commute = w.0.iter().enumerate().all(|(i, &x)| w.0[i + 1..].iter().all(|&y| commute(x, y)));
        if all_commute {
            w.0.sort();
        }
        *m.entry(w).or_insert(0) += c;
    }
    m.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn star_tensor(basis: &OrderedBasis, t: &TensorPowerElement) -> Result<TensorPowerElement> {
    let n = basis.dim();
    let mut r = TensorPower::zero(t.m(), n);
    for (k, c) in t.terms() {
        let folds = k
            .folds()
            .iter()
            .map(|f| basis.hodge(&Exterior::monomial(n, *f, qi(1))))
            .collect::<Result<Vec<_>>>()?;
        r = r.add(&TensorPower::pure(&folds)?.scale(c))?;
    }
    Ok(r)
}

/// (⋆⊗⋆)◇₂₁^{(h)}(A⊗B) = (−1)^{h(a+b−n)} ◇₁₂^{(h)}(⋆A ⊗ ⋆B).
pub fn verify_hodge_diamond(
    a: &ExteriorElement,
    b: &ExteriorElement,
    h: usize,
    basis: &OrderedBasis,
) -> Result<Report> {
    let n = basis.dim();
    if a.dim() != n || b.dim() != n {
        return Err(Error::DimensionMismatch(n, a.dim().max(b.dim())));
    }
    let (sa, sb) = (a.homogeneous_step(0)?, b.homogeneous_step(0)?);
    let t = TensorPower::pure(&[a.clone(), b.clone()])?;
    let lhs = star_tensor(basis, &t.diamond(h, 2, 1)?)?;
    let sign = if (h * (sa + sb + n)) % 2 == 0 { 1 } else { -1 };
    let rhs = star_tensor(basis, &t)?.diamond(h, 1, 2)?.scale(&qi(sign));
    let instance = format!("h={h} F=<{}> {}", basis.top(), show_elements(&[a, b]));
    Ok(Report::tensors("hodge_diamond", instance, &lhs, &rhs))
}

// Seeded instance generators.

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Q {
    let num = rng.gen_range(-5i64..=5);
    let den = if rng.gen_bool(0.25) { rng.gen_range(2i64..=3) } else { 1 };
    q(num, den)
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Wedge of k random vectors; may be zero.
pub fn random_extensor(rng: &mut impl Rng, n: usize, k: usize) -> ExteriorElement {
    let vs: Vec<Vector> = (0..k).map(|_| random_vector(rng, n)).collect();
    make_extensor(n, &vs).unwrap()
}

pub fn random_nonzero_extensor(rng: &mut impl Rng, n: usize, k: usize) -> ExteriorElement {
    loop {
        let e = random_extensor(rng, n, k);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn random_basis(rng: &mut impl Rng, n: usize) -> OrderedBasis {
    loop {
        let vs: Vec<Vector> = (0..n).map(|_| random_vector(rng, n)).collect();
        if let Ok(b) = OrderedBasis::new(vs) {
            return b;
        }
    }
}

fn scaled(v: &Vector, c: &Q) -> Vector {
    v.iter().map(|x| x * c).collect()
}

fn combo(u: &Vector, v: &Vector, a: &Q, b: &Q) -> Vector {
    u.iter().zip(v).map(|(x, y)| x * a + y * b).collect()
}

/// Named suites with their instance families.
pub const SUITES: [&str; 6] = ["desargues", "alternative", "distributive", "modular", "capelli", "hodge"];

pub fn desargues_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let p = [random_vector(&mut g, 3), random_vector(&mut g, 3), random_vector(&mut g, 3)];
        let pp = [random_vector(&mut g, 3), random_vector(&mut g, 3), random_vector(&mut g, 3)];
        out.push(verify_desargues(&p, &pp)?);
    }
    // constructed configurations
    let v = |g: &mut ChaCha8Rng| random_vector(g, 3);
    let nz = |g: &mut ChaCha8Rng| loop {
        let c = random_rational(g);
        if !c.is_zero() {
            return c;
        }
    };
    for _ in 0..2 {
        // perspective from a center o: each primed vertex on the line through o
        let o = v(&mut g);
        let p = [v(&mut g), v(&mut g), v(&mut g)];
        let pp = [0, 1, 2].map(|i| {
            let (a, b) = (nz(&mut g), nz(&mut g));
            combo(&p[i], &o, &a, &b)
        });
        out.push(verify_desargues(&p, &pp)?);
    }
    // first triangle degenerate
    let (x, y) = (v(&mut g), v(&mut g));
    let (a, b) = (nz(&mut g), nz(&mut g));
    let p = [x.clone(), y.clone(), combo(&x, &y, &a, &b)];
    let pp = [v(&mut g), v(&mut g), v(&mut g)];
    out.push(verify_desargues(&p, &pp)?);
    // second triangle degenerate
    let (x, y) = (v(&mut g), v(&mut g));
    let c = nz(&mut g);
    let p = [v(&mut g), v(&mut g), v(&mut g)];
    let pp = [x.clone(), scaled(&x, &c), y];
    out.push(verify_desargues(&p, &pp)?);
    // shared vertex
    let p = [v(&mut g), v(&mut g), v(&mut g)];
    let c = nz(&mut g);
    let pp = [scaled(&p[0], &c), v(&mut g), v(&mut g)];
    out.push(verify_desargues(&p, &pp)?);
    Ok(out)
}

pub fn alternative_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    for n in 2..=4 {
        for r in 1..=n.min(3) {
            for _ in 0..trials {
                let a: Vec<Vector> = (0..r).map(|_| random_vector(&mut g, n)).collect();
                let b: Vec<ExteriorElement> = (0..r).map(|_| random_extensor(&mut g, n, n - 1)).collect();
                out.push(verify_alternative(n, &a, &b)?);
            }
        }
    }
    // dual basis covectors: both sides reduce to a bracket of the a's
    for n in 2..=3 {
        let a: Vec<Vector> = (0..n).map(|_| random_vector(&mut g, n)).collect();
        let b: Vec<ExteriorElement> = (1..=n)
            .map(|i| Exterior::monomial(n, ExtMonomial::top(n).minus(ExtMonomial::single(i)), qi(1)))
            .collect();
        out.push(verify_alternative(n, &a, &b)?);
    }
    Ok(out)
}

/// The three instance families: r = 1; n = 3 with two point-covectors; n = 4
/// with costeps (2, 1).
pub fn distributive_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        // r = 1: step(A) + step(B) = costep(C)
        let n = 4;
        let a = random_nonzero_extensor(&mut g, n, 1);
        let b = random_nonzero_extensor(&mut g, n, 1);
        let c = random_nonzero_extensor(&mut g, n, 2);
        out.push(verify_distributive(n, &a, &b, &[c])?);
    }
    for _ in 0..trials {
        let n = 3;
        let a = random_nonzero_extensor(&mut g, n, 1);
        let b = random_nonzero_extensor(&mut g, n, 1);
        let c = [random_nonzero_extensor(&mut g, n, 2), random_nonzero_extensor(&mut g, n, 2)];
        out.push(verify_distributive(n, &a, &b, &c)?);
    }
    for _ in 0..trials {
        let n = 4;
        let a = random_nonzero_extensor(&mut g, n, 2);
        let b = random_nonzero_extensor(&mut g, n, 1);
        let c = [random_nonzero_extensor(&mut g, n, 2), random_nonzero_extensor(&mut g, n, 3)];
        out.push(verify_distributive(n, &a, &b, &c)?);
    }
    Ok(out)
}

/// Random triples with A dividing C in dimension 4.
pub fn modular_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let n = 4;
    let mut out = Vec::new();
    while out.len() < trials {
        let sa = g.gen_range(1..=2);
        let sc = g.gen_range(sa..=n);
        let sb = g.gen_range(1..=n);
        let base: Vec<Vector> = (0..sc).map(|_| random_vector(&mut g, n)).collect();
        let c = make_extensor(n, &base)?;
        let a = make_extensor(n, &base[..sa])?;
        // B sometimes shares a vector with C to vary the intersections
        let mut bv: Vec<Vector> = (0..sb).map(|_| random_vector(&mut g, n)).collect();
        if g.gen_bool(0.5) {
            bv[0] = base[sc - 1].clone();
        }
        let b = make_extensor(n, &bv)?;
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        out.push(verify_modular(&a, &b, &c)?);
    }
    Ok(out)
}

fn capelli_tensor(rng: &mut ChaCha8Rng, n: usize, r: usize, unit_zero: bool) -> Result<TensorPowerElement> {
    let mut folds = vec![if unit_zero {
        Exterior::one(n)
    } else {
        random_nonzero_extensor(rng, n, 1)
    }];
    for _ in 0..r {
        folds.push(random_nonzero_extensor(rng, n, 1));
    }
    for _ in 0..r {
        folds.push(random_nonzero_extensor(rng, n, n - 1));
    }
    TensorPower::pure(&folds)
}

pub fn capelli_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let mut out = Vec::new();
    for r in 1..=2 {
        for unit_zero in [true, false] {
            for _ in 0..trials {
                let t = capelli_tensor(&mut g, 3, r, unit_zero)?;
                out.push(verify_capelli(r, &t)?);
            }
        }
    }
    Ok(out)
}

/// Exhaustive canonical pairs in dimension 3 for the given basis, all h.
pub fn hodge_canonical_reports(basis: &OrderedBasis) -> Result<Vec<Report>> {
    let n = basis.dim();
    let mut out = Vec::new();
    for ma in 0..(1u64 << n) {
        for mb in 0..(1u64 << n) {
            let a = basis.canonical(ExtMonomial::from_mask(ma));
            let b = basis.canonical(ExtMonomial::from_mask(mb));
            for h in 0..=n {
                out.push(verify_hodge_diamond(&a, &b, h, basis)?);
            }
        }
    }
    Ok(out)
}

pub fn hodge_suite(seed: u64, trials: usize) -> Result<Vec<Report>> {
    let mut g = rng(seed);
    let mut out = hodge_canonical_reports(&OrderedBasis::standard(3))?;
    let basis = random_basis(&mut g, 3);
    out.extend(hodge_canonical_reports(&basis)?);
    for _ in 0..trials {
        let n = 4;
        let basis = random_basis(&mut g, n);
        let (sa, sb) = (g.gen_range(0..=n), g.gen_range(0..=n));
        let a = random_extensor(&mut g, n, sa);
        let b = random_extensor(&mut g, n, sb);
        let h = g.gen_range(0..=sa);
        out.push(verify_hodge_diamond(&a, &b, h, &basis)?);
    }
    Ok(out)
}

/// Runs a named suite (or "all") with its default instance counts.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<Report>> {
    match name {
        "desargues" => desargues_suite(seed, 100),
        "alternative" => alternative_suite(seed, 10),
        "distributive" => distributive_suite(seed, 10),
        "modular" => modular_suite(seed, 50),
        "capelli" => capelli_suite(seed, 5),
        "hodge" => hodge_suite(seed, 100),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, seed)?);
            }
            Ok(out)
        }
        other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
    }
}

pub fn render_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.to_string());
        s.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.equal).count();
    s.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
    s
}

pub fn render_json(reports: &[Report]) -> String {
    let failed = reports.iter().filter(|r| !r.equal).count();
    serde_json::to_string_pretty(&serde_json::json!({
        "checks": reports.len(),
        "failed": failed,
        "reports": reports,
    }))
    .expect("reports serialize")
}
