//! The randomized invariant suite behind `selftest` and the acceptance
//! tests: deterministic seeded generators for every value family, plus one
//! runner per acceptance criterion.
//!
//! All checks are exact; a criterion fails on the first mismatch and reports
//! what broke. Generators that can produce irrational lattice crossings are
//! retried, as those inputs are outside the rational-only engine by design.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::c00::{self, C00TensorExpr, FinSuppMap, Index, RieszElement};
use crate::dsl;
use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Polynomial, Rational};
use crate::finitedim::{factor_bimorphism, matrix_sup, FiniteMatrix, FiniteVector};
use crate::pplattice::PiecewisePoly;
use crate::tensorlattice::{
    counterexample_h, refute_h, verify_h_dominated, Axis, LatticeExpr, SupInfForm, TensorSum,
};

pub type SuiteRng = ChaCha8Rng;

/// Fixed seed for the acceptance run; `selftest --seed` can override it.
pub const DEFAULT_SEED: u64 = 20260824;

/// How many times a generator may be retried around irrational crossings
/// before the criterion is declared failed.
const MAX_RETRIES: usize = 1000;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_1(seed),
        criterion_2(seed),
        criterion_3(seed),
        criterion_4(seed),
        criterion_5(seed),
        criterion_6(seed),
        criterion_7(seed),
    ]
}

fn report(name: &'static str, outcome: Result<String>) -> CriterionReport {
    match outcome {
        Ok(detail) => CriterionReport {
            name,
            passed: true,
            detail,
        },
        Err(e) => CriterionReport {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn fail(msg: String) -> Error {
    Error::InternalConsistency(msg)
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

pub fn rng_for(seed: u64, stream: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A rational with numerator magnitude at most `max` and denominator in 1..=4.
fn gen_rat(rng: &mut SuiteRng, max: i64) -> Rational {
    let den = rng.gen_range(1..=4i64);
    let num = rng.gen_range(-(max * den)..=max * den);
    Rational::new(num.into(), den.into())
}

fn gen_nonneg_rat(rng: &mut SuiteRng, max: i64) -> Rational {
    let den = rng.gen_range(1..=4i64);
    let num = rng.gen_range(0..=max * den);
    Rational::new(num.into(), den.into())
}

/// A positive step in quarters, at most 3.
fn gen_step(rng: &mut SuiteRng) -> Rational {
    Rational::new(rng.gen_range(1..=12i64).into(), 4.into())
}

fn gen_poly(rng: &mut SuiteRng, max_deg: usize) -> Polynomial {
    // Bias toward low degrees: high-degree pieces almost always cross each
    // other at irrational points, and those draws are discarded anyway.
    let deg = rng.gen_range(0..=max_deg).min(rng.gen_range(0..=max_deg));
    Polynomial::from_coeffs((0..=deg).map(|_| gen_rat(rng, 10)).collect())
}

fn gen_breakpoints(rng: &mut SuiteRng, pieces: usize) -> Vec<Rational> {
    let mut bps = vec![rat_int(0)];
    for _ in 1..pieces {
        let next = bps.last().unwrap() + gen_step(rng);
        bps.push(next);
    }
    bps
}

/// A random continuous piecewise polynomial; continuity is arranged by
/// shifting each new piece's constant term to match the previous value.
pub fn gen_pp(rng: &mut SuiteRng, max_pieces: usize, max_deg: usize) -> PiecewisePoly {
    let n = rng.gen_range(1..=max_pieces).min(rng.gen_range(1..=max_pieces));
    let bps = gen_breakpoints(rng, n);
    let mut pieces: Vec<Polynomial> = vec![gen_poly(rng, max_deg)];
    for i in 1..n {
        let q = gen_poly(rng, max_deg);
        let t = &bps[i];
        let shift = pieces[i - 1].eval(t) - q.eval(t);
        pieces.push(&q + &Polynomial::constant(shift));
    }
    PiecewisePoly::new(bps, pieces).unwrap()
}

/// A random member of the principal ideal E_x: f(0) = 0, affine tail,
/// continuous throughout.
pub fn gen_ideal_member(rng: &mut SuiteRng, max_pieces: usize, max_deg: usize) -> PiecewisePoly {
    let n = rng.gen_range(1..=max_pieces);
    let bps = gen_breakpoints(rng, n);
    let mut pieces: Vec<Polynomial> = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 && n == 1 {
            pieces.push(Polynomial::monomial(gen_rat(rng, 5), 1));
        } else if i == 0 {
            let deg = rng.gen_range(1..=max_deg);
            let mut coeffs = vec![rat_int(0)];
            coeffs.extend((1..=deg).map(|_| gen_rat(rng, 5)));
            pieces.push(Polynomial::from_coeffs(coeffs));
        } else if i == n - 1 {
            let d = gen_rat(rng, 5);
            let t = &bps[i];
            let v = pieces[i - 1].eval(t);
            pieces.push(Polynomial::from_coeffs(vec![&v - &(&d * t), d]));
        } else {
            let q = gen_poly(rng, max_deg);
            let t = &bps[i];
            let shift = pieces[i - 1].eval(t) - q.eval(t);
            pieces.push(&q + &Polynomial::constant(shift));
        }
    }
    PiecewisePoly::new(bps, pieces).unwrap()
}

fn gen_tensor_sum(rng: &mut SuiteRng, max_terms: usize, max_pieces: usize) -> TensorSum {
    let n = rng.gen_range(0..=max_terms);
    TensorSum::new(
        (0..n)
            .map(|_| (gen_pp(rng, max_pieces, 2), gen_pp(rng, max_pieces, 2)))
            .collect(),
    )
}

/// A candidate in sup-inf normal form whose factors all lie in their ideals.
pub fn gen_candidate(rng: &mut SuiteRng) -> SupInfForm {
    let rows = rng.gen_range(1..=3);
    let form = (0..rows)
        .map(|_| {
            let entries = rng.gen_range(1..=3);
            (0..entries)
                .map(|_| {
                    let terms = rng.gen_range(0..=3);
                    TensorSum::new(
                        (0..terms)
                            .map(|_| {
                                (gen_ideal_member(rng, 3, 3), gen_ideal_member(rng, 3, 3))
                            })
                            .collect(),
                    )
                })
                .collect()
        })
        .collect();
    SupInfForm::new(form).unwrap()
}

fn gen_tree(rng: &mut SuiteRng, depth: usize) -> LatticeExpr {
    if depth == 0 {
        return LatticeExpr::leaf(gen_tensor_sum(rng, 2, 2));
    }
    match rng.gen_range(0..7) {
        0 => LatticeExpr::leaf(gen_tensor_sum(rng, 2, 2)),
        1 => LatticeExpr::Sum(
            Box::new(gen_tree(rng, depth - 1)),
            Box::new(gen_tree(rng, depth - 1)),
        ),
        2 => LatticeExpr::Join(
            Box::new(gen_tree(rng, depth - 1)),
            Box::new(gen_tree(rng, depth - 1)),
        ),
        3 => LatticeExpr::Meet(
            Box::new(gen_tree(rng, depth - 1)),
            Box::new(gen_tree(rng, depth - 1)),
        ),
        4 => LatticeExpr::Negate(Box::new(gen_tree(rng, depth - 1))),
        5 => LatticeExpr::Scale(gen_rat(rng, 3), Box::new(gen_tree(rng, depth - 1))),
        _ => LatticeExpr::Abs(Box::new(gen_tree(rng, depth - 1))),
    }
}

const INDEX_POOL: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "i0"];

fn gen_rat_map(rng: &mut SuiteRng) -> FinSuppMap<Rational> {
    let n = rng.gen_range(0..=4);
    FinSuppMap::from_entries((0..n).map(|_| {
        let key = INDEX_POOL[rng.gen_range(0..INDEX_POOL.len())];
        (Index::new(key), gen_rat(rng, 10))
    }))
}

fn gen_pp_map(rng: &mut SuiteRng, nonempty: bool) -> FinSuppMap<PiecewisePoly> {
    loop {
        let lo = usize::from(nonempty);
        let n = rng.gen_range(lo..=3);
        let m = FinSuppMap::from_entries((0..n).map(|_| {
            let key = INDEX_POOL[rng.gen_range(0..INDEX_POOL.len())];
            (Index::new(key), gen_pp(rng, 3, 2))
        }));
        // Zero values get dropped, so a draw can come out empty; the empty
        // map prints without element-type information and is generated only
        // on the rational side.
        if !nonempty || !m.is_empty() {
            return m;
        }
    }
}

fn gen_vector(rng: &mut SuiteRng, max_len: usize) -> FiniteVector {
    let n = rng.gen_range(1..=max_len);
    FiniteVector::new((0..n).map(|_| gen_rat(rng, 10)).collect())
}

fn gen_matrix(rng: &mut SuiteRng, rows: usize, cols: usize) -> FiniteMatrix {
    FiniteMatrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| gen_rat(rng, 10)).collect(),
    )
    .unwrap()
}

/// Runs `attempt` until it produces a value, retrying only on irrational
/// crossings; any other error is fatal.
fn with_retry<T>(mut attempt: impl FnMut() -> Result<T>) -> Result<T> {
    for _ in 0..MAX_RETRIES {
        match attempt() {
            Ok(v) => return Ok(v),
            Err(Error::IrrationalCrossing { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(fail("generator retry budget exhausted".into()))
}

// ---------------------------------------------------------------------------
// Criterion 1: vector-lattice laws on random triples
// ---------------------------------------------------------------------------

fn criterion_1(seed: u64) -> CriterionReport {
    report("vector-lattice laws", criterion_1_inner(seed))
}

fn criterion_1_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 1);
    for case in 0..500 {
        with_retry(|| {
            let f = gen_pp(&mut rng, 5, 4);
            let g = gen_pp(&mut rng, 5, 4);
            let h = gen_pp(&mut rng, 5, 4);
            let lambda = gen_rat(&mut rng, 10);
            check_lattice_laws(&f, &g, &h, &lambda)
                .map_err(|e| relabel(e, &format!("triple {case}")))
        })?;
    }
    Ok("500 random triples satisfied all seven Riesz identities".into())
}

/// Adds context to a law failure but keeps irrational crossings retryable.
fn relabel(e: Error, what: &str) -> Error {
    match e {
        keep @ Error::IrrationalCrossing { .. } => keep,
        other => fail(format!("{what}: {other}")),
    }
}

fn check_lattice_laws(
    f: &PiecewisePoly,
    g: &PiecewisePoly,
    h: &PiecewisePoly,
    lambda: &Rational,
) -> Result<()> {
    let demand = |ok: bool, law: &str| {
        if ok {
            Ok(())
        } else {
            Err(fail(format!("law failed: {law}")))
        }
    };
    demand(f.join(g)? == g.join(f)?, "f \\/ g = g \\/ f")?;
    demand(
        f.join(g)?.join(h)? == f.join(&g.join(h)?)?,
        "(f \\/ g) \\/ h = f \\/ (g \\/ h)",
    )?;
    demand(
        f.join(g)?.add(&f.meet(g)?) == f.add(g),
        "f \\/ g + f /\\ g = f + g",
    )?;
    demand(
        f.join(g)?.add(h) == f.add(h).join(&g.add(h))?,
        "(f \\/ g) + h = (f + h) \\/ (g + h)",
    )?;
    demand(
        f.meet(&g.join(h)?)? == f.meet(g)?.join(&f.meet(h)?)?,
        "f /\\ (g \\/ h) = (f /\\ g) \\/ (f /\\ h)",
    )?;
    let a = f.abs()?;
    demand(
        a == f.join(&f.negate())? && a.is_nonnegative()?,
        "|f| = f \\/ (-f) >= 0",
    )?;
    demand(
        f.scale(lambda).abs()? == f.abs()?.scale(&lambda.abs()),
        "|lambda * f| = |lambda| * |f|",
    )?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Criterion 2: ideal membership and eventual affinity
// ---------------------------------------------------------------------------

fn criterion_2(seed: u64) -> CriterionReport {
    report("ideal membership and eventual affinity", criterion_2_inner(seed))
}

fn criterion_2_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 2);
    for case in 0..200 {
        let f = gen_ideal_member(&mut rng, 4, 4);
        let lambda = f
            .ideal_member_linear()
            .map_err(|e| fail(format!("member {case} rejected: {e}")))?;
        let k = f
            .eventual_affinity(&lambda)
            .map_err(|e| fail(format!("member {case} failed affinity: {e}")))?;
        if &k != f.last_breakpoint() {
            return Err(fail(format!("member {case}: k = {k} != last breakpoint")));
        }
        if !f.last_piece().derivative().derivative().is_zero() {
            return Err(fail(format!("member {case}: tail second derivative != 0")));
        }
    }
    for case in 0..50 {
        let base = gen_ideal_member(&mut rng, 3, 3);
        if case % 2 == 0 {
            // Nonzero value at the origin.
            let f = base.add(&PiecewisePoly::constant(rat_int(1 + (case as i64 % 5))));
            match f.ideal_member_linear() {
                Err(Error::NotInIdeal { reason }) if reason.contains("f(0)") => {}
                other => return Err(fail(format!("non-member {case}: {other:?}"))),
            }
        } else {
            // Quadratic tail spliced on continuously.
            let t = base.last_breakpoint() + Rational::one();
            let bump = Polynomial::from_coeffs(vec![&t * &t, -(&t + &t), Rational::one()]);
            let tail = base.last_piece() + &bump;
            let mut bps = base.breakpoints().to_vec();
            let mut pieces = base.pieces().to_vec();
            bps.push(t);
            pieces.push(tail);
            let f = PiecewisePoly::new(bps, pieces).unwrap();
            match f.ideal_member_linear() {
                Err(Error::NotInIdeal { reason }) if reason.contains("degree") => {}
                other => return Err(fail(format!("non-member {case}: {other:?}"))),
            }
        }
    }
    Ok("200 members certified and affine past k; 50 non-members rejected with the right reason"
        .into())
}

// ---------------------------------------------------------------------------
// Criterion 3: counterexample reproduction
// ---------------------------------------------------------------------------

fn criterion_3(seed: u64) -> CriterionReport {
    report("counterexample refutation", criterion_3_inner(seed))
}

fn criterion_3_inner(seed: u64) -> Result<String> {
    // (a) h <= x (x) y along 20 lines.
    let lines: Vec<Rational> = (1..=20).map(|i| Rational::new(i.into(), 2.into())).collect();
    for r in verify_h_dominated(&lines)? {
        if !r.dominated {
            return Err(fail(format!("h not dominated along x = {}", r.line)));
        }
    }
    // (b) + (c) per-candidate refutation and horizon geometry.
    let mut rng = rng_for(seed, 3);
    let two = rat_int(2);
    for case in 0..100 {
        with_retry(|| {
            let cand = gen_candidate(&mut rng);
            let cert = refute_h(&cand, None)?;
            if cert.candidate_value == cert.h_value {
                return Err(fail(format!("candidate {case}: certificate without mismatch")));
            }
            // Horizon geometry: every second partial vanishes past k ...
            let k = cand.horizon()?;
            for row in cand.rows() {
                for entry in row {
                    let (xx, yy) = entry.second_partials();
                    for (l, _) in xx.terms() {
                        if !(l.last_piece().is_zero() && l.last_breakpoint() <= &k) {
                            return Err(fail(format!(
                                "candidate {case}: x-partial alive past k = {k}"
                            )));
                        }
                    }
                    for (_, r) in yy.terms() {
                        if !(r.last_piece().is_zero() && r.last_breakpoint() <= &k) {
                            return Err(fail(format!(
                                "candidate {case}: y-partial alive past k = {k}"
                            )));
                        }
                    }
                }
            }
            // ... while h restricted to x = k + 2 still carries a y^2 piece
            // (second derivative 2).
            let c = &k + &two;
            let rh = counterexample_h().restrict_line(Axis::X, &c)?;
            let quad = Polynomial::monomial(Rational::one(), 2);
            let has_quad = rh.pieces().iter().any(|p| {
                p == &quad && p.derivative().derivative() == Polynomial::constant(two.clone())
            });
            if !has_quad {
                return Err(fail(format!(
                    "candidate {case}: h|x={c} lost its quadratic piece"
                )));
            }
            Ok(())
        })?;
    }
    Ok("h dominated along 20 lines; 100 candidates refuted with exact certificates".into())
}

// ---------------------------------------------------------------------------
// Criterion 4: normalization and restriction consistency
// ---------------------------------------------------------------------------

fn criterion_4(seed: u64) -> CriterionReport {
    report("normalization consistency", criterion_4_inner(seed))
}

fn criterion_4_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 4);
    for case in 0..100 {
        with_retry(|| {
            let tree = gen_tree(&mut rng, 2);
            let norm = tree.normalize();
            let mut pt_rng = rng.clone();
            for _ in 0..50 {
                let x = gen_nonneg_rat(&mut pt_rng, 6);
                let y = gen_nonneg_rat(&mut pt_rng, 6);
                if norm.eval(&x, &y)? != tree.eval(&x, &y)? {
                    return Err(fail(format!("tree {case}: normalize changed the value")));
                }
            }
            for c in [Rational::one(), Rational::new(7.into(), 2.into())] {
                let restricted = norm.restrict_line(Axis::X, &c)?;
                for _ in 0..50 {
                    let y = gen_nonneg_rat(&mut pt_rng, 6);
                    if restricted.eval(&y)? != norm.eval(&c, &y)? {
                        return Err(fail(format!(
                            "tree {case}: restriction disagrees at x = {c}"
                        )));
                    }
                }
            }
            Ok(())
        })?;
    }
    Ok("100 trees: normalize value-preserving; restrictions agree at 50 ordinates per line"
        .into())
}

// ---------------------------------------------------------------------------
// Criterion 5: c00 suite
// ---------------------------------------------------------------------------

fn criterion_5(seed: u64) -> CriterionReport {
    report("c00 suprema and from-tensor", criterion_5_inner(seed))
}

fn check_sup_against_fold<E: RieszElement>(family: &[FinSuppMap<E>]) -> Result<bool> {
    let from_sup = c00::sup(family)?;
    let mut fold = family[0].clone();
    for f in &family[1..] {
        fold = fold.join(f)?;
    }
    Ok(from_sup == fold)
}

fn criterion_5_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 5);
    for case in 0..200 {
        if case % 2 == 0 {
            let family: Vec<_> = (0..rng.gen_range(1..=4))
                .map(|_| gen_rat_map(&mut rng))
                .collect();
            if !check_sup_against_fold(&family)? {
                return Err(fail(format!("rational family {case}: sup != join fold")));
            }
        } else {
            with_retry(|| {
                let family: Vec<_> = (0..rng.gen_range(1..=4))
                    .map(|_| gen_pp_map(&mut rng, false))
                    .collect();
                if !check_sup_against_fold(&family)? {
                    return Err(fail(format!("pp family {case}: sup != join fold")));
                }
                Ok(())
            })?;
        }
    }
    for case in 0..200 {
        // Linearity over concatenated indicator sums, with duplicate merging.
        let pairs_a: Vec<_> = (0..rng.gen_range(0..=4))
            .map(|_| {
                (
                    Index::new(INDEX_POOL[rng.gen_range(0..INDEX_POOL.len())]),
                    gen_rat(&mut rng, 10),
                )
            })
            .collect();
        let pairs_b: Vec<_> = (0..rng.gen_range(0..=4))
            .map(|_| {
                (
                    Index::new(INDEX_POOL[rng.gen_range(0..INDEX_POOL.len())]),
                    gen_rat(&mut rng, 10),
                )
            })
            .collect();
        let mut concat = pairs_a.clone();
        concat.extend(pairs_b.iter().cloned());
        let img_concat = c00::from_tensor(&C00TensorExpr::Sum(concat))?;
        let img_a = c00::from_tensor(&C00TensorExpr::Sum(pairs_a.clone()))?;
        let img_b = c00::from_tensor(&C00TensorExpr::Sum(pairs_b.clone()))?;
        if img_concat != img_a.add(&img_b) {
            return Err(fail(format!("from_tensor not additive on input {case}")));
        }
        // Lattice preservation: the join image equals the per-index join
        // over the union of supports.
        let joined = c00::from_tensor(&C00TensorExpr::Join(
            Box::new(C00TensorExpr::Sum(pairs_a)),
            Box::new(C00TensorExpr::Sum(pairs_b)),
        ))?;
        let mut keys: Vec<Index> = img_a.support().cloned().collect();
        keys.extend(img_b.support().cloned());
        keys.sort();
        keys.dedup();
        for k in keys {
            if joined.get(&k) != img_a.get(&k).max(img_b.get(&k)) {
                return Err(fail(format!(
                    "from_tensor join wrong at index {} on input {case}",
                    k.as_str()
                )));
            }
        }
    }
    // Disjoint nonnegative supports: the meet of the images vanishes.
    for case in 0..50 {
        let split = rng.gen_range(1..INDEX_POOL.len());
        let f = FinSuppMap::from_entries(INDEX_POOL[..split].iter().map(|k| {
            (Index::new(*k), gen_nonneg_rat(&mut rng, 9) + Rational::one())
        }));
        let g = FinSuppMap::from_entries(INDEX_POOL[split..].iter().map(|k| {
            (Index::new(*k), gen_nonneg_rat(&mut rng, 9) + Rational::one())
        }));
        if !f.disjoint(&g) || !f.meet(&g)?.is_empty() {
            return Err(fail(format!("disjoint meet not zero on input {case}")));
        }
    }
    Ok("200 suprema matched folds; 200 from-tensor checks; disjoint meets vanish".into())
}

// ---------------------------------------------------------------------------
// Criterion 6: finite-dimensional suite
// ---------------------------------------------------------------------------

fn criterion_6(seed: u64) -> CriterionReport {
    report("finite-dimensional suprema and factorization", criterion_6_inner(seed))
}

fn criterion_6_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 6);
    for case in 0..100 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let family: Vec<_> = (0..rng.gen_range(1..=4))
            .map(|_| gen_matrix(&mut rng, rows, cols))
            .collect();
        let sup = matrix_sup(&family)?;
        for i in 0..rows {
            for j in 0..cols {
                let expect = family.iter().map(|m| m.get(i, j)).max().unwrap();
                if sup.get(i, j) != expect {
                    return Err(fail(format!("family {case}: sup wrong at ({i}, {j})")));
                }
            }
        }
    }
    let mut checked = 0usize;
    for case in 0..50 {
        let src_rows = rng.gen_range(1..=3);
        let src_cols = rng.gen_range(1..=3);
        let tgt_rows = rng.gen_range(1..=3);
        let tgt_cols = rng.gen_range(1..=3);
        let mut table = BTreeMap::new();
        for i in 0..src_rows {
            for j in 0..src_cols {
                table.insert((i, j), gen_matrix(&mut rng, tgt_rows, tgt_cols));
            }
        }
        // factor_bimorphism itself asserts T(outer(e_i, f_j)) = psi(i, j).
        let t = factor_bimorphism(src_rows, src_cols, table.clone())?;
        for _ in 0..2 {
            let m = gen_matrix(&mut rng, src_rows, src_cols);
            let image = t.apply(&m)?;
            for r in 0..tgt_rows {
                for c in 0..tgt_cols {
                    let mut acc = rat_int(0);
                    for i in 0..src_rows {
                        for j in 0..src_cols {
                            acc += m.get(i, j) * table[&(i, j)].get(r, c);
                        }
                    }
                    if image.get(r, c) != &acc {
                        return Err(fail(format!(
                            "table {case}: factored map differs from double sum at ({r}, {c})"
                        )));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "100 matrix suprema verified; 50 tables factored and checked on {checked} matrices"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 7: parser round trips
// ---------------------------------------------------------------------------

fn criterion_7(seed: u64) -> CriterionReport {
    report("parser round trips", criterion_7_inner(seed))
}

/// The corpus shipped with the crate, embedded so `selftest` works anywhere.
pub const CORPUS: [(&str, &str); 4] = [
    ("basics.rzp", include_str!("../corpus/basics.rzp")),
    ("tensors.rzp", include_str!("../corpus/tensors.rzp")),
    ("c00.rzp", include_str!("../corpus/c00.rzp")),
    ("finite.rzp", include_str!("../corpus/finite.rzp")),
];

fn round_trip(text: &str, expect: &dsl::Value, what: &str) -> Result<()> {
    let parsed = dsl::parse_value(text)?;
    let same = match (&parsed, expect) {
        // Tensor expressions compare modulo normalization: the printed form
        // is the normal form.
        (dsl::Value::Tensor(a), dsl::Value::Tensor(b)) => a.normalize() == b.normalize(),
        (a, b) => a == b,
    };
    if !same {
        return Err(fail(format!("round trip changed the value for {what}: {text}")));
    }
    if let Some(reprinted) = dsl::print_value(&parsed) {
        if reprinted != text {
            return Err(fail(format!(
                "printing is not idempotent for {what}: {text} vs {reprinted}"
            )));
        }
    }
    Ok(())
}

fn criterion_7_inner(seed: u64) -> Result<String> {
    let mut rng = rng_for(seed, 7);
    for case in 0..300 {
        let what = format!("case {case}");
        let f = gen_pp(&mut rng, 4, 4);
        round_trip(&dsl::print_pp(&f, 'x'), &dsl::Value::Pp(f.clone()), &what)?;

        let ts = gen_tensor_sum(&mut rng, 3, 3);
        round_trip(
            &dsl::print_tensor_sum(&ts),
            &dsl::Value::Tensor(LatticeExpr::leaf(ts)),
            &what,
        )?;

        let sif = SupInfForm::new(
            (0..rng.gen_range(1..=3))
                .map(|_| {
                    (0..rng.gen_range(1..=3))
                        .map(|_| gen_tensor_sum(&mut rng, 2, 2))
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        match dsl::parse_value(&dsl::print_sup_inf(&sif))? {
            dsl::Value::Tensor(e) if e.normalize() == sif => {}
            other => {
                return Err(fail(format!(
                    "sup-inf round trip changed the value for {what}: {other:?}"
                )))
            }
        }

        let m = gen_rat_map(&mut rng);
        round_trip(&dsl::print_map_rat(&m), &dsl::Value::C00Rat(m.clone()), &what)?;

        let mp = gen_pp_map(&mut rng, true);
        round_trip(&dsl::print_map_pp(&mp), &dsl::Value::C00Pp(mp.clone()), &what)?;

        let u = gen_vector(&mut rng, 6);
        round_trip(&dsl::print_vector(&u), &dsl::Value::Vector(u.clone()), &what)?;

        let (mr, mc) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let mat = gen_matrix(&mut rng, mr, mc);
        round_trip(&dsl::print_matrix(&mat), &dsl::Value::Matrix(mat.clone()), &what)?;
    }
    for (name, text) in CORPUS {
        let program = dsl::parse_program(text)
            .map_err(|e| fail(format!("corpus {name} failed to parse: {e}")))?;
        for binding in program.names() {
            let value = program.get(binding).unwrap();
            if let Some(printed) = dsl::print_value(value) {
                round_trip(&printed, value, &format!("{name}:{binding}"))?;
            }
        }
    }
    Ok("300 random values per type round-tripped; corpus printing idempotent".into())
}
