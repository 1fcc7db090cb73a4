//! Elements of the tensor product of PP([0, oo)) with itself, kept in
//! sup-inf normal form over finite tensor sums, with exact evaluation, line
//! restriction, and the refutation engine that certifies a candidate
//! expression differs from the target h = (1 (x) y^2) /\ (x^2 (x) 1).

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, Rational};
use crate::pplattice::PiecewisePoly;

/// Which variable a line restriction pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// A finite sum of elementary tensors: (x, y) |-> sum_i left_i(x) * right_i(y).
/// The empty sum is the zero element; terms with a zero factor are dropped on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSum {
    terms: Vec<(PiecewisePoly, PiecewisePoly)>,
}

impl TensorSum {
    pub fn new(terms: Vec<(PiecewisePoly, PiecewisePoly)>) -> Self {
        let terms = terms
            .into_iter()
            .filter(|(l, r)| !l.is_zero() && !r.is_zero())
            .collect();
        TensorSum { terms }
    }

    pub fn zero() -> Self {
        TensorSum { terms: Vec::new() }
    }

    pub fn elementary(left: PiecewisePoly, right: PiecewisePoly) -> Self {
        TensorSum::new(vec![(left, right)])
    }

    pub fn terms(&self) -> &[(PiecewisePoly, PiecewisePoly)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (l, r) in &self.terms {
            acc += l.eval(x)? * r.eval(y)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        TensorSum { terms }
    }

    pub fn negate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(l, r)| (l.negate(), r.clone()))
            .collect();
        TensorSum { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TensorSum::new(
            self.terms
                .iter()
                .map(|(l, r)| (l.scale(c), r.clone()))
                .collect(),
        )
    }

    /// The univariate function obtained by pinning one variable to `c`.
    pub fn restrict(&self, axis: Axis, c: &Rational) -> Result<PiecewisePoly> {
        if c.is_negative() {
            return Err(Error::NegativeArgument { x: c.clone() });
        }
        let mut acc = PiecewisePoly::zero();
        for (l, r) in &self.terms {
            let term = match axis {
                Axis::X => r.scale(&l.eval(c)?),
                Axis::Y => l.scale(&r.eval(c)?),
            };
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Piecewise second partials (d^2/dx^2, d^2/dy^2), valid away from the
    /// breakpoint lines of the factors.
    pub fn second_partials(&self) -> (TensorSum, TensorSum) {
        let xx = TensorSum::new(
            self.terms
                .iter()
                .map(|(l, r)| (l.derivative().derivative(), r.clone()))
                .collect(),
        );
        let yy = TensorSum::new(
            self.terms
                .iter()
                .map(|(l, r)| (l.clone(), r.derivative().derivative()))
                .collect(),
        );
        (xx, yy)
    }

    /// Certifies that every factor lies in the principal ideal of its unit,
    /// returning lambda with |sum| <= lambda * (x (x) y). Fails naming the
    /// first factor outside its ideal.
    pub fn generators_in_ideal(&self) -> Result<Rational> {
        let mut total = Rational::zero();
        for (i, (l, r)) in self.terms.iter().enumerate() {
            let ll = l.ideal_member_linear().map_err(|e| wrap_factor(i, "left", e))?;
            let rr = r.ideal_member_linear().map_err(|e| wrap_factor(i, "right", e))?;
            total += ll * rr;
        }
        Ok(total)
    }

    /// Largest last breakpoint among all factors of this sum.
    fn factor_horizon(&self) -> Rational {
        let mut k = Rational::zero();
        for (l, r) in &self.terms {
            for f in [l, r] {
                if f.last_breakpoint() > &k {
                    k = f.last_breakpoint().clone();
                }
            }
        }
        k
    }
}

fn wrap_factor(term: usize, side: &'static str, e: Error) -> Error {
    let reason = match e {
        Error::NotInIdeal { reason } => reason,
        other => other.to_string(),
    };
    Error::FactorNotInIdeal { term, side, reason }
}

/// Sup over rows of the inf over each row's entries. Rows and the row list
/// are nonempty; no further structural canonicity is imposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupInfForm {
    rows: Vec<Vec<TensorSum>>,
}

impl SupInfForm {
    pub fn new(rows: Vec<Vec<TensorSum>>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(Vec::is_empty) {
            return Err(Error::Type(
                "sup-inf form needs a nonempty list of nonempty rows".into(),
            ));
        }
        Ok(SupInfForm { rows })
    }

    pub fn rows(&self) -> &[Vec<TensorSum>] {
        &self.rows
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        let mut best: Option<Rational> = None;
        for row in &self.rows {
            let mut low: Option<Rational> = None;
            for entry in row {
                let v = entry.eval(x, y)?;
                low = Some(match low {
                    None => v,
                    Some(cur) => cur.min(v),
                });
            }
            let v = low.unwrap();
            best = Some(match best {
                None => v,
                Some(cur) => cur.max(v),
            });
        }
        Ok(best.unwrap())
    }

    /// Exact symbolic restriction to a line: substitutes the constant into
    /// every tensor factor, then folds the sup-inf structure with the 1-D
    /// lattice operations.
    pub fn restrict_line(&self, axis: Axis, c: &Rational) -> Result<PiecewisePoly> {
        let mut joined: Option<PiecewisePoly> = None;
        for row in &self.rows {
            let mut met: Option<PiecewisePoly> = None;
            for entry in row {
                let f = entry.restrict(axis, c)?;
                met = Some(match met {
                    None => f,
                    Some(cur) => cur.meet(&f)?,
                });
            }
            let f = met.unwrap();
            joined = Some(match joined {
                None => f,
                Some(cur) => cur.join(&f)?,
            });
        }
        Ok(joined.unwrap())
    }

    /// The horizon k beyond which every factor is affine: the maximum last
    /// breakpoint over all entries, checked symbolically by requiring the
    /// second partials of every entry to vanish past k. Requires every entry
    /// to pass its ideal certificate first.
    pub fn horizon(&self) -> Result<Rational> {
        let mut k = Rational::zero();
        for row in &self.rows {
            for entry in row {
                entry.generators_in_ideal()?;
                let h = entry.factor_horizon();
                if h > k {
                    k = h;
                }
            }
        }
        for row in &self.rows {
            for entry in row {
                let (xx, yy) = entry.second_partials();
                for (l, _) in xx.terms() {
                    if !(l.last_piece().is_zero() && l.last_breakpoint() <= &k) {
                        return Err(Error::InternalConsistency(format!(
                            "second x-partial does not vanish beyond horizon {k}"
                        )));
                    }
                }
                for (_, r) in yy.terms() {
                    if !(r.last_piece().is_zero() && r.last_breakpoint() <= &k) {
                        return Err(Error::InternalConsistency(format!(
                            "second y-partial does not vanish beyond horizon {k}"
                        )));
                    }
                }
            }
        }
        Ok(k)
    }
}

/// Expression tree over tensor-sum leaves, the input form prior to
/// normalization.
#[derive(Debug, Clone, PartialEq)]
pub enum LatticeExpr {
    Leaf(TensorSum),
    Sum(Box<LatticeExpr>, Box<LatticeExpr>),
    Negate(Box<LatticeExpr>),
    Scale(Rational, Box<LatticeExpr>),
    Join(Box<LatticeExpr>, Box<LatticeExpr>),
    Meet(Box<LatticeExpr>, Box<LatticeExpr>),
    Abs(Box<LatticeExpr>),
}

impl LatticeExpr {
    pub fn leaf(t: TensorSum) -> Self {
        LatticeExpr::Leaf(t)
    }

    /// Direct recursive evaluation; the independent semantics against which
    /// normalization is checked.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        Ok(match self {
            LatticeExpr::Leaf(t) => t.eval(x, y)?,
            LatticeExpr::Sum(a, b) => a.eval(x, y)? + b.eval(x, y)?,
            LatticeExpr::Negate(a) => -a.eval(x, y)?,
            LatticeExpr::Scale(c, a) => c * a.eval(x, y)?,
            LatticeExpr::Join(a, b) => a.eval(x, y)?.max(b.eval(x, y)?),
            LatticeExpr::Meet(a, b) => a.eval(x, y)?.min(b.eval(x, y)?),
            LatticeExpr::Abs(a) => a.eval(x, y)?.abs(),
        })
    }

    /// Value-preserving rewrite into sup-inf normal form.
    pub fn normalize(&self) -> SupInfForm {
        let rows = self.normal_rows();
        SupInfForm { rows }
    }

    fn normal_rows(&self) -> Vec<Vec<TensorSum>> {
        match self {
            LatticeExpr::Leaf(t) => vec![vec![t.clone()]],
            LatticeExpr::Join(a, b) => {
                let mut rows = a.normal_rows();
                rows.extend(b.normal_rows());
                rows
            }
            LatticeExpr::Meet(a, b) => {
                let ra = a.normal_rows();
                let rb = b.normal_rows();
                let mut rows = Vec::with_capacity(ra.len() * rb.len());
                for x in &ra {
                    for y in &rb {
                        let mut row = x.clone();
                        row.extend(y.iter().cloned());
                        rows.push(row);
                    }
                }
                rows
            }
            LatticeExpr::Sum(a, b) => {
                // Sup and inf both commute with translation, so the sum is
                // the sup over row pairs of the inf over entrywise sums.
                let ra = a.normal_rows();
                let rb = b.normal_rows();
                let mut rows = Vec::with_capacity(ra.len() * rb.len());
                for x in &ra {
                    for y in &rb {
                        let mut row = Vec::with_capacity(x.len() * y.len());
                        for e in x {
                            for f in y {
                                row.push(e.add(f));
                            }
                        }
                        rows.push(row);
                    }
                }
                rows
            }
            LatticeExpr::Scale(c, a) => {
                if c.is_negative() {
                    let scaled = scale_rows(&a.normal_rows(), &c.abs());
                    negate_rows(&scaled)
                } else {
                    scale_rows(&a.normal_rows(), c)
                }
            }
            LatticeExpr::Negate(a) => negate_rows(&a.normal_rows()),
            LatticeExpr::Abs(a) => {
                let mut rows = a.normal_rows();
                rows.extend(negate_rows(&rows.clone()));
                rows
            }
        }
    }
}

fn scale_rows(rows: &[Vec<TensorSum>], c: &Rational) -> Vec<Vec<TensorSum>> {
    rows.iter()
        .map(|row| row.iter().map(|e| e.scale(c)).collect())
        .collect()
}

/// Distributes inf over sup via choice functions: one result row per choice
/// tuple (e_1 in R_1, ..., e_m in R_m), the row being [-e_1, ..., -e_m].
fn negate_rows(rows: &[Vec<TensorSum>]) -> Vec<Vec<TensorSum>> {
    let mut result: Vec<Vec<TensorSum>> = vec![Vec::new()];
    for row in rows {
        let mut next = Vec::with_capacity(result.len() * row.len());
        for partial in &result {
            for e in row {
                let mut extended = partial.clone();
                extended.push(e.negate());
                next.push(extended);
            }
        }
        result = next;
    }
    result
}

/// The counterexample target h = (1 (x) y^2) /\ (x^2 (x) 1). Its factor 1 is
/// outside E_x, which is exactly why h is the refutation target and never a
/// candidate.
pub fn counterexample_h() -> SupInfForm {
    let one = PiecewisePoly::constant(Rational::from_integer(1.into()));
    let sq = PiecewisePoly::from_poly(Polynomial::monomial(Rational::from_integer(1.into()), 2));
    SupInfForm {
        rows: vec![vec![
            TensorSum::elementary(one.clone(), sq.clone()),
            TensorSum::elementary(sq, one),
        ]],
    }
}

/// Exact witness that a candidate differs from h: an abscissa c past the
/// candidate's horizon, an ordinate where the two line restrictions take
/// different rational values, and both restrictions for auditing.
#[derive(Debug, Clone, PartialEq)]
pub struct RefutationCertificate {
    pub horizon: Rational,
    pub line: Rational,
    pub witness: Rational,
    pub candidate_value: Rational,
    pub h_value: Rational,
    pub restricted_candidate: PiecewisePoly,
    pub restricted_h: PiecewisePoly,
}

/// Refutes a candidate representation of h. Every candidate whose entries
/// pass their ideal certificates is affine along the line x = c beyond its
/// horizon, while h restricts to y^2 there, so an exact mismatch point always
/// exists.
pub fn refute_h(
    candidate: &SupInfForm,
    line_override: Option<Rational>,
) -> Result<RefutationCertificate> {
    let k = candidate.horizon()?;
    let c = match line_override {
        Some(c) => {
            if c <= k {
                return Err(Error::InvalidRange { lo: k, hi: c });
            }
            c
        }
        None => &k + &Rational::from_integer(2.into()),
    };
    let restricted_candidate = candidate.restrict_line(Axis::X, &c)?;
    let restricted_h = counterexample_h().restrict_line(Axis::X, &c)?;

    // Candidate restriction must be piecewise affine past the horizon.
    for (i, piece) in restricted_candidate.pieces().iter().enumerate() {
        let lo = &restricted_candidate.breakpoints()[i];
        let hi = restricted_candidate.breakpoints().get(i + 1);
        let overlaps = hi.is_none_or(|h| h > &k) && lo < &c;
        if overlaps && piece.degree().is_some_and(|d| d > 1) {
            return Err(Error::InternalConsistency(format!(
                "candidate restriction is not affine past the horizon {k}"
            )));
        }
    }
    // h restricts to y^2 throughout (k, c).
    let quadratic = Polynomial::monomial(Rational::from_integer(1.into()), 2);
    let mid = (&k + &c) / Rational::from_integer(2.into());
    let h_piece_idx = restricted_h
        .breakpoints()
        .iter()
        .rposition(|b| b <= &mid)
        .unwrap();
    if restricted_h.pieces()[h_piece_idx] != quadratic {
        return Err(Error::InternalConsistency(
            "restriction of h does not equal y^2 past the horizon".into(),
        ));
    }

    // Walk the common refinement of (k, c) and probe where the pieces differ.
    let mut cuts: Vec<Rational> = vec![k.clone()];
    for b in restricted_candidate
        .breakpoints()
        .iter()
        .chain(restricted_h.breakpoints().iter())
    {
        if b > &k && b < &c {
            cuts.push(b.clone());
        }
    }
    cuts.push(c.clone());
    cuts.sort();
    cuts.dedup();
    let four = Rational::from_integer(4.into());
    for w in cuts.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        let width = v - u;
        for j in 1..4 {
            let t = u + &(&width * &Rational::from_integer(j.into()) / &four);
            let cv = restricted_candidate.eval(&t)?;
            let hv = restricted_h.eval(&t)?;
            if cv != hv {
                return Ok(RefutationCertificate {
                    horizon: k,
                    line: c,
                    witness: t,
                    candidate_value: cv,
                    h_value: hv,
                    restricted_candidate,
                    restricted_h,
                });
            }
        }
    }
    // An affine function cannot coincide with y^2 on an interval.
    Err(Error::InternalConsistency(
        "no witness found although the restrictions must differ".into(),
    ))
}

/// Per-line domination report for h <= x (x) y.
#[derive(Debug, Clone, PartialEq)]
pub struct LineReport {
    pub line: Rational,
    pub dominated: bool,
}

/// Symbolically verifies h <= x (x) y along each line x = c: the difference
/// c*y - h(c, .) is checked nonnegative piece by piece.
pub fn verify_h_dominated(lines: &[Rational]) -> Result<Vec<LineReport>> {
    let h = counterexample_h();
    let mut reports = Vec::with_capacity(lines.len());
    for c in lines {
        let restricted = h.restrict_line(Axis::X, c)?;
        let bound = PiecewisePoly::from_poly(Polynomial::monomial(c.clone(), 1));
        let dominated = bound.sub(&restricted).is_nonnegative()?;
        reports.push(LineReport {
            line: c.clone(),
            dominated,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn xpoly(coeffs: &[i64]) -> PiecewisePoly {
        PiecewisePoly::from_poly(Polynomial::from_coeffs(
            coeffs.iter().map(|&n| rat_int(n)).collect(),
        ))
    }

    fn x_tensor_y() -> TensorSum {
        TensorSum::elementary(xpoly(&[0, 1]), xpoly(&[0, 1]))
    }

    #[test]
    fn eval_h_examples() {
        let h = counterexample_h();
        assert_eq!(h.eval(&rat_int(3), &rat_int(1)).unwrap(), rat_int(1));
        assert_eq!(h.eval(&rat_int(2), &rat_int(2)).unwrap(), rat_int(4));
        assert_eq!(x_tensor_y().eval(&rat_int(3), &rat_int(5)).unwrap(), rat_int(15));
    }

    #[test]
    fn eval_rejects_negative_coordinates() {
        assert!(matches!(
            counterexample_h().eval(&rat_int(-1), &rat_int(0)),
            Err(Error::NegativeArgument { .. })
        ));
    }

    #[test]
    fn normalize_meet_and_negate() {
        let a = LatticeExpr::leaf(x_tensor_y());
        let b = LatticeExpr::leaf(TensorSum::elementary(xpoly(&[0, 2]), xpoly(&[0, 1])));
        let meet = LatticeExpr::Meet(Box::new(a.clone()), Box::new(b.clone()));
        assert_eq!(meet.normalize().rows().len(), 1);
        assert_eq!(meet.normalize().rows()[0].len(), 2);

        let neg_join = LatticeExpr::Negate(Box::new(LatticeExpr::Join(
            Box::new(a.clone()),
            Box::new(b.clone()),
        )));
        let rows = neg_join.normalize();
        // One row per choice tuple over the two single-entry rows.
        assert_eq!(rows.rows().len(), 1);
        assert_eq!(rows.rows()[0].len(), 2);
        for x in [rat_int(0), rat_int(1), rat(7, 3)] {
            for y in [rat_int(0), rat(1, 2), rat_int(3)] {
                assert_eq!(
                    rows.eval(&x, &y).unwrap(),
                    neg_join.eval(&x, &y).unwrap()
                );
            }
        }
    }

    #[test]
    fn normalize_preserves_value_on_mixed_tree() {
        let a = LatticeExpr::leaf(x_tensor_y());
        let b = LatticeExpr::leaf(TensorSum::elementary(xpoly(&[0, 0, 1]), xpoly(&[1])));
        let tree = LatticeExpr::Sum(
            Box::new(LatticeExpr::Abs(Box::new(LatticeExpr::Sum(
                Box::new(a.clone()),
                Box::new(LatticeExpr::Scale(rat_int(-2), Box::new(b.clone()))),
            )))),
            Box::new(LatticeExpr::Meet(Box::new(a), Box::new(b))),
        );
        let norm = tree.normalize();
        for x in [rat_int(0), rat(1, 2), rat_int(2), rat(11, 4)] {
            for y in [rat_int(0), rat(2, 3), rat_int(4)] {
                assert_eq!(norm.eval(&x, &y).unwrap(), tree.eval(&x, &y).unwrap());
            }
        }
    }

    #[test]
    fn restrict_h_along_x_equals_clipped_square() {
        let h = counterexample_h();
        let r = h.restrict_line(Axis::X, &rat_int(3)).unwrap();
        let expected = PiecewisePoly::new(
            vec![rat_int(0), rat_int(3)],
            vec![
                Polynomial::monomial(rat_int(1), 2),
                Polynomial::constant(rat_int(9)),
            ],
        )
        .unwrap();
        assert_eq!(r, expected);

        let r0 = h.restrict_line(Axis::X, &rat_int(0)).unwrap();
        assert!(r0.is_zero());

        let rxy = SupInfForm::new(vec![vec![x_tensor_y()]]).unwrap();
        let r2 = rxy.restrict_line(Axis::X, &rat_int(2)).unwrap();
        assert_eq!(r2, PiecewisePoly::from_poly(Polynomial::monomial(rat_int(2), 1)));
    }

    #[test]
    fn second_partials_examples() {
        let (xx, yy) = TensorSum::elementary(xpoly(&[0, 0, 1]), xpoly(&[1])).second_partials();
        assert_eq!(xx, TensorSum::elementary(xpoly(&[2]), xpoly(&[1])));
        assert!(yy.is_zero());

        let (xx, yy) = x_tensor_y().second_partials();
        assert!(xx.is_zero() && yy.is_zero());

        let (xx, yy) = TensorSum::elementary(xpoly(&[1]), xpoly(&[0, 0, 1])).second_partials();
        assert!(xx.is_zero());
        assert_eq!(yy, TensorSum::elementary(xpoly(&[1]), xpoly(&[2])));
    }

    #[test]
    fn generators_in_ideal_examples() {
        assert_eq!(x_tensor_y().generators_in_ideal().unwrap(), rat_int(1));
        match TensorSum::elementary(xpoly(&[1]), xpoly(&[0, 0, 1])).generators_in_ideal() {
            Err(Error::FactorNotInIdeal { term: 0, side: "left", reason }) => {
                assert!(reason.contains("f(0)"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn horizon_examples() {
        let s = SupInfForm::new(vec![vec![x_tensor_y()]]).unwrap();
        assert_eq!(s.horizon().unwrap(), rat_int(0));

        let bent = PiecewisePoly::new(
            vec![rat_int(0), rat_int(1)],
            vec![
                Polynomial::monomial(rat_int(1), 2),
                Polynomial::from_coeffs(vec![rat_int(-1), rat_int(2)]),
            ],
        )
        .unwrap();
        let s = SupInfForm::new(vec![vec![TensorSum::elementary(bent, xpoly(&[0, 1]))]]).unwrap();
        assert_eq!(s.horizon().unwrap(), rat_int(1));
    }

    #[test]
    fn refute_unit_tensor() {
        let cand = SupInfForm::new(vec![vec![x_tensor_y()]]).unwrap();
        let cert = refute_h(&cand, None).unwrap();
        assert_eq!(cert.horizon, rat_int(0));
        assert_eq!(cert.line, rat_int(2));
        assert!(cert.witness > rat_int(0) && cert.witness < rat_int(2));
        assert_ne!(cert.candidate_value, cert.h_value);
        // At the witness the restrictions are 2y and y^2.
        assert_eq!(cert.candidate_value, &rat_int(2) * &cert.witness);
        assert_eq!(cert.h_value, &cert.witness * &cert.witness);
    }

    #[test]
    fn refute_zero_candidate() {
        let cand = SupInfForm::new(vec![vec![TensorSum::zero()]]).unwrap();
        let cert = refute_h(&cand, None).unwrap();
        assert_eq!(cert.candidate_value, rat_int(0));
        assert!(!cert.h_value.is_zero());
    }

    #[test]
    fn refute_join_of_multiples() {
        let a = TensorSum::elementary(xpoly(&[0, 1]), xpoly(&[0, 1]));
        let b = TensorSum::elementary(xpoly(&[0, 2]), xpoly(&[0, 1]));
        let cand = SupInfForm::new(vec![vec![a], vec![b]]).unwrap();
        let cert = refute_h(&cand, None).unwrap();
        // Restriction at c = 2 is max(2y, 4y) = 4y.
        assert_eq!(cert.candidate_value, &rat_int(4) * &cert.witness);
    }

    #[test]
    fn refute_line_override_must_clear_horizon() {
        let cand = SupInfForm::new(vec![vec![x_tensor_y()]]).unwrap();
        assert!(refute_h(&cand, Some(rat_int(0))).is_err());
        assert!(refute_h(&cand, Some(rat_int(5))).is_ok());
    }

    #[test]
    fn h_is_dominated_by_the_unit_tensor() {
        let lines = vec![rat_int(0), rat(1, 2), rat_int(1), rat_int(2), rat_int(10)];
        let reports = verify_h_dominated(&lines).unwrap();
        assert!(reports.iter().all(|r| r.dominated));
    }

    #[test]
    fn h_itself_fails_the_ideal_certificate() {
        assert!(counterexample_h().horizon().is_err());
    }
}
