//! The Riesz space PP([0, oo)) of continuous piecewise polynomials with
//! exact vector and lattice operations, principal-ideal membership against
//! the unit p(x) = x, and the eventual-affinity bound.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{IntervalSign, Polynomial, Rational};
use crate::exactnum::sign_on_interval;

/// A continuous piecewise polynomial on [0, oo). Piece i is in force on
/// [t_i, t_{i+1}]; the last piece on [t_n, oo). Canonical form: breakpoints
/// strictly increasing starting at 0, adjacent pieces agree at shared
/// breakpoints, and no breakpoint separates two identical polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewisePoly {
    breakpoints: Vec<Rational>,
    pieces: Vec<Polynomial>,
}

impl PiecewisePoly {
    /// Validating constructor. Reports the offending index on non-monotone
    /// breakpoints or on a discontinuity between adjacent pieces.
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<Polynomial>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != pieces.len() {
            return Err(Error::MismatchedPieces);
        }
        if !breakpoints[0].is_zero() {
            return Err(Error::FirstBreakpointNotZero {
                got: breakpoints[0].clone(),
            });
        }
        for i in 1..breakpoints.len() {
            if breakpoints[i] <= breakpoints[i - 1] {
                return Err(Error::NonMonotoneBreakpoints { index: i });
            }
        }
        for i in 0..breakpoints.len() - 1 {
            let t = &breakpoints[i + 1];
            let left = pieces[i].eval(t);
            let right = pieces[i + 1].eval(t);
            if left != right {
                return Err(Error::Discontinuity {
                    index: i + 1,
                    breakpoint: t.clone(),
                    left,
                    right,
                });
            }
        }
        Ok(Self::from_parts_unchecked(breakpoints, pieces))
    }

    /// Canonicalizes without the continuity check. Used internally for
    /// piecewise derivatives, which may be discontinuous at breakpoints.
    pub(crate) fn from_parts_unchecked(
        breakpoints: Vec<Rational>,
        pieces: Vec<Polynomial>,
    ) -> Self {
        debug_assert_eq!(breakpoints.len(), pieces.len());
        let mut out_b: Vec<Rational> = Vec::with_capacity(breakpoints.len());
        let mut out_p: Vec<Polynomial> = Vec::with_capacity(pieces.len());
        for (b, p) in breakpoints.into_iter().zip(pieces) {
            if out_p.last() == Some(&p) {
                continue;
            }
            out_b.push(b);
            out_p.push(p);
        }
        PiecewisePoly {
            breakpoints: out_b,
            pieces: out_p,
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The identity function p(x) = x, the principal-ideal unit.
    pub fn identity() -> Self {
        Self::from_poly(Polynomial::identity())
    }

    /// A single polynomial piece on all of [0, oo).
    pub fn from_poly(p: Polynomial) -> Self {
        PiecewisePoly {
            breakpoints: vec![Rational::zero()],
            pieces: vec![p],
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn last_breakpoint(&self) -> &Rational {
        self.breakpoints.last().unwrap()
    }

    pub fn last_piece(&self) -> &Polynomial {
        self.pieces.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].is_zero()
    }

    fn piece_index(&self, x: &Rational) -> usize {
        self.breakpoints.iter().rposition(|b| b <= x).unwrap_or(0)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_negative() {
            return Err(Error::NegativeArgument { x: x.clone() });
        }
        Ok(self.pieces[self.piece_index(x)].eval(x))
    }

    /// Breakpoint union of the two functions.
    fn common_grid(&self, other: &Self) -> Vec<Rational> {
        let mut grid: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .cloned()
            .collect();
        grid.sort();
        grid.dedup();
        grid
    }

    /// The polynomial in force on [grid[i], grid[i+1]) for each grid cell.
    fn on_grid(&self, grid: &[Rational]) -> Vec<Polynomial> {
        grid.iter()
            .map(|g| self.pieces[self.piece_index(g)].clone())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let grid = self.common_grid(other);
        let pieces = self
            .on_grid(&grid)
            .iter()
            .zip(other.on_grid(&grid))
            .map(|(a, b)| a + &b)
            .collect();
        Self::from_parts_unchecked(grid, pieces)
    }

    pub fn negate(&self) -> Self {
        let pieces = self.pieces.iter().map(|p| -p).collect();
        Self::from_parts_unchecked(self.breakpoints.clone(), pieces)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let pieces = self.pieces.iter().map(|p| p.scale(c)).collect();
        Self::from_parts_unchecked(self.breakpoints.clone(), pieces)
    }

    /// Piecewise derivative. The result need not be continuous, so it stays
    /// crate-internal; it backs the second-partial machinery.
    pub(crate) fn derivative(&self) -> Self {
        let pieces = self.pieces.iter().map(Polynomial::derivative).collect();
        Self::from_parts_unchecked(self.breakpoints.clone(), pieces)
    }

    /// Exact pointwise maximum. Crossing points become new breakpoints; a
    /// crossing at an irrational point is reported with its isolating
    /// interval rather than approximated.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let grid = self.common_grid(other);
        let fs = self.on_grid(&grid);
        let gs = other.on_grid(&grid);
        let mut out_b: Vec<Rational> = Vec::new();
        let mut out_p: Vec<Polynomial> = Vec::new();
        for i in 0..grid.len() {
            let lo = grid[i].clone();
            let hi = grid.get(i + 1).cloned();
            let d = &fs[i] - &gs[i];
            if d.is_zero() {
                out_b.push(lo);
                out_p.push(fs[i].clone());
                continue;
            }
            let crossings = sign_change_points(&d, &lo, hi.as_ref())?;
            let mut cell_b = vec![lo];
            cell_b.extend(crossings);
            for (j, u) in cell_b.iter().enumerate() {
                let v = cell_b.get(j + 1).cloned().or_else(|| hi.clone());
                let s = sample_sign(&d, u, v.as_ref());
                let chosen = if s > 0 { fs[i].clone() } else { gs[i].clone() };
                out_b.push(u.clone());
                out_p.push(chosen);
            }
        }
        Ok(Self::from_parts_unchecked(out_b, out_p))
    }

    /// Exact pointwise minimum, via f /\ g = -((-f) \/ (-g)).
    pub fn meet(&self, other: &Self) -> Result<Self> {
        Ok(self.negate().join(&other.negate())?.negate())
    }

    /// |f| = f \/ (-f).
    pub fn abs(&self) -> Result<Self> {
        self.join(&self.negate())
    }

    /// Exact check that f(x) >= 0 for every x >= 0.
    pub fn is_nonnegative(&self) -> Result<bool> {
        for i in 0..self.pieces.len() {
            let p = &self.pieces[i];
            let lo = &self.breakpoints[i];
            if p.eval(lo).is_negative() {
                return Ok(false);
            }
            let hi = match self.breakpoints.get(i + 1) {
                Some(h) => h.clone(),
                None => {
                    // Past every root the sign is the leading coefficient's.
                    if p.leading().is_some_and(|l| l.is_negative()) {
                        return Ok(false);
                    }
                    let b = p.cauchy_root_bound();
                    let b = if &b > lo { b } else { lo + Rational::one() };
                    &b + &Rational::one()
                }
            };
            if &hi <= lo {
                continue;
            }
            match sign_on_interval(p, lo, &hi)? {
                IntervalSign::StrictlyPositive
                | IntervalSign::IdenticallyZero
                | IntervalSign::NonnegativeWithZeros => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Membership in the principal ideal E_x of the unit p(x) = x, with a
    /// certified (not necessarily minimal) lambda: |f(x)| <= lambda * x for
    /// all x >= 0. Membership holds exactly when f(0) = 0 and the last piece
    /// has degree at most 1.
    pub fn ideal_member_linear(&self) -> Result<Rational> {
        let at_zero = self.pieces[0].eval(&Rational::zero());
        if !at_zero.is_zero() {
            return Err(Error::NotInIdeal {
                reason: format!("f(0) = {at_zero} != 0"),
            });
        }
        if let Some(d) = self.last_piece().degree() {
            if d > 1 {
                return Err(Error::NotInIdeal {
                    reason: format!("last piece degree {d}"),
                });
            }
        }
        let mut lambda = Rational::zero();
        let n = self.pieces.len();
        for i in 0..n {
            let p = &self.pieces[i];
            let piece_bound = if i == 0 && n > 1 {
                // On [0, t2]: f = x * q with q = f / x; bound |q| by its
                // coefficient sum scaled to the interval.
                let q = p.exact_div(&Polynomial::identity());
                coeff_bound(&q, &self.breakpoints[1])
            } else if i + 1 < n {
                // Interior compact piece [a, b] with a > 0.
                let a = &self.breakpoints[i];
                let b = &self.breakpoints[i + 1];
                coeff_bound(p, b) / a
            } else {
                // Final affine piece c + d*x on [t_n, oo).
                let c = p.coeff(0);
                let d = p.coeff(1);
                let tn = self.last_breakpoint();
                if tn.is_zero() {
                    // Membership already forces c = 0 here.
                    debug_assert!(c.is_zero());
                    d.abs()
                } else {
                    d.abs() + c.abs() / tn
                }
            };
            if piece_bound > lambda {
                lambda = piece_bound;
            }
        }
        Ok(lambda)
    }

    /// The horizon k of the eventual-affinity bound: given |f(x)| <= C*x on
    /// [0, oo), returns k = t_n such that f'' vanishes beyond k. The bound is
    /// re-verified on the last piece; a violation is reported with an exact
    /// witness point.
    pub fn eventual_affinity(&self, c: &Rational) -> Result<Rational> {
        let p = self.last_piece();
        let tn = self.last_breakpoint();
        let affine = p.degree().is_none_or(|d| d <= 1);
        let ok = affine && {
            let a0 = p.coeff(0);
            let a1 = p.coeff(1);
            let slope_ok = &a1.abs() <= c;
            let value_ok = p.eval(tn).abs() <= c * tn;
            // On a half-line an affine bound reduces to the endpoint value
            // and the slope; with t_n = 0 the constant term must vanish.
            slope_ok && value_ok && (!tn.is_zero() || a0.is_zero())
        };
        if !ok {
            let x = self.bound_violation_witness(c);
            let value = self.eval(&x)?.abs();
            return Err(Error::BoundViolated {
                bound: c * &x,
                x,
                value,
            });
        }
        debug_assert!(p.derivative().derivative().is_zero());
        Ok(tn.clone())
    }

    /// A point x with |f(x)| > C*x, found by doubling along the last piece.
    fn bound_violation_witness(&self, c: &Rational) -> Rational {
        let tn = self.last_breakpoint();
        if self.pieces[0].eval(&Rational::zero()) != Rational::zero() {
            return Rational::zero();
        }
        let mut x = if tn < &Rational::one() {
            Rational::one()
        } else {
            tn.clone()
        };
        let two = Rational::from_integer(2.into());
        for _ in 0..512 {
            if self.last_piece().eval(&x).abs() > c * &x {
                return x;
            }
            x = &x * &two;
        }
        // eventual_affinity only asks for a witness when the bound fails,
        // and a failing affine or superlinear tail must overshoot c*x.
        unreachable!("no bound violation found on the last piece");
    }
}

/// Upper bound for |p| on [0, b]: sum of |coefficients| times max(1, b)^deg.
fn coeff_bound(p: &Polynomial, b: &Rational) -> Rational {
    let m = if b > &Rational::one() {
        b.clone()
    } else {
        Rational::one()
    };
    let mut power = Rational::one();
    let mut bound = Rational::zero();
    for c in p.coeffs() {
        bound += c.abs() * &power;
        power = &power * &m;
    }
    bound
}

/// The points in the open cell where `d` changes sign, in increasing order.
/// `hi = None` means the cell extends to infinity. An irrational sign change
/// is an error carrying its isolating interval.
fn sign_change_points(
    d: &Polynomial,
    lo: &Rational,
    hi: Option<&Rational>,
) -> Result<Vec<Rational>> {
    let odd = d.odd_part();
    if odd.degree().is_none_or(|deg| deg == 0) {
        return Ok(Vec::new());
    }
    let scan_hi = match hi {
        Some(h) => h.clone(),
        None => {
            let b = odd.cauchy_root_bound();
            let b = if &b > lo { b } else { lo + Rational::one() };
            &b + &Rational::one()
        }
    };
    let counter = crate::exactnum::RootCounter::new(&odd);
    let crossings: Vec<Rational> = counter
        .rational_roots()
        .iter()
        .filter(|r| {
            *r > lo
                && match hi {
                    Some(h) => *r < h,
                    None => true,
                }
        })
        .cloned()
        .collect();
    // An irrational root of the odd part cannot sit on a rational cell
    // boundary, so any hit is a genuine interior sign change.
    if let Some((a, b)) = counter.irrational_witness(lo, &scan_hi) {
        return Err(Error::IrrationalCrossing { lo: a, hi: b });
    }
    Ok(crossings)
}

/// Sign of `d` somewhere in the open cell (u, v); nonzero by construction
/// because the cell contains no sign change of `d`.
fn sample_sign(d: &Polynomial, u: &Rational, v: Option<&Rational>) -> i32 {
    match v {
        Some(v) => {
            let two = Rational::from_integer(2.into());
            let mut t = (u + v) / &two;
            for _ in 0..128 {
                let val = d.eval(&t);
                if !val.is_zero() {
                    return if val.is_positive() { 1 } else { -1 };
                }
                t = (u + &t) / &two;
            }
            unreachable!("no nonzero sample in cell");
        }
        None => {
            let b = d.cauchy_root_bound();
            let t = if &b > u { b } else { u + Rational::one() };
            let val = d.eval(&(&t + &Rational::one()));
            debug_assert!(!val.is_zero());
            if val.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn pp(bps: &[(i64, i64)], pieces: Vec<Polynomial>) -> PiecewisePoly {
        PiecewisePoly::new(bps.iter().map(|&(n, d)| rat(n, d)).collect(), pieces).unwrap()
    }

    fn running_example() -> PiecewisePoly {
        // pp [0: x^2][1: 2x - 1]
        pp(
            &[(0, 1), (1, 1)],
            vec![poly(&[(0, 1), (0, 1), (1, 1)]), poly(&[(-1, 1), (2, 1)])],
        )
    }

    #[test]
    fn make_pp_validates_continuity() {
        // x^2 and x both give 1 at x = 1, so this is valid.
        assert!(PiecewisePoly::new(
            vec![rat_int(0), rat_int(1)],
            vec![poly(&[(0, 1), (0, 1), (1, 1)]), poly(&[(0, 1), (1, 1)])],
        )
        .is_ok());
        // x^2 and x + 5 disagree: 1 != 6.
        match PiecewisePoly::new(
            vec![rat_int(0), rat_int(1)],
            vec![poly(&[(0, 1), (0, 1), (1, 1)]), poly(&[(5, 1), (1, 1)])],
        ) {
            Err(Error::Discontinuity { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected discontinuity, got {other:?}"),
        }
    }

    #[test]
    fn make_pp_rejects_bad_breakpoints() {
        match PiecewisePoly::new(vec![rat_int(1)], vec![Polynomial::identity()]) {
            Err(Error::FirstBreakpointNotZero { .. }) => {}
            other => panic!("{other:?}"),
        }
        match PiecewisePoly::new(
            vec![rat_int(0), rat_int(2), rat_int(1)],
            vec![
                Polynomial::identity(),
                Polynomial::identity(),
                Polynomial::identity(),
            ],
        ) {
            Err(Error::NonMonotoneBreakpoints { index: 2 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_merges_identical_pieces() {
        let f = PiecewisePoly::new(
            vec![rat_int(0), rat_int(1)],
            vec![Polynomial::identity(), Polynomial::identity()],
        )
        .unwrap();
        assert_eq!(f, PiecewisePoly::identity());
    }

    #[test]
    fn add_cancels() {
        let x = PiecewisePoly::identity();
        assert!(x.add(&x.negate()).is_zero());
    }

    #[test]
    fn eval_running_example() {
        let f = running_example();
        assert_eq!(f.eval(&rat_int(3)).unwrap(), rat_int(5));
        assert_eq!(f.eval(&rat(1, 2)).unwrap(), rat(1, 4));
        assert!(matches!(
            f.eval(&rat_int(-1)),
            Err(Error::NegativeArgument { .. })
        ));
    }

    #[test]
    fn scale_halves() {
        let f = PiecewisePoly::identity().scale(&rat(1, 2));
        assert_eq!(f.eval(&rat_int(4)).unwrap(), rat_int(2));
    }

    #[test]
    fn join_crossing_lines() {
        // x \/ (2 - x) = pp [0: 2 - x][1: x]
        let x = PiecewisePoly::identity();
        let g = PiecewisePoly::from_poly(poly(&[(2, 1), (-1, 1)]));
        let j = x.join(&g).unwrap();
        let expected = pp(&[(0, 1), (1, 1)], vec![poly(&[(2, 1), (-1, 1)]), Polynomial::identity()]);
        assert_eq!(j, expected);
        // Pointwise max oracle on a grid.
        let mut t = Rational::zero();
        while t <= rat_int(4) {
            let lhs = j.eval(&t).unwrap();
            let rhs = x.eval(&t).unwrap().max(g.eval(&t).unwrap());
            assert_eq!(lhs, rhs);
            t = &t + &rat(1, 4);
        }
    }

    #[test]
    fn abs_of_shifted_identity() {
        // |x - 1| = pp [0: 1 - x][1: x - 1]
        let f = PiecewisePoly::from_poly(poly(&[(-1, 1), (1, 1)]));
        let a = f.abs().unwrap();
        let expected = pp(
            &[(0, 1), (1, 1)],
            vec![poly(&[(1, 1), (-1, 1)]), poly(&[(-1, 1), (1, 1)])],
        );
        assert_eq!(a, expected);
    }

    #[test]
    fn join_idempotent() {
        let f = running_example();
        assert_eq!(f.join(&f).unwrap(), f);
    }

    #[test]
    fn join_irrational_crossing_fails() {
        // x^2 crosses the constant 2 at sqrt(2).
        let f = PiecewisePoly::from_poly(poly(&[(0, 1), (0, 1), (1, 1)]));
        let g = PiecewisePoly::constant(rat_int(2));
        match f.join(&g) {
            Err(Error::IrrationalCrossing { lo, hi }) => {
                assert!(lo < hi);
                assert!(lo >= rat_int(1) && hi <= rat_int(2));
            }
            other => panic!("expected irrational crossing, got {other:?}"),
        }
    }

    #[test]
    fn ideal_membership_running_example() {
        let f = running_example();
        let lambda = f.ideal_member_linear().unwrap();
        // The certificate must dominate |f| even if not minimal.
        assert!(lambda >= rat_int(2));
        let mut t = Rational::zero();
        while t <= rat_int(20) {
            assert!(f.eval(&t).unwrap().abs() <= &lambda * &t);
            t = &t + &rat(1, 8);
        }
    }

    #[test]
    fn ideal_membership_rejections() {
        match PiecewisePoly::constant(rat_int(1)).ideal_member_linear() {
            Err(Error::NotInIdeal { reason }) => assert!(reason.contains("f(0)")),
            other => panic!("{other:?}"),
        }
        let sq = PiecewisePoly::from_poly(poly(&[(0, 1), (0, 1), (1, 1)]));
        match sq.ideal_member_linear() {
            Err(Error::NotInIdeal { reason }) => assert!(reason.contains("degree 2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn eventual_affinity_examples() {
        let f = running_example();
        assert_eq!(f.eventual_affinity(&rat_int(2)).unwrap(), rat_int(1));
        assert_eq!(
            PiecewisePoly::identity().eventual_affinity(&rat_int(1)).unwrap(),
            rat_int(0)
        );
        let sq = PiecewisePoly::from_poly(poly(&[(0, 1), (0, 1), (1, 1)]));
        match sq.eventual_affinity(&rat_int(1)) {
            Err(Error::BoundViolated { x, value, bound }) => {
                assert_eq!(x, rat_int(2));
                assert_eq!(value, rat_int(4));
                assert_eq!(bound, rat_int(2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn membership_implies_affinity_at_certificate() {
        let f = running_example();
        let lambda = f.ideal_member_linear().unwrap();
        assert_eq!(f.eventual_affinity(&lambda).unwrap(), rat_int(1));
    }

    #[test]
    fn nonnegative_checks() {
        assert!(PiecewisePoly::identity().is_nonnegative().unwrap());
        assert!(!PiecewisePoly::constant(rat_int(-1)).is_nonnegative().unwrap());
        // y(2 - y) spliced with a nonnegative tail: pp [0: 2y - y^2][2: y - 2]
        let f = pp(
            &[(0, 1), (2, 1)],
            vec![poly(&[(0, 1), (2, 1), (-1, 1)]), poly(&[(-2, 1), (1, 1)])],
        );
        assert!(f.is_nonnegative().unwrap());
        // x^2 - x dips below zero on (0, 1).
        let g = PiecewisePoly::from_poly(poly(&[(0, 1), (-1, 1), (1, 1)]));
        assert!(!g.is_nonnegative().unwrap());
    }
}
