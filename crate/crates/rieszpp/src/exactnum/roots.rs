use num_traits::{Signed, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// An isolating interval for one real root. `lo == hi` marks an exact
/// rational root; otherwise the interval contains exactly one root, which is
/// irrational and lies strictly inside (lo, hi).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Exact sign classification of a polynomial on an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalSign {
    StrictlyPositive,
    StrictlyNegative,
    IdenticallyZero,
    /// Both signs occur; the two fields witness each.
    Mixed {
        positive_at: Rational,
        negative_at: Rational,
    },
    /// Nonnegative throughout, zero at finitely many interior points.
    NonnegativeWithZeros,
    /// Nonpositive throughout, zero at finitely many interior points.
    NonpositiveWithZeros,
}

const MAX_REFINE: usize = 4096;

/// Sturm chain of a squarefree polynomial without rational roots. Endpoint
/// evaluations are then never zero on the leading element, which keeps the
/// half-open count V(lo) - V(hi) exact.
pub(crate) struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub(crate) fn new(p: &Polynomial) -> Self {
        assert!(!p.is_zero());
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct roots in (lo, hi].
    pub(crate) fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        debug_assert!(!self.chain[0].eval(lo).is_zero());
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// Counts and localizes the distinct real roots of an arbitrary nonzero
/// polynomial by splitting off the rational roots exactly and Sturm-counting
/// the irrational remainder.
pub(crate) struct RootCounter {
    rational_roots: Vec<Rational>,
    irrational: Option<(Polynomial, SturmChain)>,
}

impl RootCounter {
    pub(crate) fn new(p: &Polynomial) -> Self {
        assert!(!p.is_zero());
        let q = p.squarefree_part();
        let rational_roots = q.rational_roots();
        let mut w = q;
        for r in &rational_roots {
            w = w.deflate_root(r);
        }
        let irrational = if w.degree().is_some_and(|d| d >= 1) {
            let chain = SturmChain::new(&w);
            Some((w, chain))
        } else {
            None
        };
        RootCounter {
            rational_roots,
            irrational,
        }
    }

    pub(crate) fn rational_roots(&self) -> &[Rational] {
        &self.rational_roots
    }

    /// Distinct roots in (lo, hi].
    pub(crate) fn count_half_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let rat = self
            .rational_roots
            .iter()
            .filter(|r| *r > lo && *r <= hi)
            .count();
        let irr = match &self.irrational {
            Some((_, chain)) => chain.count_half_open(lo, hi),
            None => 0,
        };
        rat + irr
    }

    /// Distinct roots in the open interval (lo, hi). Endpoints are rational,
    /// so only a rational root can sit at hi.
    pub(crate) fn count_open(&self, lo: &Rational, hi: &Rational) -> usize {
        let mut n = self.count_half_open(lo, hi);
        if self.rational_roots.contains(hi) {
            n -= 1;
        }
        n
    }

    /// An isolating interval for some irrational root in (lo, hi), if any.
    pub(crate) fn irrational_witness(&self, lo: &Rational, hi: &Rational) -> Option<(Rational, Rational)> {
        let (_, chain) = self.irrational.as_ref()?;
        if chain.count_half_open(lo, hi) == 0 {
            return None;
        }
        let (mut a, mut b) = (lo.clone(), hi.clone());
        for _ in 0..MAX_REFINE {
            if chain.count_half_open(&a, &b) == 1 && &b - &a <= crate::exactnum::rat(1, 4) {
                return Some((a, b));
            }
            let m = (&a + &b) / Rational::from_integer(2.into());
            if chain.count_half_open(&a, &m) >= 1 {
                b = m;
            } else {
                a = m;
            }
        }
        unreachable!("isolating bisection did not converge");
    }
}

/// Isolates all real roots of `p` in the range (lo, hi]. Rational roots come
/// back as degenerate point intervals; each remaining interval holds exactly
/// one irrational root strictly inside it. Intervals are disjoint, sorted,
/// and strictly separated from one another.
pub fn isolate_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::IndeterminateRoots);
    }
    if lo >= hi {
        return Err(Error::InvalidRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let counter = RootCounter::new(p);
    let points: Vec<Rational> = counter
        .rational_roots
        .iter()
        .filter(|r| *r > lo && *r <= hi)
        .cloned()
        .collect();
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    if let Some((_, chain)) = &counter.irrational {
        isolate_irrational(chain, lo, hi, &counter.rational_roots, &mut intervals);
        separate(chain, &mut intervals);
    }
    let mut out: Vec<RootInterval> = points
        .into_iter()
        .map(|r| RootInterval { lo: r.clone(), hi: r })
        .collect();
    out.extend(intervals.into_iter().map(|(lo, hi)| RootInterval { lo, hi }));
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

fn isolate_irrational(
    chain: &SturmChain,
    lo: &Rational,
    hi: &Rational,
    exclude: &[Rational],
    out: &mut Vec<(Rational, Rational)>,
) {
    let count = chain.count_half_open(lo, hi);
    if count == 0 {
        return;
    }
    let narrow_enough = hi - lo <= crate::exactnum::rat(1, 4);
    let clear_of_points = !exclude.iter().any(|r| r >= lo && r <= hi);
    if count == 1 && narrow_enough && clear_of_points {
        out.push((lo.clone(), hi.clone()));
        return;
    }
    // A bisection midpoint is rational and the chain polynomial has no
    // rational roots, so the split never lands on a root.
    let m = half(lo, hi);
    isolate_irrational(chain, lo, &m, exclude, out);
    isolate_irrational(chain, &m, hi, exclude, out);
}

/// Shrinks intervals until consecutive ones no longer share an endpoint.
fn separate(chain: &SturmChain, intervals: &mut [(Rational, Rational)]) {
    for i in 1..intervals.len() {
        let mut guard = 0;
        while intervals[i - 1].1 >= intervals[i].0 {
            let (a, b) = intervals[i].clone();
            let m = half(&a, &b);
            if chain.count_half_open(&a, &m) == 1 {
                intervals[i] = (a, m);
            } else {
                intervals[i] = (m, b);
            }
            guard += 1;
            assert!(guard < MAX_REFINE, "interval separation did not converge");
        }
    }
}

/// Finds a rational t in (lo, hi) such that exactly `target` roots of the
/// counted polynomial lie in (lo, t] and avoid(t) is false. The valid set is
/// a nonempty open interval minus finitely many points, so a guided binary
/// search with local perturbation always lands.
fn find_sample(
    counter: &RootCounter,
    avoid: &Polynomial,
    lo: &Rational,
    hi: &Rational,
    target: usize,
) -> Rational {
    let two = Rational::from_integer(2.into());
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let mut m = half(&a, &b);
    for _ in 0..MAX_REFINE {
        let c = counter.count_half_open(lo, &m);
        if c < target {
            a = m;
            m = half(&a, &b);
        } else if c > target {
            b = m;
            m = half(&a, &b);
        } else if avoid.eval(&m).is_zero() {
            // Perturb off the finite zero set without leaving the bracket.
            m = &m + &(&(&b - &m) / &(&two * &two));
        } else {
            return m;
        }
    }
    unreachable!("sample search did not converge");
}

/// Exact sign of `p` on the open interval (lo, hi).
pub fn sign_on_interval(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<IntervalSign> {
    if lo >= hi {
        return Err(Error::InvalidRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    if p.is_zero() {
        return Ok(IntervalSign::IdenticallyZero);
    }
    let odd = p.odd_part();
    let sign_changes = if odd.degree().is_none_or(|d| d == 0) {
        0
    } else {
        RootCounter::new(&odd).count_open(lo, hi)
    };
    if sign_changes > 0 {
        // The sign flips at the first root of the odd part; bracket it.
        let counter = RootCounter::new(&odd);
        let before = find_sample(&counter, p, lo, hi, 0);
        let after = find_sample(&counter, p, lo, hi, 1);
        let (positive_at, negative_at) = if p.eval(&before).is_positive() {
            (before, after)
        } else {
            (after, before)
        };
        debug_assert!(p.eval(&positive_at).is_positive());
        debug_assert!(p.eval(&negative_at).is_negative());
        return Ok(IntervalSign::Mixed {
            positive_at,
            negative_at,
        });
    }
    // Constant sign apart from isolated zeros of even multiplicity.
    let counter = RootCounter::new(p);
    let sample = find_sample(&counter, p, lo, hi, 0);
    let positive = p.eval(&sample).is_positive();
    let zeros = counter.count_open(lo, hi);
    Ok(match (positive, zeros) {
        (true, 0) => IntervalSign::StrictlyPositive,
        (false, 0) => IntervalSign::StrictlyNegative,
        (true, _) => IntervalSign::NonnegativeWithZeros,
        (false, _) => IntervalSign::NonpositiveWithZeros,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn isolates_sqrt_two() {
        let p = poly(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &rat_int(0), &rat_int(3)).unwrap();
        assert_eq!(roots.len(), 1);
        let r = &roots[0];
        assert!(!r.is_point());
        assert!(r.lo >= rat_int(1) && r.hi <= rat_int(2));
        // Sign change across the interval pins the root inside it.
        assert!(p.eval(&r.lo).is_negative() && p.eval(&r.hi).is_positive());
    }

    #[test]
    fn rational_root_is_a_point() {
        let p = poly(&[-1, 1]);
        let roots = isolate_roots(&p, &rat_int(0), &rat_int(3)).unwrap();
        assert_eq!(
            roots,
            vec![RootInterval {
                lo: rat_int(1),
                hi: rat_int(1)
            }]
        );
    }

    #[test]
    fn no_real_roots() {
        let p = poly(&[1, 0, 1]);
        assert!(isolate_roots(&p, &rat_int(0), &rat_int(10)).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            isolate_roots(&Polynomial::zero(), &rat_int(0), &rat_int(1)),
            Err(Error::IndeterminateRoots)
        );
    }

    #[test]
    fn mixed_rational_and_irrational() {
        // (x - 1)(x^2 - 3): roots 1, +-sqrt(3)
        let p = &poly(&[-1, 1]) * &poly(&[-3, 0, 1]);
        let roots = isolate_roots(&p, &rat_int(0), &rat_int(2)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].is_point() && roots[0].lo == rat_int(1));
        assert!(!roots[1].is_point());
        assert!(roots[1].lo > rat_int(1));
    }

    #[test]
    fn sign_positive() {
        let p = poly(&[1, 0, 1]);
        assert_eq!(
            sign_on_interval(&p, &rat_int(0), &rat_int(5)).unwrap(),
            IntervalSign::StrictlyPositive
        );
    }

    #[test]
    fn sign_identically_zero() {
        assert_eq!(
            sign_on_interval(&Polynomial::zero(), &rat_int(0), &rat_int(1)).unwrap(),
            IntervalSign::IdenticallyZero
        );
    }

    #[test]
    fn sign_mixed_with_witnesses() {
        let p = poly(&[-1, 1]);
        match sign_on_interval(&p, &rat_int(0), &rat_int(2)).unwrap() {
            IntervalSign::Mixed {
                positive_at,
                negative_at,
            } => {
                assert!(p.eval(&positive_at).is_positive());
                assert!(p.eval(&negative_at).is_negative());
                assert!(negative_at < rat_int(1) && positive_at > rat_int(1));
            }
            other => panic!("expected mixed, got {other:?}"),
        }
    }

    #[test]
    fn sign_nonnegative_touching_zero() {
        // (x - 1)^2 on (0, 2)
        let p = &poly(&[-1, 1]) * &poly(&[-1, 1]);
        assert_eq!(
            sign_on_interval(&p, &rat_int(0), &rat_int(2)).unwrap(),
            IntervalSign::NonnegativeWithZeros
        );
    }

    #[test]
    fn sign_mixed_at_irrational_crossing() {
        let p = poly(&[-2, 0, 1]);
        match sign_on_interval(&p, &rat_int(0), &rat_int(3)).unwrap() {
            IntervalSign::Mixed { .. } => {}
            other => panic!("expected mixed, got {other:?}"),
        }
    }

    #[test]
    fn dense_scan_oracle_agrees_on_root_counts() {
        // Compare against a step-1/1024 sign-change scan for several fixed
        // polynomials whose roots are separated by more than the step.
        let cases: Vec<Polynomial> = vec![
            poly(&[-2, 0, 1]),                    // sqrt(2)
            &poly(&[-1, 1]) * &poly(&[-3, 0, 1]), // 1, sqrt(3)
            poly(&[6, -11, 6, -1]),               // roots 1, 2, 3 (times -1)
            poly(&[1, 0, 1]),                     // none
        ];
        for p in cases {
            if p.is_zero() {
                continue;
            }
            let (lo, hi) = (rat_int(0), rat_int(4));
            let isolated = isolate_roots(&p, &lo, &hi).unwrap();
            let step = rat(1, 1024);
            let mut scanned = 0usize;
            let mut x = lo.clone();
            let mut prev = p.eval(&x);
            while x < hi {
                let next = &x + &step;
                let v = p.eval(&next);
                if (prev.is_negative() && (v.is_positive() || v.is_zero()))
                    || (prev.is_positive() && (v.is_negative() || v.is_zero()))
                {
                    scanned += 1;
                    // Skip over an exact zero so it is not counted twice.
                    if v.is_zero() {
                        x = &next + &step;
                        prev = p.eval(&x);
                        continue;
                    }
                }
                prev = v;
                x = next;
            }
            assert_eq!(isolated.len(), scanned, "polynomial {p:?}");
        }
    }
}
