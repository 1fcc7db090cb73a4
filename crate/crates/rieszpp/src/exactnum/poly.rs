use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Univariate polynomial with rational coefficients, stored lowest degree
/// first. Canonical form: no trailing zero coefficient; the zero polynomial
/// is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The identity polynomial x.
    pub fn identity() -> Self {
        Polynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(coeff: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coeff;
        Polynomial::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero when k exceeds the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None is the "minus infinity" degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from(BigInt::from(i)))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Taylor shift: returns q with q(x) = p(x + a).
    pub fn shift(&self, a: &Rational) -> Self {
        // Horner on the shifted variable.
        let mut result = Polynomial::zero();
        let linear = Polynomial::from_coeffs(vec![a.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            result = &(&result * &linear) + &Polynomial::constant(c.clone());
        }
        result
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(c * &factor);
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// The product of the distinct irreducible factors: p / gcd(p, p').
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.exact_div(&g).monic()
        }
    }

    /// Yun's squarefree factorization: returns s_1, ..., s_m (all monic,
    /// squarefree, pairwise coprime) with self = lead * prod s_i^i.
    pub fn squarefree_factorization(&self) -> Vec<Polynomial> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut w = f.exact_div(&g);
        let mut z = &df.exact_div(&g) - &w.derivative();
        let mut factors = Vec::new();
        while w.degree() != Some(0) {
            let s = w.gcd(&z);
            w = w.exact_div(&s);
            z = &z.exact_div(&s) - &w.derivative();
            factors.push(s);
        }
        factors
    }

    /// The monic product of squarefree factors of odd multiplicity. The real
    /// roots of the odd part are exactly the points where self changes sign.
    pub fn odd_part(&self) -> Polynomial {
        let mut result = Polynomial::one();
        for (i, s) in self.squarefree_factorization().iter().enumerate() {
            if (i + 1) % 2 == 1 {
                result = &result * s;
            }
        }
        result
    }

    /// Cauchy bound: every real root r satisfies |r| < bound.
    pub fn cauchy_root_bound(&self) -> Rational {
        let lead = match self.leading() {
            None => return Rational::one(),
            Some(l) => l,
        };
        let mut max = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rational::one()
    }

    /// All rational roots, each listed once, sorted ascending. Found exactly
    /// via the rational root theorem on the primitive integer form.
    pub fn rational_roots(&self) -> Vec<Rational> {
        assert!(!self.is_zero(), "rational_roots of the zero polynomial");
        let mut roots = Vec::new();
        // Strip the root at 0 first so the constant term is nonzero.
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(Rational::zero());
        }
        let p = Polynomial::from_coeffs(self.coeffs[low..].to_vec());
        if p.degree() == Some(0) {
            return roots;
        }
        let ints = p.primitive_integer_coeffs();
        let a0 = ints.first().unwrap().abs();
        let an = ints.last().unwrap().abs();
        let bound = p.cauchy_root_bound();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                let cand = Rational::new(num.clone(), den.clone());
                if cand > bound {
                    continue;
                }
                for c in [cand.clone(), -cand] {
                    if p.eval(&c).is_zero() && !roots.contains(&c) {
                        roots.push(c);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Divides out the linear factor (x - r); panics if r is not a root.
    pub fn deflate_root(&self, r: &Rational) -> Polynomial {
        let divisor = Polynomial::from_coeffs(vec![-r.clone(), Rational::one()]);
        self.exact_div(&divisor)
    }

    /// Integer coefficients after clearing denominators and content.
    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() || content.is_one() {
            ints
        } else {
            ints.into_iter().map(|v| v / &content).collect()
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            small.push(i.clone());
            let j = n / &i;
            if j != i {
                large.push(j);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::dsl::print_polynomial(self, 'x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn derivative_of_square_twice_is_two() {
        let x2 = Polynomial::monomial(rat_int(1), 2);
        let second = x2.derivative().derivative();
        assert_eq!(second, Polynomial::constant(rat_int(2)));
    }

    #[test]
    fn eval_running_example() {
        // x^2 - 3/2 x + 1 at x = 2 is 2
        let p = poly(&[(1, 1), (-3, 2), (1, 1)]);
        assert_eq!(p.eval(&rat_int(2)), rat_int(2));
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[(1, 1), (1, 1)]);
        let b = poly(&[(-1, 1), (1, 1)]);
        assert_eq!(&a * &b, poly(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn canonical_trims_trailing_zeros() {
        let p = Polynomial::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::from_coeffs(vec![rat_int(0)]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[(3, 2), (0, 1), (2, 1), (1, 1)]);
        let b = poly(&[(-1, 1), (1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = poly(&[(-1, 1), (1, 1)]);
        let a = &common * &poly(&[(2, 1), (1, 1)]);
        let b = &common * &poly(&[(5, 1), (0, 1), (1, 1)]);
        assert_eq!(a.gcd(&b), common.monic());
    }

    #[test]
    fn odd_part_drops_even_multiplicities() {
        // (x-1)^2 (x-2) has odd part (x-2)
        let sq = poly(&[(-1, 1), (1, 1)]);
        let lin = poly(&[(-2, 1), (1, 1)]);
        let p = &(&sq * &sq) * &lin;
        assert_eq!(p.odd_part(), lin.monic());
    }

    #[test]
    fn rational_roots_finds_all() {
        // roots 0, 2/3, -5
        let p = &(&Polynomial::identity() * &poly(&[(-2, 3), (1, 1)])) * &poly(&[(5, 1), (1, 1)]);
        assert_eq!(p.rational_roots(), vec![rat(-5, 1), rat(0, 1), rat(2, 3)]);
    }

    #[test]
    fn rational_roots_skips_irrational() {
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]); // x^2 - 2
        assert!(p.rational_roots().is_empty());
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = poly(&[(1, 2), (-3, 1), (0, 1), (1, 1)]);
        let a = rat(5, 3);
        let q = p.shift(&a);
        for x in [rat_int(0), rat(1, 7), rat_int(-2)] {
            assert_eq!(q.eval(&x), p.eval(&(&x + &a)));
        }
    }
}
