//! The Riesz space c00(I, E) of finitely supported maps from an index set
//! into an element space E, with pointwise order, finite-family suprema, and
//! the evaluation of indicator-tensor expressions into it.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::pplattice::PiecewisePoly;

/// Opaque index token; equality is exact token equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(String);

impl Index {
    pub fn new(token: impl Into<String>) -> Self {
        Index(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Element spaces usable inside c00: closed over the vector and lattice
/// operations, with a distinguished zero. Lattice operations are fallible
/// because piecewise-polynomial joins can hit irrational crossings.
pub trait RieszElement: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn join(&self, other: &Self) -> Result<Self>;
    fn meet(&self, other: &Self) -> Result<Self>;
    fn abs_val(&self) -> Result<Self>;
}

impl RieszElement for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn join(&self, other: &Self) -> Result<Self> {
        Ok(self.clone().max(other.clone()))
    }
    fn meet(&self, other: &Self) -> Result<Self> {
        Ok(self.clone().min(other.clone()))
    }
    fn abs_val(&self) -> Result<Self> {
        Ok(self.abs())
    }
}

impl RieszElement for PiecewisePoly {
    fn zero() -> Self {
        PiecewisePoly::zero()
    }
    fn is_zero(&self) -> bool {
        PiecewisePoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        PiecewisePoly::add(self, other)
    }
    fn negate(&self) -> Self {
        PiecewisePoly::negate(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        PiecewisePoly::scale(self, c)
    }
    fn join(&self, other: &Self) -> Result<Self> {
        PiecewisePoly::join(self, other)
    }
    fn meet(&self, other: &Self) -> Result<Self> {
        PiecewisePoly::meet(self, other)
    }
    fn abs_val(&self) -> Result<Self> {
        PiecewisePoly::abs(self)
    }
}

/// A finitely supported map. Invariant: no entry is the zero of E, so the
/// key set is exactly the support.
#[derive(Debug, Clone, PartialEq)]
pub struct FinSuppMap<E: RieszElement> {
    entries: BTreeMap<Index, E>,
}

impl<E: RieszElement> FinSuppMap<E> {
    pub fn empty() -> Self {
        FinSuppMap {
            entries: BTreeMap::new(),
        }
    }

    /// Builds a map from pairs, merging duplicate indices by addition and
    /// dropping zero values.
    pub fn from_entries(pairs: impl IntoIterator<Item = (Index, E)>) -> Self {
        let mut entries: BTreeMap<Index, E> = BTreeMap::new();
        for (i, v) in pairs {
            let merged = match entries.remove(&i) {
                Some(old) => old.add(&v),
                None => v,
            };
            if !merged.is_zero() {
                entries.insert(i, merged);
            }
        }
        FinSuppMap { entries }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Index, &E)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Index> {
        self.entries.keys()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The value at an index; zero off the support.
    pub fn get(&self, i: &Index) -> E {
        self.entries.get(i).cloned().unwrap_or_else(E::zero)
    }

    fn pointwise(&self, other: &Self, op: impl Fn(&E, &E) -> Result<E>) -> Result<Self> {
        let mut keys: Vec<Index> = self.entries.keys().cloned().collect();
        keys.extend(other.entries.keys().cloned());
        keys.sort();
        keys.dedup();
        let mut entries = BTreeMap::new();
        for k in keys {
            let v = op(&self.get(&k), &other.get(&k))?;
            if !v.is_zero() {
                entries.insert(k, v);
            }
        }
        Ok(FinSuppMap { entries })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.pointwise(other, |a, b| Ok(a.add(b))).unwrap()
    }

    pub fn negate(&self) -> Self {
        FinSuppMap {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.negate()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::empty();
        }
        FinSuppMap {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.scale(c)))
                .collect(),
        }
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |a, b| a.join(b))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |a, b| a.meet(b))
    }

    pub fn abs_val(&self) -> Result<Self> {
        self.pointwise(&Self::empty(), |a, _| a.abs_val())
    }

    /// True iff the supports share no index.
    pub fn disjoint(&self, other: &Self) -> bool {
        self.entries.keys().all(|k| !other.entries.contains_key(k))
    }
}

/// Pointwise supremum of a nonempty finite family: the least upper bound in
/// the pointwise order. Computed per index over the union of supports; a map
/// without the index contributes its zero value there.
pub fn sup<E: RieszElement>(family: &[FinSuppMap<E>]) -> Result<FinSuppMap<E>> {
    if family.is_empty() {
        return Err(Error::Type("supremum of an empty family".into()));
    }
    let mut keys: Vec<Index> = Vec::new();
    for f in family {
        keys.extend(f.entries.keys().cloned());
    }
    keys.sort();
    keys.dedup();
    let mut entries = BTreeMap::new();
    for k in keys {
        let mut acc = family[0].get(&k);
        for f in &family[1..] {
            acc = acc.join(&f.get(&k))?;
        }
        if !acc.is_zero() {
            entries.insert(k, acc);
        }
    }
    Ok(FinSuppMap { entries })
}

/// An expression over indicator tensors: each leaf is a finite sum of
/// 1_{index} (x) value terms, and interior nodes are the Riesz operations.
#[derive(Debug, Clone, PartialEq)]
pub enum C00TensorExpr<E: RieszElement> {
    Sum(Vec<(Index, E)>),
    Add(Box<C00TensorExpr<E>>, Box<C00TensorExpr<E>>),
    Negate(Box<C00TensorExpr<E>>),
    Scale(Rational, Box<C00TensorExpr<E>>),
    Join(Box<C00TensorExpr<E>>, Box<C00TensorExpr<E>>),
    Meet(Box<C00TensorExpr<E>>, Box<C00TensorExpr<E>>),
    Abs(Box<C00TensorExpr<E>>),
}

/// Evaluates an indicator-tensor expression in c00(I, E): a sum of
/// 1_{i} (x) v terms becomes the map {i -> v} with duplicates merged by
/// addition, and lattice nodes act pointwise.
pub fn from_tensor<E: RieszElement>(expr: &C00TensorExpr<E>) -> Result<FinSuppMap<E>> {
    Ok(match expr {
        C00TensorExpr::Sum(pairs) => FinSuppMap::from_entries(pairs.iter().cloned()),
        C00TensorExpr::Add(a, b) => from_tensor(a)?.add(&from_tensor(b)?),
        C00TensorExpr::Negate(a) => from_tensor(a)?.negate(),
        C00TensorExpr::Scale(c, a) => from_tensor(a)?.scale(c),
        C00TensorExpr::Join(a, b) => from_tensor(a)?.join(&from_tensor(b)?)?,
        C00TensorExpr::Meet(a, b) => from_tensor(a)?.meet(&from_tensor(b)?)?,
        C00TensorExpr::Abs(a) => from_tensor(a)?.abs_val()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_int, Polynomial};

    fn ix(s: &str) -> Index {
        Index::new(s)
    }

    fn map(pairs: &[(&str, i64)]) -> FinSuppMap<Rational> {
        FinSuppMap::from_entries(pairs.iter().map(|&(k, v)| (ix(k), rat_int(v))))
    }

    #[test]
    fn join_merges_supports_pointwise() {
        let f = map(&[("a", 1), ("c", 2)]);
        let g = map(&[("b", 3), ("c", 1)]);
        assert_eq!(f.join(&g).unwrap(), map(&[("a", 1), ("b", 3), ("c", 2)]));
    }

    #[test]
    fn add_cancels_to_empty_support() {
        let f = map(&[("a", 1)]);
        let g = map(&[("a", -1)]);
        assert!(f.add(&g).is_empty());
    }

    #[test]
    fn join_with_piecewise_elements() {
        let x = PiecewisePoly::identity();
        let two_minus_x = PiecewisePoly::from_poly(Polynomial::from_coeffs(vec![
            rat_int(2),
            rat_int(-1),
        ]));
        let f = FinSuppMap::from_entries([(ix("a"), x.clone())]);
        let g = FinSuppMap::from_entries([(ix("a"), two_minus_x.clone())]);
        let joined = f.join(&g).unwrap();
        assert_eq!(joined.get(&ix("a")), x.join(&two_minus_x).unwrap());
    }

    #[test]
    fn join_against_missing_key_joins_with_zero() {
        // {a -> -1} \/ {} is {} because max(-1, 0) = 0.
        let f = map(&[("a", -1)]);
        assert!(f.join(&FinSuppMap::empty()).unwrap().is_empty());
    }

    #[test]
    fn sup_examples() {
        let family = vec![map(&[("a", 1), ("c", 2)]), map(&[("b", 3), ("c", 1)])];
        assert_eq!(
            sup(&family).unwrap(),
            map(&[("a", 1), ("b", 3), ("c", 2)])
        );
        let single = vec![map(&[("a", -7)])];
        assert_eq!(sup(&single).unwrap(), map(&[("a", -7)]));
        assert!(sup::<Rational>(&[]).is_err());
    }

    #[test]
    fn from_tensor_examples() {
        let e = C00TensorExpr::Sum(vec![(ix("a"), rat_int(5)), (ix("b"), rat_int(7))]);
        assert_eq!(from_tensor(&e).unwrap(), map(&[("a", 5), ("b", 7)]));

        let cancel = C00TensorExpr::Sum(vec![(ix("a"), rat_int(1)), (ix("a"), rat_int(-1))]);
        assert!(from_tensor(&cancel).unwrap().is_empty());

        let joined = C00TensorExpr::Join(
            Box::new(C00TensorExpr::Sum(vec![(ix("a"), rat_int(2))])),
            Box::new(C00TensorExpr::Sum(vec![(ix("a"), rat_int(3))])),
        );
        assert_eq!(from_tensor(&joined).unwrap(), map(&[("a", 3)]));
    }

    #[test]
    fn disjoint_examples() {
        assert!(map(&[("a", 1)]).disjoint(&map(&[("b", 1)])));
        assert!(!map(&[("a", 1)]).disjoint(&map(&[("a", 2)])));
    }

    #[test]
    fn disjoint_nonnegative_meet_is_zero() {
        let f = map(&[("a", 2), ("b", 5)]);
        let g = map(&[("c", 1)]);
        assert!(f.disjoint(&g));
        assert!(f.meet(&g).unwrap().is_empty());
    }
}
