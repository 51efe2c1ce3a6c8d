//! The abstract-crystal contract, the one-point crystal and the tensor
//! product rule.
//!
//! A [`Crystal`] is a structure object (it may carry a rank, a highest
//! weight, or nothing) acting on immutable element values. Operators return
//! `Option`: `None` is the formal symbol for "the operator kills this
//! element" and is never conflated with any genuine element such as the
//! zero lattice vector.

use serde::{Deserialize, Serialize};

use crate::cartan::{pairing, Rank, Weight};

/// Sentinel for the minus-infinity string value. The general definition
/// allows `phi_i = -infinity`; none of the models in this crate produce it,
/// so statistics carry plain integers with this distinguished value held in
/// reserve.
pub const PHI_MINUS_INFINITY: i64 = i64::MIN;

/// Weight and string statistics of one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementStats {
    pub wt: Weight,
    /// `eps[i - 1]` is the raising string length for index `i`.
    pub eps: Vec<i64>,
    /// `phi[i - 1]` is the lowering string length for index `i`.
    pub phi: Vec<i64>,
}

impl ElementStats {
    /// Checks the string identity `phi_i = eps_i + <alpha_i^vee, wt>` for
    /// every index, the defining compatibility of the three maps.
    pub fn string_identity_holds(&self) -> bool {
        let rank = self.wt.rank();
        rank.indices().all(|i| {
            self.phi[i - 1] == PHI_MINUS_INFINITY
                || self.phi[i - 1] == self.eps[i - 1] + pairing(i, &self.wt).unwrap()
        })
    }
}

/// A crystal structure on elements of type `Self::Elem`.
///
/// Index arguments are 1-based and must lie in `1..=rank().n()`; passing an
/// out-of-range index is a caller bug and panics.
pub trait Crystal {
    type Elem: Clone + Eq + std::hash::Hash + std::fmt::Debug;

    fn rank(&self) -> Rank;

    fn weight(&self, b: &Self::Elem) -> Weight;

    fn eps(&self, b: &Self::Elem, i: usize) -> i64;

    fn phi(&self, b: &Self::Elem, i: usize) -> i64;

    /// The raising operator for index `i`.
    fn raise(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    /// The lowering operator for index `i`.
    fn lower(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    fn stats(&self, b: &Self::Elem) -> ElementStats {
        let n = self.rank().n();
        ElementStats {
            wt: self.weight(b),
            eps: (1..=n).map(|i| self.eps(b, i)).collect(),
            phi: (1..=n).map(|i| self.phi(b, i)).collect(),
        }
    }
}

/// The single point of the one-point crystal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RPoint;

/// The one-point crystal attached to a weight: weight `lambda`,
/// `eps_i = -<alpha_i^vee, lambda>`, `phi_i = 0`, and both operators kill
/// the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RLambdaCrystal {
    lambda: Weight,
}

impl RLambdaCrystal {
    pub fn new(lambda: Weight) -> Self {
        RLambdaCrystal { lambda }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }
}

impl Crystal for RLambdaCrystal {
    type Elem = RPoint;

    fn rank(&self) -> Rank {
        self.lambda.rank()
    }

    fn weight(&self, _: &RPoint) -> Weight {
        self.lambda.clone()
    }

    fn eps(&self, _: &RPoint, i: usize) -> i64 {
        -pairing(i, &self.lambda).unwrap()
    }

    fn phi(&self, _: &RPoint, _i: usize) -> i64 {
        0
    }

    fn raise(&self, _: &RPoint, _: usize) -> Option<RPoint> {
        None
    }

    fn lower(&self, _: &RPoint, _: usize) -> Option<RPoint> {
        None
    }
}

/// Tensor product of two crystals, elements being pairs.
///
/// The operator routing and the max-formulas for the statistics follow the
/// usual four-case table: lowering acts on the left factor exactly when
/// `phi_i(left) > eps_i(right)`, raising exactly when
/// `phi_i(left) >= eps_i(right)`.
#[derive(Debug, Clone)]
pub struct TensorCrystal<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> TensorCrystal<A, B> {
    pub fn new(left: A, right: B) -> Self {
        assert_eq!(left.rank(), right.rank(), "tensor factors must share rank");
        TensorCrystal { left, right }
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorCrystal<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn rank(&self) -> Rank {
        self.left.rank()
    }

    fn weight(&self, (a, b): &Self::Elem) -> Weight {
        self.left.weight(a).add(&self.right.weight(b))
    }

    fn eps(&self, (a, b): &Self::Elem, i: usize) -> i64 {
        let wt_a = self.left.weight(a);
        self.left
            .eps(a, i)
            .max(self.right.eps(b, i) - pairing(i, &wt_a).unwrap())
    }

    fn phi(&self, (a, b): &Self::Elem, i: usize) -> i64 {
        let wt_b = self.right.weight(b);
        self.right
            .phi(b, i)
            .max(self.left.phi(a, i) + pairing(i, &wt_b).unwrap())
    }

    fn raise(&self, (a, b): &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(a, i) >= self.right.eps(b, i) {
            self.left.raise(a, i).map(|a2| (a2, b.clone()))
        } else {
            self.right.raise(b, i).map(|b2| (a.clone(), b2))
        }
    }

    fn lower(&self, (a, b): &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.left.phi(a, i) > self.right.eps(b, i) {
            self.left.lower(a, i).map(|a2| (a2, b.clone()))
        } else {
            self.right.lower(b, i).map(|b2| (a.clone(), b2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{alpha, omega, DominantPartition, Rank};

    #[test]
    fn one_point_statistics() {
        let r2 = Rank::new(2).unwrap();
        let c = RLambdaCrystal::new(omega(r2, 1).unwrap());
        let s = c.stats(&RPoint);
        assert_eq!(s.wt, Weight(vec![1, 0, 0]));
        assert_eq!(s.eps, vec![-1, 0]);
        assert_eq!(s.phi, vec![0, 0]);
        assert!(c.raise(&RPoint, 1).is_none());
        assert!(c.lower(&RPoint, 2).is_none());

        let zero = RLambdaCrystal::new(Weight::zero(r2));
        let s0 = zero.stats(&RPoint);
        assert_eq!(s0.eps, vec![0, 0]);
        assert_eq!(s0.phi, vec![0, 0]);

        let r4 = Rank::new(4).unwrap();
        let lam = DominantPartition::new(r4, &[2, 1]).unwrap();
        let c4 = RLambdaCrystal::new(lam.weight());
        assert_eq!(
            (1..=4).map(|i| c4.eps(&RPoint, i)).collect::<Vec<_>>(),
            vec![-1, -1, 0, 0]
        );
    }

    #[test]
    fn tensor_weight_is_additive() {
        let r2 = Rank::new(2).unwrap();
        let a = RLambdaCrystal::new(omega(r2, 1).unwrap());
        let b = RLambdaCrystal::new(alpha(r2, 2).unwrap());
        let t = TensorCrystal::new(a, b);
        assert_eq!(t.weight(&(RPoint, RPoint)), Weight(vec![1, 1, -1]));
        assert!(ElementStats::string_identity_holds(
            &t.stats(&(RPoint, RPoint))
        ));
    }
}
