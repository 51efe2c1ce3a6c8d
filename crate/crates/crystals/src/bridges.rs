//! Correspondences between the models: the lattice-vector descriptions of
//! both reverse tableau families, the partition-sequence machinery, the
//! embedding of a highest-weight tableau into the reverse infinity model,
//! Lusztig data, the involutions transported to lattice vectors, and a
//! verifier for the whole diagram of maps.

use serde::{Deserialize, Serialize};

use crate::cartan::{weyl_dim, DominantPartition, Rank};
use crate::crystal::{Crystal, RLambdaCrystal, RPoint, TensorCrystal};
use crate::gt::{varsigma, varsigma_inv, GtCrystal};
use crate::mlt::{Mlt, MltCrystal};
use crate::polyhedral::{in_sigma, in_sigma_lambda, BLambdaPoly, PolyVector};
use crate::reverse::{
    complement_to_rssyt, complement_to_ssyt, eta, eta_inv, rho_infinity, Rmlt, RmltCrystal, Rssyt,
    RssytCrystal,
};
use crate::ssyt::evacuation;
use crate::{Error, Result};

/// The weakly decreasing sequences attached to a member of the
/// highest-weight lattice set: sequence `i` shifts the `(i-1)`-st vector
/// row by the matching tail of the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSequences {
    /// `seqs[i - 1]` has length `n + 2 - i`.
    pub seqs: Vec<Vec<i64>>,
}

impl LambdaSequences {
    /// `Lambda_i^{(k)}`, reading 0 out of range.
    pub fn at(&self, i: usize, k: usize) -> i64 {
        self.seqs
            .get(i - 1)
            .and_then(|s| s.get(k - 1))
            .copied()
            .unwrap_or(0)
    }
}

/// The nonnegative integer square `a_{k,l}` (`1 <= k < l <= n+1`)
/// parametrizing one monomial of the standard reduced-word basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LusztigData {
    pub n: usize,
    /// `a[k - 1][l - k - 1]` is `a_{k,l}`.
    pub a: Vec<Vec<i64>>,
}

impl LusztigData {
    pub fn at(&self, k: usize, l: usize) -> i64 {
        self.a[k - 1][l - k - 1]
    }
}

/// Lattice-vector description of a reverse marginally large tableau:
/// position `(i, j)` accumulates the counts `z_{n+2-i-j}^k` for `k` up to
/// `i`.
pub fn psi_infty(t: &Rmlt) -> PolyVector {
    let n = t.n();
    let mut x = PolyVector::zero(t.rank());
    for i in 1..=n {
        for j in 1..=(n + 1 - i) {
            let row = n + 2 - i - j;
            let v = (1..=i).map(|k| t.count(row, k)).sum();
            x.set(i, j, v);
        }
    }
    x
}

/// Inverse of [`psi_infty`]: counts are recovered from successive
/// differences along the staircase diagonals. Rejects vectors outside the
/// infinity set.
pub fn psi_infty_inv(x: &PolyVector) -> Result<Rmlt> {
    if !in_sigma(x) {
        return Err(Error::domain(
            "infinity vector description",
            "vector is not in the infinity set",
        ));
    }
    let n = x.n;
    let rank = x.rank();
    let mut t = Rmlt::highest(rank);
    for r in 1..=n {
        for s in 1..=(n + 1 - r) {
            let j = n + 2 - s - r;
            *t.count_mut(r, s) = x.get(s, j) - x.get(s - 1, j + 1);
        }
    }
    debug_assert_eq!(psi_infty(&t), *x);
    Ok(t)
}

/// The partition sequences of a member of the highest-weight set; rejects
/// non-members.
pub fn lambda_sequences(x: &PolyVector, lambda: &DominantPartition) -> Result<LambdaSequences> {
    if !in_sigma_lambda(x, lambda) {
        return Err(Error::domain(
            "partition sequences",
            "vector is not in the highest-weight set",
        ));
    }
    let n = x.n;
    let seqs = (1..=(n + 1))
        .map(|i| {
            (1..=(n + 2 - i))
                .map(|k| x.get(i - 1, k) + lambda.part(k + i - 1))
                .collect()
        })
        .collect();
    Ok(LambdaSequences { seqs })
}

/// Builds the reverse tableau of shape `lambda` whose entry-`i` cells fill
/// the skew strip between consecutive partition sequences.
pub fn psi_lambda(x: &PolyVector, lambda: &DominantPartition) -> Result<Rssyt> {
    let seqs = lambda_sequences(x, lambda)?;
    let n = x.n;
    let rows = lambda
        .positive_rows()
        .iter()
        .enumerate()
        .map(|(r0, &len)| {
            let r = r0 + 1;
            (1..=len)
                .map(|c| {
                    // Entry is the largest i with Lambda_i^{(r)} >= c; the
                    // sequences weakly decrease in i and end at zero.
                    (1..=(n + 1))
                        .rev()
                        .find(|&i| seqs.at(i, r) >= c)
                        .expect("column is inside the first sequence")
                        as u32
                })
                .collect()
        })
        .collect();
    Rssyt::new(n, rows)
}

/// Inverse of [`psi_lambda`]: the vector entry at `(i, k)` counts the boxes
/// of row `k` exceeding `i`, shifted down by the partition tail.
pub fn psi_lambda_inv(t: &Rssyt, lambda: &DominantPartition) -> Result<PolyVector> {
    let expected: Vec<usize> = lambda.positive_rows().iter().map(|&p| p as usize).collect();
    if t.shape() != expected {
        return Err(Error::domain(
            "reverse tableau description",
            "tableau shape does not match the partition",
        ));
    }
    let n = t.n;
    let mut x = PolyVector::zero(Rank::new(n)?);
    for i in 1..=n {
        for k in 1..=(n + 1 - i) {
            x.set(i, k, t.prefix_above(k, i as u32) - lambda.part(k + i));
        }
    }
    Ok(x)
}

/// Column gap between the leftmost `i`-box of row `j` and the rightmost
/// `i`-box of row `j + 1`, computed as the difference of prefix counts
/// (which stays meaningful when either row has no `i`-box).
pub fn xi(t: &Rssyt, i: usize, j: usize) -> i64 {
    t.prefix_above(j, i as u32) - t.prefix_above(j + 1, i as u32 - 1)
}

/// Embeds a reverse tableau into the reverse infinity model by its column
/// gaps: the count at `(i, j)` is the gap for entry `j` between rows
/// `n + 1 - i - j` and `n + 2 - i - j`.
pub fn ml_embed(t: &Rssyt) -> Rmlt {
    let n = t.n;
    let rank = Rank::new(n).expect("tableau rank");
    assert!(
        t.rows.len() <= n,
        "the embedding is defined for tableaux with at most n rows"
    );
    let mut out = Rmlt::highest(rank);
    for i in 1..=n {
        for j in 1..=(n + 1 - i) {
            *out.count_mut(i, j) = xi(t, j, n + 2 - i - j);
        }
    }
    out
}

/// Image test for the embedding: partial count sums are bounded by the
/// weight gaps.
pub fn in_ml_image(t: &Rmlt, lambda: &DominantPartition) -> bool {
    let n = t.n();
    for i in 1..=n {
        for j in 1..=i {
            let lhs: i64 = (1..=(i - j + 1)).map(|k| t.count_or_zero(n + 1 - i, k)).sum::<i64>()
                - (1..=(i - j)).map(|k| t.count_or_zero(n + 2 - i, k)).sum::<i64>();
            if lhs > lambda.part(i) - lambda.part(i + 1) {
                return false;
            }
        }
    }
    true
}

/// The restricted-tableau coordinates of an embedded element: row `i`
/// lists the partial sums `r_{i,1}, ..., r_{i,n+1-i}`.
pub fn theta_r(t: &Rmlt) -> Vec<Vec<i64>> {
    let n = t.n();
    (1..=n)
        .map(|i| {
            (1..=(n + 1 - i))
                .map(|m| (1..=i).map(|k| t.count(n + 2 - i - m, k)).sum())
                .collect()
        })
        .collect()
}

/// The difference bounds satisfied by the restricted coordinates of every
/// embedded element.
pub fn r_array_within_bounds(r: &[Vec<i64>], lambda: &DominantPartition) -> bool {
    let n = r.len();
    for l in 1..=n {
        for j in 1..=(n + 1 - l) {
            let prev = if l >= 2 { r[l - 2][j - 1] } else { 0 };
            if r[l - 1][j - 1] - prev > lambda.part(l - 1 + j) - lambda.part(l + j) {
                return false;
            }
        }
    }
    true
}

/// Lusztig data read directly off a reverse tableau: `a_{k,l}` is the
/// column gap for entry `n + 2 - l` between rows `l - k` and `l - k + 1`.
pub fn lusztig_data(t: &Rssyt) -> LusztigData {
    let n = t.n;
    let a = (1..=n)
        .map(|k| ((k + 1)..=(n + 1)).map(|l| xi(t, n + 2 - l, l - k)).collect())
        .collect();
    LusztigData { n, a }
}

/// Lusztig data of a marginally large tableau: the identity reindexing of
/// its counts.
pub fn chi_of_mlt(t: &Mlt) -> LusztigData {
    let n = t.n();
    let a = (1..=n)
        .map(|k| ((k + 1)..=(n + 1)).map(|l| t.count(k, l)).collect())
        .collect();
    LusztigData { n, a }
}

/// Inverse of [`chi_of_mlt`].
pub fn chi_inv(data: &LusztigData) -> Result<Mlt> {
    let rank = Rank::new(data.n)?;
    let mut t = Mlt::highest(rank);
    if data.a.len() != data.n
        || data.a.iter().enumerate().any(|(k, r)| r.len() != data.n - k)
    {
        return Err(Error::invalid("basis data", "triangular shape mismatch"));
    }
    for k in 1..=data.n {
        for l in (k + 1)..=(data.n + 1) {
            *t.count_mut(k, l) = data.at(k, l);
        }
    }
    Ok(t)
}

/// The central-symmetry involution transported to the highest-weight
/// lattice set: out to reverse tableaux, complement, evacuate, and back.
pub fn rho_poly_lambda(x: &PolyVector, lambda: &DominantPartition) -> Result<PolyVector> {
    let t = psi_lambda(x, lambda)?;
    let evacuated = evacuation(&complement_to_ssyt(&t));
    psi_lambda_inv(&complement_to_rssyt(&evacuated), lambda)
}

/// The mirror involution transported to the infinity lattice set.
pub fn rho_poly_infty(x: &PolyVector) -> Result<PolyVector> {
    let t = psi_infty_inv(x)?;
    let rank = t.rank();
    let mirrored = rho_infinity(&MltCrystal::new(rank), &eta(&t));
    Ok(psi_infty(&eta_inv(&mirrored)))
}

/// One verified discrepancy of the diagram checker.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramViolation {
    pub check: String,
    pub witness: String,
}

/// Outcome of [`verify_diagram`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DiagramReport {
    pub violations: Vec<DiagramViolation>,
    /// Number of highest-weight elements examined.
    pub lambda_elements: usize,
    /// Number of truncated infinity elements examined.
    pub infinity_elements: usize,
}

impl DiagramReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, check: &str, witness: String) {
        self.violations.push(DiagramViolation {
            check: check.to_string(),
            witness,
        });
    }
}

/// Checks that a map between two crystals preserves weight and string
/// statistics and intertwines both operators on the listed elements.
pub fn check_strict_morphism<A, B>(
    a: &A,
    b: &B,
    elems: &[A::Elem],
    map: impl Fn(&A::Elem) -> B::Elem,
    label: &str,
    on_violation: &mut impl FnMut(&str, String),
) where
    A: Crystal,
    B: Crystal,
{
    let n = a.rank().n();
    for e in elems {
        let f = map(e);
        if a.weight(e) != b.weight(&f) {
            on_violation(label, format!("weight mismatch at {e:?}"));
        }
        for i in 1..=n {
            if a.eps(e, i) != b.eps(&f, i) || a.phi(e, i) != b.phi(&f, i) {
                on_violation(label, format!("string statistics mismatch at {e:?}, i={i}"));
            }
            let lowered = a.lower(e, i).map(|d| map(&d));
            if lowered != b.lower(&f, i) {
                on_violation(label, format!("lowering mismatch at {e:?}, i={i}"));
            }
            let raised = a.raise(e, i).map(|u| map(&u));
            if raised != b.raise(&f, i) {
                on_violation(label, format!("raising mismatch at {e:?}, i={i}"));
            }
        }
    }
}

/// Verifies the full diagram of maps over one highest weight and a
/// depth-bounded slice of the infinity models, with an injectable
/// embedding (the production embedding is [`ml_embed`]).
pub fn verify_diagram_with(
    rank: Rank,
    lambda: &DominantPartition,
    depth: usize,
    embed: impl Fn(&Rssyt) -> Rmlt,
) -> Result<DiagramReport> {
    let mut report = DiagramReport::default();
    let cap = crate::graph::DEFAULT_NODE_CAP;

    // Highest-weight side: materialize the reverse tableau crystal.
    let rssyt_crystal = RssytCrystal::new(rank, lambda.clone());
    let rssyt_gen = crate::graph::generate(&rssyt_crystal, rssyt_crystal.highest(), None, cap)?;
    report.lambda_elements = rssyt_gen.elements.len();
    if num_bigint::BigUint::from(rssyt_gen.elements.len()) != weyl_dim(lambda) {
        report.push(
            "dimension",
            format!("generated {} elements", rssyt_gen.elements.len()),
        );
    }

    let blambda = BLambdaPoly::new(rank, lambda.clone());
    let gt_crystal = GtCrystal::new(rank, lambda.clone());
    let tensor = TensorCrystal::new(
        RmltCrystal::new(rank),
        RLambdaCrystal::new(lambda.weight()),
    );

    let vectors: Vec<PolyVector> = rssyt_gen
        .elements
        .iter()
        .map(|t| psi_lambda_inv(t, lambda))
        .collect::<Result<_>>()?;

    // Vertical isomorphisms out of the vector model.
    check_strict_morphism(
        &blambda,
        &rssyt_crystal,
        &vectors,
        |x| psi_lambda(x, lambda).expect("member"),
        "tableau description",
        &mut |c, w| report.push(c, w),
    );
    check_strict_morphism(
        &gt_crystal,
        &blambda,
        &vectors
            .iter()
            .map(|x| varsigma_inv(x, lambda).expect("member"))
            .collect::<Vec<_>>(),
        varsigma,
        "pattern shift",
        &mut |c, w| report.push(c, w),
    );
    // The embedding into the tensor with the one-point crystal.
    check_strict_morphism(
        &rssyt_crystal,
        &tensor,
        &rssyt_gen.elements,
        |t| (embed(t), RPoint),
        "embedding",
        &mut |c, w| report.push(c, w),
    );

    for t in &rssyt_gen.elements {
        let via_embedding = psi_infty(&embed(t));
        let direct = psi_lambda_inv(t, lambda)?;
        if via_embedding != direct {
            report.push("path-equality", format!("tableau {t:?}"));
        }
        if lusztig_data(t) != chi_of_mlt(&eta(&embed(t))) {
            report.push("basis-data-path", format!("tableau {t:?}"));
        }
        if !in_ml_image(&embed(t), lambda) {
            report.push("image-test", format!("tableau {t:?}"));
        }
    }

    // Infinity side, truncated by depth.
    let rmlt_crystal = RmltCrystal::new(rank);
    let rmlt_gen = crate::graph::generate(&rmlt_crystal, Rmlt::highest(rank), Some(depth), cap)?;
    report.infinity_elements = rmlt_gen.elements.len();
    let binfty = crate::polyhedral::BInftyPoly::new(rank);
    let interior: Vec<Rmlt> = rmlt_gen
        .elements
        .iter()
        .zip(&rmlt_gen.layers)
        .filter(|&(_, &layer)| layer < depth)
        .map(|(e, _)| e.clone())
        .collect();
    // Restrict to the interior so both sides of every operator comparison
    // stay within the generated window.
    check_strict_morphism(
        &rmlt_crystal,
        &binfty,
        &interior,
        psi_infty,
        "infinity vector description",
        &mut |c, w| report.push(c, w),
    );

    Ok(report)
}

/// Verifies the production diagram for one highest weight.
pub fn verify_diagram(
    rank: Rank,
    lambda: &DominantPartition,
    depth: usize,
) -> Result<DiagramReport> {
    verify_diagram_with(rank, lambda, depth, ml_embed)
}
