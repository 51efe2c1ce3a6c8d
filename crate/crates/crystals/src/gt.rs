//! Gelfand-Tsetlin patterns: interlacing triangular arrays with top row a
//! fixed partition, the induced crystal structure, the coordinate shift to
//! lattice vectors, and the segment reading of that shift.

use serde::{Deserialize, Serialize};

use crate::cartan::{pairing, DominantPartition, Rank, Weight};
use crate::crystal::Crystal;
use crate::polyhedral::{in_sigma_lambda, PolyVector};
use crate::{Error, Result};

/// A Gelfand-Tsetlin pattern: row 0 is `(lambda_1, ..., lambda_n, 0)` and
/// row `i` has length `n + 1 - i`, with every entry wedged between its two
/// upper neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "GtJson", try_from = "GtJson")]
pub struct GtPattern {
    n: usize,
    lambda: DominantPartition,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct GtJson {
    n: usize,
    lambda: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

impl From<GtPattern> for GtJson {
    fn from(g: GtPattern) -> Self {
        GtJson {
            n: g.n,
            lambda: g.lambda.parts().to_vec(),
            rows: g.rows,
        }
    }
}

impl TryFrom<GtJson> for GtPattern {
    type Error = Error;

    fn try_from(json: GtJson) -> Result<Self> {
        let rank = Rank::new(json.n)?;
        let lambda = DominantPartition::new(rank, &json.lambda)?;
        GtPattern::new(lambda, json.rows)
    }
}

impl GtPattern {
    pub fn new(lambda: DominantPartition, rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = lambda.rank().n();
        if rows.len() != n || rows.iter().enumerate().any(|(k, r)| r.len() != n - k) {
            return Err(Error::invalid("pattern", "triangular shape mismatch"));
        }
        let g = GtPattern { n, lambda, rows };
        for i in 1..=n {
            for k in 1..=(n + 1 - i) {
                let v = g.entry(i, k);
                if v < 0 {
                    return Err(Error::invalid("pattern", "entries must be nonnegative"));
                }
                if v > g.entry(i - 1, k) || v < g.entry(i - 1, k + 1) {
                    return Err(Error::invalid(
                        "pattern",
                        format!("interlacing fails at row {i}, position {k}"),
                    ));
                }
            }
        }
        Ok(g)
    }

    /// The pattern whose row `i` is the tail `(lambda_{1+i}, ...)`; the
    /// image of the zero lattice vector.
    pub fn highest(lambda: &DominantPartition) -> Self {
        let n = lambda.rank().n();
        let rows = (1..=n)
            .map(|i| (1..=(n + 1 - i)).map(|k| lambda.part(k + i)).collect())
            .collect();
        GtPattern {
            n,
            lambda: lambda.clone(),
            rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> Rank {
        self.lambda.rank()
    }

    pub fn lambda(&self) -> &DominantPartition {
        &self.lambda
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `y_k^{(i)}`: row 0 reads the partition, out-of-range positions read
    /// zero.
    pub fn entry(&self, i: usize, k: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        if i == 0 {
            self.lambda.part(k)
        } else if i <= self.n {
            self.rows[i - 1].get(k - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    fn with_entry(&self, i: usize, k: usize, v: i64) -> Self {
        let mut rows = self.rows.clone();
        rows[i - 1][k - 1] = v;
        GtPattern {
            n: self.n,
            lambda: self.lambda.clone(),
            rows,
        }
    }
}

/// The coordinate shift onto lattice vectors: subtract the tail of the
/// partition from each row. Lands inside the highest-weight polyhedral set.
pub fn varsigma(g: &GtPattern) -> PolyVector {
    let n = g.n();
    let mut x = PolyVector::zero(g.rank());
    for i in 1..=n {
        for k in 1..=(n + 1 - i) {
            x.set(i, k, g.entry(i, k) - g.lambda().part(k + i));
        }
    }
    x
}

/// Inverse of [`varsigma`]; rejects vectors outside the highest-weight set.
pub fn varsigma_inv(x: &PolyVector, lambda: &DominantPartition) -> Result<GtPattern> {
    if !in_sigma_lambda(x, lambda) {
        return Err(Error::domain(
            "pattern shift",
            "vector is not in the highest-weight set",
        ));
    }
    let n = x.n;
    let rows = (1..=n)
        .map(|i| {
            (1..=(n + 1 - i))
                .map(|k| x.get(i, k) + lambda.part(k + i))
                .collect()
        })
        .collect();
    GtPattern::new(lambda.clone(), rows)
}

/// Builds the lattice vector by reading each diagonal segment of the
/// pattern against the matching tail of the partition and subtracting
/// elementwise. Always equals [`varsigma`]; the two routes are asserted to
/// agree.
pub fn lh_reading(g: &GtPattern) -> PolyVector {
    let n = g.n();
    let mut x = PolyVector::zero(g.rank());
    for k in 1..=n {
        // Segment k runs through y_k^{(1)}, ..., y_k^{(n+1-k)}; the
        // horizontal segment pairs it with lambda_{k+1}, ..., lambda_{n+1}.
        let along: Vec<i64> = (1..=(n + 1 - k)).map(|i| g.entry(i, k)).collect();
        let horiz: Vec<i64> = (1..=(n + 1 - k)).map(|i| g.lambda().part(k + i)).collect();
        for (idx, (a, h)) in along.iter().zip(&horiz).enumerate() {
            x.set(idx + 1, k, a - h);
        }
    }
    debug_assert_eq!(x, varsigma(g));
    x
}

/// The crystal structure on patterns of a fixed top row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtCrystal {
    rank: Rank,
    lambda: DominantPartition,
}

impl GtCrystal {
    pub fn new(rank: Rank, lambda: DominantPartition) -> Self {
        GtCrystal { rank, lambda }
    }

    pub fn lambda(&self) -> &DominantPartition {
        &self.lambda
    }

    pub fn highest(&self) -> GtPattern {
        GtPattern::highest(&self.lambda)
    }

    /// The linear form at row position `j` (with `j = 0` allowed): the
    /// entry plus twice everything to its right in the same row, minus the
    /// paired windows of the neighboring rows. Out-of-range entries read
    /// zero.
    pub fn sigma_j(&self, g: &GtPattern, i: usize, j: usize) -> i64 {
        let n = self.rank.n();
        let mut v = g.entry(i, j);
        for k in (j + 1)..=(n + 1 - i) {
            v += 2 * g.entry(i, k);
        }
        if n >= i {
            for k in j.max(1)..=(n - i) {
                v -= g.entry(i + 1, k);
            }
        }
        for k in (j + 1)..=(n + 2 - i) {
            v -= g.entry(i - 1, k);
        }
        v
    }

    fn max_and_args(&self, g: &GtPattern, i: usize) -> (i64, Vec<usize>) {
        let values: Vec<i64> = (1..=self.rank.n()).map(|j| self.sigma_j(g, i, j)).collect();
        let best = *values.iter().max().unwrap();
        let args = values
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == best)
            .map(|(j, _)| j + 1)
            .collect();
        (best, args)
    }
}

impl Crystal for GtCrystal {
    type Elem = GtPattern;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, g: &GtPattern) -> Weight {
        let n = self.rank.n();
        let coords = (1..=(n + 1))
            .map(|i| {
                let above: i64 = (1..=(n + 2 - i)).map(|k| g.entry(i - 1, k)).sum();
                let below: i64 = if i <= n {
                    (1..=(n + 1 - i)).map(|k| g.entry(i, k)).sum()
                } else {
                    0
                };
                above - below
            })
            .collect();
        Weight(coords)
    }

    fn eps(&self, g: &GtPattern, i: usize) -> i64 {
        self.max_and_args(g, i).0
    }

    fn phi(&self, g: &GtPattern, i: usize) -> i64 {
        pairing(i, &self.weight(g)).unwrap() + self.eps(g, i)
    }

    fn raise(&self, g: &GtPattern, i: usize) -> Option<GtPattern> {
        let (best, args) = self.max_and_args(g, i);
        if best <= 0 {
            return None;
        }
        let v = *args.last().unwrap();
        let out = g.with_entry(i, v, g.entry(i, v) - 1);
        assert_interlacing(&out);
        Some(out)
    }

    fn lower(&self, g: &GtPattern, i: usize) -> Option<GtPattern> {
        let (best, args) = self.max_and_args(g, i);
        if best <= self.sigma_j(g, i, 0) {
            return None;
        }
        let v = *args.first().unwrap();
        let out = g.with_entry(i, v, g.entry(i, v) + 1);
        assert_interlacing(&out);
        Some(out)
    }
}

fn assert_interlacing(g: &GtPattern) {
    debug_assert!(
        GtPattern::new(g.lambda().clone(), g.rows().to_vec()).is_ok(),
        "internal consistency: operator output must interlace"
    );
}

/// All patterns with the given top row, in lexicographic order of the
/// concatenated rows. Errors once more than `cap` patterns are produced.
pub fn enumerate_gt(lambda: &DominantPartition, cap: usize) -> Result<Vec<GtPattern>> {
    let n = lambda.rank().n();
    let mut out: Vec<GtPattern> = Vec::new();
    let highest = GtPattern::highest(lambda);
    let mut rows = highest.rows().to_vec();
    fn rec(
        lambda: &DominantPartition,
        n: usize,
        i: usize,
        k: usize,
        rows: &mut Vec<Vec<i64>>,
        out: &mut Vec<GtPattern>,
        cap: usize,
    ) -> Result<()> {
        if i > n {
            if out.len() >= cap {
                return Err(Error::invalid(
                    "enumeration",
                    format!("more than {cap} patterns"),
                ));
            }
            out.push(GtPattern::new(lambda.clone(), rows.clone()).expect("bounds enforce interlacing"));
            return Ok(());
        }
        let (ni, nk) = if k == n + 1 - i { (i + 1, 1) } else { (i, k + 1) };
        let upper_left = if i == 1 {
            lambda.part(k)
        } else {
            rows[i - 2][k - 1]
        };
        let upper_right = if i == 1 {
            lambda.part(k + 1)
        } else {
            rows[i - 2].get(k).copied().unwrap_or(0)
        };
        for v in upper_right..=upper_left {
            rows[i - 1][k - 1] = v;
            rec(lambda, n, ni, nk, rows, out, cap)?;
        }
        Ok(())
    }
    rec(lambda, n, 1, 1, &mut rows, &mut out, cap)?;
    out.sort();
    Ok(out)
}
