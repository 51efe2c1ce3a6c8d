//! Marginally large tableaux: the count representation, materialization of
//! the minimal finite representative, and the operators with the marginal
//! repair step.
//!
//! An element is determined by the counts `y_j^i` of `i`-boxes in row `j`
//! (for `i > j`); the infinitely many leading `j`-boxes of each row are
//! implicit. Operators are applied by materializing the smallest finite
//! representative, running the signature rule on it, and folding the chosen
//! box back into counts: acting on a leading box of row `i` is exactly the
//! repair case and only ever touches `y_i^{i+1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{alpha, pairing, Rank, Weight};
use crate::crystal::Crystal;
use crate::ssyt::Ssyt;
use crate::{Error, Result};

/// A marginally large tableau, stored as its box counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "CountsJson", try_from = "CountsJson")]
pub struct Mlt {
    n: usize,
    /// `rows[j - 1][i - j - 1]` is the count of `i`-boxes in row `j`.
    rows: Vec<Vec<i64>>,
}

impl Mlt {
    /// The element with every count zero; the unique highest element.
    pub fn highest(rank: Rank) -> Self {
        let n = rank.n();
        Mlt {
            n,
            rows: (1..=n).map(|j| vec![0; n + 1 - j]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.n).unwrap()
    }

    /// The count of `i`-boxes in row `j`, for `1 <= j < i <= n + 1`.
    pub fn count(&self, j: usize, i: usize) -> i64 {
        self.rows[j - 1][i - j - 1]
    }

    pub fn count_mut(&mut self, j: usize, i: usize) -> &mut i64 {
        &mut self.rows[j - 1][i - j - 1]
    }

    /// Builds counts from explicit values; all counts must be nonnegative.
    pub fn from_counts(rank: Rank, rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rank.n();
        if rows.len() != n || rows.iter().enumerate().any(|(k, r)| r.len() != n - k) {
            return Err(Error::invalid("count array", "triangular shape mismatch"));
        }
        if rows.iter().flatten().any(|&c| c < 0) {
            return Err(Error::invalid("count array", "counts must be nonnegative"));
        }
        Ok(Mlt { n, rows })
    }

    /// Reads counts off any finite window of the infinite tableau: entries
    /// equal to their row index are leading and ignored.
    pub fn from_finite_rows(rank: Rank, finite: &[Vec<u32>]) -> Result<Self> {
        let n = rank.n();
        let mut t = Mlt::highest(rank);
        for (r, row) in finite.iter().enumerate() {
            let j = r + 1;
            if j > n {
                return Err(Error::invalid("tableau window", "more rows than the rank allows"));
            }
            for &e in row {
                let i = e as usize;
                if i < j || i > n + 1 {
                    return Err(Error::invalid(
                        "tableau window",
                        format!("entry {i} cannot sit in row {j}"),
                    ));
                }
                if i > j {
                    *t.count_mut(j, i) += 1;
                }
            }
        }
        Ok(t)
    }

    /// The minimal marginally large representative: row `j` carries exactly
    /// one more leading `j` than row `j + 1` has boxes. Rows are built
    /// bottom-up; every row down to row `n` is present.
    pub fn materialize(&self) -> Ssyt {
        self.materialize_padded(0)
    }

    /// Representative with `extra` additional full leading columns. Used to
    /// confirm that operator application does not depend on the window.
    pub fn materialize_padded(&self, extra: usize) -> Ssyt {
        let n = self.n;
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut below_len = 0usize;
        for j in (1..=n).rev() {
            let leading = below_len + 1 + extra;
            let mut row = vec![j as u32; leading];
            for i in (j + 1)..=(n + 1) {
                for _ in 0..self.count(j, i) {
                    row.push(i as u32);
                }
            }
            below_len = row.len() - extra;
            rows[j - 1] = row;
        }
        // Padding keeps the staircase shape; lengths differ by the counted
        // boxes plus one, so the result is always a valid tableau.
        Ssyt::new(n, rows).expect("materialization is semistandard")
    }

    /// Leading-block length of each row in the minimal representative.
    fn leading_lengths(&self) -> Vec<usize> {
        let n = self.n;
        let mut leading = vec![0usize; n];
        let mut below_len = 0usize;
        for j in (1..=n).rev() {
            leading[j - 1] = below_len + 1;
            let counted: i64 = self.rows[j - 1].iter().sum();
            below_len = leading[j - 1] + counted as usize;
        }
        leading
    }

    /// Total number of counted boxes; the distance from the highest
    /// element.
    pub fn depth(&self) -> i64 {
        // Every lowering step adds one counted box: either a new entry in
        // place or the repair that grows y_i^{i+1}.
        self.rows.iter().flatten().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct CountsJson {
    n: usize,
    counts: BTreeMap<String, i64>,
}

impl From<Mlt> for CountsJson {
    fn from(t: Mlt) -> Self {
        let mut counts = BTreeMap::new();
        for j in 1..=t.n {
            for i in (j + 1)..=(t.n + 1) {
                let c = t.count(j, i);
                if c != 0 {
                    counts.insert(format!("{j},{i}"), c);
                }
            }
        }
        CountsJson { n: t.n, counts }
    }
}

impl TryFrom<CountsJson> for Mlt {
    type Error = Error;

    fn try_from(json: CountsJson) -> Result<Self> {
        let rank = Rank::new(json.n)?;
        let mut t = Mlt::highest(rank);
        for (key, value) in json.counts {
            let (j, i) = parse_key(&key)?;
            if j == 0 || j >= i || i > json.n + 1 {
                return Err(Error::invalid("count key", format!("({j},{i}) out of range")));
            }
            if value < 0 {
                return Err(Error::invalid("count", "counts must be nonnegative"));
            }
            *t.count_mut(j, i) = value;
        }
        Ok(t)
    }
}

pub(crate) fn parse_key(key: &str) -> Result<(usize, usize)> {
    let mut parts = key.split(',');
    let bad = || Error::invalid("count key", format!("expected \"a,b\", got {key:?}"));
    let a = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let b = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// The crystal of marginally large tableaux (a model of the infinity
/// crystal): lowering never vanishes, raising vanishes exactly at the
/// highest element strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MltCrystal {
    rank: Rank,
}

impl MltCrystal {
    pub fn new(rank: Rank) -> Self {
        MltCrystal { rank }
    }

    /// Raising string length by the closed form: the running maximum of
    /// prefix sums of `y_k^{i+1} - y_{k-1}^i` over `1 <= k <= j <= i`.
    fn eps_closed_form(&self, t: &Mlt, i: usize) -> i64 {
        let mut best = i64::MIN;
        let mut acc = 0i64;
        for j in 1..=i {
            let upper = t.count(j, i + 1);
            let lower = if j >= 2 { t.count(j - 1, i) } else { 0 };
            acc += upper - lower;
            best = best.max(acc);
        }
        best
    }
}

impl Crystal for MltCrystal {
    type Elem = Mlt;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, t: &Mlt) -> Weight {
        let n = self.rank.n();
        let mut wt = Weight::zero(self.rank);
        for i in 1..=n {
            let mut coeff = 0i64;
            for k in 1..=i {
                for l in (i + 1)..=(n + 1) {
                    if l > k {
                        coeff += t.count(k, l);
                    }
                }
            }
            wt = wt.add(&alpha(self.rank, i).unwrap().scale(-coeff));
        }
        wt
    }

    fn eps(&self, t: &Mlt, i: usize) -> i64 {
        let value = self.eps_closed_form(t, i);
        debug_assert_eq!(
            value,
            t.materialize().signature(i).minus as i64,
            "closed form must match the signature rule"
        );
        value
    }

    fn phi(&self, t: &Mlt, i: usize) -> i64 {
        self.eps(t, i) + pairing(i, &self.weight(t)).unwrap()
    }

    fn raise(&self, t: &Mlt, i: usize) -> Option<Mlt> {
        let finite = t.materialize();
        let (r, c) = finite.signature(i).rightmost_minus?;
        let j = r + 1;
        debug_assert!(
            c >= t.leading_lengths()[r],
            "a surviving minus always sits on a counted box"
        );
        debug_assert_eq!(finite.rows[r][c] as usize, i + 1);
        let mut out = t.clone();
        *out.count_mut(j, i + 1) -= 1;
        if j < i {
            *out.count_mut(j, i) += 1;
        }
        Some(out)
    }

    fn lower(&self, t: &Mlt, i: usize) -> Option<Mlt> {
        let finite = t.materialize();
        let sig = finite.signature(i);
        let (r, c) = sig
            .leftmost_plus
            .expect("the marginal column of height i always survives as a plus");
        let j = r + 1;
        let mut out = t.clone();
        if c < t.leading_lengths()[r] {
            // Leading box: the repair case. The changed box merges into row
            // i's counted block and the rows below shift one step.
            debug_assert_eq!(j, i);
            *out.count_mut(i, i + 1) += 1;
        } else {
            debug_assert_eq!(finite.rows[r][c] as usize, i);
            *out.count_mut(j, i) -= 1;
            *out.count_mut(j, i + 1) += 1;
        }
        Some(out)
    }
}
