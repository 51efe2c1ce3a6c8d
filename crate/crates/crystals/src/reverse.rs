//! Reverse tableau models: reverse marginally large tableaux and reverse
//! semistandard tableaux, the entry-complement relabelings that connect
//! them to the plain models, the induced crystal structures, and the
//! mirror involution of the infinity crystal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{alpha, tau, Rank, Weight};
use crate::crystal::Crystal;
use crate::mlt::{parse_key, Mlt, MltCrystal};
use crate::ssyt::{content_of, validate_tableau, Ssyt, SsytCrystal};
use crate::{DominantPartition, Error, Result};

/// A reverse marginally large tableau, stored as its box counts `z_i^j`
/// (row `i`, class `j`, with `i + j <= n + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "CountsJson", try_from = "CountsJson")]
pub struct Rmlt {
    n: usize,
    /// `rows[i - 1][j - 1]` is `z_i^j`.
    rows: Vec<Vec<i64>>,
}

impl Rmlt {
    /// The all-zero element; the unique highest element of the reverse
    /// infinity model.
    pub fn highest(rank: Rank) -> Self {
        let n = rank.n();
        Rmlt {
            n,
            rows: (1..=n).map(|i| vec![0; n + 1 - i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.n).unwrap()
    }

    /// `z_i^j` for `1 <= i <= n`, `1 <= j <= n + 1 - i`.
    pub fn count(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn count_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        &mut self.rows[i - 1][j - 1]
    }

    /// `z_i^j` with out-of-range positions reading zero.
    pub fn count_or_zero(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j == 0 || i > self.n || i + j > self.n + 1 {
            0
        } else {
            self.count(i, j)
        }
    }

    pub fn from_counts(rank: Rank, rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rank.n();
        if rows.len() != n || rows.iter().enumerate().any(|(k, r)| r.len() != n - k) {
            return Err(Error::invalid("count array", "triangular shape mismatch"));
        }
        if rows.iter().flatten().any(|&c| c < 0) {
            return Err(Error::invalid("count array", "counts must be nonnegative"));
        }
        Ok(Rmlt { n, rows })
    }

    pub fn depth(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct CountsJson {
    n: usize,
    counts: BTreeMap<String, i64>,
}

impl From<Rmlt> for CountsJson {
    fn from(t: Rmlt) -> Self {
        let mut counts = BTreeMap::new();
        for i in 1..=t.n {
            for j in 1..=(t.n + 1 - i) {
                let c = t.count(i, j);
                if c != 0 {
                    counts.insert(format!("{i},{j}"), c);
                }
            }
        }
        CountsJson { n: t.n, counts }
    }
}

impl TryFrom<CountsJson> for Rmlt {
    type Error = Error;

    fn try_from(json: CountsJson) -> Result<Self> {
        let rank = Rank::new(json.n)?;
        let mut t = Rmlt::highest(rank);
        for (key, value) in json.counts {
            let (i, j) = parse_key(&key)?;
            if i == 0 || j == 0 || i + j > json.n + 1 {
                return Err(Error::invalid("count key", format!("({i},{j}) out of range")));
            }
            if value < 0 {
                return Err(Error::invalid("count", "counts must be nonnegative"));
            }
            *t.count_mut(i, j) = value;
        }
        Ok(t)
    }
}

/// The relabeling that subtracts each entry from `n + 2`: on counts it is
/// the reindexing `z_i^j = y_i^{n+2-j}`.
pub fn eta(t: &Rmlt) -> Mlt {
    let n = t.n;
    let mut out = Mlt::highest(t.rank());
    for i in 1..=n {
        for j in 1..=(n + 1 - i) {
            *out.count_mut(i, n + 2 - j) = t.count(i, j);
        }
    }
    out
}

/// Inverse of [`eta`].
pub fn eta_inv(t: &Mlt) -> Rmlt {
    let n = t.n();
    let mut out = Rmlt::highest(t.rank());
    for j in 1..=n {
        for i in (j + 1)..=(n + 1) {
            *out.count_mut(j, n + 2 - i) = t.count(j, i);
        }
    }
    out
}

/// The reverse-infinity crystal: operators are the plain ones conjugated
/// through [`eta`] with the index flip `i -> n + 1 - i`; no operator swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RmltCrystal {
    rank: Rank,
}

impl RmltCrystal {
    pub fn new(rank: Rank) -> Self {
        RmltCrystal { rank }
    }

    fn plain(&self) -> MltCrystal {
        MltCrystal::new(self.rank)
    }
}

impl Crystal for RmltCrystal {
    type Elem = Rmlt;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, t: &Rmlt) -> Weight {
        let n = self.rank.n();
        let mut wt = Weight::zero(self.rank);
        for i in 1..=n {
            let mut coeff = 0i64;
            for j in 1..=(n + 1 - i) {
                for k in 1..=i.min(n + 1 - j) {
                    coeff += t.count(j, k);
                }
            }
            wt = wt.add(&alpha(self.rank, i).unwrap().scale(-coeff));
        }
        debug_assert_eq!(wt, tau(&self.plain().weight(&eta(t))));
        wt
    }

    fn eps(&self, t: &Rmlt, i: usize) -> i64 {
        self.plain().eps(&eta(t), self.rank.n() + 1 - i)
    }

    fn phi(&self, t: &Rmlt, i: usize) -> i64 {
        self.plain().phi(&eta(t), self.rank.n() + 1 - i)
    }

    fn raise(&self, t: &Rmlt, i: usize) -> Option<Rmlt> {
        self.plain()
            .raise(&eta(t), self.rank.n() + 1 - i)
            .map(|u| eta_inv(&u))
    }

    fn lower(&self, t: &Rmlt, i: usize) -> Option<Rmlt> {
        self.plain()
            .lower(&eta(t), self.rank.n() + 1 - i)
            .map(|u| eta_inv(&u))
    }
}

/// A reverse semistandard Young tableau: rows weakly decrease, columns
/// strictly decrease, entries in `1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Rssyt {
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl Rssyt {
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        validate_tableau(n, &rows, "reverse tableau", |a, b| a >= b, |a, b| a > b)?;
        Ok(Rssyt { n, rows })
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn content(&self) -> Vec<i64> {
        content_of(self.n, &self.rows)
    }

    /// Count of `j`-boxes in row `k`.
    pub fn row_count(&self, k: usize, j: u32) -> i64 {
        self.rows
            .get(k - 1)
            .map_or(0, |row| row.iter().filter(|&&e| e == j).count() as i64)
    }

    /// Number of boxes in row `k` with entry strictly greater than `i`;
    /// these form a prefix of the row.
    pub fn prefix_above(&self, k: usize, i: u32) -> i64 {
        self.rows
            .get(k - 1)
            .map_or(0, |row| row.iter().take_while(|&&e| e > i).count() as i64)
    }
}

/// Entrywise complement `a -> n + 2 - a` from reverse to plain tableaux.
pub fn complement_to_ssyt(t: &Rssyt) -> Ssyt {
    let rows = t
        .rows
        .iter()
        .map(|r| r.iter().map(|&e| t.n as u32 + 2 - e).collect())
        .collect();
    Ssyt::new(t.n, rows).expect("complement of a reverse tableau is semistandard")
}

/// Entrywise complement from plain to reverse tableaux.
pub fn complement_to_rssyt(t: &Ssyt) -> Rssyt {
    let rows = t
        .rows
        .iter()
        .map(|r| r.iter().map(|&e| t.n as u32 + 2 - e).collect())
        .collect();
    Rssyt::new(t.n, rows).expect("complement of a semistandard tableau is reverse")
}

/// The crystal on reverse tableaux of a fixed shape, transported through
/// the complement: raising for `i` is plain lowering for `n + 1 - i` and
/// conversely, and the string statistics swap accordingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RssytCrystal {
    rank: Rank,
    shape: DominantPartition,
}

impl RssytCrystal {
    pub fn new(rank: Rank, shape: DominantPartition) -> Self {
        RssytCrystal { rank, shape }
    }

    pub fn shape(&self) -> &DominantPartition {
        &self.shape
    }

    fn plain(&self) -> SsytCrystal {
        SsytCrystal::new(self.rank, self.shape.clone())
    }

    /// The unique element killed by all raising operators: the complement
    /// of the plain lowest tableau.
    pub fn highest(&self) -> Rssyt {
        complement_to_rssyt(&self.plain().lowest_tableau())
    }

    /// The unique element killed by all lowering operators.
    pub fn lowest(&self) -> Rssyt {
        complement_to_rssyt(&self.plain().highest_tableau())
    }
}

impl Crystal for RssytCrystal {
    type Elem = Rssyt;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, t: &Rssyt) -> Weight {
        Weight(t.content())
    }

    fn eps(&self, t: &Rssyt, i: usize) -> i64 {
        self.plain()
            .phi(&complement_to_ssyt(t), self.rank.n() + 1 - i)
    }

    fn phi(&self, t: &Rssyt, i: usize) -> i64 {
        self.plain()
            .eps(&complement_to_ssyt(t), self.rank.n() + 1 - i)
    }

    fn raise(&self, t: &Rssyt, i: usize) -> Option<Rssyt> {
        self.plain()
            .lower(&complement_to_ssyt(t), self.rank.n() + 1 - i)
            .map(|u| complement_to_rssyt(&u))
    }

    fn lower(&self, t: &Rssyt, i: usize) -> Option<Rssyt> {
        self.plain()
            .raise(&complement_to_ssyt(t), self.rank.n() + 1 - i)
            .map(|u| complement_to_rssyt(&u))
    }
}

/// The mirror involution of the infinity model: raise `x` to the highest
/// element recording the word, then lower along the index-flipped word.
/// The result does not depend on the chosen word.
pub fn rho_infinity(crystal: &MltCrystal, x: &Mlt) -> Mlt {
    let mut word = Vec::new();
    let mut cur = x.clone();
    'up: loop {
        for i in crystal.rank().indices() {
            if let Some(next) = crystal.raise(&cur, i) {
                word.push(i);
                cur = next;
                continue 'up;
            }
        }
        break;
    }
    let n = crystal.rank().n();
    let mut out = cur; // the highest element
    for &i in word.iter().rev() {
        out = crystal
            .lower(&out, n + 1 - i)
            .expect("lowering is total on the infinity model");
    }
    out
}
