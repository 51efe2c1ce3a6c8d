//! Polyhedral models: triangular lattice vectors for the periodic word
//! `..., n, ..., 2, 1`, the linear forms driving the operators, the
//! membership inequalities for the infinity and highest-weight sets, and
//! both operator tables.

use serde::{Deserialize, Serialize};

use crate::cartan::{alpha, cartan_entry, pairing, DominantPartition, Rank, Weight};
use crate::crystal::Crystal;
use crate::{Error, Result};

/// The periodic word: position `k` carries color `((k - 1) mod n) + 1`, so
/// every color repeats once per period of length `n`.
pub fn iota_color(n: usize, k: usize) -> usize {
    (k - 1) % n + 1
}

/// Flat position of the entry in period `j` with color `i`.
pub fn flat_index(n: usize, j: usize, i: usize) -> usize {
    (j - 1) * n + i
}

/// A triangular integer vector `x_j^{(i)}` for `i + j <= n + 1`; positions
/// outside the triangle are identically zero. Entries are unconstrained —
/// membership in the polyhedral sets is a predicate, not a type invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolyVector {
    pub n: usize,
    /// `x[i - 1]` lists `x_1^{(i)}, ..., x_{n+1-i}^{(i)}`.
    pub x: Vec<Vec<i64>>,
}

impl PolyVector {
    pub fn zero(rank: Rank) -> Self {
        let n = rank.n();
        PolyVector {
            n,
            x: (1..=n).map(|i| vec![0; n + 1 - i]).collect(),
        }
    }

    pub fn new(rank: Rank, x: Vec<Vec<i64>>) -> Result<Self> {
        let n = rank.n();
        if x.len() != n || x.iter().enumerate().any(|(k, r)| r.len() != n - k) {
            return Err(Error::invalid("lattice vector", "triangular shape mismatch"));
        }
        Ok(PolyVector { n, x })
    }

    pub fn rank(&self) -> Rank {
        Rank::new(self.n).unwrap()
    }

    /// `x_j^{(i)}`; reads 0 outside the triangle (including `i = 0`).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        if i == 0 || j == 0 || i > self.n || i + j > self.n + 1 {
            0
        } else {
            self.x[i - 1][j - 1]
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(
            i >= 1 && j >= 1 && i <= self.n && i + j <= self.n + 1,
            "position ({j}, {i}) lies outside the triangular support"
        );
        self.x[i - 1][j - 1] = v;
    }

    /// Value at a flat position of the periodic word.
    pub fn flat(&self, k: usize) -> i64 {
        let i = iota_color(self.n, k);
        let j = (k - 1) / self.n + 1;
        self.get(i, j)
    }

    /// Sum of all entries; the distance from the zero vector along
    /// lowering chains.
    pub fn total(&self) -> i64 {
        self.x.iter().flatten().sum()
    }
}

/// The linear form at flat position `k`: the entry there plus the
/// Cartan-paired entries strictly beyond it.
pub fn sigma_k(x: &PolyVector, k: usize) -> i64 {
    let n = x.n;
    let color = iota_color(n, k);
    let mut acc = x.flat(k);
    // Only the triangle can contribute; its largest flat position is in
    // period n.
    for m in (k + 1)..=(n * n) {
        let c = cartan_entry(color, iota_color(n, m));
        if c != 0 {
            acc += c * x.flat(m);
        }
    }
    acc
}

/// Maximum of the color-`i` linear forms and the set of periods attaining
/// it. Beyond the triangle every form vanishes, so the maximum over the
/// infinite tail is realized inside the window of periods `1..=n+1` and
/// zero is always a candidate.
pub fn sigma_i_max(x: &PolyVector, i: usize) -> (i64, Vec<usize>) {
    let n = x.n;
    let values: Vec<i64> = (1..=(n + 1)).map(|j| sigma_k(x, flat_index(n, j, i))).collect();
    let best = *values.iter().max().unwrap();
    let arg = values
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == best)
        .map(|(idx, _)| idx + 1)
        .collect();
    (best, arg)
}

/// Closed form for the color-`i` maximum on members of the polyhedral
/// sets, exposed for cross-checking against [`sigma_i_max`].
pub fn sigma_i_closed_form(x: &PolyVector, i: usize) -> i64 {
    let n = x.n;
    (1..=(n + 1))
        .map(|j| {
            let mut v = x.get(i, j) - x.get(i + 1, j);
            for k in (j + 1)..=(n + 1 - i) {
                v += 2 * x.get(i, k);
            }
            for k in (j + 1)..=(n + 2 - i) {
                v -= x.get(i - 1, k);
            }
            if i < n {
                for k in (j + 1)..=(n - i) {
                    v -= x.get(i + 1, k);
                }
            }
            v
        })
        .max()
        .unwrap()
}

/// The staircase inequalities cutting out the infinity set: each diagonal
/// chain `x_1^{(i)} >= x_2^{(i-1)} >= ... >= x_i^{(1)} >= 0` holds.
pub fn in_sigma(x: &PolyVector) -> bool {
    for i in 1..=x.n {
        let mut prev = i64::MAX;
        for j in 1..=i {
            let v = x.get(i + 1 - j, j);
            if v > prev {
                return false;
            }
            prev = v;
        }
        if prev < 0 {
            return false;
        }
    }
    true
}

/// The extra linear form of the highest-weight model: minus the pairing of
/// the highest weight, plus the Cartan-paired entries of the whole vector.
pub fn sigma0_i(x: &PolyVector, lambda: &DominantPartition, i: usize) -> i64 {
    let n = x.n;
    let mut acc = -pairing(i, &lambda.weight()).unwrap();
    for m in 1..=(n * n) {
        let c = cartan_entry(i, iota_color(n, m));
        if c != 0 {
            acc += c * x.flat(m);
        }
    }
    acc
}

/// Membership in the highest-weight set: the staircase chains plus the
/// bounded-difference inequalities against the weight gaps.
pub fn in_sigma_lambda(x: &PolyVector, lambda: &DominantPartition) -> bool {
    if !in_sigma(x) {
        return false;
    }
    for i in 1..=x.n {
        for j in 1..=i {
            if lambda.part(i) - lambda.part(i + 1) < x.get(i - j + 1, j) - x.get(i - j, j) {
                return false;
            }
        }
    }
    true
}

/// The infinity crystal on lattice vectors: lowering adds one box at the
/// first maximizing period, raising removes one at the last and vanishes
/// when the maximum is not positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BInftyPoly {
    rank: Rank,
}

impl BInftyPoly {
    pub fn new(rank: Rank) -> Self {
        BInftyPoly { rank }
    }
}

impl Crystal for BInftyPoly {
    type Elem = PolyVector;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, x: &PolyVector) -> Weight {
        let n = self.rank.n();
        let mut wt = Weight::zero(self.rank);
        for i in 1..=n {
            let coeff: i64 = (1..=(n + 1 - i)).map(|j| x.get(i, j)).sum();
            wt = wt.add(&alpha(self.rank, i).unwrap().scale(-coeff));
        }
        wt
    }

    fn eps(&self, x: &PolyVector, i: usize) -> i64 {
        sigma_i_max(x, i).0
    }

    fn phi(&self, x: &PolyVector, i: usize) -> i64 {
        pairing(i, &self.weight(x)).unwrap() + self.eps(x, i)
    }

    fn raise(&self, x: &PolyVector, i: usize) -> Option<PolyVector> {
        let (best, arg) = sigma_i_max(x, i);
        if best <= 0 {
            return None;
        }
        let j = *arg.last().unwrap();
        let mut out = x.clone();
        out.set(i, j, out.get(i, j) - 1);
        Some(out)
    }

    fn lower(&self, x: &PolyVector, i: usize) -> Option<PolyVector> {
        let (_, arg) = sigma_i_max(x, i);
        let j = *arg.first().unwrap();
        let mut out = x.clone();
        out.set(i, j, out.get(i, j) + 1);
        Some(out)
    }
}

/// The highest-weight crystal on lattice vectors: the operator conditions
/// compare the color maximum against the extra linear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BLambdaPoly {
    rank: Rank,
    lambda: DominantPartition,
}

impl BLambdaPoly {
    pub fn new(rank: Rank, lambda: DominantPartition) -> Self {
        BLambdaPoly { rank, lambda }
    }

    pub fn lambda(&self) -> &DominantPartition {
        &self.lambda
    }
}

impl Crystal for BLambdaPoly {
    type Elem = PolyVector;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, x: &PolyVector) -> Weight {
        BInftyPoly::new(self.rank)
            .weight(x)
            .add(&self.lambda.weight())
    }

    fn eps(&self, x: &PolyVector, i: usize) -> i64 {
        sigma_i_max(x, i).0.max(sigma0_i(x, &self.lambda, i))
    }

    fn phi(&self, x: &PolyVector, i: usize) -> i64 {
        pairing(i, &self.weight(x)).unwrap() + self.eps(x, i)
    }

    fn raise(&self, x: &PolyVector, i: usize) -> Option<PolyVector> {
        let (best, arg) = sigma_i_max(x, i);
        if best < sigma0_i(x, &self.lambda, i) || best <= 0 {
            return None;
        }
        let j = *arg.last().unwrap();
        let mut out = x.clone();
        out.set(i, j, out.get(i, j) - 1);
        Some(out)
    }

    fn lower(&self, x: &PolyVector, i: usize) -> Option<PolyVector> {
        let (best, arg) = sigma_i_max(x, i);
        if best <= sigma0_i(x, &self.lambda, i) {
            return None;
        }
        let j = *arg.first().unwrap();
        let mut out = x.clone();
        out.set(i, j, out.get(i, j) + 1);
        Some(out)
    }
}

/// Enumerates every member of the infinity set with entry sum at most
/// `bound`, in lexicographic order of the triangle rows. Used as an
/// independent oracle for truncated graph generation.
pub fn enumerate_sigma(rank: Rank, bound: i64) -> Vec<PolyVector> {
    let n = rank.n();
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=(n + 1 - i)).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut current = PolyVector::zero(rank);
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        left: i64,
        current: &mut PolyVector,
        out: &mut Vec<PolyVector>,
    ) {
        if pos == cells.len() {
            if in_sigma(current) {
                out.push(current.clone());
            }
            return;
        }
        let (i, j) = cells[pos];
        for v in 0..=left {
            current.set(i, j, v);
            rec(cells, pos + 1, left - v, current, out);
        }
        current.set(i, j, 0);
    }
    rec(&cells, 0, bound, &mut current, &mut out);
    out
}

/// Enumerates every member of the highest-weight set for `lambda`, by
/// scanning entry values bounded by the largest part with chain pruning.
pub fn enumerate_sigma_lambda(rank: Rank, lambda: &DominantPartition) -> Vec<PolyVector> {
    let n = rank.n();
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=(n + 1 - i)).map(move |j| (i, j)))
        .collect();
    let cap = lambda.part(1);
    let mut out = Vec::new();
    let mut current = PolyVector::zero(rank);
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        cap: i64,
        lambda: &DominantPartition,
        current: &mut PolyVector,
        out: &mut Vec<PolyVector>,
    ) {
        if pos == cells.len() {
            if in_sigma_lambda(current, lambda) {
                out.push(current.clone());
            }
            return;
        }
        let (i, j) = cells[pos];
        for v in 0..=cap {
            current.set(i, j, v);
            rec(cells, pos + 1, cap, lambda, current, out);
        }
        current.set(i, j, 0);
    }
    rec(&cells, 0, cap, lambda, &mut current, &mut out);
    out
}
