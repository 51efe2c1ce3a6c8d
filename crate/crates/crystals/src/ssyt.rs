//! Semistandard Young tableaux: the signature rule, the highest-weight
//! tableau crystal, jeu de taquin, and the evacuation involution.

use serde::{Deserialize, Serialize};

use crate::cartan::{DominantPartition, Rank, Weight};
use crate::crystal::Crystal;
use crate::{Error, Result};

/// A semistandard Young tableau with entries in `1..=n+1`: rows weakly
/// increase, columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ssyt {
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Ssyt { n, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        validate_tableau(self.n, &self.rows, "semistandard tableau", |a, b| a <= b, |a, b| a < b)
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Number of boxes carrying each entry `1..=n+1`.
    pub fn content(&self) -> Vec<i64> {
        content_of(self.n, &self.rows)
    }

    /// The reading word taken column by column, top to bottom within a
    /// column, columns right to left.
    pub fn far_eastern_word(&self) -> Vec<u32> {
        far_eastern_cells(&self.rows)
            .into_iter()
            .map(|(r, c)| self.rows[r][c])
            .collect()
    }

    /// The reading word taken row by row, right to left within a row, rows
    /// top to bottom. Induces the same string statistics as the
    /// column-by-column reading.
    pub fn middle_eastern_word(&self) -> Vec<u32> {
        middle_eastern_cells(&self.rows)
            .into_iter()
            .map(|(r, c)| self.rows[r][c])
            .collect()
    }

    /// Signature of the column-by-column reading for index `i`.
    pub fn signature(&self, i: usize) -> Signature {
        signature_of_cells(&self.rows, far_eastern_cells(&self.rows), i)
    }

    /// Signature of the row-by-row reading for index `i`; the surviving
    /// sign counts agree with [`signature`](Self::signature).
    pub fn signature_middle_eastern(&self, i: usize) -> Signature {
        signature_of_cells(&self.rows, middle_eastern_cells(&self.rows), i)
    }
}

pub(crate) fn validate_tableau(
    n: usize,
    rows: &[Vec<u32>],
    kind: &'static str,
    row_ok: fn(u32, u32) -> bool,
    col_ok: fn(u32, u32) -> bool,
) -> Result<()> {
    for r in rows {
        if r.is_empty() {
            return Err(Error::invalid(kind, "empty row"));
        }
        for &e in r {
            if e == 0 || e as usize > n + 1 {
                return Err(Error::invalid(kind, format!("entry {e} out of 1..={}", n + 1)));
            }
        }
        for w in r.windows(2) {
            if !row_ok(w[0], w[1]) {
                return Err(Error::invalid(kind, "row condition violated"));
            }
        }
    }
    for rr in rows.windows(2) {
        if rr[0].len() < rr[1].len() {
            return Err(Error::invalid(kind, "row lengths must weakly decrease"));
        }
        for (&above, &below) in rr[0].iter().zip(&rr[1]) {
            if !col_ok(above, below) {
                return Err(Error::invalid(kind, "column condition violated"));
            }
        }
    }
    Ok(())
}

pub(crate) fn content_of(n: usize, rows: &[Vec<u32>]) -> Vec<i64> {
    let mut counts = vec![0i64; n + 1];
    for r in rows {
        for &e in r {
            counts[e as usize - 1] += 1;
        }
    }
    counts
}

fn far_eastern_cells(rows: &[Vec<u32>]) -> Vec<(usize, usize)> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut cells = Vec::new();
    for c in (0..width).rev() {
        for (r, row) in rows.iter().enumerate() {
            if c < row.len() {
                cells.push((r, c));
            }
        }
    }
    cells
}

fn middle_eastern_cells(rows: &[Vec<u32>]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for c in (0..row.len()).rev() {
            cells.push((r, c));
        }
    }
    cells
}

/// Surviving signs of an `i`-signature, with the box coordinates (0-based
/// row, column) of the survivors an operator would act on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    /// Number of surviving minus signs; equals the raising string length.
    pub minus: usize,
    /// Number of surviving plus signs; equals the lowering string length on
    /// finite tableaux.
    pub plus: usize,
    /// Box of the first surviving plus in reading order.
    pub leftmost_plus: Option<(usize, usize)>,
    /// Box of the last surviving minus in reading order.
    pub rightmost_minus: Option<(usize, usize)>,
}

/// Runs the cancellation scan: plus for entry `i`, minus for `i + 1`, a
/// minus cancels the nearest surviving plus before it. The survivors form a
/// block of minuses followed by a block of pluses.
pub(crate) fn signature_of_cells(
    rows: &[Vec<u32>],
    cells: Vec<(usize, usize)>,
    i: usize,
) -> Signature {
    let mut stack: Vec<(bool, (usize, usize))> = Vec::new();
    for (r, c) in cells {
        let e = rows[r][c] as usize;
        if e == i {
            stack.push((true, (r, c)));
        } else if e == i + 1 {
            if stack.last().is_some_and(|&(plus, _)| plus) {
                stack.pop();
            } else {
                stack.push((false, (r, c)));
            }
        }
    }
    let minus = stack.iter().filter(|&&(plus, _)| !plus).count();
    Signature {
        minus,
        plus: stack.len() - minus,
        leftmost_plus: stack.get(minus).map(|&(_, pos)| pos),
        rightmost_minus: minus.checked_sub(1).map(|k| stack[k].1),
    }
}

/// The crystal of semistandard tableaux of a fixed shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsytCrystal {
    rank: Rank,
    shape: DominantPartition,
}

impl SsytCrystal {
    pub fn new(rank: Rank, shape: DominantPartition) -> Self {
        SsytCrystal { rank, shape }
    }

    pub fn shape(&self) -> &DominantPartition {
        &self.shape
    }

    /// The element with every box of row `k` filled with `k`; killed by all
    /// raising operators.
    pub fn highest_tableau(&self) -> Ssyt {
        let rows = self
            .shape
            .positive_rows()
            .iter()
            .enumerate()
            .map(|(k, &len)| vec![k as u32 + 1; len as usize])
            .collect();
        Ssyt { n: self.rank.n(), rows }
    }

    /// The element whose column of height `h` reads `n+2-h, ..., n+1` top
    /// to bottom; killed by all lowering operators.
    pub fn lowest_tableau(&self) -> Ssyt {
        let n = self.rank.n();
        let heights = self.shape.column_heights();
        let nrows = heights.first().copied().unwrap_or(0);
        let rows = (0..nrows)
            .map(|r| {
                heights
                    .iter()
                    .take_while(|&&h| h > r)
                    .map(|&h| (n + 2 - h + r) as u32)
                    .collect()
            })
            .collect();
        Ssyt { n, rows }
    }
}

impl Crystal for SsytCrystal {
    type Elem = Ssyt;

    fn rank(&self) -> Rank {
        self.rank
    }

    fn weight(&self, t: &Ssyt) -> Weight {
        Weight(t.content())
    }

    fn eps(&self, t: &Ssyt, i: usize) -> i64 {
        t.signature(i).minus as i64
    }

    fn phi(&self, t: &Ssyt, i: usize) -> i64 {
        t.signature(i).plus as i64
    }

    fn raise(&self, t: &Ssyt, i: usize) -> Option<Ssyt> {
        let (r, c) = t.signature(i).rightmost_minus?;
        let mut rows = t.rows.clone();
        rows[r][c] = i as u32;
        Some(Ssyt { n: t.n, rows })
    }

    fn lower(&self, t: &Ssyt, i: usize) -> Option<Ssyt> {
        let (r, c) = t.signature(i).leftmost_plus?;
        let mut rows = t.rows.clone();
        rows[r][c] = i as u32 + 1;
        Some(Ssyt { n: t.n, rows })
    }
}

/// A skew tableau: entries on the cells of `outer` minus `inner`,
/// semistandard across the skew cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    pub n: usize,
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    /// Row `r` holds the entries of columns `inner[r]..outer[r]`.
    pub rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(n: usize, outer: Vec<usize>, inner: Vec<usize>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = SkewTableau { n, outer, inner, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let kind = "skew tableau";
        if self.inner.len() > self.outer.len() || self.rows.len() != self.outer.len() {
            return Err(Error::invalid(kind, "shape mismatch"));
        }
        for w in self.outer.windows(2) {
            if w[0] < w[1] {
                return Err(Error::invalid(kind, "outer shape must weakly decrease"));
            }
        }
        for w in self.inner.windows(2) {
            if w[0] < w[1] {
                return Err(Error::invalid(kind, "inner shape must weakly decrease"));
            }
        }
        for r in 0..self.outer.len() {
            let inner = self.inner_at(r);
            if inner > self.outer[r] || self.rows[r].len() != self.outer[r] - inner {
                return Err(Error::invalid(kind, "row width mismatch"));
            }
            for &e in &self.rows[r] {
                if e == 0 || e as usize > self.n + 1 {
                    return Err(Error::invalid(kind, "entry out of range"));
                }
            }
            for w in self.rows[r].windows(2) {
                if w[0] > w[1] {
                    return Err(Error::invalid(kind, "rows must weakly increase"));
                }
            }
        }
        for r in 1..self.outer.len() {
            for c in self.inner_at(r)..self.outer[r] {
                if c >= self.inner_at(r - 1) && c < self.outer[r - 1] {
                    let above = self.rows[r - 1][c - self.inner_at(r - 1)];
                    let here = self.rows[r][c - self.inner_at(r)];
                    if above >= here {
                        return Err(Error::invalid(kind, "columns must strictly increase"));
                    }
                }
            }
        }
        Ok(())
    }

    fn inner_at(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0)
    }

    /// Straightens the tableau by inward slides until the inner shape is
    /// empty. The result does not depend on the order in which inner
    /// corners are chosen; the default picks the lowest corner each time.
    pub fn rectify(&self) -> Ssyt {
        self.rectify_with(|corners| corners.len() - 1)
    }

    /// As [`rectify`](Self::rectify), with an explicit choice function over
    /// the currently removable inner corners.
    pub fn rectify_with(&self, mut pick: impl FnMut(&[(usize, usize)]) -> usize) -> Ssyt {
        let mut outer = self.outer.clone();
        let mut inner: Vec<usize> = (0..outer.len()).map(|r| self.inner_at(r)).collect();
        let mut grid: Vec<Vec<Option<u32>>> = (0..outer.len())
            .map(|r| {
                let mut row = vec![None; outer[r]];
                for (k, &e) in self.rows[r].iter().enumerate() {
                    row[inner[r] + k] = Some(e);
                }
                row
            })
            .collect();
        loop {
            let corners: Vec<(usize, usize)> = (0..inner.len())
                .filter(|&r| inner[r] > 0 && (r + 1 >= inner.len() || inner[r + 1] < inner[r]))
                .map(|r| (r, inner[r] - 1))
                .collect();
            if corners.is_empty() {
                break;
            }
            let (mut r, mut c) = corners[pick(&corners)];
            inner[r] -= 1;
            loop {
                let right = (c + 1 < outer[r]).then(|| grid[r][c + 1].unwrap());
                let below = (r + 1 < outer.len() && c < outer[r + 1])
                    .then(|| grid[r + 1][c].unwrap());
                match (right, below) {
                    (None, None) => {
                        grid[r].truncate(c);
                        outer[r] = c;
                        break;
                    }
                    (Some(a), Some(b)) if b <= a => {
                        grid[r][c] = Some(b);
                        r += 1;
                    }
                    (_, Some(b)) if right.is_none() => {
                        grid[r][c] = Some(b);
                        r += 1;
                    }
                    (Some(a), _) => {
                        grid[r][c] = Some(a);
                        c += 1;
                    }
                    _ => unreachable!(),
                }
            }
        }
        let rows: Vec<Vec<u32>> = grid
            .into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.into_iter().map(Option::unwrap).collect())
            .collect();
        Ssyt::new(self.n, rows).expect("slides preserve semistandardness")
    }
}

/// Rotates the tableau half a turn, complements each entry to `n + 2 - a`,
/// and embeds the result as a skew tableau in the bounding rectangle.
pub fn rotate_complement(t: &Ssyt) -> SkewTableau {
    let shape = t.shape();
    let nrows = shape.len();
    if nrows == 0 {
        return SkewTableau { n: t.n, outer: vec![], inner: vec![], rows: vec![] };
    }
    let width = shape[0];
    let outer = vec![width; nrows];
    let inner: Vec<usize> = (0..nrows).map(|r| width - shape[nrows - 1 - r]).collect();
    let rows = (0..nrows)
        .map(|r| {
            (inner[r]..width)
                .map(|c| t.n as u32 + 2 - t.rows[nrows - 1 - r][width - 1 - c])
                .collect()
        })
        .collect();
    SkewTableau { n: t.n, outer, inner, rows }
}

/// The evacuation involution: complement entries, rotate half a turn, and
/// rectify. Swaps the highest and lowest tableaux and conjugates the
/// lowering operator for `i` into the raising operator for `n + 1 - i`.
pub fn evacuation(t: &Ssyt) -> Ssyt {
    rotate_complement(t).rectify()
}

/// The weight-flip involution computed through the crystal itself: raise
/// `t` to the highest tableau recording the word, then apply the
/// index-flipped raising word to the lowest tableau. Agrees with
/// [`evacuation`] on every element.
pub fn rho_lambda_word(crystal: &SsytCrystal, t: &Ssyt) -> Ssyt {
    let mut word = Vec::new();
    let mut cur = t.clone();
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
    let mut out = crystal.lowest_tableau();
    for &i in word.iter().rev() {
        out = crystal
            .raise(&out, n + 1 - i)
            .expect("flipped word stays inside the crystal");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::DominantPartition;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn fix_mlt4_finite() -> Ssyt {
        Ssyt::new(
            4,
            vec![
                vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 2],
                vec![2, 2, 2, 2, 2, 3, 3, 4],
                vec![3, 3, 3, 4],
                vec![4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn far_eastern_word_matches_printed_example() {
        let word = fix_mlt4_finite().far_eastern_word();
        assert_eq!(
            word,
            vec![2, 1, 1, 4, 1, 3, 1, 3, 1, 2, 1, 2, 4, 1, 2, 3, 1, 2, 3, 5, 1, 2, 3, 4]
        );
    }

    #[test]
    fn trivial_reading_words() {
        let t = Ssyt::new(3, vec![vec![2]]).unwrap();
        assert_eq!(t.far_eastern_word(), vec![2]);
        let col = Ssyt::new(3, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(col.far_eastern_word(), vec![1, 2]);
    }

    #[test]
    fn two_signature_of_the_large_example() {
        let sig = fix_mlt4_finite().signature(2);
        assert_eq!((sig.minus, sig.plus), (1, 2));
        // Printed survivors sit at word positions 8, 10, 12: boxes (2,6),
        // (2,5), (2,4) in 1-based coordinates.
        assert_eq!(sig.rightmost_minus, Some((1, 5)));
        assert_eq!(sig.leftmost_plus, Some((1, 4)));
    }

    #[test]
    fn signature_edge_cases() {
        let t = Ssyt::new(4, vec![vec![1, 1], vec![2]]).unwrap();
        let sig = t.signature(3); // no 3 or 4 entries at all
        assert_eq!((sig.minus, sig.plus), (0, 0));
        let col = Ssyt::new(4, vec![vec![2], vec![3]]).unwrap();
        let sig = col.signature(2); // the plus directly precedes the minus
        assert_eq!((sig.minus, sig.plus), (0, 0));
    }

    #[test]
    fn extreme_tableaux_shapes_and_kills() {
        let r7 = rank(7);
        let lam = DominantPartition::new(r7, &[6, 4, 4, 2, 1, 1]).unwrap();
        let c = SsytCrystal::new(r7, lam);
        let hi = c.highest_tableau();
        let lo = c.lowest_tableau();
        assert_eq!(
            hi.rows,
            vec![
                vec![1, 1, 1, 1, 1, 1],
                vec![2, 2, 2, 2],
                vec![3, 3, 3, 3],
                vec![4, 4],
                vec![5],
                vec![6],
            ]
        );
        assert_eq!(
            lo.rows,
            vec![
                vec![3, 5, 6, 6, 8, 8],
                vec![4, 6, 7, 7],
                vec![5, 7, 8, 8],
                vec![6, 8],
                vec![7],
                vec![8],
            ]
        );
        for i in 1..=7 {
            assert!(c.raise(&hi, i).is_none());
            assert!(c.lower(&lo, i).is_none());
        }
    }

    #[test]
    fn tiny_extreme_tableaux() {
        let r3 = rank(3);
        let one_box = SsytCrystal::new(r3, DominantPartition::new(r3, &[1]).unwrap());
        assert_eq!(one_box.highest_tableau().rows, vec![vec![1]]);
        assert_eq!(one_box.lowest_tableau().rows, vec![vec![4]]);
        let column = SsytCrystal::new(r3, DominantPartition::new(r3, &[1, 1]).unwrap());
        assert_eq!(column.highest_tableau().rows, vec![vec![1], vec![2]]);
        assert_eq!(column.lowest_tableau().rows, vec![vec![3], vec![4]]);
        // Highest statistics: weight equals the shape, no raising strings.
        let r2 = rank(2);
        let c = SsytCrystal::new(r2, DominantPartition::new(r2, &[2, 1]).unwrap());
        let s = c.stats(&c.highest_tableau());
        assert_eq!(s.wt.0, vec![2, 1, 0]);
        assert_eq!(s.eps, vec![0, 0]);
    }

    #[test]
    fn single_box_chain() {
        let r2 = rank(2);
        let c = SsytCrystal::new(r2, DominantPartition::new(r2, &[1]).unwrap());
        let one = c.highest_tableau();
        let two = c.lower(&one, 1).unwrap();
        assert_eq!(two.rows, vec![vec![2]]);
        let three = c.lower(&two, 2).unwrap();
        assert_eq!(three.rows, vec![vec![3]]);
        assert!(c.lower(&three, 1).is_none());
        assert!(c.lower(&three, 2).is_none());
        // Stats of the middle element.
        let s = c.stats(&two);
        assert_eq!(s.wt.0, vec![0, 1, 0]);
        assert_eq!(s.eps, vec![1, 0]);
        assert_eq!(s.phi, vec![0, 1]);
    }

    #[test]
    fn raising_and_lowering_are_mutually_inverse() {
        let r3 = rank(3);
        let c = SsytCrystal::new(r3, DominantPartition::new(r3, &[2, 1]).unwrap());
        let mut frontier = vec![c.highest_tableau()];
        let mut seen = std::collections::HashSet::new();
        while let Some(t) = frontier.pop() {
            if !seen.insert(t.clone()) {
                continue;
            }
            for i in 1..=3 {
                if let Some(d) = c.lower(&t, i) {
                    assert_eq!(c.raise(&d, i), Some(t.clone()));
                    frontier.push(d);
                }
            }
        }
    }

    #[test]
    fn middle_eastern_reading_gives_the_same_statistics() {
        let t = fix_mlt4_finite();
        for i in 1..=4 {
            let fe = t.signature(i);
            let me = t.signature_middle_eastern(i);
            assert_eq!((fe.minus, fe.plus), (me.minus, me.plus), "i = {i}");
        }
    }

    #[test]
    fn jdt_straight_shape_is_identity() {
        let t = Ssyt::new(2, vec![vec![1, 1], vec![2]]).unwrap();
        let skew = SkewTableau::new(2, vec![2, 1], vec![], vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(skew.rectify(), t);
    }

    #[test]
    fn jdt_single_slide() {
        let skew = SkewTableau::new(2, vec![2], vec![1], vec![vec![2]]).unwrap();
        assert_eq!(skew.rectify().rows, vec![vec![2]]);
    }

    #[test]
    fn evacuation_swaps_extremes() {
        let r2 = rank(2);
        let c = SsytCrystal::new(r2, DominantPartition::new(r2, &[2, 1]).unwrap());
        assert_eq!(evacuation(&c.highest_tableau()), c.lowest_tableau());
        assert_eq!(evacuation(&c.lowest_tableau()), c.highest_tableau());
        // rho_lambda via rotate-complement-rectify of the highest tableau.
        let rot = rotate_complement(&c.highest_tableau()).rectify();
        assert_eq!(rot, c.lowest_tableau());
    }

    #[test]
    fn rho_word_on_extremes() {
        let r2 = rank(2);
        let c = SsytCrystal::new(r2, DominantPartition::new(r2, &[2, 1]).unwrap());
        assert_eq!(rho_lambda_word(&c, &c.highest_tableau()), c.lowest_tableau());
        assert_eq!(rho_lambda_word(&c, &c.lowest_tableau()), c.highest_tableau());
    }

    #[test]
    fn validation_rejects_bad_tableaux() {
        assert!(Ssyt::new(2, vec![vec![2, 1]]).is_err());
        assert!(Ssyt::new(2, vec![vec![1], vec![1]]).is_err());
        assert!(Ssyt::new(2, vec![vec![4]]).is_err());
        assert!(Ssyt::new(2, vec![vec![1], vec![2, 2]]).is_err());
    }
}
