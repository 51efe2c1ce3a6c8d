//! Shared fixtures (the worked examples reused across the suites) and
//! independent enumeration oracles.

#![allow(dead_code)]

use crystals::cartan::{DominantPartition, Rank};
use crystals::gt::GtPattern;
use crystals::mlt::Mlt;
use crystals::polyhedral::PolyVector;
use crystals::reverse::Rssyt;
use crystals::ssyt::Ssyt;

pub fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

pub fn partition(n: usize, parts: &[i64]) -> DominantPartition {
    DominantPartition::new(rank(n), parts).unwrap()
}

/// The rank-4 marginally large tableau of the running example.
pub fn fix_mlt4() -> Mlt {
    Mlt::from_finite_rows(
        rank(4),
        &[
            vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 2],
            vec![2, 2, 2, 2, 2, 3, 3, 4],
            vec![3, 3, 3, 4],
            vec![4, 5],
        ],
    )
    .unwrap()
}

/// The rank-7 reverse tableau acted on in the raising-operator figure.
pub fn fix_rs7() -> Rssyt {
    Rssyt::new(
        7,
        vec![
            vec![8, 7, 7, 5, 3, 1],
            vec![7, 6, 4, 4],
            vec![5, 4, 3, 2],
            vec![4, 2],
            vec![2],
            vec![1],
        ],
    )
    .unwrap()
}

pub fn lam_rs7() -> DominantPartition {
    partition(7, &[6, 4, 4, 2, 1, 1])
}

/// The rank-9 worked-example vector.
pub fn fix_x9() -> PolyVector {
    PolyVector::new(
        rank(9),
        vec![
            vec![1, 1, 1, 0, 0, 0, 0, 0, 0],
            vec![2, 2, 1, 1, 0, 0, 1, 0],
            vec![2, 2, 2, 1, 0, 1, 0],
            vec![2, 2, 3, 0, 1, 0],
            vec![3, 3, 1, 1, 0],
            vec![3, 2, 1, 0],
            vec![2, 3, 0],
            vec![3, 1],
            vec![2],
        ],
    )
    .unwrap()
}

pub fn lam_x9() -> DominantPartition {
    partition(9, &[8, 6, 4, 3, 3, 2, 1, 1])
}

/// The rank-7 pattern of the highest-weight figure (tails of the
/// partition).
pub fn fix_gt7_hi() -> GtPattern {
    GtPattern::highest(&lam_rs7())
}

/// The rank-7 pattern of the second three-panel figure.
pub fn fix_gt7_lo() -> GtPattern {
    GtPattern::new(
        lam_rs7(),
        vec![
            vec![6, 4, 4, 2, 1, 0, 0],
            vec![6, 4, 4, 2, 0, 0],
            vec![6, 4, 4, 0, 0],
            vec![6, 4, 0, 0],
            vec![6, 0, 0],
            vec![0, 0],
            vec![0],
        ],
    )
    .unwrap()
}

/// The vector printed beside [`fix_gt7_lo`], as its triangular rows.
pub fn fix_x_lo() -> PolyVector {
    PolyVector::new(
        rank(7),
        vec![
            vec![2, 0, 2, 1, 0, 0, 0],
            vec![2, 2, 3, 1, 0, 0],
            vec![4, 3, 3, 0, 0],
            vec![5, 3, 0, 0],
            vec![5, 0, 0],
            vec![0, 0],
            vec![0],
        ],
    )
    .unwrap()
}

/// The rank-4 reverse tableau of the embedding example.
pub fn fix_rs4() -> Rssyt {
    Rssyt::new(
        4,
        vec![
            vec![5, 5, 5, 5, 5, 5, 5, 5, 4, 4, 3, 2],
            vec![4, 4, 4, 4, 4, 4, 3, 2, 2, 1],
            vec![3, 3, 3, 2, 2, 2, 1, 1],
            vec![2, 2, 1],
        ],
    )
    .unwrap()
}

pub fn lam_rs4() -> DominantPartition {
    partition(4, &[12, 10, 8, 3])
}

/// Counts of the reverse marginally large tableau printed as the image of
/// [`fix_rs4`].
pub fn fix_rml4() -> crystals::reverse::Rmlt {
    let mut t = crystals::reverse::Rmlt::highest(rank(4));
    for (i, j, v) in [
        (1, 1, 2),
        (1, 2, 1),
        (1, 3, 3),
        (1, 4, 2),
        (2, 1, 3),
        (2, 2, 1),
        (2, 3, 3),
        (3, 1, 1),
        (3, 2, 2),
        (4, 1, 2),
    ] {
        *t.count_mut(i, j) = v;
    }
    t
}

/// All dominant partitions for the rank with at most `size` boxes.
pub fn small_partitions(n: usize, size: i64) -> Vec<DominantPartition> {
    let mut out = Vec::new();
    let mut parts = vec![0i64; n];
    fn rec(n: usize, size: i64, pos: usize, parts: &mut Vec<i64>, out: &mut Vec<DominantPartition>) {
        if pos == n {
            out.push(DominantPartition::new(Rank::new(n).unwrap(), parts).unwrap());
            return;
        }
        let upper = if pos == 0 { size } else { parts[pos - 1] };
        let used: i64 = parts[..pos].iter().sum();
        for v in 0..=upper.min(size - used) {
            parts[pos] = v;
            rec(n, size, pos + 1, parts, out);
        }
        parts[pos] = 0;
    }
    rec(n, size, 0, &mut parts, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Brute-force enumeration of all semistandard tableaux of the given
/// shape with entries up to `n + 1`: row by row, cell by cell.
pub fn enumerate_ssyt(n: usize, shape: &DominantPartition) -> Vec<Ssyt> {
    let rows: Vec<usize> = shape.positive_rows().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fn rec(
        n: usize,
        rows: &[usize],
        grid: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        out: &mut Vec<Ssyt>,
    ) {
        if r == rows.len() {
            out.push(Ssyt::new(n, grid.clone()).unwrap());
            return;
        }
        let (nr, nc) = if c + 1 == rows[r] { (r + 1, 0) } else { (r, c + 1) };
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=(n as u32 + 1) {
            grid[r][c] = v;
            rec(n, rows, grid, nr, nc, out);
        }
        grid[r][c] = 0;
    }
    rec(n, &rows, &mut grid, 0, 0, &mut out);
    out
}
