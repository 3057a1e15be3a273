//! The block grid of `g` at the base point and its graded pieces.
//!
//! Rows and columns of the defining matrix are grouped by the parts of the
//! index partition (first-half runs in `J₁` order, the middle index in odd
//! dimension, conjugate runs in `J₂` order). Every group pair is a [`Block`];
//! its level `p` is the difference of the Hodge labels of its row and column
//! groups, so the block lies in `g^{-p,p}`. The form constraint pairs each
//! block with a mirror block (possibly itself); a graded piece counts one
//! independent entry per mirror orbit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::basepoint::{IndexPartition, PartName};
use crate::hodge::PeriodDomainDescriptor;
use crate::roots::{GroupType, Root};

/// Position of a block inside the `2×2` (or `3×3` in type B) coarse layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BlockKind {
    /// First-half rows, first-half columns.
    A,
    /// Second-half rows, first-half columns.
    C,
    /// First-half rows, second-half columns.
    B,
    /// Middle row, first-half columns (type B).
    Y,
    /// Second-half rows, middle column (type B); mirror of `Y`.
    Yt,
    /// First-half rows, middle column (type B).
    X,
    /// Middle row, second-half columns (type B); mirror of `X`.
    Xt,
    /// Second-half rows and columns; mirror of `A`.
    At,
}

impl BlockKind {
    pub fn prefix(self) -> &'static str {
        match self {
            BlockKind::A => "A",
            BlockKind::B => "B",
            BlockKind::C => "C",
            BlockKind::At => "At",
            BlockKind::X => "x",
            BlockKind::Xt => "xt",
            BlockKind::Y => "y",
            BlockKind::Yt => "yt",
        }
    }
}

/// Cartan-decomposition class of a level: `k` for even, `m` for odd levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    #[serde(rename = "k")]
    K,
    #[serde(rename = "m")]
    M,
}

impl Parity {
    pub fn of_level(p: i64) -> Parity {
        if p.rem_euclid(2) == 0 {
            Parity::K
        } else {
            Parity::M
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::K => "k",
            Parity::M => "m",
        })
    }
}

/// One rectangular region of the block matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub kind: BlockKind,
    pub name: String,
    /// `(i, j)`: Hodge labels of the row and column groups.
    pub index_pair: (usize, usize),
    pub row_part: PartName,
    pub col_part: PartName,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub level: i64,
    pub parity: Parity,
    /// Grid index of the mirror block; `None` when the block is its own mirror.
    pub mirror: Option<usize>,
    /// Independent entries: `rows × cols` for a block with a distinct mirror,
    /// the number of free mirror orbits inside a self-mirrored block.
    pub independent: usize,
}

impl Block {
    pub fn is_self_mirror(&self) -> bool {
        self.mirror.is_none()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.rows.contains(&r) && self.cols.contains(&c)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() || self.cols.is_empty()
    }
}

/// Formats a block or triple name from its labels: `A10`, or `A10,2` once
/// labels can have two digits.
pub fn label_name(prefix: &str, i: usize, j: usize, weight: usize) -> String {
    if weight < 10 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i},{j}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Half {
    First,
    Middle,
    Second,
}

fn half_of(p: &IndexPartition, name: PartName) -> Half {
    let m = p.m();
    match name {
        PartName::Middle(1) => Half::First,
        PartName::Middle(2) => Half::Second,
        PartName::Middle(_) => Half::Middle,
        PartName::Label(k) if k <= m => Half::First,
        PartName::Label(_) => Half::Second,
    }
}

fn part_label(p: &IndexPartition, name: PartName) -> usize {
    match name {
        PartName::Label(k) => k,
        PartName::Middle(_) => p.m(),
    }
}

/// The full block grid, row group by row group.
///
/// The positions not covered by any block are exactly the middle diagonal
/// entry `(l+1, l+1)` of type B, which the form forces to vanish.
pub fn block_grid(p: &IndexPartition) -> Vec<Block> {
    let n = p.weight();
    let parts = &p.parts;
    let mut raw: Vec<Block> = Vec::new();
    let mut at: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (ri, (rname, rows)) in parts.iter().enumerate() {
        for (ci, (cname, cols)) in parts.iter().enumerate() {
            let kind = match (half_of(p, *rname), half_of(p, *cname)) {
                (Half::First, Half::First) => BlockKind::A,
                (Half::First, Half::Second) => BlockKind::B,
                (Half::Second, Half::First) => BlockKind::C,
                (Half::Second, Half::Second) => BlockKind::At,
                (Half::First, Half::Middle) => BlockKind::X,
                (Half::Middle, Half::Second) => BlockKind::Xt,
                (Half::Middle, Half::First) => BlockKind::Y,
                (Half::Second, Half::Middle) => BlockKind::Yt,
                (Half::Middle, Half::Middle) => continue,
            };
            let i = part_label(p, *rname);
            let j = part_label(p, *cname);
            let level = i as i64 - j as i64;
            at.insert((ri, ci), raw.len());
            raw.push(Block {
                kind,
                name: label_name(kind.prefix(), i, j, n),
                index_pair: (i, j),
                row_part: *rname,
                col_part: *cname,
                rows: rows.clone(),
                cols: cols.clone(),
                level,
                parity: Parity::of_level(level),
                mirror: None,
                independent: 0,
            });
        }
    }
    // The mirror of group pair (R, C) is (σC, σR); σ maps part k of J₁ to
    // part k of J₂ and fixes the middle part.
    let count = parts.len();
    let first_count = p.j1.len();
    let sigma_part = |g: usize| {
        if g < first_count {
            count - first_count + g
        } else if g >= count - first_count {
            g - (count - first_count)
        } else {
            g
        }
    };
    let keys: Vec<(usize, usize)> = at.keys().copied().collect();
    for (ri, ci) in keys {
        let me = at[&(ri, ci)];
        let other = at[&(sigma_part(ci), sigma_part(ri))];
        raw[me].mirror = (other != me).then_some(other);
        let b = &raw[me];
        raw[me].independent = if other != me {
            b.rows.len() * b.cols.len()
        } else {
            let mut orbits = 0;
            for &r in &b.rows {
                for &c in &b.cols {
                    let (mir, _) = p.mirror(r, c);
                    if mir >= (r, c) && !p.forced_zero(r, c) {
                        orbits += 1;
                    }
                }
            }
            orbits
        };
    }
    raw
}

/// The blocks making up `g^{-p,p}` and its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub level: i64,
    pub blocks: Vec<Block>,
    /// Number of independent matrix entries (mirror orbits) at this level.
    pub dim: usize,
}

impl GradedPiece {
    pub fn names(&self) -> Vec<&str> {
        self.blocks.iter().map(|b| b.name.as_str()).collect()
    }
}

/// `g^{-p,p}`: every grid block of level `p` except the `At` blocks, which are
/// determined by their `A` mirrors. Mirror pairs of `C`, `B`, `x`, `y` blocks
/// are both listed, matching the way the decomposition is usually written out;
/// `dim` counts each mirror orbit once.
///
/// ```
/// use hodgekit::basepoint::partition_of;
/// use hodgekit::blocks::graded_piece;
/// use hodgekit::hodge::HodgeNumbers;
/// let p = partition_of(&HodgeNumbers::from_half(4, &[2, 2, 4]).unwrap()).unwrap();
/// let g11 = graded_piece(&p, 1);
/// assert_eq!(g11.names(), ["A10", "A21", "C21", "C32"]);
/// assert_eq!(g11.dim, 12);
/// ```
pub fn graded_piece(p: &IndexPartition, level: i64) -> GradedPiece {
    graded_piece_from_grid(&block_grid(p), level)
}

/// Same as [`graded_piece`], reusing an already built grid.
pub fn graded_piece_from_grid(grid: &[Block], level: i64) -> GradedPiece {
    let mut blocks: Vec<Block> = grid
        .iter()
        .filter(|b| b.level == level && b.kind != BlockKind::At)
        .cloned()
        .collect();
    blocks.sort_by_key(|a| (a.kind, a.index_pair));
    let mut classes = BTreeSet::new();
    let mut dim = 0;
    for (idx, b) in grid.iter().enumerate() {
        if b.level != level {
            continue;
        }
        let class = b.mirror.map_or(idx, |o| o.min(idx));
        if classes.insert(class) {
            dim += b.independent;
        }
    }
    GradedPiece { level, blocks, dim }
}

/// Parity class of every level `−n ≤ p ≤ n`.
pub fn km_split(p: &IndexPartition) -> BTreeMap<i64, Parity> {
    let n = p.weight() as i64;
    (-n..=n).map(|lvl| (lvl, Parity::of_level(lvl))).collect()
}

/// The roots whose root spaces lie in `g^{-p,p}`, in canonical position order.
pub fn roots_at_level(p: &IndexPartition, level: i64) -> Vec<Root> {
    p.all_root_positions()
        .into_iter()
        .filter(|((r, c), _)| p.position_level(*r, *c) == level)
        .map(|(_, root)| root)
        .collect()
}

/// Closed-form dimension of `g^{-1,1}`:
/// `Σ_{k<m−1} f_k f_{k+1}` plus a type-specific tail
/// (`f_{m−1} f_m + f_m(f_m+1)/2` for C, `f_{m−1} f_m` for D,
/// `f_{m−1}(f_m−1) + f_{m−1}` for B).
pub fn dim_g11(d: &PeriodDomainDescriptor) -> usize {
    let f: Vec<usize> = d.f.iter().map(|&x| x as usize).collect();
    let m = d.m;
    let chain = |upto: usize| -> usize { (0..upto).map(|k| f[k] * f[k + 1]).sum() };
    match d.group_type {
        GroupType::C => chain(m) + f[m] * (f[m] + 1) / 2,
        GroupType::D if m == 0 => 0,
        GroupType::D => chain(m - 1) + f[m - 1] * f[m],
        GroupType::B if m == 0 => 0,
        GroupType::B => chain(m - 1) + f[m - 1] * (f[m] - 1) + f[m - 1],
        GroupType::A => 0,
    }
}

/// A nonnegative multiple of ½, as produced by formulas with halved terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Halves(pub u64);

impl Halves {
    pub fn as_integer(self) -> Option<u64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

impl fmt::Display for Halves {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Closed-form dimension of `g^{-p,p}` in type D for `0 < p < m` and
/// `m < p ≤ n`:
///
/// * `p < m`: `Σ_{j=0}^{m−p−1} f_{j+p} f_j + f_m f_{m−p} + ½ Σ_{j=m−p+1}^{m−1} f_{n−j−p} f_j`,
/// * `p > m`: `½ Σ_{j=0}^{n−p} f_{n−p−j} f_j`,
///
/// with `f_k := f_{n−k}` for `k > m`. The expression counts every block of the
/// piece as a full rectangle; it therefore matches the entry count exactly for
/// odd `p`, while for even `p` the antisymmetric self-mirrored block is
/// overcounted. Returns `None` outside type D or outside the stated ranges.
pub fn dim_gpp(d: &PeriodDomainDescriptor, p: i64) -> Option<Halves> {
    if d.group_type != GroupType::D || p <= 0 || p as usize > d.weight || p as usize == d.m {
        return None;
    }
    let n = d.weight;
    let m = d.m;
    let p = p as usize;
    let f = |k: usize| -> u64 { d.f[k.min(n - k)] as u64 };
    let twice = if p < m {
        let a: u64 = (0..m - p).map(|j| f(j + p) * f(j)).sum();
        let c: u64 = (m - p + 1..m).map(|j| f(n - j - p) * f(j)).sum();
        2 * a + 2 * f(m) * f(m - p) + c
    } else {
        (0..=n - p).map(|j| f(n - p - j) * f(j)).sum()
    };
    Some(Halves(twice))
}

/// Renders the grid as fixed-width text. Each cell shows the block name and
/// its level; with `color`, odd (`m`) levels are red and even (`k`) levels blue.
pub fn render_grid(p: &IndexPartition, color: bool) -> String {
    let grid = block_grid(p);
    let parts = &p.parts;
    let width = grid
        .iter()
        .map(|b| b.name.len() + format!("{}", b.level).len() + 2)
        .max()
        .unwrap_or(4)
        .max(6);
    let head_width = parts.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(2) + 1;
    let mut out = String::new();
    out.push_str(&format!("{:head_width$}", ""));
    for (name, idx) in parts {
        let col = format!("{name}[{}]", idx.len());
        out.push_str(&format!(" {col:<width$}"));
    }
    out.push('\n');
    let mut it = grid.iter();
    for (ri, (rname, _)) in parts.iter().enumerate() {
        out.push_str(&format!("{:<head_width$}", rname.to_string()));
        for ci in 0..parts.len() {
            let is_zero = p.middle().is_some() && ri == p.j1.len() && ci == p.j1.len();
            if is_zero {
                out.push_str(&format!(" {:<width$}", "0"));
                continue;
            }
            let b = it.next().expect("grid has one block per group pair");
            let text = format!("{}({})", b.name, b.level);
            let cell = format!("{text:<width$}");
            if color {
                let code = match b.parity {
                    Parity::M => "31",
                    Parity::K => "34",
                };
                out.push_str(&format!(" \x1b[{code}m{cell}\x1b[0m"));
            } else {
                out.push_str(&format!(" {cell}"));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basepoint::partition_of;
    use crate::hodge::{describe, sweep, HodgeNumbers};

    fn part(n: usize, half: &[u32]) -> IndexPartition {
        partition_of(&HodgeNumbers::from_half(n, half).unwrap()).unwrap()
    }

    fn sorted(names: Vec<&str>) -> Vec<String> {
        let mut v: Vec<String> = names.into_iter().map(String::from).collect();
        v.sort();
        v
    }

    #[test]
    fn so12_pieces() {
        let p = part(4, &[2, 2, 4]);
        let expect: [(i64, &[&str], usize); 9] = [
            (0, &["A00", "A22", "A11", "C22", "B22"], 14),
            (1, &["A10", "A21", "C21", "C32"], 12),
            (-1, &["A01", "A12", "B12", "B23"], 12),
            // The self-mirrored C31 also sits at level 2 (one antisymmetric
            // entry); without it the levels do not add up to dim so(12) = 66.
            (2, &["A20", "C42", "C20", "C31"], 9),
            (-2, &["A02", "B24", "B02", "B13"], 9),
            (3, &["C30", "C41"], 4),
            (-3, &["B03", "B14"], 4),
            (4, &["C40"], 1),
            (-4, &["B04"], 1),
        ];
        for (lvl, names, dim) in expect {
            let g = graded_piece(&p, lvl);
            assert_eq!(sorted(g.names()), sorted(names.to_vec()), "p={lvl}");
            assert_eq!(g.dim, dim, "p={lvl}");
        }
    }

    #[test]
    fn grid_covers_every_position_once() {
        for hn in sweep(6, 2) {
            let p = partition_of(&hn).unwrap();
            let grid = block_grid(&p);
            let dv = p.dim_v();
            for r in 1..=dv {
                for c in 1..=dv {
                    let hits = grid.iter().filter(|b| b.contains(r, c)).count();
                    let expected = usize::from(!(p.middle() == Some(r) && r == c));
                    assert_eq!(hits, expected, "{hn} ({r},{c})");
                }
            }
        }
    }

    #[test]
    fn pieces_add_up_to_dim_g() {
        for hn in sweep(6, 3) {
            let p = partition_of(&hn).unwrap();
            let grid = block_grid(&p);
            let n = p.weight() as i64;
            let total: usize = (-n..=n).map(|l| graded_piece_from_grid(&grid, l).dim).sum();
            assert_eq!(total, p.descriptor.dim_g(), "{hn}");
        }
    }

    #[test]
    fn g11_formula_examples() {
        let sp = describe(&HodgeNumbers::from_half(5, &[2, 3, 2]).unwrap()).unwrap();
        assert_eq!(dim_g11(&sp), 15);
        let so = describe(&HodgeNumbers::from_half(4, &[2, 2, 4]).unwrap()).unwrap();
        assert_eq!(dim_g11(&so), 12);
        assert_eq!(graded_piece(&part(4, &[2, 2, 4]), 1).dim, 12);
        assert_eq!(graded_piece(&part(5, &[2, 3, 2]), 1).dim, 15);
    }

    #[test]
    fn trivial_symplectic_grid() {
        let p = part(1, &[1]);
        let names: Vec<String> = block_grid(&p).into_iter().map(|b| b.name).collect();
        assert_eq!(names, ["A00", "B01", "C10", "At11"]);
    }

    #[test]
    fn km_split_parities() {
        let s = km_split(&part(4, &[2, 2, 4]));
        assert_eq!(s[&1], Parity::M);
        assert_eq!(s[&0], Parity::K);
        assert_eq!(s[&-2], Parity::K);
    }

    #[test]
    fn gpp_formula_so12() {
        let d = describe(&HodgeNumbers::from_half(4, &[2, 2, 4]).unwrap()).unwrap();
        assert_eq!(dim_gpp(&d, 1), Some(Halves(24)));
        assert_eq!(dim_gpp(&d, 3), Some(Halves(8)));
        // Even p: the antisymmetric C-block is counted as a full half square.
        assert_eq!(dim_gpp(&d, 4), Some(Halves(4)));
        assert_eq!(dim_gpp(&d, 2), None);
    }

    #[test]
    fn halves_display() {
        assert_eq!(Halves(5).to_string(), "5/2");
        assert_eq!(Halves(6).to_string(), "3");
    }
}
