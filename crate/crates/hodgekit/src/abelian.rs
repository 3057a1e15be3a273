//! Abelian subspaces of the horizontal tangent space `g^{-1,1}`.
//!
//! A Hodge path splits each first-half set `F_k` into rows `I_k¹` and columns
//! `I_k²` (three ways for `F_{m−1}` in even weight). Walking the chain
//! `A_{1,0}, A_{2,1}, …` and keeping, in each block, the rows `I_{k+1}¹` and
//! the columns `I_k²` produces pieces with disjoint index sets, hence a
//! commutative set of roots; a terminal piece of the `C`-block (and in odd
//! dimension possibly one short root) finishes the path.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basepoint::{build_partition, IndexPartition};
use crate::blocks::{graded_piece, label_name, roots_at_level, BlockKind};
use crate::error::{HodgeError, Result};
use crate::hodge::PeriodDomainDescriptor;
use crate::roots::{first_interacting_pair, GroupType, Root, RootSystem};

/// Largest `dim g^{-1,1}` accepted by [`brute_force_max_commutative`].
pub const BRUTE_FORCE_GUARD: usize = 22;

/// A split `F_k = I_k¹ ∪ I_k² (∪ I_k³)` of one first-half index set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Split {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Columns of the terminal `C`-piece; only used for `F_{m−1}` in even weight.
    pub third: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgePath {
    /// Key of the period domain the path was built for.
    pub domain: String,
    /// `k ↦ (I_k¹, I_k², I_k³)` for `0 ≤ k ≤ m`.
    pub splits: BTreeMap<usize, Split>,
    /// The Hodge sequence `(j_0, …, j_m)`, `j_k = |I_k¹|`.
    pub sequence: Vec<usize>,
    /// Odd dimension: basis index `c` of a chosen short root `−ε_c`; the index
    /// is removed from every other piece.
    pub y_root: Option<usize>,
}

fn is_even_weight(p: &IndexPartition) -> bool {
    p.group_type() != GroupType::C
}

/// Indices of `F_{m−1}` not used as rows upstream, in even weight.
fn terminal_columns(p: &IndexPartition, js: &[usize]) -> Vec<usize> {
    let m = p.m();
    let f = p.first(m - 1);
    let skip = if m >= 2 { js[m - 1] } else { 0 };
    f[skip.min(f.len())..].to_vec()
}

impl HodgePath {
    /// The path with canonical (lowest-index-first) splits for the sequence
    /// `js = (j_1, …, j_m)`.
    ///
    /// In even weight, `a_cols` is `|I_{m−1}²|`, the number of remaining
    /// columns of `F_{m−1}` given to the last `A`-block (the rest go to the
    /// `C`-piece); by default all of them when `2 j_m ≥ |F_m|`, none otherwise.
    /// `y_root` selects the short root `−ε_c` in odd dimension.
    pub fn from_sequence(
        p: &IndexPartition,
        js: &[usize],
        a_cols: Option<usize>,
        y_root: Option<usize>,
    ) -> Result<HodgePath> {
        let m = p.m();
        if js.len() != m {
            return Err(HodgeError::invalid(format!(
                "a Hodge sequence for m = {m} needs {m} entries (j_1..j_m), got {}",
                js.len()
            )));
        }
        let mut seq = vec![0];
        seq.extend_from_slice(js);
        for k in 1..=m {
            if seq[k] > p.first(k).len() {
                return Err(HodgeError::invalid(format!(
                    "j_{k} = {} exceeds |F_{k}| = {}",
                    seq[k],
                    p.first(k).len()
                )));
            }
        }
        let mut splits = BTreeMap::new();
        for k in 0..=m {
            let f = p.first(k);
            let j = seq[k];
            splits.insert(
                k,
                Split {
                    first: f[..j].to_vec(),
                    second: f[j..].to_vec(),
                    third: Vec::new(),
                },
            );
        }
        if is_even_weight(p) && m >= 1 {
            let mut t = terminal_columns(p, &seq);
            if let Some(c) = y_root {
                if p.group_type() != GroupType::B {
                    return Err(HodgeError::invalid("a short root exists only in odd dimension"));
                }
                let pos = t.iter().position(|&x| x == c).ok_or_else(|| {
                    HodgeError::invalid(format!("e{c} is not a free column of F_{}", m - 1))
                })?;
                t.remove(pos);
            }
            let h = p.first(m).len();
            let t2 = a_cols.unwrap_or(if 2 * seq[m] >= h { t.len() } else { 0 });
            if t2 > t.len() {
                return Err(HodgeError::invalid(format!(
                    "only {} columns of F_{} remain, asked for {t2}",
                    t.len(),
                    m - 1
                )));
            }
            let s = splits.get_mut(&(m - 1)).expect("split exists");
            s.second = t[..t2].to_vec();
            s.third = t[t2..].to_vec();
        } else if a_cols.is_some() || y_root.is_some() {
            return Err(HodgeError::invalid(
                "column counts and short roots only apply in even weight",
            ));
        }
        let path = HodgePath {
            domain: p.key(),
            splits,
            sequence: seq,
            y_root,
        };
        path.validate(p)?;
        Ok(path)
    }

    /// Checks that the path fits the partition and satisfies the sequence rules.
    pub fn validate(&self, p: &IndexPartition) -> Result<()> {
        let bad = |msg: String| Err(HodgeError::DescriptorMismatch(msg));
        if self.domain != p.key() {
            return bad(format!("path for {} used with {}", self.domain, p.key()));
        }
        let m = p.m();
        if self.sequence.len() != m + 1 || self.splits.len() != m + 1 || self.sequence[0] != 0 {
            return bad("sequence must be (j_0 = 0, j_1, …, j_m)".into());
        }
        for k in 0..=m {
            let s = &self.splits[&k];
            if s.first.len() != self.sequence[k] {
                return bad(format!("j_{k} ≠ |I_{k}¹|"));
            }
            let mut all: Vec<usize> = s.first.iter().chain(&s.second).chain(&s.third).copied().collect();
            if let Some(c) = self.y_root {
                if m >= 1 && k == m - 1 {
                    all.push(c);
                }
            }
            all.sort_unstable();
            let mut want = p.first(k).to_vec();
            want.sort_unstable();
            if all != want {
                return bad(format!("the splits of F_{k} do not partition it"));
            }
            if !s.third.is_empty() && !(is_even_weight(p) && m >= 1 && k == m - 1) {
                return bad(format!("F_{k} admits only a two-way split"));
            }
            if k >= 1 && p.first(k - 1).len() == self.sequence[k - 1] && self.sequence[k] != 0 {
                return bad(format!("j_{k} must vanish because F_{} is exhausted", k - 1));
            }
        }
        if self.y_root.is_some() && p.group_type() != GroupType::B {
            return bad("a short root exists only in odd dimension".into());
        }
        Ok(())
    }
}

/// A restricted block of a path subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathBlock {
    pub name: String,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianSubspace {
    pub roots: Vec<Root>,
    pub blocks: Vec<PathBlock>,
    pub dim: usize,
}

/// The subspace `g^{-1,1}_a` generated by a Hodge path.
///
/// ```
/// use hodgekit::abelian::{build_abelian_from_path, HodgePath};
/// use hodgekit::basepoint::partition_of;
/// use hodgekit::hodge::HodgeNumbers;
/// let p = partition_of(&HodgeNumbers::new(3, vec![1, 2, 2, 1]).unwrap()).unwrap();
/// let path = HodgePath::from_sequence(&p, &[1], None, None).unwrap();
/// assert_eq!(build_abelian_from_path(&p, &path).unwrap().dim, 2);
/// ```
pub fn build_abelian_from_path(p: &IndexPartition, path: &HodgePath) -> Result<AbelianSubspace> {
    path.validate(p)?;
    let m = p.m();
    let n = p.weight();
    let l = p.rank();
    let off = p.offset;
    let mut blocks = Vec::new();
    let mut roots = Vec::new();
    let mut push = |name: String, rows: Vec<usize>, cols: Vec<usize>, rs: Vec<Root>| {
        blocks.push(PathBlock {
            name,
            rows,
            cols,
            dim: rs.len(),
        });
        roots.extend(rs);
    };
    for k in 0..m {
        let rows = path.splits[&(k + 1)].first.clone();
        let cols = path.splits[&k].second.clone();
        let rs = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| Root::diff(l, r, c)))
            .collect();
        push(label_name("A", k + 1, k, n), rows, cols, rs);
    }
    let top = &path.splits[&m].second;
    match p.group_type() {
        GroupType::C => {
            let mut rs = Vec::new();
            for (s, &x) in top.iter().enumerate() {
                rs.push(Root::single(l, x, -2));
                for &y in &top[s + 1..] {
                    rs.push(Root::pair(l, x, -1, y, -1));
                }
            }
            let rows = top.iter().map(|x| x + off).collect();
            push(label_name("C", n - m, m, n), rows, top.clone(), rs);
        }
        _ if m >= 1 => {
            let cols = path.splits[&(m - 1)].third.clone();
            let rs = top
                .iter()
                .flat_map(|&x| cols.iter().map(move |&c| Root::pair(l, x, -1, c, -1)))
                .collect();
            let rows = top.iter().map(|x| x + off).collect();
            push(label_name("C", m, m - 1, n), rows, cols, rs);
            if let Some(c) = path.y_root {
                push(
                    label_name("y", m, m - 1, n),
                    vec![l + 1],
                    vec![c],
                    vec![Root::single(l, c, -1)],
                );
            }
        }
        _ => {}
    }
    let dim = roots.len();
    Ok(AbelianSubspace { roots, blocks, dim })
}

/// Every Hodge path with canonical splits, in lexicographic order of
/// `(j_1, …, j_m, |I_{m−1}²|, short root)`.
pub fn enumerate_paths(p: &IndexPartition) -> Vec<HodgePath> {
    let m = p.m();
    let mut out = Vec::new();
    let mut js = vec![0usize; m];
    // Odometer over j_1..j_m with the exhaustion rule.
    fn rec(p: &IndexPartition, k: usize, js: &mut Vec<usize>, out: &mut Vec<HodgePath>) {
        let m = p.m();
        if k > m {
            emit(p, js, out);
            return;
        }
        let prev_full = if k == 1 {
            p.first(0).is_empty()
        } else {
            js[k - 2] == p.first(k - 1).len()
        };
        let hi = if prev_full { 0 } else { p.first(k).len() };
        for j in 0..=hi {
            js[k - 1] = j;
            rec(p, k + 1, js, out);
        }
        js[k - 1] = 0;
    }
    fn emit(p: &IndexPartition, js: &[usize], out: &mut Vec<HodgePath>) {
        let m = p.m();
        if !is_even_weight(p) || m == 0 {
            out.extend(HodgePath::from_sequence(p, js, None, None));
            return;
        }
        let mut seq = vec![0];
        seq.extend_from_slice(js);
        let t = terminal_columns(p, &seq);
        let mut ys = vec![None];
        if p.group_type() == GroupType::B && !t.is_empty() {
            ys.push(t.last().copied());
        }
        for y in ys {
            let free = t.len() - usize::from(y.is_some());
            for t2 in 0..=free {
                out.extend(HodgePath::from_sequence(p, js, Some(t2), y));
            }
        }
    }
    rec(p, 1, &mut js, &mut out);
    out
}

/// Maximum path-subspace dimension and the first path attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathScan {
    pub max: usize,
    pub argmax: HodgePath,
    pub paths: usize,
}

pub fn path_scan(p: &IndexPartition) -> Result<PathScan> {
    let paths = enumerate_paths(p);
    let mut best: Option<(usize, &HodgePath)> = None;
    for path in &paths {
        let d = build_abelian_from_path(p, path)?.dim;
        if best.map_or(true, |(b, _)| d > b) {
            best = Some((d, path));
        }
    }
    let (max, argmax) = best.expect("at least one path");
    Ok(PathScan {
        max,
        argmax: argmax.clone(),
        paths: paths.len(),
    })
}

/// The dimension function `f(l_1, …, l_{m−1}) = Σ_{k=0}^{m−2} (d_k − l_k) l_{k+1}
/// + (d_{m−1} − l_{m−1}) d_m` with `l_0 = 0`.
pub fn dimension_function(d: &[usize], l: &[usize]) -> i64 {
    let m = d.len() - 1;
    let lk = |k: usize| if k == 0 { 0 } else { l[k - 1] as i64 };
    let mut v = 0i64;
    for k in 0..m.saturating_sub(1) {
        v += (d[k] as i64 - lk(k)) * lk(k + 1);
    }
    if m >= 1 {
        v += (d[m - 1] as i64 - lk(m - 1)) * d[m] as i64;
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaMax {
    pub value: i64,
    /// Lexicographically smallest maximizer `(l_1, …, l_{m−1})`.
    pub argmax: Vec<usize>,
}

/// Exhaustive maximization of [`dimension_function`] over the box
/// `[0, d_1] × … × [0, d_{m−1}]`.
pub fn maximize_dimension_function(d: &[usize]) -> FormulaMax {
    let m = d.len() - 1;
    let dims = m.saturating_sub(1);
    let mut l = vec![0usize; dims];
    let mut best = FormulaMax {
        value: dimension_function(d, &l),
        argmax: l.clone(),
    };
    'outer: loop {
        let mut k = dims;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            if l[k] < d[k + 1] {
                l[k] += 1;
                for x in &mut l[k + 1..] {
                    *x = 0;
                }
                break;
            }
        }
        let v = dimension_function(d, &l);
        if v > best.value {
            best = FormulaMax {
                value: v,
                argmax: l.clone(),
            };
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxAbelian {
    /// Largest dimension of a path-generated abelian subspace.
    pub value: usize,
    /// Hodge sequence `(j_0, …, j_m)` of the first maximizing path.
    pub argmax: Vec<usize>,
    pub argmax_path: HodgePath,
    /// The closed-form dimension function with `d_k = f_k` (`None` for `m = 0`).
    pub formula: Option<FormulaMax>,
    /// Whether the closed form agrees with the path maximum.
    pub formula_agrees: bool,
}

/// Maximal dimension of a path-generated abelian subspace of `g^{-1,1}`,
/// reported together with the closed-form dimension function.
///
/// ```
/// use hodgekit::abelian::max_abelian_dimension;
/// use hodgekit::hodge::{describe, HodgeNumbers};
/// let d = describe(&HodgeNumbers::new(1, vec![3, 3]).unwrap()).unwrap();
/// assert_eq!(max_abelian_dimension(&d).unwrap().value, 6);
/// ```
pub fn max_abelian_dimension(d: &PeriodDomainDescriptor) -> Result<MaxAbelian> {
    let p = build_partition(d);
    let scan = path_scan(&p)?;
    let formula = if d.m >= 1 {
        let dd: Vec<usize> = d.f.iter().map(|&x| x as usize).collect();
        Some(maximize_dimension_function(&dd))
    } else {
        None
    };
    let formula_agrees = formula.as_ref().map_or(true, |f| f.value == scan.max as i64);
    Ok(MaxAbelian {
        value: scan.max,
        argmax: scan.argmax.sequence.clone(),
        argmax_path: scan.argmax,
        formula,
        formula_agrees,
    })
}

/// Path maximum with the even-weight terminal piece relaxed: when a single
/// column `c` of `F_{m−1}` remains, both `ε_r − ε_c` and `−ε_{r'} − ε_c` can be
/// kept for all rows (their sums are never roots), giving `2|F_m|` instead of
/// `|F_m|`; in odd dimension the short root `−ε_c` can always be added.
pub fn relaxed_path_max(p: &IndexPartition) -> usize {
    let m = p.m();
    if !is_even_weight(p) || m == 0 {
        return path_scan(p).map(|s| s.max).unwrap_or(0);
    }
    let h = p.first(m).len();
    let mut best = 0;
    for path in enumerate_paths(p) {
        if path.y_root.is_some() || !path.splits[&(m - 1)].third.is_empty() {
            continue;
        }
        let mut prefix = 0;
        let seq = &path.sequence;
        for k in 0..m - 1 {
            let rows = seq[k + 1];
            let cols = path.splits[&k].second.len();
            prefix += rows * cols;
        }
        let t = terminal_columns(p, seq).len();
        let g = if t == 1 { 2 } else { t };
        let y = usize::from(p.group_type() == GroupType::B && t >= 1);
        best = best.max(prefix + h * g + y);
    }
    best
}

/// Exact maximum of a commutative subset of the roots of `g^{-1,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutativeMax {
    pub max: usize,
    /// Lexicographically smallest maximal subset (roots in sorted order).
    pub witness: Vec<Root>,
}

/// Branch-and-bound search for the largest commutative subset of the
/// `g^{-1,1}` roots, limited to [`BRUTE_FORCE_GUARD`] roots.
pub fn brute_force_max_commutative(p: &IndexPartition) -> Result<CommutativeMax> {
    let mut roots = roots_at_level(p, 1);
    roots.sort();
    let n = roots.len();
    if n > BRUTE_FORCE_GUARD {
        return Err(HodgeError::GuardExceeded {
            what: "dim g^{-1,1} for the exhaustive oracle".into(),
            size: n,
            guard: BRUTE_FORCE_GUARD,
        });
    }
    let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
    let conflict: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && sys.interact(&roots[i], &roots[j]))
                .fold(0u32, |acc, j| acc | (1 << j))
        })
        .collect();
    struct Search<'a> {
        conflict: &'a [u32],
        best: u32,
        best_len: u32,
    }
    impl Search<'_> {
        fn go(&mut self, cand: u32, chosen: u32, len: u32) {
            if len + cand.count_ones() <= self.best_len {
                if cand == 0 && len == 0 && self.best_len == 0 {
                    self.best = 0;
                }
                return;
            }
            if cand == 0 {
                self.best = chosen;
                self.best_len = len;
                return;
            }
            let i = cand.trailing_zeros();
            let bit = 1u32 << i;
            self.go(cand & !bit & !self.conflict[i as usize], chosen | bit, len + 1);
            self.go(cand & !bit, chosen, len);
        }
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut s = Search {
        conflict: &conflict,
        best: 0,
        best_len: 0,
    };
    s.go(all, 0, 0);
    let witness = (0..n).filter(|&i| s.best >> i & 1 == 1).map(|i| roots[i].clone()).collect();
    Ok(CommutativeMax {
        max: s.best_len as usize,
        witness,
    })
}

/// One chain `A_j` or `B_j` of the grouping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub name: String,
    /// Label pairs `(fp + j, (f−1)p + j)` of the `A`-blocks in the chain.
    pub pairs: Vec<(usize, usize)>,
    pub blocks: Vec<String>,
    pub roots: Vec<Root>,
}

/// A non-`A` block of `g^{-p,p}` (one per mirror pair).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StraddleBlock {
    pub name: String,
    pub roots: Vec<Root>,
    /// False for a type-B `y`-block with two or more columns: `−ε_c − ε_c'`
    /// is a root.
    pub commutative: bool,
}

/// A chain block whose roots add up to a root with those of a straddle block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlaggedPair {
    pub chain: String,
    pub chain_block: String,
    pub block: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GppGrouping {
    pub level: i64,
    pub m: usize,
    /// `m = k·p + r` (only for `p ≤ m`).
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub chains: Vec<Chain>,
    pub straddle: Vec<StraddleBlock>,
    pub flagged: Vec<FlaggedPair>,
    pub note: String,
}

fn block_roots(p: &IndexPartition, rows: &[usize], cols: &[usize]) -> Vec<Root> {
    let mut out: Vec<Root> = Vec::new();
    for &r in rows {
        for &c in cols {
            if !p.forced_zero(r, c) {
                let w = p.position_weight(r, c);
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Groups the blocks of `g^{-p,p}` (`p` odd) into mutually commuting chains.
///
/// ```
/// use hodgekit::abelian::gpp_abelian_grouping;
/// use hodgekit::basepoint::partition_of;
/// use hodgekit::hodge::HodgeNumbers;
/// let p = partition_of(&HodgeNumbers::from_half(6, &[1, 1, 1, 2]).unwrap()).unwrap();
/// let g = gpp_abelian_grouping(&p, 1).unwrap();
/// assert_eq!(g.chains[0].pairs, [(1, 0), (2, 1), (3, 2)]);
/// ```
pub fn gpp_abelian_grouping(p: &IndexPartition, level: i64) -> Result<GppGrouping> {
    let n = p.weight();
    let m = p.m();
    if level < 1 || level as usize > n || level % 2 == 0 {
        return Err(HodgeError::invalid(format!(
            "the grouping needs an odd level 1 ≤ p ≤ {n}, got {level}"
        )));
    }
    let lv = level as usize;
    let piece = graded_piece(p, level);
    let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
    let mut straddle: Vec<StraddleBlock> = Vec::new();
    for b in piece.blocks.iter().filter(|b| b.kind != BlockKind::A) {
        let roots = block_roots(p, &b.rows, &b.cols);
        let mut key = roots.clone();
        key.sort();
        let dup = straddle.iter().any(|s| {
            let mut k2 = s.roots.clone();
            k2.sort();
            k2 == key
        });
        if !dup {
            let commutative = first_interacting_pair(&roots, &sys).is_none();
            straddle.push(StraddleBlock {
                name: b.name.clone(),
                roots,
                commutative,
            });
        }
    }
    if lv > m {
        return Ok(GppGrouping {
            level,
            m,
            k: None,
            r: None,
            chains: Vec::new(),
            straddle,
            flagged: Vec::new(),
            note: "p > m: the piece is a commutative set of roots and no partition is needed".into(),
        });
    }
    let k = m / lv;
    let r = m % lv;
    let l = p.rank();
    let mut chains = Vec::new();
    for j in 0..lv {
        let len = if j <= r { k } else { k - 1 };
        if len == 0 {
            continue;
        }
        let name = if j <= r { format!("A_{j}") } else { format!("B_{j}") };
        let pairs: Vec<(usize, usize)> = (1..=len).map(|f| (f * lv + j, (f - 1) * lv + j)).collect();
        let blocks = pairs.iter().map(|&(a, b)| label_name("A", a, b, n)).collect();
        let roots = pairs
            .iter()
            .flat_map(|&(a, b)| {
                let cols = p.first(b).to_vec();
                p.first(a)
                    .iter()
                    .flat_map(move |&x| cols.clone().into_iter().map(move |y| Root::diff(l, x, y)))
                    .collect::<Vec<_>>()
            })
            .collect();
        chains.push(Chain {
            name,
            pairs,
            blocks,
            roots,
        });
    }
    let mut flagged = Vec::new();
    for ch in &chains {
        for &(a, b) in &ch.pairs {
            let cols = p.first(b);
            let rs: Vec<Root> = p
                .first(a)
                .iter()
                .flat_map(|&x| cols.iter().map(move |&y| Root::diff(l, x, y)))
                .collect();
            for s in &straddle {
                if rs.iter().any(|x| s.roots.iter().any(|y| sys.sum_is_root(x, y))) {
                    flagged.push(FlaggedPair {
                        chain: ch.name.clone(),
                        chain_block: label_name("A", a, b, n),
                        block: s.name.clone(),
                    });
                }
            }
        }
    }
    let note = if k == 1 {
        "k = 1: the A-blocks form a commutative set of roots and no partition is required".to_string()
    } else {
        format!(
            "k = {k}: split each inner index set of a chain into rows and columns to obtain commuting pieces"
        )
    };
    Ok(GppGrouping {
        level,
        m,
        k: Some(k),
        r: Some(r),
        chains,
        straddle,
        flagged,
        note,
    })
}
