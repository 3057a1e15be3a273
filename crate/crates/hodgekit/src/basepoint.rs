//! The base point: which standard basis vectors span which Hodge summand.
//!
//! The first half `1..=l` of the basis is cut into consecutive runs, one per
//! label `k ∈ {0,…,m}`, visited in the order `J₁` (even labels, then odd
//! labels). The run for label `k` spans `V^{n−k,k}`; shifting it by the
//! conjugation offset (`l`, or `l+1` when `dim V` is odd) spans `V^{k,n−k}`.
//! In even weight the middle summand `V^{m,m}` is `I_m¹ ∪ I_m² ∪ I_m³`, where
//! `I_m²` is the shift of `I_m¹` and `I_m³ = {l+1}` exists only in odd dimension.

use std::fmt;

use serde::Serialize;

use crate::error::{HodgeError, Result};
use crate::hodge::{describe, HodgeNumbers, PeriodDomainDescriptor};
use crate::roots::{GroupType, Root};

/// Name of one set of the index partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PartName {
    /// `I_k` for a label `k ≠ m` (or any label in odd weight).
    Label(usize),
    /// `I_m¹`, `I_m²`, `I_m³` in even weight.
    Middle(u8),
}

impl fmt::Display for PartName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartName::Label(k) => write!(f, "I{k}"),
            PartName::Middle(s) => write!(f, "Im{s}"),
        }
    }
}

/// The partition of `{1,…,dim V}` defining the base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexPartition {
    pub descriptor: PeriodDomainDescriptor,
    /// `F_k` for `0 ≤ k ≤ m`: the first-half run of label `k`
    /// (for B/D this is `I_m¹` when `k = m`).
    pub first_half: Vec<Vec<usize>>,
    /// Named parts in canonical order: first-half runs in `J₁` order, then the
    /// middle point (type B), then the conjugate runs in `J₂` order.
    pub parts: Vec<(PartName, Vec<usize>)>,
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    /// Shift between an index and its conjugate: `l`, or `l+1` in type B.
    pub offset: usize,
    /// `label[i-1]`: the Hodge label `k` with `e_i ∈ V^{n−k,k}`.
    labels: Vec<usize>,
}

/// Builds the base-point partition of a descriptor.
///
/// ```
/// use hodgekit::basepoint::build_partition;
/// use hodgekit::hodge::{describe, HodgeNumbers};
/// let d = describe(&HodgeNumbers::from_half(4, &[2, 2, 3]).unwrap()).unwrap();
/// let p = build_partition(&d);
/// assert_eq!(p.j1, [0, 2, 1]);
/// assert_eq!(p.j2, [4, 2, 3]);
/// assert_eq!(p.span_of(2).unwrap(), [3, 9, 6]);
/// ```
pub fn build_partition(descriptor: &PeriodDomainDescriptor) -> IndexPartition {
    let n = descriptor.weight;
    let m = descriptor.m;
    let gt = descriptor.group_type;
    let evens = (0..=m).filter(|k| k % 2 == 0);
    let odds = (0..=m).filter(|k| k % 2 == 1);
    let j1: Vec<usize> = evens.chain(odds).collect();
    let j2: Vec<usize> = j1.iter().map(|k| n - k).collect();
    let l = descriptor.rank;
    let offset = if gt == GroupType::B { l + 1 } else { l };

    let mut first_half = vec![Vec::new(); m + 1];
    let mut next = 1;
    for &k in &j1 {
        let size = if k == m && n % 2 == 0 {
            descriptor.f[m] / 2
        } else {
            descriptor.f[k]
        } as usize;
        first_half[k] = (next..next + size).collect();
        next += size;
    }
    debug_assert_eq!(next - 1, l);

    let name = |k: usize| {
        if k == m && n % 2 == 0 {
            PartName::Middle(1)
        } else {
            PartName::Label(k)
        }
    };
    let mut parts = Vec::new();
    for &k in &j1 {
        parts.push((name(k), first_half[k].clone()));
    }
    if gt == GroupType::B {
        parts.push((PartName::Middle(3), vec![l + 1]));
    }
    for &k in &j1 {
        let conj_name = if k == m && n % 2 == 0 {
            PartName::Middle(2)
        } else {
            PartName::Label(n - k)
        };
        parts.push((conj_name, first_half[k].iter().map(|i| i + offset).collect()));
    }

    let mut labels = vec![0usize; descriptor.dim_v];
    for k in 0..=m {
        for &i in &first_half[k] {
            labels[i - 1] = k;
            labels[i + offset - 1] = n - k;
        }
    }
    if gt == GroupType::B {
        labels[l] = m;
    }
    IndexPartition {
        descriptor: descriptor.clone(),
        first_half,
        parts,
        j1,
        j2,
        offset,
        labels,
    }
}

/// Convenience wrapper: Hodge numbers straight to a partition.
pub fn partition_of(hn: &HodgeNumbers) -> Result<IndexPartition> {
    Ok(build_partition(&describe(hn)?))
}

impl IndexPartition {
    pub fn weight(&self) -> usize {
        self.descriptor.weight
    }

    pub fn m(&self) -> usize {
        self.descriptor.m
    }

    pub fn rank(&self) -> usize {
        self.descriptor.rank
    }

    pub fn dim_v(&self) -> usize {
        self.descriptor.dim_v
    }

    pub fn group_type(&self) -> GroupType {
        self.descriptor.group_type
    }

    /// The fixed middle index `l+1` of type B.
    pub fn middle(&self) -> Option<usize> {
        (self.group_type() == GroupType::B).then_some(self.rank() + 1)
    }

    /// Hodge label of a 1-based basis index.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    /// The index set of a named part.
    pub fn part(&self, name: PartName) -> Option<&[usize]> {
        self.parts
            .iter()
            .find(|(p, _)| *p == name)
            .map(|(_, v)| v.as_slice())
    }

    /// Basis indices spanning `V^{n−k,k}`; for the middle label the order is
    /// `I_m¹, I_m², I_m³`.
    pub fn span_of(&self, k: usize) -> Result<Vec<usize>> {
        if k > self.weight() {
            return Err(HodgeError::invalid(format!(
                "label {k} exceeds the weight {}",
                self.weight()
            )));
        }
        Ok(self.index_set(k))
    }

    /// The index set `I_k`, part by part in the order of [`PartName`].
    pub fn index_set(&self, k: usize) -> Vec<usize> {
        let mut hits: Vec<&(PartName, Vec<usize>)> = self
            .parts
            .iter()
            .filter(|(_, v)| v.first().is_some_and(|&i| self.label(i) == k))
            .collect();
        hits.sort_by_key(|(name, _)| *name);
        hits.into_iter().flat_map(|(_, v)| v.iter().copied()).collect()
    }

    /// The first-half run `F_k` (`0 ≤ k ≤ m`).
    pub fn first(&self, k: usize) -> &[usize] {
        &self.first_half[k]
    }

    /// The conjugation involution σ on basis indices.
    pub fn sigma(&self, i: usize) -> usize {
        let l = self.rank();
        if Some(i) == self.middle() {
            i
        } else if i <= l {
            i + self.offset
        } else {
            i - self.offset
        }
    }

    /// Weight of `e_i` under the diagonal Cartan: `(coordinate, ±1)`, or `None`
    /// for the middle vector of type B.
    pub fn index_weight(&self, i: usize) -> Option<(usize, i8)> {
        let l = self.rank();
        if i <= l {
            Some((i, 1))
        } else if Some(i) == self.middle() {
            None
        } else {
            Some((i - self.offset, -1))
        }
    }

    /// Weight of the elementary matrix `E_{rc}`: `w(r) − w(c)`.
    pub fn position_weight(&self, r: usize, c: usize) -> Root {
        let mut v = vec![0i8; self.rank()];
        if let Some((a, s)) = self.index_weight(r) {
            v[a - 1] += s;
        }
        if let Some((b, s)) = self.index_weight(c) {
            v[b - 1] -= s;
        }
        Root::from_coeffs(v)
    }

    /// Position paired with `(r, c)` by the form constraint, and the factor
    /// `s` in `g[mirror] = s · g[r, c]`.
    pub fn mirror(&self, r: usize, c: usize) -> ((usize, usize), i64) {
        let target = (self.sigma(c), self.sigma(r));
        let sign = if self.group_type() == GroupType::C {
            let half = |i: usize| if i <= self.rank() { 1 } else { -1 };
            -(half(r) * half(c))
        } else {
            -1
        };
        (target, sign)
    }

    /// True when the form constraint forces the entry at `(r, c)` to vanish.
    pub fn forced_zero(&self, r: usize, c: usize) -> bool {
        let (t, s) = self.mirror(r, c);
        t == (r, c) && s == -1
    }

    /// Level `p` of the position `(r, c)`: the map `E_{rc}` sends `V^{n−j,j}` to
    /// `V^{n−j−p,j+p}` with `j = label(c)`.
    pub fn position_level(&self, r: usize, c: usize) -> i64 {
        self.label(r) as i64 - self.label(c) as i64
    }

    /// Canonical matrix position of a root: the first, in row-major order, of
    /// the two positions carrying it.
    pub fn root_position(&self, alpha: &Root) -> Result<(usize, usize)> {
        let bad = || HodgeError::NotARoot {
            root: alpha.to_string(),
            system: format!("{}{}", self.group_type(), self.rank()),
        };
        if alpha.rank() != self.rank() {
            return Err(bad());
        }
        let sup = alpha.support();
        let c = alpha.coeffs();
        let up = |i: usize| i; // first-half index carrying +ε_i
        let down = |i: usize| i + self.offset; // carrying −ε_i
        let pos = match sup.as_slice() {
            [i, j] => {
                let (si, sj) = (c[i - 1], c[j - 1]);
                if si.abs() != 1 || sj.abs() != 1 {
                    return Err(bad());
                }
                // E_{rc} has weight w(r) − w(c): put the positive coefficient
                // on the row and the negative one on the column.
                let row = if si > 0 { up(*i) } else { down(*i) };
                let col = if sj > 0 { down(*j) } else { up(*j) };
                (row, col)
            }
            [i] => {
                let s = c[i - 1];
                match (self.group_type(), s) {
                    (GroupType::B, 1) => (up(*i), self.rank() + 1),
                    (GroupType::B, -1) => (self.rank() + 1, up(*i)),
                    (GroupType::C, 2) => (up(*i), down(*i)),
                    (GroupType::C, -2) => (down(*i), up(*i)),
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        let (mirror, _) = self.mirror(pos.0, pos.1);
        if self.forced_zero(pos.0, pos.1) {
            return Err(bad());
        }
        Ok(pos.min(mirror))
    }

    /// Canonical root-position pairs of all positions in one mirror orbit per
    /// root, in row-major order of the canonical position.
    pub fn all_root_positions(&self) -> Vec<((usize, usize), Root)> {
        let dv = self.dim_v();
        let mut out = Vec::new();
        for r in 1..=dv {
            for c in 1..=dv {
                let (mir, _) = self.mirror(r, c);
                if mir < (r, c) || self.forced_zero(r, c) {
                    continue;
                }
                let w = self.position_weight(r, c);
                if w.is_zero() {
                    continue;
                }
                out.push(((r, c), w));
            }
        }
        out
    }

    /// Stable identity used to reject mixing objects from different domains.
    pub fn key(&self) -> String {
        self.descriptor.key()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, half: &[u32]) -> IndexPartition {
        partition_of(&HodgeNumbers::from_half(n, half).unwrap()).unwrap()
    }

    #[test]
    fn so20_spans() {
        let p = part(8, &[2, 3, 2, 1, 4]);
        assert_eq!(p.span_of(0).unwrap(), [1, 2]);
        assert_eq!(p.span_of(1).unwrap(), [7, 8, 9]);
        assert_eq!(p.span_of(2).unwrap(), [3, 4]);
        assert_eq!(p.span_of(3).unwrap(), [10]);
        assert_eq!(p.span_of(4).unwrap(), [5, 6, 15, 16]);
        assert_eq!(p.span_of(8).unwrap(), [11, 12]);
        assert_eq!(p.j1, [0, 2, 4, 1, 3]);
    }

    #[test]
    fn sp14_spans() {
        let p = part(5, &[2, 3, 2]);
        assert_eq!(p.span_of(0).unwrap(), [1, 2]);
        assert_eq!(p.span_of(1).unwrap(), [5, 6, 7]);
        assert_eq!(p.span_of(2).unwrap(), [3, 4]);
        assert_eq!(p.span_of(5).unwrap(), [8, 9]);
        assert_eq!(p.offset, 7);
    }

    #[test]
    fn so11_middle() {
        let p = part(4, &[2, 2, 3]);
        assert_eq!(p.part(PartName::Middle(1)).unwrap(), [3]);
        assert_eq!(p.part(PartName::Middle(2)).unwrap(), [9]);
        assert_eq!(p.part(PartName::Middle(3)).unwrap(), [6]);
        assert_eq!(p.index_set(2), [3, 9, 6]);
        assert_eq!(p.sigma(6), 6);
        assert_eq!(p.sigma(3), 9);
    }

    #[test]
    fn spans_partition_the_basis() {
        for hn in crate::hodge::sweep(6, 3) {
            let p = partition_of(&hn).unwrap();
            let mut all: Vec<usize> = (0..=p.weight())
                .flat_map(|k| p.span_of(k).unwrap())
                .collect();
            all.sort_unstable();
            assert_eq!(all, (1..=p.dim_v()).collect::<Vec<_>>(), "{hn}");
            for k in 0..=p.weight() {
                assert_eq!(p.span_of(k).unwrap().len() as u32, hn.h()[k], "{hn} k={k}");
            }
        }
    }

    #[test]
    fn root_positions_round_trip() {
        for hn in crate::hodge::sweep(5, 2) {
            let p = partition_of(&hn).unwrap();
            let sys = crate::roots::RootSystem::degenerate_ok(p.group_type(), p.rank());
            let listed = p.all_root_positions();
            assert_eq!(listed.len(), sys.all_roots.len(), "{hn}");
            for (pos, r) in listed {
                assert!(sys.contains(&r), "{hn}: {r}");
                assert_eq!(p.root_position(&r).unwrap(), pos);
            }
        }
    }
}
