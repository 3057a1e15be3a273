//! Exact matrices in the defining representation, used as ground truth.
//!
//! Matrices are sparse maps from 1-based positions to integers. The bilinear
//! forms are the block matrices `[[0, I], [I, 0]]` (type D),
//! `[[0, 0, I], [0, 1, 0], [I, 0, 0]]` (type B) and `[[0, I], [−I, 0]]`
//! (type C); an element `g` of the Lie algebra satisfies `gQ + Qgᵀ = 0`.
//! Root vectors have entries in `{−1, 0, 1}` with `+1` at their first support
//! position in row-major order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::basepoint::IndexPartition;
use crate::blocks::Block;
use crate::error::{HodgeError, Result};
use crate::roots::{GroupType, Root};

/// A sparse square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraMatrix {
    pub size: usize,
    pub group_type: GroupType,
    entries: BTreeMap<(usize, usize), i64>,
}

impl AlgebraMatrix {
    pub fn zero(size: usize, group_type: GroupType) -> Self {
        AlgebraMatrix {
            size,
            group_type,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        assert!(r >= 1 && c >= 1 && r <= self.size && c <= self.size);
        let e = self.entries.entry((r, c)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&(r, c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(r, c)| r == c)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.size]; self.size];
        for (&(r, c), &v) in &self.entries {
            d[r - 1][c - 1] = v;
        }
        d
    }

    pub fn mul(&self, other: &AlgebraMatrix) -> AlgebraMatrix {
        let mut by_row: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for (&(r, c), &v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = AlgebraMatrix::zero(self.size, self.group_type);
        for (&(r, k), &a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_to(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> AlgebraMatrix {
        let mut out = AlgebraMatrix::zero(self.size, self.group_type);
        for (&(r, c), &v) in &self.entries {
            out.add_to(c, r, v);
        }
        out
    }

    fn combine(&self, other: &AlgebraMatrix, sign: i64) -> AlgebraMatrix {
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.add_to(r, c, sign * v);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> AlgebraMatrix {
        let mut out = AlgebraMatrix::zero(self.size, self.group_type);
        if k != 0 {
            for (&(r, c), &v) in &self.entries {
                out.add_to(r, c, k * v);
            }
        }
        out
    }
}

/// The matrix of the defining bilinear form.
pub fn form_matrix(p: &IndexPartition) -> AlgebraMatrix {
    let l = p.rank();
    let gt = p.group_type();
    let mut q = AlgebraMatrix::zero(p.dim_v(), gt);
    let off = p.offset;
    for i in 1..=l {
        q.add_to(i, i + off, 1);
        q.add_to(i + off, i, if gt == GroupType::C { -1 } else { 1 });
    }
    if gt == GroupType::B {
        q.add_to(l + 1, l + 1, 1);
    }
    q
}

/// True when `gQ + Qgᵀ = 0`.
pub fn satisfies_form(g: &AlgebraMatrix, p: &IndexPartition) -> bool {
    let q = form_matrix(p);
    g.mul(&q).combine(&q.mul(&g.transpose()), 1).is_zero()
}

/// The root vector of `α`.
pub fn root_matrix(alpha: &Root, p: &IndexPartition) -> Result<AlgebraMatrix> {
    let (r, c) = p.root_position(alpha)?;
    let ((mr, mc), sign) = p.mirror(r, c);
    let mut g = AlgebraMatrix::zero(p.dim_v(), p.group_type());
    g.add_to(r, c, 1);
    if (mr, mc) != (r, c) {
        g.add_to(mr, mc, sign);
    }
    Ok(g)
}

/// The Cartan element `diag(h₁,…,h_l, [0,] −h₁,…,−h_l)`.
pub fn cartan(h: &[i64], p: &IndexPartition) -> Result<AlgebraMatrix> {
    if h.len() != p.rank() {
        return Err(HodgeError::invalid(format!(
            "Cartan element needs {} coordinates, got {}",
            p.rank(),
            h.len()
        )));
    }
    let mut g = AlgebraMatrix::zero(p.dim_v(), p.group_type());
    for (i, &x) in h.iter().enumerate() {
        g.add_to(i + 1, i + 1, x);
        g.add_to(i + 1 + p.offset, i + 1 + p.offset, -x);
    }
    Ok(g)
}

/// The commutator `M₁M₂ − M₂M₁`.
pub fn bracket(a: &AlgebraMatrix, b: &AlgebraMatrix) -> Result<AlgebraMatrix> {
    if a.size != b.size || a.group_type != b.group_type {
        return Err(HodgeError::invalid(format!(
            "cannot bracket a {}×{} {} matrix with a {}×{} {} matrix",
            a.size, a.size, a.group_type, b.size, b.size, b.group_type
        )));
    }
    Ok(a.mul(b).combine(&b.mul(a), -1))
}

/// True when every nonzero entry `(r, c)` of `g` sends `V^{n−j,j}` with
/// `j = label(c)` into `V^{n−j−p,j+p}`.
pub fn is_graded(g: &AlgebraMatrix, level: i64, p: &IndexPartition) -> bool {
    g.nonzeros()
        .all(|((r, c), _)| p.position_level(r, c) == level)
}

/// True when the root vectors of `roots` pairwise commute as matrices.
pub fn span_is_abelian(roots: &[Root], p: &IndexPartition) -> Result<bool> {
    let mats: Vec<AlgebraMatrix> = roots
        .iter()
        .map(|r| root_matrix(r, p))
        .collect::<Result<_>>()?;
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            if !bracket(&mats[a], &mats[b])?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Row-echelon basis of a space of matrices, over the integers.
#[derive(Debug, Clone, Default)]
pub struct SpanBasis {
    rows: Vec<BTreeMap<(usize, usize), i128>>,
    pivots: BTreeMap<(usize, usize), usize>,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, g: &AlgebraMatrix) -> BTreeMap<(usize, usize), i128> {
        let mut v: BTreeMap<(usize, usize), i128> =
            g.nonzeros().map(|(k, x)| (k, x as i128)).collect();
        while let Some((&lead, &x)) = v.iter().next() {
            let Some(&row) = self.pivots.get(&lead) else {
                break;
            };
            let basis = &self.rows[row];
            let y = basis[&lead];
            let mut next: BTreeMap<(usize, usize), i128> = BTreeMap::new();
            for (&k, &a) in &v {
                next.insert(k, a * y);
            }
            for (&k, &b) in basis {
                let e = next.entry(k).or_insert(0);
                *e -= x * b;
            }
            next.retain(|_, a| *a != 0);
            let g = next.values().fold(0, |acc, &a| gcd(acc, a));
            if g > 1 {
                for a in next.values_mut() {
                    *a /= g;
                }
            }
            v = next;
        }
        v
    }

    /// Adds `g`; returns false when it was already in the span.
    pub fn insert(&mut self, g: &AlgebraMatrix) -> bool {
        let v = self.reduce(g);
        match v.keys().next() {
            None => false,
            Some(&lead) => {
                self.pivots.insert(lead, self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }

    pub fn contains(&self, g: &AlgebraMatrix) -> bool {
        self.reduce(g).is_empty()
    }

    pub fn from_matrices<'a>(ms: impl IntoIterator<Item = &'a AlgebraMatrix>) -> Self {
        let mut s = SpanBasis::new();
        for m in ms {
            s.insert(m);
        }
        s
    }
}

/// True when the two families of matrices span the same space.
pub fn same_span(a: &[AlgebraMatrix], b: &[AlgebraMatrix]) -> bool {
    let sa = SpanBasis::from_matrices(a);
    let sb = SpanBasis::from_matrices(b);
    sa.rank() == sb.rank() && b.iter().all(|m| sa.contains(m))
}

/// All nonzero commutators `[x, y]` with `x ∈ left`, `y ∈ right`.
pub fn brackets(left: &[AlgebraMatrix], right: &[AlgebraMatrix]) -> Result<Vec<AlgebraMatrix>> {
    let mut out = Vec::new();
    for x in left {
        for y in right {
            let z = bracket(x, y)?;
            if !z.is_zero() {
                out.push(z);
            }
        }
    }
    Ok(out)
}

/// Outcome of checking one grid block against the matrix realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub block: String,
    /// Every root vector of the block is supported on the block and its mirror.
    pub supported: bool,
    /// Every root vector of the block maps `span_of(j)` into `span_of(j+p)`
    /// and kills the other summands.
    pub graded: bool,
    /// Independent entries counted from the matrices (rank of their span).
    pub entry_count: usize,
    /// The block's own count.
    pub expected_entries: usize,
    pub pass: bool,
}

/// Checks a block produced by [`crate::blocks::block_grid`].
pub fn verify_block(block: &Block, mirror: Option<&Block>, p: &IndexPartition) -> Result<BlockReport> {
    let mut supported = true;
    let mut graded = true;
    let mut span = SpanBasis::new();
    for &r in &block.rows {
        for &c in &block.cols {
            if p.forced_zero(r, c) {
                continue;
            }
            let w = p.position_weight(r, c);
            let g = if w.is_zero() {
                // Cartan direction on a diagonal A-block position.
                let mut h = vec![0i64; p.rank()];
                h[p.index_weight(r).map(|(a, _)| a).unwrap_or(1) - 1] = 1;
                cartan(&h, p)?
            } else {
                root_matrix(&w, p)?
            };
            supported &= g.nonzeros().all(|((a, b), _)| {
                block.contains(a, b) || mirror.is_some_and(|m| m.contains(a, b))
            });
            graded &= is_graded(&g, block.level, p);
            // The matrix must actually realize the position it came from.
            supported &= g.get(r, c) != 0 && satisfies_form(&g, p);
            span.insert(&g);
        }
    }
    let entry_count = span.rank();
    let pass = supported && graded && entry_count == block.independent;
    Ok(BlockReport {
        block: block.name.clone(),
        supported,
        graded,
        entry_count,
        expected_entries: block.independent,
        pass,
    })
}
