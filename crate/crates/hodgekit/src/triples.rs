//! Hodge triples and the Hodge bracket.
//!
//! A standard triple pairs a unipotent block at level `p > 0` with its mirror
//! image at level `−p` and the two diagonal `A`-blocks acting on its row and
//! column summands; the three together span a copy of `sl(s+t)`. There are two
//! standard shapes, described by first-half labels:
//!
//! * `A`-type `H_{ij}` (`i > j`): negative roots `ε_x − ε_y`, `x ∈ F_i`, `y ∈ F_j`,
//!   level `i − j`;
//! * `C/B`-type `H^c` on a pair `a < b`: negative roots `−ε_x − ε_y`, `x ∈ F_a`,
//!   `y ∈ F_b`, living in the block `C_{n−a,b}`, level `n − a − b`.
//!
//! The self-mirrored block `C_{n−a,a}` gives a non-standard triple (an `sp(2h)`
//! in type C, `so(2h)` in types B and D), and in type B each short root `−ε_c`
//! of a `y`-block gives an `so(3) ≅ su(2)` triple.

use std::fmt;

use serde::Serialize;

use crate::basepoint::IndexPartition;
use crate::blocks::label_name;
use crate::error::{HodgeError, Result};
use crate::hodge::{block_sign, Sign};
use crate::matrixrep::{brackets, root_matrix, AlgebraMatrix, SpanBasis};
use crate::roots::{GroupType, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    StandardA,
    StandardCB,
    NonstandardC,
    NonstandardB,
}

impl Flavor {
    pub fn is_standard(self) -> bool {
        matches!(self, Flavor::StandardA | Flavor::StandardCB)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "sl")]
    Sl,
    #[serde(rename = "so")]
    So,
    #[serde(rename = "sp")]
    Sp,
}

/// The classical subalgebra a triple spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub family: Family,
    pub size: usize,
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::Sl => "sl",
            Family::So => "so",
            Family::Sp => "sp",
        };
        write!(f, "{fam}({})", self.size)
    }
}

/// A block (or a restriction of one) named after its grid block. The positive
/// block of a triple sits at the transposed position of the negative block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockRef {
    pub name: String,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeTriple {
    pub flavor: Flavor,
    pub name: String,
    /// `A`: `(i, j)` with `i > j`; `C/B` and non-standard C: `(a, b)` with
    /// `a ≤ b`; non-standard B: `(j, c)` with `c` the basis index of the root.
    pub labels: (usize, usize),
    pub level: i64,
    pub negative_block: BlockRef,
    pub positive_block: BlockRef,
    /// Names of the diagonal `A`-blocks forming the semisimple part.
    pub semisimple: Vec<String>,
    pub roots_neg: Vec<Root>,
    pub roots_pos: Vec<Root>,
    /// Short roots `−ε_c` of a `y`-block (non-standard B only).
    pub roots_short: Vec<Root>,
    pub embedding: Embedding,
    /// Key of the period domain the triple was built for.
    pub domain: String,
    /// True for a proper restriction produced by [`sub_triple`].
    pub restricted: bool,
}

impl HodgeTriple {
    /// All roots of the two unipotent parts.
    pub fn unipotent_roots(&self) -> Vec<Root> {
        let mut v = self.roots_neg.clone();
        v.extend(self.roots_short.iter().cloned());
        v.extend(self.roots_pos.iter().cloned());
        v
    }

    /// First-half labels appearing in the triple.
    pub fn label_set(&self) -> Vec<usize> {
        let (a, b) = self.labels;
        match self.flavor {
            Flavor::NonstandardB => vec![a],
            _ if a == b => vec![a],
            _ => vec![a.min(b), a.max(b)],
        }
    }
}

/// A triple shape considered by the classification and discarded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RejectedCandidate {
    pub name: String,
    pub embedding: Embedding,
    pub reason: String,
}

/// The triples attached to `g^{-p,p} ⊕ g^{0,0} ⊕ g^{p,-p}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleSet {
    pub level: i64,
    pub triples: Vec<HodgeTriple>,
    pub rejected: Vec<RejectedCandidate>,
}

fn c_name(p: &IndexPartition, a: usize, b: usize) -> String {
    label_name("Hc", p.weight() - a, b, p.weight())
}

/// Standard `A`-type triple `H_{ij}`, `i > j`.
pub fn standard_a(p: &IndexPartition, i: usize, j: usize) -> Result<HodgeTriple> {
    let m = p.m();
    if i <= j || i > m {
        return Err(HodgeError::invalid(format!(
            "A-type triples need m ≥ i > j, got ({i},{j}) with m = {m}"
        )));
    }
    let n = p.weight();
    let l = p.rank();
    let rows = p.first(i).to_vec();
    let cols = p.first(j).to_vec();
    let mut neg = Vec::new();
    for &x in &rows {
        for &y in &cols {
            neg.push(Root::diff(l, x, y));
        }
    }
    let pos = neg.iter().map(Root::neg).collect();
    Ok(HodgeTriple {
        flavor: Flavor::StandardA,
        name: label_name("H", i, j, n),
        labels: (i, j),
        level: (i - j) as i64,
        negative_block: BlockRef {
            name: label_name("A", i, j, n),
            rows: rows.clone(),
            cols: cols.clone(),
        },
        positive_block: BlockRef {
            name: label_name("A", j, i, n),
            rows: cols.clone(),
            cols: rows.clone(),
        },
        semisimple: vec![label_name("A", i, i, n), label_name("A", j, j, n)],
        roots_neg: neg,
        roots_pos: pos,
        roots_short: Vec::new(),
        embedding: Embedding {
            family: Family::Sl,
            size: rows.len() + cols.len(),
        },
        domain: p.key(),
        restricted: false,
    })
}

/// `C/B`-type triple on the labels `a ≤ b`; for `a = b` this is the
/// non-standard triple of the self-mirrored block `C_{n−a,a}`.
pub fn c_type(p: &IndexPartition, a: usize, b: usize) -> Result<HodgeTriple> {
    let (a, b) = (a.min(b), a.max(b));
    let m = p.m();
    let n = p.weight();
    if b > m || n < a + b {
        return Err(HodgeError::invalid(format!(
            "C-type triples need labels ≤ m = {m}, got ({a},{b})"
        )));
    }
    let l = p.rank();
    let off = p.offset;
    let fa = p.first(a).to_vec();
    let fb = p.first(b).to_vec();
    let mut neg = Vec::new();
    if a == b {
        for (s, &x) in fa.iter().enumerate() {
            if p.group_type() == GroupType::C {
                neg.push(Root::single(l, x, -2));
            }
            for &y in &fa[s + 1..] {
                neg.push(Root::pair(l, x, -1, y, -1));
            }
        }
    } else {
        for &x in &fa {
            for &y in &fb {
                neg.push(Root::pair(l, x, -1, y, -1));
            }
        }
    }
    let pos = neg.iter().map(Root::neg).collect();
    let (flavor, embedding, semisimple) = if a == b {
        let family = if p.group_type() == GroupType::C {
            Family::Sp
        } else {
            Family::So
        };
        (
            Flavor::NonstandardC,
            Embedding {
                family,
                size: 2 * fa.len(),
            },
            vec![label_name("A", a, a, n)],
        )
    } else {
        (
            Flavor::StandardCB,
            Embedding {
                family: Family::Sl,
                size: fa.len() + fb.len(),
            },
            vec![label_name("A", a, a, n), label_name("A", b, b, n)],
        )
    };
    Ok(HodgeTriple {
        flavor,
        name: c_name(p, a, b),
        labels: (a, b),
        level: (n - a - b) as i64,
        negative_block: BlockRef {
            name: label_name("C", n - a, b, n),
            rows: fa.iter().map(|x| x + off).collect(),
            cols: fb.clone(),
        },
        positive_block: BlockRef {
            name: label_name("B", b, n - a, n),
            rows: fb.clone(),
            cols: fa.iter().map(|x| x + off).collect(),
        },
        semisimple,
        roots_neg: neg,
        roots_pos: pos,
        roots_short: Vec::new(),
        embedding,
        domain: p.key(),
        restricted: false,
    })
}

/// The `su(2)`-scale type-B triple of the short root `−ε_c`, `c ∈ F_j`.
pub fn short_root_triple(p: &IndexPartition, j: usize, c: usize) -> Result<HodgeTriple> {
    let m = p.m();
    if p.group_type() != GroupType::B || j >= m || !p.first(j).contains(&c) {
        return Err(HodgeError::invalid(format!(
            "no y-block root −e{c} for label {j} in this domain"
        )));
    }
    let n = p.weight();
    let l = p.rank();
    let mid = l + 1;
    Ok(HodgeTriple {
        flavor: Flavor::NonstandardB,
        name: format!("{}[e{c}]", label_name("Hy", m, j, n)),
        labels: (j, c),
        level: (m - j) as i64,
        negative_block: BlockRef {
            name: label_name("y", m, j, n),
            rows: vec![mid],
            cols: vec![c],
        },
        positive_block: BlockRef {
            name: label_name("x", j, m, n),
            rows: vec![c],
            cols: vec![mid],
        },
        semisimple: vec![label_name("A", j, j, n)],
        roots_neg: Vec::new(),
        roots_pos: vec![Root::single(l, c, 1)],
        roots_short: vec![Root::single(l, c, -1)],
        embedding: Embedding {
            family: Family::So,
            size: 3,
        },
        domain: p.key(),
        restricted: false,
    })
}

/// All Hodge triples at level `1 ≤ p ≤ n`, triples with empty blocks omitted.
///
/// ```
/// use hodgekit::basepoint::partition_of;
/// use hodgekit::hodge::HodgeNumbers;
/// use hodgekit::triples::enumerate_triples;
/// let p = partition_of(&HodgeNumbers::from_half(4, &[2, 2, 4]).unwrap()).unwrap();
/// let names: Vec<String> = enumerate_triples(&p, 1).unwrap()
///     .triples.into_iter().map(|t| t.name).collect();
/// assert_eq!(names, ["H10", "H21", "Hc32"]);
/// ```
pub fn enumerate_triples(p: &IndexPartition, level: i64) -> Result<TripleSet> {
    let n = p.weight();
    let m = p.m();
    if level < 1 || level as usize > n {
        return Err(HodgeError::invalid(format!(
            "triples are indexed by 1 ≤ p ≤ n = {n}, got p = {level}"
        )));
    }
    let lv = level as usize;
    let mut triples = Vec::new();
    let mut rejected = Vec::new();
    for j in 0..=m {
        let i = j + lv;
        if i <= m {
            let t = standard_a(p, i, j)?;
            if !t.roots_neg.is_empty() {
                triples.push(t);
            }
        }
    }
    for a in 0..=m {
        for b in a..=m {
            if a + b + lv != n {
                continue;
            }
            let t = c_type(p, a, b)?;
            if a == b && p.group_type() == GroupType::B && !p.first(a).is_empty() {
                rejected.push(RejectedCandidate {
                    name: format!("{}+y", t.name),
                    embedding: Embedding {
                        family: Family::So,
                        size: 2 * p.first(a).len() + 1,
                    },
                    reason: format!(
                        "extending through {} would mix levels {} and {}; only so(3) ≅ su(2) embeddings through y are admissible",
                        label_name("y", m, a, n),
                        level,
                        m - a
                    ),
                });
            }
            if !t.roots_neg.is_empty() {
                triples.push(t);
            }
        }
    }
    if p.group_type() == GroupType::B && lv <= m {
        let j = m - lv;
        let fj = p.first(j);
        for &c in fj {
            triples.push(short_root_triple(p, j, c)?);
        }
        if fj.len() >= 2 {
            rejected.push(RejectedCandidate {
                name: label_name("Hy", m, j, n),
                embedding: Embedding {
                    family: Family::So,
                    size: 2 * fj.len() + 1,
                },
                reason: format!(
                    "an so({}) embedding through the y-block is not admissible; only so(3) ≅ su(2) per short root",
                    2 * fj.len() + 1
                ),
            });
        }
    }
    Ok(TripleSet {
        level,
        triples,
        rejected,
    })
}

/// Looks up a triple by the labels of its negative block, e.g. `H10`,
/// `Hc41`, `H1,0` or `Hc4,1`.
pub fn parse_triple(p: &IndexPartition, text: &str) -> Result<HodgeTriple> {
    let bad = || HodgeError::invalid(format!("'{text}' is not a triple label such as H10 or Hc41"));
    let (is_c, rest) = if let Some(r) = text.strip_prefix("Hc") {
        (true, r)
    } else if let Some(r) = text.strip_prefix('H') {
        (false, r)
    } else {
        return Err(bad());
    };
    let (i, j) = if let Some((x, y)) = rest.split_once(',') {
        (x.parse::<usize>().map_err(|_| bad())?, y.parse::<usize>().map_err(|_| bad())?)
    } else {
        let digits: Vec<u32> = rest.chars().map(|c| c.to_digit(10)).collect::<Option<_>>().ok_or_else(bad)?;
        if digits.len() != 2 {
            return Err(bad());
        }
        (digits[0] as usize, digits[1] as usize)
    };
    let n = p.weight();
    if is_c {
        if i > n || i < p.m() {
            return Err(HodgeError::invalid(format!("Hc{i}{j}: row label must lie in m..=n")));
        }
        c_type(p, n - i, j)
    } else {
        let (hi, lo) = (i.max(j), i.min(j));
        standard_a(p, hi, lo)
    }
}

/// Which table and clause of the Hodge bracket produced a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClauseTag {
    pub table: BracketTable,
    pub clause: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BracketTable {
    /// Two `A`-type triples.
    AA,
    /// An `A`-type and a `C/B`-type triple.
    AC,
    /// Two `C/B`-type triples.
    CC,
}

impl fmt::Display for ClauseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.table {
            BracketTable::AA => "AxA",
            BracketTable::AC => "AxC",
            BracketTable::CC => "CxC",
        };
        write!(f, "{t}.{}", self.clause)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketTerm {
    pub clause: ClauseTag,
    pub result: HodgeTriple,
}

/// The formal bracket of two standard triples: every clause that fires, with
/// its output triple. An empty list means no clause fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeBracketResult {
    pub terms: Vec<BracketTerm>,
    pub note: Option<String>,
}

/// Clause-by-clause evaluation of the three bracket tables.
///
/// Labels are taken in ascending order (`H_{a,b}` with `a < b`, and
/// `H^c_{n−a,b}` for the pair `a < b`); the ordering side conditions of the
/// tables then reduce to "the output labels are the two labels that are not
/// shared", which is how the output is normalized. The general rule: the
/// shared label disappears and the two remaining labels index the result —
/// `A`-type for `A×A` and `C×C`, `C/B`-type for `A×C`.
pub fn hodge_bracket(p: &IndexPartition, t1: &HodgeTriple, t2: &HodgeTriple) -> Result<HodgeBracketResult> {
    for t in [t1, t2] {
        if !t.flavor.is_standard() {
            return Err(HodgeError::invalid(format!(
                "the Hodge bracket is defined for standard triples only; {} is {:?}",
                t.name, t.flavor
            )));
        }
        if t.domain != p.key() {
            return Err(HodgeError::DescriptorMismatch(format!(
                "{} belongs to {}, not {}",
                t.name,
                t.domain,
                p.key()
            )));
        }
    }
    let asc = |t: &HodgeTriple| {
        let (x, y) = t.labels;
        (x.min(y), x.max(y))
    };
    let same = asc(t1) == asc(t2) && t1.flavor == t2.flavor;
    let mut terms = Vec::new();
    let mut push = |table, clause, out: Result<HodgeTriple>| -> Result<()> {
        terms.push(BracketTerm {
            clause: ClauseTag { table, clause },
            result: out?,
        });
        Ok(())
    };
    let a_out = |x: usize, y: usize| standard_a(p, x.max(y), x.min(y));
    match (t1.flavor, t2.flavor) {
        (Flavor::StandardA, Flavor::StandardA) => {
            let ((a1, b1), (a2, b2)) = (asc(t1), asc(t2));
            if b1 == a2 {
                push(BracketTable::AA, 1, a_out(a1, b2))?;
            }
            if a1 == b2 {
                push(BracketTable::AA, 2, a_out(a2, b1))?;
            }
            if b1 == b2 && a1 != a2 {
                push(BracketTable::AA, 3, a_out(a1, a2))?;
            }
            if a1 == a2 && b1 != b2 {
                push(BracketTable::AA, 4, a_out(b1, b2))?;
            }
        }
        (Flavor::StandardCB, Flavor::StandardCB) => {
            let ((a1, b1), (a2, b2)) = (asc(t1), asc(t2));
            if a1 == a2 && b1 != b2 {
                push(BracketTable::CC, 1, a_out(b1, b2))?;
            }
            if a1 == b2 {
                push(BracketTable::CC, 2, a_out(b1, a2))?;
            }
            if b1 == a2 {
                push(BracketTable::CC, 3, a_out(a1, b2))?;
            }
            if b1 == b2 && a1 != a2 {
                push(BracketTable::CC, 4, a_out(a1, a2))?;
            }
        }
        _ => {
            let (ta, tc) = if t1.flavor == Flavor::StandardA { (t1, t2) } else { (t2, t1) };
            let ((a1, b1), (a2, b2)) = (asc(ta), asc(tc));
            if a1 == a2 {
                push(BracketTable::AC, 1, c_type(p, b1, b2))?;
            }
            if a1 == b2 {
                push(BracketTable::AC, 2, c_type(p, a2, b1))?;
            }
            if b1 == b2 {
                push(BracketTable::AC, 3, c_type(p, a2, a1))?;
            }
            if b1 == a2 {
                push(BracketTable::AC, 4, c_type(p, a1, b2))?;
            }
        }
    }
    let note = if same {
        Some("a triple with itself: the commutator lies in g^{0,0}".to_string())
    } else if terms.len() > 1 {
        Some(format!("{} clauses fire simultaneously", terms.len()))
    } else {
        None
    };
    Ok(HodgeBracketResult { terms, note })
}

/// Matrix-level comparison of a Hodge bracket with the actual commutators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketCheck {
    /// Rank of `W = span{[x, y]}` over the unipotent root vectors of both operands.
    pub commutator_rank: usize,
    /// Rank of the span of the unipotent parts of all output triples.
    pub predicted_rank: usize,
    /// `W` equals the sum of the outputs' unipotent spans.
    pub sum_matches: bool,
    /// Every single clause's output alone equals `W` (fails on double firings
    /// with two nonempty outputs).
    pub each_clause_matches: bool,
    /// `W` lies in `g^{0,0}`.
    pub in_levi: bool,
}

fn unipotent_matrices(t: &HodgeTriple, p: &IndexPartition) -> Result<Vec<AlgebraMatrix>> {
    t.unipotent_roots().iter().map(|r| root_matrix(r, p)).collect()
}

/// Computes `W` from matrices and compares it with the bracket's prediction.
pub fn check_bracket(
    p: &IndexPartition,
    t1: &HodgeTriple,
    t2: &HodgeTriple,
    result: &HodgeBracketResult,
) -> Result<BracketCheck> {
    let w = brackets(&unipotent_matrices(t1, p)?, &unipotent_matrices(t2, p)?)?;
    let w_span = SpanBasis::from_matrices(&w);
    let mut predicted = Vec::new();
    let mut each = true;
    for term in &result.terms {
        let u = unipotent_matrices(&term.result, p)?;
        let s = SpanBasis::from_matrices(&u);
        each &= s.rank() == w_span.rank() && w.iter().all(|x| s.contains(x));
        predicted.extend(u);
    }
    let pred_span = SpanBasis::from_matrices(&predicted);
    let sum_matches = pred_span.rank() == w_span.rank() && w.iter().all(|x| pred_span.contains(x));
    let in_levi = w
        .iter()
        .all(|x| x.nonzeros().all(|((r, c), _)| p.position_level(r, c) == 0));
    Ok(BracketCheck {
        commutator_rank: w_span.rank(),
        predicted_rank: pred_span.rank(),
        sum_matches,
        each_clause_matches: each && !result.terms.is_empty(),
        in_levi,
    })
}

/// Restricts a triple to some rows and columns of its negative block.
///
/// `rows` and `cols` are basis indices of the negative block. For the
/// self-mirrored non-standard C block the selection must be symmetric
/// (`rows` the conjugates of `cols`).
pub fn sub_triple(p: &IndexPartition, t: &HodgeTriple, rows: &[usize], cols: &[usize]) -> Result<HodgeTriple> {
    if rows.is_empty() || cols.is_empty() {
        return Err(HodgeError::invalid("a sub-triple needs at least one row and one column"));
    }
    let nb = &t.negative_block;
    for r in rows {
        if !nb.rows.contains(r) {
            return Err(HodgeError::invalid(format!("row {r} is not a row of {}", nb.name)));
        }
    }
    for c in cols {
        if !nb.cols.contains(c) {
            return Err(HodgeError::invalid(format!("column {c} is not a column of {}", nb.name)));
        }
    }
    let mut rows = rows.to_vec();
    let mut cols = cols.to_vec();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let mut out = t.clone();
    out.restricted = rows.len() < nb.rows.len() || cols.len() < nb.cols.len();
    match t.flavor {
        Flavor::NonstandardB => return Ok(out),
        Flavor::NonstandardC => {
            let conj: Vec<usize> = cols.iter().map(|c| c + p.offset).collect();
            if conj != rows {
                return Err(HodgeError::invalid(
                    "a sub-triple of a self-mirrored block needs conjugate row and column sets",
                ));
            }
        }
        _ => {}
    }
    let mut neg = Vec::new();
    for &r in &rows {
        for &c in &cols {
            if p.forced_zero(r, c) {
                continue;
            }
            let w = p.position_weight(r, c);
            if !neg.contains(&w) {
                neg.push(w);
            }
        }
    }
    out.roots_pos = neg.iter().map(Root::neg).collect();
    out.roots_neg = neg;
    out.embedding.size = match t.flavor {
        Flavor::NonstandardC => 2 * cols.len(),
        _ => rows.len() + cols.len(),
    };
    out.positive_block.rows = cols.clone();
    out.positive_block.cols = rows.clone();
    out.negative_block.rows = rows;
    out.negative_block.cols = cols;
    Ok(out)
}

/// Compact dual and real form of the subdomain attached to a triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannianDescriptor {
    pub compact_dual: String,
    pub real_form: String,
    pub dim: usize,
    pub embedding: String,
}

/// Describes the Grassmannian submanifold a triple is tangent to.
pub fn grassmannian_descriptor(p: &IndexPartition, t: &HodgeTriple) -> GrassmannianDescriptor {
    let n = p.weight();
    match t.flavor {
        Flavor::StandardA | Flavor::StandardCB => {
            let s = t.negative_block.rows.len();
            let u = t.negative_block.cols.len();
            let row_label = p.label(t.negative_block.rows[0]);
            let col_label = p.label(t.negative_block.cols[0]);
            let mut plus = 0;
            let mut minus = 0;
            for (label, size) in [(row_label, s), (col_label, u)] {
                match block_sign(n, label) {
                    Sign::Plus => plus += size,
                    Sign::Minus => minus += size,
                }
            }
            GrassmannianDescriptor {
                compact_dual: format!("Gr({s}, C^{})", s + u),
                real_form: format!("SU({plus},{minus})"),
                dim: s * u,
                embedding: t.embedding.to_string(),
            }
        }
        Flavor::NonstandardC => {
            let h = t.embedding.size / 2;
            if p.group_type() == GroupType::C {
                GrassmannianDescriptor {
                    compact_dual: format!("LG({h}, C^{})", 2 * h),
                    real_form: format!("Sp({},R)", 2 * h),
                    dim: h * (h + 1) / 2,
                    embedding: t.embedding.to_string(),
                }
            } else {
                GrassmannianDescriptor {
                    compact_dual: format!("OG({h}, C^{})", 2 * h),
                    real_form: format!("SO*({})", 2 * h),
                    dim: h * h.saturating_sub(1) / 2,
                    embedding: t.embedding.to_string(),
                }
            }
        }
        Flavor::NonstandardB => GrassmannianDescriptor {
            compact_dual: "P^1".to_string(),
            real_form: "so(3) ≅ su(2)".to_string(),
            dim: 1,
            embedding: t.embedding.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basepoint::partition_of;
    use crate::blocks::roots_at_level;
    use crate::hodge::{sweep, HodgeNumbers};
    use crate::roots::{is_commutative, RootSystem};

    fn part(n: usize, half: &[u32]) -> IndexPartition {
        partition_of(&HodgeNumbers::from_half(n, half).unwrap()).unwrap()
    }

    fn names(ts: &TripleSet) -> Vec<String> {
        ts.triples.iter().map(|t| t.name.clone()).collect()
    }

    #[test]
    fn so12_triples() {
        let p = part(4, &[2, 2, 4]);
        let t1 = enumerate_triples(&p, 1).unwrap();
        let h10 = &t1.triples[0];
        assert_eq!(h10.name, "H10");
        assert_eq!(h10.negative_block.name, "A10");
        assert_eq!(h10.positive_block.name, "A01");
        assert_eq!(h10.semisimple, ["A11", "A00"]);
        let t3 = enumerate_triples(&p, 3).unwrap();
        let hc41 = t3.triples.iter().find(|t| t.name == "Hc41").unwrap();
        assert_eq!(hc41.negative_block.name, "C41");
        assert_eq!(hc41.positive_block.name, "B14");
        assert_eq!(hc41.semisimple, ["A00", "A11"]);
        let g = grassmannian_descriptor(&p, h10);
        assert_eq!((g.compact_dual.as_str(), g.real_form.as_str()), ("Gr(2, C^4)", "SU(2,2)"));
    }

    #[test]
    fn sp14_has_one_nonstandard_triple_at_level_one() {
        let p = part(5, &[2, 3, 2]);
        let ts = enumerate_triples(&p, 1).unwrap();
        let non: Vec<_> = ts.triples.iter().filter(|t| t.flavor == Flavor::NonstandardC).collect();
        assert_eq!(non.len(), 1);
        assert_eq!(non[0].labels, (2, 2));
        assert_eq!(non[0].embedding.to_string(), "sp(4)");
        let g = grassmannian_descriptor(&p, non[0]);
        assert_eq!(g.dim, 3);
        assert_eq!(names(&ts), ["H10", "H21", "Hc32"]);
    }

    #[test]
    fn so11_short_roots() {
        let p = part(4, &[2, 2, 3]);
        let ts = enumerate_triples(&p, 1).unwrap();
        let short: Vec<_> = ts.triples.iter().filter(|t| t.flavor == Flavor::NonstandardB).collect();
        assert_eq!(short.len(), 2);
        assert!(short.iter().all(|t| t.embedding.to_string() == "so(3)"));
        assert_eq!(grassmannian_descriptor(&p, short[0]).dim, 1);
        assert_eq!(ts.rejected.len(), 1);
        assert_eq!(ts.rejected[0].embedding.to_string(), "so(5)");
    }

    #[test]
    fn triples_cover_their_level_and_are_abelian() {
        for hn in sweep(6, 3) {
            let p = partition_of(&hn).unwrap();
            let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
            for lvl in 1..=p.weight() as i64 {
                let ts = enumerate_triples(&p, lvl).unwrap();
                let mut covered: Vec<Root> = ts
                    .triples
                    .iter()
                    .flat_map(|t| t.roots_neg.iter().chain(&t.roots_short).cloned())
                    .collect();
                covered.sort();
                let len = covered.len();
                covered.dedup();
                assert_eq!(len, covered.len(), "{hn} p={lvl}: overlapping triples");
                let mut want = roots_at_level(&p, lvl);
                want.sort();
                assert_eq!(covered, want, "{hn} p={lvl}");
                for t in &ts.triples {
                    assert!(is_commutative(&t.roots_neg, &sys).unwrap());
                    assert!(is_commutative(&t.roots_pos, &sys).unwrap());
                }
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let p = part(4, &[2, 2, 4]);
        let h10 = parse_triple(&p, "H10").unwrap();
        let h21 = parse_triple(&p, "H21").unwrap();
        let r = hodge_bracket(&p, &h10, &h21).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[0].result.name, "H20");
        let chk = check_bracket(&p, &h10, &h21, &r).unwrap();
        assert!(chk.sum_matches && chk.each_clause_matches);

        let hc41 = parse_triple(&p, "Hc41").unwrap();
        let r = hodge_bracket(&p, &h10, &hc41).unwrap();
        let outs: Vec<&str> = r.terms.iter().map(|t| t.result.name.as_str()).collect();
        assert_eq!(outs, ["Hc31", "Hc40"]);
        let chk = check_bracket(&p, &h10, &hc41, &r).unwrap();
        assert!(chk.sum_matches);
        assert!(!chk.each_clause_matches);
    }

    #[test]
    fn bracket_without_shared_label_is_zero() {
        let p = part(6, &[1, 1, 1, 2]);
        let h10 = parse_triple(&p, "H10").unwrap();
        let h32 = parse_triple(&p, "H32").unwrap();
        let r = hodge_bracket(&p, &h10, &h32).unwrap();
        assert!(r.terms.is_empty());
        let chk = check_bracket(&p, &h10, &h32, &r).unwrap();
        assert_eq!(chk.commutator_rank, 0);
    }

    #[test]
    fn cc_bracket_same_column_label() {
        // Hc_{i1,j1}, Hc_{i2,j2} with j1 = j2 and i2 < i1 gives H_{n−i1,n−i2}.
        let p = part(5, &[1, 1, 1]);
        let t1 = parse_triple(&p, "Hc52").unwrap();
        let t2 = parse_triple(&p, "Hc42").unwrap();
        let r = hodge_bracket(&p, &t1, &t2).unwrap();
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.terms[0].result.name, "H10");
        assert_eq!(r.terms[0].clause.to_string(), "CxC.4");
        assert!(check_bracket(&p, &t1, &t2, &r).unwrap().each_clause_matches);
    }

    #[test]
    fn self_bracket_lands_in_levi() {
        let p = part(4, &[2, 2, 4]);
        let h = parse_triple(&p, "H21").unwrap();
        let r = hodge_bracket(&p, &h, &h).unwrap();
        assert!(r.terms.is_empty());
        let chk = check_bracket(&p, &h, &h, &r).unwrap();
        assert!(chk.in_levi && chk.commutator_rank > 0);
    }

    #[test]
    fn nonstandard_operands_are_rejected() {
        let p = part(5, &[2, 3, 2]);
        let ts = enumerate_triples(&p, 1).unwrap();
        let non = ts.triples.iter().find(|t| !t.flavor.is_standard()).unwrap();
        assert!(hodge_bracket(&p, non, &ts.triples[0]).is_err());
        let other = part(4, &[2, 2, 4]);
        let h = parse_triple(&other, "H10").unwrap();
        assert!(matches!(
            hodge_bracket(&p, &h, &ts.triples[0]),
            Err(HodgeError::DescriptorMismatch(_))
        ));
    }

    #[test]
    fn sub_triples() {
        let p = part(4, &[2, 2, 4]);
        let h10 = parse_triple(&p, "H10").unwrap();
        let same = sub_triple(&p, &h10, &h10.negative_block.rows, &h10.negative_block.cols).unwrap();
        assert_eq!(same, h10);
        let one = sub_triple(&p, &h10, &[5], &[1, 2]).unwrap();
        assert_eq!(one.embedding.to_string(), "sl(3)");
        assert_eq!(one.roots_neg.len(), 2);
        let tiny = sub_triple(&p, &h10, &[5], &[1]).unwrap();
        assert_eq!((tiny.roots_pos.len(), tiny.embedding.size), (1, 2));
        assert!(sub_triple(&p, &h10, &[], &[1]).is_err());
        assert!(sub_triple(&p, &h10, &[1], &[1]).is_err());
    }

    #[test]
    fn parse_labels() {
        let p = part(4, &[2, 2, 4]);
        assert_eq!(parse_triple(&p, "H1,0").unwrap().name, "H10");
        assert_eq!(parse_triple(&p, "H01").unwrap().name, "H10");
        assert_eq!(parse_triple(&p, "Hc4,1").unwrap().name, "Hc41");
        assert!(parse_triple(&p, "X10").is_err());
        assert!(parse_triple(&p, "H1").is_err());
    }
}
