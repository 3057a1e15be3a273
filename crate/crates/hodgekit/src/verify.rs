//! Sweep-wide consistency checks.
//!
//! Every check compares a combinatorial statement with an independent
//! computation (matrix commutators, exhaustive search). Checks are either
//! invariants, which must always hold, or findings, which compare the printed
//! formulas and tables with the oracle; a failed finding is a genuine
//! discrepancy that is reported, never masked.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{
    brute_force_max_commutative, build_abelian_from_path, enumerate_paths, gpp_abelian_grouping,
    max_abelian_dimension, relaxed_path_max,
};
use crate::basepoint::{build_partition, IndexPartition};
use crate::blocks::{block_grid, dim_g11, dim_gpp, graded_piece, roots_at_level, BlockKind};
use crate::hodge::{describe, sweep, HodgeNumbers};
use crate::matrixrep::{is_graded, root_matrix, span_is_abelian, verify_block};
use crate::roots::{cross_commutative, is_commutative, GroupType, Root, RootSystem};
use crate::triples::{check_bracket, enumerate_triples, hodge_bracket, Flavor, HodgeTriple};

/// Largest `dim g^{-1,1}` for which the exhaustive abelian oracle runs.
pub const DOMINANCE_LIMIT: usize = 16;
/// Largest root set compared against the matrix commutator oracle.
pub const ORACLE_SET_LIMIT: usize = 12;
/// Counterexamples kept per check.
pub const SAMPLE_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Invariant,
    Finding,
}

macro_rules! checks {
    ($($id:ident => ($key:literal, $kind:ident, $title:literal)),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum Check { $($id),* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$id),*];

            pub fn key(self) -> &'static str {
                match self { $(Check::$id => $key),* }
            }

            pub fn kind(self) -> CheckKind {
                match self { $(Check::$id => CheckKind::$kind),* }
            }

            pub fn title(self) -> &'static str {
                match self { $(Check::$id => $title),* }
            }
        }
    };
}

checks! {
    Partition => ("partition", Invariant, "the index partition exhausts the basis and spans are disjoint"),
    LevelSum => ("levels.sum", Invariant, "Σ_p dim g^{-p,p} = dim g"),
    BlockMatrices => ("blocks.matrix", Invariant, "every block is spanned by graded root vectors of g"),
    GradedAction => ("graded.action", Invariant, "a level-p root vector maps span_of(j) into span_of(j+p)"),
    DimG11 => ("dim.g11", Invariant, "closed-form dim g^{-1,1} = entry count"),
    DimGppOdd => ("dim.gpp.odd", Invariant, "type D: closed-form dim g^{-p,p} = entry count for odd p"),
    DimGppEven => ("dim.gpp.even", Finding, "type D: closed-form dim g^{-p,p} = entry count for even p"),
    RootOracle => ("roots.oracle", Invariant, "is_commutative agrees with matrix commutators"),
    UnipotentBlocks => ("lemma.unipotent", Invariant, "A, B, C blocks and triple radicals are commutative"),
    TripleCoverage => ("triples.coverage", Invariant, "triples at level p cover the roots of g^{-p,p} exactly once"),
    Pairwise => ("lemma.pairwise", Finding, "pairwise commutativity ⇔ disjointness index condition"),
    BracketParity => ("bracket.parity", Invariant, "brackets of odd-level triples land at even level"),
    BracketSpan => ("bracket.span", Invariant, "the bracket outputs span exactly the matrix commutators"),
    BracketClause => ("bracket.clause", Finding, "each firing clause alone equals the commutator span"),
    PathAbelian => ("abelian.paths", Invariant, "every path subspace is commutative and matrix-abelian"),
    PathDominance => ("abelian.dominance", Finding, "exhaustive maximum = maximum over Hodge paths"),
    RelaxedDominance => ("abelian.relaxed", Invariant, "exhaustive maximum = relaxed path maximum"),
    DimensionFormula => ("abelian.formula", Finding, "dimension function (d_k = f_k) = path maximum"),
    Grouping => ("grouping.chains", Invariant, "chains of an odd-level grouping commute with each other"),
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Pass count and counterexamples of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub kind: CheckKind,
    pub title: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub samples: Vec<String>,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_weight: usize,
    pub max_h: u32,
    pub descriptors: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn outcome(&self, check: Check) -> &CheckOutcome {
        self.checks
            .iter()
            .find(|c| c.check == check.key())
            .expect("every check is reported")
    }

    pub fn invariants_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Invariant)
            .all(CheckOutcome::ok)
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(CheckOutcome::ok)
    }
}

/// Results of one descriptor, indexed like [`Check::ALL`].
#[derive(Debug, Clone)]
pub struct Tally {
    passed: Vec<usize>,
    failures: Vec<Vec<String>>,
}

impl Default for Tally {
    fn default() -> Self {
        Tally {
            passed: vec![0; Check::ALL.len()],
            failures: vec![Vec::new(); Check::ALL.len()],
        }
    }
}

impl Tally {
    fn record(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        let i = check as usize;
        if ok {
            self.passed[i] += 1;
        } else {
            self.failures[i].push(detail());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..Check::ALL.len() {
            self.passed[i] += other.passed[i];
            self.failures[i].extend(other.failures[i].iter().cloned());
        }
        self
    }
}

/// Runs every check on one Hodge structure.
pub fn check_descriptor(hn: &HodgeNumbers) -> Tally {
    let mut t = Tally::default();
    let d = match describe(hn) {
        Ok(d) => d,
        Err(e) => {
            t.record(Check::Partition, false, || format!("{hn}: {e}"));
            return t;
        }
    };
    let p = build_partition(&d);
    let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
    structure_checks(hn, &p, &mut t);
    dimension_checks(hn, &d, &p, &mut t);
    triple_checks(hn, &p, &sys, &mut t);
    abelian_checks(hn, &d, &p, &sys, &mut t);
    t
}

fn structure_checks(hn: &HodgeNumbers, p: &IndexPartition, t: &mut Tally) {
    let mut all: Vec<usize> = p.parts.iter().flat_map(|(_, v)| v.iter().copied()).collect();
    all.sort_unstable();
    let exhaust = all == (1..=p.dim_v()).collect::<Vec<_>>();
    t.record(Check::Partition, exhaust, || format!("{hn}: parts {:?}", p.parts));

    let n = p.weight() as i64;
    let total: usize = (-n..=n).map(|l| graded_piece(p, l).dim).sum();
    let dim_g = p.descriptor.dim_g();
    t.record(Check::LevelSum, total == dim_g, || format!("{hn}: Σ = {total}, dim g = {dim_g}"));

    let grid = block_grid(p);
    for b in &grid {
        let mirror = b.mirror.map(|i| &grid[i]);
        let ok = verify_block(b, mirror, p).map(|r| r.pass).unwrap_or(false);
        t.record(Check::BlockMatrices, ok, || format!("{hn}: block {}", b.name));
    }

    for (_, root) in p.all_root_positions() {
        let ok = match (p.root_position(&root), root_matrix(&root, p)) {
            (Ok((r, c)), Ok(x)) => is_graded(&x, p.position_level(r, c), p),
            _ => false,
        };
        t.record(Check::GradedAction, ok, || format!("{hn}: root {root}"));
    }
}

fn dimension_checks(hn: &HodgeNumbers, d: &crate::hodge::PeriodDomainDescriptor, p: &IndexPartition, t: &mut Tally) {
    let count = graded_piece(p, 1).dim;
    let formula = dim_g11(d);
    t.record(Check::DimG11, count == formula, || format!("{hn}: formula {formula}, count {count}"));
    if d.group_type != GroupType::D {
        return;
    }
    for lvl in 1..=d.weight as i64 {
        let Some(v) = dim_gpp(d, lvl) else { continue };
        let count = graded_piece(p, lvl).dim as u64;
        let ok = v.0 == 2 * count;
        let check = if lvl % 2 == 1 { Check::DimGppOdd } else { Check::DimGppEven };
        t.record(check, ok, || format!("{hn} p={lvl}: formula {v}, count {count}"));
    }
}

fn oracle_compare(roots: &[Root], p: &IndexPartition, sys: &RootSystem) -> bool {
    if roots.len() > ORACLE_SET_LIMIT {
        return true;
    }
    let combinatorial = crate::roots::first_interacting_pair(roots, sys).is_none();
    span_is_abelian(roots, p) == Ok(combinatorial)
}

fn standard_triples(p: &IndexPartition) -> Vec<HodgeTriple> {
    (1..=p.weight() as i64)
        .flat_map(|l| enumerate_triples(p, l).map(|s| s.triples).unwrap_or_default())
        .filter(|t| t.flavor.is_standard())
        .collect()
}

/// The disjointness condition on the labels of two standard triples.
///
/// * two `A`-triples commute when neither's row label is the other's column
///   label;
/// * a `C`-block and a `B`-block commute when their label sets are disjoint;
/// * an `A`-triple and a `C/B`-triple commute when their label sets are
///   disjoint.
pub fn index_condition(t1: &HodgeTriple, t2: &HodgeTriple) -> bool {
    match (t1.flavor, t2.flavor) {
        (Flavor::StandardA, Flavor::StandardA) => {
            let ((i1, j1), (i2, j2)) = (t1.labels, t2.labels);
            i1 != j2 && j1 != i2
        }
        _ => t1.label_set().iter().all(|x| !t2.label_set().contains(x)),
    }
}

/// The parts of two standard triples compared by [`index_condition`].
pub fn commutativity_parts(t1: &HodgeTriple, t2: &HodgeTriple) -> (Vec<Root>, Vec<Root>) {
    match (t1.flavor, t2.flavor) {
        (Flavor::StandardA, Flavor::StandardA) => (t1.roots_neg.clone(), t2.roots_neg.clone()),
        (Flavor::StandardCB, Flavor::StandardCB) => (t1.roots_neg.clone(), t2.roots_pos.clone()),
        (Flavor::StandardA, _) => (t1.roots_neg.clone(), t2.unipotent_roots()),
        _ => (t1.unipotent_roots(), t2.roots_neg.clone()),
    }
}

fn triple_checks(hn: &HodgeNumbers, p: &IndexPartition, sys: &RootSystem, t: &mut Tally) {
    for b in block_grid(p) {
        if b.level == 0 || !matches!(b.kind, BlockKind::A | BlockKind::B | BlockKind::C) {
            continue;
        }
        let roots: Vec<Root> = p
            .all_root_positions()
            .into_iter()
            .filter(|((r, c), _)| b.contains(*r, *c))
            .map(|(_, root)| root)
            .collect();
        let ok = is_commutative(&roots, sys).unwrap_or(false);
        t.record(Check::UnipotentBlocks, ok, || format!("{hn}: block {}", b.name));
        t.record(Check::RootOracle, oracle_compare(&roots, p, sys), || {
            format!("{hn}: block {}", b.name)
        });
    }
    for lvl in 1..=p.weight() as i64 {
        let Ok(set) = enumerate_triples(p, lvl) else {
            t.record(Check::TripleCoverage, false, || format!("{hn} p={lvl}: enumeration failed"));
            continue;
        };
        let mut covered: Vec<Root> = set
            .triples
            .iter()
            .flat_map(|x| x.roots_neg.iter().chain(&x.roots_short).cloned())
            .collect();
        covered.sort();
        let mut want = roots_at_level(p, lvl);
        want.sort();
        t.record(Check::TripleCoverage, covered == want, || format!("{hn} p={lvl}"));
        for x in &set.triples {
            let ok = is_commutative(&x.roots_neg, sys).unwrap_or(false)
                && is_commutative(&x.roots_pos, sys).unwrap_or(false);
            t.record(Check::UnipotentBlocks, ok, || format!("{hn}: triple {}", x.name));
        }
    }

    let std = standard_triples(p);
    for (a, t1) in std.iter().enumerate() {
        for t2 in &std[a..] {
            if a < std.len() && !std::ptr::eq(t1, t2) {
                let (l, r) = commutativity_parts(t1, t2);
                let actual = cross_commutative(&l, &r, sys);
                let predicted = index_condition(t1, t2);
                t.record(Check::Pairwise, actual == predicted, || {
                    format!(
                        "{hn}: {} vs {}: condition {predicted}, commutators vanish {actual}",
                        t1.name, t2.name
                    )
                });
            }
            let Ok(result) = hodge_bracket(p, t1, t2) else { continue };
            if t1.level % 2 == 1 && t2.level % 2 == 1 {
                let ok = result.terms.iter().all(|x| x.result.level % 2 == 0);
                t.record(Check::BracketParity, ok, || format!("{hn}: [{}, {}]", t1.name, t2.name));
            }
            let Ok(chk) = check_bracket(p, t1, t2, &result) else {
                t.record(Check::BracketSpan, false, || format!("{hn}: [{}, {}] oracle", t1.name, t2.name));
                continue;
            };
            let same = std::ptr::eq(t1, t2);
            t.record(Check::BracketSpan, chk.sum_matches || (same && chk.in_levi), || {
                format!(
                    "{hn}: [{}, {}] commutator rank {}, predicted {}",
                    t1.name, t2.name, chk.commutator_rank, chk.predicted_rank
                )
            });
            if !result.terms.is_empty() {
                let names: Vec<String> = result
                    .terms
                    .iter()
                    .map(|x| format!("{} ({})", x.result.name, x.clause))
                    .collect();
                t.record(Check::BracketClause, chk.each_clause_matches, || {
                    format!("{hn}: [{}, {}] = {}", t1.name, t2.name, names.join(" + "))
                });
            }
        }
    }
}

fn abelian_checks(
    hn: &HodgeNumbers,
    d: &crate::hodge::PeriodDomainDescriptor,
    p: &IndexPartition,
    sys: &RootSystem,
    t: &mut Tally,
) {
    for lvl in (1..=p.weight() as i64).step_by(2) {
        if let Ok(g) = gpp_abelian_grouping(p, lvl) {
            let ok = g
                .chains
                .iter()
                .enumerate()
                .all(|(i, a)| g.chains[i + 1..].iter().all(|b| cross_commutative(&a.roots, &b.roots, sys)));
            t.record(Check::Grouping, ok, || format!("{hn} p={lvl}"));
        }
    }
    if roots_at_level(p, 1).len() > DOMINANCE_LIMIT {
        return;
    }
    let mut best = 0;
    for path in enumerate_paths(p) {
        let ok = match build_abelian_from_path(p, &path) {
            Ok(a) => {
                best = best.max(a.dim);
                is_commutative(&a.roots, sys).unwrap_or(false) && span_is_abelian(&a.roots, p).unwrap_or(false)
            }
            Err(_) => false,
        };
        t.record(Check::PathAbelian, ok, || format!("{hn}: path {:?}", path.sequence));
    }
    let Ok(brute) = brute_force_max_commutative(p) else { return };
    t.record(Check::PathDominance, brute.max == best, || {
        format!("{hn} ({}): exhaustive {}, paths {best}", d.group_type, brute.max)
    });
    let relaxed = relaxed_path_max(p);
    t.record(Check::RelaxedDominance, brute.max == relaxed, || {
        format!("{hn}: exhaustive {}, relaxed {relaxed}", brute.max)
    });
    if let Ok(mx) = max_abelian_dimension(d) {
        if let Some(f) = &mx.formula {
            t.record(Check::DimensionFormula, mx.formula_agrees, || {
                format!("{hn}: formula {} at {:?}, paths {}", f.value, f.argmax, mx.value)
            });
        }
    }
}

/// Runs [`check_descriptor`] over [`sweep`]`(max_weight, max_h)` in parallel;
/// counterexamples appear in sweep order.
pub fn verify_sweep(max_weight: usize, max_h: u32) -> VerifyReport {
    let all = sweep(max_weight, max_h);
    let tallies: Vec<Tally> = all.par_iter().map(check_descriptor).collect();
    let total = tallies.into_iter().fold(Tally::default(), Tally::merge);
    let checks = Check::ALL
        .iter()
        .map(|&c| {
            let i = c as usize;
            CheckOutcome {
                check: c.key(),
                kind: c.kind(),
                title: c.title(),
                passed: total.passed[i],
                failed: total.failures[i].len(),
                samples: total.failures[i].iter().take(SAMPLE_LIMIT).cloned().collect(),
            }
        })
        .collect();
    VerifyReport {
        max_weight,
        max_h,
        descriptors: all.len(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_invariants_hold() {
        let r = verify_sweep(4, 2);
        for c in &r.checks {
            if c.kind == CheckKind::Invariant {
                assert!(c.ok(), "{}: {:?}", c.check, c.samples);
            }
        }
        assert!(r.descriptors > 30);
    }

    #[test]
    fn index_condition_examples() {
        let p = crate::basepoint::partition_of(&HodgeNumbers::from_half(4, &[2, 2, 4]).unwrap()).unwrap();
        let h10 = crate::triples::parse_triple(&p, "H10").unwrap();
        let h21 = crate::triples::parse_triple(&p, "H21").unwrap();
        let h20 = crate::triples::parse_triple(&p, "H20").unwrap();
        assert!(!index_condition(&h10, &h21));
        assert!(index_condition(&h10, &h20));
    }
}
