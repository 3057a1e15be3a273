//! Classical root systems in ε-coordinates.
//!
//! A root is stored as a dense integer vector over ε₁,…,ε_l. The four families
//! use the usual lists: type A on l coordinates has the roots ±(εᵢ−εⱼ); type D
//! has ±εᵢ±εⱼ (i<j); type B adds the short roots ±εᵢ; type C adds the long roots
//! ±2εᵢ. Simple roots are εᵢ−εᵢ₊₁ followed by ε_{l−1}+ε_l (D), ε_l (B) or 2ε_l (C).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HodgeError, Result};

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::C => "C",
            GroupType::D => "D",
        };
        f.write_str(s)
    }
}

/// A root as a coefficient vector over ε₁,…,ε_l.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i8>);

impl Root {
    /// Wraps a coefficient vector. No validation happens here; membership in a
    /// particular system is checked by [`RootSystem::contains`].
    pub fn from_coeffs(coeffs: Vec<i8>) -> Self {
        Root(coeffs)
    }

    /// `s₁·ε_i + s₂·ε_j` on `l` coordinates, with 1-based indices.
    pub fn pair(l: usize, i: usize, si: i8, j: usize, sj: i8) -> Self {
        let mut v = vec![0i8; l];
        v[i - 1] += si;
        v[j - 1] += sj;
        Root(v)
    }

    /// `s·ε_i` on `l` coordinates (a short root of type B, or `±2ε_i` when `s = ±2`).
    pub fn single(l: usize, i: usize, s: i8) -> Self {
        let mut v = vec![0i8; l];
        v[i - 1] = s;
        Root(v)
    }

    /// `ε_i − ε_j`.
    pub fn diff(l: usize, i: usize, j: usize) -> Self {
        Root::pair(l, i, 1, j, -1)
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coefficient-wise sum (not necessarily a root).
    pub fn sum(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The sorted 1-based indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Evaluates the root on a diagonal Cartan element `(h₁,…,h_l)`.
    pub fn eval(&self, h: &[i64]) -> i64 {
        self.0.iter().zip(h).map(|(&c, &x)| c as i64 * x).sum()
    }
}

impl fmt::Display for Root {
    /// ASCII rendering such as `e1-e2`, `-e1-e3`, `2e4`, `-e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A classical root system with its positive and simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub group_type: GroupType,
    /// Number of ε-coordinates (for type A this is one more than the Lie rank).
    pub rank: usize,
    /// All roots, sorted.
    pub all_roots: Vec<Root>,
    /// Positive roots, sorted.
    pub positive: Vec<Root>,
    /// Simple roots in the conventional order.
    pub simple: Vec<Root>,
    #[serde(skip)]
    lookup: BTreeSet<Root>,
}

impl RootSystem {
    /// Builds the system without the rank preconditions of [`build_root_system`].
    /// Degenerate ranks (0, or 1 for type D) give an empty system; they show up
    /// for tiny Hodge numbers such as weight 0.
    pub fn degenerate_ok(group_type: GroupType, rank: usize) -> RootSystem {
        let l = rank;
        let mut positive = Vec::new();
        for i in 1..=l {
            for j in (i + 1)..=l {
                positive.push(Root::diff(l, i, j));
                if group_type != GroupType::A {
                    positive.push(Root::pair(l, i, 1, j, 1));
                }
            }
            match group_type {
                GroupType::B => positive.push(Root::single(l, i, 1)),
                GroupType::C => positive.push(Root::single(l, i, 2)),
                _ => {}
            }
        }
        positive.sort();
        let mut all: Vec<Root> = positive
            .iter()
            .cloned()
            .chain(positive.iter().map(Root::neg))
            .collect();
        all.sort();

        let mut simple: Vec<Root> = (1..l).map(|i| Root::diff(l, i, i + 1)).collect();
        match group_type {
            GroupType::A => {}
            GroupType::B if l >= 1 => simple.push(Root::single(l, l, 1)),
            GroupType::C if l >= 1 => simple.push(Root::single(l, l, 2)),
            GroupType::D if l >= 2 => simple.push(Root::pair(l, l - 1, 1, l, 1)),
            _ => {}
        }
        let lookup = all.iter().cloned().collect();
        RootSystem {
            group_type,
            rank,
            all_roots: all,
            positive,
            simple,
            lookup,
        }
    }

    pub fn contains(&self, r: &Root) -> bool {
        r.rank() == self.rank && self.lookup.contains(r)
    }

    pub(crate) fn require(&self, r: &Root) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(HodgeError::NotARoot {
                root: r.to_string(),
                system: format!("{}{}", self.group_type, self.rank),
            })
        }
    }

    /// Fast variant of [`add_roots`] for roots already known to be members.
    pub fn sum_is_root(&self, a: &Root, b: &Root) -> bool {
        let s = a.sum(b);
        !s.is_zero() && self.lookup.contains(&s)
    }

    /// Two roots "interact" when their root vectors fail to commute: their sum
    /// is a root, or they are opposite (the bracket is then a Cartan element).
    pub fn interact(&self, a: &Root, b: &Root) -> bool {
        let s = a.sum(b);
        s.is_zero() || self.lookup.contains(&s)
    }
}

/// Builds the root system of the given type on `rank` ε-coordinates.
///
/// Requires `rank ≥ 2`; rank 1 is accepted for types A, B and C.
///
/// ```
/// use hodgekit::roots::{build_root_system, GroupType};
/// let c3 = build_root_system(GroupType::C, 3).unwrap();
/// assert_eq!(c3.all_roots.len(), 18);
/// let simple: Vec<String> = c3.simple.iter().map(|r| r.to_string()).collect();
/// assert_eq!(simple, ["e1-e2", "e2-e3", "2e3"]);
/// ```
pub fn build_root_system(group_type: GroupType, rank: usize) -> Result<RootSystem> {
    let ok = match group_type {
        GroupType::D => rank >= 2,
        _ => rank >= 1,
    };
    if !ok {
        return Err(HodgeError::invalid(format!(
            "no root system of type {group_type} on {rank} coordinates"
        )));
    }
    Ok(RootSystem::degenerate_ok(group_type, rank))
}

/// Returns `α + β` when it is again a root, and `None` otherwise.
pub fn add_roots(alpha: &Root, beta: &Root, system: &RootSystem) -> Result<Option<Root>> {
    system.require(alpha)?;
    system.require(beta)?;
    let s = alpha.sum(beta);
    Ok(if !s.is_zero() && system.contains(&s) {
        Some(s)
    } else {
        None
    })
}

/// A set of roots is commutative when no two distinct members add up to a
/// root. Opposite pairs `{α, −α}` are also rejected: their root vectors bracket
/// to a nonzero Cartan element, so the span would not be abelian.
pub fn is_commutative(psi: &[Root], system: &RootSystem) -> Result<bool> {
    for r in psi {
        system.require(r)?;
    }
    Ok(first_interacting_pair(psi, system).is_none())
}

/// The first pair (in index order) whose root vectors do not commute.
pub fn first_interacting_pair(psi: &[Root], system: &RootSystem) -> Option<(usize, usize)> {
    for a in 0..psi.len() {
        for b in (a + 1)..psi.len() {
            if psi[a] != psi[b] && system.interact(&psi[a], &psi[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// True when no root of `left` interacts with a root of `right`.
pub fn cross_commutative(left: &[Root], right: &[Root], system: &RootSystem) -> bool {
    left.iter()
        .all(|a| right.iter().all(|b| a == b || !system.interact(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(l: usize, v: &[i8]) -> Root {
        assert_eq!(v.len(), l);
        Root::from_coeffs(v.to_vec())
    }

    #[test]
    fn d2_has_four_roots() {
        let d2 = build_root_system(GroupType::D, 2).unwrap();
        let got: Vec<String> = d2.all_roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(got, ["-e1-e2", "-e1+e2", "e1-e2", "e1+e2"]);
    }

    #[test]
    fn b1_is_short_roots_only() {
        let b1 = build_root_system(GroupType::B, 1).unwrap();
        assert_eq!(b1.all_roots, vec![r(1, &[-1]), r(1, &[1])]);
        assert_eq!(b1.simple, vec![r(1, &[1])]);
    }

    #[test]
    fn rank_preconditions() {
        assert!(build_root_system(GroupType::D, 1).is_err());
        assert!(build_root_system(GroupType::A, 0).is_err());
        assert!(build_root_system(GroupType::A, 1).unwrap().all_roots.is_empty());
    }

    #[test]
    fn closed_form_counts() {
        for l in 2..=8usize {
            let count = |t| build_root_system(t, l).unwrap().all_roots.len();
            assert_eq!(count(GroupType::A), l * (l - 1));
            assert_eq!(count(GroupType::B), 2 * l * l);
            assert_eq!(count(GroupType::C), 2 * l * l);
            assert_eq!(count(GroupType::D), 2 * l * (l - 1));
        }
    }

    #[test]
    fn add_roots_examples() {
        let d3 = build_root_system(GroupType::D, 3).unwrap();
        let s = add_roots(&r(3, &[-1, 1, 0]), &r(3, &[0, -1, 1]), &d3).unwrap();
        assert_eq!(s, Some(r(3, &[-1, 0, 1])));
        let s = add_roots(&r(3, &[-1, -1, 0]), &r(3, &[-1, 0, 1]), &d3).unwrap();
        assert_eq!(s, None);

        let c2 = build_root_system(GroupType::C, 2).unwrap();
        let s = add_roots(&r(2, &[1, -1]), &r(2, &[1, 1]), &c2).unwrap();
        assert_eq!(s, Some(r(2, &[2, 0])));
        let s = add_roots(&r(2, &[-1, 1]), &r(2, &[-1, -1]), &c2).unwrap();
        assert_eq!(s, Some(r(2, &[-2, 0])));
    }

    #[test]
    fn add_roots_rejects_non_members() {
        let d3 = build_root_system(GroupType::D, 3).unwrap();
        assert!(add_roots(&r(3, &[2, 0, 0]), &r(3, &[0, -1, 1]), &d3).is_err());
    }

    #[test]
    fn commutativity_examples() {
        let d3 = build_root_system(GroupType::D, 3).unwrap();
        assert!(is_commutative(&[], &d3).unwrap());
        assert!(!is_commutative(&[r(3, &[-1, 1, 0]), r(3, &[0, -1, 1])], &d3).unwrap());
        assert!(is_commutative(&[r(3, &[-1, 1, 0]), r(3, &[-1, 0, 1])], &d3).unwrap());
        // Opposite roots do not commute.
        assert!(!is_commutative(&[r(3, &[1, -1, 0]), r(3, &[-1, 1, 0])], &d3).unwrap());
    }

    #[test]
    fn positive_roots_are_nonnegative_in_simple_roots() {
        for t in [GroupType::A, GroupType::B, GroupType::C, GroupType::D] {
            for l in 2..=6 {
                let sys = build_root_system(t, l).unwrap();
                for p in &sys.positive {
                    let c = simple_coordinates(&sys, p);
                    assert!(c.iter().all(|&x| x >= 0), "{t}{l} {p} -> {c:?}");
                }
            }
        }
    }

    /// Solves `p = Σ cᵢ αᵢ` by back substitution; the simple roots are upper
    /// triangular in ε-coordinates up to the last one.
    fn simple_coordinates(sys: &RootSystem, p: &Root) -> Vec<i64> {
        let l = sys.rank;
        let n = sys.simple.len();
        // Partial sums of ε-coefficients determine the coefficients of εᵢ−εᵢ₊₁.
        let v: Vec<i64> = p.coeffs().iter().map(|&c| c as i64).collect();
        let mut c = vec![0i64; n];
        match sys.group_type {
            GroupType::A => {
                let mut acc = 0;
                for i in 0..n {
                    acc += v[i];
                    c[i] = acc;
                }
            }
            GroupType::B | GroupType::C => {
                let last = if sys.group_type == GroupType::B { 1 } else { 2 };
                for i in 0..n - 1 {
                    c[i] = v[..=i].iter().sum::<i64>();
                }
                c[n - 1] = v.iter().sum::<i64>() / last;
            }
            GroupType::D => {
                // α_{l} = ε_{l−1}+ε_l, α_{l−1} = ε_{l−1}−ε_l.
                let total: i64 = v.iter().sum();
                c[n - 1] = total / 2;
                for i in 0..n - 1 {
                    c[i] = v[..=i].iter().sum::<i64>();
                }
                c[n - 2] -= c[n - 1];
            }
        }
        let mut rebuilt = vec![0i64; l];
        for (k, a) in sys.simple.iter().enumerate() {
            for (x, &y) in rebuilt.iter_mut().zip(a.coeffs()) {
                *x += c[k] * y as i64;
            }
        }
        assert_eq!(rebuilt, v, "decomposition failed for {p}");
        c
    }
}
