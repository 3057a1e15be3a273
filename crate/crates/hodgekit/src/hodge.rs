//! From Hodge numbers to flag-domain data and back.
//!
//! A weight-`n` polarized Hodge structure with Hodge numbers `h^{n−i,i}`
//! determines the complex group of isometries of the polarization: symplectic
//! for odd weight, orthogonal for even weight (type B or D according to the
//! parity of `dim V`). We write `f_i = h^{n−i,i}` for `0 ≤ i ≤ m`, where
//! `n = 2m` or `n = 2m + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HodgeError, Result};
use crate::roots::GroupType;

/// Hodge numbers of a weight-`n` Hodge structure; `h[i] = h^{n−i,i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HodgeNumbers {
    weight: usize,
    h: Vec<u32>,
}

impl HodgeNumbers {
    /// Validates the full sequence `h^{n,0},…,h^{0,n}`.
    pub fn new(weight: usize, h: Vec<u32>) -> Result<Self> {
        if h.len() != weight + 1 {
            return Err(HodgeError::invalid(format!(
                "weight {weight} needs {} Hodge numbers, got {}",
                weight + 1,
                h.len()
            )));
        }
        for i in 0..=weight {
            if h[i] != h[weight - i] {
                return Err(HodgeError::invalid(format!(
                    "Hodge numbers are not symmetric: h[{i}] = {} but h[{}] = {}",
                    h[i],
                    weight - i,
                    h[weight - i]
                )));
            }
        }
        if h.iter().all(|&x| x == 0) {
            return Err(HodgeError::invalid("total dimension must be at least 1"));
        }
        Ok(HodgeNumbers { weight, h })
    }

    /// Builds the full sequence from its first half `f_0,…,f_m` by mirroring.
    pub fn from_half(weight: usize, half: &[u32]) -> Result<Self> {
        let m = weight / 2;
        if half.len() != m + 1 {
            return Err(HodgeError::invalid(format!(
                "weight {weight} needs {} leading Hodge numbers f_0..f_{m}, got {}",
                m + 1,
                half.len()
            )));
        }
        let h = (0..=weight)
            .map(|i| half[i.min(weight - i)])
            .collect::<Vec<_>>();
        HodgeNumbers::new(weight, h)
    }

    /// Accepts either the full sequence (length `n+1`) or the half (`m+1`).
    pub fn parse_any(weight: usize, values: &[u32]) -> Result<Self> {
        if values.len() == weight + 1 && weight != 0 {
            HodgeNumbers::new(weight, values.to_vec())
        } else {
            HodgeNumbers::from_half(weight, values)
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `h[i] = h^{n−i,i}`.
    pub fn h(&self) -> &[u32] {
        &self.h
    }

    /// The leading half `f_0,…,f_m`.
    pub fn half(&self) -> &[u32] {
        &self.h[..=self.weight / 2]
    }

    pub fn dim(&self) -> u32 {
        self.h.iter().sum()
    }
}

impl fmt::Display for HodgeNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.h.iter().map(|x| x.to_string()).collect();
        write!(f, "n={} h=({})", self.weight, parts.join(","))
    }
}

/// Sign of the Hermitian form on a Hodge block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
    pub fn parse(c: char) -> Result<Sign> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' | '−' => Ok(Sign::Minus),
            other => Err(HodgeError::invalid(format!("'{other}' is not a sign"))),
        }
    }
}

/// Real group family of the period domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RealFamily {
    SO,
    Sp,
}

/// The real form `SO(p,q)` or `Sp(p,q)` acting on the period domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealForm {
    pub family: RealFamily,
    pub p: u32,
    pub q: u32,
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            RealFamily::SO => "SO",
            RealFamily::Sp => "Sp",
        };
        write!(f, "{fam}({},{})", self.p, self.q)
    }
}

/// Everything the rest of the crate needs to know about a set of Hodge numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodDomainDescriptor {
    pub hodge: HodgeNumbers,
    pub weight: usize,
    pub m: usize,
    pub group_type: GroupType,
    /// Rank `l = ⌊dim V / 2⌋`.
    pub rank: usize,
    pub dim_v: usize,
    /// `f_0,…,f_m`.
    pub f: Vec<u32>,
    /// Block sizes of the Hodge decomposition, gaps included.
    pub dimension_sequence: Vec<u32>,
    /// Sign of the Hermitian form on each block.
    pub signature_sequence: Vec<Sign>,
    /// Σ_{i even} f_i.
    pub a: u32,
    /// Σ_{i odd} f_i.
    pub b: u32,
    pub real_form: RealForm,
}

impl PeriodDomainDescriptor {
    /// Complex dimension of the Lie algebra `g`.
    pub fn dim_g(&self) -> usize {
        let l = self.rank;
        match self.group_type {
            GroupType::D => l * (2 * l).saturating_sub(1),
            GroupType::B | GroupType::C => l * (2 * l + 1),
            GroupType::A => l * l - 1,
        }
    }

    /// The complex group acting on the flag manifold, e.g. `SO(20,C)`.
    pub fn complex_group(&self) -> String {
        let fam = match self.real_form.family {
            RealFamily::SO => "SO",
            RealFamily::Sp => "Sp",
        };
        format!("{fam}({},C)", self.dim_v)
    }

    /// A short stable key such as `n4:2,2,3,2,2`.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.hodge.h().iter().map(|x| x.to_string()).collect();
        format!("n{}:{}", self.weight, parts.join(","))
    }

    /// The dimension sequence with gap entries removed, for display.
    pub fn display_sequence(&self) -> Vec<u32> {
        self.dimension_sequence
            .iter()
            .copied()
            .filter(|&x| x != 0)
            .collect()
    }
}

/// Sign of block `i` under the parity convention of the given weight.
pub fn block_sign(weight: usize, i: usize) -> Sign {
    let even_block = i % 2 == 0;
    if weight % 2 == 0 {
        if even_block {
            Sign::Plus
        } else {
            Sign::Minus
        }
    } else if even_block {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Computes the flag-domain data of a set of Hodge numbers.
///
/// ```
/// use hodgekit::hodge::{describe, HodgeNumbers};
/// use hodgekit::roots::GroupType;
/// let hn = HodgeNumbers::from_half(8, &[2, 3, 2, 1, 4]).unwrap();
/// let d = describe(&hn).unwrap();
/// assert_eq!(d.group_type, GroupType::D);
/// assert_eq!(d.rank, 10);
/// assert_eq!(d.real_form.to_string(), "SO(12,8)");
/// ```
pub fn describe(hn: &HodgeNumbers) -> Result<PeriodDomainDescriptor> {
    let n = hn.weight();
    let m = n / 2;
    let h = hn.h();
    let f: Vec<u32> = h[..=m].to_vec();
    let dim_v = hn.dim() as usize;
    let group_type = if n % 2 == 1 {
        GroupType::C
    } else if dim_v % 2 == 0 {
        GroupType::D
    } else {
        GroupType::B
    };
    if n % 2 == 1 && dim_v % 2 == 1 {
        // Impossible for a symmetric odd-weight sequence; kept as a guard.
        return Err(HodgeError::invalid("odd weight with odd total dimension"));
    }
    let rank = dim_v / 2;
    let a: u32 = f.iter().step_by(2).sum();
    let b: u32 = f.iter().skip(1).step_by(2).sum();
    let fm = f[m];
    let real_form = if n % 2 == 1 {
        RealForm {
            family: RealFamily::Sp,
            p: a + b,
            q: b + a,
        }
    } else if m % 2 == 0 {
        RealForm {
            family: RealFamily::SO,
            p: 2 * a - fm,
            q: 2 * b,
        }
    } else {
        RealForm {
            family: RealFamily::SO,
            p: 2 * a,
            q: 2 * b - fm,
        }
    };
    let signature_sequence = (0..=n).map(|i| block_sign(n, i)).collect();
    Ok(PeriodDomainDescriptor {
        hodge: hn.clone(),
        weight: n,
        m,
        group_type,
        rank,
        dim_v,
        f,
        dimension_sequence: h.to_vec(),
        signature_sequence,
        a,
        b,
        real_form,
    })
}

/// Recovers Hodge numbers from a sequence of block sizes with one sign per
/// block, inserting zero-width blocks wherever two consecutive blocks carry
/// the same sign.
///
/// The weight is the length of the resulting sequence minus one. Every entry of
/// `dims` must be positive; the first sign must match the parity convention of
/// the resulting weight (`+` for even, `−` for odd weight), and the padded
/// sequence must be symmetric.
///
/// ```
/// use hodgekit::hodge::{virtual_sequence, Sign::{Plus, Minus}};
/// let hn = virtual_sequence(&[1, 1], &[Minus, Plus]).unwrap();
/// assert_eq!((hn.weight(), hn.h()), (1, &[1, 1][..]));
/// let gap = virtual_sequence(&[2, 2], &[Plus, Plus]).unwrap();
/// assert_eq!((gap.weight(), gap.h()), (2, &[2, 0, 2][..]));
/// ```
pub fn virtual_sequence(dims: &[u32], signs: &[Sign]) -> Result<HodgeNumbers> {
    if dims.is_empty() {
        return Err(HodgeError::invalid("empty dimension sequence"));
    }
    if dims.len() != signs.len() {
        return Err(HodgeError::invalid(format!(
            "{} blocks but {} signs",
            dims.len(),
            signs.len()
        )));
    }
    if let Some(i) = dims.iter().position(|&d| d == 0) {
        return Err(HodgeError::invalid(format!(
            "block {i} has size 0; gaps are produced by the sign pattern, not given explicitly"
        )));
    }
    let mut out = vec![dims[0]];
    for i in 1..dims.len() {
        if signs[i] == signs[i - 1] {
            out.push(0);
        }
        out.push(dims[i]);
    }
    let weight = out.len() - 1;
    if signs[0] != block_sign(weight, 0) {
        return Err(HodgeError::invalid(format!(
            "first block has sign {} but weight {weight} requires {}",
            signs[0].as_char(),
            block_sign(weight, 0).as_char()
        )));
    }
    HodgeNumbers::new(weight, out).map_err(|e| {
        HodgeError::invalid(format!("sign pattern is incompatible with any weight: {e}"))
    })
}

/// All Hodge numbers with `weight ≤ max_weight` and every `f_i ≤ max_h`,
/// in canonical order (by weight, then lexicographically by `f`).
pub fn sweep(max_weight: usize, max_h: u32) -> Vec<HodgeNumbers> {
    let mut out = Vec::new();
    for n in 0..=max_weight {
        let m = n / 2;
        let count = (max_h as usize + 1).pow((m + 1) as u32);
        for code in 0..count {
            let mut rest = code;
            let mut half = vec![0u32; m + 1];
            for x in half.iter_mut().rev() {
                *x = (rest % (max_h as usize + 1)) as u32;
                rest /= max_h as usize + 1;
            }
            if let Ok(hn) = HodgeNumbers::from_half(n, &half) {
                out.push(hn);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, half: &[u32]) -> PeriodDomainDescriptor {
        describe(&HodgeNumbers::from_half(n, half).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let so20 = d(8, &[2, 3, 2, 1, 4]);
        assert_eq!(so20.group_type, GroupType::D);
        assert_eq!(so20.rank, 10);
        assert_eq!(so20.real_form.to_string(), "SO(12,8)");
        assert_eq!(so20.dimension_sequence, vec![2, 3, 2, 1, 4, 1, 2, 3, 2]);

        let sp = d(5, &[2, 3, 2]);
        assert_eq!(sp.group_type, GroupType::C);
        assert_eq!(sp.rank, 7);
        assert_eq!(sp.real_form.to_string(), "Sp(7,7)");
        assert_eq!(sp.dimension_sequence, vec![2, 3, 2, 2, 3, 2]);

        let so11 = d(4, &[2, 2, 3]);
        assert_eq!(so11.group_type, GroupType::B);
        assert_eq!(so11.rank, 5);
        assert_eq!(so11.real_form.to_string(), "SO(7,4)");

        let so12 = d(4, &[2, 2, 4]);
        assert_eq!(so12.group_type, GroupType::D);
        assert_eq!(so12.real_form.to_string(), "SO(8,4)");
    }

    #[test]
    fn input_validation() {
        assert!(HodgeNumbers::new(2, vec![1, 2, 3]).is_err());
        assert!(HodgeNumbers::new(2, vec![1, 2]).is_err());
        assert!(HodgeNumbers::new(1, vec![0, 0]).is_err());
        assert!(HodgeNumbers::from_half(3, &[1]).is_err());
        assert_eq!(
            HodgeNumbers::parse_any(3, &[1, 2, 2, 1]).unwrap(),
            HodgeNumbers::parse_any(3, &[1, 2]).unwrap()
        );
    }

    #[test]
    fn weight_zero_is_trivial() {
        let t = d(0, &[1]);
        assert_eq!(t.group_type, GroupType::B);
        assert_eq!(t.rank, 0);
        assert_eq!(t.dim_g(), 0);
        let t = d(0, &[2]);
        assert_eq!(t.group_type, GroupType::D);
        assert_eq!(t.real_form.to_string(), "SO(2,0)");
    }

    #[test]
    fn virtual_sequence_examples() {
        use Sign::*;
        let signs: Vec<Sign> = (0..9).map(|i| block_sign(8, i)).collect();
        let hn = virtual_sequence(&[2, 3, 2, 1, 4, 1, 2, 3, 2], &signs).unwrap();
        assert_eq!(hn, HodgeNumbers::from_half(8, &[2, 3, 2, 1, 4]).unwrap());
        let hn = virtual_sequence(&[1, 1], &[Minus, Plus]).unwrap();
        assert_eq!((hn.weight(), hn.h().to_vec()), (1, vec![1, 1]));
        // Hand execution: (+,+) inserts one zero block between the two blocks.
        let hn = virtual_sequence(&[2, 2], &[Plus, Plus]).unwrap();
        assert_eq!((hn.weight(), hn.h().to_vec()), (2, vec![2, 0, 2]));
    }

    #[test]
    fn virtual_sequence_errors() {
        use Sign::*;
        // Weight 1 would need the first block negative.
        assert!(virtual_sequence(&[1, 1], &[Plus, Minus]).is_err());
        // Not symmetric after padding.
        assert!(virtual_sequence(&[1, 2], &[Minus, Plus]).is_err());
        assert!(virtual_sequence(&[1, 0, 1], &[Plus, Minus, Plus]).is_err());
        assert!(virtual_sequence(&[1], &[]).is_err());
    }

    #[test]
    fn sweep_counts() {
        let s = sweep(2, 1);
        // n=0: (1); n=1: (1); n=2: (0,1),(1,0),(1,1).
        assert_eq!(s.len(), 5);
        assert!(sweep(7, 3).len() >= 200);
    }
}
