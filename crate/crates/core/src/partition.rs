//! Partitions and their multiplicity view.
//!
//! A partition is stored as a descending list of positive parts; the
//! multiplicity view is a sparse map from part size to count. Both are
//! first-class and conversions are O(parts).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A partition of a nonnegative integer: parts listed in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Partition, String> {
        if parts.iter().any(|&p| p == 0) {
            return Err("partition parts must be positive".into());
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// |λ|, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_multiplicities(&self) -> MultiplicityVector {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0u64) += 1;
        }
        MultiplicityVector { counts }
    }

    /// The conjugate partition: λ'_i = #{j : λ_j ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        if let Some(&largest) = self.parts.first() {
            parts.reserve(largest as usize);
            for i in 1..=largest {
                let count = self.parts.iter().take_while(|&&p| p >= i).count();
                parts.push(count as u64);
            }
        }
        Partition { parts }
    }

    /// Side of the largest square fitting inside the Young diagram:
    /// max{i : λ_i ≥ i}, or 0 for the empty partition.
    pub fn durfee(&self) -> usize {
        let mut d = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p >= (i + 1) as u64 {
                d = i + 1;
            } else {
                break;
            }
        }
        d
    }

    /// The diagram function D_λ(t) = number of parts of size ≥ t, t > 0.
    pub fn diagram(&self, t: f64) -> u64 {
        assert!(t > 0.0, "diagram is defined for t > 0");
        let threshold = t.ceil() as u64;
        self.parts.iter().take_while(|&&p| p >= threshold).count() as u64
    }

    /// The α-scaled diagram (α/n)·D_λ(α·t) evaluated on a grid.
    ///
    /// `n` is normally `self.size()`, but callers running ensemble
    /// experiments may scale by the target size instead.
    pub fn scaled_diagram(&self, n: u64, alpha: f64, grid: &[f64]) -> Result<Vec<f64>, String> {
        if grid.is_empty() {
            return Err("scaled_diagram: empty grid".into());
        }
        assert!(alpha > 0.0 && n > 0);
        let scale = alpha / n as f64;
        Ok(grid
            .iter()
            .map(|&t| scale * self.diagram(alpha * t) as f64)
            .collect())
    }
}

impl fmt::Display for Partition {
    /// Canonical text form: comma-separated descending parts, e.g. "4,3,1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Partition, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<u64>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// Sparse map part size → multiplicity; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityVector {
    counts: BTreeMap<u64, u64>,
}

impl MultiplicityVector {
    pub fn new() -> MultiplicityVector {
        MultiplicityVector::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> MultiplicityVector {
        let mut m = MultiplicityVector::new();
        for (size, count) in pairs {
            m.add(size, count);
        }
        m
    }

    pub fn get(&self, size: u64) -> u64 {
        self.counts.get(&size).copied().unwrap_or(0)
    }

    pub fn add(&mut self, size: u64, count: u64) {
        assert!(size > 0, "part sizes are positive");
        if count > 0 {
            *self.counts.entry(size).or_insert(0) += count;
        }
    }

    pub fn set(&mut self, size: u64, count: u64) {
        assert!(size > 0, "part sizes are positive");
        if count == 0 {
            self.counts.remove(&size);
        } else {
            self.counts.insert(size, count);
        }
    }

    /// Iterates (size, multiplicity) pairs, sizes ascending.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    /// Σ i·m_i, the size of the corresponding partition.
    pub fn weight(&self) -> u64 {
        self.counts.iter().map(|(&s, &c)| s * c).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&size, &count) in self.counts.iter().rev() {
            for _ in 0..count {
                parts.push(size);
            }
        }
        Partition { parts }
    }
}

impl From<&Partition> for MultiplicityVector {
    fn from(p: &Partition) -> MultiplicityVector {
        p.to_multiplicities()
    }
}
