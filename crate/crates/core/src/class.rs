//! Restricted partition families and their membership predicates.

use std::fmt;
use std::str::FromStr;

use crate::partition::Partition;
use crate::sizes::PartSizeSet;

/// A multiplicity bound: part sizes may occur strictly fewer than this many
/// times. `Infinite` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mult {
    Finite(u64),
    Infinite,
}

impl Mult {
    pub fn allows(&self, multiplicity: u64) -> bool {
        match *self {
            Mult::Finite(a) => multiplicity < a,
            Mult::Infinite => true,
        }
    }

    pub fn as_option(&self) -> Option<u64> {
        match *self {
            Mult::Finite(a) => Some(a),
            Mult::Infinite => None,
        }
    }
}

/// A parameterized descriptor of a restricted partition family.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassSpec {
    Unrestricted,
    /// Part size i occurs strictly fewer than a_i times; sizes beyond the
    /// list are unbounded.
    AndrewsBound(Vec<Mult>),
    /// Parts drawn from the set, each occurring strictly fewer than `bound`
    /// times.
    PartsIn { set: PartSizeSet, bound: Mult },
    Distinct,
    Odd,
    OddDistinct,
    /// Odd parts with multiplicities < 2^r.
    GlaisherO(u32),
    /// Distinct parts not divisible by 2^r.
    GlaisherD(u32),
    /// Nonnegative r-th differences, r ≥ 2.
    Convex(u32),
    /// Consecutive parts at least d apart (so parts are distinct for d ≥ 1);
    /// `forbid_size_one` additionally excludes parts of size 1.
    MinDiff { d: u64, forbid_size_one: bool },
    /// No parts differ by exactly 1, and no parts of size 1.
    RomikA,
    /// No part has multiplicity 1.
    RomikB,
    /// Parts ≡ 0 or ℓ (mod k); parts differ by at least k; parts ≡ ℓ (mod k)
    /// differ by at least 2k. Requires 1 ≤ ℓ < k.
    LebesgueL { ell: u64, k: u64 },
    /// Consecutive parts differ by at least 2, and consecutive odd parts
    /// differ by at least 4 (the ℓ = 1, k = 2 case of `LebesgueL`; the
    /// smallest part is unconstrained).
    LebesgueSimple,
    SelfConjugate,
    /// Distinct parts congruent to 0, 1, or 2 modulo 4.
    DistinctMod4In012,
    /// Parts are perfect r-th powers, each with multiplicity < m^r.
    StantonA { r: u32, m: u64 },
    /// Parts are perfect r-th powers not divisible by m^r.
    StantonB { r: u32, m: u64 },
    /// Even parts, largest part ≤ 2k.
    EvenBoundedLargest(u64),
    /// Even parts, at most k parts.
    EvenBoundedCount(u64),
}

impl ClassSpec {
    pub fn member(&self, p: &Partition) -> bool {
        let parts = p.parts(); // descending
        match self {
            ClassSpec::Unrestricted => true,
            ClassSpec::AndrewsBound(bounds) => p.to_multiplicities().iter().all(|(size, mult)| {
                match bounds.get((size - 1) as usize) {
                    Some(b) => b.allows(mult),
                    None => true,
                }
            }),
            ClassSpec::PartsIn { set, bound } => p
                .to_multiplicities()
                .iter()
                .all(|(size, mult)| set.contains(size) && bound.allows(mult)),
            ClassSpec::Distinct => parts.windows(2).all(|w| w[0] > w[1]),
            ClassSpec::Odd => parts.iter().all(|&x| x % 2 == 1),
            ClassSpec::OddDistinct => {
                ClassSpec::Odd.member(p) && ClassSpec::Distinct.member(p)
            }
            ClassSpec::GlaisherO(r) => {
                let bound = 1u64 << r;
                ClassSpec::Odd.member(p)
                    && p.to_multiplicities().iter().all(|(_, m)| m < bound)
            }
            ClassSpec::GlaisherD(r) => {
                let divisor = 1u64 << r;
                ClassSpec::Distinct.member(p) && parts.iter().all(|&x| x % divisor != 0)
            }
            ClassSpec::Convex(r) => {
                assert!(*r >= 2, "convexity is defined for r >= 2");
                (1..=parts.len()).all(|i| rec_difference(parts, i, *r) >= 0)
            }
            ClassSpec::MinDiff { d, forbid_size_one } => {
                let gaps_ok = parts.windows(2).all(|w| w[0] - w[1] >= *d);
                let smallest_ok = !forbid_size_one || parts.last().map_or(true, |&x| x >= 2);
                gaps_ok && smallest_ok
            }
            ClassSpec::RomikA => {
                parts.last().map_or(true, |&x| x >= 2)
                    && parts.windows(2).all(|w| w[0] - w[1] != 1)
            }
            ClassSpec::RomikB => p.to_multiplicities().iter().all(|(_, m)| m != 1),
            ClassSpec::LebesgueL { ell, k } => {
                assert!(*ell >= 1 && ell < k);
                parts.iter().all(|&x| x % k == 0 || x % k == *ell)
                    && parts.windows(2).all(|w| {
                        let gap = w[0] - w[1];
                        let both_ell = w[0] % k == *ell && w[1] % k == *ell;
                        gap >= if both_ell { 2 * k } else { *k }
                    })
            }
            ClassSpec::LebesgueSimple => parts.windows(2).all(|w| {
                // Consecutive gaps are ≥ 2, and ≥ 4 when both parts are odd.
                let need = if w[0] % 2 == 1 && w[1] % 2 == 1 { 4 } else { 2 };
                w[0] >= w[1] + need
            }),
            ClassSpec::SelfConjugate => p.conjugate() == *p,
            ClassSpec::DistinctMod4In012 => {
                ClassSpec::Distinct.member(p) && parts.iter().all(|&x| x % 4 != 3)
            }
            ClassSpec::StantonA { r, m } => {
                let m_r = m.pow(*r);
                parts.iter().all(|&x| is_perfect_power(x, *r))
                    && p.to_multiplicities().iter().all(|(_, mult)| mult < m_r)
            }
            ClassSpec::StantonB { r, m } => {
                let m_r = m.pow(*r);
                parts
                    .iter()
                    .all(|&x| is_perfect_power(x, *r) && x % m_r != 0)
            }
            ClassSpec::EvenBoundedLargest(k) => {
                parts.iter().all(|&x| x % 2 == 0) && parts.first().map_or(true, |&x| x <= 2 * k)
            }
            ClassSpec::EvenBoundedCount(k) => {
                parts.iter().all(|&x| x % 2 == 0) && parts.len() as u64 <= *k
            }
        }
    }
}

/// Is x a perfect r-th power? Exact integer check.
pub fn is_perfect_power(x: u64, r: u32) -> bool {
    rth_root(x, r).is_some()
}

/// The integer r-th root of x, if x is a perfect r-th power.
pub fn rth_root(x: u64, r: u32) -> Option<u64> {
    if r == 1 {
        return Some(x);
    }
    let guess = (x as f64).powf(1.0 / r as f64).round() as u64;
    for k in guess.saturating_sub(1)..=guess + 1 {
        if k.checked_pow(r) == Some(x) {
            return Some(k);
        }
    }
    None
}

/// △_i^k(λ): λ_i when i = ℓ or k = 0, else △_i^{k−1} − △_{i+1}^{k−1}.
/// 1-indexed i; i must be ≤ ℓ.
pub fn rec_difference(parts: &[u64], i: usize, k: u32) -> i64 {
    if i == parts.len() || k == 0 {
        parts[i - 1] as i64
    } else {
        rec_difference(parts, i, k - 1) - rec_difference(parts, i + 1, k - 1)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Unrestricted => write!(f, "unrestricted"),
            ClassSpec::AndrewsBound(bounds) => {
                write!(f, "andrews:")?;
                for (i, b) in bounds.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    match b {
                        Mult::Finite(a) => write!(f, "{a}")?,
                        Mult::Infinite => write!(f, "inf")?,
                    }
                }
                Ok(())
            }
            ClassSpec::PartsIn { set, bound } => {
                match set {
                    PartSizeSet::Poly(c) => {
                        write!(f, "poly:")?;
                        for (i, x) in c.iter().enumerate() {
                            if i > 0 {
                                write!(f, ",")?;
                            }
                            write!(f, "{x}")?;
                        }
                    }
                    PartSizeSet::Explicit(v) => {
                        write!(f, "set:")?;
                        for (i, x) in v.iter().enumerate() {
                            if i > 0 {
                                write!(f, ",")?;
                            }
                            write!(f, "{x}")?;
                        }
                    }
                }
                match bound {
                    Mult::Finite(a) => write!(f, ":{a}"),
                    Mult::Infinite => Ok(()),
                }
            }
            ClassSpec::Distinct => write!(f, "distinct"),
            ClassSpec::Odd => write!(f, "odd"),
            ClassSpec::OddDistinct => write!(f, "odd-distinct"),
            ClassSpec::GlaisherO(r) => write!(f, "glaisher-o:{r}"),
            ClassSpec::GlaisherD(r) => write!(f, "glaisher-d:{r}"),
            ClassSpec::Convex(r) => write!(f, "convex:{r}"),
            ClassSpec::MinDiff { d, forbid_size_one } => {
                if *forbid_size_one {
                    write!(f, "mindiff:{d}:no1")
                } else {
                    write!(f, "mindiff:{d}")
                }
            }
            ClassSpec::RomikA => write!(f, "romik-a"),
            ClassSpec::RomikB => write!(f, "romik-b"),
            ClassSpec::LebesgueL { ell, k } => write!(f, "lebesgue:{ell}:{k}"),
            ClassSpec::LebesgueSimple => write!(f, "lebesgue"),
            ClassSpec::SelfConjugate => write!(f, "self-conjugate"),
            ClassSpec::DistinctMod4In012 => write!(f, "distinct-mod4-012"),
            ClassSpec::StantonA { r, m } => write!(f, "stanton-a:{r}:{m}"),
            ClassSpec::StantonB { r, m } => write!(f, "stanton-b:{r}:{m}"),
            ClassSpec::EvenBoundedLargest(k) => write!(f, "even-largest:{k}"),
            ClassSpec::EvenBoundedCount(k) => write!(f, "even-count:{k}"),
        }
    }
}

impl FromStr for ClassSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<ClassSpec, String> {
        let toks: Vec<&str> = s.split(':').collect();
        let parse_u = |t: &str| t.parse::<u64>().map_err(|e| format!("{s}: {e}"));
        let parse_r = |t: &str| t.parse::<u32>().map_err(|e| format!("{s}: {e}"));
        match toks.as_slice() {
            ["unrestricted"] => Ok(ClassSpec::Unrestricted),
            ["distinct"] => Ok(ClassSpec::Distinct),
            ["odd"] => Ok(ClassSpec::Odd),
            ["odd-distinct"] => Ok(ClassSpec::OddDistinct),
            ["glaisher-o", r] => Ok(ClassSpec::GlaisherO(parse_r(r)?)),
            ["glaisher-d", r] => Ok(ClassSpec::GlaisherD(parse_r(r)?)),
            ["convex", r] => Ok(ClassSpec::Convex(parse_r(r)?)),
            ["mindiff", d] => Ok(ClassSpec::MinDiff {
                d: parse_u(d)?,
                forbid_size_one: false,
            }),
            ["mindiff", d, "no1"] => Ok(ClassSpec::MinDiff {
                d: parse_u(d)?,
                forbid_size_one: true,
            }),
            ["romik-a"] => Ok(ClassSpec::RomikA),
            ["romik-b"] => Ok(ClassSpec::RomikB),
            ["lebesgue"] => Ok(ClassSpec::LebesgueSimple),
            ["lebesgue", ell, k] => Ok(ClassSpec::LebesgueL {
                ell: parse_u(ell)?,
                k: parse_u(k)?,
            }),
            ["self-conjugate"] => Ok(ClassSpec::SelfConjugate),
            ["stanton-a", r, m] => Ok(ClassSpec::StantonA {
                r: parse_r(r)?,
                m: parse_u(m)?,
            }),
            ["stanton-b", r, m] => Ok(ClassSpec::StantonB {
                r: parse_r(r)?,
                m: parse_u(m)?,
            }),
            ["distinct-mod4-012"] => Ok(ClassSpec::DistinctMod4In012),
            ["even-largest", k] => Ok(ClassSpec::EvenBoundedLargest(parse_u(k)?)),
            ["even-count", k] => Ok(ClassSpec::EvenBoundedCount(parse_u(k)?)),
            ["triangular"] => Ok(ClassSpec::PartsIn {
                set: PartSizeSet::triangular(),
                bound: Mult::Infinite,
            }),
            ["binom", r] => Ok(ClassSpec::PartsIn {
                set: PartSizeSet::binomial(parse_r(r)?),
                bound: Mult::Infinite,
            }),
            ["andrews", list] => {
                let bounds = list
                    .split(',')
                    .map(|t| {
                        if t == "inf" {
                            Ok(Mult::Infinite)
                        } else {
                            parse_u(t).map(Mult::Finite)
                        }
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                Ok(ClassSpec::AndrewsBound(bounds))
            }
            ["poly", coeffs] | ["poly", coeffs, _] => {
                let c = coeffs
                    .split(',')
                    .map(|t| t.parse::<f64>().map_err(|e| format!("{s}: {e}")))
                    .collect::<Result<Vec<_>, String>>()?;
                let bound = match toks.get(2) {
                    Some(&b) => Mult::Finite(parse_u(b)?),
                    None => Mult::Infinite,
                };
                Ok(ClassSpec::PartsIn {
                    set: PartSizeSet::Poly(c),
                    bound,
                })
            }
            ["set", list] | ["set", list, _] => {
                let v = list
                    .split(',')
                    .map(|t| parse_u(t))
                    .collect::<Result<Vec<_>, String>>()?;
                let bound = match toks.get(2) {
                    Some(&b) => Mult::Finite(parse_u(b)?),
                    None => Mult::Infinite,
                };
                Ok(ClassSpec::PartsIn {
                    set: PartSizeSet::explicit(v)?,
                    bound,
                })
            }
            _ => Err(format!("unknown class spec: {s}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn convex_membership() {
        assert!(ClassSpec::Convex(2).member(&p(&[4, 1])));
        assert!(!ClassSpec::Convex(2).member(&p(&[3, 2])));
        assert!(ClassSpec::Convex(2).member(&Partition::empty()));
        assert!(ClassSpec::Convex(2).member(&p(&[5])));
    }

    #[test]
    fn convex2_matches_difference_chain() {
        // λ₁−λ₂ ≥ λ₂−λ₃ ≥ … ≥ λ_ℓ > 0 checked directly.
        let brute = |parts: &[u64]| -> bool {
            let mut diffs: Vec<i64> = parts
                .windows(2)
                .map(|w| w[0] as i64 - w[1] as i64)
                .collect();
            diffs.push(*parts.last().unwrap() as i64);
            diffs.windows(2).all(|w| w[0] >= w[1])
        };
        for parts in [
            vec![4, 1],
            vec![3, 2],
            vec![9, 4, 1],
            vec![6, 4, 2],
            vec![7, 3, 1],
            vec![5, 3, 2, 1],
        ] {
            let q = p(&parts);
            assert_eq!(ClassSpec::Convex(2).member(&q), brute(&parts), "{q}");
        }
    }

    #[test]
    fn romik_classes() {
        assert!(!ClassSpec::RomikB.member(&p(&[5, 2, 2])));
        assert!(ClassSpec::RomikB.member(&p(&[3, 3, 1, 1])));
        assert!(ClassSpec::RomikA.member(&p(&[5, 3, 3])));
        assert!(!ClassSpec::RomikA.member(&p(&[4, 3])));
        assert!(!ClassSpec::RomikA.member(&p(&[2, 1])));
        assert!(!ClassSpec::RomikA.member(&p(&[1])));
    }

    #[test]
    fn self_conjugate() {
        assert!(ClassSpec::SelfConjugate.member(&p(&[4, 3, 2, 1])));
        assert!(ClassSpec::SelfConjugate.member(&p(&[2, 2])));
        assert!(!ClassSpec::SelfConjugate.member(&p(&[3, 1])));
    }

    #[test]
    fn lebesgue_simple() {
        // 6,4: gap 2, not both odd → ok. 7,5: both odd, gap 2 → no.
        assert!(ClassSpec::LebesgueSimple.member(&p(&[6, 4])));
        assert!(!ClassSpec::LebesgueSimple.member(&p(&[7, 5])));
        assert!(ClassSpec::LebesgueSimple.member(&p(&[7, 4])));
        assert!(ClassSpec::LebesgueSimple.member(&p(&[7, 3])));
        assert!(ClassSpec::LebesgueSimple.member(&p(&[1])));
        assert!(!ClassSpec::LebesgueSimple.member(&p(&[2, 2])));
    }

    #[test]
    fn glaisher_classes() {
        assert!(ClassSpec::GlaisherO(2).member(&p(&[3, 3, 3, 1])));
        assert!(!ClassSpec::GlaisherO(1).member(&p(&[3, 3])));
        assert!(ClassSpec::GlaisherD(2).member(&p(&[6, 3, 1])));
        assert!(!ClassSpec::GlaisherD(2).member(&p(&[4, 1])));
    }

    #[test]
    fn parts_in_and_andrews() {
        let tri = ClassSpec::PartsIn {
            set: PartSizeSet::triangular(),
            bound: Mult::Infinite,
        };
        assert!(tri.member(&p(&[6, 3, 1, 1])));
        assert!(!tri.member(&p(&[4])));
        // Distinct as Andrews bounds (2,2,2,…) truncated: sizes past the list
        // are unbounded, so keep the list long enough for the test input.
        let a = ClassSpec::AndrewsBound(vec![Mult::Finite(2); 10]);
        assert!(a.member(&p(&[5, 3, 1])));
        assert!(!a.member(&p(&[3, 3])));
    }

    #[test]
    fn parse_roundtrip() {
        for s in [
            "unrestricted",
            "distinct",
            "odd-distinct",
            "convex:2",
            "glaisher-o:3",
            "mindiff:2:no1",
            "lebesgue",
            "lebesgue:1:3",
            "self-conjugate",
            "distinct-mod4-012",
            "even-largest:4",
        ] {
            let c: ClassSpec = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
            assert_eq!(c.to_string().parse::<ClassSpec>().unwrap(), c);
        }
        assert!("bogus".parse::<ClassSpec>().is_err());
    }
}
