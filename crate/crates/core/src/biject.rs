//! Linear partition bijections: the MM/MP engine with exact rational
//! coefficients, the named bijections (Glaisher, O'Hara, Stanton, r-th
//! differences, principal hooks, bounded-even), and validators for the
//! structural and stability conditions.

use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::class::{rth_root, ClassSpec, Mult};
use crate::enumerate::enumerate_all;
use crate::numerics::integrate_to_inf;
use crate::partition::{MultiplicityVector, Partition};
use crate::shape::{bounded_cmr, const_d};
use crate::sizes::PartSizeSet;

/// Whether the linear map sends multiplicities to multiplicities or to parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Mm,
    Mp,
}

/// The image of a linear bijection: a partition given by its parts (MP) or by
/// its multiplicities (MM).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Parts(Partition),
    Mults(MultiplicityVector),
}

impl Image {
    pub fn into_partition(self) -> Partition {
        match self {
            Image::Parts(p) => p,
            Image::Mults(m) => m.to_partition(),
        }
    }
}

/// A sparse infinite matrix given by a column generator, together with the
/// domain and codomain classes and an optional stability setup.
#[derive(Clone)]
pub struct LinearMapSpec {
    pub name: &'static str,
    pub kind: MapKind,
    pub domain: ClassSpec,
    pub codomain: ClassSpec,
    /// Nonzero entries (i, v(i,j)) of column j, for j up to `working_bound`.
    column: Arc<dyn Fn(u64) -> Vec<(u64, Rational64)> + Send + Sync>,
    pub working_bound: u64,
    pub stability: Option<StabilitySetup>,
}

impl LinearMapSpec {
    pub fn column(&self, j: u64) -> Vec<(u64, Rational64)> {
        assert!(
            j >= 1 && j <= self.working_bound,
            "column {j} outside working bound {}",
            self.working_bound
        );
        (self.column)(j)
    }
}

/// Applies the linear map to a multiplicity vector, with exact arithmetic.
pub fn apply(spec: &LinearMapSpec, m: &MultiplicityVector) -> Result<Image, String> {
    let p = m.to_partition();
    if !spec.domain.member(&p) {
        return Err(format!("{p} is not in the domain {}", spec.domain));
    }
    let mut acc: std::collections::BTreeMap<u64, Rational64> = Default::default();
    for (j, mult) in m.iter() {
        let mult = Rational64::from_integer(mult as i64);
        for (i, v) in spec.column(j) {
            *acc.entry(i).or_insert_with(Rational64::zero) += v * mult;
        }
    }
    let mut counts = Vec::new();
    for (i, value) in acc {
        if value.is_zero() {
            continue;
        }
        if !value.is_integer() || value < Rational64::zero() {
            return Err(format!("image component at {i} is {value}, not a nonnegative integer"));
        }
        counts.push((i, value.to_integer() as u64));
    }
    match spec.kind {
        // MP: the accumulated value at row i is the i-th part of the image.
        MapKind::Mp => {
            let mut parts: Vec<u64> = counts.into_iter().map(|(_, v)| v).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Ok(Image::Parts(Partition::new(parts)?))
        }
        MapKind::Mm => Ok(Image::Mults(MultiplicityVector::from_pairs(counts))),
    }
}

/// Report of the structural checks on a spec.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub name: String,
    pub pass: bool,
    pub first_violation: Option<String>,
    pub columns_checked: u64,
    pub exhaustive_max: u64,
}

/// Verifies the column-sum (MP) or eigenvector (MM) identity for all columns
/// up to `nmax`, then size preservation and bijectivity by exhaustion over
/// every n ≤ min(nmax, 40).
pub fn validate_structure(spec: &LinearMapSpec, nmax: u64) -> Result<StructureReport, String> {
    if nmax > 2000 {
        return Err("nmax exceeds 2000".into());
    }
    let mut violation: Option<String> = None;
    for j in 1..=nmax {
        let col = spec.column(j);
        let singleton = Partition::new(vec![j]).unwrap();
        let in_u = spec.domain.member(&singleton);
        let weighted: Rational64 = match spec.kind {
            MapKind::Mp => col.iter().map(|&(_, v)| v).sum(),
            MapKind::Mm => col
                .iter()
                .map(|&(i, v)| v * Rational64::from_integer(i as i64))
                .sum(),
        };
        let expected = if in_u {
            Rational64::from_integer(j as i64)
        } else {
            Rational64::zero()
        };
        if weighted != expected {
            violation = Some(format!(
                "column {j}: weighted sum {weighted}, expected {expected}"
            ));
            break;
        }
        if !in_u && !col.is_empty() {
            violation = Some(format!("column {j} nonzero outside the part-size set"));
            break;
        }
    }
    let exhaustive_max = nmax.min(40);
    if violation.is_none() {
        let check_n = |n: u64| -> Option<String> {
            let domain = enumerate_all(&spec.domain, n).ok()?;
            let codomain = enumerate_all(&spec.codomain, n).ok()?;
            let mut images = Vec::with_capacity(domain.len());
            for p in &domain {
                let img = match apply(spec, &p.to_multiplicities()) {
                    Ok(img) => img.into_partition(),
                    Err(e) => return Some(format!("n={n}: apply({p}) failed: {e}")),
                };
                if img.size() != n {
                    return Some(format!("n={n}: image of {p} has size {}", img.size()));
                }
                if !spec.codomain.member(&img) {
                    return Some(format!("n={n}: image {img} of {p} outside codomain"));
                }
                images.push(img);
            }
            images.sort();
            images.dedup();
            if images.len() != domain.len() {
                return Some(format!("n={n}: images collide"));
            }
            if domain.len() != codomain.len() {
                return Some(format!(
                    "n={n}: |domain| = {} but |codomain| = {}",
                    domain.len(),
                    codomain.len()
                ));
            }
            None
        };
        #[cfg(feature = "parallel")]
        let found = (0..=exhaustive_max)
            .into_par_iter()
            .filter_map(check_n)
            .min();
        #[cfg(not(feature = "parallel"))]
        let found = (0..=exhaustive_max).filter_map(check_n).min();
        violation = found;
    }
    Ok(StructureReport {
        name: spec.name.to_string(),
        pass: violation.is_none(),
        first_violation: violation,
        columns_checked: nmax,
        exhaustive_max,
    })
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

/// How the discrete coefficients are compared against the scaling-limit
/// kernel: MP rows are Riemann sums against β^{r−1}·∫K(t,y,φ(y))dy; MM rows
/// are plain row sums against the kernel's own series.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum KernelForm {
    MpIntegral,
    MmRowSum,
}

/// Everything needed to evaluate the stability ratio of a spec numerically.
#[derive(Clone)]
pub struct StabilitySetup {
    pub r: u32,
    pub big_b: f64,
    /// Scaling-limit density φ(y) of the domain class.
    density: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    /// Coefficient v(i, u_k) as a float.
    v_row: Arc<dyn Fn(u64, u64) -> f64 + Send + Sync>,
    /// Part size u_k.
    u_of: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
    /// Largest k included in the discrete sum at size n.
    k_max: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
    /// Continuum reference: β-free limit of the normalized row at t.
    reference: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub form: KernelForm,
    /// MM rows that are identically zero at even indices (Glaisher) are
    /// sampled at the nearest odd row instead.
    pub round_row_to_odd: bool,
}

/// Ratio table of discrete row evaluations to the kernel limit.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub name: String,
    pub n_list: Vec<u64>,
    pub t_grid: Vec<f64>,
    /// deviations[i][j] = |ratio − 1| at n_list[i], t_grid[j].
    pub deviations: Vec<Vec<f64>>,
    pub pass: bool,
}

/// Records the stability ratios of Eq-style row sums for each n and t; passes
/// when the deviation shrinks along `n_list` at every grid point.
pub fn check_stability(
    spec: &LinearMapSpec,
    n_list: &[u64],
    t_grid: &[f64],
) -> Result<StabilityReport, String> {
    let setup = spec
        .stability
        .as_ref()
        .ok_or_else(|| format!("{}: no stability kernel registered", spec.name))?;
    let r = setup.r as f64;
    let mut deviations = Vec::new();
    for &n in n_list {
        let alpha = (n as f64).powf(r / (1.0 + r));
        let beta = (n as f64).powf(1.0 / (1.0 + r));
        let mut row = Vec::new();
        for &t in t_grid {
            let mut i = (beta * t).ceil() as u64;
            if setup.round_row_to_odd && i % 2 == 0 {
                i += 1;
            }
            let kmax = (setup.k_max)(n);
            let y = |k: u64| ((setup.u_of)(k) as f64 / (setup.big_b * alpha)).powf(1.0 / r);
            let mut lhs = 0.0;
            for k in 1..=kmax {
                let v = (setup.v_row)(i, k);
                if v == 0.0 {
                    continue;
                }
                let weight = match setup.form {
                    KernelForm::MpIntegral => y(k + 1) - y(k),
                    KernelForm::MmRowSum => 1.0,
                };
                lhs += v * (setup.density)(y(k)) * weight;
            }
            // The row lives at ⌈βt⌉/β, not t; comparing the MP Riemann sum
            // against the kernel at the row's own position removes the
            // rounding sawtooth and leaves the smooth O(1/β) bias.
            let (scale, t_ref) = match setup.form {
                KernelForm::MpIntegral => (beta.powi(setup.r as i32 - 1), i as f64 / beta),
                KernelForm::MmRowSum => (1.0, t),
            };
            let ratio = lhs / (scale * (setup.reference)(t_ref));
            row.push((ratio - 1.0).abs());
        }
        deviations.push(row);
    }
    let mut pass = true;
    for j in 0..t_grid.len() {
        for i in 1..n_list.len() {
            if deviations[i][j] >= deviations[i - 1][j] {
                pass = false;
            }
        }
        if let Some(last) = deviations.last() {
            if last[j] >= 0.05 {
                pass = false;
            }
        }
    }
    Ok(StabilityReport {
        name: spec.name.to_string(),
        n_list: n_list.to_vec(),
        t_grid: t_grid.to_vec(),
        deviations,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Registered specs
// ---------------------------------------------------------------------------

/// Glaisher's map as an MM matrix: v(i, i·2^s) = 2^s for odd i.
pub fn glaisher_spec() -> LinearMapSpec {
    let d = const_d(1.0, 1.0, Some(2));
    let psi = move |y: f64| {
        let q = (-d * y).exp();
        q / (1.0 + q)
    };
    let reference = move |t: f64| {
        let mut total = 0.0;
        let mut k = 0u32;
        loop {
            let term = 2f64.powi(k as i32) * psi(2f64.powi(k as i32) * t);
            total += term;
            if term < 1e-14 || k > 200 {
                break;
            }
            k += 1;
        }
        total
    };
    LinearMapSpec {
        name: "glaisher",
        kind: MapKind::Mm,
        domain: ClassSpec::Distinct,
        codomain: ClassSpec::Odd,
        column: Arc::new(|j: u64| {
            let s = j.trailing_zeros();
            vec![(
                j >> s,
                Rational64::from_integer(1i64 << s),
            )]
        }),
        working_bound: 1 << 40,
        stability: Some(StabilitySetup {
            r: 1,
            big_b: 1.0,
            density: Arc::new(psi),
            v_row: Arc::new(|i: u64, k: u64| {
                // Row i odd, column j = k: nonzero when k = i·2^s.
                if k % i == 0 && (k / i).is_power_of_two() {
                    (k / i) as f64
                } else {
                    0.0
                }
            }),
            u_of: Arc::new(|k| k),
            k_max: Arc::new(|n| {
                // Enough columns to exhaust the geometric tail of ψ.
                40 * (n as f64).sqrt().ceil() as u64
            }),
            reference: Arc::new(reference),
            form: KernelForm::MmRowSum,
            round_row_to_odd: true,
        }),
    }
}

/// The r-th-difference map as an MP matrix on binomial part sizes
/// u_k = binom(r−1+k, r): v(i, u_k) = binom(r−1+k−i, r−1) for 1 ≤ i ≤ k.
pub fn convex_spec(r: u32) -> LinearMapSpec {
    assert!(r >= 2);
    let sizes = PartSizeSet::binomial(r);
    let stability = (r == 2).then(|| {
        let c = const_d(2.0, 0.5, None);
        let phi = move |y: f64| {
            let q = (-c * y * y / 2.0).exp();
            q / (1.0 - q)
        };
        StabilitySetup {
            r: 2,
            big_b: 0.5,
            density: Arc::new(phi),
            v_row: Arc::new(|i: u64, k: u64| {
                if k >= i {
                    (k - i + 1) as f64
                } else {
                    0.0
                }
            }),
            u_of: Arc::new(|k| k * (k + 1) / 2),
            k_max: Arc::new(|n| 8 * (n as f64).powf(1.0 / 3.0).ceil() as u64),
            reference: Arc::new(move |t: f64| {
                integrate_to_inf(&|y: f64| (y - t).max(0.0) * phi(y), t, 1.0, 1e-10)
            }),
            form: KernelForm::MpIntegral,
            round_row_to_odd: false,
        }
    });
    LinearMapSpec {
        name: "rthdiff",
        kind: MapKind::Mp,
        domain: ClassSpec::PartsIn {
            set: sizes.clone(),
            bound: Mult::Infinite,
        },
        codomain: ClassSpec::Convex(r),
        column: Arc::new(move |j: u64| {
            // Find k with u_k = j, if any.
            let mut k = 1u64;
            loop {
                let u = sizes.value(k);
                if u == j {
                    return (1..=k)
                        .map(|i| {
                            (i, Rational64::from_integer(binom(r as u64 - 1 + k - i, r as u64 - 1)))
                        })
                        .collect();
                }
                if u > j {
                    return Vec::new();
                }
                k += 1;
            }
        }),
        working_bound: 10_000_000,
        stability,
    }
}

/// Stanton's map as an MM matrix: v(k^r, (k·m^s)^r) = m^{sr} for m ∤ k.
pub fn stanton_spec(r: u32, m: u64) -> LinearMapSpec {
    assert!(r >= 1 && m >= 2);
    let name: &'static str = "stanton";
    LinearMapSpec {
        name,
        kind: MapKind::Mm,
        domain: ClassSpec::StantonA { r, m },
        codomain: ClassSpec::StantonB { r, m },
        column: Arc::new(move |j: u64| match rth_root(j, r) {
            Some(x) => {
                let (k, s) = split_power(x, m);
                vec![(
                    k.pow(r),
                    Rational64::from_integer(m.pow(r * s) as i64),
                )]
            }
            None => Vec::new(),
        }),
        working_bound: 1 << 40,
        stability: None,
    }
}

/// The bounded-even map as an MP matrix: v(i, j) = 2 for even j ≥ 2i,
/// restricted to largest part 2k in the domain.
pub fn even_parts_spec(k: u64) -> LinearMapSpec {
    let b = 2.0; // stability check uses k = b·√n with b = 2
    let c = bounded_cmr(2, 1, b);
    let phi = move |y: f64| {
        let q = (-2.0 * c * y).exp();
        q / (1.0 - q)
    };
    LinearMapSpec {
        name: "evenparts",
        kind: MapKind::Mp,
        domain: ClassSpec::EvenBoundedLargest(k),
        codomain: ClassSpec::EvenBoundedCount(k),
        column: Arc::new(move |j: u64| {
            if j % 2 == 0 && j <= 2 * k {
                (1..=j / 2)
                    .map(|i| (i, Rational64::from_integer(2)))
                    .collect()
            } else {
                Vec::new()
            }
        }),
        working_bound: 10_000_000,
        stability: Some(StabilitySetup {
            r: 1,
            big_b: 2.0,
            density: Arc::new(phi),
            v_row: Arc::new(|i: u64, k: u64| if k >= i { 2.0 } else { 0.0 }),
            u_of: Arc::new(|k| 2 * k),
            k_max: Arc::new(move |n| (b * (n as f64).sqrt()).floor() as u64),
            reference: Arc::new(move |t: f64| {
                crate::numerics::integrate(&|y: f64| 2.0 * phi(y), t, b, 1e-10)
            }),
            form: KernelForm::MpIntegral,
            round_row_to_odd: false,
        }),
    }
}

fn binom(n: u64, k: u64) -> i64 {
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// x = k·m^s with m ∤ k; returns (k, s).
fn split_power(mut x: u64, m: u64) -> (u64, u32) {
    let mut s = 0;
    while x % m == 0 {
        x /= m;
        s += 1;
    }
    (x, s)
}

// ---------------------------------------------------------------------------
// Named bijections, partition level
// ---------------------------------------------------------------------------

/// Glaisher forward: each part i·2^s (i odd) becomes 2^s parts of size i.
pub fn glaisher(p: &Partition) -> Result<Partition, String> {
    if !ClassSpec::Distinct.member(p) {
        return Err(format!("{p} is not a partition into distinct parts"));
    }
    Ok(apply(&glaisher_spec(), &p.to_multiplicities())?.into_partition())
}

/// Glaisher inverse: multiplicity of odd i, written in binary, spreads into
/// distinct parts i·2^s.
pub fn glaisher_inv(p: &Partition) -> Result<Partition, String> {
    if !ClassSpec::Odd.member(p) {
        return Err(format!("{p} is not a partition into odd parts"));
    }
    let mut parts = Vec::new();
    for (i, mult) in p.to_multiplicities().iter() {
        let mut s = 0u32;
        let mut rest = mult;
        while rest > 0 {
            if rest & 1 == 1 {
                parts.push(i << s);
            }
            rest >>= 1;
            s += 1;
        }
    }
    Partition::new(parts)
}

/// One O'Hara step: every even part 2m+2 splits into two parts m+1.
pub fn ohara_step(m: &MultiplicityVector) -> MultiplicityVector {
    let mut next = MultiplicityVector::new();
    for (size, count) in m.iter() {
        if size % 2 == 0 {
            next.add(size / 2, 2 * count);
        } else {
            next.add(size, count);
        }
    }
    next
}

/// Iterates O'Hara steps until every part is odd.
pub fn ohara_fixpoint(m: &MultiplicityVector) -> MultiplicityVector {
    let mut cur = m.clone();
    while cur.iter().any(|(size, _)| size % 2 == 0) {
        cur = ohara_step(&cur);
    }
    cur
}

/// Stanton forward: each part (k·m^s)^r with m ∤ k becomes m^{sr} parts of
/// size k^r.
pub fn stanton(r: u32, m: u64, p: &Partition) -> Result<Partition, String> {
    assert!(r >= 1 && m >= 2);
    let mut parts = Vec::new();
    for &part in p.parts() {
        let x = rth_root(part, r).ok_or_else(|| format!("part {part} is not an r-th power"))?;
        let (k, s) = split_power(x, m);
        let copies = m.pow(r * s);
        for _ in 0..copies {
            parts.push(k.pow(r));
        }
    }
    Partition::new(parts)
}

/// Stanton inverse: multiplicity of k^r (m ∤ k) written in base m^r spreads
/// into parts (k·m^s)^r.
pub fn stanton_inv(r: u32, m: u64, p: &Partition) -> Result<Partition, String> {
    assert!(r >= 1 && m >= 2);
    if !(ClassSpec::StantonB { r, m }).member(p) {
        return Err(format!("{p} is not in the Stanton codomain (r={r}, m={m})"));
    }
    let base = m.pow(r);
    let mut parts = Vec::new();
    for (size, mult) in p.to_multiplicities().iter() {
        let k = rth_root(size, r).unwrap();
        let mut rest = mult;
        let mut s = 0u32;
        while rest > 0 {
            let digit = rest % base;
            for _ in 0..digit {
                parts.push((k * m.pow(s)).pow(r));
            }
            rest /= base;
            s += 1;
        }
    }
    Partition::new(parts)
}

/// r-th-difference forward: μ_i = Σ_{j≥i} binom(r−1+j−i, r−1)·m_j, where m_j
/// is the multiplicity of the binomial part size u_j.
pub fn rth_diff_forward(r: u32, m: &MultiplicityVector) -> Result<Partition, String> {
    Ok(apply(&convex_spec(r), m)?.into_partition())
}

/// r-th-difference inverse: recursive differences of the padded part list;
/// m_j = Σ_s (−1)^s binom(r,s) μ_{j+s} must be nonnegative.
pub fn rth_diff_inverse(r: u32, p: &Partition) -> Result<MultiplicityVector, String> {
    assert!(r >= 2);
    if !ClassSpec::Convex(r).member(p) {
        return Err(format!("{p} does not have nonnegative r-th differences"));
    }
    let ell = p.length();
    let mu = |idx: usize| -> i64 {
        if idx < ell {
            p.parts()[idx] as i64
        } else {
            0
        }
    };
    let sizes = PartSizeSet::binomial(r);
    let mut out = MultiplicityVector::new();
    for j in 0..ell {
        let mut diff = 0i64;
        for s in 0..=r as usize {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            diff += sign * binom(r as u64, s as u64) * mu(j + s);
        }
        if diff < 0 {
            return Err(format!("negative multiplicity at index {}", j + 1));
        }
        if diff > 0 {
            out.add(sizes.value(j as u64 + 1), diff as u64);
        }
    }
    Ok(out)
}

/// Principal hooks forward: μ_i = 2(λ_i − i) + 1 for i up to the Durfee side.
pub fn hooks_forward(p: &Partition) -> Result<Partition, String> {
    if !ClassSpec::SelfConjugate.member(p) {
        return Err(format!("{p} is not self-conjugate"));
    }
    let delta = p.durfee();
    let parts: Vec<u64> = (1..=delta)
        .map(|i| 2 * (p.parts()[i - 1] - i as u64) + 1)
        .collect();
    Partition::new(parts)
}

/// Principal hooks inverse: rebuild the self-conjugate partition whose hooks
/// are the given odd distinct parts.
pub fn hooks_inverse(p: &Partition) -> Result<Partition, String> {
    if !ClassSpec::OddDistinct.member(p) {
        return Err(format!("{p} is not a partition into odd distinct parts"));
    }
    let delta = p.length();
    let mut parts: Vec<u64> = (1..=delta)
        .map(|i| (p.parts()[i - 1] - 1) / 2 + i as u64)
        .collect();
    // Rows below the Durfee square follow from conjugate symmetry.
    let head = parts.clone();
    let mut row = delta as u64 + 1;
    loop {
        let count = head.iter().filter(|&&lam| lam >= row).count() as u64;
        if count == 0 {
            break;
        }
        parts.push(count);
        row += 1;
    }
    let q = Partition::new(parts)?;
    if !ClassSpec::SelfConjugate.member(&q) {
        return Err(format!("{p} does not encode a valid principal-hook sequence"));
    }
    Ok(q)
}

/// Bounded-even map: divide parts by 2, double multiplicities, conjugate.
pub fn even_parts_map(k: u64, p: &Partition) -> Result<Partition, String> {
    even_parts_generalized(2, 1, k, p)
}

/// The m,r-generalized bounded map: divide parts by m^r, multiply
/// multiplicities by m^r, conjugate.
pub fn even_parts_generalized(m: u64, r: u32, k: u64, p: &Partition) -> Result<Partition, String> {
    assert!(m >= 2 && r >= 1);
    let base = m.pow(r);
    for &part in p.parts() {
        if part % base != 0 || rth_root(part / base, r).is_none() || part > base * k {
            return Err(format!(
                "part {part} is not an admissible size m^r·j^r ≤ m^r·k"
            ));
        }
    }
    let mut parts = Vec::new();
    for &part in p.parts() {
        for _ in 0..base {
            parts.push(part / base);
        }
    }
    Ok(Partition::new(parts)?.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count;
    use num_traits::One;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn apply_examples() {
        // Two 1s and one 3 among triangular sizes map to (4,1).
        let spec = convex_spec(2);
        let m = MultiplicityVector::from_pairs([(1, 2), (3, 1)]);
        assert_eq!(apply(&spec, &m).unwrap().into_partition(), p(&[4, 1]));
        // Glaisher on {6:1} gives {3:2}.
        let g = glaisher_spec();
        let m = MultiplicityVector::from_pairs([(6, 1)]);
        assert_eq!(
            apply(&g, &m).unwrap(),
            Image::Mults(MultiplicityVector::from_pairs([(3, 2)]))
        );
        // Out-of-domain input is rejected.
        assert!(apply(&g, &MultiplicityVector::from_pairs([(2, 2)])).is_err());
    }

    #[test]
    fn glaisher_roundtrip() {
        assert_eq!(glaisher(&p(&[6, 3, 1])).unwrap(), p(&[3, 3, 3, 1]));
        assert_eq!(glaisher_inv(&p(&[3, 3, 3, 1])).unwrap(), p(&[6, 3, 1]));
        assert_eq!(glaisher(&p(&[1])).unwrap(), p(&[1]));
        for n in 0..=30u64 {
            for q in enumerate_all(&ClassSpec::Distinct, n).unwrap() {
                let img = glaisher(&q).unwrap();
                assert!(ClassSpec::Odd.member(&img));
                assert_eq!(glaisher_inv(&img).unwrap(), q, "n={n}");
            }
        }
    }

    #[test]
    fn ohara_matches_glaisher() {
        let steps = ohara_step(&MultiplicityVector::from_pairs([(4, 1)]));
        assert_eq!(steps, MultiplicityVector::from_pairs([(2, 2)]));
        assert_eq!(
            ohara_step(&steps),
            MultiplicityVector::from_pairs([(1, 4)])
        );
        for n in 0..=30u64 {
            for q in enumerate_all(&ClassSpec::Distinct, n).unwrap() {
                let fixed = ohara_fixpoint(&q.to_multiplicities());
                assert_eq!(fixed.to_partition(), glaisher(&q).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn stanton_examples() {
        assert_eq!(stanton(1, 3, &p(&[3])).unwrap(), p(&[1, 1, 1]));
        // 16 = (1·2²)² with k=1, s=2: 2⁴ parts of size 1.
        assert_eq!(stanton(2, 2, &p(&[16])).unwrap(), p(&vec![1; 16]));
        assert_eq!(stanton(1, 2, &p(&[6, 3, 1])).unwrap(), p(&[3, 3, 3, 1]));
        for (r, m, nmax) in [(1, 3, 30u64), (2, 2, 30)] {
            for n in 0..=nmax {
                let dom = enumerate_all(&ClassSpec::StantonA { r, m }, n).unwrap();
                let cod = enumerate_all(&ClassSpec::StantonB { r, m }, n).unwrap();
                assert_eq!(dom.len(), cod.len(), "r={r} m={m} n={n}");
                let mut images = Vec::new();
                for q in dom {
                    let img = stanton(r, m, &q).unwrap();
                    assert_eq!(img.size(), n);
                    assert!((ClassSpec::StantonB { r, m }).member(&img));
                    assert_eq!(stanton_inv(r, m, &img).unwrap(), q);
                    images.push(img);
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), cod.len());
            }
        }
    }

    #[test]
    fn rth_diff_roundtrip() {
        let m = MultiplicityVector::from_pairs([(1, 2), (3, 1)]);
        assert_eq!(rth_diff_forward(2, &m).unwrap(), p(&[4, 1]));
        assert_eq!(rth_diff_inverse(2, &p(&[4, 1])).unwrap(), m);
        assert_eq!(
            rth_diff_forward(3, &MultiplicityVector::from_pairs([(1, 1)])).unwrap(),
            p(&[1])
        );
        assert!(rth_diff_inverse(2, &p(&[3, 2])).is_err());
        for r in [2u32, 3] {
            let sizes = ClassSpec::PartsIn {
                set: PartSizeSet::binomial(r),
                bound: Mult::Infinite,
            };
            for n in 0..=30u64 {
                for q in enumerate_all(&sizes, n).unwrap() {
                    let m = q.to_multiplicities();
                    let image = rth_diff_forward(r, &m).unwrap();
                    assert!(ClassSpec::Convex(r).member(&image), "r={r} {q} -> {image}");
                    assert_eq!(rth_diff_inverse(r, &image).unwrap(), m, "r={r}");
                }
            }
        }
    }

    #[test]
    fn hooks_roundtrip() {
        assert_eq!(hooks_forward(&p(&[4, 3, 2, 1])).unwrap(), p(&[7, 3]));
        assert_eq!(hooks_forward(&p(&[2, 2])).unwrap(), p(&[3, 1]));
        assert_eq!(hooks_forward(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(hooks_inverse(&p(&[7, 3])).unwrap(), p(&[4, 3, 2, 1]));
        for n in 0..=30u64 {
            for q in enumerate_all(&ClassSpec::SelfConjugate, n).unwrap() {
                let img = hooks_forward(&q).unwrap();
                assert!(ClassSpec::OddDistinct.member(&img));
                assert_eq!(hooks_inverse(&img).unwrap(), q, "n={n}");
            }
        }
    }

    #[test]
    fn even_parts_examples() {
        assert_eq!(even_parts_map(2, &p(&[4, 2])).unwrap(), p(&[4, 2]));
        assert_eq!(even_parts_map(1, &p(&[2])).unwrap(), p(&[2]));
        assert_eq!(even_parts_map(3, &Partition::empty()).unwrap(), Partition::empty());
        for k in 1..=8u64 {
            for n in 0..=30u64 {
                let dom = enumerate_all(&ClassSpec::EvenBoundedLargest(k), n).unwrap();
                let cod = enumerate_all(&ClassSpec::EvenBoundedCount(k), n).unwrap();
                assert_eq!(dom.len(), cod.len(), "k={k} n={n}");
                let mut images = Vec::new();
                for q in dom {
                    let img = even_parts_map(k, &q).unwrap();
                    assert_eq!(img.size(), n);
                    assert!(ClassSpec::EvenBoundedCount(k).member(&img), "k={k} {q} -> {img}");
                    images.push(img);
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), cod.len(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn structure_validation() {
        for spec in [glaisher_spec(), convex_spec(2), convex_spec(3), even_parts_spec(4)] {
            let report = validate_structure(&spec, 200).unwrap();
            assert!(report.pass, "{}: {:?}", report.name, report.first_violation);
        }
        let report = validate_structure(&stanton_spec(1, 3), 200).unwrap();
        assert!(report.pass, "{:?}", report.first_violation);
        // Column identities alone, deeper: all j ≤ 2000.
        let report = validate_structure(&glaisher_spec(), 2000).unwrap();
        assert!(report.pass);
        assert!(validate_structure(&glaisher_spec(), 2001).is_err());
        // A constructed violation: v(1,2) = 1 only, column sum 1 ≠ 2.
        let bad = LinearMapSpec {
            name: "bad",
            kind: MapKind::Mp,
            domain: ClassSpec::Unrestricted,
            codomain: ClassSpec::Unrestricted,
            column: Arc::new(|j: u64| {
                if j == 2 {
                    vec![(1, Rational64::one())]
                } else {
                    vec![(1, Rational64::from_integer(j as i64))]
                }
            }),
            working_bound: 10_000,
            stability: None,
        };
        let report = validate_structure(&bad, 30).unwrap();
        assert!(!report.pass);
        assert!(report.first_violation.unwrap().contains("column 2"));
    }

    #[test]
    fn equinumerosity_counts() {
        // Spot checks of the pairs the bijections connect, via exact counts.
        for n in 0..=30u64 {
            assert_eq!(
                count(&ClassSpec::Distinct, n).unwrap(),
                count(&ClassSpec::Odd, n).unwrap()
            );
            assert_eq!(
                count(&ClassSpec::SelfConjugate, n).unwrap(),
                count(&ClassSpec::OddDistinct, n).unwrap()
            );
        }
    }

    #[test]
    fn stability_ratios_converge() {
        let grid = [0.3, 0.7, 1.1, 1.7];
        let ns = [10_000u64, 1_000_000];
        for spec in [convex_spec(2), even_parts_spec(4), glaisher_spec()] {
            let report = check_stability(&spec, &ns, &grid).unwrap();
            assert!(
                report.pass,
                "{}: deviations {:?}",
                report.name, report.deviations
            );
        }
        assert!(check_stability(&stanton_spec(1, 3), &ns, &grid).is_err());
    }
}
