//! Limit-shape curves, constants, and statistics.

pub use crate::numerics::dilog;
use crate::numerics::{bisect, gamma, integrate, integrate_to_inf, zeta};
use std::f64::consts::PI;

/// The family of constants d(r, B, a):
/// [(1 − a^{−1/r}) ζ(1+1/r) Γ(1+1/r) / (r B^{1/r})]^{r/(1+r)};
/// `a = None` means the unbounded-multiplicity limit.
pub fn const_d(r: f64, b: f64, a: Option<u64>) -> f64 {
    assert!(r >= 1.0 && b > 0.0, "need r >= 1, B > 0");
    let a_factor = match a {
        Some(a) => {
            assert!(a >= 2, "multiplicity bound must be at least 2");
            1.0 - (a as f64).powf(-1.0 / r)
        }
        None => 1.0,
    };
    let inner = a_factor * zeta(1.0 + 1.0 / r) * gamma(1.0 + 1.0 / r) / (r * b.powf(1.0 / r));
    inner.powf(r / (1.0 + r))
}

fn factorial(r: u32) -> f64 {
    (1..=r).map(|k| k as f64).product()
}

/// E(x) = x/(1−x): mean of a geometric variable with success parameter 1−x.
pub fn e_geom(x: f64) -> f64 {
    x / (1.0 - x)
}

/// E_a(x) = (x + 2x² + … + (a−1)x^{a−1}) / (1 + x + … + x^{a−1}):
/// mean of the geometric truncated below a.
pub fn e_trunc(x: f64, a: u64) -> f64 {
    let mut num = 0.0;
    let mut den = 1.0;
    let mut p = 1.0;
    for k in 1..a {
        p *= x;
        num += k as f64 * p;
        den += p;
    }
    num / den
}

/// Φ(t; r, B): limit shape for unbounded multiplicities on part sizes u_k ~ B k^r,
/// as the integral of E(e^{−cBy^r}) from (t/B)^{1/r} to ∞, c = d(r, B).
pub fn phi_rb(t: f64, r: f64, b: f64) -> f64 {
    assert!(t > 0.0);
    let c = const_d(r, b, None);
    let lo = (t / b).powf(1.0 / r);
    let f = |y: f64| e_geom((-c * b * y.powf(r)).exp());
    integrate_to_inf(&f, lo, 1.0 / (c * b).powf(1.0 / r), 1e-11)
}

/// Φ(t; r, B, a): as above with multiplicities bounded strictly by a,
/// integrand E_a(e^{−cBy^r}), c = d(r, B, a).
pub fn phi_rba(t: f64, r: f64, b: f64, a: u64) -> f64 {
    assert!(t > 0.0);
    let c = const_d(r, b, Some(a));
    let lo = (t / b).powf(1.0 / r);
    let f = |y: f64| e_trunc((-c * b * y.powf(r)).exp(), a);
    integrate_to_inf(&f, lo, 1.0 / (c * b).powf(1.0 / r), 1e-11)
}

/// Closed form of Φ(t; 1, 1): −(1/c) ln(1 − e^{−ct}) with c = π/√6.
pub fn phi_closed(t: f64) -> f64 {
    let c = PI / 6f64.sqrt();
    -(1.0 - (-c * t).exp()).ln() / c
}

/// Closed form of Ψ(t) = Φ(t; 1, 1, 2): (1/d) ln(1 + e^{−dt}) with d = π/√12.
pub fn psi_closed(t: f64) -> f64 {
    let d = PI / 12f64.sqrt();
    (1.0 + (-d * t).exp()).ln() / d
}

/// b(t) = √2 Ψ(√2 t) = (1/c) ln(1 + e^{−ct}), c = π/√6: the starting curve of
/// the self-conjugate pipeline.
pub fn b_curve(t: f64) -> f64 {
    let c = PI / 6f64.sqrt();
    (1.0 + (-c * t).exp()).ln() / c
}

const ROMIK_A_CONST: f64 = PI / 3.0;

/// A(x): limit shape of partitions with no two parts differing by exactly 1
/// and no parts of size 1.
pub fn romik_a(x: f64) -> f64 {
    let a = ROMIK_A_CONST;
    let q = (-a * x).exp();
    let disc = 1.0 + 2.0 * q - 3.0 * q * q;
    ((1.0 + q + disc.sqrt()) / (2.0 * (1.0 - q))).ln() / (2.0 * a)
}

/// B(x): limit shape of partitions in which no part has multiplicity 1.
pub fn romik_b(x: f64) -> f64 {
    let a = ROMIK_A_CONST;
    let q = (-a * x).exp();
    ((1.0 - q + q * q) / (1.0 - q)).ln() / a
}

/// Conjugate limit shape of partitions with nonnegative r-th differences:
/// ∫_t^∞ (y−t)^{r−1}/(r−1)! · E(e^{−c y^r / r!}) dy with c = d(r, 1/r!).
pub fn rth_inverse(t: f64, r: u32) -> f64 {
    assert!(r >= 2 && t > 0.0);
    let rf = factorial(r);
    let c = const_d(r as f64, 1.0 / rf, None);
    let rm1f = factorial(r - 1);
    // E(e^{−x}) = 1/(e^x − 1).
    let bose = |x: f64| 1.0 / x.exp_m1();
    let full = |y: f64| (y - t).powi(r as i32 - 1) / rm1f * bose(c * y.powi(r as i32) / rf);
    let scale = (rf / c).powf(1.0 / r as f64);
    if t >= 1.0 {
        return integrate_to_inf(&full, t, scale, 1e-11);
    }
    // For small t the integrand carries a 1/(c·y^r/r!) blowup near 0; subtract
    // it on (t, 1) — the difference is bounded — and add the subtracted piece
    // back in closed form: (r/c)·∫_t^1 (y−t)^{r−1}/y^r dy.
    let regular = |y: f64| {
        let q = c * y.powi(r as i32) / rf;
        (y - t).powi(r as i32 - 1) / rm1f * (bose(q) - 1.0 / q)
    };
    let head = integrate(&regular, t, 1.0, 1e-11);
    let mut singular = 0.0;
    let mut binom = 1.0; // binom(r−1, j)
    for j in 0..r {
        let base = if j == 0 {
            (1.0 / t).ln()
        } else {
            (t.powi(-(j as i32)) - 1.0) / j as f64
        };
        singular += binom * (-t).powi(j as i32) * base;
        binom = binom * (r - 1 - j) as f64 / (j + 1) as f64;
    }
    singular *= r as f64 / c;
    let tail = integrate_to_inf(&full, 1.0, scale, 1e-11);
    head + singular + tail
}

/// The convex-partition conjugate limit shape C^{(−1)}; the r = 2 case of
/// `rth_inverse`, with c = ½ π^{1/3} ζ(3/2)^{2/3}.
pub fn convex_inverse(x: f64) -> f64 {
    rth_inverse(x, 2)
}

/// m(x): limit shape of the class with parts ≥ 2 apart at even parts and
/// ≥ 4 apart at odd parts.
pub fn lebesgue_m(x: f64) -> f64 {
    let q = (-PI * x / 4.0).exp();
    2.0 / PI * ((1.0 + q + (1.0 + 6.0 * q + q * q).sqrt()) / 2.0).ln()
}

/// Right endpoint x₀ = η₀ + s(0)/3 = (2/π) ln(1 + √2) of the conjugate
/// Lebesgue shape.
pub fn lebesgue_x0() -> f64 {
    2.0 / PI * (1.0 + 2f64.sqrt()).ln()
}

/// m^{−1}(x) = (4/π) ln[(e^{−πx/2} + 1)/(e^{πx/2} − 1)] on (0, x₀].
pub fn lebesgue_m_inv(x: f64) -> f64 {
    assert!(x > 0.0 && x <= lebesgue_x0() + 1e-12, "m_inv domain is (0, x0]");
    4.0 / PI * (((-PI * x / 2.0).exp() + 1.0) / ((PI * x / 2.0).exp() - 1.0)).ln()
}

/// Limit shape of partitions into parts ≡ 0 or ℓ mod k, parts ≥ k apart and
/// parts ≡ ℓ mod k at least 2k apart. The curve does not depend on ℓ.
pub fn lebesgue_general(ell: u64, k: u64, t: f64) -> f64 {
    assert!(ell >= 1 && ell < k);
    let kf = k as f64;
    let q = (-PI * t / (2.0 * (2.0 * kf).sqrt())).exp();
    2.0 * 2f64.sqrt() / (PI * kf.sqrt())
        * ((1.0 + q + (1.0 + 6.0 * q + q * q).sqrt()) / 2.0).ln()
}

/// Constants attached to the minimal-difference-d family.
#[derive(Debug, Clone, Copy)]
pub struct DiffDConstants {
    /// Root of (1−y)^d = y in (0, 1).
    pub y_d: f64,
    /// Limiting number of parts per √n.
    pub gamma: f64,
    /// w = √(1 − (d/2) γ²).
    pub w: f64,
    /// Solution of c = √(Li₂(1 − e^{−cγ/w})).
    pub c: f64,
}

/// Solve for (y_d, γ, w, c) of the minimal-difference-d limit shape.
pub fn diffd_constants(d: u32) -> DiffDConstants {
    assert!(d >= 1);
    let df = d as f64;
    let y_d = bisect(&|y: f64| (1.0 - y).powi(d as i32) - y, 1e-12, 1.0 - 1e-12);
    let l = (1.0 - y_d).ln();
    let gamma = -l / (dilog(y_d) + df / 2.0 * l * l).sqrt();
    let w = (1.0 - df / 2.0 * gamma * gamma).sqrt();
    let c = solve_tilted_c(gamma / w);
    DiffDConstants { y_d, gamma, w, c }
}

/// Solve c² = Li₂(1 − e^{−c·q}) for c > 0 (q = z/w in the difference-d family,
/// q = z for partitions into exactly z√n parts).
fn solve_tilted_c(q: f64) -> f64 {
    assert!(q > 0.0);
    let hi = PI / 6f64.sqrt();
    bisect(&|c: f64| c * c - dilog(1.0 - (-c * q).exp()), 1e-9, hi)
}

/// The constant c(z) with c² = Li₂(1 − e^{−cz}) for partitions into exactly
/// z√n parts; tends to π/√6 as z → ∞.
pub fn romik_c(z: f64) -> f64 {
    solve_tilted_c(z)
}

/// Conjugate limit shape of minimal-difference-d partitions into exactly
/// k ~ z√n parts:
/// (w/c) log[(e^{czd/w} − e^{cz(d−1)/w}) e^{−cdx/w}/(1 − e^{−cx/w})].
pub fn diffdk_inverse(d: u32, z: f64, x: f64) -> f64 {
    assert!(x > 0.0);
    let df = d as f64;
    let w2 = 1.0 - df / 2.0 * z * z;
    assert!(w2 > 0.0, "z above the admissibility bound sqrt(2/d)");
    let w = w2.sqrt();
    let c = solve_tilted_c(z / w);
    let front = (c * z / w * df).exp() - (c * z / w * (df - 1.0)).exp();
    w / c * (front * (-c * df / w * x).exp() / (1.0 - (-c / w * x).exp())).ln()
}

/// Conjugate limit shape of minimal-difference-d partitions (no restriction on
/// the number of parts): the exactly-k curve at the typical z = γ(d).
pub fn diffd_inverse(d: u32, x: f64) -> f64 {
    let k = diffd_constants(d);
    diffdk_inverse(d, k.gamma, x)
}

/// Positive abscissa where the difference-d conjugate shape meets the x-axis.
pub fn diffd_support(d: u32) -> f64 {
    let mut hi = 1.0;
    while diffd_inverse(d, hi) > 0.0 {
        hi *= 2.0;
    }
    bisect(&|x: f64| diffd_inverse(d, x), 1e-9, hi)
}

/// Normalization constant shared by the bounded even-part shapes F_{m,r} and
/// G_{m,r}: solves m^r ∫₀^b y^r E(e^{−c m^r y^r}) dy = 1.
pub fn bounded_cmr(m: u32, r: u32, b: f64) -> f64 {
    assert!(m >= 2 && r >= 1 && b > 0.0);
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(u32, u32, u64), f64>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (m, r, b.to_bits());
    if let Some(&c) = cache.lock().unwrap().get(&key) {
        return c;
    }
    let mr = (m as f64).powi(r as i32);
    let area = |c: f64| {
        // y^r·E(e^{−c m^r y^r}) = y^r/(e^{c m^r y^r} − 1), bounded at 0.
        let f = |y: f64| mr * y.powi(r as i32) / (c * mr * y.powi(r as i32)).exp_m1();
        integrate(&f, 1e-12, b, 1e-11)
    };
    let mut lo = 1.0;
    let mut hi = 1.0;
    while area(lo) < 1.0 {
        lo /= 2.0;
    }
    while area(hi) > 1.0 {
        hi *= 2.0;
    }
    let c = bisect(&|c: f64| area(c) - 1.0, lo, hi);
    cache.lock().unwrap().insert(key, c);
    c
}

/// F_{m,r}(t) = ∫_{(t/m^r)^{1/r}}^b E(e^{−c m^r y^r}) dy on (0, m^r b^r]:
/// limit shape of partitions into parts m^r j^r with j ≤ k, k ~ b n^{r/(r+1)}.
pub fn bounded_fmr(m: u32, r: u32, b: f64, t: f64) -> f64 {
    assert!(t > 0.0);
    let mr = (m as f64).powi(r as i32);
    let lo = (t / mr).powf(1.0 / r as f64);
    if lo >= b {
        return 0.0;
    }
    let c = bounded_cmr(m, r, b);
    integrate(&|y: f64| 1.0 / (c * mr * y.powi(r as i32)).exp_m1(), lo, b, 1e-11)
}

/// G_{m,r}(t) = m^r ∫_{t^{1/r}}^b E(e^{−c m^r y^r}) dy on (0, b^r]: conjugate
/// shape after dividing parts by m^r and multiplying multiplicities by m^r.
pub fn bounded_gmr(m: u32, r: u32, b: f64, t: f64) -> f64 {
    assert!(t > 0.0);
    let mr = (m as f64).powi(r as i32);
    let lo = t.powf(1.0 / r as f64);
    if lo >= b {
        return 0.0;
    }
    let c = bounded_cmr(m, r, b);
    mr * integrate(&|y: f64| 1.0 / (c * mr * y.powi(r as i32)).exp_m1(), lo, b, 1e-11)
}

/// F(t) for partitions into even parts with largest part ≤ 2k, k ~ b√n.
pub fn bounded_f(b: f64, t: f64) -> f64 {
    bounded_fmr(2, 1, b, t)
}

/// G(t) for partitions into even parts with at most k parts, k ~ b√n.
pub fn bounded_g(b: f64, t: f64) -> f64 {
    bounded_gmr(2, 1, b, t)
}

/// Limiting number of parts per √n of the Lebesgue class: m(0) = (2/π) ln(1+√2).
pub fn parts_constant() -> f64 {
    lebesgue_m(0.0)
}

/// Limiting Durfee-square side per √n of the Lebesgue class: the fixpoint of
/// m^{−1}.
pub fn durfee_constant() -> f64 {
    let x0 = lebesgue_x0();
    bisect(&|x: f64| lebesgue_m_inv(x) - x, 1e-9, x0 - 1e-9)
}

/// Fixpoint of an arbitrary decreasing curve: the Durfee abscissa f(x) = x.
pub fn durfee_of<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    bisect(&|x: f64| f(x) - x, lo, hi)
}

/// Max residual over the grid of the Glaisher limit-shape identity
/// √2 Φ(x√2) = Σ_{i≥1} Ψ(2^i x), both sides in closed form.
pub fn glaisher_identity_check(grid: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for &x in grid {
        assert!(x > 0.0);
        let lhs = 2f64.sqrt() * phi_closed(x * 2f64.sqrt());
        let mut rhs = 0.0;
        let mut arg = 2.0 * x;
        loop {
            let term = psi_closed(arg);
            rhs += term;
            if term < 1e-15 {
                break;
            }
            arg *= 2.0;
        }
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}

/// Max residual over the grid of the Stanton limit-shape identity
/// (m−1) Σ_{k≥1} m^{r(k−1)−k} Φ(t m^{r(k−1)}; r, 1, m^r) = Φ(t; r, (m/(m−1))^r).
pub fn stanton_identity_check(r: u32, m: u32, grid: &[f64]) -> f64 {
    assert!(r >= 1 && m >= 2);
    let mf = m as f64;
    let a = (m as u64).pow(r);
    let b_rhs = (mf / (mf - 1.0)).powi(r as i32);
    let mut worst = 0.0f64;
    for &t in grid {
        assert!(t > 0.0);
        let mut lhs = 0.0;
        let mut k = 1u32;
        loop {
            let coef = mf.powi((r * (k - 1)) as i32 - k as i32);
            let term = coef * phi_rba(t * mf.powi((r * (k - 1)) as i32), r as f64, 1.0, a);
            lhs += term;
            if term < 1e-13 || k > 60 {
                break;
            }
            k += 1;
        }
        lhs *= mf - 1.0;
        let rhs = phi_rb(t, r as f64, b_rhs);
        worst = worst.max((lhs - rhs).abs());
    }
    worst
}

/// A limit-shape (or limit-curve) evaluator with its scaling exponents.
pub struct ShapeCurve {
    pub name: String,
    /// x-axis scaling exponent r/(1+r).
    pub x_exponent: f64,
    /// y-axis scaling exponent 1/(1+r).
    pub y_exponent: f64,
    /// Whether the area under the curve is asserted to be 1.
    pub unit_area: bool,
    /// Open domain interval; evaluations are clamped 1e−12 inside it.
    pub domain: (f64, f64),
    eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl ShapeCurve {
    pub fn new<F>(name: &str, r: f64, domain: (f64, f64), unit_area: bool, eval: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        ShapeCurve {
            name: name.to_string(),
            x_exponent: r / (1.0 + r),
            y_exponent: 1.0 / (1.0 + r),
            unit_area,
            domain,
            eval: Box::new(eval),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let t = t.clamp(self.domain.0 + 1e-12, self.domain.1 - 1e-12);
        (self.eval)(t)
    }

    /// Compositional inverse by bisection; the curve is assumed nonincreasing.
    pub fn inverse(&self, y: f64) -> f64 {
        let lo = self.domain.0 + 1e-12;
        let mut hi = if self.domain.1.is_finite() {
            self.domain.1 - 1e-12
        } else {
            let mut h = lo + 1.0;
            while self.eval(h) > y {
                h *= 2.0;
            }
            h
        };
        let mut lo = lo;
        while hi - lo > 1e-13 * (1.0 + lo.abs()) {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid) > y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Numeric area under the curve over its domain. The head near 0 is
    /// integrated after the substitution t = s·e^{−u}, which tames curves
    /// with an integrable blowup at the left endpoint.
    pub fn area(&self) -> f64 {
        let lo = self.domain.0 + 1e-12;
        let hi = if self.domain.1.is_finite() {
            self.domain.1 - 1e-12
        } else {
            let mut h = lo + 1.0;
            while self.eval(h) > 1e-12 {
                h += 1.0;
            }
            h
        };
        let s = (lo + 0.5 * (hi - lo)).min(lo + 1.0);
        let head = integrate(
            &|u: f64| {
                let t = s * (-u).exp();
                self.eval(t) * t
            },
            0.0,
            (s / lo).ln(),
            1e-9,
        );
        head + integrate(&|t| self.eval(t), s, hi, 1e-9)
    }

    pub fn unrestricted() -> Self {
        Self::new("phi", 1.0, (0.0, f64::INFINITY), true, phi_closed)
    }

    pub fn distinct() -> Self {
        Self::new("psi", 1.0, (0.0, f64::INFINITY), true, psi_closed)
    }

    /// Limit shape of partitions into odd parts, Φ(t; 1, 2).
    pub fn odd() -> Self {
        let d = PI / 12f64.sqrt();
        Self::new("odd", 1.0, (0.0, f64::INFINITY), true, move |t| {
            -(1.0 - (-d * t).exp()).ln() / (2.0 * d)
        })
    }

    pub fn phi(r: f64, b: f64) -> Self {
        Self::new(
            &format!("phi:{r}:{b}"),
            r,
            (0.0, f64::INFINITY),
            true,
            move |t| phi_rb(t, r, b),
        )
    }

    pub fn phi_bounded(r: f64, b: f64, a: u64) -> Self {
        Self::new(
            &format!("phi:{r}:{b}:{a}"),
            r,
            (0.0, f64::INFINITY),
            true,
            move |t| phi_rba(t, r, b, a),
        )
    }

    pub fn romik_a_curve() -> Self {
        Self::new("romik-a", 1.0, (0.0, f64::INFINITY), true, romik_a)
    }

    pub fn romik_b_curve() -> Self {
        Self::new("romik-b", 1.0, (0.0, f64::INFINITY), true, romik_b)
    }

    /// Conjugate convex shape C^{(−1)} (r-th difference generalization).
    pub fn rth_conjugate(r: u32) -> Self {
        Self::new(
            &format!("rth-inverse:{r}"),
            r as f64,
            (0.0, f64::INFINITY),
            true,
            move |t| rth_inverse(t, r),
        )
    }

    pub fn lebesgue() -> Self {
        Self::new("lebesgue-m", 1.0, (0.0, f64::INFINITY), true, lebesgue_m)
    }

    pub fn lebesgue_conjugate() -> Self {
        Self::new(
            "lebesgue-minv",
            1.0,
            (0.0, lebesgue_x0()),
            true,
            lebesgue_m_inv,
        )
    }

    /// Conjugate minimal-difference-d shape on its finite support.
    pub fn diffd_conjugate(d: u32) -> Self {
        Self::new(
            &format!("diffd-inverse:{d}"),
            1.0,
            (0.0, diffd_support(d)),
            true,
            move |x| diffd_inverse(d, x),
        )
    }
}

/// An element (α₀, α_∞, p) of the space of limit measures: point masses at 0
/// and ∞ plus a monotone density, together summing to 1.
pub struct ShapeTriple {
    pub mass_at_zero: f64,
    pub mass_at_infinity: f64,
    density: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    /// Interval carrying the density.
    pub support: (f64, f64),
}

impl ShapeTriple {
    pub fn new<F>(mass_at_zero: f64, mass_at_infinity: f64, support: (f64, f64), density: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        ShapeTriple {
            mass_at_zero,
            mass_at_infinity,
            density: Box::new(density),
            support,
        }
    }

    pub fn density(&self, x: f64) -> f64 {
        (self.density)(x)
    }

    pub fn total_mass(&self) -> f64 {
        self.mass_at_zero
            + self.mass_at_infinity
            + integrate(&|x| (self.density)(x), self.support.0, self.support.1, 1e-10)
    }

    pub fn is_valid(&self) -> bool {
        (self.total_mass() - 1.0).abs() < 1e-6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_constants() {
        assert!((const_d(1.0, 1.0, None) - PI / 6f64.sqrt()).abs() < 1e-12);
        assert!((const_d(1.0, 1.0, Some(2)) - PI / 12f64.sqrt()).abs() < 1e-12);
        let convex = 0.5 * PI.powf(1.0 / 3.0) * zeta(1.5).powf(2.0 / 3.0);
        assert!((const_d(2.0, 0.5, None) - convex).abs() < 1e-12);
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        for t in [0.5, 1.0, 2.0] {
            assert!((phi_rb(t, 1.0, 1.0) - phi_closed(t)).abs() < 1e-8);
            assert!((phi_rba(t, 1.0, 1.0, 2) - psi_closed(t)).abs() < 1e-8);
        }
    }

    #[test]
    fn phi_psi_implicit_equations() {
        let c = PI / 6f64.sqrt();
        let d = PI / 12f64.sqrt();
        for t in [0.1, 0.5, 1.0, 2.0, 3.0] {
            // e^{−cx} + e^{−cΦ(x)} = 1
            let r1 = (-c * t).exp() + (-c * phi_closed(t)).exp() - 1.0;
            assert!(r1.abs() < 1e-12, "phi implicit residual {r1}");
            // e^{dΨ(x)} − e^{−dx} = 1
            let r2 = (d * psi_closed(t)).exp() - (-d * t).exp() - 1.0;
            assert!(r2.abs() < 1e-12, "psi implicit residual {r2}");
            // b(t) three ways
            let b1 = b_curve(t);
            let b2 = psi_closed(2f64.sqrt() * t) / 2f64.sqrt();
            assert!((b1 - b2).abs() < 1e-12);
        }
    }

    #[test]
    fn romik_inverse_pair() {
        for x in [0.3, 1.0, 2.0] {
            assert!((romik_a(romik_b(x)) - x).abs() < 1e-9);
        }
        assert!(romik_b(30.0) < 1e-4);
    }

    #[test]
    fn unit_areas() {
        for curve in [
            ShapeCurve::unrestricted(),
            ShapeCurve::distinct(),
            ShapeCurve::odd(),
            ShapeCurve::romik_a_curve(),
            ShapeCurve::romik_b_curve(),
            ShapeCurve::lebesgue(),
            ShapeCurve::lebesgue_conjugate(),
        ] {
            let area = curve.area();
            assert!((area - 1.0).abs() < 1e-6, "{}: area {area}", curve.name);
        }
    }

    #[test]
    fn convex_shape() {
        for t in [0.2, 1.0, 2.0] {
            assert!((rth_inverse(t, 2) - convex_inverse(t)).abs() < 1e-12);
        }
        let area = ShapeCurve::rth_conjugate(2).area();
        assert!((area - 1.0).abs() < 1e-6, "convex area {area}");
    }

    #[test]
    fn lebesgue_shape() {
        // m(0) in closed form.
        let p = parts_constant();
        assert!((p - 2.0 / PI * (1.0 + 2f64.sqrt()).ln()).abs() < 1e-12);
        assert!((p - 0.561099852).abs() < 1e-8);
        // Inverse pair.
        let x = ShapeCurve::lebesgue().inverse(0.2);
        assert!((lebesgue_m(x) - 0.2).abs() < 1e-9);
        for x in [0.05, 0.2, 0.4] {
            assert!((lebesgue_m(lebesgue_m_inv(x)) - x).abs() < 1e-9);
        }
        // The general-k curve specializes to m at k = 2.
        for t in [0.1, 0.5, 1.0] {
            assert!((lebesgue_general(1, 2, t) - lebesgue_m(t)).abs() < 1e-10);
        }
        // Endpoint.
        assert!(lebesgue_m_inv(lebesgue_x0()).abs() < 1e-8);
    }

    #[test]
    fn durfee_constants() {
        let d = durfee_constant();
        assert!((d - 0.454611067).abs() < 1e-8, "durfee {d}");
        // Cross-check through the quintic root of Corollary 1.6.
        let quintic = |y: f64| {
            -1.0 + 2.0 * y - 9.0 * y * y - 7.0 * y.powi(3) - 2.0 * y.powi(4) + y.powi(5)
        };
        let y0 = bisect(&quintic, 4.0, 5.0);
        assert!((y0 - 4.171195932).abs() < 1e-6, "quintic root {y0}");
        let expr = 4.0 / PI
            * ((5.0 - 30.0 * y0 - 24.0 * y0 * y0 - 9.0 * y0.powi(3) + 4.0 * y0.powi(4)) / 14.0)
                .ln();
        assert!((expr - d).abs() < 1e-6, "quintic expression {expr}");
        // Fixpoint of the unrestricted shape: ln 2 / c.
        let c = PI / 6f64.sqrt();
        let f = durfee_of(&phi_closed, 1e-6, 2.0);
        assert!((f - 2f64.ln() / c).abs() < 1e-9);
    }

    #[test]
    fn diffd_family() {
        let k1 = diffd_constants(1);
        assert!((k1.y_d - 0.5).abs() < 1e-12);
        assert!((k1.gamma - 2.0 * 3f64.sqrt() * 2f64.ln() / PI).abs() < 1e-10);
        let k2 = diffd_constants(2);
        assert!((k2.y_d - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
        // Theorem 7.1 is Theorem 7.2 at z = γ.
        for x in [0.3, 0.6] {
            assert!((diffd_inverse(2, x) - diffdk_inverse(2, k2.gamma, x)).abs() < 1e-12);
        }
        // Unit areas (hard gate).
        for d in [1, 2, 3] {
            let area = ShapeCurve::diffd_conjugate(d).area();
            assert!((area - 1.0).abs() < 1e-4, "diffd {d}: area {area}");
        }
        // d = 1 is the distinct-parts class: the conjugate shape must agree
        // with the inverse of Ψ.
        let psi = ShapeCurve::distinct();
        for x in [0.2, 0.4, 0.6] {
            let y = diffd_inverse(1, x);
            assert!((psi.inverse(x) - y).abs() < 1e-3, "d=1 vs psi at {x}");
        }
    }

    #[test]
    fn romik_c_limit() {
        assert!((romik_c(50.0) - PI / 6f64.sqrt()).abs() < 1e-6);
        // Small z: c ≈ z.
        assert!((romik_c(0.01) - 0.01).abs() < 1e-3);
    }

    #[test]
    fn bounded_shapes() {
        let b = 0.7;
        // F(b, t) vanishes at the right endpoint 2b.
        assert!(bounded_f(b, 2.0 * b) == 0.0);
        // G = 2 F(2·) with the shared constant.
        for t in [0.1, 0.3, 0.6] {
            assert!((bounded_g(b, t) - 2.0 * bounded_f(b, 2.0 * t)).abs() < 1e-6);
        }
        // Both normalize to unit area.
        let cf = ShapeCurve::new("f", 1.0, (0.0, 2.0 * b), true, move |t| bounded_f(b, t));
        let cg = ShapeCurve::new("g", 1.0, (0.0, b), true, move |t| bounded_g(b, t));
        assert!((cf.area() - 1.0).abs() < 1e-5, "F area {}", cf.area());
        assert!((cg.area() - 1.0).abs() < 1e-5, "G area {}", cg.area());
        // r = 1, m = 2 specialization of the general family.
        for t in [0.2, 0.5] {
            assert!((bounded_fmr(2, 1, b, t) - bounded_f(b, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn glaisher_and_stanton_identities() {
        let grid = [0.25, 0.5, 1.0, 2.0];
        assert!(glaisher_identity_check(&grid) < 1e-8);
        assert!(stanton_identity_check(1, 2, &grid) < 1e-8);
        assert!(stanton_identity_check(2, 2, &grid) < 1e-6);
    }

    #[test]
    fn shape_triple_mass() {
        // The square-plus-tail example: (1/2, 0, constant 1/√2 on [0, 1/√2]).
        let h = 1.0 / 2f64.sqrt();
        let triple = ShapeTriple::new(0.5, 0.0, (0.0, h), move |_| h);
        assert!(triple.is_valid());
    }

    #[test]
    fn curve_inverse_roundtrip() {
        let phi = ShapeCurve::unrestricted();
        for y in [0.2, 0.7, 1.5] {
            let x = phi.inverse(y);
            assert!((phi.eval(x) - y).abs() < 1e-9);
        }
    }
}
