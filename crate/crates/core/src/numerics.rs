//! Shared numerical kernels: special functions, quadrature, root finding.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Riemann zeta for real s > 1, by Euler–Maclaurin with N = 24 terms.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 1.0, "zeta implemented for s > 1");
    const N: usize = 24;
    // Bernoulli numbers B_2, B_4, …, B_12.
    const BERN: [f64; 6] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
    ];
    let mut sum = 0.0;
    for k in 1..N {
        sum += (k as f64).powf(-s);
    }
    let nf = N as f64;
    sum += nf.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * nf.powf(-s);
    // Correction terms B_{2j}/(2j)! * s(s+1)…(s+2j−2) * N^{−s−2j+1}
    let mut rising = s; // s(s+1)…, built incrementally
    let mut fact = 2.0; // (2j)!
    for (j, &b) in BERN.iter().enumerate() {
        let tw = 2 * (j + 1);
        sum += b / fact * rising * nf.powf(-s - tw as f64 + 1.0);
        // extend rising factorial by two factors and factorial by two
        rising *= (s + tw as f64 - 1.0) * (s + tw as f64);
        fact *= (tw as f64 + 1.0) * (tw as f64 + 2.0);
    }
    sum
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma function for real x (Lanczos, reflection for x < 1/2).
pub fn gamma(x: f64) -> f64 {
    gamma_complex(Complex64::new(x, 0.0)).re
}

/// Gamma function on the complex plane (Lanczos approximation).
pub fn gamma_complex(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π/sin(πz)
        let pi_z = Complex64::new(PI, 0.0) * z;
        return Complex64::new(PI, 0.0) / (pi_z.sin() * gamma_complex(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// Dilogarithm Li₂(x) = Σ x^k/k² on [0, 1], to absolute accuracy 1e−12.
/// Near 1 the series is slow, so reflect through ζ(2).
pub fn dilog(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "dilog implemented on [0,1]");
    if x == 1.0 {
        return PI * PI / 6.0;
    }
    if x > 0.5 {
        // Li₂(x) + Li₂(1−x) = π²/6 − ln x · ln(1−x)
        return PI * PI / 6.0 - x.ln() * (1.0 - x).ln() - dilog(1.0 - x);
    }
    let mut term = x;
    let mut sum = x;
    let mut k = 1u32;
    // Tail bound: remaining terms < term * x / (1−x).
    while term * x / (1.0 - x) > 1e-15 {
        k += 1;
        term *= x;
        sum += term / (k as f64 * k as f64);
    }
    sum
}

/// Adaptive Simpson quadrature on [a, b] to the given absolute tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Integral over [a, ∞) with tail truncated where the integrand drops below
/// 1e−14; `scale` sets the step used to hunt for the cutoff.
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: &F, a: f64, scale: f64, tol: f64) -> f64 {
    let mut hi = a + scale;
    while f(hi) > 1e-14 {
        hi += scale;
        if hi > a + 1e6 * scale {
            break; // give up hunting; integrand negligible anyway
        }
    }
    integrate(f, a, hi, tol)
}

/// Bracketed bisection to 1e−12 interval width, then one Newton polish using
/// a central-difference derivative.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    let fhi = f(hi);
    assert!(
        flo.signum() != fhi.signum(),
        "bisect: no sign change in [{lo}, {hi}] (f = {flo}, {fhi})"
    );
    let increasing = fhi > flo;
    while hi - lo > 1e-12 * (1.0 + lo.abs()) {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm > 0.0) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    // Newton polish
    let h = 1e-7 * (1.0 + x.abs());
    let d = (f(x + h) - f(x - h)) / (2.0 * h);
    if d != 0.0 {
        let x2 = x - f(x) / d;
        if x2.is_finite() && (x2 - x).abs() < 1e-6 * (1.0 + x.abs()) {
            return x2;
        }
    }
    x
}

/// All complex roots of a polynomial with real coefficients (highest degree
/// first), by Durand–Kerner iteration. Degrees here are tiny (≤ 4).
pub fn poly_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs {
            acc = acc * z + c;
        }
        acc
    };
    let lead = coeffs[0];
    // Standard starting points: powers of a non-real seed.
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(lead, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}
