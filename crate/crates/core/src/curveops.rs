//! Numeric calculus of monotone plane curves: the geometric transformations
//! on limit shapes (conjugation, move, shift, shred, stretch-and-paste, union,
//! plus, cut, paste) and three end-to-end pipelines re-deriving known shapes.

use crate::shape::{phi_closed, psi_closed};
use std::f64::consts::PI;
use std::sync::Arc;

const EDGE: f64 = 1e-12;

/// A monotone curve on an interval, represented by its evaluator. Inverses are
/// generic bracketed bisection unless a closed form was supplied upstream.
#[derive(Clone)]
pub struct MonotoneCurve {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    /// Open domain interval; evaluation clamps 1e−12 inside.
    pub domain: (f64, f64),
    pub increasing: bool,
}

impl MonotoneCurve {
    pub fn new<F>(domain: (f64, f64), increasing: bool, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let curve = MonotoneCurve {
            f: Arc::new(f),
            domain,
            increasing,
        };
        curve.assert_monotone();
        curve
    }

    fn assert_monotone(&self) {
        let (lo, hi) = self.grid_bounds();
        let n = 200;
        let mut prev = self.eval(lo);
        for i in 1..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            let y = self.eval(x);
            let ok = if self.increasing {
                y >= prev - 1e-9
            } else {
                y <= prev + 1e-9
            };
            assert!(ok, "curve not monotone near x = {x}");
            prev = y;
        }
    }

    fn grid_bounds(&self) -> (f64, f64) {
        let lo = if self.domain.0.is_finite() {
            self.domain.0 + EDGE
        } else {
            -1e3
        };
        let hi = if self.domain.1.is_finite() {
            self.domain.1 - EDGE
        } else {
            lo + 1e3
        };
        (lo, hi)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(self.domain.0 + EDGE, self.domain.1 - EDGE);
        (self.f)(x)
    }

    /// Conjugation: the compositional inverse.
    pub fn inverse(&self) -> MonotoneCurve {
        let this = self.clone();
        let (lo, hi) = self.grid_bounds();
        let (ylo, yhi) = {
            let a = self.eval(lo);
            let b = self.eval(hi);
            (a.min(b), a.max(b))
        };
        let increasing = self.increasing;
        let range = (
            if self.domain.0.is_finite() || increasing {
                ylo
            } else {
                ylo
            },
            yhi,
        );
        MonotoneCurve {
            f: Arc::new(move |y: f64| this.solve(y)),
            domain: range,
            increasing,
        }
    }

    /// Solve f(x) = y by bisection over the domain.
    fn solve(&self, y: f64) -> f64 {
        let (mut lo, mut hi) = self.grid_bounds();
        // Expand toward infinite endpoints until the target is bracketed.
        if !self.domain.1.is_finite() {
            let want_larger = self.increasing;
            while (self.eval(hi) < y) == !want_larger && hi < 1e12 {
                let step = hi - lo;
                hi += step.max(1.0);
                if (self.eval(hi) >= y) == !want_larger {
                    break;
                }
            }
        }
        let flo = self.eval(lo);
        for _ in 0..200 {
            if hi - lo <= 1e-13 * (1.0 + lo.abs()) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let fm = self.eval(mid);
            if (fm > y) == (flo > y) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Move: add a constant.
    pub fn move_by(&self, a: f64) -> MonotoneCurve {
        let this = self.clone();
        MonotoneCurve {
            f: Arc::new(move |x| this.eval(x) + a),
            domain: self.domain,
            increasing: self.increasing,
        }
    }

    /// Shift: add the linear function a·x.
    pub fn shift(&self, a: f64) -> MonotoneCurve {
        let this = self.clone();
        MonotoneCurve::new(self.domain, self.increasing, move |x| {
            this.eval(x) + a * x
        })
    }

    /// Vertical scale by a positive constant (used when a pipeline splits a
    /// curve into fixed density fractions).
    pub fn scale(&self, k: f64) -> MonotoneCurve {
        assert!(k > 0.0);
        let this = self.clone();
        MonotoneCurve {
            f: Arc::new(move |x| k * this.eval(x)),
            domain: self.domain,
            increasing: self.increasing,
        }
    }

    /// Shred and move: r components, each x ↦ f(r·x), carrying area 1/r.
    pub fn shred(&self, r: u32) -> Vec<MonotoneCurve> {
        assert!(r >= 1);
        let rf = r as f64;
        let domain = (self.domain.0 / rf, self.domain.1 / rf);
        (0..r)
            .map(|_| {
                let this = self.clone();
                MonotoneCurve {
                    f: Arc::new(move |x| this.eval(rf * x)),
                    domain,
                    increasing: self.increasing,
                }
            })
            .collect()
    }

    /// Stretch and paste: f₁(m·x) + … + f_m(m·x).
    pub fn stretch_paste(curves: &[MonotoneCurve]) -> MonotoneCurve {
        assert!(!curves.is_empty());
        let m = curves.len() as f64;
        let lo = curves.iter().map(|c| c.domain.0).fold(f64::NEG_INFINITY, f64::max) / m;
        let hi = curves.iter().map(|c| c.domain.1).fold(f64::INFINITY, f64::min) / m;
        let owned: Vec<MonotoneCurve> = curves.to_vec();
        let increasing = curves[0].increasing;
        MonotoneCurve {
            f: Arc::new(move |x| owned.iter().map(|c| c.eval(m * x)).sum()),
            domain: (lo, hi),
            increasing,
        }
    }

    /// Union (sort): pointwise sum on the common domain.
    pub fn union(&self, other: &MonotoneCurve) -> MonotoneCurve {
        assert_eq!(self.increasing, other.increasing);
        let a = self.clone();
        let b = other.clone();
        MonotoneCurve {
            f: Arc::new(move |x| a.eval(x) + b.eval(x)),
            domain: (
                self.domain.0.max(other.domain.0),
                self.domain.1.min(other.domain.1),
            ),
            increasing: self.increasing,
        }
    }

    /// Inverse of union: remove the parts contributed by `other`.
    pub fn difference(&self, other: &MonotoneCurve) -> MonotoneCurve {
        assert_eq!(self.increasing, other.increasing);
        let a = self.clone();
        let b = other.clone();
        MonotoneCurve::new(
            (
                self.domain.0.max(other.domain.0),
                self.domain.1.min(other.domain.1),
            ),
            self.increasing,
            move |x| a.eval(x) - b.eval(x),
        )
    }

    /// The + operator: (f⁻¹ + g⁻¹)⁻¹.
    pub fn plus(&self, other: &MonotoneCurve) -> MonotoneCurve {
        self.inverse().union(&other.inverse()).inverse()
    }

    /// Cut at an interior abscissa: restrict to the two sides.
    pub fn cut(&self, at: f64) -> (MonotoneCurve, MonotoneCurve) {
        assert!(at > self.domain.0 && at < self.domain.1, "cut point interior");
        let left = MonotoneCurve {
            f: self.f.clone(),
            domain: (self.domain.0, at),
            increasing: self.increasing,
        };
        let right = MonotoneCurve {
            f: self.f.clone(),
            domain: (at, self.domain.1),
            increasing: self.increasing,
        };
        (left, right)
    }

    /// Paste two curves whose domains abut; the seam values must agree.
    pub fn paste(left: &MonotoneCurve, right: &MonotoneCurve) -> MonotoneCurve {
        assert_eq!(left.increasing, right.increasing);
        let seam = left.domain.1;
        assert!(
            (seam - right.domain.0).abs() < 1e-9,
            "domains do not abut at the seam"
        );
        let mismatch = (left.eval(seam - 1e-9) - right.eval(seam + 1e-9)).abs();
        assert!(mismatch < 1e-6, "seam mismatch {mismatch}");
        let l = left.clone();
        let r = right.clone();
        MonotoneCurve {
            f: Arc::new(move |x| if x < seam { l.eval(x) } else { r.eval(x) }),
            domain: (left.domain.0, right.domain.1),
            increasing: left.increasing,
        }
    }

    /// Numeric area under the curve over its (truncated) domain.
    pub fn area(&self) -> f64 {
        let lo = self.domain.0.max(EDGE) + EDGE;
        let hi = if self.domain.1.is_finite() {
            self.domain.1 - EDGE
        } else {
            let mut h = lo + 1.0;
            while self.eval(h).abs() > 1e-12 && h < 1e6 {
                h += 1.0;
            }
            h
        };
        crate::numerics::integrate(&|x| self.eval(x), lo, hi, 1e-9)
    }
}

/// Re-derive Φ from the distinct-parts shape through the self-conjugate
/// pipeline: start from (1/√2)Ψ(t/√2), shred into two half-area copies,
/// conjugate and shift each by +t, reflect one branch about y = t, and paste
/// the branches at x₀ = ln 2 / c.
pub fn pipeline_selfconjugate() -> MonotoneCurve {
    let c = PI / 6f64.sqrt();
    let x0 = 2f64.ln() / c;
    // Start: the odd-distinct shape (1/√2)Ψ(t/√2).
    let start = MonotoneCurve::new((0.0, f64::INFINITY), false, |t: f64| {
        psi_closed(t / 2f64.sqrt()) / 2f64.sqrt()
    });
    // Split into two curves of half area and the same shape: t ↦ Ψ(t√2)/√2.
    let halves = start.shred(2);
    // Each half becomes its conjugate shifted up by t; the shifted conjugate
    // naturally lives on (0, x0] since the half-curve starts at height x0.
    let branch_a = halves[0].inverse().shift(1.0);
    // The second branch is reflected about the line y = t: the functional
    // inverse of the first, living on [x0, ∞).
    let branch_b = halves[1].inverse().shift(1.0).inverse();
    let _ = x0; // seam abscissa, checked by paste
    MonotoneCurve::paste(&branch_a, &branch_b)
}

/// Re-derive Ψ from the odd-parts shape h(x) = √2 Φ(x√2) through the
/// Glaisher chain: shred h into two half-area copies h(2x) (the binary-digit
/// layers), split off the doubled-part layer by un-sorting it from h, and
/// un-shred the remaining distinct layer back to full area.
pub fn pipeline_glaisher() -> MonotoneCurve {
    // Start: odd-parts limit shape in its B = 2 coordinates.
    let h = MonotoneCurve::new((0.0, f64::INFINITY), false, |x: f64| {
        2f64.sqrt() * phi_closed(x * 2f64.sqrt())
    });
    // Shred: two copies of h(2x), each of area 1/2.
    let layers = h.shred(2);
    // The doubled-parts layer is one shred copy; removing it from h leaves
    // the layer of parts kept verbatim, u(x) = Ψ(2x), of area 1/2.
    let kept = h.difference(&layers[0]);
    // Un-shred (paste the shredded pair back): Ψ(x) = u(x/2), area 1.
    let u = kept.clone();
    MonotoneCurve {
        f: Arc::new(move |x| u.eval(x / 2.0)),
        domain: (kept.domain.0 * 2.0, kept.domain.1 * 2.0),
        increasing: false,
    }
}

/// s(x) = √(3/4) Ψ(x√(3/4)) = (3/π) ln(1 + e^{−πx/4}): the limit shape of
/// distinct parts ≡ 0, 1, 2 mod 4.
fn lebesgue_s() -> MonotoneCurve {
    MonotoneCurve::new((0.0, f64::INFINITY), false, |x: f64| {
        3.0 / PI * (1.0 + (-PI * x / 4.0).exp()).ln()
    })
}

/// Intermediate stage of the Lebesgue pipeline, exposed for the CLI.
pub struct LebesgueStage {
    pub name: &'static str,
    pub curve: MonotoneCurve,
}

/// Compose the eleven intermediate curves of the Bressoud-bijection pipeline
/// and return all stages; the final stage equals m⁻¹ on (0, x₀).
pub fn pipeline_lebesgue_stages() -> Vec<LebesgueStage> {
    let s = lebesgue_s();
    let s0 = s.eval(1e-14); // s(0) = (3/π) ln 2
    let eta0 = 2.0 / 3.0 * s.eval(2.0 * s0 / 3.0);
    let x0 = eta0 + s0 / 3.0;

    // Split by mod-3 densities: α ∪ β carries 2/3 of the parts, γ carries 1/3.
    let two_thirds = s.scale(2.0 / 3.0);
    let c_curve = s.scale(1.0 / 3.0);

    // a: flat at η₀ until 2s(0)/3, then (2/3)s; b: the sliver below η₀.
    let a_curve = {
        let t = two_thirds.clone();
        MonotoneCurve::new((0.0, f64::INFINITY), false, move |x: f64| {
            if x <= 2.0 * s0 / 3.0 {
                eta0
            } else {
                t.eval(x)
            }
        })
    };
    let b_curve = {
        let t = two_thirds.clone();
        MonotoneCurve::new((0.0, 2.0 * s0 / 3.0), false, move |x: f64| {
            t.eval(x) - eta0
        })
    };

    // ν: stretch-paste the two half-length copies of β, then sort in γ⁻¹.
    let b_pair = [b_curve.clone(), b_curve.clone()];
    let v_curve = MonotoneCurve::stretch_paste(&b_pair).union(&c_curve.inverse());

    // Subtract the staircase ρ_s (slope −2 through x₀) from α and ν:
    // d = a⁻¹ − 2(x₀ − x) and e = v − 2(s(0)/3 − x).
    let d_curve = a_curve.inverse().move_by(-2.0 * x0).shift(2.0);
    let e_curve = v_curve.move_by(-2.0 * s0 / 3.0).shift(2.0);

    // Sort δ and ξ: the + operator.
    let t_curve = d_curve.plus(&e_curve);

    // Add the staircase back: m⁻¹(x) = 2(x₀ − x) + t(x).
    let m_inv = t_curve.move_by(2.0 * x0).shift(-2.0);

    vec![
        LebesgueStage { name: "s", curve: s },
        LebesgueStage { name: "a", curve: a_curve },
        LebesgueStage { name: "b", curve: b_curve },
        LebesgueStage { name: "c", curve: c_curve },
        LebesgueStage { name: "v", curve: v_curve },
        LebesgueStage { name: "d", curve: d_curve },
        LebesgueStage { name: "e", curve: e_curve },
        LebesgueStage { name: "t", curve: t_curve },
        LebesgueStage { name: "minv", curve: m_inv },
    ]
}

/// The final curve of the Lebesgue pipeline: the conjugate limit shape m⁻¹.
pub fn pipeline_lebesgue() -> MonotoneCurve {
    pipeline_lebesgue_stages().pop().unwrap().curve
}
