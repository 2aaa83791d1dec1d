//! Allowed part-size sets u_1 < u_2 < …, either polynomial or an explicit list.

/// A strictly increasing set of allowed part sizes.
///
/// The polynomial form stores coefficients of u_k = a_r k^r + … + a_0
/// (highest degree first). Coefficients may be non-integer (e.g. the
/// triangular numbers k(k+1)/2) as long as every u_k is a positive integer.
#[derive(Debug, Clone, PartialEq)]
pub enum PartSizeSet {
    Poly(Vec<f64>),
    Explicit(Vec<u64>),
}

impl PartSizeSet {
    pub fn integers() -> PartSizeSet {
        PartSizeSet::Poly(vec![1.0, 0.0])
    }

    /// u_k = k(k+1)/2.
    pub fn triangular() -> PartSizeSet {
        PartSizeSet::Poly(vec![0.5, 0.5, 0.0])
    }

    /// u_k = binom(r+k-1, r); r = 2 gives the triangular numbers.
    pub fn binomial(r: u32) -> PartSizeSet {
        // binom(r+k-1, r) = (k)(k+1)…(k+r-1)/r! — expand the falling product.
        let mut coeffs = vec![1.0]; // polynomial in k, lowest degree last
        for j in 0..r {
            // multiply by (k + j)
            let mut next = vec![0.0; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i] += c; // k * c k^i
                next[i + 1] += j as f64 * c;
            }
            coeffs = next;
        }
        let fact: f64 = (1..=r as u64).map(|x| x as f64).product();
        for c in &mut coeffs {
            *c /= fact.max(1.0);
        }
        PartSizeSet::Poly(coeffs)
    }

    /// u_k = (B^{1/r} k)^r = B k^r for integer B… used for m^r k^r sets.
    pub fn scaled_powers(b: u64, r: u32) -> PartSizeSet {
        let mut coeffs = vec![0.0; r as usize + 1];
        coeffs[0] = b as f64;
        PartSizeSet::Poly(coeffs)
    }

    pub fn explicit(mut sizes: Vec<u64>) -> Result<PartSizeSet, String> {
        sizes.sort_unstable();
        sizes.dedup();
        if sizes.iter().any(|&u| u == 0) {
            return Err("part sizes must be positive".into());
        }
        if sizes.is_empty() {
            return Err("empty part-size set".into());
        }
        Ok(PartSizeSet::Explicit(sizes))
    }

    /// Degree r of the polynomial (1 for explicit sets, which are not
    /// polynomial — callers needing asymptotics must use the Poly form).
    pub fn degree(&self) -> Option<u32> {
        match self {
            PartSizeSet::Poly(c) => Some((c.len() - 1) as u32),
            PartSizeSet::Explicit(_) => None,
        }
    }

    /// Leading coefficient B = a_r.
    pub fn leading(&self) -> Option<f64> {
        match self {
            PartSizeSet::Poly(c) => Some(c[0]),
            PartSizeSet::Explicit(_) => None,
        }
    }

    /// Second coefficient E = a_{r−1} (0 for degree-0 … cannot happen, r ≥ 1).
    pub fn second(&self) -> Option<f64> {
        match self {
            PartSizeSet::Poly(c) => Some(if c.len() >= 2 { c[1] } else { 0.0 }),
            PartSizeSet::Explicit(_) => None,
        }
    }

    /// u_k for k ≥ 1.
    pub fn value(&self, k: u64) -> u64 {
        match self {
            PartSizeSet::Poly(c) => {
                let x = k as f64;
                let mut acc = 0.0;
                for &coef in c {
                    acc = acc * x + coef;
                }
                let rounded = acc.round();
                debug_assert!(
                    (acc - rounded).abs() < 1e-6 && rounded >= 1.0,
                    "u_{k} = {acc} is not a positive integer"
                );
                rounded as u64
            }
            PartSizeSet::Explicit(v) => v[(k - 1) as usize],
        }
    }

    /// All part sizes ≤ n, ascending.
    pub fn upto(&self, n: u64) -> Vec<u64> {
        match self {
            PartSizeSet::Poly(_) => {
                let mut out = Vec::new();
                let mut k = 1;
                loop {
                    let u = self.value(k);
                    if u > n {
                        break;
                    }
                    out.push(u);
                    k += 1;
                }
                out
            }
            PartSizeSet::Explicit(v) => v.iter().copied().take_while(|&u| u <= n).collect(),
        }
    }

    pub fn contains(&self, u: u64) -> bool {
        match self {
            PartSizeSet::Poly(_) => {
                let mut k = 1;
                loop {
                    let v = self.value(k);
                    if v == u {
                        return true;
                    }
                    if v > u {
                        return false;
                    }
                    k += 1;
                }
            }
            PartSizeSet::Explicit(v) => v.binary_search(&u).is_ok(),
        }
    }

    /// gcd of the set (in practice the gcd stabilizes after a few values).
    pub fn gcd(&self) -> u64 {
        let values: Vec<u64> = match self {
            PartSizeSet::Poly(_) => (1..=64).map(|k| self.value(k)).collect(),
            PartSizeSet::Explicit(v) => v.clone(),
        };
        values.into_iter().fold(0, gcd)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
