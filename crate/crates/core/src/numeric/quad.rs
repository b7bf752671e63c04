use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule by Newton iteration on the Legendre
    /// three-term recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Maps the rule's nodes onto [a, b].
    pub fn mapped_nodes(&self, a: f64, b: f64) -> impl Iterator<Item = f64> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes.iter().map(move |&u| mid + half * u)
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let s: f64 = self
            .mapped_nodes(a, b)
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .sum();
        half * s
    }

    /// Evaluates the i-th Lagrange basis polynomial through the nodes at `u`.
    fn lagrange(&self, i: usize, u: f64) -> f64 {
        let xi = self.nodes[i];
        self.nodes
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &xk)| (u - xk) / (xi - xk))
            .product()
    }

    /// Weights `w` such that `sum_i w[i] f(x_i)` integrates the interpolant
    /// of `f` through the nodes over [-1, -1 + 2 * fraction].
    pub fn partial_weights(&self, fraction: f64) -> Vec<f64> {
        let upper = -1.0 + 2.0 * fraction;
        let inner = GaussLegendre::new(self.len());
        let half = 0.5 * (upper + 1.0);
        (0..self.len())
            .map(|i| {
                inner
                    .mapped_nodes(-1.0, upper)
                    .zip(inner.weights())
                    .map(|(u, w)| w * self.lagrange(i, u))
                    .sum::<f64>()
                    * half
            })
            .collect()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A Gauss-Legendre panel split into `steps` equal sub-steps, with the
/// partial weights needed to read off the running integral at every
/// sub-step boundary from the same node values.
#[derive(Debug, Clone)]
pub struct PanelRule {
    pub rule: GaussLegendre,
    pub steps: usize,
    /// `partial[j]` integrates over the first `j + 1` sub-steps, j < steps - 1.
    pub partial: Vec<Vec<f64>>,
}

impl PanelRule {
    pub fn new(rule: GaussLegendre, steps: usize) -> Self {
        let partial = (1..steps)
            .map(|j| rule.partial_weights(j as f64 / steps as f64))
            .collect();
        Self { rule, steps, partial }
    }
}

/// Outcome of [`integrate_adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveResult {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature. Bisects the interval
/// with the largest error estimate until the total estimate falls below
/// `max(abs_tol, rel_tol * |value|)` or `max_intervals` is reached.
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_intervals: usize,
) -> AdaptiveResult {
    if a == b {
        return AdaptiveResult { value: 0.0, error: 0.0, intervals: 0 };
    }
    let (value, error) = gk15(&mut f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, error });
    let mut total = value;
    let mut total_err = error;
    while total_err > abs_tol.max(rel_tol * total.abs()) && heap.len() < max_intervals {
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Piece { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Piece { a: mid, b: worst.b, value: v2, error: e2 });
    }
    // Re-sum from the pieces to shed the drift of the running updates.
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    AdaptiveResult { value, error, intervals: heap.len() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule() {
        let g = GaussLegendre::new(2);
        let r = 1.0 / 3f64.sqrt();
        assert!((g.nodes()[0] + r).abs() < 1e-15);
        assert!((g.nodes()[1] - r).abs() < 1e-15);
        assert!((g.weights()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn exact_to_degree_2n_minus_1() {
        for n in [3, 8, 12] {
            let g = GaussLegendre::new(n);
            let wsum: f64 = g.weights().iter().sum();
            assert!((wsum - 2.0).abs() < 1e-14);
            for deg in 0..2 * n {
                let got = g.integrate(0.0, 1.0, |x| x.powi(deg as i32));
                let want = 1.0 / (deg as f64 + 1.0);
                assert!((got - want).abs() < 1e-14, "n={n} deg={deg}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn partial_weights_integrate_low_degree_exactly() {
        let g = GaussLegendre::new(8);
        for &frac in &[0.2, 0.5, 0.8, 1.0] {
            let w = g.partial_weights(frac);
            let upper = -1.0 + 2.0 * frac;
            for deg in 0..8 {
                let got: f64 = g
                    .nodes()
                    .iter()
                    .zip(&w)
                    .map(|(&u, &wi)| wi * u.powi(deg))
                    .sum();
                let want = (upper.powi(deg + 1) - (-1f64).powi(deg + 1)) / (deg as f64 + 1.0);
                assert!((got - want).abs() < 1e-13, "frac={frac} deg={deg}");
            }
        }
        // The full fraction reproduces the Gauss weights.
        let full = g.partial_weights(1.0);
        for (a, b) in full.iter().zip(g.weights()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn kronrod_weights_sum_to_two() {
        let k: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let g: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn kronrod_exact_for_degree_22() {
        let mut f = |x: f64| x.powi(21) + x.powi(22);
        let (v, _) = gk15(&mut f, 0.0, 1.0);
        assert!((v - (1.0 / 22.0 + 1.0 / 23.0)).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let r = integrate_adaptive(|x| (50.0 * x).sin().powi(2), 0.0, 3.0, 1e-12, 0.0, 10_000);
        let want = 1.5 - (300.0f64).sin() / 200.0;
        assert!((r.value - want).abs() < 1e-10, "{} vs {want}", r.value);
    }

    #[test]
    fn adaptive_zero_width() {
        let r = integrate_adaptive(|x| x, 2.0, 2.0, 1e-10, 0.0, 10);
        assert_eq!(r.value, 0.0);
    }
}
