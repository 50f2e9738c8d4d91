//! Upper and lower energy bounds from structural and spectral parameters:
//! Zagreb index, degree extremes, spectral radius, and the determinant term,
//! plus the comparison rules between them.
//!
//! Every bound here is a theorem, so a `holds = false` flag on valid input
//! is a counterexample to the implementation, not to the mathematics; the
//! verification suites treat it that way.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::spectra::{self, AdjacencyMatrix, DEFAULT_EIGEN_TOL, DEFAULT_EXACT_CAP};
use crate::Result;

/// Tolerance for bound checks against the numeric energy.
pub const BOUND_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub side: Side,
    pub value: f64,
    pub holds: bool,
    pub slack: f64,
}

/// `|det A|`, exact when the dimension allows it.
#[derive(Debug, Clone, PartialEq)]
pub enum DetValue {
    Exact(BigInt),
    /// Product of numeric eigenvalue magnitudes; reduced confidence.
    Numeric(f64),
}

impl DetValue {
    pub fn approx(&self) -> f64 {
        match self {
            DetValue::Exact(d) => {
                let abs = d.abs();
                abs.to_f64().unwrap_or(f64::INFINITY)
            }
            DetValue::Numeric(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DetValue::Exact(_))
    }
}

/// Which of the two average-degree/Zagreb lower bounds wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonCase {
    /// `delta^2 / Delta >= n / (s-1)` forces `b <= B`.
    BLeqB,
    /// `Delta^2 / delta <= n / (s-1)` forces `B <= b`.
    BGeqB,
    /// d-regular with `d = n / (s-1)`.
    RegularEqual,
    /// d-regular with `d > n / (s-1)`, so `b < B`.
    RegularBLess,
    /// d-regular with `d < n / (s-1)`, so `b > B`.
    RegularBGreater,
    Indeterminate,
}

impl ComparisonCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComparisonCase::BLeqB => "b<=B",
            ComparisonCase::BGeqB => "B<=b",
            ComparisonCase::RegularEqual => "regular-equal",
            ComparisonCase::RegularBLess => "regular-b<B",
            ComparisonCase::RegularBGreater => "regular-b>B",
            ComparisonCase::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonVerdict {
    pub b: f64,
    pub big_b: f64,
    pub case: ComparisonCase,
}

/// Which of the two squared-energy lower bounds is sharper:
/// `2 sum lambda^2` versus `sum lambda^2 + n(n-1)|det A|^(2/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaComparison {
    SumSquaresSharper,
    DeterminantSharper,
    Equal,
}

impl LemmaComparison {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaComparison::SumSquaresSharper => "sum-squares-sharper",
            LemmaComparison::DeterminantSharper => "determinant-sharper",
            LemmaComparison::Equal => "equal",
        }
    }
}

/// Everything the bound suite measured on one hypergraph.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub corank: usize,
    pub max_degree: u64,
    pub min_degree: u64,
    pub avg_degree: Ratio<i64>,
    pub zagreb: u64,
    pub lambda1: f64,
    pub energy: f64,
    /// Exact `sum lambda^2 = sum_{i != j} a_ij^2`.
    pub sum_squares: u128,
    pub det_abs: DetValue,
    pub entries: Vec<BoundEntry>,
    /// `(s-1) delta <= lambda1 <= (r-1) Delta`.
    pub lambda1_lower: f64,
    pub lambda1_upper: f64,
    pub lambda1_holds: bool,
    /// Lower bounds on `sum lambda^2` and whether each holds.
    pub sum_squares_bounds: Vec<(&'static str, f64, bool)>,
    pub comparison: ComparisonVerdict,
    pub lemma_comparison: LemmaComparison,
}

/// Zagreb index: the sum of squared vertex degrees.
pub fn zagreb(h: &Hypergraph) -> u64 {
    h.degree_vector().iter().map(|&d| d * d).sum()
}

struct Params {
    n: u64,
    m: u64,
    rank: u64,
    corank: u64,
    max_degree: u64,
    min_degree: u64,
    degree_sum: u64,
    zagreb: u64,
}

fn params(h: &Hypergraph) -> Result<Params> {
    if h.m() == 0 {
        return Err(Error::NoEdges);
    }
    let (rank, corank) = h.rank_corank()?;
    let stats = h.degree_stats()?;
    Ok(Params {
        n: h.n() as u64,
        m: h.m() as u64,
        rank: rank as u64,
        corank: corank as u64,
        max_degree: stats.max,
        min_degree: stats.min,
        degree_sum: h.degree_sum(),
        zagreb: zagreb(h),
    })
}

/// `E <= sqrt(n (r-1) Z)` and the weaker `E <= sqrt(n m (r^2 - r) Delta)`.
pub fn upper_zagreb(h: &Hypergraph) -> Result<(f64, f64)> {
    let p = params(h)?;
    Ok(upper_zagreb_values(&p))
}

fn upper_zagreb_values(p: &Params) -> (f64, f64) {
    let r1 = p.rank.saturating_sub(1);
    let first = (p.n as u128 * r1 as u128 * p.zagreb as u128) as f64;
    let second = (p.n as u128 * p.m as u128 * (p.rank * r1) as u128 * p.max_degree as u128) as f64;
    (libm::sqrt(first), libm::sqrt(second))
}

/// `E <= lambda1 + sqrt((n-1) [(r-1) Z - lambda1^2])`.
pub fn upper_lambda1(h: &Hypergraph) -> Result<f64> {
    let p = params(h)?;
    let lambda1 = spectra::spectral_radius(h)?;
    Ok(upper_lambda1_value(&p, lambda1))
}

fn upper_lambda1_value(p: &Params, lambda1: f64) -> f64 {
    let r1 = p.rank.saturating_sub(1);
    let inner = ((r1 as u128 * p.zagreb as u128) as f64 - lambda1 * lambda1).max(0.0);
    lambda1 + libm::sqrt((p.n.saturating_sub(1)) as f64 * inner)
}

/// `(s-1) delta <= lambda1 <= (r-1) Delta`.
pub fn lambda1_degree_bounds(h: &Hypergraph) -> Result<(f64, f64)> {
    let p = params(h)?;
    Ok((
        (p.corank.saturating_sub(1) * p.min_degree) as f64,
        (p.rank.saturating_sub(1) * p.max_degree) as f64,
    ))
}

/// Upper bound specialized to r-uniform d-regular hypergraphs.
pub fn upper_regular(h: &Hypergraph) -> Result<f64> {
    let p = params(h)?;
    if h.uniformity().is_none() || !h.is_regular() {
        return Err(Error::NotRegularUniform);
    }
    let d = p.max_degree;
    let r1 = p.rank.saturating_sub(1);
    // (n-1) (r-1) d^2 (n - (r-1))
    let inner = (p.n.saturating_sub(1) as u128)
        * (r1 as u128)
        * (d as u128 * d as u128)
        * ((p.n - r1) as u128);
    Ok((r1 * d) as f64 + libm::sqrt(inner as f64))
}

/// The determinant-free lower bounds, as `(name, value)` pairs.
pub fn lower_bounds(h: &Hypergraph) -> Result<Vec<(&'static str, f64)>> {
    let p = params(h)?;
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    let sum_squares = a.sum_offdiagonal_squares();
    let lambda1 = spectra::spectral_radius(h)?;
    Ok(lower_bound_values(&p, sum_squares, lambda1))
}

fn lower_bound_values(p: &Params, sum_squares: u128, lambda1: f64) -> Vec<(&'static str, f64)> {
    let s1 = p.corank.saturating_sub(1);
    let mut out = vec![
        ("lema-cota1", libm::sqrt(2.0 * sum_squares as f64)),
        (
            "cota-inf1",
            libm::sqrt(2.0 * (s1 as u128 * p.degree_sum as u128) as f64),
        ),
        (
            "cota-inf2",
            libm::sqrt(2.0 * (s1 as u128 * s1 as u128 * p.zagreb as u128) as f64 / p.n as f64),
        ),
    ];
    if p.n >= 2 {
        out.push((
            "cota-inf3",
            libm::sqrt(2.0 * p.n as f64 / (p.n - 1) as f64 * lambda1 * lambda1),
        ));
    }
    out
}

/// The determinant-based lower bounds. `|det A|` is exact up to `cap`.
pub fn det_lower_bounds(h: &Hypergraph) -> Result<Vec<(&'static str, f64)>> {
    det_lower_bounds_capped(h, DEFAULT_EXACT_CAP)
}

pub fn det_lower_bounds_capped(h: &Hypergraph, cap: usize) -> Result<Vec<(&'static str, f64)>> {
    let p = params(h)?;
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    let spectrum = spectra::spectrum_numeric(&a, DEFAULT_EIGEN_TOL)?;
    let det = det_value(&a, &spectrum.values, cap);
    let lambda1 = spectrum
        .values
        .iter()
        .map(|x| libm::fabs(*x))
        .fold(0.0, f64::max);
    Ok(det_lower_bound_values(
        &p,
        a.sum_offdiagonal_squares(),
        lambda1,
        &det,
    ))
}

fn det_value(a: &AdjacencyMatrix, values: &[f64], cap: usize) -> DetValue {
    if a.n() <= cap {
        DetValue::Exact(a.det_exact())
    } else {
        DetValue::Numeric(values.iter().map(|x| libm::fabs(*x)).product())
    }
}

/// `n (n-1) |det A|^(2/n)` shared by the determinant bounds.
fn det_term(n: u64, det: &DetValue) -> f64 {
    let abs = det.approx();
    if abs == 0.0 {
        return 0.0;
    }
    (n * (n - 1)) as f64 * libm::pow(abs, 2.0 / n as f64)
}

fn det_lower_bound_values(
    p: &Params,
    sum_squares: u128,
    lambda1: f64,
    det: &DetValue,
) -> Vec<(&'static str, f64)> {
    let s1 = p.corank.saturating_sub(1);
    let dterm = det_term(p.n, det);
    let mut out = vec![
        ("lema-cota2", libm::sqrt(sum_squares as f64 + dterm)),
        (
            "cota-inf4",
            libm::sqrt((s1 as u128 * p.degree_sum as u128) as f64 + dterm),
        ),
        (
            "cota-inf5",
            libm::sqrt(
                (s1 as u128 * s1 as u128 * p.zagreb as u128) as f64 / p.n as f64 + dterm,
            ),
        ),
    ];
    if p.n >= 2 {
        out.push((
            "cota-inf6",
            libm::sqrt(p.n as f64 / (p.n - 1) as f64 * lambda1 * lambda1 + dterm),
        ));
    }
    out
}

/// Compare `b(H) = sqrt(2 n (s-1) d)` with `B(H) = sqrt(2 (s-1)^2 Z / n)`
/// using exact integer arithmetic for the case split.
pub fn compare_lower_bounds(h: &Hypergraph) -> Result<ComparisonVerdict> {
    let p = params(h)?;
    let s1 = p.corank.saturating_sub(1) as u128;
    let b = libm::sqrt(2.0 * (s1 * p.degree_sum as u128) as f64);
    let big_b = libm::sqrt(2.0 * (s1 * s1 * p.zagreb as u128) as f64 / p.n as f64);
    let n = p.n as u128;
    let delta = p.min_degree as u128;
    let big_delta = p.max_degree as u128;
    let case = if h.is_regular() {
        // d (s-1) versus n decides the sign of B - b exactly
        let lhs = big_delta * s1;
        if lhs == n {
            ComparisonCase::RegularEqual
        } else if lhs > n {
            ComparisonCase::RegularBLess
        } else {
            ComparisonCase::RegularBGreater
        }
    } else if delta * delta * s1 >= n * big_delta {
        ComparisonCase::BLeqB
    } else if big_delta * big_delta * s1 <= n * delta {
        ComparisonCase::BGeqB
    } else {
        ComparisonCase::Indeterminate
    };
    Ok(ComparisonVerdict { b, big_b, case })
}

/// Run every bound with default settings.
pub fn full_report(h: &Hypergraph) -> Result<BoundsReport> {
    full_report_capped(h, DEFAULT_EXACT_CAP)
}

pub fn full_report_capped(h: &Hypergraph, cap: usize) -> Result<BoundsReport> {
    let p = params(h)?;
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    let spectrum = spectra::spectrum_numeric(&a, DEFAULT_EIGEN_TOL)?;
    let energy = spectrum.energy();
    let lambda1 = spectrum
        .values
        .iter()
        .map(|x| libm::fabs(*x))
        .fold(0.0, f64::max);
    let sum_squares = a.sum_offdiagonal_squares();
    let det = det_value(&a, &spectrum.values, cap);

    let mut entries = Vec::new();
    let mut push = |name: &'static str, side: Side, value: f64| {
        let holds = match side {
            Side::Upper => value >= energy - BOUND_TOL,
            Side::Lower => value <= energy + BOUND_TOL,
        };
        entries.push(BoundEntry {
            name,
            side,
            value,
            holds,
            slack: libm::fabs(value - energy),
        });
    };

    let (sup1, sup1b) = upper_zagreb_values(&p);
    push("cota-sup1", Side::Upper, sup1);
    push("cota-sup1b", Side::Upper, sup1b);
    push("cota-sup2", Side::Upper, upper_lambda1_value(&p, lambda1));
    if h.uniformity().is_some() && h.is_regular() {
        push("cota-sup-regular", Side::Upper, upper_regular(h)?);
    }
    for (name, value) in lower_bound_values(&p, sum_squares, lambda1) {
        push(name, Side::Lower, value);
    }
    for (name, value) in det_lower_bound_values(&p, sum_squares, lambda1, &det) {
        push(name, Side::Lower, value);
    }

    let lambda1_lower = (p.corank.saturating_sub(1) * p.min_degree) as f64;
    let lambda1_upper = (p.rank.saturating_sub(1) * p.max_degree) as f64;
    let lambda1_holds =
        lambda1_lower - BOUND_TOL <= lambda1 && lambda1 <= lambda1_upper + BOUND_TOL;

    let s1 = p.corank.saturating_sub(1);
    let sum_squares_f = sum_squares as f64;
    let sum_squares_bounds: Vec<(&'static str, f64, bool)> = {
        let mut v = vec![
            (
                "sumsq-degree",
                (s1 as u128 * p.degree_sum as u128) as f64,
            ),
            (
                "sumsq-zagreb",
                (s1 as u128 * s1 as u128 * p.zagreb as u128) as f64 / p.n as f64,
            ),
        ];
        if p.n >= 2 {
            v.push((
                "sumsq-lambda1",
                p.n as f64 / (p.n - 1) as f64 * lambda1 * lambda1,
            ));
        }
        v.into_iter()
            .map(|(name, value)| (name, value, value <= sum_squares_f + BOUND_TOL))
            .collect()
    };

    let dterm = det_term(p.n, &det);
    let lemma_comparison = if libm::fabs(sum_squares_f - dterm) <= 1e-9 {
        LemmaComparison::Equal
    } else if sum_squares_f > dterm {
        LemmaComparison::SumSquaresSharper
    } else {
        LemmaComparison::DeterminantSharper
    };

    Ok(BoundsReport {
        n: h.n(),
        m: h.m(),
        rank: p.rank as usize,
        corank: p.corank as usize,
        max_degree: p.max_degree,
        min_degree: p.min_degree,
        avg_degree: h.degree_stats()?.avg,
        zagreb: p.zagreb,
        lambda1,
        energy,
        sum_squares,
        det_abs: det,
        entries,
        lambda1_lower,
        lambda1_upper,
        lambda1_holds,
        sum_squares_bounds,
        comparison: compare_lower_bounds(h)?,
        lemma_comparison,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::hypergraph::Mode;

    fn k5_3() -> Hypergraph {
        constructions::complete_kgraph(5, 3).unwrap()
    }

    fn perfect_matching(pairs: usize) -> Hypergraph {
        let edges: Vec<Vec<String>> = (0..pairs)
            .map(|i| vec![alloc::format!("a{i}"), alloc::format!("b{i}")])
            .collect();
        let refs: Vec<&[String]> = edges.iter().map(|e| e.as_slice()).collect();
        Hypergraph::from_edges(Mode::Strict, &refs).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
        let mut edges: Vec<Vec<String>> = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push(vec![alloc::format!("l{i}"), alloc::format!("r{j}")]);
            }
        }
        let refs: Vec<&[String]> = edges.iter().map(|e| e.as_slice()).collect();
        Hypergraph::from_edges(Mode::Strict, &refs).unwrap()
    }

    #[test]
    fn zagreb_values() {
        let single = constructions::complete_kgraph(3, 3).unwrap();
        assert_eq!(zagreb(&single), 3);
        assert_eq!(zagreb(&k5_3()), 180);
        assert_eq!(zagreb(&constructions::hyperstar(4, 3).unwrap()), 15);
    }

    #[test]
    fn upper_zagreb_chain_and_value() {
        let h = k5_3();
        let (b1, b2) = upper_zagreb(&h).unwrap();
        assert!((b1 - libm::sqrt(1800.0)).abs() < 1e-9);
        assert!(b1 <= b2 + 1e-9);
        assert!(b1 >= 24.0 - 1e-6);
        let edgeless = Hypergraph::with_vertices(Mode::Strict, &["x"], &[]).unwrap();
        assert_eq!(upper_zagreb(&edgeless).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn upper_zagreb_tight_on_perfect_matching() {
        let h = perfect_matching(4);
        let (b1, _) = upper_zagreb(&h).unwrap();
        let energy = spectra::energy_value(&h).unwrap();
        assert!((b1 - 8.0).abs() < 1e-9);
        assert!((energy - 8.0).abs() < 1e-9);
    }

    #[test]
    fn upper_lambda1_values() {
        // K2: 1 + sqrt(1 * (2 - 1)) = 2 = energy
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        assert!((upper_lambda1(&k2).unwrap() - 2.0).abs() < 1e-9);
        // complete 3-graph on 5: 12 + sqrt(4 (360 - 144))
        let v = upper_lambda1(&k5_3()).unwrap();
        assert!((v - (12.0 + libm::sqrt(864.0))).abs() < 1e-8);
        // single 3-edge: 2 + sqrt(2 (6 - 4)) = 4 = energy
        let e3 = constructions::complete_kgraph(3, 3).unwrap();
        assert!((upper_lambda1(&e3).unwrap() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn lambda1_degree_window() {
        let (lo, hi) = lambda1_degree_bounds(&k5_3()).unwrap();
        assert_eq!((lo, hi), (12.0, 12.0));
        let star = constructions::hyperstar(4, 3).unwrap();
        let (lo, hi) = lambda1_degree_bounds(&star).unwrap();
        assert_eq!((lo, hi), (2.0, 6.0));
        let lam = spectra::spectral_radius(&star).unwrap();
        assert!(lo - 1e-6 <= lam && lam <= hi + 1e-6);
        // isolated vertex forces delta = 0
        let h = Hypergraph::with_vertices(Mode::Strict, &["a", "b", "c"], &[&["a", "b"]])
            .unwrap();
        let (lo, hi) = lambda1_degree_bounds(&h).unwrap();
        assert_eq!((lo, hi), (0.0, 1.0));
    }

    #[test]
    fn regular_bound() {
        let v = upper_regular(&k5_3()).unwrap();
        assert!((v - (12.0 + libm::sqrt(864.0))).abs() < 1e-8);
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        assert!((upper_regular(&k2).unwrap() - 2.0).abs() < 1e-12);
        let star = constructions::star(4).unwrap();
        assert_eq!(upper_regular(&star).unwrap_err(), Error::NotRegularUniform);
    }

    #[test]
    fn lower_bounds_hold() {
        let h = k5_3();
        let energy = spectra::energy_value(&h).unwrap();
        for (name, value) in lower_bounds(&h).unwrap() {
            assert!(value <= energy + 1e-6, "{name} = {value} vs {energy}");
        }
    }

    #[test]
    fn lower_bound_equalities() {
        // complete bipartite: cota-inf1 is tight
        let h = complete_bipartite(2, 3);
        let energy = spectra::energy_value(&h).unwrap();
        let bounds = lower_bounds(&h).unwrap();
        let inf1 = bounds.iter().find(|(n, _)| *n == "cota-inf1").unwrap().1;
        assert!((inf1 - energy).abs() < 1e-9);
        assert!((inf1 - 2.0 * libm::sqrt(6.0)).abs() < 1e-9);

        // K2: cota-inf3 tight
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        let bounds = lower_bounds(&k2).unwrap();
        let inf3 = bounds.iter().find(|(n, _)| *n == "cota-inf3").unwrap().1;
        assert!((inf3 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn cota_inf2_strictly_below_on_k2() {
        // the Zagreb lower bound is not attained even on a single 2-edge
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        let bounds = lower_bounds(&k2).unwrap();
        let inf2 = bounds.iter().find(|(n, _)| *n == "cota-inf2").unwrap().1;
        assert!((inf2 - libm::sqrt(2.0)).abs() < 1e-12);
        assert!(inf2 < 2.0 - 1e-6);
    }

    #[test]
    fn det_bounds_tight_on_k2() {
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        let bounds = det_lower_bounds(&k2).unwrap();
        let cota2 = bounds.iter().find(|(n, _)| *n == "lema-cota2").unwrap().1;
        assert!((cota2 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn det_bounds_hold_on_examples() {
        for h in [
            k5_3(),
            constructions::hyperstar(4, 3).unwrap(),
            constructions::complete_kgraph(5, 4).unwrap(),
        ] {
            let energy = spectra::energy_value(&h).unwrap();
            for (name, value) in det_lower_bounds(&h).unwrap() {
                assert!(value <= energy + 1e-6, "{name} = {value} vs {energy}");
            }
        }
    }

    #[test]
    fn comparison_cases() {
        // cyclic 3-uniform 3-regular on 6 vertices: d = n/(s-1) = 3
        let labels: Vec<String> = (0..6).map(|i| alloc::format!("{i}")).collect();
        let edges: Vec<Vec<String>> = (0..6)
            .map(|i| {
                (0..3)
                    .map(|d| alloc::format!("{}", (i + d) % 6))
                    .collect()
            })
            .collect();
        let refs: Vec<&[String]> = edges.iter().map(|e| e.as_slice()).collect();
        let h = Hypergraph::with_vertices(Mode::Strict, &labels, &refs).unwrap();
        let v = compare_lower_bounds(&h).unwrap();
        assert_eq!(v.case, ComparisonCase::RegularEqual);
        assert!((v.b - v.big_b).abs() < 1e-9);
        assert!((v.b - libm::sqrt(72.0)).abs() < 1e-9);

        let v = compare_lower_bounds(&k5_3()).unwrap();
        assert_eq!(v.case, ComparisonCase::RegularBLess);
        assert!((v.b - libm::sqrt(120.0)).abs() < 1e-9);
        assert!((v.big_b - libm::sqrt(288.0)).abs() < 1e-9);
        assert!(v.b < v.big_b);

        let v = compare_lower_bounds(&perfect_matching(4)).unwrap();
        assert_eq!(v.case, ComparisonCase::RegularBGreater);
        assert!(v.b > v.big_b);
        assert!((v.b - 4.0).abs() < 1e-9);
    }

    #[test]
    fn full_report_all_hold() {
        for h in [
            k5_3(),
            constructions::complete_kgraph(5, 4).unwrap(),
            constructions::hyperstar(4, 3).unwrap(),
            perfect_matching(3),
            complete_bipartite(2, 3),
        ] {
            let report = full_report(&h).unwrap();
            for entry in &report.entries {
                assert!(entry.holds, "{} fails on n={}", entry.name, report.n);
            }
            assert!(report.lambda1_holds);
            for (name, _, holds) in &report.sum_squares_bounds {
                assert!(holds, "{name} fails");
            }
        }
    }

    #[test]
    fn lemma_comparison_cases() {
        // singular adjacency: zero eigenvalue, determinant term vanishes
        let star = constructions::star(4).unwrap();
        let report = full_report(&star).unwrap();
        assert_eq!(report.lemma_comparison, LemmaComparison::SumSquaresSharper);
        assert_eq!(report.det_abs.approx(), 0.0);

        // a graph with |det A| >= 1: determinant bound wins
        let k2 = constructions::complete_kgraph(2, 2).unwrap();
        let report = full_report(&k2).unwrap();
        assert_eq!(report.lemma_comparison, LemmaComparison::Equal);

        // 5-cycle: |det| = 2, n(n-1) 2^(2/5) > sum of squares 10
        let labels: Vec<String> = (0..5).map(|i| alloc::format!("{i}")).collect();
        let edges: Vec<Vec<String>> = (0..5)
            .map(|i| vec![alloc::format!("{i}"), alloc::format!("{}", (i + 1) % 5)])
            .collect();
        let refs: Vec<&[String]> = edges.iter().map(|e| e.as_slice()).collect();
        let c5 = Hypergraph::with_vertices(Mode::Strict, &labels, &refs).unwrap();
        let report = full_report(&c5).unwrap();
        assert_eq!(report.lemma_comparison, LemmaComparison::DeterminantSharper);
    }
}
