//! Codegree adjacency matrices, numeric spectra, energy, and the exact
//! integer path (characteristic polynomial, integer eigenvalues, parity).
//!
//! The adjacency matrix of a hypergraph has `a_ij = d({i, j})` for `i != j`
//! and zero diagonal: the number of edges containing both endpoints, with
//! multiplicity. The energy is the sum of the absolute values of its
//! eigenvalues; because the trace vanishes, it equals twice the sum of the
//! positive eigenvalues.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::eigen::{self, SymmetricEigen};
use crate::error::Error;
use crate::exact::{self, CharPoly};
use crate::hypergraph::Hypergraph;
use crate::Result;

/// Default deflation tolerance of the numeric eigensolver. Tighter than the
/// report-level 1e-6 comparisons by a wide margin so closed-form checks at
/// 1e-9 hold.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

/// Largest dimension handled by the exact integer path unless overridden.
pub const DEFAULT_EXACT_CAP: usize = 64;

/// Dense symmetric non-negative integer matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl AdjacencyMatrix {
    /// Codegree matrix of a hypergraph. Multi-edges contribute their
    /// multiplicity; edges of size 0 or 1 contribute nothing.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.n() == 0 {
            return Err(Error::EmptyHypergraph);
        }
        let n = h.n();
        let mut entries = vec![0u64; n * n];
        for e in h.edges() {
            let members: Vec<usize> = e.members().map(|v| v.0).collect();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    entries[i * n + j] += 1;
                    entries[j * n + i] += 1;
                }
            }
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    pub fn from_entries(n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::BadParams(alloc::format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::Validation(alloc::string::String::from(
                    "non-zero diagonal",
                )));
            }
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::Validation(alloc::string::String::from(
                        "asymmetric entries",
                    )));
                }
            }
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// Principal submatrix with row and column `v` removed.
    pub fn minor(&self, v: usize) -> AdjacencyMatrix {
        let n = self.n;
        let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let mut entries = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                entries.push(self.entries[i * n + j]);
            }
        }
        AdjacencyMatrix {
            n: n - 1,
            entries,
        }
    }

    /// Exact `Tr(A^2) = sum_{i != j} a_ij^2`.
    pub fn sum_offdiagonal_squares(&self) -> u128 {
        self.entries
            .iter()
            .map(|&x| (x as u128) * (x as u128))
            .sum()
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det_exact(&self) -> BigInt {
        exact::det_bareiss(&self.entries, self.n)
    }
}

/// Ordered real eigenvalues with optional exact integer annotations.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Eigenvalues sorted descending.
    pub values: Vec<f64>,
    /// Integer eigenvalues with multiplicities, extracted exactly.
    pub exact_integers: Option<Vec<(i64, usize)>>,
    /// Factor of the characteristic polynomial with no integer roots; its
    /// real roots are precisely the irrational eigenvalues.
    pub residual: Option<CharPoly>,
}

impl Spectrum {
    pub fn from_values_descending(values: Vec<f64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum {
            values,
            exact_integers: None,
            residual: None,
        }
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| libm::fabs(*x)).sum()
    }
}

/// Parity classification of the energy via the exact integer path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Every eigenvalue is an integer; the energy is this (even) integer.
    EvenInteger(u64),
    /// Some eigenvalue is irrational (non-constant residual polynomial).
    IrrationalComponent,
    /// The exact path was skipped (dimension above the cap).
    Undetermined,
}

/// Energy together with its positive-part decomposition and parity.
#[derive(Debug, Clone)]
pub struct EnergyReport {
    pub energy: f64,
    pub positive_sum: f64,
    pub spectral_radius: f64,
    pub parity: Parity,
}

/// Numeric spectrum of an adjacency matrix, eigenvalues descending.
pub fn spectrum_numeric(a: &AdjacencyMatrix, tol: f64) -> Result<Spectrum> {
    let eig = eigen::decompose(&a.to_f64(), a.n(), tol)?;
    let mut values = eig.values;
    values.reverse();
    Ok(Spectrum::from_values_descending(values))
}

/// Full eigendecomposition (descending) for eigenvector-level checks.
pub fn eigenpairs(a: &AdjacencyMatrix, tol: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let eig: SymmetricEigen = eigen::decompose(&a.to_f64(), a.n(), tol)?;
    let n = eig.n;
    let values: Vec<f64> = eig.values.iter().rev().copied().collect();
    let vectors: Vec<Vec<f64>> = (0..n).rev().map(|j| eig.vector(j)).collect();
    Ok((values, vectors))
}

/// Exact characteristic polynomial with the default dimension cap.
pub fn char_poly_exact(a: &AdjacencyMatrix) -> Result<CharPoly> {
    char_poly_exact_capped(a, DEFAULT_EXACT_CAP)
}

pub fn char_poly_exact_capped(a: &AdjacencyMatrix, cap: usize) -> Result<CharPoly> {
    if a.n() > cap {
        return Err(Error::DimensionCapExceeded { n: a.n(), cap });
    }
    Ok(exact::char_poly(a.entries(), a.n()))
}

/// Integer eigenvalues with multiplicity plus the integer-root-free residual.
pub fn integer_eigenvalues_exact(p: &CharPoly) -> (Vec<(i64, usize)>, CharPoly) {
    exact::integer_roots(p)
}

/// Numeric spectrum annotated with the exact integer eigenvalues whenever the
/// dimension is within `cap`.
pub fn spectrum_with_exact(a: &AdjacencyMatrix, tol: f64, cap: usize) -> Result<Spectrum> {
    let mut spectrum = spectrum_numeric(a, tol)?;
    if a.n() <= cap {
        let p = char_poly_exact_capped(a, cap)?;
        let (roots, residual) = integer_eigenvalues_exact(&p);
        spectrum.exact_integers = Some(roots);
        spectrum.residual = Some(residual);
    }
    Ok(spectrum)
}

/// Parity certificate: exact characteristic polynomial, integer root
/// extraction, and the even-energy conclusion when the spectrum is fully
/// integral. Dimensions above `cap` report `Undetermined`.
pub fn parity_certificate_capped(h: &Hypergraph, cap: usize) -> Result<Parity> {
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    if a.n() > cap {
        return Ok(Parity::Undetermined);
    }
    let p = char_poly_exact_capped(&a, cap)?;
    let (roots, residual) = integer_eigenvalues_exact(&p);
    if residual.is_constant() {
        let energy: u64 = roots
            .iter()
            .map(|&(r, m)| r.unsigned_abs() * m as u64)
            .sum();
        Ok(Parity::EvenInteger(energy))
    } else {
        Ok(Parity::IrrationalComponent)
    }
}

pub fn parity_certificate(h: &Hypergraph) -> Result<Parity> {
    parity_certificate_capped(h, DEFAULT_EXACT_CAP)
}

/// Energy report with the default eigensolver tolerance and exact cap.
pub fn energy(h: &Hypergraph) -> Result<EnergyReport> {
    energy_capped(h, DEFAULT_EXACT_CAP)
}

pub fn energy_capped(h: &Hypergraph, cap: usize) -> Result<EnergyReport> {
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    let spectrum = spectrum_numeric(&a, DEFAULT_EIGEN_TOL)?;
    let parity = parity_certificate_capped(h, cap)?;
    Ok(report_from_spectrum(&spectrum, parity))
}

fn report_from_spectrum(spectrum: &Spectrum, parity: Parity) -> EnergyReport {
    let positive_sum: f64 = spectrum.values.iter().filter(|&&x| x > 0.0).sum();
    let spectral_radius = spectrum
        .values
        .iter()
        .map(|x| libm::fabs(*x))
        .fold(0.0, f64::max);
    EnergyReport {
        energy: spectrum.energy(),
        positive_sum,
        spectral_radius,
        parity,
    }
}

/// Plain numeric energy, skipping the exact path entirely.
pub fn energy_value(h: &Hypergraph) -> Result<f64> {
    if h.n() == 0 {
        return Err(Error::EmptyHypergraph);
    }
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    Ok(spectrum_numeric(&a, DEFAULT_EIGEN_TOL)?.energy())
}

/// Largest absolute eigenvalue.
pub fn spectral_radius(h: &Hypergraph) -> Result<f64> {
    let a = AdjacencyMatrix::from_hypergraph(h)?;
    let s = spectrum_numeric(&a, DEFAULT_EIGEN_TOL)?;
    Ok(s.values
        .iter()
        .map(|x| libm::fabs(*x))
        .fold(0.0, f64::max))
}

/// `p`-th root diagnostic: flags when `energy^p` is within `tol` of an
/// excluded integer `2^q * t` with `t` odd and `0 <= q <= p - 1`. A hit is a
/// numerical alarm only, never a proof; the exact parity certificate covers
/// the `p = 1` case.
pub fn root_exclusion_alarm(energy: f64, max_p: u32, tol: f64) -> Vec<(u32, u32, u64)> {
    let mut hits = Vec::new();
    for p in 1..=max_p {
        let powered = libm::pow(energy, p as f64);
        let nearest = libm::round(powered);
        if nearest < 1.0 || libm::fabs(powered - nearest) > tol {
            continue;
        }
        let mut t = nearest as u64;
        let mut q = 0u32;
        while t % 2 == 0 {
            t /= 2;
            q += 1;
        }
        if q <= p - 1 {
            hits.push((p, q, t));
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::hypergraph::Mode;

    fn single_edge(t: usize) -> Hypergraph {
        constructions::complete_kgraph(t, t).unwrap()
    }

    #[test]
    fn adjacency_single_edge_is_jmi() {
        let h = single_edge(4);
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.get(i, j), u64::from(i != j));
            }
        }
    }

    #[test]
    fn adjacency_complete_3_graph() {
        let h = constructions::complete_kgraph(5, 3).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(a.get(i, j), if i == j { 0 } else { 3 });
            }
        }
    }

    #[test]
    fn adjacency_transversal_design_is_doubled_tripartite() {
        // eight 3-edges hitting {1,2} x {3,4} x {5,6}: all cross-part
        // codegrees are 2, within-part codegrees 0
        let h = Hypergraph::from_edges(
            Mode::Strict,
            &[
                &["1", "3", "5"],
                &["1", "3", "6"],
                &["1", "4", "5"],
                &["1", "4", "6"],
                &["2", "3", "5"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "4", "6"],
            ],
        )
        .unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let labels = ["1", "2", "3", "4", "5", "6"];
        let part = |l: &str| (l.parse::<usize>().unwrap() - 1) / 2;
        for li in labels {
            for lj in labels {
                let (i, j) = (h.vertex(li).unwrap().0, h.vertex(lj).unwrap().0);
                let expected = if i == j || part(li) == part(lj) { 0 } else { 2 };
                assert_eq!(a.get(i, j), expected, "entry ({li},{lj})");
            }
        }
    }

    #[test]
    fn spectrum_three_edge() {
        let a = AdjacencyMatrix::from_hypergraph(&single_edge(3)).unwrap();
        let s = spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
        let expected = [2.0, -1.0, -1.0];
        for (v, e) in s.values.iter().zip(expected) {
            assert!((v - e).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_hyperstar() {
        let h = constructions::hyperstar(4, 3).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let s = spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
        let expected = [3.0, 1.0, 1.0, -1.0, -1.0, -1.0, -2.0];
        for (v, e) in s.values.iter().zip(expected) {
            assert!((v - e).abs() < 1e-10, "got {:?}", s.values);
        }
    }

    #[test]
    fn spectrum_zero_matrix() {
        let h = Hypergraph::with_vertices(Mode::Strict, &["a", "b", "c", "d"], &[]).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let s = spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
        assert!(s.values.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn energy_golden_values() {
        let k53 = constructions::complete_kgraph(5, 3).unwrap();
        let r = energy(&k53).unwrap();
        assert!((r.energy - 24.0).abs() < 1e-9);
        assert_eq!(r.parity, Parity::EvenInteger(24));
        assert!((r.spectral_radius - 12.0).abs() < 1e-9);
        assert!((r.energy - 2.0 * r.positive_sum).abs() < 1e-8);
    }

    #[test]
    fn parity_single_edge() {
        let h = single_edge(3);
        assert_eq!(parity_certificate(&h).unwrap(), Parity::EvenInteger(4));
    }

    #[test]
    fn parity_irrational_star() {
        // the 2-uniform star on 3 vertices has spectrum (sqrt 2, 0, -sqrt 2)
        let h = Hypergraph::from_edges(Mode::Strict, &[&["c", "a"], &["c", "b"]]).unwrap();
        assert_eq!(
            parity_certificate(&h).unwrap(),
            Parity::IrrationalComponent
        );
    }

    #[test]
    fn parity_above_cap_is_undetermined() {
        let h = single_edge(4);
        assert_eq!(
            parity_certificate_capped(&h, 3).unwrap(),
            Parity::Undetermined
        );
    }

    #[test]
    fn char_poly_cap_enforced() {
        let a = AdjacencyMatrix::from_hypergraph(&single_edge(4)).unwrap();
        assert!(matches!(
            char_poly_exact_capped(&a, 3),
            Err(Error::DimensionCapExceeded { .. })
        ));
    }

    #[test]
    fn spectral_radius_examples() {
        assert!((spectral_radius(&single_edge(5)).unwrap() - 4.0).abs() < 1e-10);
        let edgeless = Hypergraph::with_vertices(Mode::Strict, &["x", "y"], &[]).unwrap();
        assert_eq!(spectral_radius(&edgeless).unwrap(), 0.0);
    }

    #[test]
    fn minor_drops_row_and_column() {
        let h = constructions::complete_kgraph(4, 3).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let m = a.minor(1);
        assert_eq!(m.n(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), if i == j { 0 } else { 2 });
            }
        }
    }

    #[test]
    fn trace_squared_identity() {
        let h = constructions::complete_kgraph(5, 3).unwrap();
        let a = AdjacencyMatrix::from_hypergraph(&h).unwrap();
        let s = spectrum_numeric(&a, DEFAULT_EIGEN_TOL).unwrap();
        let from_spectrum: f64 = s.values.iter().map(|x| x * x).sum();
        let exact = a.sum_offdiagonal_squares() as f64;
        assert!((from_spectrum - exact).abs() / exact < 1e-6);
    }

    #[test]
    fn root_exclusion_alarm_flags_disallowed_powers() {
        // energy exactly 2 = 2^1: p = 1 requires q <= 0, so q = 1 is not
        // reported; energy sqrt(2): squared is 2 = 2^1 * 1 with q <= p-1 = 1,
        // flagged as a numerical alarm
        assert!(root_exclusion_alarm(core::f64::consts::SQRT_2, 4, 5e-4)
            .iter()
            .any(|&(p, q, t)| p == 2 && q == 1 && t == 1));
    }
}
