//! JSON renderings of the library's report types, with fixed key order.

use hyperspec_core::bounds::{BoundsReport, DetValue, Side};
use hyperspec_core::spectra::{EnergyReport, Parity, Spectrum};
use hyperspec_core::surgery::GapReport;
use hyperspec_core::Hypergraph;

use crate::json::{array, fmt_f64, Obj};

pub fn parity_str(p: &Parity) -> &'static str {
    match p {
        Parity::EvenInteger(_) => "even",
        Parity::IrrationalComponent => "irrational",
        Parity::Undetermined => "undetermined",
    }
}

pub fn info_json(h: &Hypergraph) -> String {
    let stats = h.degree_stats().ok();
    let (rank, corank) = h.rank_corank().map_or((0, 0), |rc| rc);
    let mut obj = Obj::new()
        .usize("n", h.n())
        .usize("m", h.m())
        .str(
            "mode",
            match h.mode() {
                hyperspec_core::Mode::Strict => "strict",
                hyperspec_core::Mode::Multi => "multi",
            },
        )
        .usize("rank", rank)
        .usize("corank", corank);
    if let Some(s) = stats {
        obj = obj
            .u64("max_degree", s.max)
            .u64("min_degree", s.min)
            .raw(
                "avg_degree",
                format!("[{},{}]", s.avg.numer(), s.avg.denom()),
            );
    }
    obj.bool("linear", h.is_linear())
        .bool("connected", h.is_connected())
        .bool("hypertree", h.is_hypertree())
        .raw(
            "uniformity",
            h.uniformity()
                .map_or("null".to_string(), |k| k.to_string()),
        )
        .finish()
}

pub fn spectrum_json(n: usize, spectrum: &Spectrum, parity: &Parity) -> String {
    let eigenvalues = array(spectrum.values.iter().map(|v| fmt_f64(*v)));
    let exact = match &spectrum.exact_integers {
        Some(roots) => array(roots.iter().map(|(r, m)| format!("[{r},{m}]"))),
        None => "[]".to_string(),
    };
    Obj::new()
        .usize("n", n)
        .raw("eigenvalues", eigenvalues)
        .raw("exact_integers", exact)
        .f64("energy", spectrum.energy())
        .str("parity", parity_str(parity))
        .finish()
}

pub fn energy_json(report: &EnergyReport) -> String {
    let mut obj = Obj::new()
        .f64("energy", report.energy)
        .f64("positive_sum", report.positive_sum)
        .f64("spectral_radius", report.spectral_radius)
        .str("parity", parity_str(&report.parity));
    if let Parity::EvenInteger(e) = report.parity {
        obj = obj.u64("exact_energy", e);
    }
    obj.finish()
}

pub fn gap_json(report: &GapReport) -> String {
    Obj::new()
        .f64("before", report.before)
        .f64("after", report.after)
        .f64("gap", report.gap)
        .f64("bound", report.bound)
        .bool("holds", report.holds)
        .raw(
            "strict",
            match report.strict {
                Some(true) => "true",
                Some(false) => "false",
                None => "null",
            },
        )
        .finish()
}

pub fn bounds_json(report: &BoundsReport) -> String {
    let parameters = Obj::new()
        .usize("n", report.n)
        .usize("m", report.m)
        .usize("rank", report.rank)
        .usize("corank", report.corank)
        .u64("max_degree", report.max_degree)
        .u64("min_degree", report.min_degree)
        .raw(
            "avg_degree",
            format!(
                "[{},{}]",
                report.avg_degree.numer(),
                report.avg_degree.denom()
            ),
        )
        .u64("zagreb", report.zagreb)
        .f64("lambda1", report.lambda1)
        .f64("energy", report.energy)
        .raw("sum_squares", report.sum_squares.to_string())
        .raw(
            "det_abs",
            match &report.det_abs {
                DetValue::Exact(d) => d.magnitude().to_string(),
                DetValue::Numeric(x) => fmt_f64(*x),
            },
        )
        .bool("det_exact", report.det_abs.is_exact())
        .f64("lambda1_lower", report.lambda1_lower)
        .f64("lambda1_upper", report.lambda1_upper)
        .bool("lambda1_holds", report.lambda1_holds)
        .finish();

    let bounds = array(report.entries.iter().map(|entry| {
        Obj::new()
            .str("name", entry.name)
            .str(
                "side",
                match entry.side {
                    Side::Upper => "upper",
                    Side::Lower => "lower",
                },
            )
            .f64("value", entry.value)
            .bool("holds", entry.holds)
            .f64("slack", entry.slack)
            .finish()
    }));

    let sumsq = array(report.sum_squares_bounds.iter().map(|(name, value, holds)| {
        Obj::new()
            .str("name", name)
            .f64("value", *value)
            .bool("holds", *holds)
            .finish()
    }));

    let comparisons = Obj::new()
        .f64("b", report.comparison.b)
        .f64("B", report.comparison.big_b)
        .str("case", report.comparison.case.as_str())
        .str("lema_cota1_vs_2", report.lemma_comparison.as_str())
        .finish();

    Obj::new()
        .raw("parameters", parameters)
        .raw("bounds", bounds)
        .raw("sum_squares_bounds", sumsq)
        .raw("comparisons", comparisons)
        .finish()
}
