//! Rayon drivers. Results are collected in input order, so output does not
//! depend on the number of threads.

use rayon::prelude::*;
use regcurv_core::certify::{scan_order, ScanRow, MAX_SCAN_ORDER};
use regcurv_core::field::prime_power;
use regcurv_core::generators::paley_graph;
use regcurv_core::transport::{check_connected_regular, lly_curvature, ratio, CurvatureSpectrum, Rational};
use regcurv_core::{Error, Graph, Result};

pub fn curvature_spectrum(g: &Graph) -> Result<CurvatureSpectrum> {
    check_connected_regular(g)?;
    let edges: Vec<_> = g.edges().collect();
    let reports = edges.par_iter().map(|&(x, y)| lly_curvature(g, x, y)).collect::<Result<Vec<_>>>()?;
    CurvatureSpectrum::from_reports(reports)
}

pub fn scan_parameters(max_n: usize) -> Result<Vec<ScanRow>> {
    if max_n > MAX_SCAN_ORDER {
        return Err(Error::TooLarge(max_n as u64));
    }
    let per_n: Vec<Vec<ScanRow>> = (3..=max_n).into_par_iter().map(scan_order).collect();
    Ok(per_n.into_iter().flatten().collect())
}

/// Curvature of every edge of P(4γ+1) compared with ½ + 1/(2γ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConferenceCheck {
    pub gamma: u64,
    pub q: u64,
    pub edge_count: usize,
    pub expected: Rational,
    /// Edges whose curvature differs from the expected value.
    pub failures: Vec<((usize, usize), Rational)>,
}

pub fn conference_orders(gamma_max: u64) -> Vec<(u64, u64)> {
    (2..=gamma_max).map(|g| (g, 4 * g + 1)).filter(|&(_, q)| prime_power(q).is_some()).collect()
}

pub fn verify_conference_curvature(gamma_max: u64) -> Result<Vec<ConferenceCheck>> {
    conference_orders(gamma_max)
        .into_iter()
        .map(|(gamma, q)| {
            let g = paley_graph(q)?;
            let spectrum = curvature_spectrum(&g)?;
            let expected = ratio(1, 2) + ratio(1, 2 * gamma as i64);
            let failures = spectrum
                .reports
                .iter()
                .filter(|r| r.kappa != expected)
                .map(|r| (r.edge, r.kappa.clone()))
                .collect();
            Ok(ConferenceCheck { gamma, q, edge_count: spectrum.reports.len(), expected, failures })
        })
        .collect()
}
