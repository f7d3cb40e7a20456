//! The threshold-table reproduction: computes `μ_{m,1}`, `μ_{m,2}` for the
//! five reference base domains and m = 1..7, lays the values out in the
//! published grid, and reports per-cell deviation from the reference digits.

use serde_json::{json, Value};

use lqk_core::domains::catalog_lookup;
use lqk_core::exactmath::to_f64;
use lqk_core::luqikeng::threshold;
use lqk_core::Rational;

use crate::render::{decimal, rat_str};

/// Column order of the published grid. `I_{1,3}` also covers `II_3`, `IV_3`
/// also covers `III_2`, and `IV_4` also covers `I_{2,2}` (identical data).
pub const COLS: [&str; 5] = ["I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4"];

/// Row labels: thresholds `μ_{m,1}` (and second roots `μ_{m,2}` for m = 1, 2),
/// then the single roots for m = 3..7.
pub const ROWS: [&str; 9] = [
    "mu_{1,1}", "mu_{1,2}", "mu_{2,1}", "mu_{2,2}", "mu_3", "mu_4", "mu_5", "mu_6", "mu_7",
];

/// Reference digits for every cell (`None` = no positive root, printed as
/// `inf`). Closed-form cells carry the high-precision decimal of the closed
/// form; the remaining cells carry the published rounded digits.
pub const REFERENCE: [[Option<f64>; 5]; 9] = [
    [
        Some(2.0),
        Some(1.41421356),
        Some(1.15470054),
        Some(1.22474487),
        Some(1.07732),
    ],
    [None, None, None, Some(4.0), Some(3.21549)],
    [
        Some(4.0),
        Some(1.82287566),
        Some(1.44300047),
        Some(1.41518),
        Some(1.21176),
    ],
    [None, None, None, Some(11.33302), Some(9.08062)],
    [None, Some(2.58113883), Some(2.0), Some(1.68819), Some(1.41824)],
    [None, Some(4.44948975), Some(3.39296945), Some(2.10335), Some(1.74173)],
    [None, Some(16.36660027), Some(12.32455532), Some(2.8029), Some(2.29476)],
    [None, None, None, Some(4.22107), Some(3.42405)],
    [None, None, None, Some(8.60867), Some(6.92986)],
];

/// One computed cell: the refined root (if any) and its exact value when the
/// root is rational.
#[derive(Debug, Clone, Default)]
pub struct Cell {
    pub value: Option<Rational>,
    pub exact: Option<Rational>,
}

/// Computes the full grid: `ROWS.len()` rows × `COLS.len()` columns.
pub fn compute_grid(tol: &Rational) -> Vec<Vec<Cell>> {
    let mut grid = vec![vec![Cell::default(); COLS.len()]; ROWS.len()];
    for (c, name) in COLS.iter().enumerate() {
        let spec = catalog_lookup(name).expect("reference domain");
        for m in 1..=7u32 {
            let report = threshold(&spec, m, tol);
            let first = report.mu_m_1.map(|r| Cell {
                value: Some(r.value),
                exact: r.exact,
            });
            let second = report.mu_m_2.map(|r| Cell {
                value: Some(r.value),
                exact: r.exact,
            });
            match m {
                1 => {
                    grid[0][c] = first.unwrap_or_default();
                    grid[1][c] = second.unwrap_or_default();
                }
                2 => {
                    grid[2][c] = first.unwrap_or_default();
                    grid[3][c] = second.unwrap_or_default();
                }
                _ => {
                    grid[1 + m as usize][c] = first.unwrap_or_default();
                }
            }
        }
    }
    grid
}

/// Absolute deviation of a computed cell from its reference digits, when
/// both are finite.
fn deviation(cell: &Cell, reference: Option<f64>) -> Option<f64> {
    match (&cell.value, reference) {
        (Some(v), Some(r)) => Some((to_f64(v) - r).abs()),
        _ => None,
    }
}

/// Largest per-cell deviation and the number of finite reference cells.
pub fn max_deviation(grid: &[Vec<Cell>]) -> (f64, usize) {
    let mut max = 0.0f64;
    let mut finite = 0usize;
    for (r, row) in grid.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            if let Some(dev) = deviation(cell, REFERENCE[r][c]) {
                finite += 1;
                max = max.max(dev);
            }
        }
    }
    (max, finite)
}

pub fn to_json(grid: &[Vec<Cell>], tol: &Rational) -> Value {
    let rows: Vec<Value> = grid
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let cells: Vec<Value> = row
                .iter()
                .enumerate()
                .map(|(c, cell)| {
                    json!({
                        "domain": COLS[c],
                        "value": cell.value.as_ref().map(|v| decimal(v, tol)),
                        "exact": cell.exact.as_ref().map(rat_str),
                        "reference": REFERENCE[r][c],
                        "deviation": deviation(cell, REFERENCE[r][c]),
                    })
                })
                .collect();
            json!({ "quantity": ROWS[r], "cells": cells })
        })
        .collect();
    let (max, finite) = max_deviation(grid);
    json!({
        "columns": COLS,
        "tolerance": rat_str(tol),
        "rows": rows,
        "max_deviation": max,
        "finite_reference_cells": finite,
    })
}

pub fn to_text(grid: &[Vec<Cell>], tol: &Rational) -> String {
    let width = 15usize;
    let mut out = String::new();
    out.push_str(&format!("{:<10}", "quantity"));
    for col in COLS {
        out.push_str(&format!("{col:>width$}"));
    }
    out.push('\n');
    for (r, row) in grid.iter().enumerate() {
        out.push_str(&format!("{:<10}", ROWS[r]));
        for cell in row {
            let shown = match &cell.value {
                Some(v) => decimal(v, tol),
                None => "inf".to_string(),
            };
            out.push_str(&format!("{shown:>width$}"));
        }
        out.push('\n');
    }
    out.push_str("\ndeviation from reference digits:\n");
    out.push_str(&format!("{:<10}", ""));
    for col in COLS {
        out.push_str(&format!("{col:>width$}"));
    }
    out.push('\n');
    for (r, row) in grid.iter().enumerate() {
        out.push_str(&format!("{:<10}", ROWS[r]));
        for (c, cell) in row.iter().enumerate() {
            let shown = match deviation(cell, REFERENCE[r][c]) {
                Some(dev) => format!("{dev:.1e}"),
                None => "-".to_string(),
            };
            out.push_str(&format!("{shown:>width$}"));
        }
        out.push('\n');
    }
    let (max, finite) = max_deviation(grid);
    out.push_str(&format!(
        "\nmax deviation {max:.2e} over {finite} finite reference cells\n"
    ));
    out
}
