//! Lattice samples of the 3-web `{a = const}`, `{b = const}`, `{a★b = const}`.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use super::group::LoopPoint;
use super::section::loop_compose;
use super::{LoopChart, LoopError};

pub const WEB_CSV_HEADER: &str = "a_t,a_u,a_v,b_t,b_u,b_v,ab_t,ab_u,ab_v";

/// `n` equally spaced values per axis on `[-radius, radius]`; odd `n`
/// includes 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WebGrid {
    pub n: usize,
    pub radius: f64,
}

impl WebGrid {
    pub fn axis(&self) -> Vec<f64> {
        match self.n {
            0 => vec![],
            1 => vec![0.0],
            n => (0..n)
                .map(|k| -self.radius + 2.0 * self.radius * k as f64 / (n - 1) as f64)
                .collect(),
        }
    }

    pub fn points(&self) -> Vec<LoopPoint> {
        let axis = self.axis();
        let mut out = Vec::with_capacity(axis.len().pow(3));
        for &t in &axis {
            for &u in &axis {
                for &v in &axis {
                    out.push(LoopPoint::new(t, u, v));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WebRow {
    pub a: LoopPoint,
    pub b: LoopPoint,
    pub ab: LoopPoint,
}

/// Every pair of lattice points with its product, in lexicographic order.
pub fn sample_web(chart: &LoopChart, grid: &WebGrid) -> Result<Vec<WebRow>, LoopError> {
    let pts = grid.points();
    let pairs: Vec<(LoopPoint, LoopPoint)> = pts
        .iter()
        .flat_map(|&a| pts.iter().map(move |&b| (a, b)))
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            Ok(WebRow {
                a,
                b,
                ab: loop_compose(&a, &b, chart)?,
            })
        })
        .collect()
}

/// `{:.16e}` gives 17 significant digits.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_web_csv(rows: &[WebRow], mut out: impl Write) -> io::Result<()> {
    out.write_all(WEB_CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for r in rows {
        let cells: Vec<String> = [r.a.to_array(), r.b.to_array(), r.ab.to_array()]
            .iter()
            .flatten()
            .map(|&x| fmt17(x))
            .collect();
        out.write_all(cells.join(",").as_bytes())?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::Sign;

    #[test]
    fn row_count_and_origin() {
        let chart = LoopChart::case1(Sign::Plus);
        let rows = sample_web(&chart, &WebGrid { n: 3, radius: 0.1 }).unwrap();
        assert_eq!(rows.len(), 27 * 27);
        let origin = rows
            .iter()
            .find(|r| r.a == LoopPoint::ZERO && r.b == LoopPoint::ZERO)
            .unwrap();
        assert_eq!(origin.ab, LoopPoint::ZERO);
    }

    #[test]
    fn csv_shape() {
        let chart = LoopChart::case2(Sign::Minus, 1.0);
        let rows = sample_web(&chart, &WebGrid { n: 2, radius: 0.05 }).unwrap();
        let mut buf = Vec::new();
        write_web_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split_terminator('\n').collect();
        assert_eq!(lines[0], WEB_CSV_HEADER);
        assert_eq!(lines.len(), 1 + 64);
        assert!(!text.contains('\r'));
        let first: f64 = lines[1].split(',').next().unwrap().parse().unwrap();
        assert_eq!(first, -0.05);
    }
}
