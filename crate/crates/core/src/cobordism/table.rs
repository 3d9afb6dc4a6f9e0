use rayon::prelude::*;
use serde::Serialize;

use super::bounds::chi_dn_bounds;
use super::edge::CobordismEdge;
use crate::error::Result;

/// One `(d, N)` cell of a bounds table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: i64,
    #[serde(rename = "N")]
    pub n: i64,
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
    pub branch: String,
    pub witness_chain: Vec<CobordismEdge>,
}

impl TableRow {
    pub fn from_bounds(d: i64, n: i64) -> Result<Self> {
        let b = chi_dn_bounds(d, n)?;
        Ok(TableRow {
            d,
            n,
            lower: b.interval.lower,
            upper: b.interval.upper,
            exact: b.interval.exact(),
            branch: b.branch.to_string(),
            witness_chain: b.interval.lower_witness.map(|c| c.edges).unwrap_or_default(),
        })
    }

    pub const HEADER: [&'static str; 7] = ["d", "N", "lower", "upper", "exact", "branch", "witness_chain"];

    /// Cells in [`Self::HEADER`] order; the witness chain is a JSON array.
    pub fn cells(&self) -> [String; 7] {
        [
            self.d.to_string(),
            self.n.to_string(),
            self.lower.to_string(),
            self.upper.to_string(),
            self.exact.map(|x| x.to_string()).unwrap_or_default(),
            self.branch.clone(),
            serde_json::to_string(&self.witness_chain).expect("edges serialize"),
        ]
    }
}

/// All cells of `d_range x n_range` (d = 0 skipped), computed in parallel
/// and returned in row-major order.
pub fn bounds_table(
    d_range: std::ops::RangeInclusive<i64>,
    n_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<TableRow>> {
    let cells: Vec<(i64, i64)> = d_range
        .filter(|&d| d != 0)
        .flat_map(|d| n_range.clone().map(move |n| (d, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(d, n)| TableRow::from_bounds(d, n))
        .collect()
}

/// Writes rows as CSV with the fixed header.
pub fn write_csv<W: std::io::Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TableRow::HEADER)?;
    for r in rows {
        w.write_record(r.cells())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_ordered_and_complete() {
        let rows = bounds_table(-2..=3, -1..=2).unwrap();
        assert_eq!(rows.len(), 5 * 4);
        assert_eq!((rows[0].d, rows[0].n), (-2, -1));
        assert_eq!((rows[19].d, rows[19].n), (3, 2));
    }

    #[test]
    fn csv_shape() {
        let rows = bounds_table(3..=3, -5..=-5).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("d,N,lower,upper,exact,branch,witness_chain"));
        let row = lines.next().unwrap();
        assert!(row.starts_with("3,-5,-8,-8,-8,C,"), "{row}");
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let rec = rdr.records().next().unwrap().unwrap();
        let chain: serde_json::Value = serde_json::from_str(&rec[6]).unwrap();
        assert_eq!(chain[0]["provenance"], "LocalThom");
        assert_eq!(chain[1]["target"], "T(-2,5)");
    }
}
