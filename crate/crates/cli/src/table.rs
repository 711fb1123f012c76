//! Column tables written as CSV.

use crate::format::csv_number;

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    /// One vector per column, all the same length.
    pub data: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(parameter: &str, grid: Vec<f64>) -> Self {
        Self {
            columns: vec![parameter.to_owned()],
            data: vec![grid],
        }
    }

    pub fn push(&mut self, name: &str, values: Vec<f64>) {
        assert_eq!(
            values.len(),
            self.data[0].len(),
            "column {name} has the wrong length"
        );
        self.columns.push(name.to_owned());
        self.data.push(values);
    }

    pub fn rows(&self) -> usize {
        self.data[0].len()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for r in 0..self.rows() {
            let cells: Vec<String> = self.data.iter().map(|c| csv_number(c[r])).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty CSV input")?;
        let columns: Vec<String> = header.split(',').map(|s| s.trim().to_owned()).collect();
        let mut data = vec![Vec::new(); columns.len()];
        for (n, line) in lines.enumerate() {
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != columns.len() {
                return Err(format!(
                    "row {} has {} cells, expected {}",
                    n + 2,
                    cells.len(),
                    columns.len()
                ));
            }
            for (col, cell) in data.iter_mut().zip(cells) {
                col.push(
                    cell.trim()
                        .parse::<f64>()
                        .map_err(|e| format!("row {}: {cell:?}: {e}", n + 2))?,
                );
            }
        }
        if data[0].is_empty() {
            return Err("CSV input has no data rows".into());
        }
        Ok(Self { columns, data })
    }
}
