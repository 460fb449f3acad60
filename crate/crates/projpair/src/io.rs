//! Matrix file format.
//!
//! A matrix is stored as CSV with a header line
//!
//! ```text
//! # complex-matrix rows cols
//! ```
//!
//! followed by `rows` lines of `2*cols` numbers: the real and imaginary part
//! of each entry, alternating. Values are written in Rust's shortest
//! round-trip form, so read(write(A)) == A exactly.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

pub fn write_matrix_string(a: &ComplexMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("# complex-matrix {} {}\n", a.rows(), a.cols()));
    for i in 0..a.rows() {
        let mut fields = Vec::with_capacity(2 * a.cols());
        for j in 0..a.cols() {
            let z = a[(i, j)];
            fields.push(format!("{}", z.re));
            fields.push(format!("{}", z.im));
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn read_matrix_string(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "#" || tokens[1] != "complex-matrix" {
        return Err(Error::Parse(format!(
            "bad header {header:?}, expected `# complex-matrix rows cols`"
        )));
    }
    let rows: usize = tokens[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad row count {:?}", tokens[2])))?;
    let cols: usize = tokens[3]
        .parse()
        .map_err(|_| Error::Parse(format!("bad column count {:?}", tokens[3])))?;

    let mut entries = Vec::with_capacity(rows * cols);
    for (line_index, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 * cols {
            return Err(Error::Parse(format!(
                "row {} has {} fields, expected {}",
                line_index + 1,
                fields.len(),
                2 * cols
            )));
        }
        for pair in fields.chunks(2) {
            let re: f64 = pair[0]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number {:?}", pair[0])))?;
            let im: f64 = pair[1]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number {:?}", pair[1])))?;
            entries.push(Complex64::new(re, im));
        }
    }
    if entries.len() != rows * cols {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    ComplexMatrix::new(rows, cols, entries)
}

pub fn write_matrix_file(path: &Path, a: &ComplexMatrix) -> Result<()> {
    let mut file = fs::File::create(path)?;
    file.write_all(write_matrix_string(a).as_bytes())?;
    Ok(())
}

pub fn read_matrix_file(path: &Path) -> Result<ComplexMatrix> {
    let text = fs::read_to_string(path)?;
    read_matrix_string(&text)
}
