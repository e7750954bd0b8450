//! Whitespace-separated molecule tables.
//!
//! ```text
//! # comment
//! name  eta  mu_1e-23_g  alpha_inv_A  re_A  beta_inv_A  De_cm1  we_cm1
//! NO    0.013727  1.249  1.357795  1.151  2.7534  53341  1904.2
//! ```
//!
//! The header row may list the columns in any order; all eight are
//! required. Masses are in units of 10⁻²³ g and converted to amu on load.

use std::path::Path;

use crate::error::{Error, Result};
use crate::params::SpectroscopicParams;
use crate::units;

/// The four molecules shipped with the crate.
pub const BUNDLED: &str = include_str!("../data/molecules.dat");

const COLUMNS: [&str; 8] = [
    "name",
    "eta",
    "mu_1e-23_g",
    "alpha_inv_A",
    "re_A",
    "beta_inv_A",
    "De_cm1",
    "we_cm1",
];

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeDatabase {
    records: Vec<SpectroscopicParams>,
}

impl MoleculeDatabase {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "<bundled>").expect("bundled molecule table is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse {
            path: origin.to_string(),
            line,
            message,
        };
        let mut header: Option<[usize; 8]> = None;
        let mut records: Vec<SpectroscopicParams> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some(positions) = header else {
                let mut positions = [0usize; 8];
                for (slot, column) in positions.iter_mut().zip(COLUMNS) {
                    *slot = fields.iter().position(|f| *f == column).ok_or_else(|| {
                        parse_err(line_no, format!("header is missing column `{column}`"))
                    })?;
                }
                if fields.len() != COLUMNS.len() {
                    return Err(parse_err(line_no, format!("expected {} columns in header", COLUMNS.len())));
                }
                header = Some(positions);
                continue;
            };
            if fields.len() != COLUMNS.len() {
                return Err(parse_err(
                    line_no,
                    format!("expected {} fields, found {}", COLUMNS.len(), fields.len()),
                ));
            }
            let number = |col: usize| -> Result<f64> {
                let text = fields[positions[col]];
                text.parse::<f64>()
                    .map_err(|_| parse_err(line_no, format!("`{}` is not a number ({})", text, COLUMNS[col])))
            };
            let name = fields[positions[0]].to_string();
            let record = (|| -> Result<SpectroscopicParams> {
                let mu = units::mass_grams_to_amu(number(2)?)?;
                SpectroscopicParams::new(name.clone(), number(6)?, number(4)?, number(7)?, mu, number(3)?, number(1)?)?
                    .with_beta_table(number(5)?)
            })()
            .map_err(|e| match e {
                e @ Error::Parse { .. } => e,
                other => Error::Record {
                    path: origin.to_string(),
                    line: line_no,
                    source: Box::new(other),
                },
            })?;
            if records.iter().any(|r| r.name == record.name) {
                return Err(parse_err(line_no, format!("duplicate molecule `{}`", record.name)));
            }
            records.push(record);
        }
        if header.is_none() {
            return Err(parse_err(0, "no header row".into()));
        }
        Ok(MoleculeDatabase { records })
    }

    pub fn get(&self, name: &str) -> Result<&SpectroscopicParams> {
        self.records
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
    }

    pub fn records(&self) -> &[SpectroscopicParams] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}
