//! Line-delimited JSON state files.
//!
//! The first line is a header record carrying the format version; every
//! following line is one state record. Complex entries are `[re, im]`
//! pairs, row-major. Serialization is deterministic, so a parse/serialize
//! round trip is byte-identical.

use std::io::{self, BufRead, Write};

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use entsort_core::numerics::ComplexMatrix;
use entsort_core::states::{DensityState, PureState, State, StateError};
use entsort_core::Tolerances;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("missing header line")]
    MissingHeader,
    #[error("unsupported format version {got:?} (expected {FORMAT_VERSION:?})")]
    Version { got: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Header {
    version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    Pure,
    Density,
}

/// One serialized state.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateRecord {
    pub id: String,
    pub kind: RecordKind,
    pub dim_a: usize,
    pub dim_b: usize,
    /// Amplitudes (pure) or row-major matrix entries (density).
    pub data: Vec<[f64; 2]>,
}

impl StateRecord {
    pub fn from_state(id: impl Into<String>, state: &State<f64>) -> Self {
        let (kind, dim_a, dim_b, data) = match state {
            State::Pure(psi) => (
                RecordKind::Pure,
                psi.dim_a(),
                psi.dim_b(),
                psi.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
            ),
            State::Density(rho) => (
                RecordKind::Density,
                rho.dim_a(),
                rho.dim_b(),
                rho.matrix()
                    .entries()
                    .iter()
                    .map(|z| [z.re, z.im])
                    .collect(),
            ),
        };
        Self {
            id: id.into(),
            kind,
            dim_a,
            dim_b,
            data,
        }
    }

    /// Rebuild the state, applying the norm/trace validation of the core
    /// constructors at the given tolerances.
    pub fn to_state(&self, tol: &Tolerances<f64>) -> Result<State<f64>, StateError> {
        let entries: Vec<Complex<f64>> = self
            .data
            .iter()
            .map(|[re, im]| Complex::new(*re, *im))
            .collect();
        match self.kind {
            RecordKind::Pure => {
                let psi = PureState::with_tolerance(self.dim_a, self.dim_b, entries, tol.ortho)?;
                Ok(State::Pure(psi))
            }
            RecordKind::Density => {
                let d = self.dim_a * self.dim_b;
                let matrix = ComplexMatrix::new(d.max(1), d.max(1), entries)
                    .map_err(StateError::Numerics)?;
                let rho = DensityState::with_tolerance(
                    self.dim_a, self.dim_b, matrix, tol.ortho, tol.recon,
                )?;
                Ok(State::Density(rho))
            }
        }
    }
}

/// A parsed state file: version header plus records in file order.
#[derive(Clone, Debug)]
pub struct StateFile {
    pub version: String,
    pub records: Vec<StateRecord>,
}

impl StateFile {
    pub fn new(records: Vec<StateRecord>) -> Self {
        Self {
            version: FORMAT_VERSION.to_string(),
            records,
        }
    }

    pub fn write_to(&self, w: &mut impl Write) -> io::Result<()> {
        let header = Header {
            version: self.version.clone(),
        };
        writeln!(w, "{}", serde_json::to_string(&header)?)?;
        for record in &self.records {
            writeln!(w, "{}", serde_json::to_string(record)?)?;
        }
        Ok(())
    }

    pub fn to_string_lossless(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    pub fn read_from(r: impl BufRead) -> Result<Self, FormatError> {
        let mut lines = r.lines();
        let header_line = lines.next().ok_or(FormatError::MissingHeader)??;
        let header: Header = serde_json::from_str(&header_line)
            .map_err(|source| FormatError::Json { line: 1, source })?;
        if header.version != FORMAT_VERSION {
            return Err(FormatError::Version {
                got: header.version,
            });
        }
        let mut records = Vec::new();
        for (offset, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: StateRecord =
                serde_json::from_str(&line).map_err(|source| FormatError::Json {
                    line: offset + 2,
                    source,
                })?;
            records.push(record);
        }
        Ok(Self {
            version: header.version,
            records,
        })
    }

    pub fn parse(s: &str) -> Result<Self, FormatError> {
        Self::read_from(s.as_bytes())
    }

    pub fn find(&self, id: &str) -> Option<&StateRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use entsort_core::states::bell_state;

    #[test]
    fn round_trip_is_byte_identical() {
        let bell = State::Pure(bell_state::<f64>(2, 0, 0).unwrap());
        let file = StateFile::new(vec![StateRecord::from_state("bell-0", &bell)]);
        let once = file.to_string_lossless();
        let reparsed = StateFile::parse(&once).unwrap();
        assert_eq!(reparsed.to_string_lossless(), once);
    }

    #[test]
    fn load_validates_records() {
        let tol = Tolerances::<f64>::standard();
        let mut record =
            StateRecord::from_state("bad", &State::Pure(bell_state::<f64>(2, 0, 0).unwrap()));
        record.data[0] = [0.9, 0.0]; // break the norm
        assert!(record.to_state(&tol).is_err());
    }

    #[test]
    fn version_mismatch_is_rejected() {
        let err = StateFile::parse("{\"version\":\"99\"}\n").unwrap_err();
        assert!(matches!(err, FormatError::Version { .. }));
    }

    #[test]
    fn missing_header_is_rejected() {
        assert!(matches!(
            StateFile::parse(""),
            Err(FormatError::MissingHeader)
        ));
    }
}
