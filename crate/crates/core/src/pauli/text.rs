//! Line-oriented text format for Pauli polynomials.
//!
//! ```text
//! # qubits: 3
//! XZI 0.5 0.0
//! IIY -1.25 0.5
//! ```
//!
//! One term per line: the Pauli string over `{I,X,Y,Z}`, then the real and
//! imaginary parts. Lines starting with `#` are comments; a
//! `# qubits: N` comment fixes the qubit count of a file with no terms.
//! Numbers are written in Rust's shortest round-trip form, so parsing what
//! was written gives back the same bits.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{PauliIndex, PauliPolynomial};
use crate::error::{Error, Result};

const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];
const QUBITS_DIRECTIVE: &str = "qubits:";

impl fmt::Display for PauliIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for kappa in self.symbols() {
            write!(f, "{}", LETTERS[kappa as usize])?;
        }
        Ok(())
    }
}

impl FromStr for PauliIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|ch| match ch {
                'I' => Ok(0),
                'X' => Ok(1),
                'Y' => Ok(2),
                'Z' => Ok(3),
                other => Err(Error::InvalidArgument(format!("invalid Pauli letter {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        if symbols.is_empty() {
            return Err(Error::InvalidArgument("empty Pauli string".into()));
        }
        PauliIndex::from_symbols(&symbols)
    }
}

impl PauliPolynomial {
    pub fn to_text(&self) -> String {
        let mut out = format!("# {QUBITS_DIRECTIVE} {}\n", self.n);
        for (s, c) in &self.terms {
            out.push_str(&format!("{s} {:?} {:?}\n", c.re, c.im));
        }
        out
    }

    /// Parses the text format, taking the qubit count from the first term
    /// or from a `# qubits: N` comment.
    pub fn from_text(text: &str) -> Result<Self> {
        Self::parse_text(text, None)
    }

    pub fn from_text_with_qubits(text: &str, n: usize) -> Result<Self> {
        Self::parse_text(text, Some(n))
    }

    fn parse_text(text: &str, qubits: Option<usize>) -> Result<Self> {
        let mut declared = qubits;
        let mut terms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(value) = comment.trim().strip_prefix(QUBITS_DIRECTIVE) {
                    let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad qubit count {:?}", value.trim()),
                    })?;
                    if declared.is_some_and(|d| d != n) {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("qubit count {n} contradicts {}", declared.unwrap_or(n)),
                        });
                    }
                    declared = Some(n);
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [word, re, im] = fields[..] else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected `<pauli-string> <re> <im>`, got {line:?}"),
                });
            };
            let index: PauliIndex = word.parse().map_err(|e: Error| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            let number = |field: &str| {
                field.parse::<f64>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad number {field:?}"),
                })
            };
            let coefficient = Complex64::new(number(re)?, number(im)?);
            terms.push((lineno, index, coefficient));
        }
        let n = match (declared, terms.first()) {
            (Some(n), _) => n,
            (None, Some((_, index, _))) => index.qubits(),
            (None, None) => {
                return Err(Error::Parse {
                    line: 0,
                    msg: "no terms and no `# qubits:` comment; qubit count unknown".into(),
                })
            }
        };
        let mut p = PauliPolynomial::zero(n);
        for (lineno, index, c) in terms {
            if index.qubits() != n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("Pauli string has {} sites, expected {n}", index.qubits()),
                });
            }
            p.insert_unchecked(index, c);
        }
        Ok(p)
    }
}
