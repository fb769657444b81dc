//! Plain-text coefficient files: one `re im` pair per line, line `n`
//! (0-based) holding the coefficient of `zⁿ`.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::ComplexSeries;

/// Reads a coefficient file. Blank lines and lines starting with `#` are skipped.
pub fn read_coefficients<R: BufRead>(reader: R) -> Result<ComplexSeries> {
    let mut coeffs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse = |tok: Option<&str>, what: &str| -> Result<f64> {
            let tok = tok.ok_or_else(|| Error::Parse { line: idx + 1, reason: format!("missing {what} part") })?;
            tok.parse::<f64>()
                .map_err(|e| Error::Parse { line: idx + 1, reason: format!("bad {what} part {tok:?}: {e}") })
        };
        let mut parts = trimmed.split_whitespace();
        let re = parse(parts.next(), "real")?;
        let im = parse(parts.next(), "imaginary")?;
        if parts.next().is_some() {
            return Err(Error::Parse { line: idx + 1, reason: "expected exactly two numbers".into() });
        }
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Parse { line: idx + 1, reason: "non-finite coefficient".into() });
        }
        coeffs.push(Complex64::new(re, im));
    }
    if coeffs.is_empty() {
        return Err(Error::Parse { line: 0, reason: "no coefficients".into() });
    }
    ComplexSeries::new(coeffs)
}

/// Writes one `re im` line per coefficient using round-trip float formatting.
pub fn write_coefficients<W: Write>(mut writer: W, series: &ComplexSeries) -> Result<()> {
    for c in series.coeffs() {
        writeln!(writer, "{:?} {:?}", c.re, c.im)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_trivial_generator() {
        let s = read_coefficients("1 0\n".as_bytes()).unwrap();
        assert_eq!(s.order(), 0);
        assert_eq!(s.constant_term(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let s = read_coefficients("# phi\n1 0\n\n0.5   -0.25\n".as_bytes()).unwrap();
        assert_eq!(s.coeffs(), &[Complex64::new(1.0, 0.0), Complex64::new(0.5, -0.25)]);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(read_coefficients("1\n".as_bytes()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_coefficients("1 0\n1 x\n".as_bytes()), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_coefficients("1 0 0\n".as_bytes()), Err(Error::Parse { .. })));
        assert!(matches!(read_coefficients("1 NaN\n".as_bytes()), Err(Error::Parse { .. })));
        assert!(read_coefficients("".as_bytes()).is_err());
    }

    proptest! {
        #[test]
        fn write_then_read_is_exact(v in prop::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1..40)) {
            let s = ComplexSeries::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap();
            let mut buf = Vec::new();
            write_coefficients(&mut buf, &s).unwrap();
            prop_assert_eq!(read_coefficients(buf.as_slice()).unwrap(), s);
        }
    }
}
