//! Parsing of list-valued flags.

use crate::error::{Error, Result};
use crate::oracle::MethodKind;

/// `start:stop:step` (inclusive) or a comma list of degrees.
///
/// Both `start:stop:step` and `start:step:stop` spellings are accepted: of the
/// last two values the larger is the stop and the smaller the step.
pub fn parse_degrees_list(s: &str) -> Result<Vec<f64>> {
    let bad = || Error::Usage(format!("invalid angle list '{s}': use start:stop:step or a comma list"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, c] => {
            let (a, x, y): (f64, f64, f64) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
                c.trim().parse().map_err(|_| bad())?,
            );
            let (b, c) = (x.max(y), x.min(y));
            if !(c > 0.0) || b < a || !a.is_finite() || !b.is_finite() {
                return Err(bad());
            }
            let count = ((b - a) / c + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| a + i as f64 * c).collect())
        }
        [_] => s
            .split(',')
            .map(|t| t.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad))
            .collect(),
        _ => Err(bad()),
    }
}

/// Comma list of positive sizes.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::Usage(format!("invalid size '{t}' in '{s}'")))
        })
        .collect()
}

/// `all` or a comma list of method names.
pub fn parse_methods(s: &str) -> Result<Vec<MethodKind>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(MethodKind::ALL.to_vec());
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_are_inclusive() {
        let v = parse_degrees_list("0:22.5:180").unwrap();
        assert_eq!(v.len(), 9);
        assert_eq!(v[8], 180.0);
        assert_eq!(parse_degrees_list("25, 20").unwrap(), vec![25.0, 20.0]);
        assert!(parse_degrees_list("1:2").is_err());
        assert!(parse_degrees_list("5:1:1").is_err());
        let v = parse_degrees_list("5:175:5").unwrap();
        assert_eq!((v.len(), v[0], v[34]), (35, 5.0, 175.0));
    }

    #[test]
    fn methods_and_sizes() {
        assert_eq!(parse_methods("all").unwrap().len(), 5);
        assert_eq!(parse_methods("dft,ccc").unwrap(), vec![MethodKind::Dft, MethodKind::Ccc]);
        assert!(parse_methods("fft").is_err());
        assert_eq!(parse_sizes("64,128").unwrap(), vec![64, 128]);
        assert!(parse_sizes("0").is_err());
    }
}
