//! Index-set specs and tolerance resolution.
//!
//! A spec is a comma-separated list of indices and half-open ranges `a..b`,
//! optionally suffixed `:sym` to close the set under `j -> -j (mod n)`.
//! The empty string is the empty set.

use projpair::{Error, IndexSet, Result};

pub fn parse_index_set(spec: &str, n: usize) -> Result<IndexSet> {
    let (body, symmetric) = match spec.strip_suffix(":sym") {
        Some(rest) => (rest, true),
        None => (spec, false),
    };
    let mut members = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((start, end)) = token.split_once("..") {
            let start: usize = start
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad range start in {token:?}")))?;
            let end: usize = end
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad range end in {token:?}")))?;
            if start > end {
                return Err(Error::Parse(format!("range {token:?} runs backwards")));
            }
            if end > n {
                return Err(Error::IndexOutOfRange {
                    index: end.saturating_sub(1),
                    n,
                });
            }
            members.extend(start..end);
        } else {
            let index: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad index {token:?}")))?;
            members.push(index);
        }
    }
    let set = IndexSet::new(n, members)?;
    Ok(if symmetric { set.symmetrized() } else { set })
}

/// Explicit flag beats the `PROJPAIR_TOL` environment variable beats the
/// per-command default.
pub fn resolve_tol(flag: Option<f64>, default: f64) -> Result<f64> {
    if let Some(t) = flag {
        return check_tol(t);
    }
    match std::env::var("PROJPAIR_TOL") {
        Ok(text) => {
            let t: f64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("PROJPAIR_TOL is not a number: {text:?}")))?;
            check_tol(t)
        }
        Err(_) => Ok(default),
    }
}

fn check_tol(t: f64) -> Result<f64> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {t}"
        )))
    }
}

pub fn parse_sizes(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(|token| {
            token
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size {token:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges_and_lists() {
        assert_eq!(parse_index_set("0..4", 16).unwrap().members(), &[0, 1, 2, 3]);
        assert_eq!(parse_index_set("1,3,5", 8).unwrap().members(), &[1, 3, 5]);
        assert_eq!(parse_index_set("", 8).unwrap().members(), &[] as &[usize]);
        assert_eq!(
            parse_index_set("0..2,5,7", 8).unwrap().members(),
            &[0, 1, 5, 7]
        );
    }

    #[test]
    fn symmetric_suffix_closes_under_negation() {
        assert_eq!(
            parse_index_set("1,2:sym", 8).unwrap().members(),
            &[1, 2, 6, 7]
        );
        assert_eq!(parse_index_set("0:sym", 8).unwrap().members(), &[0]);
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(parse_index_set("a..b", 8).is_err());
        assert!(parse_index_set("3..1", 8).is_err());
        assert!(parse_index_set("1;2", 8).is_err());
        assert!(matches!(
            parse_index_set("9", 8),
            Err(Error::IndexOutOfRange { index: 9, n: 8 })
        ));
        assert!(parse_index_set("0..9", 8).is_err());
    }

    #[test]
    fn range_end_at_dimension_is_allowed() {
        // half-open: 0..8 with n = 8 is the full set
        assert_eq!(parse_index_set("0..8", 8).unwrap().len(), 8);
    }

    #[test]
    fn tolerance_resolution_order() {
        assert_eq!(resolve_tol(Some(1e-7), 1e-9).unwrap(), 1e-7);
        assert!(resolve_tol(Some(-1.0), 1e-9).is_err());
        // No env var set in tests: default wins.
        std::env::remove_var("PROJPAIR_TOL");
        assert_eq!(resolve_tol(None, 1e-9).unwrap(), 1e-9);
    }
}
