use anyhow::{bail, Context, Result};

pub const DEFAULT_SEED: u64 = 42;

/// Parses `a..b` (inclusive), single integers, or comma-separated mixes of
/// both, e.g. `1..5,9`. Order is kept and duplicates are dropped.
pub fn parse_seeds(spec: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().with_context(|| format!("bad seed range start in '{part}'"))?;
            let b: u64 = b.trim().parse().with_context(|| format!("bad seed range end in '{part}'"))?;
            if a > b {
                bail!("empty seed range '{part}'");
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().with_context(|| format!("bad seed '{part}'"))?);
        }
    }
    if out.is_empty() {
        bail!("no seeds in '{spec}'");
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(*s));
    Ok(out)
}

/// Seeds from the flag, or the default with a warning when randomized work
/// needs them.
pub fn resolve(spec: Option<&str>, needed: bool) -> Result<Vec<u64>> {
    match spec {
        Some(s) => parse_seeds(s),
        None => {
            if needed {
                eprintln!("warning: no --seeds given, using seed {DEFAULT_SEED}");
            }
            Ok(vec![DEFAULT_SEED])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_seeds("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_seeds("7").unwrap(), vec![7]);
        assert_eq!(parse_seeds("1..2, 9,2").unwrap(), vec![1, 2, 9]);
        assert_eq!(parse_seeds("1..20").unwrap().len(), 20);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_seeds("").is_err());
        assert!(parse_seeds("3..1").is_err());
        assert!(parse_seeds("a").is_err());
        assert!(parse_seeds("1..x").is_err());
    }
}
