//! On-disk cache of q-expansions, one file per `(D, conductor norm, B)`.

use std::fs;
use std::path::PathBuf;

use num_bigint::BigInt;

pub const ENV_VAR: &str = "CUBICCM_CACHE";

pub fn dir() -> Option<PathBuf> {
    match std::env::var_os(ENV_VAR) {
        Some(p) if !p.is_empty() => Some(PathBuf::from(p)),
        _ => dirs::cache_dir().map(|d| d.join("cubiccm")),
    }
}

fn path(d: u64, conductor_norm: u64, bound: usize) -> Option<PathBuf> {
    dir().map(|p| p.join(format!("qexp-D{d}-M{conductor_norm}-B{bound}.txt")))
}

fn read(path: &PathBuf, bound: usize) -> Option<Vec<BigInt>> {
    let text = fs::read_to_string(path).ok()?;
    let coeffs: Vec<BigInt> = text
        .lines()
        .map(|l| l.parse().ok())
        .collect::<Option<_>>()?;
    (coeffs.len() == bound).then_some(coeffs)
}

fn write(path: &PathBuf, coeffs: &[BigInt]) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut text = String::new();
    for c in coeffs {
        text.push_str(&c.to_string());
        text.push('\n');
    }
    // write then rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// Cached coefficients if present and well formed, otherwise computed and
/// stored. A cache that cannot be written is skipped.
pub fn qexpansion<E>(
    d: u64,
    conductor_norm: u64,
    bound: usize,
    compute: impl FnOnce() -> Result<Vec<BigInt>, E>,
) -> Result<Vec<BigInt>, E> {
    let path = path(d, conductor_norm, bound);
    if let Some(hit) = path.as_ref().and_then(|p| read(p, bound)) {
        return Ok(hit);
    }
    let coeffs = compute()?;
    if let Some(p) = &path {
        let _ = write(p, &coeffs);
    }
    Ok(coeffs)
}
