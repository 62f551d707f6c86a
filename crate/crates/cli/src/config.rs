//! `--config` files: flat `key = value` lines whose keys are long flag names.
//!
//! The file's entries are spliced in right after the subcommand, so any flag
//! also given on the command line (which comes later) wins.

use std::ffi::OsString;
use std::fs;

use anyhow::{bail, Context, Result};

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`", lineno + 1);
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        let value = value.trim().trim_matches('"').to_string();
        if key.is_empty() || key == "config" {
            bail!("config line {}: invalid key `{}`", lineno + 1, key);
        }
        entries.push((key, value));
    }
    Ok(entries)
}

fn config_path(args: &[OsString]) -> Result<Option<(usize, usize, String)>> {
    for (i, a) in args.iter().enumerate() {
        let Some(s) = a.to_str() else { continue };
        if s == "--config" {
            let path = args
                .get(i + 1)
                .and_then(|p| p.to_str())
                .context("--config needs a path")?;
            return Ok(Some((i, 2, path.to_string())));
        }
        if let Some(path) = s.strip_prefix("--config=") {
            return Ok(Some((i, 1, path.to_string())));
        }
    }
    Ok(None)
}

/// Returns the argument vector with the config file's flags inserted after the subcommand.
pub fn expand_config_args(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some((at, width, path)) = config_path(&args)? else {
        return Ok(args);
    };
    let text = fs::read_to_string(&path).with_context(|| format!("reading config {path}"))?;
    let entries = parse_config(&text).with_context(|| format!("parsing config {path}"))?;

    let mut rest = args;
    rest.drain(at..at + width);
    if rest.len() < 2 {
        bail!("--config given without a subcommand");
    }
    let mut out: Vec<OsString> = rest[..2].to_vec();
    for (k, v) in entries {
        out.push(format!("--{k}").into());
        out.push(v.into());
    }
    out.extend_from_slice(&rest[2..]);
    Ok(out)
}
