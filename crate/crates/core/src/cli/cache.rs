use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::Cli;
use crate::error::Result;

#[derive(Serialize, Deserialize)]
struct Entry {
    passed: bool,
    body: String,
}

/// Digest of the command, its parameters and the defining polynomial.
pub fn key(cli: &Cli, polynomial: Option<&[u32]>) -> String {
    let material = serde_json::to_string(&(cli, polynomial)).expect("serializable");
    hex::encode(Sha256::digest(material.as_bytes()))
}

pub fn load(dir: &Path, key: &str) -> Option<(String, bool)> {
    let text = fs::read_to_string(dir.join(format!("{key}.json"))).ok()?;
    let e: Entry = serde_json::from_str(&text).ok()?;
    Some((e.body, e.passed))
}

/// Writes through a temporary file and a rename.
pub fn store(dir: &Path, key: &str, body: &str, passed: bool) -> Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{key}.{}.tmp", std::process::id()));
    let text = serde_json::to_string(&Entry { passed, body: body.to_string() }).expect("serializable");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, dir.join(format!("{key}.json")))?;
    Ok(())
}
