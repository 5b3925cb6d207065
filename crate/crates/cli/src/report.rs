use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

#[derive(Serialize, Debug)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize, Debug)]
pub struct ArtifactDigest {
    pub name: String,
    pub sha256: String,
}

/// Field order here is the order in the emitted JSON.
#[derive(Serialize, Debug)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub outputs: Value,
    pub verdict: Option<bool>,
    pub artifacts: Vec<ArtifactDigest>,
    pub timing_ms: u64,
}

/// What a subcommand produced, before anything touches the disk.
#[derive(Debug, Default)]
pub struct Outcome {
    pub outputs: Value,
    pub verdict: Option<bool>,
    pub artifacts: Vec<(String, String)>,
}

#[derive(Debug)]
pub enum CliError {
    Core(qtanner::Error),
    Io { path: PathBuf, message: String },
    Json { path: String, message: String },
    Usage(String),
}

impl From<qtanner::Error> for CliError {
    fn from(e: qtanner::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use qtanner::Error as E;
        match self {
            CliError::Io { .. } => "io",
            CliError::Json { .. } => "malformed_json",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                E::Dimension(_) => "dimension",
                E::InvalidPermutation(_) => "invalid_permutation",
                E::InvalidSpec(_) => "invalid_spec",
                E::InvalidGraph(_) => "invalid_graph",
                E::InvalidGroup(_) => "invalid_group",
                E::NotSymmetric(_) => "not_symmetric",
                E::NonCommuting(_) => "non_commuting",
                E::OverlappingEdges { .. } => "overlapping_edges",
                E::NotBipartite(_) => "not_bipartite",
                E::DegreeMismatch { .. } => "degree_mismatch",
                E::PairingIncompatible(_) => "pairing_incompatible",
                E::SelfLoop(_) => "self_loop",
                E::NotCss(_) => "not_css",
                E::Budget { .. } => "budget",
                E::ConditionIi { .. } => "condition_ii",
                E::SwappingCondition(_) => "swapping_condition",
                E::Unsupported(_) => "unsupported",
                E::Domain(_) => "domain",
                E::Reconstruction(_) => "reconstruction",
                E::Parse(_) => "parse",
            },
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io { path, message } => format!("{}: {message}", path.display()),
            CliError::Json { path, message } => format!("{path}: {message}"),
            CliError::Usage(m) => m.clone(),
        }
    }

    /// One human sentence on what to fix.
    pub fn hint(&self) -> &'static str {
        match self.kind() {
            "io" => "could not read or write a file; check the path and permissions",
            "malformed_json" | "parse" => "the input file does not follow the documented format",
            "usage" => "see `qtanner --help` for the accepted arguments",
            "budget" => "the exhaustive distance search would be too large; raise --cap or pass --force",
            "non_commuting" => "the square complex needs graphs whose adjacency matrices commute",
            "overlapping_edges" => "the two graphs must not share a vertex pair",
            "not_bipartite" => "both graphs must be bipartite on one shared partition",
            "degree_mismatch" => "both graphs must have the same degree",
            "pairing_incompatible" => "inverse-label pairs must agree along the other graph's edges",
            "dimension" => "sizes do not match; local codes must have length equal to the degree",
            "condition_ii" | "swapping_condition" | "reconstruction" => {
                "the square graphs do not come from a Schreier pair"
            }
            _ => "the input violates a precondition of the requested operation",
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Writes every artifact or none: files go to temporary names first and are
/// renamed once all writes succeeded.
pub fn write_all(dir: &Path, files: &[(String, String)]) -> CliResult<()> {
    let io = |path: &Path, e: std::io::Error| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut staged: Vec<(PathBuf, PathBuf)> = Vec::new();
    let cleanup = |staged: &[(PathBuf, PathBuf)]| {
        for (tmp, _) in staged {
            let _ = fs::remove_file(tmp);
        }
    };
    for (name, body) in files {
        let dst = dir.join(name);
        let tmp = dir.join(format!(".{name}.partial"));
        if let Err(e) = fs::write(&tmp, body) {
            let _ = fs::remove_file(&tmp);
            cleanup(&staged);
            return Err(io(&dst, e));
        }
        staged.push((tmp, dst));
    }
    for (i, (tmp, dst)) in staged.iter().enumerate() {
        if let Err(e) = fs::rename(tmp, dst) {
            cleanup(&staged[i..]);
            for (_, done) in &staged[..i] {
                let _ = fs::remove_file(done);
            }
            return Err(io(dst, e));
        }
    }
    Ok(())
}
