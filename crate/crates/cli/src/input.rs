//! Reading polynomials from `-e` arguments and generator files.

use std::fs;
use std::path::PathBuf;

use ncreal_core::parse::{infer_num_vars, parse_poly};
use ncreal_core::Polynomial;

use crate::CliError;

/// Raw generator sources: inline expressions first, then each file's
/// non-comment lines in order.
#[derive(clap::Args, Debug, Clone, Default)]
pub struct Sources {
    /// Inline polynomial; repeat for several generators
    #[arg(short = 'e', long = "expr", value_name = "POLY")]
    pub exprs: Vec<String>,
    /// File with one polynomial per line; `#` starts a comment line
    #[arg(short = 'f', long = "file", value_name = "PATH")]
    pub files: Vec<PathBuf>,
}

impl Sources {
    pub fn texts(&self) -> Result<Vec<String>, CliError> {
        let mut out = self.exprs.clone();
        for path in &self.files {
            let content = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            out.extend(
                content.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
            );
        }
        if out.is_empty() {
            return Err(CliError::Usage(String::from("no polynomial given (use -e POLY or -f FILE)")));
        }
        Ok(out)
    }
}

/// The explicit variable count, or the smallest one covering every text.
pub fn num_vars<'a>(explicit: Option<usize>, texts: impl IntoIterator<Item = &'a str>) -> usize {
    explicit.unwrap_or_else(|| texts.into_iter().map(infer_num_vars).max().unwrap_or(1))
}

pub fn parse_all(texts: &[String], g: usize) -> Result<Vec<Polynomial>, CliError> {
    texts.iter().map(|t| parse_poly(t, g).map_err(|e| CliError::Input(format!("{t:?}: {e}")))).collect()
}
