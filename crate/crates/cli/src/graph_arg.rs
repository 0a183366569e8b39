use std::fs;
use std::path::{Path, PathBuf};

use adgraph::graph::{Family, Graph};
use anyhow::{bail, Context, Result};
use clap::Args;

/// A graph given as a family string (positionally or via `--family`) or
/// as an edge-list file.
#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Family such as `cycle:6`, `double_star:3,4` or `petersen`.
    #[arg(value_name = "FAMILY", conflicts_with_all = ["family", "file"])]
    pub graph: Option<String>,
    #[arg(long, conflicts_with = "file")]
    pub family: Option<String>,
    /// Edge-list file: `n m` header, then one `u v` pair per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// A resolved graph with a display name and, for families, the family.
pub struct Resolved {
    pub name: String,
    pub family: Option<Family>,
    pub graph: Graph,
}

impl GraphArgs {
    pub fn resolve(&self) -> Result<Resolved> {
        match (&self.graph, &self.family, &self.file) {
            (Some(f), _, _) | (None, Some(f), _) => resolve_family(f),
            (None, None, Some(path)) => resolve_file(path),
            (None, None, None) => bail!("no graph given; pass FAMILY, --family or --file"),
        }
    }
}

fn resolve_family(text: &str) -> Result<Resolved> {
    let family: Family = text.parse()?;
    Ok(Resolved {
        name: family.to_string(),
        graph: family.build()?,
        family: Some(family),
    })
}

fn resolve_file(path: &Path) -> Result<Resolved> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graph =
        Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Resolved {
        name: path.display().to_string(),
        family: None,
        graph,
    })
}

/// For `--g`/`--h`: a family string, or a path to an edge-list file.
pub fn resolve_either(text: &str) -> Result<Resolved> {
    match resolve_family(text) {
        Ok(r) => Ok(r),
        Err(family_err) => {
            let path = Path::new(text);
            if path.exists() {
                resolve_file(path)
            } else {
                Err(family_err.context(format!("{text:?} is neither a family nor a file")))
            }
        }
    }
}
