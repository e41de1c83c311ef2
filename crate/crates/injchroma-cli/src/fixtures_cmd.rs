//! Fixture management: list the manifest, re-verify shipped graphs against
//! their recorded invariants, and (explicitly network-enabled) refresh a
//! fixture from the House of Graphs by id.

use anyhow::{anyhow, bail, Context, Result};
use injchroma::families::{manifest, FixtureInfo};
use injchroma::metrics::{girth, Girth};
use injchroma::planarity::is_planar;
use injchroma::solver::injective_chromatic_number;
use injchroma::{graph6, Graph};
use std::path::{Path, PathBuf};

/// Environment variable overriding the on-disk fixture directory.
pub const FIXTURE_DIR_ENV: &str = "INJCHROMA_FIXTURES";

pub fn default_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURE_DIR_ENV).map(PathBuf::from)
}

pub fn list() -> String {
    let mut out = String::from("name                 n   m  maxdeg girth chi_i hog_id\n");
    for f in manifest() {
        out.push_str(&format!(
            "{:<20} {:<3} {:<3} {:<6} {:<5} {:<5} {}\n",
            f.name,
            f.order,
            f.size,
            f.max_degree,
            f.girth,
            f.chi_i,
            f.hog_id.map_or_else(|| "-".into(), |id| id.to_string()),
        ));
    }
    out
}

/// Recomputes every manifest invariant; with a directory, also checks the
/// on-disk graph6 files byte-for-byte. Returns the failure descriptions.
pub fn verify(dir: Option<&Path>) -> Vec<String> {
    let mut failures = Vec::new();
    for info in manifest() {
        if let Err(e) = verify_one(info, dir) {
            failures.push(format!("{}: {e}", info.name));
        }
    }
    failures
}

fn verify_one(info: &FixtureInfo, dir: Option<&Path>) -> Result<()> {
    let mut line = info.graph6.clone();
    if let Some(dir) = dir {
        let path = dir.join(format!("{}.g6", info.name));
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?;
        line = text.trim().to_string();
        if line != info.graph6 {
            bail!("on-disk graph6 differs from the manifest checksum");
        }
    }
    let g = graph6::parse_graph6(&line)?;
    check_invariants(info, &g)
}

pub fn check_invariants(info: &FixtureInfo, g: &Graph) -> Result<()> {
    if g.order() != info.order {
        bail!("order {} != {}", g.order(), info.order);
    }
    if g.size() != info.size {
        bail!("size {} != {}", g.size(), info.size);
    }
    if g.max_degree() != info.max_degree {
        bail!("max degree {} != {}", g.max_degree(), info.max_degree);
    }
    if girth(g) != Girth::Finite(info.girth) {
        bail!("girth mismatch");
    }
    if !is_planar(g) {
        bail!("graph is not planar");
    }
    for (name, &v) in &info.marks {
        if v >= g.order() {
            bail!("mark {name} out of range");
        }
    }
    let chi = injective_chromatic_number(g).chi_i;
    if chi != info.chi_i {
        bail!("chi_i {} != {}", chi, info.chi_i);
    }
    Ok(())
}

/// Downloads the graph6 for a House of Graphs id, verifies it against the
/// manifest entry carrying that id, and stores it in `dir`. Refuses to write
/// anything that fails verification.
pub fn fetch(hog_id: u64, dir: &Path, enable_network: bool) -> Result<PathBuf> {
    let info = manifest()
        .iter()
        .find(|f| f.hog_id == Some(hog_id))
        .ok_or_else(|| {
            let known: Vec<String> = manifest()
                .iter()
                .filter_map(|f| f.hog_id.map(|id| format!("{id} ({})", f.name)))
                .collect();
            anyhow!("no fixture with House of Graphs id {hog_id}; known ids: {}", known.join(", "))
        })?;
    if !enable_network {
        bail!(
            "network access is off by default; the shipped fixture `{}` already covers id {hog_id} \
             (re-run with --enable-network to refresh it)",
            info.name
        );
    }
    let url = format!("https://houseofgraphs.org/api/graphs/{hog_id}/graph6");
    let body = ureq::get(&url)
        .call()
        .with_context(|| format!("fetching {url}"))?
        .body_mut()
        .read_to_string()
        .context("reading response body")?;
    let line = body.trim();
    let g = graph6::parse_graph6(line).context("decoding downloaded graph6")?;
    check_invariants(info, &g).context("downloaded graph fails manifest invariants; refusing to store")?;
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}.g6", info.name));
    std::fs::write(&path, format!("{line}\n"))?;
    Ok(path)
}
