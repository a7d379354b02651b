use std::path::PathBuf;

use nvk_core::io::{parse_spec, write_tensor_string};
use nvk_core::ybe::{search_nybe, triangular_bialgebra, SearchOptions, DEFAULT_BUDGET};
use nvk_core::{Error, Scalar};

use crate::{save, summarize, write_report, FAILED};

#[derive(clap::Args)]
pub struct Args {
    spec: PathBuf,
    /// Comma-separated rational values for each free entry.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Directory receiving the triangular bialgebra of every hit.
    #[arg(long)]
    emit_bialgebras: Option<PathBuf>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn parse_grid(s: &str) -> anyhow::Result<Vec<Scalar>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<Scalar>().map_err(|e| Error::Parse(format!("grid value {p:?}: {e}")).into()))
        .collect()
}

pub fn run(args: &Args) -> anyhow::Result<u8> {
    let spec = parse_spec(&args.spec)?;
    let grid = parse_grid(&args.grid)?;
    if grid.is_empty() {
        return Err(Error::Parse("empty grid".into()).into());
    }
    let hits = search_nybe(&spec, &grid, SearchOptions { budget: args.budget })?;
    println!("{} solutions", hits.len());
    let mut contract = Vec::new();
    for (i, r) in hits.iter().enumerate() {
        println!("solution {i}:");
        print!("{}", write_tensor_string(r));
        if let Some(dir) = &args.emit_bialgebras {
            let tri = triangular_bialgebra(&spec, r)?;
            contract.extend(tri.contract.into_iter().map(|rep| rep.with_context(format!("solution {i}"))));
            std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            save(&dir.join(format!("solution-{i}.alg")), &tri.value)?;
        }
    }
    let ok = contract.is_empty() || summarize(&contract);
    write_report(args.report.as_deref(), &contract)?;
    Ok(if ok { 0 } else { FAILED })
}
