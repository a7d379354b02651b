use std::path::{Path, PathBuf};

use clap::ValueEnum;

use nvk_core::construct::{
    adjoint_nn, adjoint_wrt_form, bowtie_nn, coadjoint_nn, double_construction,
    dual_nn_representation, manin_from_bialgebra, matched_pair_from_bialgebra, semidirect_nn,
    MatchedPairData, Verified,
};
use nvk_core::derived::{
    derive_nn_bialgebra, derive_nn_bialgebra_diagnostic, gelfand_dual, gelfand_nn,
    pre_novikov_from_diff_dendriform, pre_novikov_from_o_operator,
    pre_novikov_from_quasi_frobenius,
};
use nvk_core::io::{parse_spec, parse_tensor};
use nvk_core::ybe::{lift_o_operator, triangular_bialgebra};
use nvk_core::{AlgebraSpec, Error, NNRepresentation, OOperatorProblem, Report};

use crate::{save, summarize, write_report, FAILED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    DualRep,
    Adjoint,
    Coadjoint,
    SemidirectNn,
    BowtieNn,
    Manin,
    MatchedPair,
    DoubleConstruction,
    Triangular,
    LiftOOperator,
    Gelfand,
    GelfandDual,
    PreNovikovFromO,
    PreNovikovFromDendriform,
    PreNovikovFromQf,
    DeriveNnBialgebra,
    AdjointForm,
}

#[derive(clap::Args)]
pub struct Args {
    spec: PathBuf,
    construction: Construction,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tensor file for `triangular`; defaults to the spec's tensor `r`.
    #[arg(long)]
    r: Option<PathBuf>,
    /// Second representation for `bowtie-nn` (B acting on A).
    #[arg(long)]
    with: Option<PathBuf>,
    /// Second output of `matched-pair` (A* acting on A).
    #[arg(long)]
    out_b: Option<PathBuf>,
    /// Map whose adjoint `adjoint-form` computes.
    #[arg(long, default_value = "partial")]
    map: String,
    /// For `derive-nn-bialgebra`: build the output even if hypotheses fail.
    #[arg(long)]
    diagnostic: bool,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn second_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = out.extension().map(|e| format!(".{}", e.to_string_lossy())).unwrap_or_default();
    out.with_file_name(format!("{stem}-b{ext}"))
}

fn tensor_arg(args: &Args, spec: &AlgebraSpec) -> anyhow::Result<nvk_core::Tensor2> {
    match &args.r {
        Some(p) => Ok(parse_tensor(p)?),
        None => Ok(spec.tensor("r")?.clone()),
    }
}

/// Output specs to write and the contract to report.
struct Outcome {
    files: Vec<(PathBuf, AlgebraSpec)>,
    contract: Vec<Report>,
}

fn single(out: Option<&PathBuf>, v: Verified<AlgebraSpec>) -> Outcome {
    Outcome {
        files: out.map(|p| (p.clone(), v.value)).into_iter().collect(),
        contract: v.contract,
    }
}

fn build(args: &Args) -> anyhow::Result<Outcome> {
    use Construction::*;
    let spec = parse_spec(&args.spec)?;
    let out = args.out.as_ref();
    let rep_spec = |v: Verified<NNRepresentation>| v.map(|r| r.to_spec());
    Ok(match args.construction {
        DualRep => single(out, rep_spec(dual_nn_representation(&NNRepresentation::from_spec(&spec)?)?)),
        Adjoint => single(out, rep_spec(adjoint_nn(&spec)?)),
        Coadjoint => single(out, rep_spec(coadjoint_nn(&spec)?)),
        SemidirectNn => single(out, semidirect_nn(&NNRepresentation::from_spec(&spec)?)?),
        BowtieNn => {
            let with = args
                .with
                .as_ref()
                .ok_or_else(|| anyhow::anyhow!("bowtie-nn needs --with B-on-A.alg"))?;
            let a = NNRepresentation::from_spec(&spec)?;
            let b = NNRepresentation::from_spec(&parse_spec(with)?)?;
            single(out, bowtie_nn(&MatchedPairData::new(a, b)?)?)
        }
        Manin => single(out, manin_from_bialgebra(&spec)?),
        MatchedPair => {
            let mp = matched_pair_from_bialgebra(&spec)?;
            let mut files = Vec::new();
            if let Some(p) = out {
                let pb = args.out_b.clone().unwrap_or_else(|| second_path(p));
                files.push((p.clone(), mp.value.a.to_spec()));
                files.push((pb, mp.value.b.to_spec()));
            }
            Outcome {
                files,
                contract: mp.contract,
            }
        }
        DoubleConstruction => single(out, double_construction(&spec)?),
        Triangular => {
            let r = tensor_arg(args, &spec)?;
            let mut base = spec.clone();
            base.tensors.clear();
            single(out, triangular_bialgebra(&base, &r)?)
        }
        LiftOOperator => {
            let lifted = lift_o_operator(&OOperatorProblem::from_spec(&spec)?)?;
            single(out, lifted.map(|(a, r)| a.with_tensor("r", r)))
        }
        Gelfand => single(out, gelfand_nn(&spec)?),
        GelfandDual => single(out, gelfand_dual(&spec)?),
        PreNovikovFromO => single(
            out,
            pre_novikov_from_o_operator(&OOperatorProblem::from_spec(&spec)?)?.map(|p| p.to_spec()),
        ),
        PreNovikovFromDendriform => {
            single(out, pre_novikov_from_diff_dendriform(&spec)?.map(|p| p.to_spec()))
        }
        PreNovikovFromQf => single(out, pre_novikov_from_quasi_frobenius(&spec)?.map(|p| p.to_spec())),
        DeriveNnBialgebra => {
            if args.diagnostic {
                single(out, derive_nn_bialgebra_diagnostic(&spec)?)
            } else {
                single(out, derive_nn_bialgebra(&spec)?)
            }
        }
        AdjointForm => {
            let m = spec.map(&args.map)?;
            let adj = adjoint_wrt_form(m, spec.form("form")?)?;
            let name = format!("{}_adjoint", args.map);
            if spec.maps.contains_key(&name) {
                return Err(Error::Parse(format!("map {name:?} already exists")).into());
            }
            single(
                out,
                Verified {
                    value: spec.clone().with_map(&name, adj),
                    contract: Vec::new(),
                },
            )
        }
    })
}

pub fn run(args: &Args) -> anyhow::Result<u8> {
    let outcome = build(args)?;
    let ok = summarize(&outcome.contract);
    write_report(args.report.as_deref(), &outcome.contract)?;
    for (path, spec) in &outcome.files {
        save(path, spec)?;
    }
    Ok(if ok { 0 } else { FAILED })
}
