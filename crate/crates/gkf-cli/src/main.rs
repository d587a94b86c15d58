//! `gkf` — relative Gel'fand-Kalinin-Fuks cohomology of formal Hamiltonian
//! vector fields on R^(2n), by weight, in exact rational arithmetic.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gkf_core::cache::BasisCache;
use gkf_core::characters::{
    tensor_decompose_klimyk, tensor_decompose_stable, weyl_dim, IrrepLabel,
};
use gkf_core::cochain::{render_cochain, slice};
use gkf_core::cohomology::{
    betti, build_relative_complex, heavy_degrees, relative_invariant_basis, CohomologyReport,
};
use gkf_core::invariants::isotypic_report;

#[derive(Parser)]
#[command(
    name = "gkf",
    about = "Relative Gel'fand-Kalinin-Fuks cohomology of formal Hamiltonian vector fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Half-dimension of the symplectic space (R^2 or R^4)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), default_value_t = 2)]
    n: u8,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and Euler characteristic of the relative complex at a
    /// fixed weight
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: u32,
        /// Minimum generator degree of the complex (3 = relative pipeline)
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3), default_value_t = 3)]
        min_gen: u32,
        /// Run the expensive degrees (10^5-dimensional invariant extraction)
        #[arg(long)]
        heavy: bool,
        /// Fail on weights where the complex is trivially zero (odd weights)
        #[arg(long)]
        strict: bool,
        /// Cache directory for invariant bases (GKF_CACHE overrides the default)
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Write the invariant bases to this directory in Z-notation
        #[arg(long)]
        emit_bases: Option<PathBuf>,
    },
    /// Dimensions of the cochain slices at a fixed weight
    SliceDims {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3), default_value_t = 3)]
        min_gen: u32,
    },
    /// Irreducible decomposition of one cochain slice
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3), default_value_t = 3)]
        min_gen: u32,
        /// Decompose a single direct summand instead of the whole slice,
        /// indexed as listed by slice-dims (e.g. the exterior-power factors)
        #[arg(long)]
        summand: Option<usize>,
        /// Allow slices above 100000 dimensions
        #[arg(long)]
        heavy: bool,
    },
    /// Tensor product of two irreducibles, e.g. `gkf tensor 3,1 4`
    Tensor {
        #[command(flatten)]
        common: Common,
        /// Highest weight `p,q` (or `p`) of the first factor
        left: String,
        /// Highest weight of the second factor
        right: String,
    },
    /// Dimension of an irreducible, e.g. `gkf dim 5,1`
    Dim {
        #[command(flatten)]
        common: Common,
        label: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Cohomology {
            common,
            weight,
            min_gen,
            heavy,
            strict,
            cache,
            emit_bases,
        } => cmd_cohomology(common, weight, min_gen, heavy, strict, cache, emit_bases),
        Command::SliceDims {
            common,
            weight,
            min_gen,
        } => cmd_slice_dims(common, weight, min_gen),
        Command::Decompose {
            common,
            weight,
            degree,
            min_gen,
            summand,
            heavy,
        } => cmd_decompose(common, weight, degree, min_gen, summand, heavy),
        Command::Tensor {
            common,
            left,
            right,
        } => cmd_tensor(common, &left, &right),
        Command::Dim { common, label } => cmd_dim(common, &label),
    }
}

fn open_cache(flag: Option<PathBuf>) -> Result<Option<BasisCache>> {
    let dir = flag.or_else(|| std::env::var_os("GKF_CACHE").map(PathBuf::from));
    match dir {
        Some(d) => Ok(Some(
            BasisCache::new(&d).with_context(|| format!("opening cache at {}", d.display()))?,
        )),
        None => Ok(None),
    }
}

fn parse_label(s: &str, n: u8) -> Result<IrrepLabel> {
    let parts: Vec<&str> = s.split(',').collect();
    let (p, q) = match parts.as_slice() {
        [p] => (p.trim().parse::<u32>()?, 0),
        [p, q] => (p.trim().parse::<u32>()?, q.trim().parse::<u32>()?),
        _ => bail!("label must be `p` or `p,q`, got {s:?}"),
    };
    if p < q {
        bail!("label must be dominant (p >= q), got ({p},{q})");
    }
    if n == 1 && q != 0 {
        bail!("n = 1 labels have a single part, got ({p},{q})");
    }
    Ok(IrrepLabel::new(p, q))
}

fn decomposition_strings(d: &BTreeMap<IrrepLabel, u64>) -> (String, serde_json::Value) {
    let text = if d.is_empty() {
        "0".to_string()
    } else {
        d.iter()
            .map(|(l, m)| {
                if *m == 1 {
                    l.to_string()
                } else {
                    format!("{m} {l}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let map: serde_json::Map<String, serde_json::Value> = d
        .iter()
        .map(|(l, m)| (l.to_string(), json!(m)))
        .collect();
    (text, serde_json::Value::Object(map))
}

fn cmd_cohomology(
    common: Common,
    weight: u32,
    min_gen: u32,
    heavy: bool,
    strict: bool,
    cache: Option<PathBuf>,
    emit_bases: Option<PathBuf>,
) -> Result<()> {
    if !weight.is_multiple_of(2) {
        if strict {
            bail!("weight {weight} is odd: the relative complex is the zero space (--strict)");
        }
        eprintln!("note: weight {weight} is odd, the relative complex is the zero space");
    }
    if weight >= 8 {
        eprintln!(
            "warning: weight {weight} is outside the validated range (2, 4, 6); \
             results are unvalidated"
        );
    }
    let cache = open_cache(cache)?;

    let heavy_ms = heavy_degrees(common.n, weight);
    let cache_warm = |c: &Option<BasisCache>| -> Result<bool> {
        let Some(c) = c else { return Ok(false) };
        for &m in &heavy_ms {
            let s = slice(common.n, weight, m, min_gen)?;
            if !c.contains(&s) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if !heavy_ms.is_empty() && !heavy && !cache_warm(&cache)? {
        // cost warning + partial run over the cheap degrees only
        eprintln!(
            "warning: degrees {:?} at weight {weight} need large invariant extractions \
             (slices up to ~1.8e5 dimensions); pass --heavy or point --cache/GKF_CACHE \
             at a warm cache to compute Betti numbers",
            heavy_ms
        );
        let light: Vec<u32> = (0..=weight).filter(|m| !heavy_ms.contains(m)).collect();
        let mut dims = Vec::new();
        for &m in &light {
            let s = slice(common.n, weight, m, min_gen)?;
            let inv = if !weight.is_multiple_of(2) {
                Vec::new()
            } else {
                relative_invariant_basis(&s, cache.as_ref())?
            };
            dims.push((m, inv.len()));
        }
        match common.format {
            Format::Text => {
                println!("relative complex n={} weight={weight} (partial)", common.n);
                for (m, d) in &dims {
                    println!("degree {m}: dim {d}");
                }
                println!("degrees {heavy_ms:?}: skipped (rerun with --heavy)");
            }
            Format::Json => {
                let rows: Vec<_> = dims
                    .iter()
                    .map(|(m, d)| json!({"degree": m, "dim": d}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "command": "cohomology",
                        "n": common.n,
                        "weight": weight,
                        "min_gen": min_gen,
                        "partial": true,
                        "degrees": rows,
                        "skipped_degrees": heavy_ms,
                    }))?
                );
            }
        }
        return Ok(());
    }

    let rc = build_relative_complex(common.n, weight, min_gen, cache.as_ref())?;
    let report = betti(&rc);

    if let Some(dir) = emit_bases {
        fs::create_dir_all(&dir)?;
        for deg in &rc.degrees {
            if deg.invariants.is_empty() {
                continue;
            }
            let path = dir.join(format!(
                "basis-n{}-w{}-m{}.txt",
                common.n,
                weight,
                deg.slice.degree()
            ));
            let mut out = String::new();
            for (i, v) in deg.invariants.iter().enumerate() {
                out.push_str(&format!(
                    "# vector {} of {} ({} terms)\n{}\n",
                    i + 1,
                    deg.invariants.len(),
                    v.num_terms(),
                    render_cochain(deg.slice.table(), v)
                ));
            }
            fs::write(&path, out).with_context(|| format!("writing {}", path.display()))?;
        }
    }

    print_report(&common, &report)
}

fn print_report(common: &Common, report: &CohomologyReport) -> Result<()> {
    match common.format {
        Format::Text => {
            println!(
                "relative cohomology n={} weight={}",
                report.n, report.weight
            );
            println!("{}", report.table());
        }
        Format::Json => {
            let rows: Vec<_> = report
                .degrees
                .iter()
                .map(|d| {
                    json!({
                        "degree": d.degree,
                        "dim": d.dim,
                        "betti": d.betti,
                        "rank_out": d.rank_out,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "command": "cohomology",
                    "n": report.n,
                    "weight": report.weight,
                    "degrees": rows,
                    "euler": report.euler_from_betti,
                }))?
            );
        }
    }
    Ok(())
}

fn cmd_slice_dims(common: Common, weight: u32, min_gen: u32) -> Result<()> {
    let max_degree = if min_gen == 2 {
        // degree-2 factors add degree without weight; stop once empty
        weight + 2 * u32::from(common.n) * (2 * u32::from(common.n) + 1) / 2
    } else {
        weight
    };
    let mut rows = Vec::new();
    for m in 0..=max_degree {
        let s = slice(common.n, weight, m, min_gen)?;
        let shapes: Vec<String> = s.shapes().iter().map(|sh| sh.to_string()).collect();
        rows.push((m, s.dim(), shapes));
    }
    while rows.last().is_some_and(|(_, d, _)| *d == 0) && rows.len() > weight as usize + 1 {
        rows.pop();
    }
    match common.format {
        Format::Text => {
            println!(
                "cochain slice dimensions n={} weight={weight} min_gen={min_gen}",
                common.n
            );
            for (m, d, shapes) in &rows {
                println!("degree {m}: dim {d}   [{}]", shapes.join("  ⊕  "));
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(m, d, shapes)| json!({"degree": m, "dim": d, "shapes": shapes}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "command": "slice-dims",
                    "n": common.n,
                    "weight": weight,
                    "min_gen": min_gen,
                    "degrees": rows,
                }))?
            );
        }
    }
    Ok(())
}

fn cmd_decompose(
    common: Common,
    weight: u32,
    degree: u32,
    min_gen: u32,
    summand: Option<usize>,
    heavy: bool,
) -> Result<()> {
    let s = match summand {
        None => slice(common.n, weight, degree, min_gen)?,
        Some(k) => {
            let shapes = gkf_core::partitions::shapes_for(weight, degree, min_gen);
            let shape = shapes.get(k).ok_or_else(|| {
                anyhow!(
                    "summand index {k} out of range: the slice has {} shapes",
                    shapes.len()
                )
            })?;
            gkf_core::cochain::shape_slice(common.n, shape)?
        }
    };
    if s.dim() > 100_000 && !heavy {
        bail!(
            "slice n={} w={weight} m={degree} has dimension {}; pass --heavy to decompose it",
            common.n,
            s.dim()
        );
    }
    let report = isotypic_report(&s);
    let labeled: BTreeMap<IrrepLabel, u64> = report
        .multiplicities
        .iter()
        .map(|(&w, &m)| {
            (
                IrrepLabel::from_weight(w).expect("report weights are dominant"),
                m,
            )
        })
        .collect();
    let (text, map) = decomposition_strings(&labeled);
    let total: u64 = report.total_dimension();
    match common.format {
        Format::Text => {
            println!(
                "slice n={} weight={weight} degree={degree} (dim {}):",
                common.n,
                s.dim()
            );
            println!("{text}");
            println!("total dimension check: {total}");
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "decompose",
                "n": common.n,
                "weight": weight,
                "degree": degree,
                "min_gen": min_gen,
                "dim": s.dim(),
                "multiplicities": map,
                "total_dimension": total,
            }))?
        ),
    }
    Ok(())
}

fn cmd_tensor(common: Common, left: &str, right: &str) -> Result<()> {
    let l = parse_label(left, common.n)?;
    let r = parse_label(right, common.n)?;
    let klimyk = tensor_decompose_klimyk(&l, &r, common.n);
    let stable = tensor_decompose_stable(&l, &r, common.n).into_unsigned();
    if klimyk != stable {
        return Err(anyhow!(
            "internal cross-check failed: Klimyk and LR+modification disagree on {l} (x) {r}"
        ));
    }
    let dim_product = weyl_dim(&l, common.n) * weyl_dim(&r, common.n);
    let total: u64 = klimyk.iter().map(|(x, m)| m * weyl_dim(x, common.n)).sum();
    if total != dim_product {
        return Err(anyhow!("dimension identity failed: {total} != {dim_product}"));
    }
    let (text, map) = decomposition_strings(&klimyk);
    match common.format {
        Format::Text => println!("{l} ⊗ {r} = {text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "tensor",
                "n": common.n,
                "left": l.to_string(),
                "right": r.to_string(),
                "multiplicities": map,
                "dimension": total,
            }))?
        ),
    }
    Ok(())
}

fn cmd_dim(common: Common, label: &str) -> Result<()> {
    let l = parse_label(label, common.n)?;
    let d = weyl_dim(&l, common.n);
    match common.format {
        Format::Text => println!("dim {l} = {d}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "dim",
                "n": common.n,
                "label": l.to_string(),
                "dim": d,
            }))?
        ),
    }
    Ok(())
}
