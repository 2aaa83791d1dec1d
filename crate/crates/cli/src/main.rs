//! `limitshape`: command-line driver for exact partition counting,
//! enumeration, exact Boltzmann sampling, limit-shape curves, bijections,
//! and reproducible convergence experiments.
//!
//! All randomized subcommands default to the fixed seed 20240601 so that bare
//! invocations are reproducible; identical seed and flags produce
//! byte-identical output. Internal parallelism honors `RAYON_NUM_THREADS`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use limitshape_core::biject::{
    self, convex_spec, even_parts_spec, glaisher_spec, stanton_spec, validate_structure,
};
use limitshape_core::class::{ClassSpec, Mult};
use limitshape_core::curveops::{
    pipeline_glaisher, pipeline_lebesgue_stages, pipeline_selfconjugate, MonotoneCurve,
};
use limitshape_core::enumerate::{count, count_table, enumerate_all};
use limitshape_core::sampler::{replica_rng, run_convergence, sample, Mode, SamplerConfig};
use limitshape_core::shape::{const_d, durfee_constant, lebesgue_x0, parts_constant, ShapeCurve};
use limitshape_core::sizes::PartSizeSet;
use limitshape_core::Partition;

/// Fixed default seed for all randomized subcommands.
const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser)]
#[command(
    name = "limitshape",
    version,
    about = "Integer-partition limit shapes: counting, sampling, bijections, curves",
    long_about = "Exact partition counting and enumeration, exact Boltzmann sampling \
(plain rejection and probabilistic divide-and-conquer), partition bijections, \
closed-form limit-shape curves, and reproducible convergence experiments.\n\
Randomized subcommands default to seed 20240601; set RAYON_NUM_THREADS to \
control internal parallelism."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SampleMode {
    Plain,
    Pdc,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact count of partitions in a class, one size or a whole table.
    Count {
        /// Class name, e.g. unrestricted, distinct, odd, convex:2, stanton-a:1:3.
        #[arg(long)]
        class: String,
        /// Single size to count.
        #[arg(long, conflicts_with = "nmax")]
        n: Option<u64>,
        /// Emit the full table for 0..=nmax instead of one size.
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List every partition of n in a class, one per line.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Draw exact-size samples from the tilted-geometric model.
    Sample {
        /// Sampling class: unrestricted, distinct, or odd.
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = SampleMode::Plain)]
        mode: SampleMode,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of samples (one partition per line).
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Empirical scaled diagrams of repeated exact samples vs the limit shape.
    Converge {
        /// Sampling class: unrestricted, distinct, or odd.
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 200)]
        replicas: usize,
        /// Evaluation grid a:b:step (inclusive).
        #[arg(long, default_value = "0.1:3.0:0.1")]
        grid: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Apply or exhaustively verify a named partition bijection.
    Bijection {
        /// glaisher | hooks | stanton:r:m | rthdiff:r | evenparts:k
        #[arg(long)]
        name: String,
        /// Apply to one partition, e.g. --apply "6,3,1".
        #[arg(long, conflicts_with = "verify")]
        apply: Option<String>,
        /// Verify the size-preserving bijection exhaustively for n ≤ nmax.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 30)]
        nmax: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Tabulate a limit-shape curve on a grid.
    Shape {
        /// unrestricted | distinct | odd | romik-a | romik-b | lebesgue |
        /// lebesgue-conjugate | rth:r | diffd:d
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "0.1:4.0:0.1")]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the table of limit-shape constants.
    Constants {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Tabulate every stage of a curve pipeline, one CSV per stage.
    Pipeline {
        /// selfconjugate | glaisher | lebesgue
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "0.05:3.0:0.05")]
        grid: String,
        /// Directory for the per-stage CSV files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Check every registered equinumerosity identity by exact counting.
    Identities {
        /// Largest size to check (≤ 60).
        #[arg(long, default_value_t = 40)]
        nmax: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Formats a float with 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    format!("{rounded}")
}

fn write_out(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Parses an inclusive a:b:step grid.
fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let toks: Vec<&str> = spec.split(':').collect();
    let [a, b, step] = toks.as_slice() else {
        bail!("grid must be a:b:step, got {spec:?}");
    };
    let (a, b, step): (f64, f64, f64) = (a.parse()?, b.parse()?, step.parse()?);
    if step <= 0.0 || b < a {
        bail!("grid requires step > 0 and b ≥ a");
    }
    let count = ((b - a) / step + 1.5).floor() as usize;
    Ok((0..count).map(|i| a + i as f64 * step).collect())
}

/// Sampler model and reference curve for the classes that support sampling.
fn sampling_class(name: &str) -> Result<(PartSizeSet, Mult, ShapeCurve)> {
    match name {
        "unrestricted" => Ok((
            PartSizeSet::integers(),
            Mult::Infinite,
            ShapeCurve::unrestricted(),
        )),
        "distinct" => Ok((
            PartSizeSet::integers(),
            Mult::Finite(2),
            ShapeCurve::distinct(),
        )),
        "odd" => Ok((
            PartSizeSet::Poly(vec![2.0, -1.0]),
            Mult::Infinite,
            ShapeCurve::odd(),
        )),
        other => Err(anyhow!(
            "class {other:?} does not support sampling (use unrestricted, distinct, or odd)"
        )),
    }
}

fn shape_curve(name: &str) -> Result<ShapeCurve> {
    let toks: Vec<&str> = name.split(':').collect();
    match toks.as_slice() {
        ["unrestricted"] => Ok(ShapeCurve::unrestricted()),
        ["distinct"] => Ok(ShapeCurve::distinct()),
        ["odd"] => Ok(ShapeCurve::odd()),
        ["romik-a"] => Ok(ShapeCurve::romik_a_curve()),
        ["romik-b"] => Ok(ShapeCurve::romik_b_curve()),
        ["lebesgue"] => Ok(ShapeCurve::lebesgue()),
        ["lebesgue-conjugate"] => Ok(ShapeCurve::lebesgue_conjugate()),
        ["rth", r] => Ok(ShapeCurve::rth_conjugate(r.parse()?)),
        ["diffd", d] => Ok(ShapeCurve::diffd_conjugate(d.parse()?)),
        _ => Err(anyhow!("unknown shape {name:?}")),
    }
}

/// The registered equinumerosity pairs checked by `identities`.
fn identity_pairs() -> Vec<(String, ClassSpec, ClassSpec)> {
    let mut pairs: Vec<(String, ClassSpec, ClassSpec)> = vec![
        (
            "triangular-vs-convex2".into(),
            ClassSpec::PartsIn {
                set: PartSizeSet::triangular(),
                bound: Mult::Infinite,
            },
            ClassSpec::Convex(2),
        ),
        (
            "binom3-vs-convex3".into(),
            ClassSpec::PartsIn {
                set: PartSizeSet::binomial(3),
                bound: Mult::Infinite,
            },
            ClassSpec::Convex(3),
        ),
        ("odd-vs-distinct".into(), ClassSpec::Odd, ClassSpec::Distinct),
        (
            "selfconjugate-vs-odddistinct".into(),
            ClassSpec::SelfConjugate,
            ClassSpec::OddDistinct,
        ),
        (
            "distinctmod4-vs-lebesgue".into(),
            ClassSpec::DistinctMod4In012,
            ClassSpec::LebesgueSimple,
        ),
        (
            "stanton-1-3".into(),
            ClassSpec::StantonA { r: 1, m: 3 },
            ClassSpec::StantonB { r: 1, m: 3 },
        ),
    ];
    for r in 1..=3 {
        pairs.push((
            format!("glaisher-{r}"),
            ClassSpec::GlaisherO(r),
            ClassSpec::GlaisherD(r),
        ));
    }
    for k in 1..=8 {
        pairs.push((
            format!("evenbounded-{k}"),
            ClassSpec::EvenBoundedLargest(k),
            ClassSpec::EvenBoundedCount(k),
        ));
    }
    pairs
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Count {
            class,
            n,
            nmax,
            out,
            format,
        } => {
            let spec: ClassSpec = class.parse().map_err(|e: String| anyhow!(e))?;
            let content = match (n, nmax) {
                (Some(n), None) => {
                    let c = count(&spec, n).map_err(|e| anyhow!(e))?;
                    match format {
                        Format::Csv => format!("{c}\n"),
                        Format::Json => format!(
                            "{}\n",
                            json!({"class": class, "n": n, "count": c.to_string()})
                        ),
                    }
                }
                (None, Some(nmax)) => {
                    let table = count_table(&spec, nmax).map_err(|e| anyhow!(e))?;
                    match format {
                        Format::Csv => {
                            let mut s = String::from("n,count\n");
                            for n in 0..=nmax {
                                s.push_str(&format!("{n},{}\n", table.get(n)));
                            }
                            s
                        }
                        Format::Json => {
                            let counts: Vec<String> =
                                (0..=nmax).map(|n| table.get(n).to_string()).collect();
                            format!("{}\n", json!({"class": class, "counts": counts}))
                        }
                    }
                }
                _ => bail!("provide exactly one of --n or --nmax"),
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Enumerate {
            class,
            n,
            out,
            format,
        } => {
            let spec: ClassSpec = class.parse().map_err(|e: String| anyhow!(e))?;
            let all = enumerate_all(&spec, n).map_err(|e| anyhow!(e))?;
            let content = match format {
                Format::Csv => {
                    let mut s = String::new();
                    for p in &all {
                        s.push_str(&p.to_string());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let items: Vec<Vec<u64>> = all.iter().map(|p| p.parts().to_vec()).collect();
                    format!("{}\n", json!({"class": class, "n": n, "partitions": items}))
                }
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Sample {
            class,
            n,
            mode,
            seed,
            count,
            out,
            format,
        } => {
            let (set, bound, _) = sampling_class(&class)?;
            let mode = match mode {
                SampleMode::Plain => Mode::Plain,
                SampleMode::Pdc => Mode::Pdc,
            };
            let cfg =
                SamplerConfig::new(set, bound, n, mode, seed).map_err(|e| anyhow!(e.to_string()))?;
            let mut draws = Vec::with_capacity(count as usize);
            for replica in 0..count {
                let mut rng = replica_rng(seed, replica);
                let outcome = sample(&cfg, &mut rng).map_err(|e| anyhow!(e.to_string()))?;
                draws.push(outcome.partition);
            }
            let content = match format {
                Format::Csv => {
                    let mut s = String::new();
                    for p in &draws {
                        s.push_str(&p.to_string());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let items: Vec<Vec<u64>> = draws.iter().map(|p| p.parts().to_vec()).collect();
                    format!(
                        "{}\n",
                        json!({"class": class, "n": n, "seed": seed, "partitions": items})
                    )
                }
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Converge {
            class,
            n,
            replicas,
            grid,
            seed,
            out,
            format,
        } => {
            let (set, bound, reference) = sampling_class(&class)?;
            let grid = parse_grid(&grid)?;
            let cfg = SamplerConfig::new(set, bound, n, Mode::Plain, seed)
                .map_err(|e| anyhow!(e.to_string()))?;
            let report = run_convergence(&cfg, &reference, replicas, &grid)
                .map_err(|e| anyhow!(e.to_string()))?;
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("t,empirical_mean,q05,q95,theory\n");
                    for j in 0..report.grid.len() {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            sig12(report.grid[j]),
                            sig12(report.empirical_mean[j]),
                            sig12(report.q05[j]),
                            sig12(report.q95[j]),
                            sig12(report.theory[j]),
                        ));
                    }
                    s
                }
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "class": class,
                        "n": n,
                        "replicas": report.replicas,
                        "seed": report.seed,
                        "grid": report.grid,
                        "empirical_mean": report.empirical_mean,
                        "q05": report.q05,
                        "q95": report.q95,
                        "theory": report.theory,
                        "mean_sup_dev": report.mean_sup_dev(),
                        "mean_acceptance_rate": report.mean_acceptance_rate(),
                    })
                ),
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Bijection {
            name,
            apply,
            verify,
            nmax,
            out,
            format,
        } => run_bijection(&name, apply.as_deref(), verify, nmax, out.as_deref(), format),

        Cmd::Shape {
            name,
            grid,
            out,
            format,
        } => {
            let curve = shape_curve(&name)?;
            let grid = parse_grid(&grid)?;
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("t,value\n");
                    for &t in &grid {
                        s.push_str(&format!("{},{}\n", sig12(t), sig12(curve.eval(t))));
                    }
                    s
                }
                Format::Json => {
                    let values: Vec<f64> = grid.iter().map(|&t| curve.eval(t)).collect();
                    format!(
                        "{}\n",
                        json!({"shape": name, "grid": grid, "values": values})
                    )
                }
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Constants { out, format } => {
            let rows: Vec<(&str, f64)> = vec![
                ("d(1,1)", const_d(1.0, 1.0, None)),
                ("d(1,1,2)", const_d(1.0, 1.0, Some(2))),
                ("d(2,1/2)", const_d(2.0, 0.5, None)),
                ("parts_constant", parts_constant()),
                ("durfee_constant", durfee_constant()),
                ("lebesgue_x0", lebesgue_x0()),
            ];
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("name,value\n");
                    for (name, v) in &rows {
                        s.push_str(&format!("{name},{}\n", sig12(*v)));
                    }
                    s
                }
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = rows
                        .iter()
                        .map(|(name, v)| (name.to_string(), json!(v)))
                        .collect();
                    format!("{}\n", serde_json::Value::Object(map))
                }
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Pipeline { name, grid, out } => {
            let grid = parse_grid(&grid)?;
            let stages: Vec<(String, MonotoneCurve)> = match name.as_str() {
                "selfconjugate" => vec![("final".into(), pipeline_selfconjugate())],
                "glaisher" => vec![("final".into(), pipeline_glaisher())],
                "lebesgue" => pipeline_lebesgue_stages()
                    .into_iter()
                    .map(|s| (s.name.to_string(), s.curve))
                    .collect(),
                other => bail!("unknown pipeline {other:?}"),
            };
            fs::create_dir_all(&out)
                .with_context(|| format!("creating {}", out.display()))?;
            for (i, (stage, curve)) in stages.iter().enumerate() {
                let mut s = String::from("x,value\n");
                for &x in &grid {
                    if x <= curve.domain.0 || x >= curve.domain.1 {
                        continue;
                    }
                    s.push_str(&format!("{},{}\n", sig12(x), sig12(curve.eval(x))));
                }
                let path = out.join(format!("{name}_stage{i:02}_{stage}.csv"));
                fs::write(&path, s).with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Identities { nmax, out, format } => {
            if nmax > 60 {
                bail!("--nmax is capped at 60");
            }
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            for (name, lhs, rhs) in identity_pairs() {
                for n in 0..=nmax {
                    let a = count(&lhs, n).map_err(|e| anyhow!(e))?;
                    let b = count(&rhs, n).map_err(|e| anyhow!(e))?;
                    let ok = a == b;
                    if !ok {
                        failures.push(json!({
                            "identity": name, "n": n,
                            "lhs": a.to_string(), "rhs": b.to_string(),
                        }));
                    }
                    rows.push((name.clone(), n, a, b, ok));
                }
            }
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("identity,n,lhs,rhs,status\n");
                    for (name, n, a, b, ok) in &rows {
                        let status = if *ok { "PASS" } else { "FAIL" };
                        s.push_str(&format!("{name},{n},{a},{b},{status}\n"));
                    }
                    s
                }
                Format::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(name, n, a, b, ok)| {
                            json!({
                                "identity": name, "n": n,
                                "lhs": a.to_string(), "rhs": b.to_string(),
                                "pass": ok,
                            })
                        })
                        .collect();
                    format!(
                        "{}\n",
                        json!({"nmax": nmax, "checks": items, "pass": failures.is_empty()})
                    )
                }
            };
            write_out(out.as_deref(), &content)?;
            if failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("{}", json!({"failed_identities": failures}));
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn run_bijection(
    name: &str,
    apply: Option<&str>,
    verify: bool,
    nmax: u64,
    out: Option<&Path>,
    format: Format,
) -> Result<ExitCode> {
    let toks: Vec<&str> = name.split(':').collect();

    if let Some(input) = apply {
        let p: Partition = input.parse().map_err(|e: String| anyhow!(e))?;
        let image = match toks.as_slice() {
            ["glaisher"] => biject::glaisher(&p),
            ["hooks"] => biject::hooks_forward(&p),
            ["stanton", r, m] => biject::stanton(r.parse()?, m.parse()?, &p),
            ["rthdiff", r] => biject::rth_diff_forward(r.parse()?, &p.to_multiplicities()),
            ["evenparts", k] => biject::even_parts_map(k.parse()?, &p),
            _ => bail!("unknown bijection {name:?}"),
        }
        .map_err(|e| anyhow!(e))?;
        let content = match format {
            Format::Csv => format!("{image}\n"),
            Format::Json => format!(
                "{}\n",
                json!({"bijection": name, "input": p.parts(), "image": image.parts()})
            ),
        };
        write_out(out, &content)?;
        return Ok(ExitCode::SUCCESS);
    }

    if !verify {
        bail!("bijection requires --apply or --verify");
    }

    // Verification: the spec-based maps go through the structural validator;
    // hooks is checked by exhaustive roundtrip.
    let (pass, detail) = match toks.as_slice() {
        ["glaisher"] => structure_check(&glaisher_spec(), nmax)?,
        ["stanton", r, m] => structure_check(&stanton_spec(r.parse()?, m.parse()?), nmax)?,
        ["rthdiff", r] => structure_check(&convex_spec(r.parse()?), nmax)?,
        ["evenparts", k] => structure_check(&even_parts_spec(k.parse()?), nmax)?,
        ["hooks"] => hooks_check(nmax)?,
        _ => bail!("unknown bijection {name:?}"),
    };
    let content = match format {
        Format::Csv => format!(
            "{name},{},{detail}\n",
            if pass { "PASS" } else { "FAIL" }
        ),
        Format::Json => format!(
            "{}\n",
            json!({"bijection": name, "nmax": nmax, "pass": pass, "detail": detail})
        ),
    };
    write_out(out, &content)?;
    if pass {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "{}",
            json!({"bijection": name, "nmax": nmax, "failure": detail})
        );
        Ok(ExitCode::from(1))
    }
}

fn structure_check(spec: &biject::LinearMapSpec, nmax: u64) -> Result<(bool, String)> {
    let report = validate_structure(spec, nmax).map_err(|e| anyhow!(e))?;
    let detail = match &report.first_violation {
        Some(v) => v.clone(),
        None => format!("verified for n <= {nmax}"),
    };
    Ok((report.pass, detail))
}

fn hooks_check(nmax: u64) -> Result<(bool, String)> {
    for n in 0..=nmax {
        let domain = enumerate_all(&ClassSpec::SelfConjugate, n).map_err(|e| anyhow!(e))?;
        let mut images = BTreeSet::new();
        for p in &domain {
            let img = biject::hooks_forward(p).map_err(|e| anyhow!(e))?;
            if img.size() != n || !ClassSpec::OddDistinct.member(&img) {
                return Ok((false, format!("image violation at n={n} for {p}")));
            }
            if biject::hooks_inverse(&img).map_err(|e| anyhow!(e))? != *p {
                return Ok((false, format!("roundtrip failure at n={n} for {p}")));
            }
            images.insert(img);
        }
        let codomain = enumerate_all(&ClassSpec::OddDistinct, n).map_err(|e| anyhow!(e))?;
        if images.len() != codomain.len() {
            return Ok((false, format!("not onto at n={n}")));
        }
    }
    Ok((true, format!("verified for n <= {nmax}")))
}
