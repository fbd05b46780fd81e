//! `lonerun` — exact lonely-runner computations from the shell.
//!
//! Exit codes: 0 success, 1 domain error (machine-readable JSON on
//! stdout), 2 usage error, 3 when a classification reports a gap below
//! the conjectured bound (a counterexample candidate).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lonerun::cache::default_cache_dir;
use lonerun::coverage::coverage_parallel;
use lonerun::format::{
    BisectDoc, CertificateDoc, CertifyDoc, ClassificationDoc, CoverageDoc, CrtDoc, ErrorDoc,
    FloatSearchDoc, GapReportDoc, GapValueDoc, OutputFormat, QualityDoc, QualityVectorDoc, Render,
    VolumeTermDoc,
};
use lonerun::sweep::{run_sweep, SweepParams};
use lonerun::volume::volume_sum_with_checkpoint;
use lonerun::{parse_rat_list, parse_u64_list, AppError};
use lonerun_core::boundary::{bisect_to_level, float_lonely_time_search};
use lonerun_core::crt::{
    box_contains, certify_good, crt_lonely_time, delta_bounds, quality, quality_certify,
    ratio_intervals, BestSet, Quality, RatioVector,
};
use lonerun_core::gap::{
    classify, finite_horizon_gap, gap_at_time, max_gap, max_gap_grid_oracle, ClassKind,
    VelocityVector,
};
use lonerun_core::measure::{minus_sign_width, volume_term};
use lonerun_core::rat::{parse_rat, to_pq_string, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Csv,
    Plain,
}

impl From<OutputArg> for OutputFormat {
    fn from(value: OutputArg) -> Self {
        match value {
            OutputArg::Json => OutputFormat::Json,
            OutputArg::Csv => OutputFormat::Csv,
            OutputArg::Plain => OutputFormat::Plain,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lonerun",
    version,
    about = "Exact lonely-runner gaps, CRT lonely times, certified neighborhoods, and sweeps",
    after_help = "Fractions are written p/q (or bare integers). Exact commands emit fractions \
                  as \"p/q\" strings and produce byte-identical output for identical inputs. \
                  Set LONERUN_CACHE_DIR to give sweep/volume a default cache location."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Json)]
    output: OutputArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Instantaneous gap min_i ||v_i t|| at an exact time
    Gap {
        /// Velocities, comma separated (e.g. 1/3,1/5)
        #[arg(long)]
        v: String,
        /// Time, an exact fraction
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Supremum of the gap: exact sweep, grid oracle, or finite horizon
    Maxgap {
        #[arg(long)]
        v: String,
        /// Use the brute-force grid oracle with this many steps
        #[arg(long)]
        grid: Option<u64>,
        /// Restrict the supremum to (0, T1]
        #[arg(long)]
        horizon: Option<String>,
    },
    /// Classify against the bound 1/(n+1); exits 3 on a counterexample
    Classify {
        #[arg(long)]
        v: String,
    },
    /// CRT lonely time of a pairwise-coprime divisor set
    Crt {
        /// Divisors, comma separated, strictly increasing (e.g. 3,5)
        #[arg(long)]
        d: String,
        /// Include slack and velocity radii
        #[arg(long)]
        bounds: bool,
        /// Include the certified ratio intervals
        #[arg(long)]
        intervals: bool,
        /// Test a velocity vector for membership in the delta box
        #[arg(long)]
        contains: Option<String>,
    },
    /// Search divisor sets certifying a ratio vector as good
    Certify {
        /// Ratios v2/v1,...,vn/v(n-1), comma separated
        #[arg(long)]
        r: String,
        /// Largest divisor to try
        #[arg(long, default_value_t = 30)]
        dmax: u64,
    },
    /// Quality of a divisor-pair approximation to a ratio
    Quality {
        #[arg(long)]
        d: String,
        /// Ratio(s); one per divisor pair, or a single one with --i
        #[arg(long)]
        r: String,
        /// Number of runners (defaults to the divisor count)
        #[arg(long)]
        n: Option<usize>,
        /// One-based pair index for single-ratio mode
        #[arg(long)]
        i: Option<usize>,
    },
    /// Ratio-interval widths of one set, or the summed volume
    Volume {
        /// Single divisor set to evaluate
        #[arg(long)]
        d: Option<String>,
        /// Number of runners (required for --dmax mode)
        #[arg(long)]
        n: Option<usize>,
        /// Sum over all strictly feasible sets with D_n <= dmax
        #[arg(long)]
        dmax: Option<u64>,
        /// Also evaluate the minus-sign width variant for comparison
        #[arg(long)]
        minus: bool,
        /// Checkpoint file (JSON lines; resumes if it exists)
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Seeded Monte Carlo estimate of certified ratio-space coverage
    Coverage {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u64,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lower edge of the sampling box (default 1/10)
        #[arg(long)]
        low: Option<String>,
        /// Upper edge of the sampling box (default 9/10)
        #[arg(long)]
        high: Option<String>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Bisect along a line in velocity space to a target gap level
    Bisect {
        /// First endpoint velocities
        #[arg(long)]
        a: String,
        /// Second endpoint velocities
        #[arg(long)]
        b: String,
        /// Horizon T1 for the finite-horizon gap
        #[arg(long)]
        t1: String,
        /// Target gap level
        #[arg(long)]
        target: String,
        /// Value tolerance
        #[arg(long)]
        tol: String,
        #[arg(long, default_value_t = 200)]
        max_iter: u32,
    },
    /// Floating-point scan for a lonely time (heuristic)
    Floatsearch {
        /// Velocities as decimal numbers
        #[arg(long)]
        v: String,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        tmax: f64,
        #[arg(long)]
        step: f64,
    },
    /// Classify every integer vector with distinct components <= vmax
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        vmax: u64,
        /// Cache file (defaults to $LONERUN_CACHE_DIR/sweep_n{n}_v{vmax}.jsonl)
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Override the n <= 5, vmax <= 60 guard rails
        #[arg(long)]
        force: bool,
    },
}

fn parse_velocities(s: &str) -> Result<VelocityVector, AppError> {
    Ok(VelocityVector::new(parse_rat_list(s)?)?)
}

fn parse_best_set(s: &str) -> Result<BestSet, AppError> {
    Ok(BestSet::from_u64s(&parse_u64_list(s)?)?)
}

fn parse_ratios(s: &str) -> Result<RatioVector, AppError> {
    Ok(RatioVector::new(parse_rat_list(s)?)?)
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, AppError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| AppError::usage(format!("cannot parse number {part:?}")))
        })
        .collect()
}

fn quality_string(q: &Quality) -> String {
    match q {
        Quality::Infinite => "inf".to_string(),
        Quality::Finite(v) => to_pq_string(v),
    }
}

fn run(command: Command, format: OutputFormat) -> Result<ExitCode, AppError> {
    match command {
        Command::Gap { v, t } => {
            let velocity = parse_velocities(&v)?;
            let time = parse_rat(&t)?;
            let value = gap_at_time(&velocity, &time)?;
            println!("{}", GapValueDoc::new(&value).render(format));
        }
        Command::Maxgap { v, grid, horizon } => {
            let velocity = parse_velocities(&v)?;
            let report = match (grid, horizon) {
                (Some(_), Some(_)) => {
                    return Err(AppError::usage(
                        "--grid and --horizon are mutually exclusive",
                    ))
                }
                (Some(steps), None) => max_gap_grid_oracle(&velocity, steps)?,
                (None, Some(t1)) => finite_horizon_gap(&velocity, &parse_rat(&t1)?)?,
                (None, None) => max_gap(&velocity),
            };
            println!("{}", GapReportDoc::from(&report).render(format));
        }
        Command::Classify { v } => {
            let velocity = parse_velocities(&v)?;
            let classification = classify(&velocity);
            let report = max_gap(&velocity);
            let doc = ClassificationDoc::new(&classification, &report, velocity.n());
            println!("{}", doc.render(format));
            if classification.kind == ClassKind::GapBelowBound {
                eprintln!(
                    "COUNTEREXAMPLE CANDIDATE: gap {} below bound {} for v={}; \
                     independent verification required",
                    doc.gap, doc.bound, v
                );
                return Ok(ExitCode::from(3));
            }
        }
        Command::Crt {
            d,
            bounds,
            intervals,
            contains,
        } => {
            let set = parse_best_set(&d)?;
            let n = set.len();
            let lt = crt_lonely_time(&set);
            let mut doc = CrtDoc::new(&set, n, &lt)?;
            let db = delta_bounds(&set, n)?;
            if bounds {
                doc = doc.with_bounds(&db);
            }
            if intervals {
                doc = doc.with_intervals(&ratio_intervals(&set, &db)?);
            }
            if let Some(w) = contains {
                let velocity = parse_velocities(&w)?;
                doc.box_contains = Some(box_contains(&set, &db, &velocity)?);
            }
            println!("{}", doc.render(format));
        }
        Command::Certify { r, dmax } => {
            let ratios = parse_ratios(&r)?;
            let certificate = certify_good(&ratios, dmax);
            let doc = CertifyDoc {
                found: certificate.is_some(),
                d_max: dmax,
                r: ratios.ratios().iter().map(to_pq_string).collect(),
                certificate: certificate.as_ref().map(CertificateDoc::new).transpose()?,
            };
            println!("{}", doc.render(format));
        }
        Command::Quality { d, r, n, i } => {
            let set = parse_best_set(&d)?;
            let n = n.unwrap_or(set.len());
            let ratios = parse_rat_list(&r)?;
            match i {
                Some(index) => {
                    if ratios.len() != 1 {
                        return Err(AppError::usage("--i takes exactly one ratio in --r"));
                    }
                    if index == 0 {
                        return Err(AppError::usage("--i is one-based"));
                    }
                    let q = quality(&set, index - 1, &ratios[0], n)?;
                    let doc = QualityDoc {
                        d: set.to_u64s().expect("parsed from u64"),
                        n,
                        i: index,
                        r: to_pq_string(&ratios[0]),
                        q: quality_string(&q),
                    };
                    println!("{}", doc.render(format));
                }
                None => {
                    let rv = RatioVector::new(ratios)?;
                    let certified = quality_certify(&rv, &set, n)?;
                    let product = Rat::from_integer(set.product());
                    let mut qs = Vec::new();
                    let mut p_actual = Vec::new();
                    for idx in 0..n - 1 {
                        qs.push(quality_string(&quality(&set, idx, &rv.ratios()[idx], n)?));
                        let pair =
                            Rat::from_integer(&set.divisors()[idx] * &set.divisors()[idx + 1]);
                        p_actual.push(to_pq_string(&(&product / &pair)));
                    }
                    let doc = QualityVectorDoc {
                        d: set.to_u64s().expect("parsed from u64"),
                        n,
                        r: rv.ratios().iter().map(to_pq_string).collect(),
                        q: qs,
                        p_actual,
                        certified,
                    };
                    println!("{}", doc.render(format));
                }
            }
        }
        Command::Volume {
            d,
            n,
            dmax,
            minus,
            cache,
        } => match (d, dmax) {
            (Some(_), Some(_)) => {
                return Err(AppError::usage("--d and --dmax are mutually exclusive"))
            }
            (Some(set_str), None) => {
                let set = parse_best_set(&set_str)?;
                let n = n.unwrap_or(set.len());
                let term = volume_term(&set, n)?;
                let mut doc = VolumeTermDoc::new(&term, n)?;
                if minus {
                    let bounds = delta_bounds(&set, n)?;
                    let minus_widths: Vec<Rat> = (0..set.len() - 1)
                        .map(|i| minus_sign_width(&set, &bounds, i))
                        .collect();
                    doc.minus_matches =
                        Some(minus_widths.iter().zip(&term.widths).all(|(a, b)| a == b));
                    doc.minus_widths = Some(minus_widths.iter().map(to_pq_string).collect());
                }
                println!("{}", doc.render(format));
            }
            (None, Some(dmax)) => {
                let n = n.ok_or_else(|| AppError::usage("--dmax mode requires --n"))?;
                let cache_path = cache.or_else(|| {
                    default_cache_dir().map(|dir| dir.join(format!("volume_n{n}_dmax{dmax}.jsonl")))
                });
                let outcome = volume_sum_with_checkpoint(n, dmax, cache_path.as_deref())?;
                println!("{}", outcome.doc.render(format));
            }
            (None, None) => {
                return Err(AppError::usage(
                    "volume needs either --d or --n with --dmax",
                ))
            }
        },
        Command::Coverage {
            n,
            dmax,
            samples,
            seed,
            low,
            high,
            threads,
        } => {
            let low = match low {
                Some(s) => parse_rat(&s)?,
                None => Rat::new(1.into(), 10.into()),
            };
            let high = match high {
                Some(s) => parse_rat(&s)?,
                None => Rat::new(9.into(), 10.into()),
            };
            let estimate = coverage_parallel(n, dmax, samples, seed, &low, &high, threads)?;
            println!(
                "{}",
                CoverageDoc::new(&estimate, &low, &high).render(format)
            );
        }
        Command::Bisect {
            a,
            b,
            t1,
            target,
            tol,
            max_iter,
        } => {
            let a = parse_velocities(&a)?;
            let b = parse_velocities(&b)?;
            let t1 = parse_rat(&t1)?;
            let target = parse_rat(&target)?;
            let tol = parse_rat(&tol)?;
            let outcome = bisect_to_level(&a, &b, &t1, &target, &tol, max_iter)?;
            println!("{}", BisectDoc::new(&outcome, &target, &tol).render(format));
        }
        Command::Floatsearch {
            v,
            epsilon,
            tmax,
            step,
        } => {
            let velocities = parse_f64_list(&v)?;
            let hit = float_lonely_time_search(&velocities, epsilon, tmax, step)?;
            let doc = FloatSearchDoc {
                found: hit.is_some(),
                time: hit.as_ref().map(|h| h.time),
                min_gap: hit.as_ref().map(|h| h.min_gap),
                epsilon,
                steps_taken: hit.as_ref().map(|h| h.steps_taken),
            };
            println!("{}", doc.render(format));
        }
        Command::Sweep {
            n,
            vmax,
            cache,
            force,
        } => {
            let cache_path = cache.or_else(|| {
                default_cache_dir().map(|dir| dir.join(format!("sweep_n{n}_v{vmax}.jsonl")))
            });
            let outcome = run_sweep(
                &SweepParams {
                    n,
                    v_max: vmax,
                    force,
                },
                cache_path.as_deref(),
            )?;
            println!("{}", outcome.summary.render(format));
            if outcome.summary.gap_below_bound > 0 {
                eprintln!(
                    "COUNTEREXAMPLE CANDIDATE(S): {} vector(s) with gap below the bound; \
                     see the cache file ({}), keys with kind=GapBelowBound",
                    outcome.summary.gap_below_bound,
                    outcome.summary.cache.as_deref().unwrap_or(
                        "no cache path given; rerun with --cache or set LONERUN_CACHE_DIR"
                    )
                );
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = OutputFormat::from(cli.output);
    match run(cli.command, format) {
        Ok(code) => code,
        Err(err @ AppError::Usage(_)) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
        Err(err) => {
            println!("{}", ErrorDoc::new(&err).render(format));
            ExitCode::from(1)
        }
    }
}
