use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crimp_core::catalog::{connected_graphs_up_to, MAX_CATALOG_VERTICES};
use crimp_core::checks::{
    check_no_switching, check_observation1, check_private_neighbor_bounds, check_termination, CheckReport,
    NeighborhoodDecomposition, Verdict,
};
use crimp_core::reductions::{
    gen_fig1a, gen_fig1b, gen_star, gen_theorem1, gen_theorem2, gen_theorem4, CertifiedInstance, Family,
    SetCoverInstance, DEFAULT_VERTEX_CAP,
};
use crimp_core::solvers::{
    baseline_greedy_centrality, baseline_greedy_diameter, solve_exact_gap, solve_exact_ratio, solve_neighborhood,
    solve_trivial, Algorithm, Policy, DEFAULT_ENUMERATION_CAP,
};
use crimp_core::{Instance, Rational, Vertex};
use rand::Rng;
use serde_json::json;

use crate::bench::{run_bench, to_csv, BenchConfig};
use crate::cli::{BenchArgs, CatalogArgs, Cli, Command, GenerateArgs, SolveArgs, VerifyArgs};
use crate::error::{CliError, EXIT_OK, EXIT_VIOLATED};
use crate::format::InstanceFile;
use crate::random::{random_connected_graph, random_instance, rng};
use crate::report::{certificate_sidecar, check_report_json, to_pretty, RunReport};
use crate::graph6;

/// Environment variable overriding the enumeration cap of the exact solvers.
pub const MAX_ENUM_VAR: &str = "CRIMP_MAX_ENUM";

/// Runs one subcommand and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
        Command::Catalog(args) => catalog(args),
    }
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p.display().to_string(), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

pub fn read_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    InstanceFile::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `--cap`, else `CRIMP_MAX_ENUM`, else the library default.
pub fn enumeration_cap(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_ENUM_VAR}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Input(format!("family {family} needs --{flag}")))
}

fn rational(value: Option<String>, flag: &str, family: &str) -> Result<Rational, CliError> {
    let raw = require(value, flag, family)?;
    raw.parse().map_err(|e| CliError::Input(format!("--{flag} {raw}: {e}")))
}

/// Parses `0;1;0,1` into `[[0], [1], [0, 1]]`.
pub fn parse_sets(text: &str) -> Result<Vec<Vec<usize>>, CliError> {
    text.split(';')
        .map(|set| {
            set.split(',')
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| e.parse().map_err(|_| CliError::Input(format!("--sets: `{e}` is not an element index"))))
                .collect()
        })
        .collect()
}

fn set_cover(args: &GenerateArgs) -> Result<SetCoverInstance, CliError> {
    let family = args.family.as_str();
    let sets = parse_sets(&require(args.sets.clone(), "sets", family)?)?;
    let universe = require(args.universe, "universe", family)?;
    let budget = require(args.budget, "budget", family)?;
    Ok(SetCoverInstance::new(universe, sets, budget)?)
}

/// Builds the certified instance requested by `generate`.
pub fn generate_instance(args: &GenerateArgs) -> Result<CertifiedInstance, CliError> {
    let tag = args.family.as_str();
    let family = Family::from_tag(tag).ok_or_else(|| CliError::Input(format!("unknown family `{tag}`")))?;
    let cert = match family {
        Family::Theorem1 => gen_theorem1(&set_cover(args)?)?,
        Family::Theorem2 => gen_theorem2(&set_cover(args)?, rational(args.tau.clone(), "tau", tag)?)?,
        Family::Theorem4 => gen_theorem4(
            &set_cover(args)?,
            rational(args.c.clone(), "c", tag)?,
            rational(args.eps.clone(), "eps", tag)?,
            args.vertex_cap.unwrap_or(DEFAULT_VERTEX_CAP),
        )?,
        Family::Fig1a => gen_fig1a(require(args.d, "d", tag)?, require(args.x, "X", tag)?)?,
        Family::Fig1b => gen_fig1b(require(args.d, "d", tag)?, require(args.x, "X", tag)?)?,
        Family::Star => gen_star(require(args.n, "n", tag)?, args.k)?,
    };
    Ok(cert)
}

fn provenance(cert: &CertifiedInstance) -> Vec<(String, String)> {
    let mut out = vec![("family".to_string(), cert.family.tag().to_string())];
    out.extend(cert.params.iter().cloned());
    out
}

fn generate(args: GenerateArgs) -> Result<i32, CliError> {
    let (file, sidecar) = if args.family == "random" {
        let n = require(args.n, "n", "random")?;
        let m = require(args.m, "m", "random")?;
        let k = args.k.unwrap_or(1);
        let inst = random_instance(n, m, k, &mut rng(args.seed))?;
        let mut file = InstanceFile::new(inst);
        file.provenance = vec![
            ("family".into(), "random".into()),
            ("n".into(), n.to_string()),
            ("m".into(), m.to_string()),
            ("k".into(), k.to_string()),
            ("seed".into(), args.seed.to_string()),
        ];
        (file, None)
    } else {
        let cert = generate_instance(&args)?;
        let sidecar = to_pretty(&certificate_sidecar(&cert));
        let mut file = InstanceFile::new(cert.instance.clone());
        file.provenance = provenance(&cert);
        (file, Some(sidecar))
    };
    write_output(args.out.as_deref(), &file.to_text())?;
    let cert_path = args.cert.clone().or_else(|| args.out.as_ref().map(|p| sidecar_path(p)));
    if let (Some(path), Some(text)) = (cert_path, sidecar) {
        write_output(Some(&path), &text)?;
    }
    Ok(EXIT_OK)
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".cert.json");
    PathBuf::from(name)
}

fn policy(tag: &str) -> Result<Policy, CliError> {
    Policy::from_tag(tag).ok_or_else(|| CliError::Input(format!("unknown policy `{tag}` (smallest-id, max-decrease)")))
}

/// Runs `algo` on `inst` and returns its verified report.
pub fn solve_instance(inst: &Instance, algo: Algorithm, policy: Policy, cap: u64) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let report = match algo {
        Algorithm::ExactGap => {
            let mut s = solve_exact_gap(inst, cap)?;
            s.elapsed = start.elapsed();
            RunReport::from_gap(inst, &s)
        }
        _ => {
            let mut s = match algo {
                Algorithm::Trivial => solve_trivial(inst)?,
                Algorithm::Neighborhood => solve_neighborhood(inst, policy)?,
                Algorithm::ExactRatio => solve_exact_ratio(inst, cap)?,
                Algorithm::GreedyCentrality => baseline_greedy_centrality(inst)?,
                Algorithm::GreedyDiameter => baseline_greedy_diameter(inst)?,
                Algorithm::ExactGap => unreachable!(),
            };
            s.elapsed = start.elapsed();
            RunReport::from_solution(inst, &s)
        }
    };
    report.reverify(inst).map_err(|e| CliError::Violated(format!("report failed re-verification: {e}")))?;
    Ok(report)
}

fn solve(args: SolveArgs) -> Result<i32, CliError> {
    let algo = Algorithm::from_tag(&args.algo).ok_or_else(|| {
        let tags: Vec<_> = Algorithm::ALL.iter().map(Algorithm::tag).collect();
        CliError::Input(format!("unknown algorithm `{}` ({})", args.algo, tags.join(", ")))
    })?;
    let policy = policy(&args.policy)?;
    let cap = enumeration_cap(args.cap)?;
    let file = read_instance(&args.input)?;
    let report = solve_instance(&file.instance, algo, policy, cap)?;
    write_output(args.out.as_deref(), &to_pretty(&report))?;
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Observation,
    NoSwitching,
    Termination,
    PrivateNeighbors,
}

impl CheckKind {
    pub const ALL: [CheckKind; 4] =
        [CheckKind::Observation, CheckKind::NoSwitching, CheckKind::Termination, CheckKind::PrivateNeighbors];

    pub fn tag(&self) -> &'static str {
        match self {
            CheckKind::Observation => "obs1",
            CheckKind::NoSwitching => "no-switching",
            CheckKind::Termination => "termination",
            CheckKind::PrivateNeighbors => "private-neighbors",
        }
    }

    pub fn from_tag(tag: &str) -> Result<CheckKind, CliError> {
        CheckKind::ALL.into_iter().find(|c| c.tag() == tag).ok_or_else(|| {
            let tags: Vec<_> = CheckKind::ALL.iter().map(CheckKind::tag).collect();
            CliError::Input(format!("unknown check `{tag}` ({})", tags.join(", ")))
        })
    }

    /// Evaluates the check; the termination check uses `u`, defaulting to the
    /// smallest private neighbor of `b` (or the smallest other vertex).
    pub fn evaluate(&self, inst: &Instance, u: Option<Vertex>, cap: u64) -> Result<CheckReport, CliError> {
        let (g, a, b) = (inst.graph(), inst.a(), inst.b());
        Ok(match self {
            CheckKind::Observation => check_observation1(g, a, b)?,
            CheckKind::NoSwitching => check_no_switching(g, a, b)?,
            CheckKind::Termination => {
                let u = match u {
                    Some(u) => u,
                    None => NeighborhoodDecomposition::new(g, a, b)
                        .b_private
                        .first()
                        .copied()
                        .or_else(|| (0..g.n() as Vertex).find(|&v| v != a && v != b))
                        .unwrap_or(a),
                };
                check_termination(g, a, b, u)?
            }
            CheckKind::PrivateNeighbors => check_private_neighbor_bounds(inst, cap)?,
        })
    }
}

/// Random instance for batch verification: `n` uniform in `2..=max_n`, between
/// `n - 1` and `2n` edges, budget uniform in `0..=max_k`. For the checks about
/// adjacent pairs, `b` is a uniformly chosen neighbor of `a`.
pub fn random_check_instance(kind: CheckKind, max_n: usize, max_k: usize, rng: &mut impl Rng) -> Result<Instance, CliError> {
    let n = rng.gen_range(2..=max_n.max(2));
    let max_m = n * (n - 1) / 2;
    let m = rng.gen_range(n - 1..=max_m.min(2 * n));
    let g = random_connected_graph(n, m, rng)?;
    let a = rng.gen_range(0..n as Vertex);
    let b = match kind {
        CheckKind::Observation | CheckKind::NoSwitching | CheckKind::Termination => {
            let nb = g.neighbors(a);
            nb[rng.gen_range(0..nb.len())]
        }
        CheckKind::PrivateNeighbors => (a + rng.gen_range(1..n as Vertex)) % n as Vertex,
    };
    let k = rng.gen_range(0..=max_k).min(g.non_edge_count());
    Ok(Instance::new(g, a, b, k)?)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub evaluations: usize,
    pub holds: usize,
    pub hypothesis_not_met: usize,
    pub violations: Vec<CheckReport>,
}

impl BatchSummary {
    pub fn record(&mut self, r: CheckReport) {
        self.evaluations += 1;
        match r.verdict {
            Verdict::Holds => self.holds += 1,
            Verdict::HypothesisNotMet => self.hypothesis_not_met += 1,
            Verdict::Violated => self.violations.push(r),
        }
    }
}

/// Checks `count` seeded random instances. The termination check is evaluated
/// for every vertex `u` of each instance.
pub fn verify_batch(kind: CheckKind, count: usize, seed: u64, max_n: usize, max_k: usize, cap: u64) -> Result<BatchSummary, CliError> {
    let mut rng = rng(seed);
    let mut summary = BatchSummary::default();
    for _ in 0..count {
        let inst = random_check_instance(kind, max_n, max_k, &mut rng)?;
        if kind == CheckKind::Termination {
            for u in 0..inst.graph().n() as Vertex {
                summary.record(kind.evaluate(&inst, Some(u), cap)?);
            }
        } else {
            summary.record(kind.evaluate(&inst, None, cap)?);
        }
    }
    Ok(summary)
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    let kind = CheckKind::from_tag(&args.check)?;
    let cap = enumeration_cap(args.cap)?;
    if let Some(count) = args.random {
        let s = verify_batch(kind, count, args.seed, args.max_n, args.max_k, cap)?;
        let out = json!({
            "check": kind.tag(),
            "seed": args.seed,
            "instances": count,
            "evaluations": s.evaluations,
            "holds": s.holds,
            "hypothesis_not_met": s.hypothesis_not_met,
            "violated": s.violations.len(),
            "violations": s.violations.iter().take(10).map(check_report_json).collect::<Vec<_>>(),
        });
        write_output(args.out.as_deref(), &to_pretty(&out))?;
        return Ok(if s.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATED });
    }
    let input = args.input.ok_or_else(|| CliError::Input("verify needs --in or --random".into()))?;
    let file = read_instance(&input)?;
    let mut report = kind.evaluate(&file.instance, args.u, cap)?;
    // Graph-level checks ignore the budget; report the file's own fingerprint.
    report.fingerprint = file.instance.fingerprint();
    write_output(args.out.as_deref(), &to_pretty(&check_report_json(&report)))?;
    Ok(if report.verdict == Verdict::Violated { EXIT_VIOLATED } else { EXIT_OK })
}

fn bench(args: BenchArgs) -> Result<i32, CliError> {
    let cfg = BenchConfig {
        sizes: args.sizes,
        densities: args.densities,
        ks: args.k,
        instances: args.instances,
        seed: args.seed,
        repeats: args.repeats,
        policy: policy(&args.policy)?,
    };
    if cfg.sizes.iter().any(|&n| n < 2) {
        return Err(CliError::Input("bench sizes must be at least 2".into()));
    }
    let rows = run_bench(&cfg)?;
    write_output(args.out.as_deref(), &to_csv(&rows))?;
    Ok(EXIT_OK)
}

fn catalog(args: CatalogArgs) -> Result<i32, CliError> {
    if args.max_n == 0 || args.max_n > MAX_CATALOG_VERTICES {
        return Err(CliError::Input(format!("--max-n must be between 1 and {MAX_CATALOG_VERTICES}")));
    }
    let mut text = String::new();
    for g in connected_graphs_up_to(args.max_n).into_iter().flatten() {
        text.push_str(&graph6::encode(&g));
        text.push('\n');
    }
    write_output(args.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}
