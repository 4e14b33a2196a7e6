//! `slidegrid` command line.
//!
//! Exit status: 0 success or positive answer, 1 valid negative answer
//! (incomplete board, infeasible, unreachable), 2 usage or I/O error,
//! 3 solver budget exhausted.

mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use slidegrid::constructions::{construct, size_contract, Family, SizeContract};
use slidegrid::params::{self, ParamSource};
use slidegrid::*;

pub use svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Overrides `--workers` when set.
pub const WORKERS_ENV: &str = "SLIDEGRID_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "slidegrid", version, about = "Sliding-robot coverage games on grids, tori and king grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that every square can be passed over or stopped on.
    Verify {
        board: PathBuf,
        #[arg(long, value_enum, default_value = "pass")]
        mode: ModeArg,
        /// Also try every free square as the start.
        #[arg(long)]
        all_starts: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimum number of obstacles, by exhaustive search.
    Solve(SolveArgs),
    /// Emit a placement from one of the known families.
    Construct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(short = 'n', long = "rows")]
        n: usize,
        #[arg(short = 'm', long = "cols")]
        m: usize,
        /// Write the board here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run the verifier on the result.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Graph parameters: gamma-t-path N, rho-path N, rho-grid N M, gamma-grid N M.
    Params {
        name: String,
        #[arg(required = true)]
        args: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Fewest moves from the start to a target square.
    Minmoves {
        board: PathBuf,
        #[arg(long, value_parser = parse_position)]
        target: Position,
        #[arg(long, value_enum, default_value = "pass")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Draw a board as text or SVG.
    Render {
        board: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Shade squares by coverage in this mode.
        #[arg(long, value_enum)]
        coverage: Option<ModeArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Placement-check throughput of the solver.
    Bench {
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, default_value_t = 10)]
        cols: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, value_parser = parse_duration, default_value = "10s")]
        budget: Duration,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum, default_value = "rect")]
    topology: TopologyArg,
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
    #[arg(long, value_enum, default_value = "blocks")]
    obstacles: KindArg,
    #[arg(long, value_enum, default_value = "pass")]
    mode: ModeArg,
    #[arg(long, value_parser = parse_position, default_value = "1,1")]
    start: Position,
    /// Only decide whether exactly this many obstacles suffice.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_parser = parse_duration, default_value = "60s")]
    budget: Duration,
    #[arg(long)]
    workers: Option<usize>,
    /// Search every placement, ignoring the diagonal mirror.
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Pass,
    Stop,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Pass => Mode::Pass,
            ModeArg::Stop => Mode::Stop,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TopologyArg {
    Rect,
    Torus,
    King,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Self {
        match t {
            TopologyArg::Rect => Topology::Rect,
            TopologyArg::Torus => Topology::Torus,
            TopologyArg::King => Topology::King,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Blocks,
    Walls,
}

impl From<KindArg> for ObstacleKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Blocks => ObstacleKind::Blocks,
            KindArg::Walls => ObstacleKind::Walls,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Ascii,
    Svg,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(&s.replace('-', "_")).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{s}` (expected one of {})", names.join(", "))
    })
}

fn parse_position(s: &str) -> Result<Position, String> {
    let (r, c) = s.split_once(',').ok_or_else(|| format!("expected ROW,COL, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Position::new(parse(r)?, parse(c)?))
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    humantime::parse_duration(s).map_err(|e| e.to_string())
}

/// Runs one invocation and returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn workers(flag: Option<usize>) -> Result<usize> {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v.trim().parse().with_context(|| format!("{WORKERS_ENV}={v}"))?;
        if n == 0 {
            bail!("{WORKERS_ENV} must be positive");
        }
        return Ok(n);
    }
    match flag {
        Some(0) => bail!("--workers must be positive"),
        Some(n) => Ok(n),
        None => Ok(SolveOptions::default().workers),
    }
}

fn load(path: &Path) -> Result<Board> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_board(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn pos(p: Position) -> Value {
    json!([p.row, p.col])
}

fn positions<'a>(ps: impl IntoIterator<Item = &'a Position>) -> Value {
    Value::Array(ps.into_iter().map(|&p| pos(p)).collect())
}

fn obstacles_json(o: &ObstacleSet) -> Value {
    match o {
        ObstacleSet::Blocks(b) => positions(b),
        ObstacleSet::Walls(w) => Value::Array(
            w.iter()
                .map(|w| {
                    let side = match w.side {
                        WallSide::EastOf => "east",
                        WallSide::SouthOf => "south",
                    };
                    json!({"row": w.anchor.row, "col": w.anchor.col, "side": side})
                })
                .collect(),
        ),
    }
}

fn board_json(b: &Board) -> Value {
    json!({
        "topology": b.topology().name(),
        "rows": b.rows(),
        "cols": b.cols(),
        "start": pos(b.start()),
        "obstacles": b.obstacle_kind().name(),
        "count": b.obstacles().len(),
    })
}

fn ms(d: Duration) -> u64 {
    d.as_millis() as u64
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify { board, mode, all_starts, json } => cmd_verify(&load(&board)?, mode.into(), all_starts, json, out),
        Command::Solve(args) => cmd_solve(args, out, err),
        Command::Construct { family, n, m, out: path, check, json } => {
            cmd_construct(family, n, m, path.as_deref(), check, json, out)
        }
        Command::Params { name, args, json } => cmd_params(&name, &args, json, out),
        Command::Minmoves { board, target, mode, json } => cmd_minmoves(&load(&board)?, target, mode.into(), json, out),
        Command::Render { board, format, coverage, out: path } => {
            let b = load(&board)?;
            let report = coverage.map(|m| verify(&b, m.into()));
            let text = match format {
                Format::Ascii => render_ascii(&b, report.as_ref().map(|r| &r.passed)),
                Format::Svg => render_svg(&b, report.as_ref()),
            };
            match path {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench { rows, cols, k, budget, workers: w, json } => {
            let spec = GameSpec::new(Topology::Rect, rows, cols, ObstacleKind::Blocks, Mode::Pass);
            let opts = SolveOptions { budget, workers: workers(w)?, symmetry: false };
            let r = solve_decision(&spec, k, &opts)?;
            let secs = r.elapsed.as_secs_f64().max(1e-9);
            let rate = r.placements_tested as f64 / secs;
            if json {
                emit_json(
                    out,
                    &json!({
                        "rows": rows, "cols": cols, "k": k, "workers": opts.workers,
                        "placements": r.placements_tested, "elapsed_ms": ms(r.elapsed),
                        "per_second": rate.round() as u64,
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "{} placements of {k} blocks on {rows}x{cols} in {:.2}s: {:.0}/s ({} workers)",
                    r.placements_tested, secs, rate, opts.workers
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_verify(b: &Board, mode: Mode, all_starts: bool, json: bool, out: &mut dyn Write) -> Result<i32> {
    let r = verify(b, mode);
    let all = all_starts.then(|| verify_all_starts(b, mode));
    let ok = r.complete && all.is_none_or(|a| a.complete);
    if json {
        let mut v = json!({
            "board": board_json(b),
            "mode": mode.name(),
            "complete": r.complete,
            "stops": r.stops.len(),
            "passed": r.passed.len(),
            "missing": positions(&r.missing),
        });
        if let Some(a) = all {
            v["all_starts"] = json!({"complete": a.complete, "first_failure": a.first_failure.map(pos)});
        }
        emit_json(out, &v)?;
    } else {
        let verdict = if r.complete { "complete" } else { "incomplete" };
        writeln!(out, "{verdict} ({mode}): {} stops, {} passed", r.stops.len(), r.passed.len())?;
        if !r.missing.is_empty() {
            let list: Vec<String> = r.missing.iter().map(|p| p.to_string()).collect();
            writeln!(out, "missing {}: {}", r.missing.len(), list.join(" "))?;
        }
        if let Some(a) = all {
            match a.first_failure {
                None => writeln!(out, "every start: complete")?,
                Some(p) => writeln!(out, "every start: fails from {p}")?,
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let spec = GameSpec::new(a.topology.into(), a.rows, a.cols, a.obstacles.into(), a.mode.into()).with_start(a.start);
    spec.validate()?;
    let opts = SolveOptions { budget: a.budget, workers: workers(a.workers)?, symmetry: !a.no_symmetry };
    let spec_json = json!({
        "topology": spec.topology.name(), "rows": spec.rows, "cols": spec.cols,
        "obstacles": spec.kind.name(), "mode": spec.mode.name(), "start": pos(spec.start),
    });
    if let Some(k) = a.k {
        let r = solve_decision(&spec, k, &opts)?;
        let (name, code, witness) = match &r.decision {
            Decision::Found(w) => ("found", EXIT_OK, Some(w)),
            Decision::NotFound => ("none", EXIT_NEGATIVE, None),
            Decision::Timeout => ("timeout", EXIT_BUDGET, None),
        };
        if a.json {
            emit_json(
                out,
                &json!({
                    "spec": spec_json, "k": k, "decision": name,
                    "witness": witness.map(obstacles_json),
                    "placements_tested": r.placements_tested, "elapsed_ms": ms(r.elapsed),
                }),
            )?;
        } else {
            writeln!(out, "{spec}, k = {k}: {name} ({} placements, {:.2}s)", r.placements_tested, r.elapsed.as_secs_f64())?;
            if let Some(w) = witness {
                write!(out, "{}", serialize_board(&spec.board(w.clone())?))?;
            }
        }
        return Ok(code);
    }
    let r = solve_exact(&spec, &opts)?;
    let formula = match opt_formula(&spec) {
        Formula::Exact(v) => json!({"exact": v}),
        Formula::BoundsOnly { lower, upper } => json!({"lower": lower, "upper": upper}),
    };
    if a.json {
        emit_json(
            out,
            &json!({
                "spec": spec_json,
                "status": r.status.name(),
                "optimum": r.optimum,
                "witness": r.witness.as_ref().map(obstacles_json),
                "lower_bound": r.lower_bound,
                "bound_source": r.bound_source,
                "formula": formula,
                "placements_tested": r.placements_tested,
                "elapsed_ms": ms(r.elapsed),
            }),
        )?;
    } else {
        match r.optimum {
            Some(k) => writeln!(out, "{spec}: optimum {k}")?,
            None => writeln!(out, "{spec}: {} (at least {})", r.status.name(), r.lower_bound)?,
        }
        writeln!(out, "lower bound source: {}", r.bound_source)?;
        writeln!(out, "{} placements tested in {:.2}s", r.placements_tested, r.elapsed.as_secs_f64())?;
        if let Some(w) = &r.witness {
            write!(out, "{}", serialize_board(&spec.board(w.clone())?))?;
        }
    }
    if r.status == SolveStatus::BudgetExhausted {
        let _ = writeln!(err, "budget of {} exhausted", humantime::format_duration(a.budget));
    }
    Ok(match r.status {
        SolveStatus::Optimal => EXIT_OK,
        SolveStatus::Infeasible => EXIT_NEGATIVE,
        SolveStatus::BudgetExhausted => EXIT_BUDGET,
    })
}

fn contract_json(c: SizeContract) -> Value {
    match c {
        SizeContract::Exact(k) => json!({"exact": k}),
        SizeContract::Between { lower, upper } => json!({"lower": lower, "upper": upper}),
        SizeContract::Unbounded => Value::Null,
    }
}

fn cmd_construct(
    f: Family,
    n: usize,
    m: usize,
    path: Option<&Path>,
    check: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let c = match construct(f, n, m) {
        Ok(c) => c,
        Err(e @ constructions::ConstructError::Infeasible { .. }) => {
            if json {
                emit_json(out, &json!({"family": f.name(), "n": n, "m": m, "infeasible": e.to_string()}))?;
            } else {
                writeln!(out, "{e}")?;
            }
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(e.into()),
    };
    let text = serialize_board(&c.board);
    let complete = check.then(|| verify(&c.board, f.mode()).complete);
    if let Some(p) = path {
        std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
    }
    if json {
        emit_json(
            out,
            &json!({
                "family": f.name(), "n": n, "m": m,
                "claimed_size": c.claimed_size,
                "size_contract": contract_json(size_contract(f, n, m)),
                "complete": complete,
                "board": text,
            }),
        )?;
    } else {
        if path.is_none() {
            write!(out, "{text}")?;
        }
        if let Some(ok) = complete {
            writeln!(out, "# {} ({})", if ok { "complete" } else { "incomplete" }, f.mode())?;
        }
    }
    Ok(if complete == Some(false) { EXIT_NEGATIVE } else { EXIT_OK })
}

fn cmd_params(name: &str, args: &[usize], json: bool, out: &mut dyn Write) -> Result<i32> {
    let arity = |k: usize| -> Result<()> {
        if args.len() != k {
            bail!("{name} takes {k} argument(s), got {}", args.len());
        }
        Ok(())
    };
    let value = match name {
        "gamma-t-path" => {
            arity(1)?;
            params::gamma_t_path(args[0]).map(|v| (v, ParamSource::DynamicProgram))
        }
        "rho-path" => {
            arity(1)?;
            params::rho_path(args[0]).map(|v| (v, ParamSource::ClosedForm))
        }
        "rho-grid" => {
            arity(2)?;
            params::rho_grid(args[0], args[1]).map(|v| (v, ParamSource::ClosedForm))
        }
        "gamma-grid" => {
            arity(2)?;
            params::gamma_grid(args[0], args[1]).map(|v| (v.value, v.source))
        }
        _ => return Err(anyhow!("unknown parameter `{name}` (gamma-t-path, rho-path, rho-grid, gamma-grid)")),
    };
    match value {
        Ok((v, source)) => {
            if json {
                emit_json(out, &json!({"name": name, "args": args, "value": v, "source": source.name()}))?;
            } else {
                writeln!(out, "{v} {source}")?;
            }
            Ok(EXIT_OK)
        }
        Err(e) => {
            if json {
                emit_json(out, &json!({"name": name, "args": args, "value": null, "error": e.to_string()}))?;
            } else {
                writeln!(out, "undefined: {e}")?;
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_minmoves(b: &Board, target: Position, mode: Mode, json: bool, out: &mut dyn Write) -> Result<i32> {
    let route = shortest_route(b, target, mode)?;
    if json {
        let moves = route.as_ref().map(|r| {
            r.iter().map(|m| json!({"dir": m.dir.name(), "to": m.to.map(pos)})).collect::<Vec<_>>()
        });
        emit_json(
            out,
            &json!({
                "target": pos(target), "mode": mode.name(),
                "moves": route.as_ref().map(Vec::len), "route": moves,
            }),
        )?;
    } else {
        match &route {
            None => writeln!(out, "{target} cannot be reached ({mode})")?,
            Some(r) => {
                let steps: Vec<String> = r
                    .iter()
                    .map(|m| match m.to {
                        Some(p) => format!("{}->{p}", m.dir.name()),
                        None => m.dir.name().to_string(),
                    })
                    .collect();
                writeln!(out, "{} moves ({mode}): {}", r.len(), steps.join(" "))?;
            }
        }
    }
    Ok(if route.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}
