//! Command implementations behind the `forcing-lab` binary.
//!
//! Every command returns an [`Outcome`]: a pass flag, a JSON value, a
//! plain-text rendering and optionally a binary payload. The binary prints
//! the rendering matching `--format` on stdout; logs go to stderr.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::io::{read_catalogs, read_family, write_catalogs, EntryRecord};
use crate::catalog::{derive_seeds, families, CatalogBudget, CatalogEntry, Catalogs, SeedBounds, EXPECTED_COUNTS};
use crate::corpus::{construct_named, NamedFullerene};
use crate::digraph::io::{manifest, to_dot, to_json_lines, write_digraph};
use crate::digraph::{build_along_arrays, build_fullerene, generate_digraph, sample_walk, ArcReading, BuildReport, DigraphConfig};
use crate::matching::{forcing_record, min_forcing_number, DEFAULT_BUDGET};
use crate::patch::MinDistanceArray;
use crate::plane::planar_code::{from_planar_code, to_planar_code_many};
use crate::plane::{validate_fullerene, PlaneGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    PlanarCode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Primary,
    EveryApplication,
}

impl From<Reading> for ArcReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Primary => ArcReading::Primary,
            Reading::EveryApplication => ArcReading::EveryApplication,
        }
    }
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "forcing-lab", version, about = "Forcing numbers of fullerenes and the distance-array construction")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest graph order the exhaustive searches accept.
    #[arg(long, global = true, env = "FORCING_LAB_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = positive)]
    pub budget_vertices: usize,
    /// Worker threads; all outputs are independent of this.
    #[arg(long, global = true, value_parser = positive)]
    pub threads: Option<usize>,
    /// Seed for walk sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file or directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct GraphInputs {
    /// Planar-code files.
    #[arg(long = "input", num_args = 1..)]
    pub input: Vec<PathBuf>,
    /// Named fullerenes: F20, F24, G<k>, nanotube42:<cap>:<layers>.
    #[arg(long = "named", num_args = 1..)]
    pub named: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CatalogSource {
    /// Directory with catalog files; the catalogs are derived when absent.
    #[arg(long)]
    pub catalogs: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks that every graph is a fullerene.
    Validate(GraphInputs),
    /// Minimum forcing numbers.
    Forcing {
        #[command(flatten)]
        graphs: GraphInputs,
        #[arg(long)]
        expect_f: Option<usize>,
    },
    /// Anti-forcing numbers.
    Antiforcing {
        #[command(flatten)]
        graphs: GraphInputs,
        #[arg(long)]
        expect_af: Option<usize>,
    },
    /// Derives a patch family, or all of them, and compares counts.
    Catalog {
        /// J1, J2, P, D, PP, T10, T12, L or all.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 1)]
        expect_j1: usize,
        #[arg(long, default_value_t = 1)]
        expect_j2: usize,
        #[arg(long, default_value_t = 2)]
        expect_p: usize,
        #[arg(long, default_value_t = 11)]
        expect_d: usize,
        #[arg(long, default_value_t = 1)]
        expect_pp: usize,
        #[arg(long, default_value_t = 16)]
        expect_t10: usize,
        #[arg(long, default_value_t = 164)]
        expect_t12: usize,
        #[arg(long, default_value_t = 95)]
        expect_seeds: usize,
    },
    /// Builds the distance-array digraph.
    GenDigraph {
        #[command(flatten)]
        source: CatalogSource,
        /// Seed arrays to start from instead of every seed.
        #[arg(long = "seeds", num_args = 1..)]
        seeds: Vec<String>,
        #[arg(long, value_enum, default_value_t = Reading::Primary)]
        reading: Reading,
        /// Also run the other reading and record its counts.
        #[arg(long)]
        alternate: bool,
        /// Defaults to 7802 when started from every seed.
        #[arg(long)]
        expect_nodes: Option<usize>,
        /// Defaults to 28379 when started from every seed.
        #[arg(long)]
        expect_arcs: Option<usize>,
        /// Defaults to 4 when started from every seed.
        #[arg(long)]
        expect_loops: Option<usize>,
    },
    /// Realizes fullerenes along digraph walks.
    Build {
        #[command(flatten)]
        source: CatalogSource,
        /// Comma-separated node arrays from a seed to `[]`.
        #[arg(long, conflicts_with = "sample")]
        walk: Option<String>,
        /// Number of random walks to realize.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        /// Exact forcing numbers are computed up to this order.
        #[arg(long, default_value_t = 60)]
        check_order: usize,
    },
}

/// Result of a command.
#[derive(Debug)]
pub struct Outcome {
    pub ok: bool,
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    pub planar_code: Option<Vec<u8>>,
}

impl Outcome {
    fn new(ok: bool, json: Value, text: String) -> Self {
        Outcome { ok, json, text, dot: None, planar_code: None }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Loads planar-code files and named graphs, in that order.
pub fn load_graphs(g: &GraphInputs) -> Result<Vec<(String, PlaneGraph)>> {
    let mut out = Vec::new();
    for p in &g.input {
        let bytes = fs::read(p).with_context(|| format!("reading {}", p.display()))?;
        let gs = from_planar_code(&bytes).with_context(|| format!("parsing {}", p.display()))?;
        if gs.is_empty() {
            bail!("{} holds no graphs", p.display());
        }
        for (i, gr) in gs.into_iter().enumerate() {
            out.push((format!("{}#{i}", p.display()), gr));
        }
    }
    for n in &g.named {
        let name: NamedFullerene = n.parse()?;
        out.push((name.to_string(), construct_named(&name, None)?));
    }
    if out.is_empty() {
        bail!("no graphs given; use --input or --named");
    }
    Ok(out)
}

pub fn cmd_validate(g: &GraphInputs) -> Result<Outcome> {
    let graphs = load_graphs(g)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for (id, gr) in &graphs {
        let r = validate_fullerene(gr);
        let violations: Vec<String> = r.as_ref().err().map(|v| v.iter().map(|x| format!("{x:?}")).collect()).unwrap_or_default();
        text += &format!("{id}: {}\n", if r.is_ok() { "valid".to_string() } else { format!("invalid ({})", violations.join("; ")) });
        rows.push(json!({"graph_id": id, "order": gr.order(), "valid": r.is_ok(), "violations": violations}));
    }
    let ok = rows.iter().all(|r| r["valid"] == true);
    Ok(Outcome::new(ok, Value::Array(rows), text))
}

fn forcing_table(g: &GraphInputs, forcing: bool, expect: Option<usize>, budget: usize) -> Result<Outcome> {
    let graphs = load_graphs(g)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for (id, gr) in &graphs {
        let r = forcing_record(id, gr, forcing, !forcing, budget)?;
        let (v, w) = if forcing { (r.f, &r.f_witness) } else { (r.af, &r.af_witness) };
        let v = v.expect("requested");
        if expect.is_some_and(|e| e != v) {
            ok = false;
        }
        let name = if forcing { "f" } else { "af" };
        text += &format!("{id}: {name} = {v}, witness {:?}, {} perfect matchings\n", w.as_deref().unwrap_or(&[]), r.pm_count);
        rows.push(r);
    }
    Ok(Outcome::new(ok, to_value(&rows), text))
}

pub fn cmd_forcing(g: &GraphInputs, expect: Option<usize>, budget: usize) -> Result<Outcome> {
    forcing_table(g, true, expect, budget)
}

pub fn cmd_antiforcing(g: &GraphInputs, expect: Option<usize>, budget: usize) -> Result<Outcome> {
    forcing_table(g, false, expect, budget)
}

/// Expected counts by family name.
pub fn expected_counts(overrides: &BTreeMap<&str, usize>) -> BTreeMap<String, usize> {
    let mut m: BTreeMap<String, usize> = EXPECTED_COUNTS.iter().map(|(f, c)| (f.to_string(), *c)).collect();
    m.insert("L".into(), 95);
    for (k, v) in overrides {
        m.insert(k.to_string(), *v);
    }
    m
}

pub fn cmd_catalog(family: &str, expected: &BTreeMap<String, usize>, out: Option<&Path>) -> Result<Outcome> {
    let b = CatalogBudget::default();
    let fam = family.to_ascii_uppercase();
    let single = |entries: Vec<CatalogEntry>| -> Result<Outcome> {
        let want = expected[&fam];
        if let Some(dir) = out {
            fs::create_dir_all(dir)?;
            let recs: Vec<EntryRecord> = entries.iter().map(EntryRecord::from).collect();
            fs::write(dir.join(format!("catalog-{fam}.json")), serde_json::to_string_pretty(&recs)? + "\n")?;
        }
        let arrays: Vec<String> = entries.iter().map(|e| e.min_array.to_string()).collect();
        let ok = entries.len() == want;
        let text = format!("{fam}: {} (expected {want}){}\n", entries.len(), if ok { "" } else { "  MISMATCH" });
        Ok(Outcome::new(ok, json!({"family": fam, "count": entries.len(), "expected": want, "arrays": arrays}), text))
    };
    match fam.as_str() {
        "J1" => single(families::derive_unique_pm_small(6, &b)),
        "J2" => single(families::derive_unique_pm_small(8, &b)),
        "P" => single(families::derive_p_family(&b)),
        "D" => single(families::derive_d_family(&b)),
        "PP" => single(families::derive_pp(&b)),
        "T10" => single(families::derive_terminal10(&families::white_types(&families::derive_d_family(&b)), &b)),
        "T12" => single(families::derive_terminal12(&families::white_types(&families::derive_d_family(&b)), &b)),
        "L" => single(derive_seeds(&SeedBounds::default()).entries),
        "W" => bail!("the closed family W is not derived by this build"),
        "ALL" => {
            let cats = Catalogs::derive(&b);
            let seeds = derive_seeds(&SeedBounds::default());
            let m = match out {
                Some(dir) => write_catalogs(dir, &cats, Some(&seeds))?,
                None => crate::catalog::io::manifest(&cats, Some(&seeds)),
            };
            let mut text = String::new();
            let mut ok = true;
            for f in &m.families {
                let want = expected[&f.family];
                ok &= f.count == want;
                text += &format!("{}: {} (expected {want})\n", f.family, f.count);
            }
            let s = m.seeds.as_ref().expect("seeds derived");
            ok &= s.count == expected["L"] && s.quoted_missing.is_empty();
            text += &format!("L: {} (expected {}), {} distinct arrays\n", s.count, expected["L"], s.distinct_arrays);
            for d in &m.diff {
                text += &format!("diff: {d}\n");
            }
            Ok(Outcome::new(ok, to_value(&m), text))
        }
        other => bail!("unknown family {other}"),
    }
}

/// The catalogs and seeds from a directory, or freshly derived.
pub fn load_catalogs(src: &CatalogSource) -> Result<(Catalogs, Vec<CatalogEntry>)> {
    match &src.catalogs {
        Some(dir) => {
            let cats = read_catalogs(dir).with_context(|| format!("reading catalogs in {}", dir.display()))?;
            let seeds = read_family(&dir.join("catalog-L.json")).context("reading the seed catalog")?;
            Ok((cats, seeds))
        }
        None => {
            log::warn!("no --catalogs given; deriving every family, which takes minutes");
            let cats = Catalogs::derive(&CatalogBudget::default());
            let seeds = derive_seeds(&SeedBounds::default()).entries;
            Ok((cats, seeds))
        }
    }
}

fn parse_array(s: &str) -> Result<MinDistanceArray> {
    let t = s.trim();
    if t.is_empty() || t == "[]" {
        return Ok(MinDistanceArray::empty());
    }
    t.parse().map_err(|e| anyhow!("bad array {t:?}: {e}"))
}

pub struct DigraphRequest<'a> {
    pub seeds: &'a [String],
    pub reading: Reading,
    pub alternate: bool,
    pub expect_nodes: Option<usize>,
    pub expect_arcs: Option<usize>,
    pub expect_loops: Option<usize>,
}

pub fn cmd_gen_digraph(src: &CatalogSource, req: &DigraphRequest<'_>, out: Option<&Path>) -> Result<Outcome> {
    let (cats, seeds) = load_catalogs(src)?;
    gen_digraph_with(&cats, &seeds, req, out)
}

/// [`cmd_gen_digraph`] on catalogs already in memory.
pub fn gen_digraph_with(cats: &Catalogs, seed_entries: &[CatalogEntry], req: &DigraphRequest<'_>, out: Option<&Path>) -> Result<Outcome> {
    let known: Vec<MinDistanceArray> = {
        let mut v: Vec<MinDistanceArray> = seed_entries.iter().map(|e| e.min_array.clone()).collect();
        v.sort();
        v.dedup();
        v
    };
    let full = req.seeds.is_empty();
    let seeds: Vec<MinDistanceArray> = if full {
        known.clone()
    } else {
        let mut v = Vec::new();
        for s in req.seeds {
            let a = parse_array(s)?;
            if known.binary_search(&a).is_err() {
                bail!("{a} is not a seed array");
            }
            v.push(a);
        }
        v
    };
    let tc = cats.terminal();
    let reading: ArcReading = req.reading.into();
    let d = generate_digraph(&seeds, &tc, &DigraphConfig { reading, ..DigraphConfig::default() })?;
    if !full {
        if let Some(bad) = seeds.iter().find(|s| d.index_of(s).is_none()) {
            bail!("seed {bad} has no walk to []");
        }
    }
    let mut m = manifest(&d, &seeds, reading);
    if req.alternate {
        let other = match reading {
            ArcReading::Primary => ArcReading::EveryApplication,
            ArcReading::EveryApplication => ArcReading::Primary,
        };
        let d2 = generate_digraph(&seeds, &tc, &DigraphConfig { reading: other, ..DigraphConfig::default() })?;
        m.alternate = Some(d2.summary());
    }
    if let Some(dir) = out {
        write_digraph(dir, &d, &m)?;
    }
    let (en, ea, el) = if full {
        (req.expect_nodes.or(Some(m.expected_nodes)), req.expect_arcs.or(Some(m.expected_arcs)), req.expect_loops.or(Some(4)))
    } else {
        (req.expect_nodes, req.expect_arcs, req.expect_loops)
    };
    let s = &m.summary;
    let mut checks = Vec::new();
    for (name, want, got) in [("nodes", en, s.nodes), ("arcs", ea, s.arcs), ("loops", el, s.loops.len())] {
        if let Some(w) = want {
            checks.push(json!({"check": name, "found": got, "expected": w, "ok": got == w}));
        }
    }
    let ok = checks.iter().all(|c| c["ok"] == true);
    let empty = MinDistanceArray::empty();
    let bundles: BTreeMap<String, usize> = d
        .nodes
        .iter()
        .filter_map(|n| {
            let b = d.bundle(n, &empty);
            (b > 1).then(|| (n.to_string(), b))
        })
        .collect();
    let mut text = format!("nodes {} arcs {} loops {}\n", s.nodes, s.arcs, s.loops.join(" "));
    if let Some(a) = &m.alternate {
        text += &format!("alternate reading: nodes {} arcs {}\n", a.nodes, a.arcs);
    }
    for c in &checks {
        text += &format!("{}: found {} expected {}\n", c["check"].as_str().unwrap_or(""), c["found"], c["expected"]);
    }
    if !full {
        for (n, b) in &bundles {
            text += &format!("bundle {n} -> []: {b}\n");
        }
    }
    if !m.invalid_seeds.is_empty() {
        text += &format!("seeds without a walk to []: {}\n", m.invalid_seeds.join(" "));
    }
    let mut o = Outcome::new(ok, json!({"manifest": to_value(&m), "checks": checks, "bundles_to_empty": bundles}), text);
    o.dot = Some(to_dot(&d));
    o.json["arcs_jsonl"] = Value::String(if out.is_none() { to_json_lines(&d) } else { String::new() });
    Ok(o)
}

/// A built fullerene with its checks.
#[derive(Clone, Debug, Serialize)]
pub struct BuildRow {
    #[serde(flatten)]
    pub report: BuildReport,
    pub walk: Vec<String>,
    /// Exact minimum forcing number, when within the checked order.
    pub f: Option<usize>,
    pub ok: bool,
}

fn check_built(seed: &CatalogEntry, walk: Vec<String>, b: &crate::digraph::BuiltFullerene, check_order: usize, budget: usize) -> BuildRow {
    let order = b.graph.order();
    let f = (order <= check_order).then(|| min_forcing_number(&b.graph, budget).ok().map(|r| r.value)).flatten();
    let f_ok = match f {
        Some(v) if order == 24 => v == 2,
        Some(v) => v == 3,
        None => order > check_order,
    };
    let valid = validate_fullerene(&b.graph).is_ok();
    BuildRow {
        report: BuildReport {
            seed: seed.id.clone(),
            steps: b.arrays.len() - 1,
            order,
            valid_fullerene: valid,
            forcing_verified: b.forcing_verified,
        },
        walk,
        f,
        ok: valid && b.forcing_verified && b.forcing.len() == 3 && f_ok,
    }
}

pub struct BuildRequest<'a> {
    pub walk: Option<&'a str>,
    pub sample: Option<usize>,
    pub max_len: usize,
    pub check_order: usize,
    pub budget: usize,
    pub seed: u64,
}

pub fn cmd_build(src: &CatalogSource, req: &BuildRequest<'_>, out: Option<&Path>) -> Result<Outcome> {
    let (cats, seeds) = load_catalogs(src)?;
    build_with(&cats, &seeds, req, out)
}

/// [`cmd_build`] on catalogs already in memory.
pub fn build_with(cats: &Catalogs, seeds: &[CatalogEntry], req: &BuildRequest<'_>, out: Option<&Path>) -> Result<Outcome> {
    let tc = cats.terminal();
    let partners = cats.partner_patches();
    let mut rows = Vec::new();
    let mut graphs = Vec::new();
    let mut failures = Vec::new();
    if let Some(w) = req.walk {
        let nodes: Vec<MinDistanceArray> = w.split(',').map(parse_array).collect::<Result<_>>()?;
        let Some(first) = nodes.first() else { bail!("empty walk") };
        let mut last = None;
        for s in seeds.iter().filter(|s| &s.min_array == first) {
            match build_along_arrays(s, &nodes, &tc, &partners) {
                Ok(b) => {
                    rows.push(check_built(s, nodes.iter().map(|a| a.to_string()).collect(), &b, req.check_order, req.budget));
                    graphs.push(b.graph);
                    last = None;
                    break;
                }
                Err(e) => last = Some(e.to_string()),
            }
        }
        if rows.is_empty() {
            failures.push(last.unwrap_or_else(|| format!("no seed has array {first}")));
        }
    } else {
        let n = req.sample.unwrap_or(1);
        let arrays: Vec<MinDistanceArray> = seeds.iter().map(|s| s.min_array.clone()).collect();
        let d = generate_digraph(&arrays, &tc, &DigraphConfig::default())?;
        let valid: Vec<&CatalogEntry> = seeds.iter().filter(|s| d.index_of(&s.min_array).is_some()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
        let mut tries = 0;
        while rows.len() + failures.len() < n && tries < 100 * n {
            tries += 1;
            let s = valid.choose(&mut rng).ok_or_else(|| anyhow!("no valid seed"))?;
            let Some(walk) = sample_walk(&d, &s.min_array, req.max_len, &mut rng) else { continue };
            let names: Vec<String> =
                std::iter::once(s.min_array.to_string()).chain(walk.iter().map(|a| a.result.to_string())).collect();
            match build_fullerene(s, &walk, &partners) {
                Ok(b) => {
                    rows.push(check_built(s, names, &b, req.check_order, req.budget));
                    graphs.push(b.graph);
                }
                Err(e) => failures.push(format!("{}: {e}", names.join(" "))),
            }
        }
        if rows.len() + failures.len() < n {
            failures.push(format!("only {} walks sampled in {tries} tries", rows.len() + failures.len()));
        }
    }
    let pc = to_planar_code_many(&graphs)?;
    if let Some(path) = out {
        fs::write(path, &pc)?;
    }
    let ok = failures.is_empty() && rows.iter().all(|r| r.ok);
    let mut text = String::new();
    for r in &rows {
        text += &format!(
            "order {} steps {} valid {} forcing {} f {} {}\n",
            r.report.order,
            r.report.steps,
            r.report.valid_fullerene,
            r.report.forcing_verified,
            r.f.map_or("-".into(), |v| v.to_string()),
            if r.ok { "ok" } else { "FAIL" }
        );
    }
    for f in &failures {
        text += &format!("walk failed: {f}\n");
    }
    let mut o = Outcome::new(ok, json!({"builds": to_value(&rows), "failures": failures}), text);
    o.planar_code = Some(pc);
    Ok(o)
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let out = cfg.out.as_deref();
    match &cfg.command {
        Command::Validate(g) => cmd_validate(g),
        Command::Forcing { graphs, expect_f } => cmd_forcing(graphs, *expect_f, cfg.budget_vertices),
        Command::Antiforcing { graphs, expect_af } => cmd_antiforcing(graphs, *expect_af, cfg.budget_vertices),
        Command::Catalog { family, expect_j1, expect_j2, expect_p, expect_d, expect_pp, expect_t10, expect_t12, expect_seeds } => {
            let o: BTreeMap<&str, usize> = [
                ("J1", *expect_j1),
                ("J2", *expect_j2),
                ("P", *expect_p),
                ("D", *expect_d),
                ("PP", *expect_pp),
                ("T10", *expect_t10),
                ("T12", *expect_t12),
                ("L", *expect_seeds),
            ]
            .into_iter()
            .collect();
            cmd_catalog(family, &expected_counts(&o), out)
        }
        Command::GenDigraph { source, seeds, reading, alternate, expect_nodes, expect_arcs, expect_loops } => {
            let req = DigraphRequest {
                seeds,
                reading: *reading,
                alternate: *alternate,
                expect_nodes: *expect_nodes,
                expect_arcs: *expect_arcs,
                expect_loops: *expect_loops,
            };
            cmd_gen_digraph(source, &req, out)
        }
        Command::Build { source, walk, sample, max_len, check_order } => {
            let req = BuildRequest {
                walk: walk.as_deref(),
                sample: *sample,
                max_len: *max_len,
                check_order: *check_order,
                budget: cfg.budget_vertices,
                seed: cfg.seed,
            };
            cmd_build(source, &req, out)
        }
    }
}

/// Runs a parsed command, inside a pool of the requested size.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(|| dispatch(cfg)),
        None => dispatch(cfg),
    }
}

/// Entry point of the binary: exit code 0 iff every check passed, 1 on a
/// failed check, 2 on an error.
pub fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cfg = RunConfig::parse();
    let o = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let written = match cfg.format {
        Format::Text => stdout.write_all(o.text.as_bytes()),
        Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&json!({"ok": o.ok, "result": o.json})).expect("json")),
        Format::Dot => match &o.dot {
            Some(d) => stdout.write_all(d.as_bytes()),
            None => {
                eprintln!("error: this command has no DOT output");
                return ExitCode::from(2);
            }
        },
        Format::PlanarCode => match &o.planar_code {
            Some(b) => stdout.write_all(b),
            None => {
                eprintln!("error: this command has no planar-code output");
                return ExitCode::from(2);
            }
        },
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    if o.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
