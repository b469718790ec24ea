use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use geoblock::export::{parse_graph_file, to_dot, to_edge_list, to_structured};
use geoblock::params::triple_system_verdict;
use geoblock::{
    brc_admissible, build_projective_plane, build_star, check_catalog_json, cover_from_design,
    full_report, measure, resolve_design, symmetric_params, triple_system_params, AdmissibilityVerdict,
    BlockDesign, Catalog, Claims, DesignFile, DesignParams, Error, Family, FamilySpec,
    GeodeticReport, LabeledGraph, Measurements, DEFAULT_NODE_BUDGET,
};

const EXIT_INADMISSIBLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNAVAILABLE: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "geoblock", version, about = "Geodetic blocks from block designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Screen design parameters (exit 0 iff admissible, 1 otherwise)
    Params(ParamsArgs),
    /// Build a family member, its star graph and a reconciled report
    Family(FamilyArgs),
    /// Build a single design and print or save it
    Design(DesignArgs),
    /// Measure a graph file (edge list or structured JSON)
    Verify(VerifyArgs),
    /// Inspect or extend a design catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Write the star graph of a design in dot, edgelist or structured form
    Export(ExportArgs),
}

#[derive(Args)]
struct ParamsArgs {
    /// Triple system with n points and pair multiplicity λ
    #[arg(long, num_args = 2, value_names = ["N", "LAMBDA"], conflicts_with = "symmetric", required_unless_present = "symmetric")]
    triple: Option<Vec<u64>>,
    /// Symmetric design given as `n λ` (order n, block size n+1) or `v k λ`
    #[arg(long, num_args = 2..=3, value_names = ["ARGS"])]
    symmetric: Option<Vec<u64>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogOpt {
    /// Catalog file merged after the bundled catalog
    #[arg(long, value_name = "PATH")]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    /// thm5_sts, thm6_twofold, thm7_threefold, thm8_plane, thm9_biplane,
    /// thm10_threefold_symmetric (or the short forms thm5 … thm10)
    name: String,
    n: u64,
    /// Directory for design.json, star.edges, star.dot and report.json
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Step budget for the backtracking search
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(flatten)]
    catalog: CatalogOpt,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DesignKind {
    /// Triple system: N λ
    Triple,
    /// Symmetric design of order N: N λ
    Symmetric,
    /// Projective plane of prime-power order: Q
    Plane,
}

#[derive(Args)]
struct DesignArgs {
    kind: DesignKind,
    #[arg(required = true, num_args = 1..=2)]
    values: Vec<u64>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(flatten)]
    catalog: CatalogOpt,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print every entry's parameter tuple
    List(CatalogOpt),
    /// Re-check every entry (exit 4 if any fails)
    Validate(CatalogOpt),
    /// Verify a design file and add it to a catalog file
    Add {
        file: PathBuf,
        #[arg(long)]
        name: String,
        /// Catalog file to extend; created if missing
        #[arg(long, value_name = "PATH")]
        catalog: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Edgelist,
    Structured,
}

#[derive(Args)]
struct ExportArgs {
    /// Design file to export
    #[arg(long, value_name = "FILE", conflicts_with = "family", required_unless_present = "family")]
    design: Option<PathBuf>,
    /// Family member given as `NAME N`
    #[arg(long, num_args = 2, value_names = ["NAME", "N"])]
    family: Option<Vec<String>>,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(flatten)]
    catalog: CatalogOpt,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<DisconnectedGraph>() {
        return EXIT_VIOLATION;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::ConstructionUnavailable(_)) => EXIT_UNAVAILABLE,
        Some(Error::Disconnected { .. }) => EXIT_VIOLATION,
        Some(Error::Overflow(_)) => 1,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Params(args) => cmd_params(args),
        Command::Family(args) => cmd_family(args),
        Command::Design(args) => cmd_design(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog { action } => cmd_catalog(action),
        Command::Export(args) => cmd_export(args),
    }
}

fn emit_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_params(args: ParamsArgs) -> anyhow::Result<u8> {
    let verdict = if let Some(t) = args.triple {
        match triple_system_verdict(t[0], t[1]) {
            Ok(v) => v,
            Err(Error::InadmissibleParameters(msg)) => return inadmissible(&msg, args.json),
            Err(e) => return Err(e.into()),
        }
    } else {
        let s = args.symmetric.expect("clap requires one of the two");
        let (v, k, lambda) = match s[..] {
            [n, lambda] => match symmetric_params(n, lambda) {
                Ok(p) => (p.n, p.k, p.lambda),
                Err(Error::InadmissibleParameters(msg)) => return inadmissible(&msg, args.json),
                Err(e) => return Err(e.into()),
            },
            [v, k, lambda] => (v, k, lambda),
            _ => unreachable!("clap limits the count"),
        };
        match brc_admissible(v, k, lambda) {
            Ok(verdict) => verdict,
            Err(Error::Precondition(msg) | Error::InadmissibleParameters(msg)) => {
                return inadmissible(&msg, args.json)
            }
            Err(e) => return Err(e.into()),
        }
    };
    if args.json {
        emit_json(&serde_json::json!({
            "admissible": verdict.admissible(),
            "verdict": verdict,
        }))?;
    } else {
        print_verdict(&verdict);
    }
    Ok(if verdict.admissible() { 0 } else { EXIT_INADMISSIBLE })
}

fn inadmissible(msg: &str, json: bool) -> anyhow::Result<u8> {
    if json {
        emit_json(&serde_json::json!({ "admissible": false, "reason": msg }))?;
    } else {
        println!("inadmissible: {msg}");
    }
    Ok(EXIT_INADMISSIBLE)
}

fn print_verdict(v: &AdmissibilityVerdict) {
    println!("parameters {}", v.params);
    println!("  divisibility identities: {}", pass_fail(v.necessary_ok));
    if let Some(h) = v.hanani_ok {
        println!("  triple system congruences: {}", pass_fail(h));
    }
    if let Some(brc) = v.brc {
        let name = serde_json::to_value(brc)
            .ok()
            .and_then(|x| x.as_str().map(str::to_owned))
            .unwrap_or_default();
        println!("  Bruck-Ryser-Chowla: {name}");
    }
    if let Some((x, y, z)) = v.witness {
        println!("  witness (x, y, z) = ({x}, {y}, {z})");
    }
    if let Some(b) = &v.search_bound {
        println!(
            "  reduced form {:?}, search box |x| <= {}, |y| <= {}, |z| <= {}",
            b.reduced, b.x_max, b.y_max, b.z_max
        );
    }
    println!(
        "{}",
        if v.admissible() { "admissible" } else { "inadmissible" }
    );
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn load_catalog(opt: &CatalogOpt) -> anyhow::Result<Catalog> {
    let mut catalog = Catalog::bundled().clone();
    if let Some(path) = &opt.catalog {
        let extra = Catalog::load(path).with_context(|| format!("loading {}", path.display()))?;
        catalog.merge(&extra);
    }
    Ok(catalog)
}

fn family_spec(name: &str, n: u64) -> anyhow::Result<FamilySpec> {
    let family: Family = name.parse()?;
    Ok(FamilySpec::new(family, n)?)
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn cmd_family(args: FamilyArgs) -> anyhow::Result<u8> {
    let spec = family_spec(&args.name, args.n)?;
    let catalog = load_catalog(&args.catalog)?;
    let run = spec.run(&catalog, args.budget)?;
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let labeled = run.star.labeled();
        write_file(&dir.join("design.json"), &DesignFile::to_json(&run.design))?;
        write_file(&dir.join("star.edges"), &to_edge_list(labeled))?;
        write_file(&dir.join("star.dot"), &to_dot(labeled))?;
        write_file(
            &dir.join("report.json"),
            &to_structured(labeled, Some(&run.design), Some(run.star.cover()), Some(&run.report))?,
        )?;
    }
    if args.json {
        emit_json(&run.report)?;
    } else {
        println!("{} n = {}", spec.family, spec.n);
        print_report(&run.report);
    }
    Ok(if run.report.all_pass() { 0 } else { EXIT_VIOLATION })
}

fn print_measurements(m: &Measurements) {
    let degrees: Vec<String> = m
        .degree_profile
        .iter()
        .map(|(d, c)| format!("{d}×{c}"))
        .collect();
    let histogram: Vec<String> = m
        .count_histogram
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    println!("  vertices {}, edges {}", m.vertex_count, m.edge_count);
    println!("  degree profile {}", degrees.join(" "));
    println!(
        "  nonadjacent pairs {}, shortest-path counts {}",
        m.nonadjacent_pairs,
        histogram.join(" ")
    );
    println!("  K = {} ({})", m.measured_k, m.class);
    println!("  diameter {}", m.diameter);
    println!("  vertex connectivity {}", m.connectivity);
}

fn print_report(r: &GeodeticReport) {
    println!("design {}", r.design);
    print_measurements(&r.measurements);
    let p = &r.predictions;
    println!(
        "  predicted: μ = {}, diameter {}, vertices {}, edges {}",
        p.mu, p.predicted_diameter, p.vertex_formula, p.edge_formula
    );
    let failures = r.reconciliation.failures();
    if failures.is_empty() {
        println!("all checks pass");
    } else {
        println!("failed checks: {}", failures.join(", "));
    }
}

fn cmd_design(args: DesignArgs) -> anyhow::Result<u8> {
    let catalog = load_catalog(&args.catalog)?;
    let params: DesignParams = match (args.kind, &args.values[..]) {
        (DesignKind::Triple, [n, lambda]) => triple_system_params(*n, *lambda)?,
        (DesignKind::Symmetric, [n, lambda]) => symmetric_params(*n, *lambda)?,
        (DesignKind::Plane, [q]) => symmetric_params(*q, 1)?,
        _ => bail!(Error::Parse(
            "triple and symmetric take N λ; plane takes Q".into()
        )),
    };
    let design = match args.kind {
        DesignKind::Plane => build_projective_plane(args.values[0])?,
        _ => resolve_design(&params, &catalog, args.budget)?,
    };
    let text = DesignFile::to_json(&design);
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let text = fs::read_to_string(&args.file)
        .map_err(|e| anyhow!(Error::Parse(format!("{}: {e}", args.file.display()))))?;
    let doc = parse_graph_file(&text)?;
    let Some(design) = doc.design else {
        let m = measure(doc.graph.graph()).map_err(|e| describe(&doc.graph, e))?;
        if args.json {
            emit_json(&m)?;
        } else {
            print_measurements(&m);
        }
        return Ok(0);
    };
    let star = build_star(&cover_from_design(&design)?);
    if star.labeled() != &doc.graph {
        println!("graph does not match the star graph of the stored design");
        return Ok(EXIT_VIOLATION);
    }
    if let Some(cover) = &doc.cover {
        if cover != star.cover() {
            println!("stored cover does not match the stored design");
            return Ok(EXIT_VIOLATION);
        }
    }
    let claims = doc.claims.unwrap_or_else(Claims::default);
    let report = full_report(&design, &star, &claims).map_err(|e| describe(&doc.graph, e))?;
    if args.json {
        emit_json(&report)?;
    } else {
        print_report(&report);
    }
    Ok(if report.all_pass() { 0 } else { EXIT_VIOLATION })
}

/// A disconnected input graph, with the unreachable pair named by label.
#[derive(Debug)]
struct DisconnectedGraph(String);

impl std::fmt::Display for DisconnectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DisconnectedGraph {}

fn describe(graph: &LabeledGraph, err: Error) -> anyhow::Error {
    match err {
        Error::Disconnected { .. } => DisconnectedGraph(graph.describe(err)).into(),
        other => other.into(),
    }
}

fn cmd_catalog(action: CatalogAction) -> anyhow::Result<u8> {
    match action {
        CatalogAction::List(opt) => {
            let catalog = match &opt.catalog {
                Some(path) => Catalog::load(path)?,
                None => Catalog::bundled().clone(),
            };
            for entry in catalog.entries() {
                println!("{:<24} {}", entry.name, entry.params);
            }
            Ok(0)
        }
        CatalogAction::Validate(opt) => {
            let text = match &opt.catalog {
                Some(path) => fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => Catalog::bundled().to_json(),
            };
            let checks = check_catalog_json(&text)?;
            for c in &checks {
                let realized = c
                    .realized
                    .map_or_else(|| "not a design".to_string(), |p| p.to_string());
                println!(
                    "{} {:<24} claimed {} realized {}",
                    if c.ok { "ok  " } else { "FAIL" },
                    c.name,
                    c.claimed,
                    realized
                );
            }
            Ok(if checks.iter().all(|c| c.ok) { 0 } else { EXIT_VIOLATION })
        }
        CatalogAction::Add { file, name, catalog } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| anyhow!(Error::Parse(format!("{}: {e}", file.display()))))?;
            let design: BlockDesign = DesignFile::parse(&text)?;
            let mut target = if catalog.exists() {
                Catalog::load(&catalog)?
            } else {
                Catalog::default()
            };
            match target.insert(&name, design) {
                Ok(params) => {
                    target.save(&catalog)?;
                    println!("added {name} {params} to {}", catalog.display());
                    Ok(0)
                }
                Err(e) => {
                    println!("refused {name}: {e}");
                    Ok(EXIT_VIOLATION)
                }
            }
        }
    }
}

fn cmd_export(args: ExportArgs) -> anyhow::Result<u8> {
    let catalog = load_catalog(&args.catalog)?;
    let design = match (&args.design, &args.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| anyhow!(Error::Parse(format!("{}: {e}", path.display()))))?;
            DesignFile::parse(&text)?
        }
        (None, Some(fam)) => {
            let n: u64 = fam[1]
                .parse()
                .map_err(|_| Error::Parse(format!("invalid n {:?}", fam[1])))?;
            family_spec(&fam[0], n)?.build_design(&catalog, args.budget)?
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let star = build_star(&cover_from_design(&design)?);
    let labeled = star.labeled();
    let text = match args.format {
        Format::Dot => to_dot(labeled),
        Format::Edgelist => to_edge_list(labeled),
        Format::Structured => to_structured(labeled, Some(&design), Some(star.cover()), None)?,
    };
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}
