use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gmackey::burnside::TableOfMarks;
use gmackey::group::{FiniteGroup, Subgroup};
use gmackey::gset::GSet;
use gmackey::io::{load_group, load_gsets, Envelope, GSetSpec};
use gmackey::report::Report;
use gmackey::retractive::{retractive_sets_up_to, RetractiveGSet};
use gmackey::suites::{self, Mutation};
use gmackey::theta::{ThetaBounds, ThetaMutation};
use gmackey::Result;

#[derive(Parser)]
#[command(name = "gmackey", version, about = "Equivariant span calculus, Mackey structure and coherence checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Subcommand)]
enum Command {
    /// Table of marks, checked against conjugation counts.
    Marks,
    /// Burnside bases, composition tensors and the double coset formula.
    Mackey,
    /// The tom Dieck splitting of fixed points for each G-set.
    Tomdieck,
    /// Coherence suites over the selected families.
    Coherence {
        /// Families to run; all of them when omitted.
        #[arg(long = "family", value_enum)]
        families: Vec<Family>,
    },
    /// Strictification of the seeded corpus and of span modules.
    StrictifyDemo,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Actions,
    Multiparam,
    Strictify,
    Hfp,
    Splitting,
    Theta,
    Assembly,
}

#[derive(Args)]
struct RunConfig {
    /// Group JSON file, or a built-in name such as C2, S3, C2xC2.
    #[arg(long, global = true, default_value = "C2")]
    group: String,
    /// G-set JSON file: one G-set or a list.
    #[arg(long, global = true)]
    gset: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    bound_apex: u64,
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    bound_free: u64,
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    arity: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report envelope here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Inject a fault: broken-composition, inverted-theta,
    /// non-equivariant-bijection or broken-action-table.
    #[arg(long, global = true, value_parser = parse_mutation)]
    mutate: Option<Mutation>,
}

fn parse_mutation(s: &str) -> std::result::Result<Mutation, String> {
    Mutation::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
        format!("unknown mutation {s:?}; expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(envelope) => {
            for r in &envelope.reports {
                println!("{r}");
            }
            if let Some(path) = &cli.config.json {
                let text = serde_json::to_string_pretty(&envelope).expect("reports serialize");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if envelope.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Envelope> {
    let config = &cli.config;
    let group = load_group(&config.group)?;
    let mutation = config.mutate;
    if let Some(m) = mutation {
        let supported = match &cli.command {
            Command::Marks | Command::Mackey => m == Mutation::BrokenActionTable,
            Command::Tomdieck => matches!(m, Mutation::BrokenActionTable | Mutation::NonEquivariantBijection),
            Command::StrictifyDemo => matches!(m, Mutation::BrokenActionTable | Mutation::InvertedTheta),
            Command::Coherence { .. } => true,
        };
        if !supported {
            return Err(gmackey::Error::Parse(format!("--mutate {} does not apply to this command", m.name())));
        }
    }
    match &cli.command {
        Command::Marks => {
            let (t, mut report) = suites::marks_suite(&group)?;
            print_marks(&t);
            fold_action_tables(&group, mutation, &mut report);
            Ok(Envelope::new("marks", vec![report], json!({ "classes": labels(&t.classes), "marks": t.marks })))
        }
        Command::Mackey => {
            let (table, mut report) = suites::mackey_suite(&group)?;
            let sizes = suites::basis_sizes(&group)?;
            println!("Burnside basis sizes between orbits {}", labels(&table.classes).join(" "));
            for row in &sizes {
                println!("{}", row.iter().map(|n| format!("{n:>4}")).collect::<String>());
            }
            fold_action_tables(&group, mutation, &mut report);
            Ok(Envelope::new("mackey", vec![report], json!({ "basis_sizes": sizes, "table": table })))
        }
        Command::Tomdieck => {
            let gsets = match &config.gset {
                Some(path) => load_gsets(path, &group)?,
                None => suites::tom_dieck_gsets(&group)?,
            };
            let (splittings, mut report) = suites::tom_dieck_suite(&group, &gsets, mutation)?;
            for (x, td) in gsets.iter().zip(&splittings) {
                println!("G-set of size {}: {} summands, bijection {:?}", x.size(), td.right.len(), td.bijection);
            }
            fold_action_tables(&group, mutation, &mut report);
            let specs: Vec<GSetSpec> = gsets.iter().map(GSetSpec::of).collect();
            Ok(Envelope::new("tomdieck", vec![report], json!({ "gsets": specs, "splittings": splittings })))
        }
        Command::Coherence { families } => coherence(config, &group, families),
        Command::StrictifyDemo => {
            let (instances, mut report) = suites::strictification_suite(config.seed, mutation)?;
            println!("{instances} instances");
            fold_action_tables(&group, mutation, &mut report);
            Ok(Envelope::new("strictify-demo", vec![report], json!({ "seed": config.seed, "instances": instances })))
        }
    }
}

fn coherence(config: &RunConfig, group: &FiniteGroup, families: &[Family]) -> Result<Envelope> {
    let all = [
        Family::Actions,
        Family::Multiparam,
        Family::Strictify,
        Family::Hfp,
        Family::Splitting,
        Family::Theta,
        Family::Assembly,
    ];
    let selected: Vec<Family> = if families.is_empty() { all.to_vec() } else { families.to_vec() };
    let mutation = config.mutate;
    let apex = config.bound_apex as usize;
    let free = config.bound_free as usize;
    let bases = [GSet::point(group), GSet::regular(group)];
    let mut reports = Vec::new();
    let mut levels = Vec::new();
    for family in selected {
        let report = match family {
            Family::Actions => suites::action_table_suite(group, mutation),
            Family::Multiparam => suites::multiparam_suite(group, config.arity as usize, apex.min(2), mutation)?,
            Family::Strictify => suites::strictification_suite(config.seed, mutation)?.1,
            Family::Hfp => suites::hfp_suite(group, &bases, free.min(2), mutation)?,
            Family::Splitting => suites::splitting_for(group, &bases, free)?,
            Family::Theta => {
                let bounds = ThetaBounds {
                    max_apex: apex,
                    max_free: free,
                    orbit_spans_only: group.order() > 2,
                    subgroups: gmackey::group::subgroups(group)?,
                    bases: bases.to_vec(),
                    iso_limit: usize::MAX,
                    mutation: (mutation == Some(Mutation::InvertedTheta)).then_some(ThetaMutation::SwapOutputs),
                };
                suites::theta_suite(group, &bounds)?
            }
            Family::Assembly => {
                let mut bounds = suites::assembly_bounds(group);
                bounds.max_free = bounds.max_free.min(free);
                let assembly = suites::assembly_suite(group, &GSet::regular(group), &bounds)?;
                levels = assembly.levels;
                assembly.report
            }
        };
        reports.push(report);
    }
    let objects: Vec<RetractiveGSet> = retractive_sets_up_to(group, &group.whole(), &GSet::point(group), free.min(2))?;
    let data = json!({
        "bounds": { "apex": apex, "free": free, "arity": config.arity },
        "mutation": mutation.map(Mutation::name),
        "assembly_levels": levels,
        "sample_objects": objects,
    });
    Ok(Envelope::new("coherence", reports, data))
}

/// The action-table check joins any command run with that mutation.
fn fold_action_tables(group: &FiniteGroup, mutation: Option<Mutation>, report: &mut Report) {
    if mutation.is_some() {
        report.merge(suites::action_table_suite(group, mutation));
    }
}

fn labels(classes: &[Subgroup]) -> Vec<String> {
    classes.iter().map(|h| format!("{:?}", h.elements())).collect()
}

fn print_marks(t: &TableOfMarks) {
    let names = labels(&t.classes);
    let width = names.iter().map(String::len).max().unwrap_or(0);
    for (name, row) in names.iter().zip(&t.marks) {
        println!("{name:<width$}  {}", row.iter().map(|m| format!("{m:>4}")).collect::<String>());
    }
}
