//! `relcenter`: command-line front end for the relcenter library.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use relcenter::center::DEFAULT_SEED;
use relcenter::group::DEFAULT_MAX_ORDER;

use commands::{CharacterChoice, GluingPaths, Output, Session};

#[derive(Parser)]
#[command(name = "relcenter", version, about = "Pre-metric groups, pointed braided categories and the center of Rep(G)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest group order accepted when building groups.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER, global = true)]
    max_order: usize,
    /// Seed for the generic combination used in degree recovery.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Finite group inspection.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Quadratic forms on finite abelian groups.
    #[command(subcommand)]
    Premetric(PremetricCmd),
    /// Pointed braided fusion categories C(G, q).
    #[command(subcommand)]
    Pointed(PointedCmd),
    /// The Drinfeld center of Rep(G).
    #[command(subcommand)]
    Center(CenterCmd),
    /// Run the invariant suite over the built-in corpus and/or given files.
    Verify {
        /// Include the built-in corpus (the default when no files are given).
        #[arg(long)]
        corpus: bool,
        /// Group record to verify; repeatable.
        #[arg(long = "group")]
        groups: Vec<PathBuf>,
        /// Form record to verify; repeatable.
        #[arg(long = "form")]
        forms: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, conjugacy classes, centralizers, center and abelian invariants.
    Info { spec: PathBuf },
}

#[derive(Args)]
struct Gluing {
    /// Form record of C1.
    #[arg(long)]
    left: PathBuf,
    /// Form record of C2.
    #[arg(long)]
    right: PathBuf,
    /// Form record of the common pre-metric group D.
    #[arg(long)]
    common: PathBuf,
    /// Morphism record D -> C1.
    #[arg(long)]
    iota1: PathBuf,
    /// Morphism record D -> C2.
    #[arg(long)]
    iota2: PathBuf,
}

impl Gluing {
    fn paths(&self) -> GluingPaths<'_> {
        GluingPaths {
            left: &self.left,
            right: &self.right,
            common: &self.common,
            iota1: &self.iota1,
            iota2: &self.iota2,
        }
    }
}

#[derive(Subcommand)]
enum PremetricCmd {
    /// Validate a form record.
    Validate { form: PathBuf },
    /// Orthogonal sum of two forms.
    Product { left: PathBuf, right: PathBuf },
    /// Push the sum of two forms down along the antidiagonal of a common subgroup.
    Descend(Gluing),
}

#[derive(Subcommand)]
enum PointedCmd {
    /// Mueger center.
    Center { form: PathBuf },
    /// Relative tensor product over a common pre-metric group.
    Tensor(Gluing),
    /// C tensored with its reverse over the Mueger center.
    Tilde { form: PathBuf },
    /// Frobenius-Perron dimensions of Z(C), C', C~ and the remainder.
    FpdimReport { form: PathBuf },
}

#[derive(Subcommand)]
enum CenterCmd {
    /// One component per conjugacy class.
    Decompose { group: PathBuf },
    /// Simple objects (class, irreducible representation of the centralizer).
    Simples { group: PathBuf },
    /// Rank-one bundle induced from a linear character of a centralizer.
    Induce {
        group: PathBuf,
        /// Label of the element a.
        #[arg(long)]
        class: String,
        /// Index into the enumerated linear characters of Z(a); 0 is trivial.
        #[arg(long, conflicts_with = "chi")]
        character: Option<usize>,
        /// Explicit character value `label=a/b`; repeat for every element of Z(a).
        #[arg(long, value_parser = parse_pair)]
        chi: Vec<(String, String)>,
    },
    /// Fusion rules of the components.
    Fuse { group: PathBuf },
}

fn parse_pair(s: &str) -> Result<(String, String), String> {
    s.rsplit_once('=')
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .ok_or_else(|| format!("expected label=value, got {s:?}"))
}

fn run(cli: &Cli, session: &mut Session) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Group(GroupCmd::Info { spec }) => commands::group_info(session, spec),
        Command::Premetric(cmd) => match cmd {
            PremetricCmd::Validate { form } => commands::premetric_validate(session, form),
            PremetricCmd::Product { left, right } => commands::premetric_product(session, left, right),
            PremetricCmd::Descend(g) => commands::premetric_descend(session, &g.paths()),
        },
        Command::Pointed(cmd) => match cmd {
            PointedCmd::Center { form } => commands::pointed_center(session, form),
            PointedCmd::Tensor(g) => commands::pointed_tensor(session, &g.paths()),
            PointedCmd::Tilde { form } => commands::pointed_tilde(session, form),
            PointedCmd::FpdimReport { form } => commands::pointed_fpdim_report(session, form),
        },
        Command::Center(cmd) => match cmd {
            CenterCmd::Decompose { group } => commands::center_decompose(session, group),
            CenterCmd::Simples { group } => commands::center_simples(session, group),
            CenterCmd::Induce { group, class, character, chi } => {
                let choice = if chi.is_empty() {
                    CharacterChoice::Index(character.unwrap_or(0))
                } else {
                    CharacterChoice::Values(chi.clone())
                };
                commands::center_induce(session, group, class, &choice)
            }
            CenterCmd::Fuse { group } => commands::center_fuse(session, group),
        },
        Command::Verify { corpus, groups, forms } => {
            let corpus = *corpus || (groups.is_empty() && forms.is_empty());
            commands::verify(session, corpus, groups, forms)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::iter::once("relcenter".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let mut session = Session::new(cli.max_order, cli.seed);
    match run(&cli, &mut session) {
        Ok(out) => {
            let report = session.finish(echo, out);
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Structured => report.to_structured(),
            };
            print!("{rendered}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
