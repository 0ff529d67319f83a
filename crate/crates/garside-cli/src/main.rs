//! `garside`: normal forms, summit sets, translation numbers and abelian
//! subgroup algorithms over a chosen Garside structure.
//!
//! Exit codes: 0 success, 2 usage or syntax errors, 3 step-budget
//! exhaustion, 4 mathematical domain errors (atom out of range,
//! non-commuting generators, unsupported rank).

mod output;
mod words;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use garside::abelian::{
    abelian_basis, conj_member, member, subgroups_conjugate, subgroups_equal, AbelianPresentation,
};
use garside::conjugacy::{conjugacy_graph, is_conjugate, summit_set, SummitKind};
use garside::translation::translation_number;
use garside::{Braid, Budget, Element, Error, FreeAbelian, Structure};
use serde_json::{json, Value};

use output::{element_json, rational_json, summit_members_json, summit_set_dot, summit_set_json};

#[derive(Parser)]
#[command(
    name = "garside",
    about = "Exact Garside-group computations",
    version,
    max_term_width = 100
)]
struct Cli {
    /// Garside structure: `braid:<n>` (2..=16 strands) or `zn:<n>`.
    #[arg(long)]
    structure: String,

    /// Step budget for searches; exceeding it exits with code 3.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_LIMIT)]
    budget: u64,

    /// Emit DOT instead of JSON (graph subcommand only).
    #[arg(long, global = true)]
    dot: bool,

    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetChoice {
    Super,
    Ultra,
    Stable,
}

impl From<SetChoice> for SummitKind {
    fn from(c: SetChoice) -> SummitKind {
        match c {
            SetChoice::Super => SummitKind::Super,
            SetChoice::Ultra => SummitKind::Ultra,
            SetChoice::Stable => SummitKind::Stable,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Left-greedy normal form of a word.
    Nf { word: String },
    /// Word problem: are two words the same element?
    Eq { left: String, right: String },
    /// Conjugacy decision with a witness conjugator.
    Conj { left: String, right: String },
    /// Super summit set members.
    Sss { word: String },
    /// Ultra summit set members.
    Uss { word: String },
    /// Stable super summit set members.
    Stable { word: String },
    /// Minimal conjugacy graph of a summit set.
    Graph {
        /// Which summit set to build.
        #[arg(long, value_enum, default_value = "super")]
        set: SetChoice,
        word: String,
    },
    /// Exact rational translation number.
    Translation { word: String },
    /// Basis of the abelian subgroup generated by commuting words.
    AbelianBasis {
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Membership of an element in an abelian subgroup.
    AbelianMember {
        element: String,
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Conjugacy membership in an abelian subgroup.
    AbelianConjMember {
        element: String,
        #[arg(required = true)]
        generators: Vec<String>,
    },
    /// Do two generator lists span the same subgroup?
    AbelianEqual {
        /// Generators of the first subgroup (repeatable).
        #[arg(short = 'a', long = "a", required = true)]
        left: Vec<String>,
        /// Generators of the second subgroup (repeatable).
        #[arg(short = 'b', long = "b", required = true)]
        right: Vec<String>,
    },
    /// Are two abelian subgroups conjugate?
    AbelianConjugate {
        #[arg(short = 'a', long = "a", required = true)]
        left: Vec<String>,
        #[arg(short = 'b', long = "b", required = true)]
        right: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
    Domain(String),
}

impl Failure {
    fn exit(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Budget(_) => ExitCode::from(3),
            Failure::Domain(_) => ExitCode::from(4),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<words::WordError> for Failure {
    fn from(e: words::WordError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match parse_structure(&cli.structure) {
        Ok(Chosen::Braid(s)) => run(&cli, s),
        Ok(Chosen::Abelian(s)) => run(&cli, s),
        Err(f) => Err(f),
    };
    match result {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("garside: {}", f.message());
            f.exit()
        }
    }
}

enum Chosen {
    Braid(Braid),
    Abelian(FreeAbelian),
}

fn parse_structure(text: &str) -> Result<Chosen, Failure> {
    let (kind, rank) = text.split_once(':').ok_or_else(|| {
        Failure::Usage(format!("bad structure `{text}`; use braid:<n> or zn:<n>"))
    })?;
    let rank: usize = rank
        .parse()
        .map_err(|_| Failure::Usage(format!("bad rank in structure `{text}`")))?;
    match kind {
        "braid" => Ok(Chosen::Braid(Braid::new(rank)?)),
        "zn" => Ok(Chosen::Abelian(FreeAbelian::new(rank)?)),
        _ => Err(Failure::Usage(format!(
            "unknown structure kind `{kind}`; use braid or zn"
        ))),
    }
}

fn run<S: Structure>(cli: &Cli, s: S) -> Result<String, Failure> {
    let budget = Budget::new(cli.budget);
    let parse = |text: &str| -> Result<Element<S>, Failure> {
        let atoms = words::parse_word(text, &s)?;
        Ok(Element::normalize(&s, &atoms)?)
    };
    let presentation = |texts: &[String]| -> Result<AbelianPresentation<S>, Failure> {
        let elements = texts
            .iter()
            .map(|t| parse(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AbelianPresentation::new(&s, elements, &budget)?)
    };
    if cli.dot && !matches!(cli.command, Command::Graph { .. }) {
        return Err(Failure::Usage(
            "--dot is only available for the graph subcommand".into(),
        ));
    }

    let value: Value = match &cli.command {
        Command::Nf { word } => {
            let x = parse(word)?;
            let (inf, sup, len) = x.invariants();
            json!({
                "element": element_json(&x),
                "inf": inf,
                "sup": sup,
                "len": len,
            })
        }
        Command::Eq { left, right } => {
            json!({ "equal": parse(left)? == parse(right)? })
        }
        Command::Conj { left, right } => {
            let x = parse(left)?;
            let y = parse(right)?;
            match is_conjugate(&x, &y, &budget)? {
                Some(w) => json!({ "conjugate": true, "conjugator": element_json(&w) }),
                None => json!({ "conjugate": false }),
            }
        }
        Command::Sss { word } => {
            summit_members_json(&summit_set(&parse(word)?, SummitKind::Super, &budget)?)
        }
        Command::Uss { word } => {
            summit_members_json(&summit_set(&parse(word)?, SummitKind::Ultra, &budget)?)
        }
        Command::Stable { word } => {
            summit_members_json(&garside::simultaneous::stable_sss(&parse(word)?, &budget)?)
        }
        Command::Graph { set, word } => {
            let graph = conjugacy_graph(&parse(word)?, (*set).into(), &budget)?;
            if cli.dot {
                return Ok(summit_set_dot(&s, &graph).trim_end().to_string());
            }
            summit_set_json(&s, &graph)
        }
        Command::Translation { word } => {
            rational_json(&translation_number(&parse(word)?, &budget)?)
        }
        Command::AbelianBasis { generators } => {
            let basis = abelian_basis(&presentation(generators)?, &budget)?;
            Value::Array(basis.generators().iter().map(element_json).collect())
        }
        Command::AbelianMember {
            element,
            generators,
        } => {
            let g = parse(element)?;
            match member(&g, &presentation(generators)?, &budget)? {
                Some(exps) => json!({
                    "member": true,
                    "exponents": exps.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                }),
                None => json!({ "member": false }),
            }
        }
        Command::AbelianConjMember {
            element,
            generators,
        } => {
            let g = parse(element)?;
            match conj_member(&g, &presentation(generators)?, &budget)? {
                Some((exps, w)) => json!({
                    "member": true,
                    "exponents": exps.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "conjugator": element_json(&w),
                }),
                None => json!({ "member": false }),
            }
        }
        Command::AbelianEqual { left, right } => {
            let equal = subgroups_equal(&presentation(left)?, &presentation(right)?, &budget)?;
            json!({ "equal": equal })
        }
        Command::AbelianConjugate { left, right } => {
            match subgroups_conjugate(&presentation(left)?, &presentation(right)?, &budget)? {
                Some(w) => json!({ "conjugate": true, "conjugator": element_json(&w) }),
                None => json!({ "conjugate": false }),
            }
        }
    };
    Ok(serde_json::to_string_pretty(&value).expect("serializable output"))
}
