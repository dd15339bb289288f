//! Command-line interface.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use discq_core::autgroup::{classify_with, decompose_unipotent, sectors};
use discq_core::centerlat::{center_info, pfaffian_criterion, SearchBound};
use discq_core::discriminant::{disc_free_closed_form, disc_v_with, dominating_test, DiscOptions, DiscRoute};
use discq_core::exactmath::{CycloNumber, LaurentQ};
use discq_core::qweyl::{conjecture_check_with, weyl_aut_classify, weyl_disc_with, weyl_tensor_disc, WEYL_DEFAULT_MAX_ORDER};
use discq_core::skewring::{RingPresentation, RingScalar, SkewAlgebra};
use discq_core::Error;
use serde::Serialize;

use crate::descriptor::{parse_descriptor, parse_map, Descriptor, DescriptorError, FromFormal};
use crate::render;
use crate::report::*;

#[derive(Parser, Debug)]
#[command(name = "discq", version, about = "Discriminants, centers and automorphisms of skew polynomial rings")]
pub struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Center generators, rank and quasi-basis.
    Center { descriptor: PathBuf },
    /// The solution sets T_s.
    Sectors { descriptor: PathBuf },
    /// The v-discriminant; v defaults to the rank.
    Disc {
        descriptor: PathBuf,
        #[arg(long)]
        v: Option<u64>,
        /// Also list generators of the modified discriminant ideal.
        #[arg(long)]
        ideal: bool,
    },
    /// Automorphism group summary.
    Aut { descriptor: PathBuf },
    /// Factor a unipotent automorphism into elementary ones.
    Decompose {
        descriptor: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Quantum Weyl algebras.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCommand {
    /// Discriminant of A_q (with --n) or of a tensor product descriptor.
    Disc {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long)]
        allow_large: bool,
        descriptor: Option<PathBuf>,
    },
    /// Compare the discriminant with ((1-q)^n XY - 1)^(n(n-1)).
    Conjecture {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        exp: i64,
        #[arg(long)]
        allow_large: bool,
    },
    /// Automorphism group of a tensor product of Weyl algebras.
    Aut { descriptor: PathBuf },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Undetermined(_) => EXIT_UNDETERMINED,
            Error::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<DescriptorError> for CliError {
    fn from(e: DescriptorError) -> Self {
        CliError {
            code: EXIT_PRECONDITION,
            message: e.to_string(),
        }
    }
}

fn precondition(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_PRECONDITION,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| precondition(format!("cannot read {}: {}", path.display(), e)))
}

fn skew(path: &Path) -> Result<RingPresentation, CliError> {
    match parse_descriptor(&read(path)?)? {
        Descriptor::Skew(r) => Ok(r),
        Descriptor::Weyl(_) => Err(precondition("expected a skew polynomial ring descriptor, got a Weyl one")),
    }
}

/// Formal-mode bound from DISCQ_BOUND, if set.
pub fn search_bound() -> Result<SearchBound, CliError> {
    let mut b = SearchBound::default();
    if let Ok(v) = std::env::var("DISCQ_BOUND") {
        b.max_degree = v
            .trim()
            .parse()
            .map_err(|_| precondition(format!("DISCQ_BOUND={:?} is not a non-negative integer", v)))?;
    }
    Ok(b)
}

fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(report)
    }
}

/// Runs a parsed command and returns its standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Center { descriptor } => {
            let r = skew(descriptor)?;
            let c = center_info(&r)?;
            let rep = CenterReport::new(r.n(), r.ell().unwrap_or(0), &c, pfaffian_criterion(&r)?);
            Ok(emit(json, &rep, render::center))
        }
        Command::Sectors { descriptor } => {
            let r = skew(descriptor)?;
            let secs = sectors(&r, &search_bound()?)?;
            Ok(emit(json, &SectorsReport::new(r.n(), &secs), render::sectors))
        }
        Command::Disc { descriptor, v, ideal } => {
            let r = skew(descriptor)?;
            let rep = disc_report(&r, *v, *ideal)?;
            Ok(emit(json, &rep, render::disc))
        }
        Command::Aut { descriptor } => {
            let r = skew(descriptor)?;
            let a = classify_with(&r, &search_bound()?)?;
            Ok(emit(json, &AutReport::from(&a), render::aut))
        }
        Command::Decompose { descriptor, map } => {
            let r = skew(descriptor)?;
            let text = read(map)?;
            let rep = if r.is_root_mode() {
                decompose::<CycloNumber>(&r, &text)?
            } else {
                decompose::<LaurentQ>(&r, &text)?
            };
            Ok(emit(json, &rep, render::decompose))
        }
        Command::Weyl { command } => run_weyl(command, json),
    }
}

fn decompose<C: RingScalar + FromFormal>(r: &RingPresentation, text: &str) -> Result<DecomposeReport, CliError> {
    let alg = SkewAlgebra::<C>::new(r)?;
    let g = parse_map::<C>(text, r.n())?;
    let factors = decompose_unipotent(&alg, &g, &search_bound()?)?;
    Ok(DecomposeReport::new(&factors))
}

pub fn disc_report(r: &RingPresentation, v: Option<u64>, ideal: bool) -> Result<DiscReport, CliError> {
    let c = center_info(r)?;
    let v = v.unwrap_or(c.rank);
    let opts = DiscOptions {
        ideal_generators: ideal,
        ..DiscOptions::default()
    };
    let d = disc_v_with(r, &c, v, &opts)?;
    let names = var_names(r.n());
    let text = match &d.value {
        None => "0".to_string(),
        Some(e) => render::monomial_text(e, &names),
    };
    let closed_form = if v == c.rank && c.is_polynomial {
        let cf = disc_free_closed_form(&c)?;
        let agrees = cf.value == d.value;
        if !agrees {
            return Err(Error::Invariant(format!("closed form {:?} differs from trace-matrix {:?}", cf.value, d.value)).into());
        }
        Some(ClosedFormCheck {
            value: cf.value.clone().unwrap_or_default(),
            scalar: cf.scalar.map(|s| s.to_string()).unwrap_or_default(),
            agrees,
        })
    } else {
        None
    };
    let dominating = if v == c.rank {
        Some(dominating_test(r, &c, &d)?.dominating)
    } else {
        None
    };
    let route = match d.route {
        DiscRoute::ClosedForm => "closed form",
        DiscRoute::TraceMatrixGcd => "trace-matrix gcd",
        DiscRoute::TensorProduct => "tensor product",
    };
    Ok(DiscReport {
        v,
        rank: c.rank,
        value: d.value.clone(),
        text,
        route: route.to_string(),
        scalar: d.scalar.as_ref().map(|s| s.to_string()),
        closed_form,
        dominating,
        ideal_generators: d.ideal_generators,
    })
}

fn run_weyl(cmd: &WeylCommand, json: bool) -> Result<String, CliError> {
    let ceiling = |large: bool| if large { WEYL_DEFAULT_MAX_ORDER + 1 } else { WEYL_DEFAULT_MAX_ORDER };
    match cmd {
        WeylCommand::Disc {
            n,
            exp,
            allow_large,
            descriptor,
        } => match (n, descriptor) {
            (Some(n), None) => {
                let d = weyl_disc_with(*n, *exp, ceiling(*allow_large))?;
                Ok(emit(json, &WeylDiscReport::new(*exp, &d), render::weyl_disc))
            }
            (None, Some(path)) => {
                let p = match parse_descriptor(&read(path)?)? {
                    Descriptor::Weyl(p) => p,
                    Descriptor::Skew(_) => return Err(precondition("expected a Weyl descriptor")),
                };
                let d = weyl_tensor_disc(&p)?;
                Ok(emit(json, &WeylTensorReport::from(&d), render::weyl_tensor))
            }
            _ => Err(precondition("give exactly one of --n or a Weyl descriptor")),
        },
        WeylCommand::Conjecture { n, exp, allow_large } => {
            let r = conjecture_check_with(*n, *exp, ceiling(*allow_large))?;
            Ok(emit(json, &ConjectureJson::new(*exp, &r), render::conjecture))
        }
        WeylCommand::Aut { descriptor } => {
            let p = match parse_descriptor(&read(descriptor)?)? {
                Descriptor::Weyl(p) => p,
                Descriptor::Skew(_) => return Err(precondition("expected a Weyl descriptor")),
            };
            let rep = weyl_aut_classify(&p)?;
            Ok(emit(json, &WeylAutJson::from(&rep), render::weyl_aut))
        }
    }
}
