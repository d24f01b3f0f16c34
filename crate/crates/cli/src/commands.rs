//! The subcommands as pure functions from parsed inputs to reports and exit codes.

use posetrep_core::analysis::classify;
use posetrep_core::filter::{build_representation, first_inseparable_pair, is_representable, verify_embedding};
use posetrep_core::game::{Game, GamePosition, SurvivalDepth};
use posetrep_core::logic::{build_psi, emit_tptp, evaluate, Assignment};
use posetrep_core::{Params, Poset};
use serde_json::Value;

use crate::render::{representation_json, representation_lines, trace_json, trace_lines, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

/// Largest round count and carrier size for evaluating axioms directly.
pub const ENVELOPE_ROUNDS: usize = 3;
pub const ENVELOPE_SIZE: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: crate::format::ParseError,
    },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] posetrep_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Report,
}

fn element(p: &Poset, name: &str) -> Result<usize, CliError> {
    p.index_of(name)
        .ok_or_else(|| CliError::Usage(format!("unknown element {name:?}")))
}

/// Decides representability by filters and cross-checks with the game.
pub fn check(p: &Poset, prm: Params) -> Result<Outcome, CliError> {
    let representable = is_representable(p, prm)?;
    let agrees = Game::new(p, prm).is_representable() == representable;
    let mut report = Report::new();
    report.field("params", prm.to_string());
    report.field("representable", representable);
    report.field("game_agrees", agrees);
    let code = match (agrees, representable) {
        (false, _) => EXIT_DISAGREEMENT,
        (true, false) => EXIT_NEGATIVE,
        (true, true) => EXIT_OK,
    };
    Ok(Outcome { code, report })
}

/// Survival depth from `({p}, {q})`, a forcing play when it is finite, and
/// optionally whether `∃` survives `rounds` rounds.
pub fn game(p: &Poset, a: &str, b: &str, prm: Params, rounds: Option<usize>) -> Result<Outcome, CliError> {
    let (x, y) = (element(p, a)?, element(p, b)?);
    if p.leq(x, y) {
        return Err(CliError::Usage(format!("{a} <= {b}: the game needs p !<= q")));
    }
    let game = Game::new(p, prm);
    let start = GamePosition::start(x, y);
    let mut report = Report::new();
    report.field("params", prm.to_string());
    match game.survival_depth(start) {
        SurvivalDepth::Omega => report.field("depth", "omega"),
        SurvivalDepth::Rounds(d) => report.field("depth", d),
        SurvivalDepth::Lost => report.field("depth", "lost"),
    }
    if let Some(n) = rounds {
        report.field(&format!("strategy_{n}"), game.has_n_strategy(start, n));
    }
    if let Some(trace) = game.forcing_trace(start) {
        for line in trace_lines(p, &trace) {
            report.text_line(line);
        }
        report.json_member("trace", trace_json(p, &trace));
    }
    Ok(Outcome { code: EXIT_OK, report })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Syntax {
    Tptp,
    Sexp,
}

/// `ψ_{rs0} … ψ_{rsn}`, one sentence per line.
pub fn axioms(r: usize, s: usize, n: usize, syntax: Syntax) -> Result<Outcome, CliError> {
    let mut report = Report::new();
    for k in 0..=n {
        let name = format!("psi_{r}_{s}_{k}");
        let psi = build_psi(r, s, k)?;
        match syntax {
            Syntax::Tptp => {
                let text = emit_tptp(&psi, &name)?;
                report.text_line(text.clone());
                report.json_member(&name, Value::from(text));
            }
            Syntax::Sexp => report.field(&name, psi.to_string()),
        }
    }
    Ok(Outcome { code: EXIT_OK, report })
}

/// Truth of `ψ_{rsk}` for `k = 0 ..= n`, by evaluation or through the game.
pub fn eval(p: &Poset, r: usize, s: usize, n: usize, via_game: bool) -> Result<Outcome, CliError> {
    if r == 0 || s == 0 {
        return Err(posetrep_core::Error::ZeroArity.into());
    }
    if !via_game && (n > ENVELOPE_ROUNDS || p.len() > ENVELOPE_SIZE) {
        return Err(CliError::Usage(format!(
            "direct evaluation is limited to n <= {ENVELOPE_ROUNDS} and at most {ENVELOPE_SIZE} elements; pass --via-game"
        )));
    }
    let game = Game::new(p, Params::finite(r as u32 + 1, s as u32 + 1));
    let mut report = Report::new();
    let mut all = true;
    for k in 0..=n {
        let holds = if via_game {
            game.all_pairs_n_strategy(k)
        } else {
            evaluate(p, &build_psi(r, s, k)?, &Assignment::new())?
        };
        all &= holds;
        report.field(&format!("psi_{r}_{s}_{k}"), holds);
    }
    Ok(Outcome { code: if all { EXIT_OK } else { EXIT_NEGATIVE }, report })
}

/// A separating filter family and its embedding, or a pair no filter separates.
pub fn represent(p: &Poset, prm: Params) -> Result<Outcome, CliError> {
    let mut report = Report::new();
    match build_representation(p, prm)? {
        Some(rep) => {
            for line in representation_lines(p, &rep) {
                report.text_line(line);
            }
            let (filters, h) = representation_json(p, &rep);
            report.json_member("filters", filters);
            report.json_member("h", h);
            let verified = verify_embedding(p, &rep, prm);
            report.field("verified", verified);
            Ok(Outcome { code: if verified { EXIT_OK } else { EXIT_DISAGREEMENT }, report })
        }
        None => {
            let (a, b) = first_inseparable_pair(p, prm)?.expect("no representation means an inseparable pair");
            let (a, b) = (p.name(a), p.name(b));
            report.text_line(format!("not representable; witness pair: {a} !<= {b}"));
            report.json_member("representable", Value::Bool(false));
            report.json_member("witness", serde_json::json!([a, b]));
            Ok(Outcome { code: EXIT_NEGATIVE, report })
        }
    }
}

pub fn analyze(p: &Poset) -> Outcome {
    let c = classify(p);
    let mut report = Report::new();
    report.field("is_meet_semilattice", c.is_meet_semilattice);
    report.field("is_join_semilattice", c.is_join_semilattice);
    report.field("is_lattice", c.is_lattice);
    for (k, holds) in &c.k_distributive_up_to {
        report.field(&format!("k_distributive_{k}"), *holds);
    }
    report.field("distributive", c.is_distributive_lattice);
    Outcome { code: EXIT_OK, report }
}
