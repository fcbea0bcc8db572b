//! The `propiso` command line: argument parsing, execution and rendering.
//!
//! Exit codes: 0 for a positive answer (tautology, theorem, iso, verified
//! construction, oracle yes), 1 for a negative or unknown one, 2 for errors.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::canon::{ac_canonical, derive, is_theorem_nav, nnf, RewriteTrace};
use crate::construct::{
    decide_iso_boolean_capped, decide_iso_generality, lemma4_extract, lemma5_implant, lemma6_arrow, WitnessJson,
};
use crate::error::{Error, Result};
use crate::formula::{parse, Formula};
use crate::linking::{generalize, LinkEquivalence};
use crate::oracle::{oracle_theorem, oracle_witness_search, OracleAnswer};
use crate::semantics::{is_tautology_capped, lemma1_assignment, DEFAULT_LETTER_CAP};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// JSON schema of [`CliResult`].
pub const SCHEMA: &str = include_str!("../schema/cli-result.schema.json");

#[derive(Debug, Parser)]
#[command(name = "propiso", version, about = "Decide isomorphism of propositional formulas")]
pub struct Cli {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Refuse truth tables over more distinct letters than this.
    #[arg(long, global = true, default_value_t = DEFAULT_LETTER_CAP)]
    pub max_letters: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Notion {
    Generality,
    Boolean,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a formula is a tautology.
    Taut { formula: String },
    /// Negation normal form with the length of its rewrite trace.
    Nnf {
        formula: String,
        /// Also print the rewrite steps.
        #[arg(long)]
        trace: bool,
    },
    /// AC-canonical form of the negation normal form.
    Canon { formula: String },
    /// Rewrite trace from the first formula to the second.
    Derive { a: String, b: String },
    /// Decide isomorphism.
    Iso {
        #[arg(long, value_enum, default_value = "boolean")]
        notion: Notion,
        a: String,
        b: String,
        /// Include the witness (Boolean) or the trace and bijection (generality).
        #[arg(long)]
        witness: bool,
    },
    /// Relabel linked occurrence classes with fresh letters.
    Generalize {
        a: String,
        b: String,
        /// Blocks of occurrences such as "s0 t1 | s1 t0"; unlisted occurrences are singletons.
        #[arg(long)]
        links: String,
    },
    /// Run one of the constructions.
    ///
    /// 1: FORMULA SUBFORMULA; 4: FORMULA OCC; 5: FORMULA OCC LETTER;
    /// 6: A B OCC_A OCC_B. An occurrence is written `p` (first occurrence
    /// of p) or `p@i` (occurrence i, which must be a p).
    Lemma {
        #[arg(long, value_parser = ["1", "4", "5", "6"])]
        which: String,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Bounded rewrite search and exhaustive witness search.
    Oracle {
        a: String,
        b: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Also search for an isomorphism witness (negation-reduced inputs only).
        #[arg(long)]
        witness: bool,
    },
}

/// Machine-readable result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliResult {
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substitution: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CliResult {
    fn new(command: &str, inputs: &[&String]) -> Self {
        CliResult {
            command: command.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    fn with_trace(mut self, trace: &RewriteTrace, steps: bool) -> Self {
        self.trace_len = Some(trace.len());
        if steps {
            self.trace = Some(trace.steps.iter().map(ToString::to_string).collect());
        }
        self
    }

    /// Plain-text rendering: the headline value first, then labelled fields.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        if let Some(e) = &self.error {
            lines.push(format!("error: {e}"));
        }
        let headline = self.value.as_ref().or(self.verdict.as_ref()).or(self.canonical.as_ref());
        if let Some(h) = headline {
            lines.push(h.clone());
        }
        if self.value.is_some() {
            if let Some(v) = &self.verdict {
                lines.push(format!("verdict: {v}"));
            }
        }
        if let Some(c) = &self.canonical {
            if Some(c) != headline {
                lines.push(format!("canonical: {c}"));
            }
        }
        if let Some(r) = &self.reason {
            lines.push(format!("reason: {r}"));
        }
        if let Some(s) = &self.substitution {
            let shown: Vec<String> = s.iter().map(|(k, v)| format!("{k}={v}")).collect();
            lines.push(format!("substitution: {}", shown.join(", ")));
        }
        if let Some(r) = &self.relation {
            lines.push(format!("relation: {}", show_pairs(r)));
        }
        if let Some(n) = self.trace_len {
            lines.push(format!("trace length: {n}"));
        }
        if let Some(t) = &self.trace {
            lines.extend(t.iter().map(|s| format!("  {s}")));
        }
        if let Some(w) = &self.witness {
            lines.push(format!("f: {}", show_pairs(&w.f)));
            lines.push(format!("g: {}", show_pairs(&w.g)));
            lines.push(format!("g.f = id: {}", w.gf_is_identity));
            lines.push(format!("f.g = id: {}", w.fg_is_identity));
        }
        if let Some(v) = self.verified {
            lines.push(format!("verified: {v}"));
        }
        lines.join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn show_pairs(pairs: &[[usize; 2]]) -> String {
    let shown: Vec<String> = pairs.iter().map(|[s, t]| format!("({s},{t})")).collect();
    format!("{{{}}}", shown.join(","))
}

/// Parses `p` (first occurrence of `p`), `p@i` or a bare index `i`.
pub fn parse_occurrence(f: &Formula, text: &str) -> Result<usize> {
    let leaves = f.leaf_letters();
    let (letter, index) = match text.split_once('@') {
        Some((l, i)) => (Some(l), Some(i)),
        None if text.chars().all(|c| c.is_ascii_digit()) && !text.is_empty() => (None, Some(text)),
        None => (Some(text), None),
    };
    let index = match index {
        Some(i) => i
            .parse::<usize>()
            .map_err(|_| Error::Usage(format!("bad occurrence `{text}`")))?,
        None => {
            let l = letter.expect("one of the two is present");
            leaves
                .iter()
                .position(|p| *p == l)
                .ok_or_else(|| Error::AbsentLetter(l.to_string()))?
        }
    };
    let found = leaves.get(index).ok_or(Error::InvalidOccurrence {
        index,
        len: leaves.len(),
    })?;
    if let Some(l) = letter {
        if *found != l {
            return Err(Error::LetterMismatch {
                left: l.to_string(),
                right: found.to_string(),
            });
        }
    }
    Ok(index)
}

fn yes_no(b: bool) -> i32 {
    if b {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn run_command(cli: &Cli) -> Result<(CliResult, i32)> {
    let cap = cli.max_letters;
    Ok(match &cli.command {
        Command::Taut { formula } => {
            let f = parse(formula)?;
            let taut = is_tautology_capped(&f, cap)?;
            let mut r = CliResult::new("taut", &[formula]);
            r.verdict = Some(if taut { "tautology" } else { "not-tautology" }.into());
            (r, yes_no(taut))
        }
        Command::Nnf { formula, trace } => {
            let f = parse(formula)?;
            let (g, t) = nnf(&f);
            let mut r = CliResult::new("nnf", &[formula]).with_trace(&t, *trace);
            r.value = Some(g.to_string());
            (r, EXIT_YES)
        }
        Command::Canon { formula } => {
            let f = parse(formula)?;
            let mut r = CliResult::new("canon", &[formula]);
            r.canonical = Some(ac_canonical(&f).to_string());
            (r, EXIT_YES)
        }
        Command::Derive { a, b } => {
            let (fa, fb) = (parse(a)?, parse(b)?);
            let mut r = CliResult::new("derive", &[a, b]);
            if is_theorem_nav(&fa, &fb)? {
                let t = derive(&fa, &fb)?;
                r = r.with_trace(&t, true);
                r.verdict = Some("theorem".into());
                r.canonical = Some(ac_canonical(&fa).to_string());
                (r, EXIT_YES)
            } else {
                r.verdict = Some("not-theorem".into());
                r.reason = Some(format!(
                    "canonical forms differ: {} vs {}",
                    ac_canonical(&fa),
                    ac_canonical(&fb)
                ));
                (r, EXIT_NO)
            }
        }
        Command::Iso { notion, a, b, witness } => {
            let (fa, fb) = (parse(a)?, parse(b)?);
            let mut r = CliResult::new("iso", &[a, b]);
            let iso = match notion {
                Notion::Boolean => {
                    let v = decide_iso_boolean_capped(&fa, &fb, cap)?;
                    r.reason = Some(v.reason.to_string());
                    if *witness {
                        r.witness = v.witness.as_ref().map(|w| w.to_json());
                    }
                    v.iso
                }
                Notion::Generality => {
                    let v = decide_iso_generality(&fa, &fb)?;
                    r.reason = Some(v.reason.clone());
                    r.canonical = Some(ac_canonical(&fa).to_string());
                    if let Some(t) = &v.trace {
                        r = r.with_trace(t, *witness);
                    }
                    if *witness {
                        r.relation = v.bijection.as_ref().map(|h| h.pairs());
                    }
                    v.iso
                }
            };
            r.verdict = Some(if iso { "iso" } else { "not-iso" }.into());
            (r, yes_no(iso))
        }
        Command::Generalize { a, b, links } => {
            let (fa, fb) = (parse(a)?, parse(b)?);
            let l = LinkEquivalence::parse(links, fa.size(), fb.size())?;
            let g = generalize(&fa, &fb, &l)?;
            let mut r = CliResult::new("generalize", &[a, b, links]);
            r.value = Some(format!("{} -> {}", g.source, g.target));
            r.substitution = Some(g.substitution);
            (r, EXIT_YES)
        }
        Command::Lemma { which, args } => run_lemma(which, args)?,
        Command::Oracle { a, b, depth, witness } => {
            let (fa, fb) = (parse(a)?, parse(b)?);
            let answer = oracle_theorem(&fa, &fb, *depth)?;
            let mut r = CliResult::new("oracle", &[a, b]);
            r.verdict = Some(match answer {
                OracleAnswer::Yes => "yes".into(),
                OracleAnswer::Unknown => "unknown".into(),
            });
            if *witness {
                match oracle_witness_search(&fa, &fb)? {
                    Some((bij, w)) => {
                        r.reason = Some("witness found".into());
                        r.relation = Some(bij.iter().map(|&(x, y)| [x, y]).collect());
                        r.witness = Some(w.to_json());
                    }
                    None => r.reason = Some("no bijection yields a witness".into()),
                }
            }
            (r, yes_no(answer == OracleAnswer::Yes))
        }
    })
}

fn expect_args<'a>(which: &str, args: &'a [String], n: usize) -> Result<&'a [String]> {
    if args.len() != n {
        return Err(Error::Usage(format!(
            "lemma {which} takes {n} arguments, got {}",
            args.len()
        )));
    }
    Ok(args)
}

fn run_lemma(which: &str, args: &[String]) -> Result<(CliResult, i32)> {
    let mut r = CliResult {
        command: format!("lemma {which}"),
        inputs: args.to_vec(),
        ..Default::default()
    };
    let verified = match which {
        "1" => {
            let args = expect_args(which, args, 2)?;
            let (a, sub) = (parse(&args[0])?, parse(&args[1])?);
            let path = a
                .find_subformula(&sub)
                .ok_or_else(|| Error::InvalidPath(format!("`{sub}` is not a subformula of `{a}`")))?;
            let assignment = lemma1_assignment(&a, &path)?;
            let shown: Vec<String> = assignment.iter().map(|(p, c)| format!("{p}={c}")).collect();
            r.value = Some(shown.join(", "));
            // the assignment is checked against the subformula before it is returned
            true
        }
        "4" => {
            let args = expect_args(which, args, 2)?;
            let a = parse(&args[0])?;
            let x = parse_occurrence(&a, &args[1])?;
            let l = lemma4_extract(&a, x)?;
            r.value = Some(l.target.to_string());
            r.relation = Some(l.tau.pairs());
            l.verified
        }
        "5" => {
            let args = expect_args(which, args, 3)?;
            let b = parse(&args[0])?;
            let y = parse_occurrence(&b, &args[1])?;
            let l = lemma5_implant(&b, y, &args[2])?;
            r.value = Some(format!("{} -> {}", l.source, l.b_prime));
            r.relation = Some(l.eta.pairs());
            l.verified
        }
        "6" => {
            let args = expect_args(which, args, 4)?;
            let (a, b) = (parse(&args[0])?, parse(&args[1])?);
            let x = parse_occurrence(&a, &args[2])?;
            let y = parse_occurrence(&b, &args[3])?;
            let f = lemma6_arrow(&a, &b, x, y)?;
            r.value = Some(f.to_string());
            r.relation = Some(f.pairs());
            f.pairs() == vec![[x, y]]
        }
        _ => return Err(Error::Usage(format!("no construction numbered {which}"))),
    };
    r.verified = Some(verified);
    Ok((r, yes_no(verified)))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Taut { .. } => "taut",
        Command::Nnf { .. } => "nnf",
        Command::Canon { .. } => "canon",
        Command::Derive { .. } => "derive",
        Command::Iso { .. } => "iso",
        Command::Generalize { .. } => "generalize",
        Command::Lemma { .. } => "lemma",
        Command::Oracle { .. } => "oracle",
    }
}

/// Runs a parsed invocation; errors become a result with exit code 2.
pub fn execute(cli: &Cli) -> (CliResult, i32) {
    run_command(cli).unwrap_or_else(|e| {
        let r = CliResult {
            command: command_name(&cli.command).to_string(),
            error: Some(e.to_string()),
            ..Default::default()
        };
        (r, EXIT_ERROR)
    })
}

/// Output of one invocation: what goes to stdout and stderr, and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_ERROR,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_YES,
                }
            };
        }
    };
    let (result, code) = execute(&cli);
    let mut stderr = String::new();
    if let Some(e) = &result.error {
        stderr = format!("error: {e}\n");
    }
    let stdout = if cli.json {
        result.to_json() + "\n"
    } else if result.error.is_some() {
        String::new()
    } else {
        result.to_text() + "\n"
    };
    Output { stdout, stderr, code }
}
