//! Checking one goal file and rendering the report.

use std::fmt::Write;

use katdec_core::hyp::{reduce, Comparison, Equation, HkatOutcome};
use katdec_core::semantics::{bound_fits, bounded_language};
use katdec_core::syntax::DEFAULT_ATOM_LIMIT;
use katdec_core::whilelang::{embed, hoare_check, hoare_encode, prog_equiv};
use katdec_core::{hyp::hkat_check, Checker, Side, Verdict, DEFAULT_MAX_STATES};

use crate::goal::{GoalFile, Show};
use crate::parser::{parse_equation, parse_goal};
use crate::printer;

#[derive(Clone, Debug)]
pub struct Options {
    pub max_states: usize,
    pub atom_limit: usize,
    /// Compare bounded languages up to this many letters instead of running
    /// the decision procedure.
    pub oracle_bound: Option<usize>,
    /// Extra hypotheses, parsed against the goal's signature.
    pub hypotheses: Vec<String>,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_states: DEFAULT_MAX_STATES, atom_limit: DEFAULT_ATOM_LIMIT, oracle_bound: None, hypotheses: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Proved,
    NotProved,
    Error,
    ResourceLimit,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Proved => 0,
            Status::NotProved => 1,
            Status::Error => 2,
            Status::ResourceLimit => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and checks one goal file. `name` labels every output line.
pub fn run_source(name: &str, src: &str, opts: &Options) -> Report {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let status = check(name, src, opts, &mut stdout, &mut stderr);
    Report { status, stdout, stderr }
}

fn check(name: &str, src: &str, opts: &Options, out: &mut String, err: &mut String) -> Status {
    let goal = match parse_goal(src, opts.atom_limit) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "{name}:{e}");
            return Status::Error;
        }
    };
    let sig = &goal.signature;
    let mut hyps = goal.hypotheses();
    for h in &opts.hypotheses {
        match parse_equation(sig, h) {
            Ok(e) => hyps.push(e),
            Err(e) => {
                let _ = writeln!(err, "{name}: in -H `{h}`: {e}");
                return Status::Error;
            }
        }
    }

    if let Some(bound) = opts.oracle_bound {
        return oracle(name, &goal, &hyps, bound, out, err);
    }

    let checker = Checker::new(sig).with_max_states(opts.max_states);
    let result = match &goal.show {
        Show::Equation(e) => hkat_check(&checker, e, &hyps),
        Show::ProgEquiv(p, q) => prog_equiv(&checker, p, q, &hyps),
        // Triple premises are already encoded in `hyps`.
        Show::Triple(t) => hoare_check(&checker, &[], &hyps, t),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(limit) => {
            let _ = writeln!(out, "{name}: gave up: {limit}");
            return Status::ResourceLimit;
        }
    };
    warn_unsupported(name, &goal, &outcome.unsupported, err);
    report(name, &goal, &outcome, out)
}

fn warn_unsupported(name: &str, goal: &GoalFile, unsupported: &[Equation], err: &mut String) {
    if unsupported.is_empty() {
        return;
    }
    let _ = writeln!(err, "{name}: warning: {} hypothesis(es) fit no supported shape and were ignored:", unsupported.len());
    for e in unsupported {
        let _ = writeln!(err, "    {}", printer::equation(&goal.signature, e));
    }
}

fn report(name: &str, goal: &GoalFile, outcome: &HkatOutcome, out: &mut String) -> Status {
    match &outcome.verdict {
        Verdict::Equal => {
            let _ = writeln!(out, "{name}: proved");
            Status::Proved
        }
        Verdict::NotEqual { witness, side } => {
            let _ = writeln!(out, "{name}: not proved");
            if outcome.eliminated > 0 {
                let _ = writeln!(
                    out,
                    "    no counterexample shown: hypotheses were eliminated, so one would describe the transformed goal"
                );
            } else {
                let where_ = match (goal_relation(&goal.show), side) {
                    (Comparison::Le, _) => "in the left side but not the right",
                    (Comparison::Eq, Side::LeftOnly) => "in the left side only",
                    (Comparison::Eq, Side::RightOnly) => "in the right side only",
                };
                let _ = writeln!(out, "    counterexample ({where_}): {}", printer::guarded_string(&goal.signature, witness));
            }
            Status::NotProved
        }
    }
}

fn goal_relation(show: &Show) -> Comparison {
    match show {
        Show::Equation(e) => e.relation,
        Show::ProgEquiv(..) | Show::Triple(_) => Comparison::Eq,
    }
}

fn goal_equation(show: &Show) -> Equation {
    match show {
        Show::Equation(e) => e.clone(),
        Show::ProgEquiv(p, q) => Equation::eq(embed(p), embed(q)),
        Show::Triple(t) => hoare_encode(t),
    }
}

fn oracle(name: &str, goal: &GoalFile, hyps: &[Equation], bound: usize, out: &mut String, err: &mut String) -> Status {
    let sig = &goal.signature;
    if !bound_fits(sig, bound) {
        let _ = writeln!(err, "{name}: oracle bound {bound} is too large for this signature");
        return Status::Error;
    }
    let reduced = reduce(sig, &goal_equation(&goal.show), hyps);
    warn_unsupported(name, goal, &reduced.unsupported, err);
    let lhs = bounded_language(sig, &reduced.goal.lhs, bound);
    let rhs = bounded_language(sig, &reduced.goal.rhs, bound);
    match lhs.first_difference(&rhs) {
        None => {
            let _ = writeln!(out, "{name}: equal on guarded strings with at most {bound} letters (oracle)");
            Status::Proved
        }
        Some(u) => {
            let _ = writeln!(out, "{name}: not equal (oracle)");
            if reduced.eliminated > 0 {
                let _ = writeln!(out, "    difference in the transformed goal: {}", printer::guarded_string(sig, &u));
            } else {
                let _ = writeln!(out, "    counterexample: {}", printer::guarded_string(sig, &u));
            }
            Status::NotProved
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(src: &str) -> Report {
        run_source("goal", src, &Options::default())
    }

    #[test]
    fn law_is_proved() {
        let r = run("tests; actions p q; show (p+q)* == p*;(q;p*)*");
        assert_eq!(r.status, Status::Proved, "{}{}", r.stdout, r.stderr);
    }

    #[test]
    fn distinct_letters_give_a_witness() {
        let r = run("tests; actions p q; show p == q");
        assert_eq!(r.status, Status::NotProved);
        assert!(r.stdout.contains("counterexample (in the left side only): {} p {}"), "{}", r.stdout);
    }

    #[test]
    fn malformed() {
        let r = run("tests; actions p q; show p ==");
        assert_eq!(r.status, Status::Error);
        assert!(r.stderr.starts_with("goal:1:30:"), "{}", r.stderr);
    }

    #[test]
    fn resource_limit() {
        let opts = Options { max_states: 1, ..Options::default() };
        let r = run_source("goal", "tests; actions p q; show (p+q)* == (p*;q)*;p*", &opts);
        assert_eq!(r.status, Status::ResourceLimit);
    }

    #[test]
    fn hypotheses_suppress_witness_and_warn() {
        let r = run("tests a; actions p q; assume p;q == q;p\nassume [a];p == [a]\nshow [a];p;q == q");
        assert_eq!(r.status, Status::NotProved);
        assert!(r.stdout.contains("no counterexample shown"));
        assert!(r.stderr.contains("p;q == q;p"), "{}", r.stderr);
    }

    #[test]
    fn inline_hypothesis() {
        let opts = Options { hypotheses: vec!["[a];p == [a]".into()], ..Options::default() };
        let r = run_source("goal", "tests a; actions p q; show [a];p;q == [a];q", &opts);
        assert_eq!(r.status, Status::Proved);
    }

    #[test]
    fn oracle_mode() {
        let opts = Options { oracle_bound: Some(4), ..Options::default() };
        let r = run_source("goal", "tests a; actions p; show p*;p* == p*", &opts);
        assert_eq!(r.status, Status::Proved);
        let r = run_source("goal", "tests a; actions p; show p*;p == p*", &opts);
        assert_eq!(r.status, Status::NotProved);
        assert!(r.stdout.contains("counterexample: {a}") || r.stdout.contains("counterexample: {!a}"), "{}", r.stdout);
    }
}
