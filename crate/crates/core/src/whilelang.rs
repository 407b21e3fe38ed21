//! `while` programs over uninterpreted actions, their KAT embedding, and
//! partial-correctness Hoare triples.
//!
//! Actions are letters of the signature and conditions are tests. Facts about
//! what an action does (for instance that an assignment makes a condition
//! hold) are supplied as hypotheses.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::equiv::{Checker, StateLimitExceeded};
use crate::hyp::{hkat_check, Equation, HkatOutcome};
use crate::syntax::{mk_dot, mk_plus, mk_star, BoolExpr, KatExpr, LetterId};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prog {
    Skip,
    Act(LetterId),
    Seq(Box<Prog>, Box<Prog>),
    Ite(BoolExpr, Box<Prog>, Box<Prog>),
    While(BoolExpr, Box<Prog>),
}

impl Prog {
    pub fn act(p: u32) -> Self {
        Prog::Act(LetterId(p))
    }

    pub fn seq(p: Prog, q: Prog) -> Self {
        Prog::Seq(Box::new(p), Box::new(q))
    }

    pub fn ite(b: BoolExpr, p: Prog, q: Prog) -> Self {
        Prog::Ite(b, Box::new(p), Box::new(q))
    }

    pub fn whl(b: BoolExpr, p: Prog) -> Self {
        Prog::While(b, Box::new(p))
    }
}

/// The KAT term of a program: `skip ↦ 1`, `if b then p else q ↦ [b]p + [¬b]q`,
/// `while b do p ↦ ([b]p)*[¬b]`.
pub fn embed(p: &Prog) -> KatExpr {
    match p {
        Prog::Skip => KatExpr::One,
        Prog::Act(a) => KatExpr::Letter(*a),
        Prog::Seq(p, q) => mk_dot(embed(p), embed(q)),
        Prog::Ite(b, p, q) => mk_plus(
            mk_dot(KatExpr::Test(b.clone()), embed(p)),
            mk_dot(KatExpr::Test(!b.clone()), embed(q)),
        ),
        Prog::While(b, p) => mk_dot(
            mk_star(mk_dot(KatExpr::Test(b.clone()), embed(p))),
            KatExpr::Test(!b.clone()),
        ),
    }
}

/// Program equivalence `p ~ q` under hypotheses.
pub fn prog_equiv(checker: &Checker<'_>, p: &Prog, q: &Prog, hyps: &[Equation]) -> Result<HkatOutcome, StateLimitExceeded> {
    hkat_check(checker, &Equation::eq(embed(p), embed(q)), hyps)
}

/// `{pre} prog {post}`: every terminating run from `pre` ends in `post`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoareTriple {
    pub pre: BoolExpr,
    pub prog: Prog,
    pub post: BoolExpr,
}

impl HoareTriple {
    pub fn new(pre: BoolExpr, prog: Prog, post: BoolExpr) -> Self {
        HoareTriple { pre, prog, post }
    }
}

/// `[pre] p [¬post] = 0`.
pub fn hoare_encode(t: &HoareTriple) -> Equation {
    let lhs = mk_dot(KatExpr::Test(t.pre.clone()), mk_dot(embed(&t.prog), KatExpr::Test(!t.post.clone())));
    Equation::eq(lhs, KatExpr::Zero)
}

/// Checks that `goal` follows from the premises and any extra hypotheses.
pub fn hoare_check(
    checker: &Checker<'_>,
    premises: &[HoareTriple],
    extra_hyps: &[Equation],
    goal: &HoareTriple,
) -> Result<HkatOutcome, StateLimitExceeded> {
    let hyps: Vec<Equation> = premises.iter().map(hoare_encode).chain(extra_hyps.iter().cloned()).collect();
    hkat_check(checker, &hoare_encode(goal), &hyps)
}
