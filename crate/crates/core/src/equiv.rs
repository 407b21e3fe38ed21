//! Equivalence and inclusion of KAT expressions by bisimulation.
//!
//! Starting from `({x}, {y})`, pairs of derivative states are explored
//! breadth first. A pair whose sides disagree on `ε` for some atom yields a
//! counterexample: the `(α, p)` labels on the path to it, closed by that atom.
//! Because exploration is breadth first, the counterexample has as few
//! letters as possible.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::deriv::{epsilon_set, pderiv_set, ExprSet};
use crate::semantics::{Atom, GuardedString};
use crate::syntax::{mk_plus, KatExpr, LetterId, Signature};

/// Default ceiling on explored pairs of derivative states.
pub const DEFAULT_MAX_STATES: usize = 100_000;

/// Which side of the comparison accepts a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    LeftOnly,
    RightOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    NotEqual { witness: GuardedString, side: Side },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }

    pub fn witness(&self) -> Option<&GuardedString> {
        match self {
            Verdict::Equal => None,
            Verdict::NotEqual { witness, .. } => Some(witness),
        }
    }
}

/// The search visited more pairs than allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateLimitExceeded {
    pub limit: usize,
}

impl fmt::Display for StateLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "state limit of {} exceeded", self.limit)
    }
}

impl core::error::Error for StateLimitExceeded {}

struct Node {
    left: ExprSet,
    right: ExprSet,
    parent: Option<(usize, Atom, LetterId)>,
}

/// Decides equivalence and inclusion over one signature.
#[derive(Clone, Copy, Debug)]
pub struct Checker<'s> {
    sig: &'s Signature,
    max_states: usize,
}

impl<'s> Checker<'s> {
    pub fn new(sig: &'s Signature) -> Self {
        Checker { sig, max_states: DEFAULT_MAX_STATES }
    }

    pub fn with_max_states(mut self, max_states: usize) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn signature(&self) -> &'s Signature {
        self.sig
    }

    pub fn max_states(&self) -> usize {
        self.max_states
    }

    /// Whether `G(x) = G(y)`, with a shortest counterexample otherwise.
    pub fn equivalent(&self, x: &KatExpr, y: &KatExpr) -> Result<Verdict, StateLimitExceeded> {
        let atoms: Vec<Atom> = self.sig.atoms().collect();
        let letters: Vec<LetterId> = self.sig.letters().collect();

        let root = Node {
            left: ExprSet::singleton(x.clone()),
            right: ExprSet::singleton(y.clone()),
            parent: None,
        };
        let mut visited: BTreeSet<(ExprSet, ExprSet)> = BTreeSet::new();
        visited.insert((root.left.clone(), root.right.clone()));
        let mut nodes = alloc::vec![root];

        // `nodes` doubles as the FIFO queue.
        let mut cursor = 0;
        while cursor < nodes.len() {
            let node = &nodes[cursor];
            for &alpha in &atoms {
                let in_left = epsilon_set(alpha, &node.left);
                if in_left != epsilon_set(alpha, &node.right) {
                    let witness = witness_to(&nodes, cursor, alpha);
                    let side = if in_left { Side::LeftOnly } else { Side::RightOnly };
                    return Ok(Verdict::NotEqual { witness, side });
                }
            }
            let mut successors = Vec::new();
            for &alpha in &atoms {
                for &p in &letters {
                    let left = pderiv_set(alpha, p, &node.left);
                    let right = pderiv_set(alpha, p, &node.right);
                    // Identical sides are trivially bisimilar.
                    if left == right {
                        continue;
                    }
                    let key = (left, right);
                    if visited.contains(&key) {
                        continue;
                    }
                    if visited.len() >= self.max_states {
                        return Err(StateLimitExceeded { limit: self.max_states });
                    }
                    visited.insert(key.clone());
                    successors.push(Node { left: key.0, right: key.1, parent: Some((cursor, alpha, p)) });
                }
            }
            nodes.extend(successors);
            cursor += 1;
        }
        Ok(Verdict::Equal)
    }

    /// Whether `G(x) ⊆ G(y)`, decided as `x + y = y`. A counterexample lies in
    /// `G(x) \ G(y)` and is reported as [`Side::LeftOnly`].
    pub fn included(&self, x: &KatExpr, y: &KatExpr) -> Result<Verdict, StateLimitExceeded> {
        self.equivalent(&mk_plus(x.clone(), y.clone()), y)
    }
}

fn witness_to(nodes: &[Node], mut at: usize, last: Atom) -> GuardedString {
    let mut steps = Vec::new();
    while let Some((parent, alpha, p)) = nodes[at].parent {
        steps.push((alpha, p));
        at = parent;
    }
    steps.reverse();
    GuardedString::new(steps, last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::gs_member;
    use crate::syntax::{mk_dot, mk_star, product, BoolExpr};

    fn sig() -> Signature {
        Signature::new(["a", "b"], ["p", "q"]).unwrap()
    }
    fn p() -> KatExpr {
        KatExpr::letter(0)
    }
    fn q() -> KatExpr {
        KatExpr::letter(1)
    }
    fn a() -> BoolExpr {
        BoolExpr::prim(0)
    }

    #[test]
    fn star_star() {
        let sig = sig();
        let c = Checker::new(&sig);
        let ps = mk_star(p());
        assert_eq!(c.equivalent(&mk_dot(ps.clone(), ps.clone()), &ps).unwrap(), Verdict::Equal);
    }

    #[test]
    fn guarded_loop_never_runs() {
        let sig = sig();
        let c = Checker::new(&sig);
        let lhs = mk_dot(KatExpr::test(a()), mk_star(mk_dot(KatExpr::test(!a()), p())));
        assert!(c.equivalent(&lhs, &KatExpr::test(a())).unwrap().is_equal());
    }

    #[test]
    fn distinct_letters_differ_after_one_letter() {
        let sig = sig();
        let c = Checker::new(&sig);
        let v = c.equivalent(&p(), &q()).unwrap();
        let Verdict::NotEqual { witness, side } = v else { panic!("expected a counterexample") };
        assert_eq!(witness.len(), 1);
        assert_eq!(side, Side::LeftOnly);
        assert!(gs_member(&witness, &p()) && !gs_member(&witness, &q()));
    }

    #[test]
    fn reflexive() {
        let sig = sig();
        let x = product([KatExpr::test(a()), mk_star(p()), q()]);
        assert!(Checker::new(&sig).equivalent(&x, &x).unwrap().is_equal());
    }

    #[test]
    fn inclusion() {
        let sig = sig();
        let c = Checker::new(&sig);
        let lhs = mk_star(mk_plus(p(), product([p(), p(), q()])));
        let rhs = mk_star(mk_plus(p(), mk_dot(p(), q())));
        assert!(c.included(&lhs, &rhs).unwrap().is_equal());
        assert!(c.included(&KatExpr::Zero, &p()).unwrap().is_equal());
        let v = c.included(&mk_star(p()), &p()).unwrap();
        let Verdict::NotEqual { witness, side } = v else { panic!("p* is not below p") };
        assert_eq!(side, Side::LeftOnly);
        assert_eq!(witness.len(), 0);
    }

    #[test]
    fn state_limit_is_reported() {
        let sig = sig();
        let lhs = mk_star(mk_plus(p(), q()));
        let rhs = mk_star(mk_dot(mk_star(p()), q()));
        assert_eq!(
            Checker::new(&sig).with_max_states(1).equivalent(&lhs, &mk_dot(rhs, mk_star(p()))),
            Err(StateLimitExceeded { limit: 1 })
        );
    }
}
