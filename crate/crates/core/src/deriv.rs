//! Observations and derivatives of KAT expressions.
//!
//! `epsilon(α, x)` says whether `x` accepts the lone atom `α`; `delta` and
//! `pderiv` give what remains of `x` after reading `α p`. Partial derivatives
//! return a set of terms (read as their sum), which keeps the reachable state
//! space finite.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::equiv::StateLimitExceeded;
use crate::semantics::{atom_satisfies, Atom};
use crate::syntax::{mk_dot, mk_plus, sum, KatExpr, LetterId, Signature};

/// A duplicate-free, canonically sorted set of expressions, denoting their sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExprSet(Vec<KatExpr>);

impl ExprSet {
    pub fn empty() -> Self {
        ExprSet(Vec::new())
    }

    pub fn singleton(x: KatExpr) -> Self {
        ExprSet(alloc::vec![x])
    }

    pub fn from_vec(mut elems: Vec<KatExpr>) -> Self {
        elems.sort();
        elems.dedup();
        ExprSet(elems)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, KatExpr> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[KatExpr] {
        &self.0
    }

    /// The sum of the members (`0` for the empty set).
    pub fn to_expr(&self) -> KatExpr {
        sum(self.0.iter().cloned())
    }
}

impl FromIterator<KatExpr> for ExprSet {
    fn from_iter<I: IntoIterator<Item = KatExpr>>(iter: I) -> Self {
        ExprSet::from_vec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ExprSet {
    type Item = &'a KatExpr;
    type IntoIter = core::slice::Iter<'a, KatExpr>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Whether `x` accepts the single-atom guarded string `alpha`.
pub fn epsilon(alpha: Atom, x: &KatExpr) -> bool {
    match x {
        KatExpr::Plus(x, y) => epsilon(alpha, x) || epsilon(alpha, y),
        KatExpr::Dot(x, y) => epsilon(alpha, x) && epsilon(alpha, y),
        KatExpr::Star(_) | KatExpr::One => true,
        KatExpr::Letter(_) | KatExpr::Zero => false,
        KatExpr::Test(a) => atom_satisfies(alpha, a),
    }
}

/// Brzozowski-style derivative with respect to `alpha p`, as a single term.
pub fn delta(alpha: Atom, p: LetterId, x: &KatExpr) -> KatExpr {
    match x {
        KatExpr::Plus(x, y) => mk_plus(delta(alpha, p, x), delta(alpha, p, y)),
        KatExpr::Dot(x, y) => {
            let head = mk_dot(delta(alpha, p, x), (**y).clone());
            if epsilon(alpha, x) {
                mk_plus(head, delta(alpha, p, y))
            } else {
                head
            }
        }
        KatExpr::Star(inner) => mk_dot(delta(alpha, p, inner), x.clone()),
        KatExpr::Letter(q) if *q == p => KatExpr::One,
        KatExpr::Letter(_) | KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => KatExpr::Zero,
    }
}

/// Antimirov-style partial derivative with respect to `alpha p`.
pub fn pderiv(alpha: Atom, p: LetterId, x: &KatExpr) -> ExprSet {
    let mut out = Vec::new();
    pderiv_into(alpha, p, x, &mut out);
    ExprSet::from_vec(out)
}

fn pderiv_into(alpha: Atom, p: LetterId, x: &KatExpr, out: &mut Vec<KatExpr>) {
    match x {
        KatExpr::Plus(x, y) => {
            pderiv_into(alpha, p, x, out);
            pderiv_into(alpha, p, y, out);
        }
        KatExpr::Dot(x, y) => {
            let start = out.len();
            pderiv_into(alpha, p, x, out);
            for e in &mut out[start..] {
                *e = mk_dot(core::mem::replace(e, KatExpr::Zero), (**y).clone());
            }
            if epsilon(alpha, x) {
                pderiv_into(alpha, p, y, out);
            }
        }
        KatExpr::Star(inner) => {
            let start = out.len();
            pderiv_into(alpha, p, inner, out);
            for e in &mut out[start..] {
                *e = mk_dot(core::mem::replace(e, KatExpr::Zero), x.clone());
            }
        }
        KatExpr::Letter(q) if *q == p => out.push(KatExpr::One),
        KatExpr::Letter(_) | KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => {}
    }
}

/// Union of the partial derivatives of the members of `set`.
pub fn pderiv_set(alpha: Atom, p: LetterId, set: &ExprSet) -> ExprSet {
    let mut out = Vec::new();
    for x in set {
        pderiv_into(alpha, p, x, &mut out);
    }
    ExprSet::from_vec(out)
}

/// Whether some member of `set` accepts `alpha`.
pub fn epsilon_set(alpha: Atom, set: &ExprSet) -> bool {
    set.iter().any(|x| epsilon(alpha, x))
}

/// Counts the derivative states reachable from `{x}` under all `(α, p)`,
/// failing once more than `ceiling` states have been seen.
pub fn reachable_states(sig: &Signature, x: &KatExpr, ceiling: usize) -> Result<usize, StateLimitExceeded> {
    let start = ExprSet::singleton(x.clone());
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut todo = alloc::vec![start];
    while let Some(set) = todo.pop() {
        for alpha in sig.atoms() {
            for p in sig.letters() {
                let next = pderiv_set(alpha, p, &set);
                if !seen.contains(&next) {
                    if seen.len() >= ceiling {
                        return Err(StateLimitExceeded { limit: ceiling });
                    }
                    seen.insert(next.clone());
                    todo.push(next);
                }
            }
        }
    }
    Ok(seen.len())
}
