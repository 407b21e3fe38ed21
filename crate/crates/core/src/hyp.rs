//! Elimination of hypotheses of the five reducible shapes:
//!
//! 1. `x = 0`
//! 2. `[a]x = x[b]`, `[a]x ≤ x[b]` or `x[b] ≤ [a]x`
//! 3. `x ≤ [a]x` or `x ≤ x[a]`
//! 4. `a = b` or `a ≤ b`
//! 5. `[a]p = [a]` or `p[a] = [a]` for a letter `p`
//!
//! Shapes 1–4 are turned into terms known to be `0`, summed into a single
//! `z`, and eliminated by comparing `x + uzu` with `y + uzu` where `u = Σ*`.
//! Shape 5 is eliminated by substituting `[¬a]p + [a]` (resp. `p[¬a] + [a]`)
//! for `p`. Anything else is reported as unsupported and left unused.

use alloc::vec::Vec;
use core::fmt;

use crate::equiv::{Checker, StateLimitExceeded, Verdict};
use crate::syntax::{mk_dot, mk_plus, mk_star, product, sum, BoolExpr, KatExpr, LetterId, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    /// `lhs = rhs`
    Eq,
    /// `lhs ≤ rhs`
    Le,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: KatExpr,
    pub rhs: KatExpr,
    pub relation: Comparison,
}

impl Equation {
    pub fn eq(lhs: KatExpr, rhs: KatExpr) -> Self {
        Equation { lhs, rhs, relation: Comparison::Eq }
    }

    pub fn le(lhs: KatExpr, rhs: KatExpr) -> Self {
        Equation { lhs, rhs, relation: Comparison::Le }
    }

    /// `x ≤ y` becomes `x + y = y`; equalities are returned unchanged.
    pub fn to_equality(&self) -> Equation {
        match self.relation {
            Comparison::Eq => self.clone(),
            Comparison::Le => Equation::eq(mk_plus(self.lhs.clone(), self.rhs.clone()), self.rhs.clone()),
        }
    }
}

/// Which of `[a]x = x[b]`, `[a]x ≤ x[b]`, `x[b] ≤ [a]x` a commutation is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommuteVariant {
    Eq,
    Le,
    Ge,
}

/// Side of the body a guard sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GuardSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// `z = 0`
    HoareZero(KatExpr),
    /// `[pre] body ∼ body [post]`
    GuardCommute { pre: BoolExpr, body: KatExpr, post: BoolExpr, variant: CommuteVariant },
    /// `body ≤ [guard] body` (left) or `body ≤ body [guard]` (right)
    GuardAbsorb { body: KatExpr, guard: BoolExpr, side: GuardSide },
    /// `[lhs] = [rhs]` or `[lhs] ≤ [rhs]`
    BoolRel { lhs: BoolExpr, rhs: BoolExpr, relation: Comparison },
    /// `[guard] p = [guard]` (left) or `p [guard] = [guard]` (right)
    LetterAbsorb { guard: BoolExpr, letter: LetterId, side: GuardSide },
    Unsupported(Equation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisError {
    /// Only shapes 1–4 have a Hoare form.
    NoHoareForm(Hypothesis),
}

impl fmt::Display for HypothesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisError::NoHoareForm(Hypothesis::Unsupported(_)) => {
                f.write_str("unsupported hypothesis has no Hoare form")
            }
            HypothesisError::NoHoareForm(_) => {
                f.write_str("letter-absorption hypotheses are eliminated by substitution, not as Hoare equations")
            }
        }
    }
}

impl core::error::Error for HypothesisError {}

fn test(a: BoolExpr) -> KatExpr {
    KatExpr::Test(a)
}

/// Reads a term as a test: `[a]`, with `1` and `0` standing for `[⊤]` and `[⊥]`.
fn as_test(x: &KatExpr) -> Option<BoolExpr> {
    match x {
        KatExpr::Test(a) => Some(a.clone()),
        KatExpr::One => Some(BoolExpr::Top),
        KatExpr::Zero => Some(BoolExpr::Bot),
        _ => None,
    }
}

/// `[a] x` split into `(a, x)`.
fn leading_test(x: &KatExpr) -> Option<(BoolExpr, KatExpr)> {
    match x {
        KatExpr::Dot(head, rest) => match &**head {
            KatExpr::Test(a) => Some((a.clone(), (**rest).clone())),
            _ => None,
        },
        _ => None,
    }
}

/// `x [b]` split into `(x, b)`.
fn trailing_test(x: &KatExpr) -> Option<(KatExpr, BoolExpr)> {
    let mut factors = x.factors();
    if factors.len() < 2 {
        return None;
    }
    let KatExpr::Test(b) = factors.pop()? else { return None };
    Some((product(factors.into_iter().cloned()), b.clone()))
}

/// Matches `[a] x` against `x' [b]` with `x = x'`.
fn commutation(guarded_left: &KatExpr, guarded_right: &KatExpr) -> Option<(BoolExpr, KatExpr, BoolExpr)> {
    let (pre, body) = leading_test(guarded_left)?;
    let (body2, post) = trailing_test(guarded_right)?;
    (body == body2).then_some((pre, body, post))
}

/// Matches `[a] p` (left) or `p [a]` (right) against `[a]`.
fn letter_absorb(prod: &KatExpr, guard: &KatExpr) -> Option<(BoolExpr, LetterId, GuardSide)> {
    let KatExpr::Test(a) = guard else { return None };
    let KatExpr::Dot(x, y) = prod else { return None };
    match (&**x, &**y) {
        (KatExpr::Test(b), KatExpr::Letter(p)) if b == a => Some((a.clone(), *p, GuardSide::Left)),
        (KatExpr::Letter(p), KatExpr::Test(b)) if b == a => Some((a.clone(), *p, GuardSide::Right)),
        _ => None,
    }
}

/// Matches `x` against `[a] x` or `x [a]`.
fn absorption(body: &KatExpr, guarded: &KatExpr) -> Option<(BoolExpr, GuardSide)> {
    if let Some((a, rest)) = leading_test(guarded) {
        if &rest == body {
            return Some((a, GuardSide::Left));
        }
    }
    if let Some((rest, a)) = trailing_test(guarded) {
        if &rest == body {
            return Some((a, GuardSide::Right));
        }
    }
    None
}

/// Syntactic classification into one of the five shapes, modulo the
/// smart-constructor normal form.
pub fn classify(e: &Equation) -> Hypothesis {
    let (l, r) = (&e.lhs, &e.rhs);
    let is_eq = e.relation == Comparison::Eq;

    if *r == KatExpr::Zero {
        return Hypothesis::HoareZero(l.clone());
    }
    if *l == KatExpr::Zero {
        // `0 = z` is a Hoare equation; `0 ≤ z` holds outright.
        return Hypothesis::HoareZero(if is_eq { r.clone() } else { KatExpr::Zero });
    }
    if is_eq {
        if let Some((guard, letter, side)) = letter_absorb(l, r).or_else(|| letter_absorb(r, l)) {
            return Hypothesis::LetterAbsorb { guard, letter, side };
        }
    }
    if let (Some(a), Some(b)) = (as_test(l), as_test(r)) {
        return Hypothesis::BoolRel { lhs: a, rhs: b, relation: e.relation };
    }
    if let Some((pre, body, post)) = commutation(l, r) {
        let variant = if is_eq { CommuteVariant::Eq } else { CommuteVariant::Le };
        return Hypothesis::GuardCommute { pre, body, post, variant };
    }
    if let Some((pre, body, post)) = commutation(r, l) {
        let variant = if is_eq { CommuteVariant::Eq } else { CommuteVariant::Ge };
        return Hypothesis::GuardCommute { pre, body, post, variant };
    }
    // `[a]x ≤ x` always holds, so `x = [a]x` says no more than `x ≤ [a]x`.
    if let Some((guard, side)) = absorption(l, r) {
        return Hypothesis::GuardAbsorb { body: l.clone(), guard, side };
    }
    if is_eq {
        if let Some((guard, side)) = absorption(r, l) {
            return Hypothesis::GuardAbsorb { body: r.clone(), guard, side };
        }
    }
    Hypothesis::Unsupported(e.clone())
}

impl Hypothesis {
    /// A canonical equation of this shape; `classify` maps it back to the
    /// same constructor.
    pub fn render(&self) -> Equation {
        match self {
            Hypothesis::HoareZero(z) => Equation::eq(z.clone(), KatExpr::Zero),
            Hypothesis::GuardCommute { pre, body, post, variant } => {
                let left = mk_dot(test(pre.clone()), body.clone());
                let right = mk_dot(body.clone(), test(post.clone()));
                match variant {
                    CommuteVariant::Eq => Equation::eq(left, right),
                    CommuteVariant::Le => Equation::le(left, right),
                    CommuteVariant::Ge => Equation::le(right, left),
                }
            }
            Hypothesis::GuardAbsorb { body, guard, side } => {
                let guarded = match side {
                    GuardSide::Left => mk_dot(test(guard.clone()), body.clone()),
                    GuardSide::Right => mk_dot(body.clone(), test(guard.clone())),
                };
                Equation::le(body.clone(), guarded)
            }
            Hypothesis::BoolRel { lhs, rhs, relation } => Equation {
                lhs: test(lhs.clone()),
                rhs: test(rhs.clone()),
                relation: *relation,
            },
            Hypothesis::LetterAbsorb { guard, letter, side } => {
                let p = KatExpr::Letter(*letter);
                let prod = match side {
                    GuardSide::Left => mk_dot(test(guard.clone()), p),
                    GuardSide::Right => mk_dot(p, test(guard.clone())),
                };
                Equation::eq(prod, test(guard.clone()))
            }
            Hypothesis::Unsupported(e) => e.clone(),
        }
    }

    /// Applies `f` to the Kleene terms of shapes 1–3.
    fn map_terms(&self, mut f: impl FnMut(&KatExpr) -> KatExpr) -> Hypothesis {
        match self {
            Hypothesis::HoareZero(z) => Hypothesis::HoareZero(f(z)),
            Hypothesis::GuardCommute { pre, body, post, variant } => Hypothesis::GuardCommute {
                pre: pre.clone(),
                body: f(body),
                post: post.clone(),
                variant: *variant,
            },
            Hypothesis::GuardAbsorb { body, guard, side } => Hypothesis::GuardAbsorb {
                body: f(body),
                guard: guard.clone(),
                side: *side,
            },
            other => other.clone(),
        }
    }
}

/// The terms that shapes 1–4 assert to be `0`.
pub fn to_hoare(h: &Hypothesis) -> Result<Vec<KatExpr>, HypothesisError> {
    let not = |a: &BoolExpr| test(!a.clone());
    Ok(match h {
        Hypothesis::HoareZero(z) => alloc::vec![z.clone()],
        Hypothesis::GuardCommute { pre, body, post, variant } => {
            // [a]x ≤ x[b] iff [a]x[¬b] = 0; x[b] ≤ [a]x iff [¬a]x[b] = 0
            let le = || product([test(pre.clone()), body.clone(), not(post)]);
            let ge = || product([not(pre), body.clone(), test(post.clone())]);
            match variant {
                CommuteVariant::Le => alloc::vec![le()],
                CommuteVariant::Ge => alloc::vec![ge()],
                CommuteVariant::Eq => alloc::vec![le(), ge()],
            }
        }
        Hypothesis::GuardAbsorb { body, guard, side } => match side {
            GuardSide::Left => alloc::vec![mk_dot(not(guard), body.clone())],
            GuardSide::Right => alloc::vec![mk_dot(body.clone(), not(guard))],
        },
        Hypothesis::BoolRel { lhs, rhs, relation } => {
            let le = mk_dot(test(lhs.clone()), not(rhs));
            match relation {
                Comparison::Le => alloc::vec![le],
                Comparison::Eq => alloc::vec![le, mk_dot(not(lhs), test(rhs.clone()))],
            }
        }
        Hypothesis::LetterAbsorb { .. } | Hypothesis::Unsupported(_) => {
            return Err(HypothesisError::NoHoareForm(h.clone()))
        }
    })
}

/// `z₁ + … + zₙ`, using `x = 0 ∧ y = 0 ⟺ x + y = 0`.
pub fn aggregate(zs: Vec<KatExpr>) -> KatExpr {
    sum(zs)
}

/// `Σ*`, the term whose language contains every guarded string.
pub fn universal(sig: &Signature) -> KatExpr {
    let letters: Vec<KatExpr> = sig.letters().map(KatExpr::Letter).collect();
    mk_star(sum(letters))
}

/// Turns `x = y` (or `x ≤ y`, via `x + y = y`) into `x + uzu = y + uzu`.
pub fn eliminate_hoare(sig: &Signature, goal: &Equation, z: &KatExpr) -> Equation {
    let goal = goal.to_equality();
    let u = universal(sig);
    let uzu = mk_dot(u.clone(), mk_dot(z.clone(), u));
    Equation::eq(mk_plus(goal.lhs, uzu.clone()), mk_plus(goal.rhs, uzu))
}

/// Replaces every occurrence of `letter` by `[¬a]p + [a]` (left) or
/// `p[¬a] + [a]` (right).
pub fn substitute_letter(e: &KatExpr, guard: &BoolExpr, letter: LetterId, side: GuardSide) -> KatExpr {
    if !e.mentions_letter(letter) {
        return e.clone();
    }
    let p = KatExpr::Letter(letter);
    let replacement = match side {
        GuardSide::Left => mk_plus(mk_dot(test(!guard.clone()), p), test(guard.clone())),
        GuardSide::Right => mk_plus(mk_dot(p, test(!guard.clone())), test(guard.clone())),
    };
    replace_letter(e, letter, &replacement)
}

fn replace_letter(e: &KatExpr, letter: LetterId, with: &KatExpr) -> KatExpr {
    match e {
        KatExpr::Letter(q) if *q == letter => with.clone(),
        KatExpr::Letter(_) | KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => e.clone(),
        KatExpr::Dot(x, y) => mk_dot(replace_letter(x, letter, with), replace_letter(y, letter, with)),
        KatExpr::Plus(x, y) => mk_plus(replace_letter(x, letter, with), replace_letter(y, letter, with)),
        KatExpr::Star(x) => mk_star(replace_letter(x, letter, with)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkatOutcome {
    /// Verdict on `transformed`. With hypotheses in play, `NotEqual` only
    /// means the goal is not provable this way, and the witness belongs to
    /// the transformed goal.
    pub verdict: Verdict,
    /// The equation actually decided.
    pub transformed: Equation,
    /// Number of hypotheses of shapes 1–5 that were eliminated.
    pub eliminated: usize,
    /// Hypotheses that fit none of the shapes; they were not used.
    pub unsupported: Vec<Equation>,
}

impl HkatOutcome {
    pub fn proved(&self) -> bool {
        self.verdict.is_equal()
    }
}

/// A goal with its hypotheses eliminated, ready for the decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub goal: Equation,
    pub eliminated: usize,
    pub unsupported: Vec<Equation>,
}

/// Substitutes shape-5 hypotheses into the goal and into the other
/// hypotheses, folds shapes 1–4 into one Hoare equation and eliminates it.
/// Inequalities in the goal are turned into equalities first.
pub fn reduce(sig: &Signature, goal: &Equation, hyps: &[Equation]) -> Reduced {
    let mut substitutions = Vec::new();
    let mut hoare = Vec::new();
    let mut unsupported = Vec::new();
    for e in hyps {
        match classify(e) {
            Hypothesis::LetterAbsorb { guard, letter, side } => substitutions.push((guard, letter, side)),
            Hypothesis::Unsupported(e) => unsupported.push(e),
            h => hoare.push(h),
        }
    }

    let substitute = |x: &KatExpr| {
        substitutions
            .iter()
            .fold(x.clone(), |acc, (guard, letter, side)| substitute_letter(&acc, guard, *letter, *side))
    };

    let goal = goal.to_equality();
    let mut goal = Equation::eq(substitute(&goal.lhs), substitute(&goal.rhs));
    let zs: Vec<KatExpr> = hoare
        .iter()
        .flat_map(|h| to_hoare(&h.map_terms(&substitute)).expect("shapes 1-4 have a Hoare form"))
        .collect();
    let z = aggregate(zs);
    if z != KatExpr::Zero {
        goal = eliminate_hoare(sig, &goal, &z);
    }
    Reduced { goal, eliminated: substitutions.len() + hoare.len(), unsupported }
}

/// Decides `goal` under `hyps` by [`reduce`] followed by the decision
/// procedure.
pub fn hkat_check(checker: &Checker<'_>, goal: &Equation, hyps: &[Equation]) -> Result<HkatOutcome, StateLimitExceeded> {
    let Reduced { goal, eliminated, unsupported } = reduce(checker.signature(), goal, hyps);
    let verdict = checker.equivalent(&goal.lhs, &goal.rhs)?;
    Ok(HkatOutcome { verdict, transformed: goal, eliminated, unsupported })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BoolExpr {
        BoolExpr::prim(0)
    }
    fn b() -> BoolExpr {
        BoolExpr::prim(1)
    }
    fn p() -> KatExpr {
        KatExpr::letter(0)
    }
    fn q() -> KatExpr {
        KatExpr::letter(1)
    }
    fn sig() -> Signature {
        Signature::new(["a", "b"], ["p", "q"]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let x = mk_dot(p(), q());
        let e = Equation::le(mk_dot(test(a()), x.clone()), mk_dot(x.clone(), test(b())));
        assert_eq!(
            classify(&e),
            Hypothesis::GuardCommute { pre: a(), body: x.clone(), post: b(), variant: CommuteVariant::Le }
        );
        let e = Equation::le(mk_dot(x.clone(), test(b())), mk_dot(test(a()), x.clone()));
        assert!(matches!(classify(&e), Hypothesis::GuardCommute { variant: CommuteVariant::Ge, .. }));
        let e = Equation::eq(mk_dot(test(a()), p()), test(a()));
        assert_eq!(classify(&e), Hypothesis::LetterAbsorb { guard: a(), letter: LetterId(0), side: GuardSide::Left });
        let e = Equation::eq(mk_dot(p(), test(a())), test(a()));
        assert_eq!(classify(&e), Hypothesis::LetterAbsorb { guard: a(), letter: LetterId(0), side: GuardSide::Right });
        let e = Equation::eq(mk_dot(p(), q()), mk_dot(q(), p()));
        assert_eq!(classify(&e), Hypothesis::Unsupported(e.clone()));
        assert_eq!(classify(&Equation::eq(x.clone(), KatExpr::Zero)), Hypothesis::HoareZero(x.clone()));
        assert_eq!(
            classify(&Equation::le(test(a()), test(b()))),
            Hypothesis::BoolRel { lhs: a(), rhs: b(), relation: Comparison::Le }
        );
        assert_eq!(
            classify(&Equation::eq(x.clone(), mk_dot(x.clone(), test(a())))),
            Hypothesis::GuardAbsorb { body: x.clone(), guard: a(), side: GuardSide::Right }
        );
        assert_eq!(
            classify(&Equation::le(x.clone(), mk_dot(test(a()), x.clone()))),
            Hypothesis::GuardAbsorb { body: x, guard: a(), side: GuardSide::Left }
        );
    }

    #[test]
    fn commutation_with_compound_body() {
        // the body itself ends with a test: [a] p [b] = p [b] [a]
        let body = mk_dot(p(), test(b()));
        let e = Equation::eq(mk_dot(test(a()), body.clone()), mk_dot(body.clone(), test(a())));
        assert_eq!(classify(&e), Hypothesis::GuardCommute { pre: a(), body, post: a(), variant: CommuteVariant::Eq });
    }

    #[test]
    fn hoare_forms() {
        let x = p();
        let h = Hypothesis::GuardCommute { pre: a(), body: x.clone(), post: b(), variant: CommuteVariant::Le };
        assert_eq!(to_hoare(&h).unwrap(), alloc::vec![product([test(a()), x.clone(), test(!b())])]);
        assert_eq!(to_hoare(&Hypothesis::HoareZero(x.clone())).unwrap(), alloc::vec![x]);
        let h = Hypothesis::BoolRel { lhs: a(), rhs: b(), relation: Comparison::Eq };
        assert_eq!(
            to_hoare(&h).unwrap(),
            alloc::vec![mk_dot(test(a()), test(!b())), mk_dot(test(!a()), test(b()))]
        );
        let h = Hypothesis::LetterAbsorb { guard: a(), letter: LetterId(0), side: GuardSide::Left };
        assert!(to_hoare(&h).is_err());
    }

    #[test]
    fn aggregation_and_universal() {
        assert_eq!(aggregate(alloc::vec![p(), q()]), mk_plus(p(), q()));
        assert_eq!(aggregate(Vec::new()), KatExpr::Zero);
        assert_eq!(aggregate(alloc::vec![p()]), p());
        assert_eq!(universal(&sig()), mk_star(mk_plus(p(), q())));
        assert_eq!(universal(&Signature::new(["a"], Vec::<&str>::new()).unwrap()), KatExpr::One);
        assert_eq!(universal(&Signature::new(["a"], ["p"]).unwrap()), mk_star(p()));
    }

    #[test]
    fn hoare_elimination_shapes() {
        let sig = sig();
        let u = universal(&sig);
        let uzu = product([u.clone(), q(), u.clone()]);
        let goal = Equation::eq(p(), KatExpr::One);
        assert_eq!(
            eliminate_hoare(&sig, &goal, &q()),
            Equation::eq(mk_plus(p(), uzu.clone()), mk_plus(KatExpr::One, uzu.clone()))
        );
        assert_eq!(eliminate_hoare(&sig, &goal, &KatExpr::Zero), goal);
        let le = Equation::le(p(), KatExpr::One);
        assert_eq!(
            eliminate_hoare(&sig, &le, &q()),
            Equation::eq(mk_plus(mk_plus(p(), KatExpr::One), uzu.clone()), mk_plus(KatExpr::One, uzu))
        );
    }

    #[test]
    fn letter_substitution() {
        let left = substitute_letter(&p(), &a(), LetterId(0), GuardSide::Left);
        assert_eq!(left, mk_plus(mk_dot(test(!a()), p()), test(a())));
        let right = substitute_letter(&p(), &a(), LetterId(0), GuardSide::Right);
        assert_eq!(right, mk_plus(mk_dot(p(), test(!a())), test(a())));
        let untouched = mk_star(q());
        assert_eq!(substitute_letter(&untouched, &a(), LetterId(0), GuardSide::Left), untouched);
    }

    #[test]
    fn hkat_examples() {
        let sig = sig();
        let c = Checker::new(&sig);
        // [a]p = [a] ⊢ [a]pq = [a]q, and the mirrored form
        let hyp = Equation::eq(mk_dot(test(a()), p()), test(a()));
        let goal = Equation::eq(product([test(a()), p(), q()]), mk_dot(test(a()), q()));
        assert!(hkat_check(&c, &goal, &[hyp]).unwrap().proved());
        assert!(!hkat_check(&c, &goal, &[]).unwrap().proved());
        let hyp = Equation::eq(mk_dot(p(), test(a())), test(a()));
        let goal = Equation::eq(product([q(), p(), test(a())]), mk_dot(q(), test(a())));
        assert!(hkat_check(&c, &goal, &[hyp]).unwrap().proved());

        // commutations are reported and ignored
        let comm = Equation::eq(mk_dot(p(), q()), mk_dot(q(), p()));
        let goal = Equation::eq(product([p(), q(), p()]), product([q(), p(), p()]));
        let out = hkat_check(&c, &goal, core::slice::from_ref(&comm)).unwrap();
        assert!(!out.proved());
        assert_eq!(out.unsupported, alloc::vec![comm]);
        assert_eq!(out.eliminated, 0);
    }

    #[test]
    fn no_hypotheses_matches_plain_check() {
        let sig = sig();
        let c = Checker::new(&sig);
        let goal = Equation::eq(mk_star(p()), mk_dot(mk_star(p()), mk_star(p())));
        let out = hkat_check(&c, &goal, &[]).unwrap();
        assert_eq!(out.verdict, c.equivalent(&goal.lhs, &goal.rhs).unwrap());
        assert_eq!(out.transformed, goal);
    }
}
