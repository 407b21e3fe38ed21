//! Signatures and the two-sorted abstract syntax of tests and KAT terms.
//!
//! Kleene terms are only ever built through [`mk_dot`], [`mk_plus`] and
//! [`mk_star`], which keep them in a light normal form: units and
//! annihilators are removed and products and sums are nested to the right.
//! Idempotence and commutativity of `+` are deliberately left alone.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::semantics::Atom;

/// Default bound on the number of primitive tests (`2^n` atoms are enumerated).
pub const DEFAULT_ATOM_LIMIT: usize = 12;

/// Atoms are `u32` bit vectors; this is the largest limit a signature may request.
pub const MAX_ATOM_LIMIT: usize = 24;

/// Index of a primitive test in a [`Signature`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TestId(pub u32);

/// Index of a letter (atomic action) in a [`Signature`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureError {
    DuplicateName(String),
    TooManyTests { count: usize, limit: usize },
    UnknownTest(TestId),
    UnknownLetter(LetterId),
}

impl fmt::Display for SignatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureError::DuplicateName(name) => write!(f, "identifier `{name}` declared twice"),
            SignatureError::TooManyTests { count, limit } => {
                write!(f, "{count} primitive tests exceed the atom limit of {limit}")
            }
            SignatureError::UnknownTest(t) => write!(f, "test index {} is out of range", t.0),
            SignatureError::UnknownLetter(p) => write!(f, "letter index {} is out of range", p.0),
        }
    }
}

impl core::error::Error for SignatureError {}

/// The finite sets of primitive tests and letters an expression ranges over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    tests: Vec<String>,
    letters: Vec<String>,
}

impl Signature {
    pub fn new<T, L>(tests: T, letters: L) -> Result<Self, SignatureError>
    where
        T: IntoIterator,
        T::Item: Into<String>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        Self::with_atom_limit(tests, letters, DEFAULT_ATOM_LIMIT)
    }

    /// Like [`Signature::new`] with a custom bound on the number of tests.
    /// The bound is clamped to [`MAX_ATOM_LIMIT`].
    pub fn with_atom_limit<T, L>(tests: T, letters: L, limit: usize) -> Result<Self, SignatureError>
    where
        T: IntoIterator,
        T::Item: Into<String>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let tests: Vec<String> = tests.into_iter().map(Into::into).collect();
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        let limit = limit.min(MAX_ATOM_LIMIT);
        if tests.len() > limit {
            return Err(SignatureError::TooManyTests { count: tests.len(), limit });
        }
        let mut seen: Vec<&str> = tests.iter().chain(&letters).map(String::as_str).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(SignatureError::DuplicateName(w[0].to_string()));
        }
        Ok(Signature { tests, letters })
    }

    pub fn test_count(&self) -> usize {
        self.tests.len()
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    /// Number of atoms, `2^n`.
    pub fn atom_count(&self) -> u32 {
        1u32 << self.tests.len()
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> + Clone {
        (0..self.atom_count()).map(Atom)
    }

    pub fn letters(&self) -> impl Iterator<Item = LetterId> + Clone {
        (0..self.letters.len() as u32).map(LetterId)
    }

    pub fn tests(&self) -> impl Iterator<Item = TestId> + Clone {
        (0..self.tests.len() as u32).map(TestId)
    }

    pub fn test_name(&self, t: TestId) -> &str {
        &self.tests[t.0 as usize]
    }

    pub fn letter_name(&self, p: LetterId) -> &str {
        &self.letters[p.0 as usize]
    }

    pub fn test_id(&self, name: &str) -> Option<TestId> {
        self.tests.iter().position(|t| t == name).map(|i| TestId(i as u32))
    }

    pub fn letter_id(&self, name: &str) -> Option<LetterId> {
        self.letters.iter().position(|p| p == name).map(|i| LetterId(i as u32))
    }

    pub fn check_bool(&self, a: &BoolExpr) -> Result<(), SignatureError> {
        match a {
            BoolExpr::Prim(t) if t.0 as usize >= self.tests.len() => {
                Err(SignatureError::UnknownTest(*t))
            }
            BoolExpr::Prim(_) | BoolExpr::Top | BoolExpr::Bot => Ok(()),
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
                self.check_bool(a)?;
                self.check_bool(b)
            }
            BoolExpr::Not(a) => self.check_bool(a),
        }
    }

    /// Checks that every test and letter index of `x` exists in this signature.
    pub fn check_kat(&self, x: &KatExpr) -> Result<(), SignatureError> {
        match x {
            KatExpr::Letter(p) if p.0 as usize >= self.letters.len() => {
                Err(SignatureError::UnknownLetter(*p))
            }
            KatExpr::Letter(_) | KatExpr::One | KatExpr::Zero => Ok(()),
            KatExpr::Test(a) => self.check_bool(a),
            KatExpr::Dot(x, y) | KatExpr::Plus(x, y) => {
                self.check_kat(x)?;
                self.check_kat(y)
            }
            KatExpr::Star(x) => self.check_kat(x),
        }
    }
}

/// Boolean expressions over the primitive tests.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolExpr {
    Prim(TestId),
    And(Arc<BoolExpr>, Arc<BoolExpr>),
    Or(Arc<BoolExpr>, Arc<BoolExpr>),
    Not(Arc<BoolExpr>),
    Top,
    Bot,
}

impl BoolExpr {
    pub fn prim(t: u32) -> Self {
        BoolExpr::Prim(TestId(t))
    }

    pub fn and(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: BoolExpr, b: BoolExpr) -> Self {
        BoolExpr::Or(Arc::new(a), Arc::new(b))
    }

    pub fn negate(a: BoolExpr) -> Self {
        BoolExpr::Not(Arc::new(a))
    }

    pub fn size(&self) -> usize {
        match self {
            BoolExpr::Prim(_) | BoolExpr::Top | BoolExpr::Bot => 1,
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => 1 + a.size() + b.size(),
            BoolExpr::Not(a) => 1 + a.size(),
        }
    }
}

impl core::ops::Not for BoolExpr {
    type Output = BoolExpr;

    fn not(self) -> BoolExpr {
        BoolExpr::negate(self)
    }
}

/// KAT expressions. Build compound terms with [`mk_dot`], [`mk_plus`] and
/// [`mk_star`] so that the normal-form invariant holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KatExpr {
    Letter(LetterId),
    Test(BoolExpr),
    Dot(Arc<KatExpr>, Arc<KatExpr>),
    Plus(Arc<KatExpr>, Arc<KatExpr>),
    Star(Arc<KatExpr>),
    One,
    Zero,
}

impl KatExpr {
    pub fn letter(p: u32) -> Self {
        KatExpr::Letter(LetterId(p))
    }

    pub fn test(a: BoolExpr) -> Self {
        KatExpr::Test(a)
    }

    /// Number of syntax nodes, counting each test as a single node.
    pub fn size(&self) -> usize {
        match self {
            KatExpr::Letter(_) | KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => 1,
            KatExpr::Dot(x, y) | KatExpr::Plus(x, y) => 1 + x.size() + y.size(),
            KatExpr::Star(x) => 1 + x.size(),
        }
    }

    /// Whether the term satisfies the smart-constructor normal form.
    pub fn is_normal(&self) -> bool {
        match self {
            KatExpr::Letter(_) | KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => true,
            KatExpr::Dot(x, y) => {
                !matches!(**x, KatExpr::One | KatExpr::Zero | KatExpr::Dot(..))
                    && !matches!(**y, KatExpr::One | KatExpr::Zero)
                    && x.is_normal()
                    && y.is_normal()
            }
            KatExpr::Plus(x, y) => {
                !matches!(**x, KatExpr::Zero | KatExpr::Plus(..))
                    && !matches!(**y, KatExpr::Zero)
                    && x.is_normal()
                    && y.is_normal()
            }
            KatExpr::Star(x) => !matches!(**x, KatExpr::One | KatExpr::Zero) && x.is_normal(),
        }
    }

    /// Whether `Letter(p)` occurs in the term.
    pub fn mentions_letter(&self, p: LetterId) -> bool {
        match self {
            KatExpr::Letter(q) => *q == p,
            KatExpr::Test(_) | KatExpr::One | KatExpr::Zero => false,
            KatExpr::Dot(x, y) | KatExpr::Plus(x, y) => x.mentions_letter(p) || y.mentions_letter(p),
            KatExpr::Star(x) => x.mentions_letter(p),
        }
    }

    /// Splits a right-nested product into its factors. A non-product term is
    /// its own single factor.
    pub fn factors(&self) -> Vec<&KatExpr> {
        let mut out = Vec::new();
        let mut cur = self;
        while let KatExpr::Dot(x, y) = cur {
            out.push(&**x);
            cur = y;
        }
        out.push(cur);
        out
    }

    fn rank(&self) -> u8 {
        match self {
            KatExpr::Letter(_) => 0,
            KatExpr::Test(_) => 1,
            KatExpr::Dot(..) => 2,
            KatExpr::Plus(..) => 3,
            KatExpr::Star(_) => 4,
            KatExpr::One => 5,
            KatExpr::Zero => 6,
        }
    }
}

/// Product with unit and annihilator laws applied, nested to the right.
pub fn mk_dot(x: KatExpr, y: KatExpr) -> KatExpr {
    match (x, y) {
        (KatExpr::Zero, _) | (_, KatExpr::Zero) => KatExpr::Zero,
        (KatExpr::One, y) => y,
        (x, KatExpr::One) => x,
        (KatExpr::Dot(a, b), y) => mk_dot((*a).clone(), mk_dot((*b).clone(), y)),
        (x, y) => KatExpr::Dot(Arc::new(x), Arc::new(y)),
    }
}

/// Sum with `0` removed, nested to the right.
pub fn mk_plus(x: KatExpr, y: KatExpr) -> KatExpr {
    match (x, y) {
        (KatExpr::Zero, y) => y,
        (x, KatExpr::Zero) => x,
        (KatExpr::Plus(a, b), y) => mk_plus((*a).clone(), mk_plus((*b).clone(), y)),
        (x, y) => KatExpr::Plus(Arc::new(x), Arc::new(y)),
    }
}

/// Kleene star; `0*` and `1*` both collapse to `1`.
pub fn mk_star(x: KatExpr) -> KatExpr {
    match x {
        KatExpr::Zero | KatExpr::One => KatExpr::One,
        x => KatExpr::Star(Arc::new(x)),
    }
}

/// Right-nested sum of the items; the empty sum is `0`.
pub fn sum<I: IntoIterator<Item = KatExpr>>(items: I) -> KatExpr
where
    I::IntoIter: DoubleEndedIterator,
{
    items.into_iter().rev().fold(KatExpr::Zero, |acc, x| mk_plus(x, acc))
}

/// Right-nested product of the items; the empty product is `1`.
pub fn product<I: IntoIterator<Item = KatExpr>>(items: I) -> KatExpr
where
    I::IntoIter: DoubleEndedIterator,
{
    items.into_iter().rev().fold(KatExpr::One, |acc, x| mk_dot(x, acc))
}

/// Total structural order: constructors in declaration order, then children
/// left to right. Equal exactly when the terms are structurally identical.
pub fn canonical_compare(x: &KatExpr, y: &KatExpr) -> Ordering {
    fn arcs(a: &Arc<KatExpr>, b: &Arc<KatExpr>) -> Ordering {
        if Arc::ptr_eq(a, b) {
            Ordering::Equal
        } else {
            canonical_compare(a, b)
        }
    }
    match (x, y) {
        (KatExpr::Letter(p), KatExpr::Letter(q)) => p.cmp(q),
        (KatExpr::Test(a), KatExpr::Test(b)) => a.cmp(b),
        (KatExpr::Dot(a, b), KatExpr::Dot(c, d)) | (KatExpr::Plus(a, b), KatExpr::Plus(c, d)) => {
            arcs(a, c).then_with(|| arcs(b, d))
        }
        (KatExpr::Star(a), KatExpr::Star(b)) => arcs(a, b),
        _ => x.rank().cmp(&y.rank()),
    }
}

impl PartialOrd for KatExpr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KatExpr {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_compare(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> KatExpr {
        KatExpr::letter(0)
    }
    fn q() -> KatExpr {
        KatExpr::letter(1)
    }
    fn r() -> KatExpr {
        KatExpr::letter(2)
    }

    #[test]
    fn dot_units_and_zero() {
        assert_eq!(mk_dot(KatExpr::One, p()), p());
        assert_eq!(mk_dot(p(), KatExpr::One), p());
        assert_eq!(mk_dot(p(), KatExpr::Zero), KatExpr::Zero);
        assert_eq!(mk_dot(KatExpr::Zero, p()), KatExpr::Zero);
    }

    #[test]
    fn dot_nests_right() {
        let left = mk_dot(mk_dot(p(), q()), r());
        let expected = KatExpr::Dot(
            Arc::new(p()),
            Arc::new(KatExpr::Dot(Arc::new(q()), Arc::new(r()))),
        );
        assert_eq!(left, expected);
        assert_eq!(left, mk_dot(p(), mk_dot(q(), r())));
        assert!(left.is_normal());
    }

    #[test]
    fn plus_rules() {
        assert_eq!(mk_plus(KatExpr::Zero, p()), p());
        assert_eq!(mk_plus(p(), KatExpr::Zero), p());
        assert_eq!(mk_plus(p(), q()), KatExpr::Plus(Arc::new(p()), Arc::new(q())));
        assert_eq!(mk_plus(mk_plus(p(), q()), r()), mk_plus(p(), mk_plus(q(), r())));
        // no idempotence
        assert!(matches!(mk_plus(p(), p()), KatExpr::Plus(..)));
    }

    #[test]
    fn star_constants() {
        assert_eq!(mk_star(KatExpr::Zero), KatExpr::One);
        assert_eq!(mk_star(KatExpr::One), KatExpr::One);
        assert!(matches!(mk_star(p()), KatExpr::Star(_)));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(canonical_compare(&p(), &p()), Ordering::Equal);
        assert_eq!(canonical_compare(&KatExpr::Zero, &KatExpr::One), Ordering::Greater);
        let mut v = alloc::vec![q(), p(), p()];
        v.sort();
        assert_eq!(v, alloc::vec![p(), p(), q()]);
    }

    #[test]
    fn sum_and_product_of_nothing() {
        assert_eq!(sum(Vec::new()), KatExpr::Zero);
        assert_eq!(product(Vec::new()), KatExpr::One);
        assert_eq!(sum(alloc::vec![p()]), p());
    }

    #[test]
    fn factors_of_product() {
        let x = product(alloc::vec![p(), q(), r()]);
        assert_eq!(x.factors(), alloc::vec![&p(), &q(), &r()]);
        assert_eq!(p().factors(), alloc::vec![&p()]);
    }

    #[test]
    fn signature_rejects_duplicates_and_large_test_sets() {
        assert_eq!(
            Signature::new(["a", "b"], ["a"]),
            Err(SignatureError::DuplicateName("a".into()))
        );
        let many: Vec<String> = (0..13).map(|i| alloc::format!("t{i}")).collect();
        assert!(matches!(
            Signature::new(many.clone(), Vec::<String>::new()),
            Err(SignatureError::TooManyTests { count: 13, limit: 12 })
        ));
        assert!(Signature::with_atom_limit(many, Vec::<String>::new(), 16).is_ok());
    }

    #[test]
    fn check_indices() {
        let sig = Signature::new(["a"], ["p"]).unwrap();
        assert!(sig.check_kat(&mk_dot(KatExpr::test(BoolExpr::prim(0)), p())).is_ok());
        assert_eq!(sig.check_kat(&q()), Err(SignatureError::UnknownLetter(LetterId(1))));
        assert_eq!(
            sig.check_kat(&KatExpr::test(!BoolExpr::prim(3))),
            Err(SignatureError::UnknownTest(TestId(3)))
        );
    }
}
