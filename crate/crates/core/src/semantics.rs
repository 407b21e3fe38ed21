//! Ground-truth semantics: atoms, guarded strings, bounded guarded-string
//! languages, and finite relational interpretations.
//!
//! Everything here works by structural recursion on expressions and never
//! uses derivatives, so it can serve as an oracle for [`crate::deriv`] and
//! [`crate::equiv`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::syntax::{BoolExpr, KatExpr, LetterId, Signature, TestId};

/// A truth assignment to all primitive tests: bit `i` is the value of test `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(pub u32);

impl Atom {
    pub fn holds(self, t: TestId) -> bool {
        self.0 >> t.0 & 1 == 1
    }
}

/// Standard Boolean evaluation of `a` under the assignment `atom`.
pub fn atom_satisfies(atom: Atom, a: &BoolExpr) -> bool {
    match a {
        BoolExpr::Prim(t) => atom.holds(*t),
        BoolExpr::And(a, b) => atom_satisfies(atom, a) && atom_satisfies(atom, b),
        BoolExpr::Or(a, b) => atom_satisfies(atom, a) || atom_satisfies(atom, b),
        BoolExpr::Not(a) => !atom_satisfies(atom, a),
        BoolExpr::Top => true,
        BoolExpr::Bot => false,
    }
}

/// An alternating sequence `α₀ p₀ α₁ … pₙ₋₁ αₙ` of atoms and letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GuardedString {
    body: Vec<(Atom, LetterId)>,
    last: Atom,
}

// A guarded string always holds at least one atom; `len` counts letters.
#[allow(clippy::len_without_is_empty)]
impl GuardedString {
    pub fn new(body: Vec<(Atom, LetterId)>, last: Atom) -> Self {
        GuardedString { body, last }
    }

    /// The guarded string made of a single atom.
    pub fn atom(a: Atom) -> Self {
        GuardedString { body: Vec::new(), last: a }
    }

    pub fn body(&self) -> &[(Atom, LetterId)] {
        &self.body
    }

    pub fn first(&self) -> Atom {
        self.body.first().map_or(self.last, |&(a, _)| a)
    }

    pub fn last(&self) -> Atom {
        self.last
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_atom(&self) -> bool {
        self.body.is_empty()
    }

    /// Atom at position `i`, for `i` in `0..=len()`.
    pub fn atom_at(&self, i: usize) -> Atom {
        if i == self.body.len() {
            self.last
        } else {
            self.body[i].0
        }
    }

    /// Letter between atoms `i` and `i + 1`.
    pub fn letter_at(&self, i: usize) -> LetterId {
        self.body[i].1
    }

    /// Appends `p next` to the string.
    pub fn push(&mut self, p: LetterId, next: Atom) {
        self.body.push((self.last, p));
        self.last = next;
    }

    /// Fusion product, defined only when the boundary atoms agree.
    pub fn fuse(&self, other: &GuardedString) -> Option<GuardedString> {
        if self.last != other.first() {
            return None;
        }
        let mut body = Vec::with_capacity(self.body.len() + other.body.len());
        body.extend_from_slice(&self.body);
        body.extend_from_slice(&other.body);
        Some(GuardedString { body, last: other.last })
    }
}

/// Fusion product `u ∗ v`; `None` when the last atom of `u` is not the first
/// atom of `v`.
pub fn gs_fuse(u: &GuardedString, v: &GuardedString) -> Option<GuardedString> {
    u.fuse(v)
}

/// Bit layout of a packed guarded string: the first atom in the low bits,
/// then one `(letter, atom)` pair per step, and the number of letters in
/// the top bits. Keys of equal length therefore sort together, shortest
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Layout {
    atom_bits: u32,
    letter_bits: u32,
}

const LEN_SHIFT: u32 = 121;
const CODE_MASK: u128 = (1 << LEN_SHIFT) - 1;

impl Layout {
    fn new(sig: &Signature) -> Self {
        let letters = sig.letter_count() as u32;
        let letter_bits = if letters <= 1 { 0 } else { u32::BITS - (letters - 1).leading_zeros() };
        Layout { atom_bits: sig.test_count() as u32, letter_bits }
    }

    fn step(self) -> u32 {
        self.atom_bits + self.letter_bits
    }

    fn fits(self, bound: usize) -> bool {
        bound < 128 && self.atom_bits as usize + bound * self.step() as usize <= LEN_SHIFT as usize
    }

    fn atom_mask(self) -> u128 {
        (1u128 << self.atom_bits) - 1
    }

    fn atom_key(self, a: Atom) -> u128 {
        a.0 as u128
    }

    fn letter_key(self, a: Atom, p: LetterId, b: Atom) -> u128 {
        (1 << LEN_SHIFT) | a.0 as u128 | (p.0 as u128) << self.atom_bits | (b.0 as u128) << self.step()
    }

    fn first(self, key: u128) -> u128 {
        key & self.atom_mask()
    }

    fn last(self, key: u128) -> u128 {
        (key >> (key_len(key) as u32 * self.step())) & self.atom_mask()
    }

    /// Fusion of two keys whose boundary atoms agree.
    fn fuse(self, u: u128, v: u128) -> u128 {
        let (lu, lv) = (key_len(u) as u32, key_len(v) as u32);
        let tail = (v & CODE_MASK) >> self.atom_bits;
        ((lu + lv) as u128) << LEN_SHIFT | (u & CODE_MASK) | tail << (self.atom_bits + lu * self.step())
    }

    fn encode(self, u: &GuardedString) -> Option<u128> {
        let mut key = (u.len() as u128) << LEN_SHIFT | self.atom_key(u.first());
        for i in 0..u.len() {
            let off = self.atom_bits + i as u32 * self.step();
            key |= (u.letter_at(i).0 as u128) << off | (u.atom_at(i + 1).0 as u128) << (off + self.letter_bits);
        }
        (self.decode(key) == *u).then_some(key)
    }

    fn decode(self, key: u128) -> GuardedString {
        let letter_mask = (1u128 << self.letter_bits) - 1;
        let mut u = GuardedString::atom(Atom(self.first(key) as u32));
        for i in 0..key_len(key) as u32 {
            let off = self.atom_bits + i * self.step();
            let p = LetterId(((key >> off) & letter_mask) as u32);
            let next = Atom(((key >> (off + self.letter_bits)) & self.atom_mask()) as u32);
            u.push(p, next);
        }
        u
    }
}

fn key_len(key: u128) -> usize {
    (key >> LEN_SHIFT) as usize
}

fn normalise_keys(mut keys: Vec<u128>) -> Vec<u128> {
    keys.sort_unstable();
    keys.dedup();
    keys
}

/// All strings of a guarded-string language with at most `bound` letters.
///
/// Strings are stored packed, ordered by length first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedLanguage {
    layout: Layout,
    bound: usize,
    keys: Vec<u128>,
}

impl BoundedLanguage {
    fn from_keys(layout: Layout, bound: usize, keys: Vec<u128>) -> Self {
        BoundedLanguage { layout, bound, keys: normalise_keys(keys) }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, u: &GuardedString) -> bool {
        u.len() <= self.bound
            && self.layout.encode(u).is_some_and(|key| self.keys.binary_search(&key).is_ok())
    }

    /// The strings, shortest first.
    pub fn iter(&self) -> impl Iterator<Item = GuardedString> + '_ {
        self.keys.iter().map(|&k| self.layout.decode(k))
    }

    /// The `i`-th string in [`iter`](Self::iter) order.
    pub fn get(&self, i: usize) -> Option<GuardedString> {
        self.keys.get(i).map(|&k| self.layout.decode(k))
    }

    /// Restriction to strings with at most `bound` letters.
    pub fn truncate(&self, bound: usize) -> BoundedLanguage {
        let end = self.keys.partition_point(|&k| key_len(k) <= bound);
        BoundedLanguage { layout: self.layout, bound: bound.min(self.bound), keys: self.keys[..end].to_vec() }
    }

    /// A shortest string in exactly one of the two languages.
    pub fn first_difference(&self, other: &BoundedLanguage) -> Option<GuardedString> {
        let (mut i, mut j) = (0, 0);
        let (xs, ys) = (&self.keys, &other.keys);
        // Both key lists are sorted with shorter strings first, so the first
        // mismatch in a merge is a shortest difference.
        let key = loop {
            match (xs.get(i), ys.get(j)) {
                (None, None) => return None,
                (Some(&x), None) => break x,
                (None, Some(&y)) => break y,
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(&x), Some(&y)) => break x.min(y),
            }
        };
        Some(self.layout.decode(key))
    }
}

/// Whether [`bounded_language`] can represent strings of `bound` letters
/// over `sig`. Any language it cannot represent is far too large to
/// enumerate anyway.
pub fn bound_fits(sig: &Signature, bound: usize) -> bool {
    Layout::new(sig).fits(bound)
}

/// Keys grouped by first atom and length.
fn index_by_first_len(layout: Layout, keys: impl IntoIterator<Item = u128>) -> BTreeMap<(u128, usize), Vec<u128>> {
    let mut idx: BTreeMap<(u128, usize), Vec<u128>> = BTreeMap::new();
    for v in keys {
        idx.entry((layout.first(v), key_len(v))).or_default().push(v);
    }
    idx
}

/// `{ u ∈ G(x) : u has at most bound letters }`, by structural recursion.
///
/// Sizes grow like `(2^n)^(bound+1) · k^bound`; keep both small.
///
/// # Panics
///
/// If `!bound_fits(sig, bound)`.
pub fn bounded_language(sig: &Signature, x: &KatExpr, bound: usize) -> BoundedLanguage {
    let layout = Layout::new(sig);
    assert!(layout.fits(bound), "bound {bound} too large for the signature");
    BoundedLanguage::from_keys(layout, bound, language_keys(sig, layout, x, bound))
}

/// Sorted, duplicate-free keys of the bounded language of `x`.
fn language_keys(sig: &Signature, layout: Layout, x: &KatExpr, bound: usize) -> Vec<u128> {
    match x {
        KatExpr::Zero => Vec::new(),
        KatExpr::One => sig.atoms().map(|a| layout.atom_key(a)).collect(),
        KatExpr::Test(a) => sig.atoms().filter(|&alpha| atom_satisfies(alpha, a)).map(|a| layout.atom_key(a)).collect(),
        KatExpr::Letter(p) => {
            let mut keys = Vec::new();
            if bound >= 1 {
                for alpha in sig.atoms() {
                    for beta in sig.atoms() {
                        keys.push(layout.letter_key(alpha, *p, beta));
                    }
                }
            }
            normalise_keys(keys)
        }
        KatExpr::Plus(x, y) => {
            let mut keys = language_keys(sig, layout, x, bound);
            keys.extend(language_keys(sig, layout, y, bound));
            normalise_keys(keys)
        }
        KatExpr::Dot(x, y) => {
            let lx = language_keys(sig, layout, x, bound);
            if lx.is_empty() {
                return lx;
            }
            let by_first_len = index_by_first_len(layout, language_keys(sig, layout, y, bound));
            let mut keys = Vec::new();
            for &u in &lx {
                let first = layout.last(u);
                let room = bound - key_len(u);
                for (_, vs) in by_first_len.range((first, 0)..=(first, room)) {
                    keys.extend(vs.iter().map(|&v| layout.fuse(u, v)));
                }
            }
            normalise_keys(keys)
        }
        KatExpr::Star(x) => {
            // Zero-letter members of x never contribute new strings: fusing
            // with an atom either returns the string itself or is undefined.
            // Every other fusion adds letters, so the closure is built one
            // length at a time.
            let nonempty = language_keys(sig, layout, x, bound).into_iter().filter(|&v| key_len(v) > 0);
            let by_first_len = index_by_first_len(layout, nonempty);
            let mut layers: Vec<Vec<u128>> = vec![sig.atoms().map(|a| layout.atom_key(a)).collect()];
            for len in 1..=bound {
                let mut layer = Vec::new();
                for (shorter, us) in layers.iter().enumerate() {
                    for &u in us {
                        for &v in by_first_len.get(&(layout.last(u), len - shorter)).into_iter().flatten() {
                            layer.push(layout.fuse(u, v));
                        }
                    }
                }
                layers.push(normalise_keys(layer));
            }
            layers.concat()
        }
    }
}

/// Whether `u ∈ G(x)`.
///
/// Decided by splitting `u` at atom positions along the structure of `x`
/// (memoised per subterm and span), which agrees with membership in
/// `bounded_language(x, u.len())` without enumerating it.
pub fn gs_member(u: &GuardedString, x: &KatExpr) -> bool {
    let mut memo = BTreeMap::new();
    member_span(u, x, 0, u.len(), &mut memo)
}

type SpanMemo = BTreeMap<(usize, usize, usize), bool>;

fn member_span(u: &GuardedString, x: &KatExpr, i: usize, j: usize, memo: &mut SpanMemo) -> bool {
    let key = (x as *const KatExpr as usize, i, j);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let result = match x {
        KatExpr::Zero => false,
        KatExpr::One => i == j,
        KatExpr::Test(a) => i == j && atom_satisfies(u.atom_at(i), a),
        KatExpr::Letter(p) => j == i + 1 && u.letter_at(i) == *p,
        KatExpr::Plus(y, z) => member_span(u, y, i, j, memo) || member_span(u, z, i, j, memo),
        KatExpr::Dot(y, z) => {
            (i..=j).any(|k| member_span(u, y, i, k, memo) && member_span(u, z, k, j, memo))
        }
        KatExpr::Star(y) => {
            i == j
                || (i + 1..=j).any(|k| member_span(u, y, i, k, memo) && member_span(u, x, k, j, memo))
        }
    };
    memo.insert(key, result);
    result
}

/// A binary relation on `0..size`, stored as one bit row per state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    size: usize,
    rows: Vec<u64>,
}

impl Relation {
    pub const MAX_STATES: usize = 64;

    pub fn empty(size: usize) -> Self {
        assert!(size <= Self::MAX_STATES, "relations are limited to 64 states");
        Relation { size, rows: vec![0; size] }
    }

    pub fn identity(size: usize) -> Self {
        Self::diagonal(size, full_mask(size))
    }

    /// `{ (s, s) : s ∈ set }`.
    pub fn diagonal(size: usize, set: u64) -> Self {
        let mut r = Self::empty(size);
        for s in 0..size {
            if set >> s & 1 == 1 {
                r.rows[s] = 1 << s;
            }
        }
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(size: usize, pairs: I) -> Self {
        let mut r = Self::empty(size);
        for (s, t) in pairs {
            r.insert(s, t);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn insert(&mut self, s: usize, t: usize) {
        assert!(s < self.size && t < self.size, "pair out of range");
        self.rows[s] |= 1 << t;
    }

    pub fn contains(&self, s: usize, t: usize) -> bool {
        self.rows[s] >> t & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |s| (0..self.size).filter(move |&t| self.contains(s, t)).map(move |t| (s, t)))
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation {
            size: self.size,
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn compose(&self, other: &Relation) -> Relation {
        let rows = self
            .rows
            .iter()
            .map(|&row| {
                (0..self.size)
                    .filter(|&m| row >> m & 1 == 1)
                    .fold(0, |acc, m| acc | other.rows[m])
            })
            .collect();
        Relation { size: self.size, rows }
    }

    /// Reflexive-transitive closure.
    pub fn star(&self) -> Relation {
        let mut r = self.union(&Relation::identity(self.size));
        for k in 0..self.size {
            let via = r.rows[k];
            for s in 0..self.size {
                if r.rows[s] >> k & 1 == 1 {
                    r.rows[s] |= via;
                }
            }
        }
        r
    }
}

fn full_mask(size: usize) -> u64 {
    if size == 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// An interpretation of the signature in binary relations over `0..states`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelInterp {
    pub states: usize,
    /// One relation per letter.
    pub letters: Vec<Relation>,
    /// One state set (bit mask) per primitive test.
    pub tests: Vec<u64>,
}

impl RelInterp {
    pub fn new(states: usize, letters: Vec<Relation>, tests: Vec<u64>) -> Self {
        assert!((1..=Relation::MAX_STATES).contains(&states));
        assert!(letters.iter().all(|r| r.size() == states));
        assert!(tests.iter().all(|&t| t & !full_mask(states) == 0));
        RelInterp { states, letters, tests }
    }

    /// The set of states satisfying `a`; negation is complement in `0..states`.
    pub fn eval_bool(&self, a: &BoolExpr) -> u64 {
        match a {
            BoolExpr::Prim(t) => self.tests[t.0 as usize],
            BoolExpr::And(a, b) => self.eval_bool(a) & self.eval_bool(b),
            BoolExpr::Or(a, b) => self.eval_bool(a) | self.eval_bool(b),
            BoolExpr::Not(a) => !self.eval_bool(a) & full_mask(self.states),
            BoolExpr::Top => full_mask(self.states),
            BoolExpr::Bot => 0,
        }
    }
}

/// Standard relational interpretation of `x`.
pub fn rel_eval(x: &KatExpr, interp: &RelInterp) -> Relation {
    let m = interp.states;
    match x {
        KatExpr::Letter(p) => interp.letters[p.0 as usize].clone(),
        KatExpr::Test(a) => Relation::diagonal(m, interp.eval_bool(a)),
        KatExpr::Dot(x, y) => rel_eval(x, interp).compose(&rel_eval(y, interp)),
        KatExpr::Plus(x, y) => rel_eval(x, interp).union(&rel_eval(y, interp)),
        KatExpr::Star(x) => rel_eval(x, interp).star(),
        KatExpr::One => Relation::identity(m),
        KatExpr::Zero => Relation::empty(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use crate::syntax::{mk_dot, mk_star};

    fn sig2() -> Signature {
        Signature::new(["a", "b"], ["p", "q"]).unwrap()
    }

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
    fn gs(atoms: &[u32], letters: &[u32]) -> GuardedString {
        assert_eq!(atoms.len(), letters.len() + 1);
        let body = atoms.iter().zip(letters).map(|(&x, &l)| (Atom(x), LetterId(l))).collect();
        GuardedString::new(body, Atom(*atoms.last().unwrap()))
    }

    #[test]
    fn satisfaction_truth_table() {
        assert!(sig2().atoms().all(|alpha| atom_satisfies(alpha, &BoolExpr::Top)));
        assert!(atom_satisfies(Atom(0b01), &a()));
        assert!(!atom_satisfies(Atom(0b10), &a()));
        // a ∧ (¬a ∨ b): enumerated by hand, only the atom with both bits set.
        let e = BoolExpr::and(a(), BoolExpr::or(!a(), b()));
        let sat: Vec<u32> = sig2().atoms().filter(|&x| atom_satisfies(x, &e)).map(|x| x.0).collect();
        assert_eq!(sat, vec![0b11]);
    }

    #[test]
    fn fusion() {
        let alpha = GuardedString::atom(Atom(1));
        assert_eq!(gs_fuse(&alpha, &alpha), Some(alpha.clone()));
        assert_eq!(gs_fuse(&gs(&[0, 1], &[0]), &gs(&[1, 2], &[1])), Some(gs(&[0, 1, 2], &[0, 1])));
        assert_eq!(gs_fuse(&gs(&[0, 1], &[0]), &gs(&[2, 3], &[1])), None);
    }

    #[test]
    fn bounded_language_base_cases() {
        let sig = sig2();
        assert_eq!(bounded_language(&sig, &KatExpr::One, 0).len(), 4);
        assert_eq!(bounded_language(&sig, &p(), 1).len(), 16);
        assert_eq!(bounded_language(&sig, &p(), 0).len(), 0);
        assert!(bounded_language(&sig, &KatExpr::Zero, 5).is_empty());
        let guarded = mk_dot(KatExpr::test(a()), mk_dot(p(), KatExpr::test(b())));
        let l = bounded_language(&sig, &guarded, 1);
        let expected: BTreeSet<GuardedString> = [0b01, 0b11]
            .iter()
            .flat_map(|&x| [0b10, 0b11].map(|y| gs(&[x, y], &[0])))
            .collect();
        assert_eq!(l.iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn packed_strings_round_trip() {
        let layout = Layout::new(&Signature::new(["a", "b", "c"], ["p", "q", "r"]).unwrap());
        let u = gs(&[5, 0, 7, 2], &[2, 0, 1]);
        let key = layout.encode(&u).unwrap();
        assert_eq!(layout.decode(key), u);
        assert_eq!(layout.first(key), 5);
        assert_eq!(layout.last(key), 2);
        let (v, w) = (gs(&[5, 0], &[2]), gs(&[0, 7, 2], &[0, 1]));
        assert_eq!(layout.fuse(layout.encode(&v).unwrap(), layout.encode(&w).unwrap()), key);
        assert_eq!(layout.encode(&gs(&[8], &[])), None);
    }

    #[test]
    fn first_difference_is_shortest() {
        let sig = sig2();
        let l = bounded_language(&sig, &mk_star(p()), 3);
        let m = bounded_language(&sig, &mk_dot(p(), mk_star(p())), 3);
        assert_eq!(l.first_difference(&m).map(|u| u.len()), Some(0));
        assert_eq!(l.first_difference(&l), None);
        assert_eq!(l.truncate(1).len(), 4 + 16);
    }

    #[test]
    fn membership() {
        assert!(gs_member(&GuardedString::atom(Atom(2)), &KatExpr::One));
        assert!(!gs_member(&gs(&[0, 1], &[0]), &q()));
        assert!(gs_member(&gs(&[0, 1, 3], &[0, 0]), &mk_star(p())));
        assert!(!gs_member(&gs(&[0, 1, 3], &[0, 1]), &mk_star(p())));
    }

    #[test]
    fn relational_constants() {
        let interp = RelInterp::new(
            3,
            vec![Relation::from_pairs(3, [(0, 1), (1, 2)]), Relation::empty(3)],
            vec![0b101, 0b010],
        );
        let id = Relation::identity(3);
        assert_eq!(rel_eval(&KatExpr::One, &interp), id);
        assert_eq!(rel_eval(&KatExpr::test(BoolExpr::or(a(), !a())), &interp), id);
        assert_eq!(rel_eval(&KatExpr::Star(alloc::sync::Arc::new(KatExpr::Zero)), &interp), id);
        let star = rel_eval(&mk_star(p()), &interp);
        assert!(star.contains(0, 2) && star.contains(1, 1) && !star.contains(2, 0));
    }
}
