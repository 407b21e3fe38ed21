//! Pretty-printing in the concrete syntax accepted by [`crate::parser`].
//! Parentheses are emitted only where precedence requires them, so printing
//! and reparsing an expression built with the smart constructors gives it
//! back unchanged.

use std::fmt::Write;

use katdec_core::hyp::{Comparison, Equation};
use katdec_core::{Atom, BoolExpr, GuardedString, HoareTriple, KatExpr, Prog, Signature};

use crate::goal::{Assumption, GoalFile, Show};

pub fn bool_expr(sig: &Signature, a: &BoolExpr) -> String {
    let mut out = String::new();
    write_bool(&mut out, sig, a, 0);
    out
}

// Levels: 0 disjunction, 1 conjunction, 2 negation and atoms.
fn write_bool(out: &mut String, sig: &Signature, a: &BoolExpr, level: u8) {
    let own = match a {
        BoolExpr::Or(..) => 0,
        BoolExpr::And(..) => 1,
        _ => 2,
    };
    if own < level {
        out.push('(');
    }
    match a {
        BoolExpr::Prim(t) => out.push_str(sig.test_name(*t)),
        BoolExpr::Top => out.push('T'),
        BoolExpr::Bot => out.push('F'),
        BoolExpr::Not(x) => {
            out.push('!');
            write_bool(out, sig, x, 2);
        }
        BoolExpr::And(x, y) => {
            write_bool(out, sig, x, 2);
            out.push_str(" & ");
            write_bool(out, sig, y, 1);
        }
        BoolExpr::Or(x, y) => {
            write_bool(out, sig, x, 1);
            out.push_str(" | ");
            write_bool(out, sig, y, 0);
        }
    }
    if own < level {
        out.push(')');
    }
}

pub fn expr(sig: &Signature, x: &KatExpr) -> String {
    let mut out = String::new();
    write_expr(&mut out, sig, x, 0);
    out
}

// Levels: 0 sum, 1 product, 2 star, 3 atoms.
fn write_expr(out: &mut String, sig: &Signature, x: &KatExpr, level: u8) {
    let own = match x {
        KatExpr::Plus(..) => 0,
        KatExpr::Dot(..) => 1,
        KatExpr::Star(..) => 2,
        _ => 3,
    };
    if own < level {
        out.push('(');
    }
    match x {
        KatExpr::Letter(p) => out.push_str(sig.letter_name(*p)),
        KatExpr::Test(a) => {
            out.push('[');
            write_bool(out, sig, a, 0);
            out.push(']');
        }
        KatExpr::One => out.push('1'),
        KatExpr::Zero => out.push('0'),
        KatExpr::Star(y) => {
            write_expr(out, sig, y, 2);
            out.push('*');
        }
        KatExpr::Dot(y, z) => {
            write_expr(out, sig, y, 2);
            out.push(';');
            write_expr(out, sig, z, 1);
        }
        KatExpr::Plus(y, z) => {
            write_expr(out, sig, y, 1);
            out.push_str(" + ");
            write_expr(out, sig, z, 0);
        }
    }
    if own < level {
        out.push(')');
    }
}

pub fn equation(sig: &Signature, e: &Equation) -> String {
    let rel = match e.relation {
        Comparison::Eq => "==",
        Comparison::Le => "<=",
    };
    format!("{} {rel} {}", expr(sig, &e.lhs), expr(sig, &e.rhs))
}

pub fn prog(sig: &Signature, p: &Prog) -> String {
    let mut out = String::new();
    write_prog(&mut out, sig, p, false);
    out
}

fn write_prog(out: &mut String, sig: &Signature, p: &Prog, left_of_seq: bool) {
    match p {
        Prog::Skip => out.push_str("skip"),
        Prog::Act(a) => out.push_str(sig.letter_name(*a)),
        Prog::Seq(x, y) => {
            if left_of_seq {
                out.push('(');
            }
            write_prog(out, sig, x, true);
            out.push_str(" ;; ");
            write_prog(out, sig, y, false);
            if left_of_seq {
                out.push(')');
            }
        }
        Prog::Ite(b, x, y) => {
            let _ = write!(out, "if {} then ", bool_expr(sig, b));
            write_prog(out, sig, x, false);
            out.push_str(" else ");
            write_prog(out, sig, y, false);
            out.push_str(" fi");
        }
        Prog::While(b, x) => {
            let _ = write!(out, "while {} do ", bool_expr(sig, b));
            write_prog(out, sig, x, false);
            out.push_str(" od");
        }
    }
}

pub fn triple(sig: &Signature, t: &HoareTriple) -> String {
    format!("{{{}}} {} {{{}}}", bool_expr(sig, &t.pre), prog(sig, &t.prog), bool_expr(sig, &t.post))
}

pub fn atom(sig: &Signature, alpha: Atom) -> String {
    let lits: Vec<String> = sig
        .tests()
        .map(|t| {
            let name = sig.test_name(t);
            if alpha.holds(t) {
                name.to_string()
            } else {
                format!("!{name}")
            }
        })
        .collect();
    format!("{{{}}}", lits.join(","))
}

pub fn guarded_string(sig: &Signature, u: &GuardedString) -> String {
    let mut out = String::new();
    for &(alpha, p) in u.body() {
        let _ = write!(out, "{} {} ", atom(sig, alpha), sig.letter_name(p));
    }
    out.push_str(&atom(sig, u.last()));
    out
}

pub fn goal_file(g: &GoalFile) -> String {
    let sig = &g.signature;
    let names = |it: Vec<&str>| it.iter().map(|s| format!(" {s}")).collect::<String>();
    let mut out = String::new();
    let _ = writeln!(out, "tests{};", names(sig.tests().map(|t| sig.test_name(t)).collect()));
    let _ = writeln!(out, "actions{};", names(sig.letters().map(|p| sig.letter_name(p)).collect()));
    for a in &g.assumptions {
        let body = match a {
            Assumption::Equation(e) => equation(sig, e),
            Assumption::Triple(t) => triple(sig, t),
        };
        let _ = writeln!(out, "assume {body}");
    }
    let body = match &g.show {
        Show::Equation(e) => equation(sig, e),
        Show::ProgEquiv(p, q) => format!("{} ~ {}", prog(sig, p), prog(sig, q)),
        Show::Triple(t) => triple(sig, t),
    };
    let _ = writeln!(out, "show {body}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_expr, parse_goal, parse_prog};
    use katdec_core::LetterId;

    fn sig() -> Signature {
        Signature::new(["a", "b"], ["p", "q"]).unwrap()
    }

    #[test]
    fn guarded_string_format() {
        let sig = sig();
        assert_eq!(guarded_string(&sig, &GuardedString::atom(Atom(0b11))), "{a,b}");
        let u = GuardedString::new(vec![(Atom(0b01), LetterId(0))], Atom(0));
        assert_eq!(guarded_string(&sig, &u), "{a,!b} p {!a,!b}");
    }

    #[test]
    fn minimal_parentheses() {
        let sig = sig();
        for src in ["(p + q)*;[!(a | b) & a]", "p**", "p;q + [T];(p;q)*", "(p;q)* + q;p + 1"] {
            let x = parse_expr(&sig, src).unwrap();
            assert_eq!(expr(&sig, &x), src);
        }
        let src = "(p ;; q) ;; while a & !b do if b then skip else q fi od";
        assert_eq!(prog(&sig, &parse_prog(&sig, src).unwrap()), src);
    }

    #[test]
    fn goal_files_reprint() {
        let src = "tests A b;\nactions p;\nassume {A & b} p {A}\nassume [b];p <= p;[b]\nshow {A} while b do p od {A & !b}\n";
        let g = parse_goal(src, 12).unwrap();
        assert_eq!(goal_file(&g), src);
    }
}
