use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Formula, Var};
use crate::error::{Error, Result};

/// Renders a closed formula as one TPTP FOF axiom, e.g.
/// `fof(refl, axiom, ![X0]: leq(X0,X0)).`
///
/// `name` must be a TPTP lower word (a lowercase letter, then letters, digits
/// or underscores).
pub fn emit_tptp(f: &Formula, name: &str) -> Result<String> {
    let mut chars = name.chars();
    let lower_word = chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !lower_word {
        return Err(Error::InvalidName(name.into()));
    }
    if let Some(v) = f.free_vars().first() {
        return Err(Error::FreeVariable(v.0));
    }
    let mut out = format!("fof({name}, axiom, ");
    write_formula(&mut out, f);
    out.push_str(").");
    Ok(out)
}

fn write_formula(out: &mut String, f: &Formula) {
    match f {
        Formula::Leq(a, b) => {
            let _ = write!(out, "leq({a},{b})");
        }
        Formula::Eq(a, b) => {
            let _ = write!(out, "{a} = {b}");
        }
        Formula::Not(g) => match &**g {
            Formula::Eq(a, b) => {
                let _ = write!(out, "{a} != {b}");
            }
            g => {
                out.push_str("~ ");
                write_operand(out, g);
            }
        },
        Formula::And(gs) => write_list(out, gs, " & ", "$true"),
        Formula::Or(gs) => write_list(out, gs, " | ", "$false"),
        Formula::Implies(a, b) => {
            write_operand(out, a);
            out.push_str(" => ");
            write_operand(out, b);
        }
        Formula::Forall(..) | Formula::Exists(..) => {
            let forall = matches!(f, Formula::Forall(..));
            let mut vars: Vec<Var> = Vec::new();
            let mut body = f;
            while let (Formula::Forall(v, g), true) | (Formula::Exists(v, g), false) = (body, forall) {
                vars.push(*v);
                body = g;
            }
            out.push_str(if forall { "![" } else { "?[" });
            for (i, v) in vars.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            out.push_str("]: ");
            write_operand(out, body);
        }
    }
}

fn write_list(out: &mut String, gs: &[Formula], sep: &str, empty: &str) {
    if gs.is_empty() {
        out.push_str(empty);
    }
    for (i, g) in gs.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        write_operand(out, g);
    }
}

fn write_operand(out: &mut String, f: &Formula) {
    if matches!(f, Formula::Leq(..)) {
        write_formula(out, f);
    } else {
        out.push('(');
        write_formula(out, f);
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::build_psi;

    #[test]
    fn reflexivity_axiom() {
        let f = Formula::forall(Var(0), Formula::Leq(Var(0), Var(0)));
        assert_eq!(emit_tptp(&f, "refl").unwrap(), "fof(refl, axiom, ![X0]: leq(X0,X0)).");
    }

    #[test]
    fn open_formulas_and_bad_names_are_rejected() {
        let open = Formula::Leq(Var(0), Var(1));
        assert_eq!(emit_tptp(&open, "x"), Err(Error::FreeVariable(0)));
        let closed = Formula::forall(Var(0), Formula::Leq(Var(0), Var(0)));
        assert!(matches!(emit_tptp(&closed, "Refl"), Err(Error::InvalidName(_))));
    }

    #[test]
    fn psi_zero_shape() {
        let f = build_psi(1, 1, 0).unwrap();
        assert_eq!(
            emit_tptp(&f, "psi_1_1_0").unwrap(),
            "fof(psi_1_1_0, axiom, ![X0,X1]: ((~ leq(X0,X1)) => (X1 != X0)))."
        );
    }

    #[test]
    fn empty_connectives() {
        let f = Formula::forall(Var(0), Formula::Or(Vec::new()));
        assert_eq!(emit_tptp(&f, "f").unwrap(), "fof(f, axiom, ![X0]: ($false)).");
    }
}
