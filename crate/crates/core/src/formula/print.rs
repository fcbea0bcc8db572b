use std::fmt;

use super::Formula;

// Binding strength: `|` < `&` < `~`/atoms. Conjunctions under a disjunction
// are always bracketed; a right operand with the same connective is bracketed
// because both connectives associate left.
fn write_operand(f: &mut fmt::Formatter<'_>, child: &Formula, parent_or: bool, right: bool) -> fmt::Result {
    let needs_parens = match child {
        Formula::Or(..) => !parent_or || right,
        Formula::And(..) => parent_or || right,
        _ => false,
    };
    if needs_parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("T"),
            Formula::Bot => f.write_str("F"),
            Formula::Letter(p) => f.write_str(p),
            Formula::Not(a) => match **a {
                Formula::And(..) | Formula::Or(..) => write!(f, "~({a})"),
                _ => write!(f, "~{a}"),
            },
            Formula::And(a, b) => {
                write_operand(f, a, false, false)?;
                f.write_str(" & ")?;
                write_operand(f, b, false, true)
            }
            Formula::Or(a, b) => {
                write_operand(f, a, true, false)?;
                f.write_str(" | ")?;
                write_operand(f, b, true, true)
            }
        }
    }
}
