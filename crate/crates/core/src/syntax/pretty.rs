use super::Term;

// Binding strength, loosest first.
const SUM: u8 = 0;
const SEQ: u8 = 1;
const NOT: u8 = 2;
const STAR: u8 = 3;
const ATOM: u8 = 4;

fn level(t: &Term) -> u8 {
    match t {
        Term::Plus(..) => SUM,
        Term::Dot(..) => SEQ,
        Term::Not(_) => NOT,
        Term::Star(_) => STAR,
        Term::Zero | Term::One | Term::Atom(_) => ATOM,
    }
}

fn write(t: &Term, min: u8, out: &mut String) {
    let wrap = level(t) < min;
    if wrap {
        out.push('(');
    }
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Atom(name) => out.push_str(name),
        Term::Plus(a, b) => {
            write(a, SUM, out);
            out.push_str(" + ");
            write(b, SEQ, out);
        }
        Term::Dot(a, b) => {
            write(a, SEQ, out);
            out.push(';');
            write(b, NOT, out);
        }
        Term::Not(a) => {
            out.push('!');
            write(a, NOT, out);
        }
        Term::Star(a) => {
            write(a, STAR, out);
            out.push('*');
        }
    }
    if wrap {
        out.push(')');
    }
}

/// Renders `term` with the fewest parentheses the grammar needs.
pub fn pretty(term: &Term) -> String {
    let mut out = String::new();
    write(term, SUM, &mut out);
    out
}
