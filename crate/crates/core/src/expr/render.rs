use super::Expr;
use crate::monomial::Monomial;

// Binding strength of what a rendered string parses back as.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const FACTOR: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

/// Renders an expression as text that parses back to the same tree.
pub fn render(e: &Expr) -> String {
    render_at(e).0
}

fn wrap(e: &Expr, min: u8) -> String {
    let (s, level) = render_at(e);
    if level < min {
        format!("({s})")
    } else {
        s
    }
}

fn is_literal(e: &Expr) -> bool {
    matches!(e, Expr::Int(_) | Expr::Mono(_))
}

fn monomial_text(m: &Monomial) -> String {
    let body = match m.exp() {
        1 => "q".to_string(),
        e => format!("q^{e}"),
    };
    if m.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

fn render_at(e: &Expr) -> (String, u8) {
    match e {
        Expr::Int(n) => (n.to_string(), if *n < 0 { FACTOR } else { ATOM }),
        Expr::Mono(m) => (monomial_text(m), if m.is_negative() { FACTOR } else { ATOM }),
        Expr::Add(a, b) => (format!("{} + {}", wrap(a, SUM), wrap(b, PRODUCT)), SUM),
        Expr::Sub(a, b) => (format!("{} - {}", wrap(a, SUM), wrap(b, PRODUCT)), SUM),
        Expr::Mul(a, b) => (format!("{}*{}", wrap(a, PRODUCT), wrap(b, FACTOR)), PRODUCT),
        Expr::Div(a, b) => (format!("{}/{}", wrap(a, PRODUCT), wrap(b, FACTOR)), PRODUCT),
        Expr::Neg(inner) => {
            // a minus in front of a bare literal would fold into it
            let body = if is_literal(inner) { format!("({})", render(inner)) } else { wrap(inner, POWER) };
            (format!("-{body}"), FACTOR)
        }
        Expr::Pow(base, k) => {
            // `q^2` followed by `^k` would lex as one literal for base `q`
            let b = match **base {
                Expr::Mono(_) => format!("({})", render(base)),
                _ => wrap(base, ATOM),
            };
            (format!("{b}^{k}"), POWER)
        }
        Expr::Call(call) => {
            let args: Vec<String> = call.args.iter().map(render).collect();
            (format!("{}({})", call.func.name(), args.join(", ")), ATOM)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn renders_readably() {
        for text in [
            "-2*q*g2(q, q^20) + 2*q^5*g2(q^9, q^20)",
            "j(-q^2, q^20)^2*j(q^12, q^40)",
            "q^-4*m(q^2, q^40, q^-32)",
            "1 - (q - q^2)",
            "-(q)^3",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(render(&e), text);
            assert_eq!(parse(&render(&e)).unwrap(), e);
        }
    }
}
