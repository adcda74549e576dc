use num_traits::{One, Signed};

use super::RadicalExpr::{self, *};
use crate::arith::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
}

/// Deterministic infix rendering.
///
/// Text uses `sqrt(x)`, `root(k, x)`, `root(k, x, branch)` and `w(k)^j` for
/// roots of unity; LaTeX uses `\sqrt`, `\sqrt[k]` and `\omega_{k}^{j}`.
pub fn render(e: &RadicalExpr, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => Text.write(e, &mut out),
        Format::Latex => Latex.write(e, &mut out),
    }
    out
}

// Binding strength: sums 1, negations 2, products and quotients 3, atoms 4.
fn level(e: &RadicalExpr) -> u8 {
    match e {
        Add(_) => 1,
        Const(r) if r.is_negative() => 1,
        Neg(_) => 2,
        Const(r) if !r.is_integer() => 3,
        Mul(_) | Inv(_) => 3,
        _ => 4,
    }
}

/// `fs` with its leading negative constant flipped, dropping a resulting 1.
fn negated_product(fs: &[RadicalExpr]) -> RadicalExpr {
    let mut fs = fs.to_vec();
    if let Some(Const(r)) = fs.first_mut() {
        *r = -r.clone();
        if r.is_one() {
            fs.remove(0);
        }
    }
    if fs.len() == 1 {
        fs.pop().unwrap()
    } else {
        Mul(fs)
    }
}

trait Syntax {
    fn open(&self) -> &'static str;
    fn close(&self) -> &'static str;
    fn plus(&self) -> &'static str;
    fn minus(&self) -> &'static str;
    fn rational(&self, r: &Rational, out: &mut String);
    fn product(&self, items: &[RadicalExpr], out: &mut String);
    fn inverse(&self, x: &RadicalExpr, out: &mut String);
    fn root(&self, x: &RadicalExpr, index: u32, branch: u32, out: &mut String);
    fn unity(&self, order: u32, power: u32, out: &mut String);

    fn wrapped(&self, e: &RadicalExpr, min: u8, out: &mut String) {
        if level(e) < min {
            out.push_str(self.open());
            self.write(e, out);
            out.push_str(self.close());
        } else {
            self.write(e, out);
        }
    }

    fn write(&self, e: &RadicalExpr, out: &mut String) {
        match e {
            Const(r) => self.rational(r, out),
            RootOfUnity { order, power } => self.unity(*order, *power, out),
            Add(items) if items.is_empty() => out.push('0'),
            Add(items) => {
                for (i, t) in items.iter().enumerate() {
                    match t {
                        Neg(y) if i > 0 => {
                            out.push_str(self.minus());
                            self.wrapped(y, 3, out);
                        }
                        Const(r) if i > 0 && r.is_negative() => {
                            out.push_str(self.minus());
                            self.rational(&-r, out);
                        }
                        Mul(fs)
                            if i > 0 && matches!(fs.first(), Some(Const(r)) if r.is_negative()) =>
                        {
                            out.push_str(self.minus());
                            self.wrapped(&negated_product(fs), 3, out);
                        }
                        Const(r) if i == 0 && r.is_negative() => self.rational(r, out),
                        _ => {
                            if i > 0 {
                                out.push_str(self.plus());
                            }
                            self.wrapped(t, 2, out);
                        }
                    }
                }
            }
            Mul(items) if items.is_empty() => out.push('1'),
            Mul(items) => self.product(items, out),
            Neg(x) => {
                out.push('-');
                self.wrapped(x, 3, out);
            }
            Inv(x) => self.inverse(x, out),
            Root {
                radicand,
                index,
                branch,
            } => self.root(radicand, *index, *branch, out),
        }
    }
}

struct Text;

impl Syntax for Text {
    fn open(&self) -> &'static str {
        "("
    }

    fn close(&self) -> &'static str {
        ")"
    }

    fn plus(&self) -> &'static str {
        " + "
    }

    fn minus(&self) -> &'static str {
        " - "
    }

    fn rational(&self, r: &Rational, out: &mut String) {
        out.push_str(&r.to_string());
    }

    fn product(&self, items: &[RadicalExpr], out: &mut String) {
        for (i, f) in items.iter().enumerate() {
            match f {
                Inv(y) if i > 0 => {
                    out.push('/');
                    self.wrapped(y, 4, out);
                }
                _ => {
                    if i > 0 {
                        out.push('*');
                    }
                    self.wrapped(f, 4, out);
                }
            }
        }
    }

    fn inverse(&self, x: &RadicalExpr, out: &mut String) {
        out.push_str("1/");
        self.wrapped(x, 4, out);
    }

    fn root(&self, x: &RadicalExpr, index: u32, branch: u32, out: &mut String) {
        if index == 2 && branch == 0 {
            out.push_str("sqrt(");
        } else {
            out.push_str(&format!("root({index}, "));
        }
        self.write(x, out);
        if branch != 0 {
            out.push_str(&format!(", {branch}"));
        }
        out.push(')');
    }

    fn unity(&self, order: u32, power: u32, out: &mut String) {
        out.push_str(&format!("w({order})^{power}"));
    }
}

struct Latex;

impl Syntax for Latex {
    fn open(&self) -> &'static str {
        "\\left("
    }

    fn close(&self) -> &'static str {
        "\\right)"
    }

    fn plus(&self) -> &'static str {
        "+"
    }

    fn minus(&self) -> &'static str {
        "-"
    }

    fn rational(&self, r: &Rational, out: &mut String) {
        if r.is_integer() {
            out.push_str(&r.numer().to_string());
        } else {
            if r.is_negative() {
                out.push('-');
            }
            out.push_str(&format!("\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom()));
        }
    }

    fn product(&self, items: &[RadicalExpr], out: &mut String) {
        let (den, num): (Vec<_>, Vec<_>) = items
            .iter()
            .enumerate()
            .partition(|(i, f)| *i > 0 && matches!(f, Inv(_)));
        let write_factors = |factors: Vec<&RadicalExpr>, out: &mut String| {
            if factors.is_empty() {
                out.push('1');
            }
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    out.push_str(" \\cdot ");
                }
                self.wrapped(f, 4, out);
            }
        };
        let num: Vec<&RadicalExpr> = num.into_iter().map(|(_, f)| f).collect();
        if den.is_empty() {
            write_factors(num, out);
            return;
        }
        let den: Vec<&RadicalExpr> = den
            .into_iter()
            .map(|(_, f)| match f {
                Inv(y) => &**y,
                _ => unreachable!(),
            })
            .collect();
        out.push_str("\\frac{");
        write_factors(num, out);
        out.push_str("}{");
        write_factors(den, out);
        out.push('}');
    }

    fn inverse(&self, x: &RadicalExpr, out: &mut String) {
        out.push_str("\\frac{1}{");
        self.write(x, out);
        out.push('}');
    }

    fn root(&self, x: &RadicalExpr, index: u32, branch: u32, out: &mut String) {
        if branch != 0 {
            out.push_str("\\left(");
        }
        if index == 2 {
            out.push_str("\\sqrt{");
        } else {
            out.push_str(&format!("\\sqrt[{index}]{{"));
        }
        self.write(x, out);
        out.push('}');
        if branch != 0 {
            out.push_str(&format!("\\right)_{{{branch}}}"));
        }
    }

    fn unity(&self, order: u32, power: u32, out: &mut String) {
        if power == 1 {
            out.push_str(&format!("\\omega_{{{order}}}"));
        } else {
            out.push_str(&format!("\\omega_{{{order}}}^{{{power}}}"));
        }
    }
}
