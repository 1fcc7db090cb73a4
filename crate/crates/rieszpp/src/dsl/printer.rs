//! Canonical, deterministic text forms for every value the DSL can bind.
//! Printing is the inverse of parsing: `parse(print(v))` recovers `v`.

use num_traits::{One, Signed};

use crate::c00::{C00TensorExpr, FinSuppMap, RieszElement};
use crate::exactnum::{Polynomial, Rational};
use crate::finitedim::{FiniteMatrix, FiniteVector};
use crate::pplattice::PiecewisePoly;
use crate::tensorlattice::{SupInfForm, TensorSum};

use super::parser::Value;

pub fn print_rational(r: &Rational) -> String {
    r.to_string()
}

/// Descending-degree form with explicit `*` and `^`: "2*x^3 - x + 1/2".
pub fn print_polynomial(p: &Polynomial, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for deg in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(deg);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if deg == 0 {
            out.push_str(&print_rational(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&print_rational(&mag));
                out.push('*');
            }
            out.push(var);
            if deg > 1 {
                out.push_str(&format!("^{deg}"));
            }
        }
    }
    out
}

pub fn print_pp(f: &PiecewisePoly, var: char) -> String {
    let mut out = String::from("pp ");
    for (b, p) in f.breakpoints().iter().zip(f.pieces()) {
        out.push_str(&format!("[{}: {}]", print_rational(b), print_polynomial(p, var)));
    }
    out
}

/// An elementary tensor pair as "(pp ...) ox (pp ...)"; x on the left
/// factor, y on the right.
fn print_tensor_pair(left: &PiecewisePoly, right: &PiecewisePoly) -> String {
    format!("({}) ox ({})", print_pp(left, 'x'), print_pp(right, 'y'))
}

/// A finite tensor sum as "+"-joined elementary pairs. The empty sum prints
/// as a zero pair, which parses back to the empty sum.
pub fn print_tensor_sum(t: &TensorSum) -> String {
    if t.is_zero() {
        return print_tensor_pair(&PiecewisePoly::zero(), &PiecewisePoly::zero());
    }
    t.terms()
        .iter()
        .map(|(l, r)| print_tensor_pair(l, r))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Sup-inf normal form: rows joined by `\/`, entries within a row by `/\`.
/// `+` binds tighter than both, so no extra parentheses are needed.
pub fn print_sup_inf(s: &SupInfForm) -> String {
    s.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(print_tensor_sum)
                .collect::<Vec<_>>()
                .join(" /\\ ")
        })
        .collect::<Vec<_>>()
        .join(" \\/ ")
}

fn print_map_with<E: RieszElement>(
    m: &FinSuppMap<E>,
    show: impl Fn(&E) -> String,
) -> String {
    if m.is_empty() {
        return "c00 { }".to_string();
    }
    let body = m
        .entries()
        .map(|(k, v)| format!("{}: {}", k.as_str(), show(v)))
        .collect::<Vec<_>>()
        .join(", ");
    format!("c00 {{ {body} }}")
}

pub fn print_map_rat(m: &FinSuppMap<Rational>) -> String {
    print_map_with(m, print_rational)
}

pub fn print_map_pp(m: &FinSuppMap<PiecewisePoly>) -> String {
    print_map_with(m, |f| print_pp(f, 'x'))
}

pub fn print_vector(v: &FiniteVector) -> String {
    let body = v
        .coords()
        .iter()
        .map(print_rational)
        .collect::<Vec<_>>()
        .join(", ");
    format!("vec [{body}]")
}

fn print_c00t_with<E: RieszElement>(
    pairs: &[(crate::c00::Index, E)],
    show: impl Fn(&E) -> String,
) -> String {
    let mut out = String::from("c00t ");
    for (k, v) in pairs {
        out.push_str(&format!("[{}: {}]", k.as_str(), show(v)));
    }
    out
}

pub fn print_psi(table: &std::collections::BTreeMap<(usize, usize), FiniteMatrix>) -> String {
    let body = table
        .iter()
        .map(|(&(i, j), m)| format!("({i}, {j}): {}", print_matrix(m)))
        .collect::<Vec<_>>()
        .join(", ");
    format!("psi {{ {body} }}")
}

/// Canonical text for a bound value, when one exists: indicator-tensor
/// expressions other than plain sums have no literal form and yield `None`.
pub fn print_value(v: &Value) -> Option<String> {
    match v {
        Value::Pp(f) => Some(print_pp(f, 'x')),
        Value::Tensor(e) => Some(print_sup_inf(&e.normalize())),
        Value::C00Rat(m) => Some(print_map_rat(m)),
        Value::C00Pp(m) => Some(print_map_pp(m)),
        Value::CtenRat(C00TensorExpr::Sum(pairs)) => {
            Some(print_c00t_with(pairs, print_rational))
        }
        Value::CtenPp(C00TensorExpr::Sum(pairs)) => {
            Some(print_c00t_with(pairs, |f| print_pp(f, 'x')))
        }
        Value::CtenRat(_) | Value::CtenPp(_) => None,
        Value::Vector(u) => Some(print_vector(u)),
        Value::Matrix(m) => Some(print_matrix(m)),
        Value::Psi { table, .. } => Some(print_psi(table)),
    }
}

pub fn print_matrix(m: &FiniteMatrix) -> String {
    let rows = (0..m.rows())
        .map(|i| {
            let row = (0..m.cols())
                .map(|j| print_rational(m.get(i, j)))
                .collect::<Vec<_>>()
                .join(", ");
            format!("[{row}]")
        })
        .collect::<Vec<_>>()
        .join(", ");
    format!("mat [{rows}]")
}
