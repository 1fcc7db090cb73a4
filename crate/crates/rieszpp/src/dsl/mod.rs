//! The expression DSL: definition-file parsing, canonical printing, and the
//! binding environment used by the command-line interface.
//!
//! Grammar sketch (`#` starts a comment, one `let NAME = expr` per line):
//!
//! ```text
//! expr   := expr "\/" expr | expr "/\" expr | expr "+" expr | expr "-" expr
//!         | rat "*" expr | "-" expr | "|" expr "|" | "(" expr ")" | atom
//! atom   := ppterm | "(" expr ")" "ox" "(" expr ")" | c00 | c00t | vec | mat | psi | NAME
//! ppterm := "pp" ("[" rat ":" poly "]")+
//! ```
//!
//! Precedence, tightest first: `| |`, `*`, unary `-`, binary `-`/`+`, `/\`,
//! `\/`; binary operators are left-associative.

mod lexer;
mod parser;
mod printer;

pub use parser::{
    builtin_h, parse_program, parse_rational, parse_value, SourceProgram, Value,
};
pub use printer::{
    print_map_pp, print_map_rat, print_matrix, print_polynomial, print_pp, print_psi,
    print_rational, print_sup_inf, print_tensor_sum, print_value, print_vector,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exactnum::{rat, rat_int, Polynomial};
    use crate::pplattice::PiecewisePoly;
    use crate::tensorlattice::counterexample_h;

    fn pp_example() -> PiecewisePoly {
        PiecewisePoly::new(
            vec![rat_int(0), rat_int(1)],
            vec![
                Polynomial::monomial(rat_int(1), 2),
                Polynomial::from_coeffs(vec![rat_int(-1), rat_int(2)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parse_running_example() {
        let v = parse_value("pp [0: x^2][1: 2*x - 1]").unwrap();
        assert_eq!(v, Value::Pp(pp_example()));
    }

    #[test]
    fn print_running_example() {
        assert_eq!(print_pp(&pp_example(), 'x'), "pp [0: x^2][1: 2*x - 1]");
    }

    #[test]
    fn parse_counterexample_h() {
        let v = parse_value("(pp [0: 1]) ox (pp [0: y^2]) /\\ (pp [0: x^2]) ox (pp [0: 1])")
            .unwrap();
        match v {
            Value::Tensor(e) => assert_eq!(e.normalize(), counterexample_h()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn builtin_h_matches_counterexample() {
        assert_eq!(builtin_h().normalize(), counterexample_h());
    }

    #[test]
    fn parse_rejects_nonzero_first_breakpoint() {
        match parse_value("pp [1: x]") {
            Err(Error::FirstBreakpointNotZero { got }) => assert_eq!(got, rat_int(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_program_binds_in_order() {
        let text = "# two bindings\nlet f = pp [0: x]\nlet g = f \\/ pp [0: 2 - x]\n";
        let p = parse_program(text).unwrap();
        assert_eq!(p.names().collect::<Vec<_>>(), vec!["f", "g"]);
        let expected = PiecewisePoly::identity()
            .join(&PiecewisePoly::from_poly(Polynomial::from_coeffs(vec![
                rat_int(2),
                rat_int(-1),
            ])))
            .unwrap();
        assert_eq!(p.get("g").unwrap(), &Value::Pp(expected));
    }

    #[test]
    fn parse_program_rejects_redefined_and_reserved_names() {
        assert!(matches!(
            parse_program("let f = pp [0: x]\nlet f = pp [0: x]\n"),
            Err(Error::Binding { name, .. }) if name == "f"
        ));
        assert!(matches!(
            parse_program("let h = pp [0: x]\n"),
            Err(Error::Binding { name, .. }) if name == "h"
        ));
    }

    #[test]
    fn scalar_and_sign_precedence() {
        // -1/2 * f + f is f scaled by 1/2.
        let v = parse_value("-1/2 * pp [0: x] + pp [0: x]").unwrap();
        assert_eq!(v, Value::Pp(PiecewisePoly::identity().scale(&rat(1, 2))));
        let a = parse_value("|pp [0: x - 1]|").unwrap();
        assert_eq!(
            a,
            Value::Pp(
                PiecewisePoly::from_poly(Polynomial::from_coeffs(vec![rat_int(-1), rat_int(1)]))
                    .abs()
                    .unwrap()
            )
        );
    }

    #[test]
    fn print_parse_round_trip_on_sup_inf() {
        let h = counterexample_h();
        let text = print_sup_inf(&h);
        match parse_value(&text).unwrap() {
            Value::Tensor(e) => assert_eq!(e.normalize(), h),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn print_polynomial_canonical_forms() {
        assert_eq!(print_polynomial(&Polynomial::zero(), 'x'), "0");
        let p = Polynomial::from_coeffs(vec![rat(1, 2), rat_int(0), rat_int(-3), rat_int(1)]);
        assert_eq!(print_polynomial(&p, 'x'), "x^3 - 3*x^2 + 1/2");
        assert_eq!(parse_value(&format!("pp [0: {}]", print_polynomial(&p, 'x'))).unwrap(),
            Value::Pp(PiecewisePoly::from_poly(p)));
    }

    #[test]
    fn c00_and_finite_literals() {
        let v = parse_value("c00 { a: 1, b: -3/2 }").unwrap();
        match &v {
            Value::C00Rat(m) => assert_eq!(m.support_len(), 2),
            other => panic!("{other:?}"),
        }
        match parse_value("vec [1, 2, 3]").unwrap() {
            Value::Vector(u) => assert_eq!(u.len(), 3),
            other => panic!("{other:?}"),
        }
        match parse_value("mat [[1, 2], [3, 4]]").unwrap() {
            Value::Matrix(m) => assert_eq!((m.rows(), m.cols()), (2, 2)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_value("mat [[1, 2], [3]]"),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rational_flag_parsing() {
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert!(parse_rational("3/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
