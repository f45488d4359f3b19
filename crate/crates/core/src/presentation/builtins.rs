use super::{parse_presentation, Presentation};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown builtin presentation {0:?}; known: {}", builtin_names().join(", "))]
    Unknown(String),
}

const JACOBI: &str = "b(x,b(y,z)) + b(y,b(z,x)) + b(z,b(x,y))";
const LEIBNIZ: &str = "b(x,c(y,z)) - c(b(x,y),z) - c(y,b(x,z))";
const COMM_ASSOC: &str = "c(c(x,y),z) - c(x,c(y,z))";
const ASSOCIATOR: &str = "m(m(x,y),z) - m(x,m(y,z))";
const TWIST: &str = "m(m(x,z),y) + m(m(y,z),x) - m(m(y,x),z) - m(m(z,x),y)";

/// Associator with its variables permuted, as text.
fn a(vars: &str) -> String {
    let v: Vec<char> = vars.chars().collect();
    format!("(m(m({0},{1}),{2}) - m({0},m({1},{2})))", v[0], v[1], v[2])
}

fn polarized(body: &[&str]) -> String {
    let mut s = String::from("gen c: comm;\n  gen b: anti;\n");
    for r in body {
        s.push_str(&format!("  rel {r} = 0;\n"));
    }
    s
}

fn g_assoc(terms: &[(&str, &str)]) -> String {
    let sum: Vec<String> = terms
        .iter()
        .enumerate()
        .map(|(i, (sign, vars))| {
            if i == 0 && *sign == "+" {
                a(vars)
            } else {
                format!("{sign} {}", a(vars))
            }
        })
        .collect();
    format!("gen m: none;\n  rel {} = 0;\n", sum.join(" "))
}

fn source(name: &str) -> Option<String> {
    let body = match name {
        "Ass" | "G1" => format!("gen m: none;\n  rel {ASSOCIATOR} = 0;\n"),
        "Ass_polarized" => polarized(&[LEIBNIZ, "b(y,b(x,z)) - c(c(x,y),z) + c(x,c(y,z))"]),
        "Com" => format!("gen c: comm;\n  rel {COMM_ASSOC} = 0;\n"),
        "Lie" => format!("gen b: anti;\n  rel {JACOBI} = 0;\n"),
        "Poiss" | "LL0" => polarized(&[COMM_ASSOC, JACOBI, LEIBNIZ]),
        "Poiss_depolarized" => format!("gen m: none;\n  rel {ASSOCIATOR} - (1/3)*({TWIST}) = 0;\n"),
        "LLq" => format!(
            "params: q;\n  {}",
            polarized(&[JACOBI, LEIBNIZ, &format!("{COMM_ASSOC} - q*b(y,b(x,z))")])
        ),
        "LL1" => polarized(&[JACOBI, LEIBNIZ, &format!("{COMM_ASSOC} - b(y,b(x,z))")]),
        "LLinf" => polarized(&[JACOBI, LEIBNIZ, "b(y,b(x,z))"]),
        "LLq_depolarized" => format!(
            "params: q;\n  gen m: none;\n  rel {ASSOCIATOR} + ((q-1)/(q+3))*({TWIST}) = 0;\n"
        ),
        "LLminus3" => format!(
            "gen m: none;\n  rel {TWIST} = 0;\n  rel {} + {} = 0;\n  rel {} + {} + {} = 0;\n",
            a("xyz"),
            a("zyx"),
            a("xyz"),
            a("yzx"),
            a("zxy")
        ),
        "G2" | "Vinberg" => g_assoc(&[("+", "xyz"), ("-", "yxz")]),
        "G3" | "PreLie" => g_assoc(&[("+", "xyz"), ("-", "xzy")]),
        "G4" => g_assoc(&[("+", "xyz"), ("-", "zyx")]),
        "G5" => g_assoc(&[("+", "xyz"), ("+", "yzx"), ("+", "zxy")]),
        "G6" => g_assoc(&[
            ("+", "xyz"),
            ("-", "yxz"),
            ("-", "xzy"),
            ("-", "zyx"),
            ("+", "yzx"),
            ("+", "zxy"),
        ]),
        "G2_polarized" => polarized(&[
            "2*c(b(x,y),z) + b(b(x,y),z) - c(x,c(y,z)) + c(y,c(x,z)) - c(x,b(y,z)) + c(y,b(x,z)) - b(x,c(y,z)) + b(y,c(x,z))",
        ]),
        "G4_polarized" => polarized(&[&format!("{COMM_ASSOC} - b(y,b(x,z))")]),
        "G5_polarized" => polarized(&[JACOBI, "b(c(x,y),z) + b(c(y,z),x) + b(c(z,x),y)"]),
        "CyclicNotDihedral" => "gen m: none;\n  gen c: comm;\n  \
             rel m(x,c(y,z)) + m(y,c(z,x)) + m(z,c(x,y)) = 0;\n  \
             rel m(c(x,y),z) + c(m(z,x),y) + c(x,m(z,y)) = 0;\n"
            .to_string(),
        "ExTwo" => "gen m: none;\n  rel m(m(x,y),z) - m(z,m(y,x)) = 0;\n".to_string(),
        "Free" | "free_type3" => "gen m: none;\n".to_string(),
        "FreeMixed" => "gen m: none;\n  gen c: comm;\n".to_string(),
        _ => return None,
    };
    Some(format!("operad {name} {{\n  {body}}}\n"))
}

const NAMES: &[&str] = &[
    "Ass",
    "Ass_polarized",
    "Com",
    "Lie",
    "Poiss",
    "Poiss_depolarized",
    "LLq",
    "LL0",
    "LL1",
    "LLinf",
    "LLq_depolarized",
    "LLminus3",
    "G1",
    "G2",
    "G3",
    "G4",
    "G5",
    "G6",
    "Vinberg",
    "PreLie",
    "G2_polarized",
    "G4_polarized",
    "G5_polarized",
    "CyclicNotDihedral",
    "ExTwo",
    "Free",
    "FreeMixed",
    "free_type3",
];

/// Names accepted by [`builtin`].
pub fn builtin_names() -> &'static [&'static str] {
    NAMES
}

/// The source text of a builtin presentation.
pub fn builtin_source(name: &str) -> Result<String, BuiltinError> {
    source(name).ok_or_else(|| BuiltinError::Unknown(name.to_string()))
}

pub fn builtin(name: &str) -> Result<Presentation, BuiltinError> {
    let text = builtin_source(name)?;
    Ok(parse_presentation(&text).unwrap_or_else(|e| panic!("builtin {name} does not parse: {e}")))
}

/// `LLq` at a rational value of `q`.
pub fn ll_at(q0: &Rational) -> Presentation {
    builtin("LLq")
        .expect("LLq is builtin")
        .specialize(q0, &format!("LL_{q0}"))
        .expect("LLq has polynomial coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn dim(name: &str) -> usize {
        builtin(name).unwrap().relation_space().rank()
    }

    #[test]
    fn all_names_parse() {
        for n in builtin_names() {
            assert_eq!(builtin(n).unwrap().name, *n);
        }
        assert!(builtin("Nope").is_err());
    }

    #[test]
    fn relation_dimensions() {
        let expected = [
            ("Ass", 6),
            ("Ass_polarized", 6),
            ("Com", 2),
            ("Lie", 1),
            ("Poiss", 6),
            ("Poiss_depolarized", 6),
            ("LLq", 6),
            ("LLinf", 6),
            ("LLq_depolarized", 6),
            ("G5", 2),
            ("G6", 1),
            ("Free", 0),
        ];
        for (n, d) in expected {
            assert_eq!(dim(n), d, "{n}");
        }
    }

    #[test]
    fn specializations_agree() {
        assert_eq!(
            ll_at(&Rational::from_integer(0.into())).relation_space(),
            builtin("LL0").unwrap().relation_space()
        );
        assert_eq!(
            ll_at(&Rational::one()).relation_space(),
            builtin("LL1").unwrap().relation_space()
        );
    }
}
