use crate::report::{CheckEntry, DecompositionEntry, Koszul, Report, Row, KOSZUL_SOURCE};
use quadop::checkers::{check_substitution_iso, cyclic_witness, named_map, verdicts, CheckError};
use quadop::free3::GenSubst;
use quadop::mlab::run_suites;
use quadop::presentation::{builtin, builtin_names, parse_presentation, parse_substitution, Presentation};
use quadop::quantize::{ll_failure, polarize_star, star_from_ll, LLData, StarProduct};
use quadop::rep::{character_of, decompose, gamma_decompositions, RepError};
use quadop::scalar::{Rational, Scalar};
use std::path::Path;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Inconsistent(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Inconsistent(_) => 3,
            CliError::Other(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
            CliError::Other(m) => write!(f, "{m}"),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::InternalInconsistency(m) => CliError::Inconsistent(m),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        CliError::Other(e.to_string())
    }
}

pub const TABLE_ROWS: [&str; 9] = ["Ass", "Poiss", "LLq", "LLinf", "Vinberg", "PreLie", "G4", "G5", "G6"];

fn koszul(name: &str) -> Option<Koszul> {
    let value = match name {
        "Ass" | "Poiss" | "LLq" | "LLinf" | "Vinberg" | "PreLie" | "G6" => true,
        "G4" | "G5" => false,
        _ => return None,
    };
    Some(Koszul {
        value,
        source: KOSZUL_SOURCE,
    })
}

pub fn parse_q(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| CliError::Parse(format!("--q {s:?}: {e}")))
}

/// A presentation file, or else a builtin name; specialized at `q` if given.
pub fn load(src: &str, q: Option<&Rational>) -> Result<Presentation, CliError> {
    let p = if Path::new(src).is_file() {
        let text = std::fs::read_to_string(src).map_err(|e| CliError::Other(format!("{src}: {e}")))?;
        parse_presentation(&text).map_err(|e| CliError::Parse(format!("{src}: {e}")))?
    } else {
        builtin(src).map_err(|_| {
            CliError::Parse(format!(
                "{src:?} is neither a file nor a builtin ({})",
                builtin_names().join(", ")
            ))
        })?
    };
    match q {
        Some(q0) if p.uses_q() => p
            .specialize(q0, &format!("{}[q={q0}]", p.name))
            .map_err(|e| CliError::Other(e.to_string())),
        _ => Ok(p),
    }
}

fn row(p: &Presentation, cyclic: bool, dihedral: bool, hopf: bool) -> Result<Row, CliError> {
    let v = verdicts(p, cyclic, dihedral, hopf)?;
    Ok(Row {
        cyclic_witness: if v.cyclic == Some(false) { cyclic_witness(p) } else { None },
        presentation: v.presentation,
        cyclic: v.cyclic,
        dihedral: v.dihedral,
        hopf: v.hopf,
        koszul: None,
    })
}

pub fn check(src: &str, flags: [bool; 3], q: Option<&Rational>) -> Result<Report, CliError> {
    let [c, d, h] = if flags.iter().any(|&f| f) { flags } else { [true; 3] };
    let p = load(src, q)?;
    let mut r = Report::new("check");
    r.verdicts.push(row(&p, c, d, h)?);
    Ok(r)
}

pub fn table(q: Option<&Rational>) -> Result<Report, CliError> {
    let presentations = TABLE_ROWS
        .iter()
        .map(|n| load(n, q))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Result<Row, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = presentations
            .iter()
            .map(|p| s.spawn(move || row(p, true, true, true)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("checker thread")).collect()
    });
    let mut r = Report::new("table");
    for (name, row) in TABLE_ROWS.iter().zip(rows) {
        let mut row = row?;
        row.koszul = koszul(name);
        r.verdicts.push(row);
    }
    Ok(r)
}

fn entry(name: String, d: quadop::rep::Decomposition) -> DecompositionEntry {
    DecompositionEntry {
        space: name,
        dim: d.dim(),
        multiplicities: d,
    }
}

pub fn decompose_cmd(src: &str, q: Option<&Rational>) -> Result<Report, CliError> {
    let p = load(src, q)?;
    let shape = &p.shape;
    let (plus, minus) = gamma_decompositions(shape)?;
    let mut r = Report::new("decompose");
    for (name, d) in [("Γ+(E)(3)", plus), ("Γ-(E)(3)", minus)] {
        r.decompositions.push(entry(format!("{}: {name}", p.name), d));
    }
    let rel = p.relation_space();
    if rel.rank() == 0 {
        return Ok(r);
    }
    let chi = match character_of(shape, rel) {
        Ok(chi) => chi,
        Err(RepError::NotInvariant(g)) => {
            r.checks.push(CheckEntry::new("R stable under Σ3+", false).detail(Some(format!("moved by {g}"))));
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    r.decompositions.push(entry(format!("{}: R", p.name), decompose(&chi)?));
    let (gp, gm) = shape.gamma_split();
    for (name, half) in [("R ∩ Γ+", gp), ("R ∩ Γ-", gm)] {
        let s = rel.intersect(&half).map_err(|e| CliError::Other(e.to_string()))?;
        let d = decompose(&character_of(shape, &s)?)?;
        r.decompositions.push(entry(format!("{}: {name}", p.name), d));
    }
    Ok(r)
}

pub fn polarize(src: &str, q: Option<&Rational>) -> Result<Report, CliError> {
    let p = load(src, q)?;
    let mut r = Report::new("polarize");
    r.presentation = Some(p.polarize().render());
    Ok(r)
}

fn substitution(map: &str, source: &Presentation, target: &Presentation) -> Result<GenSubst, CliError> {
    match map {
        "identity" | "star" | "sign" => {
            named_map(map, &source.shape, &target.shape).map_err(|e| CliError::Other(e.to_string()))
        }
        text => parse_substitution(&source.shape, &target.shape, text).map_err(|e| CliError::Parse(e.to_string())),
    }
}

pub fn iso(a: &str, b: &str, map: &str, q: Option<&Rational>) -> Result<Report, CliError> {
    let (source, target) = (load(a, q)?, load(b, q)?);
    let mut subst = substitution(map, &source, &target)?;
    if let Some(q0) = q {
        subst = subst.specialize(q0).map_err(|e| CliError::Other(e.to_string()))?;
    }
    let holds = check_substitution_iso(&source, &target, &subst)?;
    let mut r = Report::new("iso");
    r.checks.push(CheckEntry::new(
        format!("{} ≅ {} via {map}", source.name, target.name),
        holds,
    ));
    Ok(r)
}

pub const EXAMPLES: [&str; 4] = ["moyal", "moyal-perturbed", "standard", "commutative"];

pub fn quantize(example: &str, order: usize, degree: u32) -> Result<Report, CliError> {
    let other = |e: quadop::quantize::QuantizeError| CliError::Other(e.to_string());
    let star = match example {
        "moyal" => StarProduct::moyal(order, degree),
        "moyal-perturbed" => StarProduct::moyal(order, degree).map(|mut s| {
            // one coefficient of the second-order term changed
            if let Some(b) = s.terms.get_mut(2) {
                let c = b.get([2, 0], [0, 2]) + Scalar::from(1);
                b.set([2, 0], [0, 2], c);
            }
            s
        }),
        "standard" => StarProduct::standard(order, degree),
        "commutative" => StarProduct::commutative(order, degree, Scalar::from(1)),
        other => {
            return Err(CliError::Parse(format!(
                "unknown example {other:?}; known: {}",
                EXAMPLES.join(", ")
            )))
        }
    }
    .map_err(other)?;
    let mut r = Report::new("quantize");
    let name = format!("{example}, N = {order}, D = {degree}");
    r.checks.push(CheckEntry::new(format!("{name}: commutative mod t"), star.is_commutative_mod_t()));
    let assoc = star.associativity_failure();
    r.checks.push(
        CheckEntry::new(format!("{name}: associative mod t^{order}"), assoc.is_none())
            .detail(assoc.map(|f| f.to_string())),
    );
    let data: LLData = match polarize_star(&star) {
        Ok(d) => d,
        Err(e) => {
            r.checks.push(CheckEntry::new(format!("{name}: polarization"), false).detail(Some(e.to_string())));
            return Ok(r);
        }
    };
    let ll = ll_failure(&data);
    r.checks.push(
        CheckEntry::new(format!("{name}: LL axioms with q = t^2"), ll.is_none()).detail(ll.map(|f| f.to_string())),
    );
    if let Ok(back) = star_from_ll(&data) {
        let round = polarize_star(&back).map_err(other)? == data && back == star;
        r.checks.push(CheckEntry::new(format!("{name}: roundtrip"), round));
    }
    Ok(r)
}

pub fn mlab(seed: u64, triples: usize, pairs: usize) -> Result<Report, CliError> {
    let mut r = Report::new("mlab");
    for s in run_suites(seed, triples, pairs) {
        r.checks.push(CheckEntry {
            name: s.name.clone(),
            holds: s.passed(),
            samples: Some(s.samples),
            failures: Some(s.failures),
            detail: s.first_failure.clone().map(|f| format!("first failure: {f}")),
        });
    }
    Ok(r)
}
