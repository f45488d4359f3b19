use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("check_g5_cyclic_dihedral", &["check", "G5", "--cyclic", "--dihedral"]),
    ("check_llq_hopf", &["check", "LLq", "--hopf"]),
    ("check_lie_hopf", &["check", "Lie", "--hopf"]),
    ("check_llq_at_quarter", &["check", "LLq", "--q", "1/4"]),
    ("table", &["table"]),
    ("table_json", &["--json", "table"]),
    ("decompose_free_type3", &["decompose", "--builtin", "free_type3"]),
    ("decompose_cyclic_not_dihedral", &["decompose", "CyclicNotDihedral"]),
    ("polarize_ass", &["polarize", "Ass"]),
    ("iso_llq_ass_star", &["iso", "LLq", "Ass", "--map", "star"]),
    ("iso_prelie_vinberg_sign", &["iso", "PreLie", "Vinberg", "--map", "sign"]),
    ("quantize_moyal", &["quantize", "--example", "moyal", "--order", "4", "--degree", "4"]),
    ("quantize_moyal_perturbed", &["quantize", "--example", "moyal-perturbed"]),
    ("quantize_standard_json", &["--json", "quantize", "--example", "standard", "--order", "3", "--degree", "3"]),
    ("mlab_seed_7", &["mlab", "--seed", "7", "--triples", "3", "--pairs", "8"]),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("QUADOP_BLESS").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_quadop")).args(*args).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let got = String::from_utf8(out.stdout).unwrap();
        let path = golden_dir().join(format!("{name}.txt"));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            mismatches.push(format!("{name}:\n--- want\n{want}\n--- got\n{got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
