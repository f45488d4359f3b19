//! Inputs shared by the `checks` benchmarks.

use quadop::presentation::{builtin, Presentation};
use quadop::quantize::StarProduct;

pub const TABLE_ROWS: [&str; 9] = ["Ass", "Poiss", "LLq", "LLinf", "Vinberg", "PreLie", "G4", "G5", "G6"];

pub fn table_presentations() -> Vec<Presentation> {
    TABLE_ROWS
        .iter()
        .map(|n| builtin(n).expect("table rows are builtins"))
        .collect()
}

pub fn moyal(order: usize, degree: u32) -> StarProduct {
    StarProduct::moyal(order, degree).expect("Moyal product has positive order")
}
