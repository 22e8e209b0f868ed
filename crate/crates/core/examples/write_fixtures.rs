//! Regenerates the JSON documents under `fixtures/`.
//!
//! ```text
//! cargo run -p fuzzy-approx --example write_fixtures [DIR]
//! ```

use std::path::PathBuf;

use fuzzy_approx::fixtures::{self, CONSTANT_NAMES};
use fuzzy_approx::io::{ClassDocument, FunctionDocument};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;

    for (stem, f) in fixtures::fuzzy_functions() {
        FunctionDocument::from_fuzzy(&f).save(dir.join(format!("{stem}.json")))?;
    }
    for (stem, s) in fixtures::scalar_functions() {
        FunctionDocument::from_scalar(&s).save(dir.join(format!("{stem}.json")))?;
    }
    for (stem, class) in fixtures::classes() {
        ClassDocument::from_class(&class, &CONSTANT_NAMES)?
            .save(dir.join(format!("{stem}.json")))?;
    }
    println!("wrote fixtures to {}", dir.display());
    Ok(())
}
