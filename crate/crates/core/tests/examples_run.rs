//! Runs every example binary that cargo built alongside the tests.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 9] = [
    "pattern",
    "construction",
    "freeness",
    "saturate_n64",
    "biclique",
    "paths",
    "stability",
    "graph_io",
    "report",
];

fn examples_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    // target/<profile>/deps/<test> -> target/<profile>/examples
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn examples_exit_cleanly() {
    let dir = examples_dir();
    for name in EXAMPLES {
        let bin = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        if !bin.exists() {
            eprintln!("skipping {name}: not built (run the whole test suite to build examples)");
            continue;
        }
        let out = Command::new(&bin).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
