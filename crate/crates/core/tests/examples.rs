//! Every example runs to completion.

use std::process::Command;

#[test]
fn examples_run() {
    let names = [
        "trees",
        "quiver",
        "indecomposables",
        "oracle",
        "compatibility",
        "tiltings",
        "endo_tree",
        "star_tilting",
        "sweep",
    ];
    for name in names {
        let out = Command::new(env!("CARGO"))
            .args(["run", "--quiet", "--example", name])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .expect("cargo is available");
        assert!(
            out.status.success(),
            "{name} failed:\n{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
