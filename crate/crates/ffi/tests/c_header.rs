//! Compiles and runs a C program against the generated header and the
//! static library. Requires a C compiler (`CC`, default `cc`).

use std::env;
use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "broadcast_lab.h"

int main(void) {
    BlGraph *g = NULL;
    if (bl_graph_from_family("grid", "3,4", &g) != BL_STATUS_OK) return 1;
    BlResult *r = NULL;
    if (bl_solve(g, "Gamma_b", 0, 1, &r) != BL_STATUS_OK) return 2;
    if (bl_result_value(r) != 9 || !bl_result_optimal(r)) return 3;
    uint32_t w[12];
    if (bl_result_witness(r, w, 12) != BL_STATUS_OK) return 4;
    char *json = bl_result_to_json(r);
    printf("%s\n", json);
    bl_string_free(json);
    bl_result_free(r);
    bl_graph_free(g);
    if (bl_graph_from_graph6("B", &g) != BL_STATUS_GRAPH6) return 5;
    if (strlen(bl_last_error()) == 0) return 6;
    return 0;
}
"#;

#[test]
fn header_compiles_and_links() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header_dir = crate_dir.join("include");
    assert!(
        header_dir.join("broadcast_lab.h").exists(),
        "header not generated"
    );

    // integration tests live in <target>/<profile>/deps; the static library
    // is built next to it
    let exe = env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libbroadcast_lab_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("c_api_smoke.c");
    let bin = tmp.join("c_api_smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&header_dir)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&bin)
        .status()
        .expect("C compiler runs");
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "C program exited with {:?}",
        out.status.code()
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.starts_with(r#"{"kind":"Gamma_b","value":9,"optimal":true"#),
        "{stdout}"
    );
}
