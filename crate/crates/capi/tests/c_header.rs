//! Compiles and runs a small C program against the generated header and the
//! static library, proving the header matches the ABI. Skips (with a note)
//! when no C compiler or library artifact is available.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "ievec.h"

int main(void) {
    const char *doc = "{\"type\":\"set_system\",\"n\":3,"
        "\"points\":[[1],[2],[3],[1,2],[2,3],[1,2,3]]}";
    IevecVenn *venn = NULL;
    if (ievec_venn_parse(doc, &venn) != IEVEC_STATUS_OK) return 1;
    if (ievec_venn_set_count(venn) != 3) return 2;
    if (ievec_venn_region_count(venn) != 6) return 3;

    IevecVector *mobius = NULL;
    if (ievec_mobius(venn, &mobius) != IEVEC_STATUS_OK) return 4;
    char *l1 = ievec_vector_l1_decimal(mobius);
    if (l1 == NULL || strcmp(l1, "5") != 0) return 5;
    ievec_string_free(l1);
    if (ievec_validate(venn, mobius, 4, 7) != IEVEC_STATUS_OK) return 6;

    IevecVector *tube = NULL;
    if (ievec_tube(venn, 1, 64, &tube) != IEVEC_STATUS_OK) return 7;
    if (ievec_validate(venn, tube, 4, 7) != IEVEC_STATUS_OK) return 8;

    ievec_vector_free(tube);
    ievec_vector_free(mobius);
    ievec_venn_free(venn);
    printf("c header ok\n");
    return 0;
}
"#;

fn target_dir() -> Option<PathBuf> {
    // tests run from the crate root; the workspace target dir sits two up
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = manifest.join("../../target").join(if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    });
    profile_dir.canonicalize().ok()
}

#[test]
fn c_program_links_against_the_header() {
    let Some(target) = target_dir() else {
        eprintln!("skipping: target dir not found");
        return;
    };
    let staticlib = target.join("libievec_capi.a");
    if !staticlib.exists() {
        eprintln!("skipping: {} not built", staticlib.display());
        return;
    }
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }

    let scratch = tempfile::tempdir().expect("tempdir");
    let src = scratch.path().join("smoke.c");
    let bin = scratch.path().join("smoke");
    std::fs::write(&src, C_PROGRAM).expect("write C source");

    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let compile = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(staticlib)
        .arg("-lpthread")
        .arg("-ldl")
        .arg("-lm")
        .arg("-o")
        .arg(&bin)
        .output()
        .expect("run cc");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin).output().expect("run smoke binary");
    assert!(
        run.status.success(),
        "smoke binary exited {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("c header ok"));
}
