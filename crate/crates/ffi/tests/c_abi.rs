//! Compiles `smoke.c` against the generated header and links it with the
//! static library when one is present in the target directory.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().expect("test binary path");
    exe.parent()
        .and_then(Path::parent)
        .expect("target profile dir")
        .to_path_buf()
}

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().map(|_| cc)
}

#[test]
fn c_program_uses_the_header_and_library() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    let here = Path::new(env!("CARGO_MANIFEST_DIR"));
    let src = here.join("tests/smoke.c");
    let include = here.join("include");
    let lib = target_dir().join("libcist_ffi.a");
    let out_dir = tempfile_dir();
    let exe = out_dir.join("smoke");

    if !lib.exists() {
        let status = Command::new(&cc)
            .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
            .arg(&include)
            .arg(&src)
            .status()
            .expect("run compiler");
        assert!(status.success(), "header does not compile");
        eprintln!("{} not built; checked the header only", lib.display());
        return;
    }
    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("run compiler");
    assert!(status.success(), "smoke.c failed to build");
    let run = Command::new(&exe).output().expect("run smoke");
    assert!(
        run.status.success(),
        "smoke failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cist-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir
}
