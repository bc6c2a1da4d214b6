use std::path::PathBuf;
use std::process::Command;

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include").join("cubelab.h")
}

#[test]
fn header_declares_every_export() {
    let text = std::fs::read_to_string(header()).unwrap();
    let src = include_str!("../src/lib.rs");
    for line in src.lines() {
        let Some(rest) = line.split("extern \"C\" fn ").nth(1) else { continue };
        let name = rest.split('(').next().unwrap();
        assert!(text.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(text.contains("typedef struct CubelabMatrix CubelabMatrix;"));
}

#[test]
fn header_compiles_as_c() {
    let tmp = tempdir();
    let c_file = tmp.join("use.c");
    std::fs::write(
        &c_file,
        "#include \"cubelab.h\"\nint main(void) { CubelabMatrix *m = 0; \
         return cubelab_matrix_build(\"tricube\", 2, 0, &m) == CUBELAB_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let include = header().parent().unwrap().to_path_buf();
    let out = match Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&c_file)
        .output()
    {
        Ok(o) => o,
        Err(_) => {
            eprintln!("no C compiler; skipping");
            return;
        }
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cubelab-ffi-header-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
