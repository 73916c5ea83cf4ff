fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets CARGO_MANIFEST_DIR");
    let header = std::path::Path::new(&crate_dir).join("include").join("cheegerlab.h");
    std::fs::create_dir_all(header.parent().unwrap()).expect("include/ must be creatable");
    cbindgen::generate(&crate_dir)
        .expect("cbindgen must parse the crate")
        .write_to_file(&header);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
