//! Generates include/awgraph.h from the exported C ABI.

use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let header = crate_dir.join("include").join("awgraph.h");

    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        cpp_compat: true,
        include_guard: Some("AWGRAPH_H".into()),
        documentation: true,
        header: Some("/* C interface to the awgraph library. Generated; do not edit. */".into()),
        ..cbindgen::Config::default()
    };

    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation failed")
        .write_to_file(header);

    println!("cargo:rerun-if-changed=src/lib.rs");
}
