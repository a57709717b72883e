fn main() {
    // Dense nonsymmetric eigensolves (dgeev/zgeev) come from the system
    // OpenBLAS, which bundles LAPACK.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
