//! Exact verification and numerical exploration of three-dimensional Bol
//! algebras of type V and their loops.

pub mod algebra;
pub mod classification;
pub mod enveloping;
pub mod findings;
pub mod linalg;
pub mod loops;
pub mod report;
pub mod specfile;

pub use enveloping::{Sign, SubalgebraParams};

/// Cap the rayon pool at `BOLALG_THREADS` when it is set to a positive
/// integer. Has no effect if the global pool already exists.
pub fn configure_threads_from_env() {
    if let Some(n) = std::env::var("BOLALG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}
