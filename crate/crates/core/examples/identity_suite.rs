//! Runs every asserted identity on random instances over Z, Z/2 and Z/6.
//!
//! ```text
//! cargo run --release --example identity_suite -- [trials-per-seed]
//! ```

use std::time::Instant;

use precubical::complex::Coeff;
use precubical::propcheck::{check, GenConfig, Property};

fn main() {
    let per_seed: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let start = Instant::now();
    let mut failed = false;
    for ring in [Coeff::Integers, Coeff::IntegersMod(2), Coeff::IntegersMod(6)] {
        println!("over {ring}");
        for property in Property::asserted() {
            let mut trials = 0;
            let mut failures = 0;
            let t = Instant::now();
            for seed in 0..5 {
                let cfg = GenConfig { seed, ring: ring.clone(), ..GenConfig::default() };
                let report = check(property, &cfg, per_seed).expect("valid configuration");
                trials += report.trials;
                failures += report.failures.len();
                for f in &report.failures {
                    println!("  counterexample (seed {}): {}", f.seed, f.detail);
                }
            }
            failed |= failures > 0;
            println!("  {property:<20} {trials:>4} instances  {failures} failures  {:.2}s", t.elapsed().as_secs_f64());
        }
    }
    println!("total {:.2}s", start.elapsed().as_secs_f64());
    if failed {
        std::process::exit(1);
    }
}
