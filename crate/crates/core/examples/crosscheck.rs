//! Exact value against certified direct summation and Monte Carlo.

use zetalab::crosscheck;

fn main() {
    for (n, r, v) in [(0, 3, 2), (1, 2, 1), (2, 3, 0)] {
        let rep = crosscheck(n, r, v, 30, 400_000, 7).unwrap();
        println!(
            "n={n} r={r} v={v}: exact {}  direct {} (±{}, {} terms)  mc {:.6} ± {:.1e}  {}",
            rep.exact.value,
            rep.direct.value,
            rep.direct.error_bound.to_scientific(2),
            rep.direct_terms,
            rep.mc.mean,
            rep.mc.stderr,
            if rep.passed() { "ok" } else { "MISMATCH" }
        );
    }
}
