//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p tube-torsion --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use tube_torsion::arc_model::{ext1_dim, is_rigid, orbits_cross};
use tube_torsion::enumeration::{
    alpha, asymptotic_check, csp_verify, lagrange_coefficient, refined_table, rho, series_p,
    series_torsion, torsion_count,
};
use tube_torsion::polygon::{
    decompose_base, enumerate_polygon, enumerate_polygon_brute, statistics_polygon,
    statistics_recursive,
};
use tube_torsion::torsion::{
    compose, decompose, enumerate_brute, enumerate_structured, from_pointed_cycle, orbit_count,
    orbit_count_direct, statistics, structured_masks, to_pointed_cycle,
};
use tube_torsion::{CellStatistics, MPoly, PeriodicDiagram};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counting_triangle() -> Outcome {
    let expect = [2u64, 6, 32, 182, 1092];
    for n in 1..=5 {
        let brute = BigInt::from(2 * enumerate_brute(n).map_err(|e| e.to_string())?.len());
        let structured = BigInt::from(2 * enumerate_structured(n).map_err(|e| e.to_string())?.len());
        let formula = torsion_count(n);
        ensure(brute == structured && structured == formula && formula == expect[n - 1].into(), || {
            format!("n={n}: brute {brute}, structured {structured}, formula {formula}")
        })?;
    }
    Ok("T_1..T_5 = 2, 6, 32, 182, 1092 by brute force, structure and formula".into())
}

fn structured_vs_formula() -> Outcome {
    let mut seen = Vec::new();
    for n in 6..=9 {
        let count = BigInt::from(2 * structured_masks(n, 9).map_err(|e| e.to_string())?.len());
        ensure(count == torsion_count(n), || format!("n={n}: {count} vs {}", torsion_count(n)))?;
        seen.push(count.to_string());
    }
    Ok(format!("T_6..T_9 = {}", seen.join(", ")))
}

fn histogram(halves: &[PeriodicDiagram]) -> BTreeMap<CellStatistics, BigInt> {
    let mut h = BTreeMap::new();
    for x in halves {
        *h.entry(statistics(x).unwrap()).or_insert_with(BigInt::zero) += 2;
    }
    h
}

fn refined_counts() -> Outcome {
    for n in 1..=5 {
        let h = histogram(&enumerate_structured(n).map_err(|e| e.to_string())?);
        ensure(h == refined_table(n), || format!("histogram mismatch at n={n}"))?;
    }
    for n in 1..=30 {
        let sum: BigInt = refined_table(n).values().sum();
        ensure(sum == torsion_count(n), || format!("refined sum mismatch at n={n}"))?;
    }
    Ok("histograms n<=5, sums n<=30".into())
}

fn series_identities() -> Outcome {
    let t = series_torsion(20);
    for n in 1..=20 {
        ensure(t.coeff(n).eval_ones() == torsion_count(n), || format!("all-ones mismatch at n={n}"))?;
    }
    for n in 1..=10 {
        let mut expect = MPoly::zero();
        for (s, v) in refined_table(n) {
            let (k, l, m) = s.as_tuple();
            expect.add_term([k as u32, l as u32, m as u32], v);
        }
        ensure(t.coeff(n) == &expect, || format!("refined mismatch at n={n}"))?;
    }
    for n in 1..=12 {
        ensure(&lagrange_coefficient(n) == t.coeff(n), || format!("Lagrange mismatch at n={n}"))?;
    }
    let p = series_p(3);
    let low = [p.coeff(1).to_string(), p.coeff(2).to_string(), p.coeff(3).to_string()];
    ensure(low == ["1", "x", "2x^2 + y1 + y2"], || format!("P low coefficients {low:?}"))?;
    Ok("P = z + xz^2 + (2x^2 + y1 + y2)z^3 + ...".into())
}

fn polygon_counts() -> Outcome {
    let p = series_p(6);
    let mut counts = Vec::new();
    for m in 1..=5 {
        let brute = enumerate_polygon_brute(m).map_err(|e| e.to_string())?;
        ensure(BigInt::from(brute.len()) == p.coeff(m).eval_ones(), || format!("m={m}"))?;
        counts.push(brute.len().to_string());
    }
    ensure(counts == ["1", "1", "4", "17", "82"], || format!("counts {counts:?}"))?;
    for m in 1..=6 {
        for d in enumerate_polygon(m).map_err(|e| e.to_string())? {
            let parts = decompose_base(&d).map_err(|e| e.to_string())?;
            ensure(parts.reassemble().map_err(|e| e.to_string())? == d, || format!("reassembly of {}", d.to_json()))?;
            ensure(statistics_recursive(&d).unwrap() == statistics_polygon(&d).unwrap(), || {
                format!("face statistics of {}", d.to_json())
            })?;
        }
    }
    Ok(format!("counts {}", counts.join(", ")))
}

fn round_trip(x: &PeriodicDiagram) -> Result<(), String> {
    let w = decompose(x).map_err(|e| e.to_string())?;
    ensure(&compose(&w) == x, || format!("compose(decompose) at {x}"))?;
    ensure(decompose(&compose(&w)).ok().as_ref() == Some(&w), || format!("decompose(compose) at {x}"))?;
    let pc = to_pointed_cycle(x).map_err(|e| e.to_string())?;
    let back = from_pointed_cycle(&pc, x.rank()).map_err(|e| e.to_string())?;
    ensure(&back == x, || format!("pointed cycle at {x}"))?;
    ensure(to_pointed_cycle(&back).ok().as_ref() == Some(&pc), || format!("pointed cycle inverse at {x}"))
}

fn bijections() -> Outcome {
    for n in 1..=4 {
        for x in enumerate_brute(n).map_err(|e| e.to_string())? {
            round_trip(&x)?;
        }
    }
    for n in 6..=8 {
        let sample = sample_halves(n, 1000, 2024 + n as u64);
        ensure(sample.len() == 1000, || format!("only {} samples at n={n}", sample.len()))?;
        for x in &sample {
            round_trip(x)?;
        }
    }
    let x = ten_gon_example();
    let pairs: Vec<String> = decompose(&x)
        .map_err(|e| e.to_string())?
        .pairs()
        .iter()
        .map(|p| {
            let arcs: Vec<String> = p.arcs.iter().map(|a| format!("({},{})", a[0] % 10, a[1] % 10)).collect();
            format!("(({},{}),{{{}}})", p.top[0] % 10, p.top[1] % 10, arcs.join(","))
        })
        .collect();
    let expect = [
        "((2,3),{})",
        "((3,6),{(3,5),(3,6),(4,6)})",
        "((6,8),{(6,8)})",
        "((8,2),{(8,1),(8,2),(9,1)})",
    ];
    ensure(pairs == expect, || format!("n=10 example decomposes into {pairs:?}"))?;
    Ok("exhaustive n<=4, 1000 samples each for n=6..8, n=10 example has 4 pairs".into())
}

fn cyclic_sieving() -> Outcome {
    let mut rows = 0;
    for n in 1..=6 {
        let report = csp_verify(n).map_err(|e| e.to_string())?;
        if let Some(bad) = report.mismatches().next() {
            return Err(format!("{bad:?}"));
        }
        rows += report.rows.len();
    }
    Ok(format!("{rows} (n, d, k, l, m) rows, all exact"))
}

fn burnside() -> Outcome {
    for n in 1..=5 {
        let direct = orbit_count_direct(n).map_err(|e| e.to_string())?;
        ensure(direct == orbit_count(n), || format!("n={n}: direct {direct} vs formula {}", orbit_count(n)))?;
    }
    ensure(orbit_count(2) == BigInt::from(4), || "n=2 orbit count".into())?;
    Ok("formula = direct partition for n<=5; n=2 gives 4".into())
}

fn asymptotics() -> Outcome {
    let (r, a) = (rho(), alpha());
    ensure((r - 6.847333996370022).abs() < 1e-12, || format!("rho = {r}"))?;
    ensure((a - 0.2658656601482029).abs() < 1e-12, || format!("alpha = {a}"))?;
    let (ratio, est) = asymptotic_check(60);
    ensure((ratio - r).abs() / r < 0.02, || format!("ratio {ratio}"))?;
    ensure((est - a).abs() / a < 0.05, || format!("alpha estimate {est}"))?;
    Ok(format!("rho = {r:.15}, alpha = {a:.16}; n=60: ratio {ratio:.6}, alpha estimate {est:.6}"))
}

fn property_suites() -> Outcome {
    for n in 1..=4 {
        let orbits = all_orbits(n, 2 * n as i64);
        for a in &orbits {
            for b in &orbits {
                let e = ext1_dim(a, b).unwrap();
                ensure(e == ext1_dim(b, a).unwrap(), || format!("Ext symmetry {a} {b}"))?;
                ensure((e > 0) == orbits_cross(a, b).unwrap(), || format!("Ext vs crossing {a} {b}"))?;
            }
        }
        for a in all_orbits(n, 3 * n as i64) {
            ensure(is_rigid(&a) == (a.len() <= n as i64), || format!("rigidity {a}"))?;
        }
        for x in enumerate_brute(n).unwrap() {
            check_finite_half(&x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 5..=6 {
        for _ in 0..200 {
            check_finite_half(&sample_halves_cached(n, &mut rng));
        }
        let orbits = all_orbits(n, 2 * n as i64);
        for a in &orbits {
            for b in &orbits {
                let e = ext1_dim(a, b).unwrap();
                ensure(e == ext1_dim(b, a).unwrap() && (e > 0) == orbits_cross(a, b).unwrap(), || {
                    format!("Ext at {a} {b}")
                })?;
            }
        }
    }
    Ok("exhaustive n<=4, randomized n=5,6".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("counting triangle", counting_triangle, Duration::from_secs(120)),
        ("structured vs formula", structured_vs_formula, Duration::from_secs(300)),
        ("refined counts", refined_counts, Duration::MAX),
        ("series identities", series_identities, Duration::MAX),
        ("polygon counts", polygon_counts, Duration::MAX),
        ("bijection round trips", bijections, Duration::MAX),
        ("cyclic sieving", cyclic_sieving, Duration::MAX),
        ("Burnside", burnside, Duration::MAX),
        ("asymptotics", asymptotics, Duration::from_secs(10)),
        ("property suites", property_suites, Duration::MAX),
    ];
    let mut failed = 0;
    for (idx, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.1?}, limit {limit:.0?}")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
