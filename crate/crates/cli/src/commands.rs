//! One function per subcommand. Each writes its records to `out` and returns
//! an error whose [`exit_code`](crate::CliError::exit_code) the binary uses.

use std::collections::{BTreeMap, HashSet};
use std::io::{self, Read, Write};

use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use tube_torsion::enumeration::{
    csp_verify_with_cap, json_number, lagrange_coefficient, refined_table, series_p,
    series_torsion, torsion_count, SeriesPoly,
};
use tube_torsion::torsion::{
    compose, decompose, enumerate_brute_with_cap, enumerate_structured_with_cap,
    from_pointed_cycle, is_finite_half, orbit_count,
    orbit_count_direct_with_cap, orbit_count_refined, orbit_count_refined_direct_with_cap,
    perp_contains, perp_enumerate, statistics, to_pointed_cycle, WingDecomposition, WingPair,
};
use tube_torsion::{Arc, CellStatistics, FiniteSide, MPoly, PeriodicDiagram, TorsionPair};

use crate::render::render_svg;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Size limits for the enumerators.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub brute: usize,
    pub structured: usize,
}

fn require_rank(n: usize) -> CliResult {
    if n == 0 {
        return Err(CliError::Input("rank must be at least 1".into()));
    }
    Ok(())
}

fn require_cap(what: &str, n: usize, cap: usize) -> CliResult {
    if n > cap {
        return Err(CliError::Cap(format!("{what} {n} exceeds the cap {cap}")));
    }
    Ok(())
}

/// Reads a whole file, or standard input for `-`.
pub fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
    }
}

fn json_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn line_error(line: usize, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("line {line}: {e}"))
}

fn write_json_line(out: &mut dyn Write, value: &impl Serialize) -> CliResult {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn count(out: &mut dyn Write, n: usize, refined: bool, format: Format) -> CliResult {
    require_rank(n)?;
    if !refined {
        let t = torsion_count(n);
        match format {
            Format::Text => writeln!(out, "{t}")?,
            Format::Csv => writeln!(out, "n,count\n{n},{t}")?,
            Format::Json => write_json_line(out, &json!({"n": n, "count": json_number(&t)}))?,
        }
        return Ok(());
    }
    write_statistics_table(out, n, &refined_table(n), "count", format)
}

fn write_statistics_table(
    out: &mut dyn Write,
    n: usize,
    table: &BTreeMap<CellStatistics, BigInt>,
    label: &str,
    format: Format,
) -> CliResult {
    match format {
        Format::Text => writeln!(out, "{:>4} {:>4} {:>4} {label}", "k", "l", "m")?,
        Format::Csv => writeln!(out, "n,k,l,m,{label}")?,
        Format::Json => {}
    }
    for (s, v) in table {
        let (k, l, m) = s.as_tuple();
        match format {
            Format::Text => writeln!(out, "{k:>4} {l:>4} {m:>4} {v}")?,
            Format::Csv => writeln!(out, "{n},{k},{l},{m},{v}")?,
            Format::Json => write_json_line(
                out,
                &json!({"n": n, "k": k, "l": l, "m": m, label: json_number(v)}),
            )?,
        }
    }
    Ok(())
}

/// Every torsion pair at rank `n` as JSON lines: for each finite half in
/// enumeration order, the pair with that half on the left, then on the right.
pub fn enumerate(out: &mut dyn Write, n: usize, caps: Caps) -> CliResult {
    require_rank(n)?;
    require_cap("rank", n, caps.structured)?;
    for x in enumerate_structured_with_cap(n, caps.structured)? {
        for side in [FiniteSide::Left, FiniteSide::Right] {
            let pair = TorsionPair::new(x.clone(), side)?;
            writeln!(out, "{}", pair.to_json())?;
        }
    }
    Ok(())
}

enum Status {
    Pass,
    Fail,
    Skip,
}

struct Matrix<'a> {
    out: &'a mut dyn Write,
    failures: Vec<String>,
}

impl Matrix<'_> {
    fn row(&mut self, name: &str, status: Status, detail: impl std::fmt::Display) -> CliResult {
        let tag = match status {
            Status::Pass => "PASS",
            Status::Fail => {
                self.failures.push(name.to_string());
                "FAIL"
            }
            Status::Skip => "SKIP",
        };
        writeln!(self.out, "  {name:<28} {tag}  {detail}")?;
        Ok(())
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl std::fmt::Display) -> CliResult {
        self.row(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

fn series_as_table(p: &MPoly) -> BTreeMap<CellStatistics, BigInt> {
    p.terms()
        .map(|(e, c)| {
            let s = CellStatistics::new(e[0] as usize, e[1] as usize, e[2] as usize);
            (s, c.clone())
        })
        .collect()
}

fn histogram(halves: &[PeriodicDiagram]) -> Result<BTreeMap<CellStatistics, BigInt>, String> {
    let stats: Vec<CellStatistics> = halves
        .par_iter()
        .map(|x| statistics(x).map_err(|e| format!("{x}: {e}")))
        .collect::<Result<_, _>>()?;
    let mut h = BTreeMap::new();
    for s in stats {
        *h.entry(s).or_insert_with(BigInt::default) += 2;
    }
    Ok(h)
}

/// The first finite half whose wing or pointed-cycle round trip fails.
fn round_trip_failure(halves: &[PeriodicDiagram]) -> Option<String> {
    halves.par_iter().find_map_any(|x| {
        let ok = (|| {
            let w = decompose(x).ok()?;
            let back = compose(&w);
            let w_json = serde_json::to_string(&w).ok()?;
            let w_again: WingDecomposition = serde_json::from_str(&w_json).ok()?;
            let pc = to_pointed_cycle(x).ok()?;
            let from_pc = from_pointed_cycle(&pc, x.rank()).ok()?;
            let pair = TorsionPair::new(x.clone(), FiniteSide::Right).ok()?;
            let pair_again: TorsionPair = serde_json::from_str(&pair.to_json()).ok()?;
            Some(back == *x && w_again == w && from_pc == *x && pair_again == pair)
        })();
        (ok != Some(true)).then(|| x.to_json())
    })
}

/// Cross-checks every available method at rank `n` and prints a pass/fail
/// matrix. Enumeration checks are skipped beyond the caps; the closed
/// formulas are always compared with the series.
pub fn verify(out: &mut dyn Write, n: usize, caps: Caps) -> CliResult {
    require_rank(n)?;
    writeln!(out, "verify n={n}")?;
    let mut m = Matrix {
        out,
        failures: Vec::new(),
    };
    let formula = torsion_count(n);
    let table = refined_table(n);

    let series = series_torsion(n);
    let coeff = series.coeff(n);
    m.check("formula = series", coeff.eval_ones() == formula, format!("T_{n} = {formula}"))?;
    m.check(
        "refined formula = series",
        series_as_table(coeff) == table,
        format!("{} statistics triples", table.len()),
    )?;
    m.check("Lagrange = series", &lagrange_coefficient(n) == coeff, "")?;
    let refined_sum: BigInt = table.values().sum();
    m.check("refined sum = formula", refined_sum == formula, "")?;
    let orbits_refined_sum: BigInt = orbit_count_refined(n).values().sum();
    m.check("refined Burnside sum", orbits_refined_sum == orbit_count(n), format!("{} orbits", orbit_count(n)))?;

    let structured = if n <= caps.structured {
        Some(enumerate_structured_with_cap(n, caps.structured)?)
    } else {
        None
    };
    let Some(halves) = structured else {
        let why = format!("rank {n} exceeds the structured cap {}", caps.structured);
        for name in [
            "brute = structured",
            "structured = formula",
            "structured halves valid",
            "refined histogram",
            "fixed points",
            "Burnside direct",
            "cyclic sieving",
            "round trips",
        ] {
            m.row(name, Status::Skip, &why)?;
        }
        return finish(m);
    };

    if n <= caps.brute {
        let brute = enumerate_brute_with_cap(n, caps.brute)?;
        m.check("brute = structured", brute == halves, format!("{} finite halves", brute.len()))?;
    } else {
        m.row("brute = structured", Status::Skip, format!("rank {n} exceeds the brute cap {}", caps.brute))?;
    }
    let enumerated = BigInt::from(2 * halves.len());
    m.check("structured = formula", enumerated == formula, format!("{enumerated} pairs"))?;

    let distinct: HashSet<&PeriodicDiagram> = halves.iter().collect();
    let valid = distinct.len() == halves.len()
        && halves.par_iter().all(is_finite_half)
        && halves.par_iter().all(|x| distinct.contains(&x.tau()));
    m.check("structured halves valid", valid, "distinct, Ptolemy, closed under τ")?;

    match histogram(&halves) {
        Ok(h) => m.check("refined histogram", h == table, "")?,
        Err(e) => m.check("refined histogram", false, e)?,
    }

    let mut fixed_ok = true;
    for d in (1..=n).filter(|d| n % d == 0) {
        let fixed = BigInt::from(2 * halves.par_iter().filter(|x| x.tau_pow(d) == **x).count());
        fixed_ok &= fixed == torsion_count(d);
    }
    m.check("fixed points", fixed_ok, "τ^d fixes T_d pairs for d | n")?;

    let direct = orbit_count_direct_with_cap(n, caps.structured)?;
    let refined_direct = orbit_count_refined_direct_with_cap(n, caps.structured)?;
    m.check(
        "Burnside direct",
        direct == orbit_count(n) && refined_direct == orbit_count_refined(n),
        format!("{direct} orbits"),
    )?;

    let report = csp_verify_with_cap(n, caps.structured)?;
    let bad = report.mismatches().count();
    m.check("cyclic sieving", bad == 0, format!("{} rows, {bad} mismatched", report.rows.len()))?;

    match round_trip_failure(&halves) {
        None => m.check("round trips", true, "wings, pointed cycles, JSON")?,
        Some(x) => m.check("round trips", false, format!("fails at {x}"))?,
    }
    finish(m)
}

fn finish(m: Matrix<'_>) -> CliResult {
    if m.failures.is_empty() {
        writeln!(m.out, "all checks passed")?;
        Ok(())
    } else {
        writeln!(m.out, "{} checks failed", m.failures.len())?;
        Err(CliError::Mismatch(m.failures.join(", ")))
    }
}

/// The cyclic sieving table at rank `n`; fails after printing if any row
/// does not match.
pub fn sieve(out: &mut dyn Write, n: usize, caps: Caps, format: Format) -> CliResult {
    require_rank(n)?;
    require_cap("rank", n, caps.structured)?;
    let report = csp_verify_with_cap(n, caps.structured)?;
    match format {
        Format::Text => writeln!(
            out,
            "{:>3} {:>3} {:>4} {:>4} {:>4} {:>12} {:>12}  match",
            "n", "d", "k", "l", "m", "polyValue", "fixedCount"
        )?,
        Format::Csv => writeln!(out, "n,d,k,l,m,polyValue,fixedCount,match")?,
        Format::Json => {}
    }
    for r in &report.rows {
        let (k, l, m) = r.statistics.as_tuple();
        match format {
            Format::Text => writeln!(
                out,
                "{:>3} {:>3} {k:>4} {l:>4} {m:>4} {:>12} {:>12}  {}",
                r.n,
                r.d,
                r.poly_value,
                r.fixed_count,
                if r.matches() { "yes" } else { "NO" }
            )?,
            Format::Csv => writeln!(
                out,
                "{},{},{k},{l},{m},{},{},{}",
                r.n,
                r.d,
                r.poly_value,
                r.fixed_count,
                r.matches()
            )?,
            Format::Json => write_json_line(out, r)?,
        }
    }
    let bad = report.mismatches().count();
    if bad > 0 {
        return Err(CliError::Mismatch(format!("{bad} sieving rows do not match")));
    }
    Ok(())
}

/// Orbit counts under `τ` by the Cauchy–Frobenius formula, cross-checked by
/// direct partition when `n` is within the structured cap.
pub fn orbits(out: &mut dyn Write, n: usize, refined: bool, caps: Caps, format: Format) -> CliResult {
    require_rank(n)?;
    let within = n <= caps.structured;
    if refined {
        let table = orbit_count_refined(n);
        write_statistics_table(out, n, &table, "orbits", format)?;
        if within && orbit_count_refined_direct_with_cap(n, caps.structured)? != table {
            return Err(CliError::Mismatch("refined orbit counts differ from direct partition".into()));
        }
        return Ok(());
    }
    let count = orbit_count(n);
    match format {
        Format::Text => writeln!(out, "{count}")?,
        Format::Csv => writeln!(out, "n,orbits\n{n},{count}")?,
        Format::Json => write_json_line(out, &json!({"n": n, "orbits": json_number(&count)}))?,
    }
    if within {
        let direct = orbit_count_direct_with_cap(n, caps.structured)?;
        if direct != count {
            return Err(CliError::Mismatch(format!("direct partition gives {direct}")));
        }
    }
    Ok(())
}

/// Parses `i,j` into an arc.
pub fn parse_arc(s: &str) -> CliResult<Arc> {
    let bad = || CliError::Input(format!("expected an arc as i,j but got {s:?}"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    let i: i64 = i.trim().parse().map_err(|_| bad())?;
    let j: i64 = j.trim().parse().map_err(|_| bad())?;
    Ok(Arc::new(i, j)?)
}

pub fn parse_diagram(s: &str) -> CliResult<PeriodicDiagram> {
    Ok(PeriodicDiagram::from_json(s.trim())?)
}

/// Membership of `arc` in the perpendicular category of `x`, or the orbits
/// of the perpendicular category up to length `max_len`.
pub fn perp(
    out: &mut dyn Write,
    x: &PeriodicDiagram,
    arc: Option<Arc>,
    max_len: Option<i64>,
    format: Format,
) -> CliResult {
    match (arc, max_len) {
        (Some(a), None) => {
            let inside = perp_contains(x, &a);
            match format {
                Format::Text => writeln!(out, "{inside}")?,
                Format::Csv => writeln!(out, "i,j,in_perp\n{},{},{inside}", a.start(), a.end())?,
                Format::Json => write_json_line(out, &json!({"arc": [a.start(), a.end()], "in_perp": inside}))?,
            }
        }
        (None, Some(l)) => {
            if l < 2 {
                return Err(CliError::Input(format!("--max-len must be at least 2, got {l}")));
            }
            let p = perp_enumerate(x, l);
            match format {
                Format::Text => {
                    for o in p.orbits() {
                        writeln!(out, "{o}")?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "i,j")?;
                    for a in p.reps() {
                        writeln!(out, "{},{}", a.start(), a.end())?;
                    }
                }
                Format::Json => writeln!(out, "{}", p.to_json())?,
            }
        }
        _ => return Err(CliError::Input("give exactly one of --arc and --max-len".into())),
    }
    Ok(())
}

pub fn render(out: &mut dyn Write, input: &str) -> CliResult {
    let pair: TorsionPair = serde_json::from_str(input.trim())?;
    out.write_all(render_svg(&pair).as_bytes())?;
    Ok(())
}

/// Coefficients of `P(z)`, or of the torsion series, from `z^1` to `z^order`.
pub fn series(out: &mut dyn Write, order: usize, torsion: bool, format: Format) -> CliResult {
    if order == 0 {
        return Err(CliError::Input("series order must be at least 1".into()));
    }
    let s: SeriesPoly = if torsion { series_torsion(order) } else { series_p(order) };
    if format == Format::Csv {
        writeln!(out, "power,coefficient")?;
    }
    for k in 1..=order {
        let c = s.coeff(k).to_string();
        match format {
            Format::Text => writeln!(out, "z^{k}: {c}")?,
            Format::Csv => writeln!(out, "{k},\"{c}\"")?,
            Format::Json => write_json_line(out, &json!({"power": k, "coefficient": c}))?,
        }
    }
    Ok(())
}

/// A wing decomposition record; `finite_side` is carried through when the
/// input was a torsion pair so that `compose` can restore it.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WingRecord {
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    finite_side: Option<FiniteSide>,
    pairs: Vec<WingPair>,
}

/// Reads finite halves or torsion pairs, one JSON record per line, and
/// writes their wing decompositions.
pub fn decompose_lines(out: &mut dyn Write, input: &str) -> CliResult {
    for (line, text) in json_lines(input) {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| line_error(line, e))?;
        let (half, side) = if value.get("finite_side").is_some() {
            let pair: TorsionPair = serde_json::from_value(value).map_err(|e| line_error(line, e))?;
            (pair.finite_half().clone(), Some(pair.finite_side()))
        } else {
            let x: PeriodicDiagram = serde_json::from_value(value).map_err(|e| line_error(line, e))?;
            (x, None)
        };
        let w = decompose(&half).map_err(|e| line_error(line, e))?;
        write_json_line(
            out,
            &WingRecord {
                rank: w.rank(),
                finite_side: side,
                pairs: w.pairs(),
            },
        )?;
    }
    Ok(())
}

/// Inverse of [`decompose_lines`].
pub fn compose_lines(out: &mut dyn Write, input: &str) -> CliResult {
    for (line, text) in json_lines(input) {
        let rec: WingRecord = serde_json::from_str(text).map_err(|e| line_error(line, e))?;
        let w = WingDecomposition::from_pairs(rec.rank, &rec.pairs).map_err(|e| line_error(line, e))?;
        let x = compose(&w);
        match rec.finite_side {
            Some(side) => writeln!(out, "{}", TorsionPair::new(x, side)?.to_json())?,
            None => writeln!(out, "{}", x.to_json())?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAPS: Caps = Caps {
        brute: 5,
        structured: 9,
    };

    fn run(f: impl FnOnce(&mut dyn Write) -> CliResult) -> (String, CliResult) {
        let mut buf = Vec::new();
        let r = f(&mut buf);
        (String::from_utf8(buf).unwrap(), r)
    }

    #[test]
    fn count_formats() {
        assert_eq!(run(|o| count(o, 5, false, Format::Text)).0, "1092\n");
        let (csv, _) = run(|o| count(o, 2, true, Format::Csv));
        assert_eq!(csv, "n,k,l,m,count\n2,0,0,0,2\n2,1,0,0,4\n");
        let (json, _) = run(|o| count(o, 2, false, Format::Json));
        assert_eq!(json, "{\"n\":2,\"count\":6}\n");
    }

    #[test]
    fn verify_small_ranks() {
        for n in 1..=4 {
            let (text, r) = run(|o| verify(o, n, CAPS));
            assert!(r.is_ok(), "{text}");
            assert!(text.ends_with("all checks passed\n"));
        }
    }

    #[test]
    fn verify_degraded_beyond_caps() {
        let caps = Caps { brute: 2, structured: 3 };
        let (text, r) = run(|o| verify(o, 12, caps));
        assert!(r.is_ok(), "{text}");
        assert!(text.contains("SKIP"));
    }

    #[test]
    fn cap_errors() {
        let (_, r) = run(|o| enumerate(o, 10, CAPS));
        assert_eq!(r.unwrap_err().exit_code(), 3);
    }

    #[test]
    fn arc_parsing() {
        assert_eq!(parse_arc("1, 3").unwrap(), Arc::new(1, 3).unwrap());
        assert!(parse_arc("1,2").is_err());
        assert!(parse_arc("13").is_err());
    }

    #[test]
    fn wing_records_round_trip() {
        let (lines, _) = run(|o| enumerate(o, 3, CAPS));
        let (wings, r) = run(|o| decompose_lines(o, &lines));
        r.unwrap();
        let (back, r) = run(|o| compose_lines(o, &wings));
        r.unwrap();
        assert_eq!(back, lines);
    }
}
