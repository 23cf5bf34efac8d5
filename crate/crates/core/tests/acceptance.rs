//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All numeric tolerances are zero: every
//! comparison is exact.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use kummer_core::invariants::{
    check_h1_identities, g1_criterion, g1_generators_with_cubes, h1_criterion, h1_listed_generators, is_invariant,
    missing_generators, twist_conjugation_check, verify_generator_list, DiagonalAction, Monomial,
};
use kummer_core::orbifold::invariant_cohomology_dims;
use kummer_core::orbifold::{
    chen_ruan_poincare, closed_form_invariant_dims, closed_form_poincare, enumerate_group, euler_closed, Budget,
    HodgeDiamond, Method, Modulus, Parallelism,
};
use kummer_core::toric::{
    cone_from_chart, junior_elements, lift_action, bundled_chart_sets, verify_chart_crepancy, verify_chart_invariance,
    verify_triangulation, CyclicQuotient,
};
use kummer_core::FracPoly;

/// `(d, n)` pairs of the oracle range.
fn oracle_range() -> Vec<(Modulus, usize)> {
    let mut out = Vec::new();
    for d in Modulus::ALL {
        let top = if d.get() <= 4 { 5 } else { 4 };
        for n in 1..=top {
            out.push((d, n));
        }
    }
    out
}

struct Computed {
    d: Modulus,
    n: usize,
    brute: FracPoly,
    closed: FracPoly,
}

fn compute_all(par: Parallelism) -> Vec<Computed> {
    oracle_range()
        .into_iter()
        .map(|(d, n)| Computed {
            d,
            n,
            brute: chen_ruan_poincare(d, n, Budget::new(), par).expect("within budget"),
            closed: closed_form_poincare(d, n as u32),
        })
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_1(all: &[Computed], seconds: f64) -> Outcome {
    let mut bad = Vec::new();
    for c in all {
        if c.brute.integer_part() != c.closed.integer_part() || !c.brute.has_only_integer_exponents() {
            bad.push(format!("(d={},n={})", c.d, c.n));
        }
    }
    let pass = bad.is_empty() && seconds < 60.0;
    outcome(
        pass,
        format!(
            "brute force vs closed form on {} (d,n) pairs, tolerance 0, {seconds:.2}s (limit 60s){}",
            all.len(),
            if bad.is_empty() { String::new() } else { format!("; mismatches {}", bad.join(" ")) }
        ),
    )
}

fn criterion_2(all: &[Computed]) -> Outcome {
    let mut bad = Vec::new();
    for c in all {
        let e = c.brute.integer_part_euler().expect("integer exponents");
        if e != euler_closed(c.d, c.n as u32) {
            bad.push(format!("(d={},n={}): {e}", c.d, c.n));
        }
    }
    let spots = [(2u32, 2usize, 24i64), (3, 2, 24), (4, 2, 24), (6, 2, 24), (6, 3, 168)];
    for (d, n, want) in spots {
        let c = all.iter().find(|c| c.d.get() as u32 == d && c.n == n).unwrap();
        let got = c.brute.integer_part_euler().unwrap();
        if got != BigInt::from(want) || euler_closed(c.d, n as u32) != BigInt::from(want) {
            bad.push(format!("spot (d={d},n={n}) = {got}, expected {want}"));
        }
    }
    outcome(bad.is_empty(), format!("euler brute = closed on the oracle range and 5 spot values{}", tail(&bad)))
}

fn tail(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; {}", bad.join(", "))
    }
}

fn diamond(c: &Computed, method: Method) -> HodgeDiamond {
    let (poly, frac) = match method {
        Method::Brute => (&c.brute, false),
        Method::Closed => (&c.closed, true),
    };
    HodgeDiamond::from_poincare(c.d, c.n, method, poly, frac).expect("exponents in range")
}

fn criterion_3(all: &[Computed]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for c in all {
        let expected = match (c.d.get(), c.n) {
            (2, 3..=5) => c.n as i64,
            (3 | 4 | 6, 3 | 4) => 0,
            _ => continue,
        };
        for m in [Method::Brute, Method::Closed] {
            checked += 1;
            let h = diamond(c, m);
            let got = h.get(1, c.n - 1);
            if *got != BigInt::from(expected) {
                bad.push(format!("{m} (d={},n={}) h^(1,n-1) = {got}, expected {expected}", c.d, c.n));
            }
        }
    }
    outcome(bad.is_empty(), format!("h^(1,n-1): {checked} checks over both methods{}", tail(&bad)))
}

fn criterion_4(all: &[Computed]) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for c in all {
        for m in [Method::Brute, Method::Closed] {
            count += 1;
            if let Err(e) = diamond(c, m).validate() {
                bad.push(format!("{m} (d={},n={}): {e}", c.d, c.n));
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} diamonds, {} violations{}", bad.len(), tail(&bad)))
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for d in Modulus::ALL {
        for n in 1..=5usize {
            let chars: Vec<Vec<u8>> = enumerate_group(d, n).unwrap().iter().map(|g| g.residues().to_vec()).collect();
            let dims = invariant_cohomology_dims(&chars, n, d.get());
            for (p, row) in dims.iter().enumerate() {
                for (q, &got) in row.iter().enumerate() {
                    count += 1;
                    let want = closed_form_invariant_dims(d, n as u32, p as u32, q as u32);
                    if BigInt::from(got) != want {
                        bad.push(format!("(d={d},n={n},p={p},q={q}): {got} vs {want}"));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} invariant dimensions, exact{}", tail(&bad)))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut charts = 0;
    let mut lifts = 0;
    let mut fans = Vec::new();
    for set in bundled_chart_sets() {
        let q = set.quotient().unwrap();
        let case = set.case.clone().unwrap_or_default();
        let chars = set.ambient_chars.clone().expect("fixture carries characters");
        for (rec, chart) in set.charts.iter().zip(set.charts().unwrap()) {
            charts += 1;
            if let Err(e) = verify_chart_invariance(&chart, &q) {
                bad.push(e.to_string());
            }
            match verify_chart_crepancy(&chart, &q) {
                Ok(rep) if rep.det.abs() == 6 && rep.column_sums.iter().all(|&s| s == 1) => {}
                Ok(rep) => bad.push(format!("{}: det {}", rec.label, rep.det)),
                Err(e) => bad.push(e.to_string()),
            }
            let got = lift_action(&chart, &chars, q.r);
            if Some(&got) == rec.expected_lift.as_ref() {
                lifts += 1;
            } else {
                bad.push(format!("{}: lift {got:?}, expected {:?}", rec.label, rec.expected_lift));
            }
            if let Err(e) = cone_from_chart(&chart, &q) {
                bad.push(e.to_string());
            }
        }
        if case == "ii" || case == "iii" {
            match set.triangulation().and_then(|t| verify_triangulation(&t)) {
                Ok(rep) => fans.push(format!("({case}) {} cones", rep.cones)),
                Err(e) => bad.push(format!("fan ({case}): {e}")),
            }
        }
    }
    let pass = bad.is_empty() && charts == 24 && lifts == 24 && fans.len() == 2;
    outcome(pass, format!("{charts} charts, {lifts}/24 lifts exact, fans {}{}", fans.join(", "), tail(&bad)))
}

fn criterion_7() -> Outcome {
    let q = |r: u32, w: &[u32]| CyclicQuotient::new(r, w.to_vec()).unwrap();
    let none = [q(6, &[1, 1, 5, 5]), q(3, &[1, 1, 2, 2]), q(2, &[1, 1, 1, 1])];
    let some = [q(6, &[1, 1, 4]), q(6, &[1, 2, 3]), q(6, &[1, 1, 2, 2])];
    let mut bad = Vec::new();
    for x in &none {
        if !junior_elements(x).is_empty() {
            bad.push(format!("{x} has juniors {:?}", junior_elements(x)));
        }
    }
    let mut found = Vec::new();
    for x in &some {
        let j = junior_elements(x);
        if j.is_empty() {
            bad.push(format!("{x} has no junior element"));
        }
        found.push(format!("{x}: {j:?}"));
    }
    outcome(bad.is_empty(), format!("3 quotients without juniors; {}{}", found.join(", "), tail(&bad)))
}

/// Every exponent vector in `[0, 8]^k`.
fn box_vectors(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..9usize.pow(k as u32)).map(move |mut e| {
        (0..k)
            .map(|_| {
                let v = (e % 9) as i64;
                e /= 9;
                v
            })
            .collect()
    })
}

fn criterion_8() -> (Outcome, Vec<String>) {
    let mut lines = Vec::new();
    let mut all_pass = true;
    let mut record = |name: &str, pass: bool, detail: String| {
        all_pass &= pass;
        lines.push(format!("    [{}] 8{name}: {detail}", if pass { "PASS" } else { "FAIL" }));
    };

    // (a) divisibility criteria against characters.
    let mut mismatches = 0usize;
    let mut vectors = 0usize;
    for n in [2usize, 3] {
        let g = DiagonalAction::g_family_x_only(n, 1);
        for v in box_vectors(n) {
            vectors += 1;
            mismatches += usize::from(g1_criterion(&v) != is_invariant(&Monomial(v.clone()), &g));
        }
        let h = DiagonalAction::h_family(n, 1);
        for v in box_vectors(2 * n) {
            vectors += 1;
            mismatches += usize::from(h1_criterion(&v[..n], &v[n..]) != is_invariant(&Monomial(v.clone()), &h));
        }
    }
    record(
        "a",
        mismatches == 0,
        format!("criteria vs characters on {vectors} exponent vectors, {mismatches} mismatches"),
    );

    // (b) generator lists up to degree 10.
    for n in [2usize, 3] {
        let g = DiagonalAction::g_family(n, 1);
        let r = verify_generator_list(&g, &g1_generators_with_cubes(n), 10, None);
        record(
            "b",
            r.is_ok(),
            format!(
                "G1 list with cubes, n={n}, degree<=10: {}",
                match &r {
                    Ok(rep) => format!("{} invariant monomials generated", rep.checked),
                    Err(e) => e.to_string(),
                }
            ),
        );
        let h = DiagonalAction::h_family(n, 1);
        let list = h1_listed_generators(n);
        let r = verify_generator_list(&h, &list, 10, None);
        let detail = match &r {
            Ok(rep) => format!("{} invariant monomials generated", rep.checked),
            Err(e) => {
                let missing = missing_generators(&h, &list, 10, None).unwrap();
                let names: Vec<String> = missing.iter().map(|m| h.render(m)).collect();
                format!("{e}; minimal generators missing from the lists: {}", names.join(", "))
            }
        };
        record("b", r.is_ok(), format!("H1 listed generators (even and odd), n={n}, degree<=10: {detail}"));
    }

    // (c) formal identities.
    let mut ids = Vec::new();
    let mut ok = true;
    for n in [2usize, 3, 4] {
        match check_h1_identities(n) {
            Ok(k) => ids.push(format!("n={n}: {k}")),
            Err((label, e)) => {
                ok = false;
                ids.push(format!("n={n}: {label}: {e}"));
            }
        }
    }
    record("c", ok, format!("formal identities {}", ids.join(", ")));

    // (d) twists.
    let mut bad = Vec::new();
    for n in 2..=5usize {
        for (d, t) in [(3u32, 2u32), (4, 3)] {
            if let Err(e) = twist_conjugation_check(d, n, t) {
                bad.push(format!("(d={d},twist={t},n={n}): {e}"));
            }
        }
    }
    record("d", bad.is_empty(), format!("G1->G2 and H1->H3 for n=2..5{}", tail(&bad)));

    let summary = if all_pass { "all sub-checks pass" } else { "a sub-check fails, see below" };
    (outcome(all_pass, summary), lines)
}

fn fingerprint(all: &[Computed]) -> String {
    let records: Vec<_> = all
        .iter()
        .map(|c| {
            serde_json::json!({
                "d": c.d.get(),
                "n": c.n,
                "poincare": c.brute,
                "diamond": diamond(c, Method::Brute),
            })
        })
        .collect();
    serde_json::to_string(&records).unwrap()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let all = compute_all(Parallelism::Global);
    let seconds = start.elapsed().as_secs_f64();

    let mut results: Vec<(u32, &str, Outcome, Vec<String>)> = vec![
        (1, "oracle equivalence", criterion_1(&all, seconds), vec![]),
        (2, "euler characteristics", criterion_2(&all), vec![]),
        (3, "h^(1,n-1) values", criterion_3(&all), vec![]),
        (4, "calabi-yau shape", criterion_4(&all), vec![]),
        (5, "invariant dimensions", criterion_5(), vec![]),
        (6, "toric certification", criterion_6(), vec![]),
        (7, "junior elements", criterion_7(), vec![]),
    ];
    let (o8, lines8) = criterion_8();
    results.push((8, "invariants", o8, lines8));

    let reference = fingerprint(&all);
    let mut runs = Vec::new();
    for par in [Parallelism::Sequential, Parallelism::Threads(1), Parallelism::Threads(4), Parallelism::Global] {
        runs.push((par, fingerprint(&compute_all(par)) == reference));
    }
    let same = runs.iter().all(|(_, s)| *s);
    let o9 = outcome(
        same,
        format!("{} parallelism settings, {} bytes of JSON each, byte-identical: {same}", runs.len(), reference.len()),
    );
    results.push((9, "determinism", o9, vec![]));

    let mut failed = 0;
    for (k, name, o, lines) in &results {
        println!("[{}] criterion {k} ({name}): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        for l in lines {
            println!("{l}");
        }
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
