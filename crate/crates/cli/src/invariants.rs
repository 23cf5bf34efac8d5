use std::path::Path;

use kummer_core::invariants::{
    check_monomial_identity, g1_displayed_generators, g1_generators_with_cubes, generators_up_to_degree,
    h1_even_generators, h1_identity_catalog, h1_listed_generators, h1_odd_generators, standard_substitutions,
    twist_conjugation_check, verify_generator_list, DiagonalAction, Monomial, Substitutions,
};
use kummer_core::InvariantsError;
use serde_json::{json, Value};

use crate::cli::{ActionArgs, Family, Format, InvariantsCommand, ListName};
use crate::read_input;
use crate::report::{json, table, CliError, Report};

pub fn run(cmd: &InvariantsCommand, format: Format) -> Result<Report, CliError> {
    match cmd {
        InvariantsCommand::Gens { action, max_degree } => gens(action, *max_degree, format),
        InvariantsCommand::Verify { action, list, claimed, max_degree } => {
            verify(action, *list, claimed.as_deref(), *max_degree, format)
        }
        InvariantsCommand::Identity { n, file } => identity(*n, file.as_deref(), format),
        InvariantsCommand::Twist { d, n, twist } => twist_check(*d, *n, *twist, format),
    }
}

fn family_d(f: Family) -> u32 {
    match f {
        Family::G1 | Family::G2 => 3,
        Family::H1 | Family::H3 => 4,
    }
}

fn list_family(l: ListName) -> Family {
    match l {
        ListName::G1Displayed | ListName::G1Cubes => Family::G1,
        _ => Family::H1,
    }
}

fn build_action(args: &ActionArgs) -> Result<DiagonalAction, CliError> {
    if let Some(path) = &args.file {
        let text = read_input(path)?;
        let a: DiagonalAction =
            serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        a.validate()?;
        if let Some(d) = args.d {
            if d != a.d {
                return Err(CliError::Usage(format!("--d {d} disagrees with the action file (d = {})", a.d)));
            }
        }
        return Ok(a);
    }
    let family = args.family.ok_or_else(|| CliError::Usage("give --family or --file".into()))?;
    if let Some(d) = args.d {
        if d != family_d(family) {
            return Err(CliError::Usage(format!("--d {d} does not match family of order {}", family_d(family))));
        }
    }
    let n = args.n.ok_or_else(|| CliError::Usage("--n is required with --family".into()))?;
    if n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    let g = |i| if args.with_y { DiagonalAction::g_family(n, i) } else { DiagonalAction::g_family_x_only(n, i) };
    Ok(match family {
        Family::G1 => g(1),
        Family::G2 => g(2),
        Family::H1 => DiagonalAction::h_family(n, 1),
        Family::H3 => DiagonalAction::h_family(n, 3),
    })
}

fn exps(m: &Monomial) -> Value {
    json!(m.exponents())
}

fn gens(args: &ActionArgs, max_degree: u32, format: Format) -> Result<Report, CliError> {
    let a = build_action(args)?;
    let gens = generators_up_to_degree(&a, max_degree, args.budget)?;
    let body = match format {
        Format::Json => json(&json!({
            "action": a, "max_degree": max_degree,
            "generators": gens.iter().map(exps).collect::<Vec<_>>(),
        })),
        Format::Table => {
            let rows: Vec<Vec<String>> = gens
                .iter()
                .map(|m| vec![m.degree().to_string(), a.render(m), format!("{:?}", m.exponents())])
                .collect();
            format!(
                "{}{} generators up to degree {max_degree}\n",
                table(&["degree", "monomial", "exponents"], &rows),
                gens.len()
            )
        }
    };
    Ok(Report::ok(body))
}

fn named_list(l: ListName, n: usize, a: &DiagonalAction) -> Result<Vec<Monomial>, CliError> {
    let list = match l {
        ListName::G1Displayed => g1_displayed_generators(n),
        ListName::G1Cubes => g1_generators_with_cubes(n),
        ListName::H1Even => h1_even_generators(n),
        ListName::H1Odd => h1_odd_generators(n),
        ListName::H1Listed => h1_listed_generators(n),
    };
    if list[0].exponents().len() != a.vars {
        return Err(CliError::Usage(format!(
            "list {l:?} lives on {} variables, the action has {} (try --with-y)",
            list[0].exponents().len(),
            a.vars
        )));
    }
    Ok(list)
}

fn verify(
    args: &ActionArgs,
    list: Option<ListName>,
    claimed: Option<&Path>,
    max_degree: u32,
    format: Format,
) -> Result<Report, CliError> {
    let a = match list {
        // Named lists live on the (x, y) variables.
        Some(l) if args.family.is_none() && args.file.is_none() => {
            build_action(&ActionArgs { family: Some(list_family(l)), with_y: true, ..args.clone() })?
        }
        _ => build_action(args)?,
    };
    let claimed: Vec<Monomial> = match (list, claimed) {
        (Some(l), _) => {
            let n = args.n.ok_or_else(|| CliError::Usage("--n is required with --list".into()))?;
            named_list(l, n, &a)?
        }
        (None, Some(path)) => {
            let text = read_input(path)?;
            serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(CliError::Usage("give --list or --claimed".into())),
    };
    for m in &claimed {
        a.check_length(m)?;
    }
    let outcome = verify_generator_list(&a, &claimed, max_degree, args.budget);
    let (pass, witness, checked) = match outcome {
        Ok(rep) => (true, None, Some(rep.checked)),
        Err(e @ (InvariantsError::NotGenerated { .. } | InvariantsError::ClaimedNotInvariant { .. })) => {
            (false, Some(e.to_string()), None)
        }
        Err(e) => return Err(e.into()),
    };
    let failure = witness.clone();
    let body = match format {
        Format::Json => json(&json!({
            "action": a, "max_degree": max_degree, "claimed": claimed.iter().map(exps).collect::<Vec<_>>(),
            "pass": pass, "checked": checked, "witness": witness,
        })),
        Format::Table => match (pass, witness) {
            (true, _) => format!(
                "pass: {} claimed monomials generate all {} invariant monomials of degree <= {max_degree}\n",
                claimed.len(),
                checked.unwrap_or(0)
            ),
            (false, w) => format!("FAIL: {}\n", w.unwrap_or_default()),
        },
    };
    Ok(Report::checked(body, failure))
}

fn identity(n: Option<usize>, file: Option<&Path>, format: Format) -> Result<Report, CliError> {
    if let Some(path) = file {
        return custom_identity(path, format);
    }
    let ns: Vec<usize> = match n {
        Some(n) if n >= 2 => vec![n],
        Some(_) => return Err(CliError::Usage("n must be at least 2".into())),
        None => vec![2, 3, 4],
    };
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for &n in &ns {
        let subs = standard_substitutions(n);
        for id in h1_identity_catalog(n) {
            let r = check_monomial_identity(&id.lhs, &id.rhs, &subs);
            if let Err(e) = &r {
                failures.push(format!("n = {n}: {}: {e}", id.label));
            }
            results.push((n, id.label, r.err().map(|e| e.to_string())));
        }
    }
    let failure = (!failures.is_empty()).then(|| failures.join("; "));
    let body = match format {
        Format::Json => json(&json!({
            "identities": results.iter().map(|(n, l, e)| json!({"n": n, "label": l, "pass": e.is_none(), "error": e})).collect::<Vec<_>>(),
        })),
        Format::Table => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|(n, l, e)| {
                    vec![
                        n.to_string(),
                        l.clone(),
                        if e.is_none() { "pass".into() } else { format!("FAIL {}", e.as_deref().unwrap_or("")) },
                    ]
                })
                .collect();
            table(&["n", "identity", "verdict"], &rows)
        }
    };
    Ok(Report::checked(body, failure))
}

fn custom_identity(path: &Path, format: Format) -> Result<Report, CliError> {
    let text = read_input(path)?;
    let parse = |e: serde_json::Error| CliError::Parse(format!("{}: {e}", path.display()));
    let v: Value = serde_json::from_str(&text).map_err(parse)?;
    let lhs: Monomial = serde_json::from_value(v["lhs"].clone()).map_err(parse)?;
    let rhs: Vec<(String, i64)> = serde_json::from_value(v["rhs"].clone()).map_err(parse)?;
    let subs: Substitutions = serde_json::from_value(v["substitutions"].clone()).map_err(parse)?;
    let r = check_monomial_identity(&lhs, &rhs, &subs);
    let failure = r.as_ref().err().map(ToString::to_string);
    let body = match format {
        Format::Json => json(&json!({"pass": r.is_ok(), "error": failure})),
        Format::Table => match &failure {
            None => "pass\n".to_string(),
            Some(e) => format!("FAIL: {e}\n"),
        },
    };
    match r {
        Err(InvariantsError::UnknownName(_)) | Err(InvariantsError::MonomialLength { .. }) => {
            Err(CliError::Usage(failure.unwrap_or_default()))
        }
        _ => Ok(Report::checked(body, failure)),
    }
}

fn twist_check(d: u32, n: usize, twist: Option<u32>, format: Format) -> Result<Report, CliError> {
    if n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    if d < 2 {
        return Err(CliError::Usage("d must be at least 2".into()));
    }
    let t = twist.unwrap_or(d - 1);
    let (src, dst) = match d {
        3 => ("G1".to_string(), format!("G{t}")),
        4 => ("H1".to_string(), format!("H{t}")),
        _ => (format!("family 1 mod {d}"), format!("family {t} mod {d}")),
    };
    let outcome = twist_conjugation_check(d, n, t);
    let (report, failure) = match outcome {
        Ok(r) => (Some(r), None),
        Err(e @ InvariantsError::TwistNotCoprime { .. }) => return Err(CliError::Usage(e.to_string())),
        Err(e) => (None, Some(e.to_string())),
    };
    let body = match format {
        Format::Json => json(&json!({
            "d": d, "n": n, "twist": t, "source": src, "target": dst,
            "pass": failure.is_none(), "report": report, "error": failure,
        })),
        Format::Table => match (&report, &failure) {
            (Some(r), _) => format!(
                "{src} -> {dst}: pass (d = {d}, n = {n}, twist {t}, orders {} -> {})\n",
                r.source_order, r.target_order
            ),
            (_, f) => format!("{src} -> {dst}: FAIL {}\n", f.as_deref().unwrap_or("")),
        },
    };
    Ok(Report::checked(body, failure))
}
