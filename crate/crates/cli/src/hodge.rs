use kummer_core::orbifold::{
    chen_ruan_poincare, euler_closed, hodge_diamond, Budget, HodgeDiamond, Method, Modulus, Parallelism,
};
use kummer_core::FracPolyError;
use serde_json::{json, Value};

use crate::cli::{Format, HodgeArgs, MethodArg};
use crate::report::{json, table, CliError, Report};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum View {
    Grid,
    Diamond,
}

struct Computed {
    d: Modulus,
    n: usize,
    brute: Option<HodgeDiamond>,
    closed: Option<HodgeDiamond>,
}

impl Computed {
    fn primary(&self) -> &HodgeDiamond {
        self.closed.as_ref().or(self.brute.as_ref()).expect("at least one method ran")
    }

    fn diff(&self) -> Vec<Value> {
        match (&self.brute, &self.closed) {
            (Some(b), Some(c)) => b
                .diff(c)
                .into_iter()
                .map(|(p, q, x, y)| json!({"p": p, "q": q, "brute": x.to_string(), "closed": y.to_string()}))
                .collect(),
            _ => Vec::new(),
        }
    }
}

fn compute(args: &HodgeArgs, par: Parallelism) -> Result<Computed, CliError> {
    let d = Modulus::new(args.d)?;
    let budget = args.budget.map_or_else(Budget::new, Budget::with_max_dimension);
    let run = |m: Method| hodge_diamond(d, args.n, m, budget, par);
    let brute = matches!(args.method, MethodArg::Brute | MethodArg::Both).then(|| run(Method::Brute)).transpose()?;
    let closed = matches!(args.method, MethodArg::Closed | MethodArg::Both).then(|| run(Method::Closed)).transpose()?;
    Ok(Computed { d, n: args.n, brute, closed })
}

fn mismatch(diff: &[Value]) -> Option<String> {
    (!diff.is_empty()).then(|| format!("brute force and closed form differ in {} entries", diff.len()))
}

fn grid(h: &HodgeDiamond) -> String {
    let n = h.n;
    let mut header = vec!["p\\q".to_string()];
    header.extend((0..=n).map(|q| q.to_string()));
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|p| std::iter::once(p.to_string()).chain((0..=n).map(|q| h.get(p, q).to_string())).collect())
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    table(&header, &rows)
}

fn diff_table(diff: &[Value]) -> String {
    let rows: Vec<Vec<String>> = diff
        .iter()
        .map(|v| {
            ["p", "q", "brute", "closed"]
                .iter()
                .map(|k| match &v[*k] {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect()
        })
        .collect();
    table(&["p", "q", "brute", "closed"], &rows)
}

pub fn hodge(args: &HodgeArgs, format: Format, par: Parallelism, view: View) -> Result<Report, CliError> {
    if view == View::Diamond && args.p.is_some() {
        return Err(CliError::Usage("--p/--q apply to `hodge` only".into()));
    }
    let c = compute(args, par)?;
    if let (Some(p), Some(q)) = (args.p, args.q) {
        if p > c.n || q > c.n {
            return Err(CliError::Usage(format!("p and q must be at most n = {}", c.n)));
        }
    }
    let diff = c.diff();
    let failure = mismatch(&diff);
    let body = match format {
        Format::Json => {
            let one = |h: &HodgeDiamond| -> Value {
                match (args.p, args.q) {
                    (Some(p), Some(q)) => {
                        json!({"d": c.d.get(), "n": c.n, "method": h.method, "p": p, "q": q, "value": h.get(p, q).to_string()})
                    }
                    _ => serde_json::to_value(h).expect("diamond serializes"),
                }
            };
            let v = match (&c.brute, &c.closed) {
                (Some(b), Some(cl)) => json!({
                    "d": c.d.get(), "n": c.n, "match": diff.is_empty(),
                    "brute": one(b), "closed": one(cl), "diff": diff,
                }),
                _ => one(c.primary()),
            };
            json(&v)
        }
        Format::Table => {
            let h = c.primary();
            let methods = match (&c.brute, &c.closed) {
                (Some(_), Some(_)) => "brute, closed".to_string(),
                _ => h.method.to_string(),
            };
            let mut s = format!("X_{{{},{}}} [{}]\n", c.d, c.n, methods);
            match (args.p, args.q, view) {
                (Some(p), Some(q), _) => s.push_str(&format!("h^{{{p},{q}}} = {}\n", h.get(p, q))),
                (_, _, View::Grid) => s.push_str(&grid(h)),
                (_, _, View::Diamond) => s.push_str(&h.render()),
            }
            s.push_str(&format!("euler = {}\n", h.euler()));
            if c.brute.is_some() && c.closed.is_some() {
                if diff.is_empty() {
                    s.push_str("brute force and closed form agree\n");
                } else {
                    s.push_str(&diff_table(&diff));
                }
            }
            s
        }
    };
    Ok(Report::checked(body, failure))
}

pub fn euler(args: &HodgeArgs, format: Format, par: Parallelism) -> Result<Report, CliError> {
    if args.p.is_some() {
        return Err(CliError::Usage("--p/--q apply to `hodge` only".into()));
    }
    let d = Modulus::new(args.d)?;
    if args.n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let closed = matches!(args.method, MethodArg::Closed | MethodArg::Both).then(|| euler_closed(d, args.n as u32));
    let brute = if matches!(args.method, MethodArg::Brute | MethodArg::Both) {
        let budget = args.budget.map_or_else(Budget::new, Budget::with_max_dimension);
        let poly = chen_ruan_poincare(d, args.n, budget, par)?;
        Some(poly.integer_part_euler().map_err(|e: FracPolyError| CliError::Usage(e.to_string()))?)
    } else {
        None
    };
    let failure = match (&brute, &closed) {
        (Some(b), Some(c)) if b != c => Some(format!("brute force gives {b}, closed form {c}")),
        _ => None,
    };
    let body = match format {
        Format::Json => {
            let mut v = json!({"d": d.get(), "n": args.n});
            if let Some(c) = &closed {
                v["closed"] = json!(c.to_string());
            }
            if let Some(b) = &brute {
                v["brute"] = json!(b.to_string());
            }
            if brute.is_some() && closed.is_some() {
                v["match"] = json!(failure.is_none());
            }
            json(&v)
        }
        Format::Table => {
            let mut s = String::new();
            if let Some(c) = &closed {
                s.push_str(&format!("e(X_{{{d},{}}}) = {c}  [closed]\n", args.n));
            }
            if let Some(b) = &brute {
                s.push_str(&format!("e(X_{{{d},{}}}) = {b}  [brute]\n", args.n));
            }
            s
        }
    };
    Ok(Report::checked(body, failure))
}
