use std::fmt::Write as _;

use serde_json::json;
use stcore::bijection::{inverse_lambda_d, inverse_lambda_o, lambda_d, lambda_o, CompositionC};
use stcore::json::{EnumerationDoc, TableDoc};
use stcore::table::{CoreTable, CSV_INFINITY, PRETTY_INFINITY};
use stcore::verify::{verify as run_verify, Claim, RangeOptions, VerificationReport};
use stcore::{enumerate_core, enumerate_core_bounded, EnumerationResult, Partition};

use crate::args::{
    BijectionArgs, EnumerateArgs, Format, GlobalOpts, RenderArgs, TableArgs, VerifyArgs, TABLE_CAP,
};
use crate::Failure;

fn no_bound(g: &GlobalOpts, command: &str) -> Result<(), Failure> {
    match g.bound {
        Some(_) => Err(Failure::Usage(format!(
            "--bound only applies to enumerate, not {command}"
        ))),
        None => Ok(()),
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(format!("csv output: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Usage(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields is utf-8"))
}

fn joined(parts: &[Partition]) -> String {
    parts
        .iter()
        .map(Partition::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn enumerate(a: &EnumerateArgs, g: &GlobalOpts) -> Result<String, Failure> {
    let res: EnumerationResult = match g.bound {
        Some(h) => enumerate_core_bounded(a.s, a.t, a.filter, h),
        None => enumerate_core(a.s, a.t, a.filter)?,
    };
    match g.format {
        Format::Json => Ok(EnumerationDoc::from_result(&res, true).to_json() + "\n"),
        Format::Csv => csv_text(
            &["partition", "size", "perimeter"],
            res.partitions
                .iter()
                .map(|p| vec![p.to_string(), p.size().to_string(), p.perimeter().to_string()]),
        ),
        Format::Text => {
            let mut out = format!("({},{})-cores, filter {}\n", res.s, res.t, res.filter);
            if let Some(h) = res.bound {
                let status = if res.partial { "partial" } else { "complete" };
                let _ = writeln!(out, "bound: perimeter <= {h} ({status})");
            }
            for p in &res.partitions {
                let _ = writeln!(out, "{p}");
            }
            let _ = writeln!(out, "count: {}", res.count);
            let _ = writeln!(out, "max_size: {}", res.max_size);
            let _ = writeln!(out, "witnesses: {}", joined(&res.max_size_witnesses));
            Ok(out)
        }
    }
}

pub fn table(a: &TableArgs, g: &GlobalOpts) -> Result<String, Failure> {
    no_bound(g, "table")?;
    let max_s = a.max_s.or(a.max).unwrap_or(TABLE_CAP);
    let max_t = a.max_t.or(a.max).unwrap_or(TABLE_CAP);
    if (max_s > TABLE_CAP || max_t > TABLE_CAP) && !a.force {
        return Err(Failure::Usage(format!(
            "a {max_s} x {max_t} table exceeds the {TABLE_CAP} x {TABLE_CAP} cap; pass --force to compute it"
        )));
    }
    let table = CoreTable::compute(max_s, max_t, a.filter);
    Ok(match g.format {
        Format::Csv => table.to_csv(a.inf.as_deref().unwrap_or(CSV_INFINITY)),
        Format::Text => table.to_pretty(a.inf.as_deref().unwrap_or(PRETTY_INFINITY)),
        Format::Json => {
            serde_json::to_string_pretty(&TableDoc::from_table(&table)).expect("tables always serialize")
                + "\n"
        }
    })
}

fn verify_text(report: &VerificationReport) -> String {
    let mut out = format!("claim: {}\nrange: {}\n", report.claim, report.range);
    for case in &report.cases {
        let mark = if case.ok { "ok" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "{}  expected {}  got {}  {mark}",
            case.params, case.expected, case.got
        );
    }
    let mismatches = report.mismatches().count();
    let _ = writeln!(
        out,
        "{}: {} cases, {mismatches} mismatches, {:.3}s",
        if report.pass { "PASS" } else { "FAIL" },
        report.cases.len(),
        report.duration.as_secs_f64()
    );
    if mismatches > 0 {
        out.push_str("mismatches:\n");
        for case in report.mismatches() {
            let _ = writeln!(
                out,
                "  {}: expected {}, got {}",
                case.params, case.expected, case.got
            );
        }
    }
    out
}

pub fn verify(a: &VerifyArgs, g: &GlobalOpts) -> Result<(String, bool), Failure> {
    no_bound(g, "verify")?;
    let claim: Claim = a.claim.parse()?;
    let range = RangeOptions {
        max_s: a.max_s,
        max_t: a.max_t,
        max_m: a.max_m,
        max_d: a.max_d,
        max_sum: a.max_sum,
    };
    let report = run_verify(claim, &range);
    let text = match g.format {
        Format::Text => verify_text(&report),
        Format::Json => report.to_json() + "\n",
        Format::Csv => csv_text(
            &["params", "expected", "got", "ok"],
            report.cases.iter().map(|c| {
                vec![
                    c.params.to_string(),
                    c.expected.clone(),
                    c.got.clone(),
                    c.ok.to_string(),
                ]
            }),
        )?,
    };
    Ok((text, report.pass))
}

pub fn bijection(a: &BijectionArgs, g: &GlobalOpts) -> Result<String, Failure> {
    no_bound(g, "bijection")?;
    let mu: CompositionC = match (&a.mu, &a.distinct, &a.odd) {
        (Some(m), _, _) => m.parse()?,
        (_, Some(d), _) => inverse_lambda_d(&d.parse()?)?,
        (_, _, Some(o)) => inverse_lambda_o(&o.parse()?)?,
        _ => unreachable!("clap requires one input"),
    };
    let (d, o) = (lambda_d(&mu), lambda_o(&mu));
    let perimeter = mu.weight();
    Ok(match g.format {
        Format::Text => format!("mu: {mu}\nlambda_d: {d}\nlambda_o: {o}\nperimeter: {perimeter}\n"),
        Format::Json => {
            let doc = json!({
                "mu": mu.parts(),
                "lambda_d": d.parts(),
                "lambda_o": o.parts(),
                "perimeter": perimeter,
            });
            serde_json::to_string_pretty(&doc).expect("plain values serialize") + "\n"
        }
        Format::Csv => csv_text(
            &["mu", "lambda_d", "lambda_o", "perimeter"],
            [vec![
                mu.to_string(),
                d.to_string(),
                o.to_string(),
                perimeter.to_string(),
            ]],
        )?,
    })
}

pub fn render(a: &RenderArgs, g: &GlobalOpts) -> Result<String, Failure> {
    no_bound(g, "render")?;
    let lam: Partition = a.partition.parse()?;
    let hooks = lam.hook_lengths();
    match g.format {
        Format::Csv => Err(Failure::Usage("render supports text and json output only".into())),
        Format::Json => {
            let doc = json!({
                "partition": lam.parts(),
                "size": lam.size(),
                "perimeter": lam.perimeter(),
                "hooks": hooks,
            });
            Ok(serde_json::to_string_pretty(&doc).expect("plain values serialize") + "\n")
        }
        Format::Text if lam.is_empty() => Ok("(empty)\n".into()),
        Format::Text if a.hooks => {
            let width = lam.perimeter().to_string().len();
            Ok(hooks
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|h| format!("{h:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                })
                .collect())
        }
        Format::Text => Ok(lam
            .parts()
            .iter()
            .map(|&p| "#".repeat(p as usize) + "\n")
            .collect()),
    }
}
