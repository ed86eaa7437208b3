//! One function per subcommand.

use crankmex::bijections::{
    cor36_involution, cor38_fixed_point_map, cor38_involution, crank0_map, crank_le_neg_j_map,
    first_cancellation, franklin, run_suite, second_cancellation, second_cancellation_adjust,
    BijectionError, Cor36Triple, Step, SuiteReport, TripleTj,
};
use crankmex::identities::{self, IdentityEntry, IdentityError, Params, VerifyReport};
use crankmex::partition::{crank_count, mex_count, Statistic, A064428_PREFIX};
use crankmex::qseries::pentagonal_series;
use crankmex::Partition;
use serde_json::{json, Value};

use crate::emit::{emit, strings, write_text};
use crate::{Command, Failure, Format, MapName, Output, SequenceName};

/// Rows of the odd-mex table, in display order.
pub const TABLE1_ROWS: [&str; 9] = [
    "m_1_2", "m_1_4", "m_3_4", "m_1_2_o", "m_1_2_e", "m_1_4_o", "m_1_4_e", "m_3_4_o", "m_3_4_e",
];

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Stats {
            name,
            max_n,
            j,
            m,
            output,
        } => stats(&name, max_n, j, m, &output),
        Command::Table1 { output } => table1(&output),
        Command::Verify {
            id,
            all,
            j,
            m,
            order,
            output,
        } => verify(id.as_deref(), all, j, m, order, &output),
        Command::Bijection {
            name,
            check,
            trace,
            j,
            output,
        } => match (check, trace) {
            (Some(w), _) => bijection_check(name, j, w, &output),
            (None, Some(text)) => bijection_trace(name, j, &text, &output),
            (None, None) => Err(Failure::Usage("give --check or --trace".into())),
        },
        Command::Sequence {
            name,
            max_n,
            output,
        } => sequence(name, max_n, &output),
    }
}

fn stats(
    name: &str,
    max_n: u32,
    j: Option<i64>,
    m: Option<i64>,
    output: &Output,
) -> Result<(), Failure> {
    let stat = Statistic::parse(name, j, m).map_err(|e| Failure::Usage(e.to_string()))?;
    let declared: Vec<&str> = stat.params().iter().map(|(k, _)| *k).collect();
    for (flag, given) in [("j", j.is_some()), ("m", m.is_some())] {
        if given && !declared.contains(&flag) {
            return Err(Failure::Usage(format!(
                "statistic {name} takes no --{flag}"
            )));
        }
    }
    let values: Vec<(u32, i64)> = (0..=max_n).map(|n| (n, stat.value(n))).collect();
    let header = strings(["n".to_string(), stat.to_string()]);
    let rows: Vec<Vec<String>> = values
        .iter()
        .map(|(n, v)| strings([n.to_string(), v.to_string()]))
        .collect();
    let params: serde_json::Map<String, Value> = stat
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let doc = json!({
        "stat": stat.to_string(),
        "params": params,
        "values": values.iter().map(|(n, v)| json!({"n": n, "value": v})).collect::<Vec<_>>(),
    });
    emit(output, &header, &rows, &doc)
}

/// The table's values, one row per statistic for `n = 2..=15`.
pub fn table1_values() -> Vec<(&'static str, Vec<i64>)> {
    TABLE1_ROWS
        .iter()
        .map(|&name| {
            let stat = Statistic::parse(name, None, None).expect("table rows are valid names");
            (name, (2..=15).map(|n| stat.value(n)).collect())
        })
        .collect()
}

fn table1(output: &Output) -> Result<(), Failure> {
    let values = table1_values();
    let mut header = vec!["stat".to_string()];
    header.extend((2..=15).map(|n: u32| n.to_string()));
    let rows: Vec<Vec<String>> = values
        .iter()
        .map(|(name, vs)| {
            let mut row = vec![name.to_string()];
            row.extend(strings(vs));
            row
        })
        .collect();
    let doc = json!({
        "n": (2..=15).collect::<Vec<u32>>(),
        "rows": values
            .iter()
            .map(|(name, vs)| json!({"stat": name, "values": vs}))
            .collect::<Vec<_>>(),
    });
    emit(output, &header, &rows, &doc)
}

fn usage(e: IdentityError) -> Failure {
    Failure::Usage(e.to_string())
}

/// Grid for one entry: given flags are fixed, parameters with a default use
/// it, and the rest run over their default grid.
fn grid_for(entry: &IdentityEntry, j: Option<i64>, m: Option<i64>) -> Result<Vec<Params>, Failure> {
    let mut given = Params::new();
    if let Some(j) = j {
        given.insert("j".into(), j);
    }
    if let Some(m) = m {
        given.insert("m".into(), m);
    }
    let mut grid = vec![given.clone()];
    for spec in &entry.params {
        if given.contains_key(spec.name) || spec.default.is_some() {
            continue;
        }
        grid = grid
            .into_iter()
            .flat_map(|base| {
                spec.grid.iter().map(move |&v| {
                    let mut p = base.clone();
                    p.insert(spec.name.to_string(), v);
                    p
                })
            })
            .collect();
    }
    for p in &grid {
        entry.resolve(p).map_err(usage)?;
    }
    Ok(grid)
}

fn verify(
    id: Option<&str>,
    all: bool,
    j: Option<i64>,
    m: Option<i64>,
    order: usize,
    output: &Output,
) -> Result<(), Failure> {
    if order < 1 {
        return Err(usage(IdentityError::OrderTooSmall(order)));
    }
    let reports: Vec<VerifyReport> = if all {
        identities::verify_all(order).map_err(|e| Failure::Failed(e.to_string()))?
    } else {
        let id = id.ok_or_else(|| Failure::Usage("give an identity id or --all".into()))?;
        let entry = identities::find(id).map_err(usage)?;
        let grid = grid_for(&entry, j, m)?;
        identities::verify_grid(id, &grid, order).map_err(|e| Failure::Failed(e.to_string()))?
    };
    let header = strings(["id", "params", "order", "pass", "exponents", "lhs", "rhs"]);
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let (exps, lhs, rhs) = match &r.first_mismatch {
                Some(mm) => (
                    strings(&mm.exponents).join(";"),
                    mm.lhs.clone(),
                    mm.rhs.clone(),
                ),
                None => Default::default(),
            };
            vec![
                r.id.clone(),
                params.join(";"),
                r.order.to_string(),
                r.pass.to_string(),
                exps,
                lhs,
                rhs,
            ]
        })
        .collect();
    let doc = serde_json::to_value(&reports).map_err(|e| Failure::Failed(e.to_string()))?;
    emit(output, &header, &rows, &doc)?;
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| match &r.first_mismatch {
            Some(mm) => format!("{} {:?}: {mm}", r.id, r.params),
            None => r.id.clone(),
        })
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Failed(format!(
            "{} of {} checks failed: {}",
            failed.len(),
            reports.len(),
            failed.join("; ")
        )))
    }
}

fn suite_name(name: MapName) -> &'static str {
    match name {
        MapName::Franklin => "franklin",
        MapName::FirstCancellation => "first_cancellation",
        MapName::SecondCancellation => "second_cancellation",
        MapName::Cor36 => "cor36",
        // the cor38 suite also checks the fixed-point map
        MapName::Cor38 | MapName::Cor38Fixed => "cor38",
        MapName::Crank0 => "crank0",
        MapName::CrankLeNegJ => "crank_le_neg_j",
    }
}

fn suite_row(r: &SuiteReport) -> Vec<String> {
    let opt = |b: Option<bool>| b.map_or(String::new(), |b| b.to_string());
    let inv = r.involution.as_ref();
    let inj = r.injection.as_ref();
    vec![
        r.suite.clone(),
        r.j.map_or(String::new(), |j| j.to_string()),
        r.max_weight.to_string(),
        opt(inv.map(|m| m.involution_ok)),
        opt(inv.map(|m| m.weight_ok)),
        opt(inv.map(|m| m.sign_reversing_ok)),
        inv.map_or(String::new(), |m| m.fixed_points.to_string()),
        opt(inv.map(|m| m.fixed_points_ok)),
        opt(inj.map(|i| i.injective)),
        opt(inj.map(|i| i.image_ok)),
        opt(inj.map(|i| i.weight_ok)),
        r.oracle_ok.to_string(),
        r.passed().to_string(),
    ]
}

fn bijection_check(name: MapName, j: u32, max_weight: u32, output: &Output) -> Result<(), Failure> {
    let report =
        run_suite(suite_name(name), j, max_weight).map_err(|e| Failure::Failed(e.to_string()))?;
    let header = strings([
        "suite",
        "j",
        "max_weight",
        "involution_ok",
        "weight_ok",
        "sign_reversing_ok",
        "fixed_points",
        "fixed_points_ok",
        "injective",
        "image_ok",
        "injection_weight_ok",
        "oracle_ok",
        "pass",
    ]);
    let doc = serde_json::to_value(&report).map_err(|e| Failure::Failed(e.to_string()))?;
    emit(output, &header, &[suite_row(&report)], &doc)?;
    if report.passed() {
        Ok(())
    } else {
        let mut failures = report.oracle_failures.clone();
        for r in report.involution.iter() {
            failures.extend(r.failures.iter().cloned());
        }
        for r in report.injection.iter() {
            failures.extend(r.failures.iter().cloned());
        }
        Err(Failure::Failed(format!(
            "{} check failed: {}",
            report.suite,
            failures.join("; ")
        )))
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse()
        .map_err(|e: crankmex::PartitionError| Failure::Usage(e.to_string()))
}

fn shape(e: BijectionError) -> Failure {
    match e {
        BijectionError::Precondition(msg) => Failure::Failed(msg),
        other => Failure::Usage(other.to_string()),
    }
}

fn line<T: std::fmt::Display>(step: &Step<T>) -> String {
    step.to_string()
}

fn bijection_trace(name: MapName, j: u32, text: &str, output: &Output) -> Result<(), Failure> {
    let lines: Vec<String> = match name {
        MapName::Franklin => vec![line(&franklin(&parse_partition(text)?).map_err(shape)?)],
        MapName::Cor38 => vec![line(
            &cor38_involution(&parse_partition(text)?).map_err(shape)?,
        )],
        MapName::Cor38Fixed => {
            vec![line(
                &cor38_fixed_point_map(&parse_partition(text)?).map_err(shape)?,
            )]
        }
        MapName::Crank0 => vec![line(&crank0_map(&parse_partition(text)?).map_err(shape)?)],
        MapName::CrankLeNegJ => {
            vec![line(
                &crank_le_neg_j_map(&parse_partition(text)?, j).map_err(shape)?,
            )]
        }
        MapName::Cor36 => {
            let t = Cor36Triple::parse(text).map_err(|e| Failure::Usage(e.to_string()))?;
            vec![line(&cor36_involution(&t))]
        }
        MapName::FirstCancellation => {
            let t = TripleTj::parse(j, text).map_err(|e| Failure::Usage(e.to_string()))?;
            vec![line(&first_cancellation(&t))]
        }
        MapName::SecondCancellation => {
            let t = TripleTj::parse(j, text).map_err(|e| Failure::Usage(e.to_string()))?;
            let adjusted = second_cancellation_adjust(&t);
            vec![
                format!("{t} → {adjusted} [adjusted]"),
                line(&second_cancellation(&adjusted)),
            ]
        }
    };
    let text = match output.format {
        Format::Csv => lines.iter().map(|l| format!("{l}\n")).collect(),
        Format::Json => crate::emit::json_text(&json!({ "steps": lines }))?,
    };
    write_text(output, &text)
}

fn sequence(name: SequenceName, max_n: u32, output: &Output) -> Result<(), Failure> {
    match name {
        SequenceName::A064428 => {
            let limit = (A064428_PREFIX.len() - 1) as u32;
            if max_n > limit {
                return Err(Failure::Usage(format!(
                    "the embedded prefix stops at n = {limit}"
                )));
            }
            let header = strings(["n", "embedded", "m_1_2", "crank_ge_0", "match"]);
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            let mut mismatches = Vec::new();
            for n in 0..=max_n {
                let embedded = A064428_PREFIX[n as usize] as i64;
                let m12 = mex_count(1, 2, n, None).expect("modulus 2") as i64;
                let crank = crank_count(n, |c| c >= 0);
                let ok = embedded == crank && embedded == m12;
                if !ok {
                    mismatches.push(n);
                }
                rows.push(strings([
                    n.to_string(),
                    embedded.to_string(),
                    m12.to_string(),
                    crank.to_string(),
                    ok.to_string(),
                ]));
                entries.push(json!({
                    "n": n, "embedded": embedded, "m_1_2": m12, "crank_ge_0": crank, "match": ok,
                }));
            }
            emit(output, &header, &rows, &Value::Array(entries))?;
            if mismatches.is_empty() {
                Ok(())
            } else {
                Err(Failure::Failed(format!("mismatch at n = {mismatches:?}")))
            }
        }
        SequenceName::Pentagonal => {
            let s = pentagonal_series(max_n as usize);
            let header = strings(["n", "coefficient"]);
            let rows: Vec<Vec<String>> = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| strings([n.to_string(), c.to_string()]))
                .collect();
            let doc = json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            emit(output, &header, &rows, &doc)
        }
    }
}
