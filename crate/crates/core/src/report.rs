//! Per-operator aggregation of outcomes (generated / stillborn / trivial).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::OperatorId;
use crate::error::{Error, Result};
use crate::mutate::MutantsManifest;
use crate::verify::{MutantOutcome, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub operator_id: OperatorId,
    pub generated: u64,
    pub stillborn: u64,
    pub trivial: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub tngm: u64,
    pub sm: u64,
    pub tm: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rates {
    pub sm_rate: f64,
    pub tm_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MutationReport {
    pub format_version: u32,
    /// GM descending, then operator id.
    pub rows: Vec<Row>,
    pub totals: Totals,
    /// Absent when nothing was generated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rates: Option<Rates>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub killed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub survived: Option<u64>,
    /// `killed / (killed + survived)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation_score: Option<f64>,
}

impl MutationReport {
    /// Report over already-aggregated rows.
    pub fn from_rows(rows: Vec<Row>) -> Self {
        Self::assemble(rows, None, None)
    }

    fn assemble(mut rows: Vec<Row>, killed: Option<u64>, survived: Option<u64>) -> Self {
        rows.sort_by(|a, b| {
            b.generated.cmp(&a.generated).then_with(|| a.operator_id.as_str().cmp(b.operator_id.as_str()))
        });
        let totals = rows.iter().fold(Totals::default(), |t, r| Totals {
            tngm: t.tngm + r.generated,
            sm: t.sm + r.stillborn,
            tm: t.tm + r.trivial,
        });
        let mut report = MutationReport {
            format_version: crate::FORMAT_VERSION,
            rows,
            totals,
            rates: None,
            killed,
            survived,
            mutation_score: None,
        };
        report.derive();
        report
    }

    /// Recomputes the fields that follow from the counts.
    fn derive(&mut self) {
        let t = self.totals;
        self.rates =
            (t.tngm > 0).then(|| Rates { sm_rate: t.sm as f64 / t.tngm as f64, tm_rate: t.tm as f64 / t.tngm as f64 });
        self.mutation_score = match (self.killed, self.survived) {
            (Some(k), Some(s)) if k + s > 0 => Some(k as f64 / (k + s) as f64),
            _ => None,
        };
    }
}

pub fn build_report(outcomes: &[MutantOutcome], manifest: &MutantsManifest) -> Result<MutationReport> {
    let mut rows: BTreeMap<OperatorId, Row> = BTreeMap::new();
    let mut ops_by_id = BTreeMap::new();
    for e in &manifest.mutants {
        let m = &e.mutant;
        ops_by_id.insert(m.mutant_id.as_str(), m.operator_id);
        rows.entry(m.operator_id)
            .or_insert(Row { operator_id: m.operator_id, generated: 0, stillborn: 0, trivial: 0 })
            .generated += 1;
    }
    let (mut killed, mut survived, mut tested) = (0, 0, false);
    let mut seen = std::collections::BTreeSet::new();
    for o in outcomes {
        let op = *ops_by_id
            .get(o.mutant_id.as_str())
            .ok_or_else(|| Error::InconsistentManifest(format!("outcome for unknown mutant {}", o.mutant_id)))?;
        if op != o.operator_id {
            return Err(Error::InconsistentManifest(format!(
                "{} is {} in the manifest but {} in the outcomes",
                o.mutant_id, op, o.operator_id
            )));
        }
        if !seen.insert(o.mutant_id.as_str()) {
            return Err(Error::InconsistentManifest(format!("duplicate outcome for {}", o.mutant_id)));
        }
        let row = rows.get_mut(&op).expect("row exists for every manifest operator");
        match o.status {
            Status::Stillborn => row.stillborn += 1,
            Status::Trivial => row.trivial += 1,
            Status::Killed => {
                killed += 1;
                tested = true;
            }
            Status::Survived => {
                survived += 1;
                tested = true;
            }
            Status::Live | Status::Skipped => {}
        }
    }
    let (k, s) = if tested { (Some(killed), Some(survived)) } else { (None, None) };
    Ok(MutationReport::assemble(rows.into_values().collect(), k, s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" | "table" | "text" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown report format `{other}` (expected plain, json or csv)"))),
        }
    }
}

pub const CSV_HEADER: [&str; 4] = ["operator", "generated", "stillborn", "trivial"];

fn percent(x: f64) -> String {
    format!("{:.2}%", x * 100.0)
}

pub fn render(report: &MutationReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            let num = |n: u64| n.to_string();
            for r in &report.rows {
                w.write_record([r.operator_id.as_str(), &num(r.generated), &num(r.stillborn), &num(r.trivial)])
                    .expect("in-memory write");
            }
            let t = report.totals;
            w.write_record(["TOTAL", &num(t.tngm), &num(t.sm), &num(t.tm)]).expect("in-memory write");
            if let (Some(k), Some(s)) = (report.killed, report.survived) {
                w.write_record(["KILLED", &num(k), "", ""]).expect("in-memory write");
                w.write_record(["SURVIVED", &num(s), "", ""]).expect("in-memory write");
            }
            w.into_inner().expect("flush to vec")
        }
        Format::Plain => {
            let width = report
                .rows
                .iter()
                .map(|r| r.operator_id.as_str().len())
                .max()
                .unwrap_or(0)
                .max("Mutation Operator".len());
            let mut s = String::new();
            let _ = writeln!(s, "{:<width$}  {:>6}  {:>6}  {:>6}", "Mutation Operator", "GM", "SM", "TM");
            let _ = writeln!(s, "{}", "-".repeat(width + 24));
            for r in &report.rows {
                let _ =
                    writeln!(s, "{:<width$}  {:>6}  {:>6}  {:>6}", r.operator_id, r.generated, r.stillborn, r.trivial);
            }
            let _ = writeln!(s, "{}", "-".repeat(width + 24));
            let t = report.totals;
            let _ = writeln!(s, "{:<width$}  {:>6}  {:>6}  {:>6}", "Total", t.tngm, t.sm, t.tm);
            match report.rates {
                Some(r) => {
                    let _ = writeln!(s, "stillborn rate: {}  trivial rate: {}", percent(r.sm_rate), percent(r.tm_rate));
                }
                None => {
                    let _ = writeln!(s, "no mutants generated");
                }
            }
            if let (Some(k), Some(sv)) = (report.killed, report.survived) {
                let score = report.mutation_score.map(percent).unwrap_or_else(|| "n/a".into());
                let _ = writeln!(s, "killed: {k}  survived: {sv}  mutation score: {score}");
            }
            s.into_bytes()
        }
    }
}

fn bad(message: impl Into<String>) -> Error {
    Error::Format { what: "report", message: message.into() }
}

/// Inverse of [`render`] for the JSON and CSV formats.
pub fn parse(bytes: &[u8], format: Format) -> Result<MutationReport> {
    match format {
        Format::Json => {
            let mut r: MutationReport = serde_json::from_slice(bytes).map_err(|e| bad(e.to_string()))?;
            crate::check_version("report", r.format_version)?;
            r.derive();
            Ok(r)
        }
        Format::Csv => {
            let mut rd = csv::ReaderBuilder::new().has_headers(true).from_reader(bytes);
            let header = rd.headers().map_err(|e| bad(e.to_string()))?.clone();
            if header.iter().collect::<Vec<_>>() != CSV_HEADER {
                return Err(bad(format!("unexpected header {:?}", header.iter().collect::<Vec<_>>())));
            }
            let mut rows = Vec::new();
            let mut totals = None;
            let (mut killed, mut survived) = (None, None);
            for rec in rd.records() {
                let rec = rec.map_err(|e| bad(e.to_string()))?;
                let field = |i: usize| -> Result<u64> {
                    rec.get(i).unwrap_or("").parse().map_err(|_| bad(format!("bad number in {:?}", rec)))
                };
                match rec.get(0).unwrap_or("") {
                    "TOTAL" => totals = Some(Totals { tngm: field(1)?, sm: field(2)?, tm: field(3)? }),
                    "KILLED" => killed = Some(field(1)?),
                    "SURVIVED" => survived = Some(field(1)?),
                    op => rows.push(Row {
                        operator_id: op.parse()?,
                        generated: field(1)?,
                        stillborn: field(2)?,
                        trivial: field(3)?,
                    }),
                }
            }
            let report = MutationReport::assemble(rows, killed, survived);
            if let Some(t) = totals {
                if t != report.totals {
                    return Err(bad("TOTAL row does not match the operator rows"));
                }
            }
            Ok(report)
        }
        Format::Plain => Err(bad("the plain table is not machine readable")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppReport {
    pub app: String,
    pub report: MutationReport,
}

/// Cross-app summary: rates are means of the per-app rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub format_version: u32,
    pub apps: Vec<AppReport>,
    /// Apps that generated at least one mutant; the means are over these.
    pub apps_with_mutants: usize,
    pub mean_generated: Option<f64>,
    pub mean_sm_rate: Option<f64>,
    pub mean_tm_rate: Option<f64>,
    pub pooled: MutationReport,
}

pub fn corpus_summary(apps: Vec<AppReport>) -> CorpusSummary {
    let rated: Vec<Rates> = apps.iter().filter_map(|a| a.report.rates).collect();
    let n = rated.len();
    let mean = |f: fn(&Rates) -> f64| (n > 0).then(|| rated.iter().map(f).sum::<f64>() / n as f64);
    let mut pooled: BTreeMap<OperatorId, Row> = BTreeMap::new();
    let (mut killed, mut survived) = (None::<u64>, None::<u64>);
    for a in &apps {
        for r in &a.report.rows {
            let p = pooled.entry(r.operator_id).or_insert(Row {
                operator_id: r.operator_id,
                generated: 0,
                stillborn: 0,
                trivial: 0,
            });
            p.generated += r.generated;
            p.stillborn += r.stillborn;
            p.trivial += r.trivial;
        }
        if let (Some(k), Some(s)) = (a.report.killed, a.report.survived) {
            killed = Some(killed.unwrap_or(0) + k);
            survived = Some(survived.unwrap_or(0) + s);
        }
    }
    CorpusSummary {
        format_version: crate::FORMAT_VERSION,
        apps_with_mutants: n,
        mean_generated: (!apps.is_empty())
            .then(|| apps.iter().map(|a| a.report.totals.tngm as f64).sum::<f64>() / apps.len() as f64),
        mean_sm_rate: mean(|r| r.sm_rate),
        mean_tm_rate: mean(|r| r.tm_rate),
        pooled: MutationReport::assemble(pooled.into_values().collect(), killed, survived),
        apps,
    }
}

pub fn render_corpus(summary: &CorpusSummary, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(summary).expect("summary serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["app", "generated", "stillborn", "trivial", "sm_rate", "tm_rate"])
                .expect("in-memory write");
            let rate = |r: Option<f64>| r.map(|x| x.to_string()).unwrap_or_default();
            for a in &summary.apps {
                let t = a.report.totals;
                w.write_record([
                    a.app.clone(),
                    t.tngm.to_string(),
                    t.sm.to_string(),
                    t.tm.to_string(),
                    rate(a.report.rates.map(|r| r.sm_rate)),
                    rate(a.report.rates.map(|r| r.tm_rate)),
                ])
                .expect("in-memory write");
            }
            let t = summary.pooled.totals;
            w.write_record([
                "MEAN".to_string(),
                summary.mean_generated.map(|g| g.to_string()).unwrap_or_default(),
                String::new(),
                String::new(),
                rate(summary.mean_sm_rate),
                rate(summary.mean_tm_rate),
            ])
            .expect("in-memory write");
            w.write_record([
                "TOTAL".to_string(),
                t.tngm.to_string(),
                t.sm.to_string(),
                t.tm.to_string(),
                String::new(),
                String::new(),
            ])
            .expect("in-memory write");
            w.into_inner().expect("flush to vec")
        }
        Format::Plain => {
            let mut s = String::new();
            for a in &summary.apps {
                let _ = writeln!(s, "== {} ==", a.app);
                s.push_str(&String::from_utf8_lossy(&render(&a.report, Format::Plain)));
                s.push('\n');
            }
            let _ = writeln!(s, "== corpus ({} apps) ==", summary.apps.len());
            if let Some(g) = summary.mean_generated {
                let _ = writeln!(s, "mean mutants per app: {g:.1}");
            }
            match (summary.mean_sm_rate, summary.mean_tm_rate) {
                (Some(sm), Some(tm)) => {
                    let _ = writeln!(
                        s,
                        "mean per-app stillborn rate: {}  mean per-app trivial rate: {}",
                        percent(sm),
                        percent(tm)
                    );
                }
                _ => {
                    let _ = writeln!(s, "no app generated mutants");
                }
            }
            s.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(op: OperatorId, g: u64, s: u64, t: u64) -> Row {
        Row { operator_id: op, generated: g, stillborn: s, trivial: t }
    }

    #[test]
    fn empty_report_has_no_rates() {
        let r = MutationReport::from_rows(vec![]);
        assert_eq!(r.totals, Totals::default());
        assert!(r.rates.is_none());
        let json = String::from_utf8(render(&r, Format::Json)).unwrap();
        assert!(!json.contains("rate"));
    }

    #[test]
    fn ordering_and_round_trips() {
        let mut r = MutationReport::from_rows(vec![
            row(OperatorId::InvalidDate, 40, 0, 0),
            row(OperatorId::WrongStringResource, 3394, 0, 14),
            row(OperatorId::InvalidColor, 40, 1, 0),
        ]);
        assert_eq!(r.rows[0].operator_id, OperatorId::WrongStringResource);
        assert_eq!(r.rows[1].operator_id, OperatorId::InvalidColor);
        assert_eq!(r.totals, Totals { tngm: 3474, sm: 1, tm: 14 });
        r.killed = Some(3);
        r.survived = Some(1);
        r.derive();
        assert_eq!(r.mutation_score, Some(0.75));
        for f in [Format::Json, Format::Csv] {
            assert_eq!(parse(&render(&r, f), f).unwrap(), r);
        }
        let csv = String::from_utf8(render(&r, Format::Csv)).unwrap();
        assert!(csv.starts_with("operator,generated,stillborn,trivial\n"));
        assert!(csv.contains("WrongStringResource,3394,0,14\n"));
    }

    #[test]
    fn mismatched_total_row_is_rejected() {
        let text = "operator,generated,stillborn,trivial\nInvalidDate,4,0,0\nTOTAL,5,0,0\n";
        assert!(parse(text.as_bytes(), Format::Csv).is_err());
    }

    #[test]
    fn corpus_means_are_per_app() {
        let a = MutationReport::from_rows(vec![row(OperatorId::InvalidDate, 10, 1, 0)]);
        let b = MutationReport::from_rows(vec![row(OperatorId::InvalidDate, 90, 0, 9)]);
        let empty = MutationReport::from_rows(vec![]);
        let s = corpus_summary(vec![
            AppReport { app: "a".into(), report: a },
            AppReport { app: "b".into(), report: b },
            AppReport { app: "c".into(), report: empty },
        ]);
        assert_eq!(s.apps_with_mutants, 2);
        assert!((s.mean_sm_rate.unwrap() - 0.05).abs() < 1e-12);
        assert!((s.mean_tm_rate.unwrap() - 0.05).abs() < 1e-12);
        assert_eq!(s.pooled.totals, Totals { tngm: 100, sm: 1, tm: 9 });
    }
}
