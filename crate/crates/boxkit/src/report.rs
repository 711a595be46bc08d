//! Rendering bound reports for the `bound` command.

use boxkit_core::{BoundReport, Certificate};
use serde::Serialize;

use crate::experiment::status_label;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub status: String,
    pub value: String,
    pub value_f64: Option<f64>,
    pub ceiling: Option<u64>,
    pub certificate: String,
    pub notes: Vec<String>,
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn render_certificate(c: &Certificate) -> String {
    match c {
        Certificate::None => String::new(),
        Certificate::Ordering(o) => format!("ordering {}", join(o.sequence(), " ")),
        Certificate::CvProfile(p) => format!("cv_profile {}", join(p, " ")),
        Certificate::Params(ps) => join(ps.iter().map(|(k, v)| format!("{k}={v}")), " "),
        Certificate::Eigenvalue { name, value } => format!("{name}={value:.12}"),
        Certificate::Method2(m) => {
            let trace = join(
                m.trace.iter().map(|s| {
                    let m = s.m.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
                    format!(
                        "b={} t*={} m={} {}",
                        s.b,
                        s.t_star,
                        m,
                        if s.excluded { "excluded" } else { "open" }
                    )
                }),
                "; ",
            );
            format!(
                "s1={:?} s2={:?} t={} beta={}/{} trace[{}]",
                m.s1,
                m.s2,
                m.t,
                m.beta_t.numer(),
                m.beta_t.denom(),
                trace
            )
        }
    }
}

impl From<&BoundReport> for BoundRecord {
    fn from(r: &BoundReport) -> Self {
        BoundRecord {
            name: r.name.into(),
            status: status_label(&r.status),
            value: r.value.map(|v| v.to_string()).unwrap_or_default(),
            value_f64: r.value.map(|v| v.to_f64()),
            ceiling: r.ceiling(),
            certificate: render_certificate(&r.certificate),
            notes: r.notes.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub fn records_csv(records: &[BoundRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["bound_name", "status", "value", "ceiling", "certificate"])
        .expect("in memory");
    for r in records {
        w.write_record([
            r.name.as_str(),
            &r.status,
            &r.value,
            &r.ceiling.map(|c| c.to_string()).unwrap_or_default(),
            &r.certificate,
        ])
        .expect("in memory");
    }
    String::from_utf8(w.into_inner().expect("in memory")).expect("UTF-8")
}

pub fn records_json(records: &[BoundRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}
