//! CSV and JSON emission of experiment rows.

use std::io::Write;

use crate::experiment::ResultRow;

pub const CSV_HEADER: [&str; 9] = [
    "seed",
    "model",
    "n",
    "m",
    "param",
    "bound_name",
    "value",
    "ceiling",
    "runtime_ms",
];

pub fn write_csv<W: Write>(out: W, rows: &[ResultRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.seed.to_string(),
            r.model.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.param.clone(),
            r.bound_name.clone(),
            r.value.clone(),
            r.ceiling.map(|c| c.to_string()).unwrap_or_default(),
            r.runtime_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[ResultRow]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

pub fn json_string(rows: &[ResultRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}
