use std::io::Write;

use chartab_core::{ColoredPattern, Partition, Rational, RationalFunctionQ};
use serde::{Deserialize, Serialize};

/// One table cell: a label, a unipotent class and the character value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharRecord {
    pub label: ColoredPattern,
    pub mu: Partition,
    pub value: RationalFunctionQ,
    /// Human-readable form of `value`.
    pub text: String,
    /// Exact value at the requested `q`, when one was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_at_q: Option<String>,
}

impl CharRecord {
    pub fn new(
        label: ColoredPattern,
        mu: Partition,
        value: &RationalFunctionQ,
        eval_q: Option<&Rational>,
    ) -> Result<Self, String> {
        let value_at_q = match eval_q {
            Some(q0) => Some(value.eval(q0).map_err(|e| e.to_string())?.to_string()),
            None => None,
        };
        Ok(CharRecord {
            label,
            mu,
            value: value.clone(),
            text: value.to_string(),
            value_at_q,
        })
    }
}

/// `"1,1"` style class string.
pub fn mu_string(mu: &Partition) -> String {
    mu.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn write_json_lines<W: Write>(out: &mut W, records: &[CharRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

/// CSV with columns `label, mu, value` and `value_at_q` when any record has it.
pub fn write_csv<W: Write>(out: W, records: &[CharRecord]) -> Result<(), csv::Error> {
    let with_q = records.iter().any(|r| r.value_at_q.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["label", "mu", "value"];
    if with_q {
        header.push("value_at_q");
    }
    w.write_record(&header)?;
    for r in records {
        let label = serde_json::to_string(&r.label).expect("labels serialize");
        let mut row = vec![label, mu_string(&r.mu), r.text.clone()];
        if with_q {
            row.push(r.value_at_q.clone().unwrap_or_default());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
