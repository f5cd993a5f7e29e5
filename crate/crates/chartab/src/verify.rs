//! Verification suites run by `chartab verify`.

use chartab_core::mnrule::{
    corollary_rows_value, degree, single_column_value, single_row_value, steinberg_value,
};
use chartab_core::partitions::{centralizer_order, enumerate_patterns};
use chartab_core::{oracle_char, ClassType, ColoredPattern, Engine, Partition, Rational};

use crate::record::mu_string;

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub passed: bool,
    pub description: String,
}

#[derive(Debug, Default, Clone)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, passed: bool, description: String) {
        self.checks.push(Check {
            passed,
            description,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

fn show(label: &ColoredPattern) -> String {
    serde_json::to_string(label).expect("labels serialize")
}

/// Engine against the Fock-space expansion for every label and class of size `n`.
pub fn oracle(engine: &Engine, n: u32) -> Report {
    let mut report = Report::default();
    for label in enumerate_patterns(n, n) {
        for mu in Partition::all(n) {
            let a = engine.char_value(&label, &mu).expect("weights match");
            let b = oracle_char(&label, &mu).expect("weights match");
            report.record(
                a == b,
                format!("engine = oracle for {} at ({}): {a} vs {b}", show(&label), mu_string(&mu)),
            );
        }
    }
    report
}

/// Column orthogonality at a concrete `q`: for unipotent `u, v`,
/// `Σ_χ χ(u) χ(v) = δ_{uv} |C(u)|`, summing over labels with multiplicity.
pub fn orthogonality(engine: &Engine, n: u32, q0: &Rational) -> Result<Report, String> {
    let classes = Partition::all(n);
    let mut rows = Vec::new();
    for label in enumerate_patterns(n, n) {
        let mult = label.multiplicity().eval(q0).map_err(|e| e.to_string())?;
        let mut values = Vec::with_capacity(classes.len());
        for mu in &classes {
            let v = engine.char_value(&label, mu).expect("weights match");
            values.push(v.eval(q0).map_err(|e| e.to_string())?);
        }
        rows.push((mult, values));
    }
    let mut report = Report::default();
    for (i, u) in classes.iter().enumerate() {
        for (j, v) in classes.iter().enumerate() {
            let sum: Rational = rows.iter().map(|(m, vals)| m * &vals[i] * &vals[j]).sum();
            let expected = if i == j {
                centralizer_order(u).eval(q0).map_err(|e| e.to_string())?
            } else {
                Rational::from_integer(0.into())
            };
            report.record(
                sum == expected,
                format!(
                    "sum over characters at ({}) x ({}), q = {q0}: {sum}, expected {expected}",
                    mu_string(u),
                    mu_string(v)
                ),
            );
        }
    }
    Ok(report)
}

/// Degree, hook, single-row, single-column and row-product formulas
/// against the recursion at size `n`.
pub fn closed_forms(engine: &Engine, n: u32) -> Report {
    let mut report = Report::default();
    for label in enumerate_patterns(n, n) {
        let name = show(&label);
        let entries = label.entries();
        let rows: Option<Vec<(u32, u32)>> = entries
            .iter()
            .map(|e| (e.partition.len() == 1).then(|| (e.degree, e.partition.parts()[0])))
            .collect();
        let d = degree(&label);
        let at_one = engine.char_value(&label, &Partition::column(n)).expect("weights match");
        report.record(d == at_one, format!("degree of {name}: {d} vs {at_one}"));
        for mu in Partition::all(n) {
            let v = engine.char_value(&label, &mu).expect("weights match");
            let at = mu_string(&mu);
            if mu.parts().iter().skip(1).all(|&x| x == 1) {
                let h = engine.hook_value(&label, mu.parts()[0]).expect("arm in range");
                report.record(h == v, format!("hook formula for {name} at ({at}): {h} vs {v}"));
            }
            if let Some(rows) = &rows {
                let c = corollary_rows_value(rows, &mu).expect("weights match");
                report.record(c == v, format!("row product for {name} at ({at}): {c} vs {v}"));
                if let [(deg, m)] = rows[..] {
                    let s = single_row_value(m, deg, &mu).expect("weights match");
                    report.record(s == v, format!("single row for {name} at ({at}): {s} vs {v}"));
                }
            }
            if entries.len() == 1 && mu.len() == 1 {
                let e = &entries[0];
                let s = single_column_value(&e.partition, e.degree, n).expect("weights match");
                report.record(s == v, format!("single column for {name} at ({at}): {s} vs {v}"));
            }
        }
    }
    report
}

/// The Steinberg label `{(1,(n))}` against its closed form on every
/// unipotent class of size `n`.
pub fn steinberg(engine: &Engine, n: u32) -> Report {
    let label = ColoredPattern::from_pairs([(1, Partition::from_parts([n]))]);
    let mut report = Report::default();
    for mu in Partition::all(n) {
        let v = engine.char_value(&label, &mu).expect("weights match");
        let s = steinberg_value(&ClassType::unipotent(mu.clone()));
        report.record(
            v == s,
            format!("Steinberg at ({}): {v} vs {s}", mu_string(&mu)),
        );
    }
    report
}
