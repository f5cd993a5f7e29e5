//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::ExitCode;

use chartab_core::fock::{
    convert_f1_to_orbits, qdual_closed_form, qdual_orbit_expansion, qdual_row_expansion,
    qdual_vector,
};
use chartab_core::mnrule::{
    c_alpha, corollary_rows_value, degree, single_column_value, single_row_value, steinberg_value,
};
use chartab_core::partitions::{centralizer_order, enumerate_patterns, ClassEntry};
use chartab_core::{
    oracle_char, ClassType, ColoredPattern, Engine, Partition, Rational, RationalFunctionQ,
};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn q_pow(e: i64) -> RationalFunctionQ {
    RationalFunctionQ::q_pow(e)
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn oracle_equivalence(engine: &Engine) -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        for label in enumerate_patterns(n, n) {
            for mu in Partition::all(n) {
                let a = engine.char_value(&label, &mu).map_err(|e| e.to_string())?;
                let b = oracle_char(&label, &mu).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("{label} at {mu}: engine {a}, oracle {b}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs equal"))
}

fn steinberg(engine: &Engine) -> Outcome {
    for n in 1..=5u32 {
        let st = ColoredPattern::from_pairs([(1, Partition::from_parts([n]))]);
        for mu in Partition::all(n) {
            let v = engine.char_value(&st, &mu).map_err(|e| e.to_string())?;
            let expected = if mu == Partition::column(n) {
                q_pow((n * (n - 1) / 2) as i64)
            } else {
                RationalFunctionQ::zero()
            };
            if v != expected {
                return Err(format!("n={n} at {mu}: {v}"));
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(17);
    for _ in 0..50 {
        let k = rng.gen_range(1..4);
        let entries: Vec<ClassEntry> = (0..k)
            .map(|_| {
                let len = rng.gen_range(1..4);
                let column = rng.gen_bool(0.6);
                let mut parts: Vec<u32> = (0..len)
                    .map(|_| if column { 1 } else { rng.gen_range(1..4) })
                    .collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                ClassEntry {
                    f_deg: rng.gen_range(1..4),
                    partition: Partition::from_parts(parts),
                }
            })
            .collect();
        let class = ClassType::new(entries.clone()).map_err(|e| e.to_string())?;
        let expected = if entries.iter().all(|e| e.partition.parts().iter().all(|&x| x == 1)) {
            let n: u32 = entries.iter().map(|e| e.f_deg * e.partition.weight()).sum();
            let l: usize = entries.iter().map(|e| e.partition.len()).sum();
            let n_stat: i64 = entries
                .iter()
                .map(|e| {
                    let l = e.partition.len() as i64;
                    e.f_deg as i64 * l * (l - 1) / 2
                })
                .sum();
            let sign = if (n as usize + l) % 2 == 0 { 1 } else { -1 };
            q_pow(n_stat).scale(&int(sign))
        } else {
            RationalFunctionQ::zero()
        };
        let got = steinberg_value(&class);
        if got != expected {
            return Err(format!("{class:?}: {got} vs {expected}"));
        }
    }
    Ok("unipotent n<=5 and 50 random class types".into())
}

fn degree_formula(engine: &Engine) -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        for label in enumerate_patterns(n, n) {
            let d = degree(&label);
            let v = engine
                .char_value(&label, &Partition::column(n))
                .map_err(|e| e.to_string())?;
            if v != d {
                return Err(format!("{label}: value {v}, degree {d}"));
            }
            let report = d.to_polynomial().map_err(|e| format!("{label}: {e}"))?;
            if !report.integer_coefficients {
                return Err(format!("{label}: degree {d} has non-integer coefficients"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} labels"))
}

fn gl2_table(engine: &Engine) -> Outcome {
    let label = |pairs: &[(u32, &[u32])]| {
        ColoredPattern::from_pairs(pairs.iter().map(|(d, p)| (*d, Partition::from_parts(p.to_vec()))))
    };
    let rows = [
        ("trivial", label(&[(1, &[1, 1])]), ["1", "1"]),
        ("Steinberg", label(&[(1, &[2])]), ["q", "0"]),
        ("principal series", label(&[(1, &[1]), (1, &[1])]), ["q + 1", "1"]),
        ("cuspidal", label(&[(2, &[1])]), ["q - 1", "-1"]),
    ];
    let classes = [Partition::from_parts([1, 1]), Partition::from_parts([2])];
    for (name, lab, expected) in rows {
        for (mu, want) in classes.iter().zip(expected) {
            let a = engine.char_value(&lab, mu).map_err(|e| e.to_string())?.to_string();
            let b = oracle_char(&lab, mu).map_err(|e| e.to_string())?.to_string();
            if a != want || b != want {
                return Err(format!("{name} at {mu}: engine {a}, oracle {b}, expected {want}"));
            }
        }
    }
    Ok("4 characters x 2 classes".into())
}

fn orthogonality(engine: &Engine) -> Outcome {
    let g = common::Group::new(2, 2);
    let brute = g.unipotent_centralizers();
    for (mu, order) in &brute {
        let formula = centralizer_order(&Partition::from_parts(mu.clone()))
            .eval(&int(2))
            .map_err(|e| e.to_string())?;
        if formula != int(*order as i64) {
            return Err(format!("GL_2(F_2) centralizer of {mu:?}: {order} vs {formula}"));
        }
    }
    for n in [2u32, 3] {
        let labels = enumerate_patterns(n, n);
        let classes = Partition::all(n);
        for q0 in [2i64, 3] {
            let q0 = int(q0);
            let mut table = Vec::new();
            for label in &labels {
                let mult = label.multiplicity().eval(&q0).map_err(|e| e.to_string())?;
                let row = classes
                    .iter()
                    .map(|mu| engine.char_value(label, mu).unwrap().eval(&q0).unwrap())
                    .collect::<Vec<_>>();
                table.push((mult, row));
            }
            for (i, u) in classes.iter().enumerate() {
                for (j, v) in classes.iter().enumerate() {
                    let sum: Rational = table.iter().map(|(m, row)| m * &row[i] * &row[j]).sum();
                    let expected = if i == j {
                        centralizer_order(u).eval(&q0).unwrap()
                    } else {
                        int(0)
                    };
                    if sum != expected {
                        return Err(format!("n={n} q={q0} at ({u},{v}): {sum} vs {expected}"));
                    }
                }
            }
        }
    }
    Ok(format!("n in {{2,3}}, q in {{2,3}}; GL_2(F_2) centralizers {brute:?}"))
}

/// The two-part table exactly as printed: `None` means "zero by the stated
/// vanishing rules".
fn printed_c_table(alpha: (i64, i64), m: u32, d: i64) -> Option<RationalFunctionQ> {
    let (a1, a2) = alpha;
    let one_minus_q = &RationalFunctionQ::one() - &RationalFunctionQ::q();
    match m {
        0 => {
            if a1 + a2 != 0 || a2 < 0 {
                None
            } else if alpha == (0, 0) {
                Some(RationalFunctionQ::one())
            } else {
                Some(&q_pow(-a2) * &one_minus_q)
            }
        }
        _ => {
            if a1 + a2 != d || a2 < 0 {
                None
            } else if alpha == (d, 0) || alpha == (0, d) {
                Some(RationalFunctionQ::one())
            } else if a1 > 0 && a2 > 0 {
                Some(&q_pow(-a2) * &one_minus_q)
            } else {
                Some(&q_pow(a1) * &one_minus_q)
            }
        }
    }
}

fn c_table() -> Outcome {
    let mut checked = 0;
    let mut failures: Vec<((i64, i64), u32, i64, RationalFunctionQ, RationalFunctionQ)> = Vec::new();
    for d in 1..=3i64 {
        for m in 0..=1u32 {
            for a1 in -4..=6i64 {
                for a2 in -4..=6i64 {
                    let printed = printed_c_table((a1, a2), m, d).unwrap_or_else(RationalFunctionQ::zero);
                    let got = c_alpha(&[a1, a2], m, d as u32);
                    checked += 1;
                    if got != printed {
                        failures.push(((a1, a2), m, d, got, printed));
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        return Ok(format!("{checked} entries"));
    }
    let family = |f: &((i64, i64), u32, i64, RationalFunctionQ, RationalFunctionQ)| {
        let ((a1, a2), m, d, _, _) = f;
        if (*a1, *a2) == (0, *d) && *m == 1 {
            "C^1_(0,d)"
        } else if *a1 < 0 && *a2 > 0 && *m == 1 {
            "C^1 with a1<0<a2"
        } else {
            "other"
        }
    };
    let mut summary = Vec::new();
    for name in ["C^1_(0,d)", "C^1 with a1<0<a2", "other"] {
        let hits: Vec<_> = failures.iter().filter(|f| family(f) == name).collect();
        if let Some(((a1, a2), m, d, got, printed)) = hits.first() {
            summary.push(format!(
                "{name}: {} entries (e.g. C^{m}_({a1},{a2}) d={d}: coefficient {got}, table {printed})",
                hits.len()
            ));
        }
    }
    Err(format!("{} of {checked} entries differ; {}", failures.len(), summary.join("; ")))
}

fn closed_forms(engine: &Engine) -> Outcome {
    let mut checked = 0;
    for n in 1..=4u32 {
        for label in enumerate_patterns(n, n) {
            let entries = label.entries();
            let rows: Option<Vec<(u32, u32)>> = entries
                .iter()
                .map(|e| (e.partition.len() == 1).then(|| (e.degree, e.partition.parts()[0])))
                .collect();
            for mu in Partition::all(n) {
                let v = engine.char_value(&label, &mu).map_err(|e| e.to_string())?;
                let mut compare = |what: &str, got: RationalFunctionQ| {
                    checked += 1;
                    if got == v {
                        Ok(())
                    } else {
                        Err(format!("{what} for {label} at {mu}: {got} vs {v}"))
                    }
                };
                if let Some(rows) = &rows {
                    compare("rows", corollary_rows_value(rows, &mu).map_err(|e| e.to_string())?)?;
                    if let [(d, m)] = rows[..] {
                        compare("single row", single_row_value(m, d, &mu).map_err(|e| e.to_string())?)?;
                        if (mu.len() as u32) < m && !v.is_zero() {
                            return Err(format!("Case 1 nonzero for {label} at {mu}"));
                        }
                        if mu == Partition::from_parts(vec![d; m as usize]) {
                            let e = (n * (m - 1) / 2) as i64;
                            let sign = if (n + m) % 2 == 0 { 1 } else { -1 };
                            compare("Case 2", q_pow(e).scale(&int(sign)))?;
                        }
                    }
                }
                if entries.len() == 1 && mu.len() == 1 {
                    let e = &entries[0];
                    compare(
                        "single column",
                        single_column_value(&e.partition, e.degree, n).map_err(|e| e.to_string())?,
                    )?;
                    if e.degree == 1 {
                        let m = e.partition.len() as u32;
                        let expected = if e.partition.is_column() {
                            int(if (m + n) % 2 == 0 { 1 } else { -1 })
                        } else {
                            int(0)
                        };
                        compare("column formula", RationalFunctionQ::constant(expected))?;
                    }
                }
                if mu.parts().iter().skip(1).all(|&x| x == 1) {
                    compare("hook", engine.hook_value(&label, mu.parts()[0]).map_err(|e| e.to_string())?)?;
                }
            }
        }
    }
    Ok(format!("{checked} comparisons"))
}

fn qdual() -> Outcome {
    let supports: Vec<ColoredPattern> = vec![
        ColoredPattern::from_pairs([(1, Partition::from_parts([1]))]),
        ColoredPattern::from_pairs([
            (1, Partition::from_parts([2])),
            (1, Partition::from_parts([1])),
            (2, Partition::from_parts([1])),
        ]),
        ColoredPattern::from_pairs([
            (1, Partition::from_parts([1])),
            (2, Partition::from_parts([1])),
            (3, Partition::from_parts([1])),
            (4, Partition::from_parts([1])),
        ]),
    ];
    for n in 0..=6 {
        let direct = qdual_vector(n);
        if direct != qdual_closed_form(n) {
            return Err(format!("n={n}: exponential and closed form differ"));
        }
        for s in &supports {
            let projected = convert_f1_to_orbits(&direct, s).map_err(|e| e.to_string())?;
            if projected != qdual_orbit_expansion(n, s) || projected != qdual_row_expansion(n, s) {
                return Err(format!("n={n}, support {s}"));
            }
        }
    }
    Ok(format!("n<=6 over {} supports", supports.len()))
}

fn integrality(engine: &Engine) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        for label in enumerate_patterns(n, n) {
            for mu in Partition::all(n) {
                let v = engine.char_value(&label, &mu).map_err(|e| e.to_string())?;
                checked += 1;
                let integral_poly = v.to_polynomial().map(|r| r.integer_coefficients).unwrap_or(false);
                let integral_values = (2..=5).all(|q0| v.eval(&int(q0)).map(|x| x.is_integer()).unwrap_or(false));
                if !integral_poly || !integral_values {
                    bad.push(format!("{label} at {mu}: {v}"));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} values, 0 non-integral"))
    } else {
        Err(format!("{} non-integral: {}", bad.len(), bad.join("; ")))
    }
}

fn main() -> ExitCode {
    let engine = Engine::new();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("engine equals oracle, n <= 4", Box::new(|| oracle_equivalence(&engine))),
        ("Steinberg character", Box::new(|| steinberg(&engine))),
        ("degree formula", Box::new(|| degree_formula(&engine))),
        ("GL_2 character table", Box::new(|| gl2_table(&engine))),
        ("column orthogonality at q = 2, 3", Box::new(|| orthogonality(&engine))),
        ("C^m_alpha two-part table", Box::new(c_table)),
        ("closed forms agree with recursion", Box::new(|| closed_forms(&engine))),
        ("q_n dual expansions", Box::new(qdual)),
        ("integrality sweep", Box::new(|| integrality(&engine))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
