use std::fmt::Write;

use clap::ValueEnum;
use dyck_odd::{CountTable, Series};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

pub fn table(t: &CountTable, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            let _ = writeln!(
                out,
                "# class {}, paths of up to {} steps",
                t.class(),
                t.n_max()
            );
            let _ = writeln!(out, "{:>4} {:>5} {:>6}  count", "n", "layer", "height");
            for (n, s, c) in t.entries() {
                let _ = writeln!(out, "{n:>4} {:>5} {:>6}  {c}", s.layer, s.height);
            }
        }
        OutputFormat::Csv => {
            out.push_str("n,layer,height,count\n");
            for (n, s, c) in t.entries() {
                let _ = writeln!(out, "{n},{},{},{c}", s.layer, s.height);
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = t
                .entries()
                .map(|(n, s, c)| {
                    json!({
                        "n": n,
                        "layer": s.layer.name(),
                        "height": s.height,
                        "count": c.to_string(),
                    })
                })
                .collect();
            out = json!({ "rows": rows }).to_string();
            out.push('\n');
        }
    }
    out
}

/// Renders a series in the named variable. `label` goes into the table
/// header only.
pub fn series(s: &Series, var: &str, label: &str, format: OutputFormat) -> String {
    let mut out = String::new();
    let exponents = s.valuation().min(s.precision())..s.precision();
    match format {
        OutputFormat::Table => {
            let _ = writeln!(
                out,
                "# {label} in {var}, known below {var}^{}",
                s.precision()
            );
            let _ = writeln!(out, "{}", s.render(var));
            let _ = writeln!(out, "{:>8}  coefficient", "exponent");
            for e in exponents {
                let _ = writeln!(out, "{e:>8}  {}", s.coeff(e).expect("below precision"));
            }
        }
        OutputFormat::Csv => {
            out.push_str("exponent,coefficient\n");
            for e in exponents {
                let _ = writeln!(out, "{e},{}", s.coeff(e).expect("below precision"));
            }
        }
        OutputFormat::Json => {
            let coefficients: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            out = json!({
                "variable": var,
                "valuation": s.valuation(),
                "coefficients": coefficients,
                "precision": s.precision(),
            })
            .to_string();
            out.push('\n');
        }
    }
    out
}
