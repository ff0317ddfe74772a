//! Command-line front end.
//!
//! Every invocation prints one JSON document carrying
//! `"schema": "equivart/1"`, or CSV when `--csv` is given. Scales are read
//! as exact turns when written `p/q` and as radians otherwise; radians are
//! snapped to a nearby rational before any computation.
//!
//! Exit codes: 0 on success, 2 for flag, file and parse errors, 3 when the
//! inputs are well formed but mathematically rejected.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arcs::{arcs, average, quotient_eq};
use crate::error::Error;
use crate::join::{commuting_square, g_n, phi_trace};
use crate::measure::{CircleMeasure, Length};
use crate::oracle::filtration::{build_filtration_with_budget, DEFAULT_SIMPLEX_BUDGET};
use crate::oracle::{
    compare::compare_with_budget, first_fixed_scale, fixed_subcomplex, persistent_homology,
    regular_polygon_diameter, CoefficientField,
};
use crate::rational;
use crate::rings::{band, barcode_csv, barcode_over_scale, graded_piece, specialize, vr_ring, Field};

pub const SCHEMA: &str = "equivart/1";

/// Environment variable overriding the oracle simplex budget.
pub const BUDGET_ENV: &str = "EQUIVART_SIMPLEX_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "equivart", version, about = "Equivariant cohomology of Vietoris–Rips thickenings of the circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Coeff {
    #[value(name = "Z")]
    Z,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    #[value(name = "F2")]
    F2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleField {
    F2,
    Q,
}

impl From<OracleField> for CoefficientField {
    fn from(f: OracleField) -> Self {
        match f {
            OracleField::F2 => CoefficientField::F2,
            OracleField::Q => CoefficientField::Q,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Equivariant cohomology ring at a scale.
    Ring {
        #[arg(long)]
        r: String,
        #[arg(long, value_enum, default_value = "Z")]
        coeff: Coeff,
    },
    /// Cohomology group in one even degree as a function of scale.
    Barcode {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        rmax: Option<String>,
        #[arg(long)]
        csv: bool,
    },
    /// Join coordinates of a measure.
    Phi {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Arc decomposition and averaged polygon of a measure.
    Average {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Whether two measures are identified by the quotient map.
    QuotientEq {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Pull a measure back along the odd covering map.
    Gn {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Check the covering square for one measure.
    Square {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        r: String,
        #[arg(long)]
        cover: u64,
    },
    /// Persistent homology of evenly spaced circle points.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxdim: usize,
        #[arg(long, value_enum, default_value = "f2")]
        field: OracleField,
        /// Also report Betti numbers at this scale.
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        csv: bool,
        /// Write the sorted filtration as text to this file.
        #[arg(long)]
        filtration: Option<PathBuf>,
    },
    /// Onset of simplices fixed by a cyclic subgroup.
    Fixed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Oracle Betti numbers against the predicted homotopy type.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: String,
        #[arg(long)]
        maxdim: usize,
        #[arg(long, value_enum, default_value = "f2")]
        field: OracleField,
    },
}

/// Result of one invocation: exit code and everything meant for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

/// Reads a scale: `p/q` is exact turns, anything else is radians.
pub fn parse_scale(input: &str) -> Result<Length, Error> {
    if input.contains('/') {
        return Length::from_turns(rational::parse(input)?);
    }
    let radians: f64 = input.trim().parse().map_err(|_| Error::Parse {
        what: "scale",
        input: input.to_string(),
    })?;
    if !radians.is_finite() {
        return Err(Error::Parse {
            what: "scale",
            input: input.to_string(),
        });
    }
    Length::from_radians(radians)
}

fn scale(input: &str) -> Result<Length, Failure> {
    parse_scale(input).map_err(|e| match e {
        Error::Parse { .. } => Failure::Usage(e.to_string()),
        other => Failure::Usage(other.to_string()),
    })
}

fn read_measure(path: &Path) -> Result<CircleMeasure, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not JSON: {e}", path.display())))?;
    serde_json::from_value(value).map_err(|e| {
        let message = e.to_string();
        if message.starts_with("invalid measure") {
            Failure::Domain(Error::InvalidMeasure(message))
        } else {
            Failure::Usage(format!("{}: {message}", path.display()))
        }
    })
}

fn simplex_budget() -> Result<u128, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a positive integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_SIMPLEX_BUDGET),
    }
}

fn scale_json(r: &Length) -> Value {
    json!({
        "turns": rational::format(r.turns()),
        "radians": r.radians(),
    })
}

fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(target), Value::Object(extra)) = (&mut doc, body) {
        target.extend(extra);
    }
    doc
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

enum Output {
    Json(Value),
    Text(String),
}

fn execute(command: Command) -> Result<Output, Failure> {
    let out = match command {
        Command::Ring { r, coeff } => {
            let r = scale(&r)?;
            let ring = vr_ring(&r);
            let degrees: Vec<Value> = (0..=8)
                .step_by(2)
                .map(|deg| json!({ "degree": deg, "group": graded_piece(&ring, deg).to_string() }))
                .collect();
            let mut body = json!({
                "r": scale_json(&r),
                "band": band(&r),
                "coeff": format!("{coeff:?}"),
                "ring": ring.to_string(),
                "degrees": degrees,
            });
            let field = match coeff {
                Coeff::Z => None,
                Coeff::Q => Some(Field::Rationals),
                Coeff::R => Some(Field::Reals),
                Coeff::F2 => Some(Field::f2()),
            };
            if let Some(field) = field {
                body["specialized"] = json!(specialize(&ring, field)?.to_string());
            }
            Output::Json(document("ring", body))
        }
        Command::Barcode { degree, rmax, csv } => {
            let rmax = rmax.as_deref().map(scale).transpose()?;
            let intervals = barcode_over_scale(degree, rmax.as_ref())?;
            if csv {
                Output::Text(barcode_csv(&intervals))
            } else {
                Output::Json(document(
                    "barcode",
                    json!({
                        "degree": degree,
                        "rmax": rmax.as_ref().map(scale_json),
                        "intervals": to_value(&intervals),
                    }),
                ))
            }
        }
        Command::Phi { measure, r } => {
            let mu = read_measure(&measure)?;
            let r = scale(&r)?;
            let (point, trace) = phi_trace(&mu, &r)?;
            Output::Json(document(
                "phi",
                json!({
                    "r": scale_json(&r),
                    "measure": to_value(&mu),
                    "join_point": to_value(&point),
                    "steps": to_value(&trace),
                }),
            ))
        }
        Command::Average { measure, r } => {
            let mu = read_measure(&measure)?;
            let r = scale(&r)?;
            let decomposition = arcs(&mu, &r)?;
            let polygon = average(&mu, &r)?;
            Output::Json(document(
                "average",
                json!({
                    "r": scale_json(&r),
                    "stratum": decomposition.stratum_k,
                    "arcs": to_value(&decomposition.arcs),
                    "average": to_value(&polygon),
                }),
            ))
        }
        Command::QuotientEq { measure, other, r } => {
            let mu = read_measure(&measure)?;
            let nu = read_measure(&other)?;
            let r = scale(&r)?;
            let equal = quotient_eq(&mu, &nu, &r)?;
            Output::Json(document(
                "quotient-eq",
                json!({
                    "r": scale_json(&r),
                    "equal": equal,
                    "average": to_value(&average(&mu, &r)?),
                    "other_average": to_value(&average(&nu, &r)?),
                }),
            ))
        }
        Command::Gn { measure, n } => {
            let mu = read_measure(&measure)?;
            let lifted = g_n(&mu, n)?;
            Output::Json(document(
                "gn",
                json!({
                    "n": n,
                    "diameter_turns": rational::format(mu.diameter().turns()),
                    "lifted": to_value(&lifted),
                    "lifted_diameter_turns": rational::format(lifted.diameter().turns()),
                }),
            ))
        }
        Command::Square { measure, r, cover } => {
            let mu = read_measure(&measure)?;
            let r = scale(&r)?;
            let square = commuting_square(&mu, &r, cover)?;
            Output::Json(document(
                "square",
                json!({
                    "r": scale_json(&r),
                    "cover": cover,
                    "square": to_value(&square),
                }),
            ))
        }
        Command::Oracle {
            n,
            maxdim,
            field,
            r,
            csv,
            filtration,
        } => {
            let r = r.as_deref().map(scale).transpose()?;
            let f = build_filtration_with_budget(n, maxdim, simplex_budget()?)?;
            if let Some(path) = &filtration {
                std::fs::write(path, f.to_text())
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let barcode = persistent_homology(&f, field.into());
            if csv {
                Output::Text(barcode.to_csv())
            } else {
                let mut body = json!({
                    "n": n,
                    "maxdim": maxdim,
                    "field": CoefficientField::from(field).to_string(),
                    "simplices": f.len(),
                    "barcode": to_value(&barcode),
                });
                if let Some(r) = &r {
                    body["r"] = scale_json(r);
                    body["betti"] = json!(barcode.betti_vector(r));
                }
                Output::Json(document("oracle", body))
            }
        }
        Command::Fixed { n, d } => {
            let fixed = fixed_subcomplex(n, d)?;
            let onset = first_fixed_scale(n, d)?;
            let at_onset = fixed
                .simplices
                .iter()
                .filter(|s| fixed.value(s) == onset)
                .count();
            Output::Json(document(
                "fixed",
                json!({
                    "n": n,
                    "d": d,
                    "orbits": n / d,
                    "first_fixed_scale": scale_json(&onset),
                    "regular_polygon_diameter_turns":
                        rational::format(regular_polygon_diameter(d).turns()),
                    "invariant_simplices": fixed.simplices.len(),
                    "invariant_simplices_at_onset": at_onset,
                    "smallest_dimension": fixed.simplices.first().map(|s| s.dim()),
                }),
            ))
        }
        Command::Compare {
            n,
            r,
            maxdim,
            field,
        } => {
            let r = scale(&r)?;
            let report = compare_with_budget(n, &r, maxdim, field.into(), simplex_budget()?)?;
            Output::Json(document("compare", json!({ "report": to_value(&report) })))
        }
    };
    Ok(out)
}

fn error_document(kind: &str, message: &str) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "error": { "kind": kind, "message": message },
    });
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    },
                    stdout: e.render().to_string(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: error_document("usage", e.render().to_string().trim()),
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(Output::Json(doc)) => Outcome {
            code: 0,
            stdout: serde_json::to_string_pretty(&doc).expect("json") + "\n",
        },
        Ok(Output::Text(text)) => Outcome { code: 0, stdout: text },
        Err(Failure::Usage(message)) => Outcome {
            code: 2,
            stdout: error_document("usage", &message),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 3,
            stdout: error_document("domain", &e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(out: &Outcome) -> Value {
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn ring_examples() {
        let out = run(["equivart", "ring", "--r", "11/30"]);
        assert_eq!(out.code, 0);
        let doc = parse(&out);
        assert_eq!(doc["schema"], SCHEMA);
        assert_eq!(doc["ring"], "Z[u]/(3u^2)");
        assert_eq!(doc["band"], 1);
        assert_eq!(parse(&run(["equivart", "ring", "--r", "1/2"]))["ring"], "Z[u]");
    }

    #[test]
    fn ring_in_radians_and_fields() {
        let doc = parse(&run(["equivart", "ring", "--r", "2.6", "--coeff", "F2"]));
        assert_eq!(doc["ring"], "Z[u]/(15u^3)");
        assert_eq!(doc["specialized"], "F2[u]/(u^3)");
    }

    #[test]
    fn fixed_example() {
        let doc = parse(&run(["equivart", "fixed", "--n", "15", "--d", "5"]));
        assert_eq!(doc["first_fixed_scale"]["turns"], "2/5");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["equivart", "ring"]).code, 2);
        assert_eq!(run(["equivart", "ring", "--r", "abc"]).code, 2);
        assert_eq!(run(["equivart", "barcode", "--degree", "3"]).code, 3);
        let out = run(["equivart", "fixed", "--n", "10", "--d", "3"]);
        assert_eq!(out.code, 3);
        assert_eq!(parse(&out)["error"]["kind"], "domain");
        assert_eq!(run(["equivart", "--help"]).code, 0);
    }

    #[test]
    fn barcode_csv_output() {
        let out = run(["equivart", "barcode", "--degree", "4", "--csv"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.lines().count() >= 4);
    }

    #[test]
    fn deterministic() {
        let a = run(["equivart", "oracle", "--n", "8", "--maxdim", "2"]);
        let b = run(["equivart", "oracle", "--n", "8", "--maxdim", "2"]);
        assert_eq!(a, b);
        assert_eq!(a.code, 0);
    }
}
