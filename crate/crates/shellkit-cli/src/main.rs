//! `shellkit` — command-line front end.
//!
//! Input is JSON on stdin or from `--input PATH`, auto-detected by shape:
//! `{"n":…,"gens":…}` is a monomial ideal, `{"n":…,"maximal":…}` a
//! multicomplex, `{"n":…,"facets":…}` a simplicial complex, and records with
//! `"order"` or `"base"`/`"steps"` are shelling / filtration certificates.
//!
//! Exit codes: 0 on success, 1 on malformed input or usage errors, 2 on a
//! negative mathematical verdict (not shellable, not pretty clean, record
//! invalid, not of Borel type).

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shellkit::decomposition::{
    arithmetic_degree, associated_primes, dimension_filtration, irreducible_decomposition,
    primary_decomposition, standard_pairs,
};
use shellkit::filtration::{
    find_shelling, stanley_decomposition, verify_pretty_clean,
    PrimeFiltrationRecord, Shelling,
};
use shellkit::invariants::{
    depth_pretty_clean, ext_hilbert, h_table, hilbert_series, is_borel_type, regularity,
    RationalSeries,
};
use shellkit::io::{
    face_repr, ComplexRepr, ComponentRepr, FiltrationRepr, IdealRepr, MulticomplexRepr, PairRepr,
    SeriesRepr, ShellingRepr,
};
use shellkit::monomial::VarSet;
use shellkit::simplicial::{
    clean_filtration_of_complex, find_shelling_bw, multicomplex_of, shelling_numbers, sr_ideal,
    SimplicialComplex,
};
use shellkit::{Error, Monomial, MonomialIdeal, Multicomplex};

#[derive(Parser)]
#[command(name = "shellkit", version, about = "Shellability and cleanness toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Degree bound for series expansions.
    #[arg(long, global = true, default_value_t = 10)]
    degree_bound: u32,

    /// Cross-check results against the brute-force oracles.
    #[cfg(feature = "oracle")]
    #[arg(long, global = true, hide = true)]
    oracle: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Facets of the multicomplex (of an ideal, multicomplex, or complex).
    Facets,
    /// Irreducible decomposition of a monomial ideal.
    Decomp,
    /// Primary decomposition from the irreducible one.
    Primary,
    /// Associated primes.
    Ass,
    /// Standard pairs.
    StdPairs,
    /// Arithmetic degree.
    Arithdeg,
    /// Dimension filtration of the quotient.
    Dimfilt,
    /// Find a shelling of the multicomplex; exit 2 if none exists.
    Shelling,
    /// Pretty clean prime filtration of the quotient; exit 2 if none exists.
    Filtration,
    /// Stanley decomposition read off the pretty clean filtration.
    Stanley,
    /// Hilbert series as a sum of rational terms, with its expansion.
    Hilbert,
    /// Hilbert series of Ext^i against the ring.
    ExtHilbert {
        /// Cohomological index i.
        #[arg(long)]
        index: usize,
    },
    /// Castelnuovo-Mumford regularity of the quotient.
    Reg,
    /// Depth of the quotient (pretty clean case).
    Depth,
    /// Borel-type test; exit 2 if the ideal is not of Borel type.
    Borel,
    /// Non-pure shelling of a simplicial complex and the induced clean
    /// filtration of its Stanley-Reisner ring; exit 2 if not shellable.
    Dress,
    /// Shelling numbers a_i and monomials f_i of a shellable complex.
    ShellNumbers,
    /// Re-verify an exported shelling or filtration record; exit 2 if invalid.
    Verify,
}

/// A failed run: `Input` exits 1, `Verdict` (a mathematically negative
/// answer) exits 2.
enum Failure {
    Input(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("invalid JSON: {}", e))
    }
}

type RunResult = Result<(), Failure>;

/// The auto-detected input object.
enum Input {
    Ideal(MonomialIdeal),
    Gamma(Multicomplex),
    Complex(SimplicialComplex),
    ShellingRecord(ShellingRepr),
    FiltrationRecord(FiltrationRepr),
}

fn read_input(path: &str) -> Result<Input, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {}", e)))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {}", path, e)))?
    };
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::Input("input must be a JSON object".into()))?;
    if obj.contains_key("order") {
        Ok(Input::ShellingRecord(serde_json::from_value(value)?))
    } else if obj.contains_key("base") && obj.contains_key("steps") {
        Ok(Input::FiltrationRecord(serde_json::from_value(value)?))
    } else if obj.contains_key("gens") {
        let repr: IdealRepr = serde_json::from_value(value)?;
        Ok(Input::Ideal(MonomialIdeal::try_from(repr)?))
    } else if obj.contains_key("maximal") {
        let repr: MulticomplexRepr = serde_json::from_value(value)?;
        Ok(Input::Gamma(Multicomplex::try_from(repr)?))
    } else if obj.contains_key("facets") {
        let repr: ComplexRepr = serde_json::from_value(value)?;
        Ok(Input::Complex(SimplicialComplex::try_from(repr)?))
    } else {
        Err(Failure::Input(
            "unrecognized input: expected keys gens, maximal, facets, order, or base+steps"
                .into(),
        ))
    }
}

fn as_ideal(input: Input) -> Result<MonomialIdeal, Failure> {
    match input {
        Input::Ideal(i) => Ok(i),
        Input::Gamma(g) => Ok(g.ideal_of()),
        Input::Complex(d) => Ok(sr_ideal(&d)),
        _ => Err(Failure::Input(
            "this command expects an ideal, multicomplex, or complex".into(),
        )),
    }
}

fn as_multicomplex(input: Input) -> Result<Multicomplex, Failure> {
    match input {
        Input::Ideal(i) => Ok(Multicomplex::of_ideal(&i)?),
        Input::Gamma(g) => Ok(g),
        Input::Complex(d) => Ok(multicomplex_of(&d)),
        _ => Err(Failure::Input(
            "this command expects an ideal, multicomplex, or complex".into(),
        )),
    }
}

fn as_complex(input: Input) -> Result<SimplicialComplex, Failure> {
    match input {
        Input::Complex(d) => Ok(d),
        _ => Err(Failure::Input(
            "this command expects a simplicial complex ({\"n\":…,\"facets\":…})".into(),
        )),
    }
}

fn emit(format: Format, text: String, json: serde_json::Value) {
    match format {
        Format::Text => println!("{}", text),
        Format::Json => println!("{}", json),
    }
}

fn vars_1based(z: &VarSet) -> Vec<usize> {
    z.iter().map(|i| i + 1).collect()
}

fn var_list(z: &VarSet) -> String {
    z.iter()
        .map(|i| format!("x{}", i + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn gens_json(i: &MonomialIdeal) -> serde_json::Value {
    json!(i.gens().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>())
}

fn render_series(s: &RationalSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let piece = |&(e, c): &(i64, i64)| -> String {
        match (c, e) {
            (c, 0) => format!("{}", c),
            (1, 1) => "t".into(),
            (1, e) => format!("t^{}", e),
            (c, 1) => format!("{}*t", c),
            (c, e) => format!("{}*t^{}", c, e),
        }
    };
    s.terms
        .iter()
        .filter(|t| !t.numerator.is_empty())
        .map(|t| {
            let num = t.numerator.iter().map(piece).collect::<Vec<_>>().join(" + ");
            match t.pole {
                0 => num,
                1 => format!("({})/(1-t)", num),
                p => format!("({})/(1-t)^{}", num, p),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The pretty clean filtration of `I`, or a negative verdict.
fn filtration_of(ideal: &MonomialIdeal) -> Result<PrimeFiltrationRecord, Failure> {
    match shellkit::filtration::pretty_clean_filtration(ideal)? {
        Some(f) => Ok(f),
        None => Err(Failure::Verdict(
            "the quotient is not pretty clean: its multicomplex has no shelling".into(),
        )),
    }
}

fn shelling_text(sh: &Shelling) -> String {
    let mut out = String::new();
    for (i, s) in sh.steps().iter().enumerate() {
        out.push_str(&format!(
            "{}. facet {}  u = {}  Z = {{{}}}  prime = {}\n",
            i + 1,
            s.facet(),
            s.monomial(),
            var_list(s.stanley_vars()),
            s.prime()
        ));
    }
    out.pop();
    out
}

fn run(cli: Cli) -> RunResult {
    let format = cli.format;
    let bound = cli.degree_bound;
    #[cfg(feature = "oracle")]
    let oracle = cli.oracle;
    #[cfg(not(feature = "oracle"))]
    let oracle = false;
    let _ = oracle;
    let input = read_input(&cli.input)?;

    match cli.command {
        Command::Facets => {
            let gamma = as_multicomplex(input)?;
            let facets = gamma.facets();
            let text = facets
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<_> = facets.iter().map(face_repr).collect();
            emit(
                format,
                text,
                json!({"n": gamma.n(), "facets": serde_json::to_value(reprs).unwrap()}),
            );
        }
        Command::Decomp => {
            let ideal = as_ideal(input)?;
            let comps = irreducible_decomposition(&ideal)?;
            let text = comps
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<ComponentRepr> = comps.iter().map(ComponentRepr::from).collect();
            emit(format, text, serde_json::to_value(reprs).unwrap());
        }
        Command::Primary => {
            let ideal = as_ideal(input)?;
            let parts = primary_decomposition(&ideal)?;
            let text = parts
                .iter()
                .map(|(p, q)| format!("{} -> {}", p, q))
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<_> = parts
                .iter()
                .map(|(p, q)| json!({"prime": vars_1based(p), "component": gens_json(q)}))
                .collect();
            emit(format, text, json!(reprs));
        }
        Command::Ass => {
            let ideal = as_ideal(input)?;
            let primes = associated_primes(&ideal)?;
            let text = primes
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<_> = primes.iter().map(vars_1based).collect();
            emit(format, text, json!(reprs));
        }
        Command::StdPairs => {
            let ideal = as_ideal(input)?;
            let pairs = standard_pairs(&ideal)?;
            #[cfg(feature = "oracle")]
            if oracle {
                let expected = shellkit_oracle::standard_pairs_bruteforce(&ideal);
                let mut got = pairs.clone();
                got.sort();
                if got != expected {
                    return Err(Failure::Input(
                        "oracle disagreement on the standard pairs".into(),
                    ));
                }
            }
            let text = pairs
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<PairRepr> = pairs.iter().map(PairRepr::from).collect();
            emit(format, text, serde_json::to_value(reprs).unwrap());
        }
        Command::Arithdeg => {
            let ideal = as_ideal(input)?;
            let d = arithmetic_degree(&ideal)?;
            emit(format, d.to_string(), json!({"arithmetic_degree": d}));
        }
        Command::Dimfilt => {
            let ideal = as_ideal(input)?;
            let df = dimension_filtration(&ideal)?;
            let text = df
                .levels()
                .iter()
                .enumerate()
                .map(|(idx, level)| format!("D_{} = {}", idx as i64 - 1, level))
                .collect::<Vec<_>>()
                .join("\n");
            let levels: Vec<_> = df.levels().iter().map(gens_json).collect();
            emit(
                format,
                text,
                json!({
                    "n": ideal.n(),
                    "levels": levels,
                    "dim": df.dim(),
                    "first_jump": df.first_jump(),
                }),
            );
        }
        Command::Shelling => {
            let gamma = as_multicomplex(input)?;
            let found = find_shelling(&gamma)?;
            #[cfg(feature = "oracle")]
            if oracle {
                let expected = shellkit_oracle::shellable_bruteforce(&gamma)
                    .map_err(|e| Failure::Input(e.to_string()))?;
                if expected != found.is_some() {
                    return Err(Failure::Input(
                        "oracle disagreement on shellability".into(),
                    ));
                }
            }
            let sh = found.ok_or_else(|| {
                Failure::Verdict("the multicomplex is not shellable".into())
            })?;
            emit(
                format,
                shelling_text(&sh),
                serde_json::to_value(ShellingRepr::from(&sh)).unwrap(),
            );
        }
        Command::Filtration => {
            let ideal = as_ideal(input)?;
            let f = filtration_of(&ideal)?;
            emit(
                format,
                f.to_string().trim_end().to_string(),
                serde_json::to_value(FiltrationRepr::from(&f)).unwrap(),
            );
        }
        Command::Stanley => {
            let ideal = as_ideal(input)?;
            let f = filtration_of(&ideal)?;
            let dec = stanley_decomposition(&f);
            let text = dec
                .summands
                .iter()
                .map(|(u, z)| format!("{} * K[{}]", u, var_list(z)))
                .collect::<Vec<_>>()
                .join("\n");
            let reprs: Vec<_> = dec
                .summands
                .iter()
                .map(|(u, z)| json!({"u": u.exponents(), "Z": vars_1based(z)}))
                .collect();
            emit(format, text, json!(reprs));
        }
        Command::Hilbert => {
            let ideal = as_ideal(input)?;
            let table = h_table(&filtration_of(&ideal)?)?;
            let series = hilbert_series(&table);
            let expansion = series.expand(bound);
            #[cfg(feature = "oracle")]
            if oracle {
                let expected: Vec<i64> = shellkit_oracle::standard_monomial_counts(&ideal, bound)
                    .into_iter()
                    .map(|c| c as i64)
                    .collect();
                if expansion != expected {
                    return Err(Failure::Input(
                        "oracle disagreement on the Hilbert series expansion".into(),
                    ));
                }
            }
            emit(
                format,
                format!("{}\nexpansion: {:?}", render_series(&series), expansion),
                json!({
                    "series": serde_json::to_value(SeriesRepr::from(&series)).unwrap(),
                    "expansion": expansion,
                }),
            );
        }
        Command::ExtHilbert { index } => {
            let ideal = as_ideal(input)?;
            let table = h_table(&filtration_of(&ideal)?)?;
            let series = ext_hilbert(&table, index)?;
            let expansion = series.expand(bound);
            emit(
                format,
                format!("{}\nexpansion: {:?}", render_series(&series), expansion),
                json!({
                    "i": index,
                    "series": serde_json::to_value(SeriesRepr::from(&series)).unwrap(),
                    "expansion": expansion,
                }),
            );
        }
        Command::Reg => {
            let ideal = as_ideal(input)?;
            let table = h_table(&filtration_of(&ideal)?)?;
            let r = regularity(&table)?;
            emit(format, r.to_string(), json!({"regularity": r}));
        }
        Command::Depth => {
            let ideal = as_ideal(input)?;
            let d = match depth_pretty_clean(&ideal) {
                Ok(d) => d,
                Err(Error::NotPrettyClean) => {
                    return Err(Failure::Verdict(
                        "depth is only computed for pretty clean quotients, and this one \
                         is not pretty clean"
                            .into(),
                    ));
                }
                Err(e) => return Err(e.into()),
            };
            emit(format, d.to_string(), json!({"depth": d}));
        }
        Command::Borel => {
            let ideal = as_ideal(input)?;
            if is_borel_type(&ideal)? {
                emit(format, "Borel type: yes".into(), json!({"borel": true}));
            } else {
                return Err(Failure::Verdict("the ideal is not of Borel type".into()));
            }
        }
        Command::Dress => {
            let delta = as_complex(input)?;
            let order = find_shelling_bw(&delta)?.ok_or_else(|| {
                Failure::Verdict("the simplicial complex is not shellable".into())
            })?;
            let f = clean_filtration_of_complex(&delta, &order)?;
            let order_text = order
                .iter()
                .map(|fi| format!("{{{}}}", var_list(fi)))
                .collect::<Vec<_>>()
                .join(", ");
            let text = format!(
                "shelling order: {}\nclean filtration:\n{}",
                order_text,
                f.to_string().trim_end()
            );
            let order_json: Vec<_> = order.iter().map(vars_1based).collect();
            emit(
                format,
                text,
                json!({
                    "order": order_json,
                    "filtration": serde_json::to_value(FiltrationRepr::from(&f)).unwrap(),
                }),
            );
        }
        Command::ShellNumbers => {
            let delta = as_complex(input)?;
            let order = find_shelling_bw(&delta)?.ok_or_else(|| {
                Failure::Verdict("the simplicial complex is not shellable".into())
            })?;
            let numbers = shelling_numbers(&delta, &order)?;
            let text = numbers
                .order
                .iter()
                .zip(numbers.a.iter().zip(&numbers.f))
                .enumerate()
                .map(|(i, (fi, (a, f)))| {
                    format!("{}. {{{}}}  a = {}  f = {}", i + 1, var_list(fi), a, f)
                })
                .collect::<Vec<_>>()
                .join("\n");
            let order_json: Vec<_> = numbers.order.iter().map(vars_1based).collect();
            let f_json: Vec<_> = numbers.f.iter().map(Monomial::exponents).collect();
            emit(
                format,
                text,
                json!({"order": order_json, "a": numbers.a, "f": f_json}),
            );
        }
        Command::Verify => {
            let as_verdict = |e: Error| match e {
                Error::NotAShelling { .. }
                | Error::InvalidFiltration { .. }
                | Error::ShellingMismatch
                | Error::NotAFacetPermutation => Failure::Verdict(e.to_string()),
                other => Failure::Input(other.to_string()),
            };
            match input {
                Input::ShellingRecord(r) => {
                    shellkit::io::verify_shelling_repr(&r).map_err(as_verdict)?;
                    emit(
                        format,
                        "valid shelling".into(),
                        json!({"valid": true, "kind": "shelling"}),
                    );
                }
                Input::FiltrationRecord(r) => {
                    let record = PrimeFiltrationRecord::try_from(r)?;
                    verify_pretty_clean(&record).map_err(as_verdict)?;
                    emit(
                        format,
                        "valid pretty clean filtration".into(),
                        json!({"valid": true, "kind": "filtration"}),
                    );
                }
                _ => {
                    return Err(Failure::Input(
                        "verify expects a shelling or filtration record".into(),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Verdict(msg)) => {
            match format {
                Format::Text => println!("no: {}", msg),
                Format::Json => println!("{}", json!({"valid": false, "reason": msg})),
            }
            ExitCode::from(2)
        }
    }
}
