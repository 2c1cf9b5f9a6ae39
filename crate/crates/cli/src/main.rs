mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fliess_core::{
    classify, cfl_factorize, compose, factor, factor_shuffle, json, nullability, nullable_analysis,
    nulling_series, realization, relative_degree, shuffle_inverse, to_lyndon, Alphabet, Error,
    Family, LyndonMap, LyndonTable,
};
use serde_json::{json, Value};

use input::Operand;
use output::Out;

#[derive(Parser)]
#[command(name = "fliess", version, about = "Exact Chen–Fliess series toolkit")]
struct Cli {
    /// Truncation length for series results.
    #[arg(long, global = true, default_value_t = 10)]
    order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Operands are expressions, or `@path` to read one from a file (JSON when
/// the file starts with `{`).
#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two series.
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Concatenation product of two series.
    Concat {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Composition product `c ∘ d`.
    Compose {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Shuffle inverse of a non-proper series.
    Shinv {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Left shift by a word prefix.
    Lshift {
        #[arg(allow_hyphen_values = true)]
        prefix: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Relative degree and gain.
    Reldeg {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Nullability verdict with the nulling jet when one exists.
    Classify {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Nulling jet of a linearly nullable series.
    Nullseries {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// `c ∘ c_u`, which vanishes when `c_u` nulls `c`.
    Verifynull {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        cu: String,
    },
    /// Chen–Fox–Lyndon factorization of a word.
    Cfl {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Lyndon words with their variable indices.
    Lyndon {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        letters: usize,
    },
    /// Image of a series in the Lyndon polynomial ring.
    Tolyndon {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Series with the given Lyndon polynomial image.
    Fromlyndon {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Factorization of a commutative polynomial.
    Factor {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Unique shuffle factorization.
    Shufflefactor {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Shuffle factorization with a nullability report per factor.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Generating series of a polynomial input-affine system.
    Realize {
        #[arg(long)]
        file: String,
    },
    /// Output polynomial of a Fliess operator for a polynomial input.
    Evalfliess {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
}

fn run(cli: &Cli) -> Result<Out, Error> {
    let n = cli.order;
    Ok(match &cli.command {
        Command::Shuffle { c, d } => {
            let (c, d) = (Operand::read(c)?.series()?, Operand::read(d)?.series()?);
            // Polynomials shuffle exactly; the order only caps truncated operands.
            let s = if c.is_exact() && d.is_exact() { c.shuffle(&d) } else { c.shuffle_to(&d, n) };
            Out::series("shuffle", &s)
        }
        Command::Concat { c, d } => {
            let (c, d) = (Operand::read(c)?.series()?, Operand::read(d)?.series()?);
            Out::series("concat", &c.concat(&d))
        }
        Command::Compose { c, d } => {
            let (c, d) = (Operand::read(c)?.series()?, Operand::read(d)?.series()?);
            Out::series("compose", &compose(&c, &d, n)?)
        }
        Command::Shinv { c } => Out::series("shinv", &shuffle_inverse(&Operand::read(c)?.series()?, n)?),
        Command::Lshift { prefix, c } => {
            let prefix = fliess_core::parse::parse_word_expr(prefix)?;
            Out::series("lshift", &Operand::read(c)?.series()?.left_shift(&prefix)?)
        }
        Command::Reldeg { c } => {
            let rd = relative_degree(&Operand::read(c)?.series()?)?;
            let payload = match &rd {
                nullability::RelativeDegree::Defined { r, k } => json!({"r": r, "K": json::rational(k)}),
                nullability::RelativeDegree::Undefined(why) => {
                    json!({"r": null, "K": null, "reason": why.as_str()})
                }
            };
            Out::new("relative_degree", rd.to_string(), payload)
        }
        Command::Classify { c } => {
            let report = classify(&Operand::read(c)?.series()?, n)?;
            Out::new("report", output::report_text(&report), json::report(&report))
        }
        Command::Nullseries { c } => {
            let jet = nulling_series(&Operand::read(c)?.series()?, n)?;
            Out::series("nulling_series", jet.series())
        }
        Command::Verifynull { c, cu } => {
            let (c, cu) = (Operand::read(c)?.series()?, Operand::read(cu)?.series()?);
            let residual = nullability::verify_null(&c, &cu, n)?;
            let text = format!(
                "{residual}\norder: {}",
                residual.order().map_or_else(|| format!("> {n}"), |k| k.to_string())
            );
            Out::new(
                "residual",
                text,
                json!({"residual": json::series(&residual), "order": residual.order()}),
            )
        }
        Command::Cfl { word } => {
            let w = fliess_core::words::parse_word(word)?;
            let factors = cfl_factorize(w.letters())?;
            let text: String = factors.iter().map(|f| format!("({f})")).collect();
            let payload = json!({
                "factors": factors.iter().map(|f| f.letters().iter().map(|l| l.0).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "text": text,
            });
            Out::new("cfl", text, payload)
        }
        Command::Lyndon { max_len, letters } => {
            let alphabet = Alphabet::new(*letters)?;
            let mut table = LyndonTable::new(alphabet);
            let mut rows = Vec::new();
            for w in alphabet.lyndon_enumerate(*max_len) {
                rows.push((table.index_of(&w)?.0, w));
            }
            rows.sort();
            let text = rows.iter().map(|(i, w)| format!("l{i} = {w}")).collect::<Vec<_>>().join("\n");
            let payload = json!({
                "words": rows.iter().map(|(i, w)| json!({
                    "index": i,
                    "word": w.letters().iter().map(|l| l.0).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            Out::new("lyndon_words", text, payload)
        }
        Command::Tolyndon { c } => Out::polynomial("polynomial", &to_lyndon(&Operand::read(c)?.series()?)?),
        Command::Fromlyndon { p } => {
            let p = Operand::read(p)?.polynomial(Family::Lyndon)?;
            let alphabet = Alphabet::new(2)?;
            Out::series("series", &LyndonMap::new(alphabet).from_lyndon(&p)?)
        }
        Command::Factor { p } => {
            let p = Operand::read(p)?.polynomial(Family::Lyndon)?;
            let f = factor(&p)?;
            Out::new("factorization", output::factorization_text(&f), json::factorization(&f))
        }
        Command::Shufflefactor { c } => {
            let f = factor_shuffle(&Operand::read(c)?.series()?)?;
            Out::new(
                "shuffle_factorization",
                output::shuffle_factorization_text(&f),
                json::shuffle_factorization(&f),
            )
        }
        Command::Analyze { c } => {
            let a = nullable_analysis(&Operand::read(c)?.series()?, n)?;
            Out::new("shuffle_analysis", output::analysis_text(&a), json::shuffle_analysis(&a))
        }
        Command::Realize { file } => {
            let sys = Operand::read(&format!("@{file}"))?.realization()?;
            Out::series("series", &realization::generating_series(&sys, n)?)
        }
        Command::Evalfliess { c, input } => {
            let c = Operand::read(c)?.series()?;
            let u = Operand::read(input)?.time_polynomial()?;
            let y = realization::evaluate_fliess(&c, &u, n)?;
            Out::new("time_polynomial", y.to_string(), json::time_polynomial(&y))
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Capacity(_) => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            out.print(cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => {
                    let doc: Value = json::document("error", json!({"code": exit_code(&e), "message": e.to_string()}));
                    println!("{doc}");
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
