//! Command-line front end for `quadec-core`.
//!
//! [`run`] does all the work and returns the exit code together with the
//! captured stdout and stderr, so the binary is a thin shell around it.
//! Exit codes: 0 success, 1 usage or syntax error, 2 domain error.

mod json;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use quadec_core::{
    classify_quadrinomial, decompose_oracle, dickson, dickson_match, dziury_check, format_poly,
    gv_determinant, mason_stothers_check, match_standard_pair, parse_poly, radical, realize,
    search_solutions, theorem_a_verdict, theorem_b_verdict, trivial_decompositions, Decomposition,
    DicksonSpec, FinitenessVerdict, IndexSequences, LacunaryProfile, LinearMap, PairKind,
    Quadrinomial, Rational, SparsePoly, StandardPair, DEFAULT_MAX_BOUND,
};

use json::{render, DecompositionJson, SolutionJson, VerdictJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "quadec", version, about = "Exact polynomial decomposition and related checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All decompositions f = g(h) with h monic, h(0) = 0 and 1 < deg h < deg f
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Also list the two decompositions through a linear polynomial
        #[arg(long)]
        include_trivial: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decompositions of a quadrinomial, tagged by case
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// The Dickson polynomial D_n(x, a)
    Dickson {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Find u, v, gamma with f(u x + v) = D_n(x, gamma)
    DicksonMatch {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Standard pairs
    Pair {
        #[command(subcommand)]
        command: PairCommand,
    },
    /// det(binom(a_i, b_j)) for comma-separated sequences
    GvDet {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Term counts of g and g(u x + v)
    Dziury {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Check the finiteness hypotheses for f(x) = g(y)
    Finiteness {
        #[arg(value_enum, ignore_case = true)]
        theorem: Theorem,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        json: bool,
    },
    /// Integer solutions of f(x) = g(y) with |x|, |y| <= bound
    Solve {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_BOUND)]
        max_bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Squarefree part of a polynomial
    Radical {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Mason-Stothers inequality for a + b = c
    MsCheck {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
}

#[derive(Subcommand)]
enum PairCommand {
    /// Build a pair: first m r a p | second a b p | third m n a | fourth m n a b | fifth a
    Realize {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long)]
        switched: bool,
    },
    /// Recognize (f1, g1) as a standard pair
    Match {
        #[arg(allow_hyphen_values = true)]
        f1: String,
        #[arg(allow_hyphen_values = true)]
        g1: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    First,
    Second,
    Third,
    Fourth,
    Fifth,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<quadec_core::Error> for Failure {
    fn from(e: quadec_core::Error) -> Self {
        if e.is_syntax() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type CmdResult = Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn poly(text: &str) -> Result<SparsePoly, Failure> {
    parse_poly(text).map_err(|e| Failure::Usage(format!("in '{text}': {e}")))
}

fn rational(text: &str) -> Result<Rational, Failure> {
    let p = poly(text)?;
    if !p.is_constant() {
        return Err(Failure::Usage(format!("expected a rational number, found '{text}'")));
    }
    Ok(p.constant_term())
}

fn natural(text: &str) -> Result<u32, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("expected a non-negative integer, found '{text}'")))
}

fn sequence(text: &str) -> Result<Vec<u64>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("expected a non-negative integer, found '{s}'")))
        })
        .collect()
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Decompose { poly: text, include_trivial, json } => {
            let f = poly(&text)?;
            let mut found = decompose_oracle(&f)?;
            if include_trivial {
                for d in trivial_decompositions(&f)? {
                    if !found.contains(&d) {
                        found.push(d);
                    }
                }
            }
            Ok(decompositions(&found, json))
        }
        Command::Classify { poly: text, json } => {
            let q = Quadrinomial::from_poly(&poly(&text)?)?;
            Ok(decompositions(&classify_quadrinomial(&q), json))
        }
        Command::Dickson { n, a } => {
            let spec = DicksonSpec::new(n, rational(&a)?)?;
            Ok(format!("{}\n", format_poly(&dickson(&spec))))
        }
        Command::DicksonMatch { poly: text } => {
            let f = poly(&text)?;
            Ok(match dickson_match(&f)? {
                None => "no match\n".to_string(),
                Some(m) => {
                    let mut out = format!("u = {}\nv = {}\ngamma = {}\n", m.u, m.v, m.gamma);
                    if m.is_degenerate() {
                        out.push_str("degenerate: gamma = 0\n");
                    }
                    out
                }
            })
        }
        Command::Pair { command: PairCommand::Realize { kind, mut params, mut switched } } => {
            // hyphenated parameters swallow a trailing flag
            if let Some(i) = params.iter().position(|p| p == "--switched") {
                params.remove(i);
                switched = true;
            }
            let pair = StandardPair::new(pair_kind(kind, &params)?, switched)?;
            let (f1, g1) = realize(&pair)?;
            Ok(format!("f1 = {}\ng1 = {}\n", format_poly(&f1), format_poly(&g1)))
        }
        Command::Pair { command: PairCommand::Match { f1, g1 } } => {
            Ok(match match_standard_pair(&poly(&f1)?, &poly(&g1)?) {
                Some(pair) => format!("{pair}\n"),
                None => "no standard pair\n".to_string(),
            })
        }
        Command::GvDet { a, b } => {
            let s = IndexSequences::new(sequence(&a)?, sequence(&b)?)?;
            let det = gv_determinant(&s);
            Ok(format!("det = {}\ndominance = {}\n", det.value, det.dominance))
        }
        Command::Dziury { poly: text, u, v } => {
            let map = LinearMap::new(rational(&u)?, rational(&v)?)?;
            let r = dziury_check(&poly(&text)?, &map)?;
            Ok(format!(
                "n = {}\nk = {}\nl = {}\nn + 2 <= k + l: {}\n",
                r.n,
                r.k,
                r.l,
                if r.holds { "holds" } else { "fails" }
            ))
        }
        Command::Finiteness { theorem, f, g, json } => {
            let (f, g) = (poly(&f)?, poly(&g)?);
            let verdict = match theorem {
                Theorem::A => theorem_a_verdict(&Quadrinomial::from_poly(&f)?, &Quadrinomial::from_poly(&g)?),
                Theorem::B => theorem_b_verdict(&LacunaryProfile::from_poly(&f)?, &g)?,
            };
            Ok(if json { render(&VerdictJson::from(&verdict)) } else { verdict_text(&verdict) })
        }
        Command::Solve { f, g, bound, max_bound, json } => {
            let found = search_solutions(&poly(&f)?, &poly(&g)?, bound, max_bound)?;
            if json {
                let rows: Vec<SolutionJson> = found
                    .iter()
                    .map(|(x, y)| SolutionJson { x: x.to_string(), y: y.to_string() })
                    .collect();
                return Ok(render(&rows));
            }
            let mut out = String::new();
            for (x, y) in &found {
                writeln!(out, "{x} {y}").unwrap();
            }
            writeln!(out, "{} solutions with |x|, |y| <= {bound}", found.len()).unwrap();
            Ok(out)
        }
        Command::Radical { poly: text } => Ok(format!("{}\n", format_poly(&radical(&poly(&text)?)?))),
        Command::MsCheck { a, b, c } => {
            let r = mason_stothers_check(&poly(&a)?, &poly(&b)?, &poly(&c)?)?;
            Ok(format!(
                "max deg = {}\ndeg rad(abc) = {}\nmax deg <= deg rad(abc) - 1: {}\n",
                r.max_deg,
                r.rad_deg,
                if r.holds { "holds" } else { "fails" }
            ))
        }
    }
}

fn pair_kind(kind: Kind, params: &[String]) -> Result<PairKind, Failure> {
    let expected = match kind {
        Kind::First => 4,
        Kind::Second => 3,
        Kind::Third => 3,
        Kind::Fourth => 4,
        Kind::Fifth => 1,
    };
    if params.len() != expected {
        return Err(Failure::Usage(format!(
            "this kind takes {expected} parameters, got {}",
            params.len()
        )));
    }
    let p = params;
    Ok(match kind {
        Kind::First => PairKind::First { m: natural(&p[0])?, r: natural(&p[1])?, a: rational(&p[2])?, p: poly(&p[3])? },
        Kind::Second => PairKind::Second { a: rational(&p[0])?, b: rational(&p[1])?, p: poly(&p[2])? },
        Kind::Third => PairKind::Third { m: natural(&p[0])?, n: natural(&p[1])?, a: rational(&p[2])? },
        Kind::Fourth => PairKind::Fourth {
            m: natural(&p[0])?,
            n: natural(&p[1])?,
            a: rational(&p[2])?,
            b: rational(&p[3])?,
        },
        Kind::Fifth => PairKind::Fifth { a: rational(&p[0])? },
    })
}

fn decompositions(found: &[Decomposition], json: bool) -> String {
    if json {
        let rows: Vec<DecompositionJson> = found.iter().map(DecompositionJson::from).collect();
        return render(&rows);
    }
    if found.is_empty() {
        return "no decompositions\n".to_string();
    }
    let mut out = String::new();
    for d in found {
        writeln!(out, "{}: g = {}, h = {}", d.case, format_poly(&d.g), format_poly(&d.h)).unwrap();
    }
    out
}

fn verdict_text(v: &FinitenessVerdict) -> String {
    let mut out = format!("{}\n", v.status.name());
    for c in &v.conditions {
        writeln!(out, "  [{}] {}", if c.satisfied { "ok" } else { "fail" }, c.name).unwrap();
    }
    out
}
