//! Batch command-line front end.
//!
//! Exit codes: 0 yes or pass, 1 no or fail, 2 usage, parse or input error
//! (including a non-identity product), 3 a search bound was exceeded.

use crate::braid::{self, braid_equal_mod_center, lift_factorization, parse_braid_factorization, CentralProduct};
use crate::catalogue;
use crate::error::{BoundExceeded, Error, Result};
use crate::factorization::{bounded_search, check_certificate, named, replay, Factorization, HurwitzCertificate, Move, SearchOutcome};
use crate::identities::stable_reduce;
use crate::mcg::{self, mcg_equal, mcg_equal_mod_center, named as words, validate_presentation, MCGWord};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// Search and oracle bounds shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct Config {
    /// Maximum number of moves in `search`.
    #[arg(long = "depth", default_value_t = 6, global = true)]
    pub search_depth: usize,
    /// Node budget of `search`.
    #[arg(long = "nodes", default_value_t = 200_000, global = true)]
    pub search_nodes: usize,
    /// Extra room for the conjugacy search behind every equality test.
    #[arg(long = "slack", default_value_t = crate::surface::DEFAULT_SLACK, global = true)]
    pub conjugacy_bound_slack: usize,
    /// Seed for `scramble`.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Directory of frozen certificates.
    #[arg(long = "cert-dir", global = true)]
    pub certificate_dir: Option<PathBuf>,
}

impl Config {
    fn validate(&self) -> Result<()> {
        if self.search_depth == 0 || self.search_nodes == 0 || self.conjugacy_bound_slack == 0 {
            return Err(Error::Precondition("--depth, --nodes and --slack must be positive".into()));
        }
        Ok(())
    }

    fn cert_dir(&self) -> PathBuf {
        self.certificate_dir.clone().unwrap_or_else(catalogue::default_certificate_dir)
    }
}

#[derive(Parser, Debug)]
#[command(name = "genus2", version, about = "Dehn twist factorizations in the genus-2 mapping class group")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the presentation, named factorizations, braid identities and frozen certificates.
    VerifyAll,
    /// Stabilize an identity factorization into (W0)^{n+k} (W1)^ε (W2)^m.
    Reduce {
        file: PathBuf,
        /// Where to write the certificate; defaults to FILE.cert.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide equality of two words in z1..z5 (or x1..x5 with --braid).
    Equal {
        u: String,
        v: String,
        /// Compare modulo the hyperelliptic involution.
        #[arg(long)]
        mod_center: bool,
        /// Read braid words and compare their lifts modulo the center.
        #[arg(long)]
        braid: bool,
    },
    /// Check or replay certificates, or regenerate the frozen set.
    #[command(subcommand)]
    Certificate(CertCommand),
    /// Factor count, separating count, transitivity and product of a factorization.
    Invariants { file: PathBuf },
    /// Look for a certificate between two factorizations.
    Search { from: PathBuf, to: PathBuf },
    /// Lift a braid factorization file to the mapping class group.
    Lift { file: PathBuf },
    /// Apply random Hurwitz moves (seeded by --seed).
    Scramble {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        moves: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CertCommand {
    /// Replay CERT on FROM and compare factorwise with TO.
    Check { from: PathBuf, cert: PathBuf, to: PathBuf },
    /// Replay CERT on FROM and print the result.
    Replay { from: PathBuf, cert: PathBuf },
    /// Write every generated certificate into the certificate directory.
    Freeze,
}

/// Parses `args` and runs the command; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            print!("{report}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Bound(_) => EXIT_BOUND,
        _ => EXIT_INPUT,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn read_factorization(path: &Path) -> Result<Factorization> {
    read(path)?.parse()
}

fn read_certificate(path: &Path) -> Result<HurwitzCertificate> {
    read(path)?.parse()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> (String, i32) {
    (format!("{}\n", yes_no(b)), if b { EXIT_PASS } else { EXIT_FAIL })
}

/// Runs a parsed command; the report goes to standard output.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let cfg = &cli.config;
    cfg.validate()?;
    mcg::set_conjugacy_slack(cfg.conjugacy_bound_slack);
    match &cli.command {
        Command::VerifyAll => Ok(verify_all(&cfg.cert_dir())),
        Command::Reduce { file, out } => reduce(file, out.as_deref()),
        Command::Equal { u, v, mod_center, braid } => {
            let eq = if *braid {
                braid_equal_mod_center(&u.parse()?, &v.parse()?)?
            } else {
                let (u, v): (MCGWord, MCGWord) = (u.parse()?, v.parse()?);
                if *mod_center {
                    mcg_equal_mod_center(&u, &v)?
                } else {
                    mcg_equal(&u, &v)?
                }
            };
            Ok(verdict(eq))
        }
        Command::Certificate(CertCommand::Check { from, cert, to }) => {
            let ok = check_certificate(&read_factorization(from)?, &read_certificate(cert)?, &read_factorization(to)?)?;
            Ok(verdict(ok))
        }
        Command::Certificate(CertCommand::Replay { from, cert }) => {
            Ok((replay(&read_factorization(from)?, &read_certificate(cert)?)?.to_string(), EXIT_PASS))
        }
        Command::Certificate(CertCommand::Freeze) => {
            let mut s = String::new();
            for p in catalogue::freeze(&cfg.cert_dir())? {
                let _ = writeln!(s, "wrote {}", p.display());
            }
            Ok((s, EXIT_PASS))
        }
        Command::Invariants { file } => {
            let f = read_factorization(file)?;
            let mut s = String::new();
            let _ = writeln!(s, "factors: {}", f.len());
            let _ = writeln!(s, "separating: {}", f.count_separating());
            let _ = writeln!(s, "transitive: {}", yes_no(f.is_transitive()));
            let _ = writeln!(s, "identity product: {}", yes_no(f.is_identity()?));
            Ok((s, EXIT_PASS))
        }
        Command::Search { from, to } => {
            let (f, g) = (read_factorization(from)?, read_factorization(to)?);
            match bounded_search(&f, &g, cfg.search_depth, cfg.search_nodes)? {
                SearchOutcome::Found(c) => {
                    Ok((format!("# {} moves\n{c}", c.move_count()?), EXIT_PASS))
                }
                SearchOutcome::Exhausted => Ok(("exhausted: no certificate within the depth bound\n".into(), EXIT_FAIL)),
                SearchOutcome::NodeLimit => Err(BoundExceeded { what: "search nodes", limit: cfg.search_nodes }.into()),
            }
        }
        Command::Lift { file } => {
            let b = parse_braid_factorization(&read(file)?)?;
            let l = lift_factorization(&b)?;
            let product = match l.product {
                Some(CentralProduct::One) => "1",
                Some(CentralProduct::Hyperelliptic) => "I",
                None => "neither 1 nor I",
            };
            Ok((format!("# product: {product}\n{}", l.factorization), EXIT_PASS))
        }
        Command::Scramble { file, moves } => {
            let mut f = read_factorization(file)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut s = String::new();
            if f.len() >= 2 {
                for _ in 0..*moves {
                    let i = rng.gen_range(1..f.len());
                    let m = if rng.gen_bool(0.5) { Move::l(i) } else { Move::r(i) };
                    f.apply_in_place(m)?;
                    let _ = writeln!(s, "# {m}");
                }
            }
            s.push_str(&f.to_string());
            Ok((s, EXIT_PASS))
        }
    }
}

fn reduce(file: &Path, out: Option<&Path>) -> Result<(String, i32)> {
    let f = read_factorization(file)?;
    if !f.is_identity()? {
        let p = f.product();
        return Err(Error::NotIdentity(format!("S6 image {}, Sp4 image {}", p.s6_image(), p.sp4_image())));
    }
    let form = stable_reduce(&f)?;
    let path = out.map(Path::to_path_buf).unwrap_or_else(|| {
        let mut p = file.as_os_str().to_owned();
        p.push(".cert");
        PathBuf::from(p)
    });
    fs::write(&path, form.cert.to_string())?;
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", form.n);
    let _ = writeln!(s, "k: {}", form.k);
    let _ = writeln!(s, "epsilon: {}", form.epsilon);
    let _ = writeln!(s, "m: {}", form.m);
    let _ = writeln!(s, "base_oracle_flag: {}", form.base_oracle_flag);
    let _ = writeln!(s, "conserved: {}", form.conserves(f.len()));
    let _ = writeln!(s, "certificate: {}", path.display());
    Ok((s, EXIT_PASS))
}

/// One named check and its outcome.
struct Line {
    name: String,
    outcome: Result<bool>,
}

fn line(name: impl Into<String>, outcome: Result<bool>) -> Line {
    Line { name: name.into(), outcome }
}

fn bound(r: std::result::Result<bool, BoundExceeded>) -> Result<bool> {
    r.map_err(Error::from)
}

fn checks(cert_dir: &Path) -> Vec<Line> {
    let mut out: Vec<Line> =
        validate_presentation().into_iter().map(|c| line(format!("relation {}", c.name), bound(c.outcome))).collect();
    let x = |s: &str| s.parse::<braid::BraidWord>().expect("literal braid word");
    for (name, u, v) in [
        ("braid x1 x2 x1 = x2 x1 x2", "x1 x2 x1", "x2 x1 x2"),
        ("braid x1 x3 = x3 x1", "x1 x3", "x3 x1"),
        ("sphere x1 x2 x3 x4 x5^2 x4 x3 x2 x1 = 1", "x1 x2 x3 x4 x5^2 x4 x3 x2 x1", "1"),
        ("braid (x1 x2 x3 x4 x5)^6 = 1", "(x1 x2 x3 x4 x5)^6", "1"),
    ] {
        out.push(line(format!("{name} (lifted, mod I)"), bound(braid_equal_mod_center(&x(u), &x(v)))));
    }
    for (name, f, len, central) in [
        ("T", named::t(), 10, words::hyperelliptic()),
        ("W0", named::w0(), 20, MCGWord::empty()),
        ("W1", named::w1(), 30, MCGWord::empty()),
        ("W2", named::w2(), 29, MCGWord::empty()),
    ] {
        out.push(line(format!("{name} has {len} factors"), Ok(f.len() == len)));
        out.push(line(format!("{name} product"), bound(mcg_equal(&f.product(), &central))));
    }
    let z = MCGWord::generator;
    for (i, j) in [(1u8, 4u8), (2, 5), (4, 1), (5, 2)] {
        out.push(line(format!("(z{i})_Phi = z{j}"), bound(mcg_equal(&z(i).conjugate(&words::phi()), &z(j)))));
    }
    for i in 1..=5u8 {
        out.push(line(format!("(z{i})_rho = z{}", 6 - i), bound(mcg_equal(&z(i).conjugate(&words::rho()), &z(6 - i)))));
    }
    out.push(line("B0 nodal, tangency and W0", braid::verify_b0_identities().map(|r| r.passed())));
    out.push(line("B2 triple points, delta and W2", braid::verify_b2_identities().map(|r| r.passed())));
    match catalogue::claims() {
        Ok(claims) => {
            for c in claims {
                let outcome = catalogue::load(cert_dir, &c).and_then(|cert| c.check_with(&cert));
                out.push(line(format!("certificate {}", c.name), outcome));
            }
        }
        Err(e) => out.push(line("certificate catalogue", Err(e))),
    }
    out
}

/// The report and exit code of `verify-all`.
pub fn verify_all(cert_dir: &Path) -> (String, i32) {
    let mut s = String::new();
    let (mut failed, mut bounded) = (0, 0);
    for l in checks(cert_dir) {
        match l.outcome {
            Ok(true) => {
                let _ = writeln!(s, "PASS {}", l.name);
            }
            Ok(false) => {
                failed += 1;
                let _ = writeln!(s, "FAIL {}", l.name);
            }
            Err(Error::Bound(b)) => {
                bounded += 1;
                let _ = writeln!(s, "BOUND {}: {b}", l.name);
            }
            Err(e) => {
                failed += 1;
                let _ = writeln!(s, "FAIL {}: {e}", l.name);
            }
        }
    }
    let code = if failed > 0 {
        EXIT_FAIL
    } else if bounded > 0 {
        EXIT_BOUND
    } else {
        EXIT_PASS
    };
    let _ = writeln!(s, "summary: {failed} failed, {bounded} undecided");
    (s, code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("genus2").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn equal_uses_named_words() {
        let (r, code) = execute(&parse(&["equal", "(z1 z2)^6", "sigma"])).unwrap();
        assert_eq!((r.as_str(), code), ("yes\n", EXIT_PASS));
        let (_, code) = execute(&parse(&["equal", "z1", "z2"])).unwrap();
        assert_eq!(code, EXIT_FAIL);
        let (_, code) = execute(&parse(&["equal", "--braid", "x1 x2 x1", "x2 x1 x2"])).unwrap();
        assert_eq!(code, EXIT_PASS);
    }

    #[test]
    fn bad_config_is_an_input_error() {
        let e = execute(&parse(&["--depth", "0", "equal", "z1", "z1"])).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_INPUT);
    }

    #[test]
    fn parse_errors_map_to_two() {
        let e = execute(&parse(&["equal", "z9", "z1"])).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_INPUT);
    }
}
