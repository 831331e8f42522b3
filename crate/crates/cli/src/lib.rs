//! The `cycloweight` command line: catalogs, factorizations, verification
//! runs and undetected-error probabilities.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cycloweight::catalog::{enumerate_codes, CatalogDocument, GroupClass, SCHEMA};
use cycloweight::factorizer::{
    audit_counts, case_parameters, coset_oracle, factor, CountAudit, FactorKind, IrreducibleFactor,
};
use cycloweight::gfield::BaseField;
use cycloweight::numth::prime_power;
use cycloweight::oracle::{brute_force_generator, verify_all, VerificationReport, VerifyConfig, DEFAULT_CAP};
use cycloweight::polyring::{check_to_generator, Poly};
use cycloweight::wdist::{render_distribution, undetected_error_probability, Channel, CodeRecord, Distribution};
use cycloweight::{Error, Result};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelArg {
    Binary,
    Qary,
}

impl From<ChannelArg> for Channel {
    fn from(c: ChannelArg) -> Self {
        match c {
            ChannelArg::Binary => Channel::Binary,
            ChannelArg::Qary => Channel::QAry,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cycloweight", version, about = "Irreducible cyclic codes and their weight enumerators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog every irreducible cyclic code of length n over F_q.
    Enumerate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Include expanded weight distributions.
        #[arg(long)]
        expand: bool,
        /// Show only the code with this check polynomial.
        #[arg(long)]
        check_poly: Option<String>,
    },
    /// Factor x^n - 1 over F_q.
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        /// Cross-check with the cyclotomic coset factorization.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check every closed-form enumerator against brute force.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        check_poly: Option<String>,
    },
    /// Probability of an undetected error.
    Pue {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        check_poly: String,
        #[arg(long)]
        p: f64,
        /// Defaults to binary for q = 2 and q-ary otherwise.
        #[arg(long, value_enum)]
        channel: Option<ChannelArg>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }

    fn error(e: Error) -> Self {
        Output {
            stderr: format!("error: {e}\n"),
            code: EXIT_INVALID,
            ..Output::default()
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stderr: text,
                    code,
                    ..Output::default()
                }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn execute(command: Command) -> Output {
    let result = match command {
        Command::Enumerate {
            q,
            n,
            format,
            expand,
            check_poly,
        } => cmd_enumerate(q, n, format, expand, check_poly.as_deref()).map(Output::ok),
        Command::Factor { q, n, oracle, format } => cmd_factor(q, n, oracle, format).map(|(text, agree)| Output {
            stdout: text,
            code: if agree { EXIT_OK } else { EXIT_VERIFY_FAILED },
            ..Output::default()
        }),
        Command::Verify {
            q,
            n,
            cap,
            format,
            check_poly,
        } => cmd_verify(q, n, cap, format, check_poly.as_deref()).map(|(text, ok)| Output {
            stdout: text,
            code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED },
            ..Output::default()
        }),
        Command::Pue {
            q,
            n,
            check_poly,
            p,
            channel,
            format,
        } => cmd_pue(q, n, &check_poly, p, channel.map(Channel::from), format).map(|(text, channel)| Output {
            stdout: text,
            stderr: format!("channel: {}\n", channel.label()),
            code: EXIT_OK,
        }),
    };
    result.unwrap_or_else(Output::error)
}

fn find_code<'a>(codes: &'a [CodeRecord], text: &str, field: &BaseField, n: u64) -> Result<&'a CodeRecord> {
    let h = Poly::parse(text, field)?;
    if let Some(c) = codes.iter().find(|c| c.check_poly == h) {
        return Ok(c);
    }
    check_to_generator(n as usize, &h, field)?;
    Err(Error::InvalidArgument(format!(
        "{} divides x^{n} - 1 but is not one of its monic irreducible factors",
        h.render()
    )))
}

#[derive(Serialize)]
struct CodeDocument {
    schema: &'static str,
    q: u64,
    n: u64,
    label: String,
    class: GroupClass,
    check_poly: String,
    generator_poly: String,
    enumerator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded: Option<Vec<(usize, String)>>,
}

fn code_document(code: &CodeRecord, expand: bool) -> CodeDocument {
    CodeDocument {
        schema: SCHEMA,
        q: code.q,
        n: code.n,
        label: code.label(),
        class: GroupClass::of(code),
        check_poly: code.check_poly.render(),
        generator_poly: code.generator_poly.render(),
        enumerator: code.enumerator.render(),
        expanded: expand.then(|| {
            code.enumerator
                .expanded()
                .iter()
                .map(|(w, c)| (*w, c.to_string()))
                .collect()
        }),
    }
}

pub fn cmd_enumerate(q: u64, n: u64, format: Format, expand: bool, check_poly: Option<&str>) -> Result<String> {
    let (params, tower, codes) = enumerate_codes(q, n)?;
    if let Some(text) = check_poly {
        let code = find_code(&codes, text, tower.base(), n)?;
        return Ok(match format {
            Format::Csv => code.enumerator.render_csv(),
            Format::Json => serde_json::to_string_pretty(&code_document(code, expand)).expect("serializes") + "\n",
            Format::Text => {
                let mut out = format!("{}  {}\n", code.label(), GroupClass::of(code).label());
                writeln!(out, "  h(x) = {}", code.check_poly.render()).unwrap();
                writeln!(out, "  g(x) = {}", code.generator_poly.render()).unwrap();
                writeln!(out, "  A(z) = {}", code.enumerator.render()).unwrap();
                if expand {
                    writeln!(out, "  expanded {}", render_distribution(code.enumerator.expanded())).unwrap();
                }
                out
            }
        });
    }
    let doc = CatalogDocument::build(&params, &codes, expand);
    Ok(match format {
        Format::Text => doc.render_text(),
        Format::Json => doc.to_json() + "\n",
        Format::Csv => doc.render_csv(),
    })
}

#[derive(Serialize)]
struct FactorEntry {
    poly: String,
    degree: usize,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu2u: Option<u32>,
}

#[derive(Serialize)]
struct OracleVerdict {
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

#[derive(Serialize)]
struct FactorDocument {
    schema: &'static str,
    q: u64,
    n: u64,
    source: &'static str,
    factors: Vec<FactorEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleVerdict>,
}

fn factor_entry(f: &IrreducibleFactor) -> FactorEntry {
    let kind = match f.kind() {
        FactorKind::Binomial { .. } => "binomial",
        FactorKind::Trinomial { .. } => "trinomial",
    };
    FactorEntry {
        poly: f.poly().render(),
        degree: f.degree(),
        kind,
        nu2u: f.nu2u().filter(|_| f.is_trinomial()),
    }
}

fn degree_summary(degrees: impl Iterator<Item = usize>) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for d in degrees {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    counts
        .iter()
        .map(|(d, c)| format!("{d}x{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Returns the rendering and whether the oracle (if run) agreed.
pub fn cmd_factor(q: u64, n: u64, oracle: bool, format: Format) -> Result<(String, bool)> {
    let (pp, e) = match case_parameters(n, q) {
        Err(Error::OutOfRegime { .. }) if oracle => prime_power(q).ok_or(Error::NotPrimePower(q))?,
        Err(err) => return Err(err),
        Ok(params) => {
            let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let tower = cycloweight::gfield::FieldTower::new(p, e)?;
            let factors = factor(&params, &tower)?;
            let entries: Vec<FactorEntry> = factors.iter().map(factor_entry).collect();
            let verdict = oracle.then(|| match coset_oracle(n, tower.base()) {
                Ok(fs) => {
                    let rendered: Vec<String> = fs.iter().map(Poly::render).collect();
                    let agrees = rendered.iter().eq(entries.iter().map(|e| &e.poly));
                    OracleVerdict {
                        factors: Some(rendered),
                        agrees: Some(agrees),
                        skipped: None,
                    }
                }
                Err(err) => OracleVerdict {
                    factors: None,
                    agrees: None,
                    skipped: Some(err.to_string()),
                },
            });
            let agree = verdict.as_ref().and_then(|v| v.agrees).unwrap_or(true);
            let doc = FactorDocument {
                schema: SCHEMA,
                q,
                n,
                source: "closed form",
                factors: entries,
                oracle: verdict,
            };
            return Ok((render_factors(&doc, format), agree));
        }
    };
    let field = BaseField::new(pp, e)?;
    let fs = coset_oracle(n, &field)?;
    let doc = FactorDocument {
        schema: SCHEMA,
        q,
        n,
        source: "coset oracle",
        factors: fs
            .iter()
            .map(|f| FactorEntry {
                poly: f.render(),
                degree: f.degree().unwrap_or(0),
                kind: if f.hamming_weight() == 2 { "binomial" } else { "irreducible" },
                nu2u: None,
            })
            .collect(),
        oracle: None,
    };
    Ok((render_factors(&doc, format), true))
}

fn render_factors(doc: &FactorDocument, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializes") + "\n",
        Format::Csv => {
            let mut out = String::from("degree,kind,nu2u,poly\n");
            for f in &doc.factors {
                let nu = f.nu2u.map(|v| v.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{nu},{}", f.degree, f.kind, f.poly).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "x^{} - 1 over F_{}: {} irreducible factors ({})\n",
                doc.n,
                doc.q,
                doc.factors.len(),
                doc.source
            );
            writeln!(out, "degrees {}", degree_summary(doc.factors.iter().map(|f| f.degree))).unwrap();
            for f in &doc.factors {
                match f.nu2u {
                    Some(v) => writeln!(out, "  {}  {} nu2(u)={v}", f.poly, f.kind).unwrap(),
                    None => writeln!(out, "  {}  {}", f.poly, f.kind).unwrap(),
                }
            }
            if let Some(v) = &doc.oracle {
                match (v.agrees, &v.skipped) {
                    (Some(true), _) => writeln!(out, "oracle: agree").unwrap(),
                    (Some(false), _) => {
                        let fs = v.factors.as_deref().unwrap_or_default().join(", ");
                        writeln!(out, "oracle: DISAGREE, coset factors {fs}").unwrap()
                    }
                    (None, Some(reason)) => writeln!(out, "oracle: skipped ({reason})").unwrap(),
                    (None, None) => {}
                }
            }
            out
        }
    }
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    schema: &'static str,
    q: u64,
    n: u64,
    cap: u64,
    passed: bool,
    reports: &'a [VerificationReport],
    count_audit: &'a [CountAudit],
}

/// Whether the audit entry is a real failure rather than a flagged
/// formula discrepancy.
fn audit_fails(a: &CountAudit) -> bool {
    !a.agrees && a.source.is_strict()
}

/// Returns the rendering and whether every check passed.
pub fn cmd_verify(q: u64, n: u64, cap: u64, format: Format, check_poly: Option<&str>) -> Result<(String, bool)> {
    let (params, tower, codes) = enumerate_codes(q, n)?;
    let selected: Vec<CodeRecord> = match check_poly {
        Some(text) => vec![find_code(&codes, text, tower.base(), n)?.clone()],
        None => codes.clone(),
    };
    let config = VerifyConfig {
        cap,
        ..VerifyConfig::default()
    };
    let reports = verify_all(&selected, &tower, &config)?;
    let factors: Vec<IrreducibleFactor> = codes.iter().map(|c| c.factor.clone()).collect();
    let audit = audit_counts(&params, &factors)?;
    let passed = reports.iter().all(VerificationReport::passed) && !audit.iter().any(audit_fails);

    let text = match format {
        Format::Json => {
            let doc = VerifyDocument {
                schema: SCHEMA,
                q,
                n,
                cap,
                passed,
                reports: &reports,
                count_audit: &audit,
            };
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("check_poly,check,predicted,measured,status\n");
            for r in &reports {
                for c in &r.checks {
                    let status = if c.pass { "pass" } else { "fail" };
                    writeln!(out, "{},{},{},{},{status}", r.code_id.check_poly, c.name, c.predicted, c.measured).unwrap();
                }
                for s in &r.skipped {
                    writeln!(out, "{},{},,,skipped: {}", r.code_id.check_poly, s.name, s.reason).unwrap();
                }
            }
            out
        }
        Format::Text => {
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut out = format!(
                "verify q = {q}, n = {n}, cap = {cap}: {} codes, {} passed, {failed} failed\n",
                reports.len(),
                reports.len() - failed
            );
            for (r, c) in reports.iter().zip(&selected) {
                if r.passed() {
                    writeln!(
                        out,
                        "ok    {} {}  ({} checks, {} skipped)",
                        c.label(),
                        r.code_id.check_poly,
                        r.checks.len(),
                        r.skipped.len()
                    )
                    .unwrap();
                    for s in &r.skipped {
                        writeln!(out, "        skip {}: {}", s.name, s.reason).unwrap();
                    }
                } else {
                    out += &r.render();
                }
            }
            writeln!(out, "count audit").unwrap();
            for a in &audit {
                let status = if a.agrees {
                    "agree"
                } else if audit_fails(a) {
                    "MISMATCH"
                } else {
                    "FLAGGED"
                };
                writeln!(
                    out,
                    "  {status:<8} {} [{}]: predicted {} measured {}",
                    a.key,
                    a.source.label(),
                    a.predicted,
                    a.measured
                )
                .unwrap();
            }
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    };
    Ok((text, passed))
}

/// Twelve significant digits; positional unless the value is tiny or huge.
pub fn format_probability(v: f64) -> String {
    if v == 0.0 {
        return format!("{:.12}", 0.0);
    }
    let exp = v.abs().log10().floor() as i32;
    if (-6..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        // rounding can carry into a new leading digit
        let digits = s.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').count();
        if digits > 12 && decimals > 0 {
            return format!("{v:.prec$}", prec = decimals - 1);
        }
        s
    } else {
        format!("{v:.11e}")
    }
}

fn code_distribution(q: u64, n: u64, text: &str) -> Result<Distribution> {
    match enumerate_codes(q, n) {
        Ok((_, tower, codes)) => {
            let h = Poly::parse(text, tower.base())?;
            if let Some(c) = codes.iter().find(|c| c.check_poly == h) {
                return Ok(c.enumerator.expanded().clone());
            }
            let g = check_to_generator(n as usize, &h, tower.base())?;
            Ok(brute_force_generator(tower.base(), &g, n as usize, DEFAULT_CAP)?.distribution)
        }
        Err(Error::OutOfRegime { .. }) => {
            let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
            let field = BaseField::new(p, e)?;
            let h = Poly::parse(text, &field)?;
            let g = check_to_generator(n as usize, &h, &field)?;
            Ok(brute_force_generator(&field, &g, n as usize, DEFAULT_CAP)?.distribution)
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_pue(
    q: u64,
    n: u64,
    check_poly: &str,
    p: f64,
    channel: Option<Channel>,
    format: Format,
) -> Result<(String, Channel)> {
    let channel = channel.unwrap_or(if q == 2 { Channel::Binary } else { Channel::QAry });
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityRange(p));
    }
    if channel == Channel::Binary && q != 2 {
        return Err(Error::ChannelMismatch(q));
    }
    let dist = code_distribution(q, n, check_poly)?;
    let value = undetected_error_probability(&dist, q, n, p, channel)?;
    let shown = format_probability(value);
    let text = match format {
        Format::Text => format!("{shown}\n"),
        Format::Csv => format!("channel,p,probability\n{},{p},{shown}\n", channel_tag(channel)),
        Format::Json => {
            let doc = serde_json::json!({
                "schema": SCHEMA,
                "q": q,
                "n": n,
                "check_poly": check_poly,
                "p": p,
                "channel": channel.label(),
                "probability": shown,
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
    };
    Ok((text, channel))
}

fn channel_tag(c: Channel) -> &'static str {
    match c {
        Channel::Binary => "binary",
        Channel::QAry => "qary",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probability_formatting() {
        assert_eq!(format_probability(0.0), "0.000000000000");
        assert_eq!(format_probability(4.8722765625e-4), "0.000487227656250");
        assert_eq!(format_probability(0.5), "0.500000000000");
        assert_eq!(format_probability(1.0), "1.00000000000");
        assert_eq!(format_probability(1.25e-9), "1.25000000000e-9");
        assert_eq!(format_probability(0.99999999999999), "1.00000000000");
    }

    #[test]
    fn argument_errors_exit_two() {
        let out = run(["cycloweight", "enumerate", "--q", "3"]);
        assert_eq!(out.code, EXIT_INVALID);
        let out = run(["cycloweight", "pue", "--q", "3", "--n", "8", "--check-poly", "x^2+1", "--p", "0.3", "--channel", "binary"]);
        assert_eq!(out.code, EXIT_INVALID);
        assert!(out.stderr.contains("binary channel requires q = 2"));
    }
}
