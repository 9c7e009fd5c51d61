//! Command execution and output formatting.

use std::io::Write;

use obstrukt::codeword::facets;
use obstrukt::collapse::contractibility;
use obstrukt::complex::{delta, dual_complex, f_sigma, link};
use obstrukt::homology::euler_characteristic;
use obstrukt::mandatory::{analyze, check_no_local_obstruction_necessary};
use obstrukt::random::random_code;
use obstrukt::suite::{exhaustive_codes, run_suite, sampled_codes, SuiteOptions, SuiteSummary};
use obstrukt::verify::{Theorem, Verdict, VerificationReport, Verifier};
use obstrukt::{
    alexander_dual, compute_cmin, compute_mh, format_codeword, parse_codeword, reduced_homology, sr_ideal, CodeMap, Codeword,
    FieldId, HomologyProfile, NeuralCode, NotationForm, Permutation, SimplicialComplex,
};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::{Cli, CodeArgs, Command, Output, VerifyArgs};

/// How a successful run ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
}

/// Largest `n` accepted by `verify --exhaustive`.
const MAX_EXHAUSTIVE_N: usize = 3;

struct Printer<'a, W: Write> {
    out: &'a mut W,
    output: Output,
    form: NotationForm,
}

impl<W: Write> Printer<'_, W> {
    fn line(&mut self, text: &str) -> Result<(), CliError> {
        writeln!(self.out, "{text}").map_err(|e| CliError::Io { path: "<stdout>".into(), message: e.to_string() })
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let text = serde_json::to_string(value).expect("serializable output");
        self.line(&text)
    }

    fn word(&self, cw: &Codeword) -> String {
        format_codeword(cw, self.form)
            .or_else(|_| format_codeword(cw, NotationForm::Set))
            .expect("set form is always representable")
    }

    fn words<'a, I: IntoIterator<Item = &'a Codeword>>(&self, words: I) -> String {
        let items: Vec<String> = words.into_iter().map(|w| self.word(w)).collect();
        format!("{{{}}}", items.join(", "))
    }
}

fn homology_text(h: &HomologyProfile) -> String {
    let nonzero: Vec<String> = h.dims().iter().filter(|(_, &d)| d > 0).map(|(i, d)| format!("H̃_{i} = {d}")).collect();
    if nonzero.is_empty() {
        "0".to_string()
    } else {
        nonzero.join(", ")
    }
}

fn nonvoid_delta(code: &NeuralCode) -> Result<SimplicialComplex, CliError> {
    let k = delta(code);
    if k.is_void() {
        return Err(CliError::usage("the code has no codewords, so Δ(C) is the void complex"));
    }
    Ok(k)
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<Status, CliError> {
    let mut p = Printer { out, output: cli.output, form: cli.form };
    let field = cli.field;
    match &cli.command {
        Command::Analyze(args) => run_analyze(&mut p, args, field),
        Command::Mh(args) => {
            let k = nonvoid_delta(&args.load(p.form)?)?;
            let mh = compute_mh(&k, field)?;
            match p.output {
                Output::Json => p.json(&mh)?,
                Output::Text => {
                    let text = format!("M_H over {field}: {}", p.words(&mh.faces));
                    p.line(&text)?
                }
            }
            Ok(Status::Ok)
        }
        Command::Cmin(args) => {
            let k = nonvoid_delta(&args.load(p.form)?)?;
            let cmin = compute_cmin(&k, field)?;
            match p.output {
                Output::Json => p.json(&cmin)?,
                Output::Text => {
                    let lines = [
                        format!("C_min over {field}, certified in: {}", p.words(&cmin.certified_in)),
                        format!("certified out: {}", p.words(&cmin.certified_out)),
                        format!("unknown: {}", p.words(&cmin.unknown)),
                    ];
                    for l in lines {
                        p.line(&l)?;
                    }
                }
            }
            Ok(Status::Ok)
        }
        Command::Homology(args) => {
            let k = nonvoid_delta(&args.load(p.form)?)?;
            let h = reduced_homology(&k, field)?;
            let verdict = contractibility(&k, field)?;
            match p.output {
                Output::Json => {
                    let dims = serde_json::to_value(&h).expect("serializable")["dims"].clone();
                    p.json(&json!({
                        "field": field,
                        "dims": dims,
                        "euler": euler_characteristic(&k)?,
                        "contractibility": verdict.kind(),
                    }))?
                }
                Output::Text => {
                    let text = format!("reduced homology over {field}: {}; contractibility: {:?}", homology_text(&h), verdict.kind());
                    p.line(&text)?
                }
            }
            Ok(Status::Ok)
        }
        Command::Link { code, sigma } => run_link(&mut p, code, sigma, field),
        Command::Dual(args) => run_dual(&mut p, args),
        Command::Map { code, steps } => {
            let code = code.load(p.form)?;
            let map = CodeMap::new(code.clone(), steps.clone())?;
            let image = map.image_code()?;
            match p.output {
                Output::Json => p.json(&json!({ "map": map.to_string(), "domain": code, "image": image }))?,
                Output::Text => {
                    let text = format!("{map}: {} -> {}", p.words(code.words()), p.words(image.words()));
                    p.line(&text)?
                }
            }
            Ok(Status::Ok)
        }
        Command::Verify(args) => run_verify(&mut p, args, field),
        Command::Random { n, seed, count, density } => {
            for i in 0..*count {
                let s = seed.wrapping_add(i as u64);
                let code = random_code(*n, s, *density)?;
                match p.output {
                    Output::Json => p.json(&json!({ "index": i, "seed": s, "code": code }))?,
                    Output::Text => {
                        let text = format!("{i}: {}", p.words(code.words()));
                        p.line(&text)?
                    }
                }
            }
            Ok(Status::Ok)
        }
    }
}

fn run_analyze<W: Write>(p: &mut Printer<'_, W>, args: &CodeArgs, field: FieldId) -> Result<Status, CliError> {
    let code = args.load(p.form)?;
    let k = nonvoid_delta(&code)?;
    let h = reduced_homology(&k, field)?;
    let report = analyze(&k, field)?;
    let local = check_no_local_obstruction_necessary(&code, field)?;
    match p.output {
        Output::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            let extra = json!({
                "n": code.n(),
                "code": code.sorted_binary(),
                "facets": NeuralCode::new(code.n(), facets(&code))?.sorted_binary(),
                "homology": serde_json::to_value(&h).expect("serializable")["dims"],
                "local_obstruction_check": local,
            });
            value.as_object_mut().expect("object").extend(extra.as_object().expect("object").clone());
            p.json(&value)?
        }
        Output::Text => {
            let lines = [
                format!("code on {} neurons: {}", code.n(), p.words(code.words())),
                format!("facets of Δ(C): {}", p.words(&facets(&code))),
                format!("reduced homology of Δ(C) over {field}: {}", homology_text(&h)),
                format!("M_H: {}", p.words(&report.mh.faces)),
                format!("C_min certified in: {}", p.words(&report.cmin.certified_in)),
                format!("C_min certified out: {}", p.words(&report.cmin.certified_out)),
                format!("C_min unknown: {}", p.words(&report.cmin.unknown)),
                format!("Δ(C) contractibility: {:?}", report.cmin.delta_verdict),
                if local.passes {
                    "contains M_H: yes".to_string()
                } else {
                    let missing: Vec<Codeword> = report.mh.faces.iter().filter(|f| !code.contains(f)).copied().collect();
                    format!("contains M_H: no, local obstruction at {}", p.words(&missing))
                },
            ];
            for l in lines {
                p.line(&l)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn run_link<W: Write>(p: &mut Printer<'_, W>, args: &CodeArgs, sigma: &str, field: FieldId) -> Result<Status, CliError> {
    let code = args.load(p.form)?;
    let k = nonvoid_delta(&code)?;
    let sigma = parse_codeword(sigma, p.form, code.n()).map_err(|e| {
        let (column, message) = match e {
            obstrukt::Error::MalformedText { column, reason } => (column, reason),
            other => (1, other.to_string()),
        };
        CliError::Parse { source_name: "--sigma".into(), line: 1, column, message }
    })?;
    let lk = link(&k, &sigma)?;
    let f = f_sigma(&k, &sigma)?;
    let h = reduced_homology(&lk, field)?;
    let verdict = contractibility(&lk, field)?;
    match p.output {
        Output::Json => p.json(&json!({
            "sigma": sigma,
            "link": lk,
            "f_sigma": f,
            "cone": f != sigma,
            "field": field,
            "homology": serde_json::to_value(&h).expect("serializable")["dims"],
            "contractibility": verdict.kind(),
        }))?,
        Output::Text => {
            let lines = [
                format!("link of {} in Δ(C): facets {}", p.word(&sigma), p.words(&lk.facets())),
                format!("f_sigma: {}{}", p.word(&f), if f != sigma { " (link is a cone)" } else { "" }),
                format!("reduced homology over {field}: {}; contractibility: {:?}", homology_text(&h), verdict.kind()),
            ];
            for l in lines {
                p.line(&l)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn run_dual<W: Write>(p: &mut Printer<'_, W>, args: &CodeArgs) -> Result<Status, CliError> {
    let k = nonvoid_delta(&args.load(p.form)?)?;
    let ideal = sr_ideal(&k)?;
    let dual = match alexander_dual(&ideal) {
        Ok(d) => Some(d),
        Err(obstrukt::Error::DegenerateDual) => None,
        Err(e) => return Err(e.into()),
    };
    let dual_k = dual_complex(&k);
    let dual_k = (!dual_k.is_void()).then_some(dual_k);
    match p.output {
        Output::Json => p.json(&json!({ "sr_ideal": ideal, "alexander_dual": dual, "dual_complex": dual_k }))?,
        Output::Text => {
            let gens = |i: &obstrukt::MonomialIdeal| {
                let items: Vec<String> = i
                    .min_gens()
                    .iter()
                    .map(|g| if g.is_empty() { "1".to_string() } else { g.neurons().map(|v| format!("x{v}")).collect() })
                    .collect();
                format!("<{}>", items.join(", "))
            };
            let lines = [
                format!("I_Δ: {}", gens(&ideal)),
                format!("Alexander dual: {}", dual.as_ref().map_or("undefined (I_Δ = 0)".to_string(), gens)),
                format!("dual complex facets: {}", dual_k.as_ref().map_or("void".to_string(), |d| p.words(&d.facets()))),
            ];
            for l in lines {
                p.line(&l)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn selected_theorems(args: &VerifyArgs) -> Result<Vec<Theorem>, CliError> {
    if args.all {
        return Ok(Theorem::ALL.to_vec());
    }
    if args.theorems.is_empty() {
        return Err(CliError::usage("choose theorems with --theorem or --all"));
    }
    let mut t = args.theorems.clone();
    t.sort();
    t.dedup();
    Ok(t)
}

fn suite_n(args: &VerifyArgs) -> Result<usize, CliError> {
    args.code.n.ok_or_else(|| CliError::usage("suite runs need --n"))
}

fn single_code_reports(args: &VerifyArgs, theorems: &[Theorem], form: NotationForm, field: FieldId) -> Result<Vec<VerificationReport>, CliError> {
    let code = args.code.load(form)?;
    let n = code.n();
    let v = Verifier::new(&code, field)?;
    let mut reports = Vec::new();
    for theorem in theorems {
        match theorem {
            Theorem::Permutation => {
                let perms = match &args.perm {
                    Some(g) => vec![g.clone()],
                    None => Permutation::all(n),
                };
                for g in &perms {
                    reports.push(v.permutation(g)?);
                }
            }
            Theorem::AddTrivialOn => reports.push(v.add_trivial_on()?),
            Theorem::AddTrivialOff => reports.push(v.add_trivial_off()?),
            Theorem::Duplicate => {
                let sources: Vec<usize> = args.source.map_or_else(|| (1..=n).collect(), |s| vec![s]);
                for s in sources {
                    reports.push(v.duplicate(s)?);
                }
            }
            Theorem::Projection => {
                let deletions: Vec<usize> = match args.delete {
                    Some(d) => vec![d],
                    None if n >= 2 => (1..=n).collect(),
                    None => Vec::new(),
                };
                for d in deletions {
                    reports.push(v.projection(d)?);
                }
            }
            Theorem::Composition => {
                if args.steps.is_empty() {
                    if args.all {
                        continue;
                    }
                    return Err(CliError::usage("the composition theorem needs --step"));
                }
                reports.push(v.composition(&CodeMap::new(code.clone(), args.steps.clone())?)?);
            }
        }
    }
    Ok(reports)
}

fn run_verify<W: Write>(p: &mut Printer<'_, W>, args: &VerifyArgs, field: FieldId) -> Result<Status, CliError> {
    let theorems = selected_theorems(args)?;
    let suite = args.exhaustive || args.samples.is_some();
    if suite && (args.perm.is_some() || args.source.is_some() || args.delete.is_some() || !args.steps.is_empty()) {
        return Err(CliError::usage("--perm, --source, --delete and --step apply to a single code, not to suite runs"));
    }
    if args.seed.is_some() && args.samples.is_none() {
        return Err(CliError::usage("--seed is only used with --samples"));
    }
    let (codes, reports) = if args.exhaustive {
        let n = suite_n(args)?;
        if n > MAX_EXHAUSTIVE_N {
            return Err(CliError::usage(format!("--exhaustive is limited to n ≤ {MAX_EXHAUSTIVE_N}; use --samples for larger n")));
        }
        let codes = exhaustive_codes(n)?;
        let options = SuiteOptions { theorems: theorems.into_iter().collect(), ..SuiteOptions::exhaustive(field) };
        let reports = run_suite(&codes, &options)?;
        (codes.len(), reports)
    } else if let Some(count) = args.samples {
        let n = suite_n(args)?;
        let seed = args.seed.expect("clap requires --seed with --samples");
        let codes = sampled_codes(n, count, seed, args.density)?;
        let options = SuiteOptions { theorems: theorems.into_iter().collect(), ..SuiteOptions::sampled(field, seed) };
        let reports = run_suite(&codes, &options)?;
        (codes.len(), reports)
    } else {
        (1, single_code_reports(args, &theorems, p.form, field)?)
    };

    for r in &reports {
        match p.output {
            Output::Json => p.json(r)?,
            Output::Text => {
                let text = format!("{} {} on {}: {:?}", r.theorem, r.map, p.words(r.code.words()), r.verdict);
                p.line(&text)?;
                for c in &r.checks {
                    let mark = if c.holds { "ok" } else if c.required { "FAILED" } else { "fails (informational)" };
                    let text = format!("  {} {}: {}", c.name, c.relation, mark);
                    p.line(&text)?;
                }
            }
        }
    }
    let summary = SuiteSummary::from_reports(codes, &reports);
    match p.output {
        Output::Json => p.json(&json!({ "summary": summary }))?,
        Output::Text => {
            let text = format!(
                "{} codes, {} reports: {} hold, {} partial, {} violated",
                summary.codes, summary.reports, summary.holds, summary.partial, summary.violated
            );
            p.line(&text)?
        }
    }
    Ok(if reports.iter().any(|r| r.verdict == Verdict::Violated) { Status::Violation } else { Status::Ok })
}
