//! Implementation of the `ainfty` command-line tool.
//!
//! Every subcommand reads JSON files (or standard input), runs library
//! checkers or constructions, and prints a deterministic JSON report:
//! exit 0 on an empty report or successful construction, exit 1 on a
//! nonempty report, exit 2 on malformed input. Reports always state the
//! truncation used, so "valid" reads as "valid up to arity N".

use std::fs;
use std::io::Read;

use serde::{Deserialize, Serialize};

use ainfty::comodule::{
    check_curved_comodule, check_dg_comodule, comodule_morphism_check, matrix_factorization,
    CofreeComodule, ComoduleCoderivation,
};
use ainfty::deform::{
    first_order_check, gauge_action, solve_coboundary, su_first_order_check, CoboundaryVerdict,
    FirstOrderDeformation,
};
use ainfty::json::{
    from_str, to_canonical_string, AlgebraJson, BarDEntryJson, BarJson, BarTermJson,
    BarXiEntryJson, CochainJson, MatrixFactorizationJson, ModuleJson, RepJson, ShamashJson,
};
use ainfty::rep::{
    check_rep_morphism, check_representation, check_su_representation, AdjointFamily,
    RepMorphismFamily,
};
use ainfty::report::Report;
use ainfty::tensor::all_words;
use ainfty::unital::{
    bracket_structure_check, check_curved_coalgebra, check_curved_morphism, curved_bar,
    koszul_build, su_morphism_check, su_morphism_to_curved,
};
use ainfty::{BarConstruction, Cochain, RingSpec, Scalar};

/// Audit table: every library checker is reachable from exactly one CLI
/// command. `cli_audit` tests that this stays a partition of
/// [`ALL_CHECKERS`].
pub const COMMAND_CHECKERS: &[(&str, &[&str])] = &[
    ("check-ainf", &["check_stasheff", "mc_check_su", "bracket_structure_check"]),
    (
        "check-morphism",
        &[
            "check_morphism",
            "su_morphism_check",
            "check_curved_morphism",
            "check_rep_morphism",
            "comodule_morphism_check",
        ],
    ),
    ("bar", &[]),
    ("curved-bar", &["check_curved_coalgebra"]),
    (
        "check-rep",
        &["check_representation", "check_su_representation", "check_dg_comodule", "check_curved_comodule"],
    ),
    ("koszul", &[]),
    ("mf", &["shamash_relations", "matrix_factorization_invariants"]),
    ("deform-check", &["first_order_check", "su_first_order_check", "solve_coboundary"]),
    ("gauge", &[]),
];

/// The full list of library checkers the audit covers.
pub const ALL_CHECKERS: &[&str] = &[
    "check_stasheff",
    "mc_check_su",
    "bracket_structure_check",
    "check_morphism",
    "su_morphism_check",
    "check_curved_morphism",
    "check_rep_morphism",
    "comodule_morphism_check",
    "check_curved_coalgebra",
    "check_representation",
    "check_su_representation",
    "check_dg_comodule",
    "check_curved_comodule",
    "shamash_relations",
    "matrix_factorization_invariants",
    "first_order_check",
    "su_first_order_check",
    "solve_coboundary",
];

pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
}

fn ok(stdout: String) -> CommandOutput {
    CommandOutput { exit_code: 0, stdout }
}

/// Exit 2 with a parse diagnostic naming file, path, and reason.
fn input_error(file: &str, reason: impl std::fmt::Display) -> CommandOutput {
    let payload = serde_json::json!({
        "error": "malformed input",
        "file": file,
        "reason": reason.to_string(),
    });
    CommandOutput { exit_code: 2, stdout: serde_json::to_string_pretty(&payload).unwrap() }
}

/// A CLI workspace: every object loaded into one invocation must share the
/// ring and the truncation.
pub struct Workspace {
    pub ring: RingSpec,
    pub max_arity: usize,
}

impl Workspace {
    pub fn check(&self, file: &str, ring: &RingSpec, max_arity: usize) -> Result<(), CommandOutput> {
        if *ring != self.ring {
            return Err(input_error(
                file,
                format!("ring {ring} does not match workspace ring {}", self.ring),
            ));
        }
        if max_arity != self.max_arity {
            return Err(input_error(
                file,
                format!(
                    "max_arity {max_arity} does not match workspace truncation {}",
                    self.max_arity
                ),
            ));
        }
        Ok(())
    }
}

fn read_input(path: Option<&str>) -> Result<(String, String), CommandOutput> {
    match path {
        Some(p) => match fs::read_to_string(p) {
            Ok(s) => Ok((p.to_string(), s)),
            Err(e) => Err(input_error(p, e)),
        },
        None => {
            let mut s = String::new();
            match std::io::stdin().read_to_string(&mut s) {
                Ok(_) => Ok(("<stdin>".to_string(), s)),
                Err(e) => Err(input_error("<stdin>", e)),
            }
        }
    }
}

fn parse_file<T: for<'a> Deserialize<'a>>(path: Option<&str>) -> Result<(String, T), CommandOutput> {
    let (name, body) = read_input(path)?;
    match from_str::<T>(&body) {
        Ok(v) => Ok((name, v)),
        Err(e) => Err(input_error(&name, e)),
    }
}

/// `{"ring": ..., "max_arity": ..., "cochain": {...}}`: a cochain with its
/// context; the modules come from the accompanying algebra file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CochainFileJson {
    pub ring: String,
    pub max_arity: usize,
    pub cochain: CochainJson,
}

/// Morphism file: the reduced part `g` plus, in strictly unital mode, the
/// unit-line part `a`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFileJson {
    pub ring: String,
    pub max_arity: usize,
    pub g: CochainJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<CochainJson>,
}

/// Representation-morphism file: adjoint family from the source fiber to
/// the target fiber.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepMorphismFileJson {
    pub ring: String,
    pub max_arity: usize,
    pub source: RepJson,
    pub target: RepJson,
    pub maps: Vec<ainfty::json::RepMapJson>,
}

#[derive(Serialize)]
struct ReportJson {
    valid: bool,
    truncation: usize,
    total_violations: usize,
    violations: Vec<ainfty::report::Violation>,
}

fn render_report(report: &Report, verbose: bool) -> CommandOutput {
    let violations = if verbose {
        report.violations().to_vec()
    } else {
        report.first_per_arity().into_iter().cloned().collect()
    };
    let body = ReportJson {
        valid: report.is_empty(),
        truncation: report.checked_up_to,
        total_violations: report.total(),
        violations,
    };
    CommandOutput {
        exit_code: if report.is_empty() { 0 } else { 1 },
        stdout: serde_json::to_string_pretty(&body).unwrap(),
    }
}

fn lib_error(file: &str, e: ainfty::Error) -> CommandOutput {
    input_error(file, e)
}

pub fn cmd_koszul(f: &str, ring: &str, max_arity: usize) -> CommandOutput {
    let ring = match RingSpec::parse_spec(ring) {
        Ok(r) => r,
        Err(e) => return input_error("--ring", e),
    };
    let f: Scalar = match ring.parse(f) {
        Ok(v) => v,
        Err(e) => return input_error("--f", e),
    };
    let alg = match koszul_build(&f, max_arity) {
        Ok(a) => a,
        Err(e) => return input_error("--f", e),
    };
    let json = AlgebraJson::from_algebra(&alg).expect("fresh algebra serializes");
    ok(to_canonical_string(&json).expect("canonical form"))
}

pub fn cmd_check_ainf(
    algebra: Option<&str>,
    strict_unital: bool,
    verbose: bool,
) -> CommandOutput {
    let (file, json) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (_, nu) = match json.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&file, e),
    };
    let mut report = match ainfty::ainf::check_stasheff(&nu, nu.max_arity) {
        Ok(r) => r,
        Err(e) => return lib_error(&file, e),
    };
    if strict_unital {
        let alg = match json.to_algebra() {
            Ok(a) => a,
            Err(e) => return lib_error(&file, e),
        };
        match ainfty::unital::mc_check_su(&alg.carrier, &alg.mu_bar, &alg.h) {
            Ok(r) => report = report.merged(r),
            Err(e) => return lib_error(&file, e),
        }
        match bracket_structure_check(&alg.carrier, &alg.mu_bar, &alg.mu_bar, &alg.h, &alg.h) {
            Ok(r) => report = report.merged(r),
            Err(e) => return lib_error(&file, e),
        }
    }
    render_report(&report, verbose)
}

pub fn cmd_bar(algebra: Option<&str>, counital: bool, verbose: bool) -> CommandOutput {
    let (file, json) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (ring, nu) = match json.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&file, e),
    };
    let structure = ainfty::AInfinityStructure::new_unchecked(nu.source.clone(), nu.clone());
    let bar = BarConstruction::new(structure, counital);
    let mut d = Vec::new();
    for n in 1..=nu.max_arity {
        for w in all_words(&nu.source, n) {
            let value = match ainfty::ainf::bar_d_apply(&bar, &w) {
                Ok(v) => v,
                Err(e) => return lib_error(&file, e),
            };
            if !value.is_zero() {
                d.push(BarDEntryJson {
                    word: w,
                    value: value
                        .terms()
                        .map(|(word, c)| BarTermJson { word: word.clone(), coeff: c.to_string() })
                        .collect(),
                });
            }
        }
    }
    let out = BarJson {
        ring: ring.to_string(),
        max_arity: nu.max_arity,
        module: ModuleJson::from_module(&nu.source),
        d,
        xi: Vec::new(),
    };
    let _ = verbose;
    ok(to_canonical_string(&out).expect("canonical form"))
}

pub fn cmd_curved_bar(
    algebra: Option<&str>,
    max_arity: Option<usize>,
    verbose: bool,
) -> CommandOutput {
    let (file, json) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let mut alg = match json.to_algebra() {
        Ok(a) => a,
        Err(e) => return lib_error(&file, e),
    };
    if let Some(n) = max_arity {
        if n > alg.max_arity {
            return input_error(
                &file,
                format!("requested truncation {n} exceeds the file's {}", alg.max_arity),
            );
        }
        alg = match ainfty::unital::SplitUnitAlgebra::new_unchecked(
            alg.carrier.clone(),
            alg.mu_bar.truncated(n),
            alg.h.truncated(n),
            n,
        ) {
            Ok(a) => a,
            Err(e) => return lib_error(&file, e),
        };
    }
    let bar = match curved_bar(&alg) {
        Ok(b) => b,
        Err(e) => return lib_error(&file, e),
    };
    let report = match check_curved_coalgebra(&bar) {
        Ok(r) => r,
        Err(e) => return lib_error(&file, e),
    };
    if !report.is_empty() {
        return render_report(&report, verbose);
    }
    let mut d = Vec::new();
    let mut xi = Vec::new();
    for n in 1..=bar.max_arity {
        for w in all_words(&bar.reduced, n) {
            let value = match bar.d_apply(&w) {
                Ok(v) => v,
                Err(e) => return lib_error(&file, e),
            };
            if !value.is_zero() {
                d.push(BarDEntryJson {
                    word: w.clone(),
                    value: value
                        .terms()
                        .map(|(word, c)| BarTermJson { word: word.clone(), coeff: c.to_string() })
                        .collect(),
                });
            }
            let v = match bar.xi.eval_word(&w) {
                Ok(v) => v,
                Err(e) => return lib_error(&file, e),
            };
            if !v.is_zero() {
                xi.push(BarXiEntryJson { word: w, value: v.to_string() });
            }
        }
    }
    let out = BarJson {
        ring: alg.ring().to_string(),
        max_arity: bar.max_arity,
        module: ModuleJson::from_module(&bar.reduced),
        d,
        xi,
    };
    ok(to_canonical_string(&out).expect("canonical form"))
}

pub fn cmd_check_morphism(
    source: Option<&str>,
    target: Option<&str>,
    morphism: Option<&str>,
    strict_unital: bool,
    verbose: bool,
) -> CommandOutput {
    let (sf, sjson) = match parse_file::<AlgebraJson>(source) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (tf, tjson) = match parse_file::<AlgebraJson>(target) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (mf_name, mjson) = match parse_file::<MorphismFileJson>(morphism) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let ring = match RingSpec::parse_spec(&mjson.ring) {
        Ok(r) => r,
        Err(e) => return input_error(&mf_name, e),
    };
    let ws = Workspace { ring: ring.clone(), max_arity: mjson.max_arity };
    for (f, j) in [(&sf, &sjson), (&tf, &tjson)] {
        let r = match j.ring_spec() {
            Ok(r) => r,
            Err(e) => return input_error(f, e),
        };
        if let Err(e) = ws.check(f, &r, j.max_arity) {
            return e;
        }
    }
    if strict_unital {
        let alg_a = match sjson.to_algebra() {
            Ok(a) => a,
            Err(e) => return lib_error(&sf, e),
        };
        let alg_b = match tjson.to_algebra() {
            Ok(a) => a,
            Err(e) => return lib_error(&tf, e),
        };
        let g_bar = match mjson.g.to_cochain(&ring, &alg_a.carrier.reduced, &alg_b.carrier.reduced)
        {
            Ok(c) => c,
            Err(e) => return input_error(&mf_name, e),
        };
        let a = match &mjson.a {
            Some(aj) => {
                match aj.to_cochain(&ring, &alg_a.carrier.reduced, &alg_b.carrier.unit_module()) {
                    Ok(c) => c,
                    Err(e) => return input_error(&mf_name, e),
                }
            }
            None => Cochain::zero(
                ring.clone(),
                alg_a.carrier.reduced.clone(),
                alg_b.carrier.unit_module(),
                0,
                mjson.max_arity,
            ),
        };
        let report = match su_morphism_check(&g_bar, &a, &alg_a, &alg_b) {
            Ok(r) => r,
            Err(e) => return lib_error(&mf_name, e),
        };
        if report.is_empty() {
            // also verify the curved translation
            let cm = match su_morphism_to_curved(&g_bar, &a, &alg_a, &alg_b) {
                Ok(c) => c,
                Err(e) => return lib_error(&mf_name, e),
            };
            let curved = match check_curved_morphism(&cm) {
                Ok(r) => r,
                Err(e) => return lib_error(&mf_name, e),
            };
            return render_report(&report.merged(curved), verbose);
        }
        return render_report(&report, verbose);
    }
    let (_, nu_a) = match sjson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&sf, e),
    };
    let (_, nu_b) = match tjson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&tf, e),
    };
    let g = match mjson.g.to_cochain(&ring, &nu_a.source, &nu_b.source) {
        Ok(c) => c,
        Err(e) => return input_error(&mf_name, e),
    };
    let report = match ainfty::ainf::check_morphism(&g, &nu_a, &nu_b) {
        Ok(r) => r,
        Err(e) => return lib_error(&mf_name, e),
    };
    render_report(&report, verbose)
}

pub fn cmd_check_rep_morphism(
    algebra: Option<&str>,
    rep_morphism: Option<&str>,
    verbose: bool,
) -> CommandOutput {
    let (af, ajson) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (mf_name, mjson) = match parse_file::<RepMorphismFileJson>(rep_morphism) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (ring, nu) = match ajson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&af, e),
    };
    let lam_m = match mjson.source.to_family(&ring, &nu.source, mjson.max_arity) {
        Ok(f) => f,
        Err(e) => return input_error(&mf_name, e),
    };
    let lam_n = match mjson.target.to_family(&ring, &nu.source, mjson.max_arity) {
        Ok(f) => f,
        Err(e) => return input_error(&mf_name, e),
    };
    let maps_json = RepJson { module: mjson.source.module.clone(), maps: mjson.maps.clone() };
    let g_rep = match maps_json.to_family(&ring, &nu.source, mjson.max_arity) {
        Ok(f) => f,
        Err(e) => return input_error(&mf_name, e),
    };
    // rebuild as a degree-0 family into the target fiber
    let mut g = AdjointFamily::morphism_family(
        ring.clone(),
        nu.source.clone(),
        lam_m.module.clone(),
        lam_n.module.clone(),
        mjson.max_arity,
    );
    for (n, (w, m), v) in g_rep.entries() {
        if let Err(e) = g.set_value(n, w.clone(), m, v.clone()) {
            return input_error(&mf_name, e);
        }
    }
    let fam = match RepMorphismFamily::new(lam_m.clone(), lam_n.clone(), g.clone()) {
        Ok(f) => f,
        Err(e) => return input_error(&mf_name, e),
    };
    let mut report = match check_rep_morphism(&fam, &nu) {
        Ok(r) => r,
        Err(e) => return lib_error(&mf_name, e),
    };
    // dual route through cofree comodules
    let com_m = match CofreeComodule::over_bar(nu.clone(), lam_m.module.clone()) {
        Ok(c) => c,
        Err(e) => return lib_error(&af, e),
    };
    let com_n = match CofreeComodule::over_bar(nu.clone(), lam_n.module.clone()) {
        Ok(c) => c,
        Err(e) => return lib_error(&af, e),
    };
    let coder_m = match ComoduleCoderivation::new(com_m, lam_m) {
        Ok(c) => c,
        Err(e) => return lib_error(&mf_name, e),
    };
    let coder_n = match ComoduleCoderivation::new(com_n, lam_n) {
        Ok(c) => c,
        Err(e) => return lib_error(&mf_name, e),
    };
    match comodule_morphism_check(&g, &coder_m, &coder_n) {
        Ok(r) => report = report.merged(r),
        Err(e) => return lib_error(&mf_name, e),
    }
    render_report(&report, verbose)
}

pub fn cmd_check_rep(
    algebra: Option<&str>,
    rep: Option<&str>,
    strict_unital: bool,
    dual_route: bool,
    verbose: bool,
) -> CommandOutput {
    let (af, ajson) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (rf, rjson) = match parse_file::<RepJson>(rep) {
        Ok(v) => v,
        Err(e) => return e,
    };
    if strict_unital {
        let alg = match ajson.to_algebra() {
            Ok(a) => a,
            Err(e) => return lib_error(&af, e),
        };
        let fam = match rjson.to_family(alg.ring(), &alg.carrier.reduced, alg.max_arity) {
            Ok(f) => f,
            Err(e) => return input_error(&rf, e),
        };
        let mut report = match check_su_representation(&fam, &alg) {
            Ok(r) => r,
            Err(e) => return lib_error(&rf, e),
        };
        if dual_route {
            let bar = match curved_bar(&alg) {
                Ok(b) => b,
                Err(e) => return lib_error(&af, e),
            };
            let comodule = CofreeComodule::over_curved_bar(&bar, fam.module.clone());
            let coder = match ComoduleCoderivation::new(comodule, fam) {
                Ok(c) => c,
                Err(e) => return lib_error(&rf, e),
            };
            match check_curved_comodule(&coder, &bar.xi) {
                Ok(r) => report = report.merged(r),
                Err(e) => return lib_error(&rf, e),
            }
        }
        return render_report(&report, verbose);
    }
    let (ring, nu) = match ajson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&af, e),
    };
    let fam = match rjson.to_family(&ring, &nu.source, nu.max_arity) {
        Ok(f) => f,
        Err(e) => return input_error(&rf, e),
    };
    let mut report = match check_representation(&fam, &nu) {
        Ok(r) => r,
        Err(e) => return lib_error(&rf, e),
    };
    if dual_route {
        let comodule = match CofreeComodule::over_bar(nu.clone(), fam.module.clone()) {
            Ok(c) => c,
            Err(e) => return lib_error(&af, e),
        };
        let coder = match ComoduleCoderivation::new(comodule, fam) {
            Ok(c) => c,
            Err(e) => return lib_error(&rf, e),
        };
        match check_dg_comodule(&coder) {
            Ok(r) => report = report.merged(r),
            Err(e) => return lib_error(&rf, e),
        }
    }
    render_report(&report, verbose)
}

pub fn cmd_mf(
    koszul_f: &str,
    ring: &str,
    max_arity: usize,
    shamash: Option<&str>,
    verbose: bool,
) -> CommandOutput {
    let ring = match RingSpec::parse_spec(ring) {
        Ok(r) => r,
        Err(e) => return input_error("--ring", e),
    };
    let f: Scalar = match ring.parse(koszul_f) {
        Ok(v) => v,
        Err(e) => return input_error("--koszul", e),
    };
    let alg = match koszul_build(&f, max_arity) {
        Ok(a) => a,
        Err(e) => return input_error("--koszul", e),
    };
    let (sf, sjson) = match parse_file::<ShamashJson>(shamash) {
        Ok(v) => v,
        Err(e) => return e,
    };
    if sjson.f != f.to_string() {
        return input_error(&sf, format!("system is over f = {}, command over f = {f}", sjson.f));
    }
    let sys = match sjson.to_system(&ring, max_arity.saturating_sub(1)) {
        Ok(s) => s,
        Err(e) => return input_error(&sf, e),
    };
    // shamash_relations checker
    let violations = match sys.relation_violations() {
        Ok(v) => v,
        Err(e) => return lib_error(&sf, e),
    };
    if !violations.is_empty() {
        let mut report = Report::new(2 * (max_arity.saturating_sub(1)));
        for (n, residual) in &violations {
            report.push(ainfty::report::Violation {
                arity: *n,
                word: Vec::new(),
                clause: "shamash_relations".into(),
                residual: residual
                    .entries()
                    .into_iter()
                    .map(|(from, to, c)| ainfty::report::ResidualTerm {
                        word: vec![from, to],
                        coeff: c.to_string(),
                    })
                    .collect(),
            });
        }
        return render_report(&report, verbose);
    }
    // the system is a strictly unital representation of the Koszul algebra
    let fam = match sys.to_adjoint_family(&alg.carrier.reduced) {
        Ok(f) => f,
        Err(e) => return lib_error(&sf, e),
    };
    let su = match check_su_representation(&fam, &alg) {
        Ok(r) => r,
        Err(e) => return lib_error(&sf, e),
    };
    if !su.is_empty() {
        return render_report(&su, verbose);
    }
    match matrix_factorization(&sys) {
        Ok(mf) => ok(to_canonical_string(&MatrixFactorizationJson::from_mf(&mf))
            .expect("canonical form")),
        Err(e) => {
            let mut report = Report::new(max_arity);
            report.push(ainfty::report::Violation {
                arity: 0,
                word: Vec::new(),
                clause: "matrix_factorization_invariants".into(),
                residual: vec![ainfty::report::ResidualTerm {
                    word: Vec::new(),
                    coeff: e.to_string(),
                }],
            });
            render_report(&report, verbose)
        }
    }
}

pub fn cmd_deform_check(
    algebra: Option<&str>,
    eta: Option<&str>,
    strict_unital: bool,
    decide_coboundary: bool,
    verbose: bool,
) -> CommandOutput {
    let (af, ajson) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (ef, ejson) = match parse_file::<CochainFileJson>(eta) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let ring = match RingSpec::parse_spec(&ejson.ring) {
        Ok(r) => r,
        Err(e) => return input_error(&ef, e),
    };
    // one workspace: the deformation data must share ring and truncation
    // with the algebra file
    match ajson.ring_spec() {
        Ok(r) => {
            let ws = Workspace { ring: r, max_arity: ajson.max_arity };
            if let Err(e) = ws.check(&ef, &ring, ejson.max_arity) {
                return e;
            }
        }
        Err(e) => return input_error(&af, e),
    }
    if strict_unital {
        let alg = match ajson.to_algebra() {
            Ok(a) => a,
            Err(e) => return lib_error(&af, e),
        };
        let eta = match ejson.cochain.to_cochain(&ring, &alg.carrier.reduced, &alg.carrier.ambient)
        {
            Ok(c) => c,
            Err(e) => return input_error(&ef, e),
        };
        let report = match su_first_order_check(&alg, &eta) {
            Ok(r) => r,
            Err(e) => return lib_error(&ef, e),
        };
        return render_report(&report, verbose);
    }
    let (_, nu) = match ajson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&af, e),
    };
    let eta_c = match ejson.cochain.to_cochain(&ring, &nu.source, &nu.source) {
        Ok(c) => c,
        Err(e) => return input_error(&ef, e),
    };
    if decide_coboundary {
        let verdict = match solve_coboundary(&nu, &eta_c) {
            Ok(v) => v,
            Err(e) => return lib_error(&ef, e),
        };
        let payload = match verdict {
            CoboundaryVerdict::Coboundary(alpha) => serde_json::json!({
                "coboundary": true,
                "witness": CochainJson::from_cochain(&alpha),
            }),
            CoboundaryVerdict::NotCoboundary => serde_json::json!({ "coboundary": false }),
            CoboundaryVerdict::Undecided(reason) => serde_json::json!({
                "coboundary": "undecided",
                "reason": reason,
            }),
        };
        return ok(serde_json::to_string_pretty(&payload).unwrap());
    }
    let def = FirstOrderDeformation::new_unchecked(nu, eta_c);
    let report = match first_order_check(&def) {
        Ok(r) => r,
        Err(e) => return lib_error(&ef, e),
    };
    render_report(&report, verbose)
}

pub fn cmd_gauge(
    algebra: Option<&str>,
    eta: Option<&str>,
    alpha: Option<&str>,
) -> CommandOutput {
    let (af, ajson) = match parse_file::<AlgebraJson>(algebra) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (ef, ejson) = match parse_file::<CochainFileJson>(eta) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (lf, ljson) = match parse_file::<CochainFileJson>(alpha) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (ring, nu) = match ajson.to_nu() {
        Ok(v) => v,
        Err(e) => return lib_error(&af, e),
    };
    let ws = Workspace { ring: ring.clone(), max_arity: ajson.max_arity };
    for (f, j) in [(&ef, &ejson), (&lf, &ljson)] {
        let r = match RingSpec::parse_spec(&j.ring) {
            Ok(r) => r,
            Err(e) => return input_error(f, e),
        };
        if let Err(e) = ws.check(f, &r, j.max_arity) {
            return e;
        }
    }
    let eta_c = match ejson.cochain.to_cochain(&ring, &nu.source, &nu.source) {
        Ok(c) => c,
        Err(e) => return input_error(&ef, e),
    };
    let alpha_c = match ljson.cochain.to_cochain(&ring, &nu.source, &nu.source) {
        Ok(c) => c,
        Err(e) => return input_error(&lf, e),
    };
    let def = FirstOrderDeformation::new_unchecked(nu, eta_c);
    let moved = match gauge_action(&alpha_c, &def) {
        Ok(d) => d,
        Err(e) => return lib_error(&lf, e),
    };
    let out = CochainFileJson {
        ring: ring.to_string(),
        max_arity: moved.eta.max_arity,
        cochain: CochainJson::from_cochain(&moved.eta),
    };
    ok(to_canonical_string(&out).expect("canonical form"))
}

