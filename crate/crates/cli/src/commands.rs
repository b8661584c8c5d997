//! Command implementations. Files are written atomically (temp + rename)
//! and all output is byte-deterministic for fixed flags and seed.

use hamcayley::algebra::{genset_equivalent, Element, Group, GroupDescriptor, QFamily};
use hamcayley::cases::{
    canonicalization_check, catalogued_groups, canonical_case, paper_quotient_cycle, run_case,
    theorem_sweep, verify_f3_identities, z13_shape_check, CaseId, CertSink, SweepOptions,
};
use hamcayley::graph::{export_dot as dot, CayleyGraph, QuotientMultigraph};
use hamcayley::lift::{HamCertificate, ReplayError};
use serde_json::Value;
use std::fs;
use std::path::Path;

pub enum CliError {
    /// Exit 1: a check that should have passed did not.
    Verification(String),
    /// Exit 2: bad flags or malformed input.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

/// Atomic write: temp file in the target directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir).map_err(usage)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().map(|n| n.to_string_lossy().to_string()).unwrap_or_default()
    ));
    fs::write(&tmp, contents).map_err(usage)?;
    fs::rename(&tmp, path).map_err(usage)?;
    Ok(())
}

fn cert_file_name(case: CaseId, p: u32) -> String {
    let name = case.name().replace([':', ','], "-");
    format!("{name}-{p}.cert.json")
}

fn validate_verify_prime(p: u32) -> Result<(), CliError> {
    if !hamcayley::algebra::is_prime(p) || p < 7 || p % 3 != 1 {
        return Err(CliError::Usage(format!(
            "p = {p} must be a prime congruent to 1 mod 3, at least 7"
        )));
    }
    Ok(())
}

pub fn verify_paper(
    primes: &[u32],
    case_filter: Option<&str>,
    out_dir: &Path,
    skip_canonicalization: bool,
) -> Result<(), CliError> {
    for &p in primes {
        validate_verify_prime(p)?;
    }
    let filter = match case_filter {
        Some(text) => Some(
            CaseId::parse(text).ok_or_else(|| CliError::Usage(format!("unknown case '{text}'")))?,
        ),
        None => None,
    };
    let mut written = 0usize;

    let mut run_one = |case: CaseId, p: u32| -> Result<(), CliError> {
        let cert = run_case(case, p).map_err(|e| {
            CliError::Verification(format!("case {} at p = {}: {e}", case.name(), p))
        })?;
        debug_assert!(cert.verified);
        let path = out_dir.join(cert_file_name(case, p));
        write_atomic(&path, &serde_json::to_string_pretty(&cert.to_json()).map_err(usage)?)?;
        println!("verified {:>8} p={:<3} -> {}", case.name(), p, path.display());
        written += 1;
        Ok(())
    };

    for &p in primes {
        for case in CaseId::semidirect_cases() {
            if filter.map_or(true, |f| f == case) {
                run_one(case, p)?;
            }
        }
    }
    for case in CaseId::all().into_iter().filter(|c| c.is_z13()) {
        if filter.map_or(true, |f| f == case) {
            run_one(case, 13)?;
        }
    }

    if filter.is_none() {
        verify_f3_identities().map_err(|e| CliError::Verification(e.to_string()))?;
        println!("verified f3 identity suite");

        if !skip_canonicalization {
            for &p in primes {
                let (r, _) = hamcayley::algebra::find_primitive_cube_roots(p).map_err(usage)?;
                for (name, cases) in catalogued_groups() {
                    let report = canonicalization_check(&cases, p, r)
                        .map_err(|e| CliError::Verification(e.to_string()))?;
                    if !report.is_complete() {
                        return Err(CliError::Verification(format!(
                            "{} at p = {p}: {} generating sets match no canonical set",
                            name,
                            report.unmatched.len()
                        )));
                    }
                    println!(
                        "canonicalization {name} p={p}: {} generating sets -> {:?}",
                        report.total_gensets, report.matched
                    );
                }
            }
            let shapes = z13_shape_check().map_err(|e| CliError::Verification(e.to_string()))?;
            if !shapes.is_complete() {
                return Err(CliError::Verification(
                    "order-351 shape pairs failed to reduce".to_string(),
                ));
            }
            println!(
                "canonicalization z13e27: {} shaped pairs -> {:?}",
                shapes.total_gensets, shapes.matched
            );
        }
    }

    println!("ok: {written} certificates");
    Ok(())
}

pub fn check_certificate(path: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(path).map_err(usage)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("not valid JSON: {e}")))?;
    let cert = HamCertificate::from_json(&value).map_err(|e| match e {
        ReplayError::Malformed(m) => CliError::Usage(m),
        ReplayError::Failed(v) => CliError::Verification(v.to_string()),
    })?;
    match cert.replay() {
        Ok(_) => {
            println!(
                "ok: {} on {} ({} labels, method {})",
                match cert.claim {
                    hamcayley::lift::CertClaim::Full => "full cycle",
                    hamcayley::lift::CertClaim::Quotient { .. } => "quotient cycle",
                },
                cert.group.key(),
                cert.labels.len(),
                cert.method
            );
            Ok(())
        }
        Err(ReplayError::Malformed(m)) => Err(CliError::Usage(m)),
        Err(ReplayError::Failed(v)) => Err(CliError::Verification(v.to_string())),
    }
}

pub fn sweep(
    p: u32,
    budget: u64,
    seed: u64,
    out: Option<&Path>,
    inline_certs: bool,
    include_size_3: bool,
    family: Vec<String>,
) -> Result<(), CliError> {
    let opts = SweepOptions {
        budget,
        seed,
        cert_sink: if inline_certs { CertSink::Inline } else { CertSink::Discard },
        include_size_3,
        family_filter: family,
    };
    let report = theorem_sweep(p, &opts).map_err(CliError::Usage)?;
    let json = serde_json::to_string_pretty(&report.to_json()).map_err(usage)?;
    match out {
        Some(path) => write_atomic(path, &json)?,
        None => println!("{json}"),
    }
    let failures = report.failure_count();
    eprintln!(
        "sweep p={p}: {} entries, {} failures (budget {budget}, seed {seed})",
        report.entries.len(),
        failures
    );
    if failures > 0 {
        return Err(CliError::Verification(format!("{failures} entries not certified")));
    }
    Ok(())
}

pub fn export_dot(
    case_text: &str,
    quotient: bool,
    walk: bool,
    out: Option<&Path>,
    p: u32,
) -> Result<(), CliError> {
    let case = CaseId::parse(case_text)
        .ok_or_else(|| CliError::Usage(format!("unknown case '{case_text}'")))?;
    let (p, r) = if case.is_z13() {
        (13, 3)
    } else {
        validate_verify_prime(p)?;
        let (r1, _) = hamcayley::algebra::find_primitive_cube_roots(p).map_err(usage)?;
        (p, r1)
    };
    let cc = canonical_case(case, p, r).map_err(usage)?;
    let cycle = paper_quotient_cycle(&cc);
    let overlay = walk.then_some(&cycle);
    let text = if quotient {
        let q = QuotientMultigraph::build(
            cc.group.clone(),
            cc.genset.clone(),
            hamcayley::algebra::Subgroup::sylow_p(&cc.group),
        )
        .map_err(usage)?;
        dot(&q, overlay)
    } else {
        let full_overlay: Option<hamcayley::graph::Walk> = if walk {
            run_case(case, p)
                .ok()
                .map(|cert| hamcayley::graph::Walk::new(cert.start, cert.labels))
        } else {
            None
        };
        let cay = CayleyGraph::build(cc.group.clone(), cc.genset.clone()).map_err(usage)?;
        dot(&cay, full_overlay.as_ref())
    };
    match out {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

pub fn list_families() -> Result<(), CliError> {
    for family in QFamily::ALL {
        println!(
            "{:<8} order-27 factor, action units on: {}",
            family.tag(),
            family.generator_names().join(", ")
        );
    }
    println!("z13e27   the fixed order-351 group (no parameters)");
    Ok(())
}

pub fn equiv_gensets(group_json: &str, s1_json: &str, s2_json: &str) -> Result<(), CliError> {
    let desc_value: Value = serde_json::from_str(group_json).map_err(usage)?;
    let desc = GroupDescriptor::from_json(&desc_value).map_err(usage)?;
    let group = Group::build(desc).map_err(usage)?;
    let parse_set = |text: &str| -> Result<Vec<Element>, CliError> {
        let v: Value = serde_json::from_str(text).map_err(usage)?;
        v.as_array()
            .ok_or_else(|| CliError::Usage("expected a JSON array of elements".to_string()))?
            .iter()
            .map(|e| group.element_from_json(e).map_err(usage))
            .collect()
    };
    let s1 = parse_set(s1_json)?;
    let s2 = parse_set(s2_json)?;
    match genset_equivalent(&group, &s1, &s2).map_err(usage)? {
        Some(aut) => {
            // print the witness on the generators of interest
            for e in s1.iter().chain(s2.iter()) {
                let img = aut.apply(&group, e);
                println!(
                    "{} -> {}",
                    group.element_key(e),
                    group.element_key(&img)
                );
            }
            println!("equivalent");
            Ok(())
        }
        None => Err(CliError::Verification("no automorphism carries s1 onto s2".to_string())),
    }
}
