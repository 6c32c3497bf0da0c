use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use coxgor_core::algebra::{
    artinian_certify, minimal_generators, poincare_pairing, socle_slice, support_to_level, DEFAULT_LEVEL_CAP,
};
use coxgor_core::arith::format_rational;
use coxgor_core::hasse::{build_diagram, to_adjacency, to_dot};
use coxgor_core::lefschetz::{
    comparability_graph, hessian_criterion_verify, lefschetz_check, normalized_functional, LefschetzConfig,
    LefschetzMode,
};
use coxgor_core::polyring::format_polynomial;
use coxgor_core::toric::{ci_socle_check, format_reconstruction, reconstruct};
use coxgor_core::{
    AlgebraSupport, ArtinianStatus, Error, GorensteinVerdict, GradedRing, IdealPresentation, Polynomial,
};

use crate::error::CliError;
use crate::spec::Loaded;

fn ring_line(ring: &GradedRing) -> String {
    let group = ring.group();
    let vars: Vec<String> = ring
        .names()
        .iter()
        .zip(ring.degrees())
        .map(|(n, d)| format!("{n}:{}", group.format(d)))
        .collect();
    format!("ring: {}\n", vars.join(" "))
}

fn status_line(s: &AlgebraSupport) -> String {
    match s.status() {
        ArtinianStatus::Artinian { frontier } => format!("status: Artinian, slices vanish above level {frontier}\n"),
        ArtinianStatus::NotArtinian { variable } => {
            format!("status: not Artinian, no power of {} lies in the ideal\n", s.ring().names()[*variable])
        }
        ArtinianStatus::Inconclusive { cap } => format!("status: inconclusive up to level {cap}\n"),
    }
}

fn certified(ideal: &IdealPresentation, cap: i64, what: &str) -> Result<AlgebraSupport, CliError> {
    let s = artinian_certify(ideal, cap).map_err(|e| CliError::core(what, e))?;
    match s.status() {
        ArtinianStatus::Artinian { .. } => Ok(s),
        _ => Err(CliError::core(what, Error::NotArtinian(status_line(&s).trim_end().trim_start_matches("status: ").into()))),
    }
}

fn apolar_support(f: &Polynomial, what: &str) -> Result<AlgebraSupport, CliError> {
    let ann = IdealPresentation::annihilator(&f.ring().dual(), f).map_err(|e| CliError::core(what, e))?;
    certified(&ann, DEFAULT_LEVEL_CAP, what)
}

fn line_terminated(mut text: String) -> String {
    while text.ends_with("\n\n") {
        text.pop();
    }
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn emit_spec(text: String, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text),
    }
}

pub fn hilbert(spec: &Path, name: &str, max_level: Option<i64>, cap: i64) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let ideal = spec.ideal(name)?;
    let what = format!("ideals.{name}");
    let support = match max_level {
        Some(level) => support_to_level(&ideal, level).map_err(|e| CliError::core(&what, e))?,
        None => certified(&ideal, cap, &what)?,
    };
    let group = support.ring().group();
    let mut out = ring_line(support.ring());
    if max_level.is_none() {
        out.push_str(&status_line(&support));
    } else {
        let _ = writeln!(out, "levels: 0..={}", support.computed_level());
    }
    for (g, h) in support.hilbert_function() {
        let _ = writeln!(out, "h{} = {h}", group.format(&g));
    }
    if let Some(g) = support.greatest() {
        let _ = writeln!(out, "greatest: {}", group.format(g));
    }
    Ok(out)
}

pub fn annihilator(spec: &Path, name: &str, max_level: Option<i64>) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let f = spec.polynomial(name)?;
    let what = format!("polynomials.{name}");
    let support = apolar_support(&f, &what)?;
    let ring = support.ring();
    let group = ring.group();
    let mut out = ring_line(ring);
    let _ = writeln!(out, "f = {}", format_polynomial(&f));
    for (g, gens) in minimal_generators(&support).map_err(|e| CliError::core(&what, e))? {
        if let Some(top) = max_level {
            if ring.level(&g).map_err(|e| CliError::core(&what, e))? > top {
                continue;
            }
        }
        let gens: Vec<String> = gens.iter().map(format_polynomial).collect();
        let _ = writeln!(out, "{}: {}", group.format(&g), gens.join(", "));
    }
    if let Some(g) = support.greatest() {
        let _ = writeln!(out, "socle degree: {}", group.format(g));
    }
    Ok(out)
}

pub fn hasse(spec: &Path, name: &str, dot: Option<&Path>) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let what = format!("ideals.{name}");
    let support = certified(&spec.ideal(name)?, DEFAULT_LEVEL_CAP, &what)?;
    let d = build_diagram(&support).map_err(|e| CliError::core(&what, e))?;
    if let Some(path) = dot {
        write_file(path, &to_dot(&d))?;
    }
    let mut out = format!("nodes: {}\nedges: {}\n", d.nodes.len(), d.edges.len());
    out.push_str(&to_adjacency(&d));
    match d.greatest {
        Some(i) => {
            let _ = writeln!(out, "greatest: {}", d.group.format(&d.nodes[i].0));
        }
        None => out.push_str("greatest: none\n"),
    }
    match &d.symmetric_about {
        Some(w) => {
            let _ = writeln!(out, "symmetric about: {}", d.group.format(w));
        }
        None => out.push_str("symmetric: no\n"),
    }
    Ok(out)
}

pub fn gorenstein(spec: &Path, name: &str) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let what = format!("ideals.{name}");
    let support = certified(&spec.ideal(name)?, DEFAULT_LEVEL_CAP, &what)?;
    let group = support.ring().group();
    let wrap = |e| CliError::core(&what, e);
    let mut out = ring_line(support.ring());
    out.push_str("socle:\n");
    for g in support.support() {
        let dim = socle_slice(&support, &g).map_err(wrap)?.cols();
        if dim > 0 {
            let _ = writeln!(out, "  {}: {dim}", group.format(&g));
        }
    }
    if let Some(omega) = support.greatest() {
        let _ = writeln!(out, "greatest: {}", group.format(omega));
        out.push_str("pairing ranks:\n");
        for (g, h) in support.hilbert_function() {
            let rank = poincare_pairing(&support, omega, &g).map_err(wrap)?.rank();
            let _ = writeln!(out, "  {} x {}: {rank}/{h}", group.format(&g), group.format(&group.sub(omega, &g)));
        }
    } else {
        out.push_str("greatest: none\n");
    }
    match coxgor_core::algebra::is_cox_gorenstein(&support).map_err(wrap)? {
        GorensteinVerdict::Gorenstein { omega } => {
            let _ = writeln!(out, "verdict: Gorenstein, omega = {}", group.format(&omega));
        }
        GorensteinVerdict::NotGorenstein { .. } => out.push_str("verdict: not Gorenstein\n"),
    }
    Ok(out)
}

fn pretty(spec: &crate::spec::SpecFile) -> String {
    let mut text = serde_json::to_string_pretty(spec).expect("spec serializes");
    text.push('\n');
    text
}

pub fn artinianize(spec: &Path, name: &str, omega: &str, cap: i64, out: Option<&Path>) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let omega = spec.element("--omega", omega)?;
    let ideal = spec.ideal(name)?;
    let j = coxgor_core::algebra::artinianize(&ideal, &omega, cap).map_err(|e| CliError::core(&format!("ideals.{name}"), e))?;
    emit_spec(pretty(&spec.derived(&format!("{name}_artinian"), &j)), out)
}

pub fn gorensteinize(spec: &Path, name: &str, omega: Option<&str>, out: Option<&Path>) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let what = format!("ideals.{name}");
    let support = certified(&spec.ideal(name)?, DEFAULT_LEVEL_CAP, &what)?;
    let omega = match omega {
        Some(text) => spec.element("--omega", text)?,
        None => support
            .greatest()
            .cloned()
            .ok_or_else(|| CliError::core(&what, Error::NoGreatestElement))?,
    };
    let j = coxgor_core::algebra::gorensteinize(&support, &omega).map_err(|e| CliError::core(&what, e))?;
    emit_spec(pretty(&spec.derived(&format!("{name}_gorenstein"), &j)), out)
}

pub fn lefschetz(spec: &Path, name: &str, strong: bool, trials: usize, seed: u64, uniform: bool) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let f = spec.polynomial(name)?;
    let what = format!("polynomials.{name}");
    let support = apolar_support(&f, &what)?;
    let mode = if strong { LefschetzMode::Strong } else { LefschetzMode::Weak };
    let config = LefschetzConfig { trials, seed, uniform };
    let report = lefschetz_check(&support, mode, &config).map_err(|e| CliError::core(&what, e))?;
    Ok(line_terminated(report.to_string()))
}

pub fn hessian(spec: &Path, name: &str, source: &str, target: &str, linear: &str) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let f = spec.polynomial(name)?;
    let what = format!("polynomials.{name}");
    let support = apolar_support(&f, &what)?;
    let ring: &Arc<GradedRing> = support.ring();
    let group = ring.group();
    let source = spec.element("--source", source)?;
    let target = spec.element("--target", target)?;
    let lin = coxgor_core::polyring::parse_polynomial(ring, linear).map_err(|e| CliError::core("--linear", e))?;
    let l = lin.homogeneous_degree().map_err(|e| CliError::core("--linear", e))?.clone();
    let edges = comparability_graph(&support).map_err(|e| CliError::core(&what, e))?;
    let edge = edges
        .iter()
        .find(|e| e.source == source && e.target == target && e.l == l)
        .ok_or_else(|| {
            CliError::Spec(format!(
                "--source/--target: no comparability edge {} -> {} through degree {}",
                group.format(&source),
                group.format(&target),
                group.format(&l)
            ))
        })?;
    let phi = normalized_functional(ring, &l).map_err(|e| CliError::core("--linear", e))?;
    let check =
        hessian_criterion_verify(&support, &f, edge, &lin, &phi, None, None).map_err(|e| CliError::core(&what, e))?;
    let phi: Vec<String> = phi.iter().map(format_rational).collect();
    let mut out = format!(
        "edge: {} -[{},{}]-> {}\nL = {}\nphi = ({})\n",
        group.format(&source),
        group.format(&l),
        edge.k,
        group.format(&target),
        format_polynomial(&lin),
        phi.join(",")
    );
    let _ = writeln!(out, "multiplication: {}", check.multiplication);
    let _ = writeln!(out, "hessian: {}", check.hessian);
    let _ = writeln!(out, "rank: {}", check.multiplication.rank());
    let _ = writeln!(out, "criterion: {}", if check.holds() { "holds" } else { "fails" });
    Ok(out)
}

pub fn toric_reconstruct(spec: &Path, alphas: Option<&[i64]>) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let r = reconstruct(&spec.s, alphas).map_err(|e| CliError::core("grading", e))?;
    Ok(format_reconstruction(&r, &spec.s))
}

pub fn ci_check(spec: &Path, names: &[String]) -> Result<String, CliError> {
    let spec = Loaded::read(spec)?;
    let mut forms = Vec::new();
    for name in names {
        let p = spec.polynomial(name)?;
        forms.push(p.reinterpret(&spec.s).map_err(|e| CliError::core(&format!("polynomials.{name}"), e))?);
    }
    let fan = reconstruct(&spec.s, None).map_err(|e| CliError::core("grading", e))?.fan;
    let report = ci_socle_check(&spec.s, &fan, &forms).map_err(|e| CliError::core("forms", e))?;
    Ok(line_terminated(report.to_string()))
}
