//! Subcommand implementations. Each returns a report plus its human-readable text.

use std::collections::BTreeSet;

use pencil_chow::{builtin, builtin_map, ChowError, GradedPiece, Presentation};
use pencil_core::characters::{v_character, GroupData, GroupName};
use pencil_core::pgl2::{stabilizer, subgroup};
use pencil_core::wall::{anharmonic_lambda, invariant_fiber_rho, phi_fiber, s4_orbit_rho, wall_normal_form, wall_pencil};
use pencil_core::{
    classify_orbit, classify_stability, parse_pencil, pencil_invariants, Error, Field, FiniteSubgroup, ProjPoint,
    Rho, SubgroupName,
};
use serde_json::json;

use crate::report::{Check, Report, Status};
use crate::verify::{self, Ctx, CRITERIA};

/// A failure that maps to an exit code: 2 for bad input, 1 otherwise.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NotPrime(_)
            | Error::CharTwoOrThree(_)
            | Error::SquareDiscriminant(_)
            | Error::BadFieldSpec(_)
            | Error::BadElement(_)
            | Error::BadPencil { .. }
            | Error::WrongDegree { .. }
            | Error::LinearlyDependent
            | Error::NotOnPluckerQuadric
            | Error::BothZero => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ChowError> for Failure {
    fn from(e: ChowError) -> Failure {
        let code = match e {
            ChowError::UnknownName(_) | ChowError::UnknownGenerator(_) | ChowError::Parse(_) | ChowError::NotHomogeneous(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

pub type Outcome = Result<(Report, String), Failure>;

fn report(command: &str, field: &Field, checks: Vec<Check>) -> Report {
    Report::new(command, &field.spec(), checks)
}

/// `(a:b)` with integer coordinates when the point is rational.
pub fn point_text(x: &ProjPoint) -> String {
    match x.primitive_integer() {
        Some(v) => format!("({}:{})", v[0], v[1]),
        None => {
            let c = x.coords();
            format!("({}:{})", c[0], c[1])
        }
    }
}

pub fn parse_point(field: &Field, s: &str) -> Result<ProjPoint, Failure> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t.split_once(':').ok_or_else(|| usage(format!("malformed point `{s}`: expected x:y")))?;
    ProjPoint::new(vec![field.parse_elem(a)?, field.parse_elem(b)?])
        .map_err(|_| usage(format!("malformed point `{s}`: both coordinates are zero")))
}

pub fn invariants(field: &Field, pencil: &str) -> Outcome {
    let p = parse_pencil(field, pencil)?;
    let inv = pencil_invariants(&p);
    let point = pencil_core::invariants::point_of(&inv).map(|x| point_text(&x)).unwrap_or_else(|_| "none".into());
    let stab = classify_stability(&p);
    let text = format!("I'={}\nJ={}\npoint={}\nstability={}\n", inv.iprime, inv.j, point, stab);
    let w = json!({"pencil": p.to_string(), "iprime": inv.iprime.to_string(), "j": inv.j.to_string(),
        "point": point, "stability": stab.to_string()});
    Ok((report("invariants", field, vec![Check::info("invariants", w)]), text))
}

pub fn classify(field: &Field, pencil: &str) -> Outcome {
    let p = parse_pencil(field, pencil)?;
    let label = classify_orbit(&p)?;
    let w = json!({"pencil": p.to_string(), "label": label.to_string(), "dim": label.dim(), "isotropy": label.isotropy()});
    Ok((report("classify", field, vec![Check::info("classify", w)]), format!("{label}\n")))
}

pub fn wall_form(field: &Field, pencil: &str) -> Outcome {
    let p = parse_pencil(field, pencil)?;
    let (a, rho) = wall_normal_form(&p)?;
    let text = format!("rho={rho}\nA={a}\n");
    let w = json!({"pencil": p.to_string(), "rho": rho.to_string(), "matrix": a.to_string()});
    Ok((report("wall-form", field, vec![Check::info("wall-form", w)]), text))
}

fn group_text(g: &FiniteSubgroup) -> (String, serde_json::Value) {
    let prof = g.profile();
    let mut text = format!("order={}\ntype={}\nprofile={:?}\n", g.order(), g.iso_guess(), prof);
    for x in g.elements() {
        text.push_str(&format!("  {x}\n"));
    }
    let w = json!({"order": g.order(), "type": g.iso_guess(), "profile": prof,
        "elements": g.elements().iter().map(|x| x.to_string()).collect::<Vec<_>>()});
    (text, w)
}

pub fn stabilizer_cmd(field: &Field, pencil: Option<&str>, group: Option<&str>) -> Outcome {
    let g = match (pencil, group) {
        (Some(p), None) => stabilizer(&parse_pencil(field, p)?)?,
        (None, Some(name)) => {
            let n = SubgroupName::parse(name).ok_or_else(|| usage(format!("unknown subgroup `{name}`")))?;
            subgroup(n, field)?
        }
        _ => return Err(usage("give exactly one of --pencil or --group")),
    };
    let (text, w) = group_text(&g);
    Ok((report("stabilizer", field, vec![Check::info("stabilizer", w)]), text))
}

pub fn fiber(field: &Field, pencil: Option<&str>, point: Option<&str>) -> Outcome {
    match (pencil, point) {
        (Some(p), None) => {
            let p = parse_pencil(field, p)?;
            let pairs = phi_fiber(&p)?;
            let distinct: BTreeSet<Rho> = pairs.iter().map(|(_, r)| r.clone()).collect();
            let mut text = format!("size={}\nparameters={}\n", pairs.len(), distinct.len());
            for (a, r) in &pairs {
                text.push_str(&format!("  rho={r} A={a}\n"));
            }
            let w = json!({"size": pairs.len(), "parameters": distinct.iter().map(Rho::to_string).collect::<Vec<_>>(),
                "pairs": pairs.iter().map(|(a, r)| json!([r.to_string(), a.to_string()])).collect::<Vec<_>>()});
            Ok((report("fiber", field, vec![Check::info("fiber", w)]), text))
        }
        (None, Some(x)) => {
            let x = parse_point(field, x)?;
            let f = invariant_fiber_rho(&x)?;
            let roots: Vec<String> = f.roots.iter().map(|(r, m)| if *m == 1 { r.to_string() } else { format!("{r}^{m}") }).collect();
            let text = format!("roots={}\nsplit={}\n", roots.join(" "), f.split);
            let w = json!({"point": point_text(&x), "roots": roots, "split": f.split});
            Ok((report("fiber", field, vec![Check::info("fiber", w)]), text))
        }
        _ => Err(usage("give exactly one of --pencil or --point")),
    }
}

pub fn orbit(field: &Field, rho: &str) -> Outcome {
    let r = Rho::parse(field, rho)?;
    let orbit = s4_orbit_rho(field, &r);
    let names: Vec<String> = orbit.iter().map(Rho::to_string).collect();
    let stable = classify_stability(&wall_pencil(field, &r)) == pencil_core::StabilityClass::Stable;
    let lambda = anharmonic_lambda(&r).map(|l| l.to_string()).ok();
    let mut text = format!("orbit={{{}}}\nsize={}\nstable={}\n", names.join(", "), orbit.len(), stable);
    if let Some(l) = &lambda {
        text.push_str(&format!("lambda={l}\n"));
    }
    let w = json!({"rho": r.to_string(), "orbit": names, "stable": stable, "in_fwall": r.in_fwall(), "lambda": lambda});
    Ok((report("orbit", field, vec![Check::info("orbit", w)]), text))
}

/// Elementary divisors as strings, e.g. `["2", "3"]`.
pub fn divisors(piece: &GradedPiece) -> Vec<String> {
    piece.elementary_divisors().iter().map(|x| x.to_string()).collect()
}

pub enum ChowCmd {
    Piece { name: String, degree: u32 },
    Show { name: String },
    Member { name: String, element: String, extra: Vec<String> },
    Map { name: String },
}

fn load(name: &str) -> Result<Presentation, Failure> {
    Ok(builtin(name)?)
}

pub fn chow(field: &Field, cmd: ChowCmd, bound: u32) -> Outcome {
    match cmd {
        ChowCmd::Piece { name, degree } => {
            let p = load(&name)?;
            let g = p.graded_piece(degree)?;
            let w = json!({"name": name, "degree": degree, "group": g.to_string(), "free_rank": g.free_rank,
                "elementary_divisors": divisors(&g),
                "generators": g.generators.iter().map(|(x, n)| json!([p.format(&p.from_coords(&g.basis, x)), n.to_string()])).collect::<Vec<_>>()});
            Ok((report("chow piece", field, vec![Check::info("piece", w)]), format!("{g}\n")))
        }
        ChowCmd::Show { name } => {
            let p = load(&name)?;
            let mut text = p.to_text();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let w = json!({"name": name, "presentation": p.to_text()});
            Ok((report("chow show", field, vec![Check::info("show", w)]), text))
        }
        ChowCmd::Member { name, element, extra } => {
            let base = load(&name)?;
            let extra: Vec<&str> = extra.iter().map(String::as_str).collect();
            let p = if extra.is_empty() { base } else { base.quotient_text(&format!("{name}/extra"), &extra)? };
            let x = p.parse_element(&element)?;
            let member = p.in_ideal(&x)?;
            let nf = p.format(&p.normal_form(&x)?);
            let text = format!("{member}\nnormal_form={nf}\n");
            let w = json!({"name": name, "quotient_by": extra, "element": element, "in_ideal": member, "normal_form": nf});
            Ok((report("chow member", field, vec![Check::info("member", w)]), text))
        }
        ChowCmd::Map { name } => {
            let m = builtin_map(&name)?;
            let c = m.check(bound)?;
            let text = format!(
                "{}: {} -> {}\nchecked={}\nstatus={}\n{}",
                m.name,
                m.source.name,
                m.target.name,
                c.checked,
                if c.ok() { "pass" } else { "fail" },
                c.failures.iter().map(|f| format!("  not in ideal: {f}\n")).collect::<String>()
            );
            let w = json!({"source": m.source.name, "target": m.target.name, "checked": c.checked, "failures": c.failures});
            Ok((report("chow map", field, vec![Check::new(&format!("map.{name}"), "", c.ok(), w)]), text))
        }
    }
}

pub fn chars(field: &Field, group: &str) -> Outcome {
    let name = GroupName::parse(group).ok_or_else(|| usage(format!("unknown group `{group}`")))?;
    let g = GroupData::builtin(name, field)?;
    let ortho = g.check_orthogonality().is_ok();
    let mut text = format!("group={group} order={}\nclasses:", g.order());
    for c in &g.classes {
        text.push_str(&format!(" {}[{}]", c.label, c.size()));
    }
    text.push('\n');
    let mut table = Vec::new();
    for r in &g.irreps {
        let vals: Vec<String> = r.values.iter().map(|v| v.to_string()).collect();
        text.push_str(&format!("  {:10} {}\n", r.name, vals.join("  ")));
        table.push(json!({"irrep": r.name, "values": vals}));
    }
    let decomp = |mult: &[i64]| -> String {
        let parts: Vec<String> = g
            .irreps
            .iter()
            .zip(mult)
            .filter(|(_, &m)| m != 0)
            .map(|(r, &m)| if m == 1 { r.name.to_string() } else { format!("{m}*{}", r.name) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    };
    let v = g.decompose(&v_character(name, field)?)?;
    let adj = g.decompose(&g.adjoint_character()?)?;
    text.push_str(&format!("V = {}\nsl2 = {}\northogonality={}\n", decomp(&v), decomp(&adj), ortho));
    let w = json!({"order": g.order(),
        "classes": g.classes.iter().map(|c| json!({"label": c.label, "size": c.size(), "rep": c.rep.to_string()})).collect::<Vec<_>>(),
        "table": table, "v": v, "adjoint": adj});
    let checks = vec![Check::info("table", w), Check::new("orthogonality", "", ortho, json!(ortho))];
    Ok((report("chars", field, checks), text))
}

pub fn verify_all(ctx: &Ctx) -> Outcome {
    if !ctx.field.is_finite() {
        return Err(usage("verify-all needs a finite field for the enumeration checks"));
    }
    let checks = verify::verify_all(ctx);
    let rep = report("verify-all", &ctx.field, checks);
    let mut text = rep.to_text();
    for (i, title) in CRITERIA.iter().enumerate() {
        let prefix = format!("{:02}.", i + 1);
        let ok = rep.checks.iter().filter(|c| c.id.starts_with(&prefix)).all(|c| c.status != Status::Fail);
        text.push_str(&format!("{} criterion {:2}: {title}\n", if ok { "PASS" } else { "FAIL" }, i + 1));
    }
    Ok((rep, text))
}
