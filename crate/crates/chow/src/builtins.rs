//! Built-in presentations and the maps between them.
//!
//! Generator names are ASCII: `alpha`, `nu`, `zeta1`, `eta`, `zeta`, `c1V`,
//! `c2V`, `xi`, with primes for the cohomological and dihedral classes.
//! `S4_COHOM` and `D8_COHOM` use cohomological grading.

use crate::error::{ChowError, Result};
use crate::maps::RingMap;
use crate::presentation::Presentation;

pub const NAMES: [&str; 10] =
    ["PGL2_PT", "S4_PT", "S4_COHOM", "D8_COHOM", "S4_P1", "S4_P1_MINUS_F", "FINAL", "D8_P1_SUB", "D8_PT", "P1"];

const PGL2_PT: &str = "name PGL2_PT; gen c2 2; gen c3 3; rel 2c3;";

const S4_PT: &str = "name S4_PT; gen alpha 1; gen nu 3; gen zeta1 2; gen eta 2;
rel 2alpha; rel 2nu; rel 4zeta1; rel 3eta;
family alpha*nu^j - alpha^(j+1)*(zeta1+alpha^2)^j j>=1 degbound;";

const S4_COHOM: &str = "name S4_COHOM; grading cohomological;
gen alpha' 2; gen nu' 3; gen zeta1' 4; gen eta' 4;
rel 2alpha'; rel 2nu'; rel 4zeta1'; rel 3eta';
family alpha'*nu'^(2j) - alpha'^(j+1)*(zeta1'+alpha'^2)^j j>=1 degbound;";

const D8_COHOM: &str = "name D8_COHOM; grading cohomological;
gen alpha' 2; gen beta' 2; gen nu' 3; gen zeta1'' 4;
rel 2alpha'; rel 2beta'; rel 2nu'; rel 4zeta1'';
rel alpha'^2 - alpha'*beta'; rel nu'^2 - beta'*zeta1'';";

const FINAL: &str = "name FINAL; gen alpha 1; gen zeta1 2; gen zeta 1;
rel 2alpha; rel 4zeta1; rel 3zeta; rel alpha^2;";

const D8_P1_SUB: &str = "name D8_P1_SUB; gen xi 1; gen beta' 1; gen alpha' 1; gen zeta1'' 2;
rel 2alpha'; rel 2beta'; rel 4zeta1''; rel alpha'^2 - alpha'*beta'; rel xi^2 + beta'*xi;";

const D8_PT: &str = "name D8_PT; gen beta' 1; gen alpha' 1; gen zeta1'' 2;
rel 2alpha'; rel 2beta'; rel 4zeta1''; rel alpha'^2 - alpha'*beta';";

const P1: &str = "name P1; gen xi 1; rel xi^2;";

pub fn builtin(name: &str) -> Result<Presentation> {
    let text = |t: &str| Presentation::parse(t);
    match name {
        "PGL2_PT" => text(PGL2_PT),
        "S4_PT" => text(S4_PT),
        "S4_COHOM" => text(S4_COHOM),
        "D8_COHOM" => text(D8_COHOM),
        "FINAL" => text(FINAL),
        "D8_P1_SUB" => text(D8_P1_SUB),
        "D8_PT" => text(D8_PT),
        "P1" => text(P1),
        "S4_P1" => text(S4_PT)?.adjoin("S4_P1", &[("zeta", 1), ("c1V", 1), ("c2V", 2)], &["zeta^2 + c1V*zeta + c2V"]),
        "S4_P1_MINUS_F" => builtin("S4_P1")?.quotient_text("S4_P1_MINUS_F", &["3zeta", "3c1V"]),
        _ => Err(ChowError::UnknownName(name.to_string())),
    }
}

pub const MAP_NAMES: [&str; 6] = ["i*", "res", "phi*", "f1*", "f2*", "forget"];

/// Named maps: `i*` PGL2_PT → FINAL, `res` S4_PT → D8_COHOM (doubling degrees),
/// `phi*` S4_P1 → D8_P1_SUB, `f1*`/`f2*` D8_P1_SUB → D8_PT (restriction to the
/// two fixed points), `forget` D8_P1_SUB → P1.
pub fn builtin_map(name: &str) -> Result<RingMap> {
    let ident = [("beta'", "beta'"), ("alpha'", "alpha'"), ("zeta1''", "zeta1''")];
    match name {
        "i*" => RingMap::new(name, &builtin("PGL2_PT")?, &builtin("FINAL")?, &[("c2", "zeta1"), ("c3", "alpha*zeta1")], 1),
        "res" => RingMap::new(
            name,
            &builtin("S4_PT")?,
            &builtin("D8_COHOM")?,
            &[("alpha", "alpha'"), ("zeta1", "zeta1'' + beta'^2"), ("eta", "0"), ("nu", "nu'^2")],
            2,
        ),
        "phi*" => RingMap::new(
            name,
            &builtin("S4_P1")?,
            &builtin("D8_P1_SUB")?,
            &[
                ("alpha", "alpha'"),
                ("zeta1", "zeta1'' + beta'^2"),
                ("eta", "0"),
                ("nu", "beta'*zeta1''"),
                ("zeta", "xi"),
                ("c1V", "beta'"),
                ("c2V", "0"),
            ],
            1,
        ),
        "f1*" => {
            let mut imgs = vec![("xi", "-beta'")];
            imgs.extend(ident);
            RingMap::new(name, &builtin("D8_P1_SUB")?, &builtin("D8_PT")?, &imgs, 1)
        }
        "f2*" => {
            let mut imgs = vec![("xi", "0")];
            imgs.extend(ident);
            RingMap::new(name, &builtin("D8_P1_SUB")?, &builtin("D8_PT")?, &imgs, 1)
        }
        "forget" => RingMap::new(name, &builtin("D8_P1_SUB")?, &builtin("P1")?, &[("xi", "xi")], 1),
        _ => Err(ChowError::UnknownName(name.to_string())),
    }
}
