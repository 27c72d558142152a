//! Builtin diagrams with expected values: the regression anchor set.
//!
//! All fixtures use the default parameters N=6, t=1, H=<2>, c=2, g=1. The
//! negatively curled unknot (`cp2`) calibrates the crossing-sign
//! convention; every other anchor must then pass unchanged.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::CycloNumber;
use crate::diagram::{parse, Diagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
}

/// A named diagram with optional expected raw evaluation and expected
/// normalized value; the note records where each expectation comes from.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub text: String,
    pub expected_raw: Option<CycloNumber>,
    pub expected_value: Option<CycloNumber>,
    pub note: String,
}

impl Fixture {
    pub fn diagram(&self) -> Result<Diagram, Vec<crate::diagram::ParseError>> {
        parse(&self.text)
    }
}

const N: u32 = 6;

fn zeta(k: i64) -> CycloNumber {
    CycloNumber::zeta_pow(N, k)
}

fn int(v: i64) -> CycloNumber {
    CycloNumber::from_integer(N, v)
}

fn ratio(p: i64, q: i64) -> CycloNumber {
    CycloNumber::from_rational(N, BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// 1 + 2 zeta^2, the curl anchor value (equals sqrt(3) i).
fn sqrt3i() -> CycloNumber {
    int(1).add(&zeta(2).scale(&BigRational::from_integer(BigInt::from(2))))
}

fn kirby_header() -> String {
    "category N=6 t=1 H=2\n".to_string()
}

fn surface_header() -> String {
    "category N=6 t=1 H=2\nfrobenius c=2\nmodule g=1\n".to_string()
}

fn fixture_names() -> Vec<String> {
    let mut names = vec![
        "empty".to_string(),
        "cp2".to_string(),
        "cp2_bar".to_string(),
        "s2xc".to_string(),
        "torus".to_string(),
        "spun_trefoil".to_string(),
        "hopf_stab".to_string(),
        "blank_stab".to_string(),
    ];
    for n in 1..=3 {
        names.push(format!("unknot_sf_{n}"));
    }
    for n in 0..=5 {
        names.push(format!("ne{n}"));
    }
    for x in 0..=5 {
        names.push(format!("encircle_{x}"));
    }
    names
}

/// Names of every builtin fixture.
pub fn list() -> Vec<String> {
    fixture_names()
}

/// Look up a builtin fixture by name.
pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    let mk = |text: String, raw: Option<CycloNumber>, value: Option<CycloNumber>, note: &str| {
        Ok(Fixture {
            name: name.to_string(),
            text,
            expected_raw: raw,
            expected_value: value,
            note: note.to_string(),
        })
    };
    match name {
        "empty" => mk(
            format!("{}diagram\nend\n", surface_header()),
            Some(int(1)),
            Some(int(1)),
            "the empty diagram evaluates to 1 by definition; presents the 4-sphere",
        ),
        "cp2" => mk(
            format!("{}diagram\ncup:h2\n/-\ncap\nend\n", kirby_header()),
            Some(sqrt3i()),
            Some(sqrt3i()),
            "negatively curled unknot; closed-form Gauss sum 1 + 2 zeta^2 = sqrt(3) i; \
             framing -1 so the normalization is 1; calibrates the crossing convention",
        ),
        "cp2_bar" => mk(
            format!("{}diagram\ncup:h2\n/+\ncap\nend\n", kirby_header()),
            Some(sqrt3i().conj()),
            Some(sqrt3i().conj().scale(&BigRational::new(BigInt::from(1), BigInt::from(6)))),
            "mirror of cp2; raw value is the complex conjugate; normalized value divides \
             by Delta_C * Delta'' = 6 for the positive eigenvalue (computed normalization; \
             see the invariant module warnings)",
        ),
        "s2xc" => mk(
            format!(
                "{}diagram\ncup:h2\ncup:sf | |\n| /- |\n| /- |\npac | |\npac\nend\n",
                surface_header()
            ),
            Some(int(3)),
            Some(int(1)),
            "0-framed 2-handle Hopf-linked with a bandless surface circle; \
             Gauss sum gives 3, one zero eigenvalue divides by Delta_B = 3",
        ),
        "torus" => mk(
            format!(
                "{}diagram\ncup:sf\n| coa\n| | coa\n| /- |\ndact | |\ndact |\npac\nend\n",
                surface_header()
            ),
            Some(int(2)),
            Some(ratio(1, 2)),
            "standard torus: one unlink circle with two interleaved self-bands; \
             raw contraction gives 2, divided by k^2 = 4 for the two self-bands",
        ),
        "spun_trefoil" => mk(
            format!(
                "{}diagram\ncup:sf\n| | cup:sf\n| | | coa\n| | /+ |\n| /- | |\ndact | | |\npac | |\npac\nend\n",
                surface_header()
            ),
            Some(int(2)),
            Some(int(1)),
            "one-fusion presentation: two unlink circles joined by a band that passes \
             through both rings; the closure pins the band to its degree-zero part, \
             so the contraction gives 2, divided by kappa = 2 for the other-band",
        ),
        "hopf_stab" => mk(
            format!(
                "{}diagram\ncup:h2\n| cup:h1 |\n| | /-\n| /+ |\npac | |\npac\nend\n",
                kirby_header()
            ),
            Some(int(6)),
            Some(int(1)),
            "dotted Hopf stabilization: evaluates to Delta_C * Delta'' = 6 by the \
             encirclement identity and adds one positive eigenvalue",
        ),
        "blank_stab" => mk(
            format!("{}diagram\ncup:h2\npac\nend\n", kirby_header()),
            Some(int(3)),
            Some(int(1)),
            "blank stabilization: a split 0-framed 2-handle circle multiplies the \
             evaluation by Delta_B = 3 and adds one zero eigenvalue",
        ),
        _ => {
            if let Some(n) = name.strip_prefix("unknot_sf_").and_then(|s| s.parse::<u32>().ok()) {
                if (1..=3).contains(&n) {
                    let mut body = String::new();
                    for _ in 0..n {
                        body.push_str("cup:sf\npac\n");
                    }
                    return mk(
                        format!("{}diagram\n{body}end\n", surface_header()),
                        Some(int(2i64.pow(n))),
                        Some(int(2i64.pow(n))),
                        "bandless unlink of surface circles; each circle contributes \
                         the module dimension 2",
                    );
                }
            }
            if let Some(n) = name.strip_prefix("ne").and_then(|s| s.parse::<u32>().ok()) {
                if n <= 5 {
                    let mut body = String::from("cup:h2\ntw- |\n| cup:sf |\n");
                    for _ in 0..(2 * n) {
                        body.push_str("| | /-\n");
                    }
                    body.push_str("| pac |\npac\n");
                    let raw = if n % 3 == 0 {
                        sqrt3i().scale(&BigRational::from_integer(BigInt::from(2)))
                    } else {
                        int(1).add(&zeta(1))
                    };
                    return mk(
                        format!("{}diagram\n{body}end\n", surface_header()),
                        Some(raw.clone()),
                        Some(raw),
                        "bandless surface circle linking a (-1)-framed 2-handle n times; \
                         a sum of two quadratic Gauss sums: 2(1 + 2 zeta^2) when 3 | n, \
                         else 1 + zeta; all normalization factors are 1",
                    );
                }
            }
            if let Some(x) = name.strip_prefix("encircle_").and_then(|s| s.parse::<u32>().ok()) {
                if x <= 5 {
                    let raw = if x % 3 == 0 { int(6) } else { int(0) };
                    let value = if x % 3 == 0 { int(2) } else { int(0) };
                    return mk(
                        format!(
                            "{}diagram\ncup:h1\ncup:g{x} | |\n| /- |\n| /- |\npac | |\npac\nend\n",
                            kirby_header()
                        ),
                        Some(raw),
                        Some(value),
                        "simple strand of degree x encircled by a 0-framed dotted circle; \
                         the encirclement identity gives Delta_C on transparent degrees \
                         (x in {0, 3}) and 0 otherwise",
                    );
                }
            }
            Err(FixtureError::Unknown(name.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{serialize, validate};

    #[test]
    fn all_fixtures_parse_validate_and_round_trip() {
        for name in list() {
            let f = fixture(&name).unwrap();
            let d = f
                .diagram()
                .unwrap_or_else(|e| panic!("fixture {name} failed to parse: {e:?}"));
            let report = validate(&d).unwrap();
            assert!(report.is_ok(), "fixture {name}: {report:?}");
            let text = serialize(&d);
            let d2 = parse(&text).unwrap();
            assert_eq!(d, d2, "round trip failed for {name}");
        }
    }

    #[test]
    fn unknown_fixture_errors() {
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn cp2_text_is_the_pinned_form() {
        let f = fixture("cp2").unwrap();
        assert_eq!(
            f.text,
            "category N=6 t=1 H=2\ndiagram\ncup:h2\n/-\ncap\nend\n"
        );
    }
}
