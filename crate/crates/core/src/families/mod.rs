//! Exact constructors for every presentation family in scope, with
//! parameter validation mirroring each family's hypotheses.
//!
//! Relators are written in the text grammar and instantiated with computed
//! integer exponents, so every builder reads as the formula it implements.
//! Exponent-one relators are kept rather than dropped.

use std::fmt;

use thiserror::Error;

use crate::fp::{parse_relator, FpError, Presentation, Word};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {message}")]
    Constraint { family: String, message: String },
    #[error("cannot parse family spec '{spec}': {message}")]
    BadSpec { spec: String, message: String },
    #[error(transparent)]
    Fp(#[from] FpError),
}

fn constraint(family: impl fmt::Display, message: impl Into<String>) -> FamilyError {
    FamilyError::Constraint {
        family: family.to_string(),
        message: message.into(),
    }
}

/// Bracket expansion convention for the one seven-entry bracket relator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketConvention {
    LeftNormed,
    RightNormed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sporadic {
    S8a,
    S8b,
    S9a,
    S9b,
}

/// A family tag with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    H { n: u32, s: u32, t: u32 },
    G { i: u8, n: u32 },
    L1,
    L { i: u8, t: u32 },
    M { i: u8, b: u32 },
    Sporadic(Sporadic),
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::H { n, s, t } => write!(f, "H:n={n},s={s},t={t}"),
            FamilyId::G { i, n } => write!(f, "G{i}:n={n}"),
            FamilyId::L1 => write!(f, "L1"),
            FamilyId::L { i, t } => write!(f, "L{i}:t={t}"),
            FamilyId::M { i, b } => write!(f, "M{i}:b={b}"),
            FamilyId::Sporadic(Sporadic::S8a) => write!(f, "S8a"),
            FamilyId::Sporadic(Sporadic::S8b) => write!(f, "S8b"),
            FamilyId::Sporadic(Sporadic::S9a) => write!(f, "S9a"),
            FamilyId::Sporadic(Sporadic::S9b) => write!(f, "S9b"),
        }
    }
}

impl std::str::FromStr for FamilyId {
    type Err = FamilyError;

    /// Parses the CLI spec syntax: `G1:n=10`, `H:n=12,s=3,t=4`, `M2:b=3`,
    /// `L2:t=5`, `L1`, `S9b`.
    fn from_str(spec: &str) -> Result<FamilyId, FamilyError> {
        let bad = |message: &str| FamilyError::BadSpec {
            spec: spec.to_string(),
            message: message.to_string(),
        };
        let (tag, args) = match spec.split_once(':') {
            Some((tag, args)) => (tag.trim(), Some(args)),
            None => (spec.trim(), None),
        };
        let mut params = std::collections::BTreeMap::new();
        if let Some(args) = args {
            for item in args.split(',') {
                let (k, v) = item
                    .split_once('=')
                    .ok_or_else(|| bad("parameters look like key=value"))?;
                let v: u32 = v
                    .trim()
                    .parse()
                    .map_err(|_| bad("parameter values are nonnegative integers"))?;
                params.insert(k.trim().to_string(), v);
            }
        }
        let get = |k: &str| params.get(k).copied().ok_or_else(|| bad(&format!("missing parameter {k}")));
        let id = match tag {
            "H" => FamilyId::H {
                n: get("n")?,
                s: get("s")?,
                t: get("t")?,
            },
            "L1" => FamilyId::L1,
            "L2" => FamilyId::L { i: 2, t: get("t")? },
            "L3" => FamilyId::L { i: 3, t: get("t")? },
            "M1" => FamilyId::M { i: 1, b: get("b")? },
            "M2" => FamilyId::M { i: 2, b: get("b")? },
            "S8a" => FamilyId::Sporadic(Sporadic::S8a),
            "S8b" => FamilyId::Sporadic(Sporadic::S8b),
            "S9a" => FamilyId::Sporadic(Sporadic::S9a),
            "S9b" => FamilyId::Sporadic(Sporadic::S9b),
            g if g.len() == 2 && g.starts_with('G') => {
                let i: u8 = g[1..].parse().map_err(|_| bad("unknown family tag"))?;
                if !(1..=8).contains(&i) {
                    return Err(bad("G families are G1 through G8"));
                }
                FamilyId::G { i, n: get("n")? }
            }
            _ => return Err(bad("unknown family tag")),
        };
        Ok(id)
    }
}

impl FamilyId {
    pub fn build(&self) -> Result<Presentation, FamilyError> {
        match *self {
            FamilyId::H { n, s, t } => build_h(n, s, t),
            FamilyId::G { i, n } => build_g(i, n),
            FamilyId::L1 => build_l1(),
            FamilyId::L { i, t } => build_l(i, t),
            FamilyId::M { i, b } => build_m(i, b),
            FamilyId::Sporadic(which) => Ok(build_sporadic(which)),
        }
    }

    /// The order the family's defining law predicts, when one is known.
    pub fn expected_order(&self) -> Option<u64> {
        match *self {
            FamilyId::H { n, .. } | FamilyId::G { n, .. } => Some(1u64 << n),
            FamilyId::L1 => Some(16),
            FamilyId::L { t, .. } => Some(1u64 << (t + 2)),
            FamilyId::M { i: 1, b } => Some(16 * b as u64 * b as u64),
            FamilyId::M { i: 2, b } => Some(8 * b as u64 * b as u64),
            FamilyId::M { .. } => None,
            FamilyId::Sporadic(Sporadic::S8a | Sporadic::S8b) => Some(256),
            FamilyId::Sporadic(Sporadic::S9a | Sporadic::S9b) => Some(512),
        }
    }

    /// The Schläfli type the family's defining law predicts.
    pub fn expected_type(&self) -> Option<(u64, u64)> {
        match *self {
            FamilyId::H { s, t, .. } => Some((1u64 << s, 1u64 << t)),
            FamilyId::G { i: 1 | 2, n } => Some((4, 1u64 << (n - 3))),
            FamilyId::G { i: 3 | 4, n } => Some((4, 1u64 << (n - 4))),
            FamilyId::G { i: 5..=8, n } => Some((4, 1u64 << (n - 5))),
            FamilyId::G { .. } => None,
            FamilyId::L1 => Some((4, 2)),
            FamilyId::L { i: 2, t } => Some((2, 1u64 << t)),
            FamilyId::L { i: 3, t } => Some((1u64 << t, 2)),
            FamilyId::L { .. } => None,
            FamilyId::M { .. } => Some((4, 4)),
            FamilyId::Sporadic(Sporadic::S8a | Sporadic::S8b) => Some((4, 8)),
            FamilyId::Sporadic(Sporadic::S9a | Sporadic::S9b) => Some((4, 16)),
        }
    }

    /// Whether the family instance is a string C-group. Everything in
    /// scope is, except M1 and M2 at b = 1: there the two maximal dihedral
    /// subgroups are too large relative to the group and must overlap in
    /// more than `<rho1>` (for M1(1), |A| = |B| = 8 inside order 16 forces
    /// |A meet B| >= 4). The order and rotation-order laws still hold.
    pub fn expected_c_group(&self) -> bool {
        !matches!(*self, FamilyId::M { b: 1, .. })
    }

    /// A short identifier for the law behind [`Self::expected_order`],
    /// reported alongside verdicts.
    pub fn expected_source(&self) -> &'static str {
        match self {
            FamilyId::H { .. } => "order 2^n, type {2^s,2^t}",
            FamilyId::G { i: 1 | 2, .. } => "order 2^n, type {4,2^(n-3)}",
            FamilyId::G { i: 3 | 4, .. } => "order 2^n, type {4,2^(n-4)}",
            FamilyId::G { .. } => "order 2^n, type {4,2^(n-5)}",
            FamilyId::L1 => "order 16, type {4,2}",
            FamilyId::L { i: 2, .. } => "order 2^(t+2), type {2,2^t}",
            FamilyId::L { .. } => "order 2^(t+2), type {2^t,2}",
            FamilyId::M { i: 1, .. } => "order 16b^2, type {4,4}",
            FamilyId::M { .. } => "order 8b^2, type {4,4}",
            FamilyId::Sporadic(Sporadic::S8a | Sporadic::S8b) => "order 256, type {4,8}",
            FamilyId::Sporadic(_) => "order 512, type {4,16}",
        }
    }
}

const FLAGS: [bool; 3] = [true; 3];

fn rel(text: &str) -> Word {
    parse_relator(text, 3, &FLAGS).expect("builder relator templates are well-formed")
}

fn presentation(relators: Vec<Word>) -> Presentation {
    let mut all = vec![rel("r0^2"), rel("r1^2"), rel("r2^2")];
    all.extend(relators);
    Presentation::new(3, FLAGS.to_vec(), all).expect("three generators")
}

/// `H(n, s, t)`: the eight base relators plus a ninth depending on the
/// parity of n-s-t. Hypotheses: s, t >= 2, s+t <= n-1, n >= 10.
pub fn build_h(n: u32, s: u32, t: u32) -> Result<Presentation, FamilyError> {
    if n < 10 {
        return Err(constraint(
            format!("H:n={n},s={s},t={t}"),
            "requires n >= 10 (build_h_relaxed lifts the floor)",
        ));
    }
    build_h_relaxed(n, s, t)
}

/// `H(n, s, t)` without the n >= 10 floor; still requires s, t >= 2 and
/// s+t <= n-1 so every exponent stays a positive integer.
pub fn build_h_relaxed(n: u32, s: u32, t: u32) -> Result<Presentation, FamilyError> {
    let name = format!("H:n={n},s={s},t={t}");
    if s < 2 || t < 2 {
        return Err(constraint(name, "requires s >= 2 and t >= 2"));
    }
    if s + t > n - 1 {
        return Err(constraint(name, "requires s + t <= n - 1"));
    }
    let mut relators = vec![
        rel(&format!("(r0*r1)^{}", 1u64 << s)),
        rel(&format!("(r1*r2)^{}", 1u64 << t)),
        rel("(r0*r2)^2"),
        rel("[(r0*r1)^4,r2]"),
        rel("[r0,(r1*r2)^4]"),
    ];
    let excess = n - s - t;
    if excess % 2 == 1 {
        relators.push(rel(&format!("[(r0*r1)^2,r2]^{}", 1u64 << ((excess - 1) / 2))));
    } else {
        relators.push(rel(&format!(
            "[(r0*r1)^2,(r1*r2)^2]^{}",
            1u64 << ((excess - 2) / 2)
        )));
    }
    Ok(presentation(relators))
}

/// `G_i(n)` for i = 1..8: the classification presentations. Floors keep
/// every exponent nonnegative and the rotation order at least 4:
/// G1, G2 need n >= 5; G3, G4 need n >= 6; G5..G8 need n >= 7.
pub fn build_g(i: u8, n: u32) -> Result<Presentation, FamilyError> {
    let name = format!("G{i}:n={n}");
    let floor = match i {
        1 | 2 => 5,
        3 | 4 => 6,
        5..=8 => 7,
        _ => return Err(constraint(name, "G families are G1 through G8")),
    };
    if n < floor {
        return Err(constraint(name, format!("requires n >= {floor}")));
    }
    let rot = |k: u32| 1u64 << (n - k);
    let relators = match i {
        1 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(3))),
            rel("(r0*r2)^2"),
            rel("[(r0*r1)^2,r2]"),
        ],
        2 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(3))),
            rel("(r0*r2)^2"),
            rel(&format!("[(r0*r1)^2,r2]*(r1*r2)^{}", rot(4))),
        ],
        3 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(4))),
            rel("(r0*r2)^2"),
            rel("[(r0*r1)^2,(r1*r2)^2]"),
        ],
        4 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(4))),
            rel("(r0*r2)^2"),
            rel(&format!("[(r0*r1)^2,(r1*r2)^2]*(r1*r2)^{}", rot(5))),
        ],
        5 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(5))),
            rel("(r0*r2)^2"),
            rel("[r0,(r1*r2)^2]^2"),
            rel("[r0,(r1*r2)^4]"),
        ],
        6 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(5))),
            rel("(r0*r2)^2"),
            rel(&format!("[r0,(r1*r2)^2]^2*(r1*r2)^{}", rot(6))),
            rel("[r0,(r1*r2)^4]"),
        ],
        7 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(5))),
            rel("(r0*r2)^2"),
            rel("[r0,(r1*r2)^2]^2"),
            rel(&format!("[r0,(r1*r2)^4]*(r1*r2)^{}", rot(6))),
        ],
        8 => vec![
            rel("(r0*r1)^4"),
            rel(&format!("(r1*r2)^{}", rot(5))),
            rel("(r0*r2)^2"),
            rel(&format!("[r0,(r1*r2)^2]^2*(r1*r2)^{}", rot(6))),
            rel(&format!("[r0,(r1*r2)^4]*(r1*r2)^{}", rot(6))),
        ],
        _ => unreachable!(),
    };
    Ok(presentation(relators))
}

/// `L1`: the one degenerate family with no parameter; order 16.
pub fn build_l1() -> Result<Presentation, FamilyError> {
    Ok(presentation(vec![
        rel("(r0*r1)^4"),
        rel("(r1*r2)^2"),
        rel("(r0*r2)^2"),
    ]))
}

/// `L2(t)` and `L3(t)` for t >= 1: degenerate families of order 2^(t+2).
pub fn build_l(i: u8, t: u32) -> Result<Presentation, FamilyError> {
    let name = format!("L{i}:t={t}");
    if t < 1 {
        return Err(constraint(name.clone(), "requires t >= 1"));
    }
    match i {
        2 => Ok(presentation(vec![
            rel("(r0*r1)^2"),
            rel(&format!("(r1*r2)^{}", 1u64 << t)),
            rel("(r0*r2)^2"),
        ])),
        3 => Ok(presentation(vec![
            rel(&format!("(r0*r1)^{}", 1u64 << t)),
            rel("(r1*r2)^2"),
            rel("(r0*r2)^2"),
        ])),
        _ => Err(constraint(name, "parametrized L families are L2 and L3")),
    }
}

/// `M1(b)` and `M2(b)` for b >= 1: the type-{4,4} families of orders
/// 16b^2 and 8b^2.
pub fn build_m(i: u8, b: u32) -> Result<Presentation, FamilyError> {
    let name = format!("M{i}:b={b}");
    if b < 1 {
        return Err(constraint(name.clone(), "requires b >= 1"));
    }
    let common = vec![rel("(r0*r1)^4"), rel("(r1*r2)^4"), rel("(r0*r2)^2")];
    match i {
        1 => {
            let mut relators = common;
            relators.push(rel(&format!("(r2*r1*r0)^{}", 2 * b)));
            Ok(presentation(relators))
        }
        2 => {
            let mut relators = common;
            relators.push(rel(&format!("(r1*r2*r1*r0)^{b}")));
            Ok(presentation(relators))
        }
        _ => Err(constraint(name, "M families are M1 and M2")),
    }
}

/// The four sporadic presentations: the two extra groups at order 2^8 with
/// type {4,8} and the two extra groups at order 2^9 with type {4,16}.
/// S9b's seven-entry bracket defaults to the left-normed expansion.
pub fn build_sporadic(which: Sporadic) -> Presentation {
    match which {
        Sporadic::S8a => presentation(vec![
            rel("(r0*r1)^4"),
            rel("(r1*r2)^8"),
            rel("(r0*r2)^2"),
            rel("[(r0*r1)^2,(r1*r2)^2]*(r1*r2)^4"),
        ]),
        Sporadic::S8b => presentation(vec![
            rel("(r0*r1)^4"),
            rel("(r1*r2)^8"),
            rel("(r0*r2)^2"),
            rel("[((r1*r2)^2)^r0,r1*r2]*(r1*r2)^4"),
        ]),
        Sporadic::S9a => presentation(vec![
            rel("(r0*r1)^4"),
            rel("(r1*r2)^16"),
            rel("(r0*r2)^2"),
            rel("[(r0*r1)^2,(r1*r2)^2]*(r1*r2)^4"),
        ]),
        Sporadic::S9b => build_s9b(BracketConvention::LeftNormed),
    }
}

/// S9b with an explicit bracket convention; the right-normed expansion is
/// the designated fallback if the default fails its certification.
pub fn build_s9b(convention: BracketConvention) -> Presentation {
    let bracket = match convention {
        BracketConvention::LeftNormed => "[r1,r0,r2,r1,r0,r1,r0]",
        BracketConvention::RightNormed => "[r1,[r0,[r2,[r1,[r0,[r1,r0]]]]]]",
    };
    presentation(vec![
        rel("(r0*r1)^4"),
        rel("(r1*r2)^16"),
        rel("(r0*r2)^2"),
        rel("[(r0*r1)^2,(r1*r2)^2]*(r2*r1)^4"),
        rel(bracket),
    ])
}

#[cfg(test)]
mod tests;
