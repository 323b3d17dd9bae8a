//! Explicit permutation triples for the families that come with one,
//! their labeled permutation representation graphs, DOT export and a
//! certification record assembling every claim made about a triple.

mod tables;

use serde::Serialize;
use thiserror::Error;

use crate::families::{build_g, FamilyError, FamilyId};
use crate::fp::{verify_images, FpError};
use crate::perm::{PermError, Permutation};
use crate::sggi::{make_sggi, SggiError};

use tables::{FamilyTable, Ix, Pt, SpineRole};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CprError {
    #[error("{family:?} has no permutation triple below n = {min_n}, got n = {n}")]
    ParameterBelowFloor {
        family: CprFamily,
        n: u32,
        min_n: u32,
    },
    #[error("DOT parse error at line {line}: {message}")]
    Dot { line: usize, message: String },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Sggi(#[from] SggiError),
}

/// Families with an explicit transcribed triple. G3 and G5 have none: their
/// proofs reuse the quotient construction instead of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CprFamily {
    G1,
    G2,
    G4,
    G6,
    G7,
    G8,
}

impl CprFamily {
    fn table(&self) -> &'static FamilyTable {
        match self {
            CprFamily::G1 => &tables::G1,
            CprFamily::G2 => &tables::G2,
            CprFamily::G4 => &tables::G4,
            CprFamily::G6 => &tables::G6,
            CprFamily::G7 => &tables::G7,
            CprFamily::G8 => &tables::G8,
        }
    }

    pub fn g_index(&self) -> u8 {
        match self {
            CprFamily::G1 => 1,
            CprFamily::G2 => 2,
            CprFamily::G4 => 4,
            CprFamily::G6 => 6,
            CprFamily::G7 => 7,
            CprFamily::G8 => 8,
        }
    }

    pub fn min_n(&self) -> u32 {
        self.table().min_n
    }
}

/// The transcribed triple (a, b, c) of involutions for one family instance;
/// (rho0, rho1, rho2) map to (a, b, c) in that order.
#[derive(Clone, Debug)]
pub struct CprTriple {
    pub a: Permutation,
    pub b: Permutation,
    pub c: Permutation,
    pub family: CprFamily,
    pub n: u32,
}

impl CprTriple {
    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn generators(&self) -> [Permutation; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// Expands the family's cycle templates at parameter `n`.
pub fn build_cpr(family: CprFamily, n: u32) -> Result<CprTriple, CprError> {
    let table = family.table();
    if n < table.min_n {
        return Err(CprError::ParameterBelowFloor {
            family,
            n,
            min_n: table.min_n,
        });
    }
    let t = 1u64 << (n - table.t_shift);
    let width = table.width as u64;
    let blocks = t / width;
    let degree = table.nblocks as u64 * t;

    // 1-based template expansion; the 0-based shift happens at the very end
    let point = |pt: Pt, i: u64| -> u64 {
        let cell = match pt.ix {
            Ix::I => i,
            Ix::Ci => blocks - 1 - i,
        };
        pt.j as u64 * t + width * cell + pt.k as u64
    };

    let mut a_pairs: Vec<(u64, u64)> = Vec::new();
    for i in 0..blocks {
        for &(u, v) in table.a_pairs {
            a_pairs.push((point(u, i), point(v, i)));
        }
    }

    // the full matching (1,2)(3,4)... within every cell
    let mut even_pairs: Vec<(u64, u64)> = Vec::new();
    // the offset matching (2,3)(4,5)... plus links and boundary
    let mut odd_pairs: Vec<(u64, u64)> = Vec::new();
    for j in 0..table.nblocks as u64 {
        for i in 0..blocks {
            let base = j * t + width * i;
            let mut k = 1;
            while k < width {
                even_pairs.push((base + k, base + k + 1));
                k += 2;
            }
            let mut k = 2;
            while k + 1 < width {
                odd_pairs.push((base + k, base + k + 1));
                k += 2;
            }
            if i + 1 < blocks {
                odd_pairs.push((base + width, base + width + 1));
            }
        }
    }
    odd_pairs.extend((table.boundary)(t));

    let to_perm = |pairs: &[(u64, u64)]| -> Result<Permutation, CprError> {
        let shifted: Vec<(u32, u32)> = pairs
            .iter()
            .map(|&(u, v)| ((u - 1) as u32, (v - 1) as u32))
            .collect();
        Ok(Permutation::from_transpositions(degree as usize, &shifted)?)
    };

    let a = to_perm(&a_pairs)?;
    let (b, c) = match table.spine {
        SpineRole::COdd => (to_perm(&even_pairs)?, to_perm(&odd_pairs)?),
        SpineRole::BOdd => (to_perm(&odd_pairs)?, to_perm(&even_pairs)?),
    };
    Ok(CprTriple { a, b, c, family, n })
}

/// Vertex set plus edge multiset labeled 0, 1, 2: one labeled edge per
/// transposed pair per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CprGraph {
    pub nvertices: usize,
    /// (u, v, label) with u < v, 0-based, sorted
    pub edges: Vec<(u32, u32, u8)>,
}

pub fn to_graph(triple: &CprTriple) -> CprGraph {
    let mut edges = Vec::new();
    for (label, gen) in [&triple.a, &triple.b, &triple.c].into_iter().enumerate() {
        for cycle in gen.cycles() {
            debug_assert_eq!(cycle.len(), 2, "generators are involutions");
            let (u, v) = (cycle[0].min(cycle[1]), cycle[0].max(cycle[1]));
            edges.push((u, v, label as u8));
        }
    }
    edges.sort_unstable();
    CprGraph {
        nvertices: triple.degree(),
        edges,
    }
}

/// Deterministic DOT text: an undirected graph with 1-based vertex names
/// and one `label` attribute per edge.
pub fn export_dot(graph: &CprGraph) -> String {
    let mut out = String::from("graph cpr {\n");
    for v in 1..=graph.nvertices {
        out.push_str(&format!("  v{v};\n"));
    }
    for &(u, v, label) in &graph.edges {
        out.push_str(&format!("  v{} -- v{} [label={}];\n", u + 1, v + 1, label));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT shape produced by [`export_dot`].
pub fn parse_dot(text: &str) -> Result<CprGraph, CprError> {
    let dot_err = |line: usize, message: &str| CprError::Dot {
        line,
        message: message.to_string(),
    };
    let parse_vertex = |tok: &str, lineno: usize| -> Result<u32, CprError> {
        tok.strip_prefix('v')
            .and_then(|d| d.parse::<u32>().ok())
            .filter(|&v| v >= 1)
            .ok_or_else(|| dot_err(lineno, "expected a vertex like v12"))
    };
    let mut nvertices = 0usize;
    let mut edges = Vec::new();
    let mut seen_header = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "}" {
            continue;
        }
        if !seen_header {
            if line.starts_with("graph") && line.ends_with('{') {
                seen_header = true;
                continue;
            }
            return Err(dot_err(lineno + 1, "expected 'graph <name> {'"));
        }
        let stmt = line
            .strip_suffix(';')
            .ok_or_else(|| dot_err(lineno + 1, "statements end with ';'"))?;
        if let Some((uv, attr)) = stmt.split_once("[label=") {
            let (u_tok, v_tok) = uv
                .split_once("--")
                .ok_or_else(|| dot_err(lineno + 1, "expected 'vU -- vV [label=L]'"))?;
            let u = parse_vertex(u_tok.trim(), lineno + 1)?;
            let v = parse_vertex(v_tok.trim(), lineno + 1)?;
            let label: u8 = attr
                .trim()
                .strip_suffix(']')
                .and_then(|l| l.trim().parse().ok())
                .ok_or_else(|| dot_err(lineno + 1, "expected a numeric label"))?;
            let (u, v) = (u - 1, v - 1);
            edges.push((u.min(v), u.max(v), label));
        } else {
            let v = parse_vertex(stmt.trim(), lineno + 1)?;
            nvertices = nvertices.max(v as usize);
        }
    }
    edges.sort_unstable();
    Ok(CprGraph { nvertices, edges })
}

/// Everything the construction asserts about one triple, assembled in a
/// single serializable record. Sub-check failures are recorded, not thrown.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub family: CprFamily,
    pub n: u32,
    pub degree: usize,
    pub relations_ok: bool,
    pub transitive: bool,
    pub stabilizer0_order: u64,
    pub order: u64,
    pub expected_order: u64,
    pub schlafli: (u64, u64),
    pub expected_schlafli: (u64, u64),
    pub intersection_ok: bool,
    pub passed: bool,
    pub notes: Vec<String>,
}

/// Runs every check the triple is supposed to satisfy against its family
/// presentation and collects the outcomes.
pub fn certify(triple: &CprTriple) -> Result<Certificate, CprError> {
    let mut notes = Vec::new();
    let family_id = FamilyId::G {
        i: triple.family.g_index(),
        n: triple.n,
    };
    let presentation = build_g(triple.family.g_index(), triple.n)?;
    let images = triple.generators();
    let relations_ok = verify_images(&presentation, &images)?;
    if !relations_ok {
        notes.push("one or more presentation relators do not evaluate to the identity".into());
    }

    let expected_order = family_id.expected_order().unwrap_or(0);
    let expected_schlafli = family_id.expected_type().unwrap_or((0, 0));

    // a triple that fails its relations generates some unrelated group,
    // possibly one far too large to measure; don't try
    let (order, transitive, stabilizer0_order, schlafli, intersection_ok) = if !relations_ok {
        notes.push("group-level checks skipped: the triple does not satisfy the relators".into());
        (0, false, 0, (0, 0), false)
    } else {
        match make_sggi(images) {
            Ok(s) => {
                let order = s.order()?;
                let ty = s.schlafli_type();
                let intersection_ok = match s.check_intersection_property() {
                    Ok(v) => v,
                    Err(e) => {
                        notes.push(format!("intersection check failed to run: {e}"));
                        false
                    }
                };
                (
                    order,
                    s.group().is_transitive()?,
                    s.group().stabilizer_order(0)?,
                    (ty.p1, ty.p2),
                    intersection_ok,
                )
            }
            Err(e) => {
                notes.push(format!("triple is not a valid string group: {e}"));
                (0, false, 0, (0, 0), false)
            }
        }
    };

    if triple.family == CprFamily::G7 {
        notes.push(
            "G7 blocks use t = 2^(n-6), giving a 2^(n-5)-point domain and rotation order \
             2^(n-5); the alternative block size t = 2^(n-5) breaks the rotation relator"
                .into(),
        );
    }

    let passed = relations_ok
        && transitive
        && order == expected_order
        && schlafli == expected_schlafli
        && intersection_ok;
    Ok(Certificate {
        family: triple.family,
        n: triple.n,
        degree: triple.degree(),
        relations_ok,
        transitive,
        stabilizer0_order,
        order,
        expected_order,
        schlafli,
        expected_schlafli,
        intersection_ok,
        passed,
        notes,
    })
}

#[cfg(test)]
mod tests;
