//! Cycle-template tables for the explicit permutation triples.
//!
//! Each family block is a list of symbolic transpositions over the indices
//! (i, j, k): a point template `j | i-form | k` stands for the 1-based point
//! `j*t + B*i + k` (form `I`) or `j*t + B*(blocks-1-i) + k` (form `Ci`),
//! where `B` is the block width and `blocks = t/B`. Tables expand over
//! `i = 0..blocks` at build time, so the construction lives in data the
//! certificates can vouch for rather than in loop code.

#[derive(Clone, Copy, Debug)]
pub(crate) enum Ix {
    I,
    Ci,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Pt {
    pub j: u8,
    pub ix: Ix,
    pub k: u8,
}

const fn p(j: u8, k: u8) -> Pt {
    Pt { j, ix: Ix::I, k }
}

const fn cp(j: u8, k: u8) -> Pt {
    Pt { j, ix: Ix::Ci, k }
}

/// Which generator carries the inter-block links and family boundary:
/// the other one is the plain within-block matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SpineRole {
    /// `b` is the full matching (1,2)(3,4)...; `c` carries (2,3)(4,5)...,
    /// the links and boundary.
    COdd,
    /// roles exchanged: `c` is the full matching, `b` carries the spine.
    BOdd,
}

pub(crate) struct FamilyTable {
    /// t = 2^(n - t_shift)
    pub t_shift: u32,
    /// number of j-blocks of size t
    pub nblocks: u8,
    /// points per i-cell (4, 8 or 16)
    pub width: u8,
    pub min_n: u32,
    pub spine: SpineRole,
    pub a_pairs: &'static [(Pt, Pt)],
    /// extra 1-based transpositions of the spine generator, as a function
    /// of t (block-boundary links between the j-blocks)
    pub boundary: fn(u64) -> Vec<(u64, u64)>,
}

pub(crate) static G1: FamilyTable = FamilyTable {
    t_shift: 3,
    nblocks: 2,
    width: 4,
    min_n: 7,
    spine: SpineRole::COdd,
    a_pairs: &[(p(0, 2), p(1, 2)), (p(0, 3), p(1, 3))],
    boundary: |_| Vec::new(),
};

pub(crate) static G2: FamilyTable = FamilyTable {
    t_shift: 4,
    nblocks: 4,
    width: 8,
    min_n: 7,
    spine: SpineRole::COdd,
    a_pairs: &[
        (p(1, 2), p(2, 2)),
        (p(0, 2), cp(2, 7)),
        (p(3, 2), cp(1, 7)),
        (p(0, 7), p(3, 7)),
        (p(1, 3), p(2, 3)),
        (p(0, 3), cp(2, 6)),
        (p(3, 3), cp(1, 6)),
        (p(0, 6), p(3, 6)),
        (p(0, 4), cp(1, 5)),
        (p(0, 5), cp(1, 4)),
        (p(2, 4), cp(3, 5)),
        (p(2, 5), cp(3, 4)),
    ],
    boundary: |t| vec![(t, t + 1), (3 * t, 3 * t + 1)],
};

pub(crate) static G4: FamilyTable = FamilyTable {
    t_shift: 5,
    nblocks: 8,
    width: 8,
    min_n: 8,
    spine: SpineRole::COdd,
    a_pairs: &[
        (p(0, 2), p(2, 2)),
        (p(1, 2), p(3, 2)),
        (p(4, 2), p(6, 2)),
        (p(5, 2), p(7, 2)),
        (p(0, 3), p(2, 3)),
        (p(1, 3), p(3, 3)),
        (p(4, 3), p(6, 3)),
        (p(5, 3), p(7, 3)),
        (p(0, 4), cp(7, 5)),
        (p(0, 5), cp(7, 4)),
        (p(2, 4), cp(3, 5)),
        (p(2, 5), cp(3, 4)),
        (p(6, 4), cp(1, 5)),
        (p(6, 5), cp(1, 4)),
        (p(4, 4), cp(5, 5)),
        (p(4, 5), cp(5, 4)),
        (p(0, 6), p(4, 6)),
        (p(1, 6), p(5, 6)),
        (p(2, 6), p(6, 6)),
        (p(3, 6), p(7, 6)),
        (p(0, 7), p(4, 7)),
        (p(1, 7), p(5, 7)),
        (p(2, 7), p(6, 7)),
        (p(3, 7), p(7, 7)),
    ],
    boundary: |t| {
        vec![
            (2 * t + 1, 4 * t + 1),
            (4 * t, 6 * t),
            (t, t + 1),
            (3 * t, 3 * t + 1),
            (5 * t, 5 * t + 1),
            (7 * t, 7 * t + 1),
        ]
    },
};

pub(crate) static G6: FamilyTable = FamilyTable {
    t_shift: 6,
    nblocks: 16,
    width: 8,
    min_n: 9,
    spine: SpineRole::COdd,
    a_pairs: &[
        (p(0, 2), p(2, 2)),
        (p(1, 2), p(3, 2)),
        (p(4, 2), p(7, 2)),
        (p(8, 2), p(11, 2)),
        (p(12, 2), p(14, 2)),
        (p(13, 2), p(15, 2)),
        (p(5, 2), cp(7, 7)),
        (p(6, 2), cp(2, 7)),
        (p(9, 2), cp(13, 7)),
        (p(10, 2), cp(8, 7)),
        (p(0, 7), p(4, 7)),
        (p(1, 7), p(5, 7)),
        (p(3, 7), p(6, 7)),
        (p(9, 7), p(12, 7)),
        (p(10, 7), p(14, 7)),
        (p(11, 7), p(15, 7)),
        (p(0, 3), p(2, 3)),
        (p(1, 3), p(3, 3)),
        (p(4, 3), p(7, 3)),
        (p(8, 3), p(11, 3)),
        (p(12, 3), p(14, 3)),
        (p(13, 3), p(15, 3)),
        (p(5, 3), cp(7, 6)),
        (p(6, 3), cp(2, 6)),
        (p(9, 3), cp(13, 6)),
        (p(10, 3), cp(8, 6)),
        (p(0, 6), p(4, 6)),
        (p(1, 6), p(5, 6)),
        (p(3, 6), p(6, 6)),
        (p(9, 6), p(12, 6)),
        (p(10, 6), p(14, 6)),
        (p(11, 6), p(15, 6)),
        (p(6, 4), p(8, 4)),
        (p(7, 4), p(9, 4)),
        (p(0, 4), cp(15, 5)),
        (p(1, 4), cp(14, 5)),
        (p(2, 4), cp(11, 5)),
        (p(3, 4), cp(10, 5)),
        (p(4, 4), cp(13, 5)),
        (p(5, 4), cp(12, 5)),
        (p(6, 5), p(8, 5)),
        (p(7, 5), p(9, 5)),
        (p(0, 5), cp(15, 4)),
        (p(1, 5), cp(14, 4)),
        (p(2, 5), cp(11, 4)),
        (p(3, 5), cp(10, 4)),
        (p(4, 5), cp(13, 4)),
        (p(5, 5), cp(12, 4)),
        (p(8, 1), cp(9, 8)),
        (p(9, 1), cp(8, 8)),
        (p(10, 1), cp(13, 8)),
        (p(11, 1), cp(12, 8)),
        (p(12, 1), cp(11, 8)),
        (p(13, 1), cp(10, 8)),
        (p(14, 1), cp(15, 8)),
        (p(15, 1), cp(14, 8)),
    ],
    boundary: |t| {
        let mut out = Vec::new();
        for i in 0..2u64 {
            let off = 8 * i * t;
            out.push((2 * t + off + 1, 4 * t + off + 1));
            out.push((4 * t + off, 6 * t + off));
        }
        for i in 0..8u64 {
            out.push(((2 * i + 1) * t, (2 * i + 1) * t + 1));
        }
        out
    },
};

pub(crate) static G7: FamilyTable = FamilyTable {
    // the only consistent block size: it makes the domain 2t = 2^(n-5)
    // points and the rotation bc a single cycle of order 2^(n-5), which the
    // rotation relator requires; t = 2^(n-5) would double both and break it
    t_shift: 6,
    nblocks: 2,
    width: 16,
    min_n: 10,
    spine: SpineRole::BOdd,
    a_pairs: &[
        (p(0, 5), p(1, 5)),
        (p(0, 6), p(1, 6)),
        (p(0, 7), p(1, 7)),
        (p(0, 8), p(1, 8)),
        (p(0, 9), p(1, 9)),
        (p(0, 10), p(1, 10)),
        (p(0, 11), p(1, 11)),
        (p(0, 12), p(1, 12)),
    ],
    boundary: |t| vec![(t, 2 * t)],
};

pub(crate) static G8: FamilyTable = FamilyTable {
    t_shift: 6,
    nblocks: 8,
    width: 16,
    min_n: 10,
    spine: SpineRole::BOdd,
    a_pairs: &[
        (p(0, 1), p(4, 1)),
        (p(1, 1), p(5, 1)),
        (p(2, 1), p(6, 1)),
        (p(3, 1), p(7, 1)),
        (p(0, 2), p(4, 2)),
        (p(1, 2), p(5, 2)),
        (p(2, 2), p(6, 2)),
        (p(3, 2), p(7, 2)),
        (p(1, 3), p(2, 3)),
        (p(5, 3), p(6, 3)),
        (p(0, 3), cp(4, 14)),
        (p(3, 3), cp(1, 14)),
        (p(4, 3), cp(6, 14)),
        (p(7, 3), cp(3, 14)),
        (p(0, 14), p(5, 14)),
        (p(2, 14), p(7, 14)),
        (p(1, 4), p(2, 4)),
        (p(5, 4), p(6, 4)),
        (p(0, 4), cp(4, 13)),
        (p(3, 4), cp(1, 13)),
        (p(4, 4), cp(6, 13)),
        (p(7, 4), cp(3, 13)),
        (p(0, 13), p(5, 13)),
        (p(2, 13), p(7, 13)),
        (p(1, 5), p(4, 5)),
        (p(3, 5), p(6, 5)),
        (p(0, 5), cp(2, 12)),
        (p(2, 5), cp(6, 12)),
        (p(5, 5), cp(1, 12)),
        (p(7, 5), cp(5, 12)),
        (p(0, 12), p(3, 12)),
        (p(4, 12), p(7, 12)),
        (p(1, 6), p(4, 6)),
        (p(3, 6), p(6, 6)),
        (p(0, 6), cp(2, 11)),
        (p(2, 6), cp(6, 11)),
        (p(5, 6), cp(1, 11)),
        (p(7, 6), cp(5, 11)),
        (p(0, 11), p(3, 11)),
        (p(4, 11), p(7, 11)),
        (p(0, 7), cp(5, 10)),
        (p(1, 7), cp(4, 10)),
        (p(2, 7), cp(1, 10)),
        (p(3, 7), cp(0, 10)),
        (p(4, 7), cp(7, 10)),
        (p(5, 7), cp(6, 10)),
        (p(6, 7), cp(3, 10)),
        (p(7, 7), cp(2, 10)),
        (p(0, 8), cp(5, 9)),
        (p(1, 8), cp(4, 9)),
        (p(2, 8), cp(1, 9)),
        (p(3, 8), cp(0, 9)),
        (p(4, 8), cp(7, 9)),
        (p(5, 8), cp(6, 9)),
        (p(6, 8), cp(3, 9)),
        (p(7, 8), cp(2, 9)),
        (p(0, 15), p(2, 15)),
        (p(1, 15), p(3, 15)),
        (p(4, 15), p(6, 15)),
        (p(5, 15), p(7, 15)),
        (p(0, 16), p(2, 16)),
        (p(1, 16), p(3, 16)),
        (p(4, 16), p(6, 16)),
        (p(5, 16), p(7, 16)),
    ],
    boundary: |t| {
        vec![
            (2 * t + 1, 4 * t + 1),
            (4 * t, 6 * t),
            (t, t + 1),
            (3 * t, 3 * t + 1),
            (5 * t, 5 * t + 1),
            (7 * t, 7 * t + 1),
        ]
    },
};
