//! HLT-style Todd-Coxeter coset enumeration with immediate coincidence
//! processing over a union-find on coset ids.
//!
//! Involution generators get a single table column that serves as its own
//! inverse, so all-involution presentations use `ngens` columns. Scanning
//! is strictly deterministic: cosets in definition order, relators in list
//! order, subgroup words first. Coincidences always keep the
//! lowest-numbered representative, and the completed table is compacted to
//! a dense renumbering in survivor order, so identical inputs produce
//! identical tables.

use crate::perm::Permutation;

use super::{FpError, Presentation, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableStatus {
    Complete,
    Aborted { live: usize, defined: usize },
}

/// A completed coset table: one row per coset, one column per generator
/// letter, row 0 the subgroup coset.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetTable {
    presentation: Presentation,
    ncols: usize,
    fwd_col: Vec<usize>,
    inv_col_of_gen: Vec<usize>,
    table: Vec<u32>,
    nrows: usize,
    status: TableStatus,
}

impl CosetTable {
    pub fn status(&self) -> TableStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == TableStatus::Complete
    }

    /// Live coset count; for an enumeration over the trivial subgroup this
    /// is the group order.
    pub fn num_cosets(&self) -> usize {
        self.nrows
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Image of a coset under a generator (or its inverse).
    pub fn action(&self, coset: u32, gen: usize, inverse: bool) -> u32 {
        let col = if inverse {
            self.inv_col_of_gen[gen]
        } else {
            self.fwd_col[gen]
        };
        self.table[coset as usize * self.ncols + col]
    }

    /// One permutation per generator, acting on cosets. Relators are
    /// re-checked to evaluate to the identity so the extracted images are a
    /// genuine homomorphic image of the presented group.
    pub fn permutation_representation(&self) -> Result<Vec<Permutation>, FpError> {
        if !self.is_complete() {
            return Err(FpError::IncompleteTable);
        }
        let mut perms = Vec::with_capacity(self.presentation.ngens());
        for gen in 0..self.presentation.ngens() {
            let images = (0..self.nrows as u32)
                .map(|row| self.action(row, gen, false))
                .collect();
            perms.push(Permutation::from_images(images)?);
        }
        for relator in self.presentation.relators() {
            if !relator.evaluate(&perms, self.nrows)?.is_identity() {
                // a complete table always closes its relators; reaching this
                // is an enumerator bug, not a caller error
                unreachable!("relator {relator} does not close on a complete table");
            }
        }
        Ok(perms)
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `p`. Fails once more than `max_cosets` cosets have
/// been defined.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, FpError> {
    for w in subgroup {
        if let Some(g) = w.max_generator() {
            if g >= p.ngens() {
                return Err(FpError::GeneratorOutOfRange {
                    gen: g,
                    ngens: p.ngens(),
                });
            }
        }
    }
    let mut e = Enumerator::new(p, max_cosets);
    let subgroup_cols: Vec<Vec<u32>> = subgroup.iter().map(|w| e.word_cols(w)).collect();
    let relator_cols: Vec<Vec<u32>> = p.relators().iter().map(|w| e.word_cols(w)).collect();

    e.define_first()?;
    for w in &subgroup_cols {
        e.scan_and_fill(0, w)?;
    }
    let mut alpha: u32 = 0;
    while (alpha as usize) < e.nalloc() {
        if e.is_live(alpha) {
            for w in &relator_cols {
                e.scan_and_fill(alpha, w)?;
                if !e.is_live(alpha) {
                    break;
                }
            }
            // relators normally force every column; generators that appear
            // in no relator still need their entries defined
            if e.is_live(alpha) {
                e.fill_row(alpha)?;
            }
        }
        alpha += 1;
    }
    let table = e.compact(p.clone());
    debug_assert!(verify_closure(&table, subgroup), "incomplete closure");
    Ok(table)
}

/// Full closure check: every entry defined, every column a bijection, every
/// relator closing from every coset and every subgroup word from coset 0.
fn verify_closure(t: &CosetTable, subgroup: &[Word]) -> bool {
    let trace = |start: u32, w: &Word| -> u32 {
        let mut c = start;
        for l in w.letters() {
            c = t.action(c, l.gen, l.inverse);
        }
        c
    };
    for gen in 0..t.presentation.ngens() {
        let mut seen = vec![false; t.nrows];
        for row in 0..t.nrows as u32 {
            let img = t.action(row, gen, false);
            if img == UNDEF || seen[img as usize] {
                return false;
            }
            seen[img as usize] = true;
        }
    }
    for w in t.presentation.relators() {
        for row in 0..t.nrows as u32 {
            if trace(row, w) != row {
                return false;
            }
        }
    }
    subgroup.iter().all(|w| trace(0, w) == 0)
}

struct Enumerator {
    ncols: usize,
    fwd_col: Vec<usize>,
    inv_col_of_gen: Vec<usize>,
    col_inverse: Vec<usize>,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
}

impl Enumerator {
    fn new(p: &Presentation, max_cosets: usize) -> Enumerator {
        let mut fwd_col = Vec::with_capacity(p.ngens());
        let mut inv_col_of_gen = Vec::with_capacity(p.ngens());
        let mut col_inverse = Vec::new();
        for g in 0..p.ngens() {
            let fwd = col_inverse.len();
            fwd_col.push(fwd);
            if p.involution_flags()[g] {
                inv_col_of_gen.push(fwd);
                col_inverse.push(fwd);
            } else {
                inv_col_of_gen.push(fwd + 1);
                col_inverse.push(fwd + 1);
                col_inverse.push(fwd);
            }
        }
        Enumerator {
            ncols: col_inverse.len(),
            fwd_col,
            inv_col_of_gen,
            col_inverse,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            max_cosets,
        }
    }

    fn word_cols(&self, w: &Word) -> Vec<u32> {
        w.letters()
            .iter()
            .map(|l| {
                if l.inverse {
                    self.inv_col_of_gen[l.gen] as u32
                } else {
                    self.fwd_col[l.gen] as u32
                }
            })
            .collect()
    }

    fn nalloc(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let grand = self.parent[self.parent[c as usize] as usize];
            self.parent[c as usize] = grand;
            c = grand;
        }
        c
    }

    fn entry(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    fn set_entry(&mut self, c: u32, col: u32, value: u32) {
        self.table[c as usize * self.ncols + col as usize] = value;
    }

    fn define_first(&mut self) -> Result<(), FpError> {
        self.new_coset()?;
        Ok(())
    }

    fn new_coset(&mut self) -> Result<u32, FpError> {
        if self.nalloc() >= self.max_cosets {
            return Err(FpError::MaxCosetsExceeded {
                live: self.live,
                defined: self.nalloc(),
                max_cosets: self.max_cosets,
            });
        }
        let id = self.nalloc() as u32;
        self.parent.push(id);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        Ok(id)
    }

    fn fill_row(&mut self, alpha: u32) -> Result<(), FpError> {
        for col in 0..self.ncols as u32 {
            if !self.is_live(alpha) {
                return Ok(());
            }
            if self.entry(alpha, col) == UNDEF {
                let n = self.new_coset()?;
                self.set_entry(alpha, col, n);
                self.set_entry(n, self.col_inverse[col as usize] as u32, alpha);
            }
        }
        Ok(())
    }

    /// Scans the word from `alpha`, defining cosets to fill any gap and
    /// recording the closing deduction or coincidence.
    fn scan_and_fill(&mut self, alpha: u32, word: &[u32]) -> Result<(), FpError> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = self.find(alpha);
        let mut b = f;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j {
                let next = self.entry(f, word[i]);
                if next == UNDEF {
                    break;
                }
                f = self.find(next);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            while j > i {
                let col = self.col_inverse[word[j - 1] as usize] as u32;
                let prev = self.entry(b, col);
                if prev == UNDEF {
                    break;
                }
                b = self.find(prev);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                // deduction closes the scan
                let col = word[i];
                self.set_entry(f, col, b);
                self.set_entry(b, self.col_inverse[col as usize] as u32, f);
                return Ok(());
            }
            // gap of two or more: define a coset and keep scanning forward
            let col = word[i];
            let n = self.new_coset()?;
            self.set_entry(f, col, n);
            self.set_entry(n, self.col_inverse[col as usize] as u32, f);
        }
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, dead) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[dead as usize] = keep;
        self.live -= 1;
        queue.push(dead);
    }

    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut head = 0;
        while head < queue.len() {
            let dead = queue[head];
            head += 1;
            for col in 0..self.ncols as u32 {
                let delta = self.entry(dead, col);
                if delta == UNDEF {
                    continue;
                }
                self.set_entry(dead, col, UNDEF);
                let icol = self.col_inverse[col as usize] as u32;
                self.set_entry(delta, icol, UNDEF);
                let mu = self.find(dead);
                let nu = self.find(delta);
                let mu_img = self.entry(mu, col);
                if mu_img != UNDEF {
                    self.merge(nu, mu_img, &mut queue);
                } else {
                    let nu_pre = self.entry(nu, icol);
                    if nu_pre != UNDEF {
                        self.merge(mu, nu_pre, &mut queue);
                    } else {
                        self.set_entry(mu, col, nu);
                        self.set_entry(nu, icol, mu);
                    }
                }
            }
        }
    }

    /// Renumbers live cosets densely in survivor order.
    fn compact(mut self, presentation: Presentation) -> CosetTable {
        let mut new_id = vec![UNDEF; self.nalloc()];
        let mut nrows = 0u32;
        for c in 0..self.nalloc() as u32 {
            if self.is_live(c) {
                new_id[c as usize] = nrows;
                nrows += 1;
            }
        }
        let mut table = vec![UNDEF; nrows as usize * self.ncols];
        for c in 0..self.nalloc() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..self.ncols as u32 {
                let v = self.entry(c, col);
                if v != UNDEF {
                    let rep = self.find(v);
                    table[new_id[c as usize] as usize * self.ncols + col as usize] =
                        new_id[rep as usize];
                }
            }
        }
        CosetTable {
            presentation,
            ncols: self.ncols,
            fwd_col: self.fwd_col,
            inv_col_of_gen: self.inv_col_of_gen,
            table,
            nrows: nrows as usize,
            status: TableStatus::Complete,
        }
    }
}

impl std::fmt::Debug for CosetTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CosetTable")
            .field("nrows", &self.nrows)
            .field("status", &self.status)
            .finish()
    }
}
