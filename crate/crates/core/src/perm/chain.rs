//! Deterministic Schreier-Sims: base points are chosen greedily as first
//! moved points, Schreier generators are enumerated explicitly in orbit
//! order, and no randomization is used anywhere, so identical generator
//! lists always produce identical chains.

use super::{PermError, Permutation, CHAIN_STORAGE_CAP};

const NOT_IN_ORBIT: u32 = u32::MAX;

struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    transversal: Vec<Permutation>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NOT_IN_ORBIT; degree],
            transversal: Vec::new(),
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.pos.iter_mut().for_each(|p| *p = NOT_IN_ORBIT);
        self.orbit.clear();
        self.transversal.clear();
        self.orbit.push(self.base);
        self.pos[self.base as usize] = 0;
        self.transversal.push(Permutation::identity(degree));
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            for g in &self.gens {
                let q = g.image_of(p);
                if self.pos[q as usize] == NOT_IN_ORBIT {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    let rep = self.transversal[head].compose(g).expect("equal degrees");
                    self.transversal.push(rep);
                }
            }
            head += 1;
        }
    }
}

/// A base and strong generating set, as a stabilizer chain.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Result<Self, PermError> {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let mut initial: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !initial.contains(g) {
                initial.push(g.clone());
            }
        }
        if initial.is_empty() {
            return Ok(chain);
        }
        let base = first_moved_point(&initial[0]);
        chain.levels.push(Level::new(base, degree));
        for g in initial {
            chain.levels[0].gens.push(g);
        }
        chain.levels[0].recompute_orbit(degree);
        chain.check_cap()?;

        // Verify levels deepest-first; adding a strong generator at level
        // `stop` only invalidates levels <= stop, so restart the ascent there.
        let mut i = chain.levels.len() - 1;
        'outer: loop {
            let mut oi = 0;
            while oi < chain.levels[i].orbit.len() {
                let mut gi = 0;
                while gi < chain.levels[i].gens.len() {
                    let level = &chain.levels[i];
                    let p = level.orbit[oi];
                    let s = &level.gens[gi];
                    let q = s.image_of(p);
                    let u_p = &level.transversal[oi];
                    let u_q = &level.transversal[level.pos[q as usize] as usize];
                    let sch = u_p.compose(s).expect("equal degrees");
                    let sch = sch.compose(&u_q.inverse()).expect("equal degrees");
                    if !sch.is_identity() {
                        let (residue, stop) = chain.sift_from(i + 1, sch);
                        if !residue.is_identity() {
                            chain.add_strong_generator(i + 1, stop, residue)?;
                            i = stop;
                            continue 'outer;
                        }
                    }
                    gi += 1;
                }
                oi += 1;
            }
            if i == 0 {
                return Ok(chain);
            }
            i -= 1;
        }
    }

    /// Installs a strong generator that fixes the bases of levels
    /// `0..stop`. It belongs to the generator set of every level in
    /// `from..=stop`, not just the deepest one: skipping intermediate
    /// levels leaves their fundamental orbits too small.
    fn add_strong_generator(
        &mut self,
        from: usize,
        stop: usize,
        h: Permutation,
    ) -> Result<(), PermError> {
        if stop == self.levels.len() {
            let base = first_moved_point(&h);
            self.levels.push(Level::new(base, self.degree));
        }
        for level in from..=stop {
            self.levels[level].gens.push(h.clone());
            self.levels[level].recompute_orbit(self.degree);
        }
        self.check_cap()
    }

    fn check_cap(&self) -> Result<(), PermError> {
        let cells: usize = self
            .levels
            .iter()
            .map(|l| l.transversal.len() * self.degree)
            .sum();
        if cells > CHAIN_STORAGE_CAP {
            return Err(PermError::ChainCapExceeded {
                cap: CHAIN_STORAGE_CAP,
            });
        }
        Ok(())
    }

    /// Sifts `g` through levels `start..`, returning the residue and the
    /// level at which sifting stopped (`levels.len()` if it ran off the end).
    fn sift_from(&self, start: usize, mut g: Permutation) -> (Permutation, usize) {
        for l in start..self.levels.len() {
            if g.is_identity() {
                return (g, self.levels.len());
            }
            let level = &self.levels[l];
            let p = g.image_of(level.base);
            let k = level.pos[p as usize];
            if k == NOT_IN_ORBIT {
                return (g, l);
            }
            g = g
                .compose(&level.transversal[k as usize].inverse())
                .expect("equal degrees");
        }
        (g, self.levels.len())
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.saturating_mul(l.orbit.len() as u64))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.sift_from(0, p.clone());
        residue.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Fundamental orbit lengths, level by level.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}

fn first_moved_point(p: &Permutation) -> u32 {
    p.images()
        .iter()
        .enumerate()
        .find(|(i, &x)| *i as u32 != x)
        .map(|(i, _)| i as u32)
        .expect("permutation is not the identity")
}
