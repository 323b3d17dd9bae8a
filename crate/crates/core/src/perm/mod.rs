//! Permutation arithmetic and permutation-group computation.
//!
//! Permutations act on the right and compose left to right: `p.compose(&q)`
//! applies `p` first, then `q`. With that convention the conjugate
//! `x.conjugate_by(&g)` is `g^-1 * x * g`, written `x^g` in exponent notation.

mod chain;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use chain::StabChain;

/// Hard ceiling on stabilizer-chain transversal storage, in point entries.
/// Every group in scope stays far below this; the cap exists so a runaway
/// input fails with a structured error instead of exhausting memory.
pub const CHAIN_STORAGE_CAP: usize = 1 << 28;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images of length {len} do not form a bijection of 0..{len}")]
    NotABijection { len: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("permutation must have positive degree")]
    ZeroDegree,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("cycle entry {point} repeated or out of range for degree {degree}")]
    BadCycle { point: u32, degree: usize },
    #[error("group must have at least one generator")]
    NoGenerators,
    #[error("subgroup closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("stabilizer-chain storage exceeded cap of {cap} entries")]
    ChainCapExceeded { cap: usize },
    #[error("seed element at position {index} is not a member of the group")]
    SeedNotInGroup { index: usize },
    #[error("subgroup is not normal: conjugate of generator {gen} by generator {by} falls outside")]
    NotNormal { gen: usize, by: usize },
    #[error("element is not a member of the group")]
    NotAMember,
}

/// A bijection on the points `0..degree`, stored as an image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its image table, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation as a product of cycles, applied left to right.
    /// Cycles need not be disjoint. Points are 0-based.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let mut step = Permutation::identity(degree);
            for (pos, &pt) in cycle.iter().enumerate() {
                let next = cycle[(pos + 1) % cycle.len()];
                if pt as usize >= degree || next as usize >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: pt.max(next),
                        degree,
                    });
                }
                step.images[pt as usize] = next;
            }
            // a cycle with a repeated entry would break bijectivity
            Permutation::from_images(step.images.clone())?;
            p = p.compose(&step)?;
        }
        Ok(p)
    }

    /// Builds an involution from a list of pairwise-disjoint transpositions.
    /// Errors if any point repeats: generator transcriptions rely on this to
    /// fail loudly rather than silently overwrite.
    pub fn from_transpositions(degree: usize, pairs: &[(u32, u32)]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for &(u, v) in pairs {
            for &pt in &[u, v] {
                if pt as usize >= degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if touched[pt as usize] {
                    return Err(PermError::BadCycle { point: pt, degree });
                }
                touched[pt as usize] = true;
            }
            images.swap(u as usize, v as usize);
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image_of(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|&mid| other.images[mid as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.degree());
        let mut acc = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = out.compose(&acc).expect("equal degrees");
            }
            if e > 1 {
                acc = acc.compose(&acc).expect("equal degrees");
            }
            e >>= 1;
        }
        out
    }

    /// Conjugate `self^g = g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        g.inverse().compose(self)?.compose(g)
    }

    /// Commutator `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.inverse()
            .compose(&other.inverse())?
            .compose(self)?
            .compose(other)
    }

    /// Least `k >= 1` with `self^k` the identity: the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                p = self.images[p as usize];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Cycle decomposition, fixed points omitted; each cycle starts at its
    /// least point, cycles sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut p = self.images[start as usize];
            while p != start {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn fmt_cycles(p: &Permutation, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return write!(f, "()");
    }
    for cycle in cycles {
        write!(f, "(")?;
        for (i, pt) in cycle.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{pt}")?;
        }
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cycles(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cycles(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Permutation", 2)?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("images", &self.images)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            images: Vec<u32>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.images.len() != raw.degree {
            return Err(D::Error::custom("images length does not match degree"));
        }
        Permutation::from_images(raw.images).map_err(D::Error::custom)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// A finite permutation group given by an ordered, nonempty generator list.
///
/// The generator list is preserved verbatim (order and duplicates included);
/// the stabilizer chain is computed lazily on first use and shared thereafter.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Result<Arc<StabChain>, PermError>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let cloned = PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        };
        if let Some(c) = self.chain.get() {
            let _ = cloned.chain.set(c.clone());
        }
        cloned
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, PermError> {
        let first = generators.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(vec![Permutation::identity(degree)]).expect("identity generator")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn stab_chain(&self) -> Result<Arc<StabChain>, PermError> {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators).map(Arc::new))
            .clone()
    }

    /// Exact group order from the stabilizer chain.
    pub fn order(&self) -> Result<u64, PermError> {
        Ok(self.stab_chain()?.order())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.stab_chain()?.contains(p))
    }

    /// Orbit of a point under the group, in BFS discovery order.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>, PermError> {
        if point as usize >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut in_orbit = vec![false; self.degree];
        let mut orbit = vec![point];
        in_orbit[point as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.image_of(p);
                if !in_orbit[q as usize] {
                    in_orbit[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        Ok(orbit)
    }

    /// True iff the orbit of point 0 is the whole domain.
    pub fn is_transitive(&self) -> Result<bool, PermError> {
        Ok(self.orbit(0)?.len() == self.degree)
    }

    /// Order of the stabilizer of `point`, via orbit-stabilizer.
    pub fn stabilizer_order(&self, point: u32) -> Result<u64, PermError> {
        let orbit_len = self.orbit(point)?.len() as u64;
        Ok(self.order()? / orbit_len)
    }

    /// Smallest normal subgroup of `self` containing `seed`.
    ///
    /// Seeds are membership-checked. The closure alternates conjugation
    /// sweeps with membership rebuilds until a full sweep adds nothing, at
    /// which point the generated subgroup is closed under conjugation by
    /// every group generator and hence normal.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<PermGroup, PermError> {
        for (index, s) in seed.iter().enumerate() {
            if !self.contains(s)? {
                return Err(PermError::SeedNotInGroup { index });
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seed {
            if !s.is_identity() && !gens.contains(s) {
                gens.push(s.clone());
            }
        }
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let mut closure = PermGroup::new(gens.clone())?;
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for x in &snapshot {
                for g in &self.generators {
                    let y = x.conjugate_by(g)?;
                    if !closure.contains(&y)? {
                        gens.push(y);
                        closure = PermGroup::new(gens.clone())?;
                        added = true;
                    }
                }
            }
            if !added {
                return Ok(closure);
            }
        }
    }

    /// Generating set for the derived subgroup: the normal closure of the
    /// pairwise generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup, PermError> {
        let mut seeds = Vec::new();
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let c = self.generators[i].commutator(&self.generators[j])?;
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// The core of the cyclic subgroup generated by `x`: the largest
    /// subgroup of `<x>` normal in `self`. Computed by intersecting the
    /// element set of `<x>` with its generator-conjugates to a fixpoint.
    pub fn core_of_cyclic(&self, x: &Permutation) -> Result<PermGroup, PermError> {
        if !self.contains(x)? {
            return Err(PermError::NotAMember);
        }
        let mut core: Vec<Permutation> = cyclic_elements(x);
        core.sort_unstable();
        loop {
            let mut changed = false;
            for g in &self.generators {
                let mut conj: Vec<Permutation> = core
                    .iter()
                    .map(|k| k.conjugate_by(g))
                    .collect::<Result<_, _>>()?;
                conj.sort_unstable();
                let inter = sorted_intersection(&core, &conj);
                if inter.len() != core.len() {
                    core = inter;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        // the fixpoint is a subgroup of a cyclic group, so itself cyclic:
        // any element of maximal order generates it
        let target = core.len() as u64;
        let gen = core
            .iter()
            .find(|e| e.order() == target)
            .expect("cyclic subgroup contains an element of full order");
        if gen.is_identity() {
            Ok(PermGroup::trivial(self.degree))
        } else {
            Ok(PermGroup::new(vec![gen.clone()])?)
        }
    }

    /// Permutation representation of `self / n` acting on the right cosets
    /// of `n`, with one image generator per generator of `self`, in order.
    ///
    /// Normality of `n` is verified by conjugating its generators.
    pub fn quotient_action(&self, n: &PermGroup) -> Result<PermGroup, PermError> {
        if n.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: n.degree(),
            });
        }
        for (gi, x) in n.generators().iter().enumerate() {
            if !self.contains(x)? {
                return Err(PermError::SeedNotInGroup { index: gi });
            }
            for (bi, g) in self.generators.iter().enumerate() {
                if !n.contains(&x.conjugate_by(g)?)? {
                    return Err(PermError::NotNormal { gen: gi, by: bi });
                }
            }
        }
        let n_order = n.order()? as usize;
        let n_elems = subgroup_elements(n.generators(), n_order.max(1))?;
        let canon = |x: &Permutation| -> Result<Permutation, PermError> {
            let mut best: Option<Permutation> = None;
            for u in &n_elems {
                let ux = u.compose(x)?;
                if best.as_ref().is_none_or(|b| ux < *b) {
                    best = Some(ux);
                }
            }
            Ok(best.expect("subgroup is nonempty"))
        };

        let expected = (self.order()? / n.order()?) as usize;
        let mut index = std::collections::HashMap::new();
        let mut reps: Vec<Permutation> = Vec::with_capacity(expected);
        let id = canon(&Permutation::identity(self.degree))?;
        index.insert(id.clone(), 0u32);
        reps.push(id);
        // images[g][coset] filled as cosets are discovered
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.generators.len()];
        let mut head = 0;
        while head < reps.len() {
            let rep = reps[head].clone();
            for (gi, g) in self.generators.iter().enumerate() {
                let next = canon(&rep.compose(g)?)?;
                let slot = match index.get(&next) {
                    Some(&k) => k,
                    None => {
                        let k = reps.len() as u32;
                        index.insert(next.clone(), k);
                        reps.push(next);
                        k
                    }
                };
                images[gi].push(slot);
            }
            head += 1;
        }
        debug_assert_eq!(reps.len(), expected, "coset count must match the index");
        let gens = images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(gens)
    }
}

/// All powers of `x`, in exponent order starting at the identity.
fn cyclic_elements(x: &Permutation) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(x.degree())];
    let mut cur = x.clone();
    while !cur.is_identity() {
        out.push(cur.clone());
        cur = cur.compose(x).expect("equal degrees");
    }
    out
}

fn sorted_intersection(a: &[Permutation], b: &[Permutation]) -> Vec<Permutation> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Breadth-first closure of `gens` under multiplication. Returns the full
/// element set sorted by image table, or an error once it exceeds `cap`.
pub fn subgroup_elements(
    gens: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, PermError> {
    let Some(first) = gens.first() else {
        return Err(PermError::NoGenerators);
    };
    let degree = first.degree();
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(PermError::ClosureCapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Default cap for [`subgroup_elements`]: dihedral subgroups in scope never
/// get close to this.
pub const SUBGROUP_ELEMENTS_CAP: usize = 1 << 16;

#[cfg(test)]
mod tests;
