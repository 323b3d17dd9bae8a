//! The polytope-level checks: string property, Schläfli type, degeneracy,
//! the rank-3 intersection property, minimal-generation rank of 2-groups,
//! the quotient criterion and the order-halving central quotient.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::fp::{verify_images, FpError, Presentation, DEFAULT_MAX_COSETS};
use crate::perm::{
    subgroup_elements, PermError, PermGroup, Permutation, SUBGROUP_ELEMENTS_CAP,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SggiError {
    #[error("expected three generators of equal degree")]
    BadTriple,
    #[error("generator {index} is not an involution (order {order})")]
    NotAnInvolution { index: usize, order: u64 },
    #[error("string property violated: (rho0*rho2)^2 is not the identity")]
    StringPropertyViolated,
    #[error("group order {order} is not a power of two")]
    NotA2Group { order: u64 },
    #[error("generator map is not a homomorphism")]
    NotAHomomorphism,
    #[error("quotient criterion target lacks the intersection property")]
    TargetNotCGroup,
    #[error(
        "polar-center quotient precondition violated: type {{{p1}, {p2}}}, order {order}: {reason}"
    )]
    PolarPrecondition {
        p1: u64,
        p2: u64,
        order: u64,
        reason: &'static str,
    },
    #[error("polar-center quotient postcondition failed: {0}")]
    PolarPostcondition(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Fp(#[from] FpError),
}

/// The pair (o(rho0*rho1), o(rho1*rho2)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SchlafliType {
    pub p1: u64,
    pub p2: u64,
}

impl std::fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}, {}}}", self.p1, self.p2)
    }
}

/// An ordered triple of involutions with the string property, bound to a
/// permutation-group backend whose generator list is exactly the triple.
pub struct SggiTriple {
    group: PermGroup,
    cached_type: OnceLock<SchlafliType>,
}

/// Validates and wraps a triple: every generator an involution (identity
/// rejected), non-adjacent generators commuting.
pub fn make_sggi(triple: [Permutation; 3]) -> Result<SggiTriple, SggiError> {
    let degree = triple[0].degree();
    if triple.iter().any(|p| p.degree() != degree) {
        return Err(SggiError::BadTriple);
    }
    for (index, p) in triple.iter().enumerate() {
        let order = p.order();
        if order != 2 {
            return Err(SggiError::NotAnInvolution { index, order });
        }
    }
    let r0r2 = triple[0].compose(&triple[2])?;
    if !r0r2.compose(&r0r2)?.is_identity() {
        return Err(SggiError::StringPropertyViolated);
    }
    let group = PermGroup::new(triple.to_vec())?;
    Ok(SggiTriple {
        group,
        cached_type: OnceLock::new(),
    })
}

impl SggiTriple {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn rho(&self, i: usize) -> &Permutation {
        &self.group.generators()[i]
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> Result<u64, SggiError> {
        Ok(self.group.order()?)
    }

    pub fn schlafli_type(&self) -> SchlafliType {
        *self.cached_type.get_or_init(|| {
            let p1 = self.rho(0).compose(self.rho(1)).expect("equal degrees").order();
            let p2 = self.rho(1).compose(self.rho(2)).expect("equal degrees").order();
            SchlafliType { p1, p2 }
        })
    }

    /// A Schläfli entry of 2 (or 1) splits the group as a direct product.
    pub fn is_degenerate(&self) -> bool {
        let t = self.schlafli_type();
        t.p1 <= 2 || t.p2 <= 2
    }

    /// The rank-3 intersection property: the triple is a minimal generating
    /// set and the two maximal dihedral subgroups meet in exactly the subgroup generated by rho1.
    ///
    /// Minimality is the mod-2 rank for 2-groups; for other orders a
    /// 3-element generating set is minimal exactly when no 2-element subset
    /// already generates, checked on subgroup orders.
    pub fn check_intersection_property(&self) -> Result<bool, SggiError> {
        let order = self.order()?;
        let minimal = if order.is_power_of_two() {
            generating_rank_mod2(&self.group)? == 3
        } else {
            let mut proper = true;
            for (x, y) in [(0, 1), (0, 2), (1, 2)] {
                let pair = PermGroup::new(vec![self.rho(x).clone(), self.rho(y).clone()])?;
                proper &= pair.order()? < order;
            }
            proper
        };
        if !minimal {
            return Ok(false);
        }
        let left = subgroup_elements(
            &[self.rho(0).clone(), self.rho(1).clone()],
            SUBGROUP_ELEMENTS_CAP,
        )?;
        let right = subgroup_elements(
            &[self.rho(1).clone(), self.rho(2).clone()],
            SUBGROUP_ELEMENTS_CAP,
        )?;
        let mut expected = vec![Permutation::identity(self.degree()), self.rho(1).clone()];
        expected.sort_unstable();
        let common: Vec<&Permutation> = left
            .iter()
            .filter(|p| right.binary_search(p).is_ok())
            .collect();
        Ok(common.len() == expected.len() && common.iter().zip(&expected).all(|(a, b)| **a == *b))
    }

    /// Quotient by the central involution `(rho1*rho2)^(2^(t-1))`.
    ///
    /// Requires type {2^s, 2^t} with s <= t and 2t >= n-1 where the order is
    /// 2^n; under that hypothesis the subgroup is guaranteed normal, the
    /// quotient has order 2^(n-1) and type {2^s, 2^(t-1)}, and both facts
    /// are asserted after construction.
    pub fn quotient_by_polar_center(&self) -> Result<SggiTriple, SggiError> {
        let ty = self.schlafli_type();
        let order = self.order()?;
        let fail = |reason: &'static str| SggiError::PolarPrecondition {
            p1: ty.p1,
            p2: ty.p2,
            order,
            reason,
        };
        if !order.is_power_of_two() {
            return Err(fail("order is not a power of two"));
        }
        let n = order.trailing_zeros() as u64;
        if !ty.p1.is_power_of_two() || !ty.p2.is_power_of_two() {
            return Err(fail("type entries are not powers of two"));
        }
        let (s, t) = (ty.p1.trailing_zeros() as u64, ty.p2.trailing_zeros() as u64);
        if s < 2 || t < 2 {
            return Err(fail("type entries must be at least 4"));
        }
        if s > t {
            return Err(fail("requires s <= t"));
        }
        if 2 * t < n - 1 {
            return Err(fail("requires 2t >= n-1"));
        }
        let z = self
            .rho(1)
            .compose(self.rho(2))?
            .pow(1i64 << (t - 1));
        let center = PermGroup::new(vec![z])?;
        // Lemma hypotheses guarantee normality; quotient_action re-checks it
        // and a NotNormal error here means a bug, not bad input.
        let quotient = self.group.quotient_action(&center)?;
        let gens = quotient.generators();
        let image = make_sggi([gens[0].clone(), gens[1].clone(), gens[2].clone()])?;
        let got_order = image.order()?;
        let got_type = image.schlafli_type();
        let want_type = SchlafliType {
            p1: ty.p1,
            p2: ty.p2 / 2,
        };
        if got_order != order / 2 || got_type != want_type {
            return Err(SggiError::PolarPostcondition(format!(
                "got order {got_order} and type {got_type}, want order {} and type {want_type}",
                order / 2
            )));
        }
        Ok(image)
    }
}

impl std::fmt::Debug for SggiTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SggiTriple")
            .field("degree", &self.degree())
            .finish()
    }
}

/// Minimal-generating-set size of a 2-group: the dimension of the quotient
/// by the subgroup generated by squares and commutators, which for a
/// 2-group is the Frattini quotient.
pub fn generating_rank_mod2(g: &PermGroup) -> Result<u32, SggiError> {
    let order = g.order()?;
    if !order.is_power_of_two() {
        return Err(SggiError::NotA2Group { order });
    }
    let mut seeds = Vec::new();
    for (i, a) in g.generators().iter().enumerate() {
        let sq = a.compose(a)?;
        if !sq.is_identity() {
            seeds.push(sq);
        }
        for b in &g.generators()[i + 1..] {
            let c = a.commutator(b)?;
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    let frattini = g.normal_closure(&seeds)?;
    let index = order / frattini.order()?;
    Ok(index.trailing_zeros())
}

/// The source side of the quotient criterion: either a validated triple or
/// a presentation on three involution generators.
pub enum QuotientSource<'a> {
    Triple(&'a SggiTriple),
    Presented(&'a Presentation),
}

/// The quotient criterion: if the generator map from `source` onto `target`
/// is a homomorphism that is injective on `<rho0,rho1>` or on `<rho1,rho2>`,
/// and `target` has the intersection property, then `source` has it too.
///
/// Returns whether the injectivity condition holds; errors if the map is
/// not a homomorphism or the target is not a C-group. Injectivity on a
/// dihedral subgroup is tested by rotation-order preservation plus
/// distinctness of the two involution images.
pub fn quotient_criterion(source: QuotientSource<'_>, target: &SggiTriple) -> Result<bool, SggiError> {
    if !target.check_intersection_property()? {
        return Err(SggiError::TargetNotCGroup);
    }
    let target_gens: [&Permutation; 3] = [target.rho(0), target.rho(1), target.rho(2)];
    let (source_p1, source_p2) = match source {
        QuotientSource::Triple(s) => {
            // the map rho_i -> sigma_i extends to a homomorphism iff the
            // graph subgroup <(rho_i, sigma_i)> has the same order as the
            // source group itself
            let paired: Vec<Permutation> = (0..3)
                .map(|i| pair_permutation(s.rho(i), target_gens[i]))
                .collect::<Result<_, _>>()?;
            let graph = PermGroup::new(paired)?;
            if graph.order()? != s.order()? {
                return Err(SggiError::NotAHomomorphism);
            }
            let ty = s.schlafli_type();
            (ty.p1, ty.p2)
        }
        QuotientSource::Presented(p) => {
            if p.ngens() != 3 {
                return Err(SggiError::BadTriple);
            }
            let images: Vec<Permutation> = target_gens.iter().map(|&g| g.clone()).collect();
            if !verify_images(p, &images)? {
                return Err(SggiError::NotAHomomorphism);
            }
            let order = p.group_order(DEFAULT_MAX_COSETS)?;
            let p1 = p.element_order(&p.relator("r0*r1").expect("fixed word"), order, DEFAULT_MAX_COSETS)?;
            let p2 = p.element_order(&p.relator("r1*r2").expect("fixed word"), order, DEFAULT_MAX_COSETS)?;
            (p1, p2)
        }
    };
    let target_type = target.schlafli_type();
    let left_injective = source_p1 == target_type.p1 && target.rho(0) != target.rho(1);
    let right_injective = source_p2 == target_type.p2 && target.rho(1) != target.rho(2);
    Ok(left_injective || right_injective)
}

/// The pair (p, q) acting on the disjoint union of their domains; the graph
/// subgroup generated by such pairs has the order of the source group
/// exactly when the componentwise map extends to a homomorphism.
fn pair_permutation(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    let offset = p.degree() as u32;
    let mut images: Vec<u32> = p.images().to_vec();
    images.extend(q.images().iter().map(|&x| x + offset));
    Permutation::from_images(images)
}
