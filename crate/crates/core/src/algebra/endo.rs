use std::collections::HashMap;

use super::group::FiniteGroup;
use super::maps::{enumerate_group_homs, GroupMap};
use super::mla::MultLieAlgebra;
use crate::error::{Error, Result};

/// Largest `|H|` for which endomorphisms are enumerated by default.
pub const DEFAULT_END_CAP: usize = 16;

/// All endomorphisms of an abelian group `H` as a multiplicative Lie algebra:
/// pointwise product, and `(F*G)(h) = F(G(h)) · G(F(h⁻¹))`.
///
/// Carrier elements are listed in lexicographic order of their tables, so
/// index 0 is the constant-identity map.
#[derive(Clone, Debug)]
pub struct EndMla {
    carrier: Vec<GroupMap>,
    mla: MultLieAlgebra,
    index: HashMap<Vec<usize>, usize>,
}

/// Builds `End(H)` with the default size cap.
pub fn end_mla(h: &FiniteGroup) -> Result<EndMla> {
    EndMla::with_cap(h, DEFAULT_END_CAP)
}

impl EndMla {
    pub fn with_cap(h: &FiniteGroup, cap: usize) -> Result<Self> {
        if !h.is_abelian() {
            return Err(Error::Precondition(
                "End(H) needs an abelian H: the pointwise product is not closed otherwise".into(),
            ));
        }
        if h.order() > cap {
            return Err(Error::Precondition(format!(
                "|H| = {} exceeds the endomorphism cap {cap}",
                h.order()
            )));
        }
        let carrier = enumerate_group_homs(h, h);
        let index: HashMap<Vec<usize>, usize> = carrier
            .iter()
            .enumerate()
            .map(|(i, m)| (m.table().to_vec(), i))
            .collect();
        let e = carrier.len();
        let lookup = |t: Vec<usize>| index[&t];
        let mut mul = Vec::with_capacity(e * e);
        let mut star = Vec::with_capacity(e * e);
        for f in &carrier {
            for g in &carrier {
                mul.push(lookup(
                    h.elements().map(|x| h.mul(f.apply(x), g.apply(x))).collect(),
                ));
                star.push(lookup(
                    h.elements()
                        .map(|x| h.mul(f.apply(g.apply(x)), g.apply(f.apply(h.inv(x)))))
                        .collect(),
                ));
            }
        }
        let group = FiniteGroup::from_flat_unchecked(e, mul);
        let mla = MultLieAlgebra::from_flat(group, star)
            .map_err(|e| Error::Structural(format!("End(H) failed verification: {e}")))?;
        Ok(EndMla {
            carrier,
            mla,
            index,
        })
    }

    pub fn mla(&self) -> &MultLieAlgebra {
        &self.mla
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[GroupMap] {
        &self.carrier
    }

    /// The endomorphism at index `i`.
    pub fn map(&self, i: usize) -> &GroupMap {
        &self.carrier[i]
    }

    pub fn index_of(&self, table: &[usize]) -> Option<usize> {
        self.index.get(table).copied()
    }

    /// Index of the identity endomorphism.
    pub fn identity_endo(&self) -> usize {
        let n = self.carrier[0].domain();
        self.index[&(0..n).collect::<Vec<_>>()]
    }
}

/// `Aut(H)` under composition, together with the automorphism behind each index.
#[derive(Clone, Debug)]
pub struct AutGroup {
    carrier: Vec<GroupMap>,
    group: FiniteGroup,
    index: HashMap<Vec<usize>, usize>,
}

/// Builds `Aut(H)`. Automorphisms are ordered lexicographically by table, so
/// the identity permutation is index 0; the product of `i` and `j` is the
/// composite that applies `j` first.
pub fn aut_group(h: &FiniteGroup) -> AutGroup {
    let carrier: Vec<GroupMap> = enumerate_group_homs(h, h)
        .into_iter()
        .filter(GroupMap::is_injective)
        .collect();
    let index: HashMap<Vec<usize>, usize> = carrier
        .iter()
        .enumerate()
        .map(|(i, m)| (m.table().to_vec(), i))
        .collect();
    let a = carrier.len();
    let mut mul = Vec::with_capacity(a * a);
    for f in &carrier {
        for g in &carrier {
            let t: Vec<usize> = g.table().iter().map(|&x| f.apply(x)).collect();
            mul.push(index[&t]);
        }
    }
    AutGroup {
        group: FiniteGroup::from_flat_unchecked(a, mul),
        carrier,
        index,
    }
}

impl AutGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> &[GroupMap] {
        &self.carrier
    }

    pub fn map(&self, i: usize) -> &GroupMap {
        &self.carrier[i]
    }

    pub fn index_of(&self, table: &[usize]) -> Option<usize> {
        self.index.get(table).copied()
    }
}
