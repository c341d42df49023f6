use super::{extract_center_data, Extension, Section};
use crate::algebra::GroupMap;
use crate::error::{Error, Result};

/// Baer sum of two center extensions with the same `H`, `K` and `Γ`.
///
/// Builds the pullback `L = {(g1, g2) : β1(g1) = β2(g2)}` inside `G1 × G2`,
/// divides by `D = {(a, a⁻¹)}` and returns the result together with the
/// section `x ↦ (t1(x), t2(x)) D`. Cosets are represented by their least
/// index pair.
pub fn baer_sum(
    e1: &Extension,
    t1: &Section,
    e2: &Extension,
    t2: &Section,
) -> Result<(Extension, Section)> {
    if !e1.is_center() || !e2.is_center() {
        return Err(Error::Precondition("Baer sum needs center extensions".into()));
    }
    if e1.kernel() != e2.kernel() || e1.quotient() != e2.quotient() {
        return Err(Error::Precondition(
            "Baer sum needs the same H and K on both sides".into(),
        ));
    }
    let gamma1 = extract_center_data(e1, t1)?.twist().clone();
    let gamma2 = extract_center_data(e2, t2)?.twist().clone();
    if gamma1 != gamma2 {
        return Err(Error::Precondition(
            "Baer sum needs equal star actions on H".into(),
        ));
    }
    let (g1, g2) = (e1.total(), e2.total());
    let n2 = g2.order();
    let h = e1.kernel_group();
    let product = g1.direct_product(g2);
    let pullback: Vec<usize> = product
        .elements()
        .filter(|&p| e1.beta().apply(p / n2) == e2.beta().apply(p % n2))
        .collect();
    let (l, embed) = product.subalgebra(&pullback)?;
    let mut position = vec![usize::MAX; product.order()];
    for (i, &p) in embed.iter().enumerate() {
        position[p] = i;
    }
    let pair = |a: usize, b: usize| position[a * n2 + b];
    let antidiagonal: Vec<usize> = h
        .elements()
        .map(|a| pair(e1.iota().apply(a), e2.iota().apply(h.inv(a))))
        .collect();
    let (total, proj) = l.quotient(&antidiagonal)?;
    let iota = GroupMap::new(
        total.order(),
        h.elements().map(|a| proj[pair(e1.iota().apply(a), 0)]).collect(),
    )?;
    let beta = GroupMap::new(
        e1.quotient().order(),
        (0..total.order())
            .map(|c| {
                let rep = (0..l.order()).find(|&i| proj[i] == c).expect("nonempty coset");
                e1.beta().apply(embed[rep] / n2)
            })
            .collect(),
    )?;
    let ext = Extension::new(e1.kernel().clone(), total, e1.quotient().clone(), iota, beta)?;
    let t = GroupMap::new(
        ext.total().order(),
        e1.quotient()
            .elements()
            .map(|x| proj[pair(t1.apply(x), t2.apply(x))])
            .collect(),
    )?;
    let t = Section::new(&ext, t)?;
    Ok((ext, t))
}
