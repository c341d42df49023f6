//! Standard small objects: the dihedral example, desk-scale groups, and the
//! quotient of the dihedral group by its center.
//!
//! Dihedral indices: element `j·4 + i` is `a^j b^i`, so `a = 4`, `b = 1`.
//! The quotient `K = D4/{1, b²}` has `0 = H`, `1 = bH`, `2 = aH`, `3 = abH`.

use crate::algebra::{star_completion, FiniteGroup, GroupMap, MultLieAlgebra};
use crate::error::Result;
use crate::extensions::{Extension, Section};

pub const A: usize = 4;
pub const B: usize = 1;

/// `D4` with the unique star satisfying `a*a = b*b = 1`, `a*b = b`.
pub fn d4_mla() -> MultLieAlgebra {
    let d4 = FiniteGroup::dihedral(4);
    let mut all = star_completion(&d4, &[(A, A, 0), (B, B, 0), (A, B, B)])
        .expect("constraints are in range");
    assert_eq!(all.len(), 1, "dihedral star completion is unique");
    all.remove(0)
}

/// `1 → {1, b²} → D4 → D4/{1, b²} → 1`.
pub fn d4_extension() -> Result<Extension> {
    let g = d4_mla();
    let (k, proj) = g.quotient(&[0, 2])?;
    let kernel = MultLieAlgebra::trivial_star(FiniteGroup::cyclic(2));
    let iota = GroupMap::new(8, vec![0, 2])?;
    let beta = GroupMap::new(4, proj)?;
    Extension::new(kernel, g, k, iota, beta)
}

/// The section `t(H) = e`, `t(bH) = b³`, `t(aH) = a`, `t(abH) = ab`.
pub fn d4_section(ext: &Extension) -> Result<Section> {
    Section::new(ext, GroupMap::new(8, vec![0, 3, 4, 5])?)
}

pub fn klein_four() -> FiniteGroup {
    FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))
}

/// Every multiplicative Lie algebra on the trivial group, `Z2`, `Z3`, `Z4`
/// and `Z2 × Z2`, labelled by carrier and position in the completion order.
pub fn desk_scale_quotients() -> Vec<(String, MultLieAlgebra)> {
    let carriers = [
        ("1", FiniteGroup::trivial()),
        ("Z2", FiniteGroup::cyclic(2)),
        ("Z3", FiniteGroup::cyclic(3)),
        ("Z4", FiniteGroup::cyclic(4)),
        ("V4", klein_four()),
    ];
    let mut out = Vec::new();
    for (name, g) in carriers {
        for (i, m) in star_completion(&g, &[]).expect("no constraints").into_iter().enumerate() {
            out.push((format!("{name}#{i}"), m));
        }
    }
    out
}

/// The kernels used at desk scale.
pub fn desk_scale_kernels() -> Vec<(String, FiniteGroup)> {
    vec![
        ("Z2".to_string(), FiniteGroup::cyclic(2)),
        ("Z3".to_string(), FiniteGroup::cyclic(3)),
    ]
}
