/// Result cited for each verdict key.
pub const CITATIONS: &[(&str, &str)] = &[
    ("notCat0", "embedded infinite edge group with finite labels obstructs CAT(0)"),
    ("notSemihyperbolic", "embedded edge group with h = 1 obstructs semihyperbolicity"),
    ("cat0ComplexCertificate", "2-dimensional graphs: cocompact action on a CAT(0) development; link girth at least 2m"),
    ("acylindricallyHyperbolic", "acylindrical hyperbolicity for irreducible 2-dimensional graphs with an infinite edge group per component"),
    ("relativelyHyperbolic", "hyperbolic relative to the infinite spherical edge groups for hyperbolic-type 2-dimensional graphs"),
    ("hyperbolic", "hyperbolic-type 2-dimensional graphs with only finite edge groups"),
    ("consequenceList", "consequences of relative hyperbolicity for hyperbolic-type 2-dimensional graphs"),
    ("biautomatic", "biautomatic for hyperbolic-type 2-dimensional graphs without an h = 1 edge"),
    ("shephardResiduallyFinite", "residual finiteness for triangle-free graphs with no all-2 square"),
    ("artinResiduallyFinite", "Artin group residual finiteness through finite-label quotients"),
    ("virtuallyTorsionFree", "virtually torsion-free for triangle-free graphs with no all-2 square"),
    ("finite", "dihedral Shephard group finite exactly when h > 1"),
    ("dihedralNotCat0", "dihedral Shephard group with h <= 1 has no proper semi-simple CAT(0) action"),
    ("dihedralNotSemihyperbolic", "dihedral Shephard group with h = 1 is commensurable to the integer Heisenberg group"),
    ("virtuallyNilpotent", "dihedral Shephard group with h = 1 is commensurable to the integer Heisenberg group"),
    ("dihedralBiautomatic", "dihedral Shephard group with h < 1 is a uniform lattice in the universal cover of SL(2,R)"),
    ("linear", "dihedral Shephard groups are linear"),
    ("torsionConjugate", "finite-order elements of infinite dihedral Shephard groups are conjugate to generator powers"),
];

pub fn citation(key: &str) -> &'static str {
    CITATIONS
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, c)| *c)
        .unwrap_or("")
}
