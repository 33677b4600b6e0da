//! Dihedral Shephard groups Sh(p, q, r) as central extensions of triangle groups.

mod chain;
mod classify;
mod extension;
mod finite;
mod girth;
mod homomorphism;
mod oracle;
mod session;
mod todd_coxeter;
mod word;

pub use chain::{compute_chain_data, ChainData};
pub use classify::{
    classify, lattice_constants, DihedralClassification, QuotientDescriptor, Regime,
};
pub use extension::{ExtElement, Extension, GenWord, LetterSpec};
pub use finite::FiniteShephard;
pub use girth::{certify_girth, GirthCertificate};
pub use homomorphism::{
    delta_tilde, identity_check, lattice_comparison, lattice_group_g, odd_label_embedding,
    shephard_in_g, substitute, verify_homomorphism, HomomorphismReport, LatticeReport,
    Presentation, RelatorVerdict, WordOracle,
};
pub use oracle::{brute_force_equal, sample_pairs, AreaOracle, BruteForce};
pub use session::{
    shephard_extension, shephard_relators, DihedralSession, ElementOrder, ShephardNormalForm,
};
pub use todd_coxeter::coset_count;
pub use word::{Gen, SyllableWord};
