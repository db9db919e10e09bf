//! Exact generalized characters of the symmetric group.
//!
//! The pair `(S_n x S_{n-1}, diag S_{n-1})` is a Gelfand pair; its spherical
//! functions `phi_{lam,mu}` are indexed by a partition `lam` of `n` and a
//! partition `mu` of `n - 1` obtained from `lam` by removing one cell. They
//! are constant on the classes of `S_n` under conjugation by the stabilizer
//! of 1 ([`MarkedClass`]), and on that stabilizer they restrict to the
//! normalized character `chi^mu / d_mu`.
//!
//! The main entry point is [`phi_sfs`], a signed sum over factorizations
//! `gamma ∘ sigma = theta` of a coloring count. Three independent routes
//! compute the same numbers and are used to check it:
//!
//! * [`phi_lemma`]: the same sum over a function count,
//! * [`phi_spherical`]: an average of classical characters over the stabilizer of 1,
//! * [`gen_char_via_travis`]: a conjugation average of a Young symmetrizer.
//!
//! All arithmetic is exact; values are [`Rational`]s.
//!
//! ```
//! use genchar::{phi_sfs, Partition, Permutation};
//!
//! let lam: Partition = "2,1".parse()?;
//! let mu: Partition = "1,1".parse()?;
//! let theta = Permutation::parse_with_degree("(1 2)", 3)?;
//! assert_eq!(phi_sfs(&lam, &mu, &theta)?.to_string(), "1/2");
//! # Ok::<(), genchar::Error>(())
//! ```

pub mod characters;
pub mod error;
pub mod genchar;
pub mod group_algebra;
pub mod partitions;
pub mod permutations;
pub mod table_file;
pub mod verify;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use crate::characters::{mn_character, restricted_character, CycleType};
pub use crate::error::{Error, Result};
pub use crate::genchar::{
    build_table, count_colorings, count_functions, count_injective, count_tableau_translates, falling_factorial,
    phi_lemma, phi_sfs, phi_sfs_embedded, phi_spherical, transposition_value, GenCharTable,
};
pub use crate::group_algebra::{
    character_via_symmetrizer, gen_char_from_tableau, gen_char_via_travis, young_symmetrizer, GroupAlgebraElement,
    Tableau,
};
pub use crate::partitions::{covering_pairs, enumerate_partitions, Cell, Partition};
pub use crate::permutations::{all_permutations, enumerate_marked_class_reps, point_stabilizer, MarkedClass, Permutation};

// The guide's code blocks run as doc tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/group-algebra.md")]
    mod group_algebra {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/generalized-characters.md")]
    mod generalized_characters {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
}
