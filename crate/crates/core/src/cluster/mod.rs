//! Exchange matrices, seeds, mutation and seed-level diagnostics.

mod matrix;
mod rank3;
mod seed;

pub use matrix::ExchangeMatrix;
pub use rank3::{
    cyclic_triple, rank3_classification, rank3_matrix, totally_coprime_certificate, CoprimeCertificate, Rank3Class,
};
pub use seed::{MutationWord, Seed};

/// Matrix mutation at `k` (0-based).
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> crate::Result<ExchangeMatrix> {
    b.mutate(k)
}

/// Seed mutation at `k` (0-based).
pub fn mutate_seed(s: &Seed, k: usize) -> crate::Result<Seed> {
    s.mutate(k)
}

pub fn apply_word(s: &Seed, w: &MutationWord) -> crate::Result<Seed> {
    s.apply_word(w)
}

pub fn is_acyclic_seed(b: &ExchangeMatrix) -> bool {
    b.is_acyclic()
}

pub fn is_coprime_seed(b: &ExchangeMatrix) -> bool {
    b.is_coprime()
}

pub fn is_full_rank(b: &ExchangeMatrix) -> bool {
    b.is_full_rank()
}
