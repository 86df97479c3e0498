use serde::Serialize;

use super::matrix::ExchangeMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rank3Class {
    Acyclic,
    NonAcyclic,
}

/// Whether the cyclic rank-3 seed with `a, b, c` arrows is mutation
/// equivalent to an acyclic seed.
pub fn rank3_classification(a: u64, b: u64, c: u64) -> Rank3Class {
    let (ai, bi, ci) = (a as i128, b as i128, c as i128);
    if a < 2 || b < 2 || c < 2 || ai * bi * ci - ai * ai - bi * bi - ci * ci + 4 < 0 {
        Rank3Class::Acyclic
    } else {
        Rank3Class::NonAcyclic
    }
}

/// The standard matrix `[[0,-a,c],[a,0,-b],[-c,b,0]]`.
pub fn rank3_matrix(a: i64, b: i64, c: i64) -> ExchangeMatrix {
    ExchangeMatrix::new(vec![vec![0, -a, c], vec![a, 0, -b], vec![-c, b, 0]]).expect("skew-symmetric")
}

/// `(a, b, c)` when the principal part is a skew-symmetric oriented
/// 3-cycle, so that the rank-3 classification applies.
pub fn cyclic_triple(b: &ExchangeMatrix) -> Option<(u64, u64, u64)> {
    if b.m() != 3 || !b.is_skew_symmetric() {
        return None;
    }
    let (x, y, z) = (b.get(1, 0), b.get(2, 1), b.get(0, 2));
    let same_sign = (x > 0 && y > 0 && z > 0) || (x < 0 && y < 0 && z < 0);
    same_sign.then(|| (x.unsigned_abs(), y.unsigned_abs(), z.unsigned_abs()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoprimeCertificate {
    FullRank,
    Rank3Nonacyclic,
    Unknown,
}

impl CoprimeCertificate {
    pub fn is_certified(self) -> bool {
        self != CoprimeCertificate::Unknown
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::FullRank => "full_rank",
            Self::Rank3Nonacyclic => "rank3_nonacyclic",
            Self::Unknown => "unknown",
        }
    }
}

/// A reason the cluster algebra is totally coprime, if one of the two
/// available theorems applies. Coprimality of this seed alone is never
/// taken as evidence.
pub fn totally_coprime_certificate(b: &ExchangeMatrix) -> CoprimeCertificate {
    if b.is_full_rank() {
        return CoprimeCertificate::FullRank;
    }
    match cyclic_triple(b) {
        Some((x, y, z)) if rank3_classification(x, y, z) == Rank3Class::NonAcyclic => {
            CoprimeCertificate::Rank3Nonacyclic
        }
        _ => CoprimeCertificate::Unknown,
    }
}
