use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `n × m` integer exchange matrix whose top `m × m` block is
/// skew-symmetrizable. Rows `m..n` belong to frozen variables.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ExchangeMatrix {
    rows: Vec<Vec<i64>>,
    n: usize,
    m: usize,
    symmetrizer: Vec<u64>,
}

impl ExchangeMatrix {
    /// Builds from `n` rows of length `m`, checking skew-symmetrizability of
    /// the principal part.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if m == 0 {
            return Err(Error::InvalidMatrix("no mutable columns".into()));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix("rows have different lengths".into()));
        }
        if m > n {
            return Err(Error::InvalidMatrix(format!("{m} columns but only {n} rows")));
        }
        let symmetrizer = skew_symmetrizer(&rows, m)?;
        Ok(Self { rows, n, m, symmetrizer })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// The positive diagonal `D` with `D B⁰` skew-symmetric, normalized so
    /// that each connected block has coprime entries.
    pub fn symmetrizer(&self) -> &[u64] {
        &self.symmetrizer
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| self.rows[i][j] == -self.rows[j][i]))
    }

    /// Matrix mutation at the mutable index `k` (0-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.m {
            return Err(Error::IndexOutOfRange { index: k, max: self.m });
        }
        let b = &self.rows;
        let rows = (0..self.n)
            .map(|i| {
                (0..self.m)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            rows,
            n: self.n,
            m: self.m,
            symmetrizer: self.symmetrizer.clone(),
        })
    }

    /// No directed cycle among mutable vertices, with an arrow `i → j`
    /// whenever `B_ji > 0`.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the mutable subquiver.
        let m = self.m;
        let mut indeg = vec![0usize; m];
        for i in 0..m {
            for j in 0..m {
                if self.rows[j][i] > 0 {
                    indeg[j] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(i) = queue.pop_front() {
            seen += 1;
            for j in 0..m {
                if self.rows[j][i] > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
        }
        seen == m
    }

    /// Every pair of columns is linearly independent over the rationals.
    pub fn is_coprime(&self) -> bool {
        (0..self.m).all(|a| {
            (a + 1..self.m).all(|b| {
                let (u, v) = (self.column(a), self.column(b));
                (0..self.n).any(|i| (i + 1..self.n).any(|j| u[i] * v[j] != u[j] * v[i]))
            })
        })
    }

    /// Rank over the rationals by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Ratio<BigInt>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| Ratio::from_integer(BigInt::from(x))).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.m {
            let Some(p) = (rank..self.n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..self.n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &a[rank][col];
                for c in col..self.m {
                    let v = &a[r][c] - &factor * &a[rank][c];
                    a[r][c] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.m
    }
}

/// Propagates `d_i / d_j = -B_ji / B_ij` over the principal part.
fn skew_symmetrizer(rows: &[Vec<i64>], m: usize) -> Result<Vec<u64>> {
    for i in 0..m {
        if rows[i][i] != 0 {
            return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at {}", i + 1)));
        }
        for j in 0..m {
            let (a, b) = (rows[i][j], rows[j][i]);
            if (a == 0) != (b == 0) || (a != 0 && a.signum() == b.signum()) {
                return Err(Error::InvalidMatrix(format!(
                    "entries ({},{}) and ({},{}) are not sign-skew-symmetric",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; m];
    let mut out = vec![0u64; m];
    for root in 0..m {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Ratio::from_integer(1));
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(j) = queue.pop_front() {
            let dj = d[j].unwrap();
            for i in 0..m {
                if rows[i][j] == 0 {
                    continue;
                }
                // d_i B_ij = -d_j B_ji
                let di = dj * Ratio::new(-rows[j][i], rows[i][j]);
                match d[i] {
                    None => {
                        d[i] = Some(di);
                        component.push(i);
                        queue.push_back(i);
                    }
                    Some(old) if old != di => {
                        return Err(Error::InvalidMatrix(
                            "principal part is not skew-symmetrizable".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &v| acc.lcm(d[v].unwrap().denom()));
        let ints: Vec<i64> = component.iter().map(|&v| (d[v].unwrap() * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&v, &x) in component.iter().zip(&ints) {
            out[v] = (x / g) as u64;
        }
    }
    Ok(out)
}

impl TryFrom<Vec<Vec<i64>>> for ExchangeMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<ExchangeMatrix> for Vec<Vec<i64>> {
    fn from(b: ExchangeMatrix) -> Self {
        b.rows
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, r) in self.rows.iter().enumerate() {
            if i == self.m {
                writeln!(f, "{}", "-".repeat((width + 1) * self.m))?;
            }
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
