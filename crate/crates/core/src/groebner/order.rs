use std::cmp::Ordering;

use crate::arith::Monomial;

/// How monomials are compared inside one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Lex,
    DegRevLex,
}

/// A group of variables compared together, most significant first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub vars: Vec<usize>,
    pub kind: BlockKind,
}

/// A monomial order. Block orders compare block by block; variables not
/// listed in any block form an implicit trailing degrevlex block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block(Vec<OrderBlock>),
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    /// Degrevlex on `elim`, then degrevlex on everything else. Any element
    /// whose leading monomial avoids `elim` avoids it entirely.
    pub fn elimination(nvars: usize, elim: &[usize]) -> Self {
        let rest: Vec<usize> = (0..nvars).filter(|v| !elim.contains(v)).collect();
        MonomialOrder::Block(vec![
            OrderBlock {
                vars: elim.to_vec(),
                kind: BlockKind::DegRevLex,
            },
            OrderBlock {
                vars: rest,
                kind: BlockKind::DegRevLex,
            },
        ])
    }

    /// Degrevlex with the variables ranked in the given order (last is smallest).
    pub fn degrevlex_ranked(vars: Vec<usize>) -> Self {
        MonomialOrder::Block(vec![OrderBlock {
            vars,
            kind: BlockKind::DegRevLex,
        }])
    }

    /// True when the leading block consists exactly of `vars`.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        match self {
            MonomialOrder::Lex => vars.iter().enumerate().all(|(i, &v)| i == v),
            MonomialOrder::DegRevLex => false,
            MonomialOrder::Block(blocks) => blocks.first().is_some_and(|b| {
                let mut a = b.vars.clone();
                let mut c = vars.to_vec();
                a.sort_unstable();
                c.sort_unstable();
                a == c
            }),
        }
    }

    pub(crate) fn compile(&self, nvars: usize) -> CompiledOrder {
        let blocks = match self {
            MonomialOrder::Lex => vec![((0..nvars).collect(), BlockKind::Lex)],
            MonomialOrder::DegRevLex => vec![((0..nvars).collect(), BlockKind::DegRevLex)],
            MonomialOrder::Block(blocks) => {
                let mut seen = vec![false; nvars];
                let mut out: Vec<(Vec<usize>, BlockKind)> = Vec::new();
                for b in blocks {
                    let vars: Vec<usize> = b
                        .vars
                        .iter()
                        .copied()
                        .filter(|&v| v < nvars && !std::mem::replace(&mut seen[v], true))
                        .collect();
                    if !vars.is_empty() {
                        out.push((vars, b.kind));
                    }
                }
                let rest: Vec<usize> = (0..nvars).filter(|&v| !seen[v]).collect();
                if !rest.is_empty() {
                    out.push((rest, BlockKind::DegRevLex));
                }
                out
            }
        };
        CompiledOrder { blocks }
    }

    /// Compares two monomials. Convenience path; the engine compiles once.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compile(a.nvars()).cmp(a.exponents(), b.exponents())
    }
}

#[derive(Clone, Debug)]
pub(crate) struct CompiledOrder {
    blocks: Vec<(Vec<usize>, BlockKind)>,
}

impl CompiledOrder {
    #[inline]
    pub(crate) fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for (vars, kind) in &self.blocks {
            let o = match kind {
                BlockKind::Lex => {
                    let mut o = Ordering::Equal;
                    for &v in vars {
                        if a[v] != b[v] {
                            o = a[v].cmp(&b[v]);
                            break;
                        }
                    }
                    o
                }
                BlockKind::DegRevLex => {
                    let da: u32 = vars.iter().map(|&v| a[v]).sum();
                    let db: u32 = vars.iter().map(|&v| b[v]).sum();
                    if da != db {
                        da.cmp(&db)
                    } else {
                        let mut o = Ordering::Equal;
                        for &v in vars.iter().rev() {
                            if a[v] != b[v] {
                                o = b[v].cmp(&a[v]);
                                break;
                            }
                        }
                        o
                    }
                }
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}
