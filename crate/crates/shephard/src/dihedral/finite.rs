use super::extension::{ExtElement, Extension};
use super::word::{Gen, SyllableWord};
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};

/// A finite dihedral Shephard group as right-multiplication tables of s and t.
/// Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteShephard {
    /// `table[v][0]` is v.s, `table[v][1]` is v.t.
    table: Vec<[u32; 2]>,
    /// `inverse[v][g]` is v.g^-1.
    inverse: Vec<[u32; 2]>,
}

impl FiniteShephard {
    /// Z/p x Z/r, the case of edge label 2.
    pub fn product(p: u32, r: u32) -> Self {
        let n = p * r;
        let table = (0..n)
            .map(|v| {
                let (i, j) = (v / r, v % r);
                [((i + 1) % p) * r + j, i * r + (j + 1) % r]
            })
            .collect();
        Self::with_inverses(table)
    }

    /// Orbit of the identity under right multiplication by the letters s and t of
    /// the extension, which must sit over a finite triangle group.
    pub fn closure(ext: &mut Extension, budget: usize) -> Result<Self> {
        if ext.modulus().is_none() {
            return Err(Error::Inapplicable(
                "closure needs a finite extension".into(),
            ));
        }
        let mut index: HashMap<ExtElement, u32> = HashMap::new();
        let mut elements = vec![ext.identity()];
        index.insert(ext.identity(), 0);
        let mut table = Vec::new();
        let mut queue = VecDeque::from([0u32]);
        while let Some(v) = queue.pop_front() {
            let mut row = [0u32; 2];
            for (g, slot) in row.iter_mut().enumerate() {
                let next = ext.walk(&elements[v as usize].clone(), &[(g, 1)])?;
                *slot = match index.get(&next) {
                    Some(&w) => w,
                    None => {
                        if elements.len() >= budget {
                            return Err(Error::Budget(budget));
                        }
                        let w = elements.len() as u32;
                        index.insert(next.clone(), w);
                        elements.push(next);
                        queue.push_back(w);
                        w
                    }
                };
            }
            if table.len() <= v as usize {
                table.resize(v as usize + 1, [0, 0]);
            }
            table[v as usize] = row;
        }
        Ok(Self::with_inverses(table))
    }

    fn with_inverses(table: Vec<[u32; 2]>) -> Self {
        let mut inverse = vec![[0u32; 2]; table.len()];
        for (v, row) in table.iter().enumerate() {
            for g in 0..2 {
                inverse[row[g] as usize][g] = v as u32;
            }
        }
        FiniteShephard { table, inverse }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn act(&self, mut v: u32, g: Gen, e: i64) -> u32 {
        let t = if e < 0 { &self.inverse } else { &self.table };
        for _ in 0..e.unsigned_abs() {
            v = t[v as usize][g.index()];
        }
        v
    }

    pub fn multiply(&self, v: u32, w: &SyllableWord) -> u32 {
        w.syllables().iter().fold(v, |v, &(g, e)| self.act(v, g, e))
    }

    pub fn eval(&self, w: &SyllableWord) -> u32 {
        self.multiply(0, w)
    }

    pub fn is_trivial(&self, w: &SyllableWord) -> bool {
        self.eval(w) == 0
    }

    pub fn element_order(&self, w: &SyllableWord) -> u64 {
        let mut v = self.eval(w);
        let mut k = 1;
        while v != 0 {
            v = self.multiply(v, w);
            k += 1;
        }
        k
    }
}
