use std::fmt;

use crate::error::{Error, Result};

/// Most cyclic factors a group may have.
pub const MAX_RANK: usize = 8;

/// `Z/o_1 × ... × Z/o_r`. Elements are addressed by a mixed-radix index with
/// the first coordinate most significant, so index order is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    size: usize,
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.orders.iter().map(|o| format!("Z/{o}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<FiniteAbelianGroup> {
        if orders.len() > MAX_RANK {
            return Err(Error::Semantic(format!("at most {MAX_RANK} cyclic factors are supported")));
        }
        if orders.contains(&0) {
            return Err(Error::Semantic("cyclic orders must be at least 1".into()));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o as usize).filter(|&s| s <= 1 << 24))
            .ok_or_else(|| Error::Semantic("group too large to enumerate".into()))?;
        Ok(FiniteAbelianGroup { orders, size })
    }

    pub fn cyclic(n: u64) -> Result<FiniteAbelianGroup> {
        FiniteAbelianGroup::new(vec![n])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Index of a tuple; coordinates are reduced modulo the orders.
    pub fn encode(&self, v: &[u64]) -> Result<usize> {
        if v.len() != self.orders.len() {
            return Err(Error::structural(format!(
                "element has {} coordinates, group {} has rank {}",
                v.len(),
                self,
                self.rank()
            )));
        }
        Ok(v.iter().zip(&self.orders).fold(0usize, |acc, (&x, &o)| acc * o as usize + (x % o) as usize))
    }

    pub fn decode(&self, mut i: usize) -> Vec<u64> {
        let mut v = vec![0; self.orders.len()];
        for (slot, &o) in v.iter_mut().zip(&self.orders).rev() {
            *slot = (i % o as usize) as u64;
            i /= o as usize;
        }
        v
    }

    pub(crate) fn digits(&self, mut i: usize) -> [u64; MAX_RANK] {
        let mut d = [0; MAX_RANK];
        for (slot, &o) in d[..self.orders.len()].iter_mut().zip(&self.orders).rev() {
            *slot = (i % o as usize) as u64;
            i /= o as usize;
        }
        d
    }

    fn combine(&self, a: usize, b: usize, f: impl Fn(u64, u64, u64) -> u64) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut acc = 0usize;
        for (k, &o) in self.orders.iter().enumerate() {
            acc = acc * o as usize + f(da[k], db[k], o) as usize;
        }
        acc
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, o| (x + y) % o)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.combine(a, b, |x, y, o| (x + o - y) % o)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.sub(0, a)
    }

    pub fn scale(&self, n: i64, a: usize) -> usize {
        let d = self.digits(a);
        let mut acc = 0usize;
        for (k, &o) in self.orders.iter().enumerate() {
            let v = (n.rem_euclid(o as i64) as u64 * d[k]) % o;
            acc = acc * o as usize + v as usize;
        }
        acc
    }

    /// The subgroup generated by `gens`, as sorted indices.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        seen[0] = true;
        let mut frontier = vec![0usize];
        let mut out = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    frontier.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Renders an element as `3` (rank 1) or `(1,2)`.
    pub fn show(&self, i: usize) -> String {
        let v = self.decode(i);
        if v.len() == 1 {
            v[0].to_string()
        } else {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_spans() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        assert_eq!(g.size(), 8);
        let a = g.encode(&[1, 3]).unwrap();
        assert_eq!(g.decode(a), [1, 3]);
        assert_eq!(g.decode(g.add(a, a)), [0, 2]);
        assert_eq!(g.decode(g.neg(a)), [1, 1]);
        assert_eq!(g.decode(g.scale(-1, a)), [1, 1]);
        assert_eq!(g.span(&[a]).len(), 4);
        assert_eq!(g.show(a), "(1,3)");
        assert_eq!(g.to_string(), "Z/2 x Z/4");
    }
}
