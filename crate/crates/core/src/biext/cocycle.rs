//! 2-cocycles `σ: G × G → Z/n` and the commutator pairing of the central
//! extension they define.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::FiniteAbelianGroup;
use crate::error::{Error, Result};

/// A 2-cocycle given by its full table, indexed `a * |G| + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    group: FiniteAbelianGroup,
    n: u64,
    table: Vec<u64>,
    label: String,
}

impl Cocycle {
    /// Checks `σ(a,b) + σ(a+b,c) = σ(b,c) + σ(a,b+c)` on every triple.
    pub fn new(group: FiniteAbelianGroup, n: u64, table: Vec<u64>, label: impl Into<String>) -> Result<Cocycle> {
        let size = group.size();
        if n == 0 {
            return Err(Error::Semantic("N = Z/n needs n >= 1".into()));
        }
        if table.len() != size * size {
            return Err(Error::structural(format!("cocycle table needs {} entries, got {}", size * size, table.len())));
        }
        let table: Vec<u64> = table.into_iter().map(|v| v % n).collect();
        let s = |a: usize, b: usize| table[a * size + b];
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    let lhs = (s(a, b) + s(group.add(a, b), c)) % n;
                    let rhs = (s(b, c) + s(a, group.add(b, c))) % n;
                    if lhs != rhs {
                        return Err(Error::structural(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            group.show(a),
                            group.show(b),
                            group.show(c)
                        )));
                    }
                }
            }
        }
        Ok(Cocycle { group, n, table, label: label.into() })
    }

    pub fn from_fn(
        group: FiniteAbelianGroup,
        n: u64,
        label: impl Into<String>,
        f: impl Fn(&[u64], &[u64]) -> u64,
    ) -> Result<Cocycle> {
        let size = group.size();
        let decoded: Vec<Vec<u64>> = (0..size).map(|i| group.decode(i)).collect();
        let table = (0..size * size).map(|k| f(&decoded[k / size], &decoded[k % size]) % n).collect();
        Cocycle::new(group, n, table, label)
    }

    /// `σ(a,b) = Σ a_i·M_ij·b_j`. The matrix must be well defined modulo the orders.
    pub fn bilinear(group: FiniteAbelianGroup, n: u64, matrix: &[Vec<u64>]) -> Result<Cocycle> {
        let label = format!("bilinear {matrix:?} on {group} -> Z/{n}");
        let m = matrix.to_vec();
        Cocycle::from_fn(group, n, label, move |a, b| {
            let mut acc = 0;
            for (i, row) in m.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    acc = (acc + a[i] * e % n * b[j]) % n;
                }
            }
            acc
        })
    }

    /// `δh(a,b) = h(a) + h(b) - h(a+b)`.
    pub fn coboundary(group: FiniteAbelianGroup, n: u64, h: &[u64]) -> Result<Cocycle> {
        let size = group.size();
        if h.len() != size {
            return Err(Error::structural("coboundary needs one value per group element"));
        }
        let table = (0..size * size)
            .map(|k| {
                let (a, b) = (k / size, k % size);
                (h[a] % n + h[b] % n + n - h[group.add(a, b)] % n) % n
            })
            .collect();
        Cocycle::new(group, n, table, format!("coboundary {h:?} on Z/{n}"))
    }

    /// The carry cocycle of `0 → Z/n → Z/n² → Z/n → 0`.
    pub fn carry(n: u64) -> Result<Cocycle> {
        let g = FiniteAbelianGroup::cyclic(n)?;
        Cocycle::from_fn(g, n, format!("carry on Z/{n}"), move |a, b| u64::from(a[0] + b[0] >= n))
    }

    /// Pointwise sum of two cocycles on the same group and coefficients.
    pub fn sum(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.group != other.group || self.n != other.n {
            return Err(Error::structural("cocycles on different groups"));
        }
        let table = self.table.iter().zip(&other.table).map(|(x, y)| (x + y) % self.n).collect();
        Cocycle::new(self.group.clone(), self.n, table, format!("{} + {}", self.label, other.label))
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self, a: usize, b: usize) -> u64 {
        self.table[a * self.group.size() + b]
    }
}

/// `σ(a,b) - σ(b,a)`.
pub fn cocycle_commutator(s: &Cocycle, a: usize, b: usize) -> u64 {
    (s.value(a, b) + s.n - s.value(b, a)) % s.n
}

/// The extension group `N ×_σ G` with `(n1,a)(n2,b) = (n1+n2+σ(a,b), a+b)`.
/// Elements are indexed `n * |G| + g`; identity and inverses are found by search.
pub struct ExtensionGroup<'a> {
    sigma: &'a Cocycle,
    identity: usize,
    inverse: Vec<usize>,
}

impl<'a> ExtensionGroup<'a> {
    pub fn new(sigma: &'a Cocycle) -> Result<ExtensionGroup<'a>> {
        let order = sigma.n as usize * sigma.group.size();
        let mut ext = ExtensionGroup { sigma, identity: 0, inverse: Vec::new() };
        ext.identity = (0..order)
            .find(|&e| (0..order).all(|x| ext.mul(e, x) == x && ext.mul(x, e) == x))
            .ok_or_else(|| Error::structural("extension has no identity"))?;
        ext.inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| ext.mul(x, y) == ext.identity)
                    .ok_or_else(|| Error::structural("extension element without inverse"))
            })
            .collect::<Result<_>>()?;
        Ok(ext)
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let g = self.sigma.group.size();
        let (n1, a) = (x / g, x % g);
        let (n2, b) = (y / g, y % g);
        let n = (n1 as u64 + n2 as u64 + self.sigma.value(a, b)) % self.sigma.n;
        n as usize * g + self.sigma.group.add(a, b)
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `ã b̃ ã⁻¹ b̃⁻¹` for the lifts `(0, a)` and `(0, b)`, read back in `N` through the
    /// embedding `n ↦ (n, 0) · identity`.
    pub fn commutator(&self, a: usize, b: usize) -> Result<u64> {
        let (x, y) = (a, b);
        let c = self.mul(self.mul(self.mul(x, y), self.inv(x)), self.inv(y));
        let g = self.sigma.group.size();
        if !c.is_multiple_of(g) {
            return Err(Error::structural("commutator is not central"));
        }
        let id_n = (self.identity / g) as u64;
        Ok(((c / g) as u64 + self.sigma.n - id_n) % self.sigma.n)
    }
}

/// Groups of order at most `max_order` built from the cyclic factors 2..=8.
pub fn small_groups(max_order: usize) -> Vec<FiniteAbelianGroup> {
    let shapes: [&[u64]; 11] = [&[2], &[3], &[4], &[5], &[6], &[7], &[8], &[2, 2], &[2, 4], &[2, 2, 2], &[3, 3]];
    shapes.iter().filter_map(|s| FiniteAbelianGroup::new(s.to_vec()).ok()).filter(|g| g.size() <= max_order).collect()
}

/// Bilinear, carry, coboundary and mixed cocycles on every group of order at most
/// `max_order`, with coefficients in `Z/2`, `Z/3` and `Z/4`.
pub fn cocycle_family(max_order: usize, seed: u64) -> Vec<Cocycle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for g in small_groups(max_order) {
        for n in [2u64, 3, 4] {
            let r = g.rank();
            let step: Vec<Vec<u64>> =
                (0..r).map(|i| (0..r).map(|j| n / gcd(n, gcd(g.orders()[i], g.orders()[j]))).collect()).collect();
            let mut forms = vec![vec![vec![0; r]; r]];
            for _ in 0..3 {
                forms.push(step.iter().map(|row| row.iter().map(|&s| s * rng.gen_range(0..n)).collect()).collect());
            }
            if r == 2 {
                // the symplectic-style form a_2·b_1
                let mut m = vec![vec![0; 2]; 2];
                m[1][0] = step[1][0];
                forms.push(m);
            }
            for m in &forms {
                let Ok(bil) = Cocycle::bilinear(g.clone(), n, m) else { continue };
                let h: Vec<u64> = (0..g.size()).map(|_| rng.gen_range(0..n)).collect();
                let cob = Cocycle::coboundary(g.clone(), n, &h).expect("coboundaries are cocycles");
                out.push(bil.sum(&cob).expect("same group"));
                out.push(bil);
            }
            if g.rank() == 1 && g.orders()[0] == n {
                out.push(Cocycle::carry(n).expect("carry is a cocycle"));
            }
        }
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compares `σ(a,b) - σ(b,a)` with the literal commutator for every pair and returns
/// the number of mismatches.
pub fn check_cocycle_commutator(s: &Cocycle) -> Result<(u64, u64)> {
    let ext = ExtensionGroup::new(s)?;
    let size = s.group.size();
    let mut mismatches = 0;
    for a in 0..size {
        for b in 0..size {
            if ext.commutator(a, b)? != cocycle_commutator(s, a, b) {
                mismatches += 1;
            }
        }
    }
    Ok(((size * size) as u64, mismatches))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_example() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let s = Cocycle::from_fn(g.clone(), 2, "a2 b1", |a, b| a[1] * b[0]).unwrap();
        let ext = ExtensionGroup::new(&s).unwrap();
        assert_eq!(ext.order(), 8);
        for a in 0..4 {
            for b in 0..4 {
                let (x, y) = (g.decode(a), g.decode(b));
                let expected = (x[1] * y[0] + 2 - (x[0] * y[1]) % 2) % 2;
                assert_eq!(cocycle_commutator(&s, a, b), expected);
                assert_eq!(ext.commutator(a, b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn broken_cocycle_is_rejected() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        let err = Cocycle::new(g, 2, vec![0, 1, 0, 0], "").unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn carry_has_a_shifted_identity() {
        // σ(0,0) = 0 here; add a constant to move the identity away from (0, 0)
        let g = FiniteAbelianGroup::cyclic(3).unwrap();
        let shifted = Cocycle::from_fn(g, 3, "const", |_, _| 1).unwrap();
        let ext = ExtensionGroup::new(&shifted).unwrap();
        assert_ne!(ext.identity, 0);
        assert_eq!(ext.commutator(1, 2).unwrap(), 0);
    }

    #[test]
    fn family_matches_literal_commutators() {
        let family = cocycle_family(8, 1);
        assert!(family.len() > 50);
        for s in &family {
            assert_eq!(check_cocycle_commutator(s).unwrap().1, 0, "{}", s.label());
        }
    }
}
