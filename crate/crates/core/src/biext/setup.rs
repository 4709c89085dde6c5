//! Bilinear pairings `A × A' → Z/n` with subgroups `B, C ⊆ A` and `B', C' ⊆ A'`,
//! the transport action on the trivial biextension and the quotient Weil pairing.

use std::collections::HashMap;
use std::fmt;

use super::group::FiniteAbelianGroup;
use crate::error::{Error, Result};

/// The data of a pairing setup. Subgroups are stored as sorted element lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingSetup {
    a: FiniteAbelianGroup,
    ap: FiniteAbelianGroup,
    n: u64,
    matrix: Vec<Vec<u64>>,
    b: Vec<usize>,
    c: Vec<usize>,
    bp: Vec<usize>,
    cp: Vec<usize>,
}

/// Which of the four subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sub {
    B,
    C,
    Bp,
    Cp,
}

impl PairingSetup {
    /// `⟨a, a'⟩ = Σ a_i·M_ij·a'_j mod n`. The matrix must be compatible with the
    /// cyclic orders so the form is well defined.
    pub fn new(
        a: FiniteAbelianGroup,
        ap: FiniteAbelianGroup,
        n: u64,
        matrix: Vec<Vec<u64>>,
        gens: [Vec<Vec<u64>>; 4],
    ) -> Result<PairingSetup> {
        if n == 0 {
            return Err(Error::Semantic("N = Z/n needs n >= 1".into()));
        }
        if matrix.len() != a.rank() || matrix.iter().any(|row| row.len() != ap.rank()) {
            return Err(Error::Semantic(format!("pairing matrix must be {} x {}", a.rank(), ap.rank())));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if !(a.orders()[i] * m).is_multiple_of(n) || !(ap.orders()[j] * m).is_multiple_of(n) {
                    return Err(Error::Semantic(format!(
                        "matrix entry ({i},{j}) = {m} is not well defined on Z/{} x Z/{} -> Z/{n}",
                        a.orders()[i],
                        ap.orders()[j]
                    )));
                }
            }
        }
        let matrix = matrix.into_iter().map(|r| r.into_iter().map(|m| m % n).collect()).collect();
        let [gb, gc, gbp, gcp] = gens;
        let span = |g: &FiniteAbelianGroup, gens: &[Vec<u64>]| -> Result<Vec<usize>> {
            let idx = gens.iter().map(|v| g.encode(v)).collect::<Result<Vec<_>>>()?;
            Ok(g.span(&idx))
        };
        Ok(PairingSetup {
            b: span(&a, &gb)?,
            c: span(&a, &gc)?,
            bp: span(&ap, &gbp)?,
            cp: span(&ap, &gcp)?,
            a,
            ap,
            n,
            matrix,
        })
    }

    pub fn a(&self) -> &FiniteAbelianGroup {
        &self.a
    }

    pub fn ap(&self) -> &FiniteAbelianGroup {
        &self.ap
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn subgroup(&self, which: Sub) -> &[usize] {
        match which {
            Sub::B => &self.b,
            Sub::C => &self.c,
            Sub::Bp => &self.bp,
            Sub::Cp => &self.cp,
        }
    }

    pub fn contains(&self, which: Sub, x: usize) -> bool {
        self.subgroup(which).binary_search(&x).is_ok()
    }

    /// The pairing on element indices.
    pub fn pair(&self, x: usize, y: usize) -> u64 {
        let (dx, dy) = (self.a.digits(x), self.ap.digits(y));
        let mut acc = 0u64;
        for (i, row) in self.matrix.iter().enumerate() {
            if dx[i] == 0 {
                continue;
            }
            for (j, &m) in row.iter().enumerate() {
                acc = (acc + dx[i] * m % self.n * dy[j]) % self.n;
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.ap && self.b == self.bp && self.c == self.cp
    }

    /// True when `⟨x, x⟩ = 0` for every `x` (only meaningful when `A = A'`).
    pub fn is_alternating(&self) -> bool {
        self.a == self.ap && (0..self.a.size()).all(|x| self.pair(x, x) == 0)
    }

    fn n_sub(&self, x: u64, y: u64) -> u64 {
        (x + self.n - y % self.n) % self.n
    }

    fn n_add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.n
    }
}

/// One of the four vanishing conditions, with a witness pair when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetupCheck {
    pub name: &'static str,
    pub witness: Option<(String, String, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetupReport {
    pub checks: Vec<SetupCheck>,
}

impl SetupReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }
}

impl fmt::Display for SetupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "pass {}", c.name)?,
                Some((x, y, v)) => writeln!(f, "FAIL {} witness <{x},{y}> = {v}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Checks `⟨B,B'⟩ = 0`, `⟨C,C'⟩ = 0`, `⟨B∩C, A'⟩ = 0` and `⟨A, B'∩C'⟩ = 0` over every
/// element pair.
pub fn validate_setup(s: &PairingSetup) -> SetupReport {
    let inter =
        |x: &[usize], y: &[usize]| -> Vec<usize> { x.iter().copied().filter(|e| y.binary_search(e).is_ok()).collect() };
    let all_a: Vec<usize> = (0..s.a.size()).collect();
    let all_ap: Vec<usize> = (0..s.ap.size()).collect();
    let cases: [(&'static str, Vec<usize>, Vec<usize>); 4] = [
        ("<B,B'> = 0", s.b.clone(), s.bp.clone()),
        ("<C,C'> = 0", s.c.clone(), s.cp.clone()),
        ("<B∩C,A'> = 0", inter(&s.b, &s.c), all_ap),
        ("<A,B'∩C'> = 0", all_a, inter(&s.bp, &s.cp)),
    ];
    let checks = cases
        .into_iter()
        .map(|(name, xs, ys)| {
            let witness = xs.iter().find_map(|&x| {
                ys.iter().find(|&&y| s.pair(x, y) != 0).map(|&y| (s.a.show(x), s.ap.show(y), s.pair(x, y)))
            });
            SetupCheck { name, witness }
        })
        .collect();
    SetupReport { checks }
}

/// A point `(a, a')` of the trivial biextension together with its value in `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsorPoint {
    pub a: usize,
    pub ap: usize,
    pub value: u64,
}

/// Acting element `(b, c, b', c')` of `(B × C) × (B' × C')`.
pub type Acting = (usize, usize, usize, usize);

/// Moves `t` from the fibre over `(a, a')` to the fibre over `(a+b+c, a'+b'+c')`,
/// adding `⟨c, a'⟩ + ⟨a, b'⟩ + ⟨c, b'⟩` to the value.
pub fn transport(s: &PairingSetup, t: &TorsorPoint, g: Acting) -> Result<TorsorPoint> {
    let (b, c, bp, cp) = g;
    for (which, x, name) in [(Sub::B, b, "b"), (Sub::C, c, "c"), (Sub::Bp, bp, "b'"), (Sub::Cp, cp, "c'")] {
        let size = if matches!(which, Sub::B | Sub::C) { s.a.size() } else { s.ap.size() };
        if x >= size || !s.contains(which, x) {
            return Err(Error::domain(format!("{name} is not in its subgroup")));
        }
    }
    Ok(transport_unchecked(s, t, g))
}

fn transport_unchecked(s: &PairingSetup, t: &TorsorPoint, (b, c, bp, cp): Acting) -> TorsorPoint {
    let shift = s.n_add(s.n_add(s.pair(c, t.ap), s.pair(t.a, bp)), s.pair(c, bp));
    TorsorPoint { a: s.a.add(s.a.add(t.a, b), c), ap: s.ap.add(s.ap.add(t.ap, bp), cp), value: s.n_add(t.value, shift) }
}

/// All `(b, c)` with `b + c = x`, `b ∈ B`, `c ∈ C` (or the primed version).
pub fn decompositions(s: &PairingSetup, primed: bool, x: usize) -> Vec<(usize, usize)> {
    let (g, bs, cs) = if primed { (&s.ap, &s.bp, &s.cp) } else { (&s.a, &s.b, &s.c) };
    let mut out = Vec::new();
    for &b in bs {
        let c = g.sub(x, b);
        if cs.binary_search(&c).is_ok() {
            out.push((b, c));
        }
    }
    out
}

/// `φ_m(ā, ā') = ⟨a, b'⟩ - ⟨c, a'⟩` for `m·a = b + c` and `m·a' = b' + c'`, checked
/// to be the same for every decomposition.
pub fn quotient_weil_pairing(s: &PairingSetup, a: usize, ap: usize, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    let da = decompositions(s, false, s.a.scale(m as i64, a));
    let dap = decompositions(s, true, s.ap.scale(m as i64, ap));
    if da.is_empty() || dap.is_empty() {
        let which = if da.is_empty() { s.a.show(a) } else { s.ap.show(ap) };
        return Err(Error::domain(format!("the class of {which} is not {m}-torsion in the quotient")));
    }
    let mut value = None;
    for &(_, c) in &da {
        for &(bp, _) in &dap {
            let v = s.n_sub(s.pair(a, bp), s.pair(c, ap));
            match value {
                None => value = Some(v),
                Some(w) if w != v => {
                    return Err(Error::structural(format!("value depends on the decomposition: {w} vs {v}")))
                }
                _ => {}
            }
        }
    }
    Ok(value.unwrap())
}

/// Outcome of one exhaustive property scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exhaustive {
    pub property: String,
    pub cases: u64,
    pub counterexamples: u64,
    pub first: Option<String>,
}

impl Exhaustive {
    fn new(property: impl Into<String>) -> Exhaustive {
        Exhaustive { property: property.into(), cases: 0, counterexamples: 0, first: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.counterexamples += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

impl fmt::Display for Exhaustive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status} {}: {} cases, {} counterexamples", self.property, self.cases, self.counterexamples)?;
        if let Some(w) = &self.first {
            write!(f, " (first: {w})")?;
        }
        Ok(())
    }
}

fn acting_elements(s: &PairingSetup) -> Vec<Acting> {
    let mut out = Vec::new();
    for &b in &s.b {
        for &c in &s.c {
            for &bp in &s.bp {
                for &cp in &s.cp {
                    out.push((b, c, bp, cp));
                }
            }
        }
    }
    out
}

/// Addition and pairing tables for the exhaustive scans.
struct Tables {
    n: u64,
    size_a: usize,
    size_ap: usize,
    add_a: Vec<usize>,
    add_ap: Vec<usize>,
    pair: Vec<u64>,
}

impl Tables {
    fn new(s: &PairingSetup) -> Tables {
        let (na, nap) = (s.a.size(), s.ap.size());
        let table = |g: &FiniteAbelianGroup| -> Vec<usize> {
            (0..g.size() * g.size()).map(|k| g.add(k / g.size(), k % g.size())).collect()
        };
        Tables {
            n: s.n,
            size_a: na,
            size_ap: nap,
            add_a: table(&s.a),
            add_ap: table(&s.ap),
            pair: (0..na * nap).map(|k| s.pair(k / nap, k % nap)).collect(),
        }
    }

    fn add_a(&self, x: usize, y: usize) -> usize {
        self.add_a[x * self.size_a + y]
    }

    fn add_ap(&self, x: usize, y: usize) -> usize {
        self.add_ap[x * self.size_ap + y]
    }

    fn pair(&self, x: usize, y: usize) -> u64 {
        self.pair[x * self.size_ap + y]
    }

    fn n_add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.n
    }

    fn transport(&self, t: &TorsorPoint, (b, c, bp, cp): Acting) -> TorsorPoint {
        let shift = self.pair(c, t.ap) + self.pair(t.a, bp) + self.pair(c, bp);
        TorsorPoint {
            a: self.add_a(self.add_a(t.a, b), c),
            ap: self.add_ap(self.add_ap(t.ap, bp), cp),
            value: (t.value + shift) % self.n,
        }
    }
}

/// Transport depends only on `b + c` and `b' + c'`.
pub fn check_decomposition_independence(s: &PairingSetup) -> Exhaustive {
    let tb = Tables::new(s);
    let mut r = Exhaustive::new("transport is independent of the decomposition");
    let acting = acting_elements(s);
    for a in 0..s.a.size() {
        for ap in 0..s.ap.size() {
            let t = TorsorPoint { a, ap, value: 0 };
            let mut seen: HashMap<(usize, usize), u64> = HashMap::new();
            for &g in &acting {
                let out = tb.transport(&t, g);
                let key = (out.a, out.ap);
                match seen.get(&key) {
                    Some(&v) => {
                        r.record(v == out.value, || format!("at ({},{}) via {g:?}", s.a.show(a), s.ap.show(ap)))
                    }
                    None => {
                        seen.insert(key, out.value);
                    }
                }
            }
        }
    }
    r
}

/// Transporting by `g1` then `g2` equals transporting by `g1 + g2`. Values shift
/// by a constant under transport, so starting values of 0 cover every fibre.
pub fn check_group_action(s: &PairingSetup) -> Exhaustive {
    let tb = Tables::new(s);
    let mut r = Exhaustive::new("transport is a group action");
    let acting = acting_elements(s);
    let sum = |(b1, c1, bp1, cp1): Acting, (b2, c2, bp2, cp2): Acting| -> Acting {
        (tb.add_a(b1, b2), tb.add_a(c1, c2), tb.add_ap(bp1, bp2), tb.add_ap(cp1, cp2))
    };
    for a in 0..s.a.size() {
        for ap in 0..s.ap.size() {
            let t = TorsorPoint { a, ap, value: 0 };
            for &g1 in &acting {
                let once = tb.transport(&t, g1);
                for &g2 in &acting {
                    let twice = tb.transport(&once, g2);
                    let direct = tb.transport(&t, sum(g1, g2));
                    r.record(twice == direct, || format!("at ({},{}) with {g1:?}, {g2:?}", s.a.show(a), s.ap.show(ap)));
                }
            }
        }
    }
    r
}

/// Transport is compatible with both partial group laws of the trivial biextension:
/// `(a1,a')·(a2,a') ↦ (a1+a2, a')` and `(a,a1')·(a,a2') ↦ (a, a1'+a2')` on values by addition.
pub fn check_partial_laws(s: &PairingSetup) -> [Exhaustive; 2] {
    let tb = Tables::new(s);
    let mut first = Exhaustive::new("transport commutes with the first partial law");
    let mut second = Exhaustive::new("transport commutes with the second partial law");
    let bc: Vec<(usize, usize)> = s.b.iter().flat_map(|&b| s.c.iter().map(move |&c| (b, c))).collect();
    let bcp: Vec<(usize, usize)> = s.bp.iter().flat_map(|&b| s.cp.iter().map(move |&c| (b, c))).collect();
    let compose = |t1: &TorsorPoint, t2: &TorsorPoint, first_law: bool| -> TorsorPoint {
        if first_law {
            TorsorPoint { a: tb.add_a(t1.a, t2.a), ap: t1.ap, value: tb.n_add(t1.value, t2.value) }
        } else {
            TorsorPoint { a: t1.a, ap: tb.add_ap(t1.ap, t2.ap), value: tb.n_add(t1.value, t2.value) }
        }
    };
    for a1 in 0..s.a.size() {
        for a2 in 0..s.a.size() {
            for ap in 0..s.ap.size() {
                let t1 = TorsorPoint { a: a1, ap, value: 0 };
                let t2 = TorsorPoint { a: a2, ap, value: 0 };
                let prod = compose(&t1, &t2, true);
                for &(b1, c1) in &bc {
                    for &(b2, c2) in &bc {
                        for &(bp, cp) in &bcp {
                            let x = tb.transport(&t1, (b1, c1, bp, cp));
                            let y = tb.transport(&t2, (b2, c2, bp, cp));
                            let lhs = compose(&x, &y, true);
                            let rhs = tb.transport(&prod, (tb.add_a(b1, b2), tb.add_a(c1, c2), bp, cp));
                            first.record(lhs == rhs, || {
                                format!("a1={} a2={} a'={}", s.a.show(a1), s.a.show(a2), s.ap.show(ap))
                            });
                        }
                    }
                }
            }
        }
    }
    for a in 0..s.a.size() {
        for ap1 in 0..s.ap.size() {
            for ap2 in 0..s.ap.size() {
                let t1 = TorsorPoint { a, ap: ap1, value: 0 };
                let t2 = TorsorPoint { a, ap: ap2, value: 0 };
                let prod = compose(&t1, &t2, false);
                for &(b, c) in &bc {
                    for &(bp1, cp1) in &bcp {
                        for &(bp2, cp2) in &bcp {
                            let x = tb.transport(&t1, (b, c, bp1, cp1));
                            let y = tb.transport(&t2, (b, c, bp2, cp2));
                            let lhs = compose(&x, &y, false);
                            let rhs = tb.transport(&prod, (b, c, tb.add_ap(bp1, bp2), tb.add_ap(cp1, cp2)));
                            second.record(lhs == rhs, || {
                                format!("a={} a1'={} a2'={}", s.a.show(a), s.ap.show(ap1), s.ap.show(ap2))
                            });
                        }
                    }
                }
            }
        }
    }
    [first, second]
}

/// Decomposition independence, class invariance, bilinearity and `N_m`-values of the
/// quotient pairing, plus skew-symmetry for symmetric setups with an alternating pairing.
pub fn check_quotient_pairing(s: &PairingSetup, m: u64) -> Vec<Exhaustive> {
    let mut indep = Exhaustive::new(format!("phi_{m} is independent of the decomposition"));
    let mut torsion = Exhaustive::new(format!("phi_{m} takes values in N_{m}"));
    let mut classes = Exhaustive::new(format!("phi_{m} depends only on the classes"));
    let mut bilinear = Exhaustive::new(format!("phi_{m} is bilinear"));
    let mut skew = Exhaustive::new(format!("phi_{m} is skew-symmetric"));

    let ta: Vec<usize> =
        (0..s.a.size()).filter(|&a| !decompositions(s, false, s.a.scale(m as i64, a)).is_empty()).collect();
    let tap: Vec<usize> =
        (0..s.ap.size()).filter(|&a| !decompositions(s, true, s.ap.scale(m as i64, a)).is_empty()).collect();
    let mut phi: HashMap<(usize, usize), u64> = HashMap::new();
    for &a in &ta {
        for &ap in &tap {
            match quotient_weil_pairing(s, a, ap, m) {
                Ok(v) => {
                    indep.record(true, String::new);
                    torsion.record((v * m).is_multiple_of(s.n), || {
                        format!("phi({},{}) = {v}", s.a.show(a), s.ap.show(ap))
                    });
                    phi.insert((a, ap), v);
                }
                Err(e) => indep.record(false, || format!("({},{}): {e}", s.a.show(a), s.ap.show(ap))),
            }
        }
    }
    let bc: Vec<usize> = s.b.iter().flat_map(|&b| s.c.iter().map(move |&c| s.a.add(b, c))).collect();
    let bcp: Vec<usize> = s.bp.iter().flat_map(|&b| s.cp.iter().map(move |&c| s.ap.add(b, c))).collect();
    for (&(a, ap), &v) in &phi {
        for &x in &bc {
            if let Some(&w) = phi.get(&(s.a.add(a, x), ap)) {
                classes.record(v == w, || format!("a={} shifted by {}", s.a.show(a), s.a.show(x)));
            }
        }
        for &x in &bcp {
            if let Some(&w) = phi.get(&(a, s.ap.add(ap, x))) {
                classes.record(v == w, || format!("a'={} shifted by {}", s.ap.show(ap), s.ap.show(x)));
            }
        }
    }
    for &a1 in &ta {
        for &a2 in &ta {
            for &ap in &tap {
                let (Some(&x), Some(&y), Some(&z)) =
                    (phi.get(&(a1, ap)), phi.get(&(a2, ap)), phi.get(&(s.a.add(a1, a2), ap)))
                else {
                    continue;
                };
                bilinear.record(s.n_add(x, y) == z, || {
                    format!("first slot {} + {} at {}", s.a.show(a1), s.a.show(a2), s.ap.show(ap))
                });
            }
        }
    }
    for &a in &ta {
        for &ap1 in &tap {
            for &ap2 in &tap {
                let (Some(&x), Some(&y), Some(&z)) =
                    (phi.get(&(a, ap1)), phi.get(&(a, ap2)), phi.get(&(a, s.ap.add(ap1, ap2))))
                else {
                    continue;
                };
                bilinear.record(s.n_add(x, y) == z, || {
                    format!("second slot {} + {} at {}", s.ap.show(ap1), s.ap.show(ap2), s.a.show(a))
                });
            }
        }
    }
    let mut out = vec![indep, torsion, classes, bilinear];
    if s.is_symmetric() && s.is_alternating() {
        for (&(a, ap), &v) in &phi {
            if let Some(&w) = phi.get(&(ap, a)) {
                skew.record(s.n_add(v, w) == 0, || format!("({},{})", s.a.show(a), s.ap.show(ap)));
            }
        }
        out.push(skew);
    }
    out
}

/// Every exhaustive scan for one setup and the given values of `m`.
pub fn verify_setup(s: &PairingSetup, ms: &[u64]) -> Vec<Exhaustive> {
    let mut out = vec![check_decomposition_independence(s), check_group_action(s)];
    out.extend(check_partial_laws(s));
    for &m in ms {
        out.extend(check_quotient_pairing(s, m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z4_example(c: Vec<Vec<u64>>) -> PairingSetup {
        let g = FiniteAbelianGroup::cyclic(4).unwrap();
        PairingSetup::new(g.clone(), g, 4, vec![vec![1]], [vec![], c.clone(), vec![], c]).unwrap()
    }

    #[test]
    fn z4_validation() {
        let s = z4_example(vec![vec![2]]);
        assert!(validate_setup(&s).passed());
        let bad = z4_example(vec![vec![1]]);
        let report = validate_setup(&bad);
        assert!(!report.passed());
        assert_eq!(report.checks[1].witness, Some(("1".into(), "1".into(), 1)));
    }

    #[test]
    fn z4_transport_and_pairing() {
        let s = z4_example(vec![vec![2]]);
        let t = TorsorPoint { a: 1, ap: 1, value: 0 };
        let out = transport(&s, &t, (0, 2, 0, 2)).unwrap();
        assert_eq!(out, TorsorPoint { a: 3, ap: 3, value: 2 });
        assert_eq!(transport(&s, &t, (0, 0, 0, 0)).unwrap(), t);
        assert!(transport(&s, &t, (0, 1, 0, 0)).is_err());
        assert_eq!(quotient_weil_pairing(&s, 1, 1, 2).unwrap(), 2);
        assert!(quotient_weil_pairing(&s, 1, 1, 1).unwrap_err().to_string().contains("torsion"));
        assert_eq!(quotient_weil_pairing(&s, 2, 2, 1).unwrap(), 0);
        for r in verify_setup(&s, &[1, 2, 4]) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn trivial_pairing_is_always_fine() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let s = PairingSetup::new(
            g.clone(),
            g,
            3,
            vec![vec![0, 0], vec![0, 0]],
            [vec![vec![1, 0]], vec![vec![1, 1]], vec![], vec![vec![0, 1]]],
        )
        .unwrap();
        assert!(validate_setup(&s).passed());
        assert_eq!(quotient_weil_pairing(&s, 1, 1, 2).unwrap(), 0);
    }

    #[test]
    fn ill_defined_matrix_is_rejected() {
        let g = FiniteAbelianGroup::cyclic(2).unwrap();
        assert!(PairingSetup::new(g.clone(), g, 4, vec![vec![1]], Default::default()).is_err());
    }
}
