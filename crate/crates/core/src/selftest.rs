//! A quick run of the library's invariants, used by the `selftest` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biext::{check_cocycle_commutator, cocycle_family, curated_setups, verify_setup};
use crate::curve::{point_add, random_divisor, random_function, riemann_roch, torsion_points, Curve, Divisor, Place};
use crate::error::Result;
use crate::ff::Field;
use crate::idele::{
    check_pairing_conditions, commutator_pairing, random_idele, random_principal_idele, random_unit_idele,
};
use crate::shadow::CurveShadow;
use crate::tame::weil_reciprocity;
use crate::weil::{weil_pairing_adelic, weil_pairing_miller};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfTestLine {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

impl SelfTestLine {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl std::fmt::Display for SelfTestLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status} {} ({} cases, {} failures)", self.name, self.cases, self.failures)
    }
}

/// The curves the suite samples on.
pub fn sample_curves() -> Result<Vec<Curve>> {
    let k5 = Field::prime(5)?;
    let k7 = Field::prime(7)?;
    Ok(vec![
        Curve::projective_line(&k5),
        Curve::projective_line(&k7),
        Curve::projective_line(&Field::gf(3, 2)?),
        Curve::elliptic(&k5, k5.from_u64(4), k5.zero())?,
        Curve::elliptic(&k7, k7.zero(), k7.from_u64(2))?,
    ])
}

fn line(name: impl Into<String>, results: impl IntoIterator<Item = bool>) -> SelfTestLine {
    let (mut cases, mut failures) = (0, 0);
    for ok in results {
        cases += 1;
        failures += usize::from(!ok);
    }
    SelfTestLine { name: name.into(), cases, failures }
}

fn torsion_basis(curve: &Curve, m: u64) -> Result<Vec<Place>> {
    let pts = torsion_points(curve, m)?;
    let p = pts.iter().find(|x| **x != Place::Origin).cloned();
    let Some(p) = p else { return Ok(Vec::new()) };
    let mut span = vec![Place::Origin];
    let mut t = p.clone();
    while t != Place::Origin {
        span.push(t.clone());
        t = point_add(curve, &t, &p)?;
    }
    Ok(match pts.iter().find(|x| !span.contains(x)) {
        Some(q) => vec![p, q.clone()],
        None => vec![p],
    })
}

fn pt_divisor(curve: &Curve, p: &Place) -> Result<Divisor> {
    Divisor::from_terms(curve, [(p.clone(), 1), (Place::Origin, -1)])
}

/// Runs every check with `samples` random instances where sampling applies.
pub fn run_selftest(samples: usize, seed: u64) -> Result<Vec<SelfTestLine>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let curves = sample_curves()?;
    let mut out = Vec::new();

    for c in &curves {
        let mut results = Vec::new();
        for _ in 0..samples {
            let f = random_function(c, 3, &mut rng);
            let g = random_function(c, 3, &mut rng);
            results.push(weil_reciprocity(&f, &g)?.is_one());
        }
        out.push(line(format!("reciprocity on {c}"), results));
    }

    for c in &curves {
        let mut results = Vec::new();
        for _ in 0..samples {
            let (a, b, x) = (random_idele(c, &mut rng)?, random_idele(c, &mut rng)?, random_idele(c, &mut rng)?);
            let ab = commutator_pairing(&a.checked_mul(&b)?, &x)?;
            results.push(ab == &commutator_pairing(&a, &x)? * &commutator_pairing(&b, &x)?);
            results.push((&commutator_pairing(&a, &b)? * &commutator_pairing(&b, &a)?).is_one());
            let (p, q) = (random_principal_idele(c, &mut rng), random_principal_idele(c, &mut rng));
            results.push(commutator_pairing(&p, &q)?.is_one());
            let (u, v) = (random_unit_idele(c, &mut rng)?, random_unit_idele(c, &mut rng)?);
            results.push(commutator_pairing(&u, &v)?.is_one());
        }
        out.push(line(format!("idele pairing laws on {c}"), results));
        let report = check_pairing_conditions(c, samples, rng.gen())?;
        out.push(line(format!("pairing conditions on {c}"), report.checks.iter().map(|r| r.passed())));
    }

    for c in curves.iter().filter(|c| !c.is_line()) {
        for m in [2u64, 3] {
            let pts = torsion_points(c, m)?;
            if pts.len() < 2 {
                continue;
            }
            let mut results = Vec::new();
            for p in &pts {
                for q in &pts {
                    let a = weil_pairing_adelic(&pt_divisor(c, p)?, &pt_divisor(c, q)?, m)?;
                    let b = weil_pairing_miller(p, q, m, c, seed)?;
                    results.push(a == b && a.pow_u128(m as u128).is_one());
                }
            }
            out.push(line(format!("adelic vs Miller on E[{m}] of {c}"), results));
        }
    }

    for c in &curves {
        let g = c.genus();
        let mut results = Vec::new();
        for _ in 0..samples {
            let d = random_divisor(c, 3, &mut rng);
            results.push(riemann_roch(&d)?.euler_characteristic() == d.degree() + 1 - g);
        }
        out.push(line(format!("h0 - h1 = deg D + 1 - g on {c}"), results));
    }

    let mut results = Vec::new();
    for s in curated_setups().iter().filter(|s| s.valid) {
        results.extend(verify_setup(&s.setup, &[1, 2, 4]).iter().map(|r| r.passed()));
    }
    out.push(line("exhaustive checks on curated setups", results));

    let mut results = Vec::new();
    for s in cocycle_family(8, seed) {
        results.push(check_cocycle_commutator(&s)?.1 == 0);
    }
    out.push(line("cocycle commutators against the extension group", results));

    for c in curves.iter().filter(|c| !c.is_line()) {
        let basis = torsion_basis(c, 2)?;
        if basis.len() < 2 {
            continue;
        }
        let shadow = CurveShadow::new(c, &basis, 2)?;
        let rows = shadow.compare()?;
        out.push(line(
            format!("quotient pairing vs adelic pairing on {c}"),
            rows.iter().map(|r| r.quotient == r.adelic),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_run_passes() {
        let lines = run_selftest(3, 1).unwrap();
        for l in &lines {
            assert!(l.passed(), "{l}");
        }
        assert!(lines.len() > 15);
    }
}
