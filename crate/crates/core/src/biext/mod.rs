//! Finite models of the trivial biextension, its transport action, the quotient
//! Weil pairing, and cocycle commutators.

mod cocycle;
mod group;
mod setup;
mod text;

pub use cocycle::{
    check_cocycle_commutator, cocycle_commutator, cocycle_family, small_groups, Cocycle, ExtensionGroup,
};
pub use group::{FiniteAbelianGroup, MAX_RANK};
pub use setup::{
    check_decomposition_independence, check_group_action, check_partial_laws, check_quotient_pairing, decompositions,
    quotient_weil_pairing, transport, validate_setup, verify_setup, Acting, Exhaustive, PairingSetup, SetupCheck,
    SetupReport, Sub, TorsorPoint,
};
pub use text::{parse_setup, render_setup};

/// A named setup from the curated list.
pub struct Curated {
    pub name: &'static str,
    pub setup: PairingSetup,
    /// Whether the four vanishing conditions are expected to hold.
    pub valid: bool,
}

fn build(orders: &[u64], orders_p: &[u64], n: u64, matrix: &[&[u64]], gens: [&[&[u64]]; 4]) -> PairingSetup {
    let a = FiniteAbelianGroup::new(orders.to_vec()).expect("curated group");
    let ap = FiniteAbelianGroup::new(orders_p.to_vec()).expect("curated group");
    let to_vec = |g: &[&[u64]]| g.iter().map(|v| v.to_vec()).collect::<Vec<_>>();
    PairingSetup::new(
        a,
        ap,
        n,
        matrix.iter().map(|r| r.to_vec()).collect(),
        [to_vec(gens[0]), to_vec(gens[1]), to_vec(gens[2]), to_vec(gens[3])],
    )
    .expect("curated setup")
}

/// Setups over groups of order at most 16 used by the exhaustive checks.
pub fn curated_setups() -> Vec<Curated> {
    vec![
        Curated { name: "z4-product", setup: build(&[4], &[4], 4, &[&[1]], [&[], &[&[2]], &[], &[&[2]]]), valid: true },
        Curated {
            name: "z2xz2-symplectic",
            setup: build(&[2, 2], &[2, 2], 2, &[&[0, 1], &[1, 0]], [&[&[1, 0]], &[&[0, 1]], &[&[1, 0]], &[&[0, 1]]]),
            valid: true,
        },
        Curated { name: "z8-c4", setup: build(&[8], &[8], 8, &[&[1]], [&[], &[&[4]], &[], &[&[4]]]), valid: true },
        Curated {
            name: "z2xz4-mixed",
            setup: build(&[2, 4], &[2, 4], 4, &[&[0, 2], &[2, 1]], [&[&[1, 0]], &[&[0, 2]], &[&[1, 0]], &[&[0, 2]]]),
            valid: true,
        },
        Curated {
            name: "z4xz4-symplectic",
            setup: build(&[4, 4], &[4, 4], 4, &[&[0, 1], &[3, 0]], [&[&[1, 0]], &[&[0, 2]], &[&[1, 0]], &[&[0, 2]]]),
            valid: true,
        },
        Curated {
            name: "z4-overlap",
            setup: build(&[4], &[4], 4, &[&[2]], [&[&[2]], &[&[2]], &[&[2]], &[&[2]]]),
            valid: true,
        },
        Curated {
            name: "z2-z4-asymmetric",
            setup: build(&[2], &[4], 4, &[&[2]], [&[], &[&[1]], &[], &[&[2]]]),
            valid: true,
        },
        Curated {
            name: "z4-c-everything",
            setup: build(&[4], &[4], 4, &[&[1]], [&[], &[&[1]], &[], &[&[2]]]),
            valid: false,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curated_validity_matches_reports() {
        for c in curated_setups() {
            assert!(c.setup.a().size() <= 16);
            assert_eq!(validate_setup(&c.setup).passed(), c.valid, "{}", c.name);
        }
    }
}
