//! The built-in group catalog: every grammar family instance within an
//! order bound, used by the `catalog` command and the test sweeps.

use thiserror::Error;

use crate::arith::{is_prime, prime_power};
use crate::group::GroupSpec;

/// Largest order bound `catalog_specs` accepts. The sweep itself is cheap,
/// but every CSV cell is computed exactly, and the independence solver has
/// no polynomial escape on the dense commuting graphs that appear just
/// past this bound (S5 being the first offender).
pub const CATALOG_ORDER_LIMIT: u64 = 100;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("catalog order bound {requested} exceeds the supported limit {limit}")]
pub struct CatalogBoundError {
    pub requested: u64,
    pub limit: u64,
}

/// Every catalog spec of order at most `max_order`, sorted by order and
/// then by label.
///
/// The families: cyclic groups from C2 up, dihedral groups of every even
/// order from 6, dicyclic groups of every order `4m >= 8`, S3..S5, A4..A5,
/// elementary abelian groups of rank at least 2, pairwise direct products
/// of all of the above, and every faithful semidirect `C{p^a}:C{q^b}`. The
/// trivial group is left out: all of its graphs are a single vertex. Rank-1
/// elementary abelian groups and A3 are left out as duplicate labels for
/// cyclic groups.
pub fn catalog_specs(max_order: u64) -> Result<Vec<GroupSpec>, CatalogBoundError> {
    if max_order > CATALOG_ORDER_LIMIT {
        return Err(CatalogBoundError { requested: max_order, limit: CATALOG_ORDER_LIMIT });
    }

    let mut atoms: Vec<GroupSpec> = Vec::new();
    atoms.extend((2..=max_order).map(GroupSpec::Cyclic));
    atoms.extend((6..=max_order).step_by(2).map(GroupSpec::Dihedral));
    atoms.extend((8..=max_order).step_by(4).map(GroupSpec::GeneralizedQuaternion));
    atoms.extend((3..=5).map(GroupSpec::Symmetric).filter(|s| fits(s, max_order)));
    atoms.extend((4..=5).map(GroupSpec::Alternating).filter(|s| fits(s, max_order)));
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        for k in 2.. {
            let spec = GroupSpec::ElementaryAbelian { p, k };
            if !fits(&spec, max_order) {
                break;
            }
            atoms.push(spec);
        }
    }

    let mut specs = atoms.clone();
    let orders: Vec<u64> = atoms.iter().map(|s| s.order().expect("atom in bounds")).collect();
    for i in 0..atoms.len() {
        for j in i..atoms.len() {
            if orders[i].saturating_mul(orders[j]) <= max_order {
                specs.push(GroupSpec::DirectProduct(vec![atoms[i].clone(), atoms[j].clone()]));
            }
        }
    }

    for m in 3..=max_order {
        let Some((p, a)) = prime_power(m) else { continue };
        for k in 2..=max_order / m {
            let Some((q, b)) = prime_power(k) else { continue };
            if q != p && (p - 1) % k == 0 {
                specs.push(GroupSpec::SemidirectCyclic { p, a, q, b });
            }
        }
    }

    specs.sort_by_key(|s| (s.order().expect("catalog spec in bounds"), s.to_string()));
    Ok(specs)
}

fn fits(spec: &GroupSpec, max_order: u64) -> bool {
    spec.order().is_ok_and(|n| n <= max_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse_group_spec;

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            catalog_specs(101),
            Err(CatalogBoundError { requested: 101, limit: 100 })
        );
        assert!(catalog_specs(100).is_ok());
    }

    #[test]
    fn small_catalog_contents() {
        let specs = catalog_specs(32).unwrap();
        let labels: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        for expected in [
            "C2", "C32", "D6", "D32", "Q8", "Q32", "S3", "S4", "A4", "E2^2", "E2^5", "E3^3",
            "E5^2", "C2xC2", "C2xS3", "C2xQ8", "C3:C2", "C5:C4", "C7:C3", "C9:C2", "C13:C2",
        ] {
            assert!(labels.contains(&expected.to_string()), "missing {expected}");
        }
        for absent in ["C1", "S5", "A5", "E2^6", "C7:C4", "C33", "C2xC32"] {
            assert!(!labels.contains(&absent.to_string()), "unexpected {absent}");
        }
    }

    #[test]
    fn orders_within_bound_and_sorted() {
        let specs = catalog_specs(48).unwrap();
        let keys: Vec<(u64, String)> =
            specs.iter().map(|s| (s.order().unwrap(), s.to_string())).collect();
        assert!(keys.iter().all(|(n, _)| (2..=48).contains(n)));
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // No duplicate labels anywhere.
        let mut labels: Vec<&String> = keys.iter().map(|(_, l)| l).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), keys.len());
    }

    #[test]
    fn every_spec_round_trips_through_its_label() {
        for spec in catalog_specs(100).unwrap() {
            let text = spec.to_string();
            assert_eq!(parse_group_spec(&text).unwrap(), spec, "round trip failed for {text}");
        }
    }

    #[test]
    fn catalog_grows_monotonically() {
        let small = catalog_specs(24).unwrap();
        let large = catalog_specs(48).unwrap();
        assert!(small.len() < large.len());
        for spec in &small {
            assert!(large.contains(spec));
        }
    }
}
