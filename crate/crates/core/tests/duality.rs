use acdual::duality::{self, Basis, GRID};
use acdual::par::Exec;

#[test]
fn lr_duality_up_to_8() {
    for n in 1..=8 {
        for b in [Basis::Specht, Basis::Standard] {
            duality::duality_on_basis(n, b, Exec::Parallel).unwrap_or_else(|e| panic!("n={n} {b:?}: {e}"));
        }
    }
}

#[test]
fn grid_identities() {
    for (point, r) in GRID.iter().zip(duality::verify_grid(&GRID, 1, Exec::Parallel)) {
        let r = r.unwrap_or_else(|e| panic!("{point:?}: {e}"));
        for id in &r.identities {
            assert!(id.passed(), "{point:?} {}: {} vs {}", id.name, id.lhs, id.rhs);
        }
    }
}

