use acdual::complexes::{build_xh, build_xs, split_mono_check, xh_euler_formula};
use acdual::{Exec, PrimeField, Rationals};

#[test]
fn xh_n4_concentrated_generic() {
    let x = build_xh(Rationals::new(4).unwrap(), 4, Exec::Parallel).unwrap();
    assert_eq!(x.complex.term_dims(), vec![576, 864, 336, 24]);
    assert!(x.complex.d2_zero(Exec::Parallel));
    assert_eq!(x.complex.cohomology(Exec::Parallel), vec![24, 0, 0, 0]);
    assert_eq!(x.complex.euler_characteristic(), xh_euler_formula(4).unwrap());
}

#[test]
fn xh_n4_concentrated_modular() {
    for (ell, qbar) in [(2, 1), (3, 2)] {
        let x = build_xh(PrimeField::new(ell, qbar).unwrap(), 4, Exec::Parallel).unwrap();
        assert!(x.complex.d2_zero(Exec::Parallel));
        assert_eq!(x.complex.cohomology(Exec::Parallel), vec![24, 0, 0, 0]);
    }
}

#[test]
fn xs_n3_d2_and_cohomology() {
    let x = build_xs(Rationals::new(4).unwrap(), 3, Exec::Parallel).unwrap();
    assert!(x.complex.d2_zero(Exec::Parallel));
    let h = x.complex.cohomology(Exec::Parallel);
    assert_eq!(h.len(), 3);
    for (ell, qbar) in [(2, 1), (3, 1)] {
        let x = build_xs(PrimeField::new(ell, qbar).unwrap(), 3, Exec::Parallel).unwrap();
        assert!(x.complex.d2_zero(Exec::Parallel));
    }
}

#[test]
fn split_mono_n3_generic() {
    let r = split_mono_check(Rationals::new(4).unwrap(), 3, Exec::Parallel).unwrap();
    assert_eq!(r.dims, vec![(36, 36), (36, 36), (6, 6)]);
    assert!(r.ok(), "{r:?}");
    assert!(!r.literal_section_well_defined);
}

#[test]
fn split_mono_n4_modular() {
    let r = split_mono_check(PrimeField::new(3, 1).unwrap(), 4, Exec::Parallel).unwrap();
    assert_eq!(r.dims.iter().map(|d| d.0).collect::<Vec<_>>(), vec![576, 864, 336, 24]);
    assert!(r.ok(), "{r:?}");
}
