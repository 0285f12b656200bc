// Timing probe for the heaviest computation (ignored by default; the
// acceptance suite runs the real check).

use lieko::catalog::catalog_make;
use lieko::homology::betti_numbers;
use lieko::scalars::ScalarDomain;

#[test]
#[ignore]
fn betti_g12_timing() {
    let e = catalog_make("g12", &ScalarDomain::rationals()).unwrap();
    let t0 = std::time::Instant::now();
    let r = betti_numbers(&e.algebra, 12, None).unwrap();
    println!("betti(g12) in {:?}: {:?}", t0.elapsed(), r.betti_numbers());
    assert_eq!(
        r.betti_numbers(),
        vec![1, 2, 4, 9, 15, 22, 26, 22, 15, 9, 4, 2, 1]
    );
}
