use tanabe_core::action::{kappa_half_matrix, kappa_matrix, phi_half, phi_vector};
use tanabe_core::tanabe::build_z;
use tanabe_core::Level;

#[test]
fn z_acts_as_kappa() {
    for r in 1..=3 {
        for n in 2..=4 {
            for k in 0..=2 {
                let z = build_z(Level::integer(k), r, n).unwrap();
                assert_eq!(phi_vector(&z, n).unwrap(), kappa_matrix(r, n, k).unwrap(), "Z_{k},{r} n={n}");
                let zh = build_z(Level::half(k), r, n).unwrap();
                assert_eq!(phi_half(&zh, n).unwrap(), kappa_half_matrix(r, n, k).unwrap(), "Z_{k}+1/2,{r} n={n}");
            }
        }
    }
}
