use smallq::uqsl2::{build_uqsl2, kerler, Analysis};
use smallq::hopf::quasitriangular::{RMatrix, TensorElem};
use smallq::hopf;

fn main() {
    let l = 3u64;
    let q = build_uqsl2(l, false).unwrap();
    // enumerate ALL passing R-matrices over the search family
    let mut found = Vec::new();
    for s in 0..l as i64 {
        for e_first in [false, true] {
            for quad in [1i64, -1] {
                for alt in [false, true] {
                    for cf in [true, false] {
                        if let Ok(rm) = smallq::uqsl2::rmatrix::r_matrix_with(&q, s, quad, alt, e_first, cf) {
                            if rm.verify(&q.h).is_ok() {
                                found.push((s, e_first, quad, alt, cf, rm));
                            }
                        }
                    }
                }
            }
        }
    }
    println!("found {} quasitriangular structures", found.len());
    for (s, ef, quad, alt, cf, _) in &found {
        println!("  s={s} e_first={ef} quad={quad} alt={alt} cartan_first={cf}");
    }
    let _ = found;
}
