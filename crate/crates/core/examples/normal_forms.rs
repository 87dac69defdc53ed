//! Completes the relations of C_q[SU_2] and reduces a few products to normal form.
use qproj::ncpoly::{Algebra, NCPoly};
use qproj::rewrite::RewriteSystem;

fn main() {
    let g = Algebra::G(2);
    let sys = RewriteSystem::build_default(g).expect("completion");
    println!("{} rules up to degree {}", sys.rules().len(), sys.max_degree);
    let (a, b, c, d) = (NCPoly::u(g, 1, 1), NCPoly::u(g, 1, 2), NCPoly::u(g, 2, 1), NCPoly::u(g, 2, 2));
    for (name, f) in [("d a", d.mul(&a)), ("c b", c.mul(&b)), ("d c b a", NCPoly::product(g, [&d, &c, &b, &a]))] {
        println!("NF({name}) = {}", sys.normal_form(&f));
    }
    let ad = sys.mul(&a, &d);
    let da = sys.mul(&d, &a);
    let mut comm = ad.clone();
    comm.add_scaled(&da, &-qproj::qscalar::QScalar::one());
    println!("ad - da = {}", sys.normal_form(&comm));
}
