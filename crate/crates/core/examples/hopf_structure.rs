//! Coproduct, counit, antipode and star on generators, plus the Hopf axiom suite.
use qproj::ncpoly::{Algebra, NCPoly};
use qproj::rewrite::RewriteSystem;
use qproj::verify::hopf_axioms;

fn main() {
    for alg in [Algebra::G(3), Algebra::H(3)] {
        let sys = RewriteSystem::build_default(alg).expect("completion");
        let x = NCPoly::u(alg, 1, 2);
        println!("{alg}: Delta(u12) = {}", x.coproduct());
        println!("{alg}: S(u12) = {}", sys.normal_form(&x.antipode()));
        println!("{alg}: u12* = {}", sys.normal_form(&x.star()));
        let e = hopf_axioms(&sys);
        println!("{alg}: {} {}", e.check, e.status.label());
    }
}
