//! del and delbar on CP^1 and the double-complex identities at form degree one.
use qproj::cotangent::CalculusConfig;
use qproj::holomorphic::{dolbeault_check, framed_component};
use qproj::prolong::{framed_d1, one_form_pairs};
use qproj::verify::Context;

fn main() {
    let ctx = Context::construct(CalculusConfig::new(2)).expect("construction");
    let calc = &ctx.calc;
    let v2 = &ctx.ext.powers[2];
    let label = |k: usize| qproj::prolong::wedge_label(&calc.basis, &v2.labels[k]);
    let m = calc.z(2, 1);
    let del = calc.del0(&m).expect("del");
    let d_del = framed_d1(calc, v2, &one_form_pairs(calc, &del)).expect("d");
    println!("d(del z21)        = {}", d_del.display(calc.g, label));
    println!("(0,2) part        = {}", framed_component(&d_del, v2, &calc.basis, 0).display(calc.g, label));
    let e = dolbeault_check(calc, v2).expect("check");
    println!("{} over all z_ij: {}", e.check, e.status.label());
}
