//! Derives the right action of C_q[SU_3] on the cotangent space Lambda^1 and prints it.
use qproj::cotangent::{format_vector, Calculus, CalculusConfig};

fn main() {
    let calc = Calculus::construct(CalculusConfig::new(3)).expect("construction");
    let b = calc.basis;
    let t = &calc.table;
    for l in calc.g.letters() {
        println!("[{}^+] = {}", calc.g.letter_name(l), format_vector(&b, &t.base[l as usize]));
    }
    for k in 0..b.dim() {
        for l in calc.g.letters() {
            let v = &t.action[k][l as usize];
            if v.iter().any(|x| !x.is_zero()) {
                println!("{} <| {} = {}", b.label(k), calc.g.letter_name(l), format_vector(&b, v));
            }
        }
    }
}
