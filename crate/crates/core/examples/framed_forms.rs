//! Canonical framing of dz21 on CP^1, its holomorphic parts, the inverse framing and the star map.
use qproj::cotangent::{Calculus, CalculusConfig};

fn main() {
    let calc = Calculus::construct(CalculusConfig::new(2)).expect("construction");
    let b = calc.basis;
    let label = |k: usize| b.v_label(k).to_string();
    let m = calc.z(2, 1);
    let dm = calc.exterior_d0(&m).expect("framing");
    println!("s(dz21)       = {}", dm.display(calc.g, label));
    println!("del z21       = {}", calc.holomorphic_part(&dm).display(calc.g, label));
    println!("delbar z21    = {}", calc.antiholomorphic_part(&dm).display(calc.g, label));
    let pairs = calc.framing_inverse(&dm);
    println!("inverse: {} pairs, round trip ok: {}", pairs.len(), calc.frame_pairs(&pairs).expect("framing") == dm);
    let star = calc.star_framed(&dm).expect("star");
    println!("(dz21)*       = {}", star.display(calc.g, label));
    println!("d(z21*) agrees: {}", calc.exterior_d0(&calc.gsys.normal_form(&m.star())).expect("framing") == star);
    println!("coinvariant: {}", calc.framed_coaction_defect(&dm).expect("coaction").is_empty());
}
