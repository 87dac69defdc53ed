//! Saves a constructed calculus to a session file and rebuilds it without completion.
use qproj::cotangent::{Calculus, CalculusConfig};
use qproj::session::SessionFile;

fn main() {
    let calc = Calculus::construct(CalculusConfig::new(2)).expect("construction");
    let session = SessionFile::from_calculus(&calc, 3);
    let path = std::env::temp_dir().join("qproj-example-session.json");
    session.save(&path).expect("write");
    let back = SessionFile::load(&path).expect("read").calculus().expect("rebuild");
    println!("session at {}", path.display());
    println!("rules: {} / {}", back.gsys.rules().len(), back.hsys.rules().len());
    println!("same table: {}", back.table.to_json(&back.basis) == calc.table.to_json(&calc.basis));
    std::fs::remove_file(path).ok();
}
