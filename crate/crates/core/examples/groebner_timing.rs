use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    let (m, k) = (args[0], args[1]);
    let start = Instant::now();
    let report = excitation::ideal::buchberger_verify(m, k).unwrap();
    println!("{} {:?}", report.to_json(), start.elapsed());
}
