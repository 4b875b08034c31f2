use std::time::Instant;

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let row = orbits::t_row(n).expect("row");
    println!("n={n} entries={} elapsed={:?}", row.row.len(), start.elapsed());
}
