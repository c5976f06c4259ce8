//! Lists partitions of each weight with their Maya prefixes and the minimal
//! truncation needed at n = 1, 2, 3.
//!
//!     cargo run --example maya_enumeration -- 5

use nschur::MayaSequence;

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for w in 0..=max {
        let all = MayaSequence::enumerate_by_weight(w);
        println!("weight {w}: {} sequences", all.len());
        for s in all {
            let trunc: Vec<String> = (1..=3).map(|n| s.min_truncation(n).to_string()).collect();
            println!("  ({})\t{s}\tN_min(n=1,2,3) = {}", s.to_partition(), trunc.join(","));
        }
    }
}
