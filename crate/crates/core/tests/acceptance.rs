//! The full acceptance suite: one line per criterion, then a hard failure
//! if any criterion did not pass.

use nearfield::verify::run_all;

#[test]
fn acceptance() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    println!("{} of {} criteria passed", outcomes.len() - failed.len(), outcomes.len());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
