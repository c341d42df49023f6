//! Runs the nine acceptance criteria and prints one line per criterion.

#[test]
fn acceptance() {
    let outcomes = mla_core::acceptance::run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.number).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
