//! One line per acceptance criterion, all exact (tolerance zero).
//!
//! Run with `cargo test -p refined-vw --test acceptance -- --nocapture`
//! to see the lines. A criterion whose stated form does not hold is
//! printed as FAIL and listed in `KNOWN_FAILURES`; the test insists that
//! it still fails, so a later fix cannot go unnoticed.

use std::time::{Duration, Instant};

use refined_vw::enriques::{
    low_degree_vectors, omega_no, verify_fiber, verify_invariants, verify_toda_round_trip, verify_unrefined, vw_conjecture, HilbertTable,
    SymbolReading,
};
use refined_vw::hae::verify_hae;
use refined_vw::k3::verify_k3_equivalence;
use refined_vw::mukai::MukaiClass;
use refined_vw::plethysm::qint;
use refined_vw::series::rational::rat;
use refined_vw::series::{TPoly, TRat};
use refined_vw::special::identities::{verify_enriques_jacobi, verify_enriques_jacobi2, verify_zagier};
use refined_vw::Report;

/// Criteria whose literal statement fails.
const KNOWN_FAILURES: &[u32] = &[3];

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    elapsed: Duration,
    budget: Duration,
    note: String,
}

fn run(id: u32, name: &'static str, budget_s: u64, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, note) = f();
    Outcome { id, name, pass, elapsed: start.elapsed(), budget: Duration::from_secs(budget_s), note }
}

fn reports(rs: Vec<Report>) -> (bool, String) {
    let pass = rs.iter().all(Report::passed);
    let note = rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; ");
    (pass, note)
}

fn criterion_1() -> (bool, String) {
    reports(vec![verify_zagier(8, 8).unwrap(), verify_enriques_jacobi(8, 8).unwrap(), verify_enriques_jacobi2(8, 8).unwrap()])
}

fn criterion_3() -> (bool, String) {
    let v = low_degree_vectors(8).unwrap();
    let literal = v.beta2_matches(SymbolReading::Literal);
    let swapped = v.beta2_matches(SymbolReading::Swapped);
    let note = format!(
        "beta_1 {}; beta^2 = 4 with s read as p: {}; with s read as t^(1/2) and t as p: {}",
        if v.beta1_matches() { "matches" } else { "differs" },
        if literal { "matches" } else { "differs" },
        if swapped { "matches" } else { "differs" },
    );
    (v.beta1_matches() && literal, note)
}

fn criterion_6() -> (bool, String) {
    let h = HilbertTable::new(4);
    let big = |c: &MukaiClass| Ok(vw_conjecture(&h, c)?.value);
    let w = omega_no(&MukaiClass::new(2, 0, 0, 0).unwrap(), &big).unwrap();
    let want = TRat::new(TPoly::constant(rat(-1, 1)), qint(2)).unwrap();
    let at_one = w.eval_at_one().unwrap();
    (w == want && at_one == rat(-1, 2), format!("Omega^NO(2,0,0) = {w}, at t = 1: {at_one}"))
}

#[test]
fn acceptance() {
    let outcomes = vec![
        run(1, "Jacobi identities to q^8, p-window 8", 30, criterion_1),
        run(2, "unrefined PT for a <= 2, b <= 8", 60, || reports(vec![verify_unrefined(2, 8).unwrap()])),
        run(3, "low-degree golden vectors", 10, criterion_3),
        run(4, "fiber classes to q^12, r <= 6", 10, || reports(vec![verify_fiber(12, 6).unwrap()])),
        run(5, "Toda round trip for squares <= 16", 60, || reports(vec![verify_toda_round_trip(16, 8).unwrap()])),
        run(6, "Omega^NO(2, 0, 0) = -1/[2]_t", 1, criterion_6),
        run(7, "K3 equivalence to q^6, p-window 6", 60, || reports(vec![verify_k3_equivalence(6, 6).unwrap()])),
        run(8, "holomorphic anomaly to q^8, a + b <= 4", 120, || reports(vec![verify_hae(8, 4).unwrap()])),
        run(9, "structural invariants", 60, || reports(vec![verify_invariants(3, 16, 3).unwrap()])),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let in_time = o.elapsed < o.budget;
        let pass = o.pass && in_time;
        println!(
            "criterion {}: {} {} (tolerance 0, {:.2}s of {}s) {}",
            o.id,
            if pass { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs(),
            o.note
        );
        if pass == KNOWN_FAILURES.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
