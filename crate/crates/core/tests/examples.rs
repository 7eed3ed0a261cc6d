mod burau_matrix {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/burau_matrix.rs"));
}

#[test]
fn burau_matrix_runs() {
    burau_matrix::run_example().expect("burau_matrix example should run");
}

mod word_problem {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/word_problem.rs"));
}

#[test]
fn word_problem_runs() {
    word_problem::run_example().expect("word_problem example should run");
}

mod membership {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/membership.rs"));
}

#[test]
fn membership_runs() {
    membership::run_example().expect("membership example should run");
}

mod symplectic_identities {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/symplectic_identities.rs"));
}

#[test]
fn symplectic_identities_runs() {
    symplectic_identities::run_example().expect("symplectic_identities example should run");
}

mod closure_orders {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/closure_orders.rs"));
}

#[test]
fn closure_orders_runs() {
    closure_orders::run_example().expect("closure_orders example should run");
}

mod point_pushing {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/point_pushing.rs"));
}

#[test]
fn point_pushing_runs() {
    point_pushing::run_example().expect("point_pushing example should run");
}

mod forgetful {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/forgetful.rs"));
}

#[test]
fn forgetful_runs() {
    forgetful::run_example().expect("forgetful example should run");
}

mod verify_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().expect("verify_suite example should run");
}
