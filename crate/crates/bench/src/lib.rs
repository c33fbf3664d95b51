//! Fixed problem instances shared by the benchmarks.

use lscrystal::{Session, Weight, WeylElement};

pub struct Instance {
    pub label: &'static str,
    pub session: Session,
    pub v: WeylElement,
    pub w: WeylElement,
    pub lambda: Weight,
    pub mu: Weight,
}

fn instance(label: &'static str, ty: &str, v: &[usize], w: &[usize], lambda: &[i64], mu: &[i64]) -> Instance {
    let session = Session::from_name(ty).expect("known root system");
    Instance {
        label,
        v: session.element(v).expect("valid word"),
        w: session.element(w).expect("valid word"),
        lambda: Weight(lambda.to_vec()),
        mu: Weight(mu.to_vec()),
        session,
    }
}

/// Small to medium decompositions in ranks two and three.
pub fn instances() -> Vec<Instance> {
    vec![
        instance("A2 (1,1)x(1,0)", "A2", &[1, 2], &[1, 2, 1], &[1, 1], &[1, 0]),
        instance("A2 (2,1)x(1,2)", "A2", &[1], &[1, 2], &[2, 1], &[1, 2]),
        instance("B2 (1,1)x(0,1)", "B2", &[1, 2], &[2, 1, 2], &[1, 1], &[0, 1]),
        instance("G2 (1,0)x(1,0)", "G2", &[1], &[2, 1], &[1, 0], &[1, 0]),
        instance("A3 (1,0,1)x(0,1,0)", "A3", &[1, 2], &[2, 1, 3, 2], &[1, 0, 1], &[0, 1, 0]),
    ]
}

/// Fresh session, so that cached crystals do not hide generation cost.
pub fn fresh(inst: &Instance) -> Session {
    Session::from_name(&inst.session.rs().cartan_type().to_string()).expect("known root system")
}
