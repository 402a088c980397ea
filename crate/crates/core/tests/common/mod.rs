//! Shared support for the integration tests: frozen expected values,
//! independent oracles, and fixture loading. Each test target compiles its
//! own copy and uses a subset, hence the dead-code allowance.
#![allow(dead_code)]

pub mod gen;

use rav_core::{build_diagram, parse_pd, Diagram};

/// PD text of a named fixture from the repository's fixtures directory.
pub fn fixture_text(name: &str) -> &'static str {
    match name {
        "trefoil" => include_str!("../../../../fixtures/trefoil.pd"),
        "fig8" => include_str!("../../../../fixtures/fig8.pd"),
        "borromean" => include_str!("../../../../fixtures/borromean.pd"),
        "torus-2-5" => include_str!("../../../../fixtures/torus-2-5.pd"),
        "torus-2-7" => include_str!("../../../../fixtures/torus-2-7.pd"),
        "pretzel-3-3-3" => include_str!("../../../../fixtures/pretzel-3-3-3.pd"),
        "granny-sum" => include_str!("../../../../fixtures/granny-sum.pd"),
        "kinked-trefoil" => include_str!("../../../../fixtures/kinked-trefoil.pd"),
        "nonalternating" => include_str!("../../../../fixtures/nonalternating.pd"),
        "broken" => include_str!("../../../../fixtures/broken.pd"),
        other => panic!("unknown fixture {other}"),
    }
}

/// Parse and build a fixture that is expected to be a valid diagram.
pub fn fixture(name: &str) -> Diagram {
    let pd = parse_pd(fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    build_diagram(&pd).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Build a diagram straight from PD text produced by the test generator.
pub fn diagram_from_text(text: &str) -> Diagram {
    build_diagram(&parse_pd(text).unwrap()).unwrap()
}
