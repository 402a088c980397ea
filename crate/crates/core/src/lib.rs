//! Right-angled volumes of prime alternating links from planar diagrams.
//!
//! The computation runs in five stages: parse and validate a PD code into a
//! planar diagram, simplify it by splicing out rational tangle structure,
//! split what remains along prismatic 4-circuits into polyhedral pieces,
//! realize each piece as an orthogonal circle pattern on a rectangle, and add
//! up kite volumes through the Lobachevsky function.

pub mod circuits;
pub mod diagram;
pub mod hypvol;
pub mod reduce;
pub mod tol;

pub use circuits::{
    classify_circuit, crossing_parallel, enumerate_four_circuits, is_prismatic,
    maximal_bounding_pairs, parallel_classes, BoundingPair, CircuitClass, FourCircuit,
    ParallelClass,
};
pub use diagram::{
    build_diagram, parse_pd, twist_number, validate_diagram, BuildError, CrossingId, Diagram,
    DiagramStats, EdgeId, End, FaceId, PDCode, PdError, PlanarMap, ValidationError,
    ValidationReport,
};
pub use hypvol::{checked_lobachevsky, lobachevsky, v_oct, v_tet, NonFiniteInput};
pub use reduce::{is_torus_2q, rational_reduce, rational_reduce_step, ReduceError, ReducedDiagram};
