#[allow(dead_code)]
mod ring_bands {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ring_bands.rs"));
}

#[test]
fn ring_bands_runs() {
    ring_bands::run_example().expect("ring_bands example should run");
}

#[allow(dead_code)]
mod structure_maps {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/structure_maps.rs"));
}

#[test]
fn structure_maps_runs() {
    structure_maps::run_example().expect("structure_maps example should run");
}

#[allow(dead_code)]
mod measures_and_transport {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/measures_and_transport.rs"));
}

#[test]
fn measures_and_transport_runs() {
    measures_and_transport::run_example().expect("measures_and_transport example should run");
}

#[allow(dead_code)]
mod arcs_and_average {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/arcs_and_average.rs"));
}

#[test]
fn arcs_and_average_runs() {
    arcs_and_average::run_example().expect("arcs_and_average example should run");
}

#[allow(dead_code)]
mod join_coordinates {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/join_coordinates.rs"));
}

#[test]
fn join_coordinates_runs() {
    join_coordinates::run_example().expect("join_coordinates example should run");
}

#[allow(dead_code)]
mod cover_square {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cover_square.rs"));
}

#[test]
fn cover_square_runs() {
    cover_square::run_example().expect("cover_square example should run");
}

#[allow(dead_code)]
mod vr_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vr_oracle.rs"));
}

#[test]
fn vr_oracle_runs() {
    vr_oracle::run_example().expect("vr_oracle example should run");
}

#[allow(dead_code)]
mod fixed_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fixed_points.rs"));
}

#[test]
fn fixed_points_runs() {
    fixed_points::run_example().expect("fixed_points example should run");
}
