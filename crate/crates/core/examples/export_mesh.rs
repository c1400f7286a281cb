//! Samples a family into a colored mesh and writes PLY and CSV files.
//! Lightlike loci are snapped onto the grid so the green set is exact;
//! vertices are colored blue/red/green for spacelike/timelike/lightlike.
//!
//! Run with: cargo run --example export_mesh

use zmc_riemann::classify::{lightlike_locus_analytic, GridSpec};
use zmc_riemann::families::SurfaceFamily;
use zmc_riemann::mesh::{sample_mesh, write_csv, write_ply};

fn main() {
    // spacelike circles with a straight lightlike line at theta = pi
    let fam = SurfaceFamily::euclidean_general(1.0, 2.0, None).unwrap();
    let grid = GridSpec::default_for(&fam);
    let loci = lightlike_locus_analytic(&fam).unwrap();
    let mesh = sample_mesh(&fam, &grid, 1, &loci).unwrap();

    let census = |of: &zmc_riemann::mesh::Mesh| {
        let mut n = [0usize; 3];
        for v in &of.vertices {
            n[v.character as usize] += 1;
        }
        n
    };
    let [s, t, l] = census(&mesh);
    println!(
        "{}: {} vertices, {} faces ({} spacelike, {} timelike, {} lightlike)",
        fam.kind_name(),
        mesh.vertices.len(),
        mesh.faces.len(),
        s,
        t,
        l
    );

    let dir = std::env::temp_dir();
    let ply_path = dir.join("zmc_euclidean.ply");
    let csv_path = dir.join("zmc_euclidean.csv");

    let mut ply = Vec::new();
    write_ply(&mesh, &mut ply).unwrap();
    std::fs::write(&ply_path, &ply).unwrap();

    let mut csv = Vec::new();
    write_csv(&mesh, &mut csv).unwrap();
    std::fs::write(&csv_path, &csv).unwrap();

    println!("wrote {}", ply_path.display());
    println!("wrote {}", csv_path.display());

    // the outputs are deterministic byte for byte, also across threads
    let again = sample_mesh(&fam, &grid, 6, &loci).unwrap();
    let mut ply6 = Vec::new();
    write_ply(&again, &mut ply6).unwrap();
    println!("6-thread resample identical: {}", ply == ply6);

    println!("\nPLY header:");
    for line in ply.split(|&b| b == b'\n').take(13) {
        println!("  {}", String::from_utf8_lossy(line));
    }
    println!("\nfirst CSV rows:");
    for line in csv.split(|&b| b == b'\n').take(4) {
        println!("  {}", String::from_utf8_lossy(line));
    }
}
