//! Grid meshing of the surface families with per-vertex causal colors.
//!
//! Sampling is parallel by grid rows: each worker fills a disjoint
//! row-block of a preallocated slot array, so assembly is row-major and
//! byte-deterministic for any thread count. Out-of-domain points become
//! holes; faces are emitted only between adjacent present vertices.
//!
//! A uniform grid almost never lands inside the lightlike band, so the
//! samplers accept analytic loci and snap the nearest grid column on
//! each row onto the exact locus parameter. Snapped vertices sit on the
//! surface like any other vertex; they only trade a uniform p2 for the
//! locus p2, which is what makes the green curves visible in renders.

use crate::classify::{fundamental_forms, span_character, GridSpec, LightlikeLocus};
use crate::error::{Error, Result};
use crate::families::SurfaceFamily;
use crate::graph::{eval_graph_param, graph_param_partials, EntireGraphParams};
use crate::minkowski::{CausalCharacter, Vector3L};
use std::io::Write;

pub const COLOR_SPACELIKE: [u8; 3] = [0, 0, 255];
pub const COLOR_TIMELIKE: [u8; 3] = [255, 0, 0];
pub const COLOR_LIGHTLIKE: [u8; 3] = [0, 255, 0];

pub fn color_of(c: CausalCharacter) -> [u8; 3] {
    match c {
        CausalCharacter::Spacelike => COLOR_SPACELIKE,
        CausalCharacter::Timelike => COLOR_TIMELIKE,
        CausalCharacter::Lightlike => COLOR_LIGHTLIKE,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MeshVertex {
    pub p1: f64,
    pub p2: f64,
    pub position: Vector3L,
    pub character: CausalCharacter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Face {
    Tri([u32; 3]),
    Quad([u32; 4]),
}

impl Face {
    pub fn indices(&self) -> &[u32] {
        match self {
            Face::Tri(v) => v,
            Face::Quad(v) => v,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Mesh {
    /// Present vertices in row-major (p1-major) grid order.
    pub vertices: Vec<MeshVertex>,
    pub faces: Vec<Face>,
    pub rows: usize,
    pub cols: usize,
    /// Grid slots skipped because the point left the family domain.
    pub holes: usize,
}

impl Mesh {
    pub fn character_set(&self) -> Vec<CausalCharacter> {
        let mut set: Vec<CausalCharacter> = self.vertices.iter().map(|v| v.character).collect();
        set.sort();
        set.dedup();
        set
    }
}

/// Fills the slot grid in parallel by contiguous row blocks. The closure
/// sees only (p1, p2), so the result is independent of the block split.
fn fill_slots<F>(grid: &GridSpec, threads: usize, eval: &F) -> Vec<Option<MeshVertex>>
where
    F: Fn(f64, f64) -> Option<(Vector3L, CausalCharacter)> + Sync,
{
    let rows = grid.p1.count;
    let cols = grid.p2.count;
    let mut slots: Vec<Option<MeshVertex>> = vec![None; rows * cols];
    let workers = threads.max(1).min(rows);
    let per = rows.div_ceil(workers);
    std::thread::scope(|scope| {
        let mut rest: &mut [Option<MeshVertex>] = &mut slots;
        let mut row0 = 0usize;
        while row0 < rows {
            let take_rows = per.min(rows - row0);
            let (block, tail) = rest.split_at_mut(take_rows * cols);
            rest = tail;
            let start = row0;
            row0 += take_rows;
            scope.spawn(move || {
                for (di, row) in block.chunks_mut(cols).enumerate() {
                    let p1 = grid.p1.value(start + di);
                    for (j, slot) in row.iter_mut().enumerate() {
                        let p2 = grid.p2.value(j);
                        if let Some((position, character)) = eval(p1, p2) {
                            *slot = Some(MeshVertex { p1, p2, position, character });
                        }
                    }
                }
            });
        }
    });
    slots
}

/// Moves the nearest column of each row onto p2* and re-evaluates there.
fn snap_slot<F>(
    grid: &GridSpec,
    slots: &mut [Option<MeshVertex>],
    row: usize,
    p1: f64,
    p2_star: f64,
    eval: &F,
) where
    F: Fn(f64, f64) -> Option<(Vector3L, CausalCharacter)>,
{
    if !p2_star.is_finite() || p2_star < grid.p2.lo || p2_star > grid.p2.hi {
        return;
    }
    let j = ((p2_star - grid.p2.lo) / grid.p2.step()).round() as usize;
    let j = j.min(grid.p2.count - 1);
    if let Some((position, character)) = eval(p1, p2_star) {
        slots[row * grid.p2.count + j] = Some(MeshVertex {
            p1,
            p2: p2_star,
            position,
            character,
        });
    }
}

/// Row-major assembly: presence grid to index grid, quads where all four
/// cell corners are present, triangles where exactly three are.
fn assemble(grid: &GridSpec, slots: Vec<Option<MeshVertex>>) -> Mesh {
    let rows = grid.p1.count;
    let cols = grid.p2.count;
    let mut vertices = Vec::new();
    let mut index: Vec<Option<u32>> = vec![None; rows * cols];
    for (k, slot) in slots.into_iter().enumerate() {
        if let Some(v) = slot {
            index[k] = Some(vertices.len() as u32);
            vertices.push(v);
        }
    }
    let mut faces = Vec::new();
    for i in 0..rows.saturating_sub(1) {
        for j in 0..cols - 1 {
            let corners = [
                index[i * cols + j],
                index[i * cols + j + 1],
                index[(i + 1) * cols + j + 1],
                index[(i + 1) * cols + j],
            ];
            let present: Vec<u32> = corners.iter().filter_map(|c| *c).collect();
            match present.len() {
                4 => faces.push(Face::Quad([present[0], present[1], present[2], present[3]])),
                3 => faces.push(Face::Tri([present[0], present[1], present[2]])),
                _ => {}
            }
        }
    }
    let holes = rows * cols - vertices.len();
    Mesh { vertices, faces, rows, cols, holes }
}

/// Samples a family over the grid. `loci` lists lightlike loci to snap
/// onto (pass the analytic loci, or an empty slice for a plain grid).
pub fn sample_mesh(
    fam: &SurfaceFamily,
    grid: &GridSpec,
    threads: usize,
    loci: &[LightlikeLocus],
) -> Result<Mesh> {
    let eval = |p1: f64, p2: f64| -> Option<(Vector3L, CausalCharacter)> {
        let forms = fundamental_forms(fam, p1, p2).ok()?;
        let position = fam.evaluate(p1, p2).ok()?;
        Some((position, forms.character()))
    };
    let mut slots = fill_slots(grid, threads, &eval);
    for locus in loci {
        for i in 0..grid.p1.count {
            let p1 = grid.p1.value(i);
            if let Ok(p2_star) = locus.p2_at(fam, p1) {
                snap_slot(grid, &mut slots, i, p1, p2_star, &eval);
            }
        }
    }
    let mesh = assemble(grid, slots);
    if mesh.vertices.is_empty() {
        return Err(Error::OutOfDomain(format!(
            "grid window [{}, {}] x [{}, {}] has no point in the family domain",
            grid.p1.lo, grid.p1.hi, grid.p2.lo, grid.p2.hi
        )));
    }
    Ok(mesh)
}

/// Samples the entire graph over a (u, v) grid. With `snap_lightlike`
/// the nearest column per row moves onto v = +-sqrt(-8E/m), which puts
/// the two lightlike curves into the mesh exactly.
pub fn sample_graph_mesh(
    g: &EntireGraphParams,
    grid: &GridSpec,
    threads: usize,
    snap_lightlike: bool,
) -> Mesh {
    let eval = |u: f64, v: f64| -> Option<(Vector3L, CausalCharacter)> {
        let (xu, xv) = graph_param_partials(g, u, v);
        let (_, character) = span_character(xu, xv);
        Some((eval_graph_param(g, u, v), character))
    };
    let mut slots = fill_slots(grid, threads, &eval);
    if snap_lightlike {
        let m = g.m();
        for i in 0..grid.p1.count {
            let u = grid.p1.value(i);
            let e = g.p() * (-2.0 * m * u).exp();
            let v_star = (-8.0 * e / m).sqrt();
            snap_slot(grid, &mut slots, i, u, v_star, &eval);
            snap_slot(grid, &mut slots, i, u, -v_star, &eval);
        }
    }
    assemble(grid, slots)
}

/// Ascii PLY with double precision positions and causal colors.
pub fn write_ply<W: Write>(mesh: &Mesh, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "ply")?;
    writeln!(out, "format ascii 1.0")?;
    writeln!(out, "comment causal colors: blue spacelike, red timelike, green lightlike")?;
    writeln!(out, "element vertex {}", mesh.vertices.len())?;
    writeln!(out, "property double x")?;
    writeln!(out, "property double y")?;
    writeln!(out, "property double t")?;
    writeln!(out, "property uchar red")?;
    writeln!(out, "property uchar green")?;
    writeln!(out, "property uchar blue")?;
    writeln!(out, "element face {}", mesh.faces.len())?;
    writeln!(out, "property list uchar int vertex_indices")?;
    writeln!(out, "end_header")?;
    for v in &mesh.vertices {
        let [r, g, b] = color_of(v.character);
        let p = v.position;
        writeln!(out, "{} {} {} {} {} {}", p.x, p.y, p.t, r, g, b)?;
    }
    for f in &mesh.faces {
        let idx = f.indices();
        write!(out, "{}", idx.len())?;
        for k in idx {
            write!(out, " {k}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// CSV rows `p1,p2,x,y,t,causal` with causal in {S, T, L}.
pub fn write_csv<W: Write>(mesh: &Mesh, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "p1,p2,x,y,t,causal")?;
    for v in &mesh.vertices {
        let p = v.position;
        writeln!(
            out,
            "{},{},{},{},{},{}",
            v.p1,
            v.p2,
            p.x,
            p.y,
            p.t,
            v.character.code()
        )?;
    }
    Ok(())
}
