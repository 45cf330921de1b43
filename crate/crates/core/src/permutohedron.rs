//! Faces of the permutohedron `P(n)`, labelled by unit-interval parking functions.
//!
//! A face is an ordered set partition `B_1/.../B_k`; it has dimension `n - k`
//! and contains the vertices obtained by writing out each block in any order.
//! The vertex for the permutation `u` sits at the point `u^-1`, which is also
//! its parking function label. The polytope itself is included as the single
//! top face; the empty face is not.

use std::collections::HashMap;
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::psi;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::osp::{enumerate_osps, OrderedSetPartition};
use crate::parking::PrefList;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    pub osp: OrderedSetPartition,
    pub dimension: usize,
    pub upf_label: PrefList,
    /// Ordered block sizes; the face is `P(n_1) x ... x P(n_k)`.
    pub comb_type: Vec<usize>,
}

impl Face {
    pub fn new(osp: OrderedSetPartition) -> Self {
        Face {
            dimension: osp.n() - osp.block_count(),
            upf_label: psi(&osp),
            comb_type: osp.block_sizes(),
            osp,
        }
    }

    pub fn n(&self) -> usize {
        self.osp.n()
    }
}

pub fn combinatorial_type(f: &Face) -> Vec<usize> {
    f.comb_type.clone()
}

/// Whether `large` is obtained from `small` by merging runs of consecutive blocks.
pub fn face_contains(small: &Face, large: &Face) -> Result<bool> {
    osp_refines(&small.osp, &large.osp)
}

pub(crate) fn osp_refines(
    small: &OrderedSetPartition,
    large: &OrderedSetPartition,
) -> Result<bool> {
    if small.n() != large.n() {
        return Err(Error::DimensionMismatch {
            left: small.n(),
            right: large.n(),
        });
    }
    let mut fine = small.blocks().iter();
    for target in large.blocks() {
        let mut merged: Vec<usize> = Vec::with_capacity(target.len());
        while merged.len() < target.len() {
            match fine.next() {
                Some(b) => merged.extend_from_slice(b),
                None => return Ok(false),
            }
        }
        merged.sort_unstable();
        if merged != *target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All vertices of the face, as permutations in lexicographic order.
pub fn face_vertices(f: &Face) -> Vec<Permutation> {
    osp_vertices(&f.osp)
}

fn osp_vertices(p: &OrderedSetPartition) -> Vec<Permutation> {
    p.blocks()
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| Permutation::new_unchecked(parts.concat()))
        .collect()
}

/// The point `u^-1` for the vertex written as the permutation `u`.
pub fn vertex_coordinates(u: &Permutation) -> Vec<usize> {
    u.inverse().as_slice().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    pub n: usize,
    /// Sorted by dimension, then by canonical partition order; a face's id is its index.
    pub faces: Vec<Face>,
    /// Vertex ids of every face, ascending.
    pub vertices: Vec<Vec<usize>>,
    /// `(child, parent)` pairs where the parent merges two adjacent blocks of the child.
    pub covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn build(n: usize, limits: &Limits) -> Result<Self> {
        build_face_lattice(n, limits)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.n];
        for face in &self.faces {
            f[face.dimension] += 1;
        }
        f
    }

    pub fn faces_of_dimension(&self, d: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dimension == d)
    }

    pub fn to_json_document(&self, dim: Option<usize>) -> LatticeJson {
        let keep = |id: usize| dim.is_none_or(|d| self.faces[id].dimension == d);
        LatticeJson {
            n: self.n,
            faces: self
                .faces
                .iter()
                .enumerate()
                .filter(|(id, _)| keep(*id))
                .map(|(id, f)| FaceJson {
                    id,
                    osp: f.osp.to_string(),
                    dimension: f.dimension,
                    upf: f.upf_label.as_slice().to_vec(),
                    comb_type: f.comb_type.clone(),
                    vertices: self.vertices[id].clone(),
                })
                .collect(),
            covers: self
                .covers
                .iter()
                .filter(|(c, p)| keep(*c) && keep(*p))
                .map(|&(c, p)| [c, p])
                .collect(),
        }
    }
}

pub fn build_face_lattice(n: usize, limits: &Limits) -> Result<FaceLattice> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    limits.check_lattice(n)?;
    let unlimited = Limits {
        max_exhaustive_n: n.max(limits.max_exhaustive_n),
        ..*limits
    };
    let mut osps = Vec::new();
    for k in (1..=n).rev() {
        osps.extend(enumerate_osps(n, Some(k), &unlimited)?);
    }
    let ids: HashMap<&OrderedSetPartition, usize> =
        osps.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let faces: Vec<Face> = osps.par_iter().cloned().map(Face::new).collect();
    let vertices: Vec<Vec<usize>> = osps
        .par_iter()
        .map(|p| {
            let mut v: Vec<usize> = osp_vertices(p)
                .iter()
                .map(|u| ids[&OrderedSetPartition::from_permutation(u)])
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut covers: Vec<(usize, usize)> = osps
        .par_iter()
        .enumerate()
        .flat_map_iter(|(child, p)| {
            let ids = &ids;
            (0..p.block_count().saturating_sub(1)).map(move |i| (child, ids[&merge_adjacent(p, i)]))
        })
        .collect();
    covers.sort_unstable();
    Ok(FaceLattice {
        n,
        faces,
        vertices,
        covers,
    })
}

fn merge_adjacent(p: &OrderedSetPartition, i: usize) -> OrderedSetPartition {
    let mut blocks = p.blocks().to_vec();
    let right = blocks.remove(i + 1);
    blocks[i].extend(right);
    blocks[i].sort_unstable();
    OrderedSetPartition::new_unchecked(p.n(), blocks)
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceJson {
    pub id: usize,
    pub osp: String,
    pub dimension: usize,
    pub upf: Vec<usize>,
    #[serde(rename = "type")]
    pub comb_type: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeJson {
    pub n: usize,
    pub faces: Vec<FaceJson>,
    pub covers: Vec<[usize; 2]>,
}

/// Compact JSON with a trailing newline.
pub fn export_json(lat: &FaceLattice) -> String {
    json_document(&lat.to_json_document(None))
}

pub fn json_document(doc: &LatticeJson) -> String {
    let mut s = serde_json::to_string(doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Hasse diagram in Graphviz DOT, faces of equal dimension on one rank.
pub fn export_dot(lat: &FaceLattice) -> String {
    dot_document(lat, None)
}

pub fn dot_document(lat: &FaceLattice, dim: Option<usize>) -> String {
    let keep = |id: usize| dim.is_none_or(|d| lat.faces[id].dimension == d);
    let mut out = String::new();
    let _ = writeln!(out, "digraph permutohedron_{} {{", lat.n);
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for d in 0..lat.n {
        let ids: Vec<String> = lat
            .faces_of_dimension(d)
            .filter(|(id, _)| keep(*id))
            .map(|(id, _)| format!("f{id}"))
            .collect();
        if !ids.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
    }
    for (id, face) in lat.faces.iter().enumerate().filter(|(id, _)| keep(*id)) {
        let _ = writeln!(
            out,
            "  f{id} [label=\"{}\\n{}\"];",
            face.upf_label, face.osp
        );
    }
    for &(c, p) in lat.covers.iter().filter(|(c, p)| keep(*c) && keep(*p)) {
        let _ = writeln!(out, "  f{c} -> f{p};");
    }
    out.push_str("}\n");
    out
}
