use super::certificate::assemble;
use super::{lower_bound_girth4, verify_certificate, DecompositionCertificate};
use crate::embedding::{
    planarity_test, projective_embedding_f2_cycle, trace_faces, verify_witness, RotationSystem,
    Surface,
};
use crate::error::{Error, Result};
use crate::factorization::{
    verify_factorization, walecki_cycles, walecki_paths, Factorization, FactorizationKind,
};
use crate::graph::{named_family, normalize, Edge, Family, Graph, VertexSequence};
use crate::token::{induced_partition, token_graph, TokenGraph};
use std::collections::HashMap;

const MIN_GIRTH: usize = 4;

/// Decomposes `F_2(g)` along a Hamiltonian factorization of `g`.
///
/// Each factor induces the part `F_2(V(g), E_i)`. Path factors give planar
/// parts, embedded by [`planarity_test`]; cycle factors give copies of
/// `F_2(C_n)`, embedded by relabelling [`projective_embedding_f2_cycle`].
/// Fails unless every witness verifies and the lower bound meets the number
/// of factors.
pub fn decompose_token(
    g: &Graph,
    f: &Factorization,
    surface: Surface,
) -> Result<DecompositionCertificate> {
    match (f.kind, surface) {
        (FactorizationKind::HamiltonianPaths, Surface::Plane)
        | (FactorizationKind::HamiltonianCycles, Surface::ProjectivePlane) => {}
        (kind, surface) => {
            return Err(Error::InvalidArgument(format!(
                "a {kind:?} factorization certifies the {} surface, not the {surface} one",
                match kind {
                    FactorizationKind::HamiltonianPaths => Surface::Plane,
                    FactorizationKind::HamiltonianCycles => Surface::ProjectivePlane,
                }
            )))
        }
    }
    if &f.host != g {
        return Err(Error::Precondition(
            "the factorization is over a different host graph".into(),
        ));
    }
    let report = verify_factorization(f);
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "factorization does not verify: {}",
            report.failures.join("; ")
        )));
    }

    let tokens = token_graph(g, 2)?;
    let parts = induced_partition(g, 2, &f.to_partition())?;
    let mut witnesses = Vec::with_capacity(parts.len());
    for (i, (part, member)) in parts.parts.iter().zip(&f.members).enumerate() {
        let part_graph = tokens.graph.spanning_subgraph(part)?;
        let rotation = match f.kind {
            FactorizationKind::HamiltonianPaths => planarity_test(&part_graph)
                .witness
                .ok_or_else(|| Error::Certification(format!("part {i} is not planar")))?,
            FactorizationKind::HamiltonianCycles => cycle_part_rotation(&tokens, &part_graph, member)?,
        };
        let witness = trace_faces(&rotation)?;
        let check = verify_witness(&witness, surface, MIN_GIRTH);
        if !check.passed() {
            return Err(Error::Certification(format!(
                "part {i}: {}",
                check.failures.join("; ")
            )));
        }
        witnesses.push(witness);
    }

    let cert = assemble(
        tokens.graph.clone(),
        Some(tokens.label_strings()),
        surface,
        MIN_GIRTH,
        parts,
        &witnesses,
    );
    if cert.lower_bound != cert.claimed_value || cert.claimed_value != f.len() {
        return Err(Error::Certification(format!(
            "lower bound {} does not meet the {} parts",
            cert.lower_bound, cert.claimed_value
        )));
    }
    Ok(cert)
}

/// Transports the projective embedding of `F_2(C_n)` onto the part induced by
/// a Hamiltonian cycle `member`, sending cycle position `a` to `member[a]`.
fn cycle_part_rotation(
    tokens: &TokenGraph,
    part: &Graph,
    member: &VertexSequence,
) -> Result<RotationSystem> {
    let n = member.vertices.len();
    let (cycle_tokens, model) = projective_embedding_f2_cycle(n)?;
    let map = |t: usize| -> usize {
        let label = &cycle_tokens.labels[t];
        tokens
            .index_of(&[member.vertices[label[0]], member.vertices[label[1]]])
            .expect("member vertices are distinct base vertices")
    };
    let mut orders = vec![Vec::new(); part.order()];
    for t in 0..cycle_tokens.graph.order() {
        orders[map(t)] = model.neighbor_order(t).into_iter().map(map).collect();
    }
    let signs: HashMap<Edge, i8> = cycle_tokens
        .graph
        .edges()
        .iter()
        .zip(&model.signs)
        .map(|(&(a, b), &s)| (normalize(map(a), map(b)), s))
        .collect();
    RotationSystem::from_neighbor_orders(part.clone(), &orders, |u, v| {
        signs.get(&(u, v)).copied().unwrap_or(1)
    })
}

/// Certifies that `F_2(K_n) = L(K_n)` splits into `n/2` planar parts of girth
/// at least four, for even `n >= 4`.
pub fn theta4_line_complete(n: usize) -> Result<DecompositionCertificate> {
    if n % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "the planar value is only established for even n, got {n}"
        )));
    }
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    let kn = named_family(Family::Complete(n))?;
    let cert = decompose_token(&kn, &walecki_paths(n)?, Surface::Plane)?;
    debug_assert_eq!(cert.claimed_value, n / 2);
    Ok(cert)
}

/// Certifies that `L(K_n)` splits into `floor(n/2)` projective-planar parts
/// of girth at least four. Odd `n` uses the Hamiltonian cycle factorization
/// of `K_n`; even `n` reuses the planar certificate, whose genus-0 witnesses
/// are valid on the projective plane, with the projective lower bound.
pub fn thetas_line_complete(n: usize) -> Result<DecompositionCertificate> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    let cert = if n % 2 == 1 {
        let kn = named_family(Family::Complete(n))?;
        decompose_token(&kn, &walecki_cycles(n)?, Surface::ProjectivePlane)?
    } else {
        let mut cert = theta4_line_complete(n)?;
        cert.surface = Surface::ProjectivePlane;
        cert.lower_bound = lower_bound_girth4(&cert.host, Surface::ProjectivePlane);
        let report = verify_certificate(&cert);
        if !report.passed() {
            return Err(Error::Certification(report.failures.join("; ")));
        }
        cert
    };
    if cert.lower_bound != n / 2 || cert.claimed_value != n / 2 {
        return Err(Error::Certification(format!(
            "projective certificate for n = {n} is not tight: lower bound {}, parts {}",
            cert.lower_bound, cert.claimed_value
        )));
    }
    Ok(cert)
}
