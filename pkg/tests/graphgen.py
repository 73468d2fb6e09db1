"""Random curve resolution graphs via simulated point blow-ups.

Starting from a single (-1)-curve, each step blows up either a free point
on a component (attaching a new (-1)-vertex) or an intersection point
(splitting an edge); the resulting intersection lattice is unimodular, so
the numerical data solved from the self-intersections is automatically
integral.  Arrows are smooth transversal branches.
"""
from __future__ import annotations

import random

from topzeta.resolution import Arrow, CurveResolutionGraph, GraphShape, \
    solve_multiplicities


def random_graph(rng: random.Random, n_blowups: int | None = None,
                 n_arrows: int | None = None) -> CurveResolutionGraph:
    if n_blowups is None:
        n_blowups = rng.randint(0, 6)
    verts = {"E1": 1}  # vertex -> e (self-intersection is -e)
    edges: list[tuple[str, str]] = []
    for _ in range(n_blowups):
        new = f"E{len(verts) + 1}"
        if edges and rng.random() < 0.4:
            u, v = edges.pop(rng.randrange(len(edges)))
            verts[u] += 1
            verts[v] += 1
            edges.extend([(u, new), (v, new)])
        else:
            v = rng.choice(sorted(verts))
            verts[v] += 1
            edges.append((v, new))
        verts[new] = 1
    if n_arrows is None:
        n_arrows = rng.randint(1, 3)
    arrows = [Arrow(f"A{i + 1}", 1, rng.choice(sorted(verts)))
              for i in range(n_arrows)]
    shape = GraphShape(sorted(verts), {v: -e for v, e in verts.items()},
                       arrows, edges)
    return solve_multiplicities(shape)
