"""Brute-force instruments: random diagrams, bounded move-graph search.

``random_diagram`` draws valid closed words by a seeded rejection walk, so
identical parameters and seed always reproduce the same diagram.
``bfs_path`` searches the move graph breadth-first, collapsing states by
the canonical plane-map key and pruning on move-invariant quantities
(component count, linking matrix multiset), and returns a replayable
certificate when the target class is reached within budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Diagram, DiagramError, Slice, SliceKind
from .invariants import linking_matrix
from .planemap import plane_key


class GenerationError(DiagramError):
    """Requested parameters could not be realized."""


def random_diagram(components: int, crossings: int,
                   virtual_fraction: float = 0.0, seed: int = 0,
                   max_attempts: int = 20000) -> Diagram:
    """A reproducible random diagram with exact component/crossing counts."""
    if components < 0 or crossings < 0 or not 0 <= virtual_fraction <= 1:
        raise GenerationError("infeasible parameters")
    if components == 0:
        if crossings:
            raise GenerationError("crossings require at least one component")
        return Diagram((), ())
    rng = random.Random((seed, components, crossings, round(virtual_fraction * 100)).__hash__())
    for _ in range(max_attempts):
        d = _attempt(rng, components, crossings, virtual_fraction)
        if d is not None and d.ncomponents == components:
            orient = tuple(rng.choice((1, -1)) for _ in range(components))
            return Diagram(d.slices, orient)
    raise GenerationError(
        f"could not generate {components} components, {crossings} crossings "
        f"(virtual fraction {virtual_fraction}) from seed {seed}")


def _attempt(rng: random.Random, components: int, crossings: int,
             virtual_fraction: float) -> Diagram | None:
    slices: list[Slice] = []
    w = 0
    left = crossings
    cups = 0
    max_len = 6 * (components + crossings) + 8
    while len(slices) < max_len:
        actions = []
        if cups < components + crossings + 1:
            actions += ["cup"] * (3 if left > 0 or cups < components else 1)
        if w >= 2:
            if left > 0:
                actions += ["cross"] * 4
            actions += ["cap"] * (1 if left > 0 else 4)
        if not actions:
            return None
        act = rng.choice(actions)
        if act == "cup":
            slices.append(Slice(SliceKind.CUP, rng.randint(1, w + 1)))
            w += 2
            cups += 1
        elif act == "cross":
            kind = SliceKind.V if rng.random() < virtual_fraction else \
                rng.choice((SliceKind.XP, SliceKind.XM))
            slices.append(Slice(kind, rng.randint(1, w - 1)))
            left -= 1
        else:
            slices.append(Slice(SliceKind.CAP, rng.randint(1, w - 1)))
            w -= 2
            if w == 0:
                if left == 0:
                    try:
                        return Diagram(tuple(slices), ())
                    except DiagramError:
                        return None
                return None
    return None
