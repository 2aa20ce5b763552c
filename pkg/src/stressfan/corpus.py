"""Fixed-seed random planar frameworks for tests and benchmarks.

Instances are small (up to 8 vertices in [-span, span]^2), always pass
validation, and have a non-degenerate hull so the toric route applies.
Integer randomness only.
"""

import random

from stressfan.framework import PlanarFramework, edge_key, segments_conflict, validate_planar

DEFAULT_SEED = 31415


def random_planar_framework(rng, max_vertices=8, span=5):
    """One random valid framework; retries internally until valid."""
    while True:
        n = rng.randint(3, max_vertices)
        pts = []
        seen = set()
        while len(pts) < n:
            p = (rng.randint(-span, span), rng.randint(-span, span))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        cr = lambda o, a, b: (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        if all(cr(pts[0], pts[1], p) == 0 for p in pts[2:]):
            continue
        vertices = tuple((f"v{i}", p) for i, p in enumerate(pts))
        points = dict(vertices)

        def blocked(u, v):
            a, b = points[u], points[v]
            for wid, c in points.items():
                if wid in (u, v) or cr(a, b, c) != 0:
                    continue
                if min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]):
                    return True
            return False

        candidates = [
            edge_key(f"v{i}", f"v{j}")
            for i in range(n)
            for j in range(i + 1, n)
            if not blocked(f"v{i}", f"v{j}")
        ]
        rng.shuffle(candidates)
        edges = []
        for u, v in candidates:
            if rng.randint(1, 4) == 1:  # keep roughly 3 in 4
                continue
            if any(segments_conflict(points[u], points[v], points[a], points[b]) for a, b in edges):
                continue
            edges.append((u, v))
        fw = PlanarFramework(vertices, tuple(edges))
        if validate_planar(fw).ok:
            return fw


def corpus(count=50, seed=DEFAULT_SEED, max_vertices=8, span=5):
    """Deterministic list of random valid frameworks."""
    rng = random.Random(seed)
    return [random_planar_framework(rng, max_vertices, span) for _ in range(count)]
