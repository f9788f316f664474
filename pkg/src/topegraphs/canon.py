"""Canonical keys for partial cubes.

Two partial cubes are isomorphic as graphs iff their coordinate sets are
related by a hypercube automorphism (a coordinate permutation composed with
a reorientation), because the isometric embedding is unique up to such
automorphisms.  Fixing a root vertex and translating it to the origin uses
up the reorientation freedom, so what remains is canonizing a set of rows
under column permutations.  That is done by colour refinement plus
individualization, with automorphism pruning both inside a root and across
roots.
"""

from __future__ import annotations

from .graph import PartialCube, bits


def _relabel(sigs: list) -> list[int]:
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [rank[s] for s in sigs]


def _vertex_colours(pc: PartialCube) -> list[int]:
    """Isomorphism-invariant vertex colouring (1-WL seeded with degree and distance profile)."""
    n = pc.n
    adj = pc.adjacency
    cs = pc.coords
    if n <= 256:
        seeds = []
        for c in cs:
            prof = [0] * (pc.k + 1)
            for d in cs:
                prof[(c ^ d).bit_count()] += 1
            seeds.append(tuple(prof))
    else:
        seeds = [len(a) for a in adj]
    col = _relabel(seeds)
    ncol = len(set(col))
    while True:
        new = _relabel([(col[v], tuple(sorted(col[w] for w in adj[v]))) for v in range(n)])
        m = len(set(new))
        col = new
        if m == ncol:
            return col
        ncol = m


class _RootSearch:
    """Column canonization of the row set seen from one root."""

    def __init__(self, rows: list[int], k: int):
        self.rows = rows
        self.k = k
        self.col_members = [[i for i, r in enumerate(rows) if r >> j & 1] for j in range(k)]
        self.row_bits = [list(bits(r)) for r in rows]

    def refine(self, rowcol: list[int], colcol: list[int]) -> tuple[list[int], list[int]]:
        members, row_bits = self.col_members, self.row_bits
        n, k = len(rowcol), self.k
        nr, nc = len(set(rowcol)), len(set(colcol))
        while nc < k or nr < n:
            colcol = _relabel([(colcol[j], tuple(sorted([rowcol[i] for i in members[j]]))) for j in range(k)])
            rowcol = _relabel([(rowcol[i], tuple(sorted([colcol[j] for j in rb]))) for i, rb in enumerate(row_bits)])
            mr, mc = len(set(rowcol)), len(set(colcol))
            if mr == nr and mc == nc:
                break
            nr, nc = mr, mc
        return rowcol, colcol

    def certificate(self, colcol: list[int]) -> tuple[int, ...]:
        w = [1 << c for c in colcol]
        return tuple(sorted([sum([w[j] for j in rb]) for rb in self.row_bits]))


class _Abort(Exception):
    pass


def canonical_key(pc: PartialCube) -> str:
    """A string that is equal for two partial cubes iff they are isomorphic."""
    n, k = pc.n, pc.k
    if k == 0:
        return f"{n}.0.0"
    vcol = _vertex_colours(pc)
    sizes: dict[int, int] = {}
    for c in vcol:
        sizes[c] = sizes.get(c, 0) + 1
    target = min(sizes, key=lambda c: (sizes[c], c))
    roots = [v for v in range(n) if vcol[v] == target]

    coords = pc.coords
    # root-independent column invariant: the two halfspace sizes
    msize = [m.bit_count() for m in pc.minus_masks]
    col0 = _relabel([tuple(sorted((s, n - s))) for s in msize])
    best: tuple | None = None
    seen: dict[tuple, tuple[int, list[int]]] = {}
    vgens: list[list[int]] = []
    explored: list[int] = []

    def orbit_of(start: list[int]) -> set[int]:
        orb = set(start)
        stack = list(start)
        while stack:
            x = stack.pop()
            for g in vgens:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        return orb

    def vertex_perm(root_a: int, perm_a: list[int], root_b: int, perm_b: list[int]) -> list[int]:
        def image(v, root, perm):
            r = coords[v] ^ coords[root]
            out = 0
            for j in bits(r):
                out |= 1 << perm[j]
            return out
        inv = {image(w, root_b, perm_b): w for w in range(n)}
        return [inv[image(v, root_a, perm_a)] for v in range(n)]

    for root in roots:
        if explored and root in orbit_of(explored):
            continue
        explored.append(root)
        rc = coords[root]
        rows = [c ^ rc for c in coords]
        search = _RootSearch(rows, k)
        cgens: list[list[int]] = []

        def leaf(colcol: list[int]) -> None:
            nonlocal best
            cert = search.certificate(colcol)
            prev = seen.get(cert)
            if prev is None:
                seen[cert] = (root, colcol)
                if best is None or cert < best:
                    best = cert
                return
            proot, pperm = prev
            sigma = vertex_perm(proot, pperm, root, colcol)
            vgens.append(sigma)
            if proot != root:
                raise _Abort
            pos = {p: j for j, p in enumerate(colcol)}
            cgens.append([pos[pperm[j]] for j in range(k)])

        def search_node(rowcol: list[int], colcol: list[int], prefix: list[int]) -> None:
            rowcol, colcol = search.refine(rowcol, colcol)
            csize: dict[int, int] = {}
            for c in colcol:
                csize[c] = csize.get(c, 0) + 1
            cells = [c for c in sorted(csize) if csize[c] > 1]
            if not cells:
                leaf(colcol)
                return
            cell = cells[0]
            members = [j for j in range(k) if colcol[j] == cell]
            done: list[int] = []
            for x in members:
                if done and _in_orbit(x, done, cgens, prefix):
                    continue
                done.append(x)
                child = _relabel([(c, 0 if j == x else 1) for j, c in enumerate(colcol)])
                search_node(rowcol, child, prefix + [x])

        try:
            search_node(_relabel([(vcol[v], r.bit_count()) for v, r in enumerate(rows)]), col0, [])
        except _Abort:
            pass

    body = ",".join(format(r, "x") for r in best)
    return f"{n}.{k}.{body}"


def _in_orbit(x: int, done: list[int], gens: list[list[int]], prefix: list[int]) -> bool:
    usable = [g for g in gens if all(g[p] == p for p in prefix)]
    if not usable:
        return False
    orb = set(done)
    stack = list(done)
    while stack:
        a = stack.pop()
        for g in usable:
            b = g[a]
            if b not in orb:
                if b == x:
                    return True
                orb.add(b)
                stack.append(b)
    return x in orb


def isomorphic(a: PartialCube, b: PartialCube) -> bool:
    if a.n != b.n or a.k != b.k or len(a.edges) != len(b.edges):
        return False
    return canonical_key(a) == canonical_key(b)
