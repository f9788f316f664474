"""Sign vectors, sign systems and their axioms.

A sign vector over ``size`` coordinates is stored as two disjoint bitmasks,
``plus`` and ``minus``; coordinates in neither are zero.  String form uses
the characters ``+``, ``-`` and ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, NamedTuple

from .errors import BadIndex, EmptyResult, InternalMismatch, ParameterError
from .graph import bits


@dataclass(frozen=True)
class SignVector:
    size: int
    plus: int = 0
    minus: int = 0

    def __post_init__(self):
        if self.plus & self.minus:
            raise ParameterError("a coordinate cannot be both + and -")
        if (self.plus | self.minus) >> self.size:
            raise ParameterError("sign vector has entries beyond its size")

    @classmethod
    def from_str(cls, s: str) -> "SignVector":
        plus = minus = 0
        for i, ch in enumerate(s):
            if ch == "+":
                plus |= 1 << i
            elif ch == "-":
                minus |= 1 << i
            elif ch != "0":
                raise ParameterError(f"bad sign character {ch!r}")
        return cls(len(s), plus, minus)

    def __str__(self):
        return "".join(self[i] for i in range(self.size))

    def __repr__(self):
        return f"SignVector({str(self)!r})"

    def __getitem__(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise BadIndex(i)
        if self.plus >> i & 1:
            return "+"
        if self.minus >> i & 1:
            return "-"
        return "0"

    def __len__(self):
        return self.size

    def __neg__(self) -> "SignVector":
        return SignVector(self.size, self.minus, self.plus)

    def __lt__(self, other: "SignVector"):
        return str(self) < str(other)

    @property
    def support(self) -> int:
        return self.plus | self.minus

    @property
    def zero_set(self) -> int:
        return ((1 << self.size) - 1) & ~self.support

    @property
    def is_tope(self) -> bool:
        return self.support == (1 << self.size) - 1

    def reorient(self, mask: int) -> "SignVector":
        """Flip the signs on the coordinates in ``mask``."""
        p, m = self.plus, self.minus
        return SignVector(self.size, (p & ~mask) | (m & mask), (m & ~mask) | (p & mask))


def _same_size(x: SignVector, y: SignVector) -> None:
    if x.size != y.size:
        raise ParameterError(f"length mismatch: {x.size} vs {y.size}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    _same_size(x, y)
    free = ~x.support
    return SignVector(x.size, x.plus | (y.plus & free), x.minus | (y.minus & free))


def separator(x: SignVector, y: SignVector) -> frozenset:
    _same_size(x, y)
    return frozenset(bits((x.plus & y.minus) | (x.minus & y.plus)))


def affine_compose(x: SignVector, y: SignVector) -> SignVector:
    _same_size(x, y)
    sep = (x.plus & y.minus) | (x.minus & y.plus)
    c = compose(x, y)
    return SignVector(x.size, c.plus & ~sep, c.minus & ~sep)


@dataclass(frozen=True)
class SignSystem:
    """A nonempty, duplicate-free set of sign vectors of one length."""

    ground_size: int
    vectors: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        vs = frozenset(self.vectors)
        if not vs:
            raise EmptyResult("a sign system must be nonempty")
        if any(v.size != self.ground_size for v in vs):
            raise ParameterError("vectors of mismatched length")
        object.__setattr__(self, "vectors", vs)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "SignSystem":
        vs = [SignVector.from_str(r) for r in rows]
        if not vs:
            raise EmptyResult("a sign system must be nonempty")
        return cls(vs[0].size, frozenset(vs))

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "SignSystem":
        return cls(size, frozenset(SignVector(size, p, m) for p, m in pairs))

    @cached_property
    def sorted_vectors(self) -> tuple[SignVector, ...]:
        return tuple(sorted(self.vectors, key=str))

    @cached_property
    def pairs(self) -> frozenset:
        return frozenset((v.plus, v.minus) for v in self.vectors)

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def topes(self) -> list[SignVector]:
        return [v for v in self.sorted_vectors if v.is_tope]

    def strings(self) -> list[str]:
        return [str(v) for v in self.sorted_vectors]

    def reorient(self, mask: int) -> "SignSystem":
        return SignSystem(self.ground_size, frozenset(v.reorient(mask) for v in self.vectors))

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, v: SignVector):
        return v in self.vectors

    def __iter__(self):
        return iter(self.sorted_vectors)


def full_system(r: int) -> SignSystem:
    """The system {+,-,0}^r."""
    return SignSystem.from_strings("".join(t) for t in product("+-0", repeat=r))


def canonical_form(L: SignSystem) -> tuple[str, ...]:
    """Sorted strings of ``L`` after a reorientation chosen invariantly.

    Two systems are reorientations of each other iff their canonical forms
    agree.  Every tope is tried as the all-'+' reference; systems without
    topes fall back to all ``2^n`` reorientations.
    """
    topes = [v for v in L.vectors if v.is_tope]
    masks = [t.minus for t in topes] if topes else range(1 << L.ground_size)
    best = None
    for mask in masks:
        form = tuple(sorted(str(v.reorient(mask)) for v in L.vectors))
        if best is None or form < best:
            best = form
    return best


# axioms ---------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    C: bool
    FS: bool
    SE: bool
    IC: bool
    Z: bool
    Sym: bool
    A: bool
    first_violation: dict = field(default_factory=dict)

    def flags(self) -> dict:
        return {a: getattr(self, a) for a in ("C", "FS", "SE", "IC", "Z", "Sym", "A")}


def _vec(size: int, pm: tuple[int, int]) -> str:
    return str(SignVector(size, *pm))


def _comp(x, y):
    free = ~(x[0] | x[1])
    return (x[0] | (y[0] & free), x[1] | (y[1] & free))


def _check_C(L, size):
    for x in L:
        for y in L:
            if _comp(x, y) not in L:
                return (_vec(size, x), _vec(size, y))
    return None


def _check_FS(L, size):
    for x in L:
        for y in L:
            if _comp(x, (y[1], y[0])) not in L:
                return (_vec(size, x), _vec(size, y))
    return None


def _check_SE(L, size):
    Ls = sorted(L)
    for x in Ls:
        for y in Ls:
            sep = (x[0] & y[1]) | (x[1] & y[0])
            if not sep:
                continue
            xy = _comp(x, y)
            outside = ((1 << size) - 1) & ~sep
            tp, tm = xy[0] & outside, xy[1] & outside
            covered = 0
            for z in Ls:
                if (z[0] & outside) == tp and (z[1] & outside) == tm:
                    covered |= sep & ~(z[0] | z[1])
                    if covered == sep:
                        break
            if covered != sep:
                e = next(bits(sep & ~covered))
                return (_vec(size, x), _vec(size, y), e)
    return None


def _check_IC(L, size):
    for x in sorted(L):
        zero = [f for f in range(size) if not (x[0] | x[1]) >> f & 1]
        for fill in product((0, 1, 2), repeat=len(zero)):
            p, m = x
            for f, s in zip(zero, fill):
                if s == 1:
                    p |= 1 << f
                elif s == 2:
                    m |= 1 << f
            if (p, m) not in L:
                return (_vec(size, x), _vec(size, (p & ~x[0], m & ~x[1])))
    return None


def _check_Sym(L, size):
    for x in sorted(L):
        if (x[1], x[0]) not in L:
            return (_vec(size, x),)
    return None


def _affine_admissible(L, size, x, y) -> bool:
    """Side condition of (A) for the pair (X, Y); it does not involve Z."""
    ny = (y[1], y[0])
    sep = (x[0] & ny[1]) | (x[1] & ny[0])
    outside = ((1 << size) - 1) & ~sep
    a = _comp(x, ny)
    b = _comp((x[1], x[0]), y)
    for e in bits(sep):
        for w in L:
            if (w[0] | w[1]) >> e & 1:
                continue
            if not ((w[0] ^ a[0]) | (w[1] ^ a[1])) & outside:
                return False
            if not ((w[0] ^ b[0]) | (w[1] ^ b[1])) & outside:
                return False
    return True


def _check_A(L, size):
    Ls = sorted(L)
    for x in Ls:
        for y in Ls:
            if not _affine_admissible(L, size, x, y):
                continue
            ny = (y[1], y[0])
            sep = (x[0] & ny[1]) | (x[1] & ny[0])
            c = _comp(x, ny)
            xy = (c[0] & ~sep, c[1] & ~sep)
            for z in Ls:
                if _comp(xy, z) not in L:
                    return (_vec(size, x), _vec(size, y), _vec(size, z))
    return None


def check_axioms(L: SignSystem) -> AxiomReport:
    """Check every axiom by exhaustive quantification over ``L``."""
    P, size = L.pairs, L.ground_size
    checks = {
        "C": _check_C,
        "FS": _check_FS,
        "SE": _check_SE,
        "IC": _check_IC,
        "Sym": _check_Sym,
        "A": _check_A,
    }
    flags = {}
    viol = {}
    for name, fn in checks.items():
        w = fn(P, size)
        flags[name] = w is None
        if w is not None:
            viol[name] = w
    flags["Z"] = (0, 0) in P
    if not flags["Z"]:
        viol["Z"] = ("0" * size,)
    if flags["IC"] and not flags["FS"] or flags["FS"] and not flags["C"]:
        raise InternalMismatch("axiom implications IC => FS => C violated")
    return AxiomReport(**flags, first_violation=viol)


def is_com_system(L: SignSystem) -> bool:
    P = L.pairs
    return _check_FS(P, L.ground_size) is None and _check_SE(P, L.ground_size) is None


def classify_system(L: SignSystem) -> frozenset:
    r = check_axioms(L)
    out = set()
    if r.FS and r.SE:
        out.add("COM")
        if r.Z:
            out.add("OM")
        if r.A:
            out.add("AOM")
    if r.IC and r.SE:
        out.add("LOP")
    return frozenset(out)


# minors, simplification, rank ----------------------------------------------


def _drop(pm: tuple[int, int], e: int) -> tuple[int, int]:
    low = (1 << e) - 1
    return tuple((v & low) | ((v >> (e + 1)) << e) for v in pm)


def system_minor(L: SignSystem, op: str, e: int, sign: str | None = None) -> SignSystem:
    if not 0 <= e < L.ground_size:
        raise BadIndex(f"coordinate {e} out of range")
    b = 1 << e
    if op == "delete":
        keep = L.pairs
    elif op == "hyperplane":
        keep = [x for x in L.pairs if not (x[0] | x[1]) & b]
    elif op == "halfspace":
        if sign not in ("+", "-"):
            raise ParameterError("halfspace needs sign '+' or '-'")
        keep = [x for x in L.pairs if (x[0] if sign == "+" else x[1]) & b]
    else:
        raise ParameterError(f"unknown minor operation {op!r}")
    out = {_drop(x, e) for x in keep}
    if not out:
        raise EmptyResult(f"{op} at {e} is empty")
    return SignSystem.from_pairs(L.ground_size - 1, out)


def restrict_coordinates(L: SignSystem, keep: list[int]) -> SignSystem:
    """Project onto the coordinates ``keep`` (in that order)."""
    out = set()
    for p, m in L.pairs:
        np_ = nm = 0
        for i, f in enumerate(keep):
            if p >> f & 1:
                np_ |= 1 << i
            elif m >> f & 1:
                nm |= 1 << i
        out.add((np_, nm))
    return SignSystem.from_pairs(len(keep), out)


class Simplification(NamedTuple):
    system: SignSystem
    mapping: dict
    """kept index -> tuple of original coordinates in its parallel class"""
    orientation: dict
    """original coordinate -> +1 or -1 relative to its class representative"""

    @property
    def collapsed(self) -> bool:
        return self.system.ground_size == 0


def simplify(L: SignSystem) -> Simplification:
    P, size = L.pairs, L.ground_size
    nonredundant = []
    for e in range(size):
        vals = set()
        for p, m in P:
            vals.add(1 if p >> e & 1 else (2 if m >> e & 1 else 0))
        if len(vals) == 3:
            nonredundant.append(e)
    reps: list[int] = []
    members: dict[int, list[int]] = {}
    orient: dict[int, int] = {}
    for e in nonredundant:
        for r in reps:
            same = opp = False
            for p, m in P:
                if (p >> e & 1 and p >> r & 1) or (m >> e & 1 and m >> r & 1):
                    same = True
                elif (p >> e & 1 and m >> r & 1) or (m >> e & 1 and p >> r & 1):
                    opp = True
                if same and opp:
                    break
            if not (same and opp):
                members[r].append(e)
                orient[e] = -1 if opp else 1
                break
        else:
            reps.append(e)
            members[e] = [e]
            orient[e] = 1
    system = restrict_coordinates(L, reps)
    mapping = {i: tuple(members[r]) for i, r in enumerate(reps)}
    return Simplification(system, mapping, orient)


def system_rank(L: SignSystem) -> int:
    """VC-dimension: the largest r with some r coordinates projecting onto all of {+,-,0}^r."""
    size = L.ground_size
    n = len(L)
    for r in range(size, 0, -1):
        if 3 ** r > n:
            continue
        target = 3 ** r
        for keep in combinations(range(size), r):
            mask = 0
            for f in keep:
                mask |= 1 << f
            proj = {(p & mask, m & mask) for p, m in L.pairs}
            if len(proj) == target:
                return r
    return 0
