"""Exact integer invariants computed from arc labelings of Gauss codes.

The labeling walks the open component starting at 0; passing an arrow head
raises the running label by one and passing an arrow tail lowers it (classical
codes are labelled through their flattening). A crossing's flat weight is

    W+(c) = label entering the tail passage - (label entering the head passage + 1)

and the classical weight is W_D(c) = sgn(c) * W+(c). These feed the affine index
polynomial P, the n-th writhes, the flat writhes f_n with their polynomial Q, and
the intersection index of ordered two-component flat codes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import KnotoidCode, OrderedTwoComponent, flatten
from .errors import ComponentCountError, LabelingError, ValidityError

__all__ = [
    "LaurentPoly",
    "ArcLabeling",
    "CrossingReport",
    "label_arcs",
    "writhe",
    "crossing_reports",
    "affine_index_polynomial",
    "affine_index_decomposition",
    "nth_writhe",
    "flat_weights",
    "flat_nth_writhe",
    "flat_affine_polynomial",
    "intersection_index",
]


class LaurentPoly:
    """Integer Laurent polynomial in one variable; immutable, exact."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {int(e): int(v) for e, v in (coeffs or {}).items() if v != 0}
        object.__setattr__(self, "_c", c)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def term(cls, coef: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coef})

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def substituted_reciprocal(self) -> "LaurentPoly":
        """p(t) -> p(1/t)."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mon = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if e == 0:
                parts.append(f"{v:+d}")
            elif v == 1:
                parts.append(f"+{mon}")
            elif v == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{v:+d}{mon}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}


@dataclass(frozen=True)
class ArcLabeling:
    """Label entering each passage, per component. Closed components that have no
    crossing shared with a labelled component stay at 0 (diagnostic only)."""

    incoming: tuple[tuple[int, ...], ...]

    def at(self, comp: int, pos: int) -> int:
        return self.incoming[comp][pos]


def _step(role) -> int:
    if role.is_head:
        return 1
    if role.is_tail:
        return -1
    return 0


def _flat_step(p) -> int:
    # classical passages step through their flattened role
    if p.role.is_classical:
        return 1 if (p.sign > 0) != (p.role.value == "O") else -1
    return _step(p.role)


def label_arcs(code: KnotoidCode) -> ArcLabeling:
    """Incoming integer label at every passage.

    The open component starts at 0. Closed components are seeded by propagation
    from the first labelled passage of a chord they share with an already
    labelled component; a component whose labels fail to close up raises
    LabelingError."""
    comps = code.components
    incoming: list[list[int] | None] = [None] * len(comps)

    def fill(k: int, start_pos: int, start_label: int):
        comp = comps[k]
        n = len(comp)
        inc = [0] * n
        lab = start_label
        for off in range(n):
            i = (start_pos + off) % n
            inc[i] = lab
            lab += _flat_step(comp[i])
        if k > 0 and lab != start_label:
            raise LabelingError(
                f"component {k} labels drift by {lab - start_label} around the cycle")
        incoming[k] = inc

    fill(0, 0, 0)
    # propagate into closed components via shared chords
    changed = True
    while changed:
        changed = False
        chord_pos: dict[int, list[tuple[int, int]]] = {}
        for k, comp in enumerate(comps):
            for i, p in enumerate(comp):
                chord_pos.setdefault(p.chord, []).append((k, i))
        for cid, places in chord_pos.items():
            if len(places) != 2:
                continue
            (k1, i1), (k2, i2) = places
            if (incoming[k1] is None) == (incoming[k2] is None):
                continue
            if incoming[k1] is None:
                (k1, i1), (k2, i2) = (k2, i2), (k1, i1)
            # label entering the unlabelled twin equals the label entering the
            # labelled passage adjusted by the crossing's local rule: the two
            # incoming arcs at one crossing are independent, so seed with the
            # labelled side's incoming value (diagnostic convention)
            fill(k2, i2, incoming[k1][i1])
            changed = True
    for k, inc in enumerate(incoming):
        if inc is None:
            fill(k, 0, 0)
    return ArcLabeling(tuple(tuple(x) for x in incoming))


def writhe(code: KnotoidCode) -> int:
    """Sum of classical crossing signs."""
    return sum(code.sign_of(c) for c in code.classical_chords())


def flat_weights(code: KnotoidCode) -> dict[int, int]:
    """W+ of every flat (or flattened classical) chord, single open component."""
    if len(code.components) != 1:
        raise ComponentCountError("flat weights need a single open component")
    work = flatten(code) if code.classical_chords() else code
    inc = label_arcs(work).incoming[0]
    pos: dict[int, dict[str, int]] = {}
    for i, p in enumerate(work.open_component):
        pos.setdefault(p.chord, {})["tail" if p.role.is_tail else "head"] = i
    out = {}
    for cid, d in pos.items():
        if "tail" in d and "head" in d:
            out[cid] = inc[d["tail"]] - (inc[d["head"]] + 1)
    return out


@dataclass(frozen=True)
class CrossingReport:
    chord: int
    sign: int
    weight: int
    flat_weight: int


def crossing_reports(code: KnotoidCode) -> list[CrossingReport]:
    """Per-crossing signs and weights of a classical code; W_D = sgn * W+."""
    wplus = flat_weights(code)
    out = []
    for cid in code.classical_chords():
        s = code.sign_of(cid)
        out.append(CrossingReport(cid, s, s * wplus[cid], wplus[cid]))
    return out


def affine_index_polynomial(code: KnotoidCode) -> LaurentPoly:
    """P(t) = sum over classical crossings of sgn(c) (t^{W_D(c)} - 1)."""
    p = LaurentPoly.zero()
    for rep in crossing_reports(code):
        p = p + LaurentPoly({rep.weight: rep.sign}) - LaurentPoly({0: rep.sign})
    return p


def affine_index_decomposition(code: KnotoidCode):
    """(P, P_plus, P_minus, w0_prime) with P = P_plus + P_minus + w0_prime."""
    reps = crossing_reports(code)
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    w0 = 0
    w = 0
    for r in reps:
        w += r.sign
        if r.weight > 0:
            pos[r.weight] = pos.get(r.weight, 0) + r.sign
        elif r.weight < 0:
            neg[r.weight] = neg.get(r.weight, 0) + r.sign
        else:
            w0 += r.sign
    p_plus = LaurentPoly(pos)
    p_minus = LaurentPoly(neg)
    w0_prime = w0 - w
    return affine_index_polynomial(code), p_plus, p_minus, w0_prime


def nth_writhe(code: KnotoidCode, n: int) -> int:
    """Signed count of classical crossings with weight n."""
    return sum(r.sign for r in crossing_reports(code) if r.weight == n)


def flat_nth_writhe(code: KnotoidCode, n: int) -> int:
    """f_n = sum of sign(W+(c)) over flat crossings with |W+(c)| = n, n > 0."""
    if n <= 0:
        raise ValidityError("flat n-th writhe is defined for n > 0")
    total = 0
    for wp in flat_weights(code).values():
        if abs(wp) == n:
            total += 1 if wp > 0 else -1
    return total


def flat_affine_polynomial(code: KnotoidCode) -> LaurentPoly:
    """Q(t) = sum over n > 0 of f_n t^n; only positive exponents occur."""
    c: dict[int, int] = {}
    for wp in flat_weights(code).values():
        if wp != 0:
            n = abs(wp)
            c[n] = c.get(n, 0) + (1 if wp > 0 else -1)
    return LaurentPoly(c)


def intersection_index(view: OrderedTwoComponent) -> int:
    """Signed count of chords joining the two components.

    A joining chord counts +1 when its arrow tail lies on the first component
    and -1 otherwise; swapping the ordering negates the result."""
    code = view.code
    if code.classical_chords():
        code = flatten(code)
    comp_of: dict[int, dict[str, int]] = {}
    for k, comp in enumerate(code.components):
        for p in comp:
            comp_of.setdefault(p.chord, {})["tail" if p.role.is_tail else "head"] = k
    total = 0
    for cid, d in comp_of.items():
        if d["tail"] != d["head"]:
            total += 1 if d["tail"] == view.ell1 else -1
    return total
