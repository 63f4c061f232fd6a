"""Reidemeister-type rewrites on Gauss codes.

Implemented rule families:

* kink insert/delete (R1)
* poke insert/delete (R2)
* triangle slide (R3), matched against a checked-in table of oriented variants
  (data/r3_variants.json) generated by enumerating three oriented lines in the
  plane; classical variants also carry a consistent sheet order
* the preferred-singularity slide on flat singular codes (PreferredSwitch)

Virtual-crossing moves act trivially on Gauss codes (virtual crossings are not
recorded) and are therefore not represented.

Moves never connect the open component's two ends: adjacency is linear on the
open component and cyclic on closed ones.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from importlib import resources

from .codes import KnotoidCode, Passage, Role
from .errors import StaleMoveError, ValidityError

__all__ = ["MoveInstance", "enumerate_moves", "apply_move", "random_walk", "simplify"]


@dataclass(frozen=True)
class MoveInstance:
    rule: str                    # R1_insert/R1_delete/R2_insert/R2_delete/R3/PreferredSwitch
    sites: tuple                 # rule-specific (component, position) data
    variant: str = ""

    def sort_key(self):
        return (self.rule, self.sites, self.variant)


def _load_variants() -> dict:
    with resources.files("knotoids").joinpath("data/r3_variants.json").open() as fh:
        data = json.load(fh)
    return {"classical": set(data["classical"]), "flat": set(data["flat"])}


_R3_TABLE = None


def _r3_table() -> dict:
    global _R3_TABLE
    if _R3_TABLE is None:
        _R3_TABLE = _load_variants()
    return _R3_TABLE


def r3_signature(sites) -> str:
    """Canonical signature of three ordered passage pairs.

    Each passage is (chord_key, role_char, sign_int); chords are renamed by the
    sorted indices of the two sites they touch, and the signature is minimized
    over site orderings. Must stay in sync with the generator of
    data/r3_variants.json."""
    best = None
    for perm in itertools.permutations(range(3)):
        appearances: dict = {}
        for new_idx, old_idx in enumerate(perm):
            for (chord, _role, _sgn) in sites[old_idx]:
                appearances.setdefault(chord, []).append(new_idx)
        rename = {ch: "".join(str(i) for i in sorted(v)) for ch, v in appearances.items()}
        parts = []
        for old_idx in perm:
            parts.append(",".join(
                f"{rename[ch]}{role}{'+' if sg > 0 else '-' if sg < 0 else ''}"
                for (ch, role, sg) in sites[old_idx]))
        s = ";".join(parts)
        if best is None or s < best:
            best = s
    return best


def _family(code: KnotoidCode, family: str | None) -> str:
    if family is not None:
        if family not in ("classical", "flat"):
            raise ValidityError(f"unknown move family {family!r}")
        return family
    if code.flat_chords() or (code.singular_chords() and not code.classical_chords()):
        return "flat"
    return "classical"


def _adjacent_pairs(code: KnotoidCode):
    """All (comp, i) with the pair (i, i+1 cyclic); linear on the open component."""
    for k, comp in enumerate(code.components):
        n = len(comp)
        if n < 2:
            continue
        last = n - 1 if k == 0 else n
        for i in range(last):
            yield k, i, (i + 1) % n


def _pair_positions(code: KnotoidCode, comp: int, i: int) -> tuple[int, int]:
    n = len(code.components[comp])
    j = i + 1 if comp == 0 else (i + 1) % n
    if not (0 <= i < n) or not (0 <= j < n) or (comp == 0 and j >= n):
        raise StaleMoveError("site out of range")
    return i, j


def _movable(p: Passage, fam: str) -> bool:
    if fam == "classical":
        return p.role.is_classical
    return p.role.is_flat or p.role.is_singular


# -- enumeration ------------------------------------------------------------

def enumerate_moves(code: KnotoidCode, family: str | None = None,
                    rules: tuple[str, ...] | None = None) -> list[MoveInstance]:
    """All applicable moves, deterministically ordered.

    `rules` restricts which rule families are generated (all by default)."""
    fam = _family(code, family)

    def want(rule):
        return rules is None or rule in rules

    out = []
    if want("R1_delete"):
        out += _r1_deletes(code, fam)
    if want("R2_delete"):
        out += _r2_deletes(code, fam)
    if want("R3"):
        out += _r3_moves(code, fam)
    if want("R1_insert"):
        out += _r1_inserts(code, fam)
    if want("R2_insert"):
        out += _r2_inserts(code, fam)
    if want("PreferredSwitch") and fam == "flat" and code.preferred_chord() is not None:
        out += _preferred_switches(code)
    out.sort(key=MoveInstance.sort_key)
    return out


def _r1_deletes(code, fam):
    moves = []
    seen = set()
    for k, i, j in _adjacent_pairs(code):
        a, b = code.components[k][i], code.components[k][j]
        if a.chord != b.chord or a.role.is_singular:
            continue
        if not _movable(a, fam):
            continue
        key = (k, frozenset((i, j)))
        if key in seen:
            continue
        seen.add(key)
        moves.append(MoveInstance("R1_delete", ((k, i),)))
    return moves


_R1_VARIANTS = {"classical": ("O+", "O-", "U+", "U-"), "flat": ("AB", "BA")}


def _r1_inserts(code, fam):
    moves = []
    for k, comp in enumerate(code.components):
        for gap in range(len(comp) + 1):
            for v in _R1_VARIANTS[fam]:
                moves.append(MoveInstance("R1_insert", ((k, gap),), v))
    return moves


def _r2_pair_ok(a1, a2, b1, b2, fam) -> bool:
    """Do passages (a1,a2) at one site and (b1,b2) at the other form a poke pair?"""
    x, y = a1.chord, a2.chord
    if x == y or {b1.chord, b2.chord} != {x, y}:
        return False
    ps = [a1, a2, b1, b2]
    if any(p.role.is_singular for p in ps):
        return False
    if fam == "classical":
        if not all(p.role.is_classical for p in ps):
            return False
        if a1.sign != -a2.sign:
            return False
        roles1 = {a1.role, a2.role}
        roles2 = {b1.role, b2.role}
        return (roles1, roles2) in (({Role.OVER}, {Role.UNDER}), ({Role.UNDER}, {Role.OVER}))
    if not all(p.role.is_flat for p in ps):
        return False
    # each site holds one tail and one head, of different chords
    return a1.role != a2.role and b1.role != b2.role


def _r2_deletes(code, fam):
    moves = []
    pairs = list(_adjacent_pairs(code))
    for (ka, ia, ja), (kb, ib, jb) in itertools.combinations(pairs, 2):
        if ka == kb and {ia, ja} & {ib, jb}:
            continue
        a1, a2 = code.components[ka][ia], code.components[ka][ja]
        b1, b2 = code.components[kb][ib], code.components[kb][jb]
        if _r2_pair_ok(a1, a2, b1, b2, fam):
            moves.append(MoveInstance("R2_delete", ((ka, ia), (kb, ib))))
    return moves


# variant -> (site1 pattern, site2 pattern); entries are (which_chord, role, sign_factor)
# which_chord 0 is the first fresh id, 1 the second; classical signs are s and -s
_R2_CLASSICAL = {}
for _over_first, _s, _rev in itertools.product((True, False), (1, -1), (False, True)):
    _r1 = Role.OVER if _over_first else Role.UNDER
    _r2 = Role.UNDER if _over_first else Role.OVER
    _site1 = ((0, _r1, _s), (1, _r1, -_s))
    _site2 = ((0, _r2, _s), (1, _r2, -_s))
    if _rev:
        _site2 = (_site2[1], _site2[0])
    _R2_CLASSICAL[f"{_r1.value}{'+' if _s > 0 else '-'}{'r' if _rev else 'f'}"] = (_site1, _site2)

_R2_FLAT = {}
for _tail_first, _rev in itertools.product((True, False), (False, True)):
    _site1 = ((0, Role.TAIL, None), (1, Role.HEAD, None)) if _tail_first else \
             ((0, Role.HEAD, None), (1, Role.TAIL, None))
    _site2 = ((0, Role.HEAD, None), (1, Role.TAIL, None)) if _tail_first else \
             ((0, Role.TAIL, None), (1, Role.HEAD, None))
    if _rev:
        _site2 = (_site2[1], _site2[0])
    _R2_FLAT[f"{'AB' if _tail_first else 'BA'}{'r' if _rev else 'f'}"] = (_site1, _site2)


def _r2_inserts(code, fam):
    table = _R2_CLASSICAL if fam == "classical" else _R2_FLAT
    gaps = [(k, g) for k, comp in enumerate(code.components) for g in range(len(comp) + 1)]
    moves = []
    for (k1, g1), (k2, g2) in itertools.combinations_with_replacement(gaps, 2):
        for v in table:
            moves.append(MoveInstance("R2_insert", ((k1, g1), (k2, g2)), v))
    return moves


def _r3_moves(code, fam):
    pairs = []
    for k, i, j in _adjacent_pairs(code):
        a, b = code.components[k][i], code.components[k][j]
        if a.chord == b.chord:
            continue
        if fam == "classical":
            if not (a.role.is_classical and b.role.is_classical):
                continue
        else:
            if a.role.is_classical or b.role.is_classical:
                continue
        pairs.append((k, i, j))
    table = _r3_table()[fam]
    moves = []
    for trip in itertools.combinations(pairs, 3):
        positions = set()
        ok = True
        for (k, i, j) in trip:
            for pos in ((k, i), (k, j)):
                if pos in positions:
                    ok = False
                positions.add(pos)
        if not ok:
            continue
        chords: dict[int, int] = {}
        for (k, i, j) in trip:
            for pos in (i, j):
                c = code.components[k][pos].chord
                chords[c] = chords.get(c, 0) + 1
        if len(chords) != 3 or set(chords.values()) != {2}:
            continue
        sig = r3_signature(tuple(_site_tuple(code, k, i, j) for (k, i, j) in trip))
        if sig in table:
            moves.append(MoveInstance("R3", tuple((k, i) for (k, i, j) in trip), sig))
    return moves


def _site_tuple(code, k, i, j):
    def pt(p: Passage):
        role = p.role.value[-1]  # SA -> A, SB -> B
        return (p.chord, role, p.sign if p.sign is not None else 0)
    return (pt(code.components[k][i]), pt(code.components[k][j]))


def _preferred_switches(code):
    comp = code.open_component
    pref = code.preferred_chord()
    pos = {}
    for i, p in enumerate(comp):
        pos.setdefault(p.chord, {})["tail" if p.role.is_tail else "head"] = i
    if pref not in pos or len(pos[pref]) != 2:
        return []
    moves = []
    for cid, d in pos.items():
        if cid == pref or len(d) != 2:
            continue
        if code.components[0][d["tail"]].role.is_singular:
            continue
        if _arc_empty(comp, pos[pref]["tail"], d["head"]) and \
           _arc_empty(comp, d["tail"], pos[pref]["head"]):
            moves.append(MoveInstance("PreferredSwitch", ((0, pos[pref]["tail"]), (0, d["tail"])),
                                      f"{pref}->{cid}"))
    return moves


def _arc_empty(comp, i, j) -> bool:
    # every position is an arrow endpoint, so the arc interior is empty iff
    # the two positions are adjacent
    return abs(i - j) <= 1


# -- application -------------------------------------------------------------

def apply_move(code: KnotoidCode, move: MoveInstance) -> KnotoidCode:
    try:
        if move.rule == "R1_delete":
            return _apply_r1_delete(code, move)
        if move.rule == "R1_insert":
            return _apply_r1_insert(code, move)
        if move.rule == "R2_delete":
            return _apply_r2_delete(code, move)
        if move.rule == "R2_insert":
            return _apply_r2_insert(code, move)
        if move.rule == "R3":
            return _apply_r3(code, move)
        if move.rule == "PreferredSwitch":
            return _apply_switch(code, move)
    except (IndexError, ValidityError) as exc:
        raise StaleMoveError(str(exc)) from exc
    raise StaleMoveError(f"unknown rule {move.rule!r}")


def _delete_positions(code, doomed: dict[int, set[int]]) -> KnotoidCode:
    comps = []
    for k, comp in enumerate(code.components):
        dead = doomed.get(k, set())
        comps.append(tuple(p for i, p in enumerate(comp) if i not in dead))
    return KnotoidCode(tuple(comps))


def _apply_r1_delete(code, move):
    (k, i), = move.sites
    i, j = _pair_positions(code, k, i)
    a, b = code.components[k][i], code.components[k][j]
    if a.chord != b.chord or a.role.is_singular:
        raise StaleMoveError("no kink at site")
    return _delete_positions(code, {k: {i, j}})


def _apply_r1_insert(code, move):
    (k, gap), = move.sites
    comp = code.components[k]
    if not 0 <= gap <= len(comp):
        raise StaleMoveError("gap out of range")
    cid = code.fresh_chord_id()
    v = move.variant
    if v in ("AB", "BA"):
        roles = (Role.TAIL, Role.HEAD) if v == "AB" else (Role.HEAD, Role.TAIL)
        ins = (Passage(cid, roles[0]), Passage(cid, roles[1]))
    elif v and v[0] in "OU" and v[1] in "+-":
        sign = 1 if v[1] == "+" else -1
        first = Role.OVER if v[0] == "O" else Role.UNDER
        ins = (Passage(cid, first, sign), Passage(cid, first.flipped(), sign))
    else:
        raise StaleMoveError(f"bad kink variant {v!r}")
    comps = list(code.components)
    comps[k] = comp[:gap] + ins + comp[gap:]
    return KnotoidCode(tuple(comps))


def _apply_r2_delete(code, move):
    (ka, ia), (kb, ib) = move.sites
    ia, ja = _pair_positions(code, ka, ia)
    ib, jb = _pair_positions(code, kb, ib)
    if ka == kb and {ia, ja} & {ib, jb}:
        raise StaleMoveError("overlapping sites")
    a1, a2 = code.components[ka][ia], code.components[ka][ja]
    b1, b2 = code.components[kb][ib], code.components[kb][jb]
    fam = "classical" if a1.role.is_classical else "flat"
    if not _r2_pair_ok(a1, a2, b1, b2, fam):
        raise StaleMoveError("no poke pair at sites")
    doomed: dict[int, set[int]] = {}
    doomed.setdefault(ka, set()).update((ia, ja))
    doomed.setdefault(kb, set()).update((ib, jb))
    return _delete_positions(code, doomed)


def _apply_r2_insert(code, move):
    (k1, g1), (k2, g2) = move.sites
    table = _R2_CLASSICAL if move.variant in _R2_CLASSICAL else _R2_FLAT
    if move.variant not in table:
        raise StaleMoveError(f"bad poke variant {move.variant!r}")
    site1, site2 = table[move.variant]
    cid = code.fresh_chord_id()
    ids = (cid, cid + 1)

    def build(site):
        return tuple(Passage(ids[w], role, sgn) for (w, role, sgn) in site)

    comps = list(code.components)
    if not (0 <= g1 <= len(comps[k1])) or not (0 <= g2 <= len(comps[k2])):
        raise StaleMoveError("gap out of range")
    if k1 == k2:
        comp = comps[k1]
        if g1 > g2:
            raise StaleMoveError("gaps must be ordered")
        first, second = build(site1), build(site2)
        comps[k1] = comp[:g1] + first + comp[g1:g2] + second + comp[g2:]
    else:
        comps[k1] = comps[k1][:g1] + build(site1) + comps[k1][g1:]
        comps[k2] = comps[k2][:g2] + build(site2) + comps[k2][g2:]
    return KnotoidCode(tuple(comps))


def _apply_r3(code, move):
    fam = _family(code, None)
    sites = []
    for (k, i) in move.sites:
        i, j = _pair_positions(code, k, i)
        sites.append((k, i, j))
    sig = r3_signature(tuple(_site_tuple(code, k, i, j) for (k, i, j) in sites))
    if sig not in _r3_table()[fam] or sig != move.variant:
        raise StaleMoveError("triangle pattern no longer matches")
    comps = [list(c) for c in code.components]
    for (k, i, j) in sites:
        comps[k][i], comps[k][j] = comps[k][j], comps[k][i]
    return KnotoidCode(tuple(tuple(c) for c in comps))


def _apply_switch(code, move):
    (k0, pi), (k1, qi) = move.sites
    if k0 != 0 or k1 != 0:
        raise StaleMoveError("preferred switch lives on the open component")
    comp = code.open_component
    try:
        p_chord = comp[pi].chord
        q_chord = comp[qi].chord
    except IndexError:
        raise StaleMoveError("site out of range")
    if not comp[pi].role.is_singular or not comp[qi].role.is_flat:
        raise StaleMoveError("sites are not a singular chord and a flat chord")
    if move not in _preferred_switches(code):
        raise StaleMoveError("switch condition no longer holds")

    def sw(p: Passage) -> Passage:
        if p.chord == p_chord:
            return Passage(p.chord, Role.TAIL if p.role.is_tail else Role.HEAD)
        if p.chord == q_chord:
            return Passage(p.chord, Role.STAIL if p.role.is_tail else Role.SHEAD,
                           None, True)
        return p

    return KnotoidCode(tuple(tuple(sw(p) for p in c) for c in code.components))


# -- drivers ------------------------------------------------------------------

def random_walk(code: KnotoidCode, steps: int, seed: int,
                family: str | None = None) -> KnotoidCode:
    """Apply `steps` uniformly chosen applicable moves; deterministic in `seed`."""
    rng = random.Random(seed)
    for _ in range(steps):
        moves = enumerate_moves(code, family)
        if not moves:
            break
        code = apply_move(code, rng.choice(moves))
    return code


def simplify(code: KnotoidCode) -> KnotoidCode:
    """Greedily delete kinks and poke pairs until none applies.

    Always applies the first deletion in (rule, sites) order, so results are
    reproducible; no canonical-form claim is made."""
    while True:
        dels = [m for m in enumerate_moves(code)
                if m.rule in ("R1_delete", "R2_delete")]
        if not dels:
            return code
        code = apply_move(code, dels[0])
