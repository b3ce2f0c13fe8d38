"""Elementary moves on diagram words, their sites, and certificates.

The move families and their word forms:

* ``R1`` / ``VR1``: a curl at a turning point.  Left-to-right rewrites a
  single ``cup``/``cap`` slice into the same slice with a crossing of the
  two turning strands next to it; right-to-left removes such a crossing.
* ``R2`` / ``VR2``: a poke.  Left-to-right inserts a cancelling pair of
  crossings ``[T1 p, T2 p]`` on two adjacent strands; right-to-left
  removes a matched pair.  The classical pair is ``x+ x-`` (left strand
  passes over) or ``x- x+``; the virtual pair is ``v v``.
* the triangle family ``R3`` / ``VR3`` / ``VR4`` / ``WR``: three
  consecutive crossings on three consecutive strands in the shape
  ``[a p, b p+1, c p]`` (left form) or ``[c p+1, b p, a p+1]`` (right
  form), where ``a``, ``b``, ``c`` are the crossings of the strand pairs
  (1,2), (1,3), (2,3).  Sliding between the two forms preserves each
  pair's crossing token.  Which family a token triple belongs to (or
  whether it is one of the forbidden patterns) is decided by
  :func:`classify_triple`.

A certificate is a replayable sequence of isotopy steps and move
instances; :func:`verify_certificate` replays it under a regime that
controls which move kinds are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Diagram, DiagramError, Slice, SliceKind
from .isotopy import IsoKind, IsotopyStep, apply_isotopy, splice


class MoveKind(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    VR1 = "VR1"
    VR2 = "VR2"
    VR3 = "VR3"
    VR4 = "VR4"
    WR = "WR"


class Regime(str, Enum):
    CLASSICAL = "classical"
    VIRTUAL = "virtual"
    WELDED = "welded"


REGIME_MOVES = {
    Regime.CLASSICAL: frozenset({MoveKind.R1, MoveKind.R2, MoveKind.R3}),
    Regime.VIRTUAL: frozenset(MoveKind) - {MoveKind.WR},
    Regime.WELDED: frozenset(MoveKind),
}


class MoveError(DiagramError):
    """Stale or ill-formed move instance, or a regime violation."""


@dataclass(frozen=True)
class MoveInstance:
    """One elementary move matched at a word site.

    ``index`` anchors the pattern (or the insertion slot); ``pos`` is the
    strand position for insertion moves.  ``prep`` is a sequence of
    isotopy steps applied first, letting a pattern split across
    non-adjacent slices be matched after rearrangement inside a bounded
    window.
    """

    kind: MoveKind
    ltr: bool
    variant: str
    index: int
    pos: int = 0
    prep: tuple[IsotopyStep, ...] = ()

    def direction(self) -> str:
        return "ltr" if self.ltr else "rtl"

    def __str__(self) -> str:
        site = f"{self.index}" + (f" {self.pos}" if self.pos else "")
        return f"move {self.kind.value} {self.direction()} {self.variant} @ {site}"


Step = IsotopyStep | MoveInstance
Certificate = tuple[Step, ...]


_TOKEN = {SliceKind.XP: "+", SliceKind.XM: "-", SliceKind.V: "v"}
_KIND_OF_TOKEN = {"+": SliceKind.XP, "-": SliceKind.XM, "v": SliceKind.V}

_R3_CYCLIC = {("+", "-", "+"), ("-", "+", "-")}
_WR_TRIPLES = {("+", "+", "v"), ("v", "-", "-"), ("-", "v", "+")}
_FORBIDDEN_TRIPLES = {("-", "-", "v"), ("v", "+", "+"), ("+", "v", "-")}


def classify_triple(a: str, b: str, c: str) -> MoveKind | None:
    """Which triangle move a token triple realizes, None if not a move.

    ``a``, ``b``, ``c`` are the tokens of the crossings between strand
    pairs (1,2), (1,3), (2,3) in left-form order.  All-classical triples
    are R3 unless the over-relation is cyclic; all-virtual is VR3; one
    classical crossing in the a or c slot with the other two virtual is
    VR4; two classical crossings sharing an over-strand plus a virtual
    one form WR (the mirror pattern with a shared under-strand is the
    forbidden move and is not a move here).
    """
    t = (a, b, c)
    nv = sum(1 for x in t if x == "v")
    if nv == 0:
        return None if t in _R3_CYCLIC else MoveKind.R3
    if nv == 3:
        return MoveKind.VR3
    if nv == 2:
        # the classical crossing must be between the two strands whose
        # mutual crossings with the third are virtual, i.e. in the a or c
        # slot; with it in the middle slot the rewrite changes the sheet
        # state of the classical crossing in the 2-cyclic cover and is not
        # a move at all
        return MoveKind.VR4 if b == "v" else None
    if t in _WR_TRIPLES:
        return MoveKind.WR
    return None


R1_LTR_VARIANTS = {
    MoveKind.R1: ("cup+", "cup-", "cap+", "cap-"),
    MoveKind.VR1: ("cupv", "capv"),
}
R1_RTL_VARIANTS = ("cup", "cap")
R2_VARIANTS = {MoveKind.R2: ("lo", "ro"), MoveKind.VR2: ("vv",)}
_R2_PAIR = {"lo": (SliceKind.XP, SliceKind.XM),
            "ro": (SliceKind.XM, SliceKind.XP),
            "vv": (SliceKind.V, SliceKind.V)}

TRIANGLE_KINDS = (MoveKind.R3, MoveKind.VR3, MoveKind.VR4, MoveKind.WR)


def is_triangle(kind: MoveKind) -> bool:
    return kind in TRIANGLE_KINDS


# -- site enumeration ----------------------------------------------------------

def enumerate_sites(d: Diagram, kind: MoveKind, ltr: bool,
                    regime: Regime = Regime.WELDED) -> list[MoveInstance]:
    """All direct (prep-free) sites where the move applies.

    Deterministic order: by slice index, then variant, then position.
    For window-search matching across rearrangements, see
    :func:`enumerate_sites_window`.
    """
    if kind not in REGIME_MOVES[regime]:
        return []
    if regime is Regime.CLASSICAL and any(
            sl.kind is SliceKind.V for sl in d.slices):
        raise MoveError("classical regime rejects diagrams with virtual crossings")
    out: list[MoveInstance] = []
    if kind in (MoveKind.R1, MoveKind.VR1):
        virt = kind is MoveKind.VR1
        if ltr:
            for i, sl in enumerate(d.slices):
                if sl.kind is SliceKind.CUP:
                    for v in (("cupv",) if virt else ("cup+", "cup-")):
                        out.append(MoveInstance(kind, True, v, i, sl.pos))
                elif sl.kind is SliceKind.CAP:
                    for v in (("capv",) if virt else ("cap+", "cap-")):
                        out.append(MoveInstance(kind, True, v, i, sl.pos))
        else:
            for i, sl in enumerate(d.slices):
                if not sl.is_crossing():
                    continue
                if virt != (sl.kind is SliceKind.V):
                    continue
                if i > 0 and d.slices[i - 1] == Slice(SliceKind.CUP, sl.pos):
                    out.append(MoveInstance(kind, False, "cup", i - 1, sl.pos))
                elif i + 1 < len(d.slices) and \
                        d.slices[i + 1] == Slice(SliceKind.CAP, sl.pos):
                    out.append(MoveInstance(kind, False, "cap", i, sl.pos))
        return out
    if kind in (MoveKind.R2, MoveKind.VR2):
        variants = R2_VARIANTS[kind]
        if ltr:
            for i in range(len(d.slices) + 1):
                for p in range(1, d.widths[i]):
                    for v in variants:
                        out.append(MoveInstance(kind, True, v, i, p))
        else:
            for i in range(len(d.slices) - 1):
                s1, s2 = d.slices[i], d.slices[i + 1]
                if not (s1.is_crossing() and s2.is_crossing()
                        and s1.pos == s2.pos):
                    continue
                for v in variants:
                    if (s1.kind, s2.kind) == _R2_PAIR[v]:
                        out.append(MoveInstance(kind, False, v, i, s1.pos))
        return out
    # triangle family
    for i in range(len(d.slices) - 2):
        s0, s1, s2 = d.slices[i], d.slices[i + 1], d.slices[i + 2]
        if not (s0.is_crossing() and s1.is_crossing() and s2.is_crossing()):
            continue
        p = s0.pos
        if ltr and (s1.pos, s2.pos) == (p + 1, p):
            a, b, c = _TOKEN[s0.kind], _TOKEN[s1.kind], _TOKEN[s2.kind]
        elif not ltr and (s1.pos, s2.pos) == (p - 1, p):
            c, b, a = _TOKEN[s0.kind], _TOKEN[s1.kind], _TOKEN[s2.kind]
        else:
            continue
        if classify_triple(a, b, c) is kind:
            out.append(MoveInstance(kind, ltr, a + b + c, i))
    return out


# -- application ---------------------------------------------------------------

def apply_move(d: Diagram, m: MoveInstance) -> Diagram:
    """Apply one move instance; raises :class:`MoveError` on mismatch."""
    for step in m.prep:
        d = apply_isotopy(d, step)
    i = m.index
    sl = d.slices[i] if 0 <= i < len(d.slices) else None

    if m.kind in (MoveKind.R1, MoveKind.VR1):
        return _apply_r1(d, m, sl)
    if m.kind in (MoveKind.R2, MoveKind.VR2):
        return _apply_r2(d, m)
    if is_triangle(m.kind):
        return _apply_triangle(d, m)
    raise MoveError(f"unknown move kind {m.kind}")


def _curl_crossing(variant: str) -> SliceKind:
    return {"+": SliceKind.XP, "-": SliceKind.XM, "v": SliceKind.V}[variant[3]]


def _apply_r1(d: Diagram, m: MoveInstance, sl: Slice | None) -> Diagram:
    i = m.index
    if m.ltr:
        if sl is None:
            raise MoveError(f"no slice at {i}")
        if m.variant.startswith("cup"):
            if sl.kind is not SliceKind.CUP or sl.pos != m.pos:
                raise MoveError(f"expected cup {m.pos} at slice {i}, found {sl}")
            rep = (sl, Slice(_curl_crossing(m.variant), sl.pos))
        elif m.variant.startswith("cap"):
            if sl.kind is not SliceKind.CAP or sl.pos != m.pos:
                raise MoveError(f"expected cap {m.pos} at slice {i}, found {sl}")
            rep = (Slice(_curl_crossing(m.variant), sl.pos), sl)
        else:
            raise MoveError(f"bad R1 variant {m.variant!r}")
        return _checked(d, splice(d, i, i + 1, rep), m)
    if i + 1 >= len(d.slices):
        raise MoveError(f"no slice pair at {i}")
    s0, s1 = d.slices[i], d.slices[i + 1]
    virt_want = m.kind is MoveKind.VR1
    if m.variant == "cup":
        ok = (s0.kind is SliceKind.CUP and s1.is_crossing()
              and s1.pos == s0.pos and (s1.kind is SliceKind.V) == virt_want)
        rep = (s0,)
    elif m.variant == "cap":
        ok = (s1.kind is SliceKind.CAP and s0.is_crossing()
              and s0.pos == s1.pos and (s0.kind is SliceKind.V) == virt_want)
        rep = (s1,)
    else:
        raise MoveError(f"bad R1 variant {m.variant!r}")
    if not ok:
        raise MoveError(f"no curl of {m.kind.value} at slices ({i}, {i + 1})")
    return _checked(d, splice(d, i, i + 2, rep), m)


def _apply_r2(d: Diagram, m: MoveInstance) -> Diagram:
    i = m.index
    if m.variant not in _R2_PAIR:
        raise MoveError(f"bad R2 variant {m.variant!r}")
    k1, k2 = _R2_PAIR[m.variant]
    if (m.kind is MoveKind.VR2) != (m.variant == "vv"):
        raise MoveError(f"variant {m.variant!r} does not fit {m.kind.value}")
    if m.ltr:
        if not 0 <= i <= len(d.slices):
            raise MoveError(f"insertion slot {i} out of range")
        if not 1 <= m.pos < d.widths[i]:
            raise MoveError(f"no adjacent strand pair at position {m.pos} in gap {i}")
        rep = (Slice(k1, m.pos), Slice(k2, m.pos))
        return _checked(d, splice(d, i, i, rep), m)
    if i + 1 >= len(d.slices):
        raise MoveError(f"no slice pair at {i}")
    s0, s1 = d.slices[i], d.slices[i + 1]
    if (s0.kind, s1.kind) != (k1, k2) or s0.pos != s1.pos:
        raise MoveError(
            f"no {m.variant} pair at slices ({i}, {i + 1}): {s0}; {s1}")
    return _checked(d, splice(d, i, i + 2, ()), m)


def _apply_triangle(d: Diagram, m: MoveInstance) -> Diagram:
    i = m.index
    if i + 2 >= len(d.slices):
        raise MoveError(f"no slice triple at {i}")
    s0, s1, s2 = d.slices[i], d.slices[i + 1], d.slices[i + 2]
    if not (s0.is_crossing() and s1.is_crossing() and s2.is_crossing()):
        raise MoveError(f"slices ({i}..{i + 2}) are not all crossings")
    p = s0.pos
    if len(m.variant) != 3 or any(ch not in _KIND_OF_TOKEN for ch in m.variant):
        raise MoveError(f"bad triangle variant {m.variant!r}")
    a, b, c = m.variant
    if classify_triple(a, b, c) is not m.kind:
        raise MoveError(f"variant {m.variant!r} is not a {m.kind.value} triple")
    ka, kb, kc = (_KIND_OF_TOKEN[x] for x in (a, b, c))
    if m.ltr:
        want = ((ka, p), (kb, p + 1), (kc, p))
        rep = (Slice(kc, p + 1), Slice(kb, p), Slice(ka, p + 1))
    else:
        want = ((kc, p), (kb, p - 1), (ka, p))
        rep = (Slice(ka, p - 1), Slice(kb, p), Slice(kc, p - 1))
    got = ((s0.kind, s0.pos), (s1.kind, s1.pos), (s2.kind, s2.pos))
    if got != want:
        raise MoveError(f"triangle {m.variant!r} ({m.direction()}) does not "
                        f"match slices ({i}..{i + 2})")
    return _checked(d, splice(d, i, i + 3, rep), m)


def _checked(d: Diagram, out: Diagram, m: MoveInstance) -> Diagram:
    if out.ncomponents != d.ncomponents:
        raise MoveError(f"move {m} changed the component count")
    return out


def invert_move(d_before: Diagram, m: MoveInstance) -> MoveInstance:
    """The exact inverse instance of ``m`` applied after it.

    Only valid for prep-free instances; prep steps are inverted separately
    by certificate machinery.
    """
    if m.prep:
        raise MoveError("cannot invert an instance with prep steps")
    if m.kind in (MoveKind.R1, MoveKind.VR1):
        if m.ltr:
            variant = m.variant[:3]
            return MoveInstance(m.kind, False, variant, m.index, m.pos)
        sl = d_before.slices[m.index if m.variant == "cap" else m.index + 1]
        token = _TOKEN[sl.kind]
        suffix = "v" if token == "v" else token
        return MoveInstance(m.kind, True, m.variant + suffix, m.index, m.pos)
    return MoveInstance(m.kind, not m.ltr, m.variant, m.index, m.pos)


# -- certificates ---------------------------------------------------------------

def verify_certificate(start: Diagram, cert: Certificate,
                       regime: Regime = Regime.WELDED) -> Diagram:
    """Replay a certificate strictly in order; returns the final diagram.

    Raises :class:`MoveError` naming the step index when a site fails or a
    move is outside the regime.
    """
    d = start
    allowed = REGIME_MOVES[regime]
    for n, step in enumerate(cert):
        try:
            if isinstance(step, IsotopyStep):
                d = apply_isotopy(d, step)
            else:
                if step.kind not in allowed:
                    raise MoveError(
                        f"{step.kind.value} is not allowed in the "
                        f"{regime.value} regime")
                if regime is Regime.CLASSICAL and any(
                        sl.kind is SliceKind.V for sl in d.slices):
                    raise MoveError("classical regime rejects diagrams "
                                    "with virtual crossings")
                d = apply_move(d, step)
        except DiagramError as e:
            raise MoveError(f"step {n} ({step}): {e}") from e
    return d


def invert_certificate(start: Diagram, cert: Certificate) -> Certificate:
    """A certificate replaying the reverse transformation."""
    from .isotopy import invert_isotopy
    states = [start]
    for step in cert:
        if isinstance(step, IsotopyStep):
            states.append(apply_isotopy(states[-1], step))
        else:
            states.append(apply_move(states[-1], step))
    out: list[Step] = []
    for step, before in zip(reversed(cert), reversed(states[:-1])):
        if isinstance(step, IsotopyStep):
            out.append(invert_isotopy(before, step))
        else:
            for p in reversed(step.prep):
                before = apply_isotopy(before, p)
            replay = before
            inv_preps = []
            for p in step.prep:
                inv_preps.append(invert_isotopy(replay, p))
                replay = apply_isotopy(replay, p)
            core = MoveInstance(step.kind, step.ltr, step.variant,
                                step.index, step.pos)
            out.append(invert_move(replay, core))
            out.extend(reversed(inv_preps))
    return tuple(out)


# -- certificate text format -----------------------------------------------------

def format_certificate(cert: Certificate) -> str:
    """One step per line; prep isotopies are flattened before their move."""
    lines = []
    for step in cert:
        if isinstance(step, IsotopyStep):
            lines.append(str(step))
        else:
            lines.extend(str(p) for p in step.prep)
            core = MoveInstance(step.kind, step.ltr, step.variant,
                                step.index, step.pos)
            lines.append(str(core))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_certificate(text: str) -> Certificate:
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "iso":
                kind = IsoKind(words[1])
                assert words[2] == "@"
                idx = int(words[3])
                if kind is IsoKind.ZZ_CREATE:
                    steps.append(IsotopyStep(kind, idx, int(words[4]), words[5]))
                elif kind is IsoKind.SLIDE:
                    steps.append(IsotopyStep(kind, idx, 0, words[4]))
                elif kind is IsoKind.COMMUTE and len(words) > 4:
                    steps.append(IsotopyStep(kind, idx, 0, words[4]))
                else:
                    steps.append(IsotopyStep(kind, idx))
            elif words[0] == "move":
                kind = MoveKind(words[1])
                ltr = {"ltr": True, "rtl": False}[words[2]]
                variant = words[3]
                assert words[4] == "@"
                idx = int(words[5])
                pos = int(words[6]) if len(words) > 6 else 0
                steps.append(MoveInstance(kind, ltr, variant, idx, pos))
            else:
                raise ValueError(f"unknown step {words[0]!r}")
        except (ValueError, KeyError, IndexError, AssertionError) as e:
            raise MoveError(f"certificate line {lineno}: {raw.strip()!r}: {e}") \
                from None
    return tuple(steps)
