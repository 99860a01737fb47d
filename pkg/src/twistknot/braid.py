"""Braid words, closures, and the cabling used to parallelize torus knots.

Conventions, fixed once and used everywhere:

* A word on n strands is a sequence of nonzero letters g with
  1 <= |g| <= n-1.  Letter g crosses the strands in slots |g|-1 and |g|
  (slots are 0-based, slot 0 leftmost); positive letters are
  right-handed crossings.  Words are read top to bottom and the closure
  joins bottom slot i to top slot i.
* ``torus_braid(p, q)`` is the q-th power of the descending row
  s_{p-1} s_{p-2} ... s_1, so the strand entering top slot i exits at
  bottom slot (i + q) mod p.  Negative q uses the inverse word, whose
  closure is the mirror image.
* Twist regions sit on the leftmost slots; the parallelization cuts the
  two rightmost strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise ValueError(
                    f"letter {g} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Map each top slot to the bottom slot its strand exits at.

    For concatenated words the maps compose in word order:
    permutation(u * v)[i] = permutation(v)[permutation(u)[i]].
    """
    n = w.strands
    pos = list(range(n))   # pos[strand] = current slot
    at = list(range(n))    # at[slot] = strand
    for g in w.letters:
        i = abs(g) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return tuple(pos)


def component_count(w: BraidWord) -> int:
    """Number of components of the closure = cycles of the permutation."""
    f = permutation(w)
    seen = [False] * w.strands
    count = 0
    for i in range(w.strands):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = f[j]
    return count


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def torus_braid(p: int, q: int) -> BraidWord:
    if p < 2:
        raise ValueError(f"torus braid needs p >= 2, got {p}")
    if q == 0:
        return BraidWord(p, ())
    if q > 0:
        row = tuple(range(p - 1, 0, -1))
        return BraidWord(p, row * q)
    row = tuple(-i for i in range(1, p))
    return BraidWord(p, row * (-q))


def full_twists(r: int, s: int) -> BraidWord:
    """s full twists on r strands: the (r, r*s) torus word, identity permutation."""
    if r < 2:
        raise ValueError(f"full twists need r >= 2, got {r}")
    return torus_braid(r, r * s)


def twisted_torus_braid(p: int, q: int, r: int, s: int) -> BraidWord:
    """The (p, q) torus word followed by s full twists on the leftmost r strands."""
    if not (p > r > 1):
        raise ValueError(f"need p > r > 1, got p={p}, r={r}")
    if q == 0:
        raise ValueError("q must be nonzero")
    tw = full_twists(r, s)
    return BraidWord(p, torus_braid(p, q).letters + tw.letters)


def cable_expand(w: BraidWord, m_top: tuple[int, ...]) -> tuple[BraidWord, tuple[int, ...]]:
    """Replace each strand by a flat bundle of parallel copies.

    ``m_top[i]`` is the width of the bundle entering top slot i.  Each
    letter becomes the block crossing of the two bundles currently at
    its slots (u*v crossings, all of the letter's sign), after which the
    bundle widths swap.  No twist letters are inserted inside a bundle;
    the copies are parallel in the flat diagram.  Returns the expanded
    word and the bottom width sequence.
    """
    if len(m_top) != w.strands:
        raise ValueError(
            f"need one multiplicity per strand: {len(m_top)} != {w.strands}")
    if any(m < 1 for m in m_top):
        raise ValueError("multiplicities must be positive")
    cur = list(m_top)
    offsets = [0] * (w.strands + 1)
    for i, m in enumerate(cur):
        offsets[i + 1] = offsets[i] + m
    out: list[int] = []
    for g in w.letters:
        i = abs(g) - 1
        u, v = cur[i], cur[i + 1]
        start = offsets[i]
        sgn = 1 if g > 0 else -1
        for k in range(v):
            for j in range(u, 0, -1):
                out.append(sgn * (start + j + k))
        cur[i], cur[i + 1] = v, u
        offsets[i + 1] = offsets[i] + v
    return BraidWord(sum(m_top), tuple(out)), tuple(cur)


def pass_winding(slot: int, p: int, q: int) -> int:
    """Windings around the closure axis of one braid pass.

    In the (p, q) torus word a strand entering top slot v moves one slot
    rightward per row and sweeps back from slot p-1 to slot 0; each
    sweep is one winding.  Negative q winds the other way.
    """
    if q >= 0:
        j0 = p - slot if slot >= 1 else p
        return 0 if j0 > q else 1 + (q - j0) // p
    qq = -q
    j0 = slot + 1
    return -(0 if j0 > qq else 1 + (qq - j0) // p)


def closure_arcs(w: BraidWord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the knot closure at the two rightmost strands.

    Returns the top slots visited by the arc entering at slot n-1 (it
    exits at bottom slot n-2) and by the complementary arc entering at
    n-2.  Requires a knot closure on at least 3 strands.
    """
    n = w.strands
    if n < 3:
        raise ValueError(f"need at least 3 strands, got {n}")
    if component_count(w) != 1:
        raise ValueError("closure is not a knot")
    f = permutation(w)

    def walk(start: int, stop: int) -> tuple[int, ...]:
        slots = [start]
        x = f[start]
        while x != stop:
            slots.append(x)
            x = f[x]
        return tuple(slots)

    arc1 = walk(n - 1, n - 2)
    arc2 = walk(n - 2, n - 1)
    if set(arc1) | set(arc2) != set(range(n)):
        raise AssertionError("arcs do not partition the slots")
    return arc1, arc2


def _torus_winding(base: BraidWord, twist_letters: tuple[int, ...]) -> int:
    """Recover q from a word of the form torus_braid(n, q) + twist block.

    The windings of the strand passes are read off the torus rows, not
    the closure permutation (which only sees q mod n), so the word must
    literally have the standard row structure.
    """
    n = base.strands
    body_len = len(base.letters) - len(twist_letters)
    if body_len < 0 or base.letters[body_len:] != twist_letters:
        raise ValueError("word does not end with the declared twist block")
    body = base.letters[:body_len]
    if body_len % (n - 1) != 0:
        raise ValueError("torus part is not a whole number of rows")
    rows = body_len // (n - 1)
    q = rows if (not body or body[0] > 0) else -rows
    if body != torus_braid(n, q).letters:
        raise ValueError("base is not a torus word followed by the "
                         "declared twist block; parallel copies are only "
                         "defined on the standard words")
    return q


def parallelize(base: BraidWord, x1: int, x2: int,
                twist_region: tuple[int, int] | None = None) -> BraidWord:
    """Replace the two closure arcs of a knot braid by parallel copies.

    The arc entering at top slot n-1 is replaced by x1 parallel strands
    and the complementary arc by x2; the joining block of x1 + x2
    strands at the two rightmost slots is realized by the plain closure
    of the expanded word.  The closure of the result has gcd(x1, x2)
    components.

    Copies are parallel on the surface carrying the knot, not in the
    flat diagram: a cabled arc needs one internal full twist per winding
    of the arc around the closure axis, and one per twist of a declared
    twist region per pass through it (a flat full twist over-twists each
    bundle passing it once per turn).  The windings are read off the
    word's torus rows, so for widths above one the base must be a
    standard torus word, optionally followed by a twist block declared
    as ``twist_region=(r, s)`` (s full twists on slots 0..r-1).
    """
    if x1 < 1 or x2 < 1:
        raise ValueError(f"multiplicities must be positive, got ({x1}, {x2})")
    n = base.strands
    if x1 == 1 and x2 == 1:
        closure_arcs(base)  # validate the preconditions all the same
        return base
    r0, s0 = twist_region if twist_region is not None else (0, 0)
    if twist_region is not None and not (1 < r0 < n):
        raise ValueError(f"twist region width {r0} out of range")
    q = _torus_winding(base, full_twists(r0, s0).letters if r0 else ())
    arc1, arc2 = closure_arcs(base)
    in_arc1 = set(arc1)
    m_top = tuple(x1 if i in in_arc1 else x2 for i in range(n))
    expanded, bottom = cable_expand(base, m_top)
    letters = list(expanded.letters)

    for tops, width, end_slot in ((arc1, x1, n - 2), (arc2, x2, n - 1)):
        if width < 2:
            continue
        windings = sum(pass_winding(v, n, q) for v in tops)
        twist_passes = sum(1 for v in tops if (v + q) % n < r0)
        defect = windings + s0 * twist_passes
        if defect:
            offset = sum(bottom[:end_slot])
            for g in full_twists(width, defect).letters:
                letters.append(g + offset if g > 0 else g - offset)
    return BraidWord(expanded.strands, tuple(letters))


def connected_sum(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Stack two knot braids side by side, sharing one strand.

    The result lives on n1 + n2 - 1 strands; its closure is the
    connected sum of the two closures.
    """
    for w in (w1, w2):
        if component_count(w) != 1:
            raise ValueError("connected sum needs knot closures")
    shift = w1.strands - 1
    shifted = tuple(g + shift if g > 0 else g - shift for g in w2.letters)
    return BraidWord(w1.strands + w2.strands - 1, w1.letters + shifted)


def format_word(w: BraidWord) -> str:
    """Two-line text form: ``strands: <n>`` then the letters."""
    return f"strands: {w.strands}\n" + " ".join(str(g) for g in w.letters) + "\n"


def parse_word(text: str) -> BraidWord:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or not lines[0].startswith("strands:"):
        raise ValueError("braid text must start with 'strands: <n>'")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ValueError(f"bad strand count in {lines[0]!r}") from None
    letters: tuple[int, ...] = ()
    if len(lines) > 1 and lines[1]:
        try:
            letters = tuple(int(tok) for tok in lines[1].split())
        except ValueError:
            raise ValueError("letters must be integers") from None
    return BraidWord(n, letters)
