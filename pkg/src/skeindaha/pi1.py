"""Free-group model of the fundamental group of the twice-punctured torus.

Words are tuples of signed letters over A, B, C1, C2.  The three twist
automorphisms act by letterwise substitution; preservation of the boundary
relator is checked up to cyclic rotation and conjugation.
"""

from __future__ import annotations

import re

from .errors import ParseError, SkeindahaError

LETTERS = ("A", "B", "C1", "C2")

# A word is a tuple of (letter, +-1) pairs, freely reduced.


def free_reduce(word) -> tuple:
    """Cancel adjacent inverse pairs until none remain; idempotent."""
    out = []
    for letter, sign in word:
        if sign not in (1, -1):
            raise SkeindahaError("letters must carry sign +-1")
        if out and out[-1][0] == letter and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((letter, sign))
    return tuple(out)


def invert(word) -> tuple:
    return tuple((letter, -sign) for letter, sign in reversed(word))


def concat(*words) -> tuple:
    total = []
    for w in words:
        total.extend(w)
    return free_reduce(total)


def _w(text: str) -> tuple:
    return parse_free_word(text)


RELATOR = (("A", 1), ("B", 1), ("A", -1), ("B", -1), ("C1", 1), ("C2", 1))

_DELTA = {
    1: {"B": (("B", 1), ("A", -1))},
    2: {"A": (("A", 1), ("B", 1))},
    3: {
        "A": (("C2", 1), ("A", 1), ("C2", -1)),
        "B": (("B", 1), ("A", -1), ("C2", -1)),
        "C2": (("C2", 1), ("A", 1), ("C2", 1), ("A", -1), ("C2", -1)),
    },
}


def delta_images(i: int) -> dict:
    """Images of all four letters under one twist automorphism."""
    if i not in _DELTA:
        raise SkeindahaError("twist index must be 1, 2 or 3")
    table = {letter: ((letter, 1),) for letter in LETTERS}
    table.update(_DELTA[i])
    return table


def delta_apply(i: int, word) -> tuple:
    """Letterwise substitution, then free reduction."""
    table = delta_images(i)
    out = []
    for letter, sign in word:
        img = table[letter]
        out.extend(img if sign > 0 else invert(img))
    return free_reduce(out)


def delta_inverse_images(i: int) -> dict:
    """Inverse map solved on the generators (verified by composition)."""
    inv = {
        1: {"B": (("B", 1), ("A", 1))},
        2: {"A": (("A", 1), ("B", -1))},
        3: {
            "A": (("A", -1), ("C2", -1), ("A", 1), ("C2", 1), ("A", 1)),
            "B": (("B", 1), ("C2", 1), ("A", 1)),
            "C2": (("A", -1), ("C2", 1), ("A", 1)),
        },
    }[i]
    table = {letter: ((letter, 1),) for letter in LETTERS}
    table.update(inv)
    return table


def apply_images(table: dict, word) -> tuple:
    out = []
    for letter, sign in word:
        img = table[letter]
        out.extend(img if sign > 0 else invert(img))
    return free_reduce(out)


def cyclic_reduce(word) -> tuple:
    w = free_reduce(word)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return w


def _rotations(word):
    for k in range(max(1, len(word))):
        yield word[k:] + word[:k]


def relator_preserved(i: int) -> bool:
    """The twist sends the boundary relator to a conjugate of itself.

    Checked by cyclic reduction followed by rotation matching against the
    relator and its inverse; conjugating prefixes are absorbed by the
    cyclic reduction.
    """
    image = cyclic_reduce(delta_apply(i, RELATOR))
    target = cyclic_reduce(RELATOR)
    if len(image) != len(target):
        return False
    candidates = set(_rotations(target)) | set(_rotations(invert(target)))
    return image in candidates


def relator_image_exact(i: int) -> bool:
    """Whether the relator maps to itself verbatim after free reduction."""
    return delta_apply(i, RELATOR) == RELATOR


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------

_FREE_TOKEN = re.compile(r"^(A|B|C1|C2)(?:\^(-?\d+))?$")


def parse_free_word(text: str) -> tuple:
    out = []
    for tok in text.split():
        m = _FREE_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad free-group letter {tok!r}", text.find(tok))
        power = int(m.group(2) or 1)
        sign = 1 if power > 0 else -1
        out.extend(((m.group(1), sign),) * abs(power))
    return free_reduce(out)


def render_free_word(word) -> str:
    if not word:
        return "1"
    parts = []
    run = None
    for letter, sign in word:
        if run and run[0] == letter and run[1] == sign:
            run = (letter, sign, run[2] + 1)
        else:
            if run:
                parts.append(run)
            run = (letter, sign, 1)
    parts.append(run)
    return " ".join(
        l if s > 0 and n == 1 else f"{l}^{s * n}" for l, s, n in parts
    )


_TWIST_ITEM = re.compile(r"^(-?)([123])(?:\^(-?\d+))?$")


def parse_twist_word(text: str):
    """Flatten `2,1^-3`-style twist notation into a signed index tuple."""
    out = []
    pos = 0
    if not text.strip():
        return ()
    for part in text.split(","):
        item = part.strip()
        m = _TWIST_ITEM.match(item)
        if not m:
            raise ParseError(f"bad twist item {item!r}", pos)
        base = int(m.group(2)) * (-1 if m.group(1) else 1)
        power = int(m.group(3)) if m.group(3) is not None else 1
        if power < 0:
            base, power = -base, -power
        out.extend((base,) * power)
        pos += len(part) + 1
    return tuple(out)


def render_twist_word(indices) -> str:
    return ",".join(str(i) for i in indices)
