"""Seeds, y-mutations, the trace map, Poisson brackets, and the
mutation realization of the classical Dehn twists.

Half powers of the y-variables are handled once and for all by the global
substitution y_i = z_i^2, so every trace expression is an honest Laurent
polynomial in z and square roots of mutated monomial images are extracted
by exact polynomial square root (positive-leading-coefficient branch).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .errors import ParseError, SkeindahaError
from .laurent import CLUSTER, KRING, MARKOV, LaurentPoly
from .ratfn import RationalFn
from .scalars import Scalar

N = 6

B_MATRIX = (
    (0, 0, -1, -1, 1, 1),
    (0, 0, 1, 1, -1, -1),
    (1, -1, 0, 0, -1, 1),
    (1, -1, 0, 0, 1, -1),
    (-1, 1, 1, -1, 0, 0),
    (-1, 1, -1, 1, 0, 0),
)


def _z(i: int, power: int = 1) -> LaurentPoly:
    return CLUSTER.var(f"z{i}", power)


@dataclass(frozen=True)
class Seed:
    """Six y-entries as rational functions of the initial z, plus B."""

    y: tuple
    B: tuple

    @staticmethod
    def initial() -> "Seed":
        return Seed(
            tuple(RationalFn.from_poly(_z(i, 2)) for i in range(1, N + 1)),
            B_MATRIX,
        )

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        if self.B != other.B:
            return False
        return all(a.equals(b) for a, b in zip(self.y, other.y))

    def to_json(self) -> dict:
        return {"y": [f.to_json() for f in self.y], "B": [list(r) for r in self.B]}

    @staticmethod
    def from_json(data: dict) -> "Seed":
        y = tuple(RationalFn.from_json(CLUSTER, f) for f in data["y"])
        B = tuple(tuple(int(v) for v in row) for row in data["B"])
        if len(y) != N or len(B) != N or any(len(r) != N for r in B):
            raise SkeindahaError("seed must have six y entries and a 6x6 matrix")
        return Seed(y, B)


def is_skew_symmetric(B) -> bool:
    return all(B[i][j] == -B[j][i] for i in range(N) for j in range(N))


def mutate(seed: Seed, k: int) -> Seed:
    """Involutive mutation at vertex k (1-based)."""
    if not 1 <= k <= N:
        raise SkeindahaError(f"mutation vertex {k} out of range")
    kk = k - 1
    yk = seed.y[kk]
    one = RationalFn.const(CLUSTER, 1)
    plus_inv = one + yk.inverse()
    plus = one + yk
    new_y = []
    for i in range(N):
        if i == kk:
            new_y.append(yk.inverse())
            continue
        b = seed.B[kk][i]
        if b > 0:
            new_y.append(seed.y[i] / plus_inv ** b)
        elif b < 0:
            new_y.append(seed.y[i] * plus ** (-b))
        else:
            new_y.append(seed.y[i])
    new_b = []
    for i in range(N):
        row = []
        for j in range(N):
            if i == kk or j == kk:
                row.append(-seed.B[i][j])
            else:
                row.append(
                    seed.B[i][j]
                    + (abs(seed.B[i][kk]) * seed.B[kk][j]
                       + seed.B[i][kk] * abs(seed.B[kk][j])) // 2
                )
        new_b.append(tuple(row))
    return Seed(tuple(new_y), tuple(new_b))


def permute(seed: Seed, i: int, j: int) -> Seed:
    """Relabel vertices i and j."""
    if i == j:
        raise SkeindahaError("permutation requires two distinct vertices")
    if not (1 <= i <= N and 1 <= j <= N):
        raise SkeindahaError("permutation vertex out of range")
    perm = list(range(N))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    y = tuple(seed.y[perm[a]] for a in range(N))
    B = tuple(tuple(seed.B[perm[a]][perm[b]] for b in range(N)) for a in range(N))
    return Seed(y, B)


# Mutation/permutation words of the three twists, in application order.
TWIST_OPS = {
    1: (("mu", 2), ("mu", 3), ("mu", 2), ("sigma", 3, 5)),
    2: (("mu", 1), ("mu", 6), ("mu", 1), ("sigma", 3, 6)),
    3: (("mu", 2), ("mu", 4), ("mu", 2), ("sigma", 4, 6)),
}


def apply_ops(seed: Seed, ops) -> Seed:
    for op in ops:
        if op[0] == "mu":
            seed = mutate(seed, op[1])
        else:
            seed = permute(seed, op[1], op[2])
    return seed


def dehn_cl(a: int, seed: Seed) -> Seed:
    """Seed image under one classical Dehn twist."""
    if a not in TWIST_OPS:
        raise SkeindahaError("twist index must be 1, 2 or 3")
    return apply_ops(seed, TWIST_OPS[a])


def dehn_cl_word(indices, seed: Seed) -> Seed:
    """Composite twist word, rightmost entry applied first."""
    for a in reversed(tuple(indices)):
        seed = dehn_cl(a, seed)
    return seed


# ---------------------------------------------------------------------------
# Trace map
# ---------------------------------------------------------------------------

def _zmono(*exps) -> LaurentPoly:
    return LaurentPoly(CLUSTER, {tuple(exps): Scalar.one()})


_TRACE = {
    "k1": [(0, 1, 1, 0, 1, 0), (0, 1, -1, 0, 1, 0), (0, -1, -1, 0, 1, 0),
           (0, -1, -1, 0, -1, 0)],
    "k2": [(1, 0, 1, 0, 0, 1), (1, 0, 1, 0, 0, -1), (-1, 0, 1, 0, 0, -1),
           (-1, 0, -1, 0, 0, -1)],
    "k3": [(0, 1, 0, 1, 0, 1), (0, 1, 0, -1, 0, 1), (0, -1, 0, -1, 0, 1),
           (0, -1, 0, -1, 0, -1)],
    "k123": [(1, 0, 0, 1, 1, 0), (1, 0, 0, 1, -1, 0), (-1, 0, 0, 1, -1, 0),
             (-1, 0, 0, -1, -1, 0)],
    "k12": [(1, 1, 0, 0, 1, 1), (1, -1, 0, 0, 1, 1), (1, -1, 0, 0, 1, -1),
            (1, -1, 0, 0, -1, 1), (1, -1, 0, 0, -1, -1), (-1, -1, 0, 0, -1, -1)],
    "k23": [(1, 1, 1, 1, 0, 0), (-1, 1, 1, 1, 0, 0), (-1, 1, 1, -1, 0, 0),
            (-1, 1, -1, 1, 0, 0), (-1, 1, -1, -1, 0, 0), (-1, -1, -1, -1, 0, 0)],
    "b1": [(0, 0, 1, 1, 1, 1), (0, 0, -1, -1, -1, -1)],
    "b2": [(2, 2, 1, 1, 1, 1), (-2, -2, -1, -1, -1, -1)],
}

TRACE_CURVES = ("k1", "k2", "k3", "k12", "k23", "k123", "b1", "b2")


def trace_expr(curve: str) -> LaurentPoly:
    """Laurent expression of a dictionary curve in the z-variables."""
    try:
        exps = _TRACE[curve]
    except KeyError:
        raise SkeindahaError(f"no trace expression for curve {curve!r}") from None
    return LaurentPoly(CLUSTER, {tuple(e): Scalar.one() for e in exps})


def trace_of_kring(expr: LaurentPoly) -> RationalFn:
    """Ring map sending each curve symbol to its trace expression."""
    images = [RationalFn.from_poly(trace_expr(c)) for c in KRING.variables]
    return expr.map_context(CLUSTER, images)


# ---------------------------------------------------------------------------
# Poisson bracket
# ---------------------------------------------------------------------------

def poisson_bracket(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """{z^a, z^c} = (a.B.c / 4) z^(a+c), extended bilinearly over the
    initial exchange matrix."""
    terms = {}
    for ea, ca in f.terms.items():
        rows = [sum(ea[i] * B_MATRIX[i][j] for i in range(N)) for j in range(N)]
        for ec, cc in g.terms.items():
            w = sum(rows[j] * ec[j] for j in range(N))
            if not w:
                continue
            key = tuple(a + c for a, c in zip(ea, ec))
            val = (ca * cc) * Scalar(mpq(w, 4))
            cur = terms.get(key)
            terms[key] = val if cur is None else cur + val
    return LaurentPoly(CLUSTER, terms)


# ---------------------------------------------------------------------------
# Classical Dehn twists on the curve ring
# ---------------------------------------------------------------------------

def _k(name: str) -> LaurentPoly:
    return KRING.var(name)


CLASSICAL_TWIST_IMAGES = {
    1: {
        "k2": _k("k1") * _k("k2") - _k("k12"),
        "k12": _k("k2"),
        "k23": _k("k1") * _k("k23") - _k("k123"),
        "k123": _k("k23"),
    },
    2: {
        "k1": _k("k12"),
        "k3": _k("k2") * _k("k3") - _k("k23"),
        "k12": _k("k2") * _k("k12") - _k("k1"),
        "k23": _k("k3"),
    },
    3: {
        "k2": _k("k23"),
        "k12": _k("k123"),
        "k23": _k("k3") * _k("k23") - _k("k2"),
        "k123": _k("k3") * _k("k123") - _k("k12"),
    },
}


def classical_twist(a: int, expr: LaurentPoly) -> LaurentPoly:
    """Substitute the printed curve images; boundary curves stay fixed."""
    if a not in CLASSICAL_TWIST_IMAGES:
        raise SkeindahaError("twist index must be 1, 2 or 3")
    table = CLASSICAL_TWIST_IMAGES[a]
    images = [table.get(v, _k(v)) for v in KRING.variables]
    out = expr.map_context(KRING, images)
    return out.as_poly()


def classical_twist_word(indices, expr: LaurentPoly) -> LaurentPoly:
    """Composite twist word on the curve ring, rightmost applied first."""
    for a in reversed(tuple(indices)):
        expr = classical_twist(a, expr)
    return expr


# ---------------------------------------------------------------------------
# Identity suite
# ---------------------------------------------------------------------------

_REL_CL_TRIPLES = (
    ("k1", "k2", "k12"),
    ("k12", "k3", "k123"),
    ("k2", "k3", "k23"),
    ("k1", "k23", "k123"),
)


def poisson_suite():
    """All displayed classical relations after trace substitution.

    Yields (label, exact-zero Laurent difference) pairs.
    """
    t = {c: trace_expr(c) for c in TRACE_CURVES}
    half = Scalar(mpq(1, 2))
    for names in _REL_CL_TRIPLES:
        trio = [t[n] for n in names]
        for i in range(3):
            a, b, c = trio[i % 3], trio[(i + 1) % 3], trio[(i + 2) % 3]
            diff = poisson_bracket(a, b) - (a * b).scale(half) + c
            yield f"rel_cl({','.join(names)}).{i}", diff
    yield "bracket_k1_k3", poisson_bracket(t["k1"], t["k3"])
    yield "bracket_k2_k123", poisson_bracket(t["k2"], t["k123"])
    yield (
        "bracket_k12_k23",
        poisson_bracket(t["k12"], t["k23"]) - t["k1"] * t["k3"]
        + t["k2"] * t["k123"],
    )
    yield (
        "product_relation_cl",
        t["k12"] * t["k23"] - t["k1"] * t["k3"] - t["k2"] * t["k123"]
        - t["b1"] - t["b2"],
    )
    yield "coupled_markov_cl", coupled_markov_cl_difference().map_context(
        CLUSTER, [RationalFn.from_poly(t[c]) for c in KRING.variables]
    ).as_poly()


def coupled_markov_cl_difference() -> LaurentPoly:
    """LHS - RHS of the classical coupled Markov relation, in the curve ring."""
    k1, k2, k3 = _k("k1"), _k("k2"), _k("k3")
    k12, k23, k123 = _k("k12"), _k("k23"), _k("k123")
    b1, b2 = _k("b1"), _k("b2")
    lhs = (
        k1 * k2 * k3 * k123
        + k1 * k1 + k2 * k2 + k3 * k3
        + k12 * k12 + k23 * k23 + k123 * k123
    )
    rhs = (
        (k1 * k2 + k3 * k123) * k12
        + (k2 * k3 + k1 * k123) * k23
        + b1 * b2 + KRING.const(4)
    )
    return lhs - rhs


def markov_reduction_check():
    """Puncture removal reduces coupled Markov to twice the Markov form."""
    images = {
        "k1": MARKOV.var("y1"),
        "k2": MARKOV.var("x1"),
        "k3": MARKOV.var("y1"),
        "k12": MARKOV.var("x1") * MARKOV.var("y1") - MARKOV.var("z1"),
        "k23": MARKOV.var("z1"),
        "k123": MARKOV.var("x1"),
        "b1": MARKOV.var("b1"),
        "b2": MARKOV.const(-2),
    }
    reduced = coupled_markov_cl_difference().map_context(
        MARKOV, [RationalFn.from_poly(images[v]) for v in KRING.variables]
    ).as_poly()
    x1, y1, z1 = MARKOV.var("x1"), MARKOV.var("y1"), MARKOV.var("z1")
    markov = (
        x1 * x1 + y1 * y1 + z1 * z1 - x1 * y1 * z1
        - MARKOV.const(2) + MARKOV.var("b1")
    )
    return reduced == markov.scale(2), reduced - markov.scale(2)


def substitute_seed(expr: LaurentPoly, seed: Seed) -> RationalFn:
    """Evaluate a trace expression on a mutated seed.

    Each z-monomial z^a stands for the square root of y^a; its image is the
    exact square root of the product of the seed's y-images.
    """
    total = RationalFn.const(CLUSTER, 0)
    for e, c in expr.terms.items():
        prod = RationalFn.const(CLUSTER, 1)
        for i, k in enumerate(e):
            if k:
                prod = prod * seed.y[i] ** k
        total = total + prod.sqrt().scale(c)
    return total


def mutation_induces_twist_check(a: int, curve: str):
    """trace(D_a(curve)) equals trace(curve) with y mutated."""
    lhs = trace_of_kring(classical_twist(a, _k(curve)))
    rhs = substitute_seed(trace_expr(curve), dehn_cl(a, Seed.initial()))
    return lhs.equals(rhs)


def twist_relation_pairs():
    return (
        ("D_13=D_31", (1, 3), (3, 1)),
        ("D_121=D_212", (1, 2, 1), (2, 1, 2)),
        ("D_232=D_323", (2, 3, 2), (3, 2, 3)),
    )


def twist_relation_check(word1, word2) -> bool:
    """Braid-type relation on the curve ring, compared after trace."""
    for c in KRING.variables:
        e1 = classical_twist_word(word1, _k(c))
        e2 = classical_twist_word(word2, _k(c))
        if e1 != e2 and not trace_of_kring(e1).equals(trace_of_kring(e2)):
            return False
    return True


def fourth_power_check() -> bool:
    """(D_123)^4 is the identity on seeds, hence on trace substitutions."""
    seed = Seed.initial()
    for _ in range(4):
        seed = dehn_cl_word((1, 2, 3), seed)
    return seed == Seed.initial()


CLUSTER_IDENTITY_IDS = (
    "poisson_suite",
    "markov_reduction",
    "mutation_induces_twist",
    "twist_relations",
    "loop30",
)


def verify_cluster_identity(identity: str):
    """Dispatcher over the five named identity groups.

    Returns (passed, detail) with a short human-readable summary.
    """
    if identity == "poisson_suite":
        bad = [label for label, diff in poisson_suite() if not diff.is_zero()]
        return not bad, f"failing: {bad}" if bad else "all brackets vanish"
    if identity == "markov_reduction":
        ok, _ = markov_reduction_check()
        return ok, "reduces to twice the Markov form" if ok else "mismatch"
    if identity == "mutation_induces_twist":
        bad = [
            (a, c)
            for a in (1, 2, 3)
            for c in TRACE_CURVES
            if not mutation_induces_twist_check(a, c)
        ]
        return not bad, f"failing: {bad}" if bad else "24 cases agree"
    if identity == "twist_relations":
        bad = [
            label
            for label, w1, w2 in twist_relation_pairs()
            if not twist_relation_check(w1, w2)
        ]
        if not fourth_power_check():
            bad.append("(D_123)^4=1")
        return not bad, f"failing: {bad}" if bad else "all relations hold"
    if identity == "loop30":
        matches, distinct, returns = loop30_check()
        ok = matches and distinct == 29 and returns
        return ok, (
            f"sequence match={matches}, distinct prefixes={distinct}/29, "
            f"returns={returns}"
        )
    raise SkeindahaError(f"unknown cluster identity {identity!r}")


# ---------------------------------------------------------------------------
# The mutation loop of length 30
# ---------------------------------------------------------------------------

PRINTED_LOOP = (
    2, 5, 2, 1, 5, 1, 2, 5, 3, 2, 1, 3, 1, 2, 3,
    6, 2, 1, 6, 1, 2, 6, 4, 2, 1, 4, 1, 2, 4, 2,
)


def composite_op_stream():
    """Application-order op stream of (D_1 D_2 D_3)^4 (rightmost first)."""
    period = TWIST_OPS[3] + TWIST_OPS[2] + TWIST_OPS[1]
    return period * 4


def flatten_mutations(ops):
    """Push permutations to the end; returns (mutation indices, final perm).

    A permutation occurring before a mutation at vertex k turns it into a
    mutation at the relabeled vertex.
    """
    perm = list(range(1, N + 1))  # perm[k-1] = original label now at k
    out = []
    for op in ops:
        if op[0] == "mu":
            out.append(perm[op[1] - 1])
        else:
            i, j = op[1] - 1, op[2] - 1
            perm[i], perm[j] = perm[j], perm[i]
    return out, tuple(perm)


def cancel_adjacent(indices):
    """Remove adjacent equal pairs (mutations are involutions)."""
    stack = []
    for k in indices:
        if stack and stack[-1] == k:
            stack.pop()
        else:
            stack.append(k)
    return tuple(stack)


def loop30_sequence():
    """The flattened composite; must reproduce the printed loop reversed."""
    flat, perm = flatten_mutations(composite_op_stream())
    return cancel_adjacent(flat), perm


def loop30_check():
    """Execute the loop; the end is the initial seed, no proper prefix is.

    Returns (sequence_matches, prefix_count_distinct, returns_to_start).
    """
    seq, perm = loop30_sequence()
    expected = tuple(reversed(PRINTED_LOOP))
    matches = seq == expected and perm == tuple(range(1, N + 1))
    seed = Seed.initial()
    initial = Seed.initial()
    distinct = 0
    for k in seq[:-1]:
        seed = mutate(seed, k)
        if not seed == initial:
            distinct += 1
    seed = mutate(seed, seq[-1])
    return matches, distinct, seed == initial


# ---------------------------------------------------------------------------
# Mutation scripts
# ---------------------------------------------------------------------------

_SCRIPT_TOKEN = re.compile(r"\s*(?:(\d+)|s\(\s*(\d+)\s*,\s*(\d+)\s*\))\s*")


def parse_mutation_script(text: str):
    """Comma-separated vertex indices with s(i,j) permutation tokens."""
    ops = []
    pos = 0
    expect_comma = False
    while pos < len(text):
        if expect_comma:
            if text[pos] == ",":
                pos += 1
            else:
                raise ParseError("expected ',' in mutation script", pos)
        m = _SCRIPT_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad mutation script at {text[pos:pos+8]!r}", pos)
        if m.group(1):
            ops.append(("mu", int(m.group(1))))
        else:
            ops.append(("sigma", int(m.group(2)), int(m.group(3))))
        pos = m.end()
        expect_comma = True
    if not ops:
        raise ParseError("empty mutation script", 0)
    return tuple(ops)
