"""Exact multivariate Laurent polynomials over Gaussian rationals.

A polynomial is a mapping from exponent vectors (tuples of ints, negative
allowed) to nonzero Scalar coefficients, tied to a fixed variable Context.
The monomial order used everywhere is graded lexicographic over the
context's variable order.
"""

from __future__ import annotations

import heapq

from gmpy2 import mpq

from .errors import ContextMismatchError, NonSquareError, ZeroDivisorError
from .scalars import Scalar


class Context:
    """A fixed, ordered list of variable names."""

    __slots__ = ("name", "variables", "index", "nvars")

    def __init__(self, name: str, variables: tuple):
        self.name = name
        self.variables = tuple(variables)
        self.index = {v: k for k, v in enumerate(self.variables)}
        self.nvars = len(self.variables)

    def __repr__(self):
        return f"Context({self.name!r}, {self.variables!r})"

    def var(self, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * self.nvars
        exps[self.index[name]] = power
        return LaurentPoly(self, {tuple(exps): Scalar.one()})

    def monomial(self, coeff, **powers) -> "LaurentPoly":
        c = Scalar.of(coeff)
        if c.is_zero():
            return self.zero()
        exps = [0] * self.nvars
        for name, p in powers.items():
            exps[self.index[name]] = p
        return LaurentPoly(self, {tuple(exps): c})

    def const(self, coeff) -> "LaurentPoly":
        c = Scalar.of(coeff)
        if c.is_zero():
            return self.zero()
        return LaurentPoly(self, {(0,) * self.nvars: c})

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)


# The two working contexts of the operator side and the cluster side, the
# commutative ring of curve symbols, and the one-variable helper contexts.
OP = Context("op", ("u", "x", "x0", "b1", "b2"))
CLUSTER = Context("cluster", ("z1", "z2", "z3", "z4", "z5", "z6"))
KRING = Context("kring", ("k1", "k2", "k3", "k12", "k23", "k123", "b1", "b2"))
SKEIN_A = Context("skein", ("A",))
MARKOV = Context("markov", ("x1", "y1", "z1", "b1"))
PHI = Context("phi", ("w",))


def _order_key(exps):
    return (sum(exps), exps)


def _heap_key(exps):
    """Min-heap entry that pops the graded-lex largest exponent first."""
    return (-sum(exps), tuple(-x for x in exps), exps)


class LaurentPoly:
    """Immutable exact Laurent polynomial."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: Context, terms: dict):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(
            self, "terms", {e: c for e, c in terms.items() if not c.is_zero()}
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        ((e, c),) = self.terms.items()
        return not any(e) and c.is_one()

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_order_key)
        return e, self.terms[e]

    def constant_scalar(self) -> Scalar:
        """Value as a Scalar; requires the polynomial to be constant."""
        if self.is_zero():
            return Scalar.zero()
        ((e, c),) = self.terms.items()
        if any(e):
            raise ValueError("not a constant polynomial")
        return c

    def content_exponents(self) -> tuple:
        """Componentwise minimum exponent over the support."""
        if not self.terms:
            return (0,) * self.ctx.nvars
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.ctx is not other.ctx:
            raise ContextMismatchError(
                f"mixed contexts {self.ctx.name!r} and {other.ctx.name!r}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentPoly(self.ctx, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        if not self.terms or not other.terms:
            return self.ctx.zero()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc = {}
        for e1, c1 in a.items():
            r1, i1 = c1.re, c1.im
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                if i1 or c2.im:
                    re = r1 * c2.re - i1 * c2.im
                    im = r1 * c2.im + i1 * c2.re
                else:
                    re = r1 * c2.re
                    im = mpq(0)
                cur = acc.get(key)
                if cur is None:
                    acc[key] = [re, im]
                else:
                    cur[0] += re
                    cur[1] += im
        return LaurentPoly(
            self.ctx,
            {e: Scalar(r, i) for e, (r, i) in acc.items() if r or i},
        )

    def scale(self, coeff) -> "LaurentPoly":
        c = Scalar.of(coeff)
        if c.is_zero():
            return self.ctx.zero()
        return LaurentPoly(self.ctx, {e: v * c for e, v in self.terms.items()})

    def mul_monomial(self, exps: tuple, coeff=None) -> "LaurentPoly":
        c = Scalar.one() if coeff is None else Scalar.of(coeff)
        return LaurentPoly(
            self.ctx,
            {
                tuple(a + b for a, b in zip(e, exps)): v * c
                for e, v in self.terms.items()
            },
        )

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError(
                    "negative power of a non-monomial Laurent polynomial"
                )
            ((e, c),) = self.terms.items()
            inv = LaurentPoly(self.ctx, {tuple(-x for x in e): c.inverse()})
            return inv ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ctx.name, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitutions -------------------------------------------------

    def qshift(self, var_shifts: dict, invert: str = None) -> "LaurentPoly":
        """Monomial substitution v -> m_v * v (optionally v -> m_v * v^-1).

        var_shifts maps a variable name to an exponent vector that gets
        added once per power of that variable; invert names at most one
        variable whose exponent is negated afterwards.  This is the fused
        form used by the q-shift commutation rules.
        """
        if not var_shifts and invert is None:
            return self
        idx = self.ctx.index
        shifts = [(idx[v], vec) for v, vec in var_shifts.items()]
        inv_i = idx[invert] if invert is not None else None
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            for i, vec in shifts:
                k = e[i]
                if k:
                    for j, step in enumerate(vec):
                        if step:
                            ne[j] += k * step
            if inv_i is not None:
                ne[inv_i] = -ne[inv_i]
            key = tuple(ne)
            cur = out.get(key)
            out[key] = c if cur is None else cur + c
        return LaurentPoly(self.ctx, out)

    def substitute_monomial(self, var: str, exps: tuple, coeff=None) -> "LaurentPoly":
        """v -> coeff * X^exps, an invertible monomial image."""
        i = self.ctx.index[var]
        c = Scalar.one() if coeff is None else Scalar.of(coeff)
        out = {}
        for e, v in self.terms.items():
            k = e[i]
            ne = list(e)
            ne[i] = 0
            for j, step in enumerate(exps):
                if step:
                    ne[j] += k * step
            val = v * c ** k if k else v
            key = tuple(ne)
            cur = out.get(key)
            out[key] = val if cur is None else cur + val
        return LaurentPoly(self.ctx, out)

    def map_context(self, target: Context, images: list) -> object:
        """Ring-map into another context; images may be polys or fractions.

        Returns whatever type the arithmetic of the images produces.
        """
        from .ratfn import RationalFn  # local import, avoids a cycle

        def as_target(v):
            if isinstance(v, RationalFn):
                return v
            return RationalFn.from_poly(v)

        imgs = [as_target(v) for v in images]
        total = RationalFn.from_poly(target.zero())
        for e, c in self.terms.items():
            term = RationalFn.from_poly(target.const(c))
            for i, k in enumerate(e):
                if k:
                    term = term * imgs[i] ** k
            total = total + term
        return total

    # -- content / division / sqrt --------------------------------------

    def strip_content(self):
        """Return (exponent vector, ordinary-poly part) with p = X^c * part."""
        c = self.content_exponents()
        if not any(c):
            return c, self
        neg = tuple(-x for x in c)
        return c, self.mul_monomial(neg)

    def exact_div(self, divisor: "LaurentPoly", max_steps: int = None):
        """Exact quotient self/divisor, or None when it does not divide.

        max_steps, when given, aborts long-running divisions (returning
        None) — used by the opportunistic cancellation pass, where a missed
        cancellation only costs size, never correctness.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisorError("zero divisor")
        if self.is_zero():
            return self
        if divisor.is_monomial():
            ((e, c),) = divisor.terms.items()
            return self.mul_monomial(tuple(-x for x in e), c.inverse())
        sc, p = self.strip_content()
        dc, d = divisor.strip_content()
        if len(p) < len(d):
            return None
        lt_e, lt_c = d.leading()
        d_rest = [(e, c) for e, c in d.terms.items() if e != lt_e]
        quot = {}
        rem = dict(p.terms)
        # Max-heap with lazy deletion: processed leading exponents strictly
        # decrease, so a popped exponent is never re-inserted live twice.
        heap = [_heap_key(e) for e in rem]
        heapq.heapify(heap)
        steps = 0
        while rem:
            re = heapq.heappop(heap)[-1]
            if re not in rem:
                continue
            qe = tuple(a - b for a, b in zip(re, lt_e))
            if any(x < 0 for x in qe):
                return None
            steps += 1
            if max_steps is not None and steps > max_steps:
                return None
            qc = rem.pop(re) / lt_c
            quot[qe] = qc
            for e, c in d_rest:
                key = tuple(a + b for a, b in zip(e, qe))
                cur = rem.get(key)
                if cur is None:
                    rem[key] = -c * qc
                    heapq.heappush(heap, _heap_key(key))
                else:
                    s = cur - c * qc
                    if s.is_zero():
                        del rem[key]
                    else:
                        rem[key] = s
        q = LaurentPoly(self.ctx, quot)
        shift = tuple(a - b for a, b in zip(sc, dc))
        if any(shift):
            q = q.mul_monomial(shift)
        return q

    def sqrt(self) -> "LaurentPoly":
        """Exact square root, graded-lex leading coefficient branch.

        The chosen branch has positive real leading coefficient (positive
        imaginary if the real part vanishes).  Raises NonSquareError when
        no such root exists; the result is always verified by squaring.
        """
        if self.is_zero():
            raise NonSquareError("non-square: zero input")
        content, p = self.strip_content()
        if any(k % 2 for k in content):
            raise NonSquareError("non-square: odd monomial content")
        half = tuple(k // 2 for k in content)
        lt_e, lt_c = p.leading()
        if any(k % 2 for k in lt_e):
            raise NonSquareError("non-square: odd leading exponent")
        r0_e = tuple(k // 2 for k in lt_e)
        r0_c = lt_c.sqrt()
        root = {r0_e: r0_c}
        two_lead = r0_c + r0_c
        rem = p - LaurentPoly(self.ctx, root) * LaurentPoly(self.ctx, root)
        cap = 8 * len(p) + 64
        while not rem.is_zero():
            if len(root) > cap:
                raise NonSquareError("non-square")
            e, c = rem.leading()
            te = tuple(a - b for a, b in zip(e, r0_e))
            tc = c / two_lead
            t = LaurentPoly(self.ctx, {te: tc})
            r = LaurentPoly(self.ctx, root)
            rem = rem - (r * t + r * t + t * t)
            cur = root.get(te)
            nc = tc if cur is None else cur + tc
            if nc.is_zero():
                root.pop(te, None)
            else:
                root[te] = nc
        result = LaurentPoly(self.ctx, root)
        if any(half):
            result = result.mul_monomial(half)
        check = result * result
        if check != self:
            raise NonSquareError("non-square")
        return result

    # -- rendering / serialization --------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.ctx.variables, e)
                if k
            )
            cs = str(c)
            needs_paren = ("+" in cs[1:]) or ("-" in cs[1:])
            if not mono:
                parts.append(f"({cs})" if needs_paren else cs)
            elif c.is_one():
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                cs = f"({cs})" if needs_paren else cs
                parts.append(f"{cs}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"<{self.ctx.name}: {self}>"

    def to_json(self) -> list:
        return [
            {"exps": list(e), "re": str(c.re), "im": str(c.im)}
            for e, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(ctx: Context, data: list) -> "LaurentPoly":
        terms = {}
        for item in data:
            e = tuple(int(k) for k in item["exps"])
            if len(e) != ctx.nvars:
                raise ValueError("exponent vector length mismatch")
            c = Scalar(mpq(item["re"]), mpq(item["im"]))
            if not c.is_zero():
                terms[e] = terms.get(e, Scalar.zero()) + c
        return LaurentPoly(ctx, terms)


class GcdBudgetExceeded(Exception):
    """Raised when a budgeted GCD run would get expensive."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left):
        self.left = left

    def spend(self, amount: int):
        if self.left is None:
            return
        self.left -= amount
        if self.left < 0:
            raise GcdBudgetExceeded


def gcd(p: LaurentPoly, q: LaurentPoly, budget: int = None) -> LaurentPoly:
    """Multivariate GCD by primitive PRS, up to a unit.

    Only used by the optional fraction-reduction post-pass.  The PRS can
    blow up on large coprime inputs, so callers may bound the work; a
    GcdBudgetExceeded escape means "give up", never a wrong answer.
    """
    if p.ctx is not q.ctx:
        raise ContextMismatchError("gcd across contexts")
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    _, p = p.strip_content()
    _, q = q.strip_content()
    g = _gcd_rec(p, q, p.ctx.nvars - 1, _Budget(budget))
    _, g = g.strip_content()
    return g


def _poly_in_var(p: LaurentPoly, i: int) -> dict:
    """View p as a univariate poly in variable i with LaurentPoly coeffs."""
    ctx = p.ctx
    out = {}
    for e, c in p.terms.items():
        d = e[i]
        rest = list(e)
        rest[i] = 0
        key = tuple(rest)
        coeff = out.setdefault(d, {})
        coeff[key] = coeff.get(key, Scalar.zero()) + c
    return {d: LaurentPoly(ctx, t) for d, t in out.items()}


def _from_var(ctx: Context, i: int, coeffs: dict) -> LaurentPoly:
    total = ctx.zero()
    unit = [0] * ctx.nvars
    for d, c in coeffs.items():
        unit[i] = d
        total = total + c.mul_monomial(tuple(unit))
    return total


def _is_unit(p: LaurentPoly) -> bool:
    return len(p) == 1


def _gcd_rec(p: LaurentPoly, q: LaurentPoly, level: int, budget) -> LaurentPoly:
    ctx = p.ctx
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if _is_unit(p) or _is_unit(q):
        return ctx.one()
    if level < 0:
        return ctx.one()
    budget.spend(len(p) + len(q))
    pu = _poly_in_var(p, level)
    qu = _poly_in_var(q, level)
    if len(pu) == 1 and 0 in pu and len(qu) == 1 and 0 in qu:
        return _gcd_rec(pu[0], qu[0], level - 1, budget)

    def content(u):
        g = ctx.zero()
        # smallest coefficients first so coprime pairs exit immediately
        for c in sorted(u.values(), key=len):
            g = _gcd_rec(g, c, level - 1, budget)
            if _is_unit(g):
                return ctx.one()
        return g

    def primitive(u, cont):
        if cont.is_zero() or cont.is_one():
            return dict(u)
        return {d: c.exact_div(cont) for d, c in u.items()}

    cp, cq = content(pu), content(qu)
    cont_g = _gcd_rec(cp, cq, level - 1, budget)
    a = primitive(pu, cp)
    b = primitive(qu, cq)
    if max(a) < max(b):
        a, b = b, a
    while True:
        budget.spend(sum(len(c) for c in b.values()))
        r = _pseudo_rem(a, b, ctx)
        if not r:
            g = _from_var(ctx, level, b)
            break
        rc = content(r)
        a = b
        b = primitive(r, rc)
    _, g = g.strip_content()
    if not _is_unit(g):
        gu = _poly_in_var(g, level)
        gc = content(gu)
        g = _from_var(ctx, level, primitive(gu, gc))
    if cont_g.is_zero() or cont_g.is_one():
        return g
    return g * cont_g


# Fixed evaluation points for the coprimality projection, one per slot.
_PROJECTION_POINTS = (3, 5, 7, 11, 13, 17, 19, 23)


def probably_coprime(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Cheap one-variable projection test.

    Substitutes fixed small integers for all variables but the main one of
    q and runs a univariate Euclid.  A trivial projected gcd certifies
    nothing in the unlucky direction, so a True answer may rarely miss a
    common factor; callers use it only to skip hopeless full-GCD runs.
    """
    ctx = p.ctx
    _, qq = q.strip_content()
    main = max(range(ctx.nvars), key=lambda i: max(e[i] for e in qq.terms))
    a = _project(p, main)
    b = _project(q, main)
    if a is None or b is None or not a or not b:
        return False
    return _uni_gcd_degree(a, b) == 0


def _project(p: LaurentPoly, main: int):
    out = {}
    for e, c in p.terms.items():
        val = c
        for i, k in enumerate(e):
            if i == main or not k:
                continue
            val = val * Scalar(mpq(_PROJECTION_POINTS[i % 8])) ** k
        d = e[main]
        cur = out.get(d)
        out[d] = val if cur is None else cur + val
    out = {d: c for d, c in out.items() if not c.is_zero()}
    low = min(out) if out else 0
    return {d - low: c for d, c in out.items()} if out else None


def _uni_gcd_degree(a: dict, b: dict) -> int:
    while b:
        da, db = max(a), max(b)
        if da < db:
            a, b = b, a
            continue
        lead = b[db].inverse()
        b = {d: c * lead for d, c in b.items()}
        while a and max(a) >= db:
            da = max(a)
            la = a.pop(da)
            for d, c in b.items():
                if d == db:
                    continue
                key = d + da - db
                cur = a.get(key, Scalar.zero())
                s = cur - c * la
                if s.is_zero():
                    a.pop(key, None)
                else:
                    a[key] = s
        a, b = b, a
    return max(a) if a else 0


def _pseudo_rem(a: dict, b: dict, ctx: Context) -> dict:
    """Pseudo-remainder of univariate-view polys a by b (b nonzero)."""
    db = max(b)
    lead_b = b[db]
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        lead_r = r.pop(dr)
        nr = {d: c * lead_b for d, c in r.items()}
        for d, c in b.items():
            if d == db:
                continue
            key = d + dr - db
            cur = nr.get(key, ctx.zero())
            nr[key] = cur - c * lead_r
        r = {d: c for d, c in nr.items() if not c.is_zero()}
    return r
