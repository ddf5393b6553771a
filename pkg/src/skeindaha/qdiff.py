"""Normal-form arithmetic for q-difference operators.

An operator is a finite sum  coeff * s^eps * d^m * d0^n  with rational
function coefficients in (u, x, x0, b1, b2), where

    s   inverts x,
    d   scales x by q   = u^4,
    d0  scales x0 by q^(1/2) = u^2,

and the symbols always appear in that fixed order.  The commutation rules
are  s x = x^-1 s,  d x = (q x) d,  d0 x0 = (q^(1/2) x0) d0,  s d = d^-1 s,
s^2 = 1, with d, d0 commuting and s acting trivially on x0, b1, b2.

Also defined here: the rational potential of the reduced Askey-Wilson
operator and the two families of first-order shift operators in x0 that
everything downstream is built from.
"""

from __future__ import annotations

from .errors import ContextMismatchError
from .laurent import OP, LaurentPoly
from .ratfn import RationalFn

U_SLOT = OP.index["u"]


def _shift_vec(k: int):
    v = [0] * OP.nvars
    v[U_SLOT] = k
    return tuple(v)


def _coeff_move(c: RationalFn, eps: int, m: int, n: int) -> RationalFn:
    """Move a coefficient leftward across s^eps d^m d0^n."""
    shifts = {}
    if m:
        shifts["x"] = _shift_vec(4 * m)
    if n:
        shifts["x0"] = _shift_vec(2 * n)
    if not shifts and not eps:
        return c
    return c.qshift(shifts, "x" if eps else None)


def _as_coeff(value) -> RationalFn:
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFn.from_poly(value)
    return RationalFn.const(OP, value)


class Operator:
    """Immutable normal-form q-difference operator."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        object.__setattr__(
            self, "terms", {k: c for k, c in terms.items() if not c.is_zero()}
        )

    def __setattr__(self, *a):
        raise AttributeError("Operator is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Operator":
        return Operator({})

    @staticmethod
    def identity() -> "Operator":
        return Operator({(0, 0, 0): RationalFn.const(OP, 1)})

    @staticmethod
    def from_coeff(value) -> "Operator":
        """Multiplication operator by a rational function."""
        return Operator({(0, 0, 0): _as_coeff(value)})

    @staticmethod
    def s() -> "Operator":
        return Operator({(1, 0, 0): RationalFn.const(OP, 1)})

    @staticmethod
    def d(m: int = 1) -> "Operator":
        return Operator({(0, m, 0): RationalFn.const(OP, 1)})

    @staticmethod
    def d0(n: int = 1) -> "Operator":
        return Operator({(0, 0, n): RationalFn.const(OP, 1)})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coeff(self, eps: int, m: int, n: int) -> RationalFn:
        return self.terms.get((eps, m, n), RationalFn.const(OP, 0))

    def part(self, eps: int = None, m: int = None) -> "Operator":
        """Subsum of terms with the given eps and/or d-power."""
        return Operator(
            {
                k: c
                for k, c in self.terms.items()
                if (eps is None or k[0] == eps) and (m is None or k[1] == m)
            }
        )

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "Operator") -> "Operator":
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return Operator(out)

    def __neg__(self) -> "Operator":
        return Operator({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale(self, value) -> "Operator":
        if isinstance(value, RationalFn):
            if value.is_zero():
                return Operator.zero()
            return Operator({k: v * value for k, v in self.terms.items()})
        # scalar / polynomial fast path, no re-reduction needed
        return Operator({k: v.scale(value) for k, v in self.terms.items()})

    # -- multiplication -----------------------------------------------------------

    def __mul__(self, other: "Operator") -> "Operator":
        out = {}
        for (e1, m1, n1), c1 in self.terms.items():
            for (e2, m2, n2), c2 in other.terms.items():
                moved = _coeff_move(c2, e1, m1, n1)
                key = (e1 ^ e2, (-m1 if e2 else m1) + m2, n1 + n2)
                c = c1 * moved
                cur = out.get(key)
                out[key] = c if cur is None else cur + c
        return Operator(out)

    def __pow__(self, k: int) -> "Operator":
        if k < 0:
            raise ValueError("generic operators have no inverse; use the "
                             "generator tables")
        out = Operator.identity()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- action on functions -----------------------------------------------------

    def apply_to(self, f: RationalFn) -> RationalFn:
        if f.ctx is not OP:
            raise ContextMismatchError("function must live in the operator context")
        total = RationalFn.const(OP, 0)
        for (eps, m, n), c in self.terms.items():
            g = _coeff_move(f, eps, m, n)
            total = total + c * g
        return total

    # -- coefficient substitutions --------------------------------------------------

    def map_coeffs(self, fn) -> "Operator":
        return Operator({k: fn(c) for k, c in self.terms.items()})

    def shift_x(self, k: int) -> "Operator":
        """Replace x by q^k x in every coefficient (argument-shift form)."""
        if k == 0:
            return self
        return self.map_coeffs(lambda c: c.qshift({"x": _shift_vec(4 * k)}))

    def sub_x(self, upow: int, sign: int) -> "Operator":
        """Replace x by u^upow * x^sign in every coefficient."""
        exps = [0] * OP.nvars
        exps[U_SLOT] = upow
        exps[OP.index["x"]] = sign
        e = tuple(exps)
        return self.map_coeffs(lambda c: c.substitute_monomial("x", e))

    # -- comparison ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return (self - other).is_zero()
        return all(c.equals(other.terms[k]) for k, c in self.terms.items())

    __hash__ = None

    # -- rendering ----------------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (eps, m, n), c in self.sorted_terms():
            syms = []
            if eps:
                syms.append("s")
            if m:
                syms.append("d" if m == 1 else f"d^{m}")
            if n:
                syms.append("d0" if n == 1 else f"d0^{n}")
            cs = str(c)
            if len(c.num) > 1 and not c.factors:
                cs = f"({cs})"
            parts.append("*".join([cs] + syms) if syms else cs)
        return "  +  ".join(parts)

    def __repr__(self):
        return f"<operator: {self}>"

    def to_json(self) -> list:
        return [
            {"eps": k[0], "m": k[1], "n": k[2], "coeff": c.to_json()}
            for k, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: list) -> "Operator":
        out = Operator.zero()
        for item in data:
            c = RationalFn.from_json(OP, item["coeff"])
            term = Operator({(item["eps"], item["m"], item["n"]): c})
            out = out + term
        return out

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (eps, m, n), c in self.sorted_terms():
            syms = ""
            if eps:
                syms += r"\mathsf{s}\,"
            if m:
                syms += r"\eth" + (f"^{{{m}}}" if m != 1 else "") + r"\,"
            if n:
                syms += r"\eth_0" + (f"^{{{n}}}" if n != 1 else "")
            num = str(c.num).replace("*", " ")
            if c.factors:
                den = str(c.den).replace("*", " ")
                cs = rf"\frac{{{num}}}{{{den}}}"
            else:
                cs = f"({num})" if len(c.num) > 1 else num
            parts.append(rf"{cs}\,{syms}" if syms else cs)
        return " + ".join(parts)


def op_linear(pairs) -> Operator:
    """Exact linear combination sum(coeff * op)."""
    total = Operator.zero()
    for coeff, op in pairs:
        total = total + op.scale(coeff)
    return total


# ---------------------------------------------------------------------------
# Named building blocks
# ---------------------------------------------------------------------------

def _m(coeff, **powers) -> LaurentPoly:
    return OP.monomial(coeff, **powers)


def ch_of(value) -> RationalFn:
    """ch(v) = v + v^-1 for an invertible rational function."""
    v = _as_coeff(value)
    return v + v.inverse()


def sh_of(value) -> RationalFn:
    v = _as_coeff(value)
    return v - v.inverse()


def make_W(sign: str = "+") -> RationalFn:
    """Potential of the reduced Askey-Wilson operator, W(x^±1; x0, b1, b2)."""
    num = (
        (_m(1, b1=1, b2=1) + _m(1, u=2, x=1))
        * (_m(1, b1=1) + _m(1, u=2, x=1, b2=1))
        * (_m(1, u=2, x=1) + _m(1, x0=2))
    )
    den1 = OP.one() - _m(1, x=2)
    den2 = OP.one() - _m(1, u=2, x=1)
    W = RationalFn.make(-num, {den1: 1, den2: 1, _m(1, u=2, x0=1, b1=1, b2=1): 1})
    if sign == "+":
        return W
    return W.substitute_monomial("x", _xinv_exps())


def _xinv_exps():
    exps = [0] * OP.nvars
    exps[OP.index["x"]] = -1
    return tuple(exps)


def make_G(n: int) -> Operator:
    """Two-term shift operator in x0 whose n-th power weight is x0^n."""
    up = RationalFn.make(-_m(1, x0=-n), {OP.one() - _m(1, x0=2): 1})
    down = RationalFn.make(
        _m(1, x0=n) * (_m(1, u=2, x=1) + _m(1, x0=2)) * (_m(1, u=2) + _m(1, x=1, x0=2)),
        {OP.one() - _m(1, x0=2): 1, _m(1, u=2, x=1): 1},
    )
    return Operator({(0, 0, 1): up, (0, 0, -1): down})


def make_K(n: int) -> Operator:
    """Companion of make_G with the shifted second numerator factor."""
    up = RationalFn.make(-_m(1, x0=-n), {OP.one() - _m(1, x0=2): 1})
    down = RationalFn.make(
        _m(1, x0=n) * (_m(1, u=2, x=1) + _m(1, x0=2)) * (_m(1, u=6, x=1) + _m(1, x0=2)),
        {OP.one() - _m(1, x0=2): 1, _m(1, u=4, x=1): 1},
    )
    return Operator({(0, 0, 1): up, (0, 0, -1): down})


def ch_x0() -> RationalFn:
    return _as_coeff(_m(1, x0=1) + _m(1, x0=-1))
