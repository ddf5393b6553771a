"""Exact rational functions num/den of Laurent polynomials.

The denominator is stored as a multiset of *canonical factors* (content-free,
monic, at least two terms).  Operator algebra generates denominators from a
small closed pool of shift factors, so keeping them factored makes common
denominators cheap and lets cancellation happen by trial division instead of
a general GCD.  Equality is decided by cross-multiplication and is therefore
independent of how far a fraction happens to be reduced.

The optional full-GCD post-pass (config.gcd_enabled) additionally divides
out any polynomial common factor between numerator and denominator.
"""

from __future__ import annotations

from . import config
from .errors import ContextMismatchError, NonSquareError, ZeroDivisorError
from .laurent import (
    Context,
    GcdBudgetExceeded,
    LaurentPoly,
    gcd as poly_gcd,
    probably_coprime,
)
from .scalars import Scalar


def _canonical_factor(f: LaurentPoly):
    """Split f into (unit poly, canonical factor or None).

    f == unit * factor where unit is a monomial and the factor is
    content-free with leading coefficient one; None when f is a monomial.
    """
    cont, core = f.strip_content()
    _, lead = core.leading()
    if not lead.is_one():
        core = core.scale(lead.inverse())
    unit = LaurentPoly(f.ctx, {tuple(cont): lead})
    if core.is_one():
        return unit, None
    return unit, core


class RationalFn:
    """Immutable exact rational function."""

    __slots__ = ("ctx", "num", "factors", "_den", "_hash")

    def __init__(self, ctx, num, factors):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "_den", None)

    def __setattr__(self, *a):
        raise AttributeError("RationalFn is immutable")

    # -- construction --------------------------------------------------

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFn":
        return RationalFn(p.ctx, p, {})

    @staticmethod
    def make(num: LaurentPoly, factors: dict, reduce: bool = True) -> "RationalFn":
        """Build num / prod(f^m) in canonical form."""
        ctx = num.ctx
        if num.is_zero():
            return RationalFn(ctx, num, {})
        fac = {}
        for f, mult in factors.items():
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError("factor multiplicities must be nonnegative")
            if f.is_zero():
                raise ZeroDivisorError("zero divisor")
            unit, core = _canonical_factor(f)
            if not unit.is_one():
                num = num * (unit ** (-mult))
            if core is not None:
                fac[core] = fac.get(core, 0) + mult
        if fac and reduce:
            num, fac = _cancel(num, fac)
            if config.gcd_enabled() and fac:
                num, fac = _cancel_gcd(num, fac)
        return RationalFn(ctx, num, fac)

    @staticmethod
    def const(ctx: Context, value) -> "RationalFn":
        return RationalFn.from_poly(ctx.const(value))

    @staticmethod
    def var(ctx: Context, name: str, power: int = 1) -> "RationalFn":
        return RationalFn.from_poly(ctx.var(name, power))

    # -- views -----------------------------------------------------------

    @property
    def den(self) -> LaurentPoly:
        """Expanded denominator (monic, no monomial content)."""
        d = self._den
        if d is None:
            d = self.ctx.one()
            for f, m in sorted(
                self.factors.items(), key=lambda t: sorted(t[0].terms)
            ):
                d = d * f ** m
            object.__setattr__(self, "_den", d)
        return d

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.factors

    def as_poly(self) -> LaurentPoly:
        if self.factors:
            raise ValueError("fraction has a nontrivial denominator")
        return self.num

    def constant_scalar(self) -> Scalar:
        return self.as_poly().constant_scalar()

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ctx is not other.ctx:
            raise ContextMismatchError(
                f"mixed contexts {self.ctx.name!r} and {other.ctx.name!r}"
            )

    def _cofactor(self, lcm: dict) -> LaurentPoly:
        """prod f^(lcm[f] - self.factors[f]), the factor completing self."""
        out = self.ctx.one()
        for f, m in lcm.items():
            d = m - self.factors.get(f, 0)
            if d:
                out = out * f ** d
        return out

    def __add__(self, other: "RationalFn") -> "RationalFn":
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if not self.factors and not other.factors:
            return RationalFn(self.ctx, self.num + other.num, {})
        lcm = dict(self.factors)
        for f, m in other.factors.items():
            if lcm.get(f, 0) < m:
                lcm[f] = m
        n = self.num * self._cofactor(lcm) + other.num * other._cofactor(lcm)
        return RationalFn.make(n, lcm)

    def __neg__(self) -> "RationalFn":
        return RationalFn(self.ctx, -self.num, self.factors)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return RationalFn(self.ctx, self.ctx.zero(), {})
        if not self.factors and not other.factors:
            return RationalFn(self.ctx, self.num * other.num, {})
        fac = dict(self.factors)
        for f, m in other.factors.items():
            fac[f] = fac.get(f, 0) + m
        return RationalFn.make(self.num * other.num, fac)

    def scale(self, coeff) -> "RationalFn":
        """Multiply by a scalar, a polynomial, or another fraction."""
        if isinstance(coeff, RationalFn):
            return self * coeff
        if isinstance(coeff, LaurentPoly):
            if coeff.is_monomial():
                return RationalFn(self.ctx, self.num * coeff, self.factors)
            return self * RationalFn.from_poly(coeff)
        c = Scalar.of(coeff)
        if c.is_zero():
            return RationalFn(self.ctx, self.ctx.zero(), {})
        return RationalFn(self.ctx, self.num.scale(c), self.factors)

    def inverse(self) -> "RationalFn":
        if self.is_zero():
            raise ZeroDivisorError("zero divisor")
        unit, core = _canonical_factor(self.num)
        num = self.den * (unit ** (-1))
        fac = {core: 1} if core is not None else {}
        return RationalFn.make(num, fac)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisorError("zero divisor")
        if self.is_zero():
            return self
        unit, core = _canonical_factor(other.num)
        fac = dict(self.factors)
        if core is not None:
            fac[core] = fac.get(core, 0) + 1
        return RationalFn.make(self.num * other.den * (unit ** (-1)), fac)

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFn.from_poly(self.ctx.one())
        return RationalFn.make(
            self.num ** k, {f: m * k for f, m in self.factors.items()}, reduce=False
        )

    # -- equality ----------------------------------------------------------

    def equals(self, other: "RationalFn") -> bool:
        """Exact equality by cross-multiplication."""
        self._check(other)
        if self.factors == other.factors:
            return self.num == other.num
        return (self - other).is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    # -- substitution --------------------------------------------------------

    def map_poly(self, fn) -> "RationalFn":
        """Apply a ring automorphism fn to numerator and factors."""
        num = fn(self.num)
        fac = {}
        for f, m in self.factors.items():
            g = fn(f)
            unit, core = _canonical_factor(g)
            if not unit.is_one():
                num = num * (unit ** (-m))
            if core is not None:
                fac[core] = fac.get(core, 0) + m
        return RationalFn(self.ctx, num, fac)

    def qshift(self, var_shifts: dict, invert: str = None) -> "RationalFn":
        if not var_shifts and invert is None:
            return self
        return self.map_poly(lambda p: p.qshift(var_shifts, invert))

    def substitute_monomial(self, var, exps, coeff=None) -> "RationalFn":
        return self.map_poly(lambda p: p.substitute_monomial(var, exps, coeff))

    def sqrt(self) -> "RationalFn":
        """Exact square root in the function field, positive-leading branch."""
        if self.is_zero():
            raise NonSquareError("non-square: zero input")
        try:
            return RationalFn.make(
                self.num.sqrt(), {f: _even_half(m) for f, m in self.factors.items()}
            )
        except NonSquareError:
            pass
        den = self.den
        root = (self.num * den).sqrt()
        return RationalFn.make(root, dict(self.factors))

    # -- rendering / serialization ---------------------------------------------

    def __str__(self):
        if not self.factors:
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"<ratfn {self.ctx.name}: {self}>"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(ctx: Context, data: dict) -> "RationalFn":
        num = LaurentPoly.from_json(ctx, data["num"])
        den = LaurentPoly.from_json(ctx, data["den"])
        if den.is_zero():
            raise ZeroDivisorError("zero divisor")
        return RationalFn.make(num, {den: 1})


def substitute(value, images: dict) -> RationalFn:
    """Exact substitution var -> image on a polynomial or fraction.

    Images may be monomials (scalings, inversions) or arbitrary fractions;
    monomial-only substitutions stay polynomial.  A general image whose
    denominator vanishes surfaces as a ZeroDivisorError.
    """
    poly = isinstance(value, LaurentPoly)
    ctx = value.ctx
    imgs = {}
    all_monomial = True
    for name, img in images.items():
        if isinstance(img, LaurentPoly):
            img = RationalFn.from_poly(img)
        imgs[name] = img
        if not (img.is_poly() and img.num.is_monomial()):
            all_monomial = False
    if all_monomial and poly:
        out = value
        for name, img in imgs.items():
            ((e, c),) = img.num.terms.items()
            out = out.substitute_monomial(name, e, c)
        return RationalFn.from_poly(out)
    target = [imgs.get(v, RationalFn.var(ctx, v)) for v in ctx.variables]
    if poly:
        return value.map_context(ctx, target)
    num = value.num.map_context(ctx, target)
    den = value.den.map_context(ctx, target)
    return num / den


def _even_half(m: int) -> int:
    if m % 2:
        raise NonSquareError("non-square")
    return m // 2


def _cancel(num: LaurentPoly, fac: dict):
    """Trial-divide num by denominator factors; exact and cheap."""
    if len(num) == 1:
        return num, fac
    out = {}
    for f, m in fac.items():
        if len(num) >= len(f):
            cap = 16 * len(num) + 256
            while m > 0:
                q = num.exact_div(f, max_steps=cap)
                if q is None:
                    break
                num = q
                m -= 1
                if len(num) < len(f):
                    break
        if m:
            out[f] = m
    return num, out


def _cancel_gcd(num: LaurentPoly, fac: dict):
    """GCD reduction post-pass: strip common polynomial factors.

    Each candidate is verified by exact division, so the PRS work can be
    budgeted: an over-budget factor is simply left in place, unreduced
    but correct.
    """
    changed = True
    while changed and fac and len(num) > 1:
        changed = False
        for f in list(fac):
            if probably_coprime(num, f):
                continue
            try:
                g = poly_gcd(num, f, budget=200_000)
            except GcdBudgetExceeded:
                continue
            if len(g) < 2:
                continue
            _, g = _canonical_factor(g)
            if g is None:
                continue
            qn = num.exact_div(g)
            qf = f.exact_div(g)
            if qn is None or qf is None:
                continue
            m = fac.pop(f)
            num = qn
            unit, core = _canonical_factor(qf)
            if not unit.is_one():
                num = num * (unit ** (-1))
            for h, k in ((core, 1), (f, m - 1)):
                if h is not None and k:
                    fac[h] = fac.get(h, 0) + k
            changed = True
            break
    return num, fac
