"""Exact truncated power series in t, u, v, y with rational coefficients.

A series lives in the quotient ring Q[t,u,v,y] / (t^(N_t+1), u^(N_u+1),
v^(N_v+1), y^(N_y+1)); the per-variable bounds travel with the value and
the result of any binary operation uses the tighter bound of each variable.
Coefficients are Python ints whenever they are integral and ``Fraction``
otherwise, so integrality of a final answer is visible in its type.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

VARS = ("t", "u", "v", "y")
Monomial = tuple[int, int, int, int]
Bounds = tuple[int, int, int, int]
Coeff = int | Fraction

ORIGIN: Monomial = (0, 0, 0, 0)


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _var_index(name: str) -> int:
    try:
        return VARS.index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARS}") from None


def parse_monomial(form: str | Mapping[str, int] | Sequence[int]) -> Monomial:
    """Accept ``(a, b, c, d)``, ``{"t": 2, "u": 1}`` or strings like ``"t^2*u*v"``."""
    if isinstance(form, Mapping):
        exps = [0, 0, 0, 0]
        for name, e in form.items():
            exps[_var_index(name)] = int(e)
        return tuple(exps)  # type: ignore[return-value]
    if isinstance(form, str):
        exps = [0, 0, 0, 0]
        text = form.replace(" ", "")
        if text in ("", "1"):
            return ORIGIN
        for factor in text.split("*"):
            name, _, power = factor.partition("^")
            if not power and len(name) > 1 and name[1:].isdigit():
                name, power = name[0], name[1:]
            exps[_var_index(name)] += int(power) if power else 1
        return tuple(exps)  # type: ignore[return-value]
    exps = tuple(int(e) for e in form)
    if len(exps) != 4:
        raise ValueError("monomials have exactly four exponents (t, u, v, y)")
    return exps  # type: ignore[return-value]


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARS, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_rational(c: Coeff) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class TruncatedSeries:
    __slots__ = ("bounds", "_terms")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None, bounds: Sequence[int] = (0, 0, 0, 0)):
        if len(bounds) != 4 or any(b < 0 for b in bounds):
            raise ValueError("bounds are four nonnegative degrees")
        self.bounds: Bounds = tuple(bounds)  # type: ignore[assignment]
        self._terms: dict[Monomial, Coeff] = {}
        for m, c in (terms or {}).items():
            if c and self._fits(m):
                self._terms[m] = _norm(c)

    # construction helpers
    @classmethod
    def constant(cls, c: Coeff, bounds: Sequence[int]) -> TruncatedSeries:
        return cls({ORIGIN: c}, bounds)

    @classmethod
    def var(cls, name: str, bounds: Sequence[int]) -> TruncatedSeries:
        m = [0, 0, 0, 0]
        m[_var_index(name)] = 1
        return cls({tuple(m): 1}, bounds)  # type: ignore[dict-item]

    @classmethod
    def polynomial(cls, terms: Mapping[str, Coeff] | Iterable[tuple[Monomial, Coeff]],
                   bounds: Sequence[int]) -> TruncatedSeries:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coeff] = {}
        for m, c in items:
            key = parse_monomial(m)
            acc[key] = acc.get(key, 0) + c
        return cls(acc, bounds)

    def _fits(self, m: Monomial) -> bool:
        b = self.bounds
        return m[0] <= b[0] and m[1] <= b[1] and m[2] <= b[2] and m[3] <= b[3]

    # inspection
    @property
    def order(self) -> int:
        """Truncation order in t."""
        return self.bounds[0]

    def terms(self) -> dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial) -> Coeff:
        m = parse_monomial(monomial)
        if not self._fits(m):
            raise ValueError(f"{format_monomial(m)} lies outside truncation bounds {self.bounds}")
        return self._terms.get(m, 0)

    def constant_term(self) -> Coeff:
        return self._terms.get(ORIGIN, 0)

    def degree(self, name: str) -> int:
        i = _var_index(name)
        return max((m[i] for m in self._terms), default=-1)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            other = TruncatedSeries.constant(other, self.bounds)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bounds = _meet(self.bounds, other.bounds)
        return self.truncate(bounds)._terms == other.truncate(bounds)._terms

    def __repr__(self) -> str:
        shown = " + ".join(f"{c}*{format_monomial(m)}" for m, c in self.items()[:8])
        more = " + ..." if len(self) > 8 else ""
        return f"TruncatedSeries({shown or '0'}{more}; bounds={self.bounds})"

    # ring operations
    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Rational):
            return TruncatedSeries.constant(other, self.bounds)
        raise TypeError(f"cannot combine series with {type(other).__name__}")

    def truncate(self, bounds: Sequence[int]) -> TruncatedSeries:
        return TruncatedSeries(self._terms, _meet(self.bounds, bounds))

    def lift(self, name: str, bound: int) -> TruncatedSeries:
        """Give a variable the series does not involve (bound 0) a larger bound."""
        i = _var_index(name)
        if self.bounds[i] != 0:
            raise ValueError(f"{name} already has bound {self.bounds[i]}; widening would invent terms")
        bounds = list(self.bounds)
        bounds[i] = bound
        return TruncatedSeries(self._terms, bounds)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries({m: -c for m, c in self._terms.items()}, self.bounds)

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        out = TruncatedSeries(self._terms, _meet(self.bounds, other.bounds))
        terms = out._terms
        for m, c in other._terms.items():
            if out._fits(m):
                s = _norm(terms.get(m, 0) + c)
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return out

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, Rational):
            return TruncatedSeries({m: c * other for m, c in self._terms.items()}, self.bounds)
        other = self._coerce(other)
        bounds = _meet(self.bounds, other.bounds)
        bt, bu, bv, by = bounds
        acc: dict[Monomial, Coeff] = {}
        right = list(other._terms.items())
        for (a1, b1, c1, d1), x in self._terms.items():
            if a1 > bt or b1 > bu or c1 > bv or d1 > by:
                continue
            for (a2, b2, c2, d2), z in right:
                a, b, c, d = a1 + a2, b1 + b2, c1 + c2, d1 + d2
                if a > bt or b > bu or c > bv or d > by:
                    continue
                key = (a, b, c, d)
                acc[key] = acc.get(key, 0) + x * z
        return TruncatedSeries(acc, bounds)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return TruncatedSeries({m: Fraction(c) / other for m, c in self._terms.items()}, self.bounds)
        return div(self, self._coerce(other))

    def __rtruediv__(self, other) -> TruncatedSeries:
        return div(self._coerce(other), self)

    def __pow__(self, e: int) -> TruncatedSeries:
        if not isinstance(e, int):
            raise TypeError("integer exponents only")
        if e < 0:
            return TruncatedSeries.constant(1, self.bounds) / self ** (-e)
        result = TruncatedSeries.constant(1, self.bounds)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # substitutions
    def shift(self, monomial) -> TruncatedSeries:
        """Multiply by a monomial."""
        s = parse_monomial(monomial)
        return TruncatedSeries({_madd(m, s): c for m, c in self._terms.items()}, self.bounds)

    def specialize(self, name: str, value: Coeff) -> TruncatedSeries:
        """Set one variable to a constant; its bound collapses to 0."""
        i = _var_index(name)
        bounds = list(self.bounds)
        bounds[i] = 0
        acc: dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            key = list(m)
            e, key[i] = key[i], 0
            k = tuple(key)
            acc[k] = acc.get(k, 0) + c * value ** e  # type: ignore[index]
        return TruncatedSeries(acc, bounds)

    def substitute_monomial(self, name: str, image) -> TruncatedSeries:
        """Replace variable ``name`` by a monomial, e.g. ``u -> u*v``."""
        i = _var_index(name)
        img = parse_monomial(image)
        acc: dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            key = list(m)
            e, key[i] = key[i], 0
            k = tuple(x + e * y for x, y in zip(key, img))
            acc[k] = acc.get(k, 0) + c  # type: ignore[index]
        return TruncatedSeries(acc, self.bounds)

    def coefficient_series(self, name: str, power: int) -> TruncatedSeries:
        """Coefficient of ``name^power`` as a series in the other variables."""
        i = _var_index(name)
        bounds = list(self.bounds)
        bounds[i] = 0
        acc = {}
        for m, c in self._terms.items():
            if m[i] == power:
                key = list(m)
                key[i] = 0
                acc[tuple(key)] = c
        return TruncatedSeries(acc, bounds)

    def substitute(self, name: str, image: TruncatedSeries) -> TruncatedSeries:
        """Replace variable ``name`` by a series (Horner in that variable)."""
        i = _var_index(name)
        top = self.degree(name)
        bounds = list(_meet(self.bounds, image.bounds))
        result = TruncatedSeries({}, bounds)
        for p in range(top, -1, -1):
            # the slice has bound 0 in ``name``; re-home it so the sum keeps the full bounds
            result = result * image + TruncatedSeries(self.coefficient_series(name, p)._terms, bounds)
        bounds[i] = min(self.bounds[i], image.bounds[i])
        return result.truncate(bounds)

    def univariate(self, name: str = "t") -> list[Coeff]:
        """Dense coefficient list of a series in one variable only."""
        i = _var_index(name)
        if any(e for m in self._terms for j, e in enumerate(m) if j != i):
            raise ValueError(f"series involves variables other than {name}")
        out = [0] * (self.bounds[i] + 1)
        for m, c in self._terms.items():
            out[m[i]] = c
        return out


def _meet(a: Sequence[int], b: Sequence[int]) -> Bounds:
    return tuple(min(x, y) for x, y in zip(a, b))  # type: ignore[return-value]


def _madd(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient; ``den`` must have a nonzero constant term.

    Monomials of the quotient are settled in lexicographic order, so every
    correction lands on a monomial not yet settled.
    """
    d0 = den.constant_term()
    if d0 == 0:
        raise ZeroDivisionError("divisor has zero constant term (not a unit)")
    bounds = _meet(num.bounds, den.bounds)
    bt, bu, bv, by = bounds
    rest = [(m, c) for m, c in den._terms.items() if m != ORIGIN]
    unit = d0 in (1, -1)
    acc: dict[Monomial, Coeff] = {m: c for m, c in num._terms.items()
                                  if m[0] <= bt and m[1] <= bu and m[2] <= bv and m[3] <= by}
    heap = list(acc)
    heapq.heapify(heap)
    quotient: dict[Monomial, Coeff] = {}
    while heap:
        m = heapq.heappop(heap)
        c = acc.pop(m)
        if not c:
            continue
        q = c * d0 if unit else _norm(Fraction(c) / d0)
        quotient[m] = q
        a1, b1, c1, e1 = m
        for (a2, b2, c2, e2), dc in rest:
            a, b, cc, e = a1 + a2, b1 + b2, c1 + c2, e1 + e2
            if a > bt or b > bu or cc > bv or e > by:
                continue
            key = (a, b, cc, e)
            if key in acc:
                acc[key] = _norm(acc[key] - dc * q)
            else:
                acc[key] = -dc * q
                heapq.heappush(heap, key)
    return TruncatedSeries(quotient, bounds)


def compose_t(s: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``s(g)`` for ``s`` univariate in t and ``g`` without constant term."""
    if g.constant_term() != 0:
        raise ValueError("inner series must have zero constant term")
    coeffs = s.univariate("t")
    bounds = _meet(s.bounds, g.bounds)
    result = TruncatedSeries({}, bounds)
    for c in reversed(coeffs):
        result = result * g + c
    return result


# ---------------------------------------------------------------------------
# generating functions


def _tbounds(n: int) -> Bounds:
    return (n, 0, 0, 0)


def P_series(N: int) -> TruncatedSeries:
    """Sum over n of prod_{i=1..n} (1 - (1-t)^i); coefficients are Fishburn numbers."""
    bounds = _tbounds(N)
    t = TruncatedSeries.var("t", bounds)
    one_minus_t = 1 - t
    total = TruncatedSeries.constant(1, bounds)
    prod = TruncatedSeries.constant(1, bounds)
    power = TruncatedSeries.constant(1, bounds)
    for i in range(1, N + 1):
        power = power * one_minus_t
        prod = prod * (1 - power)
        total = total + prod
    # the next summand starts at t^(N+1)
    assert (prod * (1 - power * one_minus_t)).is_zero()
    return total


def _product_sum(N: int, ratio: TruncatedSeries, start: int = 1) -> TruncatedSeries:
    """Sum over n of prod_{i=start..n} (1 - ratio^i), n from 0 to N."""
    bounds = _tbounds(N)
    total = TruncatedSeries({}, bounds)
    for n in range(N + 1):
        prod = TruncatedSeries.constant(1, bounds)
        for i in range(start, n + 1):
            prod = prod * (1 - ratio ** i)
        total = total + prod
    return total


def K_series(N: int, product_start: int = 1) -> TruncatedSeries:
    """Primitive ascent sequences: sum of prod (1 - (1+x)^(-i)), x written as t.

    ``product_start=0`` evaluates the product from i = 0, whose first factor
    vanishes identically; it exists only to compare against.
    """
    bounds = _tbounds(N)
    t = TruncatedSeries.var("t", bounds)
    return _product_sum(N, 1 / (1 + t), start=product_start)


def Bk_series(N: int, k: int, denominator_power: int | None = None) -> TruncatedSeries:
    """Ascent sequences with runs at most ``k``: ratio (1-x)/(1-x^(k+1)).

    ``denominator_power`` overrides the exponent in the ratio's denominator
    (pass ``k`` to evaluate the (1-x)/(1-x^k) variant).
    """
    if k < 1:
        raise ValueError("k must be positive")
    p = k + 1 if denominator_power is None else denominator_power
    bounds = _tbounds(N)
    t = TruncatedSeries.var("t", bounds)
    return _product_sum(N, (1 - t) / (1 - t ** p))


def _kernel_sum(N: int, u_order: int | None = None) -> TruncatedSeries:
    """Sum over n >= 0 of (1-ty)^n (1+t-ty)^n (1-u) prod Gamma_i / (Delta_n Delta_{n+1}).

    ``Delta_0 = 1`` and the empty product is 1. Each Gamma_i carries a factor
    u, so summands beyond the u-bound vanish.
    """
    nu = N if u_order is None else u_order
    bounds = (N, nu, 0, N)
    t = TruncatedSeries.var("t", bounds)
    u = TruncatedSeries.var("u", bounds)
    y = TruncatedSeries.var("y", bounds)
    a = 1 - t * y
    b = 1 + t - t * y
    one_minus_u = 1 - u

    def delta(k: int) -> TruncatedSeries:
        return a ** k * one_minus_u + u * b ** k

    total = TruncatedSeries({}, bounds)
    gammas = TruncatedSeries.constant(1, bounds)
    prev = TruncatedSeries.constant(1, bounds)
    for n in range(nu + 2):
        cur = delta(n + 1)
        if n:
            gammas = (gammas * (u * b ** n)) / prev
        term = ((a * b) ** n * one_minus_u * gammas) / prev / cur
        if n == nu + 1:
            assert term.is_zero(), "summand beyond the u-bound must vanish"
            break
        total = total + term
        prev = cur
    return total


def G_u1yt(N: int, u_order: int | None = None) -> TruncatedSeries:
    """G(u,1,y,t): ascent sequences by ascents (u), equal pairs (y), length (t)."""
    inner = _kernel_sum(N, u_order)
    t = TruncatedSeries.var("t", inner.bounds)
    return 1 + t * inner


def G_primitive(N: int, u_order: int | None = None) -> TruncatedSeries:
    """G(u,1,0,t) from its own y-free product formula with delta_k = (1-u) + u(1+t)^k."""
    nu = N if u_order is None else u_order
    bounds = (N, nu, 0, 0)
    t = TruncatedSeries.var("t", bounds)
    u = TruncatedSeries.var("u", bounds)
    one_plus_t = 1 + t

    def delta(k: int) -> TruncatedSeries:
        return (1 - u) + u * one_plus_t ** k

    total = 1 + t * (1 - u) / delta(1)
    gammas = TruncatedSeries.constant(1, bounds)
    for n in range(1, nu + 2):
        dn = delta(n)
        gammas = gammas * (u * one_plus_t ** n) / dn
        term = t * (1 - u) * one_plus_t ** n * gammas / dn / delta(n + 1)
        if n == nu + 1:
            assert term.is_zero(), "summand beyond the u-bound must vanish"
            break
        total = total + term
    return total


def kernel(bounds: Sequence[int]) -> TruncatedSeries:
    """Coefficient of H(u,v,y,t) in the functional equation: v - 1 - t - tyv + ty + tuv."""
    return TruncatedSeries.polynomial(
        {"v": 1, "1": -1, "t": -1, "t*y*v": -1, "t*y": 1, "t*u*v": 1}, bounds)


def G_full(N: int) -> TruncatedSeries:
    """G(u,v,y,t) by ascents, last letter, equal pairs and length.

    The barred sum is the unbarred one with u replaced by uv, which is how
    the barred Delta/Gamma are defined.
    """
    bounds = (N, N, N, N)
    inner = _kernel_sum(N).lift("v", N)
    barred = inner.substitute_monomial("u", "u*v")
    t = TruncatedSeries.var("t", bounds)
    v = TruncatedSeries.var("v", bounds)
    braced = inner - barred.shift("u*v^2")
    numerator = v - 1 - t * braced
    return 1 + t * numerator / kernel(bounds)


def kernel_root(N: int) -> TruncatedSeries:
    """W(u,y,t) = (1+t-ty)/(1+tu-ty), the v that annihilates the kernel."""
    bounds = (N, N, 0, N)
    t = TruncatedSeries.var("t", bounds)
    u = TruncatedSeries.var("u", bounds)
    y = TruncatedSeries.var("y", bounds)
    return (1 + t - t * y) / (1 + t * u - t * y)


def kernel_at_root(N: int) -> TruncatedSeries:
    return kernel((N, N, 1, N)).substitute("v", kernel_root(N))


def recurrence_residual(N: int, G: TruncatedSeries | None = None) -> TruncatedSeries:
    """H*kernel - (t(v-1) - t H(u,1,y,t) + t u v^2 H(uv,1,y,t)) with H = G - 1."""
    G = G_full(N) if G is None else G
    bounds = G.bounds
    H = G - 1
    h1 = H.specialize("v", 1).lift("v", bounds[2])
    huv = h1.substitute_monomial("u", "u*v")
    t = TruncatedSeries.var("t", bounds)
    v = TruncatedSeries.var("v", bounds)
    rhs = t * (v - 1) - t * h1 + huv.shift("t*u*v^2")
    return H * kernel(bounds) - rhs
