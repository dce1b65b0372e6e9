"""Exact arithmetic in quantum tori.

A quantum torus of rank m over ZZ[q^(1/2), q^(-1/2)] is spanned by normalized
monomials X^a for a in ZZ^m, multiplied by the rule

    X^a * X^b = q^(L(a, b) / 2) * X^(a + b),

where L is a skew-symmetric integer bilinear form.  Setting s = q^(1/2), every
element is a finite sum of terms c(s) * X^a with c in ZZ[s, s^(-1)].  This
module represents such elements exactly: coefficients are dicts mapping the
s-exponent to an integer, exponent vectors are integer tuples, and nothing is
ever floated or truncated.

The one nontrivial algorithm is :func:`exact_right_divide`, which solves
Q * D = N for Q by eliminating lexicographically maximal terms.  Because a
quantum torus over a domain has no zero divisors, the exponents of any exact
quotient are confined to a finite box computed from N and D, which makes the
elimination loop a decision procedure: it either returns the exact quotient or
proves there is none.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

__all__ = [
    "Coeff",
    "ExactDivisionError",
    "LambdaForm",
    "QuantumLaurent",
    "Vector",
    "coeff_to_string",
    "exact_right_divide",
    "qmul",
    "specialize_q1",
]

Vector = tuple[int, ...]
Coeff = dict[int, int]


class ExactDivisionError(ArithmeticError):
    """Raised when a requested exact quotient does not exist."""


def _coeff_clean(c: Coeff) -> Coeff:
    return {e: n for e, n in c.items() if n != 0}


def _coeff_add(a: Coeff, b: Coeff) -> Coeff:
    out = dict(a)
    for e, n in b.items():
        out[e] = out.get(e, 0) + n
        if out[e] == 0:
            del out[e]
    return out


def _coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    out: Coeff = {}
    for ea, na in a.items():
        for eb, nb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) + na * nb
    return _coeff_clean(out)


def _coeff_neg(a: Coeff) -> Coeff:
    return {e: -n for e, n in a.items()}


def _coeff_shift(a: Coeff, k: int) -> Coeff:
    """Multiply by s^k."""
    return {e + k: n for e, n in a.items()}


def _coeff_div(num: Coeff, den: Coeff) -> Coeff | None:
    """Exact quotient num / den in ZZ[s, s^(-1)], or None."""
    if not den:
        raise ZeroDivisionError("division by the zero coefficient")
    rem = dict(num)
    den_top = max(den)
    den_lead = den[den_top]
    quot: Coeff = {}
    while rem:
        rem_top = max(rem)
        lead, extra = divmod(rem[rem_top], den_lead)
        if extra != 0:
            return None
        shift = rem_top - den_top
        quot[shift] = lead
        for e, n in den.items():
            tgt = e + shift
            rem[tgt] = rem.get(tgt, 0) - lead * n
            if rem[tgt] == 0:
                del rem[tgt]
        if rem and max(rem) >= rem_top:
            return None
    return _coeff_clean(quot)


def _q_power_string(s_exp: int) -> str:
    if s_exp == 0:
        return "1"
    if s_exp == 2:
        return "q"
    if s_exp % 2 == 0:
        return f"q^{s_exp // 2}"
    return f"q^({s_exp}/2)"


def coeff_to_string(c: Coeff) -> str:
    """Render a ZZ[s, s^(-1)] coefficient with q-powers in ascending order."""
    if not c:
        return "0"
    parts = []
    for e in sorted(c):
        n = c[e]
        power = _q_power_string(e)
        if power == "1":
            parts.append(str(n))
        elif n == 1:
            parts.append(power)
        elif n == -1:
            parts.append(f"-{power}")
        else:
            parts.append(f"{n}·{power}")
    return " + ".join(parts)


class LambdaForm:
    """A skew-symmetric integer bilinear form on ZZ^m."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        mat = tuple(tuple(int(v) for v in row) for row in rows)
        m = len(mat)
        for row in mat:
            if len(row) != m:
                raise ValueError("the form matrix must be square")
        for i in range(m):
            if mat[i][i] != 0:
                raise ValueError(f"the form matrix has nonzero diagonal entry at {i}")
            for j in range(i + 1, m):
                if mat[i][j] != -mat[j][i]:
                    raise ValueError(
                        f"the form matrix is not skew-symmetric at ({i}, {j})"
                    )
        self.rows = mat

    @property
    def size(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LambdaForm) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"LambdaForm({[list(r) for r in self.rows]})"

    def eval(self, a: Iterable[int], b: Iterable[int]) -> int:
        av = tuple(a)
        bv = tuple(b)
        if len(av) != self.size or len(bv) != self.size:
            raise ValueError("vector length does not match the form")
        total = 0
        for i, ai in enumerate(av):
            if ai == 0:
                continue
            row = self.rows[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(bv) if bj != 0)
        return total

    def ordered_product_twist(self, a: Iterable[int]) -> int:
        """s-exponent relating X_1^(a_1)···X_m^(a_m) to the normalized X^a.

        The ordered product equals s^t * X^a with t = sum_{i<j} L_ij a_i a_j.
        """
        av = tuple(a)
        if len(av) != self.size:
            raise ValueError("vector length does not match the form")
        total = 0
        for i in range(len(av)):
            if av[i] == 0:
                continue
            row = self.rows[i]
            for j in range(i + 1, len(av)):
                total += row[j] * av[i] * av[j]
        return total


class QuantumLaurent:
    """An element of a rank-m quantum torus, stored term by term.

    Terms map exponent vectors to coefficients in ZZ[s, s^(-1)]; zero
    coefficients are never stored.  Addition is ordinary; multiplication
    requires the skew form and is provided by :func:`qmul`.
    """

    __slots__ = ("width", "_terms")

    def __init__(self, width: int, terms: Mapping[Vector, Mapping[int, int]] = ()):
        self.width = int(width)
        clean: dict[Vector, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for vec, coeff in items:
            v = tuple(int(x) for x in vec)
            if len(v) != self.width:
                raise ValueError(
                    f"exponent vector {v} does not have width {self.width}"
                )
            c = _coeff_clean({int(e): int(n) for e, n in dict(coeff).items()})
            if c:
                merged = clean.get(v)
                clean[v] = _coeff_add(merged, c) if merged else c
                if not clean[v]:
                    del clean[v]
        self._terms = clean

    @classmethod
    def zero(cls, width: int) -> QuantumLaurent:
        return cls(width)

    @classmethod
    def one(cls, width: int) -> QuantumLaurent:
        return cls.monomial((0,) * width)

    @classmethod
    def monomial(
        cls, exponent: Iterable[int], s_exp: int = 0, coefficient: int = 1
    ) -> QuantumLaurent:
        vec = tuple(int(x) for x in exponent)
        return cls(len(vec), {vec: {s_exp: coefficient}})

    def items(self) -> list[tuple[Vector, Coeff]]:
        return [(v, dict(c)) for v, c in self._terms.items()]

    def coefficient(self, exponent: Iterable[int]) -> Coeff:
        return dict(self._terms.get(tuple(exponent), {}))

    def support(self) -> set[Vector]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuantumLaurent)
            and self.width == other.width
            and self._terms == other._terms
        )

    def __add__(self, other: QuantumLaurent) -> QuantumLaurent:
        self._check_width(other)
        out = {v: dict(c) for v, c in self._terms.items()}
        for v, c in other._terms.items():
            merged = _coeff_add(out.get(v, {}), c)
            if merged:
                out[v] = merged
            else:
                out.pop(v, None)
        return QuantumLaurent(self.width, out)

    def __neg__(self) -> QuantumLaurent:
        return QuantumLaurent(
            self.width, {v: _coeff_neg(c) for v, c in self._terms.items()}
        )

    def __sub__(self, other: QuantumLaurent) -> QuantumLaurent:
        return self + (-other)

    def _check_width(self, other: QuantumLaurent) -> None:
        if self.width != other.width:
            raise ValueError(
                f"rank mismatch: {self.width} versus {other.width}"
            )

    def scaled(self, s_exp: int = 0, coefficient: int = 1) -> QuantumLaurent:
        """Multiply every term by coefficient * s^(s_exp)."""
        out = {}
        for v, c in self._terms.items():
            out[v] = {e + s_exp: n * coefficient for e, n in c.items()}
        return QuantumLaurent(self.width, out)

    def specialize_q1(self) -> dict[Vector, int]:
        """Evaluate at q = 1, collapsing each coefficient to an integer."""
        out: dict[Vector, int] = {}
        for v, c in self._terms.items():
            total = sum(c.values())
            if total != 0:
                out[v] = total
        return out

    def terms_lex_descending(self) -> list[tuple[Vector, Coeff]]:
        return [(v, dict(self._terms[v])) for v in sorted(self._terms, reverse=True)]

    def to_string(self, symbol: str = "X") -> str:
        if not self._terms:
            return "0"
        rendered = []
        for vec, coeff in self.terms_lex_descending():
            body = f"{symbol}^({','.join(str(x) for x in vec)})"
            cs = coeff_to_string(coeff)
            if cs == "1":
                rendered.append(body)
            elif len(coeff) == 1:
                rendered.append(f"{cs}·{body}")
            else:
                rendered.append(f"({cs})·{body}")
        return " + ".join(rendered)

    def __repr__(self) -> str:
        return f"<QuantumLaurent {self.to_string()}>"


def qmul(a: QuantumLaurent, b: QuantumLaurent, form: LambdaForm) -> QuantumLaurent:
    """Product in the quantum torus with skew form ``form``."""
    a._check_width(b)
    if form.size != a.width:
        raise ValueError("form rank does not match the operands")
    out: dict[Vector, Coeff] = {}
    for va, ca in a._terms.items():
        for vb, cb in b._terms.items():
            twist = form.eval(va, vb)
            target = tuple(x + y for x, y in zip(va, vb))
            contrib = _coeff_shift(_coeff_mul(ca, cb), twist)
            merged = _coeff_add(out.get(target, {}), contrib)
            if merged:
                out[target] = merged
            else:
                out.pop(target, None)
    return QuantumLaurent(a.width, out)


def specialize_q1(x: QuantumLaurent) -> dict[Vector, int]:
    """Commutative shadow of ``x``: exponent vector to integer coefficient."""
    return x.specialize_q1()


def _support_box(
    num: QuantumLaurent, den: QuantumLaurent
) -> tuple[Vector, Vector]:
    n_sup = list(num.support())
    d_sup = list(den.support())
    width = num.width
    lo = tuple(
        min(v[i] for v in n_sup) - max(v[i] for v in d_sup) for i in range(width)
    )
    hi = tuple(
        max(v[i] for v in n_sup) - min(v[i] for v in d_sup) for i in range(width)
    )
    return lo, hi


def exact_right_divide(
    numerator: QuantumLaurent, denominator: QuantumLaurent, form: LambdaForm
) -> QuantumLaurent:
    """Return the unique Q with qmul(Q, denominator, form) == numerator.

    Raises :class:`ExactDivisionError` when no such Q exists.  The quotient is
    found by repeatedly cancelling the lexicographically greatest remainder
    term against the lexicographically greatest denominator term; since the
    quantum torus has no zero divisors, every exponent of a genuine quotient
    lies in a finite coordinate box determined by the two supports, so an
    elimination step leaving that box disproves divisibility.
    """
    numerator._check_width(denominator)
    if form.size != numerator.width:
        raise ValueError("form rank does not match the operands")
    if denominator.is_zero():
        raise ZeroDivisionError("division by zero")
    if numerator.is_zero():
        return QuantumLaurent.zero(numerator.width)

    lo, hi = _support_box(numerator, denominator)
    d_top = max(denominator.support())
    d_top_coeff = denominator.coefficient(d_top)

    remainder = numerator
    quotient = QuantumLaurent.zero(numerator.width)
    while not remainder.is_zero():
        r_top = max(remainder.support())
        e = tuple(r - d for r, d in zip(r_top, d_top))
        if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
            raise ExactDivisionError(
                "no exact quotient: elimination left the admissible exponent box"
            )
        shifted = _coeff_shift(remainder.coefficient(r_top), -form.eval(e, d_top))
        c = _coeff_div(shifted, d_top_coeff)
        if c is None:
            raise ExactDivisionError(
                "no exact quotient: coefficient division fails at "
                f"exponent {r_top}"
            )
        term = QuantumLaurent(numerator.width, {e: c})
        quotient = quotient + term
        remainder = remainder - qmul(term, denominator, form)

    if qmul(quotient, denominator, form) != numerator:
        raise AssertionError("internal error: quotient verification failed")
    return quotient
