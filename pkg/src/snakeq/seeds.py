"""Quantum seeds: exchange matrices, compatible skew forms, and mutation.

A seed pairs an m x n integer exchange matrix (rows for all m generators,
columns for the n mutable ones) with a skew-symmetric m x m form Lambda.  The
pair is compatible when transpose(B) * Lambda = (d*I | 0) for a single
positive integer d; that scalar also calibrates the valuation on snake-graph
matchings.  Matrix mutation, form mutation, and the tropical dynamics of
coefficient vectors are implemented directly from the exchange recurrences,
with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .qalgebra import LambdaForm

__all__ = [
    "Seed",
    "SeedError",
    "check_compatible",
    "mutate_B",
    "mutate_Lambda",
    "mutate_seed",
    "mutate_tropical",
    "principal_lambda",
    "principal_seed",
]

Matrix = tuple[tuple[int, ...], ...]


class SeedError(ValueError):
    """Raised for malformed or incompatible seed data."""


def _freeze(rows: Any) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _pos(x: int) -> int:
    return x if x > 0 else 0


def check_compatible(btilde: Any, lam: LambdaForm) -> int:
    """Return the scalar d with transpose(B) * Lambda = (d*I | 0).

    Raises :class:`SeedError` when the product is not of that shape or d is
    not a positive integer shared by all columns.
    """
    b = _freeze(btilde)
    m = len(b)
    if m == 0:
        raise SeedError("the exchange matrix has no rows")
    n = len(b[0])
    if any(len(row) != n for row in b):
        raise SeedError("the exchange matrix has ragged rows")
    if n > m:
        raise SeedError(f"more mutable columns ({n}) than rows ({m})")
    if lam.size != m:
        raise SeedError(
            f"form rank {lam.size} does not match the {m} exchange rows"
        )
    d: int | None = None
    for j in range(n):
        for i in range(m):
            entry = sum(b[k][j] * lam.rows[k][i] for k in range(m))
            if i == j:
                if entry <= 0:
                    raise SeedError(
                        f"compatibility fails: diagonal entry {entry} at "
                        f"column {j} is not positive"
                    )
                if d is None:
                    d = entry
                elif entry != d:
                    raise SeedError(
                        f"compatibility fails: diagonal entries {d} and "
                        f"{entry} differ"
                    )
            elif entry != 0:
                raise SeedError(
                    f"compatibility fails: off-diagonal entry {entry} at "
                    f"row {j}, column {i}"
                )
    assert d is not None
    return d


@dataclass(frozen=True)
class Seed:
    """A compatible pair, validated on construction."""

    btilde: Matrix
    lam: LambdaForm

    def __post_init__(self) -> None:
        object.__setattr__(self, "btilde", _freeze(self.btilde))
        check_compatible(self.btilde, self.lam)

    @property
    def m(self) -> int:
        return len(self.btilde)

    @property
    def n(self) -> int:
        return len(self.btilde[0])

    @property
    def d(self) -> int:
        return check_compatible(self.btilde, self.lam)

    def top_block(self) -> Matrix:
        return tuple(self.btilde[i] for i in range(self.n))

    @classmethod
    def from_dict(cls, data: Any) -> Seed:
        if not isinstance(data, dict):
            raise SeedError("seed description must be a JSON object")
        try:
            btilde = _freeze(data["Btilde"])
            lam_rows = _freeze(data["Lambda"])
        except KeyError as missing:
            raise SeedError(f"seed description lacks key {missing}") from None
        except (TypeError, ValueError) as bad:
            raise SeedError(f"malformed seed description: {bad}") from None
        try:
            lam = LambdaForm(lam_rows)
        except ValueError as bad:
            raise SeedError(str(bad)) from None
        return cls(btilde, lam)

    def to_dict(self) -> dict[str, Any]:
        return {
            "Btilde": [list(r) for r in self.btilde],
            "Lambda": [list(r) for r in self.lam.rows],
        }


def mutate_B(btilde: Any, k: int) -> Matrix:
    """Matrix mutation in direction k (a mutable column index)."""
    b = _freeze(btilde)
    m = len(b)
    n = len(b[0])
    if not 0 <= k < n:
        raise SeedError(f"mutation direction {k} out of range for {n} columns")
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                out[i][j] = (
                    b[i][j]
                    + _pos(b[i][k]) * _pos(b[k][j])
                    - _pos(-b[i][k]) * _pos(-b[k][j])
                )
    return _freeze(out)


def mutate_Lambda(lam: LambdaForm, btilde: Any, k: int) -> LambdaForm:
    """Form mutation in direction k, using the unmutated exchange matrix.

    Row and column k are replaced by the pairing of the basis vectors with
    -e_k + sum_l [b_lk]_+ e_l; all other entries are untouched.
    """
    b = _freeze(btilde)
    m = lam.size
    if len(b) != m:
        raise SeedError("exchange matrix rows do not match the form rank")
    n = len(b[0])
    if not 0 <= k < n:
        raise SeedError(f"mutation direction {k} out of range for {n} columns")
    target = [-1 if l == k else 0 for l in range(m)]
    for l in range(m):
        target[l] += _pos(b[l][k])
    new_rows = [list(row) for row in lam.rows]
    for i in range(m):
        if i == k:
            continue
        entry = sum(lam.rows[i][l] * target[l] for l in range(m) if target[l])
        new_rows[i][k] = entry
        new_rows[k][i] = -entry
    new_rows[k][k] = 0
    return LambdaForm(new_rows)


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate the compatible pair; compatibility is revalidated on return."""
    new_lam = mutate_Lambda(seed.lam, seed.btilde, k)
    new_b = mutate_B(seed.btilde, k)
    return Seed(new_b, new_lam)


def mutate_tropical(ys: Any, b_top: Any, k: int) -> tuple[tuple[int, ...], ...]:
    """Tropical coefficient dynamics in the direction k.

    ``ys`` lists one integer exponent vector per mutable index; ``b_top`` is
    the current n x n top block.  Direction k is inverted, and every other
    vector picks up [b_kj]_+ copies of y_k minus b_kj times the componentwise
    minimum of 0 and y_k.
    """
    vecs = _freeze(ys)
    b = _freeze(b_top)
    n = len(vecs)
    if not 0 <= k < n:
        raise SeedError(f"mutation direction {k} out of range for {n} vectors")
    width = len(vecs[k])
    floor = tuple(min(0, v) for v in vecs[k])
    out = []
    for j in range(n):
        if j == k:
            out.append(tuple(-v for v in vecs[k]))
            continue
        coef = b[k][j]
        out.append(
            tuple(
                vecs[j][i] + _pos(coef) * vecs[k][i] - coef * floor[i]
                for i in range(width)
            )
        )
    return tuple(out)


def principal_lambda(b_matrix: Any) -> LambdaForm:
    """The canonical skew form compatible with principal framing of B.

    In block shape (rows and columns split n + n) it is ((0, -I), (I, -B)),
    which pairs with (B over I) to give transpose(Btilde) * Lambda = (I | 0).
    """
    b = _freeze(b_matrix)
    n = len(b)
    if any(len(row) != n for row in b):
        raise SeedError("the exchange matrix must be square")
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = -1
        rows[n + i][i] = 1
        for j in range(n):
            rows[n + i][n + j] = -b[i][j]
    return LambdaForm(rows)


def principal_seed(b_matrix: Any) -> Seed:
    """Principal-coefficient seed: Btilde stacks B on the identity."""
    b = _freeze(b_matrix)
    n = len(b)
    btilde = [list(row) for row in b]
    for i in range(n):
        btilde.append([1 if j == i else 0 for j in range(n)])
    return Seed(_freeze(btilde), principal_lambda(b))
