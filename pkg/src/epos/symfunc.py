"""Exact symmetric functions of fixed degree in the m, e and p bases.

Partitions are plain weakly decreasing tuples of positive ints.  Every
coefficient is an ``int`` in the m and e bases and may be a ``Fraction`` only
in the p basis.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Mapping, Union

Partition = tuple[int, ...]
Coeff = Union[int, Fraction]

MAX_DEGREE = 12
BASES = ("m", "e", "p")


class DegreeError(ValueError):
    """Raised when a requested degree exceeds the cached-table cap."""


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise DegreeError(f"degree {n} exceeds cap {MAX_DEGREE}")


# --- partitions -----------------------------------------------------------------

def _gen_partitions(n: int, maxpart: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order (``(n)`` first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_gen_partitions(n, n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (all prefix sums of mu <= those of lam)."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of equal degree only")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out


def merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


# --- expressions ----------------------------------------------------------------------

class SymExpr:
    """A homogeneous symmetric function: basis tag plus sparse coefficient map."""

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, degree: int, coeffs: Mapping[Partition, Coeff] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        clean: dict[Partition, Coeff] = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} is not of degree {degree}")
            if any(a < b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
                raise ValueError(f"{lam} is not a partition")
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def single(cls, basis: str, lam: Iterable[int], coeff: Coeff = 1) -> "SymExpr":
        lam = tuple(sorted(lam, reverse=True))
        return cls(basis, sum(lam), {lam: coeff})

    def terms(self) -> list[tuple[Partition, Coeff]]:
        """Nonzero terms in reverse-lexicographic partition order."""
        return sorted(self.coeffs.items(), reverse=True)

    def __getitem__(self, lam: Iterable[int]) -> Coeff:
        return self.coeffs.get(tuple(lam), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        return (self.basis, self.degree, self.coeffs) == (other.basis, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.basis, self.degree, frozenset(self.coeffs.items())))

    def _same(self, other: "SymExpr") -> None:
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("expressions differ in basis or degree")

    def __add__(self, other: "SymExpr") -> "SymExpr":
        self._same(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymExpr(self.basis, self.degree, out)

    def __neg__(self) -> "SymExpr":
        return SymExpr(self.basis, self.degree, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        return self + (-other)

    def scale(self, k: Coeff) -> "SymExpr":
        return SymExpr(self.basis, self.degree, {lam: k * c for lam, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.basis != other.basis:
            raise ValueError("product needs a common basis")
        if self.basis == "m":
            raise ValueError("products are only supported in the multiplicative e and p bases")
        out: dict[Partition, Coeff] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                key = merge(a, b)
                out[key] = out.get(key, 0) + ca * cb
        return SymExpr(self.basis, self.degree + other.degree, out)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def negative_terms(self) -> list[tuple[Partition, Coeff]]:
        return [(lam, c) for lam, c in self.terms() if c < 0]

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymExpr":
        coeffs = {tuple(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(data["basis"], data["degree"], coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for lam, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            label = f"{self.basis}{list(lam)}"
            out.append(f"{sign} {label}" if mag == 1 else f"{sign} {mag}*{label}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _narrow_int(c: Coeff) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {c} in an integral basis")
        return c.numerator
    return c


# --- e in terms of m -----------------------------------------------------------------

def _count_01_matrices(rows: Partition, cols: Partition) -> int:
    """Number of 0/1 matrices with the given row and column sums."""

    @lru_cache(maxsize=None)
    def count(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(rows):
            return 1 if not any(remaining) else 0
        k = rows[i]
        if k > sum(1 for r in remaining if r):
            return 0
        if sum(remaining) != sum(rows[i:]):
            return 0
        total = 0
        # choose k distinct columns (by index) with positive remaining demand
        idx = [j for j, r in enumerate(remaining) if r]

        def choose(start: int, left: int, cur: list[int]):
            nonlocal total
            if left == 0:
                nxt = list(remaining)
                for j in cur:
                    nxt[j] -= 1
                total += count(i + 1, tuple(sorted(nxt, reverse=True)))
                return
            for t in range(start, len(idx) - left + 1):
                cur.append(idx[t])
                choose(t + 1, left - 1, cur)
                cur.pop()

        choose(0, k, [])
        return total

    return count(0, tuple(cols))


_table_lock = threading.Lock()
_e_in_m_tables: dict[int, dict[Partition, dict[Partition, int]]] = {}


def _e_in_m_table(n: int) -> dict[Partition, dict[Partition, int]]:
    _check_degree(n)
    table = _e_in_m_tables.get(n)
    if table is None:
        with _table_lock:
            table = _e_in_m_tables.get(n)
            if table is None:
                table = {}
                for mu in partitions(n):
                    row = {}
                    for lam in partitions(n):
                        c = _count_01_matrices(mu, lam)
                        if c:
                            row[lam] = c
                    table[mu] = row
                _e_in_m_tables[n] = table
    return table


def e_in_m(mu: Iterable[int]) -> SymExpr:
    """Monomial expansion of e_mu."""
    mu = tuple(sorted(mu, reverse=True))
    n = sum(mu)
    return SymExpr("m", n, _e_in_m_table(n)[mu])


def m_to_e(expr: SymExpr) -> SymExpr:
    """Rewrite an m-basis expression in the e basis by unitriangular elimination."""
    if expr.basis != "m":
        raise ValueError("m_to_e expects an m-basis expression")
    n = expr.degree
    table = _e_in_m_table(n)
    work: dict[Partition, Coeff] = dict(expr.coeffs)
    out: dict[Partition, Coeff] = {}
    # the lexicographically largest surviving m-term is dominance-maximal, and
    # e_{lam'} = m_lam + (terms strictly below lam)
    while work:
        lam = max(work)
        a = work.pop(lam)
        if not a:
            continue
        mu = conjugate(lam)
        out[mu] = out.get(mu, 0) + a
        for nu, c in table[mu].items():
            if nu == lam:
                continue
            v = work.get(nu, 0) - a * c
            if v:
                work[nu] = v
            else:
                work.pop(nu, None)
    result = SymExpr("e", n, out)
    if expr.is_integral():
        result = SymExpr("e", n, {lam: _narrow_int(c) for lam, c in result.coeffs.items()})
    return result


def e_to_m(expr: SymExpr) -> SymExpr:
    if expr.basis != "e":
        raise ValueError("e_to_m expects an e-basis expression")
    out = SymExpr("m", expr.degree)
    for mu, c in expr.coeffs.items():
        out = out + e_in_m(mu).scale(c)
    return out


# --- e in terms of p (Newton's identities) ---------------------------------------------------

@lru_cache(maxsize=None)
def _e_k_in_p(k: int) -> SymExpr:
    if k == 0:
        return SymExpr("p", 0, {(): 1})
    total = SymExpr("p", k)
    for i in range(1, k + 1):
        term = _e_k_in_p(k - i) * SymExpr.single("p", (i,))
        total = total + (term if i % 2 else -term)
    return total.scale(Fraction(1, k))


def e_to_p(expr: SymExpr) -> SymExpr:
    if expr.basis != "e":
        raise ValueError("e_to_p expects an e-basis expression")
    _check_degree(expr.degree)
    out = SymExpr("p", expr.degree)
    for mu, c in expr.coeffs.items():
        prod = SymExpr("p", 0, {(): 1})
        for part in mu:
            prod = prod * _e_k_in_p(part)
        out = out + prod.scale(c)
    return out


# --- specialization x_1 = ... = x_k = 1 ------------------------------------------------------

def _m_at_ones(lam: Partition, k: int) -> int:
    ell = len(lam)
    if ell > k:
        return 0
    count = factorial(k) // factorial(k - ell)
    for mult in multiplicities(lam).values():
        count //= factorial(mult)
    return count


def eval_at_ones(expr: SymExpr, k: int) -> Coeff:
    """Value with the first ``k`` variables set to 1 and all others to 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total: Coeff = 0
    for lam, c in expr.coeffs.items():
        if expr.basis == "e":
            v = 1
            for part in lam:
                v *= comb(k, part)
        elif expr.basis == "m":
            v = _m_at_ones(lam, k)
        else:
            v = k ** len(lam)
        total += c * v
    if isinstance(total, Fraction) and total.denominator == 1:
        total = total.numerator
    return total
