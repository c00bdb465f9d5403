"""Sparse polynomials in squarefree x-variables and one y-variable, and
the descent-set generating polynomials built on them.

A monomial is a pair ``(xvars, ydeg)``: a sorted tuple of distinct
variable indices, each to the first power, and a nonnegative power of y.
Coefficients are exact integers.  The generating polynomial of order n
assigns each permutation of [n] the monomial ``prod x_{s-1} * y^|S|``
over its descent-value set S (note the index shift: set element s marks
variable x_{s-1}), so the coefficient of a monomial is the number of
permutations with that exact descent-value set.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping

from .formula import gap_vector
from .perms import as_value_set
from .tree import tree_weight_sum

Monomial = tuple[tuple[int, ...], int]


def _check_monomial(key: Monomial) -> Monomial:
    xvars, ydeg = key
    xv = tuple(sorted(xvars))
    if any(not isinstance(v, int) or v < 1 for v in xv):
        raise ValueError(f"x-variable indices must be positive integers: {xvars!r}")
    if len(set(xv)) != len(xv):
        raise ValueError(f"monomials are squarefree in x: {xvars!r}")
    if not isinstance(ydeg, int) or ydeg < 0:
        raise ValueError(f"y-degree must be a nonnegative integer: {ydeg!r}")
    return xv, ydeg


class Poly:
    """Immutable sparse polynomial; zero coefficients are never stored.

    Supports +, -, * (with ints and other polynomials), partial
    derivatives, coefficient lookup and exact evaluation.  Because the
    x-variables are squarefree, multiplying two terms whose x-supports
    overlap has no representation and raises.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for key, coeff in (terms or {}).items():
            key = _check_monomial(key)
            coeff = clean.get(key, 0) + coeff
            if coeff:
                clean[key] = coeff
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def constant(cls, value: int) -> "Poly":
        return cls({((), 0): value})

    @classmethod
    def x(cls, i: int) -> "Poly":
        return cls({((i,), 0): 1})

    @classmethod
    def y(cls, degree: int = 1) -> "Poly":
        return cls({((), degree): 1})

    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, xvars: Iterable[int], ydeg: int) -> int:
        return self._terms.get(_check_monomial((tuple(xvars), ydeg)), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: ascending y-degree, then lexicographic
        ascending x-variables."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def evaluate(self, x: int | Mapping[int, int] = 1, y: int = 1) -> int:
        """Exact value with every x-variable set to ``x`` (or looked up in a
        mapping) and y set to ``y``."""
        total = 0
        for (xvars, ydeg), coeff in self._terms.items():
            term = coeff * y**ydeg
            for i in xvars:
                term *= x[i] if isinstance(x, Mapping) else x
            total += term
        return total

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-dict backed; identity hashing would be a trap

    def __add__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            total = merged.get(key, 0) + coeff
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        return _raw(merged)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _raw({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-other)

    def __rsub__(self, other: int) -> "Poly":
        return Poly.constant(other) + (-self)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return _raw(
                {k: c * other for k, c in self._terms.items()} if other else {}
            )
        if not isinstance(other, Poly):
            return NotImplemented
        product: dict[Monomial, int] = {}
        for (xa, ya), ca in self._terms.items():
            for (xb, yb), cb in other._terms.items():
                if set(xa) & set(xb):
                    raise ValueError(
                        f"cannot square x-variables {sorted(set(xa) & set(xb))}: "
                        "monomials are squarefree"
                    )
                key = (tuple(sorted(xa + xb)), ya + yb)
                total = product.get(key, 0) + ca * cb
                if total:
                    product[key] = total
                else:
                    product.pop(key, None)
        return _raw(product)

    __rmul__ = __mul__

    def partial_x(self, i: int) -> "Poly":
        """Partial derivative in x_i: terms containing x_i lose it, the
        rest vanish."""
        return _raw(
            {
                (tuple(v for v in xvars if v != i), ydeg): coeff
                for (xvars, ydeg), coeff in self._terms.items()
                if i in xvars
            }
        )

    def partial_y(self) -> "Poly":
        """Partial derivative in y."""
        return _raw(
            {
                (xvars, ydeg - 1): coeff * ydeg
                for (xvars, ydeg), coeff in self._terms.items()
                if ydeg
            }
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (xvars, ydeg), coeff in self.sorted_terms():
            factors = [f"x{i}" for i in xvars]
            if ydeg == 1:
                factors.append("y")
            elif ydeg > 1:
                factors.append(f"y^{ydeg}")
            if coeff != 1 or not factors:
                factors.insert(0, str(coeff))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<Poly {self}>"


def _raw(terms: dict[Monomial, int]) -> Poly:
    # Internal constructor for terms already normalized and zero-free.
    p = Poly.__new__(Poly)
    p._terms = terms
    return p


def gn(n: int) -> Poly:
    """Generating polynomial over all permutations of [n], each weighted
    by its descent-value monomial.  Computed by the derivative recursion

        g_{m+1} = (1 + m*x_m*y) * g_m
                  + x_m * sum_i d(g_m)/d(x_i)
                  - x_m * y^2 * d(g_m)/dy

    from g_2 = 1 + x1*y, not by enumerating permutations.

    >>> str(gn(3))
    '1 + x1*y + 3*x2*y + x1*x2*y^2'
    """
    if n < 2:
        raise ValueError(f"defined for n >= 2: {n}")
    g = Poly({((), 0): 1, ((1,), 1): 1})
    for m in range(2, n):
        dx_sum = Poly()
        for i in range(1, m):
            dx_sum = dx_sum + g.partial_x(i)
        g = (
            g
            + m * (Poly({((m,), 1): 1}) * g)
            + Poly.x(m) * dx_sum
            - Poly({((m,), 2): 1}) * g.partial_y()
        )
    return g


def descent_set_coefficient(g: Poly, s: Iterable[int]) -> int:
    """Coefficient in ``g`` of the monomial marking descent-value set S:
    variables sit one below their set element and the y-degree is |S|.

    >>> descent_set_coefficient(gn(5), {3, 5})
    17
    """
    s = as_value_set(s)
    if s and s[0] < 2:
        raise ValueError("descent-value sets lie in [2, n]")
    return g.coefficient((v - 1 for v in s), len(s))


def tau(parts: Iterable[int]) -> tuple[int, ...]:
    """Prefix sums of a composition, shifted up by one: the set whose gap
    vector is the reversed composition.

    >>> tau((1, 2))
    (2, 4)
    >>> tau((1, 1, 1))
    (2, 3, 4)
    """
    d = tuple(parts)
    if any(not isinstance(v, int) or v < 1 for v in d):
        raise ValueError(f"composition parts must be positive integers: {d!r}")
    return tuple(1 + t for t in itertools.accumulate(d))


def gnk(n: int, k: int) -> Poly:
    """The y-degree-k slice of :func:`gn` with the y-power dropped: one
    term per size-k subset of [2, n], reached as the prefix-sum set of a
    composition with k positive parts and total at most n - 1 (the count
    for a set never changes once n clears its maximum).  Each coefficient
    is the tree weight of the set's own gap vector, which is the reversed
    composition.

    >>> str(gnk(4, 2))
    'x1*x2 + 3*x1*x3 + 7*x2*x3'
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"slice degree {k} outside [0, {n - 1}]")
    if k == 0:
        return Poly.constant(1)
    terms: dict[Monomial, int] = {}
    for total in range(k, n):
        for cuts in itertools.combinations(range(1, total), k - 1):
            bounds = (0, *cuts, total)
            composition = tuple(b - a for a, b in itertools.pairwise(bounds))
            s = tau(composition)
            weight = tree_weight_sum(gap_vector(s))
            terms[(tuple(v - 1 for v in s), 0)] = weight
    return Poly(terms)
