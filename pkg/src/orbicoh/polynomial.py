"""Sparse multivariate polynomials over the integers.

A monomial is an exponent tuple of fixed length (one slot per facet
variable); a polynomial maps monomials to nonzero integer coefficients.
The canonical term order is graded lexicographic with the first variable
largest; printing and iteration always follow it, so rendered output is
deterministic.
"""

from __future__ import annotations

import itertools


def mono_support(exps) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(exps) if e)


def mono_degree(exps) -> int:
    return sum(exps)


def mono_mul(a, b) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def grlex_key(exps):
    return (sum(exps), exps)


def monomials_up_to_degree(num_vars, bound):
    """All exponent tuples with total degree <= bound, in grlex order."""
    out = []
    for total in range(bound + 1):
        out.extend(_compositions(total, num_vars))
    return out


def _compositions(total, slots):
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


class Polynomial:
    """Immutable element of Z[x_1, ..., x_m]."""

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            coeff = int(coeff)
            if len(exps) != num_vars:
                raise ValueError("exponent tuple of wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            if coeff:
                new = data.get(exps, 0) + coeff
                if new:
                    data[exps] = new
                elif exps in data:
                    del data[exps]
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars):
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars, c):
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, num_vars):
        return cls.constant(num_vars, 1)

    @classmethod
    def variable(cls, num_vars, index):
        exps = tuple(int(i == index) for i in range(num_vars))
        return cls(num_vars, {exps: 1})

    @classmethod
    def monomial(cls, num_vars, exps, coeff=1):
        return cls(num_vars, {tuple(exps): coeff})

    @classmethod
    def squarefree(cls, num_vars, indices, coeff=1):
        """The product of x_i over the given variable indices."""
        exps = [0] * num_vars
        for i in indices:
            exps[i] += 1
        return cls(num_vars, {tuple(exps): coeff})

    # -- inspection --------------------------------------------------------

    def items(self):
        """Terms in descending canonical order, as (exponents, coeff) pairs."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coefficient(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def support(self) -> frozenset[int]:
        """Indices of all variables occurring in some term."""
        out = set()
        for exps in self._terms:
            out.update(mono_support(exps))
        return frozenset(out)

    def total_degree(self):
        """Max term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(mono_degree(e) for e in self._terms)

    def homogeneous_degree(self):
        """The common term degree, or None if zero or inhomogeneous."""
        degrees = {mono_degree(e) for e in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({mono_degree(e) for e in self._terms}) <= 1

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Polynomial.constant(self.num_vars, other)
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self._terms == other._terms
        )

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.num_vars, other)
        self._check_compatible(other)
        return Polynomial(self.num_vars, itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.num_vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.num_vars, {e: other * c for e, c in self._terms.items()})
        self._check_compatible(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = mono_mul(ea, eb)
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.num_vars)
        for _ in range(k):
            result = result * self
        return result

    def substitute_zero(self, indices):
        """Set x_i = 0 for every i in indices, dropping the affected terms."""
        dead = frozenset(indices)
        return Polynomial(
            self.num_vars,
            {e: c for e, c in self._terms.items() if not (mono_support(e) & dead)},
        )

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in self.items():
            body = "*".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(coeff)
            if body:
                text = body if mag == 1 else "%d*%s" % (mag, body)
            else:
                text = str(mag)
            if not chunks:
                chunks.append(text if coeff > 0 else "-" + text)
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(chunks)

    def __repr__(self):
        return "Polynomial(%d, %r)" % (self.num_vars, dict(self.items()))
