"""Sparse multivariate polynomials with rational coefficients."""

from fractions import Fraction

from .scalars import format_rational, to_rational


class MultiPoly:
    """Polynomial over Q in a fixed, ordered tuple of variable names.

    ``terms`` maps exponent tuples to nonzero Fractions. Two polynomials can
    only be combined when their variable tuples agree.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            coeff = to_rational(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise KeyError(name)
        return cls(variables, {exps: 1})

    @classmethod
    def generators(cls, variables):
        variables = tuple(variables)
        return [cls.variable(variables, v) for v in variables]

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, MultiPoly) else other
        if o is None:
            return NotImplemented
        return self.variables == o.variables and self.terms == o.terms

    def __hash__(self):
        return hash((self.variables, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def evaluate(self, point):
        """Evaluate at ``point`` (a sequence aligned with ``variables`` or a mapping)."""
        if isinstance(point, dict):
            point = [point[v] for v in self.variables]
        point = [to_rational(p) for p in point]
        if len(point) != len(self.variables):
            raise ValueError("point has the wrong number of coordinates")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, k in zip(point, exps):
                if k:
                    value *= x**k
            total += value
        return total

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.terms.items():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exps) if k
            )
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            parts.append(("-" if coeff < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
