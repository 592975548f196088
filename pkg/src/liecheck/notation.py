"""Parsers for the compact text notation used on the command line and in tests.

Basis elements are written with 1-based labels: ``e1``, ``e2``, ... Examples::

    parse_vector("e3 - 2e5", 6)
    parse_relations("[e1,e2]=e3, [e1,e3]=e2+e3", 3)
    parse_two_form("e45 - 2e12 + e36", 6)      # e^{45} - 2 e^{12} + e^{36}
    parse_symmetric("2e1.e5 + e2.e4", 6)       # 2 e^1.e^5 + e^2.e^4
    parse_images("Je1=e4, Je2=e6, Je5=e3", 6)
"""

import re
from fractions import Fraction

from .errors import NotationError
from .exact.matrix import Matrix

_MINUS = str.maketrans({"−": "-", "–": "-", " ": "", "\t": ""})

_ATOMS = {
    "vector": re.compile(r"e(\d+)"),
    "two_form": re.compile(r"e(\d+)\^e(\d+)|e(\d)(\d)"),
    "symmetric": re.compile(r"e(\d+)[.·]e(\d+)"),
}
_NUMBER = re.compile(r"\d+(?:/\d+)?")
_PAREN_NUMBER = re.compile(r"\(([+-]?\d+(?:/\d+)?)\)")


class _Parser:
    def __init__(self, text, kind):
        self.text = text.translate(_MINUS)
        self.pos = 0
        self.atom = _ATOMS[kind]
        self.kind = kind

    def fail(self, msg):
        raise NotationError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        if not self.text:
            self.fail("empty expression")
        out = self.expr()
        if self.pos != len(self.text):
            self.fail("unexpected character")
        return out

    def expr(self):
        out = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            for key, c in self.term().items():
                out[key] = out.get(key, 0) + sign * c
            if self.peek() in ("+", "-") and self.peek():
                sign = -1 if self.peek() == "-" else 1
                self.pos += 1
            else:
                break
        return {k: v for k, v in out.items() if v}

    def term(self):
        coeff = Fraction(1)
        m = _PAREN_NUMBER.match(self.text, self.pos)
        if m:
            coeff = Fraction(m.group(1))
            self.pos = m.end()
            if self.peek() == "*":
                self.pos += 1
            if not self.peek() or self.peek() in "+-)":
                self.fail("a coefficient needs a basis symbol")
            m = None
        else:
            m = _NUMBER.match(self.text, self.pos)
        if m and not self.atom.match(self.text, self.pos):
            coeff = Fraction(m.group())
            self.pos = m.end()
            if self.peek() == "*":
                self.pos += 1
        if self.peek() == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.fail("missing ')'")
            self.pos += 1
            return {k: coeff * v for k, v in inner.items()}
        m = self.atom.match(self.text, self.pos)
        if not m:
            self.fail("expected a basis symbol")
        self.pos = m.end()
        key = tuple(int(g) for g in m.groups() if g is not None)
        return {key: coeff}


def _indices(key, dim, text):
    for k in key:
        if not 1 <= k <= dim:
            raise NotationError(f"index e{k} out of range 1..{dim} in {text!r}")
    return tuple(k - 1 for k in key)


def parse_vector(text, dim):
    terms = _Parser(text, "vector").parse()
    v = [Fraction(0)] * dim
    for key, c in terms.items():
        (i,) = _indices(key, dim, text)
        v[i] += c
    return tuple(v)


def format_vector(v, labels=None):
    from .exact.scalars import format_rational

    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        name = labels[i] if labels else f"e{i + 1}"
        mag = abs(c)
        body = name if mag == 1 else f"{format_rational(mag)}{name}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _split_top(text, sep=","):
    depth = 0
    out, cur = [], ""
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch in sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [p.strip() for p in out if p.strip()]


_REL = re.compile(r"\[e(\d+),e(\d+)\]=(.+)")


def parse_relations(text, dim):
    """Bracket relations to a dict ``{(i, j): vector}`` with 0-based i < j."""
    table = {}
    for part in _split_top(text.translate(_MINUS), ",;"):
        m = _REL.fullmatch(part)
        if not m:
            raise NotationError(f"cannot read relation {part!r}")
        i, j = _indices((int(m.group(1)), int(m.group(2))), dim, part)
        if i == j:
            raise NotationError(f"relation {part!r} brackets an element with itself")
        v = parse_vector(m.group(3), dim)
        if i > j:
            i, j = j, i
            v = tuple(-c for c in v)
        prev = table.get((i, j))
        if prev is not None and prev != v:
            raise NotationError(f"conflicting relations for [e{i + 1},e{j + 1}]")
        table[(i, j)] = v
    return table


def parse_two_form(text, dim):
    """Antisymmetric matrix with ``M[i][j] = omega(e_i, e_j)``."""
    terms = _Parser(text, "two_form").parse()
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for key, c in terms.items():
        i, j = _indices(key, dim, text)
        if i == j:
            raise NotationError(f"e{i + 1}{j + 1} is zero in a 2-form")
        rows[i][j] += c
        rows[j][i] -= c
    return Matrix(rows, dim)


def parse_symmetric(text, dim):
    """Symmetric matrix; ``c e^i.e^j`` gives ``g(e_i, e_j) = g(e_j, e_i) = c``."""
    terms = _Parser(text, "symmetric").parse()
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for key, c in terms.items():
        i, j = _indices(key, dim, text)
        rows[i][j] += c
        if i != j:
            rows[j][i] += c
    return Matrix(rows, dim)


_IMAGE = re.compile(r"Je(\d+)=(.+)")


def parse_images(text, dim):
    """Partial map ``{i: vector}`` (0-based) from ``"Je1=e4, Je2=-e5"``."""
    images = {}
    for part in _split_top(text.translate(_MINUS), ",;"):
        m = _IMAGE.fullmatch(part)
        if not m:
            raise NotationError(f"cannot read image {part!r}")
        (i,) = _indices((int(m.group(1)),), dim, part)
        images[i] = parse_vector(m.group(2), dim)
    return images
