"""Exact sparse multivariate polynomials over the integers.

Variables come in two kinds: alphabet variables x^level_index (one
sub-alphabet per vector space in the dimension vector) and the single
homogenizing variable h.  A variable is encoded as a tuple:

    ("x", level, index)   the alphabet variable x^level_index
    ("h",)                the homogenizing variable h

Variables are totally ordered: alphabet variables lexicographically by
(level, index), with h strictly last.  A monomial is a tuple of
(variable, exponent) pairs sorted in that order with all exponents
positive, and a polynomial maps monomials to nonzero integer
coefficients.  Canonical form is unique, so equality is structural.
"""

from __future__ import annotations

import re
from functools import cmp_to_key
from typing import Iterable, Mapping

Variable = tuple
Monomial = tuple  # tuple[tuple[Variable, int], ...], sorted, exponents > 0

HBAR: Variable = ("h",)

_ONE: Monomial = ()


def xvar(level: int, index: int) -> Variable:
    """The alphabet variable x^level_index (index is 1-based)."""
    return ("x", level, index)


def var_key(v: Variable) -> tuple:
    """Sort key realizing the global variable order (h strictly last)."""
    if v[0] == "x":
        return (0, v[1], v[2])
    return (1, 0, 0)


class NotDivisible(Exception):
    """No exact quotient exists; usually signals a convention bug upstream."""


class MissingAssignment(Exception):
    """substitute() was handed an assignment missing an occurring variable."""


class ParseError(Exception):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _mono(pairs: Iterable[tuple[Variable, int]]) -> Monomial:
    kept = [(v, e) for v, e in pairs if e != 0]
    kept.sort(key=lambda p: var_key(p[0]))
    return tuple(kept)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[Variable, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return _mono(exps.items())


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    exps = dict(a)
    for v, e in b:
        have = exps.get(v, 0)
        if have < e:
            return None
        exps[v] = have - e
    return _mono(exps.items())


def _grlex_cmp(a: Monomial, b: Monomial) -> int:
    """Graded-lex comparison in the global variable order."""
    da = sum(e for _, e in a)
    db = sum(e for _, e in b)
    if da != db:
        return -1 if da < db else 1
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        ka, kb = var_key(va), var_key(vb)
        if ka != kb:
            # the monomial holding the earlier variable is lex-larger
            return 1 if ka < kb else -1
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
        j += 1
    if i < len(a):
        return 1
    if j < len(b):
        return -1
    return 0


_grlex_key = cmp_to_key(_grlex_cmp)


class Poly:
    """Immutable sparse polynomial; all operations return new values."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({_ONE: c})

    @classmethod
    def one(cls) -> "Poly":
        return cls.const(1)

    @classmethod
    def var(cls, v: Variable) -> "Poly":
        return cls({((v, 1),): 1})

    @classmethod
    def hbar(cls) -> "Poly":
        return cls.var(HBAR)

    # -- ring arithmetic -------------------------------------------------
    def __add__(self, other: "Poly | int") -> "Poly":
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    # -- queries ---------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def variables(self) -> set[Variable]:
        return {v for m in self.terms for v, _ in m}

    def hbar_coefficient(self, k: int) -> "Poly":
        """The coefficient of h^k, as a polynomial free of h."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            if exps.pop(HBAR, 0) == k:
                out[_mono(exps.items())] = c
        return Poly(out)

    def leading_term(self) -> tuple[Monomial, int]:
        """Graded-lex leading term of a nonzero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]


def _coerce(x: "Poly | int") -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def exact_divide(num: Poly, den: Poly) -> Poly:
    """The exact quotient q with q * den == num.

    Division is multivariate reduction against the single divisor under
    graded-lex order; any step that fails to cancel the leading term
    raises NotDivisible.
    """
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    den_lm, den_lc = den.leading_term()
    quot: dict[Monomial, int] = {}
    rem = num
    while rem:
        lm, lc = rem.leading_term()
        mq = _mono_div(lm, den_lm)
        if mq is None or lc % den_lc != 0:
            raise NotDivisible(f"{format_poly(den)} does not divide {format_poly(num)}")
        c = lc // den_lc
        quot[mq] = quot.get(mq, 0) + c
        rem = rem - Poly({mq: c}) * den
    return Poly(quot)


def substitute(p: Poly, assignment: Mapping[Variable, "Poly | int"]) -> Poly:
    """Evaluate p under a total assignment of its variables."""
    out = Poly.zero()
    for m, c in p.terms.items():
        term = Poly.const(c)
        for v, e in m:
            if v not in assignment:
                raise MissingAssignment(f"no value for variable {_var_text(v, 'ascii')}")
            term = term * (_coerce(assignment[v]) ** e)
        out = out + term
    return out


# -- formatting and parsing ----------------------------------------------

_LETTERS_MAX_LEVEL = 25


def _var_text(v: Variable, style: str, sizes: tuple[int, ...] | None = None) -> str:
    if v == HBAR:
        return r"\hbar" if style == "latex" else "h"
    _, level, index = v
    if style == "letters":
        if level > _LETTERS_MAX_LEVEL:
            raise ValueError(f"letters style supports levels 0..25, got {level}")
        if sizes is not None and level < len(sizes) and sizes[level] == 1:
            return chr(ord("a") + level)
        return f"{chr(ord('a') + level)}{index}"
    if style == "latex":
        return f"x^{{{level}}}_{{{index}}}"
    return f"x{level}_{index}"


def format_poly(
    p: Poly, style: str = "ascii", sizes: tuple[int, ...] | None = None
) -> str:
    """Canonical text: terms in descending graded-lex order.

    In letters style the optional block sizes suppress the subscript of
    any level with a single variable (a1 prints as a).
    """
    if not p.terms:
        return "0"
    sep = " " if style == "latex" else "*"
    pieces: list[str] = []
    for m in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[m]
        factors = []
        for v, e in m:
            name = _var_text(v, style, sizes)
            if e == 1:
                factors.append(name)
            elif style == "latex":
                factors.append(f"{name}^{{{e}}}")
            else:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = sep.join(factors)
        else:
            body = sep.join([str(abs(c))] + factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(x(\d+)_(\d+)|h|\d+|[-+*^])")


def parse_poly(text: str) -> Poly:
    """Parse the canonical ascii grammar back into a polynomial."""
    pos = 0
    tokens: list[tuple[str, int]] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()

    idx = 0

    def peek() -> str | None:
        return tokens[idx][0] if idx < len(tokens) else None

    def take() -> tuple[str, int]:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_factor() -> tuple[Poly, bool]:
        """One factor; the bool flags a bare integer (a coefficient)."""
        tok, at = take()
        if tok.isdigit():
            base: Poly | None = None
            value = int(tok)
        elif tok == "h":
            base, value = Poly.hbar(), 0
        elif tok.startswith("x"):
            m = _TOKEN.match(tok)
            assert m is not None
            base, value = Poly.var(xvar(int(m.group(2)), int(m.group(3)))), 0
        else:
            raise ParseError(f"expected factor, got {tok!r}", at)
        if peek() == "^":
            take()
            tok, at = take() if idx < len(tokens) else (None, len(text))
            if tok is None or not tok.isdigit():
                raise ParseError("expected exponent", at)
            e = int(tok)
            if base is None:
                return Poly.const(value**e), True
            return base**e, False
        if base is None:
            return Poly.const(value), True
        return base, False

    def parse_term() -> Poly:
        p, _ = parse_factor()
        while peek() == "*":
            take()
            if peek() is None:
                raise ParseError("dangling '*'", len(text))
            q, _ = parse_factor()
            p = p * q
        return p

    if not tokens:
        raise ParseError("empty input", 0)
    sign = 1
    if peek() in ("+", "-"):
        tok, _ = take()
        sign = -1 if tok == "-" else 1
    if peek() is None:
        raise ParseError("expected term", len(text))
    total = sign * parse_term()
    while peek() is not None:
        tok, at = take()
        if tok not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', got {tok!r}", at)
        if peek() is None:
            raise ParseError("dangling sign", len(text))
        term = parse_term()
        total = total + term if tok == "+" else total - term
    return total
