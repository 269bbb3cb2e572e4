"""Text formats for arrangements and weak combinatorics.

Arrangement files hold one component per line::

    # CL1's conic and two lines
    line: 1 0 0            # x
    line: 1 1 -1           # x + y - z
    conic: 1 1 -1 0 0 0    # x^2 + y^2 - z^2

``line: a b c`` is ax + by + cz and ``conic: a b c d e f`` is
ax^2 + by^2 + cz^2 + dxy + exz + fyz.  Coefficients are integers or
fractions ``p/q``.  ``#`` starts a comment; blank lines are ignored.
Semantic checks (zero forms, duplicates, singular conics) are left to
:func:`mcurves.arrangement.validate`.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, WeakCombinatorics
from .errors import NegativeCount, ParseError
from .exactpoly import HForm

ARITY = {"line": 3, "conic": 6}
_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")
_CONIC_MONOMIALS = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]


@dataclass
class ArrangementDocument:
    source: str
    arrangement: Arrangement
    spans: dict = field(default_factory=dict)


def _number(token, lineno, col):
    if not _NUMBER.match(token):
        raise ParseError(f"bad coefficient {token!r}", lineno, col)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", lineno, col) from None


def parse_arrangement(text):
    lines, conics, spans = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        head, sep, rest = body.strip().partition(":")
        kind = head.strip()
        if not sep or kind not in ARITY:
            raise ParseError("expected 'line:' or 'conic:'", lineno, col)
        tokens = []
        offset = body.index(":") + 1
        for m in re.finditer(r"\S+", body[offset:]):
            tokens.append((m.group(), offset + m.start() + 1))
        if len(tokens) != ARITY[kind]:
            raise ParseError(f"{kind} needs {ARITY[kind]} coefficients, got {len(tokens)}",
                             lineno, col)
        coeffs = [_number(tok, lineno, c) for tok, c in tokens]
        if kind == "line":
            spans[f"L{len(lines)}"] = (lineno, col)
            lines.append(HForm.linear(*coeffs))
        else:
            spans[f"C{len(conics)}"] = (lineno, col)
            conics.append(HForm.conic(*coeffs))
    return ArrangementDocument(text, Arrangement(lines, conics), spans)


def _fmt(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def line_coefficients(form):
    return [form.coefficient(e) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]


def conic_coefficients(form):
    return [form.coefficient(e) for e in _CONIC_MONOMIALS]


def serialize_arrangement(arr):
    out = []
    for f in arr.lines:
        out.append("line: " + " ".join(_fmt(c) for c in line_coefficients(f)))
    for f in arr.conics:
        out.append("conic: " + " ".join(_fmt(c) for c in conic_coefficients(f)))
    return "\n".join(out) + "\n"


_WC = re.compile(r"^\s*(?:C\()?\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*([-\d,\s]*?)\s*\)?\s*$")


def parse_wc(text):
    """Parse ``d,k;n2,n3,...`` (optionally wrapped as ``C(...)``)."""
    m = _WC.match(text)
    if not m:
        raise ParseError(f"expected 'd,k;n2,n3,...', got {text!r}")
    d, k = int(m.group(1)), int(m.group(2))
    rest = m.group(3).strip()
    ns = []
    if rest:
        for tok in rest.split(","):
            tok = tok.strip()
            if not re.fullmatch(r"-?\d+", tok):
                raise ParseError(f"bad count {tok!r} in {text!r}")
            ns.append(int(tok))
    if d < 0 or k < 0 or any(n < 0 for n in ns):
        raise NegativeCount(f"negative entry in {text!r}")
    return WeakCombinatorics.from_sequence(d, k, ns)
