"""Compact structure-equation notation for forms.

Grammar (dimensions up to 9, so every index is a single digit):

    form_expr := term {term}
    term      := sign? coeff? basis
    sign      := '+' | '-'
    coeff     := integer ['/' positive-integer] '*'
    basis     := 'e' digit+

"0" denotes the zero form; whitespace is ignored everywhere.  Indices may
arrive in any order (the parity sign is applied), but a repeated index inside
one term is an error.  Printing is canonical: ascending indices, terms sorted
by index tuple, coefficients in lowest terms, "1*" omitted.
"""

from fractions import Fraction

from .exterior import KForm


class FormSyntaxError(ValueError):
    """Parse failure; carries the byte offset into the cleaned string."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_form(s, dim, degree=None):
    """Parse a form expression; degree is inferred unless given explicitly."""
    text = "".join(s.split())
    if text == "" :
        raise FormSyntaxError("empty form expression", 0)
    if text == "0":
        if degree is None:
            raise ValueError("cannot infer the degree of the zero form; pass degree=")
        return KForm.zero(dim, degree)

    pos = 0
    n = len(text)
    terms = []
    while pos < n:
        start = pos
        sign = 1
        if text[pos] in "+-":
            if text[pos] == "-":
                sign = -1
            pos += 1
        # optional coefficient: integer[/posint]*
        coeff = Fraction(1)
        digits_start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos > digits_start and pos < n and text[pos] in "/*":
            num = int(text[digits_start:pos])
            if text[pos] == "/":
                pos += 1
                den_start = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                if pos == den_start:
                    raise FormSyntaxError("expected denominator digits", pos)
                den = int(text[den_start:pos])
                if den == 0:
                    raise FormSyntaxError("zero denominator", den_start)
                if pos >= n or text[pos] != "*":
                    raise FormSyntaxError("expected '*' after coefficient", pos)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            pos += 1  # consume '*'
        elif pos > digits_start:
            raise FormSyntaxError("bare number; expected '*e...' after coefficient", pos)
        if pos >= n or text[pos] != "e":
            raise FormSyntaxError("expected basis 'e' followed by indices", pos)
        pos += 1
        idx_start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == idx_start:
            raise FormSyntaxError("expected at least one index digit", pos)
        indices = tuple(int(ch) for ch in text[idx_start:pos])
        for off, i in enumerate(indices):
            if i == 0 or i > dim:
                raise FormSyntaxError(f"index {i} exceeds dimension {dim}", idx_start + off)
        if len(set(indices)) != len(indices):
            raise FormSyntaxError("repeated index within one term", idx_start)
        terms.append((indices, sign * coeff))
        if start == pos:
            raise FormSyntaxError("parser made no progress", pos)

    degrees = {len(idx) for idx, _ in terms}
    if len(degrees) != 1:
        raise FormSyntaxError("mixed degrees in one form expression", 0)
    deg = degrees.pop()
    if degree is not None and degree != deg:
        raise ValueError(f"expected degree {degree}, parsed degree {deg}")
    out = KForm.zero(dim, deg)
    for idx, c in terms:
        out = out + KForm.basis(dim, idx, c)
    return out


def _coeff_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_form(a):
    """Canonical rendering; inverse of parse_form on canonical forms."""
    if a.is_zero():
        return "0"
    parts = []
    for idx, c in a.terms():
        basis = "e" + "".join(str(i) for i in idx)
        mag = abs(c)
        body = basis if mag == 1 else f"{_coeff_str(mag)}*{basis}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


def print_rational(c):
    """Render p/q in lowest terms, or bare p when q is 1."""
    return _coeff_str(c)
