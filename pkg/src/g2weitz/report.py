"""Deterministic report documents.

A report is an ordered list of titled sections, each an ordered list of
key/value entries.  Values render canonically: rationals as p/q in lowest
terms, matrices row-major, forms in the compact e-notation.  Identical
inputs produce byte-identical text and JSON renderings.
"""

import json
from fractions import Fraction

from .exterior import KForm, Vector
from .notation import print_form, print_rational


class ReportDoc:
    def __init__(self, title):
        self.title = title
        self.sections = []

    def section(self, title):
        entries = []
        self.sections.append((title, entries))
        return entries

    def add(self, entries, key, value):
        entries.append((key, render_value(value)))

    def to_text(self):
        lines = [self.title, "=" * len(self.title)]
        for title, entries in self.sections:
            lines.append("")
            lines.append(title)
            lines.append("-" * len(title))
            for key, value in entries:
                if "\n" in value:
                    lines.append(f"{key}:")
                    lines.extend("  " + row for row in value.split("\n"))
                else:
                    lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "title": self.title,
            "sections": [
                {"title": title, "entries": [[k, v] for k, v in entries]}
                for title, entries in self.sections
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def render_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return print_rational(Fraction(v))
    if isinstance(v, str):
        return v
    if isinstance(v, KForm):
        return print_form(v)
    if isinstance(v, Vector):
        return "(" + ", ".join(print_rational(c) for c in v.components) + ")"
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return "\n".join(
                "[" + ", ".join(print_rational(Fraction(x)) for x in row) + "]" for row in v
            )
        return "(" + ", ".join(print_rational(Fraction(x)) for x in v) + ")"
    if v is None:
        return "none"
    raise TypeError(f"cannot render {type(v).__name__} in a report")
