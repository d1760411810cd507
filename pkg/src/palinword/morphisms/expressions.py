"""
Compact word expressions such as ``12 h(12) h^2(12) h(0121301) 012``.

Grammar::

    expr  := term*
    term  := letters | name ["^" power] "(" expr ")" | "ε"

Whitespace between terms is ignored; terms may also be written without it,
as in ``012g(1)0102``.
"""

from typing import Mapping, Tuple

from .morphism import Morphism


def _parse(text: str, pos: int, morphisms: Mapping[str, Morphism]) -> Tuple[str, int]:
    out = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == "ε":
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            out.append(text[start:pos])
        elif ch == ")":
            break
        elif ch.isalpha():
            start = pos
            while pos < len(text) and (text[pos].isalpha() or text[pos] == "_"):
                pos += 1
            name = text[start:pos]
            if name not in morphisms:
                raise ValueError(f"Unknown morphism {name!r} at {start} in {text!r}")
            power = 1
            if pos < len(text) and text[pos] == "^":
                pos += 1
                digits = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                if digits == pos:
                    raise ValueError(f"Missing power after '^' at {digits} in {text!r}")
                power = int(text[digits:pos])
            if pos >= len(text) or text[pos] != "(":
                raise ValueError(f"Expected '(' at {pos} in {text!r}")
            inner, pos = _parse(text, pos + 1, morphisms)
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"Unbalanced parentheses in {text!r}")
            pos += 1
            out.append(morphisms[name].power(power, inner))
        else:
            raise ValueError(f"Unexpected {ch!r} at {pos} in {text!r}")
    return "".join(out), pos


def evaluate(expr: str, morphisms: Mapping[str, Morphism]) -> str:
    """Evaluate ``expr`` with the named morphisms."""
    word, pos = _parse(expr, 0, morphisms)
    if pos != len(expr):
        raise ValueError(f"Unbalanced parentheses in {expr!r}")
    return word
