"""Line-oriented knowledge-base language.

One statement per line; ``#`` starts a comment::

    member berries RedBerries            # berries ∈ RedBerries
    subset RedBerries Berries            # RedBerries ⊂ Berries
    stat Edible RedBerries [0.70, 0.90]  # %(Edible, RedBerries) = [0.70, 0.90]
    query berries Edible

Interval endpoints are decimals (at most 9 fractional digits) or fractions
``a/b``; both are read exactly.  Identifiers match
``[A-Za-z_][A-Za-z0-9_]*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .interval import Interval, IntervalSyntaxError, format_number, parse_interval
from .kb import (
    KBError,
    KnowledgeBase,
    Membership,
    Proportion,
    Query,
    SubsetRel,
    statement_key,
    build_kb,
)

__all__ = [
    "ParseError",
    "ParseFailure",
    "parse_interval_list",
    "parse_kb",
    "serialize_kb",
]

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
# an interval literal may not span a line; an unclosed one runs to end of line
_TOKEN_RE = re.compile(r"\[[^\]\n]*\]?|[^\s\[]+")

_ARITY = {"member": 2, "subset": 2, "stat": 3, "query": 2}


@dataclass(frozen=True)
class ParseError:
    line: int
    column: int
    message: str
    offending_text: str = ""

    def __str__(self):
        where = f"{self.line}:{self.column}"
        if self.offending_text:
            return f"{where}: {self.message} ({self.offending_text!r})"
        return f"{where}: {self.message}"


class ParseFailure(ValueError):
    """Raised with every error found in a source, not just the first."""

    def __init__(self, errors: List[ParseError]):
        self.errors = sorted(errors, key=lambda e: (e.line, e.column))
        super().__init__("\n".join(str(e) for e in self.errors))


def _tokens(line: str) -> List[Tuple[int, str]]:
    return [(m.start(), m.group()) for m in _TOKEN_RE.finditer(line)]


def _interval_token(lineno: int, col: int, text: str, errors: List[ParseError]):
    try:
        return parse_interval(text)
    except IntervalSyntaxError as exc:
        errors.append(ParseError(lineno, col + exc.offset + 1, exc.message, exc.text or text))
        return None


def _parse_line(lineno: int, line: str, errors: List[ParseError]):
    body = line.split("#", 1)[0]
    toks = _tokens(body)
    if not toks:
        return None
    (kcol, keyword), args = toks[0], toks[1:]
    if keyword not in _ARITY:
        errors.append(ParseError(lineno, kcol + 1, "unknown statement keyword", keyword))
        return None
    arity = _ARITY[keyword]
    if len(args) != arity:
        col = args[arity][0] + 1 if len(args) > arity else len(body.rstrip()) + 1
        errors.append(
            ParseError(
                lineno, col, f"'{keyword}' takes {arity} arguments, got {len(args)}", body.strip()
            )
        )
        return None

    before = len(errors)
    names = []
    for col, tok in args[:2]:
        if not IDENT_RE.fullmatch(tok):
            errors.append(ParseError(lineno, col + 1, "invalid identifier", tok))
        names.append(tok)
    interval = None
    if keyword == "stat":
        col, tok = args[2]
        interval = _interval_token(lineno, col, tok, errors)
    if len(errors) > before:
        return None

    a, b = names
    if keyword == "member":
        return Membership(a, b)
    if keyword == "subset":
        return SubsetRel(a, b)
    if keyword == "query":
        return Query(a, b)
    return Proportion(a, b, interval)


def parse_kb(source: str) -> Tuple[KnowledgeBase, List[str]]:
    """Parse a knowledge-base file.

    Returns the knowledge base and a list of warnings (repeated identical
    statements).  Raises :class:`ParseFailure` listing every syntax and
    consistency error found.
    """
    errors: List[ParseError] = []
    warnings: List[str] = []
    first_seen: Dict[object, int] = {}
    stat_lines: Dict[Tuple[str, str], Tuple[int, Interval]] = {}

    for lineno, line in enumerate(source.splitlines(), start=1):
        stmt = _parse_line(lineno, line, errors)
        if stmt is None:
            continue
        if stmt in first_seen:
            warnings.append(
                f"line {lineno}: duplicate statement (first at line {first_seen[stmt]})"
            )
            continue
        if isinstance(stmt, Proportion):
            key = (stmt.target, stmt.cls)
            if key in stat_lines:
                errors.append(
                    ParseError(
                        lineno,
                        1,
                        f"duplicate proportion for ({stmt.target}, {stmt.cls}); "
                        f"first given at line {stat_lines[key][0]}",
                        line.strip(),
                    )
                )
                continue
            stat_lines[key] = (lineno, stmt.interval)
        first_seen[stmt] = lineno

    kb = None
    try:
        kb = build_kb(first_seen)
    except KBError as exc:
        lines = sorted(first_seen[s] for s in exc.statements if s in first_seen) or [1]
        errors.append(
            ParseError(lines[0], 1, f"{exc} (lines {', '.join(map(str, lines))})", "")
        )
    if errors:
        raise ParseFailure(errors)
    return kb, warnings


def parse_interval_list(source: str) -> List[Interval]:
    """Parse whitespace-separated interval literals, e.g. ``"[0.3,0.4] [1/2, 3/4]"``."""
    errors: List[ParseError] = []
    out: List[Interval] = []
    for lineno, line in enumerate(source.splitlines(), start=1):
        for col, tok in _tokens(line):
            if not tok.startswith("["):
                errors.append(ParseError(lineno, col + 1, "expected an interval", tok))
                continue
            iv = _interval_token(lineno, col, tok, errors)
            if iv is not None:
                out.append(iv)
    if errors:
        raise ParseFailure(errors)
    return out


def serialize_kb(kb: KnowledgeBase) -> str:
    """Canonical text: members, subsets, stats, queries, each sorted."""
    items = sorted(kb.statements + kb.queries, key=statement_key)
    lines = []
    for s in items:
        if isinstance(s, Membership):
            lines.append(f"member {s.obj} {s.cls}")
        elif isinstance(s, SubsetRel):
            lines.append(f"subset {s.sub} {s.sup}")
        elif isinstance(s, Proportion):
            lo, hi = format_number(s.interval.lower), format_number(s.interval.upper)
            lines.append(f"stat {s.target} {s.cls} [{lo}, {hi}]")
        else:
            lines.append(f"query {s.obj} {s.target}")
    return "".join(line + "\n" for line in lines)
