"""Text formats: solution files, basis files and DOT export.

A solution file is line oriented with ``#`` comments::

    set x1 x2 x3 a
    act a = (x1 x2 x3)
    act x1 = id
    basis x1 = a

Unlisted ``act`` lines default to the identity.  The alternative table mode
gives ``r x y = z t`` for every ordered pair.  A ``basis`` line lists
comma-separated words; letters inside a word are separated by spaces and may
carry a power, so ``a^2 b^3`` is the same word as ``a a b b b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .cyclotomic import CycNum
from .permgroup import Perm, orbits
from .solution import IncompleteTable, QuadraticSet, SolutionError, from_left_actions, from_pair_map


class ParseError(SolutionError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SolutionSyntaxError(ParseError):
    pass


class UnknownName(ParseError):
    pass


class MixedModes(ParseError):
    pass


@dataclass
class ParsedSolution:
    qs: QuadraticSet
    basis: dict = field(default_factory=dict)  # element index -> list of words (element indices)
    mode: str = "act"


_CYCLE = re.compile(r"\(([^()]*)\)")


def _tokens(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def _lookup(names: dict, name: str, line: int) -> int:
    try:
        return names[name]
    except KeyError:
        raise UnknownName(f"unknown element {name!r}", line) from None


def _parse_cycles(body: str, names: dict, n: int, line: int) -> list[int]:
    body = body.strip()
    if body == "id":
        return list(range(n))
    if not body:
        raise SolutionSyntaxError("empty action", line)
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(body):
        if body[pos:m.start()].strip():
            raise SolutionSyntaxError(f"unexpected text {body[pos:m.start()].strip()!r}", line)
        cycles.append([_lookup(names, t, line) for t in m.group(1).split()])
        pos = m.end()
    if body[pos:].strip() or not cycles:
        raise SolutionSyntaxError(f"malformed cycle notation {body!r}", line)
    flat = [x for c in cycles for x in c]
    if len(flat) != len(set(flat)):
        raise SolutionSyntaxError("cycles are not disjoint", line)
    return list(Perm.from_cycles(n, cycles))


def _parse_words(body: str, names: dict, line: int) -> list[tuple[int, ...]]:
    words = []
    for chunk in body.split(","):
        word: list[int] = []
        for tok in chunk.split():
            name, _, power = tok.partition("^")
            k = 1
            if power:
                if not power.isdigit():
                    raise SolutionSyntaxError(f"bad exponent in {tok!r}", line)
                k = int(power)
            word.extend([_lookup(names, name, line)] * k)
        if not word:
            raise SolutionSyntaxError("empty basis word", line)
        words.append(tuple(word))
    return words


def parse_solution(text: str) -> ParsedSolution:
    names: dict[str, int] = {}
    order: list[str] = []
    acts: dict[int, list[int]] = {}
    table: dict = {}
    basis: dict = {}
    mode = None
    for num, line in _tokens(text):
        head, _, rest = line.partition(" ")
        if head == "set":
            if order:
                raise SolutionSyntaxError("duplicate set line", num)
            order = rest.split()
            if not order:
                raise SolutionSyntaxError("empty set", num)
            if len(set(order)) != len(order):
                raise SolutionSyntaxError("repeated element name", num)
            names = {s: k for k, s in enumerate(order)}
            continue
        if not order:
            raise SolutionSyntaxError("the set line must come first", num)
        if head in ("act", "r"):
            kind = "act" if head == "act" else "table"
            if mode is not None and mode != kind:
                raise MixedModes("action lines and table lines cannot be mixed", num)
            mode = kind
        lhs, eq, rhs = rest.partition("=")
        if not eq:
            raise SolutionSyntaxError("expected '='", num)
        if head == "act":
            x = _lookup(names, lhs.strip(), num)
            if x in acts:
                raise SolutionSyntaxError(f"second action for {order[x]}", num)
            acts[x] = _parse_cycles(rhs, names, len(order), num)
        elif head == "r":
            src, img = lhs.split(), rhs.split()
            if len(src) != 2 or len(img) != 2:
                raise SolutionSyntaxError("table lines read 'r x y = z t'", num)
            key = tuple(_lookup(names, s, num) for s in src)
            if key in table:
                raise SolutionSyntaxError(f"pair ({src[0]},{src[1]}) given twice", num)
            table[key] = tuple(_lookup(names, s, num) for s in img)
        elif head == "basis":
            rep = _lookup(names, lhs.strip(), num)
            basis[rep] = _parse_words(rhs, names, num)
        else:
            raise SolutionSyntaxError(f"unknown directive {head!r}", num)
    if not order:
        raise SolutionSyntaxError("no set line")
    n = len(order)
    if mode == "table":
        qs = from_pair_map(order, table)
    else:
        qs = from_left_actions(order, [acts.get(x, list(range(n))) for x in range(n)])
    return ParsedSolution(qs, basis, mode or "act")


def load_solution(path) -> ParsedSolution:
    with open(path, encoding="utf-8") as fh:
        return parse_solution(fh.read())


def fixture_text(name: str) -> str:
    return resources.files("ybsets").joinpath("data", name).read_text(encoding="utf-8")


def load_fixture(name: str) -> ParsedSolution:
    """A shipped example such as ``example_5_1.ybe``."""
    return parse_solution(fixture_text(name))


def _is_lri(qs: QuadraticSet) -> bool:
    return from_left_actions(qs.names, qs.left_table) == qs


def format_perm(names, perm) -> str:
    cyc = Perm(perm).cycles()
    if not cyc:
        return "id"
    return "".join("(" + " ".join(names[x] for x in c) + ")" for c in cyc)


def print_solution(parsed: ParsedSolution | QuadraticSet) -> str:
    """Canonical text; action mode whenever the right action is the inverse of the left."""
    if isinstance(parsed, QuadraticSet):
        parsed = ParsedSolution(parsed)
    qs = parsed.qs
    lines = ["set " + " ".join(qs.names)]
    if _is_lri(qs):
        for x, name in enumerate(qs.names):
            lines.append(f"act {name} = {format_perm(qs.names, qs.left_table[x])}")
    else:
        for x in range(qs.size):
            for y in range(qs.size):
                z, t = qs.r(x, y)
                lines.append(f"r {qs.names[x]} {qs.names[y]} = {qs.names[z]} {qs.names[t]}")
    for rep in sorted(parsed.basis):
        words = ", ".join(" ".join(qs.names[x] for x in w) for w in parsed.basis[rep])
        lines.append(f"basis {qs.names[rep]} = {words}")
    return "\n".join(lines) + "\n"


# -- basis files --------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(\*?)(z(?:\^(\d+))?)?")


def parse_cycnum(text: str, level: int) -> CycNum:
    """Parse a sum like ``-1``, ``z^3``, ``1/2-3*z`` where z is a primitive level-th root of unity."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty coefficient")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(4)):
            raise ValueError(f"bad coefficient {text!r}")
        if m.group(3) and not (m.group(2) and m.group(4)):
            raise ValueError(f"bad coefficient {text!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign in {text!r}")
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            c = -c
        k = 0
        if m.group(4):
            k = int(m.group(5)) if m.group(5) else 1
        k %= level
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
    # reduce z^k with k >= phi(N) through the constructor
    dense = [Fraction(0)] * level
    for k, c in coeffs.items():
        dense[k] += c
    return CycNum(level, dense)


@dataclass
class BasisFile:
    level: int
    vectors: list  # (label, {element index: CycNum})


def parse_basis(text: str, qs: QuadraticSet) -> BasisFile:
    """``level N`` followed by lines ``vec <label> = <elem>:<coeff> ...``."""
    names = {s: k for k, s in enumerate(qs.names)}
    level = None
    vectors = []
    labels = set()
    for num, line in _tokens(text):
        head, _, rest = line.partition(" ")
        if head == "level":
            if level is not None or vectors:
                raise SolutionSyntaxError("level must be given once, before the vectors", num)
            try:
                level = int(rest)
            except ValueError:
                raise SolutionSyntaxError(f"bad level {rest!r}", num) from None
            if level < 1:
                raise SolutionSyntaxError("level must be positive", num)
        elif head == "vec":
            if level is None:
                raise SolutionSyntaxError("level line missing", num)
            lhs, eq, rhs = rest.partition("=")
            label = lhs.strip()
            if not eq or not label:
                raise SolutionSyntaxError("vector lines read 'vec <label> = <elem>:<coeff> ...'", num)
            if label in labels:
                raise SolutionSyntaxError(f"duplicate label {label!r}", num)
            labels.add(label)
            vec = {}
            for tok in rhs.split():
                name, colon, coeff = tok.partition(":")
                if not colon:
                    raise SolutionSyntaxError(f"expected elem:coeff, got {tok!r}", num)
                x = _lookup(names, name, num)
                try:
                    val = parse_cycnum(coeff, level)
                except ValueError as exc:
                    raise SolutionSyntaxError(str(exc), num) from None
                vec[x] = vec.get(x, CycNum.zero(level)) + val
            vectors.append((label, vec))
        else:
            raise SolutionSyntaxError(f"unknown directive {head!r}", num)
    if level is None:
        raise SolutionSyntaxError("level line missing")
    return BasisFile(level, vectors)


def load_basis(path, qs: QuadraticSet) -> BasisFile:
    with open(path, encoding="utf-8") as fh:
        return parse_basis(fh.read(), qs)


# -- DOT ----------------------------------------------------------------------

_STYLES = ("solid", "dashed", "dotted", "bold")
_COLORS = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray")


def export_dot(qs: QuadraticSet, orbit_styling: bool = True) -> str:
    """Arrows y -> L_x(y); actors sharing one permutation share one labelled edge set.

    Identity actions and fixed points are omitted.
    """
    dec = orbits(qs)
    groups: dict[tuple, list[int]] = {}
    for x in range(qs.size):
        row = qs.left_table[x]
        if any(row[y] != y for y in range(qs.size)):
            groups.setdefault(row, []).append(x)
    out = ["digraph solution {"]
    for name in qs.names:
        out.append(f'  "{name}";')
    for row, actors in groups.items():
        i = dec.orbit_of[actors[0]]
        attrs = [f'label="{",".join(qs.names[x] for x in actors)}"']
        if orbit_styling:
            attrs.append(f"color={_COLORS[i % len(_COLORS)]}")
            attrs.append(f"style={_STYLES[i % len(_STYLES)]}")
        for y in range(qs.size):
            if row[y] != y:
                out.append(f'  "{qs.names[y]}" -> "{qs.names[row[y]]}" [{", ".join(attrs)}];')
    out.append("}")
    return "\n".join(out) + "\n"


def dot_edges(text: str) -> list[tuple[str, str, str]]:
    """(source, target, label) triples from DOT text written by :func:`export_dot`."""
    pat = re.compile(r'"([^"]+)" -> "([^"]+)" \[label="([^"]+)"')
    return [m.groups() for m in pat.finditer(text)]
