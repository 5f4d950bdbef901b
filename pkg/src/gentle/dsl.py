"""The .gentle input language: parsing, diagnostics, serialization.

One statement per line::

    algebra NAME
    vertex ID [ID ...]
    arrow ID SOURCE TARGET [deg INT]
    rel LATER.EARLIER

Comments run from '#' to the end of the line.  ``rel b.d`` declares that the
right-to-left composition bd lies in the relation ideal, so the target of d
must be the source of b.  Degrees default to 0, making classical ungraded
gentle algebras annotation-free.

All diagnostics carry a 1-based line and column and, for syntax errors, the
set of token kinds that would have been accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import GradedGentleAlgebra, validate_gentle


@dataclass(frozen=True)
class Span:
    line: int
    column: int


class DslError(ValueError):
    def __init__(self, message: str, span: Span, expected: tuple[str, ...] = ()):
        self.message = message
        self.span = span
        self.expected = expected
        suffix = f" (expected: {', '.join(expected)})" if expected else ""
        super().__init__(f"{span.line}:{span.column}: {message}{suffix}")

    def as_dict(self) -> dict:
        return {
            "message": self.message,
            "line": self.span.line,
            "column": self.span.column,
            "expected": list(self.expected),
        }


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    source: str
    target: str
    degree: int = 0
    span: Span = field(default=Span(0, 0), compare=False)


@dataclass(frozen=True)
class RelationDecl:
    later: str
    earlier: str
    span: Span = field(default=Span(0, 0), compare=False)


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    vertices: tuple[str, ...]
    arrows: tuple[ArrowDecl, ...]
    relations: tuple[RelationDecl, ...]


_TOKEN = re.compile(r"[A-Za-z0-9_+-]+|\.|#")
_IDENT = re.compile(r"[A-Za-z0-9_]+\Z")
_INT = re.compile(r"[+-]?[0-9]+\Z")

KEYWORDS = ("algebra", "vertex", "arrow", "rel")


def _tokenize_line(text: str, line_no: int):
    tokens = []
    for match in _TOKEN.finditer(text):
        if match.group() == "#":
            break
        tokens.append((match.group(), Span(line_no, match.start() + 1)))
    stray = re.sub(_TOKEN, " ", text.split("#")[0]).strip()
    if stray:
        col = text.index(stray[0]) + 1
        raise DslError(f"unexpected character {stray[0]!r}", Span(line_no, col))
    return tokens


def parse(text: str, name: str = "algebra") -> AlgebraDocument:
    """Parse a .gentle document; DslError diagnostics carry positions."""
    doc_name = name
    vertices: list[str] = []
    vertex_spans: dict[str, Span] = {}
    arrows: list[ArrowDecl] = []
    arrow_names: dict[str, Span] = {}
    relations: list[RelationDecl] = []
    seen_rel: set[tuple[str, str]] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, line_no)
        if not tokens:
            continue
        head, head_span = tokens[0]
        rest = tokens[1:]
        if head == "algebra":
            if len(rest) != 1:
                raise DslError("algebra takes exactly one name", head_span, ("IDENT",))
            doc_name = rest[0][0]
        elif head == "vertex":
            if not rest:
                raise DslError("empty vertex declaration", head_span, ("IDENT",))
            for ident, span in rest:
                _require_ident(ident, span)
                if ident in vertex_spans:
                    raise DslError(f"duplicate vertex {ident!r}", span)
                vertex_spans[ident] = span
                vertices.append(ident)
        elif head == "arrow":
            if len(rest) not in (3, 5):
                raise DslError(
                    "arrow takes NAME SOURCE TARGET [deg INT]", head_span,
                    ("IDENT", "IDENT", "IDENT", "deg INT"),
                )
            (nm, nm_span), (src, src_span), (tgt, tgt_span) = rest[:3]
            for ident, span in rest[:3]:
                _require_ident(ident, span)
            degree = 0
            if len(rest) == 5:
                (kw, kw_span), (num, num_span) = rest[3:]
                if kw != "deg":
                    raise DslError(f"unexpected token {kw!r}", kw_span, ("deg",))
                if not _INT.match(num):
                    raise DslError(f"bad integer {num!r}", num_span, ("INT",))
                degree = int(num)
            if nm in arrow_names:
                raise DslError(f"duplicate arrow {nm!r}", nm_span)
            if src not in vertex_spans:
                raise DslError(f"unknown vertex {src!r}", src_span)
            if tgt not in vertex_spans:
                raise DslError(f"unknown vertex {tgt!r}", tgt_span)
            arrow_names[nm] = nm_span
            arrows.append(ArrowDecl(nm, src, tgt, degree, nm_span))
        elif head == "rel":
            if len(rest) != 3 or rest[1][0] != ".":
                span = rest[0][1] if rest else head_span
                raise DslError("rel takes LATER.EARLIER", span, ("IDENT . IDENT",))
            (later, later_span), _, (earlier, earlier_span) = rest
            for ident, span in ((later, later_span), (earlier, earlier_span)):
                _require_ident(ident, span)
                if ident not in arrow_names:
                    raise DslError(f"unknown arrow {ident!r}", span)
            if (later, earlier) in seen_rel:
                raise DslError(f"duplicate relation {later}.{earlier}", later_span)
            seen_rel.add((later, earlier))
            relations.append(RelationDecl(later, earlier, later_span))
        else:
            raise DslError(f"unknown statement {head!r}", head_span, KEYWORDS)

    return AlgebraDocument(doc_name, tuple(vertices), tuple(arrows), tuple(relations))


def _require_ident(token: str, span: Span) -> None:
    if not _IDENT.match(token):
        raise DslError(f"bad identifier {token!r}", span, ("IDENT",))


def serialize(doc: AlgebraDocument) -> str:
    """Canonical text form; parse(serialize(doc)) == doc."""
    lines = [f"algebra {doc.name}"]
    if doc.vertices:
        lines.append("vertex " + " ".join(doc.vertices))
    for a in doc.arrows:
        suffix = f" deg {a.degree}" if a.degree else ""
        lines.append(f"arrow {a.name} {a.source} {a.target}{suffix}")
    for r in doc.relations:
        lines.append(f"rel {r.later}.{r.earlier}")
    return "\n".join(lines) + "\n"


def document_to_algebra(doc: AlgebraDocument) -> GradedGentleAlgebra:
    """Build and validate the algebra, reporting composability at the source span."""
    by_name = {a.name: a for a in doc.arrows}
    for r in doc.relations:
        later, earlier = by_name[r.later], by_name[r.earlier]
        if later.source != earlier.target:
            raise DslError(
                f"relation {r.later}.{r.earlier} is not composable: "
                f"target of {r.earlier} is {earlier.target}, source of {r.later} is {later.source}",
                r.span,
            )
    return validate_gentle(
        doc.vertices,
        [(a.name, a.source, a.target) for a in doc.arrows],
        [(r.later, r.earlier) for r in doc.relations],
        {a.name: a.degree for a in doc.arrows},
    )


def algebra_to_document(algebra: GradedGentleAlgebra, name: str = "algebra") -> AlgebraDocument:
    return AlgebraDocument(
        name,
        algebra.quiver.vertices,
        tuple(
            ArrowDecl(a.name, a.source, a.target, algebra.deg(a.name))
            for a in algebra.quiver.arrows
        ),
        tuple(RelationDecl(b, a) for b, a in sorted(algebra.relations)),
    )
