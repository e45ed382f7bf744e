"""Link stream data model: timed links, parsing, validation and delta expansion.

A link (b, e, u, v) means vertices u and v interact over the closed time
interval [b, e]. Times are integer ticks by default; floats are accepted
everywhere when real-valued timestamps are needed (integer ticks keep the
strict boundary comparisons of the clique machinery exact). Links on the same
vertex pair must cover pairwise disjoint intervals, so the link covering any
given moment on a pair is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Time = int | float

__all__ = [
    "Time",
    "Interval",
    "Link",
    "LinkStream",
    "Violation",
    "ParseError",
    "parse_links",
    "apply_delta",
    "validate",
    "serialize",
]


class ParseError(ValueError):
    """Malformed or invariant-breaking input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True, order=True, slots=True)
class Interval:
    """Closed time interval [t0, t1] with t1 >= t0. Zero length is allowed."""

    t0: Time
    t1: Time

    def __post_init__(self):
        if self.t1 < self.t0:
            raise ValueError(f"interval end {self.t1!r} before start {self.t0!r}")

    @property
    def length(self) -> Time:
        return self.t1 - self.t0

    def is_positive(self) -> bool:
        return self.t1 > self.t0

    def contains(self, other: Interval) -> bool:
        return self.t0 <= other.t0 and other.t1 <= self.t1

    def contains_time(self, t: Time) -> bool:
        return self.t0 <= t <= self.t1

    def overlap_length(self, other: Interval) -> Time:
        """Length of the intersection; negative when the intervals are apart."""
        return min(self.t1, other.t1) - max(self.t0, other.t0)


@dataclass(frozen=True, order=True, slots=True)
class Link:
    """One temporal edge. The pair is normalized to u < v; order is (b, e, u, v)."""

    b: Time
    e: Time
    u: int
    v: int

    def __post_init__(self):
        if self.v < self.u:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)

    @property
    def interval(self) -> Interval:
        return Interval(self.b, self.e)


@dataclass(frozen=True, eq=False)
class LinkStream:
    """Chronologically sorted links plus the vertex label table.

    Vertex ids are dense integers; ``labels`` maps them back to the external
    labels they were parsed from. Two streams are equal when they carry the
    same labeled links and labels, whatever the internal id assignment.
    Instances are immutable after construction and safe to share read-only
    across threads.
    """

    links: tuple[Link, ...]
    labels: dict[int, str]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinkStream):
            return NotImplemented
        return (
            sorted(self.labeled_links()) == sorted(other.labeled_links())
            and set(self.labels.values()) == set(other.labels.values())
        )

    @classmethod
    def from_links(
        cls, links: Iterable[Link], labels: dict[int, str] | None = None
    ) -> LinkStream:
        ordered = tuple(sorted(links))
        if labels is None:
            seen = {x for ln in ordered for x in (ln.u, ln.v)}
            labels = {v: str(v) for v in sorted(seen)}
        return cls(ordered, dict(labels))

    @property
    def span(self) -> Interval | None:
        """[min b, max e] over all links; None for an empty stream."""
        if not self.links:
            return None
        return Interval(self.links[0].b, max(ln.e for ln in self.links))

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def vertices(self) -> list[int]:
        return sorted(self.labels)

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def labeled_links(self) -> list[tuple[Time, Time, str, str]]:
        """Links as (b, e, label, label) tuples, the label pair sorted."""
        out = []
        for ln in self.links:
            a, b = self.labels[ln.u], self.labels[ln.v]
            if b < a:
                a, b = b, a
            out.append((ln.b, ln.e, a, b))
        return out

    def pair_intervals(self) -> dict[tuple[int, int], list[Interval]]:
        """Per unordered pair, the chronological list of link intervals."""
        out: dict[tuple[int, int], list[Interval]] = {}
        for ln in self.links:
            out.setdefault(ln.pair, []).append(Interval(ln.b, ln.e))
        return out


@dataclass(frozen=True)
class Violation:
    """A broken invariant found by validate(); data, not an exception."""

    kind: str
    message: str
    links: tuple[int, ...]


def validate(stream: LinkStream) -> list[Violation]:
    """Audit every stream invariant and report all violations found.

    Checked: e >= b per link, no self-loops, links sorted by non-decreasing b,
    disjoint intervals on each pair, and a bijective label table covering the
    vertices that appear in links.
    """
    out: list[Violation] = []
    links = stream.links
    for i, ln in enumerate(links):
        if ln.e < ln.b:
            out.append(Violation("end-before-begin", f"link {i} ends at {ln.e!r} before {ln.b!r}", (i,)))
        if ln.u == ln.v:
            out.append(Violation("self-loop", f"link {i} loops on vertex {ln.u}", (i,)))
    for i in range(1, len(links)):
        if links[i].b < links[i - 1].b:
            out.append(Violation("unsorted", f"link {i} begins before link {i - 1}", (i - 1, i)))
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, ln in enumerate(links):
        by_pair.setdefault(ln.pair, []).append(i)
    for pair, idxs in by_pair.items():
        idxs.sort(key=lambda i: (links[i].b, links[i].e))
        for a, b in zip(idxs, idxs[1:]):
            # closed intervals: touching at a single point already counts as overlap
            if links[b].b <= links[a].e:
                out.append(Violation("pair-overlap", f"links {a} and {b} overlap on pair {pair}", (a, b)))
    present = {x for ln in links for x in (ln.u, ln.v)}
    missing = present - set(stream.labels)
    if missing:
        out.append(Violation("label-missing", f"no label for vertices {sorted(missing)}", ()))
    if len(set(stream.labels.values())) != len(stream.labels):
        out.append(Violation("label-duplicate", "label table is not a bijection", ()))
    return out


def _parse_time(token: str, line: int) -> Time:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"bad time value {token!r}", line) from None


def _iter_lines(source) -> Iterable[str]:
    if isinstance(source, str):
        return source.splitlines()
    return source  # file objects and other line iterables


def parse_links(source, format: str = "durational", delta: Time | None = None) -> LinkStream:
    """Parse text into a validated LinkStream.

    Durational lines are ``b e u v``; instantaneous lines are ``t u v`` and
    require ``delta``, the uniform duration given to each instant (handled by
    :func:`apply_delta`). Fields are whitespace-separated; blank lines and
    ``#``-prefixed comment lines are skipped. External labels are mapped to
    dense vertex ids in order of first appearance. Raises ParseError with the
    offending line number on malformed input or a broken invariant.
    """
    if format not in ("durational", "instantaneous"):
        raise ValueError(f"unknown format {format!r}")
    if format == "instantaneous":
        instants, labels = _parse_instant_lines(_iter_lines(source))
        if delta is None:
            raise ParseError("instantaneous input requires a positive delta")
        return apply_delta(instants, delta, labels)

    ids: dict[str, int] = {}
    entries: list[tuple[Link, int]] = []
    for lineno, raw in enumerate(_iter_lines(source), 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 4:
            raise ParseError(f"expected 'b e u v', got {len(parts)} fields", lineno)
        b = _parse_time(parts[0], lineno)
        e = _parse_time(parts[1], lineno)
        if e < b:
            raise ParseError(f"link ends at {parts[1]} before it begins at {parts[0]}", lineno)
        if parts[2] == parts[3]:
            raise ParseError(f"self-loop on vertex {parts[2]!r}", lineno)
        u = ids.setdefault(parts[2], len(ids))
        v = ids.setdefault(parts[3], len(ids))
        entries.append((Link(b, e, u, v), lineno))

    by_pair: dict[tuple[int, int], list[tuple[Link, int]]] = {}
    for link, lineno in entries:
        by_pair.setdefault(link.pair, []).append((link, lineno))
    kept: list[Link] = []
    for pair, group in by_pair.items():
        group.sort(key=lambda item: (item[0].b, item[0].e))
        prev: tuple[Link, int] | None = None
        for link, lineno in group:
            if prev is not None:
                if link == prev[0]:
                    continue  # repeated identical line: links form a set
                if link.b <= prev[0].e:
                    raise ParseError(
                        f"links on pair ({_label(ids, pair[0])}, {_label(ids, pair[1])}) overlap"
                        f" (lines {prev[1]} and {lineno})",
                        lineno,
                    )
            kept.append(link)
            prev = (link, lineno)
    labels = {i: lab for lab, i in ids.items()}
    return LinkStream.from_links(kept, labels)


def _label(ids: dict[str, int], v: int) -> str:
    for lab, i in ids.items():
        if i == v:
            return lab
    return str(v)


def _parse_instant_lines(lines) -> tuple[list[tuple[Time, int, int]], dict[int, str]]:
    ids: dict[str, int] = {}
    instants: list[tuple[Time, int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 3:
            raise ParseError(f"expected 't u v', got {len(parts)} fields", lineno)
        t = _parse_time(parts[0], lineno)
        if parts[1] == parts[2]:
            raise ParseError(f"self-loop on vertex {parts[1]!r}", lineno)
        u = ids.setdefault(parts[1], len(ids))
        v = ids.setdefault(parts[2], len(ids))
        instants.append((t, u, v))
    return instants, {i: lab for lab, i in ids.items()}


def apply_delta(
    instants: Iterable[tuple[Time, int, int]],
    delta: Time,
    labels: dict[int, str] | None = None,
) -> LinkStream:
    """Expand instantaneous records (t, u, v) into links (t, t + delta, u, v).

    Records on the same pair whose expanded intervals overlap *or touch* are
    merged into a single link over the union of the intervals, which restores
    the pair-disjointness invariant.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    by_pair: dict[tuple[int, int], list[Time]] = {}
    for t, u, v in instants:
        if u == v:
            raise ValueError(f"self-loop instant on vertex {u}")
        key = (u, v) if u < v else (v, u)
        by_pair.setdefault(key, []).append(t)
    links: list[Link] = []
    for (u, v), ts in by_pair.items():
        ts.sort()
        start = ts[0]
        end = ts[0] + delta
        for t in ts[1:]:
            if t <= end:
                if t + delta > end:
                    end = t + delta
            else:
                links.append(Link(start, end, u, v))
                start, end = t, t + delta
        links.append(Link(start, end, u, v))
    return LinkStream.from_links(links, labels)


def serialize(stream: LinkStream) -> str:
    """Render a stream in the durational text format; inverse of parse_links.

    Each line carries its label pair in sorted order, so the emitted content
    does not depend on the internal id assignment.
    """
    lines = []
    for ln in stream.links:
        a, b = stream.labels[ln.u], stream.labels[ln.v]
        if b < a:
            a, b = b, a
        lines.append(f"{_fmt_time(ln.b)} {_fmt_time(ln.e)} {a} {b}")
    return "\n".join(lines) + ("\n" if lines else "")


def _fmt_time(t: Time) -> str:
    return repr(t) if isinstance(t, float) else str(t)
