"""Bottom of the length spectrum of the three-cusp sphere with
self-intersection counts, plus the plain-text cache format.

Every conjugacy class of the rank-2 parabolic holonomy group yields an
integer trace and a geodesic length 2*acosh(|tr|/2); classes up to a length
cap get their self-intersection number from both counting methods (primitive
words) or from the tracer alone (proper powers).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .halfplane import Isometry
from .selfint import self_intersection_count, tracer_count
from .words import enumerate_classes, is_primitive, word_key, word_trace

THREADS_ENV = "HYPCROSS_THREADS"


class MethodDisagreement(RuntimeError):
    """The double-coset and tracer counts differ for the same class."""


@dataclass(frozen=True)
class SurfaceGroup:
    """Holonomy of the three-cusp sphere: two parabolic translations whose
    mixed product class is the third cusp."""

    gen_a: Isometry
    gen_b: Isometry
    cusp_classes: tuple[str, str, str]


def thrice_punctured_sphere() -> SurfaceGroup:
    return SurfaceGroup(
        Isometry(1.0, 2.0, 0.0, 1.0),
        Isometry(1.0, 0.0, 2.0, 1.0),
        ("a", "b", "aB"),
    )


@dataclass(frozen=True)
class SpectrumEntry:
    word: str
    trace: float
    length: float
    self_intersections: int
    count_method: str  # doublecoset | tracer | both

    def sort_key(self):
        return (self.length, word_key(self.word))


def _count_class(w: str, cutoff: int | None, tol: float) -> tuple[int, str]:
    if is_primitive(w):
        dc = self_intersection_count(w, cutoff)
        tr = tracer_count(w, tol)
        if dc != tr:
            raise MethodDisagreement(f"{w!r}: doublecoset {dc} != tracer {tr}")
        return dc, "both"
    return tracer_count(w, tol), "tracer"


def _default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def spectrum(
    max_len: int,
    length_cap: float,
    k_min: int,
    cutoff: int | None = None,
    tol: float = 1e-6,
    cache_path: str | None = None,
    threads: int | None = None,
) -> list[SpectrumEntry]:
    """All hyperbolic classes of word length <= max_len and geodesic length
    <= length_cap, sorted by (length, word), each with its self-intersection
    count.  k_min is the caller's threshold of interest (see min_witness);
    entries themselves are not filtered by it."""
    if max_len > 12:
        raise ValueError(f"max_len must be <= 12, got {max_len}")
    if threads is None:
        threads = _default_threads()

    cached = _read_cache(cache_path, max_len, cutoff, tol) if cache_path else None
    if cached is not None:
        return cached

    entries: list[SpectrumEntry] = []
    words = []
    for w in enumerate_classes(max_len):
        tr = word_trace(w)
        length = 2.0 * math.acosh(abs(tr) / 2.0)
        if length <= length_cap:
            words.append((w, tr, length))

    def build(item) -> SpectrumEntry:
        w, tr, length = item
        count, method = _count_class(w, cutoff, tol)
        return SpectrumEntry(w, float(tr), length, count, method)

    if threads > 1 and len(words) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(build, words))
    else:
        entries = [build(item) for item in words]

    entries.sort(key=SpectrumEntry.sort_key)
    if cache_path:
        _write_cache(cache_path, max_len, cutoff, tol, entries)
    return entries


def min_witness(entries: list[SpectrumEntry], k_min: int) -> SpectrumEntry | None:
    """Shortest entry with at least k_min self-intersections, if any."""
    for e in entries:
        if e.self_intersections >= k_min:
            return e
    return None


# ------------------------------------------------------------------ cache

def _cache_key(max_len: int, cutoff: int | None, tol: float) -> str:
    return f"# max_len={max_len} cutoff={cutoff if cutoff is not None else 'default'} tol={tol!r}"


def _write_cache(path: str, max_len: int, cutoff: int | None, tol: float, entries: list[SpectrumEntry]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(_cache_key(max_len, cutoff, tol) + "\n")
        for e in entries:
            fh.write(f"{e.word}\t{e.trace!r}\t{e.length!r}\t{e.self_intersections}\t{e.count_method}\n")


def _read_cache(path: str, max_len: int, cutoff: int | None, tol: float) -> list[SpectrumEntry] | None:
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().rstrip("\n")
        if header != _cache_key(max_len, cutoff, tol):
            return None
        out = []
        for line in fh:
            word, trace, length, count, method = line.rstrip("\n").split("\t")
            out.append(SpectrumEntry(word, float(trace), float(length), int(count), method))
    return out
