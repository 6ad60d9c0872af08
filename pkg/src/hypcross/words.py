"""Reduced words over {a, A, b, B} (A = a^-1, B = b^-1) and conjugacy classes
of the rank-2 free group realized as the holonomy of the three-cusp sphere.

Words are plain strings.  The canonical representative of a conjugacy class
(with inverses identified) is the least word, in the order a < b < A < B,
among all cyclic rotations of the word and of its inverse.
"""

from __future__ import annotations

LETTERS = "abAB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
MIRROR = {"a": "b", "b": "a", "A": "B", "B": "A"}
_ORD = {"a": 0, "b": 1, "A": 2, "B": 3}

# integer generator matrices (a, b, c, d); parabolic translations pairing the
# sides of the standard fundamental domain of the three-cusp sphere
GEN_MAT = {
    "a": (1, 2, 0, 1),
    "A": (1, -2, 0, 1),
    "b": (1, 0, 2, 1),
    "B": (1, 0, -2, 1),
}


def word_key(w: str) -> tuple:
    return (len(w), tuple(_ORD[ch] for ch in w))


def inverse_word(w: str) -> str:
    return "".join(INVERSE[ch] for ch in reversed(w))


def mirror_word(w: str) -> str:
    return "".join(MIRROR[ch] for ch in w)


def free_reduce(w: str) -> str:
    out: list[str] = []
    for ch in w:
        if out and out[-1] == INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def is_reduced(w: str) -> bool:
    return all(w[i + 1] != INVERSE[w[i]] for i in range(len(w) - 1))


def is_cyclically_reduced(w: str) -> bool:
    return bool(w) and is_reduced(w) and w[0] != INVERSE[w[-1]]


def cyclic_reduce(w: str) -> str:
    w = free_reduce(w)
    while len(w) >= 2 and w[0] == INVERSE[w[-1]]:
        w = w[1:-1]
    return w


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def canonical_class(w: str) -> str:
    """Conjugacy-class representative: least rotation of the cyclic reduction
    of w or of its inverse."""
    w = cyclic_reduce(w)
    if not w:
        return ""
    cands = rotations(w) + rotations(inverse_word(w))
    return min(cands, key=word_key)


def is_primitive(w: str) -> bool:
    """True when the cyclically reduced word is not a literal proper power."""
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w == w[:d] * (n // d):
            return d == n
    return True


def primitive_root(w: str) -> tuple[str, int]:
    """Shortest v and exponent k with w = v^k (k = 1 for primitive words)."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w == w[:d] * (n // d):
            return w[:d], n // d
    raise AssertionError("unreachable")


def word_matrix(w: str) -> tuple[int, int, int, int]:
    """Exact integer matrix of a word in the parabolic generators."""
    a, b, c, d = 1, 0, 0, 1
    for ch in w:
        p, q, r, s = GEN_MAT[ch]
        a, b, c, d = a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s
    return a, b, c, d


def word_trace(w: str) -> int:
    m = word_matrix(w)
    return m[0] + m[3]


def enumerate_classes(max_len: int) -> list[str]:
    """All canonical conjugacy-class representatives of cyclically reduced
    words of length <= max_len, excluding the parabolic (cusp-power) classes,
    ordered by (length, word).  Every surviving class carries a closed
    geodesic; on this surface |trace| is an integer >= 6 for all of them."""
    if not 1 <= max_len <= 14:
        raise ValueError(f"max_len must be in [1, 14], got {max_len}")
    found: list[str] = []
    stack = [ch for ch in LETTERS]
    while stack:
        w = stack.pop()
        if len(w) < max_len:
            stack.extend(w + ch for ch in LETTERS if ch != INVERSE[w[-1]])
        if w[0] == INVERSE[w[-1]] and len(w) > 1:
            continue
        if canonical_class(w) != w:
            continue
        if abs(word_trace(w)) <= 2:
            continue
        found.append(w)
    found.sort(key=word_key)
    return found
