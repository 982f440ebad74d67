"""m-cores and m-quotients on the abacus, and the lattice parametrisation of cores.

A beta-set of length ``L`` for a diagram with rows ``r_0 >= r_1 >= ...`` is
``{r_j + L - 1 - j}``. Bead positions are split into ``m`` runners by their
residue mod ``m``. ``L`` is always normalised to a multiple of ``m`` so the
runner labels (and hence the order of the quotient components) are fixed.

Residues of boxes use the content ``i - j`` of box ``(i, j)``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .partitions import EMPTY, YoungDiagram, enumerate_diagrams, hook_residue_count

CoreVector = tuple[int, ...]


def beta_set(Y: YoungDiagram, length: int | None = None) -> tuple[int, ...]:
    """Strictly decreasing beta-numbers of ``Y`` padded to ``length`` entries."""
    k = len(Y.rows)
    if length is None:
        length = k
    if length < k:
        raise ValueError(f"beta-set length {length} shorter than {k} rows")
    return tuple(Y.row(j) + length - 1 - j for j in range(length))


def from_beta_set(entries: Sequence[int]) -> YoungDiagram:
    b = sorted(entries, reverse=True)
    if any(x < 0 for x in b) or len(set(b)) != len(b):
        raise ValueError(f"not a beta-set: {entries}")
    L = len(b)
    return YoungDiagram(tuple(x - (L - 1 - j) for j, x in enumerate(b) if x - (L - 1 - j) > 0))


def _abacus_length(Y: YoungDiagram, m: int) -> int:
    k = len(Y.rows)
    return -(-k // m) * m


def _runners(Y: YoungDiagram, m: int, length: int | None = None) -> list[list[int]]:
    if length is None:
        length = _abacus_length(Y, m)
    if length % m:
        raise ValueError("abacus length must be a multiple of m")
    runners: list[list[int]] = [[] for _ in range(m)]
    for b in beta_set(Y, length):
        runners[b % m].append(b // m)
    return runners


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError("m must be at least 2")


def m_core(Y: YoungDiagram, m: int, length: int | None = None) -> YoungDiagram:
    """Slide every bead as far up its runner as it goes."""
    _check_m(m)
    runners = _runners(Y, m, length)
    beads = [m * pos + k for k, runner in enumerate(runners) for pos in range(len(runner))]
    return from_beta_set(beads)


def m_quotient(Y: YoungDiagram, m: int, length: int | None = None) -> tuple[YoungDiagram, ...]:
    """Diagram read off each runner, runner ``k`` holding beta-numbers ``= k mod m``."""
    _check_m(m)
    return tuple(from_beta_set(r) if r else EMPTY for r in _runners(Y, m, length))


def is_core(Y: YoungDiagram, m: int) -> bool:
    return hook_residue_count(Y, m) == 0


def from_core_quotient(core: YoungDiagram, quot: Sequence[YoungDiagram], m: int) -> YoungDiagram:
    """Inverse of ``Y -> (m_core(Y), m_quotient(Y))``."""
    _check_m(m)
    if len(quot) != m:
        raise ValueError(f"quotient must have {m} components, got {len(quot)}")
    if not is_core(core, m):
        raise ValueError(f"{core!r} is not an {m}-core")
    length = _abacus_length(core, m)
    counts = [len(r) for r in _runners(core, m, length)]
    # each extra block of m beads adds one bead to every runner
    extra = max([0] + [len(q.rows) - c for q, c in zip(quot, counts)])
    counts = [c + extra for c in counts]
    beads = []
    for k, (q, c) in enumerate(zip(quot, counts)):
        beads.extend(m * pos + k for pos in beta_set(q, c))
    return from_beta_set(beads)


def residue_counts(Y: YoungDiagram, m: int) -> list[int]:
    """``w[k]`` = number of boxes of content ``= k mod m``."""
    w = [0] * m
    for i, j in Y.boxes():
        w[(i - j) % m] += 1
    return w


def psi(Y: YoungDiagram, m: int) -> CoreVector:
    """Difference vector ``w[k+1] - w[k]`` (indices mod ``m``) of an ``m``-core."""
    _check_m(m)
    if not is_core(Y, m):
        raise ValueError(f"{Y!r} is not an {m}-core")
    w = residue_counts(Y, m)
    return tuple(w[(k + 1) % m] - w[k] for k in range(m))


def psi_inverse(lam: Sequence[int], m: int) -> YoungDiagram:
    """The ``m``-core with :func:`psi` value ``lam``.

    On an abacus whose length is a multiple of ``m``, runner ``k`` of the
    core carries ``K - lam[k]`` beads for a common ``K``.
    """
    _check_m(m)
    lam = tuple(lam)
    if len(lam) != m:
        raise ValueError(f"expected {m} entries, got {len(lam)}")
    if sum(lam) != 0:
        raise ValueError(f"entries must sum to zero: {lam}")
    K = max(lam)
    beads = [m * pos + k for k in range(m) for pos in range(K - lam[k])]
    return from_beta_set(beads)


def v0(lam: Sequence[int]) -> int:
    """Half the squared norm. Integral on the zero-sum lattice."""
    s = sum(x * x for x in lam)
    if s % 2:
        raise ValueError(f"half-integral value for {tuple(lam)}")
    return s // 2


def n_of_lambda(lam: Sequence[int], m: int) -> int:
    if len(lam) != m or sum(lam) != 0:
        raise ValueError(f"{tuple(lam)} is not a zero-sum vector of length {m}")
    n = m * v0(lam) + sum((m - 1 - k) * lam[k] for k in range(m - 1))
    if n < 0:
        raise ArithmeticError(f"negative n({tuple(lam)}) = {n}")
    return n


def enumerate_cores(m: int, max_size: int) -> Iterator[YoungDiagram]:
    """All ``m``-cores of size at most ``max_size``, by increasing size."""
    _check_m(m)
    for n in range(max_size + 1):
        for Y in enumerate_diagrams(n):
            if is_core(Y, m):
                yield Y


def lattice_points(m: int, max_n: int) -> list[CoreVector]:
    """Zero-sum vectors with ``n_of_lambda <= max_n``, via the cores they index."""
    return [psi(Y, m) for Y in enumerate_cores(m, max_n)]
