"""Constacyclic codes over R = GF(q)[u]/(u^4) of length n, via CRT data.

Every ideal of R[x]/(x^n - (delta + alpha*u^2)) is generated by a single
element sum_j u^(l_j) * e_j(x) for a unique exponent tuple (l_1, ..., l_r)
with 0 <= l_j <= 4, and contains q^(sum_j (4 - l_j) * d_j) codewords, so
there are exactly 5^r codes.  The dual of the code with exponents l_j is
generated by sum_j u^(4 - l_j) * e_j(x^(-1)) inside the inverse-unit
ambient.  For q = 2^m and delta = 1 the two ambients coincide and the
self-dual codes are exactly those with l_j = 2 on reciprocal-fixed indices
and complementary exponents on swapped pairs: 5^eps_pairs of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .chainring import AmbientElement, RingElement, ambient_reciprocal
from .decomposition import Decomposition
from .errors import InvalidIndexError, SelfDualUnsupportedError

# Powers of u as exponents run 0..4; u^4 = 0 kills the component.
_MAX_EXP = 4


@dataclass(frozen=True)
class CodeRecord:
    """One code: its exponent tuple, single generator, and size exponent."""

    index: tuple[int, ...]
    generator: AmbientElement
    log_q_size: int

    @property
    def ambient_lambda(self) -> RingElement:
        return self.generator.lam

    def size(self) -> int:
        return self.generator.gf.q ** self.log_q_size

    def to_json(self, self_dual: bool | None = None) -> dict:
        obj = {
            "index": list(self.index),
            "generator": self.generator.to_json(),
            "log_q_size": self.log_q_size,
            "lambda": self.ambient_lambda.to_json(),
        }
        if self_dual is not None:
            obj["self_dual"] = self_dual
        return obj


def validate_index(d: Decomposition, idx) -> tuple[int, ...]:
    idx = tuple(int(l) for l in idx)
    if len(idx) != d.r:
        raise InvalidIndexError(
            f"index has length {len(idx)}, expected r = {d.r}")
    if any(not 0 <= l <= _MAX_EXP for l in idx):
        raise InvalidIndexError(f"index entries must lie in 0..4: {idx}")
    return idx


def build_code(d: Decomposition, idx) -> CodeRecord:
    """The code generated by sum_j u^(l_j) * e_j(x)."""
    idx = validate_index(d, idx)
    gen = d.ambient_zero()
    for l, fd in zip(idx, d.factors):
        gen = gen + fd.e.scale(RingElement.u_pow(d.gf, l))
    log = sum((_MAX_EXP - l) * fd.degree for l, fd in zip(idx, d.factors))
    return CodeRecord(index=idx, generator=gen, log_q_size=log)


def index_count(d: Decomposition) -> int:
    return 5 ** d.r


def rank_to_index(d: Decomposition, rank: int) -> tuple[int, ...]:
    """The rank-th exponent tuple in lexicographic order (l_1 most significant)."""
    out = []
    for _ in range(d.r):
        out.append(rank % 5)
        rank //= 5
    return tuple(reversed(out))


def enumerate_codes(d: Decomposition, start: int = 0,
                    limit: int | None = None) -> Iterator[CodeRecord]:
    """Stream all 5^r codes in lexicographic index order.

    start / limit select a contiguous slice by lexicographic rank, so huge
    index spaces can be walked in pieces without materializing anything.
    """
    total = index_count(d)
    stop = total if limit is None else min(total, start + limit)
    for rank in range(start, stop):
        yield build_code(d, rank_to_index(d, rank))


def tau_map(a: AmbientElement) -> AmbientElement:
    """The substitution x -> x^(-1) into the inverse-unit ambient."""
    return ambient_reciprocal(a)


def dual_code(d: Decomposition, idx) -> CodeRecord:
    """The dual code, as an ideal of R[x]/(x^n - (delta + alpha*u^2)^(-1)).

    The generator is the reciprocal image of sum_j u^(4 - l_j) * e_j(x);
    the stored index gives the exponent attached to each idempotent of the
    dual ambient in its canonical order.
    """
    idx = validate_index(d, idx)
    comp = d.ambient_zero()
    for l, fd in zip(idx, d.factors):
        comp = comp + fd.e.scale(RingElement.u_pow(d.gf, _MAX_EXP - l))
    gen = ambient_reciprocal(comp)
    inv_tau = [0] * d.r
    for j, k in enumerate(d.tau):
        inv_tau[k] = j
    dual_idx = tuple(_MAX_EXP - idx[inv_tau[k]] for k in range(d.r))
    log = sum(l * fd.degree for l, fd in zip(idx, d.factors))
    return CodeRecord(index=dual_idx, generator=gen, log_q_size=log)


def self_dual_indices(d: Decomposition) -> Iterator[tuple[int, ...]]:
    """Exponent tuples of all self-dual codes (q = 2^m, delta = 1 only).

    Requires a canonically rearranged decomposition: l_j = 2 on the rho
    fixed indices, and the partner of each pair representative carries the
    complementary exponent 4 - l.
    """
    if d.gf.p != 2 or d.delta != 1:
        raise SelfDualUnsupportedError(
            "self-dual classification covers q = 2^m with delta = 1 only; "
            f"got q = {d.gf.q}, delta = {d.delta}")
    if not d.canonical:
        raise ValueError("apply canonical_rearrange to the decomposition first")
    rho, eps = d.rho, d.eps_pairs
    for rank in range(5 ** eps):
        mid = []
        v = rank
        for _ in range(eps):
            mid.append(v % 5)
            v //= 5
        mid.reverse()
        yield tuple([2] * rho + mid + [_MAX_EXP - l for l in mid])


def self_dual_codes(d: Decomposition) -> Iterator[CodeRecord]:
    """Stream the 5^eps_pairs self-dual codes of a rearranged decomposition."""
    for idx in self_dual_indices(d):
        yield build_code(d, idx)
