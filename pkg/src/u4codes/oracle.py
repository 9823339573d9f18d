"""Independent brute-force verification by exact linear algebra over GF(q).

A length-n word over R = GF(q)[u]/(u^4) flattens to a length-4n vector
over GF(q): position i contributes columns 4i .. 4i+3 holding the u^0 ..
u^3 coordinates (u-power-major within each position).  A code becomes an
F_q-subspace in reduced row echelon form, which is canonical, so two
generators of the same ideal produce identical bases.

Everything here is built directly on field arithmetic and flat vectors --
deliberately sharing no ring or CRT machinery with the construction
modules -- so that cardinality, shift-closure, orthogonality and
self-duality checks are genuinely independent evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatchError


@dataclass(frozen=True)
class FlatCode:
    """An F_q-subspace of GF(q)^(4n) in reduced row echelon form."""

    gf: object
    n: int
    lam_cs: tuple[int, int, int, int]
    basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _conv4(gf, a, b):
    fadd, fmul = gf.add, gf.mul
    return (
        fmul(a[0], b[0]),
        fadd(fmul(a[0], b[1]), fmul(a[1], b[0])),
        fadd(fadd(fmul(a[0], b[2]), fmul(a[1], b[1])), fmul(a[2], b[0])),
        fadd(fadd(fmul(a[0], b[3]), fmul(a[1], b[2])),
             fadd(fmul(a[2], b[1]), fmul(a[3], b[0]))),
    )


def flatten_ambient(a) -> tuple[int, ...]:
    """Flatten an ambient element to its length-4n coordinate vector."""
    out = []
    for c in a.coeffs:
        out.extend(c.cs)
    return tuple(out)


def _mul_u_flat(vec, n: int) -> tuple[int, ...]:
    out = list(vec)
    for i in range(n):
        base = 4 * i
        out[base + 3] = vec[base + 2]
        out[base + 2] = vec[base + 1]
        out[base + 1] = vec[base]
        out[base] = 0
    return tuple(out)


def _mul_x_flat(gf, vec, n: int, lam_cs) -> tuple[int, ...]:
    """The lam-twisted cyclic shift: (c_0..c_{n-1}) -> (lam*c_{n-1}, c_0, ..)."""
    wrapped = _conv4(gf, vec[4 * (n - 1):], lam_cs)
    return tuple(wrapped) + vec[:4 * (n - 1)]


def rref(gf, rows) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return (), ()
    ncols = len(work[0])
    fsub, fmul, finv = gf.sub, gf.mul, gf.inv
    pivots = []
    rank = 0
    for col in range(ncols):
        src = None
        for i in range(rank, len(work)):
            if work[i][col]:
                src = i
                break
        if src is None:
            continue
        work[rank], work[src] = work[src], work[rank]
        row = work[rank]
        c = row[col]
        if c != 1:
            ci = finv(c)
            row = [fmul(ci, x) for x in row]
            work[rank] = row
        for i, other in enumerate(work):
            if i != rank and other[col]:
                f = other[col]
                work[i] = [fsub(x, fmul(f, y)) for x, y in zip(other, row)]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    basis = tuple(tuple(r) for r in work[:rank])
    return basis, tuple(pivots)


def reduce_vector(gf, fc: FlatCode, vec) -> tuple[int, ...]:
    """Residue of vec after elimination against the echelon basis."""
    v = list(vec)
    fsub, fmul = gf.sub, gf.mul
    for row, pcol in zip(fc.basis, fc.pivots):
        f = v[pcol]
        if f:
            v = [fsub(x, fmul(f, y)) for x, y in zip(v, row)]
    return tuple(v)


def contains(fc: FlatCode, vec) -> bool:
    return not any(reduce_vector(fc.gf, fc, vec))


def from_rows(gf, n: int, lam_cs, rows) -> FlatCode:
    basis, pivots = rref(gf, rows)
    return FlatCode(gf=gf, n=n, lam_cs=tuple(lam_cs), basis=basis, pivots=pivots)


def span_ideal(g, check: bool = True) -> FlatCode:
    """The ideal generated by an ambient element, as a flat subspace.

    Spans the 4n words u^k * x^i * g.  With check=True (the default) the
    result is verified to be closed under multiplication by u and by x;
    failure would mean an arithmetic bug, never a property of the input.
    """
    gf, n = g.gf, g.n
    lam_cs = g.lam.cs
    rows = []
    vec = flatten_ambient(g)
    for _ in range(n):
        w = vec
        rows.append(w)
        for _ in range(3):
            w = _mul_u_flat(w, n)
            rows.append(w)
        vec = _mul_x_flat(gf, vec, n, lam_cs)
    fc = from_rows(gf, n, lam_cs, rows)
    if check:
        for row in fc.basis:
            if not contains(fc, _mul_u_flat(row, n)):
                raise AssertionError("span not closed under u-multiplication")
            if not contains(fc, _mul_x_flat(gf, row, n, lam_cs)):
                raise AssertionError("span not closed under the twisted shift")
    return fc


def check_cardinality(rec) -> bool:
    """Oracle rank equals the predicted size exponent."""
    return span_ideal(rec.generator).dim == rec.log_q_size


def check_constacyclic(fc: FlatCode) -> bool:
    """Closure of the subspace under the lam-twisted cyclic shift."""
    return all(contains(fc, _mul_x_flat(fc.gf, row, fc.n, fc.lam_cs))
               for row in fc.basis)


def _inner_product_zero(gf, n: int, a, b) -> bool:
    """Euclidean inner product over R of two flat words is zero."""
    fadd = gf.add
    acc = (0, 0, 0, 0)
    for i in range(n):
        base = 4 * i
        pa = a[base:base + 4]
        pb = b[base:base + 4]
        if pa == (0, 0, 0, 0) or pb == (0, 0, 0, 0):
            continue
        t = _conv4(gf, pa, pb)
        acc = (fadd(acc[0], t[0]), fadd(acc[1], t[1]),
               fadd(acc[2], t[2]), fadd(acc[3], t[3]))
    return acc == (0, 0, 0, 0)


def check_duality(c: FlatCode, dualc: FlatCode) -> bool:
    """dualc is exactly the Euclidean dual of c.

    All basis pairs must be orthogonal over R and the dimensions must be
    complementary (together those force equality, not mere containment).
    """
    if c.n != dualc.n or c.gf != dualc.gf:
        raise AmbientMismatchError("duality check across different lengths or fields")
    if c.dim + dualc.dim != 4 * c.n:
        return False
    return all(_inner_product_zero(c.gf, c.n, a, b)
               for a in c.basis for b in dualc.basis)


def dual_span(fc: FlatCode) -> FlatCode:
    """The Euclidean dual subspace, computed as a nullspace from scratch.

    For each basis word a, the condition sum_i a_i * b_i = 0 in R gives
    four F_q-linear constraints on b (one per u-coordinate); the dual is
    the common nullspace.  The defining unit of the dual ambient is the
    inverse of fc's.
    """
    gf, n = fc.gf, fc.n
    ncols = 4 * n
    constraints = []
    for row in fc.basis:
        for t in range(4):
            line = [0] * ncols
            for i in range(n):
                base = 4 * i
                for l in range(4):
                    k = t - l
                    if 0 <= k <= 3:
                        line[base + l] = row[base + k]
            constraints.append(line)
    cbasis, cpivots = rref(gf, constraints)
    pivot_set = set(cpivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    fneg = gf.neg
    null_rows = []
    for fc_col in free_cols:
        vec = [0] * ncols
        vec[fc_col] = 1
        for row, pcol in zip(cbasis, cpivots):
            if row[fc_col]:
                vec[pcol] = fneg(row[fc_col])
        null_rows.append(vec)
    lam_inv = _ring_inv_cs(gf, fc.lam_cs)
    return from_rows(gf, n, lam_inv, null_rows)


def _ring_inv_cs(gf, a):
    b0 = gf.inv(a[0])
    b1 = gf.neg(gf.mul(gf.mul(a[1], b0), b0))
    b2 = gf.neg(gf.mul(gf.add(gf.mul(a[1], b1), gf.mul(a[2], b0)), b0))
    b3 = gf.neg(gf.mul(
        gf.add(gf.add(gf.mul(a[1], b2), gf.mul(a[2], b1)), gf.mul(a[3], b0)), b0))
    return (b0, b1, b2, b3)


def check_self_dual(rec) -> bool:
    """The span of rec equals the span of its Euclidean dual.

    Only meaningful when the ambient unit is self-inverse (otherwise the
    dual is not even an ideal of the same ambient).
    """
    gf = rec.generator.gf
    lam_cs = rec.generator.lam.cs
    if _ring_inv_cs(gf, lam_cs) != lam_cs:
        raise AmbientMismatchError(
            "self-duality requires a self-inverse ambient unit")
    fc = span_ideal(rec.generator)
    return dual_span(fc).basis == fc.basis
