"""Sparse matrices and tensor operators over exact Scalars.

Tensor convention: the basis vector v_i ⊗ v_j of V ⊗ V (1-indexed) is
flattened to index (i-1)*N + j, and (X ⊗ Y)(v_a ⊗ v_b) = Xv_a ⊗ Yv_b.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .scalars import Scalar, ScalarRing, scalar_from_json, scalar_to_json, substitute


class SMatrix:
    """Sparse matrix with Scalar entries, stored row-wise; zero entries are
    never stored.  Immutable by convention."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: ScalarRing, nrows: int, ncols: int, rows=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, Scalar]] = rows if rows is not None else {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: ScalarRing, nrows: int, ncols: int | None = None) -> "SMatrix":
        return cls(ring, nrows, ncols if ncols is not None else nrows)

    @classmethod
    def identity(cls, ring: ScalarRing, n: int) -> "SMatrix":
        return cls(ring, n, n, {i: {i: ring.one} for i in range(n)})

    @classmethod
    def from_entries(
        cls, ring: ScalarRing, nrows: int, ncols: int, entries: Iterable[tuple[int, int, Scalar]]
    ) -> "SMatrix":
        rows: dict[int, dict[int, Scalar]] = {}
        for i, j, v in entries:
            if v.is_zero():
                continue
            row = rows.setdefault(i, {})
            nv = row[j] + v if j in row else v
            if nv.is_zero():
                del row[j]
            else:
                row[j] = nv
        return cls(ring, nrows, ncols, {i: r for i, r in rows.items() if r})

    def unit(self, i: int, j: int, coeff: Scalar | None = None) -> "SMatrix":
        """Matrix unit E_{ij} (1-indexed, matching the formulas)."""
        c = coeff if coeff is not None else self.ring.one
        return SMatrix.from_entries(self.ring, self.nrows, self.ncols, [(i - 1, j - 1, c)])

    # -- access --------------------------------------------------------------

    def get(self, i: int, j: int) -> Scalar:
        return self.rows.get(i, {}).get(j, self.ring.zero)

    def entries(self) -> list[tuple[int, int, Scalar]]:
        out = []
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                out.append((i, j, row[j]))
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"SMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "SMatrix") -> "SMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        rows: dict[int, dict[int, Scalar]] = {i: dict(r) for i, r in self.rows.items()}
        for i, orow in other.rows.items():
            row = rows.setdefault(i, {})
            for j, v in orow.items():
                nv = row[j] + v if j in row else v
                if nv.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = nv
            if not row:
                del rows[i]
        return SMatrix(self.ring, self.nrows, self.ncols, rows)

    def __neg__(self) -> "SMatrix":
        return SMatrix(
            self.ring,
            self.nrows,
            self.ncols,
            {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()},
        )

    def __sub__(self, other: "SMatrix") -> "SMatrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "SMatrix":
        if c.is_zero():
            return SMatrix.zero(self.ring, self.nrows, self.ncols)
        return SMatrix(
            self.ring,
            self.nrows,
            self.ncols,
            {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()},
        )

    def __matmul__(self, other: "SMatrix") -> "SMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        rows: dict[int, dict[int, Scalar]] = {}
        orows = other.rows
        for i, arow in self.rows.items():
            acc: dict[int, Scalar] = {}
            for k, a in arow.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    p = a * b
                    if j in acc:
                        nv = acc[j] + p
                        if nv.is_zero():
                            del acc[j]
                        else:
                            acc[j] = nv
                    elif not p.is_zero():
                        acc[j] = p
            if acc:
                rows[i] = acc
        return SMatrix(self.ring, self.nrows, other.ncols, rows)

    def pow(self, n: int) -> "SMatrix":
        out = SMatrix.identity(self.ring, self.nrows)
        for _ in range(n):
            out = out @ self
        return out

    def commutator(self, other: "SMatrix") -> "SMatrix":
        return self @ other - other @ self

    # -- structure -----------------------------------------------------------

    def map_entries(self, fn: Callable[[Scalar], Scalar]) -> "SMatrix":
        rows: dict[int, dict[int, Scalar]] = {}
        for i, r in self.rows.items():
            nr = {}
            for j, v in r.items():
                w = fn(v)
                if not w.is_zero():
                    nr[j] = w
            if nr:
                rows[i] = nr
        return SMatrix(self.ring, self.nrows, self.ncols, rows)

    def substituted(self, bindings: Mapping[str, Scalar], ring: ScalarRing | None = None) -> "SMatrix":
        target = ring if ring is not None else self.ring
        rows: dict[int, dict[int, Scalar]] = {}
        for i, r in self.rows.items():
            nr = {}
            for j, v in r.items():
                w = substitute(v, bindings, ring=target)
                if not w.is_zero():
                    nr[j] = w
            if nr:
                rows[i] = nr
        return SMatrix(target, self.nrows, self.ncols, rows)

    def exchanged_params(self) -> "SMatrix":
        """Entrywise r <-> s exchange."""
        return self.map_entries(lambda v: v.exchange_vars("r", "s"))

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def diagonal_sqrt(self) -> "SMatrix":
        """Entrywise monomial square root of an invertible diagonal matrix."""
        if not self.is_diagonal():
            raise ValueError("matrix is not diagonal")
        rows = {}
        for i in range(self.nrows):
            v = self.get(i, i)
            if v.is_zero():
                raise ValueError("diagonal matrix is not invertible")
            rows[i] = {i: v.sqrt_monomial()}
        return SMatrix(self.ring, self.nrows, self.ncols, rows)

    def diagonal_inv(self) -> "SMatrix":
        if not self.is_diagonal():
            raise ValueError("matrix is not diagonal")
        rows = {}
        for i in range(self.nrows):
            v = self.get(i, i)
            if v.is_zero():
                raise ValueError("diagonal matrix is not invertible")
            rows[i] = {i: v.inv()}
        return SMatrix(self.ring, self.nrows, self.ncols, rows)


# ---------------------------------------------------------------------------
# tensor structure
# ---------------------------------------------------------------------------


def kron(a: SMatrix, b: SMatrix) -> SMatrix:
    """Kronecker product with (i-1)N+j flattening of v_i ⊗ v_j."""
    rows: dict[int, dict[int, Scalar]] = {}
    for ia, ra in a.rows.items():
        for ib, rb in b.rows.items():
            i = ia * b.nrows + ib
            out: dict[int, Scalar] = {}
            for ja, va in ra.items():
                for jb, vb in rb.items():
                    out[ja * b.ncols + jb] = va * vb
            if out:
                rows[i] = out
    return SMatrix(a.ring, a.nrows * b.nrows, a.ncols * b.ncols, rows)


def flip_map(ring: ScalarRing, n: int) -> SMatrix:
    """The flip v_i ⊗ v_j ↦ v_j ⊗ v_i on V ⊗ V."""
    rows = {}
    for i in range(n):
        for j in range(n):
            rows[j * n + i] = rows.get(j * n + i, {})
            rows[j * n + i][i * n + j] = ring.one
    return SMatrix(ring, n * n, n * n, rows)


def act_12(a: SMatrix, n: int) -> SMatrix:
    """A ⊗ Id on V⊗V⊗V for A acting on the first two factors."""
    return kron(a, SMatrix.identity(a.ring, n))


def act_23(a: SMatrix, n: int) -> SMatrix:
    """Id ⊗ A on V⊗V⊗V for A acting on the last two factors."""
    return kron(SMatrix.identity(a.ring, n), a)


def act_13(a: SMatrix, n: int) -> SMatrix:
    """A on factors 1 and 3: conjugate of act_12 by the flip on factors 2,3."""
    mid_flip = kron(SMatrix.identity(a.ring, n), flip_map(a.ring, n))
    return mid_flip @ act_12(a, n) @ mid_flip


# ---------------------------------------------------------------------------
# vectors (columns of V ⊗ V etc.)
# ---------------------------------------------------------------------------


def mat_vec(a: SMatrix, vec: dict[int, Scalar]) -> dict[int, Scalar]:
    out: dict[int, Scalar] = {}
    for i, row in a.rows.items():
        acc = None
        for j, v in row.items():
            if j in vec:
                p = v * vec[j]
                acc = p if acc is None else acc + p
        if acc is not None and not acc.is_zero():
            out[i] = acc
    return out


def vec_scale(vec: dict[int, Scalar], c: Scalar) -> dict[int, Scalar]:
    out = {}
    for i, v in vec.items():
        w = v * c
        if not w.is_zero():
            out[i] = w
    return out


def vec_eq(a: dict[int, Scalar], b: dict[int, Scalar]) -> bool:
    return a == b


# ---------------------------------------------------------------------------
# JSON export (exact, language-neutral)
# ---------------------------------------------------------------------------


def matrix_to_json(a: SMatrix) -> dict:
    entries = []
    for i, j, v in a.entries():
        obj = scalar_to_json(v)
        entries.append({"row": i, "col": j, "num": obj["num"], "den": obj["den"]})
    return {
        "n_rows": a.nrows,
        "n_cols": a.ncols,
        "vars": list(a.ring.names),
        "entries": entries,
    }


def matrix_from_json(ring: ScalarRing, obj: dict) -> SMatrix:
    if list(ring.names) != list(obj["vars"]):
        raise ValueError(f"ring variables {ring.names} do not match {obj['vars']}")
    entries = [
        (
            t["row"],
            t["col"],
            scalar_from_json(ring, {"num": t["num"], "den": t["den"]}),
        )
        for t in obj["entries"]
    ]
    return SMatrix.from_entries(ring, obj["n_rows"], obj["n_cols"], entries)
