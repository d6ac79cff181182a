"""ℤ₂-graded square matrices over the scalar field.

Entries live in a sparse sympy ``DomainMatrix`` over ``ctx.domain``; the
parity vector grades the basis.  The operator parity is inferred from where
the nonzero entries sit: 0 (even), 1 (odd) or None (mixed).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from itertools import combinations

from sympy.polys.matrices import DomainMatrix

from qjord.core.errors import ContextMismatch
from qjord.core.scalars import Scalar, ScalarContext, ScalarLike

Parity = tuple[int, ...]
Index = tuple[int, int]


def _infer_degree(dok: Mapping[Index, Scalar], parity: Parity) -> int | None:
    seen = {parity[i] ^ parity[j] for (i, j) in dok}
    if not seen:
        return 0
    if len(seen) == 1:
        return seen.pop()
    return None


class GradedMatrix:
    """Immutable square matrix with a graded basis."""

    __slots__ = ("ctx", "data", "parity", "degree")

    def __init__(self, ctx: ScalarContext, data: DomainMatrix, parity: Sequence[int]):
        parity = tuple(int(p) & 1 for p in parity)
        if data.shape != (len(parity), len(parity)):
            raise ValueError(f"shape {data.shape} does not match parity of length {len(parity)}")
        if data.domain != ctx.domain:
            raise ContextMismatch("matrix domain differs from the scalar context")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "degree", _infer_degree(data.to_dok(), parity))

    def __setattr__(self, name, value):
        raise AttributeError("GradedMatrix is immutable")

    # ── Construction ──

    @classmethod
    def from_entries(
        cls, ctx: ScalarContext, entries: Mapping[Index, ScalarLike], parity: Sequence[int],
    ) -> GradedMatrix:
        n = len(parity)
        dok = {}
        for (i, j), value in entries.items():
            x = ctx.const(value)
            if x:
                dok[(i, j)] = x
        return cls(ctx, DomainMatrix.from_dok(dok, (n, n), ctx.domain), parity)

    @classmethod
    def from_rows(
        cls, ctx: ScalarContext, rows: Sequence[Sequence[ScalarLike]], parity: Sequence[int],
    ) -> GradedMatrix:
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls.from_entries(ctx, entries, parity)

    @classmethod
    def identity(cls, ctx: ScalarContext, parity: Sequence[int]) -> GradedMatrix:
        return cls(ctx, DomainMatrix.eye(len(parity), ctx.domain), parity)

    @classmethod
    def zeros(cls, ctx: ScalarContext, parity: Sequence[int]) -> GradedMatrix:
        n = len(parity)
        return cls(ctx, DomainMatrix.zeros((n, n), ctx.domain), parity)

    @classmethod
    def diagonal(
        cls, ctx: ScalarContext, values: Sequence[ScalarLike], parity: Sequence[int],
    ) -> GradedMatrix:
        return cls.from_entries(ctx, {(i, i): v for i, v in enumerate(values)}, parity)

    @classmethod
    def unit(
        cls, ctx: ScalarContext, parity: Sequence[int], i: int, j: int, value: ScalarLike = 1,
    ) -> GradedMatrix:
        """The matrix unit E_ij (0-based) scaled by value."""
        return cls.from_entries(ctx, {(i, j): value}, parity)

    # ── Inspection ──

    @property
    def dim(self) -> int:
        return len(self.parity)

    def items(self) -> Iterator[tuple[Index, Scalar]]:
        """Nonzero entries in row-major order."""
        return iter(sorted(self.data.to_dok().items()))

    def entry(self, i: int, j: int) -> Scalar:
        return self.data.rep.getitem(i, j)

    def rows(self) -> list[list[Scalar]]:
        zero = self.ctx.zero
        out = [[zero] * self.dim for _ in range(self.dim)]
        for (i, j), v in self.items():
            out[i][j] = v
        return out

    @property
    def is_zero(self) -> bool:
        return self.data.is_zero_matrix

    @property
    def is_identity(self) -> bool:
        return (self - GradedMatrix.identity(self.ctx, self.parity)).is_zero

    @property
    def is_homogeneous(self) -> bool:
        return self.degree is not None

    def parts(self) -> tuple[GradedMatrix, GradedMatrix]:
        """(even part, odd part)."""
        even, odd = {}, {}
        for (i, j), v in self.data.to_dok().items():
            (odd if self.parity[i] ^ self.parity[j] else even)[(i, j)] = v
        return _from_dok(self.ctx, even, self.parity), _from_dok(self.ctx, odd, self.parity)

    def homogeneous_parts(self) -> list[tuple[int, GradedMatrix]]:
        """Nonzero homogeneous components tagged with their parity."""
        if self.degree is not None:
            return [(self.degree, self)]
        even, odd = self.parts()
        return [(0, even), (1, odd)]

    def map_entries(self, fn: Callable[[Scalar], Scalar]) -> GradedMatrix:
        """Apply a scalar function to every nonzero entry (zeros stay zero)."""
        dok = {}
        for key, v in self.data.to_dok().items():
            x = fn(v)
            if x:
                dok[key] = x
        return _from_dok(self.ctx, dok, self.parity)

    def _check(self, other: GradedMatrix) -> None:
        if not isinstance(other, GradedMatrix):
            raise TypeError(f"expected GradedMatrix, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices from different scalar contexts")
        if other.parity != self.parity:
            raise ValueError(f"basis parity mismatch: {self.parity} vs {other.parity}")

    # ── Arithmetic ──

    def __add__(self, other: GradedMatrix) -> GradedMatrix:
        self._check(other)
        return GradedMatrix(self.ctx, self.data.add(other.data), self.parity)

    def __sub__(self, other: GradedMatrix) -> GradedMatrix:
        self._check(other)
        return GradedMatrix(self.ctx, self.data.sub(other.data), self.parity)

    def __neg__(self) -> GradedMatrix:
        return GradedMatrix(self.ctx, self.data.neg(), self.parity)

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        self._check(other)
        return GradedMatrix(self.ctx, self.data.matmul(other.data), self.parity)

    def scale(self, c: ScalarLike) -> GradedMatrix:
        x = self.ctx.const(c)
        if not x:
            return GradedMatrix.zeros(self.ctx, self.parity)
        return GradedMatrix(self.ctx, self.data.mul(x), self.parity)

    def __mul__(self, c: ScalarLike) -> GradedMatrix:
        if isinstance(c, GradedMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GradedMatrix:
        if n < 0:
            return self.inverse() ** (-n)
        result = GradedMatrix.identity(self.ctx, self.parity)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def plus_scalar(self, c: ScalarLike) -> GradedMatrix:
        """self + c·I."""
        return self + GradedMatrix.identity(self.ctx, self.parity).scale(c)

    def nilpotency_index(self) -> int | None:
        """Smallest k with self^k = 0, or None when self^dim ≠ 0."""
        power = self
        for k in range(1, self.dim + 1):
            if power.is_zero:
                return k
            power = power @ self
        return None

    def inverse(self) -> GradedMatrix:
        """Exact inverse: Neumann series for unipotent matrices, elimination otherwise."""
        n = self - GradedMatrix.identity(self.ctx, self.parity)
        if n.nilpotency_index() is not None:
            result = GradedMatrix.identity(self.ctx, self.parity)
            term = result
            for _ in range(self.dim):
                term = -(term @ n)
                if term.is_zero:
                    break
                result = result + term
            return result
        return GradedMatrix(self.ctx, self.data.inv(), self.parity)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.parity == other.parity
            and self.data.to_dok() == other.data.to_dok()
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GradedMatrix(dim={self.dim}, degree={self.degree}, nnz={self.data.nnz()})"


# ── Graded tensor algebra ─────────────────────────────────────


def _from_dok(ctx: ScalarContext, dok: dict, parity: Parity) -> GradedMatrix:
    n = len(parity)
    return GradedMatrix(ctx, DomainMatrix.from_dok(dok, (n, n), ctx.domain), parity)


def kron_parity(pa: Parity, pb: Parity) -> Parity:
    """Parity vector of V⊗W, first-factor-major."""
    return tuple(x ^ y for x in pa for y in pb)


def graded_kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """(A ⊗̂ B)_{(i,k),(j,l)} = (−1)^{|B|·p(j)} A_ij B_kl, first factor major.

    A mixed B is split into its homogeneous parts first.
    """
    if a.ctx != b.ctx:
        raise ContextMismatch("graded_kron across contexts")
    parity = kron_parity(a.parity, b.parity)
    m = b.dim
    dok: dict[Index, Scalar] = {}
    a_items = list(a.data.to_dok().items())
    for deg, part in b.homogeneous_parts():
        b_items = list(part.data.to_dok().items())
        for (i, j), x in a_items:
            negate = deg and a.parity[j]
            for (k, l), y in b_items:
                key = (i * m + k, j * m + l)
                term = -(x * y) if negate else x * y
                if key in dok:
                    term = dok[key] + term
                dok[key] = term
    return _from_dok(a.ctx, {k: v for k, v in dok.items() if v}, parity)


def plain_kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Kronecker product without Koszul signs (block placement of B into A's pattern)."""
    if a.ctx != b.ctx:
        raise ContextMismatch("plain_kron across contexts")
    m = b.dim
    dok = {}
    for (i, j), x in a.data.to_dok().items():
        for (k, l), y in b.data.to_dok().items():
            dok[(i * m + k, j * m + l)] = x * y
    return _from_dok(a.ctx, dok, kron_parity(a.parity, b.parity))


def block_matrix(
    ctx: ScalarContext,
    blocks: Mapping[Index, GradedMatrix],
    outer: int,
    inner_parity: Parity,
    outer_parity: Parity | None = None,
) -> GradedMatrix:
    """Assemble an (outer × outer) grid of operator blocks on the inner space.

    Block (a, b) lands on rows a·m.., cols b·m.. without any sign; the basis
    parity is that of (outer space) ⊗ (inner space).
    """
    m = len(inner_parity)
    outer_parity = outer_parity or (0,) * outer
    dok = {}
    for (a, b), block in blocks.items():
        for (k, l), y in block.data.to_dok().items():
            dok[(a * m + k, b * m + l)] = y
    return _from_dok(ctx, dok, kron_parity(tuple(outer_parity), tuple(inner_parity)))


def super_bracket(a: GradedMatrix, b: GradedMatrix, anti: bool = False) -> GradedMatrix:
    """[A, B} = AB − (−1)^{|A||B|} BA; ``anti`` forces AB + BA."""
    if anti:
        return a @ b + b @ a
    total = GradedMatrix.zeros(a.ctx, a.parity)
    for da, pa in a.homogeneous_parts():
        for db, pb in b.homogeneous_parts():
            if da and db:
                total = total + (pa @ pb + pb @ pa)
            else:
                total = total + (pa @ pb - pb @ pa)
    return total


# ── Leg permutations ──────────────────────────────────────────


def _digits(index: int, dims: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return out[::-1]


def _flatten(digits: Sequence[int], dims: Sequence[int]) -> int:
    index = 0
    for x, d in zip(digits, dims):
        index = index * d + x
    return index


def relabel_legs(
    op: GradedMatrix, leg_parities: Sequence[Parity], order: Sequence[int],
) -> GradedMatrix:
    """Re-express an operator on V_{order[0]} ⊗ V_{order[1]} ⊗ … on V_0 ⊗ V_1 ⊗ ….

    ``leg_parities`` lists the parity vectors of V_0, V_1, … in natural order;
    the operator's current tensor order is given by ``order``.  Reordering a
    basis tensor picks up (−1)^{p p'} for every pair of legs that cross.
    """
    n = len(order)
    current_dims = [len(leg_parities[leg]) for leg in order]
    natural_dims = [len(p) for p in leg_parities]
    crossings = [(k, l) for k, l in combinations(range(n), 2) if order[k] > order[l]]
    cache: dict[int, tuple[int, int]] = {}

    def move(index: int) -> tuple[int, int]:
        hit = cache.get(index)
        if hit is not None:
            return hit
        digits = _digits(index, current_dims)
        natural = [0] * n
        for k, leg in enumerate(order):
            natural[leg] = digits[k]
        sign = 1
        for k, l in crossings:
            if leg_parities[order[k]][digits[k]] and leg_parities[order[l]][digits[l]]:
                sign = -sign
        cache[index] = (_flatten(natural, natural_dims), sign)
        return cache[index]

    dok = {}
    for (r, c), v in op.data.to_dok().items():
        r2, sr = move(r)
        c2, sc = move(c)
        dok[(r2, c2)] = v if sr * sc == 1 else -v
    parity: Parity = tuple(leg_parities[0])
    for p in leg_parities[1:]:
        parity = kron_parity(parity, tuple(p))
    return _from_dok(op.ctx, dok, parity)


def embed_legs(
    op: GradedMatrix, leg_parities: Sequence[Parity], legs: Sequence[int],
) -> GradedMatrix:
    """Place an operator acting on the listed legs (in that order) into the full product.

    Remaining legs carry the identity; used for R₁₂, R₁₃, R₂₃ and L₁₃.
    """
    ctx = op.ctx
    rest = [k for k in range(len(leg_parities)) if k not in legs]
    full = op
    for leg in rest:
        full = graded_kron(full, GradedMatrix.identity(ctx, leg_parities[leg]))
    return relabel_legs(full, leg_parities, list(legs) + rest)


def graded_flip(pv: Parity, pw: Parity, ctx: ScalarContext) -> GradedMatrix:
    """P̂ on V⊗V (requires pv == pw): v⊗w ↦ (−1)^{|v||w|} w⊗v."""
    if tuple(pv) != tuple(pw):
        raise ValueError("graded_flip as a square matrix needs identical factors")
    m = len(pw)
    dok = {}
    for i in range(len(pv)):
        for k in range(m):
            sign = -1 if pv[i] and pw[k] else 1
            dok[(k * len(pv) + i, i * m + k)] = ctx.const(sign)
    return _from_dok(ctx, dok, kron_parity(tuple(pv), tuple(pw)))


def ordered_product(matrices: Iterable[GradedMatrix]) -> GradedMatrix:
    """Ordered product of a sequence (left to right)."""
    it = iter(matrices)
    result = next(it)
    for m in it:
        result = result @ m
    return result
