"""Z^r as a module over a presented group, and its maximal submodules.

A maximal submodule of Z^r (generators acting by unimodular matrices) has
prime power index p^c and contains pZ^r, so the classification lives in
F_p^r: submodules of index p^c correspond to invariant subspaces of
codimension c, and such a submodule is maximal exactly when the induced
action on the c-dimensional quotient space is simple.  Submodules carry
the Hermite normal form basis of their preimage lattice, which makes
equality, ordering and deduplication exact.

Invariant subspaces are found by brute force over normalized (reduced row
echelon form) bases.  The sizes here are tiny and the enumeration doubles
as its own oracle; the rank-2 codimension-1 case is vectorized because the
growth recursion calls it for every prime up to the sampling limit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import GroupPresentation, classify_index, hk_action_matrices, is_prime
from .linalg import (
    hnf_rows,
    in_row_span_mod,
    int_det,
    int_inverse_unimodular,
    inv_mod,
    rank_mod,
    reduce_by_rref,
    rref_mod,
)

ENUMERATION_BOUND = 10 ** 6


@dataclass(frozen=True, eq=False)
class ModuleAction:
    """Rank-r lattice or F_p^r with one acting matrix per group generator.

    ``p is None`` means the integral, not yet reduced module; matrices are
    then required to be unimodular, so they stay invertible mod every p.
    """

    rank: int
    p: int | None
    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        mats = []
        for m in self.matrices:
            arr = np.array(m, dtype=np.int64)
            if arr.shape != (self.rank, self.rank):
                raise ValueError(f"action matrix has shape {arr.shape}, expected {(self.rank, self.rank)}")
            if self.p is None:
                if int_det(arr) not in (1, -1):
                    raise ValueError("integral action matrices must be unimodular")
            else:
                arr = arr % self.p
                if rank_mod(arr, self.p) != self.rank:
                    raise ValueError(f"action matrix singular mod {self.p}")
            arr.setflags(write=False)
            mats.append(arr)
        object.__setattr__(self, "matrices", tuple(mats))

    @property
    def num_generators(self) -> int:
        return len(self.matrices)

    def generator_matrix(self, letter: int) -> np.ndarray:
        """Matrix of a signed generator letter (negative = inverse)."""
        g = abs(letter) - 1
        if not 0 <= g < self.num_generators:
            raise ValueError(f"unknown generator index {letter}")
        m = self.matrices[g]
        if letter > 0:
            return m
        if self.p is None:
            return int_inverse_unimodular(m)
        return inv_mod(m, self.p)

    def word_matrix(self, word) -> np.ndarray:
        out = np.eye(self.rank, dtype=np.int64)
        for letter in word:
            out = out @ self.generator_matrix(letter)
            if self.p is not None:
                out %= self.p
        return out

    def satisfies(self, presentation: GroupPresentation) -> bool:
        """Whether every relator evaluates to the identity matrix."""
        if presentation.num_generators != self.num_generators:
            return False
        eye = np.eye(self.rank, dtype=np.int64)
        return all(
            np.array_equal(self.word_matrix(rel), eye) for rel in presentation.relators
        )


def reduce_mod_p(action: ModuleAction, p: int) -> ModuleAction:
    """Entrywise reduction of an integral action; stays invertible mod p."""
    if action.p is not None:
        raise ValueError("action is already reduced mod a prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return ModuleAction(action.rank, p, tuple(m % p for m in action.matrices))


@dataclass(frozen=True, eq=False)
class Submodule:
    """An invariant subspace of F_p^r together with its preimage lattice.

    ``subspace_basis`` is the RREF basis (possibly empty, for the zero
    subspace); ``lattice_basis`` is the HNF basis of the preimage of the
    subspace in Z^r, a sublattice of index p^codim containing pZ^r.
    """

    ambient: ModuleAction
    subspace_basis: tuple[tuple[int, ...], ...]
    lattice_basis: np.ndarray
    index: int

    def __post_init__(self):
        d = abs(int_det(self.lattice_basis))
        if d != self.index:
            raise ValueError(f"lattice basis determinant {d} != index {self.index}")
        self.lattice_basis.setflags(write=False)

    @property
    def p(self) -> int:
        return self.ambient.p

    @property
    def codim(self) -> int:
        return self.ambient.rank - len(self.subspace_basis)


def _submodule_from_subspace(action: ModuleAction, basis) -> Submodule:
    p, r = action.p, action.rank
    rows = [[p if i == j else 0 for j in range(r)] for i in range(r)]
    rows.extend(list(map(int, vec)) for vec in basis)
    lattice = hnf_rows(rows)
    codim = r - len(basis)
    return Submodule(
        ambient=action,
        subspace_basis=tuple(tuple(int(x) for x in vec) for vec in basis),
        lattice_basis=lattice,
        index=p ** codim,
    )


def _rref_bases(p: int, r: int, d: int):
    """All RREF bases of d-dimensional subspaces of F_p^r, one per subspace."""
    if d == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(r), d):
        free = [
            (i, j)
            for i in range(d)
            for j in range(r)
            if j > pivots[i] and j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = [[0] * r for _ in range(d)]
            for i, c in enumerate(pivots):
                basis[i][c] = 1
            for (i, j), v in zip(free, values):
                basis[i][j] = v
            yield tuple(tuple(row) for row in basis)


def _invariant_lines_rank2(action: ModuleAction) -> list[tuple[tuple[int, int], ...]]:
    """Vectorized scan of the p + 1 lines of F_p^2 for joint invariance."""
    p = action.p
    reps = np.ones((p + 1, 2), dtype=np.int64)
    reps[:p, 1] = np.arange(p)
    reps[p] = (0, 1)
    keep = np.ones(p + 1, dtype=bool)
    for m in action.matrices:
        imgs = reps @ m.T % p
        cross = (reps[:, 0] * imgs[:, 1] - reps[:, 1] * imgs[:, 0]) % p
        keep &= cross == 0
    return [((int(v[0]), int(v[1])),) for v in reps[keep]]


def invariant_subspaces(action: ModuleAction, codim: int) -> list[Submodule]:
    """All subspaces of the given codimension invariant under every matrix,
    in canonical order (lexicographic by RREF basis)."""
    if action.p is None:
        raise ValueError("invariant subspaces are computed mod p; reduce first")
    p, r = action.p, action.rank
    if not 1 <= codim <= r:
        raise ValueError(f"codim must lie in 1..{r}")
    if p ** r > ENUMERATION_BOUND:
        raise ValueError(f"enumeration bound exceeded: {p}^{r} > {ENUMERATION_BOUND}")
    d = r - codim
    if r == 2 and codim == 1:
        found = _invariant_lines_rank2(action)
    else:
        found = []
        for basis in _rref_bases(p, r, d):
            if d == 0:
                found.append(basis)
                continue
            mat = np.array(basis, dtype=np.int64)
            pivots = [int(np.flatnonzero(row)[0]) for row in mat]
            ok = True
            for m in action.matrices:
                imgs = mat @ m.T % p
                if not all(in_row_span_mod(v, mat, pivots, p) for v in imgs):
                    ok = False
                    break
            if ok:
                found.append(basis)
    found.sort()
    return [_submodule_from_subspace(action, basis) for basis in found]


def quotient_action(action: ModuleAction, sub: Submodule) -> ModuleAction:
    """Action induced on F_p^r / subspace, in the complement basis given by
    the coordinate vectors at the non-pivot columns of the RREF basis."""
    p, r = action.p, action.rank
    if p is None or sub.p != p or sub.ambient.rank != r:
        raise ValueError("submodule does not match the action")
    basis = np.array(sub.subspace_basis, dtype=np.int64).reshape(len(sub.subspace_basis), r)
    pivots = [int(np.flatnonzero(row)[0]) for row in basis]
    for m in action.matrices:
        imgs = basis @ m.T % p if len(basis) else basis
        if not all(in_row_span_mod(v, basis, pivots, p) for v in imgs):
            raise ValueError("subspace is not invariant under the action")
    comp = [j for j in range(r) if j not in pivots]
    mats = []
    for m in action.matrices:
        q = np.zeros((len(comp), len(comp)), dtype=np.int64)
        for col, j in enumerate(comp):
            rem = reduce_by_rref(m[:, j], basis, pivots, p)
            q[:, col] = rem[comp]
        mats.append(q)
    return ModuleAction(len(comp), p, tuple(mats))


def _is_simple(action: ModuleAction) -> bool:
    """No invariant subspace strictly between 0 and the whole space."""
    for codim in range(1, action.rank):
        if invariant_subspaces(action, codim):
            return False
    return True


def maximal_submodules(action: ModuleAction, n: int) -> list[Submodule]:
    """All maximal submodules of Z^r of index n under an integral action.

    Empty unless n = p^c with c <= r.  Codimension-1 subspaces always give
    maximal submodules; deeper ones are maximal exactly when the quotient
    module is simple (for r = 2 and n = p^2: no invariant line exists).
    """
    if action.p is not None:
        raise ValueError("maximal_submodules expects the integral action")
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    cls = classify_index(n)
    if cls.kind not in ("prime", "prime_square", "prime_power"):
        return []
    if cls.exponent > action.rank:
        return []
    reduced = reduce_mod_p(action, cls.p)
    candidates = invariant_subspaces(reduced, cls.exponent)
    if cls.exponent == 1:
        return candidates
    return [
        sub for sub in candidates if _is_simple(quotient_action(reduced, sub))
    ]


@dataclass(frozen=True)
class SubmoduleClassification:
    """Which of the three named index-p submodules of Z^2 are maximal.

    ``present`` is a subset of {"Mp", "MpMinus1", "PZ2"}: the lattice
    spanned by pZ^2 and (1,1), the one spanned by pZ^2 and (1,-1), and
    pZ^2 itself (maximal exactly when no invariant line exists).
    ``coincidence`` flags M_p = M_{p,-1}, which happens only at p = 2.
    """

    p: int
    present: frozenset[str]
    coincidence: bool


def classify_rank2_submodules(k: int, p: int) -> SubmoduleClassification:
    """Classify the maximal submodules of Z^2 under the H_k action at p."""
    mat_a, mat_b = hk_action_matrices(k)
    action = ModuleAction(2, None, (mat_a, mat_b))
    lines = invariant_subspaces(reduce_mod_p(action, p), 1)
    found = {sub.subspace_basis for sub in lines}
    line_v = ((1, 1),)
    line_u = ((1, (-1) % p),)
    present = set()
    if line_v in found:
        present.add("Mp")
    if line_u in found:
        present.add("MpMinus1")
    if not found:
        present.add("PZ2")
    unexpected = found - {line_v, line_u}
    if unexpected:
        raise RuntimeError(f"unexpected invariant line(s) {unexpected} at p={p}, k={k}")
    return SubmoduleClassification(
        p=p,
        present=frozenset(present),
        coincidence=(line_v == line_u and line_v in found),
    )
