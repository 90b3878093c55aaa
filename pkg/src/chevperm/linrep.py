"""Exact module arithmetic over prime fields GF(l).

Vectors are numpy int64 arrays mod l; subspaces are canonical reduced
row-echelon bases, so equal subspaces have equal representations.  A
ModuleHandle bundles an ambient dimension with invertible labelled actions
(permutations of a basis, or dense matrices) plus the sublist of labels
used for submodule closure.  On top of that: spinning, fixed spaces,
restriction and quotient (with action-equivariance asserted), an
irreducibility test in the random-singular-element style with certified
verdicts, recursive composition series, and a socle check that enumerates
the fixed lines of a p-group action.

The irreducibility criterion used: for a singular algebra element A, if
some proper submodule exists then either a vector of ker A generates a
proper submodule, or every functional in ker A^T generates a proper
submodule of the transpose module.  Spinning every line of both kernels
therefore certifies irreducibility; the search keeps drawing random short
algebra words until a kernel small enough to enumerate appears.
"""

from __future__ import annotations

import collections
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "MeatAxeBudgetError",
    "Subspace",
    "ModuleHandle",
    "spin",
    "fixed_space",
    "restrict",
    "quotient",
    "meataxe_irreducible",
    "composition_series",
    "socle_simple_check",
    "Verdict",
]


class MeatAxeBudgetError(RuntimeError):
    """The random search exhausted its budget without a usable element."""


def _mod_inv(a: int, l: int) -> int:
    return pow(int(a), l - 2, l)


def rref(rows: np.ndarray, l: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Reduced row echelon form mod l; returns (basis, pivot columns)."""
    M = np.array(rows, dtype=np.int64).reshape(len(rows), -1) % l
    n = M.shape[1]
    r = 0
    pivots: List[int] = []
    for col in range(n):
        k = next((i for i in range(r, M.shape[0]) if M[i, col]), None)
        if k is None:
            continue
        M[[r, k]] = M[[k, r]]
        M[r] = (M[r] * _mod_inv(M[r, col], l)) % l
        fac = M[:, col].copy()
        fac[r] = 0
        M = (M - np.outer(fac, M[r])) % l
        pivots.append(col)
        r += 1
        if r == M.shape[0]:
            break
    return M[:r], tuple(pivots)


def nullspace(M: np.ndarray, l: int) -> np.ndarray:
    """Basis (rows) of the right kernel of M mod l."""
    M = np.array(M, dtype=np.int64) % l
    if M.size == 0:
        return np.eye(M.shape[1], dtype=np.int64) if M.ndim == 2 else np.zeros((0, 0), np.int64)
    R, pivots = rref(M, l)
    n = M.shape[1]
    free = [j for j in range(n) if j not in pivots]
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, j in enumerate(free):
        out[i, j] = 1
        for r, p in enumerate(pivots):
            out[i, p] = (-R[r, j]) % l
    return out


class Subspace:
    """A subspace of GF(l)^n held as a canonical RREF basis."""

    def __init__(self, n: int, l: int, rows: Optional[np.ndarray] = None):
        self.n = n
        self.l = l
        if rows is None or len(rows) == 0:
            self.rows = np.zeros((0, n), dtype=np.int64)
            self.pivots: Tuple[int, ...] = ()
        else:
            self.rows, self.pivots = rref(np.asarray(rows), l)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.l
        if self.dim:
            v = (v - v[list(self.pivots)] @ self.rows) % self.l
        return v

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def coords(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.l
        c = v[list(self.pivots)]
        assert not np.any((v - c @ self.rows) % self.l), "vector outside the subspace"
        return c

    def lift(self, coords: np.ndarray) -> np.ndarray:
        return (np.asarray(coords, dtype=np.int64) @ self.rows) % self.l

    def sum(self, other: "Subspace") -> "Subspace":
        assert (self.n, self.l) == (other.n, other.l)
        return Subspace(self.n, self.l, np.vstack([self.rows, other.rows]))

    def intersect(self, other: "Subspace") -> "Subspace":
        stacked = np.vstack([self.rows, other.rows])
        left_kernel = nullspace(stacked.T, self.l)
        vecs = (left_kernel[:, : self.dim] @ self.rows) % self.l if len(left_kernel) else []
        return Subspace(self.n, self.l, vecs if len(vecs) else None)

    def perp(self) -> "Subspace":
        return Subspace(self.n, self.l, nullspace(self.rows, self.l) if self.dim else np.eye(self.n, dtype=np.int64))

    def __eq__(self, other) -> bool:
        return self.dim == other.dim and np.array_equal(self.rows, other.rows)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __repr__(self) -> str:
        return "Subspace(dim=%d of %d, mod %d)" % (self.dim, self.n, self.l)


def line_representatives(basis: np.ndarray, l: int):
    """One representative per 1-dimensional subspace of the row span."""
    k = len(basis)
    for combo in itertools.product(range(l), repeat=k):
        lead = next((c for c in combo if c), None)
        if lead != 1:
            continue
        yield (np.array(combo, dtype=np.int64) @ basis) % l


class ModuleHandle:
    """An exact GF(l)-module with labelled invertible actions.

    `actions` maps label -> ("perm", fwd, inv) with index arrays, or
    ("mat", M, Minv) with dense matrices.  `spin_labels` names the actions
    that generate the acting group; closure operations use exactly those.
    """

    def __init__(self, dim: int, l: int, spin_labels: Sequence[Hashable]):
        self.dim = dim
        self.l = l
        self.actions: Dict[Hashable, tuple] = {}
        self.spin_labels = list(spin_labels)
        self._mat_cache: Dict[Hashable, np.ndarray] = {}

    def add_perm(self, label: Hashable, perm: np.ndarray) -> None:
        perm = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        assert len(perm) == self.dim and np.array_equal(perm[inv], np.arange(self.dim))
        self.actions[label] = ("perm", perm, inv)

    def add_matrix(self, label: Hashable, M: np.ndarray, Minv: Optional[np.ndarray] = None) -> None:
        M = np.asarray(M, dtype=np.int64) % self.l
        assert M.shape == (self.dim, self.dim)
        # the inverse is computed lazily on first use; most workloads never ask
        self.actions[label] = ("mat", M, Minv)

    def apply(self, label: Hashable, v: np.ndarray, inverse: bool = False) -> np.ndarray:
        kind, fwd, inv = self.actions[label]
        if kind == "perm":
            perm = inv if inverse else fwd
            out = np.empty_like(v)
            out[perm] = v
            return out
        if inverse and inv is None:
            inv = mat_inverse(fwd, self.l)
            assert np.array_equal((fwd @ inv) % self.l, np.eye(self.dim, dtype=np.int64))
            self.actions[label] = ("mat", fwd, inv)
        M = inv if inverse else fwd
        return (M @ v) % self.l

    def apply_word(self, word: Sequence[Hashable], v: np.ndarray) -> np.ndarray:
        """Apply a product of labelled actions, rightmost factor first."""
        for label in reversed(word):
            v = self.apply(label, v)
        return v

    def matrix(self, label: Hashable) -> np.ndarray:
        M = self._mat_cache.get(label)
        if M is None:
            kind, fwd, inv = self.actions[label]
            if kind == "mat":
                M = fwd
            else:
                M = np.zeros((self.dim, self.dim), dtype=np.int64)
                M[fwd, np.arange(self.dim)] = 1
            self._mat_cache[label] = M
        return M

    def operator(self, word: Sequence[Hashable]) -> np.ndarray:
        out = np.eye(self.dim, dtype=np.int64)
        for label in word:
            out = (out @ self.matrix(label)) % self.l
        return out

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v


def mat_inverse(M: np.ndarray, l: int) -> np.ndarray:
    n = M.shape[0]
    R, pivots = rref(np.hstack([M % l, np.eye(n, dtype=np.int64)]), l)
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular mod %d" % l)
    return R[:, n:]


# -- closure & friends -------------------------------------------------------


class _Echelon:
    """Incremental RREF accumulator used by spin."""

    def __init__(self, n: int, l: int):
        self.n, self.l = n, l
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots: List[int] = []

    def add(self, v: np.ndarray) -> Optional[np.ndarray]:
        v = np.asarray(v, dtype=np.int64) % self.l
        if self.pivots:
            v = (v - v[self.pivots] @ self.rows) % self.l
        nz = np.flatnonzero(v)
        if not len(nz):
            return None
        piv = int(nz[0])
        v = (v * _mod_inv(v[piv], self.l)) % self.l
        if len(self.rows):
            self.rows = (self.rows - np.outer(self.rows[:, piv], v)) % self.l
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(piv)
        return v

    def subspace(self) -> Subspace:
        order = np.argsort(self.pivots)
        return Subspace(self.n, self.l, self.rows[order])


def spin(handle: ModuleHandle, seeds: Iterable[np.ndarray]) -> Subspace:
    """Smallest subspace containing the seeds and closed under the spin
    labels (hence under the group they generate).  Deterministic."""
    ech = _Echelon(handle.dim, handle.l)
    queue = collections.deque()
    for s in seeds:
        added = ech.add(s)
        if added is not None:
            queue.append(added)
    while queue:
        v = queue.popleft()
        for label in handle.spin_labels:
            added = ech.add(handle.apply(label, v))
            if added is not None:
                queue.append(added)
            if len(ech.pivots) == handle.dim:
                return ech.subspace()
    return ech.subspace()


def fixed_space(handle: ModuleHandle, labels: Optional[Sequence[Hashable]] = None) -> Subspace:
    """Common kernel of (action - 1) over the given labels (default: spin set).

    Fixing the generators fixes the generated group, so this is the full
    fixed space of that group.
    """
    labels = handle.spin_labels if labels is None else list(labels)
    if not labels:
        return Subspace(handle.dim, handle.l, np.eye(handle.dim, dtype=np.int64))
    stacked = np.vstack(
        [(handle.matrix(lbl) - np.eye(handle.dim, dtype=np.int64)) % handle.l for lbl in labels]
    )
    return Subspace(handle.dim, handle.l, nullspace(stacked, handle.l))


def restrict(handle: ModuleHandle, sub: Subspace) -> ModuleHandle:
    """The module structure on an invariant subspace, in its basis coords."""
    if sub.dim == handle.dim:
        return handle
    out = ModuleHandle(sub.dim, handle.l, handle.spin_labels)
    for label in handle.actions:
        cols = [sub.coords(handle.apply(label, row)) for row in sub.rows]
        out.add_matrix(label, np.array(cols, dtype=np.int64).T if cols else np.zeros((0, 0), np.int64))
    return out


def quotient(handle: ModuleHandle, sub: Subspace) -> Tuple[ModuleHandle, Callable[[np.ndarray], np.ndarray]]:
    """The quotient module by an invariant subspace with its projection.

    The projection reduces mod the subspace then reads off the coordinates
    away from its pivots; equivariance against every action is asserted.
    """
    if sub.dim == 0:
        return handle, lambda v: np.asarray(v, dtype=np.int64) % handle.l
    keep = [j for j in range(handle.dim) if j not in set(sub.pivots)]

    def project(v: np.ndarray) -> np.ndarray:
        return sub.reduce(v)[keep]

    out = ModuleHandle(len(keep), handle.l, handle.spin_labels)
    for label in handle.actions:
        cols = []
        for j in keep:
            cols.append(project(handle.apply(label, handle.basis_vector(j))))
        M = np.array(cols, dtype=np.int64).T if cols else np.zeros((0, 0), np.int64)
        out.add_matrix(label, M)
    # equivariance on the full ambient basis, including the dropped pivots
    for label in handle.actions:
        M = out.matrix(label)
        for j in range(handle.dim):
            lhs = project(handle.apply(label, handle.basis_vector(j)))
            rhs = (M @ project(handle.basis_vector(j))) % handle.l
            assert np.array_equal(lhs, rhs), "projection is not equivariant"
    return out, project


# -- irreducibility ----------------------------------------------------------


@dataclass
class Verdict:
    irreducible: bool
    witness: Optional[Subspace] = None
    certificate: Dict[str, object] = field(default_factory=dict)


def _random_algebra_element(handle: ModuleHandle, rng, max_word: int) -> Tuple[np.ndarray, list]:
    gens = handle.spin_labels
    nterms = int(rng.integers(1, 4))
    A = np.zeros((handle.dim, handle.dim), dtype=np.int64)
    spec = []
    for _ in range(nterms):
        coeff = int(rng.integers(1, handle.l))
        length = int(rng.integers(1, max_word + 1))
        picks = [gens[int(k)] for k in rng.integers(len(gens), size=length)]
        term = np.eye(handle.dim, dtype=np.int64)
        for lbl in picks:
            term = (term @ handle.matrix(lbl)) % handle.l
        A = (A + coeff * term) % handle.l
        spec.append((coeff, [str(lbl) for lbl in picks]))
    return A, spec


def _transpose_handle(handle: ModuleHandle) -> ModuleHandle:
    out = ModuleHandle(handle.dim, handle.l, handle.spin_labels)
    for label in handle.spin_labels:
        out.add_matrix(label, handle.matrix(label).T.copy())
    return out


def meataxe_irreducible(
    handle: ModuleHandle,
    seed: int = 0,
    budget: int = 200,
    max_word: int = 8,
    line_budget: int = 2000,
) -> Verdict:
    """Certified irreducibility test.

    Draws random short algebra elements until one has a small nonzero
    kernel, then spins every line of the kernel and of the transpose
    kernel.  A proper spin on the primal side is itself a witness
    submodule; on the transpose side its perp is (and is checked to be)
    invariant.  If both sides only produce the full space the module is
    irreducible and the verdict carries the certifying data.  A final
    fallback spins every line of the whole space when that is affordable.
    """
    d = handle.dim
    if d == 0:
        raise ValueError("cannot test the zero module")
    if d == 1:
        return Verdict(True, certificate={"method": "dimension-1"})
    rng = np.random.default_rng(seed)
    tr = None
    for attempt in range(budget):
        A, spec = _random_algebra_element(handle, rng, max_word)
        ker = nullspace(A, handle.l)
        nu = len(ker)
        if nu == 0 or nu == d:
            continue
        n_lines = (handle.l**nu - 1) // (handle.l - 1)
        if n_lines > line_budget:
            continue
        for v in line_representatives(ker, handle.l):
            S = spin(handle, [v])
            if S.dim < d:
                return Verdict(False, witness=S, certificate={"method": "kernel-spin", "element": spec})
        if tr is None:
            tr = _transpose_handle(handle)
        kerT = nullspace(A.T, handle.l)
        assert len(kerT) == nu
        for w in line_representatives(kerT, handle.l):
            S = spin(tr, [w])
            if S.dim < d:
                witness = S.perp()
                for lbl in handle.spin_labels:
                    for row in witness.rows:
                        assert witness.contains(handle.apply(lbl, row))
                assert 0 < witness.dim < d
                return Verdict(False, witness=witness, certificate={"method": "transpose-kernel", "element": spec})
        return Verdict(
            True,
            certificate={
                "method": "singular-element",
                "element": spec,
                "nullity": nu,
                "lines": n_lines,
                "attempt": attempt,
            },
        )
    n_lines = (handle.l**d - 1) // (handle.l - 1)
    if n_lines <= line_budget:
        for v in line_representatives(np.eye(d, dtype=np.int64), handle.l):
            S = spin(handle, [v])
            if S.dim < d:
                return Verdict(False, witness=S, certificate={"method": "exhaustive-lines"})
        return Verdict(True, certificate={"method": "exhaustive-lines", "lines": n_lines})
    raise MeatAxeBudgetError("no usable singular element in %d attempts" % budget)


def composition_series(handle: ModuleHandle, seed: int = 0) -> List[int]:
    """Multiset (sorted list) of composition factor dimensions."""
    if handle.dim == 0:
        return []
    verdict = meataxe_irreducible(handle, seed=seed)
    if verdict.irreducible:
        return [handle.dim]
    sub = verdict.witness
    below = composition_series(restrict(handle, sub), seed=seed + 1)
    above = composition_series(quotient(handle, sub)[0], seed=seed + 1)
    out = sorted(below + above)
    assert sum(out) == handle.dim
    return out


def socle_simple_check(
    handle: ModuleHandle,
    candidate: np.ndarray,
    u_labels: Sequence[Hashable],
    seed: int = 0,
) -> Dict[str, object]:
    """Does the candidate vector generate the unique minimal submodule?

    Valid when the labels in `u_labels` generate a p-group and l = p: every
    nonzero submodule then meets the fixed space of that group in a line,
    so spinning each fixed line sweeps all minimal submodules.  The caller
    is responsible for the defining-characteristic requirement.
    """
    assert np.any(np.asarray(candidate) % handle.l), "zero socle candidate"
    C = spin(handle, [candidate])
    F = fixed_space(handle, u_labels)
    lines = 0
    all_contain = True
    for v in line_representatives(F.rows, handle.l):
        lines += 1
        S = spin(handle, [v])
        if not all(S.contains(row) for row in C.rows):
            all_contain = False
            break
    verdict = meataxe_irreducible(restrict(handle, C), seed=seed)
    return {
        "candidate_fixed": F.contains(candidate),
        "fixed_dim": F.dim,
        "socle_dim": C.dim,
        "lines_checked": lines,
        "all_contain": all_contain,
        "irreducible": verdict.irreducible,
        "ok": bool(all_contain and verdict.irreducible),
    }
