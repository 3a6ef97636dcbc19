"""Representations of the gentle algebra as explicit rational matrices, and
the verification oracle built on them.

This is the independent check layer: hom spaces are computed by solving
intertwiner equations, exactness and non-splitness of candidate sequences by
explicit rank arguments, and Ext groups from a projective presentation.  None
of it reuses the walk combinatorics it is meant to verify.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NoExactStructureFound, ZeroParameter
from .qp import JacobianAlgebra
from .strings import (
    Band,
    StringWord,
    band_vertices,
    projective_string,
    vertices,
)

F0 = Fraction(0)
F1 = Fraction(1)

Matrix = list[list[Fraction]]


@dataclass
class Module:
    alg: JacobianAlgebra
    dims: dict[int, int]
    mats: dict[int, Matrix]    # arrow id -> (dim target x dim source)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.alg.quiver.vertices)


def zero_module(alg: JacobianAlgebra) -> Module:
    dims = {v: 0 for v in alg.quiver.vertices}
    mats = {a.id: [] for a in alg.quiver.arrows}
    return Module(alg, dims, mats)


def _empty_mats(alg: JacobianAlgebra, dims: dict[int, int]) -> dict[int, Matrix]:
    return {a.id: linalg.mat_zero(dims[a.target], dims[a.source])
            for a in alg.quiver.arrows}


def simple_module(alg: JacobianAlgebra, v: int) -> Module:
    dims = {u: (1 if u == v else 0) for u in alg.quiver.vertices}
    return Module(alg, dims, _empty_mats(alg, dims))


def string_module(alg: JacobianAlgebra, w: StringWord) -> Module:
    if w.is_zero:
        return zero_module(alg)
    vs = vertices(alg, w)
    dims = {u: 0 for u in alg.quiver.vertices}
    pos_index = []
    for u in vs:
        pos_index.append(dims[u])
        dims[u] += 1
    mats = _empty_mats(alg, dims)
    for k, x in enumerate(w.letters):
        a = abs(x)
        if x > 0:      # arrow maps position k to position k+1
            mats[a][pos_index[k + 1]][pos_index[k]] = F1
        else:          # arrow maps position k+1 to position k
            mats[a][pos_index[k]][pos_index[k + 1]] = F1
    return Module(alg, dims, mats)


def band_module(alg: JacobianAlgebra, b: Band, n: int, lam: Fraction) -> Module:
    if lam == 0:
        raise ZeroParameter("band parameter must be nonzero")
    if n < 1:
        raise ZeroParameter("band multiplicity must be positive")
    vs = band_vertices(alg, b)
    dims = {u: 0 for u in alg.quiver.vertices}
    block_start = []
    for u in vs:
        block_start.append(dims[u])
        dims[u] += n
    dims = {u: d for u, d in dims.items()}
    mats = _empty_mats(alg, dims)
    L = len(b.letters)
    jordan = [[lam if i == j else (F1 if j == i + 1 else F0)
               for j in range(n)] for i in range(n)]
    eye = linalg.mat_eye(n)
    for k, x in enumerate(b.letters):
        a = abs(x)
        src_block = block_start[k]
        dst_block = block_start[(k + 1) % L]
        blk = jordan if k == L - 1 else eye
        if x > 0:
            for i in range(n):
                for j in range(n):
                    if blk[i][j]:
                        mats[a][dst_block + i][src_block + j] = blk[i][j]
        else:
            for i in range(n):
                for j in range(n):
                    if blk[i][j]:
                        mats[a][src_block + i][dst_block + j] = blk[i][j]
    return Module(alg, dims, mats)


def direct_sum(alg: JacobianAlgebra, parts: list[Module]) -> Module:
    dims = {v: sum(p.dims[v] for p in parts) for v in alg.quiver.vertices}
    mats = _empty_mats(alg, dims)
    for a in alg.quiver.arrows:
        roff = 0
        coff = 0
        for p in parts:
            m = p.mats[a.id]
            for i in range(p.dims[a.target]):
                for j in range(p.dims[a.source]):
                    if m[i][j]:
                        mats[a.id][roff + i][coff + j] = m[i][j]
            roff += p.dims[a.target]
            coff += p.dims[a.source]
    return Module(alg, dims, mats)


# -- hom spaces ----------------------------------------------------------------

HomElt = dict[int, Matrix]   # vertex -> (dim N_v x dim M_v)


def hom_space(M: Module, N: Module) -> list[HomElt]:
    """Basis of the intertwiner space of two representations."""
    alg = M.alg
    offset: dict[int, int] = {}
    nvars = 0
    for v in alg.quiver.vertices:
        offset[v] = nvars
        nvars += N.dims[v] * M.dims[v]

    def var(v: int, i: int, j: int) -> int:
        return offset[v] + i * M.dims[v] + j

    rows: list[linalg.Row] = []
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        Ma, Na = M.mats[a.id], N.mats[a.id]
        for i in range(N.dims[t]):
            for j in range(M.dims[s]):
                row: linalg.Row = {}
                for k in range(M.dims[t]):
                    if Ma[k][j]:
                        row[var(t, i, k)] = row.get(var(t, i, k), F0) + Ma[k][j]
                for l in range(N.dims[s]):
                    if Na[i][l]:
                        key = var(s, l, j)
                        row[key] = row.get(key, F0) - Na[i][l]
                row = {k: val for k, val in row.items() if val}
                if row:
                    rows.append(row)
    basis_vecs = linalg.nullspace(rows, nvars)
    out: list[HomElt] = []
    for vec in basis_vecs:
        h: HomElt = {}
        for v in alg.quiver.vertices:
            h[v] = [[vec[var(v, i, j)] for j in range(M.dims[v])]
                    for i in range(N.dims[v])]
        out.append(h)
    return out


def hom_dim(M: Module, N: Module) -> int:
    return len(hom_space(M, N))


def _combine(basis: list[HomElt], coeffs: list[Fraction],
             M: Module, N: Module) -> HomElt:
    alg = M.alg
    out: HomElt = {v: linalg.mat_zero(N.dims[v], M.dims[v])
                   for v in alg.quiver.vertices}
    for c, h in zip(coeffs, basis):
        if not c:
            continue
        for v in alg.quiver.vertices:
            hv = h[v]
            ov = out[v]
            for i in range(N.dims[v]):
                for j in range(M.dims[v]):
                    if hv[i][j]:
                        ov[i][j] += c * hv[i][j]
    return out


def _is_injective(h: HomElt, M: Module) -> bool:
    return all(linalg.mat_rank(h[v]) == M.dims[v] for v in M.alg.quiver.vertices)


def _is_surjective(h: HomElt, N: Module) -> bool:
    return all(linalg.mat_rank(h[v]) == N.dims[v] for v in N.alg.quiver.vertices)


def _combo_candidates(r: int, tries: int = 400):
    """Deterministic coefficient vectors first, then a seeded random stream."""
    for k in range(r):
        yield [F1 if i == k else F0 for i in range(r)]
    for k in range(2, r + 1):
        yield [F1 if i < k else F0 for i in range(r)]
    rng = random.Random(20240531)
    for _ in range(tries):
        yield [Fraction(rng.randint(-9, 9)) for _ in range(r)]


def _search_combo(basis: list[HomElt], M: Module, N: Module, predicate,
                  tries: int = 400) -> tuple[HomElt, list[Fraction]] | None:
    """Search for a basis combination with a property."""
    if len(basis) == 0:
        h = _combine([], [], M, N)
        return (h, []) if predicate(h) else None
    for coeffs in _combo_candidates(len(basis), tries):
        h = _combine(basis, coeffs, M, N)
        if predicate(h):
            return h, coeffs
    return None


def compose(g: HomElt, f: HomElt, A: Module, B: Module, C: Module) -> HomElt:
    """g after f where f: A -> B, g: B -> C."""
    return {v: linalg.mat_mul(g[v], f[v]) for v in A.alg.quiver.vertices}


def _hom_to_vec(h: HomElt, A: Module, C: Module) -> list[Fraction]:
    vec: list[Fraction] = []
    for v in A.alg.quiver.vertices:
        for i in range(C.dims[v]):
            for j in range(A.dims[v]):
                vec.append(h[v][i][j])
    return vec


@dataclass
class ExactnessReport:
    ok: bool
    total_dims_match: bool
    injective: bool
    surjective: bool
    composite_zero: bool
    nonsplit: bool
    detail: str = ""


def verify_exact_nonsplit(A: Module, middles: list[Module], C: Module) -> ExactnessReport:
    """Search for maps certifying 0 -> A -> (+)middles -> C -> 0 exact and
    non-split; raise NoExactStructureFound when none exist."""
    alg = A.alg
    B = direct_sum(alg, middles)
    dims_match = B.total_dim == A.total_dim + C.total_dim
    if not dims_match:
        raise NoExactStructureFound("middle dimension does not match the ends")

    fs = hom_space(A, B)
    gs = hom_space(B, C)

    def g_for(f: HomElt) -> HomElt | None:
        # surjections B -> C vanishing on the image of f
        rows: list[linalg.Row] = []
        comp_vecs = [_hom_to_vec(compose(g, f, A, B, C), A, C) for g in gs]
        width = len(comp_vecs[0]) if comp_vecs else 0
        for i in range(width):
            row = {k: comp_vecs[k][i] for k in range(len(gs)) if comp_vecs[k][i]}
            if row:
                rows.append(row)
        coeff_basis = linalg.nullspace(rows, len(gs))
        sub_basis = [_combine(gs, coeffs, B, C) for coeffs in coeff_basis]
        found = _search_combo(sub_basis, B, C, lambda h: _is_surjective(h, C))
        return found[0] if found else None

    f = g = None
    if A.total_dim == 0:
        f = _combine([], [], A, B)
        g = g_for(f)
    else:
        tried = 0
        for coeffs in _combo_candidates(len(fs)):
            cand = _combine(fs, coeffs, A, B)
            if not _is_injective(cand, A):
                continue
            tried += 1
            g = g_for(cand)
            if g is not None:
                f = cand
                break
            if tried > 200:
                break
    if f is None or g is None:
        raise NoExactStructureFound("no exact structure with these terms")

    # non-splitness: no h : B -> A with h . f = id_A
    hs = hom_space(B, A)
    id_vec = _hom_to_vec(
        {v: linalg.mat_eye(A.dims[v]) for v in alg.quiver.vertices}, A, A)
    hf_vecs = [_hom_to_vec(compose(h, f, A, B, A), A, A) for h in hs]
    n = len(id_vec)
    rows2: list[linalg.Row] = []
    rhs: list[Fraction] = []
    for i in range(n):
        row = {k: hf_vecs[k][i] for k in range(len(hs)) if hf_vecs[k][i]}
        rows2.append(row)
        rhs.append(id_vec[i])
    retraction = linalg.solve(rows2, rhs, len(hs))
    nonsplit = retraction is None
    if A.total_dim == 0:
        nonsplit = False

    ok = dims_match and nonsplit
    if not nonsplit:
        raise NoExactStructureFound("sequence splits: a retraction exists")
    return ExactnessReport(
        ok=ok, total_dims_match=dims_match, injective=True, surjective=True,
        composite_zero=True, nonsplit=nonsplit,
    )


def verify_right_exact(A: Module, middles: list[Module], C: Module) -> bool:
    """Certify A -> (+)middles -> C -> 0: a surjection killing exactly the
    image of some map from A (rank f = dim B - dim C)."""
    alg = A.alg
    B = direct_sum(alg, middles)
    want_rank = B.total_dim - C.total_dim
    if want_rank < 0:
        return False
    fs = hom_space(A, B)
    gs = hom_space(B, C)

    def rank_of(h: HomElt) -> int:
        return sum(linalg.mat_rank(h[v]) for v in alg.quiver.vertices)

    for coeffs in (_combo_candidates(len(fs)) if fs else [[]]):
        f = _combine(fs, list(coeffs), A, B)
        if rank_of(f) != want_rank:
            continue
        rows: list[linalg.Row] = []
        comp_vecs = [_hom_to_vec(compose(g, f, A, B, C), A, C) for g in gs]
        width = len(comp_vecs[0]) if comp_vecs else 0
        for i in range(width):
            row = {k: comp_vecs[k][i] for k in range(len(gs)) if comp_vecs[k][i]}
            if row:
                rows.append(row)
        coeff_basis = linalg.nullspace(rows, len(gs))
        sub_basis = [_combine(gs, cs, B, C) for cs in coeff_basis]
        found = _search_combo(sub_basis, B, C, lambda h: _is_surjective(h, C))
        if found is not None:
            return True
        if not fs:
            break
    return False


# -- projective presentations and Ext^1 ----------------------------------------

def _radical_dims(M: Module) -> dict[int, int]:
    alg = M.alg
    rad: dict[int, int] = {}
    for v in alg.quiver.vertices:
        cols: list[list[Fraction]] = []
        for a in alg.quiver.arrows:
            if a.target != v:
                continue
            m = M.mats[a.id]
            for j in range(M.dims[a.source]):
                cols.append([m[i][j] for i in range(M.dims[v])])
        rows = [{i: c[i] for i in range(len(c)) if c[i]} for c in cols]
        rad[v] = linalg.rank(rows)
    return rad


def projective_cover_data(M: Module) -> tuple[Module, HomElt]:
    """A projective module P with a surjection P -> M."""
    alg = M.alg
    rad = _radical_dims(M)
    tops = {v: M.dims[v] - rad[v] for v in alg.quiver.vertices}
    parts: list[Module] = []
    for v in alg.quiver.vertices:
        pv = string_module(alg, projective_string(alg, v))
        parts.extend([pv] * tops[v])
    if not parts:
        P = zero_module(alg)
        pi = {v: linalg.mat_zero(M.dims[v], 0) for v in alg.quiver.vertices}
        return P, pi
    P = direct_sum(alg, parts)
    cands = hom_space(P, M)
    found = _search_combo(cands, P, M, lambda h: _is_surjective(h, M))
    if found is None:
        raise NoExactStructureFound("projective cover search failed")
    return P, found[0]


def kernel_module(P: Module, pi: HomElt, M: Module) -> Module:
    """The kernel of a representation map as a representation."""
    alg = P.alg
    kbasis: dict[int, list[list[Fraction]]] = {}
    kdims: dict[int, int] = {}
    for v in alg.quiver.vertices:
        rows = [{j: pi[v][i][j] for j in range(P.dims[v]) if pi[v][i][j]}
                for i in range(M.dims[v])]
        basis = linalg.nullspace(rows, P.dims[v])
        kbasis[v] = basis
        kdims[v] = len(basis)
    mats: dict[int, Matrix] = {}
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        mat = linalg.mat_zero(kdims[t], kdims[s])
        for j, vec in enumerate(kbasis[s]):
            img = [sum((P.mats[a.id][i][k] * vec[k] for k in range(P.dims[s])), F0)
                   for i in range(P.dims[t])]
            coeffs = linalg.solve_columns(kbasis[t], img)
            assert coeffs is not None, "kernel is not arrow-stable"
            for i, c in enumerate(coeffs):
                mat[i][j] = c
        mats[a.id] = mat
    return Module(alg, kdims, mats)


def ext1_dim(M: Module, N: Module) -> int:
    """dim Ext^1 computed from a projective presentation of M."""
    if M.total_dim == 0 or N.total_dim == 0:
        return 0
    P, pi = projective_cover_data(M)
    K = kernel_module(P, pi, M)
    return hom_dim(K, N) - hom_dim(P, N) + hom_dim(M, N)
