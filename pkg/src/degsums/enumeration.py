"""Exhaustive enumeration engine behind the census oracle.

Groups are enumerated by backtracking over matrix columns: a partial tuple
(c_1 .. c_j) is extended by c_(j+1) exactly when every required pairing
B(c_i, c_(j+1)) = mu * B(e_i, e_(j+1)) holds (for GL: when c_(j+1) lies
outside the span of the prefix).  Completed tuples are the group elements,
each visited exactly once, so counting is streaming and needs no storage.

For speed the engine works in an internally permuted basis in which the
standard Gram matrix is block diagonal with 1x1 and hyperbolic 2x2 blocks;
conjugation by a permutation matrix preserves every reported count.  Vectors
over F_p are encoded as integers in [0, p^dim) (little-endian digits) and all
field arithmetic is table lookup:

    PAIR[a][b] = <a, b>   under the permuted Gram matrix
    QD[a]      = <a, a>
    ADD[a][b]  = index of the vector sum
    SC[s][a]   = index of the scalar multiple s*a

The counters track, per similitude factor mu: the order, the square roots of
mu*I and -mu*I (so involutions g^2 = I appear with mu = +/-1, bucketed by the
dimension j of the fixed space), with determinant filters applied for the
SO and connected-GO families.

Parallel runs partition the search by (mu, first column); partitions are
enumerated independently and merged by exact integer addition, so reports are
identical for every worker count.
"""
from __future__ import annotations

import os
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EnvelopeError
from .fp import MatrixFp, _rank_rows, is_prime, smallest_nonsquare
from .groups import (
    DET_MU_POW_FAMILIES,
    DET_ONE_FAMILIES,
    SIMILITUDE_FAMILIES,
    Family,
    GroupSpec,
    group_order_formula,
    standard_form,
)

#: Largest supported odd prime per matrix dimension; beyond this we refuse.
ENVELOPE = {1: 31, 2: 31, 3: 13, 4: 7, 5: 5}


def check_envelope(spec: GroupSpec) -> None:
    """Reject census requests outside the supported (dimension, p) envelope."""
    if spec.family == Family.U:
        raise DomainError("unitary census requires extension-field arithmetic, out of scope")
    p = spec.q
    if not is_prime(p) or p == 2:
        raise DomainError(f"census requires an odd prime field size, got {p}")
    dim = spec.matrix_dim
    cap = ENVELOPE.get(dim)
    if cap is None or p > cap:
        est = group_order_formula(spec)
        raise EnvelopeError(
            f"census envelope exceeded for {spec.family} n={spec.n} p={p} "
            f"(matrix dimension {dim}, estimated order {est}); supported: "
            + ", ".join(f"dim {d} with p <= {c}" for d, c in sorted(ENVELOPE.items()))
        )


@dataclass
class EnumConfig:
    """Precomputed tables and block plan for one (family, n, p)."""

    family: Family
    n: int
    p: int
    dim: int
    Q: int
    blocks: tuple          # (("h", v) | ("d", a), ...) in permuted level order
    symmetric: bool        # False exactly for the symplectic families
    perm: tuple            # permuted coordinate j sits at standard index perm[j]
    det_mode: str          # "none" | "one" | "mu_pow_n"
    mus: tuple             # similitude factors to enumerate
    PAIR: list
    QD: bytes
    ADD: list
    SC: list
    DIG: list
    POW: tuple


def _blocks_and_perm(family: Family, n: int, p: int):
    if family in (Family.SP, Family.GSP):
        perm = [None] * (2 * n)
        for k in range(n):
            perm[2 * k] = k
            perm[2 * k + 1] = n + k
        return tuple(("h", 1) for _ in range(n)), False, tuple(perm)
    if family in (Family.O_ODD, Family.SO_ODD):
        dim = 2 * n + 1
        return tuple(("d", 1) for _ in range(dim)), True, tuple(range(dim))
    plus = family in (Family.O_PLUS, Family.SO_PLUS, Family.GO_PLUS, Family.GO_PLUS_CONN)
    if plus:
        perm = [None] * (2 * n)
        for k in range(n):
            perm[2 * k] = k
            perm[2 * k + 1] = n + k
        return tuple(("h", 1) for _ in range(n)), True, tuple(perm)
    m = n - 1
    perm = [None] * (2 * n)
    for k in range(m):
        perm[2 * k] = k
        perm[2 * k + 1] = m + k
    perm[2 * m] = 2 * m
    perm[2 * m + 1] = 2 * m + 1
    delta = smallest_nonsquare(p).value
    blocks = tuple(("h", 1) for _ in range(m)) + (("d", 1), ("d", (-delta) % p))
    return blocks, True, tuple(perm)


def _build_tables(p: int, dim: int, gram_rows):
    Q = p**dim
    idx = np.arange(Q)
    digs = np.empty((Q, dim), dtype=np.int64)
    t = idx.copy()
    for i in range(dim):
        digs[:, i] = t % p
        t //= p
    pows = p ** np.arange(dim)
    G = np.array(gram_rows, dtype=np.int64) % p
    W = (digs @ G) % p
    chunk = max(1, (1 << 22) // Q)
    PAIR = []
    for lo in range(0, Q, chunk):
        rows = ((W[lo : lo + chunk] @ digs.T) % p).astype(np.uint8)
        PAIR.extend(r.tobytes() for r in rows)
    QD = bytes(((W * digs).sum(axis=1) % p).astype(np.uint8))
    # ADD rows: canonical-int lists below ~2M entries, uint16 arrays above
    pool = list(range(Q))
    as_lists = Q * Q <= (1 << 21)
    ADD = []
    for lo in range(0, Q, chunk):
        rows = (((digs[lo : lo + chunk, None, :] + digs[None, :, :]) % p) @ pows).astype(np.uint16)
        if as_lists:
            ADD.extend([pool[v] for v in r.tolist()] for r in rows)
        else:
            ADD.extend(array("H", r.tobytes()) for r in rows)
    SC = [[pool[v] for v in (((digs * s) % p) @ pows).tolist()] for s in range(p)]
    DIG = [tuple(int(v) for v in row) for row in digs]
    return Q, PAIR, QD, ADD, SC, DIG


_CFG_CACHE: dict = {}


def build_config(spec: GroupSpec) -> EnumConfig:
    key = (spec.family, spec.n, spec.q)
    cfg = _CFG_CACHE.get(key)
    if cfg is not None:
        return cfg
    check_envelope(spec)
    fam, n, p = spec.family, spec.n, spec.q
    dim = spec.matrix_dim
    if fam == Family.GL:
        blocks, symmetric, perm = (), False, tuple(range(dim))
        gram_perm = [[0] * dim for _ in range(dim)]  # tables still need PAIR/QD shapes
    else:
        blocks, symmetric, perm = _blocks_and_perm(fam, n, p)
        std = standard_form(fam, n, p).gram.rows
        gram_perm = [[std[perm[i]][perm[j]] for j in range(dim)] for i in range(dim)]
    Q, PAIR, QD, ADD, SC, DIG = _build_tables(p, dim, gram_perm)
    if fam in DET_ONE_FAMILIES:
        det_mode = "one"
    elif fam in DET_MU_POW_FAMILIES:
        det_mode = "mu_pow_n"
    else:
        det_mode = "none"
    mus = tuple(range(1, p)) if fam in SIMILITUDE_FAMILIES else (1,)
    cfg = EnumConfig(
        family=fam, n=n, p=p, dim=dim, Q=Q, blocks=blocks, symmetric=symmetric,
        perm=perm, det_mode=det_mode, mus=mus,
        PAIR=PAIR, QD=QD, ADD=ADD, SC=SC, DIG=DIG,
        POW=tuple(p**k for k in range(dim)),
    )
    _CFG_CACHE[key] = cfg
    return cfg


def partition_roots(cfg: EnumConfig, mu: int):
    """Valid first columns for the given similitude factor."""
    if cfg.family == Family.GL:
        return range(1, cfg.Q)
    kind, a = cfg.blocks[0]
    if kind == "h":
        if cfg.symmetric:
            QD = cfg.QD
            return [x for x in range(1, cfg.Q) if QD[x] == 0]
        return range(1, cfg.Q)
    target = (mu * a) % cfg.p
    QD = cfg.QD
    return [x for x in range(cfg.Q) if QD[x] == target]


def all_partitions(cfg: EnumConfig):
    return [(mu, c1) for mu in cfg.mus for c1 in partition_roots(cfg, mu)]


# --- determinant tracking for the SO / connected-GO families ----------------
#
# An echelon state is (rows, positions, prod): rows hold reduced columns as
# (pivot position, reduced digits, inverse of pivot entry); prod is the
# product of pivot entries.  det = prod * sign(positions as a permutation).


def _ech_push(ech, vdig, p, inv_table):
    rows, poss, prod = ech
    v = list(vdig)
    for pos, w, winv in rows:
        f = v[pos]
        if f:
            f = (f * winv) % p
            v = [(a - f * b) % p for a, b in zip(v, w)]
    lead = -1
    for i, a in enumerate(v):
        if a:
            lead = i
            break
    if lead < 0:
        return None  # dependent column: this branch can never complete
    return (rows + ((lead, tuple(v), inv_table[v[lead]]),), poss + (lead,), (prod * v[lead]) % p)


def _ech_det(ech, p: int) -> int:
    _, poss, prod = ech
    invs = sum(1 for i in range(len(poss)) for j in range(i + 1, len(poss)) if poss[i] > poss[j])
    return prod if invs % 2 == 0 else (p - prod) % p


def _verify_hit(cfg, cols, s: int) -> bool:
    """Exact check that g^2 = s*I for the element with the given columns."""
    ADD, SC, DIG, POW = cfg.ADD, cfg.SC, cfg.DIG, cfg.POW
    for k in range(cfg.dim):
        f = 0
        for i, di in enumerate(DIG[cols[k]]):
            if di:
                f = ADD[f][SC[di][cols[i]]]
        if f != s * POW[k]:
            return False
    return True


def _invol_fixed_dim(cfg, cols) -> int:
    """dim ker(g - I) for an involution given by its columns."""
    p, dim, DIG = cfg.p, cfg.dim, cfg.DIG
    rows = [[(DIG[cols[j]][i] - (1 if i == j else 0)) % p for j in range(dim)] for i in range(dim)]
    return dim - _rank_rows(rows, p)


class _Tally:
    __slots__ = ("order", "buckets", "tw_plus", "tw_minus")

    def __init__(self):
        self.order = 0
        self.buckets = {}
        self.tw_plus = 0
        self.tw_minus = 0

    def merge(self, other: "_Tally") -> None:
        self.order += other.order
        self.tw_plus += other.tw_plus
        self.tw_minus += other.tw_minus
        for k, v in other.buckets.items():
            self.buckets[k] = self.buckets.get(k, 0) + v


def _classify_hits(cfg, mu, hits, tally: _Tally) -> None:
    p = cfg.p
    mu_signed = 1 if mu == 1 else (-1 if mu == p - 1 else None)
    for cols, s in hits:
        if not _verify_hit(cfg, cols, s):
            continue
        if s == mu:
            tally.tw_plus += 1
        else:
            tally.tw_minus += 1
        if s == 1:
            j = _invol_fixed_dim(cfg, cols)
            key = (mu_signed, j)
            tally.buckets[key] = tally.buckets.get(key, 0) + 1


def _census_partition(cfg: EnumConfig, mu: int, c1: int, tally: _Tally) -> None:
    """Count completions of every column tuple rooted at first column c1."""
    if cfg.family == Family.GL:
        _census_partition_gl(cfg, c1, tally)
        return
    p, dim, Q = cfg.p, cfg.dim, cfg.Q
    PAIR, QD, ADD, SC, DIG = cfg.PAIR, cfg.QD, cfg.ADD, cfg.SC, cfg.DIG
    symmetric = cfg.symmetric
    inv_table = [0] + [pow(a, p - 2, p) for a in range(1, p)]
    det_mode = cfg.det_mode
    det_target = 1 if det_mode == "one" else (pow(mu, cfg.n, p) if det_mode == "mu_pow_n" else None)
    track_det = det_target is not None
    d = DIG[c1]
    sc_lev = [SC[d[j]] for j in range(dim)]
    tP = mu
    tM = p - mu
    hits = []
    row0 = PAIR[c1]
    acc0 = SC[d[0]][c1]
    blocks = cfg.blocks
    # per-block targets under this mu
    btar = tuple((mu * val) % p for _, val in blocks)
    ech0 = _ech_push(((), (), 1), d, p, inv_table) if track_det else None

    def leaf_pairs(z, cols, acc, ech, bi):
        """Handle the last two levels inline; returns completions count."""
        lev = dim - 2
        smp, sml = sc_lev[lev], sc_lev[lev + 1]
        dlast = d[lev + 1]
        total = 0
        kind, _ = blocks[bi]
        if kind == "d":
            qtA, qtB = btar[bi], btar[bi + 1]
            cand = [x for x in z if QD[x] == qtA]
            for x in cand:
                rowx = PAIR[x]
                accx = ADD[acc][smp[x]]
                ys = [y for y in z if rowx[y] == 0 and QD[y] == qtB]
                total += _tally_leaf(
                    cols, x, ys, accx, ech, dlast, sml, tP, tM, hits,
                    track_det, det_target, p, inv_table, DIG, ADD,
                )
        else:
            pt = btar[bi]
            if symmetric:
                cand = [x for x in z if QD[x] == 0]
            else:
                cand = z
            for x in cand:
                rowx = PAIR[x]
                accx = ADD[acc][smp[x]]
                if symmetric:
                    ys = [y for y in z if rowx[y] == pt and QD[y] == 0]
                else:
                    ys = [y for y in z if rowx[y] == pt]
                total += _tally_leaf(
                    cols, x, ys, accx, ech, dlast, sml, tP, tM, hits,
                    track_det, det_target, p, inv_table, DIG, ADD,
                )
        return total

    def rec(bi, z, cols, acc, ech):
        lev = len(cols)
        if dim - lev == 2:
            return leaf_pairs(z, cols, acc, ech, bi)
        kind, _ = blocks[bi]
        total = 0
        sc_open = sc_lev[lev]
        if kind == "d":
            qt = btar[bi]
            cand = [x for x in z if QD[x] == qt]
            for x in cand:
                rowx = PAIR[x]
                if track_det:
                    ech2 = _ech_push(ech, DIG[x], p, inv_table)
                    if ech2 is None:
                        continue
                else:
                    ech2 = None
                z2 = [y for y in z if rowx[y] == 0]
                total += rec(bi + 1, z2, cols + (x,), ADD[acc][sc_open[x]], ech2)
        else:
            pt = btar[bi]
            sc_part = sc_lev[lev + 1]
            cand = [x for x in z if QD[x] == 0] if symmetric else z
            for x in cand:
                rowx = PAIR[x]
                accx = ADD[acc][sc_open[x]]
                if track_det:
                    echx = _ech_push(ech, DIG[x], p, inv_table)
                    if echx is None:
                        continue
                else:
                    echx = None
                zx = [w for w in z if rowx[w] == 0]
                if symmetric:
                    part = [y for y in z if rowx[y] == pt and QD[y] == 0]
                else:
                    part = [y for y in z if rowx[y] == pt]
                colsx = cols + (x,)
                for y in part:
                    if track_det:
                        ech2 = _ech_push(echx, DIG[y], p, inv_table)
                        if ech2 is None:
                            continue
                    else:
                        ech2 = None
                    rowy = PAIR[y]
                    z2 = [w for w in zx if rowy[w] == 0]
                    total += rec(bi + 1, z2, colsx + (y,), ADD[accx][sc_part[y]], ech2)
        return total

    # drive from the fixed first column
    if blocks[0][0] == "h":
        pt = btar[0]
        if dim == 2:
            if symmetric:
                ys = [y for y in range(Q) if row0[y] == pt and QD[y] == 0]
            else:
                ys = [y for y in range(Q) if row0[y] == pt]
            tally.order += _leaf_from_root(
                cfg, c1, ys, acc0, d[1], sc_lev[1], tP, tM, hits, track_det, det_target, inv_table
            )
        else:
            z1 = [y for y in range(Q) if row0[y] == 0]
            if symmetric:
                cand1 = [x for x in range(Q) if row0[x] == pt and QD[x] == 0]
            else:
                cand1 = [x for x in range(Q) if row0[x] == pt]
            total = 0
            for x in cand1:
                rowx = PAIR[x]
                if track_det:
                    ech2 = _ech_push(ech0, DIG[x], p, inv_table)
                    if ech2 is None:
                        continue
                else:
                    ech2 = None
                z2 = [w for w in z1 if rowx[w] == 0]
                total += rec(1, z2, (c1, x), ADD[acc0][sc_lev[1][x]], ech2)
            tally.order += total
    else:
        z1 = [y for y in range(Q) if row0[y] == 0]
        if dim == 2:
            qtB = btar[1]
            ys = [y for y in z1 if QD[y] == qtB]
            tally.order += _leaf_from_root(
                cfg, c1, ys, acc0, d[1], sc_lev[1], tP, tM, hits, track_det, det_target, inv_table
            )
        else:
            tally.order += rec(1, z1, (c1,), acc0, ech0)
    _classify_hits(cfg, mu, hits, tally)


def _tally_leaf(cols, x, ys, accx, ech, dlast, sml, tP, tM, hits,
                track_det, det_target, p, inv_table, DIG, ADD):
    """Tally completions (x, y in ys) at the last level; returns the count."""
    colsx = cols + (x,)
    if track_det:
        echx = _ech_push(ech, DIG[x], p, inv_table)
        if echx is None:
            return 0
        total = 0
        if dlast:
            ax = ADD[accx]
            for y in ys:
                ech2 = _ech_push(echx, DIG[y], p, inv_table)
                if ech2 is None or _ech_det(ech2, p) != det_target:
                    continue
                total += 1
                a2 = ax[sml[y]]
                if a2 == tP or a2 == tM:
                    hits.append((colsx + (y,), a2))
        else:
            flag = accx == tP or accx == tM
            for y in ys:
                ech2 = _ech_push(echx, DIG[y], p, inv_table)
                if ech2 is None or _ech_det(ech2, p) != det_target:
                    continue
                total += 1
                if flag:
                    hits.append((colsx + (y,), accx))
        return total
    if dlast:
        ax = ADD[accx]
        for y in ys:
            a2 = ax[sml[y]]
            if a2 == tP or a2 == tM:
                hits.append((colsx + (y,), a2))
    elif accx == tP or accx == tM:
        for y in ys:
            hits.append((colsx + (y,), accx))
    return len(ys)


def _leaf_from_root(cfg, c1, ys, acc0, dlast, sml, tP, tM, hits, track_det, det_target, inv_table):
    """Leaf tally for 2-dimensional groups, where the root is the penult level.

    _tally_leaf pushes the x column itself, so the echelon state starts empty.
    """
    return _tally_leaf(
        (), c1, ys, acc0, ((), (), 1), dlast, sml, tP, tM, hits,
        track_det, det_target, cfg.p, inv_table, cfg.DIG, cfg.ADD,
    )


def _census_partition_gl(cfg: EnumConfig, c1: int, tally: _Tally) -> None:
    p, dim, Q = cfg.p, cfg.dim, cfg.Q
    ADD, SC, DIG = cfg.ADD, cfg.SC, cfg.DIG
    d = DIG[c1]
    tP, tM = 1, p - 1
    hits = []
    if dim == 1:
        tally.order += 1
        sq = (c1 * c1) % p
        if sq == 1:
            tally.tw_plus += 1
            j = 1 if c1 == 1 else 0
            tally.buckets[(1, j)] = tally.buckets.get((1, j), 0) + 1
        elif sq == p - 1:
            tally.tw_minus += 1
        return
    sc_lev = [SC[d[j]] for j in range(dim)]
    acc0 = SC[d[0]][c1]
    allidx = range(Q)

    def rec(lev, slist, sset, cols, acc):
        total = 0
        sc_here = sc_lev[lev]
        if lev == dim - 1:
            dlast = d[lev]
            ys = [y for y in allidx if y not in sset]
            if dlast:
                ax = ADD[acc]
                for y in ys:
                    a2 = ax[sc_here[y]]
                    if a2 == tP or a2 == tM:
                        hits.append((cols + (y,), a2))
            elif acc == tP or acc == tM:
                for y in ys:
                    hits.append((cols + (y,), acc))
            return len(ys)
        for x in allidx:
            if x in sset:
                continue
            slist2 = list(slist)
            for s in range(1, p):
                am = ADD[SC[s][x]]
                slist2.extend([am[v] for v in slist])
            total += rec(lev + 1, slist2, set(slist2), cols + (x,), ADD[acc][sc_here[x]])
        return total

    span1 = [SC[s][c1] for s in range(p)]
    tally.order += rec(1, span1, set(span1), (c1,), acc0)
    _classify_hits(cfg, 1, hits, tally)


# --- audit generator ---------------------------------------------------------


def _iter_partition(cfg: EnumConfig, mu: int, c1: int):
    """Yield completed column tuples for one partition (audit path)."""
    p, dim, Q = cfg.p, cfg.dim, cfg.Q
    if cfg.family == Family.GL:
        def rec_gl(cols, sset):
            lev = len(cols)
            for x in range(Q):
                if x in sset:
                    continue
                if lev == dim - 1:
                    yield cols + (x,)
                else:
                    sset2 = set(sset)
                    for s in range(1, p):
                        am = cfg.ADD[cfg.SC[s][x]]
                        sset2.update(am[v] for v in sset)
                    yield from rec_gl(cols + (x,), sset2)

        if dim == 1:
            yield (c1,)
            return
        sset1 = {cfg.SC[s][c1] for s in range(p)}
        yield from rec_gl((c1,), sset1)
        return

    PAIR, QD = cfg.PAIR, cfg.QD
    blocks, symmetric = cfg.blocks, cfg.symmetric
    btar = tuple((mu * val) % p for _, val in blocks)
    det_target = None
    if cfg.det_mode == "one":
        det_target = 1
    elif cfg.det_mode == "mu_pow_n":
        det_target = pow(mu, cfg.n, p)

    def det_ok(cols) -> bool:
        if det_target is None:
            return True
        from .fp import _det_rows

        rows = [[cfg.DIG[cols[j]][i] for j in range(dim)] for i in range(dim)]
        return _det_rows(rows, p) == det_target

    def rec(bi, z, cols):
        lev = len(cols)
        kind, _ = blocks[bi]
        if kind == "d":
            qt = btar[bi]
            for x in z:
                if QD[x] != qt:
                    continue
                cols2 = cols + (x,)
                if lev == dim - 1:
                    if det_ok(cols2):
                        yield cols2
                    continue
                rowx = PAIR[x]
                yield from rec(bi + 1, [y for y in z if rowx[y] == 0], cols2)
        else:
            pt = btar[bi]
            cand = [x for x in z if QD[x] == 0] if symmetric else z
            for x in cand:
                rowx = PAIR[x]
                if symmetric:
                    part = [y for y in z if rowx[y] == pt and QD[y] == 0]
                else:
                    part = [y for y in z if rowx[y] == pt]
                for y in part:
                    cols2 = cols + (x, y)
                    if lev + 2 == dim:
                        if det_ok(cols2):
                            yield cols2
                        continue
                    rowy = PAIR[y]
                    z2 = [w for w in z if rowx[w] == 0 and rowy[w] == 0]
                    yield from rec(bi + 1, z2, cols2)

    row0 = PAIR[c1]
    if blocks[0][0] == "h":
        pt = btar[0]
        if symmetric:
            part = [y for y in range(Q) if row0[y] == pt and QD[y] == 0]
        else:
            part = [y for y in range(Q) if row0[y] == pt]
        if dim == 2:
            for y in part:
                if det_ok((c1, y)):
                    yield (c1, y)
            return
        z1 = [w for w in range(Q) if row0[w] == 0]
        for x in part:
            rowx = PAIR[x]
            z2 = [w for w in z1 if rowx[w] == 0]
            yield from rec(1, z2, (c1, x))
    else:
        z1 = [y for y in range(Q) if row0[y] == 0]
        if dim == 1:
            yield (c1,)
            return
        yield from rec(1, z1, (c1,))


def iter_column_tuples(spec: GroupSpec):
    """Yield (mu, columns) for every group element, in permuted coordinates."""
    cfg = build_config(spec)
    for mu in cfg.mus:
        for c1 in partition_roots(cfg, mu):
            for cols in _iter_partition(cfg, mu, c1):
                yield mu, cols


def cols_to_matrix(cfg: EnumConfig, cols) -> MatrixFp:
    """Map a permuted column tuple back to a matrix in standard coordinates."""
    dim, perm, DIG = cfg.dim, cfg.perm, cfg.DIG
    rows = [[0] * dim for _ in range(dim)]
    for j, c in enumerate(cols):
        dig = DIG[c]
        for i in range(dim):
            rows[perm[i]][perm[j]] = dig[i]
    return MatrixFp(rows, cfg.p)


# --- parallel driver ---------------------------------------------------------


def count_partitions(cfg: EnumConfig, parts) -> _Tally:
    tally = _Tally()
    for mu, c1 in parts:
        _census_partition(cfg, mu, c1, tally)
    return tally


def _worker_count(args):
    fam_tag, n, p, parts = args
    cfg = build_config(GroupSpec(Family(fam_tag), n, p))
    t = count_partitions(cfg, parts)
    return t.order, tuple(sorted(t.buckets.items())), t.tw_plus, t.tw_minus


def census_tally(spec: GroupSpec, jobs: int | None = None) -> _Tally:
    """Full enumeration tally, partitioned by (mu, first column)."""
    cfg = build_config(spec)
    parts = all_partitions(cfg)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    if jobs == 1 or len(parts) < 2:
        return count_partitions(cfg, parts)
    nchunks = min(len(parts), jobs * 4)
    chunks = [parts[i::nchunks] for i in range(nchunks)]
    tally = _Tally()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for order, buckets, twp, twm in pool.map(
            _worker_count,
            [(spec.family.value, spec.n, spec.q, chunk) for chunk in chunks],
        ):
            tally.order += order
            tally.tw_plus += twp
            tally.tw_minus += twm
            for k, v in buckets:
                tally.buckets[k] = tally.buckets.get(k, 0) + v
    return tally
