"""Low-level merge kernels for normal-form arithmetic.

A group element is a pair of nondecreasing index arrays (pos, neg) standing
for the word  x_{pos[0]} ... x_{pos[-1]} . x_{neg[-1]}^-1 ... x_{neg[0]}^-1,
i.e. both arrays are stored innermost-first.  Multiplying two such pairs
resolves the inner boundary neg_a . pos_b, folds the leftovers into the outer
positive/negative halves, and finally enforces the cancellation condition
(an index present on both sides must be shadowed by index+1 on either side).

All three passes are linear in the total number of atoms, which is what makes
the divide-and-conquer normalization O(n log n) overall.

Two implementations are provided: a pure-Python one (always available) and a
numba-compiled twin used automatically when numba imports cleanly.  Set
THOMPSON_LBA_PURE=1 to force the pure path.
"""

from __future__ import annotations

import os

import numpy as np

_I64 = np.int64


# ---------------------------------------------------------------------------
# pure-Python reference implementation (operates on Python lists)
# ---------------------------------------------------------------------------

def _merge_mid_py(neg_a, pos_b):
    """Resolve the boundary word  neg_a(word) . pos_b(word).

    Each positive atom climbs the negative stack from its innermost end:
    it slides past strictly lower levels (gaining +1 per level), cancels a
    level of equal effective depth, or pops out above the remainder (bumping
    every remaining stack entry by 1).  Returns (emerged_pos, surviving_neg),
    both nondecreasing.
    """
    n = len(neg_a)
    kept = []            # finalized surviving stack entries (below the cursor)
    i = 0                # next raw stack entry to consider
    inc = 0              # pending +1s for raw entries neg_a[i:]
    out = []
    for c in pos_b:
        while True:
            if i == n:
                out.append(c + len(kept))
                break
            g = neg_a[i] + inc - len(kept)
            if g < c:
                kept.append(neg_a[i] + inc)
                i += 1
            elif g == c:
                i += 1       # cancellation: atom and stack entry consume each other
                break
            else:
                out.append(c + len(kept))
                inc += 1
                break
    for k in range(i, n):
        kept.append(neg_a[k] + inc)
    return out, kept


def _merge_pos_py(left, right):
    """Merge two nondecreasing positive words (word order: left then right).

    Every right-hand atom slides left past the larger left-hand entries,
    bumping each one it passes by 1; `inc` counts how many right atoms have
    passed the not-yet-emitted tail of `left`.
    """
    out = []
    i = 0
    n = len(left)
    inc = 0
    for v in right:
        while i < n and left[i] + inc <= v:
            out.append(left[i] + inc)
            i += 1
        out.append(v)
        if i < n:
            inc += 1
    while i < n:
        out.append(left[i] + inc)
        i += 1
    return out


def _cancel_py(pos, neg):
    """Enforce the pairing condition on a sorted (pos, neg) seminormal form.

    Scans both sides from the largest index down.  A common index v with no
    current v+1 anywhere above is cancelled (one copy each side); every
    previously emitted entry is then implicitly decremented, which is
    recorded lazily via per-entry cancellation stamps.
    """
    ip = len(pos) - 1
    iq = len(neg) - 1
    rp, sp = [], []      # raw emitted values (descending) + stamp at emission
    rq, sq = [], []
    cancels = 0
    min_above = -1       # smallest current value already emitted; -1 = none
    while ip >= 0 and iq >= 0:
        vp = pos[ip]
        vq = neg[iq]
        if vp > vq:
            rp.append(vp)
            sp.append(cancels)
            min_above = vp
            ip -= 1
        elif vq > vp:
            rq.append(vq)
            sq.append(cancels)
            min_above = vq
            iq -= 1
        elif min_above == vp + 1:
            # shadowed: keep every copy of this index on both sides
            v = vp
            while ip >= 0 and pos[ip] == v:
                rp.append(v)
                sp.append(cancels)
                ip -= 1
            while iq >= 0 and neg[iq] == v:
                rq.append(v)
                sq.append(cancels)
                iq -= 1
            min_above = v
        else:
            ip -= 1
            iq -= 1
            cancels += 1
            if min_above >= 0:
                min_above -= 1
    while ip >= 0:
        rp.append(pos[ip])
        sp.append(cancels)
        ip -= 1
    while iq >= 0:
        rq.append(neg[iq])
        sq.append(cancels)
        iq -= 1
    out_pos = [rp[k] - (cancels - sp[k]) for k in range(len(rp) - 1, -1, -1)]
    out_neg = [rq[k] - (cancels - sq[k]) for k in range(len(rq) - 1, -1, -1)]
    return out_pos, out_neg


def _mul_py(pa, na, pb, nb):
    mid_pos, mid_neg = _merge_mid_py(na, pb)
    pos = _merge_pos_py(pa, mid_pos)
    neg = _merge_pos_py(nb, mid_neg)
    return _cancel_py(pos, neg)


def _mul_arrays_py(pa, na, pb, nb):
    pos, neg = _mul_py(pa.tolist(), na.tolist(), pb.tolist(), nb.tolist())
    return np.asarray(pos, dtype=_I64), np.asarray(neg, dtype=_I64)


# ---------------------------------------------------------------------------
# numba twin (same algorithms over int64 arrays)
# ---------------------------------------------------------------------------

def _build_jit():
    from numba import njit

    @njit(cache=True)
    def merge_mid(neg_a, pos_b):
        n = neg_a.shape[0]
        m = pos_b.shape[0]
        kept = np.empty(n, _I64)
        nk = 0
        out = np.empty(m, _I64)
        no = 0
        i = 0
        inc = 0
        for idx in range(m):
            c = pos_b[idx]
            while True:
                if i == n:
                    out[no] = c + nk
                    no += 1
                    break
                g = neg_a[i] + inc - nk
                if g < c:
                    kept[nk] = neg_a[i] + inc
                    nk += 1
                    i += 1
                elif g == c:
                    i += 1
                    break
                else:
                    out[no] = c + nk
                    no += 1
                    inc += 1
                    break
        res_neg = np.empty(nk + (n - i), _I64)
        res_neg[:nk] = kept[:nk]
        for k in range(i, n):
            res_neg[nk + k - i] = neg_a[k] + inc
        return out[:no].copy(), res_neg

    @njit(cache=True)
    def merge_pos(left, right):
        n = left.shape[0]
        m = right.shape[0]
        out = np.empty(n + m, _I64)
        no = 0
        i = 0
        inc = 0
        for idx in range(m):
            v = right[idx]
            while i < n and left[i] + inc <= v:
                out[no] = left[i] + inc
                no += 1
                i += 1
            out[no] = v
            no += 1
            if i < n:
                inc += 1
        while i < n:
            out[no] = left[i] + inc
            no += 1
            i += 1
        return out

    @njit(cache=True)
    def cancel(pos, neg):
        np_ = pos.shape[0]
        nq = neg.shape[0]
        rp = np.empty(np_, _I64)
        sp = np.empty(np_, _I64)
        rq = np.empty(nq, _I64)
        sq = np.empty(nq, _I64)
        cp = 0
        cq = 0
        ip = np_ - 1
        iq = nq - 1
        cancels = 0
        min_above = -1
        while ip >= 0 and iq >= 0:
            vp = pos[ip]
            vq = neg[iq]
            if vp > vq:
                rp[cp] = vp
                sp[cp] = cancels
                cp += 1
                min_above = vp
                ip -= 1
            elif vq > vp:
                rq[cq] = vq
                sq[cq] = cancels
                cq += 1
                min_above = vq
                iq -= 1
            elif min_above == vp + 1:
                v = vp
                while ip >= 0 and pos[ip] == v:
                    rp[cp] = v
                    sp[cp] = cancels
                    cp += 1
                    ip -= 1
                while iq >= 0 and neg[iq] == v:
                    rq[cq] = v
                    sq[cq] = cancels
                    cq += 1
                    iq -= 1
                min_above = v
            else:
                ip -= 1
                iq -= 1
                cancels += 1
                if min_above >= 0:
                    min_above -= 1
        while ip >= 0:
            rp[cp] = pos[ip]
            sp[cp] = cancels
            cp += 1
            ip -= 1
        while iq >= 0:
            rq[cq] = neg[iq]
            sq[cq] = cancels
            cq += 1
            iq -= 1
        out_pos = np.empty(cp, _I64)
        for k in range(cp):
            out_pos[cp - 1 - k] = rp[k] - (cancels - sp[k])
        out_neg = np.empty(cq, _I64)
        for k in range(cq):
            out_neg[cq - 1 - k] = rq[k] - (cancels - sq[k])
        return out_pos, out_neg

    @njit(cache=True)
    def mul(pa, na, pb, nb):
        mid_pos, mid_neg = merge_mid(na, pb)
        pos = merge_pos(pa, mid_pos)
        neg = merge_pos(nb, mid_neg)
        return cancel(pos, neg)

    return mul


_FORCE_PURE = os.environ.get("THOMPSON_LBA_PURE", "") not in ("", "0")

mul_arrays = _mul_arrays_py
JIT_ENABLED = False

if not _FORCE_PURE:
    try:
        _mul_jit = _build_jit()
        _e = np.empty(0, _I64)
        _mul_jit(_e, _e, np.asarray([0], dtype=_I64), _e)  # trigger compile
        mul_arrays = _mul_jit
        JIT_ENABLED = True
    except Exception:  # pragma: no cover - numba missing or broken
        pass
