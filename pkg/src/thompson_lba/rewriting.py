"""Single-step rewriting oracle on raw words.

Every move below is an instance (or direct consequence) of the defining
relation x_i^-1 x_k x_i = x_{k+1} (k > i), a free cancellation, or a free
insertion, applied at one explicit position.  The oracle never normalizes;
it exists so that tests can check the normalizer against something that
knows nothing about seminormal forms: one applicable move must never change
the value of `normalize`.

Moves (s is +1 or -1, written as exponents):

    pos_left     x_b^s x_a      ->  x_a x_{b+1}^s        (a < b)
    pos_right    x_a x_m^s      ->  x_{m-1}^s x_a        (m >= a+2)
    neg_right    x_a^-1 x_b^s   ->  x_{b+1}^s x_a^-1     (a < b)
    neg_left     x_m^s x_a^-1   ->  x_a^-1 x_{m-1}^s     (m >= a+2)
    contract     x_i^-1 x_k^s x_i -> x_{k+1}^s           (i < k)
    expand,i     x_m^s          ->  x_i^-1 x_{m-1}^s x_i (i <= m-2)
    cancel       x_j^s x_j^-s   ->  (empty)
    insert,j,s   (empty)        ->  x_j^s x_j^-s
"""

from __future__ import annotations

from .group import Atom


class RewriteError(ValueError):
    """The requested move does not match the word at that position."""


def apply_relation(word, position, variant):
    """Apply one rewrite move; returns a new word spelling the same element.

    `variant` is either a move name or a tuple (name, *parameters) for the
    parameterized moves "expand" and "insert".  Raises RewriteError when the
    pattern does not match at `position`.
    """
    w = list(word)
    name, args = (variant[0], variant[1:]) if isinstance(variant, tuple) else (variant, ())
    n = len(w)

    def need(count):
        if position < 0 or position + count > n:
            raise RewriteError(f"{name}: position {position} out of range")

    if name == "pos_left":
        need(2)
        (b, sb), (a, sa) = w[position], w[position + 1]
        if sa != 1 or a >= b:
            raise RewriteError("pos_left needs x_b^s x_a with a < b")
        w[position : position + 2] = [Atom(a, 1), Atom(b + 1, sb)]
    elif name == "pos_right":
        need(2)
        (a, sa), (m, sm) = w[position], w[position + 1]
        if sa != 1 or m < a + 2:
            raise RewriteError("pos_right needs x_a x_m^s with m >= a+2")
        w[position : position + 2] = [Atom(m - 1, sm), Atom(a, 1)]
    elif name == "neg_right":
        need(2)
        (a, sa), (b, sb) = w[position], w[position + 1]
        if sa != -1 or a >= b:
            raise RewriteError("neg_right needs x_a^-1 x_b^s with a < b")
        w[position : position + 2] = [Atom(b + 1, sb), Atom(a, -1)]
    elif name == "neg_left":
        need(2)
        (m, sm), (a, sa) = w[position], w[position + 1]
        if sa != -1 or m < a + 2:
            raise RewriteError("neg_left needs x_m^s x_a^-1 with m >= a+2")
        w[position : position + 2] = [Atom(a, -1), Atom(m - 1, sm)]
    elif name == "contract":
        need(3)
        (i, si), (k, sk), (i2, si2) = w[position : position + 3]
        if not (si == -1 and si2 == 1 and i == i2 and k > i):
            raise RewriteError("contract needs x_i^-1 x_k^s x_i with i < k")
        w[position : position + 3] = [Atom(k + 1, sk)]
    elif name == "expand":
        need(1)
        (i,) = args
        m, sm = w[position]
        if i < 0 or i > m - 2:
            raise RewriteError("expand needs a conjugator index i <= m-2")
        w[position : position + 1] = [Atom(i, -1), Atom(m - 1, sm), Atom(i, 1)]
    elif name == "cancel":
        need(2)
        (j, sj), (j2, sj2) = w[position], w[position + 1]
        if j != j2 or sj != -sj2:
            raise RewriteError("cancel needs x_j^s x_j^-s")
        del w[position : position + 2]
    elif name == "insert":
        j, s = args
        if position < 0 or position > n:
            raise RewriteError("insert: position out of range")
        if j < 0 or s not in (1, -1):
            raise RewriteError("insert needs index >= 0 and sign +-1")
        w[position:position] = [Atom(j, s), Atom(j, -s)]
    else:
        raise RewriteError(f"unknown variant {name!r}")
    return tuple(w)


def enumerate_moves(word, insert_indices=None):
    """All (position, variant) pairs applicable to `word`.

    Insertion positions are enumerated for the given index set (default:
    indices present in the word plus {0, 1}), keeping the move list finite.
    """
    w = tuple(word)
    n = len(w)
    moves = []
    for p in range(n - 1):
        (i1, s1), (i2, s2) = w[p], w[p + 1]
        if s2 == 1 and i2 < i1:
            moves.append((p, "pos_left"))
        if s1 == 1 and i2 >= i1 + 2:
            moves.append((p, "pos_right"))
        if s1 == -1 and i2 > i1:
            moves.append((p, "neg_right"))
        if s2 == -1 and i1 >= i2 + 2:
            moves.append((p, "neg_left"))
        if i1 == i2 and s1 == -s2:
            moves.append((p, "cancel"))
    for p in range(n - 2):
        (i1, s1), (k, _sk), (i3, s3) = w[p], w[p + 1], w[p + 2]
        if s1 == -1 and s3 == 1 and i1 == i3 and k > i1:
            moves.append((p, "contract"))
    for p in range(n):
        m, _sm = w[p]
        for i in range(0, m - 1):
            moves.append((p, ("expand", i)))
    if insert_indices is None:
        insert_indices = sorted({i for i, _ in w} | {0, 1})
    for p in range(n + 1):
        for j in insert_indices:
            for s in (1, -1):
                moves.append((p, ("insert", j, s)))
    return moves
