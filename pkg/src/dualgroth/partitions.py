"""Integer partitions, skew shapes and the containment order on Young's lattice.

Partitions are plain tuples of weakly decreasing positive integers, with no
trailing zeros; the empty partition is ``()``.  All comparisons pad with
zeros on the fly.  A skew shape is an ordered pair ``(outer, inner)`` with
``inner`` contained in ``outer``.
"""

from functools import cache


def as_partition(parts):
    """Normalize an iterable of integers to a canonical partition tuple.

    Raises ValueError unless the parts are weakly decreasing positive
    integers (trailing zeros are stripped).
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError("partition parts must be positive: %r" % (parts,))
        if i + 1 < len(p) and x < p[i + 1]:
            raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
    return p


def size(la):
    return sum(la)


def contains(mu, la):
    """True iff mu_i <= la_i for all i, i.e. mu sits inside la."""
    if len(mu) > len(la):
        return all(x == 0 for x in mu[len(la):]) and contains(mu[:len(la)], la)
    return all(m <= l for m, l in zip(mu, la))


@cache
def transpose(la):
    """Conjugate partition: column lengths of la."""
    if not la:
        return ()
    return tuple(sum(1 for x in la if x >= j) for j in range(1, la[0] + 1))


def sort_key(la):
    """Key for the canonical order: size ascending, reverse-lex within size."""
    return (sum(la), tuple(-x for x in la))


def cells(outer, inner=()):
    """Cells of the skew shape outer/inner as 0-based (row, col) pairs."""
    out = []
    for r, row_len in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        for c in range(lo, row_len):
            out.append((r, c))
    return out


def column_count(outer, inner=()):
    """Number of columns containing at least one cell of outer/inner."""
    lt, it = transpose(outer), transpose(inner)
    return sum(1 for c in range(len(lt)) if lt[c] > (it[c] if c < len(it) else 0))


def _check_skew(outer, inner):
    if not contains(inner, outer):
        raise ValueError("not a skew shape: %s does not contain %s"
                         % (format_partition(outer), format_partition(inner)))


def is_horizontal_strip(outer, inner):
    """No column of outer/inner holds two cells."""
    _check_skew(outer, inner)
    for i in range(len(outer) - 1):
        if (inner[i] if i < len(inner) else 0) < outer[i + 1]:
            return False
    return True


def is_vertical_strip(outer, inner):
    """No row of outer/inner holds two cells."""
    _check_skew(outer, inner)
    return all(outer[i] - (inner[i] if i < len(inner) else 0) <= 1
               for i in range(len(outer)))


def is_rook_strip(outer, inner):
    """At most one cell per row and per column (all cells removable corners)."""
    return is_horizontal_strip(outer, inner) and is_vertical_strip(outer, inner)


def strip_kind(outer, inner):
    """Flags among {'horizontal', 'vertical', 'rook'} for outer/inner."""
    flags = set()
    if is_horizontal_strip(outer, inner):
        flags.add("horizontal")
    if is_vertical_strip(outer, inner):
        flags.add("vertical")
    if "horizontal" in flags and "vertical" in flags:
        flags.add("rook")
    return flags


def interval(mu, la):
    """All nu with mu <= nu <= la, in canonical order.

    Raises ValueError if mu is not contained in la.
    """
    if not contains(mu, la):
        raise ValueError("interval undefined: %s not contained in %s"
                         % (format_partition(mu), format_partition(la)))
    out = []

    def build(row, prev, acc):
        if row == len(la):
            out.append(tuple(x for x in acc if x > 0))
            return
        lo = mu[row] if row < len(mu) else 0
        hi = min(la[row], prev)
        for v in range(lo, hi + 1):
            build(row + 1, v, acc + [v])

    build(0, la[0] if la else 0, [])
    out.sort(key=sort_key)
    return out


@cache
def subpartitions(la):
    """All partitions contained in la, canonical order (cached)."""
    return tuple(interval((), la))


def mobius(mu, nu):
    """Moebius function of Young's lattice on the pair (mu, nu).

    Equals (-1)^|nu/mu| when nu/mu is a rook strip, 0 otherwise
    (including when mu is not contained in nu).
    """
    if not contains(mu, nu):
        return 0
    if not is_rook_strip(nu, mu):
        return 0
    return (-1) ** (size(nu) - size(mu))


def a_statistic(alpha, beta):
    """Count i >= 1 with beta_i > alpha_{i+1} and beta_i > beta_{i+1}.

    Out-of-range parts read as zero.
    """
    def part(p, i):
        return p[i - 1] if 1 <= i <= len(p) else 0

    return sum(1 for i in range(1, len(beta) + 1)
               if part(beta, i) > part(alpha, i + 1) and part(beta, i) > part(beta, i + 1))


@cache
def partitions_of(n):
    """All partitions of n, in reverse-lexicographic order ((n) first)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []

    def build(remaining, maxpart, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for v in range(min(maxpart, remaining), 0, -1):
            build(remaining - v, v, acc + [v])

    build(n, n, [])
    return tuple(out)


def partitions_up_to(n):
    """All partitions of size <= n in canonical order."""
    out = []
    for m in range(n + 1):
        out.extend(partitions_of(m))
    return out


def partitions_of_containing(n, la):
    """Partitions of n that contain la, canonical order."""
    return [p for p in partitions_of(n) if contains(la, p)]


def horizontal_strip_additions(mu, k):
    """All la obtained from mu by adding a horizontal strip of exactly k cells."""
    out = []
    n = len(mu)

    def build(r, left, acc):
        if r == n + 1:
            if left == 0:
                out.append(tuple(x for x in acc if x > 0))
            return
        base = mu[r] if r < n else 0
        hi = base + left
        if r >= 1:
            hi = min(hi, mu[r - 1])  # at most one new cell per column
        for v in range(base, hi + 1):
            build(r + 1, left - (v - base), acc + [v])

    build(0, k, [])
    return sorted(set(out), key=sort_key)


def vertical_strip_additions(la, k):
    """All mu obtained from la by adding a vertical strip of exactly k cells."""
    return sorted({transpose(m) for m in horizontal_strip_additions(transpose(la), k)},
                  key=sort_key)


def vertical_strip_removals(nu):
    """All eta inside nu with nu/eta a vertical strip, canonical order."""
    out = []

    def build(row, acc):
        if row == len(nu):
            out.append(tuple(x for x in acc if x > 0))
            return
        for v in (nu[row], nu[row] - 1):
            if v < 0:
                continue
            if acc and v > acc[-1]:
                continue
            build(row + 1, acc + [v])

    build(0, [])
    return sorted(set(out), key=sort_key)


def format_partition(la):
    """Bracketed text form, e.g. ``[3,2,1]`` or ``[]``."""
    return "[" + ",".join(str(x) for x in la) + "]"


def format_skew(outer, inner):
    """Text form of a skew shape, e.g. ``[3,2,1]/[1]``."""
    return format_partition(outer) + "/" + format_partition(inner)


def parse_partition(text):
    """Parse the bracketed text form back to a tuple."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("expected [a,b,...], got %r" % text)
    body = s[1:-1].strip()
    if not body:
        return ()
    return as_partition(body.split(","))
