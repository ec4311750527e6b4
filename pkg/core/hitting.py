# core/hitting.py
"""Exact minimum hitting sets over bitmask families.

A set ``T`` teaches ``c`` within ``C`` exactly when it meets every difference set
``c ^ c'``, so teaching dimension reduces to a minimum hitting set over at most
``|C| - 1`` masks of ``n`` bits. The solver is branch-and-bound:

* upper bound from the greedy cover,
* lower bound from a greedily packed subfamily of pairwise disjoint members,
* branching on the elements of a smallest uncovered member, forbidding the
  elements already tried in earlier sibling branches.
"""


def minimal_members(family):
    """Drop duplicates and supersets; hitting the minimal members hits everything."""
    kept = []
    for member in sorted(set(family), key=lambda m: (m.bit_count(), m)):
        if not any(k & member == k for k in kept):
            kept.append(member)
    return kept


def disjoint_packing_bound(family):
    used = 0
    count = 0
    for member in sorted(family, key=int.bit_count):
        if not member & used:
            used |= member
            count += 1
    return count


def greedy_hitting_set(family):
    chosen = 0
    remaining = list(family)
    while remaining:
        counts = {}
        for member in remaining:
            bits = member
            while bits:
                low = bits & -bits
                counts[low] = counts.get(low, 0) + 1
                bits ^= low
        pick = max(counts, key=lambda bit: (counts[bit], bit))
        chosen |= pick
        remaining = [m for m in remaining if not m & pick]
    return chosen


def is_hitting_set(mask, family):
    return all(member & mask for member in family)


def min_hitting_set(family, limit=None):
    """Smallest mask meeting every member of ``family``.

    With ``limit`` the search only looks for solutions of at most ``limit`` elements
    and returns ``None`` when none exists. An empty member makes the family
    unhittable and is reported the same way.
    """
    members = minimal_members(family)
    if not members:
        return 0
    if members[0] == 0:
        return None

    best_mask = greedy_hitting_set(members)
    best_size = best_mask.bit_count()
    if limit is not None and best_size > limit:
        best_mask, best_size = None, limit + 1

    def branch(sets, chosen, size):
        nonlocal best_mask, best_size
        if not sets:
            if size < best_size:
                best_mask, best_size = chosen, size
            return
        if size + disjoint_packing_bound(sets) >= best_size:
            return
        pivot = min(sets, key=int.bit_count)
        excluded = 0
        candidates = pivot
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            reduced = []
            for member in sets:
                if member & low:
                    continue
                member &= ~excluded
                if not member:
                    break
                reduced.append(member)
            else:
                branch(reduced, chosen | low, size + 1)
            excluded |= low

    branch(members, 0, 0)
    return best_mask
