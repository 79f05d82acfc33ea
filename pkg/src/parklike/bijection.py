"""The bijection between parking-like and tree-like structures (identity chi).

Forward direction: a parking-like sequence (sp_1, ..., sp_{n+1}) orders its
labels by slot first, ambient order second (the q-order).  sp_1 becomes the
root structure; the structure sp_{i+1} becomes the node of the i-th label in
q-order.  Backward direction: breadth-first traversal, heads sorted at each
step, emits the slots back in q-order.  Both directions are exact inverses;
only the identity chi is admitted.
"""

from __future__ import annotations

from collections import deque

from .chi import ChiMap
from .errors import ChiNotIdentityError, InvalidStructureError
from .parking import ParkingLike, validate_parking
from .structures import underlying
from .treelike import TreeLike


def q_order(p: ParkingLike) -> list:
    """Labels ordered by slot index, then by the usual order within a slot."""
    if not p.chi.is_identity:
        raise ChiNotIdentityError("q-order is defined for the identity chi")
    order = []
    for s in p.sequence:
        order.extend(sorted(underlying(s)))
    return order


def park_to_tree(p: ParkingLike) -> TreeLike:
    """Attach slot i+1's structure at the i-th label of the q-order."""
    if not p.chi.is_identity:
        raise ChiNotIdentityError("the bijection is defined for the identity chi")
    validate_parking(p)
    q = q_order(p)
    if len(p.sequence) != len(q) + 1:
        raise InvalidStructureError("sequence length is not label count + 1")
    node_struct = {q[i]: p.sequence[i + 1] for i in range(len(q))}

    def build(label) -> TreeLike:
        root = node_struct[label]
        return TreeLike(
            root, tuple((v, build(v)) for v in sorted(underlying(root)))
        )

    top = p.sequence[0]
    return TreeLike(top, tuple((v, build(v)) for v in sorted(underlying(top))))


def tree_to_park(t: TreeLike) -> ParkingLike:
    """Breadth-first inverse: dequeue order reproduces the q-order."""
    sequence = [t.root]
    queue: deque = deque()
    subtree_at = {}
    for head, sub in t.children:
        subtree_at[head] = sub
    queue.extend(head for head, _sub in t.children)
    seen = set(subtree_at)
    while queue:
        label = queue.popleft()
        node = subtree_at[label]
        sequence.append(node.root)
        for head, sub in node.children:
            if head in seen:
                raise InvalidStructureError(f"label {head} appears twice")
            seen.add(head)
            subtree_at[head] = sub
            queue.append(head)
    return ParkingLike(ChiMap.identity(), tuple(sequence))
