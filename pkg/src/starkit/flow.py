"""Small unit-capacity max-flow routines used as search bounds.

Both routines take vertex sets as bitmasks and stop as soon as the flow
exceeds ``limit``; callers only need to know whether a cut of size
<= limit can exist.
"""

from __future__ import annotations

from .topology import bits

_INF = 1 << 30


class EdgeFlowNetwork:
    """Undirected unit-capacity edges between ranks of one graph.

    Arc 2i and 2i+1 are the two directions of edge i; each has capacity 1
    and is the other's residual partner.
    """

    def __init__(self, rows: tuple[int, ...]) -> None:
        n = len(rows)
        self.n = n
        self.head: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            for v in bits(rows[u] >> (u + 1)):
                v += u + 1
                self.out[u].append(len(self.head))
                self.head.append(v)
                self.out[v].append(len(self.head))
                self.head.append(u)

    def max_flow(self, source: int, sink: int, limit: int) -> int:
        """Edge-disjoint source->sink paths (sets contracted), capped at limit+1."""
        if not source or not sink:
            return 0
        head, out = self.head, self.out
        cap = [1] * len(head)
        flow = 0
        src = list(bits(source))
        while flow <= limit:
            parent_arc = {}
            seen = source
            queue = src[:]
            hit = -1
            i = 0
            while i < len(queue) and hit < 0:
                u = queue[i]
                i += 1
                for a in out[u]:
                    if cap[a]:
                        w = head[a]
                        if not seen >> w & 1:
                            seen |= 1 << w
                            parent_arc[w] = a
                            if sink >> w & 1:
                                hit = w
                                break
                            queue.append(w)
            if hit < 0:
                break
            w = hit
            while w in parent_arc:
                a = parent_arc[w]
                cap[a] -= 1
                cap[a ^ 1] += 1
                w = head[a ^ 1]
            flow += 1
        return flow


class VertexFlowNetwork:
    """Vertex-disjoint paths via node splitting: in(v)=2v, out(v)=2v+1.

    Internal arcs in(v)->out(v) have capacity 1, edge arcs out(u)->in(w)
    are uncapacitated.
    """

    def __init__(self, rows: tuple[int, ...]) -> None:
        n = len(rows)
        self.n = n
        head: list[int] = []
        base: list[int] = []
        out: list[list[int]] = [[] for _ in range(2 * n)]

        def add(a: int, b: int, c: int) -> int:
            idx = len(head)
            out[a].append(idx)
            head.append(b)
            base.append(c)
            out[b].append(idx + 1)
            head.append(a)
            base.append(0)
            return idx

        self.internal = [add(2 * v, 2 * v + 1, 1) for v in range(n)]
        for u in range(n):
            for w in bits(rows[u]):
                add(2 * u + 1, 2 * w, _INF)
        self.head, self.base, self.out = head, base, out

    def max_flow(self, source: int, sink: int, blocked: int, limit: int) -> int:
        """Internally vertex-disjoint paths from the set ``source`` to the set
        ``sink`` avoiding ``blocked``; capped at limit+1."""
        if not source or not sink:
            return 0
        head, out = self.head, self.out
        cap = self.base[:]
        for v in bits(blocked):
            cap[self.internal[v]] = 0
        starts = [2 * s + 1 for s in bits(source)]
        # entering a source or blocked vertex is useless
        dead_in = source | blocked
        flow = 0
        while flow <= limit:
            parent_arc = {}
            seen = set(starts)
            queue = starts[:]
            hit = -1
            i = 0
            while i < len(queue) and hit < 0:
                x = queue[i]
                i += 1
                for a in out[x]:
                    if cap[a] <= 0:
                        continue
                    y = head[a]
                    if y in seen:
                        continue
                    v = y >> 1
                    if not y & 1 and dead_in >> v & 1:
                        continue
                    seen.add(y)
                    parent_arc[y] = a
                    if not y & 1 and sink >> v & 1:
                        hit = y
                        break
                    queue.append(y)
            if hit < 0:
                break
            y = hit
            while y in parent_arc:
                a = parent_arc[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = head[a ^ 1]
            flow += 1
        return flow
