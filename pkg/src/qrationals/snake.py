"""Snake graphs, perfect matchings, and the area statistic.

A word w of length n gives a staircase of n+1 unit cells: the cell of a
prefix p sits at (number of 0s in p, number of 1s in p), so a 0 steps
right and a 1 steps up.  The snake graph G(w) is the union of the four
unit-square edges of every cell: 2n+4 vertices and 3n+4 edges.

Matchings are bitmasks over the edge list; edges are canonical pairs of
lattice points, each pair sorted lexicographically.  The area of a
matching m counts the cells enclosed by the symmetric difference with
the basic matching, and the map to the rational world goes through
theta: the snake of x is G(theta(W(x))).
"""

from itertools import product

from .cf import cf_even, word_of
from .qpoly import Poly
from .words import check_word, theta

__all__ = [
    "Snake",
    "snake_of_word",
    "snake_word",
    "snake_of_rational",
    "enumerate_matchings",
    "matchings_by_backtracking",
    "area_histogram",
    "area_statistics",
    "matching_statistics",
    "phi",
    "phi_by_pop",
    "prefix_suffix_table",
    "matching_edges",
    "snake_to_svg",
]


def _square_edges(cx, cy):
    """Bottom, right, top, left edges of the unit square at (cx, cy)."""
    return (
        ((cx, cy), (cx + 1, cy)),
        ((cx + 1, cy), (cx + 1, cy + 1)),
        ((cx, cy + 1), (cx + 1, cy + 1)),
        ((cx, cy), (cx, cy + 1)),
    )


class Snake(object):
    """Snake graph of a binary word, with edge-indexed matchings."""

    def __init__(self, word):
        check_word(word)
        self.word = word
        cells = [(0, 0)]
        for c in word:
            cx, cy = cells[-1]
            cells.append((cx + 1, cy) if c == "0" else (cx, cy + 1))
        self.cells = cells
        self.edges = []
        self.edge_index = {}
        self.squares = []
        for cx, cy in cells:
            idxs = []
            for e in _square_edges(cx, cy):
                if e not in self.edge_index:
                    self.edge_index[e] = len(self.edges)
                    self.edges.append(e)
                idxs.append(self.edge_index[e])
            self.squares.append(tuple(idxs))
        n = len(word)
        assert len(self.edges) == 3 * n + 4
        self.vertex_edges = {}
        for i, e in enumerate(self.edges):
            for v in e:
                self.vertex_edges.setdefault(v, []).append(i)
        assert len(self.vertex_edges) == 2 * n + 4
        self.basic_mask = self._basic_mask()
        self.ray_masks = self._ray_masks()

    def __repr__(self):
        return "Snake(%r)" % self.word

    def _basic_mask(self):
        """Alternating boundary edges, the class through the last cell's
        right vertical edge."""
        hits = [0] * len(self.edges)
        for sq in self.squares:
            for i in sq:
                hits[i] += 1
        adj = {}
        for i, cnt in enumerate(hits):
            if cnt == 1:
                for v in self.edges[i]:
                    adj.setdefault(v, []).append(i)
        assert all(len(es) == 2 for es in adj.values())
        cx, cy = self.cells[-1]
        start = self.edge_index[((cx + 1, cy), (cx + 1, cy + 1))]
        seq = [start]
        prev = start
        cur = self.edges[start][1]
        while True:
            e1, e2 = adj[cur]
            nxt = e2 if e1 == prev else e1
            if nxt == start:
                break
            seq.append(nxt)
            p, r = self.edges[nxt]
            cur = r if p == cur else p
            prev = nxt
        assert len(seq) == 2 * len(self.word) + 4
        return sum(1 << e for e in seq[0::2])

    def _ray_masks(self):
        """For each cell, the vertical snake edges a leftward ray from the
        cell's center crosses: edges {(x,cy),(x,cy+1)} with x <= cx."""
        masks = []
        for cx, cy in self.cells:
            m = 0
            for i, ((x1, y1), (x2, y2)) in enumerate(self.edges):
                if x1 == x2 and min(y1, y2) == cy and x1 <= cx:
                    m |= 1 << i
            masks.append(m)
        return masks

    def first_edge(self, mask):
        """Index of the matching edge covering the origin vertex."""
        bottom, _, _, left = self.squares[0]
        has_bottom = mask >> bottom & 1
        has_left = mask >> left & 1
        assert has_bottom + has_left == 1
        return bottom if has_bottom else left

    def classify(self, mask):
        """'perp' or 'par' by the first-edge orientation against |w| parity:
        perpendicular means horizontal first edge for even |w|, vertical
        for odd |w|; equivalently the first edge is not the basic one."""
        horizontal = self.first_edge(mask) == self.squares[0][0]
        if len(self.word) % 2 == 0:
            return "perp" if horizontal else "par"
        return "par" if horizontal else "perp"

    def enclosed_cells(self, mask):
        """Cells inside the cycles of the symmetric difference with the
        basic matching, by ray-crossing parity."""
        d = mask ^ self.basic_mask
        return [j for j, rm in enumerate(self.ray_masks) if bin(d & rm).count("1") & 1]

    def area(self, mask):
        return len(self.enclosed_cells(mask))

    def _interfaces(self):
        """Vertex pair shared between consecutive cells, per cell."""
        out = []
        for i in range(len(self.cells) - 1):
            cx, cy = self.cells[i]
            if self.word[i] == "0":
                out.append(((cx + 1, cy), (cx + 1, cy + 1)))
            else:
                out.append(((cx, cy + 1), (cx + 1, cy + 1)))
        out.append(())
        return out

    def _transition_tables(self):
        """Per cell: incoming interface coverage -> [(edge subset mask,
        outgoing coverage)].  Each cell owns its square's edges except the
        one shared with the previous cell; a subset is valid when it is
        vertex-disjoint, avoids covered vertices, and covers every vertex
        that appears in no later square."""
        cells = self.cells
        deadline = {}
        corners = []
        for i, (cx, cy) in enumerate(cells):
            vs = ((cx, cy), (cx + 1, cy), (cx, cy + 1), (cx + 1, cy + 1))
            corners.append(vs)
            for v in vs:
                deadline[v] = i
        ifaces = self._interfaces()
        tables = []
        prev_iface = ()
        for i in range(len(cells)):
            owned = list(self.squares[i])
            if i:
                cx, cy = cells[i - 1]
                shared = _square_edges(cx, cy)[1 if self.word[i - 1] == "0" else 2]
                owned.remove(self.edge_index[shared])
            table = {}
            for state in product((0, 1), repeat=len(prev_iface)):
                covered = frozenset(v for v, s in zip(prev_iface, state) if s)
                outs = []
                for bits in range(1 << len(owned)):
                    chosen = [owned[j] for j in range(len(owned)) if bits >> j & 1]
                    seen = set()
                    ok = True
                    for e in chosen:
                        for v in self.edges[e]:
                            if v in seen or v in covered:
                                ok = False
                                break
                            seen.add(v)
                        if not ok:
                            break
                    if not ok:
                        continue
                    newly = covered | seen
                    if any(deadline[v] == i and v not in newly for v in corners[i]):
                        continue
                    out_state = tuple(int(v in newly) for v in ifaces[i])
                    outs.append((sum(1 << e for e in chosen), out_state))
                table[state] = outs
            tables.append(table)
            prev_iface = ifaces[i]
        return tables


def snake_of_word(w):
    return Snake(w)


def snake_word(x):
    """The word whose snake realizes x: theta applied to W(cf_even(x))."""
    return theta(word_of(cf_even(x)))


def snake_of_rational(x):
    """Snake with a_0 + ... + a_{2l-1} cells realizing x.

    >>> from fractions import Fraction
    >>> len(snake_of_rational(Fraction(27, 10)).cells)
    8
    >>> snake_of_rational(Fraction(2, 7)).word
    '0100'
    """
    return Snake(snake_word(x))


def enumerate_matchings(g):
    """All perfect matchings as sorted edge masks, by a first-to-last
    scan over cells carrying only the coverage of the two vertices shared
    with the next cell.

    >>> len(enumerate_matchings(Snake("0100")))
    9
    >>> len(enumerate_matchings(Snake("")))
    2
    """
    tables = g._transition_tables()
    last = len(g.cells)
    out = []
    stack = [(0, (), 0)]
    while stack:
        i, state, mask = stack.pop()
        if i == last:
            out.append(mask)
            continue
        for tmask, nstate in tables[i][state]:
            stack.append((i + 1, nstate, mask | tmask))
    out.sort()
    return out


def matchings_by_backtracking(g):
    """Independent oracle: match the smallest uncovered vertex each step."""
    verts = sorted(g.vertex_edges)
    vid = {v: i for i, v in enumerate(verts)}
    incident = [g.vertex_edges[v] for v in verts]
    endpoints = [(vid[a], vid[b]) for a, b in g.edges]
    nv = len(verts)
    out = []

    def extend(covered, mask):
        v = 0
        while v < nv and covered >> v & 1:
            v += 1
        if v == nv:
            out.append(mask)
            return
        for e in incident[v]:
            a, b = endpoints[e]
            u = b if a == v else a
            if not covered >> u & 1:
                extend(covered | 1 << v | 1 << u, mask | 1 << e)

    extend(0, 0)
    out.sort()
    return out


def area_histogram(g):
    """{area: matching count} over all matchings, streamed without
    materializing the matchings; cell parities are final as soon as the
    scan passes the cell, since a cell's ray mask only involves edges of
    itself and earlier cells."""
    tables = g._transition_tables()
    basic = g.basic_mask
    rays = g.ray_masks
    last = len(g.cells)
    hist = {}
    stack = [(0, (), 0, 0)]
    while stack:
        i, state, mask, ar = stack.pop()
        if i == last:
            hist[ar] = hist.get(ar, 0) + 1
            continue
        for tmask, nstate in tables[i][state]:
            m2 = mask | tmask
            par = bin((m2 ^ basic) & rays[i]).count("1") & 1
            stack.append((i + 1, nstate, m2, ar + par))
    return hist


def matching_statistics(g):
    """(sum over perpendicular, sum over parallel) of q^area.

    >>> tuple(str(p) for p in matching_statistics(Snake("0100")))
    ('q^5+q^4', 'q^4+2*q^3+2*q^2+q+1')
    """
    perp = Poly()
    par = Poly()
    for m in enumerate_matchings(g):
        t = Poly.term(1, g.area(m))
        if g.classify(m) == "perp":
            perp = perp + t
        else:
            par = par + t
    return perp, par


def area_statistics(x):
    """Area statistics of the snake of x, split perpendicular/parallel.

    >>> from fractions import Fraction
    >>> tuple(str(p) for p in area_statistics(Fraction(2, 7)))
    ('q^5+q^4', 'q^4+2*q^3+2*q^2+q+1')
    >>> tuple(str(p) for p in area_statistics(1))
    ('q', '1')
    """
    return matching_statistics(snake_of_rational(x))


def matching_edges(g, mask):
    """Edge pairs of a matching mask, in index order."""
    return tuple(e for i, e in enumerate(g.edges) if mask >> i & 1)


_UNIT_VERTICALS = frozenset({((0, 0), (0, 1)), ((1, 0), (1, 1))})


def _pop_first_cell(m, letter):
    """Erase the first cell from a matching given as an edge set, and
    translate the rest back to the origin."""
    uh = ((0, 0), (1, 0))
    uv = ((0, 0), (0, 1))
    square = frozenset(_square_edges(0, 0))
    if letter == "0":
        out = m - {uv} if uv in m else (m ^ square) - {uv}
        dx, dy = -1, 0
    else:
        out = m - {uh} if uh in m else (m ^ square) - {uh}
        dx, dy = 0, -1
    return frozenset(
        (((x1 + dx, y1 + dy), (x2 + dx, y2 + dy))) for (x1, y1), (x2, y2) in out
    )


def phi_by_pop(m, word):
    """Ideal of a matching by the one-cell recursion: record whether the
    matching is perpendicular, pop the first cell, shift the rest up."""
    if not word:
        return 0 if m == _UNIT_VERTICALS else 1
    horizontal = ((0, 0), (1, 0)) in m
    perp = horizontal if len(word) % 2 == 0 else not horizontal
    rest = phi_by_pop(_pop_first_cell(m, word[0]), word[1:])
    return rest << 1 | int(perp)


def phi(g, mask):
    """Ideal of F(theta(w)) attached to a matching of G(w): element j is
    in the ideal iff cell j is enclosed.  The geometric reading and the
    pop recursion must agree.

    >>> g = Snake("0100")
    >>> phi(g, g.basic_mask)
    0
    >>> len(set(phi(g, m) for m in enumerate_matchings(g)))
    9
    """
    ideal = 0
    for j in g.enclosed_cells(mask):
        ideal |= 1 << j
    assert ideal == phi_by_pop(frozenset(matching_edges(g, mask)), g.word)
    return ideal


def prefix_suffix_table(x):
    """(perpendicular count, parallel count) for the snakes of every
    prefix and every suffix of the word of x, by length 0..n.

    >>> prefix_suffix_table(1)
    {'word': '', 'prefixes': [(1, 1)], 'suffixes': [(1, 1)]}
    """
    w = snake_word(x)

    def counts(v):
        g = Snake(v)
        perp = par = 0
        for m in enumerate_matchings(g):
            if g.classify(m) == "perp":
                perp += 1
            else:
                par += 1
        return (perp, par)

    return {
        "word": w,
        "prefixes": [counts(w[:j]) for j in range(len(w) + 1)],
        "suffixes": [counts(w[len(w) - j:]) for j in range(len(w) + 1)],
    }


def snake_to_svg(g, matching=None):
    """Drawing with the basic matching dashed, a given matching solid,
    and its enclosed cells shaded."""
    step = 40
    pad = 20
    max_x = max(cx for cx, _ in g.cells) + 1
    max_y = max(cy for _, cy in g.cells) + 1
    width = 2 * pad + step * max_x
    height = 2 * pad + step * max_y

    def pt(v):
        return (pad + step * v[0], pad + step * (max_y - v[1]))

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">' % (width, height)
    ]
    shaded = g.enclosed_cells(matching) if matching is not None else []
    for j in shaded:
        cx, cy = g.cells[j]
        x, y = pt((cx, cy + 1))
        parts.append(
            '<rect x="%d" y="%d" width="%d" height="%d" fill="lightgray"/>'
            % (x, y, step, step)
        )
    for i, (a, b) in enumerate(g.edges):
        (x1, y1), (x2, y2) = pt(a), pt(b)
        if matching is not None and matching >> i & 1:
            style = 'stroke="black" stroke-width="3"'
        elif g.basic_mask >> i & 1:
            style = 'stroke="black" stroke-dasharray="4 3"'
        else:
            style = 'stroke="gray" stroke-width="0.5"'
        parts.append(
            '<line x1="%d" y1="%d" x2="%d" y2="%d" %s/>' % (x1, y1, x2, y2, style)
        )
    for v in sorted(g.vertex_edges):
        x, y = pt(v)
        parts.append('<circle cx="%d" cy="%d" r="2.5" fill="black"/>' % (x, y))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
