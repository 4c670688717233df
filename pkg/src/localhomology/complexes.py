"""Abstract simplicial complexes and their Alexandrov-topology operators.

A complex is stored by its maximal simplices over interned integer vertex
ids; every other face is implicit and enumerated on demand. The integer
order of the interned ids is the fixed total vertex order used everywhere
for orientation signs, so results are reproducible across runs.

Open sets in the Alexandrov topology are unions of stars; closed sets are
exactly the subcomplexes. The operators star, closure, link and frontier
all act on arbitrary subsets of faces and return `SimplexSet` values bound
to their host complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    MalformedInputError,
    MalformedSimplexError,
    UnknownSimplexError,
)

Simplex = tuple[int, ...]


def _label_sort_key(label):
    # Stable order for labels of mixed type within one input simplex.
    return (label.__class__.__name__, label if isinstance(label, (int, float, str)) else repr(label))


def simplex_dimension(simplex: Simplex) -> int:
    return len(simplex) - 1


def facets_with_signs(simplex: Simplex) -> list[tuple[int, Simplex]]:
    """Codimension-one faces with their orientation signs.

    Dropping the vertex at position i contributes the sign (-1)^i; vertex
    order within a simplex is always the ascending interned order.
    """
    out = []
    for i in range(len(simplex)):
        face = simplex[:i] + simplex[i + 1:]
        if face:
            out.append((-1 if i % 2 else 1, face))
    return out


class SimplicialComplex:
    """Locally finite abstract simplicial complex stored by maximal simplices.

    Instances are immutable after construction. The face and cofacet caches
    populate lazily per dimension with immutable values, so concurrent
    readers are safe: a racing recomputation produces the identical tuple.
    """

    __slots__ = ("maximal", "labels", "dim", "_faces_by_dim", "_cofacets", "_face_set")

    def __init__(self, maximal: frozenset[Simplex], labels: tuple[Hashable, ...]):
        # Internal constructor; use from_maximal for label interning and
        # normalization.
        self.maximal = maximal
        self.labels = labels
        self.dim = max((len(s) - 1 for s in maximal), default=-1)
        self._faces_by_dim: dict[int, tuple[Simplex, ...]] = {}
        self._cofacets: dict[int, dict[Simplex, tuple[Simplex, ...]]] = {}
        self._face_set: set[Simplex] | None = None

    @classmethod
    def from_maximal(cls, simplices: Iterable[Sequence[Hashable]]) -> "SimplicialComplex":
        """Build a complex from vertex-label lists.

        Labels are interned to dense integer ids in encounter order; labels
        first seen inside the same simplex are interned in sorted label
        order. Inputs that are faces of other inputs are dropped, so the
        stored maximal set is an antichain.
        """
        intern: dict[Hashable, int] = {}
        canonical: list[Simplex] = []
        for raw in simplices:
            raw = list(raw)
            if not raw:
                raise MalformedSimplexError("empty simplex")
            if len(set(raw)) != len(raw):
                raise MalformedSimplexError(f"repeated vertex in simplex {raw!r}")
            try:
                ordered = sorted(raw, key=_label_sort_key)
            except TypeError as exc:
                raise MalformedSimplexError(f"unorderable labels in simplex {raw!r}") from exc
            for label in ordered:
                if label not in intern:
                    intern[label] = len(intern)
            canonical.append(tuple(sorted(intern[label] for label in raw)))
        survivors: list[Simplex] = []
        for s in canonical:
            s_set = set(s)
            if any(s != t and s_set.issubset(t) for t in canonical):
                continue
            if s not in survivors:
                survivors.append(s)
        labels = tuple(sorted(intern, key=intern.get))
        return cls(frozenset(survivors), labels)

    # -- basic queries ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """All k-dimensional faces, each once, in lexicographic order."""
        if k < 0:
            raise ValueError("dimension must be non-negative")
        if k > self.dim:
            return ()
        cached = self._faces_by_dim.get(k)
        if cached is None:
            found = set()
            for m in self.maximal:
                if len(m) >= k + 1:
                    found.update(combinations(m, k + 1))
            cached = tuple(sorted(found))
            self._faces_by_dim[k] = cached
        return cached

    def all_faces(self) -> Iterator[Simplex]:
        for k in range(self.dim + 1):
            yield from self.faces(k)

    def __iter__(self) -> Iterator[Simplex]:
        return self.all_faces()

    def __len__(self) -> int:
        return sum(len(self.faces(k)) for k in range(self.dim + 1))

    def __contains__(self, simplex) -> bool:
        if not isinstance(simplex, tuple) or not simplex:
            return False
        s = set(simplex)
        return any(s.issubset(m) for m in self.maximal)

    def simplex_with_labels(self, labels: Iterable[Hashable]) -> Simplex:
        """Canonical simplex for a collection of original vertex labels."""
        index = {label: i for i, label in enumerate(self.labels)}
        try:
            simplex = tuple(sorted(index[label] for label in labels))
        except KeyError as exc:
            raise UnknownSimplexError(f"unknown vertex label {exc.args[0]!r}") from exc
        if simplex not in self:
            raise UnknownSimplexError(f"{simplex} is not a face of the complex")
        return simplex

    def labels_of(self, simplex: Simplex) -> tuple[Hashable, ...]:
        return tuple(self.labels[v] for v in simplex)

    def cofacets(self, simplex: Simplex) -> tuple[Simplex, ...]:
        """Faces one dimension up that contain the given simplex."""
        k = len(simplex) - 1
        table = self._cofacets.get(k)
        if table is None:
            table = {}
            for up in self.faces(k + 1):
                for i in range(len(up)):
                    face = up[:i] + up[i + 1:]
                    table.setdefault(face, []).append(up)
            table = {f: tuple(ups) for f, ups in table.items()}
            self._cofacets[k] = table
        return table.get(simplex, ())

    # -- simplex sets and topology operators ------------------------------

    def simplex_set(self, members: Iterable[Simplex]) -> "SimplexSet":
        mem = frozenset(members)
        face_set = self._all_faces_set()
        for s in mem:
            if s not in face_set:
                raise UnknownSimplexError(f"{s} is not a face of the complex")
        return SimplexSet(self, mem)

    def full_set(self) -> "SimplexSet":
        return SimplexSet(self, frozenset(self._all_faces_set()))

    def empty_set(self) -> "SimplexSet":
        return SimplexSet(self, frozenset())

    def _all_faces_set(self) -> set[Simplex]:
        if self._face_set is None:
            self._face_set = set(self.all_faces())
        return self._face_set

    def _coerce(self, subset) -> frozenset[Simplex]:
        if isinstance(subset, SimplexSet):
            if subset.complex is not self:
                raise ValueError("simplex set belongs to a different complex")
            return subset.members
        return self.simplex_set(subset).members

    def star(self, subset) -> "SimplexSet":
        """Smallest open set containing the subset."""
        members = self._coerce(subset)
        seen: set[Simplex] = set()
        stack = list(members)
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            stack.extend(self.cofacets(s))
        return SimplexSet(self, frozenset(seen))

    def closure(self, subset) -> "SimplexSet":
        """Smallest closed set containing the subset (a subcomplex)."""
        members = self._coerce(subset)
        out: set[Simplex] = set()
        for s in members:
            for r in range(1, len(s) + 1):
                out.update(combinations(s, r))
        return SimplexSet(self, frozenset(out))

    def link(self, subset) -> "SimplexSet":
        """cl(star A) minus (star A union cl A)."""
        st = self.star(subset)
        cl_st = self.closure(st)
        cl = self.closure(subset)
        return SimplexSet(self, cl_st.members - (st.members | cl.members))

    def frontier(self, subset) -> "SimplexSet":
        """cl A intersected with cl(X minus A)."""
        members = self._coerce(subset)
        cl = self.closure(members)
        complement = self._all_faces_set() - members
        cl_comp = self.closure(SimplexSet(self, frozenset(complement)))
        return SimplexSet(self, cl.members & cl_comp.members)

    def is_open(self, subset) -> bool:
        members = self._coerce(subset)
        return self.star(SimplexSet(self, members)).members == members

    def is_closed(self, subset) -> bool:
        members = self._coerce(subset)
        return self.closure(SimplexSet(self, members)).members == members

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(n_vertices={self.n_vertices}, "
            f"dim={self.dim}, maximal={len(self.maximal)})"
        )


@dataclass(frozen=True)
class SimplexSet:
    """A subset of the faces of a complex, with Alexandrov-topology helpers."""

    complex: SimplicialComplex = field(repr=False)
    members: frozenset[Simplex]

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, simplex) -> bool:
        return simplex in self.members

    def __le__(self, other: "SimplexSet") -> bool:
        return self.members <= other.members

    def _check_host(self, other: "SimplexSet") -> None:
        if self.complex is not other.complex:
            raise ValueError("simplex sets belong to different complexes")

    def __or__(self, other: "SimplexSet") -> "SimplexSet":
        self._check_host(other)
        return SimplexSet(self.complex, self.members | other.members)

    def __and__(self, other: "SimplexSet") -> "SimplexSet":
        self._check_host(other)
        return SimplexSet(self.complex, self.members & other.members)

    def __sub__(self, other: "SimplexSet") -> "SimplexSet":
        self._check_host(other)
        return SimplexSet(self.complex, self.members - other.members)

    def complement(self) -> "SimplexSet":
        return SimplexSet(
            self.complex, frozenset(self.complex._all_faces_set() - self.members)
        )

    def star(self) -> "SimplexSet":
        return self.complex.star(self)

    def closure(self) -> "SimplexSet":
        return self.complex.closure(self)

    def link(self) -> "SimplexSet":
        return self.complex.link(self)

    def frontier(self) -> "SimplexSet":
        return self.complex.frontier(self)

    def is_open(self) -> bool:
        return self.complex.is_open(self)

    def is_closed(self) -> bool:
        return self.complex.is_closed(self)

    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.members:
            out.update(s)
        return frozenset(out)

    def by_dimension(self) -> dict[int, tuple[Simplex, ...]]:
        buckets: dict[int, list[Simplex]] = {}
        for s in self.members:
            buckets.setdefault(len(s) - 1, []).append(s)
        return {k: tuple(sorted(v)) for k, v in buckets.items()}

    def connected_components(self) -> int:
        """Components of the face-inclusion relation restricted to the set."""
        members = sorted(self.members)
        parent = list(range(len(members)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

        for i, s in enumerate(members):
            s_set = set(s)
            for j in range(i + 1, len(members)):
                t_set = set(members[j])
                if s_set <= t_set or t_set <= s_set:
                    union(i, j)
        return len({find(i) for i in range(len(members))})


# -- JSON interchange ------------------------------------------------------


def complex_to_json_dict(complex: SimplicialComplex) -> dict:
    """Canonical JSON form: interned integer ids plus the id-to-label map."""
    return {
        "maximal_simplices": [list(s) for s in sorted(complex.maximal)],
        "labels": list(complex.labels),
    }


def complex_from_json_dict(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "maximal_simplices" not in data:
        raise MalformedInputError("expected an object with a 'maximal_simplices' key")
    maximal = data["maximal_simplices"]
    if not isinstance(maximal, list) or not all(isinstance(s, list) for s in maximal):
        raise MalformedInputError("'maximal_simplices' must be a list of vertex lists")
    if "labels" in data:
        labels = data["labels"]
        if not isinstance(labels, list):
            raise MalformedInputError("'labels' must be a list")
        try:
            relabeled = [[labels[v] for v in s] for s in maximal]
        except (TypeError, IndexError) as exc:
            raise MalformedInputError("simplex refers to a vertex id outside 'labels'") from exc
        # Feeding each vertex as a singleton first pins the interned id of
        # labels[i] to i, so canonical files round-trip exactly.
        singletons = [[label] for label in labels]
        return SimplicialComplex.from_maximal(singletons + relabeled)
    return SimplicialComplex.from_maximal(maximal)


def load_complex(path) -> SimplicialComplex:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read complex from {path}: {exc}") from exc
    return complex_from_json_dict(data)


def dump_complex(complex: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_json_dict(complex), fh, sort_keys=True)
        fh.write("\n")
