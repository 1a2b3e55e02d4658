"""Finitely presented precubical sets and the combinatorial category of cubes.

A precubical set is a graded family of cells K_0, K_1, ... with face maps

    d[i, a] : K_n -> K_{n-1}      for 1 <= i <= n and a in {0, 1}

subject to the cubical relations

    d[i, a] d[j, b] = d[j-1, b] d[i, a]      for i < j.

An n-cell models n actions running independently; d[i, 0] is the state
before the i-th action starts, d[i, 1] the state after it finishes.

Morphisms of the indexing cube category are encoded as words over the
alphabet {0, 1, *}: a word of length n containing m stars is a morphism
[m] -> [n], the i-th star marking where the i-th coordinate of the source
lands.  Composition is substitution of the inner word into the stars of
the outer word.  Under this encoding the standard n-cube is the presheaf
whose k-cells are the length-n words with k stars, and the (i, a) face of
a cell replaces its i-th star (in left-to-right order) with the letter a.
The left-to-right star convention is a fixed orientation choice; tools
using another convention will disagree by a relabeling of face indices.

Everything here is finite and immutable after construction; operations are
pure functions, so results are deterministic and safe to share.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

LETTERS = "01*"
STAR = "*"


@dataclass(frozen=True, order=True)
class CellId:
    """A cell, identified by its dimension and a label unique in that dimension."""

    dim: int
    label: str


@dataclass(frozen=True)
class CubeWord:
    """A morphism [m] -> [n] of the cube category, as a length-n word with m stars."""

    letters: str

    def __post_init__(self):
        bad = set(self.letters) - set(LETTERS)
        if bad:
            raise ValueError(f"cube word may only contain 0, 1, *: {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    @property
    def stars(self) -> int:
        return self.letters.count(STAR)

    @property
    def is_identity(self) -> bool:
        return self.stars == len(self.letters)

    @classmethod
    def identity(cls, n: int) -> "CubeWord":
        return cls(STAR * n)

    def compose(self, inner: "CubeWord | str") -> "CubeWord":
        """self o inner: substitute the letters of inner into the stars of self.

        self is [m] -> [n] and inner must be [k] -> [m]; the result is the
        length-n word with k stars obtained by writing inner across the m
        star positions of self.
        """
        inner = as_word(inner)
        if len(inner) != self.stars:
            raise ValueError(
                f"cannot compose: outer word {self.letters!r} has {self.stars} "
                f"stars but inner word {inner.letters!r} has length {len(inner)}"
            )
        out = []
        it = iter(inner.letters)
        for ch in self.letters:
            out.append(next(it) if ch == STAR else ch)
        return CubeWord("".join(out))


def as_word(w: "CubeWord | str") -> CubeWord:
    return w if isinstance(w, CubeWord) else CubeWord(w)


@dataclass(frozen=True)
class Violation:
    """One defect found by validate.

    kind is one of "missing-face" (no entry for a required face),
    "dangling-face" (entry points at an undeclared cell) and
    "cubical-relation" (d[i,a] d[j,b] != d[j-1,b] d[i,a] on some cell).
    Unused coordinate fields are None.
    """

    kind: str
    dim: int
    cell: str
    i: int | None = None
    alpha: int | None = None
    j: int | None = None
    beta: int | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "dim": self.dim, "cell": self.cell}
        for key in ("i", "alpha", "j", "beta"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.detail:
            out["detail"] = self.detail
        return out

    def __str__(self) -> str:
        coords = ", ".join(
            f"{k}={getattr(self, k)}"
            for k in ("i", "alpha", "j", "beta")
            if getattr(self, k) is not None
        )
        msg = f"{self.kind} at dim {self.dim} cell {self.cell!r}"
        if coords:
            msg += f" ({coords})"
        if self.detail:
            msg += f": {self.detail}"
        return msg


class PrecubicalSet:
    """A finitely presented precubical set.

    cells maps each dimension to its cell labels; faces maps
    (dim, i, alpha, label) to the label of the (i, alpha) face in
    dimension dim - 1.  The constructor checks structure only (types,
    index ranges, label uniqueness, faces keyed on declared cells);
    semantic defects such as dangling face values, missing face entries
    and cubical-relation failures are the business of validate, so that
    broken inputs can be represented and reported.
    """

    def __init__(self, cells, faces=None):
        normalized: dict[int, tuple[str, ...]] = {}
        for dim, labels in dict(cells).items():
            if not isinstance(dim, int) or dim < 0:
                raise ValueError(f"cell dimension must be a non-negative int: {dim!r}")
            labels = list(labels)
            for lab in labels:
                if not isinstance(lab, str):
                    raise ValueError(f"cell label must be a string: {lab!r}")
            if len(set(labels)) != len(labels):
                dupes = sorted({l for l in labels if labels.count(l) > 1})
                raise ValueError(f"duplicate labels in dimension {dim}: {dupes}")
            if labels:
                normalized[dim] = tuple(sorted(labels))
        self._cells = normalized
        self._top_dim = max(normalized, default=-1)

        face_map: dict[tuple[int, int, int, str], str] = {}
        for key, value in dict(faces or {}).items():
            dim, i, alpha, label = key
            if not isinstance(dim, int) or dim < 1:
                raise ValueError(f"face dimension must be an int >= 1: {dim!r}")
            if not isinstance(i, int) or not 1 <= i <= dim:
                raise ValueError(f"face index {i!r} out of range 1..{dim}")
            if alpha not in (0, 1):
                raise ValueError(f"face sign must be 0 or 1: {alpha!r}")
            if label not in self._cells.get(dim, ()):
                raise ValueError(f"face keyed on undeclared cell ({dim}, {label!r})")
            if not isinstance(value, str):
                raise ValueError(f"face value must be a label string: {value!r}")
            face_map[(dim, i, alpha, label)] = value
        self._faces = face_map

    @property
    def top_dim(self) -> int:
        """Largest dimension with at least one cell, -1 for the empty complex."""
        return self._top_dim

    def cells(self, dim: int) -> tuple[str, ...]:
        """Sorted labels of the dim-cells (empty tuple if none)."""
        return self._cells.get(dim, ())

    def n_cells(self, dim: int) -> int:
        return len(self._cells.get(dim, ()))

    def cell_counts(self) -> tuple[int, ...]:
        """Cell count per dimension, indices 0..top_dim."""
        return tuple(self.n_cells(d) for d in range(self._top_dim + 1))

    def all_cells(self):
        """Yield every cell as a CellId, in (dimension, label) order."""
        for dim in sorted(self._cells):
            for label in self._cells[dim]:
                yield CellId(dim, label)

    def has_cell(self, dim: int, label: str) -> bool:
        return label in self._cells.get(dim, ())

    def face_label(self, dim: int, label: str, i: int, alpha: int) -> str | None:
        """Label of d[i, alpha] of the cell, or None if the entry is absent."""
        return self._faces.get((dim, i, alpha, label))

    def face(self, cell: CellId, i: int, alpha: int) -> CellId:
        """d[i, alpha] of the cell, as a CellId of dimension cell.dim - 1."""
        value = self._faces.get((cell.dim, i, alpha, cell.label))
        if value is None:
            raise KeyError(
                f"no face entry d[{i},{alpha}] for cell ({cell.dim}, {cell.label!r})"
            )
        return CellId(cell.dim - 1, value)

    @property
    def face_map(self) -> dict[tuple[int, int, int, str], str]:
        """Copy of the raw face table, keyed (dim, i, alpha, label)."""
        return dict(self._faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrecubicalSet):
            return NotImplemented
        return self._cells == other._cells and self._faces == other._faces

    def __repr__(self) -> str:
        counts = ", ".join(str(c) for c in self.cell_counts())
        return f"PrecubicalSet(cells=({counts}))"


def validate(K: PrecubicalSet) -> list[Violation]:
    """Check the precubical axioms; an empty report means K is a precubical set.

    Reports every missing face entry, every face entry whose value is not a
    declared cell of the dimension below, and every violated instance
    (i, j, alpha, beta, cell) of the cubical relation.  Relation instances
    whose ingredient faces are missing or dangling are skipped, since they
    are already reported.
    """
    report: list[Violation] = []
    for dim in sorted(d for d in range(1, K.top_dim + 1)):
        for label in K.cells(dim):
            for i in range(1, dim + 1):
                for alpha in (0, 1):
                    value = K.face_label(dim, label, i, alpha)
                    if value is None:
                        report.append(Violation("missing-face", dim, label, i=i, alpha=alpha))
                    elif not K.has_cell(dim - 1, value):
                        report.append(
                            Violation(
                                "dangling-face", dim, label, i=i, alpha=alpha,
                                detail=f"points at undeclared cell {value!r}",
                            )
                        )

    def chase(dim, label, i, alpha):
        # one face step, None if the entry is absent or dangling
        value = K.face_label(dim, label, i, alpha)
        if value is None or not K.has_cell(dim - 1, value):
            return None
        return value

    for dim in range(2, K.top_dim + 1):
        for label in K.cells(dim):
            for j in range(2, dim + 1):
                for i in range(1, j):
                    for alpha in (0, 1):
                        for beta in (0, 1):
                            jb = chase(dim, label, j, beta)
                            ia = chase(dim, label, i, alpha)
                            if jb is None or ia is None:
                                continue
                            left = chase(dim - 1, jb, i, alpha)
                            right = chase(dim - 1, ia, j - 1, beta)
                            if left is None or right is None:
                                continue
                            if left != right:
                                report.append(
                                    Violation(
                                        "cubical-relation", dim, label,
                                        i=i, alpha=alpha, j=j, beta=beta,
                                        detail=f"d[{i},{alpha}]d[{j},{beta}] = {left!r} "
                                               f"but d[{j-1},{beta}]d[{i},{alpha}] = {right!r}",
                                    )
                                )
    return report


def cube_words(n: int, stars: int | None = None):
    """All length-n words over {0, 1, *}, optionally with a fixed star count."""
    for letters in itertools.product(LETTERS, repeat=n):
        word = "".join(letters)
        if stars is None or word.count(STAR) == stars:
            yield word


def _set_star(word: str, i: int, alpha: int) -> str:
    # replace the i-th star (1-based, left to right) with the letter alpha
    seen = 0
    for pos, ch in enumerate(word):
        if ch == STAR:
            seen += 1
            if seen == i:
                return word[:pos] + str(alpha) + word[pos + 1 :]
    raise ValueError(f"word {word!r} has fewer than {i} stars")


def standard_cube(n: int) -> PrecubicalSet:
    """The standard n-cube: k-cells are the length-n words with k stars."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    cells = {k: list(cube_words(n, stars=k)) for k in range(n + 1)}
    faces = {}
    for k in range(1, n + 1):
        for word in cells[k]:
            for i in range(1, k + 1):
                for alpha in (0, 1):
                    faces[(k, i, alpha, word)] = _set_star(word, i, alpha)
    return PrecubicalSet(cells, faces)


def boundary_cube(n: int) -> PrecubicalSet:
    """The n-cube with its single top cell removed; boundary_cube(0) is empty."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return skeleton(standard_cube(n), n - 1) if n > 0 else PrecubicalSet({}, {})


def skeleton(K: PrecubicalSet, n: int) -> PrecubicalSet:
    """The subcomplex of cells of dimension at most n."""
    if n < 0:
        return PrecubicalSet({}, {})
    cells = {d: K.cells(d) for d in range(min(n, K.top_dim) + 1)}
    faces = {
        key: value for key, value in K.face_map.items() if key[0] <= n
    }
    return PrecubicalSet(cells, faces)


def apply_cube_map(K: PrecubicalSet, c: CellId, w: CubeWord | str) -> CellId:
    """Evaluate the presheaf action of the cube-category morphism w on the cell c.

    w is a word of length c.dim with m stars; the result is the m-cell
    obtained by the iterated faces that w encodes.  The all-stars word is
    the identity, and the action is functorial:
    apply(c, u.compose(v)) == apply(apply(c, u), v).
    """
    w = as_word(w)
    if len(w) != c.dim:
        raise ValueError(
            f"word length {len(w)} does not match cell dimension {c.dim}"
        )
    letters = w.letters
    cell = c
    while True:
        pos = next((p for p, ch in enumerate(letters) if ch != STAR), None)
        if pos is None:
            return cell
        # w factors as (insert letter at pos) o (rest of the word), so the
        # presheaf applies the face first and the remaining word after
        cell = K.face(cell, pos + 1, int(letters[pos]))
        letters = letters[:pos] + letters[pos + 1 :]


@dataclass(frozen=True)
class CubeDiagram:
    """The category of cubes of K: one object per cell, arrows the cube-category
    words acting between them.

    An arrow (source, target, w) satisfies apply_cube_map(K, target, w) == source;
    identities are the all-stars words.  Arrows compose by word substitution.
    """

    objects: tuple[CellId, ...]
    arrows: tuple[tuple[CellId, CellId, CubeWord], ...]

    @property
    def non_identity_arrows(self) -> tuple[tuple[CellId, CellId, CubeWord], ...]:
        return tuple(a for a in self.arrows if not a[2].is_identity)


def cube_category(K: PrecubicalSet) -> CubeDiagram:
    """Enumerate the category of cubes of a finite valid K."""
    objects = tuple(K.all_cells())
    arrows = []
    for target in objects:
        for word in cube_words(target.dim):
            source = apply_cube_map(K, target, word)
            arrows.append((source, target, CubeWord(word)))
    arrows.sort(key=lambda a: (a[0].dim, a[0].label, a[1].dim, a[1].label, a[2].letters))
    return CubeDiagram(objects, tuple(arrows))


class PcsMap:
    """A morphism of precubical sets: a dimension-preserving cell map
    commuting with all faces.

    mapping sends (dim, label) of the source to a label of the target.
    """

    def __init__(self, source: PrecubicalSet, target: PrecubicalSet, mapping):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)

    @classmethod
    def identity(cls, K: PrecubicalSet) -> "PcsMap":
        return cls(K, K, {(c.dim, c.label): c.label for c in K.all_cells()})

    @classmethod
    def inclusion(cls, sub: PrecubicalSet, K: PrecubicalSet) -> "PcsMap":
        """The identity-on-labels inclusion of a subcomplex."""
        return cls(sub, K, {(c.dim, c.label): c.label for c in sub.all_cells()})

    def __call__(self, cell: CellId) -> CellId:
        return CellId(cell.dim, self.mapping[(cell.dim, cell.label)])

    def defects(self) -> list[str]:
        """Reasons this is not a morphism; empty when it is one."""
        problems = []
        for cell in self.source.all_cells():
            key = (cell.dim, cell.label)
            if key not in self.mapping:
                problems.append(f"cell ({cell.dim}, {cell.label!r}) has no image")
                continue
            image = self.mapping[key]
            if not self.target.has_cell(cell.dim, image):
                problems.append(
                    f"image of ({cell.dim}, {cell.label!r}) is undeclared ({cell.dim}, {image!r})"
                )
                continue
            for i in range(1, cell.dim + 1):
                for alpha in (0, 1):
                    src_face = self.source.face_label(cell.dim, cell.label, i, alpha)
                    tgt_face = self.target.face_label(cell.dim, image, i, alpha)
                    mapped = self.mapping.get((cell.dim - 1, src_face))
                    if mapped != tgt_face:
                        problems.append(
                            f"faces do not commute at ({cell.dim}, {cell.label!r}), "
                            f"d[{i},{alpha}]: {mapped!r} != {tgt_face!r}"
                        )
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.defects()


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def pushout(f: PcsMap, g: PcsMap) -> PrecubicalSet:
    """Degreewise pushout of K <- L -> M along the morphisms f: L -> K, g: L -> M.

    Cells of K and M are tagged "K:..." and "M:..." and identified whenever
    they receive the same cell of L; each class is labeled by the
    lexicographically least tagged member, so output labels are
    deterministic.  Raises ValueError if f or g fails to commute with faces
    or the two sources differ.
    """
    if f.source != g.source:
        raise ValueError("pushout feet must share the same source")
    for name, h in (("f", f), ("g", g)):
        problems = h.defects()
        if problems:
            raise ValueError(f"{name} is not a precubical morphism: {problems[0]}")

    K, M, L = f.target, g.target, f.source
    uf = _UnionFind()
    for dim in range(max(K.top_dim, M.top_dim) + 1):
        for label in K.cells(dim):
            uf.find((dim, "K", label))
        for label in M.cells(dim):
            uf.find((dim, "M", label))
    for cell in L.all_cells():
        key = (cell.dim, cell.label)
        uf.union((cell.dim, "K", f.mapping[key]), (cell.dim, "M", g.mapping[key]))

    members: dict[tuple, list[tuple]] = {}
    for node in list(uf.parent):
        members.setdefault(uf.find(node), []).append(node)
    class_label = {
        root: min(f"{side}:{label}" for _, side, label in group)
        for root, group in members.items()
    }

    cells: dict[int, list[str]] = {}
    faces = {}
    for root, group in members.items():
        dim = root[0]
        cells.setdefault(dim, []).append(class_label[root])
        if dim == 0:
            continue
        # faces are class-independent because f and g commute with faces;
        # evaluate on the member the class is named after
        _, side, label = min(group, key=lambda node: f"{node[1]}:{node[2]}")
        complex_ = K if side == "K" else M
        for i in range(1, dim + 1):
            for alpha in (0, 1):
                value = complex_.face_label(dim, label, i, alpha)
                face_root = uf.find((dim - 1, side, value))
                faces[(dim, i, alpha, class_label[root])] = class_label[face_root]
    return PrecubicalSet(cells, faces)


def empty_map(K: PrecubicalSet) -> PcsMap:
    """The unique morphism from the empty precubical set into K."""
    return PcsMap(PrecubicalSet({}, {}), K, {})


def disjoint_union(K: PrecubicalSet, M: PrecubicalSet) -> PrecubicalSet:
    """Coproduct, as the pushout over the empty precubical set."""
    return pushout(empty_map(K), empty_map(M))


def tensor(K: PrecubicalSet, L: PrecubicalSet) -> PrecubicalSet:
    """Tensor product: (K (x) L)_n is the disjoint union of K_p x L_q over p+q = n.

    A pair cell is labeled "x|y".  Faces act on the left factor for
    i <= p and on the right factor, with the index shifted by p, otherwise.
    """
    cells: dict[int, list[str]] = {}
    faces = {}
    for p in range(K.top_dim + 1):
        for q in range(L.top_dim + 1):
            for x in K.cells(p):
                for y in L.cells(q):
                    label = f"{x}|{y}"
                    cells.setdefault(p + q, []).append(label)
                    for i in range(1, p + 1):
                        for alpha in (0, 1):
                            fx = K.face_label(p, x, i, alpha)
                            faces[(p + q, i, alpha, label)] = f"{fx}|{y}"
                    for i in range(1, q + 1):
                        for alpha in (0, 1):
                            fy = L.face_label(q, y, i, alpha)
                            faces[(p + q, p + i, alpha, label)] = f"{x}|{fy}"
    return PrecubicalSet(cells, faces)


def find_isomorphism(K: PrecubicalSet, L: PrecubicalSet):
    """Search for an isomorphism K -> L; returns a (dim, label) -> label map
    or None.

    Backtracking over cells in decreasing dimension: choosing an image for a
    cell forces the images of all its iterated faces, so complexes whose
    cells hang together are matched almost without search.
    """
    if K.cell_counts() != L.cell_counts():
        return None

    order = sorted(K.all_cells(), key=lambda c: (-c.dim, c.label))
    assignment: dict[tuple[int, str], str] = {}
    used: dict[int, set[str]] = {}

    def propagate(cell: CellId, image: str, trail: list) -> bool:
        stack = [(cell, image)]
        while stack:
            c, im = stack.pop()
            key = (c.dim, c.label)
            existing = assignment.get(key)
            if existing is not None:
                if existing != im:
                    return False
                continue
            if im in used.setdefault(c.dim, set()):
                return False
            assignment[key] = im
            used[c.dim].add(im)
            trail.append(key)
            for i in range(1, c.dim + 1):
                for alpha in (0, 1):
                    kf = K.face_label(c.dim, c.label, i, alpha)
                    lf = L.face_label(c.dim, im, i, alpha)
                    if (kf is None) != (lf is None):
                        return False
                    if kf is not None:
                        stack.append((CellId(c.dim - 1, kf), lf))
        return True

    def backtrack(index: int) -> bool:
        if index == len(order):
            return True
        cell = order[index]
        if (cell.dim, cell.label) in assignment:
            return backtrack(index + 1)
        for candidate in L.cells(cell.dim):
            if candidate in used.setdefault(cell.dim, set()):
                continue
            trail: list = []
            if propagate(cell, candidate, trail) and backtrack(index + 1):
                return True
            for key in trail:
                used[key[0]].discard(assignment.pop(key))
        return False

    if not backtrack(0):
        return None
    iso = PcsMap(K, L, assignment)
    # propagation guarantees this, but the check is cheap insurance
    if iso.defects():
        return None
    return assignment


def isomorphic(K: PrecubicalSet, L: PrecubicalSet) -> bool:
    return find_isomorphism(K, L) is not None
