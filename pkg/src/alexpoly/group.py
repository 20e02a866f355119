"""Free group words, finite presentations and abelianization maps.

Words are run-length encoded: tuples of (generator index, nonzero
exponent) with adjacent entries on distinct generators.  Reduction,
multiplication and endomorphism application keep that invariant.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

Syllable = tuple[int, int]


def reduce_syllables(pairs: Iterable[Syllable]) -> tuple[Syllable, ...]:
    """Freely reduce a syllable sequence (merge runs, drop zero exponents)."""
    stack: list[list[int]] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


class Word:
    """Freely reduced word in a free group on indexed generators."""

    __slots__ = ("syllables",)

    def __init__(self, pairs: Iterable[Syllable] = ()):
        object.__setattr__(self, "syllables", reduce_syllables(pairs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def generator(cls, index: int, exp: int = 1) -> "Word":
        if index < 0:
            raise ValueError("generator index must be nonnegative")
        return cls(((index, exp),))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the identity."""
        return max((g for g, _ in self.syllables), default=-1)

    def length(self) -> int:
        """Word length in letters (sum of |exponents|)."""
        return sum(abs(e) for _, e in self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return _IDENTITY
        base = self if n > 0 else self.inverse()
        return Word(base.syllables * abs(n))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __repr__(self) -> str:
        if self.is_identity:
            return "<Word 1>"
        body = " ".join(f"x{g + 1}" + (f"^{e}" if e != 1 else "")
                        for g, e in self.syllables)
        return f"<Word {body}>"


_IDENTITY = object.__new__(Word)
object.__setattr__(_IDENTITY, "syllables", ())


def apply_endomorphism(images: Sequence[Word], w: Word) -> Word:
    """Substitute images[i] for generator i throughout w, then reduce."""
    if w.max_generator() >= len(images):
        raise ValueError(f"word uses generator {w.max_generator()} but only "
                         f"{len(images)} images are given")
    pairs: list[Syllable] = []
    for gen, exp in w.syllables:
        img = images[gen] if exp > 0 else images[gen].inverse()
        pairs.extend(img.syllables * abs(exp))
    return Word(pairs)


def compose_endomorphisms(outer: Sequence[Word], inner: Sequence[Word]) -> list[Word]:
    """Images of the map sending x_i through inner first, then outer."""
    return [apply_endomorphism(outer, w) for w in inner]


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Finite group presentation; relators are stored freely reduced."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        cleaned = []
        for r in self.relators:
            if not isinstance(r, Word):
                raise TypeError("relators must be Words")
            if r.max_generator() >= len(self.generators):
                raise ValueError(f"relator {r!r} uses an undeclared generator")
            if not r.is_identity:
                cleaned.append(r)
        object.__setattr__(self, "relators", tuple(cleaned))

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relators)

    def relator_abelianization(self) -> list[list[int]]:
        """m x n integer matrix of abelianized relators."""
        rows = []
        for r in self.relators:
            row = [0] * self.n
            for g, e in r.syllables:
                row[g] += e
            rows.append(row)
        return rows

    def abelianization_invariants(self) -> tuple[int, list[int]]:
        """(free rank, torsion coefficients > 1) of the abelianized group."""
        diag = smith_normal_form(self.relator_abelianization(), self.n)
        nonzero = [d for d in diag if d != 0]
        rank = self.n - len(nonzero)
        torsion = [d for d in nonzero if d > 1]
        return rank, torsion


# ---------------------------------------------------------------------------
# abelianization maps


@dataclass(frozen=True)
class AbelMap:
    """Map from a free group onto Z^rank, given by generator images."""

    rank: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        coerced = []
        for img in self.images:
            vec = tuple(int(v) for v in (img if isinstance(img, (tuple, list)) else (img,)))
            if len(vec) != self.rank:
                raise ValueError(f"image {vec} has length {len(vec)}, expected {self.rank}")
            coerced.append(vec)
        object.__setattr__(self, "images", tuple(coerced))

    @classmethod
    def constant_one(cls, n_generators: int) -> "AbelMap":
        return cls(1, tuple((1,) for _ in range(n_generators)))

    @property
    def n_generators(self) -> int:
        return len(self.images)

    def __call__(self, w: Word) -> tuple[int, ...]:
        vec = [0] * self.rank
        for g, e in w.syllables:
            if g >= len(self.images):
                raise ValueError(f"word uses generator {g} outside the map's domain")
            img = self.images[g]
            for i in range(self.rank):
                vec[i] += e * img[i]
        return tuple(vec)

    def is_surjective(self) -> bool:
        """Surjectivity onto Z^rank: generator images must span."""
        rows = [list(img) for img in self.images]
        diag = smith_normal_form(rows, self.rank)
        nonzero = [d for d in diag if d != 0]
        return len(nonzero) == self.rank and all(d == 1 for d in nonzero)

    def composed_to_one(self) -> "AbelMap":
        """Compose with Z^rank -> Z summing all coordinates."""
        return AbelMap(1, tuple((sum(img),) for img in self.images))


# ---------------------------------------------------------------------------
# Smith normal form over Z


def smith_normal_form(rows: list[list[int]], ncols: int) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Input is a list of rows (possibly empty); returns min(m, n) diagonal
    entries, nonnegative, each dividing the next.
    """
    m = len(rows)
    n = ncols
    a = [list(map(int, row)) for row in rows]
    for row in a:
        if len(row) != n:
            raise ValueError("ragged matrix")
    diag: list[int] = []
    top = 0
    left = 0
    while top < m and left < n:
        pivot = None
        for i in range(top, m):
            for j in range(left, n):
                if a[i][j] != 0:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        a[top], a[i0] = a[i0], a[top]
        for row in a:
            row[left], row[j0] = row[j0], row[left]
        # clear the pivot row and column (Euclidean steps)
        dirty = True
        while dirty:
            dirty = False
            p = a[top][left]
            for i in range(top + 1, m):
                if a[i][left]:
                    q = a[i][left] // p
                    for j in range(left, n):
                        a[i][j] -= q * a[top][j]
                    if a[i][left]:
                        a[top], a[i] = a[i], a[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(left + 1, n):
                if a[top][j]:
                    q = a[top][j] // p
                    for i in range(top, m):
                        a[i][j] -= q * a[i][left]
                    if a[top][j]:
                        for row in a:
                            row[left], row[j] = row[j], row[left]
                        dirty = True
                        break
        # enforce divisibility of the remaining block by the pivot
        p = abs(a[top][left])
        offender = None
        for i in range(top + 1, m):
            for j in range(left + 1, n):
                if a[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(left, n):
                a[top][j] += a[offender][j]
            continue
        diag.append(p)
        top += 1
        left += 1
    while len(diag) < min(m, n):
        diag.append(0)
    return diag


# ---------------------------------------------------------------------------
# text and JSON formats

_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def parse_word(text: str, generators: Sequence[str], source: str | None = None) -> Word:
    """Parse 'x1 x2^-1 x1' style word text against a generator list."""
    index = {name: i for i, name in enumerate(generators)}
    pairs: list[Syllable] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise InputError(f"cannot parse word token {token!r}",
                             source=source, field="relators")
        name, exp_text = m.groups()
        if name not in index:
            raise InputError(f"unknown generator {name!r}",
                             source=source, field="relators")
        pairs.append((index[name], int(exp_text) if exp_text else 1))
    return Word(pairs)


def word_to_text(w: Word, generators: Sequence[str]) -> str:
    parts = []
    for g, e in w.syllables:
        name = generators[g]
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def presentation_from_json(obj: object, source: str | None = None) -> tuple[Presentation, AbelMap | None]:
    """Decode {"generators": [...], "relators": [...], "phi": {...}} data."""
    if not isinstance(obj, dict):
        raise InputError("presentation must be a JSON object", source=source)
    gens = obj.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens) or not gens:
        raise InputError("expected a nonempty list of generator names",
                         source=source, field="generators")
    relator_texts = obj.get("relators", [])
    if not isinstance(relator_texts, list) or not all(isinstance(r, str) for r in relator_texts):
        raise InputError("expected a list of word strings",
                         source=source, field="relators")
    relators = tuple(parse_word(r, gens, source=source) for r in relator_texts)
    pres = Presentation(tuple(gens), relators)

    phi = None
    if "phi" in obj:
        phi_obj = obj["phi"]
        if not isinstance(phi_obj, dict):
            raise InputError("phi must map generator names to integers or "
                             "integer vectors", source=source, field="phi")
        images: list[tuple[int, ...]] = []
        rank = None
        for name in gens:
            if name not in phi_obj:
                raise InputError(f"phi is missing generator {name!r}",
                                 source=source, field="phi")
            val = phi_obj[name]
            vec = tuple(val) if isinstance(val, list) else (val,)
            if not all(isinstance(v, int) for v in vec):
                raise InputError(f"phi[{name!r}] must be an integer or a list "
                                 "of integers", source=source, field="phi")
            if rank is None:
                rank = len(vec)
            elif len(vec) != rank:
                raise InputError("phi image lengths disagree",
                                 source=source, field="phi")
            images.append(vec)
        unknown = set(phi_obj) - set(gens)
        if unknown:
            raise InputError(f"phi names unknown generators {sorted(unknown)}",
                             source=source, field="phi")
        phi = AbelMap(rank, tuple(images))
    return pres, phi


def presentation_to_json(pres: Presentation, phi: AbelMap | None = None) -> dict:
    obj: dict = {
        "generators": list(pres.generators),
        "relators": [word_to_text(r, pres.generators) for r in pres.relators],
    }
    if phi is not None:
        obj["phi"] = {
            name: (img[0] if phi.rank == 1 else list(img))
            for name, img in zip(pres.generators, phi.images)
        }
    return obj


def load_json_file(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError("file not found", source=path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", source=path,
                         line=exc.lineno) from None
