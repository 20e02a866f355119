"""Braid words, the Artin action on free groups, and the presentations
of curve and link complements that braid data gives rise to.

Positive letter i (1-based) sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1}
to x_i, fixing the rest; negative letters act by the inverse rule.
Letters of a word act left to right.  The action is faithful, so braid
equality is decided by comparing generator images.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .group import AbelMap, Presentation, Word, apply_endomorphism


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        letters = tuple(int(v) for v in self.letters)
        for v in letters:
            if v == 0 or abs(v) > self.strands - 1:
                raise ValueError(
                    f"letter {v} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-v for v in reversed(self.letters)))

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))


def _letter_images(letter: int, strands: int) -> list[Word]:
    i = abs(letter) - 1
    images = [Word.generator(j) for j in range(strands)]
    xi, xj = Word.generator(i), Word.generator(i + 1)
    if letter > 0:
        images[i] = xi * xj * xi.inverse()
        images[i + 1] = xi
    else:
        images[i] = xj
        images[i + 1] = xj.inverse() * xi * xj
    return images


def artin_action(braid: BraidWord) -> list[Word]:
    """Images of the free generators under the braid, letters acting
    left to right."""
    images = [Word.generator(j) for j in range(braid.strands)]
    for letter in braid.letters:
        step = _letter_images(letter, braid.strands)
        images = [apply_endomorphism(step, w) for w in images]
    return images


def apply_braid(braid: BraidWord, w: Word) -> Word:
    return apply_endomorphism(artin_action(braid), w)


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Equality in the braid group via the faithful Artin action."""
    return a.strands == b.strands and artin_action(a) == artin_action(b)


def full_twist(strands: int) -> BraidWord:
    """Central element generating the centre: (s_1 ... s_{d-1})^d."""
    if strands < 2:
        raise ValueError("a braid needs at least 2 strands")
    return BraidWord(strands, tuple(range(1, strands)) * strands)


def permutation(braid: BraidWord) -> list[int]:
    """Position each strand ends at, starting positions 0..d-1."""
    pos = list(range(braid.strands))
    for letter in braid.letters:
        i = abs(letter) - 1
        pos = [i + 1 if v == i else i if v == i + 1 else v for v in pos]
    return pos


def permutation_cycles(perm: list[int]) -> list[tuple[int, ...]]:
    """Cycles as sorted tuples, ordered by least element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v]
        cycles.append(tuple(sorted(cyc)))
    return cycles


def strand_components(braid: BraidWord) -> list[tuple[int, ...]]:
    """Strand sets of the closed-braid components."""
    return permutation_cycles(permutation(braid))


# ---------------------------------------------------------------------------
# monodromy factorizations


@dataclass(frozen=True)
class Factorization:
    strands: int
    factors: tuple[BraidWord, ...]
    projective: bool = False

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ValueError("a factorization needs at least 2 strands")
        for f in self.factors:
            if not isinstance(f, BraidWord) or f.strands != self.strands:
                raise ValueError("every factor must be a braid on the same strands")

    def product(self) -> BraidWord:
        out = BraidWord.identity(self.strands)
        for f in self.factors:
            out = out * f
        return out


def validate_factorization(f: Factorization) -> None:
    """Require the factors to multiply to the full twist."""
    if not braid_equal(f.product(), full_twist(f.strands)):
        raise InputError("product of the factors is not the full twist",
                         field="factors")


def factor_orbits(f: Factorization) -> list[tuple[int, ...]]:
    """Orbits of the strands under all factor permutations together.

    Each orbit is the strand set of one global component of the curve
    the factorization describes.
    """
    parent = list(range(f.strands))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for factor in f.factors:
        for s, target in enumerate(permutation(factor)):
            ra, rb = find(s), find(target)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for s in range(f.strands):
        groups.setdefault(find(s), []).append(s)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=min)


# ---------------------------------------------------------------------------
# presentations from braid data


def _generator_names(strands: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(strands))


def zvk_presentation(f: Factorization, projective: bool | None = None,
                     check: bool = True) -> tuple[Presentation, AbelMap]:
    """Presentation of the curve complement cut out by a factorization.

    One relator per factor and generator, saying the factor's action
    fixes that generator.  The projective variant kills the product
    x_1 ... x_d as well.  The returned map sends each generator to the
    coordinate of its component (orbits ordered by least strand).
    """
    if check:
        validate_factorization(f)
    if projective is None:
        projective = f.projective
    d = f.strands
    relators = []
    for factor in f.factors:
        images = artin_action(factor)
        for i in range(d):
            rel = images[i] * Word.generator(i).inverse()
            if not rel.is_identity:
                relators.append(rel)
    if projective:
        prod = Word(tuple((i, 1) for i in range(d)))
        relators.append(prod)
    pres = Presentation(_generator_names(d), tuple(relators))

    orbits = factor_orbits(f)
    rank = len(orbits)
    orbit_of = {}
    for idx, orbit in enumerate(orbits):
        for s in orbit:
            orbit_of[s] = idx
    images = tuple(tuple(1 if orbit_of[s] == r else 0 for r in range(rank))
                   for s in range(d))
    return pres, AbelMap(rank, images)


def closure_presentation(braid: BraidWord) -> Presentation:
    """Deficiency-one presentation of the braid-closure complement.

    Relators say the braid fixes each generator; the last one follows
    from the others because the action fixes x_1 ... x_d, so it is
    dropped.
    """
    d = braid.strands
    images = artin_action(braid)
    relators = []
    for i in range(d - 1):
        rel = images[i] * Word.generator(i).inverse()
        if not rel.is_identity:
            relators.append(rel)
    return Presentation(_generator_names(d), tuple(relators))


# ---------------------------------------------------------------------------
# JSON formats


def braid_from_json(obj: object, source: str | None = None) -> BraidWord:
    """Decode {"strands": d, "word": [i, ...]} braid data."""
    if not isinstance(obj, dict):
        raise InputError("braid must be a JSON object", source=source)
    strands = obj.get("strands")
    if not isinstance(strands, int) or strands < 2:
        raise InputError("strands must be an integer >= 2",
                         source=source, field="strands")
    word = obj.get("word", [])
    if not isinstance(word, list) or not all(isinstance(v, int) for v in word):
        raise InputError("word must be a list of nonzero integers",
                         source=source, field="word")
    try:
        return BraidWord(strands, tuple(word))
    except ValueError as exc:
        raise InputError(str(exc), source=source, field="word") from None


def braid_to_json(braid: BraidWord) -> dict:
    return {"strands": braid.strands, "word": list(braid.letters)}


def factorization_from_json(obj: object, source: str | None = None) -> Factorization:
    """Decode {"strands": d, "factors": [[...], ...], "projective": bool}."""
    if not isinstance(obj, dict):
        raise InputError("factorization must be a JSON object", source=source)
    strands = obj.get("strands")
    if not isinstance(strands, int) or strands < 2:
        raise InputError("strands must be an integer >= 2",
                         source=source, field="strands")
    factors_obj = obj.get("factors")
    if not isinstance(factors_obj, list) or not factors_obj:
        raise InputError("factors must be a nonempty list of letter lists",
                         source=source, field="factors")
    factors = []
    for idx, letters in enumerate(factors_obj):
        if not isinstance(letters, list) or not all(isinstance(v, int) for v in letters):
            raise InputError(f"factor {idx} must be a list of integers",
                             source=source, field="factors")
        try:
            factors.append(BraidWord(strands, tuple(letters)))
        except ValueError as exc:
            raise InputError(f"factor {idx}: {exc}",
                             source=source, field="factors") from None
    projective = obj.get("projective", False)
    if not isinstance(projective, bool):
        raise InputError("projective must be a boolean",
                         source=source, field="projective")
    return Factorization(strands, tuple(factors), projective)


def factorization_to_json(f: Factorization) -> dict:
    return {
        "strands": f.strands,
        "factors": [list(b.letters) for b in f.factors],
        "projective": f.projective,
    }
