"""Polynomial invariants of closed braids with coloured components.

A link here is a braid closure whose components carry integer colours.
Colour 0 is reserved for the distinguished line component; marking that
component enables the hat variant, which weights its meridians by -d
for the stored degree d while every other meridian gets weight 1.

Three invariants are computed from the closure presentation:

* multivariable: one variable per colour, the marked colour first,
* one-variable: every meridian is weighted 1,
* hat: the weighted one-variable invariant described above, checked
  against substituting the weights into the multivariable one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import (
    BraidWord,
    braid_from_json,
    braid_to_json,
    closure_presentation,
    strand_components,
)
from .errors import ComputationError, InputError
from .fox import alexander_polynomial
from .group import AbelMap
from .ring import LaurentPoly, equal_up_to_units, normalize, poly_to_str


@dataclass(frozen=True)
class MarkedLink:
    braid: BraidWord
    colours: dict[int, int]
    marked: int | None = None
    degree: int | None = None

    def __post_init__(self):
        comps = strand_components(self.braid)
        keys = {min(c) for c in comps}
        if set(self.colours) != keys:
            raise ValueError(
                f"colours must be keyed by the component base strands {sorted(keys)}")
        for k, v in self.colours.items():
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"colour of component {k} must be a "
                                 "nonnegative integer")
        zero_coloured = [k for k, v in self.colours.items() if v == 0]
        if len(zero_coloured) > 1:
            raise ValueError("at most one component may have colour 0")
        if all(v == 0 for v in self.colours.values()):
            raise ValueError("at least one component needs a nonzero colour")
        if self.marked is not None:
            if self.marked not in self.colours:
                raise ValueError(f"marked component {self.marked} does not exist")
            if self.colours[self.marked] != 0:
                raise ValueError("the marked component must have colour 0")
            if not isinstance(self.degree, int) or self.degree < 1:
                raise ValueError("a marked link needs a degree >= 1")

    @property
    def components(self) -> list[tuple[int, ...]]:
        return strand_components(self.braid)

    def component_of_strand(self) -> dict[int, int]:
        """strand -> base strand of its component."""
        out = {}
        for comp in self.components:
            base = min(comp)
            for s in comp:
                out[s] = base
        return out

    def colour_order(self) -> list[int]:
        """Distinct colours in variable order: colour 0 first, then by
        the least strand carrying each colour."""
        anchor: dict[int, int] = {}
        for comp in self.components:
            colour = self.colours[min(comp)]
            anchor.setdefault(colour, min(comp))
        return sorted(anchor, key=lambda c: (c != 0, anchor[c]))

    def n_colours(self) -> int:
        return len(self.colour_order())


def _colour_phi(link: MarkedLink) -> AbelMap:
    order = link.colour_order()
    index = {c: i for i, c in enumerate(order)}
    base_of = link.component_of_strand()
    images = tuple(
        tuple(1 if index[link.colours[base_of[s]]] == r else 0
              for r in range(len(order)))
        for s in range(link.braid.strands))
    return AbelMap(len(order), images)


def multivariable_delta(link: MarkedLink) -> LaurentPoly:
    """Invariant with one variable per colour; needs at least two colours."""
    if link.n_colours() < 2:
        raise ValueError("the multivariable invariant needs at least 2 colours")
    return alexander_polynomial(closure_presentation(link.braid),
                                _colour_phi(link))


def one_variable_delta(link: MarkedLink) -> LaurentPoly:
    phi = AbelMap.constant_one(link.braid.strands)
    return alexander_polynomial(closure_presentation(link.braid), phi)


def hat_delta(link: MarkedLink) -> LaurentPoly:
    """Weighted invariant of a marked link.

    Computed directly from the weighted Fox matrix and, independently,
    by substituting the weights into the multivariable invariant times
    (1 - t).  The two must agree up to units.
    """
    if link.marked is None:
        return one_variable_delta(link)
    d = link.degree
    base_of = link.component_of_strand()
    images = tuple((-d,) if base_of[s] == link.marked else (1,)
                   for s in range(link.braid.strands))
    direct = alexander_polynomial(closure_presentation(link.braid),
                                  AbelMap(1, images))

    multi = multivariable_delta(link)
    weights = tuple(-d if c == 0 else 1 for c in link.colour_order())
    shifted = normalize(multi.substitute(weights) * LaurentPoly.univariate({0: 1, 1: -1}))
    if not equal_up_to_units(direct, shifted):
        raise ComputationError(
            "weighted invariant disagrees with the substituted multivariable "
            f"one: {poly_to_str(direct)} vs {poly_to_str(shifted)}")
    return direct


# ---------------------------------------------------------------------------
# stock links


def torus_link(strands: int, colour_start: int = 1) -> MarkedLink:
    """Closure of the full twist: strands pairwise-linked circles."""
    braid = BraidWord(strands, tuple(range(1, strands)) * strands)
    colours = {s: colour_start + s for s in range(strands)}
    return MarkedLink(braid, colours)


def marked_torus_link(strands: int, degree: int) -> MarkedLink:
    """Full-twist closure with strand 0 as the marked line branch."""
    braid = BraidWord(strands, tuple(range(1, strands)) * strands)
    colours = {s: s for s in range(strands)}
    return MarkedLink(braid, colours, marked=0, degree=degree)


def hat_vanishing_survey(named_links) -> list[dict]:
    """Evaluate the hat invariant over (name, link) pairs.

    Returns one record per link with the polynomial text and whether it
    vanished; useful for scanning families without asserting anything.
    """
    records = []
    for name, link in named_links:
        value = hat_delta(link)
        records.append({
            "name": name,
            "hat": poly_to_str(value),
            "vanishes": value.is_zero,
        })
    return records


# ---------------------------------------------------------------------------
# JSON format


def link_from_json(obj: object, source: str | None = None) -> MarkedLink:
    """Decode {"braid": {...}, "colours": {"1": 1, ...},
    "marked": 1 | null, "degree": d | null} link data.

    Strands are numbered from 1 in the JSON (matching braid letters);
    each component is keyed by its smallest strand.
    """
    if not isinstance(obj, dict):
        raise InputError("link must be a JSON object", source=source)
    braid = braid_from_json(obj.get("braid"), source=source)
    colours_obj = obj.get("colours")
    if not isinstance(colours_obj, dict):
        raise InputError("colours must map base strands to colour numbers",
                         source=source, field="colours")
    colours = {}
    for key, value in colours_obj.items():
        try:
            strand = int(key)
        except (TypeError, ValueError):
            raise InputError(f"colour key {key!r} is not a strand number",
                             source=source, field="colours") from None
        if not 1 <= strand <= braid.strands:
            raise InputError(f"strand {strand} is out of range 1.."
                             f"{braid.strands}", source=source,
                             field="colours")
        if not isinstance(value, int):
            raise InputError(f"colour of strand {key} must be an integer",
                             source=source, field="colours")
        colours[strand - 1] = value
    expected = sorted(min(c) + 1 for c in strand_components(braid))
    if sorted(k + 1 for k in colours) != expected:
        raise InputError("colours must be keyed by the component base "
                         f"strands {expected}", source=source,
                         field="colours")
    marked = obj.get("marked")
    if marked is not None:
        if not isinstance(marked, int) or marked - 1 not in colours:
            raise InputError("marked must be the base strand of a component "
                             "or null", source=source, field="marked")
        marked -= 1
    degree = obj.get("degree")
    if degree is not None and not isinstance(degree, int):
        raise InputError("degree must be an integer or null",
                         source=source, field="degree")
    try:
        return MarkedLink(braid, colours, marked=marked, degree=degree)
    except ValueError as exc:
        raise InputError(str(exc), source=source, field="colours") from None


def link_to_json(link: MarkedLink) -> dict:
    obj: dict = {
        "braid": braid_to_json(link.braid),
        "colours": {str(k + 1): v for k, v in sorted(link.colours.items())},
    }
    if link.marked is not None:
        obj["marked"] = link.marked + 1
        obj["degree"] = link.degree
    return obj
