"""Plane curves given by their components and the links of their
singular points.

The data records a distinguished line L as component 0 and the curve C
as the remaining components.  Every singular point of the union carries
the link of the singularity, with branch colours naming the components
the branches belong to; points on L carry marked links whose degree
field holds the total degree of C.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .linkpoly import MarkedLink, hat_delta, link_from_json, link_to_json
from .ring import LaurentPoly, normalize


@dataclass(frozen=True)
class CurveComponent:
    name: str
    degree: int
    genus: int

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"component {self.name!r} needs degree >= 1")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"component {self.name!r} needs genus >= 0")


@dataclass(frozen=True)
class Singularity:
    link: MarkedLink
    on_L: bool

    def branch_count(self, colours: set[int]) -> int:
        """Number of link components whose colour lies in the given set."""
        return sum(1 for c in self.link.colours.values() if c in colours)


@dataclass(frozen=True)
class CurveData:
    components: tuple[CurveComponent, ...]
    singularities: tuple[Singularity, ...]

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValueError("need the line plus at least one curve component")
        line = self.components[0]
        if line.degree != 1 or line.genus != 0:
            raise ValueError("component 0 is the line: degree 1, genus 0")
        valid = set(range(len(self.components)))
        for idx, sing in enumerate(self.singularities):
            used = set(sing.link.colours.values())
            if not used <= valid:
                raise ValueError(
                    f"singularity {idx} colours {sorted(used - valid)} do not "
                    "name components")
            if sing.on_L != (0 in used):
                raise ValueError(
                    f"singularity {idx}: a branch of colour 0 is required "
                    "exactly when the point lies on the line")
            if sing.on_L:
                if sing.link.marked is None:
                    raise ValueError(
                        f"singularity {idx}: points on the line need a marked link")
                if sing.link.degree != self.degree:
                    raise ValueError(
                        f"singularity {idx}: marked link degree "
                        f"{sing.link.degree} != curve degree {self.degree}")
            elif sing.link.marked is not None:
                raise ValueError(
                    f"singularity {idx}: marked links belong on the line")

    @property
    def degree(self) -> int:
        """Total degree of C (the line not included)."""
        return sum(c.degree for c in self.components[1:])

    @property
    def n_curve_components(self) -> int:
        return len(self.components) - 1

    def on_line(self) -> list[Singularity]:
        return [s for s in self.singularities if s.on_L]

    def off_line(self) -> list[Singularity]:
        return [s for s in self.singularities if not s.on_L]


def euler_characteristic(curve: CurveData, include_L: bool = True) -> int:
    """Topological Euler characteristic of the chosen subdivisor.

    Normalizations contribute 2 - 2g each; a singular point gluing b
    included branches together loses b - 1.
    """
    idxs = range(len(curve.components)) if include_L else \
        range(1, len(curve.components))
    colours = set(idxs)
    total = sum(2 - 2 * curve.components[i].genus for i in idxs)
    for sing in curve.singularities:
        b = sing.branch_count(colours)
        if b > 1:
            total -= b - 1
    return total


def first_betti(curve: CurveData, include_L: bool = True) -> int:
    """First Betti number of the subdivisor, which is connected because
    plane curves always intersect."""
    idxs = range(len(curve.components)) if include_L else \
        range(1, len(curve.components))
    colours = set(idxs)
    total = sum(2 * curve.components[i].genus for i in idxs)
    for sing in curve.singularities:
        b = sing.branch_count(colours)
        if b > 1:
            total += b - 1
    return total - len(colours) + 1


def boundary_delta(curve: CurveData) -> LaurentPoly:
    """(1 - t)^{b_1(C union L)} times the hat invariants of all
    singular points."""
    out = LaurentPoly.univariate({0: 1, 1: -1}) ** first_betti(curve, include_L=True)
    for sing in curve.singularities:
        out = out * hat_delta(sing.link)
    return normalize(out)


@dataclass(frozen=True)
class AffineCounts:
    """Bookkeeping constants of the affine curve C minus L."""

    s_aff: int     # singular points of C off the line
    ell: int       # number of components of C
    chi_ns: int    # Euler characteristic of the nonsingular affine part


def affine_counts(curve: CurveData) -> AffineCounts:
    s_aff = len(curve.off_line())
    ell = curve.n_curve_components
    chi = euler_characteristic(curve, include_L=False)
    chi_ns = chi - len(curve.on_line()) - s_aff
    return AffineCounts(s_aff=s_aff, ell=ell, chi_ns=chi_ns)


# ---------------------------------------------------------------------------
# JSON format


def curve_from_json(obj: object, source: str | None = None) -> CurveData:
    """Decode {"components": [{"name", "degree", "genus"}, ...],
    "singularities": [{"link": {...}, "on_L": bool}, ...]} data."""
    if not isinstance(obj, dict):
        raise InputError("curve must be a JSON object", source=source)
    comps_obj = obj.get("components")
    if not isinstance(comps_obj, list) or len(comps_obj) < 2:
        raise InputError("components must list the line and at least one "
                         "curve component", source=source, field="components")
    components = []
    for idx, comp in enumerate(comps_obj):
        if not isinstance(comp, dict):
            raise InputError(f"component {idx} must be an object",
                             source=source, field="components")
        name = comp.get("name", f"component{idx}")
        degree = comp.get("degree")
        genus = comp.get("genus", 0)
        if not isinstance(name, str):
            raise InputError(f"component {idx} name must be a string",
                             source=source, field="components")
        if not isinstance(degree, int) or not isinstance(genus, int):
            raise InputError(f"component {idx} needs integer degree and genus",
                             source=source, field="components")
        try:
            components.append(CurveComponent(name, degree, genus))
        except ValueError as exc:
            raise InputError(str(exc), source=source,
                             field="components") from None
    sings_obj = obj.get("singularities", [])
    if not isinstance(sings_obj, list):
        raise InputError("singularities must be a list",
                         source=source, field="singularities")
    singularities = []
    for idx, sing in enumerate(sings_obj):
        if not isinstance(sing, dict) or "link" not in sing:
            raise InputError(f"singularity {idx} must be an object with a link",
                             source=source, field="singularities")
        link = link_from_json(sing["link"], source=source)
        on_L = sing.get("on_L", link.marked is not None)
        if not isinstance(on_L, bool):
            raise InputError(f"singularity {idx}: on_L must be a boolean",
                             source=source, field="singularities")
        singularities.append(Singularity(link, on_L))
    try:
        return CurveData(tuple(components), tuple(singularities))
    except ValueError as exc:
        raise InputError(str(exc), source=source) from None


def curve_to_json(curve: CurveData) -> dict:
    return {
        "components": [{"name": c.name, "degree": c.degree, "genus": c.genus}
                       for c in curve.components],
        "singularities": [{"link": link_to_json(s.link), "on_L": s.on_L}
                          for s in curve.singularities],
    }
