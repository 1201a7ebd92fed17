"""Explicit isomorphisms between same-order field representations.

The construction follows the evaluation-homomorphism recipe: find a root a
of the source modulus inside the target field, then map each source element
g(z) to g(a) evaluated in the target.  Every root gives one isomorphism;
the builder picks the first root in enumeration order for determinism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import OrderMismatchError, RootNotFoundError, ScaleLimitError
from .factorization import evaluate_in_field, roots_in_field
from .field_extension import FieldElement, FieldSpec, enumerate_elements

MAX_ISO_ORDER = 1 << 12
EXHAUSTIVE_LIMIT = 64


@dataclass
class FieldIsomorphism:
    """A root image a (with f_source(a) = 0 in the target) and the induced
    total map g(z) -> g(a)."""

    source: FieldSpec
    target: FieldSpec
    root_image: FieldElement
    mapping: dict[FieldElement, FieldElement]

    def __call__(self, a: FieldElement) -> FieldElement:
        return self.mapping[a]

    def pairs(self) -> list[tuple[FieldElement, FieldElement]]:
        """(source, image) pairs in source enumeration order."""
        return [(a, self.mapping[a]) for a in enumerate_elements(self.source)]


def _require_compatible(source: FieldSpec, target: FieldSpec) -> None:
    if source.p != target.p or source.r != target.r:
        raise OrderMismatchError(
            f"cannot map GF({source.q}) (p={source.p.p}, r={source.r}) onto "
            f"GF({target.q}) (p={target.p.p}, r={target.r})"
        )
    if source.q > MAX_ISO_ORDER:
        raise ScaleLimitError(f"order {source.q} exceeds {MAX_ISO_ORDER}")


def _induced_map(
    source: FieldSpec, target: FieldSpec, a: FieldElement
) -> dict[FieldElement, FieldElement]:
    return {
        g: evaluate_in_field(g.rep, a) for g in enumerate_elements(source)
    }


def build_isomorphism(source: FieldSpec, target: FieldSpec) -> FieldIsomorphism:
    """Isomorphism through the first root (enumeration order) of the source
    modulus in the target."""
    _require_compatible(source, target)
    roots = roots_in_field(source.modulus.poly, target)
    if not roots:
        raise RootNotFoundError(
            f"{source.modulus} has no root in {target}; arithmetic is broken"
        )
    a = roots[0]
    return FieldIsomorphism(source, target, a, _induced_map(source, target, a))


def enumerate_isomorphisms(
    source: FieldSpec, target: FieldSpec
) -> list[FieldIsomorphism]:
    """One isomorphism per root of the source modulus in the target."""
    _require_compatible(source, target)
    return [
        FieldIsomorphism(source, target, a, _induced_map(source, target, a))
        for a in roots_in_field(source.modulus.poly, target)
    ]


def compose(
    first: FieldIsomorphism, second: FieldIsomorphism
) -> FieldIsomorphism:
    """The map second(first(.)); defined when first.target == second.source."""
    if first.target != second.source:
        raise OrderMismatchError("composition requires matching middle field")
    return FieldIsomorphism(
        source=first.source,
        target=second.target,
        root_image=second.mapping[first.root_image],
        mapping={u: second.mapping[v] for u, v in first.mapping.items()},
    )


@dataclass
class IsomorphismReport:
    iso: FieldIsomorphism
    total_and_bijective: bool
    maps_identities: bool
    root_image_is_root: bool
    exhaustive: bool
    cases: int
    failures: list[str]
    witnesses: list[tuple[FieldElement, FieldElement, str]]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_isomorphism(
    iso: FieldIsomorphism, seed: int = 0, samples: int = 2000
) -> IsomorphismReport:
    """Check bijectivity, identity preservation, the root-image property,
    and that + and * are preserved: exhaustively over all pairs for
    q <= 64, on seeded random pairs above that.  Violating pairs are
    reported as witnesses rather than raised."""
    failures: list[str] = []
    witnesses: list[tuple[FieldElement, FieldElement, str]] = []
    source, target = iso.source, iso.target
    elems = enumerate_elements(source)

    total = all(a in iso.mapping for a in elems) and len(iso.mapping) == len(elems)
    images = set(iso.mapping.values()) if total else set()
    bijective = total and len(images) == source.q and all(
        b.field == target for b in images
    )
    if not bijective:
        failures.append("mapping is not a bijection onto the target")

    identities_ok = True
    if total:
        if not iso.mapping[source.zero].is_zero:
            identities_ok = False
            failures.append("0 does not map to 0")
        if iso.mapping[source.one] != target.one:
            identities_ok = False
            failures.append("1 does not map to 1")

    root_ok = evaluate_in_field(source.modulus.poly, iso.root_image).is_zero
    if not root_ok:
        failures.append(
            f"root image {iso.root_image} is not a root of {source.modulus}"
        )

    cases = 0
    exhaustive = source.q <= EXHAUSTIVE_LIMIT
    if total:
        if exhaustive:
            pair_iter = ((u, v) for u in elems for v in elems)
        else:
            rng = random.Random(seed)
            pair_iter = (
                (
                    source.element_at(rng.randrange(source.q)),
                    source.element_at(rng.randrange(source.q)),
                )
                for _ in range(samples)
            )
        for u, v in pair_iter:
            cases += 1
            if iso.mapping[u + v] != iso.mapping[u] + iso.mapping[v]:
                witnesses.append((u, v, "+"))
                failures.append(
                    f"addition not preserved at ({u}, {v}): "
                    f"({u})+({v}) maps inconsistently"
                )
            if iso.mapping[u * v] != iso.mapping[u] * iso.mapping[v]:
                witnesses.append((u, v, "*"))
                failures.append(
                    f"multiplication not preserved at ({u}, {v}): "
                    f"({u})*({v}) maps inconsistently"
                )

    return IsomorphismReport(
        iso=iso,
        total_and_bijective=bijective,
        maps_identities=identities_ok,
        root_image_is_root=root_ok,
        exhaustive=exhaustive,
        cases=cases,
        failures=failures,
        witnesses=witnesses,
    )
