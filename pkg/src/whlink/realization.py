"""Realizing every torsion order k^2 by a branched cover of a genus-one link.

The polynomial z_1^p + z_2^2 z_3 + z_3^2 z_1 is weighted homogeneous of
degree p for the weights (1, (p+1)/4, (p-1)/2) whenever p is a prime
congruent to 3 mod 4, and its curve has genus one.  Covering it with
exponent k coprime to p therefore produces a rational homology 5-sphere
whose H_2 has order exactly k^2.  Since the family offers infinitely many
degrees, a coprime one exists for every k, and the realization is
constructive: pick the smallest usable p, build the cover, enumerate which
Smale manifolds carry the resulting order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cover import CoverLink, build_cover
from .errors import ConsistencyError, CoprimalityError, FamilyDomainError, InputError
from .invariants import MAX_POLY_DEGREE
from .smale import SmaleManifold, smale_decompositions
from .primes import family_prime_candidates, is_prime
from .weights import WeightSystem


@dataclass(frozen=True)
class FamilyMember:
    """One member of the genus-one family: prime p = 4l - 1 and its weights."""

    p: int
    l: int
    system: WeightSystem

    def as_json(self) -> dict:
        return {"p": self.p, "l": self.l, **self.system.as_json()}


def family_member(p: int) -> FamilyMember:
    """The genus-one weight system (1, (p+1)/4, (p-1)/2; p).

    Only primes congruent to 3 mod 4 qualify: otherwise (p+1)/4 is not an
    integer.  The genus is recomputed and must come out 1; the middle and
    last weights are l and 2l - 1, always coprime.
    """
    if not isinstance(p, int) or isinstance(p, bool) or p < 3 or not is_prime(p):
        raise FamilyDomainError(f"family degree must be prime, got {p!r}")
    if p % 4 != 3:
        raise FamilyDomainError(
            f"family degree must be congruent to 3 mod 4, got {p} = 4*{p // 4} + {p % 4}"
        )
    l = (p + 1) // 4
    system = WeightSystem((1, l, (p - 1) // 2), p)
    if gcd(l, 2 * l - 1) != 1:
        raise ConsistencyError(f"weights of the degree-{p} member are not coprime")
    g = system.genus()
    if g != 1:
        raise ConsistencyError(f"degree-{p} family member has genus {g}, expected 1")
    return FamilyMember(p, l, system)


@dataclass(frozen=True)
class RealizationCertificate:
    """A verified witness that some 5-manifold with |H_2| = k^2 exists.

    The cover inside carries the full two-path verification.  When k is
    squarefree the order determines the manifold and ``manifold`` holds it;
    otherwise ``manifold`` is None, ``group_undetermined`` is set, and
    ``candidates`` lists every Smale manifold compatible with the order.
    """

    k: int
    chosen_p: int
    family: FamilyMember
    cover: CoverLink
    h2_order: int
    candidates: tuple
    manifold: SmaleManifold | None
    group_undetermined: bool

    def as_json(self) -> dict:
        return {
            "k": self.k,
            "chosen_p": self.chosen_p,
            "family": self.family.as_json(),
            "cover": self.cover.as_json(),
            "h2_order": str(self.h2_order),
            "candidates": [m.as_json() for m in self.candidates],
            "manifold": None if self.manifold is None else self.manifold.as_json(),
            "group_undetermined": self.group_undetermined,
        }


def realize(
    k: int,
    *,
    prime: int | None = None,
    skip_direct_path: bool = False,
    max_poly_degree: int = MAX_POLY_DEGREE,
) -> RealizationCertificate:
    """Produce a rational homology 5-sphere with |H_2| = k^2.

    The family degree defaults to the smallest prime p = 3 mod 4 coprime
    to k, recorded in the certificate so a different one can be requested
    explicitly via ``prime``.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InputError(f"target order parameter must be an integer > 1, got {k!r}")
    if prime is None:
        chosen = next(p for p in family_prime_candidates() if gcd(k, p) == 1)
    else:
        chosen = prime
    family = family_member(chosen)
    if gcd(k, chosen) != 1:
        raise CoprimalityError(f"requested prime {chosen} divides k = {k}")
    cover = build_cover(
        family.system,
        k,
        skip_direct_path=skip_direct_path,
        max_poly_degree=max_poly_degree,
    )
    h2 = cover.h2_order
    if h2 != k * k:
        raise ConsistencyError(f"cover order {h2} is not {k}^2")
    candidates = tuple(smale_decompositions(k))
    undetermined = len(candidates) > 1
    return RealizationCertificate(
        k=k,
        chosen_p=chosen,
        family=family,
        cover=cover,
        h2_order=h2,
        candidates=candidates,
        manifold=None if undetermined else candidates[0],
        group_undetermined=undetermined,
    )


def iter_integral_genus_systems(max_degree: int):
    """Yield (system, genus) over all sorted 3-variable systems with d <= max_degree.

    Weights run over 1 <= w_1 <= w_2 <= w_3 <= d, restricted to primitive
    triples (non-primitive ones present the same links with the genus
    formula out of its domain); systems whose genus formula is fractional
    or negative are skipped.  This is the regression grid the verification
    suite sweeps.
    """
    for d in range(1, max_degree + 1):
        for w1 in range(1, d + 1):
            for w2 in range(w1, d + 1):
                for w3 in range(w2, d + 1):
                    if gcd(gcd(w1, w2), w3) != 1:
                        continue
                    ws = WeightSystem((w1, w2, w3), d)
                    value = ws.genus_value()
                    if value.denominator == 1 and value >= 0:
                        yield ws, int(value)


def search_weight_systems(target_genus: int, max_degree: int) -> list:
    """All sorted 3-variable systems of the given genus up to max_degree.

    Results are ordered by degree, then lexicographically by weights.  For
    positive target genus the scan prunes systems whose weights sum past
    the degree, which can only have genus zero.
    """
    if not isinstance(target_genus, int) or target_genus < 0:
        raise InputError(f"target genus must be a non-negative integer, got {target_genus!r}")
    if not isinstance(max_degree, int) or max_degree < 3:
        raise InputError(f"max degree must be an integer >= 3, got {max_degree!r}")
    out = []
    for d in range(1, max_degree + 1):
        for w1 in range(1, d + 1):
            for w2 in range(w1, d + 1):
                for w3 in range(w2, d + 1):
                    if target_genus > 0 and w1 + w2 + w3 > d:
                        continue
                    if gcd(gcd(w1, w2), w3) != 1:
                        continue
                    ws = WeightSystem((w1, w2, w3), d)
                    value = ws.genus_value()
                    if value.denominator == 1 and value == target_genus:
                        out.append(ws)
    return out
