"""Repair-time CSS code construction.

For a failed node f and m = 2k-2 helpers, the X- and Z-side parity checks
act on one dit per helper:

    HX = [I | lam_f I] (L2 Vt)^(-1)      HZ = [I | lam_f I] (L1 Vt)^(-1)

where Vt stacks the helpers' full Vandermonde rows (m x m), and L1, L2 are
diagonal precodings L1 = diag(u) (Lbar - lam_f I)^(-1),
L2 = diag(u') (Lbar - lam_f I)^(-1) with Lbar = diag(helper lam values).
The free vector u is any nonzero vector; u' = w / u componentwise, where w
holds the dual generalized Reed-Solomon weights of the helper evaluation
points. That choice makes Vbar^T diag(u') diag(u) Vbar vanish, which is
exactly what forces HX HZ^T = 0, so the pair generates a valid stabilizer
group. By construction HZ (L1 Vt) = HX (L2 Vt) = [I | lam_f I], which is
why the measured syndromes later read off the failed node's rows directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .errors import (
    DimensionMismatch,
    DualContainmentViolated,
    InvalidHelperSet,
    RepeatedPoint,
    ZeroU,
)
from .gf import GF
from .matrix import Mat, hstack, vandermonde
from .pmcode import SystemParams


@dataclass(frozen=True)
class RepairCSS:
    """The repair-time code for one (failed node, helper set) choice."""

    failed_node: int
    helpers: tuple[int, ...]
    hx: Mat
    hz: Mat
    lam1: tuple[int, ...]
    lam2: tuple[int, ...]
    u: tuple[int, ...]
    u_prime: tuple[int, ...]
    lam_f: int

    def to_json_dict(self, full: bool = False) -> dict:
        d = {
            "HX": self.hx.to_rows(),
            "HZ": self.hz.to_rows(),
            "Lam1": list(self.lam1),
            "Lam2": list(self.lam2),
            "u": list(self.u),
            "uPrime": list(self.u_prime),
        }
        if full:
            d = {
                "failedNode": self.failed_node,
                "helpers": list(self.helpers),
                **d,
                "lamF": self.lam_f,
            }
        return d


def grs_dual_weights(field: GF, points: Sequence[int]) -> list[int]:
    """w_j = (prod_{i != j} (points_j - points_i))^(-1).

    These are the dual-code weights of a generalized Reed-Solomon code on
    the given points: sum_j w_j points_j^m = 0 for every 0 <= m <= d-2.
    """
    pts = [x % field.p for x in points]
    if len(set(pts)) != len(pts):
        raise RepeatedPoint(f"points must be pairwise distinct: {points}")
    weights = []
    for j, pj in enumerate(pts):
        prod = 1
        for i, pi in enumerate(pts):
            if i != j:
                prod = prod * (pj - pi) % field.p
        weights.append(field.inv(prod))
    return weights


def build_repair_css(
    params: SystemParams,
    failed: int,
    helpers: Sequence[int],
    u: Sequence[int] | None = None,
) -> RepairCSS:
    """Construct the repair-time code; helpers must number exactly 2k-2."""
    field = params.field
    m = 2 * params.alpha0
    hs = tuple(sorted(helpers))
    if not 1 <= failed <= params.n:
        raise InvalidHelperSet(f"failed node {failed} out of range")
    if (
        len(hs) != m
        or len(set(hs)) != m
        or failed in hs
        or hs[0] < 1
        or hs[-1] > params.n
    ):
        raise InvalidHelperSet(
            f"need {m} distinct helpers in [1, {params.n}] excluding node {failed}"
        )

    if u is None:
        u_vec = (1,) * m
    else:
        if len(u) != m:
            raise ZeroU(f"u must have length {m}")
        u_vec = tuple(x % field.p for x in u)
        if 0 in u_vec:
            raise ZeroU("u entries must be nonzero")

    lam_f = params.lam[failed - 1]
    lam_h = [params.lam[s - 1] for s in hs]
    if lam_f in lam_h:
        # only reachable with allow_repeated_lambda params
        raise InvalidHelperSet(
            f"helper shares lam value {lam_f} with failed node {failed}"
        )

    pts = [params.eval_points[s - 1] for s in hs]
    w = grs_dual_weights(field, pts)
    u_prime = tuple(field.mul(wj, field.inv(uj)) for wj, uj in zip(w, u_vec))
    denom_inv = [field.inv(field.sub(ls, lam_f)) for ls in lam_h]
    lam1 = tuple(field.mul(uj, di) for uj, di in zip(u_vec, denom_inv))
    lam2 = tuple(field.mul(uj, di) for uj, di in zip(u_prime, denom_inv))

    v_t = vandermonde(field, pts, m)
    ident = Mat.identity(field, params.alpha0)
    selector = hstack([ident, ident.scale(lam_f)])
    hx = selector @ (Mat.diag(field, lam2) @ v_t).inv()
    hz = selector @ (Mat.diag(field, lam1) @ v_t).inv()

    if not check_dual_containment(hx, hz):
        raise DualContainmentViolated(
            f"HX HZ^T != 0 for failed={failed}, helpers={hs}"
        )
    return RepairCSS(
        failed_node=failed,
        helpers=hs,
        hx=hx,
        hz=hz,
        lam1=lam1,
        lam2=lam2,
        u=u_vec,
        u_prime=u_prime,
        lam_f=lam_f,
    )


def check_dual_containment(hx: Mat, hz: Mat) -> bool:
    """True iff HX HZ^T = 0, i.e. the pair defines a valid stabilizer group."""
    if hx.cols != hz.cols or hx.field != hz.field:
        raise DimensionMismatch("HX and HZ must share width and field")
    return (hx @ hz.T).is_zero()
