"""Charge transfers lifting every positively curved vertex to a threshold.

Feasibility is a max-flow problem: good vertices supply their excess over the
threshold, bad vertices demand their shortfall, and charge may move between
any good/bad pair within a fixed graph distance. Capacities are scaled to
integers so the flow is exact.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from . import kernels
from .curvature import GOOD_THRESHOLD, classify_value, curvature_profile, format_q, parse_q
from .errors import InvalidArgument, MalformedInput, NotNonnegativelyCurved
from .planar_map import Patch, PlanarMap, split_holes

DEFAULT_RADIUS = 4

# Bad patterns (below 1/132) that occur in nonnegatively curved tessellations.
BAD_PATTERN_FIXTURE = (
    *[(3, 7, k) for k in range(32, 42)],
    *[(3, 8, k) for k in range(21, 24)],
    (3, 9, 16), (3, 9, 17),
    (3, 10, 14),
    (3, 11, 13),
    (4, 5, 18), (4, 5, 19),
    (4, 7, 9),
)


@dataclass(frozen=True)
class Transfer:
    source: int
    target: int
    amount: Fraction


@dataclass(frozen=True)
class DischargingCertificate:
    transfers: tuple[Transfer, ...]
    radius: int
    threshold: Fraction = GOOD_THRESHOLD

    def as_dict(self) -> dict:
        return {
            "transfers": [{"from": t.source, "to": t.target, "amount": format_q(t.amount)} for t in self.transfers],
            "radius": self.radius,
            "threshold": format_q(self.threshold),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    @classmethod
    def from_dict(cls, obj: dict) -> "DischargingCertificate":
        try:
            ts = tuple(Transfer(int(t["from"]), int(t["to"]), parse_q(str(t["amount"])))
                       for t in obj["transfers"])
            return cls(ts, int(obj["radius"]), parse_q(str(obj.get("threshold", "1/132"))))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "DischargingCertificate":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"certificate is not JSON: {exc}") from exc


def _check_args(radius, threshold):
    if not isinstance(radius, int) or radius < 0:
        raise InvalidArgument(f"radius must be a nonnegative integer, got {radius!r}")
    threshold = Fraction(threshold)
    if threshold <= 0:
        raise InvalidArgument("threshold must be positive")
    return threshold


def _within(m: PlanarMap, src: int, radius: int) -> np.ndarray:
    return kernels.bfs_within(m.first, m.target, m._idx(src), radius)


def find_certificate(g: PlanarMap | Patch, radius: int = DEFAULT_RADIUS,
                     threshold: Fraction = GOOD_THRESHOLD) -> DischargingCertificate | None:
    """Return a feasible certificate, or ``None`` when no transfer plan exists.

    Only vertices with curvature (interior ones, for a patch) take part.
    """
    threshold = _check_args(radius, threshold)
    m, _ = split_holes(g)
    prof = curvature_profile(g)
    phi = prof.phi
    neg = [v for v, x in phi.items() if x < 0]
    if neg:
        raise NotNonnegativelyCurved(f"vertex {neg[0]} has curvature {format_q(phi[neg[0]])}")
    good = [v for v, x in phi.items() if x >= threshold]
    bad = [v for v, x in phi.items() if 0 < x < threshold]
    if not bad:
        return DischargingCertificate((), radius, threshold)

    supply = {v: phi[v] - threshold for v in good}
    demand = {v: threshold - phi[v] for v in bad}
    if sum(supply.values(), Fraction(0)) < sum(demand.values(), Fraction(0)):
        return None
    scale = 1
    for x in (*supply.values(), *demand.values()):
        scale = math.lcm(scale, x.denominator)

    G = nx.DiGraph()
    need = 0
    good_set = set(good)
    for v in bad:
        cap = int(demand[v] * scale)
        need += cap
        G.add_edge(("b", v), "t", capacity=cap)
        dist = _within(m, v, radius)
        for i in np.flatnonzero(dist >= 0):
            w = m.vertex_ids[i]
            if w in good_set:
                G.add_edge(("g", w), ("b", v))  # no capacity attribute: unbounded
    for w in good:
        if G.has_node(("g", w)):
            G.add_edge("s", ("g", w), capacity=int(supply[w] * scale))
    if not G.has_node("s"):
        return None
    value, flow = nx.maximum_flow(G, "s", "t")
    if value < need:
        return None
    transfers = []
    for w in good:
        node = ("g", w)
        if node not in flow:
            continue
        for (_, v), amt in sorted(flow[node].items()):
            if amt > 0:
                transfers.append(Transfer(w, v, Fraction(amt, scale)))
    return DischargingCertificate(tuple(transfers), radius, threshold)


@dataclass
class CertificateReport:
    ok: bool
    violations: list = field(default_factory=list)
    final: dict = field(default_factory=dict)  # vertex -> final charge

    def __bool__(self):
        return self.ok


def verify_certificate(g: PlanarMap | Patch, cert: DischargingCertificate) -> CertificateReport:
    """Check every certificate invariant exactly; violations are listed, not raised."""
    m, _ = split_holes(g)
    prof = curvature_profile(g)
    phi = prof.phi
    viol = []
    final = dict(phi)
    if cert.threshold <= 0:
        viol.append("threshold is not positive")
    for t in cert.transfers:
        tag = f"{t.source}->{t.target}"
        if t.source not in phi or t.target not in phi:
            viol.append(f"{tag}: vertex outside the curvature domain")
            continue
        if t.amount <= 0:
            viol.append(f"{tag}: nonpositive amount {format_q(t.amount)}")
        d = int(_within(m, t.source, cert.radius)[m._idx(t.target)])
        if d < 0:
            viol.append(f"{tag}: farther apart than radius {cert.radius}")
        final[t.source] -= t.amount
        final[t.target] += t.amount
    for v, x in final.items():
        if x < 0:
            viol.append(f"vertex {v}: final charge {format_q(x)} < 0")
        elif phi[v] > 0 and x < cert.threshold:
            viol.append(f"vertex {v}: final charge {format_q(x)} below threshold")
    if sum(final.values(), Fraction(0)) != prof.total:  # pragma: no cover - transfers conserve by construction
        viol.append("total charge not conserved")
    return CertificateReport(not viol, viol, final)


def bound_from_certificate(g: PlanarMap | Patch, cert: DischargingCertificate) -> int:
    """floor(total / threshold); the number of positively curved vertices cannot exceed it."""
    prof = curvature_profile(g)
    bound = math.floor(prof.total / cert.threshold)
    n_pos = len(prof.positive)
    if n_pos > bound:
        raise AssertionError(f"{n_pos} positively curved vertices exceed bound {bound}")
    return bound


def bad_vertices(g: PlanarMap | Patch, threshold: Fraction = GOOD_THRESHOLD) -> tuple[int, ...]:
    prof = curvature_profile(g)
    return tuple(v for v, x in prof.phi.items() if classify_value(x, threshold) == "bad")
