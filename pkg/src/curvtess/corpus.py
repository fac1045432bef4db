"""Regression corpus: named graphs with frozen expectations."""
from __future__ import annotations

import json
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import generators as gen
from .automorphism import cellular_automorphisms, verify_order_bounds
from .curvature import check_twelfth_integrality, curvature_profile, format_q, parse_q
from .discharging import bound_from_certificate, find_certificate, verify_certificate
from .errors import CurvtessError, InvalidArgument, MalformedInput
from .planar_map import Patch, PlanarMap, validate_tessellation
from .prismlike import is_prismlike, max_face_degree

EXTREMAL_ENV = "CURVTESS_EXTREMAL132"


def _c60_subdivided():
    return gen.subdivide_hexagons(gen.fullerene_c60())


GENERATORS = {
    "prism": lambda p: gen.prism(p["n"]),
    "antiprism": lambda p: gen.antiprism(p["n"]),
    "stacked_prism": lambda p: gen.stacked_prism(p["n"], p["bands"]),
    "pyramid": lambda p: gen.pyramid(p["n"]),
    "platonic": lambda p: gen.platonic(p["name"]),
    "c60": lambda p: gen.fullerene_c60(),
    "c60_subdivided": lambda p: _c60_subdivided(),
    "grid": lambda p: gen.grid_example(p["a"], p["b"]),
    "truncated_prism": lambda p: gen.truncate(gen.prism(p["n"])),
}


def build(kind: str, params: dict | None = None) -> PlanarMap:
    if kind not in GENERATORS:
        raise InvalidArgument(f"unknown generator {kind!r}")
    try:
        return GENERATORS[kind](params or {})
    except KeyError as exc:
        raise InvalidArgument(f"generator {kind!r} needs parameter {exc}") from None


# -- periodic bundles ----------------------------------------------------------

@dataclass(frozen=True)
class ClosureBundle:
    core: Patch
    annulus: Patch
    core_correspondence: tuple | None
    self_correspondence: tuple | None


def load_bundle(path: str | Path) -> ClosureBundle:
    """Read ``{"core": graph, "annulus": graph, "core_correspondence": [[u, v], ...], ...}``."""
    from .io import parse_json

    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: {exc}") from exc
    core, annulus = parse_json(data["core"]), parse_json(data["annulus"])
    if not isinstance(core, Patch) or not isinstance(annulus, Patch):
        raise MalformedInput("bundle core and annulus must both carry holes")

    def corr(key):
        val = data.get(key)
        return None if val is None else tuple((int(a), int(b)) for a, b in val)

    return ClosureBundle(core, annulus, corr("core_correspondence"), corr("self_correspondence"))


def extremal_path() -> Path | None:
    env = os.environ.get(EXTREMAL_ENV)
    if env:
        return Path(env)
    p = resources.files("curvtess").joinpath("data").joinpath("extremal132.patch")
    return Path(str(p))


# -- manifest ------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str | None = None
    params: dict = field(default_factory=dict)
    file: str | None = None
    expected: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusEntry":
        if "name" not in d:
            raise MalformedInput("corpus entry without a name")
        g = d.get("generator") or {}
        return cls(d["name"], g.get("kind"), dict(g.get("params", {})), d.get("file"), dict(d.get("expected", {})))


def load_manifest(path: str | Path | None = None) -> tuple[list[CorpusEntry], Path]:
    if path is None:
        res = resources.files("curvtess").joinpath("data").joinpath("corpus.json")
        text, base = res.read_text(), Path(str(res)).parent
    else:
        path = Path(path)
        text, base = path.read_text(), path.parent
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"manifest: {exc}") from exc
    if not isinstance(raw, list):
        raise MalformedInput("manifest must be a JSON array")
    return [CorpusEntry.from_dict(d) for d in raw], base


@dataclass
class EntryResult:
    name: str
    status: str  # "pass", "fail", "skip"
    mismatches: list = field(default_factory=list)
    observed: dict = field(default_factory=dict)

    def line(self) -> str:
        tail = "; ".join(self.mismatches)
        return f"{self.status.upper():4} {self.name}" + (f"  {tail}" if tail else "")


def _observe_map(g: PlanarMap, with_aut: bool) -> tuple[dict, list]:
    problems = []
    obs = {}
    rep = validate_tessellation(g)
    if not rep.valid:
        problems.append("invalid tessellation: " + ", ".join(rep.failures()))
    prof = curvature_profile(g)
    obs["total"] = format_q(prof.total)
    obs["tg"] = len(prof.positive)
    if not prof.is_nonnegative():
        problems.append("negative curvature")
    if not check_twelfth_integrality(prof):
        problems.append("12*total is not an integer")
    pl = is_prismlike(g)
    obs["prismlike"] = pl.prismlike
    dg = max_face_degree(g)
    if not pl and dg < 132 and prof.is_nonnegative():
        cert = find_certificate(g)
        if cert is None:
            problems.append("no discharging certificate")
            obs["discharge"] = "infeasible"
        else:
            if not verify_certificate(g, cert):
                problems.append("certificate does not verify")
            obs["discharge"] = bound_from_certificate(g, cert)
    if with_aut:
        grp = cellular_automorphisms(g)
        obs["aut_order"] = grp.order
        if prof.positive:
            if not verify_order_bounds(g, grp)["ok"]:
                problems.append("order divisibility fails")
    return obs, problems


def _observe_bundle(b: ClosureBundle) -> tuple[dict, list]:
    rep = gen.periodic_closure_check(b.annulus, b.core, b.core_correspondence, b.self_correspondence)
    prof = curvature_profile(rep.glued)
    obs = {"total": format_q(prof.total), "tg": len(prof.positive), "closure": bool(rep)}
    return obs, list(rep.violations)


def check_entry(entry: CorpusEntry, base: Path) -> EntryResult:
    try:
        if entry.file is not None:
            path = Path(entry.file)
            if not path.is_absolute():
                path = base / path
            if entry.name == "extremal132" and os.environ.get(EXTREMAL_ENV):
                path = Path(os.environ[EXTREMAL_ENV])
            if not path.exists():
                msg = f"{entry.name}: data file {path} not found, skipped"
                warnings.warn(msg, stacklevel=2)
                return EntryResult(entry.name, "skip", [msg])
            obs, problems = _observe_bundle(load_bundle(path))
        else:
            g = build(entry.kind, entry.params)
            obs, problems = _observe_map(g, "aut_order" in entry.expected)
    except CurvtessError as exc:
        return EntryResult(entry.name, "fail", [f"error: {exc}"])
    for key, want in entry.expected.items():
        have = obs.get(key)
        if key == "total":
            ok = have is not None and parse_q(str(have)) == parse_q(str(want))
        else:
            ok = have == want
        if not ok:
            problems.append(f"{key}: expected {want}, got {have}")
    return EntryResult(entry.name, "fail" if problems else "pass", problems, obs)


@dataclass
class CorpusReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.results:
            out[r.status] += 1
        return out


def corpus_check(manifest: str | Path | list | None = None, jobs: int = 1) -> CorpusReport:
    """Run every entry through validation, curvature, prism-likeness, discharging and symmetry."""
    if isinstance(manifest, list):
        entries, base = [e if isinstance(e, CorpusEntry) else CorpusEntry.from_dict(e) for e in manifest], Path.cwd()
    else:
        entries, base = load_manifest(manifest)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(lambda e: check_entry(e, base), entries))
    else:
        results = [check_entry(e, base) for e in entries]
    return CorpusReport(results)
