"""Bundled example catalog: manifest loading, rational point samplers, and
a verification suite that recomputes every recorded quantity from scratch."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Dict, List, Optional, Tuple

from .gaussian import GaussianRational as QI
from .gaussian import QI_ZERO
from .manifold import (CRManifold, check_reality, genericity_rank,
                       levi_signature, pseudoconcavity_probe)
from .segre import (check_symmetry, essential_finiteness, minimality,
                    segre_map_locally_injective)
from .correspond import (AlgebraicMap, Correspondence, build_correspondence,
                         fiber, power_correspondence, verify_invariance)


# -- rational point samplers -------------------------------------------------------

def _phase(t: Fraction) -> QI:
    """Rational point on the unit circle: ((1-t^2) + 2t i) / (1+t^2)."""
    d = 1 + t * t
    return QI((1 - t * t) / d, (2 * t) / d)


def _frac(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 6))


def sample_sphere_point(rng: random.Random) -> Tuple[QI, QI]:
    """Rational point with |z1|^2 + |z2|^2 = 1."""
    t = _frac(rng)
    u = (1 - t * t) / (1 + t * t)
    v = (2 * t) / (1 + t * t)
    return (_phase(_frac(rng)) * QI(u), _phase(_frac(rng)) * QI(v))


def sample_hyperquadric3_point(rng: random.Random) -> Tuple[QI, QI, QI]:
    """Rational point with |z1|^2 + |z2|^2 - |z3|^2 = 1."""
    t = _frac(rng)
    while t == 0:
        t = _frac(rng)
    c = (t - 1 / t) / 2
    e = (t + 1 / t) / 2
    z1, z2 = sample_sphere_point(rng)
    return (z1 * QI(e), z2 * QI(e), _phase(_frac(rng)) * QI(c))


def sample_hyperquadric2_point(rng: random.Random) -> Tuple[QI, QI]:
    """Rational point with 1 + |z1|^2 - |z2|^2 = 0."""
    t = _frac(rng)
    while t == 0:
        t = _frac(rng)
    c = (t - 1 / t) / 2
    e = (t + 1 / t) / 2
    return (_phase(_frac(rng)) * QI(c), _phase(_frac(rng)) * QI(e))


def sample_power_point(rng: random.Random) -> Tuple[QI, QI]:
    """Rational point with 1 + |z1|^4 - |z2|^4 = 0 (slice z1 = 0)."""
    return (QI_ZERO, _phase(_frac(rng)))


def sample_tube_point(rng: random.Random) -> Tuple[QI, QI]:
    """Rational point with |z1|^2 = 1; z2 is free."""
    return (_phase(_frac(rng)), QI(_frac(rng), _frac(rng)))


SAMPLERS: Dict[str, Callable[[random.Random], tuple]] = {
    "sphere_C2": sample_sphere_point,
    "hyperquadric_k1_n3": sample_hyperquadric3_point,
    "hyperquadric_k1_n2": sample_hyperquadric2_point,
    "power_r2_n2": sample_power_point,
    "tube_C2": sample_tube_point,
}


def sample_points(name: str, count: int, seed: int) -> List[tuple]:
    """Distinct rational points on the named catalog manifold."""
    sampler = SAMPLERS.get(name)
    if sampler is None:
        raise KeyError("no point sampler for catalog entry " + name)
    rng = random.Random(seed)
    pts, seen = [], set()
    attempts = 0
    while len(pts) < count:
        attempts += 1
        if attempts > 500 * count:
            raise RuntimeError(
                f"sampler for {name} produced only {len(pts)} distinct "
                f"points; ask for fewer")
        p = sampler(rng)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


# -- manifest loading --------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    kind: str
    expected: Dict[str, dict]
    manifold: Optional[CRManifold] = None
    maps: Dict[str, AlgebraicMap] = field(default_factory=dict)
    source: Optional[CRManifold] = None
    target: Optional[CRManifold] = None
    map: Optional[AlgebraicMap] = None
    relation: Optional[dict] = None
    source_name: Optional[str] = None
    target_name: Optional[str] = None


def _read_data(fname: str) -> str:
    return resources.files("segrekit.data").joinpath(fname).read_text()


def load_manifold(fname: str) -> CRManifold:
    return CRManifold.from_text(_read_data(fname))


def _base(fname: str) -> str:
    return fname.rsplit(".", 1)[0]


def load_catalog() -> Dict[str, CatalogEntry]:
    manifest = json.loads(_read_data("manifest.json"))
    out: Dict[str, CatalogEntry] = {}
    for rec in manifest["entries"]:
        entry = CatalogEntry(name=rec["name"], kind=rec["kind"],
                             expected=rec.get("expected", {}))
        if entry.kind == "manifold":
            entry.manifold = load_manifold(rec["manifold"])
            for label, fname in rec.get("maps", {}).items():
                entry.maps[label] = AlgebraicMap.from_text(
                    _read_data(fname), entry.manifold)
        elif entry.kind in ("correspondence", "relation"):
            entry.source = load_manifold(rec["source"])
            entry.target = load_manifold(rec["target"])
            entry.source_name = _base(rec["source"])
            entry.target_name = _base(rec["target"])
            if entry.kind == "correspondence":
                entry.map = AlgebraicMap.from_text(_read_data(rec["map"]),
                                                   entry.source)
            else:
                entry.relation = dict(rec["relation"])
        else:
            raise ValueError("unknown catalog kind: " + entry.kind)
        out[entry.name] = entry
    return out


# -- the verification suite --------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass
class SuiteReport:
    entry: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(ok), detail))


def _suite_manifold(entry: CatalogEntry, seed: int) -> SuiteReport:
    rep = SuiteReport(entry.name)
    M = entry.manifold
    exp = entry.expected
    rep.add("reality", check_reality(M), "defining functions are real valued")
    pts = sample_points(entry.name, 5, seed)
    rep.add("sampler", all(M.contains(p) for p in pts),
            "sampled points satisfy the defining equations")
    rep.add("genericity", all(genericity_rank(M, p) == M.d for p in pts),
            "full-rank antiholomorphic gradient at samples")
    sym_pts = sample_points(entry.name, 8, seed + 1)
    sym = all(check_symmetry(M, z, w) for z in sym_pts for w in sym_pts)
    rep.add("segre_symmetry", sym, "z in Q_w iff w in Q_z on sample pairs")
    if "levi_signature" in exp:
        want = tuple(exp["levi_signature"]["value"])
        sigs = [levi_signature(M, p, (1,)).signature for p in pts]
        rep.add("levi_signature", all(s == want for s in sigs),
                "signature %s at all samples" % (sigs[0],))
    if "pseudoconcave" in exp:
        probes = pseudoconcavity_probe(M, pts)
        got = all(r.mixed for r in probes)
        rep.add("pseudoconcave", got == exp["pseudoconcave"]["value"],
                "mixed Levi signature at every probe: %s" % got)
    if "essfin_degree" in exp:
        want = exp["essfin_degree"]["value"]
        degs = []
        for p in pts[:3]:
            fin, deg = essential_finiteness(M, p)
            degs.append(deg if fin else None)
        rep.add("essfin_degree", all(d == want for d in degs),
                "inversion degrees %s" % degs)
    if "essentially_finite" in exp:
        fin, _ = essential_finiteness(M, pts[0])
        rep.add("essentially_finite",
                fin == exp["essentially_finite"]["value"],
                "essentially finite: %s" % fin)
    if "locally_injective" in exp:
        got = segre_map_locally_injective(M, pts[0])
        rep.add("locally_injective",
                got == exp["locally_injective"]["value"],
                "Segre map locally injective: %s" % got)
    if "minimality_j0" in exp:
        mini, j = minimality(M, pts[0])
        rep.add("minimality_j0", mini and j == exp["minimality_j0"]["value"],
                "minimal with stabilization index %d" % j)
    if "minimal" in exp:
        mini, j = minimality(M, pts[0])
        rep.add("minimal", mini == exp["minimal"]["value"],
                "minimal: %s (index %d)" % (mini, j))
    for label, f in entry.maps.items():
        pts2 = sample_points(entry.name, 3, seed + 2)
        imgs = [f.apply(p) for p in pts2]
        if all(M.contains(q) for q in imgs):
            inv = verify_invariance(M, M, f, pts2, per_point=5, seed=seed)
            rep.add("invariance_" + label, inv.ok,
                    "%d/%d exact evaluations passed" % (inv.passed, inv.checked))
    return rep


def _build_entry_correspondence(entry: CatalogEntry) -> Correspondence:
    if entry.kind == "relation":
        return power_correspondence(entry.source, entry.target,
                                    entry.relation["r"], entry.relation["s"])
    return build_correspondence(entry.source, entry.target, entry.map)


def _suite_correspondence(entry: CatalogEntry, seed: int) -> SuiteReport:
    rep = SuiteReport(entry.name)
    exp = entry.expected
    C = _build_entry_correspondence(entry)
    generic = tuple(QI(Fraction(v)) for v in (1, 4))
    if "forward_fiber" in exp:
        res = fiber(C, generic)
        rep.add("forward_fiber", res.degree == exp["forward_fiber"]["value"],
                "fiber degree %d over a generic source point" % res.degree)
    if "reverse_fiber" in exp:
        res = fiber(C, generic, reverse=True)
        rep.add("reverse_fiber", res.degree == exp["reverse_fiber"]["value"],
                "fiber degree %d over a generic target point" % res.degree)
    if entry.map is not None and entry.source_name in SAMPLERS:
        pts = sample_points(entry.source_name, 3, seed)
        inv = verify_invariance(entry.source, entry.target, entry.map,
                                pts, per_point=5, seed=seed)
        rep.add("invariance", inv.ok,
                "%d/%d exact evaluations passed" % (inv.passed, inv.checked))
    if "source_essfin_degree" in exp:
        p = sample_points(entry.source_name, 1, seed + 2)[0]
        fin, deg = essential_finiteness(entry.source, p)
        rep.add("source_essfin_degree",
                fin and deg == exp["source_essfin_degree"]["value"],
                "source inversion degree %s" % deg)
    if "source_minimality_j0" in exp:
        p = sample_points(entry.source_name, 1, seed + 3)[0]
        mini, j = minimality(entry.source, p)
        rep.add("source_minimality_j0",
                mini and j == exp["source_minimality_j0"]["value"],
                "source minimal with stabilization index %d" % j)
    return rep


def run_suite(entry: CatalogEntry, seed: int = 0) -> SuiteReport:
    """Recompute every recorded quantity for a catalog entry and compare."""
    if entry.kind == "manifold":
        return _suite_manifold(entry, seed)
    return _suite_correspondence(entry, seed)
