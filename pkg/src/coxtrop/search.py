"""Batch enumeration and classification of signed monomial 3 x 6 matrices."""

from __future__ import annotations

import itertools
import json
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .coxgen import GenericityWarning, all_generators
from .laurent import LaurentPoly
from .pluecker import PointMatrix, TropicalPoint, genericity_report, tropical_pluecker
from .tropclass import equivalence_key, khovanskii_bounded, lineality_projection, moneric_subspace, torus_shift

ROWS, COLS = 3, 6
Entry = Tuple[int, int]
SIGN_MODES = ("none", "one", "all")


@dataclass(frozen=True)
class CandidateSpec:
    """Which signed monomial matrices ``(+-t^a_ij)`` to produce.

    ``exponent_range`` is the default inclusive interval for every entry;
    ``pinned`` fixes individual entries (1-based keys) to a single exponent.
    ``sign_entries`` lists the entries that may be negated (default: all);
    ``sign_mode`` says how many of them may be negated at once.  ``count``
    switches from exhaustive enumeration to seeded sampling.
    """

    exponent_range: Tuple[int, int] = (0, 0)
    pinned: Tuple[Tuple[Entry, int], ...] = ()
    sign_mode: str = "none"
    sign_entries: Optional[Tuple[Entry, ...]] = None
    count: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.sign_mode not in SIGN_MODES:
            raise ValueError(f"sign_mode must be one of {SIGN_MODES}")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be nonnegative")

    @classmethod
    def pinned_to(cls, exponents: Sequence[Sequence[int]], **kw) -> "CandidateSpec":
        pins = tuple(((i + 1, j + 1), e) for i, row in enumerate(exponents) for j, e in enumerate(row))
        return cls(pinned=pins, **kw)

    def ranges(self) -> List[List[range]]:
        lo, hi = self.exponent_range
        pins = dict(self.pinned)
        return [[range(pins[(i, j)], pins[(i, j)] + 1) if (i, j) in pins else range(lo, hi + 1)
                 for j in range(1, COLS + 1)] for i in range(1, ROWS + 1)]

    def flippable(self) -> List[Entry]:
        if self.sign_entries is None:
            return [(i, j) for i in range(1, ROWS + 1) for j in range(1, COLS + 1)]
        return sorted(set(self.sign_entries))

    def sign_patterns(self) -> List[frozenset]:
        ent = self.flippable()
        if self.sign_mode == "none" or not ent:
            return [frozenset()]
        if self.sign_mode == "one":
            return [frozenset()] + [frozenset([e]) for e in ent]
        return [frozenset(c) for k in range(len(ent) + 1) for c in itertools.combinations(ent, k)]


@dataclass(frozen=True)
class Candidate:
    id: str
    matrix: PointMatrix
    exponents: Tuple[Tuple[int, ...], ...]
    flips: frozenset
    degenerate: bool


def signed_monomial_matrix(exponents: Sequence[Sequence[int]], flips: Iterable[Entry] = ()) -> PointMatrix:
    flips = set(flips)
    return PointMatrix(tuple(tuple(LaurentPoly.monomial(e, -1 if (i + 1, j + 1) in flips else 1)
                                   for j, e in enumerate(row)) for i, row in enumerate(exponents)))


def _candidate(idx: int, expo, flips) -> Candidate:
    M = signed_monomial_matrix(expo, flips)
    return Candidate(f"c{idx:05d}", M, tuple(tuple(r) for r in expo), frozenset(flips),
                     not genericity_report(M).all())


def enumerate_candidates(spec: CandidateSpec) -> Iterator[Candidate]:
    """Deterministic stream; degenerate configurations are tagged, not dropped."""
    ranges = spec.ranges()
    flat = [r for row in ranges for r in row]
    if any(len(r) == 0 for r in flat):
        return
    patterns = spec.sign_patterns()
    if spec.count is None:
        idx = 0
        for choice in itertools.product(*flat):
            expo = [choice[i * COLS:(i + 1) * COLS] for i in range(ROWS)]
            for flips in patterns:
                yield _candidate(idx, expo, flips)
                idx += 1
        return
    rng = random.Random(spec.seed)
    for idx in range(spec.count):
        choice = [rng.choice(r) for r in flat]
        expo = [choice[i * COLS:(i + 1) * COLS] for i in range(ROWS)]
        flips = patterns[rng.randrange(len(patterns))] if spec.sign_mode != "all" else \
            frozenset(e for e in spec.flippable() if rng.random() < 0.5)
        yield _candidate(idx, expo, flips)


# -- classification ----------------------------------------------------------

@dataclass
class ClassificationRow:
    id: str
    matrix: PointMatrix
    tropical: Optional[TropicalPoint] = None
    naruki_class: Optional[str] = None
    moneric: Optional[bool] = None
    key_hash: Optional[str] = None
    khovanskii: Optional[str] = None
    degenerate: bool = False
    error: Optional[str] = None

    def tsv(self) -> str:
        cells = [self.id,
                 "" if self.moneric is None else str(self.moneric).lower(),
                 self.naruki_class or "",
                 self.key_hash or "",
                 str(self.tropical) if self.tropical is not None else "",
                 "" if self.tropical is None or self.tropical.conic_val is None else str(self.tropical.conic_val),
                 self.khovanskii or "",
                 self.error or ""]
        return "\t".join(cells)

    def to_json(self) -> dict:
        return {"id": self.id, "matrix": self.matrix.to_json(),
                "tropical": None if self.tropical is None else [str(v) for v in self.tropical.d_values],
                "conic_val": None if self.tropical is None else str(self.tropical.conic_val),
                "naruki_class": self.naruki_class, "moneric": self.moneric, "key_hash": self.key_hash,
                "khovanskii": self.khovanskii, "degenerate": self.degenerate, "error": self.error}


TSV_HEADER = "\t".join(["id", "moneric", "naruki_class", "key_hash", "tropical", "conic_val", "khovanskii", "error"])


@dataclass(frozen=True, order=True)
class CollisionPair:
    kind: str
    first: str
    second: str
    moneric_first: bool
    moneric_second: bool


@dataclass
class BatchResult:
    rows: List[ClassificationRow]
    collisions: List[CollisionPair] = field(default_factory=list)

    def row(self, id_: str) -> ClassificationRow:
        return next(r for r in self.rows if r.id == id_)

    def collisions_of(self, kind: str) -> List[CollisionPair]:
        return [c for c in self.collisions if c.kind == kind]

    def tsv(self) -> str:
        return "\n".join([TSV_HEADER] + [r.tsv() for r in self.rows]) + "\n"

    def collisions_json(self) -> List[dict]:
        out = []
        for c in self.collisions:
            a, b = self.row(c.first), self.row(c.second)
            out.append({"kind": c.kind,
                        "first": {"id": a.id, "moneric": a.moneric, "matrix": a.matrix.to_json()},
                        "second": {"id": b.id, "moneric": b.moneric, "matrix": b.matrix.to_json()}})
        return out

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "collisions": self.collisions_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _classify_one(args) -> ClassificationRow:
    id_, M, kbound = args
    row = ClassificationRow(id_, M)
    try:
        report = genericity_report(M)
        row.degenerate = not (report.no_three_collinear and report.off_conic)
        row.tropical = tropical_pluecker(M)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", GenericityWarning)
            gens = all_generators(M)
        row.moneric = moneric_subspace(gens).moneric
        row.key_hash = equivalence_key(gens).digest()
        if kbound:
            row.khovanskii = khovanskii_bounded(gens, kbound).status
    except Exception as exc:  # recorded per row, the batch continues
        row.error = f"{type(exc).__name__}: {exc}"
    return row


MatrixInput = Union[PointMatrix, Candidate, Tuple[str, PointMatrix]]


def _normalise_inputs(matrices: Iterable[MatrixInput]) -> List[Tuple[str, PointMatrix]]:
    out = []
    for k, item in enumerate(matrices):
        if isinstance(item, Candidate):
            out.append((item.id, item.matrix))
        elif isinstance(item, PointMatrix):
            out.append((f"m{k:05d}", item))
        else:
            out.append((str(item[0]), item[1]))
    ids = [i for i, _ in out]
    if len(set(ids)) != len(ids):
        raise ValueError("matrix ids must be unique")
    return out


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def classify_batch(matrices: Iterable[MatrixInput], khovanskii_bound: Optional[int] = None,
                   workers: int = 1) -> BatchResult:
    """Rows in input order plus tropical and Naruki collision pairs across monericity."""
    inputs = _normalise_inputs(matrices)
    jobs = [(i, M, khovanskii_bound) for i, M in inputs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_classify_one, jobs))
    else:
        rows = [_classify_one(j) for j in jobs]

    usable = [r for r in rows if r.error is None and not r.degenerate and r.tropical.is_finite()]
    for r in rows:
        if r.degenerate:
            r.naruki_class = "degenerate"

    # Naruki classes: bucket by the lineality-free projection, then confirm integral shifts
    buckets: Dict[Tuple, List[ClassificationRow]] = {}
    for r in usable:
        buckets.setdefault(lineality_projection(r.tropical), []).append(r)
    uf = _UnionFind([r.id for r in usable])
    for members in buckets.values():
        members = sorted(members, key=lambda r: r.id)
        for a, b in itertools.combinations(members, 2):
            if uf.find(a.id) != uf.find(b.id) and torus_shift(a.tropical, b.tropical) is not None:
                uf.union(a.id, b.id)
    classes: Dict[str, List[ClassificationRow]] = {}
    for r in usable:
        classes.setdefault(uf.find(r.id), []).append(r)
    for k, root in enumerate(sorted(classes), start=1):
        for r in classes[root]:
            r.naruki_class = f"N{k}"

    collisions = set()
    trop_groups: Dict[Tuple, List[ClassificationRow]] = {}
    for r in usable:
        trop_groups.setdefault(tuple(r.tropical.d_values), []).append(r)
    for kind, groups in (("tropical", trop_groups.values()), ("naruki", classes.values())):
        for members in groups:
            for a, b in itertools.combinations(sorted(members, key=lambda r: r.id), 2):
                if a.moneric != b.moneric:
                    collisions.add(CollisionPair(kind, a.id, b.id, a.moneric, b.moneric))
    return BatchResult(rows, sorted(collisions))
