"""General-position point sets: seeded sampling, order-type files, JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator, Sequence, Union

import numpy as np

from .geom import COORD_LIMIT, Point, PointSet, _orient, general_position

TRIANGULAR = "triangular-hull"
UNCONSTRAINED = "unconstrained"


class SamplingError(ValueError):
    pass


class OrderTypeError(ValueError):
    pass


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    extent: int = 1 << 20
    seed: Union[int, Sequence[int]] = 0
    mode: str = TRIANGULAR

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if not 8 <= self.extent <= COORD_LIMIT:
            raise ValueError(f"extent must lie in [8, 2**30], got {self.extent}")
        if self.mode not in (TRIANGULAR, UNCONSTRAINED):
            raise ValueError(f"unknown mode {self.mode!r}")


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial; order of trials does not matter."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


# below this extent every cross product fits in int64
_INT64_SAFE = 1 << 29


def _collinear_with_any(arr: np.ndarray, r: Point) -> bool:
    d = arr - np.array(r, dtype=arr.dtype)
    cross = np.outer(d[:, 0], d[:, 1]) - np.outer(d[:, 1], d[:, 0])
    return bool((np.triu(cross == 0, 1)).any()) or bool((~d.any(axis=1)).any())


def sample(config: SamplerConfig, rng: np.random.Generator | None = None) -> PointSet:
    """Rejection-sample a general-position point set.

    In triangular-hull mode the corners ``(0,0), (M,0), (0,M)`` come first
    and every other point is strictly inside.
    """
    if rng is None:
        seed = config.seed if isinstance(config.seed, int) else list(config.seed)
        rng = np.random.default_rng(np.random.SeedSequence(seed))
    M = config.extent
    pts: list[Point] = []
    if config.mode == TRIANGULAR:
        pts = [Point(0, 0), Point(M, 0), Point(0, M)]
    fast = M < _INT64_SAFE
    arr = np.array(pts, dtype=np.int64 if fast else object).reshape(-1, 2)
    budget = 200 * config.n + 1000
    while len(pts) < config.n:
        if config.mode == TRIANGULAR:
            batch = rng.integers(1, M - 1, size=(64, 2))
        else:
            batch = rng.integers(0, M + 1, size=(64, 2))
        for x, y in batch.tolist():
            if len(pts) == config.n:
                break
            if budget == 0:
                raise SamplingError(f"extent {M} too small for {config.n} points in general position")
            budget -= 1
            if config.mode == TRIANGULAR and x + y >= M:
                continue
            r = Point(x, y)
            if fast:
                if len(pts) >= 1 and _collinear_with_any(arr, r):
                    continue
            elif r in pts or any(_orient(p, q, r) == 0 for p, q in combinations(pts, 2)):
                continue
            pts.append(r)
            if fast:
                arr = np.vstack([arr, np.array([r], dtype=np.int64)])
    return PointSet(tuple(pts), True)


def load_order_types(
    path: Union[str, Path],
    n: int,
    width: int = 8,
    endian: str = "little",
    strict: bool = True,
) -> Iterator[PointSet]:
    """Decode an order-type database file: ``n`` points per record, ``x``
    then ``y``, unsigned integers of ``width`` bits.

    With ``strict`` a record that is not in general position raises
    :class:`OrderTypeError` naming the record index; otherwise it is yielded
    with ``general_position=False``.
    """
    if width not in (8, 16):
        raise ValueError("width must be 8 or 16")
    if endian not in ("little", "big"):
        raise ValueError("endian must be 'little' or 'big'")
    raw = Path(path).read_bytes()
    rec = n * 2 * (width // 8)
    if not raw:
        raise OrderTypeError("empty file")
    if len(raw) % rec:
        raise OrderTypeError(f"size mismatch: {len(raw)} bytes is not a multiple of {rec}")
    dtype = np.dtype(np.uint8) if width == 8 else np.dtype(("<" if endian == "little" else ">") + "u2")
    data = np.frombuffer(raw, dtype=dtype).reshape(-1, n, 2)
    for i, block in enumerate(data):
        pts = tuple(Point(int(x), int(y)) for x, y in block)
        gp = len(set(pts)) == n and general_position(pts)
        if not gp and strict:
            raise OrderTypeError(f"record {i}: not in general position")
        yield PointSet(pts, gp)


def points_to_json(X) -> str:
    pts = X.points if isinstance(X, PointSet) else X
    return json.dumps({"points": [[int(x), int(y)] for x, y in pts]})


def points_from_json(text: str) -> PointSet:
    data = json.loads(text)
    return PointSet.of(data["points"], require_general_position=False)
