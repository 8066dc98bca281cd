"""Geodesic primitives and geographic clustering of episodes into distinct
training locations.

Episodes whose GPS fixes chain within a distance threshold form one
location cluster (single-linkage over episode pairs, propagated with
union-find)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

EARTH_RADIUS_M = 6_371_000.0

# pairwise episode distance uses every FIX_STRIDE-th fix; the 100 m
# clustering threshold is coarse relative to fix spacing
FIX_STRIDE = 10


@dataclass(frozen=True)
class GeoPoint:
    lat_deg: float
    lon_deg: float

    def __post_init__(self):
        if not (-90.0 <= self.lat_deg <= 90.0):
            raise ValueError(f"latitude out of range: {self.lat_deg}")
        if not (-180.0 <= self.lon_deg <= 180.0):
            raise ValueError(f"longitude out of range: {self.lon_deg}")


@dataclass
class LocationCluster:
    id: int
    episode_ids: frozenset[str]
    centroid: GeoPoint


def haversine_m(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in meters on a spherical earth."""
    lat1, lon1 = math.radians(a.lat_deg), math.radians(a.lon_deg)
    lat2, lon2 = math.radians(b.lat_deg), math.radians(b.lon_deg)
    s = (
        math.sin((lat2 - lat1) / 2.0) ** 2
        + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2.0) ** 2
    )
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(s)))


def _haversine_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise great-circle distances between fix arrays (N,2) and (M,2),
    rows as (lat_deg, lon_deg)."""
    a = np.radians(np.asarray(a, dtype=float).reshape(-1, 2))
    b = np.radians(np.asarray(b, dtype=float).reshape(-1, 2))
    dlat = a[:, None, 0] - b[None, :, 0]
    dlon = a[:, None, 1] - b[None, :, 1]
    s = (
        np.sin(dlat / 2.0) ** 2
        + np.cos(a[:, None, 0]) * np.cos(b[None, :, 0]) * np.sin(dlon / 2.0) ** 2
    )
    return 2.0 * EARTH_RADIUS_M * np.arcsin(np.minimum(1.0, np.sqrt(s)))


def _fix_array(fixes: Iterable[GeoPoint]) -> np.ndarray:
    return np.array([[p.lat_deg, p.lon_deg] for p in fixes], dtype=float)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return
        if self.size[ri] < self.size[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        self.size[ri] += self.size[rj]


def episode_pair_distance_m(
    fixes_a: Sequence[GeoPoint], fixes_b: Sequence[GeoPoint], stride: int = FIX_STRIDE
) -> float:
    """Minimum inter-episode fix distance, over strided fix subsets."""
    a = _fix_array(fixes_a)[::stride]
    b = _fix_array(fixes_b)[::stride]
    return float(_haversine_matrix(a, b).min())


def cluster_by_proximity(
    episodes: Sequence[tuple[str, Sequence[GeoPoint]]],
    threshold_m: float = 100.0,
) -> list[LocationCluster]:
    """Group episodes into location clusters.

    Two episodes land in the same cluster iff they are connected by a chain
    of episode pairs whose minimum fix-to-fix distance is below threshold_m.
    Clusters are ordered (and numbered) by their smallest member episode id,
    so output is independent of input order.
    """
    if not episodes:
        return []
    for eid, fixes in episodes:
        if len(fixes) == 0:
            raise ValueError(f"episode {eid!r} has no GPS fixes")

    order = sorted(range(len(episodes)), key=lambda i: episodes[i][0])
    ids = [episodes[i][0] for i in order]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate episode ids")
    fix_sets = [_fix_array(episodes[i][1])[::FIX_STRIDE] for i in order]

    uf = _UnionFind(len(ids))
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if _haversine_matrix(fix_sets[i], fix_sets[j]).min() < threshold_m:
                uf.union(i, j)

    members: dict[int, list[int]] = {}
    for i in range(len(ids)):
        members.setdefault(uf.find(i), []).append(i)

    groups = sorted(members.values(), key=lambda g: ids[min(g)])
    clusters = []
    for cid, group in enumerate(groups):
        all_fixes = np.concatenate([fix_sets[i] for i in group])
        centroid = GeoPoint(float(all_fixes[:, 0].mean()), float(all_fixes[:, 1].mean()))
        clusters.append(
            LocationCluster(
                id=cid,
                episode_ids=frozenset(ids[i] for i in group),
                centroid=centroid,
            )
        )
    return clusters


def min_distance_to_sites(
    episode_fixes: Sequence[GeoPoint], sites: Sequence[GeoPoint]
) -> float:
    """Minimum great-circle distance from any episode fix to any site."""
    if not sites:
        raise ValueError("sites must be non-empty")
    if not episode_fixes:
        raise ValueError("episode has no GPS fixes")
    return float(_haversine_matrix(_fix_array(episode_fixes), _fix_array(sites)).min())
