"""Pyramid scoring over tiered nugget annotations.

A nugget's tier is the number of gold summaries it occurs in.  A candidate is
scored by the tier-weighted count of the distinct nuggets it was matched to,
normalized by the best score any selection of the same size could reach.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class Nugget:
    id: str
    text: str
    tier: int


@dataclass(frozen=True)
class Pyramid:
    nuggets: Mapping[str, Nugget]
    tiers: Mapping[int, frozenset[str]]
    top: int
    topic_id: str = ""

    def tier_size(self, i: int) -> int:
        return len(self.tiers.get(i, ()))

    def __len__(self) -> int:
        return len(self.nuggets)


@dataclass(frozen=True)
class CandidateMatch:
    matched_ids: frozenset[str]
    topic_id: str = ""
    system_id: str = ""
    per_tier: Mapping[int, int] = field(default_factory=dict, compare=False)

    @property
    def total(self) -> int:
        return len(self.matched_ids)


def build_pyramid(nuggets: Sequence[Nugget], topic_id: str = "") -> Pyramid:
    if not nuggets:
        raise InvalidArgumentError("a pyramid needs at least one nugget")
    by_id: dict[str, Nugget] = {}
    for n in nuggets:
        if n.id in by_id:
            raise InvalidArgumentError(f"duplicate nugget id {n.id!r}")
        if n.tier < 1:
            raise InvalidArgumentError(f"nugget {n.id!r} has tier {n.tier} < 1")
        if not n.text.strip():
            raise InvalidArgumentError(f"nugget {n.id!r} has empty text")
        by_id[n.id] = n
    tiers: dict[int, set[str]] = {}
    for n in by_id.values():
        tiers.setdefault(n.tier, set()).add(n.id)
    return Pyramid(
        by_id, {i: frozenset(ids) for i, ids in sorted(tiers.items())}, max(tiers), topic_id
    )


def match(pyramid: Pyramid, matched_ids: Iterable[str], topic_id: str = "", system_id: str = "") -> CandidateMatch:
    """Resolve matched nugget ids against ``pyramid``; duplicates count once."""
    ids = frozenset(matched_ids)
    unknown = sorted(ids - pyramid.nuggets.keys())
    if unknown:
        raise InvalidArgumentError(f"matched ids not in pyramid: {', '.join(unknown)}")
    per_tier = Counter(pyramid.nuggets[i].tier for i in ids)
    return CandidateMatch(ids, topic_id, system_id, dict(per_tier))


def optimal_tier(pyramid: Pyramid, x: int) -> int:
    """Largest ``i`` with ``sum_{t=i..n} |T_t| >= x``."""
    suffix = 0
    for i in range(pyramid.top, 0, -1):
        suffix += pyramid.tier_size(i)
        if suffix >= x:
            return i
    raise InvalidArgumentError(f"{x} matched nuggets exceed pyramid size {len(pyramid)}")


def max_score(pyramid: Pyramid, x: int) -> int:
    """Best tier-weighted score attainable with ``x`` nuggets."""
    j = optimal_tier(pyramid, x)
    above = range(j + 1, pyramid.top + 1)
    return sum(i * pyramid.tier_size(i) for i in above) + j * (
        x - sum(pyramid.tier_size(i) for i in above)
    )


def pyramid_score(candidate: CandidateMatch | Iterable[str], pyramid: Pyramid) -> float:
    """Tier-weighted matched nuggets divided by the maximum for the same count.

    Returns 0.0 when nothing matched.
    """
    if not isinstance(candidate, CandidateMatch):
        candidate = match(pyramid, candidate)
    unknown = candidate.matched_ids - pyramid.nuggets.keys()
    if unknown:
        raise InvalidArgumentError(f"matched ids not in pyramid: {', '.join(sorted(unknown))}")
    x = candidate.total
    if x == 0:
        return 0.0
    if x > len(pyramid):
        raise InvalidArgumentError(f"{x} matched nuggets exceed pyramid size {len(pyramid)}")
    achieved = sum(pyramid.nuggets[i].tier for i in candidate.matched_ids)
    return achieved / max_score(pyramid, x)


def load_pyramid(path: str | Path) -> Pyramid:
    """Read ``{"topic_id": ..., "nuggets": [{"id", "text", "tier"}, ...]}``."""
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    try:
        nuggets = [Nugget(str(n["id"]), str(n["text"]), int(n["tier"])) for n in obj["nuggets"]]
        topic = str(obj["topic_id"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"{path}: malformed pyramid annotation ({exc})") from None
    return build_pyramid(nuggets, topic)


def load_matches(path: str | Path) -> list[dict]:
    """Read one match object ``{"topic_id", "system_id", "matched_ids"}`` or a list of them."""
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    items = obj if isinstance(obj, list) else [obj]
    for it in items:
        if not isinstance(it, dict) or not {"topic_id", "system_id", "matched_ids"} <= it.keys():
            raise InvalidArgumentError(f"{path}: match objects need topic_id, system_id, matched_ids")
    return items
