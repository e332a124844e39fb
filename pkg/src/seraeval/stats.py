"""Pearson, Spearman and Kendall tau-b correlation, and long-format score tables."""

from __future__ import annotations

import csv
import math
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import InvalidArgumentError, UndefinedCorrelationError

SYSTEM, TOPIC = "system", "topic"
SCORE_HEADER = ("topic_id", "system_id", "metric_name", "value")


def _check(x: Sequence[float], y: Sequence[float]) -> tuple[list[float], list[float]]:
    x, y = [float(v) for v in x], [float(v) for v in y]
    if len(x) != len(y):
        raise InvalidArgumentError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise InvalidArgumentError(f"need at least 3 paired values, got {len(x)}")
    if not all(math.isfinite(v) for v in x + y):
        raise InvalidArgumentError("correlation inputs must be finite")
    for name, v in (("x", x), ("y", y)):
        if min(v) == max(v):
            raise UndefinedCorrelationError(f"{name} is constant; correlation is undefined")
    return x, y


def _pearson(x: list[float], y: list[float]) -> float:
    mx = math.fsum(x) / len(x)
    my = math.fsum(y) / len(y)
    dx = [v - mx for v in x]
    dy = [v - my for v in y]
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelationError("zero variance after centering")
    return max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    return _pearson(*_check(x, y))


def rankdata(values: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the mean of the ranks they span."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of average ranks."""
    x, y = _check(x, y)
    return _pearson(rankdata(x), rankdata(y))


def _tie_pairs(sorted_values: Sequence) -> int:
    total, run = 0, 1
    for a, b in zip(sorted_values, sorted_values[1:]):
        if a == b:
            run += 1
        else:
            total += run * (run - 1) // 2
            run = 1
    return total + run * (run - 1) // 2


def _count_inversions(seq: list) -> int:
    """Strict inversions (i < j, seq[i] > seq[j]) by merge sort; sorts ``seq``."""
    if len(seq) < 2:
        return 0
    mid = len(seq) // 2
    left, right = seq[:mid], seq[mid:]
    inv = _count_inversions(left) + _count_inversions(right)
    i = j = k = 0
    while i < len(left) and j < len(right):
        if right[j] < left[i]:
            seq[k] = right[j]
            inv += len(left) - i
            j += 1
        else:
            seq[k] = left[i]
            i += 1
        k += 1
    seq[k:] = left[i:] + right[j:]
    return inv


def kendall(x: Sequence[float], y: Sequence[float]) -> float:
    """Kendall tau-b in O(n log n) (Knight's algorithm)."""
    x, y = _check(x, y)
    n = len(x)
    pairs = sorted(zip(x, y))
    n0 = n * (n - 1) // 2
    n1 = _tie_pairs([p[0] for p in pairs])
    n3 = _tie_pairs(pairs)
    ys = [p[1] for p in pairs]
    discordant = _count_inversions(ys)
    n2 = _tie_pairs(ys)  # ys is sorted now
    numerator = n0 - n1 - n2 + n3 - 2 * discordant
    return max(-1.0, min(1.0, numerator / math.sqrt((n0 - n1) * (n0 - n2))))


@dataclass(frozen=True)
class ScoreRow:
    topic_id: str
    system_id: str
    metric_name: str
    value: float


@dataclass
class ScoreTable:
    """Long-format (topic, system, metric, value) rows; the key triple is unique."""

    rows: list[ScoreRow] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for r in self.rows:
            key = (r.topic_id, r.system_id, r.metric_name)
            if key in seen:
                raise InvalidArgumentError(f"duplicate score row {key}")
            if not math.isfinite(r.value):
                raise InvalidArgumentError(f"non-finite score in row {key}")
            seen.add(key)

    def metrics(self) -> list[str]:
        return sorted({r.metric_name for r in self.rows})

    def aggregate(self, metric: str, level: str = SYSTEM) -> dict:
        """Per-system mean over topics, or per-(system, topic) values."""
        groups: dict = defaultdict(list)
        for r in self.rows:
            if r.metric_name != metric:
                continue
            key = r.system_id if level == SYSTEM else (r.system_id, r.topic_id)
            groups[key].append(r.value)
        return {k: math.fsum(v) / len(v) for k, v in groups.items()}

    def sorted_rows(self) -> list[ScoreRow]:
        return sorted(self.rows, key=lambda r: (r.topic_id, r.system_id, r.metric_name))


def format_value(v: float) -> str:
    return repr(float(v))


def write_scores(rows: Iterable[ScoreRow], path_or_file) -> None:
    table = ScoreTable(list(rows))
    lines = ["\t".join(SCORE_HEADER)]
    for r in table.sorted_rows():
        lines.append(f"{r.topic_id}\t{r.system_id}\t{r.metric_name}\t{format_value(r.value)}")
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text, encoding="utf-8")


def read_scores(path: str | Path) -> ScoreTable:
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh, delimiter="\t")
        missing = set(SCORE_HEADER) - set(reader.fieldnames or ())
        if missing:
            raise InvalidArgumentError(f"{path}: missing columns {sorted(missing)}")
        for lineno, rec in enumerate(reader, start=2):
            try:
                value = float(rec["value"])
            except (TypeError, ValueError):
                raise InvalidArgumentError(f"{path}:{lineno}: bad value {rec['value']!r}") from None
            rows.append(ScoreRow(rec["topic_id"], rec["system_id"], rec["metric_name"], value))
    return ScoreTable(rows)


@dataclass(frozen=True)
class CorrelationRow:
    metric_x: str
    metric_y: str
    n: int
    r: Optional[float]
    rho: Optional[float]
    tau: Optional[float]

    @property
    def metric_pair(self) -> str:
        return f"{self.metric_x} vs {self.metric_y}"


def correlate_tables(
    x: ScoreTable,
    y: ScoreTable,
    level: str = SYSTEM,
    strict: bool = True,
    metrics_x: Optional[Sequence[str]] = None,
    metrics_y: Optional[Sequence[str]] = None,
) -> list[CorrelationRow]:
    """Correlate every metric of ``x`` with every metric of ``y``.

    Rows are joined on system id (``level="system"``, mean over topics) or on
    (system, topic).  With ``strict=False`` a constant metric yields ``None``
    coefficients instead of raising.
    """
    if level not in (SYSTEM, TOPIC):
        raise InvalidArgumentError(f"unknown correlation level {level!r}")
    out = []
    for mx in metrics_x or x.metrics():
        ax = x.aggregate(mx, level)
        for my in metrics_y or y.metrics():
            ay = y.aggregate(my, level)
            keys = sorted(ax.keys() & ay.keys())
            if len(keys) < 3:
                raise InvalidArgumentError(
                    f"{mx} vs {my}: only {len(keys)} joined rows, need at least 3"
                )
            vx = [ax[k] for k in keys]
            vy = [ay[k] for k in keys]
            try:
                out.append(CorrelationRow(mx, my, len(keys), pearson(vx, vy), spearman(vx, vy), kendall(vx, vy)))
            except UndefinedCorrelationError:
                if strict:
                    raise
                out.append(CorrelationRow(mx, my, len(keys), None, None, None))
    return out


CORRELATION_HEADER = ("metric_pair", "n", "r", "rho", "tau")


def write_correlations(rows: Iterable[CorrelationRow], path_or_file) -> None:
    def fmt(v: Optional[float]) -> str:
        return "undefined" if v is None else f"{v:.6f}"

    lines = ["\t".join(CORRELATION_HEADER)]
    for row in rows:
        lines.append("\t".join((row.metric_pair, str(row.n), fmt(row.r), fmt(row.rho), fmt(row.tau))))
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text, encoding="utf-8")
