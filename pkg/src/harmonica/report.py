"""Run check suites concurrently and assemble a deterministic JSON report.

Report layout::

    {
      "generated_at": ISO-8601 UTC timestamp      (volatile)
      "timing": {check_id: seconds, ...}          (volatile)
      "config": {"truncation": N, "seed": S, "samples": K},
      "suites": [...],
      "summary": {"total": n, "passed": p, "failed": f, "errors": e},
      "checks": [
        {"check_id", "paper_ref", "status": "pass" | "fail" | "error",
         "witness"?, "seed", "truncation"}, ...     sorted by check_id
      ]
    }

Everything except the two volatile fields is a pure function of
(suites, seed, truncation, samples).
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from .checks import REGISTRY, Config, suites

VOLATILE_FIELDS = ("generated_at", "timing")


class UnknownSuite(KeyError):
    pass


def resolve(names: list[str]) -> list[str]:
    table = suites()
    ids: set[str] = set()
    for n in names:
        if n not in table:
            raise UnknownSuite(f"unknown suite {n!r}; choose from {', '.join(sorted(table))}")
        ids.update(table[n])
    return sorted(ids)


def _jsonable(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _run_one(check_id: str, cfg: Config) -> tuple[dict, float]:
    c = REGISTRY[check_id]
    rec = {"check_id": check_id, "paper_ref": c.ref, "seed": cfg.seed, "truncation": cfg.truncation}
    t0 = time.perf_counter()
    try:
        out = c.runner(cfg)
        rec["status"] = "pass" if out.ok else "fail"
        if not out.ok and out.witness is not None:
            rec["witness"] = _jsonable(out.witness)
    except Exception as e:  # reported, never swallowed silently
        rec["status"] = "error"
        rec["witness"] = f"{type(e).__name__}: {e}"
    return rec, time.perf_counter() - t0


def run_suite(names: list[str], cfg: Config = Config(), workers: int = 8) -> dict:
    ids = resolve(names)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda i: _run_one(i, cfg), ids))
    records = sorted((r for r, _ in results), key=lambda r: r["check_id"])
    timing = {r["check_id"]: round(t, 4) for r, t in results}
    counts = {s: sum(r["status"] == s for r in records) for s in ("pass", "fail", "error")}
    return {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "timing": dict(sorted(timing.items())),
        "config": {"truncation": cfg.truncation, "seed": cfg.seed, "samples": cfg.samples},
        "suites": sorted(set(names)),
        "summary": {"total": len(records), "passed": counts["pass"], "failed": counts["fail"], "errors": counts["error"]},
        "checks": records,
    }


def all_passed(report: dict) -> bool:
    return report["summary"]["passed"] == report["summary"]["total"]


def stable_view(report: dict) -> dict:
    return {k: v for k, v in report.items() if k not in VOLATILE_FIELDS}


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def to_human(report: dict) -> str:
    lines = []
    for r in report["checks"]:
        lines.append(f"{r['status'].upper():5}  {r['check_id']:36} {r['paper_ref']}")
        if "witness" in r:
            lines.append(f"       witness: {json.dumps(r['witness'])}")
    s = report["summary"]
    c = report["config"]
    lines.append(f"{s['passed']}/{s['total']} passed (N={c['truncation']}, seed={c['seed']}, samples={c['samples']})")
    return "\n".join(lines)
