"""Cross-module verification grids for the CLI ``verify`` subcommand.

Each suite returns (cases checked, list of mismatch strings).  Cases fan out
over a process pool when SCHURKRON_WORKERS (default: cpu count) is above 1;
results are reduced in task order so output is identical either way.
"""

from __future__ import annotations

import os
from typing import Callable

from .formulas import (
    hook_coeff,
    nu_double_pair_coeff,
    p1_expand,
    rect_p2_expand,
    tworow_target_coeff,
    tworow_tworow_coeff,
)
from .kronecker import kron_coeff, kron_expand_tworow, two_row
from .oracle import (
    oracle_character_kron,
    oracle_tworow_signed_sum,
)
from .partitions import Partition, enumerate_partitions, part


def worker_count() -> int:
    env = os.environ.get("SCHURKRON_WORKERS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run(fn: Callable, tasks: list) -> list:
    workers = worker_count()
    if workers <= 1 or len(tasks) < 4:
        return [fn(t) for t in tasks]
    try:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            return pool.map(fn, tasks, chunksize=max(1, len(tasks) // (8 * workers)))
    except OSError:
        return [fn(t) for t in tasks]


def _check_theorem_case(task: tuple[int, int, Partition]) -> str | None:
    n, p, lam = task
    got = kron_expand_tworow(n, p, lam)
    want = oracle_tworow_signed_sum(n, p, lam)
    if got.expansion != want:
        return f"n={n} p={p} lam={lam}: rule ({got.method}) != signed oracle"
    return None


def _check_oracle_case(task: tuple[int, int, Partition]) -> str | None:
    n, p, lam = task
    signed = oracle_tworow_signed_sum(n, p, lam)
    char = oracle_character_kron(two_row(n, p), lam)
    if signed != char:
        return f"n={n} p={p} lam={lam}: signed oracle != character oracle"
    return None


def _check_formula_case(task) -> str | None:
    kind, args = task
    if kind == "hook":
        n, p, s = args
        expansion = kron_expand_tworow(n, p, (n - s,) + (1,) * s).expansion
        for nu in enumerate_partitions(n):
            if hook_coeff(n, p, s, nu) != expansion[nu]:
                return f"hook n={n} p={p} s={s} nu={nu}"
    elif kind == "tworow":
        n, p, lam = args
        for t in range(0, n // 2 + 1):
            if (
                tworow_target_coeff(n, p, lam, t)
                != kron_coeff(n, p, lam, (n - t, t) if t else (n,)).value
            ):
                return f"tworow n={n} p={p} lam={lam} t={t}"
    elif kind == "tworow2":
        n, p, s = args
        lam = (n - s, s) if s else (n,)
        for t in range(0, n // 2 + 1):
            if tworow_tworow_coeff(n, p, s, t) != tworow_target_coeff(n, p, lam, t):
                return f"tworow2 n={n} p={p} s={s} t={t}"
    elif kind == "nu334":
        n, p, s, nu = args
        lam = (n - s, s)
        if nu_double_pair_coeff(n, p, s, nu) != kron_coeff(n, p, lam, nu).value:
            return f"nu334 n={n} p={p} s={s} nu={nu}"
    elif kind == "rectp2":
        m, k = args
        n = m * k
        if rect_p2_expand(m, k) != kron_expand_tworow(n, 2, (m,) * k).expansion:
            return f"rect-p2 m={m} k={k}"
    elif kind == "p1":
        (lam,) = args
        n = sum(lam)
        if p1_expand(lam) != kron_expand_tworow(n, 1, lam).expansion:
            return f"p1 lam={lam}"
    return None


def suite_theorem(nmax: int, pmax: int) -> tuple[int, list[str]]:
    """Tableau rule vs signed-sum oracle on the rule's domain."""
    tasks = [
        (n, p, lam)
        for n in range(1, nmax + 1)
        for p in range(0, min(pmax, n // 2) + 1)
        for lam in enumerate_partitions(n)
        if part(lam, 1) >= 2 * p - 1 or len(lam) >= 2 * p - 1
    ]
    results = _run(_check_theorem_case, tasks)
    return len(tasks), [r for r in results if r]


def suite_oracles(nmax: int, pmax: int) -> tuple[int, list[str]]:
    """Signed-sum oracle vs character oracle, everywhere."""
    tasks = [
        (n, p, lam)
        for n in range(1, nmax + 1)
        for p in range(0, min(pmax, n // 2) + 1)
        for lam in enumerate_partitions(n)
    ]
    results = _run(_check_oracle_case, tasks)
    return len(tasks), [r for r in results if r]


def suite_formulas(nmax: int, pmax: int) -> tuple[int, list[str]]:
    """Closed formulas vs the tableau rule on their stated domains."""
    tasks: list = []
    for n in range(2, nmax + 1):
        for lam in enumerate_partitions(n):
            tasks.append(("p1", (lam,)))
    for n in range(2, nmax + 1):
        for p in range(1, min(pmax, n // 2) + 1):
            for s in range(1, n):
                if n - s >= 2 * p - 1:
                    tasks.append(("hook", (n, p, s)))
            for lam in enumerate_partitions(n, max_length=4):
                if part(lam, 1) >= 2 * p - 1:
                    tasks.append(("tworow", (n, p, lam)))
            for s in range(0, n // 2 + 1):
                if n - s >= 2 * p - 1:
                    tasks.append(("tworow2", (n, p, s)))
            if p >= 2:
                for s in range(1, n // 2 + 1):
                    if n - s < 2 * p - 1:
                        continue
                    for nu in enumerate_partitions(n, max_length=4):
                        if len(nu) == 4 and nu[2] == nu[3]:
                            tasks.append(("nu334", (n, p, s, nu)))
    for m in range(2, nmax + 1):
        for k in range(1, nmax + 1):
            if 6 <= m * k <= nmax and (k == 1 or m >= k):
                tasks.append(("rectp2", (m, k)))
    results = _run(_check_formula_case, tasks)
    return len(tasks), [r for r in results if r]


SUITES = {
    "theorem": suite_theorem,
    "oracles": suite_oracles,
    "formulas": suite_formulas,
}
