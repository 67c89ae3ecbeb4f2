"""Named verification suites over parameter grids.

Each suite expands to a list of independent checks; a check computes a value,
compares it against its reference (closed form, oracle, or exact constant),
and becomes a `CheckReport`.  The CLI and the HTTP service both run suites
through `run_request`, so a command line and a POST body produce identical
reports.

Conventions: a report's `cutoff` is the Fock-space truncation the check ran
at (0 when no truncated space is involved, e.g. pure quadrature or polynomial
checks) and `safe_sector` is the rank of the block the comparison was made
on.  Checks that compare a residual against zero carry `rel_error = null`,
since there is no scale to divide by.  A check that raises reports a
structured failure (the exception lands in `params["error"]`) instead of
taking the whole suite down.
"""
from __future__ import annotations

import json
import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable

import mpmath as mp
import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.special import gammaln

from .coherent import (
    composition_phase,
    displacement,
    glauber_reconstruct,
    regularized_trace_u,
    regularized_trace_u_closed,
    resolution_identity_coherent,
    u_element_closed,
)
from .fock import (
    SafeSector,
    build_spin_k,
    default_safe_sector,
    exp_antihermitian,
    make_space,
    operator_norm,
)
from .quadrature import DiskGrid, PlaneGrid, TailBoundError, conjecture_integral, integrate_plane
from .reports import CheckReport, failure_report, make_report
from .schwinger import paris_residual
from .specialfn import (
    gauss_laguerre,
    laguerre_generating_closed,
    laguerre_sequence,
)
from .su11 import (
    _v_block_mp,
    decomposition_residual,
    disentangle_cutoff,
    disentangle_residual,
    glauber_su11_reconstruct,
    resolution_identity_su11,
    trace_v_closed,
    trace_v_numeric,
)

COMPOSITION_SEED = 20260819

SUITE_NAMES = (
    "u-elements",
    "u-composition",
    "u-trace",
    "glauber",
    "laguerre",
    "su11-elements",
    "su11-trace",
    "disentangle",
    "decomposition",
    "resolution",
    "conjecture",
    "paris",
    "glauber-failure",
)


class UnknownSuiteError(ValueError):
    """Suite name outside SUITE_NAMES + "all" (a usage error, not a numerical one)."""


class SuiteRequest(BaseModel):
    """Parameters of one suite run; None means the suite's own default grid.

    Overriding two_k / z / chi collapses the corresponding default grid to
    the single overridden value — the other default axes still sweep.
    """

    model_config = ConfigDict(extra="forbid")

    suite: str = "all"
    two_k: float | None = None
    z_re: float | None = None
    z_im: float | None = None
    chi: float | None = None
    cutoff: int | None = None
    safe_sector: int | None = None
    tol: float | None = None
    radius: float | None = None
    radial_nodes: int | None = None
    angular_nodes: int | None = None
    s_max: float | None = None
    jobs: int = 1

    def z_override(self) -> complex | None:
        if self.z_re is None and self.z_im is None:
            return None
        return complex(self.z_re or 0.0, self.z_im or 0.0)


class SuiteResult(BaseModel):
    suite: str
    reports: list[CheckReport]
    all_pass: bool
    runtime_ms: int


@dataclass(frozen=True)
class _Check:
    check: str
    params: dict[str, Any]
    tolerance: float
    mode: str
    run: Callable[[], tuple] = field(repr=False)
    # arbitrary-precision contexts share one global precision setting, so
    # checks that enter them cannot overlap; pure-float checks parallelize
    uses_mp: bool = False


_MP_LOCK = threading.Lock()


def _c2(z: complex) -> list[float]:
    """Complex number as the [re, im] pair used in params and reports."""
    z = complex(z)
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# check bodies (module-level so the thread pool sees plain picklable-ish work)


def _u_elements_dev(z: complex, cutoff: int, n_max: int):
    space = make_space("single-mode", cutoff)
    u = displacement(space, z).matrix.matrix
    dev = 0.0
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            dev = max(dev, abs(u[n, m] - u_element_closed(n, m, z)))
    return dev, 0.0, cutoff, n_max + 1


def _u_composition_dev(z: complex, w: complex, cutoff: int, rank: int):
    space = make_space("single-mode", cutoff)
    uz = displacement(space, z).matrix.matrix
    uw = displacement(space, w).matrix.matrix
    uzw = displacement(space, z + w).matrix.matrix
    resid = (uzw - composition_phase(z, w) * uz @ uw)[:rank, :rank]
    return operator_norm(resid), 0.0, cutoff, rank


def _u_trace_pair(z: complex, t: float):
    numeric, closed = regularized_trace_u(z, t)
    return numeric, closed, 0, 0


def _u_trace_plane(t: float, grid: PlaneGrid):
    value = integrate_plane(lambda z: regularized_trace_u_closed(z, t), grid)
    return value, 2.0 / (1.0 + t), 0, 0


def _glauber_dev(entry: tuple[int, int], cutoff: int, block: int, grid: PlaneGrid):
    space = make_space("single-mode", cutoff)
    a = np.zeros((cutoff, cutoff), dtype=complex)
    a[entry] = 1.0
    rec = glauber_reconstruct(a, space, grid)
    dev = float(np.max(np.abs(rec[:block, :block] - a[:block, :block])))
    return dev, 0.0, cutoff, block


def _laguerre_vs_oracle(n: int, alpha: float, x: float):
    values = laguerre_sequence(n, alpha, np.array([x]))
    with mp.workdps(40):
        oracle = float(mp.laguerre(n, alpha, x))
    return float(values[n, 0]), oracle, 0, 0


def _laguerre_gram_dev(n_max: int, alpha: float):
    nodes, weights = gauss_laguerre(4 * n_max, alpha)
    basis = laguerre_sequence(n_max, alpha, nodes)
    gram = (basis * weights) @ basis.T
    n = np.arange(n_max + 1)
    norms = np.exp(0.5 * (gammaln(n + alpha + 1) - gammaln(n + 1)))
    normalized = gram / np.outer(norms, norms)
    dev = float(np.max(np.abs(normalized - np.eye(n_max + 1))))
    return dev, 0.0, 0, n_max + 1


def _laguerre_generating(alpha: float, x: float, t: float, n_terms: int):
    values = laguerre_sequence(n_terms, alpha, np.array([x]))[:, 0]
    partial = float(values @ t ** np.arange(n_terms + 1))
    return partial, laguerre_generating_closed(x, t, alpha), 0, 0


def _su11_elements_dev(two_k: float, z: complex, cutoff: int, n_max: int):
    space = make_space("spin-K", cutoff, spin=two_k)
    kp, km, _ = build_spin_k(space)
    v = exp_antihermitian(z * kp - np.conj(z) * km).matrix
    block = _v_block_mp(two_k, z, n_max + 1)
    dev = float(np.max(np.abs(v[: n_max + 1, : n_max + 1] - block)))
    return dev, 0.0, cutoff, n_max + 1


def _su11_trace_pair(two_k: float, abs_z: float, n_max: int):
    partial, _ = trace_v_numeric(two_k, abs_z, n_max=n_max)
    return partial, trace_v_closed(two_k, abs_z), 0, 0


def _su11_trace_spot(n_max: int):
    partial, _ = trace_v_numeric(2.0, math.log(2.0), n_max=n_max)
    return partial, 1.0 / 3.0, 0, 0


def _disentangle_spin(two_k: float, z: complex, cutoff: int, rank: int):
    space = make_space("spin-K", cutoff, spin=two_k)
    resid = disentangle_residual(two_k, z, space, SafeSector(rank))
    return resid, 0.0, cutoff, rank


def _disentangle_squeezer(two_k: float, z: complex, cutoff: int, rank: int):
    space = make_space("single-mode", cutoff)
    resid = disentangle_residual(two_k, z, space, SafeSector(rank))
    return resid, 0.0, cutoff, max(1, rank // 2)


def _decomposition_dev(two_k: float, z: complex, cutoff: int, rank: int):
    space = make_space("spin-K", cutoff, spin=two_k)
    resid = decomposition_residual(two_k, z, space, SafeSector(rank))
    return resid, 0.0, cutoff, min(rank, 11)


def _resolution_plane_dev(cutoff: int, block: int, grid: PlaneGrid):
    space = make_space("single-mode", cutoff)
    out = resolution_identity_coherent(space, grid)
    dev = operator_norm(out[:block, :block] - np.eye(block))
    return dev, 0.0, cutoff, block


def _resolution_disk_dev(two_k: float, cutoff: int, block: int, grid: DiskGrid):
    space = make_space("spin-K", cutoff, spin=two_k)
    out = resolution_identity_su11(two_k, grid, space)
    dev = operator_norm(out[:block, :block] - np.eye(block))
    return dev, 0.0, cutoff, block


def _conjecture_pair(two_k: float, chi: float, grid: DiskGrid):
    numeric, rhs = conjecture_integral(two_k, chi, grid)
    return numeric, rhs, 0, 0


def _conjecture_spot(grid: DiskGrid):
    numeric, _ = conjecture_integral(2.0, 0.5, grid)
    return numeric, 2.0 / 3.0, 0, 0


def _paris_dev(z: complex, per_mode: int, quanta: int):
    space = make_space("two-mode", per_mode_cutoff=per_mode)
    resid = paris_residual(space, z, SafeSector(quanta))
    return resid, 0.0, space.cutoff, quanta


def _glauber_failure_entry(two_k: float, entry: tuple[int, int], reference: float, cutoff: int, grid: DiskGrid):
    space = make_space("spin-K", cutoff, spin=two_k)
    a = np.zeros((cutoff, cutoff), dtype=complex)
    a[0, 0] = 1.0
    rec = glauber_su11_reconstruct(a, two_k, grid, space)
    return rec[entry], reference, cutoff, rec.shape[0]


def _glauber_failure_deviation(two_k: float, cutoff: int, grid: DiskGrid):
    space = make_space("spin-K", cutoff, spin=two_k)
    a = np.zeros((cutoff, cutoff), dtype=complex)
    a[0, 0] = 1.0
    rec = glauber_su11_reconstruct(a, two_k, grid, space)
    block = rec.shape[0]
    dev = operator_norm(rec - a[:block, :block])
    return dev, 0.05, cutoff, block


# ---------------------------------------------------------------------------
# suite builders


def _plane_grid(req: SuiteRequest) -> PlaneGrid:
    return PlaneGrid(
        radius=req.radius if req.radius is not None else 6.0,
        radial_nodes=req.radial_nodes if req.radial_nodes is not None else 200,
        angular_nodes=req.angular_nodes if req.angular_nodes is not None else 200,
    )


def _disk_grid(req: SuiteRequest) -> DiskGrid:
    return DiskGrid(
        s_max=req.s_max if req.s_max is not None else 12.0,
        radial_nodes=req.radial_nodes if req.radial_nodes is not None else 400,
        angular_nodes=req.angular_nodes if req.angular_nodes is not None else 256,
    )


def _pick(override, default_grid):
    return [override] if override is not None else list(default_grid)


def _build_u_elements(req: SuiteRequest) -> list[_Check]:
    cutoff = req.cutoff or 256
    tol = req.tol if req.tol is not None else 1e-9
    zs = _pick(req.z_override(), [0.3 + 0.4j, 1.2, 2.0j])
    return [
        _Check(
            "u-elements/closed-vs-matrix",
            {"z": _c2(z), "n_max": 30},
            tol,
            "abs",
            partial(_u_elements_dev, z, cutoff, 30),
        )
        for z in zs
    ]


def _composition_pairs(count: int = 5, bound: float = 1.5):
    rng = np.random.default_rng(COMPOSITION_SEED)
    mods = rng.uniform(0.0, bound, size=(count, 2))
    angs = rng.uniform(0.0, 2.0 * np.pi, size=(count, 2))
    return [
        (
            complex(mods[i, 0] * np.exp(1j * angs[i, 0])),
            complex(mods[i, 1] * np.exp(1j * angs[i, 1])),
        )
        for i in range(count)
    ]


def _build_u_composition(req: SuiteRequest) -> list[_Check]:
    cutoff = req.cutoff or 256
    rank = req.safe_sector or default_safe_sector(make_space("single-mode", cutoff)).rank
    tol = req.tol if req.tol is not None else 1e-9
    return [
        _Check(
            "u-composition/addition-law",
            {"pair": i, "z": _c2(z), "w": _c2(w)},
            tol,
            "abs",
            partial(_u_composition_dev, z, w, cutoff, rank),
        )
        for i, (z, w) in enumerate(_composition_pairs())
    ]


def _build_u_trace(req: SuiteRequest) -> list[_Check]:
    tol = req.tol if req.tol is not None else 1e-8
    plane_tol = req.tol if req.tol is not None else 1e-6
    zs = _pick(req.z_override(), [0.6, 1.0 + 1.0j, 2.0j])
    checks = [
        _Check(
            "u-trace/partial-vs-closed",
            {"z": _c2(z), "t": t},
            tol,
            "rel",
            partial(_u_trace_pair, z, t),
            uses_mp=True,
        )
        for t in (0.5, 0.9, 0.95)
        for z in zs
    ]
    grid = _plane_grid(req)
    checks += [
        _Check(
            "u-trace/plane-integral",
            {"t": t},
            plane_tol,
            "abs",
            partial(_u_trace_plane, t, grid),
        )
        for t in (0.9, 0.99, 0.999)
    ]
    return checks


def _build_glauber(req: SuiteRequest) -> list[_Check]:
    cutoff = req.cutoff or 256
    tol = req.tol if req.tol is not None else 1e-3
    grid = _plane_grid(req)
    return [
        _Check(
            "glauber/reconstruct",
            {"entry": list(entry), "n_max": 5},
            tol,
            "abs",
            partial(_glauber_dev, entry, cutoff, 6, grid),
        )
        for entry in ((0, 0), (1, 3))
    ]


def _build_laguerre(req: SuiteRequest) -> list[_Check]:
    rec_tol = req.tol if req.tol is not None else 1e-10
    orth_tol = req.tol if req.tol is not None else 1e-8
    checks = [
        _Check(
            "laguerre/recurrence-vs-oracle",
            {"n": n, "alpha": alpha, "x": x},
            rec_tol,
            "rel",
            partial(_laguerre_vs_oracle, n, alpha, x),
            uses_mp=True,
        )
        for n in (20, 60)
        for alpha in (0.0, 2.5)
        for x in (5.0, 50.0)
    ]
    checks.append(
        _Check(
            "laguerre/recurrence-vs-oracle",
            {"n": 60, "alpha": 1.0, "x": 27.5},
            rec_tol,
            "rel",
            partial(_laguerre_vs_oracle, 60, 1.0, 27.5),
            uses_mp=True,
        )
    )
    checks += [
        _Check(
            "laguerre/orthogonality",
            {"n_max": 15, "alpha": alpha},
            orth_tol,
            "abs",
            partial(_laguerre_gram_dev, 15, alpha),
        )
        for alpha in (0.0, 1.0, 2.5)
    ]
    checks += [
        _Check(
            "laguerre/generating-function",
            {"alpha": alpha, "x": x, "t": t},
            rec_tol,
            "rel",
            partial(_laguerre_generating, alpha, x, t, 400),
        )
        for alpha in (0.0, 2.5)
        for x in (0.5, 2.0)
        for t in (0.3, 0.6)
    ]
    return checks


def _build_su11_elements(req: SuiteRequest) -> list[_Check]:
    cutoff = req.cutoff or 256
    tol = req.tol if req.tol is not None else 1e-8
    weights = _pick(req.two_k, [1.0, 2.0, 3.0, 2.5])
    zs = _pick(req.z_override(), [0.5, 1.2 + 0.9j, 1.5j])
    return [
        _Check(
            "su11-elements/closed-vs-matrix",
            {"two_k": tk, "z": _c2(z), "n_max": 20},
            tol,
            "abs",
            partial(_su11_elements_dev, tk, z, cutoff, 20),
            uses_mp=True,
        )
        for tk in weights
        for z in zs
    ]


def _build_su11_trace(req: SuiteRequest) -> list[_Check]:
    tol = req.tol if req.tol is not None else 1e-6
    weights = _pick(req.two_k, [2.0, 3.0, 4.0, 2.5])
    override = req.z_override()
    radii = [abs(override)] if override is not None else [0.5, math.log(2.0), 1.5]
    checks = [
        _Check(
            "su11-trace/numeric-vs-closed",
            {"two_k": tk, "abs_z": az, "n_max": 60},
            tol,
            "rel",
            partial(_su11_trace_pair, tk, az, 60),
            uses_mp=True,
        )
        for tk in weights
        for az in radii
    ]
    checks.append(
        _Check(
            "su11-trace/spot-one-third",
            {"two_k": 2.0, "abs_z": math.log(2.0), "n_max": 60},
            tol,
            "rel",
            partial(_su11_trace_spot, 60),
            uses_mp=True,
        )
    )
    return checks


def _build_disentangle(req: SuiteRequest) -> list[_Check]:
    tol = req.tol if req.tol is not None else 1e-8
    zs = _pick(req.z_override(), [1.0, 0.5 + 0.5j])
    checks = []
    spin_weights = [1.0, 2.0, 3.0]
    squeezer_weights = [0.5, 1.5]
    if req.two_k is not None:
        spin_weights = [req.two_k] if req.two_k not in (0.5, 1.5) else []
        squeezer_weights = [req.two_k] if req.two_k in (0.5, 1.5) else []
    rank = req.safe_sector or 64
    for tk in spin_weights:
        for z in zs:
            cutoff = req.cutoff or disentangle_cutoff(rank, z)
            checks.append(
                _Check(
                    "disentangle/spin",
                    {"two_k": tk, "z": _c2(z)},
                    tol,
                    "abs",
                    partial(_disentangle_spin, tk, z, cutoff, rank),
            uses_mp=True,
                )
            )
    squeezer_zs = _pick(req.z_override(), [0.5, 1.0])
    for tk in squeezer_weights:
        for z in squeezer_zs:
            cutoff = req.cutoff or 2 * disentangle_cutoff(max(1, rank // 2), z)
            checks.append(
                _Check(
                    "disentangle/squeezer",
                    {"two_k": tk, "z": _c2(z)},
                    tol,
                    "abs",
                    partial(_disentangle_squeezer, tk, z, cutoff, rank),
            uses_mp=True,
                )
            )
    return checks


def _build_decomposition(req: SuiteRequest) -> list[_Check]:
    cutoff = req.cutoff or 128
    rank = req.safe_sector or 11
    tol = req.tol if req.tol is not None else 1e-8
    weights = _pick(req.two_k, [1.0, 2.0, 3.0])
    zs = _pick(req.z_override(), [0.5, 0.5 + 0.5j, 1.0])
    return [
        _Check(
            "decomposition/residual",
            {"two_k": tk, "z": _c2(z), "k_sum_cutoff": cutoff},
            tol,
            "abs",
            partial(_decomposition_dev, tk, z, cutoff, rank),
            uses_mp=True,
        )
        for tk in weights
        for z in zs
    ]


def _build_resolution(req: SuiteRequest) -> list[_Check]:
    tol = req.tol if req.tol is not None else 1e-3
    block = 8
    plane_cutoff = req.cutoff or 128
    disk_cutoff = req.cutoff or 64
    weights = _pick(req.two_k, [2.0, 2.5])
    checks = [
        _Check(
            "resolution/plane",
            {"n_states": block},
            tol,
            "abs",
            partial(_resolution_plane_dev, plane_cutoff, block, _plane_grid(req)),
        )
    ]
    checks += [
        _Check(
            "resolution/disk",
            {"two_k": tk, "n_states": block},
            tol,
            "abs",
            partial(_resolution_disk_dev, tk, disk_cutoff, block, _disk_grid(req)),
        )
        for tk in weights
    ]
    return checks


def _build_conjecture(req: SuiteRequest) -> list[_Check]:
    tol = req.tol if req.tol is not None else 1e-4
    grid = _disk_grid(req)
    weights = _pick(req.two_k, [1.5, 2.0, 3.0])
    chis = _pick(req.chi, [0.2, 0.5, 0.8])
    checks = [
        _Check(
            "conjecture/numeric-vs-rhs",
            {"two_k": tk, "abs_chi": chi},
            tol,
            "rel",
            partial(_conjecture_pair, tk, chi, grid),
        )
        for tk in weights
        for chi in chis
    ]
    checks.append(
        _Check(
            "conjecture/spot-two-thirds",
            {"two_k": 2.0, "abs_chi": 0.5},
            tol,
            "rel",
            partial(_conjecture_spot, grid),
        )
    )
    return checks


def _build_paris(req: SuiteRequest) -> list[_Check]:
    per_mode = req.cutoff or 48
    quanta = req.safe_sector or 12
    tol = req.tol if req.tol is not None else 1e-6
    zs = _pick(req.z_override(), [0.5, 0.25 + 0.4j])
    return [
        _Check(
            "paris/sector-residual",
            {"z": _c2(z), "max_quanta": quanta, "per_mode": per_mode},
            tol,
            "abs",
            partial(_paris_dev, z, per_mode, quanta),
        )
        for z in zs
    ]


def _build_glauber_failure(req: SuiteRequest) -> list[_Check]:
    """The reconstruction integral against the hyperbolic measure is not an
    identity: applied to |0><0| it returns 1 at (0,0) but -1/(2K) at (1,1),
    where the projector itself vanishes.  The suite passes when the engine
    reproduces those quadrature values — i.e. when the failure is confirmed."""
    two_k = req.two_k if req.two_k is not None else 2.0
    cutoff = req.cutoff or 64
    tol = req.tol if req.tol is not None else 1e-3
    grid = _disk_grid(req)
    return [
        _Check(
            "glauber-failure/diagonal-00",
            {"two_k": two_k, "entry": [0, 0]},
            tol,
            "abs",
            partial(_glauber_failure_entry, two_k, (0, 0), 1.0, cutoff, grid),
        ),
        _Check(
            "glauber-failure/diagonal-11",
            {"two_k": two_k, "entry": [1, 1]},
            tol,
            "abs",
            partial(_glauber_failure_entry, two_k, (1, 1), -1.0 / two_k, cutoff, grid),
        ),
        _Check(
            "glauber-failure/deviation-floor",
            {"two_k": two_k, "floor": 0.05},
            0.0,
            "floor",
            partial(_glauber_failure_deviation, two_k, cutoff, grid),
        ),
    ]


_BUILDERS: dict[str, Callable[[SuiteRequest], list[_Check]]] = {
    "u-elements": _build_u_elements,
    "u-composition": _build_u_composition,
    "u-trace": _build_u_trace,
    "glauber": _build_glauber,
    "laguerre": _build_laguerre,
    "su11-elements": _build_su11_elements,
    "su11-trace": _build_su11_trace,
    "disentangle": _build_disentangle,
    "decomposition": _build_decomposition,
    "resolution": _build_resolution,
    "conjecture": _build_conjecture,
    "paris": _build_paris,
    "glauber-failure": _build_glauber_failure,
}


def build_checks(name: str, request: SuiteRequest) -> list[_Check]:
    if name == "all":
        checks = []
        for suite in SUITE_NAMES:
            checks.extend(_BUILDERS[suite](request))
        return checks
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(SUITE_NAMES + ("all",))
        raise UnknownSuiteError(f"unknown suite {name!r}; expected one of: {known}") from None
    return builder(request)


# ---------------------------------------------------------------------------
# execution


def _execute(check: _Check) -> CheckReport:
    guard = _MP_LOCK if check.uses_mp else nullcontext()
    with guard:
        start = time.perf_counter()
        try:
            computed, reference, cutoff, sector = check.run()
        except Exception as exc:
            runtime = int(round(1000.0 * (time.perf_counter() - start)))
            return failure_report(
                check.check, check.params, exc, check.tolerance, runtime_ms=runtime
            )
        runtime = int(round(1000.0 * (time.perf_counter() - start)))
    return make_report(
        check.check,
        check.params,
        computed,
        reference,
        check.tolerance,
        mode=check.mode,
        cutoff=cutoff,
        safe_sector=sector,
        runtime_ms=runtime,
    )


def _report_key(report: CheckReport):
    return report.check, json.dumps(report.params, sort_keys=True)


def run_request(request: SuiteRequest) -> SuiteResult:
    """Run one suite: expand to checks, execute (in up to `jobs` threads),
    and return reports sorted by (check id, params) independent of scheduling."""
    start = time.perf_counter()
    checks = build_checks(request.suite, request)
    if request.jobs > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=request.jobs) as pool:
            reports = list(pool.map(_execute, checks))
    else:
        reports = [_execute(check) for check in checks]
    reports.sort(key=_report_key)
    runtime = int(round(1000.0 * (time.perf_counter() - start)))
    return SuiteResult(
        suite=request.suite,
        reports=reports,
        all_pass=all(r.pass_ for r in reports),
        runtime_ms=runtime,
    )


def run_suite(name: str, overrides: dict | SuiteRequest | None = None) -> list[CheckReport]:
    """Reports for the named suite; overrides as a dict of SuiteRequest fields."""
    if isinstance(overrides, SuiteRequest):
        request = overrides.model_copy(update={"suite": name})
    else:
        request = SuiteRequest(suite=name, **(overrides or {}))
    return run_request(request).reports


def limit_study(depth: int, chi: float = 0.5, angular_nodes: int = 256) -> list[CheckReport]:
    """Conjecture checks marching the weight toward its degenerate value:
    two_k = 1 + 2^{-i} for i = 1..depth.

    The radial decay rate 2(2K-1) collapses as 2K -> 1, so the cutoff is
    scaled like 1/(2K-1) and the check retries once with the engine's own
    suggested cutoff.  Past s_max ~ 100 the hyperbolic kernel overflows
    float64, and the weights beyond that depth report structured failures —
    the quantitative face of the degenerate 2K = 1 measure.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    reports = []
    for i in range(1, depth + 1):
        two_k = 1.0 + 0.5**i
        s_max = min(96.0, max(12.0, 10.0 / (two_k - 1.0)))
        radial = max(400, int(24.0 * s_max))
        params = {"two_k": two_k, "abs_chi": chi, "s_max": s_max}

        def attempt(tk=two_k, c=chi, s=s_max, r=radial):
            grid = DiskGrid(s_max=s, radial_nodes=r, angular_nodes=angular_nodes)
            try:
                numeric, rhs = conjecture_integral(tk, c, grid)
            except TailBoundError as exc:
                retry = DiskGrid(
                    s_max=exc.s_max_suggested,
                    radial_nodes=max(r, int(24.0 * exc.s_max_suggested)),
                    angular_nodes=angular_nodes,
                )
                numeric, rhs = conjecture_integral(tk, c, retry)
            return numeric, rhs, 0, 0

        check = _Check("conjecture/limit-study", params, 1e-4, "rel", attempt)
        reports.append(_execute(check))
    return reports
