"""Exploratory runs: each returns report lines headed by version and settings."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath

from . import BACKEND, __version__
from .errors import SizeLimitError
from .excedance import (PHI_U, PHI_U_IMAGE, bracket, bracket_via_normal_form,
                        phi_candidate, total_nonnegativity_scan)
from .graphs import chromatic_named, chromatic_polynomial, cyclic_ladder
from .roots import DEFAULT_BITS, chebyshev_n2_report, imaginary_scaling_experiment

__all__ = ["header", "EXPERIMENTS", "run_experiment", "ExperimentResult"]


class ExperimentResult:
    def __init__(self, lines, complete=True):
        self.lines = list(lines)
        self.complete = complete

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def header(name: str, **settings) -> list:
    extra = " ".join(f"{k}={v}" for k, v in sorted(settings.items()))
    line = f"# boxcalc {__version__} backend={BACKEND} mpmath={mpmath.__version__} experiment={name}"
    return [line + (" " + extra if extra else "")]


def tnn_sweep(max_size: int = 4) -> ExperimentResult:
    if max_size > 9:
        raise SizeLimitError("tnn sweep limited to max <= 9")
    lines = header("tnn-sweep", max=max_size)
    lines.append("m,n,tnn,minors,zero_minors")
    failures = []
    for m in range(max_size + 1):
        for n in range(max_size + 1):
            rep = total_nonnegativity_scan(m, n)
            lines.append(f"{m},{n},{str(rep.is_tnn).lower()},{rep.minors_checked},{len(rep.zero_minors)}")
            if not rep.is_tnn:
                failures.append((m, n, rep.violating_minor))
    if failures:
        lines.append(f"violations: {failures}")
    else:
        lines.append(f"all TNN up to ({max_size},{max_size})")
    return ExperimentResult(lines)


def phi_counterexample(max_cache: int = 1 << 22) -> ExperimentResult:
    lines = header("phi-counterexample", max_cache=max_cache)
    image = phi_candidate(PHI_U, "shortest")
    longest = phi_candidate(PHI_U, "longest")
    lines.append(f"u        = {PHI_U}")
    lines.append(f"phi(u)   = {image}")
    lines.append(f"shortest and longest prefix conventions agree: {image == longest}")
    lines.append(f"matches the displayed image: {image == PHI_U_IMAGE}")
    try:
        bu = bracket(PHI_U, max_cache)
        bv = bracket(image, max_cache)
    except MemoryError as exc:
        lines.append(f"INCOMPLETE: {exc}")
        return ExperimentResult(lines, complete=False)
    lines.append(f"[u]      = {bu}")
    lines.append(f"[phi(u)] = {bv}")
    lines.append(f"normal-form cross-check: {bracket_via_normal_form(PHI_U) == bu and bracket_via_normal_form(image) == bv}")
    lines.append("NOT monotone: [u] > [phi(u)]" if bu > bv else "monotone on this word: [u] <= [phi(u)]")
    return ExperimentResult(lines)


def im_scaling(m_max: int = 8, n_max: int = 8, bits: int = DEFAULT_BITS) -> ExperimentResult:
    lines = header("im-scaling", m_max=m_max, n_max=n_max, bits=bits)
    lines.append("m,n,max_im,ratio")
    for m, n, mx, ratio in imaginary_scaling_experiment(range(1, m_max + 1), range(1, n_max + 1), bits):
        lines.append(f"{m},{n},{mpmath.nstr(mx, 15)},{mpmath.nstr(ratio, 15)}")
    return ExperimentResult(lines)


def ladder_partitions(n: int = 5, crosscheck_limit: int = 7) -> ExperimentResult:
    """``S(L_n, k) = Delta^k chi(L_n) / k!`` at 0 for ``k = 0..2n``."""
    lines = header("ladder-partitions", n=n)
    chi = chromatic_named("cyclic_ladder", n=n)
    checked = n <= crosscheck_limit
    if checked and chi != chromatic_polynomial(cyclic_ladder(n)):
        lines.append("closed form DISAGREES with deletion-contraction")
        return ExperimentResult(lines, complete=False)
    lines.append(f"closed form checked against deletion-contraction: {str(checked).lower()}")
    lines.append("k,S(L_n,k)")
    for k in range(2 * n + 1):
        v = chi.forward_difference(k)(Fraction(0)) / factorial(k)
        lines.append(f"{k},{v}")
    return ExperimentResult(lines)


def chebyshev_n2(m_max: int = 6, bits: int = DEFAULT_BITS) -> ExperimentResult:
    """Roots ``-1 + i u`` of ``B_{m,2}`` against ``T_{m+2}(v) = v^{m+2}``, ``v = u/sqrt(1+u^2)``."""
    lines = header("chebyshev-n2", m_max=m_max, bits=bits)
    lines.append("m,root_re,u,max_residual")
    for m in range(1, m_max + 1):
        rep = chebyshev_n2_report(m, bits)
        worst = max(r["residual"] for r in rep)
        for r in rep:
            lines.append(f"{m},{mpmath.nstr(r['re'], 10)},{mpmath.nstr(r['u'], 15)},{mpmath.nstr(worst, 5)}")
    return ExperimentResult(lines)


EXPERIMENTS = {
    "tnn-sweep": tnn_sweep,
    "phi-counterexample": phi_counterexample,
    "im-scaling": im_scaling,
    "ladder-partitions": ladder_partitions,
    "chebyshev-n2": chebyshev_n2,
}


def run_experiment(name: str, **params) -> ExperimentResult:
    try:
        fn = EXPERIMENTS[name]
    except KeyError:
        raise ValueError(f"unknown experiment {name!r}") from None
    return fn(**params)
