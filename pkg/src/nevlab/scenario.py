"""Scenario files: the JSON surface consumed by the harness and CLI.

Schema (all strings parse with the grammars in nevlab.parsing):

    {
      "n": 1,
      "curve": ["z", "1"],
      "targets": [{"form": "x0 - x1", "degree": 1}, ...],
      "epsilon": "1/2",            # optional for theorem-r style runs
      "r_grid": [20, 40, 80],
      "alpha_override": 6,         # optional
      "M_override": 1,             # optional; "inf" allowed
      "tol": 1e-4                  # optional
    }

Structural validation happens here; mode-specific preconditions (q > n,
epsilon present, general position) are enforced by the operations that
need them.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .errors import PreconditionError
from .expressions import Curve
from .parsing import parse_expr, parse_form
from .polynomials import HomogeneousPoly

_KNOWN_KEYS = {"n", "curve", "targets", "epsilon", "r_grid",
               "alpha_override", "M_override", "tol"}


@dataclass(frozen=True)
class TargetSpec:
    form: str
    degree: int


@dataclass(frozen=True)
class Scenario:
    n: int
    curve: Tuple[str, ...]
    targets: Tuple[TargetSpec, ...]
    r_grid: Tuple[float, ...]
    epsilon: Optional[str] = None
    alpha_override: Optional[int] = None
    m_override: Optional[float] = None
    tol: float = 1e-4

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("n must be at least 1")
        if len(self.curve) != self.n + 1:
            raise PreconditionError(
                f"curve needs {self.n + 1} components for n={self.n}, got {len(self.curve)}")
        if not self.targets:
            raise PreconditionError("at least one target is required")
        for t in self.targets:
            if t.degree < 1:
                raise PreconditionError(f"target degree must be positive: {t}")
        grid = list(self.r_grid)
        if not grid or any(r <= 0 for r in grid) or sorted(grid) != grid:
            raise PreconditionError("r_grid must be ascending and positive")
        if self.tol <= 0:
            raise PreconditionError("tol must be positive")
        if self.m_override is not None:
            m = self.m_override
            if m != math.inf and (m < 1 or int(m) != m):
                raise PreconditionError("M_override must be a positive integer or inf")
        if self.alpha_override is not None and self.alpha_override < 1:
            raise PreconditionError("alpha_override must be a positive integer")

    # -- parsed views ---------------------------------------------------------

    def parsed_curve(self) -> Curve:
        return Curve(self.n, tuple(parse_expr(c) for c in self.curve))

    def parsed_targets(self) -> List[HomogeneousPoly]:
        forms = []
        for t in self.targets:
            form = parse_form(t.form, self.n + 1)
            if form.is_zero:
                raise PreconditionError(f"target form is zero: {t.form!r}")
            if form.degree != t.degree:
                raise PreconditionError(
                    f"target {t.form!r} has degree {form.degree}, declared {t.degree}")
            forms.append(form)
        return forms


def scenario_from_dict(data: dict) -> Scenario:
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise PreconditionError(f"unknown scenario keys: {sorted(unknown)}")
    for key in ("n", "curve", "targets", "r_grid"):
        if key not in data:
            raise PreconditionError(f"scenario is missing required key {key!r}")
    targets = []
    for entry in data["targets"]:
        if not isinstance(entry, dict) or set(entry) != {"form", "degree"}:
            raise PreconditionError(
                f"each target needs exactly 'form' and 'degree': {entry}")
        targets.append(TargetSpec(str(entry["form"]), int(entry["degree"])))
    epsilon = data.get("epsilon")
    if epsilon is not None:
        epsilon = str(epsilon)
    m_override = data.get("M_override")
    if isinstance(m_override, str):
        if m_override not in ("inf", "infinity"):
            raise PreconditionError(f"bad M_override: {m_override!r}")
        m_override = math.inf
    return Scenario(
        n=int(data["n"]),
        curve=tuple(str(c) for c in data["curve"]),
        targets=tuple(targets),
        r_grid=tuple(float(r) for r in data["r_grid"]),
        epsilon=epsilon,
        alpha_override=(int(data["alpha_override"])
                        if data.get("alpha_override") is not None else None),
        m_override=m_override,
        tol=float(data.get("tol", 1e-4)),
    )


def load_scenario(path: Union[str, Path]) -> Scenario:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise PreconditionError(f"scenario file is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise PreconditionError("scenario file must hold a JSON object")
    return scenario_from_dict(data)
