"""Scenario files: a small INI dialect, schema ``rb-scenario/1``.

Layout::

    [scenario]
    schema = rb-scenario/1
    bandwidth = 100

    [solver]                ; optional, defaults applied per key
    delta = 1e-3
    max_iters = 40
    damping = harmonic      ; harmonic | exponential
    l3 = 10                 ; harmonic step scale
    l1 = 2                  ; exponential amplitude (with damping = exponential)
    l2 = 10                 ; exponential decay constant
    w_init = 1.0

    [ue.1]
    utility = sigmoidal
    a = 5
    b = 10

    [ue.4]
    utility = logarithmic
    k = 15
    r_max = 100

UE ids come from the section names and must be contiguous from 1.  All
numbers are plain decimal literals.  Unknown sections or keys are rejected,
and every error names the offending section/field.
"""

from __future__ import annotations

import configparser
from pathlib import Path

from .exceptions import ScenarioError
from .solver import (
    ExponentialDamping,
    HarmonicDamping,
    Scenario,
    SolverParams,
    UEProfile,
)
from .utility import Logarithmic, Sigmoidal, UtilityFunction

SCHEMA = "rb-scenario/1"

_SOLVER_KEYS = {"delta", "max_iters", "damping", "l1", "l2", "l3", "w_init"}
_UE_KEYS = {"sigmoidal": {"utility", "a", "b"}, "logarithmic": {"utility", "k", "r_max"}}


def _float(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ScenarioError(f"[{section}] {key}: not a decimal number: {raw!r}") from None


def _int(section: str, key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ScenarioError(f"[{section}] {key}: not an integer: {raw!r}") from None


def _parse_solver(section: dict) -> SolverParams:
    unknown = set(section) - _SOLVER_KEYS
    if unknown:
        raise ScenarioError(f"[solver] unknown keys: {sorted(unknown)}")
    kind = section.get("damping", "harmonic")
    if kind == "harmonic":
        if "l1" in section or "l2" in section:
            raise ScenarioError("[solver] l1/l2 only apply to damping = exponential")
        damping = HarmonicDamping(l3=_float("solver", "l3", section.get("l3", "10")))
    elif kind == "exponential":
        if "l3" in section:
            raise ScenarioError("[solver] l3 only applies to damping = harmonic")
        if "l1" not in section or "l2" not in section:
            raise ScenarioError("[solver] damping = exponential requires l1 and l2")
        damping = ExponentialDamping(
            l1=_float("solver", "l1", section["l1"]),
            l2=_float("solver", "l2", section["l2"]),
        )
    else:
        raise ScenarioError(f"[solver] damping must be harmonic or exponential, got {kind!r}")
    try:
        return SolverParams(
            delta=_float("solver", "delta", section.get("delta", "1e-3")),
            max_iters=_int("solver", "max_iters", section.get("max_iters", "40")),
            damping=damping,
            w_init=_float("solver", "w_init", section.get("w_init", "1.0")),
        )
    except ValueError as exc:
        raise ScenarioError(f"[solver] {exc}") from None


def _parse_ue(name: str, section: dict) -> UtilityFunction:
    family = section.get("utility")
    if family not in _UE_KEYS:
        raise ScenarioError(
            f"[{name}] utility must be sigmoidal or logarithmic, got {family!r}"
        )
    allowed = _UE_KEYS[family]
    unknown = set(section) - allowed
    if unknown:
        raise ScenarioError(f"[{name}] unknown keys for {family} utility: {sorted(unknown)}")
    missing = allowed - set(section)
    if missing:
        raise ScenarioError(f"[{name}] missing keys: {sorted(missing)}")
    try:
        if family == "sigmoidal":
            return Sigmoidal(
                a=_float(name, "a", section["a"]),
                b=_float(name, "b", section["b"]),
            )
        return Logarithmic(
            k=_float(name, "k", section["k"]),
            r_max=_float(name, "r_max", section["r_max"]),
        )
    except ValueError as exc:
        raise ScenarioError(f"[{name}] {exc}") from None


def load_scenario(path: str | Path) -> Scenario:
    """Parse and validate a scenario file; solver defaults fill omitted keys."""
    path = Path(path)
    if not path.is_file():
        raise ScenarioError(f"scenario file not found: {path}")
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with path.open() as fh:
            parser.read_file(fh, source=str(path))
    except configparser.Error as exc:
        raise ScenarioError(f"{path}: {exc}") from None

    sections = {name: dict(parser[name]) for name in parser.sections()}
    if "scenario" not in sections:
        raise ScenarioError(f"{path}: missing [scenario] section")
    head = sections.pop("scenario")
    unknown = set(head) - {"schema", "bandwidth"}
    if unknown:
        raise ScenarioError(f"[scenario] unknown keys: {sorted(unknown)}")
    schema = head.get("schema")
    if schema != SCHEMA:
        raise ScenarioError(f"[scenario] schema must be {SCHEMA!r}, got {schema!r}")
    if "bandwidth" not in head:
        raise ScenarioError("[scenario] missing key: bandwidth")
    bandwidth = _float("scenario", "bandwidth", head["bandwidth"])

    params = _parse_solver(sections.pop("solver", {}))

    ues = []
    for name in list(sections):
        if not name.startswith("ue."):
            raise ScenarioError(f"unknown section [{name}]")
        ue_id = _int(name, "id", name[3:])
        ues.append(UEProfile(ue_id=ue_id, utility=_parse_ue(name, sections.pop(name))))
    ues.sort(key=lambda ue: ue.ue_id)

    try:
        return Scenario(ues=tuple(ues), bandwidth=bandwidth, params=params)
    except ValueError as exc:
        raise ScenarioError(f"{path}: {exc}") from None
