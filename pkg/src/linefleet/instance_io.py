"""Parsing, normalization, generation and serialization of problem instances.

Instance file format (UTF-8 text):

    k=<int> v=<rational>
    # comment lines and trailing comments start with '#'
    <x> <t> <w>        one request per line; x, t rational; w integer >= 0

Schedule file format: one "robot <i>: (x,t) -> (x,t) -> ..." line per robot
followed by a single trailing "weight=<int>" line.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction


class InstanceError(ValueError):
    """Base for instance file problems; carries line/column attribution."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, col {column}: {message}" if line else message)
        self.line = line
        self.column = column


class InstanceSyntaxError(InstanceError):
    pass


class NegativeTime(InstanceError):
    pass


class NegativeWeight(InstanceError):
    pass


class NonPositiveSpeed(InstanceError):
    pass


@dataclass(frozen=True)
class Request:
    x: Fraction
    t: Fraction
    w: int


@dataclass(frozen=True)
class Instance:
    requests: tuple[Request, ...]
    k: int
    v: Fraction


@dataclass(frozen=True)
class NormalizedInstance:
    """Speed-normalized instance: v = 1, distinct (x, t), |x| <= t.

    merge_log maps each surviving request index to the original request
    indices folded into it; dropped lists originals that were unreachable.
    """

    requests: tuple[Request, ...]
    k: int
    merge_log: dict[int, tuple[int, ...]] = field(default_factory=dict)
    dropped: tuple[int, ...] = ()

    @property
    def total_weight(self) -> int:
        return sum(r.w for r in self.requests)


def _parse_rational(token: str, line: int, col: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InstanceSyntaxError(f"not a rational number: {token!r}", line, col)


def _strip_comment(text: str) -> str:
    pos = text.find("#")
    return text if pos < 0 else text[:pos]


def parse_instance(text: str) -> Instance:
    lines = text.splitlines()
    header_idx = None
    for idx, raw in enumerate(lines):
        if _strip_comment(raw).strip():
            header_idx = idx
            break
    if header_idx is None:
        raise InstanceSyntaxError("empty instance file", 1, 1)
    header = _strip_comment(lines[header_idx]).split()
    if len(header) != 2 or not header[0].startswith("k=") or not header[1].startswith("v="):
        raise InstanceSyntaxError("header must be 'k=<int> v=<rational>'", header_idx + 1, 1)
    try:
        k = int(header[0][2:])
    except ValueError:
        raise InstanceSyntaxError(f"bad robot count {header[0][2:]!r}", header_idx + 1, 1)
    v = _parse_rational(header[1][2:], header_idx + 1, len(header[0]) + 2)
    if k < 1:
        raise InstanceSyntaxError(f"robot count must be >= 1, got {k}", header_idx + 1, 1)
    if v <= 0:
        raise NonPositiveSpeed(f"speed must be > 0, got {v}", header_idx + 1, 1)

    requests = []
    for idx in range(header_idx + 1, len(lines)):
        body = _strip_comment(lines[idx])
        if not body.strip():
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise InstanceSyntaxError(f"expected 'x t w', got {len(tokens)} fields", idx + 1, 1)
        x = _parse_rational(tokens[0], idx + 1, 1)
        t = _parse_rational(tokens[1], idx + 1, len(tokens[0]) + 2)
        if t < 0:
            raise NegativeTime(f"time must be >= 0, got {t}", idx + 1, len(tokens[0]) + 2)
        wcol = len(tokens[0]) + len(tokens[1]) + 3
        try:
            w = int(tokens[2])
        except ValueError:
            raise InstanceSyntaxError(f"weight must be an integer, got {tokens[2]!r}", idx + 1, wcol)
        if w < 0:
            raise NegativeWeight(f"weight must be >= 0, got {w}", idx + 1, wcol)
        requests.append(Request(x, t, w))
    return Instance(tuple(requests), k, v)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def serialize_instance(inst: Instance) -> str:
    lines = [f"k={inst.k} v={format_rational(inst.v)}"]
    for r in inst.requests:
        lines.append(f"{format_rational(r.x)} {format_rational(r.t)} {r.w}")
    return "\n".join(lines) + "\n"


def normalize_instance(inst) -> NormalizedInstance:
    """Scale speed to 1, drop unreachable requests, merge coincident ones."""
    v = Fraction(getattr(inst, "v", 1))
    if v <= 0:
        raise NonPositiveSpeed(f"speed must be > 0, got {v}")
    scaled = [Request(Fraction(r.x) / v, Fraction(r.t), r.w) for r in inst.requests]
    dropped = tuple(i for i, r in enumerate(scaled) if abs(r.x) > r.t)
    by_coord: dict[tuple[Fraction, Fraction], list[int]] = {}
    for i, r in enumerate(scaled):
        if abs(r.x) <= r.t:
            by_coord.setdefault((r.x, r.t), []).append(i)
    merged = []
    merge_log = {}
    for coord in sorted(by_coord):
        originals = by_coord[coord]
        w = sum(scaled[i].w for i in originals)
        merge_log[len(merged)] = tuple(originals)
        merged.append(Request(coord[0], coord[1], w))
    return NormalizedInstance(tuple(merged), inst.k, merge_log, dropped)


def generate_random(seed: int, n: int, time_horizon: int | None = None,
                    weight_max: int = 9, k: int = 1) -> Instance:
    """Deterministic random instance: n distinct reachable integer requests."""
    if n < 1:
        raise ValueError("n must be >= 1")
    horizon = time_horizon if time_horizon is not None else max(4 * n, 16)
    rng = random.Random(seed)
    seen = set()
    requests = []
    while len(requests) < n:
        t = rng.randint(1, horizon)
        x = rng.randint(-t, t)
        if (x, t) in seen:
            continue
        seen.add((x, t))
        requests.append(Request(Fraction(x), Fraction(t), rng.randint(0, weight_max)))
    return Instance(tuple(requests), k, Fraction(1))


def serialize_schedules(schedules, total_weight: int) -> str:
    """Render robot waypoint polylines plus the trailing weight line."""
    lines = []
    for i, waypoints in enumerate(schedules, start=1):
        steps = " -> ".join(f"({format_rational(x)},{format_rational(t)})" for x, t in waypoints)
        lines.append(f"robot {i}: {steps}")
    lines.append(f"weight={total_weight}")
    return "\n".join(lines) + "\n"


def parse_schedules(text: str) -> tuple[list[list[tuple[Fraction, Fraction]]], int]:
    schedules = []
    weight = None
    for idx, raw in enumerate(text.splitlines()):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("weight="):
            weight = int(line[len("weight="):])
            continue
        if not line.startswith("robot "):
            raise InstanceSyntaxError(f"unrecognized schedule line: {line!r}", idx + 1, 1)
        _, _, rest = line.partition(":")
        waypoints = []
        for step in rest.split("->"):
            step = step.strip()
            if not step:
                continue
            if not (step.startswith("(") and step.endswith(")")):
                raise InstanceSyntaxError(f"bad waypoint {step!r}", idx + 1, 1)
            xs, _, ts = step[1:-1].partition(",")
            waypoints.append((Fraction(xs), Fraction(ts)))
        schedules.append(waypoints)
    if weight is None:
        raise InstanceSyntaxError("missing trailing weight= line", 1, 1)
    return schedules, weight
