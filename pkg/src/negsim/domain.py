"""Negotiation domains, bids, and linear-additive utility profiles.

A domain is an ordered set of issues, each either discrete (an explicit
value list) or an integer range. A bid assigns one value per issue. A
utility profile scores bids with non-negative issue weights that sum to
one, so every utility lands in [0, 1].
"""
from __future__ import annotations

import functools
import hashlib
import itertools
import json
from dataclasses import dataclass

import numpy as np

BID_SPACE_CAP = 1_000_000

# Weights of generated profiles are snapped to this grid so that the sum
# of any subset is exact in binary floating point; the best bid of a
# generated profile then has utility exactly 1.0 under any summation order.
_WEIGHT_GRID = 2**30


class CapacityError(RuntimeError):
    """Bid space too large to enumerate."""


@dataclass(frozen=True, slots=True)
class DiscreteIssue:
    name: str
    values: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError(f"issue {self.name!r} has no values")
        if len(set(self.values)) != len(self.values):
            raise ValueError(f"issue {self.name!r} has duplicate values")


@dataclass(frozen=True, slots=True)
class IntegerIssue:
    name: str
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"issue {self.name!r} has lo {self.lo} > hi {self.hi}")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(range(self.lo, self.hi + 1))


Issue = DiscreteIssue | IntegerIssue


@dataclass(frozen=True, slots=True)
class Domain:
    name: str
    issues: tuple[Issue, ...]

    def __post_init__(self) -> None:
        if not self.issues:
            raise ValueError("domain needs at least one issue")
        names = [iss.name for iss in self.issues]
        if len(set(names)) != len(names):
            raise ValueError("duplicate issue names")

    def size(self) -> int:
        n = 1
        for iss in self.issues:
            n *= len(iss.values)
        return n


@dataclass(frozen=True, slots=True)
class Bid:
    values: tuple[str | int, ...]


def validate_bid(domain: Domain, bid: Bid) -> None:
    """Raise ValueError unless the bid assigns a legal value to every issue."""
    if len(bid.values) != len(domain.issues):
        raise ValueError(
            f"bid has {len(bid.values)} values for {len(domain.issues)} issues"
        )
    for iss, v in zip(domain.issues, bid.values):
        if isinstance(iss, DiscreteIssue):
            if v not in iss.values:
                raise ValueError(f"value {v!r} not legal for issue {iss.name!r}")
        else:
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise ValueError(f"issue {iss.name!r} needs an integer, got {v!r}")
            if not iss.lo <= v <= iss.hi:
                raise ValueError(
                    f"value {v} outside [{iss.lo}, {iss.hi}] for issue {iss.name!r}"
                )


@functools.lru_cache(maxsize=128)
def _enumerated(domain: Domain) -> tuple[Bid, ...]:
    return tuple(
        Bid(values=combo)
        for combo in itertools.product(*(iss.values for iss in domain.issues))
    )


def enumerate_bids(domain: Domain, cap: int = BID_SPACE_CAP) -> tuple[Bid, ...]:
    """All bids in lexicographic issue order (last issue varies fastest).

    Raises CapacityError naming the actual size when the space exceeds cap.
    """
    size = domain.size()
    if size > cap:
        raise CapacityError(f"bid space has {size} outcomes, above the cap of {cap}")
    return _enumerated(domain)


@functools.lru_cache(maxsize=128)
def bid_index(domain: Domain) -> dict[Bid, int]:
    return {b: i for i, b in enumerate(_enumerated(domain))}


def encoded_length(domain: Domain) -> int:
    return sum(
        len(iss.values) if isinstance(iss, DiscreteIssue) else 1
        for iss in domain.issues
    )


def encode(domain: Domain, bid: Bid) -> np.ndarray:
    """Feature vector: one-hot per discrete issue, normalized position per
    integer issue ((v - lo) / (hi - lo), 0.0 when lo == hi)."""
    x = np.zeros(encoded_length(domain))
    at = 0
    for iss, v in zip(domain.issues, bid.values):
        if isinstance(iss, DiscreteIssue):
            x[at + iss.values.index(v)] = 1.0
            at += len(iss.values)
        else:
            span = iss.hi - iss.lo
            x[at] = 0.0 if span == 0 else (v - iss.lo) / span
            at += 1
    return x


@functools.lru_cache(maxsize=128)
def encoded_matrix(domain: Domain, cap: int = BID_SPACE_CAP) -> np.ndarray:
    """Stacked encodings of enumerate_bids(domain), row i = bid i. Read-only."""
    bids = enumerate_bids(domain, cap)
    m = np.stack([encode(domain, b) for b in bids])
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class UtilityProfile:
    """Linear-additive preferences over one domain.

    value_utils holds one tuple per issue: utilities aligned with the
    issue's value order for a discrete issue, or (u_lo, u_hi) endpoints
    that are linearly interpolated for an integer issue.
    """

    domain: Domain
    weights: tuple[float, ...]
    value_utils: tuple[tuple[float, ...], ...]
    reservation: float = 0.0
    discount_factor: float = 1.0

    def __post_init__(self) -> None:
        issues = self.domain.issues
        if len(self.weights) != len(issues) or len(self.value_utils) != len(issues):
            raise ValueError("weights/value_utils arity does not match the domain")
        if any(w < 0 for w in self.weights):
            raise ValueError("negative issue weight")
        if abs(sum(self.weights) - 1.0) > 1e-9:
            raise ValueError(f"issue weights sum to {sum(self.weights)}, not 1")
        for iss, utils in zip(issues, self.value_utils):
            want = len(iss.values) if isinstance(iss, DiscreteIssue) else 2
            if isinstance(iss, IntegerIssue):
                if len(utils) != 2:
                    raise ValueError(f"issue {iss.name!r} needs (u_lo, u_hi)")
            elif len(utils) != want:
                raise ValueError(f"issue {iss.name!r} has {want} values, got {len(utils)} utilities")
            if any(not 0.0 <= u <= 1.0 for u in utils):
                raise ValueError(f"value utility outside [0, 1] for issue {iss.name!r}")
        if not 0.0 <= self.reservation <= 1.0:
            raise ValueError(f"reservation {self.reservation} outside [0, 1]")
        if not 0.0 < self.discount_factor <= 1.0:
            raise ValueError(f"discount factor {self.discount_factor} outside (0, 1]")


def utility(profile: UtilityProfile, bid: Bid) -> float:
    """Weighted sum of per-issue value utilities; integer issues interpolate
    linearly between their endpoints."""
    validate_bid(profile.domain, bid)
    total = 0.0
    for iss, utils, w, v in zip(
        profile.domain.issues, profile.value_utils, profile.weights, bid.values
    ):
        if isinstance(iss, DiscreteIssue):
            total += w * utils[iss.values.index(v)]
        else:
            u_lo, u_hi = utils
            span = iss.hi - iss.lo
            t = 0.0 if span == 0 else (v - iss.lo) / span
            total += w * (u_lo + t * (u_hi - u_lo))
    return total


def utility_coefficients(profile: UtilityProfile) -> tuple[np.ndarray, float]:
    """(coeff, const) such that utilities over encoded bids are X @ coeff + const."""
    coeff = np.zeros(encoded_length(profile.domain))
    const = 0.0
    at = 0
    for iss, utils, w in zip(
        profile.domain.issues, profile.value_utils, profile.weights
    ):
        if isinstance(iss, DiscreteIssue):
            k = len(iss.values)
            coeff[at : at + k] = np.asarray(utils) * w
            at += k
        else:
            u_lo, u_hi = utils
            coeff[at] = w * (u_hi - u_lo)
            const += w * u_lo
            at += 1
    return coeff, const


@functools.lru_cache(maxsize=256)
def utilities_over_space(profile: UtilityProfile, cap: int = BID_SPACE_CAP) -> np.ndarray:
    """Utility of every bid in enumeration order. Cached; read-only."""
    coeff, const = utility_coefficients(profile)
    u = encoded_matrix(profile.domain, cap) @ coeff + const
    u.setflags(write=False)
    return u


def discount(value: float, r: int, round_limit: int, delta: float) -> float:
    """Time-discount a value at round r of round_limit: value * delta**(r/R).

    At the deadline (r = R) the multiplier is exactly delta.
    """
    if not 0 <= r <= round_limit:
        raise ValueError(f"round {r} outside [0, {round_limit}]")
    if round_limit < 1:
        raise ValueError("round limit must be >= 1")
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"discount factor {delta} outside (0, 1]")
    return value * delta ** (r / round_limit)


def social_welfare(utilities: "list[float] | tuple[float, ...] | np.ndarray") -> float:
    """Mean utility across agents."""
    arr = np.asarray(utilities, dtype=float)
    if arr.size == 0:
        raise ValueError("social welfare of zero agents is undefined")
    return float(arr.mean())


def generate_domain(
    n_issues: int, values_per_issue: int, name: str | None = None
) -> Domain:
    """Discrete domain with synthetic issue/value names: issue0..issueN-1,
    each carrying values v0..vK-1."""
    if n_issues < 1 or values_per_issue < 1:
        raise ValueError("need at least one issue and one value per issue")
    issues = tuple(
        DiscreteIssue(
            name=f"issue{i}",
            values=tuple(f"v{j}" for j in range(values_per_issue)),
        )
        for i in range(n_issues)
    )
    return Domain(name=name or f"gen-{n_issues}x{values_per_issue}", issues=issues)


def _rescaled(raw: np.ndarray) -> tuple[float, ...]:
    # Map the drawn utilities onto [0, 1] with the min exactly 0 and the
    # max exactly 1, so the per-issue best value contributes its full weight.
    if raw.size == 1:
        return (1.0,)
    lo, hi = raw.min(), raw.max()
    if hi == lo:
        return tuple(1.0 if i == 0 else 0.0 for i in range(raw.size))
    return tuple(float(u) for u in (raw - lo) / (hi - lo))


def _quantized_weights(raw: np.ndarray) -> tuple[float, ...]:
    w = raw / raw.sum()
    if w.size == 1:
        return (1.0,)
    q = np.floor(w[:-1] * _WEIGHT_GRID) / _WEIGHT_GRID
    rest = 1.0 - float(q.sum())
    return tuple(float(v) for v in q) + (rest,)


def generate_profile(
    domain: Domain,
    reservation: float,
    discount_factor: float,
    rng_seed: int,
) -> UtilityProfile:
    """Random profile: positive weights normalized to sum exactly 1.0, and
    per-issue value utilities rescaled to span [0, 1], so brute-force argmax
    over the bid space always finds a bid of utility exactly 1.0."""
    rng = np.random.default_rng(rng_seed)
    weights = _quantized_weights(rng.uniform(0.1, 1.0, len(domain.issues)))
    value_utils = []
    for iss in domain.issues:
        if isinstance(iss, DiscreteIssue):
            value_utils.append(_rescaled(rng.random(len(iss.values))))
        elif iss.lo == iss.hi:
            value_utils.append((1.0, 1.0))
        else:
            value_utils.append(_rescaled(rng.random(2)))
    return UtilityProfile(
        domain=domain,
        weights=weights,
        value_utils=tuple(value_utils),
        reservation=reservation,
        discount_factor=discount_factor,
    )


# ---------------------------------------------------------------------------
# scenario files


def scenario_to_json(domain: Domain, profiles: "tuple[UtilityProfile, ...]") -> dict:
    issues_json: list[dict] = []
    for iss in domain.issues:
        if isinstance(iss, DiscreteIssue):
            issues_json.append(
                {"name": iss.name, "type": "discrete", "values": list(iss.values)}
            )
        else:
            issues_json.append(
                {"name": iss.name, "type": "integer", "lo": iss.lo, "hi": iss.hi}
            )
    profiles_json = []
    for p in profiles:
        values: dict[str, object] = {}
        for iss, utils in zip(domain.issues, p.value_utils):
            if isinstance(iss, DiscreteIssue):
                values[iss.name] = {v: u for v, u in zip(iss.values, utils)}
            else:
                values[iss.name] = {"u_lo": utils[0], "u_hi": utils[1]}
        profiles_json.append(
            {
                "weights": list(p.weights),
                "values": values,
                "reservation": p.reservation,
                "discount": p.discount_factor,
            }
        )
    return {
        "domain": {"name": domain.name, "issues": issues_json},
        "profiles": profiles_json,
    }


def scenario_from_json(obj: dict) -> tuple[Domain, tuple[UtilityProfile, ...]]:
    try:
        issues: list[Issue] = []
        for ij in obj["domain"]["issues"]:
            if ij["type"] == "discrete":
                issues.append(
                    DiscreteIssue(name=ij["name"], values=tuple(ij["values"]))
                )
            elif ij["type"] == "integer":
                issues.append(
                    IntegerIssue(name=ij["name"], lo=int(ij["lo"]), hi=int(ij["hi"]))
                )
            else:
                raise ValueError(f"unknown issue type {ij['type']!r}")
        domain = Domain(name=obj["domain"]["name"], issues=tuple(issues))
        profiles = []
        for pj in obj["profiles"]:
            value_utils = []
            for iss in issues:
                entry = pj["values"][iss.name]
                if isinstance(iss, DiscreteIssue):
                    value_utils.append(tuple(float(entry[v]) for v in iss.values))
                else:
                    value_utils.append((float(entry["u_lo"]), float(entry["u_hi"])))
            profiles.append(
                UtilityProfile(
                    domain=domain,
                    weights=tuple(float(w) for w in pj["weights"]),
                    value_utils=tuple(value_utils),
                    reservation=float(pj.get("reservation", 0.0)),
                    discount_factor=float(pj.get("discount", 1.0)),
                )
            )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scenario: {exc}") from exc
    return domain, tuple(profiles)


def save_scenario(path: str, domain: Domain, profiles: "tuple[UtilityProfile, ...]") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_json(domain, profiles), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_scenario(path: str) -> tuple[Domain, tuple[UtilityProfile, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        return scenario_from_json(json.load(fh))


def scenario_hash(domain: Domain, profiles: "tuple[UtilityProfile, ...]") -> str:
    blob = json.dumps(
        scenario_to_json(domain, profiles), sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()
