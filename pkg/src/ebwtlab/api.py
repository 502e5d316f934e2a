"""Request validation, guards, and payload construction.

The command line (in JSON mode) and the HTTP service both render results
through the builders here, so identical logical requests produce byte
identical payloads.  Errors split into two machine-readable codes:
``malformed_input`` for requests that cannot be interpreted and
``guard_exceeded`` for well-formed requests refused by a size guard.
Counts that can outgrow 53-bit floats travel as decimal strings, exact
rationals as "p/q" strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from typing import Callable, Sequence

from .decompositions import (
    DEFAULT_SEARCH_LIMIT,
    SearchLimitError,
    apply_composition,
    block_decomposition,
    count_decompositions,
    enumerate_compositions,
    lyndon_factorization,
    search_extremes,
    verify_best_bound,
)
from .transform import bwt, ebwt, invert_ebwt
from .words import runs
from .worstcase import (
    artin_scan,
    cycle_solutions,
    verify_circulant_inverse,
    worst_family,
)

__all__ = [
    "ApiError",
    "MalformedInput",
    "GuardExceeded",
    "Limits",
    "DEFAULT_LIMITS",
    "load_config",
    "limits_from_config",
    "canonical_json",
]

DEFAULT_PORT = 8642
PORT_ENV_VAR = "EBWTLAB_PORT"


class ApiError(Exception):
    """Base for request failures carrying a machine-readable code."""

    code = "internal_error"
    status = 500

    @property
    def message(self) -> str:
        return str(self)


class MalformedInput(ApiError):
    """The request cannot be interpreted (bad types, bad symbols, ...)."""

    code = "malformed_input"
    status = 400


class GuardExceeded(ApiError):
    """A well-formed request was refused by a configured size guard."""

    code = "guard_exceeded"
    status = 422


@dataclass(frozen=True)
class Limits:
    """Size guards; every refusal is reported, never silently truncated."""

    word_cap: int = 4096
    search_word_cap: int = 64
    search_limit: int = DEFAULT_SEARCH_LIMIT
    count_n_cap: int = 100_000
    artin_cap: int = 1_000_000
    family_k_cap: int = 5
    family_ratio_cap: int = 100_000
    cycles_k_cap: int = 16
    circulant_k_cap: int = 64


DEFAULT_LIMITS = Limits()


def load_config(path: str) -> dict[str, str]:
    """Parse a key=value config file; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def limits_from_config(values: dict[str, str], base: Limits = DEFAULT_LIMITS) -> Limits:
    """Override the guards named in ``values``; unknown keys are left for
    the caller (the config file also holds service settings like port)."""
    known = {f.name for f in fields(Limits)}
    overrides = {}
    for key, value in values.items():
        if key in known:
            try:
                overrides[key] = int(value)
            except ValueError:
                raise ValueError(f"config key {key} needs an integer, got {value!r}") from None
    return replace(base, **overrides) if overrides else base


def canonical_json(payload: dict) -> str:
    """One canonical rendering: sorted keys, no whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _run(fn: Callable, *args, **kwargs):
    # Library errors become request errors with the right code.
    try:
        return fn(*args, **kwargs)
    except SearchLimitError as exc:
        raise GuardExceeded(str(exc)) from exc
    except (ValueError, TypeError) as exc:
        raise MalformedInput(str(exc)) from exc


def _require_str(value, field: str) -> str:
    if not isinstance(value, str):
        raise MalformedInput(f"{field} must be a string")
    return value


def _require_word(value, field: str, cap: int) -> str:
    word = _require_str(value, field)
    if not word:
        raise MalformedInput(f"{field} must not be empty")
    if len(word) > cap:
        raise GuardExceeded(f"{field} has {len(word)} symbols, the cap is {cap}")
    return word


def _require_int(value, field: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            value = int(str(value), 10)
        except (ValueError, TypeError):
            raise MalformedInput(f"{field} must be an integer") from None
    if minimum is not None and value < minimum:
        raise MalformedInput(f"{field} must be >= {minimum}, got {value}")
    return value


def _require_alphabet(value) -> str | None:
    if value is None:
        return None
    alphabet = _require_str(value, "alphabet")
    if not alphabet:
        raise MalformedInput("alphabet must not be empty")
    return alphabet


def _require_parts(value, cap: int) -> list[str]:
    if not isinstance(value, (list, tuple)) or not value:
        raise MalformedInput("parts must be a non-empty list of strings")
    parts = [_require_str(p, "part") for p in value]
    if any(not p for p in parts):
        raise MalformedInput("parts must not contain empty strings")
    total = sum(len(p) for p in parts)
    if total > cap:
        raise GuardExceeded(f"parts hold {total} symbols in total, the cap is {cap}")
    return parts


def ebwt_payload(parts, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    ps = _require_parts(parts, limits.word_cap)
    l = _run(ebwt, ps, _require_alphabet(alphabet))
    return {"l": l, "runs": runs(l)}


def bwt_payload(word, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    l = _run(bwt, w, _require_alphabet(alphabet))
    return {"l": l, "runs": runs(l)}


def invert_payload(l, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    transform = _require_word(l, "l", limits.word_cap)
    parts = _run(invert_ebwt, transform, _require_alphabet(alphabet))
    return {"parts": parts}


def runs_payload(word, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    return {"runs": runs(w)}


def apply_payload(word, parts_lengths, k, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    if not isinstance(parts_lengths, (list, tuple)) or not parts_lengths:
        raise MalformedInput("parts_lengths must be a non-empty list of integers")
    lengths = [_require_int(p, "part length", minimum=1) for p in parts_lengths]
    k_val = _require_int(k, "k", minimum=0)
    parts = _run(apply_composition, w, lengths)
    l = _run(ebwt, parts, _require_alphabet(alphabet))
    admissible = [len(p) > k_val for p in parts]
    return {
        "l": l,
        "runs": runs(l),
        "parts": parts,
        "parts_admissible": admissible,
        "admissible": all(admissible),
    }


def search_payload(
    word,
    k,
    limit=None,
    alphabet=None,
    limits: Limits = DEFAULT_LIMITS,
    interactive: bool = False,
    should_stop: Callable[[], bool] | None = None,
) -> dict:
    # The service uses the tighter interactive cap, the command line the
    # full one.
    cap = limits.search_word_cap if interactive else limits.word_cap
    w = _require_word(word, "word", cap)
    k_val = _require_int(k, "k", minimum=0)
    effective = limits.search_limit
    if limit is not None:
        effective = min(_require_int(limit, "limit", minimum=1), limits.search_limit)
    result = _run(
        search_extremes,
        w,
        k_val,
        limit=effective,
        alphabet=_require_alphabet(alphabet),
        should_stop=should_stop,
    )
    return {
        "word": result.word,
        "k": result.k,
        "count_explored": str(result.count_explored),
        "baseline_rho": result.baseline_rho,
        "min_rho": result.min_rho,
        "min_witness": format_composition(result.min_witness),
        "max_rho": result.max_rho,
        "max_witness": format_composition(result.max_witness),
    }


def count_payload(n, k, limits: Limits = DEFAULT_LIMITS) -> dict:
    n_val = _require_int(n, "n", minimum=1)
    k_val = _require_int(k, "k", minimum=0)
    if n_val > limits.count_n_cap:
        raise GuardExceeded(f"n is {n_val}, the cap is {limits.count_n_cap}")
    return {"count": str(_run(count_decompositions, n_val, k_val))}


def enumerate_payload(n, k, limits: Limits = DEFAULT_LIMITS) -> dict:
    n_val = _require_int(n, "n", minimum=1)
    k_val = _require_int(k, "k", minimum=0)
    if n_val >= k_val + 1:
        total = _run(count_decompositions, n_val, k_val)
        if total > limits.search_limit:
            raise GuardExceeded(
                f"{total} compositions, more than the limit of {limits.search_limit}"
            )
    comps = [format_composition(c) for c in _run(enumerate_compositions, n_val, k_val)]
    return {"compositions": comps, "count": str(len(comps))}


def block_payload(word, p, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    parts = _run(block_decomposition, w, _require_int(p, "p", minimum=1))
    l = _run(ebwt, parts, _require_alphabet(alphabet))
    return {"parts": parts, "l": l, "runs": runs(l)}


def bound_payload(word, k, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    check = _run(verify_best_bound, w, _require_int(k, "k", minimum=0), _require_alphabet(alphabet))
    return {
        "sigma": check.sigma,
        "k": check.k,
        "remainder": check.remainder,
        "bound": check.bound,
        "fine_bound": check.fine_bound,
        "achieved": check.achieved,
        "ok": check.ok,
        "ok_fine": check.ok_fine,
    }


def lyndon_payload(word, alphabet=None, limits: Limits = DEFAULT_LIMITS) -> dict:
    w = _require_word(word, "word", limits.word_cap)
    return {"parts": _run(lyndon_factorization, w, _require_alphabet(alphabet))}


def family_payload(k, ratio, limits: Limits = DEFAULT_LIMITS) -> dict:
    k_val = _require_int(k, "k", minimum=1)
    ratio_val = _require_int(ratio, "ratio", minimum=0)
    if k_val > limits.family_k_cap:
        raise GuardExceeded(f"k is {k_val}, the cap is {limits.family_k_cap}")
    if ratio_val > limits.family_ratio_cap:
        raise GuardExceeded(f"ratio is {ratio_val}, the cap is {limits.family_ratio_cap}")
    fam = _run(worst_family, k_val, ratio_val)
    return {
        "n": fam.n,
        "word": fam.word,
        "parts": list(fam.parts),
        "rho": fam.rho,
        "denominator": fam.denominator,
        "ratio_lower_bound": str(fam.ratio_lower_bound),
    }


def cycles_payload(n, k, limits: Limits = DEFAULT_LIMITS) -> dict:
    n_val = _require_int(n, "n", minimum=1)
    k_val = _require_int(k, "k", minimum=2)
    if k_val > limits.cycles_k_cap:
        raise GuardExceeded(f"k is {k_val}, the cap is {limits.cycles_k_cap}")
    systems = _run(cycle_solutions, n_val, k_val)
    return {
        "n": n_val,
        "k": k_val,
        "systems": [
            {
                "t": list(s.t),
                "alpha": list(s.alpha),
                "beta": list(s.beta),
                "i": [str(x) for x in s.i],
                "feasible": s.feasible,
            }
            for s in systems
        ],
    }


def artin_payload(limit, limits: Limits = DEFAULT_LIMITS) -> dict:
    limit_val = _require_int(limit, "limit", minimum=1)
    if limit_val > limits.artin_cap:
        raise GuardExceeded(f"limit is {limit_val}, the cap is {limits.artin_cap}")
    return {"limit": limit_val, "values": _run(artin_scan, limit_val)}


def circulant_payload(k, limits: Limits = DEFAULT_LIMITS) -> dict:
    k_val = _require_int(k, "k", minimum=2)
    if k_val > limits.circulant_k_cap:
        raise GuardExceeded(f"k is {k_val}, the cap is {limits.circulant_k_cap}")
    return {"k": k_val, "ok": _run(verify_circulant_inverse, k_val)}


def health_payload() -> dict:
    return {"status": "ok"}


def format_composition(composition: Sequence[int]) -> str:
    """Compositions print as "+"-joined part lengths, e.g. 2+2+2."""
    return "+".join(str(p) for p in composition)


def parse_composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p, 10) for p in text.split("+"))
    except ValueError:
        raise MalformedInput(f"expected part lengths like 2+2+2, got {text!r}") from None
    if not parts:
        raise MalformedInput("composition must not be empty")
    return parts


def parse_parts(text: str) -> list[str]:
    """Decompositions print as comma-joined parts, e.g. baa,bab."""
    parts = text.split(",")
    if any(not p for p in parts):
        raise MalformedInput(f"expected comma-joined non-empty parts, got {text!r}")
    return parts
