"""Closed-form rainbow numbers, composed exactly as the theorems prescribe.

rb(Z_p, 1) for primes, the factorization formula for rb(Z_n, 1), rb(Z_q, p)
for distinct primes via multiplicative orders, rb(Z_{p^a}, p) for odd p, and
the general recursion for rb(Z_n, p). The k = 2 power-of-two cases are not
covered by these formulas; they come from an injected value table or, for
small exponents, from the search oracle.
"""
from __future__ import annotations

import json
from typing import Mapping, Optional

from .errors import ConfigError, InputError, UnsupportedCaseError
from .modcore import is_prime, multiplicative_order, prime_factorize
from .results import Method, RbResult

#: Largest exponent for which rb(Z_{2^a}, 2) may fall back to the oracle.
TWO_POWER_ORACLE_MAX_ALPHA = 4


def rb_schur_prime(p: int) -> RbResult:
    """rb(Z_p, 1): 3 for p in {2, 3}, 4 for every prime p >= 5."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    value = 3 if p in (2, 3) else 4
    return RbResult(value=value, method=Method.SCHUR_PRIME, detail={"p": p})


def rb_schur(n: int) -> RbResult:
    """rb(Z_n, 1) = 2 + sum of alpha_i * (rb(Z_{p_i}, 1) - 2) over the factorization."""
    if n < 2:
        raise InputError(f"rb(Z_n, 1) formula requires n >= 2, got {n}")
    terms = []
    value = 2
    for p, alpha in prime_factorize(n):
        rb_p = rb_schur_prime(p).value
        contribution = alpha * (rb_p - 2)
        value += contribution
        terms.append({"p": p, "alpha": alpha, "rb_p": rb_p, "contribution": contribution})
    return RbResult(
        value=value,
        method=Method.SCHUR_FACTORIZATION,
        detail={"base": 2, "terms": terms},
    )


def rb_q_p(q: int, p: int) -> RbResult:
    """rb(Z_q, p) for distinct primes: 3 iff p generates Z_q^* or the order of
    p is (q-1)/2 with (q-1)/2 odd; otherwise 4."""
    if not is_prime(q) or not is_prime(p):
        raise InputError(f"both arguments must be prime, got q={q}, p={p}")
    if q == p:
        raise InputError("q and p must be distinct primes")
    a = p % q  # the conditions live in Z_q^*
    order = multiplicative_order(a, q)
    half = (q - 1) // 2
    generator = order == q - 1
    half_odd = order == half and half % 2 == 1
    value = 3 if (generator or half_odd) else 4
    return RbResult(
        value=value,
        method=Method.Q_P,
        detail={
            "q": q,
            "p": p,
            "order": order,
            "generates_full_group": generator,
            "half_order_odd": half_odd,
        },
    )


def rb_prime_power(p: int, alpha: int) -> RbResult:
    """rb(Z_{p^alpha}, p) for odd primes.

    3 for (p, alpha) = (3, 1); 4 for p = 3, alpha >= 2; (p+1)/2 + 1 for p >= 5.
    """
    if p == 2:
        raise UnsupportedCaseError(
            "rb(Z_{2^a}, 2) is outside the closed forms; supply a value table "
            "or use the oracle fallback"
        )
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if alpha < 1:
        raise InputError(f"alpha must be >= 1, got {alpha}")
    if p == 3:
        value = 3 if alpha == 1 else 4
    else:
        value = (p + 1) // 2 + 1
    return RbResult(
        value=value, method=Method.PRIME_POWER, detail={"p": p, "alpha": alpha}
    )


def load_two_power_table(path) -> dict[int, int]:
    """Load a JSON map alpha -> rb(Z_{2^alpha}, 2), validating every entry."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read value table {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("value table must be a JSON object mapping alpha to rb")
    table: dict[int, int] = {}
    for key, value in raw.items():
        try:
            alpha = int(key)
        except ValueError:
            raise ConfigError(f"non-integer exponent key {key!r} in value table")
        if not isinstance(value, int) or not 2 <= value <= 2**alpha + 1:
            raise ConfigError(
                f"table entry alpha={alpha} must be an integer in [2, {2**alpha + 1}], got {value!r}"
            )
        table[alpha] = value
    return table


def _rb_two_power(alpha: int, table: Optional[Mapping[int, int]]) -> int:
    if table is not None and alpha in table:
        return table[alpha]
    if alpha <= TWO_POWER_ORACLE_MAX_ALPHA:
        from .modcore import CyclicInstance
        from .search import SearchConfig, rb_oracle

        result = rb_oracle(CyclicInstance(2**alpha, 2), SearchConfig(time_budget=120.0))
        if not result.conclusive:
            raise ConfigError(f"oracle fallback for rb(Z_{2**alpha}, 2) ran out of budget")
        return result.value
    raise ConfigError(
        f"rb(Z_{{2^{alpha}}}, 2) requires an injected value table "
        f"(oracle fallback stops at alpha={TWO_POWER_ORACLE_MAX_ALPHA})"
    )


def rb_general(
    n: int, p: int, two_power_table: Optional[Mapping[int, int]] = None
) -> RbResult:
    """rb(Z_n, p) for prime p via the recursion over n = p^alpha * prod q_i^{alpha_i}:

    rb(Z_{p^alpha}, p) + sum of alpha_i * (rb(Z_{q_i}, p) - 2), with the
    alpha = 0 base taken as 2.
    """
    if not is_prime(p):
        raise InputError(f"coefficient {p} is not prime")
    if n < 2:
        raise InputError(f"rb(Z_n, p) formula requires n >= 2, got {n}")
    alpha = 0
    terms = []
    value = 0
    for prime, exp in prime_factorize(n):
        if prime == p:
            alpha = exp
        else:
            rb_q = rb_q_p(prime, p).value
            contribution = exp * (rb_q - 2)
            value += contribution
            terms.append(
                {"q": prime, "alpha": exp, "rb_q_p": rb_q, "contribution": contribution}
            )
    if alpha == 0:
        base = 2
    elif p == 2:
        base = _rb_two_power(alpha, two_power_table)
    else:
        base = rb_prime_power(p, alpha).value
    return RbResult(
        value=base + value,
        method=Method.GENERAL_RECURSION,
        detail={"p": p, "alpha": alpha, "base": base, "terms": terms},
    )
