"""Constructors for the group families used throughout the verification suite.

Everything returns a plain :class:`~schurlab.core.GroupTable`; the interesting
constructions are the Heisenberg groups over Z/q and central products of them
amalgamated along their cyclic centers, which realize the equality cases of
the central-quotient bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core
from .core import GroupTable, max_order_cap
from .errors import (
    BadVariant,
    CapExceeded,
    NotCentral,
    NotPrimePower,
    OrderMismatch,
    SchurlabError,
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters, as used by the CLI ``construct`` command."""

    family: str
    params: tuple = ()


def _check_cap(order: int, cap: int | None) -> int:
    limit = cap if cap is not None else max_order_cap()
    if order > limit:
        raise CapExceeded(f"requested group of order {order} exceeds cap {limit}")
    return limit


def cyclic(n: int, cap: int | None = None) -> GroupTable:
    """Cyclic group of order n, written additively."""
    if n < 1:
        raise SchurlabError("cyclic order must be >= 1")
    _check_cap(n, cap)
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return GroupTable(table, labels=[str(i) for i in range(n)], identity=0)


def abelian(factors: list[int], cap: int | None = None) -> GroupTable:
    """Direct product of cyclic groups C_{f1} x ... x C_{fk}."""
    if not factors:
        return cyclic(1, cap)
    for f in factors:
        if f < 1:
            raise SchurlabError("abelian factors must be >= 1")
    order = math.prod(factors)
    _check_cap(order, cap)
    digits = _mixed_radix_digits(order, factors)
    table = np.zeros((order, order), dtype=np.int64)
    stride = order
    for k, f in enumerate(factors):
        stride //= f
        d = digits[:, k]
        table += stride * ((d[:, None] + d[None, :]) % f)
    labels = ["(" + ",".join(str(v) for v in row) + ")" for row in digits]
    return GroupTable(table.astype(np.int32), labels=labels, identity=0)


def _mixed_radix_digits(order: int, factors: list[int]) -> np.ndarray:
    digits = np.zeros((order, len(factors)), dtype=np.int64)
    rem = np.arange(order)
    for k in range(len(factors) - 1, -1, -1):
        rem, digits[:, k] = np.divmod(rem, factors[k])
    return digits


def dihedral(two_n: int, cap: int | None = None) -> GroupTable:
    """Dihedral group of order ``two_n`` (rotations r, reflections r^i s)."""
    if two_n < 4 or two_n % 2 != 0:
        raise SchurlabError("dihedral order must be an even integer >= 4")
    _check_cap(two_n, cap)
    n = two_n // 2
    rot = np.arange(two_n) % n
    flip = np.arange(two_n) // n
    sign = 1 - 2 * flip
    r = (rot[:, None] + sign[:, None] * rot[None, :]) % n
    f = (flip[:, None] + flip[None, :]) % 2
    table = (f * n + r).astype(np.int32)
    labels = [_power_label("r", i) for i in range(n)]
    labels += ["s" if i == 0 else _power_label("r", i) + "s" for i in range(n)]
    return GroupTable(table, labels=labels, identity=0)


def quaternion(four_n: int, cap: int | None = None) -> GroupTable:
    """Generalized quaternion group of order ``four_n`` (a^{2m}=1, b^2=a^m, bab^-1=a^-1)."""
    if four_n < 8 or four_n % 4 != 0:
        raise SchurlabError("quaternion order must be a multiple of 4, at least 8")
    _check_cap(four_n, cap)
    m = four_n // 4
    two_m = 2 * m
    rot = np.arange(four_n) % two_m
    flip = np.arange(four_n) // two_m
    sign = 1 - 2 * flip
    r = (rot[:, None] + sign[:, None] * rot[None, :] + m * (flip[:, None] & flip[None, :])) % two_m
    f = (flip[:, None] + flip[None, :]) % 2
    table = (f * two_m + r).astype(np.int32)
    labels = [_power_label("a", i) for i in range(two_m)]
    labels += [(_power_label("a", i) + "b") if i else "b" for i in range(two_m)]
    return GroupTable(table, labels=labels, identity=0)


def _power_label(sym: str, i: int) -> str:
    if i == 0:
        return "e"
    if i == 1:
        return sym
    return f"{sym}{i}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _prime_power(q: int) -> int:
    """Return the prime base of q, or raise NotPrimePower."""
    base = core._prime_power_base(q)
    if base is None:
        raise NotPrimePower(f"{q} is not a prime power >= 2")
    return base


def heisenberg(q: int, cap: int | None = None) -> GroupTable:
    """Upper unitriangular 3x3 matrices over Z/q: order q^3, center = gamma_2 cyclic of order q.

    Elements are labeled by their matrix triples (a, b, c), with
    (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
    """
    _prime_power(q)
    order = q ** 3
    _check_cap(order, cap)
    idx = np.arange(order)
    a, rest = np.divmod(idx, q * q)
    b, cc = np.divmod(rest, q)
    a2 = (a[:, None] + a[None, :]) % q
    b2 = (b[:, None] + b[None, :]) % q
    c2 = (cc[:, None] + cc[None, :] + a[:, None] * b[None, :]) % q
    table = (a2 * q * q + b2 * q + c2).astype(np.int32)
    labels = [f"({a[i]},{b[i]},{cc[i]})" for i in range(order)]
    return GroupTable(table, labels=labels, identity=0)


def _modular_p3(p: int, cap: int | None = None) -> GroupTable:
    """Extraspecial group of order p^3 and exponent p^2 (a^{p^2}=1, bab^-1=a^{1+p})."""
    order = p ** 3
    _check_cap(order, cap)
    p2 = p * p
    i = np.arange(order) // p   # exponent of a
    j = np.arange(order) % p    # exponent of b
    twist = np.array([pow(1 + p, int(e), p2) for e in range(p)], dtype=np.int64)
    ii = (i[:, None] + i[None, :] * twist[j][:, None]) % p2
    jj = (j[:, None] + j[None, :]) % p
    table = (ii * p + jj).astype(np.int32)
    labels = [f"a{int(i[k])}b{int(j[k])}" for k in range(order)]
    return GroupTable(table, labels=labels, identity=0)


def direct_product(A: GroupTable, B: GroupTable, cap: int | None = None) -> GroupTable:
    """Componentwise product table on pairs (a, b) -> a*|B| + b."""
    order = A.order * B.order
    _check_cap(order, cap)
    nb = B.order
    table = (A.mult.astype(np.int64)[:, None, :, None] * nb + B.mult[None, :, None, :]).reshape(order, order)
    labels = None
    if A.order > 1 or B.order > 1:
        labels = [f"({A.label(x)}|{B.label(y)})" for x in range(A.order) for y in range(B.order)]
    return GroupTable(table.astype(np.int32), labels=labels, identity=0)


def central_product(
    factors: list[GroupTable],
    amalgam_gens: list[int],
    exponents: list[int] | None = None,
    cap: int | None = None,
) -> GroupTable:
    """Central product of ``factors`` with the cyclic subgroups ``<amalgam_gens[i]>`` identified.

    The identification sends ``amalgam_gens[i] ** exponents[i]`` of each
    factor to one fixed generator of the common subgroup X; exponents must be
    units mod |X| (default: all 1).  The result is ``(G_1 x ... x G_m)/N``
    where N is the kernel of the combined identification, of order
    ``prod |G_i| / |X|^{m-1}``.

    The full direct product is materialized before quotienting, so it must
    fit under the order cap as well, not just the result.
    """
    if not factors:
        raise SchurlabError("central product needs at least one factor")
    if len(amalgam_gens) != len(factors):
        raise SchurlabError("one amalgamation generator is required per factor")
    m = len(factors)
    orders_x = []
    for G, g in zip(factors, amalgam_gens):
        if not (0 <= g < G.order):
            raise SchurlabError(f"amalgam generator {g} out of range")
        if not core.center(G).contains(g):
            raise NotCentral(f"element {G.label(g)} is not central in its factor")
        orders_x.append(int(core.element_orders(G)[g]))
    x_order = orders_x[0]
    if any(o != x_order for o in orders_x):
        raise OrderMismatch(f"amalgamated subgroups have orders {orders_x}")
    if exponents is None:
        exponents = [1] * m
    if len(exponents) != m:
        raise SchurlabError("one identification exponent is required per factor")
    for u in exponents:
        if math.gcd(u, x_order) != 1:
            raise OrderMismatch(f"exponent {u} is not a unit mod {x_order}; identification is not an isomorphism")

    product_order = math.prod(G.order for G in factors)
    result_order = product_order // x_order ** (m - 1)
    limit = _check_cap(result_order, cap)
    if product_order > limit:
        raise CapExceeded(
            f"intermediate direct product of order {product_order} exceeds cap {limit}")

    prod = factors[0]
    for G in factors[1:]:
        prod = direct_product(prod, G, cap=limit)

    # N = all tuples (x_1, ..., x_m) in X_1 x ... x X_m whose identified images
    # multiply to the identity: sum k_i * u_i = 0 mod |X|.
    strides = []
    s = prod.order
    for G in factors:
        s //= G.order
        strides.append(s)
    kernel_elems = []
    for combo in _exponent_tuples(x_order, m):
        if sum(k * u for k, u in zip(combo, exponents)) % x_order != 0:
            continue
        elem = 0
        for k, g, G, stride in zip(combo, amalgam_gens, factors, strides):
            elem += _power(G, g, k) * stride
        kernel_elems.append(elem)
    kernel = core.closure(prod, sorted(kernel_elems))
    if kernel.size != x_order ** (m - 1):
        raise SchurlabError("amalgamation kernel has unexpected order")
    qmap = core.quotient(prod, kernel)
    result = qmap.quotient
    if result.order != result_order:
        raise SchurlabError("central product order formula violated")
    return result


def _exponent_tuples(q: int, m: int):
    combo = [0] * m
    while True:
        yield tuple(combo)
        for i in range(m - 1, -1, -1):
            combo[i] += 1
            if combo[i] < q:
                break
            combo[i] = 0
        else:
            return


def _power(G: GroupTable, g: int, k: int) -> int:
    out = G.identity
    for _ in range(k):
        out = int(G.mult[out, g])
    return out


def extraspecial(p: int, m: int, variant: str = "", cap: int | None = None) -> GroupTable:
    """Extraspecial p-group of order p^{2m+1} as a central product of order-p^3 factors.

    For p = 2 the variant is a string of D/Q letters of length m (factor
    types dihedral or quaternion); for odd p it is ``exponent-p`` or
    ``exponent-p2`` (all factors alike).
    """
    if not _is_prime(p):
        raise NotPrimePower(f"{p} is not prime")
    if m < 1:
        raise SchurlabError("extraspecial needs m >= 1")
    _check_cap(p ** (2 * m + 1), cap)
    if p == 2:
        letters = variant.upper() or "D" * m
        if len(letters) != m or set(letters) - {"D", "Q"}:
            raise BadVariant(f"p=2 variant must be a D/Q string of length {m}, got {variant!r}")
        parts = [dihedral(8) if ch == "D" else quaternion(8) for ch in letters]
        # center of both D8 and Q8 is {e, r^2} resp. {1, a^2}: element index 2
        gens = [2] * m
    else:
        token = variant or "exponent-p"
        if token == "exponent-p":
            parts = [heisenberg(p) for _ in range(m)]
            gens = [1] * m  # (0,0,1) generates the center
        elif token in ("exponent-p2", "exponent-p^2"):
            parts = [_modular_p3(p) for _ in range(m)]
            gens = [p * p] * m  # a^p generates the center
        else:
            raise BadVariant(f"odd-p variant must be exponent-p or exponent-p2, got {variant!r}")
    if m == 1:
        return parts[0]
    return central_product(parts, gens, cap=cap)


def y_group(m: int, q: int, cap: int | None = None) -> GroupTable:
    """Central product of m Heisenberg groups over Z/q amalgamated at their centers.

    Has order q^{2m+1}, central quotient of order q^{2m}, cyclic commutator
    subgroup of order q, and minimal generating number 2m.
    """
    if m < 1:
        raise SchurlabError("y_group needs m >= 1")
    _prime_power(q)
    _check_cap(q ** (2 * m + 1), cap)
    parts = [heisenberg(q) for _ in range(m)]
    if m == 1:
        return parts[0]
    return central_product(parts, [1] * m, cap=cap)


_FAMILY_ARITY = {
    "cyclic": "n",
    "abelian": "list",
    "dihedral": "n",
    "quaternion": "n",
    "heisenberg": "n",
    "extraspecial": "p m [variant]",
    "central_product": "unsupported from specs",
    "y_group": "m q",
    "direct_product": "family composition",
}


def build_family(spec: FamilySpec, cap: int | None = None) -> GroupTable:
    """Construct a group from a :class:`FamilySpec` (CLI entry point)."""
    fam = spec.family
    params = list(spec.params)
    try:
        if fam == "cyclic":
            (n,) = params
            return cyclic(int(n), cap)
        if fam == "abelian":
            return abelian([int(x) for x in params], cap)
        if fam == "dihedral":
            (n,) = params
            return dihedral(int(n), cap)
        if fam == "quaternion":
            (n,) = params
            return quaternion(int(n), cap)
        if fam == "heisenberg":
            (q,) = params
            return heisenberg(int(q), cap)
        if fam == "extraspecial":
            if len(params) == 2:
                p, m = params
                return extraspecial(int(p), int(m), "", cap)
            p, m, variant = params
            return extraspecial(int(p), int(m), str(variant), cap)
        if fam == "y_group":
            m, q = params
            return y_group(int(m), int(q), cap)
    except ValueError as exc:
        raise SchurlabError(f"bad parameters {params} for family {fam}: {exc}") from exc
    known = ", ".join(sorted(k for k in _FAMILY_ARITY if k not in ("central_product", "direct_product")))
    raise SchurlabError(f"unknown family {fam!r}; constructible families: {known}")
