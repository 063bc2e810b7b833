"""Verifiers for the correlation inequalities, one per theorem family.

Each verifier computes both sides from definitions, recomputes every factor
with the brute-force routines in :mod:`posetcorr.oracle`, and refuses to
issue a verdict if the two disagree.  Sides are exact: rationals for the
linear-extension inequalities, integers or :class:`MultiPoly` values for the
P-partition ones (compared coefficientwise).

Conventions: ``e`` of the empty poset is 1 and every empty product is 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import oracle, young
from .enumeration import (DEFAULT_MAJ, MAJ_CONVENTIONS, SliceConstraint, count_linear_extensions,
                          maj_generating_function, p_partition_array)
from .genfun import (geometric_plan, order_poly, principal_specialization, profile_gf,
                     schur_poly, weight_gf)
from .poly import MultiPoly, QPow, poly_geq_coeffwise, series_inverse_product
from .poset import (Poset, _bits, build_poset, chain, ideal_check, induced_subposet,
                    linear_sum, skew_shape_poset)


class OracleMismatch(AssertionError):
    """A fast computation disagreed with its brute-force reference."""


class MajConventionError(RuntimeError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    instance: dict
    lhs: object
    rhs: object
    holds: bool
    equality: bool
    witness: object = None
    checks: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def ok(self) -> bool:
        return self.holds and all(self.checks.values())

    def to_record(self) -> dict:
        rec = {
            "theorem": self.theorem,
            "instance": self.instance,
            "lhs": _text(self.lhs),
            "rhs": _text(self.rhs),
            "verdict": self.verdict,
            "equality": self.equality,
            "witness": _plain(self.witness),
        }
        if self.checks:
            rec["checks"] = dict(self.checks)
        return rec


def _text(v) -> str:
    if isinstance(v, MultiPoly) and v.nvars == 0:
        return str(v.coefficient(()))
    return str(v)


def _plain(w):
    if w is None or isinstance(w, (int, str, bool)):
        return w
    if isinstance(w, Fraction):
        return str(w)
    if isinstance(w, dict):
        return {k: _plain(v) for k, v in w.items()}
    if isinstance(w, (tuple, list)):
        return [_plain(v) for v in w]
    return str(w)


def _agree(what: str, fast, slow):
    if fast != slow:
        raise OracleMismatch(f"{what}: fast={fast} oracle={slow}")
    return fast


def _compare(theorem, instance, lhs, rhs, checks=None) -> VerificationReport:
    """Report ``lhs >= rhs``: numerically for numbers, coefficientwise for polynomials."""
    if isinstance(lhs, MultiPoly):
        dom = poly_geq_coeffwise(lhs, rhs)
        witness = None if dom.holds else {
            "exponent": dom.witness, "lhs": dom.lhs_coeff, "rhs": dom.rhs_coeff}
        return VerificationReport(theorem, instance, lhs, rhs, dom.holds, lhs == rhs,
                                  witness, checks or {})
    holds = lhs >= rhs
    return VerificationReport(theorem, instance, lhs, rhs, holds, lhs == rhs,
                              None if holds else {"gap": lhs - rhs}, checks or {})


# -- instance descriptions ---------------------------------------------------


def describe_poset(P: Poset) -> dict:
    return {"n": P.n, "covers": [[i + 1, j + 1] for i, j in P.covers()]}


def _labels(S) -> list[int]:
    return [i + 1 for i in sorted(S)]


# -- linear extensions -------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _e_of(P: Poset, mask: int) -> int:
    sub = induced_subposet(P, _bits(mask))
    return _agree(f"e of {sorted(_bits(mask))}", count_linear_extensions(sub),
                  oracle.linear_extension_count(sub))


def rho(P: Poset, subset) -> Fraction:
    """``e(P|S) / |S|!`` for the induced subposet on ``subset``."""
    mask = P.mask(subset)
    return Fraction(_e_of(P, mask), factorial(bin(mask).count("1")))


def _require_lower(P, S, name):
    if not ideal_check(P, S, "lower"):
        raise ValueError(f"{name}={sorted(S)} is not a lower ideal")


def _require_upper(P, S, name):
    if not ideal_check(P, S, "upper"):
        raise ValueError(f"{name}={sorted(S)} is not an upper ideal")


def verify_fishburn(P: Poset, A, B) -> VerificationReport:
    A, B = set(A), set(B)
    _require_lower(P, A, "A")
    _require_lower(P, B, "B")
    lhs = rho(P, A | B) * rho(P, A & B)
    rhs = rho(P, A) * rho(P, B)
    inst = {"poset": describe_poset(P), "A": _labels(A), "B": _labels(B)}
    return _compare("fishburn", inst, lhs, rhs)


def _check_quadruple(P, A, B, C, D):
    _require_lower(P, A, "A")
    _require_lower(P, B, "B")
    _require_upper(P, C, "C")
    _require_upper(P, D, "D")
    if A & C or B & D:
        raise ValueError("need A and C disjoint and B and D disjoint")


def _pieces(P: Poset, A, B, C, D):
    """Element sets ``X-V, X-W, X-A-C, X-B-D`` for the generalized inequalities."""
    X = set(range(P.n))
    V = (A & B) | (C | D)
    W = (A | B) | (C & D)
    return X - V, X - W, X - A - C, X - B - D


def _quad_instance(P, A, B, C, D, **extra) -> dict:
    inst = {"poset": describe_poset(P), "A": _labels(A), "B": _labels(B),
            "C": _labels(C), "D": _labels(D)}
    inst.update(extra)
    return inst


def verify_generalized_fishburn(P: Poset, A, B, C, D, check_dual: bool = True) -> VerificationReport:
    """``rho(X-V) rho(X-W) >= rho(X-A-C) rho(X-B-D)``.

    With ``check_dual`` the same instance is rerun on the dual poset with
    ``(A, C)`` and ``(B, D)`` exchanged, which must give identical sides.
    """
    A, B, C, D = map(set, (A, B, C, D))
    _check_quadruple(P, A, B, C, D)
    xv, xw, xac, xbd = _pieces(P, A, B, C, D)
    lhs = rho(P, xv) * rho(P, xw)
    rhs = rho(P, xac) * rho(P, xbd)
    checks = {}
    if check_dual:
        Q, perm = build_poset(P.n, [(j, i) for i, j in P.covers()])
        img = [{perm[x] for x in S} for S in (C, D, A, B)]
        dual = verify_generalized_fishburn(Q, *img, check_dual=False)
        checks["self_duality"] = dual.lhs == lhs and dual.rhs == rhs and dual.holds == (lhs >= rhs)
    return _compare("generalized-fishburn", _quad_instance(P, A, B, C, D), lhs, rhs, checks)


# -- order polynomials ------------------------------------------------------


_ORACLE_GF = {
    "plain": lambda P, t, c=None: MultiPoly.constant(oracle.order_poly(P, t, c)),
    "q": oracle.order_poly_q,
    "multivariate-q": oracle.order_poly_bq,
}


def checked_order_poly(P: Poset, t: int, flavor: str, c: SliceConstraint | None = None) -> MultiPoly:
    fast = order_poly(P, t, flavor, c)
    return _agree(f"Omega[{flavor}] t={t}", fast, _ORACLE_GF[flavor](P, t, c))


def checked_profile(P: Poset, N: int) -> MultiPoly:
    return _agree(f"K_z N={N}", profile_gf(P, N), oracle.profile(P, N))


def _sub_gfs(P, sets, gf):
    return [gf(induced_subposet(P, S)) for S in sets]


def _unwrap(f: MultiPoly, flavor: str):
    return f.coefficient(()) if flavor == "plain" else f


def verify_op_family(P: Poset, A, B, C, D, t: int, flavor: str = "q") -> VerificationReport:
    """``Omega(X-V,t) Omega(X-W,t) >= Omega(X-A-C,t) Omega(X-B-D,t)`` in one flavor."""
    if flavor not in _ORACLE_GF:
        raise ValueError(f"unknown flavor {flavor!r}")
    A, B, C, D = map(set, (A, B, C, D))
    _check_quadruple(P, A, B, C, D)
    gv, gw, gac, gbd = _sub_gfs(P, _pieces(P, A, B, C, D),
                                lambda S: checked_order_poly(S, t, flavor))
    lhs, rhs = gv * gw, gac * gbd
    inst = _quad_instance(P, A, B, C, D, t=t, flavor=flavor)
    return _compare("op-" + flavor, inst, _unwrap(lhs, flavor), _unwrap(rhs, flavor))


def verify_op_chain(P: Poset, A, B, C, D, t: int) -> VerificationReport:
    """Multivariate check plus its specializations ``q_i <- q`` and ``q <- 1``.

    Besides the three verdicts, the specialized sides must equal the sides
    computed directly in the coarser flavors, and a finer verdict that holds
    must not be contradicted by a coarser one.
    """
    multi = verify_op_family(P, A, B, C, D, t, "multivariate-q")
    single = verify_op_family(P, A, B, C, D, t, "q")
    plain = verify_op_family(P, A, B, C, D, t, "plain")
    to_q = [QPow(1)] * multi.lhs.nvars
    checks = {
        "q_sides": multi.lhs.substitute(to_q, univariate=True) == single.lhs
                   and multi.rhs.substitute(to_q, univariate=True) == single.rhs,
        "plain_sides": single.lhs.sum_coefficients() == plain.lhs
                       and single.rhs.sum_coefficients() == plain.rhs,
        "q_verdict": single.holds or not multi.holds,
        "plain_verdict": plain.holds or not single.holds,
        "q_holds": single.holds,
        "plain_holds": plain.holds,
    }
    return VerificationReport("op-chain", multi.instance | {"flavor": "chain"}, multi.lhs, multi.rhs,
                              multi.holds, multi.equality, multi.witness, checks)


def verify_K_family(P: Poset, A, B, C, D, N: int) -> VerificationReport:
    """``K_z(X-V,N) K_z(X-W,N) >= K_z(X-A-C,N) K_z(X-B-D,N)`` over ``z_0..z_N``.

    The report also carries the ``z_i <- q^i`` specialization, which must
    reproduce the sides of the ``q``-flavored order-polynomial check.
    """
    A, B, C, D = map(set, (A, B, C, D))
    _check_quadruple(P, A, B, C, D)
    kv, kw, kac, kbd = _sub_gfs(P, _pieces(P, A, B, C, D), lambda S: checked_profile(S, N))
    lhs, rhs = kv * kw, kac * kbd
    q_report = verify_op_family(P, A, B, C, D, N, "q")
    plan = geometric_plan(N + 1)
    checks = {
        "specialization": lhs.substitute(plan, univariate=True) == q_report.lhs
                          and rhs.substitute(plan, univariate=True) == q_report.rhs,
        "q_verdict": q_report.holds,
    }
    return _compare("op-K", _quad_instance(P, A, B, C, D, N=N), lhs, rhs, checks)


# -- Schur polynomials -------------------------------------------------------


def _as_skew(shape) -> young.SkewShape:
    return shape if isinstance(shape, young.SkewShape) else young.skew(shape)


def checked_schur(shape, N: int) -> MultiPoly:
    return _agree(f"s_{shape} N={N}", schur_poly(shape, N), oracle.schur(shape, N))


def verify_lp_schur(first, second, N: int) -> VerificationReport:
    """``s_{a v b} s_{a ^ b} >= s_a s_b`` for skew shapes ``a, b`` in ``N`` variables."""
    a, b = _as_skew(first), _as_skew(second)
    if N < max(len(a.outer), len(b.outer)):
        raise ValueError(f"N={N} is smaller than the number of rows")
    hi, lo = young.join(a, b), young.meet(a, b)
    lhs = checked_schur(hi, N) * checked_schur(lo, N)
    rhs = checked_schur(a, N) * checked_schur(b, N)
    inst = {"first": young.format_skew(a), "second": young.format_skew(b), "N": N}
    return _compare("lp-schur", inst, lhs, rhs)


def verify_lp_rpp_q(mu, nu, D: int) -> VerificationReport:
    """Truncated ``Omega_q(mu v nu) Omega_q(mu ^ nu) >= Omega_q(mu) Omega_q(nu)``.

    Both sides are taken up to degree ``D`` with unbounded entries, and the
    specialization ``s_lam(q, q^2, ...) = Omega_q(lam) q^n(lam)`` is checked
    against Schur polynomials in ``D`` variables with ``z_i <- q^i``.
    """
    mu, nu = young.partition(mu), young.partition(nu)
    hi, lo = young.join(mu, nu), young.meet(mu, nu)

    def omega_q(lam):
        return weight_gf(p_partition_array(skew_shape_poset(lam), D)).truncate(D)

    lhs = (omega_q(hi) * omega_q(lo)).truncate(D)
    rhs = (omega_q(mu) * omega_q(nu)).truncate(D)
    spec_ok = True
    for lam in {hi, lo, mu, nu}:
        direct = principal_specialization(lam, D)
        if D >= 1 and young.size(lam) <= D:
            via_schur = schur_poly(lam, D).substitute(geometric_plan(D, 1)).truncate(D)
        else:
            via_schur = direct
        spec_ok &= direct == via_schur == omega_q(lam).shift((young.nstat(lam),)).truncate(D)
    inst = {"mu": young.format_partition(mu), "nu": young.format_partition(nu), "D": D}
    return _compare("lp-rpp-q", inst, lhs, rhs, {"principal_specialization": spec_ok})


# -- DDP ---------------------------------------------------------------------


def ddp_slices(P: Poset, z: int, t: int, flavor: str) -> list:
    """``Omega(P,t; z,v)`` for ``v = 0..t`` in the given flavor."""
    return [checked_order_poly(P, t, flavor, SliceConstraint.fix(z, v)) for v in range(t + 1)]


def verify_ddp_family(P: Poset, z: int, t: int, k: int, a: int, b: int,
                      flavor: str = "plain") -> VerificationReport:
    """``Omega(z,k+a) Omega(z,k+b) >= Omega(z,k) Omega(z,k+a+b)`` for slices ``A(z) = v``."""
    if not 0 <= z < P.n:
        raise ValueError(f"element {z} out of range")
    if k < 0 or a < 1 or b < 1 or k + a + b > t:
        raise ValueError("need k >= 0, a, b >= 1 and k + a + b <= t")
    if flavor not in _ORACLE_GF:
        raise ValueError(f"unknown flavor {flavor!r}")
    sl = {v: checked_order_poly(P, t, flavor, SliceConstraint.fix(z, v)) for v in {k, k + a, k + b, k + a + b}}
    lhs = sl[k + a] * sl[k + b]
    rhs = sl[k] * sl[k + a + b]
    inst = {"poset": describe_poset(P), "z": z + 1, "t": t, "k": k, "a": a, "b": b, "flavor": flavor}
    return _compare("ddp-" + flavor, inst, _unwrap(lhs, flavor), _unwrap(rhs, flavor))


def verify_log_concavity(P: Poset, t: int, a: int = 1, b: int = 1) -> VerificationReport:
    """``Omega_q(P,t+a) Omega_q(P,t+b) >= Omega_q(P,t) Omega_q(P,t+a+b)`` via ``P + top``.

    Adds a new maximum ``z`` (variable ``q_{n+1}``), checks that each slice
    ``A(z) = l`` of the extended poset equals ``Omega_q(P,l) q_{n+1}^l``,
    and runs the DDP check on the extended poset.
    """
    n = P.n
    ext = linear_sum(P, chain(1))
    base = induced_subposet(ext, range(n))
    T = t + a + b
    levels = (t, t + a, t + b, t + a + b)
    top = [0] * n + [1]
    subs_ok = True
    omega = {}
    for l in levels:
        omega[l] = checked_order_poly(base, l, "multivariate-q")
        sliced = checked_order_poly(ext, T, "multivariate-q", SliceConstraint.fix(n, l))
        subs_ok &= sliced == omega[l].shift([l * e for e in top])
    lhs = omega[t + a] * omega[t + b]
    rhs = omega[t] * omega[t + a + b]
    ddp = verify_ddp_family(ext, n, T, t, a, b, "multivariate-q")
    checks = {"slice_identity": subs_ok, "ddp_on_extension": ddp.holds}
    inst = {"poset": describe_poset(P), "t": t, "a": a, "b": b}
    return _compare("log-concave", inst, lhs, rhs, checks)


# -- cross product -----------------------------------------------------------


def verify_cross_product(P: Poset, x: int, y: int, z: int, t: int, k: int, l: int,
                         flavor: str = "plain") -> VerificationReport:
    """``Lam(k,l+1) Lam(k+1,l) >= Lam(k,l) Lam(k+1,l+1)`` for gap slices."""
    if len({x, y, z}) != 3:
        raise ValueError("x, y, z must be distinct")
    if k < 0 or l < 0:
        raise ValueError("need k, l >= 0")
    if flavor not in _ORACLE_GF:
        raise ValueError(f"unknown flavor {flavor!r}")

    def lam(dk, dl):
        return checked_order_poly(P, t, flavor, SliceConstraint.gaps(x, y, z, k + dk, l + dl))

    lhs = lam(0, 1) * lam(1, 0)
    rhs = lam(0, 0) * lam(1, 1)
    inst = {"poset": describe_poset(P), "x": x + 1, "y": y + 1, "z": z + 1,
            "t": t, "k": k, "l": l, "flavor": flavor}
    return _compare("cross-product-" + flavor, inst, _unwrap(lhs, flavor), _unwrap(rhs, flavor))


# -- Stanley's identity ------------------------------------------------------


def verify_stanley_identity(P: Poset, t: int, convention: str = DEFAULT_MAJ) -> VerificationReport:
    """Degree-``<= t`` part of ``Omega_q(P,t)`` against ``sum q^maj / prod (1-q^i)``."""
    lhs = checked_order_poly(P, t, "q").truncate(t)
    maj = MultiPoly.univariate(maj_generating_function(P, convention))
    _agree("maj polynomial", maj, oracle.maj_polynomial(P, convention))
    rhs = (MultiPoly.univariate(series_inverse_product(P.n, t)) * maj).truncate(t)
    inst = {"poset": describe_poset(P), "t": t, "convention": convention}
    holds = lhs == rhs
    witness = None
    if not holds:
        diff = [d for d in range(t + 1) if lhs.coefficient((d,)) != rhs.coefficient((d,))]
        witness = {"degree": diff[0], "lhs": lhs.coefficient((diff[0],)), "rhs": rhs.coefficient((diff[0],))}
    return VerificationReport("stanley-identity", inst, lhs, rhs, holds, holds, witness)


def calibrate_maj_convention(posets: Sequence[Poset], max_t: int) -> str:
    """The first descent convention under which the identity holds everywhere.

    Raises :class:`MajConventionError` when no convention passes.
    """
    for conv in MAJ_CONVENTIONS:
        if all(verify_stanley_identity(P, t, conv).holds for P in posets for t in range(max_t + 1)):
            return conv
    raise MajConventionError("no descent convention satisfies the identity on the given posets")
