"""Closed-form gamma, tau and domination values for named graph families.

All arithmetic is exact integer arithmetic.  Vertex ``v`` in the formulas
below is the 1-based label; reports index ``dv`` 0-based like the solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import FamilySpec, FamilySpecError


class FormulaError(ArithmeticError):
    """A closed form produced an impossible value (e.g. an odd half)."""


@dataclass(frozen=True)
class FamilyReport:
    spec: FamilySpec
    gamma: int
    tau: int
    dv: tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.dv):
            raise FormulaError(f"{self.spec}: negative domination value")
        if sum(self.dv) != self.tau * self.gamma:
            raise FormulaError(f"{self.spec}: sum of dv != tau * gamma")

    def to_dict(self) -> dict:
        return {"family": str(self.spec), "gamma": self.gamma, "tau": self.tau, "dv": list(self.dv)}


def _half(x: int) -> int:
    if x % 2:
        raise FormulaError(f"expected an even quantity, got {x}")
    return x // 2


def _ceil3(n: int) -> int:
    return -(-n // 3)


def cycle_report(n: int) -> FamilyReport:
    spec = FamilySpec.cycle(n)
    k, r = divmod(n, 3)
    c = _ceil3(n)
    if r == 0:
        tau, dv = 3, 1
    elif r == 1:
        tau, dv = _half(n * (2 + k)), _half(c * (1 + c))
    else:
        tau, dv = n, c
    return FamilyReport(spec, c, tau, (dv,) * n)


def _path_dv_3k(k: int, v: int) -> int:
    return 1 if v % 3 == 2 else 0


def _path_dv_3k1(k: int, v: int) -> int:
    q, r = divmod(v, 3)
    if r == 0:
        return _half(q * (q + 3))
    if r == 1:
        return (q + 1) * (k - q + 1)
    return _half((k - q) * (k - q + 3))


def _path_dv_3k2(k: int, v: int) -> int:
    q, r = divmod(v, 3)
    if r == 0:
        return 0
    if r == 1:
        return 1 + q
    return k + 1 - q


def path_report(n: int) -> FamilyReport:
    spec = FamilySpec.path(n)
    k, r = divmod(n, 3)
    if r == 0:
        tau, dv_at = 1, _path_dv_3k
    elif r == 1:
        tau = n + _half(k * (k - 1))
        if tau != _half(k * k + 5 * k + 2):
            raise FormulaError(f"path {n}: the two tau expressions disagree")
        dv_at = _path_dv_3k1
    else:
        tau, dv_at = 2 + k, _path_dv_3k2
    dv = tuple(dv_at(k, v) for v in range(1, n + 1))
    return FamilyReport(spec, _ceil3(n), tau, dv)


def multipartite_report_paper(parts) -> FamilyReport:
    """Published complete multipartite formulas, applied as stated.

    With every part of size >= 2 this gives ``dv = deg(v)``; it does not
    count a part of size exactly 2 as a dominating pair, so it undercounts
    for such graphs (K_{2,2}: tau 4 instead of 6).  See
    :func:`multipartite_report_corrected`.
    """
    spec = FamilySpec.multipartite(parts)
    parts = spec.params
    total = sum(parts)
    singles = sum(1 for a in parts if a == 1)
    if singles:
        dv = tuple(1 if a == 1 else 0 for a in parts for _ in range(a))
        return FamilyReport(spec, 1, singles, dv)
    tau = _half(total * total - sum(a * a for a in parts))
    dv = tuple(total - a for a in parts for _ in range(a))
    return FamilyReport(spec, 2, tau, dv)


def multipartite_report_corrected(parts) -> FamilyReport:
    """Complete multipartite graph with every part of size >= 2.

    Minimum dominating sets are the cross pairs plus every part of size
    exactly 2 on its own.
    """
    spec = FamilySpec.multipartite(parts)
    parts = spec.params
    if any(a < 2 for a in parts):
        raise FamilySpecError("corrected multipartite formula needs all parts of size >= 2")
    total = sum(parts)
    pairs = sum(1 for a in parts if a == 2)
    tau = _half(total * total - sum(a * a for a in parts)) + pairs
    dv = tuple(total - a + (a == 2) for a in parts for _ in range(a))
    return FamilyReport(spec, 2, tau, dv)


def complete_report(n: int) -> FamilyReport:
    return FamilyReport(FamilySpec.complete(n), 1, n, (1,) * n)


def matching_report(m: int) -> FamilyReport:
    # one endpoint per edge, independently
    return FamilyReport(FamilySpec.matching(m), m, 2**m, (2 ** (m - 1),) * (2 * m))


def petersen_report() -> FamilyReport:
    gamma, dv = 3, (3,) * 10
    return FamilyReport(FamilySpec.petersen(), gamma, sum(dv) // gamma, dv)


def matching_complement_identity(m: int) -> tuple[int, int, int]:
    """``(dv in mK2, dv in its complement, sum)``; the same for every vertex."""
    if m < 2:
        raise FamilySpecError(f"matching complement identity needs m >= 2, got {m}")
    n = 2 * m
    dv_g = 2 ** (m - 1)
    dv_gbar = n - 1
    total = dv_g + dv_gbar
    if total != n - 1 + 2 ** (n // 2 - 1):
        raise FormulaError("matching complement identity failed")
    return dv_g, dv_gbar, total


def family_report(spec: FamilySpec) -> FamilyReport:
    """Closed form for any family; multipartite uses the corrected formula
    when every part has size >= 2 and the published one otherwise."""
    k, p = spec.kind, spec.params
    if k == "path":
        return path_report(p[0])
    if k == "cycle":
        return cycle_report(p[0])
    if k == "complete":
        return complete_report(p[0])
    if k == "matching":
        return matching_report(p[0])
    if k == "petersen":
        return petersen_report()
    if min(p) >= 2:
        return multipartite_report_corrected(p)
    return multipartite_report_paper(p)
