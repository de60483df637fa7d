"""Property suites that recompute every identity the construction relies on.

Each suite returns a :class:`SuiteReport`: a flat list of checks, each
naming the identity, the construction it belongs to, its parameters and
whether it held exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from . import blocks
from .canonical import NilpotentPartition, partitions
from .errors import ExceptionalCase, NilfactorError, SquareZero
from .factorizer import Route, factor, factor_case_general, factor_case_zero_block
from .field import GF, QQ, Field
from .lu import lu_similarity
from .matrix import Matrix, block_diag, jordan_block, matrix_unit
from .roth import block_diagonalizes, solve_roth_e11case, solve_roth_j2case, solve_sylvester_generic
from .sampling import random_invertible, random_matrix, random_singular, random_structured_singular, rng_for
from .sourour import sourour_form

SUITES = ("lemma1", "lemma2", "sourour", "theorem", "roth")


@dataclass(frozen=True)
class Check:
    identity: str
    anchor: str
    params: dict
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "anchor": self.anchor,
            "params": self.params,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list = dc_field(default_factory=list)

    def add(self, identity: str, anchor: str, passed: bool, detail: str = "", **params):
        self.checks.append(Check(identity, anchor, params, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }


def _fields(fields: Optional[Sequence[Field]], default: Sequence[Field]) -> list:
    return list(default if fields is None else fields)


# -- pair and block constructions -----------------------------------------


def lemma1_suite(max_k: int = 11, fields: Optional[Sequence[Field]] = None) -> SuiteReport:
    """The ``Dg[J_k, J_2]`` pairs and the two chain similarities for odd k."""
    report = SuiteReport("lemma1")
    for f in _fields(fields, (QQ, GF(2))):
        for k in range(1, max_k + 1):
            N1, N2 = blocks.factor_jk_j2(k, f)
            target = block_diag(jordan_block(f, k), jordan_block(f, 2))
            anchor = "J1+J2 unit pair" if k == 1 else ("odd-k pair" if k % 2 else "even-k pair")
            p = {"k": k, "field": str(f)}
            report.add("N1 N2 = Dg[J_k(0), J_2(0)]", anchor, N1 @ N2 == target, **p)
            report.add("N1, N2 nilpotent", anchor, N1.is_nilpotent() and N2.is_nilpotent(), **p)
            if k % 2 == 0:
                continue
            r1, r2 = N1.rank(), N2.rank()
            report.add("rank N1 = rank N2 = k", anchor, r1 == r2 == k, f"ranks {r1}, {r2}", **p)
            if k < 3:
                continue
            a, b = blocks.q1_block_sizes(k)
            Q1 = blocks.q1_matrix(k, f)
            ok = N1.conjugate(Q1) == block_diag(jordan_block(f, a), jordan_block(f, b))
            report.add(f"Q1^-1 N1 Q1 = Dg[J_{a}, J_{b}]", "left-factor chain similarity", ok, **p)
            c, d = blocks.q2_block_sizes(k)
            Q2 = blocks.q2_matrix(k, f)
            ok = N2.conjugate(Q2) == block_diag(jordan_block(f, c), jordan_block(f, d))
            report.add(f"Q2^-1 N2 Q2 = Dg[J_{c}, J_{d}]", "right-factor chain similarity", ok, **p)
    return report


def lemma2_suite(max_n: int = 12, fields: Optional[Sequence[Field]] = None) -> SuiteReport:
    """Normal-form factorization for every partition of n in {1, 3, ..., max_n}."""
    report = SuiteReport("lemma2")
    for f in _fields(fields, (QQ, GF(2))):
        for n in [1] + list(range(3, max_n + 1)):
            for sizes in partitions(n):
                nf = blocks.factor_nilpotent_normal_form(NilpotentPartition(sizes), f)
                bad = nf.violations()
                report.add(
                    "normal form (product, nilpotency, zero first row, zero last column, last row 0 or e1^T)",
                    "nilpotent normal form",
                    not bad,
                    "; ".join(bad),
                    partition=list(sizes),
                    field=str(f),
                    last_row=nf.right_last_row.value,
                )
        try:
            blocks.factor_nilpotent_normal_form(NilpotentPartition((2,)), f)
            raised = False
        except ExceptionalCase:
            raised = True
        report.add("partition [2] is rejected", "2x2 exception", raised, partition=[2], field=str(f))
    return report


# -- bordered form ---------------------------------------------------------


def sourour_suite(
    fields: Optional[Sequence[Field]] = None,
    count: int = 100,
    sizes: Iterable[int] = range(3, 7),
    seed: Optional[int] = None,
) -> SuiteReport:
    """``count`` random non-square-zero matrices per field, spread over ``sizes``."""
    report = SuiteReport("sourour")
    rng = rng_for(seed)
    sizes = list(sizes)
    for f in _fields(fields, (GF(5), QQ)):
        done = 0
        while done < count:
            n = sizes[done % len(sizes)]
            A = random_matrix(f, n, rng) if done % 2 else random_singular(f, n, rng)
            if (A @ A).is_zero():
                continue
            form = sourour_form(A)
            bad = form.violations(A)
            report.add(
                "S^-1 A S = [[lam, c^T], [b, D]], rank D = rank A - 1, b in R(D), c in R(D^T)",
                "bordered form",
                not bad,
                "; ".join(bad),
                n=n,
                field=str(f),
                branch=form.branch,
            )
            done += 1
        for n in sizes:
            N = matrix_unit(f, n, n - 1, 0)  # E_(n,1), square-zero
            try:
                sourour_form(N)
                rejected = False
            except SquareZero:
                rejected = True
            report.add("square-zero input rejected", "bordered form", rejected, n=n, field=str(f))
    return report


# -- the full factorization ------------------------------------------------


def _record(report: SuiteReport, A: Matrix, anchor: str, **params):
    try:
        fac = factor(A)
    except NilfactorError as exc:
        report.add("certified factorization", anchor, False, f"{type(exc).__name__}: {exc}", **params)
        return None
    report.add("certified factorization", anchor, fac.certificate.ok, route=fac.route.value, **params)
    return fac


def route_coverage(field: Field = QQ) -> SuiteReport:
    """One certified run per route, plus the rank claim for a single zero eigenvalue."""
    report = SuiteReport("routes")
    f = field
    cases = {
        "nilpotent J_3": (jordan_block(f, 3), Route.NILPOTENT),
        "zero block m=1": (Matrix.diag(f, [0, 2, 3]), Route.ZERO_BLOCK),
        "zero block m=2": (Matrix.diag(f, [0, 0, 1, 1]), Route.ZERO_BLOCK),
        "J2 block": (block_diag(jordan_block(f, 2), Matrix.identity(f, 1)), Route.J2),
        "general, B = 0": (block_diag(jordan_block(f, 3), Matrix.identity(f, 1)), Route.GENERAL),
        "general, B != 0": (block_diag(jordan_block(f, 4), Matrix.diag(f, [2])), Route.GENERAL),
    }
    for name, (A, route) in cases.items():
        fac = _record(report, A, name, case=name, field=str(f))
        if fac is None:
            continue
        report.add("route tag", name, fac.route is route, f"got {fac.route.value}", case=name)
        if name.startswith("general"):
            want = name.endswith("!= 0")
            report.add("Roth step used iff B != 0", name, fac.used_roth == want, case=name)
    # rank claim for the J_1 case: both factors have the rank of A
    A = Matrix.diag(f, [0, 2, 3])
    fac = factor(A)
    r = A.rank()
    report.add(
        "rank N1 = rank N2 = rank A = n - 1",
        "zero block m=1",
        fac.certificate.rank_1 == fac.certificate.rank_2 == r == A.nrows - 1,
        f"ranks {fac.certificate.rank_1}, {fac.certificate.rank_2}, {r}",
    )
    c = factor_case_zero_block(1, Matrix.diag(f, [2, 3]))
    report.add("shifted L, U keep rank n - 1", "zero block m=1", c.M1.rank() == c.M2.rank() == 2)
    A1 = Matrix.diag(f, [2])
    c = factor_case_general(NilpotentPartition((4,)), A1)
    u11 = lu_similarity(A1).U[0, 0]
    ok = c.roth is not None and c.roth == Matrix.zeros(f, 1, 4).with_entries({(0, 0): f.reduce(-f.inv(u11))})
    report.add("Roth matrix is -1/u11 at (1,1)", "general, B != 0", ok)
    return report


def theorem_suite(
    fields: Optional[Sequence[Field]] = None,
    count: int = 20,
    sizes: Iterable[int] = range(4, 9),
    seed: Optional[int] = None,
) -> SuiteReport:
    """Route coverage and ``count`` random singular matrices per field and size."""
    report = SuiteReport("theorem")
    report.checks.extend(route_coverage(QQ).checks)
    rng = rng_for(seed)
    for f in _fields(fields, (GF(2), GF(5), GF(7), QQ)):
        for n in sizes:
            for i in range(count):
                A = random_singular(f, n, rng) if i % 2 == 0 else random_structured_singular(f, n, rng)
                _record(report, A, "random singular", n=n, field=str(f))
    return report


# -- Roth closed forms against the generic solver --------------------------


def roth_suite(count: int = 100, fields: Optional[Sequence[Field]] = None, seed: Optional[int] = None) -> SuiteReport:
    """Closed-form Roth solutions agree with the linear-system solver."""
    report = SuiteReport("roth")
    rng = rng_for(seed)
    fields = _fields(fields, (QQ, GF(5), GF(7)))
    A0_j2 = Matrix(fields[0], [[0, 1], [0, 0]])
    for i in range(count):
        f = fields[i % len(fields)]
        k = rng.randint(1, 4)
        A1 = random_invertible(f, k, rng)
        if i % 2 == 0:
            A0 = Matrix(f, A0_j2.rows)
            B = matrix_unit(f, k, k - 1, 1, ncols=2).scale(-1)
            X = solve_roth_j2case(A1).X
            anchor, params = "J2 case", {"k": k}
        else:
            n0 = rng.randint(3, 6)
            sizes = rng.choice([p for p in partitions(n0) if p != (2,)])
            nf = blocks.factor_nilpotent_normal_form(NilpotentPartition(sizes), f)
            A0 = nf.left @ nf.right
            lu = lu_similarity(A1)
            A1 = lu.L @ lu.U
            B = Matrix.from_columns(f, [lu.L.column(0)] + [(0,) * k] * (n0 - 1), nrows=k)
            X = solve_roth_e11case(f.scalar(lu.U[0, 0]), k, n0).X
            anchor, params = "e11 case", {"k": k, "partition": list(sizes)}
        oracle = solve_sylvester_generic(A0, A1, B)
        params["field"] = str(f)
        report.add("X A0 - A1 X = B", anchor, X @ A0 - A1 @ X == B, **params)
        report.add("closed form equals generic solution", anchor, oracle is not None and oracle.X == X, **params)
        report.add("[[I,0],[X,I]] block-diagonalizes", anchor, block_diagonalizes(A0, A1, B, X), **params)
    return report


def run_suite(name: str, *, max_k: int = 11, fields: Optional[Sequence[Field]] = None, seed: Optional[int] = None) -> list:
    """Reports for ``name`` (one of :data:`SUITES` or ``all``)."""
    names = SUITES if name == "all" else (name,)
    out = []
    for s in names:
        if s == "lemma1":
            out.append(lemma1_suite(max_k, fields))
        elif s == "lemma2":
            out.append(lemma2_suite(fields=fields))
        elif s == "sourour":
            out.append(sourour_suite(fields, seed=seed))
        elif s == "theorem":
            out.append(theorem_suite(fields, seed=seed))
        elif s == "roth":
            out.append(roth_suite(fields=fields, seed=seed))
        else:
            raise ValueError(f"unknown suite {s!r}; expected one of {', '.join(SUITES)} or all")
    return out
