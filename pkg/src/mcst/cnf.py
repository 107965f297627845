"""CNF formulas for the SAT gadget generator: restriction diagnostics, DIMACS
I/O, pure-variable normalisation and small random generators.

Literals are nonzero ints: ``+i`` for ``x_i`` and ``-i`` for its negation,
variables numbered from 1.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import FormatError


@dataclass(frozen=True)
class CnfInstance:
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n_vars: int, clauses: Sequence[Sequence[int]]) -> "CnfInstance":
        return cls(n_vars, tuple(tuple(c) for c in clauses))

    def occurrences(self, var: int) -> tuple[int, int]:
        """(positive, negative) clause counts for ``var``."""
        pos = sum(1 for c in self.clauses if var in c)
        neg = sum(1 for c in self.clauses if -var in c)
        return pos, neg

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[i - 1]`` is the value of ``x_i``."""
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c) for c in self.clauses)


@dataclass
class CnfDiagnostics:
    problems: list[str] = field(default_factory=list)
    not_ready: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.problems

    @property
    def generator_ready(self) -> bool:
        return not self.problems and not self.not_ready


def validate_cnf(c: CnfInstance) -> CnfDiagnostics:
    """Check simple / monotone / 3-bounded / clause width, and readiness for
    the gadget construction (each variable in 1-2 positive and 1-2 negative
    clauses)."""
    d = CnfDiagnostics()
    for j, clause in enumerate(c.clauses, 1):
        if not 1 <= len(clause) <= 3:
            d.problems.append(f"clause {j}: width {len(clause)} not in 1..3")
        if any(lit == 0 or abs(lit) > c.n_vars for lit in clause):
            d.problems.append(f"clause {j}: literal out of range")
        vars_ = [abs(lit) for lit in clause]
        if len(set(vars_)) != len(vars_):
            d.problems.append(f"clause {j}: not simple (variable repeated)")
        if not (all(lit > 0 for lit in clause) or all(lit < 0 for lit in clause)):
            d.problems.append(f"clause {j}: not monotone (mixed signs)")
    for var in range(1, c.n_vars + 1):
        pos, neg = c.occurrences(var)
        total = sum(1 for cl in c.clauses if var in cl or -var in cl)
        if total > 3:
            d.problems.append(f"x{var}: not 3-bounded ({total} clauses)")
        if not (1 <= pos <= 2 and 1 <= neg <= 2):
            d.not_ready.append(f"x{var}: {pos} positive / {neg} negative occurrences")
    return d


def normalize_pure(c: CnfInstance) -> tuple[CnfInstance, dict[int, bool], dict[int, int]]:
    """Fix pure variables (only positive -> True, only negative -> False),
    drop the clauses they satisfy, repeat, then renumber the survivors.

    Returns the reduced formula, the fixed values (original numbering), and
    a map from new variable index to original index. Variables that vanish
    without being pure are fixed to True.
    """
    clauses = [tuple(cl) for cl in c.clauses]
    fixed: dict[int, bool] = {}
    while True:
        pure = {}
        for var in range(1, c.n_vars + 1):
            if var in fixed:
                continue
            pos = any(var in cl for cl in clauses)
            neg = any(-var in cl for cl in clauses)
            if pos != neg:
                pure[var] = pos
        if not pure:
            break
        fixed.update(pure)
        clauses = [cl for cl in clauses if not any(abs(lit) in pure and (lit > 0) == pure[abs(lit)] for lit in cl)]
    used = sorted({abs(lit) for cl in clauses for lit in cl})
    for var in range(1, c.n_vars + 1):
        if var not in fixed and var not in used:
            fixed[var] = True
    new_index = {old: new for new, old in enumerate(used, 1)}
    reduced = CnfInstance.of(
        len(used), [tuple((1 if lit > 0 else -1) * new_index[abs(lit)] for lit in cl) for cl in clauses]
    )
    return reduced, fixed, {new: old for old, new in new_index.items()}


def find_satisfying_assignment(c: CnfInstance) -> Optional[tuple[bool, ...]]:
    """Brute force over all assignments (small formulas only)."""
    for bits in itertools.product((True, False), repeat=c.n_vars):
        if c.satisfied_by(bits):
            return bits
    return None


def parse_dimacs(text: str) -> CnfInstance:
    n_vars = None
    n_clauses = None
    lits: list[int] = []
    clauses = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or n_vars is not None:
                raise FormatError(f"line {lineno}: bad problem line {line!r}", line=lineno)
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: bad problem line {line!r}", line=lineno) from None
            continue
        if n_vars is None:
            raise FormatError(f"line {lineno}: clause before problem line", line=lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise FormatError(f"line {lineno}: bad literal {tok!r}", line=lineno) from None
            if abs(lit) > n_vars:
                raise FormatError(f"line {lineno}: literal {lit} out of range", line=lineno)
            if lit == 0:
                clauses.append(tuple(lits))
                lits = []
            else:
                lits.append(lit)
    if n_vars is None:
        raise FormatError("missing 'p cnf' line")
    if lits:
        clauses.append(tuple(lits))
    if n_clauses is not None and len(clauses) != n_clauses:
        raise FormatError(f"header declares {n_clauses} clauses, found {len(clauses)}")
    return CnfInstance.of(n_vars, clauses)


def serialize_dimacs(c: CnfInstance) -> str:
    lines = [f"p cnf {c.n_vars} {len(c.clauses)}"]
    lines += [" ".join(map(str, cl)) + " 0" for cl in c.clauses]
    return "\n".join(lines) + "\n"


def random_generator_ready_cnf(n_vars: int, rng: random.Random, max_tries: int = 1000) -> CnfInstance:
    """Random simple monotone 3-bounded formula with every variable in 1-2
    positive and 1-2 negative clauses."""
    for _ in range(max_tries):
        pos_occ, neg_occ = [], []
        for var in range(1, n_vars + 1):
            p, q = rng.choice([(1, 1), (1, 2), (2, 1)])
            pos_occ += [var] * p
            neg_occ += [-var] * q
        clauses = _pack(pos_occ, rng) + _pack(neg_occ, rng)
        if clauses is not None and all(cl for cl in clauses):
            rng.shuffle(clauses)
            return CnfInstance.of(n_vars, clauses)
    raise RuntimeError("could not pack occurrences into simple clauses")


def _pack(occ: list[int], rng: random.Random):
    occ = occ[:]
    rng.shuffle(occ)
    clauses: list[list[int]] = []
    for lit in occ:
        options = [cl for cl in clauses if len(cl) < 3 and lit not in cl]
        if options and rng.random() < 0.7:
            rng.choice(options).append(lit)
        else:
            clauses.append([lit])
    return [tuple(sorted(cl, key=abs)) for cl in clauses]


def enumerate_generator_ready(n_vars: int, max_clauses: int):
    """All generator-ready formulas over ``n_vars`` variables with at most
    ``max_clauses`` clauses, as sorted clause multisets."""
    universe = []
    for width in range(1, 4):
        for vars_ in itertools.combinations(range(1, n_vars + 1), width):
            universe.append(tuple(vars_))
            universe.append(tuple(-v for v in vars_))
    for m in range(1, max_clauses + 1):
        for combo in itertools.combinations_with_replacement(universe, m):
            c = CnfInstance.of(n_vars, combo)
            if validate_cnf(c).generator_ready:
                yield c
