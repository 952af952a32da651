"""Structure-constant descriptions of the three twisted structures.

Each structure stores raw data (basis names, tables of coordinate vectors, the
twist matrix) and is validated on demand.  Validators enumerate every basis
tuple of the relevant arity, so a passing report certifies the axiom for all
elements by multilinearity; a failing one carries exact residual witnesses.
Structures are stored raw even when broken -- the tool must be able to load a
defective table to diagnose it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, StructureError
from .scalar import ParamSet, Scalar, parse_scalar
from .tensor import (
    Matrix,
    Vector,
    basis_vector,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_vector,
)
from .verify import (
    DEFAULT_WITNESS_CAP,
    VerificationReport,
    Witness,
    _clip,
    _combine,
)


def _parse_vector(strings: Sequence[str], params: ParamSet) -> Vector:
    return tuple(parse_scalar(s, params) for s in strings)


def _parse_matrix(rows: Sequence[Sequence[str]], params: ParamSet) -> Matrix:
    return Matrix.from_rows(
        params, [[parse_scalar(s, params) for s in row] for row in rows]
    )


@dataclass(frozen=True)
class _StructureBase:
    name: str
    basis: tuple[str, ...]
    params: ParamSet
    alpha: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_vec(self, i: int) -> Vector:
        return basis_vector(self.dim, i, self.params)

    def apply_alpha(self, vec: Sequence[Scalar]) -> Vector:
        return self.alpha.apply(vec)

    def _check_base(self) -> None:
        if not self.basis:
            raise StructureError("empty basis")
        if self.alpha.rows != self.dim or self.alpha.cols != self.dim:
            raise StructureError(
                f"alpha: expected {self.dim}x{self.dim}, got {self.alpha.rows}x{self.alpha.cols}"
            )

    def basis_index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise StructureError(f"unknown basis element {name!r}") from None


@dataclass(frozen=True)
class HomAlgebra(_StructureBase):
    """(A, μ, 1_A, α): multiplication table, unit coordinates, twist matrix."""

    unit: Vector = ()
    mult: tuple[tuple[Vector, ...], ...] = ()

    def __post_init__(self):
        self._check_base()
        d = self.dim
        if len(self.unit) != d:
            raise StructureError(f"unit: expected length {d}, got {len(self.unit)}")
        if len(self.mult) != d or any(len(row) != d for row in self.mult):
            raise StructureError(f"mult: expected {d}x{d}")
        for row in self.mult:
            for cell in row:
                if len(cell) != d:
                    raise StructureError(f"mult: coordinate vectors must have length {d}")

    @classmethod
    def from_strings(
        cls,
        name: str,
        basis: Sequence[str],
        params: ParamSet,
        unit: Sequence[str],
        mult: Sequence[Sequence[Sequence[str]]],
        alpha: Sequence[Sequence[str]],
    ) -> "HomAlgebra":
        return cls(
            name=name,
            basis=tuple(basis),
            params=params,
            alpha=_parse_matrix(alpha, params),
            unit=_parse_vector(unit, params),
            mult=tuple(
                tuple(_parse_vector(cell, params) for cell in row) for row in mult
            ),
        )

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        """Coordinates of u·v, extended bilinearly from the structure constants."""
        out = list(zero_vector(self.dim, self.params))
        for i, ui in enumerate(u):
            if not ui.terms:
                continue
            for j, vj in enumerate(v):
                if not vj.terms:
                    continue
                c = ui * vj
                for k, w in enumerate(self.mult[i][j]):
                    if w.terms:
                        out[k] = out[k] + c * w
        return tuple(out)

    def substitute(self, assignment: Mapping[str, Fraction | int]) -> "HomAlgebra":
        sub = lambda v: tuple(s.substitute(assignment) for s in v)
        return replace(
            self,
            alpha=self.alpha.substitute(assignment),
            unit=sub(self.unit),
            mult=tuple(tuple(sub(cell) for cell in row) for row in self.mult),
        )

    def extend(self, params: ParamSet) -> "HomAlgebra":
        ext = lambda v: tuple(s.extend(params) for s in v)
        return replace(
            self,
            params=params,
            alpha=self.alpha.extend(params),
            unit=ext(self.unit),
            mult=tuple(tuple(ext(cell) for cell in row) for row in self.mult),
        )


@dataclass(frozen=True)
class HomCoalgebra(_StructureBase):
    """(C, Δ, ε, α): comultiplication triples, counit values, twist matrix.

    `comult[i]` lists (j, k, c) triples meaning Δ(e_i) contains c·e_j⊗e_k.
    """

    counit: Vector = ()
    comult: tuple[tuple[tuple[int, int, Scalar], ...], ...] = ()

    def __post_init__(self):
        self._check_base()
        d = self.dim
        if len(self.counit) != d:
            raise StructureError(f"counit: expected length {d}, got {len(self.counit)}")
        if len(self.comult) != d:
            raise StructureError(f"comult: expected {d} entries, got {len(self.comult)}")
        for i, triples in enumerate(self.comult):
            for j, k, _ in triples:
                if not (0 <= j < d and 0 <= k < d):
                    raise StructureError(f"comult[{i}]: index ({j},{k}) out of range")

    @classmethod
    def from_strings(
        cls,
        name: str,
        basis: Sequence[str],
        params: ParamSet,
        counit: Sequence[str],
        comult: Sequence[Sequence[tuple[int, int, str]]],
        alpha: Sequence[Sequence[str]],
    ) -> "HomCoalgebra":
        return cls(
            name=name,
            basis=tuple(basis),
            params=params,
            alpha=_parse_matrix(alpha, params),
            counit=_parse_vector(counit, params),
            comult=tuple(
                tuple((int(j), int(k), parse_scalar(c, params)) for j, k, c in triples)
                for triples in comult
            ),
        )

    def comult_coords(self, i: int) -> Vector:
        """Δ(e_i) as a dim² coordinate vector."""
        d = self.dim
        out = list(zero_vector(d * d, self.params))
        for j, k, c in self.comult[i]:
            out[j * d + k] = out[j * d + k] + c
        return tuple(out)

    def comult_of(self, vec: Sequence[Scalar]) -> Vector:
        d = self.dim
        out = list(zero_vector(d * d, self.params))
        for i, vi in enumerate(vec):
            if not vi.terms:
                continue
            for j, k, c in self.comult[i]:
                out[j * d + k] = out[j * d + k] + vi * c
        return tuple(out)

    def counit_of(self, vec: Sequence[Scalar]) -> Scalar:
        out = Scalar.zero(self.params)
        for vi, eps in zip(vec, self.counit):
            if vi.terms and eps.terms:
                out = out + vi * eps
        return out

    def substitute(self, assignment: Mapping[str, Fraction | int]) -> "HomCoalgebra":
        return replace(
            self,
            alpha=self.alpha.substitute(assignment),
            counit=tuple(s.substitute(assignment) for s in self.counit),
            comult=tuple(
                tuple((j, k, c.substitute(assignment)) for j, k, c in triples)
                for triples in self.comult
            ),
        )

    def extend(self, params: ParamSet) -> "HomCoalgebra":
        return replace(
            self,
            params=params,
            alpha=self.alpha.extend(params),
            counit=tuple(s.extend(params) for s in self.counit),
            comult=tuple(
                tuple((j, k, c.extend(params)) for j, k, c in triples)
                for triples in self.comult
            ),
        )


@dataclass(frozen=True)
class HomLieAlgebra(_StructureBase):
    """(L, [·,·], α): bracket table of coordinate vectors and twist matrix."""

    bracket_table: tuple[tuple[Vector, ...], ...] = ()

    def __post_init__(self):
        self._check_base()
        d = self.dim
        if len(self.bracket_table) != d or any(len(row) != d for row in self.bracket_table):
            raise StructureError(f"bracket: expected {d}x{d}")
        for row in self.bracket_table:
            for cell in row:
                if len(cell) != d:
                    raise StructureError(f"bracket: coordinate vectors must have length {d}")

    @classmethod
    def from_strings(
        cls,
        name: str,
        basis: Sequence[str],
        params: ParamSet,
        bracket: Sequence[Sequence[Sequence[str]]],
        alpha: Sequence[Sequence[str]],
    ) -> "HomLieAlgebra":
        return cls(
            name=name,
            basis=tuple(basis),
            params=params,
            alpha=_parse_matrix(alpha, params),
            bracket_table=tuple(
                tuple(_parse_vector(cell, params) for cell in row) for row in bracket
            ),
        )

    def bracket_of(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        out = list(zero_vector(self.dim, self.params))
        for i, ui in enumerate(u):
            if not ui.terms:
                continue
            for j, vj in enumerate(v):
                if not vj.terms:
                    continue
                c = ui * vj
                for k, w in enumerate(self.bracket_table[i][j]):
                    if w.terms:
                        out[k] = out[k] + c * w
        return tuple(out)

    def substitute(self, assignment: Mapping[str, Fraction | int]) -> "HomLieAlgebra":
        sub = lambda v: tuple(s.substitute(assignment) for s in v)
        return replace(
            self,
            alpha=self.alpha.substitute(assignment),
            bracket_table=tuple(
                tuple(sub(cell) for cell in row) for row in self.bracket_table
            ),
        )

    def extend(self, params: ParamSet) -> "HomLieAlgebra":
        ext = lambda v: tuple(s.extend(params) for s in v)
        return replace(
            self,
            params=params,
            alpha=self.alpha.extend(params),
            bracket_table=tuple(
                tuple(ext(cell) for cell in row) for row in self.bracket_table
            ),
        )


HomStructure = HomAlgebra | HomCoalgebra | HomLieAlgebra


# -- validators ---------------------------------------------------------------


def _vector_failures(
    row: int, diff: Sequence[Scalar], label: str
) -> list[Witness]:
    return [
        Witness(row, c, s, f"{label}->{c}") for c, s in enumerate(diff) if s.terms
    ]


def _axiom_report(
    name: str, failures: list[Witness], cap: int | None, tuples: int
) -> VerificationReport:
    return VerificationReport(
        check_name=name,
        holds=not failures,
        witnesses=_clip(failures, cap),
        metadata={"witness_count": str(len(failures)), "tuples": str(tuples)},
    )


def validate_hom_algebra(
    a: HomAlgebra, *, witness_cap: int | None = DEFAULT_WITNESS_CAP
) -> VerificationReport:
    """Exhaustive exact check of the twisted-algebra axioms on all basis tuples.

    Subchecks: multiplicativity of the twist, twist fixing the unit, twisted
    associativity on every basis triple, and the twisted unit law.
    """
    started = time.perf_counter()
    d = a.dim
    basis = a.basis
    es = [a.basis_vec(i) for i in range(d)]
    alpha_es = [a.apply_alpha(e) for e in es]

    ha1 = []
    for i in range(d):
        for j in range(d):
            lhs = a.apply_alpha(a.mult[i][j])
            rhs = a.product(alpha_es[i], alpha_es[j])
            ha1.extend(
                _vector_failures(i * d + j, vec_sub(lhs, rhs), f"HA1({basis[i]},{basis[j]})")
            )

    ha1_unit = _vector_failures(
        0, vec_sub(a.apply_alpha(a.unit), a.unit), "HA1(unit)"
    )

    ha2 = []
    for i in range(d):
        for j in range(d):
            prod_ij = a.mult[i][j]
            for k in range(d):
                lhs = a.product(alpha_es[i], a.mult[j][k])
                rhs = a.product(prod_ij, alpha_es[k])
                ha2.extend(
                    _vector_failures(
                        (i * d + j) * d + k,
                        vec_sub(lhs, rhs),
                        f"HA2({basis[i]},{basis[j]},{basis[k]})",
                    )
                )

    ha2_unit = []
    for i in range(d):
        right = a.product(es[i], a.unit)
        left = a.product(a.unit, es[i])
        ha2_unit.extend(
            _vector_failures(i, vec_sub(right, alpha_es[i]), f"HA2-unit({basis[i]}*1)")
        )
        ha2_unit.extend(
            _vector_failures(i, vec_sub(left, alpha_es[i]), f"HA2-unit(1*{basis[i]})")
        )

    parts = [
        _axiom_report("HA1-mult", ha1, witness_cap, d * d),
        _axiom_report("HA1-unit", ha1_unit, witness_cap, 1),
        _axiom_report("HA2-assoc", ha2, witness_cap, d ** 3),
        _axiom_report("HA2-unit", ha2_unit, witness_cap, d),
    ]
    return _combine("hom-algebra-axioms", parts, started, witness_cap=witness_cap)


def validate_hom_coalgebra(
    c: HomCoalgebra, *, witness_cap: int | None = DEFAULT_WITNESS_CAP
) -> VerificationReport:
    """Exhaustive exact check of the twisted-coalgebra axioms on all basis vectors."""
    started = time.perf_counter()
    d = c.dim
    basis = c.basis
    params = c.params
    alpha_cols = [c.alpha.column(i) for i in range(d)]

    hc1 = []
    hc1_counit = []
    hc2 = []
    hc2_counit = []
    for i in range(d):
        delta_i = c.comult[i]

        # (α⊗α)Δ(e_i) vs Δ(α(e_i))
        lhs = list(zero_vector(d * d, params))
        for j, k, coeff in delta_i:
            for p, ap in enumerate(alpha_cols[j]):
                if not ap.terms:
                    continue
                for q, aq in enumerate(alpha_cols[k]):
                    if aq.terms:
                        lhs[p * d + q] = lhs[p * d + q] + coeff * ap * aq
        rhs = c.comult_of(alpha_cols[i])
        hc1.extend(_vector_failures(i, vec_sub(tuple(lhs), rhs), f"HC1({basis[i]})"))

        # ε(α(e_i)) vs ε(e_i)
        diff = c.counit_of(alpha_cols[i]) - c.counit[i]
        if diff.terms:
            hc1_counit.append(Witness(i, 0, diff, f"HC1-counit({basis[i]})"))

        # (α⊗Δ)Δ vs (Δ⊗α)Δ on e_i
        left = list(zero_vector(d ** 3, params))
        right = list(zero_vector(d ** 3, params))
        for j, k, coeff in delta_i:
            dk = c.comult_coords(k)
            for p, ap in enumerate(alpha_cols[j]):
                if not ap.terms:
                    continue
                pref = coeff * ap
                for rest, val in enumerate(dk):
                    if val.terms:
                        left[p * d * d + rest] = left[p * d * d + rest] + pref * val
            dj = c.comult_coords(j)
            for rest, val in enumerate(dj):
                if not val.terms:
                    continue
                pref = coeff * val
                for q, aq in enumerate(alpha_cols[k]):
                    if aq.terms:
                        right[rest * d + q] = right[rest * d + q] + pref * aq
        hc2.extend(
            _vector_failures(i, vec_sub(tuple(left), tuple(right)), f"HC2({basis[i]})")
        )

        # (ε⊗id)Δ = (id⊗ε)Δ = α on e_i
        eps_left = list(zero_vector(d, params))
        eps_right = list(zero_vector(d, params))
        for j, k, coeff in delta_i:
            eps_left[k] = eps_left[k] + c.counit[j] * coeff
            eps_right[j] = eps_right[j] + coeff * c.counit[k]
        hc2_counit.extend(
            _vector_failures(
                i, vec_sub(tuple(eps_left), alpha_cols[i]), f"HC2-counit(eps⊗id)({basis[i]})"
            )
        )
        hc2_counit.extend(
            _vector_failures(
                i, vec_sub(tuple(eps_right), alpha_cols[i]), f"HC2-counit(id⊗eps)({basis[i]})"
            )
        )

    parts = [
        _axiom_report("HC1-comult", hc1, witness_cap, d),
        _axiom_report("HC1-counit", hc1_counit, witness_cap, d),
        _axiom_report("HC2-coassoc", hc2, witness_cap, d),
        _axiom_report("HC2-counit", hc2_counit, witness_cap, d),
    ]
    return _combine("hom-coalgebra-axioms", parts, started, witness_cap=witness_cap)


def validate_hom_lie(
    lie: HomLieAlgebra,
    require_multiplicative: bool = False,
    *,
    witness_cap: int | None = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """Antisymmetry on all pairs, the twisted Jacobi identity on all triples.

    The definition does not ask the twist to respect the bracket, but the
    operator constructions do; `require_multiplicative` adds that check.
    """
    started = time.perf_counter()
    d = lie.dim
    basis = lie.basis
    alpha_cols = [lie.alpha.column(i) for i in range(d)]

    hl1 = []
    for i in range(d):
        for j in range(d):
            diff = vec_add(lie.bracket_table[i][j], lie.bracket_table[j][i])
            hl1.extend(_vector_failures(i * d + j, diff, f"HL1({basis[i]},{basis[j]})"))

    hl2 = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                total = vec_add(
                    vec_add(
                        lie.bracket_of(alpha_cols[i], lie.bracket_table[j][k]),
                        lie.bracket_of(alpha_cols[j], lie.bracket_table[k][i]),
                    ),
                    lie.bracket_of(alpha_cols[k], lie.bracket_table[i][j]),
                )
                hl2.extend(
                    _vector_failures(
                        (i * d + j) * d + k,
                        total,
                        f"HL2({basis[i]},{basis[j]},{basis[k]})",
                    )
                )

    parts = [
        _axiom_report("HL1-antisym", hl1, witness_cap, d * d),
        _axiom_report("HL2-jacobi", hl2, witness_cap, d ** 3),
    ]

    if require_multiplicative:
        mult = []
        for i in range(d):
            for j in range(d):
                lhs = lie.apply_alpha(lie.bracket_table[i][j])
                rhs = lie.bracket_of(alpha_cols[i], alpha_cols[j])
                mult.extend(
                    _vector_failures(
                        i * d + j, vec_sub(lhs, rhs), f"alpha-mult({basis[i]},{basis[j]})"
                    )
                )
        parts.append(_axiom_report("alpha-multiplicative", mult, witness_cap, d * d))

    return _combine("hom-lie-axioms", parts, started, witness_cap=witness_cap)


def validate(structure: HomStructure, require_multiplicative: bool = False,
             *, witness_cap: int | None = DEFAULT_WITNESS_CAP) -> VerificationReport:
    if isinstance(structure, HomAlgebra):
        return validate_hom_algebra(structure, witness_cap=witness_cap)
    if isinstance(structure, HomCoalgebra):
        return validate_hom_coalgebra(structure, witness_cap=witness_cap)
    if isinstance(structure, HomLieAlgebra):
        return validate_hom_lie(
            structure, require_multiplicative, witness_cap=witness_cap
        )
    raise TypeError(f"not a Hom structure: {type(structure).__name__}")


# -- element predicates -----------------------------------------------------------


def is_central(lie: HomLieAlgebra, u: Sequence[Scalar]) -> bool:
    """[u, e_i] = 0 for every basis element."""
    if len(u) != lie.dim:
        raise DimensionError(f"vector of length {len(u)} in dimension {lie.dim}")
    return all(
        vec_is_zero(lie.bracket_of(u, lie.basis_vec(i))) for i in range(lie.dim)
    )


def is_alpha_invariant(structure: _StructureBase, u: Sequence[Scalar]) -> bool:
    """α(u) = u exactly."""
    if len(u) != structure.dim:
        raise DimensionError(f"vector of length {len(u)} in dimension {structure.dim}")
    return vec_is_zero(vec_sub(structure.apply_alpha(u), u))
