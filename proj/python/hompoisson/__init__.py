"""Exact verification of Hom-Poisson algebras.

Rationals cross the boundary as "p/q" strings; the helpers here turn them
into ``fractions.Fraction``.
"""

from fractions import Fraction

from ._core import (
    DimensionMismatch,
    Error,
    HomAlgebra,
    HomPoissonAlgebra,
    NotInvertible,
    ParseError,
    PreconditionFailed,
    ResourceLimit,
    catalog,
    catalog_names,
    check_admissible,
    check_criterion_34,
    check_hom_associative,
    check_hom_flexible,
    check_hom_poisson,
    check_morphism,
    check_multiplicative,
    check_nth_power_assoc,
    commutator_poisson,
    depolarize,
    heisenberg_morphism,
    matrix_algebra,
    parse_spec,
    polarize,
    run_command,
    run_witness,
    tensor,
    twist,
    yau_twist,
)


def to_fraction(text):
    return Fraction(text)


def matrix(rows):
    """Rows of "p/q" strings as rows of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def as_rows(matrix_):
    """Rows of numbers (int, Fraction, str) as rows of "p/q" strings."""
    return [[str(Fraction(x)) for x in row] for row in matrix_]


def structure_constants(entries):
    """{(i, j, k): Fraction} from mu_entries() / bracket_entries()."""
    return {(i, j, k): Fraction(v) for i, j, k, v in entries}
