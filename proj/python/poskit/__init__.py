"""Finite group order spectra and perfect order subsets.

A group is described by a compositional spec: cyclic groups, direct
products, cyclic-by-cyclic semidirect products, and small symmetric
groups. The package computes exact element order spectra and decides
whether every order subset's size divides the group order.
"""

from ._core import (
    DomainError,
    Group,
    GroupSpec,
    IntegerOverflowError,
    InvalidActionError,
    NotPrimeError,
    SizeLimitError,
    SpecSyntaxError,
    abelian_spectrum,
    enumerate_abelian,
    enumerate_semidirect,
    exponent,
    fermat_family_spec,
    find_counterexamples,
    frobenius_spec,
    inversion_family_closed_form,
    inversion_family_spec,
    order_divisibility_excludes,
    order_spectrum,
    parse_spec,
    pos_check,
    print_spec,
    verify_inversion_family,
)

__all__ = [
    "DomainError",
    "Group",
    "GroupSpec",
    "IntegerOverflowError",
    "InvalidActionError",
    "NotPrimeError",
    "SizeLimitError",
    "SpecSyntaxError",
    "abelian_spectrum",
    "enumerate_abelian",
    "enumerate_semidirect",
    "exponent",
    "fermat_family_spec",
    "find_counterexamples",
    "frobenius_spec",
    "inversion_family_closed_form",
    "inversion_family_spec",
    "order_divisibility_excludes",
    "order_spectrum",
    "parse_spec",
    "pos_check",
    "print_spec",
    "verify_inversion_family",
]
