"""Exact computations on finite T0 spaces and symbolic counterexamples.

Finite T0 spaces are bitmask-backed partial orders (module finite_space);
on top of them sit the b-topology (b_topology), maps and categorical
constructions (constructions), sobriety-like property checkers
(properties), exhaustive enumeration up to homeomorphism (enumeration),
reflection machinery (reflection_lab), and exact symbolic set algebras
for the classical infinite counterexamples (symbolic).  The command line
lives in cli.
"""

from .finite_space import FiniteSpace, PointSet, from_cover, from_opens, from_order
from .report import render_dot, render_json, render_text
from .spacefile import parse_document, parse_space, print_document, print_space
from .symbolic import catalog, catalog_names

__all__ = [
    "FiniteSpace",
    "PointSet",
    "catalog",
    "catalog_names",
    "from_cover",
    "from_opens",
    "from_order",
    "parse_document",
    "parse_space",
    "print_document",
    "print_space",
    "render_dot",
    "render_json",
    "render_text",
]
