"""Exact rational Khovanov and Lee homology of pretzel and (2,n)-torus links."""

from ._pretzelkh import (
    LinkDiagram,
    diagram_from_json,
    jones,
    kh_formula,
    khovanov_homology,
    lee_homology,
    mirror,
    predict_s,
    pretzel,
    s_invariant,
    signature,
    torus2,
    turner_e1,
)

__all__ = [
    "LinkDiagram",
    "diagram_from_json",
    "jones",
    "kh_formula",
    "khovanov_homology",
    "lee_homology",
    "mirror",
    "predict_s",
    "pretzel",
    "s_invariant",
    "signature",
    "torus2",
    "turner_e1",
]
