"""Ansatz description files.

Example::

    type: calabi
    alpha1: 1
    alpha2: 2
    beta1: 0
    beta2: 1
    C_alpha1: 1
    C_alpha2: -1/4
    C_beta1: -1/11
    C_beta2: 1/11

``A`` and ``B`` may be given explicitly as ascending coefficient lists, in
which case the label constants may be omitted; otherwise A and B are
fitted from the labels.  Product files accept
``degree_cap: 3`` (default) or ``4``.
"""
from __future__ import annotations

from pathlib import Path

from ..exactnum import Poly
from ..textformat import Document, ParseError, parse_document, read_document
from .ansatz import (KINDS, BoundarySystemError, CalabiAnsatz, Labels, OrthotoricAnsatz,
                     ProductAnsatz, _labels_from, calabi_fit, ortho_fit, product_fit)

PARAM_KEYS = ("alpha1", "alpha2", "beta1", "beta2")
LABEL_KEYS = ("C_alpha1", "C_alpha2", "C_beta1", "C_beta2")


class InfeasibleAnsatz(ValueError):
    pass


def parse_ansatz(doc: Document):
    kind = doc.text("type")
    if kind is None:
        doc.require("type")
    if kind not in KINDS:
        raise doc.error("type", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    params = tuple(doc.scalar(k) for k in PARAM_KEYS)
    A, B = doc.scalars("A"), doc.scalars("B")
    if (A is None) != (B is None):
        raise doc.error("A" if A is None else "B", "give both A and B or neither")
    # with explicit A and B the labels follow from the boundary slopes
    inline = A is not None and not any(k in doc.entries for k in LABEL_KEYS)
    labels = None if inline else tuple(doc.scalar(k) for k in LABEL_KEYS)
    try:
        if A is not None:
            cls = {"calabi": CalabiAnsatz, "orthotoric": OrthotoricAnsatz,
                   "product": ProductAnsatz}[kind]
            A, B = Poly.from_coeffs(A, "x"), Poly.from_coeffs(B, "y")
            if labels is None:
                labels = _labels_from(A, B, params)
            ans = cls(params, Labels(*labels), A, B)
            if not ans.boundary_ok():
                raise InfeasibleAnsatz(f"{doc.source}: A and B miss the boundary conditions")
            return ans
        if kind == "calabi":
            return calabi_fit(params, labels)
        if kind == "orthotoric":
            fit = ortho_fit(params, labels)
            if fit is None:
                raise InfeasibleAnsatz(f"{doc.source}: orthotoric boundary system is inconsistent")
            return fit
        cap = doc.integer("degree_cap", 3)
        if cap not in (3, 4):
            raise doc.error("degree_cap", f"must be 3 or 4, got {cap}")
        return product_fit(params, labels, cap)
    except BoundarySystemError as exc:
        raise InfeasibleAnsatz(f"{doc.source}: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, (ParseError, InfeasibleAnsatz)):
            raise
        raise doc.error("type", str(exc)) from None


def load_ansatz(path: str | Path):
    return parse_ansatz(read_document(path))


def ansatz_from_text(text: str):
    return parse_ansatz(parse_document(text))
