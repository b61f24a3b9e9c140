"""The shipped example corpus: group algebras and the four-dimensional Hopf
algebra, each with the canonical self-(co)actions and with trivial ones.

The corpus spans all four (co)semisimplicity quadrants: group algebras over
the rationals are semisimple and cosemisimple, the order-two group algebra
over F_2 is cosemisimple but not semisimple, and the four-dimensional Hopf
algebra is neither.
"""

from __future__ import annotations

import os

from .fields import Field
from .hopf import (
    cyclic_group_table, group_algebra, regular_comodule_algebra,
    regular_module_coalgebra, sweedler_hopf, symmetric_group_table,
    trivial_comodule_algebra, trivial_hopf, trivial_module_coalgebra,
)
from .io import InputDocument, dumps_document


def _doc(hopf, trivial=False, options=None):
    if trivial:
        algebra = trivial_comodule_algebra(hopf, hopf.as_algebra())
        coalgebra = trivial_module_coalgebra(hopf, hopf.as_coalgebra())
    else:
        algebra = regular_comodule_algebra(hopf)
        coalgebra = regular_module_coalgebra(hopf)
    return InputDocument(hopf.field, hopf, algebra, coalgebra, options or {})


def corpus_documents():
    """Name -> InputDocument for every shipped example."""
    QQ = Field.rationals()
    F2 = Field.prime(2)
    gnames2 = ["e", "g"]
    gnames3 = ["e", "g", "g2"]
    docs = {
        "ground_field_Q": _doc(trivial_hopf(QQ)),
        "c2_Q": _doc(group_algebra(cyclic_group_table(2), QQ, gnames2)),
        "c2_Q_trivial": _doc(group_algebra(cyclic_group_table(2), QQ, gnames2),
                             trivial=True),
        "c2_F2": _doc(group_algebra(cyclic_group_table(2), F2, gnames2)),
        "c2_F2_trivial": _doc(group_algebra(cyclic_group_table(2), F2, gnames2),
                              trivial=True),
        "c3_Q": _doc(group_algebra(cyclic_group_table(3), QQ, gnames3)),
        "c3_Q_trivial": _doc(group_algebra(cyclic_group_table(3), QQ, gnames3),
                             trivial=True),
        "s3_Q": _doc(group_algebra(symmetric_group_table(3), QQ)),
        "sweedler_Q": _doc(sweedler_hopf(QQ)),
        "sweedler_Q_trivial": _doc(sweedler_hopf(QQ), trivial=True),
    }
    return docs


def write_corpus(dirpath):
    """Write every corpus document as <name>.json; returns the paths."""
    paths = []
    for name, doc in sorted(corpus_documents().items()):
        path = os.path.join(dirpath, name + ".json")
        with open(path, "w") as fh:
            fh.write(dumps_document(doc))
        paths.append(path)
    return paths
