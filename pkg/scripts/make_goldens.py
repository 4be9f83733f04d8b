#!/usr/bin/env python3
"""Regenerate the golden u-expansion files under tests/golden/.

The goldens freeze the serialized bytes of the six catalog forms at the
standard (q, precision) grid; the test suite recomputes each one and
compares byte for byte, so any change to the arithmetic or the encoding
shows up as a diff here.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from drinfeldforms.fields import finite_field
from drinfeldforms.forms import FormCatalog
from drinfeldforms.serialize import canonical_json, useries_to_obj

GRID = [(2, 1, 64), (3, 1, 81), (2, 2, 64), (5, 1, 50)]
FORMS = ["g", "h", "delta", "E", "d2", "EE"]
ATTR = {"g": "g", "h": "h", "delta": "delta", "E": "e", "d2": "d2", "EE": "ee"}


def main():
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"
    out_dir.mkdir(parents=True, exist_ok=True)
    for p, e, prec in GRID:
        catalog = FormCatalog(finite_field(p, e), prec)
        for form in FORMS:
            series = getattr(catalog, ATTR[form])
            payload = {"form": form, "p": p, "e": e, "uprec": prec,
                       "series": useries_to_obj(series)}
            path = out_dir / f"{form}_p{p}_e{e}_uprec{prec}.json"
            path.write_text(canonical_json(payload))
            print("wrote", path.name)


if __name__ == "__main__":
    main()
