#!/usr/bin/env python3
"""Export the finite and spectral R-matrices at desk ranks as exact JSON.

Writes out/<family><rank>_{rhat,rbar,rhat_z}.json; the scalar format is the
language-neutral term list documented in the README.
"""

import json
import pathlib
import sys

from rsqg.affine import build_affine_rhat
from rsqg.matrices import matrix_to_json
from rsqg.rmatrix import build_rbar_inverse, build_rhat_explicit

CASES = [("A", 2), ("B", 2), ("C", 2), ("D", 3)]


def main(outdir: str = "out") -> int:
    root = pathlib.Path(outdir)
    root.mkdir(parents=True, exist_ok=True)
    for family, rank in CASES:
        tag = f"{family}{rank}"
        for name, mat in (
            ("rhat", build_rhat_explicit(family, rank)),
            ("rbar", build_rbar_inverse(family, rank)),
            ("rhat_z", build_affine_rhat(family, rank)),
        ):
            path = root / f"{tag}_{name}.json"
            path.write_text(json.dumps(matrix_to_json(mat), indent=1) + "\n")
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
