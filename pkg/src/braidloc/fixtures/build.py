"""Regenerate the bundled JSON fixtures in place."""

import json
from pathlib import Path

from ..gybe import GybOperator
from . import R_GYB31, RZWG_GYB32, SL3_LEVEL3, case_study_matrix, rzwg_matrix
from .kac_walton import fixture

HERE = Path(__file__).parent


def main():
    (HERE / R_GYB31).write_text(json.dumps(GybOperator(3, 1, 2, case_study_matrix()).to_json()) + "\n")
    (HERE / RZWG_GYB32).write_text(json.dumps(GybOperator(3, 2, 2, rzwg_matrix()).to_json()) + "\n")
    data = fixture(3)
    rows = ",\n  ".join(json.dumps(r) for r in data["nx"])
    body = {k: v for k, v in data.items() if k != "nx"}
    text = json.dumps(body, indent=1)[:-2] + ',\n "nx": [\n  ' + rows + "\n ]\n}\n"
    json.loads(text)
    (HERE / SL3_LEVEL3).write_text(text)


if __name__ == "__main__":
    main()
