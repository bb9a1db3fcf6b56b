"""Known-good values for the six-node reference instance (6, 3, 4, p=13).

This instance is small enough to check by hand and fixes every artifact of
the construction: the encoding Vandermonde, the lam values, the helper
block for failed node 1 with helpers {2, 4, 5, 6}, both precoding
diagonals, and both parity-check matrices. The replay runs the whole
pipeline and compares each artifact entry for entry, then repairs node 1
from a seeded random message and checks bit-exact regeneration.
"""

from __future__ import annotations

from .css import build_repair_css
from .matrix import vandermonde
from .pmcode import encode, make_params, pack_message, random_symbols
from .repair import run_repair
from .rng import SplitMix64

GOLDEN = {
    "V": [
        [1, 1, 1, 1],
        [1, 2, 4, 8],
        [1, 3, 9, 1],
        [1, 4, 3, 12],
        [1, 5, 12, 8],
        [1, 6, 10, 8],
    ],
    "lambda": [1, 4, 9, 3, 12, 10],
    "V_helpers": [
        [1, 2, 4, 8],
        [1, 4, 3, 12],
        [1, 5, 12, 8],
        [1, 6, 10, 8],
    ],
    "lambda_tilde": [9, 7, 6, 3],
    "lambda_tilde_prime": [11, 5, 11, 2],
    "HX": [[11, 10, 3, 9], [4, 2, 1, 0]],
    "HZ": [[12, 9, 12, 6], [2, 7, 4, 0]],
}

FAILED_NODE = 1
HELPERS = (2, 4, 5, 6)


def replay(seed: int = 1, golden: dict | None = None) -> list[dict]:
    """Recompute every reference artifact and diff it against the table.

    Returns one record per check: {"name", "pass", "expected", "got"}.
    The final record exercises the full repair path on a seeded message.
    """
    table = GOLDEN if golden is None else golden
    params = make_params(6, 3, 4, 13)
    repair_css = build_repair_css(params, FAILED_NODE, HELPERS)

    computed = {
        "V": vandermonde(params.field, params.eval_points, 4).to_rows(),
        "lambda": list(params.lam),
        "V_helpers": vandermonde(
            params.field, [params.eval_points[s - 1] for s in HELPERS], 4
        ).to_rows(),
        "lambda_tilde": list(repair_css.lam1),
        "lambda_tilde_prime": list(repair_css.lam2),
        "HX": repair_css.hx.to_rows(),
        "HZ": repair_css.hz.to_rows(),
    }

    report = []
    for name, got in computed.items():
        expected = table[name]
        report.append(
            {"name": name, "pass": got == expected, "expected": expected, "got": got}
        )

    rng = SplitMix64(seed)
    symbols = random_symbols(params, rng)
    stored = encode(params, pack_message(params, symbols))
    transcript = run_repair(params, stored, FAILED_NODE, HELPERS, mode="linear")
    regen = transcript.regenerated
    original = stored[FAILED_NODE - 1]
    report.append(
        {
            "name": "exact_regeneration",
            "pass": (regen.row_m, regen.row_mp) == (original.row_m, original.row_mp),
            "expected": [list(original.row_m), list(original.row_mp)],
            "got": [list(regen.row_m), list(regen.row_mp)],
        }
    )
    return report
