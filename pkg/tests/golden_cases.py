"""Golden CLI invocations shared by the regeneration script and the tests.

Each case is (filename, argv).  Regenerate after an intentional output
change with:  python3 tests/golden_cases.py --regen
"""

from __future__ import annotations

CASES: list[tuple[str, list[str]]] = [
    ("nf_kappa2.txt", ["nf", "--kappa", "2", "T1*x1*T1"]),
    ("nf_kappa2.json", ["nf", "--kappa", "2", "--format", "json", "x1*T1"]),
    ("nf_kappa2_hbar1.txt", ["nf", "--kappa", "2", "--hbar", "1", "T1*x1*T1"]),
    ("mul_kappa3.txt", ["mul", "--kappa", "3", "x2*x1", "T2"]),
    ("diff_kappa2.txt", ["diff", "--kappa", "2", "x1"]),
    ("diff_kappa3.json", ["diff", "--kappa", "3", "--format", "json", "x1*x2"]),
    ("d2check_kappa2.txt", ["d2check", "--kappa", "2", "--maxdeg", "3"]),
    ("relations_kappa3.txt", ["relations", "--kappa", "3"]),
    ("betti_kappa2.txt", ["betti", "--kappa", "2", "--window=-2..0"]),
    ("homology_kappa2_q0.txt", ["homology", "--kappa", "2", "--window=-1..0", "--hbar", "0"]),
    ("h0_kappa2.txt", ["h0", "--kappa", "2"]),
    ("h0_kappa2.json", ["h0", "--kappa", "2", "--format", "json"]),
    ("basis_kappa3_s2.txt", ["basis", "--kappa", "3", "-s", "2"]),
    ("braid_kappa3.txt", ["braid", "--kappa", "3", "1 2 2 1"]),
    ("skein_kappa4.txt", ["skein", "--kappa", "4"]),
    ("katok_default.txt", ["katok"]),
    ("katok_default.json", ["katok", "--format", "json"]),
    ("nf_c_param.txt", ["nf", "--kappa", "2", "--c", "1+h", "x1"]),
    ("diff_c_param.txt", ["diff", "--kappa", "2", "--c", "1+h", "x1"]),
]

# commands whose output must also be identical across thread counts
THREADED: list[tuple[str, list[str]]] = [
    ("betti_kappa2.txt", ["betti", "--kappa", "2", "--window=-2..0", "--threads", "2"]),
    (
        "homology_kappa2_q0.txt",
        ["homology", "--kappa", "2", "--window=-1..0", "--hbar", "0", "--threads", "2"],
    ),
]


def regenerate() -> None:
    import contextlib
    import io
    import pathlib

    from spherehecke.cli import run

    golden = pathlib.Path(__file__).parent / "golden"
    golden.mkdir(exist_ok=True)
    for name, argv in CASES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            status = run(argv)
        assert status == 0, (name, status)
        (golden / name).write_text(buf.getvalue())
        print(f"wrote {name} ({len(buf.getvalue())} bytes)")


if __name__ == "__main__":
    import sys

    if "--regen" in sys.argv:
        regenerate()
    else:
        print(__doc__)
