#!/usr/bin/env python3
"""End-to-end checks of the command line tool.

Usage: run_cli_tests.py <path-to-cli> <data-dir>

Exercises every subcommand against the fixture groups in the data directory:
exit codes (RF=0, NotRF=1, Unknown=2, error=3), output document shapes, and
the recheck round trip including a tampered certificate.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = None
DATA = None
failures = []
checks = 0


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=120
    )


def check(label, cond, extra=""):
    global checks
    checks += 1
    if not cond:
        failures.append(f"{label}{': ' + extra if extra else ''}")


def check_eq(label, got, want):
    check(label, got == want, f"got {got!r}, want {want!r}")


def out_json(proc):
    return json.loads(proc.stdout)


def main():
    global CLI, DATA
    CLI, DATA = sys.argv[1], Path(sys.argv[2])

    # decide: one verdict of each kind, with the pinned certificate content.
    p = run("decide", str(DATA / "expansion_terminates.json"))
    check_eq("terminates exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("terminates verdict", doc["verdict"], "RF")
    check_eq("terminates cert", doc["certificate"]["kind"], "primitive_target")
    check_eq("terminates index", doc["certificate"]["outcome"]["terminated_index"], 1)
    check_eq("terminates bound", doc["certificate"]["outcome"]["length_bound"], "3")
    check_eq("terminates history", len(doc["certificate"]["outcome"]["history"]), 2)

    p = run("decide", str(DATA / "expansion_recurrent.json"))
    check_eq("recurrent exit", p.returncode, 1)
    doc = out_json(p)
    check_eq("recurrent verdict", doc["verdict"], "NotRF")
    check_eq("recurrent cert", doc["certificate"]["kind"], "recurrence")
    out = doc["certificate"]["outcome"]
    check_eq("recurrent pair", (out["earlier"], out["later"]), (1, 2))
    check_eq(
        "recurrent witness",
        out["witness"]["matrices"]["v"],
        [["2", "0"], ["0", "2"]],
    )

    p = run("decide", str(DATA / "subset_recurrent.json"))
    check_eq("subset exit", p.returncode, 1)
    doc = out_json(p)
    check_eq("subset cert", doc["certificate"]["kind"], "subtubular_recurrence")
    check_eq("subset edges", doc["certificate"]["edges"], ["s"])
    check_eq(
        "subset witness",
        doc["certificate"]["outcome"]["witness"]["matrices"]["v"],
        [["2", "0"], ["0", "1"]],
    )

    p = run("decide", str(DATA / "no_tuple.json"))
    check_eq("no-tuple exit", p.returncode, 1)
    doc = out_json(p)
    check_eq("no-tuple cert", doc["certificate"]["kind"], "recurrence")
    out = doc["certificate"]["outcome"]
    check_eq("no-tuple pair", (out["earlier"], out["later"]), (3, 5))

    p = run("decide", str(DATA / "no_tuple.json"), "--budget", "2")
    check_eq("no-tuple small-budget exit", p.returncode, 1)
    doc = out_json(p)
    check_eq("no-tuple reason cert", doc["certificate"]["kind"], "no_regulating_tuple")
    reason = doc["certificate"]["reason"]
    check_eq("no-tuple reason kind", reason["kind"], "non_integer_product")
    check_eq("no-tuple t-values", reason["t_sequence"]["t_values"], ["2", "4/3"])
    check_eq("no-tuple product", reason["t_sequence"]["product"], "8/3")

    p = run("decide", str(DATA / "loop_and_bridge.json"), "--budget", "5")
    check_eq("unknown exit", p.returncode, 2)
    doc = out_json(p)
    check_eq("unknown verdict", doc["verdict"], "Unknown")
    check_eq("unknown cert", doc["certificate"]["kind"], "budget_exhausted")
    check_eq("unknown tries", len(doc["certificate"]["subtubular"]), 2)

    p = run("decide", str(DATA / "loop_and_bridge.json"))
    check_eq("bridge default exit", p.returncode, 0)

    # decide --recheck: round trip every verdict kind, then a tampered witness.
    with tempfile.TemporaryDirectory() as tmp:
        for name, code in [
            ("expansion_terminates.json", 0),
            ("expansion_recurrent.json", 1),
            ("subset_recurrent.json", 1),
            ("no_tuple.json", 1),
        ]:
            verdict = out_json(run("decide", str(DATA / name)))
            vfile = Path(tmp) / ("verdict_" + name)
            vfile.write_text(json.dumps(verdict))
            p = run("decide", str(vfile), "--recheck")
            check_eq(f"recheck exit {name}", p.returncode, code)
            doc = out_json(p)
            check_eq(f"recheck status {name}", doc["recheck"], "pass")
            check(f"recheck detail {name}", "detail" not in doc, p.stdout)

        verdict = out_json(run("decide", str(DATA / "expansion_recurrent.json")))
        verdict["certificate"]["outcome"]["witness"]["matrices"]["v"][0][0] = "7"
        bad = Path(tmp) / "tampered.json"
        bad.write_text(json.dumps(verdict))
        p = run("decide", str(bad), "--recheck")
        check_eq("tampered exit", p.returncode, 3)
        doc = out_json(p)
        check_eq("tampered status", doc["recheck"], "fail")
        check("tampered detail", "witness" in doc.get("detail", ""), p.stdout)

    # expand: one nontrivial step then a fixed point, with degree report.
    p = run("expand", str(DATA / "expansion_terminates.json"), "--steps", "5")
    check_eq("expand exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("expand steps", doc["steps_applied"], 1)
    check_eq("expand primitive", doc["primitive"], True)
    check_eq("expand history", len(doc["history"]), 2)
    check("expand degrees", all(d["d"] == "1" for d in doc["degrees"]), p.stdout)
    half = json.loads((DATA / "half_lattice.json").read_text())
    check_eq(
        "expand target basis",
        doc["history"][1]["vertices"][0]["basis"],
        half["vertices"][0]["basis"],
    )

    # regulate: both outcomes, plus the single-vertex precondition.
    p = run("regulate", str(DATA / "no_tuple.json"))
    check_eq("regulate exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("regulate flag", doc["regulating"], False)
    check_eq("regulate product", doc["reason"]["t_sequence"]["product"], "8/3")

    p = run("regulate", str(DATA / "primitive_loop.json"))
    check_eq("regulate loop exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("regulate loop flag", doc["regulating"], True)
    check_eq("regulate loop tuple", doc["certificate"]["tuple"], {"t": "1"})
    check("regulate domain", "primitive_domain" in doc, p.stdout)

    p = run("regulate", str(DATA / "loop_and_bridge.json"))
    check_eq("regulate multi-vertex exit", p.returncode, 3)
    check("regulate multi-vertex message", "NotSingleVertex" in p.stderr, p.stderr)

    # witness: separating modulus document and the trivial-word short circuit.
    p = run("witness", str(DATA / "primitive_loop.json"), "--word", "t;(2,3);t^-1")
    check_eq("witness exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("witness trivial", doc["trivial"], False)
    check_eq("witness n", doc["witness"]["n"], "3")
    check_eq("witness across", doc["witness"]["backtracks"][0]["across"], "-2")
    check_eq("witness factors", doc["quotient"]["vertices"][0]["factors"], ["3", "3"])
    check_eq("witness order", doc["quotient"]["edges"][0]["order"], "3")

    p = run(
        "witness",
        str(DATA / "primitive_loop.json"),
        "--word",
        "t;(0,2);t^-1;(-2,-2)",
    )
    check_eq("witness trivial exit", p.returncode, 0)
    check_eq("witness trivial doc", out_json(p), {"trivial": True})

    p = run("witness", str(DATA / "primitive_loop.json"), "--word", "t;(1,2")
    check_eq("witness malformed exit", p.returncode, 3)
    check("witness malformed message", "MalformedWord" in p.stderr, p.stderr)

    # snowflake: construction and the decide shortcut.
    p = run("snowflake", "3", "2")
    check_eq("snowflake exit", p.returncode, 0)
    doc = out_json(p)
    check_eq("snowflake u", doc["edges"][0]["u"], ["2", "0"])
    check_eq("snowflake v", doc["edges"][1]["v"], ["3", "-1"])

    check_eq("snowflake rf", run("snowflake", "3", "2", "--decide").returncode, 0)
    check_eq("snowflake not-rf", run("snowflake", "5", "3", "--decide").returncode, 1)
    p = run("snowflake", "2", "3")
    check_eq("snowflake bad params", p.returncode, 3)
    check("snowflake bad message", "InvalidParameters" in p.stderr, p.stderr)

    # validate: clean group, violating group, parse failure.
    p = run("validate", str(DATA / "expansion_terminates.json"))
    check_eq("validate exit", p.returncode, 0)
    check_eq("validate doc", out_json(p), {"valid": True, "violations": []})

    p = run("validate", str(DATA / "zero_image.json"))
    check_eq("validate bad exit", p.returncode, 1)
    doc = out_json(p)
    check_eq("validate flag", doc["valid"], False)
    check("validate violation", any("s" in v for v in doc["violations"]), p.stdout)

    p = run("validate", str(DATA / "malformed.json"))
    check_eq("validate malformed exit", p.returncode, 3)
    check("validate malformed message", "SyntaxError" in p.stderr, p.stderr)

    # stdin via "-", and a missing file.
    group = (DATA / "primitive_loop.json").read_text()
    p = run("decide", "-", stdin=group)
    check_eq("stdin exit", p.returncode, 0)
    check_eq("stdin verdict", out_json(p)["verdict"], "RF")

    p = run("decide", str(DATA / "does_not_exist.json"))
    check_eq("missing file exit", p.returncode, 3)

    if failures:
        print(f"{len(failures)} of {checks} checks failed:")
        for f in failures:
            print("  FAIL", f)
        return 1
    print(f"all {checks} cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
