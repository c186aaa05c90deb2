"""
Batch runs through the esu command line
=======================================

The CLI reads one JSON config and writes JSON or CSV.  A sweep over the
cosmological constant shows the solution set switching from empty to
infinite.
"""
import json
import sys
import tempfile
from pathlib import Path

from esu.cli import main

work = Path(tempfile.mkdtemp())
config = {
    "params": {"a": 1.0, "Lambda": 0.0, "m": 1.0, "xi": 0.0, "kappa": 1.0},
    "sweep": {"axes": {"Lambda": {"start": 0.0, "stop": 3.0, "count": 13}}},
}
cfg = work / "sweep.json"
cfg.write_text(json.dumps(config))

# %% Classification along the sweep, as CSV.
out = work / "sweep.csv"
code = main(["sweep", "--config", str(cfg), "--format", "csv", "--out", str(out)])
print("exit code", code)
print(out.read_text())

# %% A single target evaluation, as JSON on stdout.
main(["targets", "--config", str(cfg)])
sys.stdout.flush()

# %% Errors are reported with a non-zero exit code and JSON on stderr.
bad = work / "bad.json"
bad.write_text(json.dumps({"params": dict(config["params"], a=-1.0)}))
print("exit code", main(["targets", "--config", str(bad)]))
