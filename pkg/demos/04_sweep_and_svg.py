"""Tracing F = cos(vx) along the XX axis, and drawing the hull picture.

This drives the same code paths as the command line

    unidisc sweep   --input cfg.json --axis vx --grid 0:0.785:33 --out sweep.csv
    unidisc analyze --input cfg.json --out report.json --svg hull.svg

but in-process, so the numbers can be checked while they stream past.
Outputs land in the current directory: sweep.csv and hull.svg.
"""

import json
import pathlib

import numpy as np

from unidisc import cli

cfgfile = pathlib.Path("demo_cfg.json")
cfgfile.write_text(json.dumps({"u2": {"interaction": [np.pi / 8, 0.0, 0.0]}}))

# fidelity curve along vx, with vy = vz = 0
rc = cli.main(["sweep", "--input", str(cfgfile), "--axis", "vx",
               "--grid", f"0:{np.pi / 4}:33", "--out", "sweep.csv"])
assert rc == 0
rows = pathlib.Path("sweep.csv").read_text().strip().split("\n")
print("vx/pi     F(sweep)        cos(vx)")
for line in rows[1::8]:
    cells = line.split(",")
    vx = float(cells[0])
    print(f"{vx / np.pi:.4f}    {float(cells[1]):.10f}    {np.cos(vx):.10f}")
print()
print("product inputs match entangled ones along the whole axis: the local")
print("column of sweep.csv is identical to the global one.")
print()

# hull picture for the pi/8 point: spectrum dots A-D, chord midpoints P-S,
# both hulls, and the distance segments from the origin
rc = cli.main(["analyze", "--input", str(cfgfile), "--out", "report.json", "--svg", "hull.svg"])
assert rc == 0
rep = json.loads(pathlib.Path("report.json").read_text())
print(f"report: F = {rep['fidelity_global']:.10f}, needs {rep['min_repetitions']} uses for perfect")
print(f"hull.svg written ({pathlib.Path('hull.svg').stat().st_size} bytes)")
cfgfile.unlink()
