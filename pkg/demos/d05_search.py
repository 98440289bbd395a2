"""
Random walks through flag 3-spheres
===================================

Subdivide random edges, then contract random contractible edges. Every
step is checked to still be a flag 3-sphere. Finals that are irreducible
on 13 to 16 vertices are saved and certified again from disk.
"""

import sys
import tempfile

from flagsphere.constructions import diamond
from flagsphere.search import WalkConfig, harvest, random_walk

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 1000

w = random_walk(diamond(4), WalkConfig(seed=19, n_subdivisions=40, n_contractions=100, max_vertices=64))
print(len(w.log), "moves, final f =", w.log.moves[-1].f)
print("irreducible:", w.report.question_1_5)

with tempfile.TemporaryDirectory() as out:
    cfg = WalkConfig(seed=0, n_subdivisions=40, n_contractions=100, max_vertices=64)
    res = harvest(diamond(4), cfg, total_steps=steps, out_dir=out)
    print(res.walks, "walks,", res.steps, "moves")
    for f in res.finds:
        print("  seed", f["seed"], f["n_vertices"], "vertices, recertified:", f["recertified"])
