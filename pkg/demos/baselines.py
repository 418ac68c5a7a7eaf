"""Closed-loop scores of the scripted policies on a small slice of the benchmark.

    python demos/baselines.py
"""
from desknav.evaluation import EvalConfig, MetricsTable, evaluate, make_agent, summarize

cfg = EvalConfig(scene_seeds=(5000, 5001, 5002), episodes_per_scene=5)
table = MetricsTable()
for name in ("expert", "straightline", "random"):
    _, results = evaluate(make_agent(name), cfg)
    for fam in cfg.families:
        table.add(name, fam, summarize([r for r in results if r.family == fam]))
print(table.render(("sr", "spl", "ne")))
