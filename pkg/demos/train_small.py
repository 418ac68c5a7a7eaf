"""End to end at toy scale: expert data, two-stage training, closed-loop evaluation.

The model here is tiny and trained for a few hundred steps, so expect it to
lose to the scripted baselines; the point is the workflow. Use the CLI with
default settings for real runs.

    python demos/train_small.py [out_dir]
"""
import sys
from pathlib import Path

from desknav.dataset import DatasetConfig, generate_dataset, load_dataset
from desknav.evaluation import EvalConfig, evaluate, make_agent
from desknav.model import ModelConfig
from desknav.training import Recipe, stage_defaults, train_recipe

out = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/demo")
data = out / "data"
if not (data / "manifest.json").exists():
    generate_dataset(DatasetConfig(scene_seeds=[1000, 1001, 1002], episodes_per_scene=4), data)
episodes = load_dataset(data)
print(f"{len(episodes)} episodes, {sum(len(e) for e in episodes)} frames")

cfg = ModelConfig.from_dict({
    "backbone": {"c_img": 16, "c_depth": 16, "c_fused": 32, "n_alt_blocks": 1, "n_heads": 2},
    "heads": {"c_in": 32, "c_h": 32},
    "policy": {"c_feat": 32, "width": 32, "n_blocks": 1, "k_steps": 20},
})


def show(row):
    if row["step"] % 100 == 0:
        print(f"  step {row['step']}: total {row['total']:.3f}")


recipe = Recipe(cfg, stage1=stage_defaults(1, steps=300), stage2=stage_defaults(2, steps=300))
model = train_recipe(recipe, episodes, out / "model", progress=show)

ec = EvalConfig(families=("cluttered",), scene_seeds=(5000, 5001), episodes_per_scene=5)
table, _ = evaluate(make_agent("learned", model), ec, label="tiny model")
print(table.render(("sr", "spl", "ne", "pe")))
