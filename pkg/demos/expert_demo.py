"""Plan with the expert, replay its per-step deltas in the simulator and cut them into action chunks.

    python demos/expert_demo.py
"""
import numpy as np

from desknav import expert as ex
from desknav import simworld as sw
from desknav.geometry import Pose2

scene = sw.generate_scene(11, sw.SceneConfig.preset("cluttered"))
spec, mount = sw.sample_episode(scene, seed=1)

grid_path = ex.astar(scene, spec.start.xy, spec.goal)
short = ex.shortcut(scene, grid_path)
traj, deltas = ex.plan_expert(scene, spec.start, spec.goal)
print(f"A* path {ex.path_length(grid_path):.2f} m over {len(grid_path.waypoints)} cells, "
      f"{len(short.waypoints)} waypoints after shortcutting")
print(f"spline {len(traj.samples)} samples, {len(deltas)} control steps")

state = sw.spawn(scene, spec.start, mount=mount)
for d in deltas:
    state, hit = sw.step(state, d, scene)
    assert not hit
print(f"replay ends {np.linalg.norm(state.pose.xy - spec.goal):.3f} m from the goal")

chunks = ex.expert_chunks(traj, horizon=8, start=spec.start)
print("first chunk (dx, dy, dtheta per step):")
print(np.round(chunks[0], 3))

# the same start with a wider berth around obstacles; narrow gaps can close entirely
for margin in (0.05, 0.15):
    try:
        wide, _ = ex.plan_expert(scene, spec.start, spec.goal, margin=margin)
        print(f"margin {margin:.2f} m: path {ex.path_length(wide.samples[:, :2]):.2f} m "
              f"vs {ex.path_length(traj.samples[:, :2]):.2f} m without")
    except ex.NoPath:
        print(f"margin {margin:.2f} m: no path")
