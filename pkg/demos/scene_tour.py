"""Build a cluttered room, drop the robot in, render what the camera sees and lift it back to 3D.

    python demos/scene_tour.py
"""
import numpy as np

from desknav import geometry as g
from desknav import simworld as sw

scene = sw.generate_scene(7, sw.SceneConfig.preset("cluttered"))
spec, mount = sw.sample_episode(scene, seed=0)
print(f"room {scene.bounds[0]:.1f} x {scene.bounds[1]:.1f} m, {scene.occupied.mean():.0%} of cells occupied")
print(f"start {spec.start}, goal {np.round(spec.goal, 2)}, camera at {mount.height:.2f} m pitched "
      f"{np.degrees(mount.pitch):.1f} deg")

# coarse map: '#' obstacle, 'S' start, 'G' goal
rows = np.full(scene.grid.shape, ".")
rows[scene.occupied] = "#"
rows[scene.cell_of(spec.start.xy)] = "S"
rows[scene.cell_of(spec.goal)] = "G"
for line in rows[::-8, ::4]:
    print("".join(line))

k = g.Intrinsics.default(32)
cam = g.camera_from_chassis(spec.start, mount)
obs = sw.render(scene, cam, k, chassis=spec.start)
depth = obs.depth.values
print(f"\ndepth image: {np.count_nonzero(depth)} of {depth.size} pixels valid, "
      f"range {depth[depth > 0].min():.2f}..{depth.max():.2f} m")

# back to the world: every valid pixel should sit on the floor or on an obstacle
cloud = g.transform_points(g.backproject(obs.depth, k), cam)
pts = cloud.points
floor = np.abs(pts[:, 2]) < 1e-3
print(f"{len(pts)} points, {floor.mean():.0%} on the floor, highest at {pts[:, 2].max():.2f} m")
