# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # The shortcut maze
#
# A 300 x 300 arena split by a long horizontal wall at y = 250. The agent
# starts below the wall and must reach the goal box in the top-right corner.
# The wall has a permanent gap on the far left (the entrance) and a second
# gap in the middle (the shortcut) that is open with probability p and
# otherwise closed by a purple segment.

# %%
import numpy as np
import matplotlib.pyplot as plt

from shortcutnav.maze import (
    ActionId, EnvParams, EnvPool, MazeGeometry, cast_rays, classify_path, observe_batch, ray_angles, reset, step,
)

geom = MazeGeometry()
params = EnvParams(p=0.8)
print(geom)
print(params)

# %% [markdown]
# ## Sight lines
#
# Twelve rays spread over a quarter turn, leftmost first. Each contributes a
# color code (0 white, 1 purple) and a distance scaled by the arena diagonal.

# %%
def draw_maze(ax, shortcut_open):
    ax.plot([0, 300, 300, 0, 0], [0, 0, 300, 300, 0], "k")
    (e0, e1), (s0, s1) = geom.entrance_gap, geom.shortcut_gap
    wy = geom.long_wall_y
    ax.plot([e1, s0], [wy, wy], "k")
    ax.plot([s1, 300], [wy, wy], "k")
    if not shortcut_open:
        ax.plot([s0, s1], [wy, wy], color="purple", lw=3)
    gx0, gy0, gx1, gy1 = geom.goal_box
    ax.fill([gx0, gx1, gx1, gx0], [gy0, gy0, gy1, gy1], color="0.7")
    ax.set_aspect("equal")


x, y, heading = 170.0, 150.0, np.pi / 2
fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
for ax, opened in zip(axes, (False, True)):
    draw_maze(ax, opened)
    angles = ray_angles(params, heading)[0]
    colors, dist = cast_rays(geom, np.array([[x, y]]), angles[None], np.array([opened]))
    for a, c, d in zip(angles, colors[0], dist[0]):
        ax.plot([x, x + d * np.cos(a)], [y, y + d * np.sin(a)], color="purple" if c else "0.6", lw=0.8)
    ax.plot(x, y, "y^", ms=10)
    ax.set_title("shortcut open" if opened else "shortcut closed")
plt.show()

obs = observe_batch(geom, params, [x], [y], [heading], [False])[0]
print("colors   ", obs[0::2])
print("distances", np.round(obs[1::2], 3))

# %% [markdown]
# ## A random walker
#
# Episodes end at the goal (reward 1) or after 200 steps. Under uniformly
# random actions almost every episode times out, which is why training
# starts with a long flat stretch before the first successes.

# %%
rng = np.random.default_rng(0)
lengths, labels = [], []
for _ in range(200):
    state, _ = reset(geom, params, rng)
    path = [(state.x, state.y)]
    done = False
    while not done:
        state, r, done, _ = step(geom, params, state, ActionId(rng.integers(4)))
        path.append((state.x, state.y))
    lengths.append(state.step_count)
    labels.append(classify_path(path, geom).value)
print("mean length", np.mean(lengths), " reached goal", np.mean(np.array(lengths) < 200))
print({k: labels.count(k) for k in set(labels)})

# %% [markdown]
# ## Batched environments
#
# Training steps a pool of environments together; finished episodes reset
# automatically and report their final observation separately.

# %%
pool = EnvPool(geom, params, 16, np.random.default_rng(1))
steps = 0
finished = 0
while steps < 5000:
    _, _, terminated, truncated, _ = pool.step(np.full(16, ActionId.FORWARD))
    finished += int((terminated | truncated).sum())
    steps += 16
print(f"{finished} episodes finished in {steps} always-forward steps")
