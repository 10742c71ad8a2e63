# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # What the recurrent layer encodes
#
# Works on an evaluated run directory (see `02_training.py`). Every measure
# here reads the 64 GRU outputs recorded along the evaluation suite.

# %%
import os
from pathlib import Path

import numpy as np
import matplotlib.pyplot as plt

from shortcutnav import pipeline, store
from shortcutnav.analysis import (
    build_trajectory_sets, landmark_sensitivity, mean_local_variance, project_2d, spatial_heatmaps,
)
from shortcutnav.pipeline import RunDir

ROOT = Path.cwd().parent if Path.cwd().name == "notebooks" else Path.cwd()


def find_run():
    if os.environ.get("SHORTCUTNAV_RUN"):
        return Path(os.environ["SHORTCUTNAV_RUN"])
    cached = sorted((ROOT / "runs" / "acceptance").glob("p08_s0_2m-*/complete"))
    return cached[-1].parent if cached else ROOT / "runs" / "demo"


rd = RunDir(find_run())
config = store.load_config(rd.config)
acfg = config.analysis
ids = rd.checkpoint_ids()
last = ids[-1]
trace = pipeline.load_eval_trace(rd, last)
print(rd.root, "checkpoints", ids[0], "..", last, "rows in last trace", len(trace))

# %% [markdown]
# ## Spatial heatmaps
#
# Gaussian-weighted (sigma 15) average of a node's activation around each
# cell center of a 30 x 30 grid, then standardized over valid cells.

# %%
maps = spatial_heatmaps(trace)
lv = np.array([mean_local_variance(h, acfg.window) for h in maps])
order = np.argsort(lv)
fig, axes = plt.subplots(2, 6, figsize=(13, 4.5))
for ax, node in zip(axes.flat, np.r_[order[:6], order[-6:]]):
    h = maps[node]
    ax.imshow(np.where(h.valid, h.grid, np.nan), origin="lower", cmap="RdBu_r", vmin=-2.5, vmax=2.5)
    ax.set_title(f"node {node}  lv {lv[node]:.2f}", fontsize=8)
    ax.axis("off")
plt.suptitle("most (top) and least (bottom) spatially consistent nodes")
plt.show()

# %% [markdown]
# ## Landmark sensitivity
#
# Distance between a node's closed-shortcut and open-shortcut maps. Scores
# above the threshold mark cue-sensitive nodes.

# %%
closed = spatial_heatmaps(trace, "closed")
opened = spatial_heatmaps(trace, "open")
lm = np.array([landmark_sensitivity(c, o) for c, o in zip(closed, opened)])
plt.hist(lm, bins=20)
plt.axvline(acfg.landmark_threshold, color="r", ls="--")
plt.xlabel("landmark score")
plt.show()
cue = np.flatnonzero(lm > acfg.landmark_threshold)
print("cue-sensitive nodes:", cue.tolist())

# %% [markdown]
# ## Heatmap clusters across training
#
# k-means over every node's map at every checkpoint. Centers come in
# approximate sign-flipped pairs (the same map with inverted activation),
# which are merged when counting cluster frequencies.

# %%
analyses, tables, model = pipeline.analyze_run(config, rd.root, write=False)
print("pairs", model.pairs)
print("pair residuals", np.round(model.residuals, 2))
freq = np.array([[row[f"pair{i}"] for i in range(len(model.pairs))] for row in tables["clusters"]])
post = [a.post_steps for a in analyses]
plt.stackplot(post, freq.T)
plt.xlabel("post-onset steps")
plt.ylabel("fraction of nodes")
plt.show()

# %% [markdown]
# ## Population-level route encoding
#
# Below the long wall, positions on shortcut and long-path episodes
# overlap. The normalized matching distance between the two activation
# clouds measures how much the population encodes the intended route.

# %%
scores = tables["scores"]
fig, ax = plt.subplots(figsize=(7, 3.5))
for key in ("sep_policy", "sep_open", "sep_prescribed", "sep_cue", "sep_noncue"):
    ax.plot(post, [r[key] for r in scores], "o-", ms=3, label=key[4:])
ax.set_xlabel("post-onset steps")
ax.set_ylabel("separation score")
ax.legend()
plt.show()

sets = build_trajectory_sets(trace)
print(sets.sizes())
pts = np.vstack([sets.points("pre_entrance"), sets.points("pre_shortcut")])
proj = project_2d(pts)
n_e = sets.indices("pre_entrance").size
plt.scatter(*proj.coords[:n_e].T, s=2, color="tab:orange", label="pre-entrance")
plt.scatter(*proj.coords[n_e:].T, s=2, color="tab:green", label="pre-shortcut")
plt.legend()
plt.show()

# %% [markdown]
# ## Summary table

# %%
shown = scores[::6] if (len(scores) - 1) % 6 == 0 else scores[::6] + [scores[-1]]
for r in shown:
    print(f"ckpt {r['checkpoint']:2d}  post {r['post_steps']:8d}  closed {r.get('closed_length', np.nan):6.1f}  "
          f"use {r.get('use_rate', np.nan):.2f}  lm {r['mean_landmark']:5.2f}  sep {r['sep_policy']:.3f}")
