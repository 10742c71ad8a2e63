# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Training an agent
#
# Recurrent PPO over 16 parallel mazes. Steps are counted from the learning
# onset (first time the 100-episode mean length falls below 180) and 36
# checkpoints are frozen on a quadratic schedule after it, plus checkpoint 0
# at the onset itself.
#
# Set `SHORTCUTNAV_RUN` to an existing run directory to skip training. By
# default the desk-scale acceptance run is reused when present; otherwise a
# short demo run (2e5 post-onset steps, a few minutes) is trained.

# %%
import os
from dataclasses import replace
from pathlib import Path

import numpy as np
import matplotlib.pyplot as plt

from shortcutnav import pipeline, store
from shortcutnav.config import RunConfig
from shortcutnav.pipeline import RunDir
from shortcutnav.ppo import checkpoint_schedule

ROOT = Path.cwd().parent if Path.cwd().name == "notebooks" else Path.cwd()


def find_run():
    if os.environ.get("SHORTCUTNAV_RUN"):
        return Path(os.environ["SHORTCUTNAV_RUN"])
    cached = sorted((ROOT / "runs" / "acceptance").glob("p08_s0_2m-*/complete"))
    if cached:
        return cached[-1].parent
    return ROOT / "runs" / "demo"


run = find_run()
if not (run / "config.ini").exists():
    base = RunConfig()
    config = replace(base, env=replace(base.env, p=0.8), ppo=replace(base.ppo, total_post_steps=200_000),
                     out_dir=str(run))
    result = pipeline.run_train(config, run)
    pipeline.run_eval_all(config, run)
    pipeline.run_prescribe(config, run)
rd = RunDir(run)
config = store.load_config(rd.config)
print(run)
print(config.ppo)

# %% [markdown]
# ## Learning curve
#
# Long flat stretch at 200 (random behaviour), then a sharp drop once the
# first goal visits are reinforced.

# %%
curve = store.load_curve(rd.curve)
steps = np.array(curve.steps)
rm = curve.rolling_mean(config.schedule.onset_window)
onset_idx = curve.onset_index(config.schedule.onset_window, config.schedule.onset_threshold)
fig, ax = plt.subplots(figsize=(7, 3.5))
ax.plot(steps, curve.lengths, ".", ms=1, alpha=0.2, color="0.5")
ax.plot(steps, rm, "k")
if onset_idx is not None:
    ax.axvline(steps[onset_idx], color="r", ls="--")
ax.set_xlabel("environment steps")
ax.set_ylabel("episode length")
plt.show()

# %% [markdown]
# ## Checkpoint schedule
#
# Targets are `round(T (i/36)^2)`; a checkpoint is frozen at the first
# update boundary at or past its target, so real post-onset counts overshoot
# by less than one rollout (16 x 128 steps).

# %%
index = store.read_table(rd.checkpoint_index, "checkpoint_index")
post = np.array([int(r["post_steps"]) for r in index])
sched = np.array([int(r["scheduled_post_steps"]) for r in index])
print("first targets", checkpoint_schedule(config.ppo.total_post_steps)[:6])
print("max overshoot", int((post - sched)[1:].max()))

# %% [markdown]
# ## Performance on the fixed evaluation suite
#
# 50 start poses, each run with the shortcut open and closed. Closed-mode
# length tracks how well the long route is learned; the shortcut use rate
# counts open-mode episodes entering the corridor through the shortcut gap.

# %%
perf = store.read_table(rd.performance, "performance")
x = np.array([float(r["post_steps"]) for r in perf])
fig, (a1, a2) = plt.subplots(1, 2, figsize=(10, 3.5))
a1.plot(x, [float(r["closed_length"]) for r in perf], "o-", label="closed")
a1.plot(x, [float(r["open_length"]) for r in perf], "o-", label="open")
a1.set_xlabel("post-onset steps")
a1.set_ylabel("mean episode length")
a1.legend()
a2.plot(x, [float(r["use_rate"]) for r in perf], "o-")
a2.set_xlabel("post-onset steps")
a2.set_ylabel("shortcut use rate")
a2.set_ylim(0, 1)
plt.tight_layout()
plt.show()
print(perf[-1])

# %% [markdown]
# ## Optimisation diagnostics

# %%
stats = store.read_table(rd.stats, "train_stats")
t = np.array([float(s["total_steps"]) for s in stats])
fig, axes = plt.subplots(1, 3, figsize=(12, 3))
for ax, key in zip(axes, ("entropy", "approx_kl", "value_loss")):
    ax.plot(t, [float(s[key]) for s in stats], lw=0.6)
    ax.set_title(key)
plt.tight_layout()
plt.show()
