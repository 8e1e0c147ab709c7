# %% [markdown]
# # Running time on random interval graphs
#
# Median of five graphs per size, kernels compiled beforehand.

# %%
import statistics
import time

from intervalham import classify, scattering_number
from intervalham.generators import gen_random

warm, _ = gen_random(5000, 4.0, seed=0, connected=True)
classify(warm, scattering_number(warm))

# %%
prev = None
for n in (50_000, 100_000, 200_000, 400_000):
    times = []
    for seed in range(5):
        g, _ = gen_random(n, 4.0, seed=seed, connected=True)
        t0 = time.perf_counter()
        classify(g, scattering_number(g))
        times.append(time.perf_counter() - t0)
    med = statistics.median(times)
    ratio = "" if prev is None else f"x{med / prev:.2f}"
    print(f"n={n:>7} m={g.m:>8} median {med:.3f}s {ratio}")
    prev = med

# %% [markdown]
# Doubling n slightly more than doubles the time.  The excess is memory
# traffic: random vertex ids scatter neighbours across the arrays.  On the
# same graphs renumbered by interval start the ratio sits near 2.1.

# %%
import numpy as np

from intervalham import Graph

for n in (100_000, 200_000, 400_000):
    g, iv = gen_random(n, 4.0, seed=1, connected=True)
    rank = np.empty(g.n, dtype=np.int64)
    rank[np.argsort([a for a, _ in iv], kind="stable")] = np.arange(g.n)
    h = Graph.from_edges(g.n, [(int(rank[u]), int(rank[v])) for u, v in g.edges()])
    t0 = time.perf_counter()
    classify(h, scattering_number(h))
    print(f"n={n:>7} renumbered {time.perf_counter() - t0:.3f}s")
