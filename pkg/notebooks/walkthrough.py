# %% [markdown]
# # From a graph to a Hamilton path
#
# The diamond: a and d are joined through the edge bc.

# %%
from intervalham import Graph, build_model, classify, hamilton_path_between, min_path_cover, scattering_number, sweep
from intervalham.hamiltonicity import hamilton_cycle, hamilton_path, verify_certificate
from intervalham.oracle import oracle_max_stave

g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], labels="abcd")
name = lambda seq: " ".join(g.labels[v] for v in seq)  # noqa: E731

# %% [markdown]
# Two cliques, abc then bcd.  u1 and un are the private ends.

# %%
model = build_model(g)
print("cliques:", [name(sorted(model.clique(j))) for j in range(1, model.s + 1)])
print("u1 =", g.labels[model.u1], " un =", g.labels[model.un])

# %%
stave, trace = sweep(model)
print("p* =", stave.p)
for path in stave.paths:
    print("  ", name(path))
print("brute force a-d:", oracle_max_stave(g, 0, 3), " b-c:", oracle_max_stave(g, 1, 2))

# %% [markdown]
# Removing b and c leaves two pieces, so sc = 2 - 2 = 0.

# %%
r = scattering_number(g)
print("sc =", r.value, " witness:", name(sorted(r.witness.S)))
print(classify(g, r))

# %%
cycle = hamilton_cycle(g, r)
print("cycle:", name(cycle.vertices), verify_certificate(g, cycle) or "ok")
print("path:", name(hamilton_path(g, r).vertices))
# sc = 0 is the undecided band for fixed ends
print("b to c:", hamilton_path_between(g, 1, 2, r))

# %% [markdown]
# A claw needs two paths.

# %%
claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)], labels="cxyz")
print("sc(claw) =", scattering_number(claw).value, " cover:", min_path_cover(claw).paths)
