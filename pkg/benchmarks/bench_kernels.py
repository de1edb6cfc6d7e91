"""Compare the compiled subset-DP kernel against the pure-Python fallback.

Run directly:  python benchmarks/bench_kernels.py [max_n]

The fallback is loaded as a second module instance with MORALTRI_NO_NUMBA
set, so both variants run in one process.
"""

import importlib.util
import os
import random
import sys
import time


def random_graph(n, p, seed):
    from moraltri import UndirectedGraph
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    edges = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]
             if rng.random() < p]
    return UndirectedGraph(names, edges)


def run(kernels, g, objective):
    masks = kernels.adjacency_masks(g)
    start = time.perf_counter()
    dp, _ = kernels.subset_dp(masks, len(g), kernels.MODE_NONE, 0, objective)
    return time.perf_counter() - start, int(dp[(1 << len(g)) - 1])


def load_fallback():
    """Fresh instance of the kernel module with the compiled path disabled."""
    import moraltri._kernels as k
    spec = importlib.util.spec_from_file_location("_kernels_fallback", k.__file__)
    mod = importlib.util.module_from_spec(spec)
    os.environ["MORALTRI_NO_NUMBA"] = "1"
    try:
        spec.loader.exec_module(mod)
    finally:
        os.environ.pop("MORALTRI_NO_NUMBA")
    return mod


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    sizes = range(10, max_n + 1, 2)
    fallback = load_fallback()
    import moraltri._kernels as compiled
    if not compiled.NUMBA_ENABLED:
        print("numba unavailable; benchmarking the fallback against itself")

    print(f"{'n':>3} {'objective':>9} {'numba(s)':>10} {'python(s)':>10} "
          f"{'speedup':>8}  value")
    for n in sizes:
        g = random_graph(n, 0.3, seed=n)
        for name, obj in (("fill", compiled.OBJ_SUM), ("width", compiled.OBJ_MAX)):
            t_jit, v_jit = run(compiled, g, obj)
            if name == "fill":  # warm-up pass hides compile time
                t_jit, v_jit = run(compiled, g, obj)
            t_py, v_py = run(fallback, g, obj)
            assert v_jit == v_py, (n, name, v_jit, v_py)
            print(f"{n:>3} {name:>9} {t_jit:>10.4f} {t_py:>10.4f} "
                  f"{t_py / t_jit:>8.1f}  {v_jit}")


if __name__ == "__main__":
    main()
