"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 50]

Prints median wall time per call in microseconds and the largest absolute
difference between the two backends' outputs.
"""
import argparse
import timeit

import numpy as np

from lisht_lab.kernels import _numpy_kernels as py

try:
    from lisht_lab.kernels import _ckernels as cc
except ImportError:
    cc = None


def cases(rng):
    x = rng.normal(size=(32, 16, 14, 14))
    cols = py.im2col(x, 3, 3, 1, 1)
    gamma, beta = rng.normal(size=16), rng.normal(size=16)
    y, xhat, _, _, inv_std = py.bn_forward(x, gamma, beta, 1e-5)
    dy = rng.normal(size=x.shape)
    z = rng.normal(size=2048)
    return {
        "im2col 32x16x14x14 k3": lambda k: k.im2col(x, 3, 3, 1, 1),
        "col2im 32x16x14x14 k3": lambda k: k.col2im(cols, *x.shape, 3, 3, 1, 1),
        "bn_forward 32x16x14x14": lambda k: k.bn_forward(x, gamma, beta, 1e-5)[0],
        "bn_backward 32x16x14x14": lambda k: k.bn_backward(dy, xhat, gamma, inv_std, True)[0],
        "lisht_forward 2048": lambda k: k.lisht_forward(z),
        "lisht_backward 2048": lambda k: k.lisht_backward(z, z),
    }


def median_us(fn, repeat):
    t = timeit.repeat(fn, number=1, repeat=repeat)
    return 1e6 * float(np.median(t))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=50)
    args = ap.parse_args()
    if cc is None:
        print("compiled backend not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'kernel':<26}{'numpy us':>12}{'compiled us':>14}{'speedup':>10}{'max |diff|':>13}")
    for name, call in cases(np.random.default_rng(0)).items():
        tp = median_us(lambda: call(py), args.repeat)
        tc = median_us(lambda: call(cc), args.repeat)
        diff = float(np.max(np.abs(np.asarray(call(py)) - np.asarray(call(cc)))))
        print(f"{name:<26}{tp:>12.1f}{tc:>14.1f}{tp / tc:>10.2f}{diff:>13.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
