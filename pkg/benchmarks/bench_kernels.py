"""Compare the compiled and numpy kernel backends on capsule-network shapes.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints one line per kernel with the median time of each backend, the
speed-up, and whether the two outputs are bit-identical.
"""

import argparse
import time

import numpy as np

from capslab.kernels import available_backends


def cases(rng):
    x = rng.random((32, 1, 28, 28), dtype=np.float32)
    feat = rng.random((32, 32, 20, 20), dtype=np.float32)
    cols1 = rng.random((32, 20, 20, 1, 9, 9), dtype=np.float32)
    cols2 = rng.random((32, 6, 6, 32, 9, 9), dtype=np.float32)
    imgs = rng.random((50, 1, 28, 28), dtype=np.float32)
    theta = np.deg2rad(17.0)
    r, c = np.mgrid[0:28, 0:28].astype(np.float64) - 13.5
    rows = 13.5 + np.sin(theta) * c + np.cos(theta) * r
    colsg = 13.5 + np.cos(theta) * c - np.sin(theta) * r
    return {
        "im2col conv1 (32x1x28x28, 9x9)": lambda k: k.im2col(x, 9, 9, 1),
        "im2col primary (32x32x20x20, 9x9/2)": lambda k: k.im2col(feat, 9, 9, 2),
        "col2im conv1": lambda k: k.col2im(cols1, 28, 28, 1),
        "col2im primary": lambda k: k.col2im(cols2, 20, 20, 2),
        "median3x3 (50x28x28)": lambda k: k.median3x3(imgs),
        "max3x3 (50x28x28)": lambda k: k.max3x3(imgs),
        "bilinear_remap (50x28x28)": lambda k: k.bilinear_remap(imgs, rows, colsg, 0.0),
    }


def timeit(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only numpy timings are shown")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<38}{'numpy ms':>10}{'cython ms':>11}{'speed-up':>10}  identical")
    for name, fn in cases(rng).items():
        t_np = timeit(lambda: fn(backends["numpy"]), args.repeat)
        if "cython" in backends:
            t_cy = timeit(lambda: fn(backends["cython"]), args.repeat)
            same = np.array_equal(fn(backends["numpy"]), fn(backends["cython"]))
            print(f"{name:<38}{1e3 * t_np:>10.2f}{1e3 * t_cy:>11.2f}{t_np / t_cy:>9.2f}x  {same}")
        else:
            print(f"{name:<38}{1e3 * t_np:>10.2f}")


if __name__ == "__main__":
    main()
