"""Compare the compiled and pure-Python behavior kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from specmine import kernels
from specmine.automata import count_behaviors, enumerate_behaviors
from specmine.evalharness import flower, get_model


def _cases():
    retailer = get_model("retailer").model
    ec2 = get_model("amazon-ec2").model
    cvs = get_model("cvs").model
    return [
        ("enumerate cvs, limit 3", lambda b: enumerate_behaviors(cvs, 3, backend=b)),
        ("enumerate amazon-ec2, limit 5", lambda b: enumerate_behaviors(ec2, 5, backend=b)),
        ("count flower vs retailer, limit 4",
         lambda b: count_behaviors(flower(retailer.alphabet), 4, accepted_by=retailer, backend=b)),
        ("count cvs vs itself, limit 4", lambda b: count_behaviors(cvs, 4, accepted_by=cvs, backend=b)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled kernels not built; only the Python backend is available")
    backends = [("python", kernels.python_backend)]
    if kernels.BACKEND == "cython":
        backends.insert(0, ("cython", kernels))
    print(f"{'case':40} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, fn in _cases():
        times = []
        results = []
        for _, backend in backends:
            results.append(fn(backend))
            times.append(min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat)))
        if any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{times[-1] / times[0]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:40} " + " ".join(f"{t * 1000:8.1f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
