"""Build script: compiles the optional simplex pivot kernel.

The extension is a twin of fuzzydea._speedups.pure; if the toolchain is
missing the package still installs and falls back to the pure kernel.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "fuzzydea._speedups.fast",
        ["src/fuzzydea/_speedups/fast.pyx"],
        # -ffp-contract=off keeps the compiled arithmetic bit-identical to
        # the interpreted kernel (no fused multiply-add).
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    sys.stderr.write(f"warning: building without compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
