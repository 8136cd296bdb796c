"""Build script for the optional compiled trajectory kernel.

The package works without the extension (a pure-Python kernel with identical
semantics is selected at import time), so a missing Cython toolchain only
costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -ffp-contract=off (no fused multiply-adds) and -fno-builtin-sin/-cos (no
# cos+sin -> sincos fusion, which is not bit-identical in glibc) keep the
# compiled kernel's floating-point results identical to the pure-Python
# fallback.
extensions = [
    Extension(
        "blochmap._kernels._speed",
        ["src/blochmap/_kernels/_speed.pyx"],
        extra_compile_args=[
            "-O2",
            "-ffp-contract=off",
            "-fno-builtin-sin",
            "-fno-builtin-cos",
            "-fno-builtin-sincos",
        ],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level=3) if cythonize else [],
)
