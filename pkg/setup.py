from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernels bit-compatible with the pure
# Python fallback (no FMA contraction), which the parity tests rely on.
extensions = [
    Extension(
        "shellopt._kernels._core",
        ["src/shellopt/_kernels/_core.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
