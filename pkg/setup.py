from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -ffp-contract=off keeps the C arithmetic bit-identical to the numpy
# fallback (no fused multiply-add); the kernel parity tests rely on it.
extensions = [
    Extension(
        "taiji._kernels",
        ["src/taiji/_kernels.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions, compiler_directives={"language_level": "3"}
    )
else:
    # No Cython: install pure-Python only, taiji.kernels falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
