from setuptools import Extension, setup

# The Viterbi kernel compiles to a C extension when Cython is available.
# The package works without it (pure-Python fallback selected at import).
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "thatsort.dt_tagger._viterbi_c",
                ["src/thatsort/dt_tagger/_viterbi_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
