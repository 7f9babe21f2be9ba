from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "youngbraid._ckernel",
                ["src/youngbraid/_ckernel.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
                # a failed compile leaves the pure-Python kernel in charge
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
