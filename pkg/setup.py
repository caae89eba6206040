from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("glsw._fpcore", ["src/glsw/_fpcore.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # The compiled kernel is optional; the pure-Python fallback is used
    # whenever the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
