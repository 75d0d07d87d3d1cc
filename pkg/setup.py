from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# term kernel when the extension is missing (see intshuffle._kernel).
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("intshuffle._terms_cy", ["src/intshuffle/_terms_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
