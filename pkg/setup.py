"""Build hook for the optional compiled scan kernel.

The package works without the extension: prefdomains._scan falls back to the
numpy implementation when prefdomains._scanc is absent, so the extension is
marked optional and a failed compile must not fail the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "prefdomains._scanc",
                ["src/prefdomains/_scanc.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
