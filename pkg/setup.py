"""Build script: compiles the optional mod-q kernel extension.

The package is pure Python plus one optional Cython extension.  If Cython
or a C toolchain is missing the build falls back to the pure-Python
kernels; nothing else changes.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    return cythonize(
        [Extension("grasskit._ckernels", ["src/grasskit/_ckernels.pyx"])],
        language_level="3",
    )


class OptionalBuildExt(build_ext):
    """Tolerate a failed extension build: the pure-Python kernels take over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building the compiled kernels failed ({exc}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
